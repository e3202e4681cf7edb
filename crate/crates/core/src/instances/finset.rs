//! Finite sets under disjoint union.
//!
//! The set `Set(n)` has elements `0..n`. The disjoint union `X ⊔ Y` lists the
//! elements of `X` first, then those of `Y` shifted by `|X|`, so the
//! associator and unitors are identity tables.

use crate::kernel::{KernelError, Monoidal, Mor, MorData, Obj, StructureKind};

/// A function between finite sets given by its table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinFunction {
    pub src: usize,
    pub dst: usize,
    pub table: Vec<usize>,
}

impl FinFunction {
    pub fn new(src: usize, dst: usize, table: Vec<usize>) -> Option<Self> {
        (table.len() == src && table.iter().all(|&t| t < dst)).then_some(FinFunction { src, dst, table })
    }

    pub fn into_mor(self) -> Mor {
        Mor { src: Obj::Set(self.src), dst: Obj::Set(self.dst), data: MorData::Func(self.table) }
    }
}

/// Shorthand for a function morphism; panics on malformed tables.
pub fn func(src: usize, dst: usize, table: Vec<usize>) -> Mor {
    FinFunction::new(src, dst, table).expect("malformed function table").into_mor()
}

pub fn table(f: &Mor) -> &[usize] {
    match &f.data {
        MorData::Func(t) => t,
        other => panic!("expected a function table, got {other:?}"),
    }
}

pub fn card(x: &Obj) -> usize {
    match x {
        Obj::Set(n) => *n,
        other => panic!("expected a finite set, got {other}"),
    }
}

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Unions keep the smaller element as root, so roots are class minima.
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }

    /// Class index of each element, classes numbered by increasing minimum.
    pub fn labels(&mut self) -> (usize, Vec<usize>) {
        let n = self.parent.len();
        let mut index = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut count = 0;
        for x in 0..n {
            let r = self.find(x);
            if index[r] == usize::MAX {
                index[r] = count;
                count += 1;
            }
            out[x] = index[r];
        }
        (count, out)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct FinSetDisjoint;

impl Monoidal for FinSetDisjoint {
    fn name(&self) -> String {
        "finset_disjoint".into()
    }

    fn unit(&self) -> Obj {
        Obj::Set(0)
    }

    fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj {
        Obj::Set(card(x) + card(y))
    }

    fn identity(&self, x: &Obj) -> Mor {
        let n = card(x);
        func(n, n, (0..n).collect())
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Mor {
        let gt = table(g);
        let t = table(f).iter().map(|&i| gt[i]).collect();
        Mor { src: f.src.clone(), dst: g.dst.clone(), data: MorData::Func(t) }
    }

    fn tensor(&self, f: &Mor, g: &Mor) -> Mor {
        let shift = card(&f.dst);
        let mut t = table(f).to_vec();
        t.extend(table(g).iter().map(|&j| j + shift));
        Mor {
            src: self.tensor_obj(&f.src, &g.src),
            dst: self.tensor_obj(&f.dst, &g.dst),
            data: MorData::Func(t),
        }
    }

    fn structure(&self, kind: StructureKind, objs: &[Obj]) -> Mor {
        let n: usize = objs.iter().map(card).sum();
        let _ = kind;
        func(n, n, (0..n).collect())
    }

    fn coequalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        let mut uf = UnionFind::new(card(&f.dst));
        for (&a, &b) in table(f).iter().zip(table(g)) {
            uf.union(a, b);
        }
        let (k, labels) = uf.labels();
        Ok((Obj::Set(k), func(card(&f.dst), k, labels)))
    }

    fn coinduce(&self, projection: &Mor, h: &Mor) -> Mor {
        let k = card(&projection.dst);
        let pt = table(projection);
        let ht = table(h);
        let t = (0..k)
            .map(|c| pt.iter().position(|&q| q == c).map(|y| ht[y]).unwrap_or(0))
            .collect();
        Mor { src: projection.dst.clone(), dst: h.dst.clone(), data: MorData::Func(t) }
    }

    fn equalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        let keep: Vec<usize> =
            (0..card(&f.src)).filter(|&x| table(f)[x] == table(g)[x]).collect();
        let k = keep.len();
        Ok((Obj::Set(k), func(k, card(&f.src), keep)))
    }

    fn induce(&self, inclusion: &Mor, h: &Mor) -> Option<Mor> {
        let it = table(inclusion);
        let t: Option<Vec<usize>> = table(h).iter().map(|y| it.iter().position(|x| x == y)).collect();
        Some(Mor { src: h.src.clone(), dst: inclusion.src.clone(), data: MorData::Func(t?) })
    }

    fn is_epi(&self, f: &Mor) -> bool {
        let mut hit = vec![false; card(&f.dst)];
        for &y in table(f) {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }

    fn is_mono(&self, f: &Mor) -> bool {
        let mut hit = vec![false; card(&f.dst)];
        for &y in table(f) {
            if hit[y] {
                return false;
            }
            hit[y] = true;
        }
        true
    }

    fn inverse(&self, f: &Mor) -> Option<Mor> {
        let n = card(&f.src);
        if n != card(&f.dst) || !self.is_mono(f) {
            return None;
        }
        let mut t = vec![0; n];
        for (x, &y) in table(f).iter().enumerate() {
            t[y] = x;
        }
        Some(func(n, n, t))
    }

    fn objects(&self, max_size: usize) -> Vec<Obj> {
        (0..=max_size).map(Obj::Set).collect()
    }

    fn hom_size(&self, x: &Obj, y: &Obj) -> u64 {
        (card(y) as u64).saturating_pow(card(x) as u32)
    }

    fn hom(&self, x: &Obj, y: &Obj) -> Vec<Mor> {
        let (n, m) = (card(x), card(y));
        if m == 0 {
            return if n == 0 { vec![func(0, 0, vec![])] } else { vec![] };
        }
        let total = m.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let mut t = vec![0; n];
                for slot in t.iter_mut() {
                    *slot = code % m;
                    code /= m;
                }
                func(n, m, t)
            })
            .collect()
    }

    fn well_formed(&self, f: &Mor) -> bool {
        match (&f.src, &f.dst, &f.data) {
            (Obj::Set(n), Obj::Set(m), MorData::Func(t)) => t.len() == *n && t.iter().all(|y| y < m),
            _ => false,
        }
    }

    fn size(&self, x: &Obj) -> usize {
        card(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_labels_by_minimum() {
        let mut uf = UnionFind::new(4);
        uf.union(3, 1);
        let (k, l) = uf.labels();
        assert_eq!(k, 3);
        assert_eq!(l, vec![0, 1, 2, 1]);
    }

    #[test]
    fn hom_counts() {
        let c = FinSetDisjoint;
        assert_eq!(c.hom(&Obj::Set(2), &Obj::Set(3)).len(), 9);
        assert_eq!(c.hom(&Obj::Set(0), &Obj::Set(0)).len(), 1);
        assert_eq!(c.hom(&Obj::Set(1), &Obj::Set(0)).len(), 0);
    }
}
