//! Componentwise product of two monoidal categories.

use crate::kernel::{KernelError, Monoidal, MonoidalInstance, Mor, MorData, Obj, StructureKind};

#[derive(Debug, Clone)]
pub struct Product {
    pub left: MonoidalInstance,
    pub right: MonoidalInstance,
}

pub fn split_obj(x: &Obj) -> (&Obj, &Obj) {
    match x {
        Obj::Pair(a, b) => (a, b),
        other => panic!("expected a pair object, got {other}"),
    }
}

pub fn split_mor(f: &Mor) -> (&Mor, &Mor) {
    match &f.data {
        MorData::Pair(a, b) => (a, b),
        other => panic!("expected a pair morphism, got {other:?}"),
    }
}

pub fn pair_mor(a: Mor, b: Mor) -> Mor {
    Mor {
        src: Obj::pair(a.src.clone(), b.src.clone()),
        dst: Obj::pair(a.dst.clone(), b.dst.clone()),
        data: MorData::Pair(Box::new(a), Box::new(b)),
    }
}

impl Product {
    fn split_all(objs: &[Obj]) -> (Vec<Obj>, Vec<Obj>) {
        objs.iter().map(|o| {
            let (a, b) = split_obj(o);
            (a.clone(), b.clone())
        }).unzip()
    }
}

impl Monoidal for Product {
    fn name(&self) -> String {
        format!("product({}, {})", self.left.name(), self.right.name())
    }

    fn unit(&self) -> Obj {
        Obj::pair(self.left.unit(), self.right.unit())
    }

    fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj {
        let ((x1, x2), (y1, y2)) = (split_obj(x), split_obj(y));
        Obj::pair(self.left.tensor_obj(x1, y1), self.right.tensor_obj(x2, y2))
    }

    fn identity(&self, x: &Obj) -> Mor {
        let (a, b) = split_obj(x);
        pair_mor(self.left.id(a), self.right.id(b))
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Mor {
        let ((f1, f2), (g1, g2)) = (split_mor(f), split_mor(g));
        pair_mor(self.left.raw().compose(f1, g1), self.right.raw().compose(f2, g2))
    }

    fn tensor(&self, f: &Mor, g: &Mor) -> Mor {
        let ((f1, f2), (g1, g2)) = (split_mor(f), split_mor(g));
        pair_mor(self.left.tensor_mor(f1, g1), self.right.tensor_mor(f2, g2))
    }

    fn structure(&self, kind: StructureKind, objs: &[Obj]) -> Mor {
        let (l, r) = Self::split_all(objs);
        pair_mor(self.left.raw().structure(kind, &l), self.right.raw().structure(kind, &r))
    }

    fn coequalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        let ((f1, f2), (g1, g2)) = (split_mor(f), split_mor(g));
        let (a1, p1) = self.left.raw().coequalize(f1, g1)?;
        let (a2, p2) = self.right.raw().coequalize(f2, g2)?;
        Ok((Obj::pair(a1, a2), pair_mor(p1, p2)))
    }

    fn coinduce(&self, projection: &Mor, h: &Mor) -> Mor {
        let ((p1, p2), (h1, h2)) = (split_mor(projection), split_mor(h));
        pair_mor(self.left.raw().coinduce(p1, h1), self.right.raw().coinduce(p2, h2))
    }

    fn equalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        let ((f1, f2), (g1, g2)) = (split_mor(f), split_mor(g));
        let (a1, i1) = self.left.raw().equalize(f1, g1)?;
        let (a2, i2) = self.right.raw().equalize(f2, g2)?;
        Ok((Obj::pair(a1, a2), pair_mor(i1, i2)))
    }

    fn induce(&self, inclusion: &Mor, h: &Mor) -> Option<Mor> {
        let ((i1, i2), (h1, h2)) = (split_mor(inclusion), split_mor(h));
        Some(pair_mor(self.left.raw().induce(i1, h1)?, self.right.raw().induce(i2, h2)?))
    }

    fn is_epi(&self, f: &Mor) -> bool {
        let (a, b) = split_mor(f);
        self.left.is_epi(a) && self.right.is_epi(b)
    }

    fn is_mono(&self, f: &Mor) -> bool {
        let (a, b) = split_mor(f);
        self.left.is_mono(a) && self.right.is_mono(b)
    }

    fn inverse(&self, f: &Mor) -> Option<Mor> {
        let (a, b) = split_mor(f);
        Some(pair_mor(self.left.inverse(a)?, self.right.inverse(b)?))
    }

    fn objects(&self, max_size: usize) -> Vec<Obj> {
        let rs = self.right.objects(max_size);
        self.left
            .objects(max_size)
            .into_iter()
            .flat_map(|a| rs.iter().map(move |b| Obj::pair(a.clone(), b.clone())))
            .collect()
    }

    fn hom_size(&self, x: &Obj, y: &Obj) -> u64 {
        let ((x1, x2), (y1, y2)) = (split_obj(x), split_obj(y));
        self.left.hom_size(x1, y1).saturating_mul(self.right.hom_size(x2, y2))
    }

    fn hom(&self, x: &Obj, y: &Obj) -> Vec<Mor> {
        let ((x1, x2), (y1, y2)) = (split_obj(x), split_obj(y));
        let rs = self.right.hom(x2, y2);
        self.left
            .hom(x1, y1)
            .into_iter()
            .flat_map(|a| rs.iter().map(move |b| pair_mor(a.clone(), b.clone())))
            .collect()
    }

    fn well_formed(&self, f: &Mor) -> bool {
        match (&f.src, &f.dst, &f.data) {
            (Obj::Pair(s1, s2), Obj::Pair(d1, d2), MorData::Pair(a, b)) => {
                a.src == **s1
                    && a.dst == **d1
                    && b.src == **s2
                    && b.dst == **d2
                    && self.left.well_formed(a)
                    && self.right.well_formed(b)
            }
            _ => false,
        }
    }

    fn size(&self, x: &Obj) -> usize {
        let (a, b) = split_obj(x);
        self.left.size(a).max(self.right.size(b))
    }
}
