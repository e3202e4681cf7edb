//! Finite-dimensional vector spaces over F_p under the tensor product.
//!
//! Objects are dimensions. `e_i ⊗ f_j` is basis vector `i * dim(Y) + j` of
//! `X ⊗ Y`, which makes the associator and unitors identity matrices.

use crate::kernel::{KernelError, Monoidal, Mor, MorData, Obj, StructureKind};
use crate::linalg::{is_prime, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinVect {
    pub p: u32,
}

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
#[error("{0} is not a prime below 2^31")]
pub struct NotPrime(pub u64);

impl FinVect {
    pub fn new(p: u64) -> Result<Self, NotPrime> {
        if p > (1 << 31) || !is_prime(p) {
            return Err(NotPrime(p));
        }
        Ok(FinVect { p: p as u32 })
    }

    /// Wraps a matrix `rows x cols` as a morphism `Vect(cols) -> Vect(rows)`.
    pub fn mor(&self, m: Matrix) -> Mor {
        Mor { src: Obj::Vect(m.cols), dst: Obj::Vect(m.rows), data: MorData::Mat(m) }
    }

    pub fn from_rows(&self, rows: usize, cols: usize, entries: Vec<i64>) -> Mor {
        self.mor(Matrix::from_rows(self.p, rows, cols, entries))
    }
}

pub fn matrix(f: &Mor) -> &Matrix {
    match &f.data {
        MorData::Mat(m) => m,
        other => panic!("expected a matrix, got {other:?}"),
    }
}

pub fn dim(x: &Obj) -> usize {
    match x {
        Obj::Vect(n) => *n,
        other => panic!("expected a vector space, got {other}"),
    }
}

impl Monoidal for FinVect {
    fn name(&self) -> String {
        format!("finvect({})", self.p)
    }

    fn unit(&self) -> Obj {
        Obj::Vect(1)
    }

    fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj {
        Obj::Vect(dim(x) * dim(y))
    }

    fn identity(&self, x: &Obj) -> Mor {
        self.mor(Matrix::identity(self.p, dim(x)))
    }

    fn compose(&self, f: &Mor, g: &Mor) -> Mor {
        self.mor(matrix(g).mul(matrix(f)))
    }

    fn tensor(&self, f: &Mor, g: &Mor) -> Mor {
        self.mor(matrix(f).kron(matrix(g)))
    }

    fn structure(&self, _kind: StructureKind, objs: &[Obj]) -> Mor {
        let n: usize = objs.iter().map(dim).product();
        self.mor(Matrix::identity(self.p, n))
    }

    fn coequalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        let p = self.p;
        let d = matrix(f).sub(matrix(g));
        // Rows of the reduced transpose span the image of f - g.
        let (red, pivots) = d.transpose().rref();
        let n = dim(&f.dst);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut pi = Matrix::zero(p, free.len(), n);
        for (k, &j) in free.iter().enumerate() {
            pi.set(k, j, 1);
        }
        for (i, &pc) in pivots.iter().enumerate() {
            for (k, &j) in free.iter().enumerate() {
                let v = red.get(i, j);
                pi.set(k, pc, (p - v) % p);
            }
        }
        Ok((Obj::Vect(free.len()), self.mor(pi)))
    }

    fn coinduce(&self, projection: &Mor, h: &Mor) -> Mor {
        let pi = matrix(projection);
        let hm = matrix(h);
        let mut u = Matrix::zero(self.p, hm.rows, pi.rows);
        for k in 0..pi.rows {
            let unit_col = (0..pi.cols).find(|&j| (0..pi.rows).all(|r| pi.get(r, j) == u32::from(r == k)));
            if let Some(j) = unit_col {
                for r in 0..hm.rows {
                    u.set(r, k, hm.get(r, j));
                }
            }
        }
        self.mor(u)
    }

    fn equalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError> {
        let ker = matrix(f).sub(matrix(g)).null_space();
        Ok((Obj::Vect(ker.cols), self.mor(ker)))
    }

    fn induce(&self, inclusion: &Mor, h: &Mor) -> Option<Mor> {
        let io = matrix(inclusion);
        let hm = matrix(h);
        let mut u = Matrix::zero(self.p, io.cols, hm.cols);
        for k in 0..io.cols {
            let i = (0..io.rows).find(|&i| (0..io.cols).all(|c| io.get(i, c) == u32::from(c == k)))?;
            for c in 0..hm.cols {
                u.set(k, c, hm.get(i, c));
            }
        }
        Some(self.mor(u))
    }

    fn is_epi(&self, f: &Mor) -> bool {
        let m = matrix(f);
        m.rank() == m.rows
    }

    fn is_mono(&self, f: &Mor) -> bool {
        let m = matrix(f);
        m.rank() == m.cols
    }

    fn inverse(&self, f: &Mor) -> Option<Mor> {
        matrix(f).inverse().map(|m| self.mor(m))
    }

    fn objects(&self, max_size: usize) -> Vec<Obj> {
        (0..=max_size).map(Obj::Vect).collect()
    }

    fn hom_size(&self, x: &Obj, y: &Obj) -> u64 {
        (self.p as u64).saturating_pow((dim(x) * dim(y)) as u32)
    }

    fn hom(&self, x: &Obj, y: &Obj) -> Vec<Mor> {
        let (cols, rows) = (dim(x), dim(y));
        let cells = rows * cols;
        let p = self.p as u64;
        let total = p.pow(cells as u32);
        (0..total)
            .map(|mut code| {
                let mut entries = vec![0i64; cells];
                for e in entries.iter_mut() {
                    *e = (code % p) as i64;
                    code /= p;
                }
                self.mor(Matrix::from_rows(self.p, rows, cols, entries))
            })
            .collect()
    }

    fn well_formed(&self, f: &Mor) -> bool {
        match (&f.src, &f.dst, &f.data) {
            (Obj::Vect(c), Obj::Vect(r), MorData::Mat(m)) => {
                m.p == self.p
                    && m.rows == *r
                    && m.cols == *c
                    && m.entries.len() == r * c
                    && m.entries.iter().all(|&e| e < self.p)
            }
            _ => false,
        }
    }

    fn size(&self, x: &Obj) -> usize {
        dim(x)
    }
}
