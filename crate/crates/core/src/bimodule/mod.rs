//! Monoids, bimodules, bimodule maps and balanced tensor products.
//!
//! One-sided modules are bimodules over the trivial monoid on the unit
//! object. Since the balanced tensor over the trivial monoid coequalizes an
//! equal pair, its projection is an identity and the ordinary tensor product
//! falls out as a special case.

mod checks;
mod search;
mod witness;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::kernel::{Coequalizer, KernelError, Mor, MonoidalInstance, Obj};
use crate::report::{Report, ValidityReport};

pub use search::*;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monoid {
    pub carrier: Obj,
    pub mult: Mor,
    pub unit: Mor,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bimodule {
    pub left: Monoid,
    pub right: Monoid,
    pub carrier: Obj,
    pub lact: Mor,
    pub ract: Mor,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimoduleMap {
    pub src: Bimodule,
    pub dst: Bimodule,
    pub map: Mor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTensor {
    pub factors: (Bimodule, Bimodule),
    pub result: Bimodule,
    pub projection: Mor,
    pub coequalizer: Coequalizer,
}

/// An invertible bimodule together with its inverse and both comparison
/// isomorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivalenceWitness {
    /// An (A,B)-bimodule M.
    pub forward: Bimodule,
    /// A (B,A)-bimodule M'.
    pub backward: Bimodule,
    /// M ⊗_B M' → A.
    pub eta: BimoduleMap,
    /// M' ⊗_A M → B.
    pub eps: BimoduleMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MixedKind {
    /// `(M ⊗ N) ⊗_C P → M ⊗ (N ⊗_C P)`.
    RightBalanced,
    /// `M ⊗_B (N ⊗ P) → (M ⊗_B N) ⊗ P`.
    LeftBalanced,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CalcError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("monoid mismatch: {0}")]
    MonoidMismatch(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("no equivalence witness with carrier size at most {0}")]
    NotFound(usize),
    #[error("search space too large: {0}")]
    BudgetExceeded(String),
}

pub type CalcResult<T> = Result<T, CalcError>;

fn shape(what: &str, expected: &Obj, got: &Obj) -> CalcError {
    CalcError::ShapeMismatch(format!("{what}: expected {expected}, got {got}"))
}

/// The calculus over a fixed monoidal category. Balanced tensors are
/// memoized since every higher construction recomputes the same ones.
#[derive(Clone, Debug)]
pub struct Calculus {
    pub c: MonoidalInstance,
    cache: Arc<Mutex<HashMap<(Bimodule, Bimodule), BalancedTensor>>>,
}

impl Calculus {
    pub fn new(c: MonoidalInstance) -> Self {
        Calculus { c, cache: Arc::new(Mutex::new(HashMap::new())) }
    }

    /// Every balanced tensor computed so far through this calculus or a
    /// clone of it.
    pub fn cached_tensors(&self) -> Vec<BalancedTensor> {
        self.cache.lock().unwrap().values().cloned().collect()
    }

    fn t(&self, x: &Obj, y: &Obj) -> Obj {
        self.c.tensor_obj(x, y)
    }

    // ---- validators ----

    pub fn validate_monoid(&self, a: &Monoid) -> CalcResult<ValidityReport> {
        let c = &self.c;
        let x = &a.carrier;
        let xx = self.t(x, x);
        if a.mult.src != xx || a.mult.dst != *x {
            return Err(shape("multiplication", &xx, &a.mult.src));
        }
        if a.unit.src != c.unit() || a.unit.dst != *x {
            return Err(shape("unit", &c.unit(), &a.unit.src));
        }
        let mut r = Report::new();
        let m = &a.mult;
        r.eq_result(
            "associativity",
            (|| {
                let lhs = c.compose(&c.rwhisker(m, x), m)?;
                let rhs = c.chain(&[&c.alpha(x, x, x), &c.lwhisker(x, m), m])?;
                Ok::<_, KernelError>((lhs, rhs))
            })(),
        );
        r.eq_result("left unitality", c.compose(&c.rwhisker(&a.unit, x), m).map(|l| (l, c.lambda(x))));
        r.eq_result("right unitality", c.compose(&c.lwhisker(x, &a.unit), m).map(|l| (l, c.rho(x))));
        Ok(r)
    }

    pub fn validate_bimodule(&self, m: &Bimodule) -> CalcResult<ValidityReport> {
        let c = &self.c;
        let (a, b, x) = (&m.left.carrier, &m.right.carrier, &m.carrier);
        if m.lact.src != self.t(a, x) || m.lact.dst != *x {
            return Err(shape("left action", &self.t(a, x), &m.lact.src));
        }
        if m.ract.src != self.t(x, b) || m.ract.dst != *x {
            return Err(shape("right action", &self.t(x, b), &m.ract.src));
        }
        let mut r = Report::new();
        r.extend("left monoid", self.validate_monoid(&m.left)?);
        r.extend("right monoid", self.validate_monoid(&m.right)?);
        let (l, ra) = (&m.lact, &m.ract);
        r.eq_result("left unitality", c.compose(&c.rwhisker(&m.left.unit, x), l).map(|v| (v, c.lambda(x))));
        r.eq_result("right unitality", c.compose(&c.lwhisker(x, &m.right.unit), ra).map(|v| (v, c.rho(x))));
        r.eq_result(
            "left associativity",
            (|| {
                let lhs = c.compose(&c.rwhisker(&m.left.mult, x), l)?;
                let rhs = c.chain(&[&c.alpha(a, a, x), &c.lwhisker(a, l), l])?;
                Ok::<_, KernelError>((lhs, rhs))
            })(),
        );
        r.eq_result(
            "right associativity",
            (|| {
                let lhs = c.compose(&c.rwhisker(ra, b), ra)?;
                let rhs = c.chain(&[&c.alpha(x, b, b), &c.lwhisker(x, &m.right.mult), ra])?;
                Ok::<_, KernelError>((lhs, rhs))
            })(),
        );
        r.eq_result(
            "compatibility",
            (|| {
                let lhs = c.compose(&c.rwhisker(l, b), ra)?;
                let rhs = c.chain(&[&c.alpha(a, x, b), &c.lwhisker(a, ra), l])?;
                Ok::<_, KernelError>((lhs, rhs))
            })(),
        );
        Ok(r)
    }

    pub fn validate_bimodule_map(&self, f: &BimoduleMap) -> CalcResult<ValidityReport> {
        let c = &self.c;
        if f.src.left != f.dst.left || f.src.right != f.dst.right {
            return Err(CalcError::MonoidMismatch("source and target bimodules differ in their monoids".into()));
        }
        if f.map.src != f.src.carrier || f.map.dst != f.dst.carrier {
            return Err(shape("bimodule map", &f.src.carrier, &f.map.src));
        }
        let (a, b) = (&f.src.left.carrier, &f.src.right.carrier);
        let mut r = Report::new();
        r.eq_result(
            "left equivariance",
            (|| Ok::<_, KernelError>((c.compose(&c.lwhisker(a, &f.map), &f.dst.lact)?, c.compose(&f.src.lact, &f.map)?)))(),
        );
        r.eq_result(
            "right equivariance",
            (|| Ok::<_, KernelError>((c.compose(&c.rwhisker(&f.map, b), &f.dst.ract)?, c.compose(&f.src.ract, &f.map)?)))(),
        );
        Ok(r)
    }

    // ---- basic constructions ----

    pub fn identity_bimodule(&self, a: &Monoid) -> Bimodule {
        Bimodule { left: a.clone(), right: a.clone(), carrier: a.carrier.clone(), lact: a.mult.clone(), ract: a.mult.clone() }
    }

    /// The unit object with multiplication `λ_I`.
    pub fn trivial_monoid(&self) -> Monoid {
        let i = self.c.unit();
        Monoid { carrier: i.clone(), mult: self.c.lambda(&i), unit: self.c.id(&i) }
    }

    pub fn is_trivial(&self, a: &Monoid) -> bool {
        *a == self.trivial_monoid()
    }

    /// Restricts to the trivial monoid on the right, acting by `ρ`.
    pub fn forget_right(&self, m: &Bimodule) -> Bimodule {
        Bimodule { right: self.trivial_monoid(), ract: self.c.rho(&m.carrier), ..m.clone() }
    }

    /// Restricts to the trivial monoid on the left, acting by `λ`.
    pub fn forget_left(&self, m: &Bimodule) -> Bimodule {
        Bimodule { left: self.trivial_monoid(), lact: self.c.lambda(&m.carrier), ..m.clone() }
    }

    pub fn forget_right_map(&self, f: &BimoduleMap) -> BimoduleMap {
        BimoduleMap { src: self.forget_right(&f.src), dst: self.forget_right(&f.dst), map: f.map.clone() }
    }

    pub fn forget_left_map(&self, f: &BimoduleMap) -> BimoduleMap {
        BimoduleMap { src: self.forget_left(&f.src), dst: self.forget_left(&f.dst), map: f.map.clone() }
    }

    /// `M ⊗ N` for a left A-module M and a right C-module N, both given as
    /// bimodules over the trivial monoid on the other side.
    pub fn free_bimodule(&self, m: &Bimodule, n: &Bimodule) -> CalcResult<Bimodule> {
        if !self.is_trivial(&m.right) || !self.is_trivial(&n.left) {
            return Err(CalcError::ShapeMismatch("free bimodule needs one-sided modules".into()));
        }
        let c = &self.c;
        let (a, x, y, cc) = (&m.left.carrier, &m.carrier, &n.carrier, &n.right.carrier);
        let lact = c.compose(&c.alpha_inv(a, x, y), &c.rwhisker(&m.lact, y))?;
        let ract = c.compose(&c.alpha(x, y, cc), &c.lwhisker(x, &n.ract))?;
        Ok(Bimodule { left: m.left.clone(), right: n.right.clone(), carrier: self.t(x, y), lact, ract })
    }

    // ---- maps ----

    pub fn id_map(&self, m: &Bimodule) -> BimoduleMap {
        BimoduleMap { src: m.clone(), dst: m.clone(), map: self.c.id(&m.carrier) }
    }

    pub fn compose_maps(&self, f: &BimoduleMap, g: &BimoduleMap) -> CalcResult<BimoduleMap> {
        if f.dst != g.src {
            return Err(CalcError::ShapeMismatch("bimodule maps are not composable".into()));
        }
        Ok(BimoduleMap { src: f.src.clone(), dst: g.dst.clone(), map: self.c.compose(&f.map, &g.map)? })
    }

    pub fn chain_maps(&self, fs: &[&BimoduleMap]) -> CalcResult<BimoduleMap> {
        let mut acc = fs[0].clone();
        for f in &fs[1..] {
            acc = self.compose_maps(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn is_iso_map(&self, f: &BimoduleMap) -> bool {
        self.c.is_iso(&f.map)
    }

    pub fn inverse_map(&self, f: &BimoduleMap) -> CalcResult<BimoduleMap> {
        let inv = self.c.inverse(&f.map).ok_or_else(|| CalcError::NotInvertible(format!("{}", f.map)))?;
        Ok(BimoduleMap { src: f.dst.clone(), dst: f.src.clone(), map: inv })
    }

    // ---- balanced tensor ----

    /// The parallel pair `r_M ⊗ N` and `α_{M,B,N} • (M ⊗ ℓ_N)`.
    pub fn balancing_pair(&self, m: &Bimodule, n: &Bimodule) -> CalcResult<(Mor, Mor)> {
        let c = &self.c;
        let f = c.rwhisker(&m.ract, &n.carrier);
        let g = c.compose(&c.alpha(&m.carrier, &m.right.carrier, &n.carrier), &c.lwhisker(&m.carrier, &n.lact))?;
        Ok((f, g))
    }

    pub fn balanced_tensor(&self, m: &Bimodule, n: &Bimodule) -> CalcResult<BalancedTensor> {
        if m.right != n.left {
            return Err(CalcError::MonoidMismatch("right monoid of the first factor differs from left monoid of the second".into()));
        }
        let key = (m.clone(), n.clone());
        if let Some(t) = self.cache.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let t = self.balanced_tensor_uncached(m, n)?;
        self.cache.lock().unwrap().insert(key, t.clone());
        Ok(t)
    }

    fn balanced_tensor_uncached(&self, m: &Bimodule, n: &Bimodule) -> CalcResult<BalancedTensor> {
        let c = &self.c;
        let (f, g) = self.balancing_pair(m, n)?;
        let coeq = c.coequalize(&f, &g)?;
        let pi = coeq.projection.clone();
        let (a, x, y, cc) = (&m.left.carrier, &m.carrier, &n.carrier, &n.right.carrier);

        let lpair = c.coequalize(&c.lwhisker(a, &f), &c.lwhisker(a, &g))?;
        let h = c.chain(&[&c.alpha_inv(a, x, y), &c.rwhisker(&m.lact, y), &pi])?;
        let lact = c.coinduce_along(&lpair, &c.lwhisker(a, &pi), &h)?;

        let rpair = c.coequalize(&c.rwhisker(&f, cc), &c.rwhisker(&g, cc))?;
        let h = c.chain(&[&c.alpha(x, y, cc), &c.lwhisker(x, &n.ract), &pi])?;
        let ract = c.coinduce_along(&rpair, &c.rwhisker(&pi, cc), &h)?;

        let result = Bimodule { left: m.left.clone(), right: n.right.clone(), carrier: coeq.apex.clone(), lact, ract };
        Ok(BalancedTensor { factors: (m.clone(), n.clone()), result, projection: pi, coequalizer: coeq })
    }

    /// `φ ⊗_B ψ`, the map induced by `(φ ⊗ ψ) • π'`.
    pub fn tensor_of_maps(&self, f: &BimoduleMap, g: &BimoduleMap) -> CalcResult<BimoduleMap> {
        let s = self.balanced_tensor(&f.src, &g.src)?;
        let d = self.balanced_tensor(&f.dst, &g.dst)?;
        let h = self.c.compose(&self.c.tensor_mor(&f.map, &g.map), &d.projection)?;
        let map = self.c.coinduce(&s.coequalizer, &h)?;
        Ok(BimoduleMap { src: s.result, dst: d.result, map })
    }

    /// `M ⊗_B ψ`.
    pub fn lwhisker_map(&self, m: &Bimodule, g: &BimoduleMap) -> CalcResult<BimoduleMap> {
        self.tensor_of_maps(&self.id_map(m), g)
    }

    /// `φ ⊗_B N`.
    pub fn rwhisker_map(&self, f: &BimoduleMap, n: &Bimodule) -> CalcResult<BimoduleMap> {
        self.tensor_of_maps(f, &self.id_map(n))
    }

    // ---- associators ----

    /// The associator with one balanced and one ordinary tensor. Only the
    /// left action of `m` is used for [`MixedKind::RightBalanced`] and only
    /// the right action of `p` for [`MixedKind::LeftBalanced`].
    pub fn assoc_mixed(&self, kind: MixedKind, m: &Bimodule, n: &Bimodule, p: &Bimodule) -> CalcResult<BimoduleMap> {
        let c = &self.c;
        let (x, y, z) = (&m.carrier, &n.carrier, &p.carrier);
        match kind {
            MixedKind::RightBalanced => {
                let free = self.free_bimodule(&self.forget_right(m), &self.forget_left(n))?;
                let src = self.balanced_tensor(&free, p)?;
                let np = self.balanced_tensor(n, p)?;
                let dst = self.free_bimodule(&self.forget_right(m), &self.forget_left(&np.result))?;
                let h = c.compose(&c.alpha(x, y, z), &c.lwhisker(x, &np.projection))?;
                let map = c.coinduce(&src.coequalizer, &h)?;
                Ok(BimoduleMap { src: src.result, dst, map })
            }
            MixedKind::LeftBalanced => {
                let free = self.free_bimodule(&self.forget_right(n), &self.forget_left(p))?;
                let src = self.balanced_tensor(m, &free)?;
                let mn = self.balanced_tensor(m, n)?;
                let dst = self.free_bimodule(&self.forget_right(&mn.result), &self.forget_left(p))?;
                let h = c.compose(&c.alpha_inv(x, y, z), &c.rwhisker(&mn.projection, z))?;
                let map = c.coinduce(&src.coequalizer, &h)?;
                Ok(BimoduleMap { src: src.result, dst, map })
            }
        }
    }

    /// `ᾱ_{M|N|P}: (M ⊗_B N) ⊗_C P → M ⊗_B (N ⊗_C P)` and the separately
    /// induced map in the other direction.
    pub fn assoc_balanced(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule) -> CalcResult<(BimoduleMap, BimoduleMap)> {
        let c = &self.c;
        let (x, y, z) = (&m.carrier, &n.carrier, &p.carrier);
        let mn = self.balanced_tensor(m, n)?;
        let np = self.balanced_tensor(n, p)?;
        let left = self.balanced_tensor(&mn.result, p)?;
        let right = self.balanced_tensor(m, &np.result)?;

        let h = c.chain(&[&c.alpha(x, y, z), &c.lwhisker(x, &np.projection), &right.projection])?;
        let (f, g) = (&mn.coequalizer.f, &mn.coequalizer.g);
        let pair = c.coequalize(&c.rwhisker(f, z), &c.rwhisker(g, z))?;
        let step = c.coinduce_along(&pair, &c.rwhisker(&mn.projection, z), &h)?;
        let fwd = c.coinduce(&left.coequalizer, &step)?;

        let h = c.chain(&[&c.alpha_inv(x, y, z), &c.rwhisker(&mn.projection, z), &left.projection])?;
        let (f, g) = (&np.coequalizer.f, &np.coequalizer.g);
        let pair = c.coequalize(&c.lwhisker(x, f), &c.lwhisker(x, g))?;
        let step = c.coinduce_along(&pair, &c.lwhisker(x, &np.projection), &h)?;
        let bwd = c.coinduce(&right.coequalizer, &step)?;

        Ok((
            BimoduleMap { src: left.result.clone(), dst: right.result.clone(), map: fwd },
            BimoduleMap { src: right.result, dst: left.result, map: bwd },
        ))
    }

    pub fn assoc(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule) -> CalcResult<BimoduleMap> {
        Ok(self.assoc_balanced(m, n, p)?.0)
    }

    pub fn assoc_inv(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule) -> CalcResult<BimoduleMap> {
        Ok(self.assoc_balanced(m, n, p)?.1)
    }

    // ---- unitors ----

    /// `ℓ̄_M: A ⊗_A M → M`, induced by the left action.
    pub fn unit_left(&self, m: &Bimodule) -> CalcResult<BimoduleMap> {
        let t = self.balanced_tensor(&self.identity_bimodule(&m.left), m)?;
        let map = self.c.coinduce(&t.coequalizer, &m.lact)?;
        Ok(BimoduleMap { src: t.result, dst: m.clone(), map })
    }

    /// `r̄_M: M ⊗_B B → M`, induced by the right action.
    pub fn unit_right(&self, m: &Bimodule) -> CalcResult<BimoduleMap> {
        let t = self.balanced_tensor(m, &self.identity_bimodule(&m.right))?;
        let map = self.c.coinduce(&t.coequalizer, &m.ract)?;
        Ok(BimoduleMap { src: t.result, dst: m.clone(), map })
    }

    /// The explicit inverse `λ⁻¹ • (e_A ⊗ M) • π` of `ℓ̄_M`.
    pub fn unit_left_inv(&self, m: &Bimodule) -> CalcResult<BimoduleMap> {
        let c = &self.c;
        let t = self.balanced_tensor(&self.identity_bimodule(&m.left), m)?;
        let map = c.chain(&[&c.lambda_inv(&m.carrier), &c.rwhisker(&m.left.unit, &m.carrier), &t.projection])?;
        Ok(BimoduleMap { src: m.clone(), dst: t.result, map })
    }

    /// The explicit inverse `ρ⁻¹ • (M ⊗ e_B) • π` of `r̄_M`.
    pub fn unit_right_inv(&self, m: &Bimodule) -> CalcResult<BimoduleMap> {
        let c = &self.c;
        let t = self.balanced_tensor(m, &self.identity_bimodule(&m.right))?;
        let map = c.chain(&[&c.rho_inv(&m.carrier), &c.lwhisker(&m.carrier, &m.right.unit), &t.projection])?;
        Ok(BimoduleMap { src: m.clone(), dst: t.result, map })
    }
}
