//! Monoidal categories with decidable equality and computable coequalizers.
//!
//! Composition is written diagrammatically: `compose(f, g)` is `f • g`,
//! i.e. first `f`, then `g`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Obj {
    /// A finite set with elements `0..n`.
    Set(usize),
    /// The vector space F_p^n.
    Vect(usize),
    Pair(Box<Obj>, Box<Obj>),
}

impl Obj {
    pub fn pair(a: Obj, b: Obj) -> Obj {
        Obj::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obj::Set(n) => write!(f, "set({n})"),
            Obj::Vect(n) => write!(f, "vect({n})"),
            Obj::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MorData {
    /// Function table: image of each source element.
    Func(Vec<usize>),
    Mat(Matrix),
    Pair(Box<Mor>, Box<Mor>),
    /// A morphism of the opposite category, stored as the underlying
    /// morphism pointing the other way.
    Op(Box<Mor>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Mor {
    pub src: Obj,
    pub dst: Obj,
    pub data: MorData,
}

impl fmt::Display for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: ", self.src, self.dst)?;
        fmt_data(&self.data, f)
    }
}

fn fmt_data(d: &MorData, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match d {
        MorData::Func(t) => write!(f, "{t:?}"),
        MorData::Mat(m) => {
            let rows: Vec<&[u32]> = (0..m.rows).map(|r| m.row(r)).collect();
            write!(f, "{rows:?}")
        }
        MorData::Pair(a, b) => {
            write!(f, "(")?;
            fmt_data(&a.data, f)?;
            write!(f, ", ")?;
            fmt_data(&b.data, f)?;
            write!(f, ")")
        }
        MorData::Op(m) => {
            write!(f, "op ")?;
            fmt_data(&m.data, f)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StructureKind {
    Alpha,
    AlphaInv,
    Lambda,
    LambdaInv,
    Rho,
    RhoInv,
}

impl StructureKind {
    pub fn arity(self) -> usize {
        match self {
            StructureKind::Alpha | StructureKind::AlphaInv => 3,
            _ => 1,
        }
    }

    pub fn inverse(self) -> StructureKind {
        use StructureKind::*;
        match self {
            Alpha => AlphaInv,
            AlphaInv => Alpha,
            Lambda => LambdaInv,
            LambdaInv => Lambda,
            Rho => RhoInv,
            RhoInv => Rho,
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("endpoint mismatch: {0} does not match {1}")]
    EndpointMismatch(Obj, Obj),
    #[error("structure isomorphism {0:?} expects {1} objects, got {2}")]
    ArityMismatch(StructureKind, usize, usize),
    #[error("morphisms are not parallel")]
    NotParallel,
    #[error("map does not coequalize the defining pair")]
    NotCocone,
    #[error("map does not factor through the equalizer")]
    NotCone,
    #[error("required colimit does not exist: {0}")]
    MissingColimit(String),
    #[error("tensoring does not preserve the coequalizer")]
    NotPreserved,
    #[error("morphism is not invertible")]
    NotInvertible,
}

/// A coequalizer of the parallel pair `(f, g)`: `f • projection = g • projection`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coequalizer {
    pub f: Mor,
    pub g: Mor,
    pub apex: Obj,
    pub projection: Mor,
}

/// An equalizer of the parallel pair `(f, g)`: `inclusion • f = inclusion • g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equalizer {
    pub f: Mor,
    pub g: Mor,
    pub apex: Obj,
    pub inclusion: Mor,
}

/// Raw capabilities of a concrete monoidal category. Endpoint checks are done
/// by [`MonoidalInstance`]; implementations may assume well-typed input.
pub trait Monoidal: Send + Sync + fmt::Debug {
    fn name(&self) -> String;
    fn unit(&self) -> Obj;
    fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj;
    fn identity(&self, x: &Obj) -> Mor;
    fn compose(&self, f: &Mor, g: &Mor) -> Mor;
    fn tensor(&self, f: &Mor, g: &Mor) -> Mor;
    fn structure(&self, kind: StructureKind, objs: &[Obj]) -> Mor;
    /// Apex and projection of the canonical coequalizer.
    fn coequalize(&self, f: &Mor, g: &Mor) -> Result<(Obj, Mor), KernelError>;
    /// A candidate factorization of `h` through the projection; the caller
    /// verifies it.
    fn coinduce(&self, projection: &Mor, h: &Mor) -> Mor;
    fn equalize(&self, _f: &Mor, _g: &Mor) -> Result<(Obj, Mor), KernelError> {
        Err(KernelError::MissingColimit(format!("{} has no equalizers", self.name())))
    }
    fn induce(&self, _inclusion: &Mor, _h: &Mor) -> Option<Mor> {
        None
    }
    fn is_epi(&self, f: &Mor) -> bool;
    fn is_mono(&self, f: &Mor) -> bool;
    fn inverse(&self, f: &Mor) -> Option<Mor>;
    /// Objects whose size (cardinality or dimension) is at most `max_size`.
    fn objects(&self, max_size: usize) -> Vec<Obj>;
    /// Number of morphisms `x -> y`, saturating.
    fn hom_size(&self, x: &Obj, y: &Obj) -> u64;
    /// Every morphism `x -> y`, in a fixed order.
    fn hom(&self, x: &Obj, y: &Obj) -> Vec<Mor>;
    fn well_formed(&self, f: &Mor) -> bool;
    fn size(&self, x: &Obj) -> usize;
}

/// A monoidal category as a shareable value.
#[derive(Clone, Debug)]
pub struct MonoidalInstance {
    inner: Arc<dyn Monoidal>,
}

impl MonoidalInstance {
    pub fn new(inner: impl Monoidal + 'static) -> Self {
        MonoidalInstance { inner: Arc::new(inner) }
    }

    pub fn raw(&self) -> &dyn Monoidal {
        self.inner.as_ref()
    }

    pub fn name(&self) -> String {
        self.inner.name()
    }

    pub fn unit(&self) -> Obj {
        self.inner.unit()
    }

    pub fn tensor_obj(&self, x: &Obj, y: &Obj) -> Obj {
        self.inner.tensor_obj(x, y)
    }

    pub fn id(&self, x: &Obj) -> Mor {
        self.inner.identity(x)
    }

    pub fn compose(&self, f: &Mor, g: &Mor) -> Result<Mor, KernelError> {
        if f.dst != g.src {
            return Err(KernelError::EndpointMismatch(f.dst.clone(), g.src.clone()));
        }
        Ok(self.inner.compose(f, g))
    }

    /// Composes a non-empty chain `fs[0] • fs[1] • ...`.
    pub fn chain(&self, fs: &[&Mor]) -> Result<Mor, KernelError> {
        let mut acc = fs[0].clone();
        for f in &fs[1..] {
            acc = self.compose(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn tensor_mor(&self, f: &Mor, g: &Mor) -> Mor {
        self.inner.tensor(f, g)
    }

    /// `X ⊗ f`.
    pub fn lwhisker(&self, x: &Obj, f: &Mor) -> Mor {
        self.inner.tensor(&self.id(x), f)
    }

    /// `f ⊗ X`.
    pub fn rwhisker(&self, f: &Mor, x: &Obj) -> Mor {
        self.inner.tensor(f, &self.id(x))
    }

    pub fn structure_iso(&self, kind: StructureKind, objs: &[Obj]) -> Result<Mor, KernelError> {
        if objs.len() != kind.arity() {
            return Err(KernelError::ArityMismatch(kind, kind.arity(), objs.len()));
        }
        Ok(self.inner.structure(kind, objs))
    }

    pub fn alpha(&self, x: &Obj, y: &Obj, z: &Obj) -> Mor {
        self.inner.structure(StructureKind::Alpha, &[x.clone(), y.clone(), z.clone()])
    }

    pub fn alpha_inv(&self, x: &Obj, y: &Obj, z: &Obj) -> Mor {
        self.inner.structure(StructureKind::AlphaInv, &[x.clone(), y.clone(), z.clone()])
    }

    pub fn lambda(&self, x: &Obj) -> Mor {
        self.inner.structure(StructureKind::Lambda, std::slice::from_ref(x))
    }

    pub fn lambda_inv(&self, x: &Obj) -> Mor {
        self.inner.structure(StructureKind::LambdaInv, std::slice::from_ref(x))
    }

    pub fn rho(&self, x: &Obj) -> Mor {
        self.inner.structure(StructureKind::Rho, std::slice::from_ref(x))
    }

    pub fn rho_inv(&self, x: &Obj) -> Mor {
        self.inner.structure(StructureKind::RhoInv, std::slice::from_ref(x))
    }

    pub fn coequalize(&self, f: &Mor, g: &Mor) -> Result<Coequalizer, KernelError> {
        if f.src != g.src || f.dst != g.dst {
            return Err(KernelError::NotParallel);
        }
        let (apex, projection) = self.inner.coequalize(f, g)?;
        Ok(Coequalizer { f: f.clone(), g: g.clone(), apex, projection })
    }

    /// The unique `u` with `c.projection • u = h`.
    pub fn coinduce(&self, c: &Coequalizer, h: &Mor) -> Result<Mor, KernelError> {
        if h.src != c.projection.src {
            return Err(KernelError::EndpointMismatch(c.projection.src.clone(), h.src.clone()));
        }
        if self.inner.compose(&c.f, h) != self.inner.compose(&c.g, h) {
            return Err(KernelError::NotCocone);
        }
        let u = self.inner.coinduce(&c.projection, h);
        if u.src != c.apex || self.inner.compose(&c.projection, &u) != *h {
            return Err(KernelError::NotCocone);
        }
        Ok(u)
    }

    /// Factors `h` through `q`, where `q` is assumed to be another
    /// coequalizer of `(c.f, c.g)` (typically a tensored projection).
    /// Preservation is checked: the comparison map from the canonical
    /// coequalizer to `q.dst` must be invertible.
    pub fn coinduce_along(&self, c: &Coequalizer, q: &Mor, h: &Mor) -> Result<Mor, KernelError> {
        let k = self.coinduce(c, q)?;
        let k_inv = self.inverse(&k).ok_or(KernelError::NotPreserved)?;
        let u = self.coinduce(c, h)?;
        let out = self.compose(&k_inv, &u)?;
        if self.inner.compose(q, &out) != *h {
            return Err(KernelError::NotCocone);
        }
        Ok(out)
    }

    pub fn equalize(&self, f: &Mor, g: &Mor) -> Result<Equalizer, KernelError> {
        if f.src != g.src || f.dst != g.dst {
            return Err(KernelError::NotParallel);
        }
        let (apex, inclusion) = self.inner.equalize(f, g)?;
        Ok(Equalizer { f: f.clone(), g: g.clone(), apex, inclusion })
    }

    /// The unique `u` with `u • e.inclusion = h`.
    pub fn induce(&self, e: &Equalizer, h: &Mor) -> Result<Mor, KernelError> {
        if h.dst != e.inclusion.dst {
            return Err(KernelError::EndpointMismatch(e.inclusion.dst.clone(), h.dst.clone()));
        }
        if self.inner.compose(h, &e.f) != self.inner.compose(h, &e.g) {
            return Err(KernelError::NotCone);
        }
        let u = self.inner.induce(&e.inclusion, h).ok_or(KernelError::NotCone)?;
        if self.inner.compose(&u, &e.inclusion) != *h {
            return Err(KernelError::NotCone);
        }
        Ok(u)
    }

    pub fn is_epi(&self, f: &Mor) -> bool {
        self.inner.is_epi(f)
    }

    pub fn is_mono(&self, f: &Mor) -> bool {
        self.inner.is_mono(f)
    }

    pub fn inverse(&self, f: &Mor) -> Option<Mor> {
        self.inner.inverse(f)
    }

    pub fn is_iso(&self, f: &Mor) -> bool {
        self.inner.inverse(f).is_some()
    }

    pub fn objects(&self, max_size: usize) -> Vec<Obj> {
        self.inner.objects(max_size)
    }

    pub fn hom(&self, x: &Obj, y: &Obj) -> Vec<Mor> {
        self.inner.hom(x, y)
    }

    pub fn hom_size(&self, x: &Obj, y: &Obj) -> u64 {
        self.inner.hom_size(x, y)
    }

    pub fn size(&self, x: &Obj) -> usize {
        self.inner.size(x)
    }

    pub fn well_formed(&self, f: &Mor) -> bool {
        self.inner.well_formed(f)
    }

    /// Epimorphism test by right cancellation against every pair of maps
    /// out of `f.dst` into objects of size at most `budget`. Only meant for
    /// tiny inputs.
    pub fn is_epi_by_cancellation(&self, f: &Mor, budget: usize) -> bool {
        for t in self.objects(budget) {
            if self.hom_size(&f.dst, &t) > 4096 {
                continue;
            }
            let homs = self.hom(&f.dst, &t);
            for (i, a) in homs.iter().enumerate() {
                for b in &homs[i + 1..] {
                    if self.inner.compose(f, a) == self.inner.compose(f, b) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CoherenceLaw {
    Pentagon,
    Triangle,
    LeftUnitorAssociator,
    RightUnitorAssociator,
    Bifunctoriality,
}

#[derive(Clone, Debug)]
pub struct CoherenceEntry {
    pub law: CoherenceLaw,
    pub objs: Vec<Obj>,
    /// The two unequal composites, if the diagram fails.
    pub failure: Option<(Mor, Mor)>,
}

#[derive(Clone, Debug, Default)]
pub struct CoherenceReport {
    pub entries: Vec<CoherenceEntry>,
}

impl CoherenceReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.failure.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CoherenceEntry> {
        self.entries.iter().filter(|e| e.failure.is_some())
    }
}

fn verdict(lhs: Mor, rhs: Mor) -> Option<(Mor, Mor)> {
    (lhs != rhs).then_some((lhs, rhs))
}

/// Checks the pentagon on every 4-tuple and the triangle and both
/// unitor-associator diagrams on every pair drawn from `objs`.
pub fn check_coherence(c: &MonoidalInstance, objs: &[Obj]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    let t = |a: &Obj, b: &Obj| c.tensor_obj(a, b);
    let unit = c.unit();
    for x in objs {
        for y in objs {
            let lhs = c.compose(&c.alpha(x, &unit, y), &c.lwhisker(x, &c.lambda(y))).unwrap();
            let rhs = c.rwhisker(&c.rho(x), y);
            report.entries.push(CoherenceEntry {
                law: CoherenceLaw::Triangle,
                objs: vec![x.clone(), y.clone()],
                failure: verdict(lhs, rhs),
            });

            let lhs = c.compose(&c.alpha(&unit, x, y), &c.lambda(&t(x, y))).unwrap();
            let rhs = c.rwhisker(&c.lambda(x), y);
            report.entries.push(CoherenceEntry {
                law: CoherenceLaw::LeftUnitorAssociator,
                objs: vec![x.clone(), y.clone()],
                failure: verdict(lhs, rhs),
            });

            let lhs = c.compose(&c.alpha(x, y, &unit), &c.lwhisker(x, &c.rho(y))).unwrap();
            let rhs = c.rho(&t(x, y));
            report.entries.push(CoherenceEntry {
                law: CoherenceLaw::RightUnitorAssociator,
                objs: vec![x.clone(), y.clone()],
                failure: verdict(lhs, rhs),
            });
        }
    }
    for x in objs {
        for y in objs {
            for z in objs {
                for w in objs {
                    let lhs = c
                        .compose(&c.alpha(&t(x, y), z, w), &c.alpha(x, y, &t(z, w)))
                        .unwrap();
                    let rhs = c
                        .chain(&[
                            &c.rwhisker(&c.alpha(x, y, z), w),
                            &c.alpha(x, &t(y, z), w),
                            &c.lwhisker(x, &c.alpha(y, z, w)),
                        ])
                        .unwrap();
                    report.entries.push(CoherenceEntry {
                        law: CoherenceLaw::Pentagon,
                        objs: vec![x.clone(), y.clone(), z.clone(), w.clone()],
                        failure: verdict(lhs, rhs),
                    });
                }
            }
        }
    }
    report
}

/// Checks `(f ⊗ g) • (f' ⊗ g') = (f • f') ⊗ (g • g')` and `id ⊗ id = id` on
/// the given composable quadruples.
pub fn check_bifunctoriality(c: &MonoidalInstance, quads: &[(Mor, Mor, Mor, Mor)]) -> CoherenceReport {
    let mut report = CoherenceReport::default();
    for (f, f2, g, g2) in quads {
        let lhs = c.compose(&c.tensor_mor(f, g), &c.tensor_mor(f2, g2)).unwrap();
        let rhs = c.tensor_mor(&c.compose(f, f2).unwrap(), &c.compose(g, g2).unwrap());
        report.entries.push(CoherenceEntry {
            law: CoherenceLaw::Bifunctoriality,
            objs: vec![f.src.clone(), g.src.clone()],
            failure: verdict(lhs, rhs),
        });
        let ids = c.tensor_mor(&c.id(&f.src), &c.id(&g.src));
        report.entries.push(CoherenceEntry {
            law: CoherenceLaw::Bifunctoriality,
            objs: vec![f.src.clone(), g.src.clone()],
            failure: verdict(ids, c.id(&c.tensor_obj(&f.src, &g.src))),
        });
    }
    report
}
