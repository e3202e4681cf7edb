//! Horn fillers, thinness and saturation for the marked nerve, a generator
//! of valid 4-simplices, and a budgeted driver that runs every check on the
//! generated data.
//!
//! Outer fillers take their equivalence witnesses from the marked edges of
//! the horn; nothing here searches except the driver.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::bimodule::{Bimodule, BimoduleMap, CalcError, Calculus, EquivalenceWitness, SEARCH_CAP};
use crate::gen::{rng, SampleRng, Universe};
use crate::kernel::{check_coherence, CoherenceLaw, Mor};
use crate::nerve::{Nerve, NerveError, Simplex, Simplex1, Simplex2, Simplex3, Simplex4Boundary};
use crate::report::Report;

#[derive(Debug, Clone, Error)]
pub enum HornError {
    #[error("missing equivalence witness on edge {0}")]
    MissingWitness(String),
    #[error("marking violation: {0}")]
    MarkingViolation(String),
    #[error("equation fails: {diagram}")]
    EquationFailure { diagram: String, lhs: Box<Mor>, rhs: Box<Mor> },
    #[error("malformed horn: {0}")]
    Malformed(String),
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error(transparent)]
    Calc(#[from] CalcError),
}

pub type HornResult<T> = Result<T, HornError>;

/// The boundary of an `m`-simplex with face `k` removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornProblem {
    pub m: usize,
    pub k: usize,
    /// `m + 1` entries, `None` exactly at `k`.
    pub faces: Vec<Option<Simplex>>,
}

impl HornProblem {
    pub fn from_cell(cell: &Simplex, k: usize) -> HornResult<Self> {
        let m = cell.dim();
        if m == 0 || k > m {
            return Err(NerveError::IndexOutOfRange(k, m).into());
        }
        let faces = (0..=m).map(|i| if i == k { Ok(None) } else { cell.face(i).map(Some) }).collect::<Result<_, _>>()?;
        Ok(HornProblem { m, k, faces })
    }

    fn check_shape(&self) -> HornResult<()> {
        if self.k > self.m || self.faces.len() != self.m + 1 {
            return Err(HornError::Malformed(format!("{} faces for a horn of dimension {}", self.faces.len(), self.m)));
        }
        for (i, f) in self.faces.iter().enumerate() {
            match f {
                None if i == self.k => {}
                Some(s) if i != self.k && s.dim() + 1 == self.m => {}
                _ => return Err(HornError::Malformed(format!("face {i} has the wrong shape"))),
            }
        }
        Ok(())
    }

    /// The sub-simplex on `verts` (increasing), from any present face that
    /// contains it. Edges prefer an occurrence carrying a witness.
    pub fn sub(&self, verts: &[usize]) -> HornResult<Simplex> {
        let mut found = None;
        for v in (0..=self.m).filter(|v| !verts.contains(v)) {
            let Some(face) = &self.faces[v] else { continue };
            let local: Vec<usize> = verts.iter().map(|&x| if x > v { x - 1 } else { x }).collect();
            let s = sub_simplex(face, &local)?;
            match &s {
                Simplex::Edge(e) if e.witness.is_none() => {
                    found.get_or_insert(s);
                }
                _ => return Ok(s),
            }
        }
        found.ok_or_else(|| HornError::Malformed(format!("no face contains {verts:?}")))
    }

    fn edge(&self, i: usize, j: usize) -> HornResult<Simplex1> {
        as_edge(self.sub(&[i, j])?)
    }

    fn triangle(&self, verts: [usize; 3]) -> HornResult<Simplex2> {
        as_triangle(self.sub(&verts)?)
    }
}

/// The face of `s` spanned by the increasing vertex list `verts`.
pub fn sub_simplex(s: &Simplex, verts: &[usize]) -> HornResult<Simplex> {
    if verts.len() == s.dim() + 1 {
        return Ok(s.clone());
    }
    let v = (0..=s.dim()).find(|v| !verts.contains(v)).unwrap();
    let local: Vec<usize> = verts.iter().map(|&x| if x > v { x - 1 } else { x }).collect();
    sub_simplex(&s.face(v)?, &local)
}

fn as_edge(s: Simplex) -> HornResult<Simplex1> {
    match s {
        Simplex::Edge(e) => Ok(e),
        _ => Err(HornError::Malformed("expected an edge".into())),
    }
}

fn as_triangle(s: Simplex) -> HornResult<Simplex2> {
    match s {
        Simplex::Triangle(t) => Ok(t),
        _ => Err(HornError::Malformed("expected a triangle".into())),
    }
}

fn as_tetrahedron(s: Simplex) -> HornResult<Simplex3> {
    match s {
        Simplex::Tetrahedron(t) => Ok(t),
        _ => Err(HornError::Malformed("expected a tetrahedron".into())),
    }
}


#[derive(Clone, Debug)]
pub struct FillerResult {
    /// The new top cell.
    pub filled: Simplex,
    /// Its face `k`, which the horn lacked.
    pub missing: Simplex,
    pub certificates: Report,
}

#[derive(Clone, Debug)]
pub struct ThinnessOutcome {
    /// For `m = 2`, the witness constructed for the target edge.
    pub witness: Option<EquivalenceWitness>,
    pub report: Report,
}

#[derive(Clone, Debug)]
pub struct SaturationOutcome {
    /// Witnesses for edges `01, 12, 23, 03`.
    pub witnesses: Vec<(String, EquivalenceWitness)>,
    pub report: Report,
}

#[derive(Clone, Debug)]
pub struct Complicial {
    pub nerve: Nerve,
}

impl Complicial {
    pub fn new(calc: Calculus) -> Self {
        Complicial { nerve: Nerve::new(calc) }
    }

    pub fn calc(&self) -> &Calculus {
        &self.nerve.calc
    }

    fn require_iso(&self, t: &Simplex2, name: &str) -> HornResult<()> {
        if self.calc().is_iso_map(&t.map) {
            Ok(())
        } else {
            Err(HornError::MarkingViolation(format!("triangle {name} must be invertible")))
        }
    }

    /// The witness carried by `e`; identity edges are marked by the
    /// identity witness even when they carry none.
    fn witness(&self, e: &Simplex1, name: &str) -> HornResult<EquivalenceWitness> {
        if let Some(w) = &e.witness {
            return Ok((**w).clone());
        }
        if e.bimod == self.calc().identity_bimodule(e.source()) {
            return Ok(self.calc().identity_witness(e.source())?);
        }
        Err(HornError::MissingWitness(name.into()))
    }

    fn inv(&self, f: &BimoduleMap) -> HornResult<BimoduleMap> {
        Ok(self.calc().inverse_map(f)?)
    }

    pub fn fill_horn(&self, p: &HornProblem) -> HornResult<FillerResult> {
        match p.m {
            1 => self.fill_horn_dim1(p),
            2 => self.fill_horn_dim2(p),
            3 => self.fill_horn_dim3(p),
            4 => self.check_horn_dim4(p),
            m => Err(NerveError::IndexOutOfRange(p.k, m).into()),
        }
    }

    /// Face agreement, boundary, level validity and marking of the top cell.
    fn certify(&self, p: &HornProblem, filled: &Simplex, mut r: Report) -> HornResult<Report> {
        for (i, f) in p.faces.iter().enumerate() {
            if let Some(f) = f {
                r.holds(format!("face {i} agrees with the horn"), filled.face(i)? == *f, "filler face differs");
            }
        }
        r.extend("boundary", self.nerve.check_boundary(filled)?);
        r.extend("cell", self.nerve.validate_cell(filled)?);
        r.holds("filler marked", self.nerve.is_marked(filled), "filler is not marked");
        Ok(r)
    }

    /// The degenerate edge on the remaining vertex.
    pub fn fill_horn_dim1(&self, p: &HornProblem) -> HornResult<FillerResult> {
        p.check_shape()?;
        let Some(Simplex::Vertex(a)) = &p.faces[1 - p.k] else {
            return Err(HornError::Malformed("expected a vertex".into()));
        };
        let filled = Simplex::Edge(self.nerve.identity_edge(a)?);
        let certificates = self.certify(p, &filled, Report::new())?;
        Ok(FillerResult { missing: filled.face(p.k)?, filled, certificates })
    }

    /// `k = 1`: the balanced tensor with the identity map. `k = 0, 2`: the
    /// missing edge is the marked edge's inverse tensored with the long
    /// edge, and the map cancels the inverse pair.
    pub fn fill_horn_dim2(&self, p: &HornProblem) -> HornResult<FillerResult> {
        p.check_shape()?;
        let calc = self.calc();
        let tri = match p.k {
            1 => {
                let (e01, e12) = (p.edge(0, 1)?, p.edge(1, 2)?);
                let t = calc.balanced_tensor(&e01.bimod, &e12.bimod)?;
                let id = calc.id_map(&t.result);
                self.nerve.triangle(e01, e12, Simplex1::plain(t.result), id)?
            }
            0 => {
                let (e01, e02) = (p.edge(0, 1)?, p.edge(0, 2)?);
                let w = self.witness(&e01, "01")?;
                let (m, mp, pp) = (&w.forward, &w.backward, &e02.bimod);
                let n = calc.balanced_tensor(mp, pp)?.result;
                let map = calc.chain_maps(&[
                    &calc.assoc_inv(m, mp, pp)?,
                    &calc.rwhisker_map(&w.eta, pp)?,
                    &calc.unit_left(pp)?,
                ])?;
                self.nerve.triangle(e01, Simplex1::plain(n), e02, map)?
            }
            2 => {
                let (e12, e02) = (p.edge(1, 2)?, p.edge(0, 2)?);
                let w = self.witness(&e12, "12")?;
                let (n, np, pp) = (&w.forward, &w.backward, &e02.bimod);
                let m = calc.balanced_tensor(pp, np)?.result;
                let map = calc.chain_maps(&[
                    &calc.assoc(pp, np, n)?,
                    &calc.lwhisker_map(pp, &w.eps)?,
                    &calc.unit_right(pp)?,
                ])?;
                self.nerve.triangle(Simplex1::plain(m), e12, e02, map)?
            }
            k => return Err(NerveError::IndexOutOfRange(k, 2).into()),
        };
        let filled = Simplex::Triangle(tri);
        let certificates = self.certify(p, &filled, Report::new())?;
        Ok(FillerResult { missing: filled.face(p.k)?, filled, certificates })
    }

    /// Solves the tetrahedron equation
    /// `(φ012 ⊗ M23) • φ023 = ᾱ • (M01 ⊗ φ123) • φ013` for the missing face.
    pub fn fill_horn_dim3(&self, p: &HornProblem) -> HornResult<FillerResult> {
        p.check_shape()?;
        let calc = self.calc();
        let mut r = Report::new();
        let face = |i: usize| -> HornResult<Simplex2> { as_triangle(p.faces[i].clone().unwrap()) };
        let (m01, m12, m23) = (p.edge(0, 1)?, p.edge(1, 2)?, p.edge(2, 3)?);
        let (m02, m13, m03) = (p.edge(0, 2)?, p.edge(1, 3)?, p.edge(0, 3)?);
        let (a, b, c) = (&m01.bimod, &m12.bimod, &m23.bimod);
        let missing = match p.k {
            0 => {
                let w = self.witness(&m01, "01")?;
                let (alpha, beta, gamma) = (face(3)?, face(1)?, face(2)?);
                self.require_iso(&alpha, "012")?;
                self.require_iso(&gamma, "013")?;
                let x = calc.balanced_tensor(b, c)?.result;
                let (ap, omega) = (&w.backward, &w.eps);
                // the map M01 ⊗ φ123 must equal
                let kappa = calc.chain_maps(&[
                    &calc.assoc_inv(a, b, c)?,
                    &calc.rwhisker_map(&alpha.map, c)?,
                    &beta.map,
                    &self.inv(&gamma.map)?,
                ])?;
                let map = calc.chain_maps(&[
                    &calc.unit_left_inv(&x)?,
                    &self.inv(&calc.rwhisker_map(omega, &x)?)?,
                    &calc.assoc(ap, a, &x)?,
                    &calc.lwhisker_map(ap, &kappa)?,
                    &calc.assoc_inv(ap, a, &m13.bimod)?,
                    &calc.rwhisker_map(omega, &m13.bimod)?,
                    &calc.unit_left(&m13.bimod)?,
                ])?;
                r.equal("M01 ⊗ filler recovers the required map", calc.lwhisker_map(a, &map)?.map, kappa.map);
                self.nerve.triangle(m12, m23, m13, map)?
            }
            1 => {
                let (alpha, delta, gamma) = (face(3)?, face(0)?, face(2)?);
                self.require_iso(&alpha, "012")?;
                let map = calc.chain_maps(&[
                    &self.inv(&calc.rwhisker_map(&alpha.map, c)?)?,
                    &calc.assoc(a, b, c)?,
                    &calc.lwhisker_map(a, &delta.map)?,
                    &gamma.map,
                ])?;
                self.nerve.triangle(m02, m23, m03, map)?
            }
            2 => {
                let (alpha, beta, delta) = (face(3)?, face(1)?, face(0)?);
                self.require_iso(&delta, "123")?;
                let map = calc.chain_maps(&[
                    &self.inv(&calc.lwhisker_map(a, &delta.map)?)?,
                    &calc.assoc_inv(a, b, c)?,
                    &calc.rwhisker_map(&alpha.map, c)?,
                    &beta.map,
                ])?;
                self.nerve.triangle(m01, m13, m03, map)?
            }
            3 => {
                let w = self.witness(&m23, "23")?;
                let (beta, gamma, delta) = (face(1)?, face(2)?, face(0)?);
                self.require_iso(&beta, "023")?;
                self.require_iso(&delta, "123")?;
                let x = calc.balanced_tensor(a, b)?.result;
                let y = &m02.bimod;
                let (cp, eta) = (&w.backward, &w.eta);
                // the map φ012 ⊗ M23 must equal
                let chi = calc.chain_maps(&[
                    &calc.assoc(a, b, c)?,
                    &calc.lwhisker_map(a, &delta.map)?,
                    &gamma.map,
                    &self.inv(&beta.map)?,
                ])?;
                let map = calc.chain_maps(&[
                    &calc.unit_right_inv(&x)?,
                    &self.inv(&calc.lwhisker_map(&x, eta)?)?,
                    &calc.assoc_inv(&x, c, cp)?,
                    &calc.rwhisker_map(&chi, cp)?,
                    &calc.assoc(y, c, cp)?,
                    &calc.lwhisker_map(y, eta)?,
                    &calc.unit_right(y)?,
                ])?;
                r.equal("filler ⊗ M23 recovers the required map", calc.rwhisker_map(&map, c)?.map, chi.map);
                self.nerve.triangle(m01, m12, m02, map)?
            }
            k => return Err(NerveError::IndexOutOfRange(k, 3).into()),
        };
        let mut faces: Vec<Simplex2> = Vec::with_capacity(4);
        for i in 0..4 {
            faces.push(if i == p.k { missing.clone() } else { face(i)? });
        }
        let filled = Simplex::Tetrahedron(Simplex3 { faces: Box::new(faces.try_into().unwrap()) });
        let certificates = self.certify(p, &filled, r)?;
        Ok(FillerResult { missing: Simplex::Triangle(missing), filled, certificates })
    }

    /// Assembles the missing tetrahedron from the triangles of the other
    /// four and checks its equation. The hypotheses are checked afterwards.
    pub fn check_horn_dim4(&self, p: &HornProblem) -> HornResult<FillerResult> {
        p.check_shape()?;
        let k = p.k;
        match k {
            0 => {
                self.witness(&p.edge(0, 1)?, "01")?;
                for t in [[0, 1, 2], [0, 1, 3], [0, 1, 4]] {
                    self.require_iso(&p.triangle(t)?, &label(&t))?;
                }
            }
            4 => {
                self.witness(&p.edge(3, 4)?, "34")?;
                for t in [[0, 3, 4], [1, 3, 4], [2, 3, 4]] {
                    self.require_iso(&p.triangle(t)?, &label(&t))?;
                }
            }
            1..=3 => self.require_iso(&p.triangle([k - 1, k, k + 1])?, &label(&[k - 1, k, k + 1]))?,
            _ => return Err(NerveError::IndexOutOfRange(k, 4).into()),
        }
        let verts: Vec<usize> = (0..5).filter(|&v| v != k).collect();
        let mut faces = Vec::with_capacity(4);
        for skip in 0..4 {
            let tv: Vec<usize> = verts.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
            faces.push(as_triangle(p.sub(&tv)?)?);
        }
        let faces: [Simplex2; 4] = faces.try_into().unwrap();
        let (lhs, rhs) = self.nerve.simplex3_sides(&faces)?;
        let diagram = format!("equation of the tetrahedron {}", label(&verts));
        if lhs != rhs {
            return Err(HornError::EquationFailure { diagram, lhs: Box::new(lhs), rhs: Box::new(rhs) });
        }
        let mut r = Report::new();
        r.pass(diagram);
        let missing = Simplex3 { faces: Box::new(faces) };
        let mut all = Vec::with_capacity(5);
        for i in 0..5 {
            all.push(if i == k { missing.clone() } else { as_tetrahedron(p.faces[i].clone().unwrap())? });
        }
        let filled = Simplex::Four(Simplex4Boundary { faces: Box::new(all.try_into().unwrap()) });
        let certificates = self.certify(p, &filled, r)?;
        Ok(FillerResult { missing: Simplex::Tetrahedron(missing), filled, certificates })
    }

    /// Marks face `k` of a cell whose other marked data follow the
    /// thinness pattern: for `m = 2` a witness for the target edge is
    /// built, for `m = 3` the target map is shown invertible.
    pub fn check_thinness(&self, m: usize, k: usize, cell: &Simplex) -> HornResult<ThinnessOutcome> {
        if cell.dim() != m || k > m {
            return Err(HornError::Malformed(format!("thinness {m},{k} on a cell of dimension {}", cell.dim())));
        }
        match m {
            2 => self.thin2(k, &as_triangle(cell.clone())?),
            3 => self.thin3(k, &as_tetrahedron(cell.clone())?),
            _ => {
                let mut report = Report::new();
                report.pass(format!("thinness m={m} holds by coskeletality"));
                Ok(ThinnessOutcome { witness: None, report })
            }
        }
    }

    fn thin2(&self, k: usize, t: &Simplex2) -> HornResult<ThinnessOutcome> {
        let calc = self.calc();
        self.require_iso(t, "012")?;
        let phi = &t.map;
        let (target, w) = match k {
            1 => {
                let (w01, w12) = (self.witness(&t.m01, "01")?, self.witness(&t.m12, "12")?);
                let base = calc.compose_witness(&w01, &w12)?;
                (&t.m02, calc.transfer_witness(&base, phi)?)
            }
            0 => {
                let (w01, w02) = (self.witness(&t.m01, "01")?, self.witness(&t.m02, "02")?);
                let (a, ap, b) = (&w01.forward, &w01.backward, &t.m12.bimod);
                // M12 ≅ M01' ⊗ M02
                let psi = calc.chain_maps(&[
                    &calc.unit_left_inv(b)?,
                    &self.inv(&calc.rwhisker_map(&w01.eps, b)?)?,
                    &calc.assoc(ap, a, b)?,
                    &calc.lwhisker_map(ap, phi)?,
                ])?;
                let base = calc.compose_witness(&calc.invert_witness(&w01), &w02)?;
                (&t.m12, calc.transfer_witness(&base, &self.inv(&psi)?)?)
            }
            2 => {
                let (w12, w02) = (self.witness(&t.m12, "12")?, self.witness(&t.m02, "02")?);
                let (a, b, bp) = (&t.m01.bimod, &w12.forward, &w12.backward);
                // M01 ≅ M02 ⊗ M12'
                let psi = calc.chain_maps(&[
                    &calc.unit_right_inv(a)?,
                    &self.inv(&calc.lwhisker_map(a, &w12.eta)?)?,
                    &calc.assoc_inv(a, b, bp)?,
                    &calc.rwhisker_map(phi, bp)?,
                ])?;
                let base = calc.compose_witness(&w02, &calc.invert_witness(&w12))?;
                (&t.m01, calc.transfer_witness(&base, &self.inv(&psi)?)?)
            }
            _ => return Err(NerveError::IndexOutOfRange(k, 2).into()),
        };
        let mut report = Report::new();
        report.holds("witness is for the target edge", w.forward == target.bimod, "witness is for another bimodule");
        report.extend("witness", calc.validate_witness(&w)?);
        Ok(ThinnessOutcome { witness: Some(w), report })
    }

    fn thin3(&self, k: usize, t: &Simplex3) -> HornResult<ThinnessOutcome> {
        let calc = self.calc();
        let (p123, p023, p013, p012) = (t.phi123(), t.phi023(), t.phi013(), t.phi012());
        let (a, b, c) = (&p012.m01.bimod, &p012.m12.bimod, &p123.m12.bimod);
        let mut report = Report::new();
        match k {
            0 => {
                self.witness(&p012.m01, "01").or_else(|_| self.witness(&p013.m01, "01"))?;
                for (f, n) in [(p012, "012"), (p013, "013"), (p023, "023")] {
                    self.require_iso(f, n)?;
                }
                let whiskered = calc.lwhisker_map(a, &p123.map)?;
                let solved = calc.chain_maps(&[
                    &calc.assoc_inv(a, b, c)?,
                    &calc.rwhisker_map(&p012.map, c)?,
                    &p023.map,
                    &self.inv(&p013.map)?,
                ])?;
                report.equal("M01 ⊗ φ123 solved from the equation", whiskered.map.clone(), solved.map);
                report.holds("M01 ⊗ φ123 invertible", calc.is_iso_map(&whiskered), "not invertible");
                report.holds("φ123 invertible", calc.is_iso_map(&p123.map), "not invertible");
            }
            1 => {
                for (f, n) in [(p012, "012"), (p013, "013"), (p123, "123")] {
                    self.require_iso(f, n)?;
                }
                let solved = calc.chain_maps(&[
                    &self.inv(&calc.rwhisker_map(&p012.map, c)?)?,
                    &calc.assoc(a, b, c)?,
                    &calc.lwhisker_map(a, &p123.map)?,
                    &p013.map,
                ])?;
                report.equal("φ023 solved from the equation", p023.map.map.clone(), solved.map);
                report.holds("φ023 invertible", calc.is_iso_map(&p023.map), "not invertible");
            }
            2 => {
                for (f, n) in [(p012, "012"), (p023, "023"), (p123, "123")] {
                    self.require_iso(f, n)?;
                }
                let solved = calc.chain_maps(&[
                    &self.inv(&calc.lwhisker_map(a, &p123.map)?)?,
                    &calc.assoc_inv(a, b, c)?,
                    &calc.rwhisker_map(&p012.map, c)?,
                    &p023.map,
                ])?;
                report.equal("φ013 solved from the equation", p013.map.map.clone(), solved.map);
                report.holds("φ013 invertible", calc.is_iso_map(&p013.map), "not invertible");
            }
            3 => {
                self.witness(&p123.m12, "23").or_else(|_| self.witness(&p023.m12, "23"))?;
                for (f, n) in [(p023, "023"), (p123, "123"), (p013, "013")] {
                    self.require_iso(f, n)?;
                }
                let whiskered = calc.rwhisker_map(&p012.map, c)?;
                let solved = calc.chain_maps(&[
                    &calc.assoc(a, b, c)?,
                    &calc.lwhisker_map(a, &p123.map)?,
                    &p013.map,
                    &self.inv(&p023.map)?,
                ])?;
                report.equal("φ012 ⊗ M23 solved from the equation", whiskered.map.clone(), solved.map);
                report.holds("φ012 ⊗ M23 invertible", calc.is_iso_map(&whiskered), "not invertible");
                report.holds("φ012 invertible", calc.is_iso_map(&p012.map), "not invertible");
            }
            _ => return Err(NerveError::IndexOutOfRange(k, 3).into()),
        }
        Ok(ThinnessOutcome { witness: None, report })
    }

    /// A tetrahedron whose triangles are invertible and whose edges `02`
    /// and `13` carry witnesses has all its edges invertible; over a
    /// 4-simplex with tail vertex `4`, the remaining triangles through `4`
    /// are invertible too.
    pub fn saturate(&self, cell: &Simplex) -> HornResult<SaturationOutcome> {
        match cell {
            Simplex::Tetrahedron(t) => self.saturate_tetrahedron(t),
            Simplex::Four(b) => self.saturate_tail(b),
            _ => Err(HornError::Malformed("saturation needs a tetrahedron or a 4-simplex".into())),
        }
    }

    fn saturate_tetrahedron(&self, t: &Simplex3) -> HornResult<SaturationOutcome> {
        let calc = self.calc();
        let (p123, p023, p013, p012) = (t.phi123(), t.phi023(), t.phi013(), t.phi012());
        for (f, n) in [(p012, "012"), (p013, "013"), (p023, "023"), (p123, "123")] {
            self.require_iso(f, n)?;
        }
        let w02 = self.witness(&p012.m02, "02").or_else(|_| self.witness(&p023.m01, "02"))?;
        let w13 = self.witness(&p123.m02, "13").or_else(|_| self.witness(&p013.m12, "13"))?;
        let (m01, m12, m23) = (&p012.m01.bimod, &p012.m12.bimod, &p123.m12.bimod);
        let (m02p, m13, m13p) = (&w02.backward, &w13.forward, &w13.backward);
        let m02 = &w02.forward;

        // M12' = M02' ⊗ M01
        let x = calc.balanced_tensor(m02p, m01)?.result;
        let eps = calc.chain_maps(&[&calc.assoc(m02p, m01, m12)?, &calc.lwhisker_map(m02p, &p012.map)?, &w02.eps])?;
        let swap = calc.compose_maps(&p013.map, &self.inv(&p023.map)?)?;
        let psi = calc.chain_maps(&[
            &calc.unit_right_inv(&x)?,
            &self.inv(&calc.lwhisker_map(&x, &w13.eta)?)?,
            &calc.assoc_inv(&x, m13, m13p)?,
            &calc.rwhisker_map(&calc.assoc(m02p, m01, m13)?, m13p)?,
            &calc.rwhisker_map(&calc.lwhisker_map(m02p, &swap)?, m13p)?,
            &calc.rwhisker_map(&calc.assoc_inv(m02p, m02, m23)?, m13p)?,
            &calc.rwhisker_map(&calc.rwhisker_map(&w02.eps, m23)?, m13p)?,
            &calc.rwhisker_map(&calc.unit_left(m23)?, m13p)?,
        ])?;
        let eta = calc.chain_maps(&[
            &calc.lwhisker_map(m12, &psi)?,
            &calc.assoc_inv(m12, m23, m13p)?,
            &calc.rwhisker_map(&p123.map, m13p)?,
            &w13.eta,
        ])?;
        let w12 = EquivalenceWitness { forward: m12.clone(), backward: x, eta, eps };

        let mut report = Report::new();
        report.extend("12", calc.validate_witness(&w12)?);
        let with = |tri: &Simplex2, ws: &[&EquivalenceWitness]| {
            let mut tri = tri.clone();
            for e in [&mut tri.m01, &mut tri.m12, &mut tri.m02] {
                if let Some(w) = ws.iter().find(|w| w.forward == e.bimod) {
                    e.witness = Some(Box::new((*w).clone()));
                }
            }
            tri
        };
        let w01 = self.thin2(2, &with(p012, &[&w12, &w02]))?;
        report.extend("01", w01.report);
        let w01 = w01.witness.unwrap();
        let w23 = self.thin2(0, &with(p123, &[&w12, &w13]))?;
        report.extend("23", w23.report);
        let w23 = w23.witness.unwrap();
        let w03 = self.thin2(1, &with(p013, &[&w01, &w13]))?;
        report.extend("03", w03.report);
        let w03 = w03.witness.unwrap();
        let witnesses = vec![("01".into(), w01), ("12".into(), w12), ("23".into(), w23), ("03".into(), w03)];
        Ok(SaturationOutcome { witnesses, report })
    }

    fn saturate_tail(&self, b: &Simplex4Boundary) -> HornResult<SaturationOutcome> {
        let calc = self.calc();
        let s = Simplex::Four(b.clone());
        let tri = |v: [usize; 3]| -> HornResult<Simplex2> { as_triangle(sub_simplex(&s, &v)?) };
        for v in [[0, 2, 4], [1, 3, 4]] {
            self.require_iso(&tri(v)?, &label(&v))?;
        }
        let base = self.saturate_tetrahedron(&b.faces[4])?;
        let mut report = Report::new();
        report.extend("0123", base.report);
        let w: BTreeMap<String, EquivalenceWitness> = base.witnesses.iter().cloned().collect();

        let (p012, p024, p124) = (tri([0, 1, 2])?, tri([0, 2, 4])?, tri([1, 2, 4])?);
        let (p123, p134) = (tri([1, 2, 3])?, tri([1, 3, 4])?);
        let (m01, m12, m24, m34) = (&p012.m01.bimod, &p012.m12.bimod, &p124.m12.bimod, &p134.m12.bimod);
        // M01 ⊗ φ124 has a right inverse from the tetrahedron 0124 and a
        // left inverse from 1234, so it is invertible
        let right = calc.chain_maps(&[
            &calc.assoc_inv(m01, m12, m24)?,
            &calc.rwhisker_map(&p012.map, m24)?,
            &p024.map,
        ])?;
        let left = calc.chain_maps(&[&calc.rwhisker_map(&p123.map, m34)?, &p134.map])?;
        report.holds("ᾱ⁻¹ • (φ012 ⊗ M24) • φ024 invertible", calc.is_iso_map(&right), "not invertible");
        report.holds("(φ123 ⊗ M34) • φ134 invertible", calc.is_iso_map(&left), "not invertible");
        let whiskered = calc.lwhisker_map(m01, &p124.map)?;
        report.holds("M01 ⊗ φ124 invertible", calc.is_iso_map(&whiskered), "not invertible");
        report.holds("φ124 invertible", calc.is_iso_map(&p124.map), "not invertible");

        let attach = |t: &Simplex3| {
            let mut t = t.clone();
            for f in t.faces.iter_mut() {
                for e in [&mut f.m01, &mut f.m12, &mut f.m02] {
                    if let Some(wi) = w.values().find(|wi| wi.forward == e.bimod) {
                        e.witness = Some(Box::new(wi.clone()));
                    }
                }
            }
            t
        };
        // 0124 with φ014 at face 2, 1234 with φ234 at face 0, 0134 with
        // φ034 at face 1
        for (skip, k, name) in [(3usize, 2usize, "φ014"), (0, 0, "φ234"), (2, 1, "φ034")] {
            let out = self.thin3(k, &attach(&b.faces[skip]))?;
            report.extend(name, out.report);
        }
        Ok(SaturationOutcome { witnesses: base.witnesses, report })
    }
}

fn label(v: &[usize]) -> String {
    v.iter().map(|i| i.to_string()).collect()
}

// ---- generation ----

/// Random valid cells drawn from a universe, with witnesses on edges built
/// from invertible pieces.
pub struct CellGenerator<'a> {
    pub universe: &'a Universe,
    /// Witnesses found for bimodules of the universe, keyed by left monoid
    /// index.
    pub equivalences: Vec<Vec<EquivalenceWitness>>,
    pub complicial: Complicial,
}

/// How the six free triangles of a generated 4-simplex are twisted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistMode {
    /// Every triangle an isomorphism.
    Invertible,
    /// Triangle `024` an arbitrary map; every other sampled triangle feeds
    /// an inverse in some filler.
    General,
}

impl<'a> CellGenerator<'a> {
    /// Finds a witness for every bimodule of the universe whose inverse has
    /// carrier size at most `witness_budget`.
    pub fn new(universe: &'a Universe, witness_budget: usize) -> Result<Self, CalcError> {
        let calc = &universe.calc;
        let mut equivalences = vec![Vec::new(); universe.monoids.len()];
        for (i, row) in universe.bimodules.iter().enumerate() {
            for m in row.iter().flatten() {
                match calc.find_equivalence_witness(m, witness_budget) {
                    Ok(w) => equivalences[i].push(w),
                    Err(CalcError::NotFound(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(CellGenerator { universe, equivalences, complicial: Complicial::new(calc.clone()) })
    }

    pub fn equivalence_count(&self) -> usize {
        self.equivalences.iter().map(Vec::len).sum()
    }

    /// Four composable edges; edge `i` is an equivalence when `invertible[i]`.
    pub fn random_spine(&self, rng: &mut SampleRng, invertible: [bool; 4]) -> Vec<Simplex1> {
        let u = self.universe;
        let n = u.monoids.len();
        'retry: loop {
            let mut at = rng.gen_range(0..n);
            let mut out = Vec::with_capacity(4);
            for &inv in &invertible {
                if inv {
                    let Some(w) = self.equivalences[at].choose(rng) else { continue 'retry };
                    at = u.index_of(&w.forward.right).unwrap();
                    out.push(Simplex1::marked(w.clone()));
                } else {
                    let to = rng.gen_range(0..n);
                    let Some(m) = u.bimodules[at][to].choose(rng) else { continue 'retry };
                    at = to;
                    out.push(Simplex1::plain(m.clone()));
                }
            }
            return out;
        }
    }

    /// The composite triangle on `e01, e12` post-composed with a random
    /// isomorphism, or with a random map when `invertible` is false.
    pub fn random_triangle(&self, rng: &mut SampleRng, e01: &Simplex1, e12: &Simplex1, invertible: bool) -> HornResult<Simplex2> {
        let calc = self.complicial.calc();
        let u = self.universe;
        let t = calc.balanced_tensor(&e01.bimod, &e12.bimod)?;
        let small = calc.c.size(&t.result.carrier) <= u.max_size;
        let twist = if !small {
            calc.id_map(&t.result)
        } else if invertible {
            u.isos_from(&t.result)?.choose(rng).cloned().unwrap_or_else(|| calc.id_map(&t.result))
        } else {
            u.random_map_from(rng, &t.result)?
        };
        let target = match (&e01.witness, &e12.witness) {
            (Some(w01), Some(w12)) if calc.is_iso_map(&twist) => {
                Simplex1::marked(calc.transfer_witness(&calc.compose_witness(w01, w12)?, &twist)?)
            }
            _ => Simplex1::plain(twist.dst.clone()),
        };
        Ok(self.complicial.nerve.triangle(e01.clone(), e12.clone(), target, twist)?)
    }

    /// A valid 4-simplex over `spine`: six triangles are sampled, three are
    /// solved by inner dimension-3 fillers, and the last tetrahedron is
    /// checked.
    pub fn random_simplex4(&self, rng: &mut SampleRng, spine: &[Simplex1], mode: TwistMode) -> HornResult<Simplex4Boundary> {
        let free = mode == TwistMode::Invertible;
        let [e01, e12, e23, e34] = [&spine[0], &spine[1], &spine[2], &spine[3]];
        let t012 = self.random_triangle(rng, e01, e12, true)?;
        let t123 = self.random_triangle(rng, e12, e23, true)?;
        let t234 = self.random_triangle(rng, e23, e34, true)?;
        let t023 = self.random_triangle(rng, &t012.m02, e23, true)?;
        let t134 = self.random_triangle(rng, &t123.m02, e34, true)?;
        let t024 = self.random_triangle(rng, &t012.m02, &t234.m02, free)?;

        let fill = |faces: [Option<Simplex2>; 4], k: usize| -> HornResult<Simplex3> {
            let p = HornProblem { m: 3, k, faces: faces.into_iter().map(|f| f.map(Simplex::Triangle)).collect() };
            let r = self.complicial.fill_horn_dim3(&p)?;
            if !r.certificates.passed() {
                return Err(HornError::Malformed(format!("generated filler failed: {}", r.certificates.first_failure().unwrap().diagram)));
            }
            as_tetrahedron(r.filled)
        };
        let c0123 = fill([Some(t123.clone()), Some(t023.clone()), None, Some(t012.clone())], 2)?;
        let t013 = c0123.phi013().clone();
        let c1234 = fill([Some(t234.clone()), Some(t134.clone()), None, Some(t123.clone())], 2)?;
        let t124 = c1234.phi013().clone();
        let c0124 = fill([Some(t124.clone()), Some(t024.clone()), None, Some(t012.clone())], 2)?;
        let t014 = c0124.phi013().clone();
        let c0134 = fill([Some(t134.clone()), None, Some(t014.clone()), Some(t013.clone())], 1)?;
        let t034 = c0134.phi023().clone();
        let c0234 = Simplex3 { faces: Box::new([t234, t034, t024, t023]) };
        Ok(Simplex4Boundary { faces: Box::new([c1234, c0234, c0134, c0124, c0123]) })
    }
}

// ---- brute force ----

/// Every filler of the inner 2-horn on `e01, e12` whose third edge lies in
/// `targets` or is the canonical balanced tensor.
pub fn brute_force_inner2(calc: &Calculus, e01: &Bimodule, e12: &Bimodule, targets: &[Bimodule]) -> Result<Vec<BimoduleMap>, CalcError> {
    let t = calc.balanced_tensor(e01, e12)?.result;
    let mut out = Vec::new();
    let mut seen_canonical = false;
    for p in targets.iter().chain(std::iter::once(&t)) {
        if *p == t {
            if seen_canonical {
                continue;
            }
            seen_canonical = true;
        }
        match calc.enumerate_maps(&t, p, SEARCH_CAP) {
            Ok(maps) => out.extend(maps),
            Err(CalcError::BudgetExceeded(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Every map for face 1 of `tetra` making the tetrahedron equation hold,
/// with the other faces fixed.
pub fn brute_force_inner3(nerve: &Nerve, tetra: &Simplex3) -> Result<Vec<BimoduleMap>, HornError> {
    let calc = &nerve.calc;
    let d1 = tetra.phi023();
    let src = calc.balanced_tensor(&d1.m01.bimod, &d1.m12.bimod)?.result;
    let mut out = Vec::new();
    for f in calc.enumerate_maps(&src, &d1.m02.bimod, SEARCH_CAP)? {
        let mut faces = (*tetra.faces).clone();
        faces[1].map = f.clone();
        let (l, r) = nerve.simplex3_sides(&faces)?;
        if l == r {
            out.push(f);
        }
    }
    Ok(out)
}

// ---- the verification matrix ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Coherence(CoherenceLaw),
    Horn,
    Thinness,
    Saturation,
    /// Sampling a 4-simplex failed before any axiom could be checked.
    Generation,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Coherence(l) => write!(f, "coherence {}", coherence_name(*l)),
            Axiom::Horn => write!(f, "horn"),
            Axiom::Thinness => write!(f, "thinness"),
            Axiom::Saturation => write!(f, "saturation"),
            Axiom::Generation => write!(f, "generation"),
        }
    }
}

pub fn coherence_name(l: CoherenceLaw) -> &'static str {
    match l {
        CoherenceLaw::Pentagon => "pentagon",
        CoherenceLaw::Triangle => "triangle",
        CoherenceLaw::LeftUnitorAssociator => "left unitor/associator",
        CoherenceLaw::RightUnitorAssociator => "right unitor/associator",
        CoherenceLaw::Bifunctoriality => "bifunctoriality",
    }
}

/// `(axiom, dimension, index)`; saturation uses the tail length `ℓ` as its
/// index, coherence laws use zeros.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProblemKey {
    pub axiom: Axiom,
    pub dim: i32,
    pub k: i32,
}

impl fmt::Display for ProblemKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axiom {
            Axiom::Coherence(_) => write!(f, "{}", self.axiom),
            Axiom::Saturation => write!(f, "saturation l={}", self.k),
            Axiom::Generation => write!(f, "{}", self.axiom),
            _ => write!(f, "{} m={} k={}", self.axiom, self.dim, self.k),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatrixEntry {
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct ComplicialMatrix {
    pub entries: BTreeMap<ProblemKey, MatrixEntry>,
    pub equivalences: usize,
    pub simplices: usize,
}

impl ComplicialMatrix {
    fn record(&mut self, key: ProblemKey, outcome: Result<(), String>) {
        let e = self.entries.entry(key).or_default();
        match outcome {
            Ok(()) => e.passed += 1,
            Err(why) => {
                e.failed += 1;
                e.first_failure.get_or_insert(why);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.values().all(|e| e.failed == 0)
    }

    pub fn first_failure(&self) -> Option<(&ProblemKey, &MatrixEntry)> {
        self.entries.iter().find(|(_, e)| e.failed > 0)
    }

    pub fn count(&self, axiom: Axiom, dim: i32, k: i32) -> usize {
        self.entries.get(&ProblemKey { axiom, dim, k }).map_or(0, |e| e.passed + e.failed)
    }
}

impl fmt::Display for ComplicialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, e) in &self.entries {
            match &e.first_failure {
                None => writeln!(f, "pass {key} ({} problems)", e.passed)?,
                Some(why) => writeln!(f, "FAIL {key} ({} of {} failed): {why}", e.failed, e.passed + e.failed)?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_size: usize,
    pub witness_budget: usize,
    /// Number of generated 4-simplices.
    pub samples: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_size: 2, witness_budget: 4, samples: 12, seed: 0 }
    }
}

fn verdict(r: HornResult<Report>, context: &str) -> Result<(), String> {
    match r {
        Ok(rep) => match rep.first_failure() {
            None => Ok(()),
            Some(c) => Err(format!("{context}: {}: {}", c.diagram, c.failure.as_ref().unwrap())),
        },
        Err(e) => Err(format!("{context}: {e}")),
    }
}

impl Complicial {
    fn horn_applies(&self, cell: &Simplex, k: usize) -> bool {
        let m = cell.dim();
        let tri_iso = |v: [usize; 3]| {
            sub_simplex(cell, &v).ok().is_some_and(|t| matches!(&t, Simplex::Triangle(t) if self.calc().is_iso_map(&t.map)))
        };
        let edge_marked = |i, j| matches!(sub_simplex(cell, &[i, j]), Ok(Simplex::Edge(e)) if e.witness.is_some());
        match (m, k) {
            (1, _) | (2, 1) => true,
            (2, 0) => edge_marked(0, 1),
            (2, 2) => edge_marked(1, 2),
            (3, 0) => edge_marked(0, 1) && tri_iso([0, 1, 2]) && tri_iso([0, 1, 3]),
            (3, 3) => edge_marked(2, 3) && tri_iso([0, 2, 3]) && tri_iso([1, 2, 3]),
            (4, 0) => edge_marked(0, 1) && tri_iso([0, 1, 2]) && tri_iso([0, 1, 3]) && tri_iso([0, 1, 4]),
            (4, 4) => edge_marked(3, 4) && tri_iso([0, 3, 4]) && tri_iso([1, 3, 4]) && tri_iso([2, 3, 4]),
            (_, k) => tri_iso([k - 1, k, k + 1]),
        }
    }

    fn thinness_applies(&self, cell: &Simplex, k: usize) -> bool {
        let m = cell.dim();
        let marked = |f: usize| self.nerve.is_marked(&cell.face(f).unwrap());
        let extra = (k == 0 || marked(k - 1)) && (k == m || marked(k + 1));
        extra && self.nerve.is_marked(cell) && self.horn_applies(cell, k)
    }

    /// Runs every horn, thinness and saturation problem extracted from
    /// `budget.samples` generated 4-simplices, after the coherence laws of
    /// the underlying category.
    pub fn verify(&self, budget: &Budget) -> Result<ComplicialMatrix, CalcError> {
        let calc = self.calc();
        let mut mx = ComplicialMatrix::default();
        let coh = check_coherence(&calc.c, &calc.c.objects(budget.max_size));
        for e in &coh.entries {
            let key = ProblemKey { axiom: Axiom::Coherence(e.law), dim: 0, k: 0 };
            let outcome = match &e.failure {
                None => Ok(()),
                Some((l, r)) => Err(format!("objects {:?}: lhs {l} != rhs {r}", e.objs.iter().map(|o| o.to_string()).collect::<Vec<_>>())),
            };
            mx.record(key, outcome);
        }

        let universe = Universe::build(calc, budget.max_size)?;
        let generator = CellGenerator::new(&universe, budget.witness_budget)?;
        mx.equivalences = generator.equivalence_count();
        let horn = |m: i32, k: i32| ProblemKey { axiom: Axiom::Horn, dim: m, k };

        for (i, a) in universe.monoids.iter().enumerate() {
            for k in 0..2 {
                let mut faces = vec![Some(Simplex::Vertex(a.clone())), Some(Simplex::Vertex(a.clone()))];
                faces[k] = None;
                let p = HornProblem { m: 1, k, faces };
                let ctx = format!("monoid {i} k={k}");
                mx.record(horn(1, k as i32), verdict(self.fill_horn(&p).map(|f| f.certificates), &ctx));
            }
        }

        let mut r = rng(budget.seed);
        for s in 0..budget.samples {
            let (invertible, mode) = match s % 3 {
                0 => ([true; 4], TwistMode::Invertible),
                1 => (r.gen(), TwistMode::Invertible),
                _ => (r.gen(), TwistMode::General),
            };
            let spine = generator.random_spine(&mut r, invertible);
            let four = match generator.random_simplex4(&mut r, &spine, mode) {
                Ok(b) => b,
                Err(e) => {
                    mx.record(ProblemKey { axiom: Axiom::Generation, dim: 4, k: 0 }, Err(format!("sample {s}: generation failed: {e}")));
                    continue;
                }
            };
            mx.simplices += 1;
            let cell = Simplex::Four(four.clone());
            let ctx = format!("sample {s}");
            for k in 0..5 {
                if self.horn_applies(&cell, k) {
                    mx.record(horn(4, k as i32), self.run_horn(&cell, k, &ctx));
                }
            }
            for (ti, t) in four.faces.iter().enumerate() {
                let tc = Simplex::Tetrahedron(t.clone());
                let ctx = format!("sample {s} tetrahedron {ti}");
                for k in 0..4 {
                    if self.horn_applies(&tc, k) {
                        mx.record(horn(3, k as i32), self.run_horn(&tc, k, &ctx));
                    }
                    if self.thinness_applies(&tc, k) {
                        let key = ProblemKey { axiom: Axiom::Thinness, dim: 3, k: k as i32 };
                        mx.record(key, verdict(self.check_thinness(3, k, &tc).map(|o| o.report), &ctx));
                    }
                }
            }
            let mut triangles: Vec<Simplex2> = Vec::new();
            for t in four.faces.iter() {
                for f in t.faces.iter() {
                    if !triangles.contains(f) {
                        triangles.push(f.clone());
                    }
                }
            }
            for (ti, t) in triangles.iter().enumerate() {
                let tc = Simplex::Triangle(t.clone());
                let ctx = format!("sample {s} triangle {ti}");
                for k in 0..3 {
                    if self.horn_applies(&tc, k) {
                        mx.record(horn(2, k as i32), self.run_horn(&tc, k, &ctx));
                    }
                    if self.thinness_applies(&tc, k) {
                        let key = ProblemKey { axiom: Axiom::Thinness, dim: 2, k: k as i32 };
                        mx.record(key, verdict(self.check_thinness(2, k, &tc).map(|o| o.report), &ctx));
                    }
                }
            }
            if invertible[..3].iter().all(|&b| b) && mode == TwistMode::Invertible {
                let stripped = strip_for_saturation(&four);
                let key = |l| ProblemKey { axiom: Axiom::Saturation, dim: 3, k: l };
                let tetra = Simplex::Tetrahedron(stripped.faces[4].clone());
                mx.record(key(-1), verdict(self.saturate(&tetra).map(|o| o.report), &ctx));
                mx.record(key(0), verdict(self.saturate(&Simplex::Four(stripped)).map(|o| o.report), &ctx));
            }
        }
        Ok(mx)
    }

    /// Drops face `k` of `cell`, fills, and compares with the original
    /// where the filler is unique.
    fn run_horn(&self, cell: &Simplex, k: usize, ctx: &str) -> Result<(), String> {
        let p = HornProblem::from_cell(cell, k).map_err(|e| format!("{ctx}: {e}"))?;
        let ctx = format!("{ctx} k={k}");
        verdict(self.fill_horn(&p).map(|f| f.certificates), &ctx)
    }
}

/// Keeps witnesses only on the bimodules of edges `02` and `13`.
fn strip_for_saturation(b: &Simplex4Boundary) -> Simplex4Boundary {
    let s = Simplex::Four(b.clone());
    let keep: Vec<Bimodule> = [[0, 2], [1, 3]]
        .iter()
        .map(|v| match sub_simplex(&s, v) {
            Ok(Simplex::Edge(e)) => e.bimod,
            _ => unreachable!(),
        })
        .collect();
    let mut out = b.clone();
    for t in out.faces.iter_mut() {
        for f in t.faces.iter_mut() {
            for e in [&mut f.m01, &mut f.m12, &mut f.m02] {
                if !keep.contains(&e.bimod) {
                    e.witness = None;
                }
            }
        }
    }
    out
}

/// Runs [`Complicial::verify`] on a fresh calculus over `calc`.
pub fn verify_complicial(calc: &Calculus, budget: &Budget) -> Result<ComplicialMatrix, CalcError> {
    Complicial::new(calc.clone()).verify(budget)
}
