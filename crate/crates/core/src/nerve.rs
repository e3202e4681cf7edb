//! The marked nerve: monoids, bimodules, bimodule maps out of balanced
//! tensors, and tetrahedra subject to the associativity equation. Above
//! dimension 3 a simplex is its boundary.

use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::bimodule::{Bimodule, BimoduleMap, CalcError, Calculus, EquivalenceWitness, Monoid};
use crate::kernel::Mor;
use crate::report::Report;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum NerveError {
    #[error("face or degeneracy index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error(transparent)]
    Calc(#[from] CalcError),
}

pub type NerveResult<T> = Result<T, NerveError>;

/// A bimodule, optionally carrying an equivalence witness. Equality and
/// hashing look at the bimodule only.
#[derive(Clone, Debug)]
pub struct Simplex1 {
    pub bimod: Bimodule,
    pub witness: Option<Box<EquivalenceWitness>>,
}

impl PartialEq for Simplex1 {
    fn eq(&self, other: &Self) -> bool {
        self.bimod == other.bimod
    }
}

impl Eq for Simplex1 {}

impl Hash for Simplex1 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bimod.hash(state)
    }
}

impl Simplex1 {
    pub fn plain(bimod: Bimodule) -> Self {
        Simplex1 { bimod, witness: None }
    }

    pub fn marked(w: EquivalenceWitness) -> Self {
        Simplex1 { bimod: w.forward.clone(), witness: Some(Box::new(w)) }
    }

    pub fn source(&self) -> &Monoid {
        &self.bimod.left
    }

    pub fn target(&self) -> &Monoid {
        &self.bimod.right
    }
}

/// `φ: M01 ⊗_{A1} M12 → M02`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex2 {
    pub m01: Simplex1,
    pub m12: Simplex1,
    pub m02: Simplex1,
    pub map: BimoduleMap,
}

/// Faces in order `d0..d3 = φ123, φ023, φ013, φ012`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex3 {
    pub faces: Box<[Simplex2; 4]>,
}

impl Simplex3 {
    pub fn phi123(&self) -> &Simplex2 {
        &self.faces[0]
    }
    pub fn phi023(&self) -> &Simplex2 {
        &self.faces[1]
    }
    pub fn phi013(&self) -> &Simplex2 {
        &self.faces[2]
    }
    pub fn phi012(&self) -> &Simplex2 {
        &self.faces[3]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex4Boundary {
    pub faces: Box<[Simplex3; 5]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Simplex {
    Vertex(Monoid),
    Edge(Simplex1),
    Triangle(Simplex2),
    Tetrahedron(Simplex3),
    Four(Simplex4Boundary),
}

impl Simplex {
    pub fn dim(&self) -> usize {
        match self {
            Simplex::Vertex(_) => 0,
            Simplex::Edge(_) => 1,
            Simplex::Triangle(_) => 2,
            Simplex::Tetrahedron(_) => 3,
            Simplex::Four(_) => 4,
        }
    }

    pub fn face(&self, i: usize) -> NerveResult<Simplex> {
        let n = self.dim();
        if n == 0 || i > n {
            return Err(NerveError::IndexOutOfRange(i, n));
        }
        Ok(match self {
            Simplex::Vertex(_) => unreachable!(),
            Simplex::Edge(e) => Simplex::Vertex(if i == 0 { e.target().clone() } else { e.source().clone() }),
            Simplex::Triangle(t) => Simplex::Edge([&t.m12, &t.m02, &t.m01][i].clone()),
            Simplex::Tetrahedron(t) => Simplex::Triangle(t.faces[i].clone()),
            Simplex::Four(b) => Simplex::Tetrahedron(b.faces[i].clone()),
        })
    }
}

/// Nerve operations over a fixed calculus.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub calc: Calculus,
}

impl Nerve {
    pub fn new(calc: Calculus) -> Self {
        Nerve { calc }
    }

    /// The triangle with the given edges and map; checks that the map
    /// starts at the canonical balanced tensor and ends at `m02`.
    pub fn triangle(&self, m01: Simplex1, m12: Simplex1, m02: Simplex1, map: BimoduleMap) -> NerveResult<Simplex2> {
        let t = self.calc.balanced_tensor(&m01.bimod, &m12.bimod)?;
        if map.src != t.result {
            return Err(NerveError::BoundaryMismatch("triangle map does not start at M01 ⊗ M12".into()));
        }
        if map.dst != m02.bimod {
            return Err(NerveError::BoundaryMismatch("triangle map does not end at M02".into()));
        }
        Ok(Simplex2 { m01, m12, m02, map })
    }

    pub fn identity_edge(&self, a: &Monoid) -> NerveResult<Simplex1> {
        Ok(Simplex1::marked(self.calc.identity_witness(a)?))
    }

    pub fn degeneracy(&self, s: &Simplex, j: usize) -> NerveResult<Simplex> {
        let n = s.dim();
        if j > n || n > 3 {
            return Err(NerveError::IndexOutOfRange(j, n));
        }
        Ok(match s {
            Simplex::Vertex(a) => Simplex::Edge(self.identity_edge(a)?),
            Simplex::Edge(e) => Simplex::Triangle(self.degenerate_edge(e, j)?),
            Simplex::Triangle(t) => Simplex::Tetrahedron(self.degenerate_triangle(t, j)?),
            Simplex::Tetrahedron(t) => Simplex::Four(self.degenerate_tetrahedron(t, j)?),
            Simplex::Four(_) => unreachable!(),
        })
    }

    /// `s0` has map `ℓ̄_M`, `s1` has map `r̄_M`.
    pub fn degenerate_edge(&self, e: &Simplex1, j: usize) -> NerveResult<Simplex2> {
        match j {
            0 => {
                let id = self.identity_edge(e.source())?;
                self.triangle(id, e.clone(), e.clone(), self.calc.unit_left(&e.bimod)?)
            }
            1 => {
                let id = self.identity_edge(e.target())?;
                self.triangle(e.clone(), id, e.clone(), self.calc.unit_right(&e.bimod)?)
            }
            _ => Err(NerveError::IndexOutOfRange(j, 1)),
        }
    }

    pub fn degenerate_triangle(&self, t: &Simplex2, j: usize) -> NerveResult<Simplex3> {
        let d = |e: &Simplex1, k| self.degenerate_edge(e, k);
        let faces = match j {
            0 => [t.clone(), t.clone(), d(&t.m02, 0)?, d(&t.m01, 0)?],
            1 => [d(&t.m12, 0)?, t.clone(), t.clone(), d(&t.m01, 1)?],
            2 => [d(&t.m12, 1)?, d(&t.m02, 1)?, t.clone(), t.clone()],
            _ => return Err(NerveError::IndexOutOfRange(j, 2)),
        };
        Ok(Simplex3 { faces: Box::new(faces) })
    }

    /// Faces from the simplicial identities `d_i s_j`.
    pub fn degenerate_tetrahedron(&self, t: &Simplex3, j: usize) -> NerveResult<Simplex4Boundary> {
        if j > 3 {
            return Err(NerveError::IndexOutOfRange(j, 3));
        }
        let mut faces = Vec::with_capacity(5);
        for i in 0..5 {
            let f = if i < j {
                self.degenerate_triangle(&t.faces[i], j - 1)?
            } else if i == j || i == j + 1 {
                t.clone()
            } else {
                self.degenerate_triangle(&t.faces[i - 1], j)?
            };
            faces.push(f);
        }
        Ok(Simplex4Boundary { faces: faces.into_boxed_slice().try_into().unwrap() })
    }

    /// `d_i d_j = d_{j-1} d_i` for all `i < j` on the faces of `s`.
    pub fn check_boundary(&self, s: &Simplex) -> NerveResult<Report> {
        let mut r = Report::new();
        let n = s.dim();
        if n < 2 {
            return Ok(r);
        }
        for j in 0..=n {
            for i in 0..j {
                let a = s.face(j)?.face(i)?;
                let b = s.face(i)?.face(j - 1)?;
                r.holds(format!("d{i}d{j} = d{}d{i}", j - 1), a == b, "faces disagree");
            }
        }
        Ok(r)
    }

    /// The two sides of `(φ012 ⊗ M23) • φ023 = ᾱ • (M01 ⊗ φ123) • φ013`.
    pub fn simplex3_sides(&self, faces: &[Simplex2; 4]) -> NerveResult<(Mor, Mor)> {
        let calc = &self.calc;
        let [p123, p023, p013, p012] = faces;
        let lhs = calc.compose_maps(&calc.rwhisker_map(&p012.map, &p023.m12.bimod)?, &p023.map)?;
        let rhs = calc.chain_maps(&[
            &calc.assoc(&p012.m01.bimod, &p012.m12.bimod, &p123.m12.bimod)?,
            &calc.lwhisker_map(&p013.m01.bimod, &p123.map)?,
            &p013.map,
        ])?;
        Ok((lhs.map, rhs.map))
    }

    /// Boundary compatibility of the four faces and the tetrahedron
    /// equation.
    pub fn validate_simplex3(&self, faces: &[Simplex2; 4]) -> NerveResult<Report> {
        let s = Simplex::Tetrahedron(Simplex3 { faces: Box::new(faces.clone()) });
        let mut r = self.check_boundary(&s)?;
        if !r.passed() {
            return Err(NerveError::BoundaryMismatch(r.first_failure().unwrap().diagram.clone()));
        }
        for (k, f) in faces.iter().enumerate() {
            r.extend(&format!("face {k}"), self.calc.validate_bimodule_map(&f.map)?);
        }
        r.eq_result("tetrahedron equation", self.simplex3_sides(faces));
        Ok(r)
    }

    /// Accepts a 4-simplex boundary iff its faces fit together and each is
    /// a valid tetrahedron; the nerve is 3-coskeletal, so this determines
    /// the unique filler.
    pub fn coskeletal_fill(&self, b: &Simplex4Boundary) -> NerveResult<Report> {
        let mut r = self.check_boundary(&Simplex::Four(b.clone()))?;
        for (k, f) in b.faces.iter().enumerate() {
            match self.simplex3_sides(&f.faces) {
                Ok((l, rr)) => {
                    r.equal(format!("face {k} equation"), l, rr);
                }
                Err(e) => r.error(format!("face {k} equation"), e),
            }
        }
        Ok(r)
    }

    pub fn is_marked(&self, s: &Simplex) -> bool {
        match s {
            Simplex::Vertex(_) => false,
            Simplex::Edge(e) => e.witness.is_some() || e.bimod == self.calc.identity_bimodule(e.source()),
            Simplex::Triangle(t) => self.calc.is_iso_map(&t.map),
            Simplex::Tetrahedron(_) | Simplex::Four(_) => true,
        }
    }

    /// Face, degeneracy and mixed identities on every cell of `fragment`,
    /// plus validity and marking of every degeneracy produced.
    pub fn check_simplicial_identities(&self, fragment: &[Simplex]) -> NerveResult<Report> {
        let mut r = Report::new();
        for (idx, s) in fragment.iter().enumerate() {
            let n = s.dim();
            r.extend(&format!("cell {idx}"), self.check_boundary(s)?);
            if n > 3 {
                continue;
            }
            for j in 0..=n {
                let sj = self.degeneracy(s, j)?;
                r.holds(format!("cell {idx}: s{j} marked"), self.is_marked(&sj), "degeneracy not marked");
                r.extend(&format!("cell {idx}: s{j}"), self.validate_cell(&sj)?);
                for i in 0..=n + 1 {
                    let lhs = sj.face(i)?;
                    let ok = if i == j || i == j + 1 {
                        lhs == *s
                    } else if i < j {
                        n > 0 && lhs == self.degeneracy(&s.face(i)?, j - 1)?
                    } else {
                        n > 0 && lhs == self.degeneracy(&s.face(i - 1)?, j)?
                    };
                    r.holds(format!("cell {idx}: d{i}s{j}"), ok, "face of degeneracy disagrees");
                }
                if n < 3 {
                    for i in 0..=j {
                        let lhs = self.degeneracy(&sj, i)?;
                        let rhs = self.degeneracy(&self.degeneracy(s, i)?, j + 1)?;
                        r.holds(format!("cell {idx}: s{i}s{j} = s{}s{i}", j + 1), lhs == rhs, "degeneracies disagree");
                    }
                }
            }
        }
        Ok(r)
    }

    /// The invariants of a cell at its own level.
    pub fn validate_cell(&self, s: &Simplex) -> NerveResult<Report> {
        let calc = &self.calc;
        Ok(match s {
            Simplex::Vertex(a) => calc.validate_monoid(a)?,
            Simplex::Edge(e) => {
                let mut r = calc.validate_bimodule(&e.bimod)?;
                if let Some(w) = &e.witness {
                    r.holds("witness matches", w.forward == e.bimod, "witness is for another bimodule");
                    r.extend("witness", calc.validate_witness(w)?);
                }
                r
            }
            Simplex::Triangle(t) => {
                let mut r = calc.validate_bimodule_map(&t.map)?;
                let src = calc.balanced_tensor(&t.m01.bimod, &t.m12.bimod)?.result;
                r.holds("triangle source", t.map.src == src, "map does not start at the balanced tensor");
                r.holds("triangle target", t.map.dst == t.m02.bimod, "map does not end at M02");
                r
            }
            Simplex::Tetrahedron(t) => self.validate_simplex3(&t.faces)?,
            Simplex::Four(b) => self.coskeletal_fill(b)?,
        })
    }

    /// Every face of every cell, recursively, without duplicates.
    pub fn close_under_faces(&self, cells: &[Simplex]) -> NerveResult<Vec<Simplex>> {
        let mut out: Vec<Simplex> = Vec::new();
        let mut stack: Vec<Simplex> = cells.to_vec();
        while let Some(s) = stack.pop() {
            if out.contains(&s) {
                continue;
            }
            if s.dim() > 0 {
                for i in 0..=s.dim() {
                    stack.push(s.face(i)?);
                }
            }
            out.push(s);
        }
        out.sort_by_key(Simplex::dim);
        Ok(out)
    }
}
