//! Instance files: one JSON object per line. The first line names the
//! category; later lines declare monoids, bimodules, maps, canonical
//! tensors, triangles and tetrahedra, each referring to earlier names.
//!
//! Objects are integers (set size or dimension) and pairs `[x, y]` in a
//! product. Morphisms are function tables for sets, row-major matrices for
//! vector spaces, pairs `[f, g]` in a product, and the underlying morphism
//! (pointing the other way) in an opposite category.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::bimodule::{Bimodule, BimoduleMap, CalcError, Calculus, Monoid};
use crate::instances::{finset_disjoint, finvect, func, opposite::op, product::pair_mor, swapped_associator};
use crate::instances::{opposite_instance, product_instance};
use crate::kernel::{MonoidalInstance, Mor, Obj};
use crate::linalg::Matrix;
use crate::nerve::{Nerve, Simplex, Simplex1, Simplex2, Simplex3};
use crate::report::Report;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LoadError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{entity}: {diagram}")]
    Validation { entity: String, diagram: String },
    #[error("cannot read {0}: {1}")]
    Io(String, String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    FinsetDisjoint,
    Finvect,
    Product,
    Opposite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// Finite sets with an associator that swaps the first two blocks.
    SwapAssociator,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct InstanceSpec {
    pub kind: Kind,
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub children: Vec<InstanceSpec>,
    #[serde(default)]
    pub mutation: Option<Mutation>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum Line {
    Instance(InstanceSpec),
    Monoid { name: String, carrier: Value, mult: Value, unit: Value },
    Bimodule { name: String, left: String, right: String, carrier: Value, lact: Value, ract: Value },
    Map { name: String, src: String, dst: String, map: Value },
    Tensor { name: String, left: String, right: String },
    Equivalence { bimodule: String },
    Triangle { name: String, m01: String, m12: String, m02: String, map: Value },
    Tetrahedron { name: String, faces: [String; 4] },
}

/// Declared data, in file order within each table.
#[derive(Clone, Debug, Default)]
pub struct Declared {
    pub monoids: Vec<(String, Monoid)>,
    pub bimodules: Vec<(String, Bimodule)>,
    pub maps: Vec<(String, BimoduleMap)>,
    /// Bimodules whose edges should carry a searched witness.
    pub equivalences: Vec<String>,
    pub triangles: Vec<(String, Simplex2)>,
    pub tetrahedra: Vec<(String, Simplex3)>,
}

impl Declared {
    pub fn bimodule(&self, name: &str) -> Option<&Bimodule> {
        self.bimodules.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }
}

#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub spec: InstanceSpec,
    pub calc: Calculus,
    pub declared: Declared,
}

pub fn build_instance(spec: &InstanceSpec) -> Result<MonoidalInstance, String> {
    let children = |n: usize| -> Result<Vec<MonoidalInstance>, String> {
        if spec.children.len() != n {
            return Err(format!("{:?} takes {n} children, got {}", spec.kind, spec.children.len()));
        }
        spec.children.iter().map(build_instance).collect()
    };
    match (spec.kind, spec.mutation) {
        (Kind::FinsetDisjoint, None) => Ok(finset_disjoint()),
        (Kind::FinsetDisjoint, Some(Mutation::SwapAssociator)) => Ok(swapped_associator()),
        (_, Some(m)) => Err(format!("mutation {m:?} only applies to finset_disjoint")),
        (Kind::Finvect, None) => finvect(spec.p.ok_or("finvect needs a prime p")?).map_err(|e| e.to_string()),
        (Kind::Product, None) => {
            let mut c = children(2)?;
            let right = c.pop().unwrap();
            Ok(product_instance(c.pop().unwrap(), right))
        }
        (Kind::Opposite, None) => Ok(opposite_instance(children(1)?.pop().unwrap())),
    }
}

fn decode_obj(spec: &InstanceSpec, v: &Value) -> Result<Obj, String> {
    match spec.kind {
        Kind::FinsetDisjoint => v.as_u64().map(|n| Obj::Set(n as usize)).ok_or_else(|| format!("expected a set size, got {v}")),
        Kind::Finvect => v.as_u64().map(|n| Obj::Vect(n as usize)).ok_or_else(|| format!("expected a dimension, got {v}")),
        Kind::Product => match v.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(Obj::pair(decode_obj(&spec.children[0], a)?, decode_obj(&spec.children[1], b)?)),
            _ => Err(format!("expected a pair of objects, got {v}")),
        },
        Kind::Opposite => decode_obj(&spec.children[0], v),
    }
}

fn decode_mor(spec: &InstanceSpec, v: &Value, src: &Obj, dst: &Obj) -> Result<Mor, String> {
    match (spec.kind, src, dst) {
        (Kind::FinsetDisjoint, Obj::Set(s), Obj::Set(d)) => {
            let table: Vec<usize> = serde_json::from_value(v.clone()).map_err(|_| format!("expected a function table, got {v}"))?;
            if table.len() != *s || table.iter().any(|&x| x >= *d) {
                return Err(format!("{v} is not a function from {s} elements to {d}"));
            }
            Ok(func(*s, *d, table))
        }
        (Kind::Finvect, Obj::Vect(s), Obj::Vect(d)) => {
            let p = spec.p.ok_or("finvect needs a prime p")?;
            let rows: Vec<Vec<i64>> = serde_json::from_value(v.clone()).map_err(|_| format!("expected a matrix, got {v}"))?;
            if rows.len() != *d || rows.iter().any(|r| r.len() != *s) {
                return Err(format!("{v} is not a {d}x{s} matrix"));
            }
            let m = Matrix::from_rows(p as u32, *d, *s, rows.into_iter().flatten().collect());
            Ok(Mor { src: src.clone(), dst: dst.clone(), data: crate::kernel::MorData::Mat(m) })
        }
        (Kind::Product, Obj::Pair(s1, s2), Obj::Pair(d1, d2)) => match v.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(pair_mor(decode_mor(&spec.children[0], a, s1, d1)?, decode_mor(&spec.children[1], b, s2, d2)?)),
            _ => Err(format!("expected a pair of morphisms, got {v}")),
        },
        (Kind::Opposite, _, _) => Ok(op(decode_mor(&spec.children[0], v, dst, src)?)),
        _ => Err(format!("objects {src} and {dst} do not belong to the instance")),
    }
}

fn first_failure(entity: String, r: &Report) -> Result<(), LoadError> {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(LoadError::Validation { entity, diagram: format!("{}: {}", c.diagram, c.failure.as_ref().unwrap()) }),
    }
}

/// Parses and resolves a file without validating the declared algebra.
pub fn parse_instance_file(text: &str) -> Result<InstanceFile, LoadError> {
    let mut spec: Option<InstanceSpec> = None;
    let mut calc: Option<Calculus> = None;
    let mut declared = Declared::default();
    let mut monoids: BTreeMap<String, Monoid> = BTreeMap::new();
    let mut bimods: BTreeMap<String, Bimodule> = BTreeMap::new();
    let mut tris: BTreeMap<String, Simplex2> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let at = |column: usize, message: String| LoadError::Parse { line: line_no, column, message };
        let line: Line = serde_json::from_str(raw).map_err(|e| at(e.column(), e.to_string()))?;
        let semantic = |m: String| at(1, m);
        if let Line::Instance(s) = line {
            if spec.is_some() {
                return Err(semantic("second instance line".into()));
            }
            calc = Some(Calculus::new(build_instance(&s).map_err(semantic)?));
            spec = Some(s);
            continue;
        }
        let (Some(spec), Some(calc)) = (&spec, &calc) else {
            return Err(semantic("the first line must declare the instance".into()));
        };
        let c = &calc.c;
        let monoid = |n: &str| monoids.get(n).cloned().ok_or_else(|| semantic(format!("unknown monoid {n}")));
        let bimod = |n: &str| bimods.get(n).cloned().ok_or_else(|| semantic(format!("unknown bimodule {n}")));
        let fresh = |n: &str, taken: bool| if taken { Err(semantic(format!("duplicate name {n}"))) } else { Ok(()) };
        match line {
            Line::Instance(_) => unreachable!(),
            Line::Monoid { name, carrier, mult, unit } => {
                fresh(&name, monoids.contains_key(&name))?;
                let x = decode_obj(spec, &carrier).map_err(semantic)?;
                let mult = decode_mor(spec, &mult, &c.tensor_obj(&x, &x), &x).map_err(semantic)?;
                let unit = decode_mor(spec, &unit, &c.unit(), &x).map_err(semantic)?;
                let m = Monoid { carrier: x, mult, unit };
                monoids.insert(name.clone(), m.clone());
                declared.monoids.push((name, m));
            }
            Line::Bimodule { name, left, right, carrier, lact, ract } => {
                fresh(&name, bimods.contains_key(&name))?;
                let (a, b) = (monoid(&left)?, monoid(&right)?);
                let x = decode_obj(spec, &carrier).map_err(semantic)?;
                let lact = decode_mor(spec, &lact, &c.tensor_obj(&a.carrier, &x), &x).map_err(semantic)?;
                let ract = decode_mor(spec, &ract, &c.tensor_obj(&x, &b.carrier), &x).map_err(semantic)?;
                let m = Bimodule { left: a, right: b, carrier: x, lact, ract };
                bimods.insert(name.clone(), m.clone());
                declared.bimodules.push((name, m));
            }
            Line::Map { name, src, dst, map } => {
                let (s, d) = (bimod(&src)?, bimod(&dst)?);
                let map = decode_mor(spec, &map, &s.carrier, &d.carrier).map_err(semantic)?;
                declared.maps.push((name, BimoduleMap { src: s, dst: d, map }));
            }
            Line::Tensor { name, left, right } => {
                fresh(&name, bimods.contains_key(&name))?;
                let t = calc.balanced_tensor(&bimod(&left)?, &bimod(&right)?).map_err(|e| semantic(e.to_string()))?;
                bimods.insert(name.clone(), t.result.clone());
                declared.bimodules.push((name, t.result));
            }
            Line::Equivalence { bimodule } => {
                bimod(&bimodule)?;
                declared.equivalences.push(bimodule);
            }
            Line::Triangle { name, m01, m12, m02, map } => {
                fresh(&name, tris.contains_key(&name))?;
                let (a, b, p) = (bimod(&m01)?, bimod(&m12)?, bimod(&m02)?);
                let src = calc.balanced_tensor(&a, &b).map_err(|e| semantic(e.to_string()))?.result;
                let map = decode_mor(spec, &map, &src.carrier, &p.carrier).map_err(semantic)?;
                let t = Simplex2 {
                    m01: Simplex1::plain(a),
                    m12: Simplex1::plain(b),
                    m02: Simplex1::plain(p.clone()),
                    map: BimoduleMap { src, dst: p, map },
                };
                tris.insert(name.clone(), t.clone());
                declared.triangles.push((name, t));
            }
            Line::Tetrahedron { name, faces } => {
                let mut fs = Vec::with_capacity(4);
                for f in &faces {
                    fs.push(tris.get(f).cloned().ok_or_else(|| semantic(format!("unknown triangle {f}")))?);
                }
                declared.tetrahedra.push((name, Simplex3 { faces: Box::new(fs.try_into().unwrap()) }));
            }
        }
    }
    match (spec, calc) {
        (Some(spec), Some(calc)) => Ok(InstanceFile { spec, calc, declared }),
        _ => Err(LoadError::Parse { line: 1, column: 1, message: "no instance line".into() }),
    }
}

impl InstanceFile {
    /// One report section per declared entity.
    pub fn validate(&self) -> Result<Vec<(String, Report)>, CalcError> {
        let calc = &self.calc;
        let nerve = Nerve::new(calc.clone());
        let d = &self.declared;
        let mut out = Vec::new();
        for (n, m) in &d.monoids {
            out.push((format!("monoid {n}"), calc.validate_monoid(m)?));
        }
        for (n, m) in &d.bimodules {
            out.push((format!("bimodule {n}"), calc.validate_bimodule(m)?));
        }
        for (n, f) in &d.maps {
            out.push((format!("map {n}"), calc.validate_bimodule_map(f)?));
        }
        let cells = d.triangles.iter().map(|(n, t)| (format!("triangle {n}"), Simplex::Triangle(t.clone())));
        let cells = cells.chain(d.tetrahedra.iter().map(|(n, t)| (format!("tetrahedron {n}"), Simplex::Tetrahedron(t.clone()))));
        for (n, cell) in cells {
            let r = match nerve.validate_cell(&cell) {
                Ok(r) => r,
                Err(e) => {
                    let mut r = Report::new();
                    r.error("boundary", e);
                    r
                }
            };
            out.push((n, r));
        }
        Ok(out)
    }
}

/// Reads, parses and validates a file, stopping at the first entity that
/// fails its validator.
pub fn load_instance(path: &std::path::Path) -> Result<InstanceFile, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(path.display().to_string(), e.to_string()))?;
    load_instance_str(&text)
}

pub fn load_instance_str(text: &str) -> Result<InstanceFile, LoadError> {
    let file = parse_instance_file(text)?;
    let sections = file.validate().map_err(|e| LoadError::Validation { entity: "instance".into(), diagram: e.to_string() })?;
    for (entity, r) in &sections {
        first_failure(entity.clone(), r)?;
    }
    Ok(file)
}
