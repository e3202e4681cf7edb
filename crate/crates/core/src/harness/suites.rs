use rand::seq::SliceRandom;
use rand::Rng;

use crate::bimodule::{Bimodule, CalcResult, Calculus, EquivalenceWitness, Monoid};
use crate::complicial::{verify_complicial, Budget, CellGenerator, TwistMode};
use crate::gen::{rng, SampleRng, Universe};
use crate::harness::format::{InstanceFile, InstanceSpec, Kind};
use crate::harness::oracle::compare_tensor;
use crate::harness::{SuiteReport, Verdict};
use crate::kernel::{check_bifunctoriality, check_coherence, CoherenceReport, Mor, Obj};
use crate::nerve::{Nerve, Simplex};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Coherence,
    Calculus,
    Nerve,
    Axioms,
    Oracle,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Coherence => "coherence",
            Command::Calculus => "calculus",
            Command::Nerve => "nerve",
            Command::Axioms => "axioms",
            Command::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub max_set_size: usize,
    pub max_dim: usize,
    pub witness_budget: usize,
    pub seed: u64,
    /// Sampled tuples per calculus family.
    pub tuples: usize,
    /// Generated triangles for the nerve suite.
    pub triangles: usize,
    /// Generated 4-simplices for the nerve and axiom suites.
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_set_size: 2, max_dim: 2, witness_budget: 4, seed: 0, tuples: 50, triangles: 20, samples: 12 }
    }
}

/// Carrier size bound for enumeration in `spec`.
pub fn size_bound(spec: &InstanceSpec, opts: &Options) -> usize {
    match spec.kind {
        Kind::FinsetDisjoint => opts.max_set_size,
        Kind::Finvect => opts.max_dim,
        Kind::Product => spec.children.iter().map(|c| size_bound(c, opts)).min().unwrap_or(0),
        Kind::Opposite => spec.children.first().map_or(0, |c| size_bound(c, opts)),
    }
}

fn record(out: &mut SuiteReport, family: &str, params: String, r: Result<Report, impl std::fmt::Display>) {
    match r {
        Ok(r) => match r.first_failure() {
            None => out.pass(family, params),
            Some(c) => out.fail(family, params, format!("{}: {}", c.diagram, c.failure.as_ref().unwrap())),
        },
        Err(e) => out.fail(family, params, format!("error: {e}")),
    }
}

fn record_coherence(out: &mut SuiteReport, r: &CoherenceReport) {
    for e in &r.entries {
        let family = format!("coherence {}", crate::complicial::coherence_name(e.law));
        let objs: Vec<String> = e.objs.iter().map(ToString::to_string).collect();
        let params = objs.join(", ");
        match &e.failure {
            None => out.pass(family, params),
            Some((l, r)) => out.fail(family, params, format!("lhs {l} != rhs {r}")),
        }
    }
}

pub fn run_suite(cmd: Command, file: &InstanceFile, opts: &Options) -> SuiteReport {
    let mut out = SuiteReport::new(cmd.name(), file.calc.c.name(), opts.seed);
    match cmd {
        Command::Validate => validate(file, &mut out),
        Command::Coherence => coherence(file, opts, &mut out),
        Command::Calculus => with_universe(file, opts, &mut out, calculus),
        Command::Nerve => nerve(file, opts, &mut out),
        Command::Axioms => axioms(file, opts, &mut out),
        Command::Oracle => oracle(file, opts, &mut out),
    }
    out
}

fn validate(file: &InstanceFile, out: &mut SuiteReport) {
    match file.validate() {
        Ok(sections) => {
            for (entity, r) in sections {
                let family = entity.split(' ').next().unwrap_or("entity").to_string();
                record(out, &family, entity, Ok::<_, String>(r));
            }
        }
        Err(e) => out.fail("validate", "instance", e.to_string()),
    }
}

fn coherence(file: &InstanceFile, opts: &Options, out: &mut SuiteReport) {
    let c = &file.calc.c;
    let objs = c.objects(size_bound(&file.spec, opts));
    record_coherence(out, &check_coherence(c, &objs));
    let mut g = rng(opts.seed);
    let mut quads: Vec<(Mor, Mor, Mor, Mor)> = Vec::new();
    let pick = |g: &mut SampleRng, x: &Obj| -> Mor {
        loop {
            let y = objs.choose(g).unwrap();
            if let Some(f) = c.hom(x, y).choose(g) {
                return f.clone();
            }
        }
    };
    for _ in 0..50 {
        let (x, x2) = (objs.choose(&mut g).unwrap(), objs.choose(&mut g).unwrap());
        let f = pick(&mut g, x);
        let f2 = pick(&mut g, &f.dst);
        let h = pick(&mut g, x2);
        let h2 = pick(&mut g, &h.dst);
        quads.push((f, f2, h, h2));
    }
    record_coherence(out, &check_bifunctoriality(c, &quads));
}

fn with_universe(file: &InstanceFile, opts: &Options, out: &mut SuiteReport, body: fn(&Universe, &Options, &mut SuiteReport)) {
    match Universe::build(&file.calc, size_bound(&file.spec, opts)) {
        Ok(u) if u.monoids.is_empty() => out.skip("universe", "", "no monoids within the size bound"),
        Ok(u) => body(&u, opts, out),
        Err(e) => out.fail("universe", "", e.to_string()),
    }
}

fn sizes(calc: &Calculus, ms: &[&Bimodule]) -> String {
    let s: Vec<String> = ms.iter().map(|m| calc.c.size(&m.carrier).to_string()).collect();
    format!("sizes [{}]", s.join(","))
}

/// An equivalence out of `a`, found by search among a few bimodules of the
/// universe, or the identity. Inverses are only sought within the universe
/// bound; larger carriers make the search dominate the suite.
fn equivalence_from(u: &Universe, g: &mut SampleRng, a: &Monoid, budget: usize) -> CalcResult<EquivalenceWitness> {
    let budget = budget.min(u.max_size);
    let i = u.index_of(a).unwrap();
    for _ in 0..6 {
        let j = g.gen_range(0..u.monoids.len());
        if let Some(m) = u.bimodules[i][j].choose(g) {
            if let Ok(w) = u.calc.find_equivalence_witness(m, budget) {
                return Ok(w);
            }
        }
    }
    u.calc.identity_witness(a)
}

fn calculus(u: &Universe, opts: &Options, out: &mut SuiteReport) {
    let calc = &u.calc;
    let mut g = rng(opts.seed);
    for i in 0..opts.tuples {
        let chain = u.random_chain(&mut g, 4);
        let [m, n, p, q] = [&chain[0], &chain[1], &chain[2], &chain[3]];
        let params = format!("tuple {i} {}", sizes(calc, &[m, n, p, q]));
        let maps = (|| -> CalcResult<_> {
            let f = u.random_map_from(&mut g, m)?;
            let f2 = u.random_map_from(&mut g, &f.dst)?;
            let h = u.random_map_from(&mut g, n)?;
            let h2 = u.random_map_from(&mut g, &h.dst)?;
            let k = u.random_map_from(&mut g, p)?;
            let iso = if g.gen_bool(0.5) { u.random_automorphism(&mut g, n)? } else { h.clone() };
            let w = equivalence_from(u, &mut g, &m.left, opts.witness_budget)?;
            Ok((f, f2, h, h2, k, iso, w))
        })();
        let (f, f2, h, h2, k, iso, w) = match maps {
            Ok(x) => x,
            Err(e) => {
                out.fail("sampling", params, e.to_string());
                continue;
            }
        };
        record(out, "tensor functoriality", params.clone(), calc.check_tensor_functorial(&f, &f2, &h, &h2));
        record(out, "composite bimodule", params.clone(), calc.check_composite_bimodule(m, n));
        record(out, "induced associator", params.clone(), calc.check_induced_alpha(m, n, p));
        record(out, "associativity", params.clone(), calc.check_associativity(m, n, p));
        record(out, "naturality", params.clone(), calc.check_naturality_balanced(&f, &h, &k));
        record(out, "pentagon", params.clone(), calc.check_pentagon_balanced(m, n, p, q));
        record(out, "unitor triangles", params.clone(), calc.check_unitor_triangles(m, n));
        record(out, "unitality", params.clone(), calc.check_unitality(m));
        record(out, "interchange", params.clone(), calc.check_interchange(&f, &h));
        record(out, "reductions", params.clone(), calc.check_reductions(&f, &w.eta.src, &w.eta));
        record(out, "epi cancellation", params.clone(), calc.check_epi_cancellation(m, &h, &h2));
        record(out, "tensor with iso", params, calc.check_tensor_with_iso(m, &iso));
    }
}

fn nerve(file: &InstanceFile, opts: &Options, out: &mut SuiteReport) {
    let nerve = Nerve::new(file.calc.clone());
    let d = &file.declared;
    let declared: Vec<Simplex> = d
        .triangles
        .iter()
        .map(|(_, t)| Simplex::Triangle(t.clone()))
        .chain(d.tetrahedra.iter().map(|(_, t)| Simplex::Tetrahedron(t.clone())))
        .collect();
    for (cell, name) in declared.iter().zip(d.triangles.iter().map(|x| &x.0).chain(d.tetrahedra.iter().map(|x| &x.0))) {
        record(out, "declared cell", name.clone(), nerve.validate_cell(cell));
    }
    if !declared.is_empty() {
        let r = nerve.close_under_faces(&declared).and_then(|cells| nerve.check_simplicial_identities(&cells));
        record(out, "simplicial identities", "declared cells".into(), r);
    }
    with_universe(file, opts, out, generated_cells);
}

fn generated_cells(u: &Universe, opts: &Options, out: &mut SuiteReport) {
    let gen = match CellGenerator::new(u, opts.witness_budget) {
        Ok(g) => g,
        Err(e) => return out.fail("generator", "", e.to_string()),
    };
    let nerve = &gen.complicial.nerve;
    let mut g = rng(opts.seed);
    for i in 0..opts.triangles {
        let flags = [g.gen(), g.gen(), false, false];
        let spine = gen.random_spine(&mut g, flags);
        let params = format!("triangle {i}");
        let t = match gen.random_triangle(&mut g, &spine[0], &spine[1], i % 2 == 0) {
            Ok(t) => t,
            Err(e) => {
                out.fail("generated triangle", params, e.to_string());
                continue;
            }
        };
        let cell = Simplex::Triangle(t.clone());
        record(out, "generated triangle", params.clone(), nerve.validate_cell(&cell));
        let r = nerve.close_under_faces(&[cell]).and_then(|cells| nerve.check_simplicial_identities(&cells));
        record(out, "simplicial identities", params.clone(), r);
        for j in 0..3 {
            let r = nerve.degenerate_triangle(&t, j).and_then(|s| nerve.validate_cell(&Simplex::Tetrahedron(s)));
            record(out, "degenerate tetrahedron", format!("{params} s{j}"), r);
        }
    }
    for i in 0..opts.samples {
        let flags: [bool; 4] = g.gen();
        let spine = gen.random_spine(&mut g, flags);
        let params = format!("4-simplex {i}");
        match gen.random_simplex4(&mut g, &spine, TwistMode::Invertible) {
            Ok(b) => record(out, "coskeletal 4-simplex", params, nerve.validate_cell(&Simplex::Four(b))),
            Err(e) => out.fail("coskeletal 4-simplex", params, e.to_string()),
        }
    }
}

fn axioms(file: &InstanceFile, opts: &Options, out: &mut SuiteReport) {
    let budget = Budget {
        max_size: size_bound(&file.spec, opts),
        witness_budget: opts.witness_budget,
        samples: opts.samples,
        seed: opts.seed,
    };
    match verify_complicial(&file.calc, &budget) {
        Ok(mx) => {
            for (key, e) in &mx.entries {
                let n = e.passed + e.failed;
                let params = if e.failed == 0 { format!("{n} problems") } else { format!("{} of {n} problems", e.failed) };
                let verdict = if e.failed == 0 { Verdict::Pass } else { Verdict::Fail };
                out.push(key.to_string(), params, verdict, e.first_failure.clone());
            }
        }
        Err(e) => out.fail("axioms", "", e.to_string()),
    }
}

fn oracle(file: &InstanceFile, opts: &Options, out: &mut SuiteReport) {
    let mut sampled = SuiteReport::new("calculus", String::new(), opts.seed);
    with_universe(file, opts, &mut sampled, calculus);
    out.rows.extend(sampled.rows.into_iter().filter(|r| r.family == "universe"));
    let mut tensors = file.calc.cached_tensors();
    tensors.sort_by_cached_key(|t| format!("{:?}", t.factors));
    for (i, t) in tensors.iter().enumerate() {
        let (m, n) = &t.factors;
        let c = &file.calc.c;
        let params = format!("#{i} {} ⊗ {} over {}", m.carrier, n.carrier, c.size(&m.right.carrier));
        match compare_tensor(&file.spec, t) {
            Ok(None) => out.pass("oracle tensor", params),
            Ok(Some(why)) => out.fail("oracle tensor", params, why),
            Err(e) => out.skip("oracle tensor", params, e.to_string()),
        }
    }
}
