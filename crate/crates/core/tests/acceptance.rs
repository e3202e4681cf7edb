//! One line per acceptance criterion; exits nonzero if any line fails.
//! Runs without the libtest harness so the lines are never captured.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use morita::bimodule::Calculus;
use morita::complicial::{brute_force_inner2, brute_force_inner3, verify_complicial, Axiom, Budget, CellGenerator, HornProblem, TwistMode};
use morita::gen::{rng, Universe};
use morita::harness::{load_instance, run_suite, Command, LoadError, Options, Verdict};
use morita::instances::{finset_disjoint, finvect};
use morita::kernel::check_coherence;
use morita::nerve::{Simplex, Simplex1};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

const SAMPLES: [&str; 2] = ["finset_sample.jsonl", "finvect_sample.jsonl"];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("took {t:.1?}, limit {limit:?}"))
    }
}

fn suite(cmd: Command, file: &str, opts: &Options) -> Result<morita::harness::SuiteReport, String> {
    let f = load_instance(&fixture(file)).map_err(|e| format!("{file}: {e}"))?;
    let r = run_suite(cmd, &f, opts);
    if let Some(row) = r.failures().next() {
        return Err(format!("{file}: {} {}: {}", row.family, row.params, row.witness.clone().unwrap_or_default()));
    }
    Ok(r)
}

fn coherence() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for (c, bound) in [(finset_disjoint(), 3), (finvect(2).unwrap(), 2)] {
        let r = check_coherence(&c, &c.objects(bound));
        if let Some(e) = r.failures().next() {
            return Err(format!("{}: {:?} on {:?}", c.name(), e.law, e.objs));
        }
        checks += r.entries.len();
    }
    within(Duration::from_secs(10), start)?;
    Ok(format!("{checks} instances in {:.1?}", start.elapsed()))
}

fn calculus() -> Outcome {
    let start = Instant::now();
    let opts = Options { tuples: 50, ..Options::default() };
    let mut rows = 0;
    for file in SAMPLES {
        let r = suite(Command::Calculus, file, &opts)?;
        for fam in ["tensor functoriality", "naturality", "pentagon", "reductions", "epi cancellation", "interchange"] {
            let n = r.family(fam).filter(|row| row.verdict == Verdict::Pass).count();
            if n < 50 {
                return Err(format!("{file}: only {n} tuples for {fam}"));
            }
        }
        rows += r.counts().pass;
    }
    within(Duration::from_secs(120), start)?;
    Ok(format!("{rows} rows in {:.1?}", start.elapsed()))
}

fn oracle() -> Outcome {
    let opts = Options { tuples: 50, ..Options::default() };
    let mut agreed = 0;
    for file in SAMPLES {
        let r = suite(Command::Oracle, file, &opts)?;
        let n = r.family("oracle tensor").filter(|row| row.verdict == Verdict::Pass).count();
        if n == 0 {
            return Err(format!("{file}: no tensors compared"));
        }
        agreed += n;
    }
    Ok(format!("{agreed} tensors agree"))
}

fn nerve() -> Outcome {
    let opts = Options { triangles: 20, ..Options::default() };
    let mut total = 0;
    for file in SAMPLES {
        let r = suite(Command::Nerve, file, &opts)?;
        let tri = r.family("generated triangle").count();
        let degen = r.family("degenerate tetrahedron").count();
        if tri < 20 || degen < 60 {
            return Err(format!("{file}: {tri} triangles, {degen} degenerate tetrahedra"));
        }
        total += r.counts().pass;
    }
    // Degenerate edges and triangles of the unit level.
    for calc in [Calculus::new(finset_disjoint()), Calculus::new(finvect(2).unwrap())] {
        let u = Universe::build(&calc, 2).map_err(|e| e.to_string())?;
        let gen = CellGenerator::new(&u, 4).map_err(|e| e.to_string())?;
        let nerve = &gen.complicial.nerve;
        for row in &u.bimodules {
            for m in row.iter().flatten() {
                let e = Simplex1::plain(m.clone());
                for j in 0..2 {
                    let s = nerve.degenerate_edge(&e, j).map_err(|e| e.to_string())?;
                    let cell = Simplex::Triangle(s);
                    let r = nerve.validate_cell(&cell).map_err(|e| e.to_string())?;
                    if !r.passed() || !nerve.is_marked(&cell) {
                        return Err(format!("s{j} of an edge on {}", calc.c.name()));
                    }
                    total += 1;
                }
            }
        }
        for a in &u.monoids {
            let id = nerve.identity_edge(a).map_err(|e| e.to_string())?;
            if !nerve.validate_cell(&Simplex::Edge(id)).map_err(|e| e.to_string())?.passed() {
                return Err(format!("identity edge on {}", calc.c.name()));
            }
            total += 1;
        }
    }
    Ok(format!("{total} checks"))
}

fn axioms() -> Outcome {
    let start = Instant::now();
    let mut problems = 0;
    for calc in [Calculus::new(finset_disjoint()), Calculus::new(finvect(2).unwrap())] {
        let mx = verify_complicial(&calc, &Budget::default()).map_err(|e| e.to_string())?;
        if let Some((key, e)) = mx.first_failure() {
            return Err(format!("{}: {key}: {}", calc.c.name(), e.first_failure.clone().unwrap_or_default()));
        }
        for m in 1..=4 {
            for k in 0..=m {
                if mx.count(Axiom::Horn, m, k) == 0 {
                    return Err(format!("{}: horn {m},{k} never generated", calc.c.name()));
                }
            }
        }
        for m in 2..=3 {
            for k in 0..=m {
                if mx.count(Axiom::Thinness, m, k) == 0 {
                    return Err(format!("{}: thinness {m},{k} never generated", calc.c.name()));
                }
            }
        }
        for l in [-1, 0] {
            if mx.count(Axiom::Saturation, 3, l) == 0 {
                return Err(format!("{}: saturation {l} never generated", calc.c.name()));
            }
        }
        problems += mx.entries.values().map(|e| e.passed).sum::<usize>();
    }
    within(Duration::from_secs(300), start)?;
    Ok(format!("{problems} problems in {:.1?}", start.elapsed()))
}

fn brute_force() -> Outcome {
    let calc = Calculus::new(finset_disjoint());
    let u = Universe::build(&calc, 2).map_err(|e| e.to_string())?;
    let gen = CellGenerator::new(&u, 4).map_err(|e| e.to_string())?;
    let cx = &gen.complicial;
    let n = u.monoids.len();
    let mut inner2 = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in &u.bimodules[i][j] {
                    for q in &u.bimodules[j][k] {
                        let horn = HornProblem {
                            m: 2,
                            k: 1,
                            faces: vec![Some(Simplex::Edge(Simplex1::plain(q.clone()))), None, Some(Simplex::Edge(Simplex1::plain(m.clone())))],
                        };
                        let r = cx.fill_horn(&horn).map_err(|e| e.to_string())?;
                        let Simplex::Triangle(t) = &r.filled else { return Err("filler is not a triangle".into()) };
                        let all = brute_force_inner2(&calc, m, q, u.between(&m.left, &q.right)).map_err(|e| e.to_string())?;
                        if !all.contains(&t.map) {
                            return Err(format!("Λ1[2] on {} ⊗ {}: constructive filler missing", m.carrier, q.carrier));
                        }
                        inner2 += 1;
                    }
                }
            }
        }
    }
    let mut inner3 = 0;
    let mut g = rng(0);
    for _ in 0..12 {
        let flags: [bool; 4] = rand::Rng::gen(&mut g);
        let spine = gen.random_spine(&mut g, flags);
        let b = gen.random_simplex4(&mut g, &spine, TwistMode::Invertible).map_err(|e| e.to_string())?;
        for tet in b.faces.iter() {
            let cell = Simplex::Tetrahedron(tet.clone());
            let p = HornProblem::from_cell(&cell, 1).map_err(|e| e.to_string())?;
            let r = cx.fill_horn(&p).map_err(|e| e.to_string())?;
            let Simplex::Triangle(t) = &r.missing else { return Err("missing face is not a triangle".into()) };
            let all = brute_force_inner3(&cx.nerve, tet).map_err(|e| e.to_string())?;
            if !all.contains(&t.map) {
                return Err("Λ1[3]: constructive filler missing".into());
            }
            inner3 += 1;
        }
    }
    Ok(format!("{inner2} Λ1[2] and {inner3} Λ1[3] horns"))
}

fn mutations() -> Outcome {
    let cases = [
        ("corrupted_tetrahedron.jsonl", "tetrahedron c0123"),
        ("nonassociative_monoid.jsonl", "monoid W"),
        ("nonequivariant_map.jsonl", "map swap"),
    ];
    let mut caught = Vec::new();
    for (file, entity) in cases {
        match load_instance(&fixture(file)) {
            Err(LoadError::Validation { entity: e, diagram }) if e == entity && !diagram.is_empty() => caught.push(e),
            other => return Err(format!("{file}: {other:?}")),
        }
    }
    let f = load_instance(&fixture("swapped_associator.jsonl")).map_err(|e| e.to_string())?;
    let r = run_suite(Command::Coherence, &f, &Options::default());
    match r.failures().find(|row| row.family == "coherence pentagon") {
        Some(row) if row.witness.is_some() => caught.push(format!("pentagon {}", row.params)),
        _ => return Err("swapped associator passed the pentagon".into()),
    }
    Ok(caught.join("; "))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("coherence", coherence),
        ("calculus", calculus),
        ("oracle", oracle),
        ("nerve", nerve),
        ("complicial axioms", axioms),
        ("brute-force fillers", brute_force),
        ("mutation sensitivity", mutations),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("pass criterion {} {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL criterion {} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
