use morita::bimodule::{Bimodule, CalcError, Calculus};
use morita::gen::{rng, Universe};
use morita::harness::format::InstanceSpec;
use morita::harness::oracle::compare_tensor;
use morita::instances::finset::table;
use morita::instances::finvect::{dim, matrix};
use morita::instances::{finset_disjoint, finvect, product_instance};
use morita::kernel::Obj;
use morita::report::Report;
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn universe(calc: &Calculus, max: usize) -> Universe {
    Universe::build(calc, max).unwrap()
}

fn pairs(u: &Universe) -> Vec<(Bimodule, Bimodule)> {
    let n = u.monoids.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in &u.bimodules[i][j] {
                    for p in &u.bimodules[j][k] {
                        out.push((m.clone(), p.clone()));
                    }
                }
            }
        }
    }
    out
}

/// Number of functions `M ⊔ N -> {0, 1}` that identify `x·b` with `b·y`,
/// where the actions of the trivial parts are read off the tables directly.
fn finset_balanced_count(m: &Bimodule, n: &Bimodule) -> usize {
    let card = |x: &Obj| match x {
        Obj::Set(k) => *k,
        _ => unreachable!(),
    };
    let (dm, db, dn) = (card(&m.carrier), card(&m.right.carrier), card(&n.carrier));
    let (ract, lact) = (table(&m.ract), table(&n.lact));
    let mut rel = Vec::new();
    for x in 0..dm {
        rel.push((ract[x], x));
    }
    for b in 0..db {
        rel.push((ract[dm + b], dm + lact[b]));
    }
    for y in 0..dn {
        rel.push((dm + y, dm + lact[db + y]));
    }
    (0..1usize << (dm + dn)).filter(|h| rel.iter().all(|&(a, b)| (h >> a) & 1 == (h >> b) & 1)).count()
}

/// Number of functionals on `M ⊗ N` killing `(x·b) ⊗ y - x ⊗ (b·y)`.
fn finvect_balanced_count(p: u64, m: &Bimodule, n: &Bimodule) -> usize {
    let (dm, db, dn) = (dim(&m.carrier), dim(&m.right.carrier), dim(&n.carrier));
    let (ract, lact) = (matrix(&m.ract), matrix(&n.lact));
    let width = dm * dn;
    let total = (p as usize).pow(width as u32);
    (0..total)
        .filter(|&code| {
            let v: Vec<u64> = (0..width).map(|i| (code / (p as usize).pow(i as u32)) as u64 % p).collect();
            (0..dm).all(|x| {
                (0..db).all(|b| {
                    (0..dn).all(|y| {
                        let left: u64 = (0..dm).map(|x2| v[x2 * dn + y] * u64::from(ract.get(x2, x * db + b))).sum();
                        let right: u64 = (0..dn).map(|y2| v[x * dn + y2] * u64::from(lact.get(y2, b * dn + y))).sum();
                        (left + p * p * 4 - right).is_multiple_of(p)
                    })
                })
            })
        })
        .count()
}

#[test]
fn finset_balanced_tensor_has_the_universal_count() {
    let calc = Calculus::new(finset_disjoint());
    let u = universe(&calc, 2);
    let ps = pairs(&u);
    assert!(ps.len() > 20);
    for (m, n) in ps {
        let t = calc.balanced_tensor(&m, &n).unwrap();
        let Obj::Set(k) = t.result.carrier else { panic!() };
        assert_eq!(1usize << k, finset_balanced_count(&m, &n));
    }
}

#[test]
fn finvect_balanced_tensor_has_the_universal_count() {
    let calc = Calculus::new(finvect(2).unwrap());
    let u = universe(&calc, 2);
    let mut ps = pairs(&u);
    ps.shuffle(&mut rng(1));
    ps.truncate(300);
    for (m, n) in ps {
        let t = calc.balanced_tensor(&m, &n).unwrap();
        assert_eq!(2usize.pow(dim(&t.result.carrier) as u32), finvect_balanced_count(2, &m, &n));
    }
}

#[test]
fn harness_oracle_agrees_on_all_small_pairs() {
    let cases: Vec<(&str, Calculus)> = vec![
        (r#"{"kind":"finset_disjoint"}"#, Calculus::new(finset_disjoint())),
        (r#"{"kind":"finvect","p":3}"#, Calculus::new(finvect(3).unwrap())),
        (
            r#"{"kind":"product","children":[{"kind":"finset_disjoint"},{"kind":"finset_disjoint"}]}"#,
            Calculus::new(product_instance(finset_disjoint(), finset_disjoint())),
        ),
    ];
    for (spec, calc) in cases {
        let spec: InstanceSpec = serde_json::from_str(spec).unwrap();
        let u = universe(&calc, 1);
        for (m, n) in pairs(&u) {
            let t = calc.balanced_tensor(&m, &n).unwrap();
            assert_eq!(compare_tensor(&spec, &t).unwrap(), None);
        }
    }
}

#[test]
fn identity_bimodule_is_a_unit_up_to_size() {
    let calc = Calculus::new(finvect(2).unwrap());
    let u = universe(&calc, 2);
    for row in &u.bimodules {
        for m in row.iter().flatten() {
            let l = calc.balanced_tensor(&calc.identity_bimodule(&m.left), m).unwrap();
            let r = calc.balanced_tensor(m, &calc.identity_bimodule(&m.right)).unwrap();
            assert_eq!(l.result.carrier, m.carrier);
            assert_eq!(r.result.carrier, m.carrier);
        }
    }
}

#[test]
fn tensor_rejects_mismatched_monoids() {
    let calc = Calculus::new(finset_disjoint());
    let u = universe(&calc, 2);
    let a = &u.monoids[0];
    let b = u.monoids.iter().find(|x| *x != a).unwrap();
    let m = u.between(a, a)[0].clone();
    let n = u.between(b, b)[0].clone();
    assert!(matches!(calc.balanced_tensor(&m, &n), Err(CalcError::MonoidMismatch(_))));
}

#[test]
fn witnesses_survive_inversion_composition_and_transfer() {
    let calc = Calculus::new(finset_disjoint());
    let u = universe(&calc, 2);
    let mut found = Vec::new();
    for row in &u.bimodules {
        for m in row.iter().flatten() {
            if let Ok(w) = calc.find_equivalence_witness(m, 4) {
                assert!(calc.validate_witness(&w).unwrap().passed());
                found.push(w);
            }
        }
    }
    assert!(found.len() >= u.monoids.len());
    for w in &found {
        let inv = calc.invert_witness(w);
        assert!(calc.validate_witness(&inv).unwrap().passed());
        let both = calc.compose_witness(w, &inv).unwrap();
        assert!(calc.validate_witness(&both).unwrap().passed());
        for theta in u.isos_from(&w.forward).unwrap() {
            let moved = calc.transfer_witness(w, &theta).unwrap();
            assert_eq!(moved.forward, theta.dst);
            assert!(calc.validate_witness(&moved).unwrap().passed());
        }
    }
}

fn run_tuple(calc: &Calculus, u: &Universe, seed: u64) -> Vec<(&'static str, Report)> {
    let mut g = rng(seed);
    let chain = u.random_chain(&mut g, 4);
    let [m, n, p, q] = [&chain[0], &chain[1], &chain[2], &chain[3]];
    let f = u.random_map_from(&mut g, m).unwrap();
    let f2 = u.random_map_from(&mut g, &f.dst).unwrap();
    let h = u.random_map_from(&mut g, n).unwrap();
    let h2 = u.random_map_from(&mut g, &h.dst).unwrap();
    let k = u.random_map_from(&mut g, p).unwrap();
    let iso = u.random_automorphism(&mut g, n).unwrap();
    let w = calc.identity_witness(&m.left).unwrap();
    vec![
        ("functorial", calc.check_tensor_functorial(&f, &f2, &h, &h2).unwrap()),
        ("composite", calc.check_composite_bimodule(m, n).unwrap()),
        ("induced alpha", calc.check_induced_alpha(m, n, p).unwrap()),
        ("associativity", calc.check_associativity(m, n, p).unwrap()),
        ("naturality", calc.check_naturality_balanced(&f, &h, &k).unwrap()),
        ("pentagon", calc.check_pentagon_balanced(m, n, p, q).unwrap()),
        ("unitor triangles", calc.check_unitor_triangles(m, n).unwrap()),
        ("unitality", calc.check_unitality(m).unwrap()),
        ("interchange", calc.check_interchange(&f, &h).unwrap()),
        ("reductions", calc.check_reductions(&f, &w.eta.src, &w.eta).unwrap()),
        ("epi cancellation", calc.check_epi_cancellation(m, &h, &h2).unwrap()),
        ("tensor with iso", calc.check_tensor_with_iso(m, &iso).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn calculus_identities_hold_on_finset(seed in any::<u64>()) {
        let calc = Calculus::new(finset_disjoint());
        let u = universe(&calc, 2);
        for (name, r) in run_tuple(&calc, &u, seed) {
            prop_assert!(r.passed(), "{}: {:?}", name, r.first_failure());
        }
    }

    #[test]
    fn calculus_identities_hold_on_product(seed in any::<u64>()) {
        let calc = Calculus::new(product_instance(finset_disjoint(), finvect(2).unwrap()));
        let u = universe(&calc, 1);
        for (name, r) in run_tuple(&calc, &u, seed) {
            prop_assert!(r.passed(), "{}: {:?}", name, r.first_failure());
        }
    }

    #[test]
    fn inverse_map_inverts_isos(seed in any::<u64>()) {
        let calc = Calculus::new(finvect(2).unwrap());
        let u = universe(&calc, 2);
        let mut g = rng(seed);
        let m = u.random_chain(&mut g, 1).pop().unwrap();
        let f = u.random_automorphism(&mut g, &m).unwrap();
        let inv = calc.inverse_map(&f).unwrap();
        prop_assert_eq!(calc.compose_maps(&f, &inv).unwrap(), calc.id_map(&m));
    }
}
