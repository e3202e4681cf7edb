use std::sync::OnceLock;

use morita::bimodule::Calculus;
use morita::complicial::{
    brute_force_inner2, brute_force_inner3, sub_simplex, verify_complicial, Axiom, Budget, CellGenerator, Complicial, HornError,
    HornProblem, TwistMode,
};
use morita::gen::{rng, Universe};
use morita::instances::{finset_disjoint, swapped_associator};
use morita::kernel::CoherenceLaw;
use morita::nerve::{Simplex, Simplex1, Simplex3, Simplex4Boundary};
use proptest::prelude::*;

fn universe() -> &'static Universe {
    static U: OnceLock<Universe> = OnceLock::new();
    U.get_or_init(|| Universe::build(&Calculus::new(finset_disjoint()), 2).unwrap())
}

fn generator() -> &'static CellGenerator<'static> {
    static G: OnceLock<CellGenerator<'static>> = OnceLock::new();
    G.get_or_init(|| CellGenerator::new(universe(), 4).unwrap())
}

fn simplex4(seed: u64, flags: [bool; 4], mode: TwistMode) -> Simplex4Boundary {
    let g = generator();
    let mut r = rng(seed);
    let spine = g.random_spine(&mut r, flags);
    g.random_simplex4(&mut r, &spine, mode).unwrap()
}

fn cx() -> &'static Complicial {
    &generator().complicial
}

fn edge_witnessed(cell: &Simplex, i: usize, j: usize) -> bool {
    matches!(sub_simplex(cell, &[i, j]), Ok(Simplex::Edge(e)) if e.witness.is_some())
}

#[test]
fn dim1_horns_fill_with_identity_edges() {
    for a in &universe().monoids {
        let id = cx().nerve.identity_edge(a).unwrap();
        for k in 0..2 {
            let p = HornProblem::from_cell(&Simplex::Edge(id.clone()), k).unwrap();
            let r = cx().fill_horn(&p).unwrap();
            assert!(r.certificates.passed());
            assert_eq!(r.filled, Simplex::Edge(id.clone()));
        }
    }
}

#[test]
fn outer_dim2_horn_needs_a_witness() {
    let mut checked = 0;
    for seed in 0..32 {
        let cell = Simplex::Four(simplex4(seed, [false; 4], TwistMode::Invertible));
        let Ok(Simplex::Triangle(t)) = sub_simplex(&cell, &[0, 1, 2]) else { panic!() };
        if t.m01.witness.is_some() || t.m01.bimod == cx().calc().identity_bimodule(t.m01.source()) {
            continue;
        }
        let p = HornProblem::from_cell(&Simplex::Triangle(t), 0).unwrap();
        assert!(matches!(cx().fill_horn(&p), Err(HornError::MissingWitness(_))));
        checked += 1;
    }
    assert!(checked > 0);
}

/// Every inner 2-horn on a composable pair of the universe has fillers,
/// the canonical one among them.
#[test]
fn brute_force_inner2_contains_the_constructed_filler() {
    let u = universe();
    let calc = &u.calc;
    let n = u.monoids.len();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in &u.bimodules[i][j] {
                    for q in &u.bimodules[j][k] {
                        let t = calc.balanced_tensor(m, q).unwrap().result;
                        let horn = HornProblem {
                            m: 2,
                            k: 1,
                            faces: vec![Some(Simplex::Edge(Simplex1::plain(q.clone()))), None, Some(Simplex::Edge(Simplex1::plain(m.clone())))],
                        };
                        let r = cx().fill_horn(&horn).unwrap();
                        assert!(r.certificates.passed());
                        let Simplex::Triangle(filled) = &r.filled else { panic!() };
                        let all = brute_force_inner2(calc, m, q, u.between(&m.left, &q.right)).unwrap();
                        assert!(!all.is_empty());
                        assert!(all.contains(&filled.map));
                        assert_eq!(filled.map, calc.id_map(&t));
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn dim4_horn_rejects_a_corrupted_face() {
    let calc = cx().calc();
    let mut caught = 0;
    for seed in 0..64 {
        let mut b = simplex4(seed, [false; 4], TwistMode::Invertible);
        // t034 is face 1 of both c0234 and c0134.
        let t034 = b.faces[1].faces[1].clone();
        let auto = universe().random_automorphism(&mut rng(seed), &t034.m02.bimod).unwrap();
        if auto == calc.id_map(&t034.m02.bimod) {
            continue;
        }
        let corrupted = calc.compose_maps(&t034.map, &auto).unwrap();
        b.faces[1].faces[1].map = corrupted.clone();
        b.faces[2].faces[1].map = corrupted;
        let p = HornProblem::from_cell(&Simplex::Four(b), 1).unwrap();
        match cx().fill_horn(&p) {
            Err(HornError::EquationFailure { lhs, rhs, .. }) => assert_ne!(lhs, rhs),
            other => panic!("seed {seed}: expected an equation failure, got {other:?}"),
        }
        caught += 1;
    }
    assert!(caught > 0, "no sample had a nontrivial automorphism");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Each tetrahedron of a generated 4-simplex is recovered by every
    /// horn filler that applies to it.
    #[test]
    fn dim3_fillers_recover_the_missing_face(seed in any::<u64>(), flags in any::<[bool; 4]>()) {
        let b = simplex4(seed, flags, TwistMode::Invertible);
        let calc = cx().calc();
        for tet in b.faces.iter() {
            let cell = Simplex::Tetrahedron(tet.clone());
            for k in 0..4 {
                let needs = match k {
                    0 => edge_witnessed(&cell, 0, 1),
                    3 => edge_witnessed(&cell, 2, 3),
                    _ => true,
                };
                if !needs {
                    continue;
                }
                let p = HornProblem::from_cell(&cell, k).unwrap();
                let r = cx().fill_horn(&p).unwrap();
                prop_assert!(r.certificates.passed(), "k={}: {:?}", k, r.certificates.first_failure());
                prop_assert_eq!(&r.missing, &cell.face(k).unwrap());
                if k == 1 {
                    let all = brute_force_inner3(&cx().nerve, tet).unwrap();
                    let Simplex::Triangle(m) = &r.missing else { panic!() };
                    prop_assert!(all.contains(&m.map));
                    if calc.is_iso_map(&tet.phi012().map) {
                        prop_assert_eq!(all.len(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn dim4_horns_accept_generated_simplices(seed in any::<u64>(), flags in any::<[bool; 4]>()) {
        let b = simplex4(seed, flags, TwistMode::Invertible);
        let cell = Simplex::Four(b);
        for k in 1..4 {
            let p = HornProblem::from_cell(&cell, k).unwrap();
            let r = cx().fill_horn(&p).unwrap();
            prop_assert!(r.certificates.passed());
            prop_assert_eq!(&r.filled, &cell);
        }
    }

    #[test]
    fn thin_triangles_carry_valid_witnesses(seed in any::<u64>()) {
        let b = simplex4(seed, [true; 4], TwistMode::Invertible);
        let cell = Simplex::Four(b);
        for verts in [[0, 1, 2], [1, 2, 3], [0, 2, 4]] {
            let t = sub_simplex(&cell, &verts).unwrap();
            for k in 0..3 {
                let out = cx().check_thinness(2, k, &t).unwrap();
                prop_assert!(out.report.passed(), "{:?}", out.report.first_failure());
                let w = out.witness.unwrap();
                prop_assert!(cx().calc().validate_witness(&w).unwrap().passed());
                let Simplex::Edge(target) = t.face(k).unwrap() else { panic!() };
                prop_assert_eq!(w.forward, target.bimod);
            }
        }
    }

    #[test]
    fn saturation_produces_valid_witnesses(seed in any::<u64>()) {
        let b = simplex4(seed, [true, true, true, false], TwistMode::Invertible);
        let tet: Simplex3 = b.faces[4].clone();
        let keep = [tet.phi012().m02.bimod.clone(), tet.phi123().m02.bimod.clone()];
        let mut stripped = tet.clone();
        for f in stripped.faces.iter_mut() {
            for e in [&mut f.m01, &mut f.m12, &mut f.m02] {
                if !keep.contains(&e.bimod) {
                    e.witness = None;
                }
            }
        }
        let out = cx().saturate(&Simplex::Tetrahedron(stripped)).unwrap();
        prop_assert!(out.report.passed(), "{:?}", out.report.first_failure());
        prop_assert_eq!(out.witnesses.len(), 4);
        let cell = Simplex::Tetrahedron(tet);
        for (name, w) in &out.witnesses {
            prop_assert!(cx().calc().validate_witness(w).unwrap().passed());
            let v: Vec<usize> = name.bytes().map(|c| usize::from(c - b'0')).collect();
            let Simplex::Edge(e) = sub_simplex(&cell, &v).unwrap() else { panic!() };
            prop_assert_eq!(&w.forward, &e.bimod);
        }
    }
}

#[test]
fn verification_matrix_passes_on_finite_sets() {
    let calc = Calculus::new(finset_disjoint());
    let mx = verify_complicial(&calc, &Budget { samples: 6, ..Budget::default() }).unwrap();
    assert!(mx.passed(), "{mx}");
    for m in 1..=4 {
        for k in 0..=m {
            assert!(mx.count(Axiom::Horn, m, k) > 0, "horn {m} {k} never exercised");
        }
    }
    assert!(mx.count(Axiom::Saturation, 3, -1) > 0);
}

#[test]
fn verification_matrix_flags_the_swapped_associator() {
    let calc = Calculus::new(swapped_associator());
    let mx = verify_complicial(&calc, &Budget { samples: 3, ..Budget::default() }).unwrap();
    let (key, _) = mx.first_failure().unwrap();
    assert_eq!(key.axiom, Axiom::Coherence(CoherenceLaw::Pentagon));
}
