use std::sync::OnceLock;

use morita::bimodule::Calculus;
use morita::complicial::{CellGenerator, TwistMode};
use morita::gen::{rng, Universe};
use morita::harness::load_instance_str;
use morita::harness::parse_instance_file;
use morita::instances::finset_disjoint;
use morita::nerve::{Nerve, NerveError, Simplex, Simplex1};
use proptest::prelude::*;

fn universe() -> &'static Universe {
    static U: OnceLock<Universe> = OnceLock::new();
    U.get_or_init(|| Universe::build(&Calculus::new(finset_disjoint()), 2).unwrap())
}

fn generator() -> &'static CellGenerator<'static> {
    static G: OnceLock<CellGenerator<'static>> = OnceLock::new();
    G.get_or_init(|| CellGenerator::new(universe(), 4).unwrap())
}

const SAMPLE: &str = include_str!("../fixtures/finset_sample.jsonl");
const CORRUPTED: &str = include_str!("../fixtures/corrupted_tetrahedron.jsonl");

#[test]
fn triangle_faces_follow_vertex_deletion() {
    let f = load_instance_str(SAMPLE).unwrap();
    let t = &f.declared.triangles[0].1;
    let cell = Simplex::Triangle(t.clone());
    assert_eq!(cell.face(0).unwrap(), Simplex::Edge(t.m12.clone()));
    assert_eq!(cell.face(1).unwrap(), Simplex::Edge(t.m02.clone()));
    assert_eq!(cell.face(2).unwrap(), Simplex::Edge(t.m01.clone()));
    assert!(matches!(cell.face(3), Err(NerveError::IndexOutOfRange(3, 2))));
    let Simplex::Edge(e) = cell.face(2).unwrap() else { panic!() };
    assert_eq!(Simplex::Edge(e.clone()).face(0).unwrap(), Simplex::Vertex(e.target().clone()));
    assert_eq!(Simplex::Edge(e.clone()).face(1).unwrap(), Simplex::Vertex(e.source().clone()));
}

#[test]
fn declared_tetrahedron_validates_and_corruption_is_caught() {
    let f = load_instance_str(SAMPLE).unwrap();
    let nerve = Nerve::new(f.calc.clone());
    let tet = Simplex::Tetrahedron(f.declared.tetrahedra[0].1.clone());
    assert!(nerve.validate_cell(&tet).unwrap().passed());
    assert!(nerve.check_boundary(&tet).unwrap().passed());

    let bad = parse_instance_file(CORRUPTED).unwrap();
    let nerve = Nerve::new(bad.calc.clone());
    let r = nerve.validate_cell(&Simplex::Tetrahedron(bad.declared.tetrahedra[0].1.clone())).unwrap();
    let fail = r.first_failure().expect("tetrahedron equation must fail");
    assert!(fail.diagram.contains("tetrahedron equation"));
}

#[test]
fn triangle_rejects_a_map_from_the_wrong_source() {
    let f = load_instance_str(SAMPLE).unwrap();
    let nerve = Nerve::new(f.calc.clone());
    let t = &f.declared.triangles[0].1;
    let other = &f.declared.triangles[1].1;
    let r = nerve.triangle(t.m01.clone(), t.m12.clone(), t.m02.clone(), other.map.clone());
    assert!(matches!(r, Err(NerveError::BoundaryMismatch(_))));
}

#[test]
fn degenerate_edges_use_the_unitors() {
    let f = load_instance_str(SAMPLE).unwrap();
    let calc = &f.calc;
    let nerve = Nerve::new(calc.clone());
    let m = Simplex1::plain(f.declared.bimodule("M").unwrap().clone());
    let s0 = nerve.degenerate_edge(&m, 0).unwrap();
    let s1 = nerve.degenerate_edge(&m, 1).unwrap();
    assert_eq!(s0.map, calc.unit_left(&m.bimod).unwrap());
    assert_eq!(s1.map, calc.unit_right(&m.bimod).unwrap());
    assert!(nerve.is_marked(&Simplex::Triangle(s0)));
    assert!(nerve.is_marked(&Simplex::Triangle(s1)));
    assert!(!nerve.is_marked(&Simplex::Edge(m)));
}

#[test]
fn degenerate_triangles_of_declared_cells_satisfy_their_equations() {
    let f = load_instance_str(SAMPLE).unwrap();
    let nerve = Nerve::new(f.calc.clone());
    for (_, t) in &f.declared.triangles {
        for j in 0..3 {
            let s = nerve.degenerate_triangle(t, j).unwrap();
            let r = nerve.validate_cell(&Simplex::Tetrahedron(s)).unwrap();
            assert!(r.passed(), "s{j}: {:?}", r.first_failure());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_triangles_satisfy_simplicial_identities(seed in any::<u64>(), iso in any::<bool>(), flags in any::<[bool; 2]>()) {
        let g = generator();
        let nerve = &g.complicial.nerve;
        let mut r = rng(seed);
        let spine = g.random_spine(&mut r, [flags[0], flags[1], false, false]);
        let t = g.random_triangle(&mut r, &spine[0], &spine[1], iso).unwrap();
        let cells = nerve.close_under_faces(&[Simplex::Triangle(t)]).unwrap();
        prop_assert!(cells.iter().filter(|c| c.dim() == 0).count() <= 3);
        let rep = nerve.check_simplicial_identities(&cells).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn generated_four_simplices_are_coskeletal(seed in any::<u64>(), flags in any::<[bool; 4]>()) {
        let g = generator();
        let nerve = &g.complicial.nerve;
        let mut r = rng(seed);
        let spine = g.random_spine(&mut r, flags);
        let b = g.random_simplex4(&mut r, &spine, TwistMode::General).unwrap();
        let cell = Simplex::Four(b);
        prop_assert!(nerve.validate_cell(&cell).unwrap().passed());
        prop_assert!(nerve.check_boundary(&cell).unwrap().passed());
        for i in 0..5 {
            let face = cell.face(i).unwrap();
            prop_assert!(nerve.validate_cell(&face).unwrap().passed());
            let rep = nerve.check_simplicial_identities(&[face]).unwrap();
            prop_assert!(rep.passed(), "{:?}", rep.first_failure());
        }
    }
}
