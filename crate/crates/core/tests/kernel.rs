use morita::instances::{finset_disjoint, finvect, func, opposite_instance, product_instance, swapped_associator, FinVect};
use morita::kernel::{check_coherence, CoherenceLaw, MonoidalInstance, Mor, Obj};
use morita::linalg::Matrix;
use proptest::prelude::*;

fn fv(p: u64) -> MonoidalInstance {
    finvect(p).unwrap()
}

/// Number of maps `h` out of `f.dst` into `Set(2)` with `f • h = g • h`.
fn balanced_into_two(f: &[usize], g: &[usize], n: usize) -> usize {
    (0..1usize << n)
        .filter(|h| f.iter().zip(g).all(|(&a, &b)| (h >> a) & 1 == (h >> b) & 1))
        .count()
}

/// Number of functionals `v` on `F_p^n` with `v • f = v • g`.
fn balanced_functionals(p: u32, f: &Matrix, g: &Matrix) -> usize {
    let n = f.rows;
    let total = (p as usize).pow(n as u32);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let v: Vec<u32> = (0..n)
                .map(|_| {
                    let d = (c % p as usize) as u32;
                    c /= p as usize;
                    d
                })
                .collect();
            (0..f.cols).all(|j| {
                let s: u64 = (0..n).map(|i| u64::from(v[i]) * u64::from(f.get(i, j)) + u64::from(v[i]) * u64::from(p - g.get(i, j))).sum();
                s.is_multiple_of(u64::from(p))
            })
        })
        .count()
}

#[test]
fn coherence_holds_for_the_shipped_instances() {
    let cases = [
        (finset_disjoint(), 3),
        (fv(2), 2),
        (fv(3), 2),
        (product_instance(finset_disjoint(), fv(2)), 2),
        (opposite_instance(finset_disjoint()), 2),
    ];
    for (c, bound) in cases {
        let r = check_coherence(&c, &c.objects(bound));
        assert!(r.passed(), "{}: {:?}", c.name(), r.failures().next());
        assert!(!r.entries.is_empty());
    }
}

#[test]
fn swapped_associator_breaks_pentagon_with_witness() {
    let c = swapped_associator();
    let r = check_coherence(&c, &c.objects(2));
    let bad = r.failures().find(|e| e.law == CoherenceLaw::Pentagon).expect("pentagon failure");
    let (l, rr) = bad.failure.as_ref().unwrap();
    assert_ne!(l, rr);
    assert_eq!(bad.objs.len(), 4);
}

#[test]
fn finset_tensor_is_disjoint_union() {
    let c = finset_disjoint();
    assert_eq!(c.unit(), Obj::Set(0));
    assert_eq!(c.tensor_obj(&Obj::Set(2), &Obj::Set(3)), Obj::Set(5));
    let f = func(1, 2, vec![1]);
    let g = func(2, 1, vec![0, 0]);
    assert_eq!(c.tensor_mor(&f, &g), func(3, 3, vec![1, 2, 2]));
}

#[test]
fn finvect_rejects_composites() {
    assert!(finvect(4).is_err());
    assert!(finvect(1).is_err());
    assert!(finvect(7).is_ok());
}

#[test]
fn finvect_tensor_is_kronecker() {
    let k = FinVect::new(3).unwrap();
    let c = fv(3);
    let a = k.from_rows(1, 2, vec![1, 2]);
    let b = k.from_rows(2, 1, vec![1, 1]);
    // [1 2] ⊗ [1;1] = [[1 2];[1 2]] as a 2x2 matrix
    assert_eq!(c.tensor_mor(&a, &b), k.from_rows(2, 2, vec![1, 2, 1, 2]));
}

#[test]
fn opposite_coequalizers_are_equalizers() {
    let c = opposite_instance(finset_disjoint());
    // In the opposite category f: 3 -> 2 is the function 2 -> 3.
    let f = morita::instances::opposite::op(func(2, 3, vec![0, 1]));
    let g = morita::instances::opposite::op(func(2, 3, vec![0, 2]));
    let q = c.coequalize(&f, &g).unwrap();
    assert_eq!(q.apex, Obj::Set(1));
}

fn table_pair() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (1usize..6, 0usize..5).prop_flat_map(|(n, m)| (Just(n), prop::collection::vec(0..n, m), prop::collection::vec(0..n, m)))
}

fn matrix_pair(p: u32) -> impl Strategy<Value = (usize, usize, Vec<i64>, Vec<i64>)> {
    (1usize..4, 1usize..4).prop_flat_map(move |(r, c)| {
        let e = prop::collection::vec(0..i64::from(p), r * c);
        (Just(r), Just(c), e.clone(), e)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finset_coequalizer_has_the_universal_count((n, f, g) in table_pair()) {
        let c = finset_disjoint();
        let (fm, gm) = (func(f.len(), n, f.clone()), func(g.len(), n, g.clone()));
        let q = c.coequalize(&fm, &gm).unwrap();
        let Obj::Set(k) = q.apex else { panic!() };
        prop_assert_eq!(1usize << k, balanced_into_two(&f, &g, n));
        prop_assert_eq!(c.compose(&fm, &q.projection).unwrap(), c.compose(&gm, &q.projection).unwrap());
        prop_assert!(c.is_epi(&q.projection));
    }

    #[test]
    fn finvect_coequalizer_has_the_universal_count((r, cols, a, b) in matrix_pair(3)) {
        let k = FinVect::new(3).unwrap();
        let c = fv(3);
        let (f, g) = (k.from_rows(r, cols, a.clone()), k.from_rows(r, cols, b.clone()));
        let q = c.coequalize(&f, &g).unwrap();
        let Obj::Vect(d) = q.apex else { panic!() };
        let (fm, gm) = (Matrix::from_rows(3, r, cols, a), Matrix::from_rows(3, r, cols, b));
        prop_assert_eq!(3usize.pow(d as u32), balanced_functionals(3, &fm, &gm));
        prop_assert_eq!(c.compose(&f, &q.projection).unwrap(), c.compose(&g, &q.projection).unwrap());
        prop_assert!(c.is_epi(&q.projection));
    }

    #[test]
    fn finset_composition_is_associative(
        t1 in prop::collection::vec(0usize..3, 3),
        t2 in prop::collection::vec(0usize..3, 3),
        t3 in prop::collection::vec(0usize..3, 3),
    ) {
        let c = finset_disjoint();
        let (f, g, h) = (func(3, 3, t1), func(3, 3, t2), func(3, 3, t3));
        let l = c.compose(&c.compose(&f, &g).unwrap(), &h).unwrap();
        let r = c.compose(&f, &c.compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn finvect_bifunctoriality((r, cols, a, b) in matrix_pair(5), (r2, c2, x, y) in matrix_pair(5)) {
        let k = FinVect::new(5).unwrap();
        let c = fv(5);
        let f = k.from_rows(r, cols, a);
        let f2 = k.from_rows(cols, r, b);
        let g = k.from_rows(r2, c2, x);
        let g2 = k.from_rows(c2, r2, y);
        let l = c.compose(&c.tensor_mor(&f, &g), &c.tensor_mor(&f2, &g2)).unwrap();
        let rr = c.tensor_mor(&c.compose(&f, &f2).unwrap(), &c.compose(&g, &g2).unwrap());
        prop_assert_eq!(l, rr);
    }

    #[test]
    fn matrix_inverse_inverts(e in prop::collection::vec(0i64..7, 9)) {
        let m = Matrix::from_rows(7, 3, 3, e);
        match m.inverse() {
            Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(7, 3)),
            None => prop_assert!(m.rank() < 3),
        }
    }
}

#[test]
fn composition_rejects_mismatched_ends() {
    let c = finset_disjoint();
    let f: Mor = func(1, 2, vec![0]);
    assert!(c.compose(&f, &f).is_err());
}
