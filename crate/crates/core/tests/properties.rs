use std::sync::OnceLock;

use arithstruct::{
    apply, burnside_count, canonical_key, count_orbits, d_from_r, eigenvalues, enumerate_cycle, mu1_of,
    r_from_d, rayleigh_quotient, smooth, subdivide, top_eigenpair, validate, ArithmeticalStructure,
    DihedralElement, EnumerationLimits, GraphFamily, StructureCatalog, SymmetricMatrix,
};
use proptest::prelude::*;

const MAX_N: usize = 8;
const TOL: f64 = 1e-9;

fn catalogs() -> &'static Vec<StructureCatalog> {
    static CELL: OnceLock<Vec<StructureCatalog>> = OnceLock::new();
    CELL.get_or_init(|| {
        let limits = EnumerationLimits::default();
        (3..=MAX_N).map(|n| enumerate_cycle(n, &limits).unwrap()).collect()
    })
}

fn structure(n: usize, index: usize) -> ArithmeticalStructure {
    let cat = &catalogs()[n - 3];
    cat.structures().nth(index % cat.len()).unwrap()
}

fn any_structure() -> impl Strategy<Value = ArithmeticalStructure> {
    (3..=MAX_N, any::<usize>()).prop_map(|(n, i)| structure(n, i))
}

fn laplacian(s: &ArithmeticalStructure) -> SymmetricMatrix {
    SymmetricMatrix::generalized_laplacian(s.family(), s.d().as_slice())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn d_r_round_trip(s in any_structure()) {
        prop_assert!(validate(&s));
        let r = r_from_d(s.family(), s.d()).unwrap().into_r().unwrap();
        prop_assert_eq!(&r, s.r());
        prop_assert_eq!(&d_from_r(s.family(), s.r()).unwrap(), s.d());
    }

    #[test]
    fn subdivide_then_smooth(s in any_structure(), e in any::<usize>()) {
        let edge = e % s.n() + 1;
        let t = subdivide(&s, edge).unwrap();
        prop_assert!(validate(&t));
        prop_assert_eq!(smooth(&t, edge + 1).unwrap(), s);
    }

    #[test]
    fn smoothing_lands_in_smaller_catalog(s in any_structure()) {
        prop_assume!(s.n() >= 4 && !s.is_laplacian());
        let units: Vec<usize> = (0..s.n()).filter(|&i| s.d().as_slice()[i] == 1).collect();
        prop_assert!(!units.is_empty());
        for i in units {
            let t = smooth(&s, i + 1).unwrap();
            prop_assert!(catalogs()[s.n() - 4].contains(t.d().as_slice()));
        }
    }

    #[test]
    fn group_action_laws(n in 3..=MAX_N, seed in any::<(usize, bool, usize, bool)>(), i in any::<usize>()) {
        let s = structure(n, i);
        let g = DihedralElement::new(n, seed.0 % n, seed.1);
        let h = DihedralElement::new(n, seed.2 % n, seed.3);
        let lhs = apply(&apply(&s, &g).unwrap(), &h).unwrap();
        prop_assert_eq!(lhs, apply(&s, &g.compose(&h)).unwrap());
        prop_assert_eq!(apply(&apply(&s, &g).unwrap(), &g.inverse()).unwrap(), s);
    }

    #[test]
    fn images_are_structures_with_same_key(s in any_structure(), gi in any::<(usize, bool)>()) {
        let g = DihedralElement::new(s.n(), gi.0 % s.n(), gi.1);
        let t = apply(&s, &g).unwrap();
        prop_assert!(validate(&t));
        prop_assert_eq!(canonical_key(&t).unwrap(), canonical_key(&s).unwrap());
        let mu_s = mu1_of(s.family(), s.d().as_slice()).unwrap();
        let mu_t = mu1_of(t.family(), t.d().as_slice()).unwrap();
        prop_assert!((mu_s - mu_t).abs() < TOL);
    }

    #[test]
    fn laplacian_is_psd_with_kernel_r(s in any_structure()) {
        let spec = eigenvalues(&laplacian(&s)).unwrap();
        prop_assert!(spec.smallest().abs() < TOL);
        prop_assert!(spec.eigenvalues[spec.eigenvalues.len() - 2] > TOL, "kernel is one-dimensional");
        let r: Vec<f64> = s.r().as_slice().iter().map(|x| x.to_string().parse().unwrap()).collect();
        let lr = laplacian(&s).mul_vec(&r);
        prop_assert!(lr.iter().all(|v| v.abs() < 1e-9));
    }

    #[test]
    fn rayleigh_bounded_by_mu1(s in any_structure(), x in prop::collection::vec(-1.0f64..1.0, MAX_N)) {
        let m = laplacian(&s);
        let x = &x[..s.n()];
        prop_assume!(x.iter().any(|v| v.abs() > 1e-3));
        let pair = top_eigenpair(&m).unwrap();
        prop_assert!(rayleigh_quotient(&m, x).unwrap() <= pair.value + TOL);
        prop_assert!((rayleigh_quotient(&m, &pair.vector).unwrap() - pair.value).abs() < TOL);
        prop_assert!(pair.residual(&m) < 1e-8);
    }

    #[test]
    fn interlacing(s in any_structure(), k in any::<usize>()) {
        let m = laplacian(&s);
        let mu = eigenvalues(&m).unwrap().mu1();
        let sub = eigenvalues(&m.delete(k % s.n())).unwrap().mu1();
        prop_assert!(sub <= mu + TOL);
    }

    #[test]
    fn absolute_value_and_row_sum(s in any_structure()) {
        let m = laplacian(&s);
        let mu = eigenvalues(&m).unwrap().mu1();
        let abs = eigenvalues(&m.absolute()).unwrap().mu1();
        prop_assert!(abs >= mu - TOL);
        let row_bound = s.d().as_slice().iter().map(|&d| d as f64 + 2.0).fold(0.0, f64::max);
        prop_assert!(abs <= row_bound + TOL);
        prop_assert!((m.absolute().max_row_sum() - row_bound).abs() < TOL);
    }

    #[test]
    fn courant_weyl(n in 3..=MAX_N, i in any::<usize>(), j in any::<usize>()) {
        let (x, y) = (laplacian(&structure(n, i)), laplacian(&structure(n, j)));
        let (sx, sy) = (eigenvalues(&x).unwrap(), eigenvalues(&y).unwrap());
        let sum = eigenvalues(&x.add(&y)).unwrap().mu1();
        prop_assert!(sum >= sx.mu1() + sy.smallest() - TOL);
        prop_assert!(sum <= sx.mu1() + sy.mu1() + TOL);
    }

    #[test]
    fn eigenvalue_sum_is_trace(s in any_structure()) {
        let spec = eigenvalues(&laplacian(&s)).unwrap();
        let trace: u64 = s.d().as_slice().iter().sum();
        prop_assert!((spec.eigenvalues.iter().sum::<f64>() - trace as f64).abs() < 1e-8);
    }

    #[test]
    fn random_symmetric_matrices(entries in prop::collection::vec(-5.0f64..5.0, 21)) {
        // 6x6 from its upper triangle
        let mut it = entries.into_iter();
        let m = SymmetricMatrix::from_upper(6, |_, _| it.next().unwrap());
        let spec = eigenvalues(&m).unwrap();
        let pair = top_eigenpair(&m).unwrap();
        prop_assert!((pair.value - spec.mu1()).abs() < 1e-9);
        prop_assert!(pair.residual(&m) < 1e-8);
        let tr: f64 = (0..6).map(|i| m.get(i, i)).sum();
        prop_assert!((spec.eigenvalues.iter().sum::<f64>() - tr).abs() < 1e-9);
        prop_assert!(spec.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }
}

#[test]
fn orbit_partition() {
    for cat in catalogs() {
        let n = cat.n();
        let index = cat.orbit_index();
        let covered: usize = index.values().map(Vec::len).sum();
        assert_eq!(covered, cat.len());
        assert!(index.values().all(|o| (2 * n) % o.len() == 0));
        assert_eq!(index.len(), count_orbits(cat).up_to_symmetry);
        assert_eq!(index.len(), burnside_count(cat));
        assert!(GraphFamily::cycle(n).is_ok());
    }
}
