use ag_core::rational::q;
use ag_core::rootsys::exceptional_series;
use ag_core::verify::dimension_prediction;
use ag_core::{LieAlgebra, RootDatum, Q};
use num_bigint::BigInt;
use proptest::prelude::*;

fn datum(s: &str) -> RootDatum {
    RootDatum::new(s.parse().unwrap()).unwrap()
}

/// (type, dim g, Coxeter number, dual Coxeter number) from the classification.
const CLASSICAL_DATA: [(&str, usize, usize, i64); 14] = [
    ("A1", 3, 2, 2),
    ("A2", 8, 3, 3),
    ("A4", 24, 5, 5),
    ("B2", 10, 4, 3),
    ("B3", 21, 6, 5),
    ("B4", 36, 8, 7),
    ("C3", 21, 6, 4),
    ("C4", 36, 8, 5),
    ("D4", 28, 6, 6),
    ("G2", 14, 6, 4),
    ("F4", 52, 12, 9),
    ("E6", 78, 12, 12),
    ("E7", 133, 18, 18),
    ("E8", 248, 30, 30),
];

#[test]
fn invariants_match_the_classification() {
    for (ty, dim, h, hc) in CLASSICAL_DATA {
        let d = datum(ty);
        assert_eq!(d.dim_g(), dim, "{ty}");
        assert_eq!(d.h(), h, "{ty}");
        assert_eq!(d.h_check(), hc, "{ty}");
        assert_eq!(d.num_roots(), dim - d.rank(), "{ty}");
    }
}

#[test]
fn highest_root_is_long_and_adjoint_dimension() {
    for (ty, dim, _, _) in CLASSICAL_DATA {
        let d = datum(ty);
        assert!(d.is_long(d.theta()), "{ty}");
        let w = d.root_weight(d.theta());
        assert_eq!(d.weyl_dim(&w).unwrap(), BigInt::from(dim), "{ty}");
    }
}

#[test]
fn series_dimensions_from_weyl_formula() {
    for e in exceptional_series() {
        let d = RootDatum::new(e.spec).unwrap();
        let lambda: Vec<Q> = e.lambda.iter().map(|&x| q(x)).collect();
        assert_eq!(d.weyl_dim(&lambda).unwrap(), BigInt::from(e.dim_l), "{}", e.spec);
        let p = dimension_prediction(&d).unwrap();
        assert_eq!(p.exceptional_series, Some(e.dim_l + 1), "{}", e.spec);
        assert_eq!(p.weyl, e.dim_l + 1, "{}", e.spec);
    }
}

#[test]
fn dimension_of_l_two_theta() {
    // dim L(2θ) from the standard tables.
    for (ty, want) in [
        ("A2", 27),
        ("A3", 84),
        ("B2", 35),
        ("D4", 300),
        ("G2", 77),
        ("F4", 1053),
        ("E6", 2430),
        ("E7", 7371),
        ("E8", 27000),
    ] {
        let d = datum(ty);
        let two_theta: Vec<Q> = d.root_weight(d.theta()).iter().map(|x| x * q(2)).collect();
        assert_eq!(d.weyl_dim(&two_theta).unwrap(), BigInt::from(want), "{ty}");
        let n = d.dim_g();
        assert_eq!(dimension_prediction(&d).unwrap().weyl, n * (n + 1) / 2 - want, "{ty}");
    }
}

#[test]
fn chevalley_basis_satisfies_jacobi() {
    for ty in ["A3", "B3", "C3", "D4", "G2"] {
        LieAlgebra::new(datum(ty)).unwrap().check_jacobi().unwrap();
    }
}

#[test]
fn casimir_is_identity_on_the_adjoint() {
    for ty in ["A2", "B2", "G2"] {
        let lie = LieAlgebra::new(datum(ty)).unwrap();
        assert_eq!(lie.casimir_operator(), ag_core::RatMatrix::identity(lie.dim()), "{ty}");
    }
}

#[test]
fn rejects_inadmissible_types() {
    for bad in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "", "A"] {
        assert!(bad.parse::<ag_core::RootSystemSpec>().is_err(), "{bad}");
    }
    assert_eq!("g2".parse::<ag_core::RootSystemSpec>().unwrap().to_string(), "G2");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_dim_respects_the_a3_diagram_flip(a in 0i64..4, b in 0i64..4, c in 0i64..4) {
        let d = datum("A3");
        let lambda = [q(a), q(b), q(c)];
        let flipped = [q(c), q(b), q(a)];
        prop_assert_eq!(d.weyl_dim(&lambda).unwrap(), d.weyl_dim(&flipped).unwrap());
    }

    #[test]
    fn weyl_dim_a1_is_lambda_plus_one(n in 0i64..50) {
        prop_assert_eq!(datum("A1").weyl_dim(&[q(n)]).unwrap(), BigInt::from(n + 1));
    }

    #[test]
    fn casimir_eigenvalue_of_theta_is_one(pick in 0usize..6) {
        // The Casimir of the canonical form acts on g by 1.
        let ty = ["A2", "B3", "C3", "D4", "G2", "F4"][pick];
        let d = datum(ty);
        prop_assert_eq!(d.casimir_eigenvalue(&d.root_weight(d.theta())).unwrap(), q(1));
    }
}
