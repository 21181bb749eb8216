use ag_core::algcore::{e_s, Sym2};
use ag_core::construction2::{load_rep, natural_rep_sl3, save_rep, Representation};
use ag_core::rational::{q, qf, unit_vec};
use ag_core::unitize::random_element;
use ag_core::{AlgebraTable, Execution, LieAlgebra, RatMatrix, RootDatum, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The 7-dimensional representation of g2 on weight vectors
/// ω₁, α₁+α₂, α₁, 0, −α₁, −α₁−α₂, −ω₁.
fn g2_seven() -> Representation {
    let lie = LieAlgebra::new(RootDatum::new("G2".parse().unwrap()).unwrap()).unwrap();
    let m = |entries: &[(usize, usize, i64)]| {
        let mut a = RatMatrix::zeros(7, 7);
        for &(r, c, v) in entries {
            a.set(r, c, q(v));
        }
        a
    };
    // f1: v0→v1, v2→v3, v3→v4, v5→v6 ; f2: v1→v2, v4→v5
    let f1 = m(&[(1, 0, 1), (3, 2, 1), (4, 3, 1), (6, 5, 1)]);
    let f2 = m(&[(2, 1, 1), (5, 4, 1)]);
    let e1 = m(&[(0, 1, 1), (2, 3, 2), (3, 4, 2), (5, 6, 1)]);
    let e2 = m(&[(1, 2, 1), (4, 5, 1)]);
    Representation::from_chevalley_generators(lie, vec![e1, e2], vec![f1, f2]).unwrap()
}

#[test]
fn g2_seven_dimensional_casimir_value() {
    let r = g2_seven();
    assert_eq!(r.mu(), &qf(1, 2));
    assert!(r.sigma_supported());
    // 4 α_π h∨ d / (μ d_π) = 1, i.e. h∨ = μ d_π / (4 α_π d)
    let hc = q(r.lie().datum().h_check());
    assert_eq!(hc, r.mu() * q(7) / (q(4) * r.alpha() * q(14)));
}

#[test]
fn g2_sigma_is_injective_and_kills_the_kernel() {
    let r = g2_seven();
    let t = AlgebraTable::build("G2".parse().unwrap(), Execution::default()).unwrap();
    let n = t.dim();
    let cols: Vec<Vec<Q>> = (0..n)
        .map(|k| r.sigma(t.basis(), &unit_vec(n, k)).unwrap().flatten())
        .collect();
    assert_eq!(RatMatrix::from_cols(&cols).unwrap().rank(), n);
    for w in t.basis().kernel_basis().iter().take(10) {
        assert!(r.sigma_sym2(w).is_zero());
    }
}

#[test]
fn g2_projection_identity() {
    let r = g2_seven();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let x = random_element(&mut rng, 14, None);
        let y = random_element(&mut rng, 14, None);
        assert!(r.pi_proj_residual(&x, &y).unwrap().is_zero());
    }
    let x = random_element(&mut rng, 14, None);
    assert!(r.pi_proj_residual(&x, &vec![q(0); 14]).unwrap().is_zero());
}

#[test]
fn sigma_is_equivariant() {
    for r in [natural_rep_sl3().unwrap(), g2_seven()] {
        let lie = r.lie().clone();
        let n = lie.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let (z, a, b) = (
                random_element(&mut rng, n, Some(3)),
                random_element(&mut rng, n, Some(3)),
                random_element(&mut rng, n, Some(3)),
            );
            let mut w = Sym2::product(&lie.bracket(&z, &a), &b);
            w.add_scaled(&q(1), &Sym2::product(&a, &lie.bracket(&z, &b)));
            let lhs = r.sigma_sym2(&w);
            let rhs = r.image(&z).commutator(&r.sigma_sym2(&Sym2::product(&a, &b))).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn sl3_sigma_properties() {
    let r = natural_rep_sl3().unwrap();
    let t = AlgebraTable::build("A2".parse().unwrap(), Execution::default()).unwrap();
    let s = r.sigma_sym2(&e_s(r.lie()));
    assert_eq!(s, RatMatrix::scalar(3, &s.get(0, 0).clone()));
    for w in t.basis().kernel_basis().iter().take(10) {
        assert!(r.sigma_sym2(w).is_zero());
    }
    // Tr(π(X)^4) = α_π K(X,X)^2
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let x = random_element(&mut rng, 8, None);
        let p = r.image(&x);
        let p2 = p.mul(&p).unwrap();
        let k = r.lie().killing_value(&x, &x);
        assert_eq!(p2.mul(&p2).unwrap().trace(), r.alpha() * &k * &k);
    }
}

#[test]
fn rep_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl3.json");
    let r = natural_rep_sl3().unwrap();
    save_rep(&r, &path).unwrap();
    let first = std::fs::read(&path).unwrap();
    let back = load_rep(&path).unwrap();
    assert_eq!(back.matrices(), r.matrices());
    save_rep(&back, &path).unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), first);
}
