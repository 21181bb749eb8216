//! Checks that only need the Lie algebra and the operators `S(X_i X_j)`.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::{verdict, CheckResult};
use crate::algcore::{e_s, s_of, AlgebraBasis, Ctx, Sym2};
use crate::chevalley::LieAlgebra;
use crate::exactla::RatMatrix;
use crate::rational::{self, q, qf, Q};
use crate::rootsys::{exceptional_series, in_exceptional_series, RootDatum, RootSystemSpec};
use crate::unitize::random_element;

/// Invariance of `K` on all basis triples and `K(X_α, X_{−α}) = 2ν_α h∨`.
pub fn check_killing(lie: &LieAlgebra) -> CheckResult {
    const NAME: &str = "killing_form";
    let ctx = Ctx::new(lie);
    let n = lie.dim();
    for i in 0..n {
        for j in 0..n {
            let bij = lie.bracket_basis(i, j);
            for k in 0..n {
                let lhs: i64 = bij.iter().map(|&(m, c)| c * ctx.k[m][k]).sum();
                let rhs: i64 = lie.bracket_basis(j, k).iter().map(|&(m, c)| c * ctx.k[i][m]).sum();
                if lhs != rhs {
                    return CheckResult::fail(
                        NAME,
                        "K([x,y],z) = K(x,[y,z]) violated",
                        json!({"x": lie.labels()[i], "y": lie.labels()[j], "z": lie.labels()[k], "lhs": lhs, "rhs": rhs}),
                    );
                }
            }
        }
    }
    let d = lie.datum();
    let hc = d.h_check();
    for a in 0..d.num_roots() {
        let (x, y) = (lie.root_vector(a), lie.root_vector(d.negative(a)));
        if ctx.k[x][y] != 2 * d.nu(a) * hc {
            return CheckResult::fail(
                NAME,
                "K(X_a, X_-a) differs from 2 nu_a h_check",
                json!({"root": d.root(a), "value": ctx.k[x][y], "expected": 2 * d.nu(a) * hc}),
            );
        }
    }
    CheckResult::pass(
        NAME,
        format!("invariant on {} triples; root pairings 2*nu*h_check", n * n * n),
    )
}

/// `Σ ad(X_i) ad(Y_i) = Id` for the K-dual basis.
pub fn check_casimir(lie: &LieAlgebra) -> CheckResult {
    let c = lie.casimir_operator();
    let ok = c == RatMatrix::identity(lie.dim());
    verdict(
        "casimir",
        ok,
        "adjoint Casimir operator equals Id",
        || json!({"diagonal": (0..lie.dim()).map(|i| rational::fmt_q(c.get(i, i))).collect::<Vec<_>>()}),
    )
}

/// `Tr S(X_i X_j) = (h∨+1) K(X_i, X_j)` on all pairs.
pub fn check_trace_identity(lie: &LieAlgebra) -> CheckResult {
    let ctx = Ctx::new(lie);
    let n = lie.dim();
    let hc1 = ctx.hc + 1;
    for i in 0..n {
        for j in i..n {
            let tr2: i64 = ctx
                .s2_entries(i, j)
                .iter()
                .filter(|(r, c, _)| r == c)
                .map(|e| e.2)
                .sum();
            if tr2 != 2 * hc1 * ctx.k[i][j] {
                return CheckResult::fail(
                    "trace_identity",
                    "Tr S(XY) differs from (h_check+1) K(X,Y)",
                    json!({"pair": [lie.labels()[i], lie.labels()[j]], "trace": rational::fmt_q(&qf(tr2, 2)), "killing": ctx.k[i][j]}),
                );
            }
        }
    }
    CheckResult::pass("trace_identity", format!("{} pairs", n * (n + 1) / 2))
}

/// `S(e_S) = (h∨+1) Id`.
pub fn check_s_of_e_s(lie: &LieAlgebra) -> CheckResult {
    let hc1 = q(lie.datum().h_check() + 1);
    let m = s_of(lie, &e_s(lie));
    let ok = m == RatMatrix::scalar(lie.dim(), &hc1);
    verdict(
        "s_of_e_s",
        ok,
        format!("S(e_S) = {hc1}*Id"),
        || json!({"entry00": rational::fmt_q(m.get(0, 0))}),
    )
}

/// Every basis operator `S(X_i X_j)` is self-adjoint for `K`.
pub fn check_k_symmetry(basis: &AlgebraBasis) -> CheckResult {
    let lie = basis.lie();
    let ctx = Ctx::new(lie);
    let n = lie.dim();
    for (i, j) in basis.basis_pairs() {
        let mut m = vec![vec![0i64; n]; n];
        for (r, c, v) in ctx.s2_entries(i, j) {
            m[r][c] = v;
        }
        let km = |a: usize, c: usize| (0..n).map(|r| ctx.k[a][r] * m[r][c]).sum::<i64>();
        for a in 0..n {
            for c in a + 1..n {
                if km(a, c) != km(c, a) {
                    return CheckResult::fail(
                        "k_symmetry",
                        "K S is not symmetric",
                        json!({"pair": [lie.labels()[i], lie.labels()[j]], "entry": [a, c]}),
                    );
                }
            }
        }
    }
    CheckResult::pass("k_symmetry", format!("{} basis operators", basis.dim()))
}

/// Zero/nonzero pattern of `S(X_α X_β)` over root pairs with `α+β` not a root.
#[derive(Clone, Debug, Default, Serialize)]
pub struct HighWtTable {
    /// Pairs with `⟨α,β⟩ = 0`.
    pub orthogonal: usize,
    /// Pairs with `⟨α,β⟩ > 0`.
    pub positive: usize,
    /// Of the positive pairs, those with `S(X_α X_β) ≠ 0`.
    pub positive_nonzero: usize,
    /// `(α, β, expected nonzero, found nonzero)` for every disagreement.
    pub mismatches: Vec<(Vec<i64>, Vec<i64>, bool, bool)>,
    /// Whether `S(X_α²) = 0` for every root.
    pub all_squares_zero: bool,
}

pub fn high_wt_table(basis: &AlgebraBasis) -> HighWtTable {
    let lie = basis.lie();
    let d = lie.datum();
    let two_lengths = d.nu_g() > 1;
    let nonzero = |a: usize, b: usize| {
        !basis
            .generator_coords(lie.root_vector(a), lie.root_vector(b))
            .is_empty()
    };
    let mut t = HighWtTable {
        all_squares_zero: true,
        ..Default::default()
    };
    for a in 0..d.num_roots() {
        if nonzero(a, a) {
            t.all_squares_zero = false;
        }
        for b in a..d.num_roots() {
            let sum: Vec<i64> = d.root(a).iter().zip(d.root(b)).map(|(x, y)| x + y).collect();
            if d.root_index(&sum).is_some() {
                continue;
            }
            let ip = d.root_form(a, b);
            let expected = if ip.is_zero() {
                t.orthogonal += 1;
                true
            } else if ip > Q::zero() {
                t.positive += 1;
                two_lengths && !d.is_long(a) && !d.is_long(b)
            } else {
                continue;
            };
            let found = nonzero(a, b);
            if found && !ip.is_zero() {
                t.positive_nonzero += 1;
            }
            if found != expected {
                t.mismatches
                    .push((d.root(a).to_vec(), d.root(b).to_vec(), expected, found));
            }
        }
    }
    t
}

pub fn check_high_wt(basis: &AlgebraBasis) -> CheckResult {
    let t = high_wt_table(basis);
    let d = basis.datum();
    let theta = basis.lie().root_vector(d.theta());
    let theta_zero = basis.generator_coords(theta, theta).is_empty();
    let simply_laced_ok = d.nu_g() > 1 || t.all_squares_zero;
    let ok = t.mismatches.is_empty() && theta_zero && simply_laced_ok;
    let detail = format!(
        "{} orthogonal and {} positive pairs ({} nonzero); S(X_theta^2) = 0: {}",
        t.orthogonal, t.positive, t.positive_nonzero, theta_zero
    );
    verdict("high_wt", ok, detail, || json!(t))
}

/// Components of the Dynkin diagram after deleting the simple roots not
/// orthogonal to `θ̃`, each with the root index of its highest root.
pub fn regular_components(d: &RootDatum) -> Vec<(Vec<usize>, usize)> {
    let l = d.rank();
    let theta = d.theta();
    let keep: Vec<usize> = (0..l).filter(|&i| d.root_form(theta, d.simple(i)).is_zero()).collect();
    let mut seen = vec![false; l];
    let mut out = Vec::new();
    for &s in &keep {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in &keep {
                if !seen[j] && d.cartan()[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let beta = (0..d.num_positive())
            .filter(|&a| d.root(a).iter().enumerate().all(|(i, &c)| c == 0 || comp.contains(&i)))
            .max_by_key(|&a| d.height(a))
            .expect("a component contains its simple roots");
        out.push((comp, beta));
    }
    out
}

/// `S(X_θ̃ X_β)` is a nonzero highest weight vector for each regular component.
pub fn check_hwv_regular(basis: &AlgebraBasis) -> CheckResult {
    const NAME: &str = "hwv_regular";
    let lie = basis.lie();
    let d = lie.datum();
    let comps = regular_components(d);
    if comps.is_empty() {
        return CheckResult::skipped(NAME, "no simple root is orthogonal to theta");
    }
    let n = lie.dim();
    let xt = rational::unit_vec(n, lie.root_vector(d.theta()));
    let mut weights = Vec::new();
    for (comp, beta) in &comps {
        let xb = rational::unit_vec(n, lie.root_vector(*beta));
        let w = basis.coords(&Sym2::product(&xt, &xb));
        let weight: Vec<i64> = d
            .root(d.theta())
            .iter()
            .zip(d.root(*beta))
            .map(|(a, b)| a + b)
            .collect();
        if rational::is_zero_vec(&w) {
            return CheckResult::fail(
                NAME,
                "S(X_theta X_beta) = 0",
                json!({"component": comp, "beta": d.root(*beta)}),
            );
        }
        for z in 0..d.num_positive() {
            let xz = rational::unit_vec(n, lie.root_vector(z));
            let mut s = Sym2::product(&lie.bracket(&xz, &xt), &xb);
            s.add_scaled(&Q::one(), &Sym2::product(&xt, &lie.bracket(&xz, &xb)));
            if !rational::is_zero_vec(&basis.coords(&s)) {
                return CheckResult::fail(
                    NAME,
                    "highest weight vector not annihilated",
                    json!({"beta": d.root(*beta), "z": d.root(z)}),
                );
            }
        }
        weights.push(weight);
    }
    let mut r = CheckResult::pass(
        NAME,
        format!(
            "{} component(s); highest weights theta+beta = {:?}",
            comps.len(),
            weights
        ),
    );
    r.witness = Some(json!({"weights": weights}));
    r
}

/// `α_Ad = 5/(2(2+dimG))` and both sides of `4α_Ad(h∨)² = h∨+6` for each
/// type of the exceptional series, from the tabulated data.
pub fn okubo_numerology() -> Vec<(RootSystemSpec, Q, Q, Q)> {
    exceptional_series()
        .into_iter()
        .map(|e| {
            let alpha = qf(5, 2 * (2 + e.dim_g as i64));
            let hc = q(e.h_check);
            let lhs = q(4) * &alpha * &hc * &hc;
            (e.spec, alpha, lhs, hc + q(6))
        })
        .collect()
}

fn trace_prod(a: &RatMatrix, b: &RatMatrix) -> Q {
    let n = a.rows();
    let mut s = Q::zero();
    for i in 0..n {
        for k in 0..n {
            let x = a.get(i, k);
            if !x.is_zero() {
                s += x * b.get(k, i);
            }
        }
    }
    s
}

/// Quartic trace identities for the adjoint representation.
pub fn check_okubo(lie: &LieAlgebra, samples: usize, seed: u64) -> CheckResult {
    const NAME: &str = "okubo";
    let spec = lie.datum().spec();
    if !in_exceptional_series(spec) {
        return CheckResult::skipped(NAME, format!("{spec} is not in the exceptional series table"));
    }
    for (s, alpha, lhs, rhs) in okubo_numerology() {
        if lhs != rhs {
            return CheckResult::fail(
                NAME,
                "4 alpha h_check^2 != h_check + 6",
                json!({"type": s.to_string(), "alpha": rational::fmt_q(&alpha)}),
            );
        }
    }
    let n = lie.dim();
    let alpha = qf(5, 2 * (2 + n as i64));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs: Vec<Vec<Q>> = (0..samples).map(|_| random_element(&mut rng, n, None)).collect();
    let squares: Vec<RatMatrix> = xs
        .iter()
        .map(|x| {
            let a = lie.ad_matrix(x);
            a.mul(&a).expect("square")
        })
        .collect();
    for (x, a2) in xs.iter().zip(&squares) {
        let k = lie.killing_value(x, x);
        let tr = trace_prod(a2, a2);
        if tr != &alpha * &k * &k {
            return CheckResult::fail(
                NAME,
                "Tr((ad X)^4) != alpha K(X,X)^2",
                json!({"x": x.iter().map(rational::fmt_q).collect::<Vec<_>>(), "trace": rational::fmt_q(&tr)}),
            );
        }
    }
    let xt = rational::unit_vec(n, lie.root_vector(lie.datum().theta()));
    let at = lie.ad_matrix(&xt);
    let at2 = at.mul(&at).expect("square");
    if !trace_prod(&at2, &at2).is_zero() {
        return CheckResult::fail(NAME, "Tr((ad X_theta)^4) != 0", json!(null));
    }
    let mut mixed = 0;
    if spec.to_string() != "A2" {
        let third = qf(1, 3);
        for w in xs.windows(2).zip(squares.windows(2)) {
            let ((x, y), (ax2, ay2)) = ((&w.0[0], &w.0[1]), (&w.1[0], &w.1[1]));
            let xy = lie.bracket(x, y);
            let (kxx, kyy, kxy) = (
                lie.killing_value(x, x),
                lie.killing_value(y, y),
                lie.killing_value(x, y),
            );
            let rhs = -lie.killing_value(&xy, &xy) * qf(1, 6)
                + q(2) * &alpha * &third * &kxy * &kxy
                + &alpha * &third * kxx * kyy;
            if trace_prod(ax2, ay2) != rhs {
                return CheckResult::fail(NAME, "mixed quartic identity fails", json!({"sample": mixed}));
            }
            mixed += 1;
        }
    }
    CheckResult::pass(
        NAME,
        format!(
            "alpha_Ad = {}; numerology for 6 types; quartic identity on {} X; mixed identity on {} pairs",
            alpha, samples, mixed
        ),
    )
}
