//! Checks of the embedding `σ: A(g) → End(V)`.

use std::borrow::Cow;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{verdict, CheckResult};
use crate::algcore::AlgebraTable;
use crate::construction2::{natural_rep_sl3, sl3_transported_table, Representation};
use crate::exactla::RatMatrix;
use crate::rational;
use crate::unitize::random_element;

/// The supplied representation, or the built-in one for `sl_3`.
fn pick<'a>(t: &AlgebraTable, rep: Option<&'a Representation>) -> Result<Cow<'a, Representation>, String> {
    let spec = t.datum().spec();
    match rep {
        Some(r) if r.lie().datum().spec() == spec => Ok(Cow::Borrowed(r)),
        Some(r) => Err(format!(
            "representation is for {}, algebra is {spec}",
            r.lie().datum().spec()
        )),
        None if spec.to_string() == "A2" => natural_rep_sl3().map(Cow::Owned).map_err(|e| e.to_string()),
        None => Err("no representation supplied".into()),
    }
}

/// `σ` kills `ker S`, is injective on `A(g)`, and for `sl_3` transports the
/// model product onto the structure table.
pub fn check_sigma(t: &AlgebraTable, rep: Option<&Representation>) -> CheckResult {
    const NAME: &str = "sigma";
    let r = match pick(t, rep) {
        Ok(r) => r,
        Err(why) => return CheckResult::skipped(NAME, why),
    };
    if !r.sigma_supported() {
        return CheckResult::skipped(NAME, format!("no sigma for a {}-dimensional representation", r.dim_v()));
    }
    let n = t.dim();
    let images: Vec<Vec<rational::Q>> = (0..n)
        .map(|k| r.sigma(t.basis(), &rational::unit_vec(n, k)).map(|m| m.flatten()))
        .collect::<crate::Result<_>>()
        .expect("supported pairing");
    let rank = RatMatrix::from_cols(&images).map(|m| m.rank()).unwrap_or(0);
    if rank != n {
        return CheckResult::fail(NAME, "sigma is not injective", json!({"rank": rank}));
    }
    let ker = t.basis().kernel_basis();
    for (i, w) in ker.iter().take(10).enumerate() {
        if !r.sigma_sym2(w).is_zero() {
            return CheckResult::fail(NAME, "sigma does not vanish on ker S", json!({"kernel_vector": i}));
        }
    }
    let mut detail = format!(
        "injective (rank {rank}); vanishes on {} kernel vectors",
        ker.len().min(10)
    );
    if t.datum().spec().to_string() == "A2" {
        let ok = sl3_transported_table(&r, t.basis()).is_ok_and(|tt| &tt == t.table());
        if !ok {
            return CheckResult::fail(NAME, "transported model product differs from the table", json!(null));
        }
        detail.push_str("; model product transports to the table");
    }
    CheckResult::pass(NAME, detail)
}

/// `Proj_{π(g)}(σ(S(X²))∘π(Y)) = π(S(X²)Y)` on seeded samples.
pub fn check_pi_proj(t: &AlgebraTable, rep: Option<&Representation>, samples: usize, seed: u64) -> CheckResult {
    const NAME: &str = "pi_proj";
    if t.datum().spec().to_string() == "A2" {
        return CheckResult::skipped(NAME, "A2 excluded");
    }
    let r = match pick(t, rep) {
        Ok(r) => r,
        Err(why) => return CheckResult::skipped(NAME, why),
    };
    let n = t.lie().dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 0..samples {
        let x = random_element(&mut rng, n, None);
        let y = random_element(&mut rng, n, None);
        let ok = r.pi_proj_residual(&x, &y).is_ok_and(|m| m.is_zero());
        if !ok {
            return verdict(NAME, false, "projection identity fails", || json!({"sample": s}));
        }
    }
    CheckResult::pass(NAME, format!("residual 0 on {samples} samples"))
}
