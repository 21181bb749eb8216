//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ag_core::construction2::{natural_rep_sl3, sl3_transported_table};
use ag_core::rational::{self, q, qf};
use ag_core::rootsys::exceptional_series;
use ag_core::unitize::{jordan_residual, pa1_residual, random_element, Witness};
use ag_core::verify::{
    check_counit_split, check_high_wt, check_idempotent_spectrum, check_nonpa, check_okubo, check_s_of_e_s,
    check_sigma, check_simplicity, check_tau_assoc, check_tau_nondeg, check_trace_identity, check_unit,
    okubo_numerology, CheckResult,
};
use ag_core::{AlgebraTable, Execution, RootDatum, RootSystemSpec, Sym2};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 1;

/// dim A(g) from the decomposition of Sym² g, for each built type.
const EXPECTED_DIMS: [(&str, usize); 9] = [
    ("A1", 1),
    ("A2", 9),
    ("G2", 28),
    ("F4", 325),
    ("B2", 20),
    ("B3", 63),
    ("C3", 105),
    ("A3", 36),
    ("D4", 106),
];

type Criterion = fn(&Suite) -> Result<String, String>;

struct Built {
    table: AlgebraTable,
    elapsed: Duration,
}

struct Suite {
    built: BTreeMap<&'static str, Built>,
    failures: usize,
}

impl Suite {
    fn get(&self, ty: &str) -> &AlgebraTable {
        &self.built[ty].table
    }

    fn report(&mut self, id: usize, title: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("[PASS] AC{id} {title}: {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("[FAIL] AC{id} {title}: {detail}");
            }
        }
    }
}

fn spec(s: &str) -> RootSystemSpec {
    s.parse().expect("valid type")
}

fn require(r: &CheckResult, ty: &str) -> Result<(), String> {
    if r.passed() {
        Ok(())
    } else {
        Err(format!("{ty} {}: {:?} ({})", r.name, r.status, r.detail))
    }
}

fn ac1(s: &Suite) -> Result<String, String> {
    let mut parts = Vec::new();
    for (ty, limit) in [("A1", 10), ("A2", 10), ("G2", 10), ("F4", 3600)] {
        let b = &s.built[ty];
        let want = EXPECTED_DIMS.iter().find(|(t, _)| *t == ty).unwrap().1;
        if b.table.dim() != want {
            return Err(format!("{ty}: dim {} != {want}", b.table.dim()));
        }
        if b.elapsed > Duration::from_secs(limit) {
            return Err(format!("{ty}: build took {:.1?} (limit {limit} s)", b.elapsed));
        }
        parts.push(format!("{ty}={} in {:.2?}", want, b.elapsed));
    }
    Ok(parts.join(", "))
}

fn binom2(n: usize) -> usize {
    n * (n + 1) / 2
}

fn ac2(s: &Suite) -> Result<String, String> {
    let mut parts = Vec::new();
    for ty in ["B2", "B3", "C3", "A3", "D4"] {
        let b = &s.built[ty];
        let d = RootDatum::new(spec(ty)).map_err(|e| e.to_string())?;
        let two_theta: Vec<_> = d.root_weight(d.theta()).iter().map(|x| x * q(2)).collect();
        let weyl = d.weyl_dim(&two_theta).map_err(|e| e.to_string())?;
        let predicted = BigInt::from(binom2(d.dim_g())) - weyl;
        let want = EXPECTED_DIMS.iter().find(|(t, _)| *t == ty).unwrap().1;
        if predicted != BigInt::from(want) || b.table.dim() != want {
            return Err(format!(
                "{ty}: built {}, formula {predicted}, expected {want}",
                b.table.dim()
            ));
        }
        if b.elapsed > Duration::from_secs(300) {
            return Err(format!("{ty}: build took {:.1?}", b.elapsed));
        }
        parts.push(format!("{ty}={want}"));
    }
    Ok(parts.join(", "))
}

fn ac3(s: &Suite) -> Result<String, String> {
    for (ty, b) in &s.built {
        let lie = b.table.lie();
        require(&check_unit(&b.table), ty)?;
        require(&check_trace_identity(lie), ty)?;
        require(&check_s_of_e_s(lie), ty)?;
    }
    Ok(format!("unit, Tr S(XY) and S(e_S) exact on {} types", s.built.len()))
}

fn ac4(s: &Suite) -> Result<String, String> {
    let mut exhaustive = Vec::new();
    for (ty, b) in &s.built {
        let t = &b.table;
        let full = t.dim() <= 64;
        require(&check_tau_assoc(t, full, 100, SEED, Execution::Parallel), ty)?;
        require(&check_tau_nondeg(t, Execution::Parallel), ty)?;
        if full {
            exhaustive.push(*ty);
        }
    }
    Ok(format!(
        "symmetric and nondegenerate on {} types; associative on all triples for {}",
        s.built.len(),
        exhaustive.join(" ")
    ))
}

fn ac5(s: &Suite) -> Result<String, String> {
    let rows = okubo_numerology();
    if rows.len() != 6 {
        return Err(format!("{} series rows", rows.len()));
    }
    for e in exceptional_series() {
        // Table data against the root datum, then the identity from scratch.
        let d = RootDatum::new(e.spec).map_err(|x| x.to_string())?;
        if d.dim_g() != e.dim_g || d.h_check() != e.h_check {
            return Err(format!("{}: table data disagree with the root system", e.spec));
        }
        let alpha = qf(5, 2 * (2 + e.dim_g as i64));
        let hc = q(e.h_check);
        if q(4) * alpha * &hc * &hc != hc + q(6) {
            return Err(format!("{}: 4 alpha h^2 != h + 6", e.spec));
        }
    }
    if let Some(r) = rows.iter().find(|r| r.2 != r.3) {
        return Err(format!("{}: library numerology disagrees", r.0));
    }
    for ty in ["A2", "G2", "F4"] {
        let r = check_okubo(s.get(ty).lie(), 20, SEED);
        require(&r, ty)?;
        if !r.detail.contains("quartic identity on 20 X") {
            return Err(format!("{ty}: {}", r.detail));
        }
    }
    Ok("4 alpha h^2 = h + 6 for 6 types; Tr(ad X)^4 = alpha K(X,X)^2 on 20 X for A2 G2 F4".into())
}

fn ac6(s: &Suite) -> Result<String, String> {
    let mut parts = Vec::new();
    for ty in ["G2", "F4"] {
        let t = s.get(ty);
        let r = check_nonpa(t, 100, SEED);
        require(&r, ty)?;
        let w: Witness =
            serde_json::from_value(r.witness.clone().ok_or("no witness recorded")?).map_err(|e| e.to_string())?;
        let a = w.dense(t.dim()).map_err(|e| e.to_string())?;
        // a(a(aa)) and (aa)(aa) from the table, independently of the residual helper.
        let aa = t.mul(&a, &a);
        let lhs = t.mul(&a, &t.mul(&a, &aa));
        let rhs = t.mul(&aa, &aa);
        if lhs == rhs {
            return Err(format!("{ty}: recorded witness is power-associative"));
        }
        parts.push(format!("{ty} witness support {}", w.element.len()));
    }
    let t = s.get("A2");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..1000 {
        let x = random_element(&mut rng, t.dim(), None);
        let y = random_element(&mut rng, t.dim(), None);
        if !rational::is_zero_vec(&pa1_residual(t.table(), &x))
            || !rational::is_zero_vec(&jordan_residual(t.table(), &x, &y))
        {
            return Err(format!("A2: nonzero residual at sample {i}"));
        }
    }
    parts.push("A2 residuals zero on 1000 samples".into());
    Ok(parts.join("; "))
}

fn ac7(s: &Suite) -> Result<String, String> {
    let r = check_idempotent_spectrum(s.get("G2"), 10, SEED);
    require(&r, "G2")?;
    let entries = r.witness.as_ref().and_then(|w| w.as_array()).ok_or("no entries")?;
    if entries.len() != 10 {
        return Err(format!("{} idempotents", entries.len()));
    }
    Ok(r.detail.clone())
}

fn ac8(s: &Suite) -> Result<String, String> {
    let t = s.get("A2");
    let rep = natural_rep_sl3().map_err(|e| e.to_string())?;
    let transported = sl3_transported_table(&rep, t.basis()).map_err(|e| e.to_string())?;
    let n = t.dim();
    let mut entries = 0;
    for a in 0..n {
        for b in 0..n {
            if transported.get(a, b) != t.table().get(a, b) {
                return Err(format!("entry ({a}, {b}) differs"));
            }
            entries += n;
        }
    }
    require(&check_sigma(t, Some(&rep)), "A2")?;
    Ok(format!("{entries} structure constants agree ({n}x{n}x{n})"))
}

fn ac9(s: &Suite) -> Result<String, String> {
    for ty in ["G2", "F4"] {
        require(&check_high_wt(s.get(ty).basis()), ty)?;
    }
    for ty in ["A3", "D4"] {
        let basis = s.get(ty).basis();
        let lie = basis.lie();
        let n = lie.dim();
        for a in 0..lie.datum().num_roots() {
            let x = rational::unit_vec(n, lie.root_vector(a));
            if !rational::is_zero_vec(&basis.coords(&Sym2::product(&x, &x))) {
                return Err(format!("{ty}: S(X_a^2) != 0 for root {:?}", lie.datum().root(a)));
            }
        }
        require(&check_high_wt(basis), ty)?;
    }
    Ok("G2 F4 pattern matches; S(X_a^2) = 0 on all roots of A3 D4".into())
}

fn ac10(s: &Suite) -> Result<String, String> {
    for ty in ["A2", "G2"] {
        let r = check_simplicity(s.get(ty), 20, SEED);
        require(&r, ty)?;
        if !r.detail.contains("20/20") {
            return Err(format!("{ty}: {}", r.detail));
        }
    }
    Ok("A2 G2: 20/20 elements generate the whole algebra".into())
}

fn ac11(s: &Suite) -> Result<String, String> {
    for (ty, b) in &s.built {
        let split = b.table.split_counit().map_err(|e| format!("{ty}: {e}"))?;
        if &split.reassembled_table() != b.table.table() {
            return Err(format!("{ty}: round trip changes the table"));
        }
        require(&check_counit_split(&b.table, 20, SEED), ty)?;
    }
    Ok(format!(
        "exact round trip on {} types; tau/f associativity equivalence sampled",
        s.built.len()
    ))
}

fn main() -> ExitCode {
    let t0 = Instant::now();
    let mut built = BTreeMap::new();
    for (ty, _) in EXPECTED_DIMS {
        let start = Instant::now();
        let table = AlgebraTable::build(spec(ty), Execution::Parallel).expect("supported type builds");
        built.insert(
            ty,
            Built {
                table,
                elapsed: start.elapsed(),
            },
        );
    }
    let mut suite = Suite { built, failures: 0 };
    let criteria: [(&str, Criterion); 11] = [
        ("dimension reproduction", ac1),
        ("classical-type formula", ac2),
        ("unit and trace identities", ac3),
        ("metrized form", ac4),
        ("Okubo numerology", ac5),
        ("non-power-associativity", ac6),
        ("Peirce evidence", ac7),
        ("construction-2 oracle equivalence", ac8),
        ("high-weight truth table", ac9),
        ("simplicity probe", ac10),
        ("unitize round trip", ac11),
    ];
    for (i, (title, f)) in criteria.iter().enumerate() {
        let outcome = f(&suite);
        suite.report(i + 1, title, outcome);
    }
    let total = criteria.len();
    println!(
        "acceptance: {}/{total} criteria passed in {:.1?}",
        total - suite.failures,
        t0.elapsed()
    );
    if suite.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
