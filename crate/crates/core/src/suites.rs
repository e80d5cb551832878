//! Batch verification: seeded instance streams for each suite, run in
//! parallel with reports assembled in instance order.

use crate::generate;
use crate::hagge::{build_hagge, verify_hagge_suite, HaggeOutcome};
use crate::numeric::Backend;
use crate::report::{Check, CheckReport, SuiteReport};
use crate::speckman::{build_speckman_through_h, oracle8, verify_speckman_suite};
use crate::Scalar;
use rayon::prelude::*;

/// Every instance gets its own generator derived from (seed, index), so
/// parallel execution cannot perturb the draws and reports stay ordered.
fn instance_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn backend_label(backend: Backend) -> &'static str {
    match backend {
        Backend::Rational => "rational",
        Backend::Float => "float",
    }
}

/// Run one named suite. Valid names: `hagge`, `speckman`, `section8`.
pub fn run_suite(
    name: &str,
    instances: usize,
    seed: u64,
    backend: Backend,
) -> Result<SuiteReport, String> {
    let per_instance: fn(u64, Backend) -> CheckReport = match name {
        "hagge" => hagge_instance,
        "speckman" => speckman_instance,
        "section8" => section8_instance,
        other => return Err(format!("unknown suite `{other}`")),
    };
    let reports: Vec<CheckReport> = (0..instances)
        .into_par_iter()
        .map(|i| per_instance(instance_seed(seed, i), backend))
        .collect();
    Ok(SuiteReport::assemble(name, seed, backend_label(backend), reports))
}

fn failure_report(instance: serde_json::Value, backend: &str, detail: String) -> CheckReport {
    let mut r = CheckReport::new(instance, backend);
    r.checks.push(Check::with_detail(
        "construction",
        "the instance admits the construction",
        false,
        detail,
    ));
    r
}

fn hagge_instance(seed: u64, backend: Backend) -> CheckReport {
    let mut rng = generate::rng_for(seed);
    let (tri, p, cfg) = generate::random_hagge(&mut rng);
    match backend {
        Backend::Rational => verify_hagge_suite(&cfg),
        Backend::Float => {
            let tri = tri.to_float_backend();
            let p = p.to_float_backend();
            match build_hagge(&tri, &p) {
                Ok(HaggeOutcome::Config(cfg)) => verify_hagge_suite(&cfg),
                Ok(HaggeOutcome::PointCircle(_)) | Err(_) => failure_report(
                    serde_json::json!({ "triangle": tri, "p": p }),
                    "float",
                    "float rebuild of an exact instance failed".to_string(),
                ),
            }
        }
    }
}

fn speckman_instance(seed: u64, backend: Backend) -> CheckReport {
    let mut rng = generate::rng_for(seed);
    let (tri, m_slope, k, cfg) = generate::random_speckman_h(&mut rng);
    match backend {
        Backend::Rational => verify_speckman_suite(&cfg),
        Backend::Float => {
            let tri = tri.to_float_backend();
            match build_speckman_through_h(
                &tri,
                &m_slope.to_float_backend(),
                &k.to_float_backend(),
            ) {
                Ok(cfg) => verify_speckman_suite(&cfg),
                Err(e) => failure_report(
                    serde_json::json!({ "triangle": tri }),
                    "float",
                    format!("float rebuild of an exact instance failed: {e}"),
                ),
            }
        }
    }
}

/// The closed-form audit ignores the backend: it is exact by construction.
fn section8_instance(seed: u64, _backend: Backend) -> CheckReport {
    use rand::Rng;
    let mut rng = generate::rng_for(seed);
    loop {
        let draw = |rng_: &mut rand_chacha::ChaCha8Rng| {
            Scalar::ratio(rng_.gen_range(-8..=8i64), rng_.gen_range(1..=3i64))
        };
        let (v, w, m, k) = (draw(&mut rng), draw(&mut rng), draw(&mut rng), draw(&mut rng));
        match oracle8(&v, &w, &m, &k) {
            Ok(report) => return report,
            Err(_) => continue,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_run_and_unknown_names_are_rejected() {
        for name in ["hagge", "speckman", "section8"] {
            let report = run_suite(name, 2, 5, Backend::Rational).unwrap();
            assert_eq!(report.instance_count, 2);
            assert!(report.passed, "{name}");
        }
        assert!(run_suite("bogus", 1, 0, Backend::Rational).is_err());
    }

    #[test]
    fn identical_seeds_give_identical_reports() {
        let a = run_suite("hagge", 3, 11, Backend::Rational).unwrap();
        let b = run_suite("hagge", 3, 11, Backend::Rational).unwrap();
        assert_eq!(
            crate::report::to_canonical_json(&a),
            crate::report::to_canonical_json(&b)
        );
    }
}
