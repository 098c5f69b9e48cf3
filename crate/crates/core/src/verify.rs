//! Verification suites, each a list of named checks for one partition.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fixed_points::{equivariance_check, generators_vanish_check};
use crate::groebner::{generic_rank, ideal_equality, localization_injectivity, OrderKind};
use crate::identities::{
    binomial_specialization_check, compact_equivalence_check, full_flag_action_check, series_bridge_check,
    truncation_check, vanishing_identity_check,
};
use crate::partition::Partition;
use crate::poly::{Coeff, Family};
use crate::presentation::{
    classical_tanisaki_ideal, equivariant_cohomology_ideal, equivariant_k_ideal, flag_ideal, ordinary_k_ideal,
    relation_index_set, specialize_ideal, IdealPresentation, Specialization,
};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Gkm,
    Rank,
    Equivariance,
    Specialize,
    PowerSeries,
    Identities,
    FlagConsistency,
    All,
}

impl Suite {
    /// The concrete suites, in reporting order.
    pub const EACH: [Suite; 7] = [
        Suite::Gkm,
        Suite::Rank,
        Suite::Equivariance,
        Suite::Specialize,
        Suite::PowerSeries,
        Suite::Identities,
        Suite::FlagConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gkm => "gkm",
            Suite::Rank => "rank",
            Suite::Equivariance => "equivariance",
            Suite::Specialize => "specialize",
            Suite::PowerSeries => "powerseries",
            Suite::Identities => "identities",
            Suite::FlagConsistency => "flag-consistency",
            Suite::All => "all",
        }
    }

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName { kind: "suite", value: s.to_string() })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub retries: u32,
    pub order: OrderKind,
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: crate::groebner::DEFAULT_SEED,
            retries: crate::groebner::DEFAULT_RETRIES,
            order: OrderKind::GrevLex,
            timings: false,
        }
    }
}

type Check = fn(&Partition, &VerifyConfig) -> Vec<CheckReport>;

fn checks(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Gkm => vec![check_vanishing, check_injectivity],
        Suite::Rank => vec![check_rank_eqk, check_rank_eqcoh, check_rank_classical],
        Suite::Equivariance => vec![check_equivariance, check_full_flag_action],
        Suite::Specialize => vec![check_ordinary, check_classical_limit, check_binomials],
        Suite::PowerSeries => vec![check_series_bridge],
        Suite::Identities => vec![check_compact, check_residuals, check_truncation],
        Suite::FlagConsistency => vec![check_flag_equality, check_flag_rank],
        Suite::All => unreachable!("expanded before lookup"),
    }
}

/// Runs `suite` on `lambda`. Checks run concurrently; the returned order is
/// fixed by suite and check position.
pub fn run_suite(suite: Suite, lambda: &Partition, config: &VerifyConfig) -> Vec<CheckReport> {
    let jobs: Vec<Check> = suite.expand().into_iter().flat_map(checks).collect();
    jobs.par_iter()
        .map(|check| {
            let start = Instant::now();
            let mut reports = check(lambda, config);
            if config.timings {
                let ms = start.elapsed().as_millis() as u64;
                for r in &mut reports {
                    r.elapsed_ms = Some(ms);
                }
            }
            reports
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn rank_report(
    lambda: &Partition,
    ideal: &IdealPresentation,
    check: &str,
    expected: &BigUint,
    config: &VerifyConfig,
) -> std::result::Result<CheckReport, Error> {
    let r = generic_rank(ideal, config.seed, config.retries, config.order)?;
    Ok(CheckReport::new(lambda, check, expected, r.rank).with_seed(config.seed))
}

fn rank_check(lambda: &Partition, ideal: IdealPresentation, check: &str, config: &VerifyConfig) -> Vec<CheckReport> {
    let expected = lambda.multinomial();
    vec![rank_report(lambda, &ideal, check, &expected, config)
        .unwrap_or_else(|e| CheckReport::failed(lambda, check, &expected, e).with_seed(config.seed))]
}

fn check_vanishing(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let check = "generators_vanish";
    match generators_vanish_check(lambda) {
        Ok(r) => vec![CheckReport::new(lambda, check, 0, r.violations.len())
            .with_counterexample(r.violations.first())],
        Err(e) => vec![CheckReport::failed(lambda, check, 0, e)],
    }
}

fn check_injectivity(lambda: &Partition, config: &VerifyConfig) -> Vec<CheckReport> {
    let check = "localization_injectivity";
    let m = lambda.multinomial();
    match localization_injectivity(lambda, config.seed, config.retries) {
        Ok(r) => {
            let detail = (!r.full_rank).then_some(&r);
            vec![CheckReport::new(lambda, check, &m, r.rank)
                .with_seed(r.seed)
                .with_counterexample(detail)]
        }
        Err(e) => vec![CheckReport::failed(lambda, check, m, e)],
    }
}

fn check_rank_eqk(lambda: &Partition, config: &VerifyConfig) -> Vec<CheckReport> {
    rank_check(lambda, equivariant_k_ideal(lambda), "generic_rank", config)
}

fn check_rank_eqcoh(lambda: &Partition, config: &VerifyConfig) -> Vec<CheckReport> {
    rank_check(lambda, equivariant_cohomology_ideal(lambda), "generic_rank_eqcoh", config)
}

fn check_rank_classical(lambda: &Partition, config: &VerifyConfig) -> Vec<CheckReport> {
    rank_check(lambda, classical_tanisaki_ideal(lambda), "rank_classical", config)
}

fn check_equivariance(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let check = "equivariance";
    match equivariance_check(lambda) {
        Ok(r) => vec![CheckReport::new(lambda, check, 0, r.violations.len())
            .with_counterexample(r.violations.first())],
        Err(e) => vec![CheckReport::failed(lambda, check, 0, e)],
    }
}

fn check_full_flag_action(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    if lambda.parts().iter().any(|&p| p != 1) {
        return Vec::new();
    }
    let check = "full_flag_action";
    match full_flag_action_check(lambda.size()) {
        Ok(ok) => vec![CheckReport::new(lambda, check, true, ok)],
        Err(e) => vec![CheckReport::failed(lambda, check, true, e)],
    }
}

fn check_ordinary(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let check = "ordinary_specialization";
    let sigma = Specialization::constant_family(Family::U, lambda.length(), Coeff::one());
    let result = specialize_ideal(&equivariant_k_ideal(lambda), &sigma)
        .and_then(|special| ideal_equality(&special.polynomials(), &ordinary_k_ideal(lambda).polynomials()));
    match result {
        Ok(eq) => vec![CheckReport::new(lambda, check, true, eq)],
        Err(e) => vec![CheckReport::failed(lambda, check, true, e)],
    }
}

fn check_classical_limit(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let check = "classical_limit";
    let sigma = Specialization::constant_family(Family::U, lambda.length(), Coeff::zero());
    let classical = classical_tanisaki_ideal(lambda);
    match specialize_ideal(&equivariant_cohomology_ideal(lambda), &sigma) {
        Ok(special) => {
            let mut a: Vec<String> = special.polynomials().iter().map(ToString::to_string).collect();
            let mut b: Vec<String> = classical.polynomials().iter().map(ToString::to_string).collect();
            let same_space = special.ambient() == classical.ambient();
            a.sort();
            b.sort();
            vec![CheckReport::new(lambda, check, true, same_space && a == b)]
        }
        Err(e) => vec![CheckReport::failed(lambda, check, true, e)],
    }
}

/// Every `(s, d, k, q)` with `s ≤ max_s`, `0 ≤ k ≤ d ≤ s` and
/// `s+1−d ≤ q ≤ s+2`.
pub fn binomial_sweep(max_s: usize) -> (usize, Vec<(usize, usize, usize, usize)>) {
    let mut checked = 0;
    let mut failures = Vec::new();
    for s in 0..=max_s {
        for d in 0..=s {
            for k in 0..=d {
                for q in (s + 1 - d).max(1)..=s + 2 {
                    checked += 1;
                    if !binomial_specialization_check(s, d, k, q).unwrap_or(false) {
                        failures.push((s, d, k, q));
                    }
                }
            }
        }
    }
    (checked, failures)
}

fn check_binomials(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let (_, failures) = binomial_sweep(lambda.size().max(8));
    vec![CheckReport::new(lambda, "binomial_specialization", 0, failures.len())
        .with_counterexample(failures.first())]
}

fn check_series_bridge(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let r = series_bridge_check(lambda);
    vec![CheckReport::new(lambda, "series_coefficient", 0, r.mismatches.len())
        .with_counterexample(r.mismatches.first())]
}

fn check_compact(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let r = compact_equivalence_check(lambda);
    vec![CheckReport::new(lambda, "compact_equivalence", 0, r.mismatches.len())
        .with_counterexample(r.mismatches.first())]
}

fn check_residuals(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let check = "vanishing_identity";
    let mut pairs: Vec<(usize, usize)> = relation_index_set(lambda).into_iter().map(|(s, _, d)| (s, d)).collect();
    pairs.dedup();
    let mut failures = Vec::new();
    for (s, d) in pairs {
        match vanishing_identity_check(lambda, s, d) {
            Ok(r) if r.holds => {}
            Ok(r) => failures.push(serde_json::json!({"s": s, "d": d, "residual": r.residual.to_string()})),
            Err(e) => return vec![CheckReport::failed(lambda, check, 0, e)],
        }
    }
    vec![CheckReport::new(lambda, check, 0, failures.len()).with_counterexample(failures.first())]
}

fn check_truncation(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let r = truncation_check(lambda);
    vec![CheckReport::new(lambda, "truncation", 0, r.nonzero.len()).with_counterexample(r.nonzero.first())]
}

fn full_flag_partition(n: usize) -> Partition {
    Partition::new(vec![1; n]).expect("n ≥ 1")
}

fn check_flag_equality(lambda: &Partition, _: &VerifyConfig) -> Vec<CheckReport> {
    let check = "flag_ideal_equality";
    let n = lambda.size();
    let sigma = Specialization::rename_family(Family::U, Family::T, n);
    let result = specialize_ideal(&equivariant_k_ideal(&full_flag_partition(n)), &sigma).and_then(|renamed| {
        let flag = flag_ideal(n)?;
        ideal_equality(&renamed.polynomials(), &flag.polynomials())
    });
    match result {
        Ok(eq) => vec![CheckReport::new(lambda, check, true, eq)],
        Err(e) => vec![CheckReport::failed(lambda, check, true, e)],
    }
}

fn check_flag_rank(lambda: &Partition, config: &VerifyConfig) -> Vec<CheckReport> {
    let n = lambda.size();
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    let result = flag_ideal(n).and_then(|flag| rank_report(lambda, &flag, "flag_rank", &factorial, config));
    vec![result.unwrap_or_else(|e| CheckReport::failed(lambda, "flag_rank", &factorial, e).with_seed(config.seed))]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn hook_passes_everything() {
        let lambda = Partition::new(vec![2, 1]).unwrap();
        let reports = run_suite(Suite::All, &lambda, &VerifyConfig::default());
        assert!(reports.len() >= 15);
        for r in &reports {
            assert!(r.pass, "{r}");
            assert!(r.elapsed_ms.is_none());
        }
    }

    #[test]
    fn sweep_covers_small_cases() {
        let (checked, failures) = binomial_sweep(3);
        assert!(checked > 10);
        assert!(failures.is_empty());
    }
}
