//! Exact polynomial recovery from oracle samples, identity verification, and
//! the positivity scan.
//!
//! Orbit counts are polynomials in the residue-field size, so sampling at
//! enough primes pins them down exactly. Sample points are the smallest
//! primes (cost grows as `p^|λ|`), interpolation is exact rational Lagrange
//! with an integrality check, and every recovered polynomial is re-evaluated
//! at held-out primes against fresh oracle counts. No tolerances exist
//! anywhere: all comparisons are exact.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::heightzero;
use crate::lattice::enumerate_realized_ideals;
use crate::oracle::{n_lambda_at, OracleConfig, StabilizerContext};
use crate::partition::Partition;
use crate::poly::IntPoly;
use crate::poset::OrderIdeal;

/// The first `count` primes, by trial division.
pub fn smallest_primes(count: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(count);
    let mut n = 2u64;
    while primes.len() < count {
        if primes.iter().all(|&p| !n.is_multiple_of(p)) {
            primes.push(n);
        }
        n += 1;
    }
    primes
}

/// A degree bound with its sample and verification primes.
#[derive(Clone, Debug)]
pub struct SamplePlan {
    pub degree_bound: usize,
    pub sample_points: Vec<u64>,
    pub verification_points: Vec<u64>,
}

impl SamplePlan {
    /// `degree_bound + 1` sample primes plus `verification` held-out primes,
    /// all the smallest available and mutually disjoint.
    pub fn for_degree(degree_bound: usize, verification: usize) -> Self {
        let primes = smallest_primes(degree_bound + 1 + verification);
        let sample_points = primes[..=degree_bound].to_vec();
        let verification_points = primes[degree_bound + 1..].to_vec();
        SamplePlan {
            degree_bound,
            sample_points,
            verification_points,
        }
    }

    pub fn all_points(&self) -> Vec<u64> {
        let mut pts = self.sample_points.clone();
        pts.extend(&self.verification_points);
        pts
    }
}

/// Exact Lagrange interpolation through the first `degree_bound + 1` values;
/// all remaining values are held out and must match the recovered
/// polynomial, and every coefficient must be an integer.
pub fn interpolate(values: &[(u64, BigInt)], degree_bound: usize) -> Result<IntPoly> {
    if values.len() < degree_bound + 1 {
        return Err(Error::Interpolation(format!(
            "need {} points for degree bound {degree_bound}, got {}",
            degree_bound + 1,
            values.len()
        )));
    }
    let base = &values[..=degree_bound];
    {
        let mut xs: Vec<u64> = base.iter().map(|&(x, _)| x).collect();
        xs.sort_unstable();
        xs.dedup();
        if xs.len() != base.len() {
            return Err(Error::Interpolation("duplicate sample points".into()));
        }
    }
    let mut acc = vec![BigRational::zero(); degree_bound + 1];
    for (i, (xi, yi)) in base.iter().enumerate() {
        // numerator Π_{j≠i} (x - x_j), denominator Π_{j≠i} (x_i - x_j)
        let mut numer = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in base.iter().enumerate() {
            if j == i {
                continue;
            }
            let root = BigRational::from(BigInt::from(*xj));
            // numer *= (x - root), in place from the top coefficient down.
            numer.push(BigRational::zero());
            for k in (0..numer.len()).rev() {
                let lower = if k > 0 {
                    numer[k - 1].clone()
                } else {
                    BigRational::zero()
                };
                numer[k] = lower - &root * &numer[k];
            }
            denom *= BigRational::from(BigInt::from(*xi)) - root;
        }
        let scale = BigRational::from(yi.clone()) / denom;
        for (k, c) in numer.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(acc.len());
    for (k, c) in acc.iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::Interpolation(format!(
                "coefficient of q^{k} is not an integer: {c}"
            )));
        }
        coeffs.push(c.to_integer());
    }
    let poly = IntPoly::from_coeffs(coeffs);
    for (x, y) in &values[degree_bound + 1..] {
        let got = poly.eval_u64(*x);
        if &got != y {
            return Err(Error::Interpolation(format!(
                "verification point q={x}: polynomial gives {got}, oracle gives {y}"
            )));
        }
    }
    Ok(poly)
}

/// Recovers a polynomial from a sampler, escalating the degree bound once
/// (by 2) if interpolation or verification fails. Returns the polynomial and
/// the sample primes used. Sampler errors (budget) propagate immediately.
pub fn recover_polynomial<F>(initial_bound: usize, sampler: F) -> Result<(IntPoly, Vec<u64>)>
where
    F: Fn(u64) -> Result<BigInt> + Sync,
{
    let mut cache: HashMap<u64, BigInt> = HashMap::new();
    let mut last_err = None;
    for bound in [initial_bound, initial_bound + 2] {
        let plan = SamplePlan::for_degree(bound, 2);
        let points = plan.all_points();
        let missing: Vec<u64> = points
            .iter()
            .copied()
            .filter(|p| !cache.contains_key(p))
            .collect();
        let sampled: Result<Vec<(u64, BigInt)>> = missing
            .par_iter()
            .map(|&p| sampler(p).map(|v| (p, v)))
            .collect();
        cache.extend(sampled?);
        let values: Vec<(u64, BigInt)> = points.iter().map(|p| (*p, cache[p].clone())).collect();
        match interpolate(&values, bound) {
            Ok(poly) => return Ok((poly, plan.sample_points)),
            Err(e) => last_err = Some(e),
        }
    }
    Err(Error::Interpolation(format!(
        "degree bounds {initial_bound} and {} both failed: {}",
        initial_bound + 2,
        last_err.expect("loop ran")
    )))
}

/// The orbit-of-pairs polynomial, recovered from samples at the smallest
/// `λ_1 + 3` primes. The degree is asserted to be exactly `λ_1`.
pub fn n_lambda_poly(shape: &Partition, config: &OracleConfig) -> Result<IntPoly> {
    Ok(n_lambda_poly_with_provenance(shape, config)?.0)
}

/// Same, returning the sample primes used.
pub fn n_lambda_poly_with_provenance(
    shape: &Partition,
    config: &OracleConfig,
) -> Result<(IntPoly, Vec<u64>)> {
    let bound = shape.largest_part() as usize;
    let (poly, primes) = recover_polynomial(bound, |p| {
        n_lambda_at(shape, p as u32, config).map(BigInt::from)
    })?;
    if poly.degree() != Some(bound) {
        return Err(Error::Verification(format!(
            "pair-orbit polynomial of {shape} has degree {:?}, expected {bound}: {poly}",
            poly.degree()
        )));
    }
    Ok((poly, primes))
}

/// Interpolated stabilizer-orbit polynomials `(on A, on πA)` for one
/// realized ideal, without the closed-form cross-check.
pub fn ideal_polys_interpolated(
    shape: &Partition,
    ideal: &OrderIdeal,
    config: &OracleConfig,
) -> Result<(IntPoly, IntPoly, Vec<u64>)> {
    if !ideal.is_realized() {
        return Err(Error::UnrealizedIdeal(ideal.boundary_text()));
    }
    let initial_bound = shape.largest_part() as usize;
    let mut cache: HashMap<u64, (BigInt, BigInt)> = HashMap::new();
    let mut last_err = None;
    for bound in [initial_bound, initial_bound + 2] {
        let plan = SamplePlan::for_degree(bound, 2);
        let points = plan.all_points();
        let missing: Vec<u64> = points
            .iter()
            .copied()
            .filter(|p| !cache.contains_key(p))
            .collect();
        let sampled: Result<Vec<(u64, (BigInt, BigInt))>> = missing
            .par_iter()
            .map(|&p| {
                let ctx = StabilizerContext::new(shape, p as u32, ideal, config)?;
                Ok((
                    p,
                    (
                        BigInt::from(ctx.count_orbits(false)),
                        BigInt::from(ctx.count_orbits(true)),
                    ),
                ))
            })
            .collect();
        cache.extend(sampled?);
        let full: Vec<(u64, BigInt)> = points.iter().map(|p| (*p, cache[p].0.clone())).collect();
        let pi: Vec<(u64, BigInt)> = points.iter().map(|p| (*p, cache[p].1.clone())).collect();
        match (interpolate(&full, bound), interpolate(&pi, bound)) {
            (Ok(n), Ok(n1)) => return Ok((n, n1, plan.sample_points)),
            (Err(e), _) | (_, Err(e)) => last_err = Some(e),
        }
    }
    Err(Error::Interpolation(format!(
        "stabilizer-orbit polynomials for ({}) over {shape}: {}",
        ideal.boundary_text(),
        last_err.expect("loop ran")
    )))
}

/// Interpolated stabilizer-orbit polynomials, cross-checked against the
/// closed forms whenever the ideal is height-zero principal.
pub fn n_ideal_poly(
    shape: &Partition,
    ideal: &OrderIdeal,
    config: &OracleConfig,
) -> Result<(IntPoly, IntPoly, Vec<u64>)> {
    let (n, n1, primes) = ideal_polys_interpolated(shape, ideal, config)?;
    if ideal.is_height_zero() && ideal.is_principal() && !ideal.is_empty_ideal() {
        let max = ideal.max_elements();
        let index = shape
            .part_index(max[0].part)
            .expect("maximal element sits in a row of the shape");
        let sym = heightzero::orbit_poly(shape, index);
        let sym1 = heightzero::pi_orbit_poly(shape, index);
        if n != sym || n1 != sym1 {
            return Err(Error::Verification(format!(
                "interpolated ({n}, {n1}) disagrees with closed form ({sym}, {sym1}) \
                 for ideal ({}) over {shape}",
                ideal.boundary_text()
            )));
        }
    }
    Ok((n, n1, primes))
}

/// One named identity check with both sides rendered.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

/// The identity report of one shape.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub shape: Partition,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(
    name: impl Into<String>,
    lhs: impl ToString,
    rhs: impl ToString,
    passed: bool,
) -> CheckResult {
    CheckResult {
        name: name.into(),
        passed,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// Verifies every identity the counting theory states for one shape:
///
/// 1. the column-deletion difference `n_λ − n_λ̃` equals the sum of the
///    stabilizer-orbit polynomials over the realized height-zero ideals;
/// 2. capping multiplicities at 2 does not change `n_λ`;
/// 3. `deg n_λ = λ_1`;
/// 4. interpolation agrees with the closed forms on height-zero principal
///    ideals;
/// 5. the coefficient profiles equal the closed-form coefficient lists;
/// 6. `n_λ` has non-negative coefficients.
///
/// Failures are report entries, not errors; only infrastructure failures
/// (budget, interpolation) abort.
pub fn verify_identities(shape: &Partition, config: &OracleConfig) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    let bound = shape.largest_part() as usize;
    let (n_poly, _) = recover_polynomial(bound, |p| {
        n_lambda_at(shape, p as u32, config).map(BigInt::from)
    })?;

    // Height-zero ideals, via interpolation (the general route).
    let mut hz_sum = IntPoly::zero();
    for ideal in enumerate_realized_ideals(shape) {
        if !ideal.is_height_zero() {
            continue;
        }
        let (n_i, n1_i, _) = ideal_polys_interpolated(shape, &ideal, config)?;
        hz_sum = &hz_sum + &(&n_i + &n1_i);
        if ideal.is_principal() {
            let index = shape
                .part_index(ideal.max_elements()[0].part)
                .expect("maximal element sits in a row");
            let sym = heightzero::orbit_poly(shape, index);
            let sym1 = heightzero::pi_orbit_poly(shape, index);
            checks.push(check(
                format!("closed form at ({})", ideal.boundary_text()),
                format!("interpolated ({n_i}, {n1_i})"),
                format!("closed form ({sym}, {sym1})"),
                n_i == sym && n1_i == sym1,
            ));
        }
    }

    let tilde = shape.delete_first_column();
    let tilde_bound = tilde.largest_part() as usize;
    let (n_tilde, _) = recover_polynomial(tilde_bound, |p| {
        n_lambda_at(&tilde, p as u32, config).map(BigInt::from)
    })?;
    let diff = &n_poly - &n_tilde;
    checks.push(check(
        "column-deletion difference",
        &diff,
        &hz_sum,
        diff == hz_sum,
    ));

    let capped = shape.cap_multiplicities();
    if capped != *shape {
        let (n_capped, _) = recover_polynomial(capped.largest_part() as usize, |p| {
            n_lambda_at(&capped, p as u32, config).map(BigInt::from)
        })?;
        checks.push(check(
            "multiplicity cap",
            &n_poly,
            &n_capped,
            n_poly == n_capped,
        ));
    } else {
        checks.push(check("multiplicity cap", &n_poly, &n_poly, true));
    }

    checks.push(check(
        "degree",
        format!("{:?}", n_poly.degree()),
        format!("Some({bound})"),
        n_poly.degree() == Some(bound),
    ));

    for index in 0..shape.parts().len() {
        let profile = heightzero::coefficient_profile(shape, index);
        let n_sym = heightzero::orbit_poly(shape, index);
        let n1_sym = heightzero::pi_orbit_poly(shape, index);
        let part = shape.parts()[index].0 as usize;
        let full_ok = (0..=part).all(|j| BigInt::from(profile.full[j]) == n_sym.coeff(j));
        let pi_ok = (0..part).all(|j| BigInt::from(profile.pi[j]) == n1_sym.coeff(j));
        checks.push(check(
            format!("coefficient profile at part {}", shape.parts()[index].0),
            format!("profile {:?} / {:?}", profile.full, profile.pi),
            format!("coefficients of {n_sym} / {n1_sym}"),
            full_ok && pi_ok,
        ));
    }

    checks.push(check(
        "non-negative coefficients",
        &n_poly,
        "all coefficients >= 0",
        n_poly.is_nonnegative(),
    ));

    Ok(VerifyReport {
        shape: shape.clone(),
        checks,
    })
}

/// Reference comparison status of one scanned shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefStatus {
    Match,
    Mismatch { expected: IntPoly },
    Absent,
}

#[derive(Clone, Debug)]
pub enum ScanOutcome {
    Computed {
        poly: IntPoly,
        nonnegative: bool,
        reference: Option<RefStatus>,
    },
    /// Budget exhaustion: recorded, not fatal.
    Skipped { reason: String },
    /// Any other failure: a finding, reported loudly.
    Failed { reason: String },
}

#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub shape: Partition,
    pub outcome: ScanOutcome,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub max_weight: u64,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    /// True when no computed entry has a negative coefficient, no entry
    /// failed, and no reference mismatch occurred.
    pub fn is_clean(&self) -> bool {
        self.entries.iter().all(|e| match &e.outcome {
            ScanOutcome::Computed {
                nonnegative,
                reference,
                ..
            } => *nonnegative && !matches!(reference, Some(RefStatus::Mismatch { .. })),
            ScanOutcome::Skipped { .. } => true,
            ScanOutcome::Failed { .. } => false,
        })
    }
}

/// Computes `n_λ` for every capped shape of weight at most `max_weight`,
/// reporting negative coefficients and disagreements with a reference table.
pub fn conjecture_scan(
    max_weight: u64,
    config: &OracleConfig,
    reference: Option<&HashMap<String, IntPoly>>,
) -> ScanReport {
    let mut entries = Vec::new();
    for shape in Partition::capped_up_to_weight(max_weight) {
        let outcome = match n_lambda_poly(&shape, config) {
            Ok(poly) => {
                let reference = reference.map(|table| match table.get(&shape.to_string()) {
                    None => RefStatus::Absent,
                    Some(expected) if *expected == poly => RefStatus::Match,
                    Some(expected) => RefStatus::Mismatch {
                        expected: expected.clone(),
                    },
                });
                ScanOutcome::Computed {
                    nonnegative: poly.is_nonnegative(),
                    poly,
                    reference,
                }
            }
            Err(e @ Error::BudgetExceeded { .. }) => ScanOutcome::Skipped {
                reason: e.to_string(),
            },
            Err(e) => ScanOutcome::Failed {
                reason: e.to_string(),
            },
        };
        entries.push(ScanEntry { shape, outcome });
    }
    ScanReport {
        max_weight,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn primes_and_plans() {
        assert_eq!(smallest_primes(6), vec![2, 3, 5, 7, 11, 13]);
        let plan = SamplePlan::for_degree(2, 2);
        assert_eq!(plan.sample_points, vec![2, 3, 5]);
        assert_eq!(plan.verification_points, vec![7, 11]);
        assert_eq!(plan.sample_points.len(), plan.degree_bound + 1);
    }

    #[test]
    fn interpolation_examples() {
        // Samples of the pair-orbit count of (2^1): 10, 17, 37.
        let values = vec![
            (2u64, BigInt::from(10)),
            (3u64, BigInt::from(17)),
            (5u64, BigInt::from(37)),
        ];
        assert_eq!(interpolate(&values, 2).unwrap(), poly(&[2, 2, 1]));

        let constant = vec![(2u64, BigInt::from(7))];
        assert_eq!(interpolate(&constant, 0).unwrap(), poly(&[7]));

        // (2^2): q^2 + 3q + 5 evaluates to 15, 23, 45.
        let values = vec![
            (2u64, BigInt::from(15)),
            (3u64, BigInt::from(23)),
            (5u64, BigInt::from(45)),
        ];
        assert_eq!(interpolate(&values, 2).unwrap(), poly(&[5, 3, 1]));
    }

    #[test]
    fn interpolation_rejects_bad_data() {
        // Non-polynomial data over an escalated-degree check: q -> 2^q has
        // no integer quadratic through (2,4),(3,8),(5,32) matching (7,128).
        let values = vec![
            (2u64, BigInt::from(4)),
            (3u64, BigInt::from(8)),
            (5u64, BigInt::from(32)),
            (7u64, BigInt::from(128)),
        ];
        assert!(interpolate(&values, 2).is_err());
        assert!(interpolate(&values[..2], 2).is_err());
    }

    #[test]
    fn recover_with_escalation() {
        // A cubic sampler under an initial bound of 1 succeeds after one
        // escalation to bound 3.
        let target = poly(&[1, 0, 2, 1]);
        let t = target.clone();
        let (got, primes) = recover_polynomial(1, move |q| Ok(t.eval_u64(q))).unwrap();
        assert_eq!(got, target);
        assert_eq!(primes.len(), 4);
    }
}
