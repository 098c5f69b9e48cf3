use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{buchberger, fraction_free_rank, MonomialOrder, OrderKind, QuotientBasis, QuotientDimension};
use crate::error::{Error, Result};
use crate::fixed_points::{fixed_points, restrict, restriction_space};
use crate::partition::Partition;
use crate::poly::{Coeff, Family, Polynomial, Substitution, Var};
use crate::presentation::{equivariant_k_ideal, specialize_ideal, IdealPresentation, SpecValue, Specialization};

pub const DEFAULT_SEED: u64 = 17;
pub const DEFAULT_RETRIES: u32 = 3;

const PRIMES: [i64; 32] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103,
    107, 109, 113, 127, 131,
];

/// `count` distinct primes, permuted deterministically by `seed`.
pub fn generic_values(seed: u64, count: usize) -> Result<Vec<i64>> {
    if count > PRIMES.len() {
        return Err(Error::OutOfRange(format!("at most {} generic values available", PRIMES.len())));
    }
    let mut primes = PRIMES.to_vec();
    primes.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    primes.truncate(count);
    Ok(primes)
}

/// Assigns generic values to every coefficient variable of `ideal`, in
/// variable order (`u` block, then `t` block).
pub fn generic_point(ideal: &IdealPresentation, seed: u64) -> Result<Specialization> {
    let vars: Vec<Var> = ideal
        .ambient()
        .vars()
        .filter(|v| v.family != Family::X)
        .collect();
    let values = generic_values(seed, vars.len())?;
    let mut sigma = Specialization::new();
    for (var, value) in vars.into_iter().zip(values) {
        sigma.assign(var, SpecValue::Const(Coeff::from_integer(value.into())));
    }
    Ok(sigma)
}

pub fn specialize_generic(ideal: &IdealPresentation, seed: u64) -> Result<IdealPresentation> {
    let sigma = generic_point(ideal, seed)?;
    if sigma.assignments().is_empty() {
        return Ok(ideal.clone());
    }
    specialize_ideal(ideal, &sigma)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seeds for attempt `attempt`: `(seed, seed + 1)` first, then fresh
/// pairs mixed from `seed`.
fn attempt_seeds(seed: u64, attempt: u32) -> (u64, u64) {
    if attempt == 0 {
        return (seed, seed.wrapping_add(1));
    }
    (splitmix(seed ^ (2 * attempt as u64)), splitmix(seed ^ (2 * attempt as u64 + 1)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericRank {
    pub rank: usize,
    pub seeds: (u64, u64),
    pub attempts: u32,
}

fn quotient_dimension_at(ideal: &IdealPresentation, seed: u64, kind: OrderKind) -> Result<QuotientDimension> {
    let special = specialize_generic(ideal, seed)?;
    let order = MonomialOrder::new(kind, special.ambient());
    Ok(buchberger(&special.polynomials(), &order)?.quotient_dimension())
}

/// Dimension of the quotient at a generic point of the coefficient
/// variables, certified by agreement at two independent points.
pub fn generic_rank(ideal: &IdealPresentation, seed: u64, retries: u32, kind: OrderKind) -> Result<GenericRank> {
    let has_parameters = ideal.ambient().families().iter().any(|&(f, _)| f != Family::X);
    let attempts = retries.max(1);
    let mut last = String::new();
    for attempt in 0..attempts {
        let (s1, mut s2) = attempt_seeds(seed, attempt);
        if !has_parameters {
            return match quotient_dimension_at(ideal, s1, kind)? {
                QuotientDimension::Finite(rank) => Ok(GenericRank { rank, seeds: (s1, s1), attempts: 1 }),
                QuotientDimension::Infinite => Err(Error::InfiniteQuotient),
            };
        }
        let count = ideal.ambient().len() - ideal.ambient().arity(Family::X);
        while generic_values(s2, count)? == generic_values(s1, count)? {
            s2 = splitmix(s2);
        }
        let d1 = quotient_dimension_at(ideal, s1, kind)?;
        let d2 = quotient_dimension_at(ideal, s2, kind)?;
        match (d1, d2) {
            (QuotientDimension::Finite(a), QuotientDimension::Finite(b)) if a == b => {
                return Ok(GenericRank { rank: a, seeds: (s1, s2), attempts: attempt + 1 });
            }
            (QuotientDimension::Infinite, QuotientDimension::Infinite) => return Err(Error::InfiniteQuotient),
            _ => last = format!("seeds {s1} and {s2} gave dimensions {d1} and {d2}"),
        }
    }
    Err(Error::Degenerate { attempts, detail: last })
}

#[derive(Clone, Debug, Serialize)]
pub struct InjectivityReport {
    /// `multinomial(λ)`, the number of fixed points.
    pub points: usize,
    /// Number of standard monomials (rows).
    pub monomials: usize,
    pub rank: usize,
    pub full_rank: bool,
    pub seed: u64,
    pub values: Vec<i64>,
}

fn evaluation_matrix(
    lambda: &Partition,
    basis: &QuotientBasis,
    values: &[i64],
) -> Result<Vec<Vec<BigInt>>> {
    let eqk = equivariant_k_ideal(lambda);
    let ambient = eqk.ambient();
    let points = fixed_points(lambda);
    let target = restriction_space(lambda);
    let constants = crate::poly::VariableSpace::new(&[])?;
    let mut evaluate = Substitution::total(&target, &constants);
    for (j, &value) in values.iter().enumerate() {
        evaluate.map_const(Var::u(j + 1), Coeff::from_integer(value.into()))?;
    }
    let mut rows = Vec::with_capacity(basis.len());
    for monomial in basis.as_polynomials() {
        let lifted: Polynomial = monomial.embed(ambient)?;
        let mut row = Vec::with_capacity(points.len());
        for w in &points.points {
            let value = restrict(&lifted, lambda, w)?.substitute(&evaluate)?;
            let c = value.as_constant().expect("evaluation at constants");
            row.push(c.to_integer());
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Builds the matrix of standard monomials (rows) restricted to fixed
/// points (columns) at a generic point and tests it for full rank.
pub fn localization_injectivity(lambda: &Partition, seed: u64, retries: u32) -> Result<InjectivityReport> {
    let eqk = equivariant_k_ideal(lambda);
    let points = lambda.multinomial().to_usize().expect("fixed-point count fits in usize");
    let attempts = retries.max(1);
    let mut report = None;
    for attempt in 0..attempts {
        let (s, _) = attempt_seeds(seed, attempt);
        let values = generic_values(s, lambda.length())?;
        let special = specialize_generic(&eqk, s)?;
        let gb = buchberger(&special.polynomials(), &MonomialOrder::grevlex(special.ambient()))?;
        let basis = gb.standard_monomials()?;
        let matrix = evaluation_matrix(lambda, &basis, &values)?;
        let rank = fraction_free_rank(matrix);
        let full_rank = basis.len() == points && rank == points;
        let current = InjectivityReport { points, monomials: basis.len(), rank, full_rank, seed: s, values };
        if full_rank {
            return Ok(current);
        }
        report = Some(current);
    }
    Ok(report.expect("at least one attempt"))
}
