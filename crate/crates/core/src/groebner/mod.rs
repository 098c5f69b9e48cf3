//! Exact Gröbner bases over the rationals and the verifications built on
//! them: quotient dimensions, standard monomials, ideal equality, generic
//! ranks, and the localization injectivity test.

mod kernel;
mod linalg;
mod order;
mod rank;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, Polynomial, VariableSpace};
use kernel::IPoly;

pub use linalg::fraction_free_rank;
pub use order::{MonomialOrder, OrderKind};
pub use rank::{
    generic_point, generic_rank, generic_values, localization_injectivity, specialize_generic,
    GenericRank, InjectivityReport, DEFAULT_RETRIES, DEFAULT_SEED,
};

/// Reduced Gröbner basis with monic generators, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    /// Per generator: terms in internal coordinates, decreasing.
    internal: Vec<Vec<(Monomial, Coeff)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientDimension {
    Finite(usize),
    Infinite,
}

impl fmt::Display for QuotientDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDimension::Finite(d) => write!(f, "{d}"),
            QuotientDimension::Infinite => f.write_str("infinite"),
        }
    }
}

/// Standard monomials of a zero-dimensional ideal, sorted increasingly by
/// the basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    pub space: Arc<VariableSpace>,
    pub monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn as_polynomials(&self) -> Vec<Polynomial> {
        self.monomials
            .iter()
            .map(|m| Polynomial::from_terms(&self.space, [(m.clone(), Coeff::one())]))
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.as_polynomials().iter().map(|p| p.to_string()).collect()
    }
}

fn to_integer_poly(p: &Polynomial, order: &MonomialOrder) -> IPoly {
    let lcm_den = p
        .terms()
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| (order.to_internal(m), (c * BigRational::from_integer(lcm_den.clone())).to_integer()))
        .collect();
    IPoly { terms }
}

fn sort_internal(terms: &mut [(Monomial, Coeff)], kind: OrderKind) {
    terms.sort_by(|a, b| kind.cmp_raw(&b.0, &a.0));
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn buchberger(generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    for g in generators {
        if **g.space() != **order.space() {
            return Err(Error::SpaceMismatch);
        }
    }
    let input: Vec<IPoly> = generators.iter().map(|g| to_integer_poly(g, order)).collect();
    let reduced = kernel::reduced_basis(order.kind(), input);
    let space = order.space().clone();
    let mut basis = Vec::with_capacity(reduced.len());
    let mut internal = Vec::with_capacity(reduced.len());
    for g in reduced {
        let lc = BigRational::from_integer(g.lc().clone());
        let monic: Vec<(Monomial, Coeff)> = g
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()) / &lc))
            .collect();
        basis.push(Polynomial::from_terms(
            &space,
            monic.iter().map(|(m, c)| (order.to_external(m), c.clone())),
        ));
        internal.push(monic);
    }
    Ok(GroebnerBasis { order: order.clone(), basis, internal })
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        self.order.space()
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.internal.len() == 1 && self.internal[0][0].0.is_one()
    }

    /// Leading monomials in the coordinates of the variable space.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal.iter().map(|g| self.order.to_external(&g[0].0)).collect()
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        self.internal.iter().position(|g| g[0].0.divides(m))
    }

    /// The unique remainder of `p`: no term is divisible by a leading
    /// monomial of the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if **p.space() != **self.space() {
            return Err(Error::SpaceMismatch);
        }
        let kind = self.order.kind();
        let mut rest: Vec<(Monomial, Coeff)> = p
            .terms()
            .iter()
            .map(|(m, c)| (self.order.to_internal(m), c.clone()))
            .collect();
        sort_internal(&mut rest, kind);
        let mut done: Vec<(Monomial, Coeff)> = Vec::new();
        while !rest.is_empty() {
            let lead = &rest[0].0;
            match self.find_divisor(lead) {
                None => done.push(rest.remove(0)),
                Some(g) => {
                    let divisor = &self.internal[g];
                    let shift = divisor[0].0.quotient_of(lead);
                    let factor = rest[0].1.clone();
                    rest = subtract_shifted(kind, &rest[1..], &factor, &shift, &divisor[1..]);
                }
            }
        }
        Ok(Polynomial::from_terms(
            self.space(),
            done.into_iter().map(|(m, c)| (self.order.to_external(&m), c)),
        ))
    }

    /// Ideal membership.
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Standard monomials are finite iff every variable has a pure power
    /// among the leading monomials.
    pub fn quotient_dimension(&self) -> QuotientDimension {
        match self.standard_monomials() {
            Ok(basis) => QuotientDimension::Finite(basis.len()),
            Err(_) => QuotientDimension::Infinite,
        }
    }

    pub fn standard_monomials(&self) -> Result<QuotientBasis> {
        let nvars = self.space().len();
        let leads: Vec<&Monomial> = self.internal.iter().map(|g| &g[0].0).collect();
        let mut bounds = vec![u16::MAX; nvars];
        for m in &leads {
            if m.is_one() {
                return Ok(QuotientBasis { space: self.space().clone(), monomials: Vec::new() });
            }
            if let Some(pos) = m.pure_power_of() {
                bounds[pos] = bounds[pos].min(m.exponent(pos));
            }
        }
        if bounds.contains(&u16::MAX) {
            return Err(Error::InfiniteQuotient);
        }

        let mut found = Vec::new();
        let mut exps = vec![0u16; nvars];
        fn walk(pos: usize, exps: &mut Vec<u16>, bounds: &[u16], leads: &[&Monomial], found: &mut Vec<Monomial>) {
            if pos == exps.len() {
                let m = Monomial::from_exponents(exps);
                if !leads.iter().any(|l| l.divides(&m)) {
                    found.push(m);
                }
                return;
            }
            for e in 0..bounds[pos] {
                exps[pos] = e;
                // prune: if the prefix is already divisible, so are its extensions
                let prefix_divisible = leads.iter().any(|l| {
                    l.exponents()[pos + 1..].iter().all(|&x| x == 0)
                        && l.exponents()[..=pos].iter().zip(exps.iter()).all(|(a, b)| a <= b)
                });
                if prefix_divisible {
                    break;
                }
                walk(pos + 1, exps, bounds, leads, found);
            }
            exps[pos] = 0;
        }
        walk(0, &mut exps, &bounds, &leads, &mut found);

        let kind = self.order.kind();
        found.sort_by(|a, b| kind.cmp_raw(a, b));
        let monomials = found.iter().map(|m| self.order.to_external(m)).collect();
        Ok(QuotientBasis { space: self.space().clone(), monomials })
    }
}

/// `p − factor·shift·q` on sorted internal term lists.
fn subtract_shifted(
    kind: OrderKind,
    p: &[(Monomial, Coeff)],
    factor: &Coeff,
    shift: &Monomial,
    q: &[(Monomial, Coeff)],
) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let mut pi = p.iter().peekable();
    let mut qi = q.iter().map(|(m, c)| (shift.mul(m), c)).peekable();
    loop {
        let ord = match (pi.peek(), qi.peek()) {
            (Some((a, _)), Some((b, _))) => kind.cmp_raw(a, b),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(pi.next().unwrap().clone()),
            Ordering::Less => {
                let (m, c) = qi.next().unwrap();
                out.push((m, -(factor * c)));
            }
            Ordering::Equal => {
                let (m, a) = pi.next().unwrap();
                let (_, b) = qi.next().unwrap();
                let c = a - factor * b;
                if !c.is_zero() {
                    out.push((m.clone(), c));
                }
            }
        }
    }
    out
}

/// Whether two generator lists span the same ideal, tested by mutual
/// reduction against grevlex bases.
pub fn ideal_equality(a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    let Some(space) = a.iter().chain(b).map(|p| p.space().clone()).next() else {
        return Ok(true);
    };
    let order = MonomialOrder::grevlex(&space);
    let gb_b = buchberger(b, &order)?;
    for p in a {
        if !gb_b.contains(p)? {
            return Ok(false);
        }
    }
    let gb_a = buchberger(a, &order)?;
    for p in b {
        if !gb_a.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}
