use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::{grevlex_cmp, Monomial};
use super::space::{Var, VariableSpace};
use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, unique monomials,
/// sorted by decreasing graded reverse lexicographic order over the
/// variable positions of the ambient space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    space: Arc<VariableSpace>,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(space: &Arc<VariableSpace>) -> Self {
        Polynomial { space: space.clone(), terms: Vec::new() }
    }

    pub fn one(space: &Arc<VariableSpace>) -> Self {
        Self::constant(space, Coeff::one())
    }

    pub fn constant(space: &Arc<VariableSpace>, c: Coeff) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::one(space.len()), c)] };
        Polynomial { space: space.clone(), terms }
    }

    pub fn integer(space: &Arc<VariableSpace>, c: i64) -> Self {
        Self::constant(space, Coeff::from_integer(BigInt::from(c)))
    }

    pub fn var(space: &Arc<VariableSpace>, var: Var) -> Result<Self> {
        let pos = space
            .position(var)
            .ok_or_else(|| Error::UnmappedVariable(var.to_string()))?;
        Ok(Polynomial {
            space: space.clone(),
            terms: vec![(Monomial::var(space.len(), pos), Coeff::one())],
        })
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(space: &Arc<VariableSpace>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), space.len(), "monomial arity does not match variable space");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        Self::from_map(space, acc)
    }

    fn from_map(space: &Arc<VariableSpace>, acc: HashMap<Monomial, Coeff>) -> Self {
        let mut terms: Vec<(Monomial, Coeff)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grevlex_cmp(&b.0, &a.0));
        Polynomial { space: space.clone(), terms }
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        &self.space
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// The constant coefficient if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(Coeff::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Whether `var` occurs in any term.
    pub fn involves(&self, var: Var) -> bool {
        match self.space.position(var) {
            Some(pos) => self.terms.iter().any(|(m, _)| m.exponent(pos) > 0),
            None => false,
        }
    }

    fn check_space(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_space(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_space(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_space(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.space));
        }
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        Ok(Self::from_map(&self.space, acc))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut terms = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Coeff| if negate { -c.clone() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match grevlex_cmp(ma, mb) {
                std::cmp::Ordering::Greater => {
                    terms.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    terms.push((mb.clone(), sign(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + sign(cb);
                    if !c.is_zero() {
                        terms.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial { space: self.space.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.space);
        }
        Polynomial {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.space);
        for _ in 0..k {
            result = &result * self;
        }
        result
    }

    /// Applies a simultaneous substitution.
    pub fn substitute(&self, sub: &Substitution) -> Result<Polynomial> {
        self.check_space_is(&sub.source)?;
        let target = &sub.target;
        let mut images: Vec<Polynomial> = Vec::with_capacity(self.space.len());
        for var in self.space.vars() {
            let image = match sub.images.get(&var) {
                Some(p) => p.clone(),
                None if sub.total => return Err(Error::UnmappedVariable(var.to_string())),
                None => Polynomial::var(target, var)?,
            };
            images.push(image);
        }
        let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut result = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (pos, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = powers
                    .entry((pos, e))
                    .or_insert_with(|| images[pos].pow(e as u32));
                term = &term * power;
                if term.is_zero() {
                    break;
                }
            }
            result = &result + &term;
        }
        Ok(result)
    }

    fn check_space_is(&self, space: &Arc<VariableSpace>) -> Result<()> {
        if *self.space == **space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// Moves the polynomial into another space that contains all of the
    /// variables it uses.
    pub fn embed(&self, target: &Arc<VariableSpace>) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.space.len());
        for (pos, var) in self.space.vars().enumerate() {
            let used = self.terms.iter().any(|(m, _)| m.exponent(pos) > 0);
            match target.position(var) {
                Some(p) => map.push(Some(p)),
                None if used => return Err(Error::UnmappedVariable(var.to_string())),
                None => map.push(None),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u16; target.len()];
            for (pos, &e) in m.exponents().iter().enumerate() {
                if let Some(p) = map[pos] {
                    exps[p] = e;
                }
            }
            (Monomial::from_exponents(&exps), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition across variable spaces")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction across variable spaces")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication across variable spaces")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// A simultaneous substitution `var ↦ polynomial` from a source space into a
/// target space.
///
/// When the substitution is not total, unmapped variables are carried over
/// unchanged and must exist in the target space.
#[derive(Clone, Debug)]
pub struct Substitution {
    source: Arc<VariableSpace>,
    target: Arc<VariableSpace>,
    images: HashMap<Var, Polynomial>,
    total: bool,
}

impl Substitution {
    pub fn new(source: &Arc<VariableSpace>, target: &Arc<VariableSpace>) -> Self {
        Substitution {
            source: source.clone(),
            target: target.clone(),
            images: HashMap::new(),
            total: false,
        }
    }

    pub fn total(source: &Arc<VariableSpace>, target: &Arc<VariableSpace>) -> Self {
        Substitution { total: true, ..Self::new(source, target) }
    }

    pub fn target(&self) -> &Arc<VariableSpace> {
        &self.target
    }

    pub fn map(&mut self, var: Var, image: Polynomial) -> Result<&mut Self> {
        if !self.source.contains(var) {
            return Err(Error::UnmappedVariable(var.to_string()));
        }
        if **image.space() != *self.target {
            return Err(Error::SpaceMismatch);
        }
        self.images.insert(var, image);
        Ok(self)
    }

    pub fn map_var(&mut self, var: Var, image: Var) -> Result<&mut Self> {
        let image = Polynomial::var(&self.target, image)?;
        self.map(var, image)
    }

    pub fn map_const(&mut self, var: Var, value: Coeff) -> Result<&mut Self> {
        let image = Polynomial::constant(&self.target, value);
        self.map(var, image)
    }

    pub fn image(&self, var: Var) -> Option<&Polynomial> {
        self.images.get(&var)
    }
}

#[cfg(test)]
mod tests {
    use super::super::space::Family;
    use super::*;

    fn space() -> Arc<VariableSpace> {
        VariableSpace::new(&[(Family::X, 2), (Family::U, 2)]).unwrap()
    }

    fn v(s: &Arc<VariableSpace>, var: Var) -> Polynomial {
        Polynomial::var(s, var).unwrap()
    }

    #[test]
    fn ring_examples() {
        let s = space();
        let (x1, u1) = (v(&s, Var::x(1)), v(&s, Var::u(1)));
        let sum = &(&x1 + &u1) + &(&x1 - &u1);
        assert_eq!(sum, x1.scale(&Coeff::from_integer(2.into())));
        assert!((&x1 * &Polynomial::zero(&s)).is_zero());
        let prod = &(&x1 - &u1) * &(&x1 + &u1);
        assert_eq!(prod, &(&x1 * &x1) - &(&u1 * &u1));
        assert!((&x1 - &x1).is_zero());
    }

    #[test]
    fn mismatch_rejected() {
        let s = space();
        let other = VariableSpace::new(&[(Family::X, 3)]).unwrap();
        let a = v(&s, Var::x(1));
        let b = v(&other, Var::x(1));
        assert_eq!(a.checked_add(&b), Err(Error::SpaceMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::SpaceMismatch));
    }

    #[test]
    fn substitution_examples() {
        let s = space();
        let (x1, x2, u1, u2) = (v(&s, Var::x(1)), v(&s, Var::x(2)), v(&s, Var::u(1)), v(&s, Var::u(2)));

        let mut sub = Substitution::new(&s, &s);
        sub.map(Var::x(1), u1.clone()).unwrap();
        assert!((&x1 - &u1).substitute(&sub).unwrap().is_zero());

        let mut swap = Substitution::new(&s, &s);
        swap.map(Var::x(1), u2.clone()).unwrap();
        swap.map(Var::x(2), u1.clone()).unwrap();
        assert_eq!((&x1 * &x2).substitute(&swap).unwrap(), &u1 * &u2);

        let partial = Substitution::total(&s, &s);
        assert_eq!(
            x1.substitute(&partial),
            Err(Error::UnmappedVariable("x1".into()))
        );
    }

    #[test]
    fn embed_moves_between_spaces() {
        let s = space();
        let big = VariableSpace::new(&[(Family::X, 3), (Family::U, 2), (Family::T, 1)]).unwrap();
        let p = &v(&s, Var::x(2)) * &v(&s, Var::u(1));
        let q = p.embed(&big).unwrap();
        assert_eq!(q, &v(&big, Var::x(2)) * &v(&big, Var::u(1)));
        let small = VariableSpace::new(&[(Family::X, 2)]).unwrap();
        assert!(p.embed(&small).is_err());
    }
}
