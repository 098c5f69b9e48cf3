use std::sync::Arc;

use super::polynomial::Polynomial;
use super::space::VariableSpace;

/// Power series in an auxiliary variable `t`, truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPowerSeries {
    coeffs: Vec<Polynomial>,
}

impl TruncatedPowerSeries {
    pub fn one(space: &Arc<VariableSpace>, order: usize) -> Self {
        let mut coeffs = vec![Polynomial::zero(space); order + 1];
        coeffs[0] = Polynomial::one(space);
        TruncatedPowerSeries { coeffs }
    }

    /// `1 + a·t`.
    pub fn linear(a: &Polynomial, order: usize) -> Self {
        let mut s = Self::one(a.space(), order);
        if order >= 1 {
            s.coeffs[1] = a.clone();
        }
        s
    }

    /// `(1 + b·t)^{-1} = Σ (−b)^j t^j`.
    pub fn inverse_linear(b: &Polynomial, order: usize) -> Self {
        let mut s = Self::one(b.space(), order);
        let neg = -b;
        for j in 1..=order {
            s.coeffs[j] = &s.coeffs[j - 1] * &neg;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, d: usize) -> &Polynomial {
        &self.coeffs[d]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let space = self.coeffs[0].space().clone();
        let mut coeffs = vec![Polynomial::zero(&space); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                let prod = a * b;
                coeffs[i + j] = &coeffs[i + j] + &prod;
            }
        }
        TruncatedPowerSeries { coeffs }
    }
}

/// Coefficient of `t^d` in `∏(1 + a·t) · ∏(1 + b·t)^{-1}`.
pub fn series_coefficient(
    numerator_roots: &[Polynomial],
    denominator_roots: &[Polynomial],
    d: usize,
    space: &Arc<VariableSpace>,
) -> Polynomial {
    let mut acc = TruncatedPowerSeries::one(space, d);
    for a in numerator_roots {
        acc = acc.mul(&TruncatedPowerSeries::linear(a, d));
    }
    for b in denominator_roots {
        acc = acc.mul(&TruncatedPowerSeries::inverse_linear(b, d));
    }
    acc.coeffs.swap_remove(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Family, Var};

    #[test]
    fn coefficient_examples() {
        let s = VariableSpace::new(&[(Family::X, 2), (Family::U, 1)]).unwrap();
        let x1 = Polynomial::var(&s, Var::x(1)).unwrap();
        let x2 = Polynomial::var(&s, Var::x(2)).unwrap();
        let u1 = Polynomial::var(&s, Var::u(1)).unwrap();

        assert_eq!(series_coefficient(&[x1.clone()], &[], 1, &s), x1);
        assert_eq!(series_coefficient(&[], &[u1.clone()], 2, &s), &u1 * &u1);
        let c = series_coefficient(&[x1.clone(), x2.clone()], &[u1.clone()], 2, &s);
        let expected = &(&(&x1 * &x2) - &(&(&x1 + &x2) * &u1)) + &(&u1 * &u1);
        assert_eq!(c, expected);
        assert_eq!(series_coefficient(&[], &[], 0, &s), Polynomial::one(&s));
    }
}
