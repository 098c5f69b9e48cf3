use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::space::VariableSpace;

/// `e_k(args)`: the sum of all products of `k` distinct arguments.
pub fn elementary_symmetric(k: usize, args: &[Polynomial], space: &Arc<VariableSpace>) -> Polynomial {
    if k > args.len() {
        return Polynomial::zero(space);
    }
    // coefficients of ∏ (1 + a·t) up to t^k
    let mut e = vec![Polynomial::zero(space); k + 1];
    e[0] = Polynomial::one(space);
    for (seen, a) in args.iter().enumerate() {
        for j in (1..=k.min(seen + 1)).rev() {
            let term = &e[j - 1] * a;
            e[j] = &e[j] + &term;
        }
    }
    e.swap_remove(k)
}

/// `h_k(args)`: the sum of all degree-`k` monomials in the arguments.
pub fn complete_symmetric(k: usize, args: &[Polynomial], space: &Arc<VariableSpace>) -> Polynomial {
    if k == 0 {
        return Polynomial::one(space);
    }
    // coefficients of ∏ (1 − a·t)^{-1} up to t^k
    let mut h = vec![Polynomial::zero(space); k + 1];
    h[0] = Polynomial::one(space);
    for a in args {
        for j in 1..=k {
            let term = &h[j - 1] * a;
            h[j] = &h[j] + &term;
        }
    }
    h.swap_remove(k)
}

/// `C(a, b)`, zero when `b < 0`, `a < 0`, or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}
