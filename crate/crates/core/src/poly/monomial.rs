use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector over the positions of a [`VariableSpace`](super::VariableSpace).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn var(nvars: usize, position: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[position] = 1;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, position: usize) -> u16 {
        self.exps[position]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// If this is a pure power of a single variable, that variable's position.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Reorders exponents: result position `i` takes position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        Monomial { exps: perm.iter().map(|&p| self.exps[p]).collect() }
    }
}

/// Graded reverse lexicographic comparison with position 0 the largest variable.
pub fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.exps.iter().zip(&b.exps).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Lexicographic comparison with position 0 the largest variable.
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exps.cmp(&b.exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_examples() {
        // x1 > x2 > x3
        assert_eq!(grevlex_cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // x1*x3 < x2^2 in grevlex
        assert_eq!(grevlex_cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(lex_cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(grevlex_cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0, 2]).divides(&m(&[1, 1, 2])));
        assert!(!m(&[1, 0, 2]).divides(&m(&[0, 1, 2])));
        assert_eq!(m(&[1, 0, 2]).quotient_of(&m(&[1, 1, 3])), m(&[0, 1, 1]));
        assert_eq!(m(&[1, 0, 2]).lcm(&m(&[0, 3, 1])), m(&[1, 3, 2]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
        assert_eq!(m(&[0, 3, 0]).pure_power_of(), Some(1));
        assert_eq!(m(&[1, 3, 0]).pure_power_of(), None);
    }
}
