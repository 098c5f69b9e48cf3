use std::fmt;

use num_traits::{One, Signed};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::monomial::Monomial;
use super::polynomial::{Coeff, Polynomial};
use super::space::{Family, VariableSpace};

/// One entry of the JSON term-list form of a polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: MonomialJson,
}

/// Variable-to-exponent map, serialized in variable order.
#[derive(Clone, Debug)]
pub struct MonomialJson(pub Vec<(String, u16)>);

impl Serialize for MonomialJson {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, e) in &self.0 {
            map.serialize_entry(name, e)?;
        }
        map.end()
    }
}

fn family_label(family: Family, rename_x: Option<&str>) -> String {
    match (family, rename_x) {
        (Family::X, Some(name)) => name.to_string(),
        _ => family.name().to_string(),
    }
}

pub(crate) fn monomial_factors(space: &VariableSpace, m: &Monomial, rename_x: Option<&str>) -> Vec<(String, u16)> {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(pos, &e)| {
            let var = space.var_at(pos);
            (format!("{}{}", family_label(var.family, rename_x), var.index), e)
        })
        .collect()
}

pub(crate) fn monomial_text(space: &VariableSpace, m: &Monomial, rename_x: Option<&str>) -> String {
    let factors = monomial_factors(space, m, rename_x);
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|(name, e)| if *e == 1 { name.clone() } else { format!("{name}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl Polynomial {
    /// Canonical text, optionally printing the `x` family under another name.
    pub fn to_text_with(&self, rename_x: Option<&str>) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let negative = c.is_negative();
            let magnitude: Coeff = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                }
                out.push_str(&monomial_text(self.space(), m, rename_x));
            }
        }
        out
    }

    pub fn to_json_terms(&self, rename_x: Option<&str>) -> Vec<TermJson> {
        self.terms()
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                monomial: MonomialJson(monomial_factors(self.space(), m, rename_x)),
            })
            .collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_with(None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;
    use num_bigint::BigInt;

    #[test]
    fn canonical_text() {
        let s = VariableSpace::new(&[(Family::X, 2), (Family::U, 1)]).unwrap();
        let x1 = Polynomial::var(&s, Var::x(1)).unwrap();
        let u1 = Polynomial::var(&s, Var::u(1)).unwrap();
        let p = &(&(&x1 * &x1) * &u1) - &(&u1 * &u1).scale(&Coeff::from_integer(BigInt::from(3)));
        assert_eq!(p.to_string(), "x1^2*u1 - 3*u1^2");
        let q = &(&Polynomial::integer(&s, -1) - &x1) + &u1.scale(&Coeff::new(1.into(), 2.into()));
        assert_eq!(q.to_string(), "-x1 + 1/2*u1 - 1");
        assert_eq!(Polynomial::zero(&s).to_string(), "0");
        assert_eq!(x1.to_text_with(Some("y")), "y1");

        let json = serde_json::to_string(&p.to_json_terms(None)).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":"1","monomial":{"x1":2,"u1":1}},{"coeff":"-3","monomial":{"u1":2}}]"#
        );
    }
}
