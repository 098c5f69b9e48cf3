use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{grevlex_cmp, lex_cmp, Monomial, Var, VariableSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrderKind {
    #[serde(rename = "grevlex")]
    GrevLex,
    #[serde(rename = "lex")]
    Lex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::GrevLex => "grevlex",
            OrderKind::Lex => "lex",
        }
    }

    /// Compares exponent vectors whose position 0 is the largest variable.
    pub(crate) fn cmp_raw(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            OrderKind::GrevLex => grevlex_cmp(a, b),
            OrderKind::Lex => lex_cmp(a, b),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "grevlex" => Ok(OrderKind::GrevLex),
            "lex" => Ok(OrderKind::Lex),
            _ => Err(Error::UnknownName { kind: "monomial order", value: s.to_string() }),
        }
    }
}

/// A monomial order on a variable space: a kind plus a variable precedence
/// (highest first). The default precedence is the space's own order,
/// `x_1 > … > x_n > u_1 > … > t_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    space: Arc<VariableSpace>,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, space: &Arc<VariableSpace>) -> Self {
        MonomialOrder { kind, space: space.clone(), precedence: (0..space.len()).collect() }
    }

    pub fn grevlex(space: &Arc<VariableSpace>) -> Self {
        Self::new(OrderKind::GrevLex, space)
    }

    pub fn lex(space: &Arc<VariableSpace>) -> Self {
        Self::new(OrderKind::Lex, space)
    }

    /// An order with an explicit precedence listing every variable once.
    pub fn with_precedence(kind: OrderKind, space: &Arc<VariableSpace>, vars: &[Var]) -> Result<Self> {
        let mut precedence = Vec::with_capacity(vars.len());
        for &v in vars {
            let pos = space.position(v).ok_or_else(|| Error::UnmappedVariable(v.to_string()))?;
            if precedence.contains(&pos) {
                return Err(Error::OutOfRange(format!("{v} listed twice in precedence")));
            }
            precedence.push(pos);
        }
        if precedence.len() != space.len() {
            return Err(Error::OutOfRange("precedence must list every variable".into()));
        }
        Ok(MonomialOrder { kind, space: space.clone(), precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn space(&self) -> &Arc<VariableSpace> {
        &self.space
    }

    pub fn precedence(&self) -> Vec<Var> {
        self.precedence.iter().map(|&p| self.space.var_at(p)).collect()
    }

    /// Exponents rearranged so that position 0 is the highest variable.
    pub(crate) fn to_internal(&self, m: &Monomial) -> Monomial {
        m.permuted(&self.precedence)
    }

    pub(crate) fn to_external(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![0u16; m.nvars()];
        for (i, &p) in self.precedence.iter().enumerate() {
            exps[p] = m.exponent(i);
        }
        Monomial::from_exponents(&exps)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.kind.cmp_raw(&self.to_internal(a), &self.to_internal(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Family;

    #[test]
    fn precedence_changes_comparison() {
        let space = VariableSpace::new(&[(Family::X, 2)]).unwrap();
        let x1 = Monomial::from_exponents(&[1, 0]);
        let x2 = Monomial::from_exponents(&[0, 1]);
        let default = MonomialOrder::lex(&space);
        assert_eq!(default.cmp(&x1, &x2), Ordering::Greater);
        let swapped = MonomialOrder::with_precedence(OrderKind::Lex, &space, &[Var::x(2), Var::x(1)]).unwrap();
        assert_eq!(swapped.cmp(&x1, &x2), Ordering::Less);
        let m = Monomial::from_exponents(&[3, 1]);
        assert_eq!(swapped.to_external(&swapped.to_internal(&m)), m);
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, &space, &[Var::x(1)]).is_err());
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("grevlex".parse::<OrderKind>().unwrap(), OrderKind::GrevLex);
        assert_eq!("LEX".parse::<OrderKind>().unwrap(), OrderKind::Lex);
        assert!("deglex".parse::<OrderKind>().is_err());
    }
}
