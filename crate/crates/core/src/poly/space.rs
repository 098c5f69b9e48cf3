use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Named families of indeterminates. The declaration order is also the
/// block order of the canonical term order: `x` before `u` before `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// Line-bundle classes `x_1..x_n`.
    #[serde(rename = "x")]
    X,
    /// Characters `u_1..u_l` of the rank-`l` torus.
    #[serde(rename = "u")]
    U,
    /// Characters `t_1..t_n` of the maximal torus.
    #[serde(rename = "t")]
    T,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::U => "u",
            Family::T => "t",
        }
    }
}

/// A single indeterminate, `index` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub family: Family,
    pub index: usize,
}

impl Var {
    pub fn new(family: Family, index: usize) -> Self {
        Var { family, index }
    }

    pub fn x(index: usize) -> Self {
        Var::new(Family::X, index)
    }

    pub fn u(index: usize) -> Self {
        Var::new(Family::U, index)
    }

    pub fn t(index: usize) -> Self {
        Var::new(Family::T, index)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.name(), self.index)
    }
}

/// The ambient set of variables: each family with its arity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableSpace {
    families: Vec<(Family, usize)>,
}

impl VariableSpace {
    pub fn new(families: &[(Family, usize)]) -> Result<Arc<Self>> {
        let mut families: Vec<(Family, usize)> =
            families.iter().copied().filter(|&(_, arity)| arity > 0).collect();
        families.sort_by_key(|&(f, _)| f);
        if families.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::OutOfRange("duplicate variable family".into()));
        }
        Ok(Arc::new(VariableSpace { families }))
    }

    pub fn families(&self) -> &[(Family, usize)] {
        &self.families
    }

    pub fn arity(&self, family: Family) -> usize {
        self.families
            .iter()
            .find(|&&(f, _)| f == family)
            .map_or(0, |&(_, a)| a)
    }

    pub fn len(&self) -> usize {
        self.families.iter().map(|&(_, a)| a).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, var: Var) -> bool {
        var.index >= 1 && var.index <= self.arity(var.family)
    }

    /// Position of `var` in the flattened variable list.
    pub fn position(&self, var: Var) -> Option<usize> {
        let mut offset = 0;
        for &(f, arity) in &self.families {
            if f == var.family {
                return (var.index >= 1 && var.index <= arity).then(|| offset + var.index - 1);
            }
            offset += arity;
        }
        None
    }

    pub fn var_at(&self, position: usize) -> Var {
        let mut offset = 0;
        for &(f, arity) in &self.families {
            if position < offset + arity {
                return Var::new(f, position - offset + 1);
            }
            offset += arity;
        }
        panic!("variable position {position} out of range");
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.families
            .iter()
            .flat_map(|&(f, arity)| (1..=arity).map(move |i| Var::new(f, i)))
    }

    /// A copy of this space with `family` removed.
    pub fn without(&self, family: Family) -> Arc<Self> {
        Arc::new(VariableSpace {
            families: self.families.iter().copied().filter(|&(f, _)| f != family).collect(),
        })
    }
}
