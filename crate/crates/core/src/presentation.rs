//! Ideal presentations: the equivariant K-theoretic Tanisaki ideal and its
//! relatives (compact form, equivariant and classical cohomology, ordinary
//! K-theory, the flag variety), plus specialization of the coefficient
//! variables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{
    binomial, complete_symmetric, elementary_symmetric, Coeff, Family, Polynomial, Substitution, Var,
    VariableSpace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Flavor {
    #[serde(rename = "EqK")]
    EqK,
    #[serde(rename = "EqK-compact")]
    EqKCompact,
    #[serde(rename = "EqCoh")]
    EqCoh,
    #[serde(rename = "OrdK")]
    OrdK,
    #[serde(rename = "Flag")]
    Flag,
    #[serde(rename = "ClassicalCoh")]
    ClassicalCoh,
}

impl Flavor {
    pub const ALL: [Flavor; 6] = [
        Flavor::EqK,
        Flavor::EqKCompact,
        Flavor::EqCoh,
        Flavor::OrdK,
        Flavor::Flag,
        Flavor::ClassicalCoh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::EqK => "EqK",
            Flavor::EqKCompact => "EqK-compact",
            Flavor::EqCoh => "EqCoh",
            Flavor::OrdK => "OrdK",
            Flavor::Flag => "Flag",
            Flavor::ClassicalCoh => "ClassicalCoh",
        }
    }

    /// Cohomological presentations print their indeterminates as `y`.
    pub fn is_cohomology(self) -> bool {
        matches!(self, Flavor::EqCoh | Flavor::ClassicalCoh)
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownName { kind: "flavor", value: s.to_string() })
    }
}

/// Where a generator came from: a Tanisaki-type relation `(s, i, d)` or the
/// `k`-th flag relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum GeneratorIndex {
    Relation { s: usize, subset: Vec<usize>, d: usize },
    Flag { k: usize },
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorIndex::Relation { s, subset, d } => {
                let subset: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
                write!(f, "s={s} i=({}) d={d}", subset.join(","))
            }
            GeneratorIndex::Flag { k } => write!(f, "k={k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub index: GeneratorIndex,
    pub poly: Polynomial,
}

#[derive(Clone, Debug)]
pub struct IdealPresentation {
    lambda: Option<Partition>,
    n: usize,
    flavor: Flavor,
    ambient: Arc<VariableSpace>,
    invertible: Vec<Family>,
    generators: Vec<Generator>,
    dropped: Vec<GeneratorIndex>,
    specialization: Option<String>,
}

impl IdealPresentation {
    pub fn lambda(&self) -> Option<&Partition> {
        self.lambda.as_ref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn ambient(&self) -> &Arc<VariableSpace> {
        &self.ambient
    }

    pub fn invertible(&self) -> &[Family] {
        &self.invertible
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    /// Indices whose formula evaluated to the zero polynomial.
    pub fn dropped(&self) -> &[GeneratorIndex] {
        &self.dropped
    }

    pub fn specialization(&self) -> Option<&str> {
        self.specialization.as_deref()
    }

    /// Families other than `x`: the coefficient variables.
    pub fn parameter_families(&self) -> Vec<(Family, usize)> {
        self.ambient
            .families()
            .iter()
            .copied()
            .filter(|&(f, _)| f != Family::X)
            .collect()
    }

    fn rename_x(&self) -> Option<&'static str> {
        self.flavor.is_cohomology().then_some("y")
    }

    pub fn to_json(&self) -> PresentationJson {
        let rename = self.rename_x();
        let mut ambient = serde_json::Map::new();
        for &(family, arity) in self.ambient.families() {
            let key = match (family, rename) {
                (Family::X, Some(r)) => r.to_string(),
                _ => family.name().to_string(),
            };
            ambient.insert(key, arity.into());
        }
        ambient.insert(
            "invertible".into(),
            self.invertible.iter().map(|f| f.name()).collect::<Vec<_>>().into(),
        );
        PresentationJson {
            lambda: self.lambda.as_ref().map(|l| l.parts().to_vec()),
            n: self.n,
            flavor: self.flavor,
            ambient,
            specialization: self.specialization.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson { index: g.index.clone(), poly: g.poly.to_text_with(rename) })
                .collect(),
            dropped: self.dropped.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let rename = self.rename_x();
        let mut out = String::new();
        let lambda = self.lambda.as_ref().map_or_else(|| "-".to_string(), |l| format!("({l})"));
        out.push_str(&format!("flavor: {}\nlambda: {}\nn: {}\n", self.flavor, lambda, self.n));
        let families: Vec<String> = self
            .ambient
            .families()
            .iter()
            .map(|&(f, a)| {
                let name = match (f, rename) {
                    (Family::X, Some(r)) => r,
                    _ => f.name(),
                };
                format!("{name}:{a}")
            })
            .collect();
        let invertible: Vec<&str> = self.invertible.iter().map(|f| f.name()).collect();
        out.push_str(&format!(
            "ambient: {} invertible: [{}]\n",
            families.join(" "),
            invertible.join(",")
        ));
        if let Some(spec) = &self.specialization {
            out.push_str(&format!("specialization: {spec}\n"));
        }
        out.push_str(&format!("generators: {}\n", self.generators.len()));
        for g in &self.generators {
            out.push_str(&format!("  [{}] {}\n", g.index, g.poly.to_text_with(rename)));
        }
        out.push_str(&format!("dropped: {}\n", self.dropped.len()));
        for idx in &self.dropped {
            out.push_str(&format!("  [{idx}]\n"));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorJson {
    #[serde(flatten)]
    pub index: GeneratorIndex,
    pub poly: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationJson {
    pub lambda: Option<Vec<usize>>,
    pub n: usize,
    pub flavor: Flavor,
    pub ambient: serde_json::Map<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub specialization: Option<String>,
    pub generators: Vec<GeneratorJson>,
    pub dropped: Vec<GeneratorIndex>,
}

/// The relation index set `(s, i, d)` in lexicographic order:
/// `1 ≤ s ≤ n`, `i` an increasing `s`-subset of `[n]`, and
/// `max(1, s+1−q) ≤ d ≤ s` with `q = p_{λ∨}(s)`.
pub fn relation_index_set(lambda: &Partition) -> Vec<(usize, Vec<usize>, usize)> {
    let n = lambda.size();
    let dual = lambda.dual();
    let mut out = Vec::new();
    for s in 1..=n {
        let q = dual.p_function(s).expect("s within [1, n]");
        let d_min = (s + 1).saturating_sub(q).max(1);
        if d_min > s {
            continue;
        }
        for subset in subsets(n, s) {
            for d in d_min..=s {
                out.push((s, subset.clone(), d));
            }
        }
    }
    out
}

/// Increasing `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `Σ_{k=0..d} (−1)^{d−k} e_k(xs) h_{d−k}(us)`.
pub fn tanisaki_relation(xs: &[Polynomial], us: &[Polynomial], d: usize, space: &Arc<VariableSpace>) -> Polynomial {
    let mut acc = Polynomial::zero(space);
    for k in 0..=d {
        let e = elementary_symmetric(k, xs, space);
        if e.is_zero() {
            continue;
        }
        let term = &e * &complete_symmetric(d - k, us, space);
        acc = if (d - k).is_multiple_of(2) { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Ambient `(x: n, u: l)` with the `x` and `u` variables as polynomials.
pub(crate) struct TanisakiVars {
    pub space: Arc<VariableSpace>,
    pub x: Vec<Polynomial>,
    /// `u_{φ(1)}, …, u_{φ(n)}`
    pub u_phi: Vec<Polynomial>,
}

impl TanisakiVars {
    pub fn new(lambda: &Partition) -> Self {
        let n = lambda.size();
        let l = lambda.length();
        let space = VariableSpace::new(&[(Family::X, n), (Family::U, l)]).expect("distinct families");
        let x = (1..=n).map(|i| Polynomial::var(&space, Var::x(i)).unwrap()).collect();
        let phi = lambda.phi_sequence();
        let u_phi = phi
            .as_slice()
            .iter()
            .map(|&j| Polynomial::var(&space, Var::u(j)).unwrap())
            .collect();
        TanisakiVars { space, x, u_phi }
    }

    pub fn xs(&self, subset: &[usize]) -> Vec<Polynomial> {
        subset.iter().map(|&i| self.x[i - 1].clone()).collect()
    }

    /// `u_{φ(1)}, …, u_{φ(m)}`.
    pub fn u_prefix(&self, m: usize) -> &[Polynomial] {
        &self.u_phi[..m]
    }
}

fn assemble(
    lambda: &Partition,
    flavor: Flavor,
    space: Arc<VariableSpace>,
    invertible: Vec<Family>,
    mut formula: impl FnMut(usize, &[usize], usize, usize) -> Polynomial,
) -> IdealPresentation {
    let dual = lambda.dual();
    let mut generators = Vec::new();
    let mut dropped = Vec::new();
    for (s, subset, d) in relation_index_set(lambda) {
        let q = dual.p_function(s).unwrap();
        let poly = formula(s, &subset, d, q);
        let index = GeneratorIndex::Relation { s, subset, d };
        if poly.is_zero() {
            dropped.push(index);
        } else {
            generators.push(Generator { index, poly });
        }
    }
    IdealPresentation {
        lambda: Some(lambda.clone()),
        n: lambda.size(),
        flavor,
        ambient: space,
        invertible,
        generators,
        dropped,
        specialization: None,
    }
}

/// The equivariant K-theoretic Tanisaki ideal in `R(T^l)[x_1..x_n]`.
pub fn equivariant_k_ideal(lambda: &Partition) -> IdealPresentation {
    let vars = TanisakiVars::new(lambda);
    let space = vars.space.clone();
    assemble(lambda, Flavor::EqK, space.clone(), vec![Family::U], |s, subset, d, _| {
        tanisaki_relation(&vars.xs(subset), vars.u_prefix(s + 1 - d), d, &space)
    })
}

/// Same ideal, with each `e_k(x)` replaced by `e_k(x) − e_k(u_{φ(1)},…,u_{φ(s)})`.
pub fn equivariant_k_ideal_compact(lambda: &Partition) -> IdealPresentation {
    let vars = TanisakiVars::new(lambda);
    let space = vars.space.clone();
    assemble(lambda, Flavor::EqKCompact, space.clone(), vec![Family::U], |s, subset, d, _| {
        let xs = vars.xs(subset);
        let us_full = vars.u_prefix(s);
        let us = vars.u_prefix(s + 1 - d);
        let mut acc = Polynomial::zero(&space);
        for k in 0..=d {
            let diff = &elementary_symmetric(k, &xs, &space) - &elementary_symmetric(k, us_full, &space);
            if diff.is_zero() {
                continue;
            }
            let term = &diff * &complete_symmetric(d - k, us, &space);
            acc = if (d - k) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    })
}

/// The equivariant cohomology analogue: same formulas over `Z[u][y]`, with
/// nothing invertible.
pub fn equivariant_cohomology_ideal(lambda: &Partition) -> IdealPresentation {
    let vars = TanisakiVars::new(lambda);
    let space = vars.space.clone();
    assemble(lambda, Flavor::EqCoh, space.clone(), Vec::new(), |s, subset, d, _| {
        tanisaki_relation(&vars.xs(subset), vars.u_prefix(s + 1 - d), d, &space)
    })
}

/// The ordinary K-theoretic ideal in `Z[x_1..x_n]` with generators
/// `Σ (−1)^{d−k} e_k(x_i) C(q+d−k−1, q−1)`.
pub fn ordinary_k_ideal(lambda: &Partition) -> IdealPresentation {
    let n = lambda.size();
    let space = VariableSpace::new(&[(Family::X, n)]).unwrap();
    let x: Vec<Polynomial> = (1..=n).map(|i| Polynomial::var(&space, Var::x(i)).unwrap()).collect();
    assemble(lambda, Flavor::OrdK, space.clone(), Vec::new(), |_, subset, d, q| {
        let xs: Vec<Polynomial> = subset.iter().map(|&i| x[i - 1].clone()).collect();
        let mut acc = Polynomial::zero(&space);
        for k in 0..=d {
            let c = binomial((q + d - k) as i64 - 1, q as i64 - 1);
            if c.is_zero() {
                continue;
            }
            let term = elementary_symmetric(k, &xs, &space).scale(&Coeff::from_integer(c));
            acc = if (d - k) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    })
}

/// The classical Tanisaki ideal generated by `e_d(x_{i_1},…,x_{i_s})`.
pub fn classical_tanisaki_ideal(lambda: &Partition) -> IdealPresentation {
    let n = lambda.size();
    let space = VariableSpace::new(&[(Family::X, n)]).unwrap();
    let x: Vec<Polynomial> = (1..=n).map(|i| Polynomial::var(&space, Var::x(i)).unwrap()).collect();
    assemble(lambda, Flavor::ClassicalCoh, space.clone(), Vec::new(), |_, subset, d, _| {
        let xs: Vec<Polynomial> = subset.iter().map(|&i| x[i - 1].clone()).collect();
        elementary_symmetric(d, &xs, &space)
    })
}

/// The `T^n`-equivariant K-ring of the flag variety:
/// `e_k(x_1..x_n) − e_k(t_1..t_n)`, `1 ≤ k ≤ n`.
pub fn flag_ideal(n: usize) -> Result<IdealPresentation> {
    if n == 0 {
        return Err(Error::OutOfRange("flag ideal needs n ≥ 1".into()));
    }
    let space = VariableSpace::new(&[(Family::X, n), (Family::T, n)]).unwrap();
    let x: Vec<Polynomial> = (1..=n).map(|i| Polynomial::var(&space, Var::x(i)).unwrap()).collect();
    let t: Vec<Polynomial> = (1..=n).map(|i| Polynomial::var(&space, Var::t(i)).unwrap()).collect();
    let generators = (1..=n)
        .map(|k| Generator {
            index: GeneratorIndex::Flag { k },
            poly: &elementary_symmetric(k, &x, &space) - &elementary_symmetric(k, &t, &space),
        })
        .collect();
    Ok(IdealPresentation {
        lambda: None,
        n,
        flavor: Flavor::Flag,
        ambient: space,
        invertible: vec![Family::T],
        generators,
        dropped: Vec::new(),
        specialization: None,
    })
}

/// Builds the presentation of `flavor` for `lambda`; the flag ideal uses
/// only `n = |λ|`.
pub fn build(flavor: Flavor, lambda: &Partition) -> IdealPresentation {
    match flavor {
        Flavor::EqK => equivariant_k_ideal(lambda),
        Flavor::EqKCompact => equivariant_k_ideal_compact(lambda),
        Flavor::EqCoh => equivariant_cohomology_ideal(lambda),
        Flavor::OrdK => ordinary_k_ideal(lambda),
        Flavor::Flag => flag_ideal(lambda.size()).expect("partitions are nonempty"),
        Flavor::ClassicalCoh => classical_tanisaki_ideal(lambda),
    }
}

/// Value assigned to a coefficient variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecValue {
    Const(Coeff),
    Var(Var),
}

/// Assignment of coefficient variables (`u` or `t`) to constants or to
/// variables of another family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Specialization {
    assignments: BTreeMap<Var, SpecValue>,
}

impl Specialization {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(&mut self, var: Var, value: SpecValue) -> &mut Self {
        self.assignments.insert(var, value);
        self
    }

    /// Every variable of `family` (arity `arity`) sent to `value`.
    pub fn constant_family(family: Family, arity: usize, value: Coeff) -> Self {
        let mut s = Self::new();
        for i in 1..=arity {
            s.assign(Var::new(family, i), SpecValue::Const(value.clone()));
        }
        s
    }

    /// Renames `from_i ↦ to_i`.
    pub fn rename_family(from: Family, to: Family, arity: usize) -> Self {
        let mut s = Self::new();
        for i in 1..=arity {
            s.assign(Var::new(from, i), SpecValue::Var(Var::new(to, i)));
        }
        s
    }

    pub fn assignments(&self) -> &BTreeMap<Var, SpecValue> {
        &self.assignments
    }

    pub fn describe(&self) -> String {
        self.assignments
            .iter()
            .map(|(v, value)| match value {
                SpecValue::Const(c) => format!("{v}={c}"),
                SpecValue::Var(w) => format!("{v}={w}"),
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Substitutes the assigned coefficient variables generator by generator,
/// dropping generators that become zero.
pub fn specialize_ideal(ideal: &IdealPresentation, sigma: &Specialization) -> Result<IdealPresentation> {
    let ambient = &ideal.ambient;
    let mut touched: Vec<Family> = Vec::new();
    let mut image_arity: BTreeMap<Family, usize> = BTreeMap::new();
    let mut image_invertible: Vec<Family> = Vec::new();
    for (&var, value) in &sigma.assignments {
        if var.family == Family::X || !ambient.contains(var) {
            return Err(Error::UnmappedVariable(var.to_string()));
        }
        if !touched.contains(&var.family) {
            touched.push(var.family);
        }
        let invertible = ideal.invertible.contains(&var.family);
        match value {
            SpecValue::Const(c) if invertible && c.is_zero() => {
                return Err(Error::ZeroOnInvertible(var.to_string()));
            }
            SpecValue::Const(_) => {}
            SpecValue::Var(w) => {
                if w.family == Family::X {
                    return Err(Error::OutOfRange(format!("{var} cannot be sent to an x variable")));
                }
                let arity = image_arity.entry(w.family).or_insert(0);
                *arity = (*arity).max(w.index);
                if invertible && !image_invertible.contains(&w.family) {
                    image_invertible.push(w.family);
                }
            }
        }
    }
    for &family in &touched {
        for i in 1..=ambient.arity(family) {
            if !sigma.assignments.contains_key(&Var::new(family, i)) {
                return Err(Error::UnmappedVariable(Var::new(family, i).to_string()));
            }
        }
    }

    let mut families: Vec<(Family, usize)> = ambient
        .families()
        .iter()
        .copied()
        .filter(|(f, _)| !touched.contains(f))
        .collect();
    for (&family, &arity) in &image_arity {
        match families.iter_mut().find(|(f, _)| *f == family) {
            Some(entry) => entry.1 = entry.1.max(arity),
            None => families.push((family, arity)),
        }
    }
    let target = VariableSpace::new(&families)?;
    let mut invertible: Vec<Family> = ideal
        .invertible
        .iter()
        .copied()
        .filter(|f| !touched.contains(f))
        .collect();
    for f in image_invertible {
        if !invertible.contains(&f) {
            invertible.push(f);
        }
    }
    invertible.sort();

    let mut sub = Substitution::new(ambient, &target);
    for (&var, value) in &sigma.assignments {
        match value {
            SpecValue::Const(c) => sub.map_const(var, c.clone())?,
            SpecValue::Var(w) => sub.map_var(var, *w)?,
        };
    }

    let mut generators = Vec::new();
    let mut dropped = ideal.dropped.clone();
    for g in &ideal.generators {
        let poly = g.poly.substitute(&sub)?;
        if poly.is_zero() {
            dropped.push(g.index.clone());
        } else {
            generators.push(Generator { index: g.index.clone(), poly });
        }
    }
    dropped.sort();
    let description = sigma.describe();
    Ok(IdealPresentation {
        lambda: ideal.lambda.clone(),
        n: ideal.n,
        flavor: ideal.flavor,
        ambient: target,
        invertible,
        generators,
        dropped,
        specialization: Some(match &ideal.specialization {
            Some(prev) => format!("{prev};{description}"),
            None => description,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn find<'a>(ideal: &'a IdealPresentation, s: usize, subset: &[usize], d: usize) -> &'a Polynomial {
        let index = GeneratorIndex::Relation { s, subset: subset.to_vec(), d };
        &ideal.generators().iter().find(|g| g.index == index).expect("generator present").poly
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn index_set_for_hook() {
        // q values for (2,1): 0, 1, 3
        let idx = relation_index_set(&p(&[2, 1]));
        let expected: Vec<(usize, Vec<usize>, usize)> = vec![
            (2, vec![1, 2], 2),
            (2, vec![1, 3], 2),
            (2, vec![2, 3], 2),
            (3, vec![1, 2, 3], 1),
            (3, vec![1, 2, 3], 2),
            (3, vec![1, 2, 3], 3),
        ];
        assert_eq!(idx, expected);
    }

    #[test]
    fn eqk_hook_generators() {
        let ideal = equivariant_k_ideal(&p(&[2, 1]));
        assert_eq!(ideal.generators().len(), 6);
        assert!(ideal.dropped().is_empty());
        assert_eq!(find(&ideal, 2, &[1, 3], 2).to_string(), "x1*x3 - x1*u1 - x3*u1 + u1^2");
        assert_eq!(find(&ideal, 3, &[1, 2, 3], 1).to_string(), "x1 + x2 + x3 - 2*u1 - u2");
    }

    #[test]
    fn eqk_row_is_x_minus_u() {
        let ideal = equivariant_k_ideal(&p(&[3]));
        for i in 1..=3 {
            assert_eq!(find(&ideal, 1, &[i], 1).to_string(), format!("x{i} - u1"));
        }
    }

    #[test]
    fn eqk_column_only_full_subsets() {
        let ideal = equivariant_k_ideal(&p(&[1, 1, 1]));
        assert!(ideal
            .generators()
            .iter()
            .all(|g| matches!(&g.index, GeneratorIndex::Relation { s: 3, .. })));
        assert_eq!(ideal.generators().len(), 3);
    }

    #[test]
    fn ordinary_examples() {
        let ideal = ordinary_k_ideal(&p(&[2, 1]));
        assert_eq!(find(&ideal, 2, &[1, 2], 2).to_string(), "x1*x2 - x1 - x2 + 1");
        let row = ordinary_k_ideal(&p(&[3]));
        assert_eq!(find(&row, 1, &[2], 1).to_string(), "x2 - 1");
    }

    #[test]
    fn flag_two() {
        let ideal = flag_ideal(2).unwrap();
        let texts: Vec<String> = ideal.generators().iter().map(|g| g.poly.to_string()).collect();
        assert_eq!(texts, vec!["x1 + x2 - t1 - t2", "x1*x2 - t1*t2"]);
        assert!(flag_ideal(0).is_err());
    }

    #[test]
    fn classical_hook_generators() {
        let ideal = classical_tanisaki_ideal(&p(&[2, 1]));
        assert_eq!(find(&ideal, 2, &[2, 3], 2).to_string(), "x2*x3");
        assert_eq!(find(&ideal, 3, &[1, 2, 3], 1).to_string(), "x1 + x2 + x3");
    }

    #[test]
    fn compact_hook_degree_one() {
        let ideal = equivariant_k_ideal_compact(&p(&[2, 1]));
        assert_eq!(find(&ideal, 3, &[1, 2, 3], 1).to_string(), "x1 + x2 + x3 - 2*u1 - u2");
    }

    #[test]
    fn specialize_to_one_and_zero() {
        let lambda = p(&[2, 1]);
        let eqk = equivariant_k_ideal(&lambda);
        let one = Specialization::constant_family(Family::U, 2, Coeff::from_integer(1.into()));
        let spec = specialize_ideal(&eqk, &one).unwrap();
        assert_eq!(spec.ambient().families(), &[(Family::X, 3)]);
        assert!(spec.invertible().is_empty());
        assert_eq!(spec.specialization(), Some("u1=1,u2=1"));

        let zero = Specialization::constant_family(Family::U, 2, Coeff::zero());
        assert_eq!(
            specialize_ideal(&eqk, &zero).unwrap_err(),
            Error::ZeroOnInvertible("u1".into())
        );
        let coh = specialize_ideal(&equivariant_cohomology_ideal(&lambda), &zero).unwrap();
        let classical = classical_tanisaki_ideal(&lambda);
        assert_eq!(coh.polynomials(), classical.polynomials());
    }

    #[test]
    fn specialize_requires_whole_family() {
        let eqk = equivariant_k_ideal(&p(&[2, 1]));
        let mut partial = Specialization::new();
        partial.assign(Var::u(1), SpecValue::Const(Coeff::from_integer(2.into())));
        assert_eq!(
            specialize_ideal(&eqk, &partial).unwrap_err(),
            Error::UnmappedVariable("u2".into())
        );
    }

    #[test]
    fn rename_u_to_t() {
        let eqk = equivariant_k_ideal(&p(&[1, 1]));
        let sigma = Specialization::rename_family(Family::U, Family::T, 2);
        let renamed = specialize_ideal(&eqk, &sigma).unwrap();
        assert_eq!(renamed.ambient().families(), &[(Family::X, 2), (Family::T, 2)]);
        assert_eq!(renamed.invertible(), &[Family::T]);
        assert!(renamed.generators().iter().all(|g| !g.poly.involves(Var::u(1))));
    }

    #[test]
    fn json_shape() {
        let ideal = equivariant_k_ideal(&p(&[2, 1]));
        let json = serde_json::to_value(ideal.to_json()).unwrap();
        assert_eq!(json["flavor"], "EqK");
        assert_eq!(json["ambient"]["u"], 2);
        assert_eq!(json["ambient"]["x"], 3);
        assert_eq!(json["ambient"]["invertible"][0], "u");
        assert_eq!(json["generators"][0]["s"], 2);
        assert_eq!(json["generators"][0]["subset"], serde_json::json!([1, 2]));
        let coh = equivariant_cohomology_ideal(&p(&[2, 1]));
        let json = serde_json::to_value(coh.to_json()).unwrap();
        assert_eq!(json["ambient"]["y"], 3);
        assert!(json["generators"][0]["poly"].as_str().unwrap().starts_with("y1*y2"));
    }

    #[test]
    fn flavor_names_round_trip() {
        for f in Flavor::ALL {
            assert_eq!(f.name().parse::<Flavor>().unwrap(), f);
        }
        assert!("nope".parse::<Flavor>().is_err());
    }
}
