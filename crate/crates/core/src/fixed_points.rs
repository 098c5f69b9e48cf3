//! Torus-fixed points of the Springer variety, restriction of classes to
//! them, and the symmetric group action on both sides.
//!
//! Values of a permutation word are grouped into blocks by the fibres of
//! `φ_λ`: block `k` holds the values `j` with `φ_λ(j) = k`. A word is a fixed
//! point when every block appears left to right in increasing order, and
//! the Young subgroup is the stabilizer of `φ_λ` acting on values.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, PhiMap};
use crate::poly::{Family, Polynomial, Substitution, Var, VariableSpace};
use crate::presentation::{equivariant_k_ideal, GeneratorIndex};

/// A permutation of `1..=n` in one-line notation: position `i` holds `w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationWord(Vec<usize>);

impl PermutationWord {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidWord(format!("{word:?} is not a permutation of 1..{n}")));
            }
            seen[v] = true;
        }
        Ok(PermutationWord(word))
    }

    pub fn identity(n: usize) -> Self {
        PermutationWord((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &PermutationWord) -> PermutationWord {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        PermutationWord(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn inverse(&self) -> PermutationWord {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        PermutationWord(inv)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<PermutationWord> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![PermutationWord(cur.clone())];
        // next-permutation in lexicographic order
        while let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(PermutationWord(cur.clone()));
        }
        out
    }
}

impl fmt::Display for PermutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for PermutationWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Value blocks of `λ`: block `k` is the fibre `φ_λ^{-1}(k)`.
pub fn value_blocks(lambda: &Partition) -> Vec<Vec<usize>> {
    let phi = lambda.phi_sequence();
    (1..=lambda.length()).map(|k| phi.fibre(k)).collect()
}

pub fn is_fixed_point(lambda: &Partition, w: &PermutationWord) -> bool {
    if w.len() != lambda.size() {
        return false;
    }
    let phi = lambda.phi_sequence();
    let mut last = vec![0usize; lambda.length() + 1];
    for &value in w.as_slice() {
        let block = phi.get(value);
        if value < last[block] {
            return false;
        }
        last[block] = value;
    }
    true
}

#[derive(Clone, Debug, Serialize)]
pub struct FixedPointSet {
    pub lambda: Partition,
    pub blocks: Vec<Vec<usize>>,
    pub points: Vec<PermutationWord>,
}

impl FixedPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, w: &PermutationWord) -> Option<usize> {
        self.points.binary_search(w).ok()
    }
}

/// All fixed points in lexicographic word order.
pub fn fixed_points(lambda: &Partition) -> FixedPointSet {
    let points = PermutationWord::all(lambda.size())
        .into_iter()
        .filter(|w| is_fixed_point(lambda, w))
        .collect();
    FixedPointSet { lambda: lambda.clone(), blocks: value_blocks(lambda), points }
}

/// The fixed point in the Young-subgroup coset of `w`: within each block,
/// the block's values are rearranged increasingly across the positions they
/// occupy.
pub fn coset_representative(lambda: &Partition, w: &PermutationWord) -> PermutationWord {
    let phi = lambda.phi_sequence();
    let mut word = w.as_slice().to_vec();
    for block in value_blocks(lambda) {
        let positions: Vec<usize> = (0..word.len()).filter(|&p| phi.get(word[p]) == phi.get(block[0])).collect();
        for (pos, value) in positions.into_iter().zip(block) {
            word[pos] = value;
        }
    }
    PermutationWord(word)
}

/// Ambient `u`-space of restrictions for `λ`.
pub fn restriction_space(lambda: &Partition) -> Arc<VariableSpace> {
    VariableSpace::new(&[(Family::U, lambda.length())]).unwrap()
}

fn restriction_substitution(
    source: &Arc<VariableSpace>,
    target: &Arc<VariableSpace>,
    phi: &PhiMap,
    w: &PermutationWord,
) -> Result<Substitution> {
    let mut sub = Substitution::total(source, target);
    for var in source.vars() {
        match var.family {
            Family::X => {
                if var.index > w.len() {
                    return Err(Error::SpaceMismatch);
                }
                sub.map_var(var, Var::u(phi.get(w.apply(var.index))))?;
            }
            Family::U => {
                sub.map_var(var, var)?;
            }
            Family::T => return Err(Error::UnmappedVariable(var.to_string())),
        }
    }
    Ok(sub)
}

/// Restriction to the fixed point `w`: `x_i ↦ u_{φ(w(i))}`, `u_j ↦ u_j`.
pub fn restrict(p: &Polynomial, lambda: &Partition, w: &PermutationWord) -> Result<Polynomial> {
    if !is_fixed_point(lambda, w) {
        return Err(Error::NotFixedPoint { word: w.to_string(), lambda: lambda.to_string() });
    }
    let target = restriction_space(lambda);
    let sub = restriction_substitution(p.space(), &target, &lambda.phi_sequence(), w)?;
    p.substitute(&sub)
}

/// A class on the fixed-point set: one `u`-polynomial per fixed point,
/// aligned with [`fixed_points`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmTuple {
    pub values: Vec<Polynomial>,
}

impl GkmTuple {
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Polynomial::is_zero)
    }

    pub fn to_json(&self) -> Vec<String> {
        self.values.iter().map(|p| p.to_string()).collect()
    }
}

pub fn gkm_image(p: &Polynomial, lambda: &Partition) -> Result<GkmTuple> {
    let target = restriction_space(lambda);
    let phi = lambda.phi_sequence();
    let values = fixed_points(lambda)
        .points
        .iter()
        .map(|w| p.substitute(&restriction_substitution(p.space(), &target, &phi, w)?))
        .collect::<Result<_>>()?;
    Ok(GkmTuple { values })
}

/// `x_i ↦ x_{v(i)}`, other variables fixed.
pub fn sn_act_polynomial(v: &PermutationWord, p: &Polynomial) -> Result<Polynomial> {
    let space = p.space();
    if space.arity(Family::X) != v.len() {
        return Err(Error::InvalidWord(format!(
            "{v} does not act on {} x-variables",
            space.arity(Family::X)
        )));
    }
    let mut sub = Substitution::new(space, space);
    for i in 1..=v.len() {
        sub.map_var(Var::x(i), Var::x(v.apply(i)))?;
    }
    p.substitute(&sub)
}

/// `(v·f)|_w = f|_{w'}` where `w'` represents the coset of `w ∘ v`.
pub fn sn_act_tuple(v: &PermutationWord, f: &GkmTuple, lambda: &Partition) -> Result<GkmTuple> {
    let points = fixed_points(lambda);
    if v.len() != lambda.size() {
        return Err(Error::InvalidWord(format!("{v} does not act on S_{}", lambda.size())));
    }
    if f.values.len() != points.len() {
        return Err(Error::OutOfRange(format!(
            "tuple has {} entries, expected {}",
            f.values.len(),
            points.len()
        )));
    }
    let values = points
        .points
        .iter()
        .map(|w| {
            let rep = coset_representative(lambda, &w.compose(v));
            let idx = points.position(&rep).expect("coset representative is a fixed point");
            f.values[idx].clone()
        })
        .collect();
    Ok(GkmTuple { values })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivarianceViolation {
    pub v: PermutationWord,
    /// `"x<i>"` or `"u<j>"`
    pub generator: String,
    pub w: PermutationWord,
    pub got: String,
    pub expected: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct EquivarianceReport {
    pub comparisons: usize,
    pub violations: Vec<EquivarianceViolation>,
}

impl EquivarianceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `v·ι(x_i) = ι(x_{v(i)})` and `v·ι(u_j) = ι(u_j)` for all `v ∈ S_n`,
/// componentwise over the fixed points.
pub fn equivariance_check(lambda: &Partition) -> Result<EquivarianceReport> {
    let n = lambda.size();
    let l = lambda.length();
    let space = VariableSpace::new(&[(Family::X, n), (Family::U, l)])?;
    let points = fixed_points(lambda);
    let mut generators: Vec<(String, Polynomial, Option<usize>)> = Vec::new();
    for i in 1..=n {
        generators.push((format!("x{i}"), Polynomial::var(&space, Var::x(i))?, Some(i)));
    }
    for j in 1..=l {
        generators.push((format!("u{j}"), Polynomial::var(&space, Var::u(j))?, None));
    }
    let images: Vec<GkmTuple> = generators
        .iter()
        .map(|(_, p, _)| gkm_image(p, lambda))
        .collect::<Result<_>>()?;

    let mut report = EquivarianceReport::default();
    for v in PermutationWord::all(n) {
        for ((name, _, x_index), image) in generators.iter().zip(&images) {
            let acted = sn_act_tuple(&v, image, lambda)?;
            let expected = match x_index {
                Some(i) => &images[v.apply(*i) - 1],
                None => image,
            };
            for (k, w) in points.points.iter().enumerate() {
                report.comparisons += 1;
                if acted.values[k] != expected.values[k] {
                    report.violations.push(EquivarianceViolation {
                        v: v.clone(),
                        generator: name.clone(),
                        w: w.clone(),
                        got: acted.values[k].to_string(),
                        expected: expected.values[k].to_string(),
                    });
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishViolation {
    pub index: GeneratorIndex,
    pub w: PermutationWord,
    pub residual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VanishReport {
    pub generators: usize,
    pub points: usize,
    pub violations: Vec<VanishViolation>,
}

impl VanishReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Restricts every generator of the equivariant K-theoretic ideal to every
/// fixed point and collects the nonzero residuals.
pub fn generators_vanish_check(lambda: &Partition) -> Result<VanishReport> {
    let ideal = equivariant_k_ideal(lambda);
    let points = fixed_points(lambda);
    let target = restriction_space(lambda);
    let phi = lambda.phi_sequence();
    let subs: Vec<Substitution> = points
        .points
        .iter()
        .map(|w| restriction_substitution(ideal.ambient(), &target, &phi, w))
        .collect::<Result<_>>()?;
    let mut report = VanishReport {
        generators: ideal.generators().len(),
        points: points.len(),
        violations: Vec::new(),
    };
    for g in ideal.generators() {
        for (w, sub) in points.points.iter().zip(&subs) {
            let residual = g.poly.substitute(sub)?;
            if !residual.is_zero() {
                report.violations.push(VanishViolation {
                    index: g.index.clone(),
                    w: w.clone(),
                    residual: residual.to_string(),
                });
            }
        }
    }
    Ok(report)
}
