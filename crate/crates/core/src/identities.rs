//! Symbolic identities behind the presentations.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixed_points::{fixed_points, sn_act_tuple, GkmTuple, PermutationWord};
use crate::partition::Partition;
use crate::poly::{
    binomial, complete_symmetric, elementary_symmetric, series_coefficient, Coeff, Family, Polynomial,
    VariableSpace,
};
use crate::presentation::{
    equivariant_k_ideal, equivariant_k_ideal_compact, relation_index_set, subsets, tanisaki_relation,
    GeneratorIndex, TanisakiVars,
};

/// Compares two presentations built over the same index set, entry by entry.
fn compare_by_index(
    a: &crate::presentation::IdealPresentation,
    b: &crate::presentation::IdealPresentation,
) -> Vec<GeneratorIndex> {
    let lookup = |ideal: &crate::presentation::IdealPresentation, index: &GeneratorIndex| {
        ideal
            .generators()
            .iter()
            .find(|g| &g.index == index)
            .map(|g| g.poly.clone())
            .unwrap_or_else(|| Polynomial::zero(ideal.ambient()))
    };
    let mut indices: Vec<GeneratorIndex> = a
        .generators()
        .iter()
        .map(|g| g.index.clone())
        .chain(a.dropped().iter().cloned())
        .collect();
    indices.sort();
    indices
        .into_iter()
        .filter(|index| lookup(a, index) != lookup(b, index))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexReport {
    pub checked: usize,
    pub mismatches: Vec<GeneratorIndex>,
}

impl IndexReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Plain and compact generators agree polynomial by polynomial.
pub fn compact_equivalence_check(lambda: &Partition) -> IndexReport {
    let plain = equivariant_k_ideal(lambda);
    let compact = equivariant_k_ideal_compact(lambda);
    IndexReport {
        checked: relation_index_set(lambda).len(),
        mismatches: compare_by_index(&plain, &compact),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingIdentity {
    /// `Σ_k (−1)^{d−k} e_k(u_{φ(1)},…,u_{φ(s)}) h_{d−k}(u_{φ(1)},…,u_{φ(s+1−d)})`
    pub lhs: Polynomial,
    /// `e_d(u_{φ(s+2−d)},…,u_{φ(s)})`
    pub residual: Polynomial,
    pub holds: bool,
}

/// Expands the `u`-only part that separates the compact form from the
/// plain one. The sum always equals the residual; it vanishes because the
/// residual has `d − 1` arguments.
pub fn vanishing_identity_check(lambda: &Partition, s: usize, d: usize) -> Result<VanishingIdentity> {
    let n = lambda.size();
    if s == 0 || s > n {
        return Err(Error::OutOfRange(format!("s = {s} outside 1..={n}")));
    }
    if d == 0 || d > s + 1 {
        return Err(Error::OutOfRange(format!("d = {d} outside 1..={}", s + 1)));
    }
    let vars = TanisakiVars::new(lambda);
    let space = &vars.space;
    let full = vars.u_prefix(s);
    let lhs = tanisaki_relation(full, vars.u_prefix(s + 1 - d), d, space);
    let residual = elementary_symmetric(d, &full[s + 1 - d..], space);
    let holds = lhs.is_zero() && lhs == residual;
    Ok(VanishingIdentity { lhs, residual, holds })
}

fn ones(m: usize) -> (std::sync::Arc<VariableSpace>, Vec<Polynomial>) {
    let space = VariableSpace::new(&[]).unwrap();
    let one = Polynomial::one(&space);
    (space, vec![one; m])
}

/// `h_{d−k}(1,…,1)` with `s+1−d` ones equals `C(s−k, s−d)`, and
/// `C(q+d−k−1, q−1) = ∏_{i=1}^{q−s−1+d} (s−k+i)/(s−d+i) · C(s−k, s−d)`.
pub fn binomial_specialization_check(s: usize, d: usize, k: usize, q: usize) -> Result<bool> {
    if !(k <= d && d <= s) {
        return Err(Error::OutOfRange(format!("need 0 ≤ k ≤ d ≤ s, got k={k}, d={d}, s={s}")));
    }
    if q + d < s + 1 {
        return Err(Error::OutOfRange(format!("need q ≥ s+1−d, got q={q}")));
    }
    let (s, d, k, q) = (s as i64, d as i64, k as i64, q as i64);
    let base = Coeff::from_integer(binomial(s - k, s - d));

    let (space, args) = ones((s + 1 - d) as usize);
    let h = complete_symmetric((d - k) as usize, &args, &space);
    let first = h.as_constant().unwrap_or_else(Coeff::zero) == base;

    let mut factor = Coeff::one();
    for i in 1..=(q - s - 1 + d) {
        factor *= Coeff::new((s - k + i).into(), (s - d + i).into());
    }
    let second = Coeff::from_integer(binomial(q + d - k - 1, q - 1)) == factor * base;
    Ok(first && second)
}

#[derive(Clone, Debug, Serialize)]
pub struct TruncationReport {
    pub checked: usize,
    /// `(s, subset)` pairs whose `d = s+1` formula is nonzero.
    pub nonzero: Vec<(usize, Vec<usize>)>,
}

impl TruncationReport {
    pub fn passed(&self) -> bool {
        self.nonzero.is_empty()
    }
}

/// The relation formula one degree past the cap, `d = s+1`, is zero for
/// every `s` and every subset.
pub fn truncation_check(lambda: &Partition) -> TruncationReport {
    let vars = TanisakiVars::new(lambda);
    let mut checked = 0;
    let mut nonzero = Vec::new();
    for s in 1..=lambda.size() {
        for subset in subsets(lambda.size(), s) {
            checked += 1;
            let p = tanisaki_relation(&vars.xs(&subset), vars.u_prefix(0), s + 1, &vars.space);
            if !p.is_zero() {
                nonzero.push((s, subset));
            }
        }
    }
    TruncationReport { checked, nonzero }
}

/// Every generator equals the `t^d` coefficient of
/// `∏_r (1 + x_{i_r} t) · ∏_{ℓ ≤ s+1−d} (1 + u_{φ(ℓ)} t)^{-1}`.
pub fn series_bridge_check(lambda: &Partition) -> IndexReport {
    let vars = TanisakiVars::new(lambda);
    let ideal = equivariant_k_ideal(lambda);
    let mut mismatches = Vec::new();
    let index_set = relation_index_set(lambda);
    for (s, subset, d) in &index_set {
        let series = series_coefficient(&vars.xs(subset), vars.u_prefix(s + 1 - d), *d, &vars.space);
        let index = GeneratorIndex::Relation { s: *s, subset: subset.clone(), d: *d };
        let stored = ideal
            .generators()
            .iter()
            .find(|g| g.index == index)
            .map(|g| g.poly.clone())
            .unwrap_or_else(|| Polynomial::zero(ideal.ambient()));
        if series != stored {
            mismatches.push(index);
        }
    }
    IndexReport { checked: index_set.len(), mismatches }
}

/// For `λ = (1,…,1)`, `(v·f)|_w = f|_{w∘v}` with no coset normalization,
/// tested on a tuple with pairwise distinct entries.
pub fn full_flag_action_check(n: usize) -> Result<bool> {
    let lambda = Partition::new(vec![1; n])?;
    let points = fixed_points(&lambda);
    let space = VariableSpace::new(&[(Family::U, n)])?;
    let f = GkmTuple {
        values: (0..points.len()).map(|i| Polynomial::integer(&space, i as i64)).collect(),
    };
    for v in PermutationWord::all(n) {
        let acted = sn_act_tuple(&v, &f, &lambda)?;
        for (w, value) in points.points.iter().zip(&acted.values) {
            let target = points.position(&w.compose(&v)).expect("every word is a fixed point");
            if *value != f.values[target] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
