//! Fraction-free Buchberger kernel on primitive integer polynomials.
//!
//! Exponent vectors are stored with position 0 as the highest variable, so
//! the kernel only needs the bare order kind. Pairs are pruned with the
//! Gebauer–Möller update (which subsumes the coprime leading-term criterion)
//! and selected by sugar degree, then by least common multiple.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::OrderKind;
use crate::poly::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IPoly {
    /// Sorted by decreasing monomial.
    pub terms: Vec<(Monomial, BigInt)>,
}

fn mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .take(64)
        .enumerate()
        .fold(0u64, |acc, (i, &e)| if e > 0 { acc | (1 << i) } else { acc })
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
    }
}

/// `a·p − b·(shift·q)`, both inputs sorted, skipping the first `skip_p` and
/// `skip_q` terms.
fn combine(
    kind: OrderKind,
    a: &BigInt,
    p: &[(Monomial, BigInt)],
    b: &BigInt,
    shift: &Monomial,
    q: &[(Monomial, BigInt)],
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let mut qi = q.iter().map(|(m, c)| (shift.mul(m), c)).peekable();
    let mut pi = p.iter().peekable();
    loop {
        let ord = match (pi.peek(), qi.peek()) {
            (Some((mp, _)), Some((mq, _))) => kind.cmp_raw(mp, mq),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => {
                let (m, c) = pi.next().unwrap();
                out.push((m.clone(), a * c));
            }
            Ordering::Less => {
                let (m, c) = qi.next().unwrap();
                out.push((m, -(b * c)));
            }
            Ordering::Equal => {
                let (m, cp) = pi.next().unwrap();
                let (_, cq) = qi.next().unwrap();
                let c = a * cp - b * cq;
                if !c.is_zero() {
                    out.push((m.clone(), c));
                }
            }
        }
    }
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    kind: OrderKind,
    polys: Vec<IPoly>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State {
    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mm = mask(m);
        self.active
            .iter()
            .copied()
            .find(|&g| self.masks[g] & !mm == 0 && self.lms[g].divides(m))
    }

    /// Reduces the leading term until it is irreducible; returns the sugar.
    fn top_reduce(&self, p: &mut IPoly, mut sugar: u32) -> u32 {
        let mut steps = 0usize;
        while !p.is_zero() {
            let Some(g) = self.find_divisor(p.lm()) else { break };
            let divisor = &self.polys[g];
            let shift = divisor.lm().quotient_of(p.lm());
            sugar = sugar.max(shift.degree() + self.sugar[g]);
            let gcd = p.lc().gcd(divisor.lc());
            let a = divisor.lc() / &gcd;
            let b = p.lc() / &gcd;
            p.terms = combine(self.kind, &a, &p.terms[1..], &b, &shift, &divisor.terms[1..]);
            steps += 1;
            if steps.is_multiple_of(4) {
                p.make_primitive();
            }
        }
        p.make_primitive();
        sugar
    }

    /// Fully reduces `p` against the active basis, up to a nonzero scalar.
    fn full_reduce(&self, p: &IPoly, skip: Option<usize>) -> IPoly {
        let mut rest = p.clone();
        let mut done: Vec<(Monomial, BigInt)> = Vec::new();
        while !rest.is_zero() {
            let mm = mask(rest.lm());
            let divisor = self.active.iter().copied().find(|&g| {
                Some(g) != skip && self.masks[g] & !mm == 0 && self.lms[g].divides(rest.lm())
            });
            match divisor {
                Some(g) => {
                    let divisor = &self.polys[g];
                    let shift = divisor.lm().quotient_of(rest.lm());
                    let gcd = rest.lc().gcd(divisor.lc());
                    let a = divisor.lc() / &gcd;
                    let b = rest.lc() / &gcd;
                    rest.terms = combine(self.kind, &a, &rest.terms[1..], &b, &shift, &divisor.terms[1..]);
                    if !a.is_one() {
                        for (_, c) in &mut done {
                            *c = &*c * &a;
                        }
                    }
                }
                None => {
                    let lead = rest.terms.remove(0);
                    done.push(lead);
                }
            }
        }
        let mut out = IPoly { terms: done };
        out.make_primitive();
        out
    }

    fn s_polynomial(&self, pair: &Pair) -> (IPoly, u32) {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let tf = f.lm().quotient_of(&pair.lcm);
        let tg = g.lm().quotient_of(&pair.lcm);
        let gcd = f.lc().gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = f.lc() / &gcd;
        let shifted_f: Vec<(Monomial, BigInt)> =
            f.terms[1..].iter().map(|(m, c)| (tf.mul(m), c.clone())).collect();
        let terms = combine(self.kind, &a, &shifted_f, &b, &tg, &g.terms[1..]);
        (IPoly { terms }, pair.sugar)
    }

    fn insert(&mut self, h: IPoly, sugar: u32) {
        let idx = self.polys.len();
        let h_lm = h.lm().clone();
        self.lms.push(h_lm.clone());
        self.masks.push(mask(&h_lm));
        self.sugar.push(sugar);
        self.polys.push(h);

        let pair_for = |g: usize, lms: &[Monomial], sugars: &[u32]| -> Pair {
            let lcm = lms[g].lcm(&h_lm);
            let sg = sugars[g] + lcm.degree() - lms[g].degree();
            let sh = sugar + lcm.degree() - h_lm.degree();
            Pair { i: g, j: idx, lcm, sugar: sg.max(sh) }
        };

        // Gebauer–Möller: new pairs
        let candidates: Vec<Pair> = self.active.iter().map(|&g| pair_for(g, &self.lms, &self.sugar)).collect();
        let mut kept: Vec<usize> = Vec::new();
        for (k, pair) in candidates.iter().enumerate() {
            if self.lms[pair.i].is_coprime(&h_lm) {
                kept.push(k);
                continue;
            }
            let dominated = candidates[k + 1..].iter().any(|other| other.lcm.divides(&pair.lcm))
                || kept.iter().any(|&o| candidates[o].lcm.divides(&pair.lcm));
            if !dominated {
                kept.push(k);
            }
        }
        let mut candidates: Vec<Option<Pair>> = candidates.into_iter().map(Some).collect();
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter_map(|k| candidates[k].take())
            .filter(|pair| !self.lms[pair.i].is_coprime(&h_lm))
            .collect();

        // Gebauer–Möller: prune old pairs
        let lms = &self.lms;
        self.pairs.retain(|pair| {
            if !h_lm.divides(&pair.lcm) {
                return true;
            }
            let li = lms[pair.i].lcm(&h_lm);
            let lj = lms[pair.j].lcm(&h_lm);
            li == pair.lcm || lj == pair.lcm
        });
        self.pairs.extend(new_pairs);

        // drop basis elements made redundant by h
        self.active.retain(|&g| !h_lm.divides(&lms[g]));
        self.active.push(idx);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let kind = self.kind;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| kind.cmp_raw(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `input`: primitive,
/// positive leading coefficients, sorted by increasing leading monomial.
pub(crate) fn reduced_basis(kind: OrderKind, input: Vec<IPoly>) -> Vec<IPoly> {
    let mut input: Vec<IPoly> = input
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|mut p| {
            p.terms.sort_by(|a, b| kind.cmp_raw(&b.0, &a.0));
            p.make_primitive();
            p
        })
        .collect();
    input.sort_by(|a, b| kind.cmp_raw(a.lm(), b.lm()).then_with(|| a.terms.len().cmp(&b.terms.len())));

    let mut state = State {
        kind,
        polys: Vec::new(),
        lms: Vec::new(),
        masks: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };

    let unit = |nvars: usize| vec![IPoly { terms: vec![(Monomial::one(nvars), BigInt::one())] }];

    for mut f in input {
        let degree = f.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        let sugar = state.top_reduce(&mut f, degree);
        if f.is_zero() {
            continue;
        }
        if f.lm().is_one() {
            return unit(f.lm().nvars());
        }
        state.insert(f, sugar);
    }

    while let Some(pair) = state.next_pair() {
        let (mut s, sugar) = state.s_polynomial(&pair);
        let sugar = state.top_reduce(&mut s, sugar);
        if s.is_zero() {
            continue;
        }
        if s.lm().is_one() {
            return unit(s.lm().nvars());
        }
        state.insert(s, sugar);
    }

    let mut basis: Vec<IPoly> = state
        .active
        .iter()
        .map(|&g| state.full_reduce(&state.polys[g], Some(g)))
        .collect();
    // leading terms are untouched by tail reduction
    basis.sort_by(|a, b| kind.cmp_raw(a.lm(), b.lm()));
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(terms: &[(&[u16], i64)]) -> IPoly {
        IPoly {
            terms: terms
                .iter()
                .map(|(e, c)| (Monomial::from_exponents(e), BigInt::from(*c)))
                .collect(),
        }
    }

    #[test]
    fn primitive_normalization() {
        let mut p = ip(&[(&[1, 0], -4), (&[0, 0], 6)]);
        p.make_primitive();
        assert_eq!(p, ip(&[(&[1, 0], 2), (&[0, 0], -3)]));
    }

    #[test]
    fn eliminates_under_lex() {
        // x + y - 3, x*y - 2 under lex x > y
        let f = ip(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -3)]);
        let g = ip(&[(&[1, 1], 1), (&[0, 0], -2)]);
        let basis = reduced_basis(OrderKind::Lex, vec![f, g]);
        assert_eq!(
            basis,
            vec![
                ip(&[(&[0, 2], 1), (&[0, 1], -3), (&[0, 0], 2)]),
                ip(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -3)]),
            ]
        );
    }

    #[test]
    fn unit_ideal() {
        let f = ip(&[(&[1], 1)]);
        let g = ip(&[(&[1], 1), (&[0], 1)]);
        let basis = reduced_basis(OrderKind::GrevLex, vec![f, g]);
        assert_eq!(basis, vec![ip(&[(&[0], 1)])]);
    }
}
