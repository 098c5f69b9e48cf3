use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::{select, subsequence};

use springer_k::fixed_points::{gkm_image, restrict, sn_act_polynomial, sn_act_tuple, PermutationWord};
use springer_k::groebner::{buchberger, generic_rank, specialize_generic, MonomialOrder, OrderKind, QuotientDimension};
use springer_k::poly::{
    complete_symmetric, elementary_symmetric, Coeff, Family, Monomial, Polynomial, TruncatedPowerSeries, Var,
    VariableSpace,
};
use springer_k::presentation::equivariant_k_ideal;
use springer_k::{enumerate_partitions, Partition};

fn xu_space() -> Arc<VariableSpace> {
    VariableSpace::new(&[(Family::X, 3), (Family::U, 2)]).unwrap()
}

fn poly_strategy(space: Arc<VariableSpace>, max_terms: usize, max_exp: u16) -> impl Strategy<Value = Polynomial> {
    let nvars = space.len();
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -4i64..5), 0..max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(
                &space,
                terms
                    .into_iter()
                    .map(|(e, c)| (Monomial::from_exponents(&e), Coeff::from_integer(c.into()))),
            )
        },
    )
}

fn partitions_up_to(n: usize) -> Vec<Partition> {
    (1..=n).flat_map(enumerate_partitions).collect()
}

fn permutation(n: usize) -> impl Strategy<Value = PermutationWord> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|w| PermutationWord::new(w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(
        a in poly_strategy(xu_space(), 5, 2),
        b in poly_strategy(xu_space(), 5, 2),
        c in poly_strategy(xu_space(), 5, 2),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(a.space()), a.clone());
    }

    #[test]
    fn normal_form_is_multiplicative(
        a in poly_strategy(xu_space(), 4, 2),
        b in poly_strategy(xu_space(), 4, 2),
        lambda in select(vec![vec![2, 1], vec![1, 1, 1], vec![3]]),
    ) {
        let ideal = specialize_generic(&equivariant_k_ideal(&Partition::new(lambda).unwrap()), 17).unwrap();
        let gb = buchberger(&ideal.polynomials(), &MonomialOrder::grevlex(ideal.ambient())).unwrap();
        let embed = |p: &Polynomial| {
            let xs = VariableSpace::new(&[(Family::X, 3)]).unwrap();
            let sub = {
                let mut s = springer_k::poly::Substitution::total(p.space(), &xs);
                for i in 1..=3 {
                    s.map_var(Var::x(i), Var::x(i)).unwrap();
                }
                s.map_const(Var::u(1), Coeff::from_integer(3.into())).unwrap();
                s.map_const(Var::u(2), Coeff::from_integer(7.into())).unwrap();
                s
            };
            p.substitute(&sub).unwrap().embed(ideal.ambient()).unwrap()
        };
        let (a, b) = (embed(&a), embed(&b));
        let na = gb.normal_form(&a).unwrap();
        let nb = gb.normal_form(&b).unwrap();
        let lhs = gb.normal_form(&(&a * &b)).unwrap();
        let rhs = gb.normal_form(&(&na * &nb)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(gb.normal_form(&na).unwrap(), na.clone());
        prop_assert!(gb.contains(&(&a - &na)).unwrap());
    }

    #[test]
    fn newton_identities(vals in prop::collection::vec(-5i64..6, 1..5), k in 1usize..6) {
        let space = VariableSpace::new(&[(Family::X, vals.len())]).unwrap();
        let xs: Vec<Polynomial> = (1..=vals.len()).map(|i| Polynomial::var(&space, Var::x(i)).unwrap()).collect();
        let power_sum = |i: u32| xs.iter().fold(Polynomial::zero(&space), |acc, x| &acc + &x.pow(i));
        // k e_k = Σ_{i=1..k} (−1)^{i−1} e_{k−i} p_i
        let mut rhs = Polynomial::zero(&space);
        for i in 1..=k {
            let term = &elementary_symmetric(k - i, &xs, &space) * &power_sum(i as u32);
            rhs = if i % 2 == 1 { &rhs + &term } else { &rhs - &term };
        }
        let lhs = elementary_symmetric(k, &xs, &space).scale(&Coeff::from_integer((k as i64).into()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_product_of_e_and_h_is_one(n in 1usize..5, d in 1usize..6) {
        let space = VariableSpace::new(&[(Family::X, n)]).unwrap();
        let xs: Vec<Polynomial> = (1..=n).map(|i| Polynomial::var(&space, Var::x(i)).unwrap()).collect();
        // E(t) H(−t) = 1
        let mut acc = Polynomial::zero(&space);
        for k in 0..=d {
            let term = &elementary_symmetric(k, &xs, &space) * &complete_symmetric(d - k, &xs, &space);
            acc = if (d - k) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        prop_assert!(acc.is_zero());
        let mut series = TruncatedPowerSeries::one(&space, d);
        for x in &xs {
            series = series.mul(&TruncatedPowerSeries::inverse_linear(x, d));
        }
        let h = complete_symmetric(d, &xs, &space);
        let expected = if d % 2 == 0 { h } else { -&h };
        prop_assert_eq!(series.coefficient(d), &expected);
    }

    #[test]
    fn restriction_is_a_ring_map(
        a in poly_strategy(xu_space(), 4, 2),
        b in poly_strategy(xu_space(), 4, 2),
    ) {
        let lambda = Partition::new(vec![2, 1]).unwrap();
        for w in springer_k::fixed_points::fixed_points(&lambda).points {
            let lhs = restrict(&(&a * &b), &lambda, &w).unwrap();
            let rhs = &restrict(&a, &lambda, &w).unwrap() * &restrict(&b, &lambda, &w).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn action_commutes_with_restriction_on_monomials(
        lambda in select(partitions_up_to(4)),
        exps in prop::collection::vec(0u16..3, 8),
        seed in any::<u64>(),
    ) {
        let n = lambda.size();
        let l = lambda.length();
        let space = VariableSpace::new(&[(Family::X, n), (Family::U, l)]).unwrap();
        let m = Polynomial::from_terms(&space, [(Monomial::from_exponents(&exps[..n + l]), Coeff::from_integer(1.into()))]);
        let words = PermutationWord::all(n);
        let v = &words[(seed % words.len() as u64) as usize];
        let lhs = sn_act_tuple(v, &gkm_image(&m, &lambda).unwrap(), &lambda).unwrap();
        let rhs = gkm_image(&sn_act_polynomial(v, &m).unwrap(), &lambda).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_a_left_action(v1 in permutation(4), v2 in permutation(4), lambda in select(enumerate_partitions(4))) {
        let space = VariableSpace::new(&[(Family::U, 1)]).unwrap();
        let count = springer_k::fixed_points::fixed_points(&lambda).len();
        let f = springer_k::fixed_points::GkmTuple {
            values: (0..count).map(|i| Polynomial::integer(&space, i as i64 * 7 + 1)).collect(),
        };
        let nested = sn_act_tuple(&v1, &sn_act_tuple(&v2, &f, &lambda).unwrap(), &lambda).unwrap();
        let product = sn_act_tuple(&v1.compose(&v2), &f, &lambda).unwrap();
        prop_assert_eq!(nested, product);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn buchberger_ignores_generator_order(
        lambda in select(partitions_up_to(4)),
        shuffle in Just(()).prop_perturb(|_, mut rng| rng.next_u64()),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let ideal = specialize_generic(&equivariant_k_ideal(&lambda), 17).unwrap();
        let order = MonomialOrder::grevlex(ideal.ambient());
        let gens = ideal.polynomials();
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(shuffle));
        let a = buchberger(&gens, &order).unwrap();
        let b = buchberger(&shuffled, &order).unwrap();
        prop_assert_eq!(a.polynomials(), b.polynomials());
    }

    #[test]
    fn generic_rank_is_seed_independent(lambda in select(partitions_up_to(5)), s1 in 0u64..1000, s2 in 1000u64..2000) {
        let ideal = equivariant_k_ideal(&lambda);
        let r1 = generic_rank(&ideal, s1, 3, OrderKind::GrevLex).unwrap();
        let r2 = generic_rank(&ideal, s2, 3, OrderKind::GrevLex).unwrap();
        prop_assert_eq!(r1.rank, r2.rank);
    }

    #[test]
    fn dimension_counts_standard_monomials(
        lambda in select(partitions_up_to(4)),
        kind in select(vec![OrderKind::GrevLex, OrderKind::Lex]),
        subset in subsequence((0..6usize).collect::<Vec<_>>(), 0..=6),
    ) {
        let ideal = specialize_generic(&equivariant_k_ideal(&lambda), 17).unwrap();
        let gens = ideal.polynomials();
        // dropping generators may give an infinite quotient; both answers must agree
        let chosen: Vec<Polynomial> = if subset.len() == 6 {
            gens.clone()
        } else {
            gens.iter().enumerate().filter(|(i, _)| !subset.contains(&(i % 6))).map(|(_, g)| g.clone()).collect()
        };
        let gb = buchberger(&chosen, &MonomialOrder::new(kind, ideal.ambient())).unwrap();
        match gb.quotient_dimension() {
            QuotientDimension::Finite(d) => prop_assert_eq!(gb.standard_monomials().unwrap().len(), d),
            QuotientDimension::Infinite => prop_assert!(gb.standard_monomials().is_err()),
        }
    }
}
