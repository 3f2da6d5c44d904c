use intorder_core::{
    apply_i, apply_i_power, apply_nf_to_monomial, apply_word, apply_word_to_monomial, bessel_row,
    general_power_normal_form, generalized_triangle, nf_add, normal_order, verify_equivalence,
    word_closed_form, xi_power_normal_form, Block, Monomial, NormalForm, Rational, Word,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn block() -> impl Strategy<Value = Block> {
    (any::<bool>(), 0u32..=4).prop_map(|(is_x, e)| if is_x { Block::x(e) } else { Block::i(e) })
}

fn word(max_blocks: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(block(), 0..=max_blocks).prop_map(Word::from_blocks)
}

fn small_nf() -> impl Strategy<Value = NormalForm> {
    prop::collection::vec(((0u64..4, 0u64..4), -5i64..=5), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|((x, i), c)| (Monomial::new(x, i), BigInt::from(c)))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonicalization_is_idempotent(w in word(10)) {
        let once = w.canonical();
        prop_assert!(once.is_canonical());
        prop_assert_eq!(once.canonical(), once.clone());
        prop_assert_eq!(once.total_degrees(), w.total_degrees());
    }

    #[test]
    fn addition_commutes_and_associates(a in small_nf(), b in small_nf(), c in small_nf()) {
        prop_assert_eq!(nf_add(&a, &b), nf_add(&b, &a));
        prop_assert_eq!(nf_add(&nf_add(&a, &b), &c), nf_add(&a, &nf_add(&b, &c)));
        prop_assert!(nf_add(&a, &-&a).is_zero());
    }

    #[test]
    fn degree_conservation_and_sign_alternation(w in word(8)) {
        let (r, s) = w.total_degrees();
        let nf = normal_order(&w);
        prop_assert!(nf.is_on_anti_diagonal(r, s));
        for (m, c) in &nf {
            prop_assert_eq!(m.x_power + m.i_power, r + s);
            let k = m.i_power - s;
            prop_assert_eq!(c.is_negative(), k % 2 == 1);
        }
        // the leading term x^R I^S always survives with coefficient 1
        prop_assert_eq!(nf.coeff(Monomial::new(r, s)), BigInt::from(1));
    }

    #[test]
    fn normal_order_is_a_monoid_action(a in word(6), b in word(6)) {
        let whole = normal_order(&a.concat(&b));
        prop_assert_eq!(whole.clone(), apply_word(&a, &normal_order(&b)));
        prop_assert_eq!(whole, apply_word(&a.concat(&b), &NormalForm::one()));
    }

    #[test]
    fn closed_form_matches_engine(w in word(8)) {
        prop_assert_eq!(word_closed_form(&w), normal_order(&w));
    }

    #[test]
    fn oracle_certifies_engine(w in word(8)) {
        let report = verify_equivalence(&w, &normal_order(&w));
        prop_assert!(report.equal);
    }

    #[test]
    fn image_degree_is_shifted_by_total_degree(w in word(8), m in 0u64..=6) {
        let (r, s) = w.total_degrees();
        prop_assert_eq!(apply_word_to_monomial(&w, m).degree, m + r + s);
    }

    #[test]
    fn oracle_is_linear(a in small_nf(), b in small_nf(), m in 0u64..=6) {
        let lhs = apply_nf_to_monomial(&nf_add(&a, &b), m);
        let rhs = apply_nf_to_monomial(&a, m).add(&apply_nf_to_monomial(&b, m));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn apply_i_term_count(alpha in 0u64..=12, beta in 0u64..=6) {
        let image = apply_i(&NormalForm::monomial(Monomial::new(alpha, beta), BigInt::from(1)));
        prop_assert_eq!(image.len() as u64, alpha + 1);
        prop_assert_eq!(image.coeff(Monomial::new(alpha, beta + 1)), BigInt::from(1));
    }

    #[test]
    fn single_sum_equals_repeated_integration(alpha in 0u64..=10, beta in 0u64..=5, delta in 1u64..=5) {
        let mut repeated = NormalForm::monomial(Monomial::new(alpha, beta), BigInt::from(1));
        for _ in 0..delta {
            repeated = apply_i(&repeated);
        }
        prop_assert_eq!(apply_i_power(alpha, beta, delta).unwrap(), repeated);
    }
}

#[test]
fn xi_powers_match_engine() {
    let xi = Word::from_blocks([Block::x(1), Block::i(1)]);
    for n in 1..=8u32 {
        assert_eq!(xi_power_normal_form(n.into()).unwrap(), normal_order(&xi.pow(n)), "n={n}");
    }
}

#[test]
fn general_powers_match_engine() {
    for lambda in 1..=3u32 {
        for delta in 1..=3u32 {
            let base = Word::from_blocks([Block::x(lambda), Block::i(delta)]);
            for n in 1..=5u32 {
                assert_eq!(
                    general_power_normal_form(lambda.into(), delta.into(), n.into()).unwrap(),
                    normal_order(&base.pow(n)),
                    "λ={lambda} δ={delta} n={n}"
                );
            }
        }
    }
}

#[test]
fn generalized_triangle_reduces_to_bessel() {
    let t = generalized_triangle(1, 1, 10).unwrap();
    for n in 1..=10u64 {
        assert_eq!(t.row(n).unwrap(), bessel_row(n - 1).as_slice());
    }
}

#[test]
fn triangle_entries_positive_and_rows_full_width() {
    for n in 0..=15u64 {
        assert!(bessel_row(n).iter().all(|v| !v.is_zero()));
    }
    for lambda in 1..=4u64 {
        for delta in 1..=4u64 {
            let t = generalized_triangle(lambda, delta, 6).unwrap();
            for n in 1..=6u64 {
                let row = t.row(n).unwrap();
                assert_eq!(row.len() as u64, lambda * (n - 1) + 1);
                assert_eq!(row[0], BigUint::from(1u32));
                assert!(row.iter().all(|v| !v.is_zero()), "λ={lambda} δ={delta} n={n}");
            }
        }
    }
}

#[test]
fn xi_power_action_on_monomials() {
    fn falling_ratio(m: u64, j: u64) -> Rational {
        // m! / (m + j)!
        let denom: BigInt = (1..=j).map(|t| BigInt::from(m + t)).product();
        Rational::new(BigInt::from(1), denom)
    }
    let xi = Word::from_blocks([Block::x(1), Block::i(1)]);
    for n in 1..=6u64 {
        let row = bessel_row(n - 1);
        for m in 0..=4u64 {
            let lhs = apply_word_to_monomial(&xi.pow(n as u32), m).coeff;
            let rhs: Rational = (0..n)
                .map(|k| {
                    let a = Rational::from_integer(BigInt::from(row[k as usize].clone()));
                    let term = a * falling_ratio(m, n + k);
                    if k % 2 == 1 { -term } else { term }
                })
                .sum();
            assert_eq!(lhs, rhs, "n={n} m={m}");
        }
    }
}
