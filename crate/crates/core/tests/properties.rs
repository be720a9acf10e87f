mod common;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use lyndon_core::enumeration::{alternating_sum, parity_census, words_of};
use lyndon_core::involution::toggle;
use lyndon_core::lyndon::{
    cfl_factorization, is_lyndon, lyndon_tuple, parity, standard_factorization, tuple_to_word,
    LyndonTuple,
};
use lyndon_core::witt::{
    lyndon_count, poly_mul, witt_product, ExponentVector, TruncatedPolynomial,
};
use lyndon_core::words::{compositions, content, lex_compare, Alphabet, MultisetSpec, Word};

fn all_words(k: u8, max_len: usize) -> impl Iterator<Item = Vec<u8>> {
    (1..=max_len).flat_map(move |len| common::words_of_length(k, len))
}

#[test]
fn is_lyndon_matches_rotation_and_suffix_definitions() {
    for letters in all_words(3, 8) {
        let w = Word::new(letters.clone());
        let got = is_lyndon(&w).unwrap();
        assert_eq!(got, common::is_lyndon(&letters), "{w}");
        let below_suffixes = (1..letters.len()).all(|i| letters.as_slice() < &letters[i..]);
        assert_eq!(got, below_suffixes, "{w}");
    }
}

#[test]
fn lyndon_iff_letter_or_product_of_increasing_lyndon_pair() {
    for letters in all_words(3, 8) {
        let has_split = (1..letters.len()).any(|cut| {
            let (r, s) = (&letters[..cut], &letters[cut..]);
            common::is_lyndon(r) && common::is_lyndon(s) && r < s
        });
        let expected = letters.len() == 1 || has_split;
        assert_eq!(
            is_lyndon(&Word::new(letters.clone())).unwrap(),
            expected,
            "{letters:?}"
        );
    }
}

#[test]
fn standard_factorization_matches_oracle() {
    for letters in all_words(3, 8).filter(|w| w.len() >= 2 && common::is_lyndon(w)) {
        let l = Word::new(letters.clone());
        let (r, s) = standard_factorization(&l).unwrap();
        let (er, es) = common::standard_factorization(&letters).unwrap();
        assert_eq!(
            (r.letters(), s.letters()),
            (er.as_slice(), es.as_slice()),
            "{l}"
        );
        // s is also the smallest proper suffix
        let smallest = (1..letters.len()).map(|i| &letters[i..]).min().unwrap();
        assert_eq!(s.letters(), smallest);
        assert!(r < l && l < s, "{r} < {l} < {s}");
        assert!(lex_compare(&l, &s).is_strictly_below());
    }
}

#[test]
fn factorization_of_a_lyndon_word_is_itself() {
    for letters in all_words(3, 8).filter(|w| common::is_lyndon(w)) {
        let w = Word::new(letters);
        assert_eq!(cfl_factorization(&w).unwrap(), vec![w.clone()]);
    }
}

#[test]
fn tuples_round_trip() {
    // every tuple of total length <= 8 is the tuple of exactly one word
    for letters in all_words(3, 8) {
        let w = Word::new(letters);
        let Ok(t) = lyndon_tuple(&w) else { continue };
        assert_eq!(tuple_to_word(&t), w);
        let rebuilt = LyndonTuple::new(t.factors().to_vec()).unwrap();
        assert_eq!(lyndon_tuple(&tuple_to_word(&rebuilt)).unwrap(), rebuilt);
    }
}

#[test]
fn lyndon_counts_sum_to_length_n_lyndon_words() {
    for vars in 1..=3u8 {
        for n in 1..=7 {
            let by_formula: BigUint = compositions(n, vars as usize)
                .into_iter()
                .map(|m| lyndon_count(&ExponentVector::new(m)))
                .sum();
            let by_enumeration = common::words_of_length(vars, n)
                .iter()
                .filter(|w| common::is_lyndon(w))
                .count();
            assert_eq!(
                by_formula,
                BigUint::from(by_enumeration),
                "vars={vars} n={n}"
            );
        }
    }
}

#[test]
fn witt_coefficients_are_alternating_sums() {
    for vars in 1..=3 {
        let product = witt_product(vars, 6);
        for n in 1..=6 {
            for m in compositions(n, vars) {
                let spec = MultisetSpec::from_multiplicities(m.clone()).unwrap();
                let coefficient = product.coefficient(&ExponentVector::new(m));
                assert_eq!(coefficient, alternating_sum(&spec).unwrap(), "{spec}");
            }
        }
    }
}

#[test]
fn census_is_independent_of_thread_count() {
    let m = MultisetSpec::from_multiplicities(vec![3, 3, 2]).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| parity_census(&m).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn single_letter_multisets_only_have_the_trivial_word() {
    for n in 2..=6 {
        let m = MultisetSpec::from_multiplicities(vec![n]).unwrap();
        let c = parity_census(&m).unwrap();
        assert_eq!(c.excluded, BigUint::from(1u32));
        assert_eq!(c.alternating_sum, BigInt::from(0));
    }
}

fn lyndon_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=4, 1..=max_len)
        .prop_map(Word::new)
        .prop_filter("Lyndon", |w| is_lyndon(w).unwrap())
}

fn sparse_poly(vars: usize, d: usize) -> impl Strategy<Value = TruncatedPolynomial> {
    prop::collection::vec((prop::collection::vec(0usize..=3, vars), -5i64..=5), 0..6).prop_map(
        move |terms| {
            TruncatedPolynomial::from_terms(
                vars,
                d,
                terms
                    .into_iter()
                    .map(|(e, c)| (ExponentVector::new(e), BigInt::from(c))),
            )
            .unwrap()
        },
    )
}

proptest! {
    #[test]
    fn toggle_is_a_parity_flipping_involution(letters in prop::collection::vec(1u8..=4, 2..=14)) {
        let w = Word::new(letters);
        if let Ok(p) = parity(&w) {
            let image = toggle(&w).unwrap();
            let alphabet = Alphabet::new(4).unwrap();
            prop_assert_eq!(content(&image, alphabet), content(&w, alphabet));
            prop_assert_eq!(parity(&image).unwrap(), p.flipped());
            prop_assert_eq!(toggle(&image).unwrap(), w);
        }
    }

    #[test]
    fn sets_of_lyndon_words_form_tuples(mut factors in prop::collection::vec(lyndon_word(6), 1..5)) {
        factors.sort();
        factors.dedup();
        let t = LyndonTuple::new(factors).unwrap();
        let w = tuple_to_word(&t);
        prop_assert_eq!(lyndon_tuple(&w).unwrap(), t);
    }

    #[test]
    fn word_text_round_trips(letters in prop::collection::vec(1u8..=20, 1..12)) {
        let w = Word::new(letters);
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }

    #[test]
    fn multiset_text_round_trips(counts in prop::collection::vec(0usize..6, 1..5)) {
        let m = MultisetSpec::from_multiplicities(counts).unwrap();
        let parsed: MultisetSpec = m.to_string().parse().unwrap();
        prop_assert_eq!(parsed, m);
    }

    #[test]
    fn words_of_yields_sorted_distinct_permutations(counts in prop::collection::vec(0usize..4, 1..4)) {
        let m = MultisetSpec::from_multiplicities(counts).unwrap();
        prop_assume!(m.cardinality() > 0);
        let words: Vec<Word> = words_of(&m).unwrap().collect();
        prop_assert!(words.windows(2).all(|p| p[0] < p[1]));
        prop_assert!(words.iter().all(|w| m.admits(w)));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in sparse_poly(3, 6), b in sparse_poly(3, 6), c in sparse_poly(3, 6)
    ) {
        let ab = poly_mul(&a, &b).unwrap();
        prop_assert_eq!(&ab, &poly_mul(&b, &a).unwrap());
        prop_assert_eq!(poly_mul(&ab, &c).unwrap(), poly_mul(&a, &poly_mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(poly_mul(&a, &TruncatedPolynomial::one(3, 6)).unwrap(), a);
    }
}
