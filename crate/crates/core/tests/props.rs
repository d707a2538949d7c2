//! Property tests for the order laws, the file format, and language
//! preservation of the classical constructions.

mod common;

use proptest::prelude::*;

use common::ab2;
use wat_core::alphabet::{Alphabet, Word};
use wat_core::automaton::Nfa;
use wat_core::colex::colex_cmp;
use wat_core::format;
use wat_core::oracle;

fn word_strategy(sigma: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..sigma, 0..=max_len).prop_map(Word::from_syms)
}

fn nfa_strategy() -> impl Strategy<Value = Nfa> {
    // up to 5 states over {a, b}; state 0 initial; arbitrary edges and finals
    (1usize..=5).prop_flat_map(|n| {
        let edges = prop::collection::btree_set((0..n, 0..2usize, 0..n), 0..=(n * 2 * n));
        let finals = prop::collection::btree_set(0..n, 1..=n);
        (Just(n), edges, finals).prop_map(|(n, edges, finals)| {
            Nfa::new(ab2(), n, [0], finals, edges).expect("valid by construction")
        })
    })
}

proptest! {
    #[test]
    fn colex_is_a_strict_total_order(
        x in word_strategy(3, 7),
        y in word_strategy(3, 7),
        z in word_strategy(3, 7),
    ) {
        use std::cmp::Ordering::*;
        // totality + antisymmetry
        let xy = colex_cmp(&x, &y);
        prop_assert_eq!(xy == Equal, x == y);
        prop_assert_eq!(colex_cmp(&y, &x), xy.reverse());
        // transitivity
        if xy == Less && colex_cmp(&y, &z) == Less {
            prop_assert_eq!(colex_cmp(&x, &z), Less);
        }
    }

    #[test]
    fn empty_word_is_minimum_and_suffixes_precede(
        x in word_strategy(3, 7),
        ext in prop::collection::vec(0..3usize, 1..4),
    ) {
        if !x.is_empty() {
            prop_assert!(Word::empty() < x);
        }
        // a proper suffix precedes its extension
        let mut longer: Vec<usize> = ext;
        longer.extend_from_slice(x.syms());
        let longer = Word::from_syms(longer);
        prop_assert!(x < longer);
        prop_assert!(x.is_suffix_of(&longer));
    }

    #[test]
    fn serialize_parse_round_trip(nfa in nfa_strategy()) {
        let canon = nfa.canonical();
        let text = format::serialize(&canon, None);
        let parsed = format::parse(&text).expect("serialized text parses");
        prop_assert_eq!(parsed.nfa.canonical(), canon);
    }

    #[test]
    fn constructions_preserve_language(nfa in nfa_strategy()) {
        if let Some(t) = nfa.trim() {
            let depth = Some(2 * t.state_count());
            prop_assert!(oracle::lang_equal(&nfa, &t, depth));
            let consistent = t.make_input_consistent();
            prop_assert!(oracle::lang_equal(&t, &consistent, depth));
            prop_assert!(consistent.state_count() <= t.state_count() * (t.alphabet().len() + 1));
            let det = t.determinize(1 << 16).expect("small inputs determinize");
            prop_assert!(oracle::lang_equal(&t, det.dfa.as_nfa(), depth));
            let min = det.dfa.minimize();
            prop_assert!(oracle::lang_equal(&t, min.as_nfa(), depth));
            prop_assert_eq!(min.minimize(), min.clone());
        }
    }

    #[test]
    fn colex_dfa_order_is_sound_on_samples(nfa in nfa_strategy()) {
        let Some(t) = nfa.trim() else { return Ok(()) };
        let Ok(det) = t.determinize(1 << 16) else { return Ok(()) };
        let d = det.dfa;
        let res = wat_core::colex::colex_partial_order_dfa(&d);
        let pref = oracle::enum_pref(&res.dfa, 6, 14).expect("small enumeration");
        for (q, p) in res.order.pairs() {
            // every sampled pair of incoming words is ordered
            for eq in pref.entries.iter().filter(|e| e.state == q) {
                for ep in pref.entries.iter().filter(|e| e.state == p) {
                    prop_assert!(eq.word < ep.word, "({q},{p}): {} !< {}", eq.word, ep.word);
                }
            }
        }
    }
}

#[test]
fn alphabet_rejects_reserved_tokens() {
    assert!(Alphabet::new(["a", "b", "a"]).is_err());
    assert!(Alphabet::new(["ε"]).is_err());
    assert!(Alphabet::new(["#"]).is_err());
}
