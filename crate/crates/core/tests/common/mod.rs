//! Shared corpus machinery for the integration suites. Everything is seeded
//! and deterministic.

#![allow(dead_code)]

use wat_core::alphabet::Alphabet;
use wat_core::automaton::{Dfa, Nfa, StateId};
use wat_core::format;
use wat_core::oracle::{self, TestRng};

pub fn fig1_text() -> String {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/fig1.aut");
    std::fs::read_to_string(path).expect("golden file present")
}

pub fn fig1() -> Dfa {
    let parsed = format::parse(&fig1_text()).expect("golden file parses");
    Dfa::try_from_nfa(parsed.nfa).expect("fig1 is deterministic")
}

pub fn ab2() -> Alphabet {
    Alphabet::from_chars("ab")
}

/// Random trimmed DFA with a state count in `lo..=hi`.
pub fn random_trimmed_dfa(rng: &mut TestRng, lo: usize, hi: usize, ab: &Alphabet) -> Dfa {
    loop {
        if let Some(d) = oracle::random_dfa(rng, hi, ab, 0.82, 0.4) {
            if (lo..=hi).contains(&d.state_count()) {
                return d;
            }
        }
    }
}

/// Random trimmed *minimal* DFA with a state count in `lo..=hi`.
pub fn random_minimal_dfa(rng: &mut TestRng, lo: usize, hi: usize, ab: &Alphabet) -> Dfa {
    loop {
        let d = random_trimmed_dfa(rng, lo, hi, ab, ).minimize();
        if (lo..=hi).contains(&d.state_count()) {
            return d;
        }
    }
}

/// Random trimmed NFA with a state count in `lo..=hi` (multi-initial allowed).
pub fn random_trimmed_nfa(rng: &mut TestRng, lo: usize, hi: usize, ab: &Alphabet) -> Nfa {
    loop {
        let n = oracle::random_nfa(rng, hi, ab, 0.30, 0.45);
        if let Some(t) = n.trim() {
            if (lo..=hi).contains(&t.state_count()) {
                return t;
            }
        }
    }
}

/// Constructive Wheeler NFA sampler: build label blocks in symbol order and
/// only add order-respecting edges, then trim and let the exhaustive search
/// certify an order. Returns the automaton with its certified order.
pub fn random_wnfa(rng: &mut TestRng, max_states: usize, cap: usize) -> Option<(Nfa, Vec<StateId>)> {
    let ab = ab2();
    let n = 2 + rng.below(max_states - 1); // at least 2 states
    let a_block = rng.below(n); // size of the a-labeled block
    let blocks = [(1usize, a_block), (1 + a_block, n - 1 - a_block)];
    let mut transitions = Vec::new();
    for (sym, &(lo, len)) in blocks.iter().enumerate() {
        if len == 0 {
            continue;
        }
        let hi = lo + len - 1;
        let mut floor = lo;
        for u in 0..n {
            if floor > hi || !rng.chance(0.7) {
                continue;
            }
            let start = floor + rng.below(hi - floor + 1);
            let end = start + rng.below(hi - start + 1);
            let mut max_used = None;
            for v in start..=end {
                if v == start || rng.chance(0.7) {
                    transitions.push((u, sym, v));
                    max_used = Some(v);
                }
            }
            if let Some(m) = max_used {
                floor = m;
            }
        }
    }
    let mut finals: Vec<StateId> = (0..n).filter(|_| rng.chance(0.5)).collect();
    if finals.is_empty() {
        finals.push(rng.below(n));
    }
    let nfa = Nfa::new(ab, n, [0], finals, transitions).unwrap();
    let trimmed = nfa.trim()?;
    if trimmed.state_count() < 2 {
        return None;
    }
    let order = oracle::exhaustive_wheeler_order(&trimmed, cap).ok()??;
    Some((trimmed, order))
}
