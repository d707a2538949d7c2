//! Brute-force ground truth, deliberately naive.
//!
//! Everything here re-derives its answers from first principles (word
//! enumeration, permutation search, explicit product walks) so that it can
//! cross-validate the real algorithms. The other modules never call into this
//! one outside of test code; this module only touches the carrier types
//! ([`Nfa`], [`Dfa`], [`Word`]) and re-implements its own walks over them.
//!
//! Also hosts the deterministic corpus utilities (seeded RNG, random and
//! exhaustive automaton generators) used throughout the test suites.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::alphabet::{Alphabet, Sym, Word};
use crate::automaton::{Dfa, Nfa, StateId};
use crate::error::{Error, Result};

/// Hard guard on enumeration sizes, independent of the length caps.
const NODE_LIMIT: usize = 1 << 22;

// ---------------------------------------------------------------------------
// deterministic RNG for corpora (SplitMix64: stable across platforms)
// ---------------------------------------------------------------------------

/// Tiny deterministic RNG so that corpora are reproducible everywhere.
#[derive(Debug, Clone)]
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> TestRng {
        TestRng(seed.wrapping_add(0x9e3779b97f4a7c15))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64 % 1.0 < p
    }
}

// ---------------------------------------------------------------------------
// word enumeration
// ---------------------------------------------------------------------------

/// All words over `ab` of length at most `max_len`, shortest first.
pub fn all_words(ab: &Alphabet, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer_start = 0;
    for _ in 0..max_len {
        let layer_end = out.len();
        for i in layer_start..layer_end {
            for a in ab.syms() {
                out.push(out[i].extended(a));
            }
        }
        layer_start = layer_end;
        assert!(out.len() <= NODE_LIMIT, "word enumeration too large");
    }
    out
}

/// One entry of a [`BoundedPrefixSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefEntry {
    pub word: Word,
    /// State the word reaches in the automaton the set was built from.
    pub state: StateId,
    /// Last symbol; `None` encodes `#` for the empty word.
    pub end: Option<Sym>,
}

/// `Pref(L) ∩ Σ^{≤ℓ}`, sorted co-lexicographically and annotated with runs.
#[derive(Debug, Clone)]
pub struct BoundedPrefixSet {
    pub budget: usize,
    pub entries: Vec<PrefEntry>,
}

impl BoundedPrefixSet {
    /// Binary search by word; the set is sorted co-lexicographically.
    pub fn position(&self, w: &Word) -> Option<usize> {
        self.entries.binary_search_by(|e| e.word.cmp(w)).ok()
    }
}

/// Enumerates the readable prefixes of a trimmed DFA up to length `budget`.
pub fn enum_pref(d: &Dfa, budget: usize, len_cap: usize) -> Result<BoundedPrefixSet> {
    if budget > len_cap {
        return Err(Error::CapExceeded { what: "enumeration length", limit: len_cap });
    }
    let mut entries: Vec<PrefEntry> = vec![PrefEntry {
        word: Word::empty(),
        state: d.initial(),
        end: None,
    }];
    let mut layer_start = 0;
    for _ in 0..budget {
        let layer_end = entries.len();
        for i in layer_start..layer_end {
            for a in d.alphabet().syms() {
                // walk the single deterministic edge by hand
                let mut next = None;
                for (u, s, v) in d.transitions() {
                    if u == entries[i].state && s == a {
                        next = Some(v);
                        break;
                    }
                }
                if let Some(v) = next {
                    entries.push(PrefEntry {
                        word: entries[i].word.extended(a),
                        state: v,
                        end: Some(a),
                    });
                }
            }
            if entries.len() > NODE_LIMIT {
                return Err(Error::CapExceeded { what: "enumeration nodes", limit: NODE_LIMIT });
            }
        }
        layer_start = layer_end;
    }
    entries.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(BoundedPrefixSet { budget, entries })
}

/// One block of the bounded convex-refinement scan.
#[derive(Debug, Clone)]
pub struct ClassBlock {
    /// Co-lex least member of the block.
    pub rep: Word,
    /// Shortest member (ties broken co-lexicographically).
    pub short: Word,
    pub state: StateId,
    pub end: Option<Sym>,
    /// Index of the first member in the prefix set.
    pub first: usize,
    pub size: usize,
}

/// Scans the sorted bounded prefix set and splits it into maximal runs of
/// constant (state, last symbol). For a minimal DFA and a large enough budget
/// these blocks are exactly the input-consistent convex-refinement classes;
/// at smaller budgets the scan is bounded-only (it may undercount).
pub fn equiv_c_classes_bounded(d: &Dfa, budget: usize, len_cap: usize) -> Result<Vec<ClassBlock>> {
    let pref = enum_pref(d, budget, len_cap)?;
    let mut blocks: Vec<ClassBlock> = Vec::new();
    for (i, e) in pref.entries.iter().enumerate() {
        match blocks.last_mut() {
            Some(b) if b.state == e.state && b.end == e.end => {
                b.size += 1;
                if e.word.len() < b.short.len() {
                    b.short = e.word.clone();
                }
            }
            _ => blocks.push(ClassBlock {
                rep: e.word.clone(),
                short: e.word.clone(),
                state: e.state,
                end: e.end,
                first: i,
                size: 1,
            }),
        }
    }
    Ok(blocks)
}

// ---------------------------------------------------------------------------
// language comparison (own subset walks)
// ---------------------------------------------------------------------------

fn nfa_step_set(a: &Nfa, set: &BTreeSet<StateId>, sym: Sym) -> BTreeSet<StateId> {
    let mut out = BTreeSet::new();
    for (u, s, v) in a.transitions() {
        if s == sym && set.contains(&u) {
            out.insert(v);
        }
    }
    out
}

fn set_accepts(a: &Nfa, set: &BTreeSet<StateId>) -> bool {
    set.iter().any(|q| a.finals().contains(q))
}

/// Language equality by a joint subset-pair walk. `depth = None` explores the
/// whole (finite) pair space, which is exact; `Some(l)` only compares
/// membership of words of length at most `l`.
pub fn lang_equal(a: &Nfa, b: &Nfa, depth: Option<usize>) -> bool {
    if a.alphabet() != b.alphabet() {
        return false;
    }
    let start = (
        a.initials().iter().copied().collect::<BTreeSet<_>>(),
        b.initials().iter().copied().collect::<BTreeSet<_>>(),
    );
    let mut seen: BTreeSet<(BTreeSet<StateId>, BTreeSet<StateId>)> = BTreeSet::new();
    let mut queue: VecDeque<(BTreeSet<StateId>, BTreeSet<StateId>, usize)> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back((start.0, start.1, 0));
    while let Some((sa, sb, dist)) = queue.pop_front() {
        if set_accepts(a, &sa) != set_accepts(b, &sb) {
            return false;
        }
        if depth.is_some_and(|l| dist >= l) {
            continue;
        }
        for sym in a.alphabet().syms() {
            let na = nfa_step_set(a, &sa, sym);
            let nb = nfa_step_set(b, &sb, sym);
            if seen.insert((na.clone(), nb.clone())) {
                queue.push_back((na, nb, dist + 1));
            }
        }
        assert!(seen.len() <= NODE_LIMIT, "language comparison too large");
    }
    true
}

/// Right-language equality of two states of a DFA (classical Nerode check).
pub fn states_equivalent(d: &Dfa, q: StateId, p: StateId) -> bool {
    let mut seen = BTreeSet::from([(q, p)]);
    let mut queue = VecDeque::from([(q, p)]);
    while let Some((x, y)) = queue.pop_front() {
        if d.is_final(x) != d.is_final(y) {
            return false;
        }
        for a in d.alphabet().syms() {
            let nx = d.step_dfa(x, a);
            let ny = d.step_dfa(y, a);
            match (nx, ny) {
                (None, None) => {}
                (Some(_), None) | (None, Some(_)) => return false,
                (Some(nx), Some(ny)) => {
                    if seen.insert((nx, ny)) {
                        queue.push_back((nx, ny));
                    }
                }
            }
        }
    }
    true
}

/// Exact universality when the subset space stays within `det_cap` subsets;
/// otherwise a sampled verdict over words of length at most `fallback_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniversalityVerdict {
    Exact(bool),
    Sampled(bool),
}

impl UniversalityVerdict {
    pub fn holds(&self) -> bool {
        match *self {
            UniversalityVerdict::Exact(b) | UniversalityVerdict::Sampled(b) => b,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, UniversalityVerdict::Exact(_))
    }
}

pub fn bounded_universality(a: &Nfa, fallback_len: usize, det_cap: usize) -> UniversalityVerdict {
    let start: BTreeSet<StateId> = a.initials().iter().copied().collect();
    let mut seen: BTreeSet<BTreeSet<StateId>> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(set) = queue.pop_front() {
        if !set_accepts(a, &set) {
            return UniversalityVerdict::Exact(false);
        }
        for sym in a.alphabet().syms() {
            let next = nfa_step_set(a, &set, sym);
            if next.is_empty() {
                return UniversalityVerdict::Exact(false);
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        if seen.len() > det_cap {
            // fall back to bounded sampling
            for w in all_words(a.alphabet(), fallback_len) {
                if !a.accepts(&w) {
                    return UniversalityVerdict::Sampled(false);
                }
            }
            return UniversalityVerdict::Sampled(true);
        }
    }
    UniversalityVerdict::Exact(true)
}

// ---------------------------------------------------------------------------
// exhaustive Wheeler order search
// ---------------------------------------------------------------------------

fn wheeler_conditions_hold(a: &Nfa, rank: &[usize]) -> bool {
    let edges: Vec<(StateId, Sym, StateId)> = a.transitions().collect();
    for &(_, a1, v1) in &edges {
        for &(_, a2, v2) in &edges {
            if a1 < a2 && rank[v1] >= rank[v2] {
                return false;
            }
        }
    }
    for &(u1, a1, v1) in &edges {
        for &(u2, a2, v2) in &edges {
            if a1 == a2 && rank[u1] < rank[u2] && rank[v1] > rank[v2] {
                return false;
            }
        }
    }
    true
}

/// Tries every total order with the initial state as minimum, in lexicographic
/// permutation order, against the Wheeler conditions. Returns the first order
/// that passes, as a rank→state vector.
pub fn exhaustive_wheeler_order(a: &Nfa, cap: usize) -> Result<Option<Vec<StateId>>> {
    let n = a.state_count();
    if n > cap {
        return Err(Error::CapExceeded { what: "exhaustive order search", limit: cap });
    }
    if a.initials().len() != 1 {
        return Ok(None);
    }
    let q0 = *a.initials().iter().next().unwrap();
    if a.transitions().any(|(_, _, v)| v == q0) {
        return Ok(None);
    }
    let rest: Vec<StateId> = (0..n).filter(|&q| q != q0).collect();
    let mut perm = rest.clone();
    loop {
        let mut rank = vec![0usize; n];
        for (i, &q) in perm.iter().enumerate() {
            rank[q] = i + 1;
        }
        if wheeler_conditions_hold(a, &rank) {
            let mut order = vec![q0];
            order.extend(&perm);
            return Ok(Some(order));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

fn next_permutation(p: &mut [StateId]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

// ---------------------------------------------------------------------------
// co-lex partial order counterexamples
// ---------------------------------------------------------------------------

/// A pair of words refuting `q <_D p`: `alpha ∈ I_q`, `beta ∈ I_p` with
/// `beta ⪯ alpha`.
#[derive(Debug, Clone)]
pub struct ColexCounterexample {
    pub alpha: Word,
    pub beta: Word,
    /// max(|alpha|, |beta|); the pumping argument bounds this by n²+n.
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Rel {
    Eq,
    Lt,
    Gt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum CxNode {
    /// Walking the head of the longer word; true = alpha is the longer one.
    Head(bool, StateId),
    /// Synchronized walk. `longer`: 0 equal lengths, 1 alpha longer, 2 beta longer.
    Sync(u8, StateId, StateId, Rel),
}

/// Searches for words `alpha ∈ I_q`, `beta ∈ I_p` with `beta ⪯ alpha`, by a
/// forward product walk that aligns the two words at their right ends and
/// tracks the rightmost difference seen. Returns a shortest counterexample.
pub fn colex_counterexample(d: &Dfa, q: StateId, p: StateId) -> Option<ColexCounterexample> {
    if q == p {
        // alpha = beta ∈ I_q refutes reflexive "less"
        return Some(ColexCounterexample { alpha: Word::empty(), beta: Word::empty(), depth: 0 });
    }
    let q0 = d.initial();
    type Parent = (CxNode, Option<Sym>, Option<Sym>);
    let mut parent: BTreeMap<CxNode, Option<Parent>> = BTreeMap::new();
    let mut queue: VecDeque<CxNode> = VecDeque::new();
    let push = |node: CxNode,
                    par: Option<Parent>,
                    parent: &mut BTreeMap<CxNode, Option<Parent>>,
                    queue: &mut VecDeque<CxNode>| {
        if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(node) {
            e.insert(par);
            queue.push_back(node);
        }
    };
    push(CxNode::Sync(0, q0, q0, Rel::Eq), None, &mut parent, &mut queue);
    push(CxNode::Head(true, q0), None, &mut parent, &mut queue);
    push(CxNode::Head(false, q0), None, &mut parent, &mut queue);

    let accepting = |node: &CxNode| match *node {
        CxNode::Sync(longer, x, y, rel) => {
            x == q && y == p && (rel == Rel::Gt || (rel == Rel::Eq && longer == 1))
        }
        CxNode::Head(_, _) => false,
    };

    let mut found: Option<CxNode> = None;
    while let Some(node) = queue.pop_front() {
        if accepting(&node) {
            found = Some(node);
            break;
        }
        match node {
            CxNode::Head(alpha_longer, x) => {
                for a in d.alphabet().syms() {
                    if let Some(x2) = d.step_dfa(x, a) {
                        let (ca, cb) = if alpha_longer { (Some(a), None) } else { (None, Some(a)) };
                        push(CxNode::Head(alpha_longer, x2), Some((node, ca, cb)), &mut parent, &mut queue);
                        // switch to the synchronized phase (consumes nothing)
                        let sync = if alpha_longer {
                            CxNode::Sync(1, x2, q0, Rel::Eq)
                        } else {
                            CxNode::Sync(2, q0, x2, Rel::Eq)
                        };
                        push(sync, Some((CxNode::Head(alpha_longer, x2), None, None)), &mut parent, &mut queue);
                    }
                }
            }
            CxNode::Sync(longer, x, y, rel) => {
                for ca in d.alphabet().syms() {
                    let Some(x2) = d.step_dfa(x, ca) else { continue };
                    for cb in d.alphabet().syms() {
                        let Some(y2) = d.step_dfa(y, cb) else { continue };
                        let rel2 = match ca.cmp(&cb) {
                            std::cmp::Ordering::Equal => rel,
                            std::cmp::Ordering::Less => Rel::Lt,
                            std::cmp::Ordering::Greater => Rel::Gt,
                        };
                        push(
                            CxNode::Sync(longer, x2, y2, rel2),
                            Some((node, Some(ca), Some(cb))),
                            &mut parent,
                            &mut queue,
                        );
                    }
                }
            }
        }
    }

    let end = found?;
    // rebuild both words from the parent chain
    let mut alpha_rev: Vec<Sym> = Vec::new();
    let mut beta_rev: Vec<Sym> = Vec::new();
    let mut cur = end;
    loop {
        match parent.get(&cur).cloned().flatten() {
            None => break,
            Some((prev, ca, cb)) => {
                if let Some(c) = ca {
                    alpha_rev.push(c);
                }
                if let Some(c) = cb {
                    beta_rev.push(c);
                }
                cur = prev;
            }
        }
    }
    alpha_rev.reverse();
    beta_rev.reverse();
    let alpha = Word::from_syms(alpha_rev);
    let beta = Word::from_syms(beta_rev);
    debug_assert!(beta <= alpha);
    let depth = alpha.len().max(beta.len());
    Some(ColexCounterexample { alpha, beta, depth })
}

/// The bounded-search relation itself: `q` strictly below `p` iff no
/// counterexample pair exists.
pub fn colex_less(d: &Dfa, q: StateId, p: StateId) -> bool {
    q != p && colex_counterexample(d, q, p).is_none()
}

// ---------------------------------------------------------------------------
// minimum WDFA from the bounded class scan
// ---------------------------------------------------------------------------

/// Builds the candidate minimum Wheeler DFA directly from the bounded class
/// blocks: one state per block in co-lex order, transitions by running each
/// block representative one symbol further. Exact once the budget has
/// stabilized the blocks (Wheeler inputs only).
pub fn min_wdfa_from_blocks(d: &Dfa, budget: usize, len_cap: usize) -> Result<Dfa> {
    let pref = enum_pref(d, budget, len_cap)?;
    let blocks = equiv_c_classes_bounded(d, budget, len_cap)?;
    // entry index -> block index
    let mut block_of = vec![0usize; pref.entries.len()];
    for (bi, b) in blocks.iter().enumerate() {
        for i in b.first..b.first + b.size {
            block_of[i] = bi;
        }
    }
    let mut transitions = BTreeSet::new();
    for (bi, b) in blocks.iter().enumerate() {
        for a in d.alphabet().syms() {
            // extend the shortest member so the result stays in the bounded set
            let w = b.short.extended(a);
            if w.len() > budget {
                return Err(Error::CapExceeded { what: "block rep extension", limit: budget });
            }
            if let Some(i) = pref.position(&w) {
                transitions.insert((bi, a, block_of[i]));
            }
        }
    }
    let finals: BTreeSet<StateId> = blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| d.is_final(b.state))
        .map(|(i, _)| i)
        .collect();
    let nfa = Nfa::new(
        d.alphabet().clone(),
        blocks.len(),
        [0],
        finals,
        transitions,
    )?;
    Dfa::try_from_nfa(nfa)
}

// ---------------------------------------------------------------------------
// exhaustive search for smaller Wheeler DFAs
// ---------------------------------------------------------------------------

/// Looks for any Wheeler DFA with fewer than `below` states recognizing the
/// same language as `d`. Exhausts all partial DFAs with a fixed initial state
/// 0, so it is only feasible for tiny sizes and two-symbol alphabets.
pub fn smaller_wdfa_exists(d: &Dfa, below: usize, order_cap: usize) -> Result<bool> {
    let sigma = d.alphabet().len();
    if sigma > 2 || below > 5 {
        return Err(Error::CapExceeded { what: "exhaustive WDFA search", limit: 5 });
    }
    for k in 1..below {
        let code_base = k + 1; // destinations 0..k plus "missing"
        let code_count = (code_base as u64).pow((k * sigma) as u32);
        for code in 0..code_count {
            let mut c = code;
            let mut transitions = Vec::new();
            for q in 0..k {
                for a in 0..sigma {
                    let digit = (c % code_base as u64) as usize;
                    c /= code_base as u64;
                    if digit < k {
                        transitions.push((q, a, digit));
                    }
                }
            }
            for fmask in 1u32..(1 << k) {
                let finals: Vec<StateId> =
                    (0..k).filter(|&q| fmask & (1 << q) != 0).collect();
                let Ok(nfa) = Nfa::new(d.alphabet().clone(), k, [0], finals, transitions.clone())
                else {
                    continue;
                };
                let Ok(cand) = Dfa::try_from_nfa(nfa) else { continue };
                if !cand.is_trimmed() {
                    continue;
                }
                // cheap pre-filter before the full equality walk
                if cand.is_final(cand.initial()) != d.is_final(d.initial()) {
                    continue;
                }
                if !lang_equal(cand.as_nfa(), d.as_nfa(), Some(2 * (k + d.state_count()))) {
                    continue;
                }
                if !lang_equal(cand.as_nfa(), d.as_nfa(), None) {
                    continue;
                }
                if exhaustive_wheeler_order(cand.as_nfa(), order_cap)?.is_some() {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

// ---------------------------------------------------------------------------
// corpus generators
// ---------------------------------------------------------------------------

/// Random NFA with up to `max_states` states; state 0 is always initial and
/// further initials are added with small probability. Not necessarily trimmed.
pub fn random_nfa(rng: &mut TestRng, max_states: usize, ab: &Alphabet, edge_p: f64, final_p: f64) -> Nfa {
    let n = 1 + rng.below(max_states);
    let mut transitions = Vec::new();
    for u in 0..n {
        for a in ab.syms() {
            for v in 0..n {
                if rng.chance(edge_p) {
                    transitions.push((u, a, v));
                }
            }
        }
    }
    let mut initials = vec![0];
    for q in 1..n {
        if rng.chance(0.15) {
            initials.push(q);
        }
    }
    let mut finals: Vec<StateId> = (0..n).filter(|_| rng.chance(final_p)).collect();
    if finals.is_empty() {
        finals.push(rng.below(n));
    }
    Nfa::new(ab.clone(), n, initials, finals, transitions).unwrap()
}

/// Random trimmed DFA with up to `max_states` states before trimming.
/// `None` when the language came out empty.
pub fn random_dfa(rng: &mut TestRng, max_states: usize, ab: &Alphabet, edge_p: f64, final_p: f64) -> Option<Dfa> {
    let n = 1 + rng.below(max_states);
    let mut transitions = Vec::new();
    for u in 0..n {
        for a in ab.syms() {
            if rng.chance(edge_p) {
                transitions.push((u, a, rng.below(n)));
            }
        }
    }
    let mut finals: Vec<StateId> = (0..n).filter(|_| rng.chance(final_p)).collect();
    if finals.is_empty() {
        finals.push(rng.below(n));
    }
    let nfa = Nfa::new(ab.clone(), n, [0], finals, transitions).unwrap();
    let trimmed = nfa.trim()?;
    Some(Dfa::try_from_nfa(trimmed).expect("trim preserves determinism"))
}

/// Every trimmed *minimal* DFA with at most `max_n` states over `ab`
/// (initial state fixed, duplicates removed structurally).
pub fn all_trim_minimal_dfas(max_n: usize, ab: &Alphabet) -> Vec<Dfa> {
    let sigma = ab.len();
    let mut out = Vec::new();
    let mut seen: BTreeSet<(usize, Vec<StateId>, Vec<(StateId, Sym, StateId)>)> = BTreeSet::new();
    for n in 1..=max_n {
        let code_base = n + 1;
        let code_count = (code_base as u64).pow((n * sigma) as u32);
        for code in 0..code_count {
            let mut c = code;
            let mut transitions = Vec::new();
            for q in 0..n {
                for a in 0..sigma {
                    let digit = (c % code_base as u64) as usize;
                    c /= code_base as u64;
                    if digit < n {
                        transitions.push((q, a, digit));
                    }
                }
            }
            for fmask in 1u32..(1 << n) {
                let finals: Vec<StateId> = (0..n).filter(|&q| fmask & (1 << q) != 0).collect();
                let nfa =
                    Nfa::new(ab.clone(), n, [0], finals.clone(), transitions.clone()).unwrap();
                let Some(trimmed) = nfa.trim() else { continue };
                if trimmed.state_count() != n {
                    continue;
                }
                let dfa = Dfa::try_from_nfa(trimmed).unwrap();
                if dfa.minimize().state_count() != n {
                    continue;
                }
                let canon = dfa.canonical_dfa();
                let key = (
                    canon.state_count(),
                    canon.finals().iter().copied().collect::<Vec<_>>(),
                    canon.transitions().collect::<Vec<_>>(),
                );
                if seen.insert(key) {
                    out.push(canon);
                }
            }
        }
    }
    out
}
