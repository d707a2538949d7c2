//! Minimum Wheeler DFA construction.
//!
//! Pipeline: from the minimum DFA of a Wheeler language, extract a
//! *fingerprint* (one representative word per state of the minimum Wheeler
//! DFA), then build that automaton directly from the fingerprint. The
//! fingerprint loop keeps a set of co-lex ranges `(m, M)` inside each state's
//! incoming language and splits a range whenever another range's minimum
//! falls strictly inside it; the split points are found with the bounded
//! greatest-smaller / smallest-greater searches below. Also hosts the subset
//! construction for Wheeler NFAs with its size-bound check.

use std::collections::btree_map::Entry as MapEntry;
use std::collections::{BTreeMap, BTreeSet};

use crate::alphabet::{Sym, Word};
use crate::automaton::{Dfa, Nfa, StateId};
use crate::colex::{check_wheeler_conditions, is_wheeler_dfa, length_budget, MinMaxTable, TotalOrder, WheelerCertificate};
use crate::error::{Error, Result};
use crate::lang::{is_wheeler_language_dfa, NonWheelerWitness};

/// Iteration cap for the fingerprint loop: generous w.r.t. the class count of
/// desk-scale Wheeler inputs, so hitting it diagnoses a non-Wheeler input.
pub fn default_iteration_cap(n: usize) -> usize {
    4 * length_budget(n) * n.max(1)
}

// ---------------------------------------------------------------------------
// bounded string search (shared table)
// ---------------------------------------------------------------------------

/// Shared state for the bounded searches: the min/max table at the full
/// `n² + n` budget plus predecessor lists.
pub struct BoundedSearcher<'a> {
    d: &'a Dfa,
    ub: usize,
    table: MinMaxTable,
    preds: Vec<BTreeMap<Sym, BTreeSet<StateId>>>,
}

impl<'a> BoundedSearcher<'a> {
    pub fn new(d: &'a Dfa) -> BoundedSearcher<'a> {
        let ub = length_budget(d.state_count());
        BoundedSearcher { d, ub, table: MinMaxTable::build(d, ub), preds: d.predecessors() }
    }

    pub fn budget(&self) -> usize {
        self.ub
    }

    pub fn table(&self) -> &MinMaxTable {
        &self.table
    }

    fn check_pre(&self, q: StateId, g: &Word) -> Result<()> {
        if q >= self.d.state_count() {
            return Err(Error::invalid("state out of range"));
        }
        if g.len() > self.ub {
            return Err(Error::invalid(format!("query word longer than the {} budget", self.ub)));
        }
        if self.d.run(g) == Some(q) {
            return Err(Error::invalid("query word lies in the incoming language"));
        }
        Ok(())
    }

    /// Backward suffix chain: `S_k` = states from which the length-`k` suffix
    /// of `g` reads to `q`.
    fn backward_sets(&self, q: StateId, g: &Word) -> Vec<BTreeSet<StateId>> {
        let mut sets = vec![BTreeSet::from([q])];
        for k in 0..g.len() {
            let sym = g.syms()[g.len() - 1 - k];
            let prev = &sets[k];
            let mut next = BTreeSet::new();
            for &s in prev {
                if let Some(us) = self.preds[s].get(&sym) {
                    next.extend(us);
                }
            }
            sets.push(next);
            if sets[k + 1].is_empty() {
                break;
            }
        }
        sets
    }

    /// Greatest word of `I_q` strictly below `g`, length at most `n²+n`.
    ///
    /// A word below `g` either shares a suffix with `g` and then diverges
    /// through a strictly smaller incoming label, or is a proper suffix of
    /// `g` itself. Longer shared suffixes always win, so the deepest feasible
    /// position decides.
    pub fn greatest_smaller(&self, q: StateId, g: &Word) -> Result<Option<Word>> {
        self.check_pre(q, g)?;
        let sets = self.backward_sets(q, g);
        let q0 = self.d.initial();
        let mut best: Option<Word> = None;
        for (k, set) in sets.iter().enumerate() {
            if k >= g.len() || set.is_empty() {
                break;
            }
            let next_sym = g.syms()[g.len() - 1 - k];
            let g_suffix = Word::from_syms(g.syms()[g.len() - k..].to_vec());
            // divergence: largest label below next_sym, then greatest lead-in
            let mut cand: Option<Word> = None;
            for &s in set {
                for (&c, us) in self.preds[s].range(..next_sym) {
                    for &u in us {
                        if let Some(lead) = self.table.max_word(u, self.ub - k - 1) {
                            let w = lead.extended(c).concat(&g_suffix);
                            if cand.as_ref().is_none_or(|b| w > *b) {
                                cand = Some(w);
                            }
                        }
                    }
                }
            }
            if cand.is_none() && set.contains(&q0) {
                // the suffix itself enters q
                cand = Some(g_suffix);
            }
            if cand.is_some() {
                best = cand; // deeper k dominates every earlier candidate
            }
        }
        Ok(best)
    }

    /// Smallest word of `I_q` strictly above `g`, length at most `n²+n`.
    ///
    /// Split into: (1) words diverging above `g` at some shared suffix
    /// (deepest divergence wins, smallest label and lead-in there), and
    /// (2) words with `g` as a proper suffix (always below any divergence,
    /// when they exist).
    pub fn smallest_greater(&self, q: StateId, g: &Word) -> Result<Option<Word>> {
        self.check_pre(q, g)?;
        let sets = self.backward_sets(q, g);
        let mut best: Option<Word> = None;
        for (k, set) in sets.iter().enumerate() {
            if k >= g.len() || set.is_empty() {
                break;
            }
            let next_sym = g.syms()[g.len() - 1 - k];
            let g_suffix = Word::from_syms(g.syms()[g.len() - k..].to_vec());
            let mut cand: Option<Word> = None;
            for &s in set {
                for (&c, us) in self.preds[s].range(next_sym + 1..) {
                    for &u in us {
                        if let Some(lead) = self.table.min_word(u, self.ub - k - 1) {
                            let w = lead.extended(c).concat(&g_suffix);
                            if cand.as_ref().is_none_or(|b| w < *b) {
                                cand = Some(w);
                            }
                        }
                    }
                }
            }
            if cand.is_some() {
                best = cand;
            }
        }
        // sub-problem 2: smallest word with g as suffix
        if let Some(full) = sets.get(g.len()) {
            let mut lead_best: Option<&Word> = None;
            for &u in full {
                if let Some(lead) = self.table.min_word(u, self.ub - g.len()) {
                    if lead_best.is_none_or(|b| lead < b) {
                        lead_best = Some(lead);
                    }
                }
            }
            if let Some(lead) = lead_best {
                let w = lead.concat(g);
                if best.as_ref().is_none_or(|b| w < *b) {
                    best = Some(w);
                }
            }
        }
        Ok(best)
    }
}

/// One-shot wrappers building the table per call.
pub fn greatest_smaller(d: &Dfa, q: StateId, g: &Word) -> Result<Option<Word>> {
    BoundedSearcher::new(d).greatest_smaller(q, g)
}

pub fn smallest_greater(d: &Dfa, q: StateId, g: &Word) -> Result<Option<Word>> {
    BoundedSearcher::new(d).smallest_greater(q, g)
}

// ---------------------------------------------------------------------------
// pair sets and the fingerprint loop
// ---------------------------------------------------------------------------

/// A co-lex range `(min, max)` inside the incoming language of `state`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pair {
    pub min: Word,
    pub max: Word,
    pub state: StateId,
}

/// The working set of Algorithm-style range pairs, keyed by first component.
#[derive(Debug, Clone, Default)]
pub struct PairSet {
    pairs: BTreeMap<Word, (Word, StateId)>,
}

impl PairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        self.pairs
            .iter()
            .map(|(m, (mx, st))| Pair { min: m.clone(), max: mx.clone(), state: *st })
    }

    fn insert(&mut self, p: Pair) {
        match self.pairs.entry(p.min) {
            MapEntry::Vacant(e) => {
                e.insert((p.max, p.state));
            }
            MapEntry::Occupied(mut e) => {
                // only during Expand: (m, m) may meet an identical insertion
                debug_assert_eq!(e.get().1, p.state, "distinct pairs may not share a component");
                if p.max > e.get().0 {
                    e.insert((p.max, p.state));
                }
            }
        }
    }

    /// Least pair `(m, M)` such that some other pair's minimum `m'` lies
    /// strictly between `m` and `M`; returns `(m, m')`.
    fn find_overlap(&self) -> Option<(Word, Word)> {
        use std::ops::Bound::Excluded;
        for (m, (mx, _)) in &self.pairs {
            if m == mx {
                continue; // a collapsed range cannot straddle anything
            }
            if let Some((mprime, _)) =
                self.pairs.range((Excluded(m.clone()), Excluded(mx.clone()))).next()
            {
                return Some((m.clone(), mprime.clone()));
            }
        }
        None
    }

    fn assert_invariants(&self) {
        if cfg!(debug_assertions) {
            let mut prev: Option<Pair> = None;
            let mut seen: BTreeSet<Word> = BTreeSet::new();
            for p in self.iter() {
                assert!(p.min <= p.max, "range inverted");
                assert!(seen.insert(p.min.clone()), "shared component");
                if p.min != p.max {
                    assert!(seen.insert(p.max.clone()), "shared component");
                }
                if let Some(q) = &prev {
                    if q.state == p.state {
                        assert!(q.max < p.min, "same-state pairs must be ordered");
                    }
                }
                prev = Some(p);
            }
        }
    }
}

/// One range per state: the co-lex least and greatest word of its incoming
/// language within the `n² + n` budget.
pub fn min_max_pairs(d: &Dfa) -> PairSet {
    let searcher = BoundedSearcher::new(d);
    min_max_pairs_with(&searcher)
}

fn min_max_pairs_with(searcher: &BoundedSearcher<'_>) -> PairSet {
    let d = searcher.d;
    let ub = searcher.ub;
    let mut set = PairSet::default();
    for q in 0..d.state_count() {
        let min = searcher.table.min_word(q, ub).expect("trimmed state").clone();
        let max = searcher.table.max_word(q, ub).expect("trimmed state").clone();
        set.insert(Pair { min, max, state: q });
    }
    set
}

/// A fingerprint: exactly one representative word per minimum-Wheeler-DFA
/// state, co-lex sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub reps: Vec<Word>,
}

/// Runs the range-splitting loop on the minimum DFA until no range contains
/// another's minimum, then expands the surviving ranges into one
/// representative per class. The cap turns an endless loop (non-Wheeler
/// input) into an explicit error naming the offending ranges.
///
/// The raw loop output may pick range endpoints as long as the table budget;
/// the final representatives are re-derived as the shortest word reaching
/// each class (shortest members always fit below `n + n²`).
pub fn fingerprint(d: &Dfa, iteration_cap: usize) -> Result<Fingerprint> {
    let searcher = BoundedSearcher::new(d);
    let mut pairs = min_max_pairs_with(&searcher);
    let mut iterations = 0usize;
    while let Some((m, mprime)) = pairs.find_overlap() {
        iterations += 1;
        if iterations > iteration_cap {
            return Err(Error::FingerprintCap {
                cap: iteration_cap,
                detail: format!("range at {m} straddles the minimum {mprime}"),
            });
        }
        let (mx, state) = pairs.pairs.get(&m).cloned().expect("overlap pair present");
        debug_assert_ne!(d.run(&mprime), Some(state), "overlapping ranges share a state");
        let upper = searcher
            .greatest_smaller(state, &mprime)?
            .ok_or_else(|| Error::invalid("range minimum has nothing below the split point"))?;
        let lower = searcher
            .smallest_greater(state, &mprime)?
            .ok_or_else(|| Error::invalid("range maximum has nothing above the split point"))?;
        pairs.pairs.remove(&m);
        pairs.insert(Pair { min: m, max: upper, state });
        pairs.insert(Pair { min: lower, max: mx, state });
        pairs.assert_invariants();
    }
    let expanded = expand_with(&searcher, &pairs);
    let raw = Fingerprint { reps: expanded.pairs.keys().cloned().collect() };
    // classes are the states of the automaton the raw fingerprint induces;
    // swap every representative for the shortest member of its class
    let (wdfa, _) = fingerprint_to_min_wdfa(d, &raw)?;
    let reps = shortest_incoming_words(&wdfa);
    debug_assert!(reps.windows(2).all(|w| w[0] < w[1]));
    debug_assert!({
        let n = d.state_count();
        reps.iter().all(|r| r.len() < n + n * n)
    });
    Ok(Fingerprint { reps })
}

/// Per state, the shortest word reaching it (ties broken left-to-right by
/// symbol order), listed in state order.
fn shortest_incoming_words(d: &Dfa) -> Vec<Word> {
    let mut words: Vec<Option<Word>> = vec![None; d.state_count()];
    words[d.initial()] = Some(Word::empty());
    let mut queue = std::collections::VecDeque::from([d.initial()]);
    while let Some(q) = queue.pop_front() {
        for a in d.alphabet().syms() {
            if let Some(v) = d.step_dfa(q, a) {
                if words[v].is_none() {
                    words[v] = Some(words[q].as_ref().unwrap().extended(a));
                    queue.push_back(v);
                }
            }
        }
    }
    words.into_iter().map(|w| w.expect("trimmed: all states reachable")).collect()
}

/// The final expansion: a surviving range whose endpoints end with different
/// symbols hides exactly one extra class per strictly-between end symbol;
/// fetch a representative through the state's incoming edges and split the
/// range into its two endpoint classes.
pub fn expand(pairs: &PairSet, d: &Dfa) -> PairSet {
    let searcher = BoundedSearcher::new(d);
    expand_with(&searcher, pairs)
}

fn expand_with(searcher: &BoundedSearcher<'_>, pairs: &PairSet) -> PairSet {
    let d = searcher.d;
    let mut out = PairSet::default();
    for p in pairs.iter() {
        let end_min = p.min.last();
        let end_max = p.max.last();
        if end_min == end_max {
            out.insert(p);
            continue;
        }
        // every symbol strictly between the endpoint labels (with # below all)
        for c in d.alphabet().syms() {
            if end_min.is_some_and(|e| c <= e) {
                continue;
            }
            if end_max.is_some_and(|e| c >= e) {
                continue;
            }
            let Some(us) = searcher.preds[p.state].get(&c) else { continue };
            let lead = us
                .iter()
                .filter_map(|&u| searcher.table.min_word(u, searcher.ub - 1))
                .min();
            if let Some(lead) = lead {
                let rep = lead.extended(c);
                out.insert(Pair { min: rep.clone(), max: rep, state: p.state });
            }
        }
        out.insert(Pair { min: p.min.clone(), max: p.min.clone(), state: p.state });
        out.insert(Pair { min: p.max.clone(), max: p.max.clone(), state: p.state });
    }
    out
}

// ---------------------------------------------------------------------------
// fingerprint -> minimum WDFA
// ---------------------------------------------------------------------------

/// Builds the minimum Wheeler DFA from a fingerprint of the language of the
/// minimum DFA `d`. States are the representatives in co-lex order (so the
/// returned order is the identity); each transition target is resolved by a
/// binary search among the representatives, disambiguated by Nerode class
/// and, within a class, by the end symbol.
pub fn fingerprint_to_min_wdfa(d: &Dfa, f: &Fingerprint) -> Result<(Dfa, TotalOrder)> {
    let m = f.reps.len();
    if m == 0 {
        return Err(Error::invalid("empty fingerprint"));
    }
    if !f.reps[0].is_empty() {
        return Err(Error::invalid("fingerprint must contain the empty word"));
    }
    for w in f.reps.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::invalid("fingerprint must be strictly co-lex sorted"));
        }
    }
    let mut rep_state = Vec::with_capacity(m);
    for rep in &f.reps {
        let q = d
            .run(rep)
            .ok_or_else(|| Error::invalid("fingerprint word is not a readable prefix"))?;
        rep_state.push(q);
    }
    let mut transitions = BTreeSet::new();
    for (j, rep) in f.reps.iter().enumerate() {
        for c in d.alphabet().syms() {
            let Some(target_state) = d.step_dfa(rep_state[j], c) else { continue };
            let w = rep.extended(c);
            let pos = f.reps.partition_point(|r| *r < w);
            let target = if pos < m && f.reps[pos] == w {
                pos
            } else if pos == 0 {
                0
            } else if pos == m {
                m - 1
            } else {
                let s = pos - 1;
                let left = rep_state[s] == target_state;
                let right = rep_state[pos] == target_state;
                match (left, right) {
                    (true, false) => s,
                    (false, true) => pos,
                    (true, true) => {
                        if f.reps[s].last() == Some(c) {
                            s
                        } else if f.reps[pos].last() == Some(c) {
                            pos
                        } else {
                            return Err(Error::invalid(
                                "malformed fingerprint: extension class unrepresented",
                            ));
                        }
                    }
                    (false, false) => {
                        return Err(Error::invalid(
                            "malformed fingerprint: extension falls between foreign classes",
                        ))
                    }
                }
            };
            transitions.insert((j, c, target));
        }
    }
    let finals: Vec<StateId> = (0..m).filter(|&j| d.is_final(rep_state[j])).collect();
    let wdfa = Dfa::new(d.alphabet().clone(), m, 0, finals, transitions)?;
    let order = TotalOrder::identity(m);
    check_wheeler_conditions(wdfa.as_nfa(), &order)
        .map_err(|v| Error::invalid(format!("fingerprint induced a non-Wheeler automaton: {v}")))?;
    if !wdfa.lang_equal(d) {
        return Err(Error::invalid("fingerprint automaton changed the language"));
    }
    Ok((wdfa, order))
}

/// Result of the full minimum-WDFA pipeline.
#[derive(Debug, Clone)]
pub struct MinWdfa {
    pub wdfa: Dfa,
    pub order: TotalOrder,
    /// The minimum DFA the construction ran on.
    pub min_dfa: Dfa,
    pub fingerprint: Fingerprint,
}

/// Minimum Wheeler DFA of the language of `d`: verifies Wheelerness first
/// (erroring with the witness otherwise), then minimizes, fingerprints and
/// rebuilds. Unique up to isomorphism; states come out numbered by the order.
pub fn min_wdfa(d: &Dfa) -> Result<MinWdfa> {
    let verdict = is_wheeler_language_dfa(d);
    if let Some(w) = verdict.witness {
        return Err(Error::NotWheeler(Box::new(w)));
    }
    let min = verdict.min_dfa;
    let f = fingerprint(&min, default_iteration_cap(min.state_count()))?;
    let (wdfa, order) = fingerprint_to_min_wdfa(&min, &f)?;
    Ok(MinWdfa { wdfa, order, min_dfa: min, fingerprint: f })
}

// ---------------------------------------------------------------------------
// Wheeler NFA determinization
// ---------------------------------------------------------------------------

/// Subset construction for a Wheeler NFA with a verified order. Checks the
/// structural consequences as it goes: reached subsets must be intervals of
/// the order and the result must fit in `2n - 1 - |Σ_eff|` states and be
/// Wheeler; any failure falsifies the supplied order.
pub fn determinize_wnfa(a: &Nfa, order: &TotalOrder, det_cap: usize) -> Result<(Dfa, TotalOrder)> {
    check_wheeler_conditions(a, order)
        .map_err(|v| Error::invalid(format!("input order is not a Wheeler order: {v}")))?;
    let det = a.determinize(det_cap)?;
    for subset in &det.members {
        let mut ranks: Vec<usize> = subset.iter().map(|&q| order.rank(q)).collect();
        ranks.sort_unstable();
        if !ranks.is_empty() && ranks[ranks.len() - 1] - ranks[0] + 1 != ranks.len() {
            return Err(Error::invalid(
                "reached subset is not an order interval; the input order is falsified",
            ));
        }
    }
    let n = a.state_count();
    let sigma_eff = a.occurring_symbols().len();
    let bound = (2 * n).saturating_sub(1 + sigma_eff);
    if det.dfa.state_count() > bound {
        return Err(Error::invalid(format!(
            "determinization produced {} states, above the Wheeler bound {bound}",
            det.dfa.state_count()
        )));
    }
    match is_wheeler_dfa(&det.dfa) {
        WheelerCertificate::Wheeler(o) => {
            let wdfa = renumber_by_order(&det.dfa, &o);
            let m = wdfa.state_count();
            Ok((wdfa, TotalOrder::identity(m)))
        }
        WheelerCertificate::NotWheeler(v) => Err(Error::invalid(format!(
            "determinization is not Wheeler ({v}); the input order is falsified"
        ))),
    }
}

/// Renumbers a DFA so that state ids coincide with the ranks of the given
/// order (the canonical form for Wheeler DFAs, whose order is unique).
pub fn renumber_by_order(d: &Dfa, order: &TotalOrder) -> Dfa {
    let transitions: Vec<(StateId, Sym, StateId)> = d
        .transitions()
        .map(|(u, s, v)| (order.rank(u), s, order.rank(v)))
        .collect();
    let finals: Vec<StateId> = d.finals().iter().map(|&q| order.rank(q)).collect();
    Dfa::new(
        d.alphabet().clone(),
        d.state_count(),
        order.rank(d.initial()),
        finals,
        transitions,
    )
    .expect("renumbering preserves determinism")
}

/// Convenience wrapper carrying the non-Wheeler witness out of [`min_wdfa`]
/// errors, for callers that want to branch on it.
pub fn min_wdfa_or_witness(d: &Dfa) -> std::result::Result<MinWdfa, Box<NonWheelerWitness>> {
    match min_wdfa(d) {
        Ok(r) => Ok(r),
        Err(Error::NotWheeler(w)) => Err(w),
        Err(e) => panic!("unexpected error in min_wdfa: {e}"),
    }
}
