//! Co-lex comparison lifted to states: bounded min/max incoming words, the
//! partial order `<_D` on DFA states, Wheeler-order computation and checking,
//! and the (exponential, desk-scale) exhaustive order search for NFAs.
//!
//! Conventions. An automaton is Wheeler w.r.t. a total state order when the
//! initial state is the minimum and has no incoming edges, edges labeled with
//! a smaller symbol always enter strictly smaller states, and equally labeled
//! edges propagate the order. All checks here are *raw*: they judge the
//! automaton as given and do not normalize its start state behind the
//! caller's back. Only [`colex_partial_order_dfa`] applies the documented
//! input-consistency normalization, because the order `<_D` needs the
//! labelling `λ` (with `λ(q0) = #`) to be well defined.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};

use crate::alphabet::{Sym, Word};
use crate::automaton::{Dfa, Nfa, StateId, Trans};
use crate::error::{Error, Result};

/// Co-lexicographic comparison (thin wrapper over the `Ord` of [`Word`]).
pub fn colex_cmp(x: &Word, y: &Word) -> Ordering {
    x.cmp(y)
}

// ---------------------------------------------------------------------------
// bounded min/max incoming words
// ---------------------------------------------------------------------------

/// Per state and per length budget `j`, the co-lex smallest and greatest word
/// of `I_q` of length at most `j`. Extended one symbol at a time: the
/// incoming symbol dominates the comparison, the predecessor entry breaks
/// ties, which is exactly co-lex comparison of the extended words.
#[derive(Debug, Clone)]
pub struct MinMaxTable {
    budget: usize,
    min: Vec<Vec<Option<Word>>>,
    max: Vec<Vec<Option<Word>>>,
}

impl MinMaxTable {
    pub fn build(d: &Dfa, budget: usize) -> MinMaxTable {
        let n = d.state_count();
        let preds = d.predecessors();
        let mut min: Vec<Vec<Option<Word>>> = vec![Vec::with_capacity(budget + 1); n];
        let mut max: Vec<Vec<Option<Word>>> = vec![Vec::with_capacity(budget + 1); n];
        for q in 0..n {
            let init = (q == d.initial()).then(Word::empty);
            min[q].push(init.clone());
            max[q].push(init);
        }
        for j in 1..=budget {
            for q in 0..n {
                let mut best_min = min[q][j - 1].clone();
                let mut best_max = max[q][j - 1].clone();
                for (&a, us) in &preds[q] {
                    for &u in us {
                        if let Some(w) = &min[u][j - 1] {
                            let cand = w.extended(a);
                            if best_min.as_ref().is_none_or(|b| cand < *b) {
                                best_min = Some(cand);
                            }
                        }
                        if let Some(w) = &max[u][j - 1] {
                            let cand = w.extended(a);
                            if best_max.as_ref().is_none_or(|b| cand > *b) {
                                best_max = Some(cand);
                            }
                        }
                    }
                }
                min[q].push(best_min);
                max[q].push(best_max);
            }
        }
        MinMaxTable { budget, min, max }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Smallest word of `I_q` with length at most `j`.
    pub fn min_word(&self, q: StateId, j: usize) -> Option<&Word> {
        self.min[q][j.min(self.budget)].as_ref()
    }

    /// Greatest word of `I_q` with length at most `j`.
    pub fn max_word(&self, q: StateId, j: usize) -> Option<&Word> {
        self.max[q][j.min(self.budget)].as_ref()
    }
}

/// The standard budget `n² + n` under which every bounded search here is
/// complete.
pub fn length_budget(n: usize) -> usize {
    n * n + n
}

// ---------------------------------------------------------------------------
// state orders
// ---------------------------------------------------------------------------

/// A strict partial order on states as a boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrder {
    n: usize,
    less: Vec<bool>,
}

impl PartialOrder {
    pub fn new(n: usize) -> PartialOrder {
        PartialOrder { n, less: vec![false; n * n] }
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn less(&self, q: StateId, p: StateId) -> bool {
        self.less[q * self.n + p]
    }

    pub fn set(&mut self, q: StateId, p: StateId, v: bool) {
        self.less[q * self.n + p] = v;
    }

    pub fn comparable(&self, q: StateId, p: StateId) -> bool {
        q == p || self.less(q, p) || self.less(p, q)
    }

    pub fn is_total(&self) -> bool {
        (0..self.n).all(|q| (0..self.n).all(|p| self.comparable(q, p)))
    }

    /// The total order refinining the matrix, when it is already total.
    pub fn to_total(&self) -> Option<TotalOrder> {
        if !self.is_total() {
            return None;
        }
        let mut states: Vec<StateId> = (0..self.n).collect();
        states.sort_by(|&q, &p| {
            if self.less(q, p) {
                Ordering::Less
            } else if self.less(p, q) {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        });
        Some(TotalOrder::from_rank_to_state(states).expect("permutation"))
    }

    /// All ordered pairs currently in the relation.
    pub fn pairs(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        (0..self.n).flat_map(move |q| (0..self.n).filter(move |&p| self.less(q, p)).map(move |p| (q, p)))
    }
}

/// A total order given as a permutation of the states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalOrder {
    rank_to_state: Vec<StateId>,
    state_to_rank: Vec<usize>,
}

impl TotalOrder {
    pub fn from_rank_to_state(rank_to_state: Vec<StateId>) -> Result<TotalOrder> {
        let n = rank_to_state.len();
        let mut state_to_rank = vec![usize::MAX; n];
        for (r, &q) in rank_to_state.iter().enumerate() {
            if q >= n || state_to_rank[q] != usize::MAX {
                return Err(Error::invalid("order is not a permutation"));
            }
            state_to_rank[q] = r;
        }
        Ok(TotalOrder { rank_to_state, state_to_rank })
    }

    pub fn identity(n: usize) -> TotalOrder {
        TotalOrder { rank_to_state: (0..n).collect(), state_to_rank: (0..n).collect() }
    }

    pub fn state_count(&self) -> usize {
        self.rank_to_state.len()
    }

    pub fn rank(&self, q: StateId) -> usize {
        self.state_to_rank[q]
    }

    pub fn state_at(&self, rank: usize) -> StateId {
        self.rank_to_state[rank]
    }

    pub fn rank_to_state(&self) -> &[StateId] {
        &self.rank_to_state
    }
}

/// Either kind of state order.
#[derive(Debug, Clone)]
pub enum StateOrder {
    Partial(PartialOrder),
    Total(TotalOrder),
}

// ---------------------------------------------------------------------------
// Wheeler condition checking
// ---------------------------------------------------------------------------

/// Why an automaton (with a given order) is not Wheeler. Violations cite the
/// concrete transitions so they can be replayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WheelerViolation {
    NotSingleInitial,
    InitialHasIncoming { trans: Trans },
    InitialNotMinimum,
    /// Smaller label enters a state not strictly below: `a1 ≺ a2` yet
    /// `v1 ≥ v2`. With `v1 = v2` this is an input-consistency failure.
    ConditionI { t1: Trans, t2: Trans },
    /// Equal labels, ordered sources, inverted targets.
    ConditionII { t1: Trans, t2: Trans },
    /// Exhaustive search tried every admissible order.
    NoValidOrder { orders_tried: usize },
}

impl std::fmt::Display for WheelerViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WheelerViolation::NotSingleInitial => write!(f, "automaton has more than one initial state"),
            WheelerViolation::InitialHasIncoming { trans } => {
                write!(f, "initial state has incoming edge ({},{},{})", trans.0, trans.1, trans.2)
            }
            WheelerViolation::InitialNotMinimum => write!(f, "initial state is not the order minimum"),
            WheelerViolation::ConditionI { t1, t2 } => write!(
                f,
                "label monotonicity fails on ({},{},{}) vs ({},{},{})",
                t1.0, t1.1, t1.2, t2.0, t2.1, t2.2
            ),
            WheelerViolation::ConditionII { t1, t2 } => write!(
                f,
                "order propagation fails on ({},{},{}) vs ({},{},{})",
                t1.0, t1.1, t1.2, t2.0, t2.1, t2.2
            ),
            WheelerViolation::NoValidOrder { orders_tried } => {
                write!(f, "no valid order among {orders_tried} candidates")
            }
        }
    }
}

/// Verdict of a Wheeler-order computation: the order, or a replayable reason.
#[derive(Debug, Clone)]
pub enum WheelerCertificate {
    Wheeler(TotalOrder),
    NotWheeler(WheelerViolation),
}

impl WheelerCertificate {
    pub fn is_wheeler(&self) -> bool {
        matches!(self, WheelerCertificate::Wheeler(_))
    }

    pub fn order(&self) -> Option<&TotalOrder> {
        match self {
            WheelerCertificate::Wheeler(o) => Some(o),
            WheelerCertificate::NotWheeler(_) => None,
        }
    }
}

/// Checks the two Wheeler conditions plus the initial-state requirements for
/// an explicit total order.
pub fn check_wheeler_conditions(a: &Nfa, order: &TotalOrder) -> std::result::Result<(), WheelerViolation> {
    if a.initials().len() != 1 {
        return Err(WheelerViolation::NotSingleInitial);
    }
    let q0 = *a.initials().iter().next().unwrap();
    if let Some(t) = a.transitions().find(|&(_, _, v)| v == q0) {
        return Err(WheelerViolation::InitialHasIncoming { trans: t });
    }
    if order.rank(q0) != 0 {
        return Err(WheelerViolation::InitialNotMinimum);
    }
    let edges: Vec<Trans> = a.transitions().collect();
    // (i) a1 ≺ a2 → v1 < v2
    for &(u1, a1, v1) in &edges {
        for &(u2, a2, v2) in &edges {
            if a1 < a2 && order.rank(v1) >= order.rank(v2) {
                return Err(WheelerViolation::ConditionI { t1: (u1, a1, v1), t2: (u2, a2, v2) });
            }
        }
    }
    // (ii) a1 = a2 ∧ u1 < u2 → v1 ≤ v2
    for &(u1, a1, v1) in &edges {
        for &(u2, a2, v2) in &edges {
            if a1 == a2 && order.rank(u1) < order.rank(u2) && order.rank(v1) > order.rank(v2) {
                return Err(WheelerViolation::ConditionII { t1: (u1, a1, v1), t2: (u2, a2, v2) });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// <_D on DFAs: greatest fixpoint over state pairs
// ---------------------------------------------------------------------------

/// Result of [`colex_partial_order_dfa`]: the order lives on `dfa`, which is
/// the input after the documented input-consistency normalization (a no-op,
/// up to renumbering, when the input is already strictly input-consistent).
#[derive(Debug, Clone)]
pub struct ColexDfaOrder {
    pub dfa: Dfa,
    pub labels: Vec<Option<Sym>>,
    pub order: PartialOrder,
}

impl ColexDfaOrder {
    pub fn total(&self) -> Option<TotalOrder> {
        self.order.to_total()
    }
}

/// Computes the exact order `<_D` (`q < p` iff every word into `q` co-lex
/// precedes every word into `p`) by a greatest fixpoint: start from all pairs
/// admissible by their incoming labels and delete an equal-label pair as soon
/// as some same-symbol predecessor pair has already been deleted.
pub fn colex_partial_order_dfa(d: &Dfa) -> ColexDfaOrder {
    assert!(d.is_trimmed(), "colex_partial_order_dfa expects a trimmed DFA");
    let (dfa, labels) = if d.is_input_consistent() {
        let l = d.label_fn().expect("strictly input-consistent");
        (d.clone(), l)
    } else {
        d.make_input_consistent_dfa()
    };
    let n = dfa.state_count();
    let preds = dfa.predecessors();
    let mut order = PartialOrder::new(n);
    for q in 0..n {
        for p in 0..n {
            if q != p && labels[q] <= labels[p] {
                order.set(q, p, true);
            }
        }
    }
    loop {
        let mut changed = false;
        for q in 0..n {
            for p in 0..n {
                if q == p || !order.less(q, p) || labels[q] != labels[p] {
                    continue;
                }
                let c = labels[q].expect("two distinct initial states cannot share label #");
                let pq = &preds[q][&c];
                let pp = &preds[p][&c];
                let ok = pq.iter().all(|&u| pp.iter().all(|&v| order.less(u, v)));
                if !ok {
                    order.set(q, p, false);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(
        (0..n).all(|q| (0..n).all(|p| !(order.less(q, p) && order.less(p, q)))),
        "fixpoint produced a non-antisymmetric relation"
    );
    ColexDfaOrder { dfa, labels, order }
}

// ---------------------------------------------------------------------------
// Wheeler order of a DFA
// ---------------------------------------------------------------------------

/// Decides whether the DFA, exactly as given, is Wheeler: sorts the states by
/// the co-lex least word entering each (distinct across states since the
/// incoming languages of a DFA are disjoint) and validates the resulting
/// candidate order against the Wheeler conditions.
pub fn is_wheeler_dfa(d: &Dfa) -> WheelerCertificate {
    assert!(d.is_trimmed(), "is_wheeler_dfa expects a trimmed DFA");
    let q0 = d.initial();
    if let Some(t) = d.transitions().find(|&(_, _, v)| v == q0) {
        return WheelerCertificate::NotWheeler(WheelerViolation::InitialHasIncoming { trans: t });
    }
    // input-consistency is implied by condition (i); report its failure as one
    let labels = d.incoming_labels();
    for q in 0..d.state_count() {
        if labels[q].len() > 1 {
            let mut it = labels[q].iter();
            let (a1, a2) = (*it.next().unwrap(), *it.next().unwrap());
            let t1 = d.transitions().find(|&(_, a, v)| v == q && a == a1).unwrap();
            let t2 = d.transitions().find(|&(_, a, v)| v == q && a == a2).unwrap();
            return WheelerCertificate::NotWheeler(WheelerViolation::ConditionI { t1, t2 });
        }
    }
    let n = d.state_count();
    let table = MinMaxTable::build(d, n.saturating_sub(1));
    let mut states: Vec<StateId> = (0..n).collect();
    states.sort_by(|&q, &p| {
        let wq = table.min_word(q, n - 1).expect("trimmed: every state reachable");
        let wp = table.min_word(p, n - 1).expect("trimmed: every state reachable");
        wq.cmp(wp)
    });
    let order = TotalOrder::from_rank_to_state(states).expect("permutation");
    match check_wheeler_conditions(d.as_nfa(), &order) {
        Ok(()) => WheelerCertificate::Wheeler(order),
        Err(v) => WheelerCertificate::NotWheeler(v),
    }
}

// ---------------------------------------------------------------------------
// exhaustive Wheeler order search for NFAs (desk scale)
// ---------------------------------------------------------------------------

/// Default state-count cap for the exhaustive NFA search.
pub const NFA_BRUTEFORCE_CAP: usize = 9;

/// Exhaustively searches for a Wheeler order of an NFA. Orders are generated
/// with the initial state fixed as minimum and the remaining states grouped
/// by incoming label (anything else already violates condition (i)), so only
/// condition (ii) needs checking per candidate.
pub fn is_wheeler_nfa_bruteforce(a: &Nfa, cap: usize) -> Result<WheelerCertificate> {
    if a.state_count() > cap {
        return Err(Error::CapExceeded { what: "exhaustive Wheeler search", limit: cap });
    }
    if a.initials().len() != 1 {
        return Ok(WheelerCertificate::NotWheeler(WheelerViolation::NotSingleInitial));
    }
    let q0 = *a.initials().iter().next().unwrap();
    if let Some(t) = a.transitions().find(|&(_, _, v)| v == q0) {
        return Ok(WheelerCertificate::NotWheeler(WheelerViolation::InitialHasIncoming { trans: t }));
    }
    let labels = a.incoming_labels();
    for q in 0..a.state_count() {
        if labels[q].len() > 1 {
            let mut it = labels[q].iter();
            let (a1, a2) = (*it.next().unwrap(), *it.next().unwrap());
            let t1 = a.transitions().find(|&(_, s, v)| v == q && s == a1).unwrap();
            let t2 = a.transitions().find(|&(_, s, v)| v == q && s == a2).unwrap();
            return Ok(WheelerCertificate::NotWheeler(WheelerViolation::ConditionI { t1, t2 }));
        }
    }
    // group non-initial states into blocks by incoming label, in symbol order
    let mut blocks: Vec<Vec<StateId>> = Vec::new();
    for sym in a.alphabet().syms() {
        let block: Vec<StateId> = (0..a.state_count())
            .filter(|&q| q != q0 && labels[q].iter().next() == Some(&sym))
            .collect();
        if !block.is_empty() {
            blocks.push(block);
        }
    }
    let mut tried = 0usize;
    loop {
        tried += 1;
        let mut rank_to_state = vec![q0];
        for b in &blocks {
            rank_to_state.extend(b);
        }
        let order = TotalOrder::from_rank_to_state(rank_to_state).expect("permutation");
        if condition_two_holds(a, &order) {
            return Ok(WheelerCertificate::Wheeler(order));
        }
        // odometer over per-block permutations
        let mut advanced = false;
        for i in (0..blocks.len()).rev() {
            if next_permutation(&mut blocks[i]) {
                advanced = true;
                break;
            }
            blocks[i].sort_unstable();
        }
        if !advanced {
            return Ok(WheelerCertificate::NotWheeler(WheelerViolation::NoValidOrder {
                orders_tried: tried,
            }));
        }
    }
}

fn condition_two_holds(a: &Nfa, order: &TotalOrder) -> bool {
    let edges: Vec<Trans> = a.transitions().collect();
    for &(u1, a1, v1) in &edges {
        for &(u2, a2, v2) in &edges {
            if a1 == a2 && order.rank(u1) < order.rank(u2) && order.rank(v1) > order.rank(v2) {
                return false;
            }
        }
    }
    true
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
// path coherence
// ---------------------------------------------------------------------------

/// A sampled path-coherence failure: the states reached from an order
/// interval stopped being an interval.
#[derive(Debug, Clone)]
pub struct PathCoherenceViolation {
    pub lo_rank: usize,
    pub hi_rank: usize,
    pub word: Word,
    pub reached_ranks: Vec<usize>,
}

/// States reached from the order interval `[lo_rank, hi_rank]` by reading `w`.
pub fn reached_from_interval(
    d: &Dfa,
    order: &TotalOrder,
    lo_rank: usize,
    hi_rank: usize,
    w: &Word,
) -> BTreeSet<StateId> {
    (lo_rank..=hi_rank)
        .filter_map(|r| d.run_from(order.state_at(r), w.syms()))
        .collect()
}

/// Samples `samples` (interval, word) probes on a Wheeler-ordered DFA and
/// verifies that the reached state set is always an interval of the order.
pub fn path_coherence_check(
    d: &Dfa,
    order: &TotalOrder,
    samples: usize,
    seed: u64,
) -> std::result::Result<(), PathCoherenceViolation> {
    let n = d.state_count();
    let mut rng = SplitMix::new(seed);
    for _ in 0..samples {
        let a = rng.below(n);
        let b = rng.below(n);
        let (lo, hi) = (a.min(b), a.max(b));
        let len = rng.below(2 * n + 1);
        let word = Word::from_syms(
            (0..len).map(|_| rng.below(d.alphabet().len())).collect::<Vec<_>>(),
        );
        let reached = reached_from_interval(d, order, lo, hi, &word);
        let ranks: Vec<usize> = reached.iter().map(|&q| order.rank(q)).collect();
        if let (Some(&min), Some(&max)) = (ranks.iter().min(), ranks.iter().max()) {
            if max - min + 1 != ranks.len() {
                return Err(PathCoherenceViolation { lo_rank: lo, hi_rank: hi, word, reached_ranks: ranks });
            }
        }
    }
    Ok(())
}

// local deterministic sampler (the oracle keeps its own copy; the two modules
// must not share code)
struct SplitMix(u64);

impl SplitMix {
    fn new(seed: u64) -> SplitMix {
        SplitMix(seed.wrapping_add(0x9e3779b97f4a7c15))
    }

    fn below(&mut self, bound: usize) -> usize {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        ((z ^ (z >> 31)) % bound.max(1) as u64) as usize
    }
}

// ---------------------------------------------------------------------------
// <_A on NFAs (decision for single pairs, desk scale)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum PairRel {
    Eq,
    Lt,
    Gt,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum PairNode {
    /// Head of the longer word; `true` when alpha is the longer one.
    Head(bool, Vec<StateId>),
    /// Synchronized phase; `longer`: 0 equal, 1 alpha longer, 2 beta longer.
    Sync(u8, Vec<StateId>, Vec<StateId>, PairRel),
}

/// Decides `q <_A p` per the incoming-language order on NFAs: `I_q ⪯ I_p`
/// (every pair of words outside the shared part is ordered) and `I_q ≠ I_p`.
/// Works on the reachable subset space of the determinization, tracking the
/// rightmost difference of a right-aligned word pair; exact, capped by
/// `det_cap` on the number of distinct subsets.
pub fn nfa_order_less(a: &Nfa, q: StateId, p: StateId, det_cap: usize) -> Result<bool> {
    if q >= a.state_count() || p >= a.state_count() {
        return Err(Error::invalid("state out of range"));
    }
    if a.same_incoming(q, p, det_cap)? {
        return Ok(false);
    }
    let start: Vec<StateId> = a.initials().iter().copied().collect();
    let step = |set: &[StateId], sym: Sym| -> Vec<StateId> {
        let mut out = BTreeSet::new();
        for &s in set {
            out.extend(a.step(s, sym));
        }
        out.into_iter().collect()
    };

    let mut seen: BTreeSet<PairNode> = BTreeSet::new();
    let mut queue: VecDeque<PairNode> = VecDeque::new();
    let push = |node: PairNode, seen: &mut BTreeSet<PairNode>, queue: &mut VecDeque<PairNode>| {
        if seen.insert(node.clone()) {
            queue.push_back(node);
        }
    };
    push(PairNode::Sync(0, start.clone(), start.clone(), PairRel::Eq), &mut seen, &mut queue);
    push(PairNode::Head(true, start.clone()), &mut seen, &mut queue);
    push(PairNode::Head(false, start.clone()), &mut seen, &mut queue);

    while let Some(node) = queue.pop_front() {
        if seen.len() > det_cap.saturating_mul(det_cap).saturating_mul(8) {
            return Err(Error::CapExceeded { what: "order comparison", limit: det_cap });
        }
        match &node {
            PairNode::Sync(longer, sx, sy, rel) => {
                // violation: alpha ∈ I_q, beta ∈ I_p, beta ≺ alpha, and the
                // two words are not both shared by I_q and I_p
                let alpha_in_q = sx.contains(&q);
                let beta_in_p = sy.contains(&p);
                let beta_strictly_less =
                    *rel == PairRel::Gt || (*rel == PairRel::Eq && *longer == 1);
                if alpha_in_q && beta_in_p && beta_strictly_less {
                    let both_shared = sx.contains(&p) && sy.contains(&q);
                    if !both_shared {
                        return Ok(false);
                    }
                }
                for ca in a.alphabet().syms() {
                    let nx = step(sx, ca);
                    if nx.is_empty() {
                        continue;
                    }
                    for cb in a.alphabet().syms() {
                        let ny = step(sy, cb);
                        if ny.is_empty() {
                            continue;
                        }
                        let rel2 = match ca.cmp(&cb) {
                            Ordering::Equal => *rel,
                            Ordering::Less => PairRel::Lt,
                            Ordering::Greater => PairRel::Gt,
                        };
                        push(PairNode::Sync(*longer, nx.clone(), ny, rel2), &mut seen, &mut queue);
                    }
                }
            }
            PairNode::Head(alpha_longer, sx) => {
                for sym in a.alphabet().syms() {
                    let nx = step(sx, sym);
                    if nx.is_empty() {
                        continue;
                    }
                    let sync = if *alpha_longer {
                        PairNode::Sync(1, nx.clone(), start.clone(), PairRel::Eq)
                    } else {
                        PairNode::Sync(2, start.clone(), nx.clone(), PairRel::Eq)
                    };
                    push(sync, &mut seen, &mut queue);
                    push(PairNode::Head(*alpha_longer, nx), &mut seen, &mut queue);
                }
            }
        }
    }
    Ok(true)
}

/// Reachable-subset index used by tests that want to look at the raw space.
pub fn reachable_subsets(a: &Nfa, det_cap: usize) -> Result<Vec<Vec<StateId>>> {
    Ok(a.determinize(det_cap)?.members)
}

/// The five-state Wheeler DFA accepting all words without a `bbbb` factor,
/// with the empty word split off into its own state.
#[cfg(test)]
pub(crate) fn b3_wdfa() -> Dfa {
    use crate::alphabet::Alphabet;
    let ab = Alphabet::from_chars("ab");
    Dfa::new(
        ab,
        5,
        0,
        [0, 1, 2, 3, 4],
        [
            (0, 0, 1),
            (0, 1, 2),
            (1, 0, 1),
            (1, 1, 2),
            (2, 0, 1),
            (2, 1, 3),
            (3, 0, 1),
            (3, 1, 4),
            (4, 0, 1),
        ],
    )
    .unwrap()
}
