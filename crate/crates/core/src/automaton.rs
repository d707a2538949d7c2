//! NFAs, DFAs and the classical constructions every other module consumes.
//!
//! States are integers `0..n`. Transitions are kept as a sorted set of
//! `(src, symbol, dst)` triples so that structural equality is meaningful
//! after canonical renumbering. Multiple initial states are allowed at the
//! [`Nfa`] level; a [`Dfa`] has exactly one initial state and at most one
//! successor per `(state, symbol)`.
//!
//! An automaton with the empty language has no trimmed representation; the
//! operations that can produce one return `Option`, with `None` as the
//! distinguished "empty automaton" flag.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::alphabet::{Alphabet, Sym, Word};
use crate::error::{Error, Result};
use crate::DEFAULT_DET_CAP;

/// Index of a state.
pub type StateId = usize;

/// A transition triple.
pub type Trans = (StateId, Sym, StateId);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    initials: BTreeSet<StateId>,
    finals: BTreeSet<StateId>,
    transitions: BTreeSet<Trans>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initials: impl IntoIterator<Item = StateId>,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = Trans>,
    ) -> Result<Nfa> {
        let initials: BTreeSet<StateId> = initials.into_iter().collect();
        let finals: BTreeSet<StateId> = finals.into_iter().collect();
        let transitions: BTreeSet<Trans> = transitions.into_iter().collect();
        if state_count == 0 {
            return Err(Error::invalid("automaton needs at least one state"));
        }
        if initials.is_empty() {
            return Err(Error::invalid("automaton needs at least one initial state"));
        }
        for &q in initials.iter().chain(finals.iter()) {
            if q >= state_count {
                return Err(Error::invalid(format!("state {q} out of range")));
            }
        }
        for &(u, a, v) in &transitions {
            if u >= state_count || v >= state_count {
                return Err(Error::invalid(format!("transition ({u},{a},{v}) out of range")));
            }
            if a >= alphabet.len() {
                return Err(Error::invalid(format!("symbol {a} not in alphabet")));
            }
        }
        Ok(Nfa { alphabet, state_count, initials, finals, transitions })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initials(&self) -> &BTreeSet<StateId> {
        &self.initials
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    pub fn transitions(&self) -> impl Iterator<Item = Trans> + '_ {
        self.transitions.iter().copied()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.len()
    }

    /// Successors of `q` on `a`.
    pub fn step(&self, q: StateId, a: Sym) -> impl Iterator<Item = StateId> + '_ {
        self.transitions
            .range((q, a, 0)..=(q, a, usize::MAX))
            .map(|&(_, _, v)| v)
    }

    /// Subset step: all states reachable from `set` on `a`.
    pub fn step_set(&self, set: &BTreeSet<StateId>, a: Sym) -> BTreeSet<StateId> {
        let mut out = BTreeSet::new();
        for &q in set {
            out.extend(self.step(q, a));
        }
        out
    }

    /// The set `δ(S, w)` reached from the initial states on `w`.
    pub fn run_set(&self, w: &Word) -> BTreeSet<StateId> {
        let mut cur = self.initials.clone();
        for &a in w.syms() {
            cur = self.step_set(&cur, a);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run_set(w).iter().any(|q| self.is_final(*q))
    }

    /// Whether `w` belongs to the incoming language `I_q` of state `q`.
    pub fn incoming_member(&self, q: StateId, w: &Word) -> Result<bool> {
        if q >= self.state_count {
            return Err(Error::invalid(format!("state {q} out of range")));
        }
        Ok(self.run_set(w).contains(&q))
    }

    /// Per-state incoming edge lists, grouped by symbol.
    pub fn predecessors(&self) -> Vec<BTreeMap<Sym, BTreeSet<StateId>>> {
        let mut preds = vec![BTreeMap::<Sym, BTreeSet<StateId>>::new(); self.state_count];
        for &(u, a, v) in &self.transitions {
            preds[v].entry(a).or_default().insert(u);
        }
        preds
    }

    /// Distinct labels on the incoming edges of each state.
    pub fn incoming_labels(&self) -> Vec<BTreeSet<Sym>> {
        let mut labels = vec![BTreeSet::new(); self.state_count];
        for &(_, a, v) in &self.transitions {
            labels[v].insert(a);
        }
        labels
    }

    /// Symbols that actually occur on transitions.
    pub fn occurring_symbols(&self) -> BTreeSet<Sym> {
        self.transitions.iter().map(|&(_, a, _)| a).collect()
    }

    pub fn is_deterministic(&self) -> bool {
        self.initials.len() == 1
            && self
                .transitions
                .iter()
                .zip(self.transitions.iter().skip(1))
                .all(|(&(u1, a1, _), &(u2, a2, _))| (u1, a1) != (u2, a2))
    }

    /// States reachable from the initial set.
    pub fn reachable(&self) -> BTreeSet<StateId> {
        let mut seen = self.initials.clone();
        let mut queue: VecDeque<StateId> = self.initials.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            for a in self.alphabet.syms() {
                for v in self.step(q, a) {
                    if seen.insert(v) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn co_reachable(&self) -> BTreeSet<StateId> {
        let preds = self.predecessors();
        let mut seen = self.finals.clone();
        let mut queue: VecDeque<StateId> = self.finals.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            for set in preds[q].values() {
                for &u in set {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
        }
        seen
    }

    /// Restricts the automaton to reachable and co-reachable states and
    /// renumbers canonically. `None` when no accepting path exists at all.
    pub fn trim(&self) -> Option<Nfa> {
        let keep: BTreeSet<StateId> = self
            .reachable()
            .intersection(&self.co_reachable())
            .copied()
            .collect();
        if keep.is_empty() || self.initials.iter().all(|q| !keep.contains(q)) {
            return None;
        }
        let sub = self.restrict(&keep);
        Some(sub.canonical())
    }

    pub fn is_trimmed(&self) -> bool {
        let keep: BTreeSet<StateId> = self
            .reachable()
            .intersection(&self.co_reachable())
            .copied()
            .collect();
        keep.len() == self.state_count
    }

    fn restrict(&self, keep: &BTreeSet<StateId>) -> Nfa {
        let map: BTreeMap<StateId, StateId> =
            keep.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        Nfa {
            alphabet: self.alphabet.clone(),
            state_count: keep.len(),
            initials: self.initials.iter().filter_map(|q| map.get(q).copied()).collect(),
            finals: self.finals.iter().filter_map(|q| map.get(q).copied()).collect(),
            transitions: self
                .transitions
                .iter()
                .filter(|(u, _, v)| keep.contains(u) && keep.contains(v))
                .map(|&(u, a, v)| (map[&u], a, map[&v]))
                .collect(),
        }
    }

    /// Renumbers states breadth-first from the initial states, breaking ties
    /// by symbol order and then destination id. For deterministic automata
    /// the result is independent of the input numbering, so isomorphism
    /// checks reduce to equality.
    pub fn canonical(&self) -> Nfa {
        let mut order: Vec<StateId> = Vec::with_capacity(self.state_count);
        let mut rank = vec![usize::MAX; self.state_count];
        for &q in &self.initials {
            if rank[q] == usize::MAX {
                rank[q] = order.len();
                order.push(q);
            }
        }
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in self.alphabet.syms() {
                for v in self.step(q, a) {
                    if rank[v] == usize::MAX {
                        rank[v] = order.len();
                        order.push(v);
                    }
                }
            }
        }
        // unreachable states keep their relative order at the back
        for q in 0..self.state_count {
            if rank[q] == usize::MAX {
                rank[q] = order.len();
                order.push(q);
            }
        }
        Nfa {
            alphabet: self.alphabet.clone(),
            state_count: self.state_count,
            initials: self.initials.iter().map(|&q| rank[q]).collect(),
            finals: self.finals.iter().map(|&q| rank[q]).collect(),
            transitions: self
                .transitions
                .iter()
                .map(|&(u, a, v)| (rank[u], a, rank[v]))
                .collect(),
        }
    }

    /// Strict input-consistency: every state's incoming edges carry one common
    /// label and no initial state has incoming edges (so the synthetic label
    /// `#` of the initials is consistent too).
    pub fn is_input_consistent(&self) -> bool {
        let labels = self.incoming_labels();
        (0..self.state_count).all(|q| {
            if self.initials.contains(&q) {
                labels[q].is_empty()
            } else {
                labels[q].len() <= 1
            }
        })
    }

    /// The labelling `λ` of a strictly input-consistent automaton:
    /// `None` (= `#`) for initial states, the unique incoming label otherwise.
    pub fn label_fn(&self) -> Option<Vec<Option<Sym>>> {
        if !self.is_input_consistent() {
            return None;
        }
        let labels = self.incoming_labels();
        Some(
            (0..self.state_count)
                .map(|q| {
                    if self.initials.contains(&q) {
                        None
                    } else {
                        labels[q].iter().next().copied()
                    }
                })
                .collect(),
        )
    }

    /// Splits states by incoming label so that the result is strictly
    /// input-consistent (initials in particular end up without incoming
    /// edges), preserving the language. At most `|Q|·(|Σ|+1)` states.
    pub fn make_input_consistent(&self) -> Nfa {
        if self.is_input_consistent() {
            return self.canonical();
        }
        let in_labels = self.incoming_labels();
        // copy (q, Some(a)) per incoming label a; copy (q, None) per initial q
        let mut idx: BTreeMap<(StateId, Option<Sym>), StateId> = BTreeMap::new();
        for q in 0..self.state_count {
            if self.initials.contains(&q) {
                let next = idx.len();
                idx.entry((q, None)).or_insert(next);
            }
        }
        for q in 0..self.state_count {
            for &a in &in_labels[q] {
                let next = idx.len();
                idx.entry((q, Some(a))).or_insert(next);
            }
        }
        let mut transitions = BTreeSet::new();
        for (&(u, _), &src) in &idx {
            for &(tu, a, tv) in &self.transitions {
                if tu == u {
                    transitions.insert((src, a, idx[&(tv, Some(a))]));
                }
            }
        }
        let initials: BTreeSet<StateId> =
            self.initials.iter().map(|&q| idx[&(q, None)]).collect();
        let finals: BTreeSet<StateId> = idx
            .iter()
            .filter(|((q, _), _)| self.finals.contains(q))
            .map(|(_, &i)| i)
            .collect();
        let nfa = Nfa {
            alphabet: self.alphabet.clone(),
            state_count: idx.len(),
            initials,
            finals,
            transitions,
        };
        nfa.trim().expect("input consistency preserves the language").canonical()
    }

    /// Ensures a unique initial state without incoming edges by adding a fresh
    /// start state when needed. Language-preserving.
    pub fn normalize_single_start(&self) -> Nfa {
        let in_labels = self.incoming_labels();
        if self.initials.len() == 1 {
            let q0 = *self.initials.iter().next().unwrap();
            if in_labels[q0].is_empty() {
                return self.canonical();
            }
        }
        let fresh = self.state_count;
        let mut transitions = self.transitions.clone();
        for &s in &self.initials {
            for a in self.alphabet.syms() {
                for v in self.step(s, a) {
                    transitions.insert((fresh, a, v));
                }
            }
        }
        let accepting_start = self.initials.iter().any(|q| self.finals.contains(q));
        let mut finals = self.finals.clone();
        if accepting_start {
            finals.insert(fresh);
        }
        let nfa = Nfa {
            alphabet: self.alphabet.clone(),
            state_count: self.state_count + 1,
            initials: BTreeSet::from([fresh]),
            finals,
            transitions,
        };
        nfa.trim().expect("start normalization preserves the language")
    }

    /// Subset construction. Keeps the member set of original states per
    /// result state. Fails with a resource error once more than `det_cap`
    /// subsets appear.
    pub fn determinize(&self, det_cap: usize) -> Result<Determinized> {
        let start: Vec<StateId> = self.initials.iter().copied().collect();
        let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let mut members: Vec<Vec<StateId>> = Vec::new();
        let mut transitions = BTreeSet::new();
        index.insert(start.clone(), 0);
        members.push(start);
        let mut head = 0;
        while head < members.len() {
            let cur: BTreeSet<StateId> = members[head].iter().copied().collect();
            for a in self.alphabet.syms() {
                let next = self.step_set(&cur, a);
                if next.is_empty() {
                    continue;
                }
                let key: Vec<StateId> = next.into_iter().collect();
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        if members.len() >= det_cap {
                            return Err(Error::CapExceeded {
                                what: "determinization",
                                limit: det_cap,
                            });
                        }
                        let id = members.len();
                        index.insert(key.clone(), id);
                        members.push(key);
                        id
                    }
                };
                transitions.insert((head, a, id));
            }
            head += 1;
        }
        let finals: BTreeSet<StateId> = members
            .iter()
            .enumerate()
            .filter(|(_, set)| set.iter().any(|q| self.finals.contains(q)))
            .map(|(i, _)| i)
            .collect();
        let nfa = Nfa {
            alphabet: self.alphabet.clone(),
            state_count: members.len(),
            initials: BTreeSet::from([0]),
            finals,
            transitions,
        };
        Ok(Determinized { dfa: Dfa { inner: nfa }, members })
    }

    /// `I_q = I_p`, decided over the reachable subsets of the determinization:
    /// the two incoming languages agree iff every reachable subset contains
    /// `q` exactly when it contains `p`.
    pub fn same_incoming(&self, q: StateId, p: StateId, det_cap: usize) -> Result<bool> {
        if q >= self.state_count || p >= self.state_count {
            return Err(Error::invalid("state out of range"));
        }
        if q == p {
            return Ok(true);
        }
        let det = self.determinize(det_cap)?;
        Ok(det
            .members
            .iter()
            .all(|set| set.contains(&q) == set.contains(&p)))
    }

    /// Distinct states have distinct incoming languages.
    pub fn is_reduced(&self, det_cap: usize) -> Result<bool> {
        let det = self.determinize(det_cap)?;
        // signature of q = the set of reachable subsets containing it
        let mut sig: HashMap<Vec<bool>, StateId> = HashMap::new();
        for q in 0..self.state_count {
            let key: Vec<bool> = det.members.iter().map(|set| set.contains(&q)).collect();
            if sig.insert(key, q).is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact universality over the declared alphabet, via the completed
    /// determinization: universal iff every reachable subset is accepting and
    /// total.
    pub fn is_universal(&self, det_cap: usize) -> Result<bool> {
        let det = self.determinize(det_cap)?;
        let d = &det.dfa;
        for q in 0..d.state_count() {
            if !d.is_final(q) {
                return Ok(false);
            }
            for a in self.alphabet.syms() {
                if d.step_dfa(q, a).is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Result of the subset construction: the DFA plus, per DFA state, the set of
/// original NFA states it stands for.
#[derive(Debug, Clone)]
pub struct Determinized {
    pub dfa: Dfa,
    pub members: Vec<Vec<StateId>>,
}

/// A deterministic automaton: one initial state, at most one successor per
/// `(state, symbol)`. Dereferences to [`Nfa`] for the shared read surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    inner: Nfa,
}

impl std::ops::Deref for Dfa {
    type Target = Nfa;

    fn deref(&self) -> &Nfa {
        &self.inner
    }
}

impl Dfa {
    pub fn try_from_nfa(nfa: Nfa) -> Result<Dfa> {
        if !nfa.is_deterministic() {
            return Err(Error::invalid("automaton is not deterministic"));
        }
        Ok(Dfa { inner: nfa })
    }

    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = Trans>,
    ) -> Result<Dfa> {
        Dfa::try_from_nfa(Nfa::new(alphabet, state_count, [initial], finals, transitions)?)
    }

    pub fn as_nfa(&self) -> &Nfa {
        &self.inner
    }

    pub fn into_nfa(self) -> Nfa {
        self.inner
    }

    pub fn initial(&self) -> StateId {
        *self.inner.initials.iter().next().unwrap()
    }

    /// Deterministic step.
    pub fn step_dfa(&self, q: StateId, a: Sym) -> Option<StateId> {
        self.inner.step(q, a).next()
    }

    /// Runs `w` from `from`; `None` when a transition is missing.
    pub fn run_from(&self, from: StateId, w: &[Sym]) -> Option<StateId> {
        let mut cur = from;
        for &a in w {
            cur = self.step_dfa(cur, a)?;
        }
        Some(cur)
    }

    /// Runs `w` from the initial state.
    pub fn run(&self, w: &Word) -> Option<StateId> {
        self.run_from(self.initial(), w.syms())
    }

    pub fn accepts_dfa(&self, w: &Word) -> bool {
        self.run(w).is_some_and(|q| self.is_final(q))
    }

    pub fn trim_dfa(&self) -> Option<Dfa> {
        self.inner.trim().map(|nfa| Dfa { inner: nfa })
    }

    pub fn canonical_dfa(&self) -> Dfa {
        Dfa { inner: self.inner.canonical() }
    }

    /// Input-label splitting specialized to DFAs (the split preserves
    /// determinism). Returns the consistent DFA and its labelling.
    pub fn make_input_consistent_dfa(&self) -> (Dfa, Vec<Option<Sym>>) {
        let nfa = self.inner.make_input_consistent();
        let labels = nfa.label_fn().expect("construction is input-consistent");
        (Dfa { inner: nfa }, labels)
    }

    /// Fresh-start normalization specialized to DFAs.
    pub fn normalize_single_start_dfa(&self) -> Dfa {
        let nfa = self.inner.normalize_single_start();
        debug_assert!(nfa.is_deterministic());
        Dfa { inner: nfa }
    }

    /// Classical minimization by partition refinement (Moore). Expects a
    /// trimmed automaton; the result is trimmed, minimal and canonical.
    pub fn minimize(&self) -> Dfa {
        let d = self.trim_dfa().expect("minimize needs a nonempty language");
        let n = d.state_count();
        let mut block: Vec<usize> = (0..n).map(|q| usize::from(d.is_final(q))).collect();
        loop {
            let mut sig_index: BTreeMap<(usize, Vec<Option<usize>>), usize> = BTreeMap::new();
            let mut next = vec![0usize; n];
            for q in 0..n {
                let sig: Vec<Option<usize>> = d
                    .alphabet()
                    .syms()
                    .map(|a| d.step_dfa(q, a).map(|v| block[v]))
                    .collect();
                let key = (block[q], sig);
                let id = sig_index.len();
                next[q] = *sig_index.entry(key).or_insert(id);
            }
            if next == block {
                break;
            }
            block = next;
        }
        let class_count = block.iter().max().unwrap() + 1;
        let mut transitions = BTreeSet::new();
        for (u, a, v) in d.transitions() {
            transitions.insert((block[u], a, block[v]));
        }
        let finals: BTreeSet<StateId> = d.finals().iter().map(|&q| block[q]).collect();
        let nfa = Nfa {
            alphabet: d.alphabet().clone(),
            state_count: class_count,
            initials: BTreeSet::from([block[d.initial()]]),
            finals,
            transitions,
        };
        debug_assert!(nfa.is_deterministic());
        Dfa { inner: nfa.canonical() }
    }

    /// Whether no two distinct states are language-equivalent (and the
    /// automaton is trimmed), i.e. the DFA is the minimum one.
    pub fn is_minimal(&self) -> bool {
        self.is_trimmed() && self.minimize().state_count() == self.state_count()
    }

    /// Product construction for the intersection. `None` when the
    /// intersection is empty.
    pub fn product_intersection(&self, other: &Dfa) -> Result<Option<Dfa>> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch(format!(
                "left has {} symbols, right has {}",
                self.alphabet().len(),
                other.alphabet().len()
            )));
        }
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut order: Vec<(StateId, StateId)> = Vec::new();
        let start = (self.initial(), other.initial());
        index.insert(start, 0);
        order.push(start);
        let mut transitions = BTreeSet::new();
        let mut head = 0;
        while head < order.len() {
            let (x, y) = order[head];
            for a in self.alphabet().syms() {
                if let (Some(x2), Some(y2)) = (self.step_dfa(x, a), other.step_dfa(y, a)) {
                    let id = *index.entry((x2, y2)).or_insert_with(|| {
                        order.push((x2, y2));
                        order.len() - 1
                    });
                    transitions.insert((head, a, id));
                }
            }
            head += 1;
        }
        let finals: BTreeSet<StateId> = order
            .iter()
            .enumerate()
            .filter(|(_, &(x, y))| self.is_final(x) && other.is_final(y))
            .map(|(i, _)| i)
            .collect();
        let nfa = Nfa {
            alphabet: self.alphabet().clone(),
            state_count: order.len(),
            initials: BTreeSet::from([0]),
            finals,
            transitions,
        };
        Ok(nfa.trim().map(|t| Dfa { inner: t }))
    }

    /// Exact language equality of two DFAs over the same alphabet, by
    /// searching the completed product for a state accepting on one side only.
    pub fn lang_equal(&self, other: &Dfa) -> bool {
        if self.alphabet() != other.alphabet() {
            return false;
        }
        // None = sink (rejecting, total)
        type P = (Option<StateId>, Option<StateId>);
        let start: P = (Some(self.initial()), Some(other.initial()));
        let mut seen: BTreeSet<P> = BTreeSet::from([start]);
        let mut queue: VecDeque<P> = VecDeque::from([start]);
        while let Some((x, y)) = queue.pop_front() {
            let xf = x.is_some_and(|q| self.is_final(q));
            let yf = y.is_some_and(|q| other.is_final(q));
            if xf != yf {
                return false;
            }
            if x.is_none() && y.is_none() {
                continue;
            }
            for a in self.alphabet().syms() {
                let nx = x.and_then(|q| self.step_dfa(q, a));
                let ny = y.and_then(|q| other.step_dfa(q, a));
                if seen.insert((nx, ny)) {
                    queue.push_back((nx, ny));
                }
            }
        }
        true
    }
}

/// Convenience: determinize with the default cap.
pub fn determinize(a: &Nfa) -> Result<Determinized> {
    a.determinize(DEFAULT_DET_CAP)
}

#[cfg(test)]
pub(crate) fn fig1() -> Dfa {
    // The running example: L = a c* + d c* f over a ≺ c ≺ d ≺ f.
    let ab = Alphabet::from_chars("acdf");
    let (a, c, d, f) = (0, 1, 2, 3);
    Dfa::new(
        ab,
        6,
        0,
        [1, 2, 5],
        [
            (0, a, 1),
            (1, c, 2),
            (2, c, 2),
            (0, d, 4),
            (4, c, 3),
            (3, c, 3),
            (3, f, 5),
            (4, f, 5),
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn ab2() -> Alphabet {
        Alphabet::from_chars("ab")
    }

    #[test]
    fn fig1_shape() {
        let d = fig1();
        assert_eq!(d.state_count(), 6);
        assert_eq!(d.transition_count(), 8);
        assert!(d.is_trimmed());
        assert!(d.is_input_consistent());
        let w = |s: &str| Word::parse(d.alphabet(), s).unwrap();
        assert!(d.accepts_dfa(&w("acc")));
        assert!(d.accepts_dfa(&w("df")));
        assert!(d.accepts_dfa(&w("dccf")));
        assert!(!d.accepts_dfa(&w("dc")));
    }

    #[test]
    fn trim_keeps_fig1_and_drops_unreachable() {
        let d = fig1();
        assert_eq!(d.as_nfa().trim().unwrap(), d.as_nfa().canonical());

        let two = Dfa::new(ab2(), 2, 0, [0], [(1, 0, 1)]).unwrap();
        let trimmed = two.as_nfa().trim().unwrap();
        assert_eq!(trimmed.state_count(), 1);
    }

    #[test]
    fn trim_empty_language_is_flagged() {
        // final state unreachable
        let n = Nfa::new(ab2(), 2, [0], [1], [(0, 0, 0)]).unwrap();
        assert!(n.trim().is_none());
    }

    #[test]
    fn trim_preserves_language_random() {
        let mut rng = oracle::TestRng::new(11);
        for _ in 0..40 {
            let n = oracle::random_nfa(&mut rng, 8, &ab2(), 0.18, 0.4);
            if let Some(t) = n.trim() {
                assert!(oracle::lang_equal(&n, &t, Some(8)));
            }
        }
    }

    #[test]
    fn input_consistency_fixpoint_and_split() {
        let d = fig1();
        // already consistent: isomorphic output
        assert_eq!(d.as_nfa().make_input_consistent(), d.as_nfa().canonical());

        // state 1 has incoming labels {a, b}: it gets split into two copies
        let n = Nfa::new(ab2(), 2, [0], [1], [(0, 0, 1), (0, 1, 1), (1, 0, 1)]).unwrap();
        let c = n.make_input_consistent();
        assert!(c.is_input_consistent());
        assert_eq!(c.state_count(), 3);
        assert!(oracle::lang_equal(&n, &c, None));
    }

    #[test]
    fn input_consistency_preserves_language_random() {
        let mut rng = oracle::TestRng::new(12);
        for _ in 0..40 {
            let n = oracle::random_nfa(&mut rng, 6, &ab2(), 0.25, 0.4);
            if let Some(t) = n.trim() {
                let c = t.make_input_consistent();
                assert!(c.is_input_consistent());
                assert!(c.state_count() <= t.state_count() * (t.alphabet().len() + 1));
                assert!(oracle::lang_equal(&t, &c, Some(8)));
            }
        }
    }

    #[test]
    fn determinize_dfa_is_isomorphic() {
        let d = fig1();
        let det = determinize(d.as_nfa()).unwrap();
        assert_eq!(det.dfa.as_nfa(), &d.as_nfa().canonical());
    }

    #[test]
    fn determinize_preserves_language_random() {
        let mut rng = oracle::TestRng::new(13);
        for _ in 0..30 {
            let n = oracle::random_nfa(&mut rng, 5, &ab2(), 0.3, 0.4);
            if let Some(t) = n.trim() {
                let det = determinize(&t).unwrap();
                assert!(det.dfa.is_deterministic());
                assert!(oracle::lang_equal(&t, det.dfa.as_nfa(), Some(8)));
            }
        }
    }

    #[test]
    fn determinize_cap_errors() {
        let mut rng = oracle::TestRng::new(14);
        let n = oracle::random_nfa(&mut rng, 8, &ab2(), 0.4, 0.4).trim().unwrap();
        match n.determinize(1) {
            Err(Error::CapExceeded { what, .. }) => assert_eq!(what, "determinization"),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn minimize_idempotent_and_canonical() {
        // Fig. 1 is the minimum *Wheeler* DFA; plain minimization merges the
        // two c-loop states and the two f-predecessors down to 4 states
        let d = fig1();
        let m = d.minimize();
        assert_eq!(m.state_count(), 4);
        assert_eq!(m.minimize(), m);
        assert!(m.is_minimal());
        assert!(oracle::lang_equal(d.as_nfa(), m.as_nfa(), None));
    }

    #[test]
    fn minimize_matches_nerode_class_count() {
        let mut rng = oracle::TestRng::new(15);
        for _ in 0..25 {
            if let Some(d) = oracle::random_dfa(&mut rng, 7, &ab2(), 0.85, 0.4) {
                let m = d.minimize();
                assert!(oracle::lang_equal(d.as_nfa(), m.as_nfa(), None));
                // pairwise distinct states
                for q in 0..m.state_count() {
                    for p in (q + 1)..m.state_count() {
                        assert!(
                            !oracle::states_equivalent(&m, q, p),
                            "states {q},{p} equivalent after minimize"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn product_with_universal_is_identity() {
        let d = fig1();
        let ab = d.alphabet().clone();
        let mut uni_trans = Vec::new();
        for a in ab.syms() {
            uni_trans.push((0, a, 0));
        }
        let uni = Dfa::new(ab, 1, 0, [0], uni_trans).unwrap();
        let p = d.product_intersection(&uni).unwrap().unwrap();
        assert!(oracle::lang_equal(d.as_nfa(), p.as_nfa(), None));
    }

    #[test]
    fn product_membership_is_conjunction() {
        let mut rng = oracle::TestRng::new(16);
        for _ in 0..20 {
            let d1 = oracle::random_dfa(&mut rng, 5, &ab2(), 0.8, 0.45);
            let d2 = oracle::random_dfa(&mut rng, 5, &ab2(), 0.8, 0.45);
            let (Some(d1), Some(d2)) = (d1, d2) else { continue };
            let p = d1.product_intersection(&d2).unwrap();
            for w in oracle::all_words(&ab2(), 10) {
                let both = d1.accepts_dfa(&w) && d2.accepts_dfa(&w);
                let pm = p.as_ref().is_some_and(|p| p.accepts_dfa(&w));
                assert_eq!(both, pm);
            }
        }
    }

    #[test]
    fn product_disjoint_is_empty() {
        let ab = ab2();
        // only "a" vs only "b"
        let d1 = Dfa::new(ab.clone(), 2, 0, [1], [(0, 0, 1)]).unwrap();
        let d2 = Dfa::new(ab.clone(), 2, 0, [1], [(0, 1, 1)]).unwrap();
        assert!(d1.product_intersection(&d2).unwrap().is_none());
    }

    #[test]
    fn product_alphabet_mismatch() {
        let d1 = Dfa::new(ab2(), 1, 0, [0], [(0, 0, 0)]).unwrap();
        let d2 = Dfa::new(Alphabet::from_chars("ac"), 1, 0, [0], [(0, 0, 0)]).unwrap();
        assert!(matches!(
            d1.product_intersection(&d2),
            Err(Error::AlphabetMismatch(_))
        ));
    }

    #[test]
    fn incoming_member_fig1() {
        let d = fig1();
        let w = |s: &str| Word::parse(d.alphabet(), s).unwrap();
        assert!(d.incoming_member(2, &w("acc")).unwrap());
        assert!(!d.incoming_member(2, &w("a")).unwrap());
        assert!(d.incoming_member(0, &Word::empty()).unwrap());
        assert!(d.incoming_member(3, &w("dcc")).unwrap());
    }

    #[test]
    fn same_incoming_dfa_states_differ() {
        let d = fig1();
        for q in 0..d.state_count() {
            for p in 0..d.state_count() {
                let expect = q == p;
                assert_eq!(d.same_incoming(q, p, 1 << 12).unwrap(), expect);
            }
        }
        assert!(d.as_nfa().is_reduced(1 << 12).unwrap());
    }

    #[test]
    fn cloned_state_breaks_reducedness() {
        // duplicate state 1 of a 2-state automaton with identical incoming edges
        let n = Nfa::new(
            ab2(),
            3,
            [0],
            [1, 2],
            [(0, 0, 1), (0, 0, 2), (1, 1, 1), (2, 1, 2)],
        )
        .unwrap();
        assert!(n.same_incoming(1, 2, 1 << 12).unwrap());
        assert!(!n.is_reduced(1 << 12).unwrap());
    }

    #[test]
    fn universality_check() {
        let ab = ab2();
        let uni = Nfa::new(ab.clone(), 1, [0], [0], [(0, 0, 0), (0, 1, 0)]).unwrap();
        assert!(uni.is_universal(1 << 12).unwrap());
        let not = Nfa::new(ab, 2, [0], [1], [(0, 0, 1), (1, 0, 1), (1, 1, 1)]).unwrap();
        assert!(!not.is_universal(1 << 12).unwrap());
    }

    #[test]
    fn normalize_single_start() {
        let ab = ab2();
        // one state, self loops: initial has incoming edges
        let d = Dfa::new(ab, 1, 0, [0], [(0, 0, 0), (0, 1, 0)]).unwrap();
        let norm = d.normalize_single_start_dfa();
        assert_eq!(norm.state_count(), 2);
        let q0 = norm.initial();
        assert!(norm.incoming_labels()[q0].is_empty());
        assert!(oracle::lang_equal(d.as_nfa(), norm.as_nfa(), None));
    }
}
