//! The automaton text format and DOT export.
//!
//! ```text
//! # comment lines start with '#'
//! alphabet: a c d f        # declaration order = symbol order
//! states: 6
//! initial: 0
//! final: 1 2 5
//! trans:
//! 0 a 1
//! 1 c 2
//! order: 0 1 2 3 4 5       # optional claimed state order
//! ```
//!
//! The explicit `alphabet:` line is the whole point of having our own format:
//! every result here depends on the symbol order, and common interchange
//! formats have no place to put it. Epsilon transitions do not exist in this
//! format; the epsilon spellings are rejected as symbols outright.

use crate::alphabet::{Alphabet, Word};
use crate::automaton::{Nfa, StateId};
use crate::error::{Error, Result};

/// Parse result: the automaton plus the optional claimed state order.
#[derive(Debug, Clone)]
pub struct ParsedAutomaton {
    pub nfa: Nfa,
    pub claimed_order: Option<Vec<StateId>>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses the text format. Errors carry 1-based line numbers.
pub fn parse(text: &str) -> Result<ParsedAutomaton> {
    let mut alphabet: Option<Alphabet> = None;
    let mut state_count: Option<usize> = None;
    let mut initials: Option<Vec<StateId>> = None;
    let mut finals: Option<Vec<StateId>> = None;
    let mut order: Option<Vec<StateId>> = None;
    let mut transitions: Vec<(StateId, usize, StateId)> = Vec::new();
    let mut in_trans = false;

    for (idx, raw) in text.lines().enumerate() {
        let lno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("alphabet:") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            for t in &toks {
                if ["eps", "epsilon", "ε"].contains(t) {
                    return Err(perr(lno, "epsilon transitions are not supported"));
                }
            }
            alphabet = Some(
                Alphabet::new(toks).map_err(|e| perr(lno, e.to_string()))?,
            );
            in_trans = false;
        } else if let Some(rest) = line.strip_prefix("states:") {
            state_count =
                Some(rest.trim().parse().map_err(|_| perr(lno, "bad state count"))?);
            in_trans = false;
        } else if let Some(rest) = line.strip_prefix("initial:") {
            initials = Some(parse_ids(rest, lno)?);
            in_trans = false;
        } else if let Some(rest) = line.strip_prefix("final:") {
            finals = Some(parse_ids(rest, lno)?);
            in_trans = false;
        } else if let Some(rest) = line.strip_prefix("order:") {
            order = Some(parse_ids(rest, lno)?);
            in_trans = false;
        } else if line == "trans:" {
            in_trans = true;
        } else if in_trans {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(perr(lno, "transition needs `src symbol dst`"));
            }
            let ab = alphabet
                .as_ref()
                .ok_or_else(|| perr(lno, "alphabet must be declared before transitions"))?;
            let src: StateId = toks[0].parse().map_err(|_| perr(lno, "bad source state"))?;
            let dst: StateId = toks[2].parse().map_err(|_| perr(lno, "bad target state"))?;
            if ["eps", "epsilon", "ε"].contains(&toks[1]) {
                return Err(perr(lno, "epsilon transitions are not supported"));
            }
            let sym = ab
                .id(toks[1])
                .ok_or_else(|| perr(lno, format!("undeclared symbol {:?}", toks[1])))?;
            if transitions.contains(&(src, sym, dst)) {
                return Err(perr(lno, "duplicate transition"));
            }
            transitions.push((src, sym, dst));
        } else {
            return Err(perr(lno, format!("unrecognized line {line:?}")));
        }
    }

    let alphabet = alphabet.ok_or_else(|| perr(0, "missing alphabet section"))?;
    let state_count = state_count.ok_or_else(|| perr(0, "missing states section"))?;
    let initials = initials.ok_or_else(|| perr(0, "missing initial section"))?;
    let finals = finals.unwrap_or_default();
    for &q in initials.iter().chain(finals.iter()) {
        if q >= state_count {
            return Err(perr(0, format!("state {q} out of range")));
        }
    }
    for &(u, _, v) in &transitions {
        if u >= state_count || v >= state_count {
            return Err(perr(0, format!("transition endpoint out of range ({u} or {v})")));
        }
    }
    if let Some(ord) = &order {
        let mut seen = vec![false; state_count];
        if ord.len() != state_count {
            return Err(perr(0, "order must list every state exactly once"));
        }
        for &q in ord {
            if q >= state_count || seen[q] {
                return Err(perr(0, "order must be a permutation of the states"));
            }
            seen[q] = true;
        }
    }
    let nfa = Nfa::new(alphabet, state_count, initials, finals, transitions)
        .map_err(|e| perr(0, e.to_string()))?;
    Ok(ParsedAutomaton { nfa, claimed_order: order })
}

fn parse_ids(rest: &str, lno: usize) -> Result<Vec<StateId>> {
    rest.split_whitespace()
        .map(|t| t.parse().map_err(|_| perr(lno, format!("bad state id {t:?}"))))
        .collect()
}

/// Serializes an automaton (as-is; renumber first if a canonical form is
/// wanted). Inverse of [`parse`] up to whitespace.
pub fn serialize(nfa: &Nfa, order: Option<&[StateId]>) -> String {
    let ab = nfa.alphabet();
    let mut out = String::new();
    let names: Vec<&str> = ab.syms().map(|s| ab.name(s)).collect();
    out.push_str(&format!("alphabet: {}\n", names.join(" ")));
    out.push_str(&format!("states: {}\n", nfa.state_count()));
    out.push_str(&format!("initial: {}\n", join_ids(nfa.initials().iter())));
    out.push_str(&format!("final: {}\n", join_ids(nfa.finals().iter())));
    out.push_str("trans:\n");
    for (u, a, v) in nfa.transitions() {
        out.push_str(&format!("{u} {} {v}\n", ab.name(a)));
    }
    if let Some(ord) = order {
        let ids: Vec<String> = ord.iter().map(|q| q.to_string()).collect();
        out.push_str(&format!("order: {}\n", ids.join(" ")));
    }
    out
}

fn join_ids<'a>(ids: impl Iterator<Item = &'a StateId>) -> String {
    ids.map(|q| q.to_string()).collect::<Vec<_>>().join(" ")
}

/// Graphviz DOT export. Final states get double circles; when an order is
/// supplied the states are labeled with their rank and laid out in rank order.
pub fn export_dot(nfa: &Nfa, order: Option<&[StateId]>) -> String {
    let ab = nfa.alphabet();
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    let rank_of: Option<Vec<usize>> = order.map(|ord| {
        let mut rank = vec![0usize; nfa.state_count()];
        for (r, &q) in ord.iter().enumerate() {
            rank[q] = r;
        }
        rank
    });
    out.push_str("  node [shape=circle];\n");
    for q in 0..nfa.state_count() {
        let shape = if nfa.is_final(q) { "doublecircle" } else { "circle" };
        let label = match &rank_of {
            Some(rank) => format!("q{q}\\n#{r}", r = rank[q]),
            None => format!("q{q}"),
        };
        out.push_str(&format!("  {q} [shape={shape}, label=\"{label}\"];\n"));
    }
    for &q in nfa.initials() {
        out.push_str(&format!("  start{q} [shape=point, style=invis];\n"));
        out.push_str(&format!("  start{q} -> {q};\n"));
    }
    for (u, a, v) in nfa.transitions() {
        out.push_str(&format!("  {u} -> {v} [label=\"{}\"];\n", ab.name(a)));
    }
    if let Some(ord) = order {
        let chain: Vec<String> = ord.iter().map(|q| q.to_string()).collect();
        out.push_str(&format!(
            "  {{ edge [style=invis]; {} }}\n",
            chain.join(" -> ")
        ));
    }
    out.push_str("}\n");
    out
}

/// Convenience used in tests and the CLI: show a word with this automaton's
/// alphabet.
pub fn show_word(nfa: &Nfa, w: &Word) -> String {
    w.display(nfa.alphabet())
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG1: &str = "\
alphabet: a c d f
states: 6
initial: 0
final: 1 2 5
trans:
0 a 1
1 c 2
2 c 2
0 d 4
4 c 3
3 c 3
3 f 5
4 f 5
";

    #[test]
    fn fig1_parses() {
        let p = parse(FIG1).unwrap();
        assert_eq!(p.nfa.state_count(), 6);
        assert_eq!(p.nfa.transition_count(), 8);
        assert!(p.nfa.is_deterministic());
        assert_eq!(p.nfa, crate::automaton::fig1().as_nfa().clone());
    }

    #[test]
    fn round_trip_is_identity_after_canonicalization() {
        let p = parse(FIG1).unwrap();
        let canon = p.nfa.canonical();
        let text = serialize(&canon, None);
        let again = parse(&text).unwrap().nfa.canonical();
        assert_eq!(serialize(&again, None), text);
    }

    #[test]
    fn undeclared_symbol_errors_with_line() {
        let bad = "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntrans:\n0 b 0\n";
        match parse(bad) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 6);
                assert!(msg.contains("undeclared"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn epsilon_rejected() {
        let bad = "alphabet: a eps\nstates: 1\ninitial: 0\nfinal: 0\ntrans:\n";
        assert!(matches!(parse(bad), Err(Error::Parse { line: 1, .. })));
        let bad2 = "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntrans:\n0 ε 0\n";
        assert!(parse(bad2).is_err());
    }

    #[test]
    fn duplicate_transition_rejected() {
        let bad = "alphabet: a\nstates: 1\ninitial: 0\nfinal: 0\ntrans:\n0 a 0\n0 a 0\n";
        assert!(matches!(parse(bad), Err(Error::Parse { line: 7, .. })));
    }

    #[test]
    fn order_must_be_permutation() {
        let bad = format!("{FIG1}order: 0 1 2 3 4 4\n");
        assert!(parse(&bad).is_err());
        let good = format!("{FIG1}order: 0 1 2 3 4 5\n");
        assert_eq!(parse(&good).unwrap().claimed_order, Some(vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn dot_export_shape() {
        let p = parse(FIG1).unwrap();
        let dot = export_dot(&p.nfa, Some(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(dot.matches("doublecircle").count(), 3);
        assert!(dot.contains("0 -> 1 [label=\"a\"]"));
        assert!(dot.starts_with("digraph"));
    }

    #[test]
    fn empty_automaton_dot() {
        // a single non-accepting state still renders a valid digraph
        let n = Nfa::new(Alphabet::from_chars("a"), 1, [0], [] as [usize; 0], []).unwrap();
        let dot = export_dot(&n, None);
        assert!(dot.starts_with("digraph"));
        assert!(dot.ends_with("}\n"));
    }
}
