//! Ordered alphabets and co-lexicographically compared words.
//!
//! Symbols are interned: a [`Sym`] is an index into its [`Alphabet`], and the
//! declaration order of the symbols *is* the total order on them. A reserved
//! synthetic symbol `#`, strictly smaller than every declared symbol, stands
//! for "no incoming label" and never occurs inside a [`Word`]; it is modelled
//! as `None` wherever an `Option<Sym>` is compared.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in its [`Alphabet`]. Smaller index = smaller symbol.
pub type Sym = usize;

/// Tokens that may not be declared as symbols. `#` is the synthetic minimal
/// symbol; the epsilon spellings are rejected because the automata here have
/// no epsilon transitions.
const RESERVED: [&str; 4] = ["#", "eps", "epsilon", "ε"];

/// A finite, totally ordered set of symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet from distinct tokens; declaration order is the order.
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::invalid("alphabet must contain at least one symbol"));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(Error::invalid(format!("bad symbol token {s:?}")));
            }
            if RESERVED.contains(&s.as_str()) {
                return Err(Error::invalid(format!("symbol {s:?} is reserved")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::invalid(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Single-character alphabet out of a literal like `"acdf"`.
    pub fn from_chars(chars: &str) -> Alphabet {
        Alphabet::new(chars.chars().map(|c| c.to_string())).expect("valid chars")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn syms(&self) -> impl Iterator<Item = Sym> {
        0..self.symbols.len()
    }

    /// The token for a symbol id.
    pub fn name(&self, s: Sym) -> &str {
        &self.symbols[s]
    }

    /// Looks a token up; `None` if undeclared.
    pub fn id(&self, token: &str) -> Option<Sym> {
        self.symbols.iter().position(|s| s == token)
    }

    /// True when every symbol is a single character, so words can be shown
    /// without separators.
    pub fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }

    /// Appends fresh symbols, deriving non-clashing names from `wanted`.
    /// Returns the ids of the new symbols in order.
    pub fn extend_fresh(&self, wanted: &[&str]) -> (Alphabet, Vec<Sym>) {
        let mut symbols = self.symbols.clone();
        let mut ids = Vec::with_capacity(wanted.len());
        for base in wanted {
            let mut cand = (*base).to_string();
            let mut k = 0usize;
            while symbols.contains(&cand) || RESERVED.contains(&cand.as_str()) {
                k += 1;
                cand = format!("{base}{k}");
            }
            ids.push(symbols.len());
            symbols.push(cand);
        }
        (Alphabet { symbols }, ids)
    }

    /// Inserts fresh symbols *before* all existing ones (they become the
    /// smallest). Returns the new alphabet, the ids of the inserted symbols,
    /// and the offset by which every pre-existing symbol id shifted.
    pub fn prepend_fresh(&self, wanted: &[&str]) -> (Alphabet, Vec<Sym>, usize) {
        let mut fresh: Vec<String> = Vec::with_capacity(wanted.len());
        for base in wanted {
            let mut cand = (*base).to_string();
            let mut k = 0usize;
            while self.symbols.contains(&cand)
                || fresh.contains(&cand)
                || RESERVED.contains(&cand.as_str())
            {
                k += 1;
                cand = format!("{base}{k}");
            }
            fresh.push(cand);
        }
        let offset = fresh.len();
        let ids: Vec<Sym> = (0..offset).collect();
        let mut symbols = fresh;
        symbols.extend(self.symbols.iter().cloned());
        (Alphabet { symbols }, ids, offset)
    }
}

/// A finite word over an [`Alphabet`], compared co-lexicographically:
/// from the last symbol backwards, with a proper suffix preceding every
/// extension of it. The empty word is the minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Sym>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_syms(syms: impl Into<Vec<Sym>>) -> Word {
        Word(syms.into())
    }

    /// Parses a single-character-symbol literal, e.g. `"acc"` over `a,c,d,f`.
    pub fn parse(ab: &Alphabet, text: &str) -> Result<Word> {
        let mut syms = Vec::new();
        for ch in text.chars() {
            let tok = ch.to_string();
            let id = ab
                .id(&tok)
                .ok_or_else(|| Error::invalid(format!("symbol {tok:?} not in alphabet")))?;
            syms.push(id);
        }
        Ok(Word(syms))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn syms(&self) -> &[Sym] {
        &self.0
    }

    /// Last symbol, i.e. `end(w)`; `None` encodes `#` for the empty word.
    pub fn last(&self) -> Option<Sym> {
        self.0.last().copied()
    }

    pub fn push(&mut self, s: Sym) {
        self.0.push(s);
    }

    /// `self` followed by one more symbol.
    pub fn extended(&self, s: Sym) -> Word {
        let mut v = self.0.clone();
        v.push(s);
        Word(v)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Is `self` a suffix of `other` (not necessarily proper)?
    pub fn is_suffix_of(&self, other: &Word) -> bool {
        self.0.len() <= other.0.len() && other.0[other.0.len() - self.0.len()..] == self.0[..]
    }

    /// Renders the word with the alphabet's tokens; `ε` for the empty word.
    pub fn display(&self, ab: &Alphabet) -> String {
        if self.0.is_empty() {
            return "ε".to_string();
        }
        let sep = if ab.single_char() { "" } else { " " };
        self.0
            .iter()
            .map(|&s| ab.name(s))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        for i in 1..=a.len().min(b.len()) {
            match a[a.len() - i].cmp(&b[b.len() - i]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
