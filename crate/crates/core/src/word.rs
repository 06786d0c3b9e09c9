//! Words over a generator alphabet.
//!
//! A word is a finite sequence of generator indices; the empty word is the
//! multiplicative identity. The intrinsic `Ord` is degree-first (weight 1
//! per letter), then lexicographic by index, which is the deglex order with
//! generator precedence equal to index order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(i: u32) -> Self {
        Word(vec![i])
    }

    pub fn from_slice(letters: &[u32]) -> Self {
        Word(letters.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree with unit weights.
    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// First position at which `pattern` occurs as a contiguous subword.
    pub fn find_subword(&self, pattern: &Word) -> Option<usize> {
        if pattern.is_empty() || pattern.len() > self.len() {
            return None;
        }
        (0..=self.len() - pattern.len()).find(|&i| self.0[i..i + pattern.len()] == pattern.0[..])
    }

    pub fn contains_subword(&self, pattern: &Word) -> bool {
        self.find_subword(pattern).is_some()
    }

    /// Splits as `(prefix, suffix)` around an occurrence at `pos` of length `len`.
    pub fn split_around(&self, pos: usize, len: usize) -> (Word, Word) {
        (
            Word(self.0[..pos].to_vec()),
            Word(self.0[pos + len..].to_vec()),
        )
    }

    /// Renders as `.`-joined generator names; the empty word is `1`.
    pub fn display(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&i| names[i as usize].as_str())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Parses a `.`-joined word; `1` denotes the empty word.
    pub fn parse(text: &str, names: &[String]) -> Result<Word> {
        let text = text.trim();
        if text == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for part in text.split('.') {
            let idx = names
                .iter()
                .position(|n| n == part)
                .ok_or_else(|| Error::UnknownSymbol(part.to_string()))?;
            letters.push(idx as u32);
        }
        Ok(Word(letters))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("g{i}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subword_search() {
        let w = Word::from_slice(&[1, 0, 0, 0]);
        assert_eq!(w.find_subword(&Word::from_slice(&[0, 0, 0])), Some(1));
        assert_eq!(w.find_subword(&Word::from_slice(&[1, 1])), None);
        assert!(!w.contains_subword(&Word::empty()));
    }

    #[test]
    fn intrinsic_order_is_deglex() {
        let x = Word::gen(0);
        let y = Word::gen(1);
        let xy = x.concat(&y);
        let yx = y.concat(&x);
        assert!(x < xy); // degree first
        assert!(xy < yx); // lex tie-break
        assert_eq!(xy.cmp(&xy), Ordering::Equal);
    }
}
