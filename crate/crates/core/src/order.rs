//! The deglex monomial order.
//!
//! Generator precedence is the index order of the alphabet (parsers and the
//! catalog number generators by their declared precedence). Weights default
//! to 1 and enter only the degree comparison; ties are broken left-to-right
//! by generator index.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Vec<u32>,
}

impl MonomialOrder {
    /// Deglex with unit weights over `n` generators.
    pub fn deglex(n: usize) -> Self {
        MonomialOrder {
            weights: vec![1; n],
        }
    }

    pub fn with_weights(weights: Vec<u32>) -> Self {
        MonomialOrder { weights }
    }

    pub fn alphabet_size(&self) -> usize {
        self.weights.len()
    }

    pub fn degree(&self, w: &Word) -> Result<u32> {
        let mut d = 0u32;
        for &g in &w.0 {
            let wt = self
                .weights
                .get(g as usize)
                .ok_or_else(|| Error::UnknownSymbol(format!("generator index {g}")))?;
            d += wt;
        }
        Ok(d)
    }

    /// Total deglex comparison. Multiplicative: `u < v` implies
    /// `wu < wv` and `uw < vw`.
    pub fn compare(&self, a: &Word, b: &Word) -> Result<Ordering> {
        let da = self.degree(a)?;
        let db = self.degree(b)?;
        Ok(da.cmp(&db).then_with(|| a.0.cmp(&b.0)))
    }
}

/// Standalone deglex comparison under a given order.
pub fn deglex_compare(a: &Word, b: &Word, order: &MonomialOrder) -> Result<Ordering> {
    order.compare(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(letters: &[u32]) -> Word {
        Word::from_slice(letters)
    }

    #[test]
    fn spec_cases() {
        let order = MonomialOrder::deglex(2);
        // xy vs yx: equal degree, lex tie-break
        assert_eq!(
            deglex_compare(&w(&[0, 1]), &w(&[1, 0]), &order).unwrap(),
            Ordering::Less
        );
        // x vs xy: degree decides
        assert_eq!(
            deglex_compare(&w(&[0]), &w(&[0, 1]), &order).unwrap(),
            Ordering::Less
        );
        // reflexivity
        assert_eq!(
            deglex_compare(&w(&[1, 0, 1]), &w(&[1, 0, 1]), &order).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn unknown_generator_rejected() {
        let order = MonomialOrder::deglex(2);
        assert!(deglex_compare(&w(&[5]), &w(&[0]), &order).is_err());
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u32..3, 0..4).prop_map(Word)
    }

    proptest! {
        // Multiplicativity: u < v implies wu < wv and uw < vw.
        #[test]
        fn multiplicative(u in word_strategy(), v in word_strategy(), m in word_strategy()) {
            let order = MonomialOrder::deglex(3);
            let c = order.compare(&u, &v).unwrap();
            prop_assert_eq!(order.compare(&m.concat(&u), &m.concat(&v)).unwrap(), c);
            prop_assert_eq!(order.compare(&u.concat(&m), &v.concat(&m)).unwrap(), c);
        }

        // Totality and antisymmetry against the intrinsic Ord when weights are 1.
        #[test]
        fn agrees_with_intrinsic(u in word_strategy(), v in word_strategy()) {
            let order = MonomialOrder::deglex(3);
            prop_assert_eq!(order.compare(&u, &v).unwrap(), u.cmp(&v));
        }
    }
}
