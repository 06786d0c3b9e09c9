//! Free noncommutative polynomials and their tensor squares.
//!
//! `NcPoly` is a finite map from words to non-zero rational coefficients;
//! `TensorPoly` does the same for pairs of words. Iteration order of the
//! underlying maps is deglex, so every derived output is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::scalar::{self, Scalar};
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        NcPoly::from_term(scalar::one(), Word::empty())
    }

    pub fn word(w: Word) -> Self {
        NcPoly::from_term(scalar::one(), w)
    }

    pub fn from_term(c: Scalar, w: Word) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(c, w);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, c: Scalar, w: Word) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(-c.clone(), w.clone());
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(-c.clone(), w.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        let mut out = NcPoly::zero();
        for (w, k) in &self.terms {
            out.add_term(k.clone() * c, w.clone());
        }
        out
    }

    /// Free (unreduced) product in the free algebra.
    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(a.clone() * b.clone(), u.concat(v));
            }
        }
        out
    }

    /// The deglex-greatest term, when the polynomial is non-zero.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Largest degree over the support; 0 for the zero polynomial.
    pub fn max_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|w| w.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = if scalar::is_negative(c) {
                -c.clone()
            } else {
                c.clone()
            };
            if i == 0 {
                if scalar::is_negative(c) {
                    out.push_str("- ");
                }
            } else if scalar::is_negative(c) {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&term_str(&mag, w, names));
        }
        out
    }
}

/// Free noncommutative multiplication of two polynomials.
pub fn nc_mul(p: &NcPoly, q: &NcPoly) -> NcPoly {
    p.mul(q)
}

fn term_str(mag: &Scalar, w: &Word, names: &[String]) -> String {
    use num_traits::One;
    if w.is_empty() {
        scalar::scalar_str(mag)
    } else if mag.is_one() {
        w.display(names)
    } else {
        format!("{} {}", scalar::scalar_str(mag), w.display(names))
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self
            .terms
            .keys()
            .flat_map(|w| w.0.iter())
            .copied()
            .max()
            .map(|m| m as usize + 1)
            .unwrap_or(0);
        let names: Vec<String> = (0..max).map(|i| format!("g{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    pub fn unit() -> Self {
        TensorPoly::from_term(scalar::one(), Word::empty(), Word::empty())
    }

    pub fn from_term(c: Scalar, l: Word, r: Word) -> Self {
        let mut t = TensorPoly::zero();
        t.add_term(c, l, r);
        t
    }

    /// `p ⊗ q` for two free polynomials.
    pub fn tensor(p: &NcPoly, q: &NcPoly) -> Self {
        let mut t = TensorPoly::zero();
        for (u, a) in p.iter() {
            for (v, b) in q.iter() {
                t.add_term(a.clone() * b.clone(), u.clone(), v.clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, l: &Word, r: &Word) -> Scalar {
        self.terms
            .get(&(l.clone(), r.clone()))
            .cloned()
            .unwrap_or_else(scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Word, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, c: Scalar, l: Word, r: Word) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        let cur = self.terms.remove(&key);
        let sum = match cur {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(c.clone(), l.clone(), r.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(-c.clone(), l.clone(), r.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero();
        }
        let mut out = TensorPoly::zero();
        for ((l, r), k) in &self.terms {
            out.add_term(k.clone() * c, l.clone(), r.clone());
        }
        out
    }

    /// Componentwise free product: `(u⊗v)·(u'⊗v') = uu' ⊗ vv'`.
    pub fn mul_free(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((l1, r1), a) in &self.terms {
            for ((l2, r2), b) in &other.terms {
                out.add_term(a.clone() * b.clone(), l1.concat(l2), r1.concat(r2));
            }
        }
        out
    }

    /// Largest total degree `deg l + deg r` over the support.
    pub fn max_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|(l, r)| l.degree() + r.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((l, r), c)) in self.terms.iter().enumerate() {
            let mag = if scalar::is_negative(c) {
                -c.clone()
            } else {
                c.clone()
            };
            if i == 0 {
                if scalar::is_negative(c) {
                    out.push_str("- ");
                }
            } else if scalar::is_negative(c) {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            use num_traits::One;
            if !mag.is_one() {
                out.push_str(&scalar::scalar_str(&mag));
                out.push(' ');
            }
            out.push_str(&format!("{} (x) {}", l.display(names), r.display(names)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_i64;
    use proptest::prelude::*;

    fn w(letters: &[u32]) -> Word {
        Word::from_slice(letters)
    }

    #[test]
    fn distributivity_example() {
        // (x + y)·x = x² + yx
        let x = NcPoly::word(w(&[0]));
        let y = NcPoly::word(w(&[1]));
        let p = x.add(&y);
        let got = nc_mul(&p, &x);
        let mut expect = NcPoly::word(w(&[0, 0]));
        expect.add_term(scalar::one(), w(&[1, 0]));
        assert_eq!(got, expect);
    }

    #[test]
    fn scalar_bilinearity_and_annihilator() {
        let p = NcPoly::from_term(from_i64(2), w(&[0]));
        let q = NcPoly::from_term(from_i64(3), w(&[1]));
        assert_eq!(nc_mul(&p, &q), NcPoly::from_term(from_i64(6), w(&[0, 1])));
        assert_eq!(nc_mul(&p, &NcPoly::zero()), NcPoly::zero());
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let mut p = NcPoly::word(w(&[0]));
        p.add_term(from_i64(-1), w(&[0]));
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn tensor_bilinear_product() {
        let t = TensorPoly::from_term(from_i64(2), w(&[0]), w(&[1]));
        let s = TensorPoly::from_term(from_i64(3), w(&[1]), w(&[]));
        let got = t.mul_free(&s);
        assert_eq!(got, TensorPoly::from_term(from_i64(6), w(&[0, 1]), w(&[1])));
    }

    fn poly_strategy() -> impl Strategy<Value = NcPoly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..2, 0..3), -3i64..4),
            0..4,
        )
        .prop_map(|terms| {
            let mut p = NcPoly::zero();
            for (letters, c) in terms {
                p.add_term(from_i64(c), Word(letters));
            }
            p
        })
    }

    proptest! {
        // Ring axioms on randomized small polynomials.
        #[test]
        fn mul_associative(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
            prop_assert_eq!(nc_mul(&nc_mul(&p, &q), &r), nc_mul(&p, &nc_mul(&q, &r)));
        }

        #[test]
        fn mul_distributes(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
            prop_assert_eq!(
                nc_mul(&p, &q.add(&r)),
                nc_mul(&p, &q).add(&nc_mul(&p, &r))
            );
        }

        #[test]
        fn unit_law(p in poly_strategy()) {
            prop_assert_eq!(nc_mul(&p, &NcPoly::one()), p.clone());
            prop_assert_eq!(nc_mul(&NcPoly::one(), &p), p);
        }
    }
}
