//! Linear endomorphisms of a basis window, stored column-wise as exact
//! rational images of basis words.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::poly::NcPoly;
use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct LinearEndo {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// `images[j]` is the image of `words[j]`, supported on the window.
    images: Vec<NcPoly>,
}

impl LinearEndo {
    pub fn new(words: Vec<Word>, images: Vec<NcPoly>) -> Result<Self> {
        if words.len() != images.len() {
            return Err(Error::Config("endomorphism shape mismatch".into()));
        }
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Ok(LinearEndo {
            words,
            index,
            images,
        })
    }

    pub fn identity(words: Vec<Word>) -> Self {
        let images = words.iter().map(|w| NcPoly::word(w.clone())).collect();
        LinearEndo::new(words, images).unwrap()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn image_of_index(&self, j: usize) -> &NcPoly {
        &self.images[j]
    }

    pub fn apply_word(&self, w: &Word) -> Result<&NcPoly> {
        let j = self
            .index
            .get(w)
            .ok_or_else(|| Error::WindowOverflow(format!("word {w} outside the endo window")))?;
        Ok(&self.images[*j])
    }

    pub fn apply(&self, p: &NcPoly) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (w, c) in p.iter() {
            out = out.add(&self.apply_word(w)?.scale(c));
        }
        Ok(out)
    }

    pub fn compose(&self, inner: &LinearEndo) -> Result<LinearEndo> {
        let mut images = Vec::with_capacity(self.words.len());
        for w in &inner.words {
            images.push(self.apply(inner.apply_word(w)?)?);
        }
        LinearEndo::new(inner.words.clone(), images)
    }

    fn column(&self, j: usize) -> SparseVec {
        let mut entries: Vec<(usize, crate::scalar::Scalar)> = Vec::new();
        for (w, c) in self.images[j].iter() {
            if let Some(i) = self.index.get(w) {
                entries.push((*i, c.clone()));
            }
        }
        entries.sort_by_key(|(i, _)| *i);
        entries
    }

    pub fn rank(&self) -> usize {
        linalg::rank((0..self.words.len()).map(|j| self.column(j)))
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.words.len()
    }

    /// Extends declared antipode data anti-multiplicatively over a basis
    /// window: `S(g_1 ... g_k) = S(g_k) ... S(g_1)`, reduced. Table-backed
    /// presentations carry per-symbol images, which extend linearly.
    pub fn from_antipode_data(pres: &Presentation, window: u32) -> Result<LinearEndo> {
        let data = pres
            .antipode_data
            .as_ref()
            .ok_or_else(|| Error::Precondition("presentation has no declared antipode".into()))?;
        let basis = if pres.is_exact() {
            pres.full_basis()?
        } else {
            pres.basis_window(window)?
        };
        let mut images = Vec::with_capacity(basis.words.len());
        for w in &basis.words {
            if pres.is_table() {
                let img = data
                    .get(w.0[0] as usize)
                    .ok_or_else(|| Error::Config("antipode data shape mismatch".into()))?;
                images.push(img.clone());
            } else {
                let mut acc = pres.unit_poly();
                for &g in w.0.iter().rev() {
                    let img = data
                        .get(g as usize)
                        .ok_or_else(|| Error::Config("antipode data shape mismatch".into()))?;
                    acc = pres.multiply(&acc, img)?;
                }
                images.push(acc);
            }
        }
        LinearEndo::new(basis.words, images)
    }
}
