//! The quotient coalgebra `B⊘B = (B⊗B)/(B⊗B)·B⁺` and the canonical map
//! `i_B : B → B⊘B, b ↦ b⊘1`.
//!
//! For finite-dimensional presentations the quotient is exact. Otherwise it
//! is computed inside a degree window `D = d + slack`: relation vectors
//! `(u⊗v)·Δ(m − ε(m)1)` are assembled for all basis triples whose full
//! expansion stays inside the window and eliminated exactly over the
//! rationals. Elimination pivots on the deglex-greatest tensor pair, so the
//! canonical coset representatives have minimal degree. Per-degree quotient
//! dimensions are compared at `slack` and `slack + 1` to record a stability
//! signal for the truncation.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use crate::endo::LinearEndo;
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, Pivot, SparseVec};
use crate::poly::{NcPoly, TensorPoly};
use crate::presentation::Presentation;
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// An element of the windowed quotient, as coordinates over the canonical
/// coset basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OslashElement {
    pub coords: SparseVec,
}

impl OslashElement {
    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> OslashElement {
        OslashElement {
            coords: linalg::sparse_scale(&self.coords, c),
        }
    }

    pub fn add(&self, other: &OslashElement) -> OslashElement {
        OslashElement {
            coords: linalg::sparse_axpy(&self.coords, &scalar::one(), &other.coords),
        }
    }

    pub fn sub(&self, other: &OslashElement) -> OslashElement {
        OslashElement {
            coords: linalg::sparse_axpy(&self.coords, &-scalar::one(), &other.coords),
        }
    }
}

/// An element of `(B⊘B) ⊗ (B⊘B)` over pairs of canonical coset indices.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OslashTensor {
    pub terms: BTreeMap<(usize, usize), Scalar>,
}

impl OslashTensor {
    pub fn add_term(&mut self, key: (usize, usize), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }
}

#[derive(Clone, Debug)]
pub struct IbProbe {
    pub injective: bool,
    pub surjective: bool,
    /// Endomorphism solving `1⊘y = S(y)⊘1`, present when `i_B` is
    /// surjective on the window; images use least-degree basis words.
    pub section: Option<LinearEndo>,
    pub kernel_dimension: usize,
}

#[derive(Clone, Debug)]
pub struct OslashSpace {
    pres: Arc<Presentation>,
    /// Claimed degree `d` (canonical cosets up to this degree are reported).
    target_degree: u32,
    slack: u32,
    /// Full window degree `D`; equals the maximal pair degree in exact mode.
    window: u32,
    exact: bool,
    /// Windowed runs compare per-degree dimensions at slack and slack + 1.
    stable: Option<bool>,
    degenerate: bool,
    basis_words: Vec<Word>,
    pairs: Vec<(Word, Word)>,
    pair_index: HashMap<(Word, Word), usize>,
    canonical: Vec<usize>,
    canonical_rank: HashMap<usize, usize>,
    /// Pivot pair index → expansion over canonical coordinates.
    expansions: BTreeMap<usize, SparseVec>,
}

struct CoreBuild {
    basis_words: Vec<Word>,
    pairs: Vec<(Word, Word)>,
    pair_index: HashMap<(Word, Word), usize>,
    echelon: Echelon,
    any_relation: bool,
}

const PAIR_GUARD: usize = 200_000;

impl OslashSpace {
    /// Builds the quotient for `pres` at window degree `d` with the given
    /// slack; exact presentations ignore the window entirely.
    pub fn build(pres: Arc<Presentation>, d: u32, slack: u32) -> Result<OslashSpace> {
        if let Some(sys) = pres.system() {
            if !sys.is_certified() {
                return Err(Error::Precondition(
                    "presentation reduction system is not certified confluent".into(),
                ));
            }
        }
        let exact = pres.is_exact();
        let window = if exact { u32::MAX } else { d + slack };
        let core = Self::build_core(&pres, window)?;
        let stable = if exact {
            None
        } else {
            let alt = Self::build_core(&pres, d + slack + 1)?;
            let dims_a = Self::dims_from_core(&core, d);
            let dims_b = Self::dims_from_core(&alt, d);
            Some(dims_a == dims_b)
        };

        let rref = core.echelon.rref_rows();
        let canonical: Vec<usize> = (0..core.pairs.len())
            .filter(|i| !rref.contains_key(i))
            .collect();
        let canonical_rank: HashMap<usize, usize> = canonical
            .iter()
            .enumerate()
            .map(|(rank, idx)| (*idx, rank))
            .collect();
        let mut expansions = BTreeMap::new();
        for (p, row) in rref {
            let mut exp: SparseVec = Vec::new();
            for (j, c) in row {
                if j == p {
                    continue;
                }
                let rank = canonical_rank[&j];
                exp.push((rank, -c));
            }
            exp.sort_by_key(|(i, _)| *i);
            expansions.insert(p, exp);
        }
        let window = if exact {
            core.pairs
                .iter()
                .map(|(l, r)| l.degree() + r.degree())
                .max()
                .unwrap_or(0)
        } else {
            window
        };
        Ok(OslashSpace {
            pres,
            target_degree: d,
            slack,
            window,
            exact,
            stable,
            degenerate: !core.any_relation,
            basis_words: core.basis_words,
            pairs: core.pairs,
            pair_index: core.pair_index,
            canonical,
            canonical_rank,
            expansions,
        })
    }

    fn build_core(pres: &Presentation, window: u32) -> Result<CoreBuild> {
        let exact = pres.is_exact();
        let basis = if exact {
            pres.full_basis()?
        } else {
            pres.basis_window(window)?
        };
        let mut pairs: Vec<(Word, Word)> = Vec::new();
        for u in &basis.words {
            for v in &basis.words {
                if exact || u.degree() + v.degree() <= window {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
        pairs.sort_by(|a, b| {
            (a.0.degree() + a.1.degree(), &a.0, &a.1).cmp(&(
                b.0.degree() + b.1.degree(),
                &b.0,
                &b.1,
            ))
        });
        if pairs.len() > PAIR_GUARD {
            return Err(Error::Resource(format!(
                "window holds {} tensor pairs (guard {PAIR_GUARD})",
                pairs.len()
            )));
        }
        let pair_index: HashMap<(Word, Word), usize> = pairs
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        let mut echelon = Echelon::new(Pivot::Max);
        let mut any_relation = false;
        let unit = pres.unit_poly();
        let delta_unit = pres.delta_element(&unit)?;
        // relation vectors (u ⊗ v)·Δ(m − ε(m)·1) over the window
        for m in &basis.words {
            if !pres.is_table() && m.is_empty() {
                continue;
            }
            let pm = NcPoly::word(m.clone());
            let dm = pres.delta_element(&pm)?;
            let em = pres.epsilon_element(&pm)?;
            let rel_delta = dm.sub(&delta_unit.scale(&em));
            if rel_delta.is_zero() {
                continue;
            }
            let min_deg = rel_delta
                .iter()
                .map(|((l, r), _)| l.degree() + r.degree())
                .min()
                .unwrap_or(0);
            for u in &basis.words {
                for v in &basis.words {
                    if !exact && u.degree() + v.degree() + min_deg > window {
                        continue;
                    }
                    let uv = TensorPoly::from_term(scalar::one(), u.clone(), v.clone());
                    let expanded = pres.multiply_tensor(&uv, &rel_delta)?;
                    let mut vec: BTreeMap<usize, Scalar> = BTreeMap::new();
                    let mut in_window = true;
                    for ((l, r), c) in expanded.iter() {
                        match pair_index.get(&(l.clone(), r.clone())) {
                            Some(&idx) => {
                                let entry = vec.entry(idx).or_insert_with(scalar::zero);
                                *entry += c.clone();
                            }
                            None => {
                                in_window = false;
                                break;
                            }
                        }
                    }
                    if !in_window {
                        continue;
                    }
                    let row = linalg::sparse_from_map(vec);
                    if !row.is_empty() {
                        any_relation = true;
                        echelon.insert(row);
                    }
                }
            }
        }
        Ok(CoreBuild {
            basis_words: basis.words,
            pairs,
            pair_index,
            echelon,
            any_relation,
        })
    }

    fn dims_from_core(core: &CoreBuild, up_to: u32) -> Vec<usize> {
        let pivots: std::collections::HashSet<usize> = core.echelon.pivots().collect();
        let mut dims = vec![0usize; up_to as usize + 1];
        for (i, (l, r)) in core.pairs.iter().enumerate() {
            let deg = l.degree() + r.degree();
            if deg <= up_to && !pivots.contains(&i) {
                dims[deg as usize] += 1;
            }
        }
        dims
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn target_degree(&self) -> u32 {
        self.target_degree
    }

    pub fn slack(&self) -> u32 {
        self.slack
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn is_stable(&self) -> Option<bool> {
        self.stable
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn basis_words(&self) -> &[Word] {
        &self.basis_words
    }

    /// Canonical cosets, ascending by (total degree, left word, right word).
    pub fn canonical_pairs(&self) -> impl Iterator<Item = &(Word, Word)> {
        self.canonical.iter().map(|&i| &self.pairs[i])
    }

    pub fn canonical_pair(&self, rank: usize) -> &(Word, Word) {
        &self.pairs[self.canonical[rank]]
    }

    /// Filtration degree of a canonical coset.
    pub fn coset_degree(&self, rank: usize) -> u32 {
        let (l, r) = self.canonical_pair(rank);
        l.degree() + r.degree()
    }

    pub fn coset_label(&self, rank: usize) -> String {
        let (l, r) = self.canonical_pair(rank);
        let names = self.pres.symbol_names();
        format!("{}⊘{}", l.display(names), r.display(names))
    }

    /// Full number of canonical cosets carried in the window.
    pub fn dim_full(&self) -> usize {
        self.canonical.len()
    }

    /// Number of canonical cosets of degree at most `d` (the claimed part);
    /// equals `dim_full` in exact mode.
    pub fn dim(&self) -> usize {
        if self.exact {
            return self.dim_full();
        }
        (0..self.canonical.len())
            .filter(|&r| self.coset_degree(r) <= self.target_degree)
            .count()
    }

    pub fn dims_per_degree(&self) -> Vec<usize> {
        let top = (0..self.canonical.len())
            .map(|r| self.coset_degree(r))
            .max()
            .unwrap_or(0);
        let mut dims = vec![0usize; top as usize + 1];
        for r in 0..self.canonical.len() {
            dims[self.coset_degree(r) as usize] += 1;
        }
        dims
    }

    /// A spanning set of the relation space, over raw pair indices
    /// (row = pivot pair − its canonical expansion).
    pub fn relation_basis(&self) -> Vec<SparseVec> {
        let mut rows = Vec::with_capacity(self.expansions.len());
        for (p, exp) in &self.expansions {
            let mut row: SparseVec = vec![(*p, scalar::one())];
            for (rank, c) in exp {
                row.push((self.canonical[*rank], -c.clone()));
            }
            row.sort_by_key(|(i, _)| *i);
            rows.push(row);
        }
        rows
    }

    pub fn pair_words(&self, raw_index: usize) -> &(Word, Word) {
        &self.pairs[raw_index]
    }

    /// Canonical coordinates of a tensor polynomial. Factors are reduced
    /// first; any monomial outside the window is an error.
    pub fn reduce_tensor(&self, t: &TensorPoly) -> Result<OslashElement> {
        // normalize both tensor factors
        let mut normalized: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
        for ((l, r), c) in t.iter() {
            let lp = self.pres.reduce(&NcPoly::word(l.clone()))?;
            let rp = self.pres.reduce(&NcPoly::word(r.clone()))?;
            for (lw, lc) in lp.iter() {
                for (rw, rc) in rp.iter() {
                    let key = (lw.clone(), rw.clone());
                    let add = c.clone() * lc * rc;
                    let sum = match normalized.remove(&key) {
                        Some(old) => old + add,
                        None => add,
                    };
                    if !sum.is_zero() {
                        normalized.insert(key, sum);
                    }
                }
            }
        }
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for ((l, r), c) in normalized {
            let idx = match self.pair_index.get(&(l.clone(), r.clone())) {
                Some(&i) => i,
                None => {
                    return Err(Error::WindowOverflow(format!(
                        "tensor monomial of degree {} exceeds window {}",
                        l.degree() + r.degree(),
                        self.window
                    )))
                }
            };
            match self.expansions.get(&idx) {
                Some(exp) => {
                    for (rank, e) in exp {
                        let entry = out.entry(*rank).or_insert_with(scalar::zero);
                        *entry += c.clone() * e;
                    }
                }
                None => {
                    let rank = self.canonical_rank[&idx];
                    let entry = out.entry(rank).or_insert_with(scalar::zero);
                    *entry += c;
                }
            }
        }
        Ok(OslashElement {
            coords: linalg::sparse_from_map(out),
        })
    }

    /// The class of `1⊘1`.
    pub fn unit_element(&self) -> Result<OslashElement> {
        let unit = self.pres.unit_poly();
        self.reduce_tensor(&TensorPoly::tensor(&unit, &unit))
    }

    /// `i_B(p) = [p ⊘ 1]`.
    pub fn map_ib(&self, p: &NcPoly) -> Result<OslashElement> {
        let reduced = self.pres.reduce(p)?;
        self.reduce_tensor(&TensorPoly::tensor(&reduced, &self.pres.unit_poly()))
    }

    fn ib_columns(&self) -> Result<Vec<SparseVec>> {
        self.basis_words
            .iter()
            .map(|b| Ok(self.map_ib(&NcPoly::word(b.clone()))?.coords))
            .collect()
    }

    /// Exact nullspace of `i_B` on the basis, as polynomials.
    pub fn kernel_ib(&self) -> Result<Vec<NcPoly>> {
        if !self.exact {
            return Err(Error::Unsupported(
                "kernel of the canonical map requires an exact (finite-dimensional) space".into(),
            ));
        }
        let cols = self.ib_columns()?;
        // transpose into rows over the word coordinates
        let mut rows: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col {
                rows.entry(*i).or_default().insert(j, c.clone());
            }
        }
        let basis = linalg::nullspace(
            rows.into_values().map(linalg::sparse_from_map),
            self.basis_words.len(),
        );
        Ok(basis
            .into_iter()
            .map(|v| {
                let mut p = NcPoly::zero();
                for (j, c) in v {
                    p.add_term(c, self.basis_words[j].clone());
                }
                p
            })
            .collect())
    }

    /// Injectivity/surjectivity probes for `i_B` on the window, with a
    /// section solving `1⊘y = S(y)⊘1` when the map is surjective.
    /// Windowed answers are window-relative, never global claims.
    pub fn probe_ib(&self) -> Result<IbProbe> {
        let cols = self.ib_columns()?;
        let mut rows: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col {
                rows.entry(*i).or_default().insert(j, c.clone());
            }
        }
        let kernel = linalg::nullspace(
            rows.into_values().map(linalg::sparse_from_map),
            self.basis_words.len(),
        );
        let injective = kernel.is_empty();
        let rank = linalg::rank(cols.iter().cloned());
        let surjective = rank == self.dim_full();
        let section = if surjective {
            let unit = self.pres.unit_poly();
            let mut images = Vec::with_capacity(self.basis_words.len());
            let mut ok = true;
            for y in &self.basis_words {
                let target =
                    self.reduce_tensor(&TensorPoly::tensor(&unit, &NcPoly::word(y.clone())))?;
                match linalg::solve_columns(&cols, &target.coords) {
                    Some(sol) => {
                        let mut img = NcPoly::zero();
                        for (j, c) in sol {
                            img.add_term(c, self.basis_words[j].clone());
                        }
                        images.push(img);
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                Some(LinearEndo::new(self.basis_words.clone(), images)?)
            } else {
                None
            }
        } else {
            None
        };
        Ok(IbProbe {
            injective,
            surjective,
            section,
            kernel_dimension: kernel.len(),
        })
    }

    /// `Δ_⊘(x⊘y) = (x₁⊘y₂) ⊗ (x₂⊘y₁)`, computed on canonical
    /// representatives and re-reduced.
    pub fn comult(&self, e: &OslashElement) -> Result<OslashTensor> {
        let mut out = OslashTensor::default();
        for (rank, c) in &e.coords {
            let (x, y) = self.canonical_pair(*rank).clone();
            let dx = self.pres.delta_element(&NcPoly::word(x))?;
            let dy = self.pres.delta_element(&NcPoly::word(y))?;
            for ((x1, x2), cx) in dx.iter() {
                for ((y1, y2), cy) in dy.iter() {
                    let left = self.reduce_tensor(&TensorPoly::from_term(
                        scalar::one(),
                        x1.clone(),
                        y2.clone(),
                    ))?;
                    let right = self.reduce_tensor(&TensorPoly::from_term(
                        scalar::one(),
                        x2.clone(),
                        y1.clone(),
                    ))?;
                    let coeff = c.clone() * cx * cy;
                    for (k1, a) in &left.coords {
                        for (k2, b) in &right.coords {
                            out.add_term((*k1, *k2), coeff.clone() * a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `ε_⊘(x⊘y) = ε(x)ε(y)` on canonical representatives.
    pub fn counit(&self, e: &OslashElement) -> Result<Scalar> {
        let mut total = scalar::zero();
        for (rank, c) in &e.coords {
            let (x, y) = self.canonical_pair(*rank);
            let ex = self.pres.epsilon_element(&NcPoly::word(x.clone()))?;
            let ey = self.pres.epsilon_element(&NcPoly::word(y.clone()))?;
            total += c.clone() * ex * ey;
        }
        Ok(total)
    }

    /// Left action `(a⊗b)·(x⊘y) = ax⊘by` of a tensor pair on an element.
    pub fn act(&self, a: &NcPoly, b: &NcPoly, e: &OslashElement) -> Result<OslashElement> {
        let mut out = OslashElement::default();
        for (rank, c) in &e.coords {
            let (x, y) = self.canonical_pair(*rank).clone();
            let l = self.pres.multiply(a, &NcPoly::word(x))?;
            let r = self.pres.multiply(b, &NcPoly::word(y))?;
            let t = TensorPoly::tensor(&l, &r).scale(c);
            out = out.add(&self.reduce_tensor(&t)?);
        }
        Ok(out)
    }
}
