//! Sparse exact linear algebra over the rationals.
//!
//! All elimination is done incrementally on sparse rows. Two pivot policies
//! are used: `Max` (pivot at the greatest coordinate, used to quotient by a
//! relation space, so canonical representatives sit at the small end) and
//! `Min` (pivot at the earliest coordinate, used to canonicalize solution
//! spaces). Reduced row echelon form is unique for a fixed coordinate order,
//! so every output is independent of assembly order.

use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sorted sparse vector with no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_map(map: BTreeMap<usize, Scalar>) -> SparseVec {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn sparse_get(v: &SparseVec, idx: usize) -> Scalar {
    match v.binary_search_by_key(&idx, |(i, _)| *i) {
        Ok(p) => v[p].1.clone(),
        Err(_) => Scalar::zero(),
    }
}

pub fn sparse_scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, a)| (*i, a.clone() * c)).collect()
}

/// `dst + c * src`, merging sorted supports.
pub fn sparse_axpy(dst: &SparseVec, c: &Scalar, src: &SparseVec) -> SparseVec {
    if c.is_zero() || src.is_empty() {
        return dst.clone();
    }
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        match (dst.get(i), src.get(j)) {
            (Some((di, dc)), Some((si, sc))) => {
                if di < si {
                    out.push((*di, dc.clone()));
                    i += 1;
                } else if si < di {
                    out.push((*si, sc.clone() * c));
                    j += 1;
                } else {
                    let sum = dc.clone() + sc.clone() * c;
                    if !sum.is_zero() {
                        out.push((*di, sum));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((di, dc)), None) => {
                out.push((*di, dc.clone()));
                i += 1;
            }
            (None, Some((si, sc))) => {
                out.push((*si, sc.clone() * c));
                j += 1;
            }
            (None, None) => break,
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pivot {
    /// Pivot at the greatest coordinate of each row.
    Max,
    /// Pivot at the earliest coordinate of each row.
    Min,
}

/// Incremental echelon form with forward elimination only. Rows are keyed by
/// pivot and normalized to pivot value 1; the remaining support of a row may
/// still mention other pivots (no back-substitution), which keeps rows as
/// sparse as they were inserted. `expand` resolves the cascade when full
/// normal forms are needed.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
    pivot: Option<Pivot>,
}

impl Echelon {
    pub fn new(pivot: Pivot) -> Self {
        Echelon {
            rows: BTreeMap::new(),
            pivot: Some(pivot),
        }
    }

    fn policy(&self) -> Pivot {
        self.pivot.unwrap_or(Pivot::Max)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, idx: usize) -> bool {
        self.rows.contains_key(&idx)
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec> {
        self.rows.get(&pivot)
    }

    fn lead(&self, v: &SparseVec) -> Option<usize> {
        match self.policy() {
            Pivot::Max => v.last().map(|(i, _)| *i),
            Pivot::Min => v.first().map(|(i, _)| *i),
        }
    }

    /// Eliminates existing pivots from the leading position of `v` until the
    /// lead is pivot-free (or the vector vanishes).
    pub fn head_reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some(lead) = self.lead(&v) {
            match self.rows.get(&lead) {
                Some(row) => {
                    let c = -sparse_get(&v, lead);
                    v = sparse_axpy(&v, &c, row);
                }
                None => break,
            }
        }
        v
    }

    /// Inserts a vector; returns `true` when it enlarged the row space.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.head_reduce(v);
        let Some(lead) = self.lead(&v) else {
            return false;
        };
        let inv = sparse_get(&v, lead).recip();
        let row = sparse_scale(&v, &inv);
        self.rows.insert(lead, row);
        true
    }

    /// Fully reduces `v` modulo the row space (cascading through residual
    /// pivots in row supports). The result has no pivot coordinates.
    pub fn reduce_full(&self, v: SparseVec) -> SparseVec {
        // Cascade in pivot-priority order; each substitution only introduces
        // coordinates strictly beyond the eliminated one.
        let mut work = v;
        loop {
            let hit = match self.policy() {
                Pivot::Max => work
                    .iter()
                    .rev()
                    .find(|(i, _)| self.rows.contains_key(i))
                    .map(|(i, _)| *i),
                Pivot::Min => work
                    .iter()
                    .find(|(i, _)| self.rows.contains_key(i))
                    .map(|(i, _)| *i),
            };
            let Some(idx) = hit else {
                return work;
            };
            let c = -sparse_get(&work, idx);
            work = sparse_axpy(&work, &c, self.rows.get(&idx).unwrap());
        }
    }

    /// Fully inter-reduced rows (unique RREF of the row space), computed on
    /// demand. Each returned row has support `pivot + non-pivot coordinates`.
    pub fn rref_rows(&self) -> BTreeMap<usize, SparseVec> {
        let mut out: BTreeMap<usize, SparseVec> = BTreeMap::new();
        let order: Vec<usize> = match self.policy() {
            // Resolve pivots whose substitutions may mention other pivots:
            // Max rows mention smaller indices, so go ascending; Min rows
            // mention larger indices, so go descending.
            Pivot::Max => self.rows.keys().copied().collect(),
            Pivot::Min => self.rows.keys().rev().copied().collect(),
        };
        for p in order {
            let mut acc = self.rows.get(&p).unwrap().clone();
            // Eliminate other pivots from the support; already-expanded rows
            // are pivot-free apart from their own pivot, so each subtraction
            // removes one pivot coordinate and introduces none.
            loop {
                let hit = acc
                    .iter()
                    .find(|(i, _)| *i != p && out.contains_key(i))
                    .map(|(i, c)| (*i, c.clone()));
                let Some((i, c)) = hit else { break };
                acc = sparse_axpy(&acc, &(-c), out.get(&i).unwrap());
            }
            out.insert(p, acc);
        }
        out
    }
}

/// Canonical basis of the solution space of a homogeneous system.
///
/// Rows are constraint vectors over `ncols` unknowns. The returned basis is
/// the unique RREF of the nullspace with pivots at the earliest coordinate,
/// pivot value 1.
pub fn nullspace(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let mut ech = Echelon::new(Pivot::Min);
    for r in rows {
        ech.insert(r);
    }
    let rref = ech.rref_rows();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if rref.contains_key(&free) {
            continue;
        }
        // x[free] = 1, x[p] = -row_p[free] for each pivot p.
        let mut v: BTreeMap<usize, Scalar> = BTreeMap::new();
        v.insert(free, Scalar::one());
        for (p, row) in &rref {
            let c = sparse_get(row, free);
            if !c.is_zero() {
                v.insert(*p, -c);
            }
        }
        basis.push(sparse_from_map(v));
    }
    canonicalize_span(basis)
}

/// Unique RREF basis (earliest-index pivots, pivot value 1) of the span.
pub fn canonicalize_span(vectors: Vec<SparseVec>) -> Vec<SparseVec> {
    let mut ech = Echelon::new(Pivot::Min);
    for v in vectors {
        ech.insert(v);
    }
    ech.rref_rows().into_values().collect()
}

/// Rank of a list of sparse vectors.
pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut ech = Echelon::new(Pivot::Min);
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Membership of `v` in the span of `basis`.
pub fn in_span(basis: &[SparseVec], v: &SparseVec) -> bool {
    let mut ech = Echelon::new(Pivot::Min);
    for b in basis {
        ech.insert(b.clone());
    }
    ech.reduce_full(v.clone()).is_empty()
}

/// Solves `sum_j x_j col_j = target` for columns given in preference order;
/// the particular solution is supported on the earliest possible columns.
/// Returns `None` when the system is inconsistent.
pub fn solve_columns(cols: &[SparseVec], target: &SparseVec) -> Option<Vec<(usize, Scalar)>> {
    // Augmented elimination on rows indexed by output coordinate.
    // Row r: sum_j A[r][j] x_j = t[r]; augmented column index = cols.len().
    let aug = cols.len();
    let mut rows: BTreeMap<usize, BTreeMap<usize, Scalar>> = BTreeMap::new();
    for (j, col) in cols.iter().enumerate() {
        for (r, c) in col {
            rows.entry(*r).or_default().insert(j, c.clone());
        }
    }
    for (r, c) in target {
        // homogeneous form: sum_j A[r][j] x_j - t[r] = 0
        rows.entry(*r).or_default().insert(aug, -c.clone());
    }
    let mut ech = Echelon::new(Pivot::Min);
    for (_, row) in rows {
        ech.insert(sparse_from_map(row));
    }
    let rref = ech.rref_rows();
    if rref.contains_key(&aug) {
        return None; // a row reduced to `0 = 1`
    }
    let mut sol = Vec::new();
    for (p, row) in &rref {
        let c = sparse_get(row, aug);
        if !c.is_zero() {
            sol.push((*p, -c));
        }
    }
    Some(sol)
}
