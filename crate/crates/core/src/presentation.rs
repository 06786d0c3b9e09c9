//! Bialgebra presentations.
//!
//! Two interchangeable backends feed every downstream computation through
//! the same reduced-element interface (basis, multiply, Δ, ε):
//!
//! * a free-algebra quotient: generators, a certified reduction system, and
//!   Δ/ε given on generators and extended multiplicatively;
//! * a structure-constant table: a finite basis with multiplication,
//!   comultiplication and counit tables (the unit may be a combination of
//!   basis elements).
//!
//! Elements of either backend are `NcPoly` values in normal form; table
//! elements only ever use length-one words (the basis symbols).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{NcPoly, TensorPoly};
use crate::rewrite::ReductionSystem;
use crate::scalar::{self, Scalar};
use crate::word::Word;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub commutative: bool,
    pub cocommutative: bool,
    pub finite_dimensional: bool,
}

#[derive(Clone, Debug)]
pub struct FreeData {
    pub gens: Vec<String>,
    pub system: ReductionSystem,
    /// Δ on each generator, tensor factors in normal form.
    pub delta: Vec<TensorPoly>,
    pub counit: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct TableData {
    pub labels: Vec<String>,
    /// The algebra unit as a combination of basis symbols.
    pub unit: NcPoly,
    /// `mult[i][j]` is the product `b_i · b_j`.
    pub mult: Vec<Vec<NcPoly>>,
    pub delta: Vec<TensorPoly>,
    pub counit: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub enum Backend {
    Free(FreeData),
    Table(TableData),
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub backend: Backend,
    pub q: Option<Scalar>,
    pub flags: Flags,
    /// Declared antipode images, one per generator (free) or basis symbol
    /// (table); used where the convolution-inverse solver does not apply.
    pub antipode_data: Option<Vec<NcPoly>>,
}

/// All irreducible words up to a degree bound, in deglex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisWindow {
    pub degree: u32,
    pub words: Vec<Word>,
}

impl Presentation {
    pub fn symbol_names(&self) -> &[String] {
        match &self.backend {
            Backend::Free(f) => &f.gens,
            Backend::Table(t) => &t.labels,
        }
    }

    pub fn num_symbols(&self) -> usize {
        self.symbol_names().len()
    }

    pub fn is_table(&self) -> bool {
        matches!(self.backend, Backend::Table(_))
    }

    /// Exact (finite basis) computations are available for table backends
    /// and for free presentations flagged finite-dimensional.
    pub fn is_exact(&self) -> bool {
        self.is_table() || self.flags.finite_dimensional
    }

    pub fn system(&self) -> Option<&ReductionSystem> {
        match &self.backend {
            Backend::Free(f) => Some(&f.system),
            Backend::Table(_) => None,
        }
    }

    pub fn unit_poly(&self) -> NcPoly {
        match &self.backend {
            Backend::Free(_) => NcPoly::one(),
            Backend::Table(t) => t.unit.clone(),
        }
    }

    pub fn word_degree(&self, w: &Word) -> u32 {
        w.degree()
    }

    /// Normal form of an element (identity for table elements).
    pub fn reduce(&self, p: &NcPoly) -> Result<NcPoly> {
        match &self.backend {
            Backend::Free(f) => f.system.normal_form(p),
            Backend::Table(t) => {
                for (w, _) in p.iter() {
                    if w.len() != 1 || w.0[0] as usize >= t.labels.len() {
                        return Err(Error::Validation(
                            "table element with a non-basis word".into(),
                        ));
                    }
                }
                Ok(p.clone())
            }
        }
    }

    /// Reduced product of two elements.
    pub fn multiply(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly> {
        match &self.backend {
            Backend::Free(f) => f.system.normal_form(&a.mul(b)),
            Backend::Table(t) => {
                let mut out = NcPoly::zero();
                for (u, c) in a.iter() {
                    for (v, d) in b.iter() {
                        let (i, j) = (u.0[0] as usize, v.0[0] as usize);
                        out = out.add(&t.mult[i][j].scale(&(c.clone() * d)));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Componentwise product in `B ⊗ B`, both factors reduced.
    pub fn multiply_tensor(&self, a: &TensorPoly, b: &TensorPoly) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero();
        for ((l1, r1), c) in a.iter() {
            for ((l2, r2), d) in b.iter() {
                let left = self.multiply(&NcPoly::word(l1.clone()), &NcPoly::word(l2.clone()))?;
                let right = self.multiply(&NcPoly::word(r1.clone()), &NcPoly::word(r2.clone()))?;
                let coeff = c.clone() * d;
                for (lw, lc) in left.iter() {
                    for (rw, rc) in right.iter() {
                        out.add_term(coeff.clone() * lc * rc, lw.clone(), rw.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    fn delta_word(&self, w: &Word) -> Result<TensorPoly> {
        match &self.backend {
            Backend::Free(f) => {
                let mut acc = TensorPoly::unit();
                for &g in &w.0 {
                    let dg = f
                        .delta
                        .get(g as usize)
                        .ok_or_else(|| Error::UnknownSymbol(format!("generator index {g}")))?;
                    acc = self.multiply_tensor(&acc, dg)?;
                }
                Ok(acc)
            }
            Backend::Table(t) => {
                if w.len() != 1 {
                    return Err(Error::Validation(
                        "table element with a non-basis word".into(),
                    ));
                }
                Ok(t.delta[w.0[0] as usize].clone())
            }
        }
    }

    /// Multiplicative/linear extension of Δ; tensor factors in normal form.
    pub fn delta_element(&self, p: &NcPoly) -> Result<TensorPoly> {
        let mut out = TensorPoly::zero();
        for (w, c) in p.iter() {
            out = out.add(&self.delta_word(w)?.scale(c));
        }
        Ok(out)
    }

    /// Multiplicative/linear extension of ε.
    pub fn epsilon_element(&self, p: &NcPoly) -> Result<Scalar> {
        let mut total = scalar::zero();
        for (w, c) in p.iter() {
            let mut e = scalar::one();
            match &self.backend {
                Backend::Free(f) => {
                    for &g in &w.0 {
                        let eg = f
                            .counit
                            .get(g as usize)
                            .ok_or_else(|| Error::UnknownSymbol(format!("generator index {g}")))?;
                        e *= eg;
                        if e.is_zero() {
                            break;
                        }
                    }
                }
                Backend::Table(t) => {
                    e = t.counit[w.0[0] as usize].clone();
                }
            }
            total += e * c;
        }
        Ok(total)
    }

    /// All irreducible words of degree ≤ d, deglex-sorted. Table backends
    /// return their full symbol list regardless of `d`.
    pub fn basis_window(&self, d: u32) -> Result<BasisWindow> {
        match &self.backend {
            Backend::Free(f) => {
                let mut words = vec![Word::empty()];
                let mut layer = vec![Word::empty()];
                for _deg in 1..=d {
                    let mut next = Vec::new();
                    for w in &layer {
                        for g in 0..f.gens.len() as u32 {
                            let cand = w.concat(&Word::gen(g));
                            // the prefix is irreducible, so only suffix
                            // matches ending at the new letter can appear
                            let reducible = f.system.rules().iter().any(|rule| {
                                let l = rule.lhs.len();
                                l <= cand.len() && cand.0[cand.len() - l..] == rule.lhs.0[..]
                            });
                            if !reducible {
                                next.push(cand);
                            }
                        }
                    }
                    words.extend(next.iter().cloned());
                    layer = next;
                    if layer.is_empty() {
                        break;
                    }
                }
                Ok(BasisWindow { degree: d, words })
            }
            Backend::Table(t) => Ok(BasisWindow {
                degree: d,
                words: (0..t.labels.len() as u32).map(Word::gen).collect(),
            }),
        }
    }

    /// The complete basis of a finite-dimensional presentation, detected by
    /// a degree with no irreducible words.
    pub fn full_basis(&self) -> Result<BasisWindow> {
        match &self.backend {
            Backend::Table(_) => self.basis_window(1),
            Backend::Free(_) => {
                const CAP: u32 = 64;
                let win = self.basis_window(CAP)?;
                let max_deg = win.words.iter().map(|w| w.degree()).max().unwrap_or(0);
                if max_deg >= CAP {
                    return Err(Error::Unsupported(
                        "presentation is not finite-dimensional (no basis gap within the cap)"
                            .into(),
                    ));
                }
                Ok(BasisWindow {
                    degree: max_deg,
                    words: win.words,
                })
            }
        }
    }

    /// Verifies the bialgebra axioms and declared flags on the degree-`d`
    /// window; failures are report entries with witnesses, not errors.
    pub fn check_axioms(&self, d: u32) -> Result<AxiomReport> {
        let mut report = AxiomReport::default();
        let names = self.symbol_names().to_vec();
        let window = if self.is_table() {
            self.basis_window(1)?
        } else {
            self.basis_window(d)?
        };

        // unit comultiplies group-like and has counit 1
        let unit = self.unit_poly();
        let du = self.delta_element(&unit)?;
        let uu = TensorPoly::tensor(&unit, &unit);
        report.push(
            "delta(1) = 1 (x) 1",
            du == uu,
            (du != uu).then(|| du.display(&names)),
        );
        let eu = self.epsilon_element(&unit)?;
        report.push(
            "epsilon(1) = 1",
            eu.is_one(),
            (!eu.is_one()).then(|| scalar::scalar_str(&eu)),
        );

        // rule compatibility (the bi-ideal condition) for free backends
        if let Backend::Free(f) = &self.backend {
            for (i, rule) in f.system.rules().iter().enumerate() {
                let lhs_poly = NcPoly::word(rule.lhs.clone());
                let e_l = self.epsilon_element(&lhs_poly)?;
                let e_r = self.epsilon_element(&rule.rhs)?;
                report.push(
                    &format!("counit respects rule {}", rule.lhs.display(&names)),
                    e_l == e_r,
                    (e_l != e_r).then(|| {
                        format!("{} vs {}", scalar::scalar_str(&e_l), scalar::scalar_str(&e_r))
                    }),
                );
                let d_l = self.delta_element(&lhs_poly)?;
                let d_r = self.delta_element(&rule.rhs)?;
                let diff = d_l.sub(&d_r);
                report.push(
                    &format!("bi-ideal condition for rule {}", rule.lhs.display(&names)),
                    diff.is_zero(),
                    (!diff.is_zero()).then(|| format!("index {i}: {}", diff.display(&names))),
                );
            }
        }

        // table backends: associativity and unit laws
        if let Backend::Table(t) = &self.backend {
            let n = t.labels.len() as u32;
            let mut assoc_ok = true;
            let mut witness = None;
            'outer: for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let (pa, pb, pc) = (
                            NcPoly::word(Word::gen(a)),
                            NcPoly::word(Word::gen(b)),
                            NcPoly::word(Word::gen(c)),
                        );
                        let l = self.multiply(&self.multiply(&pa, &pb)?, &pc)?;
                        let r = self.multiply(&pa, &self.multiply(&pb, &pc)?)?;
                        if l != r {
                            assoc_ok = false;
                            witness = Some(format!(
                                "({}.{}).{}",
                                t.labels[a as usize], t.labels[b as usize], t.labels[c as usize]
                            ));
                            break 'outer;
                        }
                    }
                }
            }
            report.push("multiplication associative", assoc_ok, witness);
            let mut unit_ok = true;
            let mut witness = None;
            for a in 0..n {
                let pa = NcPoly::word(Word::gen(a));
                if self.multiply(&unit, &pa)? != pa || self.multiply(&pa, &unit)? != pa {
                    unit_ok = false;
                    witness = Some(t.labels[a as usize].clone());
                    break;
                }
            }
            report.push("unit laws", unit_ok, witness);
        }

        // coassociativity and counit laws on the window
        let mut coassoc_ok = true;
        let mut coassoc_witness = None;
        let mut counit_ok = true;
        let mut counit_witness = None;
        for w in &window.words {
            let dw = self.delta_word(w)?;
            // (Δ ⊗ id)Δ vs (id ⊗ Δ)Δ as triple tensors
            let mut left: BTreeMap<(Word, Word, Word), Scalar> = BTreeMap::new();
            let mut right: BTreeMap<(Word, Word, Word), Scalar> = BTreeMap::new();
            for ((a, b), c) in dw.iter() {
                for ((a1, a2), c2) in self.delta_word(a)?.iter() {
                    add3(&mut left, (a1.clone(), a2.clone(), b.clone()), c.clone() * c2);
                }
                for ((b1, b2), c2) in self.delta_word(b)?.iter() {
                    add3(&mut right, (a.clone(), b1.clone(), b2.clone()), c.clone() * c2);
                }
            }
            if left != right && coassoc_ok {
                coassoc_ok = false;
                coassoc_witness = Some(w.display(&names));
            }
            // (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
            let mut lhs = NcPoly::zero();
            let mut rhs = NcPoly::zero();
            for ((a, b), c) in dw.iter() {
                lhs.add_term(
                    c.clone() * self.epsilon_element(&NcPoly::word(a.clone()))?,
                    b.clone(),
                );
                rhs.add_term(
                    c.clone() * self.epsilon_element(&NcPoly::word(b.clone()))?,
                    a.clone(),
                );
            }
            let expect = NcPoly::word(w.clone());
            if (lhs != expect || rhs != expect) && counit_ok {
                counit_ok = false;
                counit_witness = Some(w.display(&names));
            }
        }
        report.push("coassociativity on window", coassoc_ok, coassoc_witness);
        report.push("counit laws on window", counit_ok, counit_witness);

        // Δ and ε are algebra maps, tested on pairs within the window
        let mut dm_ok = true;
        let mut dm_witness = None;
        let mut em_ok = true;
        let mut em_witness = None;
        for u in &window.words {
            for v in &window.words {
                if !self.is_table() && u.degree() + v.degree() > d {
                    continue;
                }
                let (pu, pv) = (NcPoly::word(u.clone()), NcPoly::word(v.clone()));
                let prod = self.multiply(&pu, &pv)?;
                let d_prod = self.delta_element(&prod)?;
                let d_sep = self.multiply_tensor(&self.delta_word(u)?, &self.delta_word(v)?)?;
                if d_prod != d_sep && dm_ok {
                    dm_ok = false;
                    dm_witness = Some(format!("{} · {}", u.display(&names), v.display(&names)));
                }
                let e_prod = self.epsilon_element(&prod)?;
                let e_sep = self.epsilon_element(&pu)? * self.epsilon_element(&pv)?;
                if e_prod != e_sep && em_ok {
                    em_ok = false;
                    em_witness = Some(format!("{} · {}", u.display(&names), v.display(&names)));
                }
            }
        }
        report.push("comultiplication is an algebra map", dm_ok, dm_witness);
        report.push("counit is an algebra map", em_ok, em_witness);

        // declared flags
        if self.flags.commutative {
            let mut ok = true;
            let mut witness = None;
            for u in &window.words {
                for v in &window.words {
                    if !self.is_table() && u.degree() + v.degree() > d {
                        continue;
                    }
                    let (pu, pv) = (NcPoly::word(u.clone()), NcPoly::word(v.clone()));
                    let comm = self.multiply(&pu, &pv)?.sub(&self.multiply(&pv, &pu)?);
                    if !comm.is_zero() {
                        ok = false;
                        witness = Some(format!("[{}, {}]", u.display(&names), v.display(&names)));
                        break;
                    }
                }
            }
            report.push("commutativity flag", ok, witness);
        }
        if self.flags.cocommutative {
            let mut ok = true;
            let mut witness = None;
            for w in &window.words {
                let dw = self.delta_word(w)?;
                let mut flipped = TensorPoly::zero();
                for ((a, b), c) in dw.iter() {
                    flipped.add_term(c.clone(), b.clone(), a.clone());
                }
                if flipped != dw {
                    ok = false;
                    witness = Some(w.display(&names));
                    break;
                }
            }
            report.push("cocommutativity flag", ok, witness);
        }
        if self.flags.finite_dimensional {
            let ok = self.full_basis().is_ok();
            report.push("finite-dimensionality flag", ok, None);
        }

        Ok(report)
    }

    /// Validates axioms at window `d`; turns the first failure into an error.
    pub fn validate(&self, d: u32) -> Result<()> {
        let report = self.check_axioms(d)?;
        if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
            let witness = bad
                .witness
                .as_deref()
                .map(|w| format!(" (witness: {w})"))
                .unwrap_or_default();
            return Err(Error::Validation(format!("{}{}", bad.name, witness)));
        }
        Ok(())
    }
}

fn add3(map: &mut BTreeMap<(Word, Word, Word), Scalar>, key: (Word, Word, Word), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let cur = map.remove(&key);
    let sum = match cur {
        Some(old) => old + c,
        None => c,
    };
    if !sum.is_zero() {
        map.insert(key, sum);
    }
}

#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl AxiomReport {
    pub fn push(&mut self, name: &str, passed: bool, witness: Option<String>) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            passed,
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
