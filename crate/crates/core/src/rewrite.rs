//! Reduction systems on the free algebra: normal forms, overlap
//! ambiguities, confluence certificates and bounded completion.
//!
//! Rules rewrite a leading word into a strictly deglex-smaller polynomial,
//! so reduction always terminates; confluence is decided by resolving the
//! finitely many overlap ambiguities.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::NcPoly;
use crate::scalar::Scalar;
use crate::word::Word;

/// Reduction step guard; `BIALINT_GUARD` overrides the default of 10^6.
pub fn step_guard() -> usize {
    static GUARD: OnceLock<usize> = OnceLock::new();
    *GUARD.get_or_init(|| {
        std::env::var("BIALINT_GUARD")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(1_000_000)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Confluence {
    Unknown,
    /// All overlap ambiguities resolve; normal forms are unique at every degree.
    Certified,
    /// Overlap words of degree up to the bound resolve.
    CertifiedUpTo(u32),
    Refuted {
        word: Word,
        nf1: NcPoly,
        nf2: NcPoly,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverlapKind {
    /// A proper suffix of `lhs_a` equals a proper prefix of `lhs_b`.
    SuffixPrefix,
    /// `lhs_b` occurs strictly inside `lhs_a`.
    Inclusion,
}

#[derive(Clone, Debug)]
pub struct Overlap {
    pub rule_a: usize,
    pub rule_b: usize,
    /// Ambiguous word; rule A applies at position 0, rule B at `pos_b`.
    pub word: Word,
    pub pos_b: usize,
    pub kind: OverlapKind,
}

#[derive(Debug)]
pub struct ReductionSystem {
    rules: Vec<Rule>,
    order: MonomialOrder,
    status: Confluence,
    cache: RwLock<HashMap<Word, NcPoly>>,
}

impl Clone for ReductionSystem {
    fn clone(&self) -> Self {
        ReductionSystem {
            rules: self.rules.clone(),
            order: self.order.clone(),
            status: self.status.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl ReductionSystem {
    /// Builds a system, validating the rule invariants: non-empty distinct
    /// left-hand sides and strictly smaller right-hand sides.
    pub fn new(rules: Vec<Rule>, order: MonomialOrder) -> Result<Self> {
        for (i, rule) in rules.iter().enumerate() {
            if rule.lhs.is_empty() {
                return Err(Error::Validation("rule with empty left-hand side".into()));
            }
            for (w, _) in rule.rhs.iter() {
                if order.compare(w, &rule.lhs)? != std::cmp::Ordering::Less {
                    return Err(Error::Validation(format!(
                        "rule {i}: right-hand side monomial not smaller than the left-hand side"
                    )));
                }
            }
            for other in &rules[..i] {
                if other.lhs == rule.lhs {
                    return Err(Error::Validation(format!(
                        "duplicate rule left-hand side at rule {i}"
                    )));
                }
            }
        }
        Ok(ReductionSystem {
            rules,
            order,
            status: Confluence::Unknown,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn status(&self) -> &Confluence {
        &self.status
    }

    pub fn is_certified(&self) -> bool {
        matches!(
            self.status,
            Confluence::Certified | Confluence::CertifiedUpTo(_)
        )
    }

    /// First redex in `w`: scan positions left to right, rules in order.
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for (ri, rule) in self.rules.iter().enumerate() {
                let l = rule.lhs.len();
                if pos + l <= w.len() && w.0[pos..pos + l] == rule.lhs.0[..] {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// One rewriting step at a chosen redex.
    fn apply_at(&self, w: &Word, pos: usize, rule_idx: usize) -> NcPoly {
        let rule = &self.rules[rule_idx];
        let (prefix, suffix) = w.split_around(pos, rule.lhs.len());
        let mut out = NcPoly::zero();
        for (t, c) in rule.rhs.iter() {
            out.add_term(c.clone(), prefix.concat(t).concat(&suffix));
        }
        out
    }

    fn nf_word(&self, w: &Word, steps: &mut usize) -> Result<NcPoly> {
        if let Some(hit) = self.cache.read().unwrap().get(w) {
            return Ok(hit.clone());
        }
        let result = match self.find_redex(w) {
            None => NcPoly::word(w.clone()),
            Some((pos, ri)) => {
                *steps += 1;
                if *steps > step_guard() {
                    return Err(Error::NonTermination(step_guard()));
                }
                let once = self.apply_at(w, pos, ri);
                let mut acc = NcPoly::zero();
                for (t, c) in once.iter() {
                    acc = acc.add(&self.nf_word(t, steps)?.scale(c));
                }
                acc
            }
        };
        self.cache.write().unwrap().insert(w.clone(), result.clone());
        Ok(result)
    }

    /// Normal form of a polynomial; linear, idempotent, and deterministic
    /// (leftmost redex, first matching rule).
    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly> {
        let mut steps = 0usize;
        let mut acc = NcPoly::zero();
        for (w, c) in p.iter() {
            acc = acc.add(&self.nf_word(w, &mut steps)?.scale(c));
        }
        Ok(acc)
    }

    /// All overlap and inclusion ambiguities in a deterministic order.
    pub fn find_overlaps(&self) -> Vec<Overlap> {
        let mut out = Vec::new();
        for (a, ra) in self.rules.iter().enumerate() {
            for (b, rb) in self.rules.iter().enumerate() {
                let la = ra.lhs.len();
                let lb = rb.lhs.len();
                // proper suffix of lhs_a = proper prefix of lhs_b
                for k in 1..la.min(lb) {
                    if ra.lhs.0[la - k..] == rb.lhs.0[..k] {
                        let mut w = ra.lhs.0.clone();
                        w.extend_from_slice(&rb.lhs.0[k..]);
                        out.push(Overlap {
                            rule_a: a,
                            rule_b: b,
                            word: Word(w),
                            pos_b: la - k,
                            kind: OverlapKind::SuffixPrefix,
                        });
                    }
                }
                // lhs_b strictly inside lhs_a
                if a != b && lb < la {
                    for pos in 0..=la - lb {
                        if ra.lhs.0[pos..pos + lb] == rb.lhs.0[..] {
                            out.push(Overlap {
                                rule_a: a,
                                rule_b: b,
                                word: ra.lhs.clone(),
                                pos_b: pos,
                                kind: OverlapKind::Inclusion,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Both one-step resolutions of an ambiguity, fully normalized.
    fn resolve(&self, ov: &Overlap) -> Result<(NcPoly, NcPoly)> {
        let r1 = self.apply_at(&ov.word, 0, ov.rule_a);
        let r2 = self.apply_at(&ov.word, ov.pos_b, ov.rule_b);
        Ok((self.normal_form(&r1)?, self.normal_form(&r2)?))
    }

    /// Diamond-Lemma check: reduces every ambiguity both ways. A full pass
    /// certifies unique normal forms at all degrees; refutation carries a
    /// witness word with its two distinct normal forms.
    pub fn check_confluence(&mut self) -> Result<Confluence> {
        for ov in self.find_overlaps() {
            let (nf1, nf2) = self.resolve(&ov)?;
            if nf1 != nf2 {
                self.status = Confluence::Refuted {
                    word: ov.word.clone(),
                    nf1,
                    nf2,
                };
                return Ok(self.status.clone());
            }
        }
        self.status = Confluence::Certified;
        Ok(self.status.clone())
    }

    /// Confluence check restricted to overlap words of degree at most `d`.
    pub fn check_confluence_bounded(&mut self, d: u32) -> Result<Confluence> {
        let mut all_within = true;
        for ov in self.find_overlaps() {
            if ov.word.degree() > d {
                all_within = false;
                continue;
            }
            let (nf1, nf2) = self.resolve(&ov)?;
            if nf1 != nf2 {
                self.status = Confluence::Refuted {
                    word: ov.word.clone(),
                    nf1,
                    nf2,
                };
                return Ok(self.status.clone());
            }
        }
        self.status = if all_within {
            Confluence::Certified
        } else {
            Confluence::CertifiedUpTo(d)
        };
        Ok(self.status.clone())
    }
}

const COMPLETION_RULE_GUARD: usize = 10_000;

/// Turns an (unoriented) relation into a monic rule by its leading monomial.
fn orient(p: &NcPoly, order: &MonomialOrder) -> Result<Option<Rule>> {
    if p.is_zero() {
        return Ok(None);
    }
    // The BTreeMap leading term is deglex-greatest for unit weights; confirm
    // uniqueness under the supplied order.
    let (lead, c) = {
        let mut best: Option<(&Word, &Scalar)> = None;
        for (w, k) in p.iter() {
            match best {
                None => best = Some((w, k)),
                Some((bw, _)) => {
                    if order.compare(w, bw)? == std::cmp::Ordering::Greater {
                        best = Some((w, k));
                    }
                }
            }
        }
        let (w, k) = best.unwrap();
        (w.clone(), k.clone())
    };
    if lead.is_empty() {
        return Err(Error::Validation(
            "relation with leading monomial 1 (inconsistent presentation)".into(),
        ));
    }
    let inv = -c.recip();
    let mut rhs = NcPoly::zero();
    for (w, k) in p.iter() {
        if *w != lead {
            rhs.add_term(k.clone() * &inv, w.clone());
        }
    }
    Ok(Some(Rule { lhs: lead, rhs }))
}

/// Bounded Knuth–Bendix/Buchberger-style completion. The result is confluent
/// on all words of degree at most `max_degree`; rules are monic and
/// inter-reduced. Systems whose entire overlap set fits under the bound come
/// back with a full certificate.
pub fn complete_bounded(
    relations: &[NcPoly],
    order: &MonomialOrder,
    max_degree: u32,
) -> Result<ReductionSystem> {
    let mut rules: Vec<Rule> = Vec::new();
    let mut queue: Vec<NcPoly> = relations.to_vec();

    loop {
        while let Some(p) = queue.pop() {
            let sys = ReductionSystem::new(rules.clone(), order.clone())?;
            let p = sys.normal_form(&p)?;
            let Some(new_rule) = orient(&p, order)? else {
                continue;
            };
            // Inclusion inter-reduction: retire any rule whose lhs contains
            // the new lhs and requeue it as a relation.
            let mut kept = Vec::new();
            for r in rules.drain(..) {
                if r.lhs.contains_subword(&new_rule.lhs) {
                    let mut rel = NcPoly::word(r.lhs.clone());
                    rel = rel.sub(&r.rhs);
                    queue.push(rel);
                } else {
                    kept.push(r);
                }
            }
            rules = kept;
            rules.push(new_rule);
            if rules.len() > COMPLETION_RULE_GUARD {
                return Err(Error::CompletionOverflow(COMPLETION_RULE_GUARD));
            }
            // Re-normalize right-hand sides against the enlarged system.
            let sys = ReductionSystem::new(rules.clone(), order.clone())?;
            let mut renormed = Vec::with_capacity(rules.len());
            for r in &rules {
                renormed.push(Rule {
                    lhs: r.lhs.clone(),
                    rhs: sys.normal_form(&r.rhs)?,
                });
            }
            rules = renormed;
        }

        let sys = ReductionSystem::new(rules.clone(), order.clone())?;
        for ov in sys.find_overlaps() {
            if ov.word.degree() > max_degree {
                continue;
            }
            let (nf1, nf2) = sys.resolve(&ov)?;
            let diff = nf1.sub(&nf2);
            if !diff.is_zero() {
                queue.push(diff);
            }
        }
        if queue.is_empty() {
            break;
        }
    }

    let mut sys = ReductionSystem::new(rules, order.clone())?;
    sys.check_confluence_bounded(max_degree)?;
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_i64;

    fn w(letters: &[u32]) -> Word {
        Word::from_slice(letters)
    }

    const X: u32 = 0;
    const Y: u32 = 1;

    /// yx -> q xy, x^3 -> x, y^2 -> 0 at q = -1 (all over {x, y}).
    fn sixdim_rules() -> Vec<Rule> {
        vec![
            Rule {
                lhs: w(&[Y, X]),
                rhs: NcPoly::from_term(from_i64(-1), w(&[X, Y])),
            },
            Rule {
                lhs: w(&[X, X, X]),
                rhs: NcPoly::word(w(&[X])),
            },
            Rule {
                lhs: w(&[Y, Y]),
                rhs: NcPoly::zero(),
            },
        ]
    }

    #[test]
    fn normal_form_examples() {
        let order = MonomialOrder::deglex(2);
        // yx under {yx -> 2xy}
        let qp = ReductionSystem::new(
            vec![Rule {
                lhs: w(&[Y, X]),
                rhs: NcPoly::from_term(from_i64(2), w(&[X, Y])),
            }],
            order.clone(),
        )
        .unwrap();
        assert_eq!(
            qp.normal_form(&NcPoly::word(w(&[Y, X]))).unwrap(),
            NcPoly::from_term(from_i64(2), w(&[X, Y]))
        );

        let six = ReductionSystem::new(sixdim_rules(), order).unwrap();
        // x^3 y^2 -> 0
        assert!(six
            .normal_form(&NcPoly::word(w(&[X, X, X, Y, Y])))
            .unwrap()
            .is_zero());
        // xy is already irreducible
        let xy = NcPoly::word(w(&[X, Y]));
        assert_eq!(six.normal_form(&xy).unwrap(), xy);
    }

    #[test]
    fn invariant_rejects_bad_rules() {
        let order = MonomialOrder::deglex(2);
        // xy -> yx is not decreasing (yx > xy in deglex)
        let bad = ReductionSystem::new(
            vec![Rule {
                lhs: w(&[X, Y]),
                rhs: NcPoly::word(w(&[Y, X])),
            }],
            order,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn overlap_enumeration() {
        let order = MonomialOrder::deglex(2);
        // {yx -> -xy, x^3 -> x}: single overlap word yxxx
        let sys = ReductionSystem::new(
            vec![
                Rule {
                    lhs: w(&[Y, X]),
                    rhs: NcPoly::from_term(from_i64(-1), w(&[X, Y])),
                },
                Rule {
                    lhs: w(&[X, X, X]),
                    rhs: NcPoly::word(w(&[X])),
                },
            ],
            order.clone(),
        )
        .unwrap();
        let ovs = sys.find_overlaps();
        let words: Vec<&Word> = ovs.iter().map(|o| &o.word).collect();
        assert!(words.contains(&&w(&[Y, X, X, X])));
        // the only non-self ambiguity is yxxx; x^3 self-overlaps in x^4, x^5
        assert!(words.contains(&&w(&[X, X, X, X])));
        assert!(words.contains(&&w(&[X, X, X, X, X])));
        assert_eq!(ovs.len(), 3);

        // {yx -> qxy} alone has no ambiguities
        let qp = ReductionSystem::new(
            vec![Rule {
                lhs: w(&[Y, X]),
                rhs: NcPoly::from_term(from_i64(2), w(&[X, Y])),
            }],
            order,
        )
        .unwrap();
        assert!(qp.find_overlaps().is_empty());
    }

    #[test]
    fn confluence_certificates() {
        let order = MonomialOrder::deglex(2);
        let mut six = ReductionSystem::new(sixdim_rules(), order.clone()).unwrap();
        assert_eq!(six.check_confluence().unwrap(), Confluence::Certified);

        // {xy -> x, yx -> y} diverges on xyx: x^2 vs x
        let mut bad = ReductionSystem::new(
            vec![
                Rule {
                    lhs: w(&[X, Y]),
                    rhs: NcPoly::word(w(&[X])),
                },
                Rule {
                    lhs: w(&[Y, X]),
                    rhs: NcPoly::word(w(&[Y])),
                },
            ],
            order,
        )
        .unwrap();
        match bad.check_confluence().unwrap() {
            Confluence::Refuted { word, nf1, nf2 } => {
                assert_eq!(word, w(&[X, Y, X]));
                let pair = (nf1, nf2);
                let xx = NcPoly::word(w(&[X, X]));
                let x = NcPoly::word(w(&[X]));
                assert!(pair == (xx.clone(), x.clone()) || pair == (x, xx));
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn completion_of_unoriented_relations() {
        let order = MonomialOrder::deglex(2);
        // {yx + xy, x^3 - x, y^2} completes to the three-rule system.
        let relations = vec![
            NcPoly::word(w(&[Y, X])).add(&NcPoly::word(w(&[X, Y]))),
            NcPoly::word(w(&[X, X, X])).sub(&NcPoly::word(w(&[X]))),
            NcPoly::word(w(&[Y, Y])),
        ];
        let sys = complete_bounded(&relations, &order, 8).unwrap();
        assert_eq!(sys.rules().len(), 3);
        assert!(sys.is_certified());
        let lhss: Vec<&Word> = sys.rules().iter().map(|r| &r.lhs).collect();
        assert!(lhss.contains(&&w(&[Y, X])));
        assert!(lhss.contains(&&w(&[X, X, X])));
        assert!(lhss.contains(&&w(&[Y, Y])));
        // already-confluent rules come back unchanged up to monic form
        let again = complete_bounded(
            &sys.rules()
                .iter()
                .map(|r| NcPoly::word(r.lhs.clone()).sub(&r.rhs))
                .collect::<Vec<_>>(),
            &order,
            8,
        )
        .unwrap();
        assert_eq!(again.rules().len(), 3);
    }

    #[test]
    fn completion_of_commutativity_relations() {
        // Pairwise commutators of four variables: normal forms are sorted words.
        let order = MonomialOrder::deglex(4);
        let mut relations = Vec::new();
        for a in 0..4u32 {
            for b in 0..a {
                relations.push(NcPoly::word(w(&[a, b])).sub(&NcPoly::word(w(&[b, a]))));
            }
        }
        let sys = complete_bounded(&relations, &order, 6).unwrap();
        assert_eq!(sys.rules().len(), 6);
        assert!(sys.is_certified());
        let p = sys.normal_form(&NcPoly::word(w(&[3, 1, 2, 0]))).unwrap();
        assert_eq!(p, NcPoly::word(w(&[0, 1, 2, 3])));
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let order = MonomialOrder::deglex(2);
        let six = ReductionSystem::new(sixdim_rules(), order).unwrap();
        let p = NcPoly::word(w(&[Y, X, X, X, Y]))
            .add(&NcPoly::from_term(from_i64(3), w(&[X, Y, X])));
        let q = NcPoly::word(w(&[Y, Y, X])).sub(&NcPoly::word(w(&[X])));
        let nf = |t: &NcPoly| six.normal_form(t).unwrap();
        assert_eq!(nf(&nf(&p)), nf(&p));
        let combo = p.scale(&from_i64(5)).add(&q.scale(&from_i64(-2)));
        assert_eq!(nf(&combo), nf(&p).scale(&from_i64(5)).add(&nf(&q).scale(&from_i64(-2))));
    }

    #[test]
    fn random_strategies_agree_on_certified_system() {
        use rand::{Rng, SeedableRng};
        let order = MonomialOrder::deglex(2);
        let mut six = ReductionSystem::new(sixdim_rules(), order).unwrap();
        six.check_confluence().unwrap();

        // Random redex choice must reach the same normal form.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let len = rng.gen_range(1..6);
            let word = Word((0..len).map(|_| rng.gen_range(0..2u32)).collect());
            let reference = six.normal_form(&NcPoly::word(word.clone())).unwrap();
            let mut current = NcPoly::word(word);
            loop {
                // collect all redexes over all monomials
                let mut redexes = Vec::new();
                for (m, _) in current.iter() {
                    for pos in 0..m.len() {
                        for (ri, rule) in six.rules().iter().enumerate() {
                            let l = rule.lhs.len();
                            if pos + l <= m.len() && m.0[pos..pos + l] == rule.lhs.0[..] {
                                redexes.push((m.clone(), pos, ri));
                            }
                        }
                    }
                }
                if redexes.is_empty() {
                    break;
                }
                let (m, pos, ri) = redexes[rng.gen_range(0..redexes.len())].clone();
                let c = current.coeff(&m);
                let mut next = current.clone();
                next.add_term(-c.clone(), m.clone());
                next = next.add(&six.apply_at(&m, pos, ri).scale(&c));
                current = next;
            }
            assert_eq!(current, reference);
        }
    }

    #[test]
    fn each_step_strictly_decreases_leading_words() {
        use rand::{Rng, SeedableRng};
        let order = MonomialOrder::deglex(2);
        let six = ReductionSystem::new(sixdim_rules(), order.clone()).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let len = rng.gen_range(1..7);
            let word = Word((0..len).map(|_| rng.gen_range(0..2u32)).collect());
            if let Some((pos, ri)) = six.find_redex(&word) {
                let once = six.apply_at(&word, pos, ri);
                for (m, _) in once.iter() {
                    assert_eq!(
                        order.compare(m, &word).unwrap(),
                        std::cmp::Ordering::Less,
                        "step did not decrease: {word:?} -> {m:?}"
                    );
                }
            }
        }
    }
}
