//! Built-in presentations.
//!
//! Every entry ships with a reduction system certified confluent at load
//! time (free backends) or a validated structure-constant table.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{NcPoly, TensorPoly};
use crate::presentation::{Backend, Flags, FreeData, Presentation, TableData};
use crate::rewrite::{ReductionSystem, Rule};
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// Names recognized by `load`, with one-line descriptions.
pub fn names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("poly_grouplike", "polynomial bialgebra k[X] with X group-like"),
        ("laurent", "Laurent polynomials k[X, X^-1], a Hopf algebra"),
        ("quantum_plane", "quantum plane k_q[x, y] with yx = q xy (parameter q)"),
        (
            "quantum_plane_envelope",
            "k_q[x, x^-1, y], the Hopf envelope of the quantum plane (parameter q)",
        ),
        ("matrix_bialgebra", "coordinate bialgebra M(n) of n-by-n matrices (parameter n)"),
        ("sixdim", "six-dimensional quotient of the quantum plane at q = -1"),
        ("sweedler_h4", "Sweedler's four-dimensional Hopf algebra"),
        ("group_c2", "group algebra of the order-two group"),
        ("a_times_k", "A x k with A = k^dim componentwise (parameter dim)"),
        ("trivial", "the ground field as a bialgebra"),
    ]
}

/// Loads a catalog presentation with default parameters
/// (`q = 2`, `n = 2`, `dim = 2`).
pub fn load(name: &str) -> Result<Presentation> {
    load_with(name, None, None)
}

/// Loads a catalog presentation; `q` feeds the quantum-plane family and
/// `size` the matrix/direct-product families.
pub fn load_with(name: &str, q: Option<&Scalar>, size: Option<u32>) -> Result<Presentation> {
    match name {
        "poly_grouplike" => poly_grouplike(),
        "laurent" => laurent(),
        "quantum_plane" => quantum_plane(q.cloned().unwrap_or_else(|| scalar::from_i64(2))),
        "quantum_plane_envelope" => {
            quantum_plane_envelope(q.cloned().unwrap_or_else(|| scalar::from_i64(2)))
        }
        "matrix_bialgebra" => matrix_bialgebra(size.unwrap_or(2)),
        "sixdim" => sixdim(),
        "sweedler_h4" => sweedler_h4(),
        "group_c2" => group_c2(),
        "a_times_k" => a_times_k(size.unwrap_or(2)),
        "trivial" => trivial(),
        other => Err(Error::UnknownCatalog(other.to_string())),
    }
}

fn certified_system(rules: Vec<Rule>, order: MonomialOrder) -> Result<ReductionSystem> {
    let mut sys = ReductionSystem::new(rules, order)?;
    match sys.check_confluence()? {
        crate::rewrite::Confluence::Certified => Ok(sys),
        other => Err(Error::Internal(format!(
            "catalog system failed its confluence certificate: {other:?}"
        ))),
    }
}

fn grouplike(g: u32) -> TensorPoly {
    TensorPoly::from_term(scalar::one(), Word::gen(g), Word::gen(g))
}

fn free_presentation(
    name: &str,
    gens: &[&str],
    rules: Vec<Rule>,
    delta: Vec<TensorPoly>,
    counit: Vec<Scalar>,
    q: Option<Scalar>,
    flags: Flags,
    antipode: Option<Vec<NcPoly>>,
) -> Result<Presentation> {
    let order = MonomialOrder::deglex(gens.len());
    let system = certified_system(rules, order)?;
    Ok(Presentation {
        name: name.to_string(),
        backend: Backend::Free(FreeData {
            gens: gens.iter().map(|s| s.to_string()).collect(),
            system,
            delta,
            counit,
        }),
        q,
        flags,
        antipode_data: antipode,
    })
}

fn poly_grouplike() -> Result<Presentation> {
    free_presentation(
        "poly_grouplike",
        &["X"],
        vec![],
        vec![grouplike(0)],
        vec![scalar::one()],
        None,
        Flags {
            commutative: true,
            cocommutative: true,
            finite_dimensional: false,
        },
        None,
    )
}

fn laurent() -> Result<Presentation> {
    const X: u32 = 0;
    const XI: u32 = 1;
    let rules = vec![
        Rule {
            lhs: Word::from_slice(&[X, XI]),
            rhs: NcPoly::one(),
        },
        Rule {
            lhs: Word::from_slice(&[XI, X]),
            rhs: NcPoly::one(),
        },
    ];
    free_presentation(
        "laurent",
        &["X", "Xi"],
        rules,
        vec![grouplike(X), grouplike(XI)],
        vec![scalar::one(), scalar::one()],
        None,
        Flags {
            commutative: true,
            cocommutative: true,
            finite_dimensional: false,
        },
        Some(vec![NcPoly::word(Word::gen(XI)), NcPoly::word(Word::gen(X))]),
    )
}

fn qp_delta_y(x: u32, y: u32) -> TensorPoly {
    let mut d = TensorPoly::from_term(scalar::one(), Word::gen(x), Word::gen(y));
    d.add_term(scalar::one(), Word::gen(y), Word::empty());
    d
}

fn quantum_plane(q: Scalar) -> Result<Presentation> {
    if q.is_zero() {
        return Err(Error::Domain("quantum plane requires q != 0".into()));
    }
    const X: u32 = 0;
    const Y: u32 = 1;
    let rules = vec![Rule {
        lhs: Word::from_slice(&[Y, X]),
        rhs: NcPoly::from_term(q.clone(), Word::from_slice(&[X, Y])),
    }];
    free_presentation(
        "quantum_plane",
        &["x", "y"],
        rules,
        vec![grouplike(X), qp_delta_y(X, Y)],
        vec![scalar::one(), scalar::zero()],
        Some(q),
        Flags::default(),
        None,
    )
}

fn quantum_plane_envelope(q: Scalar) -> Result<Presentation> {
    if q.is_zero() {
        return Err(Error::Domain("quantum plane requires q != 0".into()));
    }
    const X: u32 = 0;
    const XI: u32 = 1;
    const Y: u32 = 2;
    let q_inv = q.recip();
    let rules = vec![
        Rule {
            lhs: Word::from_slice(&[Y, X]),
            rhs: NcPoly::from_term(q.clone(), Word::from_slice(&[X, Y])),
        },
        Rule {
            lhs: Word::from_slice(&[X, XI]),
            rhs: NcPoly::one(),
        },
        Rule {
            lhs: Word::from_slice(&[XI, X]),
            rhs: NcPoly::one(),
        },
        Rule {
            lhs: Word::from_slice(&[Y, XI]),
            rhs: NcPoly::from_term(q_inv, Word::from_slice(&[XI, Y])),
        },
    ];
    // antipode: S(x) = x^-1, S(x^-1) = x, S(y) = -x^-1 y
    let s_y = NcPoly::from_term(-scalar::one(), Word::from_slice(&[XI, Y]));
    free_presentation(
        "quantum_plane_envelope",
        &["x", "xi", "y"],
        rules,
        vec![grouplike(X), grouplike(XI), qp_delta_y(X, Y)],
        vec![scalar::one(), scalar::one(), scalar::zero()],
        Some(q),
        Flags::default(),
        Some(vec![
            NcPoly::word(Word::gen(XI)),
            NcPoly::word(Word::gen(X)),
            s_y,
        ]),
    )
}

fn matrix_bialgebra(n: u32) -> Result<Presentation> {
    if !(2..=3).contains(&n) {
        return Err(Error::Domain(format!(
            "matrix bialgebra supported for n in 2..=3, got {n}"
        )));
    }
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            gens.push(format!("x{i}{j}"));
        }
    }
    let idx = |i: u32, j: u32| ((i - 1) * n + (j - 1)) as u32;
    let mut rules = Vec::new();
    for a in 0..n * n {
        for b in 0..a {
            rules.push(Rule {
                lhs: Word::from_slice(&[a, b]),
                rhs: NcPoly::word(Word::from_slice(&[b, a])),
            });
        }
    }
    let mut delta = Vec::new();
    let mut counit = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut d = TensorPoly::zero();
            for k in 1..=n {
                d.add_term(scalar::one(), Word::gen(idx(i, k)), Word::gen(idx(k, j)));
            }
            delta.push(d);
            counit.push(if i == j { scalar::one() } else { scalar::zero() });
        }
    }
    let order = MonomialOrder::deglex(gens.len());
    let system = certified_system(rules, order)?;
    Ok(Presentation {
        name: format!("matrix_bialgebra({n})"),
        backend: Backend::Free(FreeData {
            gens,
            system,
            delta,
            counit,
        }),
        q: None,
        flags: Flags {
            commutative: true,
            cocommutative: false,
            finite_dimensional: false,
        },
        antipode_data: None,
    })
}

fn sixdim() -> Result<Presentation> {
    const X: u32 = 0;
    const Y: u32 = 1;
    let rules = vec![
        Rule {
            lhs: Word::from_slice(&[Y, X]),
            rhs: NcPoly::from_term(scalar::from_i64(-1), Word::from_slice(&[X, Y])),
        },
        Rule {
            lhs: Word::from_slice(&[X, X, X]),
            rhs: NcPoly::word(Word::gen(X)),
        },
        Rule {
            lhs: Word::from_slice(&[Y, Y]),
            rhs: NcPoly::zero(),
        },
    ];
    free_presentation(
        "sixdim",
        &["x", "y"],
        rules,
        vec![grouplike(X), qp_delta_y(X, Y)],
        vec![scalar::one(), scalar::zero()],
        Some(scalar::from_i64(-1)),
        Flags {
            commutative: false,
            cocommutative: false,
            finite_dimensional: true,
        },
        None,
    )
}

fn sweedler_h4() -> Result<Presentation> {
    const X: u32 = 0;
    const Y: u32 = 1;
    let rules = vec![
        Rule {
            lhs: Word::from_slice(&[Y, X]),
            rhs: NcPoly::from_term(scalar::from_i64(-1), Word::from_slice(&[X, Y])),
        },
        Rule {
            lhs: Word::from_slice(&[X, X]),
            rhs: NcPoly::one(),
        },
        Rule {
            lhs: Word::from_slice(&[Y, Y]),
            rhs: NcPoly::zero(),
        },
    ];
    // S(x) = x, S(y) = -xy
    let s_y = NcPoly::from_term(scalar::from_i64(-1), Word::from_slice(&[X, Y]));
    free_presentation(
        "sweedler_h4",
        &["x", "y"],
        rules,
        vec![grouplike(X), qp_delta_y(X, Y)],
        vec![scalar::one(), scalar::zero()],
        Some(scalar::from_i64(-1)),
        Flags {
            commutative: false,
            cocommutative: false,
            finite_dimensional: true,
        },
        Some(vec![NcPoly::word(Word::gen(X)), s_y]),
    )
}

fn group_c2() -> Result<Presentation> {
    const G: u32 = 0;
    let rules = vec![Rule {
        lhs: Word::from_slice(&[G, G]),
        rhs: NcPoly::one(),
    }];
    free_presentation(
        "group_c2",
        &["g"],
        rules,
        vec![grouplike(G)],
        vec![scalar::one()],
        None,
        Flags {
            commutative: true,
            cocommutative: true,
            finite_dimensional: true,
        },
        Some(vec![NcPoly::word(Word::gen(G))]),
    )
}

/// `A x k` with `A = k^dim` componentwise, on the basis
/// `{(e_1, 0), ..., (e_dim, 0), (0, 1)}` (the last symbol is labelled `t`).
fn a_times_k(dim: u32) -> Result<Presentation> {
    if !(1..=6).contains(&dim) {
        return Err(Error::Domain(format!(
            "a_times_k supported for dim in 1..=6, got {dim}"
        )));
    }
    let dim = dim as usize;
    let mut labels: Vec<String> = (1..=dim).map(|i| format!("e{i}")).collect();
    labels.push("t".to_string());
    let n = dim + 1;
    let t_idx = dim;
    let mut unit = NcPoly::zero();
    for i in 0..n {
        unit.add_term(scalar::one(), Word::gen(i as u32));
    }
    let mut mult = vec![vec![NcPoly::zero(); n]; n];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i < dim && j < dim {
                if i == j {
                    *cell = NcPoly::word(Word::gen(i as u32));
                }
            } else if i == t_idx && j == t_idx {
                *cell = NcPoly::word(Word::gen(t_idx as u32));
            }
            // mixed products (e_i, 0)·(0, 1) vanish
        }
    }
    let t_word = Word::gen(t_idx as u32);
    let mut delta = Vec::new();
    let mut counit = Vec::new();
    for i in 0..dim {
        let e_i = Word::gen(i as u32);
        let mut d = TensorPoly::tensor(&unit, &NcPoly::word(e_i.clone()));
        d.add_term(scalar::one(), e_i, t_word.clone());
        delta.push(d);
        counit.push(scalar::zero());
    }
    delta.push(TensorPoly::from_term(
        scalar::one(),
        t_word.clone(),
        t_word,
    ));
    counit.push(scalar::one());
    Ok(Presentation {
        name: format!("a_times_k({dim})"),
        backend: Backend::Table(TableData {
            labels,
            unit,
            mult,
            delta,
            counit,
        }),
        q: None,
        flags: Flags {
            commutative: true,
            cocommutative: false,
            finite_dimensional: true,
        },
        antipode_data: None,
    })
}

fn trivial() -> Result<Presentation> {
    free_presentation(
        "trivial",
        &[],
        vec![],
        vec![],
        vec![],
        None,
        Flags {
            commutative: true,
            cocommutative: true,
            finite_dimensional: true,
        },
        Some(vec![]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbinom::q_binomial;

    fn word_pow(g: u32, k: u32) -> Word {
        Word(vec![g; k as usize])
    }

    #[test]
    fn catalog_names_all_load() {
        for (name, _) in names() {
            let pres = load(name).unwrap();
            assert!(!pres.name.is_empty());
        }
        assert!(load("nonsense").is_err());
    }

    #[test]
    fn basis_window_examples() {
        // sixdim: the full basis {1, x, x^2, y, xy, x^2 y}
        let six = load("sixdim").unwrap();
        let b = six.basis_window(3).unwrap();
        let names: Vec<String> = b
            .words
            .iter()
            .map(|w| w.display(six.symbol_names()))
            .collect();
        assert_eq!(names, vec!["1", "x", "y", "x.x", "x.y", "x.x.y"]);
        assert_eq!(six.basis_window(5).unwrap().words.len(), 6);

        // k[X] at degree 3
        let kx = load("poly_grouplike").unwrap();
        assert_eq!(kx.basis_window(3).unwrap().words.len(), 4);

        // quantum plane at degree 2: {1, x, y, x^2, xy, y^2}
        let qp = load("quantum_plane").unwrap();
        assert_eq!(qp.basis_window(2).unwrap().words.len(), 6);
    }

    #[test]
    fn quantum_plane_delta_matches_q_binomials() {
        // Δ(x^m y^n) = Σ (n, i)_q x^{m+i} y^{n-i} (x) x^m y^i
        let q = scalar::ratio(1, 3);
        let qp = load_with("quantum_plane", Some(&q), None).unwrap();
        for m in 0..3u32 {
            for n in 0..4u32 {
                let w = word_pow(0, m).concat(&word_pow(1, n));
                let d = qp.delta_element(&NcPoly::word(w)).unwrap();
                let mut expect = TensorPoly::zero();
                for i in 0..=n {
                    expect.add_term(
                        q_binomial(n, i, &q).unwrap(),
                        word_pow(0, m + i).concat(&word_pow(1, n - i)),
                        word_pow(0, m).concat(&word_pow(1, i)),
                    );
                }
                assert_eq!(d, expect, "delta mismatch at m={m}, n={n}");
            }
        }
    }

    #[test]
    fn epsilon_examples() {
        let qp = load("quantum_plane").unwrap();
        // ε(x^m y^n) = δ_{n,0}
        for m in 0..3u32 {
            for n in 0..3u32 {
                let w = word_pow(0, m).concat(&word_pow(1, n));
                let e = qp.epsilon_element(&NcPoly::word(w)).unwrap();
                let expect = if n == 0 { scalar::one() } else { scalar::zero() };
                assert_eq!(e, expect);
            }
        }
        let kx = load("poly_grouplike").unwrap();
        assert_eq!(
            kx.epsilon_element(&NcPoly::word(word_pow(0, 5))).unwrap(),
            scalar::one()
        );
        // Δ(X^3) = X^3 (x) X^3
        let d = kx.delta_element(&NcPoly::word(word_pow(0, 3))).unwrap();
        assert_eq!(
            d,
            TensorPoly::from_term(scalar::one(), word_pow(0, 3), word_pow(0, 3))
        );
    }

    #[test]
    fn axioms_pass_on_catalog_window_four() {
        for (name, _) in names() {
            let pres = load(name).unwrap();
            let report = pres.check_axioms(4).unwrap();
            assert!(
                report.passed(),
                "{name} failed: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn axioms_pass_on_catalog_window_five() {
        for (name, _) in names() {
            let pres = load(name).unwrap();
            let report = pres.check_axioms(5).unwrap();
            assert!(
                report.passed(),
                "{name} failed: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn bi_ideal_failure_is_witnessed() {
        // quantum plane at q = 2 with the extra rules x^3 -> x, y^2 -> 0:
        // Δ(y^2) leaves the residue (q+1)·xy (x) y.
        const X: u32 = 0;
        const Y: u32 = 1;
        let q = scalar::from_i64(2);
        let rules = vec![
            Rule {
                lhs: Word::from_slice(&[Y, X]),
                rhs: NcPoly::from_term(q.clone(), Word::from_slice(&[X, Y])),
            },
            Rule {
                lhs: Word::from_slice(&[X, X, X]),
                rhs: NcPoly::word(Word::gen(X)),
            },
            Rule {
                lhs: Word::from_slice(&[Y, Y]),
                rhs: NcPoly::zero(),
            },
        ];
        // note: this system is intentionally not confluent at q = 2, so it is
        // built without a certificate; the axiom check runs regardless.
        let system = ReductionSystem::new(rules, MonomialOrder::deglex(2)).unwrap();
        let pres = Presentation {
            name: "bad_sixdim".to_string(),
            backend: Backend::Free(FreeData {
                gens: vec!["x".to_string(), "y".to_string()],
                system,
                delta: vec![grouplike(X), qp_delta_y(X, Y)],
                counit: vec![scalar::one(), scalar::zero()],
            }),
            q: Some(q),
            flags: Flags::default(),
            antipode_data: None,
        };
        let report = pres.check_axioms(3).unwrap();
        assert!(!report.passed());
        let failure = report
            .failures()
            .find(|c| c.name.contains("bi-ideal") && c.name.contains("y.y"))
            .expect("expected a bi-ideal failure on y.y");
        let witness = failure.witness.as_deref().unwrap();
        assert!(witness.contains("3 x.y (x) y"), "witness was {witness}");
    }

    #[test]
    fn sixdim_is_finite_dimensional_with_six_elements() {
        let six = load("sixdim").unwrap();
        let full = six.full_basis().unwrap();
        assert_eq!(full.words.len(), 6);
        let h4 = load("sweedler_h4").unwrap();
        assert_eq!(h4.full_basis().unwrap().words.len(), 4);
        let kx = load("poly_grouplike").unwrap();
        assert!(kx.full_basis().is_err());
    }

    #[test]
    fn a_times_k_tables_are_consistent() {
        let b = load("a_times_k").unwrap();
        assert_eq!(b.num_symbols(), 3);
        let report = b.check_axioms(2).unwrap();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        let unit = b.unit_poly();
        assert_eq!(b.epsilon_element(&unit).unwrap(), scalar::one());
    }
}
