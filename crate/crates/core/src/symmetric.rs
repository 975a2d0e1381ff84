//! Invariants of `Sym(I)`, `I = (f_1, ..., f_n)`, for sequences with
//! `[f_i, f_j] | f_k` for all `i < j < k`, and their checks through the
//! initial ideal of the relation ideal `J`.
//!
//! Multiplicities use the standard grading with every `x` and `y` variable in
//! degree 1. In that grading `R[y]/(x1 y2)` has Hilbert function `(d+1)^2`
//! and multiplicity 2, while the product sum over `i >= 2` gives 1. The
//! missing term is `e(R/I_1) = e(R) = 1`, so [`SymInvariants::multiplicity`]
//! is `1 + Σ_{i≥2} Π_{j<i} deg f_ji`; the bare sum is kept as
//! [`SymInvariants::annihilator_sum`].

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, multiplicity_of_quotient};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poly::{GroebnerLimits, MonomialOrder};
use crate::s_sequence::{is_s_sequence_groebner, SSequenceOutcome};
use crate::sequence::{first_triple_failure, MonomialSequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymInvariants {
    pub hypothesis_ok: bool,
    /// All `deg f_i` equal.
    pub equigenerated: bool,
    /// `m + 1`.
    pub dimension: Option<usize>,
    /// `1 + annihilator_sum`.
    #[serde(with = "crate::bigint_serde::option")]
    pub multiplicity: Option<BigInt>,
    /// `Σ_{i=2}^n Π_{j<i} deg f_ji`.
    #[serde(with = "crate::bigint_serde::option")]
    pub annihilator_sum: Option<BigInt>,
    /// `max_{2≤i≤n} (Σ_{j<i} deg f_ji − (i − 2))`, only for equigenerated
    /// sequences; 0 when `n = 1`.
    pub reg_bound: Option<i64>,
}

/// Formula values; everything but the two flags is absent when the
/// divisibility hypothesis fails.
pub fn sym_invariants(seq: &MonomialSequence) -> SymInvariants {
    let equigenerated = seq.is_equigenerated();
    if first_triple_failure(seq).is_some() {
        return SymInvariants {
            hypothesis_ok: false,
            equigenerated,
            dimension: None,
            multiplicity: None,
            annihilator_sum: None,
            reg_bound: None,
        };
    }
    let n = seq.len();
    let degrees = |i: usize| (0..i).map(move |j| seq.reduced(j, i).degree());
    let sum: BigInt = (1..n)
        .map(|i| degrees(i).fold(BigInt::one(), |acc, d| acc * BigInt::from(d)))
        .sum();
    let reg_bound = equigenerated.then(|| {
        (1..n)
            .map(|i| degrees(i).sum::<u64>() as i64 - (i as i64 - 1))
            .max()
            .unwrap_or(0)
    });
    SymInvariants {
        hypothesis_ok: true,
        equigenerated,
        dimension: Some(seq.ambient() + 1),
        multiplicity: Some(&sum + 1),
        annihilator_sum: Some(sum),
        reg_bound,
    }
}

fn require_hypothesis(seq: &MonomialSequence) -> Result<()> {
    match first_triple_failure(seq) {
        None => Ok(()),
        Some(w) => Err(Error::Precondition(w.to_string())),
    }
}

/// Krull dimension of `R[y]/in(J)` from an already computed outcome.
pub fn dimension_of_initial(seq: &MonomialSequence, outcome: &SSequenceOutcome) -> Result<usize> {
    outcome
        .initial_ideal
        .krull_dimension_of_quotient(seq.ambient() + seq.len())
}

/// `dim R[y]/in(J) = m + 1`.
pub fn cross_check_dimension(
    seq: &MonomialSequence,
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<bool> {
    require_hypothesis(seq)?;
    let outcome = is_s_sequence_groebner(seq, order, limits)?;
    Ok(dimension_of_initial(seq, &outcome)? == seq.ambient() + 1)
}

/// Result of comparing the multiplicity formula with the Hilbert series of
/// `R[y]/in(J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum MultiplicityCheck {
    Agree {
        #[serde(with = "crate::bigint_serde")]
        value: BigInt,
    },
    Mismatch {
        #[serde(with = "crate::bigint_serde")]
        formula: BigInt,
        #[serde(with = "crate::bigint_serde")]
        hilbert: BigInt,
    },
    /// Not comparable in the standard grading.
    Skipped { reason: String },
}

impl MultiplicityCheck {
    pub fn agrees(&self) -> bool {
        matches!(self, MultiplicityCheck::Agree { .. })
    }
}

fn skip_reason(invariants: &SymInvariants) -> Option<String> {
    if !invariants.hypothesis_ok {
        Some("divisibility hypothesis fails".into())
    } else if !invariants.equigenerated {
        Some("not equigenerated, J is not homogeneous".into())
    } else {
        None
    }
}

/// Compares from an already computed outcome.
pub fn multiplicity_check_with(
    seq: &MonomialSequence,
    invariants: &SymInvariants,
    outcome: &SSequenceOutcome,
) -> Result<MultiplicityCheck> {
    if let Some(reason) = skip_reason(invariants) {
        return Ok(MultiplicityCheck::Skipped { reason });
    }
    let formula = invariants.multiplicity.clone().expect("hypothesis holds");
    let hilbert = multiplicity_of_quotient(&outcome.initial_ideal, seq.ambient() + seq.len())?;
    Ok(if hilbert == formula {
        MultiplicityCheck::Agree { value: formula }
    } else {
        MultiplicityCheck::Mismatch { formula, hilbert }
    })
}

pub fn cross_check_multiplicity(
    seq: &MonomialSequence,
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<MultiplicityCheck> {
    require_hypothesis(seq)?;
    let invariants = sym_invariants(seq);
    if let Some(reason) = skip_reason(&invariants) {
        return Ok(MultiplicityCheck::Skipped { reason });
    }
    let outcome = is_s_sequence_groebner(seq, order, limits)?;
    multiplicity_check_with(seq, &invariants, &outcome)
}

/// Brute-force Hilbert function of `K[x1, x2, y1, y2]/(x1 y2)`, the relation
/// ring of `[x1, x2]`, which fixes the grading convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PinningReport {
    pub max_degree: u32,
    pub counts: Vec<u64>,
    /// `counts[d] == (d + 1)^2` for every `d`.
    pub square_law: bool,
    /// Multiplicity from the Hilbert series.
    #[serde(with = "crate::bigint_serde")]
    pub hilbert_multiplicity: BigInt,
    /// The bare product sum for `[x1, x2]`.
    #[serde(with = "crate::bigint_serde")]
    pub annihilator_sum: BigInt,
    /// `1 + annihilator_sum`.
    #[serde(with = "crate::bigint_serde")]
    pub multiplicity: BigInt,
}

impl PinningReport {
    pub fn pinned(&self) -> bool {
        self.square_law && self.hilbert_multiplicity == self.multiplicity
    }
}

pub fn pinning_experiment(max_degree: u32) -> Result<PinningReport> {
    let seq = MonomialSequence::from_exponents(2, &[vec![1, 0], vec![0, 1]])?;
    // flattened variables x1, x2, y1, y2
    let x1y2 = Monomial::new(vec![1, 0, 0, 1]);
    let ideal = MonomialIdeal::generated_by(4, &[x1y2]);
    let counts = hilbert_function(&ideal, max_degree);
    let square_law = counts
        .iter()
        .enumerate()
        .all(|(d, &c)| c == (d as u64 + 1).pow(2));
    let invariants = sym_invariants(&seq);
    Ok(PinningReport {
        max_degree,
        counts,
        square_law,
        hilbert_multiplicity: multiplicity_of_quotient(&ideal, 4)?,
        annihilator_sum: invariants.annihilator_sum.expect("hypothesis holds"),
        multiplicity: invariants.multiplicity.expect("hypothesis holds"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sf(m: usize, items: &[&[usize]]) -> MonomialSequence {
        let exps: Vec<Vec<u32>> = items
            .iter()
            .map(|vs| {
                let mut e = vec![0; m];
                for &v in vs.iter() {
                    e[v - 1] += 1;
                }
                e
            })
            .collect();
        MonomialSequence::from_exponents(m, &exps).unwrap()
    }

    fn lim() -> GroebnerLimits {
        GroebnerLimits::default()
    }

    #[test]
    fn formula_examples() {
        let inv = sym_invariants(&sf(3, &[&[1], &[2], &[3]]));
        assert!(inv.hypothesis_ok && inv.equigenerated);
        assert_eq!(inv.dimension, Some(4));
        assert_eq!(inv.annihilator_sum, Some(2.into()));
        assert_eq!(inv.multiplicity, Some(3.into()));
        assert_eq!(inv.reg_bound, Some(1));

        let inv = sym_invariants(&sf(4, &[&[1, 2], &[2, 3], &[2, 4]]));
        assert_eq!(inv.dimension, Some(5));
        assert_eq!(inv.annihilator_sum, Some(2.into()));
        assert_eq!(inv.multiplicity, Some(3.into()));
        assert_eq!(inv.reg_bound, Some(1));

        let a = sf(9, &[&[1, 2, 3], &[4, 5, 6], &[2, 3, 7], &[7, 8, 9]]);
        let inv = sym_invariants(&a);
        assert!(!inv.hypothesis_ok);
        assert_eq!(inv.multiplicity, None);

        let inv = sym_invariants(&sf(2, &[&[1, 2]]));
        assert_eq!(inv.dimension, Some(3));
        assert_eq!(inv.multiplicity, Some(1.into()));
        assert_eq!(inv.reg_bound, Some(0));

        // not equigenerated: no regularity bound
        let inv = sym_invariants(&sf(3, &[&[1], &[2, 3]]));
        assert!(inv.hypothesis_ok && !inv.equigenerated);
        assert_eq!(inv.reg_bound, None);
        assert_eq!(inv.multiplicity, Some(2.into()));
    }

    #[test]
    fn dimension_examples() {
        for s in [
            sf(3, &[&[1], &[2], &[3]]),
            sf(4, &[&[1, 2], &[2, 3], &[2, 4]]),
            sf(2, &[&[1, 2]]),
        ] {
            assert!(cross_check_dimension(&s, MonomialOrder::Lex, lim()).unwrap(), "{s}");
        }
        let a = sf(9, &[&[1, 2, 3], &[4, 5, 6], &[2, 3, 7], &[7, 8, 9]]);
        assert!(matches!(
            cross_check_dimension(&a, MonomialOrder::Lex, lim()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn multiplicity_examples() {
        // in(J) = (x1 y2, x1 y3, x2 y3) in six variables
        let check = cross_check_multiplicity(&sf(3, &[&[1], &[2], &[3]]), MonomialOrder::Lex, lim());
        assert_eq!(check.unwrap(), MultiplicityCheck::Agree { value: 3.into() });
        let check =
            cross_check_multiplicity(&sf(4, &[&[1, 2], &[2, 3], &[2, 4]]), MonomialOrder::Lex, lim());
        assert_eq!(check.unwrap(), MultiplicityCheck::Agree { value: 3.into() });
        let check = cross_check_multiplicity(&sf(2, &[&[1], &[2]]), MonomialOrder::Deg, lim());
        assert_eq!(check.unwrap(), MultiplicityCheck::Agree { value: 2.into() });
        let check = cross_check_multiplicity(&sf(3, &[&[1], &[2, 3]]), MonomialOrder::Lex, lim());
        assert!(matches!(check.unwrap(), MultiplicityCheck::Skipped { .. }));
    }

    #[test]
    fn initial_ideal_hilbert_function_for_three_variables() {
        // independent count for [x1, x2, x3]: degree-d standard monomials of
        // (x1 y2, x1 y3, x2 y3) over x1, x2, x3, y1, y2, y3
        let ideal = MonomialIdeal::generated_by(
            6,
            &[
                Monomial::new(vec![1, 0, 0, 0, 1, 0]),
                Monomial::new(vec![1, 0, 0, 0, 0, 1]),
                Monomial::new(vec![0, 1, 0, 0, 0, 1]),
            ],
        );
        let hf: Vec<i64> = hilbert_function(&ideal, 12).into_iter().map(|c| c as i64).collect();
        // for a Hilbert polynomial of degree 3 the third difference is e
        let third_difference = hf[12] - 3 * hf[11] + 3 * hf[10] - hf[9];
        assert_eq!(third_difference, 3, "{hf:?}");
    }

    #[test]
    fn pinning() {
        let r = pinning_experiment(10).unwrap();
        assert_eq!(r.counts, (0..=10u64).map(|d| (d + 1) * (d + 1)).collect::<Vec<_>>());
        assert!(r.square_law);
        assert_eq!(r.hilbert_multiplicity, 2.into());
        assert_eq!(r.annihilator_sum, 1.into());
        assert!(r.pinned());
    }

    fn hypothesis_sequence() -> impl Strategy<Value = (MonomialSequence, Vec<usize>)> {
        // planted: f_i = c * g_i with g_i pairwise coprime squarefree blocks
        (1usize..4, 2usize..6).prop_flat_map(|(n, m)| {
            (
                prop::collection::vec(prop::collection::vec(0u32..3, m), n),
                Just(m),
            )
                .prop_flat_map(|(rows, m)| {
                    let perm = Just((0..m).collect::<Vec<usize>>()).prop_shuffle();
                    (Just(rows), Just(m), perm)
                })
        })
        .prop_filter_map("valid sequence", |(rows, m, perm)| {
            let s = MonomialSequence::from_exponents(m, &rows).ok()?;
            Some((s, perm))
        })
    }

    proptest! {
        #[test]
        fn reg_bound_invariant_under_variable_relabelling((s, perm) in hypothesis_sequence()) {
            let rows: Vec<Vec<u32>> = s
                .items()
                .iter()
                .map(|f| perm.iter().map(|&p| f.exponent(p)).collect())
                .collect();
            let t = MonomialSequence::from_exponents(s.ambient(), &rows).unwrap();
            let (a, b) = (sym_invariants(&s), sym_invariants(&t));
            prop_assert_eq!(a.hypothesis_ok, b.hypothesis_ok);
            prop_assert_eq!(a.reg_bound, b.reg_bound);
            prop_assert_eq!(a.multiplicity, b.multiplicity);
        }
    }
}
