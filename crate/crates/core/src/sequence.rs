//! Monomial sequences and the d-sequence / proper-sequence classifiers.
//!
//! Each property is decided twice: by a closed-form divisibility criterion
//! on gcds ("theorem" checks) and by evaluating the defining colon-ideal or
//! Koszul-homology condition directly ("oracle" checks).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{is_regular_sequence, MonomialIdeal};
use crate::monomial::{Monomial, VariableSet, MAX_INPUT_EXPONENT};

/// An ordered sequence `f_1, ..., f_n` of non-constant monomials over one
/// variable set.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialSequence {
    vars: VariableSet,
    items: Vec<Monomial>,
}

impl MonomialSequence {
    pub fn new(vars: VariableSet, items: Vec<Monomial>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::InvalidInput("a sequence needs at least one monomial".into()));
        }
        for (pos, f) in items.iter().enumerate() {
            if f.ambient() != vars.len() {
                return Err(Error::InvalidInput(format!(
                    "f_{} has {} exponents but the ring has {} variables",
                    pos + 1,
                    f.ambient(),
                    vars.len()
                )));
            }
            if f.is_one() {
                return Err(Error::InvalidInput(format!(
                    "f_{} is the unit monomial",
                    pos + 1
                )));
            }
            if let Some(e) = f.exponents().iter().find(|&&e| e > MAX_INPUT_EXPONENT) {
                return Err(Error::InvalidInput(format!(
                    "f_{}: exponent {e} exceeds {MAX_INPUT_EXPONENT}",
                    pos + 1
                )));
            }
        }
        Ok(MonomialSequence { vars, items })
    }

    /// Sequence over the standard variables `x1..xm`.
    pub fn from_exponents(m: usize, exps: &[Vec<u32>]) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("the ring needs at least one variable".into()));
        }
        let items = exps.iter().map(|e| Monomial::new(e.clone())).collect();
        MonomialSequence::new(VariableSet::standard(m), items)
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    /// Number of ring variables `m`.
    pub fn ambient(&self) -> usize {
        self.vars.len()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Monomial] {
        &self.items
    }

    pub fn get(&self, index: usize) -> &Monomial {
        &self.items[index]
    }

    /// `f_{ij} = f_i / [f_i, f_j]` (0-based indices).
    pub fn reduced(&self, i: usize, j: usize) -> Monomial {
        self.items[i].reduced_by(&self.items[j])
    }

    pub fn gcd(&self, i: usize, j: usize) -> Monomial {
        self.items[i].gcd(&self.items[j])
    }

    pub fn is_squarefree(&self) -> bool {
        self.items.iter().all(Monomial::is_squarefree)
    }

    pub fn is_equigenerated(&self) -> bool {
        let d = self.items[0].degree();
        self.items.iter().all(|f| f.degree() == d)
    }

    /// The sequence reordered by `perm` (`perm[k]` is the old index of the
    /// new `k`-th item).
    pub fn permuted(&self, perm: &[usize]) -> MonomialSequence {
        MonomialSequence {
            vars: self.vars.clone(),
            items: perm.iter().map(|&k| self.items[k].clone()).collect(),
        }
    }

    /// Order-preserving subsequence at the given (increasing) indices.
    pub fn subsequence(&self, indices: &[usize]) -> Result<MonomialSequence> {
        if indices.is_empty() || indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "subsequence indices must be non-empty and strictly increasing".into(),
            ));
        }
        Ok(self.permuted(indices))
    }

    /// The ideal `(f_1, ..., f_k)` of the first `k` items.
    pub fn prefix_ideal(&self, k: usize) -> MonomialIdeal {
        MonomialIdeal::generated_by(self.ambient(), &self.items[..k])
    }

    pub fn display_item(&self, index: usize) -> String {
        self.items[index].display_with(&self.vars).to_string()
    }
}

impl fmt::Display for MonomialSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, item) in self.items.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", item.display_with(&self.vars))?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for MonomialSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// How a verdict was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Theorem,
    Oracle,
    BothAgree,
}

/// Counterexample attached to a negative verdict. Positions are 1-based, as
/// in `f_1, ..., f_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `f_i | f_j` with `i != j`.
    Divides { i: usize, j: usize },
    /// `[f_i, f_j]` does not divide `f_k`.
    GcdNotDividing { i: usize, j: usize, k: usize },
    /// `[f_i, f_j] != [f_i, f_j^2]`.
    GcdSquareMismatch { i: usize, j: usize },
    /// `(f_1..f_i) : f_{i+1} f_k != (f_1..f_i) : f_k`.
    ColonMismatch { i: usize, k: usize },
    /// `f_{r+1} (f_ij e_j - f_ji e_i)` is not a boundary in the Koszul complex
    /// of `f_1..f_r`.
    KoszulNonBoundary { r: usize, i: usize, j: usize },
    /// `[f_i, f_j] != [f_k, f_l]`.
    UnequalPairGcds { i: usize, j: usize, k: usize, l: usize },
    /// `g_i` and `g_j` of the decomposition share a variable.
    NotRegular { i: usize, j: usize },
    /// `[d, g_i] != 1`.
    CommonFactorNotCoprime { i: usize },
    /// `I_i` is not contained in `I_{i+1}`.
    ChainBreak { i: usize },
    /// A leading monomial of the reduced Gröbner basis outside `(I_1 y_1, ..., I_n y_n)`.
    ExtraLeadingMonomial { monomial: String },
    /// A quadruple `(i, j, k, l)` for which none of the allowed branches holds.
    Quadruple { i: usize, j: usize, k: usize, l: usize },
    /// Pairs `(i, j)`, `(k, l)` with `[f_ij, f_kl] != 1`.
    NotCoprimePairs { i: usize, j: usize, k: usize, l: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Divides { i, j } => write!(f, "f_{i} divides f_{j}"),
            Witness::GcdNotDividing { i, j, k } => write!(f, "[f_{i},f_{j}] does not divide f_{k}"),
            Witness::GcdSquareMismatch { i, j } => write!(f, "[f_{i},f_{j}] != [f_{i},f_{j}^2]"),
            Witness::ColonMismatch { i, k } => {
                write!(f, "(f_1..f_{i}):f_{}f_{k} != (f_1..f_{i}):f_{k}", i + 1)
            }
            Witness::KoszulNonBoundary { r, i, j } => write!(
                f,
                "f_{}(f_{i}{j} e_{j} - f_{j}{i} e_{i}) is not a boundary over f_1..f_{r}",
                r + 1
            ),
            Witness::UnequalPairGcds { i, j, k, l } => {
                write!(f, "[f_{i},f_{j}] != [f_{k},f_{l}]")
            }
            Witness::NotRegular { i, j } => write!(f, "g_{i} and g_{j} are not coprime"),
            Witness::CommonFactorNotCoprime { i } => write!(f, "[d, g_{i}] != 1"),
            Witness::ChainBreak { i } => write!(f, "I_{i} not contained in I_{}", i + 1),
            Witness::ExtraLeadingMonomial { monomial } => {
                write!(f, "leading monomial {monomial} not in (I_1 y_1, ..., I_n y_n)")
            }
            Witness::Quadruple { i, j, k, l } => {
                write!(f, "no branch holds for (i,j,k,l) = ({i},{j},{k},{l})")
            }
            Witness::NotCoprimePairs { i, j, k, l } => write!(f, "[f_{i}{j}, f_{k}{l}] != 1"),
        }
    }
}

/// Outcome of one classification check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: bool,
    pub method: Method,
    /// Present exactly when `value` is false.
    pub witness: Option<Witness>,
    /// Set when a theorem-based check was evaluated on input that violates
    /// the theorem's hypothesis (e.g. a non-minimal sequence), so the
    /// criterion's value need not coincide with the property itself.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub outside_hypothesis: bool,
}

impl Verdict {
    pub fn holds(method: Method) -> Self {
        Verdict {
            value: true,
            method,
            witness: None,
            outside_hypothesis: false,
        }
    }

    pub fn fails(method: Method, witness: Witness) -> Self {
        Verdict {
            value: false,
            method,
            witness: Some(witness),
            outside_hypothesis: false,
        }
    }

    fn from_witness(method: Method, witness: Option<Witness>) -> Self {
        match witness {
            None => Verdict::holds(method),
            Some(w) => Verdict::fails(method, w),
        }
    }

    /// Merges a theorem verdict with an oracle verdict on the same question.
    /// Disagreement is an internal consistency failure.
    pub fn agree(theorem: Verdict, oracle: Verdict, what: &str) -> Result<Verdict> {
        if theorem.value != oracle.value {
            return Err(Error::Consistency(format!(
                "{what}: theorem says {} ({}), oracle says {} ({})",
                theorem.value,
                theorem.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
                oracle.value,
                oracle.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
            )));
        }
        Ok(Verdict {
            method: Method::BothAgree,
            ..theorem
        })
    }
}

/// First `(i, j, k)` with `i < j < k` and `[f_i, f_j]` not dividing `f_k`.
pub(crate) fn first_triple_failure(seq: &MonomialSequence) -> Option<Witness> {
    let n = seq.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = seq.gcd(i, j);
            for k in j + 1..n {
                if !g.divides(seq.get(k)) {
                    return Some(Witness::GcdNotDividing {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                    });
                }
            }
        }
    }
    None
}

/// `[f_i, f_j] | f_k` for all `i < j < k`.
pub fn divisibility_hypothesis(seq: &MonomialSequence) -> Verdict {
    Verdict::from_witness(Method::Theorem, first_triple_failure(seq))
}

/// No item divides another.
pub fn is_minimal(seq: &MonomialSequence) -> Verdict {
    let n = seq.len();
    for i in 0..n {
        for j in 0..n {
            if i != j && seq.get(i).divides(seq.get(j)) {
                return Verdict::fails(Method::Theorem, Witness::Divides { i: i + 1, j: j + 1 });
            }
        }
    }
    Verdict::holds(Method::Theorem)
}

/// d-sequence via the gcd criterion: minimal, `[f_i,f_j] | f_k` for
/// `i < j < k`, and `[f_i,f_j] = [f_i,f_j^2]` for `i < j`.
pub fn is_d_sequence_theorem(seq: &MonomialSequence) -> Verdict {
    let minimal = is_minimal(seq);
    if !minimal.value {
        return minimal;
    }
    if let Some(w) = first_triple_failure(seq) {
        return Verdict::fails(Method::Theorem, w);
    }
    let n = seq.len();
    for i in 0..n {
        for j in i + 1..n {
            if seq.gcd(i, j) != seq.get(i).gcd(&seq.get(j).pow(2)) {
                return Verdict::fails(
                    Method::Theorem,
                    Witness::GcdSquareMismatch { i: i + 1, j: j + 1 },
                );
            }
        }
    }
    Verdict::holds(Method::Theorem)
}

/// d-sequence from the definition: minimal generation and
/// `(f_1..f_i) : f_{i+1} f_k = (f_1..f_i) : f_k` for all `i >= 1`, `k > i`.
/// The `i = 0` conditions compare zero ideals and always hold.
pub fn is_d_sequence_oracle(seq: &MonomialSequence) -> Verdict {
    let minimal = is_minimal(seq);
    if !minimal.value {
        return Verdict {
            method: Method::Oracle,
            ..minimal
        };
    }
    let n = seq.len();
    for i in 1..n {
        let prefix = seq.prefix_ideal(i);
        for k in i..n {
            let fk = seq.get(k);
            let lhs = prefix.colon_by_monomial(&seq.get(i).mul(fk));
            let rhs = prefix.colon_by_monomial(fk);
            if !lhs.equals(&rhs) {
                return Verdict::fails(Method::Oracle, Witness::ColonMismatch { i, k: k + 1 });
            }
        }
    }
    Verdict::holds(Method::Oracle)
}

/// Proper sequence via the gcd criterion `[f_i, f_j] | f_k` for `i < j < k`.
///
/// The criterion characterizes proper sequences among minimal ones; on
/// non-minimal input the verdict is flagged `outside_hypothesis`.
pub fn is_proper_theorem(seq: &MonomialSequence) -> Verdict {
    let mut v = divisibility_hypothesis(seq);
    v.outside_hypothesis = !is_minimal(seq).value;
    v
}

/// `d` and `g_1..g_n` with `f_i = d g_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub common: Monomial,
    pub cofactors: Vec<Monomial>,
}

/// Unconditional proper sequence: all pairwise gcds coincide (call the
/// common value `d`) and the cofactors `g_i = f_i / d` are pairwise coprime.
pub fn is_unconditional_proper(seq: &MonomialSequence) -> (Verdict, Option<Decomposition>) {
    let n = seq.len();
    if n == 1 {
        let dec = Decomposition {
            common: Monomial::one(seq.ambient()),
            cofactors: seq.items().to_vec(),
        };
        return (Verdict::holds(Method::Theorem), Some(dec));
    }
    let d = seq.gcd(0, 1);
    for i in 0..n {
        for j in i + 1..n {
            if seq.gcd(i, j) != d {
                return (
                    Verdict::fails(
                        Method::Theorem,
                        Witness::UnequalPairGcds {
                            i: 1,
                            j: 2,
                            k: i + 1,
                            l: j + 1,
                        },
                    ),
                    None,
                );
            }
        }
    }
    let cofactors: Vec<Monomial> = seq.items().iter().map(|f| f.quotient(&d)).collect();
    // a constant cofactor means f_p = d divides every other item
    if let Some(p) = cofactors.iter().position(Monomial::is_one) {
        let other = if p == 0 { 2 } else { 1 };
        return (
            Verdict::fails(Method::Theorem, Witness::Divides { i: p + 1, j: other }),
            None,
        );
    }
    if !is_regular_sequence(&cofactors).expect("cofactors are non-constant") {
        let witness = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !cofactors[i].is_coprime(&cofactors[j]))
            .map(|(i, j)| Witness::NotRegular { i: i + 1, j: j + 1 })
            .expect("a non-coprime pair exists");
        return (Verdict::fails(Method::Theorem, witness), None);
    }
    let dec = Decomposition {
        common: d,
        cofactors,
    };
    (Verdict::holds(Method::Theorem), Some(dec))
}

/// Unconditional d-sequence: unconditional proper and `[d, g_i] = 1` for all `i`.
pub fn is_unconditional_d(seq: &MonomialSequence) -> (Verdict, Option<Decomposition>) {
    let (v, dec) = is_unconditional_proper(seq);
    let Some(dec) = dec else {
        return (v, None);
    };
    if let Some(i) = dec.cofactors.iter().position(|g| !g.is_coprime(&dec.common)) {
        return (
            Verdict::fails(Method::Theorem, Witness::CommonFactorNotCoprime { i: i + 1 }),
            None,
        );
    }
    (Verdict::holds(Method::Theorem), Some(dec))
}

/// For squarefree minimal sequences the proper and d-sequence criteria
/// coincide; returns the shared value.
pub fn squarefree_d_proper_equivalence_check(seq: &MonomialSequence) -> Result<bool> {
    if !seq.is_squarefree() {
        return Err(Error::InvalidInput("sequence is not squarefree".into()));
    }
    if !is_minimal(seq).value {
        return Err(Error::InvalidInput("sequence is not minimal".into()));
    }
    let proper = is_proper_theorem(seq).value;
    let d = is_d_sequence_theorem(seq).value;
    if proper != d {
        return Err(Error::Consistency(format!(
            "squarefree {seq}: proper = {proper} but d-sequence = {d}"
        )));
    }
    Ok(d)
}
