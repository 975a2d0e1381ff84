//! s-sequences: the relation ideal `J` of `Sym(I)`, the annihilator ideals
//! `I_i = (f_1..f_{i-1}) : f_i`, the Gröbner-basis test, and the sufficient
//! conditions that avoid Gröbner bases altogether.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{is_regular_sequence, MonomialIdeal};
use crate::monomial::Monomial;
use crate::poly::{
    buchberger, initial_ideal, is_groebner_basis, GroebnerBasis, GroebnerLimits, MonomialOrder,
    Polynomial, RingMonomial,
};
use crate::sequence::{first_triple_failure, is_minimal, Method, MonomialSequence, Verdict, Witness};

/// Generators `g_ij = f_ij y_j − f_ji y_i` (`i < j`) of the relation ideal `J`.
#[derive(Clone, Debug)]
pub struct RelationIdeal {
    /// `(i, j, g_ij)` with 0-based `i < j`.
    pub generators: Vec<(usize, usize, Polynomial)>,
    pub m: usize,
    pub n: usize,
}

impl RelationIdeal {
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.generators.iter().map(|(_, _, g)| g.clone()).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Polynomial> {
        self.generators
            .iter()
            .find(|(a, b, _)| *a == i && *b == j)
            .map(|(_, _, g)| g)
    }
}

pub fn build_relation_generators(seq: &MonomialSequence, order: MonomialOrder) -> RelationIdeal {
    let (m, n) = (seq.ambient(), seq.len());
    let mut generators = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let (fij, fji) = seq.get(i).reduced_pair(seq.get(j));
            let lead = RingMonomial::x_times_y(fij, n, j);
            let tail = RingMonomial::x_times_y(fji, n, i);
            generators.push((i, j, Polynomial::binomial(order, lead, tail)));
        }
    }
    RelationIdeal { generators, m, n }
}

/// The ideals `I_1 = 0, I_2, ..., I_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorChain {
    pub ideals: Vec<MonomialIdeal>,
}

impl AnnihilatorChain {
    /// First `i` (1-based) with `I_i ⊄ I_{i+1}`.
    pub fn first_break(&self) -> Option<usize> {
        self.ideals
            .windows(2)
            .position(|w| !w[0].is_subset(&w[1]))
            .map(|p| p + 1)
    }

    pub fn is_increasing(&self) -> bool {
        self.first_break().is_none()
    }
}

/// `I_i = (f_1i, ..., f_{i-1,i})`, checked against the colon
/// `(f_1..f_{i-1}) : f_i`.
pub fn annihilator_chain(seq: &MonomialSequence) -> Result<AnnihilatorChain> {
    let m = seq.ambient();
    let mut ideals = Vec::with_capacity(seq.len());
    for i in 0..seq.len() {
        let gens: Vec<Monomial> = (0..i).map(|j| seq.reduced(j, i)).collect();
        let ideal = MonomialIdeal::generated_by(m, &gens);
        let colon = seq.prefix_ideal(i).colon_by_monomial(seq.get(i));
        if ideal != colon {
            return Err(Error::Consistency(format!(
                "I_{} = {ideal} but the colon ideal is {colon}",
                i + 1
            )));
        }
        ideals.push(ideal);
    }
    Ok(AnnihilatorChain { ideals })
}

/// `(I_1 y_1, ..., I_n y_n)` as a monomial ideal over `x_1..x_m, y_1..y_n`.
pub fn expected_initial_ideal(chain: &AnnihilatorChain, m: usize) -> MonomialIdeal {
    let n = chain.ideals.len();
    let gens: Vec<Monomial> = chain
        .ideals
        .iter()
        .enumerate()
        .flat_map(|(i, ideal)| {
            ideal
                .generators()
                .iter()
                .map(move |g| RingMonomial::x_times_y(g.clone(), n, i).flatten())
        })
        .collect();
    MonomialIdeal::generated_by(m + n, &gens)
}

/// Renders a monomial over the flattened `x, y` variables.
pub fn display_flat(mono: &Monomial, m: usize) -> String {
    RingMonomial::unflatten(mono, m).to_string()
}

/// Everything computed while deciding whether a sequence is an s-sequence.
#[derive(Clone, Debug)]
pub struct SSequenceOutcome {
    pub verdict: Verdict,
    pub order: MonomialOrder,
    pub basis: GroebnerBasis,
    pub chain: AnnihilatorChain,
    pub initial_ideal: MonomialIdeal,
    pub expected: MonomialIdeal,
}

/// Ground truth for the s-sequence property: the reduced Gröbner basis of `J`
/// has initial ideal `(I_1 y_1, ..., I_n y_n)`.
///
/// Also checks `(I_1 y_1, ..., I_n y_n) ⊆ in(J)` and that the verdict agrees
/// with whether the `g_ij` themselves form a Gröbner basis.
pub fn is_s_sequence_groebner(
    seq: &MonomialSequence,
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<SSequenceOutcome> {
    let m = seq.ambient();
    let relations = build_relation_generators(seq, order);
    let gens = relations.polynomials();
    let basis = buchberger(&gens, order, limits)?;
    let initial = initial_ideal(basis.polynomials(), m, seq.len())?;
    let chain = annihilator_chain(seq)?;
    let expected = expected_initial_ideal(&chain, m);
    if !expected.is_subset(&initial) {
        return Err(Error::Consistency(format!(
            "(I_1 y_1, ..., I_n y_n) = {expected} is not inside in(J) = {initial} for {seq}"
        )));
    }
    let verdict = match initial
        .generators()
        .iter()
        .find(|g| !expected.contains_monomial(g))
    {
        None => Verdict::holds(Method::Oracle),
        Some(extra) => Verdict::fails(
            Method::Oracle,
            Witness::ExtraLeadingMonomial {
                monomial: display_flat(extra, m),
            },
        ),
    };
    let generators_form_basis = is_groebner_basis(&gens)?;
    if generators_form_basis != verdict.value {
        return Err(Error::Consistency(format!(
            "{seq}: initial-ideal comparison gives {} but S-pair test of the g_ij gives {}",
            verdict.value, generators_form_basis
        )));
    }
    Ok(SSequenceOutcome {
        verdict,
        order,
        basis,
        chain,
        initial_ideal: initial,
        expected,
    })
}

/// Strong s-sequence: s-sequence with `I_1 ⊆ I_2 ⊆ ... ⊆ I_n`.
pub fn strong_from_outcome(outcome: &SSequenceOutcome) -> Verdict {
    if !outcome.verdict.value {
        return outcome.verdict.clone();
    }
    match outcome.chain.first_break() {
        None => Verdict::holds(Method::Oracle),
        Some(i) => Verdict::fails(Method::Oracle, Witness::ChainBreak { i }),
    }
}

pub fn is_strong_s_sequence(
    seq: &MonomialSequence,
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<Verdict> {
    is_s_sequence_groebner(seq, order, limits).map(|o| strong_from_outcome(&o))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Sufficient condition: `[f_ij, f_kl] = 1` whenever `i < j`, `k < l`,
/// `i != k`, `j != l`.
pub fn hrt_coprime_condition(seq: &MonomialSequence) -> Verdict {
    let n = seq.len();
    for (i, j) in pairs(n) {
        for (k, l) in pairs(n) {
            if i == k || j == l {
                continue;
            }
            if !seq.reduced(i, j).is_coprime(&seq.reduced(k, l)) {
                return Verdict::fails(
                    Method::Theorem,
                    Witness::NotCoprimePairs {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                        l: l + 1,
                    },
                );
            }
        }
    }
    Verdict::holds(Method::Theorem)
}

/// Which alternatives hold for one quadruple `(i, j, k, l)` with `i < j`,
/// `k < l`, `j < l`, `k != i`. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadrupleRecord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    /// `[f_ij, f_kl]`.
    pub bracket: Monomial,
    /// `[f_ij, f_kl] = 1`.
    pub coprime: bool,
    /// `f_jl [f_ij, f_kl] | f_kl f_ji`.
    pub via_jl: bool,
    /// `f_ki [f_ij, f_kl] | f_kl f_ji`; only considered when `i > k`.
    pub via_ki: Option<bool>,
    /// `[f_i, f_j] | f_l`.
    pub gcd_divides: bool,
}

/// Branch kinds of the quadruple condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Coprime,
    ViaJl,
    ViaKi,
}

impl QuadrupleRecord {
    pub fn theorem_holds(&self) -> bool {
        self.coprime || self.via_jl || self.via_ki == Some(true)
    }

    pub fn corollary_holds(&self) -> bool {
        self.coprime || self.gcd_divides
    }

    /// All branches that hold.
    pub fn branches(&self) -> Vec<Branch> {
        let mut out = Vec::new();
        if self.coprime {
            out.push(Branch::Coprime);
        }
        if self.via_jl {
            out.push(Branch::ViaJl);
        }
        if self.via_ki == Some(true) {
            out.push(Branch::ViaKi);
        }
        out
    }

    fn witness(&self) -> Witness {
        Witness::Quadruple {
            i: self.i,
            j: self.j,
            k: self.k,
            l: self.l,
        }
    }
}

/// Evaluates every quadruple `i < j`, `k < l`, `j < l`, `k != i` in
/// lexicographic order of `(i, j, k, l)`.
pub fn quadruple_table(seq: &MonomialSequence) -> Vec<QuadrupleRecord> {
    let n = seq.len();
    let mut out = Vec::new();
    for (i, j) in pairs(n) {
        for k in 0..n {
            for l in k + 1..n {
                if !(j < l && k != i) {
                    continue;
                }
                let fij = seq.reduced(i, j);
                let fkl = seq.reduced(k, l);
                let fji = seq.reduced(j, i);
                let bracket = fij.gcd(&fkl);
                let target = fkl.mul(&fji);
                let via_jl = seq.reduced(j, l).mul(&bracket).divides(&target);
                let via_ki = (i > k).then(|| seq.reduced(k, i).mul(&bracket).divides(&target));
                out.push(QuadrupleRecord {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    l: l + 1,
                    coprime: bracket.is_one(),
                    bracket,
                    via_jl,
                    via_ki,
                    gcd_divides: seq.gcd(i, j).divides(seq.get(l)),
                });
            }
        }
    }
    out
}

/// Sufficient condition: every quadruple satisfies one of the three branches.
pub fn theorem_sufficient_condition(seq: &MonomialSequence) -> (Verdict, Vec<QuadrupleRecord>) {
    let table = quadruple_table(seq);
    let verdict = match table.iter().find(|q| !q.theorem_holds()) {
        None => Verdict::holds(Method::Theorem),
        Some(q) => Verdict::fails(Method::Theorem, q.witness()),
    };
    (verdict, table)
}

/// Sufficient condition: every quadruple has `[f_ij, f_kl] = 1` or `[f_i, f_j] | f_l`.
pub fn corollary_sufficient_condition(seq: &MonomialSequence) -> Verdict {
    match quadruple_table(seq).iter().find(|q| !q.corollary_holds()) {
        None => Verdict::holds(Method::Theorem),
        Some(q) => Verdict::fails(Method::Theorem, q.witness()),
    }
}

/// Checks `[f_i, f_j] | f_l` for all `i < j < l`; when it holds, the sequence
/// must be a strong s-sequence, and a Gröbner computation confirms it.
pub fn divisibility_implies_strong(
    seq: &MonomialSequence,
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<Verdict> {
    let hypothesis = match first_triple_failure(seq) {
        None => Verdict::holds(Method::Theorem),
        Some(w) => return Ok(Verdict::fails(Method::Theorem, w)),
    };
    let strong = is_strong_s_sequence(seq, order, limits)?;
    if !strong.value {
        return Err(Error::Consistency(format!(
            "{seq} satisfies [f_i,f_j] | f_k but is not a strong s-sequence: {}",
            strong.witness.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    Ok(hypothesis)
}

/// `[f_i, f_j] | f_k` iff `[f_ik, f_jk] = 1` (0-based `i < j < k`); returns the
/// shared value.
pub fn gcd_coprime_equivalence(seq: &MonomialSequence, i: usize, j: usize, k: usize) -> Result<bool> {
    if !(i < j && j < k && k < seq.len()) {
        return Err(Error::InvalidInput(format!(
            "indices ({i}, {j}, {k}) must satisfy i < j < k < {}",
            seq.len()
        )));
    }
    let lhs = seq.gcd(i, j).divides(seq.get(k));
    let rhs = seq.reduced(i, k).is_coprime(&seq.reduced(j, k));
    if lhs != rhs {
        return Err(Error::Consistency(format!(
            "{seq}: [f_{},f_{}] | f_{} is {lhs} but [f_{0}{2}, f_{1}{2}] = 1 is {rhs}",
            i + 1,
            j + 1,
            k + 1
        )));
    }
    Ok(lhs)
}

/// Under `[f_i, f_j] | f_k` for all `i < j < k`, each `f_1i, ..., f_{i-1,i}`
/// is a regular sequence.
pub fn regular_annihilator_check(seq: &MonomialSequence) -> Result<bool> {
    if let Some(w) = first_triple_failure(seq) {
        return Err(Error::Precondition(w.to_string()));
    }
    for i in 1..seq.len() {
        let gens: Vec<Monomial> = (0..i).map(|j| seq.reduced(j, i)).collect();
        // a constant f_ji would mean f_j | f_i
        if gens.iter().any(Monomial::is_one) || !is_regular_sequence(&gens)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For squarefree minimal sequences, `I_2 ⊆ ... ⊆ I_n` forces
/// `[f_i, f_j] | f_k`. Returns whether the chain holds.
pub fn chain_implies_divisibility_squarefree(seq: &MonomialSequence) -> Result<bool> {
    if !seq.is_squarefree() {
        return Err(Error::InvalidInput("sequence is not squarefree".into()));
    }
    if !is_minimal(seq).value {
        return Err(Error::InvalidInput("sequence is not minimal".into()));
    }
    let chain = annihilator_chain(seq)?;
    let holds = chain.is_increasing();
    if holds {
        if let Some(w) = first_triple_failure(seq) {
            return Err(Error::Consistency(format!(
                "squarefree {seq} has an increasing annihilator chain but {w}"
            )));
        }
    }
    Ok(holds)
}

/// Outcome of the necessity check for squarefree 4-sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessityReport {
    pub sequence: Vec<Monomial>,
    pub s_sequence: bool,
    pub condition: bool,
    pub table: Vec<QuadrupleRecord>,
    /// An s-sequence failing the quadruple condition.
    pub refutation: bool,
}

/// For squarefree `n = 4` sequences the quadruple condition is necessary for
/// being an s-sequence. A violation is reported as `refutation`.
pub fn necessity_harness_n4_squarefree(
    seq: &MonomialSequence,
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<NecessityReport> {
    if seq.len() != 4 {
        return Err(Error::InvalidInput(format!("need n = 4, got n = {}", seq.len())));
    }
    if !seq.is_squarefree() {
        return Err(Error::InvalidInput("sequence is not squarefree".into()));
    }
    let s = is_s_sequence_groebner(seq, order, limits)?.verdict.value;
    let (condition, table) = theorem_sufficient_condition(seq);
    Ok(NecessityReport {
        sequence: seq.items().to_vec(),
        s_sequence: s,
        condition: condition.value,
        refutation: s && !condition.value,
        table,
    })
}
