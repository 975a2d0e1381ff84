//! The full classification pipeline and its report.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::koszul::is_proper_koszul_oracle;
use crate::poly::{GroebnerLimits, MonomialOrder};
use crate::s_sequence::{
    annihilator_chain, corollary_sufficient_condition, hrt_coprime_condition,
    is_s_sequence_groebner, strong_from_outcome, theorem_sufficient_condition, Branch,
    SSequenceOutcome,
};
use crate::sequence::{
    divisibility_hypothesis, is_d_sequence_oracle, is_d_sequence_theorem, is_minimal,
    is_proper_theorem, is_unconditional_d, is_unconditional_proper, Method, MonomialSequence,
    Verdict, Witness,
};
use crate::symmetric::{
    dimension_of_initial, multiplicity_check_with, sym_invariants, MultiplicityCheck,
    SymInvariants,
};

pub const SCHEMA: &str = "monoseq.report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub order: MonomialOrder,
    pub limits: GroebnerLimits,
    /// Run the definition-level checks and Buchberger; otherwise only the
    /// divisibility criteria.
    pub oracles: bool,
    /// Also compute the s-verdict under the other monomial order.
    pub compare_orders: bool,
    /// Record wall-clock time; off by default so reports are reproducible.
    pub timing: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            order: MonomialOrder::default(),
            limits: GroebnerLimits::default(),
            oracles: true,
            compare_orders: true,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub m: usize,
    pub n: usize,
    pub variables: Vec<String>,
    pub monomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub minimal: Verdict,
    pub d_sequence: Verdict,
    pub proper: Verdict,
    /// Absent when undecided (fast mode without a sufficient condition, or a
    /// resource limit).
    pub s_sequence: Option<Verdict>,
    pub strong_s_sequence: Option<Verdict>,
    pub unconditional_proper: Verdict,
    pub unconditional_d: Verdict,
}

/// One quadruple of the sufficient condition, rendered for output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadrupleRow {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    /// `[f_ij, f_kl]`.
    pub bracket: String,
    pub branches: Vec<Branch>,
    /// `[f_i, f_j] | f_l`.
    pub gcd_divides: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conditions {
    pub hrt_coprime: Verdict,
    pub theorem_condition: Verdict,
    pub corollary_condition: Verdict,
    pub divisibility_hypothesis: Verdict,
    pub quadruples: Vec<QuadrupleRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerSummary {
    pub basis_size: usize,
    pub pairs_reduced: usize,
    /// Minimal generators of the initial ideal, over `x` and `y`.
    pub initial_ideal: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderComparison {
    pub order: MonomialOrder,
    pub s_sequence: bool,
    /// Differs from the verdict under the main order.
    pub diverges: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossChecks {
    /// `dim R[y]/in(J)`.
    pub dimension: usize,
    pub dimension_matches: bool,
    pub multiplicity: MultiplicityCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitReport {
    pub reason: String,
    pub pairs_reduced: usize,
    pub partial_basis_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub schema: String,
    pub version: String,
    pub input: InputEcho,
    pub order: MonomialOrder,
    pub oracles: bool,
    pub verdicts: Verdicts,
    pub conditions: Conditions,
    /// Minimal generators of `I_1, ..., I_n`.
    pub annihilator_chain: Vec<Vec<String>>,
    pub groebner: Option<GroebnerSummary>,
    pub other_order: Option<OrderComparison>,
    /// Present when the divisibility hypothesis holds.
    pub invariants: Option<SymInvariants>,
    pub cross_checks: Option<CrossChecks>,
    pub resource_limit: Option<LimitReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }
}

fn ensure(cond: bool, seq: &MonomialSequence, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Consistency(format!("{seq}: {what}")))
    }
}

enum SRun {
    Done(Box<SSequenceOutcome>),
    Limited(LimitReport),
}

fn run_s(seq: &MonomialSequence, order: MonomialOrder, limits: GroebnerLimits) -> Result<SRun> {
    match is_s_sequence_groebner(seq, order, limits) {
        Ok(o) => Ok(SRun::Done(Box::new(o))),
        Err(Error::ResourceLimit(l)) => Ok(SRun::Limited(LimitReport {
            reason: l.reason,
            pairs_reduced: l.pairs_reduced,
            partial_basis_size: l.partial_basis.len(),
        })),
        Err(e) => Err(e),
    }
}

/// Runs every check on `seq`. A disagreement between a criterion and its
/// oracle, or a violated implication between verdicts, is an
/// [`Error::Consistency`]. A Buchberger resource limit leaves the s-verdicts
/// undecided and is recorded in [`ClassificationReport::resource_limit`].
pub fn classify(seq: &MonomialSequence, options: &ClassifyOptions) -> Result<ClassificationReport> {
    let start = options.timing.then(Instant::now);
    let vars = seq.vars();
    let show = |m: &crate::monomial::Monomial| m.display_with(vars).to_string();

    let minimal = is_minimal(seq);
    let d_theorem = is_d_sequence_theorem(seq);
    let proper_theorem = is_proper_theorem(seq);
    let (d_sequence, proper) = if options.oracles {
        let d = Verdict::agree(d_theorem, is_d_sequence_oracle(seq), "d-sequence")?;
        let oracle = is_proper_koszul_oracle(seq);
        let p = if minimal.value {
            Verdict::agree(proper_theorem, oracle, "proper sequence")?
        } else {
            // the criterion only characterizes minimal sequences
            oracle
        };
        (d, p)
    } else {
        (d_theorem, proper_theorem)
    };

    let hrt = hrt_coprime_condition(seq);
    let (theorem_condition, table) = theorem_sufficient_condition(seq);
    let corollary = corollary_sufficient_condition(seq);
    let divisibility = divisibility_hypothesis(seq);
    ensure(
        !corollary.value || theorem_condition.value,
        seq,
        "corollary condition holds but the quadruple condition fails",
    )?;
    ensure(
        !hrt.value || theorem_condition.value,
        seq,
        "coprime condition holds but the quadruple condition fails",
    )?;

    let chain = annihilator_chain(seq)?;
    let chain_break = chain.first_break();

    let mut groebner = None;
    let mut other_order = None;
    let mut resource_limit = None;
    let mut outcome = None;
    let (s_sequence, strong) = if options.oracles {
        match run_s(seq, options.order, options.limits)? {
            SRun::Limited(l) => {
                resource_limit = Some(l);
                (None, None)
            }
            SRun::Done(o) => {
                let s = o.verdict.clone();
                let strong = strong_from_outcome(&o);
                for (name, cond) in [
                    ("coprime condition", &hrt),
                    ("quadruple condition", &theorem_condition),
                    ("corollary condition", &corollary),
                    ("divisibility hypothesis", &divisibility),
                ] {
                    ensure(!cond.value || s.value, seq, &format!("{name} holds but not an s-sequence"))?;
                }
                ensure(
                    !divisibility.value || strong.value,
                    seq,
                    "divisibility hypothesis holds but not a strong s-sequence",
                )?;
                ensure(!d_sequence.value || proper.value, seq, "d-sequence but not proper")?;
                groebner = Some(GroebnerSummary {
                    basis_size: o.basis.polynomials().len(),
                    pairs_reduced: o.basis.pairs_reduced(),
                    initial_ideal: o
                        .initial_ideal
                        .generators()
                        .iter()
                        .map(|g| crate::s_sequence::display_flat(g, seq.ambient()))
                        .collect(),
                });
                if options.compare_orders {
                    let other = options.order.other();
                    if let SRun::Done(p) = run_s(seq, other, options.limits)? {
                        other_order = Some(OrderComparison {
                            order: other,
                            s_sequence: p.verdict.value,
                            diverges: p.verdict.value != s.value,
                        });
                    }
                }
                outcome = Some(o);
                (Some(s), Some(strong))
            }
        }
    } else {
        let s = theorem_condition.value.then(|| Verdict::holds(Method::Theorem));
        let strong = if divisibility.value {
            Some(Verdict::holds(Method::Theorem))
        } else {
            chain_break.map(|i| Verdict::fails(Method::Theorem, Witness::ChainBreak { i }))
        };
        (s, strong)
    };

    let invariants = sym_invariants(seq);
    let cross_checks = match (&outcome, invariants.hypothesis_ok) {
        (Some(o), true) => {
            let dimension = dimension_of_initial(seq, o)?;
            let expected = invariants.dimension.expect("hypothesis holds");
            ensure(
                dimension == expected,
                seq,
                &format!("dim R[y]/in(J) = {dimension}, expected {expected}"),
            )?;
            Some(CrossChecks {
                dimension,
                dimension_matches: true,
                multiplicity: multiplicity_check_with(seq, &invariants, o)?,
            })
        }
        _ => None,
    };

    Ok(ClassificationReport {
        schema: SCHEMA.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        input: InputEcho {
            m: seq.ambient(),
            n: seq.len(),
            variables: vars.names().to_vec(),
            monomials: seq.items().iter().map(show).collect(),
        },
        order: options.order,
        oracles: options.oracles,
        verdicts: Verdicts {
            minimal,
            d_sequence,
            proper,
            s_sequence,
            strong_s_sequence: strong,
            unconditional_proper: is_unconditional_proper(seq).0,
            unconditional_d: is_unconditional_d(seq).0,
        },
        conditions: Conditions {
            hrt_coprime: hrt,
            theorem_condition,
            corollary_condition: corollary,
            divisibility_hypothesis: divisibility,
            quadruples: table
                .iter()
                .map(|q| QuadrupleRow {
                    i: q.i,
                    j: q.j,
                    k: q.k,
                    l: q.l,
                    bracket: show(&q.bracket),
                    branches: q.branches(),
                    gcd_divides: q.gcd_divides,
                })
                .collect(),
        },
        annihilator_chain: chain
            .ideals
            .iter()
            .map(|i| i.generators().iter().map(show).collect())
            .collect(),
        groebner,
        other_order,
        invariants: invariants.hypothesis_ok.then_some(invariants),
        cross_checks,
        resource_limit,
        elapsed_ms: start.map(|t| t.elapsed().as_millis() as u64),
    })
}

/// Classifies independently and in parallel; results keep input order.
pub fn classify_batch(
    seqs: &[MonomialSequence],
    options: &ClassifyOptions,
) -> Vec<Result<ClassificationReport>> {
    seqs.par_iter().map(|s| classify(s, options)).collect()
}

fn verdict_text(v: &Verdict) -> String {
    let method = match v.method {
        Method::Theorem => "theorem",
        Method::Oracle => "oracle",
        Method::BothAgree => "theorem+oracle",
    };
    let mut s = format!("{:<5} [{method}]", v.value);
    if let Some(w) = &v.witness {
        let _ = write!(s, "  {w}");
    }
    if v.outside_hypothesis {
        s.push_str("  (outside hypothesis)");
    }
    s
}

fn optional_verdict_text(v: &Option<Verdict>) -> String {
    v.as_ref().map_or("undecided".to_string(), verdict_text)
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Coprime => "coprime",
        Branch::ViaJl => "via-jl",
        Branch::ViaKi => "via-ki",
    }
}

/// Plain-text rendering.
pub fn render_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "sequence   [{}]", r.input.monomials.join(", "));
    let _ = writeln!(w, "ring       m = {}, n = {}, order = {}", r.input.m, r.input.n, r.order.name());
    let v = &r.verdicts;
    let _ = writeln!(w, "minimal    {}", verdict_text(&v.minimal));
    let _ = writeln!(w, "d          {}", verdict_text(&v.d_sequence));
    let _ = writeln!(w, "proper     {}", verdict_text(&v.proper));
    let _ = writeln!(w, "s          {}", optional_verdict_text(&v.s_sequence));
    let _ = writeln!(w, "strong-s   {}", optional_verdict_text(&v.strong_s_sequence));
    let _ = writeln!(w, "uncond-p   {}", verdict_text(&v.unconditional_proper));
    let _ = writeln!(w, "uncond-d   {}", verdict_text(&v.unconditional_d));
    let c = &r.conditions;
    let _ = writeln!(w, "conditions");
    let _ = writeln!(w, "  coprime      {}", verdict_text(&c.hrt_coprime));
    let _ = writeln!(w, "  quadruple    {}", verdict_text(&c.theorem_condition));
    let _ = writeln!(w, "  corollary    {}", verdict_text(&c.corollary_condition));
    let _ = writeln!(w, "  divisibility {}", verdict_text(&c.divisibility_hypothesis));
    if !c.quadruples.is_empty() {
        let _ = writeln!(w, "quadruples (i,j,k,l)  [f_ij,f_kl]  branches");
        for q in &c.quadruples {
            let branches: Vec<&str> = q.branches.iter().map(|&b| branch_name(b)).collect();
            let branches = if branches.is_empty() {
                "none".to_string()
            } else {
                branches.join(",")
            };
            let _ = writeln!(
                w,
                "  ({},{},{},{})  {:<12}  {branches}",
                q.i, q.j, q.k, q.l, q.bracket
            );
        }
    }
    let _ = writeln!(w, "annihilators");
    for (i, gens) in r.annihilator_chain.iter().enumerate() {
        let body = if gens.is_empty() {
            "0".to_string()
        } else {
            format!("({})", gens.join(", "))
        };
        let _ = writeln!(w, "  I_{} = {body}", i + 1);
    }
    if let Some(g) = &r.groebner {
        let _ = writeln!(
            w,
            "groebner   {} elements, {} pairs reduced, in(J) = ({})",
            g.basis_size,
            g.pairs_reduced,
            g.initial_ideal.join(", ")
        );
    }
    if let Some(o) = &r.other_order {
        let _ = writeln!(
            w,
            "order {:<4} s = {}{}",
            o.order.name(),
            o.s_sequence,
            if o.diverges { "  (diverges)" } else { "" }
        );
    }
    match &r.invariants {
        Some(inv) => {
            let reg = inv.reg_bound.map_or("-".to_string(), |b| b.to_string());
            let _ = writeln!(
                w,
                "invariants dim = {}, e = {}, sum = {}, reg <= {reg}",
                inv.dimension.unwrap_or_default(),
                inv.multiplicity.as_ref().map(|e| e.to_string()).unwrap_or_default(),
                inv.annihilator_sum.as_ref().map(|e| e.to_string()).unwrap_or_default(),
            );
        }
        None => {
            let _ = writeln!(w, "invariants n/a (divisibility hypothesis fails)");
        }
    }
    if let Some(x) = &r.cross_checks {
        let m = match &x.multiplicity {
            MultiplicityCheck::Agree { value } => format!("e = {value} agrees"),
            MultiplicityCheck::Mismatch { formula, hilbert } => {
                format!("e formula {formula} vs Hilbert series {hilbert}")
            }
            MultiplicityCheck::Skipped { reason } => format!("e uncrosschecked ({reason})"),
        };
        let _ = writeln!(w, "checks     dim R[y]/in(J) = {}, {m}", x.dimension);
    }
    if let Some(l) = &r.resource_limit {
        let _ = writeln!(
            w,
            "limit      {} after {} pairs, partial basis of {}",
            l.reason, l.pairs_reduced, l.partial_basis_size
        );
    }
    if let Some(ms) = r.elapsed_ms {
        let _ = writeln!(w, "elapsed    {ms} ms");
    }
    out
}
