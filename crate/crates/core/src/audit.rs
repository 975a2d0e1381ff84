//! Oracle-equivalence and implication suites over exhaustive grids and seeded
//! corpora.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{planted_hypothesis_corpus, random_corpus, CorpusSpec};
use crate::error::{Error, Result};
use crate::koszul::is_proper_koszul_oracle;
use crate::poly::{GroebnerLimits, MonomialOrder};
use crate::s_sequence::{
    chain_implies_divisibility_squarefree, corollary_sufficient_condition,
    hrt_coprime_condition, is_s_sequence_groebner, necessity_harness_n4_squarefree,
    strong_from_outcome, theorem_sufficient_condition,
};
use crate::sequence::{
    divisibility_hypothesis, is_d_sequence_oracle, is_d_sequence_theorem, is_minimal,
    is_proper_theorem, squarefree_d_proper_equivalence_check, MonomialSequence,
};
use crate::symmetric::{
    dimension_of_initial, multiplicity_check_with, pinning_experiment, sym_invariants,
    MultiplicityCheck,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OracleExhaustive,
    OracleRandom,
    Ladder,
    ProperIffStrong,
    Squarefree,
    NecessityN4,
    Subsequence,
    Invariants,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::OracleExhaustive,
        Suite::OracleRandom,
        Suite::Ladder,
        Suite::ProperIffStrong,
        Suite::Squarefree,
        Suite::NecessityN4,
        Suite::Subsequence,
        Suite::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleExhaustive => "oracle-exhaustive",
            Suite::OracleRandom => "oracle-random",
            Suite::Ladder => "ladder",
            Suite::ProperIffStrong => "proper-iff-strong",
            Suite::Squarefree => "squarefree",
            Suite::NecessityN4 => "necessity-n4",
            Suite::Subsequence => "subsequence",
            Suite::Invariants => "invariants",
        }
    }

    fn default_count(self) -> usize {
        match self {
            Suite::NecessityN4 => 1000,
            _ => 500,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditOptions {
    pub suites: Vec<Suite>,
    pub seed: u64,
    /// Overrides the per-suite corpus size.
    pub count: Option<usize>,
    pub order: MonomialOrder,
    pub limits: GroebnerLimits,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            suites: Suite::ALL.to_vec(),
            seed: 7,
            count: None,
            order: MonomialOrder::default(),
            limits: GroebnerLimits::default(),
        }
    }
}

/// Violations kept per suite; the count is always exact.
const MAX_EXAMPLES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: Suite,
    /// Sequences examined.
    pub checked: usize,
    /// Individual implications or equivalences evaluated.
    pub assertions: usize,
    pub violations: usize,
    /// Sequences skipped after a Buchberger resource limit.
    pub skipped: usize,
    /// The first few violations.
    pub examples: Vec<String>,
    /// Measurements that are reported but not asserted.
    pub observations: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl AuditSummary {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("audit seed {}\n", self.seed);
        for s in &self.suites {
            out.push_str(&format!(
                "{:<18} {:<4} checked {:>5}  assertions {:>6}  violations {}  skipped {}\n",
                s.suite.name(),
                if s.passed() { "ok" } else { "FAIL" },
                s.checked,
                s.assertions,
                s.violations,
                s.skipped
            ));
            for e in &s.examples {
                out.push_str(&format!("    violation: {e}\n"));
            }
            for o in &s.observations {
                out.push_str(&format!("    note: {o}\n"));
            }
        }
        out
    }
}

/// Per-sequence outcome of a suite body.
#[derive(Default)]
struct Tally {
    assertions: usize,
    violations: Vec<String>,
    skipped: bool,
    notes: Vec<(&'static str, bool)>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.assertions += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    fn implies(&mut self, seq: &MonomialSequence, a: (&str, bool), b: (&str, bool)) {
        self.check(!a.1 || b.1, || format!("{seq}: {} but not {}", a.0, b.0));
    }

    fn note(&mut self, key: &'static str, value: bool) {
        self.notes.push((key, value));
    }
}

fn run(
    suite: Suite,
    seqs: &[MonomialSequence],
    body: impl Fn(&MonomialSequence, &mut Tally) -> Result<()> + Sync,
) -> SuiteResult {
    let tallies: Vec<Tally> = seqs
        .par_iter()
        .map(|seq| {
            let mut t = Tally::default();
            match body(seq, &mut t) {
                Ok(()) => {}
                Err(Error::ResourceLimit(_)) => t.skipped = true,
                Err(e) => {
                    t.assertions += 1;
                    t.violations.push(format!("{seq}: {e}"));
                }
            }
            t
        })
        .collect();
    let mut result = SuiteResult {
        suite,
        checked: seqs.len(),
        assertions: 0,
        violations: 0,
        skipped: 0,
        examples: Vec::new(),
        observations: Vec::new(),
    };
    let mut notes: Vec<(&'static str, usize, usize)> = Vec::new();
    for t in tallies {
        result.assertions += t.assertions;
        result.violations += t.violations.len();
        result.skipped += t.skipped as usize;
        for v in t.violations {
            if result.examples.len() < MAX_EXAMPLES {
                result.examples.push(v);
            }
        }
        for (key, value) in t.notes {
            match notes.iter_mut().find(|(k, _, _)| *k == key) {
                Some(entry) => {
                    entry.1 += value as usize;
                    entry.2 += 1;
                }
                None => notes.push((key, value as usize, 1)),
            }
        }
    }
    result.observations = notes
        .into_iter()
        .map(|(k, hits, total)| format!("{k}: {hits} of {total}"))
        .collect();
    result
}

/// Every sequence of `n` monomials in `m` variables with exponents at most
/// `max_exp`, unit monomials excluded, in lexicographic order.
pub fn exhaustive_sequences(n: usize, m: usize, max_exp: u32) -> Vec<MonomialSequence> {
    let base = max_exp as usize + 1;
    let monomials: Vec<Vec<u32>> = (1..base.pow(m as u32))
        .map(|mut code| {
            (0..m)
                .map(|_| {
                    let e = (code % base) as u32;
                    code /= base;
                    e
                })
                .collect()
        })
        .collect();
    let k = monomials.len();
    (0..k.pow(n as u32))
        .map(|mut code| {
            let mut rows = Vec::with_capacity(n);
            for _ in 0..n {
                rows.push(monomials[code % k].clone());
                code /= k;
            }
            rows.reverse();
            MonomialSequence::from_exponents(m, &rows).expect("valid exponents")
        })
        .collect()
}

fn count(opts: &AuditOptions, suite: Suite) -> usize {
    opts.count.unwrap_or_else(|| suite.default_count())
}

/// The corpus behind the randomized oracle and ladder suites.
pub fn random_spec(seed: u64, count: usize) -> CorpusSpec {
    CorpusSpec::new(seed, count, 1, 1, 3).ranges(1..=5, 1..=6)
}

pub fn minimal_spec(seed: u64, count: usize) -> CorpusSpec {
    random_spec(seed.wrapping_add(1), count).minimal_only(true)
}

pub fn squarefree_spec(seed: u64, count: usize) -> CorpusSpec {
    CorpusSpec::new(seed.wrapping_add(2), count, 2, 2, 1)
        .ranges(2..=5, 2..=6)
        .squarefree(true)
        .minimal_only(true)
}

pub fn necessity_spec(seed: u64, count: usize) -> CorpusSpec {
    CorpusSpec::new(seed.wrapping_add(3), count, 4, 4, 1)
        .ranges(4..=4, 1..=6)
        .squarefree(true)
        .minimal_only(true)
}

pub fn planted_spec(seed: u64, count: usize) -> CorpusSpec {
    CorpusSpec::new(seed.wrapping_add(4), count, 2, 2, 2).ranges(1..=5, 2..=6)
}

fn oracle_body(seq: &MonomialSequence, t: &mut Tally) -> Result<()> {
    let (dt, d_o) = (is_d_sequence_theorem(seq), is_d_sequence_oracle(seq));
    t.check(dt.value == d_o.value, || {
        format!("{seq}: d-sequence theorem {} vs oracle {}", dt.value, d_o.value)
    });
    if is_minimal(seq).value {
        let (pt, po) = (is_proper_theorem(seq), is_proper_koszul_oracle(seq));
        t.check(pt.value == po.value, || {
            format!("{seq}: proper theorem {} vs Koszul oracle {}", pt.value, po.value)
        });
    }
    Ok(())
}

pub fn suite_oracle_exhaustive() -> SuiteResult {
    let seqs: Vec<MonomialSequence> = exhaustive_sequences(3, 3, 2)
        .into_iter()
        .filter(|s| is_minimal(s).value)
        .collect();
    run(Suite::OracleExhaustive, &seqs, oracle_body)
}

pub fn suite_oracle_random(opts: &AuditOptions) -> SuiteResult {
    let seqs = random_corpus(&random_spec(opts.seed, count(opts, Suite::OracleRandom)));
    run(Suite::OracleRandom, &seqs, oracle_body)
}

fn ladder_body(
    seq: &MonomialSequence,
    t: &mut Tally,
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<()> {
    let d = is_d_sequence_oracle(seq).value;
    let proper = is_proper_koszul_oracle(seq).value;
    let outcome = is_s_sequence_groebner(seq, order, limits)?;
    let s = outcome.verdict.value;
    let strong = strong_from_outcome(&outcome).value;
    t.implies(seq, ("d-sequence", d), ("proper", proper));
    if is_minimal(seq).value {
        t.implies(seq, ("proper", proper), ("strong s-sequence", strong));
    }
    t.implies(seq, ("strong s-sequence", strong), ("s-sequence", s));
    let theorem = theorem_sufficient_condition(seq).0.value;
    let corollary = corollary_sufficient_condition(seq).value;
    t.implies(seq, ("coprime condition", hrt_coprime_condition(seq).value), ("s-sequence", s));
    t.implies(seq, ("quadruple condition", theorem), ("s-sequence", s));
    t.implies(seq, ("corollary condition", corollary), ("s-sequence", s));
    t.implies(seq, ("divisibility", divisibility_hypothesis(seq).value), ("s-sequence", s));
    t.implies(seq, ("corollary condition", corollary), ("quadruple condition", theorem));
    let other = is_s_sequence_groebner(seq, order.other(), limits)?;
    t.note("s-verdict differs between orders", other.verdict.value != s);
    t.note("s-sequence", s);
    t.note("s-sequence without the quadruple condition", s && !theorem);
    Ok(())
}

pub fn suite_ladder(opts: &AuditOptions) -> SuiteResult {
    let seqs = random_corpus(&random_spec(opts.seed, count(opts, Suite::Ladder)));
    run(Suite::Ladder, &seqs, |s, t| ladder_body(s, t, opts.order, opts.limits))
}

pub fn suite_proper_iff_strong(opts: &AuditOptions) -> SuiteResult {
    let seqs = random_corpus(&minimal_spec(opts.seed, count(opts, Suite::ProperIffStrong)));
    run(Suite::ProperIffStrong, &seqs, |seq, t| {
        let proper = is_proper_koszul_oracle(seq).value;
        let outcome = is_s_sequence_groebner(seq, opts.order, opts.limits)?;
        let strong = strong_from_outcome(&outcome).value;
        t.check(proper == strong, || {
            format!("{seq}: proper = {proper} but strong s-sequence = {strong}")
        });
        t.note("proper", proper);
        Ok(())
    })
}

pub fn suite_squarefree(opts: &AuditOptions) -> SuiteResult {
    let seqs = random_corpus(&squarefree_spec(opts.seed, count(opts, Suite::Squarefree)));
    run(Suite::Squarefree, &seqs, |seq, t| {
        let shared = squarefree_d_proper_equivalence_check(seq)?;
        let oracle = is_d_sequence_oracle(seq).value;
        t.check(shared == oracle, || format!("{seq}: criteria give {shared}, d oracle {oracle}"));
        let koszul = is_proper_koszul_oracle(seq).value;
        t.check(koszul == oracle, || {
            format!("{seq}: proper oracle {koszul} vs d oracle {oracle}")
        });
        let chain = chain_implies_divisibility_squarefree(seq)?;
        t.implies(
            seq,
            ("increasing annihilator chain", chain),
            ("divisibility", divisibility_hypothesis(seq).value),
        );
        t.note("d-sequence", oracle);
        Ok(())
    })
}

pub fn suite_necessity_n4(opts: &AuditOptions) -> SuiteResult {
    let seqs = random_corpus(&necessity_spec(opts.seed, count(opts, Suite::NecessityN4)));
    run(Suite::NecessityN4, &seqs, |seq, t| {
        let r = necessity_harness_n4_squarefree(seq, opts.order, opts.limits)?;
        t.check(!r.refutation, || {
            format!("{seq}: s-sequence violating the quadruple condition")
        });
        t.note("s-sequence", r.s_sequence);
        Ok(())
    })
}

/// `count` random order-preserving subsequences of `seq`, seeded.
pub fn random_subsequences(seq: &MonomialSequence, count: usize, seed: u64) -> Vec<MonomialSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = seq.len();
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=n);
            let mut idx = sample(&mut rng, n, size).into_vec();
            idx.sort_unstable();
            seq.subsequence(&idx).expect("sorted distinct indices")
        })
        .collect()
}

const SUBSEQUENCES_PER_SEQUENCE: usize = 20;

pub fn suite_subsequence(opts: &AuditOptions) -> SuiteResult {
    let c = count(opts, Suite::Subsequence);
    let mut seqs = random_corpus(&random_spec(opts.seed, c));
    seqs.extend(random_corpus(&minimal_spec(opts.seed, c)));
    seqs.extend(random_corpus(&squarefree_spec(opts.seed, c)));
    seqs.extend(planted_hypothesis_corpus(&planted_spec(opts.seed, c), false));
    let seed = opts.seed;
    run(Suite::Subsequence, &seqs, |seq, t| {
        let d = is_d_sequence_theorem(seq).value;
        let proper = is_minimal(seq).value && is_proper_theorem(seq).value;
        t.note("d-sequence", d);
        t.note("minimal proper", proper);
        if !d && !proper {
            return Ok(());
        }
        // seed from the sequence itself so the result is independent of scheduling
        let local = seed ^ fxhash(seq);
        for sub in random_subsequences(seq, SUBSEQUENCES_PER_SEQUENCE, local) {
            if d {
                let (a, b) = (is_d_sequence_theorem(&sub).value, is_d_sequence_oracle(&sub).value);
                t.check(a && b, || format!("{seq}: subsequence {sub} is not a d-sequence"));
            }
            if proper {
                let (a, b) = (is_proper_theorem(&sub).value, is_proper_koszul_oracle(&sub).value);
                t.check(a && b, || format!("{seq}: subsequence {sub} is not proper"));
            }
        }
        Ok(())
    })
}

/// Stable hash of the exponent data.
fn fxhash(seq: &MonomialSequence) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for f in seq.items() {
        for &e in f.exponents() {
            h ^= e as u64 + 1;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        h = h.rotate_left(7);
    }
    h
}

pub fn suite_invariants(opts: &AuditOptions) -> SuiteResult {
    let c = count(opts, Suite::Invariants);
    let mut seqs = planted_hypothesis_corpus(&planted_spec(opts.seed, c), false);
    seqs.extend(planted_hypothesis_corpus(&planted_spec(opts.seed.wrapping_add(10), c), true));
    seqs.extend(
        random_corpus(&random_spec(opts.seed, c))
            .into_iter()
            .filter(|s| divisibility_hypothesis(s).value),
    );
    let mut result = run(Suite::Invariants, &seqs, |seq, t| {
        let inv = sym_invariants(seq);
        t.check(inv.hypothesis_ok, || format!("{seq}: corpus sequence fails the hypothesis"));
        let outcome = is_s_sequence_groebner(seq, opts.order, opts.limits)?;
        let dim = dimension_of_initial(seq, &outcome)?;
        t.check(dim == seq.ambient() + 1, || {
            format!("{seq}: dim R[y]/in(J) = {dim}, expected {}", seq.ambient() + 1)
        });
        match multiplicity_check_with(seq, &inv, &outcome)? {
            MultiplicityCheck::Agree { value } => {
                t.assertions += 1;
                let sum = inv.annihilator_sum.clone().expect("hypothesis holds");
                t.check(sum + 1 == value, || format!("{seq}: sum is not e - 1"));
                t.note("multiplicity cross-checked", true);
            }
            MultiplicityCheck::Mismatch { formula, hilbert } => t.check(false, || {
                format!("{seq}: multiplicity formula {formula}, Hilbert series {hilbert}")
            }),
            MultiplicityCheck::Skipped { .. } => t.note("multiplicity cross-checked", false),
        }
        Ok(())
    });
    match pinning_experiment(10) {
        Ok(p) => {
            result.assertions += 1;
            if !p.pinned() {
                result.violations += 1;
                result.examples.push(format!("grading pinning failed: {:?}", p.counts));
            }
            result.observations.push(format!(
                "R[y]/(x1 y2): Hilbert function {:?}, e = {}, bare sum = {}",
                p.counts, p.hilbert_multiplicity, p.annihilator_sum
            ));
        }
        Err(e) => {
            result.violations += 1;
            result.examples.push(format!("pinning experiment: {e}"));
        }
    }
    result
}

pub fn run_suite(suite: Suite, opts: &AuditOptions) -> SuiteResult {
    match suite {
        Suite::OracleExhaustive => suite_oracle_exhaustive(),
        Suite::OracleRandom => suite_oracle_random(opts),
        Suite::Ladder => suite_ladder(opts),
        Suite::ProperIffStrong => suite_proper_iff_strong(opts),
        Suite::Squarefree => suite_squarefree(opts),
        Suite::NecessityN4 => suite_necessity_n4(opts),
        Suite::Subsequence => suite_subsequence(opts),
        Suite::Invariants => suite_invariants(opts),
    }
}

pub fn audit(opts: &AuditOptions) -> AuditSummary {
    AuditSummary {
        seed: opts.seed,
        suites: opts.suites.iter().map(|&s| run_suite(s, opts)).collect(),
    }
}
