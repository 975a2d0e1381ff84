//! Seeded random sequence corpora. The same spec always produces the same
//! sequences.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;
use crate::sequence::{divisibility_hypothesis, is_minimal, MonomialSequence};

/// Rejection sampling gives up after this many draws per requested sequence.
const ATTEMPTS_PER_SEQUENCE: usize = 2_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    /// Sequence length range.
    pub n: RangeInclusive<usize>,
    /// Variable count range.
    pub m: RangeInclusive<usize>,
    pub max_exp: u32,
    pub squarefree: bool,
    /// Keep only minimal sequences.
    pub minimal_only: bool,
    /// Drop repeated sequences.
    pub dedup: bool,
}

impl CorpusSpec {
    pub fn new(seed: u64, count: usize, n: usize, m: usize, max_exp: u32) -> Self {
        CorpusSpec {
            seed,
            count,
            n: n..=n,
            m: m..=m,
            max_exp,
            squarefree: false,
            minimal_only: false,
            dedup: false,
        }
    }

    pub fn ranges(mut self, n: RangeInclusive<usize>, m: RangeInclusive<usize>) -> Self {
        self.n = n;
        self.m = m;
        self
    }

    pub fn squarefree(mut self, yes: bool) -> Self {
        self.squarefree = yes;
        self
    }

    pub fn minimal_only(mut self, yes: bool) -> Self {
        self.minimal_only = yes;
        self
    }

    pub fn dedup(mut self, yes: bool) -> Self {
        self.dedup = yes;
        self
    }

    fn exponent_cap(&self) -> u32 {
        if self.squarefree {
            1
        } else {
            self.max_exp.max(1)
        }
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, m: usize, cap: u32) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=cap)).collect();
        let f = Monomial::new(exps);
        if !f.is_one() {
            return f;
        }
    }
}

/// A monomial of exactly `degree` with exponents at most `cap`, or `None`
/// when impossible.
fn random_monomial_of_degree(
    rng: &mut ChaCha8Rng,
    m: usize,
    cap: u32,
    degree: u64,
    base: &Monomial,
) -> Option<Monomial> {
    let mut exps = base.exponents().to_vec();
    let mut left = degree.checked_sub(base.degree())?;
    while left > 0 {
        let open: Vec<usize> = (0..m).filter(|&v| exps[v] < cap).collect();
        if open.is_empty() {
            return None;
        }
        exps[open[rng.gen_range(0..open.len())]] += 1;
        left -= 1;
    }
    Some(Monomial::new(exps))
}

fn collect(
    spec: &CorpusSpec,
    mut draw: impl FnMut(&mut ChaCha8Rng, usize, usize) -> Option<MonomialSequence>,
) -> Vec<MonomialSequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    let mut seen = HashSet::new();
    let mut attempts = 0;
    while out.len() < spec.count && attempts < spec.count.max(1) * ATTEMPTS_PER_SEQUENCE {
        attempts += 1;
        let n = rng.gen_range(spec.n.clone());
        let m = rng.gen_range(spec.m.clone());
        let Some(seq) = draw(&mut rng, n, m) else {
            continue;
        };
        if spec.minimal_only && !is_minimal(&seq).value {
            continue;
        }
        if spec.dedup && !seen.insert(seq.clone()) {
            continue;
        }
        out.push(seq);
    }
    out
}

/// Independent uniform exponents in `0..=max_exp` (`0..=1` when squarefree),
/// unit monomials redrawn. May return fewer than `count` sequences when the
/// filters reject too much.
pub fn random_corpus(spec: &CorpusSpec) -> Vec<MonomialSequence> {
    let cap = spec.exponent_cap();
    collect(spec, |rng, n, m| {
        let items = (0..n).map(|_| random_monomial(rng, m, cap)).collect::<Vec<_>>();
        let exps: Vec<Vec<u32>> = items.iter().map(|f| f.exponents().to_vec()).collect();
        MonomialSequence::from_exponents(m, &exps).ok()
    })
}

/// Sequences built to satisfy `[f_i, f_j] | f_k` for all `i < j < k`: each
/// `f_k` is a random multiple of the lcm of the earlier pairwise gcds. With
/// `equigenerated`, all items share the degree of `f_1`.
pub fn planted_hypothesis_corpus(spec: &CorpusSpec, equigenerated: bool) -> Vec<MonomialSequence> {
    let cap = spec.exponent_cap();
    collect(spec, |rng, n, m| {
        let first = random_monomial(rng, m, cap);
        let degree = first.degree();
        let mut items = vec![first];
        while items.len() < n {
            let k = items.len();
            let mut required = Monomial::one(m);
            for i in 0..k {
                for j in i + 1..k {
                    required = required.lcm(&items[i].gcd(&items[j]));
                }
            }
            let next = if equigenerated {
                random_monomial_of_degree(rng, m, cap, degree, &required)?
            } else {
                let extra = random_monomial(rng, m, cap);
                let f = required.lcm(&extra);
                if f.exponents().iter().any(|&e| e > cap) {
                    return None;
                }
                f
            };
            if next.is_one() {
                return None;
            }
            items.push(next);
        }
        let exps: Vec<Vec<u32>> = items.iter().map(|f| f.exponents().to_vec()).collect();
        let seq = MonomialSequence::from_exponents(m, &exps).ok()?;
        debug_assert!(divisibility_hypothesis(&seq).value);
        Some(seq)
    })
}
