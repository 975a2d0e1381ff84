//! Hilbert series numerators and multiplicities of `K[x_1..x_N]/I` for
//! monomial ideals `I`, all variables in degree 1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A polynomial in one variable `t` with integer coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] += 1;
        coeffs[d] -= 1;
        IntPoly::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly { coeffs: Vec::new() };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                self.coeffs.get(i).cloned().unwrap_or_default()
                    - other.coeffs.get(i).cloned().unwrap_or_default()
            })
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// Multiply by `t^d`.
    pub fn shift(&self, d: usize) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Exact division by `1 - t`, or `None` if `1 - t` is not a factor.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        // p = (1 - t) q  <=>  q_k = sum_{i<=k} p_i
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            q.push(acc.clone());
        }
        Some(IntPoly::from_coeffs(q))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    f.write_str("t")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Numerator `Q(t)` of the Hilbert series `Q(t) / (1-t)^N` of `K[x_1..x_N]/I`.
///
/// Uses the recursion `Q(I + (g)) = Q(I) - t^{deg g} Q(I : g)`, with the
/// product formula when the generators are pairwise coprime. The result does
/// not depend on `N`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> IntPoly {
    let gens = ideal.generators();
    if gens.is_empty() {
        return IntPoly::one();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens.iter().fold(IntPoly::one(), |acc, g| {
            acc.mul(&IntPoly::one_minus_t_pow(g.degree() as usize))
        });
    }
    let (last, rest) = gens.split_last().expect("non-empty");
    let rest = MonomialIdeal::generated_by(ideal.ambient(), rest);
    let colon = rest.colon_by_monomial(last);
    hilbert_numerator(&rest).sub(&hilbert_numerator(&colon).shift(last.degree() as usize))
}

/// Multiplicity (degree) of `K[x_1..x_N]/I`, `N = ambient_vars`.
///
/// Cancels `(1-t)^{N-D}` from the Hilbert numerator, `D` the Krull dimension,
/// and evaluates the reduced numerator at `t = 1`.
pub fn multiplicity_of_quotient(ideal: &MonomialIdeal, ambient_vars: usize) -> Result<BigInt> {
    let dim = ideal.krull_dimension_of_quotient(ambient_vars)?;
    let mut numerator = hilbert_numerator(ideal);
    for _ in dim..ambient_vars {
        numerator = numerator.div_one_minus_t().ok_or_else(|| {
            Error::Consistency(format!(
                "Hilbert numerator of {ideal} not divisible by (1-t)^{}",
                ambient_vars - dim
            ))
        })?;
    }
    let e = numerator.eval_at_one();
    if !e.is_positive() {
        return Err(Error::Consistency(format!(
            "non-positive multiplicity {e} for {ideal} (dimension {dim})"
        )));
    }
    Ok(e)
}

/// Number of standard monomials of each degree `0..=max_deg`, by enumeration.
pub fn hilbert_function(i: &MonomialIdeal, max_deg: u32) -> Vec<u64> {
    let m = i.ambient();
    let mut counts = vec![0u64; max_deg as usize + 1];
    let mut exps = vec![0u32; m];
    fn rec(
        i: &MonomialIdeal,
        exps: &mut Vec<u32>,
        pos: usize,
        left: u32,
        deg: u32,
        counts: &mut [u64],
    ) {
        if pos == exps.len() {
            if !i.contains_monomial(&Monomial::new(exps.clone())) {
                counts[deg as usize] += 1;
            }
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(i, exps, pos + 1, left - e, deg + e, counts);
        }
        exps[pos] = 0;
    }
    rec(i, &mut exps, 0, max_deg, 0, &mut counts);
    counts
}
