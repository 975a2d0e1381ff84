//! Monomials in `K[x_1, ..., x_m]` stored as exponent vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::MonomialError;

/// Largest exponent accepted from external input.
pub const MAX_INPUT_EXPONENT: u32 = 1 << 16;

/// A monomial `x_1^{a_1} ... x_m^{a_m}` over a fixed ambient variable count `m`.
///
/// The ambient count is the length of the exponent vector. Binary operations
/// (`gcd`, `lcm`, `divides`, ...) panic when the two operands live over
/// different ambient counts; the `try_*` variants report the mismatch as an
/// error instead.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` over `m` variables.
    pub fn one(m: usize) -> Self {
        Monomial { exps: vec![0; m] }
    }

    /// The variable `x_{index+1}` over `m` variables.
    pub fn var(m: usize, index: usize) -> Self {
        let mut exps = vec![0; m];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that occur in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    fn assert_same_ambient(&self, other: &Monomial) {
        assert_eq!(
            self.ambient(),
            other.ambient(),
            "monomials over different ambient variable counts"
        );
    }

    fn check_same_ambient(&self, other: &Monomial) -> Result<(), MonomialError> {
        if self.ambient() == other.ambient() {
            Ok(())
        } else {
            Err(MonomialError::DimensionMismatch {
                left: self.ambient(),
                right: other.ambient(),
            })
        }
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        self.assert_same_ambient(other);
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Greatest common divisor `[a, b]`: componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    /// Least common multiple: componentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e * k).collect(),
        }
    }

    /// `true` iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.assert_same_ambient(other);
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, or `None` if `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        self.assert_same_ambient(divisor);
        self.exps
            .iter()
            .zip(&divisor.exps)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial::new)
    }

    /// `self / divisor`.
    ///
    /// Panics if `divisor` does not divide `self`.
    pub fn quotient(&self, divisor: &Monomial) -> Monomial {
        self.checked_div(divisor)
            .unwrap_or_else(|| panic!("{divisor} does not divide {self}"))
    }

    /// `(a / [a,b], b / [a,b])`, i.e. the pair `(f_ab, f_ba)`.
    pub fn reduced_pair(&self, other: &Monomial) -> (Monomial, Monomial) {
        let g = self.gcd(other);
        (self.quotient(&g), other.quotient(&g))
    }

    /// `f_ab = a / [a, b]`.
    pub fn reduced_by(&self, other: &Monomial) -> Monomial {
        self.quotient(&self.gcd(other))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.assert_same_ambient(other);
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn try_gcd(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_same_ambient(other)?;
        Ok(self.gcd(other))
    }

    pub fn try_lcm(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_same_ambient(other)?;
        Ok(self.lcm(other))
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool, MonomialError> {
        self.check_same_ambient(other)?;
        Ok(self.divides(other))
    }

    pub fn try_quotient(&self, divisor: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_same_ambient(divisor)?;
        self.checked_div(divisor)
            .ok_or_else(|| MonomialError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            })
    }

    pub fn try_reduced_pair(
        &self,
        other: &Monomial,
    ) -> Result<(Monomial, Monomial), MonomialError> {
        self.check_same_ambient(other)?;
        Ok(self.reduced_pair(other))
    }

    /// Renders with explicit variable names, e.g. `x1^2*x3`; the unit is `1`.
    pub fn display_with<'a>(&'a self, vars: &'a VariableSet) -> impl fmt::Display + 'a {
        DisplayWith { mono: self, names: &vars.names }
    }

    /// Ordering used for deterministic generator lists: degree first, then
    /// exponent vectors lexicographically.
    pub fn cmp_deg_lex(&self, other: &Monomial) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

struct DisplayWith<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.mono.exps, |f, i| f.write_str(&self.names[i]))
    }
}

/// Writes `name^e` factors joined by `*`; the empty product is `1`.
pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    exps: &[u32],
    name: impl Fn(&mut fmt::Formatter<'_>, usize) -> fmt::Result,
) -> fmt::Result {
    let mut first = true;
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        name(f, i)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, &self.exps, |f, i| write!(f, "x{}", i + 1))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The variables `x_1, ..., x_m` of the base ring together with display names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    /// Default names `x1, ..., xm`.
    pub fn standard(m: usize) -> Self {
        VariableSet {
            names: (1..=m).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn with_names(names: Vec<String>) -> Result<Self, MonomialError> {
        if names.is_empty() {
            return Err(MonomialError::EmptyVariableSet);
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(MonomialError::DuplicateVariable(a.clone()));
            }
        }
        Ok(VariableSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}
