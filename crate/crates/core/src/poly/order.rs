use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;

/// A monomial `x^a y^b` of `K[x_1..x_m, y_1..y_n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingMonomial {
    pub x: Monomial,
    pub y: Monomial,
}

impl RingMonomial {
    pub fn new(x: Monomial, y: Monomial) -> Self {
        RingMonomial { x, y }
    }

    pub fn one(m: usize, n: usize) -> Self {
        RingMonomial::new(Monomial::one(m), Monomial::one(n))
    }

    /// `x * y_{index+1}`.
    pub fn x_times_y(x: Monomial, n: usize, index: usize) -> Self {
        RingMonomial::new(x, Monomial::var(n, index))
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.x.ambient(), self.y.ambient())
    }

    pub fn degree(&self) -> u64 {
        self.x.degree() + self.y.degree()
    }

    pub fn mul(&self, other: &RingMonomial) -> RingMonomial {
        RingMonomial::new(self.x.mul(&other.x), self.y.mul(&other.y))
    }

    pub fn lcm(&self, other: &RingMonomial) -> RingMonomial {
        RingMonomial::new(self.x.lcm(&other.x), self.y.lcm(&other.y))
    }

    pub fn divides(&self, other: &RingMonomial) -> bool {
        self.x.divides(&other.x) && self.y.divides(&other.y)
    }

    pub fn checked_div(&self, divisor: &RingMonomial) -> Option<RingMonomial> {
        Some(RingMonomial::new(
            self.x.checked_div(&divisor.x)?,
            self.y.checked_div(&divisor.y)?,
        ))
    }

    pub fn is_coprime(&self, other: &RingMonomial) -> bool {
        self.x.is_coprime(&other.x) && self.y.is_coprime(&other.y)
    }

    /// Exponent vector over `x_1..x_m, y_1..y_n` in that order.
    pub fn flatten(&self) -> Monomial {
        let mut e = self.x.exponents().to_vec();
        e.extend_from_slice(self.y.exponents());
        Monomial::new(e)
    }

    /// Inverse of [`RingMonomial::flatten`].
    pub fn unflatten(flat: &Monomial, m: usize) -> RingMonomial {
        let (x, y) = flat.exponents().split_at(m);
        RingMonomial::new(Monomial::new(x.to_vec()), Monomial::new(y.to_vec()))
    }
}

impl fmt::Display for RingMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.x.ambient();
        let flat = self.flatten();
        crate::monomial::write_monomial(f, flat.exponents(), |f, i| {
            if i < m {
                write!(f, "x{}", i + 1)
            } else {
                write!(f, "y{}", i - m + 1)
            }
        })
    }
}

impl fmt::Debug for RingMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Admissible block orders on `K[x, y]`: the `y`-parts are compared first and
/// the `x`-parts only break ties, so every monomial involving a `y` exceeds
/// every pure-`x` monomial. Within each block `y_n > ... > y_1` and
/// `x_m > ... > x_1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    /// Pure lex: `y_n > ... > y_1 > x_m > ... > x_1`.
    #[default]
    Lex,
    /// Degree-lex on the `y` block, degree-reverse-lex on the `x` block.
    Deg,
}

/// Lex with the highest-index variable most significant.
fn lex_high_first(a: &[u32], b: &[u32]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Graded, then the monomial with the smaller exponent in the least
/// significant variable (`x_1`) wins.
fn degrevlex_high_first(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (ea, eb) in a.exponents().iter().zip(b.exponents()) {
            if ea != eb {
                return eb.cmp(ea);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(self, a: &RingMonomial, b: &RingMonomial) -> Ordering {
        assert_eq!(a.dims(), b.dims(), "ring monomials over different rings");
        match self {
            MonomialOrder::Lex => lex_high_first(a.y.exponents(), b.y.exponents())
                .then_with(|| lex_high_first(a.x.exponents(), b.x.exponents())),
            MonomialOrder::Deg => a
                .y
                .degree()
                .cmp(&b.y.degree())
                .then_with(|| lex_high_first(a.y.exponents(), b.y.exponents()))
                .then_with(|| degrevlex_high_first(&a.x, &b.x)),
        }
    }

    pub fn other(self) -> MonomialOrder {
        match self {
            MonomialOrder::Lex => MonomialOrder::Deg,
            MonomialOrder::Deg => MonomialOrder::Lex,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Deg => "deg",
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "deg" => Ok(MonomialOrder::Deg),
            other => Err(format!("unknown monomial order `{other}` (expected lex or deg)")),
        }
    }
}
