use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::order::{MonomialOrder, RingMonomial};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A sparse polynomial over `Q` in `x_1..x_m, y_1..y_n`.
///
/// Terms are kept sorted in decreasing order under the polynomial's monomial
/// order, and no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    order: MonomialOrder,
    dims: (usize, usize),
    terms: Vec<(RingMonomial, BigRational)>,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero(order: MonomialOrder, m: usize, n: usize) -> Self {
        Polynomial {
            order,
            dims: (m, n),
            terms: Vec::new(),
        }
    }

    /// Builds a polynomial from arbitrary terms, combining like monomials.
    pub fn from_terms(
        order: MonomialOrder,
        m: usize,
        n: usize,
        terms: impl IntoIterator<Item = (RingMonomial, BigRational)>,
    ) -> Self {
        let mut collected: Vec<(RingMonomial, BigRational)> = Vec::new();
        for (mono, c) in terms {
            assert_eq!(mono.dims(), (m, n), "term {mono} has the wrong variable counts");
            collected.push((mono, c));
        }
        collected.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut terms: Vec<(RingMonomial, BigRational)> = Vec::with_capacity(collected.len());
        for (mono, c) in collected {
            match terms.last_mut() {
                Some((last, acc)) if *last == mono => *acc += c,
                _ => terms.push((mono, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial {
            order,
            dims: (m, n),
            terms,
        }
    }

    /// The pure-difference binomial `a - b`.
    pub fn binomial(order: MonomialOrder, a: RingMonomial, b: RingMonomial) -> Self {
        let (m, n) = a.dims();
        Polynomial::from_terms(order, m, n, [(a, rational(1)), (b, rational(-1))])
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn terms(&self) -> &[(RingMonomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest term under the order.
    pub fn leading_term(&self) -> Result<(&RingMonomial, &BigRational)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&RingMonomial> {
        self.leading_term().map(|(m, _)| m)
    }

    /// Same polynomial, terms re-sorted under `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        let (m, n) = self.dims;
        Polynomial::from_terms(order, m, n, self.terms.iter().cloned())
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order, self.dims.0, self.dims.1);
        }
        Polynomial {
            order: self.order,
            dims: self.dims,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// `c * mono * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, mono: &RingMonomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order, self.dims.0, self.dims.1);
        }
        Polynomial {
            order: self.order,
            dims: self.dims,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    fn merge(&self, other: &Polynomial, sign: &BigRational) -> Polynomial {
        assert_eq!(self.order, other.order, "polynomials under different orders");
        assert_eq!(self.dims, other.dims, "polynomials over different rings");
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, ca) = &self.terms[i];
            let (b, cb) = &other.terms[j];
            match self.order.compare(a, b) {
                Ordering::Greater => {
                    terms.push((a.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    terms.push((b.clone(), cb * sign));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb * sign;
                    if !c.is_zero() {
                        terms.push((a.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        terms.extend(other.terms[j..].iter().map(|(b, cb)| (b.clone(), cb * sign)));
        Polynomial {
            order: self.order,
            dims: self.dims,
            terms,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, &rational(1))
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, &rational(-1))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let (m, n) = self.dims;
        let mut acc = Polynomial::zero(self.order, m, n);
        for (mono, c) in &other.terms {
            acc = acc.add(&self.mul_term(mono, c));
        }
        acc
    }

    /// Substitutes `y_t -> values[t]`, giving a polynomial in `x` only,
    /// returned as a map from `x`-monomials to coefficients (zeros dropped).
    pub fn substitute_y(&self, values: &[Monomial]) -> BTreeMap<Monomial, BigRational> {
        assert_eq!(values.len(), self.dims.1, "one value per y variable");
        let mut out: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (mono, c) in &self.terms {
            let mut x = mono.x.clone();
            for (t, v) in values.iter().enumerate() {
                let e = mono.y.exponent(t);
                if e > 0 {
                    x = x.mul(&v.pow(e));
                }
            }
            *out.entry(x).or_insert_with(BigRational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// A pure-difference binomial: two terms with opposite coefficients.
    pub fn is_pure_difference_binomial(&self) -> bool {
        match self.terms.as_slice() {
            [(_, a), (_, b)] => (a + b).is_zero(),
            _ => false,
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let a = c.abs();
            let is_const = mono.degree() == 0;
            if !a.is_one() || is_const {
                write!(f, "{a}")?;
                if !is_const {
                    f.write_str("*")?;
                }
            }
            if !is_const {
                write!(f, "{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rm(x: &[u32], y: &[u32]) -> RingMonomial {
        RingMonomial::new(Monomial::new(x.to_vec()), Monomial::new(y.to_vec()))
    }

    #[test]
    fn leading_terms() {
        let o = MonomialOrder::Lex;
        // x1 + x2 with x2 > x1
        let p = Polynomial::from_terms(
            o,
            2,
            0,
            [(rm(&[1, 0], &[]), rational(1)), (rm(&[0, 1], &[]), rational(1))],
        );
        assert_eq!(p.leading_monomial().unwrap(), &rm(&[0, 1], &[]));
        let c = Polynomial::from_terms(o, 2, 1, [(rm(&[0, 0], &[0]), rational(7))]);
        let (mono, coeff) = c.leading_term().unwrap();
        assert_eq!(mono, &RingMonomial::one(2, 1));
        assert_eq!(coeff, &rational(7));
        assert!(matches!(
            Polynomial::zero(o, 2, 1).leading_term(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn arithmetic_combines_like_terms() {
        let o = MonomialOrder::Lex;
        let a = Polynomial::binomial(o, rm(&[1, 0], &[0, 1]), rm(&[0, 1], &[1, 0]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&a), a.scale(&rational(2)));
        assert_eq!(a.to_string(), "x1*y2 - x2*y1");
        let sq = a.mul(&a);
        assert_eq!(sq.len(), 3);
        assert!(a.is_pure_difference_binomial());
    }

    #[test]
    fn substitution_kills_relations() {
        let o = MonomialOrder::Lex;
        // x1*y2 - x2*y1 at y1 = x1, y2 = x2
        let g = Polynomial::binomial(o, rm(&[1, 0], &[0, 1]), rm(&[0, 1], &[1, 0]));
        let vals = [Monomial::var(2, 0), Monomial::var(2, 1)];
        assert!(g.substitute_y(&vals).is_empty());
    }
}
