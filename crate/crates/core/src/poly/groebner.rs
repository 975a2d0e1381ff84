//! Multivariate division, S-polynomials and Buchberger's algorithm.

use std::cmp::Ordering;

use num_rational::BigRational;

use super::order::{MonomialOrder, RingMonomial};
use super::polynomial::Polynomial;
use crate::error::{Error, LimitExceeded, Result};
use crate::ideal::MonomialIdeal;

/// Caps on a Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerLimits {
    /// Maximum number of S-polynomial reductions.
    pub max_pairs: usize,
    /// Maximum total degree of a pair's lcm.
    pub max_degree: u64,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits {
            max_pairs: 100_000,
            max_degree: 200,
        }
    }
}

/// Result of dividing `p` by an ordered list of polynomials:
/// `p = sum quotients[i] * basis[i] + remainder`.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn check_binomial(p: &Polynomial, binomial: bool, what: &str) -> Result<()> {
    if binomial && p.len() > 2 {
        return Err(Error::Consistency(format!(
            "{what} {p} has {} terms in a binomial computation",
            p.len()
        )));
    }
    Ok(())
}

fn divide_impl(
    p: &Polynomial,
    basis: &[Polynomial],
    track_quotients: bool,
    binomial: bool,
) -> Result<Division> {
    let (m, n) = p.dims();
    let order = p.order();
    let leads: Vec<(&RingMonomial, &BigRational)> = basis
        .iter()
        .map(|b| b.leading_term())
        .collect::<Result<_>>()?;
    let mut quotients: Vec<Polynomial> = if track_quotients {
        vec![Polynomial::zero(order, m, n); basis.len()]
    } else {
        Vec::new()
    };
    let mut rest = p.clone();
    let mut remainder_terms = Vec::new();
    while let Some((lm, lc)) = rest.terms().first().cloned() {
        check_binomial(&rest, binomial, "intermediate dividend")?;
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(k, (bm, bc))| lm.checked_div(bm).map(|q| (k, q, &lc / *bc)));
        match hit {
            Some((k, q_mono, q_coeff)) => {
                rest = rest.sub(&basis[k].mul_term(&q_mono, &q_coeff));
                if track_quotients {
                    let t = Polynomial::from_terms(order, m, n, [(q_mono, q_coeff)]);
                    quotients[k] = quotients[k].add(&t);
                }
            }
            None => {
                remainder_terms.push((lm.clone(), lc.clone()));
                rest = rest.sub(&Polynomial::from_terms(order, m, n, [(lm, lc)]));
            }
        }
    }
    let remainder = Polynomial::from_terms(order, m, n, remainder_terms);
    check_binomial(&remainder, binomial, "remainder")?;
    Ok(Division {
        quotients,
        remainder,
    })
}

/// Full multivariate division. At each step the first basis element (in list
/// order) whose leading monomial divides the current leading term is used.
pub fn divide(p: &Polynomial, basis: &[Polynomial]) -> Result<Division> {
    divide_impl(p, basis, true, false)
}

/// Remainder of [`divide`]: no term is divisible by a basis leading monomial.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    divide_impl(p, basis, false, false).map(|d| d.remainder)
}

/// `lcm/LT(p) * p - lcm/LT(q) * q` with `lcm = lcm(LM p, LM q)`.
pub fn s_polynomial(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let (lp, cp) = p.leading_term()?;
    let (lq, cq) = q.leading_term()?;
    let l = lp.lcm(lq);
    let a = p.mul_term(&l.checked_div(lp).expect("lcm divisible"), &cp.recip());
    let b = q.mul_term(&l.checked_div(lq).expect("lcm divisible"), &cq.recip());
    Ok(a.sub(&b))
}

/// A reduced Gröbner basis: monic, pairwise reduced, sorted by decreasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    pairs_reduced: usize,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn pairs_reduced(&self) -> usize {
        self.pairs_reduced
    }

    /// Stable text form: one polynomial per line, terms in decreasing order.
    pub fn dump(&self) -> String {
        self.polys.iter().map(|p| format!("{p}\n")).collect()
    }
}

/// Monomial ideal of leading monomials, over the flattened `x, y` variables.
pub fn initial_ideal(basis: &[Polynomial], m: usize, n: usize) -> Result<MonomialIdeal> {
    let leads: Vec<_> = basis
        .iter()
        .map(|p| p.leading_monomial().map(RingMonomial::flatten))
        .collect::<Result<_>>()?;
    Ok(MonomialIdeal::generated_by(m + n, &leads))
}

/// Reduced Gröbner basis of the ideal generated by `generators` under
/// `order`, using the normal pair-selection strategy (smallest lcm first) and
/// skipping pairs with coprime leading monomials.
///
/// When every input is a pure-difference binomial, every remainder and basis
/// element is checked to have at most two terms.
pub fn buchberger(
    generators: &[Polynomial],
    order: MonomialOrder,
    limits: GroebnerLimits,
) -> Result<GroebnerBasis> {
    let binomial = !generators.is_empty()
        && generators.iter().all(Polynomial::is_pure_difference_binomial);
    let mut basis: Vec<Polynomial> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order).monic())
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let mut pairs_reduced = 0usize;

    while !pairs.is_empty() {
        let (pos, lcm) = pairs
            .iter()
            .enumerate()
            .map(|(pos, &(i, j))| {
                let l = basis[i]
                    .leading_monomial()
                    .expect("nonzero")
                    .lcm(basis[j].leading_monomial().expect("nonzero"));
                (pos, l)
            })
            .min_by(|(pa, la), (pb, lb)| {
                order
                    .compare(la, lb)
                    .then_with(|| pairs[*pa].cmp(&pairs[*pb]))
            })
            .expect("non-empty");
        let (i, j) = pairs.swap_remove(pos);
        let (li, lj) = (
            basis[i].leading_monomial()?,
            basis[j].leading_monomial()?,
        );
        if li.is_coprime(lj) {
            continue;
        }
        if lcm.degree() > limits.max_degree {
            return Err(limit_error(
                format!("pair lcm {lcm} exceeds degree cap {}", limits.max_degree),
                pairs_reduced,
                basis,
            ));
        }
        if pairs_reduced >= limits.max_pairs {
            return Err(limit_error(
                format!("pair reduction cap {} reached", limits.max_pairs),
                pairs_reduced,
                basis,
            ));
        }
        pairs_reduced += 1;
        let s = s_polynomial(&basis[i], &basis[j])?;
        check_binomial(&s, binomial, "S-polynomial")?;
        let r = divide_impl(&s, &basis, false, binomial)?.remainder;
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }

    let polys = reduce_basis(basis, binomial)?;
    Ok(GroebnerBasis {
        order,
        polys,
        pairs_reduced,
    })
}

fn limit_error(reason: String, pairs_reduced: usize, partial_basis: Vec<Polynomial>) -> Error {
    Error::ResourceLimit(Box::new(LimitExceeded {
        reason,
        pairs_reduced,
        partial_basis,
    }))
}

/// Turns a Gröbner basis into the reduced one.
fn reduce_basis(mut basis: Vec<Polynomial>, binomial: bool) -> Result<Vec<Polynomial>> {
    let order = match basis.first() {
        Some(p) => p.order(),
        None => return Ok(basis),
    };
    basis.sort_by(|a, b| {
        order.compare(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    // keep only elements whose leading monomial is not divisible by an
    // earlier (smaller) kept one; equal leading monomials keep the first
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in basis {
        let lm = p.leading_monomial()?;
        if !minimal
            .iter()
            .any(|q| q.leading_monomial().expect("nonzero").divides(lm))
        {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .map(|(_, q)| q.clone())
            .collect();
        let r = divide_impl(&minimal[k], &others, false, binomial)?.remainder;
        reduced.push(r.monic());
    }
    reduced.sort_by(|a, b| {
        order
            .compare(
                b.leading_monomial().expect("nonzero"),
                a.leading_monomial().expect("nonzero"),
            )
            .then(Ordering::Equal)
    });
    Ok(reduced)
}

/// `true` iff every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool> {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(&basis[i], &basis[j])?;
            if !normal_form(&s, basis)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::poly::polynomial::rational;
    use proptest::prelude::*;

    fn rm(x: &[u32], y: &[u32]) -> RingMonomial {
        RingMonomial::new(Monomial::new(x.to_vec()), Monomial::new(y.to_vec()))
    }

    fn bin(x1: &[u32], y1: &[u32], x2: &[u32], y2: &[u32]) -> Polynomial {
        Polynomial::binomial(MonomialOrder::Lex, rm(x1, y1), rm(x2, y2))
    }

    #[test]
    fn s_polynomial_of_self_is_zero() {
        let p = bin(&[1, 0], &[0, 1], &[0, 1], &[1, 0]);
        assert!(s_polynomial(&p, &p).unwrap().is_zero());
        let zero = Polynomial::zero(MonomialOrder::Lex, 2, 2);
        assert!(matches!(s_polynomial(&p, &zero), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn normal_form_examples() {
        let g = bin(&[1, 0], &[0, 1], &[0, 1], &[1, 0]);
        assert!(normal_form(&g, std::slice::from_ref(&g)).unwrap().is_zero());
        // x1*y1 modulo x2*y1 stays put
        let p = Polynomial::from_terms(MonomialOrder::Lex, 2, 1, [(rm(&[1, 0], &[1]), rational(1))]);
        let b = Polynomial::from_terms(MonomialOrder::Lex, 2, 1, [(rm(&[0, 1], &[1]), rational(1))]);
        assert_eq!(normal_form(&p, &[b]).unwrap(), p);
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let g = bin(&[1, 0], &[0, 1], &[0, 1], &[1, 0]);
        let gb = buchberger(std::slice::from_ref(&g), MonomialOrder::Lex, GroebnerLimits::default()).unwrap();
        assert_eq!(gb.polynomials(), std::slice::from_ref(&g));
        let init = initial_ideal(gb.polynomials(), 2, 2).unwrap();
        assert_eq!(init.generators(), &[rm(&[1, 0], &[0, 1]).flatten()]);
        assert!(initial_ideal(&[], 2, 2).unwrap().is_zero());
    }

    #[test]
    fn difference_of_generators_appears() {
        // y1 - x1, y1 - x2  ->  contains x2 - x1 (monic: leading x2)
        let a = bin(&[0, 0], &[1], &[1, 0], &[0]);
        let b = bin(&[0, 0], &[1], &[0, 1], &[0]);
        let gb = buchberger(&[a, b], MonomialOrder::Lex, GroebnerLimits::default()).unwrap();
        let expected = bin(&[0, 1], &[0], &[1, 0], &[0]);
        assert!(gb.polynomials().contains(&expected), "{}", gb.dump());
        assert!(is_groebner_basis(gb.polynomials()).unwrap());
    }

    #[test]
    fn resource_cap_reports_partial_state() {
        let a = bin(&[0, 0], &[1], &[1, 0], &[0]);
        let b = bin(&[0, 0], &[1], &[0, 1], &[0]);
        let limits = GroebnerLimits {
            max_pairs: 0,
            max_degree: 200,
        };
        match buchberger(&[a, b], MonomialOrder::Lex, limits) {
            Err(Error::ResourceLimit(state)) => {
                assert_eq!(state.pairs_reduced, 0);
                assert_eq!(state.partial_basis.len(), 2);
            }
            other => panic!("expected resource limit, got {other:?}"),
        }
    }

    fn random_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (
                prop::collection::vec(0u32..3, 2),
                prop::collection::vec(0u32..2, 2),
                -3i64..4,
            ),
            1..4,
        )
        .prop_map(|terms| {
            Polynomial::from_terms(
                MonomialOrder::Lex,
                2,
                2,
                terms
                    .into_iter()
                    .map(|(x, y, c)| (rm(&x, &y), rational(c))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn division_identity(p in random_poly(), basis in prop::collection::vec(random_poly(), 1..4)) {
            let basis: Vec<Polynomial> = basis.into_iter().filter(|b| !b.is_zero()).collect();
            let d = divide(&p, &basis).unwrap();
            let mut recombined = d.remainder.clone();
            for (q, b) in d.quotients.iter().zip(&basis) {
                recombined = recombined.add(&q.mul(b));
            }
            prop_assert_eq!(&recombined, &p);
            for (mono, _) in d.remainder.terms() {
                for b in &basis {
                    prop_assert!(!b.leading_monomial().unwrap().divides(mono));
                }
            }
        }

        #[test]
        fn buchberger_output_is_reduced_and_stable(gens in prop::collection::vec(random_poly(), 1..3)) {
            let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            let gb = buchberger(&gens, MonomialOrder::Lex, GroebnerLimits::default()).unwrap();
            prop_assert!(is_groebner_basis(gb.polynomials()).unwrap());
            for g in &gens {
                prop_assert!(normal_form(g, gb.polynomials()).unwrap().is_zero());
            }
            for (k, p) in gb.polynomials().iter().enumerate() {
                prop_assert!(p.leading_term().unwrap().1 == &rational(1));
                for (l, q) in gb.polynomials().iter().enumerate() {
                    if k != l {
                        let lq = q.leading_monomial().unwrap();
                        prop_assert!(p.terms().iter().all(|(mono, _)| !lq.divides(mono)));
                    }
                }
            }
            let again = buchberger(&gens, MonomialOrder::Lex, GroebnerLimits::default()).unwrap();
            prop_assert_eq!(gb.dump(), again.dump());
        }
    }
}
