//! Monomial ideals, stored by their (unique) minimal generating set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Drops every generator divisible by another one and sorts the survivors by
/// degree, then exponent vector. Duplicates collapse to a single copy.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by(|a, b| a.cmp_deg_lex(b));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    // a divisor has degree <= its multiple, so it is already in `kept`
    for g in sorted {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// A monomial ideal of `K[x_1, ..., x_m]`.
///
/// Generators are always minimal and sorted, so two ideals are equal exactly
/// when their generator lists are equal. The zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    ambient: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            generators: Vec::new(),
        }
    }

    /// The ideal generated by `gens`, minimalized.
    ///
    /// Panics if a generator is not over `ambient` variables.
    pub fn generated_by(ambient: usize, gens: &[Monomial]) -> Self {
        for g in gens {
            assert_eq!(g.ambient(), ambient, "generator {g} has wrong ambient dimension");
        }
        MonomialIdeal {
            ambient,
            generators: minimalize(gens),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// `true` iff the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains_monomial(&self, h: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(h))
    }

    /// `I : h`, generated by `g / [g, h]` over the generators `g` of `I`.
    pub fn colon_by_monomial(&self, h: &Monomial) -> MonomialIdeal {
        let gens: Vec<Monomial> = self.generators.iter().map(|g| g.reduced_by(h)).collect();
        MonomialIdeal::generated_by(self.ambient, &gens)
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains_monomial(g))
    }

    /// Ideal equality by mutual containment (equivalent to `==`).
    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        MonomialIdeal::generated_by(self.ambient, &gens)
    }

    /// Krull dimension of `K[x_1..x_N]/I` with `N = ambient_vars`: `N` minus
    /// the size of a smallest variable set meeting the support of every
    /// generator.
    pub fn krull_dimension_of_quotient(&self, ambient_vars: usize) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::InvalidInput(
                "quotient by the unit ideal has no dimension".into(),
            ));
        }
        if ambient_vars < self.ambient {
            return Err(Error::InvalidInput(format!(
                "ambient_vars {ambient_vars} smaller than the ideal's {} variables",
                self.ambient
            )));
        }
        let supports: Vec<Vec<usize>> = self
            .generators
            .iter()
            .map(|g| g.support().collect())
            .collect();
        let cover = minimum_hitting_set(&supports, self.ambient);
        Ok(ambient_vars - cover)
    }
}

/// Size of a smallest set of vertices meeting every edge, by branching on the
/// smallest uncovered edge.
fn minimum_hitting_set(edges: &[Vec<usize>], vertices: usize) -> usize {
    fn search(
        edges: &[Vec<usize>],
        chosen: &mut Vec<bool>,
        size: usize,
        best: &mut usize,
    ) {
        if size >= *best {
            return;
        }
        let uncovered = edges
            .iter()
            .filter(|e| !e.iter().any(|&v| chosen[v]))
            .min_by_key(|e| e.len());
        match uncovered {
            None => *best = size,
            Some(edge) => {
                for &v in edge {
                    chosen[v] = true;
                    search(edges, chosen, size + 1, best);
                    chosen[v] = false;
                }
            }
        }
    }
    let mut chosen = vec![false; vertices];
    let mut best = edges.len().min(vertices) + 1;
    search(edges, &mut chosen, 0, &mut best);
    best
}

/// Monomials are a regular sequence iff they are pairwise coprime.
pub fn is_regular_sequence(gs: &[Monomial]) -> Result<bool> {
    if let Some(g) = gs.iter().find(|g| g.is_one()) {
        return Err(Error::InvalidInput(format!(
            "constant monomial {g} in a regular-sequence test"
        )));
    }
    Ok(gs
        .iter()
        .enumerate()
        .all(|(i, a)| gs[i + 1..].iter().all(|b| a.is_coprime(b))))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(m: usize, gens: &[&[u32]]) -> MonomialIdeal {
        let gens: Vec<Monomial> = gens.iter().map(|g| mono(g)).collect();
        MonomialIdeal::generated_by(m, &gens)
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(minimalize(&[mono(&[1, 0]), mono(&[1, 1])]), vec![mono(&[1, 0])]);
        assert_eq!(
            minimalize(&[mono(&[1, 0]), mono(&[0, 1])]),
            vec![mono(&[0, 1]), mono(&[1, 0])]
        );
        // {x2x3, x2, x3^2} -> {x2, x3^2}
        assert_eq!(
            minimalize(&[mono(&[0, 1, 1]), mono(&[0, 1, 0]), mono(&[0, 0, 2])]),
            vec![mono(&[0, 1, 0]), mono(&[0, 0, 2])]
        );
    }

    #[test]
    fn membership() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(i.contains_monomial(&mono(&[1, 0, 1])));
        assert!(!MonomialIdeal::zero(3).contains_monomial(&mono(&[1, 1, 1])));
        assert!(!ideal(3, &[&[0, 1, 1]]).contains_monomial(&mono(&[0, 1, 0])));
    }

    #[test]
    fn colon_examples() {
        // (x1x2) : x2x3 = (x1)
        let i = ideal(3, &[&[1, 1, 0]]);
        assert_eq!(i.colon_by_monomial(&mono(&[0, 1, 1])), ideal(3, &[&[1, 0, 0]]));
        // (x1x2, x2x3) : x2x4 = (x1, x3)
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0]]);
        assert_eq!(
            i.colon_by_monomial(&mono(&[0, 1, 0, 1])),
            ideal(4, &[&[1, 0, 0, 0], &[0, 0, 1, 0]])
        );
        let i = ideal(2, &[&[1, 0], &[1, 1]]);
        assert_eq!(i.colon_by_monomial(&Monomial::one(2)), i);
        assert!(MonomialIdeal::zero(2).colon_by_monomial(&mono(&[1, 1])).is_zero());
    }

    /// Brute-force colon: minimal elements among bounded-degree `w` with
    /// `w*h` in `I`.
    fn colon_brute_force(i: &MonomialIdeal, h: &Monomial, bound: u32) -> Vec<Monomial> {
        let m = i.ambient();
        let mut members = Vec::new();
        let total = (bound + 1).pow(m as u32);
        for code in 0..total {
            let mut c = code;
            let exps: Vec<u32> = (0..m)
                .map(|_| {
                    let e = c % (bound + 1);
                    c /= bound + 1;
                    e
                })
                .collect();
            let w = Monomial::new(exps);
            if i.contains_monomial(&w.mul(h)) {
                members.push(w);
            }
        }
        minimalize(&members)
    }

    #[test]
    fn colon_matches_brute_force_example() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0]]);
        let h = mono(&[0, 1, 0, 1]);
        assert_eq!(
            colon_brute_force(&i, &h, 3),
            i.colon_by_monomial(&h).generators().to_vec()
        );
    }

    #[test]
    fn subset_and_equality() {
        assert!(ideal(2, &[&[1, 1]]).is_subset(&ideal(2, &[&[1, 0]])));
        assert!(!ideal(2, &[&[1, 0]]).is_subset(&ideal(2, &[&[1, 1]])));
        assert!(MonomialIdeal::zero(2).is_subset(&ideal(2, &[&[1, 0]])));
        assert!(ideal(2, &[&[1, 0], &[1, 1]]).equals(&ideal(2, &[&[1, 0]])));
        assert!(!ideal(2, &[&[1, 0]]).equals(&ideal(2, &[&[0, 1]])));
        assert!(MonomialIdeal::zero(2).equals(&MonomialIdeal::zero(2)));
    }

    #[test]
    fn regular_sequences() {
        let x = |i| Monomial::var(5, i);
        assert!(is_regular_sequence(&[x(0), x(1), x(2)]).unwrap());
        assert!(!is_regular_sequence(&[mono(&[1, 1, 0, 0, 0]), mono(&[0, 1, 1, 0, 0])]).unwrap());
        assert!(is_regular_sequence(&[
            mono(&[1, 1, 0, 0, 0]),
            mono(&[0, 0, 1, 1, 0]),
            x(4)
        ])
        .unwrap());
        assert!(is_regular_sequence(&[x(0), Monomial::one(5)]).is_err());
    }

    #[test]
    fn krull_dimension_examples() {
        assert_eq!(MonomialIdeal::zero(5).krull_dimension_of_quotient(5).unwrap(), 5);
        assert_eq!(
            ideal(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]).krull_dimension_of_quotient(4).unwrap(),
            2
        );
        assert_eq!(
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]).krull_dimension_of_quotient(3).unwrap(),
            2
        );
        assert!(ideal(2, &[&[0, 0]]).krull_dimension_of_quotient(2).is_err());
    }

    fn brute_force_cover(i: &MonomialIdeal) -> usize {
        let m = i.ambient();
        (0u32..1 << m)
            .filter(|mask| {
                i.generators()
                    .iter()
                    .all(|g| g.support().any(|v| mask & (1 << v) != 0))
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..5).prop_flat_map(|m| {
            prop::collection::vec(prop::collection::vec(0u32..3, m), 0..5).prop_map(move |gs| {
                let gens: Vec<Monomial> = gs
                    .into_iter()
                    .map(Monomial::new)
                    .filter(|g| !g.is_one())
                    .collect();
                MonomialIdeal::generated_by(m, &gens)
            })
        })
    }

    proptest! {
        #[test]
        fn generated_by_is_idempotent(i in small_ideal()) {
            let again = MonomialIdeal::generated_by(i.ambient(), i.generators());
            prop_assert!(again.equals(&i));
            prop_assert_eq!(again, i);
        }

        #[test]
        fn colon_contains_ideal(i in small_ideal(), e in prop::collection::vec(0u32..3, 4)) {
            let h = Monomial::new(e[..i.ambient()].to_vec());
            prop_assert!(i.is_subset(&i.colon_by_monomial(&h)));
        }

        #[test]
        fn colon_membership(
            i in small_ideal(),
            e in prop::collection::vec(0u32..3, 4),
            w in prop::collection::vec(0u32..4, 4),
        ) {
            let m = i.ambient();
            let h = Monomial::new(e[..m].to_vec());
            let w = Monomial::new(w[..m].to_vec());
            prop_assert_eq!(
                i.colon_by_monomial(&h).contains_monomial(&w),
                i.contains_monomial(&w.mul(&h))
            );
        }

        #[test]
        fn hitting_set_matches_brute_force(i in small_ideal()) {
            let m = i.ambient();
            prop_assert_eq!(
                i.krull_dimension_of_quotient(m).unwrap(),
                m - brute_force_cover(&i)
            );
        }
    }
}
