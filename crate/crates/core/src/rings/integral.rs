//! Relative collapse for an integral element.
//!
//! From `x^k = Σ_{i≠k} aᵢxⁱ` with the coefficients split into `G` (sent to
//! the ideal side) and `G′` (sent to the monoid side), build
//! `x^m(g′ + b·x) = g` with `g ∈ ⟨G⟩·B` and `g′ ∈ ℳ(G′)`.

use super::ring::{CompRing, Elem};
use crate::error::{KrullError, Result};

/// `x^m(g′ + b·x) = g`, with `g = Σ cᵢ·aᵢ` over indices in `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralIdentity {
    pub m: u32,
    pub g_prime: Elem,
    /// Index of the coefficient used as `g′`, or `None` when `g′ = 1`.
    pub g_prime_index: Option<usize>,
    pub b: Elem,
    pub g: Elem,
    pub g_combination: Vec<(usize, Elem)>,
}

/// The relation `x^k = Σ_{i≠k} aᵢxⁱ`; `coeffs[k]` is unused and must be 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralRelation {
    pub k: usize,
    pub coeffs: Vec<Elem>,
}

impl IntegralRelation {
    pub fn holds(&self, ring: &CompRing, x: &Elem) -> bool {
        let rhs = (0..self.coeffs.len())
            .filter(|&i| i != self.k)
            .fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&self.coeffs[i], &ring.pow(x, i as u32))));
        ring.pow(x, self.k as u32) == rhs
    }
}

/// `in_g_prime[i]` places `aᵢ` in `G′`; every other index is in `G`.
pub fn integral_relative_collapse(
    ring: &CompRing,
    x: &Elem,
    rel: &IntegralRelation,
    in_g_prime: &[bool],
) -> Result<IntegralIdentity> {
    let n = rel.coeffs.len();
    if rel.k >= n || in_g_prime.len() != n {
        return Err(KrullError::input("relation and split must cover indices 0..=r, including k"));
    }
    if !ring.is_zero(&rel.coeffs[rel.k]) {
        return Err(KrullError::input("the coefficient at index k must be 0"));
    }
    if !rel.holds(ring, x) {
        return Err(KrullError::contract("x does not satisfy the relation"));
    }
    let k = rel.k;
    let a = &rel.coeffs;
    let xp = |e: usize| ring.pow(x, e as u32);
    let h = (0..n).find(|&i| i != k && in_g_prime[i]);
    let (m, g_prime, g_prime_index, b, combo) = match h {
        Some(h) if h < k => {
            // x^h·(a_h + x·(Σ_{i>h, i≠k} aᵢx^{i−h−1} − x^{k−h−1})) = −Σ_{i<h} aᵢxⁱ
            let mut b = ring.neg(&xp(k - h - 1));
            for i in (h + 1..n).filter(|&i| i != k) {
                b = ring.add(&b, &ring.mul(&a[i], &xp(i - h - 1)));
            }
            let combo: Vec<(usize, Elem)> = (0..h).map(|i| (i, ring.neg(&xp(i)))).collect();
            (h, a[h].clone(), Some(h), b, combo)
        }
        _ => {
            // x^k·(1 − x·Σ_{i>k} aᵢx^{i−k−1}) = Σ_{i<k} aᵢxⁱ
            let mut b = ring.zero();
            for (i, ai) in a.iter().enumerate().take(n).skip(k + 1) {
                b = ring.sub(&b, &ring.mul(ai, &xp(i - k - 1)));
            }
            let combo: Vec<(usize, Elem)> = (0..k).map(|i| (i, xp(i))).collect();
            (k, ring.one(), None, b, combo)
        }
    };
    let g = combo
        .iter()
        .fold(ring.zero(), |acc, (i, c)| ring.add(&acc, &ring.mul(c, &a[*i])));
    let id = IntegralIdentity {
        m: m as u32,
        g_prime,
        g_prime_index,
        b,
        g,
        g_combination: combo,
    };
    if !verify_integral_identity(ring, x, rel, in_g_prime, &id) {
        return Err(KrullError::contract("assembled identity failed its expansion check"));
    }
    Ok(id)
}

/// Expands `x^m(g′ + b·x) − g`, checks that `g` is the stated combination
/// of coefficients from `G` and that `g′` is 1 or a coefficient from `G′`.
pub fn verify_integral_identity(
    ring: &CompRing,
    x: &Elem,
    rel: &IntegralRelation,
    in_g_prime: &[bool],
    id: &IntegralIdentity,
) -> bool {
    let lhs = ring.mul(&ring.pow(x, id.m), &ring.add(&id.g_prime, &ring.mul(&id.b, x)));
    let combo_ok = id
        .g_combination
        .iter()
        .all(|(i, _)| *i < rel.coeffs.len() && *i != rel.k && !in_g_prime[*i]);
    let g = id
        .g_combination
        .iter()
        .fold(ring.zero(), |acc, (i, c)| ring.add(&acc, &ring.mul(c, &rel.coeffs[*i])));
    let g_prime_ok = match id.g_prime_index {
        None => ring.is_one(&id.g_prime),
        Some(i) => i != rel.k && in_g_prime[i] && id.g_prime == rel.coeffs[i],
    };
    lhs == id.g && g == id.g && combo_ok && g_prime_ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian() -> (CompRing, Elem, IntegralRelation) {
        let b = CompRing::parse("quot(poly(QQ,[t]),[t^2+1])").unwrap();
        let i = b.var("t").unwrap();
        let rel = IntegralRelation {
            k: 2,
            coeffs: vec![b.from_int(-1), b.zero(), b.zero()],
        };
        (b, i, rel)
    }

    #[test]
    fn empty_monoid_side() {
        let (b, i, rel) = gaussian();
        let id = integral_relative_collapse(&b, &i, &rel, &[false, false, false]).unwrap();
        assert_eq!(id.m, 2);
        assert!(b.is_one(&id.g_prime));
        assert_eq!(id.g, b.from_int(-1));
    }

    #[test]
    fn constant_term_on_the_monoid_side() {
        let (b, i, rel) = gaussian();
        let id = integral_relative_collapse(&b, &i, &rel, &[true, false, false]).unwrap();
        assert_eq!(id.m, 0);
        assert_eq!(id.g_prime, b.from_int(-1));
        assert_eq!(id.b, b.neg(&i));
        assert!(b.is_zero(&id.g));
    }

    #[test]
    fn degree_one_relation_and_bad_input() {
        let z = CompRing::parse("poly(QQ,[s])").unwrap();
        let x = z.from_int(3);
        let rel = IntegralRelation {
            k: 1,
            coeffs: vec![z.from_int(3), z.zero()],
        };
        for split in [[false, false], [true, false]] {
            let id = integral_relative_collapse(&z, &x, &rel, &split).unwrap();
            assert!(verify_integral_identity(&z, &x, &rel, &split, &id));
        }
        let wrong = IntegralRelation {
            k: 1,
            coeffs: vec![z.from_int(4), z.zero()],
        };
        assert!(matches!(
            integral_relative_collapse(&z, &x, &wrong, &[false, false]),
            Err(KrullError::Contract(_))
        ));
    }
}
