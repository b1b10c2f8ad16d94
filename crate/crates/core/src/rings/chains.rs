//! Idealistic chains in a ring and their collapse.
//!
//! A chain `((J₀,U₀),…,(Jℓ,Uℓ))` collapses when
//! `u₀(u₁(⋯(uℓ + jℓ)⋯) + j₁) + j₀ = 0` for some `uᵢ ∈ ℳ(Uᵢ)` and
//! `jᵢ ∈ ⟨Jᵢ⟩`. Reading the identity from the outside in, the admissible
//! values of the bracket after `u₀` form `C₀ = (⟨J₀⟩ : u₀^∞)`, those after
//! `u₁` form `C₁ = ((C₀ + ⟨J₁⟩) : u₁^∞)`, and so on; the chain collapses
//! iff `1 ∈ Cℓ`. Every element of `ℳ(Uᵢ)` divides a power of `∏Uᵢ`, so
//! saturating by that single product is enough.

use super::ideal::{saturation, FGIdeal};
use super::ring::{CompRing, Elem};
use crate::error::{KrullError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RingLevel {
    pub j: Vec<Elem>,
    pub u: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingChain {
    pub levels: Vec<RingLevel>,
}

impl RingChain {
    pub fn new(levels: Vec<RingLevel>) -> Self {
        assert!(!levels.is_empty(), "a chain has at least one level");
        RingChain { levels }
    }

    pub fn order(&self) -> usize {
        self.levels.len() - 1
    }
}

/// `((∅; x₁), (x₁; x₂), …, (xℓ; 1))`.
pub fn elementary_ring_chain(ring: &CompRing, xs: &[Elem]) -> RingChain {
    let mut levels = Vec::with_capacity(xs.len() + 1);
    for i in 0..=xs.len() {
        let j = if i == 0 { vec![] } else { vec![xs[i - 1].clone()] };
        let u = if i < xs.len() { vec![xs[i].clone()] } else { vec![ring.one()] };
        levels.push(RingLevel { j, u });
    }
    RingChain::new(levels)
}

/// The ideals `C₀ … Cℓ` of the boundary iteration.
pub fn boundary_ideals(ring: &CompRing, c: &RingChain) -> Vec<FGIdeal> {
    let mut out: Vec<FGIdeal> = Vec::with_capacity(c.levels.len());
    for level in &c.levels {
        let base = match out.last() {
            Some(prev) => prev.extend(&level.j),
            None => FGIdeal::new(ring, level.j.clone()),
        };
        let u = ring.product(&level.u);
        out.push(saturation(&base, &u));
    }
    out
}

pub fn chain_collapses_ring(ring: &CompRing, c: &RingChain) -> bool {
    boundary_ideals(ring, c).last().expect("nonempty chain").is_unit()
}

/// The elementary chain of `xs` collapses.
pub fn is_singular(ring: &CompRing, xs: &[Elem]) -> bool {
    chain_collapses_ring(ring, &elementary_ring_chain(ring, xs))
}

/// An explicit collapse identity: per level, exponents over the listed
/// `Uᵢ` and cofactors over the listed `Jᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCertificate {
    pub u_exps: Vec<Vec<u32>>,
    pub j_cofs: Vec<Vec<Elem>>,
}

fn check_shape(c: &RingChain, u_exps: &[Vec<u32>], j_lens: &[usize]) -> Result<()> {
    if u_exps.len() != c.levels.len() || j_lens.len() != c.levels.len() {
        return Err(KrullError::input("certificate and chain have different numbers of levels"));
    }
    for (k, level) in c.levels.iter().enumerate() {
        if u_exps[k].len() != level.u.len() || j_lens[k] != level.j.len() {
            return Err(KrullError::input(format!("certificate shape does not match level {k}")));
        }
    }
    Ok(())
}

pub(crate) fn monoid_element(ring: &CompRing, gens: &[Elem], exps: &[u32]) -> Elem {
    gens.iter()
        .zip(exps)
        .fold(ring.one(), |acc, (g, &e)| ring.mul(&acc, &ring.pow(g, e)))
}

impl ChainCertificate {
    /// `u₀(u₁(⋯(uℓ + jℓ)⋯) + j₁) + j₀`.
    pub fn evaluate(&self, ring: &CompRing, c: &RingChain) -> Result<Elem> {
        let lens: Vec<usize> = self.j_cofs.iter().map(Vec::len).collect();
        check_shape(c, &self.u_exps, &lens)?;
        let mut v = ring.zero();
        for (k, level) in c.levels.iter().enumerate().rev() {
            let u = monoid_element(ring, &level.u, &self.u_exps[k]);
            let j = level
                .j
                .iter()
                .zip(&self.j_cofs[k])
                .fold(ring.zero(), |acc, (g, a)| ring.add(&acc, &ring.mul(g, a)));
            let inner = if k == c.order() { ring.one() } else { v };
            v = ring.add(&ring.mul(&u, &inner), &j);
        }
        Ok(v)
    }

    pub fn verify(&self, ring: &CompRing, c: &RingChain) -> Result<bool> {
        Ok(ring.is_zero(&self.evaluate(ring, c)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_chains() {
        let z = CompRing::Integers;
        let xs = [z.from_int(6), z.from_int(10)];
        let c = elementary_ring_chain(&z, &xs);
        let cs = boundary_ideals(&z, &c);
        let gens: Vec<_> = cs.iter().map(|i| i.principal_generator().unwrap().clone()).collect();
        assert_eq!(gens, vec![0.into(), 3.into(), 1.into()]);
        assert!(is_singular(&z, &xs));
        assert!(!is_singular(&z, &[z.from_int(5)]));
        assert!(!is_singular(&z, &[]));
    }

    #[test]
    fn variables_are_pseudo_regular() {
        let r = CompRing::parse("poly(QQ,[x,y])").unwrap();
        let e = |s: &str| r.parse_elem(s).unwrap();
        assert!(!is_singular(&r, &[e("x"), e("y")]));
        assert!(is_singular(&r, &[e("x"), e("y"), e("x+y")]));
    }

    #[test]
    fn certificates_evaluate_nested() {
        let z = CompRing::Integers;
        let xs = [z.from_int(6), z.from_int(10)];
        let c = elementary_ring_chain(&z, &xs);
        let cert = ChainCertificate {
            u_exps: vec![vec![0], vec![1], vec![0]],
            j_cofs: vec![vec![], vec![z.from_int(-35)], vec![z.from_int(2)]],
        };
        assert!(cert.verify(&z, &c).unwrap());
        let bad = ChainCertificate {
            u_exps: vec![vec![0], vec![1]],
            j_cofs: vec![vec![], vec![z.from_int(-35)]],
        };
        assert!(bad.verify(&z, &c).is_err());
    }
}
