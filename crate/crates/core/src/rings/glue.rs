//! Comaximal elements and gluing of local collapse identities.
//!
//! If a chain collapses in every `A[1/sᵢ]` and `Σ cᵢsᵢ = 1`, it collapses
//! in `A`. Each local identity is made integral by a power of `sᵢ`, the
//! monoid factors are unified by multiplying through with the missing
//! parts, and a partition of unity `Σ aᵢ·sᵢ^{Eᵢ} = 1` combines them.

use super::certificates::{exponent_tuples, extended_gcd, solve_linear_diophantine};
use super::chains::{monoid_element, ChainCertificate, RingChain};
use super::groebner::lift_one;
use super::ideal::{saturation, FGIdeal};
use super::poly::Poly;
use super::ring::{CompRing, Elem};
use crate::error::{KrullError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

/// Cofactors `c` with `Σ cᵢsᵢ = 1`, or `None` when `⟨s⟩ ≠ ⟨1⟩`.
pub fn is_comaximal(ring: &CompRing, ss: &[Elem]) -> Option<Vec<Elem>> {
    let cofs = match ring {
        CompRing::Integers | CompRing::IntegersMod(_) => {
            let mut vs: Vec<BigInt> = ss.iter().map(|s| s.as_int().clone()).collect();
            if let CompRing::IntegersMod(n) = ring {
                vs.push(n.clone());
            }
            let (g, mut c) = extended_gcd(&vs);
            if !g.abs().is_one() {
                return None;
            }
            if g.is_negative() {
                c.iter_mut().for_each(|x| *x = -x.clone());
            }
            c.into_iter().take(ss.len()).map(|x| ring.from_int(x)).collect()
        }
        _ => {
            let r = ring.poly_ring().expect("polynomial kind");
            let mut gens: Vec<Poly> = ss.iter().map(|s| s.as_poly().clone()).collect();
            if let CompRing::Quotient(q) = ring {
                gens.extend(q.basis.basis().iter().cloned());
            }
            let c = lift_one(&r.field, r.nvars(), &gens)?;
            c.into_iter().take(ss.len()).map(|p| ring.from_poly(p)).collect::<Vec<_>>()
        }
    };
    let total = ss.iter().zip(&cofs).fold(ring.zero(), |acc, (s, c)| ring.add(&acc, &ring.mul(s, c)));
    debug_assert!(ring.is_one(&total));
    Some(cofs)
}

/// A collapse identity in `A[1/s]`: cofactor `(z, e)` stands for `z/sᵉ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalChainCertificate {
    pub u_exps: Vec<Vec<u32>>,
    pub j_cofs: Vec<Vec<(Elem, u32)>>,
}

/// A singular-sequence certificate in `A[1/s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSingularCertificate {
    pub m: Vec<u32>,
    pub a: Vec<(Elem, u32)>,
}

impl LocalSingularCertificate {
    pub fn to_chain_certificate(&self) -> LocalChainCertificate {
        let mut u_exps: Vec<Vec<u32>> = self.m.iter().map(|&e| vec![e]).collect();
        u_exps.push(vec![0]);
        let mut j_cofs = vec![Vec::new()];
        j_cofs.extend(self.a.iter().map(|a| vec![a.clone()]));
        LocalChainCertificate { u_exps, j_cofs }
    }
}

/// `s^E` times the local identity, times the extra `s^N` that kills it in
/// `A`: `u₀(⋯(s^{E+N}·uℓ + jℓ)⋯) + j₀ = 0` with integral `jₖ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClearedIdentity {
    pub exponent: u32,
    pub u_exps: Vec<Vec<u32>>,
    pub j_cofs: Vec<Vec<Elem>>,
}

fn nested_value(ring: &CompRing, c: &RingChain, top_scale: &Elem, u_exps: &[Vec<u32>], j_cofs: &[Vec<Elem>]) -> Elem {
    let mut v = ring.zero();
    for (k, level) in c.levels.iter().enumerate().rev() {
        let u = monoid_element(ring, &level.u, &u_exps[k]);
        let j = level
            .j
            .iter()
            .zip(&j_cofs[k])
            .fold(ring.zero(), |acc, (g, a)| ring.add(&acc, &ring.mul(g, a)));
        let inner = if k == c.order() { top_scale.clone() } else { v };
        v = ring.add(&ring.mul(&u, &inner), &j);
    }
    v
}

const MAX_CLEARING_POWER: u32 = 4096;

/// Clears denominators of a local identity; errors if it does not hold
/// in `A[1/s]`.
pub fn clear_denominators(ring: &CompRing, c: &RingChain, s: &Elem, local: &LocalChainCertificate) -> Result<ClearedIdentity> {
    if local.u_exps.len() != c.levels.len() || local.j_cofs.len() != c.levels.len() {
        return Err(KrullError::input("local certificate and chain have different numbers of levels"));
    }
    for (k, level) in c.levels.iter().enumerate() {
        if local.u_exps[k].len() != level.u.len() || local.j_cofs[k].len() != level.j.len() {
            return Err(KrullError::input(format!("local certificate shape does not match level {k}")));
        }
    }
    let e_max = local.j_cofs.iter().flatten().map(|(_, e)| *e).max().unwrap_or(0);
    let scaled = |extra: u32| -> Vec<Vec<Elem>> {
        local
            .j_cofs
            .iter()
            .map(|lvl| lvl.iter().map(|(z, e)| ring.mul(z, &ring.pow(s, e_max - e + extra))).collect())
            .collect()
    };
    let v = nested_value(ring, c, &ring.pow(s, e_max), &local.u_exps, &scaled(0));
    if !saturation(&FGIdeal::new(ring, vec![]), s).contains(&v) {
        return Err(KrullError::contract("local identity does not hold after clearing denominators"));
    }
    let mut n = 0;
    let mut w = v;
    while !ring.is_zero(&w) {
        n += 1;
        if n > MAX_CLEARING_POWER {
            return Err(KrullError::resource("power of s needed to clear the identity is too large"));
        }
        w = ring.mul(&w, s);
    }
    Ok(ClearedIdentity {
        exponent: e_max + n,
        u_exps: local.u_exps.clone(),
        j_cofs: scaled(n),
    })
}

const MAX_PARTITION_TERMS: usize = 1 << 20;

/// `aᵢ` with `Σ aᵢ·sᵢ^{Eᵢ} = 1`, from `(Σ cᵢsᵢ)^M` with `M = ΣEᵢ − n + 1`.
pub fn partition_of_unity(ring: &CompRing, ss: &[Elem], cs: &[Elem], es: &[u32]) -> Result<Vec<Elem>> {
    let n = ss.len();
    if let Some(i) = es.iter().position(|&e| e == 0) {
        return Ok((0..n).map(|k| if k == i { ring.one() } else { ring.zero() }).collect());
    }
    let big_m: u32 = es.iter().sum::<u32>() + 1 - n as u32;
    let count = {
        let mut c = BigInt::one();
        for k in 1..n as u64 {
            c = c * BigInt::from(big_m as u64 + k) / BigInt::from(k);
        }
        c
    };
    if count > BigInt::from(MAX_PARTITION_TERMS) {
        return Err(KrullError::resource("partition of unity needs too many terms"));
    }
    let fact = |k: u32| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let mut out = vec![ring.zero(); n];
    let mut alpha = vec![0u32; n];
    fn compositions(n: usize, total: u32, at: usize, alpha: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if at + 1 == n {
            alpha[at] = total;
            f(alpha);
            return;
        }
        for a in 0..=total {
            alpha[at] = a;
            compositions(n, total - a, at + 1, alpha, f);
        }
    }
    compositions(n, big_m, 0, &mut alpha, &mut |alpha| {
        let i = (0..n).find(|&i| alpha[i] >= es[i]).expect("pigeonhole");
        let coef = alpha.iter().fold(fact(big_m), |acc, &a| acc / fact(a));
        let mut term = ring.from_int(coef);
        for k in 0..n {
            let se = if k == i { alpha[k] - es[k] } else { alpha[k] };
            term = ring.mul(&term, &ring.mul(&ring.pow(&cs[k], alpha[k]), &ring.pow(&ss[k], se)));
        }
        out[i] = ring.add(&out[i], &term);
    });
    let total = (0..n).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&out[i], &ring.pow(&ss[i], es[i]))));
    if !ring.is_one(&total) {
        return Err(KrullError::contract("partition of unity failed its check"));
    }
    Ok(out)
}

/// A collapse identity in `A` from local ones in each `A[1/sᵢ]`.
pub fn glue_collapses(
    ring: &CompRing,
    ss: &[Elem],
    cs: &[Elem],
    c: &RingChain,
    locals: &[LocalChainCertificate],
) -> Result<ChainCertificate> {
    if ss.is_empty() || ss.len() != cs.len() || ss.len() != locals.len() {
        return Err(KrullError::input("need one cofactor and one local certificate per element"));
    }
    let total = ss.iter().zip(cs).fold(ring.zero(), |acc, (s, c)| ring.add(&acc, &ring.mul(s, c)));
    if !ring.is_one(&total) {
        return Err(KrullError::contract("comaximality witness does not sum to 1"));
    }
    let cleared = ss
        .iter()
        .zip(locals)
        .map(|(s, l)| clear_denominators(ring, c, s, l))
        .collect::<Result<Vec<_>>>()?;
    let levels = c.levels.len();
    let u_exps: Vec<Vec<u32>> = (0..levels)
        .map(|k| {
            (0..c.levels[k].u.len())
                .map(|t| cleared.iter().map(|id| id.u_exps[k][t]).sum())
                .collect()
        })
        .collect();
    let es: Vec<u32> = cleared.iter().map(|id| id.exponent).collect();
    let parts = partition_of_unity(ring, ss, cs, &es)?;
    let mut j_cofs: Vec<Vec<Elem>> = c.levels.iter().map(|l| vec![ring.zero(); l.j.len()]).collect();
    for (id, a) in cleared.iter().zip(&parts) {
        // W_k = ∏_{k' ≥ k} (u_{k'} / u_{k',i})
        let mut w = ring.one();
        for k in (0..levels).rev() {
            let missing: Vec<u32> = u_exps[k].iter().zip(&id.u_exps[k]).map(|(t, e)| t - e).collect();
            w = ring.mul(&w, &monoid_element(ring, &c.levels[k].u, &missing));
            let factor = ring.mul(a, &w);
            for (t, j) in id.j_cofs[k].iter().enumerate() {
                j_cofs[k][t] = ring.add(&j_cofs[k][t], &ring.mul(&factor, j));
            }
        }
    }
    let cert = ChainCertificate { u_exps, j_cofs };
    if !cert.verify(ring, c)? {
        return Err(KrullError::contract("glued identity failed its expansion check"));
    }
    Ok(cert)
}

/// Certificate for `xs` in `ℤ[1/s]` by extended gcd: for each exponent
/// tuple and each `e ≤ max_den`, solve `Σ aᵢ′·Pᵢxᵢ = −sᵉ·Pℓ` over `ℤ`.
pub fn find_local_integer_certificate(xs: &[BigInt], s: &BigInt, max_exp: u32, max_den: u32) -> Option<LocalSingularCertificate> {
    let z = CompRing::Integers;
    for m in exponent_tuples(xs.len(), max_exp) {
        let mut p = BigInt::one();
        let mut vs = Vec::with_capacity(xs.len());
        for (x, &e) in xs.iter().zip(&m) {
            p *= x.pow(e);
            vs.push(&p * x);
        }
        for e in 0..=max_den {
            let rhs = -(s.pow(e) * &p);
            if let Some(sol) = solve_linear_diophantine(&vs, &rhs) {
                let a = sol.into_iter().map(|c| (z.from_int(reduce_by(&c, s, e).0), reduce_by(&c, s, e).1)).collect();
                return Some(LocalSingularCertificate { m, a });
            }
        }
    }
    None
}

/// Cancels common factors of `c/sᵉ`.
fn reduce_by(c: &BigInt, s: &BigInt, mut e: u32) -> (BigInt, u32) {
    let mut c = c.clone();
    while e > 0 && s.abs() > BigInt::one() && c.is_multiple_of(s) {
        c /= s;
        e -= 1;
    }
    (c, e)
}

#[cfg(test)]
mod tests {
    use super::super::chains::elementary_ring_chain;
    use super::*;

    fn zz(n: i64) -> Elem {
        CompRing::Integers.from_int(n)
    }

    #[test]
    fn comaximality() {
        let z = CompRing::Integers;
        let c = is_comaximal(&z, &[zz(2), zz(3)]).unwrap();
        assert_eq!(z.add(&z.mul(&c[0], &zz(2)), &z.mul(&c[1], &zz(3))), zz(1));
        assert_eq!(is_comaximal(&z, &[zz(2), zz(4)]), None);
        let r = CompRing::parse("poly(QQ,[x])").unwrap();
        let x = r.var("x").unwrap();
        let c = is_comaximal(&r, &[x.clone(), r.sub(&r.one(), &x)]).unwrap();
        assert_eq!(c, vec![r.one(), r.one()]);
        let z12 = CompRing::integers_mod(12).unwrap();
        assert!(is_comaximal(&z12, &[z12.from_int(5)]).is_some());
        assert!(is_comaximal(&z12, &[z12.from_int(4), z12.from_int(6)]).is_none());
    }

    #[test]
    fn gluing_two_localizations() {
        let z = CompRing::Integers;
        let xs = [zz(6), zz(10)];
        let chain = elementary_ring_chain(&z, &xs);
        let half = LocalSingularCertificate {
            m: vec![0, 1],
            a: vec![(zz(-10), 0), (zz(1), 1)],
        };
        let third = LocalSingularCertificate {
            m: vec![0, 1],
            a: vec![(zz(-65), 2), (zz(1), 1)],
        };
        let locals = [half.to_chain_certificate(), third.to_chain_certificate()];
        let g = glue_collapses(&z, &[zz(2), zz(3)], &[zz(2), zz(-1)], &chain, &locals).unwrap();
        assert!(g.verify(&z, &chain).unwrap());
        assert!(glue_collapses(&z, &[zz(2), zz(3)], &[zz(1), zz(1)], &chain, &locals).is_err());
        let broken = LocalSingularCertificate {
            m: vec![0, 1],
            a: vec![(zz(-11), 0), (zz(1), 1)],
        };
        let locals = [broken.to_chain_certificate(), third.to_chain_certificate()];
        assert!(glue_collapses(&z, &[zz(2), zz(3)], &[zz(2), zz(-1)], &chain, &locals).is_err());
    }

    #[test]
    fn single_unit_passes_through() {
        let z = CompRing::Integers;
        let chain = elementary_ring_chain(&z, &[zz(6), zz(10)]);
        let global = LocalSingularCertificate {
            m: vec![0, 1],
            a: vec![(zz(-35), 0), (zz(2), 0)],
        };
        let g = glue_collapses(&z, &[zz(1)], &[zz(1)], &chain, &[global.to_chain_certificate()]).unwrap();
        assert_eq!(g.j_cofs[1], vec![zz(-35)]);
        assert_eq!(g.j_cofs[2], vec![zz(2)]);
    }

    #[test]
    fn local_integer_search() {
        let c = find_local_integer_certificate(&[5.into()], &5.into(), 2, 2).unwrap();
        assert_eq!(c.m, vec![0]);
        assert!(find_local_integer_certificate(&[5.into()], &2.into(), 2, 2).is_none());
    }
}
