//! Singular-sequence certificates.
//!
//! A certificate for `x₁ … xℓ` is a pair of lists `m`, `a` with
//! `x₁^{m₁}(x₂^{m₂}(⋯ xℓ^{mℓ}(1 + aℓxℓ) ⋯) + a₁x₁) = 0`. Expanded, this
//! reads `Pℓ + Σ aᵢ·Pᵢ·xᵢ = 0` with `Pᵢ = x₁^{m₁}⋯xᵢ^{mᵢ}`, which is linear
//! in the `aᵢ`; the finder solves that system exactly.

use super::chains::ChainCertificate;
use super::field::Field;
use super::linalg;
use super::poly::{Mono, Poly};
use super::ring::{CompRing, Elem};
use crate::error::{KrullError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularCertificate {
    pub m: Vec<u32>,
    pub a: Vec<Elem>,
}

#[derive(Serialize, Deserialize)]
struct CertJson {
    m: Vec<u32>,
    a: Vec<String>,
}

impl SingularCertificate {
    /// `{"m":[...],"a":["poly",...]}`.
    pub fn to_json(&self, ring: &CompRing) -> String {
        serde_json::to_string(&CertJson {
            m: self.m.clone(),
            a: self.a.iter().map(|e| ring.format(e)).collect(),
        })
        .expect("plain data")
    }

    pub fn from_json(ring: &CompRing, text: &str) -> Result<Self> {
        let raw: CertJson = serde_json::from_str(text).map_err(|e| KrullError::input(format!("certificate JSON: {e}")))?;
        let a = raw.a.iter().map(|s| ring.parse_elem(s)).collect::<Result<Vec<_>>>()?;
        Ok(SingularCertificate { m: raw.m, a })
    }

    /// The same identity as a collapse certificate of the elementary
    /// chain.
    pub fn to_chain_certificate(&self) -> ChainCertificate {
        let l = self.m.len();
        let mut u_exps: Vec<Vec<u32>> = self.m.iter().map(|&e| vec![e]).collect();
        u_exps.push(vec![0]);
        let mut j_cofs = vec![Vec::new()];
        j_cofs.extend(self.a.iter().map(|a| vec![a.clone()]));
        debug_assert_eq!(j_cofs.len(), l + 1);
        ChainCertificate { u_exps, j_cofs }
    }
}

/// `P₁ … Pℓ` for the exponents `m`.
fn prefix_products(ring: &CompRing, xs: &[Elem], m: &[u32]) -> Vec<Elem> {
    let mut out = Vec::with_capacity(xs.len());
    let mut acc = ring.one();
    for (x, &e) in xs.iter().zip(m) {
        acc = ring.mul(&acc, &ring.pow(x, e));
        out.push(acc.clone());
    }
    out
}

/// The nested expression of the certificate, expanded.
pub fn evaluate_singular_certificate(ring: &CompRing, xs: &[Elem], cert: &SingularCertificate) -> Result<Elem> {
    if cert.m.len() != xs.len() || cert.a.len() != xs.len() {
        return Err(KrullError::input(format!(
            "certificate has {} exponents and {} cofactors for a sequence of length {}",
            cert.m.len(),
            cert.a.len(),
            xs.len()
        )));
    }
    if let Some(bad) = cert.a.iter().find(|a| !ring.owns(a)) {
        return Err(KrullError::input(format!("cofactor {} is not an element of {ring}", ring.format(bad))));
    }
    let mut v = ring.one();
    for i in (0..xs.len()).rev() {
        let inner = if i + 1 == xs.len() {
            ring.add(&ring.one(), &ring.mul(&cert.a[i], &xs[i]))
        } else {
            ring.add(&v, &ring.mul(&cert.a[i], &xs[i]))
        };
        v = ring.mul(&ring.pow(&xs[i], cert.m[i]), &inner);
    }
    Ok(v)
}

pub fn verify_singular_certificate(ring: &CompRing, xs: &[Elem], cert: &SingularCertificate) -> Result<bool> {
    Ok(ring.is_zero(&evaluate_singular_certificate(ring, xs, cert)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertBounds {
    pub max_exponent: u32,
    /// Cofactor degree; ignored for `ℤ` and `ℤ/n`.
    pub max_degree: u32,
}

impl Default for CertBounds {
    fn default() -> Self {
        CertBounds {
            max_exponent: 3,
            max_degree: 3,
        }
    }
}

/// Exponent tuples with entries `≤ max`, by total then lexicographically.
pub(crate) fn exponent_tuples(len: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=max).map(move |e| {
                    let mut t = t.clone();
                    t.push(e);
                    t
                })
            })
            .collect();
    }
    out.sort_by_key(|t| (t.iter().sum::<u32>(), t.clone()));
    out
}

/// Monomials in `n` variables of total degree `≤ d`, by degree then
/// lexicographically.
pub(crate) fn monomials_up_to(n: usize, d: u32) -> Vec<Mono> {
    let mut out: Vec<Mono> = exponent_tuples(n, d).into_iter().filter(|m| m.iter().sum::<u32>() <= d).collect();
    out.sort_by_key(|m| (m.iter().sum::<u32>(), m.clone()));
    out
}

/// Cofactors `c` with `Σ cᵢvᵢ = g = gcd(v)`.
pub(crate) fn extended_gcd(vs: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coefs: Vec<BigInt> = Vec::with_capacity(vs.len());
    for v in vs {
        let e = g.extended_gcd(v);
        for c in coefs.iter_mut() {
            *c *= &e.x;
        }
        coefs.push(e.y);
        g = e.gcd;
    }
    (g, coefs)
}

/// Integer solution of `Σ aᵢvᵢ = rhs`, if any.
pub(crate) fn solve_linear_diophantine(vs: &[BigInt], rhs: &BigInt) -> Option<Vec<BigInt>> {
    let (g, coefs) = extended_gcd(vs);
    if g.is_zero() {
        return rhs.is_zero().then(|| vec![BigInt::zero(); vs.len()]);
    }
    let (q, r) = rhs.div_rem(&g);
    r.is_zero().then(|| coefs.into_iter().map(|c| c * &q).collect())
}

fn find_integer(ring: &CompRing, xs: &[Elem], max_exp: u32) -> Option<SingularCertificate> {
    let modulus = match ring {
        CompRing::IntegersMod(n) => Some(n.clone()),
        _ => None,
    };
    for m in exponent_tuples(xs.len(), max_exp) {
        let ps = prefix_products(ring, xs, &m);
        let mut vs: Vec<BigInt> = ps.iter().zip(xs).map(|(p, x)| ring.mul(p, x).as_int().clone()).collect();
        vs.extend(modulus.iter().cloned());
        let rhs = match ps.last() {
            Some(p) => -p.as_int().clone(),
            None => BigInt::from(-1),
        };
        if let Some(sol) = solve_linear_diophantine(&vs, &rhs) {
            let a = sol.into_iter().take(xs.len()).map(|c| ring.from_int(c)).collect();
            return Some(SingularCertificate { m, a });
        }
    }
    None
}

fn find_over_field(ring: &CompRing, field: &Field, xs: &[Elem], bounds: CertBounds) -> Option<SingularCertificate> {
    let nvars = ring.vars().len();
    let l = xs.len();
    for m in exponent_tuples(l, bounds.max_exponent) {
        let ps = prefix_products(ring, xs, &m);
        let cols_base: Vec<Elem> = ps.iter().zip(xs).map(|(p, x)| ring.mul(p, x)).collect();
        let rhs = ring.neg(ps.last().unwrap_or(&ring.one()));
        for d in 0..=bounds.max_degree {
            let monos = monomials_up_to(nvars, d);
            let mut columns: Vec<Poly> = Vec::with_capacity(l * monos.len());
            for base in &cols_base {
                for mu in &monos {
                    let shift = ring.from_poly(Poly::monomial(mu.clone(), BigRational::one()));
                    columns.push(ring.mul(&shift, base).as_poly().clone());
                }
            }
            let mut row_of: HashMap<Mono, usize> = HashMap::new();
            for p in columns.iter().chain(std::iter::once(rhs.as_poly())) {
                for (mono, _) in p.terms() {
                    let next = row_of.len();
                    row_of.entry(mono.clone()).or_insert(next);
                }
            }
            let mut a = vec![vec![BigRational::zero(); columns.len()]; row_of.len()];
            for (c, p) in columns.iter().enumerate() {
                for (mono, coef) in p.terms() {
                    a[row_of[mono]][c] = coef.clone();
                }
            }
            let mut b = vec![BigRational::zero(); row_of.len()];
            for (mono, coef) in rhs.as_poly().terms() {
                b[row_of[mono]] = coef.clone();
            }
            if let Some(sol) = linalg::solve(field, &a, &b, columns.len()) {
                let a = (0..l)
                    .map(|i| {
                        let terms = monos
                            .iter()
                            .enumerate()
                            .map(|(k, mu)| (mu.clone(), sol[i * monos.len() + k].clone()));
                        ring.from_poly(Poly::from_terms(nvars, terms, field))
                    })
                    .collect();
                return Some(SingularCertificate { m, a });
            }
        }
    }
    None
}

/// First certificate within bounds, exponent tuples by total then
/// lexicographically and cofactor degree from 0 upward. `None` means
/// nothing was found within the bounds, not that the sequence is
/// pseudo-regular. Over `ℤ` and `ℤ/n` the cofactors are found by
/// extended gcd and only the exponent bound applies.
pub fn find_singular_certificate(ring: &CompRing, xs: &[Elem], bounds: CertBounds) -> Result<Option<SingularCertificate>> {
    let cert = match ring.field() {
        Some(f) => find_over_field(ring, &f.clone(), xs, bounds),
        None => find_integer(ring, xs, bounds.max_exponent),
    };
    if let Some(c) = &cert {
        if !verify_singular_certificate(ring, xs, c)? {
            return Err(KrullError::contract("solver produced a certificate that does not verify"));
        }
    }
    Ok(cert)
}

/// Certificate from an algebraic relation `Q(y₁ … yℓ) = 0`.
///
/// With `Y^m` the lexicographically least monomial of `Q` scaled to
/// coefficient 1, every other monomial first exceeds `m` at some index
/// `j`, so `Q = Y^m + Σⱼ Y₁^{m₁}⋯Yⱼ^{mⱼ+1}·Rⱼ`, and `aⱼ = Rⱼ(y)`.
pub fn collapse_from_dependence(ring: &CompRing, ys: &[Elem], q: &Poly) -> Result<SingularCertificate> {
    if q.is_zero() {
        return Err(KrullError::contract("the zero polynomial is not a dependence relation"));
    }
    if !ring.is_zero(&ring.eval(q, ys)?) {
        return Err(KrullError::contract("Q(y) ≠ 0"));
    }
    let field = ring.field().cloned().unwrap_or(Field::Rationals);
    let l = ys.len();
    let mut terms = q.terms();
    let (m, lead) = terms.next().expect("nonzero");
    let m = m.clone();
    let inv = field.inv(lead);
    let mut r: Vec<Vec<(Mono, BigRational)>> = vec![Vec::new(); l];
    for (mono, c) in terms {
        let j = (0..l).find(|&i| mono[i] != m[i]).expect("distinct monomials");
        debug_assert!(mono[j] > m[j]);
        let mut e = vec![0; l];
        e[j] = mono[j] - m[j] - 1;
        e[j + 1..].copy_from_slice(&mono[j + 1..]);
        r[j].push((e, field.mul(c, &inv)));
    }
    let a = r
        .into_iter()
        .map(|terms| ring.eval(&Poly::from_terms(l, terms, &field), ys))
        .collect::<Result<Vec<_>>>()?;
    let cert = SingularCertificate { m, a };
    if !verify_singular_certificate(ring, ys, &cert)? {
        return Err(KrullError::contract("dependence relation did not yield a valid certificate"));
    }
    Ok(cert)
}

/// A nonzero `Q` with `Q(ys) = 0`, searching total degree `1 … max_degree`.
pub fn find_dependence(ring: &CompRing, ys: &[Elem], max_degree: u32) -> Result<Option<Poly>> {
    let field = ring
        .field()
        .cloned()
        .ok_or_else(|| KrullError::unsupported(format!("dependence search needs a coefficient field, not {ring}")))?;
    let l = ys.len();
    let mut cache: HashMap<Mono, Poly> = HashMap::new();
    for d in 1..=max_degree {
        let monos = monomials_up_to(l, d);
        for mu in &monos {
            if !cache.contains_key(mu) {
                let v = ring.eval(&Poly::monomial(mu.clone(), BigRational::one()), ys)?;
                cache.insert(mu.clone(), v.as_poly().clone());
            }
        }
        let columns: Vec<&Poly> = monos.iter().map(|mu| &cache[mu]).collect();
        let mut row_of: HashMap<&Mono, usize> = HashMap::new();
        for p in &columns {
            for (mono, _) in p.terms() {
                let next = row_of.len();
                row_of.entry(mono).or_insert(next);
            }
        }
        let mut a = vec![vec![BigRational::zero(); columns.len()]; row_of.len()];
        for (c, p) in columns.iter().enumerate() {
            for (mono, coef) in p.terms() {
                a[row_of[mono]][c] = coef.clone();
            }
        }
        if let Some(v) = linalg::kernel_vector(&field, &a, columns.len()) {
            return Ok(Some(Poly::from_terms(l, monos.into_iter().zip(v), &field)));
        }
    }
    Ok(None)
}
