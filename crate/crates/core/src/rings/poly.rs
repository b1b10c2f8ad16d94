//! Sparse multivariate polynomials over a [`Field`].
//!
//! A polynomial is a map from exponent vectors to nonzero coefficients.
//! The map is the canonical form, so derived equality is equality of
//! polynomials. Arithmetic takes the field explicitly.

use super::field::Field;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type Mono = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Mono, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// `c` must already be a canonical coefficient.
    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, BigRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Poly::monomial(m, BigRational::one())
    }

    pub fn monomial(m: Mono, c: BigRational) -> Self {
        let mut p = Poly::zero(m.len());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sums repeated monomials and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, BigRational)>, f: &Field) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial width");
            p.add_term(m, &c, f);
        }
        p
    }

    fn add_term(&mut self, m: Mono, c: &BigRational, f: &Field) {
        let c = f.norm(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = f.add(e.get(), &c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn add(&self, o: &Poly, f: &Field) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c, f);
        }
        r
    }

    pub fn sub(&self, o: &Poly, f: &Field) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), &f.neg(c), f);
        }
        r
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational, f: &Field) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (m, d) in &self.terms {
            r.add_term(m.clone(), &f.mul(c, d), f);
        }
        r
    }

    pub fn mul(&self, o: &Poly, f: &Field) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                r.add_term(m, &(c1 * c2), f);
            }
        }
        r
    }

    pub fn pow(&self, mut e: u32, f: &Field) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    /// Inserts `k` new variables in front, all with exponent zero.
    pub fn extend_front(&self, k: usize) -> Poly {
        Poly {
            nvars: self.nvars + k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; k];
                    e.extend_from_slice(m);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Drops the first `k` variables if none of them occurs.
    pub fn drop_front(&self, k: usize) -> Option<Poly> {
        if self.terms.keys().any(|m| m[..k].iter().any(|&e| e != 0)) {
            return None;
        }
        Some(Poly {
            nvars: self.nvars - k,
            terms: self.terms.iter().map(|(m, c)| (m[k..].to_vec(), c.clone())).collect(),
        })
    }

    pub fn mentions_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m[i] != 0)
    }

    /// Human-readable form, highest lexicographic term first.
    pub fn format(&self, vars: &[String], f: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = f.is_negative_repr(c);
            let abs = if neg { f.neg(c) } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { vars[v].clone() } else { format!("{}^{e}", vars[v]) })
                .collect();
            let coeff = f.format(&abs);
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if abs.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&coeff);
                out.push('*');
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}
