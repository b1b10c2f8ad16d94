//! Buchberger's algorithm with reduced output.
//!
//! Internally a polynomial is a vector of terms sorted by decreasing
//! monomial under the active order. Pairs are treated smallest lcm first;
//! the product and chain criteria skip pairs that are known to reduce to
//! zero.

use super::field::Field;
use super::poly::{Mono, Poly};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonoOrder {
    Lex,
    #[default]
    GrevLex,
    /// Grevlex on the first `k` variables, ties broken by grevlex on the
    /// rest. Eliminates the first block.
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

impl MonoOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonoOrder::Lex => a.cmp(b),
            MonoOrder::GrevLex => grevlex(a, b),
            MonoOrder::Block(k) => grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..])),
        }
    }
}

type Terms = Vec<(Mono, BigRational)>;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quot(b: &[u32], a: &[u32]) -> Mono {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

struct Engine<'a> {
    field: &'a Field,
    order: MonoOrder,
}

impl Engine<'_> {
    fn sorted(&self, p: &Poly) -> Terms {
        let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        t.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        t
    }

    fn to_poly(&self, nvars: usize, t: Terms) -> Poly {
        Poly::from_terms(nvars, t, self.field)
    }

    fn monic(&self, mut t: Terms) -> Terms {
        if let Some((_, lc)) = t.first() {
            if !lc.is_one() {
                let inv = self.field.inv(lc);
                for (_, c) in t.iter_mut() {
                    *c = self.field.mul(c, &inv);
                }
            }
        }
        t
    }

    /// `p − c·X^shift·g`, merging two sorted term lists.
    fn sub_mul(&self, p: &[(Mono, BigRational)], c: &BigRational, shift: &[u32], g: &[(Mono, BigRational)]) -> Terms {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let mut i = 0;
        let mut gi = g.iter().map(|(m, d)| {
            let m: Mono = m.iter().zip(shift).map(|(a, b)| a + b).collect();
            (m, self.field.neg(&self.field.mul(c, d)))
        });
        let mut next = gi.next();
        while i < p.len() || next.is_some() {
            match (p.get(i), &next) {
                (Some(a), Some(b)) => match self.order.cmp(&a.0, &b.0) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(next.take().expect("checked"));
                        next = gi.next();
                    }
                    Ordering::Equal => {
                        let s = self.field.add(&a.1, &b.1);
                        if !s.is_zero() {
                            out.push((a.0.clone(), s));
                        }
                        i += 1;
                        next = gi.next();
                    }
                },
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(next.take().expect("checked"));
                    next = gi.next();
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    /// Full reduction by a list of monic polynomials.
    fn reduce(&self, f: Terms, basis: &[Terms]) -> Terms {
        let mut p = f;
        let mut start = 0;
        let mut rem = Vec::new();
        while start < p.len() {
            let (m, c) = p[start].clone();
            match basis.iter().find(|g| divides(&g[0].0, &m)) {
                Some(g) => {
                    let shift = quot(&m, &g[0].0);
                    let coef = self.field.div(&c, &g[0].1);
                    p = self.sub_mul(&p[start..], &coef, &shift, g);
                    start = 0;
                }
                None => {
                    rem.push((m, c));
                    start += 1;
                }
            }
        }
        rem
    }

    /// Reduction that also records the multiple of each basis element
    /// that was subtracted.
    fn reduce_tracked(&self, f: Terms, basis: &[Terms]) -> (Terms, Vec<Terms>) {
        let mut p = f;
        let mut start = 0;
        let mut rem = Vec::new();
        let mut qs: Vec<Terms> = vec![Vec::new(); basis.len()];
        while start < p.len() {
            let (m, c) = p[start].clone();
            match basis.iter().position(|g| divides(&g[0].0, &m)) {
                Some(k) => {
                    let g = &basis[k];
                    let shift = quot(&m, &g[0].0);
                    let coef = self.field.div(&c, &g[0].1);
                    p = self.sub_mul(&p[start..], &coef, &shift, g);
                    start = 0;
                    let one = vec![(vec![0; m.len()], BigRational::one())];
                    qs[k] = self.sub_mul(&qs[k], &self.field.neg(&coef), &shift, &one);
                }
                None => {
                    rem.push((m, c));
                    start += 1;
                }
            }
        }
        (rem, qs)
    }

    fn s_poly(&self, f: &Terms, g: &Terms) -> Terms {
        let l = lcm(&f[0].0, &g[0].0);
        let sf = quot(&l, &f[0].0);
        let sg = quot(&l, &g[0].0);
        let cf = self.field.inv(&f[0].1);
        let cg = self.field.inv(&g[0].1);
        let a = self.sub_mul(&[], &self.field.neg(&cf), &sf, f);
        self.sub_mul(&a, &cg, &sg, g)
    }

    fn mul_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut acc: Terms = Vec::new();
        for (m, c) in a {
            acc = self.sub_mul(&acc, &self.field.neg(c), m, b);
        }
        acc
    }

    /// Pair loop shared by the plain and tracked variants. `on_spoly`
    /// reduces the S-polynomial of a pair and returns a new basis element
    /// when the remainder is nonzero. Stops once a constant appears.
    fn buchberger_core(&self, g: &mut Vec<Terms>, mut on_spoly: impl FnMut(&Self, &[Terms], usize, usize) -> Option<Terms>) {
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for j in 0..g.len() {
            for i in 0..j {
                pairs.insert((i, j));
            }
        }
        while let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
            let la = lcm(&g[a.0][0].0, &g[a.1][0].0);
            let lb = lcm(&g[b.0][0].0, &g[b.1][0].0);
            self.order.cmp(&la, &lb).then(a.cmp(b))
        }) {
            pairs.remove(&(i, j));
            if coprime(&g[i][0].0, &g[j][0].0) {
                continue;
            }
            let l = lcm(&g[i][0].0, &g[j][0].0);
            let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
            let chain = (0..g.len()).any(|k| {
                k != i
                    && k != j
                    && divides(&g[k][0].0, &l)
                    && !pairs.contains(&key(i, k))
                    && !pairs.contains(&key(j, k))
            });
            if chain {
                continue;
            }
            if let Some(h) = on_spoly(self, g, i, j) {
                let n = g.len();
                g.push(h);
                for k in 0..n {
                    pairs.insert((k, n));
                }
                if g[n][0].0.iter().all(|&e| e == 0) {
                    return;
                }
            }
        }
    }

    fn buchberger(&self, gens: Vec<Terms>) -> Vec<Terms> {
        let mut g: Vec<Terms> = Vec::new();
        for f in gens {
            let r = self.reduce(f, &g);
            if !r.is_empty() {
                g.push(self.monic(r));
            }
        }
        if !g.iter().any(|p| p[0].0.iter().all(|&e| e == 0)) {
            self.buchberger_core(&mut g, |eng, g, i, j| {
            let s = eng.s_poly(&g[i], &g[j]);
            let r = eng.reduce(s, g);
                (!r.is_empty()).then(|| eng.monic(r))
            });
        }
        self.reduced(g)
    }

    fn reduced(&self, g: Vec<Terms>) -> Vec<Terms> {
        if let Some(one) = g.iter().find(|p| p[0].0.iter().all(|&e| e == 0)) {
            return vec![vec![(one[0].0.clone(), BigRational::one())]];
        }
        let mut min: Vec<Terms> = Vec::new();
        for (i, p) in g.iter().enumerate() {
            let dominated = g.iter().enumerate().any(|(k, q)| {
                k != i && divides(&q[0].0, &p[0].0) && (q[0].0 != p[0].0 || k < i)
            });
            if !dominated {
                min.push(p.clone());
            }
        }
        let mut out = Vec::with_capacity(min.len());
        for i in 0..min.len() {
            let others: Vec<Terms> = min.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
            let head = vec![min[i][0].clone()];
            let tail = self.reduce(min[i][1..].to_vec(), &others);
            let mut p = head;
            p.extend(tail);
            out.push(self.monic(p));
        }
        out.sort_by(|a, b| self.order.cmp(&b[0].0, &a[0].0));
        out
    }
}

/// A reduced Gröbner basis together with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: Field,
    nvars: usize,
    order: MonoOrder,
    basis: Vec<Poly>,
}

impl GroebnerBasis {
    pub fn compute(field: &Field, nvars: usize, gens: &[Poly], order: MonoOrder) -> Self {
        let eng = Engine { field, order };
        let terms: Vec<Terms> = gens.iter().filter(|p| !p.is_zero()).map(|p| eng.sorted(p)).collect();
        let basis = if terms.is_empty() { Vec::new() } else { eng.buchberger(terms) };
        GroebnerBasis {
            field: field.clone(),
            nvars,
            order,
            basis: basis.into_iter().map(|t| eng.to_poly(nvars, t)).collect(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonoOrder {
        self.order
    }

    /// Sorted by decreasing leading monomial.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    fn engine(&self) -> Engine<'_> {
        Engine {
            field: &self.field,
            order: self.order,
        }
    }

    fn basis_terms(&self) -> Vec<Terms> {
        let eng = self.engine();
        self.basis.iter().map(|p| eng.sorted(p)).collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        let eng = self.engine();
        let r = eng.reduce(eng.sorted(f), &self.basis_terms());
        eng.to_poly(self.nvars, r)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|p| p.as_constant().is_some_and(|c| !c.is_zero()))
    }

    pub fn leading_monomial(&self, p: &Poly) -> Option<Mono> {
        self.engine().sorted(p).into_iter().next().map(|t| t.0)
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let eng = self.engine();
        let g = self.basis_terms();
        (0..g.len()).all(|j| (0..j).all(|i| eng.reduce(eng.s_poly(&g[i], &g[j]), &g).is_empty()))
    }

    /// Monic, and no term of any element is divisible by the leading
    /// monomial of another.
    pub fn is_reduced(&self) -> bool {
        let g = self.basis_terms();
        g.iter().enumerate().all(|(i, p)| {
            p[0].1.is_one()
                && g.iter()
                    .enumerate()
                    .all(|(k, q)| k == i || p.iter().all(|(m, _)| !divides(&q[0].0, m)))
        })
    }
}

/// Cofactors `c` with `Σ cᵢ·gensᵢ = 1`, or `None` when the generators do
/// not generate the unit ideal.
pub fn lift_one(field: &Field, nvars: usize, gens: &[Poly]) -> Option<Vec<Poly>> {
    let eng = Engine {
        field,
        order: MonoOrder::GrevLex,
    };
    let n = gens.len();
    let mut g: Vec<Terms> = Vec::new();
    let mut cofs: Vec<Vec<Terms>> = Vec::new();
    let one_at = |k: usize| -> Vec<Terms> {
        (0..n)
            .map(|i| if i == k { vec![(vec![0; nvars], BigRational::one())] } else { Vec::new() })
            .collect()
    };
    let combine = |eng: &Engine, base: Vec<Terms>, qs: &[Terms], cofs: &[Vec<Terms>]| -> Vec<Terms> {
        let mut out = base;
        for (k, q) in qs.iter().enumerate() {
            if q.is_empty() {
                continue;
            }
            let prod: Vec<Terms> = cofs[k].iter().map(|c| eng.mul_terms(q, c)).collect();
            for (o, p) in out.iter_mut().zip(prod) {
                *o = eng.sub_mul(o, &BigRational::one(), &vec![0; nvars], &p);
            }
        }
        out
    };
    for (k, f) in gens.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let (r, qs) = eng.reduce_tracked(eng.sorted(f), &g);
        if r.is_empty() {
            continue;
        }
        let c = combine(&eng, one_at(k), &qs, &cofs);
        g.push(r);
        cofs.push(c);
    }
    let constant = |p: &Terms| p[0].0.iter().all(|&e| e == 0);
    if !g.iter().any(constant) {
        let mut cofs_cell = std::mem::take(&mut cofs);
        eng.buchberger_core(&mut g, |eng, g, i, j| {
            let (fi, fj) = (&g[i], &g[j]);
            let l = lcm(&fi[0].0, &fj[0].0);
            let (si, sj) = (quot(&l, &fi[0].0), quot(&l, &fj[0].0));
            let (ci, cj) = (eng.field.inv(&fi[0].1), eng.field.inv(&fj[0].1));
            let s = eng.s_poly(fi, fj);
            let (r, qs) = eng.reduce_tracked(s, g);
            if r.is_empty() {
                return None;
            }
            let base: Vec<Terms> = (0..n)
                .map(|t| {
                    let a = eng.sub_mul(&[], &eng.field.neg(&ci), &si, &cofs_cell[i][t]);
                    eng.sub_mul(&a, &cj, &sj, &cofs_cell[j][t])
                })
                .collect();
            let c = combine(eng, base, &qs, &cofs_cell);
            cofs_cell.push(c);
            Some(r)
        });
        cofs = cofs_cell;
    }
    let k = g.iter().position(constant)?;
    let inv = field.inv(&g[k][0].1);
    Some(
        cofs[k]
            .iter()
            .map(|t| eng.to_poly(nvars, t.clone()).scale(&inv, field))
            .collect(),
    )
}
