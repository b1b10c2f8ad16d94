//! Joyal's Krull lattices `Krℓ(T)`.
//!
//! `Krℓ(T)` is generated by `ℓ + 1` copies `φ₀(T) ≥ ⋯ ≥ φℓ(T)` of the base
//! lattice. A tagged sequent `⋀ᵢφᵢ(Aᵢ) ⊢ ⋁ᵢφᵢ(Bᵢ)` holds iff the ladder
//! `u₁,A₀ ⊢ B₀; u₂,A₁ ⊢ B₁,u₁; …; Aℓ ⊢ Bℓ,uℓ` is solvable in the base.
//! For small bases the lattice is materialized: its points are found by
//! extending partial truth assignments of the tagged irreducibles, which
//! never backtracks into a dead end because the relation satisfies cut.

use crate::bits::Bits;
use crate::error::{KrullError, Result};
use crate::finlat::{Element, FinLattice};
use crate::primes_chains::greedy_ladder;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaggedElement {
    pub level: usize,
    pub elem: Element,
}

/// Solves the ladder for `A₀…Aℓ ⊢ B₀…Bℓ`. Returns `u₁ … uℓ` on success.
pub fn kr_entails(base: &FinLattice, a: &[Vec<Element>], b: &[Vec<Element>]) -> Result<Option<Vec<Element>>> {
    if a.is_empty() || a.len() != b.len() {
        return Err(KrullError::input("tagged sequent needs one slot per level on both sides"));
    }
    let us: Vec<Element> = a.iter().map(|s| base.meet_all(s)).collect();
    let js: Vec<Element> = b.iter().map(|s| base.join_all(s)).collect();
    let (xs, ok) = greedy_ladder(base, &us, &js);
    Ok(ok.then_some(xs))
}

/// Same question by trying every `u`-tuple; for cross-checks.
pub fn kr_entails_exhaustive(base: &FinLattice, a: &[Vec<Element>], b: &[Vec<Element>], cap: usize) -> Result<bool> {
    use crate::primes_chains::{chain_collapses_exhaustive, IdealisticChain, IdealisticPrime};
    if a.is_empty() || a.len() != b.len() {
        return Err(KrullError::input("tagged sequent needs one slot per level on both sides"));
    }
    let c = IdealisticChain::new(
        a.iter()
            .zip(b)
            .map(|(u, j)| IdealisticPrime::new(j.clone(), u.clone()))
            .collect(),
    );
    Ok(chain_collapses_exhaustive(base, &c, cap)?.is_some())
}

/// Tagged form of [`kr_entails`] for order `ell`.
pub fn kr_entails_tagged(
    base: &FinLattice,
    ell: usize,
    lhs: &[TaggedElement],
    rhs: &[TaggedElement],
) -> Result<Option<Vec<Element>>> {
    let mut a = vec![Vec::new(); ell + 1];
    let mut b = vec![Vec::new(); ell + 1];
    for (side, items) in [(&mut a, lhs), (&mut b, rhs)] {
        for t in items {
            if t.level > ell {
                return Err(KrullError::input(format!("tag {} out of range 0..={ell}", t.level)));
            }
            side[t.level].push(t.elem.clone());
        }
    }
    kr_entails(base, &a, &b)
}

/// Materialization limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KrLimits {
    pub max_irreducibles: usize,
    pub max_order: usize,
    pub max_points: usize,
}

impl Default for KrLimits {
    fn default() -> Self {
        KrLimits {
            max_irreducibles: 4,
            max_order: 2,
            max_points: 4096,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KrullLattice {
    pub base: FinLattice,
    pub order: usize,
    /// Generators are the tagged irreducibles; generator `i·n + p` is `φᵢ(↓p)`.
    pub materialized: FinLattice,
}

impl KrullLattice {
    fn gen(&self, level: usize, p: usize) -> &Element {
        &self.materialized.generators()[level * self.base.num_points() + p].1
    }

    /// `φᵢ(a)`, the join of the copies of the irreducibles below `a`.
    pub fn phi(&self, level: usize, a: &Element) -> Element {
        let parts: Vec<&Element> = a.bits().iter().map(|p| self.gen(level, p)).collect();
        self.materialized.join_all(parts)
    }

    /// For a point of the materialized lattice, the base point `rₖ` at each
    /// level whose prime is `{a : φₖ(a) misses the point}`; `None` at a
    /// level where that set is not of this form.
    pub fn point_to_prime_tuple(&self, q: usize) -> Vec<Option<usize>> {
        let n = self.base.num_points();
        (0..=self.order)
            .map(|k| {
                let truth = Bits::from_indices(n, (0..n).filter(|&p| self.gen(k, p).bits().contains(q)));
                (0..n).find(|&r| *self.base.base().above(r) == truth)
            })
            .collect()
    }
}

/// Materializes `Krℓ(base)`.
pub fn kr_lattice(base: &FinLattice, ell: usize, limits: &KrLimits) -> Result<KrullLattice> {
    let n = base.num_points();
    if n > limits.max_irreducibles || ell > limits.max_order {
        return Err(KrullError::resource(format!(
            "Kr materialization limited to {} irreducibles and order {}",
            limits.max_irreducibles, limits.max_order
        )));
    }
    let irr = base.irreducibles();
    let total = n * (ell + 1);
    let names: Vec<String> = (0..=ell)
        .flat_map(|i| base.base().names().iter().map(move |p| format!("{p}@{i}")))
        .collect();
    // entailment oracle on tagged generator sets
    let oracle = |t: &Bits, f: &Bits| -> bool {
        let mut a = vec![Vec::new(); ell + 1];
        let mut b = vec![Vec::new(); ell + 1];
        for g in t.iter() {
            a[g / n].push(irr[g % n].clone());
        }
        for g in f.iter() {
            b[g / n].push(irr[g % n].clone());
        }
        kr_entails(base, &a, &b).expect("well-formed").is_some()
    };
    let points = models_from_oracle(total, oracle, limits.max_points)?;
    let materialized = FinLattice::from_valuations(names, points);
    Ok(KrullLattice {
        base: base.clone(),
        order: ell,
        materialized,
    })
}

/// All total assignments `v` with `¬(v ⊢ ¬v)`, by extending partial
/// assignments `(true, false)` only while `¬(true ⊢ false)`.
pub fn models_from_oracle(n: usize, oracle: impl Fn(&Bits, &Bits) -> bool, cap: usize) -> Result<Vec<Bits>> {
    let mut out = Vec::new();
    let mut t = Bits::zeros(n);
    let mut f = Bits::zeros(n);
    if oracle(&t, &f) {
        return Ok(out);
    }
    fn go(
        g: usize,
        n: usize,
        t: &mut Bits,
        f: &mut Bits,
        oracle: &dyn Fn(&Bits, &Bits) -> bool,
        out: &mut Vec<Bits>,
        cap: usize,
    ) -> Result<()> {
        if g == n {
            if out.len() >= cap {
                return Err(KrullError::resource(format!("more than {cap} points")));
            }
            out.push(t.clone());
            return Ok(());
        }
        f.insert(g);
        if !oracle(t, f) {
            go(g + 1, n, t, f, oracle, out, cap)?;
        }
        f.remove(g);
        t.insert(g);
        if !oracle(t, f) {
            go(g + 1, n, t, f, oracle, out, cap)?;
        }
        t.remove(g);
        Ok(())
    }
    go(0, n, &mut t, &mut f, &oracle, &mut out, cap)?;
    Ok(out)
}

/// Injectivity of `σ = (σ₀ … σℓ) : Krℓ₊₁ → Krℓ^{ℓ+1}`, where `σᵢ` sends
/// `φⱼ` to `φⱼ` for `j ≤ i` and to `φⱼ₋₁` for `j > i`. The tuple map is
/// injective iff the dual point maps jointly cover the points of `Krℓ₊₁`.
/// With `ℓ = -1` the target is the one-element lattice.
pub fn joyal_sigma_injective(base: &FinLattice, ell: isize, limits: &KrLimits) -> Result<bool> {
    if ell < -1 {
        return Err(KrullError::input("dimension bound below -1"));
    }
    if ell == -1 {
        return Ok(base.is_trivial());
    }
    let ell = ell as usize;
    let big = kr_lattice(base, ell + 1, limits)?;
    let small = kr_lattice(base, ell, limits)?;
    let n = base.num_points();
    let lookup = big
        .materialized
        .points_by_valuation()
        .ok_or_else(|| KrullError::contract("tagged generators do not separate points"))?;
    let mut covered = vec![false; big.materialized.num_points()];
    for q in 0..small.materialized.num_points() {
        let val = small.materialized.point_valuation(q);
        for i in 0..=ell {
            let pulled = Bits::from_indices(
                n * (ell + 2),
                (0..=ell + 1).flat_map(|j| {
                    let src = if j <= i { j } else { j - 1 };
                    let val = &val;
                    (0..n).filter(move |&p| val.contains(src * n + p)).map(move |p| j * n + p)
                }),
            );
            let p = lookup
                .get(&pulled)
                .ok_or_else(|| KrullError::contract("σ does not respect the Krull relations"))?;
            covered[*p] = true;
        }
    }
    Ok(covered.into_iter().all(|c| c))
}

/// `dim ≤ ℓ` iff `φ₀(x₁),…,φℓ(xℓ₊₁) ⊢ φ₁(x₁),…,φℓ₊₁(xℓ₊₁)` in `Krℓ₊₁` for
/// all irreducibles `x₁ … xℓ₊₁`.
pub fn def_a_dim_leq(base: &FinLattice, ell: isize) -> Result<bool> {
    if ell < -1 {
        return Err(KrullError::input("dimension bound below -1"));
    }
    let len = (ell + 1) as usize;
    let irr = base.irreducibles();
    if len > 0 && irr.is_empty() {
        return Ok(true);
    }
    let mut idx = vec![0usize; len];
    loop {
        let mut a = vec![Vec::new(); len + 1];
        let mut b = vec![Vec::new(); len + 1];
        for (k, &i) in idx.iter().enumerate() {
            a[k].push(irr[i].clone());
            b[k + 1].push(irr[i].clone());
        }
        if kr_entails(base, &a, &b)?.is_none() {
            return Ok(false);
        }
        let mut k = len;
        loop {
            if k == 0 {
                return Ok(true);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < irr.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Monotone `(ℓ+1)`-tuples of base points, i.e. chains of primes.
pub fn monotone_tuples(base: &FinLattice, ell: usize) -> Vec<Vec<usize>> {
    let n = base.num_points();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(base: &FinLattice, n: usize, ell: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == ell + 1 {
            out.push(cur.clone());
            return;
        }
        for p in 0..n {
            if cur.last().is_none_or(|&q| base.base().leq(q, p)) {
                cur.push(p);
                go(base, n, ell, cur, out);
                cur.pop();
            }
        }
    }
    go(base, n, ell, &mut cur, &mut out);
    out
}

/// Tabulates every `φᵢ` on the base elements.
pub fn phi_tables(k: &KrullLattice, cap: usize) -> Result<Vec<HashMap<Element, Element>>> {
    let elems = k.base.elements(cap)?;
    Ok((0..=k.order)
        .map(|i| elems.iter().map(|a| (a.clone(), k.phi(i, a))).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(l: &FinLattice, idx: &[usize]) -> Element {
        l.element(Bits::from_indices(l.num_points(), idx.iter().copied())).unwrap()
    }

    #[test]
    fn tagged_entailment_on_the_three_chain() {
        let l = FinLattice::chain(3);
        let m = el(&l, &[0]);
        let t = |level, e: &Element| TaggedElement { level, elem: e.clone() };
        // φ₀ ≥ φ₁
        assert!(kr_entails_tagged(&l, 1, &[t(1, &m)], &[t(0, &m)]).unwrap().is_some());
        assert!(kr_entails_tagged(&l, 1, &[t(0, &m)], &[t(1, &m)]).unwrap().is_none());
        assert!(kr_entails_tagged(&l, 1, &[t(0, &l.top())], &[]).unwrap().is_none());
        assert!(kr_entails_tagged(&l, 1, &[t(2, &m)], &[]).is_err());
    }

    #[test]
    fn materialized_examples() {
        let lim = KrLimits::default();
        let k = kr_lattice(&FinLattice::chain(2), 1, &lim).unwrap();
        assert_eq!(k.materialized.count_elements(64).unwrap(), 2);
        let k = kr_lattice(&FinLattice::chain(3), 1, &lim).unwrap();
        assert_eq!(k.materialized.num_points(), 3);
        assert_eq!(k.materialized.base().height(), 2);
        assert!(kr_lattice(&FinLattice::trivial(), 2, &lim).unwrap().materialized.is_trivial());
    }

    #[test]
    fn phi_maps_are_decreasing() {
        let base = FinLattice::boolean(2);
        let k = kr_lattice(&base, 2, &KrLimits::default()).unwrap();
        for a in base.elements(16).unwrap() {
            assert!(k.materialized.leq(&k.phi(1, &a), &k.phi(0, &a)));
            assert!(k.materialized.leq(&k.phi(2, &a), &k.phi(1, &a)));
        }
        assert_eq!(k.phi(0, &base.top()), k.materialized.top());
    }

    #[test]
    fn joyal_and_def_a() {
        let lim = KrLimits::default();
        let b4 = FinLattice::boolean(2);
        let l3 = FinLattice::chain(3);
        assert!(joyal_sigma_injective(&b4, 0, &lim).unwrap());
        assert!(!joyal_sigma_injective(&l3, 0, &lim).unwrap());
        assert!(joyal_sigma_injective(&l3, 1, &lim).unwrap());
        assert!(joyal_sigma_injective(&FinLattice::trivial(), 1, &lim).unwrap());
        assert!(def_a_dim_leq(&b4, 0).unwrap());
        assert!(!def_a_dim_leq(&l3, 0).unwrap());
        assert!(def_a_dim_leq(&l3, 1).unwrap());
    }
}
