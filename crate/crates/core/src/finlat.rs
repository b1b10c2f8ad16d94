//! Finite distributive lattices in Birkhoff form.
//!
//! A [`FinLattice`] is the lattice of downsets of a finite poset of
//! join-irreducibles. Every element is stored as its characteristic set
//! over that poset, so meet and join are intersection and union and
//! equality is syntactic. The prime spectrum is read off the same poset:
//! the irreducible `p` gives the prime ideal `{z : p ∉ z}`.

use crate::bits::Bits;
use crate::error::{KrullError, Result};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Default element budget for operations that enumerate all elements.
pub const DEFAULT_ELEMENT_CAP: usize = 1 << 16;

/// A finite partial order, stored as the downset of every point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    below: Vec<Bits>,
    above: Vec<Bits>,
}

impl Poset {
    /// Builds the reflexive-transitive closure of `relations` (pairs
    /// `(i, j)` meaning `i ≤ j`). Cycles are rejected.
    pub fn new(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut below: Vec<Bits> = (0..n).map(|i| Bits::from_indices(n, [i])).collect();
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(KrullError::input(format!("poset relation ({i},{j}) out of range")));
            }
            below[j].insert(i);
        }
        // Warshall closure on downsets.
        for k in 0..n {
            for j in 0..n {
                if below[j].contains(k) {
                    let bk = below[k].clone();
                    below[j].or_assign(&bk);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && below[j].contains(i) && below[i].contains(j) {
                    return Err(KrullError::input(format!(
                        "relation is not antisymmetric: {} and {} are identified",
                        names[i], names[j]
                    )));
                }
            }
        }
        Ok(Self::from_closed(names, below))
    }

    /// Checks that an explicit table is a partial order without closing it.
    pub fn from_leq_table(names: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = names.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(KrullError::input("order table has the wrong shape"));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(KrullError::input(format!("order table not reflexive at {}", names[i])));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(KrullError::input("order table not antisymmetric"));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(KrullError::input("order table not transitive"));
                    }
                }
            }
        }
        let below = (0..n)
            .map(|j| Bits::from_indices(n, (0..n).filter(|&i| leq[i][j])))
            .collect();
        Ok(Self::from_closed(names, below))
    }

    fn from_closed(names: Vec<String>, below: Vec<Bits>) -> Self {
        let n = names.len();
        let mut above: Vec<Bits> = (0..n).map(|_| Bits::zeros(n)).collect();
        for (j, b) in below.iter().enumerate() {
            for i in b.iter() {
                above[i].insert(j);
            }
        }
        Poset { names, below, above }
    }

    pub fn antichain(n: usize) -> Self {
        Self::new((0..n).map(|i| format!("p{i}")).collect(), &[]).expect("antichain")
    }

    pub fn chain(n: usize) -> Self {
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new((0..n).map(|i| format!("p{i}")).collect(), &rel).expect("chain")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    /// `{j : j ≤ i}`
    pub fn below(&self, i: usize) -> &Bits {
        &self.below[i]
    }

    /// `{j : i ≤ j}`
    pub fn above(&self, i: usize) -> &Bits {
        &self.above[i]
    }

    pub fn reversed(&self) -> Poset {
        Poset {
            names: self.names.clone(),
            below: self.above.clone(),
            above: self.below.clone(),
        }
    }

    /// Points listed so that every point comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.below[i].count(), i));
        order
    }

    /// Cover pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for j in 0..n {
            for i in self.below[j].iter() {
                if i == j {
                    continue;
                }
                let between = self.below[j]
                    .iter()
                    .any(|k| k != i && k != j && self.leq(i, k));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Length (number of steps) of a longest chain; `-1` for the empty poset.
    pub fn height(&self) -> isize {
        let mut depth = vec![0isize; self.len()];
        for i in self.linear_extension() {
            depth[i] = self.below[i]
                .iter()
                .filter(|&j| j != i)
                .map(|j| depth[j] + 1)
                .max()
                .unwrap_or(0);
        }
        depth.into_iter().max().unwrap_or(-1)
    }

    /// Is `set` downward closed?
    pub fn is_downset(&self, set: &Bits) -> bool {
        set.len() == self.len() && set.iter().all(|i| self.below[i].is_subset(set))
    }

    pub fn downward_closure(&self, set: &Bits) -> Bits {
        let mut out = Bits::zeros(self.len());
        for i in set.iter() {
            out.or_assign(&self.below[i]);
        }
        out
    }
}

/// An element of a [`FinLattice`]: a downset of its join-irreducibles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Element(pub(crate) Bits);

impl Element {
    pub fn bits(&self) -> &Bits {
        &self.0
    }

    pub fn into_bits(self) -> Bits {
        self.0
    }
}

/// A finite distributive lattice, presented as the downsets of `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinLattice {
    base: Poset,
    generators: Vec<(String, Element)>,
}

impl FinLattice {
    /// The lattice of downsets of `base`, generated by the principal
    /// downsets of its points (named after the points).
    pub fn from_poset(base: Poset) -> Self {
        let generators = (0..base.len())
            .map(|p| (base.names[p].clone(), Element(base.below[p].clone())))
            .collect();
        FinLattice { base, generators }
    }

    /// One-element lattice, `0 = 1`.
    pub fn trivial() -> Self {
        Self::from_poset(Poset::antichain(0))
    }

    /// Chain with `k ≥ 1` elements.
    pub fn chain(k: usize) -> Self {
        assert!(k >= 1, "a chain has at least one element");
        Self::from_poset(Poset::chain(k - 1))
    }

    /// Boolean algebra with `n` atoms.
    pub fn boolean(n: usize) -> Self {
        Self::from_poset(Poset::antichain(n))
    }

    /// Replaces the named generators. Each must be a downset.
    pub fn with_generators(mut self, gens: Vec<(String, Bits)>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for (name, b) in gens {
            let e = self.element(b)?;
            out.push((name, e));
        }
        self.generators = out;
        Ok(self)
    }

    /// The sublattice of `2^points` generated by the given columns, in
    /// Birkhoff form. `valuations[k]` lists which generators hold at the
    /// `k`-th point. Duplicate valuations are merged; points are ordered
    /// so that a point where more generators hold sits lower.
    pub fn from_valuations(gen_names: Vec<String>, valuations: Vec<Bits>) -> Self {
        let mut vals = valuations;
        vals.sort();
        vals.dedup();
        let n = vals.len();
        let below: Vec<Bits> = (0..n)
            .map(|p| Bits::from_indices(n, (0..n).filter(|&q| vals[p].is_subset(&vals[q]))))
            .collect();
        let names = (0..n).map(|i| format!("p{i}")).collect();
        let base = Poset::from_closed(names, below);
        let generators = gen_names
            .into_iter()
            .enumerate()
            .map(|(g, name)| {
                let col = Bits::from_indices(n, (0..n).filter(|&p| vals[p].contains(g)));
                (name, Element(col))
            })
            .collect();
        FinLattice { base, generators }
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    /// Number of join-irreducibles.
    pub fn num_points(&self) -> usize {
        self.base.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.base.is_empty()
    }

    pub fn generators(&self) -> &[(String, Element)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&Element> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|(n, _)| n == name)
    }

    /// Validates a characteristic set as an element.
    pub fn element(&self, bits: Bits) -> Result<Element> {
        if self.base.is_downset(&bits) {
            Ok(Element(bits))
        } else {
            Err(KrullError::input("set is not a downset of the join-irreducibles"))
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.base.is_downset(&e.0)
    }

    pub fn bottom(&self) -> Element {
        Element(Bits::zeros(self.base.len()))
    }

    pub fn top(&self) -> Element {
        Element(Bits::ones(self.base.len()))
    }

    /// The principal downset of point `p`; these are the join-irreducibles.
    pub fn principal(&self, p: usize) -> Element {
        Element(self.base.below[p].clone())
    }

    pub fn irreducibles(&self) -> Vec<Element> {
        (0..self.num_points()).map(|p| self.principal(p)).collect()
    }

    pub fn meet(&self, a: &Element, b: &Element) -> Element {
        Element(a.0.and(&b.0))
    }

    pub fn join(&self, a: &Element, b: &Element) -> Element {
        Element(a.0.or(&b.0))
    }

    pub fn leq(&self, a: &Element, b: &Element) -> bool {
        a.0.is_subset(&b.0)
    }

    pub fn meet_all<'a>(&self, items: impl IntoIterator<Item = &'a Element>) -> Element {
        let mut acc = self.top();
        for e in items {
            acc.0.and_assign(&e.0);
        }
        acc
    }

    pub fn join_all<'a>(&self, items: impl IntoIterator<Item = &'a Element>) -> Element {
        let mut acc = self.bottom();
        for e in items {
            acc.0.or_assign(&e.0);
        }
        acc
    }

    /// Least `x` with `a ≤ b ∨ x`: the downward closure of `a ∖ b`.
    pub fn coheyting_diff(&self, a: &Element, b: &Element) -> Element {
        Element(self.base.downward_closure(&a.0.minus(&b.0)))
    }

    /// Greatest `x` with `a ∧ x ≤ b`: points whose whole downset avoids `a ∖ b`.
    pub fn heyting_impl(&self, a: &Element, b: &Element) -> Element {
        let bad = a.0.minus(&b.0);
        let n = self.num_points();
        Element(Bits::from_indices(
            n,
            (0..n).filter(|&p| !self.base.below[p].intersects(&bad)),
        ))
    }

    /// Which generators hold at point `p`.
    pub fn point_valuation(&self, p: usize) -> Bits {
        Bits::from_indices(
            self.generators.len(),
            self.generators
                .iter()
                .enumerate()
                .filter(|(_, (_, e))| e.0.contains(p))
                .map(|(g, _)| g),
        )
    }

    /// Map from generator valuation to point; `None` if the generators do
    /// not separate points.
    pub fn points_by_valuation(&self) -> Option<HashMap<Bits, usize>> {
        let mut map = HashMap::with_capacity(self.num_points());
        for p in 0..self.num_points() {
            if map.insert(self.point_valuation(p), p).is_some() {
                return None;
            }
        }
        Some(map)
    }

    /// All elements, in a deterministic order, or a resource error once
    /// more than `cap` have been produced.
    pub fn elements(&self, cap: usize) -> Result<Vec<Element>> {
        let order = self.base.linear_extension();
        let mut out = Vec::new();
        let mut cur = Bits::zeros(self.num_points());
        self.enumerate_downsets(&order, 0, &mut cur, &mut out, cap)?;
        Ok(out.into_iter().map(Element).collect())
    }

    fn enumerate_downsets(
        &self,
        order: &[usize],
        depth: usize,
        cur: &mut Bits,
        out: &mut Vec<Bits>,
        cap: usize,
    ) -> Result<()> {
        if depth == order.len() {
            if out.len() >= cap {
                return Err(KrullError::resource(format!(
                    "lattice has more than {cap} elements"
                )));
            }
            out.push(cur.clone());
            return Ok(());
        }
        let p = order[depth];
        self.enumerate_downsets(order, depth + 1, cur, out, cap)?;
        let mut strict_below = self.base.below[p].clone();
        strict_below.remove(p);
        if strict_below.is_subset(cur) {
            cur.insert(p);
            self.enumerate_downsets(order, depth + 1, cur, out, cap)?;
            cur.remove(p);
        }
        Ok(())
    }

    pub fn count_elements(&self, cap: usize) -> Result<usize> {
        self.elements(cap).map(|v| v.len())
    }

    /// The order-dual lattice. Element `a` of `self` corresponds to the
    /// complement of `a` (see [`FinLattice::to_opposite`]).
    pub fn opposite(&self) -> FinLattice {
        let base = self.base.reversed();
        let generators = self
            .generators
            .iter()
            .map(|(n, e)| (n.clone(), self.to_opposite(e)))
            .collect();
        FinLattice { base, generators }
    }

    /// Image of `a` in [`FinLattice::opposite`]; an involution.
    pub fn to_opposite(&self, a: &Element) -> Element {
        Element(a.0.complement())
    }

    pub fn format_element(&self, e: &Element) -> String {
        let names: Vec<&str> = e.0.iter().map(|p| self.base.names[p].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Writes `e` as a join of meets of generators, when a generator
    /// combination produces it; falls back to the point set otherwise.
    pub fn describe_element(&self, e: &Element) -> String {
        if *e == self.bottom() {
            return "0".into();
        }
        if *e == self.top() {
            return "1".into();
        }
        if let Some((name, _)) = self.generators.iter().find(|(_, g)| g == e) {
            return name.clone();
        }
        self.format_element(e)
    }

    pub fn to_json(&self) -> LatticeJson {
        let n = self.num_points();
        let mut leq = Vec::new();
        for j in 0..n {
            for i in self.base.below[j].iter() {
                if i != j {
                    leq.push([i, j]);
                }
            }
        }
        LatticeJson {
            irreducibles: self.base.names.clone(),
            leq,
            generators: self
                .generators
                .iter()
                .map(|(name, e)| (name.clone(), e.0.iter().collect()))
                .collect(),
        }
    }

    pub fn from_json(json: &LatticeJson) -> Result<Self> {
        let rel: Vec<(usize, usize)> = json.leq.iter().map(|[i, j]| (*i, *j)).collect();
        let base = Poset::new(json.irreducibles.clone(), &rel)?;
        let n = base.len();
        let mut gens = Vec::new();
        for (name, idx) in &json.generators {
            if idx.iter().any(|&i| i >= n) {
                return Err(KrullError::input(format!("generator {name} names an unknown irreducible")));
            }
            gens.push((name.clone(), Bits::from_indices(n, idx.iter().copied())));
        }
        FinLattice::from_poset(base).with_generators(gens)
    }

    /// Graphviz rendering of the Hasse diagram of the element order.
    pub fn to_dot(&self, cap: usize) -> Result<String> {
        let elems = self.elements(cap)?;
        let index: HashMap<&Element, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut s = String::from("digraph lattice {\n  rankdir=BT;\n");
        for (i, e) in elems.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", self.describe_element(e));
        }
        for (i, e) in elems.iter().enumerate() {
            // covers of e: add one minimal point of the complement
            for p in 0..self.num_points() {
                if e.0.contains(p) {
                    continue;
                }
                let mut sb = self.base.below[p].clone();
                sb.remove(p);
                if sb.is_subset(&e.0) {
                    let mut up = e.0.clone();
                    up.insert(p);
                    let j = index[&Element(up)];
                    let _ = writeln!(s, "  n{i} -> n{j};");
                }
            }
        }
        s.push_str("}\n");
        Ok(s)
    }
}

/// JSON export shape of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub irreducibles: Vec<String>,
    pub leq: Vec<[usize; 2]>,
    pub generators: IndexMap<String, Vec<usize>>,
}

/// The lattice presented by `pres`: each generator becomes its truth
/// column over the models of the axioms. An inconsistent presentation
/// gives the one-element lattice.
pub fn build_from_presentation(pres: &crate::entailment::EntailmentPresentation, cap: usize) -> Result<FinLattice> {
    let models = pres.models(cap)?;
    let l = FinLattice::from_valuations(pres.generators().to_vec(), models);
    l.count_elements(cap)?;
    Ok(l)
}

/// Join-irreducible elements computed from the element table: `x ≠ 0` is
/// irreducible when it differs from the join of everything strictly below.
pub fn join_irreducibles(l: &FinLattice, cap: usize) -> Result<Poset> {
    let elems = l.elements(cap)?;
    let mut irr = Vec::new();
    for x in &elems {
        if *x == l.bottom() {
            continue;
        }
        let below = l.join_all(elems.iter().filter(|y| *y != x && l.leq(y, x)));
        if below != *x {
            irr.push(x.clone());
        }
    }
    let names = irr.iter().map(|e| l.format_element(e)).collect();
    let leq: Vec<Vec<bool>> = irr
        .iter()
        .map(|a| irr.iter().map(|b| l.leq(a, b)).collect())
        .collect();
    Poset::from_leq_table(names, &leq)
}

/// One prime ideal of a finite lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdeal {
    /// The irreducible `p` with ideal `{z : p ∉ z}`.
    pub point: usize,
    pub members: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSpectrum {
    pub primes: Vec<PrimeIdeal>,
    /// `(i, j)` with `primes[i] ⊊ primes[j]`.
    pub inclusions: Vec<(usize, usize)>,
}

/// All prime ideals with their strict inclusions.
pub fn enumerate_primes(l: &FinLattice, cap: usize) -> Result<PrimeSpectrum> {
    let elems = l.elements(cap)?;
    let primes: Vec<PrimeIdeal> = (0..l.num_points())
        .map(|p| PrimeIdeal {
            point: p,
            members: elems.iter().filter(|z| !z.0.contains(p)).cloned().collect(),
        })
        .collect();
    let mut inclusions = Vec::new();
    for (i, a) in primes.iter().enumerate() {
        for (j, b) in primes.iter().enumerate() {
            if i != j && a.members.iter().all(|z| b.members.contains(z)) {
                inclusions.push((i, j));
            }
        }
    }
    Ok(PrimeSpectrum { primes, inclusions })
}

/// Length of a longest strictly increasing chain of primes; `-1` when
/// there are none.
pub fn classical_dim(l: &FinLattice, cap: usize) -> Result<isize> {
    let spec = enumerate_primes(l, cap)?;
    let n = spec.primes.len();
    // primes with fewer members come first in any chain
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| spec.primes[i].members.len());
    let mut best = vec![0isize; n];
    for (k, &j) in order.iter().enumerate() {
        for &i in &order[..k] {
            if spec.inclusions.contains(&(i, j)) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    Ok(best.into_iter().max().unwrap_or(-1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l3() -> FinLattice {
        FinLattice::chain(3)
    }

    fn el(l: &FinLattice, idx: &[usize]) -> Element {
        l.element(Bits::from_indices(l.num_points(), idx.iter().copied())).unwrap()
    }

    #[test]
    fn chain_and_boolean_ops() {
        let l = l3();
        let m = el(&l, &[0]);
        assert_eq!(l.meet(&m, &l.top()), m);
        assert_eq!(l.join(&l.bottom(), &m), m);
        let b = FinLattice::boolean(2);
        let (p, q) = (el(&b, &[0]), el(&b, &[1]));
        assert_eq!(b.meet(&p, &q), b.bottom());
        assert_eq!(b.join(&p, &q), b.top());
    }

    #[test]
    fn non_downset_is_rejected() {
        let l = l3();
        assert!(l.element(Bits::from_indices(2, [1])).is_err());
    }

    #[test]
    fn heyting_operations_on_small_lattices() {
        let l = l3();
        let m = el(&l, &[0]);
        assert_eq!(l.coheyting_diff(&l.top(), &m), l.top());
        let b = FinLattice::boolean(2);
        assert_eq!(b.coheyting_diff(&b.top(), &el(&b, &[0])), el(&b, &[1]));
        for x in l.elements(16).unwrap() {
            assert_eq!(l.coheyting_diff(&x, &x), l.bottom());
            assert_eq!(l.heyting_impl(&x, &x), l.top());
        }
    }

    #[test]
    fn spectra_and_dimension() {
        let l = l3();
        let spec = enumerate_primes(&l, 16).unwrap();
        assert_eq!(spec.primes.len(), 2);
        assert_eq!(spec.inclusions, vec![(0, 1)]);
        assert_eq!(classical_dim(&l, 16).unwrap(), 1);
        assert_eq!(classical_dim(&FinLattice::boolean(2), 16).unwrap(), 0);
        assert_eq!(classical_dim(&FinLattice::trivial(), 16).unwrap(), -1);
        assert!(enumerate_primes(&FinLattice::trivial(), 16).unwrap().primes.is_empty());
    }

    #[test]
    fn element_level_irreducibles() {
        let p = join_irreducibles(&l3(), 16).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.height(), 1);
        let p = join_irreducibles(&FinLattice::boolean(2), 16).unwrap();
        assert_eq!((p.len(), p.height()), (2, 0));
        assert!(join_irreducibles(&FinLattice::trivial(), 16).unwrap().is_empty());
    }

    #[test]
    fn json_round_trip_and_dot() {
        let l = FinLattice::from_poset(Poset::new(vec!["a".into(), "b".into(), "c".into()], &[(0, 2), (1, 2)]).unwrap());
        let json = serde_json::to_string(&l.to_json()).unwrap();
        let back: LatticeJson = serde_json::from_str(&json).unwrap();
        assert_eq!(FinLattice::from_json(&back).unwrap(), l);
        let dot = l.to_dot(64).unwrap();
        assert_eq!(dot.matches("->").count(), 5);
    }

    #[test]
    fn element_cap_is_a_resource_error() {
        let l = FinLattice::boolean(5);
        assert!(matches!(l.elements(31), Err(KrullError::Resource(_))));
        assert_eq!(l.count_elements(32).unwrap(), 32);
    }

    #[test]
    fn presented_lattices() {
        use crate::entailment::EntailmentPresentation;
        let p = EntailmentPresentation::new::<&str>(vec!["a".into()], &[]).unwrap();
        assert_eq!(build_from_presentation(&p, 64).unwrap().count_elements(64).unwrap(), 3);
        let p = EntailmentPresentation::new(
            vec!["a".into(), "b".into()],
            &[(vec!["a"], vec!["b"]), (vec!["b"], vec!["a"])],
        )
        .unwrap();
        let l = build_from_presentation(&p, 64).unwrap();
        assert_eq!(l.count_elements(64).unwrap(), 3);
        assert_eq!(l.generator("a"), l.generator("b"));
        let p = EntailmentPresentation::new(vec!["a".into()], &[(vec![], vec!["a"]), (vec!["a"], vec![])]).unwrap();
        assert!(build_from_presentation(&p, 64).unwrap().is_trivial());
    }
}
