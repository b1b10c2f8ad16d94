//! Lattice morphisms, lying over, going up/down and relative dimension.
//!
//! A morphism `α : T → V` of finite distributive lattices is stored through
//! its dual map on points: each irreducible `q` of `V` is sent to the
//! irreducible of `T` whose generator valuation matches. Then
//! `α(a) = {q : dual(q) ∈ a}`.

use crate::bits::Bits;
use crate::dimension::elementary_chain;
use crate::error::{KrullError, Result};
use crate::finlat::{Element, FinLattice};
use crate::primes_chains::{collapses, ChainWitness, IdealisticChain};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMorphism {
    pub dom: FinLattice,
    pub cod: FinLattice,
    dual: Vec<usize>,
}

impl LatticeMorphism {
    /// Extends an assignment of cod elements to the dom generators. Fails
    /// when the assignment breaks a relation of the domain.
    pub fn from_generator_images(dom: FinLattice, cod: FinLattice, images: &[(String, Element)]) -> Result<Self> {
        let g = dom.generators().len();
        let mut img = vec![None; g];
        for (name, e) in images {
            let i = dom
                .generator_index(name)
                .ok_or_else(|| KrullError::input(format!("unknown domain generator {name}")))?;
            if !cod.contains(e) {
                return Err(KrullError::input(format!("image of {name} is not a codomain element")));
            }
            img[i] = Some(e.clone());
        }
        let img: Vec<Element> = img
            .into_iter()
            .enumerate()
            .map(|(i, e)| e.ok_or_else(|| KrullError::input(format!("no image for {}", dom.generators()[i].0))))
            .collect::<Result<_>>()?;
        let lookup = dom
            .points_by_valuation()
            .ok_or_else(|| KrullError::input("domain generators do not generate the domain"))?;
        let mut dual = Vec::with_capacity(cod.num_points());
        for q in 0..cod.num_points() {
            let v = Bits::from_indices(g, (0..g).filter(|&i| img[i].bits().contains(q)));
            match lookup.get(&v) {
                Some(&p) => dual.push(p),
                None => {
                    return Err(KrullError::input(
                        "generator images violate a relation of the domain",
                    ))
                }
            }
        }
        Self::from_dual(dom, cod, dual)
    }

    /// Builds from a monotone map on points, cod → dom.
    pub fn from_dual(dom: FinLattice, cod: FinLattice, dual: Vec<usize>) -> Result<Self> {
        if dual.len() != cod.num_points() || dual.iter().any(|&p| p >= dom.num_points()) {
            return Err(KrullError::input("point map has the wrong shape"));
        }
        for q in 0..cod.num_points() {
            for r in cod.base().above(q).iter() {
                if !dom.base().leq(dual[q], dual[r]) {
                    return Err(KrullError::input("point map is not monotone"));
                }
            }
        }
        Ok(LatticeMorphism { dom, cod, dual })
    }

    pub fn identity(l: &FinLattice) -> Self {
        LatticeMorphism {
            dom: l.clone(),
            cod: l.clone(),
            dual: (0..l.num_points()).collect(),
        }
    }

    pub fn dual(&self) -> &[usize] {
        &self.dual
    }

    pub fn apply(&self, a: &Element) -> Element {
        let n = self.cod.num_points();
        self.cod
            .element(Bits::from_indices(n, (0..n).filter(|&q| a.bits().contains(self.dual[q]))))
            .expect("preimage of a downset under a monotone map")
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.dom.num_points()];
        for &p in &self.dual {
            hit[p] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Same morphism between the opposite lattices.
    pub fn opposite(&self) -> LatticeMorphism {
        LatticeMorphism {
            dom: self.dom.opposite(),
            cod: self.cod.opposite(),
            dual: self.dual.clone(),
        }
    }

    /// Checks that `0, 1, ∧, ∨` are preserved on all element pairs.
    pub fn check_homomorphism(&self, cap: usize) -> Result<bool> {
        let elems = self.dom.elements(cap)?;
        if self.apply(&self.dom.bottom()) != self.cod.bottom() || self.apply(&self.dom.top()) != self.cod.top() {
            return Ok(false);
        }
        for a in &elems {
            for b in &elems {
                let (fa, fb) = (self.apply(a), self.apply(b));
                if self.apply(&self.dom.meet(a, b)) != self.cod.meet(&fa, &fb)
                    || self.apply(&self.dom.join(a, b)) != self.cod.join(&fa, &fb)
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Generator sequents `⋀A ⊢ ⋁B` that hold after `α` but not before.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyingOverReport {
    pub holds: bool,
    /// `(lhs, rhs)` generator names.
    pub counterexample: Option<(Vec<String>, Vec<String>)>,
}

/// Generator-count bound for the lying-over sequent scan.
pub const LYING_OVER_GENERATOR_CAP: usize = 12;

/// Does `α` reflect every generator sequent?
pub fn is_lying_over(alpha: &LatticeMorphism) -> Result<LyingOverReport> {
    let dom = &alpha.dom;
    let gens = dom.generators();
    let g = gens.len();
    if g > LYING_OVER_GENERATOR_CAP {
        return Err(KrullError::resource(format!("{g} generators exceed the lying-over cap")));
    }
    let images: Vec<Element> = gens.iter().map(|(_, e)| alpha.apply(e)).collect();
    let pick = |mask: u32, v: &[Element]| -> Vec<Element> {
        (0..g).filter(|i| mask >> i & 1 == 1).map(|i| v[i].clone()).collect()
    };
    let dom_gens: Vec<Element> = gens.iter().map(|(_, e)| e.clone()).collect();
    for a in 0u32..(1 << g) {
        let da = dom.meet_all(&pick(a, &dom_gens));
        let ca = alpha.cod.meet_all(&pick(a, &images));
        for b in 0u32..(1 << g) {
            if a & b != 0 {
                continue;
            }
            let db = dom.join_all(&pick(b, &dom_gens));
            let cb = alpha.cod.join_all(&pick(b, &images));
            if alpha.cod.leq(&ca, &cb) && !dom.leq(&da, &db) {
                let names = |m: u32| (0..g).filter(|i| m >> i & 1 == 1).map(|i| gens[i].0.clone()).collect();
                return Ok(LyingOverReport {
                    holds: false,
                    counterexample: Some((names(a), names(b))),
                });
            }
        }
    }
    Ok(LyingOverReport {
        holds: true,
        counterexample: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoingReport {
    pub holds: bool,
    /// `(a, b, y)` for which no `x` exists.
    pub counterexample: Option<(Element, Element, Element)>,
}

/// `α(a) ≤ α(b) ∨ y ⇒ ∃x (a ≤ b ∨ x ∧ α(x) ≤ y)`, decided with the least
/// candidate `x = a ∖ b`.
pub fn is_going_up(alpha: &LatticeMorphism, cap: usize) -> Result<GoingReport> {
    going(alpha, cap, false, |a, b| alpha.dom.coheyting_diff(a, b))
}

/// `α(a) ∧ y ≤ α(b) ⇒ ∃x (a ∧ x ≤ b ∧ y ≤ α(x))`, decided with the
/// greatest candidate `x = a → b`.
pub fn is_going_down(alpha: &LatticeMorphism, cap: usize) -> Result<GoingReport> {
    going(alpha, cap, true, |a, b| alpha.dom.heyting_impl(a, b))
}

fn going(
    alpha: &LatticeMorphism,
    cap: usize,
    down: bool,
    candidate: impl Fn(&Element, &Element) -> Element,
) -> Result<GoingReport> {
    let (dom, cod) = (&alpha.dom, &alpha.cod);
    let de = dom.elements(cap)?;
    let ce = cod.elements(cap)?;
    for a in &de {
        let fa = alpha.apply(a);
        for b in &de {
            let fb = alpha.apply(b);
            let fx = alpha.apply(&candidate(a, b));
            for y in &ce {
                let (premise, concl) = if down {
                    (cod.leq(&cod.meet(&fa, y), &fb), cod.leq(y, &fx))
                } else {
                    (cod.leq(&fa, &cod.join(&fb, y)), cod.leq(&fx, y))
                };
                if premise && !concl {
                    return Ok(GoingReport {
                        holds: false,
                        counterexample: Some((a.clone(), b.clone(), y.clone())),
                    });
                }
            }
        }
    }
    Ok(GoingReport {
        holds: true,
        counterexample: None,
    })
}

/// Going up/down by searching all `x`; for cross-checks.
pub fn going_brute(alpha: &LatticeMorphism, cap: usize, down: bool) -> Result<bool> {
    let (dom, cod) = (&alpha.dom, &alpha.cod);
    let de = dom.elements(cap)?;
    let ce = cod.elements(cap)?;
    let images: Vec<Element> = de.iter().map(|x| alpha.apply(x)).collect();
    for a in &de {
        let fa = alpha.apply(a);
        for b in &de {
            let fb = alpha.apply(b);
            for y in &ce {
                let ok = if down {
                    !cod.leq(&cod.meet(&fa, y), &fb)
                        || de.iter().zip(&images).any(|(x, fx)| dom.leq(&dom.meet(a, x), b) && cod.leq(y, fx))
                } else {
                    !cod.leq(&fa, &cod.join(&fb, y))
                        || de.iter().zip(&images).any(|(x, fx)| dom.leq(a, &dom.join(b, x)) && cod.leq(fx, y))
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `as` with, for each split, the ladder witness of the augmented chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeWitness {
    pub a_list: Vec<Element>,
    /// Indexed by the bitmask of `H` (the entries sent to `J₀`).
    pub per_split: Vec<ChainWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelativeOutcome {
    Collapses(RelativeWitness),
    /// No witness with at most `k_max` entries was produced. `definitive`
    /// means the chain provably does not collapse over the domain; then
    /// `obstruction` names a domain point all of whose refining prime
    /// chains trace back to it.
    NotFound {
        k_max: usize,
        definitive: bool,
        obstruction: Option<usize>,
    },
}

/// The chain with `α(a)` for `a ∈ H` added to `J₀` and the rest to `Uℓ`.
pub fn augmented_chain(alpha: &LatticeMorphism, c: &IdealisticChain, a_list: &[Element], h_mask: u64) -> IdealisticChain {
    let mut out = c.clone();
    let top = c.order();
    for (i, a) in a_list.iter().enumerate() {
        let img = alpha.apply(a);
        if h_mask >> i & 1 == 1 {
            out.levels[0].j.push(img);
        } else {
            out.levels[top].u.push(img);
        }
    }
    out
}

/// Split witnesses for every `(H, H′)`, or `None` if some split survives.
pub fn split_witnesses(alpha: &LatticeMorphism, c: &IdealisticChain, a_list: &[Element]) -> Option<Vec<ChainWitness>> {
    let k = a_list.len();
    (0..(1u64 << k))
        .map(|h| crate::primes_chains::chain_collapses(&alpha.cod, &augmented_chain(alpha, c, a_list, h)))
        .collect()
}

pub fn verify_relative_witness(alpha: &LatticeMorphism, c: &IdealisticChain, w: &RelativeWitness) -> bool {
    let k = w.a_list.len();
    k < 63
        && w.per_split.len() == 1 << k
        && w.per_split.iter().enumerate().all(|(h, cw)| {
            crate::primes_chains::verify_chain_witness(&alpha.cod, &augmented_chain(alpha, c, &w.a_list, h as u64), cw)
        })
}

/// Decides collapse of `C` over the domain. For each domain point `p`, the
/// chain with `α(c_p)` in `J₀` and `α(↓p)` in `Uℓ` (where `c_p` is the
/// largest element missing `p`) collapses iff no refining prime chain
/// traces entirely to the prime of `p`; all of them collapsing is exactly
/// relative collapse. The witness list `{c_p, ↓p}` is then pruned greedily.
pub fn relative_chain_collapses(alpha: &LatticeMorphism, c: &IdealisticChain, k_max: usize) -> Result<RelativeOutcome> {
    if !alpha.is_injective() {
        return Err(KrullError::contract("relative collapse needs an injective morphism"));
    }
    let dom = &alpha.dom;
    let n = dom.num_points();
    let mut candidates: Vec<Element> = Vec::new();
    for p in 0..n {
        let cp = Element(dom.base().above(p).complement());
        let dp = dom.principal(p);
        let mut probe = c.clone();
        let top = probe.order();
        probe.levels[0].j.push(alpha.apply(&cp));
        probe.levels[top].u.push(alpha.apply(&dp));
        if !collapses(&alpha.cod, &probe) {
            return Ok(RelativeOutcome::NotFound {
                k_max,
                definitive: true,
                obstruction: Some(p),
            });
        }
        for e in [cp, dp] {
            if e != dom.bottom() && e != dom.top() && !candidates.contains(&e) {
                candidates.push(e);
            }
        }
    }
    if candidates.len() >= 63 {
        return Err(KrullError::resource("relative witness too long to enumerate splits"));
    }
    // the full list works; drop entries while it still does
    debug_assert!(split_witnesses(alpha, c, &candidates).is_some());
    let mut i = 0;
    while i < candidates.len() {
        let mut trial = candidates.clone();
        trial.remove(i);
        if split_witnesses(alpha, c, &trial).is_some() {
            candidates = trial;
        } else {
            i += 1;
        }
    }
    if candidates.len() > k_max {
        return Ok(RelativeOutcome::NotFound {
            k_max,
            definitive: false,
            obstruction: None,
        });
    }
    let per_split = split_witnesses(alpha, c, &candidates).expect("pruned list still collapses");
    Ok(RelativeOutcome::Collapses(RelativeWitness {
        a_list: candidates,
        per_split,
    }))
}

/// Searches all sets of at most `k_max` domain elements; for cross-checks.
pub fn relative_chain_collapses_brute(
    alpha: &LatticeMorphism,
    c: &IdealisticChain,
    k_max: usize,
    cap: usize,
) -> Result<Option<Vec<Element>>> {
    let elems = alpha.dom.elements(cap)?;
    fn go(
        alpha: &LatticeMorphism,
        c: &IdealisticChain,
        elems: &[Element],
        start: usize,
        cur: &mut Vec<Element>,
        k_max: usize,
    ) -> Option<Vec<Element>> {
        if split_witnesses(alpha, c, cur).is_some() {
            return Some(cur.clone());
        }
        if cur.len() == k_max {
            return None;
        }
        for i in start..elems.len() {
            cur.push(elems[i].clone());
            if let Some(r) = go(alpha, c, elems, i + 1, cur, k_max) {
                return Some(r);
            }
            cur.pop();
        }
        None
    }
    Ok(go(alpha, c, &elems, 0, &mut Vec::new(), k_max))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelDimReport {
    pub holds: bool,
    /// A tuple of cod irreducibles whose elementary chain does not collapse
    /// over the domain.
    pub counterexample: Option<Vec<Element>>,
    pub definitive: bool,
}

/// Does every elementary chain on `n + 1` codomain irreducibles collapse
/// over the domain?
pub fn relative_dim_leq(alpha: &LatticeMorphism, n: isize, k_max: usize) -> Result<RelDimReport> {
    if n < -1 {
        return Err(KrullError::input("relative dimension bound below -1"));
    }
    let len = (n + 1) as usize;
    let pool = alpha.cod.irreducibles();
    let mut idx = vec![0usize; len];
    let mut definitive = true;
    if len > 0 && pool.is_empty() {
        return Ok(RelDimReport {
            holds: true,
            counterexample: None,
            definitive,
        });
    }
    loop {
        let xs: Vec<Element> = idx.iter().map(|&i| pool[i].clone()).collect();
        match relative_chain_collapses(alpha, &elementary_chain(&xs), k_max)? {
            RelativeOutcome::Collapses(_) => {}
            RelativeOutcome::NotFound { definitive: d, .. } => {
                definitive &= d;
                return Ok(RelDimReport {
                    holds: false,
                    counterexample: Some(xs),
                    definitive,
                });
            }
        }
        let mut k = len;
        loop {
            if k == 0 {
                return Ok(RelDimReport {
                    holds: true,
                    counterexample: None,
                    definitive,
                });
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < pool.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Least `n` with relative dimension `≤ n`.
pub fn relative_dim(alpha: &LatticeMorphism, k_max: usize) -> Result<isize> {
    let mut n = -1;
    loop {
        let r = relative_dim_leq(alpha, n, k_max)?;
        if r.holds {
            return Ok(n);
        }
        if !r.definitive {
            return Err(KrullError::resource(format!("relative witness exceeds k_max = {k_max}")));
        }
        n += 1;
        if n > alpha.cod.num_points() as isize {
            return Err(KrullError::contract("relative dimension exceeds the codomain size"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finlat::Poset;

    fn el(l: &FinLattice, idx: &[usize]) -> Element {
        l.element(Bits::from_indices(l.num_points(), idx.iter().copied())).unwrap()
    }

    /// {0,1} ↪ L3
    fn two_into_three() -> LatticeMorphism {
        LatticeMorphism::from_dual(FinLattice::chain(2), FinLattice::chain(3), vec![0, 0]).unwrap()
    }

    #[test]
    fn lying_over_examples() {
        let l3 = FinLattice::chain(3);
        assert!(is_lying_over(&LatticeMorphism::identity(&l3)).unwrap().holds);
        assert!(is_lying_over(&two_into_three()).unwrap().holds);
        // L3 → {0,1} sending m to 1: the two-element chain has one point,
        // mapped to the bottom point of L3
        let f = LatticeMorphism::from_dual(l3.clone(), FinLattice::chain(2), vec![0]).unwrap();
        assert_eq!(f.apply(&el(&l3, &[0])), f.cod.top());
        let r = is_lying_over(&f).unwrap();
        assert!(!r.holds);
        assert!(!f.is_injective());
        assert_eq!(r.counterexample, Some((vec![], vec!["p0".to_string()])));
    }

    #[test]
    fn going_up_examples() {
        let l3 = FinLattice::chain(3);
        assert!(is_going_up(&LatticeMorphism::identity(&l3), 64).unwrap().holds);
        assert!(is_going_down(&LatticeMorphism::identity(&l3), 64).unwrap().holds);
        let f = two_into_three();
        assert_eq!(is_going_up(&f, 64).unwrap().holds, going_brute(&f, 64, false).unwrap());
        assert!(is_going_up(&f, 64).unwrap().holds);
        assert_eq!(
            is_going_down(&f, 64).unwrap().holds,
            is_going_up(&f.opposite(), 64).unwrap().holds
        );
    }

    #[test]
    fn generator_images_must_respect_relations() {
        let dom = FinLattice::from_poset(Poset::new(vec!["a".into(), "b".into()], &[(0, 1)]).unwrap());
        let cod = FinLattice::boolean(2);
        let (p, q) = (el(&cod, &[0]), el(&cod, &[1]));
        // b is the top of the domain
        let bad = LatticeMorphism::from_generator_images(dom.clone(), cod.clone(), &[("a".into(), p.clone()), ("b".into(), q)]);
        assert!(bad.is_err());
        let top = cod.top();
        let good = LatticeMorphism::from_generator_images(dom, cod, &[("a".into(), p), ("b".into(), top)]).unwrap();
        assert!(good.check_homomorphism(64).unwrap());
    }

    #[test]
    fn relative_collapse_examples() {
        let l3 = FinLattice::chain(3);
        let m = el(&l3, &[0]);
        let c = elementary_chain(std::slice::from_ref(&m));
        match relative_chain_collapses(&two_into_three(), &c, 8).unwrap() {
            RelativeOutcome::NotFound { definitive, .. } => assert!(definitive),
            other => panic!("unexpected {other:?}"),
        }
        let id = LatticeMorphism::identity(&l3);
        match relative_chain_collapses(&id, &c, 8).unwrap() {
            RelativeOutcome::Collapses(w) => {
                assert_eq!(w.a_list, vec![m.clone()]);
                assert!(verify_relative_witness(&id, &c, &w));
            }
            other => panic!("unexpected {other:?}"),
        }
        let trivial = IdealisticChain::new(vec![crate::primes_chains::IdealisticPrime::new(vec![m.clone()], vec![m])]);
        match relative_chain_collapses(&id, &trivial, 0).unwrap() {
            RelativeOutcome::Collapses(w) => assert!(w.a_list.is_empty()),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(relative_dim(&two_into_three(), 8).unwrap(), 1);
        assert_eq!(relative_dim(&id, 8).unwrap(), 0);
    }
}
