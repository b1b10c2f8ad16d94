//! Idealistic primes and chains over a finite distributive lattice.
//!
//! An idealistic prime `(J, U)` partially specifies a prime ideal: `J`
//! inside, `U` outside. A chain of them specifies an increasing chain of
//! primes. Collapse is decided through the ladder
//! `x₁,U₀ ⊢ J₀; x₂,U₁ ⊢ J₁,x₁; …; Uℓ ⊢ Jℓ,xℓ`, whose least solution is
//! found top-down with co-Heyting differences.

use crate::error::Result;
use crate::finlat::{Element, FinLattice};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IdealisticPrime {
    pub j: Vec<Element>,
    pub u: Vec<Element>,
}

impl IdealisticPrime {
    pub fn new(j: Vec<Element>, u: Vec<Element>) -> Self {
        IdealisticPrime { j, u }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealisticChain {
    pub levels: Vec<IdealisticPrime>,
}

impl IdealisticChain {
    /// A chain needs at least one level.
    pub fn new(levels: Vec<IdealisticPrime>) -> Self {
        assert!(!levels.is_empty(), "an idealistic chain has at least one level");
        IdealisticChain { levels }
    }

    /// `ℓ`, one less than the number of levels.
    pub fn order(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn with_j(&self, i: usize, x: Element) -> Self {
        let mut c = self.clone();
        c.levels[i].j.push(x);
        c
    }

    pub fn with_u(&self, i: usize, x: Element) -> Self {
        let mut c = self.clone();
        c.levels[i].u.push(x);
        c
    }
}

/// `x₁ … xℓ` solving the collapse ladder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitness {
    pub xs: Vec<Element>,
}

/// `a ≤ b` in the quotient `L/(J=0, U=1)`.
pub fn quotient_leq(l: &FinLattice, j: &[Element], u: &[Element], a: &Element, b: &Element) -> bool {
    let lhs = l.meet(a, &l.meet_all(u));
    let rhs = l.join(b, &l.join_all(j));
    l.leq(&lhs, &rhs)
}

pub fn proi_collapses(l: &FinLattice, p: &IdealisticPrime) -> bool {
    l.leq(&l.meet_all(&p.u), &l.join_all(&p.j))
}

/// Least-solution ladder with `us` on the left and `js` on the right.
/// Returns the greedy `x₁ … xℓ` and whether the bottom rung holds.
pub(crate) fn greedy_ladder(l: &FinLattice, us: &[Element], js: &[Element]) -> (Vec<Element>, bool) {
    let top = us.len() - 1;
    let mut xs = vec![l.bottom(); top];
    let mut carry = l.top();
    for i in (1..=top).rev() {
        let left = l.meet(&carry, &us[i]);
        let x = l.coheyting_diff(&left, &js[i]);
        xs[i - 1] = x.clone();
        carry = x;
    }
    let ok = l.leq(&l.meet(&carry, &us[0]), &js[0]);
    (xs, ok)
}

fn level_bounds(l: &FinLattice, c: &IdealisticChain) -> (Vec<Element>, Vec<Element>) {
    let us = c.levels.iter().map(|p| l.meet_all(&p.u)).collect();
    let js = c.levels.iter().map(|p| l.join_all(&p.j)).collect();
    (us, js)
}

/// A ladder witness when the chain collapses.
pub fn chain_collapses(l: &FinLattice, c: &IdealisticChain) -> Option<ChainWitness> {
    let (us, js) = level_bounds(l, c);
    let (xs, ok) = greedy_ladder(l, &us, &js);
    ok.then_some(ChainWitness { xs })
}

pub fn collapses(l: &FinLattice, c: &IdealisticChain) -> bool {
    chain_collapses(l, c).is_some()
}

/// Checks every rung of the ladder for the given witness.
pub fn verify_chain_witness(l: &FinLattice, c: &IdealisticChain, w: &ChainWitness) -> bool {
    let (us, js) = level_bounds(l, c);
    let top = c.order();
    if w.xs.len() != top || w.xs.iter().any(|x| !l.contains(x)) {
        return false;
    }
    (0..=top).all(|i| {
        let left = if i < top { l.meet(&w.xs[i], &us[i]) } else { us[i].clone() };
        let right = if i > 0 { l.join(&w.xs[i - 1], &js[i]) } else { js[i].clone() };
        l.leq(&left, &right)
    })
}

/// Collapse by exhaustive search over all element tuples; kept to
/// cross-check the greedy ladder.
pub fn chain_collapses_exhaustive(l: &FinLattice, c: &IdealisticChain, cap: usize) -> Result<Option<ChainWitness>> {
    let elems = l.elements(cap)?;
    let (us, js) = level_bounds(l, c);
    let top = c.order();
    let mut xs = vec![l.bottom(); top];
    fn go(
        l: &FinLattice,
        elems: &[Element],
        us: &[Element],
        js: &[Element],
        i: usize,
        carry: &Element,
        xs: &mut Vec<Element>,
    ) -> bool {
        if i == 0 {
            return l.leq(&l.meet(carry, &us[0]), &js[0]);
        }
        let left = l.meet(carry, &us[i]);
        for x in elems {
            if l.leq(&left, &l.join(x, &js[i])) {
                xs[i - 1] = x.clone();
                if go(l, elems, us, js, i - 1, x, xs) {
                    return true;
                }
            }
        }
        false
    }
    let found = go(l, &elems, &us, &js, top, &l.top(), &mut xs);
    Ok(found.then_some(ChainWitness { xs }))
}

/// Ideal/filter pair of a saturated idealistic prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedPrime {
    pub ideal: Vec<Element>,
    pub filter: Vec<Element>,
}

/// Minimal saturated refinement of a single idealistic prime.
pub fn saturate_proi(l: &FinLattice, p: &IdealisticPrime, cap: usize) -> Result<SaturatedPrime> {
    let c = saturate_chain(l, &IdealisticChain::new(vec![p.clone()]), cap)?;
    let level = c.levels.into_iter().next().expect("one level");
    Ok(SaturatedPrime {
        ideal: level.j,
        filter: level.u,
    })
}

/// Fixpoint of: `x` joins `Uᵢ` when adding it to `Jᵢ` collapses the chain,
/// and joins `Jᵢ` when adding it to `Uᵢ` does. Each level of the result
/// lists all of its members, sorted.
pub fn saturate_chain(l: &FinLattice, c: &IdealisticChain, cap: usize) -> Result<IdealisticChain> {
    let elems = l.elements(cap)?;
    let mut cur = c.clone();
    for level in cur.levels.iter_mut() {
        level.j.sort();
        level.j.dedup();
        level.u.sort();
        level.u.dedup();
    }
    loop {
        let mut changed = false;
        for i in 0..cur.levels.len() {
            for x in &elems {
                if cur.levels[i].u.binary_search(x).is_err() && collapses(l, &cur.with_j(i, x.clone())) {
                    let pos = cur.levels[i].u.binary_search(x).unwrap_err();
                    cur.levels[i].u.insert(pos, x.clone());
                    changed = true;
                }
                if cur.levels[i].j.binary_search(x).is_err() && collapses(l, &cur.with_u(i, x.clone())) {
                    let pos = cur.levels[i].j.binary_search(x).unwrap_err();
                    cur.levels[i].j.insert(pos, x.clone());
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(cur);
        }
    }
}

/// `(C ∪ {x→Jᵢ} collapses) ∧ (C ∪ {x→Uᵢ} collapses) ⇒ C collapses`.
pub fn simultaneous_collapse_check(l: &FinLattice, c: &IdealisticChain, i: usize, x: &Element) -> bool {
    let both = collapses(l, &c.with_j(i, x.clone())) && collapses(l, &c.with_u(i, x.clone()));
    !both || collapses(l, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Bits;

    fn el(l: &FinLattice, idx: &[usize]) -> Element {
        l.element(Bits::from_indices(l.num_points(), idx.iter().copied())).unwrap()
    }

    fn level(j: Vec<Element>, u: Vec<Element>) -> IdealisticPrime {
        IdealisticPrime::new(j, u)
    }

    #[test]
    fn quotients_of_the_three_chain() {
        let l = FinLattice::chain(3);
        let m = el(&l, &[0]);
        assert!(quotient_leq(&l, std::slice::from_ref(&m), &[], &m, &l.bottom()));
        assert!(quotient_leq(&l, &[], std::slice::from_ref(&m), &l.top(), &m));
        assert!(!quotient_leq(&l, &[], &[], &l.top(), &m));
    }

    #[test]
    fn single_prime_collapse() {
        let l = FinLattice::chain(3);
        let m = el(&l, &[0]);
        assert!(!proi_collapses(&l, &IdealisticPrime::default()));
        assert!(proi_collapses(&l, &level(vec![m.clone()], vec![m.clone()])));
        assert!(!proi_collapses(&l, &level(vec![m], vec![])));
    }

    #[test]
    fn elementary_chain_needs_a_complement() {
        let l = FinLattice::chain(3);
        let m = el(&l, &[0]);
        let c = IdealisticChain::new(vec![level(vec![], vec![m.clone()]), level(vec![m], vec![l.top()])]);
        assert!(chain_collapses(&l, &c).is_none());
        assert!(chain_collapses_exhaustive(&l, &c, 16).unwrap().is_none());

        let b = FinLattice::boolean(2);
        let (p, q) = (el(&b, &[0]), el(&b, &[1]));
        let c = IdealisticChain::new(vec![level(vec![], vec![p.clone()]), level(vec![p], vec![b.top()])]);
        let w = chain_collapses(&b, &c).unwrap();
        assert_eq!(w.xs, vec![q]);
        assert!(verify_chain_witness(&b, &c, &w));
    }

    #[test]
    fn saturation_examples() {
        let l = FinLattice::chain(3);
        let m = el(&l, &[0]);
        let s = saturate_proi(&l, &IdealisticPrime::default(), 16).unwrap();
        assert_eq!((s.ideal, s.filter), (vec![l.bottom()], vec![l.top()]));
        let s = saturate_proi(&l, &level(vec![m.clone()], vec![]), 16).unwrap();
        assert_eq!(s.ideal.len(), 2);
        assert_eq!(s.filter, vec![l.top()]);

        let c = IdealisticChain::new(vec![level(vec![], vec![m.clone()]), level(vec![m.clone()], vec![l.top()])]);
        let sat = saturate_chain(&l, &c, 16).unwrap();
        assert_eq!(sat.levels[0].j, vec![l.bottom()]);
        assert_eq!(sat.levels[0].u.len(), 2);
        assert_eq!(sat.levels[1].j.len(), 2);
        assert_eq!(sat.levels[1].u, vec![l.top()]);
        assert_eq!(saturate_chain(&l, &sat, 16).unwrap(), sat);

        let bad = IdealisticChain::new(vec![level(vec![m.clone()], vec![m])]);
        let sat = saturate_chain(&l, &bad, 16).unwrap();
        assert_eq!(sat.levels[0].j.len(), 3);
        assert_eq!(sat.levels[0].u.len(), 3);
    }
}
