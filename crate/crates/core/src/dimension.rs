//! Krull dimension of a finite distributive lattice.
//!
//! `dim L ≤ ℓ` when every elementary chain on `ℓ + 1` elements collapses,
//! i.e. every `x₀ … xℓ` has a complementary sequence `y₀ … yℓ`. The same
//! number is read off the Boolean envelope: `dim L ≤ ℓ − 1` iff every
//! envelope element is `(a₁−a₂)∨(a₃−a₄)∨⋯` for some `a₁ ≥ ⋯ ≥ aℓ` in `L`.

use crate::bits::Bits;
use crate::error::{KrullError, Result};
use crate::finlat::{Element, FinLattice};
use crate::primes_chains::{IdealisticChain, IdealisticPrime};

/// `((0; x₀), (x₀; x₁), …, (xℓ; 1))`, with the implicit `0` and `1` left out.
pub fn elementary_chain(xs: &[Element]) -> IdealisticChain {
    let mut levels = Vec::with_capacity(xs.len() + 1);
    for i in 0..=xs.len() {
        let j = if i > 0 { vec![xs[i - 1].clone()] } else { vec![] };
        let u = if i < xs.len() { vec![xs[i].clone()] } else { vec![] };
        levels.push(IdealisticPrime::new(j, u));
    }
    IdealisticChain::new(levels)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementaryPair {
    pub xs: Vec<Element>,
    pub ys: Vec<Element>,
}

impl ComplementaryPair {
    /// `1 ≤ yℓ ∨ xℓ`, `yᵢ ∧ xᵢ ≤ yᵢ₋₁ ∨ xᵢ₋₁`, `y₀ ∧ x₀ = 0`.
    pub fn verify(&self, l: &FinLattice) -> bool {
        is_complementary(l, &self.xs, &self.ys)
    }
}

pub fn is_complementary(l: &FinLattice, xs: &[Element], ys: &[Element]) -> bool {
    if xs.len() != ys.len() || xs.is_empty() {
        return xs.is_empty() && ys.is_empty() && l.is_trivial();
    }
    let n = xs.len() - 1;
    if l.join(&ys[n], &xs[n]) != l.top() || l.meet(&ys[0], &xs[0]) != l.bottom() {
        return false;
    }
    (1..=n).all(|i| l.leq(&l.meet(&ys[i], &xs[i]), &l.join(&ys[i - 1], &xs[i - 1])))
}

/// The least complementary sequence, if one exists.
pub fn greedy_complement(l: &FinLattice, xs: &[Element]) -> Option<Vec<Element>> {
    let n = xs.len();
    if n == 0 {
        return l.is_trivial().then(Vec::new);
    }
    let mut ys = vec![l.bottom(); n];
    ys[n - 1] = l.coheyting_diff(&l.top(), &xs[n - 1]);
    for i in (1..n).rev() {
        ys[i - 1] = l.coheyting_diff(&l.meet(&ys[i], &xs[i]), &xs[i - 1]);
    }
    (l.meet(&ys[0], &xs[0]) == l.bottom()).then_some(ys)
}

/// Which tuples `dim_leq` quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TupleSpace {
    /// Join-irreducibles; they generate the lattice.
    #[default]
    Irreducibles,
    /// The named generators of the lattice.
    Generators,
    /// Every element.
    AllElements,
    /// Increasing tuples `x₀ ≤ ⋯ ≤ xℓ` of elements.
    IncreasingElements,
}

#[derive(Clone, Debug, Default)]
pub struct DimOptions {
    pub space: TupleSpace,
    pub collect_witnesses: bool,
    pub element_cap: usize,
}

impl DimOptions {
    pub fn new() -> Self {
        DimOptions {
            space: TupleSpace::Irreducibles,
            collect_witnesses: false,
            element_cap: crate::finlat::DEFAULT_ELEMENT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimReport {
    pub holds: bool,
    pub witnesses: Vec<ComplementaryPair>,
    /// A tuple whose elementary chain does not collapse.
    pub counterexample: Option<Vec<Element>>,
}

/// Is `dim L ≤ ℓ`? `ℓ = -1` asks whether `L` is trivial.
pub fn dim_leq(l: &FinLattice, ell: isize, opts: &DimOptions) -> Result<DimReport> {
    if ell < -1 {
        return Err(KrullError::input("dimension bound below -1"));
    }
    if ell == -1 {
        return Ok(DimReport {
            holds: l.is_trivial(),
            witnesses: vec![],
            counterexample: (!l.is_trivial()).then(Vec::new),
        });
    }
    let len = ell as usize + 1;
    let pool: Vec<Element> = match opts.space {
        TupleSpace::Irreducibles => l.irreducibles(),
        TupleSpace::Generators => l.generators().iter().map(|(_, e)| e.clone()).collect(),
        TupleSpace::AllElements | TupleSpace::IncreasingElements => l.elements(opts.element_cap)?,
    };
    let increasing = opts.space == TupleSpace::IncreasingElements;
    let mut report = DimReport {
        holds: true,
        witnesses: vec![],
        counterexample: None,
    };
    if pool.is_empty() {
        // only the trivial lattice has no irreducibles; every chain collapses
        return Ok(report);
    }
    let mut idx = vec![0usize; len];
    loop {
        let xs: Vec<Element> = idx.iter().map(|&i| pool[i].clone()).collect();
        let ok = !increasing || xs.windows(2).all(|w| l.leq(&w[0], &w[1]));
        if ok {
            match greedy_complement(l, &xs) {
                Some(ys) => {
                    if opts.collect_witnesses {
                        report.witnesses.push(ComplementaryPair { xs, ys });
                    }
                }
                None => {
                    report.holds = false;
                    report.counterexample = Some(xs);
                    return Ok(report);
                }
            }
        }
        // odometer
        let mut k = len;
        loop {
            if k == 0 {
                return Ok(report);
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

/// Least `ℓ` with `dim L ≤ ℓ`.
pub fn krull_dim(l: &FinLattice, opts: &DimOptions) -> Result<isize> {
    let mut ell = -1;
    loop {
        if dim_leq(l, ell, opts)?.holds {
            return Ok(ell);
        }
        ell += 1;
        if ell > l.num_points() as isize {
            return Err(KrullError::contract("dimension exceeds the number of irreducibles"));
        }
    }
}

/// `bℓ = aℓ`, `bᵢ = bᵢ₊₁ ∧ aᵢ`: an increasing complementary sequence for
/// increasing `xs`.
pub fn complementary_monotone(l: &FinLattice, xs: &[Element], a: &[Element]) -> Result<Vec<Element>> {
    if !xs.windows(2).all(|w| l.leq(&w[0], &w[1])) {
        return Err(KrullError::contract("xs is not increasing"));
    }
    if !is_complementary(l, xs, a) {
        return Err(KrullError::contract("the sequences are not complementary"));
    }
    let n = a.len();
    let mut b = a.to_vec();
    for i in (0..n.saturating_sub(1)).rev() {
        b[i] = l.meet(&b[i + 1], &a[i]);
    }
    if !is_complementary(l, xs, &b) {
        return Err(KrullError::contract("monotone sequence failed to be complementary"));
    }
    Ok(b)
}

/// Default bound on the number of envelope elements.
pub const DEFAULT_ENVELOPE_CAP: usize = 1 << 12;

/// The free Boolean algebra over `L`: subsets of the irreducibles, with
/// `L` embedded by reading each downset as a plain subset.
#[derive(Clone, Debug)]
pub struct BooleanEnvelope {
    pub lattice: FinLattice,
}

impl BooleanEnvelope {
    pub fn size_log2(&self) -> usize {
        self.lattice.num_points()
    }

    pub fn embed(&self, x: &Element) -> Bits {
        x.bits().clone()
    }

    /// `a − b` in the envelope.
    pub fn difference(&self, a: &Element, b: &Element) -> Bits {
        a.bits().minus(b.bits())
    }
}

pub fn boolean_envelope(l: &FinLattice) -> BooleanEnvelope {
    BooleanEnvelope { lattice: l.clone() }
}

/// Decreasing `a₁ ≥ a₂ ≥ ⋯` denoting `(a₁−a₂)∨(a₃−a₄)∨⋯`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceChain {
    pub terms: Vec<Element>,
}

impl DifferenceChain {
    pub fn evaluate(&self, env: &BooleanEnvelope) -> Bits {
        let n = env.lattice.num_points();
        let mut acc = Bits::zeros(n);
        for pair in self.terms.chunks(2) {
            let d = match pair {
                [a, b] => env.difference(a, b),
                [a] => env.embed(a),
                _ => unreachable!(),
            };
            acc.or_assign(&d);
        }
        acc
    }

    pub fn is_decreasing(&self, l: &FinLattice) -> bool {
        self.terms.windows(2).all(|w| l.leq(&w[1], &w[0]))
    }
}

/// Reachability tables for difference chains: `reach[k][a]` is the set of
/// envelope elements written by a chain of length exactly `k` whose first
/// term is at most element `a`.
pub struct EspanolTables {
    env: BooleanEnvelope,
    elems: Vec<Element>,
    masks: Vec<usize>,
    reach: Vec<Vec<Bits>>,
    size: usize,
}

impl EspanolTables {
    pub fn new(env: &BooleanEnvelope, cap: usize) -> Result<Self> {
        let n = env.lattice.num_points();
        if n >= usize::BITS as usize - 1 || (1usize << n) > cap {
            return Err(KrullError::resource(format!(
                "envelope of 2^{n} elements exceeds the cap of {cap}"
            )));
        }
        let elems = env.lattice.elements(cap)?;
        let masks = elems.iter().map(|e| to_mask(e.bits())).collect();
        let mut t = EspanolTables {
            env: env.clone(),
            elems,
            masks,
            reach: vec![],
            size: 1 << n,
        };
        let ne = t.elems.len();
        let mut zero = Bits::zeros(t.size);
        zero.insert(0);
        t.reach.push(vec![zero; ne]);
        let one: Vec<Bits> = (0..ne)
            .map(|b| Bits::from_indices(t.size, (0..ne).filter(|&a| t.le(a, b)).map(|a| t.masks[a])))
            .collect();
        t.reach.push(one);
        Ok(t)
    }

    fn le(&self, a: usize, b: usize) -> bool {
        self.masks[a] & !self.masks[b] == 0
    }

    fn extend_to(&mut self, k: usize) {
        let ne = self.elems.len();
        while self.reach.len() <= k {
            let k2 = self.reach.len() - 2;
            // chains starting exactly at a
            let mut exact: Vec<Bits> = Vec::with_capacity(ne);
            for a in 0..ne {
                let mut s = Bits::zeros(self.size);
                for c in 0..ne {
                    if !self.le(c, a) {
                        continue;
                    }
                    let head = self.masks[a] & !self.masks[c];
                    for r in self.reach[k2][c].iter() {
                        s.insert(head | r);
                    }
                }
                exact.push(s);
            }
            let next: Vec<Bits> = (0..ne)
                .map(|b| {
                    let mut s = Bits::zeros(self.size);
                    for (a, ex) in exact.iter().enumerate() {
                        if self.le(a, b) {
                            s.or_assign(ex);
                        }
                    }
                    s
                })
                .collect();
            self.reach.push(next);
        }
    }

    fn top_index(&self) -> usize {
        self.elems.len() - 1
    }

    /// Least `k` with `e` written by a chain of length `k`.
    pub fn min_length(&mut self, e: &Bits) -> usize {
        let m = to_mask(e);
        let top = self.top_index();
        let mut k = 0;
        loop {
            self.extend_to(k);
            if self.reach[k][top].contains(m) {
                return k;
            }
            k += 1;
        }
    }

    /// A chain of minimal length for `e`.
    pub fn normal_form(&mut self, e: &Bits) -> DifferenceChain {
        let k = self.min_length(e);
        let mut terms = Vec::with_capacity(k);
        self.rebuild(to_mask(e), k, self.top_index(), &mut terms);
        DifferenceChain { terms }
    }

    fn rebuild(&self, e: usize, k: usize, bound: usize, out: &mut Vec<Element>) {
        if k == 0 {
            return;
        }
        let ne = self.elems.len();
        if k == 1 {
            let a = (0..ne).find(|&a| self.masks[a] == e && self.le(a, bound)).expect("reachable");
            out.push(self.elems[a].clone());
            return;
        }
        for a in 0..ne {
            if !self.le(a, bound) {
                continue;
            }
            for c in 0..ne {
                if !self.le(c, a) {
                    continue;
                }
                let (ma, mc) = (self.masks[a], self.masks[c]);
                if e & !mc == ma & !mc && self.reach[k - 2][c].contains(e & mc) {
                    out.push(self.elems[a].clone());
                    out.push(self.elems[c].clone());
                    self.rebuild(e & mc, k - 2, c, out);
                    return;
                }
            }
        }
        unreachable!("element marked reachable has no decomposition");
    }

    pub fn envelope(&self) -> &BooleanEnvelope {
        &self.env
    }
}

fn to_mask(b: &Bits) -> usize {
    b.iter().fold(0, |m, i| m | 1 << i)
}

fn from_mask(n: usize, m: usize) -> Bits {
    Bits::from_indices(n, (0..n).filter(|i| m >> i & 1 == 1))
}

/// Minimal-length difference chain for `e`.
pub fn espanol_normal_form(env: &BooleanEnvelope, e: &Bits, cap: usize) -> Result<DifferenceChain> {
    if e.len() != env.lattice.num_points() {
        return Err(KrullError::input("envelope element has the wrong width"));
    }
    Ok(EspanolTables::new(env, cap)?.normal_form(e))
}

/// `max_e (minimal chain length of e) − 1`.
pub fn dim_espanol(l: &FinLattice, cap: usize) -> Result<isize> {
    let env = boolean_envelope(l);
    let mut t = EspanolTables::new(&env, cap)?;
    let n = l.num_points();
    let mut worst = 0;
    for m in 0..(1usize << n) {
        worst = worst.max(t.min_length(&from_mask(n, m)));
    }
    Ok(worst as isize - 1)
}

/// A chain of length `k` exists for `e` iff some decreasing `k`-tuple
/// evaluates to it; exhaustive, for small lattices.
pub fn espanol_length_exhaustive(env: &BooleanEnvelope, e: &Bits, k: usize, cap: usize) -> Result<bool> {
    let l = &env.lattice;
    let elems = l.elements(cap)?;
    fn go(env: &BooleanEnvelope, elems: &[Element], terms: &mut Vec<Element>, k: usize, e: &Bits) -> bool {
        if terms.len() == k {
            return DifferenceChain { terms: terms.clone() }.evaluate(env) == *e;
        }
        for x in elems {
            if terms.last().is_none_or(|t| env.lattice.leq(x, t)) {
                terms.push(x.clone());
                if go(env, elems, terms, k, e) {
                    return true;
                }
                terms.pop();
            }
        }
        false
    }
    Ok(go(env, &elems, &mut Vec::new(), k, e))
}
