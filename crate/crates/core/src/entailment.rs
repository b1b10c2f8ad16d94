//! Entailment relations on a finite set of generators.
//!
//! A presentation lists generators and axioms `⋀lhs ⊢ ⋁rhs`. Derivability
//! under reflexivity, monotonicity and cut is decided by searching for a
//! two-valued countermodel; [`entails_derivational`] is an independent
//! proof-search procedure used to cross-check it.

use crate::bits::Bits;
use crate::error::{KrullError, Result};
use std::collections::{HashMap, HashSet};

/// Default bound on the number of generators of a presentation.
pub const DEFAULT_GENERATOR_CAP: usize = 20;

/// A sequent `⋀lhs ⊢ ⋁rhs` over generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub lhs: Bits,
    pub rhs: Bits,
}

impl Sequent {
    pub fn new(lhs: Bits, rhs: Bits) -> Self {
        debug_assert_eq!(lhs.len(), rhs.len());
        Sequent { lhs, rhs }
    }

    /// Does the valuation `v` (set of true generators) satisfy the sequent?
    pub fn satisfied_by(&self, v: &Bits) -> bool {
        !self.lhs.is_subset(v) || self.rhs.intersects(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntailmentPresentation {
    generators: Vec<String>,
    axioms: Vec<Sequent>,
    cap: usize,
}

impl EntailmentPresentation {
    /// Builds a presentation from named axioms. Duplicate axioms are dropped.
    pub fn new<S: AsRef<str>>(generators: Vec<String>, axioms: &[(Vec<S>, Vec<S>)]) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(KrullError::input(format!("duplicate generator {g}")));
            }
        }
        let mut pres = EntailmentPresentation {
            generators,
            axioms: Vec::new(),
            cap: DEFAULT_GENERATOR_CAP,
        };
        for (l, r) in axioms {
            let s = pres.sequent(l, r)?;
            pres.push_axiom(s);
        }
        Ok(pres)
    }

    /// Presentation with generators indexed `0..n` and axioms given as sequents.
    pub fn from_sequents(generators: Vec<String>, axioms: Vec<Sequent>) -> Result<Self> {
        let n = generators.len();
        let mut pres = EntailmentPresentation {
            generators,
            axioms: Vec::new(),
            cap: DEFAULT_GENERATOR_CAP,
        };
        for s in axioms {
            if s.lhs.len() != n || s.rhs.len() != n {
                return Err(KrullError::input("axiom width does not match the generators"));
            }
            pres.push_axiom(s);
        }
        Ok(pres)
    }

    pub fn with_generator_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    fn push_axiom(&mut self, s: Sequent) {
        if !self.axioms.contains(&s) {
            self.axioms.push(s);
        }
    }

    pub fn add_axiom(&mut self, s: Sequent) -> Result<()> {
        if s.lhs.len() != self.len() || s.rhs.len() != self.len() {
            return Err(KrullError::input("axiom width does not match the generators"));
        }
        self.push_axiom(s);
        Ok(())
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn axioms(&self) -> &[Sequent] {
        &self.axioms
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| KrullError::input(format!("unknown generator {name}")))
    }

    /// Resolves names into a canonical sequent.
    pub fn sequent<S: AsRef<str>>(&self, lhs: &[S], rhs: &[S]) -> Result<Sequent> {
        let n = self.len();
        let mut l = Bits::zeros(n);
        for s in lhs {
            l.insert(self.index_of(s.as_ref())?);
        }
        let mut r = Bits::zeros(n);
        for s in rhs {
            r.insert(self.index_of(s.as_ref())?);
        }
        Ok(Sequent::new(l, r))
    }

    fn check_cap(&self) -> Result<()> {
        if self.len() > self.cap {
            Err(KrullError::resource(format!(
                "{} generators exceed the cap of {}",
                self.len(),
                self.cap
            )))
        } else {
            Ok(())
        }
    }

    fn check_width(&self, q: &Sequent) -> Result<()> {
        if q.lhs.len() != self.len() || q.rhs.len() != self.len() {
            Err(KrullError::input("sequent does not range over the presentation's generators"))
        } else {
            Ok(())
        }
    }

    /// Is the valuation a model of every axiom?
    pub fn is_model(&self, v: &Bits) -> bool {
        self.axioms.iter().all(|a| a.satisfied_by(v))
    }

    /// A model making every generator of `truth` true and every generator of
    /// `falsity` false, if one exists.
    pub fn find_model(&self, truth: &Bits, falsity: &Bits) -> Result<Option<Bits>> {
        self.check_cap()?;
        if truth.intersects(falsity) {
            return Ok(None);
        }
        let mut t = truth.clone();
        let mut f = falsity.clone();
        Ok(self.extend(0, &mut t, &mut f))
    }

    fn violated(&self, t: &Bits, f: &Bits) -> bool {
        self.axioms.iter().any(|a| a.lhs.is_subset(t) && a.rhs.is_subset(f))
    }

    fn extend(&self, next: usize, t: &mut Bits, f: &mut Bits) -> Option<Bits> {
        if self.violated(t, f) {
            return None;
        }
        let mut g = next;
        while g < self.len() && (t.contains(g) || f.contains(g)) {
            g += 1;
        }
        if g == self.len() {
            return Some(t.clone());
        }
        for val in [false, true] {
            if val {
                t.insert(g);
            } else {
                f.insert(g);
            }
            let r = self.extend(g + 1, t, f);
            t.remove(g);
            f.remove(g);
            if r.is_some() {
                return r;
            }
        }
        None
    }

    /// All models, sorted, failing once more than `cap` are found.
    pub fn models(&self, cap: usize) -> Result<Vec<Bits>> {
        self.check_cap()?;
        let n = self.len();
        let mut out = Vec::new();
        let mut t = Bits::zeros(n);
        let mut f = Bits::zeros(n);
        self.collect(0, &mut t, &mut f, &mut out, cap)?;
        out.sort();
        Ok(out)
    }

    fn collect(&self, g: usize, t: &mut Bits, f: &mut Bits, out: &mut Vec<Bits>, cap: usize) -> Result<()> {
        if self.violated(t, f) {
            return Ok(());
        }
        if g == self.len() {
            if out.len() >= cap {
                return Err(KrullError::resource(format!("more than {cap} models")));
            }
            out.push(t.clone());
            return Ok(());
        }
        f.insert(g);
        self.collect(g + 1, t, f, out, cap)?;
        f.remove(g);
        t.insert(g);
        self.collect(g + 1, t, f, out, cap)?;
        t.remove(g);
        Ok(())
    }
}

/// Is `q` derivable from the axioms? Decided by countermodel search.
pub fn entails_free(pres: &EntailmentPresentation, q: &Sequent) -> Result<bool> {
    pres.check_width(q)?;
    Ok(pres.find_model(&q.lhs, &q.rhs)?.is_none())
}

/// Exhaustive check over all `2^n` valuations.
pub fn entails_by_valuations(pres: &EntailmentPresentation, q: &Sequent) -> Result<bool> {
    pres.check_width(q)?;
    pres.check_cap()?;
    let n = pres.len();
    if n >= 32 {
        return Err(KrullError::resource("too many generators for exhaustive valuation checking"));
    }
    for mask in 0u64..(1u64 << n) {
        let v = Bits::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
        if pres.is_model(&v) && !q.satisfied_by(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Proof search for `A ≺ {{b} : b ∈ B}`: either `A` already meets `B`, or
/// some axiom `C ⊢ D` with `C ⊆ A` lets every branch `A, d` succeed.
pub fn entails_derivational(pres: &EntailmentPresentation, q: &Sequent) -> Result<bool> {
    pres.check_width(q)?;
    pres.check_cap()?;
    let mut memo = HashMap::new();
    Ok(derives(pres, &q.lhs, &q.rhs, &mut memo))
}

fn derives(pres: &EntailmentPresentation, a: &Bits, b: &Bits, memo: &mut HashMap<Bits, bool>) -> bool {
    if a.intersects(b) {
        return true;
    }
    if let Some(&r) = memo.get(a) {
        return r;
    }
    let mut ok = false;
    for ax in pres.axioms() {
        if !ax.lhs.is_subset(a) || ax.rhs.intersects(a) {
            continue;
        }
        if ax.rhs.iter().all(|d| {
            let mut a2 = a.clone();
            a2.insert(d);
            derives(pres, &a2, b, memo)
        }) {
            ok = true;
            break;
        }
    }
    memo.insert(a.clone(), ok);
    ok
}

/// A theory is consistent iff its lattice is nontrivial, i.e. `⊢` fails.
pub fn is_consistent(pres: &EntailmentPresentation) -> Result<bool> {
    let n = pres.len();
    Ok(!entails_free(pres, &Sequent::new(Bits::zeros(n), Bits::zeros(n)))?)
}

/// Default bound on the carrier size for law checking.
pub const DEFAULT_LAW_CARRIER_CAP: usize = 8;

/// An explicit relation on finite subsets of a carrier `0..n`. When the
/// carrier is a lattice, `meet`/`join` tables enable the distributivity checks.
#[derive(Clone, Debug)]
pub struct EntailmentTable {
    pub n: usize,
    pub holds: HashSet<(u64, u64)>,
    pub meet: Option<Vec<Vec<usize>>>,
    pub join: Option<Vec<Vec<usize>>>,
}

impl EntailmentTable {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (u64, u64)>) -> Self {
        EntailmentTable {
            n,
            holds: pairs.into_iter().collect(),
            meet: None,
            join: None,
        }
    }

    pub fn entails(&self, a: u64, b: u64) -> bool {
        self.holds.contains(&(a, b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawViolation {
    Reflexivity { a: usize },
    Monotonicity { lhs: u64, rhs: u64, weakened_lhs: u64, weakened_rhs: u64 },
    Cut { lhs: u64, rhs: u64, x: usize },
    JoinLeft { lhs: u64, rhs: u64, x: usize, y: usize },
    MeetRight { lhs: u64, rhs: u64, x: usize, y: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub violations: Vec<LawViolation>,
}

impl LawReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Reports every violation of reflexivity, monotonicity, cut and (for
/// lattice carriers) the two distributivity rules. Monotonicity is checked
/// one element at a time, which is equivalent to the general rule.
pub fn check_entailment_laws(table: &EntailmentTable, cap: usize) -> Result<LawReport> {
    let n = table.n;
    if n > cap || n > 16 {
        return Err(KrullError::resource(format!("carrier of size {n} exceeds the cap of {cap}")));
    }
    let full = 1u64 << n;
    let mut report = LawReport::default();
    for a in 0..n {
        if !table.entails(1 << a, 1 << a) {
            report.violations.push(LawViolation::Reflexivity { a });
        }
    }
    for l in 0..full {
        for r in 0..full {
            let holds = table.entails(l, r);
            for x in 0..n {
                let bit = 1u64 << x;
                if holds {
                    for (wl, wr) in [(l | bit, r), (l, r | bit)] {
                        if !table.entails(wl, wr) {
                            report.violations.push(LawViolation::Monotonicity {
                                lhs: l,
                                rhs: r,
                                weakened_lhs: wl,
                                weakened_rhs: wr,
                            });
                        }
                    }
                } else if table.entails(l | bit, r) && table.entails(l, r | bit) {
                    report.violations.push(LawViolation::Cut { lhs: l, rhs: r, x });
                }
            }
            if let (Some(meet), Some(join)) = (&table.meet, &table.join) {
                for x in 0..n {
                    for y in 0..n {
                        let left = table.entails(l | 1 << x, r) && table.entails(l | 1 << y, r);
                        if left != table.entails(l | 1 << join[x][y], r) {
                            report.violations.push(LawViolation::JoinLeft { lhs: l, rhs: r, x, y });
                        }
                        let right = table.entails(l, r | 1 << x) && table.entails(l, r | 1 << y);
                        if right != table.entails(l, r | 1 << meet[x][y]) {
                            report.violations.push(LawViolation::MeetRight { lhs: l, rhs: r, x, y });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// The relation `⋀A ≤ ⋁B` of a finite lattice, over all of its elements.
pub fn lattice_entailment_table(l: &crate::finlat::FinLattice, cap: usize) -> Result<EntailmentTable> {
    let elems = l.elements(cap.min(16))?; // at most 16 elements fit the u64 subset masks
    let n = elems.len();
    let index: HashMap<_, _> = elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
    let meet: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| index[&l.meet(&elems[i], &elems[j])]).collect())
        .collect();
    let join: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| index[&l.join(&elems[i], &elems[j])]).collect())
        .collect();
    let mut holds = HashSet::new();
    for a in 0u64..(1 << n) {
        let ma = l.meet_all((0..n).filter(|i| a >> i & 1 == 1).map(|i| &elems[i]));
        for b in 0u64..(1 << n) {
            let jb = l.join_all((0..n).filter(|i| b >> i & 1 == 1).map(|i| &elems[i]));
            if l.leq(&ma, &jb) {
                holds.insert((a, b));
            }
        }
    }
    Ok(EntailmentTable {
        n,
        holds,
        meet: Some(meet),
        join: Some(join),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &[&str], ax: &[(&[&str], &[&str])]) -> EntailmentPresentation {
        let axioms: Vec<(Vec<&str>, Vec<&str>)> = ax.iter().map(|(l, r)| (l.to_vec(), r.to_vec())).collect();
        EntailmentPresentation::new(gens.iter().map(|s| s.to_string()).collect(), &axioms).unwrap()
    }

    #[test]
    fn axiom_instance_and_converse() {
        let p = pres(&["a", "b"], &[(&["a"], &["b"])]);
        let q = p.sequent(&["a"], &["b"]).unwrap();
        assert!(entails_free(&p, &q).unwrap());
        let q = p.sequent(&["b"], &["a"]).unwrap();
        assert!(!entails_free(&p, &q).unwrap());
        assert!(!entails_derivational(&p, &q).unwrap());
    }

    #[test]
    fn contradictory_theory_collapses() {
        let p = pres(&["a"], &[(&[], &["a"]), (&["a"], &[])]);
        let q = p.sequent::<&str>(&[], &[]).unwrap();
        assert!(entails_free(&p, &q).unwrap());
        assert!(entails_derivational(&p, &q).unwrap());
        assert!(!is_consistent(&p).unwrap());
        assert!(is_consistent(&pres(&["a"], &[])).unwrap());
    }

    #[test]
    fn unknown_generator_is_an_input_error() {
        let p = pres(&["a"], &[]);
        assert!(matches!(p.sequent(&["z"], &[]), Err(KrullError::Input(_))));
    }

    #[test]
    fn generator_cap_is_enforced() {
        let gens: Vec<String> = (0..5).map(|i| format!("g{i}")).collect();
        let p = EntailmentPresentation::new::<&str>(gens, &[]).unwrap().with_generator_cap(4);
        assert!(matches!(is_consistent(&p), Err(KrullError::Resource(_))));
    }

    #[test]
    fn law_checker_flags_missing_reflexivity_and_cut() {
        // carrier {a=0, b=1}: only a ⊢ b
        let t = EntailmentTable::new(2, [(0b01, 0b10)]);
        let r = check_entailment_laws(&t, 8).unwrap();
        assert!(r.violations.contains(&LawViolation::Reflexivity { a: 0 }));
        // a,x ⊢ b and a ⊢ b,x without a ⊢ b (a=0, b=1, x=2)
        let t = EntailmentTable::new(3, [(0b101, 0b010), (0b001, 0b110)]);
        let r = check_entailment_laws(&t, 8).unwrap();
        assert!(r.violations.contains(&LawViolation::Cut { lhs: 0b001, rhs: 0b010, x: 2 }));
    }
}
