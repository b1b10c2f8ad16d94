//! Finitely generated ideals, radical membership and saturation.
//!
//! `ℤ` and `ℤ/n` are handled by gcd arithmetic: every ideal is principal.
//! Polynomial kinds go through Gröbner bases; radicals use Rabinowitsch's
//! extra variable and saturations eliminate it.

use super::groebner::{GroebnerBasis, MonoOrder};
use super::poly::Poly;
use super::ring::{CompRing, Elem};
use crate::error::{KrullError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

#[derive(Clone, Debug)]
enum IdealForm {
    /// Nonnegative generator; for `ℤ/n` a divisor of `n`.
    Principal(BigInt),
    /// Basis in the underlying polynomial ring, modulus included.
    Basis(GroebnerBasis),
}

#[derive(Clone, Debug)]
pub struct FGIdeal {
    ring: CompRing,
    gens: Vec<Elem>,
    form: OnceLock<IdealForm>,
}

/// Repeatedly divides `d` by `gcd(d, g)`: the part of `d` coprime to `g`.
/// `d` must be nonzero.
pub(crate) fn strip(d: &BigInt, g: &BigInt) -> BigInt {
    let mut d = d.abs();
    if g.is_zero() {
        return BigInt::one();
    }
    loop {
        let c = d.gcd(g);
        if c.is_one() {
            return d;
        }
        d /= c;
    }
}

impl FGIdeal {
    pub fn new(ring: &CompRing, gens: Vec<Elem>) -> Self {
        FGIdeal {
            ring: ring.clone(),
            gens,
            form: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &CompRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    fn form(&self) -> &IdealForm {
        self.form.get_or_init(|| match &self.ring {
            CompRing::Integers => IdealForm::Principal(self.gens.iter().fold(BigInt::zero(), |g, x| g.gcd(x.as_int()))),
            CompRing::IntegersMod(n) => IdealForm::Principal(self.gens.iter().fold(n.clone(), |g, x| g.gcd(x.as_int()))),
            CompRing::Poly(r) => {
                let gens: Vec<Poly> = self.gens.iter().map(|g| g.as_poly().clone()).collect();
                IdealForm::Basis(GroebnerBasis::compute(&r.field, r.nvars(), &gens, MonoOrder::GrevLex))
            }
            CompRing::Quotient(q) => {
                let mut gens: Vec<Poly> = q.basis.basis().to_vec();
                gens.extend(self.gens.iter().map(|g| g.as_poly().clone()));
                IdealForm::Basis(GroebnerBasis::compute(&q.base.field, q.base.nvars(), &gens, MonoOrder::GrevLex))
            }
        })
    }

    /// The nonnegative generator for `ℤ` and `ℤ/n`.
    pub fn principal_generator(&self) -> Option<&BigInt> {
        match self.form() {
            IdealForm::Principal(d) => Some(d),
            IdealForm::Basis(_) => None,
        }
    }

    /// The grevlex basis for polynomial kinds; in a quotient it lives in
    /// the underlying polynomial ring and contains the modulus.
    pub fn basis(&self) -> Option<&GroebnerBasis> {
        match self.form() {
            IdealForm::Basis(b) => Some(b),
            IdealForm::Principal(_) => None,
        }
    }

    pub fn contains(&self, f: &Elem) -> bool {
        match self.form() {
            IdealForm::Principal(d) => {
                if d.is_zero() {
                    f.as_int().is_zero()
                } else {
                    f.as_int().mod_floor(d).is_zero()
                }
            }
            IdealForm::Basis(b) => b.contains(f.as_poly()),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self.form() {
            IdealForm::Principal(d) => d.is_one(),
            IdealForm::Basis(b) => b.is_unit(),
        }
    }

    /// Canonical representative of `f` modulo the ideal.
    pub fn reduce(&self, f: &Elem) -> Elem {
        match self.form() {
            IdealForm::Principal(d) if d.is_zero() => f.clone(),
            IdealForm::Principal(d) => Elem::Int(f.as_int().mod_floor(d)),
            IdealForm::Basis(b) => Elem::Poly(b.normal_form(f.as_poly())),
        }
    }

    /// `I + ⟨more⟩`.
    pub fn extend(&self, more: &[Elem]) -> FGIdeal {
        let mut gens = self.gens.clone();
        gens.extend(more.iter().cloned());
        FGIdeal::new(&self.ring, gens)
    }
}

/// Reduced basis of the ideal under `order`. Polynomial kinds only.
pub fn groebner(ideal: &FGIdeal, order: MonoOrder) -> Result<GroebnerBasis> {
    let (r, mut gens) = match ideal.ring() {
        CompRing::Poly(r) => (r, Vec::new()),
        CompRing::Quotient(q) => (&q.base, q.basis.basis().to_vec()),
        other => return Err(KrullError::unsupported(format!("Gröbner bases need a polynomial ring, not {other}"))),
    };
    gens.extend(ideal.generators().iter().map(|g| g.as_poly().clone()));
    Ok(GroebnerBasis::compute(&r.field, r.nvars(), &gens, order))
}

pub fn normal_form(f: &Poly, basis: &GroebnerBasis) -> Poly {
    basis.normal_form(f)
}

pub fn ideal_member(f: &Elem, ideal: &FGIdeal) -> bool {
    ideal.contains(f)
}

/// Generators of `I + ⟨1 − t·g⟩` in the ring with `t` prepended.
fn rabinowitsch(ideal: &FGIdeal, g: &Elem) -> (super::ring::PolyRing, Vec<Poly>) {
    let base = ideal.ring().poly_ring().expect("polynomial kind");
    let ext = base.with_front_var();
    let n = ext.nvars();
    let f = &ext.field;
    let mut gens: Vec<Poly> = match ideal.ring() {
        CompRing::Quotient(q) => q.basis.basis().iter().map(|p| p.extend_front(1)).collect(),
        _ => Vec::new(),
    };
    gens.extend(ideal.generators().iter().map(|p| p.as_poly().extend_front(1)));
    let tg = Poly::var(n, 0).mul(&g.as_poly().extend_front(1), f);
    gens.push(Poly::one(n).sub(&tg, f));
    (ext, gens)
}

/// `f ∈ √I`.
pub fn radical_member(f: &Elem, ideal: &FGIdeal) -> bool {
    match ideal.ring() {
        CompRing::Integers | CompRing::IntegersMod(_) => {
            let d = ideal.principal_generator().expect("principal");
            if d.is_zero() {
                f.as_int().is_zero()
            } else {
                strip(d, f.as_int()).is_one()
            }
        }
        _ => {
            if ideal.contains(f) {
                return true;
            }
            let (ext, gens) = rabinowitsch(ideal, f);
            GroebnerBasis::compute(&ext.field, ext.nvars(), &gens, MonoOrder::GrevLex).is_unit()
        }
    }
}

/// `(I : g^∞)`.
pub fn saturation(ideal: &FGIdeal, g: &Elem) -> FGIdeal {
    let ring = ideal.ring();
    match ring {
        CompRing::Integers | CompRing::IntegersMod(_) => {
            let d = ideal.principal_generator().expect("principal");
            let h = if ring.is_zero(g) {
                BigInt::one()
            } else if d.is_zero() {
                BigInt::zero()
            } else {
                strip(d, g.as_int())
            };
            FGIdeal::new(ring, vec![ring.from_int(h)])
        }
        _ => {
            if ring.is_one(g) || ideal.is_unit() {
                return ideal.clone();
            }
            let (ext, gens) = rabinowitsch(ideal, g);
            let gb = GroebnerBasis::compute(&ext.field, ext.nvars(), &gens, MonoOrder::Block(1));
            let elim: Vec<Elem> = gb
                .basis()
                .iter()
                .filter_map(|p| p.drop_front(1))
                .map(|p| ring.from_poly(p))
                .filter(|e| !ring.is_zero(e))
                .collect();
            FGIdeal::new(ring, elim)
        }
    }
}

/// `U ⊢ J` in the Zariski lattice: `∏U ∈ √⟨J⟩`.
pub fn zar_entails(ring: &CompRing, u: &[Elem], j: &[Elem]) -> bool {
    radical_member(&ring.product(u), &FGIdeal::new(ring, j.to_vec()))
}

/// `√⟨generators⟩` as an element of the Zariski lattice.
#[derive(Clone, Debug)]
pub struct ZarElement {
    pub generators: Vec<Elem>,
}

impl ZarElement {
    pub fn new(generators: Vec<Elem>) -> Self {
        ZarElement { generators }
    }

    pub fn leq(&self, ring: &CompRing, other: &ZarElement) -> bool {
        let i = FGIdeal::new(ring, other.generators.clone());
        self.generators.iter().all(|g| radical_member(g, &i))
    }

    pub fn equals(&self, ring: &CompRing, other: &ZarElement) -> bool {
        self.leq(ring, other) && other.leq(ring, self)
    }

    pub fn join(&self, other: &ZarElement) -> ZarElement {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        ZarElement::new(g)
    }

    /// Pairwise products generate the meet.
    pub fn meet(&self, ring: &CompRing, other: &ZarElement) -> ZarElement {
        let g = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| ring.mul(a, b)))
            .collect();
        ZarElement::new(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz(n: i64) -> Elem {
        CompRing::Integers.from_int(n)
    }

    #[test]
    fn integer_saturation_and_radicals() {
        let z = CompRing::Integers;
        let six = FGIdeal::new(&z, vec![zz(6)]);
        assert_eq!(saturation(&six, &zz(10)).principal_generator(), Some(&BigInt::from(3)));
        assert!(!radical_member(&zz(2), &six));
        assert!(radical_member(&zz(30), &six));
        assert!(radical_member(&zz(0), &six));
        let zero = FGIdeal::new(&z, vec![]);
        assert_eq!(saturation(&zero, &zz(6)).principal_generator(), Some(&BigInt::zero()));
        assert!(saturation(&zero, &zz(0)).is_unit());
        assert!(zar_entails(&z, &[zz(6)], &[zz(2)]));
        assert!(!zar_entails(&z, &[zz(2)], &[zz(6)]));
    }

    #[test]
    fn residues_mod_n() {
        let r = CompRing::integers_mod(12).unwrap();
        let two = FGIdeal::new(&r, vec![r.from_int(2)]);
        assert!(radical_member(&r.from_int(6), &two));
        assert!(!radical_member(&r.from_int(3), &two));
        // Nilpotents lie in the radical of zero.
        assert!(radical_member(&r.from_int(6), &FGIdeal::new(&r, vec![])));
        let sat = saturation(&FGIdeal::new(&r, vec![r.from_int(4)]), &r.from_int(2));
        assert!(sat.is_unit());
    }

    #[test]
    fn polynomial_radicals() {
        let r = CompRing::parse("poly(QQ,[x,y])").unwrap();
        let e = |s: &str| r.parse_elem(s).unwrap();
        assert!(radical_member(&e("x"), &FGIdeal::new(&r, vec![e("x^2")])));
        assert!(!radical_member(&e("y"), &FGIdeal::new(&r, vec![e("x^2")])));
        assert!(zar_entails(&r, &[e("x")], &[e("x^2*y"), e("x^3")]));
        let sat = saturation(&FGIdeal::new(&r, vec![e("x*y")]), &e("y"));
        assert!(sat.contains(&e("x")) && !sat.contains(&e("y")));
    }

    #[test]
    fn quotient_ring_ideals() {
        let r = CompRing::parse("quot(poly(QQ,[x]),[x^2])").unwrap();
        let x = r.var("x").unwrap();
        assert!(radical_member(&x, &FGIdeal::new(&r, vec![])));
        let sat = saturation(&FGIdeal::new(&r, vec![]), &x);
        assert!(sat.is_unit());
    }
}
