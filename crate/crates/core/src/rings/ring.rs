//! Computable commutative rings and their elements.

use super::field::Field;
use super::groebner::{GroebnerBasis, MonoOrder};
use super::parse;
use super::poly::Poly;
use crate::error::{KrullError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A polynomial ring over a coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: Field,
    pub vars: Vec<String>,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if !parse::is_identifier(v) {
                return Err(KrullError::input(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(KrullError::input(format!("variable `{v}` listed twice")));
            }
        }
        Ok(PolyRing { field, vars })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// The same ring with one fresh variable in front.
    pub(crate) fn with_front_var(&self) -> PolyRing {
        let mut name = "t".to_string();
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = vec![name];
        vars.extend(self.vars.iter().cloned());
        PolyRing {
            field: self.field.clone(),
            vars,
        }
    }
}

/// `base / ⟨modulus⟩`, with a grevlex basis used for normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    pub base: PolyRing,
    pub modulus: Vec<Poly>,
    pub basis: GroebnerBasis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompRing {
    Integers,
    /// `ℤ/n` with `n ≥ 1`.
    IntegersMod(BigInt),
    Poly(PolyRing),
    Quotient(Box<QuotientRing>),
}

/// A ring element. Integers for `ℤ` and `ℤ/n` (residues in `0..n`),
/// canonical polynomials otherwise (normal forms in quotients).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Poly(Poly),
}

impl Elem {
    pub fn as_int(&self) -> &BigInt {
        match self {
            Elem::Int(n) => n,
            Elem::Poly(_) => panic!("expected an integer element"),
        }
    }

    pub fn as_poly(&self) -> &Poly {
        match self {
            Elem::Poly(p) => p,
            Elem::Int(_) => panic!("expected a polynomial element"),
        }
    }
}

impl CompRing {
    pub fn integers() -> Self {
        CompRing::Integers
    }

    pub fn integers_mod(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if n < BigInt::one() {
            return Err(KrullError::input(format!("ZZmod({n}): modulus must be positive")));
        }
        Ok(CompRing::IntegersMod(n))
    }

    pub fn poly(field: Field, vars: &[&str]) -> Result<Self> {
        Ok(CompRing::Poly(PolyRing::new(field, vars.iter().map(|v| v.to_string()).collect())?))
    }

    pub fn quotient(base: PolyRing, modulus: Vec<Poly>) -> Result<Self> {
        if modulus.iter().any(|p| p.nvars() != base.nvars()) {
            return Err(KrullError::input("modulus polynomial lives in a different ring"));
        }
        let basis = GroebnerBasis::compute(&base.field, base.nvars(), &modulus, MonoOrder::GrevLex);
        Ok(CompRing::Quotient(Box::new(QuotientRing { base, modulus, basis })))
    }

    /// Parses a ring spec such as `quot(poly(QQ,[t]),[t^2+1])`.
    pub fn parse(spec: &str) -> Result<Self> {
        parse::parse_ring(spec).map_err(|e| e.into_krull(spec))
    }

    pub fn poly_ring(&self) -> Option<&PolyRing> {
        match self {
            CompRing::Poly(r) => Some(r),
            CompRing::Quotient(q) => Some(&q.base),
            _ => None,
        }
    }

    pub fn field(&self) -> Option<&Field> {
        self.poly_ring().map(|r| &r.field)
    }

    pub fn vars(&self) -> &[String] {
        self.poly_ring().map(|r| r.vars.as_slice()).unwrap_or(&[])
    }

    fn nvars(&self) -> usize {
        self.vars().len()
    }

    fn reduce_int(&self, n: BigInt) -> BigInt {
        match self {
            CompRing::IntegersMod(m) => n.mod_floor(m),
            _ => n,
        }
    }

    fn reduce_poly(&self, p: Poly) -> Poly {
        match self {
            CompRing::Quotient(q) => q.basis.normal_form(&p),
            _ => p,
        }
    }

    /// Brings an element of the right shape into canonical form.
    pub fn normalize(&self, e: Elem) -> Elem {
        match e {
            Elem::Int(n) => Elem::Int(self.reduce_int(n)),
            Elem::Poly(p) => Elem::Poly(self.reduce_poly(p)),
        }
    }

    /// Wraps a polynomial of the underlying polynomial ring.
    pub fn from_poly(&self, p: Poly) -> Elem {
        assert_eq!(p.nvars(), self.nvars(), "polynomial width");
        Elem::Poly(self.reduce_poly(p))
    }

    pub fn zero(&self) -> Elem {
        self.from_int(0)
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> Elem {
        let n = n.into();
        match self.poly_ring() {
            Some(r) => self.from_poly(Poly::constant(r.nvars(), r.field.from_int(n))),
            None => Elem::Int(self.reduce_int(n)),
        }
    }

    /// A field constant; integers only for `ℤ` and `ℤ/n`.
    pub fn from_scalar(&self, c: &BigRational) -> Option<Elem> {
        match self.poly_ring() {
            Some(r) => {
                let c = r.field.try_norm(c)?;
                Some(self.from_poly(Poly::constant(r.nvars(), c)))
            }
            None => c.is_integer().then(|| self.from_int(c.to_integer())),
        }
    }

    pub fn var(&self, name: &str) -> Result<Elem> {
        let r = self
            .poly_ring()
            .ok_or_else(|| KrullError::input(format!("{self} has no variables (found `{name}`)")))?;
        let i = r
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| KrullError::input(format!("unknown variable `{name}` in {self}")))?;
        Ok(self.from_poly(Poly::var(r.nvars(), i)))
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(self.reduce_int(x + y)),
            (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(x.add(y, self.field().expect("poly ring"))),
            _ => panic!("mixed element kinds"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Int(x) => Elem::Int(self.reduce_int(-x)),
            Elem::Poly(x) => Elem::Poly(x.neg(self.field().expect("poly ring"))),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => Elem::Int(self.reduce_int(x * y)),
            (Elem::Poly(x), Elem::Poly(y)) => Elem::Poly(self.reduce_poly(x.mul(y, self.field().expect("poly ring")))),
            _ => panic!("mixed element kinds"),
        }
    }

    pub fn pow(&self, a: &Elem, mut e: u32) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn product<'a>(&self, xs: impl IntoIterator<Item = &'a Elem>) -> Elem {
        xs.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn sum<'a>(&self, xs: impl IntoIterator<Item = &'a Elem>) -> Elem {
        xs.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(x) => x.is_zero(),
            Elem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    /// Whether `e` has the shape and canonical form of an element of this
    /// ring.
    pub fn owns(&self, e: &Elem) -> bool {
        match (self, e) {
            (CompRing::Integers, Elem::Int(_)) => true,
            (CompRing::IntegersMod(n), Elem::Int(x)) => !x.is_negative() && x < n,
            (CompRing::Poly(r), Elem::Poly(p)) => p.nvars() == r.nvars(),
            (CompRing::Quotient(q), Elem::Poly(p)) => p.nvars() == q.base.nvars() && q.basis.normal_form(p) == *p,
            _ => false,
        }
    }

    /// `Q(ys)` for a polynomial `Q` in `ys.len()` variables with
    /// coefficients in the base field (integers for `ℤ` and `ℤ/n`).
    pub fn eval(&self, q: &Poly, ys: &[Elem]) -> Result<Elem> {
        if q.nvars() != ys.len() {
            return Err(KrullError::input(format!(
                "relation has {} variables but {} values were given",
                q.nvars(),
                ys.len()
            )));
        }
        let mut powers: Vec<Vec<Elem>> = ys.iter().map(|y| vec![self.one(), y.clone()]).collect();
        let mut acc = self.zero();
        for (m, c) in q.terms() {
            let c = self
                .from_scalar(c)
                .ok_or_else(|| KrullError::input(format!("coefficient {c} has no image in {self}")))?;
            let mut term = c;
            for (i, &e) in m.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = self.mul(powers[i].last().expect("nonempty"), &ys[i]);
                    powers[i].push(next);
                }
                term = self.mul(&term, &powers[i][e as usize]);
            }
            acc = self.add(&acc, &term);
        }
        Ok(acc)
    }

    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        parse::parse_elem(self, text).map_err(|e| e.into_krull(text))
    }

    pub fn format(&self, e: &Elem) -> String {
        match e {
            Elem::Int(n) => n.to_string(),
            Elem::Poly(p) => {
                let r = self.poly_ring().expect("poly ring");
                p.format(&r.vars, &r.field)
            }
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly({}, [{}])", self.field, self.vars.join(", "))
    }
}

impl fmt::Display for CompRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompRing::Integers => write!(f, "ZZ"),
            CompRing::IntegersMod(n) => write!(f, "ZZmod({n})"),
            CompRing::Poly(r) => write!(f, "{r}"),
            CompRing::Quotient(q) => {
                let gens: Vec<String> = q.modulus.iter().map(|p| p.format(&q.base.vars, &q.base.field)).collect();
                write!(f, "quot({}, [{}])", q.base, gens.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_and_normal_forms() {
        let z12 = CompRing::integers_mod(12).unwrap();
        assert_eq!(z12.from_int(-1), Elem::Int(11.into()));
        assert_eq!(z12.mul(&z12.from_int(4), &z12.from_int(3)), z12.zero());

        let gi = CompRing::parse("quot(poly(QQ,[t]),[t^2+1])").unwrap();
        let t = gi.var("t").unwrap();
        assert_eq!(gi.mul(&t, &t), gi.from_int(-1));
        assert_eq!(gi.to_string(), "quot(poly(QQ, [t]), [t^2 + 1])");
    }

    #[test]
    fn evaluation_substitutes() {
        let r = CompRing::parse("poly(QQ,[x])").unwrap();
        let x = r.var("x").unwrap();
        let q = Poly::from_terms(
            2,
            [(vec![0, 1], BigRational::one()), (vec![2, 0], -BigRational::one())],
            &Field::Rationals,
        );
        let ys = [x.clone(), r.mul(&x, &x)];
        assert!(r.is_zero(&r.eval(&q, &ys).unwrap()));
    }
}
