//! Name resolution and construction of library values from declarations.

use std::collections::HashMap;

use krull_core::entailment::EntailmentPresentation;
use krull_core::error::KrullError;
use krull_core::finlat::{build_from_presentation, Element, FinLattice};
use krull_core::morphisms::LatticeMorphism;
use krull_core::primes_chains::{IdealisticChain, IdealisticPrime};
use krull_core::rings::CompRing;

use crate::syntax::{parse_decls, print_decls, Decl, ErrorCode, Ident, LatticeDecl, LevelText, MorphismDecl, ParseError, Term};

/// Lattices, rings and morphisms declared in one input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub decls: Vec<Decl>,
}

fn name_error(at: &Ident, code: ErrorCode, message: String) -> ParseError {
    ParseError {
        code,
        line: at.pos.line,
        col: at.pos.col,
        message,
        expected: vec![],
    }
}

impl Session {
    /// Parses and resolves every reference.
    pub fn parse(src: &str) -> Result<Session, ParseError> {
        let s = Session {
            decls: parse_decls(src)?,
        };
        s.resolve()?;
        Ok(s)
    }

    pub fn print(&self) -> String {
        print_decls(&self.decls)
    }

    fn resolve(&self) -> Result<(), ParseError> {
        let mut seen: HashMap<&str, ()> = HashMap::new();
        for d in &self.decls {
            let n = d.name();
            if seen.insert(&n.name, ()).is_some() {
                return Err(name_error(n, ErrorCode::Name, format!("`{}` is declared twice", n.name)));
            }
            match d {
                Decl::Lattice(l) => check_lattice(l)?,
                Decl::Ring(_) => {}
                Decl::Morphism(m) => self.check_morphism(m)?,
            }
        }
        Ok(())
    }

    fn check_morphism(&self, m: &MorphismDecl) -> Result<(), ParseError> {
        let dom = self.lattice_decl_at(&m.dom)?;
        let cod = self.lattice_decl_at(&m.cod)?;
        let mut assigned: Vec<&str> = Vec::new();
        for (g, t) in &m.images {
            if !dom.gens.contains(g) {
                return Err(name_error(g, ErrorCode::Name, format!("`{}` is not a generator of `{}`", g.name, dom.name.name)));
            }
            if assigned.contains(&g.name.as_str()) {
                return Err(name_error(g, ErrorCode::Arity, format!("`{}` is given two images", g.name)));
            }
            assigned.push(&g.name);
            check_term(t, cod)?;
        }
        if let Some(g) = dom.gens.iter().find(|g| !assigned.contains(&g.name.as_str())) {
            return Err(name_error(
                &m.name,
                ErrorCode::Arity,
                format!("morphism `{}` gives no image for `{}`", m.name.name, g.name),
            ));
        }
        Ok(())
    }

    fn lattice_decl_at(&self, at: &Ident) -> Result<&LatticeDecl, ParseError> {
        match self.decls.iter().find(|d| d.name() == at) {
            Some(Decl::Lattice(l)) => Ok(l),
            Some(_) => Err(name_error(at, ErrorCode::Name, format!("`{}` is not a lattice", at.name))),
            None => Err(name_error(at, ErrorCode::Name, format!("unknown lattice `{}`", at.name))),
        }
    }

    fn names_of(&self, pick: impl Fn(&Decl) -> bool) -> Vec<&str> {
        self.decls.iter().filter(|d| pick(d)).map(|d| d.name().name.as_str()).collect()
    }

    /// The lattice declaration called `name`, or the only one when `name`
    /// is `None`.
    pub fn lattice_decl(&self, name: Option<&str>) -> Result<&LatticeDecl, KrullError> {
        let all: Vec<&LatticeDecl> = self
            .decls
            .iter()
            .filter_map(|d| match d {
                Decl::Lattice(l) => Some(l),
                _ => None,
            })
            .collect();
        pick(all, name, "lattice", |l| &l.name.name)
    }

    pub fn morphism_decl(&self, name: Option<&str>) -> Result<&MorphismDecl, KrullError> {
        let all: Vec<&MorphismDecl> = self
            .decls
            .iter()
            .filter_map(|d| match d {
                Decl::Morphism(m) => Some(m),
                _ => None,
            })
            .collect();
        pick(all, name, "morphism", |m| &m.name.name)
    }

    pub fn ring(&self, name: &str) -> Option<&CompRing> {
        self.decls.iter().find_map(|d| match d {
            Decl::Ring(r) if r.name.name == name => Some(&r.ring),
            _ => None,
        })
    }

    pub fn ring_names(&self) -> Vec<&str> {
        self.names_of(|d| matches!(d, Decl::Ring(_)))
    }

    pub fn lattice(&self, name: Option<&str>, cap: usize) -> Result<FinLattice, KrullError> {
        build_lattice(self.lattice_decl(name)?, cap)
    }

    pub fn morphism(&self, name: Option<&str>, cap: usize) -> Result<LatticeMorphism, KrullError> {
        let m = self.morphism_decl(name)?;
        let dom = self.lattice(Some(&m.dom.name), cap)?;
        let cod = self.lattice(Some(&m.cod.name), cap)?;
        let images: Vec<(String, Element)> = m
            .images
            .iter()
            .map(|(g, t)| Ok((g.name.clone(), eval_term(&cod, t)?)))
            .collect::<Result<_, KrullError>>()?;
        LatticeMorphism::from_generator_images(dom, cod, &images)
    }
}

fn pick<'a, T>(all: Vec<&'a T>, name: Option<&str>, kind: &str, name_of: impl Fn(&T) -> &String) -> Result<&'a T, KrullError> {
    match name {
        Some(n) => all
            .into_iter()
            .find(|x| name_of(x) == n)
            .ok_or_else(|| KrullError::input(format!("no {kind} named `{n}`"))),
        None if all.len() == 1 => Ok(all[0]),
        None if all.is_empty() => Err(KrullError::input(format!("the input declares no {kind}"))),
        None => Err(KrullError::input(format!("several {kind}s declared; choose one by name"))),
    }
}

fn check_lattice(l: &LatticeDecl) -> Result<(), ParseError> {
    for (i, g) in l.gens.iter().enumerate() {
        if l.gens[..i].contains(g) {
            return Err(name_error(g, ErrorCode::Name, format!("generator `{}` listed twice", g.name)));
        }
    }
    for (lhs, rhs) in &l.rels {
        for g in lhs.iter().chain(rhs) {
            if !l.gens.contains(g) {
                return Err(name_error(g, ErrorCode::Name, format!("`{}` is not a generator of `{}`", g.name, l.name.name)));
            }
        }
    }
    Ok(())
}

fn check_term(t: &Term, l: &LatticeDecl) -> Result<(), ParseError> {
    match t {
        Term::Gen(g) if !l.gens.contains(g) => {
            Err(name_error(g, ErrorCode::Name, format!("`{}` is not a generator of `{}`", g.name, l.name.name)))
        }
        Term::Meet(ts) | Term::Join(ts) => ts.iter().try_for_each(|t| check_term(t, l)),
        _ => Ok(()),
    }
}

pub fn build_lattice(l: &LatticeDecl, cap: usize) -> Result<FinLattice, KrullError> {
    let gens: Vec<String> = l.gens.iter().map(|g| g.name.clone()).collect();
    let axioms: Vec<(Vec<&str>, Vec<&str>)> = l
        .rels
        .iter()
        .map(|(a, b)| {
            (
                a.iter().map(|g| g.name.as_str()).collect(),
                b.iter().map(|g| g.name.as_str()).collect(),
            )
        })
        .collect();
    let pres = EntailmentPresentation::new(gens, &axioms)?;
    build_from_presentation(&pres, cap)
}

pub fn eval_term(l: &FinLattice, t: &Term) -> Result<Element, KrullError> {
    Ok(match t {
        Term::Gen(g) => l
            .generator(&g.name)
            .cloned()
            .ok_or_else(|| KrullError::input(format!("`{}` is not a generator", g.name)))?,
        Term::Zero => l.bottom(),
        Term::One => l.top(),
        Term::Meet(ts) => {
            let es = ts.iter().map(|t| eval_term(l, t)).collect::<Result<Vec<_>, _>>()?;
            l.meet_all(&es)
        }
        Term::Join(ts) => {
            let es = ts.iter().map(|t| eval_term(l, t)).collect::<Result<Vec<_>, _>>()?;
            l.join_all(&es)
        }
    })
}

pub fn eval_chain(l: &FinLattice, levels: &[LevelText]) -> Result<IdealisticChain, KrullError> {
    if levels.is_empty() {
        return Err(KrullError::input("a chain needs at least one level"));
    }
    let conv = |ts: &[Term]| ts.iter().map(|t| eval_term(l, t)).collect::<Result<Vec<_>, _>>();
    Ok(IdealisticChain::new(
        levels
            .iter()
            .map(|lv| Ok(IdealisticPrime::new(conv(&lv.j)?, conv(&lv.u)?)))
            .collect::<Result<_, KrullError>>()?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_mixed_files() {
        let s = Session::parse("lattice T { gens: a; }\nring A = poly(QQ,[x,y]);\nmorphism f : T -> T { a -> a; }").unwrap();
        assert!(s.ring("A").is_some());
        let m = s.morphism(None, 1024).unwrap();
        assert!(m.is_injective());
        assert_eq!(Session::parse(&s.print()).unwrap(), s);
    }

    #[test]
    fn name_and_arity_errors() {
        let e = Session::parse("lattice T { gens: a; rel: b |- ; }").unwrap_err();
        assert_eq!((e.code, e.col), (ErrorCode::Name, 27));
        let e = Session::parse("lattice T { gens: a, b; }\nmorphism f : T -> T { a -> a; }").unwrap_err();
        assert_eq!((e.code, e.line), (ErrorCode::Arity, 2));
        let e = Session::parse("lattice T { gens: a; }\nmorphism f : T -> U { a -> a; }").unwrap_err();
        assert_eq!(e.code, ErrorCode::Name);
        let e = Session::parse("lattice T { gens: a; }\nring T = ZZ;").unwrap_err();
        assert_eq!(e.code, ErrorCode::Name);
    }

    #[test]
    fn axiom_with_empty_right_side() {
        let s = Session::parse("lattice T { gens: a, b; rel: a |- ; }").unwrap();
        let l = s.lattice(Some("T"), 1024).unwrap();
        assert_eq!(l.generator("a"), Some(&l.bottom()));
        // b stays free: 0 < b < 1
        assert_eq!(l.count_elements(64).unwrap(), 3);
    }
}
