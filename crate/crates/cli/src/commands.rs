//! Command implementations. Each returns a [`Report`] holding the exit
//! code, the human-readable text and the JSON document.

use krull_core::bits::Bits;
use krull_core::dimension::{
    boolean_envelope, dim_espanol, dim_leq, elementary_chain, krull_dim, DimOptions, EspanolTables, TupleSpace,
};
use krull_core::entailment::{check_entailment_laws, lattice_entailment_table};
use krull_core::error::KrullError;
use krull_core::finlat::{enumerate_primes, Element, FinLattice};
use krull_core::krull_functor::{kr_lattice, monotone_tuples, phi_tables, KrLimits};
use krull_core::morphisms::{is_going_down, is_going_up, is_lying_over, relative_dim_leq, LatticeMorphism};
use krull_core::primes_chains::{chain_collapses, saturate_chain, IdealisticChain};
use krull_core::rings::chains::elementary_ring_chain;
use krull_core::rings::glue::find_local_integer_certificate;
use krull_core::rings::{
    find_singular_certificate, glue_collapses, is_comaximal, is_singular, verify_singular_certificate, zar_entails,
    CertBounds, CompRing, Elem, SingularCertificate,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(code: i32, text: impl Into<String>, json: Value) -> Self {
        Report {
            code,
            text: text.into(),
            json,
        }
    }

    /// Report for a library error: resource caps map to 3, the rest to 2.
    pub fn from_error(e: &KrullError) -> Self {
        let (code, kind) = match e {
            KrullError::Resource(_) => (EXIT_RESOURCE, "resource"),
            KrullError::Input(_) => (EXIT_USAGE, "input"),
            KrullError::Contract(_) => (EXIT_USAGE, "contract"),
            KrullError::Unsupported(_) => (EXIT_USAGE, "unsupported"),
        };
        Report::new(code, format!("error: {e}"), json!({"error": {"code": kind, "message": e.to_string()}}))
    }
}

/// Resource caps shared by all commands.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_elements: usize,
    pub max_k: usize,
    pub max_degree: u32,
    pub max_exp: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_elements: 1 << 14,
            max_k: 6,
            max_degree: 3,
            max_exp: 8,
        }
    }
}

pub type CmdResult = Result<Report, KrullError>;

// ------------------------------------------------------------- rendering

/// `e` as a join of meets of generators. Each point of a presented
/// lattice is below exactly the generators that hold there, so `↓p` is
/// the meet of those generators.
pub fn describe(l: &FinLattice, e: &Element) -> String {
    if *e == l.bottom() {
        return "0".into();
    }
    if *e == l.top() {
        return "1".into();
    }
    if let Some((name, _)) = l.generators().iter().find(|(_, g)| g == e) {
        return name.clone();
    }
    let n = l.num_points();
    let maximal: Vec<usize> = e
        .bits()
        .iter()
        .filter(|&p| !(0..n).any(|q| q != p && e.bits().contains(q) && l.base().leq(p, q)))
        .collect();
    let mut parts = Vec::new();
    let mut rebuilt = l.bottom();
    for p in maximal {
        let gens: Vec<&(String, Element)> = l.generators().iter().filter(|(_, g)| g.bits().contains(p)).collect();
        let meet = l.meet_all(gens.iter().map(|(_, g)| g));
        rebuilt = l.join(&rebuilt, &meet);
        parts.push(match gens.len() {
            0 => "1".to_string(),
            _ => gens.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(" & "),
        });
    }
    if rebuilt == *e {
        let multi = parts.len() > 1;
        parts
            .into_iter()
            .map(|s| if multi && s.contains('&') { format!("({s})") } else { s })
            .collect::<Vec<_>>()
            .join(" | ")
    } else {
        l.format_element(e)
    }
}

fn describe_all(l: &FinLattice, es: &[Element]) -> Vec<String> {
    es.iter().map(|e| describe(l, e)).collect()
}

/// The prime `{z : p ∉ z}`, named by the generators it contains.
fn describe_prime(l: &FinLattice, p: usize) -> String {
    let inside: Vec<&str> = l
        .generators()
        .iter()
        .filter(|(_, g)| !g.bits().contains(p))
        .map(|(n, _)| n.as_str())
        .collect();
    format!("<{}>", inside.join(", "))
}

fn chain_text(l: &FinLattice, c: &IdealisticChain) -> String {
    c.levels
        .iter()
        .map(|lv| format!("{{ {} ; {} }}", describe_all(l, &lv.j).join(", "), describe_all(l, &lv.u).join(", ")))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// A monotone prime tuple refining `c`, if any.
fn refining_primes(l: &FinLattice, c: &IdealisticChain) -> Option<Vec<usize>> {
    monotone_tuples(l, c.order()).into_iter().find(|t| {
        c.levels.iter().zip(t).all(|(lv, &p)| {
            lv.j.iter().all(|j| !j.bits().contains(p)) && lv.u.iter().all(|u| u.bits().contains(p))
        })
    })
}

fn primes_text(l: &FinLattice, t: &[usize]) -> String {
    t.iter().map(|&p| describe_prime(l, p)).collect::<Vec<_>>().join(" ⊆ ")
}

fn primes_json(l: &FinLattice, t: &[usize]) -> Value {
    json!(t.iter().map(|&p| describe_prime(l, p)).collect::<Vec<_>>())
}

// ------------------------------------------------------------- lattices

pub fn lat_dim(l: &FinLattice, leq: Option<isize>, space: TupleSpace, caps: &Caps) -> CmdResult {
    let opts = DimOptions {
        space,
        collect_witnesses: leq.is_some(),
        element_cap: caps.max_elements,
    };
    let Some(k) = leq else {
        let d = krull_dim(l, &opts)?;
        return Ok(Report::new(EXIT_OK, format!("dim = {d}"), json!({"dim": d})));
    };
    let r = dim_leq(l, k, &opts)?;
    if r.holds {
        let witnesses: Vec<Value> = r
            .witnesses
            .iter()
            .map(|w| json!({"xs": describe_all(l, &w.xs), "ys": describe_all(l, &w.ys)}))
            .collect();
        let mut text = format!("dim <= {k}: true");
        for w in &r.witnesses {
            text += &format!(
                "\n  ({}) complemented by ({})",
                describe_all(l, &w.xs).join(", "),
                describe_all(l, &w.ys).join(", ")
            );
        }
        return Ok(Report::new(EXIT_OK, text, json!({"leq": k, "holds": true, "witnesses": witnesses})));
    }
    let xs = r.counterexample.unwrap_or_default();
    let tuple = describe_all(l, &xs);
    let mut text = format!("dim <= {k}: false\nfailing tuple: ({})", tuple.join(", "));
    let mut j = json!({"leq": k, "holds": false, "counterexample": tuple});
    if xs.is_empty() {
        text += "\nthe lattice is not trivial";
    } else {
        text += "\nno complementary sequence exists: its elementary chain does not collapse";
        if let Some(t) = refining_primes(l, &elementary_chain(&xs)) {
            text += &format!("\nrefining primes: {}", primes_text(l, &t));
            j["refining_primes"] = primes_json(l, &t);
        }
    }
    Ok(Report::new(EXIT_FAILS, text, j))
}

pub fn lat_collapse(l: &FinLattice, c: &IdealisticChain) -> CmdResult {
    match chain_collapses(l, c) {
        Some(w) => {
            let xs = describe_all(l, &w.xs);
            Ok(Report::new(
                EXIT_OK,
                format!("collapses: true\nwitness: ({})", xs.join(", ")),
                json!({"collapses": true, "witness": xs}),
            ))
        }
        None => {
            let t = refining_primes(l, c).expect("a chain that does not collapse has refining primes");
            Ok(Report::new(
                EXIT_FAILS,
                format!("collapses: false\nrefining primes: {}", primes_text(l, &t)),
                json!({"collapses": false, "refining_primes": primes_json(l, &t)}),
            ))
        }
    }
}

pub fn lat_saturate(l: &FinLattice, c: &IdealisticChain, caps: &Caps) -> CmdResult {
    let s = saturate_chain(l, c, caps.max_elements)?;
    let levels: Vec<Value> = s
        .levels
        .iter()
        .map(|lv| json!({"j": describe_all(l, &lv.j), "u": describe_all(l, &lv.u)}))
        .collect();
    Ok(Report::new(EXIT_OK, chain_text(l, &s), json!({"levels": levels})))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Text,
    Json,
    Dot,
}

pub fn lat_kr(l: &FinLattice, order: usize, emit: Emit, caps: &Caps) -> CmdResult {
    let limits = KrLimits {
        max_points: caps.max_elements,
        ..KrLimits::default()
    };
    let k = kr_lattice(l, order, &limits)?;
    let m = &k.materialized;
    let tables = phi_tables(&k, caps.max_elements)?;
    let elems = l.elements(caps.max_elements)?;
    let phi: Vec<Value> = tables
        .iter()
        .map(|t| {
            let mut obj = serde_json::Map::new();
            for a in &elems {
                obj.insert(describe(l, a), json!(describe(m, &t[a])));
            }
            Value::Object(obj)
        })
        .collect();
    let tagged: Vec<Value> = (0..=order)
        .flat_map(|i| {
            l.base()
                .names()
                .iter()
                .map(move |p| json!({"level": i, "irreducible": p, "name": format!("{p}@{i}")}))
        })
        .collect();
    let count = m.count_elements(caps.max_elements)?;
    let j = json!({
        "order": order,
        "points": m.num_points(),
        "elements": count,
        "tagged_generators": tagged,
        "phi": phi,
        "lattice": m.to_json(),
    });
    let text = match emit {
        Emit::Dot => m.to_dot(caps.max_elements)?,
        Emit::Json => serde_json::to_string_pretty(&j).expect("serializable"),
        Emit::Text => {
            let mut s = format!("Kr_{order}: {} points, {} elements\n", m.num_points(), count);
            for q in 0..m.num_points() {
                let t: Vec<String> = k
                    .point_to_prime_tuple(q)
                    .iter()
                    .map(|p| p.map_or("?".into(), |p| describe_prime(l, p)))
                    .collect();
                s += &format!("  point {q}: {}\n", t.join(" ⊆ "));
            }
            s.trim_end().to_string()
        }
    };
    Ok(Report::new(EXIT_OK, text, j))
}

pub fn lat_spec(l: &FinLattice, caps: &Caps) -> CmdResult {
    let spec = enumerate_primes(l, caps.max_elements)?;
    let names: Vec<String> = spec.primes.iter().map(|p| describe_prime(l, p.point)).collect();
    let mut text = format!("{} primes", names.len());
    for (i, n) in names.iter().enumerate() {
        text += &format!("\n  P{i} = {n}");
    }
    for (i, j) in &spec.inclusions {
        text += &format!("\n  P{i} ⊊ P{j}");
    }
    let dim = krull_core::finlat::classical_dim(l, caps.max_elements)?;
    text += &format!("\nlongest chain: {dim}");
    Ok(Report::new(
        EXIT_OK,
        text,
        json!({"primes": names, "inclusions": spec.inclusions, "dim": dim}),
    ))
}

pub fn lat_espanol(l: &FinLattice, element: Option<&Element>, caps: &Caps) -> CmdResult {
    let env = boolean_envelope(l);
    let mut tables = EspanolTables::new(&env, caps.max_elements)?;
    let n = l.num_points();
    let (target, dim) = match element {
        Some(e) => (env.embed(e), None),
        None => {
            // the envelope element with the longest normal form
            let mut best = (Bits::zeros(n), 0);
            for m in 0..1usize << n {
                let e = Bits::from_indices(n, (0..n).filter(|i| m >> i & 1 == 1));
                let len = tables.min_length(&e);
                if len > best.1 {
                    best = (e, len);
                }
            }
            (best.0, Some(dim_espanol(l, caps.max_elements)?))
        }
    };
    let nf = tables.normal_form(&target);
    let terms = describe_all(l, &nf.terms);
    let points: Vec<&str> = target.iter().map(|p| l.base().names()[p].as_str()).collect();
    let mut text = String::new();
    if let Some(d) = dim {
        text += &format!("dim = {d}\n");
    }
    text += &format!("normal form of {{{}}}: ({})", points.join(","), terms.join(", "));
    Ok(Report::new(
        EXIT_OK,
        text,
        json!({"dim": dim, "element": points, "chain": terms, "length": terms.len()}),
    ))
}

pub fn check_laws(l: &FinLattice, caps: &Caps) -> CmdResult {
    let cap = caps.max_elements.min(16);
    let t = lattice_entailment_table(l, cap)?;
    let r = check_entailment_laws(&t, cap)?;
    let v: Vec<String> = r.violations.iter().map(|v| format!("{v:?}")).collect();
    let code = if r.is_ok() { EXIT_OK } else { EXIT_FAILS };
    let mut text = format!("laws hold: {}", r.is_ok());
    for x in &v {
        text += &format!("\n  {x}");
    }
    Ok(Report::new(code, text, json!({"holds": r.is_ok(), "violations": v})))
}

// ------------------------------------------------------------- morphisms

pub fn morph_check(alpha: &LatticeMorphism, props: &[String], caps: &Caps) -> CmdResult {
    let (d, c) = (&alpha.dom, &alpha.cod);
    let mut all = true;
    let mut lines = Vec::new();
    let mut obj = serde_json::Map::new();
    for p in props {
        let (holds, cx): (bool, Value) = match p.as_str() {
            "lyo" => {
                let r = is_lying_over(alpha)?;
                let cx = r.counterexample.map_or(Value::Null, |(a, b)| json!({"lhs": a, "rhs": b}));
                (r.holds, cx)
            }
            "gu" | "gd" => {
                let r = if p == "gu" { is_going_up(alpha, caps.max_elements)? } else { is_going_down(alpha, caps.max_elements)? };
                let cx = r.counterexample.map_or(Value::Null, |(a, b, y)| {
                    json!({"a": describe(d, &a), "b": describe(d, &b), "y": describe(c, &y)})
                });
                (r.holds, cx)
            }
            other => return Err(KrullError::input(format!("unknown property `{other}` (use lyo, gu, gd)"))),
        };
        all &= holds;
        let mut line = format!("{p}: {holds}");
        if !cx.is_null() {
            line += &format!("  counterexample {cx}");
        }
        lines.push(line);
        obj.insert(p.clone(), json!({"holds": holds, "counterexample": cx}));
    }
    Ok(Report::new(if all { EXIT_OK } else { EXIT_FAILS }, lines.join("\n"), Value::Object(obj)))
}

pub fn morph_reldim(alpha: &LatticeMorphism, leq: Option<isize>, caps: &Caps) -> CmdResult {
    let check = |n: isize| -> Result<_, KrullError> {
        let r = relative_dim_leq(alpha, n, caps.max_k)?;
        if !r.holds && !r.definitive {
            return Err(KrullError::resource(format!(
                "no relative collapse found within --max-k {}",
                caps.max_k
            )));
        }
        Ok(r)
    };
    if let Some(n) = leq {
        let r = check(n)?;
        let cx = r.counterexample.as_ref().map(|xs| describe_all(&alpha.cod, xs));
        let mut text = format!("reldim <= {n}: {}", r.holds);
        if let Some(cx) = &cx {
            text += &format!("\nfailing tuple: ({})", cx.join(", "));
        }
        let code = if r.holds { EXIT_OK } else { EXIT_FAILS };
        return Ok(Report::new(code, text, json!({"leq": n, "holds": r.holds, "counterexample": cx})));
    }
    let mut n = -1;
    while !check(n)?.holds {
        n += 1;
    }
    Ok(Report::new(EXIT_OK, format!("reldim = {n}"), json!({"reldim": n})))
}

// ------------------------------------------------------------- rings

pub fn ring_singular(ring: &CompRing, xs: &[Elem]) -> CmdResult {
    let s = is_singular(ring, xs);
    Ok(Report::new(
        if s { EXIT_OK } else { EXIT_FAILS },
        format!("singular: {s}"),
        json!({"singular": s}),
    ))
}

fn cert_json(ring: &CompRing, c: &SingularCertificate) -> Value {
    serde_json::from_str(&c.to_json(ring)).expect("certificate JSON is well formed")
}

pub fn ring_find_cert(ring: &CompRing, xs: &[Elem], caps: &Caps) -> CmdResult {
    let bounds = CertBounds {
        max_exponent: caps.max_exp,
        max_degree: caps.max_degree,
    };
    match find_singular_certificate(ring, xs, bounds)? {
        Some(c) => Ok(Report::new(EXIT_OK, c.to_json(ring), json!({"certificate": cert_json(ring, &c)}))),
        None if !is_singular(ring, xs) => Ok(Report::new(
            EXIT_FAILS,
            "singular: false (no certificate exists)",
            json!({"singular": false, "certificate": null}),
        )),
        None => Err(KrullError::resource(format!(
            "the sequence is singular but no certificate has exponents <= {} and degree <= {}",
            caps.max_exp, caps.max_degree
        ))),
    }
}

pub fn ring_verify_cert(ring: &CompRing, xs: &[Elem], cert: &str) -> CmdResult {
    let c = SingularCertificate::from_json(ring, cert)?;
    let ok = verify_singular_certificate(ring, xs, &c)?;
    Ok(Report::new(
        if ok { EXIT_OK } else { EXIT_FAILS },
        format!("verified: {ok}"),
        json!({"verified": ok}),
    ))
}

pub fn ring_zar_entails(ring: &CompRing, u: &[Elem], j: &[Elem]) -> CmdResult {
    let e = zar_entails(ring, u, j);
    Ok(Report::new(
        if e { EXIT_OK } else { EXIT_FAILS },
        format!("entails: {e}"),
        json!({"entails": e}),
    ))
}

/// Gluing over `ℤ`: local certificates in each `ℤ[1/s]` are searched
/// for, then combined with the comaximality cofactors.
pub fn ring_glue(ring: &CompRing, xs: &[Elem], moduli: &[Elem], caps: &Caps) -> CmdResult {
    if *ring != CompRing::Integers {
        return Err(KrullError::unsupported("glue searches local certificates over ZZ only"));
    }
    let Some(cs) = is_comaximal(ring, moduli) else {
        return Ok(Report::new(
            EXIT_FAILS,
            "comaximal: false",
            json!({"comaximal": false}),
        ));
    };
    let ints: Vec<_> = xs.iter().map(|x| x.as_int().clone()).collect();
    let mut locals = Vec::new();
    let mut local_json = Vec::new();
    for s in moduli {
        let s = s.as_int();
        let l = find_local_integer_certificate(&ints, s, caps.max_exp, caps.max_exp).ok_or_else(|| {
            KrullError::resource(format!("no certificate over ZZ[1/{s}] within exponent {}", caps.max_exp))
        })?;
        local_json.push(json!({
            "s": s.to_string(),
            "m": l.m,
            "a": l.a.iter().map(|(z, e)| format!("{}/{}^{}", ring.format(z), s, e)).collect::<Vec<_>>(),
        }));
        locals.push(l.to_chain_certificate());
    }
    let chain = elementary_ring_chain(ring, xs);
    let g = glue_collapses(ring, moduli, &cs, &chain, &locals)?;
    let cert = SingularCertificate {
        m: g.u_exps[..xs.len()].iter().map(|e| e[0]).collect(),
        a: g.j_cofs[1..].iter().map(|j| j[0].clone()).collect(),
    };
    if !verify_singular_certificate(ring, xs, &cert)? {
        return Err(KrullError::contract("glued certificate failed its expansion check"));
    }
    let cofs: Vec<String> = cs.iter().map(|c| ring.format(c)).collect();
    let text = format!("comaximal: true (cofactors {})\nglued certificate: {}", cofs.join(", "), cert.to_json(ring));
    Ok(Report::new(
        EXIT_OK,
        text,
        json!({"comaximal": true, "cofactors": cofs, "locals": local_json, "certificate": cert_json(ring, &cert)}),
    ))
}
