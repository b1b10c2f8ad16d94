//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails. Every derived value is checked against an oracle
//! written here rather than against the library's own alternatives alone.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use krull_core::dimension::{dim_espanol, krull_dim, DimOptions};
use krull_core::entailment::{entails_by_valuations, entails_derivational, entails_free, EntailmentPresentation, Sequent};
use krull_core::finlat::{classical_dim, FinLattice};
use krull_core::krull_functor::{joyal_sigma_injective, kr_lattice, KrLimits};
use krull_core::morphisms::{going_brute, is_going_down, is_going_up, is_lying_over, relative_dim, LatticeMorphism};
use krull_core::primes_chains::{collapses, simultaneous_collapse_check, IdealisticChain};
use krull_core::random::{
    random_chain, random_element, random_injective_morphism, random_lattice, random_morphism, random_presentation,
    random_sequent, rng,
};
use krull_core::rings::{
    collapse_from_dependence, find_dependence, find_singular_certificate, glue_collapses, integral_relative_collapse,
    is_singular, verify_singular_certificate, CertBounds, ChainCertificate, CompRing, Elem, Field, IntegralRelation,
    Poly,
};
use krull_core::rings::chains::elementary_ring_chain;
use krull_core::rings::glue::{find_local_integer_certificate, LocalSingularCertificate};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

const LATTICE_BUDGET: Duration = Duration::from_secs(60);
const POLY_BUDGET: Duration = Duration::from_secs(120);
const CAP: usize = 1 << 14;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------- oracles

/// Height of the poset of irreducibles: the longest strict chain of primes.
fn poset_height(l: &FinLattice) -> isize {
    let n = l.num_points();
    let mut memo: Vec<Option<isize>> = vec![None; n];
    fn up(l: &FinLattice, p: usize, memo: &mut Vec<Option<isize>>) -> isize {
        if let Some(h) = memo[p] {
            return h;
        }
        let mut best = 0;
        for q in 0..l.num_points() {
            if q != p && l.base().leq(p, q) {
                best = best.max(1 + up(l, q, memo));
            }
        }
        memo[p] = Some(best);
        best
    }
    (0..n).map(|p| up(l, p, &mut memo)).max().unwrap_or(-1)
}

/// All `r₀ ≤ r₁ ≤ ⋯ ≤ r_ℓ` in the poset of irreducibles.
fn monotone_point_tuples(l: &FinLattice, len: usize) -> Vec<Vec<usize>> {
    let n = l.num_points();
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for t in &out {
            for r in 0..n {
                if t.last().is_none_or(|&s| l.base().leq(s, r)) {
                    let mut t2: Vec<usize> = t.clone();
                    t2.push(r);
                    next.push(t2);
                }
            }
        }
        out = next;
    }
    out
}

/// The prime of point `r` is `{z : r ∉ z}`; a chain is realised by a
/// monotone tuple when each level's `J` lies in its prime and `U` avoids it.
fn realised_by_primes(l: &FinLattice, c: &IdealisticChain) -> bool {
    monotone_point_tuples(l, c.levels.len()).iter().any(|t| {
        c.levels.iter().zip(t).all(|(lev, &r)| {
            lev.j.iter().all(|j| !j.bits().contains(r)) && lev.u.iter().all(|u| u.bits().contains(r))
        })
    })
}

/// `Γ ⊢ Δ` iff every valuation satisfying the axioms satisfies it.
fn entails_oracle(n: usize, axioms: &[Sequent], q: &Sequent) -> bool {
    let sat = |s: &Sequent, v: u32| {
        let lhs = s.lhs.iter().all(|i| v >> i & 1 == 1);
        let rhs = s.rhs.iter().any(|i| v >> i & 1 == 1);
        !lhs || rhs
    };
    (0u32..1 << n).all(|v| !axioms.iter().all(|a| sat(a, v)) || sat(q, v))
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `x₁^{m₀}(x₂^{m₁}(1 + a₂x₂) + a₁x₁)` for a pair of integers.
fn pair_identity(x: &[BigInt; 2], m: &[u32], a: &[BigInt]) -> BigInt {
    let inner = x[1].pow(m[1]) * (BigInt::one() + &a[1] * &x[1]) + &a[0] * &x[0];
    x[0].pow(m[0]) * inner
}

/// The same identity with rational coefficients `z/sᵉ`.
fn pair_identity_local(x: &[BigInt; 2], m: &[u32], a: &[(BigInt, u32)], s: &BigInt) -> BigRational {
    let q = |z: &BigInt, e: u32| BigRational::new(z.clone(), s.pow(e));
    let xr = |i: usize| BigRational::from_integer(x[i].clone());
    let inner = xr(1).pow(m[1] as i32) * (BigRational::one() + q(&a[1].0, a[1].1) * xr(1)) + q(&a[0].0, a[0].1) * xr(0);
    xr(0).pow(m[0] as i32) * inner
}

/// `u₀(u₁(⋯(uℓ + jℓ)⋯) + j₁) + j₀` for an elementary chain of integers,
/// read directly off the certificate.
fn integer_chain_value(xs: &[BigInt], cert: &ChainCertificate) -> BigInt {
    let l = xs.len();
    let mut v = BigInt::zero();
    for k in (0..=l).rev() {
        let u = if k < l { xs[k].pow(cert.u_exps[k][0]) } else { BigInt::one() };
        let j = if k == 0 { BigInt::zero() } else { cert.j_cofs[k][0].as_int() * &xs[k - 1] };
        let inner = if k == l { BigInt::one() } else { v };
        v = u * inner + j;
    }
    v
}

// ---------------------------------------------------------------- criteria

fn c1_dimension_oracles() -> Outcome {
    let start = Instant::now();
    let mut r = rng(0xC1);
    let opts = DimOptions::new();
    let limits = KrLimits {
        max_irreducibles: 6,
        max_order: 7,
        max_points: 1 << 16,
    };
    let samples = 200;
    let mut hist = [0usize; 7];
    for s in 0..samples {
        let l = random_lattice(&mut r, 6);
        let want = poset_height(&l);
        hist[(want + 1) as usize] += 1;
        let dl = krull_dim(&l, &opts).unwrap();
        let cl = classical_dim(&l, CAP).unwrap();
        let es = dim_espanol(&l, CAP).unwrap();
        let mut joyal = -1isize;
        while !joyal_sigma_injective(&l, joyal, &limits).unwrap() {
            joyal += 1;
            if joyal > 6 {
                break;
            }
        }
        if [dl, cl, es, joyal].iter().any(|&d| d != want) {
            return outcome(
                false,
                format!("sample {s}: oracle {want}, dim_leq {dl}, classical {cl}, espanol {es}, joyal {joyal}"),
            );
        }
    }
    let t = start.elapsed();
    outcome(
        t < LATTICE_BUDGET,
        format!(
            "{samples} lattices agree (count by dim -1..5: {hist:?}), {:.1}s (budget {}s)",
            t.as_secs_f64(),
            LATTICE_BUDGET.as_secs()
        ),
    )
}

fn c2_entailment() -> Outcome {
    let mut r = rng(0xC2);
    let (pres_n, seq_n) = (200, 50);
    for s in 0..pres_n {
        let p: EntailmentPresentation = random_presentation(&mut r, 10, 15);
        let n = p.len();
        for _ in 0..seq_n {
            let q = random_sequent(&mut r, n, (1.5 / n as f64).min(0.5));
            let want = entails_oracle(n, p.axioms(), &q);
            let free = entails_free(&p, &q).unwrap();
            let der = entails_derivational(&p, &q).unwrap();
            let val = entails_by_valuations(&p, &q).unwrap();
            if free != want || der != want || val != want {
                return outcome(
                    false,
                    format!("presentation {s}: oracle {want}, free {free}, derivational {der}, valuations {val}"),
                );
            }
        }
    }
    outcome(true, format!("{pres_n} presentations x {seq_n} sequents, 0 discrepancies"))
}

fn c3_simultaneous_collapse() -> Outcome {
    let mut r = rng(0xC3);
    let instances = 1000;
    let (mut violations, mut oracle_violations, mut premise_hits) = (0, 0, 0);
    for _ in 0..instances {
        let l = random_lattice(&mut r, 5);
        let c = random_chain(&mut r, &l, 3);
        let i = r.gen_range(0..c.levels.len());
        let x = random_element(&mut r, &l);
        if !simultaneous_collapse_check(&l, &c, i, &x) {
            violations += 1;
        }
        let both = !realised_by_primes(&l, &c.with_j(i, x.clone())) && !realised_by_primes(&l, &c.with_u(i, x.clone()));
        if both {
            premise_hits += 1;
            if realised_by_primes(&l, &c) {
                oracle_violations += 1;
            }
        }
    }
    outcome(
        violations == 0 && oracle_violations == 0,
        format!("{instances} instances, {violations} violations, {oracle_violations} oracle violations, premise held {premise_hits} times"),
    )
}

fn c4_nullstellensatz() -> Outcome {
    let mut r = rng(0xC4);
    let instances = 2000;
    let (mut bad, mut collapsing) = (0, 0);
    for _ in 0..instances {
        let l = random_lattice(&mut r, 5);
        let c = random_chain(&mut r, &l, 4);
        let col = collapses(&l, &c);
        collapsing += col as usize;
        if col == realised_by_primes(&l, &c) {
            bad += 1;
        }
    }
    outcome(
        bad == 0,
        format!("{instances} chains ({collapsing} collapse), {bad} discrepancies"),
    )
}

fn random_poly(r: &mut impl Rng, nvars: usize, f: &Field) -> Poly {
    let mut terms = Vec::new();
    for deg in 0..=2u32 {
        for m in monos(nvars, deg) {
            if r.gen_bool(0.6) {
                let c = r.gen_range(-3i64..=3);
                terms.push((m, BigRational::from_integer(c.into())));
            }
        }
    }
    Poly::from_terms(nvars, terms, f)
}

fn monos(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=deg {
        for mut rest in monos(nvars - 1, deg - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// `Q(y₁,…,y_k)` by Horner-free direct expansion.
fn eval_poly(ring: &CompRing, q: &Poly, ys: &[Elem]) -> Elem {
    q.terms().fold(ring.zero(), |acc, (m, c)| {
        let mut t = ring.from_scalar(c).unwrap();
        for (y, &e) in ys.iter().zip(m) {
            t = ring.mul(&t, &ring.pow(y, e));
        }
        ring.add(&acc, &t)
    })
}

fn c5_polynomial_rings() -> Outcome {
    let start = Instant::now();
    let mut r = rng(0xC5);
    let per_n = 50;
    let mut max_d = 0;
    for n in 1..=2usize {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let ring = CompRing::poly(Field::Rationals, &refs).unwrap();
        let f = ring.field().unwrap().clone();
        let vars: Vec<Elem> = refs.iter().map(|v| ring.var(v).unwrap()).collect();
        if is_singular(&ring, &vars) {
            return outcome(false, format!("the {n} variables were judged singular"));
        }
        for s in 0..per_n {
            let ys: Vec<Elem> = (0..=n).map(|_| ring.from_poly(random_poly(&mut r, n, &f))).collect();
            if !is_singular(&ring, &ys) {
                return outcome(false, format!("n={n} sample {s} judged pseudo-regular"));
            }
            let mut found = None;
            for d in 1..=8 {
                if let Some(q) = find_dependence(&ring, &ys, d).unwrap() {
                    max_d = max_d.max(d);
                    found = Some(q);
                    break;
                }
            }
            let Some(q) = found else {
                return outcome(false, format!("n={n} sample {s}: no dependence up to degree 8"));
            };
            if q.is_zero() || !ring.is_zero(&eval_poly(&ring, &q, &ys)) {
                return outcome(false, format!("n={n} sample {s}: dependence does not vanish"));
            }
            let cert = collapse_from_dependence(&ring, &ys, &q).unwrap();
            if !verify_singular_certificate(&ring, &ys, &cert).unwrap()
                || !ring.is_zero(&nested_identity(&ring, &ys, &cert.m, &cert.a))
            {
                return outcome(false, format!("n={n} sample {s}: certificate fails expansion"));
            }
        }
    }
    let t = start.elapsed();
    outcome(
        t < POLY_BUDGET,
        format!(
            "variables pseudo-regular, {} samples certified (dependence degree <= {max_d}), {:.1}s (budget {}s)",
            2 * per_n,
            t.as_secs_f64(),
            POLY_BUDGET.as_secs()
        ),
    )
}

/// `y₁^{m₁}(y₂^{m₂}(⋯ y_ℓ^{m_ℓ}(1 + a_ℓ y_ℓ) ⋯) + a₁y₁)`.
fn nested_identity(ring: &CompRing, ys: &[Elem], m: &[u32], a: &[Elem]) -> Elem {
    let l = ys.len();
    let mut v = ring.one();
    for k in (0..l).rev() {
        let plus = ring.mul(&a[k], &ys[k]);
        let body = if k == l - 1 { ring.add(&ring.one(), &plus) } else { ring.add(&v, &plus) };
        v = ring.mul(&ring.pow(&ys[k], m[k]), &body);
    }
    v
}

fn c6_integers() -> Outcome {
    let z = CompRing::Integers;
    let primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];
    if let Some(p) = primes.iter().find(|&&p| is_singular(&z, &[z.from_int(p)])) {
        return outcome(false, format!("({p}) judged singular"));
    }
    let mut r = rng(0xC6);
    let pairs = 100;
    for _ in 0..pairs {
        let x = [big(r.gen_range(-1_000_000..=1_000_000)), big(r.gen_range(-1_000_000..=1_000_000))];
        let xs = [z.from_int(x[0].clone()), z.from_int(x[1].clone())];
        if !is_singular(&z, &xs) {
            return outcome(false, format!("({}, {}) judged pseudo-regular", x[0], x[1]));
        }
        // 2^20 > 10^6 bounds every prime multiplicity
        let bounds = CertBounds {
            max_exponent: 20,
            ..CertBounds::default()
        };
        let cert = find_singular_certificate(&z, &xs, bounds).unwrap();
        let Some(cert) = cert else {
            return outcome(false, format!("no certificate for ({}, {})", x[0], x[1]));
        };
        let a: Vec<BigInt> = cert.a.iter().map(|e| e.as_int().clone()).collect();
        if !pair_identity(&x, &cert.m, &a).is_zero() {
            return outcome(false, format!("certificate for ({}, {}) fails expansion", x[0], x[1]));
        }
    }
    let x = [big(6), big(10)];
    if !pair_identity(&x, &[0, 1], &[big(-35), big(2)]).is_zero() {
        return outcome(false, "(6,10) certificate fails expansion");
    }
    outcome(true, format!("10 primes pseudo-regular, {pairs} pairs singular with verified certificates, (6,10) verifies"))
}

/// Going up with a literal search over every `x`.
fn going_oracle(alpha: &LatticeMorphism, down: bool) -> bool {
    let de = alpha.dom.elements(CAP).unwrap();
    let ce = alpha.cod.elements(CAP).unwrap();
    let (d, c) = (&alpha.dom, &alpha.cod);
    de.iter().all(|a| {
        de.iter().all(|b| {
            ce.iter().all(|y| {
                let (fa, fb) = (alpha.apply(a), alpha.apply(b));
                let premise = if down { c.leq(&c.meet(&fa, y), &fb) } else { c.leq(&fa, &c.join(&fb, y)) };
                !premise
                    || de.iter().any(|x| {
                        if down {
                            d.leq(&d.meet(a, x), b) && c.leq(y, &alpha.apply(x))
                        } else {
                            d.leq(a, &d.join(b, x)) && c.leq(&alpha.apply(x), y)
                        }
                    })
            })
        })
    })
}

fn c7_going() -> Outcome {
    let mut r = rng(0xC7);
    let opts = DimOptions::new();
    let morphisms = 500;
    let (mut lo_gu, mut mismatches) = (0, 0);
    for s in 0..morphisms {
        let alpha = random_morphism(&mut r, 4);
        for down in [false, true] {
            let fast = if down { is_going_down(&alpha, CAP) } else { is_going_up(&alpha, CAP) }.unwrap().holds;
            let brute = going_brute(&alpha, CAP, down).unwrap();
            if fast != brute || fast != going_oracle(&alpha, down) {
                mismatches += 1;
            }
        }
        let lo = is_lying_over(&alpha).unwrap().holds;
        let gu = is_going_up(&alpha, CAP).unwrap().holds;
        if lo && gu {
            lo_gu += 1;
            let (dd, dc) = (krull_dim(&alpha.dom, &opts).unwrap(), krull_dim(&alpha.cod, &opts).unwrap());
            if dd > dc {
                return outcome(false, format!("morphism {s}: lying over and going up but dim {dd} > {dc}"));
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{morphisms} morphisms, {mismatches} going mismatches, {lo_gu} lying-over+going-up instances respect dimension"),
    )
}

fn c8_relative_dimension() -> Outcome {
    let alpha = LatticeMorphism::from_dual(FinLattice::chain(2), FinLattice::chain(3), vec![0, 0]).unwrap();
    let rd = relative_dim(&alpha, 6).unwrap();
    if rd != 1 {
        return outcome(false, format!("relative dim of L3 over {{0,1}} is {rd}"));
    }
    let mut r = rng(0xC8);
    let opts = DimOptions::new();
    let corpus = 300;
    let mut violations = 0;
    for _ in 0..corpus {
        let alpha = random_injective_morphism(&mut r, 5);
        let m = krull_dim(&alpha.dom, &opts).unwrap();
        let n = relative_dim(&alpha, 8).unwrap();
        let dc = krull_dim(&alpha.cod, &opts).unwrap();
        if dc > (m + 1) * (n + 1) - 1 {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!("L3 over {{0,1}} has relative dim 1; {corpus} inclusions, {violations} violations"),
    )
}

fn c9_integral() -> Outcome {
    let b = CompRing::parse("quot(poly(QQ,[t]),[t^2+1])").unwrap();
    let t = b.var("t").unwrap();
    let mut r = rng(0xC9);
    let relations = 40;
    let (mut checked, mut interior) = (0usize, 0usize);
    let mut made = 0;
    while made < relations {
        let (c, d) = (r.gen_range(-3i64..=3), r.gen_range(1i64..=3));
        let x = b.add(&b.from_int(c), &b.mul(&b.from_int(d), &t));
        // (X² − 2cX + c² + d²) · S(X), S with small integer coefficients
        let mut p = vec![big(c * c + d * d), big(-2 * c), big(1)];
        let sdeg = r.gen_range(0..=2);
        let mut sc: Vec<BigInt> = (0..sdeg).map(|_| big(r.gen_range(-2i64..=2))).collect();
        sc.push(big(if r.gen_bool(0.5) { 1 } else { r.gen_range(-2i64..=2) }));
        if sc.last().unwrap().is_zero() {
            continue;
        }
        let mut prod = vec![BigInt::zero(); p.len() + sc.len() - 1];
        for (i, pi) in p.iter().enumerate() {
            for (j, sj) in sc.iter().enumerate() {
                prod[i + j] += pi * sj;
            }
        }
        p = prod;
        let units: Vec<usize> = (0..p.len()).filter(|&i| p[i].abs().is_one()).collect();
        if units.is_empty() {
            continue;
        }
        let k = units[r.gen_range(0..units.len())];
        if k + 1 < p.len() {
            interior += 1;
        }
        // x^k = Σ_{i≠k} −(pᵢ/p_k) xⁱ
        let sign = p[k].clone();
        let coeffs: Vec<Elem> = (0..p.len())
            .map(|i| if i == k { b.zero() } else { b.from_int(-(&p[i] * &sign)) })
            .collect();
        let rel = IntegralRelation { k, coeffs };
        let splits: Vec<usize> = (0..p.len()).filter(|&i| i != k).collect();
        for mask in 0u32..1 << splits.len() {
            let mut in_g_prime = vec![false; p.len()];
            for (bit, &i) in splits.iter().enumerate() {
                in_g_prime[i] = mask >> bit & 1 == 1;
            }
            let id = match integral_relative_collapse(&b, &x, &rel, &in_g_prime) {
                Ok(id) => id,
                Err(e) => return outcome(false, format!("relation {made} split {mask:b}: {e}")),
            };
            let lhs = b.mul(&b.pow(&x, id.m), &b.add(&id.g_prime, &b.mul(&id.b, &x)));
            let combo = id.g_combination.iter().fold(b.zero(), |acc, (i, cf)| {
                b.add(&acc, &b.mul(cf, &rel.coeffs[*i]))
            });
            let from_g = id.g_combination.iter().all(|(i, _)| *i != k && !in_g_prime[*i]);
            let g_prime_ok = match id.g_prime_index {
                None => b.is_one(&id.g_prime),
                Some(i) => in_g_prime[i] && id.g_prime == rel.coeffs[i],
            };
            if lhs != id.g || combo != id.g || !from_g || !g_prime_ok {
                return outcome(false, format!("relation {made} split {mask:b}: identity fails expansion"));
            }
            checked += 1;
        }
        made += 1;
    }
    outcome(
        interior > 0,
        format!("{relations} relations ({interior} with interior k), {checked} split identities verified"),
    )
}

fn c10_local_global() -> Outcome {
    let z = CompRing::Integers;
    let x = [big(6), big(10)];
    let xs: Vec<Elem> = x.iter().map(|v| z.from_int(v.clone())).collect();
    let chain = elementary_ring_chain(&z, &xs);
    let moduli = [big(2), big(3)];
    let cofs = [z.from_int(2), z.from_int(-1)];
    let ss: Vec<Elem> = moduli.iter().map(|s| z.from_int(s.clone())).collect();
    let hand = [
        LocalSingularCertificate {
            m: vec![0, 1],
            a: vec![(z.from_int(-10), 0), (z.from_int(1), 1)],
        },
        LocalSingularCertificate {
            m: vec![0, 1],
            a: vec![(z.from_int(-65), 2), (z.from_int(1), 1)],
        },
    ];
    let found: Option<Vec<LocalSingularCertificate>> = moduli
        .iter()
        .map(|s| find_local_integer_certificate(&x, s, 3, 4))
        .collect();
    let Some(found) = found else {
        return outcome(false, "local certificate search failed");
    };
    for (label, locals) in [("hand-written", hand.to_vec()), ("searched", found)] {
        for (s, l) in moduli.iter().zip(&locals) {
            let a: Vec<(BigInt, u32)> = l.a.iter().map(|(e, k)| (e.as_int().clone(), *k)).collect();
            if !pair_identity_local(&x, &l.m, &a, s).is_zero() {
                return outcome(false, format!("{label} local certificate over 1/{s} fails expansion"));
            }
        }
        let chain_locals: Vec<_> = locals.iter().map(|l| l.to_chain_certificate()).collect();
        let g = match glue_collapses(&z, &ss, &cofs, &chain, &chain_locals) {
            Ok(g) => g,
            Err(e) => return outcome(false, format!("{label}: {e}")),
        };
        if !integer_chain_value(&x, &g).is_zero() {
            return outcome(false, format!("{label}: glued identity fails expansion"));
        }
    }
    outcome(true, "hand-written and searched local certificates glue to verified identities in ZZ")
}

fn c11_kr_points() -> Outcome {
    let mut r = rng(0xCB);
    let mut corpus: Vec<FinLattice> = vec![FinLattice::trivial(), FinLattice::chain(3), FinLattice::boolean(2), FinLattice::chain(5)];
    corpus.extend((0..150).map(|_| random_lattice(&mut r, 4)));
    let limits = KrLimits::default();
    for (s, l) in corpus.iter().enumerate() {
        let kr = kr_lattice(l, 1, &limits).unwrap();
        let mut got: Vec<Vec<usize>> = Vec::new();
        for q in 0..kr.materialized.num_points() {
            let tuple: Option<Vec<usize>> = kr.point_to_prime_tuple(q).into_iter().collect();
            match tuple {
                Some(t) => got.push(t),
                None => return outcome(false, format!("lattice {s}: Kr point {q} is not a prime pair")),
            }
        }
        let mut want = monotone_point_tuples(l, 2);
        let n_points = got.len();
        got.sort();
        got.dedup();
        want.sort();
        if got.len() != n_points || got != want {
            return outcome(false, format!("lattice {s}: {} Kr points vs {} monotone pairs", n_points, want.len()));
        }
    }
    outcome(true, format!("{} lattices, Kr1 points biject with monotone prime pairs", corpus.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("lattice dimension oracles agree", c1_dimension_oracles),
        ("entailment completeness", c2_entailment),
        ("simultaneous collapse", c3_simultaneous_collapse),
        ("finite nullstellensatz", c4_nullstellensatz),
        ("dim QQ[x1..xn] = n", c5_polynomial_rings),
        ("dim ZZ = 1", c6_integers),
        ("going up/down shortcuts", c7_going),
        ("relative dimension", c8_relative_dimension),
        ("integral recipe", c9_integral),
        ("local-global gluing", c10_local_global),
        ("Kr1 points are monotone prime pairs", c11_kr_points),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        failed += !o.pass as usize;
        println!(
            "criterion {:>2} {:<40} {}  {} [{:.2}s]",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
