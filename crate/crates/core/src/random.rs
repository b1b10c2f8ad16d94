//! Seeded random instances for property tests and the CLI `--seed` flag.

use crate::bits::Bits;
use crate::entailment::{EntailmentPresentation, Sequent};
use crate::finlat::{Element, FinLattice, Poset};
use crate::morphisms::LatticeMorphism;
use crate::primes_chains::{IdealisticChain, IdealisticPrime};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Poset on `0..=max_points` points; `i < j` related with probability `density`.
pub fn random_poset(rng: &mut impl Rng, max_points: usize, density: f64) -> Poset {
    let n = rng.gen_range(0..=max_points);
    let mut rel = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                rel.push((i, j));
            }
        }
    }
    Poset::new((0..n).map(|i| format!("p{i}")).collect(), &rel).expect("acyclic by construction")
}

pub fn random_lattice(rng: &mut impl Rng, max_points: usize) -> FinLattice {
    let density = rng.gen_range(0.1..0.7);
    FinLattice::from_poset(random_poset(rng, max_points, density))
}

pub fn random_element(rng: &mut impl Rng, l: &FinLattice) -> Element {
    let n = l.num_points();
    let pick = Bits::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.35)));
    l.element(l.base().downward_closure(&pick)).expect("closure is a downset")
}

pub fn random_chain(rng: &mut impl Rng, l: &FinLattice, max_levels: usize) -> IdealisticChain {
    let levels = rng.gen_range(1..=max_levels);
    IdealisticChain::new(
        (0..levels)
            .map(|_| {
                let nj = rng.gen_range(0..=2);
                let nu = rng.gen_range(0..=2);
                IdealisticPrime::new(
                    (0..nj).map(|_| random_element(rng, l)).collect(),
                    (0..nu).map(|_| random_element(rng, l)).collect(),
                )
            })
            .collect(),
    )
}

pub fn random_sequent(rng: &mut impl Rng, n: usize, p: f64) -> Sequent {
    Sequent::new(
        Bits::from_indices(n, (0..n).filter(|_| rng.gen_bool(p))),
        Bits::from_indices(n, (0..n).filter(|_| rng.gen_bool(p))),
    )
}

pub fn random_presentation(rng: &mut impl Rng, max_gens: usize, max_axioms: usize) -> EntailmentPresentation {
    let n = rng.gen_range(1..=max_gens);
    let k = rng.gen_range(0..=max_axioms);
    let axioms = (0..k).map(|_| random_sequent(rng, n, (2.0 / n as f64).min(0.6))).collect();
    EntailmentPresentation::from_sequents((0..n).map(|i| format!("g{i}")).collect(), axioms).expect("widths match")
}

/// A morphism `dom → cod` from a random monotone point map `cod → dom`.
/// Retries fresh lattices until one admits such a map.
pub fn random_morphism(rng: &mut impl Rng, max_points: usize) -> LatticeMorphism {
    loop {
        let dom = random_lattice(rng, max_points);
        let cod = random_lattice(rng, max_points);
        if let Some(dual) = random_monotone_map(rng, &cod, &dom) {
            return LatticeMorphism::from_dual(dom, cod, dual).expect("monotone by construction");
        }
    }
}

fn random_monotone_map(rng: &mut impl Rng, from: &FinLattice, to: &FinLattice) -> Option<Vec<usize>> {
    let m = to.num_points();
    let mut map = vec![usize::MAX; from.num_points()];
    for q in from.base().linear_extension() {
        let mut allowed = Bits::ones(m);
        for r in from.base().below(q).iter() {
            if r != q {
                allowed.and_assign(to.base().above(map[r]));
            }
        }
        let options: Vec<usize> = allowed.iter().collect();
        if options.is_empty() {
            return None;
        }
        map[q] = options[rng.gen_range(0..options.len())];
    }
    Some(map)
}

/// The inclusion of the sublattice of `cod` generated by a few random
/// elements.
pub fn random_injective_morphism(rng: &mut impl Rng, max_points: usize) -> LatticeMorphism {
    let cod = random_lattice(rng, max_points);
    let k = rng.gen_range(0..=3);
    let gens: Vec<Element> = (0..k).map(|_| random_element(rng, &cod)).collect();
    sublattice_inclusion(&cod, &gens)
}

/// Inclusion of the sublattice generated by `gens` into `cod`.
pub fn sublattice_inclusion(cod: &FinLattice, gens: &[Element]) -> LatticeMorphism {
    let names: Vec<String> = (0..gens.len()).map(|i| format!("s{i}")).collect();
    let vals: Vec<Bits> = (0..cod.num_points())
        .map(|q| Bits::from_indices(gens.len(), (0..gens.len()).filter(|&i| gens[i].bits().contains(q))))
        .collect();
    let dom = FinLattice::from_valuations(names.clone(), vals);
    let images: Vec<(String, Element)> = names.into_iter().zip(gens.iter().cloned()).collect();
    LatticeMorphism::from_generator_images(dom, cod.clone(), &images).expect("valuations come from cod")
}
