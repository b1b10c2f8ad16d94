//! Computable commutative rings and the Zariski lattice.
//!
//! Supported kinds are `ℤ`, `ℤ/n`, polynomial rings over `ℚ` or `𝔽_p`
//! and their quotients. Ideal membership is exact in all of them, which
//! makes the Zariski entailment `U ⊢ J ⇔ ∏U ∈ √⟨J⟩` decidable, and with
//! it the collapse of idealistic chains.

pub mod certificates;
pub mod chains;
pub mod field;
pub mod glue;
pub mod groebner;
pub mod ideal;
pub mod integral;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod ring;

pub use certificates::{
    collapse_from_dependence, find_dependence, find_singular_certificate, verify_singular_certificate, CertBounds,
    SingularCertificate,
};
pub use chains::{chain_collapses_ring, elementary_ring_chain, is_singular, ChainCertificate, RingChain, RingLevel};
pub use field::Field;
pub use glue::{glue_collapses, is_comaximal, LocalChainCertificate, LocalSingularCertificate};
pub use groebner::{GroebnerBasis, MonoOrder};
pub use ideal::{groebner, ideal_member, normal_form, radical_member, saturation, zar_entails, FGIdeal, ZarElement};
pub use integral::{integral_relative_collapse, IntegralIdentity, IntegralRelation};
pub use poly::Poly;
pub use ring::{CompRing, Elem, PolyRing};
