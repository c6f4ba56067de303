//! Hopf–Galois structures through the coset action `λ`.
//!
//! Given `G = Gal(K̃/k)` and `G' = Gal(K̃/K)`, the structures on `K/k` are the
//! regular subgroups `N ⊆ Sym(G/G')` normalized by `λ(G)`. A subgroup of `N`
//! stable under `λ(G)` gives an intermediate field, identified here through
//! the subgroup `G_S` of `G` fixing it. Two structures have isomorphic Hopf
//! algebras exactly when their `N` are isomorphic by a map commuting with
//! the `λ(G)` action.

mod compare;
mod context;
mod giso;
mod orbits;
mod structures;

pub use compare::{lambda_rho_compare, lambda_rho_context, right_translations, LambdaRhoReport};
pub use context::{build_lambda, GPContext};
pub use giso::{
    conjugation_implementer, g_isomorphisms, g_isomorphisms_unfiltered, GIso,
    ImplementerCandidate, ImplementerReport,
};
pub use orbits::{orbit_fixed_conditions, orbit_fixed_conditions_ordered, OrbitInfo, Transport};
pub use structures::{
    field_label, find_structures, find_structures_with, fixed_field_subgroup, lattice_signature,
    stable_subgroups, structures_isomorphic, DiscoveryOptions, HGStructure, StableSubgroup,
    TypeScreening,
};
