//! Hopf–Galois structures on separable field extensions.
//!
//! A separable extension `K/k` with Galois closure group `G` and
//! `K = K̃^{G'}` carries one Hopf–Galois structure per regular subgroup `N`
//! of `Sym(G/G')` normalized by the left-translation image `λ(G)`. This crate
//! finds those subgroups, computes their stable-subgroup lattices and
//! `G`-isomorphisms, and evaluates Hopf actions exactly in the splitting field
//! of the generic quartic.
//!
//! Modules:
//!
//! - [`permcore`]: permutations, permutation groups, subgroup and isomorphism
//!   enumeration.
//! - [`regenum`]: regular subgroups of `S_n` by isomorphism type, holomorphs.
//! - [`gpstruct`]: the coset action `λ`, structure discovery, stable
//!   subgroups, `G`-isomorphisms, fixed-point descriptions.
//! - [`quartic`]: exact arithmetic in `k(α₁, α₂, α₃, α₄)` and Hopf actions.
//! - [`report`]: end-to-end pipelines producing serializable reports, shared
//!   by the `hgs` binary and the examples.

pub mod error;
pub mod gpstruct;
pub mod permcore;
pub mod quartic;
pub mod regenum;
pub mod report;

pub use error::{Error, Result};
pub use permcore::{IsoType8, Perm, PermGroup};
