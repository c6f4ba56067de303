//! Permutations and finite permutation groups on at most 16 points.

mod group;
mod iso;
mod perm;

pub use group::{generate, PermGroup, BRUTE_FORCE_ORDER_LIMIT, DEFAULT_CAP, SCAN_DEGREE_LIMIT};
pub use iso::{are_isomorphic, automorphisms, isomorphisms, order8_type, order_profile, GroupMap, IsoType8};
pub use perm::{all_perms, Perm, MAX_DEGREE};

pub(crate) use group::generate_capped;
pub(crate) use iso::search_isomorphisms;
