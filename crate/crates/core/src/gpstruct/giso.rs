use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gpstruct::context::GPContext;
use crate::gpstruct::structures::{lattice_signature, stable_subgroups, HGStructure};
use crate::permcore::{all_perms, search_isomorphisms, GroupMap, Perm};

/// An isomorphism `N_source → N_target` commuting with conjugation by
/// `λ(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GIso {
    pub source: String,
    pub target: String,
    pub map: GroupMap,
    /// A permutation `s` with `s n s⁻¹ = map(n)`, when one has been chosen.
    pub implementer: Option<Perm>,
}

impl GIso {
    /// Images of the source group's generators.
    pub fn generator_images(&self, source: &HGStructure) -> Vec<(Perm, Perm)> {
        source
            .group
            .generators()
            .iter()
            .map(|g| (*g, self.map.apply(g).expect("map covers the source")))
            .collect()
    }
}

/// Whether `map` commutes with conjugation by `lg` on the given elements.
fn equivariant_on(map: &GroupMap, lg: &Perm, elements: &[Perm]) -> bool {
    elements.iter().all(|n| {
        let lhs = map.apply(&n.conjugated_by(lg));
        let rhs = map.apply(n).map(|m| m.conjugated_by(lg));
        lhs.is_some() && lhs == rhs
    })
}

/// Every `G`-isomorphism `a.N → b.N`.
///
/// Structures whose stable lattices differ in `(|S|, field)` signature are
/// rejected up front. Otherwise generator-image assignments are pruned by
/// equivariance on the generators of `N` before the full homomorphism check,
/// and survivors are checked for equivariance on all of `N`.
pub fn g_isomorphisms(ctx: &GPContext, a: &HGStructure, b: &HGStructure) -> Result<Vec<GIso>> {
    let sig_a = lattice_signature(&stable_subgroups(ctx, a)?);
    let sig_b = lattice_signature(&stable_subgroups(ctx, b)?);
    if sig_a != sig_b {
        return Ok(Vec::new());
    }
    g_isomorphisms_unfiltered(ctx, a, b)
}

/// [`g_isomorphisms`] without the lattice-signature shortcut.
pub fn g_isomorphisms_unfiltered(
    ctx: &GPContext,
    a: &HGStructure,
    b: &HGStructure,
) -> Result<Vec<GIso>> {
    let a_gens = a.group.generators().to_vec();
    let maps = search_isomorphisms(
        &a.group,
        &b.group,
        |map| ctx.lambda().iter().all(|lg| equivariant_on(map, lg, &a_gens)),
        false,
    )?;
    Ok(maps
        .into_iter()
        .filter(|map| {
            ctx.lambda()
                .iter()
                .all(|lg| equivariant_on(map, lg, a.group.elements()))
        })
        .map(|map| GIso {
            source: a.label.clone(),
            target: b.label.clone(),
            map,
            implementer: None,
        })
        .collect())
}

/// A candidate conjugating permutation and its coboundaries
/// `s⁻¹ λ(g)⁻¹ s λ(g)` for each generator `g` of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplementerCandidate {
    pub s: Perm,
    pub coboundaries: Vec<Perm>,
    pub coboundaries_centralize: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplementerReport {
    pub candidates: Vec<ImplementerCandidate>,
    /// First candidate whose coboundaries are all trivial, else the first
    /// candidate.
    pub preferred: Option<Perm>,
}

/// All `s ∈ S_n` with `s n s⁻¹ = iso(n)` on the source group, by scanning
/// `S_n`, with the coboundary check for each.
pub fn conjugation_implementer(
    ctx: &GPContext,
    source: &HGStructure,
    iso: &GIso,
) -> Result<ImplementerReport> {
    let n = ctx.degree();
    let cent = source.group.centralizer_in_sym()?;
    let gens = source.group.generators();
    let mut candidates = Vec::new();
    for s in all_perms(n) {
        if !gens.iter().all(|x| Some(x.conjugated_by(&s)) == iso.map.apply(x)) {
            continue;
        }
        let coboundaries: Vec<Perm> = ctx
            .lambda()
            .iter()
            .map(|lg| s.inverse() * lg.inverse() * s * *lg)
            .collect();
        let coboundaries_centralize = coboundaries.iter().all(|c| cent.contains(c));
        candidates.push(ImplementerCandidate {
            s,
            coboundaries,
            coboundaries_centralize,
        });
    }
    let preferred = candidates
        .iter()
        .find(|c| c.coboundaries.iter().all(Perm::is_identity))
        .or(candidates.first())
        .map(|c| c.s);
    Ok(ImplementerReport {
        candidates,
        preferred,
    })
}
