use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gpstruct::context::GPContext;
use crate::permcore::{are_isomorphic, Perm, PermGroup, BRUTE_FORCE_ORDER_LIMIT};
use crate::regenum::{
    enumerate_regular, has_transitive_iso_subgroup, holomorph, holomorph_feasibility,
    normalized_by, types_of_order,
};

/// A regular subgroup `N` of `Sym(G/G')` normalized by `λ(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HGStructure {
    pub label: String,
    pub group: PermGroup,
    pub type_name: String,
}

/// A subgroup `S` of `N` stable under conjugation by `λ(G)`, with the
/// subgroup `G_S` of `G` whose fixed field it corresponds to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSubgroup {
    pub subgroup: PermGroup,
    pub fixed_group: PermGroup,
    pub degree_over_k: usize,
    pub field_label: String,
    /// Neither trivial nor all of `N`.
    pub proper: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct DiscoveryOptions {
    /// Skip types whose holomorph cannot contain a transitive copy of `λ(G)`.
    pub feasibility_filter: bool,
}

impl Default for DiscoveryOptions {
    fn default() -> Self {
        DiscoveryOptions {
            feasibility_filter: true,
        }
    }
}

/// Outcome of the holomorph pre-filter for one isomorphism type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeScreening {
    pub type_name: String,
    pub holomorph_order: usize,
    pub divisible: bool,
    /// `None` when the divisibility test already failed or `λ(G)` is too
    /// large for the isomorphism search.
    pub transitive_copy: Option<bool>,
    pub class_size: Option<usize>,
}

pub fn find_structures(ctx: &GPContext) -> Result<Vec<HGStructure>> {
    Ok(find_structures_with(ctx, DiscoveryOptions::default())?.0)
}

/// Scans every regular class of degree `n` (after the optional pre-filter)
/// for members normalized by `λ(G)`. Structures are ordered by type (catalog
/// order) then element list and labelled `N_1, N_2, …`.
pub fn find_structures_with(
    ctx: &GPContext,
    options: DiscoveryOptions,
) -> Result<(Vec<HGStructure>, Vec<TypeScreening>)> {
    let n = ctx.degree();
    let lambda_g = ctx.lambda_group();
    let mut screening = Vec::new();
    let mut found = Vec::new();
    for ty in types_of_order(n)? {
        let hol = holomorph(&ty.table)?;
        let divisible = holomorph_feasibility(&ty.table, lambda_g.order())?;
        let mut screen = TypeScreening {
            type_name: ty.name.clone(),
            holomorph_order: hol.order(),
            divisible,
            transitive_copy: None,
            class_size: None,
        };
        if options.feasibility_filter {
            if !divisible {
                screening.push(screen);
                continue;
            }
            if lambda_g.order() <= BRUTE_FORCE_ORDER_LIMIT {
                let ok = has_transitive_iso_subgroup(&hol, lambda_g.order(), lambda_g)?;
                screen.transitive_copy = Some(ok);
                if !ok {
                    screening.push(screen);
                    continue;
                }
            }
        }
        let class = enumerate_regular(n, &ty)?;
        screen.class_size = Some(class.members.len());
        screening.push(screen);
        for member in class.members {
            if normalized_by(&member, lambda_g)? {
                found.push(HGStructure {
                    label: String::new(),
                    group: member,
                    type_name: ty.name.clone(),
                });
            }
        }
    }
    for (i, s) in found.iter_mut().enumerate() {
        s.label = format!("N_{}", i + 1);
    }
    Ok((found, screening))
}

/// All subgroups of `N` stable under `λ(G)`, in the order of
/// [`PermGroup::subgroups`].
pub fn stable_subgroups(ctx: &GPContext, structure: &HGStructure) -> Result<Vec<StableSubgroup>> {
    let n = &structure.group;
    let mut out = Vec::new();
    for sub in n.subgroups()? {
        if !ctx.lambda().iter().all(|g| sub.is_normalized_by_element(g)) {
            continue;
        }
        let fixed_group = fixed_field_subgroup(ctx, &sub)?;
        let proper = sub.order() > 1 && sub.order() < n.order();
        out.push(StableSubgroup {
            degree_over_k: ctx.degree() / sub.order(),
            field_label: field_label(ctx, &fixed_group),
            fixed_group,
            subgroup: sub,
            proper,
        });
    }
    Ok(out)
}

/// `G_S = { g ∈ G : λ(g)(1) ∈ S·1 }`, the union of the cosets labelled by
/// the `S`-orbit of point 1.
pub fn fixed_field_subgroup(ctx: &GPContext, sub: &PermGroup) -> Result<PermGroup> {
    if sub.degree() != ctx.degree() {
        return Err(Error::DegreeMismatch(ctx.degree(), sub.degree()));
    }
    let orbit = sub.orbit(1);
    let elts = ctx
        .lambda_table()
        .iter()
        .filter(|(_, l)| orbit.binary_search(&l.apply(1)).is_ok())
        .map(|(g, _)| *g);
    PermGroup::from_elements(ctx.group().degree(), elts).map_err(|e| match e {
        Error::NotClosed(why) => Error::NotClosed(format!("G_S for {sub}: {why}")),
        other => other,
    })
}

/// Names the fixed field `K̃^H` of a subgroup `H ⊆ G`, reading `G` as
/// permuting the roots `α_1, …, α_d` of a polynomial with `K = K̃^{G'}`.
///
/// `G ↦ k`, `G' ↦ K`, the stabilizer of root 1 ↦ `k(α)` and of root `j` ↦
/// `k(α_j)`, the even part of `G` (when proper) ↦ `k(√δ)`. Anything else is
/// named by its generators and degree over `k`.
pub fn field_label(ctx: &GPContext, h: &PermGroup) -> String {
    let g = ctx.group();
    if h == g {
        return "k".into();
    }
    if h == ctx.subgroup() {
        return "K".into();
    }
    for root in 1..=g.degree() {
        if *h == g.stabilizer(root) {
            return if root == 1 {
                "k(α)".into()
            } else {
                format!("k(α_{root})")
            };
        }
    }
    let even: Vec<Perm> = g.elements().iter().filter(|p| is_even(p)).copied().collect();
    if even.len() < g.order() && h.elements() == even.as_slice() {
        return "k(√δ)".into();
    }
    format!("{h} (degree {})", g.order() / h.order())
}

fn is_even(p: &Perm) -> bool {
    p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
}

/// `(|S|, field label)` over the stable lattice, sorted. Equal signatures
/// are necessary for two structures to be `G`-isomorphic.
pub fn lattice_signature(stable: &[StableSubgroup]) -> Vec<(usize, String)> {
    let mut sig: Vec<(usize, String)> = stable
        .iter()
        .map(|s| (s.subgroup.order(), s.field_label.clone()))
        .collect();
    sig.sort();
    sig
}

/// Whether two groups are abstractly isomorphic (for reports).
pub fn structures_isomorphic(a: &HGStructure, b: &HGStructure) -> Result<bool> {
    are_isomorphic(&a.group, &b.group)
}
