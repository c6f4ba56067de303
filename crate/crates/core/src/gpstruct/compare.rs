use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gpstruct::context::{build_lambda, GPContext};
use crate::gpstruct::giso::{g_isomorphisms, GIso};
use crate::gpstruct::structures::{stable_subgroups, HGStructure, StableSubgroup};
use crate::permcore::{are_isomorphic, Perm, PermGroup};
use crate::regenum::CayleyTable;

/// The two canonical structures `λ(G)` and `ρ(G)` of a Galois extension with
/// group `G` (so `G' = 1`), compared.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LambdaRhoReport {
    pub order: usize,
    pub lambda: HGStructure,
    pub rho: HGStructure,
    /// `λ(G) = ρ(G)` as sets, which happens exactly when `G` is abelian.
    pub degenerate: bool,
    pub isomorphic: bool,
    pub g_isomorphisms: Vec<GIso>,
    pub lambda_stable: Vec<StableSubgroup>,
    pub rho_stable: Vec<StableSubgroup>,
    /// Both stable lattices give the same set of subgroups `G_S`.
    pub same_correspondence_image: bool,
}

/// Right translations in the coordinates of `ctx`: point `i` (coset `g_i`)
/// goes to the point of `g_i · h`, for each generator `h` of `G`.
pub fn right_translations(ctx: &GPContext) -> Result<PermGroup> {
    if ctx.subgroup().order() != 1 {
        return Err(Error::NotSubgroup);
    }
    let gens = ctx
        .group()
        .generators()
        .iter()
        .map(|h| {
            let images: Vec<usize> = ctx
                .point_reps()
                .iter()
                .map(|r| ctx.point_of(&(*r * *h)))
                .collect();
            Perm::from_images(&images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(ctx.degree(), gens)
}

pub fn lambda_rho_context(table: &CayleyTable) -> Result<GPContext> {
    let g = table.left_regular()?;
    let g = PermGroup::new(g.degree(), g.minimal_generators())?;
    build_lambda(&g, &PermGroup::trivial(g.degree()))
}

pub fn lambda_rho_compare(table: &CayleyTable) -> Result<LambdaRhoReport> {
    let ctx = lambda_rho_context(table)?;
    let lambda = HGStructure {
        label: "lambda".into(),
        group: ctx.lambda_group().clone(),
        type_name: String::new(),
    };
    let rho = HGStructure {
        label: "rho".into(),
        group: right_translations(&ctx)?,
        type_name: String::new(),
    };
    let isomorphic = are_isomorphic(&lambda.group, &rho.group)?;
    let g_isos = g_isomorphisms(&ctx, &lambda, &rho)?;
    let lambda_stable = stable_subgroups(&ctx, &lambda)?;
    let rho_stable = stable_subgroups(&ctx, &rho)?;
    let images = |st: &[StableSubgroup]| -> BTreeSet<Vec<Perm>> {
        st.iter().map(|s| s.fixed_group.elements().to_vec()).collect()
    };
    let same_correspondence_image = images(&lambda_stable) == images(&rho_stable);
    Ok(LambdaRhoReport {
        order: table.order(),
        degenerate: lambda.group == rho.group,
        lambda,
        rho,
        isomorphic,
        g_isomorphisms: g_isos,
        lambda_stable,
        rho_stable,
        same_correspondence_image,
    })
}
