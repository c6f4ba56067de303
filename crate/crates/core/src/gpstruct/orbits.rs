use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::gpstruct::context::GPContext;
use crate::gpstruct::structures::{field_label, HGStructure};
use crate::permcore::{Perm, PermGroup};

/// One orbit of `G` acting on `N` by `n ↦ λ(g) n λ(g)⁻¹`.
///
/// An element of `K̃[N]^G` has a free coefficient at the representative,
/// constrained to the fixed field of the stabilizer; the coefficient at
/// every other member `m = g·rep` is `g` applied to it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub representative: Perm,
    pub stabilizer: PermGroup,
    pub stabilizer_field: String,
    pub members: Vec<Transport>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Transport {
    pub element: Perm,
    /// `g ∈ G` with `λ(g) rep λ(g)⁻¹ = element`.
    pub transporter: Perm,
    /// Generator indices; `transporter` is their left-to-right product.
    pub word: Vec<usize>,
}

pub fn orbit_fixed_conditions(ctx: &GPContext, structure: &HGStructure) -> Vec<OrbitInfo> {
    orbit_fixed_conditions_ordered(ctx, structure, structure.group.elements())
}

/// Orbits with representatives taken as the first unassigned element in
/// `priority`. Transporters come from a breadth-first search over the
/// generators of `G`, so they are shortest words.
pub fn orbit_fixed_conditions_ordered(
    ctx: &GPContext,
    structure: &HGStructure,
    priority: &[Perm],
) -> Vec<OrbitInfo> {
    let mut assigned: BTreeSet<Perm> = BTreeSet::new();
    let mut out = Vec::new();
    let group_degree = ctx.group().degree();
    for rep in priority {
        if assigned.contains(rep) || !structure.group.contains(rep) {
            continue;
        }
        let mut members = vec![Transport {
            element: *rep,
            transporter: Perm::identity(group_degree),
            word: Vec::new(),
        }];
        assigned.insert(*rep);
        let mut queue = VecDeque::from([0usize]);
        while let Some(j) = queue.pop_front() {
            for (gi, (g, lg)) in ctx.generators().iter().zip(ctx.lambda()).enumerate() {
                let next = members[j].element.conjugated_by(lg);
                if assigned.insert(next) {
                    let mut word = vec![gi];
                    word.extend_from_slice(&members[j].word);
                    members.push(Transport {
                        element: next,
                        transporter: *g * members[j].transporter,
                        word,
                    });
                    queue.push_back(members.len() - 1);
                }
            }
        }
        let stab: Vec<Perm> = ctx
            .lambda_table()
            .iter()
            .filter(|(_, lg)| rep.conjugated_by(lg) == *rep)
            .map(|(g, _)| *g)
            .collect();
        let stabilizer = PermGroup::from_sorted_unchecked(group_degree, stab);
        out.push(OrbitInfo {
            representative: *rep,
            stabilizer_field: field_label(ctx, &stabilizer),
            stabilizer,
            members,
        });
    }
    out
}
