//! End-to-end pipelines producing a serializable [`Report`]: the degree-8
//! `S₄` example checked against its golden tables, discovery for
//! user-supplied `(G, G')`, and the `λ`/`ρ` comparison for `Q₈`.

mod naming;
pub mod reference;
mod text;

pub use naming::Naming;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gpstruct::{
    build_lambda, conjugation_implementer, find_structures_with, g_isomorphisms, lambda_rho_compare,
    orbit_fixed_conditions_ordered, stable_subgroups, DiscoveryOptions, GIso, GPContext,
    HGStructure, TypeScreening,
};
use crate::permcore::{are_isomorphic, IsoType8, Perm, PermGroup};
use crate::quartic::{inequality_check, InequalityReport};
use crate::regenum::{holomorph, transitive_subgroups_of_order, CayleyTable};

/// Largest coset space `cmd_discover` accepts.
pub const DISCOVER_INDEX_LIMIT: usize = 8;
/// Largest group `cmd_discover` will generate.
pub const DISCOVER_ORDER_LIMIT: usize = 40_320;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedPerm {
    pub name: String,
    pub perm: Perm,
}

impl NamedPerm {
    fn list(named: &[(String, Perm)]) -> Vec<NamedPerm> {
        named
            .iter()
            .map(|(name, perm)| NamedPerm {
                name: name.clone(),
                perm: *perm,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSection {
    pub generators: Vec<NamedPerm>,
    pub subgroup: Vec<Perm>,
    pub order: usize,
    pub subgroup_order: usize,
    pub degree: usize,
    /// Images of the generators under the coset action.
    pub lambda: Vec<NamedPerm>,
    /// The point relabeling applied to reach `lambda`, if any.
    pub relabeling: Option<Perm>,
    pub lambda_subgroup: Vec<Perm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilitySection {
    pub screening: Vec<TypeScreening>,
    /// Number of transitive subgroups of order `|G|` in `Hol(Q₈)`, of any
    /// isomorphism type (only computed for the degree-8 example).
    pub transitive_subgroup_counts: Vec<(String, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureEntry {
    pub label: String,
    pub type_name: String,
    pub generators: Vec<NamedPerm>,
    pub elements: Vec<NamedPerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionTable {
    pub columns: Vec<String>,
    pub rows: Vec<ActionRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionRow {
    pub element: String,
    pub images: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableRow {
    pub structure: String,
    /// Size of the whole stable lattice, trivial subgroup and `N` included.
    pub lattice_size: usize,
    /// Proper nontrivial stable subgroups.
    pub entries: Vec<StableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableEntry {
    pub subgroup: String,
    pub order: usize,
    pub field: String,
    pub fixed_group: Vec<Perm>,
    pub fixed_group_order: usize,
    pub degree_over_k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GIsoSection {
    pub pairs: Vec<PairEntry>,
    pub automorphisms: Vec<(String, usize)>,
    pub isomorphisms: Vec<GIsoEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub a: String,
    pub b: String,
    pub isomorphic: bool,
    pub g_isomorphisms: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GIsoEntry {
    pub source: String,
    pub target: String,
    /// Source generator name ↦ name of its image in the target.
    pub images: Vec<(String, String)>,
    pub implementer: Option<Perm>,
    pub implementer_count: usize,
    /// `s⁻¹λ(g)⁻¹sλ(g)` for the chosen implementer and each generator `g`.
    pub coboundaries: Vec<Perm>,
    pub coboundaries_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSection {
    pub structure: String,
    pub orbits: Vec<OrbitEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub representative: String,
    pub stabilizer: String,
    pub stabilizer_field: String,
    /// `(element, transporter)`: the coefficient at `element` is the
    /// transporter applied to the coefficient at the representative.
    pub members: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreimageTable {
    pub structure: String,
    pub rows: Vec<PreimageRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreimageRow {
    pub element: String,
    /// `n⁻¹(1)`.
    pub point: usize,
    pub representative: Perm,
    /// The coset as printed: a transversal element when one is configured.
    pub coset: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuSection {
    pub source: String,
    pub target: String,
    pub h: String,
    pub phi_h: String,
    pub first_expansion: String,
    pub second_expansion: String,
    pub mu_source: String,
    pub mu_target: String,
    pub difference_nonzero: bool,
    pub details: InequalityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonianSection {
    pub group: String,
    pub order: usize,
    pub lambda_generators: Vec<Perm>,
    pub rho_generators: Vec<Perm>,
    pub isomorphic: bool,
    pub degenerate: bool,
    pub g_isomorphisms: usize,
    pub subgroup_count: usize,
    pub lambda_stable: usize,
    pub rho_stable: usize,
    /// Orders of the subgroups `G_S` reached by the `λ` lattice.
    pub correspondence_orders: Vec<usize>,
    pub same_correspondence_image: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub group: Option<GroupSection>,
    pub feasibility: Option<FeasibilitySection>,
    pub structures: Vec<StructureEntry>,
    pub action_table: Option<ActionTable>,
    pub stable_table: Vec<StableRow>,
    pub g_iso_section: Option<GIsoSection>,
    pub orbit_section: Vec<OrbitSection>,
    pub preimage_tables: Vec<PreimageTable>,
    pub mu_section: Option<MuSection>,
    pub hamiltonian_section: Option<HamiltonianSection>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// 0 when every check passed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> std::result::Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        text::render(self)
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// A structure with named generators and the naming of all its elements.
struct Named {
    structure: HGStructure,
    generators: Vec<(String, Perm)>,
    naming: Naming,
}

impl Named {
    fn new(structure: HGStructure, generators: Vec<(String, Perm)>) -> Named {
        let naming = Naming::new(&generators);
        Named {
            structure,
            generators,
            naming,
        }
    }
}

const LETTERS: [&str; 6] = ["r", "s", "t", "u", "v", "w"];

fn default_names(structure: &HGStructure) -> Vec<(String, Perm)> {
    let k = structure.label.trim_start_matches("N_");
    structure
        .group
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let letter = LETTERS.get(i).map_or_else(|| format!("x{i}"), |l| l.to_string());
            (format!("{letter}_{k}"), *g)
        })
        .collect()
}

fn group_section(
    ctx: &GPContext,
    group_names: &[(String, Perm)],
    relabeling: Option<Perm>,
) -> Result<GroupSection> {
    let lambda = group_names
        .iter()
        .zip(ctx.lambda())
        .map(|((n, _), l)| (n.clone(), *l))
        .collect::<Vec<_>>();
    Ok(GroupSection {
        generators: NamedPerm::list(group_names),
        subgroup: ctx.subgroup().generators().to_vec(),
        order: ctx.group().order(),
        subgroup_order: ctx.subgroup().order(),
        degree: ctx.degree(),
        lambda: NamedPerm::list(&lambda),
        relabeling,
        lambda_subgroup: ctx.lambda_image(ctx.subgroup())?.minimal_generators(),
    })
}

fn action_table(ctx: &GPContext, group_names: &[(String, Perm)], named: &[Named]) -> ActionTable {
    let mut columns: Vec<(String, Perm, usize)> = Vec::new();
    for (k, s) in named.iter().enumerate() {
        for (name, p) in &s.generators {
            if !columns.iter().any(|(n, q, _)| n == name && q == p) {
                columns.push((name.clone(), *p, k));
            }
        }
    }
    let rows = group_names
        .iter()
        .zip(ctx.lambda())
        .map(|((gname, _), lg)| ActionRow {
            element: gname.clone(),
            images: columns
                .iter()
                .map(|(_, p, k)| named[*k].naming.name_or_cycles(&p.conjugated_by(lg)))
                .collect(),
        })
        .collect();
    ActionTable {
        columns: columns.into_iter().map(|(n, _, _)| n).collect(),
        rows,
    }
}

fn stable_table(ctx: &GPContext, named: &[Named]) -> Result<Vec<StableRow>> {
    named
        .iter()
        .map(|s| {
            let lattice = stable_subgroups(ctx, &s.structure)?;
            Ok(StableRow {
                structure: s.structure.label.clone(),
                lattice_size: lattice.len(),
                entries: lattice
                    .iter()
                    .filter(|st| st.proper)
                    .map(|st| StableEntry {
                        subgroup: s.naming.subgroup_name(&st.subgroup),
                        order: st.subgroup.order(),
                        field: st.field_label.clone(),
                        fixed_group: st.fixed_group.generators().to_vec(),
                        fixed_group_order: st.fixed_group.order(),
                        degree_over_k: st.degree_over_k,
                    })
                    .collect(),
            })
        })
        .collect()
}

fn g_iso_section(ctx: &GPContext, named: &[Named]) -> Result<(GIsoSection, Vec<GIso>)> {
    let mut pairs = Vec::new();
    let mut isomorphisms = Vec::new();
    let mut raw = Vec::new();
    for (i, a) in named.iter().enumerate() {
        for b in &named[i + 1..] {
            let isomorphic = are_isomorphic(&a.structure.group, &b.structure.group)?;
            let found = if isomorphic {
                g_isomorphisms(ctx, &a.structure, &b.structure)?
            } else {
                Vec::new()
            };
            pairs.push(PairEntry {
                a: a.structure.label.clone(),
                b: b.structure.label.clone(),
                isomorphic,
                g_isomorphisms: found.len(),
            });
            for iso in found {
                let report = conjugation_implementer(ctx, &a.structure, &iso)?;
                let chosen = report
                    .preferred
                    .and_then(|s| report.candidates.iter().find(|c| c.s == s));
                let images = a
                    .generators
                    .iter()
                    .map(|(n, g)| {
                        let img = iso.map.apply(g).expect("map covers the source");
                        (n.clone(), b.naming.name_or_cycles(&img))
                    })
                    .collect();
                isomorphisms.push(GIsoEntry {
                    source: a.structure.label.clone(),
                    target: b.structure.label.clone(),
                    images,
                    implementer: report.preferred,
                    implementer_count: report.candidates.len(),
                    coboundaries: chosen.map(|c| c.coboundaries.clone()).unwrap_or_default(),
                    coboundaries_trivial: chosen
                        .is_some_and(|c| c.coboundaries.iter().all(Perm::is_identity)),
                });
                raw.push(GIso {
                    implementer: report.preferred,
                    ..iso
                });
            }
        }
    }
    let automorphisms = named
        .iter()
        .map(|s| {
            Ok((
                s.structure.label.clone(),
                g_isomorphisms(ctx, &s.structure, &s.structure)?.len(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((
        GIsoSection {
            pairs,
            automorphisms,
            isomorphisms,
        },
        raw,
    ))
}

fn orbit_section(ctx: &GPContext, group_naming: &Naming, named: &[Named]) -> Vec<OrbitSection> {
    named
        .iter()
        .map(|s| {
            let priority: Vec<Perm> = s.naming.elements().map(|(p, _)| *p).collect();
            let orbits = orbit_fixed_conditions_ordered(ctx, &s.structure, &priority);
            OrbitSection {
                structure: s.structure.label.clone(),
                orbits: orbits
                    .iter()
                    .map(|o| OrbitEntry {
                        representative: s.naming.name_or_cycles(&o.representative),
                        stabilizer: group_naming.subgroup_name(&o.stabilizer),
                        stabilizer_field: o.stabilizer_field.clone(),
                        members: o
                            .members
                            .iter()
                            .map(|m| {
                                (
                                    s.naming.name_or_cycles(&m.element),
                                    group_naming.name_or_cycles(&m.transporter),
                                )
                            })
                            .collect(),
                    })
                    .collect(),
            }
        })
        .collect()
}

fn coset_display(ctx: &GPContext, rep: &Perm, transversal: Option<&[Perm]>) -> String {
    let shown = transversal
        .and_then(|t| {
            t.iter()
                .find(|x| ctx.subgroup().contains(&(rep.inverse() * **x)))
                .copied()
        })
        .unwrap_or(*rep);
    if shown.is_identity() {
        "1_G".into()
    } else {
        shown.to_string()
    }
}

fn preimage_tables(ctx: &GPContext, named: &[Named], transversal: Option<&[Perm]>) -> Vec<PreimageTable> {
    named
        .iter()
        .map(|s| PreimageTable {
            structure: s.structure.label.clone(),
            rows: s
                .naming
                .elements()
                .map(|(n, name)| {
                    let point = n.inverse().apply(1);
                    let rep = ctx.point_reps()[point - 1];
                    PreimageRow {
                        element: name.to_string(),
                        point,
                        representative: rep,
                        coset: coset_display(ctx, &rep, transversal),
                    }
                })
                .collect(),
        })
        .collect()
}

fn structure_entries(named: &[Named]) -> Vec<StructureEntry> {
    named
        .iter()
        .map(|s| StructureEntry {
            label: s.structure.label.clone(),
            type_name: s.structure.type_name.clone(),
            generators: NamedPerm::list(&s.generators),
            elements: s
                .naming
                .elements()
                .map(|(p, n)| NamedPerm {
                    name: n.to_string(),
                    perm: *p,
                })
                .collect(),
        })
        .collect()
}

/// Everything except the golden comparisons and the symbolic section.
fn analyze(
    command: &str,
    ctx: &GPContext,
    group_names: &[(String, Perm)],
    relabeling: Option<Perm>,
    named: &[Named],
    screening: Vec<TypeScreening>,
    transversal: Option<&[Perm]>,
) -> Result<(Report, Vec<GIso>)> {
    let group_naming = Naming::new(group_names);
    let (giso, raw) = g_iso_section(ctx, named)?;
    let report = Report {
        command: command.into(),
        group: Some(group_section(ctx, group_names, relabeling)?),
        feasibility: Some(FeasibilitySection {
            screening,
            transitive_subgroup_counts: Vec::new(),
        }),
        structures: structure_entries(named),
        action_table: Some(action_table(ctx, group_names, named)),
        stable_table: stable_table(ctx, named)?,
        g_iso_section: Some(giso),
        orbit_section: orbit_section(ctx, &group_naming, named),
        preimage_tables: preimage_tables(ctx, named, transversal),
        ..Report::default()
    };
    Ok((report, raw))
}

fn named_in_order(found: Vec<HGStructure>) -> Vec<Named> {
    found
        .into_iter()
        .map(|s| {
            let names = default_names(&s);
            Named::new(s, names)
        })
        .collect()
}

/// Finds the structures of `(G, G')` and tabulates them. Generators of `G`
/// are named `g_1, g_2, …`; those of `N_k` are `r_k, s_k, t_k, …`.
pub fn discover(group: &PermGroup, subgroup: &PermGroup) -> Result<Report> {
    if !subgroup.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    let index = group.order() / subgroup.order();
    if index > DISCOVER_INDEX_LIMIT {
        return Err(Error::DegreeLimit {
            what: "structure discovery",
            degree: index,
            limit: DISCOVER_INDEX_LIMIT,
        });
    }
    let ctx = build_lambda(group, subgroup)?;
    let (found, screening) = find_structures_with(&ctx, DiscoveryOptions::default())?;
    let named = named_in_order(found);
    let group_names: Vec<(String, Perm)> = group
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| (format!("g_{}", i + 1), *g))
        .collect();
    Ok(analyze("discover", &ctx, &group_names, None, &named, screening, None)?.0)
}

fn max_point(s: &str) -> usize {
    s.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .unwrap_or(1)
}

/// [`discover`] on generators given in cycle notation, separated by `;`.
/// The degree is the largest point mentioned.
pub fn cmd_discover(group_gens: &str, subgroup_gens: &str) -> Result<Report> {
    let degree = max_point(group_gens).max(max_point(subgroup_gens));
    let parse = |s: &str| -> Result<Vec<Perm>> {
        s.split(';')
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .map(|c| Perm::parse(c, degree))
            .collect()
    };
    let group = PermGroup::with_cap(degree, parse(group_gens)?, DISCOVER_ORDER_LIMIT)?;
    let subgroup = PermGroup::with_cap(degree, parse(subgroup_gens)?, DISCOVER_ORDER_LIMIT)?;
    discover(&group, &subgroup)
}

fn joined(lines: &[String]) -> String {
    let mut s = lines.join("\n");
    s.push('\n');
    s
}

/// Runs the whole pipeline on `G = S₄ = ⟨τ, σ⟩`, `G' = ⟨(2,3,4)⟩` and
/// checks every table against the golden data in [`reference`].
pub fn cmd_paper_example() -> Result<Report> {
    let group_names = reference::group_generators()?;
    let group = reference::group()?;
    let subgroup = reference::subgroup()?;
    let raw = build_lambda(&group, &subgroup)?;
    let (pi, ctx) = raw.canonical_relabel(&reference::lambda_target()?)?;
    let (found, screening) = find_structures_with(&ctx, DiscoveryOptions::default())?;

    let expected = reference::structures()?;
    let mut named = Vec::new();
    let mut unmatched = Vec::new();
    for (label, gens) in &expected {
        let g = PermGroup::new(8, gens.iter().map(|(_, p)| *p).collect())?;
        match found.iter().find(|s| s.group == g) {
            Some(s) => named.push(Named::new(
                HGStructure {
                    label: label.clone(),
                    group: g,
                    type_name: s.type_name.clone(),
                },
                gens.clone(),
            )),
            None => unmatched.push(label.clone()),
        }
    }
    let structures_ok = unmatched.is_empty() && found.len() == expected.len();
    if !structures_ok {
        // Fall back to the library's own labels so the rest still runs.
        named = named_in_order(found.clone());
    }

    let transversal = reference::transversal()?;
    let (mut report, raw_isos) = analyze(
        "paper-example",
        &ctx,
        &group_names,
        Some(pi),
        &named,
        screening.clone(),
        Some(&transversal),
    )?;

    // Feasibility.
    let class_size = screening
        .iter()
        .find(|s| s.type_name == IsoType8::C2xC2xC2.name())
        .and_then(|s| s.class_size);
    report.check(
        "regular class of C2xC2xC2 has 30 members",
        class_size == Some(30),
        format!("class size {class_size:?}"),
    );
    let divisible: Vec<&str> = screening
        .iter()
        .filter(|s| s.divisible)
        .map(|s| s.type_name.as_str())
        .collect();
    report.check(
        "only C2xC2xC2 and Q8 have holomorph order divisible by 24",
        divisible == [IsoType8::C2xC2xC2.name(), IsoType8::Q8.name()],
        divisible.join(", "),
    );
    let q8_copy = screening
        .iter()
        .find(|s| s.type_name == IsoType8::Q8.name())
        .and_then(|s| s.transitive_copy);
    report.check(
        "Hol(Q8) has no transitive subgroup isomorphic to S4",
        q8_copy == Some(false),
        format!("transitive copy {q8_copy:?}"),
    );
    let hol_q8 = holomorph(&CayleyTable::order8(IsoType8::Q8))?;
    let q8_count = transitive_subgroups_of_order(&hol_q8, 24)?.len();
    if let Some(f) = report.feasibility.as_mut() {
        f.transitive_subgroup_counts = vec![(IsoType8::Q8.name().to_string(), q8_count)];
    }

    // Coset action.
    let target_sub = PermGroup::parse(reference::LAMBDA_SUBGROUP, 8)?;
    let lsub = ctx.lambda_image(ctx.subgroup())?;
    report.check(
        "λ(G') = ⟨(2,4,5)(3,8,6)⟩",
        lsub == target_sub,
        format!("relabeling {pi}"),
    );
    report.check(
        "structures are N_1..N_4",
        structures_ok,
        if structures_ok {
            format!("{} structures", found.len())
        } else {
            format!("found {}, unmatched {}", found.len(), unmatched.join(", "))
        },
    );

    // Tables.
    let action_text = report.action_table.as_ref().map(text::action_table).unwrap_or_default();
    report.check(
        "action table",
        action_text == reference::ACTION_TABLE,
        first_diff(&action_text, reference::ACTION_TABLE),
    );
    let stable_text = text::stable_table(&report.stable_table);
    report.check(
        "stable-subgroup table",
        stable_text == reference::STABLE_TABLE,
        first_diff(&stable_text, reference::STABLE_TABLE),
    );

    // G-isomorphisms.
    let section = report.g_iso_section.clone().unwrap_or(GIsoSection {
        pairs: Vec::new(),
        automorphisms: Vec::new(),
        isomorphisms: Vec::new(),
    });
    let (pa, pb) = reference::G_ISOMORPHIC_PAIR;
    let g_pairs: Vec<String> = section
        .pairs
        .iter()
        .filter(|p| p.g_isomorphisms > 0)
        .map(|p| format!("({}, {}) × {}", p.a, p.b, p.g_isomorphisms))
        .collect();
    report.check(
        "only (N_3, N_4) is G-isomorphic, by a unique map",
        g_pairs == [format!("({pa}, {pb}) × 1")],
        g_pairs.join("; "),
    );
    let phi = section.isomorphisms.iter().find(|e| e.source == pa && e.target == pb);
    let generatorwise = phi.is_some_and(|e| {
        e.images.iter().all(|(src, img)| {
            src.strip_suffix("_3").zip(img.strip_suffix("_4")).is_some_and(|(x, y)| x == y)
        })
    });
    report.check(
        "Φ maps r_3, s_3, t_3 to r_4, s_4, t_4",
        generatorwise,
        phi.map(|e| {
            e.images
                .iter()
                .map(|(a, b)| format!("{a} ↦ {b}"))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .unwrap_or_default(),
    );
    let n3_auts = section.automorphisms.iter().find(|(l, _)| l == pa).map(|(_, c)| *c);
    report.check(
        "N_3 has only the trivial G-automorphism",
        n3_auts == Some(1),
        format!("{n3_auts:?}"),
    );
    let s = Perm::parse(reference::IMPLEMENTER, 8)?;
    report.check(
        "s = (1,7)(2,8)(3,5)(4,6) implements Φ with trivial coboundaries",
        phi.is_some_and(|e| e.implementer == Some(s) && e.coboundaries_trivial),
        phi.map(|e| {
            format!(
                "implementer {:?}, {} candidates",
                e.implementer.map(|p| p.to_string()),
                e.implementer_count
            )
        })
        .unwrap_or_default(),
    );

    // Fixed-point conditions on N_3.
    let orbit_detail = check_orbits(&report, &group_names, &ctx)?;
    report.check("fixed-point conditions on N_3", orbit_detail.is_none(), orbit_detail.unwrap_or_default());

    // Preimages, compared as cosets.
    let mismatches = preimage_mismatches(&report, &ctx)?;
    report.check(
        "preimage tables agree modulo G'",
        mismatches.is_empty(),
        mismatches.join("; "),
    );
    let shown = text::preimage_tables(&report.preimage_tables, &[pa, pb]);
    report.check(
        "preimage tables print as golden",
        shown == reference::PREIMAGE_TABLES,
        first_diff(&shown, reference::PREIMAGE_TABLES),
    );

    // Symbolic comparison.
    let source = named.iter().find(|s| s.structure.label == pa);
    let target = named.iter().find(|s| s.structure.label == pb);
    let phi_raw = raw_isos.iter().find(|g| g.source == pa && g.target == pb);
    match (source, target, phi_raw) {
        (Some(a), Some(b), Some(phi)) => {
            let ineq = inequality_check(&ctx, &a.structure, &b.structure, phi)?;
            let name_alg = |h: &crate::quartic::AlgElt, s: &Named| {
                let terms: Vec<String> = s
                    .naming
                    .elements()
                    .filter(|(p, _)| !h.coefficient(p).is_zero())
                    .map(|(p, n)| format!("({})·{n}", h.coefficient(p)))
                    .collect();
                terms.join(" + ")
            };
            let expansions = joined(&[
                ineq.first_expansion.to_string(),
                ineq.second_expansion.to_string(),
            ]);
            report.check(
                "expansions print as golden",
                expansions == reference::EXPANSIONS,
                first_diff(&expansions, reference::EXPANSIONS),
            );
            report.check(
                "μ_3(h)(α_1) ≠ μ_4(Φ(h))(α_1)",
                ineq.all_hold(),
                format!(
                    "expansions {}/{}, difference nonzero {}, h ∈ H_3 {}, Φ(h) ∈ H_4 {}, μ values {}/{}",
                    ineq.first_matches_reference,
                    ineq.second_matches_reference,
                    ineq.difference_nonzero,
                    ineq.h_in_source,
                    ineq.phi_h_in_target,
                    ineq.mu_source_matches,
                    ineq.mu_target_matches
                ),
            );
            report.mu_section = Some(MuSection {
                source: pa.into(),
                target: pb.into(),
                h: name_alg(&ineq.h, a),
                phi_h: name_alg(&ineq.phi_h, b),
                first_expansion: ineq.first_expansion.to_string(),
                second_expansion: ineq.second_expansion.to_string(),
                mu_source: ineq.mu_source.to_string(),
                mu_target: ineq.mu_target.to_string(),
                difference_nonzero: ineq.difference_nonzero,
                details: ineq,
            });
        }
        _ => report.check(
            "μ_3(h)(α_1) ≠ μ_4(Φ(h))(α_1)",
            false,
            "N_3, N_4 or Φ missing",
        ),
    }
    Ok(report)
}

/// `None` when the orbit data for `N_3` agrees with the reference
/// transporters (as cosets of the representative's stabilizer) and
/// stabilizers; otherwise a description of the first disagreement.
fn check_orbits(report: &Report, group_names: &[(String, Perm)], ctx: &GPContext) -> Result<Option<String>> {
    let (label, _) = reference::G_ISOMORPHIC_PAIR;
    let Some(section) = report.orbit_section.iter().find(|o| o.structure == label) else {
        return Ok(Some(format!("{label} missing")));
    };
    let naming = Naming::new(group_names);
    let by_name: std::collections::BTreeMap<&str, Perm> =
        naming.elements().map(|(p, n)| (n, *p)).collect();
    for (rep, gens) in reference::ORBIT_STABILIZERS {
        let Some(orbit) = section.orbits.iter().find(|o| o.representative == rep) else {
            return Ok(Some(format!("no orbit represented by {rep}")));
        };
        let expected = PermGroup::parse(gens, 4)?;
        let stab_name = naming.subgroup_name(&expected);
        if orbit.stabilizer != stab_name {
            return Ok(Some(format!(
                "stabilizer of {rep} is {} not {stab_name}",
                orbit.stabilizer
            )));
        }
    }
    for (element, word) in reference::ORBIT_TRANSPORTERS {
        let Some((orbit, ours)) = section.orbits.iter().find_map(|o| {
            o.members
                .iter()
                .find(|(e, _)| e == element)
                .map(|(_, t)| (o, t.as_str()))
        }) else {
            return Ok(Some(format!("{element} not in any orbit")));
        };
        let rep_stab = reference::ORBIT_STABILIZERS
            .iter()
            .find(|(r, _)| *r == orbit.representative)
            .map(|(_, g)| PermGroup::parse(g, 4))
            .transpose()?
            .unwrap_or_else(|| ctx.group().clone());
        let (Some(a), Some(b)) = (by_name.get(word), by_name.get(ours)) else {
            return Ok(Some(format!("cannot read transporter {ours} or {word}")));
        };
        if !rep_stab.contains(&(a.inverse() * *b)) {
            return Ok(Some(format!("{element}: transporter {ours}, expected {word}")));
        }
    }
    Ok(None)
}

fn preimage_mismatches(report: &Report, ctx: &GPContext) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (label, rows) in reference::preimage_tables()? {
        let Some(table) = report.preimage_tables.iter().find(|t| t.structure == label) else {
            out.push(format!("{label} missing"));
            continue;
        };
        for (element, expected) in rows {
            match table.rows.iter().find(|r| r.element == element) {
                Some(r) if ctx.subgroup().contains(&(expected.inverse() * r.representative)) => {}
                Some(r) => out.push(format!(
                    "{label} {element}: {} not in coset of {expected}",
                    r.representative
                )),
                None => out.push(format!("{label} {element} missing")),
            }
        }
    }
    Ok(out)
}

fn first_diff(ours: &str, golden: &str) -> String {
    let mut a = ours.lines();
    let mut b = golden.lines();
    for i in 1.. {
        match (a.next(), b.next()) {
            (None, None) => return "identical".into(),
            (x, y) if x == y => continue,
            (x, y) => {
                return format!(
                    "line {i}: got {:?}, expected {:?}",
                    x.unwrap_or(""),
                    y.unwrap_or("")
                )
            }
        }
    }
    unreachable!()
}

/// Compares `λ(Q₈)` and `ρ(Q₈)` and checks that they are isomorphic but
/// not `G`-isomorphic with the same image of the Galois correspondence.
pub fn cmd_hamiltonian() -> Result<Report> {
    let table = CayleyTable::order8(IsoType8::Q8);
    let cmp = lambda_rho_compare(&table)?;
    let subgroup_count = table.left_regular()?.subgroups()?.len();
    let orders: BTreeSet<(usize, Vec<Perm>)> = cmp
        .lambda_stable
        .iter()
        .map(|s| (s.fixed_group.order(), s.fixed_group.elements().to_vec()))
        .collect();
    let section = HamiltonianSection {
        group: IsoType8::Q8.name().into(),
        order: cmp.order,
        lambda_generators: cmp.lambda.group.generators().to_vec(),
        rho_generators: cmp.rho.group.generators().to_vec(),
        isomorphic: cmp.isomorphic,
        degenerate: cmp.degenerate,
        g_isomorphisms: cmp.g_isomorphisms.len(),
        subgroup_count,
        lambda_stable: cmp.lambda_stable.len(),
        rho_stable: cmp.rho_stable.len(),
        correspondence_orders: orders.into_iter().map(|(o, _)| o).collect(),
        same_correspondence_image: cmp.same_correspondence_image,
    };
    let mut report = Report {
        command: "hamiltonian".into(),
        ..Report::default()
    };
    report.check("λ(Q8) ≅ ρ(Q8)", section.isomorphic, "");
    report.check("λ(Q8) ≠ ρ(Q8)", !section.degenerate, "");
    report.check(
        "no G-isomorphism λ(Q8) → ρ(Q8)",
        section.g_isomorphisms == 0,
        format!("{} found", section.g_isomorphisms),
    );
    report.check(
        "every subgroup is stable in both",
        section.lambda_stable == subgroup_count && section.rho_stable == subgroup_count,
        format!(
            "{} subgroups, λ {} stable, ρ {} stable",
            subgroup_count, section.lambda_stable, section.rho_stable
        ),
    );
    report.check(
        "same image of the Galois correspondence",
        section.same_correspondence_image,
        "",
    );
    report.hamiltonian_section = Some(section);
    Ok(report)
}
