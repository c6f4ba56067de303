use std::fmt::Write;

use super::{ActionTable, PreimageTable, Report, StableRow, StructureEntry};

pub(super) fn structures(entries: &[StructureEntry]) -> String {
    let mut out = String::new();
    for s in entries {
        out.push_str(&s.label);
        for g in &s.generators {
            let _ = write!(out, "\t{} = {}", g.name, g.perm);
        }
        out.push('\n');
    }
    out
}

pub(super) fn action_table(t: &ActionTable) -> String {
    let mut out = String::new();
    for c in &t.columns {
        let _ = write!(out, "\t{c}");
    }
    out.push('\n');
    for row in &t.rows {
        out.push_str(&row.element);
        for img in &row.images {
            let _ = write!(out, "\t{img}");
        }
        out.push('\n');
    }
    out
}

pub(super) fn stable_table(rows: &[StableRow]) -> String {
    let mut out = String::new();
    for row in rows {
        let subs: Vec<&str> = row.entries.iter().map(|e| e.subgroup.as_str()).collect();
        let fields: Vec<&str> = row.entries.iter().map(|e| e.field.as_str()).collect();
        let or_dash = |v: Vec<&str>| if v.is_empty() { "-".to_string() } else { v.join(", ") };
        let _ = writeln!(out, "{}\t{}\t{}", row.structure, or_dash(subs), or_dash(fields));
    }
    out
}

/// The preimage tables for the given labels, or all of them when `labels`
/// is empty.
pub(super) fn preimage_tables(tables: &[PreimageTable], labels: &[&str]) -> String {
    let mut out = String::new();
    for t in tables
        .iter()
        .filter(|t| labels.is_empty() || labels.contains(&t.structure.as_str()))
    {
        out.push_str(&t.structure);
        for r in &t.rows {
            let _ = write!(out, "\t{}", r.element);
        }
        out.push('\n');
        for r in &t.rows {
            let _ = write!(out, "\t{}", r.coset);
        }
        out.push('\n');
    }
    out
}

fn heading(out: &mut String, title: &str) {
    if !out.is_empty() {
        out.push('\n');
    }
    let _ = writeln!(out, "== {title} ==");
}

pub(super) fn render(r: &Report) -> String {
    let mut out = String::new();
    if let Some(g) = &r.group {
        heading(&mut out, "Group");
        let gens: Vec<String> = g.generators.iter().map(|n| format!("{} = {}", n.name, n.perm)).collect();
        let sub: Vec<String> = g.subgroup.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "G = ⟨{}⟩, order {}", gens.join(", "), g.order);
        let _ = writeln!(out, "G' = ⟨{}⟩, order {}", sub.join(", "), g.subgroup_order);
        let _ = writeln!(out, "degree {}", g.degree);
        for l in &g.lambda {
            let _ = writeln!(out, "λ({}) = {}", l.name, l.perm);
        }
        let ls: Vec<String> = g.lambda_subgroup.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "λ(G') = ⟨{}⟩", ls.join(", "));
        if let Some(pi) = &g.relabeling {
            let _ = writeln!(out, "relabeling {pi}");
        }
    }
    if let Some(f) = &r.feasibility {
        heading(&mut out, "Regular classes");
        for s in &f.screening {
            let copy = match s.transitive_copy {
                Some(true) => "yes",
                Some(false) => "no",
                None => "-",
            };
            let class = s.class_size.map_or("-".to_string(), |c| c.to_string());
            let _ = writeln!(
                out,
                "{}\t|Hol| = {}\tdivisible {}\ttransitive copy {}\tclass size {}",
                s.type_name,
                s.holomorph_order,
                if s.divisible { "yes" } else { "no" },
                copy,
                class
            );
        }
        for (ty, n) in &f.transitive_subgroup_counts {
            let _ = writeln!(out, "transitive subgroups of order |G| in Hol({ty}): {n}");
        }
    }
    if !r.structures.is_empty() || r.group.is_some() {
        heading(&mut out, "Structures");
        out.push_str(&structures(&r.structures));
    }
    if let Some(t) = &r.action_table {
        heading(&mut out, "Action of G on generators");
        out.push_str(&action_table(t));
    }
    if !r.stable_table.is_empty() {
        heading(&mut out, "Stable subgroups");
        out.push_str(&stable_table(&r.stable_table));
    }
    if let Some(g) = &r.g_iso_section {
        heading(&mut out, "G-isomorphisms");
        for p in &g.pairs {
            let _ = writeln!(
                out,
                "{} {}\tisomorphic {}\tG-isomorphisms {}",
                p.a, p.b, p.isomorphic, p.g_isomorphisms
            );
        }
        for (l, n) in &g.automorphisms {
            let _ = writeln!(out, "{l}\tG-automorphisms {n}");
        }
        for e in &g.isomorphisms {
            let maps: Vec<String> = e.images.iter().map(|(a, b)| format!("{a} ↦ {b}")).collect();
            let _ = writeln!(out, "{} → {}: {}", e.source, e.target, maps.join(", "));
            if let Some(s) = &e.implementer {
                let cob: Vec<String> = e.coboundaries.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(
                    out,
                    "  implemented by {s} ({} candidates), coboundaries {}",
                    e.implementer_count,
                    cob.join(", ")
                );
            }
        }
    }
    if !r.orbit_section.is_empty() {
        heading(&mut out, "Fixed-point conditions");
        for s in &r.orbit_section {
            let _ = writeln!(out, "{}", s.structure);
            for o in &s.orbits {
                let members: Vec<String> = o
                    .members
                    .iter()
                    .skip(1)
                    .map(|(e, t)| format!("a({e}) = {t}(a({}))", o.representative))
                    .collect();
                let _ = writeln!(
                    out,
                    "  a({}) ∈ fixed field of {} [{}]{}{}",
                    o.representative,
                    o.stabilizer,
                    o.stabilizer_field,
                    if members.is_empty() { "" } else { "; " },
                    members.join(", ")
                );
            }
        }
    }
    if !r.preimage_tables.is_empty() {
        heading(&mut out, "Preimages of point 1");
        out.push_str(&preimage_tables(&r.preimage_tables, &[]));
    }
    if let Some(m) = &r.mu_section {
        heading(&mut out, "Hopf actions");
        let _ = writeln!(out, "h = {}", m.h);
        let _ = writeln!(out, "Φ(h) = {}", m.phi_h);
        let _ = writeln!(out, "a2^2*a3 + a3^2*a4 + a4^2*a2 = {}", m.first_expansion);
        let _ = writeln!(out, "a2^2*a4 + a3^2*a2 + a4^2*a3 = {}", m.second_expansion);
        let _ = writeln!(out, "μ({})(h)(a1) = {}", m.source, m.mu_source);
        let _ = writeln!(out, "μ({})(Φ(h))(a1) = {}", m.target, m.mu_target);
        let _ = writeln!(out, "difference nonzero: {}", m.difference_nonzero);
    }
    if let Some(h) = &r.hamiltonian_section {
        heading(&mut out, "λ and ρ");
        let gens = |v: &[crate::permcore::Perm]| {
            v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        };
        let _ = writeln!(out, "G = {}, order {}", h.group, h.order);
        let _ = writeln!(out, "λ(G) = ⟨{}⟩", gens(&h.lambda_generators));
        let _ = writeln!(out, "ρ(G) = ⟨{}⟩", gens(&h.rho_generators));
        let _ = writeln!(out, "isomorphic {}, equal {}", h.isomorphic, h.degenerate);
        let _ = writeln!(out, "G-isomorphisms {}", h.g_isomorphisms);
        let _ = writeln!(
            out,
            "subgroups {}, stable in λ {}, stable in ρ {}",
            h.subgroup_count, h.lambda_stable, h.rho_stable
        );
        let _ = writeln!(
            out,
            "correspondence image orders {:?}, same image {}",
            h.correspondence_orders, h.same_correspondence_image
        );
    }
    if !r.checks.is_empty() {
        heading(&mut out, "Checks");
        for c in &r.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "[{mark}] {}", c.name);
            } else {
                let _ = writeln!(out, "[{mark}] {}: {}", c.name, c.detail);
            }
        }
    }
    out
}
