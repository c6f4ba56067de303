//! The degree-8 example: `G = S₄` acting on the cosets of a 3-cycle
//! subgroup, with the expected tables kept as golden text under `golden/`.

use crate::error::Result;
use crate::permcore::{Perm, PermGroup};

pub const GROUP_GENERATORS: [(&str, &str); 2] = [("τ", "(1,2,3,4)"), ("σ", "(1,2)")];
pub const SUBGROUP: &str = "(2,3,4)";

/// The coset representatives used to print cosets.
pub const TRANSVERSAL: [&str; 8] = [
    "()", "(1,2)", "(1,3)", "(1,4)", "(2,3)", "(1,2,3)", "(1,3,4)", "(1,4,2)",
];

/// Images of `τ` and `σ` under the coset action after relabeling.
pub const LAMBDA_TARGET: [&str; 2] = ["(1,2,3,4)(5,6,7,8)", "(1,2)(3,5)(4,6)(7,8)"];
pub const LAMBDA_SUBGROUP: &str = "(2,4,5)(3,8,6)";

pub const IMPLEMENTER: &str = "(1,7)(2,8)(3,5)(4,6)";
pub const G_ISOMORPHIC_PAIR: (&str, &str) = ("N_3", "N_4");

/// `(element, generator-word of the transporter)` for the orbit conditions
/// on `N_3`: `a₃ = στ(a₁)`, `a₅ = τ(a₁)`, `a₄ = τ(a₂)`, `a₆ = τ²(a₂)`,
/// `a₇ = τ³(a₂)`.
pub const ORBIT_TRANSPORTERS: [(&str, &str); 5] = [
    ("t_3", "στ"),
    ("r_3t_3", "τ"),
    ("r_3s_3", "τ"),
    ("s_3t_3", "τ^2"),
    ("r_3s_3t_3", "τ^3"),
];
/// Stabilizers of the orbit representatives `Id`, `r_3`, `s_3`.
pub const ORBIT_STABILIZERS: [(&str, &str); 3] = [
    ("Id", "(1,2,3,4); (1,2)"),
    ("r_3", "(1,2); (1,3)(2,4)"),
    ("s_3", "(2,3); (3,4)"),
];

pub const STRUCTURES: &str = include_str!("../../golden/structures.txt");
pub const ACTION_TABLE: &str = include_str!("../../golden/action_table.txt");
pub const STABLE_TABLE: &str = include_str!("../../golden/stable_table.txt");
pub const PREIMAGE_TABLES: &str = include_str!("../../golden/preimage_tables.txt");
pub const EXPANSIONS: &str = include_str!("../../golden/expansions.txt");

pub fn group() -> Result<PermGroup> {
    PermGroup::new(4, group_generators()?.into_iter().map(|(_, p)| p).collect())
}

pub fn group_generators() -> Result<Vec<(String, Perm)>> {
    GROUP_GENERATORS
        .iter()
        .map(|(n, c)| Ok((n.to_string(), Perm::parse(c, 4)?)))
        .collect()
}

pub fn subgroup() -> Result<PermGroup> {
    PermGroup::parse(SUBGROUP, 4)
}

pub fn lambda_target() -> Result<Vec<Perm>> {
    LAMBDA_TARGET.iter().map(|c| Perm::parse(c, 8)).collect()
}

pub fn transversal() -> Result<Vec<Perm>> {
    TRANSVERSAL.iter().map(|c| Perm::parse(c, 4)).collect()
}

/// `(label, named generators)` for each structure in the golden list.
pub fn structures() -> Result<Vec<(String, Vec<(String, Perm)>)>> {
    STRUCTURES
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let mut cols = line.split('\t');
            let label = cols.next().unwrap_or_default().to_string();
            let gens = cols
                .map(|c| {
                    let (name, cycles) = c.split_once(" = ").unwrap_or((c, ""));
                    Ok((name.to_string(), Perm::parse(cycles, 8)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((label, gens))
        })
        .collect()
}

/// `(label, [(element name, coset representative)])` from the golden
/// preimage tables; `1_G` stands for the identity coset.
pub fn preimage_tables() -> Result<Vec<(String, Vec<(String, Perm)>)>> {
    let lines: Vec<&str> = PREIMAGE_TABLES.lines().filter(|l| !l.is_empty()).collect();
    lines
        .chunks(2)
        .map(|pair| {
            let mut head = pair[0].split('\t');
            let label = head.next().unwrap_or_default().to_string();
            let reps = pair.get(1).copied().unwrap_or_default().split('\t').skip(1);
            let rows = head
                .zip(reps)
                .map(|(n, r)| {
                    let r = if r == "1_G" { "()" } else { r };
                    Ok((n.to_string(), Perm::parse(r, 4)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((label, rows))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_data_parses() {
        let s = structures().unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(|(_, g)| g.len() == 3));
        let p = preimage_tables().unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.iter().all(|(_, rows)| rows.len() == 8));
        assert_eq!(transversal().unwrap().len(), 8);
        assert_eq!(group().unwrap().order(), 24);
    }
}
