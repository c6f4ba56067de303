//! Regular subgroups of `S_n` by isomorphism type, and holomorphs.
//!
//! A regular subgroup of type `T` is conjugate in `S_n` to the right-regular
//! representation `ρ(T)`, so each type's regular subgroups form a single
//! conjugacy class of size `n! / |Hol(T)|`.

mod table;

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

pub use table::{types_of_order, CayleyTable, GroupType};

use crate::error::{Error, Result};
use crate::permcore::{
    all_perms, are_isomorphic, automorphisms, generate_capped, IsoType8, Perm, PermGroup,
    SCAN_DEGREE_LIMIT,
};

/// Largest group order accepted by the transitive-subgroup probe.
pub const PROBE_ORDER_LIMIT: usize = 1500;

/// Largest table order accepted by [`holomorph`].
pub const HOLOMORPH_ORDER_LIMIT: usize = 16;

/// All regular subgroups of `S_n` of one isomorphism type.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegularClass {
    pub type_name: String,
    pub members: Vec<PermGroup>,
}

/// `Hol(T) = ρ(T) ⋊ Aut(T)` acting on the elements of `T` (point `i` is
/// element `i`).
pub fn holomorph(table: &CayleyTable) -> Result<PermGroup> {
    let n = table.order();
    if n > HOLOMORPH_ORDER_LIMIT {
        return Err(Error::SizeLimit {
            what: "holomorph",
            order: n,
            limit: HOLOMORPH_ORDER_LIMIT,
        });
    }
    let rho = table.right_regular()?;
    let lambda = table.left_regular()?;
    // An automorphism φ of λ(T) sends λ_g to λ_φ(g), and λ_φ(g)(1) = φ(g).
    let mut gens: Vec<Perm> = rho.minimal_generators();
    for phi in automorphisms(&lambda)? {
        let images: Vec<usize> = lambda
            .elements()
            .iter()
            .map(|lg| (lg.apply(1), phi.apply(lg).expect("total map").apply(1)))
            .collect::<std::collections::BTreeMap<_, _>>()
            .into_values()
            .collect();
        gens.push(Perm::from_images(&images)?);
    }
    let all = PermGroup::new(n, gens)?;
    Ok(PermGroup::from_sorted_unchecked(n, all.elements().to_vec()))
}

/// Orbit of `ρ(T)` under conjugation by `S_n`, deduplicated by element set
/// and sorted by element list.
pub fn enumerate_regular(degree: usize, group_type: &GroupType) -> Result<RegularClass> {
    if degree == 0 || degree > SCAN_DEGREE_LIMIT {
        return Err(Error::UnsupportedDegree(degree));
    }
    if group_type.table.order() != degree {
        return Err(Error::UnsupportedDegree(degree));
    }
    let rho = group_type.table.right_regular()?;
    let mut seen: HashSet<Vec<Perm>> = HashSet::new();
    for g in all_perms(degree) {
        let conj = rho.conjugate_by(&g);
        seen.insert(conj.elements().to_vec());
    }
    let sorted: BTreeSet<Vec<Perm>> = seen.into_iter().collect();
    let members = sorted
        .into_iter()
        .map(|elts| PermGroup::from_elements(degree, elts))
        .collect::<Result<Vec<_>>>()?;
    Ok(RegularClass {
        type_name: group_type.name.clone(),
        members,
    })
}

/// [`enumerate_regular`] for one of the order-8 types.
pub fn enumerate_regular8(ty: IsoType8) -> Result<RegularClass> {
    enumerate_regular(
        8,
        &GroupType {
            name: ty.name().to_string(),
            table: CayleyTable::order8(ty),
        },
    )
}

/// Whether every generator of `l` conjugates the regular group `n` onto
/// itself.
pub fn normalized_by(n: &PermGroup, l: &PermGroup) -> Result<bool> {
    if n.degree() != l.degree() {
        return Err(Error::DegreeMismatch(n.degree(), l.degree()));
    }
    if !n.is_regular() {
        return Err(Error::NotRegular);
    }
    Ok(l.generators().iter().all(|g| n.is_normalized_by_element(g)))
}

/// The holomorph formulation of [`normalized_by`]: `l` lies in `Hol(N)`
/// built from the multiplication table of `n`, with point `x` identified
/// with the element of `n` sending 1 to `x`.
pub fn normalized_by_via_holomorph(n: &PermGroup, l: &PermGroup) -> Result<bool> {
    if n.degree() != l.degree() {
        return Err(Error::DegreeMismatch(n.degree(), l.degree()));
    }
    let table = CayleyTable::of_regular_group(n)?;
    let hol = holomorph(&table)?;
    Ok(l.generators().iter().all(|g| hol.contains(g)))
}

pub fn holomorph_order(table: &CayleyTable) -> Result<usize> {
    Ok(holomorph(table)?.order())
}

/// Whether `required_divisor` divides `|Hol(T)|`.
pub fn holomorph_feasibility(table: &CayleyTable, required_divisor: usize) -> Result<bool> {
    Ok(required_divisor != 0 && holomorph_order(table)? % required_divisor == 0)
}

pub fn holomorph_feasibility8(ty: IsoType8, required_divisor: usize) -> Result<bool> {
    holomorph_feasibility(&CayleyTable::order8(ty), required_divisor)
}

/// Whether `h` has a transitive subgroup of the given order isomorphic to
/// `probe`.
///
/// Candidates are generated by pairs `(a, b)` with `a` running over
/// conjugacy-class representatives of `h` (the property is invariant under
/// conjugation in `h`), then by adjoining a third element to each distinct
/// pair-generated subgroup whose order divides `order`. Closures are capped
/// at `order` elements.
pub fn has_transitive_iso_subgroup(h: &PermGroup, order: usize, probe: &PermGroup) -> Result<bool> {
    check_probe_size(h)?;
    if order > h.order() || probe.order() != order || h.order() % order != 0 {
        return Ok(false);
    }
    let reps: Vec<Perm> = h.conjugacy_classes().iter().map(|c| c[0]).collect();
    let mut tested: HashSet<Vec<Perm>> = HashSet::new();
    let mut found = false;
    search_subgroups_of_order(h, order, &reps, |sub| {
        if !tested.insert(sub.to_vec()) {
            return Ok(false);
        }
        let group = PermGroup::from_sorted_unchecked(h.degree(), sub.to_vec());
        found = group.is_transitive() && are_isomorphic(&group, probe)?;
        Ok(found)
    })?;
    Ok(found)
}

/// Every transitive subgroup of `h` of the given order that is generated by
/// at most three elements.
pub fn transitive_subgroups_of_order(h: &PermGroup, order: usize) -> Result<Vec<PermGroup>> {
    check_probe_size(h)?;
    if order > h.order() || h.order() % order != 0 {
        return Ok(Vec::new());
    }
    let mut found: BTreeSet<Vec<Perm>> = BTreeSet::new();
    search_subgroups_of_order(h, order, h.elements(), |sub| {
        found.insert(sub.to_vec());
        Ok(false)
    })?;
    Ok(found
        .into_iter()
        .map(|elts| PermGroup::from_sorted_unchecked(h.degree(), elts))
        .filter(PermGroup::is_transitive)
        .collect())
}

fn check_probe_size(h: &PermGroup) -> Result<()> {
    if h.order() > PROBE_ORDER_LIMIT {
        return Err(Error::SizeLimit {
            what: "transitive subgroup probe",
            order: h.order(),
            limit: PROBE_ORDER_LIMIT,
        });
    }
    Ok(())
}

/// Calls `visit` on the element list of each subgroup of exactly `order`
/// elements generated by `first` plus up to two more elements of `h`.
/// Stops early when `visit` returns `true`.
fn search_subgroups_of_order(
    h: &PermGroup,
    order: usize,
    first: &[Perm],
    mut visit: impl FnMut(&[Perm]) -> Result<bool>,
) -> Result<()> {
    let degree = h.degree();
    let mut partial: BTreeSet<Vec<Perm>> = BTreeSet::new();
    let mut partial_gens: Vec<(Vec<Perm>, [Perm; 2])> = Vec::new();
    for a in first {
        for b in h.elements() {
            let Some(sub) = generate_capped(degree, &[*a, *b], order)? else {
                continue;
            };
            if sub.len() == order {
                if visit(&sub)? {
                    return Ok(());
                }
            } else if order % sub.len() == 0 && partial.insert(sub.clone()) {
                partial_gens.push((sub, [*a, *b]));
            }
        }
    }
    for (sub, [a, b]) in &partial_gens {
        for c in h.elements() {
            if sub.binary_search(c).is_ok() {
                continue;
            }
            let Some(ext) = generate_capped(degree, &[*a, *b, *c], order)? else {
                continue;
            };
            if ext.len() == order && visit(&ext)? {
                return Ok(());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(gens: &str) -> PermGroup {
        PermGroup::parse(gens, 8).unwrap()
    }

    fn lambda_g() -> PermGroup {
        group("(1,2,3,4)(5,6,7,8); (1,2)(3,5)(4,6)(7,8)")
    }

    #[test]
    fn holomorph_orders() {
        let c2_3 = CayleyTable::order8(IsoType8::C2xC2xC2);
        let hol = holomorph(&c2_3).unwrap();
        assert_eq!(hol.order(), 1344);
        // Independent route: normalizer of ρ(T) by scanning S_8.
        let scan = c2_3.right_regular().unwrap().normalizer_in_sym().unwrap();
        assert_eq!(hol, scan);

        let q8 = CayleyTable::order8(IsoType8::Q8);
        let hol_q8 = holomorph(&q8).unwrap();
        assert_eq!(hol_q8.order(), 192);
        assert_eq!(hol_q8, q8.right_regular().unwrap().normalizer_in_sym().unwrap());

        assert_eq!(holomorph(&CayleyTable::cyclic(1)).unwrap().order(), 1);
    }

    #[test]
    fn feasibility_filter() {
        assert!(holomorph_feasibility8(IsoType8::C2xC2xC2, 24).unwrap());
        assert!(holomorph_feasibility8(IsoType8::Q8, 24).unwrap());
        assert!(!holomorph_feasibility8(IsoType8::C8, 24).unwrap());
        assert!(!holomorph_feasibility8(IsoType8::C2xC4, 24).unwrap());
        assert!(!holomorph_feasibility8(IsoType8::D8, 24).unwrap());
        for ty in IsoType8::ALL {
            assert!(holomorph_feasibility8(ty, 1).unwrap());
        }
    }

    #[test]
    fn class_sizes() {
        let c = enumerate_regular8(IsoType8::C2xC2xC2).unwrap();
        assert_eq!(c.members.len(), 30);
        assert!(c.members.iter().all(PermGroup::is_regular));
        let q = enumerate_regular8(IsoType8::Q8).unwrap();
        assert_eq!(q.members.len(), 210);
    }

    #[test]
    fn small_degree_classes() {
        let c3 = &types_of_order(3).unwrap()[0];
        assert_eq!(enumerate_regular(3, c3).unwrap().members.len(), 1);
        let v4 = &types_of_order(4).unwrap()[1];
        // 24 / |Hol(C2xC2)| = 24 / 24
        assert_eq!(enumerate_regular(4, v4).unwrap().members.len(), 1);
        let c4 = &types_of_order(4).unwrap()[0];
        // 24 / 8
        assert_eq!(enumerate_regular(4, c4).unwrap().members.len(), 3);
        assert!(enumerate_regular(9, c3).is_err());
        assert!(enumerate_regular(4, c3).is_err());
    }

    #[test]
    fn normalized_by_examples() {
        let class = enumerate_regular8(IsoType8::C2xC2xC2).unwrap();
        let lg = lambda_g();
        let hits: Vec<&PermGroup> = class
            .members
            .iter()
            .filter(|n| normalized_by(n, &lg).unwrap())
            .collect();
        assert_eq!(hits.len(), 4);
        let miss = class
            .members
            .iter()
            .find(|n| !hits.contains(n))
            .unwrap();
        assert!(!normalized_by(miss, &lg).unwrap());
        for n in &class.members {
            assert!(normalized_by(n, n).unwrap());
        }
        assert_eq!(normalized_by(&lg, &lg), Err(Error::NotRegular));
    }

    #[test]
    fn holomorph_route_agrees_on_the_class() {
        let class = enumerate_regular8(IsoType8::C2xC2xC2).unwrap();
        let lg = lambda_g();
        for n in &class.members {
            assert_eq!(
                normalized_by(n, &lg).unwrap(),
                normalized_by_via_holomorph(n, &lg).unwrap()
            );
        }
    }

    #[test]
    fn transitive_s4_probe() {
        let s4 = lambda_g();
        let hol_c2 = holomorph(&CayleyTable::order8(IsoType8::C2xC2xC2)).unwrap();
        assert!(has_transitive_iso_subgroup(&hol_c2, 24, &s4).unwrap());
        let hol_q8 = holomorph(&CayleyTable::order8(IsoType8::Q8)).unwrap();
        assert!(!has_transitive_iso_subgroup(&hol_q8, 24, &s4).unwrap());
        assert!(!has_transitive_iso_subgroup(&PermGroup::trivial(8), 24, &s4).unwrap());
    }
}
