//! Brute-force isomorphism search between small permutation groups, and the
//! order-8 classification by element orders.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permcore::group::{PermGroup, BRUTE_FORCE_ORDER_LIMIT};
use crate::permcore::perm::Perm;

/// A bijection between the element sets of two groups, stored as
/// `(source, image)` pairs sorted by source.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupMap {
    pairs: Vec<(Perm, Perm)>,
}

impl GroupMap {
    pub fn from_pairs(mut pairs: Vec<(Perm, Perm)>) -> GroupMap {
        pairs.sort();
        GroupMap { pairs }
    }

    pub fn identity(group: &PermGroup) -> GroupMap {
        GroupMap {
            pairs: group.elements().iter().map(|x| (*x, *x)).collect(),
        }
    }

    pub fn apply(&self, x: &Perm) -> Option<Perm> {
        self.pairs
            .binary_search_by(|(s, _)| s.cmp(x))
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn pairs(&self) -> &[(Perm, Perm)] {
        &self.pairs
    }

    pub fn inverse(&self) -> GroupMap {
        GroupMap::from_pairs(self.pairs.iter().map(|(a, b)| (*b, *a)).collect())
    }

    /// `other ∘ self`; `None` if some image of `self` is outside the domain
    /// of `other`.
    pub fn then(&self, other: &GroupMap) -> Option<GroupMap> {
        let pairs = self
            .pairs
            .iter()
            .map(|(a, b)| other.apply(b).map(|c| (*a, c)))
            .collect::<Option<Vec<_>>>()?;
        Some(GroupMap::from_pairs(pairs))
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|(a, b)| a == b)
    }
}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())))
            .finish()
    }
}

/// All isomorphisms `a -> b`.
pub fn isomorphisms(a: &PermGroup, b: &PermGroup) -> Result<Vec<GroupMap>> {
    search_isomorphisms(a, b, |_| true, false)
}

pub fn automorphisms(a: &PermGroup) -> Result<Vec<GroupMap>> {
    isomorphisms(a, a)
}

pub fn are_isomorphic(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    Ok(!search_isomorphisms(a, b, |_| true, true)?.is_empty())
}

/// Isomorphism search over generator-image assignments.
///
/// Each assignment is expanded to a map on all of `a` by words in the
/// generators. Candidates that are not bijective are dropped, then `prefilter`
/// is consulted, and only then is the map checked against the full
/// multiplication table.
pub(crate) fn search_isomorphisms(
    a: &PermGroup,
    b: &PermGroup,
    prefilter: impl Fn(&GroupMap) -> bool,
    first_only: bool,
) -> Result<Vec<GroupMap>> {
    for g in [a, b] {
        if g.order() > BRUTE_FORCE_ORDER_LIMIT {
            return Err(Error::SizeLimit {
                what: "isomorphism search",
                order: g.order(),
                limit: BRUTE_FORCE_ORDER_LIMIT,
            });
        }
    }
    if a.order() != b.order() || order_profile(a) != order_profile(b) {
        return Ok(Vec::new());
    }
    let gens = a.minimal_generators();
    let words = word_table(a, &gens);
    let candidates: Vec<Vec<Perm>> = gens
        .iter()
        .map(|g| {
            let ord = g.order();
            b.elements().iter().filter(|y| y.order() == ord).copied().collect()
        })
        .collect();

    let mut found = Vec::new();
    let assignments: Box<dyn Iterator<Item = Vec<Perm>>> = if gens.is_empty() {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(candidates.into_iter().multi_cartesian_product())
    };
    for images in assignments {
        let Some(map) = expand(&words, &images, b.degree()) else {
            continue;
        };
        if !prefilter(&map) || !is_homomorphism(a, &map) {
            continue;
        }
        found.push(map);
        if first_only {
            break;
        }
    }
    found.sort_by(|x, y| x.pairs.cmp(&y.pairs));
    Ok(found)
}

/// One entry per element of the group: `(element, parent index, generator
/// index)` with `element = parent * generator`; the identity has no parent.
struct WordTable {
    entries: Vec<(Perm, Option<(usize, usize)>)>,
}

fn word_table(group: &PermGroup, gens: &[Perm]) -> WordTable {
    let id = Perm::identity(group.degree());
    let mut index: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
    let mut entries = vec![(id, None)];
    let mut head = 0;
    while head < entries.len() {
        let x = entries[head].0;
        for (gi, g) in gens.iter().enumerate() {
            let y = x * *g;
            if !index.contains_key(&y) {
                index.insert(y, entries.len());
                entries.push((y, Some((head, gi))));
            }
        }
        head += 1;
    }
    WordTable { entries }
}

fn expand(words: &WordTable, images: &[Perm], degree: usize) -> Option<GroupMap> {
    let mut img: Vec<Perm> = Vec::with_capacity(words.entries.len());
    for (_, parent) in &words.entries {
        img.push(match parent {
            None => Perm::identity(degree),
            Some((p, g)) => img[*p] * images[*g],
        });
    }
    let mut targets = img.clone();
    targets.sort_unstable();
    if targets.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(GroupMap::from_pairs(
        words.entries.iter().map(|(x, _)| *x).zip(img).collect(),
    ))
}

fn is_homomorphism(a: &PermGroup, map: &GroupMap) -> bool {
    let f = |x: &Perm| map.apply(x).expect("map covers the group");
    a.elements().iter().all(|x| {
        let fx = f(x);
        a.elements().iter().all(|y| f(&(*x * *y)) == fx * f(y))
    })
}

/// Sorted multiset of element orders.
pub fn order_profile(group: &PermGroup) -> Vec<usize> {
    let mut orders: Vec<usize> = group.elements().iter().map(Perm::order).collect();
    orders.sort_unstable();
    orders
}

/// The five isomorphism types of groups of order 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IsoType8 {
    C8,
    C2xC4,
    C2xC2xC2,
    D8,
    Q8,
}

impl IsoType8 {
    pub const ALL: [IsoType8; 5] = [
        IsoType8::C8,
        IsoType8::C2xC4,
        IsoType8::C2xC2xC2,
        IsoType8::D8,
        IsoType8::Q8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IsoType8::C8 => "C8",
            IsoType8::C2xC4 => "C2xC4",
            IsoType8::C2xC2xC2 => "C2xC2xC2",
            IsoType8::D8 => "D8",
            IsoType8::Q8 => "Q8",
        }
    }
}

impl fmt::Display for IsoType8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies a group of order 8 by its element orders.
pub fn order8_type(group: &PermGroup) -> Result<IsoType8> {
    if group.order() != 8 {
        return Err(Error::NotOrder8(group.order()));
    }
    let profile = order_profile(group);
    let count = |k: usize| profile.iter().filter(|&&o| o == k).count();
    Ok(if count(8) > 0 {
        IsoType8::C8
    } else if count(2) == 7 {
        IsoType8::C2xC2xC2
    } else if count(2) == 1 {
        IsoType8::Q8
    } else if count(2) == 5 {
        IsoType8::D8
    } else {
        debug_assert_eq!((count(2), count(4)), (3, 4));
        IsoType8::C2xC4
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(gens: &str) -> PermGroup {
        PermGroup::parse(gens, 8).unwrap()
    }

    fn n1() -> PermGroup {
        group("(1,3)(2,4)(5,7)(6,8); (1,8)(2,7)(3,6)(4,5); (1,7)(2,8)(3,5)(4,6)")
    }

    #[test]
    fn trivial_groups_have_one_isomorphism() {
        let t = PermGroup::trivial(3);
        let isos = isomorphisms(&t, &t).unwrap();
        assert_eq!(isos.len(), 1);
        assert!(isos[0].is_identity());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(order8_type(&n1()).unwrap(), IsoType8::C2xC2xC2);
        assert_eq!(order8_type(&group("(1,2,3,4,5,6,7,8)")).unwrap(), IsoType8::C8);
        assert_eq!(
            order8_type(&PermGroup::trivial(8)),
            Err(Error::NotOrder8(1))
        );
    }

    #[test]
    fn exponent_mismatch_gives_no_isomorphism() {
        // Q8 acting on itself by right multiplication: i=(1,3,2,4)(5,8,6,7), j=(1,5,2,6)(3,7,4,8)
        let q8 = group("(1,3,2,4)(5,8,6,7); (1,5,2,6)(3,7,4,8)");
        assert_eq!(q8.order(), 8);
        assert_eq!(order8_type(&q8).unwrap(), IsoType8::Q8);
        assert!(isomorphisms(&n1(), &q8).unwrap().is_empty());
    }

    #[test]
    fn map_inverse_composes_to_identity() {
        let isos = automorphisms(&n1()).unwrap();
        assert_eq!(isos.len(), 168);
        for f in isos.iter().take(20) {
            assert!(f.then(&f.inverse()).unwrap().is_identity());
        }
    }
}
