use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permcore::perm::{all_perms, Perm, MAX_DEGREE};

/// Closure cap used by the plain constructors. Large enough for `S_8`.
pub const DEFAULT_CAP: usize = 100_000;

/// Largest degree for which normalizers and centralizers are found by a full
/// scan of the symmetric group.
pub const SCAN_DEGREE_LIMIT: usize = 8;

/// Largest group order accepted by [`PermGroup::subgroups`] and the
/// isomorphism search.
pub const BRUTE_FORCE_ORDER_LIMIT: usize = 64;

/// A permutation group with its element set materialized and sorted
/// lexicographically. Equality compares element sets, not generators.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

/// Closure of `gens` under composition, sorted. Fails once more than `cap`
/// elements have been produced.
pub fn generate(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    generate_capped(degree, gens, cap)?.ok_or(Error::CapExceeded(cap))
}

/// As [`generate`], but reports overflow as `Ok(None)` so searches can treat
/// it as "too large" rather than as an error.
pub(crate) fn generate_capped(
    degree: usize,
    gens: &[Perm],
    cap: usize,
) -> Result<Option<Vec<Perm>>> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x * *g;
            if seen.insert(y) {
                if seen.len() > cap {
                    return Ok(None);
                }
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(Some(out))
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        PermGroup::with_cap(degree, generators, DEFAULT_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<PermGroup> {
        check_degree(degree)?;
        let elements = generate(degree, &generators, cap)?;
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Parses `;`-separated generators in cycle notation.
    pub fn parse(gens: &str, degree: usize) -> Result<PermGroup> {
        let perms = gens
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Perm::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, perms)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Perm::identity(degree)],
        }
    }

    pub fn symmetric(degree: usize) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if degree >= 2 {
            let cycle: Vec<usize> = (1..=degree).map(|i| i % degree + 1).collect();
            gens.push(Perm::from_images(&cycle)?);
            let mut swap: Vec<usize> = (1..=degree).collect();
            swap.swap(0, 1);
            gens.push(Perm::from_images(&swap)?);
        }
        PermGroup::new(degree, gens)
    }

    /// Wraps an element set after checking that it is a group. Generators are
    /// chosen greedily in lexicographic order.
    pub fn from_elements(degree: usize, elements: impl IntoIterator<Item = Perm>) -> Result<PermGroup> {
        let set: BTreeSet<Perm> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(Error::NotClosed("empty set".into()));
        }
        for p in &set {
            if p.degree() != degree {
                return Err(Error::DegreeMismatch(degree, p.degree()));
            }
        }
        if !set.contains(&Perm::identity(degree)) {
            return Err(Error::NotClosed("identity missing".into()));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&(*a * *b)) {
                    return Err(Error::NotClosed(format!("{a} * {b} escapes")));
                }
            }
        }
        Ok(Self::from_sorted_unchecked(degree, set.into_iter().collect()))
    }

    pub(crate) fn from_sorted_unchecked(degree: usize, elements: Vec<Perm>) -> PermGroup {
        let generators = greedy_generators(degree, &elements);
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        p.degree() == self.degree && self.elements.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Same element set; generators may differ.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.elements == other.elements
    }

    /// A generating set with no redundant member, chosen greedily in
    /// lexicographic element order.
    pub fn minimal_generators(&self) -> Vec<Perm> {
        greedy_generators(self.degree, &self.elements)
    }

    /// 1-based orbit of `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.elements.iter().map(|g| g.apply(point)).collect();
        set.into_iter().collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(1).len() == self.degree
    }

    /// Transitive with order equal to the degree.
    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.order() == self.degree.max(1)
    }

    pub fn stabilizer(&self, point: usize) -> PermGroup {
        let elts = self
            .elements
            .iter()
            .filter(|g| g.apply(point) == point)
            .copied()
            .collect();
        Self::from_sorted_unchecked(self.degree, elts)
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elts = self
            .elements
            .iter()
            .filter(|g| other.contains(g))
            .copied()
            .collect();
        Self::from_sorted_unchecked(self.degree, elts)
    }

    /// `g H g⁻¹`.
    pub fn conjugate_by(&self, g: &Perm) -> PermGroup {
        let mut elts: Vec<Perm> = self.elements.iter().map(|x| x.conjugated_by(g)).collect();
        elts.sort_unstable();
        PermGroup {
            degree: self.degree,
            generators: self.generators.iter().map(|x| x.conjugated_by(g)).collect(),
            elements: elts,
        }
    }

    /// True iff conjugation by `g` maps the group onto itself.
    pub fn is_normalized_by_element(&self, g: &Perm) -> bool {
        self.generators.iter().all(|x| self.contains(&x.conjugated_by(g)))
    }

    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        ambient
            .generators
            .iter()
            .all(|g| self.is_normalized_by_element(g))
    }

    pub fn center(&self) -> PermGroup {
        let elts = self
            .elements
            .iter()
            .filter(|z| self.generators.iter().all(|g| **z * *g == *g * **z))
            .copied()
            .collect();
        Self::from_sorted_unchecked(self.degree, elts)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| *a * *b == *b * *a))
    }

    /// Conjugacy classes, each sorted, ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Perm>> {
        let mut assigned: HashSet<Perm> = HashSet::new();
        let mut classes = Vec::new();
        for x in &self.elements {
            if assigned.contains(x) {
                continue;
            }
            let mut class = BTreeSet::from([*x]);
            let mut queue = VecDeque::from([*x]);
            while let Some(y) = queue.pop_front() {
                for g in &self.generators {
                    let z = y.conjugated_by(g);
                    if class.insert(z) {
                        queue.push_back(z);
                    }
                }
            }
            assigned.extend(class.iter().copied());
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Elements of `S_n` normalizing this group, by full scan.
    pub fn normalizer_in_sym(&self) -> Result<PermGroup> {
        self.scan_sym("normalizer scan", |g| self.is_normalized_by_element(g))
    }

    /// Elements of `S_n` commuting with every element of this group.
    pub fn centralizer_in_sym(&self) -> Result<PermGroup> {
        self.scan_sym("centralizer scan", |g| {
            self.generators.iter().all(|x| *g * *x == *x * *g)
        })
    }

    fn scan_sym(&self, what: &'static str, keep: impl Fn(&Perm) -> bool) -> Result<PermGroup> {
        if self.degree > SCAN_DEGREE_LIMIT {
            return Err(Error::DegreeLimit {
                what,
                degree: self.degree,
                limit: SCAN_DEGREE_LIMIT,
            });
        }
        let elts: Vec<Perm> = all_perms(self.degree).filter(|g| keep(g)).collect();
        Ok(Self::from_sorted_unchecked(self.degree, elts))
    }

    /// Every subgroup, sorted by order and then by element list.
    ///
    /// Starts from the cyclic subgroups and repeatedly joins each known
    /// subgroup with each cyclic one until nothing new appears, which reaches
    /// every subgroup regardless of its rank.
    pub fn subgroups(&self) -> Result<Vec<PermGroup>> {
        if self.order() > BRUTE_FORCE_ORDER_LIMIT {
            return Err(Error::SizeLimit {
                what: "subgroup enumeration",
                order: self.order(),
                limit: BRUTE_FORCE_ORDER_LIMIT,
            });
        }
        let cyclic: BTreeSet<Vec<Perm>> = self
            .elements
            .iter()
            .map(|x| generate(self.degree, &[*x], usize::MAX))
            .collect::<Result<_>>()?;
        let mut all: BTreeSet<Vec<Perm>> = cyclic.clone();
        let mut frontier: Vec<Vec<Perm>> = all.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for sub in &frontier {
                let sub_gens = greedy_generators(self.degree, sub);
                for cyc in &cyclic {
                    if cyc.iter().all(|c| sub.binary_search(c).is_ok()) {
                        continue;
                    }
                    let joined = generate(self.degree, &join_gens(&sub_gens, cyc), usize::MAX)?;
                    if all.insert(joined.clone()) {
                        next.push(joined);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<PermGroup> = all
            .into_iter()
            .map(|e| Self::from_sorted_unchecked(self.degree, e))
            .collect();
        out.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        Ok(out)
    }
}

fn join_gens(gens: &[Perm], cyclic: &[Perm]) -> Vec<Perm> {
    let mut out = gens.to_vec();
    out.extend(greedy_generators(cyclic[0].degree(), cyclic));
    out
}

fn greedy_generators(degree: usize, sorted_elements: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: Vec<Perm> = vec![Perm::identity(degree)];
    for x in sorted_elements {
        if span.binary_search(x).is_ok() {
            continue;
        }
        gens.push(*x);
        span = generate(degree, &gens, usize::MAX).expect("degrees agree");
        if span.len() == sorted_elements.len() {
            break;
        }
    }
    gens
}

/// Serialized as degree, generators in cycle notation, and order; the element
/// set is regenerated on load and checked against the order.
#[derive(Serialize, Deserialize)]
struct PermGroupRepr {
    degree: usize,
    generators: Vec<String>,
    order: usize,
}

impl Serialize for PermGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermGroupRepr {
            degree: self.degree,
            generators: self.generators.iter().map(Perm::to_string).collect(),
            order: self.order(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PermGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<PermGroup, D::Error> {
        use serde::de::Error as _;
        let repr = PermGroupRepr::deserialize(d)?;
        let gens = repr
            .generators
            .iter()
            .map(|g| Perm::parse(g, repr.degree))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let group = PermGroup::new(repr.degree, gens).map_err(D::Error::custom)?;
        if group.order() != repr.order {
            return Err(D::Error::custom(format!(
                "generators give order {}, expected {}",
                group.order(),
                repr.order
            )));
        }
        Ok(group)
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl std::hash::Hash for PermGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.elements.hash(state);
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(Perm::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {}, {})", self.degree, self.order(), self)
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree > MAX_DEGREE {
        return Err(Error::DegreeLimit {
            what: "permutation groups",
            degree,
            limit: MAX_DEGREE,
        });
    }
    Ok(())
}
