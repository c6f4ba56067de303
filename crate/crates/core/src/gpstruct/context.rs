use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::{Perm, PermGroup, MAX_DEGREE};

/// The left-translation action `λ : G → Sym(G/G')`.
///
/// Points are 1-based; point 1 is the coset `G'`. `point_reps[i - 1]` is an
/// element `g_i` of `G` with `λ(g_i)(1) = i`, i.e. a representative of the
/// coset labelled `i`.
#[derive(Clone, Debug, Serialize)]
pub struct GPContext {
    group: PermGroup,
    subgroup: PermGroup,
    generators: Vec<Perm>,
    lambda: Vec<Perm>,
    lambda_group: PermGroup,
    point_reps: Vec<Perm>,
    #[serde(skip)]
    words: Vec<Vec<usize>>,
    // every element of G paired with its λ image, sorted by element
    #[serde(skip)]
    lambda_table: Vec<(Perm, Perm)>,
}

/// Builds `λ` from the action of `G` on the left cosets of `G'`. Cosets are
/// numbered breadth-first from `G'` over the generators of `G` in order.
pub fn build_lambda(group: &PermGroup, subgroup: &PermGroup) -> Result<GPContext> {
    if !subgroup.is_subgroup_of(group) {
        return Err(Error::NotSubgroup);
    }
    let n = group.order() / subgroup.order();
    if n > MAX_DEGREE {
        return Err(Error::DegreeLimit {
            what: "coset actions",
            degree: n,
            limit: MAX_DEGREE,
        });
    }
    let generators = group.generators().to_vec();
    let coset_key = |g: &Perm| -> Perm {
        subgroup
            .elements()
            .iter()
            .map(|h| *g * *h)
            .min()
            .expect("subgroup contains the identity")
    };

    let id = Perm::identity(group.degree());
    let mut point_of: HashMap<Perm, usize> = HashMap::from([(coset_key(&id), 0)]);
    let mut reps = vec![id];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(j) = queue.pop_front() {
        for (gi, g) in generators.iter().enumerate() {
            let rep = *g * reps[j];
            let key = coset_key(&rep);
            if !point_of.contains_key(&key) {
                point_of.insert(key, reps.len());
                let mut word = vec![gi];
                word.extend_from_slice(&words[j]);
                words.push(word);
                queue.push_back(reps.len());
                reps.push(rep);
            }
        }
    }
    debug_assert_eq!(reps.len(), n);

    let lambda = generators
        .iter()
        .map(|g| {
            let images: Vec<usize> = reps.iter().map(|r| point_of[&coset_key(&(*g * *r))]).collect();
            Perm::from_zero_based(&images)
        })
        .collect::<Vec<_>>();

    GPContext::assemble(group.clone(), subgroup.clone(), generators, lambda)
}

impl GPContext {
    fn assemble(
        group: PermGroup,
        subgroup: PermGroup,
        generators: Vec<Perm>,
        lambda: Vec<Perm>,
    ) -> Result<GPContext> {
        let n = group.order() / subgroup.order();
        let (point_reps, words) = bfs_reps(&generators, &lambda, n, group.degree());
        if point_reps.len() != n {
            return Err(Error::NoRelabeling(format!(
                "action reaches {} of {n} points",
                point_reps.len()
            )));
        }
        let lambda_group = PermGroup::new(n, lambda.clone())?;

        // Point of every element of G, then λ(x)(i) = point(x·g_i).
        let mut point_of: HashMap<Perm, usize> = HashMap::new();
        for (i, rep) in point_reps.iter().enumerate() {
            for h in subgroup.elements() {
                point_of.insert(*rep * *h, i);
            }
        }
        if point_of.len() != group.order() {
            return Err(Error::NoRelabeling(
                "representatives do not give distinct cosets".into(),
            ));
        }
        let lambda_of = |x: &Perm| -> Perm {
            let images: Vec<usize> = point_reps.iter().map(|r| point_of[&(*x * *r)]).collect();
            Perm::from_zero_based(&images)
        };
        let lambda_table: Vec<(Perm, Perm)> =
            group.elements().iter().map(|x| (*x, lambda_of(x))).collect();

        let ctx = GPContext {
            group,
            subgroup,
            generators,
            lambda,
            lambda_group,
            point_reps,
            words,
            lambda_table,
        };
        ctx.validate()?;
        Ok(ctx)
    }

    fn validate(&self) -> Result<()> {
        // λ agrees with the stored generator images and is multiplicative.
        for (g, lg) in self.generators.iter().zip(&self.lambda) {
            if self.lambda_of(g) != *lg {
                return Err(Error::NoRelabeling(format!("λ({g}) disagrees with {lg}")));
            }
        }
        for (x, lx) in &self.lambda_table {
            for (g, lg) in self.generators.iter().zip(&self.lambda) {
                if self.lambda_of(&(*x * *g)) != *lx * *lg {
                    return Err(Error::NoRelabeling(format!("λ not multiplicative at {x}, {g}")));
                }
            }
        }
        if !self.lambda_group.is_transitive() {
            return Err(Error::NoRelabeling("λ(G) is not transitive".into()));
        }
        let image_of_sub = self.lambda_image(&self.subgroup)?;
        if image_of_sub != self.lambda_group.stabilizer(1) {
            return Err(Error::NoRelabeling("stabilizer of 1 is not λ(G')".into()));
        }
        Ok(())
    }

    /// `G`.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// `G'`.
    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    /// Number of cosets.
    pub fn degree(&self) -> usize {
        self.point_reps.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// `λ` of each generator, in generator order.
    pub fn lambda(&self) -> &[Perm] {
        &self.lambda
    }

    /// `λ(G)`.
    pub fn lambda_group(&self) -> &PermGroup {
        &self.lambda_group
    }

    /// `g_i` for points `i = 1..n`, stored at index `i - 1`.
    pub fn point_reps(&self) -> &[Perm] {
        &self.point_reps
    }

    /// Generator word for the representative of a point; the representative
    /// is the left-to-right product of `generators[w]`.
    pub fn word(&self, point: usize) -> &[usize] {
        &self.words[point - 1]
    }

    pub fn lambda_of(&self, g: &Perm) -> Perm {
        let i = self
            .lambda_table
            .binary_search_by(|(x, _)| x.cmp(g))
            .unwrap_or_else(|_| panic!("{g} is not in G"));
        self.lambda_table[i].1
    }

    /// Every element of `G` with its image, sorted by element.
    pub fn lambda_table(&self) -> &[(Perm, Perm)] {
        &self.lambda_table
    }

    pub fn lambda_image(&self, sub: &PermGroup) -> Result<PermGroup> {
        PermGroup::new(
            self.degree(),
            sub.generators().iter().map(|g| self.lambda_of(g)).collect(),
        )
    }

    /// The coset label of `g`, i.e. `λ(g)(1)`.
    pub fn point_of(&self, g: &Perm) -> usize {
        self.lambda_of(g).apply(1)
    }

    /// Kernel of `λ`.
    pub fn kernel(&self) -> PermGroup {
        let id = Perm::identity(self.degree());
        let elts = self
            .lambda_table
            .iter()
            .filter(|(_, l)| *l == id)
            .map(|(g, _)| *g)
            .collect::<Vec<_>>();
        PermGroup::from_sorted_unchecked(self.group.degree(), elts)
    }

    /// Core of `G'` in `G`: the intersection of all its conjugates.
    pub fn core(&self) -> PermGroup {
        self.group
            .elements()
            .iter()
            .fold(self.subgroup.clone(), |acc, g| {
                acc.intersection(&self.subgroup.conjugate_by(g))
            })
    }

    /// Relabels points so that `λ(generators[i]) = target[i]`, keeping point
    /// 1 fixed. Returns the relabeling `π` (with `π λ(g) π⁻¹ = target(g)`) and
    /// the context in the new coordinates.
    pub fn canonical_relabel(&self, target: &[Perm]) -> Result<(Perm, GPContext)> {
        let n = self.degree();
        if target.len() != self.generators.len() {
            return Err(Error::NoRelabeling(format!(
                "{} target images for {} generators",
                target.len(),
                self.generators.len()
            )));
        }
        if let Some(bad) = target.iter().find(|t| t.degree() != n) {
            return Err(Error::DegreeMismatch(n, bad.degree()));
        }
        let images: Vec<usize> = (1..=n)
            .map(|p| {
                self.word(p)
                    .iter()
                    .rev()
                    .fold(1, |pt, &gi| target[gi].apply(pt))
            })
            .collect();
        let pi = Perm::from_images(&images)
            .map_err(|_| Error::NoRelabeling("target words do not reach every point".into()))?;
        for (lg, t) in self.lambda.iter().zip(target) {
            if lg.conjugated_by(&pi) != *t {
                return Err(Error::NoRelabeling(format!(
                    "π λ π⁻¹ gives {} instead of {t}",
                    lg.conjugated_by(&pi)
                )));
            }
        }
        let relabeled = GPContext::assemble(
            self.group.clone(),
            self.subgroup.clone(),
            self.generators.clone(),
            target.to_vec(),
        )?;
        Ok((pi, relabeled))
    }
}

/// Breadth-first coset representatives over generator words.
fn bfs_reps(
    generators: &[Perm],
    lambda: &[Perm],
    n: usize,
    group_degree: usize,
) -> (Vec<Perm>, Vec<Vec<usize>>) {
    let mut reps: Vec<Option<Perm>> = vec![None; n];
    let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
    reps[0] = Some(Perm::identity(group_degree));
    let mut queue = VecDeque::from([0usize]);
    while let Some(j) = queue.pop_front() {
        for (gi, (g, lg)) in generators.iter().zip(lambda).enumerate() {
            let i = lg.apply0(j);
            if reps[i].is_none() {
                reps[i] = Some(*g * reps[j].expect("visited"));
                let mut word = vec![gi];
                word.extend_from_slice(&words[j]);
                words[i] = word;
                queue.push_back(i);
            }
        }
    }
    // unreached points are dropped; the caller checks the count
    (reps.into_iter().flatten().collect(), words)
}
