use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gpstruct::{GPContext, HGStructure};
use crate::permcore::{GroupMap, Perm, PermGroup};
use crate::quartic::coef::join_signed;
use crate::quartic::field::{galois_act, FieldElt};

/// An element `Σ a_n n` of the group algebra `K̃[N]`.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<AlgTerm>", from = "Vec<AlgTerm>")]
pub struct AlgElt {
    terms: BTreeMap<Perm, FieldElt>,
}

#[derive(Clone, Serialize, Deserialize)]
struct AlgTerm {
    element: Perm,
    coefficient: FieldElt,
}

impl From<AlgElt> for Vec<AlgTerm> {
    fn from(h: AlgElt) -> Self {
        h.terms
            .into_iter()
            .map(|(element, coefficient)| AlgTerm {
                element,
                coefficient,
            })
            .collect()
    }
}

impl From<Vec<AlgTerm>> for AlgElt {
    fn from(v: Vec<AlgTerm>) -> Self {
        let mut h = AlgElt::zero();
        for t in v {
            h.add_term(t.element, &t.coefficient);
        }
        h
    }
}

impl AlgElt {
    pub fn zero() -> AlgElt {
        AlgElt::default()
    }

    pub fn term(n: Perm, a: FieldElt) -> AlgElt {
        let mut h = AlgElt::zero();
        h.add_term(n, &a);
        h
    }

    pub fn with_term(mut self, n: Perm, a: FieldElt) -> AlgElt {
        self.add_term(n, &a);
        self
    }

    pub fn add_term(&mut self, n: Perm, a: &FieldElt) {
        if a.is_zero() {
            return;
        }
        let slot = self.terms.entry(n).or_default();
        *slot = &*slot + a;
        if slot.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn coefficient(&self, n: &Perm) -> FieldElt {
        self.terms.get(n).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &FieldElt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Perm> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &AlgElt) -> AlgElt {
        let mut out = self.clone();
        for (n, a) in &other.terms {
            out.add_term(*n, a);
        }
        out
    }

    pub fn scale(&self, c: &FieldElt) -> AlgElt {
        let mut out = AlgElt::zero();
        for (n, a) in &self.terms {
            out.add_term(*n, &(a * c));
        }
        out
    }

    /// `Σ a_n φ(n)`.
    pub fn map_group(&self, phi: &GroupMap) -> Result<AlgElt> {
        let mut out = AlgElt::zero();
        for (n, a) in &self.terms {
            let m = phi.apply(n).ok_or_else(|| Error::SupportOutside(n.to_string()))?;
            out.add_term(m, a);
        }
        Ok(out)
    }
}

impl fmt::Display for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self.terms.iter().map(|(n, a)| format!("({a})*{n}")).collect();
        f.write_str(&join_signed(&terms))
    }
}

impl fmt::Debug for AlgElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgElt({self})")
    }
}

/// For each point `i` of the coset action, the representative `g_i ∈ S₄` of
/// its coset, acting on the roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisEmbedding {
    point_reps: Vec<Perm>,
    subgroup: PermGroup,
}

impl GaloisEmbedding {
    pub fn from_context(ctx: &GPContext) -> Result<GaloisEmbedding> {
        if ctx.group().degree() != 4 {
            return Err(Error::UnsupportedDegree(ctx.group().degree()));
        }
        Ok(GaloisEmbedding {
            point_reps: ctx.point_reps().to_vec(),
            subgroup: ctx.subgroup().clone(),
        })
    }

    /// The same embedding with other coset representatives, each of which
    /// must lie in the coset it replaces.
    pub fn with_representatives(&self, reps: Vec<Perm>) -> Result<GaloisEmbedding> {
        if reps.len() != self.point_reps.len() {
            return Err(Error::DegreeMismatch(self.point_reps.len(), reps.len()));
        }
        for (i, (old, new)) in self.point_reps.iter().zip(&reps).enumerate() {
            if new.degree() != 4 || !self.subgroup.contains(&(old.inverse() * *new)) {
                return Err(Error::CosetMismatch(i + 1));
            }
        }
        Ok(GaloisEmbedding {
            point_reps: reps,
            subgroup: self.subgroup.clone(),
        })
    }

    pub fn degree(&self) -> usize {
        self.point_reps.len()
    }

    pub fn point_reps(&self) -> &[Perm] {
        &self.point_reps
    }

    /// The representative for point `i` (1-based).
    pub fn point_rep(&self, i: usize) -> &Perm {
        &self.point_reps[i - 1]
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    /// Whether `x ∈ K`, i.e. `x` is fixed by the point stabilizer `G'`.
    pub fn is_fixed(&self, x: &FieldElt) -> bool {
        self.subgroup
            .generators()
            .iter()
            .all(|g| galois_act(g, x) == *x)
    }
}

fn check_support(structure: &HGStructure, h: &AlgElt) -> Result<()> {
    match h.terms().find(|(n, _)| !structure.group.contains(n)) {
        Some((n, _)) => Err(Error::SupportOutside(n.to_string())),
        None => Ok(()),
    }
}

/// `(Σ a_n n) · x = Σ a_n g_{n⁻¹(1)}(x)` for `x ∈ K`.
pub fn hopf_action(
    emb: &GaloisEmbedding,
    structure: &HGStructure,
    h: &AlgElt,
    x: &FieldElt,
) -> Result<FieldElt> {
    if structure.group.degree() != emb.degree() {
        return Err(Error::DegreeMismatch(emb.degree(), structure.group.degree()));
    }
    check_support(structure, h)?;
    if !emb.is_fixed(x) {
        return Err(Error::NotFixed);
    }
    let mut acc = FieldElt::zero();
    for (n, a) in h.terms() {
        let g = emb.point_rep(n.inverse().apply(1));
        acc = &acc + &(a * &galois_act(g, x));
    }
    Ok(acc)
}

/// `ε(Σ a_n n) = Σ a_n`.
pub fn counit(h: &AlgElt) -> FieldElt {
    h.terms()
        .fold(FieldElt::zero(), |acc, (_, a)| &acc + a)
}

/// Whether `h` lies in `H = K̃[N]^G`: for every generator `g` of `G` and every
/// `n ∈ N`, the coefficient at `λ(g) n λ(g)⁻¹` is `g(a_n)`.
pub fn is_in_h(ctx: &GPContext, structure: &HGStructure, h: &AlgElt) -> Result<bool> {
    if ctx.group().degree() != 4 {
        return Err(Error::UnsupportedDegree(ctx.group().degree()));
    }
    check_support(structure, h)?;
    for (g, lg) in ctx.generators().iter().zip(ctx.lambda()) {
        for n in structure.group.elements() {
            let a = h.coefficient(n);
            let moved = h.coefficient(&n.conjugated_by(lg));
            let expected = if a.is_zero() {
                a
            } else {
                galois_act(g, &a)
            };
            if moved != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
