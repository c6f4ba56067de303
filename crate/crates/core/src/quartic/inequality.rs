use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gpstruct::{GIso, GPContext, HGStructure};
use crate::quartic::coef::CoefPoly;
use crate::quartic::field::{normal_form, FieldElt, Monomial, RootPoly};
use crate::quartic::hopf::{hopf_action, is_in_h, AlgElt, GaloisEmbedding};

/// Outcome of comparing `μ_source(h)(α₁)` and `μ_target(Φ(h))(α₁)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub first_expansion: FieldElt,
    pub first_matches_reference: bool,
    pub second_expansion: FieldElt,
    pub second_matches_reference: bool,
    pub difference: FieldElt,
    pub difference_nonzero: bool,
    pub h: AlgElt,
    pub h_in_source: bool,
    pub phi_h: AlgElt,
    pub phi_h_in_target: bool,
    pub mu_source: FieldElt,
    pub mu_target: FieldElt,
    pub mu_source_matches: bool,
    pub mu_target_matches: bool,
    pub mu_values_differ: bool,
    /// `(b₁, b₂, b₃, b₄)` used for the specialized comparison.
    pub specialization: [String; 4],
    pub specialized_difference_nonzero: bool,
}

impl InequalityReport {
    pub fn all_hold(&self) -> bool {
        self.first_matches_reference
            && self.second_matches_reference
            && self.difference_nonzero
            && self.h_in_source
            && self.phi_h_in_target
            && self.mu_source_matches
            && self.mu_target_matches
            && self.mu_values_differ
            && self.specialized_difference_nonzero
    }
}

fn from_table(rows: &[(u32, u32, u32, CoefPoly)]) -> FieldElt {
    FieldElt::from_terms(
        rows.iter()
            .map(|(i4, i3, i2, c)| (Monomial::new(*i4, *i3, *i2).expect("basis"), c.clone())),
    )
}

/// `α₄³ + (α₂ − b₁)α₄² + (−α₂α₃ + b₂ + α₃²)α₄ + (−α₃² + b₁α₃)α₂ − b₃`,
/// entered term by term in the basis.
pub fn reference_first_expansion() -> FieldElt {
    let one = CoefPoly::one;
    let m1 = || CoefPoly::from_integer(-1);
    let b = CoefPoly::b;
    from_table(&[
        (3, 0, 0, one()),
        (2, 0, 1, one()),
        (2, 0, 0, -b(1)),
        (1, 1, 1, m1()),
        (1, 0, 0, b(2)),
        (1, 2, 0, one()),
        (0, 2, 1, m1()),
        (0, 1, 1, b(1)),
        (0, 0, 0, -b(3)),
    ])
}

/// `−α₄³ + (−α₂ + b₁)α₄² + ((b₁ − α₃)α₂ − b₂ + b₁α₃ − α₃²)α₄ + α₂α₃²`.
pub fn reference_second_expansion() -> FieldElt {
    let one = CoefPoly::one;
    let m1 = || CoefPoly::from_integer(-1);
    let b = CoefPoly::b;
    from_table(&[
        (3, 0, 0, m1()),
        (2, 0, 1, m1()),
        (2, 0, 0, b(1)),
        (1, 0, 1, b(1)),
        (1, 1, 1, m1()),
        (1, 0, 0, -b(2)),
        (1, 1, 0, b(1)),
        (1, 2, 0, m1()),
        (0, 2, 1, one()),
    ])
}

fn cyclic_sum(order: [usize; 3]) -> RootPoly {
    let a = RootPoly::alpha;
    let [x, y, z] = order;
    &(&(&a(x).pow(2) * &a(y)) + &(&a(y).pow(2) * &a(z))) + &(&a(z).pow(2) * &a(x))
}

/// `α₂²α₃ + α₃²α₄ + α₄²α₂`.
pub fn first_sum() -> RootPoly {
    cyclic_sum([2, 3, 4])
}

/// `α₂²α₄ + α₃²α₂ + α₄²α₃`.
pub fn second_sum() -> RootPoly {
    cyclic_sum([2, 4, 3])
}

/// `h = α₁² s + α₂² rs + α₃² st + α₄² rst`, where `[r, s, t]` are the
/// generators of `structure` in order.
pub fn sample_element(structure: &HGStructure) -> Result<AlgElt> {
    let gens = structure.group.generators();
    let [r, s, t] = gens else {
        return Err(Error::InvalidPerm(format!(
            "expected three generators, got {}",
            gens.len()
        )));
    };
    let sq = |i| FieldElt::alpha(i).pow(2);
    Ok(AlgElt::term(*s, sq(1))
        .with_term(*r * *s, sq(2))
        .with_term(*s * *t, sq(3))
        .with_term(*r * *s * *t, sq(4)))
}

/// Evaluates the sample element of `source` and its image under `phi` on
/// `α₁`, and checks both against the closed forms `α₁³ + first_sum` and
/// `α₁³ + second_sum`, whose normal forms are compared with the reference
/// expansions.
pub fn inequality_check(
    ctx: &GPContext,
    source: &HGStructure,
    target: &HGStructure,
    phi: &GIso,
) -> Result<InequalityReport> {
    let emb = GaloisEmbedding::from_context(ctx)?;
    let first = normal_form(&first_sum());
    let second = normal_form(&second_sum());
    let difference = &first - &second;

    let h = sample_element(source)?;
    let phi_h = h.map_group(&phi.map)?;
    let alpha1 = FieldElt::alpha(1);
    let mu_source = hopf_action(&emb, source, &h, &alpha1)?;
    let mu_target = hopf_action(&emb, target, &phi_h, &alpha1)?;
    let cube = RootPoly::alpha(1).pow(3);

    let b = [0, 0, 0, -1].map(|v| BigRational::from_integer(v.into()));
    Ok(InequalityReport {
        first_matches_reference: first == reference_first_expansion(),
        second_matches_reference: second == reference_second_expansion(),
        difference_nonzero: !difference.is_zero(),
        specialized_difference_nonzero: !difference.specialize(&b).is_zero(),
        specialization: b.map(|x| x.to_string()),
        h_in_source: is_in_h(ctx, source, &h)?,
        phi_h_in_target: is_in_h(ctx, target, &phi_h)?,
        mu_source_matches: mu_source == normal_form(&(&cube + &first_sum())),
        mu_target_matches: mu_target == normal_form(&(&cube + &second_sum())),
        mu_values_differ: mu_source != mu_target,
        first_expansion: first,
        second_expansion: second,
        difference,
        h,
        phi_h,
        mu_source,
        mu_target,
    })
}
