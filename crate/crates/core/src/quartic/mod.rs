//! Exact arithmetic in the splitting field of the generic quartic
//! `P(X) = X⁴ − b₁X³ + b₂X² − b₃X + b₄`, with `b₁..b₄` indeterminates.
//!
//! Elements are kept in the basis `α₄^{i₄} α₃^{i₃} α₂^{i₂}` (`i₄ ≤ 3`,
//! `i₃ ≤ 2`, `i₂ ≤ 1`). The rewriting rules come from dividing `P` by
//! `X − α₄` and then by `X − α₃`; they are derived once on first use and
//! checked against `P(α_j) = 0`.
//!
//! On top of the field sit the group algebras `K̃[N]`, the Hopf action
//! `(Σ a_n n)·x = Σ a_n g_{n⁻¹(1)}(x)` and the fixed-point test for
//! `H = K̃[N]^G`.

mod coef;
mod field;
mod hopf;
mod inequality;

pub use coef::CoefPoly;
pub use field::{galois_act, normal_form, sqrt_disc, FieldElt, Monomial, RootPoly};
pub use hopf::{counit, hopf_action, is_in_h, AlgElt, GaloisEmbedding};
pub use inequality::{
    first_sum, inequality_check, reference_first_expansion, reference_second_expansion,
    sample_element, second_sum, InequalityReport,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gpstruct::{build_lambda, g_isomorphisms, GPContext, HGStructure};
    use crate::permcore::{Perm, PermGroup};

    fn ctx() -> GPContext {
        let g = PermGroup::parse("(1,2,3,4); (1,2)", 4).unwrap();
        let gp = PermGroup::parse("(2,3,4)", 4).unwrap();
        let target = [
            Perm::parse("(1,2,3,4)(5,6,7,8)", 8).unwrap(),
            Perm::parse("(1,2)(3,5)(4,6)(7,8)", 8).unwrap(),
        ];
        build_lambda(&g, &gp).unwrap().canonical_relabel(&target).unwrap().1
    }

    fn structure(label: &str, gens: &str) -> HGStructure {
        HGStructure {
            label: label.into(),
            group: PermGroup::parse(gens, 8).unwrap(),
            type_name: "C2xC2xC2".into(),
        }
    }

    fn n1() -> HGStructure {
        structure("N_1", "(1,3)(2,4)(5,7)(6,8); (1,8)(2,7)(3,6)(4,5); (1,7)(2,8)(3,5)(4,6)")
    }

    fn n3() -> HGStructure {
        structure("N_3", "(1,6)(2,4)(3,8)(5,7); (1,7)(2,3)(4,8)(5,6); (1,8)(2,5)(3,6)(4,7)")
    }

    fn n4() -> HGStructure {
        structure("N_4", "(1,3)(2,5)(4,7)(6,8); (1,7)(2,6)(3,4)(5,8); (1,6)(2,7)(3,8)(4,5)")
    }

    #[test]
    fn expansions_match_reference() {
        assert_eq!(normal_form(&first_sum()), reference_first_expansion());
        assert_eq!(normal_form(&second_sum()), reference_second_expansion());
    }

    #[test]
    fn full_inequality_report() {
        let c = ctx();
        let phi = g_isomorphisms(&c, &n3(), &n4()).unwrap().remove(0);
        let report = inequality_check(&c, &n3(), &n4(), &phi).unwrap();
        assert!(report.all_hold(), "{report:#?}");
    }

    #[test]
    fn membership_in_h() {
        let c = ctx();
        let n = n3();
        assert!(is_in_h(&c, &n, &AlgElt::term(Perm::identity(8), FieldElt::one())).unwrap());
        assert!(is_in_h(&c, &n, &sample_element(&n).unwrap()).unwrap());
        let s3 = n.group.generators()[1];
        assert!(!is_in_h(&c, &n, &AlgElt::term(s3, FieldElt::alpha(2))).unwrap());
        let outside = AlgElt::term(Perm::parse("(1,2)", 8).unwrap(), FieldElt::one());
        assert!(matches!(
            is_in_h(&c, &n, &outside),
            Err(crate::Error::SupportOutside(_))
        ));
    }

    #[test]
    fn action_requires_fixed_input() {
        let c = ctx();
        let emb = GaloisEmbedding::from_context(&c).unwrap();
        let h = AlgElt::term(Perm::identity(8), FieldElt::one());
        assert_eq!(
            hopf_action(&emb, &n1(), &h, &FieldElt::alpha(2)),
            Err(crate::Error::NotFixed)
        );
        let x = &FieldElt::alpha(1) + &sqrt_disc();
        assert_eq!(hopf_action(&emb, &n1(), &h, &x).unwrap(), x);
    }

    #[test]
    fn counit_cuts_out_fixed_field() {
        let c = ctx();
        let emb = GaloisEmbedding::from_context(&c).unwrap();
        let t = n1().group.generators()[2];
        let a0 = FieldElt::from_coef(CoefPoly::b(2));
        let a3 = FieldElt::alpha(1);
        let h = AlgElt::term(Perm::identity(8), a0.clone()).with_term(t, a3.clone());
        assert_eq!(counit(&h), &a0 + &a3);
        let x = FieldElt::alpha(1).pow(2);
        let lhs = hopf_action(&emb, &n1(), &h, &x).unwrap();
        assert_eq!(lhs, &counit(&h) * &x);
        // √δ is not in k(α), so t moves it.
        let d = sqrt_disc();
        let moved = hopf_action(&emb, &n1(), &h, &d).unwrap();
        assert_ne!(moved, &counit(&h) * &d);
    }

    #[test]
    fn alternate_representatives_rejected_outside_coset() {
        let c = ctx();
        let emb = GaloisEmbedding::from_context(&c).unwrap();
        let mut reps = emb.point_reps().to_vec();
        reps[0] = Perm::parse("(1,2)", 4).unwrap();
        assert_eq!(
            emb.with_representatives(reps),
            Err(crate::Error::CosetMismatch(1))
        );
    }
}
