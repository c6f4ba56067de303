mod common;

use common::*;
use hopf_galois::gpstruct::{find_structures, g_isomorphisms};
use hopf_galois::permcore::{are_isomorphic, isomorphisms};
use hopf_galois::quartic::{
    counit, hopf_action, is_in_h, sample_element, AlgElt, CoefPoly, FieldElt, GaloisEmbedding,
};
use hopf_galois::regenum::CayleyTable;
use hopf_galois::{IsoType8, Perm, PermGroup};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn random_subgroup(rng: &mut StdRng, degree: usize) -> PermGroup {
    let k = rng.gen_range(1..=2);
    PermGroup::new(degree, (0..k).map(|_| random_perm(rng, degree)).collect()).unwrap()
}

/// `Σ c_k α₁^k` with small integer or `b_j` coefficients, an element of `K`.
fn random_in_k(rng: &mut StdRng) -> FieldElt {
    let mut x = FieldElt::zero();
    for k in 0..rng.gen_range(1..=3) {
        let c = CoefPoly::from_integer(rng.gen_range(-3..=3));
        let c = if rng.gen_bool(0.3) { &c * &CoefPoly::b(rng.gen_range(1..=4)) } else { c };
        x = &x + &FieldElt::alpha(1).pow(k).scale(&c);
    }
    x
}

fn random_base(rng: &mut StdRng) -> FieldElt {
    let c = CoefPoly::from_integer(rng.gen_range(-3..=3));
    FieldElt::from_coef(&c + &CoefPoly::b(rng.gen_range(1..=4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn normalized_by_agrees_with_holomorph(seed in any::<u64>()) {
        let (n, l) = random_pair(&mut rng(seed));
        prop_assert!(check_holomorph_equivalence(&n, &l).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normal_form_is_an_idempotent_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (p, q) = (random_root_poly(&mut r), random_root_poly(&mut r));
        prop_assert_eq!(check_normal_form(&p, &q), Ok(()));
    }

    #[test]
    fn galois_action_is_a_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (g, h) = (random_perm(&mut r, 4), random_perm(&mut r, 4));
        let (x, y) = (random_field_elt(&mut r), random_field_elt(&mut r));
        prop_assert_eq!(check_galois_hom(&g, &h, &x, &y), Ok(()));
    }

    #[test]
    fn composition_is_associative_with_inverses(seed in any::<u64>(), degree in 1usize..=12) {
        let mut r = rng(seed);
        let [a, b, c] = [0; 3].map(|_| random_perm(&mut r, degree));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert!((a * a.inverse()).is_identity());
        prop_assert_eq!((a * b).inverse(), b.inverse() * a.inverse());
        for i in 1..=degree {
            prop_assert_eq!((a * b).apply(i), a.apply(b.apply(i)));
        }
    }

    #[test]
    fn intersections_are_subgroups(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (random_subgroup(&mut r, 5), random_subgroup(&mut r, 5));
        let i = a.intersection(&b);
        prop_assert!(i.is_subgroup_of(&a) && i.is_subgroup_of(&b));
        for x in i.elements() {
            prop_assert!(i.contains(&x.inverse()));
            for y in i.elements() {
                prop_assert!(i.contains(&(*x * *y)));
            }
        }
        let brute = a.elements().iter().filter(|x| b.contains(x)).count();
        prop_assert_eq!(i.order(), brute);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn normalizer_contains_centralizer_contains_center(seed in any::<u64>()) {
        let h = random_subgroup(&mut rng(seed), 6);
        let norm = h.normalizer_in_sym().unwrap();
        let cent = h.centralizer_in_sym().unwrap();
        let z = h.center();
        prop_assert!(cent.is_subgroup_of(&norm));
        prop_assert!(z.is_subgroup_of(&cent));
        prop_assert!(z.is_subgroup_of(&h));
        prop_assert!(h.is_subgroup_of(&norm));
    }

    #[test]
    fn isomorphism_is_symmetric(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b] = [0; 2].map(|_| {
            let ty = *IsoType8::ALL.choose(&mut r).unwrap();
            CayleyTable::order8(ty).right_regular().unwrap().conjugate_by(&random_perm(&mut r, 8))
        });
        prop_assert_eq!(are_isomorphic(&a, &b).unwrap(), are_isomorphic(&b, &a).unwrap());
        prop_assert_eq!(isomorphisms(&a, &b).unwrap().len(), isomorphisms(&b, &a).unwrap().len());
    }

    #[test]
    fn hopf_action_ignores_coset_representatives(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = context();
        let emb = GaloisEmbedding::from_context(&ctx).unwrap();
        let sub = emb.subgroup().elements().to_vec();
        let reps: Vec<Perm> = emb.point_reps().iter().map(|g| *g * *sub.choose(&mut r).unwrap()).collect();
        let alt = emb.with_representatives(reps).unwrap();
        let structures = golden_structures();
        let (label, gens) = structures.choose(&mut r).unwrap();
        let s = structure(label, gens);
        let h = sample_element(&s).unwrap();
        let x = random_in_k(&mut r);
        prop_assert_eq!(hopf_action(&emb, &s, &h, &x).unwrap(), hopf_action(&alt, &s, &h, &x).unwrap());
    }

    #[test]
    fn hopf_action_respects_the_fixed_fields(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = context();
        let emb = GaloisEmbedding::from_context(&ctx).unwrap();
        // the sample element lies in H for N_3 and, through Φ, for N_4
        let structures = golden_structures();
        let (label, gens) = &structures[r.gen_range(2..4)];
        let s = structure(label, gens);
        let id = Perm::identity(8);
        let h = sample_element(&s).unwrap().add(&AlgElt::term(id, random_base(&mut r)));
        prop_assert!(is_in_h(&ctx, &s, &h).unwrap());
        let x = random_in_k(&mut r);
        prop_assert!(emb.is_fixed(&hopf_action(&emb, &s, &h, &x).unwrap()));
        let c = random_base(&mut r);
        prop_assert_eq!(hopf_action(&emb, &s, &h, &c).unwrap(), &counit(&h) * &c);
    }

    #[test]
    fn hopf_action_is_bilinear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ctx = context();
        let emb = GaloisEmbedding::from_context(&ctx).unwrap();
        let structures = golden_structures();
        let (label, gens) = structures.choose(&mut r).unwrap();
        let s = structure(label, gens);
        let h1 = sample_element(&s).unwrap();
        let n = *s.group.elements().choose(&mut r).unwrap();
        let h2 = AlgElt::term(n, random_field_elt(&mut r));
        let (x, y) = (random_in_k(&mut r), random_in_k(&mut r));
        let c = random_base(&mut r);
        let act = |h: &AlgElt, x: &FieldElt| hopf_action(&emb, &s, h, x).unwrap();
        prop_assert_eq!(act(&h1, &(&x + &y)), &act(&h1, &x) + &act(&h1, &y));
        prop_assert_eq!(act(&h1, &(&c * &x)), &c * &act(&h1, &x));
        prop_assert_eq!(act(&h1.add(&h2), &x), &act(&h1, &x) + &act(&h2, &x));
    }
}

#[test]
fn orbit_stabilizer_for_every_order_eight_type() {
    for ty in IsoType8::ALL {
        assert_eq!(check_orbit_stabilizer(ty), Ok(()));
    }
}

#[test]
fn elementary_symmetric_functions_reduce_to_coefficients() {
    assert_eq!(check_elementary_symmetric(), Ok(()));
}

#[test]
fn stable_lattices_reverse_inclusion() {
    let ctx = context();
    let mut total = 0;
    for s in find_structures(&ctx).unwrap() {
        total += check_stable_lattice(&ctx, &s).unwrap();
    }
    // trivial and whole N in each of the four, plus the five proper ones
    assert_eq!(total, 13);
}

/// A `G`-isomorphism is equivariant on every element, not just generators.
#[test]
fn g_isomorphisms_commute_with_the_action() {
    let ctx = context();
    let s = find_structures(&ctx).unwrap();
    for a in &s {
        for b in &s {
            for iso in g_isomorphisms(&ctx, a, b).unwrap() {
                for n in a.group.elements() {
                    for lg in ctx.lambda() {
                        let lhs = iso.map.apply(&n.conjugated_by(lg)).unwrap();
                        assert_eq!(lhs, iso.map.apply(n).unwrap().conjugated_by(lg));
                    }
                }
            }
        }
    }
}
