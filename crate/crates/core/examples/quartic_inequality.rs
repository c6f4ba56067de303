//! Exact computation in the splitting field of the generic quartic: the two
//! cyclic sums in the roots, and the actions of a Hopf algebra element and
//! its image on `α₁`.

use hopf_galois::gpstruct::{build_lambda, g_isomorphisms, HGStructure};
use hopf_galois::quartic::{first_sum, inequality_check, normal_form, second_sum};
use hopf_galois::report::reference;
use hopf_galois::PermGroup;

fn main() -> hopf_galois::Result<()> {
    println!("a2^2*a3 + a3^2*a4 + a4^2*a2 = {}", normal_form(&first_sum()));
    println!("a2^2*a4 + a3^2*a2 + a4^2*a3 = {}", normal_form(&second_sum()));

    let ctx = build_lambda(&reference::group()?, &reference::subgroup()?)?
        .canonical_relabel(&reference::lambda_target()?)?
        .1;
    // the reference generators r_i, s_i, t_i rather than discovery's
    let structures: Vec<HGStructure> = reference::structures()?
        .into_iter()
        .map(|(label, gens)| -> hopf_galois::Result<HGStructure> {
            Ok(HGStructure {
                label,
                group: PermGroup::new(8, gens.into_iter().map(|(_, p)| p).collect())?,
                type_name: "C2xC2xC2".into(),
            })
        })
        .collect::<hopf_galois::Result<_>>()?;
    let (a, b) = (&structures[2], &structures[3]);
    let phi = g_isomorphisms(&ctx, a, b)?.remove(0);
    let r = inequality_check(&ctx, a, b, &phi)?;
    println!("\nh = {}", r.h);
    println!("h in H({}): {}", a.label, r.h_in_source);
    println!("μ({})(h)(a1) = {}", a.label, r.mu_source);
    println!("μ({})(Φ(h))(a1) = {}", b.label, r.mu_target);
    println!("different: {}", r.mu_values_differ);
    Ok(())
}
