//! The four Hopf-Galois structures on a degree-8 extension with Galois
//! group `S₄`, where `K` is the fixed field of a 3-cycle, and their stable
//! subgroups.

use hopf_galois::gpstruct::{build_lambda, find_structures, stable_subgroups};
use hopf_galois::{Perm, PermGroup};

fn main() -> hopf_galois::Result<()> {
    let g = PermGroup::parse("(1,2,3,4); (1,2)", 4)?;
    let g_prime = PermGroup::parse("(2,3,4)", 4)?;
    let target = [
        Perm::parse("(1,2,3,4)(5,6,7,8)", 8)?,
        Perm::parse("(1,2)(3,5)(4,6)(7,8)", 8)?,
    ];
    let (pi, ctx) = build_lambda(&g, &g_prime)?.canonical_relabel(&target)?;
    println!("relabeling {pi}");
    for (g, lg) in ctx.generators().iter().zip(ctx.lambda()) {
        println!("λ{g} = {lg}");
    }

    for s in find_structures(&ctx)? {
        let gens: Vec<String> = s.group.generators().iter().map(|p| p.to_string()).collect();
        println!("\n{} ({}) = ⟨{}⟩", s.label, s.type_name, gens.join(", "));
        for st in stable_subgroups(&ctx, &s)?.iter().filter(|st| st.proper) {
            let sub: Vec<String> = st.subgroup.minimal_generators().iter().map(|p| p.to_string()).collect();
            println!("  stable ⟨{}⟩  ->  {} (degree {})", sub.join(", "), st.field_label, st.degree_over_k);
        }
    }
    Ok(())
}
