//! Which of the degree-8 structures have isomorphic Hopf algebras, and a
//! permutation of the eight points that realizes the isomorphism.

use hopf_galois::gpstruct::{build_lambda, conjugation_implementer, g_isomorphisms, HGStructure};
use hopf_galois::report::reference;
use hopf_galois::PermGroup;

fn main() -> hopf_galois::Result<()> {
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

    for (i, a) in structures.iter().enumerate() {
        for b in &structures[i + 1..] {
            let isos = g_isomorphisms(&ctx, a, b)?;
            println!("{} ~ {}: {} G-isomorphism(s)", a.label, b.label, isos.len());
            for iso in &isos {
                for (x, y) in iso.generator_images(a) {
                    println!("  {x} -> {y}");
                }
                let imp = conjugation_implementer(&ctx, a, iso)?;
                if let Some(s) = imp.preferred {
                    println!("  conjugation by {s} ({} candidates)", imp.candidates.len());
                }
            }
        }
    }
    Ok(())
}
