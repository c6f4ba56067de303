//! `λ(Q₈)` and `ρ(Q₈)`: isomorphic as groups, with the same Galois
//! correspondence image, yet no `G`-isomorphism between them.

use hopf_galois::gpstruct::lambda_rho_compare;
use hopf_galois::regenum::CayleyTable;
use hopf_galois::IsoType8;

fn main() -> hopf_galois::Result<()> {
    for ty in [IsoType8::Q8, IsoType8::D8, IsoType8::C2xC4] {
        let r = lambda_rho_compare(&CayleyTable::order8(ty))?;
        println!(
            "{:<8} equal {:<5} isomorphic {:<5} G-isomorphisms {:<2} stable {}/{} same image {}",
            ty.name(),
            r.degenerate,
            r.isomorphic,
            r.g_isomorphisms.len(),
            r.lambda_stable.len(),
            r.rho_stable.len(),
            r.same_correspondence_image
        );
    }
    Ok(())
}
