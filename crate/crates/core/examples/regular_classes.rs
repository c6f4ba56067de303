//! Holomorph orders and regular-subgroup counts for the five groups of
//! order 8, with the orbit-stabilizer identity `|class| · |Hol(T)| = 8!`.

use hopf_galois::regenum::{enumerate_regular8, holomorph, CayleyTable};
use hopf_galois::IsoType8;

fn main() -> hopf_galois::Result<()> {
    println!("{:<10} {:>6} {:>6} {:>8}", "type", "|Hol|", "class", "product");
    for ty in IsoType8::ALL {
        let hol = holomorph(&CayleyTable::order8(ty))?;
        let class = enumerate_regular8(ty)?;
        let n = class.members.len();
        println!("{:<10} {:>6} {:>6} {:>8}", ty.name(), hol.order(), n, n * hol.order());
    }
    Ok(())
}
