//! Discovery for any `(G, G')` given by generators.
//!
//!     cargo run --example discover -- "(1,2,3,4);(1,2)" "(1,2)(3,4);(1,3)(2,4);(1,2)"

use hopf_galois::report::cmd_discover;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let group = args.first().map_or("(1,2,3,4);(1,2)", String::as_str);
    let subgroup = args.get(1).map_or("(1,2,3)", String::as_str);
    match cmd_discover(group, subgroup) {
        Ok(report) => print!("{}", report.to_text()),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
}
