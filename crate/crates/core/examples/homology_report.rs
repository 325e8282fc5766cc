//! Integral and mod-p homology of the shipped complexes.
//!
//! ```text
//! cargo run --release --example homology_report [fixture-or-path ...]
//! ```

use k3blowup::algebra::{betti_numbers, homology};
use k3blowup::fixtures::{load, FIXTURES};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<String> = if args.is_empty() { FIXTURES.iter().map(|(n, _)| n.to_string()).collect() } else { args };
    for name in names {
        let c = match load(&name) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("{e}");
                continue;
            }
        };
        println!("{name}: f = {}", c.f_vector());
        println!("  H_*(Z)  = {}", homology(&c));
        for p in [2, 3] {
            println!("  b_*(F_{p}) = {:?}", betti_numbers(&c, p).expect("prime"));
        }
    }
}
