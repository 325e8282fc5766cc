//! Critical point multiplicities of rsl-functions on the K3 surface and the
//! Kummer variety.
//!
//! ```text
//! cargo run --release --example morse_table [fixture] [order] [prime]
//! ```

use k3blowup::fixtures::load;
use k3blowup::morse::{critical_point_counts, parse_order, RslFunction};

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "k3_16".into());
    let c = load(&name).expect("fixture or complex file");
    let f = match args.next() {
        Some(o) => RslFunction::new(&c, parse_order(&o).expect("order")).expect("permutation of the vertices"),
        None => RslFunction::ascending(&c),
    };
    let p = args.next().map_or(2, |s| s.parse().expect("prime"));
    let prof = critical_point_counts(&c, &f, p).expect("valid function");
    print!("{}", prof.table());
    println!("alternating sum {} chi {}", prof.alternating_sum(), c.euler_characteristic());
}
