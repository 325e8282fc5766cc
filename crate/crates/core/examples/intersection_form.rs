//! Intersection forms from cup products, and the form invariants of E8 and
//! the hyperbolic plane for comparison.
//!
//! ```text
//! cargo run --release --example intersection_form [fixture-or-path]
//! ```

use k3blowup::algebra::{e8, form_invariants, hyperbolic};
use k3blowup::fixtures::load;
use k3blowup::intersection::{form_summary, intersection_form, orient};

fn main() {
    for (name, m) in [("E8", e8()), ("H", hyperbolic())] {
        let q = form_invariants(&m).expect("symmetric");
        println!("{name}: rank {} signature {} {:?}", q.rank, q.signature, q.parity);
    }
    let name = std::env::args().nth(1).unwrap_or_else(|| "k4_16".into());
    let c = load(&name).expect("fixture or complex file");
    let o = orient(&c).expect("orientable");
    let q = intersection_form(&c, &o).expect("closed orientable 4-pseudomanifold");
    println!("{name}: {}", form_summary(&q));
}
