//! Level sets of rsl-functions on the K3 surface, with their homology and a
//! best-effort identification.
//!
//! ```text
//! cargo run --release --example slicings [fixture]
//! ```

use k3blowup::fixtures::load;
use k3blowup::flip::AnnealSchedule;
use k3blowup::morse::{identify_slicing, parse_order, slicing_below};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "k3_16".into());
    let c = load(&name).expect("fixture or complex file");
    let sched = AnnealSchedule::for_dim(3).with_seed(3);
    for below in ["1..2", "1..4", "1..5", "1,2,3,5,6", "2..7", "1..7"] {
        let s = slicing_below(&c, parse_order(below).expect("vertex set")).expect("closed slicing");
        let (h, v) = identify_slicing(&s, &sched);
        println!("below {{{below}}}: f = {} H_* = {h} -> {v}", s.complex.f_vector());
    }
}
