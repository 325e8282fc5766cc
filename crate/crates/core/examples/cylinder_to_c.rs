//! The Hopf map S^3 -> S^2 on the grid sphere, its mapping cylinder over
//! RP^3, and the bounded flip reduction to the 11-vertex piece C.
//!
//! ```text
//! cargo run --release --example cylinder_to_c [seed]
//! ```

use k3blowup::algebra::homology;
use k3blowup::construction::{hopf_cylinder, reference_c};
use k3blowup::flip::{reduce_bounded, AnnealSchedule};

fn main() {
    let seed = std::env::args().nth(1).map_or(1, |s| s.parse().expect("numeric seed"));
    let cyl = hopf_cylinder();
    let bd = cyl.boundary().expect("cylinder has a boundary");
    println!("cylinder f = {} chi = {}", cyl.f_vector(), cyl.euler_characteristic());
    println!("boundary f = {} H_* = {}", bd.f_vector(), homology(&bd));
    let c = reference_c().expect("stored C");
    let sched = AnnealSchedule::for_dim(4).with_seed(seed);
    let r = reduce_bounded(&cyl, Some(&c), &sched).expect("pseudomanifold with boundary");
    println!("reduced f = {} after {} flips", r.complex.f_vector(), r.log.moves.len());
    match r.iso {
        Some(_) => println!("isomorphic to C"),
        None => println!("budget exhausted before reaching C; try another seed"),
    }
}
