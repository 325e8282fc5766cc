//! Bistellar reduction: a barycentric subdivision of the 4-simplex boundary
//! goes back to six vertices, and the flip log replays exactly.
//!
//! ```text
//! cargo run --release --example reduce_sphere [seed]
//! ```

use k3blowup::complex::{barycentric_subdivision, simplex_boundary};
use k3blowup::flip::{is_standard_sphere, reduce, AnnealSchedule};

fn main() {
    let seed = std::env::args().nth(1).map_or(1, |s| s.parse().expect("numeric seed"));
    let sd = barycentric_subdivision(&simplex_boundary(5));
    println!("start f = {}", sd.f_vector());
    let sched = AnnealSchedule::for_dim(3).with_seed(seed);
    let r = reduce(&sd, &sched);
    println!("reduced f = {} after {} flips (exhausted={})", r.complex.f_vector(), r.log.moves.len(), r.exhausted);
    let replayed = r.log.replay(&sd).expect("log replays");
    assert_eq!(replayed.hash(), r.complex.hash());
    println!("replay ok, hash {}", &replayed.hash()[..12]);
    let link = sd.vertex_link(1).expect("vertex 1");
    println!("link of vertex 1: {:?}", is_standard_sphere(&link, &sched));
}
