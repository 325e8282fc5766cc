//! Replays the shipped resolution of the Kummer variety step by step and
//! checks the invariants of every intermediate complex.
//!
//! ```text
//! cargo run --release --example replay_manifest [manifest]
//! ```

use std::path::PathBuf;

use k3blowup::blowup::{check_step, replay_manifest, Manifest, StepInvariants};
use k3blowup::fixtures::{fixture_dir, load};
use k3blowup::flip::AnnealSchedule;

fn main() {
    let path = std::env::args().nth(1).map_or_else(|| fixture_dir().join("resolution/manifest.txt"), PathBuf::from);
    let m = Manifest::load(&path).expect("readable manifest");
    let k = load("k4_16").expect("Kummer fixture");
    let sched = AnnealSchedule::for_dim(4);
    let mut prev = m.initial.clone();
    let fin = replay_manifest(&k, &m, &mut |step, c| {
        let inv = StepInvariants::of(c, &sched).expect("invariants");
        check_step(&prev, &inv, step).expect("step invariants");
        println!("step {step:2}: f = {} chi = {} b2 = {} (F2: {}) signature = {}", c.f_vector(), inv.euler, inv.b2, inv.b2_mod2, inv.signature);
        prev = inv;
    })
    .expect("manifest replays");
    println!("final hash {}", fin.hash());
}
