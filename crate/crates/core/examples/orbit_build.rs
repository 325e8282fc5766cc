//! Builds the 16-vertex Kummer variety and K3 surface from their symmetry
//! groups and orbit representatives.
//!
//! ```text
//! cargo run --release --example orbit_build
//! ```

use k3blowup::complex::{heawood_check, simplex};
use k3blowup::construction::{orbit_complex, PermutationGroup, K3_GENERATORS, K3_ORBITS, KUMMER_GENERATORS, KUMMER_ORBITS};

fn main() {
    let presets: [(&str, &[&str], &[[u32; 5]]); 2] = [
        ("Kummer variety", &KUMMER_GENERATORS, &KUMMER_ORBITS),
        ("K3 surface", &K3_GENERATORS, &K3_ORBITS),
    ];
    for (name, gens, orbits) in presets {
        let g = PermutationGroup::from_cycles(16, gens).expect("valid generators");
        let reps: Vec<_> = orbits.iter().map(|r| simplex(r)).collect();
        let c = orbit_complex(&g, &reps).expect("orbits of equal dimension");
        let chi = c.euler_characteristic();
        let h = heawood_check(c.num_vertices() as u64, chi);
        println!("{name}: group order {} orbits {}", g.order(), reps.len());
        println!("  f = {}  chi = {chi}  {}-neighborly  hash {}", c.f_vector(), c.neighborliness(), &c.hash()[..12]);
        println!("  Heawood: C(n-4,3) = {} >= 10(chi-2) = {} holds={} equality={}", h.lhs, h.rhs, h.holds, h.equality);
    }
}
