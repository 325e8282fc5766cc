//! Resolves all 16 singular vertices of the Kummer variety and writes a
//! replayable manifest.
//!
//! ```text
//! cargo run --release --example resolve_kummer -- [pattern] [seed] [out-dir]
//! ```

use std::path::{Path, PathBuf};
use std::time::Instant;

use k3blowup::blowup::{parse_pattern, resolve_with, Manifest, Resolution, ResolveOptions, Sign};
use k3blowup::complex::write_complex;
use k3blowup::construction::kummer_k4_16;
use k3blowup::flip::AnnealSchedule;

fn main() {
    let mut args = std::env::args().skip(1);
    let pattern = parse_pattern(&args.next().unwrap_or_else(|| "+".repeat(16))).expect("pattern of + and -");
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("numeric seed"));
    let out = PathBuf::from(args.next().unwrap_or_else(|| "target/resolution".into()));

    let k = kummer_k4_16();
    let opts = ResolveOptions::new(AnnealSchedule::for_dim(4).with_seed(seed));
    let start = Instant::now();
    let res = resolve_with(&k, &pattern, &opts, &mut |k, r| {
        let step = r.steps.last().expect("one step per report");
        let i = &step.invariants;
        println!(
            "step {k:2}: vertex {:2} seed {} sign {} gluing {:6} f={} chi={} singular={} b2={} rank={} sig={} even={} [{:.1?}]",
            step.vertex,
            step.seed,
            step.sign,
            step.gluing.to_string(),
            r.complex.f_vector(),
            i.euler,
            i.singular,
            i.b2,
            i.rank,
            i.signature,
            i.even,
            start.elapsed()
        );
        write_all(r, &pattern, opts.ceiling, &out);
    });
    match res {
        Ok(r) => println!("final f-vector {} hash {}", r.complex.f_vector(), r.complex.hash()),
        Err((partial, e)) => {
            eprintln!("failed after {} steps: {e}", partial.steps.len());
            std::process::exit(1);
        }
    }
}

/// Rewrites the manifest after every step, so an interrupted run keeps its
/// finished steps.
fn write_all(r: &Resolution, pattern: &[Sign], ceiling: usize, out: &Path) {
    let path = Manifest::from_resolution(r, pattern, ceiling).write(out, "manifest.txt").expect("write manifest");
    std::fs::write(out.join("final.complex"), write_complex(&r.complex)).expect("write complex");
    if r.steps.len() == pattern.len() {
        println!("manifest written to {}", path.display());
    }
}
