//! Scratch benchmark for the exact Gram rank path.
use std::time::Instant;

fn main() {
    for n in [3usize, 4] {
        let t0 = Instant::now();
        let alg = diagramalg::smallram::SmallRamAlgebra::build(n).unwrap();
        let t1 = Instant::now();
        let g = alg.monoid().gram_int();
        let t2 = Instant::now();
        let rank = g.rank();
        let t3 = Instant::now();
        println!(
            "n={n} dim={} build={:?} gram={:?} bareiss_rank={rank} in {:?}",
            alg.dim(),
            t1 - t0,
            t2 - t1,
            t3 - t2
        );
    }
}
