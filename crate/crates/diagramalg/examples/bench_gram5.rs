//! Scratch benchmark for the n=5 modular Gram path.
use std::time::Instant;

use diagramalg::exactlin::{primes_from_seed, rank_mod_p};

fn main() {
    let t0 = Instant::now();
    let alg = diagramalg::smallram::SmallRamAlgebra::build(5).unwrap();
    let t1 = Instant::now();
    println!("build n=5 dim={} in {:?}", alg.dim(), t1 - t0);
    let g = alg.monoid().gram_u64();
    let t2 = Instant::now();
    println!("gram in {:?}", t2 - t1);
    let p = primes_from_seed(0xD1A6, 1)[0];
    let mut rows: Vec<Vec<u64>> = g.iter().map(|r| r.iter().map(|&v| v % p).collect()).collect();
    let rank = rank_mod_p(&mut rows, p);
    let t3 = Instant::now();
    println!("rank mod {p} = {rank} in {:?}", t3 - t2);
}
