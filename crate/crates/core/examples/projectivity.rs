//! The classification does not depend on the choice of coordinates.

use plueckerlab::arith::{matrix, rat, Rational};
use plueckerlab::classify5::classify;
use plueckerlab::congruence::build_congruence;
use plueckerlab::fixtures;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = fixtures::by_name("af-k2").unwrap();
    let c = build_congruence(&f.web).unwrap();
    println!("original: {} {:?}", classify(&f.web).unwrap().label, classify(&f.web).unwrap().component_degrees());
    for _ in 0..3 {
        let g: Vec<Vec<Rational>> = loop {
            let g: Vec<Vec<Rational>> = (0..6).map(|_| (0..6).map(|_| rat(rng.gen_range(-2..=2))).collect()).collect();
            if matrix::rank(&g) == 6 {
                break g;
            }
        };
        let t = c.apply_projectivity(&matrix::inverse(&g).unwrap()).unwrap();
        let r = classify(t.web()).unwrap();
        println!("transformed: {} {:?}", r.label, r.component_degrees());
    }
}
