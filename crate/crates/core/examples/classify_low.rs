//! Congruences in P^3 and P^4.

use plueckerlab::classify5::classify_any;
use plueckerlab::fixtures;

fn main() {
    for name in ["wave", "tangent-p3", "generic-p4", "focal-plane-p4"] {
        let r = classify_any(&fixtures::by_name(name).unwrap().web).unwrap();
        println!("{name} (P^{}): {}, focal degree {}", r.n, r.label, r.focal.degree);
        for c in &r.components {
            println!("  {}: degree {}, dim {}", c.name, c.degree, c.dimension);
        }
    }
}
