//! The four webs whose Pfaffian cubic splits as a plane and a quadric.

use plueckerlab::classify5::classify;
use plueckerlab::fixtures;

fn main() {
    for case in 1..=4 {
        let r = classify(&fixtures::reducible_case(case)).unwrap();
        println!("case {case}: {}", r.label);
        for c in &r.components {
            let parasitic = if c.parasitic == Some(true) { ", parasitic" } else { "" };
            println!("  {}: degree {}, P(t) = {}{parasitic}", c.name, c.degree, c.hilbert.as_unipoly());
        }
    }
}
