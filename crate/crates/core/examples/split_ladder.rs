//! Webs with k rank-two complexes: k focal 3-spaces and a residual of degree 7 - k.

use plueckerlab::classify5::classify;
use plueckerlab::fixtures;

fn main() {
    for k in 1..=4 {
        let r = classify(&fixtures::split_web(k)).unwrap();
        let degs: Vec<String> = r.components.iter().map(|c| format!("{}:{}", c.name, c.degree)).collect();
        println!("k = {k}: {} [{}]", r.label, degs.join(", "));
        let residual = r.components.last().unwrap();
        println!("  residual P(t) = {}", residual.hilbert.as_unipoly());
    }
}
