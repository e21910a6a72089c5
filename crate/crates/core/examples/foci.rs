//! The congruence line through a point and the foci on it.

use plueckerlab::arith::parse_point;
use plueckerlab::congruence::{build_congruence, foci_on_line, line_through_point};
use plueckerlab::fixtures;

fn main() {
    for (name, point) in [("wave", "(1:3:5:2)"), ("generic-p4", "(1:2:0:-1:3)"), ("palatini-generic", "(1:0:2:-1:1:3)")] {
        let c = build_congruence(&fixtures::by_name(name).unwrap().web).unwrap();
        let p = parse_point(point).unwrap();
        let l = line_through_point(&c, &p).unwrap();
        let fs = foci_on_line(&c, &l).unwrap();
        println!("{name}: line through {point} is {l}");
        println!("  focus form {} with {} real foci", fs.form, fs.real_roots.len());
        for r in &fs.real_roots {
            println!("  focus at lambda/mu in {r}");
        }
    }
}
