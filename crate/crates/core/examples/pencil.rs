//! Points on a focal 3-space: the plane of congruence lines through them and the residual curve.

use plueckerlab::arith::parse_point;
use plueckerlab::congruence::{build_congruence, pencil_plane, residual_plane_curve_degree};
use plueckerlab::fixtures;

fn main() {
    for (name, point) in [("af-k1", "(0:0:1:2:3:4)"), ("af-k3", "(0:0:2:-1:5:1)"), ("focal-plane-p4", "(0:0:1:1:-2)")] {
        let c = build_congruence(&fixtures::by_name(name).unwrap().web).unwrap();
        let p = parse_point(point).unwrap();
        let plane = pencil_plane(&c, &p).unwrap();
        let d = residual_plane_curve_degree(&c, &p).unwrap();
        println!("{name} at {point}: pencil plane {plane}, residual curve of degree {d}");
    }
}
