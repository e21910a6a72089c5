//! Gröbner bases and Hilbert polynomials of focal loci.

use plueckerlab::arith::parse_poly;
use plueckerlab::arith::Vars;
use plueckerlab::congruence::build_congruence;
use plueckerlab::fixtures;
use plueckerlab::groebner::{hilbert_function, hilbert_polynomial, Ideal, MonomialOrder};

fn main() {
    // twisted cubic
    let v = Vars::projective(3);
    let gens = ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"].iter().map(|s| parse_poly(s, &v).unwrap()).collect();
    let tc = Ideal::new(&v, gens).unwrap();
    let gb = tc.groebner(MonomialOrder::Grevlex).unwrap();
    println!("twisted cubic: {} basis elements, P(t) = {}", gb.len(), hilbert_polynomial(&tc).unwrap().as_unipoly());

    for name in ["palatini-generic", "generic-p4", "af-k2"] {
        let c = build_congruence(&fixtures::by_name(name).unwrap().web).unwrap();
        let focal = c.focal_ideal();
        let hp = hilbert_polynomial(&focal).unwrap();
        let hf = hilbert_function(&focal, 6).unwrap();
        let hf: Vec<String> = hf.iter().map(|x| x.to_string()).collect();
        println!(
            "{name}: dim {}, degree {}, P(t) = {}, H = {}",
            hp.dimension,
            hp.degree,
            hp.as_unipoly(),
            hf.join(" ")
        );
    }
}
