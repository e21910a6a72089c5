//! Pfaffians of numeric and symbolic skew matrices, and the Pfaffian cubic of a web in P^5.

use plueckerlab::arith::{MultiPoly, Vars};
use plueckerlab::classify5::{pfaffian_cubic, split_cubic};
use plueckerlab::fixtures;
use plueckerlab::grassmann::{QSkew, SkewMatrix};

fn main() {
    let a = QSkew::from_integer_rows(&[
        vec![0, 1, 2, 3],
        vec![-1, 0, 4, 5],
        vec![-2, -4, 0, 6],
        vec![-3, -5, -6, 0],
    ])
    .unwrap();
    let pf = a.pfaffian().unwrap();
    println!("Pf = {pf}, det = {}", a.determinant());

    // generic 4x4: Pf = a01 a23 - a02 a13 + a03 a12
    let vars = Vars::new(["a01", "a02", "a03", "a12", "a13", "a23"]);
    let upper: Vec<MultiPoly> = (0..6).map(|i| MultiPoly::var(&vars, i)).collect();
    let g = SkewMatrix::from_upper(4, &upper, &MultiPoly::zero(&vars)).unwrap();
    println!("generic Pf = {}", g.pfaffian().unwrap());

    for name in ["palatini-generic", "af-case1"] {
        let f = fixtures::by_name(name).unwrap();
        let s = pfaffian_cubic(&f.web).unwrap();
        println!("{name}: Pf(aA + bB + cC + dD) = {}", s.poly);
        if let Some(sp) = split_cubic(&s).unwrap() {
            println!("  = ({}) * ({}), quadric of rank {}", sp.linear, sp.quadric, sp.quadric_rank);
        }
    }
}
