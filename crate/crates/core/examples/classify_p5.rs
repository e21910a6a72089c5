//! Classification of webs in P^5 from the Pfaffian cubic and the focal decomposition.

use plueckerlab::classify5::classify;
use plueckerlab::fixtures;

fn main() {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() { vec!["palatini-generic".to_string(), "cone".to_string(), "af-k1".to_string()] } else { names };
    for name in names {
        let Some(f) = fixtures::by_name(&name) else {
            eprintln!("unknown fixture {name}");
            continue;
        };
        let r = classify(&f.web).unwrap();
        println!("{name}: {}", r.label);
        println!("  focal locus: degree {}, P(t) = {}", r.focal.degree, r.focal.hilbert.as_unipoly());
        for c in &r.components {
            println!("  {} ({}): degree {}, dim {}", c.name, c.description, c.degree, c.dimension);
        }
        for n in &r.notes {
            println!("  note: {n}");
        }
    }
}
