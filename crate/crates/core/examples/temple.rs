//! Temple checks for flux systems, and the link between foci and characteristic speeds.

use plueckerlab::arith::rat;
use plueckerlab::congruence::{build_congruence, SkewWeb};
use plueckerlab::fixtures;
use plueckerlab::pde::{eigen_data, flux_from_congruence, focus_eigenvalue_check, is_temple, random_samples};

fn main() {
    for (name, _, sys) in fixtures::flux_corpus() {
        let samples = random_samples(&sys, 20, 1, 10);
        let report = is_temple(&sys, &samples).unwrap();
        println!("{name}: {} ({} samples, {} skipped)", serde_json::to_string(&report.verdict).unwrap(), report.samples, report.skipped);
    }

    let sys = fixtures::wave_flux();
    let u = vec![rat(2), rat(-1)];
    let e = eigen_data(&sys, &u).unwrap();
    let f = focus_eigenvalue_check(&sys, &u).unwrap();
    println!("wave at (2, -1): characteristic polynomial {}, focus form {}, agree = {}", e.characteristic_polynomial, f.focus_form, f.agree);

    // a congruence in P^4 read as a 3x3 system
    let c = build_congruence(&SkewWeb::random(4, 11, 4)).unwrap();
    let sys = flux_from_congruence(&c).unwrap();
    let fl: Vec<String> = sys.numerators().iter().map(|p| p.to_string()).collect();
    println!("random congruence in P^4, flux: ({}) / ({})", fl.join(", "), sys.denominator());
    let report = is_temple(&sys, &random_samples(&sys, 10, 11, 5)).unwrap();
    println!("  {} ({} of {} samples skipped)", serde_json::to_string(&report.verdict).unwrap(), report.skipped, report.samples);
}
