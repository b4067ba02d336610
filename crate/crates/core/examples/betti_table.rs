//! Minimal free resolution, Betti table and its independent certificate.
//!
//! cargo run --example betti_table [d]

use pgshell::catalog;
use pgshell::resolution::{minimal_resolution, verify_complex};
use pgshell::{FieldDescriptor, Rational};

fn main() -> pgshell::Result<()> {
    let d = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let entry = catalog::rational_normal_curve::<Rational>(FieldDescriptor::Rationals, d)?;
    println!("{}", entry.notes);

    let res = minimal_resolution(&entry.ideal)?;
    for q in 0..=res.length() {
        println!("F_{q} twists: {:?}", res.module(q).twists);
    }
    let betti = res.betti()?;
    print!("{}", betti.render());

    // d∘d = 0, minimality, and every Betti number against Koszul homology
    let report = verify_complex(&res);
    println!("certified: {} ({} degrees checked)", report.passed(), report.checked_degrees);
    Ok(())
}
