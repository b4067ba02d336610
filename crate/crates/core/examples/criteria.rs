//! The criteria suite on a complete intersection of type (2,3), the
//! canonical model of a genus-4 curve, and its quadric hull.
//!
//! cargo run --example criteria

use pgshell::catalog;
use pgshell::shell::criteria_suite;
use pgshell::{FieldDescriptor, Ideal, Rational};

fn main() -> pgshell::Result<()> {
    let c = catalog::complete_intersection::<Rational>(FieldDescriptor::Rationals, 4, &[2, 3], 1)?;
    let hull = Ideal::new(c.ring(), vec![c.ideal.generators()[0].clone()])?;
    let rep = criteria_suite(&c.ideal, &hull)?;
    println!("direct verdict: {}", rep.verdict);
    for k in &rep.criteria {
        match (k.applicable, k.consistent) {
            (true, Some(ok)) => println!(
                "{:<22} predicted {:<22} observed {:<10} {}",
                k.name,
                k.predicted.as_deref().unwrap_or(""),
                k.observed.as_deref().unwrap_or(""),
                if ok { "ok" } else { "INCONSISTENT" }
            ),
            _ => println!("{:<22} skipped: {}", k.name, k.reason.as_deref().unwrap_or("")),
        }
    }
    println!("Δ-genus of V: {}", rep.invariants_v.delta_genus);
    Ok(())
}
