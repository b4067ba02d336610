//! Invariant records for the catalog, and the degree sequence of a
//! complete intersection.
//!
//! cargo run --example invariants

use pgshell::catalog;
use pgshell::shell::{ci_chain_report, invariants};
use pgshell::{FieldDescriptor, Rational};

const Q: FieldDescriptor = FieldDescriptor::Rationals;

fn main() -> pgshell::Result<()> {
    let entries = vec![
        catalog::rational_normal_curve::<Rational>(Q, 3)?,
        catalog::veronese_surface(Q)?,
        catalog::scroll_1_2(Q)?,
        catalog::points_on_twisted_cubic(Q)?,
        catalog::complete_intersection(Q, 4, &[2, 3], 1)?,
    ];
    println!("{:<10} dim deg depth reg_R  Δ  CI    2-lin  ACM", "name");
    for e in &entries {
        let r = invariants(&e.ideal)?;
        println!(
            "{:<10} {:>3} {:>3} {:>5} {:>5} {:>2}  {:<5} {:<6} {}",
            e.name, r.dim, r.degree, r.depth, r.reg_r, r.delta_genus, r.is_complete_intersection, r.is_2linear, r.is_acm
        );
        if r.is_complete_intersection {
            println!("  regular sequence degrees: {:?}", ci_chain_report(&e.ideal)?.degrees);
        }
    }
    Ok(())
}
