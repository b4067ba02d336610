//! Is the surface W a PG-shell of the twisted cubic V?
//!
//! cargo run --example pg_shell

use pgshell::catalog;
use pgshell::shell::{pgshell_check, Method};
use pgshell::{FieldDescriptor, Ideal, Polynomial, Rational};

fn main() -> pgshell::Result<()> {
    let v = catalog::rational_normal_curve::<Rational>(FieldDescriptor::Rationals, 3)?.ideal;
    let r = v.ring().clone();
    let quadric = v.generators()[0].clone();

    let w = Ideal::new(&r, vec![quadric.clone()])?;
    let rep = pgshell_check(&v, &w, Method::Both)?;
    println!("W = ({quadric}): {}", rep.verdict);
    for e in &rep.table {
        println!("  mu_{} in degree {}: {} -> {}, rank {}", e.q, e.m, e.source_dim, e.target_dim, e.rank);
    }

    // a cubic multiple of a minimal generator is not a minimal generator
    let cubic = quadric.mul(&Polynomial::variable(&r, 3))?;
    let w = Ideal::new(&r, vec![cubic.clone()])?;
    let rep = pgshell_check(&v, &w, Method::ChainMap)?;
    println!("W = ({cubic}): {}", rep.verdict);
    if let Some(wit) = rep.witness {
        println!("  kernel of mu_{} in degree {}: {}", wit.q, wit.m, wit.cycle);
    }
    Ok(())
}
