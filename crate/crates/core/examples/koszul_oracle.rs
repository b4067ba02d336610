//! Tor_q(S/I, k)_m computed from the Koszul complex, with no resolution.
//!
//! cargo run --example koszul_oracle

use pgshell::catalog;
use pgshell::resolution::koszul_tor;
use pgshell::shell::format_cycle;
use pgshell::{FieldDescriptor, Rational};

fn main() -> pgshell::Result<()> {
    let tc = catalog::rational_normal_curve::<Rational>(FieldDescriptor::Rationals, 3)?;
    for q in 0..=3 {
        for m in q as i64..=q as i64 + 2 {
            let t = koszul_tor(&tc.ideal, q, m);
            if t.dimension > 0 {
                println!("Tor_{q}(R, k)_{m} has dimension {}", t.dimension);
                for c in &t.cycles {
                    println!("  {}", format_cycle(tc.ring(), c));
                }
            }
        }
    }
    Ok(())
}
