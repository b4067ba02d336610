//! Hilbert function and polynomial from standard monomials, and the same
//! values from the Betti table.
//!
//! cargo run --example hilbert_function

use pgshell::catalog;
use pgshell::groebner::{dimension_degree, hilbert_function};
use pgshell::resolution::minimal_resolution;
use pgshell::{FieldDescriptor, Rational};

fn main() -> pgshell::Result<()> {
    let e = catalog::complete_intersection::<Rational>(FieldDescriptor::Rationals, 4, &[2, 3], 1)?;
    let h = hilbert_function(&e.ideal, 10)?;
    let betti = minimal_resolution(&e.ideal)?.betti()?;
    let n = e.ring().num_vars();
    println!(" m  HF(m)  from Betti");
    for (m, v) in h.values.iter().enumerate() {
        println!("{m:>2}  {v:>5}  {:>10}", betti.hilbert_value(n, m as i64));
    }
    let (dim, degree) = dimension_degree(&h)?;
    println!("projective dimension {dim}, degree {degree}");
    println!("Hilbert polynomial coefficients: {:?}", h.hilbert_polynomial);
    Ok(())
}
