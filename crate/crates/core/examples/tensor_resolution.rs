//! Resolving an intersection of two ACM schemes meeting properly as the
//! tensor product of their resolutions.
//!
//! cargo run --example tensor_resolution

use pgshell::catalog;
use pgshell::shell::tensor_resolution;
use pgshell::{FieldDescriptor, Ideal, Polynomial, Rational};

fn main() -> pgshell::Result<()> {
    let y = catalog::twisted_cubic_cone::<Rational>(FieldDescriptor::Rationals)?.ideal;
    let r = y.ring().clone();
    let z = Ideal::new(&r, vec![Polynomial::variable(&r, 4), Polynomial::variable(&r, 5)])?;
    let (res, rep) = tensor_resolution(&y, &z)?;
    println!("codim {} + {} = {}", rep.codim_y, rep.codim_z, rep.codim_sum);
    println!("length {}", res.length());
    print!("{}", rep.betti.render());
    println!("complex certified: {}", rep.complex.passed());
    println!("equals convolution: {}, equals direct resolution: {}", rep.matches_convolution, rep.matches_direct);
    println!("Y and Z are PG-shells of Y ∩ Z: {} / {}", rep.y_over_sum, rep.z_over_sum);
    Ok(())
}
