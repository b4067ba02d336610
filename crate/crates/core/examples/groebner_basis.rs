//! Reduced Gröbner basis, normal forms and ideal membership.
//!
//! cargo run --example groebner_basis

use pgshell::format;
use pgshell::Rational;

fn main() -> pgshell::Result<()> {
    let src = "ring S = QQ[z0,z1,z2,z3];
               ideal I = z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2;
               ideal F = z0^3 + z1^2*z3;";
    let parsed = format::parse::<Rational>(src, true)?;
    let ideal = parsed.ideal("I")?;
    let ring = ideal.ring();

    let gb = ideal.groebner();
    println!("reduced Gröbner basis (degrevlex):");
    for g in gb.elements() {
        println!("  {g}");
    }

    let f = &parsed.ideal("F")?.generators()[0];
    println!("NF({f}) = {}", gb.normal_form(f)?);

    let cubic = ideal.generators()[0].mul(&pgshell::Polynomial::variable(ring, 3))?;
    println!("{cubic} in I: {}", ideal.contains(&cubic)?);
    Ok(())
}
