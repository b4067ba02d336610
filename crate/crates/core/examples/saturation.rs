//! Saturating with respect to the irrelevant ideal removes components
//! supported at the origin.
//!
//! cargo run --example saturation

use pgshell::format;
use pgshell::groebner::saturate_irrelevant;
use pgshell::shell::is_saturated;
use pgshell::Rational;

fn main() -> pgshell::Result<()> {
    let src = "ring S = QQ[x,y,z];
               // a double line with an embedded point at the origin
               ideal I = x^2, x*y, x*z^2, y^2*z, y^3;";
    let p = format::parse::<Rational>(src, true)?;
    let i = p.ideal("I")?;
    println!("saturated: {}", is_saturated(i));
    let (sat, changed) = saturate_irrelevant(i)?;
    println!("changed: {changed}");
    print!("{}", format::print_ideal("Isat", &sat));
    Ok(())
}
