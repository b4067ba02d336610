//! Exporting catalog ideals in the input format and reading them back.
//!
//! cargo run --example catalog_export

use pgshell::catalog;
use pgshell::cli::catalog_ideal_name;
use pgshell::format;
use pgshell::{FieldDescriptor, Rational};

fn main() -> pgshell::Result<()> {
    for name in catalog::NAMES {
        let params: &[i64] = match *name {
            "ci" => &[4, 2, 3],
            _ => &[],
        };
        let e = catalog::by_name::<Rational>(FieldDescriptor::Rationals, name, params, 1)?;
        let ident = catalog_ideal_name(&e.name);
        let text = format::print_source("S", e.ring(), &[(ident.as_str(), &e.ideal)]);
        let back = format::parse::<Rational>(&text, true)?;
        let same = back.ideal(&ident)?.generators() == e.ideal.generators();
        println!("// {} ({}), round trip {}", e.name, e.notes, if same { "ok" } else { "FAILED" });
        print!("{text}");
    }
    Ok(())
}
