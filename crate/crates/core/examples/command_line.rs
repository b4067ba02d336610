//! Driving the command-line front end in-process.
//!
//! cargo run --example command_line

use std::io::Write;

fn main() -> std::io::Result<()> {
    let path = std::env::temp_dir().join("pgshell-example.ideal");
    let mut f = std::fs::File::create(&path)?;
    writeln!(f, "ring S = QQ[z0,z1,z2,z3];")?;
    writeln!(f, "ideal V = z0*z2 - z1^2, z1*z3 - z2^2, z0*z3 - z1*z2;")?;
    writeln!(f, "ideal W = z0*z2 - z1^2;")?;
    drop(f);
    let file = path.to_string_lossy().to_string();

    for args in [
        vec!["betti", &file, "V", "--json"],
        vec!["pgshell", &file, "V", "W", "--method", "both"],
        vec!["pgshell", &file, "W", "V"],
    ] {
        println!("$ pgshell {}", args.join(" "));
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = pgshell::cli::run(std::iter::once("pgshell").chain(args.iter().copied()), &mut out, &mut err);
        print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
        println!("exit {code}\n");
    }
    std::fs::remove_file(path)
}
