// Every command of the binary, run on the fixture files.

use std::error::Error;
use std::path::Path;

use splitz::cli::{parse_input, run, Command, Flags};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let read = |name: &str| std::fs::read_to_string(fixtures.join(name));

    let bs = parse_input(&read("bs_2_3.splitz")?)?;
    let flags = Flags {
        word: Some("t x^2 t^-1 x^-3".into()),
        ..Flags::default()
    };
    for command in [Command::Classify, Command::Modular, Command::Abelianize, Command::Word, Command::Dot] {
        println!("$ splitz {} bs_2_3.splitz", command.name());
        print!("{}", run(command, &bs, &flags)?);
    }

    println!("$ splitz reduce reducible_path.splitz");
    print!("{}", run(Command::Reduce, &parse_input(&read("reducible_path.splitz")?)?, &flags)?);

    println!("$ splitz fingerprint e4.splitz");
    print!("{}", run(Command::Fingerprint, &parse_input(&read("e4.splitz")?)?, &flags)?);

    let bad = "format splitz v1\ngbs\nvertex u\nvertex v\nedge e1 u v 0 3\nend\n";
    let err = parse_input(bad).unwrap_err();
    println!("zero label: exit {} ({err})", err.exit_code());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
