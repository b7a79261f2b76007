// Graphviz output for a labeled graph.

use std::error::Error;

use splitz::cli::{run_text, Command, Flags};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let text = "format splitz v1
gbs
vertex a
vertex b
edge e1 a b 2 3
edge e2 b b 1 -1
end
";
    print!("{}", run_text(Command::Dot, text, &Flags::default())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
