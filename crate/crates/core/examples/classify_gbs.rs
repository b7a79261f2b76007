// Full classification reports for a few GBS groups.

use std::error::Error;

use splitz::classify::{classify_gbs, DEFAULT_K_MAX};
use splitz::cli::{parse_input, InputDocument};

const GROUPS: &[(&str, &str)] = &[
    ("BS(2,3)", "vertex x\nedge e1 x x 2 3"),
    ("BS(3,3)", "vertex x\nedge e1 x x 3 3"),
    ("BS(1,2)", "vertex x\nedge e1 x x 1 2"),
    ("trefoil", "vertex a\nvertex b\nedge e1 a b 2 3"),
    ("F2 x Z", "vertex x\nedge e1 x x 1 1\nedge e2 x x 1 1"),
    ("mixed", "vertex a\nvertex b\nedge e1 a a 1 2\nedge e2 a b 2 3"),
];

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (name, body) in GROUPS {
        let InputDocument::Gbs(g) = parse_input(&format!("format splitz v1\ngbs\n{body}\nend\n"))? else {
            unreachable!()
        };
        let report = classify_gbs(&g, DEFAULT_K_MAX)?;
        println!(
            "{name:<8} {:<26} {:<22} [{}]",
            report.trichotomy.key(),
            report.sq.key(),
            report.citations.join(",")
        );
        for line in &report.justification {
            println!("         {line}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
