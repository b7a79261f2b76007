// Deciding equality in a GBS group by pinch reduction.

use std::error::Error;

use splitz::britton::is_identity;
use splitz::gog::GbsGraph;
use splitz::words::parse_word;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = GbsGraph::baumslag_solitar(2, 3)?;
    let alphabet = g.to_presentation().alphabet();
    println!("group {}", g.to_presentation());

    for text in [
        "t x^2 t^-1 x^-3",
        "t x^4 t^-1 x^-6",
        "t x t^-1 x^-1",
        "t^-1 x^3 t x^-2",
        "t x^2 t^-1 x t x^-2 t^-1 x^-4",
        "t x^2 t^-1 t x^2 t^-1 x^-6",
    ] {
        let w = parse_word(text, &alphabet)?;
        println!("{text:<32} identity = {}", is_identity(&g, &w)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
