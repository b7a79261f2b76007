// Abelianization plus index-2 kernel invariants separate the seven
// exceptional groups.

use std::error::Error;

use splitz::presentations::{fingerprint, ExceptionalGroup, FinitePresentation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for g in ExceptionalGroup::ALL {
        let p = g.presentation();
        println!("{g:<3} {:<40} {}", g.description(), fingerprint(&p)?);
    }

    // BS(1,-1) is the Klein bottle group, so its fingerprint matches E1.
    let bs = FinitePresentation::parse(&["x", "t"], &["t x t^-1 = x^-1"])?;
    let fp = fingerprint(&bs)?;
    assert_eq!(ExceptionalGroup::matching(&fp), Some(ExceptionalGroup::E1));
    println!("BS(1,-1)  {fp}  matches {}", ExceptionalGroup::E1);

    let trefoil = FinitePresentation::parse(&["a", "b"], &["a^2 = b^3"])?;
    let fp = fingerprint(&trefoil)?;
    println!("a^2 = b^3 {fp}  matches {:?}", ExceptionalGroup::matching(&fp));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
