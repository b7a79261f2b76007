// Labeled graphs, their reduction and the presentation they define.

use std::error::Error;

use num_bigint::BigInt;
use splitz::gog::{GbsEdge, GbsGraph};
use splitz::words::Generator;

fn edge(id: &str, u: &str, v: &str, m: i64, n: i64) -> Result<GbsEdge, Box<dyn Error>> {
    Ok(GbsEdge::new(id, Generator::new(u)?, Generator::new(v)?, BigInt::from(m), BigInt::from(n)))
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let names = ["u", "v", "w"].map(|n| Generator::new(n).expect("valid name"));
    let g = GbsGraph::new(
        names.to_vec(),
        vec![edge("e1", "u", "v", 1, 2)?, edge("e2", "v", "w", 3, 4)?, edge("e3", "w", "w", 2, -2)?],
    )?;

    for e in g.edges() {
        println!("{} {}-{} ({}, {}) is {:?}", e.id, e.u, e.v, e.label_u, e.label_v, g.classify_edge(&e.id)?);
    }
    println!("presentation {}", g.to_presentation());
    println!("abelianized  {}", g.to_presentation().abelianization());

    let r = g.reduce();
    println!("reduced      {}", r.to_presentation());
    assert_eq!(
        g.to_presentation().abelianization(),
        r.to_presentation().abelianization()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
