// The modular homomorphism, a map onto Z when it is nontrivial, and the
// normal cyclic subgroup when it is trivial.

use std::error::Error;

use splitz::britton::verify_normal;
use splitz::gog::GbsGraph;
use splitz::modular::{check_homomorphism, modular_map, normal_power_exponent, z_surjection_witness};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (m, n) in [(2, 3), (1, 2), (3, 3), (2, -2)] {
        let g = GbsGraph::baumslag_solitar(m, n)?;
        let delta = modular_map(&g)?;
        let values: Vec<String> = delta.values().iter().map(|(x, q)| format!("{x} -> {q}")).collect();
        print!("BS({m},{n}): {}", values.join(", "));
        if delta.is_balanced() {
            let p = normal_power_exponent(&g, &delta)?;
            println!("; balanced, x^{p} is normal ({})", verify_normal(&g, &p));
        } else {
            let w = z_surjection_witness(&g, &delta)?;
            check_homomorphism(&g, &w)?;
            let w: Vec<String> = w.iter().map(|(x, k)| format!("{x} -> {k}")).collect();
            println!("; onto Z by {}", w.join(", "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
