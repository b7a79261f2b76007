// Smith normal form and cokernel invariants of an integer matrix.

use std::error::Error;

use num_bigint::BigInt;
use splitz::zlinalg::{cokernel_invariants, element_order_in_cokernel, smith_normal_form, IntMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m = IntMatrix::from_i64(3, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M =\n{m}");
    println!("D =\n{}", snf.d);

    let check = snf.u.mul(&m)?.mul(&snf.v)?;
    assert_eq!(check, snf.d);
    println!("U M V = D holds; diagonal {:?}", snf.diagonal().iter().map(|x| x.to_string()).collect::<Vec<_>>());

    // Rows are relations of an abelian group on three generators.
    println!("cokernel  {}", cokernel_invariants(&m));

    let e1: Vec<BigInt> = [1, 0, 0].into_iter().map(BigInt::from).collect();
    println!("order of the first generator  {}", element_order_in_cokernel(&e1, &m)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
