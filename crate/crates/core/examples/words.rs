// Parsing, reducing and inverting words.

use std::error::Error;

use splitz::words::{parse_word, Alphabet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let alphabet = Alphabet::from_names(["a", "b"])?;

    let w = parse_word("a b b^-1 a^2 b^-1 a^-1", &alphabet)?;
    println!("parsed        {w}");
    println!("free reduced  {}", w.free_reduce());
    println!("inverse       {}", w.invert());

    let r = parse_word("a^2 = b^2", &alphabet)?;
    println!("relation as relator  {r}");

    let conj = parse_word("a b^3 a^-1", &alphabet)?;
    assert_eq!(conj.cyclically_reduce().to_string(), "b^3");
    println!("cyclic core of {conj}  {}", conj.cyclically_reduce());

    match parse_word("a c", &alphabet) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("c is not in the alphabet"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
