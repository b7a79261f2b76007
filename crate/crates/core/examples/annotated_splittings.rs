// One-edge splittings with non-cyclic factors, described by annotations.

use std::error::Error;

use splitz::classify::{classify_splitting, DEFAULT_K_MAX};
use splitz::cli::{parse_input, render_report, InputDocument};
use splitz::classify::free_subgroup_check_splitting;

const NOT_SNORMAL: &str = "format splitz v1
amalgam
factorA gens a b
edgeA a b
annotate snormalA no
factorB gens c
edgeB c^2
annotate snormalB yes
annotate modimageB 1
end
";

const KLEIN: &str = "format splitz v1
hnn
base gens h
edgeA h
edgeB h^-1
annotate snormal yes
annotate modimage 1
annotate commensurate 1 -1
end
";

const UNBALANCED_BASE: &str = "format splitz v1
hnn
base gens x s
rel s x s^-1 = x^2
edgeA s
edgeB s
annotate snormal yes
annotate modimage 2
annotate commensurate 1 1
end
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for text in [NOT_SNORMAL, KLEIN, UNBALANCED_BASE] {
        let InputDocument::Splitting(s) = parse_input(text)? else {
            unreachable!()
        };
        let report = classify_splitting(&s, DEFAULT_K_MAX)?;
        println!("{}", s.combined_presentation());
        print!("{}", render_report(&report, free_subgroup_check_splitting(&s).key()));
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
