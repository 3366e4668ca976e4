// Parse a dependency file in the relation format and linearize it.
//
// cargo run --example dependency_file

use std::error::Error;

use ordext::format::{parse_relation, render_poset};
use ordext::{linear_extension, validate, TieBreakPolicy};

const DEPS: &str = "\
# every crate, including ones with no edges
util
log
---
util < parser
util < codegen
parser < driver
codegen < driver
log < driver
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let file = parse_relation(DEPS)?;
    let poset = validate(file.ground, file.pairs, true)?;
    print!("{}", render_poset(&poset));
    let order = linear_extension(&poset, TieBreakPolicy::InputOrder);
    println!("build order: {}", order);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
