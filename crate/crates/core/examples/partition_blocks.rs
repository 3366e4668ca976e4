// A total order in which each block of a partition is an interval.
//
// cargo run --example partition_blocks

use std::error::Error;

use ordext::{ids, partition_block_order, Partition, TieBreakPolicy};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ground = ids(&["a", "b", "c", "d", "e", "f", "g"])?;
    let partition = Partition::new(vec![ids(&["e", "b"])?, ids(&["a"])?, ids(&["g", "c", "d"])?])?;
    let order = partition_block_order(&ground, &partition, TieBreakPolicy::Lexicographic)?;
    // f is in no block and goes last
    println!("{}", order);

    if let Err(err) = Partition::new(vec![ids(&["a", "b"])?, ids(&["b", "c"])?]) {
        println!("rejected: {err}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
