// The total order obtained by listing elements one after another.
//
// cargo run --example enumeration_order

use std::error::Error;

use ordext::{ids, order_from_enumeration};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let order = order_from_enumeration(ids(&["b1", "b2", "b3"])?)?;
    println!("strict pairs of b1, b2, b3:");
    for (x, y) in order.induced_pairs().iter() {
        println!("  {x} < {y}");
    }
    assert_eq!(order.induced_pairs().len(), 3);

    if let Err(err) = order_from_enumeration(ids(&["a", "b", "a"])?) {
        println!("rejected: {err}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
