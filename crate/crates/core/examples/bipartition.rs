// A total order with one subset entirely before another.
//
// cargo run --example bipartition

use std::error::Error;

use ordext::{bipartition_order, ids, TieBreakPolicy};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ground = ids(&["1", "2", "3", "4", "5", "6"])?;
    let a = ids(&["5", "2"])?;
    let b = ids(&["1", "6"])?;
    for policy in [TieBreakPolicy::InputOrder, TieBreakPolicy::Seeded(8)] {
        let order = bipartition_order(&ground, &a, &b, policy)?;
        println!("{policy:>6}: {}", order);
        for x in &a {
            for y in &b {
                assert!(order.precedes(x, y)?);
            }
        }
    }
    if let Err(err) = bipartition_order(
        &ground,
        &ids(&["1", "2"])?,
        &ids(&["2", "3"])?,
        TieBreakPolicy::InputOrder,
    ) {
        println!("rejected: {err}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
