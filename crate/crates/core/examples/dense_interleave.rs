// Interleave a set with its image under a bijection, then check density.
//
// cargo run --example dense_interleave

use std::error::Error;

use ordext::{dense_interleave, density_gap, ids, is_dense, Bijection, ElementId, TieBreakPolicy};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let y = ids(&["y1", "y2", "y3"])?;
    let x = ids(&["x1", "x2", "x3"])?;
    let phi = Bijection::from_pairs(y.iter().cloned().zip(x.iter().cloned()))?;

    let order = dense_interleave(&y, &x, &phi, TieBreakPolicy::InputOrder)?;
    println!("{}", order);
    println!("X strictly dense in Y: {}", is_dense(&x, &y, &order, true)?);

    // neighbours in the order have nothing strictly between them
    let gap = density_gap(&x, order.sequence(), &order, true)?;
    if let Some((a, b)) = gap {
        println!("X is not strictly dense in X and Y together: nothing between {a} and {b}");
    }

    let short = Bijection::from_pairs([(ElementId::new("y1")?, ElementId::new("x1")?)])?;
    if let Err(err) = dense_interleave(&y, &x, &short, TieBreakPolicy::InputOrder) {
        println!("rejected: {err}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
