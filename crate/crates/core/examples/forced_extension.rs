// Extend a partial order to a total one that puts a chosen incomparable
// pair in a chosen direction.
//
// cargo run --example forced_extension

use std::error::Error;

use ordext::{extend_with_pair, ids, szpilrajn, validate, ElementId, ForcedPair, TieBreakPolicy};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = |s: &str| ElementId::new(s);
    let poset = validate(ids(&["a", "b", "c"])?, vec![(e("a")?, e("c")?)], true)?;

    // adjoining b < a forces b < c as well
    let pair = ForcedPair::new(e("b")?, e("a")?)?;
    let widened = extend_with_pair(&poset, &pair)?;
    println!("after forcing b < a:");
    for (x, y) in widened.pairs() {
        println!("  {x} < {y}");
    }

    for forced in [pair.clone(), pair.reversed()] {
        let cert = szpilrajn(&poset, Some(&forced), TieBreakPolicy::InputOrder)?;
        assert!(cert.verify());
        println!(
            "forced {} before {}: {}",
            forced.first(),
            forced.second(),
            cert.output_order()
        );
    }

    let comparable = ForcedPair::new(e("c")?, e("a")?)?;
    if let Err(err) = szpilrajn(&poset, Some(&comparable), TieBreakPolicy::InputOrder) {
        println!("rejected: {err}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
