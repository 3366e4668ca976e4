// List every linear extension and count them independently.
//
// cargo run --example count_and_enumerate

use std::error::Error;

use ordext::{count_linear_extensions, enumerate_linear_extensions, ids, validate, ElementId, Poset};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = |s: &str| ElementId::new(s);
    let diamond = validate(
        ids(&["0", "x", "y", "1"])?,
        vec![
            (e("0")?, e("x")?),
            (e("0")?, e("y")?),
            (e("x")?, e("1")?),
            (e("y")?, e("1")?),
        ],
        true,
    )?;
    let all = enumerate_linear_extensions(&diamond, usize::MAX);
    for order in &all.orders {
        println!("{}", order);
    }
    assert_eq!(count_linear_extensions(&diamond)? as usize, all.orders.len());

    let antichain = Poset::antichain(ids(&["a", "b", "c", "d", "e", "f"])?)?;
    println!("antichain of 6: {} extensions", count_linear_extensions(&antichain)?);

    let first_ten = enumerate_linear_extensions(&antichain, 10);
    println!(
        "first {} listed, truncated = {}",
        first_ten.orders.len(),
        first_ten.truncated
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
