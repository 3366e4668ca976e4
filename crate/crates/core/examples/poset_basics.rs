// Validate a relation, close it, restrict it and inspect comparability.
//
// cargo run --example poset_basics

use std::error::Error;

use ordext::{ids, transitive_closure, validate, ElementId, OrderError, StrictRelation};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = |s: &str| ElementId::new(s);

    // the diamond 0 < x, 0 < y, x < 1, y < 1
    let ground = ids(&["0", "x", "y", "1"])?;
    let pairs = vec![
        (e("0")?, e("x")?),
        (e("0")?, e("y")?),
        (e("x")?, e("1")?),
        (e("y")?, e("1")?),
    ];

    // as given the relation is missing 0 < 1
    match validate(ground.clone(), pairs.clone(), false) {
        Err(OrderError::NotClosed { x, y, z }) => println!("not closed: {x} < {y} < {z}"),
        other => println!("unexpected: {other:?}"),
    }

    let diamond = validate(ground, pairs.clone(), true)?;
    println!("closed diamond has {} strict pairs", diamond.pair_count());
    for (x, y) in diamond.pairs() {
        println!("  {x} < {y}");
    }

    let closed = transitive_closure(&StrictRelation::from_pairs(pairs)?)?;
    assert_eq!(closed, diamond.relation());

    println!("x ~ y comparable? {}", diamond.is_comparable(&e("x")?, &e("y")?)?);
    for (x, y) in diamond.incomparable_pairs() {
        println!("incomparable: {x} {y}");
    }

    let spine = diamond.restrict(&ids(&["0", "x", "1"])?)?;
    println!("restricted to 0, x, 1: total = {}", spine.is_total());

    let cyclic = validate(
        ids(&["a", "b", "c"])?,
        vec![(e("a")?, e("b")?), (e("b")?, e("c")?), (e("c")?, e("a")?)],
        true,
    );
    if let Err(err) = cyclic {
        println!("rejected: {err}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
