// The three tie-break policies on the same partial order.
//
// cargo run --example tie_break_policies

use std::error::Error;

use ordext::{ids, linear_extension, validate, ElementId, TieBreakPolicy};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = |s: &str| ElementId::new(s);
    // build depends on fetch and configure; test and docs depend on build
    let ground = ids(&["fetch", "configure", "build", "test", "docs"])?;
    let pairs = vec![
        (e("fetch")?, e("build")?),
        (e("configure")?, e("build")?),
        (e("build")?, e("test")?),
        (e("build")?, e("docs")?),
    ];
    let poset = validate(ground, pairs, true)?;

    for policy in [
        TieBreakPolicy::InputOrder,
        TieBreakPolicy::Lexicographic,
        TieBreakPolicy::Seeded(1),
        TieBreakPolicy::Seeded(2),
    ] {
        let order = linear_extension(&poset, policy);
        assert!(order.extends(&poset));
        assert_eq!(order, linear_extension(&poset, policy));
        let names: Vec<&str> = order.sequence().iter().map(ElementId::as_str).collect();
        println!("{policy:>8}: {}", names.join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
