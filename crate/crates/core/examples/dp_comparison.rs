//! Distinguishing-power comparison with witness pairs.

use harary::graph::{census_upto, parse_named, write_graph6};
use harary::mates::{compare_dp, Invariant};
use harary::{Graph, Limits, Property};

fn show(pair: Option<(Graph, Graph)>) -> String {
    pair.map(|(a, b)| format!("{} {}", write_graph6(&a), write_graph6(&b)))
        .unwrap_or_else(|| "none".into())
}

fn main() -> harary::Result<()> {
    let limits = Limits::default();

    let small = census_upto(5, &limits)?;
    let cmp = compare_dp(&Invariant::Chromatic, &Invariant::Independence, &small, &limits)?;
    println!("chromatic vs independence on orders <= 5: {:?}", cmp.verdict);
    println!("  chromatic mates split by independence: {}", show(cmp.first_not_second));
    println!("  independence mates split by chromatic: {}", show(cmp.second_not_first));

    let c4 = parse_named("C4")?;
    let star = parse_named("K1,3")?;
    let set = [c4, star, c4.disjoint_union(&c4)?, star.disjoint_union(&star)?];
    let a = Invariant::Harary(Property::explicit(&[c4]));
    let b = Invariant::Harary(Property::explicit(&[star]));
    let cmp = compare_dp(&a, &b, &set, &limits)?;
    println!("{} vs {}: {:?}", a.id(), b.id(), cmp.verdict);
    println!("{}", serde_json::to_string_pretty(&cmp).expect("json"));
    Ok(())
}
