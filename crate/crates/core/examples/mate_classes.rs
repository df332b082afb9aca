//! Mate classes of the order-6 census under a few invariants.

use harary::graph::{census, parse_named};
use harary::mates::{classify, mates_of, Invariant};
use harary::Limits;

fn main() -> harary::Result<()> {
    let limits = Limits::default();
    let graphs = census(6, &limits)?;
    let invariants = [
        Invariant::Chromatic,
        Invariant::Independence,
        Invariant::Characteristic,
        Invariant::Harary("(mcc 2)".parse()?),
        Invariant::Harary("(induced-free P3)".parse()?),
    ];
    println!("invariant                      classes unique index");
    for inv in &invariants {
        let c = classify(&graphs, inv, &limits)?;
        println!("{:<30} {:>7} {:>6} {}", inv.id(), c.classes.len(), c.unique_count, c.index());
    }

    let c6 = parse_named("C6")?;
    let mates = mates_of(&c6, &[6], &Invariant::Independence, &limits)?;
    println!("independence mates of C6: {:?}", mates.iter().map(harary::graph::write_graph6).collect::<Vec<_>>());
    Ok(())
}
