//! Building properties, testing closure and counting members.

use harary::graph::parse_named;
use harary::properties::{is_compton_gessel_upto, is_hereditary_upto, speed, OrderSet};
use harary::{Limits, Property};

fn main() -> harary::Result<()> {
    let limits = Limits::default();
    let p3_free = Property::induced_free(parse_named("P3")?);
    let even_cliques = Property::intersection(
        Property::Cliques,
        Property::order_in(OrderSet::residue(0, 2)?),
    );
    let parsed: Property = "(union (mcc 1) (explicit C4 (mc 2 3)))".parse()?;

    for p in [p3_free, even_cliques, parsed, Property::ComponentOrderAtMost(2)] {
        let her = is_hereditary_upto(&p, 6, &limits)?;
        let cg = is_compton_gessel_upto(&p, 6, &limits)?;
        let s = speed(&p, 6, &limits)?;
        println!("{p}");
        println!("  hereditary to 6: {} {:?}", her.holds, her.failed);
        println!("  unions and components to 6: {} {:?}", cg.holds, cg.failed);
        println!("  order 6 members: {} labelled, {} unlabelled", s.labeled, s.unlabeled);
    }

    match "(du P3+P3)".parse::<Property>() {
        Ok(p) => println!("unexpected: {p}"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
