//! Partition counts of one graph for several properties.

use num_bigint::BigUint;

use harary::graph::parse_named;
use harary::polynomials::{coloring_counts, harary_counts};
use harary::Property;

fn main() -> harary::Result<()> {
    let g = parse_named("C5")?;
    for expr in ["edgeless", "(mcc 2)", "(induced-free P3)", "all", "(order-in 1 2)"] {
        let p: Property = expr.parse()?;
        let h = harary_counts(&g, &p)?;
        let values: Vec<BigUint> = (0..=5u32).map(|k| h.evaluate(&BigUint::from(k))).collect();
        println!("{p}");
        println!("  h        {:?}", h.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
        println!("  c        {:?}", coloring_counts(&h).iter().map(ToString::to_string).collect::<Vec<_>>());
        println!("  falling  {h}");
        println!("  monomial {}", h.to_monomial());
        println!("  k=0..5   {:?}", values.iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    // two disjoint 4-cycles split into 4-cycle blocks in exactly one way per block count
    let two = parse_named("mc 2 4")?;
    let du: Property = "(du C4)".parse()?;
    println!("F_4(2C4) = {}", harary_counts(&two, &du)?);
    Ok(())
}
