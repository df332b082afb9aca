//! The classical polynomials on a few named graphs.

use harary::graph::parse_named;
use harary::polynomials::{
    characteristic_poly, chromatic_dc, clique_poly, domination_poly, independence_poly,
    laplacian_poly, matching_polys,
};

fn main() -> harary::Result<()> {
    for name in ["K2", "C4", "P5", "K1,3", "D6"] {
        let g = parse_named(name)?;
        let (m, mu) = matching_polys(&g)?;
        println!("{name}");
        println!("  chromatic    {}", chromatic_dc(&g)?);
        println!("  independence {}", independence_poly(&g)?);
        println!("  clique       {}", clique_poly(&g)?);
        println!("  domination   {}", domination_poly(&g)?);
        println!("  matching     {m}");
        println!("  defect       {mu}");
        println!("  char         {}", characteristic_poly(&g)?);
        println!("  laplacian    {}", laplacian_poly(&g)?);
    }
    Ok(())
}
