//! Enumerates small graphs up to isomorphism and writes them as graph6.
//!
//! ```text
//! cargo run --example graph6_census -- 5
//! ```

use harary::graph::{census, canonical_code, parse_graph6, write_census, write_graph6};
use harary::Limits;

fn main() -> harary::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let limits = Limits::default();

    for k in 0..=n {
        println!("order {k}: {} graphs", census(k, &limits)?.len());
    }

    let graphs = census(n, &limits)?;
    let mut out = Vec::new();
    write_census(&graphs, &mut out)?;
    print!("{}", String::from_utf8_lossy(&out));

    // graph6 of a relabelled path decodes to a different string but the same code
    let p4 = parse_graph6("Ch")?;
    let relabelled = p4.relabel(&[2, 0, 3, 1])?;
    println!(
        "P4 as {} and {}: same canonical code = {}",
        write_graph6(&p4),
        write_graph6(&relabelled),
        canonical_code(&p4) == canonical_code(&relabelled)
    );
    Ok(())
}
