//! Runs the registered checks, or the ones named on the command line.
//!
//! ```text
//! cargo run --example structural_checks -- chk_fr_structure chk_ind_unique
//! ```

use harary::harness::{check_ids, run_selected, HarnessReport, Scope};

fn main() {
    let ids: Vec<String> = std::env::args().skip(1).collect();
    if ids.is_empty() {
        println!("registered: {}", check_ids().join(", "));
    }
    let scope = Scope::default();
    let selected = (!ids.is_empty()).then_some(ids.as_slice());
    let report = HarnessReport::new(scope, run_selected(selected, &scope));
    print!("{}", report.to_text(!ids.is_empty()));
}
