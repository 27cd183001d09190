//! Derive the full (g, K^2) feasibility table and the per-family genus caps.
//!
//! ```bash
//! cargo run --example bounds_table
//! ```

use pentafiber::cli::render_dichotomy_md;
use pentafiber::enumerator::{certify_max_genus, feasible_genus_k2, K2Family};

fn main() {
    let table = feasible_genus_k2(5).expect("s = 5");
    print!("{}", render_dichotomy_md(&table));

    println!();
    for family in [K2Family::TwoMinus3g, K2Family::ThreeMinus3g] {
        let report = certify_max_genus(family);
        let feasible: Vec<i64> = report
            .rows
            .iter()
            .filter(|r| r.feasible)
            .map(|r| r.g)
            .collect();
        println!(
            "K^2 = {}: certified max genus {:?}, feasible g = {:?}",
            family.slug(),
            report.max_genus,
            feasible
        );
    }
}
