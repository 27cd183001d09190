//! Exhaustive (l', r) stability scan: which chain shapes survive the
//! chain-length bound in each family.
//!
//! In the 3-3g family the bound forces stability (no chains at all) once
//! g >= 9, and allows at most a single A_1 or A_2 point at g = 8.
//!
//! ```bash
//! cargo run --example stability_scan
//! ```

use pentafiber::enumerator::{surviving_chain_shapes, K2Family};

fn main() {
    for family in [K2Family::TwoMinus3g, K2Family::ThreeMinus3g] {
        println!("## K^2 = {}\n", family.slug());
        for g in 4..=17 {
            let shapes = surviving_chain_shapes(g, family).unwrap();
            let rendered = if shapes.is_empty() {
                "none (genus already impossible)".to_string()
            } else {
                shapes
                    .iter()
                    .map(|(l, r)| format!("({l},{r})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("g = {g:2}: {rendered}");
        }
        println!();
    }
}
