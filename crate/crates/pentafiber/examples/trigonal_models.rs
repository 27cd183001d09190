//! Enumerate every admissible trigonal scroll model per genus.
//!
//! For each 4 <= g <= 11, the Maroni invariant n runs over n >= 0 with
//! g + n even and 3n <= g + 2; the base-point count 3g + 6 never depends
//! on n.
//!
//! ```bash
//! cargo run --example trigonal_models
//! ```

use pentafiber::pencils::enumerate_trigonal;

fn main() {
    println!("| g | n | ambient | pencil | base points | K^2 | genus check |");
    println!("|---|---|---------|--------|-------------|-----|-------------|");
    for g in 4..=11 {
        for model in enumerate_trigonal(g).unwrap() {
            println!(
                "| {} | {} | {} | {} | {} | {} | {} |",
                g,
                model.n.unwrap(),
                model.ambient.base(),
                model.ambient.format_class(&model.pencil),
                model.total_blowups(),
                model.blown_k2().unwrap(),
                model.resolved_genus().unwrap(),
            );
        }
    }
}
