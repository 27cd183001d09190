//! Base-point constraints for the K^2 = 3-3g family: the forced counts of
//! low-degree curves common to crossing fibrations, and what they say about
//! general position.
//!
//! ```bash
//! cargo run --example del_pezzo_constraints
//! ```

use pentafiber::cli::render_del_pezzo_md;
use pentafiber::enumerator::del_pezzo_case_constraints;

fn main() {
    for g in 4..=10 {
        let report = del_pezzo_case_constraints(g).unwrap();
        print!("{}", render_del_pezzo_md(&report));
        println!();
    }
}
