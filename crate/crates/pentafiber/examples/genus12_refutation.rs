//! Walk through the refutation of genus 12 in the K^2 = 2-3g family.
//!
//! The scroll constraints force a single chain of six (-2)-curves, whose
//! weighted node count 83 + 1/7 falls short of the canonical class
//! inequality at weight e = 5 by exactly 4/7.
//!
//! ```bash
//! cargo run --example genus12_refutation
//! ```

use pentafiber::cli::render_certificate_md;
use pentafiber::enumerator::scroll_case_feasible;
use pentafiber::invariants::FibrationConfig;
use pentafiber::rat::to_pq;

fn main() {
    let g = 12;
    let k2 = 2 - 3 * g;

    // The only candidate surviving the counting constraints.
    let chains = vec![6];
    let config = FibrationConfig::rational_five(g, k2, chains.clone()).unwrap();
    println!("g = {g}, K^2 = {k2}: e_f = {}", config.fiber_nodes());
    println!(
        "forced chain multiset {:?}: r_f = {}",
        chains,
        to_pq(&config.weighted_nodes())
    );

    let report = scroll_case_feasible(g, &chains, 6, 14).unwrap();
    println!(
        "\nfull constraint system at (chains = {:?}, l2 = 6, l3 = 14): feasible = {}\n",
        chains, report.feasible
    );
    for cert in &report.certificates {
        print!("{}", render_certificate_md(cert));
    }

    let mvt = report
        .certificates
        .iter()
        .find(|c| c.name == "mvt[e=5]")
        .unwrap();
    println!(
        "\nMVT deficit at e = 5: 3 r_f - lhs = {} (so g = 12 is impossible)",
        to_pq(&mvt.slack)
    );
}
