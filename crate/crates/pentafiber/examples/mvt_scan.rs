//! Scan the MVT inequality family for an ad-hoc fibration profile.
//!
//! ```bash
//! cargo run --example mvt_scan -- 12 -34 6
//! cargo run --example mvt_scan           # defaults to the profile above
//! ```
//!
//! Arguments: `g k2 [chain lengths...]`.

use pentafiber::cli::render_mvt_scan_md;
use pentafiber::invariants::FibrationConfig;

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (g, k2, chains) = match args.as_slice() {
        [] => (12, -34, vec![6]),
        [g, k2, rest @ ..] => (*g, *k2, rest.to_vec()),
        _ => panic!("usage: mvt_scan g k2 [chains...]"),
    };

    let config = match FibrationConfig::rational_five(g, k2, chains) {
        Ok(c) => c,
        Err(err) => {
            eprintln!("invalid profile: {err}");
            std::process::exit(2);
        }
    };
    let scan = config.mvt_scan(12).unwrap();
    print!("{}", render_mvt_scan_md(&config, &scan));
}
