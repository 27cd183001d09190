//! Parse and execute a scenario file: a declarative batch of requests.
//!
//! ```bash
//! cargo run --example scenario_file
//! cargo run --example scenario_file -- path/to/scenario.pf
//! ```

use pentafiber::cli::ScenarioFile;

const DEMO: &str = "\
# the genus-12 refutation, then a case verification
[mvt]
g = 12
k2 = -34
chains = 6
e-max = 10

[case]
id = smooth-quadric

[delpezzo]
g = 9

[output]
format = md
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable scenario file"),
        None => DEMO.to_string(),
    };
    let scenario = match ScenarioFile::parse(&text) {
        Ok(s) => s,
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(2);
        }
    };
    // The canonical rendering parses back to the same requests.
    assert_eq!(ScenarioFile::parse(&scenario.render()).unwrap(), scenario);
    print!("{}", scenario.run().unwrap());
}
