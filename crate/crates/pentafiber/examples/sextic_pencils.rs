//! The plane sextic family: 10 - g double points, 4g - 4 simple base
//! points, K^2 = 3 - 3g after all 3g + 6 blowups.
//!
//! ```bash
//! cargo run --example sextic_pencils
//! ```

use pentafiber::pencils::sextic_case;

fn main() {
    println!("| g | double points | simple points | total blowups | K^2 |");
    println!("|---|----------------|----------------|---------------|-----|");
    for g in 4..=10 {
        let model = sextic_case(g).unwrap();
        assert!(model.verify().unwrap().pass);
        println!(
            "| {} | {} | {} | {} | {} |",
            g,
            model.double_point_count(),
            model.simple_point_count(),
            model.total_blowups(),
            model.blown_k2().unwrap(),
        );
    }
}
