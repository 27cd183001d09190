//! Build and verify all five classification cases.
//!
//! ```bash
//! cargo run --example case_gallery
//! ```

use pentafiber::pencils::{build_case, CaseId};

fn main() {
    let cases = [
        (CaseId::TrigonalScroll, 11, Some(1)),
        (CaseId::PlaneQuintic, 6, None),
        (CaseId::QuadricCone, 4, None),
        (CaseId::PlaneSextic, 6, None),
        (CaseId::SmoothQuadric, 9, None),
    ];

    println!("| case | g | ambient | pencil | blowups | K^2 | verified |");
    println!("|------|---|---------|--------|---------|-----|----------|");
    for (id, g, n) in cases {
        let model = build_case(id, g, n).unwrap();
        let verification = model.verify().unwrap();
        println!(
            "| {} | {} | {} | {} | {} | {} | {} |",
            id.slug(),
            model.g,
            model.ambient.base(),
            model.ambient.format_class(&model.pencil),
            model.total_blowups(),
            model.blown_k2().unwrap(),
            if verification.pass { "yes" } else { "NO" }
        );
    }

    // The genus-6 sextic carries the profile of the one construction known
    // to actually reach five singular fibers.
    let sextic = build_case(CaseId::PlaneSextic, 6, None).unwrap();
    println!(
        "\ngenus-6 sextic: {} double points, {} simple base points",
        sextic.double_point_count(),
        sextic.simple_point_count()
    );
    for note in &sextic.notes {
        println!("  note: {note}");
    }
}
