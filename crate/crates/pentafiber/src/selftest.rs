//! The acceptance checks, callable both from the test suite and from the
//! command line (`pentafiber bounds --self-test`).
//!
//! Every check is exact: integer equalities and rational slacks, tolerance
//! zero. Each returns a [`Criterion`] with a one-line detail string; a check
//! fails by listing what went wrong.

use std::collections::BTreeSet;

use crate::enumerator::{
    certify_max_genus, certify_max_genus_with, component_genus_budget, del_pezzo_case_constraints,
    feasible_genus_k2, surviving_chain_shapes, K2Family, LowerBound, SearchOptions,
    NECESSITY_SCOPE,
};
use crate::invariants::{BoundCertificate, FibrationConfig};
use crate::lattice::{DivisorClass, SurfaceModel};
use crate::pencils::{build_case, enumerate_trigonal, sextic_case, CaseId};
use crate::rat::{frac, to_pq};

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct Criterion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Criterion {
    fn from_failures(name: &str, detail_ok: String, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Criterion {
                name: name.into(),
                pass: true,
                detail: detail_ok,
            }
        } else {
            Criterion {
                name: name.into(),
                pass: false,
                detail: failures.join("; "),
            }
        }
    }
}

/// Runs all seven acceptance criteria.
pub fn run_all() -> Vec<Criterion> {
    vec![
        criterion_dichotomy(),
        criterion_sharpened_bound(),
        criterion_stability(),
        criterion_case_table(),
        criterion_del_pezzo(),
        criterion_property_suites(),
        criterion_existence_caveat(),
    ]
}

/// Criterion 1: the `(g, K^2)` dichotomy table is exactly the two families.
pub fn criterion_dichotomy() -> Criterion {
    let mut failures = Vec::new();
    match feasible_genus_k2(5) {
        Err(err) => failures.push(format!("table construction failed: {err}")),
        Ok(table) => {
            if table.rows.len() != 28 {
                failures.push(format!("expected 28 table rows, got {}", table.rows.len()));
            }
            let expected: BTreeSet<(i64, i64)> = (4..=17)
                .map(|g| (g, 2 - 3 * g))
                .chain((4..=10).map(|g| (g, 3 - 3 * g)))
                .collect();
            let pairs = table.feasible_pairs();
            if pairs != expected {
                failures.push(format!(
                    "feasible set mismatch: extra {:?}, missing {:?}",
                    pairs.difference(&expected).collect::<Vec<_>>(),
                    expected.difference(&pairs).collect::<Vec<_>>()
                ));
            }
            if !pairs.contains(&(17, -49)) {
                failures.push("missing (17, -49)".into());
            }
            if pairs.contains(&(18, -52)) {
                failures.push("contains (18, -52)".into());
            }
            for (g, k2) in &pairs {
                if K2Family::of(*g, *k2).is_none() {
                    failures.push(format!("off-family pair ({g}, {k2})"));
                }
            }
        }
    }
    Criterion::from_failures(
        "dichotomy",
        "28 rows, 21 feasible pairs: (g, 2-3g) for 4..=17 and (g, 3-3g) for 4..=10".into(),
        failures,
    )
}

/// Criterion 2: the sharpened bound `g <= 11` with the exact `g = 12`
/// refutation data.
pub fn criterion_sharpened_bound() -> Criterion {
    let mut failures = Vec::new();
    let report = certify_max_genus(K2Family::TwoMinus3g);
    if report.max_genus != Some(11) {
        failures.push(format!("max genus {:?}, expected 11", report.max_genus));
    }
    for row in &report.rows {
        if row.feasible != (row.g <= 11) {
            failures.push(format!("row g = {} has wrong verdict", row.g));
        }
    }
    match report.row(12) {
        None => failures.push("missing g = 12 row".into()),
        Some(row) => {
            let mvt = row
                .routes
                .iter()
                .flat_map(|r| &r.certificates)
                .find(|c| c.name == "mvt[e=5]");
            match mvt {
                None => failures.push("g = 12 row cites no MVT certificate".into()),
                Some(cert) => {
                    if cert.substitution.get("rf") != Some(&frac(582, 7)) {
                        failures.push(format!(
                            "r_f = {}, expected 582/7",
                            cert.substitution
                                .get("rf")
                                .map(to_pq)
                                .unwrap_or_else(|| "missing".into())
                        ));
                    }
                    if cert.slack != frac(-4, 7) {
                        failures.push(format!("MVT deficit {}, expected -4/7", to_pq(&cert.slack)));
                    }
                    if cert.verdict {
                        failures.push("refutation certificate unexpectedly holds".into());
                    }
                }
            }
        }
    }
    Criterion::from_failures(
        "sharpened-bound",
        "max genus 11 in the 2-3g family; g = 12 refuted with r_f = 582/7, deficit -4/7 at e = 5"
            .into(),
        failures,
    )
}

/// Criterion 3: the stability scan for `K^2 = 3-3g`.
pub fn criterion_stability() -> Criterion {
    let mut failures = Vec::new();
    for g in 9..=17 {
        match surviving_chain_shapes(g, K2Family::ThreeMinus3g) {
            Err(err) => failures.push(format!("scan failed at g = {g}: {err}")),
            Ok(shapes) => {
                if !shapes.iter().all(|&s| s == (0, 0)) {
                    failures.push(format!("g = {g} admits chain shapes {shapes:?}"));
                }
            }
        }
    }
    for g in [9, 10] {
        let shapes = surviving_chain_shapes(g, K2Family::ThreeMinus3g).unwrap_or_default();
        if shapes != vec![(0, 0)] {
            failures.push(format!("g = {g} expected exactly (0,0), got {shapes:?}"));
        }
    }
    match surviving_chain_shapes(8, K2Family::ThreeMinus3g) {
        Err(err) => failures.push(format!("scan failed at g = 8: {err}")),
        Ok(shapes) => {
            if shapes != vec![(0, 0), (1, 1), (2, 1)] {
                failures.push(format!("g = 8 expected (0,0),(1,1),(2,1), got {shapes:?}"));
            }
        }
    }
    Criterion::from_failures(
        "stability",
        "3-3g family: only (l', r) = (0,0) for g >= 9; (0,0),(1,1),(2,1) at g = 8".into(),
        failures,
    )
}

/// Criterion 4: all five case models verify with their exact values.
pub fn criterion_case_table() -> Criterion {
    let mut failures = Vec::new();
    let fixed: [(CaseId, i64, i64, i64); 3] = [
        (CaseId::PlaneQuintic, 6, 25, -16),
        (CaseId::QuadricCone, 4, 18, -10),
        (CaseId::SmoothQuadric, 9, 32, -24),
    ];
    for (id, g, base_points, k2) in fixed {
        match build_case(id, g, None).and_then(|m| Ok((m.verify()?, m))) {
            Err(err) => failures.push(format!("{}: {err}", id.slug())),
            Ok((v, m)) => {
                if !v.pass {
                    failures.push(format!("{} failed verification", id.slug()));
                }
                if m.total_blowups() != base_points {
                    failures.push(format!(
                        "{}: {} base points, expected {base_points}",
                        id.slug(),
                        m.total_blowups()
                    ));
                }
                match m.blown_k2() {
                    Ok(actual) if actual == k2 => {}
                    other => {
                        failures.push(format!("{}: K^2 {:?}, expected {k2}", id.slug(), other))
                    }
                }
            }
        }
    }
    for g in 4..=11 {
        match enumerate_trigonal(g) {
            Err(err) => failures.push(format!("trigonal g = {g}: {err}")),
            Ok(models) => {
                if models.is_empty() {
                    failures.push(format!("no trigonal model at g = {g}"));
                }
                for m in models {
                    let ok = m.verify().map(|v| v.pass).unwrap_or(false);
                    if !ok || m.total_blowups() != 3 * g + 6 || m.blown_k2().ok() != Some(2 - 3 * g)
                    {
                        failures.push(format!("trigonal g = {g}, n = {:?} failed", m.n));
                    }
                    let fiber = m.ambient.class_from_base(&[0, 1]).unwrap();
                    if m.ambient.pairing(&m.pencil, &fiber).ok() != Some(3) {
                        failures.push(format!("trigonal g = {g}: pencil . G != 3"));
                    }
                }
            }
        }
    }
    for g in 4..=10 {
        match sextic_case(g) {
            Err(err) => failures.push(format!("sextic g = {g}: {err}")),
            Ok(m) => {
                let ok = m.verify().map(|v| v.pass).unwrap_or(false);
                if !ok
                    || m.double_point_count() != 10 - g
                    || m.total_blowups() != 3 * g + 6
                    || m.blown_k2().ok() != Some(3 - 3 * g)
                {
                    failures.push(format!("sextic g = {g} failed"));
                }
            }
        }
    }
    Criterion::from_failures(
        "case-table",
        "all five cases verify: quintic (25, -16), cone (18, -10), quadric (32, -24), \
         trigonal 3g+6 points with pencil.G = 3 for 4 <= g <= 11, sextic 10-g doubles \
         for 4 <= g <= 10"
            .into(),
        failures,
    )
}

/// Criterion 5: del Pezzo base-point constraints.
pub fn criterion_del_pezzo() -> Criterion {
    let mut failures = Vec::new();
    match del_pezzo_case_constraints(9) {
        Err(err) => failures.push(format!("g = 9: {err}")),
        Ok(r) => {
            if r.forced_zero != vec![2, 3]
                || r.bounds
                    != vec![LowerBound {
                        degrees: vec![4],
                        min_total: 8,
                    }]
            {
                failures.push(format!(
                    "g = 9 constraints {:?} / {:?}",
                    r.forced_zero, r.bounds
                ));
            }
        }
    }
    match del_pezzo_case_constraints(10) {
        Err(err) => failures.push(format!("g = 10: {err}")),
        Ok(r) => {
            if r.forced_zero != vec![2, 3, 4]
                || r.bounds
                    != vec![LowerBound {
                        degrees: vec![5],
                        min_total: 5,
                    }]
            {
                failures.push(format!(
                    "g = 10 constraints {:?} / {:?}",
                    r.forced_zero, r.bounds
                ));
            }
        }
    }
    for g in 6..=8 {
        match del_pezzo_case_constraints(g) {
            Err(err) => failures.push(format!("g = {g}: {err}")),
            Ok(r) => {
                let expected = vec![LowerBound {
                    degrees: vec![2, 3, 4],
                    min_total: 2 * g - 10,
                }];
                if r.bounds != expected {
                    failures.push(format!("g = {g} bounds {:?}", r.bounds));
                }
            }
        }
    }
    Criterion::from_failures(
        "del-pezzo",
        "g = 9: l4 >= 8 with l2 = l3 = 0; g = 10: l5 >= 5 with l2 = l3 = l4 = 0; \
         g in 6..=8: l2 + l3 + l4 >= 2g - 10"
            .into(),
        failures,
    )
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }
}

/// Criterion 6: the property suites.
pub fn criterion_property_suites() -> Criterion {
    let mut failures = Vec::new();

    // Bilinearity and symmetry of the pairing on 1000 random triples.
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15);
    for trial in 0..1000 {
        let surface = match rng.in_range(0, 2) {
            0 => SurfaceModel::plane(),
            _ => SurfaceModel::hirzebruch(rng.in_range(0, 6)).unwrap(),
        }
        .blown_up(rng.in_range(0, 8) as usize);
        let rank = surface.picard_rank();
        let random_class = |rng: &mut XorShift| {
            DivisorClass::zero(rank)
                .coefficients()
                .iter()
                .map(|_| rng.in_range(-9, 9))
                .collect::<Vec<i64>>()
        };
        let a = surface.class(random_class(&mut rng)).unwrap();
        let b = surface.class(random_class(&mut rng)).unwrap();
        let c = surface.class(random_class(&mut rng)).unwrap();
        let x = rng.in_range(-5, 5);
        let y = rng.in_range(-5, 5);
        let combined = &(&a * x) + &(&b * y);
        let lhs = surface.pairing(&combined, &c).unwrap();
        let rhs = x * surface.pairing(&a, &c).unwrap() + y * surface.pairing(&b, &c).unwrap();
        if lhs != rhs {
            failures.push(format!("bilinearity broke on trial {trial}"));
            break;
        }
        if surface.pairing(&a, &b).unwrap() != surface.pairing(&b, &a).unwrap() {
            failures.push(format!("symmetry broke on trial {trial}"));
            break;
        }
    }

    // Plane adjunction against the closed form.
    let plane = SurfaceModel::plane();
    for d in 1..=20 {
        let class = plane.class(vec![d]).unwrap();
        if plane.arithmetic_genus(&class).unwrap() != (d - 1) * (d - 2) / 2 {
            failures.push(format!("plane genus mismatch at degree {d}"));
        }
    }

    // Component budget against the node accounting, both families.
    for g in 4..=17 {
        for family in [K2Family::TwoMinus3g, K2Family::ThreeMinus3g] {
            let k2 = family.k2(g);
            let config = FibrationConfig::rational_five(g, k2, vec![]).unwrap();
            if component_genus_budget(g, k2).unwrap() != config.fiber_nodes() - 5 * (g - 1) {
                failures.push(format!("component budget mismatch at g = {g}, {family:?}"));
            }
        }
    }

    // Certificate serialize / re-validate round trip.
    let config = FibrationConfig::rational_five(12, -34, vec![6]).unwrap();
    let table = feasible_genus_k2(5).unwrap();
    let mut certs: Vec<BoundCertificate> = vec![
        config.mvt_check(5).unwrap(),
        config.chain_weight_check(),
        config.mvt5_genus_certificate().unwrap(),
    ];
    certs.extend(table.rows.iter().flat_map(|r| r.certificates.clone()));
    for cert in &certs {
        let json = match serde_json::to_string(cert) {
            Ok(j) => j,
            Err(err) => {
                failures.push(format!("serialization failed: {err}"));
                continue;
            }
        };
        match serde_json::from_str::<BoundCertificate>(&json) {
            Err(err) => failures.push(format!("reparse failed: {err}")),
            Ok(back) => {
                if back != *cert || back.slack != cert.slack {
                    failures.push(format!("round trip changed `{}`", cert.name));
                }
                if let Err(err) = back.revalidate() {
                    failures.push(format!("revalidation failed: {err}"));
                }
            }
        }
    }

    // Enumeration order independence.
    for family in [K2Family::TwoMinus3g, K2Family::ThreeMinus3g] {
        let canonical = certify_max_genus(family);
        let permuted = certify_max_genus_with(
            family,
            SearchOptions {
                shuffle_seed: Some(0xfeed_f00d),
                ..SearchOptions::default()
            },
        );
        if canonical != permuted {
            failures.push(format!("search order changed the {family:?} table"));
        }
    }

    Criterion::from_failures(
        "property-suites",
        "pairing bilinear/symmetric on 1000 random triples; plane adjunction closed form; \
         component budget re-derivation; certificate round trips revalidate; enumeration \
         order-independent"
            .into(),
        failures,
    )
}

/// Criterion 7: the suite asserts necessity only.
pub fn criterion_existence_caveat() -> Criterion {
    let mut failures = Vec::new();
    let table = feasible_genus_k2(5).unwrap();
    if table.scope != NECESSITY_SCOPE {
        failures.push("dichotomy table lacks the necessity-only scope".into());
    }
    for family in [K2Family::TwoMinus3g, K2Family::ThreeMinus3g] {
        let report = certify_max_genus(family);
        if report.scope != NECESSITY_SCOPE {
            failures.push(format!("{family:?} report lacks the necessity-only scope"));
        }
        if family == K2Family::ThreeMinus3g {
            match report.row(10) {
                None => failures.push("missing g = 10 row".into()),
                Some(row) => {
                    if !row.feasible {
                        failures.push("g = 10 in 3-3g wrongly refuted".into());
                    }
                    if !row
                        .note
                        .as_deref()
                        .unwrap_or("")
                        .contains("neither proved nor disproved")
                    {
                        failures.push("g = 10 open-existence flag missing".into());
                    }
                }
            }
        }
    }
    // The one profile known to be realized appears as a shape check only:
    // the genus-6 sextic with four double points.
    match sextic_case(6) {
        Err(err) => failures.push(format!("sextic g = 6: {err}")),
        Ok(m) => {
            if m.double_point_count() != 4 || m.simple_point_count() != 20 {
                failures.push("genus-6 sextic profile off (expected 4 doubles, 20 simples)".into());
            }
        }
    }
    Criterion::from_failures(
        "existence-caveat",
        "all tables are scoped to necessary conditions; g = 10 (3-3g) flagged open; \
         the realized genus-6 sextic profile enters only as a shape check"
            .into(),
        failures,
    )
}
