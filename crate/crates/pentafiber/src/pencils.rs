//! The five pencil models realizing the feasible numerical profiles.
//!
//! Each [`CaseModel`] packages an ambient minimal rational surface, a pencil
//! class on it, and a blowup schedule for the base points. Resolving the
//! schedule must reproduce the fibration's numbers exactly: fiber genus `g`,
//! fiber class squaring to zero, and the predicted `K^2` of the blown-up
//! surface. [`CaseModel::verify`] checks all of that by pure lattice
//! arithmetic and returns a certificate bundle.
//!
//! The cases:
//!
//! - **TrigonalScroll** — curves of class `3D + ((g+n)/2 + n + 1)G` on `F_n`
//!   (`g + n` even, `g + 2 >= 3n`); the general member is trigonal with
//!   Maroni invariant `n`.
//! - **PlaneQuintic** — plane quintics, `g = 6`.
//! - **QuadricCone** — cubic sections of the quadric cone, modeled on its
//!   resolution `F_2` with a vertex-avoiding class, `g = 4`.
//! - **PlaneSextic** — plane sextics whose general member has exactly
//!   `10 - g` double points, `4 <= g <= 10`.
//! - **SmoothQuadric** — quartic sections of a nonsingular quadric (`F_0`),
//!   `g = 9`.

use serde::{Deserialize, Serialize};

use crate::invariants::adjoint_square;
use crate::lattice::{BaseSurface, DivisorClass, SurfaceModel};
use crate::{Error, Result};

/// Identifier of one of the five classification cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseId {
    TrigonalScroll,
    PlaneQuintic,
    QuadricCone,
    PlaneSextic,
    SmoothQuadric,
}

impl CaseId {
    pub fn slug(self) -> &'static str {
        match self {
            CaseId::TrigonalScroll => "trigonal",
            CaseId::PlaneQuintic => "plane-quintic",
            CaseId::QuadricCone => "quadric-cone",
            CaseId::PlaneSextic => "plane-sextic",
            CaseId::SmoothQuadric => "smooth-quadric",
        }
    }

    pub fn from_slug(s: &str) -> Option<Self> {
        match s {
            "trigonal" | "trigonal-scroll" => Some(CaseId::TrigonalScroll),
            "plane-quintic" => Some(CaseId::PlaneQuintic),
            "quadric-cone" => Some(CaseId::QuadricCone),
            "plane-sextic" => Some(CaseId::PlaneSextic),
            "smooth-quadric" => Some(CaseId::SmoothQuadric),
            _ => None,
        }
    }

    /// The genus this case fixes, if it fixes one.
    pub fn fixed_genus(self) -> Option<i64> {
        match self {
            CaseId::PlaneQuintic => Some(6),
            CaseId::QuadricCone => Some(4),
            CaseId::SmoothQuadric => Some(9),
            CaseId::TrigonalScroll | CaseId::PlaneSextic => None,
        }
    }
}

/// One classification case: ambient surface, pencil class and base-point
/// schedule, with the invariants the resolution must reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseModel {
    pub case_id: CaseId,
    pub g: i64,
    /// Maroni invariant; present only for the trigonal scroll case.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    pub ambient: SurfaceModel,
    pub pencil: DivisorClass,
    /// Blowup multiplicities, one per base point: 2 for a double point of
    /// the general member, 1 for a simple base point.
    pub schedule: Vec<i64>,
    pub notes: Vec<String>,
}

/// One exact check of a case invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CaseCheck {
    fn values(name: &str, expected: i64, actual: i64) -> Self {
        CaseCheck {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: expected == actual,
        }
    }
}

/// Result of verifying a [`CaseModel`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseVerification {
    pub checks: Vec<CaseCheck>,
    pub pass: bool,
}

/// Serialization bundle: the case together with its verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseBundle {
    pub case_id: CaseId,
    pub g: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    pub ambient: SurfaceModel,
    pub pencil_coefficients: Vec<i64>,
    pub schedule: Vec<i64>,
    pub notes: Vec<String>,
    pub certificates: Vec<CaseCheck>,
    pub pass: bool,
}

/// Builds one of the five cases. `n` is required (and only meaningful) for
/// the trigonal scroll; fixed-genus cases accept their own genus only.
pub fn build_case(case_id: CaseId, g: i64, n: Option<i64>) -> Result<CaseModel> {
    match case_id {
        CaseId::TrigonalScroll => {
            let n = n.ok_or_else(|| {
                Error::CaseParams("trigonal scroll needs the Maroni invariant n".into())
            })?;
            trigonal_case(g, n)
        }
        CaseId::PlaneSextic => {
            reject_n(case_id, n)?;
            sextic_case(g)
        }
        CaseId::PlaneQuintic => {
            reject_n(case_id, n)?;
            expect_genus(case_id, g)?;
            let ambient = SurfaceModel::plane();
            let pencil = ambient.class_from_base(&[5])?;
            Ok(CaseModel {
                case_id,
                g,
                n: None,
                ambient,
                pencil,
                schedule: vec![1; 25],
                notes: vec![
                    "base points are simple, possibly infinitely near".into(),
                    "base points are not in general position".into(),
                ],
            })
        }
        CaseId::QuadricCone => {
            reject_n(case_id, n)?;
            expect_genus(case_id, g)?;
            let ambient = SurfaceModel::hirzebruch(2)?;
            let pencil = ambient.class_from_base(&[3, 6])?;
            Ok(CaseModel {
                case_id,
                g,
                n: None,
                ambient,
                pencil,
                schedule: vec![1; 18],
                notes: vec![
                    "modeled on the minimal resolution F_2 of the cone; the pencil avoids \
                     the vertex"
                        .into(),
                    "the fibration is not strongly stable".into(),
                ],
            })
        }
        CaseId::SmoothQuadric => {
            reject_n(case_id, n)?;
            expect_genus(case_id, g)?;
            let ambient = SurfaceModel::hirzebruch(0)?;
            let pencil = ambient.class_from_base(&[4, 4])?;
            Ok(CaseModel {
                case_id,
                g,
                n: None,
                ambient,
                pencil,
                schedule: vec![1; 32],
                notes: vec!["base points are not in general position".into()],
            })
        }
    }
}

fn reject_n(case_id: CaseId, n: Option<i64>) -> Result<()> {
    if n.is_some() {
        return Err(Error::CaseParams(format!(
            "case `{}` does not take a Maroni invariant",
            case_id.slug()
        )));
    }
    Ok(())
}

fn expect_genus(case_id: CaseId, g: i64) -> Result<()> {
    let fixed = case_id.fixed_genus().expect("fixed-genus case");
    if g != fixed {
        return Err(Error::CaseParams(format!(
            "case `{}` has genus {fixed}, got {g}",
            case_id.slug()
        )));
    }
    Ok(())
}

fn trigonal_case(g: i64, n: i64) -> Result<CaseModel> {
    if !(4..=11).contains(&g) {
        return Err(Error::CaseParams(format!(
            "trigonal scroll case needs 4 <= g <= 11, got {g}"
        )));
    }
    if n < 0 {
        return Err(Error::CaseParams(format!("Maroni invariant {n} < 0")));
    }
    if (g + n) % 2 != 0 {
        return Err(Error::CaseParams(format!(
            "g + n = {} must be even (parity of the scroll embedding)",
            g + n
        )));
    }
    if 3 * n > g + 2 {
        return Err(Error::CaseParams(format!(
            "irreducibility needs g + 2 >= 3n, got g = {g}, n = {n}"
        )));
    }
    let ambient = SurfaceModel::hirzebruch(n)?;
    let fiber_coefficient = (g + n) / 2 + n + 1;
    let pencil = ambient.class_from_base(&[3, fiber_coefficient])?;
    let mut notes = vec!["general member is trigonal with Maroni invariant n".into()];
    notes.push("the fibration is not strongly stable".into());
    if g >= 7 {
        notes.push("the fibration is not stable".into());
    }
    Ok(CaseModel {
        case_id: CaseId::TrigonalScroll,
        g,
        n: Some(n),
        ambient,
        pencil,
        schedule: vec![1; (3 * g + 6) as usize],
        notes,
    })
}

/// The plane sextic case: `10 - g` double points plus `4g - 4` simple base
/// points, `3g + 6` blowups in total.
pub fn sextic_case(g: i64) -> Result<CaseModel> {
    if !(4..=10).contains(&g) {
        return Err(Error::CaseParams(format!(
            "plane sextic case needs 4 <= g <= 10, got {g}"
        )));
    }
    let ambient = SurfaceModel::plane();
    let pencil = ambient.class_from_base(&[6])?;
    let doubles = (10 - g) as usize;
    let simples = (4 * g - 4) as usize;
    let mut schedule = vec![2; doubles];
    schedule.extend(std::iter::repeat_n(1, simples));
    let mut notes = vec![
        "double points are assumed in weakly general position (not checkable at \
         lattice level)"
            .into(),
    ];
    if g >= 6 {
        notes.push("base points are not in general position".into());
    } else {
        notes.push("base points may be in general position".into());
    }
    if g == 6 {
        notes.push(
            "this numerical profile is realized by a known genus-6 plane sextic pencil".into(),
        );
    }
    Ok(CaseModel {
        case_id: CaseId::PlaneSextic,
        g,
        n: None,
        ambient,
        pencil,
        schedule,
        notes,
    })
}

/// All admissible trigonal scroll models at genus `g`: every `n >= 0` with
/// `g + n` even and `3n <= g + 2`.
pub fn enumerate_trigonal(g: i64) -> Result<Vec<CaseModel>> {
    if !(4..=11).contains(&g) {
        return Err(Error::CaseParams(format!(
            "trigonal enumeration needs 4 <= g <= 11, got {g}"
        )));
    }
    let mut models = Vec::new();
    let mut n = g % 2; // smallest n with g + n even
    while 3 * n <= g + 2 {
        models.push(trigonal_case(g, n)?);
        n += 2;
    }
    Ok(models)
}

impl CaseModel {
    /// The ambient with all scheduled blowups performed.
    pub fn blown_model(&self) -> SurfaceModel {
        self.ambient.clone().blown_up(self.schedule.len())
    }

    /// Proper transform of the pencil under the schedule: the fiber class of
    /// the resolved fibration.
    pub fn resolved_pencil(&self) -> Result<DivisorClass> {
        self.blown_model()
            .proper_transform(&self.pencil, &self.schedule)
    }

    pub fn total_blowups(&self) -> i64 {
        self.schedule.len() as i64
    }

    pub fn double_point_count(&self) -> i64 {
        self.schedule.iter().filter(|&&m| m == 2).count() as i64
    }

    pub fn simple_point_count(&self) -> i64 {
        self.schedule.iter().filter(|&&m| m == 1).count() as i64
    }

    /// `K^2` of the fully blown-up model.
    pub fn blown_k2(&self) -> Result<i64> {
        self.blown_model().canonical_square()
    }

    /// Genus of the resolved fiber, by adjunction on the blown-up model.
    pub fn resolved_genus(&self) -> Result<i64> {
        let blown = self.blown_model();
        blown.arithmetic_genus(&self.resolved_pencil()?)
    }

    /// The `K^2` value the classification predicts for this case.
    pub fn expected_k2(&self) -> i64 {
        match self.case_id {
            CaseId::TrigonalScroll => 2 - 3 * self.g,
            CaseId::PlaneQuintic => -16,
            CaseId::QuadricCone => -10,
            CaseId::PlaneSextic => 3 - 3 * self.g,
            CaseId::SmoothQuadric => -24,
        }
    }

    /// Checks every numerical claim of the case by exact lattice arithmetic.
    pub fn verify(&self) -> Result<CaseVerification> {
        let blown = self.blown_model();
        let resolved = self.resolved_pencil()?;
        let mut checks = Vec::new();

        checks.push(CaseCheck::values(
            "resolved fiber genus",
            self.g,
            blown.arithmetic_genus(&resolved)?,
        ));
        checks.push(CaseCheck::values(
            "resolved fiber self-intersection",
            0,
            blown.pairing(&resolved, &resolved)?,
        ));
        checks.push(CaseCheck::values(
            "K^2 after all blowups",
            self.expected_k2(),
            blown.canonical_square()?,
        ));

        // After the double points are absorbed, the remaining
        // self-intersection is exactly the number of simple base points.
        let doubles: Vec<i64> = self
            .schedule
            .iter()
            .map(|&m| if m >= 2 { m } else { 0 })
            .collect();
        let after_doubles = blown.proper_transform(&self.pencil, &doubles)?;
        checks.push(CaseCheck::values(
            "simple base points left after double points",
            self.simple_point_count(),
            blown.pairing(&after_doubles, &after_doubles)?,
        ));

        match self.case_id {
            CaseId::TrigonalScroll => {
                let fiber = self.ambient.class_from_base(&[0, 1])?;
                let section = self.ambient.class_from_base(&[1, 0])?;
                checks.push(CaseCheck::values(
                    "trigonality: pencil . ruling fiber",
                    3,
                    self.ambient.pairing(&self.pencil, &fiber)?,
                ));
                let against_section = self.ambient.pairing(&self.pencil, &section)?;
                checks.push(CaseCheck {
                    name: "irreducibility: pencil . section >= 0".into(),
                    expected: ">= 0".into(),
                    actual: against_section.to_string(),
                    pass: against_section >= 0,
                });
                checks.push(CaseCheck::values(
                    "base points",
                    3 * self.g + 6,
                    self.total_blowups(),
                ));
            }
            CaseId::QuadricCone => {
                let section = self.ambient.class_from_base(&[1, 0])?;
                checks.push(CaseCheck::values(
                    "vertex avoidance: pencil . section",
                    0,
                    self.ambient.pairing(&self.pencil, &section)?,
                ));
                checks.push(CaseCheck::values("base points", 18, self.total_blowups()));
            }
            CaseId::PlaneQuintic => {
                checks.push(CaseCheck::values("base points", 25, self.total_blowups()));
            }
            CaseId::PlaneSextic => {
                checks.push(anticanonical_membership(&self.ambient, &self.pencil)?);
                checks.push(CaseCheck::values(
                    "double points",
                    10 - self.g,
                    self.double_point_count(),
                ));
                checks.push(CaseCheck::values(
                    "total blowups",
                    3 * self.g + 6,
                    self.total_blowups(),
                ));
            }
            CaseId::SmoothQuadric => {
                checks.push(anticanonical_membership(&self.ambient, &self.pencil)?);
                checks.push(CaseCheck::values("base points", 32, self.total_blowups()));
            }
        }

        let pass = checks.iter().all(|c| c.pass);
        Ok(CaseVerification { checks, pass })
    }

    /// The case together with its verification, for serialization.
    pub fn bundle(&self) -> Result<CaseBundle> {
        let verification = self.verify()?;
        Ok(CaseBundle {
            case_id: self.case_id,
            g: self.g,
            n: self.n,
            ambient: self.ambient.clone(),
            pencil_coefficients: self.pencil.coefficients().to_vec(),
            schedule: self.schedule.clone(),
            notes: self.notes.clone(),
            certificates: verification.checks,
            pass: verification.pass,
        })
    }
}

/// Checks `pencil = -2 K_ambient` (the del Pezzo cases live in `|-2K|`).
fn anticanonical_membership(ambient: &SurfaceModel, pencil: &DivisorClass) -> Result<CaseCheck> {
    let twice_anti = &(-&ambient.canonical_class()) * 2;
    Ok(CaseCheck {
        name: "pencil lies in |-2K|".into(),
        expected: ambient.format_class(&twice_anti),
        actual: ambient.format_class(pencil),
        pass: *pencil == twice_anti,
    })
}

/// Descriptor of an ambient surface consistent with the adjoint degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum AmbientDescriptor {
    /// Rational normal scroll `F_n` of degree `g - 2`.
    Scroll { n: i64, degree: i64 },
    /// The Veronese surface (degree 4, only at `g = 6`).
    Veronese { degree: i64 },
    /// Cone over a rational normal curve; the vertex forces `g = 4`.
    Cone { degree: i64 },
    /// `P^2` blown up in `10 - g` points (del Pezzo of degree `g - 1`).
    DelPezzoPlane { blown_points: i64, degree: i64 },
    /// Degree-8 quadric image, resolved by `F_0` or `F_2` (only at `g = 9`).
    QuadricImage {
        resolution: BaseSurface,
        degree: i64,
    },
}

/// Candidate ambient surfaces for a `(g, K^2)` pair in the two families,
/// filtered by the exclusions that pin them down (cone only at `g = 4`,
/// Veronese only at `g = 6`, quadric images only at `g = 9`). Every
/// descriptor's degree equals `(K+F)^2`.
pub fn minimal_degree_target(g: i64, k2: i64) -> Result<Vec<AmbientDescriptor>> {
    let family = crate::enumerator::K2Family::of(g, k2).ok_or_else(|| {
        Error::Domain(format!(
            "minimal-degree targets need K^2 in the 2-3g / 3-3g families, got {k2} at g = {g}"
        ))
    })?;
    if g < 4 {
        return Err(Error::Domain(format!(
            "classification starts at g = 4, got {g}"
        )));
    }
    let degree = adjoint_square(g, k2)?;
    let mut out = Vec::new();
    match family {
        crate::enumerator::K2Family::TwoMinus3g => {
            let mut n = g % 2;
            while 3 * n <= g + 2 {
                out.push(AmbientDescriptor::Scroll { n, degree });
                n += 2;
            }
            if g == 6 {
                out.push(AmbientDescriptor::Veronese { degree });
            }
            if g == 4 {
                out.push(AmbientDescriptor::Cone { degree });
            }
        }
        crate::enumerator::K2Family::ThreeMinus3g => {
            if g > 10 {
                return Err(Error::Domain(format!(
                    "the 3-3g family stops at g = 10, got {g}"
                )));
            }
            out.push(AmbientDescriptor::DelPezzoPlane {
                blown_points: 10 - g,
                degree,
            });
            if g == 9 {
                out.push(AmbientDescriptor::QuadricImage {
                    resolution: BaseSurface::Hirzebruch(0),
                    degree,
                });
                out.push(AmbientDescriptor::QuadricImage {
                    resolution: BaseSurface::Hirzebruch(2),
                    degree,
                });
            }
        }
    }
    Ok(out)
}
