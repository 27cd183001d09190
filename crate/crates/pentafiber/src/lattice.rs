//! Integer intersection theory on minimal rational surfaces and their blowups.
//!
//! A [`SurfaceModel`] is the projective plane or a Hirzebruch surface `F_n`
//! together with an ordered list of blowup records. Its Picard lattice has the
//! standard basis: the line class `L` on the plane, the negative section
//! `D` (self-intersection `-n`) and ruling fiber `G` on `F_n`, plus one
//! exceptional class `E_i` per blowup. A [`DivisorClass`] is an integer
//! coefficient vector over that basis.
//!
//! Blowup records are pure bookkeeping. They may be flagged as infinitely
//! near a prior record, but no computation here depends on point positions;
//! every operation is lattice-level.
//!
//! All arithmetic is checked 64-bit: overflow is a hard error, never a wrap.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// The minimal rational surface underlying a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseSurface {
    /// The projective plane; Picard basis `L`.
    ProjectivePlane,
    /// The Hirzebruch surface `F_n`; Picard basis `D` (section, `D^2 = -n`)
    /// and `G` (ruling fiber, `G^2 = 0`, `D.G = 1`).
    Hirzebruch(i64),
}

/// One blowup. `near` optionally records which earlier blowup this point is
/// infinitely near to; the flag never enters any intersection number.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlowupRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub near: Option<usize>,
}

/// A minimal rational surface plus an ordered list of blowups; owns the
/// intersection form and the canonical class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceModel {
    base: BaseSurface,
    blowups: Vec<BlowupRecord>,
}

/// Integer coefficient vector over the Picard basis of a [`SurfaceModel`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    coefficients: Vec<i64>,
}

fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn checked_sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

impl SurfaceModel {
    /// The projective plane with no blowups.
    pub fn plane() -> Self {
        SurfaceModel {
            base: BaseSurface::ProjectivePlane,
            blowups: Vec::new(),
        }
    }

    /// The Hirzebruch surface `F_n`, `n >= 0`, with no blowups.
    pub fn hirzebruch(n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::InvalidSurface(format!(
                "Hirzebruch degree must be nonnegative, got {n}"
            )));
        }
        Ok(SurfaceModel {
            base: BaseSurface::Hirzebruch(n),
            blowups: Vec::new(),
        })
    }

    /// Adds `count` blowups at distinct (abstract) points.
    pub fn blown_up(mut self, count: usize) -> Self {
        self.blowups
            .extend(std::iter::repeat_n(BlowupRecord::default(), count));
        self
    }

    /// Adds one blowup infinitely near the `prior`-th record.
    pub fn blown_up_near(mut self, prior: usize) -> Result<Self> {
        if prior >= self.blowups.len() {
            return Err(Error::InvalidSurface(format!(
                "infinitely-near reference {prior} out of range ({} blowups)",
                self.blowups.len()
            )));
        }
        self.blowups.push(BlowupRecord { near: Some(prior) });
        Ok(self)
    }

    pub fn base(&self) -> BaseSurface {
        self.base
    }

    pub fn blowups(&self) -> &[BlowupRecord] {
        &self.blowups
    }

    pub fn blowup_count(&self) -> usize {
        self.blowups.len()
    }

    /// Rank of the minimal surface's lattice: 1 for the plane, 2 for `F_n`.
    pub fn base_rank(&self) -> usize {
        match self.base {
            BaseSurface::ProjectivePlane => 1,
            BaseSurface::Hirzebruch(_) => 2,
        }
    }

    /// Picard rank: base rank plus one per blowup.
    pub fn picard_rank(&self) -> usize {
        self.base_rank() + self.blowups.len()
    }

    /// Builds a divisor class from explicit coefficients over this surface's
    /// basis. The length must equal the Picard rank.
    pub fn class(&self, coefficients: Vec<i64>) -> Result<DivisorClass> {
        if coefficients.len() != self.picard_rank() {
            return Err(Error::RankMismatch {
                expected: self.picard_rank(),
                got: coefficients.len(),
            });
        }
        Ok(DivisorClass { coefficients })
    }

    /// A class on the minimal surface (all exceptional coefficients zero),
    /// given only the base coefficients.
    pub fn class_from_base(&self, base_coefficients: &[i64]) -> Result<DivisorClass> {
        if base_coefficients.len() != self.base_rank() {
            return Err(Error::RankMismatch {
                expected: self.base_rank(),
                got: base_coefficients.len(),
            });
        }
        let mut coefficients = base_coefficients.to_vec();
        coefficients.resize(self.picard_rank(), 0);
        Ok(DivisorClass { coefficients })
    }

    fn check_rank(&self, d: &DivisorClass) -> Result<()> {
        if d.coefficients.len() != self.picard_rank() {
            return Err(Error::RankMismatch {
                expected: self.picard_rank(),
                got: d.coefficients.len(),
            });
        }
        Ok(())
    }

    /// The symmetric bilinear intersection pairing.
    ///
    /// Pairing rules: `L^2 = 1` on the plane; `D^2 = -n`, `D.G = 1`,
    /// `G^2 = 0` on `F_n`; `E_i^2 = -1`, `E_i.E_j = 0` for `i != j`, and
    /// exceptional classes are orthogonal to the base classes.
    pub fn pairing(&self, a: &DivisorClass, b: &DivisorClass) -> Result<i64> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        let mut total = match self.base {
            BaseSurface::ProjectivePlane => checked_mul(a.coefficients[0], b.coefficients[0])?,
            BaseSurface::Hirzebruch(n) => {
                let dd = checked_mul(checked_mul(a.coefficients[0], b.coefficients[0])?, -n)?;
                let dg = checked_mul(a.coefficients[0], b.coefficients[1])?;
                let gd = checked_mul(a.coefficients[1], b.coefficients[0])?;
                checked_add(checked_add(dd, dg)?, gd)?
            }
        };
        for i in self.base_rank()..self.picard_rank() {
            total = checked_sub(total, checked_mul(a.coefficients[i], b.coefficients[i])?)?;
        }
        Ok(total)
    }

    /// Canonical class: `-3L` on the plane, `-2D - (n+2)G` on `F_n`, plus
    /// `+E_i` for every blowup.
    pub fn canonical_class(&self) -> DivisorClass {
        let mut coefficients = match self.base {
            BaseSurface::ProjectivePlane => vec![-3],
            BaseSurface::Hirzebruch(n) => vec![-2, -(n + 2)],
        };
        coefficients.resize(self.picard_rank(), 1);
        DivisorClass { coefficients }
    }

    /// `K^2` computed through the pairing; equals `9 - b` on blown-up planes
    /// and `8 - b` on blown-up Hirzebruch surfaces.
    pub fn canonical_square(&self) -> Result<i64> {
        let k = self.canonical_class();
        self.pairing(&k, &k)
    }

    /// Arithmetic genus by adjunction: `p_a(D) = 1 + (D^2 + K.D)/2`.
    pub fn arithmetic_genus(&self, d: &DivisorClass) -> Result<i64> {
        let d2 = self.pairing(d, d)?;
        let kd = self.pairing(&self.canonical_class(), d)?;
        let sum = checked_add(d2, kd)?;
        if sum.rem_euclid(2) != 0 {
            return Err(Error::NonRepresentableClass(sum));
        }
        checked_add(1, sum / 2)
    }

    /// Proper transform of a class from the minimal surface: pullback minus
    /// `m_i E_i`. `minimal` carries only base coefficients; `multiplicities`
    /// must list one `m_i >= 0` per blowup.
    ///
    /// The result has self-intersection `D^2 - sum m_i^2` and arithmetic
    /// genus `p_a(D) - sum m_i (m_i - 1) / 2`.
    pub fn proper_transform(
        &self,
        minimal: &DivisorClass,
        multiplicities: &[i64],
    ) -> Result<DivisorClass> {
        if minimal.coefficients.len() != self.base_rank() {
            return Err(Error::RankMismatch {
                expected: self.base_rank(),
                got: minimal.coefficients.len(),
            });
        }
        if multiplicities.len() != self.blowups.len() {
            return Err(Error::ScheduleMismatch {
                expected: self.blowups.len(),
                got: multiplicities.len(),
            });
        }
        if let Some(&m) = multiplicities.iter().find(|&&m| m < 0) {
            return Err(Error::NegativeMultiplicity(m));
        }
        let mut coefficients = minimal.coefficients.clone();
        coefficients.extend(multiplicities.iter().map(|m| -m));
        Ok(DivisorClass { coefficients })
    }

    /// Names of the basis classes, for rendering.
    pub fn basis_labels(&self) -> Vec<String> {
        let mut labels = match self.base {
            BaseSurface::ProjectivePlane => vec!["L".to_string()],
            BaseSurface::Hirzebruch(_) => vec!["D".to_string(), "G".to_string()],
        };
        labels.extend((1..=self.blowups.len()).map(|i| format!("E{i}")));
        labels
    }

    /// Human-readable form of a class over this surface, e.g. `3D+5G-E1`.
    pub fn format_class(&self, d: &DivisorClass) -> String {
        let labels = self.basis_labels();
        if labels.len() != d.coefficients.len() {
            return format!("{:?}", d.coefficients);
        }
        let mut out = String::new();
        for (c, label) in d.coefficients.iter().zip(&labels) {
            match *c {
                0 => continue,
                1 => {
                    if !out.is_empty() {
                        out.push('+');
                    }
                    out.push_str(label);
                }
                -1 => {
                    out.push('-');
                    out.push_str(label);
                }
                c if c > 0 => {
                    if !out.is_empty() {
                        out.push('+');
                    }
                    out.push_str(&format!("{c}{label}"));
                }
                c => out.push_str(&format!("{c}{label}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl DivisorClass {
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// The zero class of a given rank.
    pub fn zero(rank: usize) -> Self {
        DivisorClass {
            coefficients: vec![0; rank],
        }
    }

    fn zip_with(&self, other: &DivisorClass, f: impl Fn(i64, i64) -> Option<i64>) -> DivisorClass {
        assert_eq!(
            self.coefficients.len(),
            other.coefficients.len(),
            "divisor classes live on surfaces of different rank"
        );
        DivisorClass {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(&a, &b)| f(a, b).expect("integer overflow in divisor arithmetic"))
                .collect(),
        }
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, i64::checked_add)
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.zip_with(rhs, i64::checked_sub)
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass {
            coefficients: self
                .coefficients
                .iter()
                .map(|&a| a.checked_neg().expect("integer overflow"))
                .collect(),
        }
    }
}

impl Mul<i64> for &DivisorClass {
    type Output = DivisorClass;
    fn mul(self, k: i64) -> DivisorClass {
        DivisorClass {
            coefficients: self
                .coefficients
                .iter()
                .map(|&a| {
                    a.checked_mul(k)
                        .expect("integer overflow in divisor scaling")
                })
                .collect(),
        }
    }
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSurface::ProjectivePlane => write!(f, "P^2"),
            BaseSurface::Hirzebruch(n) => write!(f, "F_{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn section_square_on_f3() {
        let f3 = SurfaceModel::hirzebruch(3).unwrap();
        let section = f3.class(vec![1, 0]).unwrap();
        assert_eq!(f3.pairing(&section, &section).unwrap(), -3);
    }

    #[test]
    fn ruling_fiber_squares_to_zero() {
        for n in 0..=6 {
            let fn_ = SurfaceModel::hirzebruch(n).unwrap();
            let fiber = fn_.class(vec![0, 1]).unwrap();
            assert_eq!(fn_.pairing(&fiber, &fiber).unwrap(), 0);
        }
    }

    #[test]
    fn blown_plane_cubic_minus_exceptional() {
        // (3L - E1)^2 expands bilinearly to 9 - 1.
        let s = SurfaceModel::plane().blown_up(1);
        let d = s.class(vec![3, -1]).unwrap();
        assert_eq!(s.pairing(&d, &d).unwrap(), 8);
    }

    #[test]
    fn pairing_rejects_rank_mismatch() {
        let s = SurfaceModel::plane().blown_up(1);
        let wrong = DivisorClass::zero(5);
        let ok = s.class(vec![1, 0]).unwrap();
        assert!(matches!(
            s.pairing(&wrong, &ok),
            Err(Error::RankMismatch {
                expected: 2,
                got: 5
            })
        ));
    }

    #[test]
    fn canonical_class_of_f2() {
        let f2 = SurfaceModel::hirzebruch(2).unwrap();
        assert_eq!(f2.canonical_class().coefficients(), &[-2, -4]);
    }

    #[test]
    fn canonical_class_of_plane() {
        assert_eq!(
            SurfaceModel::plane().canonical_class().coefficients(),
            &[-3]
        );
    }

    #[test]
    fn canonical_square_of_heavily_blown_plane() {
        // 25 blowups of the plane: K^2 = 9 - 25 = -16.
        let s = SurfaceModel::plane().blown_up(25);
        assert_eq!(s.canonical_square().unwrap(), -16);
    }

    #[test]
    fn plane_curve_genus_closed_form() {
        // Independent oracle: a degree-d plane curve has genus (d-1)(d-2)/2.
        let plane = SurfaceModel::plane();
        for d in 1..=20 {
            let class = plane.class(vec![d]).unwrap();
            assert_eq!(
                plane.arithmetic_genus(&class).unwrap(),
                (d - 1) * (d - 2) / 2,
                "degree {d}"
            );
        }
    }

    #[test]
    fn sextic_genus_is_ten() {
        let plane = SurfaceModel::plane();
        let sextic = plane.class(vec![6]).unwrap();
        assert_eq!(plane.arithmetic_genus(&sextic).unwrap(), 10);
    }

    #[test]
    fn cubic_section_genus_on_quadric_cone_resolution() {
        let f2 = SurfaceModel::hirzebruch(2).unwrap();
        let d = f2.class(vec![3, 6]).unwrap();
        assert_eq!(f2.arithmetic_genus(&d).unwrap(), 4);
    }

    #[test]
    fn quartic_section_genus_on_smooth_quadric() {
        let f0 = SurfaceModel::hirzebruch(0).unwrap();
        let d = f0.class(vec![4, 4]).unwrap();
        assert_eq!(f0.arithmetic_genus(&d).unwrap(), 9);
    }

    #[test]
    fn trigonal_class_genus_closed_form() {
        // p_a(3D + (k+n+2)G) on F_n equals 2 + 2k - n; expanded by hand once.
        for n in 0..=10 {
            let fn_ = SurfaceModel::hirzebruch(n).unwrap();
            for k in n..=20 {
                let d = fn_.class(vec![3, k + n + 2]).unwrap();
                assert_eq!(
                    fn_.arithmetic_genus(&d).unwrap(),
                    2 + 2 * k - n,
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn proper_transform_of_sextic_with_four_double_points() {
        let s = SurfaceModel::plane().blown_up(4);
        let sextic = DivisorClass {
            coefficients: vec![6],
        };
        let t = s.proper_transform(&sextic, &[2, 2, 2, 2]).unwrap();
        assert_eq!(s.pairing(&t, &t).unwrap(), 20);
    }

    #[test]
    fn proper_transform_with_zero_multiplicities_is_pullback() {
        let s = SurfaceModel::plane().blown_up(3);
        let quintic = DivisorClass {
            coefficients: vec![5],
        };
        let t = s.proper_transform(&quintic, &[0, 0, 0]).unwrap();
        assert_eq!(s.arithmetic_genus(&t).unwrap(), 6);
        assert_eq!(s.pairing(&t, &t).unwrap(), 25);
    }

    #[test]
    fn resolved_sextic_pencil_class() {
        // One double point and 32 simple ones: self-intersection drops to 0,
        // genus to 9.
        let s = SurfaceModel::plane().blown_up(33);
        let sextic = DivisorClass {
            coefficients: vec![6],
        };
        let mut mults = vec![2];
        mults.extend(std::iter::repeat_n(1, 32));
        let t = s.proper_transform(&sextic, &mults).unwrap();
        assert_eq!(s.pairing(&t, &t).unwrap(), 0);
        assert_eq!(s.arithmetic_genus(&t).unwrap(), 9);
    }

    #[test]
    fn proper_transform_rejects_bad_schedules() {
        let s = SurfaceModel::plane().blown_up(2);
        let d = DivisorClass {
            coefficients: vec![6],
        };
        assert!(matches!(
            s.proper_transform(&d, &[2]),
            Err(Error::ScheduleMismatch {
                expected: 2,
                got: 1
            })
        ));
        assert!(matches!(
            s.proper_transform(&d, &[2, -1]),
            Err(Error::NegativeMultiplicity(-1))
        ));
    }

    #[test]
    fn hirzebruch_rejects_negative_degree() {
        assert!(SurfaceModel::hirzebruch(-1).is_err());
    }

    #[test]
    fn infinitely_near_flag_is_metadata_only() {
        let plain = SurfaceModel::plane().blown_up(3);
        let near = SurfaceModel::plane().blown_up(2).blown_up_near(0).unwrap();
        let d = near.class(vec![6, -2, -1, -1]).unwrap();
        let d_plain = plain.class(vec![6, -2, -1, -1]).unwrap();
        assert_eq!(
            near.pairing(&d, &d).unwrap(),
            plain.pairing(&d_plain, &d_plain).unwrap()
        );
        assert_eq!(near.canonical_square().unwrap(), 9 - 3);
    }

    #[test]
    fn format_class_reads_naturally() {
        let f1 = SurfaceModel::hirzebruch(1).unwrap().blown_up(1);
        let d = f1.class(vec![3, 5, -1]).unwrap();
        assert_eq!(f1.format_class(&d), "3D+5G-E1");
        assert_eq!(f1.format_class(&DivisorClass::zero(3)), "0");
    }

    fn surface_strategy() -> impl Strategy<Value = SurfaceModel> {
        (0..=2i64, 0..=6i64, 0..=8usize).prop_map(|(kind, n, blowups)| {
            let base = if kind == 0 {
                SurfaceModel::plane()
            } else {
                SurfaceModel::hirzebruch(n).unwrap()
            };
            base.blown_up(blowups)
        })
    }

    fn class_for(rank: usize) -> impl Strategy<Value = DivisorClass> {
        proptest::collection::vec(-9i64..=9, rank)
            .prop_map(|coefficients| DivisorClass { coefficients })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn pairing_is_bilinear_and_symmetric(
            (s, a, b, c, x, y) in surface_strategy().prop_flat_map(|s| {
                let rank = s.picard_rank();
                (
                    Just(s),
                    class_for(rank),
                    class_for(rank),
                    class_for(rank),
                    -5i64..=5,
                    -5i64..=5,
                )
            })
        ) {
            let left = &(&(&a * x) + &(&b * y));
            let lhs = s.pairing(left, &c).unwrap();
            let rhs = x * s.pairing(&a, &c).unwrap() + y * s.pairing(&b, &c).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(s.pairing(&a, &b).unwrap(), s.pairing(&b, &a).unwrap());
        }

        #[test]
        fn canonical_square_matches_blowup_count(s in surface_strategy()) {
            let b = s.blowup_count() as i64;
            let expected = match s.base() {
                BaseSurface::ProjectivePlane => 9 - b,
                BaseSurface::Hirzebruch(_) => 8 - b,
            };
            prop_assert_eq!(s.canonical_square().unwrap(), expected);
        }

        #[test]
        fn genus_drop_matches_schedule(
            (s, d, mults) in (0..=6i64, 1..=8usize).prop_flat_map(|(deg_seed, blowups)| {
                (
                    Just(SurfaceModel::plane().blown_up(blowups)),
                    Just(DivisorClass { coefficients: vec![deg_seed + 3] }),
                    proptest::collection::vec(0i64..=3, blowups),
                )
            })
        ) {
            let t = s.proper_transform(&d, &mults).unwrap();
            let plain = s.proper_transform(&d, &vec![0; mults.len()]).unwrap();
            let drop: i64 = mults.iter().map(|m| m * (m - 1) / 2).sum();
            prop_assert_eq!(
                s.arithmetic_genus(&plain).unwrap() - s.arithmetic_genus(&t).unwrap(),
                drop
            );
            let square_drop: i64 = mults.iter().map(|m| m * m).sum();
            prop_assert_eq!(
                s.pairing(&plain, &plain).unwrap() - s.pairing(&t, &t).unwrap(),
                square_drop
            );
        }
    }
}
