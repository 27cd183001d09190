//! Numeric profiles of semistable fibrations and the inequality toolkit.
//!
//! A [`FibrationConfig`] is the numerical shadow of a semistable fibration:
//! fiber genus `g`, base genus, singular fiber count `s`, `K^2`, and the
//! multiset of lengths of the vertical `(-2)`-chains. From it we derive the
//! node count `e_f`, the weighted node count `r_f = sum 1/(1+mu_q)`, and
//! evaluate the Miyaoka-Vojta-Tan (MVT) canonical class inequality
//!
//! ```text
//! e^2 (K^2 - (2g-2)(6g_B - 6 + s - s/e)) <= 3 r_f <= 3 e_f      (e >= 2)
//! ```
//!
//! together with its chain-weight companion `r_f <= e_f - l' - r/2`.
//!
//! Every check is returned as a [`BoundCertificate`]: the substituted values
//! (exact rationals), both sides, the slack `rhs - lhs`, and the verdict.
//! Certificates carry enough of their substitution to be recomputed from
//! scratch; see [`BoundCertificate::revalidate`].

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::rat::{frac, pq_map, pq_string, rat, Rat};
use crate::{Error, Result};

/// Numeric profile of a semistable fibration.
///
/// For a rational surface (no Euler override) the Euler number is
/// `e(X) = 12 - K^2`, so with base `P^1` the fibers carry
/// `e_f = 4(g-1) + 12 - K^2` nodes in total.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FibrationConfig {
    g: i64,
    base_genus: i64,
    singular_fibers: i64,
    k2: i64,
    /// Lengths of the vertical `(-2)`-chains, sorted descending.
    chains: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    euler_override: Option<i64>,
}

impl FibrationConfig {
    /// Builds and validates a profile. Requirements: `g >= 2`, `g_B >= 0`,
    /// `s >= 0`, every chain length positive, and the chains must fit inside
    /// the node budget: `sum (1 + mu_i) <= e_f`. Oversized chains are
    /// rejected, not clamped.
    pub fn new(
        g: i64,
        base_genus: i64,
        singular_fibers: i64,
        k2: i64,
        chains: Vec<i64>,
    ) -> Result<Self> {
        Self::with_euler(g, base_genus, singular_fibers, k2, chains, None)
    }

    /// As [`FibrationConfig::new`], with an explicit Euler number `e(X)` for
    /// non-rational experiments.
    pub fn with_euler(
        g: i64,
        base_genus: i64,
        singular_fibers: i64,
        k2: i64,
        mut chains: Vec<i64>,
        euler_override: Option<i64>,
    ) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidConfig(format!("fiber genus {g} < 2")));
        }
        if base_genus < 0 {
            return Err(Error::InvalidConfig(format!("base genus {base_genus} < 0")));
        }
        if singular_fibers < 0 {
            return Err(Error::InvalidConfig(format!(
                "singular fiber count {singular_fibers} < 0"
            )));
        }
        if let Some(&bad) = chains.iter().find(|&&m| m < 1) {
            return Err(Error::InvalidConfig(format!("chain length {bad} < 1")));
        }
        chains.sort_unstable_by(|a, b| b.cmp(a));
        let config = FibrationConfig {
            g,
            base_genus,
            singular_fibers,
            k2,
            chains,
            euler_override,
        };
        let required: i64 = config.chains.iter().map(|m| m + 1).sum();
        let available = config.fiber_nodes();
        if required > available {
            return Err(Error::NodeBudget {
                required,
                available,
            });
        }
        Ok(config)
    }

    /// Rational surface over `P^1` with five singular fibers.
    pub fn rational_five(g: i64, k2: i64, chains: Vec<i64>) -> Result<Self> {
        Self::new(g, 0, 5, k2, chains)
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn base_genus(&self) -> i64 {
        self.base_genus
    }

    pub fn singular_fibers(&self) -> i64 {
        self.singular_fibers
    }

    pub fn k2(&self) -> i64 {
        self.k2
    }

    pub fn chains(&self) -> &[i64] {
        &self.chains
    }

    /// Topological Euler number `e(X)`; defaults to `12 - K^2`.
    pub fn euler_characteristic(&self) -> i64 {
        self.euler_override.unwrap_or(12 - self.k2)
    }

    /// Total node count in the fibers: `e_f = e(X) - 4(g-1)(g_B-1)`.
    pub fn fiber_nodes(&self) -> i64 {
        self.euler_characteristic() - 4 * (self.g - 1) * (self.base_genus - 1)
    }

    /// Total length `l'` of the vertical `(-2)`-chains.
    pub fn total_chain_length(&self) -> i64 {
        self.chains.iter().sum()
    }

    /// Number `r` of chains (double points of the relative canonical model).
    pub fn chain_count(&self) -> i64 {
        self.chains.len() as i64
    }

    /// Weighted node count `r_f = e_f - sum(1+mu) + sum 1/(1+mu)`; equals
    /// `e_f` when there are no chains.
    pub fn weighted_nodes(&self) -> Rat {
        let mut total = rat(self.fiber_nodes());
        for &mu in &self.chains {
            total -= rat(1 + mu);
            total += frac(1, 1 + mu);
        }
        total
    }

    /// The defect `e_f - r_f`, a nonnegative rational.
    pub fn node_defect(&self) -> Rat {
        rat(self.fiber_nodes()) - self.weighted_nodes()
    }

    fn base_substitution(&self) -> BTreeMap<String, Rat> {
        let mut sub = BTreeMap::new();
        sub.insert("g".into(), rat(self.g));
        sub.insert("gB".into(), rat(self.base_genus));
        sub.insert("s".into(), rat(self.singular_fibers));
        sub.insert("k2".into(), rat(self.k2));
        sub.insert("ef".into(), rat(self.fiber_nodes()));
        sub.insert("rf".into(), self.weighted_nodes());
        sub
    }

    /// Certifies the chain-weight bound `r_f <= e_f - l' - r/2`.
    pub fn chain_weight_check(&self) -> BoundCertificate {
        let mut sub = self.base_substitution();
        sub.insert("lp".into(), rat(self.total_chain_length()));
        sub.insert("r".into(), rat(self.chain_count()));
        let lhs = self.weighted_nodes();
        let rhs = rat(self.fiber_nodes())
            - rat(self.total_chain_length())
            - rat(self.chain_count()) / rat(2);
        BoundCertificate::new("chain-weight", sub, lhs, rhs)
    }

    /// Certifies the MVT inequality at weight `e >= 2`:
    /// `e^2 (K^2 - (2g-2)(6g_B - 6 + s - s/e)) <= 3 r_f`.
    ///
    /// The companion upper bound `3 r_f <= 3 e_f` holds for every valid
    /// profile (each chain removes more weight than it returns) and is
    /// re-checked during revalidation.
    pub fn mvt_check(&self, e: i64) -> Result<BoundCertificate> {
        if e < 2 {
            return Err(Error::Domain(format!("MVT weight e = {e} must be >= 2")));
        }
        let mut sub = self.base_substitution();
        sub.insert("e".into(), rat(e));
        let (lhs, rhs) = mvt_sides(&sub)?;
        Ok(BoundCertificate::new(format!("mvt[e={e}]"), sub, lhs, rhs))
    }

    /// Runs [`FibrationConfig::mvt_check`] for every `e` in `2..=e_max` and
    /// reports the binding weight (smallest slack, ties to the smaller `e`).
    pub fn mvt_scan(&self, e_max: i64) -> Result<MvtScan> {
        if e_max < 2 {
            return Err(Error::Domain(format!("e_max = {e_max} must be >= 2")));
        }
        let mut certificates = Vec::with_capacity((e_max - 1) as usize);
        let mut binding_e = 2;
        let mut best_slack: Option<Rat> = None;
        let mut first_failure = None;
        for e in 2..=e_max {
            let cert = self.mvt_check(e)?;
            if !cert.verdict && first_failure.is_none() {
                first_failure = Some(e);
            }
            if best_slack.as_ref().is_none_or(|best| cert.slack < *best) {
                best_slack = Some(cert.slack.clone());
                binding_e = e;
            }
            certificates.push(cert);
        }
        Ok(MvtScan {
            binding_e,
            first_failure,
            all_hold: first_failure.is_none(),
            certificates,
        })
    }

    /// Slack of the reduced form of the MVT inequality at `e = 5` for a
    /// rational surface with five singular fibers:
    /// `7 K^2 + 22(g-1) <= 9 - 3a/4` where `a = e_f - r_f`.
    ///
    /// Returns `9 - 3a/4 - 7 K^2 - 22(g-1)`; nonnegative exactly when the
    /// bound holds. Requires `g_B = 0` and `s = 5`.
    pub fn mvt5_genus_slack(&self) -> Result<Rat> {
        Ok(self.mvt5_genus_certificate()?.slack)
    }

    /// Certificate form of [`FibrationConfig::mvt5_genus_slack`].
    pub fn mvt5_genus_certificate(&self) -> Result<BoundCertificate> {
        if self.base_genus != 0 || self.singular_fibers != 5 {
            return Err(Error::Domain(format!(
                "reduced MVT form needs g_B = 0 and s = 5, got g_B = {}, s = {}",
                self.base_genus, self.singular_fibers
            )));
        }
        let mut sub = self.base_substitution();
        sub.insert("alpha".into(), self.node_defect());
        let (lhs, rhs) = mvt5_reduced_sides(&sub)?;
        Ok(BoundCertificate::new("mvt5-reduced", sub, lhs, rhs))
    }
}

/// Result of scanning the MVT family over `2..=e_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MvtScan {
    /// Weight with the smallest slack.
    pub binding_e: i64,
    /// First weight at which the inequality fails, if any.
    pub first_failure: Option<i64>,
    pub all_hold: bool,
    pub certificates: Vec<BoundCertificate>,
}

/// `(K_X + F)^2 = K^2 + 4g - 4` for a genus-`g` fibration (`F^2 = 0`,
/// `K.F = 2g - 2`). Requires `g >= 2`.
pub fn adjoint_square(g: i64, k2: i64) -> Result<i64> {
    if g < 2 {
        return Err(Error::Domain(format!(
            "adjoint square needs g >= 2, got {g}"
        )));
    }
    Ok(k2 + 4 * g - 4)
}

/// `h^0(2K_X + F) = K^2 + 3g - 2`, valid when `(K_X + F)^2 > 0` (the
/// vanishing hypothesis behind the formula). Errors outside that range.
pub fn h0_double_adjoint(g: i64, k2: i64) -> Result<i64> {
    if adjoint_square(g, k2)? <= 0 {
        return Err(Error::Domain(format!(
            "h^0(2K+F) formula needs (K+F)^2 > 0, got {}",
            adjoint_square(g, k2)?
        )));
    }
    Ok(k2 + 3 * g - 2)
}

/// A machine-checkable record of one inequality evaluation `lhs <= rhs`.
///
/// All fields are exact rationals; `slack = rhs - lhs` and
/// `verdict <=> slack >= 0`. The substitution map holds every value needed
/// to recompute both sides from the certificate's named formula.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub name: String,
    #[serde(with = "pq_map")]
    pub substitution: BTreeMap<String, Rat>,
    #[serde(with = "pq_string")]
    pub lhs: Rat,
    #[serde(with = "pq_string")]
    pub rhs: Rat,
    #[serde(with = "pq_string")]
    pub slack: Rat,
    pub verdict: bool,
}

impl BoundCertificate {
    pub fn new(
        name: impl Into<String>,
        substitution: BTreeMap<String, Rat>,
        lhs: Rat,
        rhs: Rat,
    ) -> Self {
        let slack = rhs.clone() - lhs.clone();
        let verdict = slack >= rat(0);
        BoundCertificate {
            name: name.into(),
            substitution,
            lhs,
            rhs,
            slack,
            verdict,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict
    }

    fn sym(&self, key: &str) -> Result<&Rat> {
        self.substitution.get(key).ok_or_else(|| {
            Error::Revalidation(self.name.clone(), format!("missing symbol `{key}`"))
        })
    }

    /// Recomputes both sides from the substitution map using the formula
    /// named by `self.name` and checks that `lhs`, `rhs`, `slack` and
    /// `verdict` all match exactly.
    pub fn revalidate(&self) -> Result<()> {
        let (lhs, rhs) = self.expected_sides()?;
        let slack = rhs.clone() - lhs.clone();
        let verdict = slack >= rat(0);
        if lhs != self.lhs || rhs != self.rhs || slack != self.slack || verdict != self.verdict {
            return Err(Error::Revalidation(
                self.name.clone(),
                "recomputed sides differ from stored values".into(),
            ));
        }
        Ok(())
    }

    fn expected_sides(&self) -> Result<(Rat, Rat)> {
        let name = self.name.as_str();
        if name == "chain-weight" {
            let lhs = self.sym("rf")?.clone();
            let rhs =
                self.sym("ef")?.clone() - self.sym("lp")?.clone() - self.sym("r")?.clone() / rat(2);
            return Ok((lhs, rhs));
        }
        if name.starts_with("mvt[") {
            // The scan's companion bound 3 r_f <= 3 e_f must also hold.
            if self.sym("rf")? > self.sym("ef")? {
                return Err(Error::Revalidation(
                    self.name.clone(),
                    "weighted node count exceeds the node count".into(),
                ));
            }
            return mvt_sides(&self.substitution);
        }
        if name == "mvt5-reduced" {
            return mvt5_reduced_sides(&self.substitution);
        }
        if let Some(rest) = name.strip_prefix("chain-length[cap=") {
            let cap: i64 = rest
                .strip_suffix(']')
                .and_then(|c| c.parse().ok())
                .ok_or_else(|| Error::Revalidation(self.name.clone(), "malformed cap".into()))?;
            let g = self.sym("g")?.clone();
            let k2 = self.sym("k2")?.clone();
            let expected_cap = if k2 == rat(2) - rat(3) * g.clone() {
                64
            } else if k2 == rat(3) - rat(3) * g.clone() {
                36
            } else {
                return Err(Error::Revalidation(
                    self.name.clone(),
                    "K^2 is outside the 2-3g / 3-3g families".into(),
                ));
            };
            if cap != expected_cap {
                return Err(Error::Revalidation(
                    self.name.clone(),
                    format!("cap {cap} does not match the K^2 family ({expected_cap})"),
                ));
            }
            let lhs = rat(4) * (g - rat(1))
                + rat(3) * self.sym("lp")?.clone()
                + rat(3) * self.sym("r")?.clone() / rat(2);
            return Ok((lhs, rat(cap)));
        }
        match name {
            "component-cap" => {
                // -sum(g_ij - 1) = 13 - g - K^2 <= 5m + c.
                let lhs = rat(13) - self.sym("g")?.clone() - self.sym("k2")?.clone();
                let rhs = rat(5) * self.sym("m")?.clone() + self.sym("c")?.clone();
                Ok((lhs, rhs))
            }
            "ruling-budget" => {
                // Three blowups per vertical (-3)-curve inside 3g+6 total.
                let lhs = rat(3) * self.sym("l3")?.clone();
                let rhs = rat(3) * self.sym("g")?.clone() + rat(6);
                Ok((lhs, rhs))
            }
            "genus-l2" => {
                let lhs = self.sym("g")?.clone();
                let rhs = rat(6) + self.sym("l2")?.clone();
                Ok((lhs, rhs))
            }
            "adjoint-floor" => {
                // (K+F)^2 >= g - 2, i.e. K^2 >= 2 - 3g.
                let lhs = rat(2) - rat(3) * self.sym("g")?.clone();
                let rhs = self.sym("k2")?.clone();
                Ok((lhs, rhs))
            }
            other => Err(Error::Revalidation(
                other.to_string(),
                "unknown certificate formula".into(),
            )),
        }
    }
}

fn get(sub: &BTreeMap<String, Rat>, key: &str) -> Result<Rat> {
    sub.get(key)
        .cloned()
        .ok_or_else(|| Error::Revalidation("mvt".into(), format!("missing symbol `{key}`")))
}

fn mvt_sides(sub: &BTreeMap<String, Rat>) -> Result<(Rat, Rat)> {
    let e = get(sub, "e")?;
    let g = get(sub, "g")?;
    let gb = get(sub, "gB")?;
    let s = get(sub, "s")?;
    let k2 = get(sub, "k2")?;
    let rf = get(sub, "rf")?;
    let fiber_term = rat(6) * gb - rat(6) + s.clone() - s / e.clone();
    let lhs = e.clone() * e * (k2 - (rat(2) * g - rat(2)) * fiber_term);
    let rhs = rat(3) * rf;
    Ok((lhs, rhs))
}

fn mvt5_reduced_sides(sub: &BTreeMap<String, Rat>) -> Result<(Rat, Rat)> {
    let g = get(sub, "g")?;
    let k2 = get(sub, "k2")?;
    let alpha = get(sub, "alpha")?;
    let lhs = rat(7) * k2 + rat(22) * (g - rat(1));
    let rhs = rat(9) - rat(3) * alpha / rat(4);
    Ok((lhs, rhs))
}
