//! Local calculus of holomorphic curve germs in `C^2`.
//!
//! A germ is a pair of truncated power series `(U(z), V(z))` with zero
//! constant term, together with the cyclic group acting at the ambient
//! point and the order of the domain stabilizer. Local intersection numbers
//! are computed as the `t`-adic order of a resultant, and local
//! self-intersection numbers (the δ invariant) from characteristic
//! exponents, with the value semigroup as an independent route.

mod intersect;
mod normal;
mod orbit;
mod semigroup;
mod series;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::gcd;
use crate::lens::SingularityType;

pub use intersect::{branch_intersection, intersection_multiplicity};
pub use normal::{characteristic_exponents, milnor_number, self_intersection, self_intersection_by_exponents};
pub use orbit::{germ_orbit, stabilizer_size, translate_intersection, GermOrbit, GermTranslate};
pub use semigroup::{semigroup_delta, value_semigroup, ValueSemigroup};
pub use series::PowerSeries;

/// Truncation used when a germ does not specify one.
pub const DEFAULT_TRUNCATION: usize = 32;
/// Largest truncation the CLI retry loop escalates to.
pub const MAX_TRUNCATION: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GermError {
    #[error("series vanishes to precision O(z^{trunc})")]
    ZeroToPrecision { trunc: usize },
    #[error("precision exhausted at O(t^{trunc}); raise the truncation")]
    PrecisionExhausted { trunc: usize },
    #[error("germs coincide as sets; intersection number needs distinct branches")]
    DistinctBranchesRequired,
    #[error("branch is multiply covered (exponent gcd {0})")]
    MultiplyCovered(usize),
    #[error("no parameter change brings the germ to monomial form")]
    NotNormalizable,
    #[error("equivariance violated: {0}")]
    EquivarianceViolated(String),
    #[error("translate needs a root of unity of order {order} outside Q(i)")]
    UnsupportedRootOfUnity { order: i64 },
    #[error("invalid germ: {0}")]
    Invalid(String),
}

impl GermError {
    /// Errors that may disappear at a higher truncation.
    pub fn is_precision(&self) -> bool {
        matches!(
            self,
            GermError::PrecisionExhausted { .. } | GermError::ZeroToPrecision { .. }
        )
    }
}

/// Local representative `z ↦ (U(z), V(z))` of a curve at a point of type
/// `group`, equivariant for a domain stabilizer of order `m`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GermRepr", into = "GermRepr")]
pub struct CurveGerm {
    u: PowerSeries,
    v: PowerSeries,
    group: SingularityType,
    m: i64,
    rho: i64,
}

#[derive(Serialize, Deserialize)]
struct GermRepr {
    #[serde(rename = "U")]
    u: PowerSeries,
    #[serde(rename = "V")]
    v: PowerSeries,
    #[serde(default = "SingularityType::trivial")]
    group: SingularityType,
    #[serde(default = "one")]
    m: i64,
}

fn one() -> i64 {
    1
}

impl TryFrom<GermRepr> for CurveGerm {
    type Error = GermError;
    fn try_from(r: GermRepr) -> Result<Self, GermError> {
        CurveGerm::new(r.u, r.v, r.group, r.m)
    }
}

impl From<CurveGerm> for GermRepr {
    fn from(g: CurveGerm) -> Self {
        GermRepr {
            u: g.u,
            v: g.v,
            group: g.group,
            m: g.m,
        }
    }
}

impl CurveGerm {
    pub fn new(u: PowerSeries, v: PowerSeries, group: SingularityType, m: i64) -> Result<Self, GermError> {
        if !u.coeff(0).is_zero() || !v.coeff(0).is_zero() {
            return Err(GermError::Invalid("germ must pass through the origin".into()));
        }
        if u.is_zero() && v.is_zero() {
            return Err(GermError::Invalid("both components vanish to precision".into()));
        }
        let a = group.order();
        if m < 1 || a % m != 0 {
            return Err(GermError::Invalid(format!(
                "stabilizer order {m} must divide group order {a}"
            )));
        }
        let rho = equivariance_exponent(&u, &v, group, m)?;
        Ok(CurveGerm { u, v, group, m, rho })
    }

    /// Germ at a point with trivial isotropy.
    pub fn plain(u: PowerSeries, v: PowerSeries) -> Result<Self, GermError> {
        Self::new(u, v, SingularityType::trivial(), 1)
    }

    /// Polynomial germ with integer coefficients at a smooth point.
    pub fn from_int_terms(trunc: usize, u: &[(usize, i64)], v: &[(usize, i64)]) -> Self {
        Self::plain(
            PowerSeries::from_int_terms(trunc, u),
            PowerSeries::from_int_terms(trunc, v),
        )
        .expect("valid polynomial germ")
    }

    /// Same germ re-tagged with an ambient group and stabilizer order.
    pub fn with_group(self, group: SingularityType, m: i64) -> Result<Self, GermError> {
        Self::new(self.u, self.v, group, m)
    }

    /// Same terms with both series re-truncated at `trunc`.
    pub fn with_truncation(&self, trunc: usize) -> Result<Self, GermError> {
        Self::new(
            self.u.with_truncation(trunc),
            self.v.with_truncation(trunc),
            self.group,
            self.m,
        )
    }

    pub fn u(&self) -> &PowerSeries {
        &self.u
    }

    pub fn v(&self) -> &PowerSeries {
        &self.v
    }

    pub fn group(&self) -> SingularityType {
        self.group
    }

    pub fn stabilizer_order(&self) -> i64 {
        self.m
    }

    /// `s` with `ρ(μ_m) = μ_a^s`.
    pub fn rho_exponent(&self) -> i64 {
        self.rho
    }

    /// Rotation weights of `ρ(μ_m)` on the two coordinates, as powers of `μ_m`.
    pub fn isotropy_weights(&self) -> (i64, i64) {
        let a = self.group.order();
        let base = self.rho * self.m / a;
        (base.rem_euclid(self.m), (base * self.group.weight()).rem_euclid(self.m))
    }

    pub fn trunc(&self) -> usize {
        self.u.trunc().min(self.v.trunc())
    }

    /// gcd of every exponent appearing in either component.
    pub fn exponent_gcd(&self) -> usize {
        self.u
            .support()
            .into_iter()
            .chain(self.v.support())
            .fold(0i64, |acc, e| gcd(acc, e as i64)) as usize
    }
}

/// Finds `s` with `U(μ_m z) = μ_a^s U(z)` and `V(μ_m z) = μ_a^{sb} V(z)`,
/// using only the exponents that carry nonzero coefficients.
fn equivariance_exponent(u: &PowerSeries, v: &PowerSeries, group: SingularityType, m: i64) -> Result<i64, GermError> {
    let a = group.order();
    if a == 1 {
        return Ok(0);
    }
    let step = a / m;
    let us = u.support();
    let vs = v.support();
    (0..a)
        .filter(|&s| gcd(s, a) == step)
        .find(|&s| {
            us.iter().all(|&e| (e as i64 * step - s).rem_euclid(a) == 0)
                && vs
                    .iter()
                    .all(|&e| (e as i64 * step - s * group.weight()).rem_euclid(a) == 0)
        })
        .ok_or_else(|| {
            GermError::EquivarianceViolated(format!(
                "no injective ρ: Z_{m} -> Z_{a} makes the germ equivariant for type ({a},{})",
                group.weight()
            ))
        })
}
