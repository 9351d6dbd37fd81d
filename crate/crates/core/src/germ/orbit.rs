//! Group translates of a local representative: the set `Λ(C)_z`.

use super::{intersection_multiplicity, CurveGerm, GermError, PowerSeries};
use crate::exact::{gcd, GaussianRational};

/// The germ `μ_a^k · g = (μ_a^k U, μ_a^{kb} V)`, kept symbolically.
#[derive(Debug, Clone, PartialEq)]
pub struct GermTranslate {
    pub base: CurveGerm,
    pub twist: i64,
}

impl GermTranslate {
    pub fn identity(base: CurveGerm) -> Self {
        GermTranslate { base, twist: 0 }
    }

    /// The translate with explicit Gaussian-rational coefficients, after a
    /// root-of-unity reparametrization when one brings the twist into `Q(i)`.
    pub fn realize(&self) -> Result<CurveGerm, GermError> {
        realize_twist(&self.base, self.twist)
    }
}

/// Angles are tracked as integers modulo `a·g·4`, i.e. in units of
/// `1/(4ag)` of a full turn.
fn realize_twist(g: &CurveGerm, twist: i64) -> Result<CurveGerm, GermError> {
    let a = g.group().order();
    let k = twist.rem_euclid(a);
    if k == 0 {
        return Ok(g.clone());
    }
    let b = g.group().weight();
    let exp_gcd = (g.exponent_gcd() as i64).max(1);
    let denom = 4 * a * exp_gcd;
    let quarter = a * exp_gcd;
    let us = g.u().support();
    let vs = g.v().support();
    // reparametrize t -> ζ t with ζ = exp(2πi x/denom)
    let angle = |base: i64, e: usize, x: i64| (base * 4 * exp_gcd + e as i64 * x).rem_euclid(denom);
    let x = (0..denom).find(|&x| {
        us.iter().all(|&e| angle(k, e, x) % quarter == 0) && vs.iter().all(|&e| angle(k * b, e, x) % quarter == 0)
    });
    let Some(x) = x else {
        return Err(GermError::UnsupportedRootOfUnity { order: a / gcd(k, a) });
    };
    let twist_series = |s: &PowerSeries, base: i64| {
        s.map_coeffs(|e, c| {
            if c.is_zero() {
                c.clone()
            } else {
                c * &GaussianRational::i_pow(angle(base, e, x) / quarter)
            }
        })
    };
    CurveGerm::new(
        twist_series(g.u(), k),
        twist_series(g.v(), k * b),
        g.group(),
        g.stabilizer_order(),
    )
}

/// `Λ(C)_z` for a germ: one translate per coset of `ρ(G_D)` in `G_U`.
#[derive(Debug, Clone, PartialEq)]
pub struct GermOrbit {
    pub germs: Vec<GermTranslate>,
    pub group_order: i64,
}

impl GermOrbit {
    pub fn len(&self) -> usize {
        self.germs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.germs.is_empty()
    }

    /// Intersection number of orbit members `i` and `j` of two orbits of
    /// germs at the same point.
    pub fn cross_intersection(&self, i: usize, other: &GermOrbit, j: usize) -> Result<u64, GermError> {
        translate_intersection(&self.germs[i], &other.germs[j])
    }
}

/// `I(h·g, h'·g') = I(g, h^{-1}h'·g')`. Every coset representative of the
/// relative twist is tried before giving up on realizing it over `Q(i)`.
pub fn translate_intersection(lhs: &GermTranslate, rhs: &GermTranslate) -> Result<u64, GermError> {
    let a = rhs.base.group().order();
    let step = a / rhs.base.stabilizer_order();
    let base_twist = rhs.twist - lhs.twist;
    let mut last = None;
    for j in 0..rhs.base.stabilizer_order() {
        match realize_twist(&rhs.base, base_twist + j * step) {
            Ok(g) => return intersection_multiplicity(&lhs.base, &g),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("stabilizer order is at least 1"))
}

/// Set-level stabilizer of the image: twists `j` for which `μ_a^j · g` is
/// a reparametrization of `g` by a root of unity.
pub fn stabilizer_size(g: &CurveGerm) -> i64 {
    let a = g.group().order();
    let b = g.group().weight();
    let exp_gcd = (g.exponent_gcd() as i64).max(1);
    let denom = a * exp_gcd;
    let us = g.u().support();
    let vs = g.v().support();
    (0..a)
        .filter(|&j| {
            (0..denom).any(|x| {
                us.iter().all(|&e| (j * exp_gcd + e as i64 * x).rem_euclid(denom) == 0)
                    && vs
                        .iter()
                        .all(|&e| (j * b * exp_gcd + e as i64 * x).rem_euclid(denom) == 0)
            })
        })
        .count() as i64
}

/// The `a/m` translates with coset representatives `k = 0, 1, …, a/m - 1`.
pub fn germ_orbit(g: &CurveGerm) -> Result<GermOrbit, GermError> {
    let a = g.group().order();
    let m = g.stabilizer_order();
    let stab = stabilizer_size(g);
    if stab != m {
        return Err(GermError::EquivarianceViolated(format!(
            "image is invariant under a subgroup of order {stab}, but the stated stabilizer has order {m}"
        )));
    }
    let germs = (0..a / m)
        .map(|k| GermTranslate {
            base: g.clone(),
            twist: k,
        })
        .collect();
    Ok(GermOrbit { germs, group_order: a })
}
