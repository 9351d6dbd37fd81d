//! Orbifold Riemann surfaces.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("regular order must be at least 1, got {0}")]
    BadRegularOrder(i64),
    #[error("underlying genus must be non-negative, got {0}")]
    NegativeGenus(i64),
    #[error("orbifold point of order {order} is not a proper multiple of the regular order {m_sigma}")]
    BadOrbifoldOrder { order: i64, m_sigma: i64 },
}

/// Closed orbifold Riemann surface: regular isotropy order `m_sigma`,
/// underlying genus, and the orders of its orbifold points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SurfaceRepr", into = "SurfaceRepr")]
pub struct OrbifoldSurface {
    m_sigma: i64,
    genus: i64,
    orders: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct SurfaceRepr {
    m_sigma: i64,
    genus: i64,
    orders: Vec<i64>,
}

impl TryFrom<SurfaceRepr> for OrbifoldSurface {
    type Error = SurfaceError;
    fn try_from(r: SurfaceRepr) -> Result<Self, SurfaceError> {
        OrbifoldSurface::new(r.m_sigma, r.genus, r.orders)
    }
}

impl From<OrbifoldSurface> for SurfaceRepr {
    fn from(s: OrbifoldSurface) -> Self {
        SurfaceRepr {
            m_sigma: s.m_sigma,
            genus: s.genus,
            orders: s.orders,
        }
    }
}

impl OrbifoldSurface {
    pub fn new(m_sigma: i64, genus: i64, orders: Vec<i64>) -> Result<Self, SurfaceError> {
        if m_sigma < 1 {
            return Err(SurfaceError::BadRegularOrder(m_sigma));
        }
        if genus < 0 {
            return Err(SurfaceError::NegativeGenus(genus));
        }
        if let Some(&order) = orders.iter().find(|&&m| m <= m_sigma || m % m_sigma != 0) {
            return Err(SurfaceError::BadOrbifoldOrder { order, m_sigma });
        }
        Ok(OrbifoldSurface { m_sigma, genus, orders })
    }

    /// Reduced surface (`m_sigma = 1`).
    pub fn reduced(genus: i64, orders: Vec<i64>) -> Result<Self, SurfaceError> {
        Self::new(1, genus, orders)
    }

    pub fn sphere(orders: Vec<i64>) -> Result<Self, SurfaceError> {
        Self::new(1, 0, orders)
    }

    pub fn m_sigma(&self) -> i64 {
        self.m_sigma
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn is_reduced(&self) -> bool {
        self.m_sigma == 1
    }
}

/// `g_Σ = g/m_Σ + Σ_i (1/(2m_Σ) - 1/(2m_i))`.
pub fn orbifold_genus(s: &OrbifoldSurface) -> Rational {
    let base = Rational::frac(s.genus, s.m_sigma);
    s.orders.iter().fold(base, |acc, &m| {
        acc + Rational::frac(1, 2 * s.m_sigma) - Rational::frac(1, 2 * m)
    })
}

/// `c_1(TΣ)(Σ) = 2/m_Σ - 2 g_Σ`.
pub fn tangent_c1(s: &OrbifoldSurface) -> Rational {
    Rational::frac(2, s.m_sigma) - Rational::integer(2) * orbifold_genus(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_examples() {
        let (p, q) = (5, 2);
        let s = OrbifoldSurface::sphere(vec![p + q]).unwrap();
        assert_eq!(
            orbifold_genus(&s),
            Rational::frac(1, 2) - Rational::frac(1, 2 * (p + q))
        );
        assert!(orbifold_genus(&OrbifoldSurface::sphere(vec![]).unwrap()).is_zero());
        let s = OrbifoldSurface::sphere(vec![p + q, p]).unwrap();
        assert_eq!(
            orbifold_genus(&s),
            Rational::one() - Rational::frac(2 * p + q, 2 * p * (p + q))
        );
    }

    #[test]
    fn tangent_examples() {
        assert!(tangent_c1(&OrbifoldSurface::reduced(1, vec![]).unwrap()).is_zero());
        for n in 2..10 {
            let s = OrbifoldSurface::sphere(vec![n]).unwrap();
            assert_eq!(tangent_c1(&s), Rational::one() + Rational::frac(1, n));
        }
        let (p, q) = (5, 2);
        let s = OrbifoldSurface::sphere(vec![p + q, p]).unwrap();
        assert_eq!(tangent_c1(&s), Rational::frac(2 * p + q, p * (p + q)));
    }

    #[test]
    fn non_reduced_surfaces() {
        let s = OrbifoldSurface::new(2, 1, vec![4, 6]).unwrap();
        // 1/2 + (1/4 - 1/8) + (1/4 - 1/12)
        assert_eq!(orbifold_genus(&s), Rational::frac(19, 24));
        assert!(OrbifoldSurface::new(2, 0, vec![3]).is_err());
        assert!(OrbifoldSurface::new(2, 0, vec![2]).is_err());
        assert!(OrbifoldSurface::new(0, 0, vec![]).is_err());
        assert!(OrbifoldSurface::reduced(-1, vec![]).is_err());
    }

    #[test]
    fn genus_monotone_in_orders_and_genus() {
        for g in 0..3 {
            for m in 2..12 {
                let a = OrbifoldSurface::reduced(g, vec![m, 3]).unwrap();
                let b = OrbifoldSurface::reduced(g, vec![m + 1, 3]).unwrap();
                let c = OrbifoldSurface::reduced(g + 1, vec![m, 3]).unwrap();
                assert!(orbifold_genus(&a) <= orbifold_genus(&b));
                assert!(orbifold_genus(&a) <= orbifold_genus(&c));
            }
        }
    }

    #[test]
    fn json_form() {
        let s: OrbifoldSurface = serde_json::from_str(r#"{"m_sigma": 1, "genus": 0, "orders": [7, 5]}"#).unwrap();
        assert_eq!(s.orders(), &[7, 5]);
        assert!(serde_json::from_str::<OrbifoldSurface>(r#"{"m_sigma":1,"genus":0,"orders":[1]}"#).is_err());
    }
}
