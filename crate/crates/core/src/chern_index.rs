//! First Chern numbers of orbifold bundles over surfaces, and the index
//! arithmetic for maps of orbifold spheres into 4-orbifolds.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{gcd, mod_inverse};
use crate::exact::{is_integer, Rational};
use crate::lens::{cobordism_congruence, weight_data, LensError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("orbifold point order must be at least 1, got {0}")]
    BadOrder(i64),
    #[error("weight list of length {got} at point {index}, expected rank {rank}")]
    RankMismatch { index: usize, got: usize, rank: usize },
    #[error("weight {weight} out of range for order {order}")]
    WeightOutOfRange { weight: i64, order: i64 },
}

/// A local isotropy datum: order `m` and the rotation weights of the fibre.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropyWeights {
    pub order: i64,
    pub weights: Vec<i64>,
}

impl IsotropyWeights {
    /// Reduces every weight into `[0, order)`.
    pub fn new(order: i64, weights: Vec<i64>) -> Result<Self, ChernError> {
        if order < 1 {
            return Err(ChernError::BadOrder(order));
        }
        let weights = weights.into_iter().map(|w| w.rem_euclid(order)).collect();
        Ok(IsotropyWeights { order, weights })
    }

    /// Accepts weights only when they already lie in `[0, order)`.
    pub fn strict(order: i64, weights: Vec<i64>) -> Result<Self, ChernError> {
        if order < 1 {
            return Err(ChernError::BadOrder(order));
        }
        if let Some(&weight) = weights.iter().find(|&&w| !(0..order).contains(&w)) {
            return Err(ChernError::WeightOutOfRange { weight, order });
        }
        Ok(IsotropyWeights { order, weights })
    }

    fn fraction_sum(&self) -> Rational {
        Rational::frac(self.weights.iter().sum(), self.order)
    }
}

/// Trivialization of an orbifold bundle near its orbifold points together
/// with the relative Chern number of the complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantTrivialization {
    rank: usize,
    relative_c1: i64,
    points: Vec<IsotropyWeights>,
}

impl EquivariantTrivialization {
    pub fn new(rank: usize, relative_c1: i64, points: Vec<IsotropyWeights>) -> Result<Self, ChernError> {
        for (index, pt) in points.iter().enumerate() {
            if pt.weights.len() != rank {
                return Err(ChernError::RankMismatch {
                    index,
                    got: pt.weights.len(),
                    rank,
                });
            }
            if let Some(&weight) = pt.weights.iter().find(|&&w| !(0..pt.order).contains(&w)) {
                return Err(ChernError::WeightOutOfRange {
                    weight,
                    order: pt.order,
                });
            }
        }
        Ok(EquivariantTrivialization {
            rank,
            relative_c1,
            points,
        })
    }

    /// Tangent bundle of a reduced surface of genus `g` with the given
    /// orbifold orders: relative term `2 - 2g - k`, all weights 1.
    pub fn tangent(genus: i64, orders: &[i64]) -> Result<Self, ChernError> {
        let points = orders
            .iter()
            .map(|&m| IsotropyWeights::new(m, vec![1]))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(1, 2 - 2 * genus - orders.len() as i64, points)
    }

    /// Fibrewise direct sum; both sides must have the same orbifold points
    /// in the same order.
    pub fn direct_sum(&self, other: &Self) -> Option<Self> {
        if self.points.len() != other.points.len()
            || self.points.iter().zip(&other.points).any(|(a, b)| a.order != b.order)
        {
            return None;
        }
        let points = self
            .points
            .iter()
            .zip(&other.points)
            .map(|(a, b)| IsotropyWeights {
                order: a.order,
                weights: a.weights.iter().chain(&b.weights).copied().collect(),
            })
            .collect();
        Some(EquivariantTrivialization {
            rank: self.rank + other.rank,
            relative_c1: self.relative_c1 + other.relative_c1,
            points,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relative_c1(&self) -> i64 {
        self.relative_c1
    }

    pub fn points(&self) -> &[IsotropyWeights] {
        &self.points
    }
}

/// `c_1(E)(Σ) = c_1(E_0, τ) + Σ_i Σ_j m_{i,j}/m_i`.
pub fn chern_split(t: &EquivariantTrivialization) -> Rational {
    t.points
        .iter()
        .fold(Rational::integer(t.relative_c1), |acc, pt| acc + pt.fraction_sum())
}

/// Half the index of the linearized Cauchy–Riemann operator:
/// `d = c_1(TX)·[f(Σ)] + 2 - 2g - Σ_i (m_{i,1} + m_{i,2})/m_i`.
///
/// A non-integral `d` means no such map exists; the index is `2d` otherwise.
pub fn kawasaki_index(c1_pair: &Rational, underlying_genus: i64, stations: &[IsotropyWeights]) -> Rational {
    stations
        .iter()
        .fold(c1_pair + Rational::integer(2 - 2 * underlying_genus), |acc, st| {
            acc - st.fraction_sum()
        })
}

/// `2d` when `d` is an integer.
pub fn index_dimension(d: &Rational) -> Option<Rational> {
    is_integer(d).then(|| Rational::integer(2) * d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexScanRow {
    pub q_prime: i64,
    pub case_a_d: Rational,
    pub case_b_d: Rational,
    pub case_a_integral: bool,
    pub case_b_integral: bool,
    /// What the congruence arithmetic says, for comparison.
    pub congruence_allowed: bool,
}

impl IndexScanRow {
    pub fn integral(&self) -> bool {
        self.case_a_integral || self.case_b_integral
    }
}

/// Local isotropy data of the multiplicity-one parametrization of the
/// curve of class `[C_0]/p` through both singular points.
///
/// At `x` (type `(p+q, p)`) the representative is `((u(z), z), μ ↦ μ^l)`,
/// giving weights `(l, l·p) = (l, 1)`. At `x'` (type `(p, q')`) it is either
/// `((w(z), z), μ ↦ μ^{l'})` with weights `(l', 1)` (case A) or
/// `((z, w(z)), id)` with weights `(1, q')` (case B).
pub fn c0prime_stations(p: i64, q: i64, q_prime: i64, case_b: bool) -> Result<Vec<IsotropyWeights>, LensError> {
    let (l, _) = weight_data(p, q)?;
    let at_x = IsotropyWeights::new(p + q, vec![l, l * p]).expect("order >= 1");
    let at_x_prime = if case_b {
        IsotropyWeights::new(p, vec![1, q_prime])
    } else {
        let l_prime = mod_inverse(q_prime, p).map_err(|e| LensError::InvalidInput(e.to_string()))?;
        IsotropyWeights::new(p, vec![l_prime, l_prime * q_prime])
    }
    .expect("order >= 1");
    Ok(vec![at_x, at_x_prime])
}

/// `c_1(TX)` paired with `[C_0]/p`.
pub fn c0prime_c1_pair(p: i64, q: i64) -> Rational {
    Rational::frac(2 * p + q + 1, p * (p + q))
}

/// Index half-dimension for both local forms at `x'`, for every `q'`.
pub fn index_integrality_scan(p: i64, q: i64) -> Result<Vec<IndexScanRow>, LensError> {
    crate::lens::LensSpace::new(p, q)?;
    let c1 = c0prime_c1_pair(p, q);
    (1..p)
        .filter(|&qp| gcd(qp, p) == 1)
        .map(|q_prime| {
            let case_a_d = kawasaki_index(&c1, 0, &c0prime_stations(p, q, q_prime, false)?);
            let case_b_d = kawasaki_index(&c1, 0, &c0prime_stations(p, q, q_prime, true)?);
            Ok(IndexScanRow {
                q_prime,
                case_a_integral: is_integer(&case_a_d),
                case_b_integral: is_integer(&case_b_d),
                case_a_d,
                case_b_d,
                congruence_allowed: cobordism_congruence(p, q, q_prime)?.allowed,
            })
        })
        .collect()
}
