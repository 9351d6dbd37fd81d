//! Value semigroup of a parametrized branch, computed by exact elimination.
//!
//! `Γ = { ord_t f(U(t), V(t)) }`. Orders below the working precision are
//! found by row-reducing the monomials `U^a V^b` by leading term; the
//! distinct leading orders of the reduced basis are exactly the orders
//! reachable by linear combinations.

use std::collections::BTreeMap;

use super::series::mul_trunc;
use super::{GermError, PowerSeries};
use crate::exact::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueSemigroup {
    /// Elements of `Γ` below `precision`, ascending.
    pub elements: Vec<usize>,
    pub precision: usize,
    pub multiplicity: usize,
    /// Least `c` with every integer `>= c` in `Γ`, when visible.
    pub conductor: Option<usize>,
}

impl ValueSemigroup {
    pub fn gaps(&self) -> Option<Vec<usize>> {
        let c = self.conductor?;
        Some((1..c).filter(|k| self.elements.binary_search(k).is_err()).collect())
    }
}

pub fn value_semigroup(u: &PowerSeries, v: &PowerSeries) -> Result<ValueSemigroup, GermError> {
    let precision = u.trunc().min(v.trunc());
    let ou = u.order().ok();
    let ov = v.order().ok();
    let multiplicity = match (ou, ov) {
        (None, None) => return Err(GermError::ZeroToPrecision { trunc: precision }),
        (Some(a), None) | (None, Some(a)) => a,
        (Some(a), Some(b)) => a.min(b),
    };
    if multiplicity == 0 {
        return Err(GermError::Invalid("germ must pass through the origin".into()));
    }

    let u = u.coeffs()[..precision].to_vec();
    let v = v.coeffs()[..precision].to_vec();
    let mut pivots: BTreeMap<usize, Vec<GaussianRational>> = BTreeMap::new();
    let mut one = vec![GaussianRational::zero(); precision];
    one[0] = GaussianRational::one();

    // U^a, walking a upward while its order stays below the precision
    let mut u_pow = one;
    let mut a = 0usize;
    loop {
        let ua_order = ou.map_or(if a == 0 { 0 } else { precision }, |o| o * a);
        if ua_order >= precision {
            break;
        }
        let mut term = u_pow.clone();
        let mut b = 0usize;
        loop {
            let order = ua_order + ov.map_or(if b == 0 { 0 } else { precision }, |o| o * b);
            if order >= precision {
                break;
            }
            insert_reduced(&mut pivots, term.clone());
            term = mul_trunc(&term, &v, precision);
            b += 1;
        }
        u_pow = mul_trunc(&u_pow, &u, precision);
        a += 1;
    }

    let elements: Vec<usize> = pivots.keys().copied().collect();
    let conductor = (0..precision.saturating_sub(multiplicity) + 1)
        .find(|&c| (c..c + multiplicity).all(|k| pivots.contains_key(&k)));
    Ok(ValueSemigroup {
        elements,
        precision,
        multiplicity,
        conductor,
    })
}

fn insert_reduced(pivots: &mut BTreeMap<usize, Vec<GaussianRational>>, mut row: Vec<GaussianRational>) {
    while let Some(lead) = row.iter().position(|c| !c.is_zero()) {
        match pivots.get(&lead) {
            Some(p) => {
                let factor = &row[lead] * &p[lead].inv().expect("pivot is nonzero");
                for (x, y) in row.iter_mut().zip(p).skip(lead) {
                    if !y.is_zero() {
                        *x -= &(&factor * y);
                    }
                }
            }
            None => {
                pivots.insert(lead, row);
                return;
            }
        }
    }
}

/// δ as the number of gaps of the value semigroup.
pub fn semigroup_delta(u: &PowerSeries, v: &PowerSeries) -> Result<u64, GermError> {
    let sg = value_semigroup(u, v)?;
    match sg.gaps() {
        Some(gaps) => Ok(gaps.len() as u64),
        None => Err(GermError::PrecisionExhausted { trunc: sg.precision }),
    }
}
