//! Monomial charts for plane branches and the δ invariant from
//! characteristic exponents.

use super::semigroup::semigroup_delta;
use super::{CurveGerm, GermError, PowerSeries};
use crate::exact::{gcd, GaussianRational, Rational};

/// A branch rewritten as `X = c·σ^n`, `Y = other(σ)` after the parameter
/// change `σ = s·(X(s)/(c s^n))^{1/n}`.
#[derive(Debug, Clone)]
pub(crate) struct MonomialChart {
    pub n: usize,
    pub lead: GaussianRational,
    /// `Y` in the new parameter, known modulo `σ^{other.trunc()}`.
    pub other: PowerSeries,
}

/// Reparametrizes so that `x` becomes a monomial.
///
/// The parameter change is inverted with Lagrange–Bürmann:
/// `[σ^k] Y(s(σ)) = (1/k)·[s^{k-1}] Y'(s)·R(s)^k` with `R = (X/(c s^n))^{-1/n}`.
pub(crate) fn monomial_chart(x: &PowerSeries, y: &PowerSeries) -> Result<MonomialChart, GermError> {
    let n = x.order().map_err(|_| GermError::NotNormalizable)?;
    if n == 0 {
        return Err(GermError::Invalid("chart coordinate must vanish at the origin".into()));
    }
    let lead = x.coeff(n).clone();
    let unit = x
        .shift_down(n)
        .scale(&lead.inv().expect("leading coefficient is nonzero"));
    let precision = (x.trunc() - n + 1).min(y.trunc());

    if unit.coeffs()[1..].iter().all(GaussianRational::is_zero) {
        return Ok(MonomialChart {
            n,
            lead,
            other: y.with_truncation(precision),
        });
    }

    let r = unit.pow_rational(&Rational::frac(-1, n as i64))?;
    let dy = y.derivative();
    let mut other = vec![GaussianRational::zero(); precision];
    other[0] = y.coeff(0).clone();
    let width = precision.saturating_sub(1).max(1);
    let r = r.with_truncation(width);
    let mut r_pow = PowerSeries::monomial(width, 0, GaussianRational::one());
    for (k, slot) in other.iter_mut().enumerate().skip(1) {
        r_pow = r_pow.mul(&r);
        let mut acc = GaussianRational::zero();
        for i in 0..k {
            let d = dy.coeff(i);
            if !d.is_zero() {
                acc += &(d * r_pow.coeff(k - 1 - i));
            }
        }
        *slot = acc.scale(&Rational::frac(1, k as i64));
    }
    let other = PowerSeries::from_terms(precision, other.into_iter().enumerate()).expect("in range");
    Ok(MonomialChart { n, lead, other })
}

/// Puts a branch in the form used for characteristic exponents: the
/// first coordinate has strictly smaller order than the second.
/// Linear coordinate changes do not affect the singularity type.
fn separate_orders(g: &CurveGerm) -> Result<(PowerSeries, PowerSeries), GermError> {
    let (mut x, mut y) = (g.u().clone(), g.v().clone());
    let ox = x.order().ok();
    let oy = y.order().ok();
    match (ox, oy) {
        (None, None) => return Err(GermError::NotNormalizable),
        (None, Some(_)) => std::mem::swap(&mut x, &mut y),
        (Some(a), Some(b)) if b < a => std::mem::swap(&mut x, &mut y),
        _ => {}
    }
    let n = x.order()?;
    if let Ok(m) = y.order() {
        if m == n {
            let ratio = y.coeff(n) * &x.coeff(n).inv().expect("nonzero");
            y = y.sub(&x.scale(&ratio));
        }
    }
    Ok((x, y))
}

/// Characteristic exponents `(β_0; β_1, …, β_g)` of an irreducible germ.
pub fn characteristic_exponents(g: &CurveGerm) -> Result<Vec<usize>, GermError> {
    let d = g.exponent_gcd();
    if d > 1 {
        return Err(GermError::MultiplyCovered(d));
    }
    let (x, y) = separate_orders(g)?;
    let n = x.order()?;
    if n == 1 {
        return Ok(vec![1]);
    }
    if y.is_zero() {
        // the image lies in a line traversed n times, or y is hidden beyond the truncation
        return Err(GermError::PrecisionExhausted { trunc: y.trunc() });
    }
    let chart = monomial_chart(&x, &y)?;
    let mut betas = vec![n];
    let mut e = n;
    for (k, _) in chart.other.terms() {
        if k % e != 0 {
            betas.push(k);
            e = gcd(e as i64, k as i64) as usize;
            if e == 1 {
                return Ok(betas);
            }
        }
    }
    Err(GermError::PrecisionExhausted {
        trunc: chart.other.trunc(),
    })
}

/// `μ = Σ_i (e_{i-1} - e_i) β_i - β_0 + 1` from characteristic exponents.
pub fn milnor_number(betas: &[usize]) -> usize {
    let mut e_prev = betas[0];
    let mut total = 0usize;
    for &b in &betas[1..] {
        let e = gcd(e_prev as i64, b as i64) as usize;
        total += (e_prev - e) * b;
        e_prev = e;
    }
    total + 1 - betas[0]
}

/// δ computed only through characteristic exponents.
pub fn self_intersection_by_exponents(g: &CurveGerm) -> Result<u64, GermError> {
    let betas = characteristic_exponents(g)?;
    Ok((milnor_number(&betas) / 2) as u64)
}

/// Local self-intersection number of an irreducible germ: the δ invariant,
/// i.e. the number of double points of a generic immersed perturbation.
pub fn self_intersection(g: &CurveGerm) -> Result<u64, GermError> {
    match self_intersection_by_exponents(g) {
        Err(GermError::NotNormalizable) => semigroup_delta(g.u(), g.v()),
        other => other,
    }
}
