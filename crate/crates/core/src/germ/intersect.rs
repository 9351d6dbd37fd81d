//! Local intersection numbers of two branches through the origin.
//!
//! For branches `(X_1(t), Y_1(t))` and `(X_2(s), Y_2(s))` the intersection
//! number is `ord_t Res_s(X_1(t) - X_2(s), Y_1(t) - Y_2(s))` with the
//! resultant taken in the local ring. After the parameter change that makes
//! `X_2 = c·σ^n`, the first generator becomes the monic `σ^n - X_1(t)/c`,
//! and the resultant is the determinant of multiplication by
//! `Y_1(t) - Y_2(σ)` on the free `K[[t]]`-module with basis `1, σ, …, σ^{n-1}`.

use super::normal::monomial_chart;
use super::series::mul_trunc;
use super::{CurveGerm, GermError, PowerSeries, MAX_TRUNCATION};
use crate::exact::GaussianRational;

type Series = Vec<GaussianRational>;

/// Intersection number of two germs at the same point of `C^2`.
pub fn intersection_multiplicity(g1: &CurveGerm, g2: &CurveGerm) -> Result<u64, GermError> {
    branch_intersection((g1.u(), g1.v()), (g2.u(), g2.v()))
}

struct Setup<'a> {
    /// coordinate index used for elimination (0 = U, 1 = V)
    coord: usize,
    t_branch: (&'a PowerSeries, &'a PowerSeries),
    s_branch: (&'a PowerSeries, &'a PowerSeries),
    n: usize,
    t_order: usize,
    precision: usize,
}

fn pick<'a>(b: (&'a PowerSeries, &'a PowerSeries), coord: usize) -> (&'a PowerSeries, &'a PowerSeries) {
    if coord == 0 {
        (b.0, b.1)
    } else {
        (b.1, b.0)
    }
}

/// Valid `t`-precision of the determinant for one choice of eliminated
/// coordinate and parametrized branch.
fn plan<'a>(
    coord: usize,
    t_branch: (&'a PowerSeries, &'a PowerSeries),
    s_branch: (&'a PowerSeries, &'a PowerSeries),
) -> Option<Setup<'a>> {
    let (x2, y2) = pick(s_branch, coord);
    let (x1, y1) = pick(t_branch, coord);
    let n = x2.order().ok()?;
    // a zero coordinate is only known to vanish below its truncation
    let t_order = x1.order().unwrap_or(x1.trunc());
    let chart_precision = (x2.trunc() - n + 1).min(y2.trunc());
    let precision = x1.trunc().min(y1.trunc()).min(t_order * (chart_precision / n));
    Some(Setup {
        coord,
        t_branch,
        s_branch,
        n,
        t_order,
        precision,
    })
}

pub fn branch_intersection(
    b1: (&PowerSeries, &PowerSeries),
    b2: (&PowerSeries, &PowerSeries),
) -> Result<u64, GermError> {
    let full = [b1.0, b1.1, b2.0, b2.1].iter().map(|s| s.trunc()).max().unwrap_or(0);
    // a prefix of the data already fixes the order when the determinant
    // is nonzero below its valid precision
    let mut t = 16;
    while t < full {
        let cut = |s: &PowerSeries| s.with_truncation(s.trunc().min(t));
        let (c1, c2) = ((cut(b1.0), cut(b1.1)), (cut(b2.0), cut(b2.1)));
        if let Ok((Some(k), _)) = resultant_order((&c1.0, &c1.1), (&c2.0, &c2.1)) {
            return Ok(k);
        }
        t *= 2;
    }
    match resultant_order(b1, b2)? {
        (Some(k), _) => Ok(k),
        (None, _) if same_branch(b1, b2) => Err(GermError::DistinctBranchesRequired),
        (None, precision) => Err(GermError::PrecisionExhausted { trunc: precision }),
    }
}

/// `ord_t` of the resultant if it is nonzero below the valid precision,
/// together with that precision.
fn resultant_order(
    b1: (&PowerSeries, &PowerSeries),
    b2: (&PowerSeries, &PowerSeries),
) -> Result<(Option<u64>, usize), GermError> {
    let candidates = [(0, b1, b2), (0, b2, b1), (1, b1, b2), (1, b2, b1)];
    let setup = candidates
        .into_iter()
        .filter_map(|(c, t, s)| plan(c, t, s))
        .reduce(|best, next| if next.precision > best.precision { next } else { best })
        .ok_or_else(|| GermError::Invalid("both branches vanish to precision".into()))?;
    if setup.precision == 0 {
        return Ok((None, 0));
    }
    let det = resultant_series(&setup)?;
    Ok((det.iter().position(|c| !c.is_zero()).map(|k| k as u64), setup.precision))
}

fn resultant_series(setup: &Setup<'_>) -> Result<Series, GermError> {
    let prec = setup.precision;
    let n = setup.n;
    let (x2, y2) = pick(setup.s_branch, setup.coord);
    let (x1, y1) = pick(setup.t_branch, setup.coord);
    let chart = monomial_chart(x2, y2)?;
    let lead_inv = chart.lead.inv().expect("nonzero leading coefficient");

    // σ^n ≡ a(t) = X_1(t)/c
    let a: Series = (0..prec).map(|k| x1.coeff(k) * &lead_inv).collect();
    // terms σ^k with k >= n·ceil(prec/t_order) only reach t-order >= prec
    let max_power = prec.div_ceil(setup.t_order.max(1));
    let s_limit = (n * max_power).min(chart.other.trunc());

    let mut a_pows: Vec<Series> = Vec::with_capacity(max_power + 1);
    let mut unit = vec![GaussianRational::zero(); prec];
    unit[0] = GaussianRational::one();
    a_pows.push(unit);
    for j in 1..=max_power {
        let next = mul_trunc(&a_pows[j - 1], &a, prec);
        a_pows.push(next);
    }

    // multiplication by G(t, σ) = Y_1(t) - Y_2(σ), column i = G·σ^i reduced
    let zero: Series = vec![GaussianRational::zero(); prec];
    let mut matrix = vec![vec![zero.clone(); n]; n];
    let y1_series: Series = (0..prec).map(|k| y1.coeff(k).clone()).collect();
    #[allow(clippy::needless_range_loop)]
    for col in 0..n {
        for k in 0..s_limit {
            let idx = k + col;
            let (row, power) = (idx % n, idx / n);
            if power > max_power {
                continue;
            }
            let cell = &mut matrix[row][col];
            if k == 0 {
                let mut g0 = y1_series.clone();
                g0[0] -= chart.other.coeff(0);
                add_into(cell, &mul_trunc(&g0, &a_pows[power], prec));
            } else {
                let c = chart.other.coeff(k);
                if c.is_zero() {
                    continue;
                }
                let neg = -c;
                for (dst, src) in cell.iter_mut().zip(&a_pows[power]) {
                    if !src.is_zero() {
                        *dst += &(&neg * src);
                    }
                }
            }
        }
    }
    Ok(determinant(&matrix, prec))
}

fn add_into(dst: &mut Series, src: &Series) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += s;
        }
    }
}

/// Division-free determinant over `K[t]/t^prec`, expanding along rows
/// with memoized minors indexed by the set of used columns.
fn determinant(m: &[Vec<Series>], prec: usize) -> Series {
    let n = m.len();
    let mut minors: Vec<Option<Series>> = vec![None; 1 << n];
    let mut one = vec![GaussianRational::zero(); prec];
    one[0] = GaussianRational::one();
    minors[0] = Some(one);
    // minors[mask] = det of rows 0..popcount(mask) against the columns in mask
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = vec![GaussianRational::zero(); prec];
        // Laplace along the last row: columns in increasing order alternate sign from the right
        let cols: Vec<usize> = (0..n).filter(|c| mask & (1 << c) != 0).collect();
        for (pos, &c) in cols.iter().enumerate().rev() {
            let sub = minors[mask & !(1 << c)].as_ref().expect("smaller masks first");
            let term = mul_trunc(&m[row][c], sub, prec);
            let negative = (cols.len() - 1 - pos) % 2 == 1;
            for (x, y) in acc.iter_mut().zip(&term) {
                if negative {
                    *x -= y;
                } else {
                    *x += y;
                }
            }
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().expect("full minor")
}

/// Whether the polynomial representatives of two branches have the same
/// image. The comparison is made at [`MAX_TRUNCATION`], so a tangency
/// hidden by a short truncation is not mistaken for a common component.
fn same_branch(b1: (&PowerSeries, &PowerSeries), b2: (&PowerSeries, &PowerSeries)) -> bool {
    let ext = |s: &PowerSeries| s.with_truncation(s.trunc().max(MAX_TRUNCATION));
    let (b1, b2) = ((ext(b1.0), ext(b1.1)), (ext(b2.0), ext(b2.1)));
    for coord in 0..2 {
        let (x1, y1) = pick((&b1.0, &b1.1), coord);
        let (x2, y2) = pick((&b2.0, &b2.1), coord);
        let (Ok(c1), Ok(c2)) = (monomial_chart(x1, y1), monomial_chart(x2, y2)) else {
            continue;
        };
        return c1.n == c2.n && rescaling_exists(c1.n, &c1.lead, &c1.other, &c2.lead, &c2.other);
    }
    false
}

/// Whether some `λ ∈ C^*` gives `c_2 λ^n = c_1` and `Y_2(λσ) = Y_1(σ)`.
///
/// Every matched exponent `e` prescribes `λ^e`; with `g` the gcd of the
/// exponents, a Bézout combination gives `λ^g`, and such `λ` exists iff
/// `λ^g` reproduces every prescribed power.
fn rescaling_exists(
    n: usize,
    c1: &GaussianRational,
    y1: &PowerSeries,
    c2: &GaussianRational,
    y2: &PowerSeries,
) -> bool {
    let ratio = |a: &GaussianRational, b: &GaussianRational| a * &b.inv().expect("nonzero");
    let mut prescribed = vec![(n as i64, ratio(c1, c2))];
    for e in 1..y1.trunc().min(y2.trunc()) {
        match (y1.coeff(e).is_zero(), y2.coeff(e).is_zero()) {
            (true, true) => {}
            (false, false) => prescribed.push((e as i64, ratio(y1.coeff(e), y2.coeff(e)))),
            _ => return false,
        }
    }
    let (mut g, mut lambda_g) = (prescribed[0].0, prescribed[0].1.clone());
    for (e, r) in &prescribed[1..] {
        if e % g == 0 {
            continue;
        }
        let (d, x, y) = ext_gcd(g, *e);
        lambda_g = &gaussian_pow(&lambda_g, x) * &gaussian_pow(r, y);
        g = d;
    }
    prescribed.iter().all(|(e, r)| gaussian_pow(&lambda_g, e / g) == *r)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (d, x, y) = ext_gcd(b, a % b);
        (d, y, x - (a / b) * y)
    }
}

fn gaussian_pow(z: &GaussianRational, k: i64) -> GaussianRational {
    let base = if k < 0 { z.inv().expect("nonzero") } else { z.clone() };
    let (mut acc, mut sq, mut k) = (GaussianRational::one(), base, k.unsigned_abs());
    while k > 0 {
        if k & 1 == 1 {
            acc = &acc * &sq;
        }
        sq = &sq * &sq;
        k >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn germ(u: &[(usize, i64)], v: &[(usize, i64)]) -> CurveGerm {
        CurveGerm::from_int_terms(32, u, v)
    }

    #[test]
    fn basic_pairs() {
        let i = |a: &CurveGerm, b: &CurveGerm| intersection_multiplicity(a, b);
        assert_eq!(i(&germ(&[(1, 1)], &[]), &germ(&[], &[(1, 1)])), Ok(1));
        assert_eq!(i(&germ(&[(1, 1)], &[(2, 1)]), &germ(&[(1, 1)], &[])), Ok(2));
        assert_eq!(i(&germ(&[(2, 1)], &[(3, 1)]), &germ(&[(1, 1)], &[(1, 1)])), Ok(2));
    }

    #[test]
    fn singular_pairs() {
        // two cusps with different tangents: 2·2
        assert_eq!(
            intersection_multiplicity(&germ(&[(2, 1)], &[(3, 1)]), &germ(&[(3, 1)], &[(2, 1)])),
            Ok(4)
        );
        // y^2 = x^3 against y^2 = 2x^3 (shared tangent): ord(2t^6 - t^6·…) analysis gives 6
        assert_eq!(
            intersection_multiplicity(&germ(&[(2, 1)], &[(3, 1)]), &germ(&[(2, 2)], &[(3, 4)])),
            Ok(6)
        );
    }

    #[test]
    fn coincident_branches_are_reported() {
        let g = germ(&[(2, 1)], &[(3, 1)]);
        // the same cusp traversed as t -> -t
        let h = germ(&[(2, 1)], &[(3, -1)]);
        assert_eq!(
            intersection_multiplicity(&g, &g),
            Err(GermError::DistinctBranchesRequired)
        );
        assert_eq!(
            intersection_multiplicity(&g, &h),
            Err(GermError::DistinctBranchesRequired)
        );
        // y = x^2 traversed backwards, and y^2 = x^3 with x rescaled by -1
        let a = germ(&[(1, 1)], &[(2, 1)]);
        let b = germ(&[(1, -1)], &[(2, 1)]);
        assert_eq!(
            intersection_multiplicity(&a, &b),
            Err(GermError::DistinctBranchesRequired)
        );
        let c = germ(&[(2, -1)], &[(3, 1)]);
        let d = CurveGerm::plain(
            PowerSeries::from_int_terms(32, &[(2, 1)]),
            PowerSeries::monomial(32, 3, GaussianRational::i_pow(1)),
        )
        .unwrap();
        assert_eq!(
            intersection_multiplicity(&c, &d),
            Err(GermError::DistinctBranchesRequired)
        );
        // same exponents, coefficients not related by any rescaling
        let e = germ(&[(2, 1)], &[(3, 1), (4, 1)]);
        let f = germ(&[(2, 1)], &[(3, 1), (4, 2)]);
        assert_eq!(intersection_multiplicity(&e, &f), Ok(7));
    }

    #[test]
    fn tangency_beyond_precision_is_exhausted() {
        let a = CurveGerm::from_int_terms(8, &[(1, 1)], &[]);
        let b = CurveGerm::from_int_terms(12, &[(1, 1)], &[(10, 1)]);
        assert!(matches!(
            intersection_multiplicity(&a, &b),
            Err(GermError::PrecisionExhausted { .. })
        ));
        let b = b.with_truncation(16).unwrap();
        let a = a.with_truncation(16).unwrap();
        assert_eq!(intersection_multiplicity(&a, &b), Ok(10));
    }
}
