use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GermError;
use crate::exact::{GaussianRational, Rational};

/// Truncated power series `Σ_{k<N} a_k z^k + O(z^N)` over `Q(i)`.
///
/// Coefficients are stored densely up to the truncation; equality compares
/// up to the smaller of the two truncations.
#[derive(Clone)]
pub struct PowerSeries {
    coeffs: Vec<GaussianRational>,
}

impl PowerSeries {
    pub fn zero(trunc: usize) -> Self {
        assert!(trunc >= 1, "truncation must be at least 1");
        PowerSeries {
            coeffs: vec![GaussianRational::zero(); trunc],
        }
    }

    pub fn from_terms<I>(trunc: usize, terms: I) -> Result<Self, GermError>
    where
        I: IntoIterator<Item = (usize, GaussianRational)>,
    {
        if trunc == 0 {
            return Err(GermError::Invalid("truncation must be at least 1".into()));
        }
        let mut s = PowerSeries::zero(trunc);
        for (e, c) in terms {
            if e >= trunc {
                return Err(GermError::Invalid(format!("exponent {e} outside truncation {trunc}")));
            }
            s.coeffs[e] += &c;
        }
        Ok(s)
    }

    /// Series with integer coefficients, `(exponent, coefficient)` pairs.
    pub fn from_int_terms(trunc: usize, terms: &[(usize, i64)]) -> Self {
        Self::from_terms(trunc, terms.iter().map(|&(e, c)| (e, GaussianRational::from_int(c))))
            .expect("exponents inside truncation")
    }

    pub fn monomial(trunc: usize, exp: usize, coeff: GaussianRational) -> Self {
        let mut s = PowerSeries::zero(trunc);
        if exp < trunc {
            s.coeffs[exp] = coeff;
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &GaussianRational {
        static ZERO: std::sync::OnceLock<GaussianRational> = std::sync::OnceLock::new();
        self.coeffs
            .get(k)
            .unwrap_or_else(|| ZERO.get_or_init(GaussianRational::zero))
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &GaussianRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn support(&self) -> Vec<usize> {
        self.terms().map(|(e, _)| e).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_zero)
    }

    /// Least exponent with a nonzero coefficient.
    pub fn order(&self) -> Result<usize, GermError> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(GermError::ZeroToPrecision { trunc: self.trunc() })
    }

    /// Same terms, new truncation; terms at or above `trunc` are dropped.
    pub fn with_truncation(&self, trunc: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(trunc.max(1), GaussianRational::zero());
        PowerSeries { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.trunc().min(rhs.trunc());
        PowerSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.trunc().min(rhs.trunc());
        PowerSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Product, known modulo the smaller truncation.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.trunc().min(rhs.trunc());
        PowerSeries {
            coeffs: mul_trunc(&self.coeffs, &rhs.coeffs, n),
        }
    }

    /// Multiplies each coefficient `a_k` by `f(k)`.
    pub fn map_coeffs(&self, mut f: impl FnMut(usize, &GaussianRational) -> GaussianRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| f(k, c)).collect(),
        }
    }

    /// Formal derivative; loses one order of precision.
    pub fn derivative(&self) -> Self {
        let n = self.trunc();
        if n <= 1 {
            return PowerSeries::zero(1);
        }
        PowerSeries {
            coeffs: (1..n)
                .map(|k| self.coeffs[k].scale(&Rational::integer(k as i64)))
                .collect(),
        }
    }

    /// `self^alpha` for a series with constant term 1.
    pub fn pow_rational(&self, alpha: &Rational) -> Result<Self, GermError> {
        if !self.coeffs[0].is_one() {
            return Err(GermError::Invalid("rational power needs constant term 1".into()));
        }
        let n = self.trunc();
        let mut g = vec![GaussianRational::zero(); n];
        g[0] = GaussianRational::one();
        // f g' = α f' g, solved term by term
        let alpha_plus_one = alpha + Rational::one();
        for k in 1..n {
            let mut acc = GaussianRational::zero();
            for j in 1..=k {
                let fj = &self.coeffs[j];
                if fj.is_zero() || g[k - j].is_zero() {
                    continue;
                }
                let w = &alpha_plus_one * Rational::integer(j as i64) - Rational::integer(k as i64);
                acc += &(fj * &g[k - j]).scale(&w);
            }
            g[k] = acc.scale(&Rational::frac(1, k as i64));
        }
        Ok(PowerSeries { coeffs: g })
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self, GermError> {
        let c0inv = self.coeffs[0]
            .inv()
            .map_err(|_| GermError::Invalid("series with zero constant term is not a unit".into()))?;
        let n = self.trunc();
        let mut g = vec![GaussianRational::zero(); n];
        g[0] = c0inv.clone();
        for k in 1..n {
            let mut acc = GaussianRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !g[k - j].is_zero() {
                    acc += &(&self.coeffs[j] * &g[k - j]);
                }
            }
            g[k] = -(&acc * &c0inv);
        }
        Ok(PowerSeries { coeffs: g })
    }

    /// Drops the first `k` coefficients: `(self - low terms) / z^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        let coeffs: Vec<_> = self.coeffs.iter().skip(k).cloned().collect();
        if coeffs.is_empty() {
            PowerSeries::zero(1)
        } else {
            PowerSeries { coeffs }
        }
    }
}

/// Truncated product of two dense coefficient vectors.
pub(crate) fn mul_trunc(a: &[GaussianRational], b: &[GaussianRational], n: usize) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    out
}

impl PartialEq for PowerSeries {
    fn eq(&self, other: &Self) -> bool {
        let n = self.trunc().min(other.trunc());
        self.coeffs[..n] == other.coeffs[..n]
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})z^{e}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.trunc())
    }
}

fn default_trunc() -> usize {
    super::DEFAULT_TRUNCATION
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    #[serde(default = "default_trunc")]
    trunc: usize,
    terms: Vec<(usize, CoeffRepr)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Gaussian(GaussianRational),
    Real(Rational),
}

impl Serialize for PowerSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            trunc: self.trunc(),
            terms: self.terms().map(|(e, c)| (e, CoeffRepr::Gaussian(c.clone()))).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PowerSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        let terms = repr.terms.into_iter().map(|(e, c)| match c {
            CoeffRepr::Gaussian(g) => (e, g),
            CoeffRepr::Real(r) => (e, GaussianRational::real(r)),
        });
        PowerSeries::from_terms(repr.trunc, terms).map_err(serde::de::Error::custom)
    }
}
