//! Batch runs over parameter grids, data-parallel when the `parallel`
//! feature is enabled. Output order never depends on scheduling.

use serde::Serialize;

use crate::chains::{boundary_squared_is_zero, homology_betti, random_complex};
use crate::chern_index::{index_integrality_scan, IndexScanRow};
use crate::exact::{gcd, Rational};
use crate::lens::allowed_q_set;
use crate::wps::{report, WpsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Executor {
    Sequential,
    /// Falls back to sequential execution without the `parallel` feature.
    #[default]
    Parallel,
}

impl Executor {
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Executor::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Executor::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            Executor::Parallel => items.iter().map(f).collect(),
        }
    }
}

/// Coprime `(p, q)` with `0 < q < p <= p_max`, in lexicographic order.
pub fn coprime_pairs(p_max: i64) -> Vec<(i64, i64)> {
    (2..=p_max)
        .flat_map(|p| (1..p).filter(move |&q| gcd(p, q) == 1).map(move |q| (p, q)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub p: i64,
    pub q: i64,
    #[serde(rename = "C0_self_intersection")]
    pub c0_self_intersection: Rational,
    #[serde(rename = "c1_KX_C0")]
    pub c1_kx_c0: Rational,
    #[serde(rename = "C0_orbifold_genus")]
    pub c0_orbifold_genus: Rational,
    pub seifert_euler: Rational,
    pub index_dimension: Option<Rational>,
    /// The `q'` for which `C_0'` exists and was checked.
    pub q_prime_checked: Vec<i64>,
    pub holds: bool,
}

/// One dossier per allowed `q'`, folded into a row per `(p, q)`.
pub fn sweep_row(p: i64, q: i64) -> Result<SweepRow, WpsError> {
    let allowed: Vec<i64> = allowed_q_set(p, q)
        .map_err(|e| WpsError::InvalidParameters(e.to_string()))?
        .into_iter()
        .collect();
    let mut holds = true;
    let mut base = None;
    for &qp in &allowed {
        let r = report(p, q, qp)?;
        holds &= r.holds() && r.c0_prime.is_some();
        if base.is_none() || qp == q {
            base = Some(r);
        }
    }
    let base = base.expect("q itself is always allowed");
    Ok(SweepRow {
        p,
        q,
        c0_self_intersection: base.c0_self_intersection,
        c1_kx_c0: base.c1_kx_c0,
        c0_orbifold_genus: base.c0_orbifold_genus,
        seifert_euler: base.seifert_euler,
        index_dimension: base.c0.index_dimension,
        q_prime_checked: allowed,
        holds,
    })
}

pub fn sweep(p_max: i64, exec: Executor) -> Result<Vec<SweepRow>, WpsError> {
    exec.map(&coprime_pairs(p_max), |&(p, q)| sweep_row(p, q))
        .into_iter()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanTable {
    pub p: i64,
    pub q: i64,
    pub rows: Vec<IndexScanRow>,
}

pub fn index_scan_sweep(p_max: i64, exec: Executor) -> Vec<ScanTable> {
    exec.map(&coprime_pairs(p_max), |&(p, q)| ScanTable {
        p,
        q,
        rows: index_integrality_scan(p, q).expect("coprime pair"),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexCheck {
    pub seed: u64,
    pub simplices: usize,
    pub boundary_squared_zero: bool,
    pub betti: Vec<usize>,
    pub underlying_betti: Vec<usize>,
}

impl ComplexCheck {
    pub fn holds(&self) -> bool {
        self.boundary_squared_zero && self.betti == self.underlying_betti
    }
}

/// Random weighted complexes with seeds `seed, seed+1, …`.
pub fn random_complex_checks(seed: u64, count: usize, max_simplices: usize, exec: Executor) -> Vec<ComplexCheck> {
    let seeds: Vec<u64> = (0..count as u64).map(|i| seed.wrapping_add(i)).collect();
    exec.map(&seeds, |&s| {
        let w = random_complex(s, max_simplices);
        ComplexCheck {
            seed: s,
            simplices: w.len(),
            boundary_squared_zero: boundary_squared_is_zero(&w),
            betti: homology_betti(&w),
            underlying_betti: homology_betti(&w.underlying()),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn executors_agree() {
        assert_eq!(sweep(7, Executor::Sequential), sweep(7, Executor::Parallel));
        assert_eq!(
            random_complex_checks(11, 8, 60, Executor::Sequential),
            random_complex_checks(11, 8, 60, Executor::Parallel)
        );
    }

    #[test]
    fn pairs() {
        assert_eq!(coprime_pairs(4), vec![(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]);
        assert!(sweep(9, Executor::default()).unwrap().iter().all(|r| r.holds));
    }
}
