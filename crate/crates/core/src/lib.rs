//! Exact invariants of pseudoholomorphic curves in almost-complex
//! 4-orbifolds: local germ intersection numbers, the orbifold adjunction and
//! intersection formulae, Chern and index arithmetic, and weighted chains.

pub mod chains;
pub mod chern_index;
pub mod cli;
pub mod curvecalc;
pub mod exact;
pub mod germ;
pub mod lens;
pub mod linalg;
pub mod surface;
pub mod sweep;
pub mod wps;
