//! Curve configurations in a 4-orbifold, and the adjunction and
//! intersection formulae evaluated from local germ data.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;
use crate::germ::{
    germ_orbit, self_intersection, translate_intersection, CurveGerm, GermError, GermTranslate, PowerSeries,
    MAX_TRUNCATION,
};
use crate::lens::SingularityType;
use crate::surface::{orbifold_genus, OrbifoldSurface};

/// Ambient point id for points with trivial isotropy.
pub const REGULAR: &str = "regular";

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("curves live in different ambient models")]
    AmbientMismatch,
    #[error("adjunction formula fails: g(C) = {lhs} but local data give {rhs}")]
    AdjunctionViolated { lhs: Box<Rational>, rhs: Box<Rational> },
    #[error("invalid ambient model: {0}")]
    InvalidModel(String),
    #[error("invalid curve configuration: {0}")]
    InvalidConfig(String),
    #[error("no domain point labelled {0:?}")]
    UnknownLabel(String),
    #[error(transparent)]
    Germ(#[from] GermError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPoint {
    pub id: String,
    #[serde(rename = "type")]
    pub kind: SingularityType,
}

/// Rational homology data of the ambient orbifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AmbientRepr", into = "AmbientRepr")]
pub struct AmbientModel {
    pairing: Vec<Vec<Rational>>,
    c1_vector: Vec<Rational>,
    singular_points: Vec<SingularPoint>,
}

#[derive(Serialize, Deserialize)]
struct AmbientRepr {
    h2_rank: usize,
    pairing: Vec<Vec<Rational>>,
    c1_vector: Vec<Rational>,
    #[serde(default)]
    singular_points: Vec<SingularPoint>,
}

impl TryFrom<AmbientRepr> for AmbientModel {
    type Error = CurveError;
    fn try_from(r: AmbientRepr) -> Result<Self, CurveError> {
        if r.pairing.len() != r.h2_rank {
            return Err(CurveError::InvalidModel(format!(
                "h2_rank is {} but the pairing has {} rows",
                r.h2_rank,
                r.pairing.len()
            )));
        }
        AmbientModel::new(r.pairing, r.c1_vector, r.singular_points)
    }
}

impl From<AmbientModel> for AmbientRepr {
    fn from(m: AmbientModel) -> Self {
        AmbientRepr {
            h2_rank: m.h2_rank(),
            pairing: m.pairing,
            c1_vector: m.c1_vector,
            singular_points: m.singular_points,
        }
    }
}

impl AmbientModel {
    pub fn new(
        pairing: Vec<Vec<Rational>>,
        c1_vector: Vec<Rational>,
        singular_points: Vec<SingularPoint>,
    ) -> Result<Self, CurveError> {
        let n = pairing.len();
        if n == 0 {
            return Err(CurveError::InvalidModel("h2_rank must be at least 1".into()));
        }
        if pairing.iter().any(|row| row.len() != n) {
            return Err(CurveError::InvalidModel("pairing must be square".into()));
        }
        let asymmetric = (0..n)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| pairing[i][j] != pairing[j][i]);
        if let Some((i, j)) = asymmetric {
            return Err(CurveError::InvalidModel(format!(
                "pairing is not symmetric at ({i},{j})"
            )));
        }
        if c1_vector.len() != n {
            return Err(CurveError::InvalidModel(format!(
                "c1_vector has length {}, expected {n}",
                c1_vector.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for sp in &singular_points {
            if sp.id == REGULAR || !seen.insert(sp.id.as_str()) {
                return Err(CurveError::InvalidModel(format!(
                    "duplicate or reserved point id {:?}",
                    sp.id
                )));
            }
        }
        Ok(AmbientModel {
            pairing,
            c1_vector,
            singular_points,
        })
    }

    pub fn h2_rank(&self) -> usize {
        self.pairing.len()
    }

    pub fn pairing(&self) -> &[Vec<Rational>] {
        &self.pairing
    }

    pub fn c1_vector(&self) -> &[Rational] {
        &self.c1_vector
    }

    pub fn singular_points(&self) -> &[SingularPoint] {
        &self.singular_points
    }

    /// Singularity type at an ambient point id, `REGULAR` being trivial.
    pub fn point_type(&self, id: &str) -> Result<SingularityType, CurveError> {
        if id == REGULAR {
            return Ok(SingularityType::trivial());
        }
        self.singular_points
            .iter()
            .find(|sp| sp.id == id)
            .map(|sp| sp.kind)
            .ok_or_else(|| CurveError::InvalidConfig(format!("unknown ambient point {id:?}")))
    }

    /// `aᵀ·Q·b` for the intersection form `Q`.
    pub fn pair(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                acc += ai * &self.pairing[i][j] * bj;
            }
        }
        acc
    }

    pub fn c1(&self, a: &[Rational]) -> Rational {
        a.iter().zip(&self.c1_vector).map(|(x, c)| x * c).sum()
    }
}

/// Homology class `[C]` and multiplicity `m_C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    pub coords: Vec<Rational>,
    pub multiplicity: i64,
}

/// Both components of a germ in JSON; the group and stabilizer come from
/// the surrounding station.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GermData {
    #[serde(rename = "U")]
    pub u: PowerSeries,
    #[serde(rename = "V")]
    pub v: PowerSeries,
}

impl GermData {
    pub fn from_int_terms(trunc: usize, u: &[(usize, i64)], v: &[(usize, i64)]) -> Self {
        GermData {
            u: PowerSeries::from_int_terms(trunc, u),
            v: PowerSeries::from_int_terms(trunc, v),
        }
    }

    fn build(&self, group: SingularityType, m: i64) -> Result<CurveGerm, GermError> {
        CurveGerm::new(self.u.clone(), self.v.clone(), group, m)
    }

    fn with_truncation(&self, trunc: usize) -> Self {
        GermData {
            u: self.u.with_truncation(trunc),
            v: self.v.with_truncation(trunc),
        }
    }
}

/// How `Λ(C)_z` is given: generated from the distinguished germ, or listed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaSpec {
    Keyword(LambdaKeyword),
    Explicit(Vec<GermData>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaKeyword {
    Generate,
}

impl Default for LambdaSpec {
    fn default() -> Self {
        LambdaSpec::Keyword(LambdaKeyword::Generate)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DomainPoint {
    pub label: String,
    /// Order `m_z` of the isotropy group of the domain point.
    pub order: i64,
    pub germ: GermData,
    #[serde(default)]
    pub lambda: LambdaSpec,
}

/// Domain points sharing one image point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Station {
    pub ambient_point: String,
    pub isotropy_order: i64,
    pub points: Vec<DomainPoint>,
    /// Matches stations across curves for the intersection formula.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
}

/// A double point at a point of trivial isotropy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularDoublePoint {
    pub labels: [String; 2],
    pub germs: [GermData; 2],
}

impl RegularDoublePoint {
    fn station(&self, m_sigma: i64) -> Station {
        let points = self
            .labels
            .iter()
            .zip(&self.germs)
            .map(|(label, germ)| DomainPoint {
                label: label.clone(),
                order: m_sigma,
                germ: germ.clone(),
                lambda: LambdaSpec::default(),
            })
            .collect();
        Station {
            ambient_point: REGULAR.into(),
            isotropy_order: 1,
            points,
            tag: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ConfigRepr", into = "ConfigRepr")]
pub struct CurveConfig {
    pub name: Option<String>,
    pub ambient: AmbientModel,
    pub domain: OrbifoldSurface,
    pub class: CurveClass,
    pub stations: Vec<Station>,
    pub regular_double_points: Vec<RegularDoublePoint>,
}

#[derive(Serialize, Deserialize)]
struct ConfigRepr {
    schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    ambient: AmbientModel,
    domain: OrbifoldSurface,
    class: CurveClass,
    #[serde(default)]
    stations: Vec<Station>,
    #[serde(default)]
    regular_double_points: Vec<RegularDoublePoint>,
}

impl TryFrom<ConfigRepr> for CurveConfig {
    type Error = CurveError;
    fn try_from(r: ConfigRepr) -> Result<Self, CurveError> {
        if r.schema != SCHEMA_VERSION {
            return Err(CurveError::InvalidConfig(format!(
                "unsupported schema {}, expected {SCHEMA_VERSION}",
                r.schema
            )));
        }
        CurveConfig::new(
            r.name,
            r.ambient,
            r.domain,
            r.class,
            r.stations,
            r.regular_double_points,
        )
    }
}

impl From<CurveConfig> for ConfigRepr {
    fn from(c: CurveConfig) -> Self {
        ConfigRepr {
            schema: SCHEMA_VERSION,
            name: c.name,
            ambient: c.ambient,
            domain: c.domain,
            class: c.class,
            stations: c.stations,
            regular_double_points: c.regular_double_points,
        }
    }
}

fn invalid(msg: impl Into<String>) -> CurveError {
    CurveError::InvalidConfig(msg.into())
}

impl CurveConfig {
    pub fn new(
        name: Option<String>,
        ambient: AmbientModel,
        domain: OrbifoldSurface,
        class: CurveClass,
        stations: Vec<Station>,
        regular_double_points: Vec<RegularDoublePoint>,
    ) -> Result<Self, CurveError> {
        let cfg = CurveConfig {
            name,
            ambient,
            domain,
            class,
            stations,
            regular_double_points,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CurveError> {
        if self.class.coords.len() != self.ambient.h2_rank() {
            return Err(invalid(format!(
                "class has {} coordinates, ambient rank is {}",
                self.class.coords.len(),
                self.ambient.h2_rank()
            )));
        }
        if self.class.coords.iter().all(Rational::is_zero) {
            return Err(invalid("class must be nonzero"));
        }
        if self.class.multiplicity != self.domain.m_sigma() {
            return Err(invalid(format!(
                "multiplicity {} differs from the regular isotropy order {} of the domain",
                self.class.multiplicity,
                self.domain.m_sigma()
            )));
        }
        let m_sigma = self.domain.m_sigma();
        if !self.regular_double_points.is_empty() && m_sigma != 1 {
            return Err(invalid("regular double points need a reduced domain"));
        }

        let mut labels = BTreeSet::new();
        let mut orbifold_orders = Vec::new();
        for st in self.all_stations() {
            let group = self.ambient.point_type(&st.ambient_point)?;
            if st.isotropy_order != group.order() {
                return Err(invalid(format!(
                    "station at {:?} has isotropy order {}, the point has order {}",
                    st.ambient_point,
                    st.isotropy_order,
                    group.order()
                )));
            }
            if st.points.is_empty() {
                return Err(invalid(format!(
                    "station at {:?} has no domain points",
                    st.ambient_point
                )));
            }
            for pt in &st.points {
                if !labels.insert(pt.label.clone()) {
                    return Err(invalid(format!("duplicate domain label {:?}", pt.label)));
                }
                if pt.order < 1 || pt.order % m_sigma != 0 {
                    return Err(invalid(format!(
                        "point {:?} has order {}, not a multiple of {m_sigma}",
                        pt.label, pt.order
                    )));
                }
                if pt.order != m_sigma {
                    orbifold_orders.push(pt.order);
                }
                lambda_of(group, pt)?;
            }
        }
        let mut expected = self.domain.orders().to_vec();
        expected.sort_unstable();
        orbifold_orders.sort_unstable();
        if expected != orbifold_orders {
            return Err(invalid(format!(
                "domain orbifold points {expected:?} do not match station points {orbifold_orders:?}"
            )));
        }
        Ok(())
    }

    /// Stations followed by the regular double points as two-point stations.
    pub fn all_stations(&self) -> Vec<Station> {
        let m = self.domain.m_sigma();
        self.stations
            .iter()
            .cloned()
            .chain(self.regular_double_points.iter().map(|d| d.station(m)))
            .collect()
    }

    /// The same configuration with every series re-truncated at `trunc`.
    pub fn with_truncation(&self, trunc: usize) -> Result<Self, CurveError> {
        let mut out = self.clone();
        for st in &mut out.stations {
            for pt in &mut st.points {
                retruncate_point(pt, trunc);
            }
        }
        for d in &mut out.regular_double_points {
            for g in &mut d.germs {
                *g = g.with_truncation(trunc);
            }
        }
        out.validate()?;
        Ok(out)
    }

    /// Smallest truncation among all germs.
    pub fn min_truncation(&self) -> usize {
        self.all_stations()
            .iter()
            .flat_map(|st| st.points.iter())
            .flat_map(|pt| {
                let mut t = vec![pt.germ.u.trunc(), pt.germ.v.trunc()];
                if let LambdaSpec::Explicit(list) = &pt.lambda {
                    t.extend(list.iter().flat_map(|g| [g.u.trunc(), g.v.trunc()]));
                }
                t
            })
            .min()
            .unwrap_or(MAX_TRUNCATION)
    }

    fn find(&self, station: &Station, label: &str) -> Result<(SingularityType, DomainPoint), CurveError> {
        let group = self.ambient.point_type(&station.ambient_point)?;
        station
            .points
            .iter()
            .find(|p| p.label == label)
            .map(|p| (group, p.clone()))
            .ok_or_else(|| CurveError::UnknownLabel(label.into()))
    }
}

fn retruncate_point(pt: &mut DomainPoint, trunc: usize) {
    pt.germ = pt.germ.with_truncation(trunc);
    if let LambdaSpec::Explicit(list) = &mut pt.lambda {
        for g in list {
            *g = g.with_truncation(trunc);
        }
    }
}

/// `Λ(C)_z` for one domain point, as translates of explicit germs.
fn lambda_of(group: SingularityType, pt: &DomainPoint) -> Result<Vec<GermTranslate>, CurveError> {
    let germ = pt.germ.build(group, pt.order)?;
    match &pt.lambda {
        LambdaSpec::Keyword(LambdaKeyword::Generate) => Ok(germ_orbit(&germ)?.germs),
        LambdaSpec::Explicit(list) => {
            let expected = group.order() / pt.order;
            if list.len() as i64 != expected {
                return Err(invalid(format!(
                    "point {:?} lists {} local representatives, expected {expected}",
                    pt.label,
                    list.len()
                )));
            }
            let members = list
                .iter()
                .map(|g| g.build(group, pt.order).map(GermTranslate::identity))
                .collect::<Result<Vec<_>, _>>()?;
            if !members.iter().any(|t| t.base == germ) {
                return Err(invalid(format!(
                    "the distinguished germ of {:?} is not among its local representatives",
                    pt.label
                )));
            }
            Ok(members)
        }
    }
}

/// `C·C' = (m_C m_C')^{-1} [C]ᵀ Q [C']`.
pub fn algebraic_intersection(c1: &CurveConfig, c2: &CurveConfig) -> Result<Rational, CurveError> {
    if c1.ambient != c2.ambient {
        return Err(CurveError::AmbientMismatch);
    }
    let m = Rational::integer(c1.class.multiplicity * c2.class.multiplicity);
    Ok(c1.ambient.pair(&c1.class.coords, &c2.class.coords) / m)
}

/// `c(C)` for `c = -c_1(TX)`, with the `1/m_C` normalization of `PD(C)`.
pub fn c_pairing(c: &CurveConfig) -> Rational {
    -(c.ambient.c1(&c.class.coords) / Rational::integer(c.class.multiplicity))
}

/// `g(C) = (C·C + c(C))/2 + 1/m_C`.
pub fn virtual_genus(c: &CurveConfig) -> Rational {
    let self_int = algebraic_intersection(c, c).expect("same ambient");
    (self_int + c_pairing(c)) / Rational::integer(2) + Rational::frac(1, c.class.multiplicity)
}

fn cross_sum(a: &[GermTranslate], b: &[GermTranslate]) -> Result<u64, GermError> {
    let mut total = 0;
    for x in a {
        for y in b {
            total += translate_intersection(x, y)?;
        }
    }
    Ok(total)
}

/// `k_[z,z'] = |G|^{-1} Σ_{α,α'} C_{z,α}·C_{z',α'}` for two domain points
/// with the same image.
pub fn local_pair_contribution(c: &CurveConfig, station: &Station, z: &str, z2: &str) -> Result<Rational, CurveError> {
    if z == z2 {
        return Err(invalid("pair contribution needs two distinct domain points"));
    }
    let (group, p1) = c.find(station, z)?;
    let (_, p2) = c.find(station, z2)?;
    let total = cross_sum(&lambda_of(group, &p1)?, &lambda_of(group, &p2)?)?;
    Ok(Rational::frac(total as i64, station.isotropy_order))
}

/// `k_z = (2|G|)^{-1} (Σ_α C_α·C_α + Σ_{α,β} C_α·C_β)`, where a term with
/// `α = β` is the local self-intersection number of `C_α`.
pub fn local_point_contribution(c: &CurveConfig, station: &Station, z: &str) -> Result<Rational, CurveError> {
    let (group, pt) = c.find(station, z)?;
    let lambda = lambda_of(group, &pt)?;
    let mut total = 0u64;
    for (i, a) in lambda.iter().enumerate() {
        total += 2 * self_intersection(&a.base)?;
        for (j, b) in lambda.iter().enumerate() {
            if i != j {
                total += translate_intersection(a, b)?;
            }
        }
    }
    Ok(Rational::frac(total as i64, 2 * station.isotropy_order))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Contribution {
    pub kind: ContributionKind,
    pub ambient_point: String,
    pub labels: Vec<String>,
    pub value: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ContributionKind {
    Pair,
    Point,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
    pub orbifold_genus: Rational,
    pub contributions: Vec<Contribution>,
}

/// Both sides of `g(C) = g_Σ + Σ k_[z,z'] + Σ k_z`.
pub fn adjunction_report(c: &CurveConfig) -> Result<AdjunctionReport, CurveError> {
    let lhs = virtual_genus(c);
    let g_sigma = orbifold_genus(&c.domain);
    let mut contributions = Vec::new();
    for st in c.all_stations() {
        for (i, a) in st.points.iter().enumerate() {
            for b in &st.points[i + 1..] {
                contributions.push(Contribution {
                    kind: ContributionKind::Pair,
                    ambient_point: st.ambient_point.clone(),
                    labels: vec![a.label.clone(), b.label.clone()],
                    value: local_pair_contribution(c, &st, &a.label, &b.label)?,
                });
            }
        }
        for a in &st.points {
            contributions.push(Contribution {
                kind: ContributionKind::Point,
                ambient_point: st.ambient_point.clone(),
                labels: vec![a.label.clone()],
                value: local_point_contribution(c, &st, &a.label)?,
            });
        }
    }
    let rhs = contributions.iter().fold(g_sigma.clone(), |acc, k| acc + &k.value);
    Ok(AdjunctionReport {
        holds: lhs == rhs,
        lhs,
        rhs,
        orbifold_genus: g_sigma,
        contributions,
    })
}

/// A pair of stations, one on each curve, sharing an image point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meeting {
    pub first: usize,
    pub second: usize,
}

/// Pairs stations by tag when both carry one, otherwise by a shared
/// singular ambient point.
pub fn match_stations(c1: &CurveConfig, c2: &CurveConfig) -> Vec<Meeting> {
    let mut out = Vec::new();
    for (i, a) in c1.stations.iter().enumerate() {
        for (j, b) in c2.stations.iter().enumerate() {
            let hit = match (&a.tag, &b.tag) {
                (Some(x), Some(y)) => x == y,
                _ => a.ambient_point != REGULAR && a.ambient_point == b.ambient_point,
            };
            if hit {
                out.push(Meeting { first: i, second: j });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub algebraic: Rational,
    pub local_sum: Rational,
    pub holds: bool,
    pub meetings: Vec<Contribution>,
}

/// Both sides of `C·C' = Σ k_(z,z')` over the given meetings.
pub fn intersection_report(
    c1: &CurveConfig,
    c2: &CurveConfig,
    meetings: &[Meeting],
) -> Result<IntersectionReport, CurveError> {
    let algebraic = algebraic_intersection(c1, c2)?;
    let mut terms = Vec::new();
    for m in meetings {
        let s1 = c1
            .stations
            .get(m.first)
            .ok_or_else(|| invalid(format!("no station {} on the first curve", m.first)))?;
        let s2 = c2
            .stations
            .get(m.second)
            .ok_or_else(|| invalid(format!("no station {} on the second curve", m.second)))?;
        let g1 = c1.ambient.point_type(&s1.ambient_point)?;
        let g2 = c2.ambient.point_type(&s2.ambient_point)?;
        if g1 != g2 {
            return Err(invalid(format!(
                "meeting stations sit at points of different types {:?} and {:?}",
                s1.ambient_point, s2.ambient_point
            )));
        }
        for a in &s1.points {
            for b in &s2.points {
                let total = cross_sum(&lambda_of(g1, a)?, &lambda_of(g2, b)?)?;
                terms.push(Contribution {
                    kind: ContributionKind::Pair,
                    ambient_point: s1.ambient_point.clone(),
                    labels: vec![a.label.clone(), b.label.clone()],
                    value: Rational::frac(total as i64, s1.isotropy_order),
                });
            }
        }
    }
    let local_sum: Rational = terms.iter().map(|t| t.value.clone()).sum();
    Ok(IntersectionReport {
        holds: algebraic == local_sum,
        algebraic,
        local_sum,
        meetings: terms,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum EmbeddednessVerdict {
    EmbeddedSuborbifold,
    Singular { defect: Rational },
}

/// `g(C) >= g_Σ`, with equality exactly for embedded suborbifolds.
pub fn embeddedness_verdict(c: &CurveConfig) -> Result<EmbeddednessVerdict, CurveError> {
    let report = adjunction_report(c)?;
    verdict_from(&report)
}

pub fn verdict_from(report: &AdjunctionReport) -> Result<EmbeddednessVerdict, CurveError> {
    if !report.holds {
        return Err(CurveError::AdjunctionViolated {
            lhs: Box::new(report.lhs.clone()),
            rhs: Box::new(report.rhs.clone()),
        });
    }
    if report.contributions.iter().all(|k| k.value.is_zero()) {
        Ok(EmbeddednessVerdict::EmbeddedSuborbifold)
    } else {
        Ok(EmbeddednessVerdict::Singular {
            defect: &report.rhs - &report.orbifold_genus,
        })
    }
}

/// Runs `f` at the configured truncation, doubling it up to
/// [`MAX_TRUNCATION`] while the failure is a precision failure.
pub fn with_precision_retry<T>(
    configs: &[&CurveConfig],
    start: Option<usize>,
    mut f: impl FnMut(&[CurveConfig]) -> Result<T, CurveError>,
) -> Result<T, CurveError> {
    let mut trunc = start;
    loop {
        let current = configs
            .iter()
            .map(|c| match trunc {
                Some(t) => c.with_truncation(t),
                None => Ok((*c).clone()),
            })
            .collect::<Result<Vec<_>, _>>()?;
        match f(&current) {
            Err(CurveError::Germ(e)) if e.is_precision() => {
                let now = trunc.unwrap_or_else(|| current.iter().map(CurveConfig::min_truncation).min().unwrap_or(1));
                if now >= MAX_TRUNCATION {
                    return Err(CurveError::Germ(e));
                }
                trunc = Some((now * 2).min(MAX_TRUNCATION));
            }
            other => return other,
        }
    }
}
