//! The cone model `X_(p,q)`: a rational homology class `[C_0]` with
//! `C_0·C_0 = p/(p+q)`, singular points `x` of type `(p+q, p)` and `x'` of
//! type `(p, q')`, the curves `C_0`, `C_0'` and a generic member `C_λ`,
//! and the numerical checks made on them.

use serde::Serialize;
use thiserror::Error;

use crate::chern_index::{index_dimension, kawasaki_index, IsotropyWeights};
use crate::curvecalc::{
    adjunction_report, algebraic_intersection, c_pairing, intersection_report, match_stations, verdict_from,
    virtual_genus, AdjunctionReport, AmbientModel, CurveClass, CurveConfig, CurveError, DomainPoint,
    EmbeddednessVerdict, GermData, IntersectionReport, LambdaSpec, SingularPoint, Station,
};
use crate::exact::{gcd, Rational};
use crate::germ::DEFAULT_TRUNCATION;
use crate::lens::{allowed_q_set, cobordism_congruence, CongruenceRecord, SingularityType};
use crate::surface::{orbifold_genus, OrbifoldSurface};

pub const POINT_X: &str = "x";
pub const POINT_X_PRIME: &str = "x'";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WpsError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no curve of class [C_0]/p through both singular points: index is not integral for (p,q,q') = ({p},{q},{q_prime})")]
    Disallowed { p: i64, q: i64, q_prime: i64 },
    #[error(transparent)]
    Curve(#[from] CurveError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WpsModel {
    pub p: i64,
    pub q: i64,
    pub q_prime: i64,
    pub ambient: AmbientModel,
    pub congruence: CongruenceRecord,
}

pub fn build_model(p: i64, q: i64, q_prime: i64) -> Result<WpsModel, WpsError> {
    if p < 2 || !(1..p).contains(&q) || !(1..p).contains(&q_prime) || gcd(p, q) != 1 || gcd(p, q_prime) != 1 {
        return Err(WpsError::InvalidParameters(format!(
            "need 0 < q, q' < p with gcd(p,q) = gcd(p,q') = 1, got ({p},{q},{q_prime})"
        )));
    }
    let ty = |a, b| SingularityType::new(a, b).map_err(|e| WpsError::InvalidParameters(e.to_string()));
    let ambient = AmbientModel::new(
        vec![vec![Rational::frac(p, p + q)]],
        vec![Rational::frac(2 * p + q + 1, p + q)],
        vec![
            SingularPoint {
                id: POINT_X.into(),
                kind: ty(p + q, p)?,
            },
            SingularPoint {
                id: POINT_X_PRIME.into(),
                kind: ty(p, q_prime)?,
            },
        ],
    )?;
    let congruence = cobordism_congruence(p, q, q_prime).map_err(|e| WpsError::InvalidParameters(e.to_string()))?;
    Ok(WpsModel {
        p,
        q,
        q_prime,
        ambient,
        congruence,
    })
}

fn line_u() -> GermData {
    GermData::from_int_terms(DEFAULT_TRUNCATION, &[(1, 1)], &[])
}

fn line_v() -> GermData {
    GermData::from_int_terms(DEFAULT_TRUNCATION, &[], &[(1, 1)])
}

fn station(id: &str, order: i64, label: &str, germ: GermData) -> Station {
    Station {
        ambient_point: id.into(),
        isotropy_order: order,
        points: vec![DomainPoint {
            label: label.into(),
            order,
            germ,
            lambda: LambdaSpec::default(),
        }],
        tag: None,
    }
}

/// `C_0 = {z_2 = 0}`: a sphere with one point of order `p+q`, embedded.
pub fn c0_config(m: &WpsModel) -> CurveConfig {
    let (p, q) = (m.p, m.q);
    CurveConfig::new(
        Some("C0".into()),
        m.ambient.clone(),
        OrbifoldSurface::sphere(vec![p + q]).expect("order >= 2"),
        CurveClass {
            coords: vec![Rational::one()],
            multiplicity: 1,
        },
        vec![station(POINT_X, p + q, "z0", line_u())],
        vec![],
    )
    .expect("C0 data is consistent")
}

/// Local form of `C_0'` at `x'`: `(w(z), z)` with `ρ(μ_p) = μ_p^{l'}`
/// (case A), or `(z, w(z))` with `ρ = id` (case B).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LocalForm {
    A,
    B,
}

/// Case A when its index is integral, else case B, else disallowed.
pub fn c0prime_form(m: &WpsModel) -> Result<LocalForm, WpsError> {
    if m.congruence.case_a_integral {
        Ok(LocalForm::A)
    } else if m.congruence.case_b_integral {
        Ok(LocalForm::B)
    } else {
        Err(WpsError::Disallowed {
            p: m.p,
            q: m.q,
            q_prime: m.q_prime,
        })
    }
}

/// The curve of class `[C_0]/p` through `x` and `x'`.
pub fn c0prime_config(m: &WpsModel) -> Result<CurveConfig, WpsError> {
    c0prime_config_with(m, c0prime_form(m)?)
}

/// `C_0'` with a prescribed local form at `x'`, whether or not its index
/// is integral.
pub fn c0prime_config_with(m: &WpsModel, form: LocalForm) -> Result<CurveConfig, WpsError> {
    let (p, q) = (m.p, m.q);
    let at_x_prime = match form {
        LocalForm::A => line_v(),
        LocalForm::B => line_u(),
    };
    Ok(CurveConfig::new(
        Some("C0'".into()),
        m.ambient.clone(),
        OrbifoldSurface::sphere(vec![p + q, p]).expect("orders >= 2"),
        CurveClass {
            coords: vec![Rational::frac(1, p)],
            multiplicity: 1,
        },
        vec![
            station(POINT_X, p + q, "z0", line_v()),
            station(POINT_X_PRIME, p, "z0'", at_x_prime),
        ],
        vec![],
    )?)
}

/// A generic member of class `[C_0]` with local form `(z, z^p)` at `x`.
pub fn c_lambda_config(m: &WpsModel) -> CurveConfig {
    let (p, q) = (m.p, m.q);
    let germ = GermData::from_int_terms(DEFAULT_TRUNCATION, &[(1, 1)], &[(p as usize, 1)]);
    CurveConfig::new(
        Some("C_lambda".into()),
        m.ambient.clone(),
        OrbifoldSurface::sphere(vec![p + q]).expect("order >= 2"),
        CurveClass {
            coords: vec![Rational::one()],
            multiplicity: 1,
        },
        vec![station(POINT_X, p + q, "w0", germ)],
        vec![],
    )
    .expect("C_lambda data is consistent")
}

/// `d` from the isotropy weights of every orbifold point of the domain,
/// read off the equivariant germs.
pub fn kawasaki_from_config(c: &CurveConfig) -> Result<Rational, CurveError> {
    let mut stations = Vec::new();
    for st in &c.stations {
        let group = c.ambient.point_type(&st.ambient_point)?;
        for pt in &st.points {
            if pt.order == 1 {
                continue;
            }
            let germ = crate::germ::CurveGerm::new(pt.germ.u.clone(), pt.germ.v.clone(), group, pt.order)?;
            let (w1, w2) = germ.isotropy_weights();
            stations.push(IsotropyWeights::new(pt.order, vec![w1, w2]).expect("order >= 1"));
        }
    }
    Ok(kawasaki_index(&-c_pairing(c), c.domain.genus(), &stations))
}

/// `g(r) = ((p/(p+q)) r^2 - ((2p+q+1)/(p+q)) r)/2 + 1`, the virtual genus of a
/// curve of class `r[C_0]`.
pub fn genus_of_fraction(p: i64, q: i64, r: &Rational) -> Rational {
    let a = Rational::frac(p, p + q) * r * r;
    let b = Rational::frac(2 * p + q + 1, p + q) * r;
    (a - b) / Rational::integer(2) + Rational::one()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub r: Rational,
    pub g: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusProfile {
    pub rows: Vec<ProfileRow>,
    pub strictly_decreasing: bool,
    pub g_at_one_over_p: Rational,
    /// `(1 - 1/(p+q))/2 + (1 - 1/p)/2`.
    pub expected_maximum: Rational,
    pub maximum_matches: bool,
}

impl GenusProfile {
    pub fn holds(&self) -> bool {
        self.strictly_decreasing && self.maximum_matches
    }
}

/// `{k/10 : 1 <= k <= 10} ∪ {1/p}`, ascending.
pub fn default_samples(p: i64) -> Vec<Rational> {
    let mut s: Vec<Rational> = (1..=10).map(|k| Rational::frac(k, 10)).collect();
    s.push(Rational::frac(1, p));
    s.sort();
    s.dedup();
    s
}

pub fn genus_bound_profile(m: &WpsModel, samples: &[Rational]) -> Result<GenusProfile, WpsError> {
    if samples.windows(2).any(|w| w[0] >= w[1]) {
        return Err(WpsError::InvalidParameters("samples must be strictly ascending".into()));
    }
    if samples.iter().any(|r| !r.is_positive() || *r > Rational::one()) {
        return Err(WpsError::InvalidParameters("samples must lie in (0, 1]".into()));
    }
    let (p, q) = (m.p, m.q);
    let rows: Vec<ProfileRow> = samples
        .iter()
        .map(|r| ProfileRow {
            r: r.clone(),
            g: genus_of_fraction(p, q, r),
        })
        .collect();
    let strictly_decreasing = rows.windows(2).all(|w| w[0].g > w[1].g);
    let g_at_one_over_p = genus_of_fraction(p, q, &Rational::frac(1, p));
    let half = Rational::frac(1, 2);
    let expected_maximum =
        &half * (Rational::one() - Rational::frac(1, p + q)) + &half * (Rational::one() - Rational::frac(1, p));
    Ok(GenusProfile {
        rows,
        strictly_decreasing,
        maximum_matches: g_at_one_over_p == expected_maximum,
        g_at_one_over_p,
        expected_maximum,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniquenessCheck {
    /// Algebraic self-intersection of a curve of class `[C_0]/p`.
    pub self_intersection: Rational,
    /// Lower bound from the intersection formula for two distinct such curves.
    pub local_lower_bound: Rational,
    pub holds: bool,
}

pub fn uniqueness_check(p: i64, q: i64) -> UniquenessCheck {
    let self_intersection = Rational::frac(1, p) * Rational::frac(1, p) * Rational::frac(p, p + q);
    let local_lower_bound = Rational::frac(1, p + q) + Rational::frac(1, p);
    UniquenessCheck {
        holds: self_intersection < local_lower_bound,
        self_intersection,
        local_lower_bound,
    }
}

/// `1/(p(p+q)) < 1/(p+q) + 1/p`.
pub fn uniqueness_inequality(m: &WpsModel) -> bool {
    uniqueness_check(m.p, m.q).holds
}

/// Euler number `1 + q/p` of the Seifert fibration of `L(p+q, p)`.
pub fn seifert_euler(m: &WpsModel) -> Rational {
    Rational::one() + Rational::frac(m.q, m.p)
}

/// Self-intersection of the class meeting `C_0` once, transversally.
pub fn section_self_intersection(m: &WpsModel) -> Rational {
    let c0 = &m.ambient.pairing()[0][0];
    let r = c0.recip().expect("pairing is nonzero");
    &r * &r * c0
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveSection {
    pub class: Rational,
    pub self_intersection: Rational,
    pub c_pairing: Rational,
    pub orbifold_genus: Rational,
    pub virtual_genus: Rational,
    pub adjunction: AdjunctionReport,
    pub embeddedness: EmbeddednessVerdict,
    pub kawasaki_d: Rational,
    pub index_dimension: Option<Rational>,
}

fn curve_section(c: &CurveConfig) -> Result<CurveSection, CurveError> {
    let adjunction = adjunction_report(c)?;
    let kawasaki_d = kawasaki_from_config(c)?;
    Ok(CurveSection {
        class: c.class.coords[0].clone(),
        self_intersection: algebraic_intersection(c, c)?,
        c_pairing: c_pairing(c),
        orbifold_genus: orbifold_genus(&c.domain),
        virtual_genus: virtual_genus(c),
        embeddedness: verdict_from(&adjunction)?,
        adjunction,
        index_dimension: index_dimension(&kawasaki_d),
        kawasaki_d,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct C0PrimeSection {
    pub local_form: LocalForm,
    #[serde(flatten)]
    pub curve: CurveSection,
    pub meets_c0: IntersectionReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WpsReport {
    pub p: i64,
    pub q: i64,
    pub q_prime: i64,
    pub type_x: SingularityType,
    pub type_x_prime: SingularityType,
    #[serde(rename = "C0_self_intersection")]
    pub c0_self_intersection: Rational,
    #[serde(rename = "c1_TX_C0")]
    pub c1_tx_c0: Rational,
    #[serde(rename = "c1_KX_C0")]
    pub c1_kx_c0: Rational,
    #[serde(rename = "C0_orbifold_genus")]
    pub c0_orbifold_genus: Rational,
    pub seifert_euler: Rational,
    pub seifert_section_self_intersection: Rational,
    #[serde(rename = "C0")]
    pub c0: CurveSection,
    pub congruence: CongruenceRecord,
    pub allowed_q_prime: Vec<i64>,
    #[serde(rename = "C0_prime")]
    pub c0_prime: Option<C0PrimeSection>,
    /// The case B curve when both local forms have integral index.
    #[serde(rename = "C0_prime_case_b", skip_serializing_if = "Option::is_none")]
    pub c0_prime_case_b: Option<C0PrimeSection>,
    #[serde(rename = "C_lambda_C0")]
    pub c_lambda_c0: IntersectionReport,
    #[serde(rename = "C_lambda_C0_prime")]
    pub c_lambda_c0_prime: Option<IntersectionReport>,
    pub genus_bound_profile: GenusProfile,
    pub uniqueness: UniquenessCheck,
}

impl WpsReport {
    /// Every identity in the dossier holds.
    pub fn holds(&self) -> bool {
        let c0_ok = self.c0.adjunction.holds
            && self.c0.embeddedness == EmbeddednessVerdict::EmbeddedSuborbifold
            && self.c0.index_dimension == Some(Rational::integer(6));
        let section_ok = |s: &C0PrimeSection| {
            s.curve.adjunction.holds
                && s.curve.embeddedness == EmbeddednessVerdict::EmbeddedSuborbifold
                && s.meets_c0.holds
        };
        let c0p_ok =
            self.c0_prime.as_ref().is_none_or(section_ok) && self.c0_prime_case_b.as_ref().is_none_or(section_ok);
        c0_ok
            && c0p_ok
            && self.c_lambda_c0.holds
            && self.c_lambda_c0_prime.as_ref().is_none_or(|r| r.holds)
            && self.seifert_euler == self.seifert_section_self_intersection
            && self.genus_bound_profile.holds()
            && self.uniqueness.holds
    }
}

pub fn report(p: i64, q: i64, q_prime: i64) -> Result<WpsReport, WpsError> {
    let m = build_model(p, q, q_prime)?;
    let c0 = c0_config(&m);
    let c_lambda = c_lambda_config(&m);
    let c0_prime_cfg = match c0prime_config(&m) {
        Ok(c) => Some(c),
        Err(WpsError::Disallowed { .. }) => None,
        Err(e) => return Err(e),
    };
    let meet = |a: &CurveConfig, b: &CurveConfig| intersection_report(a, b, &match_stations(a, b));
    let section = |form: LocalForm, c: &CurveConfig| -> Result<C0PrimeSection, WpsError> {
        Ok(C0PrimeSection {
            local_form: form,
            curve: curve_section(c)?,
            meets_c0: meet(c, &c0)?,
        })
    };
    let c0_prime = match &c0_prime_cfg {
        Some(c) => Some(section(c0prime_form(&m)?, c)?),
        None => None,
    };
    let c0_prime_case_b = if m.congruence.case_a_integral && m.congruence.case_b_integral {
        Some(section(LocalForm::B, &c0prime_config_with(&m, LocalForm::B)?)?)
    } else {
        None
    };
    let c_lambda_c0_prime = c0_prime_cfg.as_ref().map(|c| meet(&c_lambda, c)).transpose()?;
    let c0_section = curve_section(&c0)?;
    Ok(WpsReport {
        p,
        q,
        q_prime,
        type_x: m.ambient.point_type(POINT_X)?,
        type_x_prime: m.ambient.point_type(POINT_X_PRIME)?,
        c0_self_intersection: c0_section.self_intersection.clone(),
        c1_tx_c0: -c0_section.c_pairing.clone(),
        c1_kx_c0: c0_section.c_pairing.clone(),
        c0_orbifold_genus: c0_section.orbifold_genus.clone(),
        seifert_euler: seifert_euler(&m),
        seifert_section_self_intersection: section_self_intersection(&m),
        c0: c0_section,
        allowed_q_prime: allowed_q_set(p, q)
            .map_err(|e| WpsError::InvalidParameters(e.to_string()))?
            .into_iter()
            .collect(),
        congruence: m.congruence.clone(),
        c0_prime,
        c0_prime_case_b,
        c_lambda_c0: meet(&c_lambda, &c0)?,
        c_lambda_c0_prime,
        genus_bound_profile: genus_bound_profile(&m, &default_samples(p))?,
        uniqueness: uniqueness_check(p, q),
    })
}
