//! Independent germ oracles. A branch with polynomial parametrization has a
//! polynomial implicit equation `F`; intersection numbers are then orders of
//! substitution, and δ comes from the polar `F_y`.
#![allow(dead_code)]

use orbicurve::exact::{FieldElem, GaussianRational, Rational};
use orbicurve::germ::{CurveGerm, PowerSeries};

type G = GaussianRational;
type Poly = Vec<G>;

/// Polynomial branch `t ↦ (x(t), y(t))`; one component must be a monomial
/// so that only `t = 0` reaches the origin.
#[derive(Debug, Clone)]
pub struct Branch {
    pub x: Vec<(usize, G)>,
    pub y: Vec<(usize, G)>,
}

pub fn int(terms: &[(usize, i64)]) -> Vec<(usize, G)> {
    terms.iter().map(|&(e, c)| (e, G::from_int(c))).collect()
}

impl Branch {
    pub fn new(x: &[(usize, i64)], y: &[(usize, i64)]) -> Self {
        Branch { x: int(x), y: int(y) }
    }

    pub fn germ(&self, trunc: usize) -> CurveGerm {
        let s = |t: &[(usize, G)]| PowerSeries::from_terms(trunc, t.iter().cloned()).unwrap();
        CurveGerm::plain(s(&self.x), s(&self.y)).unwrap()
    }

    fn dense(terms: &[(usize, G)]) -> Poly {
        let n = terms.iter().map(|t| t.0 + 1).max().unwrap_or(1);
        let mut p = vec![G::zero(); n];
        for (e, c) in terms {
            p[*e] = p[*e].add(c);
        }
        p
    }

    fn swapped(&self) -> Self {
        Branch {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![G::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

fn powers(p: &Poly, n: usize) -> Vec<Poly> {
    let mut out = vec![vec![G::one()]];
    for k in 1..=n {
        out.push(mul(&out[k - 1], p));
    }
    out
}

fn order(p: &Poly) -> Option<usize> {
    p.iter().position(|c| !c.is_zero())
}

/// Sparse bivariate polynomial `Σ c_ij x^i y^j`.
pub type Bivariate = Vec<((usize, usize), G)>;

/// One nonzero kernel vector of a dense matrix, if any.
fn kernel_vector(mut rows: Vec<Vec<G>>, ncols: usize) -> Option<Vec<G>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = FieldElem::inv(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut v = vec![G::zero(); ncols];
    v[free] = G::one();
    for (i, &c) in pivots.iter().enumerate() {
        v[c] = G::zero().sub(&rows[i][free]);
    }
    Some(v)
}

/// Implicit equation of least total degree vanishing on the branch.
pub fn implicit_equation(b: &Branch) -> Bivariate {
    let (x, y) = (Branch::dense(&b.x), Branch::dense(&b.y));
    let deg = x.len().max(y.len());
    for d in 1..=deg {
        let xs = powers(&x, d);
        let ys = powers(&y, d);
        let monomials: Vec<(usize, usize)> = (0..=d).flat_map(|i| (0..=d - i).map(move |j| (i, j))).collect();
        let cols: Vec<Poly> = monomials.iter().map(|&(i, j)| mul(&xs[i], &ys[j])).collect();
        let nrows = cols.iter().map(Vec::len).max().unwrap();
        let rows: Vec<Vec<G>> = (0..nrows)
            .map(|k| cols.iter().map(|c| c.get(k).cloned().unwrap_or_else(G::zero)).collect())
            .collect();
        if let Some(v) = kernel_vector(rows, monomials.len()) {
            return monomials.into_iter().zip(v).filter(|(_, c)| !c.is_zero()).collect();
        }
    }
    unreachable!("a plane polynomial curve of degree d has an equation of degree d")
}

fn substitute(f: &Bivariate, b: &Branch) -> Poly {
    let (x, y) = (Branch::dense(&b.x), Branch::dense(&b.y));
    let dx = f.iter().map(|((i, _), _)| *i).max().unwrap_or(0);
    let dy = f.iter().map(|((_, j), _)| *j).max().unwrap_or(0);
    let (xs, ys) = (powers(&x, dx), powers(&y, dy));
    let mut out: Poly = vec![G::zero()];
    for ((i, j), c) in f {
        let term: Poly = mul(&xs[*i], &ys[*j]).into_iter().map(|a| a.mul(c)).collect();
        if term.len() > out.len() {
            out.resize(term.len(), G::zero());
        }
        for (k, a) in term.into_iter().enumerate() {
            out[k] = out[k].add(&a);
        }
    }
    out
}

/// `ord_s F_1(x_2(s), y_2(s))`; `None` when the branches share a component.
pub fn intersection_oracle(b1: &Branch, b2: &Branch) -> Option<u64> {
    order(&substitute(&implicit_equation(b1), b2)).map(|k| k as u64)
}

/// δ from `I(F, F_y) = μ + I(F, x) - 1` and `μ = 2δ` for one branch.
pub fn delta_oracle(b: &Branch) -> u64 {
    let x = Branch::dense(&b.x);
    if order(&x).is_none() {
        return delta_oracle(&b.swapped());
    }
    let f = implicit_equation(b);
    let fy: Bivariate = f
        .iter()
        .filter(|((_, j), _)| *j > 0)
        .map(|((i, j), c)| ((*i, j - 1), c.mul(&G::from_int(*j as i64))))
        .collect();
    let polar = order(&substitute(&fy, b)).expect("reduced curve has a nonvanishing polar") as i64;
    let mu = polar - order(&x).unwrap() as i64 + 1;
    assert!(mu >= 0 && mu % 2 == 0, "Milnor number of a branch is even, got {mu}");
    (mu / 2) as u64
}

/// Branches of multiplicity at most 6, with a monomial component.
pub fn branch_corpus() -> Vec<Branch> {
    let i = |e: usize| (e, G::new(Rational::zero(), Rational::one()));
    let mut v = vec![
        Branch::new(&[(1, 1)], &[]),
        Branch::new(&[], &[(1, 1)]),
        Branch::new(&[(1, 1)], &[(1, 1)]),
        Branch::new(&[(1, 1)], &[(2, 1)]),
        Branch::new(&[(1, 1)], &[(2, -1), (3, 1)]),
        Branch::new(&[(1, 1)], &[(3, 1), (5, 2)]),
        Branch::new(&[(2, 1)], &[(3, 1)]),
        Branch::new(&[(2, 1)], &[(3, 1), (4, 1)]),
        Branch::new(&[(2, 1)], &[(5, 1)]),
        Branch::new(&[(2, 1)], &[(7, 1), (8, -1)]),
        Branch::new(&[(3, 1), (4, 1)], &[(2, 1)]),
        Branch::new(&[(3, 1)], &[(4, 1)]),
        Branch::new(&[(3, 1)], &[(5, 1)]),
        Branch::new(&[(3, 1)], &[(7, 1), (8, 1)]),
        Branch::new(&[(4, 1)], &[(5, 1)]),
        Branch::new(&[(4, 1)], &[(6, 1), (7, 1)]),
        Branch::new(&[(4, 1)], &[(6, 2), (9, 1)]),
        Branch::new(&[(5, 1)], &[(6, 1)]),
        Branch::new(&[(5, 1)], &[(7, 1), (8, 1)]),
        Branch::new(&[(6, 1)], &[(7, 1)]),
        Branch::new(&[(6, 1)], &[(8, 1), (9, 1)]),
        Branch::new(&[(6, 1)], &[(9, 1), (10, 1)]),
    ];
    v.push(Branch {
        x: int(&[(1, 1)]),
        y: vec![i(2)],
    });
    v.push(Branch {
        x: int(&[(2, 1)]),
        y: vec![(3, G::one()), i(4)],
    });
    v
}

/// All unordered pairs of distinct corpus branches.
pub fn pair_corpus() -> Vec<(Branch, Branch)> {
    let b = branch_corpus();
    let mut out = Vec::new();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            out.push((b[i].clone(), b[j].clone()));
        }
    }
    out
}

pub mod plane {
    //! Curves in the projective plane: rank-one lattice, `H·H = 1`,
    //! `c_1 = 3H`.

    use orbicurve::curvecalc::{
        AmbientModel, CurveClass, CurveConfig, DomainPoint, GermData, LambdaSpec, RegularDoublePoint, Station, REGULAR,
    };
    use orbicurve::exact::Rational;
    use orbicurve::surface::OrbifoldSurface;

    pub type Terms = &'static [(usize, i64)];

    pub fn ambient() -> AmbientModel {
        AmbientModel::new(vec![vec![Rational::one()]], vec![Rational::integer(3)], vec![]).unwrap()
    }

    pub fn germ(u: Terms, v: Terms) -> GermData {
        GermData::from_int_terms(32, u, v)
    }

    /// A regular point carrying the given branches, optionally tagged for matching.
    pub fn station(tag: Option<&str>, branches: &[(&str, Terms, Terms)]) -> Station {
        Station {
            ambient_point: REGULAR.into(),
            isotropy_order: 1,
            points: branches
                .iter()
                .map(|(label, u, v)| DomainPoint {
                    label: (*label).into(),
                    order: 1,
                    germ: germ(u, v),
                    lambda: LambdaSpec::default(),
                })
                .collect(),
            tag: tag.map(Into::into),
        }
    }

    pub fn node(a: &str, b: &str) -> RegularDoublePoint {
        RegularDoublePoint {
            labels: [a.into(), b.into()],
            germs: [germ(&[(1, 1)], &[]), germ(&[], &[(1, 1)])],
        }
    }

    pub fn curve(degree: i64, genus: i64, stations: Vec<Station>, doubles: Vec<RegularDoublePoint>) -> CurveConfig {
        CurveConfig::new(
            Some(format!("degree {degree}, genus {genus}")),
            ambient(),
            OrbifoldSurface::reduced(genus, vec![]).unwrap(),
            CurveClass {
                coords: vec![Rational::integer(degree)],
                multiplicity: 1,
            },
            stations,
            doubles,
        )
        .unwrap()
    }

    /// Classical arithmetic genus `(d-1)(d-2)/2`.
    pub fn arithmetic_genus(d: i64) -> Rational {
        Rational::integer((d - 1) * (d - 2) / 2)
    }

    /// `(degree, geometric genus, δ, configuration)` for singular and
    /// smooth plane curves of degree at most four.
    pub fn adjunction_corpus() -> Vec<(i64, i64, i64, CurveConfig)> {
        let x: Terms = &[(1, 1)];
        let none: Terms = &[];
        vec![
            (1, 0, 0, curve(1, 0, vec![], vec![])),
            (2, 0, 0, curve(2, 0, vec![], vec![])),
            (3, 1, 0, curve(3, 1, vec![], vec![])),
            (3, 0, 1, curve(3, 0, vec![], vec![node("a", "b")])),
            (
                3,
                0,
                1,
                curve(3, 0, vec![station(None, &[("z", &[(2, 1)], &[(3, 1)])])], vec![]),
            ),
            (4, 3, 0, curve(4, 3, vec![], vec![])),
            (4, 2, 1, curve(4, 2, vec![], vec![node("a", "b")])),
            (4, 1, 2, curve(4, 1, vec![], vec![node("a", "b"), node("c", "d")])),
            (
                4,
                0,
                3,
                curve(4, 0, vec![], vec![node("a", "b"), node("c", "d"), node("e", "f")]),
            ),
            // tacnode: two smooth branches with contact 2
            (
                4,
                1,
                2,
                curve(
                    4,
                    1,
                    vec![station(None, &[("a", x, none), ("b", x, &[(2, 1)])])],
                    vec![],
                ),
            ),
            // A4 and A6 cusps
            (
                4,
                1,
                2,
                curve(4, 1, vec![station(None, &[("z", &[(2, 1)], &[(5, 1)])])], vec![]),
            ),
            (
                4,
                0,
                3,
                curve(4, 0, vec![station(None, &[("z", &[(2, 1)], &[(7, 1)])])], vec![]),
            ),
            // E6
            (
                4,
                0,
                3,
                curve(4, 0, vec![station(None, &[("z", &[(3, 1)], &[(4, 1)])])], vec![]),
            ),
            // ordinary triple point
            (
                4,
                0,
                3,
                curve(
                    4,
                    0,
                    vec![station(None, &[("a", x, none), ("b", none, x), ("c", x, x)])],
                    vec![],
                ),
            ),
            // a node and a cusp
            (
                4,
                1,
                2,
                curve(
                    4,
                    1,
                    vec![station(None, &[("z", &[(2, 1)], &[(3, 1)])])],
                    vec![node("a", "b")],
                ),
            ),
            // a cusp met by a smooth branch transverse to its tangent
            (
                4,
                0,
                3,
                curve(
                    4,
                    0,
                    vec![station(None, &[("z", &[(2, 1)], &[(3, 1)]), ("w", none, x)])],
                    vec![],
                ),
            ),
        ]
    }

    /// `(first, second, expected C·C')` for pairs of plane curves whose
    /// meetings are all listed as tagged stations.
    pub fn intersection_corpus() -> Vec<(CurveConfig, CurveConfig, i64)> {
        let x: Terms = &[(1, 1)];
        let none: Terms = &[];
        let line = |st: Vec<Station>| curve(1, 0, st, vec![]);
        let conic = |st: Vec<Station>| curve(2, 0, st, vec![]);
        let tags = ["o1", "o2", "o3", "o4"];
        vec![
            (
                line(vec![station(Some("o"), &[("z", x, none)])]),
                line(vec![station(Some("o"), &[("w", none, x)])]),
                1,
            ),
            (
                line(vec![
                    station(Some("o1"), &[("z1", x, none)]),
                    station(Some("o2"), &[("z2", x, none)]),
                ]),
                conic(vec![
                    station(Some("o1"), &[("w1", none, x)]),
                    station(Some("o2"), &[("w2", x, x)]),
                ]),
                2,
            ),
            (
                line(vec![station(Some("o"), &[("z", x, none)])]),
                conic(vec![station(Some("o"), &[("w", x, &[(2, 1)])])]),
                2,
            ),
            (
                conic(
                    tags.iter()
                        .zip(["z1", "z2", "z3", "z4"])
                        .map(|(t, l)| station(Some(t), &[(l, x, none)]))
                        .collect(),
                ),
                conic(
                    tags.iter()
                        .zip(["w1", "w2", "w3", "w4"])
                        .map(|(t, l)| station(Some(t), &[(l, none, x)]))
                        .collect(),
                ),
                4,
            ),
            (
                conic(vec![
                    station(Some("o1"), &[("z1", x, none)]),
                    station(Some("o2"), &[("z2", x, none)]),
                ]),
                conic(vec![
                    station(Some("o1"), &[("w1", x, &[(2, 1)])]),
                    station(Some("o2"), &[("w2", x, &[(2, -1)])]),
                ]),
                4,
            ),
            (
                line(vec![station(Some("f"), &[("z", x, none)])]),
                curve(3, 1, vec![station(Some("f"), &[("w", x, &[(3, 1)])])], vec![]),
                3,
            ),
            (
                line(vec![
                    station(Some("n"), &[("z", x, x)]),
                    station(Some("o"), &[("z2", x, none)]),
                ]),
                curve(
                    3,
                    0,
                    vec![
                        station(Some("n"), &[("a", x, none), ("b", none, x)]),
                        station(Some("o"), &[("c", none, x)]),
                    ],
                    vec![],
                ),
                3,
            ),
            (
                line(vec![
                    station(Some("c"), &[("z", none, x)]),
                    station(Some("o"), &[("z2", x, none)]),
                ]),
                curve(
                    3,
                    0,
                    vec![
                        station(Some("c"), &[("w", &[(2, 1)], &[(3, 1)])]),
                        station(Some("o"), &[("w2", none, x)]),
                    ],
                    vec![],
                ),
                3,
            ),
        ]
    }
}
