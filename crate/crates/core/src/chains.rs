//! Complexes of finite groups over simplicial complexes, the weighted
//! boundary operator on rational chains, and rational homology.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::Rational;
use crate::linalg::rank;

pub type Simplex = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("simplex {0:?} is not in the complex")]
    UnsupportedSimplex(Simplex),
    #[error("chain mixes degrees {0} and {1}")]
    MixedDegree(usize, usize),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("malformed group data: {0}")]
    MalformedTable(String),
}

/// `"0,1,2"` for the simplex `[0,1,2]`.
pub fn simplex_key(s: &[usize]) -> String {
    s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub fn parse_simplex(key: &str) -> Result<Simplex, ChainError> {
    let mut s = key
        .split(',')
        .map(|v| v.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| ChainError::InvalidComplex(format!("bad simplex key {key:?}")))?;
    normalize(&mut s)?;
    Ok(s)
}

fn normalize(s: &mut Simplex) -> Result<(), ChainError> {
    s.sort_unstable();
    let len = s.len();
    s.dedup();
    if s.is_empty() || s.len() != len {
        return Err(ChainError::InvalidComplex(format!("degenerate simplex {s:?}")));
    }
    Ok(())
}

/// Face of `s` opposite its `i`-th vertex.
fn face(s: &[usize], i: usize) -> Simplex {
    let mut f = s.to_vec();
    f.remove(i);
    f
}

/// A simplicial complex with the order `|G_σ|` of a finite group on each
/// simplex. Simplices are oriented by increasing vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexRepr", into = "ComplexRepr")]
pub struct WeightedComplex {
    /// `orders[σ] = |G_σ|`, closed under taking faces.
    orders: BTreeMap<Simplex, i64>,
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    simplices: Vec<Simplex>,
    #[serde(default)]
    orders: BTreeMap<String, i64>,
}

impl TryFrom<ComplexRepr> for WeightedComplex {
    type Error = ChainError;
    fn try_from(r: ComplexRepr) -> Result<Self, ChainError> {
        let orders = r
            .orders
            .iter()
            .map(|(k, &v)| Ok((parse_simplex(k)?, v)))
            .collect::<Result<BTreeMap<_, _>, ChainError>>()?;
        WeightedComplex::new(r.simplices, orders)
    }
}

impl From<WeightedComplex> for ComplexRepr {
    fn from(w: WeightedComplex) -> Self {
        ComplexRepr {
            simplices: w.orders.keys().cloned().collect(),
            orders: w
                .orders
                .iter()
                .filter(|(_, &v)| v != 1)
                .map(|(k, &v)| (simplex_key(k), v))
                .collect(),
        }
    }
}

impl WeightedComplex {
    /// Closes `simplices` under faces; simplices missing from `orders` get
    /// the trivial group.
    pub fn new(simplices: Vec<Simplex>, orders: BTreeMap<Simplex, i64>) -> Result<Self, ChainError> {
        let mut all: BTreeMap<Simplex, i64> = BTreeMap::new();
        let mut stack = Vec::new();
        for mut s in simplices {
            normalize(&mut s)?;
            stack.push(s);
        }
        while let Some(s) = stack.pop() {
            if all.contains_key(&s) {
                continue;
            }
            if s.len() > 1 {
                stack.extend((0..s.len()).map(|i| face(&s, i)));
            }
            all.insert(s, 1);
        }
        for (s, &o) in &orders {
            match all.get_mut(s) {
                Some(slot) => *slot = o,
                None => return Err(ChainError::UnsupportedSimplex(s.clone())),
            }
        }
        let w = WeightedComplex { orders: all };
        w.check_divisibility()?;
        Ok(w)
    }

    /// Same complex with every group trivial.
    pub fn underlying(&self) -> Self {
        WeightedComplex {
            orders: self.orders.keys().map(|s| (s.clone(), 1)).collect(),
        }
    }

    fn check_divisibility(&self) -> Result<(), ChainError> {
        for (s, &o) in &self.orders {
            if o < 1 {
                return Err(ChainError::InvalidComplex(format!("order {o} on {s:?}")));
            }
            if s.len() > 1 {
                for i in 0..s.len() {
                    let f = face(s, i);
                    let fo = self.orders[&f];
                    if fo % o != 0 {
                        return Err(ChainError::InvalidComplex(format!(
                            "|G| = {o} on {s:?} does not divide |G| = {fo} on its face {f:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self, s: &[usize]) -> Option<i64> {
        self.orders.get(s).copied()
    }

    pub fn dimension(&self) -> usize {
        self.orders.keys().map(Vec::len).max().unwrap_or(1) - 1
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    /// Simplices of dimension `r` in lexicographic order.
    pub fn simplices(&self, r: usize) -> Vec<Simplex> {
        self.orders.keys().filter(|s| s.len() == r + 1).cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, i64)> {
        self.orders.iter().map(|(s, &o)| (s, o))
    }

    /// Matrix of `∂: C_r -> C_{r-1}` with rows indexed by `(r-1)`-simplices.
    pub fn boundary_matrix(&self, r: usize) -> Vec<Vec<Rational>> {
        let rows = self.simplices(r - 1);
        let cols = self.simplices(r);
        let index: BTreeMap<&Simplex, usize> = rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut m = vec![vec![Rational::zero(); cols.len()]; rows.len()];
        for (j, s) in cols.iter().enumerate() {
            for (f, w) in weighted_faces(s, self.orders[s], &self.orders) {
                m[index[&f]][j] += w;
            }
        }
        m
    }
}

/// `(σ_i, (-1)^i |G_i|/|G|)` for each face of `s`.
fn weighted_faces(s: &[usize], order: i64, orders: &BTreeMap<Simplex, i64>) -> Vec<(Simplex, Rational)> {
    (0..s.len())
        .map(|i| {
            let f = face(s, i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let w = Rational::frac(sign * orders[&f], order);
            (f, w)
        })
        .collect()
}

/// A finite rational combination of `r`-simplices.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Chain {
    terms: BTreeMap<Simplex, Rational>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn simplex(s: Simplex) -> Self {
        Chain::from_terms([(s, Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Simplex, Rational)>) -> Self {
        let mut c = Chain::zero();
        for (s, x) in terms {
            c.add_term(s, x);
        }
        c
    }

    pub fn add_term(&mut self, mut s: Simplex, x: Rational) {
        s.sort_unstable();
        let slot = self.terms.entry(s.clone()).or_insert_with(Rational::zero);
        *slot += x;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Simplex, Rational> {
        &self.terms
    }

    pub fn coeff(&self, s: &[usize]) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree, or `None` for the zero chain.
    pub fn degree(&self) -> Result<Option<usize>, ChainError> {
        let mut deg = None;
        for s in self.terms.keys() {
            let d = s.len() - 1;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Err(ChainError::MixedDegree(e, d)),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (s, x) in &other.terms {
            out.add_term(s.clone(), x.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Chain {
        if k.is_zero() {
            return Chain::zero();
        }
        Chain {
            terms: self.terms.iter().map(|(s, x)| (s.clone(), x * k)).collect(),
        }
    }
}

/// `∂σ = Σ_i (-1)^i (|G_i|/|G|) σ_i`, face `i` omitting vertex `i`.
pub fn boundary(c: &Chain, w: &WeightedComplex) -> Result<Chain, ChainError> {
    c.degree()?;
    let mut out = Chain::zero();
    for (s, x) in &c.terms {
        let order = w.order(s).ok_or_else(|| ChainError::UnsupportedSimplex(s.clone()))?;
        if s.len() == 1 {
            continue;
        }
        for (f, wt) in weighted_faces(s, order, &w.orders) {
            out.add_term(f, x * &wt);
        }
    }
    Ok(out)
}

/// `∂∂σ = 0` on every simplex.
pub fn boundary_squared_is_zero(w: &WeightedComplex) -> bool {
    w.orders.keys().all(|s| {
        let c = Chain::simplex(s.clone());
        boundary(&c, w)
            .and_then(|b| boundary(&b, w))
            .map(|bb| bb.is_zero())
            .unwrap_or(false)
    })
}

/// Rational Betti numbers `b_0, …, b_dim`.
pub fn homology_betti(w: &WeightedComplex) -> Vec<usize> {
    let dim = w.dimension();
    let ranks: Vec<usize> = (0..=dim + 1)
        .map(|r| {
            if r == 0 || r > dim {
                0
            } else {
                rank(w.boundary_matrix(r))
            }
        })
        .collect();
    (0..=dim)
        .map(|r| w.simplices(r).len() - ranks[r] - ranks[r + 1])
        .collect()
}

/// `σ ↦ (1/|G_σ|)|σ|`, into the chains of the underlying complex.
pub fn to_singular(c: &Chain, w: &WeightedComplex) -> Result<Chain, ChainError> {
    let mut out = Chain::zero();
    for (s, x) in &c.terms {
        let order = w.order(s).ok_or_else(|| ChainError::UnsupportedSimplex(s.clone()))?;
        out.add_term(s.clone(), x / &Rational::integer(order));
    }
    Ok(out)
}

/// Boundary of the 3-simplex, with one vertex of order `p`: the teardrop.
pub fn teardrop(p: i64) -> WeightedComplex {
    let orders = [(vec![0], p)].into_iter().collect();
    WeightedComplex::new(sphere_facets(), orders).expect("valid teardrop")
}

pub fn sphere_facets() -> Vec<Simplex> {
    vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
}

/// Random complex of at most `max_simplices` simplices whose orders obey
/// the divisibility condition: vertex orders are drawn first, and each
/// higher simplex takes a random divisor of the gcd over its facets.
pub fn random_complex(seed: u64, max_simplices: usize) -> WeightedComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_vertices = rng.gen_range(3..=12usize);
    let max_dim = rng.gen_range(1..=3usize);
    let mut facets: BTreeSet<Simplex> = BTreeSet::new();
    let mut total = BTreeSet::new();
    let verts: Vec<usize> = (0..n_vertices).collect();
    for _ in 0..rng.gen_range(2..=(max_simplices / 3).max(2)) {
        let k = rng.gen_range(1..=max_dim.min(n_vertices - 1)) + 1;
        let mut s: Simplex = verts.choose_multiple(&mut rng, k).copied().collect();
        s.sort_unstable();
        let mut closure = total.clone();
        add_closure(&mut closure, &s);
        if closure.len() > max_simplices {
            break;
        }
        total = closure;
        facets.insert(s);
    }
    for v in verts {
        if total.len() < max_simplices && total.insert(vec![v]) {
            facets.insert(vec![v]);
        }
    }

    let mut orders: BTreeMap<Simplex, i64> = BTreeMap::new();
    let by_dim = {
        let mut all: Vec<Simplex> = total.into_iter().collect();
        all.sort_by_key(Vec::len);
        all
    };
    const VERTEX_ORDERS: [i64; 8] = [1, 2, 3, 4, 6, 8, 12, 30];
    for s in by_dim {
        let o = if s.len() == 1 {
            *VERTEX_ORDERS.choose(&mut rng).expect("nonempty")
        } else {
            let g = (0..s.len())
                .map(|i| orders[&face(&s, i)])
                .fold(0i64, |acc, x| acc.gcd(&x));
            let divisors: Vec<i64> = (1..=g).filter(|d| g % d == 0).collect();
            *divisors.choose(&mut rng).expect("1 divides everything")
        };
        orders.insert(s, o);
    }
    WeightedComplex::new(facets.into_iter().collect(), orders).expect("orders obey divisibility")
}

fn add_closure(set: &mut BTreeSet<Simplex>, s: &Simplex) {
    if !set.insert(s.clone()) || s.len() == 1 {
        return;
    }
    for i in 0..s.len() {
        add_closure(set, &face(s, i));
    }
}

/// A finite group as a multiplication table with identity `0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable(pub Vec<Vec<usize>>);

impl GroupTable {
    pub fn cyclic(n: usize) -> Self {
        GroupTable((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.0[a][b] == 0).expect("validated group")
    }

    fn validate(&self, name: &str) -> Result<(), ChainError> {
        let n = self.order();
        let bad = |why: &str| Err(ChainError::MalformedTable(format!("group on {name}: {why}")));
        if n == 0 || n > 64 {
            return bad("order must be between 1 and 64");
        }
        if self.0.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("table is not square over its elements");
        }
        if (0..n).any(|a| self.0[0][a] != a || self.0[a][0] != a) {
            return bad("element 0 is not the identity");
        }
        for row in &self.0 {
            let distinct: BTreeSet<_> = row.iter().collect();
            if distinct.len() != n {
                return bad("rows are not permutations");
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad("multiplication is not associative");
                    }
                }
            }
        }
        Ok(())
    }
}

/// Full complex-of-groups data: groups, the maps `ψ_a` along barycentric
/// edges `a: σ -> τ` (`τ` a face of `σ`), and twists `g_{a,b} ∈ G_{t(a)}`
/// for composable pairs.
///
/// Keys: groups by `"0,1"`, homs by `"0,1>0"`, twists by `"0,1,2>0,1>0"`.
/// Missing homs out of trivial groups and missing twists are trivial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupComplexFull {
    pub simplices: Vec<Simplex>,
    pub groups: BTreeMap<String, GroupTable>,
    #[serde(default)]
    pub homs: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    pub twists: BTreeMap<String, usize>,
}

struct Resolved {
    groups: BTreeMap<Simplex, GroupTable>,
    homs: BTreeMap<(Simplex, Simplex), Vec<usize>>,
    twists: BTreeMap<(Simplex, Simplex, Simplex), usize>,
}

fn proper_faces(s: &[usize]) -> Vec<Simplex> {
    let n = s.len();
    (1..(1usize << n) - 1)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect())
        .collect()
}

impl GroupComplexFull {
    /// Cyclic groups `Z_{orders[σ]}` with the inclusions `x ↦ x·|G_τ|/|G_σ|`
    /// and trivial twists.
    pub fn cyclic(w: &WeightedComplex) -> Self {
        let mut groups = BTreeMap::new();
        let mut homs = BTreeMap::new();
        for (s, o) in w.iter() {
            groups.insert(simplex_key(s), GroupTable::cyclic(o as usize));
            for f in proper_faces(s) {
                let fo = w.order(&f).expect("closed complex");
                let k = (fo / o) as usize;
                homs.insert(
                    format!("{}>{}", simplex_key(s), simplex_key(&f)),
                    (0..o as usize).map(|x| x * k).collect(),
                );
            }
        }
        GroupComplexFull {
            simplices: w.orders.keys().cloned().collect(),
            groups,
            homs,
            twists: BTreeMap::new(),
        }
    }

    /// The orders-only shadow.
    pub fn weighted(&self) -> Result<WeightedComplex, ChainError> {
        let r = self.resolve()?;
        let orders = r.groups.iter().map(|(s, g)| (s.clone(), g.order() as i64)).collect();
        WeightedComplex::new(self.simplices.clone(), orders)
    }

    fn resolve(&self) -> Result<Resolved, ChainError> {
        let complex = WeightedComplex::new(self.simplices.clone(), BTreeMap::new())?;
        let mut groups = BTreeMap::new();
        for (k, g) in &self.groups {
            let s = parse_simplex(k)?;
            if complex.order(&s).is_none() {
                return Err(ChainError::UnsupportedSimplex(s));
            }
            g.validate(k)?;
            groups.insert(s, g.clone());
        }
        for s in complex.orders.keys() {
            groups.entry(s.clone()).or_insert_with(|| GroupTable::cyclic(1));
        }

        let mut homs = BTreeMap::new();
        for (k, images) in &self.homs {
            let parts: Vec<&str> = k.split('>').collect();
            let [from, to] = parts[..] else {
                return Err(ChainError::MalformedTable(format!(
                    "hom key {k:?} is not \"sigma>tau\""
                )));
            };
            let (from, to) = (parse_simplex(from)?, parse_simplex(to)?);
            if !is_proper_face(&to, &from) || !groups.contains_key(&from) {
                return Err(ChainError::MalformedTable(format!("{k:?} is not a face inclusion")));
            }
            if images.len() != groups[&from].order() || images.iter().any(|&x| x >= groups[&to].order()) {
                return Err(ChainError::MalformedTable(format!("hom {k:?} has the wrong shape")));
            }
            homs.insert((from, to), images.clone());
        }
        for s in groups.keys() {
            for f in proper_faces(s) {
                if !homs.contains_key(&(s.clone(), f.clone())) {
                    if groups[s].order() != 1 {
                        return Err(ChainError::MalformedTable(format!(
                            "missing hom {}>{}",
                            simplex_key(s),
                            simplex_key(&f)
                        )));
                    }
                    homs.insert((s.clone(), f), vec![0]);
                }
            }
        }

        let mut twists = BTreeMap::new();
        for (k, &g) in &self.twists {
            let parts = k.split('>').map(parse_simplex).collect::<Result<Vec<_>, _>>()?;
            let [s, t, r] = &parts[..] else {
                return Err(ChainError::MalformedTable(format!(
                    "twist key {k:?} is not \"sigma>tau>rho\""
                )));
            };
            if !is_proper_face(t, s) || !is_proper_face(r, t) || !groups.contains_key(s) {
                return Err(ChainError::MalformedTable(format!("{k:?} is not a composable pair")));
            }
            if g >= groups[r].order() {
                return Err(ChainError::MalformedTable(format!(
                    "twist {k:?} is not an element of its group"
                )));
            }
            twists.insert((s.clone(), t.clone(), r.clone()), g);
        }
        Ok(Resolved { groups, homs, twists })
    }
}

fn is_proper_face(f: &[usize], s: &[usize]) -> bool {
    f.len() < s.len() && !f.is_empty() && f.iter().all(|v| s.contains(v))
}

/// Every `ψ_a` is an injective homomorphism, and for composable edges
/// `Ad(g_{a,b})∘ψ_{ab} = ψ_a∘ψ_b` and `ψ_a(g_{b,c}) g_{a,bc} = g_{a,b} g_{ab,c}`.
pub fn validate_group_complex(g: &GroupComplexFull) -> Result<bool, ChainError> {
    let r = g.resolve()?;
    let psi = |s: &Simplex, t: &Simplex, x: usize| r.homs[&(s.clone(), t.clone())][x];
    let twist =
        |s: &Simplex, t: &Simplex, u: &Simplex| r.twists.get(&(s.clone(), t.clone(), u.clone())).copied().unwrap_or(0);

    for ((s, t), images) in &r.homs {
        let (gs, gt) = (&r.groups[s], &r.groups[t]);
        let distinct: BTreeSet<_> = images.iter().collect();
        if distinct.len() != images.len() {
            return Ok(false);
        }
        for x in 0..gs.order() {
            for y in 0..gs.order() {
                if images[gs.mul(x, y)] != gt.mul(images[x], images[y]) {
                    return Ok(false);
                }
            }
        }
    }

    for s in r.groups.keys() {
        for t in proper_faces(s) {
            for u in proper_faces(&t) {
                // b: s -> t, a: t -> u, ab: s -> u
                let gu = &r.groups[&u];
                let h = twist(s, &t, &u);
                let h_inv = gu.inv(h);
                for x in 0..r.groups[s].order() {
                    let lhs = gu.mul(gu.mul(h, psi(s, &u, x)), h_inv);
                    if lhs != psi(&t, &u, psi(s, &t, x)) {
                        return Ok(false);
                    }
                }
                for v in proper_faces(&u) {
                    // c: s -> t, b: t -> u, a: u -> v
                    let gv = &r.groups[&v];
                    let lhs = gv.mul(psi(&u, &v, twist(s, &t, &u)), twist(s, &u, &v));
                    let rhs = gv.mul(twist(&t, &u, &v), twist(s, &t, &v));
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(v: &[usize]) -> Simplex {
        v.to_vec()
    }

    #[test]
    fn trivial_boundary_is_simplicial() {
        let w = WeightedComplex::new(vec![simplex(&[0, 1, 2])], BTreeMap::new()).unwrap();
        let b = boundary(&Chain::simplex(simplex(&[0, 1, 2])), &w).unwrap();
        assert_eq!(b.coeff(&[1, 2]), Rational::one());
        assert_eq!(b.coeff(&[0, 2]), -Rational::one());
        assert_eq!(b.coeff(&[0, 1]), Rational::one());
        assert!(boundary(&b, &w).unwrap().is_zero());
    }

    #[test]
    fn weighted_edge() {
        let p = 5;
        let w = WeightedComplex::new(vec![simplex(&[0, 1])], [(vec![1], p)].into_iter().collect()).unwrap();
        let b = boundary(&Chain::simplex(simplex(&[0, 1])), &w).unwrap();
        assert_eq!(b.coeff(&[1]), Rational::integer(p));
        assert_eq!(b.coeff(&[0]), -Rational::one());
        let equal = WeightedComplex::new(
            vec![simplex(&[0, 1])],
            [(vec![0], 4), (vec![1], 4), (vec![0, 1], 4)].into_iter().collect(),
        )
        .unwrap();
        let b = boundary(&Chain::simplex(simplex(&[0, 1])), &equal).unwrap();
        assert_eq!(
            b,
            Chain::from_terms([(vec![1], Rational::one()), (vec![0], -Rational::one())])
        );
    }

    #[test]
    fn divisibility_is_enforced() {
        let bad = WeightedComplex::new(vec![simplex(&[0, 1])], [(vec![0, 1], 2)].into_iter().collect());
        assert!(matches!(bad, Err(ChainError::InvalidComplex(_))));
    }

    #[test]
    fn betti_examples() {
        let circle = WeightedComplex::new(
            vec![simplex(&[0, 1]), simplex(&[1, 2]), simplex(&[0, 2])],
            BTreeMap::new(),
        )
        .unwrap();
        assert_eq!(homology_betti(&circle), vec![1, 1]);
        let s2 = WeightedComplex::new(sphere_facets(), BTreeMap::new()).unwrap();
        assert_eq!(homology_betti(&s2), vec![1, 0, 1]);
        for p in 2..=12 {
            let t = teardrop(p);
            assert!(boundary_squared_is_zero(&t));
            assert_eq!(homology_betti(&t), vec![1, 0, 1]);
        }
    }

    #[test]
    fn rescaling_is_a_chain_map() {
        let w = random_complex(7, 120);
        let std = w.underlying();
        for (s, _) in w.iter() {
            let c = Chain::simplex(s.clone());
            let lhs = to_singular(&boundary(&c, &w).unwrap(), &w).unwrap();
            let rhs = boundary(&to_singular(&c, &w).unwrap(), &std).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn random_complexes_are_deterministic() {
        assert_eq!(random_complex(3, 200), random_complex(3, 200));
        for seed in 0..20 {
            let w = random_complex(seed, 200);
            assert!(w.len() <= 200);
            assert!(boundary_squared_is_zero(&w));
        }
    }

    #[test]
    fn group_complexes() {
        let trivial = WeightedComplex::new(vec![simplex(&[0, 1, 2, 3])], BTreeMap::new()).unwrap();
        assert_eq!(validate_group_complex(&GroupComplexFull::cyclic(&trivial)), Ok(true));

        let orders = [(vec![0], 6), (vec![1], 2), (vec![0, 1], 2), (vec![2], 3)]
            .into_iter()
            .collect();
        let w = WeightedComplex::new(vec![simplex(&[0, 1, 2, 3])], orders).unwrap();
        let mut g = GroupComplexFull::cyclic(&w);
        assert_eq!(g.weighted().unwrap(), w);
        assert_eq!(validate_group_complex(&g), Ok(true));
        // a single nontrivial twist into the order-6 vertex group breaks the cocycle identity
        g.twists.insert("0,1,2,3>0,1,2>0".into(), 1);
        assert_eq!(validate_group_complex(&g), Ok(false));

        let mut not_injective = GroupComplexFull::cyclic(&w);
        not_injective.homs.insert("0,1>0".into(), vec![0, 0]);
        assert_eq!(validate_group_complex(&not_injective), Ok(false));

        let mut malformed = GroupComplexFull::cyclic(&w);
        malformed
            .groups
            .insert("0".into(), GroupTable(vec![vec![0, 1], vec![0, 1]]));
        assert!(matches!(
            validate_group_complex(&malformed),
            Err(ChainError::MalformedTable(_))
        ));
    }

    #[test]
    fn json_form() {
        let w: WeightedComplex = serde_json::from_str(r#"{"simplices": [[0,1,2]], "orders": {"0": 3}}"#).unwrap();
        assert_eq!(w.order(&[0]), Some(3));
        assert_eq!(w.order(&[0, 1]), Some(1));
        let back: WeightedComplex = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        assert_eq!(back, w);
    }
}
