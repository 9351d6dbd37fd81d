use proptest::prelude::*;

use orbicurve::chains::{boundary, random_complex, to_singular, Chain, WeightedComplex};
use orbicurve::chern_index::{chern_split, EquivariantTrivialization, IsotropyWeights};
use orbicurve::curvecalc::{algebraic_intersection, AmbientModel, CurveClass, CurveConfig};
use orbicurve::exact::{gcd, FieldElem, GaussianRational, Rational};
use orbicurve::germ::{intersection_multiplicity, CurveGerm};
use orbicurve::lens::{lens_equivalent_with, LensSpace};
use orbicurve::surface::{tangent_c1, OrbifoldSurface};
use orbicurve::wps::uniqueness_check;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(a, b)| Rational::frac(a, b))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..60).prop_flat_map(|p| (Just(p), (1..p).prop_filter("coprime", move |q| gcd(p, *q) == 1)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), GaussianRational::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&FieldElem::inv(&a)), GaussianRational::one());
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&text).unwrap(), a);
    }

    #[test]
    fn lens_equivalence_is_an_equivalence(p in 2i64..40, seeds in proptest::array::uniform3(1i64..1000), oriented: bool) {
        let units: Vec<i64> = (1..p).filter(|q| gcd(p, *q) == 1).collect();
        let [a, b, c] = seeds.map(|s| LensSpace::new(p, units[s as usize % units.len()]).unwrap());
        prop_assert!(lens_equivalent_with(&a, &a, oriented));
        prop_assert_eq!(lens_equivalent_with(&a, &b, oriented), lens_equivalent_with(&b, &a, oriented));
        if lens_equivalent_with(&a, &b, oriented) && lens_equivalent_with(&b, &c, oriented) {
            prop_assert!(lens_equivalent_with(&a, &c, oriented));
        }
        if lens_equivalent_with(&a, &b, true) {
            prop_assert!(lens_equivalent_with(&a, &b, false));
        }
    }

    #[test]
    fn boundary_is_linear_and_squares_to_zero(seed in any::<u64>(), k in rational(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let w = random_complex(seed, 120);
        let r = w.dimension();
        let cells = w.simplices(r);
        let chain = |offset: usize| Chain::from_terms(
            picks.iter().enumerate().map(|(i, ix)| (cells[ix.index(cells.len())].clone(), Rational::integer((i + offset) as i64 + 1))),
        );
        let (a, b) = (chain(0), chain(3));
        let lhs = boundary(&a.add(&b.scale(&k)), &w).unwrap();
        let rhs = boundary(&a, &w).unwrap().add(&boundary(&b, &w).unwrap().scale(&k));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(boundary(&boundary(&a, &w).unwrap(), &w).unwrap().is_zero());
    }

    #[test]
    fn rescaling_is_a_chain_map(seed in any::<u64>(), ix in any::<prop::sample::Index>()) {
        let w = random_complex(seed, 120);
        let u: WeightedComplex = w.underlying();
        let cells = w.simplices(w.dimension());
        let c = Chain::simplex(cells[ix.index(cells.len())].clone());
        let left = to_singular(&boundary(&c, &w).unwrap(), &w).unwrap();
        let right = boundary(&to_singular(&c, &w).unwrap(), &u).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn intersection_pairing_is_bilinear(
        entries in proptest::collection::vec(rational(), 3),
        a in proptest::collection::vec(rational(), 2),
        b in proptest::collection::vec(rational(), 2),
        m in 1i64..6,
        k in 1i64..6,
    ) {
        prop_assume!(a.iter().any(|x| !x.is_zero()) && b.iter().any(|x| !x.is_zero()));
        let pairing = vec![vec![entries[0].clone(), entries[1].clone()], vec![entries[1].clone(), entries[2].clone()]];
        let ambient = AmbientModel::new(pairing, vec![Rational::one(), Rational::one()], vec![]).unwrap();
        let config = |coords: Vec<Rational>, mult: i64| CurveConfig::new(
            None,
            ambient.clone(),
            OrbifoldSurface::new(mult, 0, vec![]).unwrap(),
            CurveClass { coords, multiplicity: mult },
            vec![],
            vec![],
        ).unwrap();
        let kk = Rational::integer(k);
        let scaled: Vec<Rational> = a.iter().map(|x| x.clone() * kk.clone()).collect();
        let base = algebraic_intersection(&config(a.clone(), 1), &config(b.clone(), 1)).unwrap();
        prop_assert_eq!(algebraic_intersection(&config(scaled, 1), &config(b.clone(), 1)).unwrap(), base.clone() * kk);
        prop_assert_eq!(
            algebraic_intersection(&config(a.clone(), m), &config(b.clone(), 1)).unwrap(),
            base.clone() * Rational::frac(1, m)
        );
        prop_assert_eq!(algebraic_intersection(&config(b, 1), &config(a, 1)).unwrap(), base);
    }

    #[test]
    fn chern_split_is_additive(genus in 0i64..4, orders in proptest::collection::vec(2i64..12, 0..5), seed in any::<u64>(), rel in -6i64..6) {
        let tangent = EquivariantTrivialization::tangent(genus, &orders).unwrap();
        let surface = OrbifoldSurface::reduced(genus, orders.clone()).unwrap();
        prop_assert_eq!(chern_split(&tangent), tangent_c1(&surface));
        let points: Vec<IsotropyWeights> = orders
            .iter()
            .enumerate()
            .map(|(i, &m)| IsotropyWeights::new(m, vec![((seed >> (4 * i)) as i64).rem_euclid(m)]).unwrap())
            .collect();
        let line = EquivariantTrivialization::new(1, rel, points).unwrap();
        let sum = tangent.direct_sum(&line).unwrap();
        prop_assert_eq!(chern_split(&sum), chern_split(&tangent) + chern_split(&line));
    }

    #[test]
    fn uniqueness_inequality((p, q) in coprime_pair()) {
        let u = uniqueness_check(p, q);
        prop_assert!(u.holds);
        prop_assert!(u.self_intersection < u.local_lower_bound);
    }

    #[test]
    fn intersection_is_symmetric_and_bounded(a in 1usize..5, b in 2usize..9, c in 1usize..5, d in 2usize..9, s in -3i64..4) {
        prop_assume!(s != 0);
        let g = CurveGerm::from_int_terms(48, &[(a, 1)], &[(a + b, 1)]);
        let h = CurveGerm::from_int_terms(48, &[(c, s)], &[(c + d, 1), (c + d + 1, 1)]);
        let ab = intersection_multiplicity(&g, &h);
        prop_assert_eq!(ab.clone(), intersection_multiplicity(&h, &g));
        if let Ok(i) = ab {
            prop_assert!(i >= (a * c) as u64);
        }
    }
}
