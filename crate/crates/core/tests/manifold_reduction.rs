mod common;

use common::plane::{adjunction_corpus, arithmetic_genus, intersection_corpus};
use orbicurve::curvecalc::{adjunction_report, intersection_report, match_stations, verdict_from, EmbeddednessVerdict};
use orbicurve::exact::Rational;

#[test]
fn classical_adjunction() {
    for (d, g, delta, c) in adjunction_corpus() {
        let r = adjunction_report(&c).unwrap();
        assert!(r.holds, "{:?}", c.name);
        assert_eq!(r.lhs, arithmetic_genus(d), "{:?}", c.name);
        assert_eq!(r.rhs, Rational::integer(g + delta), "{:?}", c.name);
        let expected = if delta == 0 {
            EmbeddednessVerdict::EmbeddedSuborbifold
        } else {
            EmbeddednessVerdict::Singular {
                defect: Rational::integer(delta),
            }
        };
        assert_eq!(verdict_from(&r).unwrap(), expected, "{:?}", c.name);
    }
}

#[test]
fn bezout() {
    for (a, b, expected) in intersection_corpus() {
        let r = intersection_report(&a, &b, &match_stations(&a, &b)).unwrap();
        assert!(r.holds, "{:?} / {:?}", a.name, b.name);
        assert_eq!(r.algebraic, Rational::integer(expected));
    }
}
