mod common;

use common::{branch_corpus, delta_oracle, intersection_oracle, pair_corpus, Branch};
use orbicurve::germ::{
    intersection_multiplicity, self_intersection, self_intersection_by_exponents, semigroup_delta, CurveGerm,
    GermError, MAX_TRUNCATION,
};

fn resultant_route(a: &Branch, b: &Branch) -> u64 {
    let run = |t| intersection_multiplicity(&a.germ(t), &b.germ(t));
    match run(64) {
        Err(e) if e.is_precision() => run(MAX_TRUNCATION).unwrap(),
        r => r.unwrap(),
    }
}

#[test]
fn oracle_known_values() {
    let cusp = Branch::new(&[(2, 1)], &[(3, 1)]);
    let line = Branch::new(&[(1, 1)], &[]);
    assert_eq!(intersection_oracle(&cusp, &line), Some(3));
    assert_eq!(intersection_oracle(&line, &cusp), Some(3));
    assert_eq!(delta_oracle(&cusp), 1);
    assert_eq!(delta_oracle(&Branch::new(&[(3, 1)], &[(4, 1)])), 3);
    assert_eq!(intersection_oracle(&line, &line), None);
}

#[test]
fn corpus_size() {
    assert!(pair_corpus().len() >= 50);
    for b in branch_corpus() {
        let m = b
            .germ(32)
            .u()
            .order()
            .unwrap_or(usize::MAX)
            .min(b.germ(32).v().order().unwrap_or(usize::MAX));
        assert!(m <= 6);
    }
}

#[test]
fn resultants_match_substitution() {
    for (a, b) in pair_corpus() {
        let oracle = intersection_oracle(&a, &b).expect("corpus branches are distinct");
        assert_eq!(resultant_route(&a, &b), oracle, "{a:?} vs {b:?}");
        assert_eq!(resultant_route(&b, &a), oracle, "{b:?} vs {a:?}");
    }
}

#[test]
fn delta_routes_agree() {
    for b in branch_corpus() {
        let g = b.germ(64);
        let expected = delta_oracle(&b);
        assert_eq!(self_intersection_by_exponents(&g).unwrap(), expected, "{b:?}");
        assert_eq!(semigroup_delta(g.u(), g.v()).unwrap(), expected, "{b:?}");
        assert_eq!(self_intersection(&g).unwrap(), expected, "{b:?}");
    }
}

#[test]
fn coincident_branches_are_reported() {
    let a = CurveGerm::from_int_terms(32, &[(1, 1)], &[(2, 1)]);
    let b = CurveGerm::from_int_terms(32, &[(1, -1)], &[(2, 1)]);
    assert!(matches!(
        intersection_multiplicity(&a, &b),
        Err(GermError::DistinctBranchesRequired)
    ));
}
