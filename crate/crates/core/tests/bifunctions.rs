mod common;

use common::oracle::{self, Preset};
use common::*;
use trisect_core::auxiliary::{all_pairs, AuxiliaryModel};
use trisect_core::bifunctions::*;
use trisect_core::model::*;
use trisect_core::Error;

fn degree(a: Rational, c: Rational) -> DegreePair {
    DegreePair::new(a, c)
}

#[test]
fn single_issue_value_grids() {
    // rows: first rating, columns: second rating, both in the order +1, -1, 0
    let alliance_p = [[1, 0, 0], [0, 1, 0], [0, 0, 0]];
    let alliance_y = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let conflict = [[0, 1, 0], [1, 0, 0], [0, 0, 0]];
    for (m, alliance) in [(AuxiliaryModel::pawlak(), alliance_p), (AuxiliaryModel::yao(), alliance_y)] {
        for (r, &a) in Rating::ALL.iter().enumerate() {
            for (c, &b) in Rating::ALL.iter().enumerate() {
                let t = SituationTable::from_values(&["x", "y"], &["i"], &[&[a.value()], &[b.value()]]).unwrap();
                let d = alliance_conflict_single(&m, &t, Agent(0), Agent(1), Issue(0));
                assert_eq!(d, degree(q(alliance[r][c], 1), q(conflict[r][c], 1)), "{} ({a}, {b})", m.name());
            }
        }
    }
}

#[test]
fn single_issue_examples() {
    let t = twelve_by_four();
    let a = |x: &str| t.agent(x).unwrap();
    let i = |s: &str| t.issue(s).unwrap();
    let (p, y) = (AuxiliaryModel::pawlak(), AuxiliaryModel::yao());
    assert_eq!(alliance_conflict_single(&p, &t, a("x4"), a("x10"), i("i1")), degree(q(0, 1), q(1, 1)));
    assert_eq!(alliance_conflict_single(&y, &t, a("x1"), a("x4"), i("i2")), degree(q(1, 1), q(0, 1)));
    assert_eq!(alliance_conflict_single(&y, &t, a("x1"), a("x10"), i("i1")), degree(q(0, 1), q(0, 1)));
    assert_eq!(alliance_conflict_single(&p, &t, a("x1"), a("x1"), i("i1")), degree(q(1, 1), q(0, 1)));
}

#[test]
fn reconstruction() {
    assert_eq!(reconstruct_auxiliary(degree(q(1, 1), q(0, 1))).unwrap(), Rating::Positive);
    assert_eq!(reconstruct_auxiliary(degree(q(0, 1), q(0, 1))).unwrap(), Rating::Neutral);
    assert!(matches!(
        reconstruct_auxiliary(degree(q(1, 2), q(0, 1))),
        Err(Error::InvalidDegree { .. })
    ));
}

#[test]
fn aggregated_examples() {
    let t = twelve_by_four();
    let (x4, x10) = (t.agent("x4").unwrap(), t.agent("x10").unwrap());
    let j = t.all_issues();
    let s = AggregationScope::pair(&j, x4, x10);
    assert_eq!(alliance_conflict_aggregate(&AuxiliaryModel::pawlak(), &t, &s), degree(q(0, 1), q(1, 4)));
    assert_eq!(alliance_conflict_aggregate(&AuxiliaryModel::yao(), &t, &s), degree(q(1, 4), q(1, 4)));
    let empty = AggregationScope::pair(&[], x4, x10);
    assert_eq!(alliance_conflict_aggregate(&AuxiliaryModel::yao(), &t, &empty), DegreePair::zero());
}

#[test]
fn non_neutral_examples() {
    let t = twelve_by_four();
    let a = |x: &str| t.agent(x).unwrap();
    let j = t.all_issues();
    for m in [AuxiliaryModel::pawlak(), AuxiliaryModel::yao()] {
        assert_eq!(alliance_conflict_non_neutral(&m, &t, a("x4"), a("x10"), &j), degree(q(0, 1), q(1, 2)));
        assert_eq!(alliance_conflict_non_neutral(&m, &t, a("x2"), a("x12"), &j), degree(q(1, 2), q(1, 4)));
        assert_eq!(alliance_conflict_non_neutral(&m, &t, a("x12"), a("x2"), &j), degree(q(2, 3), q(1, 3)));
        for y in t.agent_list().filter(|&y| y != a("x1")) {
            assert_eq!(alliance_conflict_non_neutral(&m, &t, a("x1"), y, &j), DegreePair::zero());
        }
        assert_eq!(alliance_conflict_non_neutral(&m, &t, a("x1"), a("x1"), &j), degree(q(1, 1), q(0, 1)));
    }
}

#[test]
fn non_neutral_degrees_are_not_symmetric() {
    let t = twelve_by_four();
    let (x2, x4) = (t.agent("x2").unwrap(), t.agent("x4").unwrap());
    let j = t.all_issues();
    let m = AuxiliaryModel::pawlak();
    assert_eq!(alliance_conflict_non_neutral(&m, &t, x2, x4, &j).alliance, q(1, 2));
    assert_eq!(alliance_conflict_non_neutral(&m, &t, x4, x2, &j).alliance, q(1, 1));
}

#[test]
fn whole_tables_match_integer_oracle() {
    for t in named_tables() {
        let j = t.all_issues();
        for (m, p) in [(AuxiliaryModel::pawlak(), Preset::Pawlak), (AuxiliaryModel::yao(), Preset::Yao)] {
            for (x, y) in all_pairs(&t) {
                let d = alliance_conflict_aggregate(&m, &t, &AggregationScope::pair(&j, x, y));
                assert_eq!((d.alliance, d.conflict), oracle::degrees(p, &t, &j, &[x], &[y]));
                let d = alliance_conflict_non_neutral(&m, &t, x, y, &j);
                assert_eq!((d.alliance, d.conflict), oracle::non_neutral(p, &t, x, y, &j));
            }
        }
    }
}

#[test]
fn presets_share_conflict_and_non_neutral_degrees() {
    for t in named_tables() {
        let j = t.all_issues();
        let (p, y) = (AuxiliaryModel::pawlak(), AuxiliaryModel::yao());
        for (a, b) in all_pairs(&t) {
            let s = AggregationScope::pair(&j, a, b);
            assert_eq!(
                alliance_conflict_aggregate(&p, &t, &s).conflict,
                alliance_conflict_aggregate(&y, &t, &s).conflict
            );
            assert_eq!(
                alliance_conflict_non_neutral(&p, &t, a, b, &j),
                alliance_conflict_non_neutral(&y, &t, a, b, &j)
            );
        }
    }
}
