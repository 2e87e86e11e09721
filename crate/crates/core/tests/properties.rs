mod common;

use std::collections::BTreeSet;

use common::oracle::{self, Preset};
use common::*;
use proptest::prelude::*;
use trisect_core::auxiliary::*;
use trisect_core::bifunctions::*;
use trisect_core::decisions::*;
use trisect_core::model::*;
use trisect_core::relations::*;
use trisect_core::strategies::*;

fn presets() -> [(AuxiliaryModel, Preset); 2] {
    [(AuxiliaryModel::pawlak(), Preset::Pawlak), (AuxiliaryModel::yao(), Preset::Yao)]
}

fn assert_partition<T: Ord + Clone + std::fmt::Debug>(t: &Trisection<T>, carrier: &[T]) {
    let parts = [&t.positive, &t.negative, &t.neutral];
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let union: BTreeSet<T> = parts.iter().flat_map(|p| p.iter().cloned()).collect();
    assert_eq!(total, union.len(), "parts overlap");
    assert_eq!(union, carrier.iter().cloned().collect::<BTreeSet<T>>());
}

/// Nonempty agent subset picked by the low bits of `mask`.
fn subset(t: &SituationTable, mask: u64) -> Vec<Agent> {
    let x: Vec<Agent> = t.agent_list().filter(|a| mask >> a.0 & 1 == 1).collect();
    if x.is_empty() {
        vec![Agent(0)]
    } else {
        x
    }
}

/// Strategy over the table's issues: state 0 absent, 1..=3 rating +1, -1, 0.
fn strategy_from_states(states: &[u8]) -> Description {
    let lits = states
        .iter()
        .enumerate()
        .filter_map(|(k, &s)| {
            let r = match s {
                1 => Rating::Positive,
                2 => Rating::Negative,
                3 => Rating::Neutral,
                _ => return None,
            };
            Some((Issue(k), r))
        })
        .collect();
    Description::new(lits).unwrap()
}

fn unit(p: (Rational, Rational)) -> ThresholdPair {
    ThresholdPair::unit(p.0, p.1).unwrap()
}

fn pair_thresholds(a: (Rational, Rational), c: (Rational, Rational)) -> PairThresholds {
    PairThresholds::new(unit(a), unit(c)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rating_trisections_partition(t in table_strategy(1..=8, 1..=6), tp in signed_pair_strategy(), mask: u64) {
        let tp = ThresholdPair::signed(tp.0, tp.1).unwrap();
        let (a, j) = (t.all_agents(), t.all_issues());
        assert_partition(&trisect_agents(&t, &a, Scope::Set(&j, tp)).unwrap(), &a);
        for i in t.issue_list() {
            assert_partition(&trisect_agents(&t, &a, Scope::Single(i)).unwrap(), &a);
        }
        let x = subset(&t, mask);
        assert_partition(&trisect_issues_by_rating(&t, &j, Scope::Set(&x, tp)).unwrap(), &j);
        let pairs = all_pairs(&t);
        for (m, _) in presets() {
            assert_partition(&trisect_pairs_auxiliary(&m, &t, Scope::Set(&j, tp)).unwrap(), &pairs);
        }
    }

    #[test]
    fn aggregated_ratings_are_bounded(t in table_strategy(1..=8, 1..=6)) {
        let j = t.all_issues();
        for x in t.agent_list() {
            let r = aggregate_over_issues(&t, x, &j).unwrap();
            prop_assert!(r >= q(-1, 1) && r <= q(1, 1));
            for i in t.issue_list() {
                prop_assert_eq!(aggregate_over_issues(&t, x, &[i]).unwrap(), q(t.rating(x, i).value(), 1));
            }
        }
    }

    #[test]
    fn auxiliary_values_are_symmetric(t in table_strategy(1..=8, 1..=6)) {
        let j = t.all_issues();
        for (m, p) in presets() {
            for (x, y) in all_pairs(&t) {
                prop_assert_eq!(phi_aggregated(&m, &t, x, y, &j), phi_aggregated(&m, &t, y, x, &j));
                for i in t.issue_list() {
                    prop_assert_eq!(phi_single(&m, &t, x, y, i).value(), oracle::phi(p, &t, x, y, i));
                }
            }
        }
    }

    #[test]
    fn single_issue_degrees_never_both_full(t in table_strategy(1..=8, 1..=6)) {
        for (m, _) in presets() {
            for (x, y) in all_pairs(&t) {
                for i in t.issue_list() {
                    let d = alliance_conflict_single(&m, &t, x, y, i);
                    prop_assert_eq!(d.alliance * d.conflict, q(0, 1));
                }
            }
        }
    }

    #[test]
    fn aggregation_lattice_is_path_independent(
        t in table_strategy(1..=6, 1..=5),
        xm: u64,
        ym: u64,
        jm: u64,
    ) {
        let (xs, ys) = (subset(&t, xm), subset(&t, ym));
        let j: Vec<Issue> = t.issue_list().filter(|i| jm >> i.0 & 1 == 1).collect();
        let j = if j.is_empty() { vec![Issue(0)] } else { j };
        let avg = |v: Vec<DegreePair>| {
            let n = q(v.len() as i64, 1);
            let a = v.iter().map(|d| d.alliance).fold(q(0, 1), |s, x| s + x) / n;
            let c = v.iter().map(|d| d.conflict).fold(q(0, 1), |s, x| s + x) / n;
            DegreePair::new(a, c)
        };
        for (m, p) in presets() {
            let agg = |js: &[Issue], l: &[Agent], r: &[Agent]| {
                alliance_conflict_aggregate(&m, &t, &AggregationScope::new(js, l, r))
            };
            let top = agg(&j, &xs, &ys);
            prop_assert_eq!((top.alliance, top.conflict), oracle::degrees(p, &t, &j, &xs, &ys));
            prop_assert_eq!(top, avg(j.iter().map(|&i| agg(&[i], &xs, &ys)).collect()));
            prop_assert_eq!(top, avg(xs.iter().map(|&x| agg(&j, &[x], &ys)).collect()));
            prop_assert_eq!(top, avg(ys.iter().map(|&y| agg(&j, &xs, &[y])).collect()));
            // through the single-issue, single-pair bottom of the lattice
            for &i in &j {
                let mid = agg(&[i], &xs, &ys);
                prop_assert_eq!(mid, avg(xs.iter().map(|&x| agg(&[i], &[x], &ys)).collect()));
                for &x in &xs {
                    let low = agg(&[i], &[x], &ys);
                    prop_assert_eq!(low, avg(ys.iter().map(|&y| alliance_conflict_single(&m, &t, x, y, i)).collect()));
                }
            }
            for &x in &xs {
                prop_assert_eq!(
                    agg(&j, &[x], &ys),
                    avg(j.iter().map(|&i| agg(&[i], &[x], &ys)).collect())
                );
            }
        }
    }

    #[test]
    fn presets_agree_on_conflict_and_non_neutral(t in table_strategy(1..=8, 1..=6)) {
        let j = t.all_issues();
        let (p, y) = (AuxiliaryModel::pawlak(), AuxiliaryModel::yao());
        for (a, b) in all_pairs(&t) {
            let s = AggregationScope::pair(&j, a, b);
            prop_assert_eq!(
                alliance_conflict_aggregate(&p, &t, &s).conflict,
                alliance_conflict_aggregate(&y, &t, &s).conflict
            );
            prop_assert_eq!(
                alliance_conflict_non_neutral(&p, &t, a, b, &j),
                alliance_conflict_non_neutral(&y, &t, a, b, &j)
            );
            let d = alliance_conflict_non_neutral(&p, &t, a, b, &j);
            prop_assert_eq!((d.alliance, d.conflict), oracle::non_neutral(Preset::Pawlak, &t, a, b, &j));
        }
    }

    #[test]
    fn pair_relations_are_reflexive_and_issue_set_scope_symmetric(
        t in table_strategy(1..=8, 1..=6),
        a in unit_pair_strategy(),
        c in unit_pair_strategy(),
    ) {
        let th = pair_thresholds(a, c);
        let j = t.all_issues();
        let pairs = all_pairs(&t);
        for (m, _) in presets() {
            for scope in [PairScope::IssueSet, PairScope::NonNeutral] {
                let tri = trisect_pairs_two_functions(&m, &t, &j, &th, scope).unwrap();
                assert_partition(&tri, &pairs);
                for x in t.agent_list() {
                    prop_assert!(tri.positive.contains(&(x, x)));
                    let s = alliance_set(&m, &t, x, &j, &th, scope).unwrap();
                    prop_assert!(s.members.contains(&x));
                }
                if scope == PairScope::IssueSet {
                    for &(x, y) in &pairs {
                        prop_assert_eq!(tri.part_of(&(x, y)), tri.part_of(&(y, x)));
                    }
                }
            }
        }
    }

    #[test]
    fn single_issue_two_function_equals_auxiliary(
        t in table_strategy(1..=8, 1..=6),
        a in unit_pair_strategy(),
        c in unit_pair_strategy(),
    ) {
        let th = pair_thresholds(a, c);
        for (m, _) in presets() {
            for i in t.issue_list() {
                let two = trisect_pairs_two_functions(&m, &t, &[i], &th, PairScope::IssueSet).unwrap();
                let aux = trisect_pairs_auxiliary(&m, &t, Scope::Single(i)).unwrap();
                prop_assert_eq!(two, aux);
            }
        }
    }

    #[test]
    fn single_agent_combinations_equal_rating_trisection(
        t in table_strategy(1..=8, 1..=6),
        tp in unit_pair_strategy(),
        tn in unit_pair_strategy(),
    ) {
        let j = t.all_issues();
        for (m, _) in presets() {
            for x in t.agent_list() {
                let want = trisect_issues_by_rating(&t, &j, Scope::Single(x)).unwrap();
                for combo in CombinationChoice::all() {
                    let got = trisect_issues_two_functions(&m, &t, &[x], &j, combo, unit(tp), unit(tn)).unwrap();
                    prop_assert_eq!(&got, &want, "combo {}", combo);
                }
            }
        }
    }

    #[test]
    fn combinations_agree_under_presets(
        t in table_strategy(1..=8, 1..=6),
        tp in unit_pair_strategy(),
        tn in unit_pair_strategy(),
        mask: u64,
    ) {
        let x = subset(&t, mask);
        let j = t.all_issues();
        for (m, _) in presets() {
            let [first, rest @ ..] = CombinationChoice::all();
            let base = trisect_issues_two_functions(&m, &t, &x, &j, first, unit(tp), unit(tn)).unwrap();
            assert_partition(&base, &j);
            for combo in rest {
                prop_assert_eq!(
                    &trisect_issues_two_functions(&m, &t, &x, &j, combo, unit(tp), unit(tn)).unwrap(),
                    &base
                );
            }
        }
    }

    #[test]
    fn maximal_sets_match_subset_enumeration(
        t in table_strategy(1..=8, 1..=5),
        a in unit_pair_strategy(),
        c in unit_pair_strategy(),
    ) {
        let th = pair_thresholds(a, c);
        let j = t.all_issues();
        for (m, p) in presets() {
            for scope in [PairScope::IssueSet, PairScope::NonNeutral] {
                // relation rebuilt from integer counts
                let r: Vec<Vec<bool>> = t
                    .agent_list()
                    .map(|x| {
                        t.agent_list()
                            .map(|y| {
                                let (al, co) = match scope {
                                    PairScope::IssueSet => oracle::degrees(p, &t, &j, &[x], &[y]),
                                    PairScope::NonNeutral => oracle::non_neutral(p, &t, x, y, &j),
                                };
                                al >= th.alliance.high && co <= th.conflict.low
                            })
                            .collect()
                    })
                    .collect();
                let got: Vec<Vec<usize>> =
                    maximal_consistent_alliance_sets(&m, &t, &j, &th, scope, DEFAULT_AGENT_CAP)
                        .unwrap()
                        .into_iter()
                        .map(|s| s.members.iter().map(|a| a.0).collect())
                        .collect();
                prop_assert_eq!(&got, &oracle::maximal_sets(&r));

                let covered: BTreeSet<usize> = got.iter().flatten().copied().collect();
                prop_assert_eq!(covered.len(), t.n_agents());
                for s in &got {
                    for z in (0..t.n_agents()).filter(|z| !s.contains(z)) {
                        prop_assert!(s.iter().any(|&x| !r[x][z] || !r[z][x]));
                    }
                }
            }
        }
    }

    #[test]
    fn strategy_degrees_decompose_over_atoms(
        t in table_strategy(1..=8, 1..=6),
        states in proptest::collection::vec(0u8..4, 6),
    ) {
        let s = strategy_from_states(&states[..t.n_issues()]);
        prop_assume!(!s.is_empty());
        let atoms = decompose(&s);
        let n = q(atoms.len() as i64, 1);
        for (m, _) in presets() {
            for x in t.agent_list() {
                let whole = strategy_agent_degrees(&m, &t, &s, x).unwrap();
                let parts: Vec<DegreePair> = atoms.iter().map(|a| strategy_agent_degrees(&m, &t, a, x).unwrap()).collect();
                let a = parts.iter().map(|d| d.alliance).fold(q(0, 1), |u, v| u + v) / n;
                let c = parts.iter().map(|d| d.conflict).fold(q(0, 1), |u, v| u + v) / n;
                prop_assert_eq!((whole.alliance, whole.conflict), (a, c));
            }
        }
    }

    #[test]
    fn duals_swap_alliance_and_conflict(
        t in table_strategy(1..=8, 1..=6),
        states in proptest::collection::vec(0u8..3, 6),
    ) {
        let s = strategy_from_states(&states[..t.n_issues()]);
        prop_assume!(!s.is_empty());
        prop_assert!(is_non_neutral(&s));
        let d = dual(&s).unwrap();
        for (m, _) in presets() {
            for x in t.agent_list() {
                let a = strategy_agent_degrees(&m, &t, &s, x).unwrap();
                let b = strategy_agent_degrees(&m, &t, &d, x).unwrap();
                prop_assert_eq!((a.alliance, a.conflict), (b.conflict, b.alliance));
            }
        }
    }

    #[test]
    fn strategy_trisections_partition(
        t in table_strategy(1..=8, 1..=6),
        states in proptest::collection::vec(0u8..4, 6),
        ts in unit_pair_strategy(),
        to in unit_pair_strategy(),
    ) {
        let s = strategy_from_states(&states[..t.n_issues()]);
        prop_assume!(!s.is_empty());
        let a = t.all_agents();
        for (m, _) in presets() {
            assert_partition(&trisect_agents_by_strategy(&m, &t, &s, &a, unit(ts), unit(to)).unwrap(), &a);
        }
    }

    #[test]
    fn descriptions_round_trip(t in table_strategy(1..=4, 1..=6), states in proptest::collection::vec(0u8..4, 6)) {
        let s = strategy_from_states(&states[..t.n_issues()]);
        prop_assert_eq!(Description::parse(&s.render(&t), &t).unwrap(), s.clone());
        prop_assert_eq!(compose(&decompose(&s)).unwrap(), s);
    }
}

#[test]
fn family_counts_and_determinism() {
    for n in 0..=6usize {
        let issues: Vec<Issue> = (0..n).map(Issue).collect();
        for (kind, base) in [(FamilyKind::Full, 4u64), (FamilyKind::NonNeutral, 3)] {
            let run = || enumerate_family(&issues, kind, DEFAULT_FAMILY_CAP).unwrap().collect::<Vec<_>>();
            let first = run();
            assert_eq!(first.len() as u64, base.pow(n as u32));
            assert_eq!(first.iter().collect::<BTreeSet<_>>().len(), first.len());
            assert_eq!(first, run());
            if kind == FamilyKind::NonNeutral {
                assert!(first.iter().all(is_non_neutral));
            }
        }
    }
}

#[test]
fn theorems_hold_on_the_named_tables_for_every_threshold_grid_point() {
    let grid: Vec<(Rational, Rational)> = (0..=4)
        .flat_map(|l| (l + 1..=4).map(move |h| (q(l, 4), q(h, 4))))
        .collect();
    for t in named_tables() {
        let j = t.all_issues();
        for (m, _) in presets() {
            for &a in &grid {
                for &c in &grid {
                    let th = pair_thresholds(a, c);
                    for i in t.issue_list() {
                        assert_eq!(
                            trisect_pairs_two_functions(&m, &t, &[i], &th, PairScope::IssueSet).unwrap(),
                            trisect_pairs_auxiliary(&m, &t, Scope::Single(i)).unwrap()
                        );
                    }
                    for x in t.agent_list() {
                        let want = trisect_issues_by_rating(&t, &j, Scope::Single(x)).unwrap();
                        for combo in CombinationChoice::all() {
                            assert_eq!(
                                trisect_issues_two_functions(&m, &t, &[x], &j, combo, unit(a), unit(c)).unwrap(),
                                want
                            );
                        }
                    }
                }
            }
        }
    }
}
