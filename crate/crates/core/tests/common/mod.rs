#![allow(dead_code)]

use proptest::prelude::*;
use trisect_core::model::{Agent, Issue, Rating, Rational, SituationTable};

pub const SIX_BY_FIVE: &str = "\
agent,i1,i2,i3,i4,i5
x1,+1,0,0,0,0
x2,-1,0,0,0,0
x3,+1,+1,+1,+1,+1
x4,-1,+1,+1,+1,+1
x5,+1,+1,+1,-1,-1
x6,+1,+1,-1,-1,-1
";

pub const TWELVE_BY_FOUR: &str = "\
agent,i1,i2,i3,i4
x1,0,0,0,0
x2,+1,+1,-1,-1
x3,+1,+1,-1,-1
x4,+1,0,0,-1
x5,+1,+1,+1,+1
x6,+1,+1,+1,+1
x7,-1,-1,-1,-1
x8,-1,-1,-1,-1
x9,-1,-1,-1,+1
x10,-1,-1,0,0
x11,-1,-1,0,0
x12,+1,-1,0,-1
";

pub const FOURTEEN_BY_ELEVEN: &str = "\
agent,i1,i2,i3,i4,i5,i6,i7,i8,i9,i10,i11
x1,+1,-1,0,-1,+1,-1,0,-1,+1,-1,+1
x2,0,+1,-1,0,0,+1,-1,0,0,+1,-1
x3,-1,0,-1,-1,-1,+1,+1,-1,-1,0,0
x4,0,0,-1,+1,+1,-1,-1,+1,0,-1,-1
x5,-1,+1,-1,0,-1,+1,0,0,-1,+1,+1
x6,0,+1,0,-1,-1,-1,-1,-1,0,+1,-1
x7,+1,+1,0,+1,0,+1,0,+1,+1,+1,0
x8,-1,0,-1,+1,-1,0,+1,+1,-1,0,+1
x9,+1,+1,0,-1,+1,+1,-1,-1,+1,+1,-1
x10,-1,-1,-1,0,+1,-1,+1,0,-1,-1,+1
x11,-1,0,-1,-1,-1,-1,-1,-1,-1,0,-1
x12,0,+1,0,-1,+1,+1,+1,-1,0,+1,0
x13,-1,0,-1,+1,0,0,0,+1,-1,0,+1
x14,-1,-1,-1,0,-1,-1,-1,0,-1,-1,-1
";

pub fn six_by_five() -> SituationTable {
    SituationTable::from_csv(SIX_BY_FIVE.as_bytes()).unwrap()
}

pub fn twelve_by_four() -> SituationTable {
    SituationTable::from_csv(TWELVE_BY_FOUR.as_bytes()).unwrap()
}

pub fn fourteen_by_eleven() -> SituationTable {
    SituationTable::from_csv(FOURTEEN_BY_ELEVEN.as_bytes()).unwrap()
}

pub fn named_tables() -> Vec<SituationTable> {
    vec![six_by_five(), twelve_by_four(), fourteen_by_eleven()]
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn agents(t: &SituationTable, ids: &[&str]) -> Vec<Agent> {
    t.agents_of(ids).unwrap()
}

pub fn issues(t: &SituationTable, ids: &[&str]) -> Vec<Issue> {
    t.issues_of(ids).unwrap()
}

pub fn names_a(t: &SituationTable, v: &[Agent]) -> Vec<String> {
    v.iter().map(|&a| t.agent_id(a).to_string()).collect()
}

pub fn names_i(t: &SituationTable, v: &[Issue]) -> Vec<String> {
    v.iter().map(|&i| t.issue_id(i).to_string()).collect()
}

pub fn ids(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Independent reading of the two preset auxiliary functions as integer
/// arithmetic on ratings: the product for Pawlak, with both-neutral pairs
/// promoted to +1 for Yao.
pub mod oracle {
    use super::*;

    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    pub enum Preset {
        Pawlak,
        Yao,
    }

    pub fn phi(p: Preset, t: &SituationTable, x: Agent, y: Agent, i: Issue) -> i64 {
        if x == y {
            return 1;
        }
        let (a, b) = (t.rating(x, i).value(), t.rating(y, i).value());
        match p {
            Preset::Yao if a == 0 && b == 0 => 1,
            _ => a * b,
        }
    }

    /// (alliance, conflict) averaged over issues × left × right.
    pub fn degrees(p: Preset, t: &SituationTable, js: &[Issue], xs: &[Agent], ys: &[Agent]) -> (Rational, Rational) {
        let n = (js.len() * xs.len() * ys.len()) as i64;
        if n == 0 {
            return (q(0, 1), q(0, 1));
        }
        let (mut a, mut c) = (0, 0);
        for &i in js {
            for &x in xs {
                for &y in ys {
                    match phi(p, t, x, y, i) {
                        1 => a += 1,
                        -1 => c += 1,
                        _ => {}
                    }
                }
            }
        }
        (q(a, n), q(c, n))
    }

    /// Degrees over the non-neutral issues of the first agent.
    pub fn non_neutral(p: Preset, t: &SituationTable, x: Agent, y: Agent, js: &[Issue]) -> (Rational, Rational) {
        if x == y {
            return (q(1, 1), q(0, 1));
        }
        let own: Vec<Issue> = js.iter().copied().filter(|&i| t.rating(x, i) != Rating::Neutral).collect();
        degrees(p, t, &own, &[x], &[y])
    }

    /// Maximal sets, by subset enumeration, of agents pairwise related in
    /// both directions under `r`.
    pub fn maximal_sets(r: &[Vec<bool>]) -> Vec<Vec<usize>> {
        let n = r.len();
        assert!(n <= 16);
        let consistent = |mask: u32| {
            (0..n).filter(|&x| mask >> x & 1 == 1).all(|x| {
                (0..n).filter(|&y| mask >> y & 1 == 1).all(|y| r[x][y])
            })
        };
        let good: Vec<u32> = (1..1u32 << n).filter(|&m| consistent(m)).collect();
        let mut out: Vec<Vec<usize>> = good
            .iter()
            .filter(|&&m| !good.iter().any(|&o| o != m && o & m == m))
            .map(|&m| (0..n).filter(|&x| m >> x & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }
}

pub fn rating_strategy() -> impl Strategy<Value = i64> {
    prop_oneof![Just(1i64), Just(-1i64), Just(0i64)]
}

/// Random table with the given agent and issue count ranges.
pub fn table_strategy(
    agents: std::ops::RangeInclusive<usize>,
    issues: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = SituationTable> {
    (agents, issues).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::collection::vec(rating_strategy(), m), n).prop_map(move |rows| {
            let a: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
            let i: Vec<String> = (1..=m).map(|k| format!("i{k}")).collect();
            let cells = rows
                .into_iter()
                .map(|r| r.into_iter().map(|v| Rating::from_value(v).unwrap()).collect())
                .collect();
            SituationTable::new(a, i, cells).unwrap()
        })
    })
}

/// A unit-interval pair 0 <= low < high <= 1 with small denominators.
pub fn unit_pair_strategy() -> impl Strategy<Value = (Rational, Rational)> {
    (1i64..=12)
        .prop_flat_map(|d| (Just(d), 0..d))
        .prop_flat_map(|(d, lo)| (Just(d), Just(lo), lo + 1..=d))
        .prop_map(|(d, lo, hi)| (q(lo, d), q(hi, d)))
}

/// A signed pair -1 <= low < 0 < high <= 1 with small denominators.
pub fn signed_pair_strategy() -> impl Strategy<Value = (Rational, Rational)> {
    (1i64..=12)
        .prop_flat_map(|d| (Just(d), 1..=d, 1..=d))
        .prop_map(|(d, lo, hi)| (q(-lo, d), q(hi, d)))
}
