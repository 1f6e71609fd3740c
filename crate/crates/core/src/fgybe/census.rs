//! Exhaustive enumeration of solutions up to a total length bound, and the
//! dual/inverse orbit grouping.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::family::{classify, FamilyId};
use super::{solve_pruned, CheckReport};
use crate::endo::SolutionPair;
use crate::nielsen::{invert_pair, is_automorphism};
use crate::word::{reduced_words_of_length, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionRecord {
    pub pair: SolutionPair,
    pub report: CheckReport,
    pub families: BTreeSet<FamilyId>,
}

/// A unit of enumeration work: all pairs with `|W| + |V| = total`,
/// `|W| = w_len`, and `W` starting with letter code `first` (none for `W = 1`).
#[derive(Debug, Clone, Copy)]
struct Shard {
    total: usize,
    w_len: usize,
    first: Option<u32>,
}

fn shards(max_total_len: usize) -> Vec<Shard> {
    let mut out = Vec::new();
    for total in 0..=max_total_len {
        for w_len in 0..=total {
            if w_len == 0 {
                out.push(Shard { total, w_len, first: None });
            } else {
                out.extend((0..4).map(|c| Shard { total, w_len, first: Some(c) }));
            }
        }
    }
    out
}

impl Shard {
    fn words(&self) -> impl Iterator<Item = Word> {
        let first = self.first;
        reduced_words_of_length(2, self.w_len).filter(move |w| first.is_none() || w.first_letter().map(|l| l.code()) == first)
    }

    fn pairs(self) -> impl Iterator<Item = SolutionPair> {
        let v_len = self.total - self.w_len;
        self.words().flat_map(move |w| {
            reduced_words_of_length(2, v_len).map(move |v| SolutionPair::new(w.clone(), v).expect("rank 2"))
        })
    }

    fn solutions(self) -> impl Iterator<Item = SolutionRecord> {
        self.pairs().filter_map(|pair| {
            let report = solve_pruned(&pair).expect("enumerated exponents are tiny")?;
            let families = classify(&pair);
            Some(SolutionRecord { pair, report, families })
        })
    }
}

/// Every solution with `|W| + |V| <= max_total_len`, in a fixed order: by total
/// length, then `|W|`, then `W` and `V` in shortlex order. `[T]` is checked
/// first and failing pairs are dropped before `[M]` and `[B]` are evaluated.
pub fn enumerate_solutions(max_total_len: usize) -> impl Iterator<Item = SolutionRecord> {
    shards(max_total_len).into_iter().flat_map(Shard::solutions)
}

/// Same output and order as [`enumerate_solutions`], with shards evaluated on
/// `jobs` worker threads.
pub fn enumerate_solutions_parallel(max_total_len: usize, jobs: usize) -> Vec<SolutionRecord> {
    let run = || {
        shards(max_total_len)
            .into_par_iter()
            .map(|s| s.solutions().collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

/// Closure of `pair` under the dual and, for automorphisms, the inverse.
/// Sorted ascending; the first entry is the orbit representative.
pub fn orbit(pair: &SolutionPair) -> Vec<SolutionPair> {
    let mut seen = BTreeSet::from([pair.clone()]);
    let mut frontier = vec![pair.clone()];
    while let Some(p) = frontier.pop() {
        let mut next = vec![p.dual()];
        if let Ok(inv) = invert_pair(&p) {
            next.push(inv);
        }
        for q in next {
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn orbit_representative(pair: &SolutionPair) -> SolutionPair {
    orbit(pair).swap_remove(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: SolutionPair,
    pub members: Vec<SolutionPair>,
    pub invertible: bool,
}

/// Groups pairs by orbit; within each orbit only the given pairs are listed.
/// Orbits come out ordered by representative.
pub fn group_orbits<'a, I>(pairs: I) -> Vec<Orbit>
where
    I: IntoIterator<Item = &'a SolutionPair>,
{
    let mut groups: BTreeMap<SolutionPair, BTreeSet<SolutionPair>> = BTreeMap::new();
    for p in pairs {
        groups.entry(orbit_representative(p)).or_default().insert(p.clone());
    }
    groups
        .into_iter()
        .map(|(representative, members)| {
            let invertible = is_automorphism(&representative);
            Orbit { representative, members: members.into_iter().collect(), invertible }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgybe::family::format_families;

    fn pair(a: &str, b: &str) -> SolutionPair {
        SolutionPair::parse(a, b).unwrap()
    }

    #[test]
    fn bound_zero() {
        let all: Vec<_> = enumerate_solutions(0).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].pair, pair("1", "1"));
    }

    #[test]
    fn bound_two_contains_listed() {
        let all: Vec<SolutionPair> = enumerate_solutions(2).map(|r| r.pair).collect();
        for (a, b) in [("x", "y"), ("1", "y"), ("y", "x"), ("1", "x"), ("1", "x^-1"), ("1", "x^2")] {
            assert!(all.contains(&pair(a, b)), "({a}, {b})");
        }
        assert!(!all.contains(&pair("x y", "y")));
        assert!(!all.contains(&pair("y x", "y")));
    }

    #[test]
    fn unclassified_solutions_are_the_yx_orbit() {
        let mut stray = Vec::new();
        for r in enumerate_solutions(5) {
            assert!(r.report.is_solution());
            if r.families.is_empty() {
                stray.push(r.pair);
            }
        }
        assert_eq!(stray, vec![pair("1", "y x"), pair("x y", "1")]);
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq: Vec<_> = enumerate_solutions(5).collect();
        assert_eq!(enumerate_solutions_parallel(5, 3), seq);
        assert_eq!(enumerate_solutions_parallel(5, 1), seq);
    }

    #[test]
    fn orbits_of_known_pairs() {
        let artin = SolutionPair::artin();
        let o = orbit(&artin);
        assert!(o.contains(&pair("x y x^-1", "x")));
        assert!(o.contains(&artin.dual()));
        assert_eq!(o.len(), 4);
        assert_eq!(orbit(&pair("x", "y")), vec![pair("x", "y")]);
        // not invertible: dual only
        assert_eq!(orbit(&pair("1", "x y")).len(), 2);
        let eleven = orbit(&pair("x y^-1 x^-1", "x y^2"));
        let twelve = orbit(&pair("x^-1 y^-1 x", "y^2 x"));
        assert_eq!(eleven, twelve);
    }

    #[test]
    fn shard_order_is_shortlex_within_length() {
        let recs: Vec<_> = enumerate_solutions(3).collect();
        for w in recs.windows(2) {
            let (a, b) = (&w[0].pair, &w[1].pair);
            assert!((a.total_len(), a.w().len()) <= (b.total_len(), b.w().len()));
        }
        assert_eq!(format_families(&recs[0].families), "F1[m=0],F13[s=0,m=0]");
    }
}
