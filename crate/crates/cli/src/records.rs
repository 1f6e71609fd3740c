//! Line-delimited JSON records. Field order is fixed by declaration order and
//! is part of the output contract.

use std::collections::BTreeSet;

use fgybe::fgybe::{Equation, FamilyId, SolutionRecord};
use fgybe::{AbelianInvariants, BraidWord, CheckReport, Presentation, SolutionPair};
use serde::Serialize;

#[derive(Serialize)]
pub struct Witness {
    equation: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Record {
    Check {
        w: String,
        v: String,
        t: bool,
        m: bool,
        b: bool,
        solution: bool,
        witnesses: Vec<Witness>,
    },
    Solution {
        w: String,
        v: String,
        t: bool,
        m: bool,
        b: bool,
        families: Vec<String>,
        orbit: String,
    },
    Summary {
        solutions: usize,
        orbits: usize,
    },
    Classify {
        w: String,
        v: String,
        families: Vec<String>,
    },
    Dual {
        w: String,
        v: String,
    },
    Inverse {
        w: String,
        v: String,
    },
    BraidVerify {
        strands: usize,
        holds: bool,
        samples: usize,
        seed: u64,
        samples_ok: bool,
    },
    Endomorphism {
        braid: String,
        images: Vec<String>,
    },
    Invariant {
        braid: String,
        generators: usize,
        relators: Vec<String>,
        simplified_generators: usize,
        simplified_relators: Vec<String>,
        free_rank: usize,
        torsion: Vec<String>,
        h1: String,
        smith_verified: bool,
    },
}

fn names(families: &BTreeSet<FamilyId>) -> Vec<String> {
    families.iter().map(ToString::to_string).collect()
}

impl Record {
    pub fn check(pair: &SolutionPair, report: &CheckReport) -> Self {
        let witnesses = report
            .witnesses()
            .into_iter()
            .map(|(eq, s): (Equation, _)| Witness { equation: eq.to_string(), lhs: s.lhs.to_string(), rhs: s.rhs.to_string() })
            .collect();
        Record::Check {
            w: pair.w().to_string(),
            v: pair.v().to_string(),
            t: report.t_holds(),
            m: report.m_holds(),
            b: report.b_holds(),
            solution: report.is_solution(),
            witnesses,
        }
    }

    pub fn solution(r: &SolutionRecord, orbit: &SolutionPair) -> Self {
        Record::Solution {
            w: r.pair.w().to_string(),
            v: r.pair.v().to_string(),
            t: r.report.t_holds(),
            m: r.report.m_holds(),
            b: r.report.b_holds(),
            families: names(&r.families),
            orbit: orbit.to_string(),
        }
    }

    pub fn classify(pair: &SolutionPair, families: &BTreeSet<FamilyId>) -> Self {
        Record::Classify { w: pair.w().to_string(), v: pair.v().to_string(), families: names(families) }
    }

    pub fn pair(kind: &str, pair: &SolutionPair) -> Self {
        let (w, v) = (pair.w().to_string(), pair.v().to_string());
        if kind == "inverse" {
            Record::Inverse { w, v }
        } else {
            Record::Dual { w, v }
        }
    }

    pub fn invariant(
        b: &BraidWord,
        p: &Presentation,
        simplified: &Presentation,
        inv: &AbelianInvariants,
        smith_verified: bool,
    ) -> Self {
        Record::Invariant {
            braid: b.to_string(),
            generators: p.n_generators(),
            relators: p.relators().iter().map(ToString::to_string).collect(),
            simplified_generators: simplified.n_generators(),
            simplified_relators: simplified.relators().iter().map(ToString::to_string).collect(),
            free_rank: inv.free_rank,
            torsion: inv.torsion.iter().map(ToString::to_string).collect(),
            h1: inv.to_string(),
            smith_verified,
        }
    }
}
