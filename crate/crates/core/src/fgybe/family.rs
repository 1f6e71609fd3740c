//! The thirteen solution families and exact classification against them.

use std::collections::BTreeSet;
use std::fmt;

use crate::endo::SolutionPair;
use crate::error::{Error, Result};
use crate::word::Word;

/// A family member: `id` in `1..=13`, its integer parameters, and whether the
/// dual of the listed pair is meant.
///
/// Families 1, 4 and 7 take `m`; family 13 takes `s` and `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId {
    pub id: u8,
    pub dualized: bool,
    pub s: Option<i64>,
    pub m: Option<i64>,
}

impl FamilyId {
    pub fn plain(id: u8) -> Self {
        Self { id, dualized: false, s: None, m: None }
    }

    pub fn with_m(id: u8, m: i64) -> Self {
        Self { m: Some(m), ..Self::plain(id) }
    }

    pub fn with_sm(id: u8, s: i64, m: i64) -> Self {
        Self { s: Some(s), m: Some(m), ..Self::plain(id) }
    }

    pub fn dual(self) -> Self {
        Self { dualized: !self.dualized, ..self }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.id {
            1 | 4 | 7 => self.s.is_none() && self.m.is_some(),
            13 => self.s.is_some() && self.m.is_some(),
            2..=12 => self.s.is_none() && self.m.is_none(),
            _ => return Err(Error::InvalidInput(format!("family id {} not in 1..=13", self.id))),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("wrong parameters for family {}", self.id)))
        }
    }
}

/// `F7[m=0]`, `F13[s=1,m=1]`, `F5`; a leading `~` marks the dual.
impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dualized {
            f.write_str("~")?;
        }
        write!(f, "F{}", self.id)?;
        match (self.s, self.m) {
            (Some(s), Some(m)) => write!(f, "[s={s},m={m}]"),
            (None, Some(m)) => write!(f, "[m={m}]"),
            _ => Ok(()),
        }
    }
}

/// Comma-joined family list, `-` when empty.
pub fn format_families(families: &BTreeSet<FamilyId>) -> String {
    if families.is_empty() {
        return "-".into();
    }
    families.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn word(runs: &[(u32, i64)]) -> Word {
    Word::from_syllables(2, runs.iter().copied()).expect("rank-2 literal")
}

const X: u32 = 1;
const Y: u32 = 2;

/// The listed pair for `fid`, dualized when flagged.
pub fn family_instantiate(fid: &FamilyId) -> Result<SolutionPair> {
    fid.validate()?;
    let m = fid.m.unwrap_or(0);
    let s = fid.s.unwrap_or(0);
    let (w, v) = match fid.id {
        1 => (word(&[]), word(&[(X, m)])),
        2 => (word(&[]), word(&[(Y, 1)])),
        3 => (word(&[]), word(&[(X, 1), (Y, 1)])),
        4 => (word(&[(X, 1)]), word(&[(X, m)])),
        5 => (word(&[(X, 1)]), word(&[(Y, 1)])),
        6 => (word(&[(Y, 1)]), word(&[(X, -1)])),
        7 => {
            let neg = m.checked_neg().ok_or(Error::ExponentOverflow)?;
            (word(&[(Y, 1)]), word(&[(Y, neg), (X, 1), (Y, m)]))
        }
        8 => (word(&[(Y, 1)]), word(&[(Y, 1), (X, -1), (Y, 1)])),
        9 => (word(&[(Y, -1)]), word(&[(X, -1)])),
        10 => (word(&[(Y, -1)]), word(&[(Y, 1), (X, 1), (Y, 1)])),
        11 => (word(&[(X, 1), (Y, -1), (X, -1)]), word(&[(X, 1), (Y, 2)])),
        12 => (word(&[(X, -1), (Y, -1), (X, 1)]), word(&[(Y, 2), (X, 1)])),
        13 => (word(&[(Y, s)]), word(&[(X, m)])),
        _ => unreachable!("validated"),
    };
    let pair = SolutionPair::new(w, v)?;
    Ok(if fid.dualized { pair.dual() } else { pair })
}

/// Every family member with parameters in `-bound..=bound`, plain and dualized.
pub fn catalog(bound: i64) -> Vec<(FamilyId, SolutionPair)> {
    let mut ids = Vec::new();
    for id in 1..=13u8 {
        match id {
            1 | 4 | 7 => ids.extend((-bound..=bound).map(|m| FamilyId::with_m(id, m))),
            13 => {
                for s in -bound..=bound {
                    ids.extend((-bound..=bound).map(|m| FamilyId::with_sm(13, s, m)));
                }
            }
            _ => ids.push(FamilyId::plain(id)),
        }
    }
    ids.into_iter()
        .flat_map(|f| [f, f.dual()])
        .map(|f| (f, family_instantiate(&f).expect("valid catalog id")))
        .collect()
}

/// Parameter values that could make family `id` produce `target`; every
/// parameter shows up in an exponent sum or a length, so this is exhaustive.
fn candidates(id: u8, target: &SolutionPair) -> Vec<FamilyId> {
    let x = crate::word::Generator::new(X).expect("x");
    let y = crate::word::Generator::new(Y).expect("y");
    match id {
        1 | 4 => vec![FamilyId::with_m(id, target.v().exponent_sum(x))],
        7 => {
            let half = (target.v().len() as i64 - 1) / 2;
            vec![FamilyId::with_m(7, half), FamilyId::with_m(7, -half)]
        }
        13 => vec![FamilyId::with_sm(13, target.w().exponent_sum(y), target.v().exponent_sum(x))],
        _ => vec![FamilyId::plain(id)],
    }
}

/// All family members whose instantiation equals `pair`, either directly or
/// as a dual.
///
/// Families overlap, so several ids may come back. A dualized match is
/// dropped when the same family already matches the pair directly (this
/// happens when a family is closed under the dual, e.g. `(y^s, x^m)`).
pub fn classify(pair: &SolutionPair) -> BTreeSet<FamilyId> {
    let dual = pair.dual();
    let mut out = BTreeSet::new();
    for id in 1..=13u8 {
        let matches = |target: &SolutionPair| -> Vec<FamilyId> {
            let mut found: Vec<FamilyId> = candidates(id, target)
                .into_iter()
                .filter(|f| family_instantiate(f).is_ok_and(|p| &p == target))
                .collect();
            found.dedup();
            found
        };
        let plain = matches(pair);
        if plain.is_empty() {
            out.extend(matches(&dual).into_iter().map(FamilyId::dual));
        } else {
            out.extend(plain);
        }
    }
    out
}
