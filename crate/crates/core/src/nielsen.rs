//! Nielsen reduction of generating pairs, and the automorphism decision for
//! endomorphisms of `F_2` that it yields.
//!
//! `τ_{W,V}` is an automorphism iff `{W, V}` generates `F_2`: free groups of
//! finite rank are Hopfian, so a surjective endomorphism is injective. A pair
//! generates `F_2` iff its Nielsen-reduced form is `{x^±1, y^±1}`.
//!
//! Reduction first applies strictly length-decreasing moves, always taking the
//! least `(slot, side, sign)` triple. When none exists it searches the moves
//! that keep both lengths unchanged for a pair from which a decreasing move
//! exists; those moves are recorded as tie moves. The search space at fixed
//! lengths is finite, and Nielsen's theorem guarantees a non-increasing path to
//! a Nielsen-reduced pair, so the procedure is exact.

use std::collections::{HashMap, VecDeque};

use crate::endo::{Endomorphism, SolutionPair};
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `slot ← slot · other^±1`
    Right,
    /// `slot ← other^±1 · slot`
    Left,
}

/// An elementary Nielsen transformation on a pair `[u0, u1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NielsenMove {
    Swap,
    Invert { slot: usize },
    Multiply { slot: usize, side: Side, inverse: bool },
}

impl NielsenMove {
    pub fn apply(self, pair: &mut [Word; 2]) -> Result<()> {
        match self {
            NielsenMove::Swap => pair.swap(0, 1),
            NielsenMove::Invert { slot } => pair[slot] = pair[slot].inverse(),
            NielsenMove::Multiply { slot, side, inverse } => {
                let other = if inverse { pair[1 - slot].inverse() } else { pair[1 - slot].clone() };
                pair[slot] = match side {
                    Side::Right => pair[slot].concat(&other)?,
                    Side::Left => other.concat(&pair[slot])?,
                };
            }
        }
        Ok(())
    }

    pub fn undo(self) -> NielsenMove {
        match self {
            NielsenMove::Multiply { slot, side, inverse } => NielsenMove::Multiply { slot, side, inverse: !inverse },
            other => other,
        }
    }
}

const MULTIPLY_ORDER: [(usize, Side, bool); 8] = [
    (0, Side::Right, false),
    (0, Side::Right, true),
    (0, Side::Left, false),
    (0, Side::Left, true),
    (1, Side::Right, false),
    (1, Side::Right, true),
    (1, Side::Left, false),
    (1, Side::Left, true),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NielsenStep {
    pub mv: NielsenMove,
    /// Length-preserving move taken to reach a decreasing one.
    pub tie: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NielsenCertificate {
    original: [Word; 2],
    final_pair: [Word; 2],
    steps: Vec<NielsenStep>,
}

impl NielsenCertificate {
    pub fn original(&self) -> &[Word; 2] {
        &self.original
    }

    pub fn final_pair(&self) -> &[Word; 2] {
        &self.final_pair
    }

    pub fn steps(&self) -> &[NielsenStep] {
        &self.steps
    }

    /// Applies the recorded moves to `start`.
    pub fn replay(&self, start: [Word; 2]) -> Result<[Word; 2]> {
        let mut pair = start;
        for step in &self.steps {
            step.mv.apply(&mut pair)?;
        }
        Ok(pair)
    }

    /// Words `[q0, q1]` over `{x, y}` with `original[j] = q_j(final_pair)`.
    pub fn express_original(&self) -> Result<[Word; 2]> {
        let rank = 2;
        let mut pair = [Word::generator(rank, 1)?, Word::generator(rank, 2)?];
        for step in self.steps.iter().rev() {
            step.mv.undo().apply(&mut pair)?;
        }
        Ok(pair)
    }

    /// Whether the final pair is `{x^±1, y^±1}` in some order.
    pub fn is_basis(&self) -> bool {
        let single = |w: &Word| match w.syllables() {
            [s] if s.exp().abs() == 1 => Some(s.gen()),
            _ => None,
        };
        match (single(&self.final_pair[0]), single(&self.final_pair[1])) {
            (Some(a), Some(b)) => a != b && self.final_pair[0].rank() == 2,
            _ => false,
        }
    }
}

fn first_decreasing(pair: &[Word; 2]) -> Result<Option<NielsenMove>> {
    for (slot, side, inverse) in MULTIPLY_ORDER {
        if pair[1 - slot].is_identity() {
            continue;
        }
        let mv = NielsenMove::Multiply { slot, side, inverse };
        let mut next = pair.clone();
        mv.apply(&mut next)?;
        if next[slot].len() < pair[slot].len() {
            return Ok(Some(mv));
        }
    }
    Ok(None)
}

/// Breadth-first search through length-preserving multiply moves for a pair
/// admitting a decreasing move. Returns the path of tie moves.
fn tie_search(start: &[Word; 2]) -> Result<Option<Vec<NielsenMove>>> {
    if start[0].is_identity() || start[1].is_identity() {
        return Ok(None);
    }
    let mut parent: HashMap<[Word; 2], Option<([Word; 2], NielsenMove)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        for (slot, side, inverse) in MULTIPLY_ORDER {
            let mv = NielsenMove::Multiply { slot, side, inverse };
            let mut next = cur.clone();
            mv.apply(&mut next)?;
            if next[slot].len() != cur[slot].len() || parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((cur.clone(), mv)));
            if first_decreasing(&next)?.is_some() {
                let mut path = Vec::new();
                let mut at = next;
                while let Some(Some((prev, mv))) = parent.get(&at) {
                    path.push(*mv);
                    at = prev.clone();
                }
                path.reverse();
                return Ok(Some(path));
            }
            queue.push_back(next);
        }
    }
    Ok(None)
}

/// Nielsen-reduces the pair `(a, b)`. An empty word ends up in slot 1.
pub fn nielsen_reduce(a: &Word, b: &Word) -> Result<NielsenCertificate> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank(), right: b.rank() });
    }
    let original = [a.clone(), b.clone()];
    let mut pair = original.clone();
    let mut steps = Vec::new();
    loop {
        if let Some(mv) = first_decreasing(&pair)? {
            mv.apply(&mut pair)?;
            steps.push(NielsenStep { mv, tie: false });
            continue;
        }
        match tie_search(&pair)? {
            Some(path) => {
                for mv in path {
                    mv.apply(&mut pair)?;
                    steps.push(NielsenStep { mv, tie: true });
                }
            }
            None => break,
        }
    }
    if pair[0].is_identity() && !pair[1].is_identity() {
        NielsenMove::Swap.apply(&mut pair)?;
        steps.push(NielsenStep { mv: NielsenMove::Swap, tie: true });
    }
    Ok(NielsenCertificate { original, final_pair: pair, steps })
}

/// Whether `τ_{W,V}` is an automorphism of `F_2`.
pub fn is_automorphism(pair: &SolutionPair) -> bool {
    nielsen_reduce(pair.w(), pair.v()).map(|c| c.is_basis()).unwrap_or(false)
}

/// The pair `(W^r, V^r)` with `τ_{W^r,V^r} = τ_{W,V}^-1`.
///
/// Replaying the certificate on `(x, y)` gives words `P_j` with
/// `τ(P_j) = final_j = g_j^±1`, hence `τ^-1(g_j) = P_j^±1`.
pub fn invert_pair(pair: &SolutionPair) -> Result<SolutionPair> {
    let cert = nielsen_reduce(pair.w(), pair.v())?;
    if !cert.is_basis() {
        return Err(Error::NotAnAutomorphism);
    }
    let p = cert.replay([Word::generator(2, 1)?, Word::generator(2, 2)?])?;
    let mut images = [Word::identity(2), Word::identity(2)];
    for (j, fin) in cert.final_pair().iter().enumerate() {
        let s = fin.syllables()[0];
        images[(s.gen().index() - 1) as usize] = p[j].pow(s.exp())?;
    }
    let [w, v] = images;
    let inverse = SolutionPair::new(w, v)?;
    debug_assert!(Endomorphism::compose(&inverse.tau(), &pair.tau()).is_ok_and(|e| e.is_identity()));
    debug_assert!(Endomorphism::compose(&pair.tau(), &inverse.tau()).is_ok_and(|e| e.is_identity()));
    Ok(inverse)
}

/// Rank of the subgroup `⟨a, b⟩`: 0 if trivial, 1 if cyclic (`a` and `b`
/// commute), 2 otherwise.
pub fn generated_rank(a: &Word, b: &Word) -> Result<u8> {
    if a.is_identity() && b.is_identity() {
        return Ok(0);
    }
    let commutator = a.concat(b)?.concat(&b.concat(a)?.inverse())?;
    Ok(if commutator.is_identity() { 1 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    fn as_set(p: &[Word; 2]) -> BTreeSet<Word> {
        p.iter().cloned().collect()
    }

    fn pair(a: &str, b: &str) -> SolutionPair {
        SolutionPair::parse(a, b).unwrap()
    }

    #[test]
    fn reduce_artin() {
        let c = nielsen_reduce(&w("y"), &w("y^-1 x y")).unwrap();
        let fin = c.final_pair();
        let gens: BTreeSet<u32> = fin.iter().map(|u| u.syllables()[0].gen().index()).collect();
        assert_eq!(gens, BTreeSet::from([1, 2]));
        assert!(c.is_basis());
        assert_eq!(c.steps().len(), 2);
        assert!(c.steps().iter().all(|s| !s.tie));
        assert_eq!(&c.replay(c.original().clone()).unwrap(), fin);
    }

    #[test]
    fn reduce_trivial_and_non_basis() {
        let c = nielsen_reduce(&w("x"), &w("y")).unwrap();
        assert!(c.steps().is_empty());
        assert_eq!(as_set(c.final_pair()), as_set(&[w("x"), w("y")]));
        let c = nielsen_reduce(&w("x"), &w("y^2")).unwrap();
        assert!(c.steps().is_empty());
        assert_eq!(c.final_pair(), &[w("x"), w("y^2")]);
        assert!(!c.is_basis());
    }

    #[test]
    fn empty_word_goes_to_slot_one() {
        let c = nielsen_reduce(&w("1"), &w("x y")).unwrap();
        assert_eq!(c.final_pair(), &[w("x y"), w("1")]);
        let c = nielsen_reduce(&w("x y"), &w("x y")).unwrap();
        assert_eq!(c.final_pair()[1], w("1"));
    }

    #[test]
    fn automorphism_examples() {
        assert!(is_automorphism(&SolutionPair::artin()));
        assert!(!is_automorphism(&pair("1", "y")));
        assert!(!is_automorphism(&pair("y^2", "x")));
        assert!(is_automorphism(&pair("x y", "x y^2")));
        assert!(!is_automorphism(&pair("x y", "x y^-1")));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert_pair(&pair("x", "y")).unwrap(), pair("x", "y"));
        assert_eq!(invert_pair(&pair("y", "x^-1")).unwrap(), pair("y^-1", "x"));
        assert_eq!(invert_pair(&pair("x y^-1 x^-1", "x y^2")).unwrap(), pair("x^2 y", "y^-1 x^-1 y"));
        assert_eq!(invert_pair(&SolutionPair::artin()).unwrap(), pair("x y x^-1", "x"));
        assert_eq!(invert_pair(&pair("1", "y")), Err(Error::NotAnAutomorphism));
    }

    #[test]
    fn express_original_rewrites() {
        for (a, b) in [("y", "y^-1 x y"), ("x y^-1 x^-1", "x y^2"), ("x^2 y", "x^3 y x y"), ("x y x^-1", "x y^2 x^-1")] {
            let c = nielsen_reduce(&w(a), &w(b)).unwrap();
            let q = c.express_original().unwrap();
            let fin = c.final_pair().to_vec();
            assert_eq!(q[0].substitute(&fin).unwrap(), w(a));
            assert_eq!(q[1].substitute(&fin).unwrap(), w(b));
        }
    }

    #[test]
    fn generated_rank_examples() {
        assert_eq!(generated_rank(&w("x^2"), &w("x^-3")).unwrap(), 1);
        assert_eq!(generated_rank(&w("1"), &w("1")).unwrap(), 0);
        assert_eq!(generated_rank(&w("y"), &w("y^-1 x y")).unwrap(), 2);
        assert_eq!(generated_rank(&w("1"), &w("x y")).unwrap(), 1);
    }
}
