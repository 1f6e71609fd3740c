//! The Yang–Baxter system `[T]`, `[M]`, `[B]` for a pair `(W, V)`.
//!
//! `(W, V)` solves the free-product Yang–Baxter equation over `Z` iff
//!
//! ```text
//! [T]  W(W(x,y), W(V(x,y),z))  = W(x, W(y,z))
//! [M]  V(W(x,y), W(V(x,y),z))  = W(V(x,W(y,z)), V(y,z))
//! [B]  V(V(x,y), z)            = V(V(x,W(y,z)), V(y,z))
//! ```
//!
//! holds in `F_3`. Both sides are evaluated by literal substitution and compared
//! as reduced words; everything else in the crate is tested against this.

mod census;
mod family;

use std::fmt;

pub use census::{
    enumerate_solutions, enumerate_solutions_parallel, group_orbits, orbit, orbit_representative, Orbit,
    SolutionRecord,
};
pub use family::{catalog, classify, family_instantiate, format_families, FamilyId};

use crate::endo::SolutionPair;
use crate::error::Result;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equation {
    T,
    M,
    B,
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equation::T => "T",
            Equation::M => "M",
            Equation::B => "B",
        })
    }
}

/// Both sides of one equation, reduced in `F_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub lhs: Word,
    pub rhs: Word,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Letters shown per witness word in human-readable output.
pub const WITNESS_DISPLAY_CAP: usize = 200;

/// Renders a word, truncating after `cap` letters.
pub fn capped(word: &Word, cap: usize) -> String {
    if word.len() <= cap {
        return word.to_string();
    }
    let head = crate::word::reduce(word.letters().take(cap), word.rank()).expect("prefix of a reduced word");
    format!("{head} ... (+{} letters)", word.len() - cap)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub t: Sides,
    pub m: Sides,
    pub b: Sides,
}

impl CheckReport {
    pub fn t_holds(&self) -> bool {
        self.t.holds()
    }

    pub fn m_holds(&self) -> bool {
        self.m.holds()
    }

    pub fn b_holds(&self) -> bool {
        self.b.holds()
    }

    pub fn is_solution(&self) -> bool {
        self.t_holds() && self.m_holds() && self.b_holds()
    }

    pub fn sides(&self, eq: Equation) -> &Sides {
        match eq {
            Equation::T => &self.t,
            Equation::M => &self.m,
            Equation::B => &self.b,
        }
    }

    /// `(lhs, rhs)` for each failed equation.
    pub fn witnesses(&self) -> Vec<(Equation, &Sides)> {
        [Equation::T, Equation::M, Equation::B]
            .into_iter()
            .map(|e| (e, self.sides(e)))
            .filter(|(_, s)| !s.holds())
            .collect()
    }
}

/// `T ok, M ok, B ok`, followed by one capped witness line per failure.
impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |ok: bool| if ok { "ok" } else { "FAIL" };
        write!(f, "T {}, M {}, B {}", verdict(self.t_holds()), verdict(self.m_holds()), verdict(self.b_holds()))?;
        for (eq, s) in self.witnesses() {
            write!(
                f,
                "\n[{eq}] lhs = {}\n[{eq}] rhs = {}",
                capped(&s.lhs, WITNESS_DISPLAY_CAP),
                capped(&s.rhs, WITNESS_DISPLAY_CAP)
            )?;
        }
        Ok(())
    }
}

/// The subterms shared by the three equations.
struct Terms {
    pair: SolutionPair,
    x: Word,
    y: Word,
    z: Word,
}

impl Terms {
    fn new(pair: &SolutionPair) -> Self {
        let g = |i| Word::generator(3, i).expect("rank 3");
        Self { pair: pair.clone(), x: g(1), y: g(2), z: g(3) }
    }

    fn w(&self, a: &Word, b: &Word) -> Result<Word> {
        self.pair.w().substitute(&[a.clone(), b.clone()])
    }

    fn v(&self, a: &Word, b: &Word) -> Result<Word> {
        self.pair.v().substitute(&[a.clone(), b.clone()])
    }

    fn t(&self) -> Result<Sides> {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let lhs = self.w(&self.w(x, y)?, &self.w(&self.v(x, y)?, z)?)?;
        let rhs = self.w(x, &self.w(y, z)?)?;
        Ok(Sides { lhs, rhs })
    }

    fn m(&self) -> Result<Sides> {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let lhs = self.v(&self.w(x, y)?, &self.w(&self.v(x, y)?, z)?)?;
        let rhs = self.w(&self.v(x, &self.w(y, z)?)?, &self.v(y, z)?)?;
        Ok(Sides { lhs, rhs })
    }

    fn b(&self) -> Result<Sides> {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        let lhs = self.v(&self.v(x, y)?, z)?;
        let rhs = self.v(&self.v(x, &self.w(y, z)?)?, &self.v(y, z)?)?;
        Ok(Sides { lhs, rhs })
    }
}

pub fn check_t(pair: &SolutionPair) -> Result<Sides> {
    Terms::new(pair).t()
}

pub fn check_m(pair: &SolutionPair) -> Result<Sides> {
    Terms::new(pair).m()
}

pub fn check_b(pair: &SolutionPair) -> Result<Sides> {
    Terms::new(pair).b()
}

/// Evaluates all three equations.
pub fn is_solution(pair: &SolutionPair) -> Result<CheckReport> {
    let terms = Terms::new(pair);
    Ok(CheckReport { t: terms.t()?, m: terms.m()?, b: terms.b()? })
}

/// Like [`is_solution`] but stops at the first failed equation; `None` means
/// the pair is not a solution.
pub fn solve_pruned(pair: &SolutionPair) -> Result<Option<CheckReport>> {
    let terms = Terms::new(pair);
    let t = terms.t()?;
    if !t.holds() {
        return Ok(None);
    }
    let m = terms.m()?;
    if !m.holds() {
        return Ok(None);
    }
    let b = terms.b()?;
    Ok(b.holds().then_some(CheckReport { t, m, b }))
}
