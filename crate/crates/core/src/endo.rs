//! Endomorphisms of free groups as generator-image tables.
//!
//! All composition follows the left-action convention: `compose(outer, inner)`
//! is the map `u ↦ outer(inner(u))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    images: Vec<Word>,
}

impl Endomorphism {
    /// `x_j ↦ images[j-1]`; every image must live in `F_n` with `n = images.len()`.
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let n = images.len() as u32;
        if n == 0 {
            return Err(Error::InvalidInput("endomorphism of F_0".into()));
        }
        if let Some(bad) = images.iter().find(|w| w.rank() != n) {
            return Err(Error::RankMismatch { left: n, right: bad.rank() });
        }
        Ok(Self { images })
    }

    pub fn identity(rank: u32) -> Self {
        Self { images: (1..=rank).map(|j| Word::generator(rank, j).expect("j <= rank")).collect() }
    }

    pub fn rank(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    pub fn apply(&self, u: &Word) -> Result<Word> {
        if u.rank() != self.rank() {
            return Err(Error::RankMismatch { left: self.rank(), right: u.rank() });
        }
        u.substitute(&self.images)
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &Endomorphism, inner: &Endomorphism) -> Result<Endomorphism> {
        if outer.rank() != inner.rank() {
            return Err(Error::RankMismatch { left: outer.rank(), right: inner.rank() });
        }
        let images = inner.images.iter().map(|w| outer.apply(w)).collect::<Result<_>>()?;
        Ok(Endomorphism { images })
    }

    /// `τ_i = id_{F_{i-1}} * τ_{W,V} * id_{F_{n-i-1}}` on `F_n`:
    /// `x_i ↦ W(x_i, x_{i+1})`, `x_{i+1} ↦ V(x_i, x_{i+1})`, other generators fixed.
    pub fn tau_i(pair: &SolutionPair, i: usize, n: usize) -> Result<Endomorphism> {
        if n < 2 || i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let rank = n as u32;
        let local = [Word::generator(rank, i as u32)?, Word::generator(rank, i as u32 + 1)?];
        let mut images: Vec<Word> = (1..=rank).map(|j| Word::generator(rank, j)).collect::<Result<_>>()?;
        images[i - 1] = pair.w().substitute(&local)?;
        images[i] = pair.v().substitute(&local)?;
        Ok(Endomorphism { images })
    }
}

/// One line per generator: `x<j> -> <word>`.
impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, img) in self.images.iter().enumerate() {
            if j > 0 {
                writeln!(f)?;
            }
            write!(f, "x{} -> {}", j + 1, img)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images.iter().map(|w| w.to_string())).finish()
    }
}

/// A pair `(W, V)` of reduced words in `F_2`, defining `τ_{W,V}: x ↦ W, y ↦ V`.
///
/// Ordered lexicographically by `(W, V)` using the shortlex word order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionPair {
    w: Word,
    v: Word,
}

impl SolutionPair {
    pub fn new(w: Word, v: Word) -> Result<Self> {
        for word in [&w, &v] {
            if word.rank() != 2 {
                return Err(Error::RankMismatch { left: 2, right: word.rank() });
            }
        }
        Ok(Self { w, v })
    }

    pub fn parse(w: &str, v: &str) -> Result<Self> {
        Self::new(Word::parse(w, 2)?, Word::parse(v, 2)?)
    }

    /// `(y, y^-1 x y)`.
    pub fn artin() -> Self {
        Self::parse("y", "y^-1 x y").expect("literal")
    }

    pub fn w(&self) -> &Word {
        &self.w
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    /// `|W| + |V|`.
    pub fn total_len(&self) -> usize {
        self.w.len() + self.v.len()
    }

    /// `τ_{W,V}` as an endomorphism of `F_2`.
    pub fn tau(&self) -> Endomorphism {
        Endomorphism { images: vec![self.w.clone(), self.v.clone()] }
    }

    /// `(V(y,x), W(y,x))`.
    pub fn dual(&self) -> SolutionPair {
        let swap = [Word::generator(2, 2).expect("rank 2"), Word::generator(2, 1).expect("rank 2")];
        let w = self.v.substitute(&swap).expect("rank-2 substitution");
        let v = self.w.substitute(&swap).expect("rank-2 substitution");
        SolutionPair { w, v }
    }

    /// `red(W·V) = x y`, i.e. `τ_{W,V}` fixes the boundary word.
    pub fn is_boundary_fixing(&self) -> bool {
        let wv = self.w.concat(&self.v).expect("both rank 2");
        wv == Word::parse("x y", 2).expect("literal")
    }
}

impl TryFrom<Endomorphism> for SolutionPair {
    type Error = Error;

    fn try_from(e: Endomorphism) -> Result<Self> {
        match <[Word; 2]>::try_from(e.images) {
            Ok([w, v]) => Ok(SolutionPair { w, v }),
            Err(images) => Err(Error::RankMismatch { left: 2, right: images.len() as u32 }),
        }
    }
}

/// `(W, V)` in canonical word format.
impl fmt::Display for SolutionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.w, self.v)
    }
}

impl fmt::Debug for SolutionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
