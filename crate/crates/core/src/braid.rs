//! Braid words and the representation `σ_i ↦ τ_i` they induce for a pair.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use crate::endo::{Endomorphism, SolutionPair};
use crate::error::{Error, Result};
use crate::fgybe::is_solution;
use crate::nielsen::invert_pair;

/// `σ_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn new(index: usize, inverse: bool) -> Self {
        Self { index, inverse }
    }
}

/// A word in `σ_1^±1, ..., σ_{n-1}^±1` on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidInput("a braid needs at least one strand".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::IndexOutOfRange { index: l.index, max: strands - 1 });
        }
        Ok(Self { strands, letters })
    }

    pub fn empty(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses `"s1 s2^-1 s1^3"`; powers are expanded. `""` and `"1"` are the
    /// empty braid.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let src = text.as_bytes();
        let mut pos = 0;
        let mut letters = Vec::new();
        let syntax = |position: usize, message: &str| Error::Syntax { position, message: message.into() };
        let skip_ws = |pos: &mut usize| {
            while *pos < src.len() && src[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let number = |pos: &mut usize| -> Option<u64> {
            let start = *pos;
            while *pos < src.len() && src[*pos].is_ascii_digit() {
                *pos += 1;
            }
            text[start..*pos].parse().ok()
        };
        if text.trim() == "1" {
            return Self::empty(strands);
        }
        skip_ws(&mut pos);
        while pos < src.len() {
            if src[pos] != b's' {
                return Err(syntax(pos, "expected generator s<i>"));
            }
            pos += 1;
            let index_at = pos;
            let index = number(&mut pos).ok_or_else(|| syntax(index_at, "expected generator index"))?;
            skip_ws(&mut pos);
            let mut exp: i64 = 1;
            if pos < src.len() && src[pos] == b'^' {
                pos += 1;
                skip_ws(&mut pos);
                let exp_at = pos;
                let negative = match src.get(pos) {
                    Some(b'-') => {
                        pos += 1;
                        true
                    }
                    Some(b'+') => {
                        pos += 1;
                        false
                    }
                    _ => false,
                };
                let magnitude = number(&mut pos).ok_or_else(|| syntax(exp_at, "expected exponent"))?;
                if magnitude == 0 {
                    return Err(syntax(exp_at, "exponent must be nonzero"));
                }
                let magnitude = i64::try_from(magnitude).map_err(|_| Error::ExponentOverflow)?;
                exp = if negative { -magnitude } else { magnitude };
                skip_ws(&mut pos);
            }
            let letter = BraidLetter::new(index as usize, exp < 0);
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_negative_letters(&self) -> bool {
        self.letters.iter().any(|l| l.inverse)
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| BraidLetter::new(l.index, !l.inverse)).collect();
        BraidWord { strands: self.strands, letters }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::InvalidInput(format!("strand mismatch: {} vs {}", self.strands, other.strands)));
        }
        let letters = self.letters.iter().chain(&other.letters).copied().collect();
        Ok(BraidWord { strands: self.strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}", l.index)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// `Φ(b)` for the representation `σ_i ↦ τ_i` defined by `pair`.
///
/// `Φ(σ_a σ_b) = Φ(σ_a) ∘ Φ(σ_b)`. The pair must solve the system; inverse
/// letters additionally need `τ_{W,V}` to be an automorphism, positive words
/// are accepted for any solution.
pub fn braid_to_endo(b: &BraidWord, pair: &SolutionPair) -> Result<Endomorphism> {
    if !is_solution(pair)?.is_solution() {
        return Err(Error::NotASolution);
    }
    let inverse_pair = if b.has_negative_letters() { Some(invert_pair(pair)?) } else { None };
    let n = b.strands();
    let mut result = Endomorphism::identity(n as u32);
    let mut cache: HashMap<BraidLetter, Endomorphism> = HashMap::new();
    for &l in b.letters() {
        let tau = match cache.entry(l) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let local = if l.inverse { inverse_pair.as_ref().expect("computed above") } else { pair };
                e.insert(Endomorphism::tau_i(local, l.index, n)?)
            }
        };
        result = Endomorphism::compose(&result, tau)?;
    }
    Ok(result)
}

/// Whether `σ_i ↦ τ_i` respects the braid relations on `n >= 3` strands:
/// `τ_i τ_{i+1} τ_i = τ_{i+1} τ_i τ_{i+1}` and `τ_i τ_j = τ_j τ_i` for
/// `|i - j| > 1`. Checked on generator images, which determine an endomorphism.
pub fn verify_braid_relations(pair: &SolutionPair, n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("braid relations need at least 3 strands, got {n}")));
    }
    let taus: Vec<Endomorphism> = (1..n).map(|i| Endomorphism::tau_i(pair, i, n)).collect::<Result<_>>()?;
    let compose = |fs: &[&Endomorphism]| -> Result<Endomorphism> {
        fs.iter().try_fold(Endomorphism::identity(n as u32), |acc, f| Endomorphism::compose(&acc, f))
    };
    for i in 0..taus.len() {
        for j in i + 1..taus.len() {
            let (a, b) = (&taus[i], &taus[j]);
            let holds = if j == i + 1 {
                compose(&[a, b, a])? == compose(&[b, a, b])?
            } else {
                compose(&[a, b])? == compose(&[b, a])?
            };
            if !holds {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A permutation of `{1, ..., n}` stored 0-based as the image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    /// Image of the 1-based point `k`.
    pub fn image(&self, k: usize) -> usize {
        self.0[k - 1] + 1
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }

    /// Cycles including fixed points, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k + 1);
                k = self.0[k];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

/// Cycle notation without fixed points; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if moved.is_empty() {
            return f.write_str("()");
        }
        for c in moved {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Image of `b` in the symmetric group, `σ_i ↦ (i i+1)`.
pub fn braid_permutation(b: &BraidWord) -> Permutation {
    let n = b.strands();
    b.letters()
        .iter()
        .fold(Permutation::identity(n), |acc, l| acc.compose(&Permutation::transposition(n, l.index, l.index + 1)))
}
