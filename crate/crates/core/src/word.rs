//! Reduced words in finitely generated free groups.
//!
//! A [`Word`] is stored in syllable normal form: a sequence of `(generator,
//! exponent)` runs where adjacent runs use distinct generators and every
//! exponent is nonzero. Every constructor reduces eagerly, so any `Word` value
//! is a reduced word and equality of values is equality in the free group.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A free generator `x_index` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(u32);

impl Generator {
    pub fn new(index: u32) -> Result<Self> {
        if index == 0 {
            Err(Error::ZeroGenerator)
        } else {
            Ok(Self(index))
        }
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

/// A single letter `x_i` or `x_i^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: Generator, inverse: bool) -> Self {
        Self { gen, inverse }
    }

    pub fn positive(index: u32) -> Result<Self> {
        Ok(Self::new(Generator::new(index)?, false))
    }

    pub fn negative(index: u32) -> Result<Self> {
        Ok(Self::new(Generator::new(index)?, true))
    }

    pub fn inverted(self) -> Self {
        Self { gen: self.gen, inverse: !self.inverse }
    }

    /// Position in the letter order `x1 < x1^-1 < x2 < x2^-1 < ...`.
    pub fn code(self) -> u32 {
        (self.gen.0 - 1) * 2 + u32::from(self.inverse)
    }

    fn from_code(code: u32) -> Self {
        Self { gen: Generator(code / 2 + 1), inverse: code % 2 == 1 }
    }

    fn exp(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A maximal run `gen^exp` inside a reduced word; `exp` is never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    gen: Generator,
    exp: i64,
}

impl Syllable {
    pub fn gen(&self) -> Generator {
        self.gen
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }
}

/// Accumulates syllables while keeping the buffer reduced.
#[derive(Debug, Clone)]
struct Builder {
    rank: u32,
    syllables: Vec<Syllable>,
}

impl Builder {
    fn new(rank: u32) -> Self {
        Self { rank, syllables: Vec::new() }
    }

    fn push(&mut self, gen: Generator, exp: i64) -> Result<()> {
        if exp == 0 {
            return Ok(());
        }
        match self.syllables.last_mut() {
            Some(last) if last.gen == gen => {
                let sum = last.exp.checked_add(exp).ok_or(Error::ExponentOverflow)?;
                if sum == 0 {
                    self.syllables.pop();
                } else {
                    last.exp = sum;
                }
            }
            _ => self.syllables.push(Syllable { gen, exp }),
        }
        Ok(())
    }

    fn push_word(&mut self, w: &Word) -> Result<()> {
        for s in &w.syllables {
            self.push(s.gen, s.exp)?;
        }
        Ok(())
    }

    fn push_inverse(&mut self, w: &Word) -> Result<()> {
        for s in w.syllables.iter().rev() {
            self.push(s.gen, -s.exp)?;
        }
        Ok(())
    }

    /// Appends `w^k`.
    fn push_power(&mut self, w: &Word, k: i64) -> Result<()> {
        if k == 0 || w.is_identity() {
            return Ok(());
        }
        if let [s] = w.syllables.as_slice() {
            let exp = s.exp.checked_mul(k).ok_or(Error::ExponentOverflow)?;
            return self.push(s.gen, exp);
        }
        let (core, conj) = w.cyclic_reduce();
        self.push_word(&conj)?;
        if let [s] = core.syllables.as_slice() {
            let exp = s.exp.checked_mul(k).ok_or(Error::ExponentOverflow)?;
            self.push(s.gen, exp)?;
        } else {
            for _ in 0..k.unsigned_abs() {
                if k > 0 {
                    self.push_word(&core)?;
                } else {
                    self.push_inverse(&core)?;
                }
            }
        }
        self.push_inverse(&conj)
    }

    fn finish(self) -> Word {
        Word { rank: self.rank, syllables: self.syllables }
    }
}

/// A reduced word in the free group of the given rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: u32,
    syllables: Vec<Syllable>,
}

/// Freely reduces a letter sequence.
pub fn reduce<I>(letters: I, rank: u32) -> Result<Word>
where
    I: IntoIterator<Item = Letter>,
{
    let mut b = Builder::new(rank);
    for l in letters {
        check_gen(l.gen.0, rank)?;
        b.push(l.gen, l.exp())?;
    }
    Ok(b.finish())
}

fn check_gen(index: u32, rank: u32) -> Result<()> {
    if index == 0 {
        Err(Error::ZeroGenerator)
    } else if index > rank {
        Err(Error::InvalidGenerator { index, rank })
    } else {
        Ok(())
    }
}

fn check_rank(left: u32, right: u32) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::RankMismatch { left, right })
    }
}

impl Word {
    pub fn identity(rank: u32) -> Self {
        Self { rank, syllables: Vec::new() }
    }

    /// The word `x_index`.
    pub fn generator(rank: u32, index: u32) -> Result<Self> {
        Self::power_of(rank, index, 1)
    }

    /// The word `x_index^exp`.
    pub fn power_of(rank: u32, index: u32, exp: i64) -> Result<Self> {
        Self::from_syllables(rank, [(index, exp)])
    }

    /// Builds a word from `(generator index, exponent)` runs, reducing as it goes.
    /// Zero exponents are skipped.
    pub fn from_syllables<I>(rank: u32, runs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, i64)>,
    {
        let mut b = Builder::new(rank);
        for (index, exp) in runs {
            check_gen(index, rank)?;
            b.push(Generator(index), exp)?;
        }
        Ok(b.finish())
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Letter length.
    pub fn len(&self) -> usize {
        self.syllables.iter().map(|s| s.exp.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.syllables.iter().flat_map(|s| {
            let l = Letter::new(s.gen, s.exp < 0);
            std::iter::repeat_n(l, s.exp.unsigned_abs() as usize)
        })
    }

    pub fn first_letter(&self) -> Option<Letter> {
        self.syllables.first().map(|s| Letter::new(s.gen, s.exp < 0))
    }

    pub fn last_letter(&self) -> Option<Letter> {
        self.syllables.last().map(|s| Letter::new(s.gen, s.exp < 0))
    }

    /// The same element viewed in a free group of another rank.
    pub fn with_rank(&self, rank: u32) -> Result<Self> {
        for s in &self.syllables {
            check_gen(s.gen.0, rank)?;
        }
        Ok(Self { rank, syllables: self.syllables.clone() })
    }

    /// Group product `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        check_rank(self.rank, other.rank)?;
        let mut b = Builder { rank: self.rank, syllables: self.syllables.clone() };
        b.push_word(other)?;
        Ok(b.finish())
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable { gen: s.gen, exp: -s.exp })
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Result<Word> {
        let mut b = Builder::new(self.rank);
        b.push_power(self, k)?;
        Ok(b.finish())
    }

    /// Evaluates this word with `x_j ↦ images[j-1]`.
    ///
    /// The result lives in the rank shared by all images. Substitution is a
    /// group homomorphism, so it distributes over [`Word::concat`].
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        if images.len() != self.rank as usize {
            return Err(Error::ArityMismatch { expected: self.rank as usize, actual: images.len() });
        }
        let target = images.first().map_or(0, |w| w.rank);
        for img in images {
            check_rank(target, img.rank)?;
        }
        let mut b = Builder::new(target);
        for s in &self.syllables {
            b.push_power(&images[(s.gen.0 - 1) as usize], s.exp)?;
        }
        Ok(b.finish())
    }

    /// Splits `self = conjugator · core · conjugator^-1` with `core` cyclically
    /// reduced and `conjugator` as short as possible.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut core: std::collections::VecDeque<Syllable> = self.syllables.iter().copied().collect();
        let mut conj = Builder::new(self.rank);
        while core.len() >= 2 {
            let first = core[0];
            let last = core[core.len() - 1];
            if first.gen != last.gen || (first.exp > 0) == (last.exp > 0) {
                break;
            }
            let peel = first.exp.abs().min(last.exp.abs());
            let sign = first.exp.signum();
            // Exponents are bounded by existing ones, so this cannot overflow.
            conj.push(first.gen, sign * peel).expect("peel within existing exponent");
            core[0].exp -= sign * peel;
            let end = core.len() - 1;
            core[end].exp += sign * peel;
            if core[end].exp == 0 {
                core.pop_back();
            }
            if core[0].exp == 0 {
                core.pop_front();
            }
        }
        (Word { rank: self.rank, syllables: core.into_iter().collect() }, conj.finish())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first_letter(), self.last_letter()) {
            (Some(a), Some(b)) => a != b.inverted(),
            _ => true,
        }
    }

    /// Returns `(root, k)` with `self = root^k` and `k` maximal.
    ///
    /// The cyclic core's shortest period is read off the KMP failure function;
    /// a word is a proper power exactly when its cyclic core is.
    pub fn proper_power(&self) -> Result<(Word, u64)> {
        if self.is_identity() {
            return Err(Error::EmptyWord);
        }
        let (core, conj) = self.cyclic_reduce();
        let codes: Vec<u32> = core.letters().map(Letter::code).collect();
        let n = codes.len();
        let mut fail = vec![0usize; n + 1];
        let mut k = 0usize;
        for i in 1..n {
            while k > 0 && codes[i] != codes[k] {
                k = fail[k];
            }
            if codes[i] == codes[k] {
                k += 1;
            }
            fail[i + 1] = k;
        }
        let period = n - fail[n];
        let (period, power) = if n.is_multiple_of(period) { (period, n / period) } else { (n, 1) };
        let root_core = reduce(codes[..period].iter().map(|&c| Letter::from_code(c)), self.rank)?;
        let root = conj.concat(&root_core)?.concat(&conj.inverse())?;
        Ok((root, power as u64))
    }

    /// Number of letters `g^±1` in the word.
    pub fn letter_count(&self, g: Generator) -> u64 {
        self.syllables.iter().filter(|s| s.gen == g).map(|s| s.exp.unsigned_abs()).sum()
    }

    /// Exponent sum of `g`.
    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.syllables.iter().filter(|s| s.gen == g).map(|s| s.exp).sum()
    }

    /// Parses the word grammar, e.g. `"y^-1 x y"`, `"x1 x2^3"`, `"1"`.
    pub fn parse(text: &str, rank: u32) -> Result<Word> {
        Parser { src: text.as_bytes(), pos: 0 }.word(rank)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rank first, then shortlex over `x1 < x1^-1 < x2 < x2^-1 < ...`.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.letters().map(Letter::code).cmp(other.letters().map(Letter::code)))
    }
}

fn gen_name(index: u32, rank: u32) -> String {
    match (rank <= 3, index) {
        (true, 1) => "x".into(),
        (true, 2) => "y".into(),
        (true, 3) => "z".into(),
        _ => format!("x{index}"),
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&gen_name(s.gen.0, self.rank))?;
            if s.exp != 1 {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word<F{}>({})", self.rank, self)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> &[u8] {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn word(mut self, rank: u32) -> Result<Word> {
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty input (the identity is written 1)");
        }
        if self.peek() == Some(b'1') {
            self.pos += 1;
            self.skip_ws();
            if self.peek().is_some() {
                return self.err("unexpected input after identity 1");
            }
            return Ok(Word::identity(rank));
        }
        let mut b = Builder::new(rank);
        while self.peek().is_some() {
            let start = self.pos;
            let index = match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let d = self.digits();
                    if d.is_empty() {
                        1
                    } else {
                        let v = std::str::from_utf8(d).ok().and_then(|s| s.parse::<u32>().ok());
                        match v {
                            Some(v) if v > 0 => v,
                            _ => {
                                self.pos = start;
                                return self.err("bad generator index");
                            }
                        }
                    }
                }
                Some(b'y') => {
                    self.pos += 1;
                    2
                }
                Some(b'z') => {
                    self.pos += 1;
                    3
                }
                _ => return self.err("expected generator x, y, z or x<n>"),
            };
            if index > rank {
                return Err(Error::InvalidGenerator { index, rank });
            }
            self.skip_ws();
            let mut exp = 1i64;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let num_start = self.pos;
                let negative = match self.peek() {
                    Some(b'-') => {
                        self.pos += 1;
                        true
                    }
                    Some(b'+') => {
                        self.pos += 1;
                        false
                    }
                    _ => false,
                };
                let d = self.digits();
                if d.is_empty() {
                    return self.err("expected exponent");
                }
                let magnitude = std::str::from_utf8(d).ok().and_then(|s| s.parse::<i64>().ok());
                exp = match magnitude {
                    Some(0) => {
                        self.pos = num_start;
                        return self.err("exponent must be nonzero");
                    }
                    Some(m) if negative => -m,
                    Some(m) => m,
                    None => {
                        self.pos = num_start;
                        return Err(Error::ExponentOverflow);
                    }
                };
                self.skip_ws();
            }
            b.push(Generator(index), exp)?;
        }
        Ok(b.finish())
    }
}

/// Reduced words of letter length in `min_len..=max_len`, in shortlex order.
#[derive(Debug, Clone)]
pub struct ReducedWords {
    rank: u32,
    max_len: usize,
    seq: Vec<u32>,
    started: bool,
    finished: bool,
}

/// Every reduced word of length at most `max_len`, shortest first, then
/// lexicographic in `x1 < x1^-1 < x2 < x2^-1 < ...`.
pub fn enumerate_reduced_words(rank: u32, max_len: usize) -> ReducedWords {
    ReducedWords::new(rank, 0, max_len)
}

/// Reduced words of exactly `len` letters.
pub fn reduced_words_of_length(rank: u32, len: usize) -> ReducedWords {
    ReducedWords::new(rank, len, len)
}

impl ReducedWords {
    pub fn new(rank: u32, min_len: usize, max_len: usize) -> Self {
        let finished = min_len > max_len || (rank == 0 && min_len > 0);
        Self { rank, max_len, seq: Self::minimal(min_len), started: false, finished }
    }

    fn minimal(len: usize) -> Vec<u32> {
        vec![0; len]
    }

    fn smallest_after(prev: u32) -> u32 {
        // x1^-1 cannot be followed by x1
        u32::from(prev == 1)
    }

    fn advance(&mut self) -> bool {
        let alphabet = 2 * self.rank;
        for p in (0..self.seq.len()).rev() {
            let candidate = (self.seq[p] + 1..alphabet).find(|&c| p == 0 || c != self.seq[p - 1] ^ 1);
            if let Some(c) = candidate {
                self.seq[p] = c;
                for q in p + 1..self.seq.len() {
                    self.seq[q] = Self::smallest_after(self.seq[q - 1]);
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> Word {
        let mut b = Builder::new(self.rank);
        for &c in &self.seq {
            let l = Letter::from_code(c);
            b.push(l.gen, l.exp()).expect("enumerated letters are in range");
        }
        b.finish()
    }
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if !self.advance() {
            let len = self.seq.len() + 1;
            if len > self.max_len || self.rank == 0 {
                self.finished = true;
                return None;
            }
            self.seq = Self::minimal(len);
        }
        Some(self.current())
    }
}

/// Number of reduced words of exactly `len` letters in `F_rank`.
pub fn count_reduced_words(rank: u32, len: usize) -> u128 {
    match (rank, len) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => 2 * rank as u128 * (2 * rank as u128 - 1).pow(len as u32 - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    fn l(index: u32, inverse: bool) -> Letter {
        Letter::new(Generator::new(index).unwrap(), inverse)
    }

    #[test]
    fn reduce_examples() {
        let x = |inv| l(1, inv);
        let y = |inv| l(2, inv);
        assert_eq!(reduce([x(false), y(false), y(true), x(false)], 2).unwrap(), w("x^2"));
        assert_eq!(reduce([x(false), x(true)], 2).unwrap(), Word::identity(2));
        assert_eq!(reduce([y(true), x(false), x(true), y(false), x(false)], 2).unwrap(), w("x"));
        assert_eq!(reduce([l(3, false)], 2), Err(Error::InvalidGenerator { index: 3, rank: 2 }));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w("x y").concat(&w("y^-1 x")).unwrap(), w("x^2"));
        assert_eq!(w("x y^2").concat(&w("1")).unwrap(), w("x y^2"));
        assert!(w("x y x^-1").concat(&w("x y^-1 x^-1")).unwrap().is_identity());
        let z = Word::generator(3, 3).unwrap();
        assert!(matches!(w("x").concat(&z), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w("x y^-1").inverse(), w("y x^-1"));
        assert_eq!(w("1").inverse(), w("1"));
        assert_eq!(w("x^2 y^3 x^-1").inverse(), w("x y^-3 x^-2"));
    }

    #[test]
    fn substitute_examples() {
        let f3 = |s: &str| Word::parse(s, 3).unwrap();
        assert_eq!(w("y^-1 x y").substitute(&[f3("x"), f3("y")]).unwrap(), f3("y^-1 x y"));
        assert_eq!(w("y").substitute(&[f3("y"), f3("z")]).unwrap(), f3("z"));
        assert_eq!(w("x y").substitute(&[w("x y^-1"), w("y x")]).unwrap(), w("x^2"));
        assert!(matches!(w("x").substitute(&[w("x")]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(w("x y x^-1").cyclic_reduce(), (w("y"), w("x")));
        assert_eq!(w("x y").cyclic_reduce(), (w("x y"), w("1")));
        assert_eq!(w("x^2 y^-1 x^-1").cyclic_reduce(), (w("x y^-1"), w("x")));
        assert_eq!(w("x^3 y x^-3").cyclic_reduce(), (w("y"), w("x^3")));
    }

    #[test]
    fn proper_power_examples() {
        assert_eq!(w("x^4").proper_power().unwrap(), (w("x"), 4));
        assert_eq!(w("x y x y").proper_power().unwrap(), (w("x y"), 2));
        assert_eq!(w("x y").proper_power().unwrap(), (w("x y"), 1));
        assert_eq!(w("y^-1 x y x y x y^2").proper_power().unwrap(), (w("y^-1 x y^2"), 3));
        assert_eq!(w("x y x^2 y x").proper_power().unwrap(), (w("x y x"), 2));
        assert_eq!(w("1").proper_power(), Err(Error::EmptyWord));
    }

    #[test]
    fn letter_count_examples() {
        let x = Generator::new(1).unwrap();
        assert_eq!(w("x^2 y^-1 x").letter_count(x), 3);
        assert_eq!(w("1").letter_count(x), 0);
        assert_eq!(w("y^-2").letter_count(x), 0);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_reduced_words(2, 0).collect::<Vec<_>>(), vec![w("1")]);
        let one: Vec<String> = enumerate_reduced_words(2, 1).map(|u| u.to_string()).collect();
        assert_eq!(one, ["1", "x", "x^-1", "y", "y^-1"]);
        assert_eq!(enumerate_reduced_words(2, 3).count(), 53);
        let two: Vec<String> = reduced_words_of_length(2, 2).map(|u| u.to_string()).collect();
        assert_eq!(
            two,
            ["x^2", "x y", "x y^-1", "x^-2", "x^-1 y", "x^-1 y^-1", "y x", "y x^-1", "y^2", "y^-1 x", "y^-1 x^-1", "y^-2"]
        );
        assert_eq!(enumerate_reduced_words(0, 4).count(), 1);
    }

    #[test]
    fn enumeration_counts_unique_sorted() {
        for rank in 1..=3 {
            for len in 0..=5 {
                let words: Vec<Word> = reduced_words_of_length(rank, len).collect();
                assert_eq!(words.len() as u128, count_reduced_words(rank, len));
                assert!(words.iter().all(|u| u.len() == len));
                assert!(words.windows(2).all(|p| p[0] < p[1]), "strictly increasing means no duplicates");
            }
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("y^-1 x y").to_string(), "y^-1 x y");
        assert!(w("1").is_identity());
        assert!(w("x x^-1").is_identity());
        assert_eq!(w("xy^2x"), w("x y^2 x"));
        assert_eq!(w("x1 x2^+2"), w("x y^2"));
        assert_eq!(Word::parse("x4 x1", 4).unwrap().to_string(), "x4 x1");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Word::parse("", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x^0", 2), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(Word::parse("x^", 2), Err(Error::Syntax { .. })));
        assert!(matches!(Word::parse("x q", 2), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(Word::parse("1 x", 2), Err(Error::Syntax { .. })));
        assert_eq!(Word::parse("z", 2), Err(Error::InvalidGenerator { index: 3, rank: 2 }));
        assert_eq!(Word::parse("x0", 2).unwrap_err(), Error::Syntax { position: 0, message: "bad generator index".into() });
        assert_eq!(Word::parse("x^99999999999999999999", 2), Err(Error::ExponentOverflow));
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let big = Word::power_of(2, 1, i64::MAX).unwrap();
        assert_eq!(big.concat(&w("x")), Err(Error::ExponentOverflow));
        assert_eq!(w("x^2").pow(i64::MAX), Err(Error::ExponentOverflow));
    }

    #[test]
    fn pow_uses_cyclic_core() {
        assert_eq!(w("x y x^-1").pow(1_000_000).unwrap(), Word::from_syllables(2, [(1, 1), (2, 1_000_000), (1, -1)]).unwrap());
        assert_eq!(w("x y").pow(-2).unwrap(), w("y^-1 x^-1 y^-1 x^-1"));
    }

    fn arb_word(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((1..=rank, any::<bool>()), 0..=max_len)
            .prop_map(move |ls| reduce(ls.into_iter().map(|(g, i)| l(g, i)), rank).unwrap())
    }

    proptest! {
        #[test]
        fn format_parse_round_trip(u in arb_word(3, 16)) {
            prop_assert_eq!(Word::parse(&u.to_string(), 3).unwrap(), u);
        }

        #[test]
        fn format_parse_round_trip_high_rank(u in arb_word(5, 12)) {
            prop_assert_eq!(Word::parse(&u.to_string(), 5).unwrap(), u);
        }

        #[test]
        fn inverse_is_group_inverse(u in arb_word(2, 16)) {
            prop_assert!(u.concat(&u.inverse()).unwrap().is_identity());
            prop_assert_eq!(u.inverse().inverse(), u);
        }

        #[test]
        fn pow_matches_repeated_concat(u in arb_word(2, 8), k in -4i64..=4) {
            let mut acc = Word::identity(2);
            let step = if k >= 0 { u.clone() } else { u.inverse() };
            for _ in 0..k.abs() {
                acc = acc.concat(&step).unwrap();
            }
            prop_assert_eq!(u.pow(k).unwrap(), acc);
        }
    }
}
