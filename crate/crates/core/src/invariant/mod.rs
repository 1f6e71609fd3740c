//! Group presentations of braid closures and their abelian invariants.
//!
//! For a braid `β` on `n` strands the closure presentation is
//! `⟨x_1, ..., x_n | x_j^-1 · Φ(β)(x_j), j = 1..n⟩`. For the Artin pair this is
//! the classical link group presentation.

mod snf;

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use snf::{smith_normal_form, IntegerMatrix, SmithForm};

use crate::braid::{braid_to_endo, BraidWord};
use crate::endo::SolutionPair;
use crate::error::Result;
use crate::word::{reduce, Generator, Letter, Word};

/// Generators still present (1-based labels in the ambient free group) and
/// relators `r` meaning `r = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    ambient_rank: u32,
    generators: Vec<u32>,
    relators: Vec<Word>,
}

impl Presentation {
    /// `⟨x_1..x_n | relators⟩`; every relator must have rank `n`.
    pub fn new(n: u32, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if r.rank() != n {
                return Err(crate::error::Error::RankMismatch { left: n, right: r.rank() });
            }
        }
        Ok(Self { ambient_rank: n, generators: (1..=n).collect(), relators })
    }

    pub fn n_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn total_relator_length(&self) -> usize {
        self.relators.iter().map(Word::len).sum()
    }
}

/// `gens: n` then one relator per line.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}", self.n_generators())?;
        for r in &self.relators {
            write!(f, "\n{r}")?;
        }
        Ok(())
    }
}

/// Relators `x_j^-1 · Φ(b)(x_j)` for `j = 1..n`.
pub fn closure_presentation(b: &BraidWord, pair: &SolutionPair) -> Result<Presentation> {
    let phi = braid_to_endo(b, pair)?;
    let n = b.strands() as u32;
    let relators = (1..=n)
        .map(|j| {
            let x = Word::generator(n, j)?;
            x.inverse().concat(&phi.apply(&x)?)
        })
        .collect::<Result<_>>()?;
    Presentation::new(n, relators)
}

/// Exponent sums: row per relator, column per remaining generator.
pub fn abelianized_matrix(p: &Presentation) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(p.relators.len(), p.generators.len());
    for (r, rel) in p.relators.iter().enumerate() {
        for (c, &g) in p.generators.iter().enumerate() {
            let gen = Generator::new(g).expect("labels are 1-based");
            m.set(r, c, BigInt::from(rel.exponent_sum(gen)));
        }
    }
    m
}

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | d_2 | ... | d_k`, `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

/// `Z^r + Z/d1 + Z/d2`; the trivial group prints as `0`.
impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    abelian_invariants_with_form(p).0
}

/// The invariants together with the Smith form they were read from.
pub fn abelian_invariants_with_form(p: &Presentation) -> (AbelianInvariants, IntegerMatrix, SmithForm) {
    let m = abelianized_matrix(p);
    let form = smith_normal_form(&m);
    let factors = form.invariant_factors();
    let invariants = AbelianInvariants {
        free_rank: p.n_generators() - factors.len(),
        torsion: factors.into_iter().filter(|d| d.abs() > BigInt::one()).collect(),
    };
    (invariants, m, form)
}

fn rotate(word: &Word, start: usize) -> Word {
    let letters: Vec<Letter> = word.letters().collect();
    reduce(letters[start..].iter().chain(&letters[..start]).copied(), word.rank()).expect("same rank")
}

/// Least representative among all rotations of `r` and `r^-1`.
fn cyclic_key(r: &Word) -> Word {
    let inv = r.inverse();
    (0..r.len()).flat_map(|k| [rotate(r, k), rotate(&inv, k)]).min().unwrap_or_else(|| r.clone())
}

/// Tietze simplification: cyclically reduce relators, drop trivial and
/// duplicate relators (up to rotation and inversion), and eliminate a
/// generator occurring exactly once in some relator. Repeats to a fixpoint.
pub fn simplify(p: &Presentation) -> Presentation {
    let mut cur = p.clone();
    loop {
        let mut seen = HashSet::new();
        let relators: Vec<Word> = cur
            .relators
            .iter()
            .map(|r| r.cyclic_reduce().0)
            .filter(|r| !r.is_identity())
            .filter(|r| seen.insert(cyclic_key(r)))
            .collect();
        let changed = relators != cur.relators;
        cur.relators = relators;
        if let Some(next) = eliminate_one(&cur) {
            cur = next;
        } else if !changed {
            return cur;
        }
    }
}

fn eliminate_one(p: &Presentation) -> Option<Presentation> {
    for &g in &p.generators {
        let gen = Generator::new(g).expect("1-based");
        for (k, r) in p.relators.iter().enumerate() {
            if r.letter_count(gen) != 1 {
                continue;
            }
            let at = r.letters().position(|l| l.gen == gen).expect("count is 1");
            let rotated = rotate(r, at);
            let lead = rotated.first_letter().expect("nonempty");
            let rest = reduce(rotated.letters().skip(1), r.rank()).expect("same rank");
            // g^ε · rest = 1
            let replacement = if lead.inverse { rest } else { rest.inverse() };
            let mut images: Vec<Word> =
                (1..=p.ambient_rank).map(|j| Word::generator(p.ambient_rank, j).expect("in range")).collect();
            images[(g - 1) as usize] = replacement;
            let relators = p
                .relators
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, other)| other.substitute(&images).expect("same rank"))
                .collect();
            let generators = p.generators.iter().copied().filter(|&h| h != g).collect();
            return Some(Presentation { ambient_rank: p.ambient_rank, generators, relators });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    fn w(s: &str, n: u32) -> Word {
        Word::parse(s, n).unwrap()
    }

    fn matrix(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn closure_examples() {
        let artin = SolutionPair::artin();
        let p = closure_presentation(&braid("s1", 2), &artin).unwrap();
        assert_eq!(p.relators(), &[w("x^-1 y", 2), w("y^-2 x y", 2)]);

        let p = closure_presentation(&braid("", 1), &artin).unwrap();
        assert_eq!(p.relators(), &[Word::identity(1)]);
        assert_eq!(abelian_invariants(&p).to_string(), "Z^1");

        let pair = SolutionPair::parse("y^-1", "x^-1").unwrap();
        let p = closure_presentation(&braid("s1^3", 2), &pair).unwrap();
        assert_eq!(p.relators(), &[w("x^-1 y^-1", 2), w("y^-1 x^-1", 2)]);
        assert_eq!(abelianized_matrix(&p), matrix(&[vec![-1, -1], vec![-1, -1]]));
    }

    #[test]
    fn abelianized_examples() {
        let p = closure_presentation(&braid("s1^3", 2), &SolutionPair::artin()).unwrap();
        assert_eq!(abelianized_matrix(&p), matrix(&[vec![-1, 1], vec![1, -1]]));
        let trivial = Presentation::new(2, vec![Word::identity(2)]).unwrap();
        assert_eq!(abelianized_matrix(&trivial), matrix(&[vec![0, 0]]));
    }

    #[test]
    fn invariants_examples() {
        let artin = SolutionPair::artin();
        let inv = |s: &str| abelian_invariants(&closure_presentation(&braid(s, 2), &artin).unwrap());
        assert_eq!(inv("s1^3"), AbelianInvariants { free_rank: 1, torsion: vec![] });
        assert_eq!(inv("s1^2").to_string(), "Z^2");
        assert_eq!(inv("s1").to_string(), "Z^1");
        let p = Presentation::new(2, vec![w("x^2", 2), w("y^3", 2)]).unwrap();
        assert_eq!(abelian_invariants(&p).to_string(), "Z/6");
        let p = Presentation::new(1, vec![w("x", 1)]).unwrap();
        assert_eq!(abelian_invariants(&p).to_string(), "0");
        let p = Presentation::new(3, vec![w("x^4", 3), w("y^2", 3)]).unwrap();
        assert_eq!(abelian_invariants(&p).to_string(), "Z^1 + Z/2 + Z/4");
    }

    #[test]
    fn simplify_trefoil() {
        let p = closure_presentation(&braid("s1^3", 2), &SolutionPair::artin()).unwrap();
        let s = simplify(&p);
        assert!(s.n_generators() <= 2);
        assert!(s.total_relator_length() <= 6, "{s}");
        assert_eq!(s.relators().len(), 1);
        assert_eq!(abelian_invariants(&s), abelian_invariants(&p));
    }

    #[test]
    fn simplify_examples() {
        let p = Presentation::new(2, vec![Word::identity(2)]).unwrap();
        assert!(simplify(&p).relators().is_empty());
        let p = Presentation::new(2, vec![w("x^-1 y", 2)]).unwrap();
        let s = simplify(&p);
        assert_eq!(s.generators(), &[2]);
        assert!(s.relators().is_empty());
        assert_eq!(s.to_string(), "gens: 1");
        let p = closure_presentation(&braid("s1", 2), &SolutionPair::artin()).unwrap();
        assert_eq!(simplify(&p).to_string(), "gens: 1");
    }

    #[test]
    fn simplify_keeps_torsion() {
        let p = Presentation::new(3, vec![w("x y^2", 3), w("x^3 z", 3), w("y^4 z^2", 3)]).unwrap();
        assert_eq!(abelian_invariants(&simplify(&p)), abelian_invariants(&p));
    }

    #[test]
    fn display() {
        let p = Presentation::new(2, vec![w("x^-1 y", 2)]).unwrap();
        assert_eq!(p.to_string(), "gens: 2\nx^-1 y");
        assert_eq!(AbelianInvariants { free_rank: 0, torsion: vec![BigInt::from(2)] }.to_string(), "Z/2");
    }
}
