//! Helpers shared by the integration tests: seeded random words and
//! independent oracles that do not go through the crate's own algorithms.

#![allow(dead_code)]

use std::collections::HashMap;

use fgybe::{Letter, SolutionPair, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn pair(w: &str, v: &str) -> SolutionPair {
    SolutionPair::parse(w, v).unwrap()
}

/// Uniform letter sequence of the given length, not necessarily reduced.
pub fn random_letters(rng: &mut ChaCha8Rng, rank: u32, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=rank);
            if rng.gen_bool(0.5) {
                Letter::positive(g).unwrap()
            } else {
                Letter::negative(g).unwrap()
            }
        })
        .collect()
}

/// A reduced word of exactly `len` letters, each letter drawn uniformly from
/// those that do not cancel the previous one.
pub fn random_reduced(rng: &mut ChaCha8Rng, rank: u32, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letters(rng, rank, 1)[0];
        if letters.last().is_some_and(|p| *p == l.inverted()) {
            continue;
        }
        letters.push(l);
    }
    let w = fgybe::reduce(letters, rank).unwrap();
    assert_eq!(w.len(), len);
    w
}

pub fn random_word_up_to(rng: &mut ChaCha8Rng, rank: u32, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_reduced(rng, rank, len)
}

/// Letter-level free reduction with a stack, independent of the crate's
/// syllable representation.
pub fn stack_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &l in letters {
        if out.last().is_some_and(|p| *p == l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Swaps `x` and `y` in the textual form of a rank-2 word.
pub fn swap_xy(text: &str) -> String {
    text.chars()
        .map(|c| match c {
            'x' => 'y',
            'y' => 'x',
            c => c,
        })
        .collect()
}

/// Dual computed on strings: `(V(y,x), W(y,x))`.
pub fn dual_by_text(p: &SolutionPair) -> SolutionPair {
    pair(&swap_xy(&p.v().to_string()), &swap_xy(&p.w().to_string()))
}

/// Stallings folding: `{a, b}` generates `F_2` iff the folded graph of the
/// two petals is a single vertex carrying both an `x` and a `y` loop.
/// Together with the Hopf property this decides whether `x ↦ a, y ↦ b`
/// is an automorphism.
pub fn generates_f2_by_folding(a: &Word, b: &Word) -> bool {
    // edges as (from, generator index 1|2, to) for positive orientation
    let mut edges: Vec<(usize, u32, usize)> = Vec::new();
    let mut vertices = 1usize;
    for w in [a, b] {
        let letters: Vec<Letter> = w.letters().collect();
        let mut cur = 0usize;
        for (k, l) in letters.iter().enumerate() {
            let next = if k + 1 == letters.len() {
                0
            } else {
                vertices += 1;
                vertices - 1
            };
            let g = l.gen.index();
            if l.inverse {
                edges.push((next, g, cur));
            } else {
                edges.push((cur, g, next));
            }
            cur = next;
        }
    }
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = v;
        while parent[c] != r {
            let n = parent[c];
            parent[c] = r;
            c = n;
        }
        r
    }
    loop {
        let mut out_map: HashMap<(usize, u32), usize> = HashMap::new();
        let mut in_map: HashMap<(usize, u32), usize> = HashMap::new();
        let mut merge: Option<(usize, usize)> = None;
        for &(s, g, t) in &edges {
            let (s, t) = (find(&mut parent, s), find(&mut parent, t));
            if let Some(&t2) = out_map.get(&(s, g)) {
                if t2 != t {
                    merge = Some((t, t2));
                    break;
                }
            }
            if let Some(&s2) = in_map.get(&(t, g)) {
                if s2 != s {
                    merge = Some((s, s2));
                    break;
                }
            }
            out_map.insert((s, g), t);
            in_map.insert((t, g), s);
        }
        match merge {
            Some((u, v)) => {
                let (u, v) = (find(&mut parent, u), find(&mut parent, v));
                parent[u] = v;
            }
            None => break,
        }
    }
    let root = find(&mut parent, 0);
    let single = (0..vertices).all(|v| find(&mut parent, v) == root);
    let has = |g: u32| edges.iter().any(|&(_, h, _)| h == g);
    single && has(1) && has(2)
}
