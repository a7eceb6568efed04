//! The box-greedy reduced word for `u_mu` and its evaluation.
//!
//! Per box `(r,c)` (in box order) the word contributes the block
//! `s_u s_{u-1} ... s_1 pi` with `u = u_mu(r,c)`; a box with `u = 0`
//! contributes the single letter `pi`.  The s-letter with subscript `m`
//! inside a box carries the box's `m`-th inversion
//! `beta(m,r,c) = (v_mu(r), m + n*(mu_r - c + 1))`.

use super::{AffineInversion, BoxCoord, Composition, PeriodicPermutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    /// Adjacent transposition `s_j`.
    S(usize),
    /// The shift `pi`.
    Pi,
}

/// A letter of the word together with the box that owns it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordLetter {
    pub letter: Letter,
    pub box_coord: BoxCoord,
}

/// An abstract word in `s_1, ..., s_{n-1}, pi`, partitioned into boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    rank: usize,
    letters: Vec<WordLetter>,
}

impl Word {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[WordLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn s_letter_count(&self) -> usize {
        self.letters
            .iter()
            .filter(|l| matches!(l.letter, Letter::S(_)))
            .count()
    }

    /// The global index of the letter `s_m` inside box `b`, if present.
    pub fn s_letter_index(&self, b: BoxCoord, m: u32) -> Option<usize> {
        self.letters
            .iter()
            .position(|l| l.box_coord == b && l.letter == Letter::S(m as usize))
    }
}

/// The box-greedy reduced word for `u_mu`.
pub fn box_greedy_word(mu: &Composition) -> Word {
    let mut letters = Vec::new();
    for b in mu.box_list() {
        let u = mu.u_arm(b).expect("box from box_list");
        for j in (1..=u as usize).rev() {
            letters.push(WordLetter {
                letter: Letter::S(j),
                box_coord: b,
            });
        }
        letters.push(WordLetter {
            letter: Letter::Pi,
            box_coord: b,
        });
    }
    Word {
        rank: mu.rank(),
        letters,
    }
}

/// Evaluates a word by right multiplication starting from the identity.
pub fn evaluate_word(word: &Word, n: usize) -> Result<PeriodicPermutation> {
    if word.rank != n {
        return Err(Error::RankMismatch(word.rank, n));
    }
    let mut w = PeriodicPermutation::identity(n);
    for l in &word.letters {
        w = match l.letter {
            Letter::S(j) => {
                if j < 1 || j >= n {
                    return Err(Error::InvalidSubset(j));
                }
                w.mult_s(j)
            }
            Letter::Pi => w.mult_pi(),
        };
    }
    Ok(w)
}

/// The `m`-th inversion in box `b`: `beta(m,r,c) = (v_mu(r), m + n*sh(r,c))`.
pub fn inversion_by_box(mu: &Composition, b: BoxCoord, m: u32) -> Result<AffineInversion> {
    inversion_with_sorter(mu, &mu.v_mu(), b, m)
}

/// Same, with the sorting permutation `v_mu` supplied by the caller so hot
/// loops compute it once per shape.
pub(crate) fn inversion_with_sorter(
    mu: &Composition,
    v: &crate::combinatorics::Permutation,
    b: BoxCoord,
    m: u32,
) -> Result<AffineInversion> {
    let u = mu.u_arm(b)?;
    if m < 1 || m > u {
        return Err(Error::InvalidEntry {
            entry: m,
            max: u,
            r: b.r,
            c: b.c,
        });
    }
    let n = mu.rank();
    let i = v.value(b.r);
    let sh = mu.shift(b)? as i64;
    let k = m as i64 + n as i64 * sh;
    Ok(AffineInversion::new(i, k, n))
}

/// The full box-greedy inversion list: `beta(m,r,c)` over all boxes in box
/// order and entries `m = 1..=u_mu(r,c)` ascending.
pub fn box_greedy_inversions(mu: &Composition) -> Vec<AffineInversion> {
    let v = mu.v_mu();
    let mut out = Vec::new();
    for b in mu.box_list() {
        for m in 1..=mu.u_arm(b).expect("box from box_list") {
            out.push(inversion_with_sorter(mu, &v, b, m).expect("entry in range"));
        }
    }
    out
}
