//! n-periodic permutations and their inversions.
//!
//! An n-periodic permutation is a bijection `w: Z -> Z` with
//! `w(i+n) = w(i) + n`; it is determined by the window `(w(1), ..., w(n))`,
//! whose values must have pairwise distinct residues mod n.

use super::{Composition, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicPermutation {
    window: Vec<i64>,
}

impl PeriodicPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(Error::BadResidues(window));
        }
        let mut seen = vec![false; n as usize];
        for &v in &window {
            let r = v.rem_euclid(n) as usize;
            if seen[r] {
                return Err(Error::BadResidues(window.clone()));
            }
            seen[r] = true;
        }
        Ok(PeriodicPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        PeriodicPermutation {
            window: (1..=n as i64).collect(),
        }
    }

    /// Embeds a finite permutation as a periodic one.
    pub fn from_permutation(w: &Permutation) -> Self {
        PeriodicPermutation {
            window: w.window().iter().map(|&v| v as i64).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `w(k)` for any integer `k`, by periodic extension of the window.
    pub fn value(&self, k: i64) -> i64 {
        let n = self.rank() as i64;
        let j = (k - 1).rem_euclid(n) + 1;
        let shift = (k - j) / n;
        self.window[(j - 1) as usize] + shift * n
    }

    /// Right multiplication by the adjacent transposition `s_j`.
    pub fn mult_s(&self, j: usize) -> PeriodicPermutation {
        let mut window = self.window.clone();
        window.swap(j - 1, j);
        PeriodicPermutation { window }
    }

    /// Right multiplication by `pi` (the shift `i -> i+1`): the window
    /// becomes `(w(2), ..., w(n), w(1)+n)`.
    pub fn mult_pi(&self) -> PeriodicPermutation {
        let n = self.rank() as i64;
        let mut window: Vec<i64> = self.window[1..].to_vec();
        window.push(self.window[0] + n);
        PeriodicPermutation { window }
    }

    /// Reduction mod n to a finite permutation, with residues taken
    /// in `{1, ..., n}`.
    pub fn reduce_mod_n(&self) -> Permutation {
        let n = self.rank() as i64;
        let window: Vec<usize> = self
            .window
            .iter()
            .map(|&v| ((v - 1).rem_euclid(n) + 1) as usize)
            .collect();
        Permutation::new(window).expect("distinct residues")
    }

    /// All inversions `(i,k)` with `i in {1..n}`, `i < k <= k_bound`,
    /// `w(i) > w(k)`.
    pub fn inversions_with_bound(&self, k_bound: i64) -> Vec<AffineInversion> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 1..=n {
            let wi = self.value(i as i64);
            for k in (i as i64 + 1)..=k_bound {
                if wi > self.value(k) {
                    out.push(AffineInversion::new(i, k, n));
                }
            }
        }
        out
    }

    /// All inversions, using a bound past which no window value can be
    /// exceeded: `w(j + l*n) = w(j) + l*n > max(window)` once
    /// `l > (max - min) / n`.
    pub fn inversions(&self) -> Vec<AffineInversion> {
        let n = self.rank() as i64;
        let max = *self.window.iter().max().unwrap();
        let min = *self.window.iter().min().unwrap();
        let bound = n * ((max - min) / n + 2);
        self.inversions_with_bound(bound)
    }

    pub fn num_inversions(&self) -> usize {
        self.inversions().len()
    }
}

impl std::fmt::Display for PeriodicPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// The n-periodic permutation `u_mu` attached to a composition, with window
/// `u_mu(i) = v_mu^{-1}(i) + n * mu_{v_mu^{-1}(i)}`, i.e. position `i` holds
/// the row index of the `i`-th smallest part shifted by `n` times that part.
pub fn periodic_from_mu(mu: &Composition) -> PeriodicPermutation {
    let n = mu.rank();
    let v_inv = mu.v_mu().inverse();
    let window: Vec<i64> = (1..=n)
        .map(|i| {
            let r = v_inv.value(i);
            r as i64 + (n as u64 * mu.part(r) as u64) as i64
        })
        .collect();
    PeriodicPermutation::new(window).expect("u_mu is n-periodic")
}

/// An inversion `(i, k)` of an n-periodic permutation, stored together
/// with the decomposition `k = j + shift * n`, `j in {1..n}`.
///
/// Its height is `i - j`, matching `ht(m,r,c) = v_mu(r) - m` for the
/// box-greedy inversion `beta(m,r,c) = (v_mu(r), m + n*sh(r,c))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineInversion {
    pub i: usize,
    pub k: i64,
    pub j: usize,
    pub shift: i64,
}

impl AffineInversion {
    pub fn new(i: usize, k: i64, n: usize) -> Self {
        let j = ((k - 1).rem_euclid(n as i64) + 1) as usize;
        let shift = (k - j as i64) / n as i64;
        AffineInversion { i, k, j, shift }
    }

    pub fn height(&self) -> i64 {
        self.i as i64 - self.j as i64
    }
}

impl std::fmt::Display for AffineInversion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}+{}*n)", self.i, self.j, self.shift)
    }
}
