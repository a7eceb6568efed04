//! Finite permutations of `{1, ..., n}` in one-line notation.

use crate::error::{Error, Result};

/// A permutation `w` of `{1, ..., n}`, stored as the one-line window
/// `(w(1), ..., w(n))`.
///
/// Composition is written multiplicatively: `(f * g)(i) = f(g(i))`, so
/// multiplying on the right by the transposition `s_j` swaps the window
/// values at positions `j` and `j+1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &v in &window {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(window.clone()));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { window })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    /// The n-cycle `gamma_n` with one-line form `(n, 1, 2, ..., n-1)`.
    pub fn gamma(n: usize) -> Self {
        let mut window = Vec::with_capacity(n);
        window.push(n);
        window.extend(1..n);
        Permutation { window }
    }

    /// `gamma_n^{-1}`, with one-line form `(2, 3, ..., n, 1)`.
    pub fn gamma_inv(n: usize) -> Self {
        let mut window: Vec<usize> = (2..=n).collect();
        window.push(1);
        Permutation { window }
    }

    /// The adjacent transposition `s_j` (swaps `j` and `j+1`), `1 <= j < n`.
    pub fn transposition(n: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.window.swap(j - 1, j);
        p
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn value(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.rank(), other.rank());
        Permutation {
            window: other.window.iter().map(|&i| self.window[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut window = vec![0usize; self.rank()];
        for (i, &v) in self.window.iter().enumerate() {
            window[v - 1] = i + 1;
        }
        Permutation { window }
    }

    /// Coxeter length: the number of pairs `i < j` with `w(i) > w(j)`.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut l = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.window[i] > self.window[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// All permutations of `{1..n}` in lexicographic window order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut window: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                window: window.clone(),
            });
            // next lexicographic window
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| window[i] < window[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| window[j] > window[i]).unwrap();
            window.swap(i, j);
            window[i + 1..].reverse();
        }
        out
    }
}

impl std::fmt::Display for Permutation {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(
            Permutation::new(vec![5, 6, 3, 4, 1, 2]).unwrap().length(),
            12
        );
        assert_eq!(Permutation::new(vec![5, 3, 1, 4, 2]).unwrap().length(), 7);
        assert_eq!(Permutation::identity(4).length(), 0);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // (f*g)(i) = f(g(i))
        let f = Permutation::new(vec![2, 3, 1]).unwrap();
        let g = Permutation::new(vec![1, 3, 2]).unwrap();
        let fg = f.compose(&g);
        assert_eq!(fg.window(), &[2, 1, 3]);
    }

    #[test]
    fn right_multiplication_by_s_j_swaps_window_entries() {
        let w = Permutation::new(vec![3, 1, 4, 2]).unwrap();
        let s2 = Permutation::transposition(4, 2);
        assert_eq!(w.compose(&s2).window(), &[3, 4, 1, 2]);
    }

    #[test]
    fn gamma_and_inverse() {
        let g = Permutation::gamma(5);
        assert_eq!(g.window(), &[5, 1, 2, 3, 4]);
        assert_eq!(g.inverse().window(), &[2, 3, 4, 5, 1]);
        assert_eq!(Permutation::gamma_inv(5), g.inverse());
        assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn all_enumerates_n_factorial() {
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        let all = Permutation::all(3);
        assert_eq!(all[0], Permutation::identity(3));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
