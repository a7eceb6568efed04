//! Shapes, boxes, permutations and the box-greedy reduced word.
//!
//! A composition `mu = (mu_1, ..., mu_n)` of nonnegative integers is
//! identified with its diagram `{(r,c) : 1 <= r <= n, 1 <= c <= mu_r}`.
//! Boxes are traversed down columns and then left to right, i.e. in
//! increasing order of the cylindrical number `r + n*c`.

mod periodic;
mod permutation;
mod word;

pub use periodic::{periodic_from_mu, AffineInversion, PeriodicPermutation};
pub use permutation::Permutation;
pub(crate) use word::inversion_with_sorter;
pub use word::{
    box_greedy_inversions, box_greedy_word, evaluate_word, inversion_by_box, Letter, Word,
    WordLetter,
};

use crate::error::{Error, Result};

/// A box of a composition diagram, with 1-based row and column.
///
/// The `Ord` instance is the box order: `(r,c) < (r',c')` iff
/// `r + n*c < r' + n*c'`, which for boxes of one diagram is the
/// lexicographic order on `(c, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxCoord {
    pub c: usize,
    pub r: usize,
}

impl BoxCoord {
    pub fn new(r: usize, c: usize) -> Self {
        BoxCoord { c, r }
    }
}

impl std::fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.r, self.c)
    }
}

/// A composition: `n` nonnegative integer parts.  Empty rows are allowed
/// and contribute no boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        Ok(Composition { parts })
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, r: usize) -> u32 {
        self.parts[r - 1]
    }

    /// Total number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        b.r >= 1 && b.r <= self.rank() && b.c >= 1 && (b.c as u32) <= self.parts[b.r - 1]
    }

    /// True iff the parts are weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] <= w[1])
    }

    /// All boxes in increasing order of `r + n*c`.
    pub fn box_list(&self) -> Vec<BoxCoord> {
        let mut boxes = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for c in 1..=(p as usize) {
                boxes.push(BoxCoord::new(i + 1, c));
            }
        }
        boxes.sort();
        boxes
    }

    /// The arm count `u_mu(r,c)`: the number of rows `r' < r` with
    /// `mu_{r'} < c <= mu_r` plus the number of rows `r' > r` with
    /// `mu_{r'} < c - 1 < mu_r`.  Bounds the entries allowed in the box.
    pub fn u_arm(&self, b: BoxCoord) -> Result<u32> {
        if !self.contains(b) {
            return Err(Error::InvalidBox { r: b.r, c: b.c });
        }
        let c = b.c as u32;
        let mut u = 0;
        for r2 in 1..b.r {
            if self.parts[r2 - 1] < c {
                u += 1;
            }
        }
        for r2 in (b.r + 1)..=self.rank() {
            if self.parts[r2 - 1] + 1 < c {
                u += 1;
            }
        }
        Ok(u)
    }

    /// The minimal-length permutation `v_mu` such that applying it to `mu`
    /// gives a weakly increasing composition:
    /// `v_mu(r) = 1 + #{r'<r : mu_{r'} <= mu_r} + #{r'>r : mu_{r'} < mu_r}`.
    pub fn v_mu(&self) -> Permutation {
        let n = self.rank();
        let mut window = vec![0usize; n];
        for r in 1..=n {
            let mr = self.parts[r - 1];
            let before = self.parts[..r - 1].iter().filter(|&&p| p <= mr).count();
            let after = self.parts[r..].iter().filter(|&&p| p < mr).count();
            window[r - 1] = 1 + before + after;
        }
        Permutation::new(window).expect("v_mu is a permutation by construction")
    }

    /// `sh(r,c) = mu_r - c + 1`, the shift of any entry of box `b`.
    pub fn shift(&self, b: BoxCoord) -> Result<u32> {
        if !self.contains(b) {
            return Err(Error::InvalidBox { r: b.r, c: b.c });
        }
        Ok(self.parts[b.r - 1] - b.c as u32 + 1)
    }

    /// `ht(m,r,c) = v_mu(r) - m` for an entry `m` of box `b`.
    ///
    /// Always >= 1: every row counted by `u_arm` is also counted by the
    /// `v_mu(r) - 1` formula, so `u_mu(r,c) < v_mu(r)`.  Violations are
    /// reported as internal errors rather than silently accepted.
    pub fn height(&self, m: u32, b: BoxCoord) -> Result<u32> {
        let u = self.u_arm(b)?;
        if m < 1 || m > u {
            return Err(Error::InvalidEntry {
                entry: m,
                max: u,
                r: b.r,
                c: b.c,
            });
        }
        let v = self.v_mu().value(b.r) as u32;
        if m >= v {
            return Err(Error::Internal(format!(
                "height of entry {m} in box {} would be {} <= 0",
                b,
                v as i64 - m as i64
            )));
        }
        Ok(v - m)
    }

    /// Applies a permutation to the parts: part `mu_r` moves to position
    /// `w(r)`.
    pub fn permute(&self, w: &Permutation) -> Result<Composition> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch(w.rank(), self.rank()));
        }
        let mut parts = vec![0u32; self.rank()];
        for r in 1..=self.rank() {
            parts[w.value(r) - 1] = self.parts[r - 1];
        }
        Composition::new(parts)
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
