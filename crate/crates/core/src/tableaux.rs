//! Set-valued tableaux of shape `mu` and their statistics.
//!
//! A set-valued tableau assigns to each box `(r,c)` a subset of
//! `{1, ..., u_mu(r,c)}`.  Walking the boxes in box order, each box maps the
//! previous permutation to a new one by a product of disjoint cycles cut at
//! the chosen entries, followed by `gamma_n^{-1}`; the values of these
//! permutations at `n` give the monomial `x^T`, and comparisons at the entry
//! positions split every subset into "less" and "greater" parts that drive
//! the `maj` and `cov` statistics.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::combinatorics::{BoxCoord, Composition, Permutation};
use crate::error::{Error, Result};
use crate::qt::XMonomial;

/// A set-valued tableau.  Only nonempty box subsets are stored; every
/// stored list is strictly increasing and bounded by the box's arm count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetValuedTableau {
    shape: Composition,
    entries: BTreeMap<BoxCoord, Vec<u32>>,
}

impl SetValuedTableau {
    pub fn new(shape: Composition, entries: BTreeMap<BoxCoord, Vec<u32>>) -> Result<Self> {
        for (&b, list) in &entries {
            let u = shape.u_arm(b)?;
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::Internal(format!(
                        "entries of box {b} not strictly increasing"
                    )));
                }
            }
            if let Some(&m) = list.last() {
                if m > u || list[0] < 1 {
                    return Err(Error::InvalidEntry {
                        entry: m.max(list[0]),
                        max: u,
                        r: b.r,
                        c: b.c,
                    });
                }
            }
        }
        let entries = entries.into_iter().filter(|(_, l)| !l.is_empty()).collect();
        Ok(SetValuedTableau { shape, entries })
    }

    pub fn empty(shape: Composition) -> Self {
        SetValuedTableau {
            shape,
            entries: BTreeMap::new(),
        }
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// The entries of one box (empty slice when none).
    pub fn entries(&self, b: BoxCoord) -> &[u32] {
        self.entries.get(&b).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Boxes with nonempty entry sets, in box order.
    pub fn nonempty_boxes(&self) -> impl Iterator<Item = (&BoxCoord, &Vec<u32>)> {
        self.entries.iter()
    }

    /// Total number of entries `|T|`.
    pub fn size(&self) -> u64 {
        self.entries.values().map(|l| l.len() as u64).sum()
    }
}

impl std::fmt::Display for SetValuedTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, (b, list)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}:{{")?;
            for (j, m) in list.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{m}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Arm counts per box in box order; the radix vector of the enumeration.
pub fn arm_profile(mu: &Composition) -> Vec<(BoxCoord, u32)> {
    mu.box_list()
        .into_iter()
        .map(|b| (b, mu.u_arm(b).expect("box in shape")))
        .collect()
}

/// `prod_b 2^{u_mu(b)}`, the number of set-valued tableaux of shape `mu`.
pub fn count_tableaux(mu: &Composition) -> BigUint {
    let bits: u64 = arm_profile(mu).iter().map(|&(_, u)| u as u64).sum();
    BigUint::one() << bits
}

/// The tableau at `index` in enumeration order: tableaux are ordered
/// lexicographically by (box order, subset bitmask), the first box most
/// significant.  Entry `m` of a box corresponds to bit `m-1` of its mask.
/// `index` must be below the tableau count of the shape.
pub fn tableau_from_index(
    mu: &Composition,
    profile: &[(BoxCoord, u32)],
    mut index: u64,
) -> SetValuedTableau {
    debug_assert!({
        let bits: u64 = profile.iter().map(|&(_, u)| u as u64).sum();
        bits >= 64 || index < (1u64 << bits)
    });
    let mut entries = BTreeMap::new();
    for &(b, u) in profile.iter().rev() {
        let mask = index & ((1u64 << u) - 1);
        index >>= u;
        if mask != 0 {
            let list: Vec<u32> = (1..=u).filter(|m| mask >> (m - 1) & 1 == 1).collect();
            entries.insert(b, list);
        }
    }
    SetValuedTableau {
        shape: mu.clone(),
        entries,
    }
}

/// Iterates over all tableaux of shapes with at most 63 choice bits.
pub fn enumerate_tableaux(mu: &Composition) -> Result<impl Iterator<Item = SetValuedTableau>> {
    let profile = arm_profile(mu);
    let bits: u64 = profile.iter().map(|&(_, u)| u as u64).sum();
    if bits > 63 {
        return Err(Error::BudgetExceeded(format!("2^{bits}"), u64::MAX));
    }
    let mu = mu.clone();
    Ok((0..(1u64 << bits)).map(move |i| tableau_from_index(&mu, &profile, i)))
}

/// The permutation attached to a subset `S = {m_1 < ... < m_p}` of
/// `{1..u}`: the disjoint cycle product
/// `gamma_{m_1} x gamma_{m_2-m_1} x ... x gamma_{u+1-m_p} x gamma_1^{n-u-1}`,
/// where `gamma_k` on a block has one-line form `(k, 1, ..., k-1)`.
pub fn cycle_sigma(u: u32, subset: &[u32], n: usize) -> Result<Permutation> {
    if u as usize >= n {
        return Err(Error::Internal(format!("arm {u} too large for rank {n}")));
    }
    for w in subset.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Internal("subset not strictly increasing".into()));
        }
    }
    if let (Some(&first), Some(&last)) = (subset.first(), subset.last()) {
        if first < 1 || last > u {
            return Err(Error::SubsetOutOfRange {
                entry: last.max(first),
                max: u,
            });
        }
    }
    let mut blocks: Vec<usize> = Vec::with_capacity(subset.len() + 1 + n - u as usize - 1);
    let mut prev = 0u32;
    for &m in subset {
        blocks.push((m - prev) as usize);
        prev = m;
    }
    blocks.push((u + 1 - prev) as usize);
    blocks.extend(std::iter::repeat_n(1, n - u as usize - 1));

    let mut window = Vec::with_capacity(n);
    let mut offset = 0usize;
    for k in blocks {
        window.push(offset + k);
        window.extend(offset + 1..offset + k);
        offset += k;
    }
    Permutation::new(window)
}

/// The box-by-box permutation sequence of a tableau with initial
/// direction `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSequence {
    initial: Permutation,
    per_box: Vec<(BoxCoord, Permutation)>,
}

impl PermutationSequence {
    pub fn initial(&self) -> &Permutation {
        &self.initial
    }

    /// Per-box permutations in box order.
    pub fn per_box(&self) -> &[(BoxCoord, Permutation)] {
        &self.per_box
    }

    pub fn at(&self, b: BoxCoord) -> Option<&Permutation> {
        self.per_box.iter().find(|(bb, _)| *bb == b).map(|(_, w)| w)
    }

    /// The final direction: the permutation at the last box, or the
    /// initial one for the empty shape.
    pub fn final_direction(&self) -> &Permutation {
        self.per_box.last().map(|(_, w)| w).unwrap_or(&self.initial)
    }
}

/// Runs the per-box recursion `z_b = z_prev * sigma(T(b)) * gamma_n^{-1}`
/// (composition `(f*g)(i) = f(g(i))`) over the boxes in box order.
pub fn z_sequence(z: &Permutation, tableau: &SetValuedTableau) -> Result<PermutationSequence> {
    let mu = tableau.shape();
    let n = mu.rank();
    if z.rank() != n {
        return Err(Error::RankMismatch(z.rank(), n));
    }
    let gamma_inv = Permutation::gamma_inv(n);
    let mut current = z.clone();
    let mut per_box = Vec::new();
    for b in mu.box_list() {
        let u = mu.u_arm(b)?;
        let sigma = cycle_sigma(u, tableau.entries(b), n)?;
        current = current.compose(&sigma).compose(&gamma_inv);
        per_box.push((b, current.clone()));
    }
    Ok(PermutationSequence {
        initial: z.clone(),
        per_box,
    })
}

/// `x^T`: the product over boxes of `x_{z_b(n)}`.
pub fn x_weight(seq: &PermutationSequence) -> XMonomial {
    let n = seq.initial.rank();
    let mut m = XMonomial::constant(n);
    for (_, w) in &seq.per_box {
        m.bump(w.value(n));
    }
    m
}

/// The split of every box's entries into ascents (`less`) and descents
/// (`greater`): with entries `m_1 < ... < m_p` and `m_0 = n`, entry `m_k`
/// is in `less` iff `z_b(m_{k-1}) < z_b(m_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FoldClassification {
    pub less: BTreeMap<BoxCoord, Vec<u32>>,
    pub greater: BTreeMap<BoxCoord, Vec<u32>>,
}

pub fn classify_folds(seq: &PermutationSequence, tableau: &SetValuedTableau) -> FoldClassification {
    let n = seq.initial.rank();
    let mut out = FoldClassification::default();
    for (b, w) in &seq.per_box {
        let entries = tableau.entries(*b);
        let mut prev = n;
        for &m in entries {
            let target = if w.value(prev) < w.value(m as usize) {
                &mut out.less
            } else {
                &mut out.greater
            };
            target.entry(*b).or_default().push(m);
            prev = m as usize;
        }
    }
    out
}

/// Everything the Macdonald weight of one tableau needs.
#[derive(Debug, Clone)]
pub struct TableauStatistics {
    pub size: u64,
    pub sequence: PermutationSequence,
    pub folds: FoldClassification,
    pub x: XMonomial,
    /// `maj` and `cov` built from the `greater` sets (nonnegative powers).
    pub maj_gt: i64,
    pub cov_gt: i64,
    /// `maj` and `cov` built from the `less` sets (inverse-variable form).
    pub maj_lt: i64,
    pub cov_lt: i64,
    /// `(sh, ht)` of every entry, boxes in box order, entries ascending.
    pub factors: Vec<(u32, u32)>,
}

/// Computes the permutation sequence, fold classification, monomial and all
/// four statistics of a tableau at initial direction `z`.
pub fn statistics(z: &Permutation, tableau: &SetValuedTableau) -> Result<TableauStatistics> {
    let mu = tableau.shape();
    let v = mu.v_mu();
    let sequence = z_sequence(z, tableau)?;
    let folds = classify_folds(&sequence, tableau);
    let x = x_weight(&sequence);
    let size = tableau.size() as i64;

    // entries were bounds-checked at construction, so heights only need
    // the positivity diagnostic
    let height = |m: u32, b: BoxCoord| -> Result<u32> {
        let val = v.value(b.r) as i64 - m as i64;
        if val < 1 {
            return Err(Error::Internal(format!(
                "height of entry {m} in box {b} would be {val}"
            )));
        }
        Ok(val as u32)
    };

    let mut factors = Vec::with_capacity(size as usize);
    for (&b, list) in tableau.nonempty_boxes() {
        let sh = mu.shift(b)?;
        for &m in list {
            factors.push((sh, height(m, b)?));
        }
    }

    let sum_over = |sel: &BTreeMap<BoxCoord, Vec<u32>>| -> Result<(i64, i64)> {
        let mut maj = 0i64;
        let mut ht_sum = 0i64;
        for (&b, list) in sel {
            let sh = mu.shift(b)? as i64;
            for &m in list {
                maj += sh;
                ht_sum += height(m, b)? as i64;
            }
        }
        Ok((maj, ht_sum))
    };
    let (maj_gt, ht_gt) = sum_over(&folds.greater)?;
    let (maj_lt, ht_lt) = sum_over(&folds.less)?;

    let len_fin = sequence.final_direction().length() as i64;
    let len_init = z.compose(&v.inverse()).length() as i64;
    let diff = len_fin - len_init - size;
    if diff.rem_euclid(2) != 0 {
        return Err(Error::Internal(format!(
            "length parity violation: l(fin)={len_fin} l(init v^-1)={len_init} |T|={size}"
        )));
    }
    let cov_gt = ht_gt + diff / 2;
    // The size correction enters the inverse-variable statistic with the
    // opposite sign on |T|; this is what makes the two per-term weights
    // agree after clearing q^{-1}, t^{-1}.
    let cov_lt = ht_lt - (len_fin - len_init + size) / 2;

    Ok(TableauStatistics {
        size: size as u64,
        sequence,
        folds,
        x,
        maj_gt,
        cov_gt,
        maj_lt,
        cov_lt,
        factors,
    })
}
