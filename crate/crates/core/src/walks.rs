//! Alcove walks through the box-greedy word, and the walk-side term
//! evaluation.
//!
//! A walk of type `(z, u_mu)` steps through the letters of the box-greedy
//! word by right multiplication, skipping ("folding at") a chosen subset of
//! s-letters.  Folding at `s_m` inside box `(r,c)` corresponds to placing
//! the entry `m` in that box of a set-valued tableau, which makes the walks
//! of a shape biject with its tableaux.
//!
//! [`walk_weight`] rebuilds the term of a walk purely from walk data: fold
//! signs come from comparing the two window values a crossed letter would
//! have swapped, exponent pairs come from decomposing the integer inversion
//! `beta(m,r,c)` attached to the letter, and the monomial collects the
//! mod-n window value at position `n` at each box boundary.  None of the
//! box-level `sh`/`ht` formulas or final-box comparisons of
//! [`crate::tableaux`] are consulted, so the two evaluation paths check
//! each other.

use std::collections::BTreeSet;

use crate::combinatorics::{
    box_greedy_word, AffineInversion, BoxCoord, Composition, Letter, PeriodicPermutation,
    Permutation, Word,
};
use crate::error::{Error, Result};
use crate::macdonald::Variant;
use crate::qt::{FactoredRational, XMonomial};
use crate::tableaux::SetValuedTableau;

/// An alcove walk: the full step sequence `p_0, ..., p_r` together with the
/// word and the set of crossed letter indices.
#[derive(Debug, Clone)]
pub struct AlcoveWalk {
    mu: Composition,
    z: Permutation,
    word: Word,
    crossed: BTreeSet<usize>,
    steps: Vec<PeriodicPermutation>,
}

/// A crossed letter of a walk.  `negative` records whether the two values
/// the letter would have swapped were out of order at that step.
#[derive(Debug, Clone)]
pub struct Fold {
    pub letter_index: usize,
    pub box_coord: BoxCoord,
    pub entry: u32,
    pub negative: bool,
    pub inversion: AffineInversion,
}

impl AlcoveWalk {
    pub fn shape(&self) -> &Composition {
        &self.mu
    }

    pub fn initial(&self) -> &Permutation {
        &self.z
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn crossed(&self) -> &BTreeSet<usize> {
        &self.crossed
    }

    /// `p_0, ..., p_r` with `r` the number of letters.
    pub fn steps(&self) -> &[PeriodicPermutation] {
        &self.steps
    }

    /// The mod-n reductions of all steps.
    pub fn permutation_sequence(&self) -> Vec<Permutation> {
        self.steps.iter().map(|p| p.reduce_mod_n()).collect()
    }

    /// The mod-n window at the end of each box segment, in box order.
    pub fn boundary_windows(&self) -> Vec<(BoxCoord, Permutation)> {
        let mut out = Vec::new();
        for (i, l) in self.word.letters().iter().enumerate() {
            if l.letter == Letter::Pi {
                out.push((l.box_coord, self.steps[i + 1].reduce_mod_n()));
            }
        }
        out
    }

    pub fn final_window(&self) -> Permutation {
        self.steps
            .last()
            .expect("walk has at least one step")
            .reduce_mod_n()
    }

    /// One fold per crossed letter, in letter order.  Signs compare the
    /// mod-n window values at the two positions the letter would swap.
    pub fn folds(&self) -> Vec<Fold> {
        let v = self.mu.v_mu();
        let mut out = Vec::new();
        for &i in &self.crossed {
            let l = self.word.letters()[i];
            let m = match l.letter {
                Letter::S(m) => m,
                Letter::Pi => unreachable!("crossed set is validated"),
            };
            let before = self.steps[i].reduce_mod_n();
            let negative = before.value(m) > before.value(m + 1);
            let inversion =
                crate::combinatorics::inversion_with_sorter(&self.mu, &v, l.box_coord, m as u32)
                    .expect("letter subscript within arm bound");
            out.push(Fold {
                letter_index: i,
                box_coord: l.box_coord,
                entry: m as u32,
                negative,
                inversion,
            });
        }
        out
    }
}

/// Builds the walk of type `(z, u_mu)` with the letters in `crossed`
/// folded.  Indices must refer to s-letters of the box-greedy word.
pub fn walk_from_subset(
    z: &Permutation,
    mu: &Composition,
    crossed: &BTreeSet<usize>,
) -> Result<AlcoveWalk> {
    if z.rank() != mu.rank() {
        return Err(Error::RankMismatch(z.rank(), mu.rank()));
    }
    let word = box_greedy_word(mu);
    for &i in crossed {
        match word.letters().get(i) {
            Some(l) if matches!(l.letter, Letter::S(_)) => {}
            _ => return Err(Error::InvalidSubset(i)),
        }
    }
    let mut steps = Vec::with_capacity(word.len() + 1);
    steps.push(PeriodicPermutation::from_permutation(z));
    for (i, l) in word.letters().iter().enumerate() {
        let prev = steps.last().unwrap();
        let next = match l.letter {
            Letter::Pi => prev.mult_pi(),
            Letter::S(_) if crossed.contains(&i) => prev.clone(),
            Letter::S(j) => prev.mult_s(j),
        };
        steps.push(next);
    }
    Ok(AlcoveWalk {
        mu: mu.clone(),
        z: z.clone(),
        word,
        crossed: crossed.clone(),
        steps,
    })
}

/// The crossed-letter set of a tableau: entry `m` in box `b` crosses the
/// letter `s_m` of box `b`.
pub fn tableau_to_subset(word: &Word, tableau: &SetValuedTableau) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for (&b, list) in tableau.nonempty_boxes() {
        for &m in list {
            let idx = word
                .s_letter_index(b, m)
                .ok_or(Error::SubsetOutOfRange { entry: m, max: 0 })?;
            out.insert(idx);
        }
    }
    Ok(out)
}

/// Inverse of [`tableau_to_subset`].
pub fn subset_to_tableau(
    mu: &Composition,
    word: &Word,
    crossed: &BTreeSet<usize>,
) -> Result<SetValuedTableau> {
    let mut entries: std::collections::BTreeMap<BoxCoord, Vec<u32>> = Default::default();
    for &i in crossed {
        let l = word
            .letters()
            .get(i)
            .copied()
            .ok_or(Error::InvalidSubset(i))?;
        match l.letter {
            Letter::S(m) => entries.entry(l.box_coord).or_default().push(m as u32),
            Letter::Pi => return Err(Error::InvalidSubset(i)),
        }
    }
    for list in entries.values_mut() {
        list.sort_unstable();
    }
    SetValuedTableau::new(mu.clone(), entries)
}

/// Convenience: the walk of a tableau.
pub fn walk_from_tableau(z: &Permutation, tableau: &SetValuedTableau) -> Result<AlcoveWalk> {
    let word = box_greedy_word(tableau.shape());
    let crossed = tableau_to_subset(&word, tableau)?;
    walk_from_subset(z, tableau.shape(), &crossed)
}

/// A fully evaluated walk term.
#[derive(Debug, Clone)]
pub struct WalkTerm {
    pub x: XMonomial,
    pub maj: i64,
    pub cov: i64,
    /// `(shift, height)` of every fold's inversion, in letter order.
    pub factors: Vec<(u32, u32)>,
    pub coefficient: FactoredRational,
}

/// Evaluates the term of a walk from walk data alone.
pub fn walk_weight(walk: &AlcoveWalk, variant: Variant) -> Result<WalkTerm> {
    let n = walk.mu.rank();
    let mut x = XMonomial::constant(n);
    for (_, w) in walk.boundary_windows() {
        x.bump(w.value(n));
    }

    let folds = walk.folds();
    let mut factors = Vec::with_capacity(folds.len());
    let mut maj_neg = 0i64;
    let mut ht_neg = 0i64;
    let mut maj_pos = 0i64;
    let mut ht_pos = 0i64;
    for f in &folds {
        let sh = f.inversion.shift;
        let ht = f.inversion.height();
        if sh < 0 || ht < 1 {
            return Err(Error::Internal(format!(
                "fold inversion {} has shift {sh}, height {ht}",
                f.inversion
            )));
        }
        factors.push((sh as u32, ht as u32));
        if f.negative {
            maj_neg += sh;
            ht_neg += ht;
        } else {
            maj_pos += sh;
            ht_pos += ht;
        }
    }

    let len_fin = walk.final_window().length() as i64;
    let len_init = walk.z.compose(&walk.mu.v_mu().inverse()).length() as i64;
    let nf = folds.len() as i64;
    let diff = len_fin - len_init - nf;
    if diff.rem_euclid(2) != 0 {
        return Err(Error::Internal("length parity violation along walk".into()));
    }

    let (maj, cov) = match variant {
        Variant::Pos => (maj_neg, ht_neg + diff / 2),
        Variant::Neg => (maj_pos, ht_pos - (len_fin - len_init + nf) / 2),
    };
    let mut coefficient = FactoredRational::qt_monomial(maj, cov);
    for &(sh, ht) in &factors {
        coefficient = coefficient.mul(&FactoredRational::tableau_factor(sh, ht));
    }
    if variant == Variant::Neg {
        coefficient = coefficient.invert_vars();
    }
    Ok(WalkTerm {
        x,
        maj,
        cov,
        factors,
        coefficient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn favorite() -> SetValuedTableau {
        let mut entries = BTreeMap::new();
        for ((r, c), list) in [
            ((2, 1), vec![1]),
            ((2, 3), vec![1]),
            ((2, 4), vec![2]),
            ((3, 1), vec![1]),
            ((3, 3), vec![1, 2]),
            ((3, 5), vec![1, 3]),
            ((5, 3), vec![1, 2]),
        ] {
            entries.insert(BoxCoord::new(r, c), list);
        }
        SetValuedTableau::new(comp(&[0, 4, 5, 1, 4]), entries).unwrap()
    }

    #[test]
    fn subset_round_trip_on_favorite() {
        let t = favorite();
        let word = box_greedy_word(t.shape());
        let f = tableau_to_subset(&word, &t).unwrap();
        assert_eq!(f.len(), 10);
        let back = subset_to_tableau(t.shape(), &word, &f).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn empty_subset_empty_tableau() {
        let mu = comp(&[2, 2, 1, 1, 0, 0]);
        let word = box_greedy_word(&mu);
        let t = SetValuedTableau::empty(mu.clone());
        assert!(tableau_to_subset(&word, &t).unwrap().is_empty());
        assert_eq!(subset_to_tableau(&mu, &word, &BTreeSet::new()).unwrap(), t);
    }

    #[test]
    fn crossing_a_pi_letter_is_rejected() {
        let mu = comp(&[2, 2, 1, 1, 0, 0]);
        // letter 0 is the pi of box (1,1)
        let f: BTreeSet<usize> = [0].into();
        assert!(matches!(
            walk_from_subset(&Permutation::identity(6), &mu, &f),
            Err(Error::InvalidSubset(0))
        ));
    }

    #[test]
    fn trivial_walk_single_step() {
        let mu = comp(&[0, 0, 0]);
        let w = walk_from_subset(&Permutation::identity(3), &mu, &BTreeSet::new()).unwrap();
        assert_eq!(w.steps().len(), 1);
        assert!(w.final_window().is_identity());
    }

    #[test]
    fn opening_steps_of_the_favorite_walk() {
        let t = favorite();
        let walk = walk_from_tableau(&Permutation::identity(5), &t).unwrap();
        assert_eq!(walk.steps().len(), walk.word().len() + 1);
        let windows: Vec<Vec<i64>> = walk.steps()[..9]
            .iter()
            .map(|p| p.window().to_vec())
            .collect();
        // (z, z, z pi, z pi, z pi^2, z pi^2 s1, z pi^2 s1 pi, ...)
        assert_eq!(
            windows,
            vec![
                vec![1, 2, 3, 4, 5],
                vec![1, 2, 3, 4, 5],
                vec![2, 3, 4, 5, 6],
                vec![2, 3, 4, 5, 6],
                vec![3, 4, 5, 6, 7],
                vec![4, 3, 5, 6, 7],
                vec![3, 5, 6, 7, 9],
                vec![5, 3, 6, 7, 9],
                vec![3, 6, 7, 9, 10],
            ]
        );
    }

    #[test]
    fn favorite_walk_box_boundaries() {
        let t = favorite();
        let walk = walk_from_tableau(&Permutation::identity(5), &t).unwrap();
        let expected: Vec<((usize, usize), Vec<i64>)> = vec![
            ((2, 1), vec![2, 3, 4, 5, 6]),
            ((3, 1), vec![3, 4, 5, 6, 7]),
            ((4, 1), vec![3, 5, 6, 7, 9]),
            ((5, 1), vec![3, 6, 7, 9, 10]),
            ((2, 2), vec![3, 7, 9, 10, 11]),
            ((3, 2), vec![3, 9, 10, 11, 12]),
            ((5, 2), vec![3, 9, 11, 12, 15]),
            ((2, 3), vec![11, 9, 12, 15, 8]),
            ((3, 3), vec![9, 12, 15, 8, 16]),
            ((5, 3), vec![12, 15, 8, 16, 14]),
            ((2, 4), vec![12, 8, 16, 14, 20]),
            ((3, 4), vec![12, 8, 14, 20, 21]),
            ((5, 4), vec![12, 8, 20, 21, 19]),
            ((3, 5), vec![20, 8, 21, 19, 17]),
        ];
        // raw windows at the step after each pi letter
        let mut idx = 0;
        for (i, l) in walk.word().letters().iter().enumerate() {
            if l.letter == Letter::Pi {
                let ((r, c), ref win) = expected[idx];
                assert_eq!((l.box_coord.r, l.box_coord.c), (r, c));
                assert_eq!(walk.steps()[i + 1].window(), &win[..], "box ({r},{c})");
                idx += 1;
            }
        }
        assert_eq!(idx, expected.len());
        assert_eq!(walk.final_window().window(), &[5, 3, 1, 4, 2]);
    }

    #[test]
    fn repeats_equal_crossed_count() {
        let t = favorite();
        let walk = walk_from_tableau(&Permutation::identity(5), &t).unwrap();
        let repeats = walk.steps().windows(2).filter(|w| w[0] == w[1]).count();
        assert_eq!(repeats, walk.crossed().len());
        assert_eq!(repeats, 10);
    }

    #[test]
    fn every_step_has_distinct_residues() {
        let t = favorite();
        let walk = walk_from_tableau(&Permutation::identity(5), &t).unwrap();
        for p in walk.steps() {
            assert!(PeriodicPermutation::new(p.window().to_vec()).is_ok());
        }
    }

    #[test]
    fn fold_signs_on_favorite() {
        let t = favorite();
        let walk = walk_from_tableau(&Permutation::identity(5), &t).unwrap();
        let folds = walk.folds();
        let signs: BTreeMap<((usize, usize), u32), bool> = folds
            .iter()
            .map(|f| (((f.box_coord.r, f.box_coord.c), f.entry), f.negative))
            .collect();
        let expected: BTreeMap<((usize, usize), u32), bool> = [
            (((2, 1), 1), false),
            (((3, 1), 1), false),
            (((2, 3), 1), true),
            (((3, 3), 1), false),
            (((3, 3), 2), true),
            (((5, 3), 1), true),
            (((5, 3), 2), false),
            (((2, 4), 2), true),
            (((3, 5), 1), false),
            (((3, 5), 3), true),
        ]
        .into();
        assert_eq!(signs, expected);
    }

    #[test]
    fn walk_weight_of_favorite() {
        let t = favorite();
        let walk = walk_from_tableau(&Permutation::identity(5), &t).unwrap();
        let term = walk_weight(&walk, Variant::Pos).unwrap();
        assert_eq!(term.x.exponents(), &[4, 3, 1, 3, 3]);
        assert_eq!(term.maj, 9);
        assert_eq!(term.cov, 8);
        let expected = {
            let mut c = FactoredRational::qt_monomial(9, 8);
            for (sh, ht) in [
                (4, 2),
                (5, 4),
                (2, 2),
                (1, 1),
                (3, 4),
                (3, 3),
                (1, 4),
                (1, 2),
                (2, 3),
                (2, 2),
            ] {
                c = c.mul(&FactoredRational::tableau_factor(sh, ht));
            }
            c
        };
        assert!(term.coefficient.eq_value(&expected));
    }

    #[test]
    fn walk_weight_of_empty_subset() {
        let mu = comp(&[2, 2, 1, 1, 0, 0]);
        let walk = walk_from_subset(&Permutation::identity(6), &mu, &BTreeSet::new()).unwrap();
        let term = walk_weight(&walk, Variant::Pos).unwrap();
        assert_eq!(term.x.exponents(), &[2, 2, 1, 1, 0, 0]);
        assert!(term.coefficient.is_one());
        // boundary anchor inside the walk
        let boundaries = walk.boundary_windows();
        let (b, w) = &boundaries[4];
        assert_eq!((b.r, b.c), (1, 2));
        assert_eq!(w.window(), &[5, 6, 2, 3, 4, 1]);
    }

    #[test]
    fn pos_and_neg_walk_weights_agree() {
        let t = favorite();
        let walk = walk_from_tableau(&Permutation::identity(5), &t).unwrap();
        let pos = walk_weight(&walk, Variant::Pos).unwrap();
        let neg = walk_weight(&walk, Variant::Neg).unwrap();
        assert_eq!(pos.x, neg.x);
        assert!(pos.coefficient.eq_value(&neg.coefficient));
    }

    #[test]
    fn boundary_windows_match_z_sequence() {
        for parts in crate::test_util::all_shapes(4, 2) {
            let mu = comp(&parts);
            for z in Permutation::all(mu.rank()) {
                for t in crate::tableaux::enumerate_tableaux(&mu).unwrap() {
                    let walk = walk_from_tableau(&z, &t).unwrap();
                    let seq = crate::tableaux::z_sequence(&z, &t).unwrap();
                    let walk_boxes: Vec<(BoxCoord, Permutation)> = walk.boundary_windows();
                    assert_eq!(walk_boxes.len(), seq.per_box().len());
                    for ((wb, ww), (sb, sw)) in walk_boxes.iter().zip(seq.per_box()) {
                        assert_eq!(wb, sb);
                        assert_eq!(ww, sw, "mu={mu} box={wb}");
                    }
                }
            }
        }
    }
}
