//! Polynomials in `x_1, ..., x_n` with [`FactoredRational`] coefficients.

use std::collections::BTreeMap;

use super::FactoredRational;
use crate::error::{Error, Result};

/// A monomial in `x_1..x_n`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XMonomial(Vec<u32>);

impl XMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        XMonomial(exponents)
    }

    pub fn constant(rank: usize) -> Self {
        XMonomial(vec![0; rank])
    }

    /// `x^mu` for a composition's parts.
    pub fn from_parts(parts: &[u32]) -> Self {
        XMonomial(parts.to_vec())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Multiply in the variable `x_i` (1-based).
    pub fn bump(&mut self, i: usize) {
        self.0[i - 1] += 1;
    }

    /// The monomial with variables `i` and `i+1` swapped (1-based).
    pub fn swap_adjacent(&self, i: usize) -> XMonomial {
        let mut e = self.0.clone();
        e.swap(i - 1, i);
        XMonomial(e)
    }
}

impl std::fmt::Display for XMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A sparse polynomial in `x_1..x_n` over exact `q,t` coefficients.
/// No zero coefficient is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPolynomial {
    rank: usize,
    terms: BTreeMap<XMonomial, FactoredRational>,
}

impl XPolynomial {
    pub fn zero(rank: usize) -> Self {
        XPolynomial {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: FactoredRational) -> Self {
        let mut p = XPolynomial::zero(rank);
        p.add_term(XMonomial::constant(rank), c);
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XMonomial, &FactoredRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: XMonomial, c: FactoredRational) {
        debug_assert_eq!(m.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &XPolynomial) -> Result<XPolynomial> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> XPolynomial {
        XPolynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &FactoredRational) -> XPolynomial {
        if s.is_zero() {
            return XPolynomial::zero(self.rank);
        }
        XPolynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Coefficient lookup; absent monomials give zero.
    pub fn coeff(&self, m: &XMonomial) -> FactoredRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(FactoredRational::zero)
    }

    /// Value equality: identical monomial supports up to zero coefficients,
    /// with coefficients compared by cross-multiplication.
    pub fn eq_value(&self, other: &XPolynomial) -> bool {
        if self.rank != other.rank {
            return false;
        }
        let keys: std::collections::BTreeSet<&XMonomial> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter()
            .all(|m| self.coeff(m).eq_value(&other.coeff(m)))
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coefficients<F>(&self, mut f: F) -> Result<XPolynomial>
    where
        F: FnMut(&FactoredRational) -> Result<FactoredRational>,
    {
        let mut out = XPolynomial::zero(self.rank);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// True iff the polynomial is invariant under every adjacent swap of
    /// variables.
    pub fn is_symmetric(&self) -> bool {
        for i in 1..self.rank {
            for (m, c) in &self.terms {
                let swapped = m.swap_adjacent(i);
                if !self.coeff(&swapped).eq_value(c) {
                    return false;
                }
            }
        }
        true
    }

    /// The common total degree when homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let d = it.next()?.total_degree();
        it.all(|m| m.total_degree() == d).then_some(d)
    }
}

impl std::fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending monomial order puts the leading term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let constant = m.total_degree() == 0;
            if c.is_one() {
                write!(f, "{m}")?;
            } else if constant {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}
