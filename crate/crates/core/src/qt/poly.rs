//! Sparse integer Laurent polynomials in `q` and `t`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A sparse polynomial in `q, t` with arbitrary-precision integer
/// coefficients.  Exponents may be negative (Laurent).  No zero coefficient
/// is ever stored, and the term map is ordered, so equal polynomials have
/// equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QtPolynomial {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        QtPolynomial::default()
    }

    pub fn one() -> Self {
        QtPolynomial::monomial(0, 0, BigInt::one())
    }

    pub fn integer(v: i64) -> Self {
        QtPolynomial::monomial(0, 0, BigInt::from(v))
    }

    pub fn monomial(q_exp: i64, t_exp: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((q_exp, t_exp), coeff);
        }
        QtPolynomial { terms }
    }

    /// `1 - q^a t^b`.
    pub fn one_minus(q_exp: i64, t_exp: i64) -> Self {
        let mut p = QtPolynomial::one();
        p.insert((q_exp, t_exp), -BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, q_exp: i64, t_exp: i64) -> BigInt {
        self.terms
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    fn insert(&mut self, key: (i64, i64), delta: BigInt) {
        if delta.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += delta;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &QtPolynomial) -> QtPolynomial {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.insert(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QtPolynomial) -> QtPolynomial {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.insert(k, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> QtPolynomial {
        QtPolynomial {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &QtPolynomial) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.insert((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_scalar(&self, s: &BigInt) -> QtPolynomial {
        if s.is_zero() {
            return QtPolynomial::zero();
        }
        QtPolynomial {
            terms: self.terms.iter().map(|(&k, c)| (k, c * s)).collect(),
        }
    }

    /// Multiplies by the Laurent monomial `q^a t^b`.
    pub fn mul_monomial(&self, a: i64, b: i64) -> QtPolynomial {
        QtPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + a, j + b), c.clone()))
                .collect(),
        }
    }

    /// Maps `q^i t^j -> q^{-i} t^{-j}`.
    pub fn invert_vars(&self) -> QtPolynomial {
        QtPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((-i, -j), c.clone()))
                .collect(),
        }
    }

    /// Min and max exponents in each variable, `None` for the zero polynomial.
    pub fn exponent_box(&self) -> Option<((i64, i64), (i64, i64))> {
        let mut it = self.terms.keys();
        let &(q0, t0) = it.next()?;
        let (mut qmin, mut qmax, mut tmin, mut tmax) = (q0, q0, t0, t0);
        for &(i, j) in it {
            qmin = qmin.min(i);
            qmax = qmax.max(i);
            tmin = tmin.min(j);
            tmax = tmax.max(j);
        }
        Some(((qmin, tmin), (qmax, tmax)))
    }

    /// Exact division by `1 - q^a t^b` with `(a,b) != (0,0)` nonnegative.
    ///
    /// Works from the lexicographically smallest monomial upward: if
    /// `p = (1 - m) s` then the smallest monomial of `p` and `s` agree.
    pub fn div_exact_binomial(&self, a: u32, b: u32) -> Option<QtPolynomial> {
        assert!(a > 0 || b > 0);
        if self.is_zero() {
            return Some(QtPolynomial::zero());
        }
        let ((_, _), (qmax, tmax)) = self.exponent_box().unwrap();
        let mut rem = self.clone();
        let mut quot = QtPolynomial::zero();
        while !rem.is_zero() {
            let (&(i, j), c) = rem.terms.iter().next().unwrap();
            if i > qmax || j > tmax {
                return None;
            }
            let c = c.clone();
            quot.insert((i, j), c.clone());
            rem.insert((i, j), -c.clone());
            rem.insert((i + a as i64, j + b as i64), c);
        }
        Some(quot)
    }

    /// Exact division by an arbitrary nonzero polynomial; `None` when the
    /// quotient is not a (Laurent) polynomial.
    pub fn div_exact(&self, divisor: &QtPolynomial) -> Option<QtPolynomial> {
        assert!(!divisor.is_zero());
        if self.is_zero() {
            return Some(QtPolynomial::zero());
        }
        // Divide leading (lex-max) terms; exponents may be negative, so
        // this terminates because the dividend's leading term strictly
        // decreases and is bounded below by its own support.
        let lead = |p: &QtPolynomial| -> ((i64, i64), BigInt) {
            let (&k, c) = p.terms.iter().next_back().unwrap();
            (k, c.clone())
        };
        let ((dq, dt), dc) = lead(divisor);
        let ((rqmin, rtmin), _) = self.exponent_box().unwrap();
        let mut rem = self.clone();
        let mut quot = QtPolynomial::zero();
        while !rem.is_zero() {
            let ((rq, rt), rc) = lead(&rem);
            if rq < rqmin || rt < rtmin {
                return None;
            }
            let (q, r) = num_integer::Integer::div_rem(&rc, &dc);
            if !r.is_zero() {
                return None;
            }
            let step = QtPolynomial::monomial(rq - dq, rt - dt, q);
            quot = quot.add(&step);
            rem = rem.sub(&step.mul(divisor));
        }
        Some(quot)
    }

    /// Substitutes values for the variables.  `Zero` requires all exponents
    /// of that variable to be nonnegative; `OtherVar` renames the variable
    /// to the other one (used for `t := q`).
    pub fn substitute(&self, q: super::VarSubst, t: super::VarSubst) -> Result<QtPolynomial> {
        use super::VarSubst::*;
        let mut out = QtPolynomial::zero();
        for (&(i, j), c) in &self.terms {
            // (q-exponent, t-exponent) contributed by each variable's image
            let q_part = match q {
                Keep => Some((i, 0)),
                Zero if i < 0 => return Err(Error::NegativeExponentAtZero),
                Zero => (i == 0).then_some((0, 0)),
                OtherVar => Some((0, i)),
            };
            let t_part = match t {
                Keep => Some((0, j)),
                Zero if j < 0 => return Err(Error::NegativeExponentAtZero),
                Zero => (j == 0).then_some((0, 0)),
                OtherVar => Some((j, 0)),
            };
            if let (Some((a1, b1)), Some((a2, b2))) = (q_part, t_part) {
                out.insert((a1 + a2, b1 + b2), c.clone());
            }
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            acc += BigRational::from(c.clone()) * rational_pow(q, i) * rational_pow(t, j);
        }
        acc
    }

    /// gcd of all coefficients (positive), zero polynomial gives 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
        }
        g.abs()
    }

    /// Divides every coefficient by `d`; `None` unless all divisions are exact.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Option<QtPolynomial> {
        let mut terms = BTreeMap::new();
        for (&k, c) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(c, d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(k, q);
        }
        Some(QtPolynomial { terms })
    }
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let p = base.pow(exp.unsigned_abs().try_into().expect("exponent fits i32"));
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

impl std::fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            if i != 0 {
                factors.push(if i == 1 { "q".into() } else { format!("q^{i}") });
            }
            if j != 0 {
                factors.push(if j == 1 { "t".into() } else { format!("t^{j}") });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
