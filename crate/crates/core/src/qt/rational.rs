//! Rational functions in `q, t` with binomial denominators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::QtPolynomial;
use crate::error::{Error, Result};

/// A denominator factor `1 - q^a t^b` with `(a,b) != (0,0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialFactor {
    pub q_exp: u32,
    pub t_exp: u32,
}

impl BinomialFactor {
    pub fn new(q_exp: u32, t_exp: u32) -> Result<Self> {
        if q_exp == 0 && t_exp == 0 {
            return Err(Error::Internal("binomial factor (0,0)".into()));
        }
        Ok(BinomialFactor { q_exp, t_exp })
    }

    pub fn polynomial(&self) -> QtPolynomial {
        QtPolynomial::one_minus(self.q_exp as i64, self.t_exp as i64)
    }
}

/// A variable substitution for [`FactoredRational::substitute`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarSubst {
    Keep,
    Zero,
    /// Rename to the other variable (`t := q` when applied to `t`).
    OtherVar,
}

/// An exact coefficient: integer Laurent-polynomial numerator over a
/// multiset of binomial factors `(1 - q^a t^b)`.
///
/// Canonical form: zero has an empty denominator, and no denominator factor
/// divides the numerator exactly (cancellation is exhausted by trial
/// division after every operation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRational {
    num: QtPolynomial,
    den: BTreeMap<BinomialFactor, u32>,
}

impl FactoredRational {
    pub fn new(num: QtPolynomial, den: BTreeMap<BinomialFactor, u32>) -> Self {
        let mut r = FactoredRational { num, den };
        r.canonicalize();
        r
    }

    pub fn zero() -> Self {
        FactoredRational {
            num: QtPolynomial::zero(),
            den: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        FactoredRational {
            num: QtPolynomial::one(),
            den: BTreeMap::new(),
        }
    }

    pub fn integer(v: i64) -> Self {
        FactoredRational {
            num: QtPolynomial::integer(v),
            den: BTreeMap::new(),
        }
    }

    pub fn from_polynomial(num: QtPolynomial) -> Self {
        FactoredRational {
            num,
            den: BTreeMap::new(),
        }
    }

    /// `q^maj t^cov`, Laurent exponents allowed.
    pub fn qt_monomial(q_exp: i64, t_exp: i64) -> Self {
        FactoredRational {
            num: QtPolynomial::monomial(q_exp, t_exp, BigInt::one()),
            den: BTreeMap::new(),
        }
    }

    /// `(1 - t) / (1 - q^a t^b)`.
    pub fn tableau_factor(a: u32, b: u32) -> Self {
        let mut den = BTreeMap::new();
        den.insert(BinomialFactor::new(a, b).expect("nonzero"), 1);
        FactoredRational::new(QtPolynomial::one_minus(0, 1), den)
    }

    pub fn numerator(&self) -> &QtPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<BinomialFactor, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_empty()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<BinomialFactor> = self.den.keys().copied().collect();
        for f in factors {
            while *self.den.get(&f).unwrap_or(&0) > 0 {
                match self.num.div_exact_binomial(f.q_exp, f.t_exp) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&f).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&f);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    /// The denominator expanded as a polynomial.
    pub fn den_polynomial(&self) -> QtPolynomial {
        let mut p = QtPolynomial::one();
        for (f, &m) in &self.den {
            let fp = f.polynomial();
            for _ in 0..m {
                p = p.mul(&fp);
            }
        }
        p
    }

    pub fn add(&self, other: &FactoredRational) -> FactoredRational {
        // least common multiset of denominator factors
        let mut lcm: BTreeMap<BinomialFactor, u32> = self.den.clone();
        for (f, &m) in &other.den {
            let e = lcm.entry(*f).or_insert(0);
            *e = (*e).max(m);
        }
        let scale = |r: &FactoredRational| -> QtPolynomial {
            let mut p = r.num.clone();
            for (f, &m) in &lcm {
                let have = r.den.get(f).copied().unwrap_or(0);
                let fp = f.polynomial();
                for _ in have..m {
                    p = p.mul(&fp);
                }
            }
            p
        };
        let num = scale(self).add(&scale(other));
        FactoredRational::new(num, lcm)
    }

    pub fn neg(&self) -> FactoredRational {
        FactoredRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &FactoredRational) -> FactoredRational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FactoredRational) -> FactoredRational {
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(*f).or_insert(0) += m;
        }
        FactoredRational::new(self.num.mul(&other.num), den)
    }

    /// Exact value equality: canonical forms compare directly, anything
    /// else by cross-multiplication.
    pub fn eq_value(&self, other: &FactoredRational) -> bool {
        if self == other {
            return true;
        }
        self.num.mul(&other.den_polynomial()) == other.num.mul(&self.den_polynomial())
    }

    /// Exact division; fails with an internal error when the quotient does
    /// not admit a binomial-factored denominator.
    pub fn div_exact(&self, divisor: &FactoredRational) -> Result<FactoredRational> {
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(FactoredRational::zero());
        }
        // self / divisor = (num * divisor.den_product) / (den * divisor.num)
        let mut num = self.num.clone();
        for (f, &m) in &divisor.den {
            let fp = f.polynomial();
            for _ in 0..m {
                num = num.mul(&fp);
            }
        }
        let mut den = self.den.clone();

        // Split divisor.num into content * binomial factors * residue.
        let mut g = divisor.num.clone();
        let content = g.content();
        g = g.div_scalar_exact(&content).expect("content divides");
        if let Some(((qmin, tmin), (qmax, tmax))) = g.exponent_box() {
            for a in 0..=(qmax - qmin).max(0) as u32 {
                for b in 0..=(tmax - tmin).max(0) as u32 {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    while let Some(q) = g.div_exact_binomial(a, b) {
                        g = q;
                        *den.entry(BinomialFactor::new(a, b).unwrap()).or_insert(0) += 1;
                    }
                }
            }
        }
        // Whatever is left must divide the numerator exactly (a unit
        // monomial always does, since the numerator is Laurent).
        if g.num_terms() == 1 {
            let (&(i, j), c) = g.terms().next().unwrap();
            num = num.mul_monomial(-i, -j);
            num = num
                .div_scalar_exact(c)
                .ok_or_else(|| Error::Internal("normalizer unit does not divide".into()))?;
        } else if !g.is_one() {
            num = num
                .div_exact(&g)
                .ok_or_else(|| Error::Internal("normalizer does not divide coefficient".into()))?;
        }
        num = num
            .div_scalar_exact(&content)
            .ok_or_else(|| Error::Internal("normalizer content does not divide".into()))?;
        Ok(FactoredRational::new(num, den))
    }

    /// The image under `q -> 1/q, t -> 1/t`, kept in factored form:
    /// each `(1 - q^{-a} t^{-b})` equals `-q^{-a} t^{-b} (1 - q^a t^b)`,
    /// so the denominator multiset survives and a sign and monomial move
    /// into the numerator.
    pub fn invert_vars(&self) -> FactoredRational {
        let mut num = self.num.invert_vars();
        let mut total_mult: u32 = 0;
        let (mut qa, mut tb) = (0i64, 0i64);
        for (f, &m) in &self.den {
            total_mult += m;
            qa += f.q_exp as i64 * m as i64;
            tb += f.t_exp as i64 * m as i64;
        }
        num = num.mul_monomial(qa, tb);
        if total_mult % 2 == 1 {
            num = num.neg();
        }
        FactoredRational::new(num, self.den.clone())
    }

    /// Exact substitution.  A denominator factor `(1 - q^a t^b)` becomes 1
    /// when a zero substitution kills its monomial; it can never vanish
    /// because `(a,b) != (0,0)`, but the check is kept as a guard.
    pub fn substitute(&self, q: VarSubst, t: VarSubst) -> Result<FactoredRational> {
        use VarSubst::*;
        let num = self.num.substitute(q, t)?;
        let mut den: BTreeMap<BinomialFactor, u32> = BTreeMap::new();
        for (f, &m) in &self.den {
            if (q == Zero && f.q_exp > 0) || (t == Zero && f.t_exp > 0) {
                continue; // q^a t^b -> 0, factor -> 1
            }
            let (mut a2, mut b2) = (0u32, 0u32);
            match q {
                Keep => a2 += f.q_exp,
                Zero => {}
                OtherVar => b2 += f.q_exp,
            }
            match t {
                Keep => b2 += f.t_exp,
                Zero => {}
                OtherVar => a2 += f.t_exp,
            }
            if a2 == 0 && b2 == 0 {
                return Err(Error::ZeroDenominator);
            }
            *den.entry(BinomialFactor::new(a2, b2).unwrap()).or_insert(0) += m;
        }
        Ok(FactoredRational::new(num, den))
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, q: &BigRational, t: &BigRational) -> Result<BigRational> {
        let mut acc = self.num.eval(q, t);
        for (f, &m) in &self.den {
            let v = f.polynomial().eval(q, t);
            if v.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            for _ in 0..m {
                acc /= v.clone();
            }
        }
        Ok(acc)
    }

    /// True when the value is a plain integer (after canonicalization a
    /// constant numerator with empty denominator).
    pub fn as_integer(&self) -> Option<BigInt> {
        if !self.den.is_empty() {
            return None;
        }
        if self.num.is_zero() {
            return Some(BigInt::zero());
        }
        if self.num.num_terms() == 1 {
            let (&(i, j), c) = self.num.terms().next().unwrap();
            if i == 0 && j == 0 {
                return Some(c.clone());
            }
        }
        None
    }
}

impl std::fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_empty() {
            if self.num.num_terms() > 1 {
                return write!(f, "({})", self.num);
            }
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/", self.num)?;
        let single = self.den.len() == 1 && *self.den.values().next().unwrap() == 1;
        if single {
            let fac = self.den.keys().next().unwrap();
            return write!(f, "({})", fac.polynomial());
        }
        write!(f, "(")?;
        for (i, (fac, &m)) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "({})", fac.polynomial())?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor(a: u32, b: u32) -> FactoredRational {
        FactoredRational::tableau_factor(a, b)
    }

    #[test]
    fn add_inverse_gives_zero() {
        let x = factor(1, 2);
        assert!(x.add(&x.neg()).is_zero());
        assert!(x.add(&x.neg()).denominator().is_empty());
    }

    #[test]
    fn add_over_common_denominator() {
        // (1-t)/(1-qt) + (1-t)qt/(1-qt) = (1-t)(1+qt)/(1-qt)
        let a = factor(1, 1);
        let b = a.mul(&FactoredRational::qt_monomial(1, 1));
        let sum = a.add(&b);
        let expected_num = QtPolynomial::one_minus(0, 1)
            .mul(&QtPolynomial::one().add(&QtPolynomial::monomial(1, 1, BigInt::one())));
        assert_eq!(sum.numerator(), &expected_num);
        assert_eq!(sum.denominator().len(), 1);
        assert_eq!(
            sum.denominator().iter().next().unwrap(),
            (&BinomialFactor::new(1, 1).unwrap(), &1)
        );
    }

    #[test]
    fn mul_cancels_completely() {
        // (1-t)/(1-qt) * (1-qt)/(1-t) = 1
        let a = factor(1, 1);
        let mut den = BTreeMap::new();
        den.insert(BinomialFactor::new(0, 1).unwrap(), 1);
        let b = FactoredRational::new(QtPolynomial::one_minus(1, 1), den);
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn canonical_form_leaves_no_dividing_factor() {
        // (1-t^2)/(1-t) canonicalizes to 1+t
        let mut den = BTreeMap::new();
        den.insert(BinomialFactor::new(0, 1).unwrap(), 1);
        let r = FactoredRational::new(QtPolynomial::one_minus(0, 2), den);
        assert!(r.denominator().is_empty());
        assert_eq!(
            r.numerator(),
            &QtPolynomial::one().add(&QtPolynomial::monomial(0, 1, BigInt::one()))
        );
    }

    #[test]
    fn eq_value_examples() {
        // (1-t^2)/(1-t) == (1+t)
        let mut den = BTreeMap::new();
        den.insert(BinomialFactor::new(0, 1).unwrap(), 1);
        let lhs = FactoredRational {
            num: QtPolynomial::one_minus(0, 2),
            den,
        };
        let rhs = FactoredRational::from_polynomial(
            QtPolynomial::one().add(&QtPolynomial::monomial(0, 1, BigInt::one())),
        );
        assert!(lhs.eq_value(&rhs));
        assert!(!factor(1, 3).eq_value(&factor(1, 4)));
    }

    #[test]
    fn substitute_examples() {
        // (1-t)/(1-qt^3) at q=0 -> 1-t
        let r = factor(1, 3);
        let s = r.substitute(VarSubst::Zero, VarSubst::Keep).unwrap();
        assert_eq!(
            s,
            FactoredRational::from_polynomial(QtPolynomial::one_minus(0, 1))
        );
        // ... and at q=0, t=0 -> 1
        let s = r.substitute(VarSubst::Zero, VarSubst::Zero).unwrap();
        assert!(s.is_one());
        // q^2 t^5 (1-t)^3 / ((1-qt^4)^2 (1-qt^5)) at t=0 -> 0
        let r = FactoredRational::qt_monomial(2, 5)
            .mul(&factor(1, 4))
            .mul(&factor(1, 4))
            .mul(&factor(1, 5));
        let s = r.substitute(VarSubst::Keep, VarSubst::Zero).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn substitute_t_to_q_keeps_binomial_form() {
        // (1-t)/(1-qt) at t:=q -> (1-q)/(1-q^2) -> 1/(1+q); the factored
        // form stays (1-q)/(1-q^2) since 1+q is not a binomial factor.
        let r = factor(1, 1);
        let s = r.substitute(VarSubst::Keep, VarSubst::OtherVar).unwrap();
        assert_eq!(s.numerator(), &QtPolynomial::one_minus(1, 0));
        let f: Vec<_> = s.denominator().keys().collect();
        assert_eq!(f, vec![&BinomialFactor::new(2, 0).unwrap()]);
        // value check at q = 3: (1-3)/(1-9) = 1/4
        let three = BigRational::from(BigInt::from(3));
        let v = s.eval(&three, &BigRational::zero()).unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(1), BigInt::from(4)));
    }

    #[test]
    fn invert_vars_on_tableau_factor() {
        // (1-t)/(1-qt) inverted equals q(1-t)/(1-qt)
        let r = factor(1, 1);
        let inv = r.invert_vars();
        let expected = r.mul(&FactoredRational::qt_monomial(1, 0));
        assert!(inv.eq_value(&expected));
        // involution
        assert!(inv.invert_vars().eq_value(&r));
    }

    #[test]
    fn div_exact_by_integer_and_binomial_products() {
        let r = factor(1, 2).mul(&FactoredRational::integer(6));
        let half = r.div_exact(&FactoredRational::integer(3)).unwrap();
        assert!(half.eq_value(&factor(1, 2).mul(&FactoredRational::integer(2))));

        // divide by (1+t) = (1-t^2)/(1-t)
        let mut den = BTreeMap::new();
        den.insert(BinomialFactor::new(0, 1).unwrap(), 1);
        let one_plus_t = FactoredRational::new(QtPolynomial::one_minus(0, 2), den);
        let prod = factor(1, 4).mul(&one_plus_t);
        let back = prod.div_exact(&one_plus_t).unwrap();
        assert!(back.eq_value(&factor(1, 4)));
        assert_eq!(back, factor(1, 4));
    }

    #[test]
    fn eval_detects_vanishing_denominator() {
        let r = factor(1, 1);
        let one = BigRational::one();
        assert!(matches!(r.eval(&one, &one), Err(Error::ZeroDenominator)));
    }
}
