//! Assembly of `E^z_mu` and `P_lambda`, specializations, and the
//! identity-verification suite.
//!
//! `E^z_mu` is the sum over all set-valued tableaux of shape `mu` of
//! `q^maj t^cov * prod (1-t)/(1-q^sh t^ht) * x^T`; the `Neg` variant uses
//! the complementary statistics with inverse variables and produces the
//! same polynomial.  Terms are independent, so the sum is evaluated in
//! fixed-size index chunks (in parallel when the `parallel` feature is on)
//! and merged in chunk order, keeping results bit-for-bit deterministic.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{Composition, Permutation};
use crate::error::{Error, Result};
use crate::qt::{FactoredRational, VarSubst, XMonomial, XPolynomial};
use crate::tableaux::{
    arm_profile, count_tableaux, statistics, tableau_from_index, SetValuedTableau,
    TableauStatistics,
};
use crate::walks::{walk_from_tableau, walk_weight};

/// Which of the two term formulas to use.  Both give the same polynomial:
/// `Pos` has nonnegative powers of `q, t`, `Neg` nonnegative powers of
/// `q^{-1}, t^{-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Pos,
    Neg,
}

/// Which evaluation path produces each term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Tableaux,
    Walks,
}

/// Hard ceiling on the number of tableau terms; exceeding it refuses the
/// whole computation rather than truncating.
pub const DEFAULT_TERM_BUDGET: u64 = 1 << 20;

/// Default seed for sampled verification.
pub const DEFAULT_VERIFY_SEED: u64 = 42;

#[derive(Debug, Clone)]
pub struct MacdonaldQuery {
    pub z: Permutation,
    pub mu: Composition,
    pub variant: Variant,
    pub engine: Engine,
    pub max_terms: u64,
}

impl MacdonaldQuery {
    pub fn new(z: Permutation, mu: Composition) -> Result<Self> {
        if z.rank() != mu.rank() {
            return Err(Error::RankMismatch(z.rank(), mu.rank()));
        }
        Ok(MacdonaldQuery {
            z,
            mu,
            variant: Variant::Pos,
            engine: Engine::Tableaux,
            max_terms: DEFAULT_TERM_BUDGET,
        })
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn with_engine(mut self, engine: Engine) -> Self {
        self.engine = engine;
        self
    }

    pub fn with_budget(mut self, max_terms: u64) -> Self {
        self.max_terms = max_terms;
        self
    }
}

/// One tableau's contribution.  For the `Neg` variant `maj` and `cov` are
/// the exponents of `q^{-1}` and `t^{-1}`; the stored coefficient is always
/// the face value in `q, t`.
#[derive(Debug, Clone)]
pub struct TermRecord {
    pub tableau: SetValuedTableau,
    pub x: XMonomial,
    pub maj: i64,
    pub cov: i64,
    /// `(sh, ht)` exponent pairs of the binomial factors, sorted.
    pub factors: Vec<(u32, u32)>,
    pub coefficient: FactoredRational,
}

fn coefficient_from_parts(
    maj: i64,
    cov: i64,
    factors: &[(u32, u32)],
    variant: Variant,
) -> FactoredRational {
    let mut c = FactoredRational::qt_monomial(maj, cov);
    for &(sh, ht) in factors {
        c = c.mul(&FactoredRational::tableau_factor(sh, ht));
    }
    match variant {
        Variant::Pos => c,
        // Built in the variables (1/q, 1/t), then mapped back exactly.
        Variant::Neg => c.invert_vars(),
    }
}

fn term_from_statistics(
    stats: &TableauStatistics,
    variant: Variant,
) -> (i64, i64, FactoredRational) {
    let (maj, cov) = match variant {
        Variant::Pos => (stats.maj_gt, stats.cov_gt),
        Variant::Neg => (stats.maj_lt, stats.cov_lt),
    };
    (
        maj,
        cov,
        coefficient_from_parts(maj, cov, &stats.factors, variant),
    )
}

fn evaluate_term(query: &MacdonaldQuery, tableau: SetValuedTableau) -> Result<TermRecord> {
    match query.engine {
        Engine::Tableaux => {
            let stats = statistics(&query.z, &tableau)?;
            let (maj, cov, coefficient) = term_from_statistics(&stats, query.variant);
            let mut factors = stats.factors;
            factors.sort_unstable();
            Ok(TermRecord {
                tableau,
                x: stats.x,
                maj,
                cov,
                factors,
                coefficient,
            })
        }
        Engine::Walks => {
            let walk = walk_from_tableau(&query.z, &tableau)?;
            let term = walk_weight(&walk, query.variant)?;
            let mut factors = term.factors;
            factors.sort_unstable();
            Ok(TermRecord {
                tableau,
                x: term.x,
                maj: term.maj,
                cov: term.cov,
                factors,
                coefficient: term.coefficient,
            })
        }
    }
}

/// Checks the term budget and returns the in-range term count.
fn budgeted_count(mu: &Composition, max_terms: u64) -> Result<u64> {
    let count = count_tableaux(mu);
    if count > BigUint::from(max_terms) {
        let bits: u64 = arm_profile(mu).iter().map(|&(_, u)| u as u64).sum();
        return Err(Error::BudgetExceeded(format!("2^{bits}"), max_terms));
    }
    Ok(count.to_u64().expect("count fits after budget check"))
}

/// Chunk size as a pure function of the term count, so chunk boundaries —
/// and with them every intermediate canonical form — never depend on the
/// machine or thread count.
fn chunk_size(count: u64) -> u64 {
    (count / 64).clamp(64, 2048)
}

/// Evaluates `eval` on every index of `0..count` and merges the results in
/// index order.  Both phases run in parallel when the feature is enabled:
/// chunked folds over index ranges, then per-monomial sums of the chunk
/// partials in chunk order.  The addition order per monomial is the same
/// as in the plain sequential fold.
fn chunked_sum<F>(count: u64, rank: usize, eval: F) -> Result<XPolynomial>
where
    F: Fn(u64) -> Result<(XMonomial, FactoredRational)> + Sync,
{
    let chunk = chunk_size(count);
    let fold_range = |range: std::ops::Range<u64>| -> Result<XPolynomial> {
        let mut acc = XPolynomial::zero(rank);
        for i in range {
            let (m, c) = eval(i)?;
            acc.add_term(m, c);
        }
        Ok(acc)
    };
    let ranges: Vec<std::ops::Range<u64>> = (0..count.div_ceil(chunk))
        .map(|c| c * chunk..((c + 1) * chunk).min(count))
        .collect();

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let partials: Vec<XPolynomial> = ranges
            .into_par_iter()
            .map(fold_range)
            .collect::<Result<Vec<_>>>()?;
        let monomials: std::collections::BTreeSet<&XMonomial> = partials
            .iter()
            .flat_map(|p| p.terms().map(|(m, _)| m))
            .collect();
        let monomials: Vec<&XMonomial> = monomials.into_iter().collect();
        let summed: Vec<(XMonomial, FactoredRational)> = monomials
            .into_par_iter()
            .map(|m| {
                let mut acc = FactoredRational::zero();
                for p in &partials {
                    let c = p.coeff(m);
                    if !c.is_zero() {
                        acc = acc.add(&c);
                    }
                }
                (m.clone(), acc)
            })
            .collect();
        let mut out = XPolynomial::zero(rank);
        for (m, c) in summed {
            out.add_term(m, c);
        }
        Ok(out)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut acc = XPolynomial::zero(rank);
        for r in ranges {
            acc = acc.add(&fold_range(r)?)?;
        }
        Ok(acc)
    }
}

/// The relative Macdonald polynomial `E^z_mu`.
pub fn compute_e(query: &MacdonaldQuery) -> Result<XPolynomial> {
    let count = budgeted_count(&query.mu, query.max_terms)?;
    let profile = arm_profile(&query.mu);
    chunked_sum(count, query.mu.rank(), |i| {
        let t = tableau_from_index(&query.mu, &profile, i);
        let term = evaluate_term(query, t)?;
        Ok((term.x, term.coefficient))
    })
}

/// Always-sequential evaluation of the same sum; the fallback path and the
/// baseline the benchmarks compare against.
pub fn compute_e_sequential(query: &MacdonaldQuery) -> Result<XPolynomial> {
    let count = budgeted_count(&query.mu, query.max_terms)?;
    let profile = arm_profile(&query.mu);
    let mut acc = XPolynomial::zero(query.mu.rank());
    for i in 0..count {
        let t = tableau_from_index(&query.mu, &profile, i);
        let term = evaluate_term(query, t)?;
        acc.add_term(term.x, term.coefficient);
    }
    Ok(acc)
}

/// `E^z_mu` together with every term, in enumeration order.
pub fn compute_e_with_terms(query: &MacdonaldQuery) -> Result<(XPolynomial, Vec<TermRecord>)> {
    let count = budgeted_count(&query.mu, query.max_terms)?;
    let profile = arm_profile(&query.mu);
    let mut terms = Vec::with_capacity(count as usize);
    for i in 0..count {
        let t = tableau_from_index(&query.mu, &profile, i);
        terms.push(evaluate_term(query, t)?);
    }
    let mut acc = XPolynomial::zero(query.mu.rank());
    for term in &terms {
        acc.add_term(term.x.clone(), term.coefficient.clone());
    }
    Ok((acc, terms))
}

/// The symmetric Macdonald polynomial `P_lambda`: the sum of `E^z_lambda`
/// over all `z`, normalized monic at `x^lambda`.  The sum is checked to be
/// symmetric before normalization.
pub fn compute_p(lambda: &Composition, max_terms: u64) -> Result<XPolynomial> {
    if !lambda.is_partition() {
        return Err(Error::NotAPartition);
    }
    let n = lambda.rank();
    let per_shape = count_tableaux(lambda);
    let factorial: BigUint = (1..=n as u64).product::<u64>().into();
    let total = &per_shape * &factorial;
    if total > BigUint::from(max_terms) {
        return Err(Error::BudgetExceeded(total.to_string(), max_terms));
    }

    let zs = Permutation::all(n);
    let summands: Vec<XPolynomial> = {
        let run = |z: &Permutation| -> Result<XPolynomial> {
            let query = MacdonaldQuery::new(z.clone(), lambda.clone())?.with_budget(max_terms);
            compute_e(&query)
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            zs.par_iter().map(run).collect::<Result<Vec<_>>>()?
        }
        #[cfg(not(feature = "parallel"))]
        {
            zs.iter().map(run).collect::<Result<Vec<_>>>()?
        }
    };
    let mut sum = XPolynomial::zero(n);
    for s in summands {
        sum = sum.add(&s)?;
    }

    if !sum.is_symmetric() {
        return Err(Error::Internal(format!(
            "sum of E^z_lambda over S_n is not symmetric for lambda={lambda}"
        )));
    }
    let leading = sum.coeff(&XMonomial::from_parts(lambda.parts()));
    if leading.is_zero() {
        return Err(Error::Internal(format!(
            "zero coefficient at x^lambda in the symmetrized sum for lambda={lambda}"
        )));
    }
    sum.map_coefficients(|c| c.div_exact(&leading))
}

/// A symbolic specialization of a polynomial's coefficients.
///
/// The `*InvZero` variants first map `q -> 1/q, t -> 1/t` exactly and then
/// set the named variable to zero; their results read in the variables
/// `(1/q, 1/t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    QZero,
    TZero,
    QZeroTZero,
    /// `t := q`.
    TEqualsQ,
    QInvZero,
    TInvZero,
    QInvZeroTInvZero,
}

pub fn specialize(p: &XPolynomial, spec: Specialization) -> Result<XPolynomial> {
    use Specialization::*;
    let (invert, q, t) = match spec {
        QZero => (false, VarSubst::Zero, VarSubst::Keep),
        TZero => (false, VarSubst::Keep, VarSubst::Zero),
        QZeroTZero => (false, VarSubst::Zero, VarSubst::Zero),
        TEqualsQ => (false, VarSubst::Keep, VarSubst::OtherVar),
        QInvZero => (true, VarSubst::Zero, VarSubst::Keep),
        TInvZero => (true, VarSubst::Keep, VarSubst::Zero),
        QInvZeroTInvZero => (true, VarSubst::Zero, VarSubst::Zero),
    };
    p.map_coefficients(|c| {
        let c = if invert { c.invert_vars() } else { c.clone() };
        c.substitute(q, t)
    })
}

/// Exact evaluation of every coefficient at a rational point.
pub fn evaluate_at(
    p: &XPolynomial,
    q: &num_rational::BigRational,
    t: &num_rational::BigRational,
) -> Result<Vec<(XMonomial, num_rational::BigRational)>> {
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        out.push((m.clone(), c.eval(q, t)?));
    }
    Ok(out)
}

/// Options for [`verify_identities`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Sample size for shapes whose tableau count exceeds the budget;
    /// `None` demands exhaustive checking.
    pub samples: Option<u64>,
    pub seed: u64,
    pub max_terms: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: None,
            seed: DEFAULT_VERIFY_SEED,
            max_terms: DEFAULT_TERM_BUDGET,
        }
    }
}

/// One failed check, with the offending tableau serialized.
#[derive(Debug, Clone)]
pub struct VerifyFailure {
    pub index: u64,
    pub tableau: String,
    pub check: &'static str,
    pub detail: String,
}

/// Outcome of the per-tableau identity checks.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub mu: Composition,
    pub z: Permutation,
    pub total_tableaux: BigUint,
    pub checked: u64,
    pub sampled: bool,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs, per tableau: (a) Pos-variant term equals Neg-variant term,
/// (b) tableaux-engine term equals walks-engine term (both variants),
/// (c) the length parity invariant, (d) fold signs along the walk match
/// the less/greater split of the tableau.  Shapes beyond the budget are
/// sampled with a seeded generator.
pub fn verify_identities(
    mu: &Composition,
    z: &Permutation,
    options: &VerifyOptions,
) -> Result<VerifyReport> {
    if z.rank() != mu.rank() {
        return Err(Error::RankMismatch(z.rank(), mu.rank()));
    }
    let total = count_tableaux(mu);
    let profile = arm_profile(mu);
    let bits: u64 = profile.iter().map(|&(_, u)| u as u64).sum();

    let indices: Vec<u64> = if total <= BigUint::from(options.max_terms) {
        (0..total.to_u64().expect("within budget")).collect()
    } else {
        let samples = options
            .samples
            .ok_or_else(|| Error::BudgetExceeded(format!("2^{bits}"), options.max_terms))?;
        if bits > 63 {
            return Err(Error::BudgetExceeded(format!("2^{bits}"), u64::MAX));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        let span = 1u64 << bits;
        (0..samples).map(|_| rng.gen_range(0..span)).collect()
    };
    let sampled = indices.len() < total.to_u64().map(|t| t as usize).unwrap_or(usize::MAX);

    let mut failures = Vec::new();
    let mut checked = 0u64;
    'outer: for &i in &indices {
        let tableau = tableau_from_index(mu, &profile, i);
        let fail = |check: &'static str, detail: String| VerifyFailure {
            index: i,
            tableau: tableau.to_string(),
            check,
            detail,
        };

        // (c) parity: statistics() rejects violations
        let stats = match statistics(z, &tableau) {
            Ok(s) => s,
            Err(e) => {
                failures.push(fail("parity", e.to_string()));
                break 'outer;
            }
        };
        let (_, _, pos) = term_from_statistics(&stats, Variant::Pos);
        let (_, _, neg) = term_from_statistics(&stats, Variant::Neg);

        // (a) the two term formulas agree
        if !pos.eq_value(&neg) {
            failures.push(fail("pos_neg", format!("pos={pos} neg={neg}")));
            break 'outer;
        }

        // (b) walks engine reproduces the tableaux engine
        let walk = walk_from_tableau(z, &tableau)?;
        for variant in [Variant::Pos, Variant::Neg] {
            let wterm = walk_weight(&walk, variant)?;
            let (_, _, tcoeff) = term_from_statistics(&stats, variant);
            if wterm.x != stats.x || !wterm.coefficient.eq_value(&tcoeff) {
                failures.push(fail(
                    "walk_tableau",
                    format!(
                        "variant {variant:?}: walk ({}, {}) vs tableau ({}, {})",
                        wterm.x, wterm.coefficient, stats.x, tcoeff
                    ),
                ));
                break 'outer;
            }
        }

        // (d) fold signs match the less/greater split
        for f in walk.folds() {
            let in_greater = stats
                .folds
                .greater
                .get(&f.box_coord)
                .map(|l| l.contains(&f.entry))
                .unwrap_or(false);
            if f.negative != in_greater {
                failures.push(fail(
                    "fold_sign",
                    format!(
                        "entry {} in box {}: walk sign negative={}, tableau greater={}",
                        f.entry, f.box_coord, f.negative, in_greater
                    ),
                ));
                break 'outer;
            }
        }

        checked += 1;
    }

    Ok(VerifyReport {
        mu: mu.clone(),
        z: z.clone(),
        total_tableaux: total,
        checked,
        sampled,
        failures,
    })
}

/// Deterministic sampler used by callers that need random shapes or
/// basements (exposed so the CLI and tests share one stream).
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random permutation window from an externally seeded stream.
pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut window: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        window.swap(i, j);
    }
    Permutation::new(window).expect("shuffle preserves the window")
}
