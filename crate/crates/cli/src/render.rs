//! Deterministic text and LaTeX renderers.
//!
//! The LaTeX per-term form mirrors the usual display of tableau weights:
//! `q^{maj} t^{cov}` followed by one `\frac{(1-t)}{(1-q^{sh}t^{ht})}` per
//! entry and the monomial in `x`.

use macdonald_svt::macdonald::{TermRecord, Variant};
use macdonald_svt::qt::{FactoredRational, XMonomial, XPolynomial};

/// `q`/`t` power in LaTeX, exponent 1 left bare.
fn latex_pow(base: &str, e: i64) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{{{e}}}")
    }
}

fn latex_sub(i: usize) -> String {
    if i < 10 {
        format!("_{i}")
    } else {
        format!("_{{{i}}}")
    }
}

pub fn latex_monomial(m: &XMonomial) -> String {
    let mut out = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        out.push('x');
        out.push_str(&latex_sub(i + 1));
        if e > 1 {
            out.push_str(&format!("^{{{e}}}"));
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// The structured weight of one term in display form.
pub fn latex_term(term: &TermRecord, variant: Variant) -> String {
    let sign: i64 = match variant {
        Variant::Pos => 1,
        Variant::Neg => -1,
    };
    let mut out = String::new();
    if term.maj != 0 {
        out.push_str(&latex_pow("q", sign * term.maj));
    }
    if term.cov != 0 {
        out.push_str(&latex_pow("t", sign * term.cov));
    }
    for &(sh, ht) in &term.factors {
        match variant {
            Variant::Pos => out.push_str(&format!(
                "\\frac{{(1-t)}}{{(1-{}{})}}",
                latex_pow("q", sh as i64),
                latex_pow("t", ht as i64)
            )),
            Variant::Neg => out.push_str(&format!(
                "\\frac{{(1-t^{{-1}})}}{{(1-{}{})}}",
                latex_pow("q", -(sh as i64)),
                latex_pow("t", -(ht as i64))
            )),
        }
    }
    let monomial = latex_monomial(&term.x);
    if out.is_empty() && monomial == "1" {
        out.push('1');
    }
    out.push_str(if monomial == "1" { "" } else { &monomial });
    out
}

pub fn latex_rational(c: &FactoredRational) -> String {
    let mut num = String::new();
    let mut first = true;
    for (&(i, j), coeff) in c.numerator().terms() {
        let neg = coeff.sign() == num_bigint::Sign::Minus;
        let mag = coeff.magnitude().to_string();
        if first {
            if neg {
                num.push('-');
            }
        } else {
            num.push_str(if neg { "-" } else { "+" });
        }
        first = false;
        let mut piece = String::new();
        if mag != "1" || (i == 0 && j == 0) {
            piece.push_str(&mag);
        }
        if i != 0 {
            piece.push_str(&latex_pow("q", i));
        }
        if j != 0 {
            piece.push_str(&latex_pow("t", j));
        }
        num.push_str(&piece);
    }
    if num.is_empty() {
        num.push('0');
    }
    if c.denominator().is_empty() {
        return num;
    }
    let mut den = String::new();
    for (f, &m) in c.denominator() {
        let factor = format!(
            "(1-{}{})",
            if f.q_exp == 0 {
                String::new()
            } else {
                latex_pow("q", f.q_exp as i64)
            },
            if f.t_exp == 0 {
                String::new()
            } else {
                latex_pow("t", f.t_exp as i64)
            }
        );
        if m == 1 {
            den.push_str(&factor);
        } else {
            den.push_str(&format!("{factor}^{{{m}}}"));
        }
    }
    format!("\\frac{{{num}}}{{{den}}}")
}

pub fn latex_polynomial(p: &XPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (i, (m, c)) in terms.into_iter().rev().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if c.is_one() {
            out.push_str(&latex_monomial(m));
        } else {
            out.push_str(&latex_rational(c));
            out.push_str(&latex_monomial(m));
        }
    }
    out
}

/// Structured plain-text weight of one term: `q^maj*t^cov*(1-t)^k/(...)`.
pub fn text_weight(term: &TermRecord, variant: Variant) -> String {
    term_weight_text(term.maj, term.cov, &term.factors, variant)
}

pub fn term_weight_text(maj: i64, cov: i64, factors: &[(u32, u32)], variant: Variant) -> String {
    let sign: i64 = match variant {
        Variant::Pos => 1,
        Variant::Neg => -1,
    };
    let mut parts: Vec<String> = Vec::new();
    let pow = |base: &str, e: i64| -> String {
        if e == 1 {
            base.into()
        } else {
            format!("{base}^{e}")
        }
    };
    if maj != 0 {
        parts.push(pow("q", sign * maj));
    }
    if cov != 0 {
        parts.push(pow("t", sign * cov));
    }
    if !factors.is_empty() {
        let numerator = match variant {
            Variant::Pos => "(1-t)",
            Variant::Neg => "(1-t^-1)",
        };
        if factors.len() == 1 {
            parts.push(numerator.to_string());
        } else {
            parts.push(format!("{numerator}^{}", factors.len()));
        }
    }
    let mut out = parts.join("*");
    if out.is_empty() {
        out.push('1');
    }
    if !factors.is_empty() {
        let mut den: Vec<(String, usize)> = Vec::new();
        let mut i = 0;
        while i < factors.len() {
            let (sh, ht) = factors[i];
            let mut mult = 1;
            while i + mult < factors.len() && factors[i + mult] == (sh, ht) {
                mult += 1;
            }
            i += mult;
            let factor = match variant {
                Variant::Pos => format!("(1-{}*{})", pow("q", sh as i64), pow("t", ht as i64)),
                Variant::Neg => {
                    format!("(1-{}*{})", pow("q", -(sh as i64)), pow("t", -(ht as i64)))
                }
            };
            den.push((factor, mult));
        }
        if den.len() == 1 && den[0].1 == 1 {
            out.push_str(&format!("/{}", den[0].0));
        } else {
            let joined: Vec<String> = den
                .iter()
                .map(|(f, m)| {
                    if *m == 1 {
                        f.clone()
                    } else {
                        format!("{f}^{m}")
                    }
                })
                .collect();
            out.push_str(&format!("/({})", joined.join("*")));
        }
    }
    out
}
