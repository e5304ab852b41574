//! Text syntax for polynomials over GF(2^d).
//!
//! Grammar (whitespace around '+' and '*' is ignored):
//!
//! ```text
//! poly  := term ('+' term)*
//! term  := coeff '*'? power | power
//! power := 'X' ('^' uint)?
//! coeff := 'a' ('^' uint)?     -- power of the primitive element
//!        | uint                -- element as a coefficient bit-value
//! ```
//!
//! Examples: `a*X^11 + X^6 + X`, `X^5`, `a^3*X`, `7*X^2`. Constant
//! terms are rejected: these polynomials must fix 0.

use anyhow::{bail, Result};
use stschrom_core::gf2d::{FieldGF2d, FieldPolynomial};

fn parse_uint(s: &str) -> Result<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        bail!("expected an unsigned integer, found {s:?}");
    }
    Ok(s.parse()?)
}

/// Parses one term into (coefficient bit-value, exponent of X).
fn parse_term(field: &FieldGF2d, term: &str) -> Result<(u32, u32)> {
    let term = term.trim();
    if term.is_empty() {
        bail!("empty term");
    }
    let (coeff_text, power_text) = match term.find('X') {
        Some(i) => {
            let before = term[..i].trim().trim_end_matches('*').trim();
            (before, &term[i..])
        }
        None => (term, ""),
    };
    let coeff = if coeff_text.is_empty() {
        1
    } else if let Some(exp) = coeff_text.strip_prefix('a') {
        let e = if exp.is_empty() {
            1
        } else {
            parse_uint(exp.strip_prefix('^').unwrap_or(exp))?
        };
        field.exp(e as u64)
    } else {
        let bits = parse_uint(coeff_text)?;
        if bits >= field.size() {
            bail!("coefficient {bits} is not an element of GF(2^{})", field.degree());
        }
        bits
    };
    let exponent = if power_text.is_empty() {
        0
    } else {
        let rest = power_text.strip_prefix('X').unwrap();
        if rest.is_empty() {
            1
        } else {
            match rest.strip_prefix('^') {
                Some(e) => parse_uint(e)?,
                None => bail!("expected '^' after X in {term:?}"),
            }
        }
    };
    Ok((coeff, exponent))
}

/// Parses the documented polynomial syntax over the given field.
pub fn parse_polynomial(field: &FieldGF2d, text: &str) -> Result<FieldPolynomial> {
    let mut coeffs: Vec<u32> = Vec::new();
    for term in text.split('+') {
        let (c, e) = parse_term(field, term)?;
        if e == 0 {
            bail!("constant term {term:?}: the polynomial must fix 0");
        }
        if coeffs.len() < e as usize {
            coeffs.resize(e as usize, 0);
        }
        // characteristic 2: repeated terms add by XOR
        coeffs[e as usize - 1] ^= c;
    }
    Ok(FieldPolynomial::new(coeffs))
}
