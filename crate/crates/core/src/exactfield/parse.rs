//! Text form of field elements.
//!
//! Grammar:
//!   elem := poly | poly " / " poly
//!   poly := term ("+" term)*
//!   term := rational ["*eps^" integer]
//!   rational := ["-"] digits ["/" digits]
//!
//! Exponents are non-negative; negative valuations are expressed by the
//! denominator polynomial. A `/` squeezed between digits always belongs to a
//! rational coefficient; the numerator/denominator split is written ` / `
//! with surrounding spaces, which keeps the two uses of the slash distinct.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{parse_error, Error, Result};
use crate::exactfield::epspoly::EpsPoly;
use crate::exactfield::{FieldElem, Rational};

pub fn parse_field_elem(input: &str) -> Result<FieldElem> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(parse_error(input, 0, "empty field element"));
    }
    let base = input.find(trimmed).unwrap_or(0);
    match trimmed.find(" / ") {
        None => {
            let num = parse_poly(input, base, trimmed)?;
            Ok(FieldElem::from_poly(num))
        }
        Some(pos) => {
            let (num_text, rest) = trimmed.split_at(pos);
            let den_text = &rest[3..];
            if den_text.contains(" / ") {
                return Err(parse_error(input, base + pos + 3, "multiple ' / ' separators"));
            }
            let num = parse_poly(input, base, num_text)?;
            let den = parse_poly(input, base + pos + 3, den_text)?;
            if den.is_zero() {
                return Err(parse_error(input, base + pos + 3, "zero denominator"));
            }
            FieldElem::new(num, den)
        }
    }
}

/// Parse a polynomial; `offset` is the byte position of `text` within the
/// original input, used for error reporting.
fn parse_poly(input: &str, offset: usize, text: &str) -> Result<EpsPoly> {
    let mut acc = EpsPoly::zero();
    let mut pos = 0usize;
    loop {
        let (term, used) = parse_term(input, offset + pos, &text[pos..])?;
        acc = acc.add(&term);
        pos += used;
        if pos == text.len() {
            return Ok(acc);
        }
        if text.as_bytes()[pos] == b'+' {
            pos += 1;
            if pos == text.len() {
                return Err(parse_error(input, offset + pos, "dangling '+'"));
            }
        } else {
            return Err(parse_error(
                input,
                offset + pos,
                format!("expected '+' between terms, found {:?}", &text[pos..pos + 1]),
            ));
        }
    }
}

/// Parse one `rational ["*eps^" integer]` term. Returns the term and the
/// number of bytes consumed.
fn parse_term(input: &str, offset: usize, text: &str) -> Result<(EpsPoly, usize)> {
    let (coeff, mut pos) = parse_rational(input, offset, text)?;
    let exp = if text[pos..].starts_with("*eps^") {
        pos += 5;
        let (digits, used) = take_digits(&text[pos..]);
        if used == 0 {
            return Err(parse_error(input, offset + pos, "expected exponent digits after '*eps^'"));
        }
        pos += used;
        digits.parse::<usize>().map_err(|_| {
            parse_error(input, offset + pos, "exponent out of range")
        })?
    } else {
        0
    };
    Ok((EpsPoly::monomial(coeff, exp), pos))
}

fn parse_rational(input: &str, offset: usize, text: &str) -> Result<(Rational, usize)> {
    let mut pos = 0usize;
    let neg = text.starts_with('-');
    if neg {
        pos += 1;
    }
    let (num_digits, used) = take_digits(&text[pos..]);
    if used == 0 {
        return Err(parse_error(input, offset + pos, "expected a rational coefficient"));
    }
    pos += used;
    let mut numer: BigInt = num_digits.parse().expect("digits parse as BigInt");
    if neg {
        numer = -numer;
    }
    // A '/' directly followed by a digit continues the rational.
    let denom: BigInt = if text[pos..].starts_with('/')
        && text.as_bytes().get(pos + 1).map_or(false, u8::is_ascii_digit)
    {
        pos += 1;
        let (den_digits, used) = take_digits(&text[pos..]);
        pos += used;
        den_digits.parse().expect("digits parse as BigInt")
    } else {
        BigInt::from(1)
    };
    if denom.is_zero() {
        return Err(parse_error(input, offset + pos, "zero denominator in rational"));
    }
    Ok((Rational::new(numer, denom), pos))
}

fn take_digits(text: &str) -> (&str, usize) {
    let end = text.bytes().position(|b| !b.is_ascii_digit()).unwrap_or(text.len());
    (&text[..end], end)
}

/// Parse a bare rational in `p` or `p/q` form (used for coefficient sets).
pub fn parse_rational_text(input: &str) -> Result<Rational> {
    let trimmed = input.trim();
    let (r, used) = parse_rational(input, 0, trimmed)?;
    if used != trimmed.len() {
        return Err(parse_error(input, used, "trailing characters after rational"));
    }
    Ok(r)
}

/// Helper shared by Display impls and the CLI.
pub fn rational_to_text(c: &Rational) -> String {
    crate::exactfield::epspoly::rational_text(c)
}

// An error type check: Error::Parse carries position info.
const _: fn() -> Error = || Error::Parse { line: 0, col: 0, msg: String::new() };

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::epspoly::rat;

    #[test]
    fn parse_simple_forms() {
        assert_eq!(parse_field_elem("0").unwrap(), FieldElem::zero());
        assert_eq!(parse_field_elem("1").unwrap(), FieldElem::one());
        assert_eq!(parse_field_elem("-3/2").unwrap(), FieldElem::from_rational(rat(-3, 2)));
        assert_eq!(parse_field_elem("1*eps^1").unwrap(), FieldElem::eps_pow(1));
        assert_eq!(
            parse_field_elem("1 / 1*eps^2").unwrap(),
            FieldElem::eps_pow(-2)
        );
    }

    #[test]
    fn rational_slash_vs_separator() {
        // 1/2 * eps is a single term, not a quotient of polynomials.
        let half_eps = parse_field_elem("1/2*eps^1").unwrap();
        assert_eq!(half_eps, FieldElem::monomial(rat(1, 2), 1));
        // 1/(2 eps) canonicalizes to (1/2)/eps and round-trips.
        let inv = FieldElem::monomial(rat(1, 2), -1);
        assert_eq!(inv.to_string(), "1/2 / 1*eps^1");
        assert_eq!(parse_field_elem(&inv.to_string()).unwrap(), inv);
    }

    #[test]
    fn error_positions() {
        match parse_field_elem("1+") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(col, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_field_elem("").is_err());
        assert!(parse_field_elem("1 / 0").is_err());
        assert!(parse_field_elem("eps").is_err());
        assert!(parse_field_elem("1*eps^-1").is_err());
    }

    #[test]
    fn non_canonical_inputs_normalize() {
        // denominator 3 is not canonical; parsing normalizes it
        let a = parse_field_elem("1*eps^2 / 3").unwrap();
        assert_eq!(a, FieldElem::monomial(rat(1, 3), 2));
        assert_eq!(a.to_string(), "1/3*eps^2");
    }
}
