//! Repo-wide polynomial text format: a sum of terms `c*x^k` in descending
//! degree with the sign attached to the coefficient, rationals written `p/q`,
//! e.g. `82*x^4+108*x^3+54*x^2+12*x+1`. The printer omits unit coefficients
//! and `^1`; the parser accepts both spellings.

use num_traits::{One, Signed, Zero};

use super::{Integer, RatPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid polynomial: {msg}")]
pub struct PolyParseError {
    msg: String,
}

impl PolyParseError {
    pub(crate) fn new(msg: impl Into<String>) -> Self {
        PolyParseError { msg: msg.into() }
    }
}

pub(crate) fn print_rat_poly(p: &RatPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for i in (0..=p.degree().unwrap()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() && c.is_positive() {
            out.push('+');
        }
        let abs = c.abs();
        if i == 0 {
            out.push_str(&format!("{}", c));
        } else {
            if c.is_negative() {
                out.push('-');
            }
            if !abs.is_one() {
                out.push_str(&format!("{}*", abs));
            }
            out.push('x');
            if i > 1 {
                out.push_str(&format!("^{}", i));
            }
        }
    }
    out
}

pub(crate) fn parse_rat_poly(s: &str) -> Result<RatPoly, PolyParseError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyParseError::new("empty input"));
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut add_term = |c: Rational, deg: usize| {
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, Rational::zero());
        }
        coeffs[deg] = &coeffs[deg] + &c;
    };
    for (term, sign) in split_terms(&compact)? {
        let (c, deg) = parse_term(term)?;
        add_term(if sign { -c } else { c }, deg);
    }
    Ok(RatPoly::from_coeffs(coeffs))
}

/// Splits on top-level `+`/`-`; the bool marks a negated term. A `-` inside
/// `p/-q` never occurs since printed denominators are positive.
fn split_terms(s: &str) -> Result<Vec<(&str, bool)>, PolyParseError> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0usize;
    let mut neg = false;
    let mut i = 0usize;
    while i < bytes.len() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && i != start {
            out.push((&s[start..i], neg));
            neg = b == b'-';
            start = i + 1;
        } else if (b == b'+' || b == b'-') && i == start {
            if b == b'-' {
                neg = !neg;
            }
            start = i + 1;
        }
        i += 1;
    }
    if start >= s.len() {
        return Err(PolyParseError::new("dangling sign"));
    }
    out.push((&s[start..], neg));
    Ok(out)
}

/// One signless term: `c`, `c*x`, `c*x^k`, `x`, `x^k` (also `cx^k`).
fn parse_term(t: &str) -> Result<(Rational, usize), PolyParseError> {
    if t.is_empty() {
        return Err(PolyParseError::new("empty term"));
    }
    let (coeff_str, var_str) = match t.find('x') {
        None => (t, None),
        Some(pos) => (&t[..pos], Some(&t[pos..])),
    };
    let coeff_str = match (coeff_str.strip_suffix('*'), var_str) {
        (Some(stripped), Some(_)) => stripped,
        (Some(_), None) => {
            return Err(PolyParseError::new(format!("malformed term `{}`", t)))
        }
        (None, _) => coeff_str,
    };
    let coeff = match coeff_str {
        "" => Rational::one(),
        cs => parse_rational(cs)?,
    };
    let deg = match var_str {
        None => 0,
        Some("x") => 1,
        Some(v) => {
            let exp = v
                .strip_prefix("x^")
                .ok_or_else(|| PolyParseError::new(format!("malformed term `{}`", t)))?;
            exp.parse::<usize>()
                .map_err(|_| PolyParseError::new(format!("bad exponent `{}`", exp)))?
        }
    };
    Ok((coeff, deg))
}

fn parse_rational(s: &str) -> Result<Rational, PolyParseError> {
    let parse_int = |v: &str| -> Result<Integer, PolyParseError> {
        v.parse::<Integer>()
            .map_err(|_| PolyParseError::new(format!("bad number `{}`", v)))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(PolyParseError::new("zero denominator"));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, RatPoly};

    #[test]
    fn prints_reference_form() {
        let r = RatPoly::from_int_slice(&[1, 12, 54, 108, 82]);
        assert_eq!(r.to_string(), "82*x^4+108*x^3+54*x^2+12*x+1");
        assert_eq!(RatPoly::from_int_slice(&[1, 0, 0, 0, 1]).to_string(), "x^4+1");
        assert_eq!(RatPoly::from_int_slice(&[-1, 1]).to_string(), "x-1");
        assert_eq!(RatPoly::zero().to_string(), "0");
        let half = RatPoly::from_coeffs(vec![rat(-3, 4), rat(1, 2)]);
        assert_eq!(half.to_string(), "1/2*x-3/4");
    }

    #[test]
    fn parses_both_spellings() {
        let p: RatPoly = "82*x^4+108*x^3+54*x^2+12*x+1".parse().unwrap();
        assert_eq!(p, RatPoly::from_int_slice(&[1, 12, 54, 108, 82]));
        let q: RatPoly = "1*x^4 + 0*x^2 + 1".parse().unwrap();
        assert_eq!(q, RatPoly::from_int_slice(&[1, 0, 0, 0, 1]));
        let s: RatPoly = "-x^2-1/2".parse().unwrap();
        assert_eq!(s, RatPoly::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(-1, 1)]));
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<RatPoly>().is_err());
        assert!("x^".parse::<RatPoly>().is_err());
        assert!("3*".parse::<RatPoly>().is_err());
        assert!("1/0".parse::<RatPoly>().is_err());
        assert!("x+".parse::<RatPoly>().is_err());
    }
}
