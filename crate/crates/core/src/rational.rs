//! Exact rational scalars and their textual forms.
//!
//! [`Rational`] is `num_rational::BigRational`; it is kept in canonical form
//! (positive denominator, reduced) by every arithmetic operation, so equality is
//! value equality. The helpers here cover the two boundary representations the
//! rest of the crate needs: the lossless `p/q` string and a correctly rounded
//! decimal string with a requested number of significant digits.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` with optional leading sign, no whitespace.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let parse_int = |t: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = match t.strip_prefix(['-', '+']) {
            Some(rest) if allow_sign => rest,
            Some(_) => return Err(bad()),
            None => t,
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s, true)?)),
        Some((p, q)) => {
            let num = parse_int(p, true)?;
            let den = parse_int(q, false)?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical `p/q` form; `q` is omitted when it is 1.
pub fn to_fraction_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest `f64` (up to double rounding of a 128-bit truncated quotient).
pub fn to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let num = r.numer().abs();
    let den = r.denom();
    let shift = 128 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as usize) / den
    } else {
        (num >> (-shift) as usize) / den
    };
    let mantissa = q.to_f64().unwrap_or(f64::INFINITY);
    // two factors so that neither power of two overflows on its own
    let e = (-shift).clamp(-4000, 4000) as i32;
    let value = mantissa * 2f64.powi(e / 2) * 2f64.powi(e - e / 2);
    if r.is_negative() {
        -value
    } else {
        value
    }
}

/// Decimal rendering with `digits` significant digits, rounded half away from zero.
///
/// Values whose decimal exponent lies in `[-5, digits)` are written positionally,
/// everything else in `d.ddde±x` notation. Trailing zeros are kept so that the
/// number of significant digits is visible.
pub fn to_decimal_string(r: &Rational, digits: usize) -> String {
    assert!(digits >= 1, "at least one significant digit");
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();

    // exp10 = floor(log10 |r|), first estimated from bit lengths then corrected
    let ten = BigInt::from(10);
    let mut exp10 = ((num.bits() as f64 - den.bits() as f64) * std::f64::consts::LOG10_2).floor() as i64;
    let pow10 = |e: i64| -> BigInt { num_traits::pow(ten.clone(), e.unsigned_abs() as usize) };
    let in_decade = |e: i64| -> std::cmp::Ordering {
        // compares |r| against 10^e
        if e >= 0 {
            num.cmp(&(&den * pow10(e)))
        } else {
            (&num * pow10(e)).cmp(&den)
        }
    };
    while in_decade(exp10) == std::cmp::Ordering::Less {
        exp10 -= 1;
    }
    while in_decade(exp10 + 1) != std::cmp::Ordering::Less {
        exp10 += 1;
    }

    // scaled = round(|r| * 10^(digits-1-exp10))
    let scale = digits as i64 - 1 - exp10;
    let (sn, sd) = if scale >= 0 {
        (&num * pow10(scale), den)
    } else {
        (num, &den * pow10(scale))
    };
    let (mut q, rem) = sn.div_rem(&sd);
    if (rem << 1usize) >= sd {
        q += 1;
    }
    // rounding may carry into a new decade (9.99 -> 10.0)
    if q.to_string().len() > digits {
        q /= 10;
        exp10 += 1;
    }
    let mantissa = q.to_string();
    debug_assert_eq!(mantissa.len(), digits);

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp10 >= -5 && exp10 < digits as i64 {
        if exp10 >= 0 {
            let int_len = exp10 as usize + 1;
            out.push_str(&mantissa[..int_len]);
            if int_len < digits {
                out.push('.');
                out.push_str(&mantissa[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(std::iter::repeat('0').take((-exp10 - 1) as usize));
            out.push_str(&mantissa);
        }
    } else {
        out.push_str(&mantissa[..1]);
        if digits > 1 {
            out.push('.');
            out.push_str(&mantissa[1..]);
        }
        out.push('e');
        out.push_str(&exp10.to_string());
    }
    out
}

/// Exact value of a finite decimal literal such as `-1.25e-3`.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let all_digits = format!("{int_part}{frac_part}");
    if all_digits.is_empty() || !all_digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let mut value = Rational::from_integer(all_digits.parse::<BigInt>().map_err(|_| bad())?);
    let e = exp - frac_part.len() as i64;
    let p = Rational::from_integer(num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize));
    if e >= 0 {
        value *= p;
    } else {
        value /= p;
    }
    Ok(if negative { -value } else { value })
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(r: &Rational) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
