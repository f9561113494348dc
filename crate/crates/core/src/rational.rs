//! Exact rational helpers: construction, `num/den` text form and
//! half-to-even decimal rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Always `num/den`, also for integers.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den` or a bare integer.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Rounds to `places` decimals, ties to even, and renders as text.
pub fn to_decimal(r: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = r * Rational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_mod_floor(scaled.denom());
    // rem / denom in [0, 1)
    let twice = &rem * 2;
    let den = scaled.denom();
    let rounded = if twice > *den || (twice == *den && q.is_odd()) {
        q + BigInt::one()
    } else {
        q
    };
    let negative = rounded.is_negative();
    let digits = rounded.abs().to_string();
    let places = places as usize;
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (whole, frac_part) = padded.split_at(padded.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac_part}")
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    // numerators here stay far below the f64 exponent range
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

pub(crate) mod serde_fraction {
    use super::*;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_fraction_string(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_text_round_trip() {
        let r = frac(-6, 4);
        assert_eq!(to_fraction_string(&r), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(r));
        assert_eq!(parse_rational(" 12 "), Some(int(12)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(to_fraction_string(&int(7)), "7/1");
    }

    #[test]
    fn half_even_rounding() {
        assert_eq!(to_decimal(&frac(1, 8), 2), "0.12");
        assert_eq!(to_decimal(&frac(3, 8), 2), "0.38");
        assert_eq!(to_decimal(&frac(1, 3), 5), "0.33333");
        assert_eq!(to_decimal(&frac(2, 3), 5), "0.66667");
        assert_eq!(to_decimal(&frac(456_883, 918_298), 5), "0.49753");
        assert_eq!(to_decimal(&int(1), 5), "1.00000");
        assert_eq!(to_decimal(&frac(-1, 200), 2), "0.00");
        assert_eq!(to_decimal(&frac(-3, 200), 2), "-0.02");
        assert_eq!(to_decimal(&frac(5, 2), 0), "2");
    }
}
