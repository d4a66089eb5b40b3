//! Parameter literals: `p/q` and integers are exact, anything else is a float.

use fhdet::BigRational;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Exact { text: String, value: BigRational },
    Real { text: String, value: f64 },
}

impl ParamValue {
    pub fn parse(s: &str) -> Result<Self, String> {
        let text = s.trim();
        if let Some((p, q)) = text.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
            let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            return Ok(ParamValue::Exact { text: text.to_string(), value: BigRational::new(p, q) });
        }
        if let Ok(p) = text.parse::<BigInt>() {
            return Ok(ParamValue::Exact { text: text.to_string(), value: BigRational::from_integer(p) });
        }
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() && decimal_to_rational(text).is_some() => {
                Ok(ParamValue::Real { text: text.to_string(), value: v })
            }
            _ => Err(format!("`{s}` is neither a rational p/q nor a finite decimal")),
        }
    }

    pub fn text(&self) -> &str {
        match self {
            ParamValue::Exact { text, .. } | ParamValue::Real { text, .. } => text,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ParamValue::Exact { .. })
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ParamValue::Exact { value, .. } => fhdet::determinants::rational_to_f64(value),
            ParamValue::Real { value, .. } => *value,
        }
    }

    /// The literal's exact value; decimals are read in base ten.
    fn exact_value(&self) -> BigRational {
        match self {
            ParamValue::Exact { value, .. } => value.clone(),
            ParamValue::Real { text, .. } => decimal_to_rational(text).expect("validated on parse"),
        }
    }
}

/// Exact value of a decimal literal such as `-1.25` or `3e-2`.
fn decimal_to_rational(s: &str) -> Option<BigRational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
        return None;
    }
    let whole: BigInt = format!("0{int}{frac}").parse().ok()?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(whole);
    if shift >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, shift as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-shift) as usize));
    }
    Some(if neg { -r } else { r })
}

/// Decimal text of an exact value known to have a terminating expansion.
fn rational_to_decimal(r: &BigRational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let scaled = (r * BigRational::from_integer(scale.clone())).to_integer();
    let (neg, mag) = (scaled.is_negative(), scaled.abs());
    let digits = format!("{:0>width$}", mag, width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    let frac = frac.trim_end_matches('0');
    let body = if frac.is_empty() { int.to_string() } else { format!("{int}.{frac}") };
    if neg && !mag.is_zero() { format!("-{body}") } else { body }
}

/// Decimal places needed to write `r` exactly, if it terminates within 40.
fn decimal_places(r: &BigRational) -> Option<usize> {
    (0..=40).find(|&d| (r * BigRational::from_integer(num_traits::pow(BigInt::from(10), d))).is_integer())
}

/// Grid `a:b:step`, inclusive of `b` when it is hit exactly.
///
/// Exact endpoints give exact grid points. If any part is a decimal the grid
/// is built in exact base-ten arithmetic and each point becomes a decimal.
pub fn parse_range(s: &str) -> Result<Vec<ParamValue>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, step] = parts[..] else {
        return Err(format!("range `{s}` must look like start:stop:step"));
    };
    let (a, b, step) = (ParamValue::parse(a)?, ParamValue::parse(b)?, ParamValue::parse(step)?);
    let exact = a.is_exact() && b.is_exact() && step.is_exact();
    let (a, b, step) = (a.exact_value(), b.exact_value(), step.exact_value());
    if step.is_zero() {
        return Err(format!("range `{s}` has a zero step"));
    }
    let span = (&b - &a) / &step;
    if span.is_negative() {
        return Err(format!("range `{s}` steps away from its end point"));
    }
    let count = span.floor().to_integer().to_usize().ok_or_else(|| format!("range `{s}` is too long"))? + 1;
    if count > 10_000_000 {
        return Err(format!("range `{s}` is too long"));
    }
    let places = [&a, &step].iter().filter_map(|r| decimal_places(r)).max().unwrap_or(0);
    (0..count)
        .map(|i| {
            let v = &a + &step * BigRational::from_integer(i.into());
            if exact {
                Ok(ParamValue::Exact { text: v.to_string(), value: v })
            } else {
                ParamValue::parse(&rational_to_decimal(&v, places))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(v: &[ParamValue]) -> Vec<&str> {
        v.iter().map(ParamValue::text).collect()
    }

    #[test]
    fn literals() {
        assert!(ParamValue::parse("1/2").unwrap().is_exact());
        assert!(ParamValue::parse("-3").unwrap().is_exact());
        assert!(!ParamValue::parse("0.5").unwrap().is_exact());
        assert_eq!(ParamValue::parse("-1/2").unwrap().to_f64(), -0.5);
        assert_eq!(ParamValue::parse("2/4").unwrap().text(), "2/4");
        for bad in ["1/0", "x", "inf", "NaN", "1/2/3", "", "."] {
            assert!(ParamValue::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn decimals_are_read_exactly() {
        let r = decimal_to_rational("-1.25e1").unwrap();
        assert_eq!(r, BigRational::new((-25).into(), 2.into()));
        assert_eq!(decimal_to_rational(".5").unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(rational_to_decimal(&BigRational::new((-3).into(), 10.into()), 1), "-0.3");
    }

    #[test]
    fn ranges() {
        assert_eq!(texts(&parse_range("0:2:0.5").unwrap()), ["0", "0.5", "1", "1.5", "2"]);
        assert_eq!(texts(&parse_range("0:1:0.1").unwrap())[3], "0.3");
        assert_eq!(texts(&parse_range("-1:1:1/2").unwrap()), ["-1", "-1/2", "0", "1/2", "1"]);
        assert_eq!(texts(&parse_range("1:0:-1/2").unwrap()), ["1", "1/2", "0"]);
        assert_eq!(parse_range("0:1:0.3").unwrap().len(), 4);
        assert!(parse_range("0:1:0").is_err());
        assert!(parse_range("0:1:-1").is_err());
        assert!(parse_range("0:1").is_err());
    }
}
