//! Record types and their JSON / CSV encodings.

use std::io::Write;

use fhdet::LogValue;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// Largest `|ln x|` whose value is written out as a plain number.
pub const REPRESENTABLE_LOGMAG: f64 = 700.0;

/// A float rounded to 17 significant digits, positional for moderate
/// exponents and scientific otherwise.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };
    let body = if (-5..17).contains(&exp) {
        if exp < 0 {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        } else {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                format!("{}{}", digits, "0".repeat(int_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..int_len], &digits[int_len..])
            }
        }
    } else if digits.len() == 1 {
        format!("{digits}e{exp}")
    } else {
        format!("{}.{}e{}", &digits[..1], &digits[1..], exp)
    };
    if neg { format!("-{body}") } else { body }
}

fn raw_number<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => RawValue::from_string(fmt17(*v)).map_err(serde::ser::Error::custom)?.serialize(s),
        None => s.serialize_none(),
    }
}

/// `+1`, `-1`, `0`, or the string `error` for a failed grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SignField {
    Value(i8),
    Error,
}

impl Serialize for SignField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SignField::Value(v) => s.serialize_i8(*v),
            SignField::Error => s.serialize_str("error"),
        }
    }
}

impl SignField {
    fn csv(&self) -> String {
        match self {
            SignField::Value(v) => v.to_string(),
            SignField::Error => "error".to_string(),
        }
    }
}

/// One determinant evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub n: usize,
    pub alpha: String,
    pub beta: String,
    pub method: String,
    pub sign: SignField,
    /// `null` for an exact zero and for errors.
    #[serde(serialize_with = "raw_number")]
    pub logmag: Option<f64>,
    pub value_if_representable: Option<String>,
    pub elapsed_microseconds: Option<u64>,
}

pub const CSV_HEADER: [&str; 8] = ["n", "alpha", "beta", "method", "sign", "logmag", "value", "elapsed_us"];

impl OutputRecord {
    pub fn new(n: usize, alpha: &str, beta: &str, method: &str, value: Result<LogValue, ()>) -> Self {
        let (sign, logmag, shown) = match value {
            Err(()) => (SignField::Error, None, None),
            Ok(v) if v.is_zero() => (SignField::Value(0), None, Some("0".to_string())),
            Ok(v) => {
                let shown = (v.logmag().abs() <= REPRESENTABLE_LOGMAG).then(|| fmt17(v.to_real()));
                (SignField::Value(v.sign()), Some(v.logmag()), shown)
            }
        };
        OutputRecord {
            n,
            alpha: alpha.to_string(),
            beta: beta.to_string(),
            method: method.to_string(),
            sign,
            logmag,
            value_if_representable: shown,
            elapsed_microseconds: None,
        }
    }

    pub fn csv_row(&self) -> [String; 8] {
        [
            self.n.to_string(),
            self.alpha.clone(),
            self.beta.clone(),
            self.method.clone(),
            self.sign.csv(),
            self.logmag.map(fmt17).unwrap_or_default(),
            self.value_if_representable.clone().unwrap_or_default(),
            self.elapsed_microseconds.map(|t| t.to_string()).unwrap_or_default(),
        ]
    }
}

/// One Fourier coefficient.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffRecord {
    pub k: i64,
    pub alpha: String,
    pub beta: String,
    #[serde(serialize_with = "raw_number")]
    pub coefficient: Option<f64>,
}

impl CoeffRecord {
    pub fn csv_row(&self) -> [String; 4] {
        [self.k.to_string(), self.alpha.clone(), self.beta.clone(), self.coefficient.map(fmt17).unwrap_or_default()]
    }
}

pub fn write_json<T: Serialize, W: Write>(out: &mut W, records: &[T]) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, records)?;
    writeln!(out)
}

pub fn write_csv<W: Write, const N: usize>(
    out: W,
    header: [&str; N],
    rows: impl IntoIterator<Item = [String; N]>,
) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()
}
