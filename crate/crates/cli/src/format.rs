//! JSON output with every float written as C's `%.17g`.
//!
//! Seventeen significant digits always round-trip an IEEE double exactly.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, Serializer};

/// `%.17g`: 17 significant digits, trailing zeros trimmed, exponent form
/// when the decimal exponent is below −4 or at least 17.
pub fn g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("`{:e}` always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();

    if (-4..17).contains(&exp) {
        let body = if exp >= 0 {
            let split = exp as usize + 1;
            format!("{}.{}", &digits[..split], &digits[split..])
        } else {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        };
        format!("{sign}{}", trim_fraction(&body))
    } else {
        let body = format!("{}.{}", &digits[..1], &digits[1..]);
        let body = trim_fraction(&body);
        let exp_sign = if exp < 0 { '-' } else { '+' };
        format!("{sign}{body}e{exp_sign}{:02}", exp.abs())
    }
}

fn trim_fraction(s: &str) -> &str {
    s.trim_end_matches('0').trim_end_matches('.')
}

/// `serde_json` formatter that writes floats through [`g17`].
#[derive(Debug, Default, Clone, Copy)]
pub struct G17Formatter;

impl Formatter for G17Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(g17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        writer.write_all(g17(value as f64).as_bytes())
    }
}

/// Serializes `value` as one JSON line (newline included).
pub fn to_line<T: Serialize>(value: &T) -> Vec<u8> {
    let mut buf = Vec::with_capacity(256);
    let mut ser = Serializer::with_formatter(&mut buf, G17Formatter);
    value
        .serialize(&mut ser)
        .expect("serializing to memory cannot fail");
    buf.push(b'\n');
    buf
}
