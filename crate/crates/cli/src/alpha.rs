//! Parsing of complex correlation strengths.
//!
//! Accepted forms: a plain real (`0.1`), rectangular (`0.1+0.2i`,
//! `-0.05-0.1i`), pure imaginary (`0.1i`, `-i`) and polar (`0.1@1.5708`,
//! angle in radians).

use num_complex::Complex64;

pub fn parse_alpha(input: &str) -> Result<Complex64, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty value".into());
    }
    let value = if let Some((m, theta)) = s.split_once('@') {
        Complex64::from_polar(real(m)?, real(theta)?)
    } else if let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) {
        // The last sign that is not part of an exponent splits re and im.
        match split_point(body) {
            Some(k) => Complex64::new(real(&body[..k])?, imag_coefficient(&body[k..])?),
            None => Complex64::new(0.0, imag_coefficient(body)?),
        }
    } else {
        Complex64::new(real(&s)?, 0.0)
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(format!("`{input}` is not finite"))
    }
}

fn split_point(body: &str) -> Option<usize> {
    let bytes = body.as_bytes();
    (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
}

fn imag_coefficient(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => real(s),
    }
}

fn real(s: &str) -> Result<f64, String> {
    s.parse::<f64>().map_err(|_| format!("cannot read `{s}` as a number"))
}
