//! Gaussian-rational scalars p + q·i.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::coeff::{fmt_rational, Rational};

pub type Scalar = Complex<Rational>;

pub fn int(n: i64) -> Scalar {
    Scalar::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(crate::coeff::rat(n, d), Rational::zero())
}

/// The Gaussian integer re + im·i.
pub fn gi(re: i64, im: i64) -> Scalar {
    Scalar::new(
        Rational::from_integer(BigInt::from(re)),
        Rational::from_integer(BigInt::from(im)),
    )
}

/// i^k for any integer k.
pub fn i_pow(k: i64) -> Scalar {
    match k.rem_euclid(4) {
        0 => gi(1, 0),
        1 => gi(0, 1),
        2 => gi(-1, 0),
        _ => gi(0, -1),
    }
}

pub fn fmt_scalar(z: &Scalar) -> String {
    let (re, im) = (&z.re, &z.im);
    let imag = |q: &Rational| -> String {
        if q.is_one() {
            "i".to_string()
        } else if (-q).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rational(q))
        }
    };
    match (re.is_zero(), im.is_zero()) {
        (_, true) => fmt_rational(re),
        (true, false) => imag(im),
        (false, false) => {
            if im.is_negative() {
                format!("{} - {}", fmt_rational(re), imag(&-im))
            } else {
                format!("{} + {}", fmt_rational(re), imag(im))
            }
        }
    }
}

/// Parse `r`, `r*i`, `i`, `-i`, `r + s*i`, `r - s*i` with rational r, s.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    // split at the last sign that is not leading
    let split = s
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (first, second) = match split {
        Some(k) => (&s[..k], Some(&s[k..])),
        None => (s.as_str(), None),
    };
    let mut acc = Scalar::zero();
    for part in std::iter::once(first).chain(second) {
        acc += parse_term(part)?;
    }
    Some(acc)
}

fn parse_term(t: &str) -> Option<Scalar> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (coeff, imaginary) = if body == "i" {
        ("1", true)
    } else if let Some(c) = body.strip_suffix("*i") {
        (c, true)
    } else if let Some(c) = body.strip_suffix('i') {
        (c, true)
    } else {
        (body, false)
    };
    let q = parse_rational(coeff)?;
    let q = if neg { -q } else { q };
    Some(if imaginary {
        Scalar::new(Rational::zero(), q)
    } else {
        Scalar::new(q, Rational::zero())
    })
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}
