//! Logarithms of exact rationals.
//!
//! Everything upstream of these functions is exact; the only rounding is the
//! final `f64` logarithm, evaluated as `ln_1p` near 1 and by exponent
//! splitting for very large numerators or denominators.

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::Rational;

fn ln_bigint(x: &BigInt) -> f64 {
    debug_assert!(x.is_positive());
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().expect("fits in f64").ln()
    } else {
        let shift = bits - 64;
        let top: BigInt = x >> shift;
        top.to_f64().expect("64-bit value").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Natural logarithm of a positive rational.
pub fn ln_rational(r: &Rational) -> f64 {
    assert!(r.is_positive(), "logarithm of a non-positive rational");
    let d = r - Rational::one();
    if d.abs() * Rational::from_integer(2.into()) < Rational::one() {
        return d.to_f64().expect("bounded value").ln_1p();
    }
    ln_bigint(r.numer()) - ln_bigint(r.denom())
}

/// `x * log_base(x)` with the convention `0 log 0 = 0`, for a base in `(0, 1)`.
pub fn x_log_base(x: &Rational, ln_base: f64) -> f64 {
    if x.is_zero() {
        0.0
    } else {
        x.to_f64().expect("bounded value") * ln_rational(x) / ln_base
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn logs_of_small_rationals() {
        assert_eq!(ln_rational(&q(1, 1)), 0.0);
        assert!((ln_rational(&q(1, 3)) + 3f64.ln()).abs() < 1e-15);
        assert!((ln_rational(&q(5, 8)) - (0.625f64).ln()).abs() < 1e-15);
        assert!((ln_rational(&q(7, 2)) - 3.5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn logs_near_one_keep_relative_accuracy() {
        let big = BigInt::from(10).pow(30);
        let r = Rational::new(&big + 1, big);
        assert!((ln_rational(&r) - 1e-30).abs() < 1e-44);
    }

    #[test]
    fn logs_of_huge_values() {
        let r = Rational::new(BigInt::from(2).pow(3000), BigInt::one());
        assert!((ln_rational(&r) - 3000.0 * std::f64::consts::LN_2).abs() < 1e-9);
        assert!((ln_rational(&r.recip()) + 3000.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }
}
