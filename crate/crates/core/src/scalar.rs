//! Exact rational scalars.
//!
//! Every coefficient in the library is an arbitrary-precision rational;
//! there is no floating point anywhere. Scalars serialize as `p` or `p/q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn from_i64(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p` or `p/q` with arbitrary-precision parts. Rejects a zero
/// denominator instead of panicking.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = |msg: &str| Error::Parse {
        line: 0,
        msg: format!("{msg}: {text:?}"),
    };
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| bad("malformed rational"))?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| bad("malformed rational"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Scalar::new(num, den))
}

/// `q^k` for a signed exponent; `q` must be non-zero when `k < 0`.
pub fn pow_i(q: &Scalar, k: i64) -> Result<Scalar> {
    if k >= 0 {
        let mut acc = one();
        for _ in 0..k {
            acc *= q;
        }
        Ok(acc)
    } else {
        if q.is_zero() {
            return Err(Error::Domain("negative power of zero".into()));
        }
        let mut acc = one();
        let inv = q.recip();
        for _ in 0..(-k) {
            acc *= &inv;
        }
        Ok(acc)
    }
}

/// Canonical textual form, `p` or `p/q` with positive denominator.
pub fn scalar_str(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// True when the scalar is negative; used by pretty-printers.
pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_basic_forms() {
        assert_eq!(parse_scalar("3").unwrap(), from_i64(3));
        assert_eq!(parse_scalar("-7/2").unwrap(), ratio(-7, 2));
        assert_eq!(parse_scalar("4/6").unwrap(), ratio(2, 3));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn signed_powers() {
        let q = ratio(1, 3);
        assert_eq!(pow_i(&q, 2).unwrap(), ratio(1, 9));
        assert_eq!(pow_i(&q, -2).unwrap(), from_i64(9));
        assert!(pow_i(&zero(), -1).is_err());
    }

    proptest! {
        // Textual form round-trips bit-exactly.
        #[test]
        fn text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let s = ratio(n, d);
            let back = parse_scalar(&scalar_str(&s)).unwrap();
            prop_assert_eq!(s, back);
        }
    }
}
