//! Exact rational arithmetic.
//!
//! [`Rational`] is an arbitrary-precision rational kept in canonical reduced
//! form: the denominator is positive, numerator and denominator are coprime,
//! and equality is structural. Every quantity in this crate is a `Rational`
//! or an integer; nothing is ever rounded. The module also provides the two
//! square-root primitives the rest of the crate is built on: a floor integer
//! square root with an exactness flag, and an exact rational square root that
//! reports when no rational root exists.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number in canonical reduced form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Canonical form of `numerator / denominator`: reduced, with the sign
    /// carried by the numerator.
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Rational {
        Rational(&self.0 * &self.0)
    }

    /// Multiplicative inverse; zero has none.
    pub fn recip(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Small nonnegative integer power.
    pub fn powu(&self, exp: u32) -> Rational {
        let mut acc = BigRational::one();
        for _ in 0..exp {
            acc *= &self.0;
        }
        Rational(acc)
    }

    /// Exact square root: `Some(r)` with `r >= 0` and `r*r == self` when both
    /// numerator and denominator are perfect squares, `None` when the root is
    /// irrational. Negative input is a domain error.
    pub fn sqrt(&self) -> Result<Option<Rational>> {
        if self.is_negative() {
            return Err(Error::NegativeSquareRoot(Box::new(self.clone())));
        }
        let (root_n, exact_n) = integer_sqrt(self.numer().magnitude());
        if !exact_n {
            return Ok(None);
        }
        let (root_d, exact_d) = integer_sqrt(self.denom().magnitude());
        if !exact_d {
            return Ok(None);
        }
        // numerator and denominator are coprime, so their roots are too
        Ok(Some(Rational(BigRational::new_raw(
            BigInt::from(root_n),
            BigInt::from(root_d),
        ))))
    }

    /// Decimal approximation, for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

/// Floor integer square root with an exactness flag: returns `(r, exact)`
/// with `r = floor(sqrt(n))` and `exact` set iff `r*r == n`.
///
/// Newton iteration on big integers, seeded with a power of two at least
/// `sqrt(n)`; exactness is decided by one final multiplication.
pub fn integer_sqrt(n: &BigUint) -> (BigUint, bool) {
    if n.is_zero() {
        return (BigUint::zero(), true);
    }
    let mut x = BigUint::one() << ((n.bits() as usize).div_ceil(2));
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    let exact = &x * &x == *n;
    (x, exact)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $imp<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $imp<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $imp<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

impl fmt::Display for Rational {
    /// `p/q`, or just `p` when the denominator is one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses the grammar `-?[0-9]+(/[0-9]+)?`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational literal '{s}'"));
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = numer.strip_prefix('-').unwrap_or(numer);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: BigInt = numer.parse().map_err(|_| bad())?;
        let d: BigInt = match denom {
            None => BigInt::one(),
            Some(ds) => {
                if ds.is_empty() || !ds.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                ds.parse().map_err(|_| bad())?
            }
        };
        if d.is_zero() {
            return Err(Error::Parse(format!(
                "invalid rational literal '{s}': zero denominator"
            )));
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_reduces() {
        assert_eq!(Rational::new(2.into(), 4.into()).unwrap(), rat("1/2"));
        assert_eq!(Rational::new(3.into(), (-6).into()).unwrap(), rat("-1/2"));
        assert_eq!(Rational::new(0.into(), 7.into()).unwrap(), rat("0"));
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        assert!(matches!(
            Rational::new(1.into(), 0.into()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn integer_sqrt_examples() {
        assert_eq!(integer_sqrt(&0u32.into()), (0u32.into(), true));
        assert_eq!(integer_sqrt(&1296u32.into()), (36u32.into(), true));
        assert_eq!(integer_sqrt(&2u32.into()), (1u32.into(), false));
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(rat("9/4").sqrt().unwrap(), Some(rat("3/2")));
        assert_eq!(rat("2").sqrt().unwrap(), None);
        assert_eq!(rat("0").sqrt().unwrap(), Some(rat("0")));
        // the worked example's first pairwise distance, squared and recovered
        let d = rat("1555297/65142");
        assert_eq!(d.square().sqrt().unwrap(), Some(d));
        assert!(matches!(
            rat("-1/4").sqrt(),
            Err(Error::NegativeSquareRoot(_))
        ));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "-1/2", "34040/3619", "12", "-7"] {
            assert_eq!(rat(s).to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/", "/2", "1/0", "1/-2", "+3", "a", "1.5", "1 /2", "−1"] {
            assert!(s.parse::<Rational>().is_err(), "accepted {s:?}");
        }
    }

    proptest! {
        #[test]
        fn normalize_scaling_invariant(n in -1000i64..1000, d in 1i64..1000, k in 1i64..50) {
            let base = Rational::new(n.into(), d.into()).unwrap();
            for k in [k, -k] {
                let scaled = Rational::new((n * k).into(), (d * k).into()).unwrap();
                prop_assert_eq!(&scaled, &base);
            }
        }

        #[test]
        fn sqrt_of_square_is_abs(n in -1000i64..1000, d in 1i64..1000) {
            let r = Rational::new(n.into(), d.into()).unwrap();
            prop_assert_eq!(r.square().sqrt().unwrap(), Some(r.abs()));
        }

        #[test]
        fn integer_sqrt_brackets(n in 0u128..u128::MAX) {
            let n = BigUint::from(n);
            let (root, exact) = integer_sqrt(&n);
            prop_assert!(&root * &root <= n);
            let next = &root + 1u32;
            prop_assert!(&next * &next > n);
            prop_assert_eq!(exact, &root * &root == n);
        }

        #[test]
        fn integer_sqrt_monotone(a in 0u64..u64::MAX, b in 0u64..u64::MAX) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let (rl, _) = integer_sqrt(&lo.into());
            let (rh, _) = integer_sqrt(&hi.into());
            prop_assert!(rl <= rh);
        }
    }
}
