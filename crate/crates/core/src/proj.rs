//! Canonical representatives for integer projective triples.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Reduce a triple to its unique canonical primitive representative:
/// coordinates are divided by their gcd and the sign is fixed so that
/// the last coordinate is positive, falling back to the middle and then
/// the first when later coordinates vanish.
pub(crate) fn canonicalize(x: BigInt, y: BigInt, z: BigInt) -> Result<[BigInt; 3]> {
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return Err(Error::ZeroProjectivePoint);
    }
    let g = x.gcd(&y).gcd(&z);
    let (mut x, mut y, mut z) = (x / &g, y / &g, z / &g);
    let flip = if !z.is_zero() {
        z.is_negative()
    } else if !y.is_zero() {
        y.is_negative()
    } else {
        x.is_negative()
    };
    if flip {
        x = -x;
        y = -y;
        z = -z;
    }
    Ok([x, y, z])
}

/// Clear denominators of a rational triple and canonicalize.
pub(crate) fn clear_denominators(x: &Rational, y: &Rational, z: &Rational) -> Result<[BigInt; 3]> {
    let l = x.denom().lcm(y.denom()).lcm(z.denom());
    canonicalize(
        x.numer() * (&l / x.denom()),
        y.numer() * (&l / y.denom()),
        z.numer() * (&l / z.denom()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn canonical_sign_and_gcd() {
        assert_eq!(
            canonicalize(big(-432), big(1296), big(144)).unwrap(),
            [big(-3), big(9), big(1)]
        );
        assert_eq!(
            canonicalize(big(648), big(2592), big(-324)).unwrap(),
            [big(-2), big(-8), big(1)]
        );
        assert_eq!(
            canonicalize(big(0), big(-5), big(0)).unwrap(),
            [big(0), big(1), big(0)]
        );
        assert!(canonicalize(big(0), big(0), big(0)).is_err());
    }
}
