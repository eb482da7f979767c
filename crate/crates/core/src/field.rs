//! Arithmetic in the prime field `F_p`.
//!
//! Scalars are plain `u64` residues in `0..p`. The modulus travels with the
//! containers (matrices, algebras) rather than with each scalar.

use crate::error::{Error, Result};

/// Largest modulus accepted, so that a product of two residues fits in `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

/// Default workbench prime.
pub const DEFAULT_PRIME: u64 = 1009;

pub fn is_prime(p: u64) -> bool {
  if p < 2 {
    return false;
  }
  let mut d = 2;
  while d * d <= p {
    if p.is_multiple_of(d) {
      return false;
    }
    d += 1;
  }
  true
}

/// Checks that `p` is a usable modulus.
pub fn check_prime(p: u64) -> Result<()> {
  if !is_prime(p) || p >= MAX_PRIME {
    return Err(Error::Config(format!("{p} is not a prime below 2^31")));
  }
  Ok(())
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
  let s = a + b;
  if s >= p {
    s - p
  } else {
    s
  }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
  if a >= b {
    a - b
  } else {
    a + p - b
  }
}

#[inline]
pub fn neg(a: u64, p: u64) -> u64 {
  if a == 0 {
    0
  } else {
    p - a
  }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
  a * b % p
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
  let mut r = 1 % p;
  a %= p;
  while e > 0 {
    if e & 1 == 1 {
      r = mul(r, a, p);
    }
    a = mul(a, a, p);
    e >>= 1;
  }
  r
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv(a: u64, p: u64) -> u64 {
  assert!(!a.is_multiple_of(p), "inverse of zero");
  pow(a, p - 2, p)
}

/// Reduces a signed integer into `0..p`.
pub fn from_i64(v: i64, p: u64) -> u64 {
  let m = v.rem_euclid(p as i64);
  m as u64
}

/// Symmetric representative in `(-p/2, p/2]`, used for readable output.
pub fn to_i64(a: u64, p: u64) -> i64 {
  if a > p / 2 {
    a as i64 - p as i64
  } else {
    a as i64
  }
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn inverse_roundtrip() {
    let p = 1009;
    for a in 1..p {
      assert_eq!(mul(a, inv(a, p), p), 1);
    }
  }

  #[test]
  fn primes() {
    assert!(is_prime(1009));
    assert!(!is_prime(1001));
    assert!(check_prime(4).is_err());
  }

  #[test]
  fn signed_conversions() {
    assert_eq!(from_i64(-1, 7), 6);
    assert_eq!(to_i64(6, 7), -1);
    assert_eq!(to_i64(3, 7), 3);
  }
}
