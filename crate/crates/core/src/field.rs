//! Exact coefficient arithmetic: rationals and prime fields GF(p), p < 2^31.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The coefficient field of a run: the rationals, or GF(p) for a prime p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub fn zero(&self) -> Coefficient {
        match self {
            FieldSpec::Rational => Coefficient::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Coefficient::Prime {
                value: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(&self) -> Coefficient {
        match self {
            FieldSpec::Rational => Coefficient::Rational(BigRational::one()),
            FieldSpec::Prime(p) => Coefficient::Prime {
                value: 1,
                modulus: *p,
            },
        }
    }

    /// Embeds a signed integer.
    pub fn from_i64(&self, n: i64) -> Coefficient {
        match self {
            FieldSpec::Rational => Coefficient::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p64 = *p as i64;
                let mut v = n % p64;
                if v < 0 {
                    v += p64;
                }
                Coefficient::Prime {
                    value: v as u64,
                    modulus: *p,
                }
            }
        }
    }
}

/// An element of the active coefficient field.
///
/// Prime-field values are kept reduced to `[0, p)`; rational values are kept
/// in lowest terms by `BigRational` itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Prime { value: u64, modulus: u32 },
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Prime { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Coefficient::Rational(_) => FieldSpec::Rational,
            Coefficient::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (
                Coefficient::Prime {
                    value: a,
                    modulus: p,
                },
                Coefficient::Prime {
                    value: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed prime fields");
                Coefficient::Prime {
                    value: (a + b) % (*p as u64),
                    modulus: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Prime { value, modulus } => {
                let v = if *value == 0 {
                    0
                } else {
                    *modulus as u64 - *value
                };
                Coefficient::Prime {
                    value: v,
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (
                Coefficient::Prime {
                    value: a,
                    modulus: p,
                },
                Coefficient::Prime {
                    value: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed prime fields");
                Coefficient::Prime {
                    value: (a * b) % (*p as u64),
                    modulus: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Coefficient::Rational(a.recip())
            }
            Coefficient::Prime { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                Coefficient::Prime {
                    value: mod_inverse(*value, *modulus as u64),
                    modulus: *modulus,
                }
            }
        }
    }

    pub fn div(&self, other: &Coefficient) -> Coefficient {
        self.mul(&other.inv())
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Prime { value, .. } => write!(f, "{}", value),
        }
    }
}

/// Returns true when the rational coefficient is negative (used for printing).
pub fn is_negative(c: &Coefficient) -> bool {
    match c {
        Coefficient::Rational(r) => r.is_negative(),
        Coefficient::Prime { .. } => false,
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p is prime and a != 0 mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "modulus not prime or value not invertible");
    let mut s = s0 % p as i128;
    if s < 0 {
        s += p as i128;
    }
    s as u64
}

/// Simple deterministic primality test, sufficient for moduli below 2^31.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: FieldSpec = FieldSpec::Prime(32003);

    #[test]
    fn prime_field_arithmetic() {
        let a = F.from_i64(-1);
        assert_eq!(a, F.from_i64(32002));
        let b = F.from_i64(12345);
        assert!(b.mul(&b.inv()).is_one());
        assert!(a.add(&F.one()).is_zero());
    }

    #[test]
    fn rational_arithmetic() {
        let q = FieldSpec::Rational;
        let half = q.from_i64(1).div(&q.from_i64(2));
        assert_eq!(half.add(&half), q.one());
        assert_eq!(format!("{}", half), "1/2");
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
        assert!(!is_prime(1));
    }

    #[test]
    #[should_panic(expected = "inverse of zero")]
    fn zero_has_no_inverse() {
        F.zero().inv();
    }
}
