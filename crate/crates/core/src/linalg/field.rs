//! Arithmetic in the prime field 𝔽_p.
//!
//! The modulus is process-wide. It defaults to [`DEFAULT_PRIME`] and may be
//! changed with [`set_prime`] before any field element is created; values
//! built under one modulus are meaningless under another.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU32, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;

static PRIME: AtomicU32 = AtomicU32::new(DEFAULT_PRIME);

/// The current modulus.
#[inline]
pub fn prime() -> u32 {
    PRIME.load(Ordering::Relaxed)
}

/// Sets the process-wide modulus. Must happen before any computation.
pub fn set_prime(p: u64) -> Result<()> {
    if p >= 1 << 31 || !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    PRIME.store(p as u32, Ordering::Relaxed);
    Ok(())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of 𝔽_p, stored as its residue in `[0, p)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(u32);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    /// Reduces an arbitrary integer modulo p.
    pub fn new(v: i64) -> Fp {
        let p = prime() as i64;
        Fp(v.rem_euclid(p) as u32)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self) -> Option<Fp> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(prime() as u64 - 2))
        }
    }

    /// The representative in `(-p/2, p/2]`, handy for printing.
    pub fn signed(self) -> i64 {
        let p = prime() as i64;
        let v = self.0 as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }
}

impl From<u32> for Fp {
    fn from(v: u32) -> Fp {
        Fp(v % prime())
    }
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        let s = self.0 as u64 + rhs.0 as u64;
        let p = prime() as u64;
        Fp(if s >= p { s - p } else { s } as u32)
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp((self.0 as u64 + prime() as u64 - rhs.0 as u64) as u32)
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        Fp(((self.0 as u64 * rhs.0 as u64) % prime() as u64) as u32)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(prime() - self.0)
        }
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
