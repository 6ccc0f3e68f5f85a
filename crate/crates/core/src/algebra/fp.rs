//! Prime fields `F_p` with the modulus fixed at compile time.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Scalar type of every polynomial in the crate: a prime field of small
/// characteristic.
pub trait PrimeField:
    Copy
    + Clone
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const CHARACTERISTIC: u32;

    fn from_i64(v: i64) -> Self;

    /// Canonical representative in `0..p`.
    fn value(self) -> u32;

    fn inverse(self) -> Option<Self>;

    /// `C(n, k)` reduced mod p (Lucas' theorem).
    fn binomial(n: u64, k: u64) -> Self {
        if k > n {
            return Self::zero();
        }
        let p = Self::CHARACTERISTIC as u64;
        let (mut n, mut k) = (n, k);
        let mut acc = Self::one();
        while n > 0 || k > 0 {
            let (nd, kd) = (n % p, k % p);
            if kd > nd {
                return Self::zero();
            }
            acc = acc * small_binomial::<Self>(nd, kd);
            n /= p;
            k /= p;
        }
        acc
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

fn small_binomial<F: PrimeField>(n: u64, k: u64) -> F {
    // n < p here, so the exact integer fits comfortably
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    F::from_i64((num / den % F::CHARACTERISTIC as u128) as i64)
}

pub const fn is_prime(n: u32) -> bool {
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

/// Element of `Z/PZ`. Instantiating with a composite `P` fails to compile.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const MODULUS: u32 = {
        assert!(is_prime(P), "Fp modulus must be prime");
        P
    };

    pub fn new(v: i64) -> Self {
        let m = Self::MODULUS as i64;
        Fp(v.rem_euclid(m) as u32)
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % Self::MODULUS)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + Self::MODULUS - rhs.0) % Self::MODULUS)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % Self::MODULUS as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((Self::MODULUS - self.0) % Self::MODULUS)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % Self::MODULUS)
    }
}

impl<const P: u32> PrimeField for Fp<P> {
    const CHARACTERISTIC: u32 = Self::MODULUS;

    fn from_i64(v: i64) -> Self {
        Self::new(v)
    }

    fn value(self) -> u32 {
        self.0
    }

    fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(PrimeField::pow(self, (Self::MODULUS - 2) as u64))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F3 = Fp<3>;
    type F5 = Fp<5>;

    #[test]
    fn arithmetic_wraps() {
        assert_eq!(F3::new(2) + F3::new(2), F3::new(1));
        assert_eq!(F3::new(0) - F3::new(1), F3::new(2));
        assert_eq!(-F5::new(0), F5::new(0));
        assert_eq!(F5::new(-7), F5::new(3));
    }

    #[test]
    fn inverses() {
        for v in 1..5 {
            let x = F5::new(v);
            assert_eq!(x * x.inverse().unwrap(), F5::one());
        }
        assert!(F5::zero().inverse().is_none());
    }

    #[test]
    fn binomials_mod_p() {
        // C(4,2) = 6 = 0 mod 3, C(9,3) = 84 = 0 mod 3, C(5,1) = 5 = 2 mod 3
        assert_eq!(F3::binomial(4, 2), F3::new(0));
        assert_eq!(F3::binomial(9, 3), F3::new(0));
        assert_eq!(F3::binomial(5, 1), F3::new(2));
        assert_eq!(F5::binomial(7, 2), F5::new(21));
        assert_eq!(F3::binomial(2, 5), F3::zero());
    }
}
