//! Scalar fields used by the exact linear algebra kernel.
//!
//! [`Q`] (arbitrary precision rationals) is the field everything is defined
//! over. [`GaussQ`] is its extension by `i`, needed when a torus of a real
//! form only diagonalizes after complexification. [`Fp`] is a word-sized
//! prime field used for fast modular pre-passes and cross-checks.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number.
pub type Q = BigRational;

pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    /// Image of a rational number. Panics if the denominator is not
    /// invertible in the field.
    fn from_rational(q: &Q) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Q::from_integer(BigInt::from(v)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self -= a * b`
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rational(q: &Q) -> Self {
        q.clone()
    }
    fn from_i64(v: i64) -> Self {
        Q::from_integer(BigInt::from(v))
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
}

/// Element `re + i·im` of the Gaussian rationals ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussQ {
    pub re: Q,
    pub im: Q,
}

impl GaussQ {
    pub fn new(re: Q, im: Q) -> Self {
        GaussQ { re, im }
    }

    pub fn i() -> Self {
        GaussQ::new(<Q as Zero>::zero(), <Q as One>::one())
    }

    pub fn conj(&self) -> Self {
        GaussQ::new(self.re.clone(), -&self.im)
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
}

impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Field for GaussQ {
    fn zero() -> Self {
        GaussQ::new(<Q as Zero>::zero(), <Q as Zero>::zero())
    }
    fn one() -> Self {
        GaussQ::new(<Q as One>::one(), <Q as Zero>::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        GaussQ::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        GaussQ::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        if Zero::is_zero(&self.im) && Zero::is_zero(&o.im) {
            return GaussQ::new(&self.re * &o.re, <Q as Zero>::zero());
        }
        GaussQ::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn neg(&self) -> Self {
        GaussQ::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Self {
        assert!(!Field::is_zero(self), "inverse of zero");
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussQ::new(&self.re / &norm, -&self.im / &norm)
    }
    fn from_rational(q: &Q) -> Self {
        GaussQ::new(q.clone(), <Q as Zero>::zero())
    }
}

/// Mersenne prime 2⁶¹ − 1.
pub const MERSENNE61: u64 = (1u64 << 61) - 1;

/// Element of the prime field ℤ/(2⁶¹−1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp(pub u64);

impl Fp {
    #[inline]
    fn reduce(x: u128) -> u64 {
        let p = MERSENNE61 as u128;
        let folded = (x & p) + (x >> 61);
        let folded = (folded & p) + (folded >> 61);
        let r = folded as u64;
        if r >= MERSENNE61 {
            r - MERSENNE61
        } else {
            r
        }
    }

    pub fn from_bigint(v: &BigInt) -> Fp {
        let m = BigInt::from(MERSENNE61);
        let r = v.mod_floor(&m);
        Fp(r.to_u64().expect("reduced value fits in u64"))
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    #[inline]
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= MERSENNE61 { s - MERSENNE61 } else { s })
    }
    #[inline]
    fn sub(&self, o: &Self) -> Self {
        Fp(if self.0 >= o.0 {
            self.0 - o.0
        } else {
            self.0 + MERSENNE61 - o.0
        })
    }
    #[inline]
    fn mul(&self, o: &Self) -> Self {
        Fp(Fp::reduce(self.0 as u128 * o.0 as u128))
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { MERSENNE61 - self.0 })
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(MERSENNE61 - 2)
    }
    fn from_rational(q: &Q) -> Self {
        let num = Fp::from_bigint(q.numer());
        let den = Fp::from_bigint(q.denom());
        assert!(den.0 != 0, "denominator vanishes modulo 2^61-1");
        num.mul(&den.inv())
    }
    fn from_i64(v: i64) -> Self {
        if v >= 0 {
            Fp(v as u64 % MERSENNE61)
        } else {
            Fp(v.unsigned_abs() % MERSENNE61).neg()
        }
    }
    #[inline]
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }
}

/// Small integer as a rational.
pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// The rational `n/d`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Q>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Absolute value bound `⌈|x|⌉` as an integer.
pub fn ceil_abs(x: &Q) -> BigInt {
    x.abs().ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_roundtrip() {
        for v in [1i64, 2, 3, 12345, -7, MERSENNE61 as i64 - 1] {
            let x = Fp::from_i64(v);
            assert_eq!(x.mul(&x.inv()), Fp(1));
        }
    }

    #[test]
    fn fp_from_rational_matches_division() {
        let x = Fp::from_rational(&qf(3, 7));
        assert_eq!(x.mul(&Fp::from_i64(7)), Fp::from_i64(3));
        let y = Fp::from_rational(&qf(-5, 4));
        assert_eq!(y.mul(&Fp::from_i64(4)), Fp::from_i64(-5));
    }

    #[test]
    fn gaussian_inverse() {
        let z = GaussQ::new(q(3), q(-4));
        let w = z.inv();
        assert_eq!(z.mul(&w), <GaussQ as Field>::one());
        assert_eq!(w, GaussQ::new(qf(3, 25), qf(4, 25)));
        assert_eq!(GaussQ::i().mul(&GaussQ::i()), GaussQ::from_i64(-1));
    }
}
