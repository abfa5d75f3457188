//! Exact arbitrary-precision rational arithmetic plus the integer
//! combinatorics (binomial coefficients, lcm, powers) that every
//! evaluation strategy is built on.
//!
//! All rationals are kept reduced with a positive denominator at all
//! times, so equality is plain structural equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

pub use num_bigint::BigInt;

use crate::error::Error;

/// A reduced fraction of arbitrary-precision integers.
///
/// Invariants: denominator > 0 and gcd(|numerator|, denominator) = 1.
/// Every constructor and operation re-establishes them, so two values
/// compare equal exactly when they are the same rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Builds `numer / denom`, reduced and sign-normalized.
    ///
    /// Panics if `denom` is zero; fallible entry points (parsing, the
    /// Python bindings) reject a zero denominator before calling this.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        ExactRational(BigRational::new(numer, denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    /// 1/n for n >= 1, the weight in front of every summand.
    pub fn unit_fraction(n: u32) -> Self {
        ExactRational(BigRational::new(BigInt::one(), BigInt::from(n)))
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// Exact reciprocal; the only rational without one is zero.
    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroReciprocal);
        }
        Ok(ExactRational(self.0.recip()))
    }

    /// Nearest binary64 value (round to nearest, ties to even).
    /// Values beyond binary64 range come back as +/-infinity.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The exact rational value of a finite float. Every finite binary64
    /// is a dyadic rational, so nothing is lost. None for NaN/infinite.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(ExactRational)
    }

    /// Canonical machine text form "p/q", q > 0, reduced. Integers keep
    /// their "/1" here; `Display` drops it for human output.
    pub fn canonical(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }

        impl<'a> $imp<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl fmt::Display for ExactRational {
    /// Human form: "p/q", or bare "p" when the value is an integer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    // canonical form; the derived impl would dump limbs
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical())
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Parses "p/q" or "p" (decimal, optional leading sign), reducing
    /// and sign-normalizing whatever comes in.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |_| Error::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.parse().map_err(bad)?;
                let den: BigInt = den.parse().map_err(bad)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(ExactRational::new(num, den))
            }
            None => Ok(ExactRational::from_integer(s.parse::<BigInt>().map_err(bad)?)),
        }
    }
}

/// Binomial coefficient C(n, k), exactly. Out-of-range k yields 0 so
/// summation loops stay uniform. The multiplicative formula divides at
/// every step, and each step divides exactly.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// lcm(1..=n). Panics if n = 0; the callers all validate n >= 1 first.
pub fn lcm_up_to(n: u32) -> BigInt {
    assert!(n >= 1, "lcm_up_to requires n >= 1");
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc = acc.lcm(&BigInt::from(i));
    }
    acc
}

/// Exact integer power, with 0^0 = 1 so the function is total.
pub fn int_pow(base: &BigInt, exp: u32) -> BigInt {
    Pow::pow(base, exp)
}
