//! Exact scalar types: arbitrary-precision rationals, the ring Q[ln2], and
//! half-integer indices.
//!
//! `ln2` is a formal symbol, never a numeric approximation. Equality in
//! Q[ln2] is coefficient-wise, which is valid because {1, ln2} is linearly
//! independent over Q. Every value is immutable and every operation is pure,
//! so values can be shared freely between worker threads.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// Inversion or division by zero.
    DivisionByZero,
    /// A product would carry a ln2^2 term, which lies outside Q[ln2].
    DegreeOverflow,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DivisionByZero => write!(f, "division by zero"),
            ExactError::DegreeOverflow => {
                write!(f, "product of two ln2-bearing values leaves Q[ln2]")
            }
        }
    }
}

impl std::error::Error for ExactError {}

/// Error for text that does not match a canonical rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

/// Normalized arbitrary-precision rational. The denominator is always
/// positive and coprime to the numerator; zero is stored as 0/1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// p/q with a nonzero literal denominator. Panics on q = 0; use
    /// [`Rational::new`] for runtime-checked construction.
    pub fn frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "literal denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn new(num: BigInt, den: BigInt) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn ratio(num: &BigInt, den: &BigInt) -> Result<Self, ExactError> {
        Self::new(num.clone(), den.clone())
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Rational, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power, negative exponents allowed for nonzero values.
    pub fn pow(&self, e: i64) -> Result<Rational, ExactError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Rational::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// 2^e for any integer e.
    pub fn pow2(e: i64) -> Rational {
        Rational::int(2).pow(e).expect("2 is invertible")
    }

    /// (-1)^e.
    pub fn neg_one_pow(e: i64) -> Rational {
        if e.rem_euclid(2) == 0 {
            Rational::one()
        } else {
            Rational::int(-1)
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        Rational::from_bigint(n.clone())
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let bad = || ParseError(format!("invalid rational: {s:?}"));
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Rational::from_bigint(n))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                Rational::new(p, q).map_err(|_| bad())
            }
        }
    }
}

/// Element a + b*ln2 of the ring Q[ln2].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogValue {
    /// Coefficient of 1.
    pub rat: Rational,
    /// Coefficient of ln2.
    pub log2: Rational,
}

impl LogValue {
    pub fn zero() -> Self {
        LogValue {
            rat: Rational::zero(),
            log2: Rational::zero(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        LogValue {
            rat: r,
            log2: Rational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::from_rational(Rational::int(n))
    }

    /// c * ln2.
    pub fn ln2(coeff: Rational) -> Self {
        LogValue {
            rat: Rational::zero(),
            log2: coeff,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.log2.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.log2.is_zero()
    }

    /// Componentwise scaling by a rational.
    pub fn scale(&self, c: &Rational) -> LogValue {
        LogValue {
            rat: &self.rat * c,
            log2: &self.log2 * c,
        }
    }

    /// Exact product. Fails with `DegreeOverflow` when both factors carry a
    /// nonzero ln2 part; no in-scope identity multiplies two such values.
    pub fn try_mul(&self, rhs: &LogValue) -> Result<LogValue, ExactError> {
        if !self.log2.is_zero() && !rhs.log2.is_zero() {
            return Err(ExactError::DegreeOverflow);
        }
        Ok(LogValue {
            rat: &self.rat * &rhs.rat,
            log2: &(&self.rat * &rhs.log2) + &(&self.log2 * &rhs.rat),
        })
    }
}

impl From<Rational> for LogValue {
    fn from(r: Rational) -> Self {
        LogValue::from_rational(r)
    }
}

impl Add for &LogValue {
    type Output = LogValue;
    fn add(self, rhs: &LogValue) -> LogValue {
        LogValue {
            rat: &self.rat + &rhs.rat,
            log2: &self.log2 + &rhs.log2,
        }
    }
}

impl Sub for &LogValue {
    type Output = LogValue;
    fn sub(self, rhs: &LogValue) -> LogValue {
        LogValue {
            rat: &self.rat - &rhs.rat,
            log2: &self.log2 - &rhs.log2,
        }
    }
}

impl Neg for &LogValue {
    type Output = LogValue;
    fn neg(self) -> LogValue {
        LogValue {
            rat: -&self.rat,
            log2: -&self.log2,
        }
    }
}

impl Add for LogValue {
    type Output = LogValue;
    fn add(self, rhs: LogValue) -> LogValue {
        &self + &rhs
    }
}

impl Sub for LogValue {
    type Output = LogValue;
    fn sub(self, rhs: LogValue) -> LogValue {
        &self - &rhs
    }
}

fn fmt_ln2_coeff(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_one() {
        write!(f, "ln2")
    } else if c.is_integer() {
        write!(f, "{c}*ln2")
    } else {
        write!(f, "({c})*ln2")
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.log2.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => fmt_ln2_coeff(&self.log2, f),
            (false, false) => {
                write!(f, "{}", self.rat)?;
                if self.log2.is_negative() {
                    write!(f, " - ")?;
                    fmt_ln2_coeff(&-&self.log2, f)
                } else {
                    write!(f, " + ")?;
                    fmt_ln2_coeff(&self.log2, f)
                }
            }
        }
    }
}

impl FromStr for LogValue {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let bad = || ParseError(format!("invalid Q[ln2] value: {s:?}"));
        let parse_coeff = |c: &str| -> Result<Rational, ParseError> {
            let c = c.trim();
            if c.is_empty() {
                return Ok(Rational::one());
            }
            let c = c.strip_suffix('*').unwrap_or(c).trim();
            let inner = if c.starts_with('(') && c.ends_with(')') {
                &c[1..c.len() - 1]
            } else if c == "-" {
                return Ok(Rational::int(-1));
            } else if let Some(rest) = c.strip_prefix("-(") {
                let rest = rest.strip_suffix(')').ok_or_else(bad)?;
                return Ok(-Rational::from_str(rest)?);
            } else {
                c
            };
            Rational::from_str(inner)
        };
        match s.find("ln2") {
            None => Ok(LogValue::from_rational(Rational::from_str(s)?)),
            Some(pos) => {
                if pos + 3 != s.len() {
                    return Err(bad());
                }
                let head = &s[..pos];
                // Split an optional leading rational part joined by " + " or " - ".
                if let Some(idx) = head.find(" + ") {
                    let rat = Rational::from_str(&head[..idx])?;
                    let coeff = parse_coeff(&head[idx + 3..])?;
                    Ok(LogValue { rat, log2: coeff })
                } else if let Some(idx) = head.find(" - ") {
                    let rat = Rational::from_str(&head[..idx])?;
                    let coeff = parse_coeff(&head[idx + 3..])?;
                    Ok(LogValue {
                        rat,
                        log2: -coeff,
                    })
                } else {
                    Ok(LogValue::ln2(parse_coeff(head)?))
                }
            }
        }
    }
}

/// Classification of a half-integer index, used for pole filtering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfIntClass {
    Zero,
    PositiveInteger,
    NegativeInteger,
    PositiveHalf,
    NegativeHalf,
}

/// Index in Z/2: an integer or half-integer, stored as twice its value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfInt {
    twice: BigInt,
}

impl HalfInt {
    pub fn from_int(n: i64) -> Self {
        HalfInt {
            twice: BigInt::from(2 * n),
        }
    }

    /// The value p/2.
    pub fn halves(p: i64) -> Self {
        HalfInt {
            twice: BigInt::from(p),
        }
    }

    pub fn from_twice(twice: BigInt) -> Self {
        HalfInt { twice }
    }

    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    pub fn zero() -> Self {
        HalfInt::from_int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.twice.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        (&self.twice % 2u8).is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.twice.is_negative()
    }

    /// The integer value, if this is an integer that fits in i64.
    pub fn as_int(&self) -> Option<i64> {
        if self.is_integer() {
            (&self.twice / BigInt::from(2)).to_i64()
        } else {
            None
        }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.twice.clone(), BigInt::from(2)).expect("nonzero denominator")
    }

    pub fn classify(&self) -> HalfIntClass {
        if self.twice.is_zero() {
            HalfIntClass::Zero
        } else if self.is_integer() {
            if self.twice.is_negative() {
                HalfIntClass::NegativeInteger
            } else {
                HalfIntClass::PositiveInteger
            }
        } else if self.twice.is_negative() {
            HalfIntClass::NegativeHalf
        } else {
            HalfIntClass::PositiveHalf
        }
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::from_int(n)
    }
}

impl Add<&HalfInt> for &HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: &HalfInt) -> HalfInt {
        HalfInt {
            twice: &self.twice + &rhs.twice,
        }
    }
}

impl Sub<&HalfInt> for &HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: &HalfInt) -> HalfInt {
        HalfInt {
            twice: &self.twice - &rhs.twice,
        }
    }
}

impl Add<i64> for &HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt {
            twice: &self.twice + BigInt::from(2 * rhs),
        }
    }
}

impl Sub<i64> for &HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt {
            twice: &self.twice - BigInt::from(2 * rhs),
        }
    }
}

impl Neg for &HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            twice: -&self.twice,
        }
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.twice.cmp(&other.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let bad = || ParseError(format!("invalid half-integer: {s:?}"));
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(HalfInt { twice: n * 2 })
            }
            Some((p, q)) => {
                if q.trim() != "2" {
                    return Err(bad());
                }
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                Ok(HalfInt { twice: p })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rational_small_sums() {
        assert_eq!(&Rational::frac(1, 2) + &Rational::frac(1, 3), Rational::frac(5, 6));
        assert_eq!(Rational::frac(2, 4), Rational::frac(1, 2));
        assert_eq!(Rational::zero().inv(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn rational_normalization() {
        let r = Rational::frac(-6, -4);
        assert_eq!(r.numer(), &BigInt::from(3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = Rational::frac(0, -7);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn logvalue_componentwise() {
        let a = LogValue {
            rat: Rational::frac(1, 2),
            log2: Rational::one(),
        };
        let b = LogValue {
            rat: Rational::frac(1, 2),
            log2: Rational::int(-1),
        };
        assert_eq!(&a + &b, LogValue::int(1));

        // H_{-3/2} plus a plain 2 has the -2 ln2 part preserved.
        let h = LogValue {
            rat: Rational::int(2),
            log2: Rational::int(-2),
        };
        assert_eq!(
            &LogValue::ln2(Rational::int(-2)) + &LogValue::int(2),
            h
        );

        let x = LogValue {
            rat: Rational::frac(3, 7),
            log2: Rational::frac(-2, 5),
        };
        assert_eq!(&x + &LogValue::zero(), x);
    }

    #[test]
    fn logvalue_products() {
        let three = LogValue::int(3);
        let m2ln2 = LogValue::ln2(Rational::int(-2));
        assert_eq!(
            three.try_mul(&m2ln2).unwrap(),
            LogValue::ln2(Rational::int(-6))
        );
        assert_eq!(
            m2ln2.try_mul(&m2ln2),
            Err(ExactError::DegreeOverflow)
        );
        let x = LogValue {
            rat: Rational::frac(1, 3),
            log2: Rational::int(4),
        };
        assert_eq!(LogValue::int(1).try_mul(&x).unwrap(), x);
        assert_eq!(
            x.scale(&Rational::int(2)),
            LogValue {
                rat: Rational::frac(2, 3),
                log2: Rational::int(8),
            }
        );
        assert_eq!(x.scale(&Rational::zero()), LogValue::zero());
        assert_eq!(x.scale(&Rational::int(-1)), -&x);
    }

    #[test]
    fn halfint_classify_cases() {
        assert_eq!(HalfInt::halves(5).classify(), HalfIntClass::PositiveHalf);
        assert_eq!(HalfInt::from_int(-3).classify(), HalfIntClass::NegativeInteger);
        assert_eq!(HalfInt::zero().classify(), HalfIntClass::Zero);
        assert_eq!(HalfInt::halves(-1).classify(), HalfIntClass::NegativeHalf);
        assert_eq!(HalfInt::from_int(7).classify(), HalfIntClass::PositiveInteger);
    }

    #[test]
    fn halfint_arithmetic() {
        let x = HalfInt::halves(-1); // -1/2
        assert_eq!(&x - 1, HalfInt::halves(-3));
        assert_eq!(&x + 1, HalfInt::halves(1));
        assert_eq!((&x + &HalfInt::halves(1)), HalfInt::zero());
        assert_eq!(x.to_rational(), Rational::frac(-1, 2));
        assert!(HalfInt::halves(-3) < HalfInt::from_int(-1));
    }

    #[test]
    fn canonical_renderings() {
        assert_eq!(Rational::frac(-3, 4).to_string(), "-3/4");
        assert_eq!(Rational::int(17).to_string(), "17");
        assert_eq!(HalfInt::from_int(4).to_string(), "4");
        assert_eq!(HalfInt::halves(-3).to_string(), "-3/2");
        assert_eq!(LogValue::zero().to_string(), "0");
        assert_eq!(LogValue::ln2(Rational::int(-2)).to_string(), "-2*ln2");
        let h_half = LogValue {
            rat: Rational::int(2),
            log2: Rational::int(-2),
        };
        assert_eq!(h_half.to_string(), "2 - 2*ln2");
        let mixed = LogValue {
            rat: Rational::frac(-1, 2),
            log2: Rational::frac(3, 4),
        };
        assert_eq!(mixed.to_string(), "-1/2 + (3/4)*ln2");
        assert_eq!(LogValue::ln2(Rational::one()).to_string(), "ln2");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-200i64..200, 1i64..40).prop_map(|(p, q)| Rational::frac(p, q))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Rational::zero(), a.clone());
            prop_assert_eq!(&a * &Rational::one(), a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), Rational::one());
            }
        }

        #[test]
        fn rational_roundtrip(a in arb_rational()) {
            let parsed: Rational = a.to_string().parse().unwrap();
            prop_assert_eq!(parsed, a);
        }

        #[test]
        fn logvalue_roundtrip(p in -60i64..60, q in 1i64..9, r in -60i64..60, s in 1i64..9) {
            let v = LogValue { rat: Rational::frac(p, q), log2: Rational::frac(r, s) };
            let parsed: LogValue = v.to_string().parse().unwrap();
            prop_assert_eq!(parsed, v);
        }

        #[test]
        fn halfint_roundtrip(t in -300i64..300) {
            let h = HalfInt::halves(t);
            let parsed: HalfInt = h.to_string().parse().unwrap();
            prop_assert_eq!(parsed, h);
        }

        #[test]
        fn logvalue_equality_is_coefficientwise(
            a1 in -30i64..30, b1 in -30i64..30, a2 in -30i64..30, b2 in -30i64..30
        ) {
            let x = LogValue { rat: Rational::int(a1), log2: Rational::int(b1) };
            let y = LogValue { rat: Rational::int(a2), log2: Rational::int(b2) };
            prop_assert_eq!(x == y, a1 == a2 && b1 == b2);
        }
    }
}
