//! Arbitrary-precision rationals, always reduced, denominator positive.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Carrier;

/// Exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Integer power; negative exponents invert (zero base panics there).
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let mut base = if exp < 0 { self.recip() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Rational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Nearest f64 (NaN only if the conversion is impossible).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

// ---- arithmetic ----

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl Carrier for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

// ---- text form: "p" or "p/q" ----

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(String);

/// Accepts integers (`7`, `-3`), fractions (`3/2`), and exact decimals
/// (`1.25`, `-0.5`).
impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = t.split_once('.') {
            let (neg, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            let digits_ok = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());
            if !digits_ok(frac_part) || !(int_digits.is_empty() || digits_ok(int_digits)) {
                return Err(err());
            }
            let whole = if int_digits.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(int_digits).map_err(|_| err())?
            };
            let frac = BigInt::from_str(frac_part).map_err(|_| err())?;
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let mut num = whole * &scale + frac;
            if neg {
                num = -num;
            }
            return Ok(Rational(BigRational::new(num, scale)));
        }
        let n = BigInt::from_str(t).map_err(|_| err())?;
        Ok(Rational(BigRational::from_integer(n)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// ---- counting helpers ----

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc holds C(n, i)
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Multinomial coefficient (Σ parts)! / Π parts!.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total = 0u64;
    let mut acc = BigInt::one();
    for &m in parts {
        total += m;
        acc *= binomial(total, m);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(Rational::new(2, 4).to_string(), "1/2");
        assert_eq!(Rational::new(1, -2).to_string(), "-1/2");
        assert_eq!(Rational::new(-6, -3).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(q("7"), Rational::from_int(7));
        assert_eq!(q("-3/9"), Rational::new(-1, 3));
        assert_eq!(q("1.25"), Rational::new(5, 4));
        assert_eq!(q("-0.5"), Rational::new(-1, 2));
        assert_eq!(q(".5"), Rational::new(1, 2));
        assert_eq!(q(" 3 / 2 "), Rational::new(3, 2));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.2.3".parse::<Rational>().is_err());
        assert!("1.".parse::<Rational>().is_err());
    }

    #[test]
    fn arithmetic_and_pow() {
        let a = Rational::new(3, 4);
        let b = Rational::new(1, 6);
        assert_eq!(a.clone() + b.clone(), Rational::new(11, 12));
        assert_eq!(a.clone() - b.clone(), Rational::new(7, 12));
        assert_eq!(a.clone() * b.clone(), Rational::new(1, 8));
        assert_eq!(a.clone() / b, Rational::new(9, 2));
        assert_eq!(a.pow(2), Rational::new(9, 16));
        assert_eq!(a.pow(-1), Rational::new(4, 3));
        assert_eq!(a.pow(0), Rational::one());
    }

    #[test]
    fn counting() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(multinomial(&[1, 2]), BigInt::from(3));
        assert_eq!(multinomial(&[2, 2, 1]), BigInt::from(30));
        assert_eq!(multinomial(&[]), BigInt::one());
    }

    #[test]
    fn serde_as_string() {
        let a = Rational::new(-3, 2);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "\"-3/2\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn order_and_sign() {
        assert!(q("1/3") < q("1/2"));
        assert!(q("-2") < q("-1/2"));
        assert!(q("-1/2").is_negative());
        assert!(q("1/2").is_positive());
        assert_eq!(q("-7/3").abs(), q("7/3"));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_rational() -> impl Strategy<Value = Rational> {
            (-200i64..200, 1i64..80).prop_map(|(n, d)| Rational::new(n, d))
        }

        proptest! {
            #[test]
            fn field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
                prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
                prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                prop_assert_eq!(
                    (a.clone() + b.clone()) + c.clone(),
                    a.clone() + (b.clone() + c.clone())
                );
                prop_assert_eq!(
                    a.clone() * (b.clone() + c.clone()),
                    a.clone() * b.clone() + a.clone() * c.clone()
                );
                prop_assert_eq!(a.clone() + (-a.clone()), Rational::zero());
                if !b.is_zero() {
                    prop_assert_eq!((a.clone() / b.clone()) * b.clone(), a.clone());
                }
            }

            #[test]
            fn display_parse_roundtrip(a in arb_rational()) {
                prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
            }
        }
    }
}
