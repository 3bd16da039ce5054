//! Exact rational scalars.
//!
//! Every quantity in this crate is an exact rational; equality checks are
//! literal equality of reduced fractions. Values that fit in `i64/i64` stay on
//! a fast inline path, everything else is promoted to an arbitrary-precision
//! fraction. The representation is canonical: a value that fits inline is
//! always stored inline, so `PartialEq` can compare variants directly.

use alloc::boxed::Box;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Reduced fraction with positive denominator.
#[derive(Clone, Debug)]
pub enum Rat {
    /// `num/den` with `den > 0` and `gcd(num, den) == 1`.
    Small { num: i64, den: i64 },
    /// Used only when the reduced fraction does not fit in `Small`.
    Big(Box<BigRational>),
}

impl Rat {
    pub fn zero() -> Self {
        Rat::Small { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Rat::Small { num: 1, den: 1 }
    }

    pub fn from_integer(n: i64) -> Self {
        Rat::Small { num: n, den: 1 }
    }

    /// Builds `num/den`, reducing to canonical form. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num == 0 {
            return Rat::zero();
        }
        let g = num.abs().gcd(&den);
        num /= g;
        den /= g;
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) => Rat::Small { num: n, den: d },
            _ => Rat::Big(Box::new(BigRational::new(num.into(), den.into()))),
        }
    }

    fn from_big(b: BigRational) -> Self {
        // Demote when possible so the representation stays canonical.
        if let (Some(n), Some(d)) = (b.numer().to_i64(), b.denom().to_i64()) {
            Rat::Small { num: n, den: d }
        } else {
            Rat::Big(Box::new(b))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small { num, den } => BigRational::new(BigInt::from(*num), BigInt::from(*den)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Small { den, .. } => *den == 1,
            Rat::Big(b) => b.is_integer(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        match self {
            Rat::Small { num, den } => {
                assert!(*num != 0, "division by zero");
                Self::from_i128(*den as i128, *num as i128)
            }
            Rat::Big(b) => Self::from_big(b.recip()),
        }
    }

    /// Parses `"n"` or `"n/d"`; arbitrary precision.
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (ns, ds) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = ns.parse().ok()?;
        let d: BigInt = ds.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(n, d)))
    }

    pub fn to_fraction_string(&self) -> String {
        use alloc::format;
        match self {
            Rat::Small { num, den: 1 } => format!("{num}"),
            Rat::Small { num, den } => format!("{num}/{den}"),
            Rat::Big(b) => {
                if b.is_integer() {
                    format!("{}", b.numer())
                } else {
                    format!("{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fraction_string())
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => a == c && b == d,
            (Rat::Big(a), Rat::Big(b)) => a == b,
            // Canonical representation: a small value is never stored as Big.
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                // b, d > 0, so cross-multiplication preserves order; i128 cannot overflow.
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                let num = *a as i128 * *d as i128 + *c as i128 * *b as i128;
                let den = *b as i128 * *d as i128;
                Rat::from_i128(num, den)
            }
            _ => Rat::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                let num = *a as i128 * *d as i128 - *c as i128 * *b as i128;
                let den = *b as i128 * *d as i128;
                Rat::from_i128(num, den)
            }
            _ => Rat::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        match (self, rhs) {
            (Rat::Small { num: a, den: b }, Rat::Small { num: c, den: d }) => {
                Rat::from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => Rat::from_big(self.to_big() / rhs.to_big()),
        }
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small { num, den } => Rat::from_i128(-(*num as i128), *den as i128),
            Rat::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                $trait::$method(&self, rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, -7), Rat::zero());
        assert_eq!(Rat::new(6, 3).to_fraction_string(), "2");
        assert_eq!(Rat::new(-1, 3).to_fraction_string(), "-1/3");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-5", "1/2", "-7/3", "123456789123456789123456789/2"] {
            let r = Rat::parse(s).unwrap();
            assert_eq!(Rat::parse(&r.to_fraction_string()).unwrap(), r);
        }
        assert!(Rat::parse("1/0").is_none());
        assert!(Rat::parse("x").is_none());
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rat::from_integer(i64::MAX);
        let sum = &big + &Rat::one();
        assert!(matches!(sum, Rat::Big(_)));
        let back = &sum - &Rat::one();
        assert!(matches!(back, Rat::Small { .. }));
        assert_eq!(back, big);
    }

    proptest! {
        // Oracle: num-rational's BigRational arithmetic.
        #[test]
        fn matches_bigrational(a in -2000i64..2000, b in 1i64..200, c in -2000i64..2000, d in 1i64..200) {
            let x = Rat::new(a, b);
            let y = Rat::new(c, d);
            let (bx, by) = (x.to_big(), y.to_big());
            prop_assert_eq!((&x + &y).to_big(), &bx + &by);
            prop_assert_eq!((&x - &y).to_big(), &bx - &by);
            prop_assert_eq!((&x * &y).to_big(), &bx * &by);
            prop_assert_eq!((&x).cmp(&y), bx.cmp(&by));
            if !y.is_zero() {
                prop_assert_eq!((&x / &y).to_big(), &bx / &by);
            }
        }
    }
}
