//! Exact rational arithmetic, localized rings Z[1/m], orientation-preserving
//! affine maps of the line, and the side-tagged ordering parameter.
//!
//! Everything here is exact: no floating point, no rounding. `Rational` is a
//! reduced fraction with arbitrary-precision integer parts. `OrderParam` is
//! the parameter of a point-evaluation ordering: either a rational with an
//! infinitesimal side tag ("just below" / "just above" the value) or one of
//! the two infinite limits. Comparing an `OrderParam` against a rational
//! threshold is total and never answers "equal", which is what makes every
//! positivity test downstream decidable.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest exponent magnitude accepted by [`Rational::pow`]. Beyond this the
/// result would be astronomically large; the caller gets an error instead of
/// an effectively hung process.
pub const MAX_POW_EXPONENT: i64 = 1 << 20;

/// An exact rational number, always reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `n/d`, reducing to lowest terms. Errors when `d = 0`.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::DivisionByZero("rational construction".into()));
        }
        Ok(Rational(BigRational::new(n.into(), d)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// −1, 0, or +1.
    pub fn signum(&self) -> i8 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact division; errors when `rhs = 0`.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("rational division".into()));
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power with a sanity bound on the exponent magnitude.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e.unsigned_abs() > MAX_POW_EXPONENT as u64 {
            return Err(Error::ExponentRange(e.to_string()));
        }
        if e == 0 {
            return Ok(Rational::one());
        }
        if self.is_zero() {
            if e < 0 {
                return Err(Error::DivisionByZero("negative power of zero".into()));
            }
            return Ok(Rational::zero());
        }
        let mag = e.unsigned_abs() as u32;
        let n = self.0.numer().pow(mag);
        let d = self.0.denom().pow(mag);
        Ok(if e > 0 {
            Rational(BigRational::new(n, d))
        } else {
            Rational(BigRational::new(d, n))
        })
    }

    /// Same as [`Rational::pow`] but takes an arbitrary-precision exponent.
    pub fn pow_big(&self, e: &BigInt) -> Result<Self> {
        match e.to_i64() {
            Some(e) => self.pow(e),
            None => Err(Error::ExponentRange(e.to_string())),
        }
    }

    /// Membership in Z[1/m]: does the denominator divide a power of `m`?
    pub fn denominator_divides_power_of(&self, m: &BigInt) -> bool {
        let mut d = self.denom().clone();
        let m = m.abs();
        if m.is_zero() {
            return d.is_one();
        }
        loop {
            if d.is_one() {
                return true;
            }
            let g = num_integer::Integer::gcd(&d, &m);
            if g.is_one() {
                return false;
            }
            d /= g;
        }
    }

    /// Truncating conversion to an integer (rounds toward −∞).
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(std::ops::$trait::$method(&self.0, &rhs.0))
            }
        }
        impl std::ops::$trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(std::ops::$trait::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

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
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses "p" or "p/q" with optional leading minus sign.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |pos: usize, msg: &str| Error::Syntax {
            pos,
            msg: msg.to_string(),
        };
        let (num_text, den_text) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let n = BigInt::from_str(num_text.trim())
            .map_err(|_| bad(0, &format!("expected an integer, found `{num_text}`")))?;
        let d = match den_text {
            Some(d) => BigInt::from_str(d.trim())
                .map_err(|_| bad(num_text.len() + 1, &format!("expected an integer, found `{d}`")))?,
            None => BigInt::one(),
        };
        Rational::new(n, d)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// Side tag of a finite ordering parameter: the germ just below or just
/// above the rational value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Below,
    Above,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Below => "below",
            Side::Above => "above",
        })
    }
}

/// Parameter of a point-evaluation ordering: a rational with a side tag, or
/// one of the two infinite limits.
///
/// The derived `Ord` places `MinusInfinity` below every finite parameter,
/// `PlusInfinity` above, and orders finite parameters by value with
/// `Below < Above` at equal values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderParam {
    MinusInfinity,
    Finite { value: Rational, side: Side },
    PlusInfinity,
}

impl OrderParam {
    pub fn finite(value: Rational, side: Side) -> Self {
        OrderParam::Finite { value, side }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, OrderParam::Finite { .. })
    }
}

impl fmt::Display for OrderParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderParam::MinusInfinity => f.write_str("-inf"),
            OrderParam::PlusInfinity => f.write_str("+inf"),
            OrderParam::Finite { value, side } => write!(f, "({value}, {side})"),
        }
    }
}

impl Serialize for OrderParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OrderParam::MinusInfinity => serializer.serialize_str("-inf"),
            OrderParam::PlusInfinity => serializer.serialize_str("+inf"),
            OrderParam::Finite { value, side } => {
                use serde::ser::SerializeMap;
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("value", value)?;
                map.serialize_entry(
                    "side",
                    match side {
                        Side::Below => "below",
                        Side::Above => "above",
                    },
                )?;
                map.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for OrderParam {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Infinite(String),
            Finite { value: Rational, side: String },
        }
        match Repr::deserialize(deserializer)? {
            Repr::Infinite(s) => match s.as_str() {
                "+inf" => Ok(OrderParam::PlusInfinity),
                "-inf" => Ok(OrderParam::MinusInfinity),
                other => Err(D::Error::custom(format!(
                    "expected \"+inf\" or \"-inf\", found \"{other}\""
                ))),
            },
            Repr::Finite { value, side } => {
                let side = match side.as_str() {
                    "below" => Side::Below,
                    "above" => Side::Above,
                    other => {
                        return Err(D::Error::custom(format!(
                            "expected side \"below\" or \"above\", found \"{other}\""
                        )))
                    }
                };
                Ok(OrderParam::finite(value, side))
            }
        }
    }
}

/// Result of comparing an `OrderParam` against a rational threshold. Never
/// equal: the side tag breaks every tie.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamOrder {
    Less,
    Greater,
}

/// Side-resolved comparison of a parameter against a rational threshold.
///
/// `(v, Below) < t` iff `v ≤ t`; `(v, Above) < t` iff `v < t`; the infinite
/// parameters compare in the obvious way.
pub fn param_compare(p: &OrderParam, t: &Rational) -> ParamOrder {
    match p {
        OrderParam::MinusInfinity => ParamOrder::Less,
        OrderParam::PlusInfinity => ParamOrder::Greater,
        OrderParam::Finite { value, side } => match (value.0.cmp(&t.0), side) {
            (Ordering::Less, _) => ParamOrder::Less,
            (Ordering::Greater, _) => ParamOrder::Greater,
            (Ordering::Equal, Side::Below) => ParamOrder::Less,
            (Ordering::Equal, Side::Above) => ParamOrder::Greater,
        },
    }
}

/// An orientation-preserving affine map x ↦ slope·x + shift with slope > 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    slope: Rational,
    shift: Rational,
}

impl AffineMap {
    /// Errors unless `slope > 0`.
    pub fn new(slope: Rational, shift: Rational) -> Result<Self> {
        if !slope.is_positive() {
            return Err(Error::Precondition(format!(
                "affine slope must be positive, got {slope}"
            )));
        }
        Ok(AffineMap { slope, shift })
    }

    pub fn identity() -> Self {
        AffineMap {
            slope: Rational::one(),
            shift: Rational::zero(),
        }
    }

    pub fn slope(&self) -> &Rational {
        &self.slope
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.slope.is_one() && self.shift.is_zero()
    }

    /// The unique fixed point, or `None` for translations (slope 1).
    pub fn fixed_point(&self) -> Option<Rational> {
        if self.slope.is_one() {
            return None;
        }
        let denom = &Rational::one() - &self.slope;
        Some(self.shift.checked_div(&denom).expect("slope != 1"))
    }
}

impl fmt::Debug for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{:+}", self.slope, SignedDisplay(&self.shift))
    }
}

struct SignedDisplay<'a>(&'a Rational);

impl fmt::Display for SignedDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Evaluates the map at `x`.
pub fn affine_apply(m: &AffineMap, x: &Rational) -> Rational {
    &(&m.slope * x) + &m.shift
}

/// Function composition `f∘g`: apply `g` first, then `f`.
pub fn affine_compose(f: &AffineMap, g: &AffineMap) -> AffineMap {
    AffineMap {
        slope: &f.slope * &g.slope,
        shift: &(&f.slope * &g.shift) + &f.shift,
    }
}

/// The inverse map; `affine_compose(m, affine_invert(m))` is the identity.
pub fn affine_invert(m: &AffineMap) -> AffineMap {
    let slope = m.slope.recip().expect("slope > 0 invariant");
    let shift = -&(&slope * &m.shift);
    AffineMap { slope, shift }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn map(slope: Rational, shift: Rational) -> AffineMap {
        AffineMap::new(slope, shift).unwrap()
    }

    #[test]
    fn rational_reduces_and_normalizes_sign() {
        let x = rat(4, -6);
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!(x.numer(), &BigInt::from(-2));
        assert_eq!(x.denom(), &BigInt::from(3));
        assert_eq!(rat(14, 7).to_string(), "2");
    }

    #[test]
    fn rational_parse_round_trip() {
        for text in ["0", "7", "-13/8", "3/2", "-1"] {
            let x: Rational = text.parse().unwrap();
            assert_eq!(x.to_string(), text);
        }
        assert!(Rational::from_str("1/0").is_err());
        assert!(Rational::from_str("a/2").is_err());
        assert!(Rational::from_str("").is_err());
    }

    #[test]
    fn rational_pow_and_recip() {
        assert_eq!(rat(3, 2).pow(2).unwrap(), rat(9, 4));
        assert_eq!(rat(3, 2).pow(-2).unwrap(), rat(4, 9));
        assert_eq!(rat(3, 2).pow(0).unwrap(), Rational::one());
        assert!(Rational::zero().pow(-1).is_err());
        assert!(rat(2, 1).pow(MAX_POW_EXPONENT + 1).is_err());
    }

    #[test]
    fn localized_ring_membership() {
        let m = BigInt::from(6);
        assert!(rat(5, 12).denominator_divides_power_of(&m));
        assert!(rat(1, 1).denominator_divides_power_of(&m));
        assert!(!rat(1, 5).denominator_divides_power_of(&m));
        assert!(rat(7, 8).denominator_divides_power_of(&BigInt::from(2)));
        assert!(!rat(1, 2).denominator_divides_power_of(&BigInt::from(3)));
    }

    #[test]
    fn apply_dilation() {
        let m = map(rat(2, 1), Rational::zero());
        assert_eq!(affine_apply(&m, &Rational::one()), rat(2, 1));
    }

    #[test]
    fn apply_identity() {
        assert_eq!(affine_apply(&AffineMap::identity(), &rat(7, 3)), rat(7, 3));
    }

    #[test]
    fn apply_fixes_point_of_dilated_translation() {
        // 3x+3 fixes -3/2, the stabilized point at level k = 1.
        let m = map(rat(3, 1), rat(3, 1));
        assert_eq!(affine_apply(&m, &rat(-3, 2)), rat(-3, 2));
        assert_eq!(m.fixed_point().unwrap(), rat(-3, 2));
    }

    #[test]
    fn compose_dilation_with_translation() {
        let f = map(rat(2, 1), Rational::zero());
        let g = map(Rational::one(), Rational::one());
        let fg = affine_compose(&f, &g);
        assert_eq!(fg, map(rat(2, 1), rat(2, 1)));
    }

    #[test]
    fn compose_with_identity() {
        let f = map(rat(5, 3), rat(-1, 2));
        assert_eq!(affine_compose(&f, &AffineMap::identity()), f);
        assert_eq!(affine_compose(&AffineMap::identity(), &f), f);
    }

    #[test]
    fn conjugating_translation_by_dilation_cubes_it() {
        // (3x) ∘ (x+1) ∘ (x/3) = x+3.
        let gamma = map(rat(3, 1), Rational::zero());
        let beta = map(Rational::one(), Rational::one());
        let conj = affine_compose(&affine_compose(&gamma, &beta), &affine_invert(&gamma));
        assert_eq!(conj, map(Rational::one(), rat(3, 1)));
    }

    #[test]
    fn invert_translation_and_dilation() {
        assert_eq!(
            affine_invert(&map(Rational::one(), Rational::one())),
            map(Rational::one(), rat(-1, 1))
        );
        assert_eq!(
            affine_invert(&map(rat(2, 1), Rational::zero())),
            map(rat(1, 2), Rational::zero())
        );
        let m = map(rat(3, 1), rat(3, 1));
        assert_eq!(affine_compose(&m, &affine_invert(&m)), AffineMap::identity());
        assert_eq!(affine_invert(&m), map(rat(1, 3), rat(-1, 1)));
    }

    #[test]
    fn rejects_non_positive_slope() {
        assert!(AffineMap::new(Rational::zero(), Rational::zero()).is_err());
        assert!(AffineMap::new(rat(-2, 1), Rational::zero()).is_err());
    }

    #[test]
    fn param_compare_side_resolution() {
        let eleven = rat(11, 1);
        let above = OrderParam::finite(eleven.clone(), Side::Above);
        let below = OrderParam::finite(eleven.clone(), Side::Below);
        assert_eq!(param_compare(&above, &eleven), ParamOrder::Greater);
        assert_eq!(param_compare(&below, &eleven), ParamOrder::Less);
        let big = rat(1_000_000_000, 1);
        assert_eq!(param_compare(&OrderParam::PlusInfinity, &big), ParamOrder::Greater);
        assert_eq!(param_compare(&OrderParam::MinusInfinity, &-&big), ParamOrder::Less);
        assert_eq!(param_compare(&above, &rat(12, 1)), ParamOrder::Less);
        assert_eq!(param_compare(&below, &rat(10, 1)), ParamOrder::Greater);
    }

    #[test]
    fn order_param_total_order() {
        let p1 = OrderParam::MinusInfinity;
        let p2 = OrderParam::finite(rat(3, 1), Side::Below);
        let p3 = OrderParam::finite(rat(3, 1), Side::Above);
        let p4 = OrderParam::finite(rat(7, 2), Side::Below);
        let p5 = OrderParam::PlusInfinity;
        let sorted = vec![&p1, &p2, &p3, &p4, &p5];
        let mut shuffled = vec![&p4, &p1, &p5, &p3, &p2];
        shuffled.sort();
        assert_eq!(shuffled, sorted);
    }

    #[test]
    fn order_param_serde_round_trip() {
        for p in [
            OrderParam::PlusInfinity,
            OrderParam::MinusInfinity,
            OrderParam::finite(rat(11, 1), Side::Above),
            OrderParam::finite(rat(-7, 2), Side::Below),
        ] {
            let text = serde_json::to_string(&p).unwrap();
            let back: OrderParam = serde_json::from_str(&text).unwrap();
            assert_eq!(back, p);
        }
        assert_eq!(
            serde_json::to_string(&OrderParam::finite(rat(11, 1), Side::Above)).unwrap(),
            r#"{"value":"11","side":"above"}"#
        );
        assert_eq!(
            serde_json::to_string(&OrderParam::PlusInfinity).unwrap(),
            "\"+inf\""
        );
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_map() -> impl Strategy<Value = AffineMap> {
        ((1i64..100, 1i64..100), arb_rational())
            .prop_map(|((p, q), shift)| map(rat(p, q), shift))
    }

    proptest! {
        #[test]
        fn compose_is_associative(f in arb_map(), g in arb_map(), h in arb_map()) {
            let left = affine_compose(&affine_compose(&f, &g), &h);
            let right = affine_compose(&f, &affine_compose(&g, &h));
            prop_assert_eq!(left, right);
        }

        #[test]
        fn compose_with_inverse_is_identity(f in arb_map()) {
            prop_assert_eq!(affine_compose(&f, &affine_invert(&f)), AffineMap::identity());
            prop_assert_eq!(affine_compose(&affine_invert(&f), &f), AffineMap::identity());
        }

        #[test]
        fn compose_matches_pointwise_application(f in arb_map(), g in arb_map(), x in arb_rational()) {
            let composed = affine_apply(&affine_compose(&f, &g), &x);
            let stepwise = affine_apply(&f, &affine_apply(&g, &x));
            prop_assert_eq!(composed, stepwise);
        }

        #[test]
        fn param_compare_consistent_with_rational_order(
            v in arb_rational(),
            t in arb_rational(),
            above in proptest::bool::ANY,
        ) {
            let side = if above { Side::Above } else { Side::Below };
            let p = OrderParam::finite(v.clone(), side);
            if v < t {
                prop_assert_eq!(param_compare(&p, &t), ParamOrder::Less);
            } else if v > t {
                prop_assert_eq!(param_compare(&p, &t), ParamOrder::Greater);
            }
        }

        #[test]
        fn rational_display_round_trips(x in arb_rational()) {
            let text = x.to_string();
            let back: Rational = text.parse().unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
