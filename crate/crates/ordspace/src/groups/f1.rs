//! The two-generator groups `<a, b | b a b^-1 = a^r>` with rational `r`.
//!
//! Elements are pairs `(k, s)` with `k` the exponent sum of `b` and `s` in
//! the coefficient ring `Z[1/m]`, `m` = numerator times denominator of `r`.
//! The pair `(k, s)` stands for the normal form `b^k a^s` and acts on the
//! line by the affine map `x -> r^k x + r^k s`.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{AffineMap, Rational};

/// Group data: the defining slope `r` and the ring parameter `m`.
///
/// Parameters `r` and `1/r` present the same group with `b` replaced by its
/// inverse, so `r` is normalized to be greater than 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F1Group {
    r: Rational,
    m: BigInt,
}

impl F1Group {
    pub fn new(r: Rational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::Precondition(format!(
                "slope parameter must be positive, got {r}"
            )));
        }
        if r.is_one() {
            return Err(Error::Precondition(
                "slope parameter 1 gives the abelian group Z^2, which has no rank-one series of this shape".into(),
            ));
        }
        let r = if r < Rational::one() { r.recip()? } else { r };
        let m = r.numer().abs() * r.denom();
        Ok(F1Group { r, m })
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    /// Denominators of coefficients divide a power of this.
    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn r_pow(&self, e: &BigInt) -> Result<Rational> {
        self.r.pow_big(e)
    }

    pub fn contains(&self, k: &BigInt, s: &Rational) -> bool {
        let _ = k;
        s.denominator_divides_power_of(&self.m)
    }

    /// `(k, s) (k', s') = (k + k', s r^-k' + s')`.
    pub fn mul(&self, k: &BigInt, s: &Rational, k2: &BigInt, s2: &Rational) -> Result<(BigInt, Rational)> {
        let scale = self.r_pow(&(-k2))?;
        Ok((k + k2, &(s * &scale) + s2))
    }

    /// `(k, s)^-1 = (-k, -s r^k)`.
    pub fn inv(&self, k: &BigInt, s: &Rational) -> Result<(BigInt, Rational)> {
        let scale = self.r_pow(k)?;
        Ok((-k, -(s * &scale)))
    }

    /// The affine action: `(k, s)` maps `x` to `r^k x + r^k s`.
    pub fn affine(&self, k: &BigInt, s: &Rational) -> Result<AffineMap> {
        let slope = self.r_pow(k)?;
        let shift = &slope * s;
        AffineMap::new(slope, shift)
    }
}
