//! The groups `G(n) = <a, b, c | b a b^-1 = a^-1, c a c^-1 = a^n, c b c^-1 = b^3>`
//! for a nonzero integer `n`, together with their Baumslag-Solitar quotient
//! `B(1,3) = <b, c | c b c^-1 = b^3>`.
//!
//! `B(1,3)` is modeled by the affine maps `x -> 3^k x + t` with `t` in
//! `Z[1/3]`; `b` is the unit translation and `c` the dilation by 3. `G(n)`
//! is the split extension of the coefficient group `A = Z[1/|n|]` by
//! `B(1,3)`, where `(k, t)` acts on `A` as multiplication by
//! `chi = n^k (-1)^t` (the parity of `t` taken in `Z[1/3] / 2 Z[1/3]`).
//! An element is a pair `(s, q)` with `s` in `A` and `q` in `B(1,3)`, the
//! normal form being `c^k b^u a^v`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{AffineMap, Rational};

/// An element of `B(1,3)`: the affine map `x -> 3^k x + shift`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bs13Elem {
    k: BigInt,
    shift: Rational,
}

impl Bs13Elem {
    pub fn new(k: BigInt, shift: Rational) -> Result<Self> {
        if !shift.denominator_divides_power_of(&BigInt::from(3)) {
            return Err(Error::Precondition(format!(
                "translation part {shift} is not in Z[1/3]"
            )));
        }
        Ok(Bs13Elem { k, shift })
    }

    pub fn identity() -> Self {
        Bs13Elem {
            k: BigInt::ZERO,
            shift: Rational::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.k == BigInt::ZERO && self.shift.is_zero()
    }

    /// Exponent of the dilation part.
    pub fn k(&self) -> &BigInt {
        &self.k
    }

    /// The translation term of the map (not the `b`-exponent; see `b_exp`).
    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    /// The exponent `u` in the normal form `c^k b^u`: the map equals
    /// `x -> 3^k (x + u)`, so `u = shift / 3^k`.
    pub fn b_exp(&self) -> Result<Rational> {
        let scale = Rational::from_int(3).pow_big(&-&self.k)?;
        Ok(&self.shift * &scale)
    }

    pub fn compose(&self, other: &Bs13Elem) -> Result<Bs13Elem> {
        let scale = Rational::from_int(3).pow_big(&self.k)?;
        Ok(Bs13Elem {
            k: &self.k + &other.k,
            shift: &(&scale * &other.shift) + &self.shift,
        })
    }

    pub fn invert(&self) -> Result<Bs13Elem> {
        let scale = Rational::from_int(3).pow_big(&-&self.k)?;
        Ok(Bs13Elem {
            k: -&self.k,
            shift: -(&scale * &self.shift),
        })
    }

    pub fn map(&self) -> Result<AffineMap> {
        AffineMap::new(Rational::from_int(3).pow_big(&self.k)?, self.shift.clone())
    }

    pub fn apply(&self, x: &Rational) -> Result<Rational> {
        let scale = Rational::from_int(3).pow_big(&self.k)?;
        Ok(&(&scale * x) + &self.shift)
    }

    pub fn fixes(&self, x: &Rational) -> Result<bool> {
        Ok(&self.apply(x)? == x)
    }

    /// Parity of the translation part in `Z[1/3] / 2 Z[1/3]`: since 3 is
    /// odd, this is the parity of the numerator.
    pub fn shift_is_odd(&self) -> bool {
        self.shift.numer().is_odd()
    }
}

/// The action character of `B(1,3)` on the coefficient group of `G(n)`:
/// `chi(q) = n^k (-1)^(parity of the translation part)`.
pub fn chi(n: &BigInt, q: &Bs13Elem) -> Result<Rational> {
    let base = Rational::from_int(n.clone()).pow_big(q.k())?;
    Ok(if q.shift_is_odd() { -base } else { base })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GnGroup {
    n: BigInt,
    m: BigInt,
}

impl GnGroup {
    pub fn new(n: BigInt) -> Result<Self> {
        if n == BigInt::ZERO {
            return Err(Error::Precondition(
                "the extension parameter n must be a nonzero integer".into(),
            ));
        }
        let m = if n.abs().is_one() {
            BigInt::one()
        } else {
            n.abs()
        };
        Ok(GnGroup { n, m })
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// Coefficient denominators divide a power of this.
    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn chi(&self, q: &Bs13Elem) -> Result<Rational> {
        chi(&self.n, q)
    }

    pub fn contains(&self, s: &Rational, _q: &Bs13Elem) -> bool {
        s.denominator_divides_power_of(&self.m)
    }

    /// `(s, q) (s', q') = (s + chi(q) s', q q')`.
    pub fn mul(
        &self,
        s: &Rational,
        q: &Bs13Elem,
        s2: &Rational,
        q2: &Bs13Elem,
    ) -> Result<(Rational, Bs13Elem)> {
        Ok((s + &(&self.chi(q)? * s2), q.compose(q2)?))
    }

    /// `(s, q)^-1 = (-s / chi(q), q^-1)`.
    pub fn inv(&self, s: &Rational, q: &Bs13Elem) -> Result<(Rational, Bs13Elem)> {
        let c = self.chi(q)?;
        Ok((-(s.checked_div(&c)?), q.invert()?))
    }

    /// Membership in the stabilizer subgroup `H(n, k)`: the elements whose
    /// `B(1,3)` part fixes the point `-3k/2`.
    pub fn member_h(&self, k: &BigInt, s: &Rational, q: &Bs13Elem) -> Result<bool> {
        let _ = s;
        let p = Rational::from_int(-3 * k).checked_div(&Rational::from_int(2))?;
        q.fixes(&p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn q(k: i64, num: i64, den: i64) -> Bs13Elem {
        Bs13Elem::new(big(k), rat(num, den)).unwrap()
    }

    fn b() -> Bs13Elem {
        q(0, 1, 1)
    }

    fn c() -> Bs13Elem {
        q(1, 0, 1)
    }

    #[test]
    fn bs13_shift_must_be_triadic() {
        assert!(Bs13Elem::new(big(0), rat(1, 3)).is_ok());
        assert!(Bs13Elem::new(big(0), rat(1, 2)).is_err());
    }

    #[test]
    fn bs13_defining_relation() {
        // c b c^-1 = b^3
        let lhs = c().compose(&b()).unwrap().compose(&c().invert().unwrap()).unwrap();
        assert_eq!(lhs, q(0, 3, 1));
    }

    #[test]
    fn bs13_inverse_cancels() {
        for e in [b(), c(), q(-2, 5, 9), q(3, -1, 3)] {
            assert!(e.compose(&e.invert().unwrap()).unwrap().is_identity());
            assert!(e.invert().unwrap().compose(&e).unwrap().is_identity());
        }
    }

    #[test]
    fn bs13_normal_form_exponent() {
        // c b = map 3(x + ...) : shift 3, so the b-exponent is 1.
        let e = c().compose(&b()).unwrap();
        assert_eq!(e.shift(), &rat(3, 1));
        assert_eq!(e.b_exp().unwrap(), rat(1, 1));
        // b c = map 3x + 1: b-exponent 1/3.
        let e = b().compose(&c()).unwrap();
        assert_eq!(e.shift(), &rat(1, 1));
        assert_eq!(e.b_exp().unwrap(), rat(1, 3));
    }

    #[test]
    fn chi_of_generators() {
        let n = big(2);
        assert_eq!(chi(&n, &Bs13Elem::identity()).unwrap(), rat(1, 1));
        assert_eq!(chi(&n, &b()).unwrap(), rat(-1, 1));
        assert_eq!(chi(&n, &c()).unwrap(), rat(2, 1));
        assert_eq!(chi(&n, &c().invert().unwrap()).unwrap(), rat(1, 2));
        assert_eq!(chi(&big(-2), &c().compose(&b()).unwrap()).unwrap(), rat(2, 1));
    }

    #[test]
    fn chi_is_a_homomorphism() {
        let n = big(-2);
        let elems = [b(), c(), q(-1, 2, 3), q(2, -5, 9), q(0, -4, 27)];
        for x in &elems {
            for y in &elems {
                let lhs = chi(&n, &x.compose(y).unwrap()).unwrap();
                let rhs = &chi(&n, x).unwrap() * &chi(&n, y).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn gn_relations() {
        // b a b^-1 = a^-1, c a c^-1 = a^n, c b c^-1 = b^3 inside G(n).
        let g = GnGroup::new(big(2)).unwrap();
        let a = (rat(1, 1), Bs13Elem::identity());
        let bb = (Rational::zero(), b());
        let cc = (Rational::zero(), c());
        let conj = |x: &(Rational, Bs13Elem), y: &(Rational, Bs13Elem)| {
            let (s, q) = g.mul(&x.0, &x.1, &y.0, &y.1).unwrap();
            let xi = g.inv(&x.0, &x.1).unwrap();
            g.mul(&s, &q, &xi.0, &xi.1).unwrap()
        };
        assert_eq!(conj(&bb, &a), (rat(-1, 1), Bs13Elem::identity()));
        assert_eq!(conj(&cc, &a), (rat(2, 1), Bs13Elem::identity()));
        assert_eq!(conj(&cc, &bb), (Rational::zero(), q(0, 3, 1)));
    }

    #[test]
    fn gn_inverse_cancels() {
        let g = GnGroup::new(big(-2)).unwrap();
        let elems = [
            (rat(3, 2), q(1, 1, 3)),
            (rat(-1, 4), q(-2, 2, 1)),
            (rat(5, 1), q(0, -1, 9)),
        ];
        for (s, qq) in &elems {
            let (si, qi) = g.inv(s, qq).unwrap();
            let (sp, qp) = g.mul(s, qq, &si, &qi).unwrap();
            assert!(sp.is_zero() && qp.is_identity());
            let (sp, qp) = g.mul(&si, &qi, s, qq).unwrap();
            assert!(sp.is_zero() && qp.is_identity());
        }
    }

    #[test]
    fn gn_membership_ring_depends_on_n() {
        let g = GnGroup::new(big(2)).unwrap();
        assert!(g.contains(&rat(3, 4), &Bs13Elem::identity()));
        assert!(!g.contains(&rat(1, 3), &Bs13Elem::identity()));
        let g = GnGroup::new(big(1)).unwrap();
        assert!(g.contains(&rat(5, 1), &Bs13Elem::identity()));
        assert!(!g.contains(&rat(1, 2), &Bs13Elem::identity()));
    }

    #[test]
    fn stabilizer_membership() {
        let g = GnGroup::new(big(2)).unwrap();
        // H(n, 0): the B(1,3) part fixes 0, i.e. pure dilations.
        assert!(g.member_h(&big(0), &rat(7, 2), &c()).unwrap());
        assert!(!g.member_h(&big(0), &Rational::zero(), &b()).unwrap());
        // gamma beta^k fixes -3k/2: with k = 1, c b = 3x + 3 fixes -3/2.
        let cb = c().compose(&b()).unwrap();
        assert!(g.member_h(&big(1), &Rational::zero(), &cb).unwrap());
        assert!(!g.member_h(&big(0), &Rational::zero(), &cb).unwrap());
        assert!(!g.member_h(&big(2), &Rational::zero(), &cb).unwrap());
    }
}
