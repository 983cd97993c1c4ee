//! Left-invariant orderings presented as sign oracles.
//!
//! An ordering is determined by its positive cone; the oracle reports, for
//! any element, whether it is positive, negative, or the identity. Four
//! constructions are provided:
//!
//! * lexicographic orders along the convex-subgroup chain, one sign per
//!   level (`signs[0]` belongs to the top level);
//! * the one-parameter family on groups acting on the line by affine maps,
//!   indexed by a basepoint `eps` (a rational with a side, or an end of
//!   the line);
//! * reversal;
//! * extensions that combine an ordering of a designated quotient with an
//!   ordering of the corresponding convex subgroup.

pub mod check;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{AffineMap, OrderParam, Rational, Side};
use crate::groups::{Elem, Group};

pub use check::{
    check_cofinal, check_cone_axioms, check_conradian, convex_in_ball, CofinalEntry,
    CofinalReport, ConeReport, ConeViolation, ConradReport, ConradViolation, ConvexReport,
    SignSource, SubgroupSpec,
};

/// The comparison of an element against the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn from_signum(s: i8) -> Sign {
        match s.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// How an ordering computes signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleKind {
    /// Lexicographic comparison along the chain; `signs[0]` orients the
    /// top level, `signs[last]` the bottom one.
    Lex { signs: Vec<i8> },
    /// Comparison of the affine action at a basepoint.
    Smirnov { eps: OrderParam },
    Reverse { of: Box<OrderingOracle> },
    /// Quotient ordering first, subgroup ordering for the kernel.
    Extension {
        level: usize,
        quotient: Box<OrderingOracle>,
        sub: Box<OrderingOracle>,
    },
}

/// A left-invariant ordering of a specific group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingOracle {
    group: Group,
    kind: OracleKind,
}

impl OrderingOracle {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn kind(&self) -> &OracleKind {
        &self.kind
    }

    pub fn sign(&self, x: &Elem) -> Result<Sign> {
        match &self.kind {
            OracleKind::Lex { signs } => {
                let (level, sg) = self.group.lex_level(x)?;
                if level == 0 {
                    return Ok(Sign::Zero);
                }
                let oriented = signs[signs.len() - level] * sg;
                Ok(Sign::from_signum(oriented))
            }
            OracleKind::Smirnov { eps } => {
                let map = self.group.affine(x)?;
                Ok(smirnov_sign(&map, eps))
            }
            OracleKind::Reverse { of } => Ok(of.sign(x)?.flip()),
            OracleKind::Extension {
                level,
                quotient,
                sub,
            } => {
                let image = self.group.project(x, *level)?;
                let upper = quotient.sign(&image)?;
                if upper != Sign::Zero {
                    return Ok(upper);
                }
                sub.sign(&self.group.sub_elem(x, *level)?)
            }
        }
    }

    /// `Less` means `x` comes before `y` in this ordering.
    pub fn compare(&self, x: &Elem, y: &Elem) -> Result<Ordering> {
        let d = self.group.mul(&self.group.inv(x)?, y)?;
        Ok(match self.sign(&d)? {
            Sign::Positive => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Negative => Ordering::Greater,
        })
    }

    pub fn descriptor(&self) -> OrderDescriptor {
        match &self.kind {
            OracleKind::Lex { signs } => {
                let tararin = matches!(&self.group, Group::Tower(t) if t.is_tararin());
                if tararin {
                    OrderDescriptor::Tararin {
                        signs: signs.clone(),
                    }
                } else {
                    OrderDescriptor::Conrad {
                        signs: signs.clone(),
                    }
                }
            }
            OracleKind::Smirnov { eps } => OrderDescriptor::Smirnov { eps: eps.clone() },
            OracleKind::Reverse { of } => OrderDescriptor::Reverse {
                of: Box::new(of.descriptor()),
            },
            OracleKind::Extension {
                level,
                quotient,
                sub,
            } => OrderDescriptor::Extension {
                quotient: Box::new(quotient.descriptor()),
                sub: Box::new(sub.descriptor()),
                level: *level,
            },
        }
    }

    pub fn from_descriptor(group: &Group, d: &OrderDescriptor) -> Result<OrderingOracle> {
        match d {
            OrderDescriptor::Conrad { signs } => make_conrad_lex(group, signs),
            OrderDescriptor::Tararin { signs } => make_tararin_lex(group, signs),
            OrderDescriptor::Smirnov { eps } => make_smirnov(group, eps.clone()),
            OrderDescriptor::Reverse { of } => {
                Ok(make_reverse(OrderingOracle::from_descriptor(group, of)?))
            }
            OrderDescriptor::Extension {
                quotient,
                sub,
                level,
            } => {
                let q = OrderingOracle::from_descriptor(&group.quotient(*level)?, quotient)?;
                let s = OrderingOracle::from_descriptor(&group.subgroup(*level)?, sub)?;
                make_extension(group, *level, q, s)
            }
        }
    }

    pub fn from_json(group: &Group, text: &str) -> Result<OrderingOracle> {
        let d: OrderDescriptor = serde_json::from_str(text)
            .map_err(|e| Error::Descriptor(format!("invalid ordering descriptor: {e}")))?;
        OrderingOracle::from_descriptor(group, &d)
    }

    pub fn descriptor_json(&self) -> String {
        serde_json::to_string(&self.descriptor()).expect("descriptor serializes")
    }
}

/// Sign of an affine map under the basepoint order: positive iff the map
/// moves `eps` up, with ties broken by the side (above: germ to the right
/// of the basepoint; below: to the left) and the ends of the line ordered
/// by eventual behavior.
pub fn smirnov_sign(map: &AffineMap, eps: &OrderParam) -> Sign {
    if map.is_identity() {
        return Sign::Zero;
    }
    let one = Rational::one();
    let expansion = (map.slope() - &one).signum();
    match eps {
        OrderParam::PlusInfinity => {
            if expansion != 0 {
                Sign::from_signum(expansion)
            } else {
                Sign::from_signum(map.shift().signum())
            }
        }
        OrderParam::MinusInfinity => {
            if expansion != 0 {
                Sign::from_signum(-expansion)
            } else {
                Sign::from_signum(map.shift().signum())
            }
        }
        OrderParam::Finite { value, side } => {
            let moved = &crate::exact::affine_apply(map, value) - value;
            if !moved.is_zero() {
                return Sign::from_signum(moved.signum());
            }
            match side {
                Side::Above => Sign::from_signum(expansion),
                Side::Below => Sign::from_signum(-expansion),
            }
        }
    }
}

fn validate_signs(group: &Group, signs: &[i8]) -> Result<Vec<i8>> {
    let expected = group.series_length();
    if signs.len() != expected {
        return Err(Error::SignLength {
            got: signs.len(),
            expected,
        });
    }
    for &s in signs {
        if s != 1 && s != -1 {
            return Err(Error::Precondition(format!(
                "sign entries must be 1 or -1, got {s}"
            )));
        }
    }
    Ok(signs.to_vec())
}

/// The lexicographic ordering with one sign per chain level.
pub fn make_conrad_lex(group: &Group, signs: &[i8]) -> Result<OrderingOracle> {
    Ok(OrderingOracle {
        group: group.clone(),
        kind: OracleKind::Lex {
            signs: validate_signs(group, signs)?,
        },
    })
}

/// The lexicographic ordering of a tower all of whose consecutive
/// conjugation signs are -1; such groups carry only these orderings.
pub fn make_tararin_lex(group: &Group, signs: &[i8]) -> Result<OrderingOracle> {
    match group {
        Group::Tower(t) if t.is_tararin() => make_conrad_lex(group, signs),
        Group::Tower(_) => Err(Error::Precondition(
            "tower is not of the finitely-orderable shape: some consecutive conjugation sign is not -1"
                .into(),
        )),
        _ => Err(Error::Unsupported(format!(
            "the finitely-orderable lexicographic constructor applies to towers, not {}",
            group.family_name()
        ))),
    }
}

/// The basepoint ordering at `eps` for groups with an affine action.
pub fn make_smirnov(group: &Group, eps: OrderParam) -> Result<OrderingOracle> {
    match group {
        Group::F1(_) | Group::B13 | Group::RankOne(_) => Ok(OrderingOracle {
            group: group.clone(),
            kind: OracleKind::Smirnov { eps },
        }),
        _ => Err(Error::Unsupported(format!(
            "the {} family has no affine action to order by a basepoint",
            group.family_name()
        ))),
    }
}

pub fn make_reverse(inner: OrderingOracle) -> OrderingOracle {
    OrderingOracle {
        group: inner.group.clone(),
        kind: OracleKind::Reverse {
            of: Box::new(inner),
        },
    }
}

/// Orders `G` by a designated quotient first, falling back to the convex
/// subgroup on the kernel.
pub fn make_extension(
    group: &Group,
    level: usize,
    quotient: OrderingOracle,
    sub: OrderingOracle,
) -> Result<OrderingOracle> {
    let expected_q = group.quotient(level)?;
    if quotient.group != expected_q {
        return Err(Error::Precondition(format!(
            "quotient ordering lives on {}, expected {}",
            quotient.group.descriptor_json(),
            expected_q.descriptor_json()
        )));
    }
    let expected_s = group.subgroup(level)?;
    if sub.group != expected_s {
        return Err(Error::Precondition(format!(
            "subgroup ordering lives on {}, expected {}",
            sub.group.descriptor_json(),
            expected_s.descriptor_json()
        )));
    }
    Ok(OrderingOracle {
        group: group.clone(),
        kind: OracleKind::Extension {
            level,
            quotient: Box::new(quotient),
            sub: Box::new(sub),
        },
    })
}

/// The ordering induced on the level-`j` convex subgroup.
pub fn restrict(oracle: &OrderingOracle, level: usize) -> Result<OrderingOracle> {
    let sub_group = oracle.group.subgroup(level)?;
    match &oracle.kind {
        OracleKind::Lex { signs } => {
            let sub_signs = signs[signs.len() - level..].to_vec();
            make_conrad_lex(&sub_group, &sub_signs)
        }
        // Restricted to the translation subgroup, every basepoint order
        // is the natural order of the shift.
        OracleKind::Smirnov { .. } => make_conrad_lex(&sub_group, &[1]),
        OracleKind::Reverse { of } => Ok(make_reverse(restrict(of, level)?)),
        OracleKind::Extension {
            level: own,
            quotient: _,
            sub,
        } => {
            if level == *own {
                Ok(sub.as_ref().clone())
            } else if level < *own {
                restrict(sub, level)
            } else {
                Err(Error::Unsupported(
                    "restriction above the designated level of an extension ordering".into(),
                ))
            }
        }
    }
}

/// The ordering induced on the quotient by the level-`j` subgroup,
/// provided that subgroup is convex; convexity is verified on a ball of
/// the given radius and a violation is reported as an error.
pub fn quotient_order(
    oracle: &OrderingOracle,
    level: usize,
    check_radius: u32,
) -> Result<OrderingOracle> {
    let quotient_group = oracle.group.quotient(level)?;
    let report = convex_in_ball(oracle, &SubgroupSpec::Level(level), check_radius)?;
    if let Some(v) = report.violation {
        let name = |e: &Elem| -> Result<String> {
            let s = oracle.group.elem_string(e)?;
            Ok(if s.is_empty() { "id".to_string() } else { s })
        };
        return Err(Error::NonConvex {
            radius: check_radius,
            x: name(&v.0)?,
            g: name(&v.1)?,
            y: name(&v.2)?,
        });
    }
    match &oracle.kind {
        OracleKind::Lex { signs } => {
            let upper = signs[..signs.len() - level].to_vec();
            make_conrad_lex(&quotient_group, &upper)
        }
        OracleKind::Smirnov { eps } => match eps {
            OrderParam::PlusInfinity => make_conrad_lex(&quotient_group, &[1]),
            OrderParam::MinusInfinity => make_conrad_lex(&quotient_group, &[-1]),
            OrderParam::Finite { .. } => Err(Error::Precondition(format!(
                "translations are cofinal under a finite basepoint ordering, so the bottom \
                 subgroup is not convex (no witness within radius {check_radius})"
            ))),
        },
        OracleKind::Reverse { of } => Ok(make_reverse(quotient_order(of, level, check_radius)?)),
        OracleKind::Extension {
            level: own,
            quotient,
            ..
        } => {
            if level == *own {
                Ok(quotient.as_ref().clone())
            } else {
                Err(Error::Unsupported(
                    "quotient at a level other than the designated one of an extension ordering"
                        .into(),
                ))
            }
        }
    }
}

/// Serialized, group-independent form of an ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OrderDescriptor {
    Conrad {
        signs: Vec<i8>,
    },
    Tararin {
        signs: Vec<i8>,
    },
    Smirnov {
        eps: OrderParam,
    },
    Reverse {
        of: Box<OrderDescriptor>,
    },
    Extension {
        quotient: Box<OrderDescriptor>,
        sub: Box<OrderDescriptor>,
        #[serde(default = "default_level", skip_serializing_if = "is_default_level")]
        level: usize,
    },
}

fn default_level() -> usize {
    1
}

#[allow(clippy::trivially_copy_pass_by_ref)]
fn is_default_level(level: &usize) -> bool {
    *level == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Ball;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn f1_2() -> Group {
        Group::f1(rat(2, 1)).unwrap()
    }

    fn above(n: i64) -> OrderParam {
        OrderParam::finite(rat(n, 1), Side::Above)
    }

    fn below(n: i64) -> OrderParam {
        OrderParam::finite(rat(n, 1), Side::Below)
    }

    /// The four sign choices on the two-level chain of `F1`.
    fn c(index: usize) -> OrderingOracle {
        let signs: [i8; 2] = match index {
            1 => [1, 1],
            2 => [-1, 1],
            3 => [-1, -1],
            4 => [1, -1],
            _ => unreachable!(),
        };
        make_conrad_lex(&f1_2(), &signs).unwrap()
    }

    /// Closed-form signs for the four lexicographic orderings of `F1`,
    /// written out the way the orderings are usually specified.
    fn closed_form(index: usize, k: i64, s: &Rational) -> Sign {
        let pos = match index {
            1 => k >= 1 || (k == 0 && s.is_positive()),
            2 => k <= -1 || (k == 0 && s.is_positive()),
            3 => k >= 1 || (k == 0 && s.is_positive()),
            4 => k <= -1 || (k == 0 && s.is_positive()),
            _ => unreachable!(),
        };
        if k == 0 && s.is_zero() {
            Sign::Zero
        } else if index == 3 || index == 4 {
            // 3 and 4 are the reversals of 1 and 2.
            if pos {
                Sign::Negative
            } else {
                Sign::Positive
            }
        } else if pos {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn coords(x: &Elem) -> (i64, Rational) {
        match x {
            Elem::F1 { k, s } => (i64::try_from(k).unwrap(), s.clone()),
            _ => panic!("not an F1 element"),
        }
    }

    #[test]
    fn lex_signs_match_closed_forms() {
        let ball = Ball::new(&f1_2(), 4).unwrap();
        for index in 1..=4 {
            let oracle = c(index);
            for entry in ball.iter() {
                let (k, s) = coords(&entry.elem);
                assert_eq!(
                    oracle.sign(&entry.elem).unwrap(),
                    closed_form(index, k, &s),
                    "ordering {index} at {}",
                    entry.word
                );
            }
        }
    }

    #[test]
    fn reversal_pairs() {
        let ball = Ball::new(&f1_2(), 4).unwrap();
        let pairs = [(3usize, 1usize), (4, 2)];
        for (rev_index, base) in pairs {
            let direct = c(rev_index);
            let reversed = make_reverse(c(base));
            for entry in ball.iter() {
                assert_eq!(
                    direct.sign(&entry.elem).unwrap(),
                    reversed.sign(&entry.elem).unwrap()
                );
            }
        }
        let twice = make_reverse(make_reverse(c(1)));
        for entry in ball.iter() {
            assert_eq!(
                twice.sign(&entry.elem).unwrap(),
                c(1).sign(&entry.elem).unwrap()
            );
        }
    }

    #[test]
    fn basepoint_signs_at_eleven() {
        let g = f1_2();
        let oracle = make_smirnov(&g, above(11)).unwrap();
        let sign_of = |w: &str| oracle.sign(&g.eval_text(w).unwrap()).unwrap();
        assert_eq!(sign_of("a"), Sign::Positive);
        assert_eq!(sign_of("b"), Sign::Positive);
        assert_eq!(sign_of("b^-1"), Sign::Negative);
        assert_eq!(sign_of(""), Sign::Zero);
        // b a^-6 is the map 2x - 12, which fixes 12 and pulls 11 down.
        assert_eq!(sign_of("b a^-6"), Sign::Negative);
        assert_eq!(sign_of("b a^-5"), Sign::Positive);
    }

    #[test]
    fn basepoint_side_resolves_stabilizers() {
        let g = f1_2();
        let at_zero_above = make_smirnov(&g, above(0)).unwrap();
        let at_zero_below = make_smirnov(&g, below(0)).unwrap();
        let b = g.eval_text("b").unwrap();
        let b_inv = g.eval_text("b^-1").unwrap();
        // b fixes 0; expanding maps push the right germ up.
        assert_eq!(at_zero_above.sign(&b).unwrap(), Sign::Positive);
        assert_eq!(at_zero_above.sign(&b_inv).unwrap(), Sign::Negative);
        assert_eq!(at_zero_below.sign(&b).unwrap(), Sign::Negative);
        assert_eq!(at_zero_below.sign(&b_inv).unwrap(), Sign::Positive);
        let a = g.eval_text("a").unwrap();
        assert_eq!(at_zero_above.sign(&a).unwrap(), Sign::Positive);
        assert_eq!(at_zero_below.sign(&a).unwrap(), Sign::Positive);
    }

    #[test]
    fn basepoints_at_the_ends_give_the_two_plain_lex_orders() {
        let g = f1_2();
        let plus = make_smirnov(&g, OrderParam::PlusInfinity).unwrap();
        let minus = make_smirnov(&g, OrderParam::MinusInfinity).unwrap();
        let ball = Ball::new(&g, 5).unwrap();
        for entry in ball.iter() {
            assert_eq!(
                plus.sign(&entry.elem).unwrap(),
                c(1).sign(&entry.elem).unwrap(),
                "at {}",
                entry.word
            );
            assert_eq!(
                minus.sign(&entry.elem).unwrap(),
                c(2).sign(&entry.elem).unwrap(),
                "at {}",
                entry.word
            );
        }
    }

    #[test]
    fn compare_orders_elements() {
        let g = f1_2();
        let oracle = make_smirnov(&g, above(0)).unwrap();
        let a = g.eval_text("a").unwrap();
        let b = g.eval_text("b").unwrap();
        // Near 0 the translation by 1 dominates the dilation.
        assert_eq!(oracle.compare(&b, &a).unwrap(), Ordering::Less);
        assert_eq!(oracle.compare(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(oracle.compare(&a, &a).unwrap(), Ordering::Equal);
    }

    #[test]
    fn extension_rebuilds_plain_lex() {
        let g = f1_2();
        let quotient = make_conrad_lex(&g.quotient(1).unwrap(), &[1]).unwrap();
        let sub = make_conrad_lex(&g.subgroup(1).unwrap(), &[1]).unwrap();
        let ext = make_extension(&g, 1, quotient, sub).unwrap();
        let ball = Ball::new(&g, 4).unwrap();
        for entry in ball.iter() {
            assert_eq!(
                ext.sign(&entry.elem).unwrap(),
                c(1).sign(&entry.elem).unwrap()
            );
        }
    }

    #[test]
    fn extension_checks_component_groups() {
        let g = f1_2();
        let wrong_quotient = make_conrad_lex(&g.subgroup(1).unwrap(), &[1]).unwrap();
        let sub = make_conrad_lex(&g.subgroup(1).unwrap(), &[1]).unwrap();
        assert!(matches!(
            make_extension(&g, 1, wrong_quotient, sub),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn restriction_and_quotient_of_lex_orders() {
        let g = Group::gn(BigInt::from(2)).unwrap();
        let oracle = make_conrad_lex(&g, &[1, -1, 1]).unwrap();
        let restricted = restrict(&oracle, 1).unwrap();
        assert_eq!(restricted.group(), &g.subgroup(1).unwrap());
        assert!(matches!(restricted.kind(), OracleKind::Lex { signs } if signs == &[1]));
        let quotient = quotient_order(&oracle, 1, 3).unwrap();
        assert_eq!(quotient.group(), &Group::B13);
        assert!(matches!(quotient.kind(), OracleKind::Lex { signs } if signs == &[1, -1]));
        // The quotient ordering agrees with the original on non-kernel elements.
        let ball = Ball::new(&g, 3).unwrap();
        for entry in ball.iter() {
            let image = g.project(&entry.elem, 1).unwrap();
            if !Group::B13.is_identity(&image) {
                assert_eq!(
                    quotient.sign(&image).unwrap(),
                    oracle.sign(&entry.elem).unwrap()
                );
            }
        }
    }

    #[test]
    fn restriction_of_basepoint_orders_is_the_natural_order() {
        let g = f1_2();
        for eps in [above(0), below(7), OrderParam::PlusInfinity] {
            let oracle = make_smirnov(&g, eps).unwrap();
            let restricted = restrict(&oracle, 1).unwrap();
            for s in [rat(1, 2), rat(-3, 4), rat(5, 1)] {
                let x = Elem::RankOne(s.clone());
                let direct = oracle
                    .sign(&Elem::F1 {
                        k: BigInt::ZERO,
                        s,
                    })
                    .unwrap();
                assert_eq!(restricted.sign(&x).unwrap(), direct);
            }
        }
    }

    #[test]
    fn basepoint_orders_have_no_convex_bottom_level() {
        let g = f1_2();
        let oracle = make_smirnov(&g, above(0)).unwrap();
        match quotient_order(&oracle, 1, 3) {
            Err(Error::NonConvex { x, g, y, .. }) => {
                assert_eq!((x.as_str(), g.as_str(), y.as_str()), ("id", "b", "a"));
            }
            other => panic!("expected a convexity failure, got {other:?}"),
        }
    }

    #[test]
    fn reverse_of_restriction_commutes() {
        let g = f1_2();
        let oracle = make_reverse(make_conrad_lex(&g, &[1, -1]).unwrap());
        let restricted = restrict(&oracle, 1).unwrap();
        let x = Elem::RankOne(rat(3, 2));
        assert_eq!(restricted.sign(&x).unwrap(), Sign::Positive);
        let q = quotient_order(&oracle, 1, 3).unwrap();
        assert_eq!(q.sign(&Elem::RankOne(rat(1, 1))).unwrap(), Sign::Negative);
    }

    #[test]
    fn constructor_validation() {
        let g = f1_2();
        assert!(matches!(
            make_conrad_lex(&g, &[1]),
            Err(Error::SignLength {
                got: 1,
                expected: 2
            })
        ));
        assert!(matches!(
            make_conrad_lex(&g, &[2, 1]),
            Err(Error::Precondition(_))
        ));
        assert!(make_tararin_lex(&g, &[1, 1]).is_err());
        assert!(make_tararin_lex(&Group::klein_bottle(), &[-1, 1]).is_ok());
        assert!(make_tararin_lex(
            &Group::tower(2, [((1, 2), 1)].into_iter().collect()).unwrap(),
            &[1, 1]
        )
        .is_err());
        assert!(make_smirnov(&Group::klein_bottle(), above(0)).is_err());
        assert!(make_smirnov(&Group::B13, above(0)).is_ok());
    }

    #[test]
    fn descriptors_round_trip() {
        let g = f1_2();
        let klein = Group::klein_bottle();
        let cases: Vec<(Group, OrderingOracle)> = vec![
            (g.clone(), c(2)),
            (g.clone(), make_smirnov(&g, above(11)).unwrap()),
            (g.clone(), make_reverse(c(1))),
            (klein.clone(), make_tararin_lex(&klein, &[-1, -1]).unwrap()),
            (g.clone(), {
                let q = make_conrad_lex(&g.quotient(1).unwrap(), &[1]).unwrap();
                let s = make_conrad_lex(&g.subgroup(1).unwrap(), &[-1]).unwrap();
                make_extension(&g, 1, q, s).unwrap()
            }),
        ];
        for (group, oracle) in cases {
            let text = oracle.descriptor_json();
            let back = OrderingOracle::from_json(&group, &text).unwrap();
            assert_eq!(back, oracle, "{text}");
        }
    }

    #[test]
    fn descriptor_formats_are_stable() {
        let g = f1_2();
        assert_eq!(c(2).descriptor_json(), r#"{"kind":"conrad","signs":[-1,1]}"#);
        let klein = Group::klein_bottle();
        let t = make_conrad_lex(&klein, &[-1, 1]).unwrap();
        assert_eq!(
            t.descriptor_json(),
            r#"{"kind":"tararin","signs":[-1,1]}"#
        );
        let s = make_smirnov(&g, above(11)).unwrap();
        assert_eq!(
            s.descriptor_json(),
            r#"{"kind":"smirnov","eps":{"value":"11","side":"above"}}"#
        );
        let s = make_smirnov(&g, OrderParam::PlusInfinity).unwrap();
        assert_eq!(s.descriptor_json(), r#"{"kind":"smirnov","eps":"+inf"}"#);
        let r = make_reverse(c(1));
        assert_eq!(
            r.descriptor_json(),
            r#"{"kind":"reverse","of":{"kind":"conrad","signs":[1,1]}}"#
        );
        let q = make_conrad_lex(&g.quotient(1).unwrap(), &[1]).unwrap();
        let sb = make_conrad_lex(&g.subgroup(1).unwrap(), &[1]).unwrap();
        let e = make_extension(&g, 1, q, sb).unwrap();
        assert_eq!(
            e.descriptor_json(),
            r#"{"kind":"extension","quotient":{"kind":"conrad","signs":[1]},"sub":{"kind":"conrad","signs":[1]}}"#
        );
    }

    #[test]
    fn klein_lex_signs() {
        let klein = Group::klein_bottle();
        let oracle = make_tararin_lex(&klein, &[1, -1]).unwrap();
        let sign_of = |w: &str| oracle.sign(&klein.eval_text(w).unwrap()).unwrap();
        assert_eq!(sign_of("a2"), Sign::Positive);
        assert_eq!(sign_of("a2^-1"), Sign::Negative);
        assert_eq!(sign_of("a1"), Sign::Negative);
        assert_eq!(sign_of("a1^-1"), Sign::Positive);
        assert_eq!(sign_of("a2 a1^5"), Sign::Positive);
    }
}
