//! Counting and classification along a rational series.
//!
//! A series descriptor records, for each pair of levels i < j, the scalar
//! by which the level-j generator conjugates the level-i quotient. Pairs
//! left out act trivially (scalar 1). The counting theorems read off the
//! consecutive scalars: all different from 1 gives exactly 2^n Conradian
//! orderings, all negative gives exactly 2^n left-orderings overall.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::groups::{parse_pair_key, Group};
use crate::orders::{make_conrad_lex, make_tararin_lex, OrderingOracle};

/// Scalar conjugation data for a finite rational series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesDescriptor {
    n: usize,
    scalars: BTreeMap<(usize, usize), Rational>,
}

#[derive(Serialize, Deserialize)]
struct SeriesWire {
    n: usize,
    #[serde(default)]
    scalars: BTreeMap<String, Rational>,
}

impl SeriesDescriptor {
    /// Builds a descriptor of length `n`. Keys must satisfy
    /// `1 <= i < j <= n` and scalars must be nonzero; omitted pairs mean
    /// trivial action.
    pub fn new(n: usize, scalars: BTreeMap<(usize, usize), Rational>) -> Result<SeriesDescriptor> {
        if n == 0 {
            return Err(Error::Series("series length must be at least 1".into()));
        }
        for (&(i, j), s) in &scalars {
            if i == 0 || i >= j || j > n {
                return Err(Error::Series(format!(
                    "scalar key ({i},{j}) is out of range for a series of length {n}"
                )));
            }
            if s.is_zero() {
                return Err(Error::Series(format!(
                    "scalar at ({i},{j}) is zero; conjugation scalars must be nonzero"
                )));
            }
        }
        Ok(SeriesDescriptor { n, scalars })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Scalar action of level `j` on level `i`; omitted pairs are trivial.
    pub fn scalar(&self, i: usize, j: usize) -> Rational {
        self.scalars
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::one)
    }

    pub fn scalars(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.scalars
    }

    pub fn from_json(text: &str) -> Result<SeriesDescriptor> {
        let wire: SeriesWire =
            serde_json::from_str(text).map_err(|e| Error::Descriptor(e.to_string()))?;
        let mut scalars = BTreeMap::new();
        for (key, value) in wire.scalars {
            scalars.insert(parse_pair_key(&key)?, value);
        }
        SeriesDescriptor::new(wire.n, scalars)
    }

    pub fn descriptor_json(&self) -> String {
        let wire = SeriesWire {
            n: self.n,
            scalars: self
                .scalars
                .iter()
                .map(|(&(i, j), s)| (format!("{i},{j}"), s.clone()))
                .collect(),
        };
        serde_json::to_string(&wire).expect("series descriptors serialize")
    }
}

/// A triple of levels whose scalars cannot coexist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Action of level k on level j (the nontrivial one from above).
    pub outer: Rational,
    /// Action of level j on level i (the one that must be a unit).
    pub inner: Rational,
}

impl std::fmt::Display for SeriesViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "levels ({},{},{}): level {} acts on level {} by {}, so level {} may only act on \
             level {} by 1 or -1, not {}; no group with finitely many Conradian orderings \
             carries such a series",
            self.i, self.j, self.k, self.k, self.j, self.outer, self.j, self.i, self.inner
        )
    }
}

/// Outcome of the character-consistency check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub violation: Option<SeriesViolation>,
}

impl SeriesReport {
    pub fn valid(&self) -> bool {
        self.violation.is_none()
    }
}

fn is_unit(s: &Rational) -> bool {
    s.is_one() || (-s).is_one()
}

/// Checks character consistency: whenever level k acts nontrivially on
/// level j, the action of level j further down must be by a unit.
pub fn validate_series(d: &SeriesDescriptor) -> SeriesReport {
    for k in 3..=d.n() {
        for j in 2..k {
            let outer = d.scalar(j, k);
            if outer.is_one() {
                continue;
            }
            for i in 1..j {
                let inner = d.scalar(i, j);
                if !is_unit(&inner) {
                    return SeriesReport {
                        violation: Some(SeriesViolation {
                            i,
                            j,
                            k,
                            outer,
                            inner,
                        }),
                    };
                }
            }
        }
    }
    SeriesReport { violation: None }
}

fn require_valid(d: &SeriesDescriptor) -> Result<()> {
    match validate_series(d).violation {
        None => Ok(()),
        Some(v) => Err(Error::Series(format!("inconsistent series: {v}"))),
    }
}

/// An ordering count: exactly `2^n`, or a continuum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderCount {
    Finite(BigInt),
    Infinite,
}

impl OrderCount {
    pub fn is_finite(&self) -> bool {
        matches!(self, OrderCount::Finite(_))
    }
}

fn two_pow(n: usize) -> BigInt {
    BigInt::from(1) << n
}

/// First consecutive scalar failing `keep`, if any.
fn consecutive_failure(
    d: &SeriesDescriptor,
    keep: impl Fn(&Rational) -> bool,
) -> Option<(usize, Rational)> {
    (1..d.n()).find_map(|i| {
        let s = d.scalar(i, i + 1);
        if keep(&s) {
            None
        } else {
            Some((i, s))
        }
    })
}

/// `2^n` when every consecutive scalar differs from 1, else a continuum.
pub fn count_c_orderings(d: &SeriesDescriptor) -> Result<OrderCount> {
    require_valid(d)?;
    Ok(match consecutive_failure(d, |s| !s.is_one()) {
        None => OrderCount::Finite(two_pow(d.n())),
        Some(_) => OrderCount::Infinite,
    })
}

/// `2^n` when every consecutive scalar is negative, else a continuum.
pub fn count_left_orderings(d: &SeriesDescriptor) -> Result<OrderCount> {
    require_valid(d)?;
    Ok(match consecutive_failure(d, |s| s.is_negative()) {
        None => OrderCount::Finite(two_pow(d.n())),
        Some(_) => OrderCount::Infinite,
    })
}

/// Where a series descriptor falls in the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Finitely many left-orderings altogether.
    Tararin,
    /// Finitely many Conradian orderings, yet no isolated left-orderings.
    FiniteCNoIsolated,
    /// A continuum of Conradian orderings; the dichotomy says nothing.
    InfiniteC,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Tararin => "tararin",
            Verdict::FiniteCNoIsolated => "finite_c_no_isolated",
            Verdict::InfiniteC => "infinite_c",
        })
    }
}

pub fn verdict(d: &SeriesDescriptor) -> Result<Verdict> {
    if count_left_orderings(d)?.is_finite() {
        Ok(Verdict::Tararin)
    } else if count_c_orderings(d)?.is_finite() {
        Ok(Verdict::FiniteCNoIsolated)
    } else {
        Ok(Verdict::InfiniteC)
    }
}

/// The rational-series data of a concrete group.
pub fn series_of_group(group: &Group) -> SeriesDescriptor {
    let mut scalars = BTreeMap::new();
    let n = match group {
        Group::F1(g) => {
            scalars.insert((1, 2), g.r().clone());
            2
        }
        Group::Tower(t) => {
            for (&(i, j), &s) in t.signs() {
                scalars.insert((i, j), Rational::from_int(s as i64));
            }
            t.n()
        }
        Group::Gn(g) => {
            scalars.insert((1, 2), Rational::from_int(-1));
            scalars.insert((2, 3), Rational::from_int(3));
            scalars.insert((1, 3), Rational::from_int(g.n().clone()));
            3
        }
        Group::B13 => {
            scalars.insert((1, 2), Rational::from_int(3));
            2
        }
        Group::RankOne(_) => 1,
    };
    SeriesDescriptor::new(n, scalars).expect("group series data is well formed")
}

/// Which family of orderings to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderClass {
    Left,
    Conradian,
}

/// All `2^n` lexicographic orderings of the group, in sign-vector order
/// with `+1` before `-1`.
///
/// `Left` demands that these are *all* left-orderings of the group;
/// `Conradian` only that the Conradian count is finite.
pub fn enum_orderings(group: &Group, class: OrderClass) -> Result<Vec<OrderingOracle>> {
    let d = series_of_group(group);
    require_valid(&d)?;
    match class {
        OrderClass::Left => {
            if let Some((i, s)) = consecutive_failure(&d, |s| s.is_negative()) {
                return Err(Error::InfiniteFamily(format!(
                    "left-orderings form a continuum: the quotient over levels {}..{} has \
                     scalar {s}, which is not negative, so it is bi-orderable",
                    i,
                    i + 2
                )));
            }
        }
        OrderClass::Conradian => {
            if let Some((i, s)) = consecutive_failure(&d, |s| !s.is_one()) {
                return Err(Error::InfiniteFamily(format!(
                    "Conradian orderings form a continuum: the quotient over levels {}..{} \
                     has scalar {s}, so it is Abelian of rank two",
                    i,
                    i + 2
                )));
            }
        }
    }
    let n = d.n();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1u32 << n) {
        let signs: Vec<i8> = (0..n)
            .map(|i| if mask & (1 << (n - 1 - i)) != 0 { -1 } else { 1 })
            .collect();
        let oracle = match class {
            OrderClass::Left => make_tararin_lex(group, &signs)?,
            OrderClass::Conradian => make_conrad_lex(group, &signs)?,
        };
        out.push(oracle);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::Sign;

    fn rat(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn series(n: usize, entries: &[((usize, usize), i64)]) -> SeriesDescriptor {
        let scalars = entries
            .iter()
            .map(|&(k, v)| (k, rat(v)))
            .collect();
        SeriesDescriptor::new(n, scalars).unwrap()
    }

    fn count_pair(d: &SeriesDescriptor) -> (OrderCount, OrderCount) {
        (
            count_c_orderings(d).unwrap(),
            count_left_orderings(d).unwrap(),
        )
    }

    #[test]
    fn group_series_read_off_the_conjugation_scalars() {
        let f1 = Group::f1(rat(2)).unwrap();
        let d = series_of_group(&f1);
        assert_eq!(d.n(), 2);
        assert_eq!(d.scalar(1, 2), rat(2));

        let flipped = Group::f1(Rational::new(1, 3).unwrap()).unwrap();
        assert_eq!(series_of_group(&flipped).scalar(1, 2), rat(3));

        let g2 = Group::gn(BigInt::from(2)).unwrap();
        let d = series_of_group(&g2);
        assert_eq!(d.n(), 3);
        assert_eq!(d.scalar(1, 2), rat(-1));
        assert_eq!(d.scalar(2, 3), rat(3));
        assert_eq!(d.scalar(1, 3), rat(2));

        assert_eq!(series_of_group(&Group::B13).scalar(1, 2), rat(3));
        assert_eq!(series_of_group(&Group::klein_bottle()).scalar(1, 2), rat(-1));

        let z = Group::rank_one(BigInt::from(5)).unwrap();
        let d = series_of_group(&z);
        assert_eq!(d.n(), 1);
        assert!(d.scalars().is_empty());
    }

    #[test]
    fn character_consistency_accepts_the_supported_groups() {
        for group in [
            Group::f1(rat(2)).unwrap(),
            Group::gn(BigInt::from(2)).unwrap(),
            Group::gn(BigInt::from(-7)).unwrap(),
            Group::B13,
            Group::klein_bottle(),
            Group::rank_one(BigInt::from(1)).unwrap(),
        ] {
            assert!(validate_series(&series_of_group(&group)).valid());
        }
        assert!(validate_series(&series(2, &[((1, 2), 7)])).valid());
    }

    #[test]
    fn nonunit_action_below_a_twisted_level_is_rejected() {
        let d = series(3, &[((1, 2), 2), ((2, 3), 3)]);
        let report = validate_series(&d);
        let v = report.violation.unwrap();
        assert_eq!((v.i, v.j, v.k), (1, 2, 3));
        assert_eq!(v.outer, rat(3));
        assert_eq!(v.inner, rat(2));
        assert!(v.to_string().contains("levels (1,2,3)"));

        assert!(matches!(count_c_orderings(&d), Err(Error::Series(_))));
        assert!(matches!(verdict(&d), Err(Error::Series(_))));
    }

    #[test]
    fn structural_errors_are_rejected_at_construction() {
        assert!(matches!(
            SeriesDescriptor::new(0, BTreeMap::new()),
            Err(Error::Series(_))
        ));
        let mut zero = BTreeMap::new();
        zero.insert((1, 2), Rational::zero());
        assert!(matches!(
            SeriesDescriptor::new(2, zero),
            Err(Error::Series(_))
        ));
        let mut off = BTreeMap::new();
        off.insert((2, 2), rat(3));
        assert!(matches!(
            SeriesDescriptor::new(3, off),
            Err(Error::Series(_))
        ));
        let mut high = BTreeMap::new();
        high.insert((1, 4), rat(3));
        assert!(matches!(
            SeriesDescriptor::new(3, high),
            Err(Error::Series(_))
        ));
    }

    #[test]
    fn counts_follow_the_consecutive_scalars() {
        let f1 = series(2, &[((1, 2), 2)]);
        assert_eq!(
            count_pair(&f1),
            (OrderCount::Finite(BigInt::from(4)), OrderCount::Infinite)
        );

        let klein = series(2, &[((1, 2), -1)]);
        assert_eq!(
            count_pair(&klein),
            (
                OrderCount::Finite(BigInt::from(4)),
                OrderCount::Finite(BigInt::from(4))
            )
        );

        let g2 = series_of_group(&Group::gn(BigInt::from(2)).unwrap());
        assert_eq!(
            count_pair(&g2),
            (OrderCount::Finite(BigInt::from(8)), OrderCount::Infinite)
        );

        let abelian = series(2, &[((1, 2), 1)]);
        assert_eq!(count_pair(&abelian), (OrderCount::Infinite, OrderCount::Infinite));

        let mixed = series(3, &[((1, 2), 1), ((2, 3), -1)]);
        assert_eq!(count_pair(&mixed), (OrderCount::Infinite, OrderCount::Infinite));
    }

    #[test]
    fn finite_left_counts_imply_matching_conradian_counts() {
        for d in [
            series(2, &[((1, 2), -1)]),
            series(3, &[((1, 2), -1), ((2, 3), -1), ((1, 3), -1)]),
            series(1, &[]),
        ] {
            let (c, lo) = count_pair(&d);
            if let OrderCount::Finite(k) = &lo {
                assert_eq!(c, OrderCount::Finite(k.clone()));
            }
        }
    }

    #[test]
    fn verdicts_cover_the_trichotomy() {
        assert_eq!(verdict(&series(2, &[((1, 2), -1)])).unwrap(), Verdict::Tararin);
        assert_eq!(
            verdict(&series(2, &[((1, 2), 2)])).unwrap(),
            Verdict::FiniteCNoIsolated
        );
        assert_eq!(
            verdict(&series_of_group(&Group::gn(BigInt::from(2)).unwrap())).unwrap(),
            Verdict::FiniteCNoIsolated
        );
        assert_eq!(
            verdict(&series(2, &[((1, 2), 1)])).unwrap(),
            Verdict::InfiniteC
        );
        assert_eq!(
            verdict(&series(3, &[((1, 2), 1), ((2, 3), -1)])).unwrap(),
            Verdict::InfiniteC
        );
        assert_eq!(Verdict::Tararin.to_string(), "tararin");
        assert_eq!(Verdict::FiniteCNoIsolated.to_string(), "finite_c_no_isolated");
        assert_eq!(Verdict::InfiniteC.to_string(), "infinite_c");
    }

    #[test]
    fn enumeration_lists_the_full_sign_vector_family() {
        let klein = Group::klein_bottle();
        let left = enum_orderings(&klein, OrderClass::Left).unwrap();
        assert_eq!(left.len(), 4);
        let a1 = klein.eval_text("a1").unwrap();
        let a2 = klein.eval_text("a2").unwrap();
        let mut signatures = Vec::new();
        for o in &left {
            signatures.push((
                o.sign(&a2).unwrap().is_positive(),
                o.sign(&a1).unwrap().is_positive(),
            ));
        }
        signatures.sort();
        signatures.dedup();
        assert_eq!(signatures.len(), 4);
        assert_eq!(
            left[0].sign(&a2).unwrap(),
            Sign::Positive,
            "plus vectors come first"
        );

        let f1 = Group::f1(rat(2)).unwrap();
        let conradian = enum_orderings(&f1, OrderClass::Conradian).unwrap();
        assert_eq!(conradian.len(), 4);
        for pair in conradian.windows(2) {
            assert_ne!(pair[0], pair[1]);
        }

        let g2 = Group::gn(BigInt::from(2)).unwrap();
        assert_eq!(enum_orderings(&g2, OrderClass::Conradian).unwrap().len(), 8);

        let z = Group::rank_one(BigInt::from(2)).unwrap();
        assert_eq!(enum_orderings(&z, OrderClass::Conradian).unwrap().len(), 2);
    }

    #[test]
    fn infinite_families_refuse_to_enumerate() {
        let f1 = Group::f1(rat(2)).unwrap();
        let err = enum_orderings(&f1, OrderClass::Left).unwrap_err();
        match err {
            Error::InfiniteFamily(msg) => {
                assert!(msg.contains("levels 1..3"));
                assert!(msg.contains("scalar 2"));
            }
            other => panic!("expected an infinite-family error, got {other:?}"),
        }

        let g2 = Group::gn(BigInt::from(2)).unwrap();
        assert!(matches!(
            enum_orderings(&g2, OrderClass::Left),
            Err(Error::InfiniteFamily(_))
        ));

        let mut signs = BTreeMap::new();
        signs.insert((1, 2), 1);
        let abelian = Group::tower(2, signs).unwrap();
        assert!(matches!(
            enum_orderings(&abelian, OrderClass::Conradian),
            Err(Error::InfiniteFamily(_))
        ));
    }

    #[test]
    fn descriptors_round_trip_through_json() {
        let g2 = series_of_group(&Group::gn(BigInt::from(2)).unwrap());
        let text = g2.descriptor_json();
        assert_eq!(
            text,
            r#"{"n":3,"scalars":{"1,2":"-1","1,3":"2","2,3":"3"}}"#
        );
        assert_eq!(SeriesDescriptor::from_json(&text).unwrap(), g2);

        let parsed =
            SeriesDescriptor::from_json(r#"{"n":2,"scalars":{"1,2":"-1"}}"#).unwrap();
        assert_eq!(parsed, series(2, &[((1, 2), -1)]));

        let bare = SeriesDescriptor::from_json(r#"{"n":1}"#).unwrap();
        assert_eq!(bare.n(), 1);

        assert!(matches!(
            SeriesDescriptor::from_json(r#"{"n":2,"scalars":{"2,1":"3"}}"#),
            Err(Error::Descriptor(_))
        ));
        assert!(matches!(
            SeriesDescriptor::from_json(r#"{"n":2,"scalars":{"1,2":"0"}}"#),
            Err(Error::Series(_))
        ));
    }
}
