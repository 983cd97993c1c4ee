//! The metric space of orderings on a fixed group.
//!
//! Two orderings are compared by scanning balls in the word metric for the
//! shortest element on which their signs disagree; the distance is then
//! `1/2^r` where `r` is the length of that element. On top of the metric
//! this module offers a convergence experiment for basepoint families and a
//! neighborhood probe that either perturbs an ordering into a distinct
//! nearby one or certifies that its finite family admits no such move.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{affine_apply, affine_invert, OrderParam, Rational, Side};
use crate::groups::{Ball, Elem, Gen, Group, Letter, Word};
use crate::orders::{
    make_conrad_lex, make_reverse, make_smirnov, make_tararin_lex, OracleKind, OrderingOracle,
    Sign,
};

/// Largest conjugating exponent tried while searching for a separating
/// witness.
pub const WITNESS_EXP_BOUND: i64 = 64;

/// Largest denominator exponent tried while searching for a ring point
/// inside an open interval.
pub const WITNESS_DENOM_BOUND: u32 = 6;

/// Most levels a finite ordering family is enumerated for.
const FAMILY_LEVEL_BOUND: usize = 16;

/// `1/2^radius`, the distance between orderings first separated at `radius`.
pub fn ultrametric_dist(radius: u32) -> Rational {
    let den = BigInt::from(1) << (radius as usize);
    Rational::new(BigInt::from(1), den).expect("denominator is a positive power of two")
}

/// What a ball scan found when comparing two orderings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AgreementOutcome {
    /// The orderings disagree; `witness` is the shortest element (first in
    /// ball order) where the signs differ and `radius` is its word length.
    Separated {
        radius: u32,
        witness: Elem,
        word: Word,
        left: Sign,
        right: Sign,
    },
    /// No disagreement anywhere in the searched ball.
    Agree,
}

/// Result of comparing two orderings over a ball of radius `max_radius`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementResult {
    pub max_radius: u32,
    pub outcome: AgreementOutcome,
}

impl AgreementResult {
    pub fn separated(&self) -> bool {
        matches!(self.outcome, AgreementOutcome::Separated { .. })
    }

    /// Length of the shortest separating element, if one was found.
    pub fn radius(&self) -> Option<u32> {
        match &self.outcome {
            AgreementOutcome::Separated { radius, .. } => Some(*radius),
            AgreementOutcome::Agree => None,
        }
    }

    /// Exact distance, if a separating element was found.
    pub fn dist(&self) -> Option<Rational> {
        self.radius().map(ultrametric_dist)
    }

    /// Exact distance when separated, otherwise the upper bound implied by
    /// agreement over the whole searched ball.
    pub fn dist_bound(&self) -> Rational {
        match self.radius() {
            Some(r) => ultrametric_dist(r),
            None => ultrametric_dist(self.max_radius + 1),
        }
    }
}

/// Scans the ball of radius `max_radius` for the shortest element on which
/// the two orderings disagree.
///
/// Entries are visited in ball order (length, then word), so the reported
/// witness is deterministic.
pub fn agreement_radius(
    left: &OrderingOracle,
    right: &OrderingOracle,
    max_radius: u32,
) -> Result<AgreementResult> {
    if left.group() != right.group() {
        return Err(Error::Precondition(
            "orderings live on different groups; distance is only defined on a fixed group"
                .into(),
        ));
    }
    let ball = Ball::new(left.group(), max_radius)?;
    for entry in ball.iter() {
        let ls = left.sign(&entry.elem)?;
        let rs = right.sign(&entry.elem)?;
        if ls != rs {
            return Ok(AgreementResult {
                max_radius,
                outcome: AgreementOutcome::Separated {
                    radius: entry.len,
                    witness: entry.elem.clone(),
                    word: entry.word.clone(),
                    left: ls,
                    right: rs,
                },
            });
        }
    }
    Ok(AgreementResult {
        max_radius,
        outcome: AgreementOutcome::Agree,
    })
}

/// One basepoint in a convergence experiment.
#[derive(Clone, Debug)]
pub struct ConvergePoint {
    pub eps: OrderParam,
    pub agreement: AgreementResult,
}

/// Compares the basepoint orderings at `start, 2*start, 4*start, ...`
/// against `reference`, one agreement scan per point.
pub fn converge_experiment(
    reference: &OrderingOracle,
    side: Side,
    start: &Rational,
    points: u32,
    max_radius: u32,
) -> Result<Vec<ConvergePoint>> {
    let two = Rational::from_int(2);
    let mut value = start.clone();
    let mut out = Vec::with_capacity(points as usize);
    for _ in 0..points {
        let eps = OrderParam::finite(value.clone(), side);
        let probe = make_smirnov(reference.group(), eps.clone())?;
        let agreement = agreement_radius(&probe, reference, max_radius)?;
        out.push(ConvergePoint { eps, agreement });
        value = &value * &two;
    }
    Ok(out)
}

/// A nearby ordering distinct from the probed one, together with the
/// element exhibiting the difference.
#[derive(Clone, Debug)]
pub struct NeighborReport {
    pub oracle: OrderingOracle,
    pub witness: Elem,
    pub witness_word: Word,
    pub sign_before: Sign,
    pub sign_after: Sign,
}

/// A member of a finite family, with the first pinned element it fails to
/// keep positive (if any).
#[derive(Clone, Debug)]
pub struct SiblingConflict {
    pub oracle: OrderingOracle,
    pub conflict: Option<Elem>,
}

/// Certificate that the probed ordering admits no nearby variant: its group
/// carries only the listed finite family.
#[derive(Clone, Debug)]
pub struct IsolatedReport {
    pub family: Vec<OrderingOracle>,
    pub siblings: Vec<SiblingConflict>,
}

#[derive(Clone, Debug)]
pub enum ProbeOutcome {
    Neighbor(NeighborReport),
    Isolated(IsolatedReport),
}

/// Looks for an ordering distinct from `oracle` that keeps every pinned
/// element positive.
///
/// Pins must be positive under `oracle`. On groups with a rigid finite
/// family the result is [`ProbeOutcome::Isolated`] with a per-sibling
/// account of which pin each family member violates first.
pub fn probe_neighborhood(oracle: &OrderingOracle, pins: &[Elem]) -> Result<ProbeOutcome> {
    let group = oracle.group();
    for pin in pins {
        group.check_member(pin)?;
        let s = oracle.sign(pin)?;
        if s != Sign::Positive {
            return Err(Error::Precondition(format!(
                "pinned element {} is {} under the probed ordering; pins must be positive",
                group.elem_string(pin)?,
                s
            )));
        }
    }
    probe_inner(oracle, pins)
}

fn probe_inner(oracle: &OrderingOracle, pins: &[Elem]) -> Result<ProbeOutcome> {
    match oracle.kind().clone() {
        OracleKind::Lex { signs } => match oracle.group() {
            Group::Tower(t) => {
                if t.is_tararin() {
                    tararin_isolated(oracle, &signs, pins)
                } else {
                    Err(Error::Unsupported(
                        "no probe strategy for towers outside the finitely orderable shape"
                            .into(),
                    ))
                }
            }
            Group::F1(_) | Group::B13 => {
                let top = signs[0];
                let bottom = signs[signs.len() - 1];
                if bottom < 0 {
                    // Same ordering, written as the reversal of one whose
                    // translations are positively oriented.
                    let inner = make_conrad_lex(oracle.group(), &[-top, 1])?;
                    probe_inner(&make_reverse(inner), pins)
                } else if top > 0 {
                    lex_plus_probe(oracle, pins)
                } else {
                    lex_minus_probe(oracle, pins)
                }
            }
            _ => Err(Error::Unsupported(format!(
                "no probe strategy for lexicographic orderings of the {} family",
                oracle.group().family_name()
            ))),
        },
        OracleKind::Smirnov { eps } => {
            if matches!(oracle.group(), Group::RankOne(_)) {
                return Err(Error::Unsupported(
                    "rank-one basepoint orderings all coincide with the natural order; \
                     perturbing the basepoint changes nothing"
                        .into(),
                ));
            }
            match eps {
                OrderParam::Finite { value, side } => match side {
                    Side::Above => smirnov_probe_above(oracle, &value, pins),
                    Side::Below => smirnov_probe_below(oracle, &value, pins),
                },
                OrderParam::PlusInfinity => lex_plus_probe(oracle, pins),
                OrderParam::MinusInfinity => lex_minus_probe(oracle, pins),
            }
        }
        OracleKind::Reverse { of } => {
            let group = oracle.group();
            let mut inv_pins = Vec::with_capacity(pins.len());
            for pin in pins {
                inv_pins.push(group.inv(pin)?);
            }
            match probe_inner(&of, &inv_pins)? {
                ProbeOutcome::Neighbor(r) => Ok(ProbeOutcome::Neighbor(NeighborReport {
                    oracle: make_reverse(r.oracle),
                    witness: r.witness,
                    witness_word: r.witness_word,
                    sign_before: r.sign_before.flip(),
                    sign_after: r.sign_after.flip(),
                })),
                ProbeOutcome::Isolated(r) => {
                    let family = r.family.into_iter().map(make_reverse).collect();
                    let mut siblings = Vec::with_capacity(r.siblings.len());
                    for s in r.siblings {
                        let conflict = match s.conflict {
                            Some(c) => Some(group.inv(&c)?),
                            None => None,
                        };
                        siblings.push(SiblingConflict {
                            oracle: make_reverse(s.oracle),
                            conflict,
                        });
                    }
                    Ok(ProbeOutcome::Isolated(IsolatedReport { family, siblings }))
                }
            }
        }
        OracleKind::Extension { .. } => Err(Error::Unsupported(
            "no probe strategy for extension orderings".into(),
        )),
    }
}

/// Enumerates the full sign-vector family of a rigid tower and reports how
/// each sibling fares against the pins.
fn tararin_isolated(
    oracle: &OrderingOracle,
    signs: &[i8],
    pins: &[Elem],
) -> Result<ProbeOutcome> {
    let n = signs.len();
    if n > FAMILY_LEVEL_BOUND {
        return Err(Error::Precondition(format!(
            "family enumeration supports at most {FAMILY_LEVEL_BOUND} levels, got {n}"
        )));
    }
    let mut family = Vec::with_capacity(1 << n);
    for mask in 0u32..(1u32 << n) {
        let v: Vec<i8> = (0..n)
            .map(|i| if mask & (1 << (n - 1 - i)) != 0 { -1 } else { 1 })
            .collect();
        family.push(make_tararin_lex(oracle.group(), &v)?);
    }
    debug_assert!(family.iter().any(|o| o == oracle));
    let mut siblings = Vec::with_capacity(family.len().saturating_sub(1));
    for sib in &family {
        if sib == oracle {
            continue;
        }
        let mut conflict = None;
        for pin in pins {
            if sib.sign(pin)? != Sign::Positive {
                conflict = Some(pin.clone());
                break;
            }
        }
        siblings.push(SiblingConflict {
            oracle: sib.clone(),
            conflict,
        });
    }
    Ok(ProbeOutcome::Isolated(IsolatedReport { family, siblings }))
}

/// Translation and dilation generators of an affine family.
fn affine_generators(group: &Group) -> Result<(Gen, Gen)> {
    match group {
        Group::F1(_) => Ok((Gen::A, Gen::B)),
        Group::B13 => Ok((Gen::B, Gen::C)),
        _ => Err(Error::Unsupported(format!(
            "the {} family has no affine generator pair",
            group.family_name()
        ))),
    }
}

/// Denominator base for the group's ring of translation amounts.
fn ring_modulus(group: &Group) -> Result<BigInt> {
    match group {
        Group::F1(g) => Ok(g.m().clone()),
        Group::B13 => Ok(BigInt::from(3)),
        _ => Err(Error::Unsupported(format!(
            "the {} family has no translation ring",
            group.family_name()
        ))),
    }
}

/// The word `t^c d^n t^-c`: a dilation conjugated to fix the point `c`.
fn conj_word(group: &Group, c: &Rational, n: i64) -> Result<Word> {
    let (t, d) = affine_generators(group)?;
    Ok(Word(vec![
        Letter::new(t, c.clone()),
        Letter::new(d, Rational::from_int(n)),
        Letter::new(t, -c.clone()),
    ]))
}

/// Smallest-denominator ring point strictly inside `(lo, hi)`, ties broken
/// by the smallest numerator.
fn witness_point(m: &BigInt, lo: &Rational, hi: &Rational, max_exp: u32) -> Result<Rational> {
    let mut den = BigInt::from(1);
    for _ in 0..=max_exp {
        let scaled = lo * &Rational::from_int(den.clone());
        let p = scaled.floor_int() + 1;
        let cand = Rational::new(p, den.clone())?;
        if &cand < hi {
            return Ok(cand);
        }
        den = den * m;
    }
    Err(Error::SearchExhausted(format!(
        "no ring point inside ({lo}, {hi}) with denominator exponent at most {max_exp}"
    )))
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    &(a + b) * &half
}

/// Builds the separating conjugate at `c` and packages the neighbor report.
///
/// `direction` picks the dilation power's sign; exponents grow until the
/// two orderings actually disagree on the conjugate.
fn finish_neighbor(
    old: &OrderingOracle,
    new: OrderingOracle,
    c: &Rational,
    direction: i64,
    pins: &[Elem],
) -> Result<ProbeOutcome> {
    let group = old.group();
    for pin in pins {
        if new.sign(pin)? != Sign::Positive {
            return Err(Error::SearchExhausted(format!(
                "candidate ordering failed to keep pinned element {} positive",
                group.elem_string(pin)?
            )));
        }
    }
    for n in 1..=WITNESS_EXP_BOUND {
        let word = conj_word(group, c, direction * n)?;
        let h = group.eval_word(&word)?;
        let sign_before = old.sign(&h)?;
        let sign_after = new.sign(&h)?;
        if sign_before != sign_after {
            return Ok(ProbeOutcome::Neighbor(NeighborReport {
                oracle: new,
                witness: h,
                witness_word: word,
                sign_before,
                sign_after,
            }));
        }
    }
    Err(Error::SearchExhausted(format!(
        "no separating conjugate found through exponent {WITNESS_EXP_BOUND}"
    )))
}

/// Probe for orderings that agree with the translations-up limit: move the
/// basepoint to a finite value beyond every pinned threshold.
fn lex_plus_probe(oracle: &OrderingOracle, pins: &[Elem]) -> Result<ProbeOutcome> {
    let group = oracle.group();
    let one = Rational::one();
    let mut cutoff = Rational::zero();
    for pin in pins {
        let map = group.affine(pin)?;
        if map.slope() > &one {
            if let Some(p) = map.fixed_point() {
                if p > cutoff {
                    cutoff = p;
                }
            }
        }
    }
    let basepoint = &cutoff + &one;
    let new = make_smirnov(group, OrderParam::finite(basepoint.clone(), Side::Above))?;
    let c = Rational::from_int(basepoint.floor_int() + 1);
    finish_neighbor(oracle, new, &c, 1, pins)
}

/// Mirror of [`lex_plus_probe`] for the translations-down limit.
fn lex_minus_probe(oracle: &OrderingOracle, pins: &[Elem]) -> Result<ProbeOutcome> {
    let group = oracle.group();
    let one = Rational::one();
    let mut cutoff = Rational::zero();
    for pin in pins {
        let map = group.affine(pin)?;
        if map.slope() < &one {
            if let Some(p) = map.fixed_point() {
                if p < cutoff {
                    cutoff = p;
                }
            }
        }
    }
    let basepoint = &cutoff - &one;
    let new = make_smirnov(group, OrderParam::finite(basepoint.clone(), Side::Below))?;
    let c = Rational::from_int(basepoint.floor_int() - 1);
    finish_neighbor(oracle, new, &c, -1, pins)
}

/// Nudges the basepoint upward, stopping halfway to the nearest point any
/// pin moves the current basepoint to.
fn smirnov_probe_above(
    oracle: &OrderingOracle,
    v: &Rational,
    pins: &[Elem],
) -> Result<ProbeOutcome> {
    let group = oracle.group();
    let mut nearest: Option<Rational> = None;
    for pin in pins {
        let map = group.affine(pin)?;
        let image = affine_apply(&map, v);
        if &image != v && nearest.as_ref().is_none_or(|b| &image < b) {
            nearest = Some(image);
        }
    }
    let ceiling = nearest.unwrap_or_else(|| v + &Rational::from_int(2));
    let basepoint = midpoint(v, &ceiling);
    let new = make_smirnov(group, OrderParam::finite(basepoint.clone(), Side::Above))?;
    let c = witness_point(&ring_modulus(group)?, v, &basepoint, WITNESS_DENOM_BOUND)?;
    finish_neighbor(oracle, new, &c, 1, pins)
}

/// Mirror of [`smirnov_probe_above`]: nudges downward, stopping halfway to
/// the nearest pin preimage of the current basepoint.
fn smirnov_probe_below(
    oracle: &OrderingOracle,
    v: &Rational,
    pins: &[Elem],
) -> Result<ProbeOutcome> {
    let group = oracle.group();
    let mut nearest: Option<Rational> = None;
    for pin in pins {
        let map = group.affine(pin)?;
        let preimage = affine_apply(&affine_invert(&map), v);
        if &preimage != v && nearest.as_ref().is_none_or(|b| &preimage > b) {
            nearest = Some(preimage);
        }
    }
    let floor_pt = nearest.unwrap_or_else(|| v - &Rational::from_int(2));
    let basepoint = midpoint(v, &floor_pt);
    let new = make_smirnov(group, OrderParam::finite(basepoint.clone(), Side::Below))?;
    let c = witness_point(&ring_modulus(group)?, &basepoint, v, WITNESS_DENOM_BOUND)?;
    finish_neighbor(oracle, new, &c, 1, pins)
}
