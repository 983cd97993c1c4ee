//! Finite certificates for ordering axioms, run over Cayley balls.
//!
//! The checkers accept any sign source, not just the built-in oracles, so
//! they can certify (or refute) hand-rolled cones as well. All scans walk
//! the ball in its deterministic order; reported witnesses are therefore
//! reproducible.

use num_bigint::BigInt;

use super::{OrderingOracle, Sign};
use crate::error::Result;
use crate::groups::{Ball, Elem, Group};

/// Anything that can classify group elements against an ordering.
pub trait SignSource {
    fn source_group(&self) -> &Group;
    fn sign_of(&self, x: &Elem) -> Result<Sign>;
}

impl SignSource for OrderingOracle {
    fn source_group(&self) -> &Group {
        self.group()
    }

    fn sign_of(&self, x: &Elem) -> Result<Sign> {
        self.sign(x)
    }
}

/// First failure found when certifying that signs come from a positive
/// cone: identity neutral, everything else signed, inversion flips, and
/// products of positives stay positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeViolation {
    IdentitySigned { sign: Sign },
    Unsigned { x: Elem },
    Antisymmetry { x: Elem },
    ProductLeak { x: Elem, y: Elem },
}

#[derive(Clone, Debug)]
pub struct ConeReport {
    pub radius: u32,
    pub elements: usize,
    pub pairs_checked: usize,
    pub violation: Option<ConeViolation>,
}

impl ConeReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn check_cone_axioms<S: SignSource + ?Sized>(source: &S, radius: u32) -> Result<ConeReport> {
    let group = source.source_group().clone();
    let ball = Ball::new(&group, radius)?;
    let mut report = ConeReport {
        radius,
        elements: ball.len(),
        pairs_checked: 0,
        violation: None,
    };

    let id_sign = source.sign_of(&group.identity())?;
    if id_sign != Sign::Zero {
        report.violation = Some(ConeViolation::IdentitySigned { sign: id_sign });
        return Ok(report);
    }
    for entry in ball.iter() {
        if group.is_identity(&entry.elem) {
            continue;
        }
        let s = source.sign_of(&entry.elem)?;
        if s == Sign::Zero {
            report.violation = Some(ConeViolation::Unsigned {
                x: entry.elem.clone(),
            });
            return Ok(report);
        }
        let inv_sign = source.sign_of(&group.inv(&entry.elem)?)?;
        if inv_sign != s.flip() {
            report.violation = Some(ConeViolation::Antisymmetry {
                x: entry.elem.clone(),
            });
            return Ok(report);
        }
    }

    let positives: Vec<&Elem> = {
        let mut v = Vec::new();
        for entry in ball.iter() {
            if source.sign_of(&entry.elem)? == Sign::Positive {
                v.push(&entry.elem);
            }
        }
        v
    };
    for x in &positives {
        for y in &positives {
            report.pairs_checked += 1;
            let product = group.mul(x, y)?;
            if source.sign_of(&product)? != Sign::Positive {
                report.violation = Some(ConeViolation::ProductLeak {
                    x: (*x).clone(),
                    y: (*y).clone(),
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// A pair of positives `f, g` for which `f g^2` fails to exceed `g`.
#[derive(Clone, Debug)]
pub struct ConradViolation {
    pub f: Elem,
    pub g: Elem,
    /// `g^-1 f g^2`; its sign decides the test.
    pub combo: Elem,
    pub sign: Sign,
}

#[derive(Clone, Debug)]
pub struct ConradReport {
    pub radius: u32,
    pub positives: usize,
    pub pairs_checked: usize,
    pub violations: Vec<ConradViolation>,
}

impl ConradReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Tests the law "for positive `f` and `g`, `f g^2` exceeds `g`" over all
/// pairs of positives in the ball. Violations are collected exhaustively
/// and sorted by combined word length, then by the two words.
pub fn check_conradian<S: SignSource + ?Sized>(source: &S, radius: u32) -> Result<ConradReport> {
    let group = source.source_group().clone();
    let ball = Ball::new(&group, radius)?;
    let mut positives = Vec::new();
    for entry in ball.iter() {
        if source.sign_of(&entry.elem)? == Sign::Positive {
            positives.push(entry);
        }
    }
    let mut report = ConradReport {
        radius,
        positives: positives.len(),
        pairs_checked: 0,
        violations: Vec::new(),
    };
    for f in &positives {
        for g in &positives {
            report.pairs_checked += 1;
            let g_sq = group.mul(&g.elem, &g.elem)?;
            let combo = group.mul(&group.inv(&g.elem)?, &group.mul(&f.elem, &g_sq)?)?;
            let sign = source.sign_of(&combo)?;
            if sign != Sign::Positive {
                report.violations.push(ConradViolation {
                    f: f.elem.clone(),
                    g: g.elem.clone(),
                    combo,
                    sign,
                });
            }
        }
    }
    report.violations.sort_by_cached_key(|v| {
        let fe = ball.entry(&v.f).expect("f from ball");
        let ge = ball.entry(&v.g).expect("g from ball");
        (
            fe.len + ge.len,
            fe.word.to_string(),
            ge.word.to_string(),
        )
    });
    Ok(report)
}

/// Outcome per ball element of the two-sided power bound against `c`.
#[derive(Clone, Debug)]
pub struct CofinalEntry {
    pub elem: Elem,
    /// Least `n` with `c^-n < elem < c^n`, when one exists within the bound.
    pub exponent: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct CofinalReport {
    pub radius: u32,
    pub bound: u64,
    pub entries: Vec<CofinalEntry>,
}

impl CofinalReport {
    pub fn all_bounded(&self) -> bool {
        self.entries.iter().all(|e| e.exponent.is_some())
    }

    pub fn max_exponent(&self) -> Option<u64> {
        self.entries.iter().filter_map(|e| e.exponent).max()
    }

    pub fn first_unbounded(&self) -> Option<&Elem> {
        self.entries
            .iter()
            .find(|e| e.exponent.is_none())
            .map(|e| &e.elem)
    }
}

/// For every ball element `g`, finds the least `n <= bound` with
/// `c^-n < g < c^n` under the ordering. An ordering makes `c` cofinal
/// exactly when such an `n` exists for every `g`.
pub fn check_cofinal(
    oracle: &OrderingOracle,
    c: &Elem,
    radius: u32,
    bound: u64,
) -> Result<CofinalReport> {
    let group = oracle.group().clone();
    let ball = Ball::new(&group, radius)?;
    let mut power = group.identity();
    let mut powers = Vec::with_capacity(bound as usize);
    for _ in 0..bound {
        power = group.mul(&power, c)?;
        powers.push(power.clone());
    }
    let mut entries = Vec::with_capacity(ball.len());
    for entry in ball.iter() {
        let mut found = None;
        for (i, p) in powers.iter().enumerate() {
            let below = oracle.compare(&group.inv(p)?, &entry.elem)? == std::cmp::Ordering::Less;
            let above = oracle.compare(&entry.elem, p)? == std::cmp::Ordering::Less;
            if below && above {
                found = Some(i as u64 + 1);
                break;
            }
        }
        entries.push(CofinalEntry {
            elem: entry.elem.clone(),
            exponent: found,
        });
    }
    Ok(CofinalReport {
        radius,
        bound,
        entries,
    })
}

/// Which subgroup a convexity check is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// The level-`j` subgroup of the convex chain.
    Level(usize),
    /// The stabilizer subgroup `H(n, k)` of the `gn` family.
    Stabilizer(BigInt),
}

#[derive(Clone, Debug)]
pub struct ConvexReport {
    pub radius: u32,
    pub members: usize,
    pub outside: usize,
    /// A triple `x < g < y` with `x, y` inside the subgroup and `g` outside.
    pub violation: Option<(Elem, Elem, Elem)>,
}

impl ConvexReport {
    pub fn is_convex(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks whether the subgroup is convex as far as the ball can see: no
/// outside element may sit between two members. Left-invariance reduces
/// this to comparisons against the identity, so a violation is always
/// reported with the identity as one endpoint.
pub fn convex_in_ball(
    oracle: &OrderingOracle,
    sub: &SubgroupSpec,
    radius: u32,
) -> Result<ConvexReport> {
    let group = oracle.group().clone();
    let ball = Ball::new(&group, radius)?;
    let is_member = |x: &Elem| -> Result<bool> {
        match sub {
            SubgroupSpec::Level(j) => group.level_member(x, *j),
            SubgroupSpec::Stabilizer(k) => group.member_h(k, x),
        }
    };
    let mut members = Vec::new();
    let mut outside = Vec::new();
    for entry in ball.iter() {
        if is_member(&entry.elem)? {
            members.push(entry.elem.clone());
        } else {
            outside.push(entry.elem.clone());
        }
    }
    let mut report = ConvexReport {
        radius,
        members: members.len(),
        outside: outside.len(),
        violation: None,
    };
    let id = group.identity();
    for g in &outside {
        match oracle.sign(g)? {
            Sign::Positive => {
                for h in &members {
                    if oracle.compare(g, h)? == std::cmp::Ordering::Less {
                        report.violation = Some((id.clone(), g.clone(), h.clone()));
                        return Ok(report);
                    }
                }
            }
            Sign::Negative => {
                for h in &members {
                    if oracle.compare(h, g)? == std::cmp::Ordering::Less {
                        report.violation = Some((h.clone(), g.clone(), id.clone()));
                        return Ok(report);
                    }
                }
            }
            Sign::Zero => {}
        }
    }
    Ok(report)
}
