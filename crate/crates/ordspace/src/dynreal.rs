//! Dynamical realization: embed an ordered group segment into the rational
//! line, one element at a time.
//!
//! The identity lands at 0. Each later element is compared against all
//! points placed so far: above all of them it takes max+1, below all of
//! them min-1, and otherwise the midpoint of its two order-neighbors. The
//! coordinates depend on the enumeration, but their order type does not.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::groups::{Ball, Elem, Group};
use crate::orders::{OrderingOracle, Sign};

/// One realized point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationEntry {
    pub elem: Elem,
    pub coord: Rational,
}

/// A finite order-embedding of group elements into the rationals, stored in
/// enumeration order.
#[derive(Clone, Debug)]
pub struct RealizationMap {
    group: Group,
    entries: Vec<RealizationEntry>,
    index: HashMap<Elem, usize>,
}

impl RealizationMap {
    /// Wraps an explicit table. The enumeration must start at the identity
    /// and list distinct members of `group`; the coordinates themselves are
    /// taken as-is, so a tampered table can be fed to
    /// [`check_realization`].
    pub fn from_parts(group: &Group, table: Vec<(Elem, Rational)>) -> Result<RealizationMap> {
        match table.first() {
            Some((first, _)) if group.is_identity(first) => {}
            _ => return Err(Error::EnumerationStart),
        }
        let mut index = HashMap::new();
        for (i, (elem, _)) in table.iter().enumerate() {
            group.check_member(elem)?;
            if index.insert(elem.clone(), i).is_some() {
                return Err(Error::DuplicateElement(group.elem_string(elem)?));
            }
        }
        let entries = table
            .into_iter()
            .map(|(elem, coord)| RealizationEntry { elem, coord })
            .collect();
        Ok(RealizationMap {
            group: group.clone(),
            entries,
            index,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in enumeration order.
    pub fn entries(&self) -> &[RealizationEntry] {
        &self.entries
    }

    /// Coordinate of `x`, when realized.
    pub fn coord(&self, x: &Elem) -> Option<&Rational> {
        self.index.get(x).map(|&i| &self.entries[i].coord)
    }
}

/// Realizes the ordering over an explicit enumeration.
///
/// The enumeration must begin with the identity and contain no repeats.
pub fn realize(oracle: &OrderingOracle, enumeration: &[Elem]) -> Result<RealizationMap> {
    let group = oracle.group();
    match enumeration.first() {
        Some(first) if group.is_identity(first) => {}
        _ => return Err(Error::EnumerationStart),
    }
    let mut seen = HashSet::new();
    for elem in enumeration {
        group.check_member(elem)?;
        if !seen.insert(elem.clone()) {
            return Err(Error::DuplicateElement(group.elem_string(elem)?));
        }
    }

    let mut entries: Vec<RealizationEntry> = Vec::with_capacity(enumeration.len());
    // Indices into `entries`, kept sorted by coordinate (equivalently, by
    // the ordering itself).
    let mut by_coord: Vec<usize> = Vec::with_capacity(enumeration.len());
    for (i, elem) in enumeration.iter().enumerate() {
        if i == 0 {
            entries.push(RealizationEntry {
                elem: elem.clone(),
                coord: Rational::zero(),
            });
            by_coord.push(0);
            continue;
        }
        let mut lo = 0;
        let mut hi = by_coord.len();
        while lo < hi {
            let mid = (lo + hi) / 2;
            match oracle.compare(elem, &entries[by_coord[mid]].elem)? {
                std::cmp::Ordering::Less => hi = mid,
                std::cmp::Ordering::Greater => lo = mid + 1,
                std::cmp::Ordering::Equal => {
                    return Err(Error::DuplicateElement(group.elem_string(elem)?))
                }
            }
        }
        let coord = if lo == 0 {
            &entries[by_coord[0]].coord - &Rational::one()
        } else if lo == by_coord.len() {
            &entries[by_coord[lo - 1]].coord + &Rational::one()
        } else {
            let half = Rational::new(1, 2).expect("nonzero denominator");
            &(&entries[by_coord[lo - 1]].coord + &entries[by_coord[lo]].coord) * &half
        };
        entries.push(RealizationEntry {
            elem: elem.clone(),
            coord,
        });
        by_coord.insert(lo, i);
    }

    let index = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (e.elem.clone(), i))
        .collect();
    Ok(RealizationMap {
        group: group.clone(),
        entries,
        index,
    })
}

/// Realizes the ordering over the ball enumeration, optionally truncated to
/// the first `limit` entries.
pub fn realize_ball(
    oracle: &OrderingOracle,
    radius: u32,
    limit: Option<usize>,
) -> Result<RealizationMap> {
    let ball = Ball::new(oracle.group(), radius)?;
    let take = limit.unwrap_or(ball.len()).min(ball.len());
    let enumeration: Vec<Elem> = ball.iter().take(take).map(|e| e.elem.clone()).collect();
    realize(oracle, &enumeration)
}

/// Two realized points whose images under left translation by `g` fail to
/// move in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionViolation {
    pub g: Elem,
    pub lower: Elem,
    pub upper: Elem,
}

/// Outcome of verifying a realization against its ordering.
#[derive(Clone, Debug)]
pub struct RealizationReport {
    pub points: usize,
    pub order_pairs: usize,
    pub action_pairs: usize,
    /// First enumeration pair whose coordinates disagree with the ordering.
    pub order_violation: Option<(Elem, Elem)>,
    /// First translation whose induced partial map on coordinates is not
    /// strictly increasing.
    pub action_violation: Option<ActionViolation>,
    /// First realized element whose sign differs from its coordinate sign.
    pub sign_violation: Option<Elem>,
}

impl RealizationReport {
    pub fn holds(&self) -> bool {
        self.order_violation.is_none()
            && self.action_violation.is_none()
            && self.sign_violation.is_none()
    }
}

/// Verifies the three defining properties of a realization: coordinate
/// order matches the ordering, left translations act by strictly increasing
/// partial maps on the realized points, and coordinate signs recover
/// element signs.
pub fn check_realization(
    map: &RealizationMap,
    oracle: &OrderingOracle,
) -> Result<RealizationReport> {
    if map.group() != oracle.group() {
        return Err(Error::Precondition(
            "realization and ordering live on different groups".into(),
        ));
    }
    let group = map.group();
    let entries = map.entries();

    let mut order_pairs = 0;
    let mut order_violation = None;
    'order: for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            order_pairs += 1;
            let by_order = oracle.compare(&entries[i].elem, &entries[j].elem)?;
            let by_coord = entries[i].coord.cmp(&entries[j].coord);
            if by_order != by_coord {
                order_violation = Some((entries[i].elem.clone(), entries[j].elem.clone()));
                break 'order;
            }
        }
    }

    let mut action_pairs = 0;
    let mut action_violation = None;
    'action: for g in entries {
        let mut graph: Vec<(&Rational, &Elem, &Rational)> = Vec::new();
        for h in entries {
            let gh = group.mul(&g.elem, &h.elem)?;
            if let Some(image) = map.coord(&gh) {
                graph.push((&h.coord, &h.elem, image));
            }
        }
        graph.sort_by(|a, b| a.0.cmp(b.0));
        for w in graph.windows(2) {
            action_pairs += 1;
            if w[0].0 == w[1].0 || w[0].2 >= w[1].2 {
                action_violation = Some(ActionViolation {
                    g: g.elem.clone(),
                    lower: w[0].1.clone(),
                    upper: w[1].1.clone(),
                });
                break 'action;
            }
        }
    }

    let mut sign_violation = None;
    for e in entries {
        if oracle.sign(&e.elem)? != Sign::from_signum(e.coord.signum()) {
            sign_violation = Some(e.elem.clone());
            break;
        }
    }

    Ok(RealizationReport {
        points: entries.len(),
        order_pairs,
        action_pairs,
        order_violation,
        action_violation,
        sign_violation,
    })
}
