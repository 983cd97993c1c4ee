//! Cayley balls: all elements within a given word length of the identity,
//! each paired with a shortest word that spells it.
//!
//! Enumeration is breadth-first over the symmetric generating set in a
//! fixed order, so the chosen minimal words and the final entry order are
//! deterministic. Entries are sorted by word length, then by the text of
//! the element's normal form.

use std::collections::HashMap;

use super::{Elem, Group, Letter, Word};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Hard limit on ball size, to keep exponential families in check.
pub const DEFAULT_BALL_CAP: usize = 200_000;

/// The cap honored by [`Ball::new`]: `ORDSPACE_BALL_CAP` if set and valid,
/// otherwise [`DEFAULT_BALL_CAP`].
pub fn ball_cap() -> usize {
    std::env::var("ORDSPACE_BALL_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&cap| cap > 0)
        .unwrap_or(DEFAULT_BALL_CAP)
}

#[derive(Clone, Debug)]
pub struct BallEntry {
    pub elem: Elem,
    /// Word-length distance from the identity.
    pub len: u32,
    /// A shortest word spelling `elem` (the identity gets the empty word).
    pub word: Word,
}

/// The radius-`r` ball in a group, with deterministic iteration order.
#[derive(Clone, Debug)]
pub struct Ball {
    group: Group,
    radius: u32,
    entries: Vec<BallEntry>,
    index: HashMap<Elem, usize>,
}

impl Ball {
    pub fn new(group: &Group, radius: u32) -> Result<Ball> {
        Ball::with_cap(group, radius, ball_cap())
    }

    pub fn with_cap(group: &Group, radius: u32, cap: usize) -> Result<Ball> {
        let mut steps: Vec<(Letter, Elem)> = Vec::new();
        for (gen, elem) in group.generators() {
            steps.push((Letter::new(gen, Rational::one()), elem.clone()));
            steps.push((Letter::new(gen, -Rational::one()), group.inv(&elem)?));
        }

        let mut discovered: HashMap<Elem, (u32, Word)> = HashMap::new();
        discovered.insert(group.identity(), (0, Word::identity()));
        let mut frontier = vec![group.identity()];
        for depth in 1..=radius {
            let mut next = Vec::new();
            for elem in &frontier {
                let word = discovered[elem].1.clone();
                for (letter, step) in &steps {
                    let product = group.mul(elem, step)?;
                    if discovered.contains_key(&product) {
                        continue;
                    }
                    if discovered.len() >= cap {
                        return Err(Error::BallCap { cap });
                    }
                    let mut w = word.clone();
                    w.0.push(letter.clone());
                    discovered.insert(product.clone(), (depth, w.normalized()));
                    next.push(product);
                }
            }
            frontier = next;
        }

        let mut decorated = Vec::with_capacity(discovered.len());
        for (elem, (len, word)) in discovered {
            let nf = group.normal_form(&elem)?.to_string();
            decorated.push(((len, nf), BallEntry { elem, len, word }));
        }
        decorated.sort_by(|a, b| a.0.cmp(&b.0));
        let entries: Vec<BallEntry> = decorated.into_iter().map(|(_, e)| e).collect();
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.elem.clone(), i))
            .collect();
        Ok(Ball {
            group: group.clone(),
            radius,
            entries,
            index,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries sorted by `(len, normal form text)`; the identity comes first.
    pub fn entries(&self) -> &[BallEntry] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BallEntry> {
        self.entries.iter()
    }

    pub fn contains(&self, x: &Elem) -> bool {
        self.index.contains_key(x)
    }

    pub fn entry(&self, x: &Elem) -> Option<&BallEntry> {
        self.index.get(x).map(|&i| &self.entries[i])
    }

    /// A shortest word for `x`, when `x` lies in this ball.
    pub fn word_for(&self, x: &Elem) -> Option<&Word> {
        self.entry(x).map(|e| &e.word)
    }
}

impl<'a> IntoIterator for &'a Ball {
    type Item = &'a BallEntry;
    type IntoIter = std::slice::Iter<'a, BallEntry>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}
