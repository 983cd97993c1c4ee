//! The group families, their elements, words, and Cayley balls.
//!
//! Every supported group comes with a finite chain of convex subgroups
//! `1 = G_0 < G_1 < ... < G_N = G` whose successive quotients embed in the
//! rationals. Elements are stored as exact coordinate tuples along that
//! chain, one coordinate per level, with level 1 innermost:
//!
//! * `F1(r)`: `<a, b | b a b^-1 = a^r>`, coordinates `(k, s)`;
//! * `Tower`: iterated cyclic extensions with conjugation signs,
//!   coordinates `(e_1, ..., e_n)`;
//! * `Gn(n)`: `Z[1/|n|]` extended by `B(1,3)`, coordinates `(s, q)`;
//! * `B13`: the Baumslag-Solitar group `B(1,3)` itself;
//! * `RankOne(m)`: the additive group `Z[1/m]`.

pub mod ball;
mod f1;
mod gn;
mod tower;
pub mod word;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{AffineMap, Rational};

pub use ball::{Ball, BallEntry, DEFAULT_BALL_CAP};
pub use f1::F1Group;
pub use gn::{chi, Bs13Elem, GnGroup};
pub use tower::TowerGroup;
pub use word::{Gen, Letter, Word};

/// The additive group `Z[1/m]` (the integers when `m = 1`), generated by 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneGroup {
    m: BigInt,
}

impl RankOneGroup {
    pub fn new(m: BigInt) -> Result<Self> {
        if m < BigInt::from(1) {
            return Err(Error::Precondition(format!(
                "ring parameter must be a positive integer, got {m}"
            )));
        }
        Ok(RankOneGroup { m })
    }

    pub fn integers() -> Self {
        RankOneGroup { m: BigInt::from(1) }
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn contains(&self, s: &Rational) -> bool {
        s.denominator_divides_power_of(&self.m)
    }
}

/// A group from one of the supported families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    F1(F1Group),
    Tower(TowerGroup),
    Gn(GnGroup),
    B13,
    RankOne(RankOneGroup),
}

/// A group element, stored as exact coordinates for its family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    /// Normal form `b^k a^s`.
    F1 { k: BigInt, s: Rational },
    /// Exponent vector of `a_n^(e_n) ... a_1^(e_1)`.
    Tower(Vec<BigInt>),
    /// Coefficient `s` and `B(1,3)` part `q`.
    Gn { s: Rational, q: Bs13Elem },
    B13(Bs13Elem),
    RankOne(Rational),
}

impl Group {
    pub fn f1(r: Rational) -> Result<Group> {
        Ok(Group::F1(F1Group::new(r)?))
    }

    pub fn tower(n: usize, signs: BTreeMap<(usize, usize), i8>) -> Result<Group> {
        Ok(Group::Tower(TowerGroup::new(n, signs)?))
    }

    pub fn klein_bottle() -> Group {
        Group::Tower(TowerGroup::klein_bottle())
    }

    pub fn gn(n: BigInt) -> Result<Group> {
        Ok(Group::Gn(GnGroup::new(n)?))
    }

    pub fn rank_one(m: BigInt) -> Result<Group> {
        Ok(Group::RankOne(RankOneGroup::new(m)?))
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            Group::F1(_) => "f1",
            Group::Tower(_) => "tower",
            Group::Gn(_) => "gn",
            Group::B13 => "b13",
            Group::RankOne(_) => "rank1",
        }
    }

    pub fn identity(&self) -> Elem {
        match self {
            Group::F1(_) => Elem::F1 {
                k: BigInt::ZERO,
                s: Rational::zero(),
            },
            Group::Tower(t) => Elem::Tower(vec![BigInt::ZERO; t.n()]),
            Group::Gn(_) => Elem::Gn {
                s: Rational::zero(),
                q: Bs13Elem::identity(),
            },
            Group::B13 => Elem::B13(Bs13Elem::identity()),
            Group::RankOne(_) => Elem::RankOne(Rational::zero()),
        }
    }

    pub fn is_identity(&self, x: &Elem) -> bool {
        x == &self.identity()
    }

    pub fn contains(&self, x: &Elem) -> bool {
        match (self, x) {
            (Group::F1(g), Elem::F1 { k, s }) => g.contains(k, s),
            (Group::Tower(g), Elem::Tower(e)) => g.contains(e),
            (Group::Gn(g), Elem::Gn { s, q }) => g.contains(s, q),
            (Group::B13, Elem::B13(_)) => true,
            (Group::RankOne(g), Elem::RankOne(s)) => g.contains(s),
            _ => false,
        }
    }

    pub fn check_member(&self, x: &Elem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::WrongGroup(format!(
                "element {x:?} does not belong to the group {}",
                self.descriptor_json()
            )))
        }
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(match (self, x, y) {
            (Group::F1(g), Elem::F1 { k, s }, Elem::F1 { k: k2, s: s2 }) => {
                let (k, s) = g.mul(k, s, k2, s2)?;
                Elem::F1 { k, s }
            }
            (Group::Tower(g), Elem::Tower(e), Elem::Tower(f)) => Elem::Tower(g.mul(e, f)),
            (Group::Gn(g), Elem::Gn { s, q }, Elem::Gn { s: s2, q: q2 }) => {
                let (s, q) = g.mul(s, q, s2, q2)?;
                Elem::Gn { s, q }
            }
            (Group::B13, Elem::B13(p), Elem::B13(q)) => Elem::B13(p.compose(q)?),
            (Group::RankOne(_), Elem::RankOne(s), Elem::RankOne(t)) => Elem::RankOne(s + t),
            _ => unreachable!("membership checked above"),
        })
    }

    pub fn inv(&self, x: &Elem) -> Result<Elem> {
        self.check_member(x)?;
        Ok(match (self, x) {
            (Group::F1(g), Elem::F1 { k, s }) => {
                let (k, s) = g.inv(k, s)?;
                Elem::F1 { k, s }
            }
            (Group::Tower(g), Elem::Tower(e)) => Elem::Tower(g.inv(e)),
            (Group::Gn(g), Elem::Gn { s, q }) => {
                let (s, q) = g.inv(s, q)?;
                Elem::Gn { s, q }
            }
            (Group::B13, Elem::B13(q)) => Elem::B13(q.invert()?),
            (Group::RankOne(_), Elem::RankOne(s)) => Elem::RankOne(-s.clone()),
            _ => unreachable!("membership checked above"),
        })
    }

    /// `x y x^-1`.
    pub fn conj(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        self.mul(&self.mul(x, y)?, &self.inv(x)?)
    }

    pub fn pow(&self, x: &Elem, e: &BigInt) -> Result<Elem> {
        let (mut base, mut e) = if e.is_negative() {
            (self.inv(x)?, -e)
        } else {
            (x.clone(), e.clone())
        };
        let mut acc = self.identity();
        while e > BigInt::ZERO {
            if e.is_odd() {
                acc = self.mul(&acc, &base)?;
            }
            e >>= 1;
            if e > BigInt::ZERO {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(acc)
    }

    /// The standard generators with their names, in a fixed order.
    pub fn generators(&self) -> Vec<(Gen, Elem)> {
        match self {
            Group::F1(_) => vec![
                (
                    Gen::A,
                    Elem::F1 {
                        k: BigInt::ZERO,
                        s: Rational::one(),
                    },
                ),
                (
                    Gen::B,
                    Elem::F1 {
                        k: BigInt::from(1),
                        s: Rational::zero(),
                    },
                ),
            ],
            Group::Tower(t) => (1..=t.n())
                .map(|i| {
                    let mut e = vec![BigInt::ZERO; t.n()];
                    e[i - 1] = BigInt::from(1);
                    (Gen::Level(i), Elem::Tower(e))
                })
                .collect(),
            Group::Gn(_) => vec![
                (
                    Gen::A,
                    Elem::Gn {
                        s: Rational::one(),
                        q: Bs13Elem::identity(),
                    },
                ),
                (
                    Gen::B,
                    Elem::Gn {
                        s: Rational::zero(),
                        q: Bs13Elem::new(BigInt::ZERO, Rational::one()).expect("unit shift"),
                    },
                ),
                (
                    Gen::C,
                    Elem::Gn {
                        s: Rational::zero(),
                        q: Bs13Elem::new(BigInt::from(1), Rational::zero()).expect("dilation"),
                    },
                ),
            ],
            Group::B13 => vec![
                (
                    Gen::B,
                    Elem::B13(Bs13Elem::new(BigInt::ZERO, Rational::one()).expect("unit shift")),
                ),
                (
                    Gen::C,
                    Elem::B13(Bs13Elem::new(BigInt::from(1), Rational::zero()).expect("dilation")),
                ),
            ],
            Group::RankOne(_) => vec![(Gen::A, Elem::RankOne(Rational::one()))],
        }
    }

    fn alphabet_contains(&self, gen: Gen) -> bool {
        match (self, gen) {
            (Group::F1(_), Gen::A | Gen::B) => true,
            (Group::Tower(t), Gen::Level(i)) => 1 <= i && i <= t.n(),
            (Group::Gn(_), Gen::A | Gen::B | Gen::C) => true,
            (Group::B13, Gen::B | Gen::C) => true,
            (Group::RankOne(_), Gen::A) => true,
            _ => false,
        }
    }

    /// Parses a word and checks its generators belong to this family.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let w = Word::parse(text)?;
        for letter in &w.0 {
            if !self.alphabet_contains(letter.gen) {
                return Err(Error::UnknownGenerator {
                    gen: letter.gen.to_string(),
                    family: self.family_name().to_string(),
                });
            }
        }
        Ok(w)
    }

    fn integer_exp(gen: Gen, exp: &Rational) -> Result<BigInt> {
        if !exp.is_integer() {
            return Err(Error::ExponentRange(format!(
                "generator {gen} takes integer exponents, got {exp}"
            )));
        }
        Ok(exp.numer().clone())
    }

    fn ring_exp(gen: Gen, exp: &Rational, m: &BigInt) -> Result<Rational> {
        if !exp.denominator_divides_power_of(m) {
            return Err(Error::ExponentRange(format!(
                "{exp} of {gen}: the coefficient ring is Z[1/{m}]"
            )));
        }
        Ok(exp.clone())
    }

    /// The element `gen^exp`, validating the exponent for this family.
    pub fn letter_elem(&self, letter: &Letter) -> Result<Elem> {
        let gen = letter.gen;
        let exp = &letter.exp;
        if !self.alphabet_contains(gen) {
            return Err(Error::UnknownGenerator {
                gen: gen.to_string(),
                family: self.family_name().to_string(),
            });
        }
        Ok(match (self, gen) {
            (Group::F1(g), Gen::A) => Elem::F1 {
                k: BigInt::ZERO,
                s: Self::ring_exp(gen, exp, g.m())?,
            },
            (Group::F1(_), Gen::B) => Elem::F1 {
                k: Self::integer_exp(gen, exp)?,
                s: Rational::zero(),
            },
            (Group::Tower(t), Gen::Level(i)) => {
                let mut e = vec![BigInt::ZERO; t.n()];
                e[i - 1] = Self::integer_exp(gen, exp)?;
                Elem::Tower(e)
            }
            (Group::Gn(g), Gen::A) => Elem::Gn {
                s: Self::ring_exp(gen, exp, g.m())?,
                q: Bs13Elem::identity(),
            },
            (Group::Gn(_), Gen::B) => Elem::Gn {
                s: Rational::zero(),
                q: Bs13Elem::new(BigInt::ZERO, Self::ring_exp(gen, exp, &BigInt::from(3))?)?,
            },
            (Group::Gn(_), Gen::C) => Elem::Gn {
                s: Rational::zero(),
                q: Bs13Elem::new(Self::integer_exp(gen, exp)?, Rational::zero())?,
            },
            (Group::B13, Gen::B) => Elem::B13(Bs13Elem::new(
                BigInt::ZERO,
                Self::ring_exp(gen, exp, &BigInt::from(3))?,
            )?),
            (Group::B13, Gen::C) => Elem::B13(Bs13Elem::new(
                Self::integer_exp(gen, exp)?,
                Rational::zero(),
            )?),
            (Group::RankOne(g), Gen::A) => Elem::RankOne(Self::ring_exp(gen, exp, g.m())?),
            _ => unreachable!("alphabet checked above"),
        })
    }

    pub fn eval_word(&self, w: &Word) -> Result<Elem> {
        let mut acc = self.identity();
        for letter in &w.0 {
            acc = self.mul(&acc, &self.letter_elem(letter)?)?;
        }
        Ok(acc)
    }

    /// Parses and evaluates in one step.
    pub fn eval_text(&self, text: &str) -> Result<Elem> {
        self.eval_word(&self.parse_word(text)?)
    }

    /// The normal-form word of an element: `b^k a^s`, `a_n^(e_n) ... a_1^(e_1)`,
    /// `c^k b^u a^v`, or `a^s`. The identity is the empty word.
    pub fn normal_form(&self, x: &Elem) -> Result<Word> {
        self.check_member(x)?;
        let mut letters = Vec::new();
        let mut push = |gen: Gen, exp: Rational| {
            if !exp.is_zero() {
                letters.push(Letter::new(gen, exp));
            }
        };
        match (self, x) {
            (Group::F1(_), Elem::F1 { k, s }) => {
                push(Gen::B, Rational::from_int(k.clone()));
                push(Gen::A, s.clone());
            }
            (Group::Tower(_), Elem::Tower(e)) => {
                for (i, exp) in e.iter().enumerate().rev() {
                    push(Gen::Level(i + 1), Rational::from_int(exp.clone()));
                }
            }
            (Group::Gn(g), Elem::Gn { s, q }) => {
                push(Gen::C, Rational::from_int(q.k().clone()));
                push(Gen::B, q.b_exp()?);
                push(Gen::A, s.checked_div(&g.chi(q)?)?);
            }
            (Group::B13, Elem::B13(q)) => {
                push(Gen::C, Rational::from_int(q.k().clone()));
                push(Gen::B, q.b_exp()?);
            }
            (Group::RankOne(_), Elem::RankOne(s)) => push(Gen::A, s.clone()),
            _ => unreachable!("membership checked above"),
        }
        Ok(Word(letters))
    }

    /// The normal-form word as text; empty for the identity.
    pub fn elem_string(&self, x: &Elem) -> Result<String> {
        Ok(self.normal_form(x)?.to_string())
    }

    /// Length of the convex subgroup chain (number of levels).
    pub fn series_length(&self) -> usize {
        match self {
            Group::F1(_) => 2,
            Group::Tower(t) => t.n(),
            Group::Gn(_) => 3,
            Group::B13 => 2,
            Group::RankOne(_) => 1,
        }
    }

    /// The highest level at which `x` has a nonzero coordinate, with the
    /// sign of that coordinate. The identity reports `(0, 0)`.
    pub fn lex_level(&self, x: &Elem) -> Result<(usize, i8)> {
        self.check_member(x)?;
        Ok(match (self, x) {
            (Group::F1(_), Elem::F1 { k, s }) => {
                if !k.is_zero() {
                    (2, sign_of_int(k))
                } else if !s.is_zero() {
                    (1, s.signum())
                } else {
                    (0, 0)
                }
            }
            (Group::Tower(_), Elem::Tower(e)) => {
                match e.iter().rposition(|c| !c.is_zero()) {
                    Some(i) => (i + 1, sign_of_int(&e[i])),
                    None => (0, 0),
                }
            }
            (Group::Gn(_), Elem::Gn { s, q }) => {
                if !q.k().is_zero() {
                    (3, sign_of_int(q.k()))
                } else if !q.shift().is_zero() {
                    (2, q.shift().signum())
                } else if !s.is_zero() {
                    (1, s.signum())
                } else {
                    (0, 0)
                }
            }
            (Group::B13, Elem::B13(q)) => {
                if !q.k().is_zero() {
                    (2, sign_of_int(q.k()))
                } else if !q.shift().is_zero() {
                    (1, q.shift().signum())
                } else {
                    (0, 0)
                }
            }
            (Group::RankOne(_), Elem::RankOne(s)) => {
                if s.is_zero() {
                    (0, 0)
                } else {
                    (1, s.signum())
                }
            }
            _ => unreachable!("membership checked above"),
        })
    }

    /// Whether `x` lies in the level-`j` subgroup of the chain.
    pub fn level_member(&self, x: &Elem, j: usize) -> Result<bool> {
        if j >= self.series_length() {
            return Err(Error::Precondition(format!(
                "level {j} is not a proper level of a chain of length {}",
                self.series_length()
            )));
        }
        if j == 0 {
            return Ok(self.is_identity(x));
        }
        Ok(self.lex_level(x)?.0 <= j)
    }

    fn check_designated_level(&self, j: usize) -> Result<()> {
        let n = self.series_length();
        let ok = match self {
            Group::F1(_) | Group::B13 => j == 1,
            Group::Gn(_) => j == 1,
            Group::Tower(_) => 1 <= j && j < n,
            Group::RankOne(_) => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "level {j} of the {} family has no designated subgroup/quotient pair",
                self.family_name()
            )))
        }
    }

    /// The level-`j` convex subgroup, as a group in its own right.
    pub fn subgroup(&self, j: usize) -> Result<Group> {
        self.check_designated_level(j)?;
        Ok(match self {
            Group::F1(g) => Group::RankOne(RankOneGroup::new(g.m().clone())?),
            Group::B13 => Group::RankOne(RankOneGroup::new(BigInt::from(3))?),
            Group::Gn(g) => Group::RankOne(RankOneGroup::new(g.m().clone())?),
            Group::Tower(t) => Group::Tower(t.sub_tower(j)?),
            Group::RankOne(_) => unreachable!("no designated level"),
        })
    }

    /// The quotient by the level-`j` subgroup.
    pub fn quotient(&self, j: usize) -> Result<Group> {
        self.check_designated_level(j)?;
        Ok(match self {
            Group::F1(_) | Group::B13 => Group::RankOne(RankOneGroup::integers()),
            Group::Gn(_) => Group::B13,
            Group::Tower(t) => Group::Tower(t.quotient_tower(j)?),
            Group::RankOne(_) => unreachable!("no designated level"),
        })
    }

    /// The image of `x` in `quotient(j)`.
    pub fn project(&self, x: &Elem, j: usize) -> Result<Elem> {
        self.check_designated_level(j)?;
        self.check_member(x)?;
        Ok(match (self, x) {
            (Group::F1(_), Elem::F1 { k, .. }) => Elem::RankOne(Rational::from_int(k.clone())),
            (Group::B13, Elem::B13(q)) => Elem::RankOne(Rational::from_int(q.k().clone())),
            (Group::Gn(_), Elem::Gn { q, .. }) => Elem::B13(q.clone()),
            (Group::Tower(_), Elem::Tower(e)) => Elem::Tower(e[j..].to_vec()),
            _ => unreachable!("membership checked above"),
        })
    }

    /// The coordinates of `x` as an element of `subgroup(j)`. Fails if `x`
    /// is not in that subgroup.
    pub fn sub_elem(&self, x: &Elem, j: usize) -> Result<Elem> {
        self.check_designated_level(j)?;
        if !self.level_member(x, j)? {
            return Err(Error::WrongGroup(format!(
                "element {} does not lie in the level-{j} subgroup",
                self.elem_string(x)?
            )));
        }
        Ok(match (self, x) {
            (Group::F1(_), Elem::F1 { s, .. }) => Elem::RankOne(s.clone()),
            (Group::B13, Elem::B13(q)) => Elem::RankOne(q.shift().clone()),
            (Group::Gn(_), Elem::Gn { s, .. }) => Elem::RankOne(s.clone()),
            (Group::Tower(_), Elem::Tower(e)) => Elem::Tower(e[..j].to_vec()),
            _ => unreachable!("membership checked above"),
        })
    }

    /// The affine action on the line, for the families that carry one.
    pub fn affine(&self, x: &Elem) -> Result<AffineMap> {
        self.check_member(x)?;
        match (self, x) {
            (Group::F1(g), Elem::F1 { k, s }) => g.affine(k, s),
            (Group::B13, Elem::B13(q)) => q.map(),
            (Group::RankOne(_), Elem::RankOne(s)) => {
                AffineMap::new(Rational::one(), s.clone())
            }
            _ => Err(Error::Unsupported(format!(
                "the {} family has no designated affine action on the line",
                self.family_name()
            ))),
        }
    }

    /// Membership in the stabilizer subgroup `H(n, k)` of `G(n)`.
    pub fn member_h(&self, k: &BigInt, x: &Elem) -> Result<bool> {
        self.check_member(x)?;
        match (self, x) {
            (Group::Gn(g), Elem::Gn { s, q }) => g.member_h(k, s, q),
            _ => Err(Error::WrongGroup(format!(
                "H(n,k) membership is defined for the gn family, not {}",
                self.family_name()
            ))),
        }
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        match self {
            Group::F1(g) => GroupDescriptor::F1 { r: g.r().clone() },
            Group::Tower(t) => GroupDescriptor::Tower {
                n: Some(t.n()),
                signs: t
                    .signs()
                    .iter()
                    .map(|(&(i, j), &s)| (format!("{i},{j}"), s))
                    .collect(),
            },
            Group::Gn(g) => GroupDescriptor::Gn {
                n: g.n().to_i64().expect("extension parameter fits in i64"),
            },
            Group::B13 => GroupDescriptor::B13 {},
            Group::RankOne(g) => GroupDescriptor::Rank1 {
                m: g.m().to_u64().expect("ring parameter fits in u64"),
            },
        }
    }

    pub fn from_descriptor(d: &GroupDescriptor) -> Result<Group> {
        match d {
            GroupDescriptor::F1 { r } => Group::f1(r.clone()),
            GroupDescriptor::Tower { n, signs } => {
                let mut parsed = BTreeMap::new();
                for (key, &s) in signs {
                    parsed.insert(parse_pair_key(key)?, s);
                }
                let n = match n {
                    Some(n) => *n,
                    None => parsed.keys().map(|&(_, j)| j).max().ok_or_else(|| {
                        Error::Descriptor(
                            "tower descriptor needs `n` or a nonempty `signs` map".into(),
                        )
                    })?,
                };
                Group::tower(n, parsed)
            }
            GroupDescriptor::Gn { n } => Group::gn(BigInt::from(*n)),
            GroupDescriptor::B13 {} => Ok(Group::B13),
            GroupDescriptor::Rank1 { m } => Group::rank_one(BigInt::from(*m)),
        }
    }

    pub fn from_json(text: &str) -> Result<Group> {
        let d: GroupDescriptor = serde_json::from_str(text)
            .map_err(|e| Error::Descriptor(format!("invalid group descriptor: {e}")))?;
        Group::from_descriptor(&d)
    }

    pub fn descriptor_json(&self) -> String {
        serde_json::to_string(&self.descriptor()).expect("descriptor serializes")
    }
}

fn sign_of_int(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn parse_pair_key(key: &str) -> Result<(usize, usize)> {
    let err = || Error::Descriptor(format!("sign key `{key}` must have the form \"i,j\" with i < j"));
    let (i, j) = key.split_once(',').ok_or_else(err)?;
    let i: usize = i.trim().parse().map_err(|_| err())?;
    let j: usize = j.trim().parse().map_err(|_| err())?;
    if i >= j {
        return Err(err());
    }
    Ok((i, j))
}

/// Serialized form of a group, e.g. `{"family":"f1","r":"3/2"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupDescriptor {
    F1 {
        r: Rational,
    },
    Tower {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default)]
        signs: BTreeMap<String, i8>,
    },
    Gn {
        n: i64,
    },
    B13 {},
    Rank1 {
        m: u64,
    },
}
