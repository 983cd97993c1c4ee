//! Iterated cyclic extensions `1 = G_0 < G_1 < ... < G_n` where each
//! `G_i / G_(i-1)` is infinite cyclic and conjugation acts by signs.
//!
//! Generators `a_1, ..., a_n` satisfy `a_j a_i a_j^-1 = a_i^s(i,j)` for
//! `i < j` with `s(i,j)` either 1 or -1. An element is the exponent vector
//! `(e_1, ..., e_n)` of its normal form `a_n^e_n ... a_1^e_1`. The Klein
//! bottle group is the case `n = 2`, `s(1,2) = -1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerGroup {
    n: usize,
    signs: BTreeMap<(usize, usize), i8>,
}

impl TowerGroup {
    /// Builds a tower of height `n` from the conjugation signs, which must
    /// cover exactly the pairs `i < j` in `1..=n` with values in `{1, -1}`.
    pub fn new(n: usize, signs: BTreeMap<(usize, usize), i8>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("tower height must be at least 1".into()));
        }
        for (&(i, j), &s) in &signs {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::Series(format!(
                    "sign index ({i},{j}) is not a pair of levels with i < j <= {n}"
                )));
            }
            if s != 1 && s != -1 {
                return Err(Error::Series(format!(
                    "conjugation sign for ({i},{j}) must be 1 or -1, got {s}"
                )));
            }
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                if !signs.contains_key(&(i, j)) {
                    return Err(Error::Series(format!(
                        "missing conjugation sign for pair ({i},{j})"
                    )));
                }
            }
        }
        Ok(TowerGroup { n, signs })
    }

    /// The free abelian case: every sign is 1.
    pub fn abelian(n: usize) -> Result<Self> {
        let mut signs = BTreeMap::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                signs.insert((i, j), 1);
            }
        }
        TowerGroup::new(n, signs)
    }

    pub fn klein_bottle() -> Self {
        let mut signs = BTreeMap::new();
        signs.insert((1, 2), -1);
        TowerGroup::new(2, signs).expect("valid signs")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.signs[&(i, j)]
    }

    pub fn signs(&self) -> &BTreeMap<(usize, usize), i8> {
        &self.signs
    }

    /// Whether every consecutive sign `s(i, i+1)` is -1. Towers of this
    /// shape have finitely many left-invariant orders.
    pub fn is_tararin(&self) -> bool {
        (1..self.n).all(|i| self.sign(i, i + 1) == -1)
    }

    pub fn contains(&self, exps: &[BigInt]) -> bool {
        exps.len() == self.n
    }

    /// The sign by which conjugation by `f` scales level `i`: the product
    /// of `s(i,j)` over levels `j > i` where `f` has odd exponent.
    fn mu(&self, i: usize, f: &[BigInt]) -> i8 {
        let mut m = 1i8;
        for j in (i + 1)..=self.n {
            if f[j - 1].is_odd() && self.sign(i, j) == -1 {
                m = -m;
            }
        }
        m
    }

    /// `(e f)_i = mu_i(f) e_i + f_i`.
    pub fn mul(&self, e: &[BigInt], f: &[BigInt]) -> Vec<BigInt> {
        (1..=self.n)
            .map(|i| {
                let scaled = if self.mu(i, f) == 1 {
                    e[i - 1].clone()
                } else {
                    -&e[i - 1]
                };
                scaled + &f[i - 1]
            })
            .collect()
    }

    pub fn inv(&self, e: &[BigInt]) -> Vec<BigInt> {
        let mut x = vec![BigInt::zero(); self.n];
        for i in (1..=self.n).rev() {
            x[i - 1] = if self.mu(i, &x) == 1 {
                -&e[i - 1]
            } else {
                e[i - 1].clone()
            };
        }
        x
    }

    /// The subtower on levels `1..=j`.
    pub fn sub_tower(&self, j: usize) -> Result<TowerGroup> {
        if !(1 <= j && j <= self.n) {
            return Err(Error::Precondition(format!(
                "level {j} out of range for a tower of height {}",
                self.n
            )));
        }
        let signs = self
            .signs
            .iter()
            .filter(|((_, b), _)| *b <= j)
            .map(|(&k, &v)| (k, v))
            .collect();
        TowerGroup::new(j, signs)
    }

    /// The quotient tower on levels `j+1..=n`, renumbered from 1.
    pub fn quotient_tower(&self, j: usize) -> Result<TowerGroup> {
        if !(1 <= j && j < self.n) {
            return Err(Error::Precondition(format!(
                "quotient by level {j} needs 1 <= {j} < {}",
                self.n
            )));
        }
        let signs = self
            .signs
            .iter()
            .filter(|((a, _), _)| *a > j)
            .map(|(&(a, b), &v)| ((a - j, b - j), v))
            .collect();
        TowerGroup::new(self.n - j, signs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(exps: &[i64]) -> Vec<BigInt> {
        exps.iter().map(|&e| BigInt::from(e)).collect()
    }

    #[test]
    fn rejects_incomplete_or_bad_signs() {
        assert!(TowerGroup::new(0, BTreeMap::new()).is_err());
        assert!(TowerGroup::new(2, BTreeMap::new()).is_err());
        let mut signs = BTreeMap::new();
        signs.insert((1, 2), 2);
        assert!(TowerGroup::new(2, signs.clone()).is_err());
        signs.insert((1, 2), -1);
        signs.insert((2, 1), -1);
        assert!(TowerGroup::new(2, signs).is_err());
    }

    #[test]
    fn klein_bottle_relation() {
        // a2 a1 a2^-1 = a1^-1
        let k = TowerGroup::klein_bottle();
        let a1 = v(&[1, 0]);
        let a2 = v(&[0, 1]);
        let p = k.mul(&k.mul(&a2, &a1), &k.inv(&a2));
        assert_eq!(p, v(&[-1, 0]));
    }

    #[test]
    fn klein_bottle_products() {
        let k = TowerGroup::klein_bottle();
        // a1 a2 = (e1, e2) with the a1 coordinate flipped by the right factor.
        assert_eq!(k.mul(&v(&[1, 0]), &v(&[0, 1])), v(&[-1, 1]));
        assert_eq!(k.mul(&v(&[0, 1]), &v(&[1, 0])), v(&[1, 1]));
        assert_eq!(k.mul(&v(&[2, 1]), &v(&[3, -1])), v(&[1, 0]));
    }

    #[test]
    fn inverse_cancels() {
        let k = TowerGroup::klein_bottle();
        for e in [v(&[1, 0]), v(&[0, 1]), v(&[2, -3]), v(&[-1, 5])] {
            let i = k.inv(&e);
            assert_eq!(k.mul(&e, &i), v(&[0, 0]));
            assert_eq!(k.mul(&i, &e), v(&[0, 0]));
        }
    }

    #[test]
    fn abelian_tower_is_componentwise() {
        let g = TowerGroup::abelian(3).unwrap();
        assert_eq!(g.mul(&v(&[1, 2, 3]), &v(&[-1, 1, 1])), v(&[0, 3, 4]));
        assert_eq!(g.inv(&v(&[1, -2, 3])), v(&[-1, 2, -3]));
    }

    #[test]
    fn associativity_spot_check() {
        let mut signs = BTreeMap::new();
        signs.insert((1, 2), -1);
        signs.insert((1, 3), 1);
        signs.insert((2, 3), -1);
        let g = TowerGroup::new(3, signs).unwrap();
        let xs = [v(&[1, 0, -1]), v(&[2, -1, 1]), v(&[0, 3, -2]), v(&[-1, 1, 0])];
        for x in &xs {
            for y in &xs {
                for z in &xs {
                    assert_eq!(g.mul(&g.mul(x, y), z), g.mul(x, &g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn tararin_shape() {
        assert!(TowerGroup::klein_bottle().is_tararin());
        assert!(!TowerGroup::abelian(2).unwrap().is_tararin());
        let mut signs = BTreeMap::new();
        signs.insert((1, 2), -1);
        signs.insert((2, 3), -1);
        signs.insert((1, 3), 1);
        assert!(TowerGroup::new(3, signs).unwrap().is_tararin());
    }

    #[test]
    fn sub_and_quotient_towers() {
        let mut signs = BTreeMap::new();
        signs.insert((1, 2), -1);
        signs.insert((2, 3), -1);
        signs.insert((1, 3), 1);
        let g = TowerGroup::new(3, signs).unwrap();
        let sub = g.sub_tower(2).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.sign(1, 2), -1);
        let q = g.quotient_tower(1).unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.sign(1, 2), -1);
        let q = g.quotient_tower(2).unwrap();
        assert_eq!(q.n(), 1);
        assert!(g.quotient_tower(3).is_err());
    }
}
