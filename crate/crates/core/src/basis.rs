//! The recursive monomial basis `B(A)` of the multilinear part of the free
//! algebra with two compatible brackets, and the induced basis of `P2`.
//!
//! For `A = {a_1 < ... < a_n}`, `B(A)` consists of
//!
//! * `{a_i, b'}_1` with `i < n` and `b'` in `B(A \ {a_i})`,
//! * `{b_1, b_2}_2` with `A = A_1 + A_2`, `a_n` in `A_2`, `b_2` in `B(A_2)`
//!   and `b_1` in `B(A_1)` either a generator or a type-1 bracket.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::arith::set_partitions;
use crate::freealg::{self, MonomialVector, TreeMonomial};
use crate::linalg::Echelon;
use crate::rings::Rational;
use crate::{Error, Result};

/// Largest `|A|` for enumeration.
pub const MAX_BASIS_ARITY: usize = 8;

fn check(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("the generator set must be nonempty".into()));
    }
    if n > MAX_BASIS_ARITY {
        return Err(Error::ArityLimit {
            n,
            limit: MAX_BASIS_ARITY,
        });
    }
    Ok(())
}

/// `B({1, ..., k})`, memoized by `k`, in canonical orientation.
fn standard(k: usize, memo: &mut HashMap<usize, Vec<TreeMonomial>>) -> Vec<TreeMonomial> {
    if let Some(v) = memo.get(&k) {
        return v.clone();
    }
    let out = if k == 1 {
        vec![TreeMonomial::leaf(1)]
    } else {
        let labels: Vec<u8> = (1..=k as u8).collect();
        let mut out = Vec::new();
        for i in 0..k - 1 {
            let rest: Vec<u8> = labels.iter().copied().filter(|&l| l != labels[i]).collect();
            for b in on_labels(&rest, memo) {
                out.push(TreeMonomial::node(1, TreeMonomial::leaf(labels[i]), b).canonicalize().0);
            }
        }
        let last = labels[k - 1];
        let others = &labels[..k - 1];
        for mask in 1u32..(1 << (k - 1)) {
            let a1: Vec<u8> = (0..k - 1).filter(|j| mask >> j & 1 == 1).map(|j| others[j]).collect();
            let mut a2: Vec<u8> = (0..k - 1).filter(|j| mask >> j & 1 == 0).map(|j| others[j]).collect();
            a2.push(last);
            let b1s: Vec<TreeMonomial> = on_labels(&a1, memo)
                .into_iter()
                .filter(|b| b.root_type() != Some(2))
                .collect();
            let b2s = on_labels(&a2, memo);
            for b1 in &b1s {
                for b2 in &b2s {
                    out.push(TreeMonomial::node(2, b1.clone(), b2.clone()).canonicalize().0);
                }
            }
        }
        out
    };
    memo.insert(k, out.clone());
    out
}

fn on_labels(labels: &[u8], memo: &mut HashMap<usize, Vec<TreeMonomial>>) -> Vec<TreeMonomial> {
    let relabel = |l: u8| labels[l as usize - 1];
    standard(labels.len(), memo)
        .iter()
        .map(|b| b.relabel(&relabel))
        .collect()
}

/// `B(A)` for the generators `a_l`, `l` in `labels` (strictly increasing).
pub fn enumerate_b(labels: &[u8]) -> Result<Vec<TreeMonomial>> {
    check(labels.len())?;
    if labels.windows(2).any(|w| w[0] >= w[1]) || labels[0] == 0 {
        return Err(Error::InvalidArgument(
            "generator labels must be positive and strictly increasing".into(),
        ));
    }
    Ok(on_labels(labels, &mut HashMap::new()))
}

/// `B({a_1, ..., a_n})`
pub fn enumerate_b_n(n: usize) -> Result<Vec<TreeMonomial>> {
    check(n)?;
    enumerate_b(&(1..=n as u8).collect::<Vec<_>>())
}

/// Product `b_1 * ... * b_k` of basis monomials on the blocks of a set
/// partition, factors ordered by smallest label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P2Monomial(pub Vec<TreeMonomial>);

impl fmt::Display for P2Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The basis of `P2(n)` induced by `B`.
pub fn enumerate_p2_basis(n: usize) -> Result<Vec<P2Monomial>> {
    check(n)?;
    let mut memo = HashMap::new();
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        let factors: Vec<Vec<TreeMonomial>> =
            partition.iter().map(|block| on_labels(block, &mut memo)).collect();
        let mut current = Vec::with_capacity(factors.len());
        product(&factors, &mut current, &mut out);
    }
    Ok(out)
}

fn product(factors: &[Vec<TreeMonomial>], current: &mut Vec<TreeMonomial>, out: &mut Vec<P2Monomial>) {
    match factors.split_first() {
        None => out.push(P2Monomial(current.clone())),
        Some((first, rest)) => {
            for b in first {
                current.push(b.clone());
                product(rest, current, out);
                current.pop();
            }
        }
    }
}

/// `|B|` per bidegree against the quotient dimension.
#[derive(Clone, Debug, Serialize)]
pub struct BidegreeCount {
    pub t1: usize,
    pub t2: usize,
    pub basis_elements: usize,
    pub quotient_dim: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependenceReport {
    pub n: usize,
    pub size: usize,
    pub dim: usize,
    pub rank: usize,
    pub independent: bool,
    pub bidegrees: Vec<BidegreeCount>,
}

/// Maps `B({a_1..a_n})` into the brute-force quotient and measures the rank
/// of the image, bidegree by bidegree.
pub fn verify_independence(n: usize) -> Result<IndependenceReport> {
    let model = freealg::load_or_build(n)?;
    let elements = enumerate_b_n(n)?;
    let mut bidegrees = Vec::new();
    for block in model.blocks() {
        let mine: Vec<&TreeMonomial> = elements.iter().filter(|b| b.bidegree().0 == block.t1).collect();
        let mut e = Echelon::new(block.dim());
        for b in &mine {
            let mut v = MonomialVector::new();
            v.add(b, Rational::from_integer(1.into()));
            e.insert(&block.coordinates(&v));
        }
        bidegrees.push(BidegreeCount {
            t1: block.t1,
            t2: block.t2,
            basis_elements: mine.len(),
            quotient_dim: block.dim(),
            rank: e.rank(),
        });
    }
    let rank = bidegrees.iter().map(|b| b.rank).sum();
    let dim = model.dim();
    Ok(IndependenceReport {
        n,
        size: elements.len(),
        dim,
        rank,
        independent: rank == elements.len() && rank == dim,
        bidegrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let b1 = enumerate_b_n(1).unwrap();
        assert_eq!(b1, vec![TreeMonomial::leaf(1)]);
        let b2: Vec<String> = enumerate_b_n(2).unwrap().iter().map(|b| b.to_string()).collect();
        assert_eq!(b2, vec!["{a1,a2}1", "{a1,a2}2"]);
        assert_eq!(enumerate_b_n(3).unwrap().len(), 9);
    }

    #[test]
    fn counts() {
        for n in 1..=7usize {
            let b = enumerate_b_n(n).unwrap();
            assert_eq!(b.len(), n.pow(n as u32 - 1));
            assert!(b.iter().all(|m| m.is_canonical() && m.arity() == n));
            let mut leaves = b[0].leaves();
            leaves.sort();
            assert_eq!(leaves, (1..=n as u8).collect::<Vec<_>>());
        }
        for n in 1..=6usize {
            assert_eq!(enumerate_p2_basis(n).unwrap().len(), (n + 1).pow(n as u32 - 1));
        }
    }

    #[test]
    fn labels_are_relabelled_in_order() {
        let b = enumerate_b(&[2, 5, 7]).unwrap();
        assert_eq!(b.len(), 9);
        assert!(b.iter().all(|m| {
            let mut l = m.leaves();
            l.sort();
            l == vec![2, 5, 7]
        }));
        assert!(enumerate_b(&[3, 1]).is_err());
    }

    #[test]
    fn p2_listing() {
        let listing: Vec<String> = enumerate_p2_basis(2).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(listing, vec!["{a1,a2}1", "{a1,a2}2", "a1 * a2"]);
    }

    #[test]
    fn independence_small() {
        for n in 1..=4 {
            let r = verify_independence(n).unwrap();
            assert!(r.independent, "{r:?}");
            for b in &r.bidegrees {
                assert_eq!(b.basis_elements, b.quotient_dim);
            }
        }
    }
}
