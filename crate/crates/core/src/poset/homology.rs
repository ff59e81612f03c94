use std::collections::HashMap;

use serde::Serialize;

use super::FinitePoset;
use crate::linalg::{Echelon, SparseVec};
use crate::rings::Rational;
use crate::{par, Error, Result};

/// Default cap on the total number of chains in an order complex.
pub const DEFAULT_CHAIN_BUDGET: usize = 2_000_000;

/// Order complex: strict chains `a_0 < ... < a_k` by dimension `k`, with
/// `d(a_0 < ... < a_k) = sum_i (-1)^i (a_0 < ... ^a_i ... < a_k)`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    chains: Vec<Vec<Vec<usize>>>,
    /// `boundaries[k]` maps each `k`-chain to its faces among the
    /// `(k-1)`-chains; empty for `k = 0`.
    boundaries: Vec<Vec<SparseVec>>,
}

impl ChainComplex {
    /// Fails with [`Error::BudgetExceeded`] before producing anything when
    /// the complex has more than `budget` chains.
    pub fn build(poset: &FinitePoset, budget: usize) -> Result<Self> {
        let n = poset.len();
        let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut layer: Vec<Vec<usize>> = (0..n).map(|x| vec![x]).collect();
        let mut total = 0usize;
        while !layer.is_empty() {
            total += layer.len();
            if total > budget {
                return Err(Error::BudgetExceeded(format!(
                    "order complex has more than {budget} chains"
                )));
            }
            let next: Vec<Vec<usize>> = layer
                .iter()
                .flat_map(|c| {
                    let last = *c.last().expect("nonempty");
                    (0..n).filter(move |&y| poset.less(last, y)).map(move |y| {
                        let mut d = c.clone();
                        d.push(y);
                        d
                    })
                })
                .collect();
            chains.push(layer);
            layer = next;
        }
        let mut boundaries = vec![Vec::new()];
        for k in 1..chains.len() {
            let index: HashMap<&[usize], usize> =
                chains[k - 1].iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
            let rows = par::map(&chains[k], |c| {
                let mut row: SparseVec = (0..c.len())
                    .map(|i| {
                        let mut face = c.clone();
                        face.remove(i);
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        (index[face.as_slice()], Rational::from_integer(sign.into()))
                    })
                    .collect();
                row.sort_by_key(|(col, _)| *col);
                row
            });
            boundaries.push(rows);
        }
        let complex = ChainComplex { chains, boundaries };
        if !complex.boundary_squares_to_zero() {
            return Err(Error::Inconsistent("d o d != 0 in the order complex".into()));
        }
        Ok(complex)
    }

    /// Number of `k`-chains for each `k`.
    pub fn chain_counts(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.chains.len()).all(|k| {
            self.boundaries[k].iter().all(|row| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for (face, s) in row {
                    let s: i64 = if *s > Rational::from_integer(0.into()) { 1 } else { -1 };
                    for (g, t) in &self.boundaries[k - 1][*face] {
                        let t: i64 = if *t > Rational::from_integer(0.into()) { 1 } else { -1 };
                        *acc.entry(*g).or_default() += s * t;
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }

    /// Rank of `d_k` for each `k` (`rank d_0 = 0`).
    pub fn boundary_ranks(&self) -> Vec<usize> {
        let dims: Vec<usize> = (0..self.chains.len()).collect();
        par::map(&dims, |&k| {
            if k == 0 {
                return 0;
            }
            let mut e = Echelon::new(self.chains[k - 1].len());
            for row in &self.boundaries[k] {
                e.insert(row);
            }
            e.rank()
        })
    }

    /// Unreduced rational Betti numbers.
    pub fn betti(&self) -> Vec<usize> {
        let ranks = self.boundary_ranks();
        let counts = self.chain_counts();
        (0..counts.len())
            .map(|k| counts[k] - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
            .collect()
    }
}

/// Betti numbers `b_0, b_1, ...` of the order complex.
pub fn order_complex_homology(poset: &FinitePoset, budget: usize) -> Result<Vec<usize>> {
    Ok(ChainComplex::build(poset, budget)?.betti())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    /// Length (in edges) of the longest chain.
    pub length: usize,
    pub betti: Vec<usize>,
    pub cohen_macaulay: bool,
}

/// `H_i = 0` for `0 < i < length`.
pub fn is_cohen_macaulay(poset: &FinitePoset, budget: usize) -> Result<CmVerdict> {
    let length = poset.max_chain_length();
    let betti = order_complex_homology(poset, budget)?;
    let cohen_macaulay = (1..length).all(|i| betti.get(i).copied().unwrap_or(0) == 0);
    Ok(CmVerdict {
        length,
        betti,
        cohen_macaulay,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_and_antichains() {
        let point = FinitePoset::from_covers(1, &[]);
        assert_eq!(order_complex_homology(&point, 10).unwrap(), vec![1]);
        let two = FinitePoset::from_covers(2, &[]);
        assert_eq!(order_complex_homology(&two, 10).unwrap(), vec![2]);
    }

    #[test]
    fn circle() {
        // Four elements, two minimal below two maximal: the order complex
        // is a 4-cycle.
        let bowtie = FinitePoset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(order_complex_homology(&bowtie, 100).unwrap(), vec![1, 1]);
        let v = is_cohen_macaulay(&bowtie, 100).unwrap();
        assert_eq!(v.length, 1);
        assert!(v.cohen_macaulay);
    }

    #[test]
    fn sphere_is_not_cm_below_top() {
        // Face poset of the boundary of a triangle plus two cone points gives
        // a 2-sphere: H_2 = 1 only.
        let pairs = [(0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5), (3, 6), (4, 6), (5, 6), (3, 7), (4, 7), (5, 7)];
        let sphere = FinitePoset::from_covers(8, &pairs);
        assert_eq!(order_complex_homology(&sphere, 1000).unwrap(), vec![1, 0, 1]);
        // Two disjoint circles of length 2 in the chain sense: H_1 = 2.
        let two_circles = FinitePoset::from_covers(8, &[(0, 2), (0, 3), (1, 2), (1, 3), (4, 6), (4, 7), (5, 6), (5, 7)]);
        let v = is_cohen_macaulay(&two_circles, 1000).unwrap();
        assert_eq!(v.betti, vec![2, 2]);
    }

    #[test]
    fn budget_is_enforced() {
        let chain = FinitePoset::from_covers(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(ChainComplex::build(&chain, 5), Err(Error::BudgetExceeded(_))));
        let c = ChainComplex::build(&chain, 100).unwrap();
        assert_eq!(c.chain_counts(), vec![4, 6, 4, 1]);
        assert_eq!(c.betti(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn non_cm_example() {
        // A bowtie with one extra element below a minimal one: longest chain
        // has length 2, and the 4-cycle through the other minimal element
        // survives in H_1.
        let pairs = [(0, 2), (0, 3), (1, 2), (1, 3), (4, 0)];
        let p = FinitePoset::from_covers(5, &pairs);
        let v = is_cohen_macaulay(&p, 1000).unwrap();
        assert_eq!(v.length, 2);
        assert_eq!(v.betti, vec![1, 1, 0]);
        assert!(!v.cohen_macaulay);
    }
}
