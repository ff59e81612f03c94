use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::factorial;
use crate::{Error, Result};

/// Multiplicities `(n_1, ..., n_k)` of the power-sum monomial
/// `p_1^{n_1} ... p_k^{n_k}`; trailing zeros are trimmed.
///
/// The same vector describes a conjugacy class of `S_n`: `n_i` cycles of
/// length `i`, with `n = degree()`.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(mut mults: Vec<u32>) -> Self {
        while mults.last() == Some(&0) {
            mults.pop();
        }
        ExponentVector(mults)
    }

    /// The constant monomial.
    pub fn empty() -> Self {
        ExponentVector(Vec::new())
    }

    /// `p_i` alone.
    pub fn single(i: usize) -> Self {
        assert!(i >= 1);
        let mut v = vec![0; i];
        v[i - 1] = 1;
        ExponentVector(v)
    }

    /// `p_i^e`
    pub fn power(i: usize, e: u32) -> Self {
        assert!(i >= 1);
        let mut v = vec![0; i];
        v[i - 1] = e;
        ExponentVector::new(v)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.0
    }

    /// Multiplicity of `p_i` (1-based).
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest index with a nonzero multiplicity (0 for the constant).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum i * n_i`
    pub fn degree(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &m)| (i + 1) * m as usize)
            .sum()
    }

    /// `sum n_i`: the number of cycles.
    pub fn parts(&self) -> usize {
        self.0.iter().map(|&m| m as usize).sum()
    }

    /// Centralizer order `z = prod i^{n_i} n_i!`.
    pub fn z(&self) -> BigInt {
        self.0.iter().enumerate().fold(BigInt::one(), |acc, (i, &m)| {
            acc * BigInt::from(i + 1).pow(m) * factorial(m as usize)
        })
    }

    /// Multiplies monomials: adds multiplicities.
    pub fn add(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        ExponentVector::new(
            (1..=len)
                .map(|i| self.get(i) + other.get(i))
                .collect(),
        )
    }

    /// The image of the monomial under `p_j -> p_{k j}`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.0.is_empty() || k == 1 {
            return self.clone();
        }
        let mut v = vec![0; self.0.len() * k];
        for (i, &m) in self.0.iter().enumerate() {
            v[(i + 1) * k - 1] = m;
        }
        ExponentVector(v)
    }

    /// Returns `w` with `w.dilate(k) == self`, if every index with a nonzero
    /// multiplicity is divisible by `k`.
    pub fn contract(&self, k: usize) -> Option<Self> {
        assert!(k >= 1);
        let mut out = Vec::new();
        for (i, &m) in self.0.iter().enumerate() {
            let idx = i + 1;
            if m == 0 {
                continue;
            }
            if idx % k != 0 {
                return None;
            }
            let j = idx / k;
            if out.len() < j {
                out.resize(j, 0);
            }
            out[j - 1] = m;
        }
        Some(ExponentVector::new(out))
    }

    /// Every exponent vector of exactly the given degree, in the canonical
    /// order (`p_1^n` first).
    pub fn of_degree(n: usize) -> Vec<ExponentVector> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_into(n, n, &mut current, &mut out);
        let mut vs: Vec<_> = out
            .into_iter()
            .map(|parts: Vec<usize>| {
                let mut m = vec![0u32; n];
                for p in parts {
                    m[p - 1] += 1;
                }
                ExponentVector::new(m)
            })
            .collect();
        vs.sort();
        vs
    }

    /// Every exponent vector with `1 <= degree <= n`.
    pub fn up_to_degree(n: usize) -> Vec<ExponentVector> {
        (1..=n).flat_map(Self::of_degree).collect()
    }
}

fn partitions_into(n: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max.min(n)).rev() {
        current.push(part);
        partitions_into(n - part, part, current, out);
        current.pop();
    }
}

impl Ord for ExponentVector {
    /// Degree first; within a degree, multiplicity vectors in decreasing
    /// lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    /// Power-sum monomial notation, e.g. `p1^2 p3`; `1` for the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &m) in self.0.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "p{}", i + 1)?;
            } else {
                write!(f, "p{}^{}", i + 1, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Conjugacy class of `S_n` given by cycle multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct CycleType(ExponentVector);

impl CycleType {
    pub fn new(mults: Vec<u32>) -> Result<Self> {
        let v = ExponentVector::new(mults);
        if v.is_empty() {
            return Err(Error::InvalidArgument(
                "a cycle type needs at least one cycle".into(),
            ));
        }
        Ok(CycleType(v))
    }

    /// The identity of `S_n`.
    pub fn identity(n: usize) -> Self {
        CycleType(ExponentVector::power(1, n as u32))
    }

    /// Every conjugacy class of `S_n`.
    pub fn all(n: usize) -> Vec<CycleType> {
        ExponentVector::of_degree(n)
            .into_iter()
            .map(CycleType)
            .collect()
    }

    /// Parses `"c1,c2,..."` (multiplicities of cycle lengths 1, 2, ...).
    pub fn parse(s: &str) -> Result<Self> {
        let mults = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("malformed cycle type `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(mults)
    }

    pub fn n(&self) -> usize {
        self.0.degree()
    }

    pub fn exponents(&self) -> &ExponentVector {
        &self.0
    }

    pub fn get(&self, len: usize) -> u32 {
        self.0.get(len)
    }

    /// Length of the shortest cycle.
    pub fn shortest(&self) -> usize {
        (1..=self.0.len())
            .find(|&i| self.0.get(i) > 0)
            .expect("cycle types are nonempty")
    }

    /// A permutation of `{0, ..., n-1}` with this cycle type, cycles laid out
    /// consecutively from the shortest.
    pub fn representative(&self) -> Vec<usize> {
        let n = self.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for len in 1..=self.0.len() {
            for _ in 0..self.0.get(len) {
                for j in 0..len {
                    perm[start + j] = start + (j + 1) % len;
                }
                start += len;
            }
        }
        perm
    }

    /// Cycle type of a permutation given as an image vector.
    pub fn of_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut mults = vec![0u32; n.max(1)];
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
                len += 1;
            }
            mults[len - 1] += 1;
        }
        CycleType(ExponentVector::new(mults))
    }
}

impl TryFrom<Vec<u32>> for CycleType {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        CycleType::new(v)
    }
}

impl From<CycleType> for Vec<u32> {
    fn from(c: CycleType) -> Vec<u32> {
        c.0 .0
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0 .0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{self}")
    }
}
