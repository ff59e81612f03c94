use std::fmt;

use serde::Serialize;

use super::{is_cohen_macaulay, CmVerdict, FinitePoset, Violation};
use crate::arith::set_partitions;
use crate::{par, Error, Result};

/// Largest `n` for which `Pi_n` is built.
pub const MAX_POSET_ARITY: usize = 5;

/// One block of a partition together with a `Com2` monomial on it: `label`
/// counts the products of the first type, `0 <= label < |support|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Com2Element {
    /// Bit `i - 1` set for each `i` in the support.
    pub support: u32,
    pub label: u8,
}

impl Com2Element {
    pub fn new(support: u32, label: u8) -> Result<Self> {
        if support == 0 || label as u32 >= support.count_ones() {
            return Err(Error::InvalidArgument(format!(
                "label {label} out of range for support {support:b}"
            )));
        }
        Ok(Com2Element { support, label })
    }

    pub fn size(&self) -> usize {
        self.support.count_ones() as usize
    }

    fn min(&self) -> u32 {
        self.support.trailing_zeros()
    }
}

/// Element of `Pi_n(Com2)`: a set partition of `1..=n` with a `Com2`
/// monomial on each block. Blocks are ordered by smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetElement {
    blocks: Vec<Com2Element>,
}

impl PosetElement {
    pub fn new(mut blocks: Vec<Com2Element>, n: usize) -> Result<Self> {
        blocks.sort_by_key(Com2Element::min);
        let mut union = 0u32;
        for b in &blocks {
            if union & b.support != 0 {
                return Err(Error::InvalidArgument("blocks overlap".into()));
            }
            union |= b.support;
        }
        if union != (1u32 << n) - 1 {
            return Err(Error::InvalidArgument("blocks do not cover 1..n".into()));
        }
        Ok(PosetElement { blocks })
    }

    pub fn blocks(&self) -> &[Com2Element] {
        &self.blocks
    }

    /// Parses the display form, e.g. `{1,3|0}{2|0}`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let err = || Error::Parse(format!("malformed poset element `{s}`"));
        let mut blocks = Vec::new();
        for part in s.split('{').skip(1) {
            let body = part.trim_end().strip_suffix('}').ok_or_else(err)?;
            let (elems, label) = body.split_once('|').ok_or_else(err)?;
            let mut support = 0u32;
            for e in elems.split(',') {
                let i: u32 = e.trim().parse().map_err(|_| err())?;
                if i == 0 || i as usize > n {
                    return Err(err());
                }
                support |= 1 << (i - 1);
            }
            let label: u8 = label.trim().parse().map_err(|_| err())?;
            blocks.push(Com2Element::new(support, label)?);
        }
        PosetElement::new(blocks, n)
    }
}

impl fmt::Display for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let elems: Vec<String> = (0..32)
                .filter(|i| b.support >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            write!(f, "{{{}|{}}}", elems.join(","), b.label)?;
        }
        Ok(())
    }
}

/// Every element of `Pi_n`.
pub fn build_poset(n: usize) -> Result<Vec<PosetElement>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    if n > MAX_POSET_ARITY {
        return Err(Error::ArityLimit {
            n,
            limit: MAX_POSET_ARITY,
        });
    }
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        let supports: Vec<u32> = partition
            .iter()
            .map(|b| b.iter().fold(0u32, |m, &i| m | 1 << (i - 1)))
            .collect();
        let mut labels = vec![0u8; supports.len()];
        loop {
            let blocks = supports
                .iter()
                .zip(&labels)
                .map(|(&s, &l)| Com2Element { support: s, label: l })
                .collect();
            out.push(PosetElement { blocks });
            // Odometer over label vectors.
            let mut i = 0;
            while i < labels.len() {
                labels[i] += 1;
                if (labels[i] as u32) < supports[i].count_ones() {
                    break;
                }
                labels[i] = 0;
                i += 1;
            }
            if i == labels.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// `x < y`: `x` refines `y`, and each block of `y` made of `m` blocks of `x`
/// has label between the sum of theirs and that sum plus `m - 1`.
pub fn less_than(x: &PosetElement, y: &PosetElement) -> bool {
    if x == y || x.blocks.len() <= y.blocks.len() {
        return false;
    }
    for yb in &y.blocks {
        let mut m = 0u32;
        let mut sum = 0u32;
        let mut covered = 0u32;
        for xb in &x.blocks {
            if xb.support & yb.support == 0 {
                continue;
            }
            if xb.support & !yb.support != 0 {
                return false;
            }
            m += 1;
            sum += xb.label as u32;
            covered |= xb.support;
        }
        if covered != yb.support {
            return false;
        }
        let label = yb.label as u32;
        if label < sum || label - sum > m - 1 {
            return false;
        }
    }
    true
}

/// Cover relation in structural form: `y` merges exactly two blocks of `x`
/// and adds 0 or 1 to the sum of their labels.
pub fn covers(x: &PosetElement, y: &PosetElement) -> bool {
    y.blocks.len() + 1 == x.blocks.len() && less_than(x, y)
}

/// `Pi_n` with its order.
#[derive(Clone, Debug)]
pub struct Com2Poset {
    pub n: usize,
    pub elements: Vec<PosetElement>,
    pub poset: FinitePoset,
}

impl Com2Poset {
    pub fn build(n: usize) -> Result<Self> {
        let elements = build_poset(n)?;
        let poset = FinitePoset::with_covers(
            elements.len(),
            |i, j| less_than(&elements[i], &elements[j]),
            |i, j| covers(&elements[i], &elements[j]),
        );
        Ok(Com2Poset { n, elements, poset })
    }

    /// Same poset with covers recomputed from interval emptiness.
    pub fn with_interval_covers(&self) -> FinitePoset {
        FinitePoset::from_relation(self.elements.len(), |i, j| self.poset.less(i, j))
    }

    /// One `x < y` line per cover pair.
    pub fn edges(&self) -> String {
        let mut out = String::new();
        for (i, x) in self.elements.iter().enumerate() {
            for &j in self.poset.upper_covers(i) {
                out.push_str(&format!("{x} < {}\n", self.elements[j]));
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SegmentFailure {
    pub bottom: String,
    pub top: String,
    pub c: String,
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemimodularityReport {
    pub n: usize,
    pub segments_checked: usize,
    pub failures: Vec<SegmentFailure>,
    /// Semimodularity of `Pi_n` as a whole; informational only, since two
    /// distinct maximal elements above a common lower cover have no upper
    /// bound.
    pub whole_poset: bool,
}

impl SemimodularityReport {
    pub fn totally_semimodular(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every segment `[x, y]`, `x < y`, for upper semimodularity.
pub fn segment_semimodularity(p: &Com2Poset) -> SemimodularityReport {
    let len = p.elements.len();
    let pairs: Vec<(usize, usize)> = (0..len)
        .flat_map(|x| (0..len).map(move |y| (x, y)))
        .filter(|&(x, y)| p.poset.less(x, y))
        .collect();
    let results = par::map(&pairs, |&(x, y)| {
        let seg = p.poset.segment(x, y);
        p.poset.semimodular_violation_on(&seg).map(|v| (x, y, v))
    });
    let show = |i: usize| p.elements[i].to_string();
    let failures = results
        .into_iter()
        .flatten()
        .map(|(x, y, Violation { c, a, b })| SegmentFailure {
            bottom: show(x),
            top: show(y),
            c: show(c),
            a: show(a),
            b: show(b),
        })
        .collect();
    SemimodularityReport {
        n: p.n,
        segments_checked: pairs.len(),
        failures,
        whole_poset: p.poset.semimodular_violation().is_none(),
    }
}

/// Cohen-Macaulay verdict for `Pi_n` as a whole, plus the same test on each
/// open interval from the bottom to a maximal element.
#[derive(Clone, Debug, Serialize)]
pub struct PosetCmReport {
    pub n: usize,
    pub elements: usize,
    pub whole: CmVerdict,
    pub open_intervals: Vec<(String, CmVerdict)>,
}

impl PosetCmReport {
    pub fn cohen_macaulay(&self) -> bool {
        self.whole.cohen_macaulay && self.open_intervals.iter().all(|(_, v)| v.cohen_macaulay)
    }
}

pub fn cm_report(p: &Com2Poset, budget: usize) -> Result<PosetCmReport> {
    let whole = is_cohen_macaulay(&p.poset, budget)?;
    let len = p.elements.len();
    let bottom = (0..len)
        .find(|&x| (0..len).all(|y| y == x || p.poset.less(x, y)))
        .expect("Pi_n has a least element");
    let maximal: Vec<usize> = (0..len).filter(|&y| p.poset.upper_covers(y).is_empty()).collect();
    let mut open_intervals = Vec::new();
    for top in maximal {
        if top == bottom {
            continue;
        }
        let inside: Vec<usize> = (0..len)
            .filter(|&z| p.poset.less(bottom, z) && p.poset.less(z, top))
            .collect();
        if inside.is_empty() {
            continue;
        }
        let verdict = is_cohen_macaulay(&p.poset.induced(&inside), budget)?;
        open_intervals.push((p.elements[top].to_string(), verdict));
    }
    Ok(PosetCmReport {
        n: p.n,
        elements: len,
        whole,
        open_intervals,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IntervalFailure {
    pub bottom: String,
    pub top: String,
    pub betti: Vec<usize>,
}

/// Homology of every open interval `(x, y)` with nonempty interior.
#[derive(Clone, Debug, Serialize)]
pub struct IntervalCmReport {
    pub n: usize,
    pub intervals_checked: usize,
    pub failures: Vec<IntervalFailure>,
}

impl IntervalCmReport {
    pub fn cohen_macaulay(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that the reduced homology of each open interval `(x, y)` is
/// concentrated in the top degree, the length of its longest chain.
pub fn interval_cohen_macaulay(p: &Com2Poset, budget: usize) -> Result<IntervalCmReport> {
    let len = p.elements.len();
    let intervals: Vec<(usize, Vec<usize>)> = (0..len)
        .flat_map(|x| (0..len).map(move |y| (x, y)))
        .filter(|&(x, y)| p.poset.less(x, y))
        .filter_map(|(x, y)| {
            let inside: Vec<usize> = p.poset.segment(x, y).into_iter().filter(|&z| z != x && z != y).collect();
            (!inside.is_empty()).then_some(((x << 16) | y, inside))
        })
        .collect();
    let results = par::try_map(&intervals, |(key, inside)| {
        let q = p.poset.induced(inside);
        let top = q.max_chain_length();
        let betti = super::order_complex_homology(&q, budget)?;
        let ok = betti.iter().enumerate().all(|(i, &b)| {
            let reduced = if i == 0 { b - 1 } else { b };
            i == top || reduced == 0
        });
        Ok::<_, Error>((!ok).then(|| IntervalFailure {
            bottom: p.elements[key >> 16].to_string(),
            top: p.elements[key & 0xffff].to_string(),
            betti,
        }))
    })?;
    Ok(IntervalCmReport {
        n: p.n,
        intervals_checked: intervals.len(),
        failures: results.into_iter().flatten().collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StarReport {
    pub max_arity: usize,
    pub cases: usize,
    pub injective: bool,
}

/// Condition (*) for `Com2`: for fixed inner monomials `alpha_1..alpha_k`
/// of arities `m_1..m_k`, `beta -> beta(alpha_1, ..., alpha_k)` is injective.
/// In labels the composite is `label(beta) + sum label(alpha_i)`.
pub fn check_condition_star(max_arity: usize) -> StarReport {
    let mut cases = 0;
    let mut injective = true;
    for total in 1..=max_arity {
        for m in compositions(total) {
            let k = m.len();
            let mut alpha = vec![0usize; k];
            loop {
                let base: usize = alpha.iter().sum();
                let images: Vec<usize> = (0..k).map(|beta| beta + base).collect();
                let mut sorted = images.clone();
                sorted.sort_unstable();
                sorted.dedup();
                injective &= sorted.len() == images.len() && images.iter().all(|&t| t < total);
                cases += 1;
                let mut i = 0;
                while i < k {
                    alpha[i] += 1;
                    if alpha[i] < m[i] {
                        break;
                    }
                    alpha[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
    }
    StarReport {
        max_arity,
        cases,
        injective,
    }
}

/// Ordered compositions of `n` into positive parts.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
