use serde::Serialize;

/// A finite poset given by its strict order, with cover relations derived
/// from interval emptiness.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    lt: Vec<Vec<bool>>,
    upper: Vec<Vec<usize>>,
}

/// A triple `c < a, b` (both covers) with no common upper cover of `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub c: usize,
    pub a: usize,
    pub b: usize,
}

impl FinitePoset {
    /// From a strict order relation on `0..len`. The relation is taken as
    /// given; see [`FinitePoset::check_order`].
    pub fn from_relation(len: usize, less: impl Fn(usize, usize) -> bool) -> Self {
        let lt: Vec<Vec<bool>> = (0..len).map(|i| (0..len).map(|j| less(i, j)).collect()).collect();
        let upper = (0..len)
            .map(|x| {
                (0..len)
                    .filter(|&y| lt[x][y] && !(0..len).any(|z| lt[x][z] && lt[z][y]))
                    .collect()
            })
            .collect();
        FinitePoset { lt, upper }
    }

    /// Like [`FinitePoset::from_relation`] with the covers supplied directly.
    pub fn with_covers(len: usize, less: impl Fn(usize, usize) -> bool, covers: impl Fn(usize, usize) -> bool) -> Self {
        let lt: Vec<Vec<bool>> = (0..len).map(|i| (0..len).map(|j| less(i, j)).collect()).collect();
        let upper = (0..len).map(|x| (0..len).filter(|&y| covers(x, y)).collect()).collect();
        FinitePoset { lt, upper }
    }

    /// Poset from cover pairs `(lower, upper)`; the order is their
    /// transitive closure.
    pub fn from_covers(len: usize, pairs: &[(usize, usize)]) -> Self {
        let mut lt = vec![vec![false; len]; len];
        for &(a, b) in pairs {
            lt[a][b] = true;
        }
        for k in 0..len {
            for i in 0..len {
                if lt[i][k] {
                    let row = lt[k].clone();
                    for (j, &above) in row.iter().enumerate() {
                        if above {
                            lt[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_relation(len, |i, j| lt[i][j])
    }

    pub fn len(&self) -> usize {
        self.lt.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lt.is_empty()
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.lt[x][y]
    }

    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.upper[x].contains(&y)
    }

    /// Elements covering `x`.
    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    /// Irreflexive, antisymmetric and transitive.
    pub fn check_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| !self.lt[i][i])
            && (0..n).all(|i| (0..n).all(|j| !(self.lt[i][j] && self.lt[j][i])))
            && (0..n).all(|i| {
                (0..n).all(|j| !self.lt[i][j] || (0..n).all(|k| !self.lt[j][k] || self.lt[i][k]))
            })
    }

    /// `{z : x <= z <= y}`
    pub fn segment(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| z == x || z == y || (self.lt[x][z] && self.lt[z][y]))
            .collect()
    }

    /// Upper semimodularity of the subposet on `members` (a convex subset,
    /// so its covers are covers of the whole poset).
    pub fn semimodular_violation_on(&self, members: &[usize]) -> Option<Violation> {
        let inside = |z: usize| members.binary_search(&z).is_ok();
        for &c in members {
            let ups: Vec<usize> = self.upper[c].iter().copied().filter(|&z| inside(z)).collect();
            for (i, &a) in ups.iter().enumerate() {
                for &b in &ups[i + 1..] {
                    let joined = self.upper[a]
                        .iter()
                        .any(|&d| inside(d) && self.upper[b].contains(&d));
                    if !joined {
                        return Some(Violation { c, a, b });
                    }
                }
            }
        }
        None
    }

    pub fn semimodular_violation(&self) -> Option<Violation> {
        let all: Vec<usize> = (0..self.len()).collect();
        self.semimodular_violation_on(&all)
    }

    /// Longest chain, counted in edges.
    pub fn max_chain_length(&self) -> usize {
        let n = self.len();
        let mut memo = vec![None; n];
        (0..n).map(|x| self.height_above(x, &mut memo)).max().unwrap_or(0)
    }

    fn height_above(&self, x: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(h) = memo[x] {
            return h;
        }
        let ups = self.upper[x].clone();
        let h = ups.into_iter().map(|y| 1 + self.height_above(y, memo)).max().unwrap_or(0);
        memo[x] = Some(h);
        h
    }

    /// Every maximal chain, as element lists from a minimal element up.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let minimal: Vec<usize> = (0..n).filter(|&y| !(0..n).any(|x| self.lt[x][y])).collect();
        let mut out = Vec::new();
        for m in minimal {
            let mut chain = vec![m];
            self.extend_chain(&mut chain, &mut out);
        }
        out
    }

    fn extend_chain(&self, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *chain.last().expect("nonempty");
        if self.upper[last].is_empty() {
            out.push(chain.clone());
            return;
        }
        for &y in &self.upper[last] {
            chain.push(y);
            self.extend_chain(chain, out);
            chain.pop();
        }
    }

    /// The induced subposet on `members`, reindexed `0..members.len()`.
    pub fn induced(&self, members: &[usize]) -> FinitePoset {
        FinitePoset::from_relation(members.len(), |i, j| self.lt[members[i]][members[j]])
    }
}
