use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::Zero;

use super::tree::{monomials_on, TreeMonomial};
use crate::linalg::{Echelon, SparseVec};
use crate::rings::{LaurentPoly, Rational};
use crate::symfunc::{CycleType, ExponentVector, SymFunc};
use crate::{par, Error, Result};

/// Largest arity handled by the brute-force quotient.
pub const MAX_ARITY: usize = 6;

fn check_arity(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("arity must be >= 1".into()));
    }
    if n > MAX_ARITY {
        return Err(Error::ArityLimit { n, limit: MAX_ARITY });
    }
    Ok(())
}

/// Canonical monomials on `1..=n`, in a fixed deterministic order.
pub fn enumerate_monomials(n: usize) -> Result<Vec<TreeMonomial>> {
    check_arity(n)?;
    Ok(monomials_on((1u32 << n) - 1, &mut HashMap::new()))
}

/// Linear combination of monomials.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MonomialVector {
    entries: BTreeMap<TreeMonomial, Rational>,
}

impl MonomialVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c * t` after bringing `t` to canonical orientation.
    pub fn add(&mut self, t: &TreeMonomial, c: Rational) {
        let (canon, sign) = t.canonicalize();
        let c = if sign < 0 { -c } else { c };
        match self.entries.entry(canon) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
        }
    }

    pub fn entries(&self) -> &BTreeMap<TreeMonomial, Rational> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Which defining relation to instantiate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    Jacobi1,
    Jacobi2,
    SixTerm,
}

/// The relation with `(a, b, c)` replaced by `(x, y, z)`, as
/// `(coefficient, outer type, inner type, first, second, third)` terms meaning
/// `{first, {second, third}_inner}_outer`.
fn relation_terms<'a>(
    kind: RelationKind,
    x: &'a TreeMonomial,
    y: &'a TreeMonomial,
    z: &'a TreeMonomial,
) -> Vec<(u8, u8, [&'a TreeMonomial; 3])> {
    let cyclic = [[x, y, z], [y, z, x], [z, x, y]];
    let types: &[(u8, u8)] = match kind {
        RelationKind::Jacobi1 => &[(1, 1)],
        RelationKind::Jacobi2 => &[(2, 2)],
        RelationKind::SixTerm => &[(2, 1), (1, 2)],
    };
    let mut out = Vec::new();
    for &(outer, inner) in types {
        for c in cyclic {
            out.push((outer, inner, c));
        }
    }
    out
}

/// One relation instance: `relation(x, y, z)` placed inside a context.
pub fn relation_instance(
    kind: RelationKind,
    x: &TreeMonomial,
    y: &TreeMonomial,
    z: &TreeMonomial,
    plug: &impl Fn(TreeMonomial) -> TreeMonomial,
) -> MonomialVector {
    let mut v = MonomialVector::new();
    for (outer, inner, [a, b, c]) in relation_terms(kind, x, y, z) {
        let t = TreeMonomial::node(outer, a.clone(), TreeMonomial::node(inner, b.clone(), c.clone()));
        v.add(&plug(t), Rational::from_integer(1.into()));
    }
    v
}

type Plug<'a> = &'a dyn Fn(TreeMonomial) -> TreeMonomial;

/// Calls `f(x, y, z, plug)` for every node of `t` of shape `{x, {y, z}}` (up
/// to orientation), where `plug` rebuilds `t` around a replacement subtree.
fn for_each_site(
    t: &TreeMonomial,
    plug: Plug<'_>,
    f: &mut dyn FnMut(&TreeMonomial, &TreeMonomial, &TreeMonomial, Plug<'_>),
) {
    if let TreeMonomial::Node(ty, a, b) = t {
        for (inner, other) in [(b, a), (a, b)] {
            if let TreeMonomial::Node(_, y, z) = inner.as_ref() {
                f(other, y, z, plug);
            }
        }
        let ty = *ty;
        let b2 = b.clone();
        let left_plug = move |s: TreeMonomial| plug(TreeMonomial::node(ty, s, (*b2).clone()));
        for_each_site(a, &left_plug, f);
        let a2 = a.clone();
        let right_plug = move |s: TreeMonomial| plug(TreeMonomial::node(ty, (*a2).clone(), s));
        for_each_site(b, &right_plug, f);
    }
}

/// Every relation instance in arity `n`: the three defining relations at
/// every `{X, {Y, Z}}` pattern of every monomial, duplicates removed.
pub fn relation_vectors(n: usize) -> Result<Vec<MonomialVector>> {
    let monomials = enumerate_monomials(n)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in &monomials {
        for_each_site(m, &|s| s, &mut |x, y, z, plug| {
            for kind in [RelationKind::Jacobi1, RelationKind::Jacobi2, RelationKind::SixTerm] {
                let v = relation_instance(kind, x, y, z, &plug);
                if v.is_empty() {
                    continue;
                }
                let key = normalized_key(&v);
                if seen.insert(key) {
                    out.push(v);
                }
            }
        });
    }
    Ok(out)
}

/// Sign-normalized form of a relation for duplicate detection.
fn normalized_key(v: &MonomialVector) -> Vec<(TreeMonomial, Rational)> {
    let flip = v.entries.values().next().is_some_and(|c| c < &Rational::zero());
    v.entries
        .iter()
        .map(|(t, c)| (t.clone(), if flip { -c.clone() } else { c.clone() }))
        .collect()
}

/// The component of bidegree `(t1, t2)` of the quotient.
#[derive(Clone, Debug)]
pub struct Block {
    pub t1: usize,
    pub t2: usize,
    monomials: Vec<TreeMonomial>,
    index: HashMap<TreeMonomial, usize>,
    echelon: Echelon,
    basis: Vec<usize>,
    relations: usize,
}

impl Block {
    fn new(t1: usize, t2: usize, monomials: Vec<TreeMonomial>) -> Self {
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let echelon = Echelon::new(monomials.len());
        Block {
            t1,
            t2,
            monomials,
            index,
            echelon,
            basis: Vec::new(),
            relations: 0,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn monomials(&self) -> &[TreeMonomial] {
        &self.monomials
    }

    /// Monomials whose classes form the basis of this component.
    pub fn basis_monomials(&self) -> impl Iterator<Item = &TreeMonomial> + '_ {
        self.basis.iter().map(|&i| &self.monomials[i])
    }

    pub fn relation_count(&self) -> usize {
        self.relations
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub(crate) fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub(crate) fn from_parts(t1: usize, t2: usize, monomials: Vec<TreeMonomial>, echelon: Echelon, relations: usize) -> Self {
        let mut b = Block::new(t1, t2, monomials);
        b.echelon = echelon;
        b.basis = b.echelon.free_columns();
        b.relations = relations;
        b
    }

    fn to_sparse(&self, v: &MonomialVector) -> SparseVec {
        v.entries
            .iter()
            .map(|(t, c)| (self.index[t], c.clone()))
            .collect::<BTreeMap<_, _>>()
            .into_iter()
            .collect()
    }

    /// Coordinates in the basis (indices into [`Block::basis_monomials`]) of
    /// the class of `v`; all terms of `v` must lie in this block.
    pub fn coordinates(&self, v: &MonomialVector) -> Vec<(usize, Rational)> {
        let nf = self.echelon.reduce(&self.to_sparse(v));
        nf.into_iter()
            .map(|(col, c)| (self.basis.binary_search(&col).expect("free column"), c))
            .collect()
    }

    /// Trace of the relabelling `l -> sigma[l - 1] + 1` on this component.
    fn trace(&self, sigma: &[usize]) -> Rational {
        let relabel = |l: u8| (sigma[l as usize - 1] + 1) as u8;
        let parts = par::map(&self.basis, |&col| {
            let (image, sign) = self.monomials[col].relabel(&relabel).canonicalize();
            let c = self.echelon.unit_coordinate(self.index[&image], col);
            if sign < 0 {
                -c
            } else {
                c
            }
        });
        parts.into_iter().fold(Rational::zero(), |a, b| a + b)
    }
}

/// The multilinear part of arity `n` of the free algebra with two compatible
/// brackets, as an explicit quotient of the span of monomials.
#[derive(Clone, Debug)]
pub struct QuotientModel {
    n: usize,
    blocks: Vec<Block>,
}

impl QuotientModel {
    pub(crate) fn from_blocks(n: usize, blocks: Vec<Block>) -> Self {
        QuotientModel { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Components indexed by the number `t1` of type-1 brackets.
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(Block::dim).sum()
    }

    /// `(t1, t2, dim)` for every bidegree.
    pub fn bidegree_dims(&self) -> Vec<(usize, usize, usize)> {
        self.blocks.iter().map(|b| (b.t1, b.t2, b.dim())).collect()
    }

    /// `sum dim(t1, t2) q^{t1 - t2}`
    pub fn torus_character(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.blocks.iter().map(|b| {
            (b.t1 as i64 - b.t2 as i64, Rational::from_integer(b.dim().into()))
        }))
    }

    /// Normal form per bidegree: `t1 -> coordinates`.
    pub fn reduce(&self, v: &MonomialVector) -> BTreeMap<usize, Vec<(usize, Rational)>> {
        let mut split: BTreeMap<usize, MonomialVector> = BTreeMap::new();
        for (t, c) in v.entries() {
            split.entry(t.bidegree().0).or_default().add(t, c.clone());
        }
        split
            .into_iter()
            .map(|(t1, part)| (t1, self.blocks[t1].coordinates(&part)))
            .filter(|(_, coords)| !coords.is_empty())
            .collect()
    }
}

/// Eliminates the relations bidegree by bidegree.
pub fn build_quotient(n: usize) -> Result<QuotientModel> {
    let monomials = enumerate_monomials(n)?;
    let mut by_t1: Vec<Vec<TreeMonomial>> = vec![Vec::new(); n];
    for m in monomials {
        let (t1, _) = m.bidegree();
        by_t1[t1].push(m);
    }
    let mut blocks: Vec<Block> = by_t1
        .into_iter()
        .enumerate()
        .map(|(t1, ms)| Block::new(t1, n - 1 - t1, ms))
        .collect();
    let mut rows: Vec<Vec<SparseVec>> = vec![Vec::new(); n];
    if n >= 3 {
        for v in relation_vectors(n)? {
            let degrees: HashSet<usize> = v.entries().keys().map(|t| t.bidegree().0).collect();
            if degrees.len() != 1 {
                return Err(Error::Inconsistent(format!(
                    "relation spans several bidegrees: {v:?}"
                )));
            }
            let t1 = *degrees.iter().next().expect("nonempty");
            rows[t1].push(blocks[t1].to_sparse(&v));
        }
    }
    let pairs: Vec<(Block, Vec<SparseVec>)> = blocks.drain(..).zip(rows).collect();
    let blocks = par::map(&pairs, |(block, rows)| {
        let mut block = block.clone();
        for r in rows {
            block.echelon.insert(r);
        }
        block.echelon.make_reduced();
        block.basis = block.echelon.free_columns();
        block.relations = rows.len();
        block
    });
    Ok(QuotientModel { n, blocks })
}

/// Character value of the permutation `sigma` (images of `0..n`), as a
/// Laurent polynomial in the torus variable.
pub fn character_on(model: &QuotientModel, sigma: &[usize]) -> Result<LaurentPoly> {
    if sigma.len() != model.n {
        return Err(Error::InvalidArgument(format!(
            "permutation of length {} on arity {}",
            sigma.len(),
            model.n
        )));
    }
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        if s >= sigma.len() || std::mem::replace(&mut seen[s], true) {
            return Err(Error::InvalidArgument(format!("{sigma:?} is not a permutation")));
        }
    }
    Ok(LaurentPoly::from_terms(model.blocks.iter().map(|b| {
        (b.t1 as i64 - b.t2 as i64, b.trace(sigma))
    })))
}

/// Class values `(cycle type, value)` for every class of `S_n`.
pub fn class_values(model: &QuotientModel) -> Result<Vec<(CycleType, LaurentPoly)>> {
    CycleType::all(model.n)
        .into_iter()
        .map(|c| {
            let v = character_on(model, &c.representative())?;
            Ok((c, v))
        })
        .collect()
}

/// The degree-`n` character `sum_rho chi(rho) p^rho / z_rho`, computed from
/// traces alone.
pub fn full_character(model: &QuotientModel) -> Result<SymFunc<LaurentPoly>> {
    let n = model.n;
    let mut f = SymFunc::zero(n);
    for (c, value) in class_values(model)? {
        let v: &ExponentVector = c.exponents();
        let z = Rational::from_integer(v.z());
        f.add_term(v.clone(), value.scale(&(Rational::from_integer(1.into()) / z)));
    }
    Ok(f)
}
