use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

/// Bracket monomial: a full binary tree with labelled leaves and a bracket
/// type (1 or 2) on each internal node.
///
/// Leaf labels are 1-based. A monomial is canonical when, at every internal
/// node, the smallest label of the left subtree is below the smallest label
/// of the right subtree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeMonomial {
    Leaf(u8),
    Node(u8, Box<TreeMonomial>, Box<TreeMonomial>),
}

impl TreeMonomial {
    pub fn leaf(label: u8) -> Self {
        TreeMonomial::Leaf(label)
    }

    /// `{left, right}_ty`, as given (no reorientation).
    pub fn node(ty: u8, left: TreeMonomial, right: TreeMonomial) -> Self {
        assert!(ty == 1 || ty == 2, "bracket type must be 1 or 2");
        TreeMonomial::Node(ty, Box::new(left), Box::new(right))
    }

    pub fn min_leaf(&self) -> u8 {
        match self {
            TreeMonomial::Leaf(l) => *l,
            TreeMonomial::Node(_, a, b) => a.min_leaf().min(b.min_leaf()),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            TreeMonomial::Leaf(_) => 1,
            TreeMonomial::Node(_, a, b) => a.arity() + b.arity(),
        }
    }

    /// Leaf labels, left to right.
    pub fn leaves(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u8>) {
        match self {
            TreeMonomial::Leaf(l) => out.push(*l),
            TreeMonomial::Node(_, a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// `(t1, t2)`: numbers of brackets of each type.
    pub fn bidegree(&self) -> (usize, usize) {
        match self {
            TreeMonomial::Leaf(_) => (0, 0),
            TreeMonomial::Node(ty, a, b) => {
                let (a1, a2) = a.bidegree();
                let (b1, b2) = b.bidegree();
                if *ty == 1 {
                    (a1 + b1 + 1, a2 + b2)
                } else {
                    (a1 + b1, a2 + b2 + 1)
                }
            }
        }
    }

    /// Type of the root bracket; `None` for a generator.
    pub fn root_type(&self) -> Option<u8> {
        match self {
            TreeMonomial::Leaf(_) => None,
            TreeMonomial::Node(ty, _, _) => Some(*ty),
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            TreeMonomial::Leaf(_) => true,
            TreeMonomial::Node(_, a, b) => {
                a.min_leaf() < b.min_leaf() && a.is_canonical() && b.is_canonical()
            }
        }
    }

    /// Canonical orientation by flips, with sign `(-1)^flips`.
    pub fn canonicalize(&self) -> (TreeMonomial, i32) {
        match self {
            TreeMonomial::Leaf(l) => (TreeMonomial::Leaf(*l), 1),
            TreeMonomial::Node(ty, a, b) => {
                let (ca, sa) = a.canonicalize();
                let (cb, sb) = b.canonicalize();
                let sign = sa * sb;
                if ca.min_leaf() < cb.min_leaf() {
                    (TreeMonomial::node(*ty, ca, cb), sign)
                } else {
                    (TreeMonomial::node(*ty, cb, ca), -sign)
                }
            }
        }
    }

    /// Replaces every leaf label `l` by `f(l)`; the result is generally not
    /// canonical.
    pub fn relabel(&self, f: &impl Fn(u8) -> u8) -> TreeMonomial {
        match self {
            TreeMonomial::Leaf(l) => TreeMonomial::Leaf(f(*l)),
            TreeMonomial::Node(ty, a, b) => TreeMonomial::node(*ty, a.relabel(f), b.relabel(f)),
        }
    }

    /// Parses the display form, e.g. `{a1,{a2,a3}2}1`.
    pub fn parse(s: &str) -> Result<Self> {
        let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_at(&bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(t)
    }
}

fn parse_at(s: &[char], pos: &mut usize) -> Result<TreeMonomial> {
    let err = || Error::Parse(format!("malformed monomial `{}`", s.iter().collect::<String>()));
    match s.get(*pos) {
        Some('a') => {
            *pos += 1;
            let start = *pos;
            while s.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let label: String = s[start..*pos].iter().collect();
            let label: u8 = label.parse().map_err(|_| err())?;
            if label == 0 {
                return Err(err());
            }
            Ok(TreeMonomial::Leaf(label))
        }
        Some('{') => {
            *pos += 1;
            let left = parse_at(s, pos)?;
            if s.get(*pos) != Some(&',') {
                return Err(err());
            }
            *pos += 1;
            let right = parse_at(s, pos)?;
            if s.get(*pos) != Some(&'}') {
                return Err(err());
            }
            *pos += 1;
            let ty = match s.get(*pos) {
                Some('1') => 1,
                Some('2') => 2,
                _ => return Err(err()),
            };
            *pos += 1;
            Ok(TreeMonomial::node(ty, left, right))
        }
        _ => Err(err()),
    }
}

impl fmt::Display for TreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeMonomial::Leaf(l) => write!(f, "a{l}"),
            TreeMonomial::Node(ty, a, b) => write!(f, "{{{a},{b}}}{ty}"),
        }
    }
}

impl fmt::Debug for TreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every canonical monomial on the labels in `mask` (bit `l - 1` for label
/// `l`), memoized by mask.
pub(crate) fn monomials_on(mask: u32, memo: &mut HashMap<u32, Vec<TreeMonomial>>) -> Vec<TreeMonomial> {
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let out = if mask.count_ones() == 1 {
        vec![TreeMonomial::Leaf(mask.trailing_zeros() as u8 + 1)]
    } else {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut out = Vec::new();
        // Left part holds the smallest label; right part is a nonempty
        // subset of the remaining ones.
        let mut sub = rest;
        while sub != 0 {
            let right = sub;
            let left = mask ^ right;
            let ls = monomials_on(left, memo);
            let rs = monomials_on(right, memo);
            for ty in 1..=2 {
                for l in &ls {
                    for r in &rs {
                        out.push(TreeMonomial::node(ty, l.clone(), r.clone()));
                    }
                }
            }
            sub = (sub - 1) & rest;
        }
        out
    };
    memo.insert(mask, out.clone());
    out
}
