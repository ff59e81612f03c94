//! Sparse row echelon forms over the rationals.
//!
//! Rows are kept with their smallest column as pivot (normalized to 1).
//! Reduction eliminates pivot columns in increasing order, so a reduced vector
//! is supported on free columns and is the unique normal form modulo the row
//! span.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::rings::Rational;

/// Sparse vector as `(column, value)` pairs sorted by column, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivots: HashMap<usize, usize>,
    reduced: bool,
}

fn to_map(v: &[(usize, Rational)]) -> BTreeMap<usize, Rational> {
    v.iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (*c, x.clone()))
        .collect()
}

fn axpy(work: &mut BTreeMap<usize, Rational>, factor: &Rational, row: &[(usize, Rational)]) {
    for (j, x) in row {
        let entry = work.entry(*j).or_insert_with(Rational::zero);
        *entry -= factor * x;
        if entry.is_zero() {
            work.remove(j);
        }
    }
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            ..Default::default()
        }
    }

    /// Rebuilds a reduced echelon form from rows as returned by
    /// [`Echelon::rows`] after [`Echelon::make_reduced`].
    pub fn from_reduced_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        let pivots = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        Echelon {
            ncols,
            rows,
            pivots,
            reduced: true,
        }
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Rational)]) -> bool {
        let mut work = to_map(v);
        // Head reduction: only the leading column has to be free.
        loop {
            let (lead, value) = match work.iter().next() {
                Some((&c, x)) => (c, x.clone()),
                None => return false,
            };
            match self.pivots.get(&lead) {
                Some(&r) => {
                    let row = &self.rows[r];
                    work.remove(&lead);
                    axpy(&mut work, &value, &row[1..]);
                }
                None => {
                    assert!(lead < self.ncols, "column {lead} out of range");
                    let inv = Rational::one() / &value;
                    let row: SparseVec = work.into_iter().map(|(c, x)| (c, x * &inv)).collect();
                    self.pivots.insert(lead, self.rows.len());
                    self.rows.push(row);
                    self.reduced = false;
                    return true;
                }
            }
        }
    }

    /// Normal form of `v` modulo the row span, supported on free columns.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut work = to_map(v);
        let mut cursor = 0;
        loop {
            let next = work.range(cursor..).map(|(&c, _)| c).find(|c| self.is_pivot(*c));
            let Some(c) = next else { break };
            let value = work.remove(&c).expect("present");
            let row = &self.rows[self.pivots[&c]];
            axpy(&mut work, &value, &row[1..]);
            cursor = c + 1;
        }
        work.into_iter().collect()
    }

    /// Brings the rows to reduced echelon form: afterwards every row is its
    /// pivot plus free columns only, and [`Echelon::pivot_row`] gives the
    /// normal form of a pivot column directly.
    pub fn make_reduced(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<(usize, usize)> = self.pivots.iter().map(|(&c, &r)| (c, r)).collect();
        order.sort_unstable_by_key(|x| std::cmp::Reverse(x.0));
        for (_, r) in order {
            let row = std::mem::take(&mut self.rows[r]);
            let (pivot, tail) = row.split_first().expect("rows are nonempty");
            let mut work = to_map(tail);
            let hits: Vec<usize> = work.keys().copied().filter(|c| self.is_pivot(*c)).collect();
            for c in hits {
                if let Some(value) = work.remove(&c) {
                    let other = &self.rows[self.pivots[&c]];
                    axpy(&mut work, &value, &other[1..]);
                }
            }
            let mut new_row = vec![pivot.clone()];
            new_row.extend(work);
            self.rows[r] = new_row;
        }
        self.reduced = true;
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// The row with pivot `col`, without the pivot entry.
    pub fn pivot_row(&self, col: usize) -> Option<&[(usize, Rational)]> {
        self.pivots.get(&col).map(|&r| &self.rows[r][1..])
    }

    /// Coefficient of free column `target` in the normal form of the unit
    /// vector `e_col`.
    pub fn unit_coordinate(&self, col: usize, target: usize) -> Rational {
        if !self.is_pivot(col) {
            return if col == target { Rational::one() } else { Rational::zero() };
        }
        if self.reduced {
            let row = self.pivot_row(col).expect("pivot");
            return match row.binary_search_by_key(&target, |(c, _)| *c) {
                Ok(i) => -row[i].1.clone(),
                Err(_) => Rational::zero(),
            };
        }
        let nf = self.reduce(&[(col, Rational::one())]);
        match nf.binary_search_by_key(&target, |(c, _)| *c) {
            Ok(i) => nf[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }
}

/// Rank of a list of rows.
pub fn rank(ncols: usize, rows: &[SparseVec]) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank of a dense integer matrix given row by row.
pub fn dense_rank(ncols: usize, rows: &[Vec<i64>]) -> usize {
    let sparse: Vec<SparseVec> = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(c, &x)| (c, Rational::from_integer(x.into())))
                .collect()
        })
        .collect();
    rank(ncols, &sparse)
}
