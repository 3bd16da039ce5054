//! Sparse exact linear algebra over the rationals.
//!
//! Vectors are sorted coordinate lists without zeros or duplicates. Rank and
//! nullspace computations run a deterministic reduced row echelon form:
//! rows are processed in the order given, the pivot of a reduced row is its
//! first nonzero coordinate.

use alloc::vec;
use alloc::vec::Vec;

use crate::rat::Rat;

/// Sparse vector: strictly increasing coordinates, no zero entries.
pub type SparseVec = Vec<(usize, Rat)>;

/// Sorts, merges duplicate coordinates and drops zeros.
pub fn sv_normalize(mut entries: Vec<(usize, Rat)>) -> SparseVec {
    entries.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = &*acc + &v,
            _ => out.push((i, v)),
        }
        if let Some((_, acc)) = out.last() {
            if acc.is_zero() {
                out.pop();
            }
        }
    }
    out
}

pub fn sv_unit(i: usize) -> SparseVec {
    vec![(i, Rat::one())]
}

pub fn sv_get(v: &SparseVec, i: usize) -> Rat {
    match v.binary_search_by_key(&i, |(j, _)| *j) {
        Ok(pos) => v[pos].1.clone(),
        Err(_) => Rat::zero(),
    }
}

pub fn sv_scale(v: &SparseVec, c: &Rat) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn sv_neg(v: &SparseVec) -> SparseVec {
    v.iter().map(|(i, x)| (*i, -x)).collect()
}

/// `a + c*b`, merged in one pass.
pub fn sv_add_scaled(a: &SparseVec, c: &Rat, b: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut p, mut q) = (0, 0);
    while p < a.len() || q < b.len() {
        match (a.get(p), b.get(q)) {
            (Some((i, x)), Some((j, y))) if i == j => {
                let v = x + &(c * y);
                if !v.is_zero() {
                    out.push((*i, v));
                }
                p += 1;
                q += 1;
            }
            (Some((i, x)), Some((j, _))) if i < j => {
                out.push((*i, x.clone()));
                p += 1;
            }
            (Some(_), Some((j, y))) => {
                out.push((*j, c * y));
                q += 1;
            }
            (Some((i, x)), None) => {
                out.push((*i, x.clone()));
                p += 1;
            }
            (None, Some((j, y))) => {
                out.push((*j, c * y));
                q += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn sv_add(a: &SparseVec, b: &SparseVec) -> SparseVec {
    sv_add_scaled(a, &Rat::one(), b)
}

pub fn sv_sub(a: &SparseVec, b: &SparseVec) -> SparseVec {
    sv_add_scaled(a, &Rat::from_integer(-1), b)
}

/// Deterministic reduced row echelon form, built incrementally.
#[derive(Clone, Default)]
pub struct Rref {
    /// `(pivot column, row)`; each row has leading coefficient 1 at its pivot
    /// column and zeros at every other pivot column. Sorted by pivot column.
    rows: Vec<(usize, SparseVec)>,
}

impl Rref {
    pub fn new() -> Self {
        Rref { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(c, _)| *c)
    }

    /// Eliminates all pivot coordinates from `row`.
    pub fn reduce(&self, row: &SparseVec) -> SparseVec {
        let mut cur = row.clone();
        loop {
            // Find the first coordinate of `cur` that has a pivot row.
            let hit = cur.iter().find_map(|(col, coef)| {
                self.rows
                    .binary_search_by_key(col, |(c, _)| *c)
                    .ok()
                    .map(|pos| (pos, coef.clone()))
            });
            match hit {
                Some((pos, coef)) => {
                    cur = sv_add_scaled(&cur, &(-&coef), &self.rows[pos].1);
                }
                None => return cur,
            }
        }
    }

    /// Reduces `row` and inserts the result if independent.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        let red = self.reduce(row);
        let Some((pivot, lead)) = red.first().cloned() else {
            return false;
        };
        let normalized = sv_scale(&red, &lead.recip());
        // Back-substitute into existing rows so the form stays fully reduced.
        for (_, r) in self.rows.iter_mut() {
            let c = sv_get(r, pivot);
            if !c.is_zero() {
                *r = sv_add_scaled(r, &(-&c), &normalized);
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&pivot, |(c, _)| *c)
            .unwrap_err();
        self.rows.insert(pos, (pivot, normalized));
        true
    }

    /// True iff `v` lies in the row span.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Basis of the solution space of `rows * x = 0` in dimension `dim`:
    /// one vector per non-pivot column, in ascending column order.
    pub fn nullspace(&self, dim: usize) -> Vec<SparseVec> {
        let mut is_pivot = vec![false; dim];
        for (c, _) in &self.rows {
            is_pivot[*c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..dim {
            if is_pivot[free] {
                continue;
            }
            let mut v: Vec<(usize, Rat)> = vec![(free, Rat::one())];
            for (p, row) in &self.rows {
                let c = sv_get(row, free);
                if !c.is_zero() {
                    v.push((*p, -&c));
                }
            }
            basis.push(sv_normalize(v));
        }
        basis
    }
}

/// Rank of a list of sparse rows.
pub fn rank_of_rows(rows: &[SparseVec]) -> usize {
    let mut rref = Rref::new();
    for r in rows {
        rref.insert(r);
    }
    rref.rank()
}

/// Exact nullspace of the stacked linear conditions `rows * x = 0`
/// on coordinates `0..dim`.
pub fn solve_subspace(rows: &[SparseVec], dim: usize) -> Vec<SparseVec> {
    let mut rref = Rref::new();
    for r in rows {
        rref.insert(r);
    }
    rref.nullspace(dim)
}

/// True iff the two collections of vectors span the same subspace.
pub fn same_span(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let mut ra = Rref::new();
    for v in a {
        ra.insert(v);
    }
    let mut rb = Rref::new();
    for v in b {
        rb.insert(v);
    }
    ra.rank() == rb.rank() && a.iter().all(|v| rb.contains(v)) && b.iter().all(|v| ra.contains(v))
}
