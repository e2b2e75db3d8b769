//! Verification predicates for resolving and doubly resolving sets.
//!
//! `{x, y}` doubly resolves `{u, v}` when
//! `d(u,x) - d(u,y) != d(v,x) - d(v,y)`. A set `S` is a doubly resolving set
//! (DRS) when every pair of distinct vertices is doubly resolved by a pair
//! from `S`. Equivalently, with `u1 = min S`, the difference vectors
//! `F(x|S) = (d(x,u_j) - d(x,u1))_{j>=2}` are pairwise distinct, which is
//! what [`is_drs_fast`] checks. [`is_drs_naive`] is the pair-by-pair
//! definition and is kept as an oracle.

use std::collections::HashSet;

use crate::graph::{DistanceMatrix, VertexSet};

/// Distance-difference vector of a vertex relative to a set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector {
    pub anchor: usize,
    pub deltas: Vec<i32>,
}

#[inline]
fn diff(dm: &DistanceMatrix, x: usize, a: usize, b: usize) -> i64 {
    i64::from(dm.get(x, a)) - i64::from(dm.get(x, b))
}

/// Whether `{x, y}` doubly resolves `{u, v}`.
pub fn doubly_resolves(dm: &DistanceMatrix, x: usize, y: usize, u: usize, v: usize) -> bool {
    diff(dm, u, x, y) != diff(dm, v, x, y)
}

/// Whether the distance vectors to `s` are pairwise distinct.
pub fn is_resolving_set(dm: &DistanceMatrix, s: &VertexSet) -> bool {
    is_resolving_slice(dm, s.as_slice(), &mut Vec::new())
}

pub(crate) fn is_resolving_slice(dm: &DistanceMatrix, s: &[usize], keys: &mut Vec<u64>) -> bool {
    let n = dm.len();
    if n <= 1 {
        return true;
    }
    if s.is_empty() {
        return false;
    }
    let base = u64::from(dm.diameter()) + 1;
    if fits(base, s.len()) {
        keys.clear();
        keys.extend((0..n).map(|x| s.iter().fold(0u64, |acc, &a| acc * base + u64::from(dm.get(x, a)))));
        all_distinct(keys)
    } else {
        let mut seen = HashSet::with_capacity(n);
        (0..n).all(|x| seen.insert(s.iter().map(|&a| dm.get(x, a)).collect::<Vec<_>>()))
    }
}

/// Pairwise definition, O(n² |S|²). Oracle for [`is_drs_fast`].
pub fn is_drs_naive(dm: &DistanceMatrix, s: &VertexSet) -> bool {
    let n = dm.len();
    if n <= 1 {
        return true;
    }
    let s = s.as_slice();
    for u in 0..n {
        for v in u + 1..n {
            let resolved = s
                .iter()
                .enumerate()
                .any(|(i, &x)| s[i + 1..].iter().any(|&y| doubly_resolves(dm, x, y, u, v)));
            if !resolved {
                return false;
            }
        }
    }
    true
}

/// `F(x|S)` with the anchor at the smallest id of `s`.
///
/// Panics if `s` is empty.
pub fn f_vector(dm: &DistanceMatrix, s: &VertexSet, x: usize) -> FVector {
    let slice = s.as_slice();
    let anchor = slice[0];
    let base = i64::from(dm.get(x, anchor));
    FVector {
        anchor,
        deltas: slice[1..]
            .iter()
            .map(|&u| (i64::from(dm.get(x, u)) - base) as i32)
            .collect(),
    }
}

/// DRS check through distinctness of F-vectors, O(n |S|).
pub fn is_drs_fast(dm: &DistanceMatrix, s: &VertexSet) -> bool {
    is_drs_slice(dm, s.as_slice(), &mut Vec::new())
}

/// Hot path shared with the solvers; `s` must be sorted and distinct.
pub(crate) fn is_drs_slice(dm: &DistanceMatrix, s: &[usize], keys: &mut Vec<u64>) -> bool {
    let n = dm.len();
    if n <= 1 {
        return true;
    }
    if s.len() < 2 {
        return false;
    }
    let anchor = s[0];
    let rest = &s[1..];
    let diam = u64::from(dm.diameter());
    let base = 2 * diam + 1;
    if fits(base, rest.len()) {
        keys.clear();
        keys.extend((0..n).map(|x| {
            let row = dm.row(x);
            let off = diam + u64::from(row[anchor]);
            rest.iter().fold(0u64, |acc, &a| acc * base + (off - u64::from(row[a])))
        }));
        all_distinct(keys)
    } else {
        let mut seen = HashSet::with_capacity(n);
        (0..n).all(|x| seen.insert(f_vector_slice(dm, anchor, rest, x)))
    }
}

fn f_vector_slice(dm: &DistanceMatrix, anchor: usize, rest: &[usize], x: usize) -> Vec<i64> {
    let base = i64::from(dm.get(x, anchor));
    rest.iter().map(|&u| i64::from(dm.get(x, u)) - base).collect()
}

/// Whether `base^len` fits in a u64 key.
fn fits(base: u64, len: usize) -> bool {
    let mut acc: u64 = 1;
    for _ in 0..len {
        match acc.checked_mul(base) {
            Some(v) => acc = v,
            None => return false,
        }
    }
    true
}

fn all_distinct(keys: &mut [u64]) -> bool {
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

/// Whether `s` is a DRS containing `d`.
pub fn is_d_drs(dm: &DistanceMatrix, s: &VertexSet, d: &VertexSet) -> bool {
    d.is_subset(s) && is_drs_fast(dm, s)
}

/// Whether every pair `{u, v}` with `d(u,x) != d(v,x)` is doubly resolved by
/// some pair from `s ∪ {x}`.
pub fn is_doubly_distance_resolving_on(dm: &DistanceMatrix, s: &VertexSet, x: usize) -> bool {
    let mut with_x = s.as_slice().to_vec();
    with_x.push(x);
    let t = VertexSet::from_unsorted(with_x);
    let t = t.as_slice();
    let n = dm.len();
    for u in 0..n {
        for v in u + 1..n {
            if dm.get(u, x) == dm.get(v, x) {
                continue;
            }
            let resolved = t
                .iter()
                .enumerate()
                .any(|(i, &a)| t[i + 1..].iter().any(|&b| doubly_resolves(dm, a, b, u, v)));
            if !resolved {
                return false;
            }
        }
    }
    true
}
