//! A BK-tree index over sets of naturals for range and nearest-neighbor
//! queries under the metric.
//!
//! The metric is integer-valued, so every node can bucket its subtrees by
//! exact distance: the child of `v` reached by edge label `e` roots a
//! subtree of values at distance exactly `e` from `v`. The triangle
//! inequality then prunes a query at distance `d` from `v` with radius `r`
//! down to the edges `e` in `[d - r, d + r]`.
//!
//! Tree shape depends on insertion order (there is no rebalancing), but
//! query results never do.

use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{invalid, Error, Result};
use crate::factor::{factor, Factorization};
use crate::metric::dist_factored;

struct BkNode {
    value: u64,
    fact: Factorization,
    children: BTreeMap<u64, usize>,
}

/// Traversal instrumentation: how many tree nodes a query touched. Never
/// exceeds the number of stored values; the gap is what pruning saved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryStats {
    pub visited: u64,
}

/// BK-tree over distinct naturals. Each stored value keeps its
/// factorization, so queries factor only their own argument.
///
/// Queries are read-only and safe to run concurrently; inserts need
/// exclusive access.
#[derive(Default)]
pub struct BkIndex {
    nodes: Vec<BkNode>,
}

impl BkIndex {
    pub fn new() -> BkIndex {
        BkIndex::default()
    }

    /// Builds an index by inserting the values in iteration order (the
    /// first value becomes the root).
    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Result<BkIndex> {
        let mut idx = BkIndex::new();
        for v in values {
            idx.insert(v)?;
        }
        Ok(idx)
    }

    /// Number of stored values.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Inserts `v`, returning whether it was new; inserting a present value
    /// is a no-op.
    pub fn insert(&mut self, v: u64) -> Result<bool> {
        if v == 0 {
            return Err(invalid("stored values must be positive integers"));
        }
        let fact = factor(v)?;
        if self.nodes.is_empty() {
            self.nodes.push(BkNode {
                value: v,
                fact,
                children: BTreeMap::new(),
            });
            return Ok(true);
        }
        let mut at = 0usize;
        loop {
            let d = dist_factored(&fact, &self.nodes[at].fact);
            if d == 0 {
                return Ok(false);
            }
            match self.nodes[at].children.get(&d) {
                Some(&child) => at = child,
                None => {
                    let new_id = self.nodes.len();
                    self.nodes.push(BkNode {
                        value: v,
                        fact,
                        children: BTreeMap::new(),
                    });
                    self.nodes[at].children.insert(d, new_id);
                    return Ok(true);
                }
            }
        }
    }

    /// All stored values within distance `r` of `x`, ascending.
    pub fn range(&self, x: u64, r: u64) -> Result<Vec<u64>> {
        Ok(self.range_with_stats(x, r)?.0)
    }

    /// [`BkIndex::range`] plus traversal stats.
    pub fn range_with_stats(&self, x: u64, r: u64) -> Result<(Vec<u64>, QueryStats)> {
        if x == 0 {
            return Err(invalid("query point must be a positive integer"));
        }
        let fx = factor(x)?;
        let mut out = Vec::new();
        let mut visited = 0u64;
        let mut stack: Vec<usize> = if self.nodes.is_empty() { vec![] } else { vec![0] };
        while let Some(i) = stack.pop() {
            visited += 1;
            let node = &self.nodes[i];
            let d = dist_factored(&fx, &node.fact);
            if d <= r {
                out.push(node.value);
            }
            for (&e, &child) in &node.children {
                if e.abs_diff(d) <= r {
                    stack.push(child);
                }
            }
        }
        out.sort_unstable();
        Ok((out, QueryStats { visited }))
    }

    /// The `k` stored values nearest to `x`, as `(value, distance)` pairs
    /// ascending by `(distance, value)`; ties always resolve toward the
    /// smaller value, independent of tree shape. Returns everything stored
    /// when `k` exceeds the index size.
    pub fn nearest(&self, x: u64, k: usize) -> Result<Vec<(u64, u64)>> {
        Ok(self.nearest_with_stats(x, k)?.0)
    }

    /// [`BkIndex::nearest`] plus traversal stats.
    pub fn nearest_with_stats(&self, x: u64, k: usize) -> Result<(Vec<(u64, u64)>, QueryStats)> {
        if x == 0 {
            return Err(invalid("query point must be a positive integer"));
        }
        if k == 0 {
            return Err(invalid("nearest-neighbor count k must be at least 1"));
        }
        if self.nodes.is_empty() {
            return Err(Error::EmptyIndex);
        }
        let fx = factor(x)?;
        // max-heap on (distance, value): the root is the current worst of
        // the best k, so its distance is the pruning radius.
        let mut best: BinaryHeap<(u64, u64)> = BinaryHeap::with_capacity(k + 1);
        let mut visited = 0u64;
        let mut stack: Vec<usize> = vec![0];
        while let Some(i) = stack.pop() {
            visited += 1;
            let node = &self.nodes[i];
            let d = dist_factored(&fx, &node.fact);
            let cand = (d, node.value);
            if best.len() < k {
                best.push(cand);
            } else if cand < *best.peek().expect("heap is full here") {
                best.pop();
                best.push(cand);
            }
            let radius = if best.len() == k {
                best.peek().expect("heap is full here").0
            } else {
                u64::MAX
            };
            for (&e, &child) in &node.children {
                if e.abs_diff(d) <= radius {
                    stack.push(child);
                }
            }
        }
        let mut hits: Vec<(u64, u64)> = best.into_iter().collect();
        hits.sort_unstable();
        let pairs = hits.into_iter().map(|(d, v)| (v, d)).collect();
        Ok((pairs, QueryStats { visited }))
    }
}

impl std::fmt::Debug for BkIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BkIndex").field("len", &self.len()).finish()
    }
}
