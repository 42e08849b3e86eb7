//! The covering-relation graph on `{1, ..., n}` and its BFS oracle.
//!
//! Vertices are the integers 1 through `n`; an edge joins `a < b` exactly
//! when `b = a * p` for a prime `p` (the covering relation of the
//! divisibility order, the edges a Hasse diagram draws). Shortest paths in
//! this graph realize the arithmetic metric, which makes BFS an oracle that
//! is independent of the exponent-vector formula.
//!
//! The graph is deliberately NOT the full divisibility relation `a | b`:
//! that graph would join 1 to every vertex and collapse almost all
//! distances to 2.

use std::collections::VecDeque;

use crate::error::{invalid, out_of_range, Result};
use crate::factor::SpfSieve;

/// Immutable covering-relation graph on `[1, n]` in compressed sparse row
/// form. Queries are read-only; concurrent use is safe.
#[derive(Debug, Clone)]
pub struct HasseGraph {
    n: u64,
    offsets: Vec<u32>,
    neighbors: Vec<u32>,
    omega: Vec<u8>,
}

impl HasseGraph {
    /// Default vertex-count cap for [`HasseGraph::build`].
    pub const DEFAULT_CAP: u64 = 1_000_000;

    /// Builds the graph on `[1, n]` under the default cap. The sieve must
    /// cover `n`.
    pub fn build(n: u64, sieve: &SpfSieve) -> Result<HasseGraph> {
        HasseGraph::build_with_cap(n, Self::DEFAULT_CAP, sieve)
    }

    /// Builds with an explicit cap. Adjacency comes from forward sieving:
    /// every pair `(a, a * p)` with `a * p <= n` contributes one edge, so no
    /// vertex is ever factored.
    pub fn build_with_cap(n: u64, cap: u64, sieve: &SpfSieve) -> Result<HasseGraph> {
        if n == 0 {
            return Err(invalid("the vertex range [1, n] needs n >= 1"));
        }
        if n > cap {
            return Err(out_of_range(format!("n = {n} exceeds the cap {cap}")));
        }
        if n > 1 && n > sieve.limit() {
            return Err(invalid(format!(
                "sieve limit {} does not cover n = {n}",
                sieve.limit()
            )));
        }
        let size = n as usize;

        let omega = if n == 1 {
            vec![0u8; 2]
        } else {
            sieve.omega_table(n)?
        };

        let mut degree = vec![0u32; size + 2];
        for a in 1..=size {
            for &p in sieve.primes() {
                let b = a * p as usize;
                if b > size {
                    break;
                }
                degree[a] += 1;
                degree[b] += 1;
            }
        }

        let mut offsets = vec![0u32; size + 2];
        for v in 1..=size {
            offsets[v + 1] = offsets[v] + degree[v];
        }
        let mut cursor = offsets.clone();
        let mut neighbors = vec![0u32; offsets[size + 1] as usize];
        for a in 1..=size {
            for &p in sieve.primes() {
                let b = a * p as usize;
                if b > size {
                    break;
                }
                neighbors[cursor[a] as usize] = b as u32;
                cursor[a] += 1;
                neighbors[cursor[b] as usize] = a as u32;
                cursor[b] += 1;
            }
        }
        for v in 1..=size {
            neighbors[offsets[v] as usize..offsets[v + 1] as usize].sort_unstable();
        }

        Ok(HasseGraph {
            n,
            offsets,
            neighbors,
            omega,
        })
    }

    pub fn vertex_count(&self) -> u64 {
        self.n
    }

    pub fn edge_count(&self) -> u64 {
        self.neighbors.len() as u64 / 2
    }

    /// Prime-factor count (with multiplicity) of vertex `v`; the level of
    /// `v` in the diagram.
    pub fn omega(&self, v: u64) -> Result<u64> {
        self.check_vertex(v)?;
        Ok(self.omega[v as usize] as u64)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: u64) -> Result<&[u32]> {
        self.check_vertex(v)?;
        let v = v as usize;
        Ok(&self.neighbors[self.offsets[v] as usize..self.offsets[v + 1] as usize])
    }

    /// All edges `(a, b)` with `a < b`, sorted by `(a, b)`.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (1..=self.n).flat_map(move |a| {
            let lo = self.offsets[a as usize] as usize;
            let hi = self.offsets[a as usize + 1] as usize;
            self.neighbors[lo..hi]
                .iter()
                .map(|&b| b as u64)
                .filter(move |&b| b > a)
                .map(move |b| (a, b))
        })
    }

    fn check_vertex(&self, v: u64) -> Result<()> {
        if (1..=self.n).contains(&v) {
            Ok(())
        } else {
            Err(invalid(format!("vertex {v} outside [1, {}]", self.n)))
        }
    }

    /// Shortest-path length between `a` and `b` by breadth-first search.
    /// Each call owns its scratch buffers, so concurrent queries are safe.
    pub fn distance(&self, a: u64, b: u64) -> Result<u64> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Ok(0);
        }
        const UNSEEN: u32 = u32::MAX;
        let mut dist = vec![UNSEEN; self.n as usize + 1];
        let mut queue = VecDeque::new();
        dist[a as usize] = 0;
        queue.push_back(a as u32);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize];
            let lo = self.offsets[v as usize] as usize;
            let hi = self.offsets[v as usize + 1] as usize;
            for &w in &self.neighbors[lo..hi] {
                if dist[w as usize] == UNSEEN {
                    if w as u64 == b {
                        return Ok(d as u64 + 1);
                    }
                    dist[w as usize] = d + 1;
                    queue.push_back(w);
                }
            }
        }
        unreachable!("the graph is connected: 1 reaches every vertex")
    }

    /// BFS distances from `a` to every vertex, indexed by vertex number
    /// (index 0 is unused). One call amortizes a full row of the distance
    /// matrix for exhaustive oracle checks.
    pub fn distances_from(&self, a: u64) -> Result<Vec<u64>> {
        self.check_vertex(a)?;
        const UNSEEN: u32 = u32::MAX;
        let mut dist = vec![UNSEEN; self.n as usize + 1];
        let mut queue = VecDeque::new();
        dist[a as usize] = 0;
        queue.push_back(a as u32);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize];
            let lo = self.offsets[v as usize] as usize;
            let hi = self.offsets[v as usize + 1] as usize;
            for &w in &self.neighbors[lo..hi] {
                if dist[w as usize] == UNSEEN {
                    dist[w as usize] = d + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<u64> = dist.into_iter().map(u64::from).collect();
        out[0] = u64::MAX;
        Ok(out)
    }

    /// Renders the graph as undirected DOT text: a `rank=same` group per
    /// level (vertices of equal Omega), then one line per edge, `a -- b`
    /// with `a < b`, sorted. Output is deterministic.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph hasse_{} {{\n", self.n);
        let max_omega = (1..=self.n as usize)
            .map(|v| self.omega[v])
            .max()
            .unwrap_or(0);
        for level in 0..=max_omega {
            let members: Vec<String> = (1..=self.n as usize)
                .filter(|&v| self.omega[v] == level)
                .map(|v| v.to_string())
                .collect();
            if !members.is_empty() {
                out.push_str("  { rank=same; ");
                out.push_str(&members.join(" "));
                out.push_str(" }\n");
            }
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  {a} -- {b}\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::factor::factor;
    use crate::metric::dist;

    fn sieve() -> SpfSieve {
        SpfSieve::build(2000).unwrap()
    }

    #[test]
    fn build_examples() {
        let s = sieve();
        let g1 = HasseGraph::build(1, &s).unwrap();
        assert_eq!(g1.vertex_count(), 1);
        assert_eq!(g1.edge_count(), 0);

        let g12 = HasseGraph::build(12, &s).unwrap();
        assert_eq!(g12.vertex_count(), 12);
        assert_eq!(g12.edge_count(), 14);

        let g4 = HasseGraph::build(4, &s).unwrap();
        let edges: Vec<_> = g4.edges().collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (2, 4)]);
    }

    #[test]
    fn build_rejects_bad_arguments() {
        let s = sieve();
        assert!(matches!(
            HasseGraph::build(0, &s),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            HasseGraph::build_with_cap(100, 50, &s),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            HasseGraph::build(2001, &s),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn edge_count_matches_distinct_prime_factor_sum() {
        let s = sieve();
        for n in [1u64, 2, 12, 100, 500] {
            let g = HasseGraph::build(n, &s).unwrap();
            let expected: u64 = (2..=n)
                .map(|m| factor(m).unwrap().entries().len() as u64)
                .sum();
            assert_eq!(g.edge_count(), expected, "n = {n}");
        }
    }

    #[test]
    fn edges_step_one_level() {
        let s = sieve();
        let g = HasseGraph::build(300, &s).unwrap();
        for (a, b) in g.edges() {
            assert_eq!(b % a, 0);
            assert!(s.is_prime(b / a), "{b}/{a} must be prime");
            assert_eq!(g.omega(b).unwrap(), g.omega(a).unwrap() + 1);
        }
    }

    #[test]
    fn distance_examples() {
        let s = sieve();
        let g = HasseGraph::build(12, &s).unwrap();
        assert_eq!(g.distance(11, 12).unwrap(), 4);
        assert_eq!(g.distance(7, 7).unwrap(), 0);
        assert_eq!(g.distance(8, 9).unwrap(), 5);
        assert!(matches!(g.distance(0, 5), Err(Error::InvalidArgument(_))));
        assert!(matches!(g.distance(5, 13), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn bfs_agrees_with_metric_exhaustively() {
        let s = sieve();
        let g = HasseGraph::build(80, &s).unwrap();
        for a in 1..=80u64 {
            let row = g.distances_from(a).unwrap();
            for b in 1..=80u64 {
                assert_eq!(row[b as usize], dist(a, b).unwrap(), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn dot_output_shape() {
        let s = sieve();
        let g2 = HasseGraph::build(2, &s).unwrap();
        let dot = g2.to_dot();
        assert!(dot.starts_with("graph hasse_2 {\n"));
        assert!(dot.contains("  1 -- 2\n"));
        assert!(dot.ends_with("}\n"));

        let g4 = HasseGraph::build(4, &s).unwrap();
        let dot4 = g4.to_dot();
        let edge_lines: Vec<&str> = dot4.lines().filter(|l| l.contains("--")).collect();
        assert_eq!(edge_lines, vec!["  1 -- 2", "  1 -- 3", "  2 -- 4"]);
        assert!(dot4.contains("{ rank=same; 1 }"));
        assert!(dot4.contains("{ rank=same; 2 3 }"));
        assert!(dot4.contains("{ rank=same; 4 }"));

        let g12 = HasseGraph::build(12, &s).unwrap();
        let edge_lines = g12.to_dot().lines().filter(|l| l.contains("--")).count();
        assert_eq!(edge_lines, 14);
    }

    #[test]
    fn neighbors_are_sorted() {
        let s = sieve();
        let g = HasseGraph::build(60, &s).unwrap();
        for v in 1..=60u64 {
            let ns = g.neighbors(v).unwrap();
            assert!(ns.windows(2).all(|w| w[0] < w[1]), "neighbors of {v}");
        }
        assert_eq!(g.neighbors(6).unwrap(), &[2, 3, 12, 18, 30, 42]);
    }
}
