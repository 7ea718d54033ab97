use serde::{Deserialize, Serialize};

use super::subset::{Subset, MAX_UNIVERSE};
use crate::error::{Error, Result};

/// Simple undirected graph on at most 32 vertices; `adj[v]` is the open neighborhood of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Subset>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![Subset::EMPTY; n],
        })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency masks, checking symmetry and loop-freeness.
    pub fn from_adjacency(adj: Vec<Subset>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        let full = Subset::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if !nb.is_subset_of(full) {
                return Err(Error::InvalidGraph(format!("vertex {v} has out-of-range neighbors")));
            }
            if nb.contains(v) {
                return Err(Error::InvalidGraph(format!("self-loop at {v}")));
            }
            for w in nb.iter() {
                if !adj[w].contains(v) {
                    return Err(Error::InvalidGraph(format!("edge {v}-{w} is not symmetric")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for n = {}", self.n)));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at {u}")));
        }
        self.adj[u] = self.adj[u].insert(v);
        self.adj[v] = self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> Subset {
        Subset::full(self.n)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> Subset {
        self.adj[v]
    }

    /// Closed neighborhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> Subset {
        self.adj[v].insert(v)
    }

    pub fn adjacency(&self) -> &[Subset] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True iff `s` induces no edge.
    #[inline]
    pub fn is_independent(&self, s: Subset) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Union of closed neighborhoods of `s`.
    pub fn closed_neighborhood_of(&self, s: Subset) -> Subset {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    /// True iff every vertex is in `d` or adjacent to it.
    pub fn is_dominating(&self, d: Subset) -> bool {
        self.closed_neighborhood_of(d) == self.vertices()
    }

    /// Disjoint union, relabelling `other`'s vertices after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|u| (u - 1, u)))
    }

    /// Star K_{1,leaves} with centre 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    /// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("static graph")
    }

    /// `copies` disjoint copies of `part`.
    pub fn disjoint_copies(part: &Graph, copies: usize) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for _ in 0..copies {
            g = g.disjoint_union(part)?;
        }
        Ok(g)
    }

    /// Induced subgraph on `s`, vertices renumbered in increasing order.
    pub fn induced(&self, s: Subset) -> Graph {
        let verts = s.to_vec();
        let mut pos = [usize::MAX; MAX_UNIVERSE];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| pos[w]).collect())
            .collect();
        Graph {
            n: verts.len(),
            adj,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_cubic() {
        let g = Graph::petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn rejects_loops_and_asymmetry() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        let adj = vec![Subset::singleton(1), Subset::EMPTY];
        assert!(Graph::from_adjacency(adj).is_err());
    }

    #[test]
    fn domination() {
        let star = Graph::star(3).unwrap();
        assert!(star.is_dominating(Subset::singleton(0)));
        assert!(!star.is_dominating(Subset::singleton(1)));
        assert!(star.is_dominating(Subset::from_elements([1, 2, 3])));
    }
}
