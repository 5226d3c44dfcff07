//! Face lattice construction by intersection closure.
//!
//! Faces are exactly the intersections of facet vertex-sets (plus the
//! full polytope and the empty face), found breadth-first from the top.
//! The lattice is graded by longest chains from the bottom.

use std::collections::{BTreeMap, BTreeSet};

use super::IncidenceMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeNode {
    pub vertices: Vec<usize>,
    pub rank: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    /// Sorted by (rank, vertex set); bottom first, top last.
    pub nodes: Vec<LatticeNode>,
    /// Covering pairs (lower node id, upper node id).
    pub hasse: Vec<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
    pub dim: i64,
}

pub fn face_lattice(inc: &IncidenceMatrix) -> FaceLattice {
    let top: BTreeSet<usize> = (0..inc.n_vertices).collect();
    let facet_sets: Vec<BTreeSet<usize>> = inc
        .sets
        .iter()
        .map(|s| s.iter().copied().collect())
        .collect();

    let mut faces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    faces.insert(top.clone());
    faces.insert(BTreeSet::new());
    let mut queue: Vec<BTreeSet<usize>> = vec![top.clone()];
    while let Some(face) = queue.pop() {
        for fs in &facet_sets {
            let meet: BTreeSet<usize> = face.intersection(fs).copied().collect();
            if meet != face && faces.insert(meet.clone()) {
                queue.push(meet);
            }
        }
    }

    // Grade by longest chain from the bottom; iterate in size order so
    // all proper subsets are ranked first.
    let mut by_size: Vec<BTreeSet<usize>> = faces.into_iter().collect();
    by_size.sort_by_key(|f| (f.len(), f.iter().copied().collect::<Vec<_>>()));
    let mut rank_of: BTreeMap<BTreeSet<usize>, i64> = BTreeMap::new();
    for face in &by_size {
        let r = by_size
            .iter()
            .take_while(|g| g.len() < face.len())
            .filter(|g| g.is_subset(face))
            .map(|g| rank_of[g])
            .max()
            .map_or(-1, |m| m + 1);
        rank_of.insert(face.clone(), r);
    }

    let mut nodes: Vec<LatticeNode> = by_size
        .iter()
        .map(|f| LatticeNode {
            vertices: f.iter().copied().collect(),
            rank: rank_of[f],
        })
        .collect();
    nodes.sort_by(|a, b| (a.rank, &a.vertices).cmp(&(b.rank, &b.vertices)));

    let dim = nodes.last().map_or(-1, |n| n.rank);
    let sets: Vec<BTreeSet<usize>> = nodes
        .iter()
        .map(|n| n.vertices.iter().copied().collect())
        .collect();
    let mut hasse = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate() {
            if b.rank == a.rank + 1 && sets[i].is_subset(&sets[j]) {
                hasse.push((i, j));
            }
        }
    }
    let bottom = 0;
    let top_id = nodes.len() - 1;
    FaceLattice {
        nodes,
        hasse,
        bottom,
        top: top_id,
        dim,
    }
}

impl FaceLattice {
    pub fn nodes_of_rank(&self, rank: i64) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| self.nodes[i].rank == rank)
            .collect()
    }

    /// Node ids of the facets (rank dim-1 faces).
    pub fn facet_nodes(&self) -> Vec<usize> {
        self.nodes_of_rank(self.dim - 1)
    }

    /// The incidence matrix of one facet, treated as a polytope of its
    /// own: rows are the ridges inside it, with vertices relabelled to
    /// 0..k by ascending original index.
    pub fn facet_sub_incidences(&self, facet: usize) -> IncidenceMatrix {
        let fv = &self.nodes[facet].vertices;
        let relabel: BTreeMap<usize, usize> =
            fv.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let sets: Vec<Vec<usize>> = self
            .hasse
            .iter()
            .filter(|&&(_, up)| up == facet)
            .map(|&(lo, _)| {
                self.nodes[lo]
                    .vertices
                    .iter()
                    .map(|v| relabel[v])
                    .collect()
            })
            .collect();
        IncidenceMatrix {
            sets,
            n_vertices: fv.len(),
        }
    }
}

/// Undirected graph on 0..n-1 with sorted, loop-free edge pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        edges.retain(|e| e.0 != e.1);
        Graph { n, edges }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Longest shortest path; None when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut frontier = vec![s];
            while let Some(v) = frontier.pop() {
                for &(a, b) in &self.edges {
                    let w = if a == v {
                        b
                    } else if b == v {
                        a
                    } else {
                        continue;
                    };
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        frontier.insert(0, w);
                    }
                }
            }
            let far = *dist.iter().max()?;
            if far == usize::MAX {
                return None;
            }
            best = best.max(far);
        }
        Some(best)
    }
}

/// Vertex-edge graph (nodes are vertices, edges the rank-1 faces) and
/// dual graph (nodes are facets in incidence-row order, edges the ridges
/// shared by exactly two facets).
pub fn graphs(inc: &IncidenceMatrix, lattice: &FaceLattice) -> (Graph, Graph) {
    let mut vertex_edges = Vec::new();
    for i in lattice.nodes_of_rank(1) {
        let vs = &lattice.nodes[i].vertices;
        if vs.len() == 2 {
            vertex_edges.push((vs[0], vs[1]));
        }
    }
    let vertex_graph = Graph::new(inc.n_vertices, vertex_edges);

    // Map facet nodes back to incidence-row indices.
    let row_of: BTreeMap<Vec<usize>, usize> = inc
        .sets
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut v = s.clone();
            v.sort_unstable();
            (v, i)
        })
        .collect();
    let facet_row = |node: usize| row_of.get(&lattice.nodes[node].vertices).copied();
    let mut dual_edges = Vec::new();
    for ridge in lattice.nodes_of_rank(lattice.dim - 2) {
        let above: Vec<usize> = lattice
            .hasse
            .iter()
            .filter(|&&(lo, _)| lo == ridge)
            .filter_map(|&(_, up)| facet_row(up))
            .collect();
        if above.len() == 2 {
            dual_edges.push((above[0], above[1]));
        }
    }
    let dual_graph = Graph::new(inc.n_facets(), dual_edges);
    (vertex_graph, dual_graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inc(sets: &[&[usize]], n: usize) -> IncidenceMatrix {
        IncidenceMatrix::new(sets.iter().map(|s| s.to_vec()).collect(), n).unwrap()
    }

    #[test]
    fn triangle_lattice_has_eight_faces() {
        let lattice = face_lattice(&inc(&[&[0, 1], &[1, 2], &[0, 2]], 3));
        assert_eq!(lattice.nodes.len(), 8);
        assert_eq!(lattice.dim, 2);
        assert_eq!(lattice.nodes[lattice.bottom].rank, -1);
        assert_eq!(lattice.nodes[lattice.top].vertices, vec![0, 1, 2]);
    }

    #[test]
    fn square_lattice_dim() {
        let lattice = face_lattice(&inc(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]], 4));
        assert_eq!(lattice.dim, 2);
        assert_eq!(lattice.nodes.len(), 10); // 1 + 4 + 4 + 1
    }

    #[test]
    fn triangle_graphs_are_three_cycles() {
        let im = inc(&[&[0, 1], &[1, 2], &[0, 2]], 3);
        let lattice = face_lattice(&im);
        let (g, dg) = graphs(&im, &lattice);
        assert_eq!(g.edges.len(), 3);
        assert_eq!(dg.edges.len(), 3);
        assert!(g.is_connected());
        assert_eq!(g.diameter(), Some(1));
    }

    #[test]
    fn segment_graphs() {
        // 1-dimensional polytope: two vertices, two facets (the vertices)
        let im = inc(&[&[0], &[1]], 2);
        let lattice = face_lattice(&im);
        assert_eq!(lattice.dim, 1);
        let (g, dg) = graphs(&im, &lattice);
        assert_eq!(g.edges, vec![(0, 1)]);
        assert_eq!(dg.edges, vec![(0, 1)]);
    }
}
