//! Combinatorial equivalence of polytopes via canonical labeling of the
//! two-colored vertex-facet incidence graph.
//!
//! Sides are preserved: vertices map to vertices and facets to facets.
//! The canonical form is the minimum adjacency encoding over the leaves
//! of an individualization-refinement search tree; the number of leaves
//! attaining the minimum is the automorphism group order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::props::IncidenceMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub vertex_map: Vec<usize>,
    pub facet_map: Vec<usize>,
}

pub struct CanonicalLabeling {
    /// Canonical byte sequence; equal iff the structures are isomorphic.
    pub form: Vec<u8>,
    /// node -> canonical position for one minimal leaf.
    pub labeling: Vec<usize>,
    /// Order of the side-preserving automorphism group.
    pub automorphisms: u64,
    /// Search leaves visited.
    pub leaves: u64,
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    n_left: usize,
    best: Option<(Vec<u8>, Vec<usize>)>,
    best_count: u64,
    leaves: u64,
}

pub fn canonical_labeling(inc: &IncidenceMatrix) -> Result<CanonicalLabeling> {
    if inc.sets.is_empty() || inc.n_vertices == 0 {
        return Err(Error::InvalidParameter("empty incidence structure".into()));
    }
    let n = inc.n_vertices;
    let m = inc.sets.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + m];
    for (f, s) in inc.sets.iter().enumerate() {
        for &v in s {
            adj[v].push(n + f);
            adj[n + f].push(v);
        }
    }
    let initial: Vec<Vec<usize>> = vec![(0..n).collect(), (n..n + m).collect()];
    let mut search = Search {
        adj: &adj,
        n_left: n,
        best: None,
        best_count: 0,
        leaves: 0,
    };
    search.descend(initial);
    let (form, labeling) = search.best.expect("at least one leaf");
    Ok(CanonicalLabeling {
        form,
        labeling,
        automorphisms: search.best_count,
        leaves: search.leaves,
    })
}

pub fn canonical_form(inc: &IncidenceMatrix) -> Vec<u8> {
    canonical_labeling(inc).expect("nonempty incidences").form
}

pub fn automorphism_order(inc: &IncidenceMatrix) -> Result<u64> {
    Ok(canonical_labeling(inc)?.automorphisms)
}

/// Side-preserving isomorphism test. On success the returned certificate
/// has been mechanically verified to carry `a` exactly onto `b`.
pub fn check_iso_incidences(
    a: &IncidenceMatrix,
    b: &IncidenceMatrix,
) -> Result<Option<IsoCertificate>> {
    if a.n_vertices != b.n_vertices || a.sets.len() != b.sets.len() {
        return Ok(None);
    }
    let ca = canonical_labeling(a)?;
    let cb = canonical_labeling(b)?;
    if ca.form != cb.form {
        return Ok(None);
    }
    let n = a.n_vertices;
    let m = a.sets.len();
    let mut inv_b = vec![0usize; n + m];
    for (node, &pos) in cb.labeling.iter().enumerate() {
        inv_b[pos] = node;
    }
    let vertex_map: Vec<usize> = (0..n).map(|v| inv_b[ca.labeling[v]]).collect();
    let facet_map: Vec<usize> = (0..m).map(|f| inv_b[ca.labeling[n + f]] - n).collect();
    let cert = IsoCertificate {
        vertex_map,
        facet_map,
    };
    if verify_certificate(a, b, &cert) {
        Ok(Some(cert))
    } else {
        Err(Error::InvalidParameter(
            "internal error: canonical labelings produced an invalid certificate".into(),
        ))
    }
}

/// Applying the maps to `a` must reproduce `b` exactly.
pub fn verify_certificate(a: &IncidenceMatrix, b: &IncidenceMatrix, cert: &IsoCertificate) -> bool {
    if cert.vertex_map.len() != a.n_vertices || cert.facet_map.len() != a.sets.len() {
        return false;
    }
    if !is_permutation(&cert.vertex_map, b.n_vertices) {
        return false;
    }
    if !is_permutation(&cert.facet_map, b.sets.len()) {
        return false;
    }
    for (f, s) in a.sets.iter().enumerate() {
        let mut mapped: Vec<usize> = s.iter().map(|&v| cert.vertex_map[v]).collect();
        mapped.sort_unstable();
        if mapped != b.sets[cert.facet_map[f]] {
            return false;
        }
    }
    true
}

fn is_permutation(map: &[usize], n: usize) -> bool {
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in map {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

impl<'a> Search<'a> {
    fn descend(&mut self, partition: Vec<Vec<usize>>) {
        let partition = self.refine(partition);
        match self.target_cell(&partition) {
            None => {
                self.leaf(&partition);
            }
            Some(t) => {
                for i in 0..partition[t].len() {
                    let mut child: Vec<Vec<usize>> = Vec::with_capacity(partition.len() + 1);
                    for (ci, cell) in partition.iter().enumerate() {
                        if ci == t {
                            let v = cell[i];
                            child.push(vec![v]);
                            child.push(cell.iter().copied().filter(|&w| w != v).collect());
                        } else {
                            child.push(cell.clone());
                        }
                    }
                    self.descend(child);
                }
            }
        }
    }

    /// Equitable refinement: split cells by the multiset of neighbor
    /// cell ids until stable. Deterministic: subcells ordered by
    /// signature, members ascending.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let total: usize = self.adj.len();
        loop {
            let mut cell_of = vec![0usize; total];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let mut sig: Vec<usize> = self.adj[v].iter().map(|&w| cell_of[w]).collect();
                    sig.sort_unstable();
                    groups.entry(sig).or_default().push(v);
                }
                if groups.len() > 1 {
                    changed = true;
                }
                for (_, g) in groups {
                    next.push(g);
                }
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    /// Smallest non-singleton cell, earliest position on ties.
    fn target_cell(&self, cells: &[Vec<usize>]) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, c) in cells.iter().enumerate() {
            if c.len() > 1 && best.is_none_or(|b| c.len() < cells[b].len()) {
                best = Some(i);
            }
        }
        best
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        self.leaves += 1;
        let mut labeling = vec![0usize; self.adj.len()];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
        }
        let enc = self.encode(&labeling);
        match &self.best {
            Some((best_enc, _)) if enc > *best_enc => {}
            Some((best_enc, _)) if enc == *best_enc => {
                self.best_count += 1;
            }
            _ => {
                self.best = Some((enc, labeling));
                self.best_count = 1;
            }
        }
    }

    /// Relabelled adjacency rows: per facet position, the sorted vertex
    /// positions of its members, encoded into bytes.
    fn encode(&self, labeling: &[usize]) -> Vec<u8> {
        let total = self.adj.len();
        let mut inv = vec![0usize; total];
        for (node, &pos) in labeling.iter().enumerate() {
            inv[pos] = node;
        }
        let mut out: Vec<u8> = Vec::new();
        push_u32(&mut out, self.n_left as u32);
        push_u32(&mut out, (total - self.n_left) as u32);
        for pos in self.n_left..total {
            let node = inv[pos];
            let mut row: Vec<usize> = self.adj[node].iter().map(|&w| labeling[w]).collect();
            row.sort_unstable();
            push_u32(&mut out, u32::MAX); // row separator
            for p in row {
                push_u32(&mut out, p as u32);
            }
        }
        out
    }
}

fn push_u32(out: &mut Vec<u8>, x: u32) {
    out.extend_from_slice(&x.to_be_bytes());
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inc(sets: &[&[usize]], n: usize) -> IncidenceMatrix {
        IncidenceMatrix::new(sets.iter().map(|s| s.to_vec()).collect(), n).unwrap()
    }

    #[test]
    fn triangle_invariant_under_relabeling() {
        let a = inc(&[&[0, 1], &[1, 2], &[0, 2]], 3);
        let b = inc(&[&[1, 2], &[0, 2], &[0, 1]], 3); // vertices renamed 0->2
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn automorphisms_of_small_polygons() {
        let triangle = inc(&[&[0, 1], &[1, 2], &[0, 2]], 3);
        assert_eq!(automorphism_order(&triangle).unwrap(), 6);
        let square = inc(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]], 4);
        assert_eq!(automorphism_order(&square).unwrap(), 8);
    }

    #[test]
    fn cube_has_48_automorphisms() {
        let cube = crate::construct::cube_incidences(3);
        assert_eq!(automorphism_order(&cube).unwrap(), 48);
    }

    #[test]
    fn certificate_is_produced_and_checked() {
        let a = inc(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]], 4);
        let b = inc(&[&[0, 2], &[1, 2], &[1, 3], &[0, 3]], 4);
        let cert = check_iso_incidences(&a, &b).unwrap().expect("isomorphic");
        assert!(verify_certificate(&a, &b, &cert));
        let tri = inc(&[&[0, 1], &[1, 2], &[0, 2]], 3);
        assert!(check_iso_incidences(&a, &tri).unwrap().is_none());
    }

    #[test]
    fn cube_and_octahedron_differ() {
        let cube = crate::construct::cube_incidences(3);
        // octahedron = dual: swap the roles of vertices and facets
        let octa_sets: Vec<Vec<usize>> = (0..8)
            .map(|v| {
                cube.sets
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(&v))
                    .map(|(f, _)| f)
                    .collect()
            })
            .collect();
        let octa = IncidenceMatrix::new(octa_sets, 6).unwrap();
        assert_ne!(canonical_form(&cube), canonical_form(&octa));
    }
}
