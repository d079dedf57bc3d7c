//! The solubility graph: vertices are group elements, edges join distinct
//! elements generating a soluble subgroup.

use std::io::Write;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::{ElementSet, PermGroup, Permutation};
use crate::solubilizer::{PairCache, SolubilizerAtlas};

/// Simple undirected graph over permutations with dense bitset rows.
/// Vertex `i` is the `i`-th vertex in canonical element order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolubilityGraph {
    vertices: Vec<Permutation>,
    rows: Vec<FixedBitSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotLabels {
    Cycles,
    Indices,
}

impl SolubilityGraph {
    /// Builds a graph from adjacency rows, checking symmetry and the absence of loops.
    pub fn from_rows(vertices: Vec<Permutation>, rows: Vec<FixedBitSet>) -> Result<Self> {
        let n = vertices.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("adjacency rows must be n x n".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.contains(i) {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {i}")));
            }
            if let Some(j) = row.ones().find(|&j| !rows[j].contains(i)) {
                return Err(Error::InvalidArgument(format!("edge {i}-{j} is not symmetric")));
            }
        }
        Ok(SolubilityGraph { vertices, rows })
    }

    pub(crate) fn from_atlas(atlas: &SolubilizerAtlas) -> Self {
        let eg = atlas.group();
        let rows = (0..eg.len())
            .map(|x| {
                let mut row = atlas.bits(x);
                row.set(x, false);
                row
            })
            .collect();
        SolubilityGraph { vertices: eg.elements().to_vec(), rows }
    }

    /// The complete graph on the given vertices.
    pub fn complete(vertices: Vec<Permutation>) -> Self {
        let n = vertices.len();
        let rows = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert_range(..);
                row.set(i, false);
                row
            })
            .collect();
        SolubilityGraph { vertices, rows }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: &Permutation) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn neighbors(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count_ones(..)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|i| self.degree(i) + 1 == n)
    }

    fn degree_of_vertices(&self) -> usize {
        self.vertices.first().map_or(1, Permutation::degree)
    }

    /// Distances from `source`; `None` for unreachable vertices.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let n = self.vertex_count();
        let mut dist = vec![None; n];
        let mut visited = FixedBitSet::with_capacity(n);
        let mut frontier = FixedBitSet::with_capacity(n);
        visited.insert(source);
        frontier.insert(source);
        dist[source] = Some(0);
        let mut level = 0;
        while !frontier.is_clear() {
            level += 1;
            let mut next = FixedBitSet::with_capacity(n);
            for v in frontier.ones() {
                next.union_with(&self.rows[v]);
            }
            next.difference_with(&visited);
            for v in next.ones() {
                dist[v] = Some(level);
            }
            visited.union_with(&next);
            frontier = next;
        }
        dist
    }

    /// Largest distance from `source`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, source: usize) -> Option<usize> {
        self.distances(source).into_iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

/// `Γ_S(G)`.
pub fn build_graph(group: &PermGroup, cache: &PairCache) -> Result<SolubilityGraph> {
    let atlas = SolubilizerAtlas::compute(group, cache)?;
    Ok(SolubilityGraph::from_atlas(&atlas))
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(graph: &SolubilityGraph) -> ElementSet {
    let n = graph.vertex_count();
    let members = (0..n).filter(|&i| graph.degree(i) + 1 == n).map(|i| graph.vertices[i].clone()).collect();
    ElementSet::from_sorted(graph.degree_of_vertices(), members)
}

/// The subgraph induced on the vertices outside `radical`, which must be the
/// universal vertex set. The result is empty exactly when the group is soluble.
pub fn reduced_graph(graph: &SolubilityGraph, radical: &ElementSet) -> Result<SolubilityGraph> {
    if universal_vertices(graph) != *radical {
        return Err(Error::InvalidArgument("the removed set must be the universal vertex set".into()));
    }
    let kept: Vec<usize> = (0..graph.vertex_count()).filter(|&i| !radical.contains(&graph.vertices[i])).collect();
    let m = kept.len();
    let rows = kept
        .iter()
        .map(|&i| {
            let mut row = FixedBitSet::with_capacity(m);
            for (new_j, &j) in kept.iter().enumerate() {
                if graph.rows[i].contains(j) {
                    row.insert(new_j);
                }
            }
            row
        })
        .collect();
    let vertices = kept.iter().map(|&i| graph.vertices[i].clone()).collect();
    Ok(SolubilityGraph { vertices, rows })
}

pub fn is_connected(graph: &SolubilityGraph) -> Result<bool> {
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(graph.distances(0).iter().all(Option::is_some))
}

/// Maximum eccentricity over all vertices.
pub fn diameter(graph: &SolubilityGraph) -> Result<usize> {
    if !is_connected(graph)? {
        return Err(Error::Disconnected);
    }
    Ok((0..graph.vertex_count()).map(|v| graph.eccentricity(v).expect("connected")).max().unwrap_or(0))
}

/// Writes the graph in DOT format: nodes in vertex order, then edges `i -- j`
/// with `i < j` in lexicographic order.
pub fn export_dot(graph: &SolubilityGraph, labels: DotLabels, sink: &mut dyn Write) -> Result<()> {
    let mut out = String::new();
    out.push_str("graph solubility {\n");
    for (i, v) in graph.vertices.iter().enumerate() {
        match labels {
            DotLabels::Cycles => out.push_str(&format!("  {i} [label=\"{v}\"];\n")),
            DotLabels::Indices => out.push_str(&format!("  {i};\n")),
        }
    }
    for i in 0..graph.vertex_count() {
        for j in graph.rows[i].ones().filter(|&j| j > i) {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
    }
    out.push_str("}\n");
    sink.write_all(out.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, by_name, cyclic, symmetric};
    use crate::perm::parse_cycles;
    use crate::structure::soluble_radical;

    #[test]
    fn soluble_group_graph_is_complete() {
        let g = build_graph(&symmetric(3).unwrap(), &PairCache::new()).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(g.is_complete());
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn a5_graph_has_a_non_edge() {
        let g = build_graph(&alternating(5).unwrap(), &PairCache::new()).unwrap();
        assert_eq!(g.vertex_count(), 60);
        assert!(!g.is_complete());
        let x = g.vertex_index(&parse_cycles("(1 2 3 4 5)", 5).unwrap()).unwrap();
        let y = g.vertex_index(&parse_cycles("(1 2 3)", 5).unwrap()).unwrap();
        assert!(!g.adjacent(x, y));
        assert!(!g.adjacent(y, x));
    }

    #[test]
    fn trivial_group_graph() {
        let g = build_graph(&cyclic(1).unwrap(), &PairCache::new()).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(is_connected(&g).unwrap());
        assert_eq!(diameter(&g).unwrap(), 0);
    }

    #[test]
    fn universal_vertices_examples() {
        let a5 = build_graph(&alternating(5).unwrap(), &PairCache::new()).unwrap();
        let u = universal_vertices(&a5);
        assert_eq!(u.len(), 1);
        assert!(u.iter().next().unwrap().is_identity());

        let s4 = build_graph(&symmetric(4).unwrap(), &PairCache::new()).unwrap();
        assert_eq!(universal_vertices(&s4).len(), 24);

        let group = by_name("A5xC2").unwrap().group;
        let g = build_graph(&group, &PairCache::new()).unwrap();
        assert_eq!(universal_vertices(&g), soluble_radical(&group).unwrap().radical);
        assert_eq!(universal_vertices(&g).len(), 2);
    }

    #[test]
    fn reduced_graphs() {
        let a5 = build_graph(&alternating(5).unwrap(), &PairCache::new()).unwrap();
        let r = reduced_graph(&a5, &universal_vertices(&a5)).unwrap();
        assert_eq!(r.vertex_count(), 59);
        assert!(is_connected(&r).unwrap());
        let d = diameter(&r).unwrap();
        assert!(d <= 5);

        let g = build_graph(&by_name("A5xC2").unwrap().group, &PairCache::new()).unwrap();
        assert_eq!(reduced_graph(&g, &universal_vertices(&g)).unwrap().vertex_count(), 118);

        let s4 = build_graph(&symmetric(4).unwrap(), &PairCache::new()).unwrap();
        let empty = reduced_graph(&s4, &universal_vertices(&s4)).unwrap();
        assert!(empty.is_empty());
        assert_eq!(is_connected(&empty), Err(Error::EmptyGraph));
        assert_eq!(diameter(&empty), Err(Error::EmptyGraph));

        let wrong = ElementSet::new(5, [parse_cycles("(1 2 3)", 5).unwrap()]).unwrap();
        assert!(reduced_graph(&a5, &wrong).is_err());
    }

    #[test]
    fn complete_graph_diameter() {
        let verts: Vec<Permutation> = symmetric(3).unwrap().elements(10).unwrap().iter().cloned().collect();
        let k = SolubilityGraph::complete(verts);
        assert!(is_connected(&k).unwrap());
        assert_eq!(diameter(&k).unwrap(), 1);
    }

    #[test]
    fn disconnected_graph() {
        let verts: Vec<Permutation> = symmetric(3).unwrap().elements(10).unwrap().iter().take(3).cloned().collect();
        let mut rows = vec![FixedBitSet::with_capacity(3); 3];
        rows[0].insert(1);
        rows[1].insert(0);
        let g = SolubilityGraph::from_rows(verts, rows).unwrap();
        assert!(!is_connected(&g).unwrap());
        assert_eq!(diameter(&g), Err(Error::Disconnected));
    }

    #[test]
    fn from_rows_validation() {
        let verts: Vec<Permutation> = symmetric(3).unwrap().elements(10).unwrap().iter().take(2).cloned().collect();
        let mut rows = vec![FixedBitSet::with_capacity(2); 2];
        rows[0].insert(1);
        assert!(SolubilityGraph::from_rows(verts.clone(), rows.clone()).is_err());
        rows[1].insert(1);
        assert!(SolubilityGraph::from_rows(verts, rows).is_err());
    }

    #[test]
    fn dot_output() {
        let verts: Vec<Permutation> = symmetric(2).unwrap().elements(10).unwrap().iter().cloned().collect();
        let k2 = SolubilityGraph::complete(verts);
        let mut buf = Vec::new();
        export_dot(&k2, DotLabels::Cycles, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 1);
        assert_eq!(text, "graph solubility {\n  0 [label=\"()\"];\n  1 [label=\"(1 2)\"];\n  0 -- 1;\n}\n");

        let s3 = build_graph(&symmetric(3).unwrap(), &PairCache::new()).unwrap();
        let mut buf = Vec::new();
        export_dot(&s3, DotLabels::Indices, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 15);
        assert_eq!(text.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count(), 6);
    }

    #[test]
    fn dot_is_deterministic() {
        let render = || {
            let g = build_graph(&alternating(5).unwrap(), &PairCache::new()).unwrap();
            let mut buf = Vec::new();
            export_dot(&g, DotLabels::Cycles, &mut buf).unwrap();
            buf
        };
        assert_eq!(render(), render());
    }

    #[test]
    fn rows_match_solubilizers() {
        let group = symmetric(5).unwrap();
        let cache = PairCache::new();
        let g = build_graph(&group, &cache).unwrap();
        for (i, v) in g.vertices().iter().enumerate().step_by(11) {
            let sol = crate::solubilizer::solubilizer(&group, v, &cache).unwrap();
            let mut expected: Vec<&Permutation> = sol.members.iter().filter(|m| *m != v).collect();
            expected.sort();
            let row: Vec<&Permutation> = g.neighbors(i).ones().map(|j| &g.vertices()[j]).collect();
            assert_eq!(row, expected);
        }
    }
}
