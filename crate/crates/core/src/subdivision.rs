//! Facet-ridge graphs, incidence complexes and the half-hollow edgewise
//! subdivision.

use std::collections::{BTreeSet, VecDeque};

use serde::{Serialize, Serializer};

use crate::complex::{ridge_adjacency, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Undirected simple graph on nodes `0..num_nodes`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    pub num_nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(num_nodes: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| {
                assert!(u < num_nodes && v < num_nodes && u != v, "bad edge ({u}, {v})");
                (u.min(v), u.max(v))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Graph { num_nodes, edges }
    }

    /// The 1-skeleton, on vertex indices.
    pub fn skeleton(complex: &SimplicialComplex) -> Self {
        Graph::new(complex.num_vertices(), complex.edges())
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_nodes];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        crate::complex::connected(self.num_nodes, &self.edges)
    }

    /// BFS 2-coloring of every component. `Err` carries an odd cycle as a
    /// closed walk of distinct nodes.
    pub fn bipartition(&self) -> std::result::Result<(Vec<usize>, Vec<usize>), Vec<usize>> {
        let adj = self.neighbours();
        let mut side: Vec<Option<bool>> = vec![None; self.num_nodes];
        let mut parent = vec![usize::MAX; self.num_nodes];
        let mut depth = vec![0usize; self.num_nodes];
        for root in 0..self.num_nodes {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!side[u].unwrap());
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(s) if s == side[u].unwrap() => {
                            return Err(odd_cycle(u, v, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, s) in side.into_iter().enumerate() {
            if s == Some(false) { a.push(i) } else { b.push(i) }
        }
        Ok((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }
}

fn odd_cycle(mut u: usize, mut v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut left, mut right) = (vec![u], vec![v]);
    while depth[u] > depth[v] {
        u = parent[u];
        left.push(u);
    }
    while depth[v] > depth[u] {
        v = parent[v];
        right.push(v);
    }
    while u != v {
        u = parent[u];
        v = parent[v];
        left.push(u);
        right.push(v);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Facets as nodes, joined when they share a ridge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetRidgeGraph {
    pub facets: Vec<Face>,
    pub graph: Graph,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
}

pub fn facet_ridge_graph(complex: &SimplicialComplex) -> Result<FacetRidgeGraph> {
    if !complex.is_pure() {
        return Err(Error::Purity);
    }
    let facets = complex.facets().to_vec();
    let graph = Graph::new(facets.len(), ridge_adjacency(&facets));
    let bipartition = graph.bipartition().ok();
    Ok(FacetRidgeGraph { facets, graph, bipartition })
}

/// Non-negative integer vector; `level` is the coordinate sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    coords: Vec<u32>,
    level: u32,
}

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Self {
        let level = coords.iter().sum();
        LatticePoint { coords, level }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn support(&self) -> Vec<usize> {
        self.coords.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, _)| i).collect()
    }

    /// `self + e_i`.
    pub fn bump(&self, i: usize) -> LatticePoint {
        let mut coords = self.coords.clone();
        coords[i] += 1;
        LatticePoint { coords, level: self.level + 1 }
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// `Δ(i)` together with the face of `Δ` behind each of its vertices.
#[derive(Clone, Debug)]
pub struct IncidenceComplex {
    pub complex: SimplicialComplex,
    /// Vertex `j` of `complex` is the `(i-1)`-face `faces[j]` of `Δ`.
    pub faces: Vec<Face>,
}

/// Vertices are the `(i-1)`-faces of `Δ`; each `i`-face contributes the set
/// of its `(i-1)`-subfaces. `i = dim Δ` is allowed.
pub fn incidence_complex(complex: &SimplicialComplex, i: isize) -> Result<IncidenceComplex> {
    let d = complex.dim();
    if i < 1 || i > d {
        return Err(Error::Dimension { requested: i as i64, min: 1, max: d as i64 });
    }
    let faces = complex.faces(i - 1)?.to_vec();
    let index: std::collections::HashMap<&Face, usize> = faces.iter().enumerate().map(|(j, f)| (f, j)).collect();
    let facets: Vec<Face> = complex
        .faces(i)?
        .iter()
        .map(|f| {
            (0..f.len())
                .map(|k| {
                    let mut sub = f.clone();
                    sub.remove(k);
                    index[&sub]
                })
                .collect()
        })
        .collect();
    let labels = (1..=faces.len() as u32).collect();
    Ok(IncidenceComplex { complex: SimplicialComplex::from_index_facets(labels, facets), faces })
}

/// `hesd(Δ, r)` with the lattice point behind each vertex.
#[derive(Clone, Debug)]
pub struct Hesd {
    pub complex: SimplicialComplex,
    /// Vertex `j` of `complex` is `points[j]`, in increasing lex order.
    pub points: Vec<LatticePoint>,
}

/// Half-hollow edgewise subdivision. For every facet `F` of `Δ` and every
/// point `a` of level `r - 1` supported in `F`, the set `{a + e_i : i ∈ F}`
/// is a facet. Requires facets pairwise meeting in at most one vertex.
pub fn hesd(complex: &SimplicialComplex, r: u32) -> Result<Hesd> {
    if r < 1 {
        return Err(Error::Range("subdivision parameter must be at least 1".into()));
    }
    let facets = complex.facets();
    for (i, f) in facets.iter().enumerate() {
        for g in &facets[i + 1..] {
            if f.iter().filter(|v| g.binary_search(v).is_ok()).count() > 1 {
                return Err(Error::NotIncidenceLike);
            }
        }
    }
    let n = complex.num_vertices();
    let mut raw: Vec<Vec<LatticePoint>> = Vec::new();
    for f in facets {
        let mut parts = vec![0u32; f.len()];
        spread(&mut parts, 0, r - 1, &mut |parts| {
            let mut coords = vec![0u32; n];
            for (k, &v) in f.iter().enumerate() {
                coords[v] = parts[k];
            }
            let a = LatticePoint::new(coords);
            raw.push(f.iter().map(|&v| a.bump(v)).collect());
        });
    }
    let points: Vec<LatticePoint> = raw.iter().flatten().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let new_facets = raw
        .iter()
        .map(|set| set.iter().map(|p| points.binary_search(p).unwrap()).collect())
        .collect();
    let labels = (1..=points.len() as u32).collect();
    Ok(Hesd { complex: SimplicialComplex::from_index_facets(labels, new_facets), points })
}

fn spread(parts: &mut [u32], at: usize, remaining: u32, emit: &mut dyn FnMut(&[u32])) {
    if at + 1 == parts.len() {
        parts[at] = remaining;
        emit(parts);
        return;
    }
    for k in 0..=remaining {
        parts[at] = k;
        spread(parts, at + 1, remaining - k, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn facet_ridge_examples() {
        let cube = facet_ridge_graph(&fixtures::oct().complex).unwrap();
        assert_eq!((cube.graph.num_nodes, cube.graph.edges.len()), (8, 12));
        let (a, b) = cube.bipartition.unwrap();
        assert_eq!((a.len(), b.len()), (4, 4));
        for n in [3, 4] {
            let c = if n == 3 { fixtures::c3() } else { fixtures::c4() };
            let g = facet_ridge_graph(&c.complex).unwrap().graph;
            assert_eq!(g.edges.len(), n);
            assert!(g.neighbours().iter().all(|v| v.len() == 2) && g.is_connected());
        }
        let fan = facet_ridge_graph(&fixtures::fan4().complex).unwrap();
        assert_eq!(fan.graph.edges.len(), 3);
        let mixed = SimplicialComplex::from_facets([vec![1, 2, 3], vec![3, 4]]).unwrap();
        assert_eq!(facet_ridge_graph(&mixed), Err(Error::Purity));
    }

    #[test]
    fn bipartition_examples() {
        let c4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(c4.bipartition(), Ok((vec![0, 2], vec![1, 3])));
        let c3 = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]);
        let mut w = c3.bipartition().unwrap_err();
        w.sort();
        assert_eq!(w, vec![0, 1, 2]);
        let c5 = Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)]);
        let w = c5.bipartition().unwrap_err();
        assert_eq!(w.len(), 5);
        for k in 0..w.len() {
            let (u, v) = (w[k], w[(k + 1) % w.len()]);
            assert!(c5.edges.contains(&(u.min(v), u.max(v))));
        }
    }

    #[test]
    fn incidence_examples() {
        for g in fixtures::graphs() {
            let inc = incidence_complex(&g.complex, 1).unwrap();
            assert_eq!(inc.complex.facets(), g.complex.facets());
        }
        let fan = fixtures::fan4().complex;
        let inc = incidence_complex(&fan, 2).unwrap();
        assert_eq!(inc.complex.num_vertices(), 9);
        assert_eq!(inc.complex.facets().len(), 4);
        for (i, f) in inc.complex.facets().iter().enumerate() {
            for g in &inc.complex.facets()[i + 1..] {
                assert!(f.iter().filter(|v| g.contains(v)).count() <= 1);
            }
        }
        let oct = fixtures::oct().complex;
        for i in 1..=2 {
            let inc = incidence_complex(&oct, i).unwrap();
            let f = oct.f_vector();
            assert_eq!(inc.complex.num_vertices() as u64, f[i as usize]);
            assert_eq!(inc.complex.facets().len() as u64, f[i as usize + 1]);
        }
        assert!(matches!(incidence_complex(&oct, 3), Err(Error::Dimension { .. })));
        assert!(matches!(incidence_complex(&oct, 0), Err(Error::Dimension { .. })));
    }

    #[test]
    fn hesd_examples() {
        let edge = fixtures::edge().complex;
        let h = hesd(&edge, 2).unwrap();
        let pts: Vec<Vec<u32>> = h.points.iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(pts, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(h.complex.facets(), &[vec![0, 1], vec![1, 2]]);
        for g in fixtures::graphs() {
            assert_eq!(hesd(&g.complex, 1).unwrap().complex.facets(), g.complex.facets());
        }
        let simplex = SimplicialComplex::from_facets([vec![1, 2, 3]]).unwrap();
        let h = hesd(&simplex, 4).unwrap();
        assert_eq!((h.complex.facets().len(), h.points.len()), (10, 15));
        assert_eq!(hesd(&fixtures::fan4().complex, 2).unwrap_err(), Error::NotIncidenceLike);
        assert!(hesd(&edge, 0).is_err());
    }

    #[test]
    fn hesd_graph_counts() {
        for g in fixtures::graphs() {
            let (v, e) = (g.complex.num_vertices() as u32, g.complex.facets().len() as u32);
            for r in 1..=6 {
                let h = hesd(&g.complex, r).unwrap();
                assert_eq!(h.points.len() as u32, v + e * (r - 1), "{} r={r}", g.name);
                assert_eq!(h.complex.facets().len() as u32, e * r);
                assert!(h.complex.facets().iter().all(|f| f.len() == 2));
                assert!(h.points.iter().all(|p| p.level() == r));
            }
        }
    }

    #[test]
    fn lattice_point_json() {
        let p = LatticePoint::new(vec![1, 0, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,0,2]");
        assert_eq!(p.support(), vec![0, 2]);
        assert_eq!(p.level(), 3);
    }
}
