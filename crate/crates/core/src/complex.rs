//! Simplicial complexes and their combinatorial topology.
//!
//! Vertices are interned: a complex keeps its sorted vertex labels and refers
//! to vertex `i` by its position in that list. Polynomial variable `x{i+1}`
//! belongs to vertex `i`, so for the usual `1..=n` labelling variable `x_k`
//! is vertex `k`.

use std::collections::{HashMap, HashSet, VecDeque};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;

/// A face as a sorted list of vertex indices.
pub type Face = Vec<usize>;

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    labels: Vec<u32>,
    facets: Vec<Face>,
    /// `faces[k + 1]` holds the `k`-dimensional faces, sorted.
    faces: Vec<Vec<Face>>,
    face_set: HashSet<Face>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Canonical complex generated by the given vertex sets. The vertex set is
    /// the union of the facets.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = u32>,
    {
        let facets: Vec<Vec<u32>> = facets.into_iter().map(|f| f.into_iter().collect()).collect();
        let mut labels: Vec<u32> = facets.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        Self::with_vertices(labels, facets)
    }

    /// Like [`from_facets`](Self::from_facets) but with an explicit vertex
    /// list. Listed vertices that lie in no facet are not faces; each of them
    /// contributes a degree-one generator to the Stanley-Reisner ideal.
    pub fn with_vertices(vertices: Vec<u32>, facets: Vec<Vec<u32>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::InvalidComplex("no facets given".into()));
        }
        if facets.iter().any(Vec::is_empty) {
            return Err(Error::InvalidComplex("empty facet".into()));
        }
        let mut labels = vertices;
        labels.sort_unstable();
        let before = labels.len();
        labels.dedup();
        if labels.len() != before {
            return Err(Error::InvalidComplex("repeated vertex label".into()));
        }
        let index: HashMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut idx_facets = Vec::with_capacity(facets.len());
        for f in facets {
            let face = f
                .iter()
                .map(|v| {
                    index.get(v).copied().ok_or_else(|| {
                        Error::InvalidComplex(format!("vertex {v} missing from vertex list"))
                    })
                })
                .collect::<Result<Face>>()?;
            idx_facets.push(face);
        }
        Ok(Self::from_index_facets(labels, idx_facets))
    }

    /// Canonicalizes index facets: sorts, removes repeats and non-maximal
    /// sets. A single empty facet gives the complex `{∅}`.
    pub(crate) fn from_index_facets(labels: Vec<u32>, facets: Vec<Face>) -> Self {
        let mut facets: Vec<Face> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|g| g.len() > f.len() && is_subset(&f, g)) {
                kept.push(f);
            }
        }
        kept.sort();

        let mut face_set: HashSet<Face> = HashSet::new();
        for f in &kept {
            let k = f.len();
            for mask in 0u64..(1u64 << k) {
                let sub: Face = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
                face_set.insert(sub);
            }
        }
        let top = kept.iter().map(Vec::len).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); top + 1];
        for f in &face_set {
            faces[f.len()].push(f.clone());
        }
        faces.iter_mut().for_each(|v| v.sort());
        SimplicialComplex { labels, facets: kept, faces, face_set }
    }

    /// The complex `{∅}`, the link of a facet.
    pub fn irrelevant() -> Self {
        Self::from_index_facets(Vec::new(), vec![Vec::new()])
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 2
    }

    pub fn is_pure(&self) -> bool {
        let n = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == n)
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.face_set.contains(face)
    }

    pub fn label_face(&self, face: &[usize]) -> Vec<u32> {
        face.iter().map(|&i| self.labels[i]).collect()
    }

    /// Converts labels to a sorted index face; `None` if a label is unknown.
    pub fn index_face(&self, labels: &[u32]) -> Option<Face> {
        let mut out: Face = labels
            .iter()
            .map(|l| self.labels.binary_search(l).ok())
            .collect::<Option<_>>()?;
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    pub fn labeled_facets(&self) -> Vec<Vec<u32>> {
        self.facets.iter().map(|f| self.label_face(f)).collect()
    }

    /// All `k`-dimensional faces; `faces(-1)` is `[∅]`.
    pub fn faces(&self, k: isize) -> Result<&[Face]> {
        if k < -1 || k > self.dim() {
            return Err(Error::Dimension { requested: k as i64, min: -1, max: self.dim() as i64 });
        }
        Ok(&self.faces[(k + 1) as usize])
    }

    /// Every face, by increasing dimension.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    /// `(f_{-1}, f_0, ..., f_d)`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces.iter().map(|v| v.len() as u64).collect()
    }

    pub fn fh_profile(&self) -> FHProfile {
        FHProfile::from_f_vector(self.f_vector())
    }

    /// Vertices joined by an edge.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces.get(2).map_or_else(Vec::new, |e| e.iter().map(|f| (f[0], f[1])).collect())
    }

    pub fn link(&self, sigma: &[usize]) -> Result<SimplicialComplex> {
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        if !self.contains_face(&sigma) {
            return Err(Error::NotAFace(self.label_face(&sigma)));
        }
        let pieces: Vec<Vec<u32>> = self
            .facets
            .iter()
            .filter(|f| is_subset(&sigma, f))
            .map(|f| f.iter().filter(|v| sigma.binary_search(v).is_err()).map(|&v| self.labels[v]).collect())
            .collect();
        if pieces.iter().all(Vec::is_empty) {
            return Ok(Self::irrelevant());
        }
        Self::from_facets(pieces.into_iter().filter(|p| !p.is_empty()))
    }

    /// Link of a face given by vertex labels.
    pub fn link_of_labels(&self, sigma: &[u32]) -> Result<SimplicialComplex> {
        let face = self.index_face(sigma).ok_or_else(|| Error::NotAFace(sigma.to_vec()))?;
        self.link(&face)
    }

    /// Boundary map `C_k -> C_{k-1}` with rows indexed by `faces(k-1)` and
    /// columns by `faces(k)`. Removing the `j`-th vertex carries sign `(-1)^j`.
    pub fn boundary_matrix(&self, k: isize) -> ExactMatrix {
        let (Ok(lower), Ok(upper)) = (self.faces(k - 1), self.faces(k)) else {
            return ExactMatrix::zeros(0, 0);
        };
        let row_of: HashMap<&Face, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut triplets = Vec::new();
        for (c, face) in upper.iter().enumerate() {
            for j in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(j);
                let sign = if j % 2 == 0 { 1 } else { -1 };
                triplets.push((row_of[&sub], c, sign));
            }
        }
        ExactMatrix::from_integer_triplets(lower.len(), upper.len(), triplets)
    }

    /// Reduced rational homology.
    pub fn homology(&self) -> HomologyReport {
        let d = self.dim();
        // rank of ∂_k for k = 0..=d; ∂_{-1} and ∂_{d+1} vanish
        let ranks: Vec<usize> = (0..=d).map(|k| self.boundary_matrix(k).rank()).collect();
        let rank_at = |k: isize| if k < 0 || k > d { 0 } else { ranks[k as usize] };
        let betti: Vec<usize> = (-1..=d)
            .map(|i| self.faces[(i + 1) as usize].len() - rank_at(i) - rank_at(i + 1))
            .collect();
        let top_cycle = if betti[(d + 1) as usize] == 1 {
            if d < 0 {
                Some(vec![BigRational::from_integer(1.into())])
            } else {
                self.boundary_matrix(d).kernel_basis().vectors.into_iter().next()
            }
        } else {
            None
        };
        HomologyReport { ranks: betti, top_cycle }
    }

    /// Reisner's criterion over every face, including the empty face. Returns
    /// `None` when the complex is Cohen-Macaulay, otherwise the first failing
    /// `(face, degree)` in face order.
    pub fn cohen_macaulay_witness(&self) -> Option<(Face, isize)> {
        let faces: Vec<&Face> = self.all_faces().collect();
        faces
            .par_iter()
            .map(|sigma| {
                let lk = self.link(sigma).expect("face of the complex");
                let h = lk.homology();
                let bad = (-1..lk.dim()).find(|&i| h.betti(i) != 0);
                bad.map(|i| ((*sigma).clone(), i))
            })
            .find_first(Option::is_some)
            .flatten()
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.cohen_macaulay_witness().is_none()
    }

    /// Every link, the complex itself included, has the rational homology of a
    /// sphere of its own dimension.
    pub fn is_homology_sphere(&self) -> bool {
        let faces: Vec<&Face> = self.all_faces().collect();
        faces.par_iter().all(|sigma| {
            let lk = self.link(sigma).expect("face of the complex");
            let d = lk.dim();
            let h = lk.homology();
            (-1..=d).all(|i| h.betti(i) == usize::from(i == d))
        })
    }

    pub fn pseudomanifold_status(&self) -> PseudomanifoldStatus {
        let pure = self.is_pure();
        let d = self.dim();
        let graph_edges = ridge_adjacency(&self.facets);
        let strongly_connected = connected(self.facets.len(), &graph_edges);

        let mut ridge_degree: HashMap<Face, usize> = HashMap::new();
        if d >= 0 {
            for f in self.faces(d - 1).expect("ridge dimension") {
                ridge_degree.insert(f.clone(), 0);
            }
            for f in self.facets.iter().filter(|f| f.len() as isize == d + 1) {
                for j in 0..f.len() {
                    let mut r = f.clone();
                    r.remove(j);
                    *ridge_degree.get_mut(&r).expect("ridge of a facet") += 1;
                }
            }
        }
        let max_ridge_degree = ridge_degree.values().copied().max().unwrap_or(0);
        let boundary_ridges: Vec<Face> = {
            let mut v: Vec<Face> = ridge_degree
                .iter()
                .filter(|(_, &n)| n == 1)
                .map(|(r, _)| r.clone())
                .collect();
            v.sort();
            v
        };
        let boundary = if boundary_ridges.is_empty() {
            None
        } else if boundary_ridges.iter().all(Vec::is_empty) {
            Some(Self::irrelevant())
        } else {
            Some(
                Self::from_facets(boundary_ridges.iter().map(|r| self.label_face(r)))
                    .expect("non-empty ridges"),
            )
        };
        let is_pseudomanifold = pure && strongly_connected && max_ridge_degree <= 2;
        let orientable =
            is_pseudomanifold && boundary.is_none() && self.homology().betti(d) == 1;
        PseudomanifoldStatus {
            pure,
            strongly_connected,
            max_ridge_degree,
            boundary,
            is_pseudomanifold,
            orientable,
        }
    }

    /// A proper `(d+1)`-coloring of the 1-skeleton, by exhaustive
    /// backtracking. Colors are `1..=d+1`; vertex 0 gets color 1 and new colors
    /// are introduced in increasing order.
    pub fn balanced_coloring(&self) -> Result<Option<Coloring>> {
        if !self.is_pure() {
            return Err(Error::Purity);
        }
        let k = (self.dim() + 1) as usize;
        let n = self.num_vertices();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut colors = vec![0usize; n];
        fn assign(v: usize, k: usize, used: usize, adj: &[Vec<usize>], colors: &mut [usize]) -> bool {
            if v == colors.len() {
                return true;
            }
            for c in 1..=k.min(used + 1) {
                if adj[v].iter().any(|&u| u < v && colors[u] == c) {
                    continue;
                }
                colors[v] = c;
                if assign(v + 1, k, used.max(c), adj, colors) {
                    return true;
                }
            }
            colors[v] = 0;
            false
        }
        if k == 0 || !assign(0, k, 0, &adj, &mut colors) {
            return Ok(None);
        }
        Ok(Some(Coloring { assignment: colors, k }))
    }

    /// Greedy elementary-collapse search with depth-first backtracking.
    ///
    /// Succeeds when the remaining complex has dimension at most `target_dim`;
    /// for `target_dim == 0` a single vertex must remain, so success certifies
    /// collapsibility. Free pairs are tried highest dimension first, then in
    /// face order. `budget` bounds the total number of collapses tried. `None`
    /// is not a proof that no certificate exists.
    pub fn collapse_search(&self, target_dim: usize, budget: u64) -> Option<CollapseCertificate> {
        let mut state = CollapseState::new(self);
        let mut steps = Vec::new();
        let mut spent = 0u64;
        let mut dead: HashSet<Vec<bool>> = HashSet::new();
        if state.search(target_dim, budget, &mut spent, &mut steps, &mut dead) {
            let steps: Vec<(Face, Face)> = steps
                .into_iter()
                .map(|(s, t)| (state.faces[s].clone(), state.faces[t].clone()))
                .collect();
            let residual = state.residual(self);
            Some(CollapseCertificate { steps, residual })
        } else {
            None
        }
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|x| b.binary_search(x).is_ok()).count()
}

/// Pairs of facets `(i, j)`, `i < j`, sharing a codimension-one face of both.
pub(crate) fn ridge_adjacency(facets: &[Face]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            let (f, g) = (&facets[i], &facets[j]);
            if f.len() == g.len() && intersection_size(f, g) + 1 == f.len() {
                edges.push((i, j));
            }
        }
    }
    edges
}

pub(crate) fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// f- and h-vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FHProfile {
    /// `(f_{-1}, f_0, ..., f_d)`.
    pub f: Vec<u64>,
    /// `(h_0, ..., h_{d+1})`.
    pub h: Vec<i64>,
    pub h_degree: usize,
}

impl FHProfile {
    /// Applies `Σ f_{i-1} (x-1)^{d+1-i} = Σ h_i x^{d+1-i}`.
    pub fn from_f_vector(f: Vec<u64>) -> Self {
        let m = f.len(); // d + 2
        let h: Vec<i64> = (0..m)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial((m - 1 - i) as u64, (k - i) as u64) * f[i] as i64
                    })
                    .sum()
            })
            .collect();
        let h_degree = h.iter().rposition(|&x| x != 0).unwrap_or(0);
        FHProfile { f, h, h_degree }
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Reduced Betti numbers over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    /// `ranks[i + 1]` is the rank of the reduced homology in degree `i`, for
    /// `i = -1..=d`.
    pub ranks: Vec<usize>,
    /// Generator of the top homology on facets when its rank is one.
    #[serde(serialize_with = "serialize_rational_vec")]
    pub top_cycle: Option<Vec<BigRational>>,
}

impl HomologyReport {
    pub fn betti(&self, i: isize) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.ranks.get(k)).copied().unwrap_or(0)
    }
}

fn serialize_rational_vec<S: serde::Serializer>(
    v: &Option<Vec<BigRational>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(v) => s.collect_seq(v.iter().map(|x| x.to_string())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudomanifoldStatus {
    pub pure: bool,
    pub strongly_connected: bool,
    pub max_ridge_degree: usize,
    /// Complex generated by the ridges lying in exactly one facet.
    pub boundary: Option<SimplicialComplex>,
    pub is_pseudomanifold: bool,
    /// Pseudomanifold without boundary whose top homology has rank one.
    pub orientable: bool,
}

/// Vertex coloring; `assignment[v]` is the color of vertex `v`, in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub k: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, k: usize) -> Self {
        Coloring { assignment, k }
    }

    /// First edge whose endpoints share a color, or a color outside `1..=k`.
    pub fn check(&self, complex: &SimplicialComplex) -> Result<()> {
        if self.assignment.len() != complex.num_vertices() {
            return Err(Error::Coloring(format!(
                "{} colors for {} vertices",
                self.assignment.len(),
                complex.num_vertices()
            )));
        }
        if let Some(v) = self.assignment.iter().position(|&c| c == 0 || c > self.k) {
            return Err(Error::Coloring(format!("vertex {} has color outside 1..={}", complex.labels()[v], self.k)));
        }
        if let Some((u, v)) = complex
            .edges()
            .into_iter()
            .find(|&(u, v)| self.assignment[u] == self.assignment[v])
        {
            return Err(Error::Coloring(format!(
                "edge {{{}, {}}} is monochromatic",
                complex.labels()[u],
                complex.labels()[v]
            )));
        }
        Ok(())
    }

    /// Vertices of color `c`.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&v| self.assignment[v] == c).collect()
    }
}

/// Replayable list of elementary collapses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseCertificate {
    /// `(free_face, coface)` pairs as vertex-index faces of the start complex.
    pub steps: Vec<(Face, Face)>,
    pub residual: SimplicialComplex,
}

impl CollapseCertificate {
    /// Re-executes the steps on `start`, checking that every `free_face` lies
    /// in exactly one strictly larger face, namely `coface`. Returns the
    /// remaining faces, presented by their maximal elements.
    pub fn replay(&self, start: &SimplicialComplex) -> Result<SimplicialComplex> {
        let mut alive: HashSet<Face> = start.all_faces().cloned().collect();
        for (k, (sigma, tau)) in self.steps.iter().enumerate() {
            let invalid = |why: &str| Error::Hypothesis(format!("collapse step {k}: {why}"));
            if sigma.is_empty() || !alive.contains(sigma) || !alive.contains(tau) {
                return Err(invalid("face not present"));
            }
            let larger: Vec<&Face> = alive
                .iter()
                .filter(|f| f.len() > sigma.len() && is_subset(sigma, f))
                .collect();
            if larger.len() != 1 || larger[0] != tau {
                return Err(invalid("face is not free with the stated coface"));
            }
            alive.remove(sigma);
            alive.remove(tau);
        }
        let residual = faces_to_complex(start, alive.into_iter().collect());
        if residual != self.residual {
            return Err(Error::Hypothesis("recorded residual differs from replay".into()));
        }
        Ok(residual)
    }

    pub fn labeled_steps(&self, start: &SimplicialComplex) -> Vec<(Vec<u32>, Vec<u32>)> {
        self.steps
            .iter()
            .map(|(s, t)| (start.label_face(s), start.label_face(t)))
            .collect()
    }
}

fn faces_to_complex(start: &SimplicialComplex, faces: Vec<Face>) -> SimplicialComplex {
    let nonempty: Vec<Face> = faces.into_iter().filter(|f| !f.is_empty()).collect();
    if nonempty.is_empty() {
        return SimplicialComplex::irrelevant();
    }
    SimplicialComplex::from_facets(nonempty.iter().map(|f| start.label_face(f)))
        .expect("non-empty faces")
}

struct CollapseState {
    faces: Vec<Face>,
    cofaces: Vec<Vec<usize>>,
    subfaces: Vec<Vec<usize>>,
    alive: Vec<bool>,
    live_cofaces: Vec<usize>,
}

impl CollapseState {
    fn new(complex: &SimplicialComplex) -> Self {
        let faces: Vec<Face> = complex.all_faces().cloned().collect();
        let id: HashMap<&Face, usize> = faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut cofaces = vec![Vec::new(); faces.len()];
        let mut subfaces = vec![Vec::new(); faces.len()];
        for (i, f) in faces.iter().enumerate() {
            for j in 0..f.len() {
                let mut s = f.clone();
                s.remove(j);
                let si = id[&s];
                cofaces[si].push(i);
                subfaces[i].push(si);
            }
        }
        let live_cofaces = cofaces.iter().map(Vec::len).collect();
        let n = faces.len();
        CollapseState { faces, cofaces, subfaces, alive: vec![true; n], live_cofaces }
    }

    fn free_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = (0..self.faces.len())
            .filter(|&s| self.alive[s] && !self.faces[s].is_empty() && self.live_cofaces[s] == 1)
            .filter_map(|s| {
                let t = *self.cofaces[s].iter().find(|&&t| self.alive[t])?;
                (self.live_cofaces[t] == 0).then_some((s, t))
            })
            .collect();
        pairs.sort_by(|a, b| {
            self.faces[b.1].len().cmp(&self.faces[a.1].len()).then(a.0.cmp(&b.0))
        });
        pairs
    }

    fn toggle(&mut self, s: usize, t: usize, remove: bool) {
        for f in [t, s] {
            self.alive[f] = !remove;
            for &sub in &self.subfaces[f] {
                if remove {
                    self.live_cofaces[sub] -= 1;
                } else {
                    self.live_cofaces[sub] += 1;
                }
            }
        }
    }

    fn done(&self, target_dim: usize) -> bool {
        let mut vertices = 0;
        for (i, f) in self.faces.iter().enumerate() {
            if self.alive[i] {
                if f.len() > target_dim + 1 {
                    return false;
                }
                vertices += usize::from(f.len() == 1);
            }
        }
        target_dim > 0 || vertices == 1
    }

    fn search(
        &mut self,
        target_dim: usize,
        budget: u64,
        spent: &mut u64,
        steps: &mut Vec<(usize, usize)>,
        dead: &mut HashSet<Vec<bool>>,
    ) -> bool {
        if self.done(target_dim) {
            return true;
        }
        if dead.contains(&self.alive) {
            return false;
        }
        for (s, t) in self.free_pairs() {
            if *spent >= budget {
                return false;
            }
            *spent += 1;
            self.toggle(s, t, true);
            steps.push((s, t));
            if self.search(target_dim, budget, spent, steps, dead) {
                return true;
            }
            steps.pop();
            self.toggle(s, t, false);
        }
        if *spent < budget {
            dead.insert(self.alive.clone());
        }
        false
    }

    fn residual(&self, start: &SimplicialComplex) -> SimplicialComplex {
        let faces = (0..self.faces.len())
            .filter(|&i| self.alive[i])
            .map(|i| self.faces[i].clone())
            .collect();
        faces_to_complex(start, faces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn cx(f: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(f.iter().map(|s| s.to_vec())).unwrap()
    }

    #[test]
    fn canonical_facets() {
        let c3 = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(c3.dim(), 1);
        assert_eq!(c3.facets().len(), 3);
        let c = cx(&[&[1, 2, 3], &[1, 2]]);
        assert_eq!(c.labeled_facets(), vec![vec![1, 2, 3]]);
        assert!(SimplicialComplex::from_facets(Vec::<Vec<u32>>::new()).is_err());
        assert!(SimplicialComplex::from_facets(vec![Vec::<u32>::new()]).is_err());
        let oct = fixtures::oct().complex;
        assert_eq!((oct.dim(), oct.facets().len()), (2, 8));
    }

    #[test]
    fn faces_by_dimension() {
        let oct = fixtures::oct().complex;
        assert_eq!(oct.faces(1).unwrap().len(), 12);
        assert_eq!(oct.faces(0).unwrap().len(), 6);
        assert_eq!(oct.faces(-1).unwrap(), &[Vec::<usize>::new()]);
        assert!(matches!(oct.faces(3), Err(Error::Dimension { .. })));
        assert!(matches!(oct.faces(-2), Err(Error::Dimension { .. })));
        let c3 = fixtures::c3().complex;
        let edges: Vec<Vec<u32>> = c3.faces(1).unwrap().iter().map(|f| c3.label_face(f)).collect();
        assert_eq!(edges, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn fh_examples() {
        let p = fixtures::oct().complex.fh_profile();
        assert_eq!(p.f, vec![1, 6, 12, 8]);
        assert_eq!(p.h, vec![1, 3, 3, 1]);
        assert_eq!(p.h_degree, 3);
        let p = cx(&[&[1]]).fh_profile();
        assert_eq!((p.f, p.h), (vec![1, 1], vec![1, 0]));
        let p = fixtures::c4().complex.fh_profile();
        assert_eq!((p.f, p.h, p.h_degree), (vec![1, 4, 4], vec![1, 2, 1], 2));
    }

    #[test]
    fn link_examples() {
        let oct = fixtures::oct().complex;
        let lk = oct.link_of_labels(&[1]).unwrap();
        assert_eq!(lk.labeled_facets(), vec![vec![3, 5], vec![3, 6], vec![4, 5], vec![4, 6]]);
        assert_eq!(oct.link(&[]).unwrap(), oct);
        let c3 = fixtures::c3().complex;
        assert_eq!(c3.link_of_labels(&[1]).unwrap().labeled_facets(), vec![vec![2], vec![3]]);
        assert!(matches!(oct.link_of_labels(&[1, 2]), Err(Error::NotAFace(_))));
        assert_eq!(oct.link_of_labels(&[1, 3, 5]).unwrap().dim(), -1);
    }

    #[test]
    fn homology_examples() {
        let oct = fixtures::oct().complex;
        let h = oct.homology();
        assert_eq!(h.ranks, vec![0, 0, 0, 1]);
        let cycle = h.top_cycle.unwrap();
        let d2 = oct.boundary_matrix(2);
        assert!(d2.mul_vec(&cycle).iter().all(num_traits::Zero::is_zero));
        assert_eq!(fixtures::c4().complex.homology().ranks, vec![0, 0, 1]);
        assert_eq!(fixtures::dunce().complex.homology().ranks, vec![0, 0, 0, 0]);
        assert_eq!(SimplicialComplex::irrelevant().homology().ranks, vec![1]);
    }

    #[test]
    fn cohen_macaulay_examples() {
        assert!(fixtures::oct().complex.is_cohen_macaulay());
        let two_edges = cx(&[&[1, 2], &[3, 4]]);
        assert_eq!(two_edges.cohen_macaulay_witness(), Some((vec![], 0)));
        assert!(fixtures::dunce().complex.is_cohen_macaulay());
    }

    #[test]
    fn pseudomanifold_examples() {
        let s = fixtures::oct().complex.pseudomanifold_status();
        assert!(s.pure && s.strongly_connected && s.orientable && s.boundary.is_none());
        assert_eq!(s.max_ridge_degree, 2);
        let s = fixtures::fan4().complex.pseudomanifold_status();
        assert!(s.pure && s.strongly_connected && s.boundary.is_some() && !s.orientable);
        let s = cx(&[&[1, 2, 3], &[4, 5, 6]]).pseudomanifold_status();
        assert!(!s.strongly_connected);
    }

    #[test]
    fn homology_sphere_examples() {
        assert!(fixtures::oct().complex.is_homology_sphere());
        assert!(fixtures::cross4().complex.is_homology_sphere());
        assert!(!fixtures::fan4().complex.is_homology_sphere());
    }

    #[test]
    fn coloring_examples() {
        let oct = fixtures::oct().complex;
        let col = oct.balanced_coloring().unwrap().unwrap();
        assert_eq!(col.assignment, vec![1, 1, 2, 2, 3, 3]);
        col.check(&oct).unwrap();
        assert_eq!(fixtures::c3().complex.balanced_coloring().unwrap(), None);
        let c4 = fixtures::c4().complex.balanced_coloring().unwrap().unwrap();
        assert_eq!(c4.assignment, vec![1, 2, 1, 2]);
        assert_eq!(cx(&[&[1, 2, 3], &[3, 4]]).balanced_coloring(), Err(Error::Purity));
        let bad = Coloring::new(vec![1, 1, 2, 2], 2);
        assert!(matches!(bad.check(&fixtures::c4().complex), Err(Error::Coloring(_))));
    }

    #[test]
    fn collapse_examples() {
        let simplex = cx(&[&[1, 2, 3]]);
        let cert = simplex.collapse_search(0, 1_000_000).unwrap();
        assert_eq!(cert.replay(&simplex).unwrap().num_vertices(), 1);
        let fan = fixtures::fan4().complex;
        let cert = fan.collapse_search(1, 1_000_000).unwrap();
        assert!(cert.replay(&fan).unwrap().dim() <= 1);
        assert!(fixtures::dunce().complex.collapse_search(0, 1_000_000).is_none());
    }

    #[test]
    fn replay_rejects_bad_steps() {
        let simplex = cx(&[&[1, 2, 3]]);
        let mut cert = simplex.collapse_search(0, 1_000).unwrap();
        cert.steps.swap(0, 1);
        assert!(cert.replay(&simplex).is_err());
    }
}
