#![allow(dead_code)]

use std::collections::HashSet;

use lefkit_core::SimplicialComplex;

type Edges = Vec<(usize, usize)>;

fn relabel(edges: &Edges, perm: &[usize]) -> Edges {
    let mut out: Edges = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

fn permutations_within(classes: &[Vec<usize>], at: usize, perm: &mut Vec<usize>, next: usize, out: &mut dyn FnMut(&[usize])) {
    if at == classes.len() {
        out(perm);
        return;
    }
    let class = &classes[at];
    let mut order = class.clone();
    heap_permute(&mut order, class.len(), &mut |o| {
        for (k, &v) in o.iter().enumerate() {
            perm[v] = next + k;
        }
        permutations_within(classes, at + 1, perm, next + class.len(), out);
    });
}

fn heap_permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(items, k - 1, f);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permute(items, k - 1, f);
}

/// Smallest relabelling among those that order vertices by degree.
fn canonical(v: usize, edges: &Edges) -> Edges {
    let mut deg = vec![0usize; v];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    let mut degrees: Vec<usize> = deg.clone();
    degrees.sort_unstable();
    degrees.dedup();
    let classes: Vec<Vec<usize>> = degrees.iter().map(|d| (0..v).filter(|&x| deg[x] == *d).collect()).collect();
    let mut best: Option<Edges> = None;
    let mut perm = vec![0; v];
    permutations_within(&classes, 0, &mut perm, 0, &mut |p| {
        let e = relabel(edges, p);
        if best.as_ref().map_or(true, |b| e < *b) {
            best = Some(e);
        }
    });
    best.unwrap()
}

/// Every connected graph with between 1 and `max_edges` edges, up to
/// isomorphism, as a 1-dimensional complex on `1..=v`.
pub fn connected_graphs(max_edges: usize) -> Vec<SimplicialComplex> {
    let mut seen: HashSet<(usize, Edges)> = HashSet::new();
    let mut layer = vec![(2usize, vec![(0usize, 1usize)])];
    seen.insert(layer[0].clone());
    let mut all = layer.clone();
    for _ in 1..max_edges {
        let mut next = Vec::new();
        for (v, edges) in &layer {
            let mut children = Vec::new();
            for a in 0..*v {
                for b in a + 1..*v {
                    if !edges.contains(&(a, b)) {
                        let mut e = edges.clone();
                        e.push((a, b));
                        children.push((*v, e));
                    }
                }
                let mut e = edges.clone();
                e.push((a, *v));
                children.push((*v + 1, e));
            }
            for (cv, ce) in children {
                let key = (cv, canonical(cv, &ce));
                if seen.insert(key.clone()) {
                    next.push(key);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter()
        .map(|(_, edges)| {
            SimplicialComplex::from_facets(edges.iter().map(|&(a, b)| vec![a as u32 + 1, b as u32 + 1])).unwrap()
        })
        .collect()
}

/// Pseudomanifolds without boundary beyond the bundled fixtures.
pub fn extra_closed_pseudomanifolds() -> Vec<(&'static str, SimplicialComplex)> {
    let tetra = SimplicialComplex::from_facets([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
    let rp2 = SimplicialComplex::from_facets([
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
    ])
    .unwrap();
    let c5 = SimplicialComplex::from_facets([[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]).unwrap();
    let c6 = SimplicialComplex::from_facets([[1, 2], [2, 3], [3, 4], [4, 5], [5, 6], [1, 6]]).unwrap();
    vec![("tetrahedron boundary", tetra), ("projective plane", rp2), ("C5", c5), ("C6", c6)]
}
