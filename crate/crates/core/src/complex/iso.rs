//! Combinatorial isomorphism by invariant refinement and backtracking.
//!
//! Vertices are colored by (degree, link f-vector) and two rounds of
//! neighborhood refinement; the search maps vertices in a connected order
//! and checks adjacency and facet images as soon as they are determined.

use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use rustc_hash::{FxHashMap, FxHashSet, FxHasher};

use super::{Simplex, SimplicialComplex, Vertex};

/// A vertex bijection, source label to target label.
pub type Isomorphism = BTreeMap<Vertex, Vertex>;

struct Indexed {
    labels: Vec<Vertex>,
    adj: Vec<Vec<bool>>,
    neighbors: Vec<Vec<usize>>,
    colors: Vec<u64>,
    facets: Vec<Vec<usize>>,
}

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = FxHasher::default();
    t.hash(&mut h);
    h.finish()
}

fn index(c: &SimplicialComplex) -> Indexed {
    let labels = c.vertices();
    let pos: FxHashMap<Vertex, usize> = labels.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let n = labels.len();
    let mut adj = vec![vec![false; n]; n];
    let facets: Vec<Vec<usize>> =
        c.facets().iter().map(|f| f.vertices().iter().map(|v| pos[v]).collect()).collect();
    let mut degree = vec![0usize; n];
    for f in &facets {
        for &a in f {
            degree[a] += 1;
            for &b in f {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
    }
    let neighbors: Vec<Vec<usize>> =
        (0..n).map(|a| (0..n).filter(|&b| adj[a][b]).collect()).collect();
    let mut colors: Vec<u64> = labels
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let lk = c.vertex_link(v).map(|l| l.f_vector().0).unwrap_or_default();
            hash_of(&(degree[k], lk))
        })
        .collect();
    for _ in 0..2 {
        colors = (0..n)
            .map(|a| {
                let mut nb: Vec<u64> = neighbors[a].iter().map(|&b| colors[b]).collect();
                nb.sort_unstable();
                hash_of(&(colors[a], nb))
            })
            .collect();
    }
    Indexed { labels, adj, neighbors, colors, facets }
}

fn histogram(colors: &[u64]) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Calls `visit` for every isomorphism `a -> b` until it returns `false`.
pub fn for_each_isomorphism<F: FnMut(&Isomorphism) -> bool>(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    mut visit: F,
) {
    if a.dim() != b.dim() || a.num_facets() != b.num_facets() || a.f_vector() != b.f_vector() {
        return;
    }
    let ia = index(a);
    let ib = index(b);
    let ha = histogram(&ia.colors);
    if ha != histogram(&ib.colors) {
        return;
    }
    let n = ia.labels.len();

    // connected search order, rare colors first
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut links_to_placed = vec![0usize; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| (links_to_placed[u], std::cmp::Reverse(ha[&ia.colors[u]]), std::cmp::Reverse(u)))
            .unwrap();
        placed[next] = true;
        order.push(next);
        for &w in &ia.neighbors[next] {
            links_to_placed[w] += 1;
        }
    }
    let mut rank = vec![0usize; n];
    for (k, &u) in order.iter().enumerate() {
        rank[u] = k;
    }
    // facets checked when their last vertex (in search order) is mapped
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (fi, f) in ia.facets.iter().enumerate() {
        let last = *f.iter().max_by_key(|&&u| rank[u]).unwrap();
        checks[rank[last]].push(fi);
    }
    let anchor: Vec<Option<usize>> = order
        .iter()
        .map(|&u| ia.neighbors[u].iter().copied().filter(|&w| rank[w] < rank[u]).min_by_key(|&w| rank[w]))
        .collect();
    let bfacets: FxHashSet<Vec<usize>> = ib
        .facets
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect();

    struct Search<'a, F> {
        ia: &'a Indexed,
        ib: &'a Indexed,
        order: &'a [usize],
        checks: &'a [Vec<usize>],
        anchor: &'a [Option<usize>],
        bfacets: &'a FxHashSet<Vec<usize>>,
        img: Vec<usize>,
        used: Vec<bool>,
        visit: F,
        stop: bool,
    }

    impl<F: FnMut(&Isomorphism) -> bool> Search<'_, F> {
        fn run(&mut self, depth: usize) {
            if self.stop {
                return;
            }
            if depth == self.order.len() {
                let iso: Isomorphism = (0..self.img.len())
                    .map(|u| (self.ia.labels[u], self.ib.labels[self.img[u]]))
                    .collect();
                if !(self.visit)(&iso) {
                    self.stop = true;
                }
                return;
            }
            let u = self.order[depth];
            let candidates: Vec<usize> = match self.anchor[depth] {
                Some(w) => self.ib.neighbors[self.img[w]].clone(),
                None => (0..self.ib.labels.len()).collect(),
            };
            for x in candidates {
                if self.used[x] || self.ib.colors[x] != self.ia.colors[u] {
                    continue;
                }
                let ok = self.order[..depth]
                    .iter()
                    .all(|&w| self.ia.adj[u][w] == self.ib.adj[x][self.img[w]]);
                if !ok {
                    continue;
                }
                self.img[u] = x;
                let facets_ok = self.checks[depth].iter().all(|&fi| {
                    let mut im: Vec<usize> = self.ia.facets[fi].iter().map(|&v| self.img[v]).collect();
                    im.sort_unstable();
                    self.bfacets.contains(&im)
                });
                if facets_ok {
                    self.used[x] = true;
                    self.run(depth + 1);
                    self.used[x] = false;
                    if self.stop {
                        return;
                    }
                }
            }
            self.img[u] = usize::MAX;
        }
    }

    let mut s = Search {
        ia: &ia,
        ib: &ib,
        order: &order,
        checks: &checks,
        anchor: &anchor,
        bfacets: &bfacets,
        img: vec![usize::MAX; n],
        used: vec![false; n],
        visit: &mut visit,
        stop: false,
    };
    s.run(0);
}

/// A label bijection carrying the facets of `a` onto those of `b`, if any.
pub fn find_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Isomorphism> {
    let mut found = None;
    for_each_isomorphism(a, b, |iso| {
        found = Some(iso.clone());
        false
    });
    found
}

/// Number of combinatorial automorphisms.
pub fn automorphism_group_order(c: &SimplicialComplex) -> u64 {
    let mut count = 0u64;
    for_each_isomorphism(c, c, |_| {
        count += 1;
        true
    });
    count
}

/// Checks that `iso` maps the facets of `a` exactly onto the facets of `b`.
pub fn is_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex, iso: &Isomorphism) -> bool {
    if a.num_facets() != b.num_facets() {
        return false;
    }
    let images: Option<Vec<Simplex>> =
        a.facets().iter().map(|f| f.map(|v| iso.get(&v).copied().unwrap_or(0))).collect();
    match images {
        Some(mut im) => {
            im.sort_unstable();
            im.as_slice() == b.facets()
        }
        None => false,
    }
}
