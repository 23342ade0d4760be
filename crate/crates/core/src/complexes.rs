//! Finite simplicial complexes and their one-skeleta.
//!
//! Vertices are numbered `1..=m` in the public API. Internally a face is a
//! bitmask with bit `v - 1` set for vertex `v`, and every face is stored
//! explicitly, which keeps closure and restriction queries trivial for the
//! small complexes this crate targets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 20;

#[inline]
fn bit(v: usize) -> u32 {
    1 << (v - 1)
}

/// Sorted 1-based vertex list of a mask.
pub fn mask_to_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

fn vertices_to_mask(m: usize, vs: &[usize]) -> Result<u32> {
    let mut mask = 0;
    for &v in vs {
        if v == 0 || v > m {
            return Err(Error::VertexOutOfRange { vertex: v, count: m });
        }
        mask |= bit(v);
    }
    Ok(mask)
}

fn check_vertex_count(m: usize) -> Result<()> {
    if m > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: m,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Iterates over all submasks of `mask`, including 0 and `mask`.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Lexicographic order on sorted vertex lists.
fn lex_cmp(a: &u32, b: &u32) -> std::cmp::Ordering {
    mask_to_vertices(*a).cmp(&mask_to_vertices(*b))
}

/// A simple graph on vertices `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    m: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_vertex_count(m)?;
        let mut g = Self { m, adj: vec![0; m] };
        for &(i, j) in edges {
            vertices_to_mask(m, &[i, j])?;
            if i != j {
                g.adj[i - 1] |= bit(j);
                g.adj[j - 1] |= bit(i);
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i >= 1 && i <= self.m && self.adj[i - 1] & bit(j) != 0
    }

    /// Neighbourhood of `v` as a mask.
    pub fn neighbours(&self, v: usize) -> u32 {
        self.adj[v - 1]
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.m {
            for j in i + 1..=self.m {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All cliques (vertex masks of complete subgraphs), including the empty one.
    pub fn cliques(&self) -> Vec<u32> {
        let mut out = vec![0u32];
        let full = if self.m == 0 { 0 } else { u32::MAX >> (32 - self.m) };
        self.extend_cliques(0, full, &mut out);
        out.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then_with(|| lex_cmp(a, b)));
        out
    }

    fn extend_cliques(&self, clique: u32, candidates: u32, out: &mut Vec<u32>) {
        let mut cand = candidates;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize + 1;
            cand &= cand - 1;
            let next = clique | bit(v);
            out.push(next);
            // only extend by larger vertices so each clique is produced once
            self.extend_cliques(next, cand & self.adj[v - 1], out);
        }
    }

    /// Number of connected components of the induced subgraph on `mask`.
    pub fn component_count(&self, mask: u32) -> usize {
        self.components(mask).len()
    }

    /// Connected components of the induced subgraph on `mask`, as masks.
    pub fn components(&self, mask: u32) -> Vec<u32> {
        let mut left = mask;
        let mut comps = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let mut grow = comp;
                let mut c = comp;
                while c != 0 {
                    let v = c.trailing_zeros() as usize + 1;
                    c &= c - 1;
                    grow |= self.adj[v - 1] & mask;
                }
                if grow == comp {
                    break;
                }
                comp = grow;
            }
            comps.push(comp);
            left &= !comp;
        }
        comps
    }

    /// Lexicographic breadth-first search order (first visited first).
    pub fn lex_bfs(&self) -> Vec<usize> {
        let mut labels: Vec<Vec<usize>> = vec![Vec::new(); self.m];
        let mut visited = vec![false; self.m];
        let mut order = Vec::with_capacity(self.m);
        for step in 0..self.m {
            let v = (0..self.m)
                .filter(|&v| !visited[v])
                .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
                .expect("an unvisited vertex remains");
            visited[v] = true;
            order.push(v + 1);
            let stamp = self.m - step;
            for w in 0..self.m {
                if !visited[w] && self.adj[v] & (1 << w) != 0 {
                    labels[w].push(stamp);
                }
            }
        }
        order
    }

    /// Chordality via a perfect elimination ordering: the reverse of a
    /// Lex-BFS order is one exactly when the graph is chordal.
    pub fn is_chordal(&self) -> bool {
        let order = self.lex_bfs();
        let mut position = vec![0usize; self.m];
        for (idx, &v) in order.iter().enumerate() {
            position[v - 1] = idx;
        }
        for &v in &order {
            // neighbours visited before v; they come after v in the elimination order
            let earlier: Vec<usize> = mask_to_vertices(self.adj[v - 1])
                .into_iter()
                .filter(|&w| position[w - 1] < position[v - 1])
                .collect();
            let Some(&parent) = earlier.iter().max_by_key(|&&w| position[w - 1]) else {
                continue;
            };
            let parent_closed = self.adj[parent - 1] | bit(parent);
            if earlier.iter().any(|&w| parent_closed & bit(w) == 0) {
                return false;
            }
        }
        true
    }
}

/// A simplicial complex on `1..=m` that contains every vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    faces: BTreeSet<u32>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("m", &self.m)
            .field("facets", &self.facets())
            .finish()
    }
}

impl SimplicialComplex {
    /// Downward closure of `facets` together with all vertices and the empty face.
    pub fn from_facets(m: usize, facets: &[Vec<usize>]) -> Result<Self> {
        check_vertex_count(m)?;
        let masks = facets
            .iter()
            .map(|f| vertices_to_mask(m, f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_facet_masks(m, masks))
    }

    fn from_facet_masks(m: usize, masks: impl IntoIterator<Item = u32>) -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(0);
        for v in 1..=m {
            faces.insert(bit(v));
        }
        for mask in masks {
            if faces.contains(&mask) {
                continue;
            }
            faces.extend(submasks(mask));
        }
        Self { m, faces }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        let all: Vec<usize> = (1..=n).collect();
        Self::from_facets(n, &[all]).expect("simplex is valid")
    }

    /// `n` disjoint points.
    pub fn points(n: usize) -> Self {
        Self::from_facets(n, &[]).expect("points are valid")
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<Vec<usize>> = (1..n).map(|i| vec![i, i + 1]).collect();
        Self::from_facets(n, &edges).expect("path is valid")
    }

    /// Cycle `1 - 2 - ... - n - 1` without higher faces.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<Vec<usize>> = (1..n).map(|i| vec![i, i + 1]).collect();
        edges.push(vec![1, n]);
        Self::from_facets(n, &edges).expect("cycle is valid")
    }

    /// Boundary of the `(n-1)`-simplex: all proper subsets of `{1..n}`.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets: Vec<Vec<usize>> = (1..=n).map(|skip| (1..=n).filter(|&v| v != skip).collect()).collect();
        Self::from_facets(n, &facets).expect("boundary is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn contains_mask(&self, mask: u32) -> bool {
        self.faces.contains(&mask)
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        vertices_to_mask(self.m, face)
            .map(|mask| self.contains_mask(mask))
            .unwrap_or(false)
    }

    /// All faces as masks, including the empty face.
    pub fn face_masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.faces.iter().copied()
    }

    /// All faces as sorted vertex lists, ordered by size then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut masks: Vec<u32> = self.faces.iter().copied().collect();
        masks.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then_with(|| lex_cmp(a, b)));
        masks.into_iter().map(mask_to_vertices).collect()
    }

    /// Number of faces of each dimension `-1, 0, 1, ...` (index 0 is the empty face).
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
        let mut counts = vec![0; top + 1];
        for f in &self.faces {
            counts[f.count_ones() as usize] += 1;
        }
        counts
    }

    /// Maximal faces, sorted lexicographically.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut masks: Vec<u32> = self
            .faces
            .iter()
            .copied()
            .filter(|&f| (1..=self.m).all(|v| f & bit(v) != 0 || !self.faces.contains(&(f | bit(v)))))
            .collect();
        masks.sort_by(lex_cmp);
        masks.into_iter().map(mask_to_vertices).collect()
    }

    pub fn one_skeleton(&self) -> Graph {
        let mut adj = vec![0u32; self.m];
        for &f in &self.faces {
            if f.count_ones() == 2 {
                let i = f.trailing_zeros() as usize;
                let j = 31 - f.leading_zeros() as usize;
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Graph { m: self.m, adj }
    }

    /// The flag complex whose faces are the cliques of `g`.
    pub fn clique_complex(g: &Graph) -> Self {
        Self {
            m: g.m,
            faces: g.cliques().into_iter().collect(),
        }
    }

    /// Minimal non-faces, each sorted, the list sorted lexicographically.
    pub fn missing_faces(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<u32> = Vec::new();
        let total: u64 = 1u64 << self.m;
        for mask in 0..total {
            let mask = mask as u32;
            if self.faces.contains(&mask) {
                continue;
            }
            let mut rest = mask;
            let mut minimal = true;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !self.faces.contains(&(mask & !low)) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(mask);
            }
        }
        out.sort_by(lex_cmp);
        out.into_iter().map(mask_to_vertices).collect()
    }

    pub fn is_flag(&self) -> bool {
        self.missing_faces().iter().all(|f| f.len() == 2)
    }

    /// Full subcomplex on the vertex set `j`, re-indexed to `1..=|j|` in increasing order.
    pub fn full_subcomplex(&self, j: &[usize]) -> Result<Self> {
        let mask = vertices_to_mask(self.m, j)?;
        let kept = mask_to_vertices(mask);
        let faces = self
            .faces
            .iter()
            .filter(|&&f| f & !mask == 0)
            .map(|&f| {
                kept.iter()
                    .enumerate()
                    .filter(|(_, &v)| f & bit(v) != 0)
                    .fold(0u32, |acc, (idx, _)| acc | 1 << idx)
            })
            .collect();
        Ok(Self { m: kept.len(), faces })
    }

    /// Rank of the reduced zeroth homology of the full subcomplex on `j`:
    /// components minus one, and 0 for the empty set.
    pub fn reduced_h0_rank(&self, j: &[usize]) -> Result<usize> {
        let mask = vertices_to_mask(self.m, j)?;
        Ok(self.reduced_h0_rank_mask(mask))
    }

    pub fn reduced_h0_rank_mask(&self, mask: u32) -> usize {
        if mask == 0 {
            return 0;
        }
        self.one_skeleton().component_count(mask) - 1
    }

    /// The substitution complex `K(K_1, ..., K_m)`. Block `i` occupies the
    /// vertices following those of blocks `1..i`.
    pub fn substitute(&self, parts: &[SimplicialComplex]) -> Result<Self> {
        if parts.len() != self.m {
            return Err(Error::PartCountMismatch {
                expected: self.m,
                got: parts.len(),
            });
        }
        let total: usize = parts.iter().map(|p| p.m).sum();
        check_vertex_count(total)?;
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for part in parts {
            offsets.push(acc);
            acc += part.m;
        }
        let part_facets: Vec<Vec<u32>> = parts
            .iter()
            .zip(&offsets)
            .map(|(part, &off)| {
                part.facets()
                    .iter()
                    .map(|f| f.iter().fold(0u32, |m, &v| m | 1 << (v - 1 + off)))
                    .collect()
            })
            .collect();
        let mut facets = Vec::new();
        for face in self.facets() {
            // one facet from each part indexed by the face, unioned
            let mut unions = vec![0u32];
            for &j in &face {
                unions = unions
                    .iter()
                    .flat_map(|&u| part_facets[j - 1].iter().map(move |&f| u | f))
                    .collect();
            }
            facets.extend(unions);
        }
        Ok(Self::from_facet_masks(total, facets))
    }
}
