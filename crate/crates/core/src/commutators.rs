//! Iterated commutators generating the commutator subgroup of a
//! right-angled Coxeter group, and the freeness criterion via chordality.

use std::fmt;
use std::sync::Arc;

use crate::complexes::{mask_to_vertices, SimplicialComplex};
use crate::error::{Error, Result};
use crate::words::{GroupElement, GroupSpec};

/// The commutator `(g_{k_1}, (g_{k_2}, ... (g_j, g_i)...))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CommutatorDescriptor {
    pub k_list: Vec<usize>,
    pub j: usize,
    pub i: usize,
}

impl CommutatorDescriptor {
    /// Number of generators involved.
    pub fn length(&self) -> usize {
        self.k_list.len() + 2
    }

    /// Vertex set `{k_1, ..., j, i}` as a mask.
    fn support_mask(&self) -> u32 {
        self.k_list
            .iter()
            .chain([&self.j, &self.i])
            .fold(0, |m, &v| m | 1 << (v - 1))
    }

    fn sort_key(&self) -> (usize, &[usize], usize, usize) {
        (self.length(), &self.k_list, self.j, self.i)
    }

    /// Re-checks the defining conditions against `k`.
    pub fn is_valid_for(&self, k: &SimplicialComplex) -> bool {
        let m = k.vertex_count();
        let in_range = |v: usize| v >= 1 && v <= m;
        if !in_range(self.j) || !in_range(self.i) || !self.k_list.iter().all(|&v| in_range(v)) {
            return false;
        }
        let increasing = self.k_list.windows(2).all(|w| w[0] < w[1]);
        let below_j = self.k_list.last().is_none_or(|&k| k < self.j);
        if !increasing || !below_j || self.i >= self.j || self.k_list.contains(&self.i) {
            return false;
        }
        let graph = k.one_skeleton();
        let comps = graph.components(self.support_mask());
        let comp = comps
            .into_iter()
            .find(|c| c & 1 << (self.i - 1) != 0)
            .expect("i lies in some component");
        comp & 1 << (self.j - 1) == 0 && comp.trailing_zeros() as usize + 1 == self.i
    }
}

impl fmt::Display for CommutatorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.k_list {
            write!(f, "(g{k},")?;
        }
        write!(f, "(g{},g{})", self.j, self.i)?;
        for _ in &self.k_list {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// All descriptors for `k`, ordered by `(length, k_list, j, i)`.
///
/// For a vertex set `J` with maximum `j`, every component of the full
/// subcomplex on `J` that misses `j` contributes one descriptor with `i` its
/// smallest vertex.
pub fn enumerate_generators(k: &SimplicialComplex) -> Vec<CommutatorDescriptor> {
    let m = k.vertex_count();
    let graph = k.one_skeleton();
    let mut out = Vec::new();
    for mask in 1u32..(1u64 << m) as u32 {
        if mask.count_ones() < 2 {
            continue;
        }
        let j = 32 - mask.leading_zeros() as usize;
        for comp in graph.components(mask) {
            if comp & 1 << (j - 1) != 0 {
                continue;
            }
            let i = comp.trailing_zeros() as usize + 1;
            let k_list = mask_to_vertices(mask & !(1 << (j - 1)) & !(1 << (i - 1)));
            out.push(CommutatorDescriptor { k_list, j, i });
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// `sum over J of rank H~_0(K_J)`.
pub fn homology_count(k: &SimplicialComplex) -> usize {
    (0u32..(1u64 << k.vertex_count()) as u32)
        .map(|mask| k.reduced_h0_rank_mask(mask))
        .sum()
}

/// The nested commutator of `d` in the group `spec`, built right to left.
pub fn realize_generator(spec: &Arc<GroupSpec>, d: &CommutatorDescriptor) -> Result<GroupElement> {
    if !d.is_valid_for(spec.complex()) {
        return Err(Error::SpecMismatch);
    }
    let g = |v| GroupElement::generator(spec, v);
    let mut c = g(d.j)?.commutator(&g(d.i)?)?;
    for &k in d.k_list.iter().rev() {
        c = g(k)?.commutator(&c)?;
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorReport {
    pub descriptors: Vec<CommutatorDescriptor>,
    pub count: usize,
    pub homology_sum: usize,
    pub chordal: bool,
    /// Whether the commutator subgroup is free.
    pub free_verdict: bool,
    /// The same verdict for the commutator subalgebra; only given for flag complexes.
    pub algebra_free_verdict: Option<bool>,
}

impl GeneratorReport {
    pub fn counts_agree(&self) -> bool {
        self.count == self.homology_sum && self.count == self.descriptors.len()
    }
}

pub fn freeness_report(k: &SimplicialComplex) -> GeneratorReport {
    let descriptors = enumerate_generators(k);
    let chordal = k.one_skeleton().is_chordal();
    GeneratorReport {
        count: descriptors.len(),
        homology_sum: homology_count(k),
        descriptors,
        chordal,
        free_verdict: chordal,
        algebra_free_verdict: k.is_flag().then_some(chordal),
    }
}
