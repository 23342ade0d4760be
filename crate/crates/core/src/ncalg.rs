//! Graded quotients of free associative algebras over GF(p) by power and
//! (anti)commutation relations, i.e. graph products of one-generator algebras.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complexes::{Graph, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{normalize_sparse, SparseEchelon};
use crate::series::IntegerPowerSeries;

/// Default budget on the number of words of one degree.
pub const DEFAULT_WORD_BUDGET: usize = 300_000;

/// Monomial of the free associative algebra; letters are generator indices `1..=m`.
pub type NCWord = Vec<usize>;

/// Finite GF(p)-linear combination of words in `m` letters.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPolynomial {
    m: usize,
    field: PrimeField,
    terms: BTreeMap<NCWord, u32>,
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPolynomial({self})")
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (word, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 || word.is_empty() {
                write!(f, "{c}")?;
            }
            for l in word {
                write!(f, "u{l}")?;
            }
        }
        Ok(())
    }
}

impl NCPolynomial {
    pub fn zero(m: usize, field: PrimeField) -> Self {
        Self {
            m,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, field: PrimeField) -> Self {
        Self::monomial(m, field, Vec::new(), 1)
    }

    /// `coeff * word`; panics if a letter is outside `1..=m`.
    pub fn monomial(m: usize, field: PrimeField, word: NCWord, coeff: i64) -> Self {
        assert!(word.iter().all(|&l| l >= 1 && l <= m), "letter out of range");
        let mut p = Self::zero(m, field);
        let c = field.reduce(coeff);
        if c != 0 {
            p.terms.insert(word, c);
        }
        p
    }

    pub fn generator(m: usize, field: PrimeField, i: usize) -> Self {
        Self::monomial(m, field, vec![i], 1)
    }

    pub fn from_terms(m: usize, field: PrimeField, terms: impl IntoIterator<Item = (NCWord, i64)>) -> Self {
        let mut p = Self::zero(m, field);
        for (w, c) in terms {
            p.add_term(w, field.reduce(c));
        }
        p
    }

    fn add_term(&mut self, word: NCWord, c: u32) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Occupied(mut e) => {
                let v = self.field.add(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn generator_count(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<NCWord, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree when every term has the same length.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Vec::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.field != other.field {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = self.field.reduce(k);
        let mut out = Self::zero(self.m, self.field);
        if k != 0 {
            for (w, &c) in &self.terms {
                out.terms.insert(w.clone(), self.field.mul(c, k));
            }
        }
        out
    }

    /// Product in the free algebra (no relations applied).
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(self.m, self.field);
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.m, self.field);
        for _ in 0..e {
            acc = acc.multiply(self).expect("same algebra");
        }
        acc
    }

    /// `xy - yx`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }
}

/// Which one-generator algebra sits at each vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// Polynomial algebra, commuting on edges.
    Poly,
    /// Exterior algebra `u^2 = 0`, anticommuting on edges.
    Ext,
    /// Truncated polynomial algebra `u^p = 0`, commuting on edges.
    Trunc,
}

impl AlgebraKind {
    /// Hilbert series of the vertex algebra.
    pub fn vertex_series(self, p: u32, degree: usize) -> IntegerPowerSeries {
        match self {
            AlgebraKind::Poly => IntegerPowerSeries::from_coeffs(degree, &vec![1; degree + 1]),
            AlgebraKind::Ext => IntegerPowerSeries::from_coeffs(degree, &[1, 1]),
            AlgebraKind::Trunc => IntegerPowerSeries::from_coeffs(degree, &vec![1; p as usize]),
        }
    }
}

impl std::str::FromStr for AlgebraKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "poly" => Ok(AlgebraKind::Poly),
            "ext" => Ok(AlgebraKind::Ext),
            "trunc" => Ok(AlgebraKind::Trunc),
            other => Err(format!("unknown algebra kind {other:?} (expected poly, ext or trunc)")),
        }
    }
}

/// Relation attached to each edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeSign {
    /// `u_i u_j - u_j u_i`
    Commute,
    /// `u_i u_j + u_j u_i`
    Anticommute,
}

/// Generators `u_1..u_m` over GF(p) with optional `u_i^{e_i} = 0` and one
/// (anti)commutation relation per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    m: usize,
    field: PrimeField,
    powers: Vec<Option<u32>>,
    edges: BTreeSet<(usize, usize)>,
    edge_sign: EdgeSign,
    kind: Option<AlgebraKind>,
}

impl AlgebraPresentation {
    /// A hand-written presentation; only the brute-force path accepts these.
    pub fn new(
        m: usize,
        p: u64,
        powers: Vec<Option<u32>>,
        edges: &[(usize, usize)],
        edge_sign: EdgeSign,
    ) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if powers.len() != m {
            return Err(Error::OrderCountMismatch {
                expected: m,
                got: powers.len(),
            });
        }
        if let Some(&bad) = powers.iter().flatten().find(|&&e| e < 2) {
            return Err(Error::InvalidOrder(bad as u64));
        }
        let mut set = BTreeSet::new();
        for &(i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, count: m });
                }
            }
            if i != j {
                set.insert((i.min(j), i.max(j)));
            }
        }
        Ok(Self {
            m,
            field,
            powers,
            edges: set,
            edge_sign,
            kind: None,
        })
    }

    /// The graph-product presentation of `kind` over the one-skeleton of `k`.
    pub fn from_complex(k: &SimplicialComplex, kind: AlgebraKind, p: u64) -> Result<Self> {
        let m = k.vertex_count();
        let field = PrimeField::new(p)?;
        let (power, edge_sign) = match kind {
            AlgebraKind::Poly => (None, EdgeSign::Commute),
            AlgebraKind::Ext => (Some(2), EdgeSign::Anticommute),
            AlgebraKind::Trunc => (Some(field.characteristic()), EdgeSign::Commute),
        };
        let edges = k.one_skeleton().edges().into_iter().collect();
        Ok(Self {
            m,
            field,
            powers: vec![power; m],
            edges,
            edge_sign,
            kind: Some(kind),
        })
    }

    pub fn generator_count(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn powers(&self) -> &[Option<u32>] {
        &self.powers
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn edge_sign(&self) -> EdgeSign {
        self.edge_sign
    }

    pub fn kind(&self) -> Option<AlgebraKind> {
        self.kind
    }

    /// The defining relations as polynomials of the free algebra.
    pub fn relations(&self) -> Vec<NCPolynomial> {
        let mut rels = Vec::new();
        for (idx, e) in self.powers.iter().enumerate() {
            if let Some(e) = e {
                rels.push(NCPolynomial::monomial(
                    self.m,
                    self.field,
                    vec![idx + 1; *e as usize],
                    1,
                ));
            }
        }
        let sign = match self.edge_sign {
            EdgeSign::Commute => -1,
            EdgeSign::Anticommute => 1,
        };
        for &(i, j) in &self.edges {
            rels.push(NCPolynomial::from_terms(
                self.m,
                self.field,
                [(vec![i, j], 1), (vec![j, i], sign)],
            ));
        }
        rels
    }

    /// Dimension of the degree-`n` component: `m^n` minus the rank of the
    /// span of all `w1 * r * w2` of degree `n`.
    pub fn graded_dim_bruteforce(&self, n: usize, budget: usize) -> Result<u128> {
        let m = self.m as u128;
        let words = m
            .checked_pow(n as u32)
            .filter(|&w| w <= budget as u128)
            .ok_or(Error::BudgetExceeded {
                what: "degree component words",
                needed: m.saturating_pow(n as u32),
                budget: budget as u128,
            })?;
        if words == 0 {
            return Ok(u128::from(n == 0));
        }
        let m = self.m;
        let mpow: Vec<usize> = (0..=n).map(|k| m.pow(k as u32)).collect();
        let mut echelon = SparseEchelon::new(self.field);
        for rel in self.relations() {
            let Some(d) = rel.homogeneous_degree() else { continue };
            if d > n {
                continue;
            }
            let encoded: Vec<(usize, u32)> = rel
                .terms()
                .iter()
                .map(|(w, &c)| (w.iter().fold(0usize, |acc, &l| acc * m + (l - 1)), c))
                .collect();
            for left in 0..=n - d {
                let right = n - d - left;
                for pre in 0..mpow[left] {
                    for suf in 0..mpow[right] {
                        let row: Vec<(usize, u32)> = encoded
                            .iter()
                            .map(|&(mid, c)| ((pre * mpow[d] + mid) * mpow[right] + suf, c))
                            .collect();
                        echelon.insert(normalize_sparse(&self.field, row));
                    }
                }
            }
        }
        Ok(words - echelon.rank() as u128)
    }

    /// Hilbert series from the clique formula
    /// `1/H = sum over cliques I of prod_{i in I} (1/H_i - 1)`.
    pub fn hilbert_series_formula(&self, degree: usize) -> Result<IntegerPowerSeries> {
        let kind = self.kind.ok_or(Error::NotAGraphProduct)?;
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        let graph = Graph::new(self.m, &edges)?;
        let vertex = kind.vertex_series(self.field.characteristic(), degree);
        graph_product_series(&graph, &vec![vertex; self.m])
    }
}

/// Hilbert series of the graph product over `graph` of connected graded
/// algebras with the given Hilbert series.
pub fn graph_product_series(graph: &Graph, vertex_series: &[IntegerPowerSeries]) -> Result<IntegerPowerSeries> {
    assert_eq!(graph.vertex_count(), vertex_series.len());
    let degree = vertex_series.iter().map(IntegerPowerSeries::degree).min().unwrap_or(0);
    let one = IntegerPowerSeries::one(degree);
    let reduced: Vec<IntegerPowerSeries> = vertex_series
        .iter()
        .map(|h| h.inverse()?.checked_sub(&one))
        .collect::<Result<_>>()?;
    let mut inv = IntegerPowerSeries::zero(degree);
    for clique in graph.cliques() {
        let mut term = one.clone();
        for v in crate::complexes::mask_to_vertices(clique) {
            term = term.checked_mul(&reduced[v - 1])?;
        }
        inv = inv.checked_add(&term)?;
    }
    let series = inv.inverse()?;
    series.check_nonnegative()?;
    Ok(series)
}
