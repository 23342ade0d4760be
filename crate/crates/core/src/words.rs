//! Graph products of cyclic groups and their word problem.
//!
//! An element is stored as a sequence of syllables `a_v^e`. Reduction first
//! piles syllables (merging each incoming syllable into the nearest
//! same-vertex syllable it can reach through commuting syllables), which
//! yields a reduced word; two reduced words of the same element differ only
//! by commutations, so the lexicographically least linearization of the
//! syllable dependency order is a canonical form.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::complexes::{Graph, SimplicialComplex};
use crate::error::{Error, Result};

/// Default element budget for ball enumeration.
pub const DEFAULT_BALL_BUDGET: usize = 2_000_000;

/// Order of a vertex group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Infinite,
    Finite(u32),
}

impl Order {
    pub fn finite(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder(n as u64));
        }
        Ok(Order::Finite(n))
    }

    /// Canonical exponent: `1..n` for finite orders, unchanged otherwise.
    #[inline]
    fn normalize(self, e: i64) -> i64 {
        match self {
            Order::Infinite => e,
            Order::Finite(n) => e.rem_euclid(n as i64),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Infinite => write!(f, "inf"),
            Order::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// A graph product of cyclic groups over a simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    complex: SimplicialComplex,
    graph: Graph,
    orders: Vec<Order>,
}

impl GroupSpec {
    pub fn new(complex: SimplicialComplex, orders: Vec<Order>) -> Result<Arc<Self>> {
        if orders.len() != complex.vertex_count() {
            return Err(Error::OrderCountMismatch {
                expected: complex.vertex_count(),
                got: orders.len(),
            });
        }
        let graph = complex.one_skeleton();
        Ok(Arc::new(Self { complex, graph, orders }))
    }

    /// Right-angled Coxeter group: every generator is an involution.
    pub fn coxeter(complex: SimplicialComplex) -> Arc<Self> {
        let m = complex.vertex_count();
        Self::new(complex, vec![Order::Finite(2); m]).expect("orders match")
    }

    /// Right-angled Artin group.
    pub fn artin(complex: SimplicialComplex) -> Arc<Self> {
        let m = complex.vertex_count();
        Self::new(complex, vec![Order::Infinite; m]).expect("orders match")
    }

    /// Graph product of copies of Z/n.
    pub fn uniform(complex: SimplicialComplex, n: u32) -> Result<Arc<Self>> {
        let m = complex.vertex_count();
        Self::new(complex, vec![Order::finite(n)?; m])
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn orders(&self) -> &[Order] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// The common order when every vertex group is Z/n for one `n`.
    pub fn uniform_order(&self) -> Option<u32> {
        match self.orders.first()? {
            Order::Finite(n) if self.orders.iter().all(|o| *o == Order::Finite(*n)) => Some(*n),
            _ => None,
        }
    }

    #[inline]
    fn commute(&self, v: usize, w: usize) -> bool {
        self.graph.has_edge(v, w)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.rank() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.rank(),
            });
        }
        Ok(())
    }

    /// Length of a syllable in the word metric on `{a_i^{±1}}`.
    fn syllable_length(&self, s: Syllable) -> u64 {
        match self.orders[s.vertex - 1] {
            Order::Infinite => s.exponent.unsigned_abs(),
            Order::Finite(n) => {
                let e = s.exponent as u64;
                e.min(n as u64 - e)
            }
        }
    }

    /// Piles `letters` onto `stack`, keeping it reduced.
    fn pile(&self, stack: &mut Vec<Syllable>, letters: impl IntoIterator<Item = Syllable>) {
        for s in letters {
            let order = self.orders[s.vertex - 1];
            let e = order.normalize(s.exponent);
            if e == 0 {
                continue;
            }
            let mut merged = false;
            for idx in (0..stack.len()).rev() {
                let t = stack[idx];
                if t.vertex == s.vertex {
                    let sum = order.normalize(t.exponent + e);
                    if sum == 0 {
                        stack.remove(idx);
                    } else {
                        stack[idx].exponent = sum;
                    }
                    merged = true;
                    break;
                }
                if !self.commute(t.vertex, s.vertex) {
                    break;
                }
            }
            if !merged {
                stack.push(Syllable {
                    vertex: s.vertex,
                    exponent: e,
                });
            }
        }
    }

    /// Lexicographically least linearization of a reduced word.
    fn canonical_order(&self, word: Vec<Syllable>) -> Vec<Syllable> {
        let mut rest = word;
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut seen: u32 = 0;
            let mut best: Option<usize> = None;
            for (idx, s) in rest.iter().enumerate() {
                let vbit = 1u32 << (s.vertex - 1);
                let free = seen & !self.graph.neighbours(s.vertex) == 0 && seen & vbit == 0;
                if free && best.is_none_or(|b| s.vertex < rest[b].vertex) {
                    best = Some(idx);
                }
                seen |= vbit;
            }
            let idx = best.expect("the first syllable is always movable");
            out.push(rest.remove(idx));
        }
        out
    }

    fn reduce(&self, letters: impl IntoIterator<Item = Syllable>) -> Vec<Syllable> {
        let mut stack = Vec::new();
        self.pile(&mut stack, letters);
        self.canonical_order(stack)
    }
}

/// One syllable `a_vertex^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub vertex: usize,
    pub exponent: i64,
}

/// An element of a graph product in canonical normal form.
#[derive(Clone)]
pub struct GroupElement {
    spec: Arc<GroupSpec>,
    syllables: Vec<Syllable>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.syllables == other.syllables && (Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec)
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.syllables.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    /// Short-lex on syllable sequences.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.syllables
            .len()
            .cmp(&other.syllables.len())
            .then_with(|| self.syllables.cmp(&other.syllables))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({self})")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "e");
        }
        for (idx, s) in self.syllables.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            if s.exponent == 1 {
                write!(f, "a{}", s.vertex)?;
            } else {
                write!(f, "a{}^{}", s.vertex, s.exponent)?;
            }
        }
        Ok(())
    }
}

impl GroupElement {
    pub fn identity(spec: &Arc<GroupSpec>) -> Self {
        Self {
            spec: Arc::clone(spec),
            syllables: Vec::new(),
        }
    }

    pub fn generator(spec: &Arc<GroupSpec>, i: usize) -> Result<Self> {
        spec.check_vertex(i)?;
        Ok(Self {
            spec: Arc::clone(spec),
            syllables: vec![Syllable { vertex: i, exponent: 1 }],
        })
    }

    /// Canonical representative of a raw word of `(vertex, exponent)` pairs.
    pub fn normal_form(spec: &Arc<GroupSpec>, raw: &[(usize, i64)]) -> Result<Self> {
        for &(v, _) in raw {
            spec.check_vertex(v)?;
        }
        let syllables = spec.reduce(raw.iter().map(|&(vertex, exponent)| Syllable { vertex, exponent }));
        Ok(Self {
            spec: Arc::clone(spec),
            syllables,
        })
    }

    /// Parses `a1 a2^-1 a1`-style words.
    pub fn parse(spec: &Arc<GroupSpec>, text: &str) -> Result<Self> {
        Self::normal_form(spec, &parse_word(text)?)
    }

    pub fn spec(&self) -> &Arc<GroupSpec> {
        &self.spec
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Length in the word metric on the generators and their inverses.
    pub fn word_length(&self) -> u64 {
        self.syllables.iter().map(|&s| self.spec.syllable_length(s)).sum()
    }

    fn same_spec(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut stack = self.syllables.clone();
        self.spec.pile(&mut stack, other.syllables.iter().copied());
        Self {
            spec: Arc::clone(&self.spec),
            syllables: self.spec.canonical_order(stack),
        }
    }

    pub fn inverse(&self) -> Self {
        let letters = self.syllables.iter().rev().map(|s| Syllable {
            vertex: s.vertex,
            exponent: -s.exponent,
        });
        Self {
            spec: Arc::clone(&self.spec),
            syllables: self.spec.reduce(letters),
        }
    }

    /// `g^-1 h^-1 g h`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        Ok(self
            .inverse()
            .mul_unchecked(&other.inverse())
            .mul_unchecked(self)
            .mul_unchecked(other))
    }

    /// Exponent sums per vertex, reduced modulo the vertex order when finite.
    pub fn abelianization(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.spec.rank()];
        for s in &self.syllables {
            out[s.vertex - 1] += s.exponent;
        }
        for (x, order) in out.iter_mut().zip(&self.spec.orders) {
            *x = order.normalize(*x);
        }
        out
    }

    pub fn is_in_commutator_subgroup(&self) -> bool {
        self.abelianization().iter().all(|&x| x == 0)
    }
}

/// Parses whitespace separated tokens `a<i>` or `a<i>^<e>`.
pub fn parse_word(text: &str) -> Result<Vec<(usize, i64)>> {
    text.split_whitespace()
        .map(|tok| {
            let body = tok
                .strip_prefix('a')
                .ok_or_else(|| Error::WordParse(format!("token {tok:?} must start with 'a'")))?;
            let (v, e) = match body.split_once('^') {
                Some((v, e)) => (v, e),
                None => (body, "1"),
            };
            let v: usize = v
                .parse()
                .map_err(|_| Error::WordParse(format!("bad vertex in {tok:?}")))?;
            let e: i64 = e
                .parse()
                .map_err(|_| Error::WordParse(format!("bad exponent in {tok:?}")))?;
            Ok((v, e))
        })
        .collect()
}

/// All elements of word length at most `radius`, in breadth-first order.
pub fn enumerate_ball(spec: &Arc<GroupSpec>, radius: usize, budget: usize) -> Result<Vec<GroupElement>> {
    let mut seen: HashSet<Vec<Syllable>> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let id = GroupElement::identity(spec);
    seen.insert(Vec::new());
    queue.push_back((id, 0usize));
    let mut steps = Vec::new();
    for v in 1..=spec.rank() {
        steps.push(GroupElement::generator(spec, v)?);
        if spec.orders[v - 1] != Order::Finite(2) {
            steps.push(GroupElement::normal_form(spec, &[(v, -1)])?);
        }
    }
    while let Some((g, dist)) = queue.pop_front() {
        if dist < radius {
            for step in &steps {
                let h = g.mul_unchecked(step);
                if seen.insert(h.syllables.clone()) {
                    if seen.len() > budget {
                        return Err(Error::BudgetExceeded {
                            what: "ball enumeration",
                            needed: seen.len() as u128,
                            budget: budget as u128,
                        });
                    }
                    queue.push_back((h, dist + 1));
                }
            }
        }
        out.push(g);
    }
    Ok(out)
}
