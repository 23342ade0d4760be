//! Group algebras of graph products over GF(p) and the graded algebra of the
//! augmentation-ideal filtration, computed directly in group-element
//! coordinates.
//!
//! With `u_i = a_i - 1` and `V_k` the span of all products `u_{i_1}...u_{i_k}`,
//! the ideal power `I^n` is `V_n + V_{n+1} + ...`. Truncating at length `K`,
//! `D_n(K) = dim(V_n + ... + V_K) - dim(V_{n+1} + ... + V_K)` is nonincreasing
//! in `K` and converges to `dim I^n / I^{n+1}`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{normalize_sparse, DenseEchelon, SparseVec};
use crate::ncalg::{AlgebraKind, AlgebraPresentation, DEFAULT_WORD_BUDGET};
use crate::words::{GroupElement, GroupSpec, Syllable, DEFAULT_BALL_BUDGET};

/// Extra truncation length tried beyond the degree by default.
pub const DEFAULT_EXTRA_TRUNCATION: usize = 6;

/// Finite GF(p)-combination of group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    spec: Arc<GroupSpec>,
    field: PrimeField,
    terms: BTreeMap<GroupElement, u32>,
}

impl GroupAlgebraElement {
    pub fn zero(spec: &Arc<GroupSpec>, field: PrimeField) -> Self {
        Self {
            spec: Arc::clone(spec),
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_element(g: GroupElement, field: PrimeField) -> Self {
        let mut x = Self::zero(g.spec(), field);
        x.terms.insert(g, 1);
        x
    }

    pub fn one(spec: &Arc<GroupSpec>, field: PrimeField) -> Self {
        Self::from_element(GroupElement::identity(spec), field)
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, g: GroupElement, c: u32) {
        use std::collections::btree_map::Entry;
        if c == 0 {
            return;
        }
        match self.terms.entry(g) {
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

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field || (!Arc::ptr_eq(&self.spec, &other.spec) && self.spec != other.spec) {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (g, &c) in &other.terms {
            out.add_term(g.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = self.field.reduce(k);
        let mut out = Self::zero(&self.spec, self.field);
        if k != 0 {
            for (g, &c) in &self.terms {
                out.terms.insert(g.clone(), self.field.mul(c, k));
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(&self.spec, self.field);
        for (g, &a) in &self.terms {
            for (h, &b) in &other.terms {
                out.add_term(g.multiply(h)?, self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> u32 {
        self.terms.values().fold(0, |acc, &c| self.field.add(acc, c))
    }
}

fn uniform_prime(spec: &GroupSpec) -> Result<PrimeField> {
    let p = spec.uniform_order().ok_or(Error::NonUniformOrders)?;
    PrimeField::new(p as u64).map_err(|_| Error::NonUniformOrders)
}

/// `(a_{i_1} - 1) ... (a_{i_n} - 1)` in GF(p)[G], where every vertex group is Z/p.
pub fn generator_minus_one_product(spec: &Arc<GroupSpec>, indices: &[usize]) -> Result<GroupAlgebraElement> {
    let field = uniform_prime(spec)?;
    let mut acc = GroupAlgebraElement::one(spec, field);
    for &i in indices {
        let a = GroupAlgebraElement::from_element(GroupElement::generator(spec, i)?, field);
        let u = a.sub(&GroupAlgebraElement::one(spec, field))?;
        acc = acc.multiply(&u)?;
    }
    Ok(acc)
}

/// One degree of the filtration oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleDim {
    pub degree: usize,
    pub dim: u128,
    pub stabilized: bool,
    /// Truncation length at which the value was taken.
    pub truncation: usize,
    /// `(K, D_n(K))` for every truncation tried.
    pub history: Vec<(usize, u128)>,
    /// Whether `D_n(K)` never increased with `K`.
    pub monotone: bool,
}

/// Rows of the graded algebra of the augmentation filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub degrees: Vec<OracleDim>,
}

/// Computes `dim I^n / I^{n+1}` for GF(p)[G] from group-element coordinates.
pub struct AugmentationOracle {
    spec: Arc<GroupSpec>,
    field: PrimeField,
    ids: HashMap<Vec<Syllable>, usize>,
    elements: Vec<GroupElement>,
    /// `left[i][id]` is the id of `a_{i+1} * element(id)`.
    left: Vec<Vec<Option<usize>>>,
    /// Echelon bases of `V_0, V_1, ...`.
    layers: Vec<Vec<SparseVec>>,
    budget: usize,
}

impl AugmentationOracle {
    pub fn new(spec: &Arc<GroupSpec>) -> Result<Self> {
        Self::with_budget(spec, DEFAULT_BALL_BUDGET)
    }

    pub fn with_budget(spec: &Arc<GroupSpec>, budget: usize) -> Result<Self> {
        let field = uniform_prime(spec)?;
        let mut oracle = Self {
            spec: Arc::clone(spec),
            field,
            ids: HashMap::new(),
            elements: Vec::new(),
            left: vec![Vec::new(); spec.rank()],
            layers: Vec::new(),
            budget,
        };
        let e = oracle.id_of(GroupElement::identity(spec))?;
        oracle.layers.push(vec![vec![(e, 1)]]);
        Ok(oracle)
    }

    fn id_of(&mut self, g: GroupElement) -> Result<usize> {
        if let Some(&id) = self.ids.get(g.syllables()) {
            return Ok(id);
        }
        let id = self.elements.len();
        if id >= self.budget {
            return Err(Error::BudgetExceeded {
                what: "group elements in the filtration oracle",
                needed: id as u128 + 1,
                budget: self.budget as u128,
            });
        }
        self.ids.insert(g.syllables().to_vec(), id);
        self.elements.push(g);
        for row in &mut self.left {
            row.push(None);
        }
        Ok(id)
    }

    fn left_multiply(&mut self, i: usize, id: usize) -> Result<usize> {
        if let Some(target) = self.left[i][id] {
            return Ok(target);
        }
        let a = GroupElement::generator(&self.spec, i + 1)?;
        let product = a.multiply(&self.elements[id])?;
        let target = self.id_of(product)?;
        self.left[i][id] = Some(target);
        Ok(target)
    }

    /// Number of distinct group elements touched so far.
    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    fn ensure_layer(&mut self, k: usize) -> Result<()> {
        while self.layers.len() <= k {
            let prev = self.layers.last().expect("layer 0 exists").clone();
            let mut candidates = Vec::with_capacity(prev.len() * self.spec.rank());
            for i in 0..self.spec.rank() {
                for v in &prev {
                    // u_i * v = sum c_g (a_i g - g)
                    let mut row = Vec::with_capacity(2 * v.len());
                    for &(g, c) in v {
                        let ag = self.left_multiply(i, g)?;
                        row.push((ag, c));
                        row.push((g, self.field.neg(c)));
                    }
                    candidates.push(normalize_sparse(&self.field, row));
                }
            }
            let mut echelon = DenseEchelon::new(self.field, self.elements.len());
            for row in &candidates {
                echelon.insert_sparse(row);
            }
            self.layers.push(echelon.basis());
        }
        Ok(())
    }

    /// `dim V_k`.
    pub fn layer_dim(&mut self, k: usize) -> Result<usize> {
        self.ensure_layer(k)?;
        Ok(self.layers[k].len())
    }

    /// `D_n(K)` for every `0 <= n <= K`.
    pub fn truncated_dims(&mut self, truncation: usize) -> Result<Vec<u128>> {
        self.ensure_layer(truncation)?;
        let mut echelon = DenseEchelon::new(self.field, self.elements.len());
        let mut out = vec![0u128; truncation + 1];
        for k in (0..=truncation).rev() {
            let before = echelon.rank();
            for row in &self.layers[k] {
                echelon.insert_sparse(row);
            }
            out[k] = (echelon.rank() - before) as u128;
        }
        Ok(out)
    }

    /// Graded dimensions in degrees `1..=max_degree`. Degree `n` is tried at
    /// truncations `n+1, n+2, ...` and declared stable once three consecutive
    /// values agree; `n + extra` is the largest truncation tried.
    pub fn filtration(&mut self, max_degree: usize, extra: usize) -> Result<FiltrationReport> {
        let mut histories: Vec<Vec<(usize, u128)>> = vec![Vec::new(); max_degree + 1];
        let mut done = vec![false; max_degree + 1];
        done[0] = true;
        let top = max_degree + extra.max(1);
        for truncation in 2..=top {
            if done.iter().all(|&d| d) {
                break;
            }
            let dims = self.truncated_dims(truncation)?;
            for n in 1..=max_degree {
                if done[n] || truncation <= n || truncation > n + extra.max(1) {
                    continue;
                }
                histories[n].push((truncation, dims[n]));
                let h = &histories[n];
                if h.len() >= 3 && h[h.len() - 3..].iter().all(|&(_, d)| d == h[h.len() - 1].1) {
                    done[n] = true;
                }
            }
        }
        let degrees = (1..=max_degree)
            .map(|n| {
                let history = histories[n].clone();
                let &(truncation, dim) = history.last().expect("at least one truncation per degree");
                OracleDim {
                    degree: n,
                    dim,
                    stabilized: done[n],
                    truncation,
                    monotone: history.windows(2).all(|w| w[1].1 <= w[0].1),
                    history,
                }
            })
            .collect();
        Ok(FiltrationReport { degrees })
    }
}

/// `dim gr_n GF(p)[G]` by the truncation oracle, trying lengths up to `max_truncation`.
pub fn gr_dim_oracle(spec: &Arc<GroupSpec>, n: usize, max_truncation: usize) -> Result<OracleDim> {
    assert!(n >= 1, "the oracle reports degrees >= 1");
    let mut oracle = AugmentationOracle::new(spec)?;
    let extra = max_truncation.saturating_sub(n).max(1);
    let report = oracle.filtration(n, extra)?;
    Ok(report.degrees.into_iter().last().expect("degree n is reported"))
}

/// One row of the three-way comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuillenRow {
    pub degree: usize,
    pub oracle: u128,
    pub bruteforce: u128,
    pub formula: u128,
    pub stabilized: bool,
    pub truncation: usize,
    pub monotone: bool,
}

impl QuillenRow {
    pub fn agrees(&self) -> bool {
        self.stabilized && self.oracle == self.bruteforce && self.bruteforce == self.formula
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuillenReport {
    pub p: u64,
    pub rows: Vec<QuillenRow>,
}

impl QuillenReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(QuillenRow::agrees)
    }

    /// First disagreeing row, if any.
    pub fn failure(&self) -> Option<&QuillenRow> {
        self.rows.iter().find(|r| !r.agrees())
    }
}

/// Budgets for [`quillen_check`].
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    pub max_words: usize,
    pub max_ball: usize,
    pub extra_truncation: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            max_words: DEFAULT_WORD_BUDGET,
            max_ball: DEFAULT_BALL_BUDGET,
            extra_truncation: DEFAULT_EXTRA_TRUNCATION,
        }
    }
}

/// Compares, in degrees `1..=degree`, the augmentation oracle for GF(p)[(Z/p)^K],
/// brute-force dimensions of the truncated graph-product algebra, and the
/// clique formula.
pub fn quillen_check(k: &SimplicialComplex, p: u64, degree: usize, budgets: Budgets) -> Result<QuillenReport> {
    PrimeField::new(p)?;
    let spec = GroupSpec::uniform(k.clone(), p as u32)?;
    let presentation = AlgebraPresentation::from_complex(k, AlgebraKind::Trunc, p)?;
    let series = presentation.hilbert_series_formula(degree)?;
    let mut oracle = AugmentationOracle::with_budget(&spec, budgets.max_ball)?;
    let filtration = oracle.filtration(degree, budgets.extra_truncation)?;
    let rows = filtration
        .degrees
        .into_iter()
        .map(|row| {
            Ok(QuillenRow {
                degree: row.degree,
                oracle: row.dim,
                bruteforce: presentation.graded_dim_bruteforce(row.degree, budgets.max_words)?,
                formula: series.coeff(row.degree) as u128,
                stabilized: row.stabilized,
                truncation: row.truncation,
                monotone: row.monotone,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuillenReport { p, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn augmentation_values() {
        let spec = GroupSpec::coxeter(SimplicialComplex::points(2));
        let f = gf(2);
        assert_eq!(GroupAlgebraElement::one(&spec, f).augmentation(), 1);
        let u1 = generator_minus_one_product(&spec, &[1]).unwrap();
        assert_eq!(u1.augmentation(), 0);
        assert_eq!(generator_minus_one_product(&spec, &[1, 2]).unwrap().augmentation(), 0);
    }

    #[test]
    fn expansions() {
        let spec = GroupSpec::coxeter(SimplicialComplex::points(2));
        let u1 = generator_minus_one_product(&spec, &[1]).unwrap();
        assert_eq!(u1.terms().len(), 2);
        assert!(generator_minus_one_product(&spec, &[1, 1]).unwrap().is_zero());
        let u12 = generator_minus_one_product(&spec, &[1, 2]).unwrap();
        let names: Vec<String> = u12.terms().keys().map(|g| g.to_string()).collect();
        assert_eq!(names, ["e", "a1", "a2", "a1 a2"]);
        assert!(u12.terms().values().all(|&c| c == 1));
        let raag = GroupSpec::artin(SimplicialComplex::points(2));
        assert_eq!(generator_minus_one_product(&raag, &[1]), Err(Error::NonUniformOrders));
        let z4 = GroupSpec::uniform(SimplicialComplex::points(2), 4).unwrap();
        assert_eq!(generator_minus_one_product(&z4, &[1]), Err(Error::NonUniformOrders));
    }

    #[test]
    fn oracle_on_small_groups() {
        let dihedral = GroupSpec::coxeter(SimplicialComplex::points(2));
        let mut oracle = AugmentationOracle::new(&dihedral).unwrap();
        let report = oracle.filtration(4, DEFAULT_EXTRA_TRUNCATION).unwrap();
        let dims: Vec<u128> = report.degrees.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![2, 2, 2, 2]);
        assert!(report.degrees.iter().all(|r| r.stabilized && r.monotone));

        let klein = GroupSpec::coxeter(SimplicialComplex::simplex(2));
        let dims: Vec<u128> = (1..=3).map(|n| gr_dim_oracle(&klein, n, n + 6).unwrap().dim).collect();
        assert_eq!(dims, vec![2, 1, 0]);
    }

    #[test]
    fn quillen_three_way() {
        let r = quillen_check(&SimplicialComplex::points(2), 2, 6, Budgets::default()).unwrap();
        assert!(r.pass());
        assert!(r.rows.iter().all(|row| row.oracle == 2));
        let cube = quillen_check(&SimplicialComplex::simplex(3), 2, 4, Budgets::default()).unwrap();
        assert!(cube.pass());
        let dims: Vec<u128> = cube.rows.iter().map(|r| r.oracle).collect();
        assert_eq!(dims, vec![3, 3, 1, 0]);
    }
}
