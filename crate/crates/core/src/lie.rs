//! Free (restricted) Lie algebra counts, PBW extraction, and graded
//! dimensions of graph Lie algebras read off from Hilbert series.

use rand::{Rng, SeedableRng};

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ncalg::{AlgebraKind, AlgebraPresentation, NCPolynomial};
use crate::series::IntegerPowerSeries;

/// Graded dimensions `d_1, ..., d_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedDims(pub Vec<u128>);

impl GradedDims {
    /// `d_n` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> u128 {
        assert!(n >= 1, "graded dimensions start in degree 1");
        self.0[n - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u128] {
        &self.0
    }
}

/// All Lyndon words of length exactly `n` over `1..=m`, in lexicographic order.
pub fn lyndon_words(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 || n == 0 {
        return out;
    }
    // Duval's generation of all Lyndon words of length <= n
    let mut w = vec![1usize];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let k = w.len();
        while w.len() < n {
            w.push(w[w.len() - k]);
        }
        while w.last() == Some(&m) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Standard bracketing of a Lyndon word, e.g. `[1,[1,2]]` for `112`.
pub fn lyndon_bracket(word: &[usize]) -> String {
    if word.len() == 1 {
        return word[0].to_string();
    }
    // split off the longest proper Lyndon suffix
    let split = (1..word.len())
        .find(|&s| is_lyndon(&word[s..]))
        .expect("single letters are Lyndon");
    format!(
        "[{},{}]",
        lyndon_bracket(&word[..split]),
        lyndon_bracket(&word[split..])
    )
}

fn is_lyndon(word: &[usize]) -> bool {
    (1..word.len()).all(|r| {
        let rotated: Vec<usize> = word[r..].iter().chain(&word[..r]).copied().collect();
        word < rotated.as_slice()
    })
}

fn mobius(mut n: u64) -> i128 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the degree-`n` part of the free Lie algebra on `m` generators.
pub fn witt_dimension(m: u64, n: u64) -> u128 {
    assert!(n >= 1, "degree starts at 1");
    let mut acc: i128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        acc += mobius(d) * (m as i128).pow((n / d) as u32);
    }
    (acc / n as i128) as u128
}

/// Dimension of the degree-`n` part of the free restricted Lie algebra:
/// Lie basis elements of degree `d` raised to `p^i` with `d p^i = n`.
pub fn free_restricted_dim(m: u64, n: u64, p: u64) -> u128 {
    let mut total = 0;
    let mut q = 1u64;
    while q <= n {
        if n.is_multiple_of(q) {
            total += witt_dimension(m, n / q);
        }
        q *= p;
    }
    total
}

fn check_constant(h: &IntegerPowerSeries) -> Result<()> {
    if h.coeff(0) != 1 {
        return Err(Error::BadConstantTerm);
    }
    Ok(())
}

/// The unique `d_1..d_N` with `prod (1 - t^n)^{-d_n} = H mod t^{N+1}`.
pub fn pbw_extract(h: &IntegerPowerSeries, degree: usize) -> Result<GradedDims> {
    check_constant(h)?;
    let mut rest = IntegerPowerSeries::from_coeffs(degree, h.coeffs());
    let mut dims = Vec::with_capacity(degree);
    for n in 1..=degree {
        let d = rest.coeff(n);
        if d < 0 {
            return Err(Error::NegativeExponent { degree: n, value: d });
        }
        rest.mul_one_minus_pow(n, d as u128)?;
        dims.push(d as u128);
    }
    Ok(GradedDims(dims))
}

/// The unique `d_1..d_N` with `prod ((1 - t^{pn}) / (1 - t^n))^{d_n} = H mod t^{N+1}`.
pub fn restricted_pbw_extract(h: &IntegerPowerSeries, degree: usize, p: u64) -> Result<GradedDims> {
    check_constant(h)?;
    PrimeField::new(p)?;
    let mut rest = IntegerPowerSeries::from_coeffs(degree, h.coeffs());
    let mut dims = Vec::with_capacity(degree);
    for n in 1..=degree {
        let d = rest.coeff(n);
        if d < 0 {
            return Err(Error::NegativeExponent { degree: n, value: d });
        }
        rest.mul_one_minus_pow(n, d as u128)?;
        let pn = n * p as usize;
        if pn <= degree {
            rest.mul_geometric_pow(pn, d as u128)?;
        }
        dims.push(d as u128);
    }
    Ok(GradedDims(dims))
}

/// `prod_{n <= N} (1 - t^n)^{-d_n}`.
pub fn pbw_product(dims: &GradedDims, degree: usize) -> Result<IntegerPowerSeries> {
    let mut s = IntegerPowerSeries::one(degree);
    for (idx, &d) in dims.as_slice().iter().enumerate().take(degree) {
        s.mul_geometric_pow(idx + 1, d)?;
    }
    Ok(s)
}

/// `prod_{n <= N} ((1 - t^{pn}) / (1 - t^n))^{d_n}`.
pub fn restricted_pbw_product(dims: &GradedDims, degree: usize, p: u64) -> Result<IntegerPowerSeries> {
    let mut s = IntegerPowerSeries::one(degree);
    for (idx, &d) in dims.as_slice().iter().enumerate().take(degree) {
        let n = idx + 1;
        s.mul_geometric_pow(n, d)?;
        if n * p as usize <= degree {
            s.mul_one_minus_pow(n * p as usize, d)?;
        }
    }
    Ok(s)
}

/// Graded dimensions of the Lie algebra of the lower central series of the
/// right-angled Artin group on `k`.
pub fn graph_lie_dims(k: &SimplicialComplex, degree: usize) -> Result<GradedDims> {
    let poly = AlgebraPresentation::from_complex(k, AlgebraKind::Poly, 2)?;
    pbw_extract(&poly.hilbert_series_formula(degree)?, degree)
}

/// Graded dimensions of the restricted Lie algebra of the lower p-central
/// series of the graph product of copies of Z/p over `k`.
pub fn graph_restricted_lie_dims(k: &SimplicialComplex, p: u64, degree: usize) -> Result<GradedDims> {
    let trunc = AlgebraPresentation::from_complex(k, AlgebraKind::Trunc, p)?;
    restricted_pbw_extract(&trunc.hilbert_series_formula(degree)?, degree, p)
}

/// `sum_i s_i(x, y)`, where `i s_i` is the coefficient of `lambda^{i-1}` in
/// `ad(lambda x + y)^{p-1} (x)`.
pub fn jacobson_sum(x: &NCPolynomial, y: &NCPolynomial) -> Result<NCPolynomial> {
    let field = x.field();
    let p = field.characteristic() as usize;
    // coefficients of powers of lambda
    let mut poly = vec![x.clone()];
    for _ in 0..p - 1 {
        let mut next = vec![NCPolynomial::zero(x.generator_count(), field); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] = next[k].add(&c.bracket(y)?)?;
            next[k + 1] = next[k + 1].add(&c.bracket(x)?)?;
        }
        poly = next;
    }
    let mut total = NCPolynomial::zero(x.generator_count(), field);
    for i in 1..p {
        let coeff = &poly[i - 1];
        total = total.add(&coeff.scale(field.inv(i as u32) as i64))?;
    }
    Ok(total)
}

/// The same sum written out for p = 2 and p = 3.
fn explicit_jacobson_sum(x: &NCPolynomial, y: &NCPolynomial) -> Result<Option<NCPolynomial>> {
    match x.field().characteristic() {
        2 => Ok(Some(x.bracket(y)?)),
        3 => {
            let xy = x.bracket(y)?;
            Ok(Some(xy.bracket(y)?.sub(&xy.bracket(x)?)?))
        }
        _ => Ok(None),
    }
}

/// Checks the p-power axioms of a restricted Lie algebra for random
/// homogeneous elements of the free associative algebra over GF(p), with the
/// p-power given by the associative power and the bracket by `xy - yx`.
pub fn p_power_axiom_check(p: u64, trials: usize, seed: u64) -> Result<bool> {
    let field = PrimeField::new(p)?;
    let pe = p as u32;
    let m = 3;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = random_homogeneous(&mut rng, m, field);
        let y = random_homogeneous(&mut rng, m, field);
        let lhs = x.add(&y)?.pow(pe);
        let base = x.pow(pe).add(&y.pow(pe))?;
        if lhs != base.add(&jacobson_sum(&x, &y)?)? {
            return Ok(false);
        }
        if let Some(explicit) = explicit_jacobson_sum(&x, &y)? {
            if lhs != base.add(&explicit)? {
                return Ok(false);
            }
        }
        // (alpha x)^[p] = alpha^p x^[p]
        let alpha = rng.gen_range(0..p) as i64;
        if x.scale(alpha).pow(pe) != x.pow(pe).scale(field.pow(alpha as u32, p) as i64) {
            return Ok(false);
        }
        // [x, y^[p]] = ad(y)^p (x)
        let mut iterated = x.clone();
        for _ in 0..p {
            iterated = iterated.bracket(&y)?;
        }
        if x.bracket(&y.pow(pe))? != iterated {
            return Ok(false);
        }
    }
    Ok(true)
}

fn random_homogeneous(rng: &mut impl Rng, m: usize, field: PrimeField) -> NCPolynomial {
    let degree = rng.gen_range(1..=2);
    let terms = rng.gen_range(1..=3);
    let p = field.characteristic() as i64;
    NCPolynomial::from_terms(
        m,
        field,
        (0..terms).map(|_| {
            let word: Vec<usize> = (0..degree).map(|_| rng.gen_range(1..=m)).collect();
            (word, rng.gen_range(1..p))
        }),
    )
}
