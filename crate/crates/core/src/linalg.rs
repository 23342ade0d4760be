//! Incremental row echelon forms over GF(p).
//!
//! Rows are fed one at a time and reduced against the pivots seen so far, so
//! the rank of a large, streamed family of vectors can be computed without
//! materializing the whole matrix. Two layouts are provided: a sparse one for
//! relation spans in free algebras (rows stay short), and a dense one keyed by
//! a fixed column count, bit-packed when p = 2.

use std::collections::HashMap;

use crate::field::PrimeField;

/// Sparse vector: `(column, coefficient)` pairs sorted by column, no zeros.
pub type SparseVec = Vec<(usize, u32)>;

/// Sorts, merges duplicate columns and drops zeros.
pub fn normalize_sparse(field: &PrimeField, mut v: Vec<(usize, u32)>) -> SparseVec {
    v.sort_unstable_by_key(|&(c, _)| c);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (c, a) in v {
        match out.last_mut() {
            Some((lc, la)) if *lc == c => *la = field.add(*la, a),
            _ => out.push((c, a % field.characteristic())),
        }
        if let Some(&(_, 0)) = out.last() {
            out.pop();
        }
    }
    out
}

/// `a - k * b` for sorted sparse vectors.
fn axpy_sparse(field: &PrimeField, a: &[(usize, u32)], k: u32, b: &[(usize, u32)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            let v = field.neg(field.mul(k, b[j].1));
            out.push((b[j].0, v));
            j += 1;
        } else {
            let v = field.sub(a[i].1, field.mul(k, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Echelon structure over sparse rows with unbounded column indices.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    field: PrimeField,
    pivots: HashMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new(field: PrimeField) -> Self {
        Self {
            field,
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` (already normalized) and stores it if independent.
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        while let Some(&(lead, coeff)) = row.first() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = axpy_sparse(&self.field, &row, coeff, pivot),
                None => {
                    let inv = self.field.inv(coeff);
                    for entry in row.iter_mut() {
                        entry.1 = self.field.mul(entry.1, inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }
}

#[derive(Debug, Clone)]
enum Rows {
    Bits(Vec<Vec<u64>>),
    /// p < 16: every `x + k * y` fits in a byte.
    Small(Vec<Vec<u8>>),
    Dense(Vec<Vec<u32>>),
}

/// Dense echelon structure with a fixed number of columns.
#[derive(Debug, Clone)]
pub struct DenseEchelon {
    field: PrimeField,
    ncols: usize,
    rows: Rows,
    pivot_of_col: Vec<u32>,
}

const NO_PIVOT: u32 = u32::MAX;

impl DenseEchelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        let rows = match field.characteristic() {
            2 => Rows::Bits(Vec::new()),
            p if p < 16 => Rows::Small(Vec::new()),
            _ => Rows::Dense(Vec::new()),
        };
        Self {
            field,
            ncols,
            rows,
            pivot_of_col: vec![NO_PIVOT; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        match &self.rows {
            Rows::Bits(r) => r.len(),
            Rows::Small(r) => r.len(),
            Rows::Dense(r) => r.len(),
        }
    }

    /// Inserts a sparse row; columns must be `< ncols`.
    pub fn insert_sparse(&mut self, row: &[(usize, u32)]) -> bool {
        match &mut self.rows {
            Rows::Bits(rows) => {
                let words = self.ncols.div_ceil(64);
                let mut bits = vec![0u64; words];
                for &(c, a) in row {
                    if a & 1 == 1 {
                        bits[c / 64] ^= 1 << (c % 64);
                    }
                }
                insert_bits(rows, &mut self.pivot_of_col, bits)
            }
            Rows::Small(rows) => {
                let mut dense = vec![0u8; self.ncols];
                for &(c, a) in row {
                    dense[c] = self.field.add(dense[c] as u32, a) as u8;
                }
                insert_small(&self.field, rows, &mut self.pivot_of_col, dense)
            }
            Rows::Dense(rows) => {
                let mut dense = vec![0u32; self.ncols];
                for &(c, a) in row {
                    dense[c] = self.field.add(dense[c], a);
                }
                insert_dense(&self.field, rows, &mut self.pivot_of_col, dense)
            }
        }
    }

    /// The stored echelon rows as sparse vectors; they span the inserted rows.
    pub fn basis(&self) -> Vec<SparseVec> {
        match &self.rows {
            Rows::Bits(rows) => rows
                .iter()
                .map(|bits| {
                    let mut v = Vec::new();
                    for (w, &word) in bits.iter().enumerate() {
                        let mut x = word;
                        while x != 0 {
                            let t = x.trailing_zeros() as usize;
                            v.push((w * 64 + t, 1));
                            x &= x - 1;
                        }
                    }
                    v
                })
                .collect(),
            Rows::Small(rows) => rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &a)| a != 0)
                        .map(|(c, &a)| (c, a as u32))
                        .collect()
                })
                .collect(),
            Rows::Dense(rows) => rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &a)| a != 0)
                        .map(|(c, &a)| (c, a))
                        .collect()
                })
                .collect(),
        }
    }
}

fn insert_bits(rows: &mut Vec<Vec<u64>>, pivot_of_col: &mut [u32], mut bits: Vec<u64>) -> bool {
    let mut w = 0;
    while w < bits.len() {
        if bits[w] == 0 {
            w += 1;
            continue;
        }
        let col = w * 64 + bits[w].trailing_zeros() as usize;
        let piv = pivot_of_col[col];
        if piv == NO_PIVOT {
            pivot_of_col[col] = rows.len() as u32;
            rows.push(bits);
            return true;
        }
        // Pivot rows have no bits before their pivot column.
        let prow = &rows[piv as usize];
        for k in w..bits.len() {
            bits[k] ^= prow[k];
        }
    }
    false
}

fn insert_dense(field: &PrimeField, rows: &mut Vec<Vec<u32>>, pivot_of_col: &mut [u32], mut row: Vec<u32>) -> bool {
    let mut c = 0;
    while c < row.len() {
        let a = row[c];
        if a == 0 {
            c += 1;
            continue;
        }
        let piv = pivot_of_col[c];
        if piv == NO_PIVOT {
            let inv = field.inv(a);
            for x in row[c..].iter_mut() {
                *x = field.mul(*x, inv);
            }
            pivot_of_col[c] = rows.len() as u32;
            rows.push(row);
            return true;
        }
        let prow = &rows[piv as usize];
        let na = field.neg(a);
        for k in c..row.len() {
            if prow[k] != 0 {
                row[k] = field.add(row[k], field.mul(na, prow[k]));
            }
        }
        c += 1;
    }
    false
}

fn insert_small(field: &PrimeField, rows: &mut Vec<Vec<u8>>, pivot_of_col: &mut [u32], mut row: Vec<u8>) -> bool {
    let mut c = 0;
    while c < row.len() {
        let a = row[c] as u32;
        if a == 0 {
            c += 1;
            continue;
        }
        let piv = pivot_of_col[c];
        if piv == NO_PIVOT {
            let inv = field.inv(a);
            for x in row[c..].iter_mut() {
                *x = field.mul(*x as u32, inv) as u8;
            }
            pivot_of_col[c] = rows.len() as u32;
            rows.push(row);
            return true;
        }
        let prow = &rows[piv as usize];
        let na = field.neg(a) as u8;
        match field.characteristic() {
            3 => axpy_const::<3>(&mut row[c..], na, &prow[c..]),
            5 => axpy_const::<5>(&mut row[c..], na, &prow[c..]),
            7 => axpy_const::<7>(&mut row[c..], na, &prow[c..]),
            11 => axpy_const::<11>(&mut row[c..], na, &prow[c..]),
            _ => axpy_const::<13>(&mut row[c..], na, &prow[c..]),
        }
        c += 1;
    }
    false
}

/// `row += k * other` modulo a compile-time prime below 16.
fn axpy_const<const P: u8>(row: &mut [u8], k: u8, other: &[u8]) {
    for (x, &y) in row.iter_mut().zip(other) {
        *x = (*x + k * y) % P;
    }
}
