//! Sparse integer elimination: invariant factors, ranks mod p, kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

use super::matrix::dense_invariant_factors;

/// Column-major sparse integer matrix; each column is sorted by row index.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, x) in col {
                out[i as usize][j] = BigInt::from(x);
            }
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::new(self.cols, self.rows);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, x) in col {
                t.columns[i as usize].push((j as u32, x));
            }
        }
        t
    }
}

/// `a - f * b` on sorted sparse vectors; `None` on overflow.
fn axpy_i64(a: &[(u32, i64)], f: i64, b: &[(u32, i64)]) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else {
            let fb = f.checked_mul(b[j].1)?;
            let (idx, val) = if i < a.len() && a[i].0 == b[j].0 {
                let v = a[i].1.checked_sub(fb)?;
                i += 1;
                (b[j].0, v)
            } else {
                (b[j].0, fb.checked_neg()?)
            };
            j += 1;
            if val != 0 {
                out.push((idx, val));
            }
        }
    }
    Some(out)
}

#[derive(Debug)]
struct Overflow;

/// Unit-pivot Schur elimination. Returns the number of unit pivots taken and
/// the residual block (rows of the surviving submatrix, re-indexed densely).
fn unit_eliminate(m: &SparseMatrix) -> Result<(usize, Vec<Vec<BigInt>>), Overflow> {
    // row-major working copy
    let t = m.transpose();
    let mut rows: Vec<Vec<(u32, i64)>> = t.columns;
    let mut col_rows: Vec<Vec<u32>> = m.columns.iter().map(|c| c.iter().map(|&(i, _)| i).collect()).collect();
    let mut row_alive = vec![true; m.rows];
    let mut units = 0usize;

    let entry = |row: &[(u32, i64)], c: u32| row.binary_search_by_key(&c, |&(k, _)| k).ok().map(|p| row[p].1);

    loop {
        let mut progress = false;
        let mut order: Vec<usize> = (0..m.rows).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
        order.sort_by_key(|&r| rows[r].len());
        for r in order {
            if !row_alive[r] || rows[r].is_empty() {
                continue;
            }
            let pivot = rows[r]
                .iter()
                .filter(|&&(_, x)| x == 1 || x == -1)
                .min_by_key(|&&(c, _)| col_rows[c as usize].len())
                .copied();
            let Some((c, a)) = pivot else { continue };
            progress = true;
            units += 1;
            row_alive[r] = false;
            let prow = std::mem::take(&mut rows[r]);
            let targets = std::mem::take(&mut col_rows[c as usize]);
            for r2 in targets {
                let r2 = r2 as usize;
                if r2 == r || !row_alive[r2] {
                    continue;
                }
                let Some(e) = entry(&rows[r2], c) else { continue };
                let f = e.checked_mul(a).ok_or(Overflow)?;
                let old = std::mem::take(&mut rows[r2]);
                let new = axpy_i64(&old, f, &prow).ok_or(Overflow)?;
                for &(c2, _) in &prow {
                    if c2 != c && entry(&old, c2).is_none() && entry(&new, c2).is_some() {
                        col_rows[c2 as usize].push(r2 as u32);
                    }
                }
                debug_assert!(entry(&new, c).is_none());
                rows[r2] = new;
            }
        }
        if !progress {
            break;
        }
    }

    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let mut live_cols: Vec<u32> = live_rows.iter().flat_map(|&r| rows[r].iter().map(|&(c, _)| c)).collect();
    live_cols.sort_unstable();
    live_cols.dedup();
    let residual = live_rows
        .iter()
        .map(|&r| {
            let mut dense = vec![BigInt::zero(); live_cols.len()];
            for &(c, x) in &rows[r] {
                let k = live_cols.binary_search(&c).unwrap();
                dense[k] = BigInt::from(x);
            }
            dense
        })
        .collect();
    Ok((units, residual))
}

/// Nonzero invariant factors of `m`, ascending (so the count is the rank).
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let (units, residual) = match unit_eliminate(m) {
        Ok(x) => x,
        Err(Overflow) => (0, m.to_dense()),
    };
    let mut out = vec![BigInt::one(); units];
    if !residual.is_empty() {
        out.extend(dense_invariant_factors(residual));
    }
    out.sort();
    out
}

/// Rank over the integers (equivalently over the rationals).
pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Rank over the prime field `F_p`; `p` must be prime.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let reduce = |x: i64| x.rem_euclid(p as i64) as u64;
    let mut pivot_of: Vec<Option<usize>> = vec![None; m.rows];
    let mut reduced: Vec<Vec<(u32, u64)>> = Vec::with_capacity(m.cols);
    let mut rank = 0;
    for col in &m.columns {
        let mut c: Vec<(u32, u64)> = col.iter().map(|&(i, x)| (i, reduce(x))).filter(|&(_, x)| x != 0).collect();
        while let Some(&(low, x)) = c.last() {
            let Some(k) = pivot_of[low as usize] else { break };
            let pk = &reduced[k];
            let y = pk.last().unwrap().1;
            // c -= (x / y) * pk
            let f = (x as u128 * pow_mod(y, p - 2, p) as u128 % p as u128) as u64;
            let mut out = Vec::with_capacity(c.len() + pk.len());
            let (mut i, mut j) = (0, 0);
            while i < c.len() || j < pk.len() {
                if j == pk.len() || (i < c.len() && c[i].0 < pk[j].0) {
                    out.push(c[i]);
                    i += 1;
                } else {
                    let fb = (f as u128 * pk[j].1 as u128 % p as u128) as u64;
                    let v = if i < c.len() && c[i].0 == pk[j].0 {
                        let v = (c[i].1 + p - fb) % p;
                        i += 1;
                        v
                    } else {
                        (p - fb) % p
                    };
                    if v != 0 {
                        out.push((pk[j].0, v));
                    }
                    j += 1;
                }
            }
            c = out;
        }
        if let Some(&(low, _)) = c.last() {
            pivot_of[low as usize] = Some(reduced.len());
            rank += 1;
        }
        reduced.push(c);
    }
    rank
}

/// Integer arithmetic used by the kernel computation: `i64` reports overflow,
/// `BigInt` never does.
pub trait Coeff: Clone + Zero + One + PartialEq + Integer + Signed + CheckedAdd + CheckedMul + CheckedSub + std::fmt::Debug {}
impl Coeff for i64 {}
impl Coeff for BigInt {}

type SVec<T> = Vec<(u32, T)>;

/// `s*a + t*b` on sorted sparse vectors.
fn lincomb<T: Coeff>(s: &T, a: &SVec<T>, t: &T, b: &SVec<T>) -> Option<SVec<T>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (idx, v) = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            let r = (a[i].0, s.checked_mul(&a[i].1)?);
            i += 1;
            r
        } else if i == a.len() || b[j].0 < a[i].0 {
            let r = (b[j].0, t.checked_mul(&b[j].1)?);
            j += 1;
            r
        } else {
            let x = s.checked_mul(&a[i].1)?;
            let y = t.checked_mul(&b[j].1)?;
            let v = x.checked_add(&y)?;
            let r = (a[i].0, v);
            i += 1;
            j += 1;
            r
        };
        if !v.is_zero() {
            out.push((idx, v));
        }
    }
    Some(out)
}

/// Column reduction with a tracked unimodular transform `V`. The columns of
/// `V` whose reduced image vanishes form a Z-basis of the kernel.
fn kernel_generic<T: Coeff>(m: &[SVec<T>]) -> Option<Vec<SVec<T>>> {
    let n = m.len();
    let mut cols: Vec<SVec<T>> = m.to_vec();
    let mut v: Vec<SVec<T>> = (0..n).map(|j| vec![(j as u32, T::one())]).collect();
    let mut pivot_of: rustc_hash::FxHashMap<u32, usize> = Default::default();
    let mut kernel = Vec::new();
    for j in 0..n {
        loop {
            let Some((low, b)) = cols[j].last().cloned() else {
                kernel.push(j);
                break;
            };
            let Some(&k) = pivot_of.get(&low) else {
                pivot_of.insert(low, j);
                break;
            };
            let a = cols[k].last().unwrap().1.clone();
            if b.is_multiple_of(&a) {
                let q = b.div_floor(&a);
                cols[j] = lincomb(&T::one(), &cols[j], &(T::zero() - q.clone()), &cols[k])?;
                v[j] = lincomb(&T::one(), &v[j], &(T::zero() - q), &v[k])?;
            } else {
                let e = a.extended_gcd(&b);
                let (g, s, t) = (e.gcd, e.x, e.y);
                let (ag, bg) = (a.div_floor(&g), b.div_floor(&g));
                let new_k = lincomb(&s, &cols[k], &t, &cols[j])?;
                let new_j = lincomb(&bg, &cols[k], &(T::zero() - ag.clone()), &cols[j])?;
                let vk = lincomb(&s, &v[k], &t, &v[j])?;
                let vj = lincomb(&bg, &v[k], &(T::zero() - ag), &v[j])?;
                cols[k] = new_k;
                cols[j] = new_j;
                v[k] = vk;
                v[j] = vj;
            }
        }
    }
    Some(kernel.into_iter().map(|j| std::mem::take(&mut v[j])).collect())
}

/// A Z-basis of `{x : m x = 0}` as sparse vectors indexed by column.
pub fn integer_kernel(m: &SparseMatrix) -> Vec<Vec<(u32, BigInt)>> {
    if let Some(k) = kernel_generic::<i64>(&m.columns) {
        return k.into_iter().map(|c| c.into_iter().map(|(i, x)| (i, BigInt::from(x))).collect()).collect();
    }
    let big: Vec<SVec<BigInt>> =
        m.columns.iter().map(|c| c.iter().map(|&(i, x)| (i, BigInt::from(x))).collect()).collect();
    kernel_generic::<BigInt>(&big).expect("BigInt arithmetic does not overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_dense(rows: &[Vec<i64>]) -> SparseMatrix {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut m = SparseMatrix::new(r, c);
        for j in 0..c {
            for (i, row) in rows.iter().enumerate() {
                if row[j] != 0 {
                    m.columns[j].push((i as u32, row[j]));
                }
            }
        }
        m
    }

    fn apply(m: &SparseMatrix, x: &[(u32, BigInt)]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); m.rows];
        for (j, xj) in x {
            for &(i, a) in &m.columns[*j as usize] {
                out[i as usize] += xj * a;
            }
        }
        out
    }

    #[test]
    fn two_three() {
        let m = from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(invariant_factors(&m), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }

    #[test]
    fn kernel_of_ones_row() {
        let m = from_dense(&[vec![2, 4, 6]]);
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(apply(&m, x).iter().all(Zero::is_zero));
        }
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
    }

    proptest! {
        #[test]
        fn sparse_agrees_with_dense(rows in small_matrix()) {
            let m = from_dense(&rows);
            let dense = super::super::matrix::IntegerMatrix::from_rows(&rows);
            let expected = super::super::matrix::smith_normal_form(&dense).invariant_factors();
            prop_assert_eq!(invariant_factors(&m), expected.clone());
            // kernel rank and membership
            let k = integer_kernel(&m);
            prop_assert_eq!(k.len() + expected.len(), m.cols);
            for x in &k {
                prop_assert!(apply(&m, x).iter().all(Zero::is_zero));
            }
            // rank over F_p matches the count of factors prime to p
            for p in [2u64, 3, 5] {
                let pb = BigInt::from(p);
                let r = expected.iter().filter(|d| !d.is_multiple_of(&pb)).count();
                prop_assert_eq!(rank_mod_p(&m, p), r);
            }
        }
    }
}
