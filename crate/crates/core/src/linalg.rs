//! Exact linear algebra over ℚ: fraction-free rank, reduced row echelon form, kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::supercore::Rational;

/// Sparse vector: (index, nonzero value), indices strictly increasing.
pub type SparseVec = Vec<(usize, Rational)>;

/// Sort, merge duplicate indices and drop zeros.
pub fn compress(mut v: Vec<(usize, Rational)>) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Rank of the matrix whose rows are given sparsely.
///
/// Singleton rows and columns are peeled off first (each contributes exactly one to the rank);
/// what remains is cleared of denominators and handed to Bareiss elimination, in `i128` when the
/// minors fit and in arbitrary precision otherwise.
pub fn rank(ncols: usize, rows: &[SparseVec]) -> usize {
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    for (ri, r) in rows.iter().enumerate() {
        for (c, _) in r {
            col_rows[*c].push(ri);
        }
    }
    let mut row_alive = vec![true; rows.len()];
    let mut col_alive = vec![true; ncols];
    let mut row_count: Vec<usize> = rows.iter().map(Vec::len).collect();
    let mut col_count: Vec<usize> = col_rows.iter().map(Vec::len).collect();
    let mut peeled = 0;
    loop {
        let mut changed = false;
        for c in 0..ncols {
            if !col_alive[c] || col_count[c] != 1 {
                continue;
            }
            let ri = *col_rows[c].iter().find(|&&ri| row_alive[ri]).expect("count out of sync");
            kill_row(ri, rows, &mut row_alive, &col_alive, &mut col_count);
            kill_col(c, &col_rows, &mut col_alive, &row_alive, &mut row_count);
            peeled += 1;
            changed = true;
        }
        for ri in 0..rows.len() {
            if !row_alive[ri] || row_count[ri] != 1 {
                continue;
            }
            let c = rows[ri].iter().map(|(c, _)| *c).find(|&c| col_alive[c]).expect("count out of sync");
            kill_row(ri, rows, &mut row_alive, &col_alive, &mut col_count);
            kill_col(c, &col_rows, &mut col_alive, &row_alive, &mut row_count);
            peeled += 1;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    let cols: Vec<usize> = (0..ncols).filter(|&j| col_alive[j] && col_count[j] > 0).collect();
    if cols.is_empty() {
        return peeled;
    }
    let mut pos = vec![usize::MAX; ncols];
    for (t, &j) in cols.iter().enumerate() {
        pos[j] = t;
    }
    let mut dense: Vec<Vec<BigInt>> = Vec::new();
    for (ri, r) in rows.iter().enumerate() {
        if !row_alive[ri] || row_count[ri] == 0 {
            continue;
        }
        let live: Vec<&(usize, Rational)> = r.iter().filter(|(c, _)| pos[*c] != usize::MAX).collect();
        let l = live.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut row = vec![BigInt::zero(); cols.len()];
        for (c, v) in live {
            row[pos[*c]] = (v * Rational::from_integer(l.clone())).to_integer();
        }
        dense.push(row);
    }
    peeled + rank_dense_integer(dense)
}

fn kill_row(ri: usize, rows: &[SparseVec], row_alive: &mut [bool], col_alive: &[bool], col_count: &mut [usize]) {
    row_alive[ri] = false;
    for (c, _) in &rows[ri] {
        if col_alive[*c] {
            col_count[*c] -= 1;
        }
    }
}

fn kill_col(c: usize, col_rows: &[Vec<usize>], col_alive: &mut [bool], row_alive: &[bool], row_count: &mut [usize]) {
    col_alive[c] = false;
    for &ri in &col_rows[c] {
        if row_alive[ri] {
            row_count[ri] -= 1;
        }
    }
}

/// Rank of a dense integer matrix by Bareiss elimination.
pub fn rank_dense_integer(m: Vec<Vec<BigInt>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    // put the longer side along the rows so pivots are searched in the shorter dimension
    let m = if ncols > m.len() { transpose(m) } else { m };
    let small: Option<Vec<Vec<i128>>> =
        m.iter().map(|r| r.iter().map(|x| x.to_i128().filter(|v| v.abs() < 1 << 40)).collect()).collect();
    if let Some(s) = small {
        if let Some(r) = bareiss_i128(s) {
            return r;
        }
    }
    bareiss_big(m)
}

fn transpose(m: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let nc = m[0].len();
    let mut out = vec![Vec::with_capacity(m.len()); nc];
    for row in m {
        for (j, x) in row.into_iter().enumerate() {
            out[j].push(x);
        }
    }
    out
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let piv = pivot_row[c];
        for row in rest.iter_mut() {
            let f = row[c];
            for j in c + 1..ncols {
                let v = piv.checked_mul(row[j])?.checked_sub(f.checked_mul(pivot_row[j])?)?;
                row[j] = v / prev;
            }
            row[c] = 0;
        }
        prev = piv;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let piv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &piv * &row[j] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = piv;
        rank += 1;
    }
    rank
}

/// Reduced row echelon form of a dense rational matrix; returns the pivot columns.
pub fn rref(a: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    pivots
}

pub fn rank_rational(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let sparse: Vec<SparseVec> = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
        .collect();
    rank(ncols, &sparse)
}

/// Basis of {x : A x = 0}; one vector per free column, with that coordinate equal to 1.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = rows.to_vec();
    let pivots = rref(&mut a, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in a.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Coefficients expressing `target` in the span of `columns` (assumed independent), if it lies there.
pub fn solve_in_span(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = target.len();
    let k = columns.len();
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| columns.iter().map(|c| c[i].clone()).chain(std::iter::once(target[i].clone())).collect())
        .collect();
    let pivots = rref(&mut aug, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[k].clone();
    }
    Some(x)
}

/// Scale to a primitive integer vector whose first nonzero entry is positive.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = match ints.iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|c| Rational::from_integer(c * &sign / &g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::supercore::{rat, ratio};

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_small() {
        let a = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_rational(&a, 3), 2);
        assert_eq!(rank_rational(&dense(&[&[0, 0], &[0, 0]]), 2), 0);
        assert_eq!(rank_rational(&[], 4), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let a = vec![vec![ratio(1, 2), ratio(1, 3)], vec![rat(3), rat(2)]];
        assert_eq!(rank_rational(&a, 2), 1);
    }

    #[test]
    fn big_entries_fall_back() {
        let huge = rat(1 << 50);
        let a = vec![
            vec![huge.clone(), rat(1), rat(0)],
            vec![rat(1), huge.clone(), rat(1)],
            vec![rat(0), rat(1), huge.clone()],
        ];
        assert_eq!(rank_rational(&a, 3), 3);
    }

    #[test]
    fn kernel_is_kernel() {
        let a = dense(&[&[1, 1, 0, 2], &[0, 1, 1, 1]]);
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let s: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn span_solve() {
        let cols = dense(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(solve_in_span(&cols, &[rat(2), rat(3), rat(5)]), Some(vec![rat(2), rat(3)]));
        assert_eq!(solve_in_span(&cols, &[rat(1), rat(1), rat(0)]), None);
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive(&[ratio(-1, 2), ratio(1, 3)]), vec![rat(3), rat(-2)]);
    }
}
