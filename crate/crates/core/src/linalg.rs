//! Exact matrix rank over `ℚ` and `GF(p)`.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// Rank over `ℚ` by fraction-free (Bareiss) elimination. Runs in `i128` and
/// restarts in arbitrary precision if an intermediate minor overflows.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<i128>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.get(r, c) as i128).collect())
        .collect();
    match bareiss_i128(&mut a) {
        Some(rank) => rank,
        None => {
            let mut b: Vec<Vec<BigInt>> = (0..m.rows)
                .map(|r| (0..m.cols).map(|c| BigInt::from(m.get(r, c))).collect())
                .collect();
            bareiss_big(&mut b)
        }
    }
}

fn bareiss_i128(a: &mut [Vec<i128>]) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..rows {
            let lead = a[i][c];
            for j in c + 1..cols {
                let t = pivot
                    .checked_mul(a[i][j])?
                    .checked_sub(lead.checked_mul(a[r][j])?)?;
                // exact by Sylvester's identity
                a[i][j] = t / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(a: &mut [Vec<BigInt>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let t = &pivot * &a[i][j] - &lead * &a[r][j];
                debug_assert!((&t % &prev).is_zero());
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Rank over `GF(p)`, `p` prime.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    if p == 2 {
        let cols: Vec<Vec<usize>> = (0..m.cols)
            .map(|c| (0..m.rows).filter(|&r| m.get(r, c) % 2 != 0).collect())
            .collect();
        return rank_gf2_columns(cols.iter().map(|v| v.as_slice()), m.rows);
    }
    let pi = p as i64;
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .map(|c| m.get(r, c).rem_euclid(pi) as u64)
                .collect()
        })
        .collect();
    let rows = m.rows;
    let cols = m.cols;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        for j in c..cols {
            a[r][j] = a[r][j] * inv % p;
        }
        for i in r + 1..rows {
            let f = a[i][c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
            }
        }
        r += 1;
    }
    r
}

/// Rank over `GF(2)` of the matrix whose columns list their nonzero row indices.
pub fn rank_gf2_columns<'a, I>(columns: I, rows: usize) -> usize
where
    I: IntoIterator<Item = &'a [usize]>,
{
    let words = rows.div_ceil(64).max(1);
    // pivots[r] holds a reduced column whose lowest set bit is r
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; rows];
    let mut rank = 0;
    for col in columns {
        let mut v = vec![0u64; words];
        for &r in col {
            v[r / 64] ^= 1u64 << (r % 64);
        }
        while let Some(low) = lowest_bit(&v) {
            match &pivots[low] {
                Some(p) => v.iter_mut().zip(p).for_each(|(x, y)| *x ^= y),
                None => {
                    pivots[low] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(k, &w)| k * 64 + w.trailing_zeros() as usize)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}
