//! Elimination kernels shared by the matrix and matroid code.
//!
//! Rational matrices are row-scaled to integers and reduced with Bareiss'
//! fraction-free elimination. Every intermediate entry is a minor of the
//! input, so the `i128` kernels only overflow on inputs far outside the
//! desk-scale regime; they report overflow and callers fall back to `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Multiplies each row by the lcm of its denominators. Returns the integer
/// entries and the per-row scale factors.
pub(crate) fn integerize_rows(
    entries: &[BigRational],
    rows: usize,
    cols: usize,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut out = Vec::with_capacity(rows * cols);
    let mut factors = Vec::with_capacity(rows);
    for i in 0..rows {
        let row = &entries[i * cols..(i + 1) * cols];
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        for q in row {
            out.push(q.numer() * (&l / q.denom()));
        }
        factors.push(l);
    }
    (out, factors)
}

pub(crate) fn to_i128(entries: &[BigInt]) -> Option<Vec<i128>> {
    entries.iter().map(|v| v.to_i64().map(i128::from)).collect()
}

/// Rank of a row-major integer matrix; `None` on `i128` overflow.
pub(crate) fn bareiss_rank_i128(a: &mut [i128], rows: usize, cols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = a[r * cols + c];
        for i in r + 1..rows {
            let lead = a[i * cols + c];
            for j in c + 1..cols {
                let v = piv
                    .checked_mul(a[i * cols + j])?
                    .checked_sub(lead.checked_mul(a[r * cols + j])?)?;
                a[i * cols + j] = v / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = piv;
        r += 1;
    }
    Some(r)
}

pub(crate) fn bareiss_rank_big(a: &mut [BigInt], rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.swap(p * cols + j, r * cols + j);
            }
        }
        let piv = a[r * cols + c].clone();
        for i in r + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = &piv * &a[i * cols + j] - &lead * &a[r * cols + j];
                a[i * cols + j] = v / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Determinant of an `n x n` integer matrix; `None` on overflow.
pub(crate) fn det_i128(a: &mut [i128], n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1;
    let mut prev: i128 = 1;
    for k in 0..n {
        if a[k * n + k] == 0 {
            match (k + 1..n).find(|&i| a[i * n + k] != 0) {
                Some(p) => {
                    for j in 0..n {
                        a.swap(p * n + j, k * n + j);
                    }
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        if k == n - 1 {
            break;
        }
        let piv = a[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let v = piv
                    .checked_mul(a[i * n + j])?
                    .checked_sub(a[i * n + k].checked_mul(a[k * n + j])?)?;
                a[i * n + j] = v / prev;
            }
        }
        prev = piv;
    }
    Some(sign * a[n * n - 1])
}

pub(crate) fn bareiss_det_big(a: &mut [BigInt], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                Some(p) => {
                    for j in 0..n {
                        a.swap(p * n + j, k * n + j);
                    }
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        if k == n - 1 {
            break;
        }
        let piv = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &piv * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = piv;
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Rank of a set of integer vectors (each a row), `i128` first then `BigInt`.
pub(crate) fn int_rank(vectors: &[&[BigInt]], len: usize) -> usize {
    let rows = vectors.len();
    if rows == 0 || len == 0 {
        return 0;
    }
    let flat: Vec<BigInt> = vectors.iter().flat_map(|v| v.iter().cloned()).collect();
    if let Some(mut small) = to_i128(&flat) {
        if let Some(r) = bareiss_rank_i128(&mut small, rows, len) {
            return r;
        }
    }
    let mut big = flat;
    bareiss_rank_big(&mut big, rows, len)
}

/// Dense GF(2) vectors packed into `u64` words.
pub(crate) fn pack_bits(bits: impl ExactSizeIterator<Item = bool>) -> Vec<u64> {
    let n = bits.len();
    let mut words = vec![0u64; n.div_ceil(64).max(1)];
    for (i, b) in bits.enumerate() {
        if b {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

/// Rank over GF(2) of packed vectors (all of the same word length).
pub(crate) fn gf2_rank<'a>(vectors: impl IntoIterator<Item = &'a [u64]>) -> usize {
    // basis entries kept reduced by their leading bit
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for v in vectors {
        let mut v = v.to_vec();
        for (bit, b) in &basis {
            if v[bit / 64] >> (bit % 64) & 1 == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        if let Some(bit) = leading_bit(&v) {
            basis.push((bit, v));
        }
    }
    basis.len()
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

pub(crate) fn abs_le_one(q: &BigRational) -> bool {
    q.is_integer() && q.numer().abs() <= BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_kernels_agree() {
        let m = [2i128, -1, 0, -1, 2, -1, 0, -1, 2];
        assert_eq!(det_i128(&mut m.clone(), 3), Some(4));
        let mut big: Vec<BigInt> = m.iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(bareiss_det_big(&mut big, 3), BigInt::from(4));
        let swap = [0i128, 1, 1, 0];
        assert_eq!(det_i128(&mut swap.clone(), 2), Some(-1));
    }

    #[test]
    fn gf2_rank_of_cycle() {
        let v = [vec![0b011u64], vec![0b110], vec![0b101]];
        assert_eq!(gf2_rank(v.iter().map(|x| x.as_slice())), 2);
    }

    #[test]
    fn i128_overflow_is_reported() {
        let big = i128::MAX / 2;
        let mut m = [big, 1, 1, big];
        assert_eq!(bareiss_rank_i128(&mut m, 2, 2), None);
    }
}
