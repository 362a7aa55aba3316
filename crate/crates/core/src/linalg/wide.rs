//! Square matrices of fixed-width two's-complement integers for the inner
//! loop of the characteristic polynomial.
//!
//! All arithmetic is modulo 2^(64·limbs). Results are exact as long as the
//! true values fit in the signed range, which the caller guarantees by
//! choosing the width from a bound before every product.

use num_bigint::{BigInt, BigUint, Sign};
use rayon::prelude::*;

#[derive(Clone)]
pub(crate) struct WideMatrix {
    n: usize,
    limbs: usize,
    data: Vec<u64>,
}

impl WideMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        WideMatrix { n, limbs: 1, data }
    }

    fn entry(&self, i: usize, j: usize) -> &[u64] {
        let s = (i * self.n + j) * self.limbs;
        &self.data[s..s + self.limbs]
    }

    fn entry_mut(&mut self, i: usize, j: usize) -> &mut [u64] {
        let s = (i * self.n + j) * self.limbs;
        &mut self.data[s..s + self.limbs]
    }

    fn row(&self, i: usize) -> &[u64] {
        let w = self.n * self.limbs;
        &self.data[i * w..(i + 1) * w]
    }

    /// Sign-extends every entry to `limbs` limbs. Never narrows.
    pub fn widen(&self, limbs: usize) -> Self {
        if limbs <= self.limbs {
            return self.clone();
        }
        let mut data = Vec::with_capacity(self.n * self.n * limbs);
        for e in self.data.chunks(self.limbs) {
            data.extend_from_slice(e);
            let fill = if is_negative(e) { u64::MAX } else { 0 };
            data.extend(std::iter::repeat_n(fill, limbs - self.limbs));
        }
        WideMatrix { n: self.n, limbs, data }
    }

    /// Largest bit length of the magnitude of any entry.
    pub fn max_bits(&self) -> u64 {
        self.data.chunks(self.limbs).map(magnitude_bits).max().unwrap_or(0)
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        to_bigint(self.entry(i, j))
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        self.entry(i, j).iter().all(|&l| l == 0)
    }

    /// Adds `c` to every diagonal entry; `c` must fit in the current width.
    pub fn add_diagonal(&mut self, c: &BigInt) {
        let c = from_bigint(c, self.limbs);
        for i in 0..self.n {
            add_assign(self.entry_mut(i, i), &c);
        }
    }

    /// `m · self` at width `limbs`, where `m` is given row-major as `i64`.
    ///
    /// Each row of `m` is rewritten around its most frequent value `b` as
    /// `b·(1,…,1) + (row − b)`, so the dense 2-entries of a distance matrix
    /// cost one scaled copy of the column sums. The remaining terms are
    /// grouped by coefficient, one scalar multiplication per group.
    pub fn left_mul(&self, m: &[i64], limbs: usize) -> Self {
        let acc = self.widen(limbs);
        let (n, l) = (self.n, acc.limbs);
        let mut data = vec![0u64; n * n * l];
        if n == 0 {
            return WideMatrix { n, limbs: l, data };
        }
        let mut col_sums = vec![0u64; n * l];
        (0..n).for_each(|k| add_rows(&mut col_sums, acc.row(k), l));
        data.par_chunks_mut(n * l).enumerate().for_each(|(i, out)| {
            let row = &m[i * n..(i + 1) * n];
            let mut counts: Vec<(i64, usize)> = Vec::new();
            for &v in row {
                match counts.iter_mut().find(|(g, _)| *g == v) {
                    Some((_, c)) => *c += 1,
                    None => counts.push((v, 1)),
                }
            }
            let mut base = counts.iter().max_by_key(|(_, c)| *c).map_or(0, |&(v, _)| v);
            if row.iter().any(|v| v.checked_sub(base).is_none()) {
                base = 0;
            }
            let mut groups: Vec<(i64, Vec<usize>)> = Vec::new();
            for (k, &v) in row.iter().enumerate() {
                let d = v - base;
                if d == 0 {
                    continue;
                }
                match groups.iter_mut().find(|(g, _)| *g == d) {
                    Some((_, ks)) => ks.push(k),
                    None => groups.push((d, vec![k])),
                }
            }
            let mut scratch = vec![0u64; n * l];
            if base != 0 {
                scratch.copy_from_slice(&col_sums);
                add_scaled(out, &mut scratch, base, l);
            }
            for (v, ks) in groups {
                match v {
                    1 => ks.iter().for_each(|&k| add_rows(out, acc.row(k), l)),
                    -1 => ks.iter().for_each(|&k| sub_rows(out, acc.row(k), l)),
                    _ => {
                        scratch.iter_mut().for_each(|x| *x = 0);
                        ks.iter().for_each(|&k| add_rows(&mut scratch, acc.row(k), l));
                        add_scaled(out, &mut scratch, v, l);
                    }
                }
            }
        });
        WideMatrix { n, limbs: l, data }
    }
}

/// `out += v · scratch`, clobbering `scratch`.
fn add_scaled(out: &mut [u64], scratch: &mut [u64], v: i64, l: usize) {
    if v.unsigned_abs() != 1 {
        for e in scratch.chunks_mut(l) {
            mul_small_assign(e, v.unsigned_abs());
        }
    }
    if v > 0 {
        add_rows(out, scratch, l);
    } else {
        sub_rows(out, scratch, l);
    }
}

fn add_rows(out: &mut [u64], row: &[u64], l: usize) {
    for (o, r) in out.chunks_mut(l).zip(row.chunks(l)) {
        add_assign(o, r);
    }
}

fn sub_rows(out: &mut [u64], row: &[u64], l: usize) {
    for (o, r) in out.chunks_mut(l).zip(row.chunks(l)) {
        sub_assign(o, r);
    }
}

fn is_negative(a: &[u64]) -> bool {
    a.last().is_some_and(|&top| top >> 63 == 1)
}

fn add_assign(a: &mut [u64], b: &[u64]) {
    let mut carry = false;
    for (x, &y) in a.iter_mut().zip(b) {
        let (s, c1) = x.overflowing_add(y);
        let (s, c2) = s.overflowing_add(carry as u64);
        *x = s;
        carry = c1 || c2;
    }
}

fn sub_assign(a: &mut [u64], b: &[u64]) {
    let mut borrow = false;
    for (x, &y) in a.iter_mut().zip(b) {
        let (d, b1) = x.overflowing_sub(y);
        let (d, b2) = d.overflowing_sub(borrow as u64);
        *x = d;
        borrow = b1 || b2;
    }
}

fn mul_small_assign(a: &mut [u64], v: u64) {
    let mut carry = 0u128;
    for x in a.iter_mut() {
        let t = (*x as u128) * (v as u128) + carry;
        *x = t as u64;
        carry = t >> 64;
    }
}

fn negate(a: &mut [u64]) {
    let mut carry = true;
    for x in a.iter_mut() {
        let (s, c) = (!*x).overflowing_add(carry as u64);
        *x = s;
        carry = c;
    }
}

fn magnitude_bits(a: &[u64]) -> u64 {
    let mut mag = a.to_vec();
    if is_negative(a) {
        negate(&mut mag);
    }
    match mag.iter().rposition(|&l| l != 0) {
        Some(top) => top as u64 * 64 + (64 - mag[top].leading_zeros() as u64),
        None => 0,
    }
}

fn from_bigint(x: &BigInt, limbs: usize) -> Vec<u64> {
    let (sign, digits) = x.to_u64_digits();
    let mut out = vec![0u64; limbs];
    out[..digits.len()].copy_from_slice(&digits);
    if sign == Sign::Minus {
        negate(&mut out);
    }
    out
}

fn to_bigint(a: &[u64]) -> BigInt {
    let neg = is_negative(a);
    let mut mag = a.to_vec();
    if neg {
        negate(&mut mag);
    }
    let digits: Vec<u32> = mag.iter().flat_map(|&l| [l as u32, (l >> 32) as u32]).collect();
    let m = BigInt::from_biguint(Sign::Plus, BigUint::new(digits));
    if neg {
        -m
    } else {
        m
    }
}

/// Limbs needed to hold any signed value of at most `bits` magnitude bits.
pub(crate) fn limbs_for(bits: u64) -> usize {
    ((bits + 1).div_ceil(64) as usize).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_widen() {
        for v in [0i128, 1, -1, 7, -7, i64::MIN as i128, u64::MAX as i128, -(1i128 << 100)] {
            let x = BigInt::from(v);
            let l = limbs_for(x.bits());
            let e = from_bigint(&x, l);
            assert_eq!(to_bigint(&e), x);
            assert_eq!(magnitude_bits(&e), x.bits());
            let m = WideMatrix { n: 1, limbs: l, data: e };
            assert_eq!(m.widen(l + 2).get(0, 0), x);
        }
    }

    #[test]
    fn left_mul_matches_small_product() {
        // [[2,-1],[-3,0]] · [[1,2],[3,4]]
        let mut b = WideMatrix::identity(2);
        b.data = vec![1, 2, 3, 4];
        let p = b.left_mul(&[2, -1, -3, 0], 2);
        let got: Vec<BigInt> = (0..4).map(|k| p.get(k / 2, k % 2)).collect();
        let want: Vec<BigInt> = [-1, 0, -3, -6].into_iter().map(BigInt::from).collect();
        assert_eq!(got, want);
    }
}
