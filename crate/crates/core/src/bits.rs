//! Small bitmask helpers shared by the search kernels.

/// Iterates the set bits of a `u32`, lowest first.
#[derive(Clone, Copy)]
pub struct Bits32(pub u32);

impl Iterator for Bits32 {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Iterates the set bits of a `u64`, lowest first.
#[derive(Clone, Copy)]
pub struct Bits64(pub u64);

impl Iterator for Bits64 {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[inline]
pub fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Binomial coefficient, exact for the small arguments used here.
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Edge count of the Turán graph `T_parts(n)`.
pub fn turan_edges(n: usize, parts: usize) -> usize {
    if parts == 0 {
        return 0;
    }
    let sizes = balanced_sizes(n, parts);
    let sq: usize = sizes.iter().map(|s| s * s).sum();
    (n * n - sq) / 2
}

/// Balanced part sizes, largest first.
pub fn balanced_sizes(n: usize, parts: usize) -> alloc::vec::Vec<usize> {
    let base = n / parts;
    let extra = n % parts;
    (0..parts).map(|i| base + usize::from(i < extra)).collect()
}

/// All `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
pub fn subsets_of_size(n: usize, k: usize) -> alloc::vec::Vec<u32> {
    let mut out = alloc::vec::Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    // Gosper's hack.
    let mut s: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while s < limit {
        out.push(s as u32);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// Deterministic 64-bit FNV-1a over a word stream.
pub fn fnv(words: impl IntoIterator<Item = u64>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for w in words {
        for b in w.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(7, 3), 35);
        assert_eq!(binom(1, 2), 0);
    }

    #[test]
    fn turan_counts() {
        assert_eq!(turan_edges(4, 2), 4);
        assert_eq!(turan_edges(6, 2), 9);
        assert_eq!(turan_edges(5, 2), 6);
        assert_eq!(turan_edges(8, 2), 16);
        assert_eq!(turan_edges(7, 3), 16);
    }

    #[test]
    fn subset_enumeration() {
        let s = subsets_of_size(5, 2);
        assert_eq!(s.len(), 10);
        assert!(s.iter().all(|m| m.count_ones() == 2));
        assert_eq!(subsets_of_size(3, 0), alloc::vec![0]);
    }
}
