//! Partition and permutation-statistic combinatorics feeding the coordinate
//! transforms: integer partitions, set partitions of bitmask subsets,
//! Eulerian numbers/polynomials, and Euler zigzag numbers.
//!
//! Enumeration orders are fixed: integer partitions in descending
//! lexicographic order, set partitions in restricted-growth-string
//! lexicographic order. Golden tests rely on both.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// A partition of a positive integer, parts weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPartition {
    parts: Vec<u32>,
}

impl IntPartition {
    /// Builds from a weakly decreasing list of positive parts.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "parts must be weakly decreasing and positive"
        );
        IntPartition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts, |alpha|.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// (part value, multiplicity) pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Number of set partitions of [s] whose block sizes form this partition:
    /// s! / prod_i (i!^{m_i} · m_i!).
    pub fn p_alpha(&self) -> BigInt {
        let s = self.sum();
        let mut denom = BigInt::one();
        for (part, mult) in self.multiplicities() {
            let f = factorial(part);
            let mut pw = BigInt::one();
            for _ in 0..mult {
                pw *= &f;
            }
            denom *= pw * factorial(mult);
        }
        factorial(s) / denom
    }
}

/// All partitions of `s` in descending lexicographic order:
/// (s), (s−1,1), ..., (1,...,1). `s = 0` yields the empty partition.
pub fn integer_partitions(s: u32) -> Vec<IntPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<IntPartition>) {
        if remaining == 0 {
            out.push(IntPartition {
                parts: current.clone(),
            });
            return;
        }
        let first = remaining.min(max_part);
        for p in (1..=first).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(s, s.max(1), &mut current, &mut out);
    out
}

/// A partition of a bitmask ground set into disjoint nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    ground: u32,
    blocks: Vec<u32>,
}

impl SetPartition {
    pub fn ground(&self) -> u32 {
        self.ground
    }

    /// Blocks as bitmasks; the union is the ground set.
    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// All set partitions of the bits of `ground`, in restricted-growth-string
/// lexicographic order (element order: ascending bit index; each element
/// joins existing blocks in creation order before opening a new block).
pub fn set_partitions(ground: u32) -> Vec<SetPartition> {
    let mut out = Vec::new();
    for_each_set_partition(ground, |blocks| {
        out.push(SetPartition {
            ground,
            blocks: blocks.to_vec(),
        });
    });
    out
}

/// Visits every set partition of `ground` without materializing the list.
pub fn for_each_set_partition<F: FnMut(&[u32])>(ground: u32, mut f: F) {
    let elems: Vec<u32> = (0..32).filter(|b| ground >> b & 1 == 1).collect();
    if elems.is_empty() {
        f(&[]);
        return;
    }
    let mut blocks: Vec<u32> = Vec::with_capacity(elems.len());
    fn rec<F: FnMut(&[u32])>(elems: &[u32], idx: usize, blocks: &mut Vec<u32>, f: &mut F) {
        if idx == elems.len() {
            f(blocks);
            return;
        }
        let bit = 1u32 << elems[idx];
        for b in 0..blocks.len() {
            blocks[b] |= bit;
            rec(elems, idx + 1, blocks, f);
            blocks[b] &= !bit;
        }
        blocks.push(bit);
        rec(elems, idx + 1, blocks, f);
        blocks.pop();
    }
    rec(&elems, 0, &mut blocks, &mut f);
}

/// Bell number: count of set partitions of a k-element set.
pub fn bell_number(k: u32) -> BigInt {
    // Bell triangle
    let mut row = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in &row {
            let last = next.last().unwrap().clone();
            next.push(last + v);
        }
        row = next;
    }
    row[0].clone()
}

pub fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of permutations of [k] with exactly i−1 descents. Out-of-range `i`
/// gives zero.
pub fn eulerian_number(k: u32, i: u32) -> BigInt {
    if k == 0 || i == 0 || i > k {
        return BigInt::zero();
    }
    // row DP: row[j] = E(m, j+1)
    let mut row = vec![BigInt::one()]; // m = 1
    for m in 2..=k {
        let mut next = vec![BigInt::zero(); m as usize];
        for j in 1..=m {
            let take_same = if j <= m - 1 {
                row[(j - 1) as usize].clone() * BigInt::from(j)
            } else {
                BigInt::zero()
            };
            let take_prev = if j >= 2 {
                row[(j - 2) as usize].clone() * BigInt::from(m - j + 1)
            } else {
                BigInt::zero()
            };
            next[(j - 1) as usize] = take_same + take_prev;
        }
        row = next;
    }
    row[(i - 1) as usize].clone()
}

/// The Eulerian polynomial in the convention used throughout this crate:
/// E_m(t) = sum_{i=1..m} E(m,i) t^i with no constant term, and E_0(t) := 1.
pub fn eulerian_poly(m: u32, t: &Scalar) -> Scalar {
    if m == 0 {
        return Scalar::one();
    }
    // Horner from the top power down: (..(E(m,m)·t + E(m,m−1))·t + ..)·t
    let mut acc = Scalar::zero();
    for i in (1..=m).rev() {
        acc = &(&acc + &Scalar::from_bigint(eulerian_number(m, i))) * t;
    }
    acc
}

/// Euler zigzag number: the count of alternating permutations of k elements
/// (1, 1, 1, 2, 5, 16, 61, 272, ... for k = 0, 1, 2, ...); exponential
/// generating function tan(x) + sec(x).
pub fn euler_number(k: u32) -> BigInt {
    // Entringer boustrophedon: T(n,k) = T(n,k-1) + T(n-1,n-k), E_n = T(n,n).
    let mut row = vec![BigInt::one()];
    for n in 1..=k as usize {
        let mut next = vec![BigInt::zero(); n + 1];
        for j in 1..=n {
            let carryover = next[j - 1].clone();
            next[j] = carryover + &row[n - j];
        }
        row = next;
    }
    row.last().unwrap().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn partitions_of_four_in_descending_lex_order() {
        let got: Vec<Vec<u32>> = integer_partitions(4)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn partition_counts() {
        // p(s) for s = 0..10
        let want = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (s, &w) in want.iter().enumerate() {
            assert_eq!(integer_partitions(s as u32).len(), w, "s={}", s);
        }
    }

    #[test]
    fn p_alpha_pinned_values() {
        assert_eq!(
            IntPartition::new(vec![1, 1, 1, 1, 1, 1]).p_alpha(),
            BigInt::from(1)
        );
        assert_eq!(IntPartition::new(vec![3, 2, 1]).p_alpha(), BigInt::from(60));
        assert_eq!(IntPartition::new(vec![2, 2]).p_alpha(), BigInt::from(3));
        // full s=6 table: types and counts
        let table: &[(&[u32], i64)] = &[
            (&[6], 1),
            (&[5, 1], 6),
            (&[4, 2], 15),
            (&[4, 1, 1], 15),
            (&[3, 3], 10),
            (&[3, 2, 1], 60),
            (&[3, 1, 1, 1], 20),
            (&[2, 2, 2], 15),
            (&[2, 2, 1, 1], 45),
            (&[2, 1, 1, 1, 1], 15),
            (&[1, 1, 1, 1, 1, 1], 1),
        ];
        for (parts, want) in table {
            assert_eq!(
                IntPartition::new(parts.to_vec()).p_alpha(),
                BigInt::from(*want),
                "alpha={:?}",
                parts
            );
        }
    }

    #[test]
    fn p_alpha_sums_to_bell() {
        for s in 1..=8u32 {
            let total: BigInt = integer_partitions(s).iter().map(|a| a.p_alpha()).sum();
            assert_eq!(total, bell_number(s), "s={}", s);
        }
    }

    #[test]
    fn p_alpha_matches_brute_force_shape_counts() {
        for s in 1..=7u32 {
            let ground = (1u32 << s) - 1;
            for alpha in integer_partitions(s) {
                let mut want_shape: Vec<u32> = alpha.parts().to_vec();
                want_shape.sort_unstable();
                let mut count = BigInt::zero();
                for_each_set_partition(ground, |blocks| {
                    let mut shape: Vec<u32> =
                        blocks.iter().map(|b| b.count_ones()).collect();
                    shape.sort_unstable();
                    if shape == want_shape {
                        count += 1;
                    }
                });
                assert_eq!(count, alpha.p_alpha(), "s={} alpha={:?}", s, alpha.parts());
            }
        }
    }

    #[test]
    fn set_partitions_of_three_in_rgs_order() {
        let got = set_partitions(0b111);
        let blocks: Vec<Vec<u32>> = got.iter().map(|p| p.blocks().to_vec()).collect();
        assert_eq!(
            blocks,
            vec![
                vec![0b111],
                vec![0b011, 0b100],
                vec![0b101, 0b010],
                vec![0b001, 0b110],
                vec![0b001, 0b010, 0b100],
            ]
        );
    }

    #[test]
    fn set_partition_counts_are_bell_numbers() {
        for k in 0..=8u32 {
            let ground = (1u32 << k) - 1;
            assert_eq!(
                BigInt::from(set_partitions(ground).len()),
                bell_number(k),
                "k={}",
                k
            );
        }
        // non-contiguous ground sets count the same
        assert_eq!(
            BigInt::from(set_partitions(0b101010).len()),
            bell_number(3)
        );
    }

    #[test]
    fn set_partition_blocks_disjoint_and_cover() {
        let ground = 0b11011u32;
        for p in set_partitions(ground) {
            let mut seen = 0u32;
            for b in p.blocks() {
                assert_ne!(*b, 0);
                assert_eq!(seen & b, 0, "blocks overlap");
                seen |= b;
            }
            assert_eq!(seen, ground);
        }
    }

    #[test]
    fn eulerian_pinned_values() {
        assert_eq!(eulerian_number(1, 1), BigInt::from(1));
        assert_eq!(eulerian_number(3, 2), BigInt::from(4));
        let row4: Vec<BigInt> = (1..=4).map(|i| eulerian_number(4, i)).collect();
        assert_eq!(
            row4,
            vec![
                BigInt::from(1),
                BigInt::from(11),
                BigInt::from(11),
                BigInt::from(1)
            ]
        );
        let row5: Vec<BigInt> = (1..=5).map(|i| eulerian_number(5, i)).collect();
        assert_eq!(
            row5,
            [1, 26, 66, 26, 1].map(BigInt::from).to_vec()
        );
        assert_eq!(eulerian_number(4, 0), BigInt::zero());
        assert_eq!(eulerian_number(4, 5), BigInt::zero());
    }

    #[test]
    fn eulerian_rows_sum_to_factorials() {
        for k in 1..=8u32 {
            let total: BigInt = (1..=k).map(|i| eulerian_number(k, i)).sum();
            assert_eq!(total, factorial(k), "k={}", k);
        }
    }

    #[test]
    fn eulerian_matches_brute_force_descent_counts() {
        // direct descent statistic over S_k
        fn count(k: usize, descents: usize) -> usize {
            let mut perm: Vec<usize> = (0..k).collect();
            let mut total = 0;
            loop {
                let d = perm.windows(2).filter(|w| w[0] > w[1]).count();
                if d == descents {
                    total += 1;
                }
                // next lexicographic permutation
                let Some(i) = (0..k - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
                    break;
                };
                let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
                perm.swap(i, j);
                perm[i + 1..].reverse();
                continue;
            }
            total
        }
        for k in 1..=6u32 {
            for i in 1..=k {
                assert_eq!(
                    eulerian_number(k, i),
                    BigInt::from(count(k as usize, i as usize - 1)),
                    "k={} i={}",
                    k,
                    i
                );
            }
        }
    }

    #[test]
    fn eulerian_poly_pinned_values() {
        let t = Scalar::from_integer(-4);
        assert_eq!(eulerian_poly(2, &t), Scalar::from_integer(12));
        assert_eq!(eulerian_poly(1, &Scalar::from_integer(-1)), Scalar::from_integer(-1));
        assert_eq!(eulerian_poly(3, &t), Scalar::from_integer(-4));
        assert_eq!(eulerian_poly(0, &t), Scalar::one());
    }

    #[test]
    fn euler_zigzag_values() {
        let want: [i64; 10] = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936];
        for (k, &w) in want.iter().enumerate() {
            assert_eq!(euler_number(k as u32), BigInt::from(w), "k={}", k);
        }
    }

    #[test]
    fn euler_matches_brute_force_alternating_count() {
        // alternating: a1 < a2 > a3 < a4 ... or the paper's equivalent count;
        // A000111 counts down-up permutations, same count as up-down by reversal.
        fn count(k: usize) -> usize {
            if k == 0 {
                return 1;
            }
            let mut perm: Vec<usize> = (0..k).collect();
            let mut total = 0;
            loop {
                let mut ok = true;
                for i in 0..k.saturating_sub(1) {
                    let up = perm[i] < perm[i + 1];
                    if i % 2 == 0 && !up || i % 2 == 1 && up {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    total += 1;
                }
                let Some(i) = (0..k - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
                    break;
                };
                let j = (i + 1..k).rev().find(|&j| perm[j] > perm[i]).unwrap();
                perm.swap(i, j);
                perm[i + 1..].reverse();
            }
            total
        }
        // k = 1 has one trivial permutation; for k >= 2 up-down counts match
        assert_eq!(euler_number(1), BigInt::from(count(1)));
        for k in 2..=7u32 {
            assert_eq!(
                euler_number(k),
                BigInt::from(count(k as usize)),
                "k={}",
                k
            );
        }
    }

    #[test]
    fn eulerian_poly_at_minus_one_is_signed_zigzag() {
        // E_{s-1}(-1) = (-1)^{s/2} E_{s-1} for even s, 0 for odd s >= 3
        let minus_one = Scalar::from_integer(-1);
        for s in 2..=10u32 {
            let val = eulerian_poly(s - 1, &minus_one);
            if s % 2 == 0 {
                let sign = if (s / 2) % 2 == 0 { 1 } else { -1 };
                let want =
                    Scalar::from_bigint(euler_number(s - 1) * BigInt::from(sign));
                assert_eq!(val, want, "s={}", s);
            } else {
                assert!(val.is_zero(), "s={}", s);
            }
        }
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(4, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
    }
}
