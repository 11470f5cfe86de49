//! The nonlinear isomorphisms between principal-minor and cycle-sum
//! coordinates.
//!
//! Subset-indexed: D_S = Σ over set partitions S_1⊔…⊔S_k of S of
//! (−1)^{|S|−k} C_{S_1}···C_{S_k}, and inversely with an extra (k−1)!.
//! Symmetrized: the same sums collapse to integer partitions α ⊢ s weighted
//! by the shape counts p_α, so each d_s costs p(s) terms instead of
//! Bell(s). Both routes are kept: the subset version doubles as an
//! independent oracle for the symmetrized one.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{factorial, for_each_set_partition, integer_partitions, IntPartition};
use crate::matrix::{CoordKind, SubsetVector, SymVector};
use crate::poly::{c_var_names, d_var_names, Poly};
use crate::scalar::Scalar;

/// Principal minors from cycle-sums, every subset at once.
pub fn d_from_c_subset(c: &SubsetVector) -> SubsetVector {
    assert_eq!(c.kind(), CoordKind::CycleSums, "input carries minors already");
    transform_subset(c, CoordKind::Minors, |_| BigInt::one())
}

/// Cycle-sums from principal minors; the inverse of [`d_from_c_subset`].
pub fn c_from_d_subset(d: &SubsetVector) -> SubsetVector {
    assert_eq!(d.kind(), CoordKind::Minors, "input carries cycle-sums already");
    transform_subset(d, CoordKind::CycleSums, |k| factorial(k as u32 - 1))
}

fn transform_subset(
    v: &SubsetVector,
    out_kind: CoordKind,
    block_weight: impl Fn(usize) -> BigInt,
) -> SubsetVector {
    let n = v.n();
    let mut out = Vec::with_capacity(1usize << n);
    out.push(Scalar::one());
    for mask in 1..(1u32 << n) {
        let size = mask.count_ones() as usize;
        let mut acc = Scalar::zero();
        for_each_set_partition(mask, |blocks| {
            let k = blocks.len();
            let mut coeff = block_weight(k);
            if (size - k) % 2 == 1 {
                coeff = -coeff;
            }
            let mut term = Scalar::from_bigint(coeff);
            for &b in blocks {
                term = &term * v.get(b);
            }
            acc = &acc + &term;
        });
        out.push(acc);
    }
    SubsetVector::new(n, out_kind, out).expect("same n, full length")
}

/// Symmetrized minors d from symmetrized cycle-sums c:
/// d_s = Σ_{α⊢s} (−1)^{s−|α|} p_α c^α.
pub fn d_from_c_sym(c: &SymVector) -> SymVector {
    assert_eq!(c.kind(), CoordKind::CycleSums, "input carries d already");
    transform_sym(c, CoordKind::Minors, |_| BigInt::one())
}

/// Symmetrized cycle-sums c from symmetrized minors d:
/// c_s = Σ_{α⊢s} (−1)^{s−|α|} (|α|−1)! p_α d^α.
pub fn c_from_d_sym(d: &SymVector) -> SymVector {
    assert_eq!(d.kind(), CoordKind::Minors, "input carries c already");
    transform_sym(d, CoordKind::CycleSums, |k| factorial(k as u32 - 1))
}

fn transform_sym(
    v: &SymVector,
    out_kind: CoordKind,
    block_weight: impl Fn(usize) -> BigInt,
) -> SymVector {
    let n = v.n();
    let mut out = Vec::with_capacity(n + 1);
    out.push(Scalar::one());
    for s in 1..=n {
        let mut acc = Scalar::zero();
        for alpha in integer_partitions(s as u32) {
            let mut term = Scalar::from_bigint(partition_coeff(&alpha, &block_weight));
            for (part, mult) in alpha.multiplicities() {
                term = &term * &v.get(part as usize).powi(mult as i64);
            }
            acc = &acc + &term;
        }
        out.push(acc);
    }
    SymVector::new(out_kind, out)
}

fn partition_coeff(alpha: &IntPartition, block_weight: &impl Fn(usize) -> BigInt) -> BigInt {
    let s = alpha.sum() as usize;
    let k = alpha.len();
    let mut coeff = alpha.p_alpha() * block_weight(k);
    if (s - k) % 2 == 1 {
        coeff = -coeff;
    }
    coeff
}

/// d_s written symbolically in the variables c_1..c_s.
pub fn d_in_c_poly(s: usize) -> Poly {
    transition_poly(s, c_var_names(s), |_| BigInt::one())
}

/// c_s written symbolically in the variables d_1..d_s.
pub fn c_in_d_poly(s: usize) -> Poly {
    transition_poly(s, d_var_names(s), |k| factorial(k as u32 - 1))
}

fn transition_poly(
    s: usize,
    names: Vec<alloc::string::String>,
    block_weight: impl Fn(usize) -> BigInt,
) -> Poly {
    assert!(s >= 1);
    let mut poly = Poly::new(names);
    for alpha in integer_partitions(s as u32) {
        let mut expts = alloc::vec![0u16; s];
        for (part, mult) in alpha.multiplicities() {
            expts[part as usize - 1] = mult as u16;
        }
        poly.add_int_term(expts, partition_coeff(&alpha, &block_weight));
    }
    poly
}

/// Coordinates of A − λI from coordinates of A. Cycle-sums only move in
/// degree one (c_1 drops by λ); minors follow the characteristic-polynomial
/// binomial expansion d_k(A−λI) = Σ_i binom(k,i)(−λ)^{k−i} d_i(A).
pub fn shift_sym(v: &SymVector, lambda: &Scalar) -> SymVector {
    let n = v.n();
    match v.kind() {
        CoordKind::CycleSums => {
            let mut out: Vec<Scalar> = v.values().to_vec();
            if n >= 1 {
                out[1] = &out[1] - lambda;
            }
            SymVector::new(CoordKind::CycleSums, out)
        }
        CoordKind::Minors => {
            let neg = -lambda.clone();
            let mut out = Vec::with_capacity(n + 1);
            out.push(Scalar::one());
            for k in 1..=n {
                let mut acc = Scalar::zero();
                for i in 0..=k {
                    let coeff = Scalar::from_bigint(crate::combinatorics::binomial(
                        k as u32, i as u32,
                    ));
                    let term = &(&coeff * &neg.powi((k - i) as i64)) * v.get(i);
                    acc = &acc + &term;
                }
                out.push(acc);
            }
            SymVector::new(CoordKind::Minors, out)
        }
    }
}

/// Coordinates of λA from coordinates of A: degree-k entries pick up λ^k.
pub fn scale_sym(v: &SymVector, lambda: &Scalar) -> SymVector {
    let out = v
        .values()
        .iter()
        .enumerate()
        .map(|(k, x)| {
            if k == 0 {
                Scalar::one()
            } else {
                &lambda.powi(k as i64) * x
            }
        })
        .collect();
    SymVector::new(v.kind(), out)
}
