//! Seeded cross-validation suites behind the `selfcheck` command: the same
//! dual-route identities the test suite pins, sized by the caller.

use pmcs_core::coordinates::{
    c_from_d_subset, c_from_d_sym, d_from_c_subset, d_from_c_sym, scale_sym, shift_sym,
};
use pmcs_core::families::{
    apply_scale, apply_shift, conjugate, family_matrix, FamilyKind, FamilySpec, GroupElement,
};
use pmcs_core::matrix::is_scs;
use pmcs_core::{Scalar, SquareMatrix, SubsetVector, SymVector};
use pmcs_core::matrix::CoordKind;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct SuiteResult {
    pub name: &'static str,
    pub trials: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix {
    SquareMatrix::from_fn(n, |_, _| random_rational(rng))
}

fn random_scs_matrix(rng: &mut ChaCha8Rng, n: usize) -> SquareMatrix {
    let kind = match rng.gen_range(0..3) {
        0 => FamilyKind::Ones {
            lambda: random_rational(rng),
            mu: random_rational(rng),
        },
        1 => FamilyKind::SkewOnes {
            lambda: random_rational(rng),
        },
        _ => {
            let x = Scalar::from_integer(rng.gen_range(1..=3));
            FamilyKind::Toeplitz {
                lambda: random_rational(rng),
                x,
            }
        }
    };
    let base = family_matrix(&FamilySpec::new(n, kind).unwrap());
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let diag: Vec<Scalar> = (0..n)
        .map(|_| Scalar::from_integer(if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    conjugate(&base, &GroupElement::new(perm, diag).unwrap())
}

/// Minors by determinant against minors by partition transform of the
/// cycle-sums, both directions.
fn determinant_vs_partition(max_n: usize, trials: usize, seed: u64) -> SuiteResult {
    let mut rng = rng_for(seed, 0x01);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let n = rng.gen_range(2..=max_n);
        let a = random_matrix(&mut rng, n);
        let d = a.principal_minors().unwrap();
        let c = a.cycle_sums().unwrap();
        if d_from_c_subset(&c).values() != d.values() || c_from_d_subset(&d).values() != c.values()
        {
            failures.push(format!("trial {trial}: routes disagree at n = {n}"));
        }
    }
    SuiteResult {
        name: "determinant-vs-partition",
        trials,
        failures,
    }
}

/// The subset transforms invert each other on arbitrary vectors.
fn subset_roundtrip(max_n: usize, trials: usize, seed: u64) -> SuiteResult {
    let mut rng = rng_for(seed, 0x02);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let n = rng.gen_range(2..=max_n.min(6));
        let mut values = vec![Scalar::one()];
        values.extend((1..(1u32 << n)).map(|_| random_rational(&mut rng)));
        let c = SubsetVector::new(n, CoordKind::CycleSums, values).unwrap();
        if c_from_d_subset(&d_from_c_subset(&c)).values() != c.values() {
            failures.push(format!("trial {trial}: subset roundtrip broke at n = {n}"));
        }
    }
    SuiteResult {
        name: "subset-roundtrip",
        trials,
        failures,
    }
}

/// The symmetrized transforms invert each other on arbitrary vectors.
fn sym_roundtrip(max_n: usize, trials: usize, seed: u64) -> SuiteResult {
    let mut rng = rng_for(seed, 0x03);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let n = rng.gen_range(2..=max_n + 2);
        let tail: Vec<Scalar> = (0..n).map(|_| random_rational(&mut rng)).collect();
        let c = SymVector::from_tail(CoordKind::CycleSums, tail);
        if c_from_d_sym(&d_from_c_sym(&c)).values() != c.values() {
            failures.push(format!("trial {trial}: sym roundtrip broke at n = {n}"));
        }
    }
    SuiteResult {
        name: "sym-roundtrip",
        trials,
        failures,
    }
}

/// On coordinate-symmetric matrices, symmetrizing commutes with the
/// transform: collapse then convert equals convert then collapse.
fn symmetrize_commutes(max_n: usize, trials: usize, seed: u64) -> SuiteResult {
    let mut rng = rng_for(seed, 0x04);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let n = rng.gen_range(2..=max_n);
        let a = random_scs_matrix(&mut rng, n);
        match is_scs(&a) {
            Ok(Some((d, c))) => {
                if d_from_c_sym(&c).values() != d.values() {
                    failures.push(format!("trial {trial}: collapse/convert disagree at n = {n}"));
                }
            }
            _ => failures.push(format!("trial {trial}: family member lost symmetry at n = {n}")),
        }
    }
    SuiteResult {
        name: "symmetrize-commutes",
        trials,
        failures,
    }
}

/// Shifting and scaling the matrix moves its coordinates exactly as the
/// vector-level transport predicts.
fn shift_scale_transport(max_n: usize, trials: usize, seed: u64) -> SuiteResult {
    let mut rng = rng_for(seed, 0x05);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let n = rng.gen_range(2..=max_n);
        let a = random_scs_matrix(&mut rng, n);
        let lam = random_rational(&mut rng);
        let (d, c) = match is_scs(&a) {
            Ok(Some(pair)) => pair,
            _ => {
                failures.push(format!("trial {trial}: corpus matrix not symmetric"));
                continue;
            }
        };
        let shifted = is_scs(&apply_shift(&a, &lam)).unwrap();
        let scaled = is_scs(&apply_scale(&a, &lam)).unwrap();
        let shift_ok = shifted.as_ref().map(|(ds, cs)| {
            ds.values() == shift_sym(&d, &lam).values()
                && cs.values() == shift_sym(&c, &lam).values()
        });
        let scale_ok = scaled.as_ref().map(|(ds, cs)| {
            ds.values() == scale_sym(&d, &lam).values()
                && cs.values() == scale_sym(&c, &lam).values()
        });
        if shift_ok != Some(true) {
            failures.push(format!("trial {trial}: shift transport broke at n = {n}"));
        }
        if scale_ok != Some(true) {
            failures.push(format!("trial {trial}: scale transport broke at n = {n}"));
        }
    }
    SuiteResult {
        name: "shift-scale-transport",
        trials,
        failures,
    }
}

pub fn run_all(max_n: usize, trials: usize, seed: u64) -> Vec<SuiteResult> {
    let max_n = max_n.clamp(2, 7);
    vec![
        determinant_vs_partition(max_n, trials, seed),
        subset_roundtrip(max_n, trials, seed),
        sym_roundtrip(max_n, trials, seed),
        symmetrize_commutes(max_n, trials, seed),
        shift_scale_transport(max_n, trials, seed),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_default_sizes() {
        for suite in run_all(5, 20, 0x5eed) {
            assert!(
                suite.passed(),
                "{}: {:?}",
                suite.name,
                suite.failures
            );
        }
    }

    #[test]
    fn runs_are_deterministic_per_seed() {
        let a = run_all(4, 10, 42);
        let b = run_all(4, 10, 42);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.failures, y.failures);
        }
    }
}
