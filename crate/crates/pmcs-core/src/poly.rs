//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Just enough structure to state relation generators and transition
//! expansions and evaluate them on [`Scalar`] vectors: a coefficient map
//! keyed by exponent vectors. No division, no Gröbner machinery.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    names: Vec<String>,
    terms: BTreeMap<Vec<u16>, BigRational>,
}

impl Poly {
    /// The zero polynomial in the given variables.
    pub fn new(names: Vec<String>) -> Self {
        Poly {
            names,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff · x^expts`, combining with any existing term and dropping
    /// the monomial if the combined coefficient cancels to zero.
    pub fn add_term(&mut self, expts: Vec<u16>, coeff: BigRational) {
        assert_eq!(expts.len(), self.nvars(), "exponent vector length");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(expts);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_int_term(&mut self, expts: Vec<u16>, coeff: BigInt) {
        self.add_term(expts, BigRational::from_integer(coeff));
    }

    /// The coefficient of a monomial; zero when absent.
    pub fn coeff(&self, expts: &[u16]) -> BigRational {
        self.terms
            .get(expts)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &BigRational)> {
        self.terms.iter()
    }

    /// Exact evaluation; `vals[i]` substitutes the i-th variable.
    pub fn eval(&self, vals: &[Scalar]) -> Scalar {
        assert_eq!(vals.len(), self.nvars(), "value vector length");
        let mut acc = Scalar::zero();
        for (expts, coeff) in &self.terms {
            let mut term = Scalar::from_rational(coeff.clone());
            for (i, &e) in expts.iter().enumerate() {
                if e > 0 {
                    term = &term * &vals[i].powi(e as i64);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluation plus the sum of term magnitudes, the natural scale for
    /// deciding whether an approximate residual counts as zero.
    pub fn eval_with_scale(&self, vals: &[Scalar]) -> (Scalar, f64) {
        let value = self.eval(vals);
        let mut scale = 0.0f64;
        for (expts, coeff) in &self.terms {
            let mut mag = coeff.abs().to_f64().unwrap_or(f64::INFINITY);
            for (i, &e) in expts.iter().enumerate() {
                let base = vals[i].magnitude();
                for _ in 0..e {
                    mag *= base;
                }
            }
            scale += mag;
        }
        (value, scale)
    }

    /// The common weighted degree when every term has one (weight of
    /// variable i is `weights[i]`); `None` if terms disagree. Zero
    /// polynomial reports `Some(0)`.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        assert_eq!(weights.len(), self.nvars());
        let mut common: Option<u64> = None;
        for expts in self.terms.keys() {
            let w: u64 = expts
                .iter()
                .zip(weights)
                .map(|(&e, &wt)| e as u64 * wt as u64)
                .sum();
            match common {
                None => common = Some(w),
                Some(c) if c == w => {}
                Some(_) => return None,
            }
        }
        Some(common.unwrap_or(0))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest exponent vectors first, so leading terms lead
        for (pos, (expts, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.abs();
            let constant = expts.iter().all(|&e| e == 0);
            let unit = mag == BigRational::from_integer(BigInt::from(1));
            if constant || !unit {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({})", mag)?;
                }
            }
            for (i, &e) in expts.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                write!(f, "{}", self.names[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Variable name lists for the two coordinate systems. Cycle-sum variables
/// start at index 1 (`c_1..c_n`); minor variables include `d_0`.
pub fn c_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| alloc::format!("c_{k}")).collect()
}

pub fn d_var_names_from_zero(n: usize) -> Vec<String> {
    (0..=n).map(|k| alloc::format!("d_{k}")).collect()
}

pub fn d_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|k| alloc::format!("d_{k}")).collect()
}
