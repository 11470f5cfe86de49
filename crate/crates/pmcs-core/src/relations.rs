//! The defining relation sets for realizability of a symmetrized
//! coordinate vector by each matrix class, the 3×3 hyperdeterminant
//! checks, and the n = 5 cycle-sum regression generators.
//!
//! Branches carry OR semantics: a vector is realizable when some branch
//! evaluates to all zeros. Symmetric and skew sets are written in
//! cycle-sum variables, the general-case Hankel minors in minor variables
//! d_0..d_n; `evaluate` converts the input vector as needed.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::combinatorics::{euler_number, factorial};
use crate::coordinates::{c_from_d_subset, c_from_d_sym, d_from_c_sym};
use crate::matrix::{symmetrize, CoordKind, SubsetVector, SymVector};
use crate::poly::{c_var_names, d_var_names_from_zero, Poly};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixClass {
    Symmetric,
    Skew,
    General,
}

impl MatrixClass {
    pub fn label(self) -> &'static str {
        match self {
            MatrixClass::Symmetric => "symmetric",
            MatrixClass::Skew => "skew",
            MatrixClass::General => "general",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RelationError {
    UnsupportedDimension {
        class: MatrixClass,
        n: usize,
        need: &'static str,
    },
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
}

impl fmt::Display for RelationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationError::UnsupportedDimension { class, n, need } => {
                write!(f, "{} relations need {need}, got n = {n}", class.label())
            }
            RelationError::DimensionMismatch { expected, got } => {
                write!(f, "vector has n = {got}, relation set has n = {expected}")
            }
        }
    }
}

impl core::error::Error for RelationError {}

/// One branch of a realizability ideal: polynomials that must all vanish.
#[derive(Clone, Debug)]
pub struct RelationSet {
    class: MatrixClass,
    n: usize,
    branch: &'static str,
    var_kind: CoordKind,
    polys: Vec<Poly>,
}

impl RelationSet {
    pub fn class(&self) -> MatrixClass {
        self.class
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn branch(&self) -> &'static str {
        self.branch
    }

    /// Which coordinate system the polynomials are written in.
    pub fn var_kind(&self) -> CoordKind {
        self.var_kind
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Exact residuals of every polynomial on `v`, converting between c and
    /// d coordinates when the vector and the variables disagree.
    pub fn evaluate(&self, v: &SymVector) -> Result<Vec<Scalar>, RelationError> {
        Ok(self.eval_inner(v)?.into_iter().map(|(r, _)| r).collect())
    }

    /// Residuals plus each polynomial's term-magnitude sum, the scale an
    /// approximate zero test should normalize by.
    pub fn evaluate_scaled(&self, v: &SymVector) -> Result<Vec<(Scalar, f64)>, RelationError> {
        self.eval_inner(v)
    }

    fn eval_inner(&self, v: &SymVector) -> Result<Vec<(Scalar, f64)>, RelationError> {
        if v.n() != self.n {
            return Err(RelationError::DimensionMismatch {
                expected: self.n,
                got: v.n(),
            });
        }
        let converted;
        let vals = if v.kind() == self.var_kind {
            v.values()
        } else {
            converted = match self.var_kind {
                CoordKind::Minors => d_from_c_sym(v),
                CoordKind::CycleSums => c_from_d_sym(v),
            };
            converted.values()
        };
        let slice = match self.var_kind {
            CoordKind::CycleSums => &vals[1..],
            CoordKind::Minors => vals,
        };
        Ok(self.polys.iter().map(|p| p.eval_with_scale(slice)).collect())
    }
}

/// Exponent vector over c_1..c_n with the given (index, power) entries.
fn cmono(n: usize, powers: &[(usize, u16)]) -> Vec<u16> {
    let mut e = alloc::vec![0u16; n];
    for &(k, p) in powers {
        assert!((1..=n).contains(&k), "variable c_{k} out of range");
        e[k - 1] += p;
    }
    e
}

fn cpoly(n: usize, terms: &[(i64, &[(usize, u16)])]) -> Poly {
    let mut poly = Poly::new(c_var_names(n));
    for &(coeff, powers) in terms {
        poly.add_int_term(cmono(n, powers), BigInt::from(coeff));
    }
    poly
}

/// The branch sets whose common zeros are the realizable vectors of a class.
pub fn generators(class: MatrixClass, n: usize) -> Result<Vec<RelationSet>, RelationError> {
    if n < 3 {
        return Err(RelationError::UnsupportedDimension {
            class,
            n,
            need: "n >= 3",
        });
    }
    Ok(match class {
        MatrixClass::Symmetric => alloc::vec![symmetric_set(n)],
        MatrixClass::Skew => skew_sets(n),
        MatrixClass::General => general_sets(n),
    })
}

/// 4c_2³ − c_3² together with (s−1)!·c_2·c_{s−2} − (s−3)!·c_s for
/// 4 ≤ s ≤ n.
fn symmetric_set(n: usize) -> RelationSet {
    let mut polys = alloc::vec![cpoly(n, &[(4, &[(2, 3)]), (-1, &[(3, 2)])])];
    for s in 4..=n {
        let mut p = Poly::new(c_var_names(n));
        p.add_int_term(cmono(n, &[(2, 1), (s - 2, 1)]), factorial(s as u32 - 1));
        p.add_int_term(cmono(n, &[(s, 1)]), -factorial(s as u32 - 3));
        polys.push(p);
    }
    RelationSet {
        class: MatrixClass::Symmetric,
        n,
        branch: "symmetric",
        var_kind: CoordKind::CycleSums,
        polys,
    }
}

fn odd_c_polys(n: usize) -> Vec<Poly> {
    (1..=n)
        .step_by(2)
        .map(|k| cpoly(n, &[(1, &[(k, 1)])]))
        .collect()
}

/// Skew realizability. n = 4 splits into the scaled-skew-ones branch
/// (c_4 = 2c_2²) and the exceptional branch (c_4 = −6c_2²); n ≥ 5 takes
/// the odd vanishing plus the zigzag-number quadrics
/// E_{2(i+j)−1}·c_{2i}·c_{2j} − E_{2i−1}·E_{2j−1}·c_{2(i+j)}.
fn skew_sets(n: usize) -> Vec<RelationSet> {
    let set = |branch, polys| RelationSet {
        class: MatrixClass::Skew,
        n,
        branch,
        var_kind: CoordKind::CycleSums,
        polys,
    };
    if n == 3 {
        return alloc::vec![set("skew", odd_c_polys(n))];
    }
    if n == 4 {
        let mut ones = odd_c_polys(n);
        ones.push(cpoly(n, &[(-2, &[(2, 2)]), (1, &[(4, 1)])]));
        let mut exceptional = odd_c_polys(n);
        exceptional.push(cpoly(n, &[(6, &[(2, 2)]), (1, &[(4, 1)])]));
        return alloc::vec![set("skew-ones", ones), set("skew-exceptional", exceptional)];
    }
    let mut polys = odd_c_polys(n);
    for i in 1.. {
        if 2 * (i + i) > n {
            break;
        }
        for j in i.. {
            let s = 2 * (i + j);
            if s > n {
                break;
            }
            let mut p = Poly::new(c_var_names(n));
            p.add_int_term(
                cmono(n, &[(2 * i, 1), (2 * j, 1)]),
                euler_number(s as u32 - 1),
            );
            p.add_int_term(
                cmono(n, &[(s, 1)]),
                -(euler_number(2 * i as u32 - 1) * euler_number(2 * j as u32 - 1)),
            );
            polys.push(p);
        }
    }
    alloc::vec![set("skew", polys)]
}

/// General realizability: nothing for n = 3, the two cycle-sum
/// branches for n = 4, and the 3×3 minors of the minor-coordinate Hankel
/// matrix for n ≥ 5.
fn general_sets(n: usize) -> Vec<RelationSet> {
    if n == 3 {
        return alloc::vec![RelationSet {
            class: MatrixClass::General,
            n,
            branch: "general",
            var_kind: CoordKind::CycleSums,
            polys: Vec::new(),
        }];
    }
    if n == 4 {
        let main = RelationSet {
            class: MatrixClass::General,
            n,
            branch: "general-main",
            var_kind: CoordKind::CycleSums,
            polys: alloc::vec![cpoly(
                4,
                &[(2, &[(2, 3)]), (1, &[(3, 2)]), (-1, &[(2, 1), (4, 1)])],
            )],
        };
        let exceptional = RelationSet {
            class: MatrixClass::General,
            n,
            branch: "general-exceptional",
            var_kind: CoordKind::CycleSums,
            polys: alloc::vec![
                cpoly(4, &[(1, &[(3, 1)])]),
                cpoly(4, &[(6, &[(2, 2)]), (1, &[(4, 1)])]),
            ],
        };
        return alloc::vec![main, exceptional];
    }
    alloc::vec![RelationSet {
        class: MatrixClass::General,
        n,
        branch: "general-hankel",
        var_kind: CoordKind::Minors,
        polys: hankel_minors(n),
    }]
}

/// All 3×3 minors of the 3×(n−1) matrix whose column j is
/// (d_j, d_{j+1}, d_{j+2}).
fn hankel_minors(n: usize) -> Vec<Poly> {
    const PERMS: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ];
    let cols = n - 1;
    let mut out = Vec::new();
    for a in 0..cols {
        for b in a + 1..cols {
            for c in b + 1..cols {
                let pick = [a, b, c];
                let mut p = Poly::new(d_var_names_from_zero(n));
                for (perm, sign) in PERMS {
                    let mut expts = alloc::vec![0u16; n + 1];
                    for (row, &col_slot) in perm.iter().enumerate() {
                        expts[pick[col_slot] + row] += 1;
                    }
                    p.add_int_term(expts, BigInt::from(sign));
                }
                out.push(p);
            }
        }
    }
    out
}

/// Cayley hyperdeterminant in cycle-sum form on a full 3×3 minor vector,
/// plus the symmetrized discriminant −4c_2³ + c_3² when the vector
/// symmetrizes.
pub fn hyperdet_checks(d: &SubsetVector) -> (Scalar, Option<Scalar>) {
    assert_eq!(d.n(), 3, "hyperdeterminant is a 3x3 story");
    assert_eq!(d.kind(), CoordKind::Minors, "expects minors");
    let c = c_from_d_subset(d);
    let minus4 = Scalar::from_integer(-4);
    let pairs = &(&(&minus4 * c.get(0b011)) * c.get(0b101)) * c.get(0b110);
    let full = c.get(0b111);
    let det = &pairs + &(full * full);
    let sdet = symmetrize(&c).ok().map(|sym| {
        let c2 = sym.get(2);
        let c3 = sym.get(3);
        &(&minus4 * &c2.powi(3)) + &(c3 * c3)
    });
    (det, sdet)
}

/// The ten cycle-sum generators cutting out the n = 5 coordinate scheme:
/// one cubic, eight quartics, one quintic.
pub fn regression_generators_n5() -> RelationSet {
    let polys = alloc::vec![
        cpoly(5, &[(3, &[(3, 3)]), (-4, &[(2, 1), (3, 1), (4, 1)]), (1, &[(2, 2), (5, 1)])]),
        cpoly(
            5,
            &[
                (6, &[(2, 1), (3, 2), (5, 1)]),
                (-2, &[(2, 2), (4, 1), (5, 1)]),
                (1, &[(4, 2), (5, 1)]),
                (-1, &[(3, 1), (5, 2)]),
            ],
        ),
        cpoly(
            5,
            &[
                (6, &[(2, 2), (3, 1), (5, 1)]),
                (1, &[(3, 1), (4, 1), (5, 1)]),
                (-1, &[(2, 1), (5, 2)]),
            ],
        ),
        cpoly(
            5,
            &[
                (2, &[(2, 3), (5, 1)]),
                (1, &[(3, 2), (5, 1)]),
                (-1, &[(2, 1), (4, 1), (5, 1)]),
            ],
        ),
        cpoly(
            5,
            &[
                (6, &[(2, 1), (3, 2), (4, 1)]),
                (-2, &[(2, 2), (4, 2)]),
                (1, &[(4, 3)]),
                (-1, &[(3, 1), (4, 1), (5, 1)]),
            ],
        ),
        cpoly(
            5,
            &[
                (6, &[(2, 2), (3, 1), (4, 1)]),
                (1, &[(3, 1), (4, 2)]),
                (-1, &[(2, 1), (4, 1), (5, 1)]),
            ],
        ),
        cpoly(
            5,
            &[(2, &[(2, 3), (4, 1)]), (1, &[(3, 2), (4, 1)]), (-1, &[(2, 1), (4, 2)])],
        ),
        cpoly(
            5,
            &[
                (6, &[(2, 2), (3, 2)]),
                (1, &[(3, 2), (4, 1)]),
                (-1, &[(2, 1), (3, 1), (5, 1)]),
            ],
        ),
        cpoly(
            5,
            &[
                (6, &[(2, 3), (3, 1)]),
                (1, &[(2, 1), (3, 1), (4, 1)]),
                (-1, &[(2, 2), (5, 1)]),
            ],
        ),
        cpoly(
            5,
            &[
                (12, &[(2, 5)]),
                (2, &[(3, 2), (4, 1)]),
                (-3, &[(2, 1), (4, 2)]),
                (1, &[(2, 1), (3, 1), (5, 1)]),
            ],
        ),
    ];
    RelationSet {
        class: MatrixClass::General,
        n: 5,
        branch: "general-n5-regression",
        var_kind: CoordKind::CycleSums,
        polys,
    }
}
