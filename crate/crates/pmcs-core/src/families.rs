//! Canonical matrices whose principal minors and cycle-sums depend only on
//! subset size, their closed-form coordinate vectors, and the group actions
//! (diagonal shift, scaling, scalar-permutation similarity) that preserve
//! that property, plus the shift-scale-conjugate normalization.

use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{eulerian_poly, euler_number, factorial};
use crate::coordinates::d_from_c_sym;
use crate::matrix::{is_scs, CoordKind, MatrixError, SquareMatrix, SymVector};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyKind {
    /// λ·(all-ones) + μ·I.
    Ones { lambda: Scalar, mu: Scalar },
    /// λ·(+1 above the diagonal, −1 below).
    SkewOnes { lambda: Scalar },
    /// The 4×4 skew-pattern matrix with c_4 = −6λ⁴, not conjugate to any
    /// scaled SkewOnes.
    Exceptional4 { lambda: Scalar },
    /// λ·T(x), entry (i,j) = sgn(j−i)·x^{j−i−sgn(j−i)}: powers of x above
    /// the diagonal, −1/x-powers below, zero diagonal.
    Toeplitz { lambda: Scalar, x: Scalar },
    /// Unit superdiagonal, weight w in the bottom-left corner: the single
    /// n-cycle carries product w.
    NCycle { w: Scalar },
    /// μ·I. Not one of the classification representatives on its own, but
    /// the witness for "every coordinate zero after shifting".
    Diagonal { mu: Scalar },
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Ones { .. } => "ones",
            FamilyKind::SkewOnes { .. } => "skewones",
            FamilyKind::Exceptional4 { .. } => "exceptional4",
            FamilyKind::Toeplitz { .. } => "toeplitz",
            FamilyKind::NCycle { .. } => "ncycle",
            FamilyKind::Diagonal { .. } => "diagonal",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    n: usize,
    kind: FamilyKind,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyError {
    BadDimension {
        family: &'static str,
        n: usize,
        need: &'static str,
    },
    ZeroParameter {
        family: &'static str,
        param: &'static str,
    },
    /// x² = −1 puts the minor closed form on its pole; cycle-sums are still
    /// defined there.
    ToeplitzPole,
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::BadDimension { family, n, need } => {
                write!(f, "family {family} needs {need}, got n = {n}")
            }
            FamilyError::ZeroParameter { family, param } => {
                write!(f, "family {family} needs nonzero {param}")
            }
            FamilyError::ToeplitzPole => {
                write!(f, "toeplitz minors are undefined at x^2 = -1 (cycle-sums still exist)")
            }
        }
    }
}

impl core::error::Error for FamilyError {}

impl FamilySpec {
    pub fn new(n: usize, kind: FamilyKind) -> Result<Self, FamilyError> {
        if n == 0 {
            return Err(FamilyError::BadDimension {
                family: kind.name(),
                n,
                need: "n >= 1",
            });
        }
        match &kind {
            FamilyKind::Exceptional4 { .. } if n != 4 => {
                return Err(FamilyError::BadDimension {
                    family: "exceptional4",
                    n,
                    need: "n = 4",
                });
            }
            FamilyKind::NCycle { .. } if n < 3 => {
                return Err(FamilyError::BadDimension {
                    family: "ncycle",
                    n,
                    need: "n >= 3",
                });
            }
            FamilyKind::Toeplitz { x, .. } if x.is_zero() => {
                return Err(FamilyError::ZeroParameter {
                    family: "toeplitz",
                    param: "x",
                });
            }
            _ => {}
        }
        Ok(FamilySpec { n, kind })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }
}

/// Builds the matrix a spec describes.
pub fn family_matrix(spec: &FamilySpec) -> SquareMatrix {
    let n = spec.n();
    match spec.kind() {
        FamilyKind::Ones { lambda, mu } => SquareMatrix::from_fn(n, |i, j| {
            if i == j {
                lambda + mu
            } else {
                lambda.clone()
            }
        }),
        FamilyKind::SkewOnes { lambda } => SquareMatrix::from_fn(n, |i, j| {
            use core::cmp::Ordering::*;
            match i.cmp(&j) {
                Less => lambda.clone(),
                Equal => Scalar::zero(),
                Greater => -lambda.clone(),
            }
        }),
        FamilyKind::Exceptional4 { lambda } => {
            let signs: [[i64; 4]; 4] = [
                [0, 1, 1, 1],
                [-1, 0, 1, -1],
                [-1, -1, 0, 1],
                [-1, 1, -1, 0],
            ];
            SquareMatrix::from_fn(4, |i, j| lambda * &Scalar::from_integer(signs[i][j]))
        }
        FamilyKind::Toeplitz { lambda, x } => SquareMatrix::from_fn(n, |i, j| {
            use core::cmp::Ordering::*;
            match i.cmp(&j) {
                Equal => Scalar::zero(),
                Less => lambda * &x.powi((j - i) as i64 - 1),
                Greater => -(lambda * &x.powi(1 - (i - j) as i64)),
            }
        }),
        FamilyKind::NCycle { w } => SquareMatrix::from_fn(n, |i, j| {
            if j == i + 1 {
                Scalar::one()
            } else if i == n - 1 && j == 0 {
                w.clone()
            } else {
                Scalar::zero()
            }
        }),
        FamilyKind::Diagonal { mu } => SquareMatrix::from_fn(n, |i, j| {
            if i == j {
                mu.clone()
            } else {
                Scalar::zero()
            }
        }),
    }
}

/// The closed-form coordinate pair (d, c) of a family, never brute force.
/// Exceptional4 and NCycle store only c and derive d through the transform.
pub fn family_coordinates(spec: &FamilySpec) -> Result<(SymVector, SymVector), FamilyError> {
    let n = spec.n();
    let c = family_cycle_sums(spec);
    let d = match spec.kind() {
        FamilyKind::Ones { lambda, mu } => {
            let mut tail = Vec::with_capacity(n);
            for k in 1..=n as i64 {
                let inner = mu + &(&Scalar::from_integer(k) * lambda);
                tail.push(&mu.powi(k - 1) * &inner);
            }
            SymVector::from_tail(CoordKind::Minors, tail)
        }
        FamilyKind::SkewOnes { lambda } => {
            let mut tail = Vec::with_capacity(n);
            for s in 1..=n {
                tail.push(if s % 2 == 0 {
                    lambda.powi(s as i64)
                } else {
                    Scalar::zero()
                });
            }
            SymVector::from_tail(CoordKind::Minors, tail)
        }
        FamilyKind::Toeplitz { lambda, x } => {
            let x2 = x * x;
            let denom_base = &x2 + &Scalar::one();
            if denom_base.is_zero() {
                return Err(FamilyError::ToeplitzPole);
            }
            let mut tail = Vec::with_capacity(n);
            for s in 1..=n as i64 {
                let num = if s % 2 == 0 {
                    &x2.powi(s - 1) + &Scalar::one()
                } else {
                    &x2.powi(s - 1) - &Scalar::one()
                };
                let den = &x.powi(s - 2) * &denom_base;
                tail.push(&lambda.powi(s) * &(&num / &den));
            }
            SymVector::from_tail(CoordKind::Minors, tail)
        }
        FamilyKind::Exceptional4 { .. } | FamilyKind::NCycle { .. } => d_from_c_sym(&c),
        FamilyKind::Diagonal { mu } => {
            let tail = (1..=n as i64).map(|k| mu.powi(k)).collect();
            SymVector::from_tail(CoordKind::Minors, tail)
        }
    };
    Ok((d, c))
}

/// The closed-form c alone; total (the Toeplitz pole only affects minors).
pub fn family_cycle_sums(spec: &FamilySpec) -> SymVector {
    let n = spec.n();
    let tail: Vec<Scalar> = match spec.kind() {
        FamilyKind::Ones { lambda, mu } => (1..=n)
            .map(|k| {
                if k == 1 {
                    lambda + mu
                } else {
                    &Scalar::from_bigint(factorial(k as u32 - 1)) * &lambda.powi(k as i64)
                }
            })
            .collect(),
        FamilyKind::SkewOnes { lambda } => (1..=n).map(|s| skew_ones_c(lambda, s)).collect(),
        FamilyKind::Exceptional4 { lambda } => alloc::vec![
            Scalar::zero(),
            -lambda.powi(2),
            Scalar::zero(),
            &Scalar::from_integer(-6) * &lambda.powi(4),
        ],
        FamilyKind::Toeplitz { lambda, x } => {
            let minus_x2 = -(x * x);
            (1..=n)
                .map(|s| {
                    if s == 1 {
                        Scalar::zero()
                    } else {
                        let e = eulerian_poly(s as u32 - 1, &minus_x2);
                        &(&lambda.powi(s as i64) * &x.powi(-(s as i64))) * &e
                    }
                })
                .collect()
        }
        FamilyKind::NCycle { w } => {
            let mut tail = alloc::vec![Scalar::zero(); n];
            tail[n - 1] = w.clone();
            tail
        }
        FamilyKind::Diagonal { mu } => (1..=n)
            .map(|k| if k == 1 { mu.clone() } else { Scalar::zero() })
            .collect(),
    };
    SymVector::from_tail(CoordKind::CycleSums, tail)
}

/// c_s of SkewOnes(λ): λ^s·(−1)^{s/2}·E_{s−1} for even s, zero for odd s,
/// where E is the zigzag count.
fn skew_ones_c(lambda: &Scalar, s: usize) -> Scalar {
    if s % 2 == 1 {
        return Scalar::zero();
    }
    let mut v = Scalar::from_bigint(euler_number(s as u32 - 1));
    if (s / 2) % 2 == 1 {
        v = -v;
    }
    &lambda.powi(s as i64) * &v
}

/// A − λI.
pub fn apply_shift(a: &SquareMatrix, lambda: &Scalar) -> SquareMatrix {
    SquareMatrix::from_fn(a.n(), |i, j| {
        if i == j {
            a.get(i, j) - lambda
        } else {
            a.get(i, j).clone()
        }
    })
}

/// λA.
pub fn apply_scale(a: &SquareMatrix, lambda: &Scalar) -> SquareMatrix {
    SquareMatrix::from_fn(a.n(), |i, j| lambda * a.get(i, j))
}

#[derive(Clone, Debug, PartialEq)]
pub enum GroupElementError {
    LengthMismatch { perm: usize, diag: usize },
    NotAPermutation,
    SingularDiagonal { index: usize },
}

impl fmt::Display for GroupElementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElementError::LengthMismatch { perm, diag } => {
                write!(f, "permutation has {perm} entries but diagonal has {diag}")
            }
            GroupElementError::NotAPermutation => write!(f, "not a bijection on 0..n"),
            GroupElementError::SingularDiagonal { index } => {
                write!(f, "diagonal entry {index} is zero")
            }
        }
    }
}

impl core::error::Error for GroupElementError {}

/// An element P_σ·D of the scalar-permutation group: a permutation σ of
/// 0..n and an invertible diagonal. Conjugation by it permutes subset
/// labels and cancels diagonal factors around every cycle, so it preserves
/// all size-indexed coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    perm: Vec<usize>,
    diag: Vec<Scalar>,
}

impl GroupElement {
    pub fn new(perm: Vec<usize>, diag: Vec<Scalar>) -> Result<Self, GroupElementError> {
        if perm.len() != diag.len() {
            return Err(GroupElementError::LengthMismatch {
                perm: perm.len(),
                diag: diag.len(),
            });
        }
        let n = perm.len();
        let mut seen = alloc::vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(GroupElementError::NotAPermutation);
            }
            seen[p] = true;
        }
        if let Some(index) = diag.iter().position(|d| d.is_zero()) {
            return Err(GroupElementError::SingularDiagonal { index });
        }
        Ok(GroupElement { perm, diag })
    }

    pub fn identity(n: usize) -> Self {
        GroupElement {
            perm: (0..n).collect(),
            diag: alloc::vec![Scalar::one(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[Scalar] {
        &self.diag
    }

    /// The matrix P_σ·D itself: column i holds d_i at row σ(i).
    pub fn matrix(&self) -> SquareMatrix {
        let n = self.n();
        let mut m = SquareMatrix::from_fn(n, |_, _| Scalar::zero());
        for i in 0..n {
            m.set(self.perm[i], i, self.diag[i].clone());
        }
        m
    }

    pub fn inverse_matrix(&self) -> SquareMatrix {
        let n = self.n();
        let mut m = SquareMatrix::from_fn(n, |_, _| Scalar::zero());
        for i in 0..n {
            m.set(i, self.perm[i], &Scalar::one() / &self.diag[i]);
        }
        m
    }
}

/// (P_σ D)·A·(P_σ D)^{−1}: entry (σ(i), σ(j)) of the result is
/// d_i·a_{ij}/d_j.
pub fn conjugate(a: &SquareMatrix, g: &GroupElement) -> SquareMatrix {
    assert_eq!(a.n(), g.n(), "dimension mismatch");
    let n = a.n();
    let mut inv = alloc::vec![0usize; n];
    for i in 0..n {
        inv[g.perm[i]] = i;
    }
    SquareMatrix::from_fn(n, |r, c| {
        let i = inv[r];
        let j = inv[c];
        &(&g.diag[i] * a.get(i, j)) / &g.diag[j]
    })
}

#[derive(Clone, Debug)]
pub enum NormalizeError {
    NotScs,
    ZeroC2,
    /// Guard required by the definition; unreachable for exact inputs, since
    /// c_2 ≠ 0 forces a_{ij}a_{ji} = c_2 ≠ 0 for every off-diagonal pair.
    ZeroSuperdiagonal { row: usize },
    Matrix(MatrixError),
}

impl fmt::Display for NormalizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalizeError::NotScs => write!(f, "matrix coordinates are not size-indexed"),
            NormalizeError::ZeroC2 => write!(f, "normalization needs c_2 != 0"),
            NormalizeError::ZeroSuperdiagonal { row } => {
                write!(f, "superdiagonal entry ({row},{}) vanishes", row + 1)
            }
            NormalizeError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for NormalizeError {}

impl From<MatrixError> for NormalizeError {
    fn from(e: MatrixError) -> Self {
        NormalizeError::Matrix(e)
    }
}

/// The result of normalization: `matrix` = g·(scale·(A − shift·I))·g^{−1}
/// has zero diagonal, unit superdiagonal, subdiagonal −1, c_1 = 0 and
/// c_2 = −1.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub matrix: SquareMatrix,
    pub shift: Scalar,
    pub scale: Scalar,
    pub group: GroupElement,
    /// False when √(−c_2) forced a floating-point fallback.
    pub exact: bool,
}

/// Shift c_1 to zero, scale c_2 to −1, then conjugate by the diagonal that
/// makes the superdiagonal all ones. √(−c_2) is taken exactly when −c_2 is
/// a perfect square in the rationals or Gaussian rationals, otherwise as a
/// principal-branch floating value (and `exact` reports which happened).
pub fn normalize(a: &SquareMatrix) -> Result<Normalized, NormalizeError> {
    let n = a.n();
    let (_, c) = is_scs(a)?.ok_or(NormalizeError::NotScs)?;
    if n < 2 || c.get(2).is_zero() {
        return Err(NormalizeError::ZeroC2);
    }
    let shift = c.get(1).clone();
    let neg_c2 = -c.get(2).clone();
    let (root, exact) = match neg_c2.sqrt_exact() {
        Some(r) => (r, a.is_approx() == false),
        None => (neg_c2.sqrt_approx(), false),
    };
    let scale = &Scalar::one() / &root;
    let scaled = apply_scale(&apply_shift(a, &shift), &scale);
    let mut diag = Vec::with_capacity(n);
    diag.push(Scalar::one());
    for i in 1..n {
        let above = scaled.get(i - 1, i);
        if above.is_zero() {
            return Err(NormalizeError::ZeroSuperdiagonal { row: i - 1 });
        }
        let prev = diag[i - 1].clone();
        diag.push(&prev * above);
    }
    let group = GroupElement::new((0..n).collect(), diag).expect("nonzero by construction");
    let matrix = conjugate(&scaled, &group);
    Ok(Normalized {
        matrix,
        shift,
        scale,
        group,
        exact,
    })
}

/// Coordinate branch of a size-indexed matrix, read off after shifting c_1
/// to zero. First matching label wins, in the order below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScsClass {
    /// c_2 = … = c_n = 0: conjugate to strictly upper triangular.
    NilpotentLike,
    /// only c_n ≠ 0: a weighted n-cycle.
    NCycleLike,
    /// c_2 ≠ 0, c_3 = 0: scaled skew pattern (or the 4×4 exception).
    SkewLike,
    /// c_2·c_3 ≠ 0: shifted scaled Toeplitz.
    ToeplitzLike,
}

impl ScsClass {
    pub fn label(self) -> &'static str {
        match self {
            ScsClass::NilpotentLike => "nilpotent-like",
            ScsClass::NCycleLike => "ncycle-like",
            ScsClass::SkewLike => "skew-like",
            ScsClass::ToeplitzLike => "toeplitz-like",
        }
    }
}

#[derive(Clone, Debug)]
pub enum ClassifyError {
    NotScs,
    /// c_2 = 0 with an interior coordinate nonzero: impossible for a
    /// matrix's own coordinates, so reaching it means broken input
    /// (floating noise collapsing to exact zeros).
    Unrecognized,
    Matrix(MatrixError),
}

impl fmt::Display for ClassifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassifyError::NotScs => write!(f, "matrix coordinates are not size-indexed"),
            ClassifyError::Unrecognized => write!(f, "coordinates fit no classification branch"),
            ClassifyError::Matrix(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ClassifyError {}

impl From<MatrixError> for ClassifyError {
    fn from(e: MatrixError) -> Self {
        ClassifyError::Matrix(e)
    }
}

pub fn classify_scs(a: &SquareMatrix) -> Result<ScsClass, ClassifyError> {
    let (_, c) = is_scs(a)?.ok_or(ClassifyError::NotScs)?;
    Ok(classify_cycle_sums(&c).ok_or(ClassifyError::Unrecognized)?)
}

/// The branch label from a symmetrized cycle-sum vector; c_1 is ignored
/// (shifting it away changes nothing else).
pub fn classify_cycle_sums(c: &SymVector) -> Option<ScsClass> {
    let n = c.n();
    let zero_through = |lo: usize, hi: usize| (lo..=hi).all(|k| c.get(k).is_zero());
    if n < 2 || zero_through(2, n) {
        return Some(ScsClass::NilpotentLike);
    }
    if zero_through(2, n - 1) {
        return Some(ScsClass::NCycleLike);
    }
    if !c.get(2).is_zero() {
        return Some(if n < 3 || c.get(3).is_zero() {
            ScsClass::SkewLike
        } else {
            ScsClass::ToeplitzLike
        });
    }
    None
}
