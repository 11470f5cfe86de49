//! Square matrices over [`Scalar`] and the brute-force extraction of their
//! principal minors and cycle-sums, plus the subset-indexed and
//! size-indexed coordinate vector types.
//!
//! Cost envelopes are enforced, not silent: principal minors walk all 2^n
//! subsets (n ≤ 16), cycle-sums enumerate (|S|−1)! cyclic orders per subset
//! (n ≤ 12).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::scalar::{approx_eq, Scalar};

/// Which coordinate family a vector carries. Subset-level vectors hold
/// principal minors (PM) or cycle-sums (CS); their symmetrized counterparts
/// are written d and c.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordKind {
    Minors,
    CycleSums,
}

impl CoordKind {
    pub fn subset_label(self) -> &'static str {
        match self {
            CoordKind::Minors => "PM",
            CoordKind::CycleSums => "CS",
        }
    }

    pub fn sym_label(self) -> &'static str {
        match self {
            CoordKind::Minors => "d",
            CoordKind::CycleSums => "c",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum MatrixError {
    Shape {
        expected: usize,
        got: usize,
    },
    EmptyMatrix,
    DimensionCap {
        op: &'static str,
        n: usize,
        cap: usize,
    },
    /// The d↔c cross-check inside `is_scs` failed; indicates an internal
    /// arithmetic defect, never a property of the input.
    InternalInconsistency {
        k: usize,
    },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::Shape { expected, got } => {
                write!(f, "matrix shape mismatch: expected {expected} entries, got {got}")
            }
            MatrixError::EmptyMatrix => write!(f, "matrices must have n >= 1"),
            MatrixError::DimensionCap { op, n, cap } => {
                write!(f, "{op} supports n <= {cap}, got n = {n}")
            }
            MatrixError::InternalInconsistency { k } => {
                write!(f, "internal transform inconsistency at size {k}")
            }
        }
    }
}

impl core::error::Error for MatrixError {}

pub const MINORS_DIM_CAP: usize = 16;
pub const CYCLE_SUMS_DIM_CAP: usize = 12;

/// Dense square matrix, row major.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(MatrixError::Shape {
                    expected: n,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        assert!(n >= 1, "matrices must have n >= 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// True when any entry is an `Approx` scalar; such a matrix is treated
    /// as approximate throughout.
    pub fn is_approx(&self) -> bool {
        self.entries.iter().any(|e| !e.is_exact())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self::from_fn(self.n, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.n {
                acc = &acc + &(self.get(i, k) * other.get(k, j));
            }
            acc
        })
    }

    /// The principal submatrix on the subset encoded by `mask`
    /// (bit b set ⇔ index b+1 in 1-based terms is kept).
    pub fn principal_submatrix(&self, mask: u32) -> Self {
        let idx: Vec<usize> = (0..self.n).filter(|&b| mask >> b & 1 == 1).collect();
        assert!(!idx.is_empty(), "empty subset has no submatrix");
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    /// Exact determinant for exact matrices (rational Gaussian elimination
    /// over Q or Q(i)); partial-pivot double-precision elimination when any
    /// entry is approximate.
    pub fn determinant(&self) -> Scalar {
        if self.is_approx() {
            return Scalar::from_complex(determinant_complex(self));
        }
        let n = self.n;
        let mut m: Vec<Scalar> = self.entries.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !m[r * n + col].is_zero()) {
                Some(r) => r,
                None => return Scalar::zero(),
            };
            if pivot_row != col {
                for j in 0..n {
                    m.swap(pivot_row * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = m[col * n + col].clone();
            det = &det * &pivot;
            for r in col + 1..n {
                if m[r * n + col].is_zero() {
                    continue;
                }
                let factor = &m[r * n + col] / &pivot;
                for j in col..n {
                    let delta = &factor * &m[col * n + j];
                    m[r * n + j] = &m[r * n + j] - &delta;
                }
            }
        }
        det
    }

    /// All principal minors D_S, indexed by subset bitmask; D_∅ = 1.
    pub fn principal_minors(&self) -> Result<SubsetVector, MatrixError> {
        if self.n > MINORS_DIM_CAP {
            return Err(MatrixError::DimensionCap {
                op: "principal_minors",
                n: self.n,
                cap: MINORS_DIM_CAP,
            });
        }
        let mut values = Vec::with_capacity(1 << self.n);
        values.push(Scalar::one());
        for mask in 1..(1u32 << self.n) {
            values.push(self.principal_submatrix(mask).determinant());
        }
        SubsetVector::new(self.n, CoordKind::Minors, values)
    }

    /// All cycle-sums C_S by direct enumeration of the (|S|−1)! cyclic
    /// orders anchored at min S; C_∅ = 1.
    pub fn cycle_sums(&self) -> Result<SubsetVector, MatrixError> {
        if self.n > CYCLE_SUMS_DIM_CAP {
            return Err(MatrixError::DimensionCap {
                op: "cycle_sums",
                n: self.n,
                cap: CYCLE_SUMS_DIM_CAP,
            });
        }
        let mut values = Vec::with_capacity(1 << self.n);
        values.push(Scalar::one());
        for mask in 1..(1u32 << self.n) {
            values.push(self.cycle_sum(mask));
        }
        SubsetVector::new(self.n, CoordKind::CycleSums, values)
    }

    fn cycle_sum(&self, mask: u32) -> Scalar {
        let idx: Vec<usize> = (0..self.n).filter(|&b| mask >> b & 1 == 1).collect();
        let anchor = idx[0];
        if idx.len() == 1 {
            return self.get(anchor, anchor).clone();
        }
        let mut rest: Vec<usize> = idx[1..].to_vec();
        let mut total = Scalar::zero();
        for_each_permutation(&mut rest, &mut |perm| {
            let mut prod = self.get(anchor, perm[0]).clone();
            for w in perm.windows(2) {
                prod = &prod * self.get(w[0], w[1]);
            }
            prod = &prod * self.get(perm[perm.len() - 1], anchor);
            total = &total + &prod;
        });
        total
    }
}

fn determinant_complex(a: &SquareMatrix) -> Complex64 {
    let n = a.n;
    let mut m: Vec<Complex64> = a.entries.iter().map(|e| e.to_complex()).collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| {
                m[r * n + col]
                    .norm()
                    .partial_cmp(&m[s * n + col].norm())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
            .unwrap();
        if m[pivot_row * n + col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot_row != col {
            for j in 0..n {
                m.swap(pivot_row * n + j, col * n + j);
            }
            det = -det;
        }
        let pivot = m[col * n + col];
        det *= pivot;
        for r in col + 1..n {
            let factor = m[r * n + col] / pivot;
            for j in col..n {
                let delta = factor * m[col * n + j];
                m[r * n + j] -= delta;
            }
        }
    }
    det
}

/// Heap's algorithm; visits every permutation of `items` exactly once.
fn for_each_permutation<T: Copy>(items: &mut [T], f: &mut impl FnMut(&[T])) {
    let n = items.len();
    if n == 0 {
        return;
    }
    let mut counters = vec![0usize; n];
    f(items);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            f(items);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

/// A full assignment of one value per subset of [n], bitmask-indexed.
/// The value at the empty set is pinned to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct SubsetVector {
    n: usize,
    kind: CoordKind,
    values: Vec<Scalar>,
}

impl SubsetVector {
    pub fn new(n: usize, kind: CoordKind, values: Vec<Scalar>) -> Result<Self, MatrixError> {
        if n > MINORS_DIM_CAP {
            return Err(MatrixError::DimensionCap {
                op: "subset vectors",
                n,
                cap: MINORS_DIM_CAP,
            });
        }
        if values.len() != 1usize << n {
            return Err(MatrixError::Shape {
                expected: 1usize << n,
                got: values.len(),
            });
        }
        assert!(values[0].is_one(), "value at the empty set must be 1");
        Ok(SubsetVector { n, kind, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> CoordKind {
        self.kind
    }

    pub fn get(&self, mask: u32) -> &Scalar {
        &self.values[mask as usize]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(|v| v.is_exact())
    }
}

/// One value per subset size 0..=n, with v_0 = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct SymVector {
    kind: CoordKind,
    values: Vec<Scalar>,
}

impl SymVector {
    pub fn new(kind: CoordKind, values: Vec<Scalar>) -> Self {
        assert!(!values.is_empty(), "need at least v_0");
        assert!(values[0].is_one(), "v_0 must be 1");
        SymVector { kind, values }
    }

    /// Builds (1, v_1, ..., v_n) from the values for sizes 1..=n.
    pub fn from_tail(kind: CoordKind, tail: Vec<Scalar>) -> Self {
        let mut values = Vec::with_capacity(tail.len() + 1);
        values.push(Scalar::one());
        values.extend(tail);
        SymVector { kind, values }
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn kind(&self) -> CoordKind {
        self.kind
    }

    pub fn get(&self, k: usize) -> &Scalar {
        &self.values[k]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(|v| v.is_exact())
    }

    pub fn with_kind(&self, kind: CoordKind) -> SymVector {
        SymVector {
            kind,
            values: self.values.clone(),
        }
    }
}

/// Witness that two equal-size subsets carry different values, so the
/// vector does not symmetrize.
#[derive(Clone, Debug)]
pub struct SymmetryViolation {
    pub kind: CoordKind,
    pub size: usize,
    pub subset_a: u32,
    pub subset_b: u32,
    pub value_a: Scalar,
    pub value_b: Scalar,
}

impl fmt::Display for SymmetryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} values differ at size {}: subset {:#b} has {}, subset {:#b} has {}",
            self.kind.subset_label(),
            self.size,
            self.subset_a,
            self.value_a,
            self.subset_b,
            self.value_b
        )
    }
}

impl core::error::Error for SymmetryViolation {}

pub const SYMMETRIZE_DEFAULT_TOL: f64 = 1e-12;

/// Collapses a subset vector to one value per size. Exact vectors must agree
/// exactly; vectors containing approximate entries agree within
/// `SYMMETRIZE_DEFAULT_TOL` (absolute-or-relative).
pub fn symmetrize(v: &SubsetVector) -> Result<SymVector, SymmetryViolation> {
    symmetrize_with_tol(v, SYMMETRIZE_DEFAULT_TOL)
}

/// [`symmetrize`] with an explicit tolerance for the approximate case.
/// The reported violation is the first mismatch in increasing bitmask order,
/// compared against the lowest mask of its size.
pub fn symmetrize_with_tol(v: &SubsetVector, tol: f64) -> Result<SymVector, SymmetryViolation> {
    let exact = v.is_exact();
    let n = v.n();
    let mut out: Vec<Scalar> = Vec::with_capacity(n + 1);
    out.push(Scalar::one());
    for k in 1..=n {
        let reference_mask = (1u32 << k) - 1;
        out.push(v.get(reference_mask).clone());
    }
    for mask in 1..(1u32 << n) {
        let k = mask.count_ones() as usize;
        let reference_mask = (1u32 << k) - 1;
        let a = &out[k];
        let b = v.get(mask);
        let same = if exact { a == b } else { approx_eq(a, b, tol) };
        if !same {
            return Err(SymmetryViolation {
                kind: v.kind(),
                size: k,
                subset_a: reference_mask,
                subset_b: mask,
                value_a: a.clone(),
                value_b: b.clone(),
            });
        }
    }
    Ok(SymVector::new(v.kind(), out))
}

/// Checks the symmetrized-coordinate-set property: every principal minor and
/// every cycle-sum depends only on subset size. On success returns the pair
/// (d, c) and cross-checks one against the other through the transform.
pub fn is_scs(a: &SquareMatrix) -> Result<Option<(SymVector, SymVector)>, MatrixError> {
    let minors = a.principal_minors()?;
    let sums = a.cycle_sums()?;
    let d = match symmetrize(&minors) {
        Ok(d) => d,
        Err(_) => return Ok(None),
    };
    let c = match symmetrize(&sums) {
        Ok(c) => c,
        Err(_) => return Ok(None),
    };
    // dual-route check: d must equal the transform of c
    let d_via_c = crate::coordinates::d_from_c_sym(&c);
    for k in 0..=a.n() {
        let consistent = if d.is_exact() && d_via_c.is_exact() {
            d.get(k) == d_via_c.get(k)
        } else {
            approx_eq(d.get(k), d_via_c.get(k), SYMMETRIZE_DEFAULT_TOL.max(1e-9))
        };
        if !consistent {
            return Err(MatrixError::InternalInconsistency { k });
        }
    }
    Ok(Some((d, c)))
}

/// Renders a subset as {i,j,...} in 1-based labels, for error messages.
pub fn subset_label(mask: u32) -> String {
    let elems: Vec<String> = (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| format!("{}", b + 1))
        .collect();
    format!("{{{}}}", elems.join(","))
}
