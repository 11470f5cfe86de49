//! The symmetrized assignment problem: decide whether a coordinate vector
//! is realizable by a matrix of a given class, and construct a verified
//! witness matrix when it is.
//!
//! Decisions are pure polynomial evaluation (exact for exact input, never
//! tolerance-dependent); only witnesses can go approximate, and only when
//! a square root falls outside the rationals and Gaussian rationals.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::coordinates::c_from_d_sym;
use crate::families::{
    apply_shift, classify_cycle_sums, family_matrix, FamilyKind, FamilySpec, GroupElement,
    ScsClass,
};
use crate::matrix::{
    symmetrize_with_tol, CoordKind, MatrixError, SquareMatrix, SymVector, CYCLE_SUMS_DIM_CAP,
};
use crate::relations::{generators, MatrixClass, RelationError, RelationSet};
use crate::scalar::Scalar;

/// Normalized-residual threshold shared by approximate decisions and
/// witness verification: far above double-precision noise at the supported
/// sizes, far below any wrong-branch construction.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum SpmapError {
    UnsupportedDimension {
        class: MatrixClass,
        n: usize,
        need: &'static str,
    },
    Relation(RelationError),
}

impl fmt::Display for SpmapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpmapError::UnsupportedDimension { class, n, need } => {
                write!(f, "{} decisions need {need}, got n = {n}", class.label())
            }
            SpmapError::Relation(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SpmapError {}

impl From<RelationError> for SpmapError {
    fn from(e: RelationError) -> Self {
        SpmapError::Relation(e)
    }
}

/// One relation branch's outcome on the input: satisfied, or the first
/// violated polynomial (rendered) with its residual value.
#[derive(Clone, Debug)]
pub struct BranchOutcome {
    pub branch: &'static str,
    pub satisfied: bool,
    pub violation: Option<(String, Scalar)>,
}

/// A realizability verdict, with per-branch detail. YES means some branch
/// of the class ideal vanished on the input.
#[derive(Clone, Debug)]
pub struct Decision {
    pub class: MatrixClass,
    pub n: usize,
    /// Coordinate system the caller supplied; internally everything runs
    /// on cycle-sums.
    pub input_kind: CoordKind,
    /// The input, converted to cycle-sums.
    pub c: SymVector,
    pub exact: bool,
    /// Tolerance used for zero tests; `None` for exact verdicts.
    pub tol: Option<f64>,
    pub branches: Vec<BranchOutcome>,
    pub verdict: bool,
}

impl Decision {
    pub fn satisfied_branch(&self) -> Option<&'static str> {
        self.branches.iter().find(|b| b.satisfied).map(|b| b.branch)
    }

    fn branch_satisfied(&self, name: &str) -> bool {
        self.branches.iter().any(|b| b.branch == name && b.satisfied)
    }
}

pub fn decide(class: MatrixClass, v: &SymVector) -> Result<Decision, SpmapError> {
    decide_with_tol(class, v, DEFAULT_TOL)
}

pub fn decide_with_tol(
    class: MatrixClass,
    v: &SymVector,
    tol: f64,
) -> Result<Decision, SpmapError> {
    let n = v.n();
    let need = match class {
        MatrixClass::Symmetric | MatrixClass::Skew => "n >= 2",
        MatrixClass::General => "n >= 3",
    };
    let min_n = if class == MatrixClass::General { 3 } else { 2 };
    if n < min_n {
        return Err(SpmapError::UnsupportedDimension { class, n, need });
    }
    let input_kind = v.kind();
    let c = match input_kind {
        CoordKind::CycleSums => v.clone(),
        CoordKind::Minors => c_from_d_sym(v),
    };
    let exact = c.is_exact();
    let branches = if n == 2 {
        alloc::vec![two_by_two_outcome(class, &c, exact, tol)]
    } else {
        let mut out = Vec::new();
        for set in generators(class, n)? {
            out.push(branch_outcome(&set, &c, exact, tol)?);
        }
        out
    };
    let verdict = branches.iter().any(|b| b.satisfied);
    Ok(Decision {
        class,
        n,
        input_kind,
        c,
        exact,
        tol: if exact { None } else { Some(tol) },
        branches,
        verdict,
    })
}

/// The base cases below the classification theorems: any pair (c_1, c_2)
/// is symmetric-realizable; skew needs c_1 = 0.
fn two_by_two_outcome(class: MatrixClass, c: &SymVector, exact: bool, tol: f64) -> BranchOutcome {
    match class {
        MatrixClass::Symmetric => BranchOutcome {
            branch: "symmetric",
            satisfied: true,
            violation: None,
        },
        MatrixClass::Skew => {
            let c1 = c.get(1);
            let ok = scalar_is_zero(c1, exact, tol, 1.0);
            BranchOutcome {
                branch: "skew",
                satisfied: ok,
                violation: if ok {
                    None
                } else {
                    Some((String::from("c_1"), c1.clone()))
                },
            }
        }
        MatrixClass::General => unreachable!("general class starts at n = 3"),
    }
}

fn branch_outcome(
    set: &RelationSet,
    c: &SymVector,
    exact: bool,
    tol: f64,
) -> Result<BranchOutcome, SpmapError> {
    let residuals = set.evaluate_scaled(c)?;
    let mut violation = None;
    for (poly, (residual, scale)) in set.polys().iter().zip(residuals) {
        if !scalar_is_zero(&residual, exact, tol, scale) {
            violation = Some((format!("{poly}"), residual));
            break;
        }
    }
    Ok(BranchOutcome {
        branch: set.branch(),
        satisfied: violation.is_none(),
        violation,
    })
}

fn scalar_is_zero(v: &Scalar, exact: bool, tol: f64, scale: f64) -> bool {
    if exact {
        v.is_zero()
    } else {
        v.magnitude() <= tol * scale.max(1.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMode {
    /// Take square roots exactly when the radicand is a perfect square in
    /// the rationals or Gaussian rationals; otherwise fall back to floating
    /// point.
    ExactPreferred,
    /// Go straight to floating point for every radical.
    ApproxOk,
}

/// How a witness was assembled: W = g·F·g^{−1} + shift·I for the family
/// matrix F. Scaling lives inside the family parameters (every family
/// carries its own scale slot), and the current recipes never conjugate,
/// but verification is independent of any of this.
#[derive(Clone, Debug)]
pub struct Construction {
    pub family: FamilySpec,
    pub shift: Scalar,
    pub conjugation: Option<GroupElement>,
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub matrix: SquareMatrix,
    pub construction: Construction,
    /// |c_k(W) − c_k| for k = 1..n.
    pub residuals: Vec<f64>,
    pub max_normalized_residual: f64,
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub struct ResidualEntry {
    pub k: usize,
    pub expected: Scalar,
    pub actual: Scalar,
    pub abs_residual: f64,
    pub exact_match: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub entries: Vec<ResidualEntry>,
    /// Set when the candidate's own cycle-sums failed to symmetrize.
    pub symmetry_failure: Option<String>,
    pub max_normalized: f64,
    pub pass: bool,
    /// Everything on both sides stayed exact.
    pub exact: bool,
}

#[derive(Debug)]
pub enum WitnessError {
    Unsupported(SpmapError),
    NotRealizable(Box<Decision>),
    /// The vector sits on the degenerate locus (c_3² = 4c_2³ with
    /// c_2c_3 ≠ 0) but fails the symmetric relations. Unreachable for
    /// exact realizable input, where that locus is exactly the symmetric
    /// one; floating noise can land here.
    TangentialDegenerate { c2: Scalar, c3: Scalar },
    VerificationFailed(Box<VerifyReport>),
    DimensionCap { n: usize, cap: usize },
    Matrix(MatrixError),
    Internal(&'static str),
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::Unsupported(e) => write!(f, "{e}"),
            WitnessError::NotRealizable(d) => {
                let detail = d
                    .branches
                    .iter()
                    .filter_map(|b| b.violation.as_ref())
                    .map(|(p, r)| format!("{p} = {r}"))
                    .collect::<Vec<_>>()
                    .join("; ");
                write!(f, "vector is not realizable: {detail}")
            }
            WitnessError::TangentialDegenerate { c2, c3 } => write!(
                f,
                "degenerate branch point (c_2 = {c2}, c_3 = {c3}) outside the symmetric locus"
            ),
            WitnessError::VerificationFailed(r) => write!(
                f,
                "constructed matrix failed verification (max normalized residual {:e})",
                r.max_normalized
            ),
            WitnessError::DimensionCap { n, cap } => {
                write!(f, "witness verification supports n <= {cap}, got n = {n}")
            }
            WitnessError::Matrix(e) => write!(f, "{e}"),
            WitnessError::Internal(msg) => write!(f, "internal contract violation: {msg}"),
        }
    }
}

impl core::error::Error for WitnessError {}

impl From<SpmapError> for WitnessError {
    fn from(e: SpmapError) -> Self {
        WitnessError::Unsupported(e)
    }
}

impl From<MatrixError> for WitnessError {
    fn from(e: MatrixError) -> Self {
        WitnessError::Matrix(e)
    }
}

pub fn witness(
    class: MatrixClass,
    v: &SymVector,
    mode: WitnessMode,
) -> Result<Witness, WitnessError> {
    witness_with_tol(class, v, mode, DEFAULT_TOL)
}

pub fn witness_with_tol(
    class: MatrixClass,
    v: &SymVector,
    mode: WitnessMode,
    tol: f64,
) -> Result<Witness, WitnessError> {
    let n = v.n();
    if n > CYCLE_SUMS_DIM_CAP {
        return Err(WitnessError::DimensionCap {
            n,
            cap: CYCLE_SUMS_DIM_CAP,
        });
    }
    let decision = decide_with_tol(class, v, tol)?;
    if !decision.verdict {
        return Err(WitnessError::NotRealizable(Box::new(decision)));
    }
    let (family, shift) = construct(&decision, mode, tol)?;
    let base = family_matrix(&family);
    let matrix = if shift.is_zero() {
        base
    } else {
        apply_shift(&base, &-shift.clone())
    };
    let report = verify_witness(&matrix, &decision.c, tol)?;
    if !report.pass {
        return Err(WitnessError::VerificationFailed(Box::new(report)));
    }
    Ok(Witness {
        matrix,
        construction: Construction {
            family,
            shift,
            conjugation: None,
        },
        residuals: report.entries.iter().map(|e| e.abs_residual).collect(),
        max_normalized_residual: report.max_normalized,
        exact: report.exact,
    })
}

fn sqrt_by_mode(v: &Scalar, mode: WitnessMode) -> Scalar {
    match mode {
        WitnessMode::ExactPreferred => v.sqrt_exact().unwrap_or_else(|| v.sqrt_approx()),
        WitnessMode::ApproxOk => v.sqrt_approx(),
    }
}

/// Picks the family and the diagonal shift from a YES decision. All
/// branch tests reuse the decision's arithmetic mode (exact or toleranced).
fn construct(
    decision: &Decision,
    mode: WitnessMode,
    tol: f64,
) -> Result<(FamilySpec, Scalar), WitnessError> {
    let c = &decision.c;
    let n = decision.n;
    let exact = decision.exact;
    let c1 = c.get(1).clone();
    let zero = |v: &Scalar, scale: f64| scalar_is_zero(v, exact, tol, scale);
    let spec = |kind| FamilySpec::new(n, kind).map_err(|_| WitnessError::Internal("family spec"));
    match decision.class {
        MatrixClass::Symmetric => {
            let c2 = c.get(2);
            if zero(c2, 1.0) {
                // realizable symmetric vectors with c_2 = 0 have every
                // higher coordinate zero; a scalar matrix does it
                return Ok((spec(FamilyKind::Diagonal { mu: c1 })?, Scalar::zero()));
            }
            let lambda = if n == 2 {
                sqrt_by_mode(c2, mode)
            } else {
                // c_2 = λ², c_3 = 2λ³ force λ = c_3/(2c_2): no radicals
                c.get(3) / &(&Scalar::from_integer(2) * c2)
            };
            let mu = &c1 - &lambda;
            Ok((spec(FamilyKind::Ones { lambda, mu })?, Scalar::zero()))
        }
        MatrixClass::Skew => {
            let lambda = sqrt_by_mode(&-c.get(2).clone(), mode);
            let kind = if n == 4 && !decision.branch_satisfied("skew-ones") {
                FamilyKind::Exceptional4 { lambda }
            } else {
                FamilyKind::SkewOnes { lambda }
            };
            // no shift: adding c_1·I would break skew-symmetry, and the
            // decision already required c_1 = 0
            Ok((spec(kind)?, Scalar::zero()))
        }
        MatrixClass::General => {
            let class = classify_cycle_sums(c)
                .ok_or(WitnessError::Internal("realizable vector fit no branch"))?;
            match class {
                ScsClass::NilpotentLike => {
                    Ok((spec(FamilyKind::Diagonal { mu: c1 })?, Scalar::zero()))
                }
                ScsClass::NCycleLike => {
                    Ok((spec(FamilyKind::NCycle { w: c.get(n).clone() })?, c1))
                }
                ScsClass::SkewLike => {
                    let lambda = sqrt_by_mode(&-c.get(2).clone(), mode);
                    let kind = if n == 4 && decision.branch_satisfied("general-exceptional") {
                        FamilyKind::Exceptional4 { lambda }
                    } else {
                        FamilyKind::SkewOnes { lambda }
                    };
                    Ok((spec(kind)?, c1))
                }
                ScsClass::ToeplitzLike => {
                    let c2 = c.get(2);
                    let c3 = c.get(3);
                    // disc = t² + 4 vanishes iff 4c_2³ − c_3² does, which
                    // is the leading symmetric binomial
                    let degenerate = {
                        let g = &(&Scalar::from_integer(4) * &c2.powi(3)) - &(c3 * c3);
                        let m2 = c2.magnitude();
                        let m3 = c3.magnitude();
                        zero(&g, 4.0 * m2 * m2 * m2 + m3 * m3)
                    };
                    if degenerate {
                        let sym = decide_with_tol(MatrixClass::Symmetric, c, tol)?;
                        if !sym.verdict {
                            return Err(WitnessError::TangentialDegenerate {
                                c2: c2.clone(),
                                c3: c3.clone(),
                            });
                        }
                        let lambda = c3 / &(&Scalar::from_integer(2) * c2);
                        let mu = &c1 - &lambda;
                        return Ok((spec(FamilyKind::Ones { lambda, mu })?, Scalar::zero()));
                    }
                    let lambda = sqrt_by_mode(&-c2.clone(), mode);
                    let t = c3 / &lambda.powi(3);
                    let disc = &(&t * &t) + &Scalar::from_integer(4);
                    let root = sqrt_by_mode(&disc, mode);
                    // "+" root; the "−" root is −1/x and builds the mirror
                    // witness
                    let x = &(&t + &root) / &Scalar::from_integer(2);
                    Ok((spec(FamilyKind::Toeplitz { lambda, x })?, c1))
                }
            }
        }
    }
}

/// Independent check of a candidate matrix against a target vector:
/// brute-force cycle-sums, symmetrize, compare entry by entry. Exact data
/// must match exactly; anything floating passes iff the worst normalized
/// residual stays within `tol`.
pub fn verify_witness(
    candidate: &SquareMatrix,
    target: &SymVector,
    tol: f64,
) -> Result<VerifyReport, MatrixError> {
    let n = candidate.n();
    if n != target.n() {
        return Err(MatrixError::Shape {
            expected: target.n(),
            got: n,
        });
    }
    let target_c = match target.kind() {
        CoordKind::CycleSums => target.clone(),
        CoordKind::Minors => c_from_d_sym(target),
    };
    let sums = candidate.cycle_sums()?;
    let sym_tol = tol.max(crate::matrix::SYMMETRIZE_DEFAULT_TOL);
    let (actual, symmetry_failure) = match symmetrize_with_tol(&sums, sym_tol) {
        Ok(sym) => (sym, None),
        Err(violation) => {
            // keep reporting per-size values from the reference subsets
            let tail: Vec<Scalar> = (1..=n)
                .map(|k| sums.get((1u32 << k) - 1).clone())
                .collect();
            (
                SymVector::from_tail(CoordKind::CycleSums, tail),
                Some(format!("{violation}")),
            )
        }
    };
    let mut entries = Vec::with_capacity(n);
    let mut max_normalized = 0.0f64;
    let mut all_exact = true;
    let mut all_match = true;
    for k in 1..=n {
        let expected = target_c.get(k).clone();
        let actual_k = actual.get(k).clone();
        let exact_pair = expected.is_exact() && actual_k.is_exact();
        let exact_match = exact_pair && expected == actual_k;
        let abs_residual = if exact_match {
            0.0
        } else {
            (&actual_k - &expected).magnitude()
        };
        let normalized = abs_residual / expected.magnitude().max(1.0);
        max_normalized = max_normalized.max(normalized);
        all_exact &= exact_pair;
        all_match &= exact_match;
        entries.push(ResidualEntry {
            k,
            expected,
            actual: actual_k,
            abs_residual,
            exact_match,
        });
    }
    let pass = symmetry_failure.is_none()
        && if all_exact {
            all_match
        } else {
            max_normalized <= tol
        };
    Ok(VerifyReport {
        entries,
        symmetry_failure,
        max_normalized,
        pass,
        exact: all_exact && all_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::family_cycle_sums;

    fn int(v: i64) -> Scalar {
        Scalar::from_integer(v)
    }

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn sym_c(tail: &[Scalar]) -> SymVector {
        SymVector::from_tail(CoordKind::CycleSums, tail.to_vec())
    }

    fn sym_d(tail: &[Scalar]) -> SymVector {
        SymVector::from_tail(CoordKind::Minors, tail.to_vec())
    }

    #[test]
    fn symmetric_factorial_vector_accepted() {
        let c = sym_c(&[int(0), int(1), int(2), int(6)]);
        let dec = decide(MatrixClass::Symmetric, &c).unwrap();
        assert!(dec.verdict);
        assert!(dec.exact);
        assert_eq!(dec.tol, None);
        let w = witness(MatrixClass::Symmetric, &c, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact);
        assert_eq!(w.construction.family.kind(), &FamilyKind::Ones {
            lambda: int(1),
            mu: int(-1),
        });
        assert!(w.residuals.iter().all(|&r| r == 0.0));
    }

    #[test]
    fn symmetric_ones_plus_two_witness() {
        let c = sym_c(&[int(3), int(1), int(2), int(6)]);
        let w = witness(MatrixClass::Symmetric, &c, WitnessMode::ExactPreferred).unwrap();
        // W = ones + 2I
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { int(3) } else { int(1) };
                assert_eq!(w.matrix.get(i, j), &want);
            }
        }
        assert!(w.exact);
    }

    #[test]
    fn symmetric_rejection_names_the_binomial() {
        let c = sym_c(&[int(0), int(1), int(3), int(6)]);
        let dec = decide(MatrixClass::Symmetric, &c).unwrap();
        assert!(!dec.verdict);
        let (poly, residual) = dec.branches[0].violation.as_ref().unwrap();
        assert_eq!(poly, "4c_2^3 - c_3^2");
        assert_eq!(residual, &int(-5));
        assert!(matches!(
            witness(MatrixClass::Symmetric, &c, WitnessMode::ExactPreferred),
            Err(WitnessError::NotRealizable(_))
        ));
    }

    #[test]
    fn symmetric_diagonal_branch() {
        let c = sym_c(&[q(5, 3), int(0), int(0), int(0), int(0)]);
        let w = witness(MatrixClass::Symmetric, &c, WitnessMode::ExactPreferred).unwrap();
        assert_eq!(
            w.construction.family.kind(),
            &FamilyKind::Diagonal { mu: q(5, 3) }
        );
        assert!(w.exact);
    }

    #[test]
    fn symmetric_n2_base_case() {
        // perfect square c_2: exact witness
        let c = sym_c(&[int(1), int(4)]);
        let w = witness(MatrixClass::Symmetric, &c, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact);
        assert_eq!(w.matrix.get(0, 1), &int(2));
        assert_eq!(w.matrix.get(0, 0), &int(1));
        // non-square c_2: approx witness within tolerance
        let c2 = sym_c(&[int(1), int(2)]);
        let w2 = witness(MatrixClass::Symmetric, &c2, WitnessMode::ExactPreferred).unwrap();
        assert!(!w2.exact);
        assert!(w2.max_normalized_residual <= DEFAULT_TOL);
    }

    #[test]
    fn skew_accepts_zigzag_vector_n6() {
        let c = sym_c(&[int(0), int(-1), int(0), int(2), int(0), int(-16)]);
        let dec = decide(MatrixClass::Skew, &c).unwrap();
        assert!(dec.verdict, "{:?}", dec.branches);
        let w = witness(MatrixClass::Skew, &c, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact);
        assert_eq!(
            w.construction.family.kind(),
            &FamilyKind::SkewOnes { lambda: int(1) }
        );
    }

    #[test]
    fn skew_rejects_nonzero_c1_and_odd() {
        let c = sym_c(&[int(1), int(-1), int(0), int(2)]);
        assert!(!decide(MatrixClass::Skew, &c).unwrap().verdict);
        let c2 = sym_c(&[int(0), int(-1), int(1), int(2)]);
        let dec = decide(MatrixClass::Skew, &c2).unwrap();
        assert!(!dec.verdict);
        let (poly, _) = dec.branches[0].violation.as_ref().unwrap();
        assert_eq!(poly, "c_3");
    }

    #[test]
    fn skew_n4_branches_pick_families() {
        // c_4 = 2c_2²: scaled skew-ones
        let ones = sym_c(&[int(0), int(-1), int(0), int(2)]);
        let w = witness(MatrixClass::Skew, &ones, WitnessMode::ExactPreferred).unwrap();
        assert_eq!(
            w.construction.family.kind(),
            &FamilyKind::SkewOnes { lambda: int(1) }
        );
        // c_4 = −6c_2²: the exceptional matrix
        let exc = sym_c(&[int(0), int(-1), int(0), int(-6)]);
        let w2 = witness(MatrixClass::Skew, &exc, WitnessMode::ExactPreferred).unwrap();
        assert_eq!(
            w2.construction.family.kind(),
            &FamilyKind::Exceptional4 { lambda: int(1) }
        );
        assert!(w2.exact);
        // neither: NO
        let bad = sym_c(&[int(0), int(-1), int(0), int(5)]);
        assert!(!decide(MatrixClass::Skew, &bad).unwrap().verdict);
    }

    #[test]
    fn skew_irrational_radical_goes_approx() {
        // λ = √(−3)·i: not Gaussian-rational, so the witness floats
        let c = sym_c(&[int(0), int(3), int(0), int(18)]);
        let dec = decide(MatrixClass::Skew, &c).unwrap();
        assert!(dec.verdict);
        let w = witness(MatrixClass::Skew, &c, WitnessMode::ExactPreferred).unwrap();
        assert!(!w.exact);
        assert!(w.max_normalized_residual <= DEFAULT_TOL);
        let w2 = witness(MatrixClass::Skew, &c, WitnessMode::ApproxOk).unwrap();
        assert!(!w2.exact);
        assert!(w2.max_normalized_residual <= DEFAULT_TOL);
    }

    #[test]
    fn skew_gaussian_radical_stays_exact() {
        // c_2 = 3/4 > 0 needs λ² = −3/4... not a square; c_2 = 9/4 gives
        // λ = (3/2)i which is Gaussian-rational
        let c = sym_c(&[int(0), q(9, 4), int(0), q(81, 8)]);
        let w = witness(MatrixClass::Skew, &c, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact, "λ = 3i/2 stays in the Gaussian rationals");
        assert!(w.matrix.get(0, 1).is_exact());
    }

    #[test]
    fn general_toeplitz_vector_roundtrip_exact() {
        let c = sym_c(&[int(0), int(-1), q(3, 2), q(-1, 4), q(-69, 8)]);
        let dec = decide(MatrixClass::General, &c).unwrap();
        assert!(dec.verdict);
        let w = witness(MatrixClass::General, &c, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact);
        match w.construction.family.kind() {
            FamilyKind::Toeplitz { lambda, x } => {
                assert_eq!(lambda, &int(1));
                assert_eq!(x, &int(2));
            }
            other => panic!("expected toeplitz, got {other:?}"),
        }
        // perturbing c_5 flips the verdict and names a violated minor
        let bad = sym_c(&[int(0), int(-1), q(3, 2), q(-1, 4), q(-61, 8)]);
        let dec2 = decide(MatrixClass::General, &bad).unwrap();
        assert!(!dec2.verdict);
        assert!(dec2.branches[0].violation.is_some());
    }

    #[test]
    fn general_ncycle_and_diagonal_branches() {
        let c = sym_c(&[int(2), int(0), int(0), int(7)]);
        let w = witness(MatrixClass::General, &c, WitnessMode::ExactPreferred).unwrap();
        assert_eq!(w.construction.family.kind(), &FamilyKind::NCycle { w: int(7) });
        assert_eq!(w.construction.shift, int(2));
        assert!(w.exact);
        let diag = sym_c(&[q(5, 3), int(0), int(0), int(0)]);
        let wd = witness(MatrixClass::General, &diag, WitnessMode::ExactPreferred).unwrap();
        assert_eq!(
            wd.construction.family.kind(),
            &FamilyKind::Diagonal { mu: q(5, 3) }
        );
        assert!(wd.exact);
    }

    #[test]
    fn general_skew_like_with_shift() {
        // ĉ = (0, −4, 0, 32) with c_1 = 1: c_4 = 2c_2², skew-ones shape
        let c = sym_c(&[int(1), int(-4), int(0), int(32)]);
        let w = witness(MatrixClass::General, &c, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact);
        assert_eq!(
            w.construction.family.kind(),
            &FamilyKind::SkewOnes { lambda: int(2) }
        );
        assert_eq!(w.construction.shift, int(1));
        assert_eq!(w.matrix.get(0, 0), &int(1));
        assert_eq!(w.matrix.get(0, 1), &int(2));
    }

    #[test]
    fn general_exceptional_curve_from_minor_coordinates() {
        // d = (1, 0, b, 0, 9b²) at b = 4 converts to c = (0, −4, 0, −96)
        let d = sym_d(&[int(0), int(4), int(0), int(144)]);
        let dec = decide(MatrixClass::General, &d).unwrap();
        assert!(dec.verdict);
        assert_eq!(dec.input_kind, CoordKind::Minors);
        assert_eq!(
            dec.c.values(),
            &[int(1), int(0), int(-4), int(0), int(-96)]
        );
        assert!(dec.branch_satisfied("general-exceptional"));
        let w = witness(MatrixClass::General, &d, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact);
        assert_eq!(
            w.construction.family.kind(),
            &FamilyKind::Exceptional4 { lambda: int(2) }
        );
    }

    #[test]
    fn general_n3_always_yes() {
        for tail in [
            [int(1), int(2), int(3)],
            [int(0), int(0), int(0)],
            [q(-7, 2), int(5), q(1, 9)],
        ] {
            let c = sym_c(&tail);
            let dec = decide(MatrixClass::General, &c).unwrap();
            assert!(dec.verdict);
            let w = witness(MatrixClass::General, &c, WitnessMode::ExactPreferred).unwrap();
            assert!(w.max_normalized_residual <= DEFAULT_TOL);
        }
    }

    #[test]
    fn degenerate_disc_falls_back_to_symmetric_witness() {
        // d_k = k+1 is the tangent-line vector: disc = 0 and the symmetric
        // relations hold, giving ones + I exactly
        let d = sym_d(&[int(2), int(3), int(4), int(5), int(6)]);
        let dec = decide(MatrixClass::General, &d).unwrap();
        assert!(dec.verdict);
        let w = witness(MatrixClass::General, &d, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact);
        assert_eq!(w.construction.family.kind(), &FamilyKind::Ones {
            lambda: int(1),
            mu: int(1),
        });
        for i in 0..5 {
            for j in 0..5 {
                let want = if i == j { int(2) } else { int(1) };
                assert_eq!(w.matrix.get(i, j), &want);
            }
        }
    }

    #[test]
    fn decision_ignores_c1_for_general_class() {
        let base = sym_c(&[int(0), int(-1), q(3, 2), q(-1, 4), q(-69, 8)]);
        let bumped = sym_c(&[q(11, 7), int(-1), q(3, 2), q(-1, 4), q(-69, 8)]);
        let d1 = decide(MatrixClass::General, &base).unwrap();
        let d2 = decide(MatrixClass::General, &bumped).unwrap();
        assert_eq!(d1.verdict, d2.verdict);
        assert_eq!(d1.satisfied_branch(), d2.satisfied_branch());
    }

    #[test]
    fn approx_input_uses_tolerance() {
        let jitter = 3e-13;
        let c = sym_c(&[
            Scalar::approx(0.0, 0.0),
            Scalar::approx(-1.0 + jitter, 0.0),
            Scalar::approx(1.5, 0.0),
            Scalar::approx(-0.25 - jitter, 0.0),
            Scalar::approx(-8.625 + jitter, 0.0),
        ]);
        let dec = decide(MatrixClass::General, &c).unwrap();
        assert!(!dec.exact);
        assert_eq!(dec.tol, Some(DEFAULT_TOL));
        assert!(dec.verdict, "jitter below tolerance still decides YES");
        // far-off perturbation flips it
        let bad = sym_c(&[
            Scalar::approx(0.0, 0.0),
            Scalar::approx(-1.0, 0.0),
            Scalar::approx(1.5, 0.0),
            Scalar::approx(-0.25, 0.0),
            Scalar::approx(-8.625 + 1e-3, 0.0),
        ]);
        assert!(!decide(MatrixClass::General, &bad).unwrap().verdict);
    }

    #[test]
    fn witness_dimension_cap() {
        let tail: Vec<Scalar> = (0..13).map(|_| int(0)).collect();
        let c = sym_c(&tail);
        assert!(matches!(
            witness(MatrixClass::General, &c, WitnessMode::ExactPreferred),
            Err(WitnessError::DimensionCap { cap: 12, .. })
        ));
        // decide itself has no such cap
        assert!(decide(MatrixClass::General, &c).unwrap().verdict);
    }

    #[test]
    fn unsupported_dimensions_error() {
        let c = sym_c(&[int(0), int(1)]);
        assert!(decide(MatrixClass::General, &c).is_err());
        let tiny = sym_c(&[int(3)]);
        assert!(decide(MatrixClass::Symmetric, &tiny).is_err());
        // skew n=2 works
        let skew2 = sym_c(&[int(0), int(-9)]);
        let w = witness(MatrixClass::Skew, &skew2, WitnessMode::ExactPreferred).unwrap();
        assert!(w.exact); // λ = 3
        assert_eq!(w.matrix.get(0, 1), &int(3));
    }

    #[test]
    fn verify_catches_corrupted_witness() {
        let c = family_cycle_sums(
            &FamilySpec::new(5, FamilyKind::Toeplitz { lambda: int(1), x: int(2) }).unwrap(),
        );
        let good = family_matrix(
            &FamilySpec::new(5, FamilyKind::Toeplitz { lambda: int(1), x: int(2) }).unwrap(),
        );
        let report = verify_witness(&good, &c, DEFAULT_TOL).unwrap();
        assert!(report.pass);
        assert!(report.exact);
        assert_eq!(report.max_normalized, 0.0);
        let mut bad = good.clone();
        bad.set(0, 1, int(2));
        let report2 = verify_witness(&bad, &c, DEFAULT_TOL).unwrap();
        assert!(!report2.pass);
        // either an entry mismatches or symmetry itself broke; both count
        assert!(report2.symmetry_failure.is_some() || report2.entries.iter().any(|e| !e.exact_match));
    }

    #[test]
    fn verify_reports_located_residual() {
        let c = sym_c(&[int(0), int(-1), int(0), int(2)]);
        let skew = family_matrix(
            &FamilySpec::new(4, FamilyKind::SkewOnes { lambda: int(1) }).unwrap(),
        );
        let target_off = sym_c(&[int(0), int(-1), int(0), int(3)]);
        let report = verify_witness(&skew, &target_off, DEFAULT_TOL).unwrap();
        assert!(!report.pass);
        let bad_entry = report.entries.iter().find(|e| !e.exact_match).unwrap();
        assert_eq!(bad_entry.k, 4);
        assert_eq!(bad_entry.expected, int(3));
        assert_eq!(bad_entry.actual, int(2));
        let ok = verify_witness(&skew, &c, DEFAULT_TOL).unwrap();
        assert!(ok.pass);
    }
}
