//! Scalar arithmetic: exact rationals, exact Gaussian rationals, and a
//! double-precision complex fallback.
//!
//! Exactness is sticky in the downward direction only: rationals and Gaussian
//! rationals combine exactly, while any operation that touches an [`Scalar::Approx`]
//! value produces an `Approx` value.

use alloc::string::String;
use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A scalar value in one of three modes.
#[derive(Clone, Debug)]
pub enum Scalar {
    /// Arbitrary-precision rational, kept in lowest terms by `BigRational`.
    Rational(BigRational),
    /// Gaussian rational re + im·i. Invariant: im != 0 (real results demote
    /// to `Rational`), maintained by [`Scalar::gaussian`].
    Gaussian { re: BigRational, im: BigRational },
    /// Double-precision complex approximation.
    Approx(Complex64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn imaginary_unit() -> Self {
        Scalar::Gaussian {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_integer(v: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(v))
    }

    pub fn from_rational(v: BigRational) -> Self {
        Scalar::Rational(v)
    }

    /// Builds an exact Gaussian rational, demoting to `Rational` when the
    /// imaginary part is zero.
    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        if im.is_zero() {
            Scalar::Rational(re)
        } else {
            Scalar::Gaussian { re, im }
        }
    }

    pub fn approx(re: f64, im: f64) -> Self {
        Scalar::Approx(Complex64::new(re, im))
    }

    pub fn from_complex(z: Complex64) -> Self {
        Scalar::Approx(z)
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Approx(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian { .. } => false, // im != 0 by invariant
            Scalar::Approx(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Gaussian { .. } => false,
            Scalar::Approx(z) => z.re == 1.0 && z.im == 0.0,
        }
    }

    /// The rational value, when this scalar is exactly rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Numeric value as a complex double (lossy for large exact values).
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Rational(r) => Complex64::new(rational_to_f64(r), 0.0),
            Scalar::Gaussian { re, im } => {
                Complex64::new(rational_to_f64(re), rational_to_f64(im))
            }
            Scalar::Approx(z) => *z,
        }
    }

    /// |value| as a double.
    pub fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }

    /// Integer power with exact division for negative exponents.
    /// Panics on 0^negative.
    pub fn powi(&self, exp: i64) -> Scalar {
        if exp == 0 {
            return Scalar::one();
        }
        let positive = exp.unsigned_abs();
        let mut base = self.clone();
        let mut acc = Scalar::one();
        let mut e = positive;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        if exp < 0 {
            &Scalar::one() / &acc
        } else {
            acc
        }
    }

    /// Exact square root in Q or Q(i), when one exists. `Approx` input and
    /// non-square exact input give `None`. The root returned is the principal
    /// one: positive real part, or +i·r for negative rationals.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_negative() {
                    rational_sqrt(&-r.clone()).map(|s| Scalar::gaussian(BigRational::zero(), s))
                } else {
                    rational_sqrt(r).map(Scalar::Rational)
                }
            }
            Scalar::Gaussian { re, im } => {
                // (a+bi)^2 = u+vi solves a^2 = (u+m)/2, b = v/(2a) with
                // m = sqrt(u^2+v^2); all three roots must be rational.
                let norm2 = re * re + im * im;
                let m = rational_sqrt(&norm2)?;
                let a2 = (re + &m) / BigRational::from_integer(BigInt::from(2));
                let a = rational_sqrt(&a2)?;
                if a.is_zero() {
                    return None; // unreachable for im != 0, kept defensive
                }
                let b = im / (&a * BigRational::from_integer(BigInt::from(2)));
                Some(Scalar::gaussian(a, b))
            }
            Scalar::Approx(_) => None,
        }
    }

    /// Principal square root in double precision.
    pub fn sqrt_approx(&self) -> Scalar {
        Scalar::Approx(self.to_complex().sqrt())
    }

    /// Forgets exactness.
    pub fn to_approx(&self) -> Scalar {
        Scalar::Approx(self.to_complex())
    }
}

/// sqrt of a nonnegative rational, when rational: numerator and denominator
/// must both be perfect squares (the ratio is in lowest terms).
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    debug_assert!(!r.is_negative());
    let num_root = r.numer().sqrt();
    let den_root = r.denom().sqrt();
    if &(&num_root * &num_root) == r.numer() && &(&den_root * &den_root) == r.denom() {
        Some(BigRational::new(num_root, den_root))
    } else {
        None
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn add_impl(a: &Scalar, b: &Scalar) -> Scalar {
    use Scalar::*;
    match (a, b) {
        (Approx(_), _) | (_, Approx(_)) => Scalar::Approx(a.to_complex() + b.to_complex()),
        (Rational(x), Rational(y)) => Rational(x + y),
        _ => {
            let (ar, ai) = exact_parts(a);
            let (br, bi) = exact_parts(b);
            Scalar::gaussian(ar + br, ai + bi)
        }
    }
}

fn sub_impl(a: &Scalar, b: &Scalar) -> Scalar {
    add_impl(a, &neg_impl(b))
}

fn neg_impl(a: &Scalar) -> Scalar {
    use Scalar::*;
    match a {
        Rational(r) => Rational(-r),
        Gaussian { re, im } => Gaussian {
            re: -re,
            im: -im,
        },
        Approx(z) => Approx(-z),
    }
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    use Scalar::*;
    match (a, b) {
        (Approx(_), _) | (_, Approx(_)) => Scalar::Approx(a.to_complex() * b.to_complex()),
        (Rational(x), Rational(y)) => Rational(x * y),
        _ => {
            let (ar, ai) = exact_parts(a);
            let (br, bi) = exact_parts(b);
            Scalar::gaussian(&ar * &br - &ai * &bi, &ar * &bi + &ai * &br)
        }
    }
}

fn div_impl(a: &Scalar, b: &Scalar) -> Scalar {
    use Scalar::*;
    match (a, b) {
        (Approx(_), _) | (_, Approx(_)) => Scalar::Approx(a.to_complex() / b.to_complex()),
        (Rational(x), Rational(y)) => {
            assert!(!y.is_zero(), "exact division by zero");
            Rational(x / y)
        }
        _ => {
            let (ar, ai) = exact_parts(a);
            let (br, bi) = exact_parts(b);
            let denom = &br * &br + &bi * &bi;
            assert!(!denom.is_zero(), "exact division by zero");
            Scalar::gaussian(
                (&ar * &br + &ai * &bi) / &denom,
                (&ai * &br - &ar * &bi) / &denom,
            )
        }
    }
}

fn exact_parts(a: &Scalar) -> (BigRational, BigRational) {
    match a {
        Scalar::Rational(r) => (r.clone(), BigRational::zero()),
        Scalar::Gaussian { re, im } => (re.clone(), im.clone()),
        Scalar::Approx(_) => unreachable!("exact_parts on approx scalar"),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $impl_fn(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_impl(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_impl(&self)
    }
}

/// Structural equality. Exact variants compare exactly; `Approx` compares by
/// f64 equality; exact-vs-approx is always unequal (use [`approx_eq`] for
/// tolerance-based comparison).
impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        use Scalar::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a == b,
            (Gaussian { re: ar, im: ai }, Gaussian { re: br, im: bi }) => ar == br && ai == bi,
            (Approx(a), Approx(b)) => a.re == b.re && a.im == b.im,
            _ => false,
        }
    }
}

/// |a − b| ≤ tol·max(1, |a|, |b|), the absolute-or-relative criterion used
/// wherever approximate values are compared.
pub fn approx_eq(a: &Scalar, b: &Scalar, tol: f64) -> bool {
    if a.is_exact() && b.is_exact() {
        return a == b;
    }
    let (za, zb) = (a.to_complex(), b.to_complex());
    let scale = 1.0_f64.max(za.norm()).max(zb.norm());
    (za - zb).norm() <= tol * scale
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Gaussian { re, im } => {
                if re.is_zero() {
                    write!(f, "{}", imag_str(im))
                } else if im.is_negative() {
                    write!(f, "{}{}", re, imag_str(im))
                } else {
                    write!(f, "{}+{}", re, imag_str(im))
                }
            }
            Scalar::Approx(z) => write!(f, "~({}, {})", z.re, z.im),
        }
    }
}

fn imag_str(im: &BigRational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        let mut s = im.to_string();
        s.push('i');
        s
    }
}
