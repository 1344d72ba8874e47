//! Dickson polynomials of the first kind `D_n(x, a)` and second kind `E_n(x, a)`.
//!
//! Both satisfy `P_n = x P_{n-1} - a P_{n-2}`; the first kind starts from
//! `D_0 = 2, D_1 = x`, the second from `E_0 = 1, E_1 = x`. The recurrence is the
//! evaluator; the explicit `j`-sums are kept to check the summand shape used in
//! the generating functions.

use num_complex::Complex;
use num_traits::{FromPrimitive, Num, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::summation::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DicksonKind {
    First,
    Second,
}

/// Recurrence evaluation of `D_n(x, a)` or `E_n(x, a)` over any ring.
pub fn dickson_eval<T: Clone + Num>(kind: DicksonKind, n: usize, x: &T, a: &T) -> T {
    let p0 = match kind {
        DicksonKind::First => T::one() + T::one(),
        DicksonKind::Second => T::one(),
    };
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, x.clone());
    for _ in 1..n {
        let next = x.clone() * cur.clone() - a.clone() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Binomial coefficient `C(n, k)` in exact integer arithmetic.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Integer weight of `x^{n-2j} (-a)^j` in the explicit sum:
/// `n/(n-j) C(n-j, j)` (first kind, `n >= 1`) or `C(n-j, j)` (second kind).
pub fn explicit_weight(kind: DicksonKind, n: u64, j: u64) -> u128 {
    match kind {
        DicksonKind::Second => binomial(n - j, j),
        // n/(n-j) C(n-j, j) = C(n-j, j) + C(n-j-1, j-1)
        DicksonKind::First if j == 0 => 1,
        DicksonKind::First => binomial(n - j, j) + binomial(n - j - 1, j - 1),
    }
}

/// Explicit `j`-sum form. `D_0 = 2` by definition.
pub fn dickson_explicit<T: Clone + Num + FromPrimitive>(kind: DicksonKind, n: usize, x: &T, a: &T) -> T {
    if n == 0 {
        return dickson_eval(kind, 0, x, a);
    }
    let neg_a = T::zero() - a.clone();
    let mut acc = T::zero();
    for j in 0..=n / 2 {
        let w = T::from_u128(explicit_weight(kind, n as u64, j as u64)).expect("weight fits");
        acc = acc + w * ring_pow(&neg_a, j) * ring_pow(x, n - 2 * j);
    }
    acc
}

fn ring_pow<T: Clone + Num>(base: &T, e: usize) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

/// Parameters of the classical generating functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GFParams<T> {
    pub x: Complex<T>,
    pub a: Complex<T>,
    pub z: Complex<T>,
}

impl<T: Real> GFParams<T> {
    /// Validates `|Re x|, |Re z|, |Re a| < 1` and the numeric region `|z| (|x| + 2) < 1`.
    pub fn new(x: Complex<T>, a: Complex<T>, z: Complex<T>) -> Result<Self> {
        let one = T::one();
        if x.re.abs() >= one || z.re.abs() >= one || a.re.abs() >= one {
            return Err(Error::Domain("generating-function parameters need |Re x|, |Re z|, |Re a| < 1".into()));
        }
        if z.norm() * (x.norm() + T::lit(2.0)) >= one {
            return Err(Error::Domain("generating-function series needs |z| (|x| + 2) < 1".into()));
        }
        Ok(Self { x, a, z })
    }

    /// Unvalidated parameters (the rational closed forms make sense everywhere off their poles).
    pub fn unchecked(x: Complex<T>, a: Complex<T>, z: Complex<T>) -> Self {
        Self { x, a, z }
    }

    /// Geometric rate `|z| (|x| + 2|a| + 1)` bounding the series tail.
    pub fn tail_ratio(&self) -> T {
        self.z.norm() * (self.x.norm() + T::lit(2.0) * self.a.norm() + T::one())
    }
}

/// Closed rational form of the generating function:
/// `z(x - 2az) / (az^2 - xz + 1)` (first kind, without the `n = 0` term) or
/// `1 / (az^2 - xz + 1)` (second kind).
pub fn gf_rational<T: Real>(kind: DicksonKind, p: &GFParams<T>) -> Result<Complex<T>> {
    let GFParams { x, a, z } = *p;
    let den = a * z * z - x * z + Complex::new(T::one(), T::zero());
    if den.is_zero() {
        return Err(Error::Pole("generating function denominator a z^2 - x z + 1 vanishes".into()));
    }
    Ok(match kind {
        DicksonKind::First => z * (x - a * z * T::lit(2.0)) / den,
        DicksonKind::Second => den.inv(),
    })
}

/// Partial sum `n = 0..=n_max` of the double series, summand as written in the
/// generating function (first-kind `n = 0` term is zero).
pub fn gf_partial_sum<T: Real>(kind: DicksonKind, p: &GFParams<T>, n_max: usize) -> Complex<T> {
    let GFParams { x, a, z } = *p;
    let mut sum = CompensatedSum::new();
    let mut zn = Complex::new(T::one(), T::zero());
    for n in 0..=n_max {
        if !(kind == DicksonKind::First && n == 0) {
            for j in 0..=n / 2 {
                let w = T::from_u128(explicit_weight(kind, n as u64, j as u64)).unwrap_or_else(T::infinity);
                sum.add((-a).powu(j as u32) * x.powu((n - 2 * j) as u32) * zn * w);
            }
        }
        zn = zn * z;
    }
    sum.value()
}

/// Right-hand side of the functional-equation generating function at `x = u + b/u`, `a = b`:
/// `(2buz^2 - bz - u^2 z) / ((uz - 1)(u - bz))` or `-u / ((uz - 1)(u - bz))`.
pub fn functional_rational<T: Real>(
    kind: DicksonKind,
    u: Complex<T>,
    b: Complex<T>,
    z: Complex<T>,
) -> Result<Complex<T>> {
    let one = Complex::new(T::one(), T::zero());
    let den = (u * z - one) * (u - b * z);
    if den.is_zero() || u.is_zero() {
        return Err(Error::Pole("functional-equation generating function has a pole at uz = 1 or u = bz".into()));
    }
    Ok(match kind {
        DicksonKind::First => (b * u * z * z * T::lit(2.0) - b * z - u * u * z) / den,
        DicksonKind::Second => -u / den,
    })
}

/// Partial sum of the functional-equation series (the generating-function series at `x = u + b/u`, `a = b`).
pub fn functional_partial_sum<T: Real>(
    kind: DicksonKind,
    u: Complex<T>,
    b: Complex<T>,
    z: Complex<T>,
    n_max: usize,
) -> Result<Complex<T>> {
    if u.is_zero() {
        return Err(Error::Domain("u must be nonzero".into()));
    }
    Ok(gf_partial_sum(kind, &GFParams::unchecked(u + b / u, b, z), n_max))
}

/// Both sides of the functional equation at degree `n`:
/// `(D_n(u + b/u, b), u^n + (b/u)^n)` or `(E_n(u + b/u, b), (u^{n+1} - (b/u)^{n+1}) / (u - b/u))`.
pub fn functional_check<T: Real>(
    kind: DicksonKind,
    n: usize,
    u: Complex<T>,
    b: Complex<T>,
) -> Result<(Complex<T>, Complex<T>)> {
    if u.is_zero() {
        return Err(Error::Domain("functional equation needs u != 0".into()));
    }
    let v = b / u;
    let poly = dickson_eval(kind, n, &(u + v), &b);
    let closed = match kind {
        DicksonKind::First => u.powu(n as u32) + v.powu(n as u32),
        DicksonKind::Second => {
            let d = u - v;
            if d.is_zero() {
                return Err(Error::Singular("second-kind functional equation needs u^2 != b".into()));
            }
            (u.powu(n as u32 + 1) - v.powu(n as u32 + 1)) / d
        }
    };
    Ok((poly, closed))
}
