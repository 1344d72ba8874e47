//! Trapezoidal contour quadrature of the Cauchy-type kernels.
//!
//! Two contours are supported. A circle about the origin serves integer orders,
//! where the integrand is single valued and the periodic trapezoid rule is
//! spectrally accurate. A parabolic Hankel loop `w(u) = mu (1 + iu)^2` wraps the
//! principal cut of `w^(-k-1)` for non-integer orders; the integrand then
//! decays like a Gaussian in `u` and the trapezoid rule on the truncated line
//! converges geometrically. The node count doubles until successive results
//! agree to the requested tolerance.

use num_complex::Complex;
use num_traits::Zero;

use crate::branch::{pow_times_exp, powi, principal_arg, principal_log, principal_pow};
use crate::error::{Error, Result};
use crate::gamma::{rgamma, upper_incomplete};
use crate::scalar::{as_integer, Real};
use crate::summation::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContourKind {
    /// `|w| = radius`, counter-clockwise.
    Circle,
    /// Parabola through `w = radius` opening to the left around the negative real axis.
    HankelLoop,
}

/// Contour shape and discretisation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec<T> {
    pub kind: ContourKind,
    /// Circle radius, or the apex of the Hankel parabola on the positive real axis.
    pub radius: T,
    /// Initial number of nodes (even, at least 16).
    pub node_count: usize,
    /// Relative change between node doublings accepted as converged.
    pub tolerance: T,
    pub max_doublings: u32,
}

impl<T: Real> ContourSpec<T> {
    pub fn circle(radius: T) -> Self {
        Self { kind: ContourKind::Circle, radius, node_count: 32, tolerance: T::lit(1e-12), max_doublings: 10 }
    }

    pub fn hankel(apex: T) -> Self {
        Self {
            kind: ContourKind::HankelLoop,
            radius: apex,
            node_count: 64,
            tolerance: T::lit(1e-12),
            max_doublings: 10,
        }
    }

    /// Unit circle for integer `k`, unit Hankel loop otherwise.
    pub fn for_order(k: Complex<T>) -> Self {
        if as_integer(k).is_some() {
            Self::circle(T::one())
        } else {
            Self::hankel(T::one())
        }
    }

    /// A contour that keeps the pole at `w = -x` outside: a circle of radius
    /// `min(1, |x|/2)` for integer `k`, otherwise a Hankel loop whose apex is a
    /// quarter of the distance `(|x| - Re x) / 2` at which the parabola would
    /// pass through the pole.
    pub fn for_incomplete(x: Complex<T>, k: Complex<T>) -> Self {
        if as_integer(k).is_some() {
            Self::circle(T::one().min(x.norm() / T::lit(2.0)))
        } else {
            let reach = (x.norm() - x.re) / T::lit(2.0);
            Self::hankel(T::one().min(reach / T::lit(4.0)))
        }
    }

    pub fn with_nodes(mut self, n: usize) -> Self {
        self.node_count = n;
        self
    }

    pub fn with_tolerance(mut self, tol: T) -> Self {
        self.tolerance = tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.radius > T::zero()) || !self.radius.is_finite() {
            return Err(Error::Contour("radius must be positive and finite".into()));
        }
        if self.node_count < 16 || self.node_count % 2 == 1 {
            return Err(Error::Contour("node_count must be even and at least 16".into()));
        }
        if !(self.tolerance > T::zero()) {
            return Err(Error::Contour("tolerance must be positive".into()));
        }
        Ok(())
    }

    /// Nodes `w_j` and weights `dw_j / (2 pi i)` of an `n`-point rule.
    /// `decay` is the Gaussian rate of the integrand along the Hankel loop
    /// and `drift` the offset of its peak in the parameter.
    pub fn rule(&self, n: usize, decay: T, drift: T) -> Vec<(Complex<T>, Complex<T>)> {
        let nn = T::of(n as i64);
        match self.kind {
            ContourKind::Circle => (0..n)
                .map(|j| {
                    let theta = T::TAU() * (T::of(j as i64) + T::lit(0.5)) / nn;
                    let w = Complex::from_polar(self.radius, theta);
                    // dw / (2 pi i) = w dtheta / (2 pi)
                    (w, w / nn)
                })
                .collect(),
            ContourKind::HankelLoop => {
                let mu = self.radius;
                let half_width = drift.abs() + (T::lit(45.0) / (mu * decay)).sqrt() + T::one();
                let h = T::lit(2.0) * half_width / nn;
                (0..n)
                    .map(|j| {
                        let u = -half_width + h * (T::of(j as i64) + T::lit(0.5));
                        let s = Complex::new(T::one(), u);
                        let w = s * s * mu;
                        // dw / (2 pi i) = 2 i mu (1 + iu) du / (2 pi i)
                        let weight = s * (mu * h / T::PI());
                        (w, weight)
                    })
                    .collect()
            }
        }
    }
}

/// Node-doubling trapezoid driver. Returns the converged value and the final node count.
fn integrate<T, F>(spec: &ContourSpec<T>, decay: T, drift: T, f: F) -> Result<(Complex<T>, usize)>
where
    T: Real,
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    spec.validate()?;
    let eval = |n: usize| -> Result<(Complex<T>, T)> {
        let mut sum = CompensatedSum::new();
        let mut l1 = T::zero();
        for (w, weight) in spec.rule(n, decay, drift) {
            let v = f(w)? * weight;
            l1 = l1 + v.norm();
            sum.add(v);
        }
        Ok((sum.value(), l1))
    };
    let mut n = spec.node_count;
    let (mut prev, _) = eval(n)?;
    let mut change = T::infinity();
    for _ in 0..spec.max_doublings {
        n *= 2;
        let (cur, l1) = eval(n)?;
        change = (cur - prev).norm();
        let floor = T::epsilon() * T::lit(64.0) * l1;
        if change <= spec.tolerance * cur.norm() || change <= floor {
            return Ok((cur, n));
        }
        prev = cur;
    }
    Err(Error::Discretization {
        change: change.to_f64().unwrap_or(f64::NAN),
        tol: spec.tolerance.to_f64().unwrap_or(f64::NAN),
        nodes: n,
    })
}

/// Sequence `|I(2N) - I(N)|` for `max_doublings` doublings starting at `node_count`,
/// for convergence studies of the Cauchy kernel.
pub fn cauchy_kernel_doubling_profile<T: Real>(
    k: Complex<T>,
    y: Complex<T>,
    c: &ContourSpec<T>,
) -> Result<Vec<(usize, T)>> {
    c.validate()?;
    let (decay, drift) = cauchy_decay(k, y, c)?;
    let f = |w: Complex<T>| cauchy_integrand(k, y, w, c.kind);
    let sum_at = |n: usize| -> Result<Complex<T>> {
        let mut s = CompensatedSum::new();
        for (w, weight) in c.rule(n, decay, drift) {
            s.add(f(w)? * weight);
        }
        Ok(s.value())
    };
    let mut n = c.node_count;
    let mut prev = sum_at(n)?;
    let mut out = Vec::new();
    for _ in 0..c.max_doublings {
        let cur = sum_at(2 * n)?;
        out.push((n, (cur - prev).norm()));
        prev = cur;
        n *= 2;
    }
    Ok(out)
}

fn cauchy_decay<T: Real>(k: Complex<T>, y: Complex<T>, c: &ContourSpec<T>) -> Result<(T, T)> {
    match c.kind {
        ContourKind::Circle => {
            if as_integer(k).is_none() {
                return Err(Error::Contour(
                    "a closed circle only represents integer orders; use the Hankel loop".into(),
                ));
            }
            Ok((T::one(), T::zero()))
        }
        ContourKind::HankelLoop => {
            if y.is_zero() {
                return Err(Error::Contour("Hankel loop needs y != 0 for e^{wy} to decay".into()));
            }
            Ok((y.norm(), T::zero()))
        }
    }
}

fn cauchy_integrand<T: Real>(k: Complex<T>, y: Complex<T>, w: Complex<T>, kind: ContourKind) -> Result<Complex<T>> {
    let s = -k - Complex::new(T::one(), T::zero());
    match kind {
        ContourKind::Circle => Ok((w * y).exp() * powi(w, s.re.to_i32().unwrap_or(0))),
        // loop rotated by -arg y: the node is v = w y / |y|, the cut of w^{-k-1} turns with it
        ContourKind::HankelLoop => {
            let theta = Complex::new(T::zero(), -principal_arg(y));
            Ok(pow_times_exp(w, s, w * y.norm())? * (theta * (s + T::one())).exp())
        }
    }
}

/// `y^k / Gamma(k+1) = (1 / 2 pi i) int_C e^{wy} w^{-k-1} dw` by contour quadrature.
/// The Hankel loop is turned to open along `-conj(y)/|y|`, which gives the principal `y^k`.
pub fn cauchy_kernel<T: Real>(k: Complex<T>, y: Complex<T>, c: &ContourSpec<T>) -> Result<Complex<T>> {
    let (decay, drift) = cauchy_decay(k, y, c)?;
    integrate(c, decay, drift, |w| cauchy_integrand(k, y, w, c.kind)).map(|(v, _)| v)
}

/// Closed form `y^k / Gamma(k+1)` of the Cauchy kernel from the gamma kernels.
pub fn cauchy_kernel_closed<T: Real>(k: Complex<T>, y: Complex<T>) -> Result<Complex<T>> {
    Ok(principal_pow(y, k)? * rgamma(k + Complex::new(T::one(), T::zero())))
}

/// `-(1 / 2 pi i) int_C a^w w^{-k-1} / (w + x) dw` with the pole `w = -x` kept outside `C`.
pub fn incomplete_contour<T: Real>(
    a: Complex<T>,
    x: Complex<T>,
    k: Complex<T>,
    c: &ContourSpec<T>,
) -> Result<Complex<T>> {
    c.validate()?;
    let log_a = principal_log(a)?;
    let pole = -x;
    let limit = c.radius / T::lit(10.0);
    let to_f = |v: T| v.to_f64().unwrap_or(f64::NAN);
    let (decay, drift) = match c.kind {
        ContourKind::Circle => {
            if as_integer(k).is_none() {
                return Err(Error::Contour(
                    "a closed circle only represents integer orders; use the Hankel loop".into(),
                ));
            }
            let distance = (x.norm() - c.radius).abs();
            if distance < limit {
                return Err(Error::PoleProximity { distance: to_f(distance), limit: to_f(limit) });
            }
            if x.norm() < c.radius {
                return Err(Error::Contour("pole w = -x lies inside the circle".into()));
            }
            (T::one(), T::zero())
        }
        ContourKind::HankelLoop => {
            if !(log_a.re > T::zero()) {
                return Err(Error::Contour("Hankel loop needs |a| > 1 for a^w to decay".into()));
            }
            let mu = c.radius;
            if pole.re < mu - pole.im * pole.im / (T::lit(4.0) * mu) {
                return Err(Error::Contour("pole w = -x lies inside the Hankel loop".into()));
            }
            let (decay, drift) = (log_a.re, log_a.im / log_a.re);
            let distance = c
                .rule(c.node_count * 16, decay, drift)
                .into_iter()
                .map(|(w, _)| (w - pole).norm())
                .fold(T::infinity(), T::min);
            if distance < limit {
                return Err(Error::PoleProximity { distance: to_f(distance), limit: to_f(limit) });
            }
            (decay, drift)
        }
    };
    let s = -k - Complex::new(T::one(), T::zero());
    let kind = c.kind;
    let f = move |w: Complex<T>| -> Result<Complex<T>> {
        let power = match kind {
            ContourKind::Circle => (w * log_a).exp() * powi(w, s.re.to_i32().unwrap_or(0)),
            ContourKind::HankelLoop => pow_times_exp(w, s, w * log_a)?,
        };
        Ok(power / (w + x))
    };
    integrate(c, decay, drift, f).map(|(v, _)| -v)
}

/// Closed form `a^{-x} (-x)^{-k-1} Gamma(k+1, -x log a) / Gamma(k+1)` of [`incomplete_contour`].
pub fn incomplete_contour_closed<T: Real>(a: Complex<T>, x: Complex<T>, k: Complex<T>) -> Result<Complex<T>> {
    let one = Complex::new(T::one(), T::zero());
    let log_a = principal_log(a)?;
    let kp1 = k + one;
    let upper = upper_incomplete(kp1, -x * log_a)?;
    let a_pow = (-x * log_a).exp();
    let x_pow = principal_pow(-x, -kp1)?;
    Ok(a_pow * x_pow * upper * rgamma(kp1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    #[test]
    fn trivial_kernel_values() {
        let c = ContourSpec::<f64>::circle(1.0);
        let v = cauchy_kernel(cplx(0.0, 0.0), cplx(0.37, -1.1), &c).unwrap();
        assert!((v - cplx(1.0, 0.0)).norm() < 1e-13);
        let v = cauchy_kernel(cplx(1.0, 0.0), cplx(2.0, 0.0), &c).unwrap();
        assert!((v - cplx(2.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn contour_misuse_is_rejected() {
        let c = ContourSpec::<f64>::circle(1.0);
        assert!(matches!(cauchy_kernel(cplx(0.5, 0.0), cplx(1.0, 0.0), &c), Err(Error::Contour(_))));
        let h = ContourSpec::<f64>::hankel(1.0);
        assert!(matches!(cauchy_kernel(cplx(0.5, 0.0), cplx(0.0, 0.0), &h), Err(Error::Contour(_))));
        let bad = ContourSpec::<f64>::circle(1.0).with_nodes(15);
        assert!(cauchy_kernel(cplx(1.0, 0.0), cplx(1.0, 0.0), &bad).is_err());
    }

    #[test]
    fn pole_proximity() {
        let c = ContourSpec::<f64>::circle(1.0);
        let err = incomplete_contour(cplx(2.0, 0.0), cplx(1.05, 0.0), cplx(1.0, 0.0), &c).unwrap_err();
        assert!(matches!(err, Error::PoleProximity { .. }));
    }

    #[test]
    fn collapsed_logarithm() {
        let c = ContourSpec::<f64>::for_incomplete(cplx(2.0, 0.0), cplx(0.0, 0.0));
        let v = incomplete_contour(cplx(1.0, 0.0), cplx(2.0, 0.0), cplx(0.0, 0.0), &c).unwrap();
        assert!((v - cplx(-0.5, 0.0)).norm() < 1e-12);
    }
}
