//! Compensated (Kahan-Babuska / Neumaier) accumulation.

use num_complex::Complex;

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, Default)]
struct Neumaier<T> {
    sum: T,
    comp: T,
}

impl<T: Real> Neumaier<T> {
    #[inline]
    fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp = self.comp + ((self.sum - t) + x);
        } else {
            self.comp = self.comp + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    #[inline]
    fn value(&self) -> T {
        self.sum + self.comp
    }
}

/// Compensated complex sum. Adding an exact zero leaves the state bit-identical.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum<T> {
    re: Neumaier<T>,
    im: Neumaier<T>,
}

impl<T: Real> CompensatedSum<T> {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex<T>) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex<T> {
        Complex::new(self.re.value(), self.im.value())
    }
}

impl<T: Real> Extend<Complex<T>> for CompensatedSum<T> {
    fn extend<I: IntoIterator<Item = Complex<T>>>(&mut self, iter: I) {
        for z in iter {
            self.add(z);
        }
    }
}

impl<T: Real> FromIterator<Complex<T>> for CompensatedSum<T> {
    fn from_iter<I: IntoIterator<Item = Complex<T>>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_bits() {
        let terms = [1e16, 1.0, -1e16, 1.0].map(|x| Complex::new(x, -x));
        let s: CompensatedSum<f64> = terms.into_iter().collect();
        assert_eq!(s.value(), Complex::new(2.0, -2.0));
        let naive: f64 = [1e16, 1.0, -1e16, 1.0].iter().sum();
        assert_ne!(naive, 2.0);
    }

    #[test]
    fn zero_is_a_no_op() {
        let mut s = CompensatedSum::<f64>::new();
        for x in [0.1, 0.2, 0.3, 1e-17] {
            s.add(Complex::new(x, x * 3.0));
        }
        let before = s.value();
        for _ in 0..10 {
            s.add(Complex::new(0.0, -0.0));
        }
        assert_eq!(before.re.to_bits(), s.value().re.to_bits());
        assert_eq!(before.im.to_bits(), s.value().im.to_bits());
    }
}
