//! The real extension of the exponent form
//! `f(x, y) = m(x + y + 1) - 3(x² + y² - y)` on the triangle
//! `0 <= x, 0 <= y, x + y <= n'` with `n' = ⌊m/3⌋`, and its boundary maxima.
//!
//! Generic over the scalar so the same formulas run on exact rationals (for
//! certificates) and on `f64` (for diagnostics and tests).

use num_traits::{FromPrimitive, Num};

#[derive(Clone, Debug, PartialEq)]
pub struct ExponentForm<T> {
    m: T,
}

impl<T: Num + Clone + FromPrimitive> ExponentForm<T> {
    pub fn new(m: u32) -> Self {
        ExponentForm { m: T::from_u32(m).expect("degree representable in scalar") }
    }

    fn c(n: i64) -> T {
        T::from_i64(n).expect("constant representable in scalar")
    }

    fn frac(n: i64, d: i64) -> T {
        Self::c(n) / Self::c(d)
    }

    pub fn m(&self) -> T {
        self.m.clone()
    }

    pub fn value(&self, x: T, y: T) -> T {
        let m = self.m();
        m * (x.clone() + y.clone() + T::one()) - Self::c(3) * (x.clone() * x + y.clone() * y.clone() - y)
    }

    /// The unique stationary point `(m/6, m/6 + 1/2)`.
    pub fn critical_point(&self) -> (T, T) {
        let x = self.m() / Self::c(6);
        (x.clone(), x + Self::frac(1, 2))
    }

    /// Peak of the edge `x = 0`: `y = (m + 3)/6`.
    pub fn y_edge_peak(&self) -> (T, T) {
        (T::zero(), (self.m() + Self::c(3)) / Self::c(6))
    }

    /// Peak of the edge `y = 0`: `x = m/6`.
    pub fn x_edge_peak(&self) -> (T, T) {
        (self.m() / Self::c(6), T::zero())
    }

    /// Peak of the hypotenuse `x + y = n'`: `((2n' - 1)/4, (2n' + 1)/4)`.
    pub fn hypotenuse_peak(&self, n_prime: i64) -> (T, T) {
        (Self::frac(2 * n_prime - 1, 4), Self::frac(2 * n_prime + 1, 4))
    }

    /// `m²/12 + 3m/2 + 3/4`.
    pub fn y_edge_max(&self) -> T {
        let m = self.m();
        m.clone() * m.clone() / Self::c(12) + Self::frac(3, 2) * m + Self::frac(3, 4)
    }

    /// `m²/12 + m`.
    pub fn x_edge_max(&self) -> T {
        let m = self.m();
        m.clone() * m.clone() / Self::c(12) + m
    }

    /// `n'(m - 3(n' - 1)/2) + m + 3/8`.
    pub fn hypotenuse_max(&self, n_prime: i64) -> T {
        let n = Self::c(n_prime);
        let m = self.m();
        n.clone() * (m.clone() - Self::frac(3, 2) * (n - T::one())) + m + Self::frac(3, 8)
    }

    /// `m²/6 + 2m + 3/8`.
    pub fn upper_cap(&self) -> T {
        let m = self.m();
        m.clone() * m.clone() / Self::c(6) + Self::c(2) * m + Self::frac(3, 8)
    }

    /// `m²/6 + m - 9/8`.
    pub fn hypotenuse_floor(&self) -> T {
        let m = self.m();
        m.clone() * m.clone() / Self::c(6) + m - Self::frac(9, 8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn closed_forms_match_direct_evaluation() {
        for m in (9..=99u32).step_by(2) {
            let f = crate::ExactQuadratic::new(m);
            let n = (m / 3) as i64;
            let (x, y) = f.y_edge_peak();
            assert_eq!(f.value(x, y), f.y_edge_max());
            let (x, y) = f.x_edge_peak();
            assert_eq!(f.value(x, y), f.x_edge_max());
            let (x, y) = f.hypotenuse_peak(n);
            assert_eq!(f.value(x, y), f.hypotenuse_max(n));
        }
    }

    #[test]
    fn gradient_vanishes_at_critical_point() {
        // central differences on the f64 instance
        let f = crate::FloatQuadratic::new(15);
        let (x, y) = f.critical_point();
        let h = 1e-4;
        let dx = (f.value(x + h, y) - f.value(x - h, y)) / (2.0 * h);
        let dy = (f.value(x, y + h) - f.value(x, y - h)) / (2.0 * h);
        assert!(dx.abs() < 1e-6 && dy.abs() < 1e-6);
        let exact = ExponentForm::<Rational>::new(15);
        let (cx, cy) = exact.critical_point();
        assert_eq!(cx + cy, Rational::new(15.into(), 3.into()) + Rational::new(1.into(), 2.into()));
    }
}
