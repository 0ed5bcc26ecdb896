//! Fixed tolerances and compensated summation.

/// Relative tolerance for bound equality flags and bound slack checks.
pub const EQUALITY_TOL: f64 = 1e-8;

/// Relative off-diagonal mass at which Jacobi sweeps stop.
pub const EIGEN_TOL: f64 = 1e-13;

/// Relative tolerance for eigen residual and trace-identity assertions.
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Relative threshold for accepting an extremal certificate.
pub const CERTIFICATE_TOL: f64 = 1e-7;

/// Simplex entries below this are outside the reported support.
pub const SUPPORT_EPS: f64 = 1e-10;

/// `max(1, |x|)`, the scale used by every relative tolerance in the crate.
#[inline]
pub fn scale(x: f64) -> f64 {
    x.abs().max(1.0)
}

/// Kahan–Babuška (Neumaier) compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl std::iter::FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = KahanSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of an iterator of floats.
pub fn ksum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<KahanSum>().value()
}
