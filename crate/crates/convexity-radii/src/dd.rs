//! Double-double arithmetic for the real series paths.
//!
//! The alternating series for the Lommel/Struve kernels lose roughly
//! `|z|·log10(e)` digits to cancellation, so plain f64 summation is unusable
//! past |z| ≈ 12 at the tolerances the zero tables need.  Accumulating in a
//! double-double (~31 digits) pushes the usable range beyond the series/
//! asymptotic switch point at |z| = 35 with a comfortable margin.
//!
//! Standard error-free transformations (Dekker/Knuth), products via FMA.

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Newton-corrected division; ~full double-double accuracy.
    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q2));
        let q3 = r2.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        let s = Dd { hi, lo };
        s.add(Dd::from(q3))
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> f64 {
        (self.hi + self.lo).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_recovers_low_bits() {
        let a = Dd::from(1.0).add(Dd::from(2f64.powi(-60)));
        let b = a.mul(a);
        // (1+eps)^2 = 1 + 2eps + eps^2; f64 alone would drop the 2eps term's tail
        let expect_lo = 2.0 * 2f64.powi(-60);
        assert!((b.hi - 1.0).abs() < 1e-15);
        assert!((b.lo + (b.hi - 1.0) - expect_lo).abs() < 1e-30);
    }

    #[test]
    fn div_roundtrip() {
        let a = Dd::from(std::f64::consts::PI);
        let b = Dd::from(std::f64::consts::E);
        let q = a.div(b).mul(b);
        assert!((q.to_f64() - std::f64::consts::PI).abs() < 1e-30);
        assert!((q.sub(a)).abs() < 1e-30);
    }

    #[test]
    fn sum_cancellation() {
        // sum exp(-30) style alternating pieces: 1 - 1 + tiny survives
        let tiny = 2f64.powi(-80);
        let s = Dd::from(1.0).add(Dd::from(tiny)).sub(Dd::from(1.0));
        assert_eq!(s.to_f64(), tiny);
    }
}
