use num_complex::Complex64;

use crate::error::{Error, Result};

/// Stieltjes transform `s(z) = int rho_sc(x) / (x - z) dx` of the semicircle
/// law for `Im z > 0`: the root of `s^2 + z s + 1 = 0` with positive
/// imaginary part, i.e. the solution of `s + 1 / (s + z) = 0`.
pub fn stieltjes_semicircle(z: Complex64) -> Result<Complex64> {
    if !(z.im > 0.0) {
        return Err(Error::invalid(format!("need Im z > 0, got z = {z}")));
    }
    // The roots multiply to 1; take the larger one from the numerically
    // stable branch and get the other as its reciprocal.
    let disc = (z * z - 4.0).sqrt();
    let plus = (-z + disc) / 2.0;
    let minus = (-z - disc) / 2.0;
    let big = if plus.norm() >= minus.norm() { plus } else { minus };
    let small = big.inv();
    Ok(if small.im > 0.0 { small } else { big })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(s: Complex64, z: Complex64) -> f64 {
        (s + (s + z).inv()).norm()
    }

    #[test]
    fn closed_form_values() {
        // reference values from quadrature of rho_sc(x) / (x - z)
        let s = stieltjes_semicircle(Complex64::new(0.0, 2.0)).unwrap();
        assert!((s - Complex64::new(0.0, 0.414_213_562_373_095_05)).norm() < 1e-15);
        let s = stieltjes_semicircle(Complex64::new(0.0, 1.0)).unwrap();
        assert!((s - Complex64::new(0.0, 0.618_033_988_749_894_8)).norm() < 1e-15);
        let s = stieltjes_semicircle(Complex64::new(0.5, 0.5)).unwrap();
        assert!((s - Complex64::new(-0.187_621_243_450_519_5, 0.751_943_665_716_121_7)).norm() < 1e-14);
    }

    #[test]
    fn branch_and_residual_on_grid() {
        for im in [0.1, 1.0] {
            for k in 0..50 {
                let z = Complex64::new(-3.0 + 6.0 * k as f64 / 49.0, im);
                let s = stieltjes_semicircle(z).unwrap();
                assert!(s.im > 0.0);
                assert!(residual(s, z) <= 1e-12);
            }
        }
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!(stieltjes_semicircle(Complex64::new(0.3, 0.0)).is_err());
        assert!(stieltjes_semicircle(Complex64::new(0.3, -1.0)).is_err());
    }
}
