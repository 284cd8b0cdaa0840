use alloc::vec::Vec;

use crate::math;
use crate::{Error, Result};

/// Bisection for a sign change of `f` on `[lo, hi]`.
///
/// Runs until the bracket cannot shrink further in f64 and returns whichever
/// end has the smaller residual.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if !(flo.signum() != fhi.signum()) || flo.is_nan() || fhi.is_nan() {
        return Err(Error::NoRoot { lo, hi });
    }
    let mut fh = fhi;
    for _ in 0..2000 {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fh = fm;
        }
    }
    Ok(if flo.abs() <= fh.abs() { lo } else { hi })
}

fn need_above_one(mu: f64) -> Result<()> {
    if mu > 1.0 && mu.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(alloc::format!(
            "connective constant must be finite and > 1, got {mu}"
        )))
    }
}

fn fisher_g(x: f64) -> f64 {
    x * x + x * x * x
}

/// Connective constant of the Fisher transform of a cubic graph with
/// constant `mu`: solves x² + x³ = 1/mu on (0, 1) and returns 1/x.
pub fn fisher_mu_pull(mu: f64) -> Result<f64> {
    need_above_one(mu)?;
    let target = 1.0 / mu;
    let x = bisect(|x| fisher_g(x) - target, 0.0, 1.0)?;
    Ok(1.0 / x)
}

/// Inverse of [`fisher_mu_pull`]: the constant of the cubic graph whose
/// Fisher transform has constant `mu`.
pub fn fisher_mu_push(mu: f64) -> Result<f64> {
    need_above_one(mu)?;
    Ok(1.0 / fisher_g(1.0 / mu))
}

/// `mu0` followed by `k` repeated Fisher pulls.
pub fn fisher_iterate(mu0: f64, k: usize) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "iteration count must be >= 1".into(),
        ));
    }
    let mut out = Vec::with_capacity(k + 1);
    out.push(mu0);
    let mut mu = mu0;
    for _ in 0..k {
        mu = fisher_mu_pull(mu)?;
        out.push(mu);
    }
    Ok(out)
}

/// Constant of the graph obtained by Fisher-transforming alternate vertices:
/// solves x³ + x⁴ = 1/mu² and returns 1/x.
pub fn semicubic_solve(mu: f64) -> Result<f64> {
    need_above_one(mu)?;
    let target = 1.0 / (mu * mu);
    let x = bisect(|x| x * x * x + x * x * x * x - target, 0.0, 1.0)?;
    Ok(1.0 / x)
}

/// Left side minus right side of the girth/degree equation at `zeta`:
/// (Δ−2)ζ/(1+ζ) + M/(1+M) − 1 with M = 2(ζ + ζ² + … + ζ^{g−1}).
pub fn girth_degree_equation(degree: u32, girth: u32, zeta: f64) -> f64 {
    let mut m2 = 0.0;
    let mut p = 1.0;
    for _ in 1..girth {
        p *= zeta;
        m2 += p;
    }
    m2 *= 2.0;
    (degree as f64 - 2.0) * zeta / (1.0 + zeta) + m2 / (1.0 + m2) - 1.0
}

/// Upper bound on the connective constant of a Δ-regular graph of girth g,
/// attained by the free product of Δ−2 copies of Z₂ and one Z_g.
pub fn girth_degree_upper(degree: u32, girth: u32) -> Result<f64> {
    if degree < 3 || girth < 3 {
        return Err(Error::InvalidArgument(alloc::format!(
            "girth/degree bound needs degree >= 3 and girth >= 3, got ({degree}, {girth})"
        )));
    }
    let zeta = bisect(|z| girth_degree_equation(degree, girth, z), 0.0, 1.0)?;
    Ok(1.0 / zeta)
}

/// 1/x² + 1/x³ − 1/√2.
pub fn cubic_girth3_equation(x: f64) -> f64 {
    1.0 / (x * x) + 1.0 / (x * x * x) - core::f64::consts::FRAC_1_SQRT_2
}

/// Lower bound for cubic graphs of girth 3 or 4.
pub fn cubic_girth_lower(girth: u32) -> Result<f64> {
    match girth {
        3 => bisect(cubic_girth3_equation, 1.0, 2.0),
        4 => Ok(math::powf(12.0, 1.0 / 6.0)),
        g => Err(Error::InvalidArgument(alloc::format!(
            "cubic lower bound defined for girth 3 or 4, got {g}"
        ))),
    }
}
