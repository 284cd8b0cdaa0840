use alloc::vec;

use crate::graph::RootedGraph;
use crate::math;
use crate::walk::{Ball, EnumConfig};
use crate::{Error, Result};

/// Lower bound (Δ−1)^{(1+cλ)/2} with c = Δ(Δ−1)/(Δ−2)², for a Δ-regular
/// graph whose simple random walk has spectral bottom λ = 1 − ρ.
///
/// At λ = 0 the result is exactly √(Δ−1).
pub fn spectral_lower(degree: u32, lambda: f64) -> Result<f64> {
    if degree < 3 {
        return Err(Error::InvalidArgument(alloc::format!(
            "spectral bound needs degree >= 3, got {degree}"
        )));
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidArgument(alloc::format!(
            "spectral bottom must lie in [0, 1], got {lambda}"
        )));
    }
    let d = degree as f64;
    let c = d * (d - 1.0) / ((d - 2.0) * (d - 2.0));
    Ok(math::sqrt(d - 1.0) * math::powf(d - 1.0, c * lambda / 2.0))
}

/// Estimate of λ = 1 − ρ from exact return probabilities of the simple
/// random walk, ρ̂ = (p_{2n} / p_{2n−2})^{1/2}.
///
/// The probabilities are computed by dynamic programming on the ball of
/// radius n + 1, which contains every closed walk of length 2n. On
/// undirected graphs ρ̂ never exceeds ρ, so λ̂ over-estimates λ and any
/// bound built on it is heuristic.
pub fn estimate_lambda(g: &RootedGraph, n: usize, cfg: &EnumConfig) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("need n >= 1".into()));
    }
    let (ball, reached) = Ball::build_capped(g, n + 1, cfg.budget)?;
    if reached < n + 1 {
        return Err(Error::BudgetExceeded { budget: cfg.budget });
    }
    let out_weight: alloc::vec::Vec<f64> = (0..ball.len() as u32)
        .map(|v| ball.edges(v).map(|(_, m)| m as f64).sum())
        .collect();
    let mut p = vec![0.0f64; ball.len()];
    let mut next = vec![0.0f64; ball.len()];
    p[0] = 1.0;
    let mut returns = [1.0f64, 0.0];
    for step in 1..=2 * n {
        next.iter_mut().for_each(|x| *x = 0.0);
        for v in 0..ball.len() as u32 {
            let mass = p[v as usize];
            if mass == 0.0 || out_weight[v as usize] == 0.0 {
                continue;
            }
            let share = mass / out_weight[v as usize];
            for (t, m) in ball.edges(v) {
                next[t as usize] += share * m as f64;
            }
        }
        core::mem::swap(&mut p, &mut next);
        if step == 2 * n - 2 {
            returns[0] = p[0];
        }
    }
    returns[1] = p[0];
    if returns[0] == 0.0 || returns[1] == 0.0 {
        return Err(Error::ZeroDenominator(2 * n - 2));
    }
    let rho = math::sqrt(returns[1] / returns[0]);
    Ok((1.0 - rho).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, GraphSpec};

    #[test]
    fn tree_value() {
        let lam = 1.0 - 2.0 * 2f64.sqrt() / 3.0;
        let b = spectral_lower(3, lam).unwrap();
        assert!(b > 1.55 && b < 1.65 && b <= 2.0, "{b}");
    }

    #[test]
    fn zero_gap_is_root_bound() {
        for d in 3..20 {
            assert_eq!(spectral_lower(d, 0.0).unwrap(), ((d - 1) as f64).sqrt());
        }
        assert!(spectral_lower(3, 1.5).is_err());
        assert!(spectral_lower(2, 0.1).is_err());
    }

    #[test]
    fn square_lattice_is_amenable() {
        let g = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        let lam = estimate_lambda(&g, 12, &EnumConfig::default()).unwrap();
        assert!(lam < 0.1, "{lam}");
    }

    #[test]
    fn tree_gap_is_over_estimated() {
        let g = make_family(&GraphSpec::Tree { degree: 3 }).unwrap();
        let lam = estimate_lambda(&g, 10, &EnumConfig::default()).unwrap();
        let exact = 1.0 - 2.0 * 2f64.sqrt() / 3.0;
        assert!(lam >= exact, "{lam}");
        assert!(lam < exact + 0.1, "{lam}");
    }

    #[test]
    fn first_return_probability() {
        // p_2 = 1/4 on Z^2, so rho_hat = 1/2 at n = 1
        let g = make_family(&GraphSpec::Hypercubic { dim: 2 }).unwrap();
        let lam = estimate_lambda(&g, 1, &EnumConfig::default()).unwrap();
        assert!((lam - 0.5).abs() < 1e-15);
    }
}
