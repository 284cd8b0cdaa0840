//! Named experiments. Each emits one row per checked quantity.

use sawlab_core::bounds::{
    cubic_girth3_equation, cubic_girth_lower, fisher_iterate, fisher_mu_pull, girth_degree_upper,
    mu_interval_from, ratio_estimate_from, semicubic_solve, spectral_lower, PHI,
};
use sawlab_core::sampler::nu_estimate;
use sawlab_core::{make_family, GraphSpec, RootedGraph, SeriesKind};

use crate::commands::{locality_rows, phi_deviation_bounds, reciprocal_deviation};
use crate::ctx::Ctx;
use crate::error::{CliError, CliResult};
use crate::output::{sig, Table};

pub const NAMES: [&str; 11] = [
    "ladder",
    "bridge",
    "hexagonal",
    "square",
    "fisher",
    "semicubic",
    "cross-solver",
    "cubic",
    "spectral",
    "locality",
    "sampler",
];

struct Report {
    table: Table,
    failed: usize,
}

impl Report {
    fn new() -> Report {
        Report {
            table: Table::new(&["quantity", "value", "reference", "tolerance", "pass"]),
            failed: 0,
        }
    }

    fn row(
        &mut self,
        quantity: impl Into<String>,
        value: String,
        reference: String,
        tolerance: &str,
        pass: bool,
    ) {
        if !pass {
            self.failed += 1;
        }
        self.table.push(vec![
            quantity.into(),
            value,
            reference,
            tolerance.into(),
            pass.to_string(),
        ]);
    }

    fn near(&mut self, quantity: &str, value: f64, reference: f64, tol: f64) {
        let pass = (value - reference).abs() <= tol;
        let tol_text = if tol == 0.0 {
            "0".into()
        } else {
            format!("{tol:e}")
        };
        self.row(quantity, sig(value), sig(reference), &tol_text, pass);
    }

    fn finish(mut self) -> Table {
        let total = self.table.rows.len();
        self.table
            .note("passed", format!("{} of {total}", total - self.failed));
        self.table
    }
}

fn graph(spec: GraphSpec) -> CliResult<RootedGraph> {
    Ok(make_family(&spec)?)
}

fn ratio(ctx: &mut Ctx, g: &RootedGraph, n: usize, step: usize) -> CliResult<f64> {
    let s = ctx.complete(g, SeriesKind::Saw, n + step)?;
    Ok(ratio_estimate_from(&s, n, step)?)
}

pub fn run(name: &str, ctx: &mut Ctx) -> CliResult<Table> {
    let mut r = Report::new();
    match name {
        "ladder" => {
            let v = ratio(ctx, &graph(GraphSpec::Ladder)?, 40, 1)?;
            r.near("ladder ratio n=40 step=1", v, PHI, 1e-3);
        }
        "bridge" => {
            let v = ratio(ctx, &graph(GraphSpec::Bridge { degree: 4 })?, 30, 2)?;
            r.near("bridge(4) ratio n=30 step=2", v, 3f64.sqrt(), 1e-3);
        }
        "hexagonal" => {
            let g = graph(GraphSpec::Hexagonal)?;
            let target = (2.0 + 2f64.sqrt()).sqrt();
            let saws = ctx.complete(&g, SeriesKind::Saw, 26)?;
            let bridges = ctx.complete(&g, SeriesKind::Bridge, 24)?;
            let iv = mu_interval_from(&g, &saws.prefix(24), Some(&bridges), 24)?;
            let ok = iv.upper >= target && iv.upper - target <= 0.15;
            r.row(
                "hexagonal upper n=24",
                sig(iv.upper),
                sig(target),
                "[0, 0.15] above",
                ok,
            );
            r.row(
                "hexagonal lower n=24",
                sig(iv.lower),
                sig(target),
                iv.lower_rigor.as_str(),
                iv.lower <= iv.upper,
            );
            r.near(
                "hexagonal ratio n=24 step=2",
                ratio_estimate_from(&saws, 24, 2)?,
                target,
                0.05,
            );
        }
        "square" => {
            let g = graph(GraphSpec::Hypercubic { dim: 2 })?;
            let n = 14;
            let s = ctx.complete(&g, SeriesKind::Saw, n)?;
            let b = ctx.complete(&g, SeriesKind::Bridge, n)?;
            let iv = mu_interval_from(&g, &s, Some(&b), n)?;
            let est = 2.63815;
            r.row(
                "Z2 lower n=14",
                sig(iv.lower),
                sig(est),
                "below",
                iv.lower <= est,
            );
            r.row(
                "Z2 upper n=14",
                sig(iv.upper),
                sig(est),
                "above, <= 2.95",
                est <= iv.upper && iv.upper <= 2.95,
            );
            let (mut pairs, mut sub, mut sup) = (0, 0, 0);
            for i in 0..=n {
                for j in 0..=n - i {
                    pairs += 1;
                    if s.values[i + j] <= &s.values[i] * &s.values[j] {
                        sub += 1;
                    }
                    if &b.values[i] * &b.values[j] <= b.values[i + j] {
                        sup += 1;
                    }
                }
            }
            let all = format!("{pairs}");
            r.row(
                "submultiplicative pairs i+j<=14",
                sub.to_string(),
                all.clone(),
                "all",
                sub == pairs,
            );
            r.row(
                "supermultiplicative bridge pairs i+j<=14",
                sup.to_string(),
                all,
                "all",
                sup == pairs,
            );
        }
        "fisher" => {
            r.near("pull(phi)", fisher_mu_pull(PHI)?, PHI, 1e-10);
            let seq = fisher_iterate(2.0, 10)?;
            for (k, mu) in seq.iter().enumerate().skip(1) {
                let dev = reciprocal_deviation(*mu);
                let (lo, hi) = phi_deviation_bounds(k);
                let monotone = *mu < seq[k - 1] && *mu > PHI;
                r.row(
                    format!("1/mu_{k} - 1/phi from mu_0=2"),
                    sig(dev),
                    format!("[{}, {}]", sig(lo), sig(hi)),
                    "bounds",
                    lo <= dev && dev <= hi && monotone,
                );
            }
        }
        "semicubic" => {
            let v = semicubic_solve((2.0 + 2f64.sqrt()).sqrt())?;
            r.near("semicubic of hexagonal", v, 1.75056, 1e-4);
        }
        "cross-solver" => {
            let y = girth_degree_upper(3, 3)?;
            r.near(
                "girth-degree(3,3) vs pull(2)",
                y,
                fisher_mu_pull(2.0)?,
                1e-8,
            );
            let g = graph(GraphSpec::FreeProduct {
                degree: 3,
                girth: 3,
            })?;
            r.near(
                "free-product(3,3) ratio n=24 step=1",
                ratio(ctx, &g, 24, 1)?,
                y,
                0.02,
            );
        }
        "cubic" => {
            r.near(
                "cubic lower girth 4",
                cubic_girth_lower(4)?,
                12f64.powf(1.0 / 6.0),
                1e-10,
            );
            let x = cubic_girth_lower(3)?;
            let res = cubic_girth3_equation(x);
            r.row(
                "cubic lower girth 3 residual",
                format!("{res:e}"),
                "0".into(),
                "1e-12",
                res.abs() <= 1e-12,
            );
            r.row("cubic lower girth 3", sig(x), "-".into(), "-", true);
        }
        "spectral" => {
            let v = spectral_lower(3, 1.0 - 2.0 * 2f64.sqrt() / 3.0)?;
            r.row(
                "tree(3) spectral bound",
                sig(v),
                "(1.55, 1.65), <= 2".into(),
                "range",
                v > 1.55 && v < 1.65 && v <= 2.0,
            );
            for d in 3..=8u32 {
                let z = spectral_lower(d, 0.0)?;
                r.near(
                    &format!("degree {d} at lambda 0"),
                    z,
                    (d as f64 - 1.0).sqrt(),
                    0.0,
                );
            }
        }
        "locality" => {
            let (rows, reference) = locality_rows(ctx, &[3, 4, 5, 6, 7, 8], 14)?;
            let mut prev = f64::INFINITY;
            for (m, mu) in rows {
                let gap = (mu - reference).abs();
                r.row(
                    format!("gap m={m} n=14"),
                    sig(gap),
                    if prev.is_finite() {
                        sig(prev)
                    } else {
                        "-".into()
                    },
                    "0.02 above previous",
                    gap <= prev + 0.02,
                );
                prev = gap;
            }
            r.row(
                "Z2 ratio n=14 step=2",
                sig(reference),
                "-".into(),
                "-",
                true,
            );
        }
        "sampler" => {
            let tree = graph(GraphSpec::Tree { degree: 3 })?;
            let mut table = Vec::new();
            for n in [4, 6, 8, 10, 12] {
                let (m, total) = ctx.exact_mean_sq(&tree, n)?;
                r.row(
                    format!("tree(3) exact mean sq n={n} over {total} walks"),
                    sig(m),
                    sig((n * n) as f64),
                    "0",
                    m == (n * n) as f64,
                );
                table.push((n, m));
            }
            r.near("tree(3) nu", nu_estimate(&table)?, 1.0, 1e-6);
            let hits = ctx.speed_hits(&tree, 12, 0.9, 500, 1)?;
            r.row(
                "tree(3) speed c=0.9 n=12 of 500",
                hits.to_string(),
                "0".into(),
                "0",
                hits == 0,
            );
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown report `{other}`; available: {}",
                NAMES.join(", ")
            )))
        }
    }
    Ok(r.finish())
}
