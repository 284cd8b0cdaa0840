use sawlab_core::bounds::{
    cubic_girth3_equation, cubic_girth_lower, estimate_lambda, fisher_iterate, fisher_mu_pull,
    fisher_mu_push, girth_degree_upper, mu_interval_from, ratio_estimate_from, semicubic_solve,
    spectral_lower, PHI,
};
use sawlab_core::graph::zoo;
use sawlab_core::sampler::{displacement_stats, nu_estimate, SampleIndex, StatsMode};
use sawlab_core::{make_family, quotient_cylinder, EnumConfig, GraphSpec, RootedGraph, SeriesKind};
use serde_json::{Map, Value};

use crate::args::{Command, CommonOpts, GraphOpts, Mode};
use crate::cache::{Cache, ENV_DIR};
use crate::ctx::Ctx;
use crate::error::{CliError, CliResult};
use crate::output::{sig, RunConfig, Table};
use crate::report;

pub struct Outcome {
    pub config: RunConfig,
    pub table: Table,
    /// Set when the table holds a series cut short by the budget.
    pub truncated: bool,
}

fn spec_value(spec: &GraphSpec) -> Value {
    serde_json::from_str(&spec.canonical_json()).expect("canonical spec is JSON")
}

fn base_config(command: &str, opts: &CommonOpts, cache: Option<&Cache>) -> RunConfig {
    RunConfig {
        command: command.into(),
        graph: None,
        n: None,
        n_list: None,
        count: None,
        seed: None,
        workers: opts.workers,
        budget: opts.budget,
        prefix_depth: opts.prefix_depth,
        format: opts.format.as_str(),
        cache: cache.map(|c| c.path().display().to_string()),
        extra: Map::new(),
    }
}

fn open_cache(opts: &CommonOpts) -> CliResult<Option<Cache>> {
    let dir = opts.cache.clone().or_else(|| {
        std::env::var_os(ENV_DIR)
            .filter(|v| !v.is_empty())
            .map(Into::into)
    });
    dir.map(|d| Cache::open(&d)).transpose()
}

fn need_graph(graph: &GraphOpts) -> CliResult<(GraphSpec, RootedGraph)> {
    let spec = graph.spec()?;
    let g = make_family(&spec)?;
    Ok((spec, g))
}

fn extra(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

pub fn run(command: Command, opts: &CommonOpts) -> CliResult<Outcome> {
    let cache = open_cache(opts)?;
    let cfg = EnumConfig {
        workers: opts.workers,
        prefix_depth: opts.prefix_depth,
        budget: opts.budget,
    };
    let name = command_name(&command);
    let mut config = base_config(name, opts, cache.as_ref());
    let mut ctx = Ctx { cfg, cache };
    let mut truncated = false;
    let table = match command {
        Command::Families => families(),
        Command::Count { graph, n } | Command::Bridges { graph, n } => {
            let (spec, g) = need_graph(&graph)?;
            config.graph = Some(spec_value(&spec));
            config.n = Some(n);
            let kind = if name == "count" {
                SeriesKind::Saw
            } else {
                SeriesKind::Bridge
            };
            let s = ctx.series(&g, kind, n)?;
            let mut t = Table::new(&["n", if name == "count" { "sigma" } else { "bridges" }]);
            for (i, v) in s.values.iter().enumerate() {
                t.push(vec![i.to_string(), v.to_string()]);
            }
            if let Some(r) = s.rigor {
                t.note("height_rigor", format!("{r:?}").to_lowercase());
            }
            if let Some(tr) = s.truncated {
                truncated = true;
                t.note(
                    "truncated",
                    format!("completed {} of {}", tr.completed, tr.requested),
                );
            }
            t
        }
        Command::Interval { graph, n } => {
            let (spec, g) = need_graph(&graph)?;
            config.graph = Some(spec_value(&spec));
            config.n = Some(n);
            interval_table(&mut ctx, &g, n)?
        }
        Command::Ratio { graph, n, step } => {
            let (spec, g) = need_graph(&graph)?;
            config.graph = Some(spec_value(&spec));
            config.n = Some(n);
            config.extra = extra(&[("step", step.into())]);
            if !(step == 1 || step == 2) {
                return Err(CliError::Usage(format!(
                    "--step must be 1 or 2, got {step}"
                )));
            }
            let s = ctx.complete(&g, SeriesKind::Saw, n + step)?;
            let r = ratio_estimate_from(&s, n, step)?;
            let mut t = Table::new(&["graph_key", "n", "step", "ratio"]);
            t.push(vec![g.key(), n.to_string(), step.to_string(), sig(r)]);
            t
        }
        Command::Fisher {
            pull,
            push,
            iterate,
            k,
            semicubic,
        } => {
            let mut t = Table::new(&["op", "k", "input", "output"]);
            if let Some(x) = pull {
                config.extra = extra(&[("pull", x.into())]);
                t.push(vec![
                    "pull".into(),
                    "1".into(),
                    sig(x),
                    sig(fisher_mu_pull(x)?),
                ]);
            } else if let Some(x) = push {
                config.extra = extra(&[("push", x.into())]);
                t.push(vec![
                    "push".into(),
                    "1".into(),
                    sig(x),
                    sig(fisher_mu_push(x)?),
                ]);
            } else if let Some(x) = semicubic {
                config.extra = extra(&[("semicubic", x.into())]);
                t.push(vec![
                    "semicubic".into(),
                    "1".into(),
                    sig(x),
                    sig(semicubic_solve(x)?),
                ]);
            } else if let (Some(x), Some(k)) = (iterate, k) {
                config.extra = extra(&[("iterate", x.into()), ("k", k.into())]);
                for (i, mu) in fisher_iterate(x, k)?.into_iter().enumerate() {
                    t.push(vec!["iterate".into(), i.to_string(), sig(x), sig(mu)]);
                }
            }
            t
        }
        Command::Girthbound { degree, girth } => {
            config.extra = extra(&[("degree", degree.into()), ("girth", girth.into())]);
            let mut t = Table::new(&["degree", "girth", "upper"]);
            t.push(vec![
                degree.to_string(),
                girth.to_string(),
                sig(girth_degree_upper(degree, girth)?),
            ]);
            t
        }
        Command::Cubiclower { girth } => {
            config.extra = extra(&[("girth", girth.into())]);
            let x = cubic_girth_lower(girth)?;
            let mut t = Table::new(&["girth", "lower"]);
            t.push(vec![girth.to_string(), sig(x)]);
            if girth == 3 {
                t.note("residual", format!("{:e}", cubic_girth3_equation(x)));
            }
            t
        }
        Command::Spectral {
            graph,
            lambda,
            estimate,
            n,
        } => {
            let (degree, lambda, rigor) = if estimate {
                let (spec, g) = need_graph(&graph)?;
                config.graph = Some(spec_value(&spec));
                config.n = Some(n);
                (g.degree, estimate_lambda(&g, n, &ctx.cfg)?, "heuristic")
            } else if graph.is_given() {
                let (spec, g) = need_graph(&graph)?;
                config.graph = Some(spec_value(&spec));
                (g.degree, lambda.unwrap_or(0.0), "given")
            } else {
                let d = graph
                    .degree
                    .ok_or_else(|| CliError::Usage("spectral needs --degree or a graph".into()))?;
                (d, lambda.unwrap_or(0.0), "given")
            };
            config.extra = extra(&[("degree", degree.into()), ("lambda", lambda.into())]);
            let mut t = Table::new(&["degree", "lambda", "lower", "lambda_source"]);
            t.push(vec![
                degree.to_string(),
                sig(lambda),
                sig(spectral_lower(degree, lambda)?),
                rigor.into(),
            ]);
            t
        }
        Command::Locality { m, n } => {
            config.n = Some(n);
            config.extra = extra(&[("m", m.clone().into())]);
            locality_table(&mut ctx, &m, n)?
        }
        Command::Sample {
            graph,
            n,
            count,
            seed,
        } => {
            let (spec, g) = need_graph(&graph)?;
            config.graph = Some(spec_value(&spec));
            config.n = Some(n);
            config.count = Some(count);
            config.seed = Some(seed);
            if count == 0 {
                return Err(CliError::Usage("--count must be >= 1".into()));
            }
            let index = SampleIndex::new(&g, n, &ctx.cfg)?;
            if index.total() == 0 {
                return Err(CliError::Usage(format!("no {n}-step walks")));
            }
            let mut t = Table::new(&["index", "n", "displacement", "vertices"]);
            for i in 0..count as u64 {
                let s = index.to_sample(&index.draw(seed, i)?);
                let path: Vec<String> = s.vertices.iter().map(|v| v.to_string()).collect();
                t.push(vec![
                    i.to_string(),
                    n.to_string(),
                    s.displacement.to_string(),
                    path.join(" "),
                ]);
            }
            t.note("total", index.total().to_string());
            t
        }
        Command::Nu {
            graph,
            n,
            count,
            seed,
            mode,
        } => {
            let (spec, g) = need_graph(&graph)?;
            config.graph = Some(spec_value(&spec));
            config.n_list = Some(n.clone());
            config.count = Some(count);
            config.seed = Some(seed);
            let mode_name = match mode {
                Mode::Auto => "auto",
                Mode::Exact => "exact",
                Mode::Mc => "mc",
            };
            config.extra = extra(&[("mode", mode_name.into())]);
            let mode = match mode {
                Mode::Auto => StatsMode::Auto,
                Mode::Exact => StatsMode::Exact,
                Mode::Mc => StatsMode::MonteCarlo,
            };
            let rows = displacement_stats(&g, &n, count, seed, mode, &ctx.cfg)?;
            let mut t = Table::new(&[
                "n",
                "mean_sq_displacement",
                "stderr",
                "count",
                "seed",
                "exact",
            ]);
            for r in &rows {
                t.push(vec![
                    r.n.to_string(),
                    sig(r.mean_sq),
                    sig(r.stderr),
                    r.count.to_string(),
                    seed.to_string(),
                    r.exact.to_string(),
                ]);
            }
            let table: Vec<(usize, f64)> = rows.iter().map(|r| (r.n, r.mean_sq)).collect();
            match nu_estimate(&table) {
                Ok(nu) => t.note("nu", sig(nu)),
                Err(e) => t.note("nu", format!("unavailable: {e}")),
            }
            t
        }
        Command::Speed {
            graph,
            n,
            c,
            count,
            seed,
        } => {
            let (spec, g) = need_graph(&graph)?;
            config.graph = Some(spec_value(&spec));
            config.n = Some(n);
            config.count = Some(count);
            config.seed = Some(seed);
            config.extra = extra(&[("c", c.into())]);
            if c.is_nan() || c <= 0.0 || count == 0 {
                return Err(CliError::Usage(
                    "--c must be positive and --count >= 1".into(),
                ));
            }
            let hits = ctx.speed_hits(&g, n, c, count, seed)?;
            let p = hits as f64 / count as f64;
            let half = 1.96 * (p * (1.0 - p) / count as f64).sqrt();
            let mut t = Table::new(&["n", "c", "frequency", "half_width", "count", "seed"]);
            t.push(vec![
                n.to_string(),
                sig(c),
                sig(p),
                sig(half),
                count.to_string(),
                seed.to_string(),
            ]);
            t
        }
        Command::Report { name } => {
            config.extra = extra(&[("name", name.clone().into())]);
            report::run(&name, &mut ctx)?
        }
    };
    Ok(Outcome {
        config,
        table,
        truncated,
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Families => "families",
        Command::Count { .. } => "count",
        Command::Bridges { .. } => "bridges",
        Command::Interval { .. } => "interval",
        Command::Ratio { .. } => "ratio",
        Command::Fisher { .. } => "fisher",
        Command::Girthbound { .. } => "girthbound",
        Command::Cubiclower { .. } => "cubiclower",
        Command::Spectral { .. } => "spectral",
        Command::Locality { .. } => "locality",
        Command::Sample { .. } => "sample",
        Command::Nu { .. } => "nu",
        Command::Speed { .. } => "speed",
        Command::Report { .. } => "report",
    }
}

fn families() -> Table {
    let mut t = Table::new(&["family", "example", "params", "transitive", "height"]);
    for (spec, hint) in zoo() {
        let g = make_family(&spec).expect("zoo examples build");
        let height = match &g.height {
            Some(h) => format!("{:?}", h.rigor).to_lowercase(),
            None => "none".into(),
        };
        t.push(vec![
            spec.family().into(),
            spec.canonical_json(),
            hint,
            g.is_transitive().to_string(),
            height,
        ]);
    }
    t
}

pub fn interval_table(ctx: &mut Ctx, g: &RootedGraph, n: usize) -> CliResult<Table> {
    let saws = ctx.complete(g, SeriesKind::Saw, n)?;
    let bridges = match g.height {
        Some(_) => Some(ctx.complete(g, SeriesKind::Bridge, n)?),
        None => None,
    };
    let iv = mu_interval_from(g, &saws, bridges.as_ref(), n)?;
    let mut t = Table::new(&[
        "graph_key",
        "method",
        "n",
        "lower",
        "upper",
        "rigor_lower",
        "rigor_upper",
    ]);
    t.push(vec![
        g.key(),
        iv.method.into(),
        n.to_string(),
        sig(iv.lower),
        sig(iv.upper),
        iv.lower_rigor.to_string(),
        iv.upper_rigor.to_string(),
    ]);
    Ok(t)
}

/// Two-step ratio estimates at length n on each cylinder and on Z².
pub fn locality_rows(ctx: &mut Ctx, widths: &[u32], n: usize) -> CliResult<(Vec<(u32, f64)>, f64)> {
    if widths.is_empty() {
        return Err(CliError::Usage("--m needs at least one width".into()));
    }
    let plane = make_family(&GraphSpec::Hypercubic { dim: 2 })?;
    let reference = ratio_estimate_from(&ctx.complete(&plane, SeriesKind::Saw, n + 2)?, n, 2)?;
    let mut rows = Vec::with_capacity(widths.len());
    for &m in widths {
        let g = quotient_cylinder(m)?;
        rows.push((
            m,
            ratio_estimate_from(&ctx.complete(&g, SeriesKind::Saw, n + 2)?, n, 2)?,
        ));
    }
    Ok((rows, reference))
}

fn locality_table(ctx: &mut Ctx, widths: &[u32], n: usize) -> CliResult<Table> {
    let (rows, reference) = locality_rows(ctx, widths, n)?;
    let mut t = Table::new(&["m", "mu_hat", "gap"]);
    for (m, mu) in rows {
        t.push(vec![m.to_string(), sig(mu), sig((mu - reference).abs())]);
    }
    t.push(vec!["plane".into(), sig(reference), sig(0.0)]);
    Ok(t)
}

pub fn phi_deviation_bounds(k: usize) -> (f64, f64) {
    let k = k as i32;
    (-(4f64 / 7.0).powi(k), (2.0 / (7.0 - 5f64.sqrt())).powi(k))
}

pub fn reciprocal_deviation(mu: f64) -> f64 {
    1.0 / mu - 1.0 / PHI
}
