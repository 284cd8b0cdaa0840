use sawlab_core::GraphSpec;
use serde_json::{Map, Value};

use crate::args::GraphOpts;
use crate::error::{CliError, CliResult};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn uint(obj: &Map<String, Value>, key: &str, family: &str) -> CliResult<u32> {
    let v = obj
        .get(key)
        .ok_or_else(|| usage(format!("family `{family}` needs `{key}`")))?;
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| usage(format!("`{key}` must be a non-negative integer, got {v}")))
}

/// Parses a graph spec object, rejecting unknown or missing parameters.
pub fn parse_spec(value: &Value) -> CliResult<GraphSpec> {
    let obj = value
        .as_object()
        .ok_or_else(|| usage("graph spec must be a JSON object"))?;
    let family = obj
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| usage("graph spec needs a string `family`"))?;
    let allowed: &[&str] = match family {
        "hypercubic" => &["dim"],
        "tree" | "bridge" => &["degree"],
        "free-product" => &["degree", "girth"],
        "cylinder" => &["m"],
        "fisher" => &["base"],
        "fisher-semicubic" => &["base", "coloring"],
        "ladder" | "hexagonal" | "triangular" | "square-octagon" => &[],
        other => {
            return Err(usage(format!(
                "unknown family `{other}`; see `sawlab families`"
            )))
        }
    };
    for key in obj.keys() {
        if key != "family" && !allowed.contains(&key.as_str()) {
            return Err(usage(format!(
                "family `{family}` takes no parameter `{key}`"
            )));
        }
    }
    let base = || -> CliResult<Box<GraphSpec>> {
        let b = obj
            .get("base")
            .ok_or_else(|| usage(format!("family `{family}` needs `base`")))?;
        Ok(Box::new(parse_spec(b)?))
    };
    Ok(match family {
        "hypercubic" => GraphSpec::Hypercubic {
            dim: uint(obj, "dim", family)?,
        },
        "tree" => GraphSpec::Tree {
            degree: uint(obj, "degree", family)?,
        },
        "bridge" => GraphSpec::Bridge {
            degree: uint(obj, "degree", family)?,
        },
        "free-product" => GraphSpec::FreeProduct {
            degree: uint(obj, "degree", family)?,
            girth: uint(obj, "girth", family)?,
        },
        "cylinder" => GraphSpec::Cylinder {
            m: uint(obj, "m", family)?,
        },
        "fisher" => GraphSpec::Fisher { base: base()? },
        "fisher-semicubic" => GraphSpec::Semicubic {
            base: base()?,
            coloring: obj
                .get("coloring")
                .and_then(Value::as_str)
                .ok_or_else(|| usage("family `fisher-semicubic` needs a string `coloring`"))?
                .to_string(),
        },
        "ladder" => GraphSpec::Ladder,
        "hexagonal" => GraphSpec::Hexagonal,
        "triangular" => GraphSpec::Triangular,
        _ => GraphSpec::SquareOctagon,
    })
}

impl GraphOpts {
    pub fn is_given(&self) -> bool {
        self.family.is_some() || self.graph.is_some()
    }

    pub fn spec(&self) -> CliResult<GraphSpec> {
        if let Some(text) = &self.graph {
            let flags = self.dim.is_some()
                || self.degree.is_some()
                || self.girth.is_some()
                || self.m.is_some()
                || self.coloring.is_some();
            if flags {
                return Err(usage("--graph cannot be combined with parameter flags"));
            }
            let v: Value = serde_json::from_str(text)
                .map_err(|e| usage(format!("--graph is not valid JSON: {e}")))?;
            return parse_spec(&v);
        }
        let family = self
            .family
            .as_ref()
            .ok_or_else(|| usage("select a graph with --family or --graph"))?;
        if matches!(family.as_str(), "fisher" | "fisher-semicubic") {
            return Err(usage(format!(
                "family `{family}` has a base graph; use --graph"
            )));
        }
        let mut obj = Map::new();
        obj.insert("family".into(), Value::from(family.clone()));
        for (key, v) in [
            ("dim", self.dim),
            ("degree", self.degree),
            ("girth", self.girth),
            ("m", self.m),
        ] {
            if let Some(v) = v {
                obj.insert(key.into(), Value::from(v));
            }
        }
        if let Some(c) = &self.coloring {
            obj.insert("coloring".into(), Value::from(c.clone()));
        }
        parse_spec(&Value::Object(obj))
    }
}
