use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use core::fmt;

/// Serializable description of a graph in the built-in zoo.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Hypercubic {
        dim: u32,
    },
    Ladder,
    Hexagonal,
    Triangular,
    SquareOctagon,
    Tree {
        degree: u32,
    },
    Bridge {
        degree: u32,
    },
    FreeProduct {
        degree: u32,
        girth: u32,
    },
    Cylinder {
        m: u32,
    },
    Fisher {
        base: Box<GraphSpec>,
    },
    Semicubic {
        base: Box<GraphSpec>,
        coloring: String,
    },
}

impl GraphSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GraphSpec::Hypercubic { .. } => "hypercubic",
            GraphSpec::Ladder => "ladder",
            GraphSpec::Hexagonal => "hexagonal",
            GraphSpec::Triangular => "triangular",
            GraphSpec::SquareOctagon => "square-octagon",
            GraphSpec::Tree { .. } => "tree",
            GraphSpec::Bridge { .. } => "bridge",
            GraphSpec::FreeProduct { .. } => "free-product",
            GraphSpec::Cylinder { .. } => "cylinder",
            GraphSpec::Fisher { .. } => "fisher",
            GraphSpec::Semicubic { .. } => "fisher-semicubic",
        }
    }

    /// Byte-stable JSON: keys sorted, integers only, no whitespace.
    pub fn canonical_json(&self) -> String {
        let family = self.family();
        match self {
            GraphSpec::Hypercubic { dim } => format!(r#"{{"dim":{dim},"family":"{family}"}}"#),
            GraphSpec::Tree { degree } | GraphSpec::Bridge { degree } => {
                format!(r#"{{"degree":{degree},"family":"{family}"}}"#)
            }
            GraphSpec::FreeProduct { degree, girth } => {
                format!(r#"{{"degree":{degree},"family":"{family}","girth":{girth}}}"#)
            }
            GraphSpec::Cylinder { m } => format!(r#"{{"family":"{family}","m":{m}}}"#),
            GraphSpec::Fisher { base } => {
                format!(
                    r#"{{"base":{},"family":"{family}"}}"#,
                    base.canonical_json()
                )
            }
            GraphSpec::Semicubic { base, coloring } => format!(
                r#"{{"base":{},"coloring":"{}","family":"{family}"}}"#,
                base.canonical_json(),
                escape(coloring)
            ),
            GraphSpec::Ladder
            | GraphSpec::Hexagonal
            | GraphSpec::Triangular
            | GraphSpec::SquareOctagon => format!(r#"{{"family":"{family}"}}"#),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_json())
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}
