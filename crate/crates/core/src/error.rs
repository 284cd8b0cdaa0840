use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("unsupported family `{0}`")]
    UnsupportedFamily(String),
    #[error("parameter `{param}` of `{family}` out of range: {value}")]
    ParamOutOfRange {
        family: &'static str,
        param: &'static str,
        value: i64,
    },
    #[error("malformed vertex id {id} for {family}")]
    MalformedVertex { family: &'static str, id: String },
    #[error("operation requires a cubic graph, found degree {0}")]
    NotCubic(u32),
    #[error("operation requires a simple undirected graph")]
    NotSimple,
    #[error("coloring is not proper at vertex {0}")]
    ImproperColoring(String),
    #[error("black vertex {id} has degree {degree}, expected 3")]
    BlackDegree { id: String, degree: u32 },
    #[error("graph has no height function")]
    MissingHeight,
    #[error("node-visit budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("weighted walk count overflowed 128 bits")]
    CountOverflow,
    #[error("series of length {have} is too short, need index {need}")]
    SeriesTooShort { have: usize, need: usize },
    #[error("zero denominator in ratio estimate at n = {0}")]
    ZeroDenominator(usize),
    #[error("no root bracketed in ({lo}, {hi})")]
    NoRoot { lo: f64, hi: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("no exact value known for {0}")]
    NoExactValue(String),
    #[error("degenerate table: {0}")]
    DegenerateTable(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
