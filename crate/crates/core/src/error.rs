use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("Weyl orbit exceeds cap of {cap} elements")]
    OrbitCap { cap: usize },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid field data: {0}")]
    InvalidField(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The input lies outside every regime where a verdict can be certified.
    #[error("unsupported regime: {0}")]
    Unsupported(String),

    #[error("{}parse error: {msg}", fmt_pos(*.line))]
    Parse { line: Option<usize>, msg: String },
}

fn fmt_pos(line: Option<usize>) -> String {
    match line {
        Some(l) => format!("line {l}: "),
        None => String::new(),
    }
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse { line: None, msg: msg.into() }
    }

    pub fn parse_at(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line: Some(line), msg: msg.into() }
    }

    /// Attaches a line number to a parse error that does not carry one yet.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse { line: None, msg } => Error::Parse { line: Some(line), msg },
            Error::Parse { .. } => self,
            other => Error::Parse { line: Some(line), msg: other.to_string() },
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
