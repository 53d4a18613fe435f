use dgbr_core::Error as CoreError;
use serde_json::{json, Value};
use thiserror::Error;

/// Failure of a command before it could produce a verdict.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Malformed or inconsistent input. `path` locates the offending field
    /// (`mult[3].out[0]`), `axiom` names the violated axiom when there is one.
    #[error("invalid input at {path}: {}{message}", axiom_prefix(.axiom))]
    Invalid { path: String, axiom: Option<String>, message: String },

    /// An error from the library. Some of these are negative answers rather
    /// than bad input, see [`CliError::exit_code`].
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: CoreError,
    },
}

fn axiom_prefix(axiom: &Option<String>) -> String {
    match axiom {
        Some(a) => format!("axiom {a} fails: "),
        None => String::new(),
    }
}

impl CliError {
    pub fn invalid(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid { path: path.into(), axiom: None, message: message.into() }
    }

    pub fn core(context: impl Into<String>, source: CoreError) -> Self {
        CliError::Core { context: context.into(), source }
    }

    /// 1 for library errors that answer the question negatively, 2 for invalid
    /// input, 3 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 3,
            CliError::Invalid { .. } => 2,
            CliError::Core { source, .. } => match source {
                CoreError::NotCentralSimple
                | CoreError::NoSuitableIdempotent(_)
                | CoreError::Indeterminate
                | CoreError::VerificationFailed(_) => 1,
                _ => 2,
            },
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Io { path, source } => json!({"error": "io", "path": path, "message": source.to_string()}),
            CliError::Invalid { path, axiom, message } => {
                json!({"error": "invalid", "path": path, "axiom": axiom, "message": message})
            }
            CliError::Core { context, source } => {
                let kind = if self.exit_code() == 1 { "negative" } else { "invalid" };
                json!({"error": kind, "path": context, "axiom": Value::Null, "message": source.to_string()})
            }
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
