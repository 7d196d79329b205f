use serde::Serialize;

/// Failure of one invocation, with its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Invalid flags or parameters: exit 2 with a one-line diagnostic.
    Usage(String),
    /// Numerical failure: exit 1 with a JSON error report.
    Numeric(semigen::Error),
    /// Filesystem failure: exit 1 with a JSON error report.
    Io(String),
    Internal(String),
}

impl From<semigen::Error> for CliError {
    fn from(e: semigen::Error) -> Self {
        if e.is_input() {
            CliError::Usage(e.to_string())
        } else {
            CliError::Numeric(e)
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    /// Structured report for exit code 1.
    pub fn to_json(&self) -> String {
        let (kind, message) = match self {
            CliError::Usage(m) => ("Usage", m.clone()),
            CliError::Numeric(e) => (e.kind(), e.to_string()),
            CliError::Io(m) => ("Io", m.clone()),
            CliError::Internal(m) => ("Internal", m.clone()),
        };
        let report = ErrorReport { error: ErrorBody { kind, message } };
        serde_json::to_string(&report).expect("error report serializes")
    }
}
