use std::fmt;

/// A failed run: message for stderr and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

pub const IO: i32 = 1;
pub const USAGE: i32 = 2;
pub const PARSE: i32 = 3;
pub const CYCLIC: i32 = 4;
pub const OVERFLOW: i32 = 5;

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            message: message.into(),
        }
    }

    pub fn io(what: impl fmt::Display, err: std::io::Error) -> Self {
        Failure {
            code: IO,
            message: format!("{what}: {err}"),
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: PARSE,
            message: message.into(),
        }
    }
}

impl From<citenet::Error> for Failure {
    fn from(err: citenet::Error) -> Self {
        use citenet::Error;
        let code = match err {
            Error::Parse { .. } => PARSE,
            Error::Argument(_) => USAGE,
            Error::Cyclic { .. } => CYCLIC,
            Error::Overflow { .. } => OVERFLOW,
            Error::Internal(_) => IO,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}
