use std::fmt;

/// A failure together with the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or unparsable input.
    Usage(String),
    /// Well-formed input describing no valid polygon space.
    Domain(String),
    Budget(String),
    /// A verification reported failures.
    Check(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Budget(_) => 4,
            CliError::Check(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Budget(m) | CliError::Check(m) => {
                f.write_str(m)
            }
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<polyzcl::Error> for CliError {
    fn from(e: polyzcl::Error) -> Self {
        use polyzcl::Error as E;
        let msg = e.to_string();
        match e {
            E::Parse(_)
            | E::NotAntichain(_)
            | E::InvalidLengths(_)
            | E::NotGeneric(_)
            | E::SizeLimit { .. }
            | E::InvalidArgument(_) => CliError::Usage(msg),
            E::EmptySpace(_) | E::NotRealizable(_) | E::Disconnected(_) | E::NoPartition(_) => {
                CliError::Domain(msg)
            }
            E::BudgetExceeded(_) => CliError::Budget(msg),
            E::IsoViolation(_) => CliError::Check(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
