use novikov_core::Error as CoreError;

/// Everything that can go wrong before a verdict is reached. Every variant
/// that concerns file contents carries the JSON path of the offending value.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{file}: {message}")]
    Io { file: String, message: String },
    #[error("$: JSON syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {kind}: {message}")]
    Input { path: String, kind: String, message: String },
}

impl CliError {
    pub fn at(path: impl Into<String>, kind: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Input { path: path.into(), kind: kind.into(), message: message.into() }
    }

    pub fn core(path: impl Into<String>, e: &CoreError) -> Self {
        CliError::Input { path: path.into(), kind: kind_of(e), message: e.to_string() }
    }

    /// JSON path (or argument name) the error points at.
    pub fn path(&self) -> &str {
        match self {
            CliError::Io { file, .. } => file,
            CliError::Syntax { .. } => "$",
            CliError::Input { path, .. } => path,
        }
    }

    /// The message without the path prefix.
    pub fn detail(&self) -> String {
        match self {
            CliError::Input { message, .. } => message.clone(),
            other => other.to_string(),
        }
    }

    pub fn kind(&self) -> &str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Syntax { .. } => "Syntax",
            CliError::Input { kind, .. } => kind,
        }
    }
}

/// Variant name of a core error, e.g. `NotAcyclic`.
pub fn kind_of(e: &CoreError) -> String {
    let d = format!("{e:?}");
    d.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

pub type CliResult<T> = Result<T, CliError>;

/// Attaches a JSON path to core results.
pub trait At<T> {
    fn at(self, path: &str) -> CliResult<T>;
}

impl<T> At<T> for novikov_core::Result<T> {
    fn at(self, path: &str) -> CliResult<T> {
        self.map_err(|e| CliError::core(path, &e))
    }
}
