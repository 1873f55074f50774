use blockcalc_core::Error;

/// Failures while reading user input, before any algebra runs.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    CocycleInvalid(usize, usize, usize),

    #[error(transparent)]
    Core(Error),

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl InputError {
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self::Schema { path: path.into(), message: message.into() }
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        match e {
            Error::CocycleInvalid(s, t, r) => Self::CocycleInvalid(s, t, r),
            Error::NotNormalized(s, t) => Self::schema("cocycle", format!("not normalized at ({}, {})", s, t)),
            Error::ShapeMismatch { order } => Self::schema("cocycle", format!("shape does not match order {}", order)),
            e => Self::Core(e),
        }
    }
}
