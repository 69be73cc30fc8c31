use crate::qkernel::KernelError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("unknown family `{name}`; known families: {known}")]
    UnknownFamily { name: String, known: String },
    #[error("invalid parameter for `{family}`: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("family `{0}` has no generating-function route")]
    NoSeriesRoute(String),
    #[error("family `{0}` has no three-term recurrence")]
    NotThreeTerm(String),
    #[error("routes disagree for {what} at n = {n}: {left} vs {right}")]
    RouteDisagreement { what: String, n: usize, left: String, right: String },
    #[error("unknown check `{id}`; known ids: {known}")]
    UnknownCheck { id: String, known: String },
    #[error("unknown section `{0}`")]
    UnknownSection(String),
}
