use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("regex parse error at position {position}: {message}")]
    RegexParse { position: usize, message: String },

    #[error("invalid word at position {position}: {message}")]
    WordSyntax { position: usize, message: String },

    #[error("unknown state {0}")]
    UnknownState(usize),

    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),

    #[error("automaton has {states} states, above the determinization bound of {bound}")]
    DeterminizationBound { states: usize, bound: usize },

    #[error("word is not in Enc: {message} (position {position})")]
    NotInEnc { position: usize, message: String },

    #[error("word is not accepted by the automaton")]
    NotAccepted,

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("missing edge {{{0}, {1}}}")]
    MissingEdge(usize, usize),

    #[error("invalid graph operation: {0}")]
    InvalidOperation(String),

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("problem `{name}` is not supported: {reason}")]
    Unsupported { name: String, reason: String },

    #[error("search exceeded the limit of {limit} nodes")]
    SearchLimit { limit: u64 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
