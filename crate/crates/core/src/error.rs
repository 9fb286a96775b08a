//! Crate-wide error type.

use std::fmt;

/// Errors produced by corpus ingestion, indexing, retrieval, training and I/O.
#[derive(Debug)]
pub enum Error {
    /// Underlying I/O failure, with the path that was being touched.
    Io { path: String, source: std::io::Error },
    /// A line of an input file failed to parse.
    MalformedRecord { path: String, line: usize, message: String },
    /// Two corpus records share the same document id.
    DuplicateDocId(String),
    /// A document id was referenced but never ingested.
    UnknownDocId(String),
    /// Operation requires a non-empty corpus.
    EmptyCorpus,
    /// Vector length does not match the declared dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// Embedding file header or payload is invalid.
    BadEmbeddingFile { path: String, message: String },
    /// Mean of chunk embeddings is the zero vector and cannot be normalized.
    DegenerateEmbedding,
    /// Input text was empty where content is required.
    EmptyText,
    /// A topic label is outside the declared label set.
    UnknownTopic(String),
    /// k-NN neighbour count must be smaller than the node count.
    KnnTooLarge { knn_k: usize, nodes: usize },
    /// Ranked lists passed to a merge carry different query ids.
    QueryIdMismatch { expected: String, got: String },
    /// A ranked list violates its ordering/uniqueness invariants.
    InvalidRankedList(String),
    /// A query id was not found in the supplied runs or qrels.
    MissingQuery(String),
    /// No relevant documents are judged for a query.
    NoRelevantDocs(String),
    /// Training data carries no ranking signal (all labels equal).
    DegenerateTraining,
    /// Hyperparameter search space is empty or trials is zero.
    EmptySearchSpace(String),
    /// A prompt template slot was not supplied.
    MissingSlot(String),
    /// LLM response could not be interpreted at all.
    UnparseableResponse(String),
    /// Remote transport failed after retries, or replay has no recorded answer.
    Transport(String),
    /// Listwise rerank aborted mid-pass; carries the partial result.
    RerankInterrupted {
        partial: crate::ranked::RankedList,
        resume_window: usize,
        cause: String,
    },
    /// Pipeline or CLI configuration is invalid.
    InvalidConfig(String),
    /// Catch-all for precondition violations (k = 0, bad proportions, ...).
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Io { path, source } => write!(f, "i/o error on {path}: {source}"),
            Error::MalformedRecord { path, line, message } => {
                write!(f, "{path}:{line}: malformed record: {message}")
            }
            Error::DuplicateDocId(id) => write!(f, "duplicate doc_id {id:?}"),
            Error::UnknownDocId(id) => write!(f, "unknown doc_id {id:?}"),
            Error::EmptyCorpus => write!(f, "corpus is empty"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::BadEmbeddingFile { path, message } => {
                write!(f, "bad embedding file {path}: {message}")
            }
            Error::DegenerateEmbedding => write!(f, "degenerate average: zero embedding vector"),
            Error::EmptyText => write!(f, "input text is empty"),
            Error::UnknownTopic(t) => write!(f, "topic label {t:?} outside declared label set"),
            Error::KnnTooLarge { knn_k, nodes } => {
                write!(f, "knn_k {knn_k} must be smaller than node count {nodes}")
            }
            Error::QueryIdMismatch { expected, got } => {
                write!(f, "query id mismatch: expected {expected:?}, got {got:?}")
            }
            Error::InvalidRankedList(msg) => write!(f, "invalid ranked list: {msg}"),
            Error::MissingQuery(q) => write!(f, "query {q:?} absent from input"),
            Error::NoRelevantDocs(q) => write!(f, "no relevant documents judged for query {q:?}"),
            Error::DegenerateTraining => {
                write!(f, "training refused: all labels equal, no ranking signal")
            }
            Error::EmptySearchSpace(msg) => write!(f, "empty search space: {msg}"),
            Error::MissingSlot(slot) => write!(f, "missing template slot {slot:?}"),
            Error::UnparseableResponse(msg) => write!(f, "unparseable response: {msg}"),
            Error::Transport(msg) => write!(f, "transport failure: {msg}"),
            Error::RerankInterrupted { resume_window, cause, .. } => {
                write!(f, "rerank interrupted before window {resume_window}: {cause}")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid config: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn malformed(path: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::MalformedRecord { path: path.into(), line, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
