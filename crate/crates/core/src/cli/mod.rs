//! Corpus, report aggregation and the file formats behind the command line.

pub mod corpus;
pub mod files;
pub mod pipeline;
pub mod report;
pub mod run;

pub use corpus::{corpus, CorpusEntry, Payload, Provenance, Site};
pub use files::{emit_cubic, emit_json, emit_scheme, parse_cubic, parse_scheme};
pub use report::{Check, Outcome, Report, Summary};
pub use run::{run_corpus, GROUPS};
