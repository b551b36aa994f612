//! Benchmark harness for LLM-driven SPARQL query generation.
//!
//! The library measures how well chat-completion models translate
//! natural-language questions into SPARQL queries over a knowledge graph,
//! under three prompting regimes: zero-shot, knowledge injection (gold
//! entity/property pairs in the prompt), and masked knowledge injection
//! (the same pairs with every KG URI replaced by an opaque `kg:<n>`
//! token). Masked runs quantify how much of a model's apparent skill is
//! memorized identifiers rather than use of the prompt's context.
//!
//! Pipeline stages (each independently re-runnable from the CLI):
//!
//! 1. [`dataset`] — ingest benchmark files and filter evaluable items
//! 2. [`gold`] — extract KG terms from gold queries, resolve labels
//! 3. [`prompt`] — build prompts, mask/unmask URIs
//! 4. [`llm`] — call the model endpoint, extract candidate queries
//! 5. [`sparql`] — validate, execute, and decode results
//! 6. [`answer`] — answer-set comparison against gold
//! 7. [`taxonomy`] — four-category error classification
//! 8. [`report`] — P_val / P metrics and report rendering

pub mod answer;
pub mod config;
pub mod dataset;
pub mod gold;
pub mod llm;
pub mod pipeline;
pub mod prompt;
pub mod record;
pub mod report;
pub mod run_store;
pub mod sparql;
pub mod taxonomy;
pub mod util;
