//! Exact worst-case trace counts for reconstructing codewords from
//! insertion-corrupted traces.
//!
//! The crate covers words and their insertion/deletion balls, closed-form
//! counts with exhaustive oracles, Varshamov-Tenengolts codes and their
//! worst-case pairs, reconstruction from trace pools, and the probabilistic
//! insertion channel.

pub mod balls;
pub mod binom;
pub mod channel;
pub mod error;
pub mod formulas;
pub mod oracle;
pub mod reconstruct;
pub mod verify;
pub mod vt;
pub mod word;

pub use balls::{deletion_ball, edit_distance, indel_ball, insertion_ball, insertion_ball_size};
pub use channel::ChannelModel;
pub use error::{Error, Result};
pub use formulas::{n_plus, n_plus_equal, FormulaParams};
pub use oracle::{Budget, OracleResult};
pub use reconstruct::{reconstruct_exact, Reconstruction, TracePool};
pub use vt::{VtCode, WorstCasePair};
pub use word::Word;
