use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "trace-recon",
    version,
    about = "Exact trace counts, worst-case pairs, reconstruction and channel analysis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum number of shared traces N+ for the given parameters.
    Nplus(NplusArgs),
    /// Run a verification suite against its oracle or identity.
    Verify(VerifyArgs),
    /// Trace requirement and its reduction as the code distance grows.
    Tradeoff(TradeoffArgs),
    /// Reconstruct a word from a file of traces.
    Reconstruct(ReconstructArgs),
    /// Insertion-channel table of p_i, T_i, E_i, with optional simulation.
    Channel(ChannelArgs),
    /// Worst-case codeword pairs of a VT code.
    Pairs(PairsArgs),
}

#[derive(Debug, Args)]
pub struct NplusArgs {
    #[arg(short)]
    pub n: u64,
    /// Insertions into the shorter word.
    #[arg(short)]
    pub t: u64,
    /// Insertions into the longer word; defaults to t.
    #[arg(short)]
    pub k: Option<u64>,
    /// Distance parameter: the words are at edit distance at least t-k+2l.
    #[arg(short)]
    pub l: u64,
    #[arg(short, default_value_t = 2)]
    pub q: u32,
    /// Also report N+ + 1, the number of traces that guarantees reconstruction.
    #[arg(long)]
    pub required: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of oracle-nplus, recursions, identities, corollaries, vt-pairs,
    /// circular, deletion, channel-example.
    pub suite: String,
    /// Restrict vt-pairs to this length.
    #[arg(short)]
    pub n: Option<usize>,
    /// Oracle work budget in word pairs (overrides TRACE_RECON_BUDGET).
    #[arg(long)]
    pub budget: Option<u128>,
}

#[derive(Debug, Args)]
pub struct TradeoffArgs {
    #[arg(short)]
    pub n: u64,
    #[arg(short)]
    pub t: u64,
    /// Largest distance parameter in the table.
    #[arg(short)]
    pub l: u64,
    #[arg(short, default_value_t = 2)]
    pub q: u32,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    /// Newline-delimited traces; `#` starts a comment.
    pub traces: PathBuf,
    /// Candidate file in the same format as the traces.
    #[arg(long, conflicts_with_all = ["n", "a"])]
    pub candidates: Option<PathBuf>,
    /// Codeword length of the VT code used as candidate set.
    #[arg(short, requires = "a")]
    pub n: Option<usize>,
    /// Residue of the VT code used as candidate set.
    #[arg(short, requires = "n")]
    pub a: Option<usize>,
    #[arg(short, default_value_t = 2)]
    pub q: u8,
}

#[derive(Debug, Args)]
pub struct ChannelArgs {
    #[arg(short)]
    pub n: usize,
    /// Insertion probability.
    #[arg(short)]
    pub p: f64,
    #[arg(short, default_value_t = 2)]
    pub l: usize,
    #[arg(short, default_value_t = 2)]
    pub q: u8,
    /// Largest insertion count in the table.
    #[arg(long, default_value_t = 10)]
    pub i_max: usize,
    /// Number of seeded transmission runs to simulate.
    #[arg(long)]
    pub simulate: Option<u64>,
    /// Residue of the VT code the simulated source is drawn from.
    #[arg(short, default_value_t = 0)]
    pub a: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Transmission cap per simulated run.
    #[arg(long, default_value_t = 1_000_000)]
    pub limit: usize,
    /// Drop repeated outputs instead of assuming every output is new.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct PairsArgs {
    #[arg(short)]
    pub n: usize,
    #[arg(short)]
    pub a: usize,
    #[arg(short, default_value_t = 2)]
    pub t: usize,
    /// Emit at most this many pairs (exhaustive mode) or draw this many
    /// (with --seed).
    #[arg(long)]
    pub limit: Option<usize>,
    /// Sample the free positions with this seed instead of enumerating.
    #[arg(long)]
    pub seed: Option<u64>,
}
