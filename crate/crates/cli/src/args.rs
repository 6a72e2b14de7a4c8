use clap::{Args, Parser, Subcommand, ValueEnum};

/// Weighted edge ideals: decompositions, covers and classification.
#[derive(Debug, Clone, Parser)]
#[command(name = "edgeideal", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Graph JSON file, or `-` for standard input.
#[derive(Debug, Clone, Args)]
pub struct Input {
    pub input: String,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the minimal generators of the weighted edge ideal.
    Ideal(Input),
    /// Print the irredundant m-irreducible decomposition.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Covers)]
        method: Method,
        /// Also run the other method and fail if the two disagree.
        #[arg(long)]
        check: bool,
    },
    /// List the minimal weighted vertex covers.
    Covers(Input),
    /// Minimize a weighted cover such as `v1^2, v2^5, v4^3`.
    Minimize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cover: String,
    },
    /// Decide unmixedness by enumerating minimal weighted covers.
    Unmixed(Input),
    /// Classify unmixedness and Cohen-Macaulayness by graph family.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = FamilyArg::Auto)]
        family: FamilyArg,
    },
    /// List minimal (default) or associated primes.
    Primes {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "minimal")]
        assoc: bool,
        #[arg(long)]
        minimal: bool,
    },
    /// Print the monomial radical of the weighted edge ideal.
    Radical(Input),
    /// Cross-validate on the input graph or on a random corpus.
    Verify {
        /// Graph JSON file or `-`; omit when using `--random`.
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        input: Option<String>,
        /// Number of random graphs to check.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Covers,
    Split,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Auto,
    Cycle,
    Complete,
    Tree,
    Suspension,
    Path,
}
