use clap::{Args, Parser, Subcommand, ValueEnum};

use shellable::random::DEFAULT_SEED;

#[derive(Parser, Debug)]
#[command(
    name = "shellable",
    version,
    about = "Set families, shellability, configurations of transversals and tableau counts",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for the report.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A family given directly or as the hook family of a shape.
#[derive(Args, Debug, Clone, Default)]
pub struct FamilyInput {
    /// Family as JSON, e.g. '{"n":2,"members":[[1,2],[1,2]]}'.
    #[arg(long, conflicts_with = "shape")]
    pub family: Option<String>,

    /// Skew shape as JSON, e.g. '{"lambda":[3,2,1],"mu":[1]}'; its hook family is used.
    #[arg(long)]
    pub shape: Option<String>,
}

/// A family plus an optional transversal.
#[derive(Args, Debug, Clone, Default)]
pub struct TransversalInput {
    #[command(flatten)]
    pub source: FamilyInput,

    /// Transversal as a JSON list of representatives in member order. Defaults to
    /// the identity for shapes and to the first transversal found otherwise.
    #[arg(long)]
    pub transversal: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Whether the family satisfies the marriage condition.
    Marriage(FamilyInput),
    /// One transversal, or null when none exists.
    Transversal(FamilyInput),
    /// Every transversal (brute force).
    Transversals {
        #[command(flatten)]
        input: FamilyInput,
        /// Largest family size the enumeration accepts.
        #[arg(long, default_value_t = shellable::family::TRANSVERSAL_ORACLE_BOUND)]
        bound: usize,
    },
    /// Whether the family is shellable.
    Shellable(FamilyInput),
    /// A shelling order, or a check of a given one.
    ShellingOrder {
        #[command(flatten)]
        input: FamilyInput,
        /// 1-based member order to verify instead of searching, e.g. '[1,2,3]'.
        #[arg(long)]
        order: Option<String>,
    },
    /// Elements that lie in exactly one member.
    UniqueSet(FamilyInput),
    /// Configurations and satisfying words.
    #[command(subcommand)]
    Configs(ConfigsCommand),
    /// The admissible range of m for a family with |F| = n.
    MRange(FamilyInput),
    /// Hooks, hook families, corners and tableau counts of a shape.
    #[command(subcommand)]
    Shape(ShapeCommand),
    /// Stirling numbers, surjections and average counts.
    #[command(subcommand)]
    Count(CountCommand),
    /// Runs a named property suite.
    Verify {
        /// Suite id; `verify list` prints them all.
        suite: String,
        /// Size bound; defaults to the suite's own default.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random instances drawn on top of the exhaustive ones.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ConfigsCommand {
    /// Every configuration of the transversal.
    Enumerate(TransversalInput),
    /// Number of surjective words satisfying one configuration, or all of them.
    Count {
        #[command(flatten)]
        input: TransversalInput,
        #[arg(long)]
        m: usize,
        /// Configuration as a JSON list of demands in member order.
        #[arg(long)]
        config: Option<String>,
        /// Largest n the enumeration accepts.
        #[arg(long, default_value_t = shellable::config::WORD_ORACLE_BOUND)]
        bound: usize,
    },
    /// A surjective word satisfying the configuration.
    Solve {
        #[command(flatten)]
        input: TransversalInput,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        config: String,
    },
    /// The configuration a word satisfies; with --config, whether it is that one.
    Classify {
        #[command(flatten)]
        input: TransversalInput,
        /// Word as a JSON list of values, e.g. '[1,2,1]'.
        #[arg(long)]
        word: String,
        #[arg(long)]
        config: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ShapeInput {
    /// Skew shape as JSON, e.g. '{"lambda":[3,2,1]}'.
    #[arg(long)]
    pub shape: String,
}

#[derive(Subcommand, Debug)]
pub enum ShapeCommand {
    /// Every cell with its hook and hook length.
    Hooks(ShapeInput),
    /// The hook family in row-major numbering, with its transversal.
    Family(ShapeInput),
    /// Inner corners of lambda and cells whose hook is a singleton.
    Corners(ShapeInput),
    /// Number of standard tableaux (brute force), plus the hook-length formula for
    /// normal shapes.
    SytCount {
        #[command(flatten)]
        input: ShapeInput,
        #[arg(long, default_value_t = shellable::shapes::TABLEAU_ORACLE_BOUND)]
        bound: usize,
    },
    /// Whether a filling is balanced; without --tableau, whether the balanced and
    /// standard counts agree.
    BalancedCheck {
        #[command(flatten)]
        input: ShapeInput,
        /// Filling as JSON rows over lambda, null on cells of mu, e.g. '[[4,5,8,3],[6,7,9],[1,2]]'.
        #[arg(long)]
        tableau: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CountCommand {
    /// S(n, m), the Stirling number of the second kind.
    Stirling { n: usize, m: usize },
    /// m! S(n, m), the number of surjections [n] -> [m].
    Surjections { n: usize, m: usize },
    /// m! S(n, m) / prod |F| for a shellable family with m in range.
    Average {
        #[command(flatten)]
        input: FamilyInput,
        #[arg(long)]
        m: usize,
    },
    /// The average by enumerating every configuration and word.
    AverageBrute {
        #[command(flatten)]
        input: TransversalInput,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = shellable::counting::AVERAGE_ORACLE_BOUND)]
        bound: usize,
    },
    /// The average from the closed forms for n - m in {0, 1, 2}.
    AverageClosed {
        #[command(flatten)]
        input: FamilyInput,
        #[arg(long)]
        m: usize,
    },
}
