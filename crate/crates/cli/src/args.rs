use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "pcores", version)]
#[command(
    about = "Cores and quotients of partitions and bar-partitions, and exhaustive core-theorem sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Statement {
    /// The s-core of a t-core is a t-core
    Theorem1,
    /// The s-bar-core of a t-bar-core is a t-bar-core (odd levels)
    Theorem2,
    /// The principal s-block of as+r holds no t-core
    Corollary1,
    /// The principal s-bar-block of as+r holds no t-bar-core (odd s, t)
    Corollary2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Partitions,
    Barpartitions,
    Cores,
    Barcores,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// ℓ-core and ℓ-weight of a partition
    Core {
        /// Partition literal, e.g. 4,2,1 (empty partition: -)
        partition: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// ℓ-core, ℓ-weight and ℓ-quotient of a partition
    Quotient {
        partition: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// ℓ-bar-core and bar-weight of a bar-partition (odd ℓ)
    Barcore {
        /// Bar-partition literal, e.g. 5,3,2 (empty: -)
        partition: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// ℓ-bar-core, bar-weight and ℓ-bar-quotient of a bar-partition (odd ℓ)
    Barquotient {
        partition: String,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Rebuild a partition from its ℓ-core and ℓ-quotient
    Reconstruct {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        core: String,
        /// Quotient components in order; with --bar the first one is the
        /// bar-partition component followed by (ℓ-1)/2 partitions
        #[arg(long = "component")]
        components: Vec<String>,
        /// Rebuild a bar-partition from its bar-core and bar-quotient
        #[arg(long)]
        bar: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run an exhaustive verification sweep
    Verify {
        #[arg(value_enum)]
        statement: Statement,
        /// Largest n swept by the theorems (default 24, or 28 for theorem2)
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, default_value_t = 10)]
        smax: usize,
        #[arg(long, default_value_t = 10)]
        tmax: usize,
        /// Explicit level list used for both s and t
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<usize>>,
        /// Single s for the corollaries
        #[arg(long)]
        s: Option<usize>,
        /// Single t for the corollaries
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 2)]
        amax: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        fail_fast: bool,
        /// Report elapsed_seconds as 0 so output is byte-stable
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List partitions, bar-partitions or cores of n, one literal per line
    Enumerate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Core level (required for cores and barcores)
        #[arg(long)]
        t: Option<usize>,
        /// Print only the number of items
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}
