use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "gek", version, about = "Group entropies: evaluation, verification and series tools")]
pub struct Cli {
    /// Output format for tabular and single-value results (`verify` always emits JSON).
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: TopCommand,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum TopCommand {
    /// Evaluate an entropy on a distribution, or sweep one parameter.
    #[command(subcommand)]
    Entropy(EntropyCommand),
    /// Run property checks and print a JSON report.
    Verify(VerifyArgs),
    /// Exact formal power series tools.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Exact expansion of the group law built from `G`.
    #[command(subcommand)]
    Grouplaw(GroupLawCommand),
    /// Group logarithm `ln_G(x) = G(γ ln x)`.
    #[command(subcommand)]
    Log(LogCommand),
    /// Group exponential, the inverse of `ln_G`.
    #[command(subcommand)]
    Exp(ExpCommand),
    /// Group law `χ(x, y) = G(G⁻¹(x) + G⁻¹(y))`.
    #[command(subcommand)]
    Chi(ChiCommand),
    /// Growth laws under which an entropy is extensive.
    #[command(subcommand)]
    Extensivity(ExtensivityCommand),
    /// Quantum entropies of a density matrix.
    #[command(subcommand)]
    Qentropy(QentropyCommand),
    /// Block entropies of the LMG ground state (a Dicke state).
    #[command(subcommand)]
    Lmg(LmgCommand),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Entropy family: boltzmann, renyi, tsallis_aq, landsberg_vedral, zq, zk, zab, zg, alt_z.
    #[arg(long)]
    pub family: String,
    /// Comma-separated `key=value` parameters, e.g. `a=0.3,b=-0.2,alpha=0.5`.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub params: String,
    /// Group function for zg and alt_z: identity, tsallis, kaniadakis, abel.
    #[arg(long)]
    pub g: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum EntropyCommand {
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        /// `uW` (uniform), `dW` (delta), inline comma-separated probabilities, or a file with one per line.
        #[arg(long, allow_hyphen_values = true)]
        dist: String,
    },
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        /// `key=start:stop:step`, inclusive of `stop`.
        #[arg(long)]
        param: String,
        #[arg(long, allow_hyphen_values = true)]
        dist: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Composability,
    Sk,
    Schur,
    Extensivity,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// Defaults to `GEK_SEED`, then 0.
    #[arg(long, env = "GEK_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Growth rate for the extensivity suite.
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// Coefficients `b_1, b_2, …` of `t^{k+1}/(k+1)` (with `b_0 = 1`).
    Normalized,
    /// Plain power-series coefficients `c_2, c_3, …` (with `c_0 = 0`, `c_1 = 1`).
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum SeriesCommand {
    /// Compositional inverse of a normalized series, with exact fractions.
    Invert {
        /// Comma-separated rationals (`p/q` or decimals), starting at `b_1`
        /// (normalized) or `c_2` (plain).
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Basis::Normalized)]
        basis: Basis,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupLawCommand {
    /// Coefficients of `Ψ(x,y) = G(G⁻¹(x) + G⁻¹(y))` as exact fractions.
    Expand {
        /// id, tsallis, kaniadakis or abel.
        #[arg(long)]
        family: String,
        /// Exact parameters: `q=1/2`, `k=2/3`, `a=1,b=-1/2`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        order: u32,
        /// Also print zero coefficients.
        #[arg(long)]
        dense: bool,
    },
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group function: identity, tsallis, kaniadakis, abel.
    #[arg(long)]
    pub family: String,
    /// `q=…`, `k=…` or `a=…,b=…`; `gamma=…` scales the logarithm.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub params: String,
}

#[derive(Debug, Subcommand)]
pub enum LogCommand {
    Eval {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExpCommand {
    Eval {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ChiCommand {
    Eval {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExtensivityCommand {
    /// Growth law `W(N)` making a Z-entropy extensive, or `q*` for `S_(a,q)` with `--rho`.
    Solve {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Power-law exponent of `W(N) = N^ρ` (tsallis_aq only).
        #[arg(long)]
        rho: Option<f64>,
        /// Comma-separated sizes at which to tabulate.
        #[arg(long = "N", default_value = "10,100,1000,10000")]
        sizes: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum QentropyCommand {
    Eval {
        /// Plain-text matrix: rows of comma-separated `real,imag` pairs.
        #[arg(long)]
        rho: PathBuf,
        /// Any entropy family; `von_neumann` is accepted for boltzmann.
        #[arg(long, default_value = "von_neumann")]
        family: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        g: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum LmgCommand {
    /// Exact `Z_(a,0)` of the Dicke block state next to the leading asymptotic term.
    Demo {
        #[arg(long)]
        m: usize,
        #[arg(long = "N")]
        n: usize,
        /// Comma-separated occupations `k_1,…,k_{m+1}`.
        #[arg(long)]
        occupations: String,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(
            long,
            allow_negative_numbers = true,
            conflicts_with = "extensive",
            required_unless_present = "extensive"
        )]
        alpha: Option<f64>,
        /// Use `α = 1 - 2/(am)`.
        #[arg(long)]
        extensive: bool,
        /// Tabulate every block size `L = 1..N-1` instead of `L = N/2`.
        #[arg(long = "sweep-L")]
        sweep_l: bool,
    },
}
