use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use pauli_renyi::verify::GridSpec;

#[derive(Debug, Parser)]
#[command(name = "pauli-renyi", version, about = "Rényi and Tsallis entropic bounds for Pauli measurements on a qubit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads for grid evaluation; output does not depend on it.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distributions, entropies, sums and gaps for one state.
    Eval(StateArgs),
    /// Table of the lower bound and the two upper bounds over a range of orders.
    Band(BandArgs),
    /// Run the brute-force verification suite.
    Verify(VerifyArgs),
    /// Classify a state against the lower and pure-state upper bounds.
    Saturate(SaturateArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("state").required(true).args(["angles", "bloch", "eigenstate", "mix"])))]
pub struct StateArgs {
    /// Entropy order in (0, 1].
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,

    /// Pure state cos τ|0⟩ + e^{iφ} sin τ|1⟩, radians.
    #[arg(long, value_name = "TAU,PHI", allow_negative_numbers = true)]
    pub angles: Option<String>,

    /// Bloch vector of a possibly mixed state.
    #[arg(long, value_name = "X,Y,Z", allow_negative_numbers = true)]
    pub bloch: Option<String>,

    /// Pauli eigenstate such as z+ or x-.
    #[arg(long, value_name = "{x,y,z}{+,-}")]
    pub eigenstate: Option<String>,

    /// Weight λ on the + eigenstate of AXIS, 1 − λ on the − one.
    #[arg(long, value_name = "LAMBDA,AXIS", allow_negative_numbers = true)]
    pub mix: Option<String>,
}

#[derive(Debug, Args)]
pub struct SaturateArgs {
    #[command(flatten)]
    pub state: StateArgs,

    /// Saturation tolerance in nats.
    #[arg(long, default_value_t = pauli_renyi::bounds::DEFAULT_SATURATION_TOLERANCE)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct BandArgs {
    /// Orders as START:END:STEP; the last value is clamped to END.
    #[arg(long, value_name = "A:B:STEP", default_value = "0.01:1:0.01", conflicts_with = "alpha")]
    pub alpha_range: String,

    /// Single order instead of a range.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated orders in (0, 1].
    #[arg(long, value_name = "A,B,...", default_value = "0.25,0.5,0.75,1", allow_negative_numbers = true)]
    pub alpha: String,

    /// Grid resolution NxM over the reduced domain; append `:full` for the whole sphere.
    #[arg(long, value_name = "NxM", default_value = "2001x2001")]
    pub grid: GridSpec,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Mixed states sampled by the impurity scan.
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,

    /// Points per derivative sign check.
    #[arg(long, default_value_t = 1000)]
    pub points: usize,

    /// Negative control: compare the grid minimum with a lowered constant.
    #[arg(long, hide = true)]
    pub inject_wrong_lower: bool,
}
