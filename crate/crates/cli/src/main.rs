//! `cliffinv`: every construction and verification of the library as a
//! subcommand with deterministic JSON or text output.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::{CliError, Format};

#[derive(Parser, Debug)]
#[command(name = "cliffinv", version, about = "Clifford groups, weight enumerators and Barnes-Wall lattices")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group orders, closures and Molien series.
    Group {
        #[command(subcommand)]
        op: GroupOp,
    },
    /// Code enumeration.
    Codes {
        #[command(subcommand)]
        op: CodesOp,
    },
    /// Genus-m complete weight enumerator of a code.
    Cwe {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        genus: usize,
    },
    /// The explicit h_m built from affine subspaces, compared with cwe(H8).
    Hm {
        #[arg(long)]
        genus: usize,
    },
    /// Shadow of a binary self-dual code and the four-variable identities.
    Shadow {
        #[command(flatten)]
        code: CodeArg,
    },
    /// Verifications; exit code 0 iff every checked equality holds.
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
    /// Barnes-Wall lattices.
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Spherical-design strength of a Clifford-group orbit.
    DesignTest {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = PointArg::MinimalVector)]
        point: PointArg,
        /// Coordinates for `--point explicit`, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coords: Vec<f64>,
    },
    /// Runs the acceptance suite.
    Selftest {
        /// Only these criteria (e.g. `1,4b,8a`).
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum KindArg {
    Real,
    Complex,
    Extraspecial,
    OddPrime,
    ExtraspecialP,
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    m: u32,
    /// Characteristic for the odd-prime kinds.
    #[arg(long, default_value_t = 3)]
    p: u32,
    /// Largest closure size before giving up.
    #[arg(long)]
    max_order: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum GroupOp {
    Order(GroupArgs),
    Closure {
        #[command(flatten)]
        group: GroupArgs,
        /// List the elements as exact matrices.
        #[arg(long)]
        list: bool,
    },
    Molien {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CodesOp {
    /// Classes of self-dual codes of a given length.
    Enumerate {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        doubly_even: bool,
        #[arg(long, default_value_t = 2)]
        p: u8,
    },
}

#[derive(Args, Debug)]
pub struct CodeArg {
    /// Registry name (`i2`, `i2^k`, `h8`, `rep<N>`, `rep<N>_p<P>`, `tetracode`) or a file of generator rows.
    #[arg(long)]
    code: String,
    /// Field size for code files.
    #[arg(long = "field", default_value_t = 2)]
    field: u8,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum VariantArg {
    Real,
    Complex,
    OddPrime,
}

#[derive(Subcommand, Debug)]
enum VerifyOp {
    /// Code enumerators span the invariant space in degree N.
    Runge {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        genus: usize,
        /// Odd characteristic; binary when absent.
        #[arg(long)]
        p: Option<u8>,
        /// Random codes to draw beyond the enumeration limit.
        #[arg(long, default_value_t = 12)]
        samples: usize,
    },
    AveragingLemma {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        genus: usize,
    },
    AveragingTheorem {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Real)]
        variant: VariantArg,
    },
    ParabolicBasis {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        genus: usize,
    },
    Triangular {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        genus: usize,
    },
    Harmonic8 {
        #[arg(long)]
        genus: usize,
    },
    Tensor {
        #[arg(long)]
        m: usize,
        /// Double one generator first (negative control).
        #[arg(long)]
        perturb: bool,
    },
    Automorphism {
        #[arg(long)]
        m: usize,
        /// Check the complex group on the ℤ[ζ_8] lattice.
        #[arg(long)]
        complex: bool,
    },
    SpanOrder {
        #[arg(long)]
        m: u32,
        /// Span the extraspecial subgroup instead (negative control).
        #[arg(long)]
        extraspecial: bool,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeOp {
    Build {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        primed: bool,
        /// The ℤ[√2]-lattice spanned by the scaled affine-subspace vectors.
        #[arg(long, conflicts_with = "primed")]
        balanced: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PointArg {
    MinimalVector,
    RandomSphere,
    CommonZero,
    Explicit,
}

fn run(cli: Cli) -> Result<output::Outcome, CliError> {
    let g = &cli.global;
    if let Some(n) = g.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    match cli.command {
        Command::Group { op } => match op {
            GroupOp::Order(a) => commands::group_order(&a),
            GroupOp::Closure { group, list } => commands::group_closure(&group, list),
            GroupOp::Molien { group, order } => commands::group_molien(&group, order),
        },
        Command::Codes { op: CodesOp::Enumerate { length, doubly_even, p } } => {
            commands::codes_enumerate(length, doubly_even, p)
        }
        Command::Cwe { code, genus } => commands::cwe(&code, genus),
        Command::Hm { genus } => commands::hm(genus),
        Command::Shadow { code } => commands::shadow(&code),
        Command::Verify { op } => match op {
            VerifyOp::Runge { length, genus, p, samples } => commands::verify_runge(length, genus, p, samples, g.seed),
            VerifyOp::AveragingLemma { code, genus } => commands::verify_lemma(&code, genus),
            VerifyOp::AveragingTheorem { code, genus, variant } => commands::verify_theorem(&code, genus, variant),
            VerifyOp::ParabolicBasis { length, genus } => commands::verify_parabolic(length, genus),
            VerifyOp::Triangular { length, genus } => commands::verify_triangular(length, genus),
            VerifyOp::Harmonic8 { genus } => commands::verify_harmonic(genus),
            VerifyOp::Tensor { m, perturb } => commands::verify_tensor(m, perturb),
            VerifyOp::Automorphism { m, complex } => commands::verify_automorphism(m, complex),
            VerifyOp::SpanOrder { m, extraspecial } => commands::verify_span(m, extraspecial),
        },
        Command::Lattice { op: LatticeOp::Build { m, primed, balanced } } => commands::lattice_build(m, primed, balanced),
        Command::DesignTest { m, max_degree, point, coords } => {
            commands::design(m, max_degree, point, coords, g.seed)
        }
        Command::Selftest { only } => commands::selftest(only, g.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let global = cli.global.clone();
    let result = run(cli).and_then(|outcome| output::emit(&outcome, &global).map(|_| outcome.ok));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(output::EXIT_VERIFICATION_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
