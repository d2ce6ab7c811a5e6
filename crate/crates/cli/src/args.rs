use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nijenhuis_core::exactnum::Scalar;

/// Exact associative Nijenhuis deformations, Hochschild cohomology and
/// quantum bi-Hamiltonian checks.
///
/// Every command prints a JSON report on stdout. Exit status: 0 when every
/// check passes, 1 when a check fails, 2 on bad input or a violated
/// precondition.
#[derive(Debug, Parser)]
#[command(name = "nijenhuis", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct AlgebraOperator {
    /// Algebra document.
    #[arg(long)]
    pub algebra: PathBuf,
    /// Operator document over the algebra.
    #[arg(long)]
    pub operator: PathBuf,
}

#[derive(Debug, Args)]
pub struct AlgebraSplit {
    #[arg(long)]
    pub algebra: PathBuf,
    /// Decomposition document `{ "part1": [...] }`.
    #[arg(long)]
    pub decomposition: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    /// Full matrix algebra `M_n` in matrix units.
    Matrix,
    /// Upper-triangular `n×n` matrices.
    UpperTriangular,
    /// `K[ε]/(ε²)`.
    DualNumbers,
    /// `M_2` in the basis `I, A, B, C`.
    Pauli,
    /// Truncated oscillator algebra `M_n`.
    Oscillator,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Torsion, associativity of μ_N and unit preservation.
    CheckNijenhuis(AlgebraOperator),
    /// The torsion table of N.
    Torsion(AlgebraOperator),
    /// The deformed product μ_N in the algebra document layout.
    Deform {
        #[command(flatten)]
        io: AlgebraOperator,
        /// Name of the exported product.
        #[arg(long)]
        name: Option<String>,
        /// Also write the product document to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Associativity of μ_N against the cocycle condition on the torsion.
    Criterion(AlgebraOperator),
    /// Mixed-associator compatibility of two products over one basis.
    Compat {
        #[arg(long)]
        product1: PathBuf,
        #[arg(long)]
        product2: PathBuf,
    },
    /// Compatibility of two Nijenhuis tensors.
    TensorsCompat {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        operator1: PathBuf,
        #[arg(long)]
        operator2: PathBuf,
    },
    /// Relations among the products μ_{N^k}.
    Hierarchy {
        #[command(flatten)]
        io: AlgebraOperator,
        #[arg(long, default_value_t = 4)]
        max_power: u32,
    },
    /// λ₁P₁ + λ₂P₂ for a split into two subalgebras.
    Projection {
        #[command(flatten)]
        split: AlgebraSplit,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        l1: Scalar,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        l2: Scalar,
    },
    /// The contraction product A₁B₁ + P₂(A₁B₂ + A₂B₁).
    Contraction(AlgebraSplit),
    /// The product assembled from ∘₁, N₁, N₁' and N₂ on a split.
    Theorem5 {
        #[command(flatten)]
        split: AlgebraSplit,
        /// Product document whose restriction to part 1 is used.
        #[arg(long)]
        circ1: PathBuf,
        #[arg(long)]
        n1: PathBuf,
        #[arg(long)]
        n1p: PathBuf,
        #[arg(long)]
        n2: PathBuf,
    },
    /// Extension N(A) = N₁(A₁) of a tensor on part 1.
    Extend {
        #[command(flatten)]
        split: AlgebraSplit,
        #[arg(long)]
        operator: PathBuf,
    },
    /// The commutator side of μ_N.
    LieCheck(AlgebraOperator),
    /// Dimension of a Hochschild cohomology group with coefficients in the algebra.
    Cohomology {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
        degree: u8,
    },
    /// Leibniz rule for an operator.
    DerivationCheck {
        #[command(flatten)]
        io: AlgebraOperator,
        /// Product to test against instead of the algebra's own.
        #[arg(long)]
        product: Option<PathBuf>,
    },
    /// Solves for h with D = [h, ·].
    InnerGenerator {
        #[command(flatten)]
        io: AlgebraOperator,
        #[arg(long)]
        product: Option<PathBuf>,
    },
    /// Quantum bi-Hamiltonian test of a derivation for two products.
    Bihamiltonian {
        #[command(flatten)]
        io: AlgebraOperator,
        /// First product; defaults to the algebra's own.
        #[arg(long)]
        product1: Option<PathBuf>,
        #[arg(long)]
        product2: PathBuf,
    },
    /// Reproduces one of the worked examples.
    Example {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        id: u8,
        /// Oscillator truncation size for examples 5 and 6.
        #[arg(long)]
        dim: Option<usize>,
        /// Deformation parameter for example 5.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<Scalar>,
    },
    /// Prints a builtin algebra document.
    Builtin {
        #[arg(long, value_enum)]
        name: Builtin,
        #[arg(long)]
        size: Option<usize>,
    },
}
