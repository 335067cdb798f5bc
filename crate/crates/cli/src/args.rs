use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "bjsym",
    version,
    about = "Birkhoff-James orthogonality and approximate symmetry in finite-dimensional normed spaces"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Points on the first sampling grid.
    #[arg(long, global = true, default_value_t = 4096)]
    pub samples: usize,

    /// Refinement rounds around the incumbent maximum (factor 16 each).
    #[arg(long, global = true, default_value_t = 3)]
    pub refine: usize,

    /// Absolute tolerance for floating-point spaces (default 1e-9).
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Seed for random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Space definition file (JSON).
    #[arg(long, global = true, conflicts_with = "catalog")]
    pub space: Option<PathBuf>,

    /// Built-in space name; see `catalog list`.
    #[arg(long, global = true)]
    pub catalog: Option<String>,

    /// Worker threads for sampling (default: available cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect a space.
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Built-in spaces.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Orthogonality of a pair of vectors.
    #[command(subcommand)]
    Ortho(OrthoCmd),
    /// Properties (P), (P1) and R(X).
    #[command(subcommand)]
    Props(PropsCmd),
    /// Approximate-symmetry constants.
    #[command(subcommand)]
    Symmetry(SymmetryCmd),
    /// Linear maps given as operator files.
    #[command(subcommand)]
    Op(OpCmd),
}

impl Command {
    pub fn name(&self) -> String {
        let (group, sub) = match self {
            Command::Space(SpaceCmd::Info) => ("space", "info"),
            Command::Catalog(CatalogCmd::List) => ("catalog", "list"),
            Command::Ortho(c) => (
                "ortho",
                match c {
                    OrthoCmd::Check(_) => "check",
                    OrthoCmd::Min(_) => "min",
                    OrthoCmd::EpsD(_) => "eps-d",
                    OrthoCmd::EpsB(_) => "eps-b",
                },
            ),
            Command::Props(c) => (
                "props",
                match c {
                    PropsCmd::P(_) => "p",
                    PropsCmd::P1 => "p1",
                    PropsCmd::R => "r",
                    PropsCmd::RxCheck => "rx-check",
                },
            ),
            Command::Symmetry(c) => (
                "symmetry",
                match c {
                    SymmetryCmd::Point(_) => "point",
                    SymmetryCmd::GlobalC => "global-c",
                    SymmetryCmd::GlobalD => "global-d",
                },
            ),
            Command::Op(c) => (
                "op",
                match c {
                    OpCmd::Norm(_) => "norm",
                    OpCmd::Ortho(_) => "ortho",
                    OpCmd::MakePair(_) => "make-pair",
                    OpCmd::Eps(_) => "eps",
                    OpCmd::DragomirCheck(_) => "dragomir-check",
                },
            ),
        };
        format!("{group} {sub}")
    }
}

#[derive(Subcommand, Debug)]
pub enum SpaceCmd {
    /// Dimension, kind, vertices and facet functionals.
    Info,
}

#[derive(Subcommand, Debug)]
pub enum CatalogCmd {
    /// Names and descriptions of the built-in spaces.
    List,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    /// Comma-separated coordinates, e.g. `1,1/2,3/10`.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub y: String,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// Comma-separated coordinates of a unit vector.
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
}

#[derive(Args, Debug)]
pub struct OptPointArgs {
    /// Decide local (P) at this unit vector instead of the whole space.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum OrthoCmd {
    /// Decide x ⊥ y.
    Check(PairArgs),
    /// Minimize λ ↦ ‖x + λy‖.
    Min(PairArgs),
    /// Minimal ε with y ⊥_D^ε x (the reverse of the pair as given).
    EpsD(PairArgs),
    /// Minimal ε with y ⊥_B^ε x (the reverse of the pair as given).
    EpsB(PairArgs),
}

#[derive(Subcommand, Debug)]
pub enum PropsCmd {
    /// Property (P), or local (P) with --x.
    P(OptPointArgs),
    /// Property (P1).
    P1,
    /// R(X), the longest segment in the unit sphere.
    R,
    /// Check that R(X) <= 1 implies (P).
    RxCheck,
}

#[derive(Subcommand, Debug)]
pub enum SymmetryCmd {
    /// Left and right constants at a unit vector.
    Point(PointArgs),
    /// Global constant for the Chmieliński variant.
    GlobalC,
    /// Global constant for the Dragomir variant.
    GlobalD,
}

#[derive(Args, Debug)]
pub struct OneOp {
    /// Operator file for T.
    #[arg(long = "t")]
    pub t: PathBuf,
}

#[derive(Args, Debug)]
pub struct TwoOps {
    /// Operator file for A.
    #[arg(long = "a")]
    pub a: PathBuf,
    /// Operator file for T.
    #[arg(long = "t")]
    pub t: PathBuf,
}

#[derive(Args, Debug)]
pub struct DragomirArgs {
    #[command(flatten)]
    pub ops: TwoOps,
    /// ε to test; defaults to the sup-inf estimate.
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum OpCmd {
    /// ‖T‖ and the norm-attaining set M_T.
    Norm(OneOp),
    /// Decide A ⊥_B T.
    Ortho(TwoOps),
    /// B = A + λ*T with B ⊥_B T.
    MakePair(TwoOps),
    /// ε with T ⊥_D^ε A from the sup-inf formula.
    Eps(TwoOps),
    /// Check conditions (a)/(b) for T ⊥_D^ε A.
    DragomirCheck(DragomirArgs),
}
