use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "parhiggs", version, about = "Exact invariants of parabolic Higgs bundles")]
pub struct Cli {
    /// Output format. Defaults to json, except for `tables` (markdown).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    /// Genus of the underlying surface.
    #[arg(long)]
    pub g: Option<u32>,
    /// Number of marked points (all of order 2 unless --orders is given).
    #[arg(long)]
    pub s: Option<usize>,
    /// Isotropy orders of the marked points, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub orders: Option<Vec<u32>>,
    /// Inline JSON or a path: {"genus": 2, "points": [{"label": "x1", "order": 2}]}.
    #[arg(long)]
    pub surface: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parabolic degree and slope of a bundle.
    Pardeg {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Bundle as inline JSON, a file path, or `-` for stdin.
        #[arg(long)]
        bundle: String,
    },
    /// Slope stability of a decomposable Higgs model.
    Stability {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Model `{"summands": [...], "arrows": [[i, j], ...]}`.
        #[arg(long)]
        model: String,
    },
    /// Toledo invariant of an Sp(2n,R) triple.
    Toledo {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Triple `{"v": [...], "beta": [[i, j]], "gamma": [[i, j]]}`.
        #[arg(long)]
        triple: String,
    },
    /// Milnor–Wood bound.
    Mw {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        s: usize,
        /// Ranks of W+ and W- for the general interval.
        #[arg(long, requires = "rk_minus")]
        rk_plus: Option<usize>,
        #[arg(long, requires = "rk_plus")]
        rk_minus: Option<usize>,
    },
    /// The Hitchin-section model of rank k.
    Hitchin {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        s: usize,
    },
    /// Component counts for maximal moduli spaces.
    Components(ComponentsArgs),
    /// The three summary tables.
    Tables {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        s: usize,
    },
    /// Dimension formulas.
    Dims(DimsArgs),
    /// Mod-2 V-cohomology ranks.
    Vcoh {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, conflicts_with = "order")]
        mode: Option<VcohModeArg>,
        /// Isotropy order; picks the mode.
        #[arg(long)]
        order: Option<u32>,
    },
    /// Orbifold side calculators.
    Orbifold {
        #[command(subcommand)]
        op: OrbifoldOp,
    },
    /// Z2-characters of the orbifold fundamental group.
    Characters {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Also list every character.
        #[arg(long)]
        list: bool,
    },
    /// Square roots of a line V-bundle (order-2 points).
    Roots {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Degree of the desingularisation; defaults to deg K(D).
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i64>,
        /// Isotropy residues as JSON, e.g. {"x1": 1}.
        #[arg(long)]
        isotropy: Option<String>,
    },
    /// The s = 1 comparison with non-parabolic counts.
    #[command(name = "s1-report")]
    S1Report {
        #[arg(long)]
        group: String,
        #[arg(long)]
        g: u32,
    },
}

#[derive(Debug, Args)]
pub struct ComponentsArgs {
    /// sp<2n>, su<n>, sostar<2n>, so0_2_<n>, e7.
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub s: usize,
    /// max, fixed, punctured, s1, kd_s1.
    #[arg(long, default_value = "max")]
    pub mode: String,
    /// Bit string for fixed mode, `1` meaning weight 1/2.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Append the three summary tables in Markdown.
    #[arg(long)]
    pub emit_tables: bool,
    /// Skip enumeration and report closed forms only.
    #[arg(long)]
    pub closed_form_only: bool,
    /// Largest number of tuples to materialise.
    #[arg(long, env = "PARHIGGS_CAP", default_value_t = parhiggs::components::DEFAULT_CAP)]
    pub cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DimFormula {
    Paradim,
    Sparadim,
    Complex,
    Teich,
    Slk,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long, value_enum)]
    pub formula: DimFormula,
    #[arg(long)]
    pub g: u32,
    #[arg(long)]
    pub s: usize,
    /// Rank for paradim/sparadim, k for slk.
    #[arg(long)]
    pub n: Option<u32>,
    /// Flag multiplicities per point, e.g. `1,1;2`; full flags when omitted.
    #[arg(long)]
    pub mults: Option<String>,
    /// Catalog name for complex/teich, e.g. `Sp(4,R)`.
    #[arg(long)]
    pub group: Option<String>,
    /// rk E(m^C), for the alternative reading of the Teichmüller s-term.
    #[arg(long)]
    pub rk_em: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VcohModeArg {
    Order2,
    Punctured,
    Odd,
}

#[derive(Debug, Subcommand)]
pub enum OrbifoldOp {
    /// Degree and Euler characteristic of a line V-bundle.
    Degree {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// `{"desing": 3, "isotropy": {"x1": 1}}`.
        #[arg(long)]
        bundle: String,
    },
    /// Structure of Pic_V.
    Pic {
        #[command(flatten)]
        surface: SurfaceArgs,
    },
    /// Local gauge change from a parabolic to an orbifold Higgs field.
    Local {
        /// `{"m": 2, "weights": ["0", "1/2"], "higgs": {...}}`.
        #[arg(long)]
        input: String,
    },
    /// Parity of a weight assignment with weights in {0, 1/2}.
    Parity {
        /// Bit string like `0110`, or a JSON map of weights.
        #[arg(long)]
        alpha: String,
    },
}
