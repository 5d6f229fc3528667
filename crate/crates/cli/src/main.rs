use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dungeon_core::Method;

mod commands;

#[derive(Parser, Debug)]
#[command(name = "dungeon", version, about = "Exact tiling counts for dungeon regions and checks of their identities")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Counting method for every region or graph count.
    #[arg(long, global = true, default_value = "auto")]
    method: Method,

    /// Give up on any single count after this many seconds and report it as skipped.
    #[arg(long, global = true, value_name = "SECS")]
    per_count_secs: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone)]
enum RegionArg {
    /// Hexagonal dungeon with sides a, 2a, b, a, 2a, b.
    Hd { a: i64, b: i64 },
    /// D-region on the contour of (a, b, c).
    D { a: i64, b: i64, c: i64 },
    /// E-region on the contour of (a, b, c).
    E { a: i64, b: i64, c: i64 },
    /// Aztec dungeon of order n.
    Aztec { n: i64 },
    /// Region stored as JSON.
    File { path: PathBuf },
}

#[derive(Subcommand, Debug)]
enum FormulaArg {
    /// The D-region closed form.
    Phi {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
    },
    /// The E-region closed form.
    Psi {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
    },
    /// Tiling count of the hexagonal dungeon of order a.
    Blum { a: i64 },
    /// Exponents, coefficients and residue of both closed forms.
    Components {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
    },
}

#[derive(Args, Debug)]
struct Range {
    /// Check every triple in the cube [LO, HI]^3 (subject to the hypothesis).
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
    grid: Option<Vec<i64>>,

    /// Check every admissible triple up to this contour perimeter (region identities).
    #[arg(long, value_name = "N")]
    max_perimeter: Option<i64>,

    /// A single triple.
    #[arg(allow_negative_numbers = true, num_args = 0..=3, value_names = ["A", "B", "C"])]
    params: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum RenderArg {
    /// The region with its lattice and bold boundary.
    Region {
        #[command(subcommand)]
        region: RegionArg,
    },
    /// One tiling of the region.
    Tiling {
        #[command(subcommand)]
        region: RegionArg,
    },
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count the tilings of a region.
    Count {
        #[command(subcommand)]
        region: RegionArg,
    },
    /// Evaluate a closed form.
    Formula {
        #[command(subcommand)]
        formula: FormulaArg,
    },
    /// Count a hexagonal dungeon directly and through its three-piece split.
    VerifyBlum { a: i64, b: i64 },
    /// Compare both region counts with the closed forms on every triple up to a perimeter.
    VerifyMain {
        #[arg(long, value_name = "N")]
        max_perimeter: i64,
    },
    /// Check a condensation recurrence, given as KIND:FAMILY (e.g. tall:D, short-d0:psi).
    VerifyRecurrence {
        id: String,
        #[command(flatten)]
        range: Range,
        /// Also locate the deleted corner vertices and audit each deletion.
        #[arg(long)]
        corners: bool,
    },
    /// Check a coincidence between closed forms (and the regions realizing it).
    VerifySymmetry {
        name: String,
        #[command(flatten)]
        range: Range,
        /// Also compare the two reflected regions.
        #[arg(long)]
        regions: bool,
    },
    /// Check the condensation identity on random plane bipartite graphs.
    VerifyKuo {
        #[arg(long, value_name = "N")]
        random: usize,
        #[arg(long, value_name = "M", default_value_t = 16)]
        max_vertices: usize,
        #[arg(long, value_name = "S")]
        seed: u64,
    },
    /// Enumerate the base cases of the induction.
    Bases {
        /// List every triple.
        #[arg(long)]
        list: bool,
    },
    /// Draw a region or one of its tilings as SVG.
    Render {
        #[command(subcommand)]
        what: RenderArg,
        /// Output file; standard output if omitted.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Split the dual of a hexagonal dungeon into three pieces.
    SplitHd { a: i64, b: i64 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
