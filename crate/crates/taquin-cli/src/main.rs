//! `taquin`: slide tabloids into standard tableaux and verify the
//! combinatorial laws of the sliding operations.
//!
//! Exit codes: 0 = success / property verified, 1 = property falsified
//! (counterexample printed), 2 = invalid input.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use taquin::{
    a_matrix, canonical_order, enumerate_standard_with_cap, fj_traced, matrix_to_csv,
    matrix_to_json, modified_jdt_traced, parse_filling, render_digit_matrix, render_filling,
    verify_constancy, verify_fj_eq_bj, verify_identity_eq1, verify_involution,
    verify_mj_properties, verify_pi_tracking, verify_symmetry, CanonicalOrder, Filling,
    MatrixOptions, Shape, VerificationReport, VerifyMode, ENUMERATION_CAP,
};

#[derive(Parser)]
#[command(name = "taquin", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a shape spec and print a summary.
    ShapeValidate {
        /// Shape spec, `OUTER[/INNER][:shifted]`, e.g. `6,5,4,2/5,3:shifted`.
        spec: String,
    },
    /// Enumerate the standard tableaux of a shape.
    Tableaux {
        spec: String,
        /// Print full grids instead of reading words.
        #[arg(long)]
        grids: bool,
        /// Lift the size cap on enumeration.
        #[arg(long)]
        force_large: bool,
    },
    /// Run the modified jeu de taquin on a tabloid.
    Mj(MjArgs),
    /// Verify a property of the sliding operations.
    Verify(VerifyArgs),
    /// Compute the full count matrix of a shape.
    Amatrix(AmatrixArgs),
}

#[derive(Args)]
struct MjArgs {
    #[arg(long)]
    shape: String,
    /// File holding the input tabloid in grid form.
    #[arg(long)]
    tabloid: String,
    /// Order tableau: a file, or `nps-column` / `rowwise-bottomup-rl`.
    #[arg(long)]
    order: String,
    /// Print the filling after every pass that moved something.
    #[arg(long)]
    trace: bool,
    /// Replay the transpositions onto the order tableau and print pairs.
    #[arg(long)]
    paired: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Symmetry,
    Involution,
    FjEqBj,
    Eq1,
    Constancy,
    PiTracking,
    MjProperties,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    property: Property,
    #[arg(long)]
    shape: String,
    /// Sweep the whole input space.
    #[arg(long, conflicts_with_all = ["samples", "seed"])]
    exhaustive: bool,
    /// Number of seeded random cases; requires --seed.
    #[arg(long, requires = "seed")]
    samples: Option<u64>,
    /// Seed for sampled verification; required with --samples.
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
    /// Order tableau for `constancy` (file or keyword).
    #[arg(long)]
    order: Option<String>,
    /// Lift the exhaustive size cap.
    #[arg(long)]
    force_large: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Digits,
    Json,
    Csv,
}

#[derive(Args)]
struct AmatrixArgs {
    #[arg(long)]
    shape: String,
    #[arg(long, value_enum, default_value = "digits")]
    format: MatrixFormat,
    /// Worker threads for the sweep (default: all available).
    #[arg(long)]
    workers: Option<usize>,
    /// Lift the exhaustive size cap.
    #[arg(long)]
    force_large: bool,
}

/// Failure that terminates the run with the given exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl ToString) -> Failure {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::ShapeValidate { spec } => shape_validate(&spec),
        Command::Tableaux {
            spec,
            grids,
            force_large,
        } => tableaux(&spec, grids, force_large),
        Command::Mj(args) => mj(args),
        Command::Verify(args) => verify(args),
        Command::Amatrix(args) => amatrix(args),
    }
}

fn parse_shape(spec: &str) -> Result<Shape, Failure> {
    spec.parse().map_err(Failure::invalid)
}

fn load_filling(path_or_text: &str, shape: &Shape) -> Result<Filling, Failure> {
    let text = fs::read_to_string(path_or_text)
        .map_err(|e| Failure::invalid(format!("cannot read {path_or_text}: {e}")))?;
    parse_filling(&text, shape).map_err(Failure::invalid)
}

fn load_order(arg: &str, shape: &Shape) -> Result<Filling, Failure> {
    match arg {
        "nps-column" => canonical_order(shape, CanonicalOrder::NpsColumn).map_err(Failure::invalid),
        "rowwise-bottomup-rl" => {
            canonical_order(shape, CanonicalOrder::RowwiseBottomUpRightLeft)
                .map_err(Failure::invalid)
        }
        path => {
            let f = load_filling(path, shape)?;
            if !f.is_standard() {
                return Err(Failure::invalid("order tableau is not standard"));
            }
            Ok(f)
        }
    }
}

fn shape_validate(spec: &str) -> Result<(), Failure> {
    let shape = parse_shape(spec)?;
    let family = match (shape.is_shifted(), shape.is_straight()) {
        (false, true) => "unshifted straight",
        (false, false) => "unshifted skew",
        (true, true) => "shifted straight",
        (true, false) => "shifted skew",
    };
    println!("shape: {shape}");
    println!("family: {family}");
    println!("rows: {}", shape.rows());
    println!("cells: {}", shape.size());
    Ok(())
}

fn tableaux(spec: &str, grids: bool, force_large: bool) -> Result<(), Failure> {
    let shape = parse_shape(spec)?;
    let cap = if force_large { None } else { Some(ENUMERATION_CAP) };
    let all = enumerate_standard_with_cap(&shape, cap).map_err(Failure::invalid)?;
    println!("shape {shape}: {} standard tableaux", all.len());
    for (i, t) in all.iter().enumerate() {
        if grids {
            println!("#{i}:");
            println!("{}", render_filling(t));
        } else {
            println!("{i}: {}", t.reading_word());
        }
    }
    Ok(())
}

fn mj(args: MjArgs) -> Result<(), Failure> {
    let shape = parse_shape(&args.shape)?;
    let tabloid = load_filling(&args.tabloid, &shape)?;
    let order = load_order(&args.order, &shape)?;

    if args.paired {
        let trace = fj_traced(&tabloid, &order).map_err(Failure::invalid)?;
        if args.trace {
            for pair in trace.changed_states() {
                println!("{}", render_filling(pair.first()));
                println!("--");
                println!("{}", render_filling(pair.second()));
                println!();
            }
        }
        println!("{}", render_filling(trace.result.first()));
        println!("--");
        println!("{}", render_filling(trace.result.second()));
        return Ok(());
    }

    let trace = modified_jdt_traced(&tabloid, &order).map_err(Failure::invalid)?;
    if args.trace {
        let states = trace.changed_states();
        for state in &states {
            println!("{}", render_filling(state));
            println!();
        }
        if states.is_empty() {
            println!("{}", render_filling(&trace.result));
        }
    } else {
        println!("{}", render_filling(&trace.result));
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let shape = parse_shape(&args.shape)?;
    let mode = match (args.exhaustive, args.samples, args.seed) {
        (true, None, None) => VerifyMode::Exhaustive {
            force_large: args.force_large,
        },
        (false, Some(count), Some(seed)) => VerifyMode::Sampled { seed, count },
        _ => {
            return Err(Failure::invalid(
                "choose --exhaustive, or --samples N with a mandatory --seed S",
            ))
        }
    };

    let report: VerificationReport = match args.property {
        Property::Symmetry => verify_symmetry(&shape, mode),
        Property::Involution => verify_involution(&shape, mode),
        Property::FjEqBj => verify_fj_eq_bj(&shape, mode),
        Property::Eq1 => verify_identity_eq1(&shape, mode),
        Property::PiTracking => verify_pi_tracking(&shape, mode),
        Property::MjProperties => verify_mj_properties(&shape, mode),
        Property::Constancy => {
            let order_arg = args
                .order
                .as_deref()
                .ok_or_else(|| Failure::invalid("constancy requires --order"))?;
            if !args.exhaustive {
                return Err(Failure::invalid("constancy is exhaustive-only; pass --exhaustive"));
            }
            let order = load_order(order_arg, &shape)?;
            verify_constancy(
                &shape,
                &order,
                &MatrixOptions {
                    workers: 1,
                    force_large: args.force_large,
                },
            )
        }
    }
    .map_err(Failure::invalid)?;

    println!("{report}");
    if report.pass {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: "property falsified".into(),
        })
    }
}

fn amatrix(args: AmatrixArgs) -> Result<(), Failure> {
    let shape = parse_shape(&args.shape)?;
    let workers = args.workers.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
    });
    let matrix = a_matrix(
        &shape,
        &MatrixOptions {
            workers,
            force_large: args.force_large,
        },
    )
    .map_err(Failure::invalid)?;
    match args.format {
        MatrixFormat::Digits => {
            let rendered = render_digit_matrix(&matrix).map_err(Failure::invalid)?;
            print!("{rendered}");
        }
        MatrixFormat::Json => println!("{}", matrix_to_json(&matrix)),
        MatrixFormat::Csv => println!("{}", matrix_to_csv(&matrix)),
    }
    Ok(())
}
