//! Command-line front end: graph file indices and spectra, bound reports,
//! fractal construction, decimation-vs-dense verification, and the scaling
//! CSV.
//!
//! Exit codes: 0 success, 1 input error, 2 numerical failure,
//! 3 verification or invariant failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use nee::bounds;
use nee::decimation;
use nee::error::Error;
use nee::fractal;
use nee::graph::{self, Graph};
use nee::indices::{self, LeeVariant};
use nee::linalg;
use nee::spectra::{self, MatrixKind};
use nee::textfmt::sig_digits;

/// Largest order the dense eigensolver is exposed for on the CLI; Jacobi
/// sweeps are O(N^3) and anything beyond this belongs to the decimation
/// path.
const DENSE_ORDER_CAP: u64 = 2000;

/// Spectral and relative-NEE tolerance used by `verify`.
const VERIFY_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(
    name = "nee",
    version,
    about = "Spectral graph indices built on the normalized Laplacian"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one Estrada-type index of a graph file (12 significant digits).
    Index {
        /// Edge-list file.
        path: PathBuf,
        /// Which index to compute.
        #[arg(long, value_enum, default_value_t = IndexKind::Nee)]
        which: IndexKind,
    },
    /// Print the spectrum of one graph matrix, descending, one eigenvalue
    /// per line at 15 significant digits.
    Spectrum {
        /// Edge-list file.
        path: PathBuf,
        /// Which matrix to diagonalize.
        #[arg(long, value_enum, default_value_t = MatrixArg::Normalized)]
        matrix: MatrixArg,
    },
    /// Evaluate every applicable NEE bound on a graph file and print the
    /// report as a flat key-value block.
    Bounds {
        /// Edge-list file.
        path: PathBuf,
        /// Equality-detection tolerance.
        #[arg(long, default_value_t = bounds::DEFAULT_EQUALITY_TOL)]
        tol: f64,
    },
    /// Build the self-similar tree G_n(m) and emit its graph, NEE, or
    /// spectrum.
    Fractal {
        /// Branching parameter (leaves added per subdivided edge).
        #[arg(short)]
        m: usize,
        /// Generation count.
        #[arg(short)]
        n: usize,
        /// What to emit.
        #[arg(long, value_enum)]
        mode: FractalMode,
        /// Spectrum/NEE route: exact decimation recursion or the dense
        /// eigensolver oracle (capped at N = 2000).
        #[arg(long, value_enum, default_value_t = MethodArg::Decimation)]
        method: MethodArg,
        /// Write output to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-validate the decimation recursion against the dense solver
    /// for n = 1..n_max: spectra, NEE, multiplicity of eigenvalue 1, and
    /// the rank identity. Exit 3 on any mismatch.
    Verify {
        /// Branching parameter.
        #[arg(short)]
        m: usize,
        /// Largest generation to check.
        #[arg(long)]
        n_max: usize,
    },
    /// Write the NEE-versus-order scaling table as CSV, one row per (m, n),
    /// with the bipartite sandwich and component bounds. Exit 3 if any row
    /// violates the sandwich.
    Scaling {
        /// Branching parameters, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1, 2, 3, 4, 5])]
        m: Vec<usize>,
        /// Largest generation per branching parameter.
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a seeded random graph and print its summary and bound
    /// report.
    Random {
        /// Number of vertices.
        #[arg(short)]
        n: usize,
        /// Edge probability.
        #[arg(short)]
        p: f64,
        /// RNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexKind {
    Nee,
    Ee,
    LeeShifted,
    LeePlain,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    Adjacency,
    Laplacian,
    Normalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum FractalMode {
    EmitGraph,
    Nee,
    Spectrum,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Decimation,
    Dense,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoConvergence { .. } | Error::NonFiniteMatrix => 2,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // Usage errors are input errors under this tool's exit-code
            // contract, not clap's default 2.
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Index { path, which } => cmd_index(&path, which),
        Command::Spectrum { path, matrix } => cmd_spectrum(&path, matrix),
        Command::Bounds { path, tol } => cmd_bounds(&path, tol),
        Command::Fractal {
            m,
            n,
            mode,
            method,
            out,
        } => cmd_fractal(m, n, mode, method, out.as_deref()),
        Command::Verify { m, n_max } => cmd_verify(m, n_max),
        Command::Scaling { m, n_max, out } => cmd_scaling(&m, n_max, &out),
        Command::Random { n, p, seed } => cmd_random(n, p, seed),
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    Ok(graph::parse_edge_list(&text)?)
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_index(path: &Path, which: IndexKind) -> Result<(), CliError> {
    let g = load_graph(path)?;
    let value = match which {
        IndexKind::Nee => indices::normalized_estrada_index(&g)?,
        IndexKind::Ee => indices::estrada_index(&g)?,
        IndexKind::LeeShifted => indices::laplacian_estrada_index(&g, LeeVariant::Shifted)?,
        IndexKind::LeePlain => indices::laplacian_estrada_index(&g, LeeVariant::Plain)?,
    };
    println!("{}", sig_digits(value, 12));
    Ok(())
}

fn cmd_spectrum(path: &Path, matrix: MatrixArg) -> Result<(), CliError> {
    let g = load_graph(path)?;
    let kind = match matrix {
        MatrixArg::Adjacency => MatrixKind::Adjacency,
        MatrixArg::Laplacian => MatrixKind::Laplacian,
        MatrixArg::Normalized => MatrixKind::NormalizedLaplacian,
    };
    let s = spectra::spectrum(&g, kind)?;
    print!("{}", s.to_text());
    Ok(())
}

fn cmd_bounds(path: &Path, tol: f64) -> Result<(), CliError> {
    if tol <= 0.0 {
        return Err(CliError::input("tolerance must be positive"));
    }
    let g = load_graph(path)?;
    let report = bounds::evaluate_bounds(&g, tol)?;
    print!("{}", report.to_text());
    if !report.is_sound() {
        return Err(CliError::verification(format!(
            "bound report is unsound: {}",
            report.violations.join("; ")
        )));
    }
    Ok(())
}

fn require_dense_order(m: usize, n: usize) -> Result<(), CliError> {
    let (order, _) = fractal::fractal_counts(m, n)?;
    if order > DENSE_ORDER_CAP {
        return Err(CliError::input(format!(
            "dense method refused: order {order} exceeds cap {DENSE_ORDER_CAP}; use --method decimation"
        )));
    }
    Ok(())
}

fn cmd_fractal(
    m: usize,
    n: usize,
    mode: FractalMode,
    method: MethodArg,
    out: Option<&Path>,
) -> Result<(), CliError> {
    match mode {
        FractalMode::EmitGraph => {
            let f = fractal::build_fractal(m, n)?;
            emit(out, &f.to_edge_list())
        }
        FractalMode::Nee => {
            let (order, _) = fractal::fractal_counts(m, n)?;
            let value = match method {
                MethodArg::Decimation => decimation::decimation_nee(m, n)?,
                MethodArg::Dense => {
                    require_dense_order(m, n)?;
                    let f = fractal::build_fractal(m, n)?;
                    indices::normalized_estrada_index(f.graph())?
                }
            };
            let content = format!("N = {order}\nNEE = {}\n", sig_digits(value, 12));
            emit(out, &content)
        }
        FractalMode::Spectrum => match method {
            MethodArg::Decimation => {
                let ms = decimation::decimation_spectrum(m, n)?;
                emit(out, &ms.to_text())
            }
            MethodArg::Dense => {
                require_dense_order(m, n)?;
                let f = fractal::build_fractal(m, n)?;
                let s = spectra::normalized_laplacian_spectrum(f.graph())?;
                emit(out, &s.to_text())
            }
        },
    }
}

fn cmd_verify(m: usize, n_max: usize) -> Result<(), CliError> {
    // Fail fast if any requested generation is beyond the dense cap.
    for n in 1..=n_max {
        require_dense_order(m, n)?;
    }
    println!(
        "verify m={m}, n=1..{n_max} (eigenvalue tol {VERIFY_TOL:e}, nee relative tol {VERIFY_TOL:e}, counts exact)"
    );
    println!(
        "{:>3} {:>8} {:>13} {:>13} {:>20} {:>13}  status",
        "n", "N", "max_eig_diff", "nee_rel_diff", "mult1 dec/pred/dense", "rank obs/pred"
    );
    let mut failures = Vec::new();
    for n in 1..=n_max {
        let f = fractal::build_fractal(m, n)?;
        let order = f.graph().n_vertices();

        let ms = decimation::decimation_spectrum(m, n)?;
        let exact = ms.flatten_sorted();
        let dense_spectrum = spectra::normalized_laplacian_spectrum(f.graph())?;
        let mut dense: Vec<f64> = dense_spectrum.values().to_vec();
        dense.reverse();

        let max_eig_diff = exact
            .iter()
            .zip(&dense)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);

        let nee_exact = indices::nee_from_multiset(&ms);
        let nee_dense = indices::normalized_estrada_index(f.graph())?;
        let nee_rel_diff = (nee_exact - nee_dense).abs() / nee_dense;

        let mult_exact = ms.multiplicity_at(1.0);
        let mult_predicted = decimation::multiplicity_of_one(m, n)?;
        let mult_dense =
            spectra::clustered_multiplicity(dense_spectrum.values(), 1.0, spectra::CLUSTER_GAP)
                as u64;

        let shifted = spectra::normalized_laplacian_matrix(f.graph()).shifted(-1.0);
        let rank_observed = linalg::numerical_rank(&shifted, linalg::DEFAULT_RANK_TOL) as u64;
        let rank_predicted = decimation::predicted_rank(m, n)?;

        let pass = exact.len() == dense.len()
            && max_eig_diff <= VERIFY_TOL
            && nee_rel_diff <= VERIFY_TOL
            && mult_exact == mult_predicted
            && mult_dense == mult_predicted
            && rank_observed == rank_predicted;
        if !pass {
            failures.push(n);
        }
        println!(
            "{:>3} {:>8} {:>13} {:>13} {:>20} {:>13}  {}",
            n,
            order,
            format!("{max_eig_diff:.1e}"),
            format!("{nee_rel_diff:.1e}"),
            format!("{mult_exact}/{mult_predicted}/{mult_dense}"),
            format!("{rank_observed}/{rank_predicted}"),
            if pass { "ok" } else { "FAIL" }
        );
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::verification(format!(
            "decimation disagrees with the dense oracle at n = {failures:?}"
        )))
    }
}

fn cmd_scaling(m_values: &[usize], n_max: usize, out: &Path) -> Result<(), CliError> {
    let mut csv = String::from("m,n,N,NEE,thm2_lower,thm2_upper,thm3_lower\n");
    for &m in m_values {
        for n in 1..=n_max {
            let (order, _) = fractal::fractal_counts(m, n)?;
            let nee = decimation::decimation_nee(m, n)?;
            let (lower, upper) = bounds::bipartite_bounds(order as usize, m + 2, 1)?;
            let component = bounds::component_lower_bound(order as usize, 1, 0)?;
            if !(lower <= nee && nee <= upper) {
                return Err(CliError::verification(format!(
                    "sandwich violated at m={m}, n={n}: lower {lower}, nee {nee}, upper {upper}"
                )));
            }
            let _ = writeln!(
                csv,
                "{m},{n},{order},{},{},{},{}",
                sig_digits(nee, 12),
                sig_digits(lower, 12),
                sig_digits(upper, 12),
                sig_digits(component, 12),
            );
        }
    }
    std::fs::write(out, &csv)
        .map_err(|e| CliError::input(format!("cannot write {}: {e}", out.display())))?;
    eprintln!(
        "wrote {} rows to {}",
        m_values.len() * n_max,
        out.display()
    );
    Ok(())
}

fn cmd_random(n: usize, p: f64, seed: u64) -> Result<(), CliError> {
    let g = Graph::erdos_renyi(n, p, seed)?;
    println!("order = {}", g.n_vertices());
    println!("edges = {}", g.n_edges());
    let report = bounds::evaluate_bounds(&g, bounds::DEFAULT_EQUALITY_TOL)?;
    print!("{}", report.to_text());
    let gap = report.nee - report.component_lower;
    println!("component_gap = {}", sig_digits(gap, 12));
    if !report.is_sound() {
        return Err(CliError::verification(format!(
            "bound report is unsound: {}",
            report.violations.join("; ")
        )));
    }
    Ok(())
}
