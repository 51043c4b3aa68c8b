//! Command-line front end: load graphs, digraphs, matroids and labelings
//! from text files, print chromatic and characteristic polynomials and
//! chromatic symmetric functions, and run the identity-verification suite.
//!
//! Exit codes: 0 success, 1 failed verification checks, 2 parse errors,
//! 3 capacity errors, 4 precondition violations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use polychrome::broken_circuits::{BrokenCircuitSet, Labeling, WeightAssignment};
use polychrome::chromatic::{
    chromatic_polynomial_kfree, chromatic_polynomial_nbc, chromatic_polynomial_subset,
    chromatic_polynomial_weighted, csf_kfree, csf_nbc, csf_subset, csf_weighted,
};
use polychrome::error::{Error, Result};
use polychrome::graph::Graph;
use polychrome::io;
use polychrome::matroid::Matroid;
use polychrome::symfunc::IntPolynomial;
use polychrome::verify;

#[derive(Parser)]
#[command(
    name = "polychrome",
    about = "Chromatic and characteristic polynomials via subset expansions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial of a graph file
    Chrompoly {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphMethod::Subset)]
        method: GraphMethod,
        /// Edge labeling file (needed for nbc, kfree and weighted)
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Broken-circuit file, one circuit per line as vertex pairs
        #[arg(long)]
        kset: Option<PathBuf>,
        /// Weight file with `<index>: <integer>` lines
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Also evaluate the polynomial at this point
        #[arg(long)]
        q: Option<u64>,
    },
    /// Chromatic symmetric function of a graph file, in the power-sum basis
    Csf {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphMethod::Subset)]
        method: GraphMethod,
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long)]
        kset: Option<PathBuf>,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Characteristic polynomial of a matroid file
    Charpoly {
        matroid: PathBuf,
        #[arg(long, value_enum, default_value_t = MatroidMethod::Subset)]
        method: MatroidMethod,
        /// Ground labeling file with `label: <element> <integer>` lines
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Broken-circuit file, one circuit per line as element names
        #[arg(long)]
        kset: Option<PathBuf>,
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Chromatic polynomial of a transitive digraph via 2-path-free subsets
    Digraph {
        digraph: PathBuf,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Run the identity-verification suite
    Verify {
        /// Graph, digraph or matroid file to verify
        #[arg(required_unless_present = "builtin_corpus")]
        target: Option<PathBuf>,
        /// Verify the built-in corpus instead of a file
        #[arg(long, conflicts_with = "target")]
        builtin_corpus: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphMethod {
    Subset,
    Nbc,
    Kfree,
    Weighted,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatroidMethod {
    Moebius,
    Subset,
    Nbc,
    Kfree,
    Weighted,
    Whitney,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) => 2,
                Error::Capacity(_) => 3,
                Error::Precondition(_) | Error::MatroidAxiom { .. } => 4,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Chrompoly {
            graph,
            method,
            labels,
            kset,
            weights,
            q,
        } => {
            let g = io::load_graph(&graph)?;
            let poly = graph_polynomial(&g, method, &labels, &kset, &weights)?;
            print_polynomial(&poly);
            if let Some(q) = q {
                println!("chi({q}) = {}", poly.eval(&BigInt::from(q)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Csf {
            graph,
            method,
            labels,
            kset,
            weights,
        } => {
            let g = io::load_graph(&graph)?;
            let csf = match method {
                GraphMethod::Subset => csf_subset(&g)?,
                GraphMethod::Nbc => csf_nbc(&g, &load_labeling(&g, &labels)?)?,
                GraphMethod::Kfree => {
                    let labeling = load_labeling(&g, &labels)?;
                    let kset = load_kset(&g, &kset)?;
                    csf_kfree(&g, &labeling, &kset)?
                }
                GraphMethod::Weighted => {
                    let labeling = load_labeling(&g, &labels)?;
                    let kset = load_kset(&g, &kset)?;
                    let a = load_weights(&kset, &weights)?;
                    csf_weighted(&g, &labeling, &kset, &a)?
                }
            };
            println!("{csf}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly {
            matroid,
            method,
            labels,
            kset,
            weights,
        } => {
            let m = io::load_matroid(&matroid)?;
            let (chi, tilde) = matroid_polynomials(&m, method, &labels, &kset, &weights)?;
            println!("chi: {}", chi.coeff_line());
            println!("chi: {chi}");
            println!("chitilde: {}", tilde.coeff_line());
            println!("chitilde: {tilde}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Digraph { digraph, q } => {
            let d = io::load_digraph(&digraph)?;
            let poly = d.chromatic_sum()?;
            print_polynomial(&poly);
            if let Some(q) = q {
                println!("chi({q}) = {}", poly.eval(&BigInt::from(q)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            builtin_corpus,
            seed,
        } => {
            let report = match target {
                Some(path) => verify_file(&path, seed)?,
                None => {
                    debug_assert!(builtin_corpus);
                    verify::run_builtin(seed)?
                }
            };
            print!("{}", report.render());
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn graph_polynomial(
    g: &Graph,
    method: GraphMethod,
    labels: &Option<PathBuf>,
    kset: &Option<PathBuf>,
    weights: &Option<PathBuf>,
) -> Result<IntPolynomial> {
    match method {
        GraphMethod::Subset => chromatic_polynomial_subset(g),
        GraphMethod::Nbc => chromatic_polynomial_nbc(g, &load_labeling(g, labels)?),
        GraphMethod::Kfree => {
            let labeling = load_labeling(g, labels)?;
            let kset = load_kset(g, kset)?;
            chromatic_polynomial_kfree(g, &labeling, &kset)
        }
        GraphMethod::Weighted => {
            let labeling = load_labeling(g, labels)?;
            let kset = load_kset(g, kset)?;
            let a = load_weights(&kset, weights)?;
            chromatic_polynomial_weighted(g, &labeling, &kset, &a)
        }
    }
}

fn matroid_polynomials(
    m: &Matroid,
    method: MatroidMethod,
    labels: &Option<PathBuf>,
    kset: &Option<PathBuf>,
    weights: &Option<PathBuf>,
) -> Result<(IntPolynomial, IntPolynomial)> {
    let (chi, moebius_tilde) = m.characteristic_polynomial();
    let tilde = match method {
        MatroidMethod::Moebius => moebius_tilde,
        MatroidMethod::Subset => m.charpol_subset(),
        MatroidMethod::Nbc => m.charpol_nbc(&load_ground_labels(m, labels)?)?,
        MatroidMethod::Whitney => m.charpol_whitney(&load_ground_labels(m, labels)?)?,
        MatroidMethod::Kfree => {
            let labels = load_ground_labels(m, labels)?;
            let kset = load_ground_kset(m, kset)?;
            m.charpol_kfree(&labels, &kset)?
        }
        MatroidMethod::Weighted => {
            let labels = load_ground_labels(m, labels)?;
            let kset = load_ground_kset(m, kset)?;
            let w = match weights {
                Some(path) => io::parse_weights(&read_file(path)?, kset.len())?,
                None if kset.is_empty() => Vec::new(),
                None => {
                    return Err(Error::Precondition(
                        "--method weighted needs --weights".into(),
                    ))
                }
            };
            m.charpol_weighted(&labels, &kset, &w)?
        }
    };
    Ok((chi, tilde))
}

fn verify_file(path: &Path, seed: u64) -> Result<verify::RunReport> {
    let text = read_file(path)?;
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    match io::sniff_kind(&text) {
        io::FileKind::Graph => verify::run_graph(&name, &io::parse_graph(&text)?, seed),
        io::FileKind::Digraph => verify::run_digraph(&name, &io::parse_digraph(&text)?, seed),
        io::FileKind::Matroid => {
            let attempt = match io::parse_matroid(&text)? {
                io::MatroidSource::Explicit {
                    ground,
                    independents,
                } => Matroid::from_named_sets(ground, &independents),
                io::MatroidSource::Uniform(k, n) => polychrome::matroid::uniform_matroid(k, n),
                io::MatroidSource::Graphic(rel) => {
                    let base = path.parent().unwrap_or_else(|| Path::new("."));
                    io::load_graph(&base.join(rel))
                        .and_then(|g| polychrome::matroid::graphical_matroid(&g))
                }
            };
            verify::run_matroid(&name, attempt, seed)
        }
    }
}

fn print_polynomial(poly: &IntPolynomial) {
    println!("{}", poly.coeff_line());
    println!("{poly}");
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_labeling(g: &Graph, labels: &Option<PathBuf>) -> Result<Labeling> {
    match labels {
        Some(path) => io::parse_labeling(&read_file(path)?, g),
        None => Err(Error::Precondition("this method needs --labels".into())),
    }
}

fn load_kset(g: &Graph, kset: &Option<PathBuf>) -> Result<BrokenCircuitSet> {
    match kset {
        Some(path) => Ok(BrokenCircuitSet::from_edge_sets(io::parse_kset(
            &read_file(path)?,
            g,
        )?)),
        None => Ok(BrokenCircuitSet::empty()),
    }
}

fn load_weights(kset: &BrokenCircuitSet, weights: &Option<PathBuf>) -> Result<WeightAssignment> {
    match weights {
        Some(path) => {
            let raw = io::parse_weights(&read_file(path)?, kset.len())?;
            WeightAssignment::new(kset, raw)
        }
        None if kset.is_empty() => WeightAssignment::new(kset, Vec::new()),
        None => Err(Error::Precondition(
            "--method weighted needs --weights".into(),
        )),
    }
}

fn load_ground_labels(m: &Matroid, labels: &Option<PathBuf>) -> Result<Vec<i64>> {
    match labels {
        Some(path) => io::parse_ground_labels(&read_file(path)?, m),
        None => Err(Error::Precondition("this method needs --labels".into())),
    }
}

fn load_ground_kset(m: &Matroid, kset: &Option<PathBuf>) -> Result<Vec<u64>> {
    match kset {
        Some(path) => io::parse_ground_kset(&read_file(path)?, m),
        None => Ok(Vec::new()),
    }
}
