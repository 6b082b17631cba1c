use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use chirality_core::quantum::{azimuthal_refinement, radial_refinement};
use chirality_core::tables::{cayley_ascii, cayley_csv, matrices_ascii, matrices_csv, KindFilter};
use chirality_core::{
    aufbau_sequence, azimuthal_residual, chirality_index, enumerate_projections, AufbauStep, AzimuthalProblem,
    CayleyTable, CentreId, ChiralityIndex, RadialProblem, Slot, Tetrahedron,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::checks::Group;
use crate::molfile;

#[derive(Debug, Parser)]
#[command(name = "chirality", version, about = "Fischer-projection operators and chirality indices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the operator matrices.
    Tables {
        #[arg(long, value_enum, default_value_t = KindArg::All)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Print the 24x24 multiplication table (row * column).
    Cayley {
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Run the algebraic and numerical self-checks.
    Verify(VerifyArgs),
    /// Chirality index of a molecule file.
    Classify { file: PathBuf },
    /// All 24 projections of one centre, grouped into rotation orbits.
    Project {
        file: PathBuf,
        #[arg(long)]
        center: String,
    },
    /// Step a chirality index through a sequence of additions.
    Aufbau {
        /// Starting index as `n,p`.
        #[arg(long, value_parser = parse_index)]
        start: ChiralityIndex,
        /// Comma-separated Δp values, each 0 or 1.
        #[arg(long, value_delimiter = ',', value_parser = parse_step)]
        deltas: Vec<AufbauStep>,
    },
    /// Finite-difference residuals of the Schrödinger solutions.
    Quantum {
        #[command(subcommand)]
        which: QuantumCommand,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub closure: bool,
    #[arg(long)]
    pub eigen: bool,
    #[arg(long)]
    pub commutators: bool,
    #[arg(long)]
    pub quantum: bool,
}

impl VerifyArgs {
    fn groups(&self) -> Vec<Group> {
        let picked: Vec<Group> = [
            (self.closure, Group::Closure),
            (self.eigen, Group::Eigen),
            (self.commutators, Group::Commutators),
            (self.quantum, Group::Quantum),
        ]
        .into_iter()
        .filter_map(|(on, g)| on.then_some(g))
        .collect();
        if self.all || picked.is_empty() {
            Group::ALL.to_vec()
        } else {
            picked
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum QuantumCommand {
    Radial {
        #[arg(long)]
        l: u32,
        #[arg(long = "E", allow_negative_numbers = true)]
        energy: f64,
        #[arg(long, default_value_t = 1.0)]
        r0: f64,
        #[arg(long, default_value_t = 1001)]
        samples: usize,
        #[arg(long, default_value_t = 0.5)]
        r_min: f64,
        #[arg(long, default_value_t = 5.0)]
        r_max: f64,
    },
    Azimuthal {
        #[arg(long, allow_negative_numbers = true)]
        m: i32,
        #[arg(long, default_value_t = 4001)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Rot,
    Inv,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Csv,
}

fn parse_index(s: &str) -> Result<ChiralityIndex, String> {
    let (n, p) = s.split_once(',').ok_or("expected n,p")?;
    let n: usize = n.trim().parse().map_err(|e| format!("n: {e}"))?;
    let p: usize = p.trim().parse().map_err(|e| format!("p: {e}"))?;
    ChiralityIndex::new(n, p).map_err(|e| e.to_string())
}

fn parse_step(s: &str) -> Result<AufbauStep, String> {
    let d: u8 = s.trim().parse().map_err(|e| format!("{e}"))?;
    AufbauStep::new(d).map_err(|e| e.to_string())
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err((msg, code)) => {
            let _ = writeln!(err, "chirality: {msg}");
            code
        }
    }
}

type Outcome = Result<(String, i32), (String, i32)>;

fn read_molecule(path: &PathBuf) -> Result<chirality_core::ChainMolecule, (String, i32)> {
    let text = std::fs::read_to_string(path).map_err(|e| (format!("{}: {e}", path.display()), EXIT_USAGE))?;
    molfile::parse(&text).map_err(|e| (format!("{}: {e}", path.display()), EXIT_USAGE))
}

fn failure(e: impl std::fmt::Display) -> (String, i32) {
    (e.to_string(), EXIT_FAIL)
}

fn execute(cmd: &Command) -> Outcome {
    let mut s = String::new();
    match cmd {
        Command::Tables { kind, format } => {
            let filter = match kind {
                KindArg::Rot => KindFilter::Rotations,
                KindArg::Inv => KindFilter::Inversions,
                KindArg::All => KindFilter::All,
            };
            s = match format {
                Format::Ascii => matrices_ascii(filter),
                Format::Csv => matrices_csv(filter),
            };
        }
        Command::Cayley { format } => {
            let table = CayleyTable::new();
            s = match format {
                Format::Ascii => cayley_ascii(&table),
                Format::Csv => cayley_csv(&table),
            };
        }
        Command::Verify(args) => {
            let mut failed = Vec::new();
            let mut total = 0;
            for group in args.groups() {
                for check in group.run() {
                    total += 1;
                    if !check.pass {
                        failed.push(check.name.clone());
                    }
                    writeln!(s, "{check}").unwrap();
                }
            }
            writeln!(s, "{} of {total} checks passed", total - failed.len()).unwrap();
            for name in &failed {
                writeln!(s, "failed: {name}").unwrap();
            }
            return Ok((s, if failed.is_empty() { EXIT_OK } else { EXIT_FAIL }));
        }
        Command::Classify { file } => {
            let m = read_molecule(file)?;
            let idx = chirality_index(&m).map_err(failure)?;
            writeln!(s, "chi = {idx}  {}", idx.classification()).unwrap();
        }
        Command::Project { file, center } => {
            let m = read_molecule(file)?;
            let id = CentreId::new(center.as_str()).map_err(|e| (e.to_string(), EXIT_USAGE))?;
            let t = m.centre(&id).ok_or_else(|| (format!("no centre `{center}` in {}", file.display()), EXIT_USAGE))?;
            // links take part as opaque groups named after their target
            let opaque = Tetrahedron::new(
                t.centre.clone(),
                t.slots.clone().map(|slot| match slot {
                    Slot::Link(target) => Slot::Ligand(format!("@{target}")),
                    ligand => ligand,
                }),
            );
            let set = enumerate_projections(&opaque).map_err(failure)?;
            writeln!(s, "centre {}: {} distinct projections, orbit sizes {:?}", t.centre, set.distinct_count(), set.orbit_sizes())
                .unwrap();
            for p in &set.projections {
                let slots: Vec<String> = p.tetrahedron.slots.iter().map(Slot::to_string).collect();
                writeln!(s, "{:>4}  orbit {}  {}", p.operator.to_string(), p.orbit, slots.join(" ")).unwrap();
            }
        }
        Command::Aufbau { start, deltas } => {
            let trace = aufbau_sequence(*start, deltas);
            writeln!(s, "start  chi = {start}  {}", start.classification()).unwrap();
            for ((step, state), class) in trace.steps.iter().zip(&trace.states).zip(&trace.classifications) {
                writeln!(s, "dp={}   chi = {state}  {class}", step.delta_p()).unwrap();
            }
        }
        Command::Quantum { which } => match which {
            QuantumCommand::Radial { l, energy, r0, samples, r_min, r_max } => {
                let p = RadialProblem::new(*l, *energy).and_then(|p| p.with_r0(*r0)).map_err(|e| (e.to_string(), EXIT_USAGE))?;
                let refine = radial_refinement(&p, *r_min, *r_max, *samples).map_err(|e| (e.to_string(), EXIT_USAGE))?;
                writeln!(s, "radial l={l} E={energy} r0={r0} grid=[{r_min}, {r_max}]").unwrap();
                writeln!(s, "alpha0 = {}", p.alpha0()).unwrap();
                writeln!(s, "residual({}) = {:.3e}", refine.coarse_samples, refine.coarse).unwrap();
                writeln!(s, "residual({}) = {:.3e}", refine.fine_samples, refine.fine).unwrap();
            }
            QuantumCommand::Azimuthal { m, samples } => {
                let p = AzimuthalProblem::new(*m);
                let r = azimuthal_residual(&p, *samples).map_err(|e| (e.to_string(), EXIT_USAGE))?;
                let refine = azimuthal_refinement(&p, *samples).map_err(|e| (e.to_string(), EXIT_USAGE))?;
                writeln!(s, "azimuthal m={m}").unwrap();
                writeln!(s, "residual({samples}) = {r:.3e}").unwrap();
                writeln!(s, "residual({}) = {:.3e}", refine.fine_samples, refine.fine).unwrap();
            }
        },
    }
    Ok((s, EXIT_OK))
}
