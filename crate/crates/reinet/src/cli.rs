//! Command-line interface. `run` takes arguments and output sinks so tests
//! can drive it in-process; `main` only forwards the exit code.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use reinet_core::dynamics::{simulate, verify_synchrony, GrnParams, SimConfig};
use reinet_core::enumeration::cases::{case_networks, Case};
use reinet_core::enumeration::census::{reproduce_tables, PUBLISHED_COUNTS};
use reinet_core::enumeration::families::{expand_families, family_group};
use reinet_core::enumeration::published::table1_supports;
use reinet_core::enumeration::{connected_supports, valence_bounded_vectors};
use reinet_core::equiv::{minimal_representative, ode_equivalence_witness, MinimalityBound};
use reinet_core::synchrony::{balanced_partitions, quotient};
use reinet_core::dynamics::skeleton;
use reinet_core::ReiNetwork;

use crate::dot::to_dot;
use crate::format::{load_str, parse_document, to_line, to_pretty, FormatError};
use crate::params::parse_params;
use crate::partition::parse_partition;
use crate::report::{census_tsv, trajectory_csv};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "reinet", version, about = "Restricted excitatory-inhibitory network tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a network file; exit 0 iff every arrow type matches its tail.
    Validate { file: PathBuf },
    /// Swap every node and arrow type.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exit 0 iff the two networks are ODE-equivalent; prints the node bijection.
    Equiv { a: PathBuf, b: PathBuf },
    /// Minimal ODE-equivalent network.
    Minimal {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Stream connected networks of bounded valence, one JSON document per line.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        max_valence: u32,
        /// Valence-2 case: i, ii, iii or iv.
        #[arg(long)]
        case: Option<String>,
        /// Family id or group (fig9, fig9-complete, AH, NH.1-3, NH.4-11, fig16).
        #[arg(long)]
        family: Option<String>,
    },
    /// ODE-class census of the valence-bounded universe.
    Classify {
        #[arg(long, default_value_t = 2)]
        max_valence: u32,
        /// Exit 1 unless the bucket counts are 92 38 62 35.
        #[arg(long)]
        expect_paper: bool,
        /// Write the class table (tab-separated) here; `-` for stdout.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Connected support patterns of the links between distinct nodes.
    Supports {
        /// Exit 1 unless the set equals the published list.
        #[arg(long)]
        expect_paper: bool,
    },
    /// Balanced partitions, coarsest first.
    Synchrony { file: PathBuf },
    /// Quotient network by a balanced partition.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        partition: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Admissible ODE skeleton.
    Skeleton {
        file: PathBuf,
        #[arg(long)]
        unicode: bool,
    },
    /// Integrate the gene regulatory model; writes a CSV trajectory.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        t: f64,
        #[arg(long)]
        dt: f64,
        /// Initial state `m1,p1,m2,p2,...`; defaults to 0.5 everywhere.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x0: Option<Vec<f64>>,
        #[arg(long)]
        params: Option<PathBuf>,
        /// Also check that this partition stays synchronous.
        #[arg(long)]
        check_partition: Option<String>,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Graphviz DOT.
    ExportDot {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Error carrying its exit code.
struct Fail(i32, String);

fn data(msg: impl std::fmt::Display) -> Fail {
    Fail(EXIT_DATA, msg.to_string())
}

fn usage(msg: impl std::fmt::Display) -> Fail {
    Fail(EXIT_USAGE, msg.to_string())
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn say(&mut self, s: &str) -> Result<(), Fail> {
        self.out.write_all(s.as_bytes()).map_err(|e| data(format!("write failed: {e}")))
    }

    fn note(&mut self, s: &str) {
        let _ = writeln!(self.err, "{s}");
    }

    fn emit(&mut self, text: &str, output: &Option<PathBuf>) -> Result<(), Fail> {
        match output {
            Some(p) if p.as_os_str() != "-" => {
                fs::write(p, text).map_err(|e| data(format!("{}: {e}", p.display())))
            }
            _ => self.say(text),
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn load(path: &Path, io: &mut Io) -> Result<ReiNetwork, Fail> {
    let (net, warnings) = load_str(&read(path)?).map_err(|e| data(format!("{}: {e}", path.display())))?;
    for w in warnings {
        io.note(&format!("warning: {}: {w}", path.display()));
    }
    Ok(net)
}

/// Runs one invocation and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { out, err };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            io.note(&format!("error: {msg}"));
            code
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<i32, Fail> {
    match cmd {
        Command::Validate { file } => {
            let doc = match parse_document(&read(&file)?) {
                Ok(d) => d,
                Err(e @ (FormatError::Syntax { .. } | FormatError::Invalid(_))) => {
                    return Err(data(format!("{}: {e}", file.display())))
                }
                Err(e) => return Err(data(e)),
            };
            for w in &doc.warnings {
                io.note(&format!("warning: {w}"));
            }
            let v = doc.violations();
            if v.is_empty() {
                io.say("valid\n")?;
                Ok(EXIT_OK)
            } else {
                for x in v {
                    io.say(&format!("violation {x}\n"))?;
                }
                Ok(EXIT_FALSE)
            }
        }
        Command::Dual { file, output } => {
            let net = load(&file, io)?;
            io.emit(&to_pretty(&net.dual()), &output)?;
            Ok(EXIT_OK)
        }
        Command::Equiv { a, b } => {
            let (x, y) = (load(&a, io)?, load(&b, io)?);
            match ode_equivalence_witness(&x, &y) {
                Ok(Some(sigma)) => {
                    let pairs: Vec<String> = sigma.iter().enumerate().map(|(i, j)| format!("{}->{}", i + 1, j + 1)).collect();
                    io.say(&format!("equivalent {}\n", pairs.join(" ")))?;
                    Ok(EXIT_OK)
                }
                Ok(None) => {
                    io.say("not equivalent\n")?;
                    Ok(EXIT_FALSE)
                }
                Err(reinet_core::equiv::EquivError::SizeMismatch(p, q)) => {
                    io.say(&format!("not equivalent ({p} and {q} nodes)\n"))?;
                    Ok(EXIT_FALSE)
                }
                Err(e) => Err(data(e)),
            }
        }
        Command::Minimal { file, output } => {
            let net = load(&file, io)?;
            let m = minimal_representative(&net);
            let how = match m.bound {
                MinimalityBound::NormalForm => "normal form".to_string(),
                MinimalityBound::Search { cap } => format!("search, entries <= {cap}"),
            };
            io.note(&format!("arrows: {} -> {} ({how})", net.arrow_count(), m.arrow_count));
            io.emit(&to_pretty(&m.net), &output)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { max_valence, case, family } => {
            if max_valence == 0 {
                return Err(usage("--max-valence must be positive"));
            }
            let mut nets: Vec<ReiNetwork> = {
                let set: std::collections::BTreeSet<ReiNetwork> = valence_bounded_vectors(max_valence)
                    .into_iter()
                    .map(|v| v.to_network().canonical_form())
                    .collect();
                set.into_iter().collect()
            };
            if let Some(c) = case {
                if max_valence != 2 {
                    return Err(usage("--case needs --max-valence 2"));
                }
                let c = Case::parse(&c).ok_or_else(|| usage(format!("unknown case {c:?}; use i, ii, iii or iv")))?;
                nets = case_networks(c);
            }
            if let Some(id) = family {
                let fam = expand_families(&family_group(&id).map_err(usage)?);
                nets.retain(|n| fam.contains(n));
            }
            for n in &nets {
                io.say(&to_line(n))?;
                io.say("\n")?;
            }
            io.note(&format!("count: {}", nets.len()));
            Ok(EXIT_OK)
        }
        Command::Classify { max_valence, expect_paper, table } => {
            if max_valence != 2 {
                return Err(usage("the census is defined for --max-valence 2"));
            }
            let r = reproduce_tables();
            if let Some(t) = &table {
                io.emit(&census_tsv(&r), &Some(t.clone()))?;
            }
            let counts: Vec<String> = r.counts.iter().map(ToString::to_string).collect();
            io.say(&format!("{}\n", counts.join(" ")))?;
            let inv: Vec<String> = r.relabeling_invariant_counts.iter().map(ToString::to_string).collect();
            io.note(&format!("up to relabeling: {}", inv.join(" ")));
            for a in r.rows.iter().filter(|a| !a.ok()) {
                io.note(&format!(
                    "table {} row {}: stated {}, found {}{}",
                    a.table.number(),
                    a.row,
                    a.stated,
                    a.found,
                    if a.well_formed { "" } else { " (malformed)" }
                ));
            }
            for v in &r.unlisted {
                io.note(&format!("not in any row: {v}"));
            }
            if expect_paper && !r.matches_published() {
                let p: Vec<String> = PUBLISHED_COUNTS.iter().map(ToString::to_string).collect();
                io.note(&format!("expected {}", p.join(" ")));
                return Ok(EXIT_FALSE);
            }
            Ok(EXIT_OK)
        }
        Command::Supports { expect_paper } => {
            let ours = connected_supports();
            for s in &ours {
                io.say(&format!("{s}\n"))?;
            }
            io.note(&format!("count: {}", ours.len()));
            if expect_paper {
                let published: std::collections::BTreeSet<_> = table1_supports().into_iter().collect();
                for s in ours.difference(&published) {
                    io.note(&format!("not published: {s}"));
                }
                for s in published.difference(&ours) {
                    io.note(&format!("published but not found: {s}"));
                }
                if ours != published {
                    return Ok(EXIT_FALSE);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Synchrony { file } => {
            let net = load(&file, io)?;
            for p in balanced_partitions(&net) {
                let tag = if p.is_trivial() { " (trivial)" } else { "" };
                io.say(&format!("{p}{tag}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Quotient { file, partition, output } => {
            let net = load(&file, io)?;
            let p = parse_partition(&partition, net.n()).map_err(|e| usage(format!("--partition: {e}")))?;
            let q = quotient(&net, &p).map_err(|e| data(format!("{p}: {e}")))?;
            io.emit(&to_pretty(&q.net), &output)?;
            Ok(EXIT_OK)
        }
        Command::Skeleton { file, unicode } => {
            let sk = skeleton(&load(&file, io)?);
            let text = if unicode { sk.render_unicode() } else { sk.render() };
            io.say(&text)?;
            if !text.ends_with('\n') {
                io.say("\n")?;
            }
            Ok(EXIT_OK)
        }
        Command::Simulate { file, t, dt, x0, params, check_partition, tolerance, output } => {
            let net = load(&file, io)?;
            let params = match params {
                Some(p) => parse_params(&read(&p)?).map_err(|e| data(format!("{}: {e}", p.display())))?,
                None => GrnParams::default(),
            };
            let x0 = x0.unwrap_or_else(|| vec![0.5; 2 * net.n()]);
            let cfg = SimConfig { dt, t_end: t, x0, tolerance };
            let traj = simulate(&net, &params, &cfg).map_err(data)?;
            io.emit(&trajectory_csv(&traj, net.n()), &output)?;
            if let Some(p) = check_partition {
                let p = parse_partition(&p, net.n()).map_err(|e| usage(format!("--check-partition: {e}")))?;
                let r = verify_synchrony(&net, &p, &params, &cfg).map_err(data)?;
                io.note(&format!("max divergence: {:e}", r.max_divergence));
                io.note(&format!("quotient deviation: {:e}", r.quotient_deviation));
                io.note(if r.passed() { "PASS" } else { "FAIL" });
                if !r.passed() {
                    return Ok(EXIT_FALSE);
                }
            }
            Ok(EXIT_OK)
        }
        Command::ExportDot { file, output } => {
            let net = load(&file, io)?;
            io.emit(&to_dot(&net), &output)?;
            Ok(EXIT_OK)
        }
    }
}
