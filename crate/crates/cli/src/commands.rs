//! Argument definitions and command dispatch.

use std::path::{Path, PathBuf};
use std::time::Duration;

use arstar_core::colouring::validate_classes;
use arstar_core::constructions::{
    self, apex_extension, clique_blowup_lower, cycle_extremal, girth_modified_lower,
    k4_extremal_three_part, k4_extremal_two_part, k4minus_extremal, lexical,
    min_degree_construction, orientable, rainbow_blowup, BlowupSpec, ModificationSpec,
};
use arstar_core::detect::{
    find_rainbow, find_rainbow_join, rainbow_cycle_spectrum, rainbow_hamilton_cycle, JOIN_RETRIES,
};
use arstar_core::graph::{cycle, parse_pattern};
use arstar_core::oracle::{
    check_redblue, check_tuple, enumerate_star_colourings, ex_small, find_covering_tuple,
    labelled_count, nsar_with, star_anti_ramsey_with, zarankiewicz_small,
};
use arstar_core::rng::{random_star_colouring, stream};
use arstar_core::tournament::find_ck_free_tournament;
use arstar_core::{Edge, SimpleGraph, StarColouring, Tournament};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{CliError, Result};
use crate::format::{
    parse_json, read_input, to_json, CertificateJson, ColouringJson, ExJson, GraphJson, OracleJson,
    TournamentJson,
};
use crate::manifest::FileDigest;
use crate::theorems::{self, Ranges, Table};
use crate::{Context, MAX_ORACLE_N};

/// RNG stream ids, one per randomised use, so commands never share draws.
mod streams {
    pub const ORIENTABLE: u64 = 10;
    pub const TOURNAMENT: u64 = 20;
    pub const JOIN_HOST: u64 = 30;
    pub const JOIN_SEARCH: u64 = 31;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "arstar",
    version,
    about = "Star-colourings of complete graphs and rainbow subgraphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Seed for every randomised step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the oracle (default: available cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Largest n the exhaustive oracle will attempt.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_n: usize,
    /// Abort a search after this many generated nodes.
    #[arg(long, global = true)]
    pub max_nodes: Option<u64>,
    /// Abort a search after this many seconds.
    #[arg(long, global = true)]
    pub time_budget: Option<u64>,
    /// Table format for check-theorem and report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write a run manifest here.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a colouring from one of the construction families.
    #[command(subcommand)]
    Construct(Construct),
    /// Check that a colouring file is a star-colouring.
    Validate {
        /// Colouring JSON, or `-` for stdin.
        file: PathBuf,
    },
    /// Search a colouring for rainbow subgraphs.
    #[command(subcommand)]
    Detect(Detect),
    #[command(subcommand)]
    Tournament(TournamentCmd),
    /// Exact computations by exhaustive search.
    #[command(subcommand)]
    Oracle(Oracle),
    /// Compare closed forms against the oracle.
    CheckTheorem {
        /// One of k3, cycle, k4, k4minus, nsar-paths, zex-sandwich, redblue.
        name: String,
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        k: Option<String>,
        #[arg(long)]
        t: Option<String>,
    },
    /// List star-colourings of K_n.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Count labelled colourings instead of listing isomorphism classes.
        #[arg(long)]
        labelled: bool,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
    },
    /// Table of the standard checks, or a merge of saved JSON tables.
    Report {
        #[arg(long, num_args = 1..)]
        from: Vec<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    Lexical {
        #[arg(long)]
        n: usize,
    },
    /// Colour every arc by its tail; random tournament unless one is given.
    Orientable {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        tournament: Option<PathBuf>,
    },
    /// Balanced lexical parts with rainbow cross edges.
    Blowup {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        parts: usize,
    },
    /// Recolour a graph or stars with fresh colours.
    Modified {
        /// Base colouring (default: lexical on the graph's vertices).
        #[arg(long)]
        colouring: Option<PathBuf>,
        /// Graph JSON whose edges get fresh colours.
        #[arg(long, conflicts_with = "stars")]
        graph: Option<PathBuf>,
        /// Stars as `0-1,0-2;3-4,3-5`, one fresh colour each.
        #[arg(long)]
        stars: Option<String>,
    },
    CycleExtremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// C_k-free tournament on the first n-k+1 vertices.
        #[arg(long)]
        tournament: Option<PathBuf>,
    },
    K4TwoPart {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
    K4ThreePart {
        #[arg(long)]
        n: usize,
        /// Part sizes `a,b,c`.
        #[arg(long)]
        sizes: String,
    },
    K4minus {
        #[arg(long)]
        n: usize,
    },
    /// Add a vertex joined by fresh colours.
    Apex {
        #[arg(long)]
        colouring: PathBuf,
    },
    MinDegree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
    },
    CliqueBlowup {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    GirthModified {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Detect {
    /// Rainbow copy of a pattern.
    Rainbow {
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        pattern: String,
    },
    /// Lengths of all rainbow cycles.
    Spectrum {
        #[arg(long)]
        colouring: PathBuf,
    },
    Hamilton {
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Randomised search for a rainbow join of two trees.
    Join {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
        /// Host colouring; a seeded random one on `--n` vertices otherwise.
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = JOIN_RETRIES)]
        retries: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum TournamentCmd {
    /// Cycles of every length in a strong tournament.
    Moon {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        tournament: Option<PathBuf>,
    },
    /// A C_k-free tournament, non-transitive when possible.
    Ckfree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        transitive: bool,
    },
    /// Hamilton path.
    Redei {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        tournament: Option<PathBuf>,
    },
    /// Strong components in condensation order.
    Components {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        tournament: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Oracle {
    /// ar*(n, H); several patterns or a family give ar*(n, family).
    Arstar {
        #[arg(long)]
        n: usize,
        #[arg(long = "pattern")]
        patterns: Vec<String>,
        /// `C<=g` or patterns joined by `+`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        no_prune: bool,
    },
    /// Smallest n forcing a rainbow copy of a forest.
    Nsar {
        #[arg(long)]
        pattern: String,
    },
    /// Extremal colourings up to isomorphism.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        /// Include every class rather than the first.
        #[arg(long)]
        emit_all: bool,
    },
    /// Turán number of a family.
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        family: String,
    },
    /// Zarankiewicz number z(m, n; s, t).
    Z {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Forest-removal property of a tree join.
    Redblue {
        #[arg(long)]
        t1: String,
        #[arg(long)]
        t2: String,
    },
    /// Covering tuple at a vertex of a rainbow-K4-free colouring.
    Tuple {
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        x: usize,
    },
}

/// Rendered output plus the inputs it depended on.
#[derive(Debug, Default)]
pub struct Output {
    pub text: String,
    pub inputs: Vec<FileDigest>,
}

struct Runner<'a> {
    global: &'a Global,
    ctx: Context,
    inputs: Vec<FileDigest>,
}

/// Parses a pattern name; `path<t>` is accepted for `P<t>`.
pub fn pattern(name: &str) -> Result<SimpleGraph> {
    let name = name.trim();
    let owned;
    let name = match name.strip_prefix("path") {
        Some(t) => {
            owned = format!("P{t}");
            owned.as_str()
        }
        None => name,
    };
    Ok(parse_pattern(name)?)
}

/// `C<=g` (cycles of length 3 to g) or patterns separated by `+`.
pub fn family(spec: &str) -> Result<Vec<SimpleGraph>> {
    if let Some(g) = spec.trim().strip_prefix("C<=") {
        let g: usize = g
            .parse()
            .map_err(|_| CliError::input(format!("bad family {spec:?}")))?;
        if g < 3 {
            return Err(CliError::input("C<=g needs g >= 3"));
        }
        return (3..=g).map(|k| Ok(cycle(k)?)).collect();
    }
    spec.split('+').map(pattern).collect()
}

fn parse_edge(s: &str) -> Result<Edge> {
    let bad = || CliError::input(format!("bad edge {s:?}; expected u-v"));
    let (a, b) = s.trim().split_once('-').ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    if a == b {
        return Err(bad());
    }
    Ok(Edge::new(a, b))
}

fn parse_stars(s: &str) -> Result<Vec<Vec<Edge>>> {
    s.split(';')
        .map(|star| star.split(',').map(parse_edge).collect())
        .collect()
}

impl Runner<'_> {
    fn read(&mut self, path: &Path) -> Result<String> {
        let text = read_input(path)?;
        self.inputs
            .push(FileDigest::of(path.display().to_string(), text.as_bytes()));
        Ok(text)
    }

    fn colouring(&mut self, path: &Path) -> Result<StarColouring> {
        let text = self.read(path)?;
        parse_json::<ColouringJson>(&text, &path.display().to_string())?.to_colouring()
    }

    fn graph(&mut self, path: &Path) -> Result<SimpleGraph> {
        let text = self.read(path)?;
        parse_json::<GraphJson>(&text, &path.display().to_string())?.to_graph()
    }

    fn tournament_file(&mut self, path: &Path) -> Result<Tournament> {
        let text = self.read(path)?;
        parse_json::<TournamentJson>(&text, &path.display().to_string())?.to_tournament()
    }

    /// From a file, or random on `n` vertices. `strong` resamples until the
    /// tournament is strongly connected.
    fn tournament(
        &mut self,
        n: Option<usize>,
        file: Option<&Path>,
        strong: bool,
    ) -> Result<Tournament> {
        match (n, file) {
            (_, Some(p)) => self.tournament_file(p),
            (Some(n), None) => {
                let mut rng = stream(self.global.seed, streams::TOURNAMENT);
                if strong && n < 3 {
                    return Err(CliError::input("strong tournaments need n >= 3"));
                }
                loop {
                    let t = Tournament::random(n, &mut rng)?;
                    if !strong || t.is_strong() {
                        return Ok(t);
                    }
                }
            }
            (None, None) => Err(CliError::input("give --n or --tournament")),
        }
    }

    fn check_oracle_n(&self, n: usize) -> Result<()> {
        if n > self.ctx.opts.cap {
            return Err(arstar_core::Error::CapExceeded {
                what: "oracle vertices (raise --max-n)",
                got: n,
                cap: self.ctx.opts.cap,
            }
            .into());
        }
        Ok(())
    }

    fn run(&mut self, cmd: &Command) -> Result<String> {
        match cmd {
            Command::Construct(c) => {
                let colouring = self.construct(c)?;
                Ok(to_json(&ColouringJson::from(&colouring)))
            }
            Command::Validate { file } => self.validate(file),
            Command::Detect(d) => self.detect(d),
            Command::Tournament(t) => self.tournament_cmd(t),
            Command::Oracle(o) => self.oracle(o),
            Command::CheckTheorem { name, n, k, t } => {
                let ranges = Ranges {
                    n: n.clone(),
                    k: k.clone(),
                    t: t.clone(),
                };
                let table = theorems::check(&self.ctx, name, &ranges)?;
                self.table(&table)
            }
            Command::Enumerate {
                n,
                labelled,
                count_only,
            } => self.enumerate(*n, *labelled, *count_only),
            Command::Report { from } => {
                let table = if from.is_empty() {
                    theorems::standard_suite(&self.ctx)?
                } else {
                    let mut rows = Vec::new();
                    for path in from {
                        let text = self.read(path)?;
                        rows.extend(parse_json::<Table>(&text, &path.display().to_string())?.rows);
                    }
                    Table { rows }
                };
                self.table(&table)
            }
        }
    }

    fn table(&self, table: &Table) -> Result<String> {
        let text = match self.global.format {
            Format::Json => to_json(table),
            Format::Md => theorems::render_md(table),
            Format::Csv => theorems::render_csv(table),
        };
        if table.failures() > 0 {
            return Err(CliError::Mismatch {
                failures: table.failures(),
                output: text,
            });
        }
        if table.skipped() > 0 {
            return Err(CliError::Skipped {
                skipped: table.skipped(),
                output: text,
            });
        }
        Ok(text)
    }

    fn construct(&mut self, c: &Construct) -> Result<StarColouring> {
        Ok(match c {
            Construct::Lexical { n } => lexical(*n)?,
            Construct::Orientable { n, tournament } => {
                let t = match (n, tournament) {
                    (_, Some(p)) => self.tournament_file(p)?,
                    (Some(n), None) => {
                        Tournament::random(*n, &mut stream(self.global.seed, streams::ORIENTABLE))?
                    }
                    (None, None) => return Err(CliError::input("give --n or --tournament")),
                };
                orientable(&t)?
            }
            Construct::Blowup { n, parts } => {
                rainbow_blowup(&BlowupSpec::balanced_lexical(*n, *parts)?)?
            }
            Construct::Modified {
                colouring,
                graph,
                stars,
            } => {
                let spec = match (graph, stars) {
                    (Some(g), None) => ModificationSpec::Graph(self.graph(g)?),
                    (None, Some(s)) => ModificationSpec::Stars(parse_stars(s)?),
                    _ => return Err(CliError::input("give exactly one of --graph or --stars")),
                };
                let base = match colouring {
                    Some(p) => self.colouring(p)?,
                    None => match &spec {
                        ModificationSpec::Graph(g) => lexical(g.n())?,
                        ModificationSpec::Stars(_) => {
                            return Err(CliError::input("--stars needs --colouring"))
                        }
                    },
                };
                constructions::modified(&base, &spec)?
            }
            Construct::CycleExtremal { n, k, tournament } => {
                let t = tournament
                    .as_deref()
                    .map(|p| self.tournament_file(p))
                    .transpose()?;
                cycle_extremal(*n, *k, t.as_ref())?
            }
            Construct::K4TwoPart { n, s } => k4_extremal_two_part(*n, *s)?,
            Construct::K4ThreePart { n, sizes } => {
                let parts: Vec<usize> = sizes
                    .split(',')
                    .map(|x| x.trim().parse())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| CliError::input(format!("bad sizes {sizes:?}")))?;
                let parts: [usize; 3] = parts
                    .try_into()
                    .map_err(|_| CliError::input("--sizes takes three parts"))?;
                if parts.iter().sum::<usize>() != *n {
                    return Err(CliError::input("part sizes must sum to n"));
                }
                k4_extremal_three_part(*n, parts)?
            }
            Construct::K4minus { n } => k4minus_extremal(*n, None)?,
            Construct::Apex { colouring } => apex_extension(&self.colouring(colouring)?)?,
            Construct::MinDegree { n, pattern: p } => min_degree_construction(*n, &pattern(p)?)?,
            Construct::CliqueBlowup { n, m } => clique_blowup_lower(*n, *m)?,
            Construct::GirthModified { n, pattern: p } => girth_modified_lower(*n, &pattern(p)?)?,
        })
    }

    fn validate(&mut self, file: &Path) -> Result<String> {
        let text = self.read(file)?;
        let j: ColouringJson = parse_json(&text, &file.display().to_string())?;
        let report = validate_classes(j.n, &j.raw_classes_checked()?);
        let mut out = json!({
            "valid": report.is_ok(),
            "n": j.n,
            "colour_count": j.classes.len(),
            "violations": report.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        });
        if report.is_ok() {
            let c = j.to_colouring()?;
            out["min_star_count"] = json!(c.min_star_count());
        }
        let text = to_json(&out);
        if !report.is_ok() {
            return Err(CliError::Mismatch {
                failures: report.violations.len(),
                output: text,
            });
        }
        Ok(text)
    }

    fn detect(&mut self, d: &Detect) -> Result<String> {
        match d {
            Detect::Rainbow {
                colouring,
                pattern: p,
            } => {
                let c = self.colouring(colouring)?;
                let h = pattern(p)?;
                let cert = find_rainbow(&c, &h);
                Ok(to_json(&json!({
                    "found": cert.is_some(),
                    "certificate": cert.as_ref().map(CertificateJson::from),
                })))
            }
            Detect::Spectrum { colouring } => {
                let c = self.colouring(colouring)?;
                let spectrum = rainbow_cycle_spectrum(&c);
                let lengths: Vec<usize> = spectrum.iter().map(|(l, _)| *l).collect();
                let interval = lengths.windows(2).all(|w| w[1] == w[0] + 1);
                Ok(to_json(&json!({
                    "lengths": lengths,
                    "interval": interval,
                    "certificates": spectrum.iter().map(|(_, c)| CertificateJson::from(c)).collect::<Vec<_>>(),
                })))
            }
            Detect::Hamilton { colouring } => {
                let c = self.colouring(colouring)?;
                let cert = rainbow_hamilton_cycle(&c);
                Ok(to_json(&json!({
                    "min_star_count": c.min_star_count(),
                    "found": cert.is_some(),
                    "certificate": cert.as_ref().map(CertificateJson::from),
                })))
            }
            Detect::Join {
                t1,
                t2,
                colouring,
                n,
                retries,
            } => {
                let (t1, t2) = (pattern(t1)?, pattern(t2)?);
                let host = match colouring {
                    Some(p) => self.colouring(p)?,
                    None => random_star_colouring(
                        *n,
                        0.5,
                        &mut stream(self.global.seed, streams::JOIN_HOST),
                    )?,
                };
                let mut rng = stream(self.global.seed, streams::JOIN_SEARCH);
                let cert = find_rainbow_join(&host, &t1, &t2, *retries, &mut rng)?;
                Ok(to_json(&json!({
                    "host": ColouringJson::from(&host),
                    "found": cert.is_some(),
                    "verified": cert.as_ref().is_some_and(|c| c.verify(&host)),
                    "certificate": cert.as_ref().map(CertificateJson::from),
                })))
            }
        }
    }

    fn tournament_cmd(&mut self, t: &TournamentCmd) -> Result<String> {
        #[derive(Serialize)]
        struct WithPath {
            tournament: TournamentJson,
            path: Vec<usize>,
        }
        #[derive(Serialize)]
        struct WithCycles {
            tournament: TournamentJson,
            cycles: Vec<Vec<usize>>,
        }
        #[derive(Serialize)]
        struct WithComponents {
            tournament: TournamentJson,
            components: Vec<Vec<usize>>,
        }
        Ok(match t {
            TournamentCmd::Moon { n, tournament } => {
                let t = self.tournament(*n, tournament.as_deref(), true)?;
                to_json(&WithCycles {
                    cycles: t.moon_cycles()?,
                    tournament: (&t).into(),
                })
            }
            TournamentCmd::Ckfree { n, k, transitive } => {
                let t = find_ck_free_tournament(*n, *k, !transitive)?;
                to_json(&TournamentJson::from(&t))
            }
            TournamentCmd::Redei { n, tournament } => {
                let t = self.tournament(*n, tournament.as_deref(), false)?;
                to_json(&WithPath {
                    path: t.redei_hamilton_path(),
                    tournament: (&t).into(),
                })
            }
            TournamentCmd::Components { n, tournament } => {
                let t = self.tournament(*n, tournament.as_deref(), false)?;
                to_json(&WithComponents {
                    components: t.strong_components(),
                    tournament: (&t).into(),
                })
            }
        })
    }

    fn oracle(&mut self, o: &Oracle) -> Result<String> {
        match o {
            Oracle::Arstar {
                n,
                patterns,
                family: fam,
                no_prune,
            } => {
                let mut hs = patterns
                    .iter()
                    .map(|p| pattern(p))
                    .collect::<Result<Vec<_>>>()?;
                if let Some(f) = fam {
                    hs.extend(family(f)?);
                }
                if hs.is_empty() {
                    return Err(CliError::input("give --pattern or --family"));
                }
                self.check_oracle_n(*n)?;
                let mut opts = self.ctx.opts;
                opts.prune = !no_prune;
                let r = star_anti_ramsey_with(*n, &hs, &opts, &self.ctx.exec)?;
                Ok(to_json(&OracleJson::new(&r, Some(1))))
            }
            Oracle::Nsar { pattern: p } => {
                let r = nsar_with(&pattern(p)?, &self.ctx.opts, &self.ctx.exec)?;
                Ok(to_json(&OracleJson::new(&r, None)))
            }
            Oracle::Extremal {
                n,
                pattern: p,
                emit_all,
            } => {
                self.check_oracle_n(*n)?;
                let h = pattern(p)?;
                let r = star_anti_ramsey_with(
                    *n,
                    std::slice::from_ref(&h),
                    &self.ctx.opts,
                    &self.ctx.exec,
                )?;
                let limit = if *emit_all { None } else { Some(1) };
                Ok(to_json(&OracleJson::new(&r, limit)))
            }
            Oracle::Ex { n, family: f } => Ok(to_json(&ExJson::from(&ex_small(*n, &family(f)?)?))),
            Oracle::Z { m, n, s, t } => {
                Ok(to_json(&ExJson::from(&zarankiewicz_small(*m, *n, *s, *t)?)))
            }
            Oracle::Redblue { t1, t2 } => {
                let holds = check_redblue(&pattern(t1)?, &pattern(t2)?)?;
                Ok(to_json(&json!({ "holds": holds })))
            }
            Oracle::Tuple { colouring, x } => {
                let c = self.colouring(colouring)?;
                let tuple = find_covering_tuple(&c, *x)?;
                let body = match tuple {
                    None => json!({ "found": false }),
                    Some(t) => {
                        let report = check_tuple(&c, &t);
                        let bits = |mask: u32| -> Vec<usize> {
                            (0..c.n()).filter(|&v| mask >> v & 1 == 1).collect()
                        };
                        json!({
                            "found": true,
                            "w": bits(t.w),
                            "y": bits(t.y),
                            "z": bits(t.z),
                            "x": t.x,
                            "v_star": t.v_star,
                            "c_z": t.c_z,
                            "good": report.good,
                            "covers": report.covers,
                        })
                    }
                };
                Ok(to_json(&body))
            }
        }
    }

    fn enumerate(&mut self, n: usize, labelled: bool, count_only: bool) -> Result<String> {
        self.check_oracle_n(n)?;
        if labelled {
            let count = labelled_count(n, self.ctx.opts.cap)?;
            return Ok(to_json(
                &json!({ "n": n, "labelled": true, "count": count }),
            ));
        }
        let reps = enumerate_star_colourings(n, &self.ctx.opts, &self.ctx.exec)?;
        let mut body = json!({ "n": n, "labelled": false, "count": reps.len() });
        if !count_only {
            body["colourings"] = json!(reps.iter().map(ColouringJson::from).collect::<Vec<_>>());
        }
        Ok(to_json(&body))
    }
}

impl ColouringJson {
    /// Raw classes after a bounds check, for reporting rather than rejecting.
    fn raw_classes_checked(&self) -> Result<Vec<Vec<Edge>>> {
        for class in &self.classes {
            for &[u, v] in class {
                if u >= self.n || v >= self.n || u == v {
                    return Err(CliError::input(format!(
                        "edge [{u}, {v}] is not a pair of distinct vertices below {}",
                        self.n
                    )));
                }
            }
        }
        Ok(self.raw_classes())
    }
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> (Output, Option<CliError>) {
    let g = &cli.global;
    let mut output = Output::default();
    if g.max_n == 0 || g.max_n > MAX_ORACLE_N {
        let e = CliError::input(format!("--max-n must lie in 1..={MAX_ORACLE_N}"));
        return (output, Some(e));
    }
    let threads = g.threads.unwrap_or_else(default_threads);
    let ctx = Context::new(
        threads,
        g.max_n,
        g.max_nodes,
        g.time_budget.map(Duration::from_secs),
    );
    let mut runner = Runner {
        global: g,
        ctx,
        inputs: Vec::new(),
    };
    let result = runner.run(&cli.command);
    output.inputs = runner.inputs;
    match result {
        Ok(text) => {
            output.text = text;
            (output, None)
        }
        Err(e) => {
            if let Some(text) = e.partial_output() {
                output.text = text.to_string();
            }
            (output, Some(e))
        }
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, usize::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (Output, Option<CliError>) {
        let mut argv = vec!["arstar"];
        argv.extend_from_slice(args);
        execute(&Cli::try_parse_from(argv).unwrap())
    }

    #[test]
    fn pattern_aliases() {
        assert_eq!(pattern("path2").unwrap(), pattern("P2").unwrap());
        assert_eq!(family("C<=5").unwrap().len(), 3);
        assert_eq!(family("K4+C4").unwrap().len(), 2);
        assert!(family("C<=2").is_err());
        assert!(pattern("X9").is_err());
    }

    #[test]
    fn stars_syntax() {
        let s = parse_stars("0-1,0-2;3-4").unwrap();
        assert_eq!(
            s,
            vec![
                vec![Edge::new(0, 1), Edge::new(0, 2)],
                vec![Edge::new(3, 4)]
            ]
        );
        assert!(parse_stars("0-0").is_err());
        assert!(parse_stars("0_1").is_err());
    }

    #[test]
    fn construct_and_oracle() {
        let (out, err) = run(&["construct", "lexical", "--n", "4"]);
        assert!(err.is_none());
        let c: ColouringJson = parse_json(&out.text, "out").unwrap();
        assert_eq!(c.classes.len(), 3);
        let (out, err) = run(&["oracle", "arstar", "--n", "5", "--pattern", "K4"]);
        assert!(err.is_none());
        let r: OracleJson = parse_json(&out.text, "out").unwrap();
        assert_eq!(r.value, crate::format::ValueJson::Exact(7));
    }

    #[test]
    fn caps_and_errors() {
        let (_, err) = run(&["oracle", "arstar", "--n", "7", "--pattern", "K4"]);
        assert_eq!(err.unwrap().exit_code(), crate::error::EXIT_CAP);
        let (_, err) = run(&["--max-n", "9", "construct", "lexical", "--n", "4"]);
        assert_eq!(err.unwrap().exit_code(), crate::error::EXIT_INPUT);
        let (_, err) = run(&["oracle", "arstar", "--n", "4", "--pattern", "Z1"]);
        assert_eq!(err.unwrap().exit_code(), crate::error::EXIT_INPUT);
        let (_, err) = run(&[
            "--max-nodes",
            "10",
            "oracle",
            "arstar",
            "--n",
            "6",
            "--pattern",
            "K4",
        ]);
        assert_eq!(err.unwrap().exit_code(), crate::error::EXIT_CAP);
    }
}
