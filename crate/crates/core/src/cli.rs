//! Command-line front end: every subcommand prints a JSON report (schema 1)
//! on stdout and a short summary on stderr.

use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::construct::{self, RsciConfig, Stream};
use crate::error::{Error, Result};
use crate::geometry::{classify_plane_section, linear_span_codim, smooth_verdict, SmoothVerdict, DEFAULT_MINOR_CAP};
use crate::idealops::{eliminate, hilbert, kernel, preimage, saturate, Ideal, RingMap};
use crate::lattice::{self, IntersectionLattice, SearchBox, SurfaceNumerics};
use crate::monomial::TermOrder;
use crate::parse::{parse_generators, render_generators};
use crate::ring::{Ring, RingRef};
use crate::scalar::Field;
use crate::verify;

pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "cubiclab", version, about = "Groebner bases, schemes and lattices for cubic fourfolds")]
pub struct Cli {
    /// Seed for randomized subcommands.
    #[arg(long, global = true, env = "CUBICLAB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Coefficient field: `q` or `fp:<prime>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: Field,
    /// Variables of the ambient ring, `x_0..x_5` or a comma separated list.
    #[arg(long, global = true, default_value = "x_0..x_5")]
    pub vars: String,
    /// Compact JSON on stdout.
    #[arg(long, global = true)]
    pub compact: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct MapArgs {
    /// Forms defining the map (in the target variables); defaults to the
    /// del Pezzo parametrization.
    #[arg(long)]
    pub forms: Option<String>,
    #[arg(long, default_value = "t_0..t_2")]
    pub target_vars: String,
    /// Source variables; defaults to `x_0..x_{m-1}` for `m` forms.
    #[arg(long)]
    pub source_vars: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct RandomArgs {
    /// Coefficient bound: coefficients are uniform in [-a, a].
    #[arg(long, default_value_t = 1)]
    pub a: u32,
    #[arg(long, default_value_t = 64)]
    pub attempts: u32,
    /// Certify smoothness over the rationals instead of the modular filter.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb {
        ideal: String,
        /// grevlex, lex or elim:<k>
        #[arg(long, default_value = "grevlex", value_parser = parse_order)]
        order: TermOrder,
    },
    Saturate {
        ideal: String,
        /// Saturate by this ideal instead of the irrelevant ideal.
        #[arg(long)]
        by: Option<String>,
    },
    /// Eliminate the first `count` variables.
    Eliminate {
        ideal: String,
        #[arg(long)]
        count: usize,
    },
    Kernel {
        #[command(flatten)]
        map: MapArgs,
    },
    /// Preimage of an ideal of the target ring.
    Preimage {
        ideal: String,
        #[command(flatten)]
        map: MapArgs,
    },
    Hilbert { ideal: String },
    Dim { ideal: String },
    Degree { ideal: String },
    Smooth {
        ideal: String,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_MINOR_CAP)]
        minor_cap: u128,
    },
    /// Number of independent linear forms vanishing on the scheme.
    Span { ideal: String },
    /// Classify the intersection of a surface with a plane.
    Section { surface: String, plane: String },
    /// Random smooth complete intersection containing the scheme.
    Rsci {
        ideal: String,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        count: usize,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Independent reduced points on the image of a map.
    Points {
        #[arg(long)]
        count: usize,
        #[command(flatten)]
        map: MapArgs,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// A plane meeting the image of the map exactly in the given subscheme.
    MergePlane {
        subscheme: String,
        #[command(flatten)]
        map: MapArgs,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Residual of `part` inside `total`.
    Link { total: String, part: String },
    Catalog {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
    Fixture {
        name: String,
        #[arg(long)]
        exact: bool,
    },
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Run every acceptance criterion.
    VerifyAll,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum NamedSurface {
    Scroll,
    Delpezzo,
    Plane,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Ambient {
    Cubic,
    Quadric,
}

#[derive(Subcommand, Debug)]
pub enum LatticeCommand {
    /// Discriminant of ⟨h², S, P⟩ with S·P = β, of the skew-planes
    /// lattice, or of an explicit Gram matrix (`3,1,1;1,3,0;1,0,3`).
    Disc {
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<i64>,
        #[arg(long, conflicts_with = "beta")]
        gram: Option<String>,
    },
    Excess {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        k1c: i64,
        #[arg(long, allow_hyphen_values = true)]
        k2c: i64,
    },
    Selfint {
        #[arg(long, value_enum)]
        surface: Option<NamedSurface>,
        #[arg(long, value_enum, default_value = "cubic")]
        ambient: Ambient,
        #[arg(long, allow_hyphen_values = true)]
        h2: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        hk: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        k2: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        chi_top: Option<i64>,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        chi_o: i64,
    },
    Residual {
        #[arg(long, allow_hyphen_values = true)]
        beta: i64,
    },
    /// Classes a·h² + b·P₁ + c·P₂ of given degree and self-intersection.
    Search {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long, allow_hyphen_values = true)]
        selfint: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        lo: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 3)]
        hi: i64,
        /// Enumerate the box [-N, N]^3 instead of the derived box.
        #[arg(long = "box")]
        wide: Option<i64>,
    },
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    match s {
        "q" | "Q" | "QQ" => Ok(Field::Rational),
        _ => {
            let p = s.strip_prefix("fp:").ok_or_else(|| format!("expected `q` or `fp:<prime>`, got `{s}`"))?;
            let p: u32 = p.parse().map_err(|_| format!("not a prime: `{p}`"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

fn parse_order(s: &str) -> std::result::Result<TermOrder, String> {
    match s {
        "grevlex" => Ok(TermOrder::Grevlex),
        "lex" => Ok(TermOrder::Lex),
        _ => s
            .strip_prefix("elim:")
            .and_then(|k| k.parse().ok())
            .map(TermOrder::Elimination)
            .ok_or_else(|| format!("unknown order `{s}`")),
    }
}

/// `x_0..x_5` or `a,b,c`.
pub fn parse_vars(spec: &str) -> Result<Vec<String>> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once("..") {
        let (fam, a) = lo.rsplit_once('_').ok_or_else(|| Error::InvalidArgument(format!("bad range `{spec}`")))?;
        let (fam2, b) = hi.rsplit_once('_').ok_or_else(|| Error::InvalidArgument(format!("bad range `{spec}`")))?;
        let (a, b): (usize, usize) = match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) if fam == fam2 && a <= b => (a, b),
            _ => return Err(Error::InvalidArgument(format!("bad range `{spec}`"))),
        };
        return Ok((a..=b).map(|i| format!("{fam}_{i}")).collect());
    }
    let vars: Vec<String> = spec.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
    if vars.is_empty() {
        return Err(Error::InvalidArgument("no variables".into()));
    }
    Ok(vars)
}

fn ring_from(spec: &str, field: Field) -> Result<RingRef> {
    Ok(Arc::new(Ring::new(parse_vars(spec)?, field)?))
}

/// Read an ideal: `@path` for a file, `cat:<name>` for a catalog entry,
/// otherwise an inline generator list.
fn read_ideal(arg: &str, ring: &RingRef) -> Result<Ideal> {
    if let Some(name) = arg.strip_prefix("cat:") {
        let i = catalog::lookup(name)?;
        let target: RingRef = Arc::new(i.ring().with_field(ring.field()));
        return if ring.field() == Field::Rational { Ok(i) } else { i.change_field(&target) };
    }
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)?,
        None => arg.to_string(),
    };
    Ideal::parse(ring, &text)
}

fn build_map(m: &MapArgs, field: Field) -> Result<RingMap> {
    match &m.forms {
        None => {
            let map = catalog::del_pezzo_map()?;
            if field == Field::Rational {
                return Ok(map);
            }
            let target: RingRef = Arc::new(map.target().with_field(field));
            let source: RingRef = Arc::new(map.source().with_field(field));
            let forms = Ideal::new(map.target(), map.forms().to_vec())?.change_field(&target)?;
            RingMap::new(&source, &target, forms.gens().to_vec())
        }
        Some(text) => {
            let target = ring_from(&m.target_vars, field)?;
            let forms = parse_generators(text, &target)?;
            let source = match &m.source_vars {
                Some(s) => ring_from(s, field)?,
                None => Arc::new(Ring::new((0..forms.len()).map(|i| format!("x_{i}")).collect(), field)?),
            };
            RingMap::new(&source, &target, forms)
        }
    }
}

fn random_cfg(seed: u64, field: Field, r: &RandomArgs) -> RsciConfig {
    RsciConfig { a: r.a, max_attempts: r.attempts, seed, field, exact: r.exact, ..RsciConfig::default() }
}

fn gens_json(i: &Ideal) -> Value {
    json!(render_generators(i.gens()))
}

/// Result of one subcommand: structured result, verification checks, and a
/// one-line summary.
struct Outcome {
    result: Value,
    checks: Vec<Value>,
    pass: bool,
    summary: String,
    failing: Vec<String>,
}

impl Outcome {
    fn plain(result: Value, summary: String) -> Outcome {
        Outcome { result, checks: Vec::new(), pass: true, summary, failing: Vec::new() }
    }
}

fn report_outcome(r: construct::VerificationReport, summary: String) -> Outcome {
    let failing = r.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {}", c.name, c.anchor)).collect();
    let checks = r.checks.iter().map(|c| serde_json::to_value(c).expect("serializable")).collect();
    Outcome { pass: r.pass, result: json!({ "fixture": r.fixture }), checks, summary, failing }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let field = cli.field;
    let ring = || ring_from(&cli.vars, field);
    Ok(match &cli.command {
        Command::Gb { ideal, order } => {
            let i = read_ideal(ideal, &ring()?)?;
            let gb = i.gb_in(*order)?;
            let basis = render_generators(gb.elements());
            let summary = format!("{} basis elements", basis.len());
            Outcome::plain(json!({ "order": format!("{order:?}"), "basis": basis }), summary)
        }
        Command::Saturate { ideal, by } => {
            let r = ring()?;
            let i = read_ideal(ideal, &r)?;
            let j = by.as_deref().map(|b| read_ideal(b, &r)).transpose()?;
            let s = saturate(&i, j.as_ref())?.minimalized()?;
            Outcome::plain(json!({ "ideal": gens_json(&s) }), format!("{} generators", s.gens().len()))
        }
        Command::Eliminate { ideal, count } => {
            let i = read_ideal(ideal, &ring()?)?;
            let e = eliminate(&i, *count)?.minimalized()?;
            Outcome::plain(
                json!({ "vars": e.ring().vars(), "ideal": gens_json(&e) }),
                format!("{} generators", e.gens().len()),
            )
        }
        Command::Kernel { map } => {
            let h = build_map(map, field)?;
            let k = saturate(&kernel(&h)?, None)?;
            Outcome::plain(json!({ "ideal": gens_json(&k) }), format!("kernel has {} generators", k.gens().len()))
        }
        Command::Preimage { ideal, map } => {
            let h = build_map(map, field)?;
            let j = read_ideal(ideal, h.target())?;
            let p = saturate(&preimage(&h, &j)?, None)?;
            Outcome::plain(json!({ "ideal": gens_json(&p) }), format!("preimage has {} generators", p.gens().len()))
        }
        Command::Hilbert { ideal } => {
            let h = hilbert(&read_ideal(ideal, &ring()?)?)?;
            let summary = format!("dim {} degree {}", h.dim, h.degree);
            Outcome::plain(serde_json::to_value(&h).expect("serializable"), summary)
        }
        Command::Dim { ideal } => {
            let h = hilbert(&read_ideal(ideal, &ring()?)?)?;
            Outcome::plain(json!({ "dim": h.dim }), format!("dim {}", h.dim))
        }
        Command::Degree { ideal } => {
            let h = hilbert(&read_ideal(ideal, &ring()?)?)?;
            Outcome::plain(json!({ "degree": h.degree }), format!("degree {}", h.degree))
        }
        Command::Smooth { ideal, exact, minor_cap } => {
            let i = saturate(&read_ideal(ideal, &ring()?)?, None)?;
            let v = smooth_verdict(&i, *exact, *minor_cap)?;
            Outcome::plain(
                json!({ "smooth": v != SmoothVerdict::Singular, "verdict": v }),
                serde_json::to_value(v).expect("serializable").as_str().unwrap_or_default().to_string(),
            )
        }
        Command::Span { ideal } => {
            let c = linear_span_codim(&read_ideal(ideal, &ring()?)?)?;
            Outcome::plain(json!({ "span_codim": c }), format!("{c} independent linear forms"))
        }
        Command::Section { surface, plane } => {
            let r = ring()?;
            let class = classify_plane_section(&read_ideal(surface, &r)?, &read_ideal(plane, &r)?)?;
            let v = serde_json::to_value(&class).expect("serializable");
            let summary = v["tag"].as_str().unwrap_or_default().to_string();
            Outcome::plain(json!({ "class": v }), summary)
        }
        Command::Rsci { ideal, degree, count, random } => {
            let cfg = random_cfg(cli.seed, field, random);
            let out = construct::rsci(&read_ideal(ideal, &ring()?)?, *degree, *count, &cfg)?;
            Outcome::plain(
                json!({ "ideal": gens_json(&out.ideal), "attempts": out.attempts, "verdict": out.verdict }),
                format!("found after {} attempts", out.attempts),
            )
        }
        Command::Points { count, map, random } => {
            let cfg = random_cfg(cli.seed, field, random);
            let h = build_map(map, field)?;
            let (p, attempts) = construct::find_points_on_image(&h, *count, &cfg, &mut Stream::new(cli.seed))?;
            Outcome::plain(
                json!({ "ideal": render_generators(p.gb()?.elements()), "attempts": attempts }),
                format!("{count} points after {attempts} attempts"),
            )
        }
        Command::MergePlane { subscheme, map, random } => {
            let cfg = random_cfg(cli.seed, field, random);
            let h = build_map(map, field)?;
            let y = read_ideal(subscheme, h.source())?;
            let m = construct::merge_plane(&h, &y, &cfg, &mut Stream::new(cli.seed))?;
            Outcome::plain(
                json!({ "plane": gens_json(&m.plane), "ideal": gens_json(&m.ideal), "attempts": m.attempts }),
                format!("plane found after {} attempts", m.attempts),
            )
        }
        Command::Link { total, part } => {
            let r = ring()?;
            let l = construct::link(&read_ideal(total, &r)?, &read_ideal(part, &r)?)?;
            let h = hilbert(&l)?;
            Outcome::plain(
                json!({ "ideal": gens_json(&l), "dim": h.dim, "degree": h.degree }),
                format!("residual: dim {} degree {}", h.dim, h.degree),
            )
        }
        Command::Catalog { name, list } => match (name, list) {
            (_, true) | (None, false) => {
                let names = catalog::names();
                Outcome::plain(json!({ "names": names }), format!("{} entries", names.len()))
            }
            (Some(n), false) => {
                let i = catalog::lookup(n)?;
                let h = hilbert(&i)?;
                Outcome::plain(
                    json!({ "name": n, "ideal": gens_json(&i), "dim": h.dim, "degree": h.degree, "hilbert": h }),
                    format!("{n}: dim {} degree {}", h.dim, h.degree),
                )
            }
        },
        Command::Fixture { name, exact } => {
            let cfg = RsciConfig { seed: cli.seed, field, exact: *exact, ..RsciConfig::default() };
            let r = construct::run_fixture(name, &cfg)?;
            let passed = r.checks.iter().filter(|c| c.pass).count();
            let summary = format!("{name}: {passed}/{} checks pass", r.checks.len());
            let mut o = report_outcome(r, summary);
            if let Some(section) = o.checks.iter().find(|c| c["name"] == "plane section") {
                o.result["section"] = section["witness"]["got"].clone();
            }
            o
        }
        Command::Lattice(cmd) => lattice_command(cmd)?,
        Command::VerifyAll => {
            let cfg = RsciConfig { seed: cli.seed, ..RsciConfig::default() };
            let outcomes = verify::run_all(&cfg);
            let pass = outcomes.iter().all(|o| o.pass);
            let failing = outcomes.iter().filter(|o| !o.pass).map(|o| format!("criterion {}: {}", o.id, o.title)).collect();
            let passed = outcomes.iter().filter(|o| o.pass).count();
            let checks = outcomes.iter().map(|o| serde_json::to_value(o).expect("serializable")).collect();
            Outcome {
                result: json!({ "criteria": outcomes.len() }),
                checks,
                pass,
                summary: format!("{passed}/{} criteria pass", outcomes.len()),
                failing,
            }
        }
    })
}

fn parse_gram(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::InvalidArgument(format!("bad Gram entry `{x}`"))))
                .collect()
        })
        .collect()
}

fn lattice_command(cmd: &LatticeCommand) -> Result<Outcome> {
    Ok(match cmd {
        LatticeCommand::Disc { beta, gram } => {
            let (l, label) = match (beta, gram) {
                (Some(b), _) => (IntersectionLattice::del_pezzo_and_plane(*b), format!("<h^2, S, P>, beta = {b}")),
                (None, Some(g)) => {
                    let g = parse_gram(g)?;
                    let labels: Vec<String> = (0..g.len()).map(|i| format!("e{i}")).collect();
                    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
                    (IntersectionLattice::new(&refs, g)?, "explicit Gram matrix".to_string())
                }
                (None, None) => (IntersectionLattice::skew_planes(), "<h^2, P1, P2>".to_string()),
            };
            let d = lattice::gram_discriminant(&l);
            Outcome::plain(json!({ "lattice": label, "gram": l.gram, "discriminant": d.to_string() }), format!("{d}"))
        }
        LatticeCommand::Excess { degree, genus, k1c, k2c } => {
            let e = lattice::excess_multiplicity(*degree, *genus, *k1c, *k2c);
            let mut summary = format!("{}", e.value);
            if let Some(a) = &e.advisory {
                summary.push_str(&format!(" (advisory: {a})"));
            }
            Outcome::plain(serde_json::to_value(&e).expect("serializable"), summary)
        }
        LatticeCommand::Selfint { surface, ambient, h2, hk, k2, chi_top, chi_o } => {
            let n = match surface {
                Some(NamedSurface::Scroll) => SurfaceNumerics::QUARTIC_SCROLL,
                Some(NamedSurface::Delpezzo) => SurfaceNumerics::DEL_PEZZO_QUINTIC,
                Some(NamedSurface::Plane) => SurfaceNumerics::PLANE,
                None => match (h2, hk, k2) {
                    (Some(h2), Some(hk), Some(k2)) => SurfaceNumerics {
                        h2: *h2,
                        hk: *hk,
                        k2: *k2,
                        chi_top: match (ambient, chi_top) {
                            (_, Some(c)) => *c,
                            (Ambient::Quadric, None) => 0,
                            (Ambient::Cubic, None) => {
                                return Err(Error::InvalidArgument("--chi-top is required".into()));
                            }
                        },
                        chi_o: *chi_o,
                    },
                    _ => return Err(Error::InvalidArgument("give --surface or --h2, --hk and --k2".into())),
                },
            };
            let v = match ambient {
                Ambient::Cubic => lattice::self_int_cubic_fourfold(&n),
                Ambient::Quadric => lattice::self_int_quadric_fourfold(&n),
            };
            Outcome::plain(json!({ "numerics": n, "ambient": format!("{ambient:?}").to_lowercase(), "self_int": v }), format!("{v}"))
        }
        LatticeCommand::Residual { beta } => {
            let t = lattice::residual_class(&lattice::del_pezzo_class(*beta), *beta)?;
            let summary = format!("T.h^2 = {}, T^2 = {}, T.P = {}", t.t_h2, t.t_sq, t.t_p);
            Outcome::plain(serde_json::to_value(&t).expect("serializable"), summary)
        }
        LatticeCommand::Search { degree, selfint, lo, hi, wide } => {
            let r = match wide {
                Some(n) => {
                    let n = n.abs();
                    lattice::obstruction_search_in(*degree, *selfint, (*lo, *hi), SearchBox { a: (-n, n), b: (-n, n), c: (-n, n) })
                }
                None => lattice::obstruction_search(*degree, *selfint, (*lo, *hi))?,
            };
            let b = r.search_box;
            let summary = format!(
                "{} solutions in box a in [{}, {}], b in [{}, {}], c in [{}, {}]",
                r.solutions.len(),
                b.a.0,
                b.a.1,
                b.b.0,
                b.b.1,
                b.c.0,
                b.c.1
            );
            Outcome::plain(serde_json::to_value(&r).expect("serializable"), summary)
        }
    })
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. }
            | Error::UnknownVariable(_)
            | Error::UnknownName(_)
            | Error::Io(_)
            | Error::InvalidArgument(_)
            | Error::TooManyVariables { .. }
            | Error::InvalidField(_)
            | Error::RingMismatch
            | Error::ArityMismatch { .. }
            | Error::NotHomogeneous
            | Error::MixedDegrees
    )
}

/// Run with the given arguments, writing the report to stdout and the
/// summary to stderr; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    let command: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let config = json!({ "seed": cli.seed, "field": cli.field.to_string(), "vars": cli.vars });
    let (code, report) = match execute(&cli) {
        Ok(o) => {
            eprintln!("{}", o.summary);
            for f in &o.failing {
                eprintln!("FAILED {f}");
            }
            let status = if o.pass { "pass" } else { "fail" };
            let mut report = json!({
                "schema": SCHEMA,
                "command": command,
                "config": config,
                "status": status,
                "result": o.result,
                "millis": start.elapsed().as_millis(),
            });
            if !o.checks.is_empty() {
                report["checks"] = Value::Array(o.checks);
            }
            (if o.pass { 0 } else { 1 }, report)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let report = json!({
                "schema": SCHEMA,
                "command": command,
                "config": config,
                "status": "error",
                "error": e.to_string(),
                "millis": start.elapsed().as_millis(),
            });
            (if is_usage_error(&e) { 2 } else { 1 }, report)
        }
    };
    let text = if cli.compact { serde_json::to_string(&report) } else { serde_json::to_string_pretty(&report) };
    println!("{}", text.expect("serializable report"));
    code
}
