use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use canon4::cli::pipeline::{cubic_verdict, curve_verdict, threefold_data};
use canon4::cli::{emit_cubic, emit_json, emit_scheme, parse_cubic, parse_scheme, run_corpus};
use canon4::correspond::{correspondence_check, cubic_to_curve, curve_to_cubic, CubicThreefold};
use canon4::divisors::{absorb_exceptional, hassett_keel_alpha, pe_constants, pencil_singular_count, test_curve_constraints, M4Class, PencilConfig, PicBasis, PicClass};
use canon4::exactalg::field::parse_rational;
use canon4::exactalg::json::PolyJson;
use canon4::exactalg::{DEFAULT_JET, Q};
use canon4::lattices::{borcherds_orders, cusp_invariants, discriminant_group, heegner_types, make_lattice, root_system, roots};
use canon4::singclass::{classify_scheme, singular_points_scan, ReportOptions, TwoThreeScheme};
use canon4::stability::{chow_certificate, chow_form, chow_zero_weight, destabilize_search, FrameSearch};
use canon4::{Error, Result};

#[derive(Parser)]
#[command(name = "canon4", version, about = "Exact checks for canonical genus 4 curves, cubic threefolds and their moduli")]
struct Cli {
    #[command(subcommand)]
    module: Module,
}

#[derive(Subcommand)]
enum Module {
    /// Singularities of (2,3) complete intersections.
    #[command(subcommand)]
    Sing(Sing),
    /// Curves and cubic threefolds with a marked double point.
    #[command(subcommand)]
    Corr(Corr),
    /// GIT stability.
    #[command(subcommand)]
    Stab(Stab),
    /// Lattices, roots, cusps and Heegner divisors.
    #[command(subcommand)]
    Lat(Lat),
    /// Divisor classes.
    #[command(subcommand)]
    Div(Div),
    /// The built-in corpus.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Args)]
struct SchemeArg {
    /// JSON file with "q" and "f".
    #[arg(long)]
    scheme: PathBuf,
}

#[derive(Args)]
struct CubicArg {
    /// JSON file with "f" and an optional "marked" point.
    #[arg(long)]
    cubic: PathBuf,
}

#[derive(Subcommand)]
enum Sing {
    /// Classify every singular point.
    Classify {
        #[command(flatten)]
        input: SchemeArg,
        /// Scan prime; repeat for several.
        #[arg(long)]
        prime: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_JET)]
        jet: u32,
    },
    /// Singular F_p-points.
    Scan {
        #[command(flatten)]
        input: SchemeArg,
        #[arg(long)]
        prime: u64,
    },
}

#[derive(Subcommand)]
enum Corr {
    /// The cubic `x0 q + f`.
    ToCubic {
        #[command(flatten)]
        input: SchemeArg,
    },
    /// Project a cubic from a double point.
    FromCubic {
        #[command(flatten)]
        input: CubicArg,
        /// Comma separated rational coordinates; defaults to the marked point.
        #[arg(long)]
        point: Option<String>,
    },
    /// Match singularities of the curve and the cubic.
    Check {
        #[command(flatten)]
        input: SchemeArg,
        #[arg(long, value_delimiter = ',', default_value = "101,103")]
        primes: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_JET)]
        jet: u32,
    },
}

#[derive(Subcommand)]
enum Stab {
    /// Verdict for a curve from its singularities.
    Verdict {
        #[command(flatten)]
        input: SchemeArg,
        /// The scheme is a ribbon on a twisted cubic.
        #[arg(long)]
        ribbon: bool,
    },
    /// Verdict for a cubic threefold with a marked double point.
    Cubic {
        #[command(flatten)]
        input: CubicArg,
    },
    /// Search for a destabilizing 1-PS in seeded random frames.
    Destabilize {
        #[command(flatten)]
        input: CubicArg,
        #[arg(long, default_value_t = 0)]
        frames: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The Chow form in Plücker coordinates.
    Chowform {
        #[command(flatten)]
        input: SchemeArg,
    },
}

#[derive(Subcommand)]
enum Lat {
    /// Roots and root system of a lattice expression like "E8+A2".
    Roots { expr: String },
    /// Discriminant group invariants.
    Disc { expr: String },
    Cusps,
    Borcherds,
    Heegner,
}

#[derive(Subcommand)]
enum Div {
    /// Classes on the projective bundle over the space of quadrics.
    Constants,
    /// Convert a class like "9l-1d" or "3e+2h".
    Convert {
        #[arg(long)]
        class: String,
        /// "eta-h" or "lambda-delta".
        #[arg(long)]
        to: String,
    },
    /// Singular members of a pencil.
    Pencil {
        /// "quadric" (cubics through a fixed quadric) or "cubic".
        #[arg(long)]
        config: String,
    },
    /// The Hassett-Keel alpha of a class `a,b0,b1,b2`; with `--derive`,
    /// b1 and b2 come from test curves.
    Alpha {
        #[arg(long)]
        class: String,
        #[arg(long)]
        derive: bool,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Run every check; prints JSON unless `--json` names an output file,
    /// in which case a text summary is printed.
    Run {
        /// Comma separated groups.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List the entries.
    List,
    /// Write one scheme or cubic file per entry into a directory.
    Export { dir: PathBuf },
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn scheme(a: &SchemeArg) -> Result<TwoThreeScheme> {
    parse_scheme(&read(&a.scheme)?)
}

fn cubic(a: &CubicArg) -> Result<CubicThreefold> {
    parse_cubic(&read(&a.cubic)?)
}

fn parse_point(s: &str) -> Result<Vec<Q>> {
    s.split(',')
        .enumerate()
        .map(|(i, c)| {
            parse_rational(c).ok_or_else(|| Error::Parse { location: format!("--point entry {}", i + 1), message: format!("bad rational '{c}'") })
        })
        .collect()
}

fn poly_json(p: &canon4::exactalg::MultiPoly<Q>) -> serde_json::Value {
    serde_json::to_value(PolyJson::from_poly(p)).unwrap_or_default()
}

fn run(cli: Cli) -> Result<i32> {
    let out = match cli.module {
        Module::Sing(Sing::Classify { input, prime, jet }) => {
            let mut opts = ReportOptions { jet, ..Default::default() };
            if !prime.is_empty() {
                opts.primes = prime;
            }
            emit_json(&classify_scheme(&scheme(&input)?, &opts)?)
        }
        Module::Sing(Sing::Scan { input, prime }) => emit_json(&singular_points_scan(&scheme(&input)?, prime)?),
        Module::Corr(Corr::ToCubic { input }) => emit_cubic(&curve_to_cubic(&scheme(&input)?)?),
        Module::Corr(Corr::FromCubic { input, point }) => {
            let x = cubic(&input)?;
            let p = match point {
                Some(s) => parse_point(&s)?,
                None => x.marked().ok_or_else(|| Error::Refused("no --point and no marked point".into()))?.to_vec(),
            };
            emit_scheme(&cubic_to_curve(&x, &p, None)?)
        }
        Module::Corr(Corr::Check { input, primes, jet }) => emit_json(&correspondence_check(&scheme(&input)?, &primes, jet)?),
        Module::Stab(Stab::Verdict { input, ribbon }) => {
            let c = scheme(&input)?;
            let (r, v) = curve_verdict(&c, &canon4::stability::CurveFlags { ribbon })?;
            let (_, d) = threefold_data(&c)?;
            emit_json(&json!({ "singularities": r, "verdict": v, "threefold": canon4::stability::allcock_verdict(&d) }))
        }
        Module::Stab(Stab::Cubic { input }) => {
            let (d, v) = cubic_verdict(&cubic(&input)?)?;
            emit_json(&json!({ "threefold": d, "verdict": v }))
        }
        Module::Stab(Stab::Destabilize { input, frames, seed }) => {
            let x = cubic(&input)?;
            let found = destabilize_search(x.f(), &FrameSearch::random(frames, seed))?;
            emit_json(&json!({ "frames_searched": frames + 1, "seed": seed, "certificate": found }))
        }
        Module::Stab(Stab::Chowform { input }) => {
            let r = chow_form(&scheme(&input)?)?;
            emit_json(&json!({
                "degree": r.degree,
                "form": poly_json(&r.poly),
                "certificate": chow_certificate(&r),
                "zero_weight": chow_zero_weight(&r),
            }))
        }
        Module::Lat(Lat::Roots { expr }) => {
            let l = make_lattice(&expr)?;
            emit_json(&json!({ "lattice": expr, "root_count": roots(&l)?.len(), "root_system": root_system(&l)?.label() }))
        }
        Module::Lat(Lat::Disc { expr }) => {
            let l = make_lattice(&expr)?;
            emit_json(&json!({ "lattice": expr, "determinant": l.det().to_string(), "invariants": discriminant_group(&l)? }))
        }
        Module::Lat(Lat::Cusps) => emit_json(&cusp_invariants()?),
        Module::Lat(Lat::Borcherds) => emit_json(&borcherds_orders()?),
        Module::Lat(Lat::Heegner) => emit_json(&heegner_types()?),
        Module::Div(Div::Constants) => emit_json(&pe_constants()),
        Module::Div(Div::Convert { class, to }) => {
            let basis = match to.as_str() {
                "eta-h" | "eta_h" => PicBasis::EtaH,
                "lambda-delta" | "lambda_delta" => PicBasis::LambdaDelta,
                other => return Err(Error::Invalid(format!("unknown basis '{other}'; expected eta-h or lambda-delta"))),
            };
            let c = PicClass::parse(&class)?;
            let d = c.to(basis);
            emit_json(&json!({ "input": c.to_string(), "output": d.to_string(), "class": d }))
        }
        Module::Div(Div::Pencil { config }) => emit_json(&pencil_singular_count(config.parse::<PencilConfig>()?)),
        Module::Div(Div::Alpha { class, derive }) => {
            let mut c = M4Class::parse(&class)?;
            let derived = if derive {
                let t = test_curve_constraints(&c.a, &c.b0)?;
                c = t.class.clone();
                Some(t)
            } else {
                None
            };
            let reduced = absorb_exceptional(&c);
            let alpha = reduced.as_ref().and_then(hassett_keel_alpha).map(|a| a.to_string());
            emit_json(&json!({ "class": c, "test_curves": derived, "modulo_exceptional": reduced, "alpha": alpha }))
        }
        Module::Corpus(CorpusCmd::Run { filter, seed, json }) => {
            let report = run_corpus(filter.as_deref(), seed)?;
            let text = emit_json(&report);
            match json {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| io_error(&path, e))?;
                    print!("{}", report.to_text());
                }
                None => print!("{text}"),
            }
            return Ok(report.exit_code());
        }
        Module::Corpus(CorpusCmd::List) => {
            let mut s = String::new();
            for e in canon4::cli::corpus() {
                s.push_str(&format!("{:<22} {:?} {:?}\n", e.name, e.status, e.reasons));
            }
            s
        }
        Module::Corpus(CorpusCmd::Export { dir }) => {
            fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
            let mut s = String::new();
            for e in canon4::cli::corpus() {
                let (text, kind) = match (e.scheme(), e.cubic()) {
                    (Some(c), _) => (emit_scheme(&c?), "scheme"),
                    (_, Some(x)) => (emit_cubic(&x?), "cubic"),
                    _ => continue,
                };
                let file = dir.join(format!("{}.{kind}.json", e.name.replace(['(', ')', ','], "_")));
                fs::write(&file, text).map_err(|err| io_error(&file, err))?;
                s.push_str(&format!("{}\n", file.display()));
            }
            s
        }
    };
    print!("{out}");
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
