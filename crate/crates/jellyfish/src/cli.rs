//! Command-line front end.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::oracle::{check_equivalence, witness_split};
use crate::paths::{corners, enumerate_families, family_size, shelling_label, valid_endpoint_sets, EndpointSet};
use crate::poset::{build_ade_poset, build_poset, GroupCase, Point, WallachCase};
use crate::series::{
    bernstein_degree, covariant_series, invariant_series, sl_invariant_series, so_invariant_series, wallach_series,
    RationalSeries,
};
use crate::stanley::{
    arc_diagram, lambda_from_tau, locate, render, stanley_decomposition, weight, Drawable, Format, Monomial,
};
use crate::tableaux::{bin_sizes, Shape};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "jellyfish", about = "Stanley decompositions and Hilbert series of modules of covariants")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// gl, sp or o
    #[arg(long, global = true)]
    group: Option<GroupArg>,
    #[arg(long, global = true)]
    k: Option<u32>,
    #[arg(long, global = true)]
    p: Option<u32>,
    #[arg(long, global = true)]
    q: Option<u32>,
    #[arg(long, global = true)]
    n: Option<u32>,
    /// Shape as comma-separated integers, e.g. 2,1 or 1,0,-1
    #[arg(long, global = true, allow_hyphen_values = true)]
    tau: Option<String>,
    /// Dn, E6 or E7
    #[arg(long, global = true)]
    wallach: Option<String>,
    #[arg(long, global = true, default_value_t = 1)]
    level: u32,
    #[arg(long, global = true)]
    format: Option<FormatArg>,
    /// Write the result to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Cap on worker threads
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GroupArg {
    Gl,
    Sp,
    O,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormatArg {
    Json,
    Latex,
    Ascii,
    Svg,
    Tikz,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print the poset of the case or Wallach representation
    Poset {
        #[command(subcommand)]
        action: PosetAction,
    },
    /// List valid endpoint sets
    Endpoints {
        #[command(subcommand)]
        action: EndpointsAction,
    },
    /// Enumerate families of nonintersecting paths
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Bin sizes #τ_E for a shape
    Bins,
    /// Hilbert series
    Series {
        #[command(subcommand)]
        kind: SeriesKind,
    },
    /// Bernstein degree of a module of covariants
    Bernstein,
    /// Stanley decomposition
    Stanley {
        #[command(subcommand)]
        action: StanleyAction,
    },
    /// Find the jellyfish whose Stanley space contains a monomial
    Locate {
        #[arg(long)]
        monomial: String,
    },
    /// Weight of a monomial covariant and the highest weight λ of τ
    Weight {
        #[arg(long)]
        monomial: String,
    },
    /// Draw a poset, the jellyfish of a monomial, or its arc diagram
    Diagram {
        #[arg(long)]
        monomial: Option<String>,
        #[arg(long)]
        arcs: bool,
    },
    /// Compare the split-monomial oracle with the series
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(Subcommand, Debug)]
enum PosetAction {
    Show,
}

#[derive(Subcommand, Debug)]
enum EndpointsAction {
    List,
}

#[derive(Subcommand, Debug)]
enum FamiliesAction {
    Enum {
        #[arg(long)]
        endpoints: String,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesKind {
    Covariants,
    Invariants,
    Sl,
    So,
    Wallach,
}

#[derive(Subcommand, Debug)]
enum StanleyAction {
    List,
}

#[derive(Subcommand, Debug)]
enum OracleAction {
    Check {
        #[arg(long, default_value_t = 9)]
        max_degree: usize,
        /// Degree bound for the support and location checks
        #[arg(long, default_value_t = 7)]
        locate_degree: usize,
    },
}

/// Result of a verb: text for stdout, plus whether the oracle disagreed.
struct Output {
    text: String,
    mismatch: bool,
}

impl Output {
    fn text(s: impl Into<String>) -> Self {
        Output { text: s.into(), mismatch: false }
    }

    fn json(v: &Value) -> Self {
        Output::text(serde_json::to_string_pretty(v).unwrap_or_default())
    }
}

impl Opts {
    fn case(&self) -> Result<GroupCase> {
        let need =
            |v: Option<u32>, name: &str| v.ok_or_else(|| Error::InvalidParameters(format!("--{name} is required")));
        let group = self.group.ok_or_else(|| Error::InvalidParameters("--group is required".into()))?;
        let k = need(self.k, "k")?;
        let case = match group {
            GroupArg::Gl => GroupCase::gl(k, need(self.p, "p")?, need(self.q, "q")?)?,
            GroupArg::Sp => GroupCase::sp(k, need(self.n, "n")?)?,
            GroupArg::O => GroupCase::o(k, need(self.n, "n")?)?,
        };
        case.require_range()?;
        Ok(case)
    }

    fn shape(&self) -> Result<Shape> {
        match &self.tau {
            Some(t) => Shape::parse(t),
            None => Ok(Shape::empty()),
        }
    }

    fn wallach(&self) -> Result<WallachCase> {
        let name = self.wallach.as_deref().ok_or_else(|| Error::InvalidParameters("--wallach is required".into()))?;
        WallachCase::parse(name, self.level)
    }

    fn format_or(&self, default: FormatArg) -> FormatArg {
        self.format.unwrap_or(default)
    }
}

fn series_output(s: &RationalSeries, fmt: FormatArg, extra: Option<Value>) -> Result<Output> {
    match fmt {
        FormatArg::Latex => Ok(Output::text(s.to_latex())),
        FormatArg::Json => Ok(Output::json(&extra.unwrap_or_else(|| s.to_json()))),
        FormatArg::Ascii => Ok(Output::text(s.to_string())),
        _ => Err(Error::InvalidParameters("series are printed as json, latex or ascii".into())),
    }
}

fn points_json(pts: impl IntoIterator<Item = Point>) -> Value {
    Value::Array(pts.into_iter().map(|p| json!([p.row, p.col])).collect())
}

fn dispatch(verb: &Verb, opts: &Opts) -> Result<Output> {
    match verb {
        Verb::Poset { action: PosetAction::Show } => {
            let poset =
                if opts.wallach.is_some() { build_ade_poset(&opts.wallach()?) } else { build_poset(&opts.case()?) };
            match opts.format_or(FormatArg::Json) {
                FormatArg::Json => Ok(Output::json(&poset.to_json())),
                f => Ok(Output::text(render(&Drawable::Poset(&poset), diagram_format(f)?)?)),
            }
        }
        Verb::Endpoints { action: EndpointsAction::List } => {
            let case = opts.case()?;
            let list: Vec<Value> = valid_endpoint_sets(&case)
                .iter()
                .map(|e| Ok(json!({"endpoints": e.to_string(), "size": family_size(&case, e)?})))
                .collect::<Result<_>>()?;
            Ok(Output::json(&json!({"case": case.to_string(), "endpoint_sets": list})))
        }
        Verb::Families { action: FamiliesAction::Enum { endpoints } } => {
            let case = opts.case()?;
            let e = EndpointSet::parse(&case, endpoints)?;
            let fams: Vec<Value> = enumerate_families(&case, &e)?
                .iter()
                .map(|f| {
                    json!({
                        "paths": f.paths.iter().map(|p| points_json(p.iter().copied())).collect::<Vec<_>>(),
                        "corners": points_json(corners(&case, f)),
                        "label": shelling_label(&case, f).to_string(),
                    })
                })
                .collect();
            Ok(Output::json(&json!({"case": case.to_string(), "endpoints": e.to_string(), "families": fams})))
        }
        Verb::Bins => {
            let case = opts.case()?;
            let shape = opts.shape()?;
            let bins = bin_sizes(&case, &shape)?;
            let total: u64 = bins.values().sum();
            let list: Vec<Value> = bins
                .iter()
                .filter(|(_, n)| **n > 0)
                .map(|(e, n)| json!({"endpoints": e.to_string(), "size": n}))
                .collect();
            Ok(Output::json(&json!({"case": case.to_string(), "tau": shape.to_string(), "bins": list, "total": total})))
        }
        Verb::Series { kind } => {
            let fmt = opts.format_or(FormatArg::Json);
            match kind {
                SeriesKind::Covariants => {
                    let cs = covariant_series(&opts.case()?, &opts.shape()?)?;
                    series_output(&cs.reduced, fmt, Some(cs.to_json()))
                }
                SeriesKind::Invariants => series_output(&invariant_series(&opts.case()?)?, fmt, None),
                SeriesKind::Sl => {
                    let (k, p, q) = gl_params(opts)?;
                    let sl = sl_invariant_series(k, p, q)?;
                    let terms = |ts: &[crate::series::SlTerm]| -> Vec<Value> {
                        ts.iter()
                            .map(|t| json!({"endpoints": t.endpoints.to_string(), "p_e": t.p_e.to_json(), "q_e": t.q_e.to_json()}))
                            .collect()
                    };
                    let extra = json!({
                        "case": format!("SL({k},{p},{q})"),
                        "invariants": sl.invariants.to_json(),
                        "unstarred": terms(&sl.unstarred),
                        "starred": terms(&sl.starred),
                        "reduced": sl.reduced.to_json(),
                    });
                    series_output(&sl.reduced, fmt, Some(extra))
                }
                SeriesKind::So => {
                    let k = opts.k.ok_or_else(|| Error::InvalidParameters("--k is required".into()))?;
                    let n = opts.n.ok_or_else(|| Error::InvalidParameters("--n is required".into()))?;
                    series_output(&so_invariant_series(k, n)?, fmt, None)
                }
                SeriesKind::Wallach => series_output(&wallach_series(&opts.wallach()?), fmt, None),
            }
        }
        Verb::Bernstein => {
            let case = opts.case()?;
            let shape = opts.shape()?;
            let b = bernstein_degree(&case, &shape)?;
            match opts.format_or(FormatArg::Ascii) {
                FormatArg::Json => Ok(Output::json(
                    &json!({"case": case.to_string(), "tau": shape.to_string(), "bernstein": b.to_string()}),
                )),
                _ => Ok(Output::text(b.to_string())),
            }
        }
        Verb::Stanley { action: StanleyAction::List } => {
            let case = opts.case()?;
            let spaces = stanley_decomposition(&case, &opts.shape()?)?;
            Ok(Output::json(&Value::Array(spaces.iter().map(|s| s.to_json()).collect())))
        }
        Verb::Locate { monomial } => {
            let case = opts.case()?;
            let m = Monomial::parse(&case, monomial)?;
            let j = match locate(&case, &m) {
                Ok(j) => j,
                Err(Error::NotStandard(msg)) => {
                    let split = witness_split(&case, &m).map(|s| serde_json::to_string(&s).unwrap_or_default());
                    return Err(Error::NotStandard(match split {
                        Ok(s) => format!("{msg}; divisible by split {s}"),
                        Err(_) => msg,
                    }));
                }
                Err(e) => return Err(e),
            };
            let cor = corners(&case, &j.family);
            Ok(Output::json(&json!({
                "case": case.to_string(),
                "endpoints": j.family.endpoints.to_string(),
                "paths": j.family.paths.iter().map(|p| points_json(p.iter().copied())).collect::<Vec<_>>(),
                "corners": points_json(cor.iter().copied()),
                "tableau": serde_json::to_value(&j.tableau).unwrap_or(Value::Null),
                "degree": m.degree(),
            })))
        }
        Verb::Weight { monomial } => {
            let case = opts.case()?;
            let m = Monomial::parse(&case, monomial)?;
            let w = weight(&case, &m);
            let shape = m.tableau.shape();
            let lambda = lambda_from_tau(&case, &shape).ok();
            match opts.format_or(FormatArg::Json) {
                FormatArg::Json => Ok(Output::json(&json!({
                    "case": case.to_string(),
                    "weight": w.to_json(),
                    "tau": shape.to_string(),
                    "lambda": lambda.map(|l| l.to_json()),
                }))),
                _ => Ok(Output::text(w.to_string())),
            }
        }
        Verb::Diagram { monomial, arcs } => {
            let fmt = diagram_format(opts.format_or(FormatArg::Ascii))?;
            match monomial {
                None => {
                    let poset = if opts.wallach.is_some() {
                        build_ade_poset(&opts.wallach()?)
                    } else {
                        build_poset(&opts.case()?)
                    };
                    Ok(Output::text(render(&Drawable::Poset(&poset), fmt)?))
                }
                Some(s) => {
                    let case = opts.case()?;
                    let m = Monomial::parse(&case, s)?;
                    if *arcs {
                        Ok(Output::text(render(&Drawable::Arcs(&arc_diagram(&case, &m)), fmt)?))
                    } else {
                        let j = locate(&case, &m)?;
                        Ok(Output::text(render(&Drawable::Jellyfish(&case, &j), fmt)?))
                    }
                }
            }
        }
        Verb::Oracle { action: OracleAction::Check { max_degree, locate_degree } } => {
            let case = opts.case()?;
            let report = check_equivalence(&case, &opts.shape()?, *max_degree, (*locate_degree).min(*max_degree))?;
            let mut out = Output::json(&report.to_json());
            out.mismatch = !report.ok();
            Ok(out)
        }
    }
}

fn gl_params(opts: &Opts) -> Result<(u32, u32, u32)> {
    let need = |v: Option<u32>, name: &str| v.ok_or_else(|| Error::InvalidParameters(format!("--{name} is required")));
    Ok((need(opts.k, "k")?, need(opts.p, "p")?, need(opts.q, "q")?))
}

fn diagram_format(f: FormatArg) -> Result<Format> {
    match f {
        FormatArg::Ascii => Ok(Format::Ascii),
        FormatArg::Svg => Ok(Format::Svg),
        FormatArg::Tikz => Ok(Format::Tikz),
        _ => Err(Error::InvalidParameters("diagrams are drawn as ascii, svg or tikz".into())),
    }
}

fn report_error(err: &mut dyn Write, kind: &str, message: &str) {
    let _ = writeln!(err, "error: {message}");
    let _ = writeln!(err, "{}", json!({"error": {"kind": kind, "message": message}}));
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            report_error(err, "usage", e.to_string().trim());
            return EXIT_INVALID;
        }
    };
    let result = match cli.opts.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.verb, &cli.opts)),
            Err(e) => Err(Error::InvalidParameters(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli.verb, &cli.opts),
    };
    match result {
        Ok(o) => {
            let mut text = o.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            if let Some(path) = &cli.opts.out {
                if let Err(e) = std::fs::write(path, &text) {
                    report_error(err, "io", &format!("cannot write {}: {e}", path.display()));
                    return EXIT_INVALID;
                }
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            if o.mismatch {
                report_error(err, "oracle_mismatch", "oracle counts differ from the series");
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            report_error(err, e.kind(), &e.to_string());
            EXIT_INVALID
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("jellyfish").chain(args.split_whitespace());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_examples() {
        let (c, o, _) = call("series covariants --group sp --k 2 --n 6 --tau 2,1 --format latex");
        assert_eq!((c, o.trim()), (0, r"\frac{70t^3 - 14t^5 - 14t^7 + 6t^9}{(1-t^2)^{14}}"));
        let (c, o, _) = call("series wallach --wallach E7 --level 2 --format latex");
        assert_eq!((c, o.trim()), (0, r"\frac{1+t+t^2}{(1-t)^{26}}"));
        let (c, o, _) = call("bernstein --group o --k 3 --n 7 --tau 1");
        assert_eq!((c, o.trim()), (0, "2016"));
    }

    #[test]
    fn errors_exit_two_with_json() {
        let (c, _, e) = call("series covariants --group sp --k 2 --n 6 --tau 1,2");
        assert_eq!(c, 2);
        let last: Value = serde_json::from_str(e.lines().last().unwrap()).unwrap();
        assert!(last["error"]["kind"].is_string());
        let (c, _, _) = call("bins --group gl --k 2 --p 3");
        assert_eq!(c, 2);
        let (c, _, _) = call("frobnicate");
        assert_eq!(c, 2);
    }

    #[test]
    fn negative_tau_and_locate() {
        let (c, o, _) = call("bins --group gl --k 3 --p 3 --q 4 --tau 1,0,-1");
        assert_eq!(c, 0);
        let v: Value = serde_json::from_str(&o).unwrap();
        assert_eq!(v["total"], 12);
        let (c, o, _) = call("locate --group sp --k 1 --n 4 --monomial f[1,2]*f[1,4]^3");
        assert_eq!(c, 0, "{o}");
        let (c, _, e) = call("locate --group sp --k 1 --n 4 --monomial f[1,4]*f[2,3]");
        assert_eq!(c, 2);
        assert!(e.contains("not_standard"));
    }

    #[test]
    fn oracle_check_reports() {
        let (c, o, _) = call("oracle check --group o --k 2 --n 4 --tau 1 --max-degree 7");
        assert_eq!(c, 0);
        let v: Value = serde_json::from_str(&o).unwrap();
        assert_eq!(v["per_degree"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn deterministic_output() {
        let a = call("stanley list --group gl --k 2 --p 3 --q 3 --tau 1,-1 --threads 2");
        let b = call("stanley list --group gl --k 2 --p 3 --q 3 --tau 1,-1");
        assert_eq!(a, b);
    }
}
