//! Command-line surface. Every command prints one [`ReportDocument`].

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{dedekind_sum, dedekind_sum_cf, Slope};
use crate::classical::{casson_gordon, casson_walker};
use crate::cone::{cone_homology, d_surgery_signed, hf_red, ConeSpec, Determination};
use crate::cosmetic::{check_knot, check_knots, enumerate_candidate_pairs, Verdict};
use crate::error::{Error, Result};
use crate::io::report::{cosmetic_report, graded_module, rational, rationals};
use crate::io::{find_knot, input_digest, parse_knot_str, ReportDocument};
use crate::knot::{KnotData, PrecisionLadder};
use crate::lens::{d_lens_all, lambda_lens, multiset, tau_lens, LensSpace};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "surgery-gate", version, about = "Correction terms and cosmetic-surgery obstructions for knots in S³")]
struct Cli {
    /// Exit with status 2 when every result is indeterminate
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Correction terms, Casson–Walker and Casson–Gordon invariants of L(p,q)
    Lens(PQ),
    /// Dedekind sum s(q,p)
    Dedekind {
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, default_value_t = Route::Both)]
        route: Route,
    },
    /// Correction terms of S³_{p/q}(K)
    SurgeryD(KnotSlope),
    /// HF_red of S³_{p/q}(K) per Spin^c structure
    Hfred(KnotSlope),
    /// Casson–Walker invariant of S³_{p/q}(K)
    CassonWalker(KnotSlope),
    /// Total Casson–Gordon invariant of S³_{p/q}(K)
    CassonGordon(KnotSlope),
    /// Purely cosmetic surgery obstruction gate
    CosmeticCheck(Gate),
    /// Slope pairs ±p/q with q² ≡ -1 (mod p)
    EnumerateSlopes(Bounds),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Direct,
    Cf,
    Both,
}

#[derive(Debug, Args)]
struct PQ {
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
}

#[derive(Debug, Args)]
struct KnotSlope {
    #[arg(long)]
    knots: PathBuf,
    #[arg(long)]
    name: String,
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
    /// Restrict to one Spin^c label
    #[arg(long, allow_negative_numbers = true)]
    i: Option<i64>,
}

#[derive(Debug, Args)]
struct Gate {
    #[arg(long)]
    knots: PathBuf,
    /// Check one knot; all non-trivial knots otherwise
    #[arg(long)]
    name: Option<String>,
    #[command(flatten)]
    bounds: Bounds,
}

#[derive(Debug, Args)]
struct Bounds {
    #[arg(long, allow_negative_numbers = true)]
    pmax: i64,
    #[arg(long, allow_negative_numbers = true)]
    qmax: i64,
}

/// Results plus whether each one was decided.
struct Outcome {
    results: Vec<Value>,
    determinate: Vec<bool>,
}

impl Outcome {
    fn decided(results: Vec<Value>) -> Self {
        let determinate = vec![true; results.len()];
        Outcome { results, determinate }
    }

    fn push(&mut self, v: Value, determinate: bool) {
        self.results.push(v);
        self.determinate.push(determinate);
    }

    fn indeterminate_only(&self) -> bool {
        !self.determinate.is_empty() && self.determinate.iter().all(|d| !d)
    }
}

/// Output of [`run_command`]: exit status and the two streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation. `argv` excludes the program name.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> CommandOutput {
    let args: Vec<String> = argv.iter().map(|s| s.as_ref().to_string()).collect();
    let cli = match Cli::try_parse_from(std::iter::once("surgery-gate".to_string()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput { code: EXIT_INPUT, stdout: String::new(), stderr: text }
            } else {
                CommandOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command, &args) {
        Ok((name, digest, outcome)) => {
            let code = if cli.strict && outcome.indeterminate_only() { EXIT_INDETERMINATE } else { EXIT_OK };
            let doc = ReportDocument::new(name, digest, Value::Array(outcome.results));
            CommandOutput { code, stdout: doc.to_json(), stderr: String::new() }
        }
        Err(e) => CommandOutput { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn load(path: &Path) -> Result<(Vec<u8>, Vec<KnotData>)> {
    let bytes = std::fs::read(path)?;
    let text = std::str::from_utf8(&bytes).map_err(|e| Error::Parse {
        line: 1,
        column: 1,
        message: format!("not UTF-8: {e}"),
    })?;
    let knots = parse_knot_str(text)?;
    Ok((bytes, knots))
}

fn spin_c_range(h1: i64, only: Option<i64>) -> Result<Vec<i64>> {
    match only {
        Some(i) if !(0..h1).contains(&i) => Err(Error::OutOfRange(format!("Spin^c index {i} outside [0, {}]", h1 - 1))),
        Some(i) => Ok(vec![i]),
        None => Ok((0..h1).collect()),
    }
}

/// Errors that reflect a missing hypothesis rather than bad input.
fn soft(e: &Error) -> bool {
    matches!(e, Error::HypothesisFailed(_) | Error::Unsupported(_) | Error::MissingSeifert(_))
}

fn execute(cmd: &Command, args: &[String]) -> Result<(&'static str, String, Outcome)> {
    let plain = || input_digest(args, &[]);
    match cmd {
        Command::Lens(PQ { p, q }) => {
            let lens = LensSpace::new(*p, *q)?;
            let d = d_lens_all(&lens);
            let sum: crate::arith::Rational = d.iter().cloned().sum();
            let r = json!({
                "p": lens.p(),
                "q": lens.q(),
                "d": rationals(&d),
                "d_multiset": rationals(&multiset(&d)),
                "d_sum": rational(&sum),
                "lambda": rational(&lambda_lens(&lens)),
                "tau": rational(&tau_lens(&lens)),
            });
            Ok(("lens", plain(), Outcome::decided(vec![r])))
        }
        Command::Dedekind { q, p, route } => {
            let mut r = json!({"p": p, "q": q});
            let direct = matches!(route, Route::Direct | Route::Both).then(|| dedekind_sum(*q, *p)).transpose()?;
            let cf = matches!(route, Route::Cf | Route::Both).then(|| dedekind_sum_cf(*q, *p)).transpose()?;
            if let Some(v) = &direct {
                r["direct"] = rational(v);
            }
            if let Some(v) = &cf {
                r["cf"] = rational(v);
            }
            if let (Some(a), Some(b)) = (&direct, &cf) {
                r["agreement"] = json!(a == b);
            }
            Ok(("dedekind", plain(), Outcome::decided(vec![r])))
        }
        Command::SurgeryD(ks) => {
            let (bytes, knots) = load(&ks.knots)?;
            let knot = find_knot(&knots, &ks.name)?;
            let slope = Slope::new(ks.p, ks.q)?;
            let (p, q) = slope.lens_form();
            let lens = LensSpace::new(p, q)?;
            let mut out = Outcome::decided(Vec::new());
            for i in spin_c_range(p, ks.i)? {
                let base = json!({"knot": knot.name, "slope": slope.to_string(), "i": i,
                    "d_lens": rational(&crate::lens::d_lens(&lens, i)?)});
                match d_surgery_signed(knot, slope, i)? {
                    Determination::Known(d) => out.push(merge(base, json!({"d": rational(&d)})), true),
                    Determination::Indeterminate(why) => {
                        out.push(merge(base, json!({"d": null, "indeterminate": why})), false)
                    }
                }
            }
            Ok(("surgery-d", input_digest(args, &[&bytes]), out))
        }
        Command::Hfred(ks) => {
            let (bytes, knots) = load(&ks.knots)?;
            let knot = find_knot(&knots, &ks.name)?;
            let slope = Slope::new(ks.p, ks.q)?;
            let (p, _) = slope.lens_form();
            let mut out = Outcome::decided(Vec::new());
            for i in spin_c_range(p, ks.i)? {
                let mut r = json!({"knot": knot.name, "slope": slope.to_string(), "i": i});
                let mut decided = false;
                match cone_homology(&ConeSpec::new(knot, slope, i)?) {
                    Ok(h) => {
                        let d = h.tower_bottom.clone().expect("cone homology has a tower");
                        r["cone"] = graded_module(&h);
                        r["euler_characteristic"] = json!(h.euler_characteristic(&d));
                        decided = true;
                    }
                    Err(e) if soft(&e) => r["cone"] = json!({"indeterminate": e.to_string()}),
                    Err(e) => return Err(e),
                }
                match hf_red(knot, slope, i) {
                    Ok(h) => r["formula"] = graded_module(&h),
                    Err(e) if soft(&e) => r["formula"] = json!({"indeterminate": e.to_string()}),
                    Err(e) => return Err(e),
                }
                out.push(r, decided);
            }
            Ok(("hfred", input_digest(args, &[&bytes]), out))
        }
        Command::CassonWalker(ks) => {
            let (bytes, knots) = load(&ks.knots)?;
            let knot = find_knot(&knots, &ks.name)?;
            let slope = Slope::new(ks.p, ks.q)?;
            let lambda = casson_walker(knot, slope)?;
            let r = json!({"knot": knot.name, "slope": slope.to_string(), "lambda": rational(&lambda)});
            Ok(("casson-walker", input_digest(args, &[&bytes]), Outcome::decided(vec![r])))
        }
        Command::CassonGordon(ks) => {
            let (bytes, knots) = load(&ks.knots)?;
            let knot = find_knot(&knots, &ks.name)?;
            let slope = Slope::new(ks.p, ks.q)?;
            let ladder = PrecisionLadder::from_env();
            let mut r = json!({"knot": knot.name, "slope": slope.to_string(),
                "diagnostics": {"signature_precision": {"start_bits": ladder.start, "max_bits": ladder.max}}});
            let decided = match casson_gordon(knot, slope) {
                Ok(tau) => {
                    r["tau"] = rational(&tau);
                    true
                }
                Err(e) if soft(&e) => {
                    r["tau"] = Value::Null;
                    r["indeterminate"] = json!(e.to_string());
                    false
                }
                Err(e) => return Err(e),
            };
            let mut out = Outcome::decided(Vec::new());
            out.push(r, decided);
            Ok(("casson-gordon", input_digest(args, &[&bytes]), out))
        }
        Command::CosmeticCheck(g) => {
            let (bytes, knots) = load(&g.knots)?;
            let mut out = Outcome::decided(Vec::new());
            match &g.name {
                Some(name) => {
                    let rep = check_knot(find_knot(&knots, name)?, g.bounds.pmax, g.bounds.qmax)?;
                    let decided = !matches!(rep.verdict, Verdict::Indeterminate { .. });
                    out.push(cosmetic_report(&rep), decided);
                }
                None => {
                    for (k, rep) in knots.iter().zip(check_knots(&knots, g.bounds.pmax, g.bounds.qmax)) {
                        match rep {
                            Ok(rep) => {
                                let decided = !matches!(rep.verdict, Verdict::Indeterminate { .. });
                                out.push(cosmetic_report(&rep), decided);
                            }
                            Err(Error::TrivialKnot(_)) => {
                                out.push(json!({"knot": k.name, "excluded": "trivial knot"}), true)
                            }
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
            Ok(("cosmetic-check", input_digest(args, &[&bytes]), out))
        }
        Command::EnumerateSlopes(b) => {
            if b.pmax < 1 || b.qmax < 1 {
                return Err(Error::OutOfRange(format!("bounds must be >= 1, got {}, {}", b.pmax, b.qmax)));
            }
            let pairs = enumerate_candidate_pairs(b.pmax, b.qmax);
            let r: Vec<Value> = pairs
                .iter()
                .map(|s| {
                    let lens = LensSpace::new(s.p, s.q).expect("coprime");
                    json!({"p": s.p, "q": s.q, "pair": s.to_string(), "lambda_lens": rational(&lambda_lens(&lens))})
                })
                .collect();
            Ok(("enumerate-slopes", plain(), Outcome::decided(r)))
        }
    }
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(x), Value::Object(y)) = (&mut a, b) {
        x.extend(y);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lens_example() {
        let out = run_command(&["lens", "--p", "3", "--q", "1"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let r = &v["results"][0];
        assert_eq!(r["d_multiset"], json!(["-1/6", "-1/6", "1/2"]));
        assert_eq!(r["lambda"], json!("-1/36"));
        assert_eq!(r["tau"], json!("-2/3"));
        assert_eq!(v["tool"], json!("surgery-gate"));
    }

    #[test]
    fn dedekind_example() {
        let out = run_command(&["dedekind", "--q", "2", "--p", "5", "--route", "both"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let r = &v["results"][0];
        assert_eq!((&r["direct"], &r["cf"], &r["agreement"]), (&json!("0/1"), &json!("0/1"), &json!(true)));
    }

    #[test]
    fn unknown_flag_is_input_error() {
        let out = run_command(&["lens", "--p", "3", "--q", "1", "--bogus"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("Usage"), "{}", out.stderr);
    }

    #[test]
    fn bad_values_are_input_errors() {
        assert_eq!(run_command(&["lens", "--p", "4", "--q", "2"]).code, EXIT_INPUT);
        assert_eq!(run_command(&["dedekind", "--q", "1", "--p", "-3"]).code, EXIT_INPUT);
        assert_eq!(run_command(&["enumerate-slopes", "--pmax", "0", "--qmax", "3"]).code, EXIT_INPUT);
    }

    #[test]
    fn negative_numbers_parse() {
        let out = run_command(&["lens", "--p", "5", "--q", "-2"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = run_command(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("cosmetic-check"));
    }
}
