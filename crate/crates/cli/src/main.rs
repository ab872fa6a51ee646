use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hankel_core::precise::MAX_DIGITS;
use hankel_core::rational::{parse, to_decimal_string, to_fraction_string};
use hankel_core::{
    as_printed_jacobi_det, bareiss_det, det_from_norms, explicit_det, explicit_inverse,
    gauss_inverse, gram_schmidt, kernel_eval, kernel_from_inverse, kernel_inverse, moment_matrix,
    unnormalized_scale, verify, Error, ExactMatrix, Family, FamilySpec, PrintedComparison,
    Rational, VerifyReport,
};

/// Exact moment matrices of the classical orthogonal-polynomial weights.
#[derive(Debug, Parser)]
#[command(name = "hankel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the normalized moment matrix.
    Gen(MatrixArgs),
    /// Print its determinant.
    Det(MatrixArgs),
    /// Print its inverse.
    Inv(MatrixArgs),
    /// Evaluate the kernel polynomial k_n(x, y).
    Kernel {
        #[command(flatten)]
        args: MatrixArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Cross-check closed forms, kernel engine and elimination for sizes 0..=n.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Output::Pretty)]
        output: Output,
    },
    /// Evaluate the printed Barnes G formula for the Jacobi determinant.
    Errata {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 30)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = Output::Pretty)]
        output: Output,
    },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// hermite, laguerre, gegenbauer, jacobi or jacobi-shifted
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Method::Explicit)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Output::Pretty)]
    output: Output,
    /// Print decimals instead of exact fractions.
    #[arg(long)]
    float: bool,
    /// Significant digits in float mode.
    #[arg(long, default_value_t = 17)]
    digits: usize,
    /// Scale back to the weight's raw integrals (float mode only).
    #[arg(long, requires = "float")]
    unnormalized: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Explicit,
    Kernel,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Pretty,
}

/// Failure classes, mapped to exit codes 2 and 1.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidFamilySpec(msg) => Failure::Usage(msg),
            Error::ParseRational(s) => Failure::Usage(format!("malformed rational {s:?}")),
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, Failure> {
        let family: Family = self.family.parse()?;
        let value = |name: &str, v: &Option<String>| -> Result<Option<Rational>, Failure> {
            v.as_deref()
                .map(|s| parse(s).map_err(|_| Failure::Usage(format!("--{name}: malformed rational {s:?}"))))
                .transpose()
        };
        let spec = FamilySpec::from_parts(
            family,
            value("alpha", &self.alpha)?,
            value("beta", &self.beta)?,
            value("lambda", &self.lambda)?,
        )?;
        Ok(spec)
    }
}

/// How exact values become text: `p/q`, or decimals, possibly rescaled.
struct Render {
    float: Option<usize>,
    scale: Option<Rational>,
}

impl Render {
    fn new(args: &MatrixArgs, spec: &FamilySpec) -> Result<Self, Failure> {
        if !args.float {
            return Ok(Render { float: None, scale: None });
        }
        if args.digits == 0 || args.digits > MAX_DIGITS {
            return Err(Failure::Usage(format!("digits must be in 1..={MAX_DIGITS}")));
        }
        let scale = if args.unnormalized {
            Some(unnormalized_scale(spec, args.digits)?.value)
        } else {
            None
        };
        Ok(Render { float: Some(args.digits), scale })
    }

    /// Multiplies by `scale^power` before formatting.
    fn text(&self, v: &Rational, power: i32) -> String {
        match self.float {
            None => to_fraction_string(v),
            Some(digits) => {
                let mut v = v.clone();
                if let Some(s) = &self.scale {
                    v *= s.pow(power);
                }
                to_decimal_string(&v, digits)
            }
        }
    }

    fn json(&self, v: &Rational, power: i32) -> Value {
        let text = self.text(v, power);
        if self.float.is_some() {
            serde_json::from_str(&text).expect("decimal strings are JSON numbers")
        } else {
            Value::String(text)
        }
    }
}

fn params_json(spec: &FamilySpec) -> Value {
    let mut map = Map::new();
    for (name, v) in spec.named_params() {
        map.insert(name.to_string(), Value::String(to_fraction_string(v)));
    }
    Value::Object(map)
}

fn header(spec: &FamilySpec, n: usize) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("family".into(), json!(spec.family().name()));
    map.insert("n".into(), json!(n));
    map.insert("params".into(), params_json(spec));
    map
}

fn aligned(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&cells.join("  "));
        out.push('\n');
    }
    out
}

enum Payload {
    Matrix(ExactMatrix, i32),
    Scalar(Rational, i32),
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Explicit => "explicit",
        Method::Kernel => "kernel",
        Method::Oracle => "oracle",
    }
}

fn inverse(spec: &FamilySpec, n: usize, method: Method) -> Result<ExactMatrix, Failure> {
    Ok(match method {
        Method::Explicit => explicit_inverse(spec, n).value,
        Method::Kernel => kernel_inverse(&gram_schmidt(spec, n)?),
        Method::Oracle => gauss_inverse(&moment_matrix(spec, n))?,
    })
}

fn run_matrix(command: &str, args: &MatrixArgs, xy: Option<(&str, &str)>) -> Result<String, Failure> {
    let spec = args.family.spec()?;
    let n = args.family.n;
    let render = Render::new(args, &spec)?;
    let payload = match command {
        "gen" => Payload::Matrix(moment_matrix(&spec, n), 1),
        "inv" => Payload::Matrix(inverse(&spec, n, args.method)?, -1),
        "det" => Payload::Scalar(
            match args.method {
                Method::Explicit => explicit_det(&spec, n).value,
                Method::Kernel => det_from_norms(&gram_schmidt(&spec, n)?),
                Method::Oracle => bareiss_det(&moment_matrix(&spec, n)),
            },
            n as i32 + 1,
        ),
        _ => {
            let (x, y) = xy.expect("kernel carries points");
            let point = |name: &str, s: &str| {
                parse(s).map_err(|_| Failure::Usage(format!("--{name}: malformed rational {s:?}")))
            };
            let (x, y) = (point("x", x)?, point("y", y)?);
            let value = match args.method {
                Method::Kernel => kernel_eval(&gram_schmidt(&spec, n)?, &x, &y),
                m => kernel_from_inverse(&spec, &inverse(&spec, n, m)?, &x, &y),
            };
            Payload::Scalar(value, -1)
        }
    };

    Ok(match args.output {
        Output::Json => {
            let mut map = header(&spec, n);
            map.insert("method".into(), json!(method_name(args.method)));
            map.insert("normalized".into(), json!(!args.unnormalized));
            if let Some((x, y)) = xy {
                map.insert("x".into(), json!(x));
                map.insert("y".into(), json!(y));
            }
            match &payload {
                Payload::Matrix(m, p) => {
                    let rows: Vec<Value> =
                        m.rows().map(|r| Value::Array(r.iter().map(|v| render.json(v, *p)).collect())).collect();
                    map.insert("result".into(), Value::Array(rows));
                }
                Payload::Scalar(v, p) => {
                    let key = if command == "det" { "det" } else { "result" };
                    map.insert(key.into(), render.json(v, *p));
                }
            }
            format!("{}\n", Value::Object(map))
        }
        Output::Csv | Output::Pretty => match &payload {
            Payload::Matrix(m, p) => {
                let rows: Vec<Vec<String>> =
                    m.rows().map(|r| r.iter().map(|v| render.text(v, *p)).collect()).collect();
                if args.output == Output::Csv {
                    rows.iter().map(|r| format!("{}\n", r.join(","))).collect()
                } else {
                    aligned(&rows)
                }
            }
            Payload::Scalar(v, p) => format!("{}\n", render.text(v, *p)),
        },
    })
}

fn report_json(r: &VerifyReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("name".into(), json!(c.name));
            m.insert("passed".into(), json!(c.passed));
            if let Some(w) = &c.witness {
                m.insert(
                    "witness".into(),
                    json!({
                        "entry": w.entry.map(|(i, j)| vec![i, j]),
                        "expected": to_fraction_string(&w.expected),
                        "actual": to_fraction_string(&w.actual),
                    }),
                );
            }
            Value::Object(m)
        })
        .collect();
    json!({ "n": r.n, "passed": r.passed(), "checks": checks })
}

fn run_verify(family: &FamilyArgs, output: Output) -> Result<(String, bool), Failure> {
    let spec = family.spec()?;
    let reports: Vec<VerifyReport> = (0..=family.n).map(|k| verify(&spec, k)).collect();
    let passed = reports.iter().all(VerifyReport::passed);
    let text = match output {
        Output::Pretty => {
            let mut s: String = reports.iter().map(|r| r.to_string()).collect();
            s.push_str(if passed { "all checks passed\n" } else { "verification FAILED\n" });
            s
        }
        Output::Json => {
            let mut map = header(&spec, family.n);
            map.insert("passed".into(), json!(passed));
            map.insert("reports".into(), Value::Array(reports.iter().map(report_json).collect()));
            format!("{}\n", Value::Object(map))
        }
        Output::Csv => {
            let mut s = String::from("n,check,passed,entry,expected,actual\n");
            for r in &reports {
                for c in &r.checks {
                    let (entry, expected, actual) = match &c.witness {
                        Some(w) => (
                            w.entry.map(|(i, j)| format!("{i} {j}")).unwrap_or_default(),
                            to_fraction_string(&w.expected),
                            to_fraction_string(&w.actual),
                        ),
                        None => Default::default(),
                    };
                    s.push_str(&format!("{},{},{},{entry},{expected},{actual}\n", r.n, c.name, c.passed));
                }
            }
            s
        }
    };
    Ok((text, passed))
}

fn comparison_json(c: &PrintedComparison) -> Value {
    let mut map = header(&c.spec, c.n);
    map.insert("digits".into(), json!(c.digits));
    let num = |a: &Option<hankel_core::Approx>| {
        a.as_ref().map_or(Value::Null, |a| serde_json::from_str(&a.to_string()).expect("decimal"))
    };
    map.insert("printed".into(), num(&c.printed));
    map.insert("exact".into(), json!(to_fraction_string(&c.exact)));
    map.insert("relative_difference".into(), num(&c.relative_difference));
    map.insert("tolerance".into(), json!(to_decimal_string(&c.tolerance, 1)));
    map.insert("verdict".into(), json!(c.verdict.to_string()));
    Value::Object(map)
}

fn run_errata(family: &FamilyArgs, digits: usize, output: Output) -> Result<String, Failure> {
    let spec = family.spec()?;
    if spec.family() != Family::Jacobi {
        return Err(Failure::Usage("errata requires --family jacobi".into()));
    }
    if digits == 0 || digits > MAX_DIGITS {
        return Err(Failure::Usage(format!("digits must be in 1..={MAX_DIGITS}")));
    }
    let c = as_printed_jacobi_det(&spec, family.n, digits)?;
    Ok(match output {
        Output::Pretty => c.to_string(),
        Output::Json => format!("{}\n", comparison_json(&c)),
        Output::Csv => {
            let Value::Object(map) = comparison_json(&c) else { unreachable!() };
            map.iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k},{s}\n"),
                    other => format!("{k},{other}\n"),
                })
                .collect()
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help / --version
        Err(e) => e.exit(),
    };
    let result = match &cli.command {
        Command::Gen(a) => run_matrix("gen", a, None).map(|s| (s, true)),
        Command::Det(a) => run_matrix("det", a, None).map(|s| (s, true)),
        Command::Inv(a) => run_matrix("inv", a, None).map(|s| (s, true)),
        Command::Kernel { args, x, y } => run_matrix("kernel", args, Some((x, y))).map(|s| (s, true)),
        Command::Verify { family, output } => run_verify(family, *output),
        Command::Errata { family, digits, output } => run_errata(family, *digits, *output).map(|s| (s, true)),
    };
    match result {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
