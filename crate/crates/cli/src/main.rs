//! `ordgroups` command-line front end. Every subcommand prints one JSON
//! document. Exit codes: 0 success, 2 input error, 3 domain error, 4 failed
//! verification.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ordgroups::classify::{classify_group_with, classify_ordered_with, enumerate_canonical, verify_witness};
use ordgroups::cohomology::coboundary_check;
use ordgroups::json::{
    classification_to_json, cochain_from_json, element_to_json, law_to_json, order_to_json, parse, parse_csv,
    parse_order_csv, spec_from_json, to_canonical_string, witness_from_json,
};
use ordgroups::suite::{run_suite, SuiteConfig};
use ordgroups::{
    check_conjugation_order_preserving, check_group_axioms, check_translation_invariance, Error, GroupLaw64,
    LexOrder, OrderedGroupSpec, SampleConfig, Tolerance64,
};

const VERIFICATION_FAILED: u8 = 4;

#[derive(Parser)]
#[command(name = "ordgroups", version, about = "Ordered solvable groups of dimension at most three")]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Half-width of the sampling box.
    #[arg(long = "box", global = true, default_value_t = 3.0)]
    half_width: f64,
    #[arg(long, global = true, default_value_t = 1e-9)]
    abs_tol: f64,
    #[arg(long, global = true, default_value_t = 1e-9)]
    rel_tol: f64,
    /// Read the main JSON input from a file instead of the command line.
    #[arg(long = "json", global = true, value_name = "FILE")]
    json_file: Option<PathBuf>,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Mul,
    Inv,
    Conj,
    Comm,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a group operation.
    Eval {
        #[arg(long)]
        law: Option<String>,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Sampled associativity, identity and inverse check.
    Axioms {
        #[arg(long)]
        law: Option<String>,
    },
    /// Bi-invariance of a lexicographic order, optionally with a conjugation check.
    OrderCheck {
        #[arg(long)]
        law: Option<String>,
        /// Significance order, most significant first, e.g. 2,1,0.
        #[arg(long)]
        order: Option<String>,
        /// Coordinates of a normal subgroup to check conjugation on.
        #[arg(long)]
        normal: Option<String>,
    },
    /// Cocycle residual of a cochain descriptor.
    CocycleCheck {
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Canonical class with a verified witness.
    Classify {
        #[arg(long)]
        law: Option<String>,
        #[arg(long)]
        order: Option<String>,
    },
    /// Verify a witness read from JSON.
    WitnessVerify {
        #[arg(long)]
        witness: Option<String>,
    },
    /// Canonical ordered classes of a dimension.
    Catalog {
        #[arg(long)]
        dim: usize,
    },
    /// Run the acceptance suite.
    Selftest,
}

struct Run {
    sample: SampleConfig,
    tol: Tolerance64,
    suite: SuiteConfig,
    json_file: Option<PathBuf>,
}

impl Run {
    fn new(a: &RunArgs) -> Result<Self, Error> {
        let sample = SampleConfig::new(a.seed, a.samples, a.half_width)?;
        let tol = Tolerance64::new(a.abs_tol, a.rel_tol)?;
        let suite = SuiteConfig {
            seed: a.seed,
            samples: a.samples,
            half_width: a.half_width,
            abs_tol: a.abs_tol,
            rel_tol: a.rel_tol,
        };
        Ok(Self { sample, tol, suite, json_file: a.json_file.clone() })
    }

    /// The inline argument, or else the `--json` file.
    fn input(&self, inline: Option<&str>, what: &str) -> Result<Value, Error> {
        match (inline, &self.json_file) {
            (Some(text), _) => parse(text),
            (None, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
                parse(&text)
            }
            (None, None) => Err(Error::Input(format!("missing {what}: pass --{what} or --json <file>"))),
        }
    }

    fn spec(&self, inline: Option<&str>) -> Result<(GroupLaw64, Option<LexOrder>), Error> {
        spec_from_json(&self.input(inline, "law")?)
    }
}

struct Report {
    body: Value,
    pass: bool,
}

impl Report {
    fn ok(body: Value) -> Self {
        Self { body, pass: true }
    }
}

fn eval(run: &Run, law: Option<&str>, op: Op, a: &str, b: Option<&str>) -> Result<Report, Error> {
    let (law, _) = run.spec(law)?;
    let a = parse_csv(a)?;
    let second = || -> Result<_, Error> {
        parse_csv(b.ok_or_else(|| Error::Input("this operation needs --b".into()))?)
    };
    let result = match op {
        Op::Mul => law.multiply(&a, &second()?)?,
        Op::Inv => law.invert(&a)?,
        Op::Conj => law.conjugate(&a, &second()?)?,
        Op::Comm => law.commutator(&a, &second()?)?,
    };
    if !result.is_finite() {
        return Err(Error::Domain("result overflows".into()));
    }
    Ok(Report::ok(json!({ "result": element_to_json(&result) })))
}

fn order_check(run: &Run, law: Option<&str>, order: Option<&str>, normal: Option<&str>) -> Result<Report, Error> {
    let (law, from_json) = run.spec(law)?;
    let order = match order {
        Some(text) => parse_order_csv(text)?,
        None => from_json.ok_or_else(|| Error::Input("missing order: pass --order or an \"order\" field".into()))?,
    };
    let spec = OrderedGroupSpec::new(law, order)?;
    let translation = check_translation_invariance(&spec, &run.sample);
    let mut pass = translation.pass;
    let mut body = json!({ "order": order_to_json(&spec.order), "translation": translation });
    if let Some(text) = normal {
        let coords: Vec<usize> = parse_indices(text)?;
        let conj = check_conjugation_order_preserving(&spec, &coords, &run.sample, &run.tol)?;
        pass &= conj.pass;
        body["conjugation"] = serde_json::to_value(&conj)?;
    }
    body["pass"] = json!(pass);
    Ok(Report { body, pass })
}

fn parse_indices(text: &str) -> Result<Vec<usize>, Error> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Input(format!("cannot parse {t:?} as an index"))))
        .collect()
}

fn classify(run: &Run, law: Option<&str>, order: Option<&str>) -> Result<Report, Error> {
    let (law, from_json) = run.spec(law)?;
    let order = order.map(parse_order_csv).transpose()?.or(from_json);
    let c = match &order {
        Some(o) => classify_ordered_with(&law, o, &run.sample, &run.tol)?,
        None => classify_group_with(&law, &run.sample, &run.tol)?,
    };
    Ok(Report { body: classification_to_json(&c)?, pass: c.verified() })
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    let run = Run::new(&cli.run)?;
    match &cli.command {
        Command::Eval { law, op, a, b } => eval(&run, law.as_deref(), *op, a, b.as_deref()),
        Command::Axioms { law } => {
            let (law, _) = run.spec(law.as_deref())?;
            let r = check_group_axioms(&law, &run.sample, &run.tol);
            Ok(Report { pass: r.pass, body: serde_json::to_value(&r)? })
        }
        Command::OrderCheck { law, order, normal } => order_check(&run, law.as_deref(), order.as_deref(), normal.as_deref()),
        Command::CocycleCheck { cocycle } => {
            let f = cochain_from_json::<f64>(&run.input(cocycle.as_deref(), "cocycle")?)?;
            if f.degree() != 2 {
                return Err(Error::Input("expected a 2-cochain".into()));
            }
            let r = coboundary_check(&f, &run.sample, &run.tol);
            let pass = r.passes();
            Ok(Report { body: json!({ "residual": r, "pass": pass }), pass })
        }
        Command::Classify { law, order } => classify(&run, law.as_deref(), order.as_deref()),
        Command::WitnessVerify { witness } => {
            let w = witness_from_json::<f64>(&run.input(witness.as_deref(), "witness")?)?;
            let r = verify_witness(&w, &run.sample, &run.tol);
            Ok(Report { pass: r.pass, body: serde_json::to_value(&r)? })
        }
        Command::Catalog { dim } => {
            let classes = enumerate_canonical::<f64>(*dim)?
                .into_iter()
                .map(|c| {
                    let mut v = json!({
                        "label": c.label.name(),
                        "params": c.label.params(),
                        "law": law_to_json(&c.law)?,
                        "order": order_to_json(&c.order),
                    });
                    if let Some(alias) = c.label.alias() {
                        v["alias"] = json!(alias);
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Report::ok(json!({ "dim": dim, "classes": classes })))
        }
        Command::Selftest => {
            let r = run_suite(&run.suite);
            for c in &r.criteria {
                eprintln!("{}", c.summary());
            }
            Ok(Report { pass: r.pass, body: serde_json::to_value(&r)? })
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).map_err(|e| Error::Input(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = execute(&cli).and_then(|r| {
        emit(&to_canonical_string(&r.body), cli.run.out.as_ref())?;
        Ok(r.pass)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(VERIFICATION_FAILED),
        Err(e) => {
            eprintln!("{}", to_canonical_string(&json!({ "error": e.to_string(), "kind": kind(&e) })));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Json(_) => "json",
        _ => "input",
    }
}
