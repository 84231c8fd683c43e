use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use qdirac::aq::AqElement;
use qdirac::dirac::{dirac, factorization_check, intertwine_check, Which};
use qdirac::parse::{parse_expression, Expr};
use qdirac::suites::{run_suite, Suite};
use qdirac::transform::{right_dual_closed, verify_dual, DualGen};
use qdirac::uq::{graded_dimension, serre_reduce, star_act, StarGenerator};
use qdirac::verma::{singular_report, Convention};

#[derive(Parser)]
#[command(
    name = "qdirac",
    version,
    about = "Exact q-calculus, Dirac operators and their U_q oracles"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its normal form.
    Normalize { expr: String },
    /// Multiply two expressions of the same kind.
    Mul { left: String, right: String },
    /// Reduce an F-word expression modulo the Serre ideal.
    SerreReduce { expr: String },
    /// Graded dimensions of the Serre quotient.
    Dims {
        #[arg(long, default_value_t = 6)]
        max_degree: u8,
    },
    /// Star action of a Levi generator on a w-algebra element.
    Star {
        /// One of Fm Fn Em En Km Kn Km^-1 Kn^-1.
        #[arg(long)]
        k: String,
        /// A generator index 1..4 or any w-algebra expression.
        #[arg(long)]
        w: String,
    },
    /// Closed form of the dual of a generator, optionally checked.
    Dual {
        /// 1, 2, 3, 4 or box.
        #[arg(long)]
        generator: DualGen,
        #[arg(long)]
        check_degree: Option<u32>,
    },
    /// The Dirac operator matrices.
    Dirac {
        #[arg(long, default_value = "plus")]
        which: Which,
        /// Print the matrix entries.
        #[arg(long)]
        show: bool,
        /// Also check the factorization and the intertwiner to this degree.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Singular-vector test for the weight (1, 0, x).
    SingularVector {
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
        /// Inclusive range `a..b`.
        #[arg(long, default_value = "0..6", allow_hyphen_values = true)]
        scan: String,
        #[arg(long, default_value = "twisted")]
        convention: Convention,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        degree: Option<u32>,
    },
}

struct Failure(u8, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(2, msg.to_string())
}

fn parse(text: &str) -> Result<Expr, Failure> {
    parse_expression(text).map_err(usage)
}

fn parse_aq(text: &str) -> Result<AqElement, Failure> {
    if let Ok(i) = text.parse::<u8>() {
        if (1..=4).contains(&i) {
            return AqElement::generator(i).map_err(usage);
        }
    }
    match parse(text)? {
        Expr::Aq(a) => Ok(a),
        Expr::Scalar(c) => c
            .to_laurent()
            .map(AqElement::scalar)
            .ok_or_else(|| usage("scalar is not a Laurent polynomial")),
        other => Err(usage(format!(
            "expected a w-algebra element, got {}",
            other.kind()
        ))),
    }
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<i64>, Failure> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| usage(format!("bad range `{s}`, expected a..b")))?;
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad range start `{a}`")))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad range end `{b}`")))?;
    if a > b {
        return Err(usage("empty range"));
    }
    Ok(a..=b)
}

/// Output plus whether every check passed.
struct Outcome {
    text: String,
    json: Value,
    passed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            passed: true,
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, Failure> {
    Ok(match cmd {
        Command::Normalize { expr } => {
            let e = parse(&expr)?;
            Outcome::ok(
                e.to_string(),
                json!({"input": expr, "kind": e.kind(), "value": e.to_string()}),
            )
        }
        Command::Mul { left, right } => {
            let (a, b) = (parse(&left)?, parse(&right)?);
            let p = a.mul(&b).map_err(usage)?;
            Outcome::ok(
                p.to_string(),
                json!({"left": left, "right": right, "kind": p.kind(), "value": p.to_string()}),
            )
        }
        Command::SerreReduce { expr } => {
            let free = match parse(&expr)? {
                Expr::Uq(u) => u.to_free(),
                Expr::Aq(a) => qdirac::uq::w_embed(&a).to_free(),
                _ => None,
            }
            .ok_or_else(|| usage("expected a combination of F-words"))?;
            let r = serre_reduce(&free);
            let text = if r.is_zero() {
                "0 (in the Serre ideal)".to_string()
            } else {
                r.to_string()
            };
            Outcome::ok(
                text,
                json!({"input": expr, "reduced": r.to_string(), "in_ideal": r.is_zero()}),
            )
        }
        Command::Dims { max_degree } => {
            let dims: Vec<usize> = (0..=max_degree).map(graded_dimension).collect();
            let text = dims
                .iter()
                .enumerate()
                .map(|(d, n)| format!("{d}: {n}"))
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::ok(text, json!({"max_degree": max_degree, "dimensions": dims}))
        }
        Command::Star { k, w } => {
            let g = StarGenerator::new(k.parse().map_err(usage)?).map_err(usage)?;
            let a = parse_aq(&w)?;
            let r = star_act(g, &a).map_err(|e| Failure(1, e.to_string()))?;
            let text = format!(
                "{g} * ({a}) = {}{}",
                r.value,
                if r.exact { "" } else { "  [Verma quotient]" }
            );
            Outcome::ok(
                text,
                json!({"k": g.to_string(), "w": a.to_string(), "result": r}),
            )
        }
        Command::Dual {
            generator,
            check_degree,
        } => {
            let op = right_dual_closed(generator);
            let mut text = format!("dual({}) = {op}", generator.element());
            let mut j = json!({"generator": generator, "element": generator.element().to_string(), "closed_form": op.to_string()});
            let mut passed = true;
            if let Some(d) = check_degree {
                let c = verify_dual(generator, d);
                passed = c.passed();
                text.push_str(&format!(
                    "\noracle (degree {d}, {} indicators): {}",
                    c.checked,
                    if passed { "PASS" } else { "FAIL" }
                ));
                j["check"] = serde_json::to_value(&c).expect("serializable");
            }
            Outcome {
                text,
                json: j,
                passed,
            }
        }
        Command::Dirac {
            which,
            show,
            degree,
        } => {
            let m = dirac(which);
            let mut text = format!("D{which}");
            if show {
                text.push_str(&format!("\n{m}"));
            }
            let entries: Vec<String> = (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| m.entry(i, j).to_string())
                .collect();
            let mut j = json!({"which": which, "entries": entries});
            let mut passed = true;
            if let Some(d) = degree {
                let f = factorization_check(d);
                let t = intertwine_check(d, which);
                passed = f.passed() && t.passed();
                text.push_str(&format!(
                    "\nfactorization (degree {d}): {}\nintertwiner (degree {d}): {}",
                    if f.passed() { "PASS" } else { "FAIL" },
                    if t.passed() { "PASS" } else { "FAIL" }
                ));
                j["factorization"] = serde_json::to_value(&f).expect("serializable");
                j["intertwiner"] = serde_json::to_value(&t).expect("serializable");
            }
            Outcome {
                text,
                json: j,
                passed,
            }
        }
        Command::SingularVector {
            x,
            scan,
            convention,
        } => {
            let range = parse_range(&scan)?;
            let r = singular_report(x, range, convention).map_err(|e| Failure(1, e.to_string()))?;
            let mut text = format!(
                "weight (1, 0, {x}), {} convention\nE_mu u0 v = {}\nE_nu u0 v = {}\nE_beta u0 v = {}\nE_mu^2 u0 v = {}\nvanishing for x in {:?}",
                r.convention, r.e_mu, r.e_nu, r.e_beta, r.e_mu_squared, r.vanishing_x
            );
            if !r.root_of_unity_orders.is_empty() {
                text.push_str(&format!(
                    "\nvanishes at primitive roots of unity of order {:?}",
                    r.root_of_unity_orders
                ));
            }
            Outcome::ok(text, serde_json::to_value(&r).expect("serializable"))
        }
        Command::Verify { suite, degree } => {
            let start = Instant::now();
            let r = run_suite(suite, degree);
            let text = format!("{r}  finished in {:.2?}", start.elapsed());
            Outcome {
                text,
                json: serde_json::to_value(&r).expect("serializable"),
                passed: r.passed,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(o) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("serializable")
                );
            } else {
                println!("{}", o.text.trim_end());
            }
            ExitCode::from(if o.passed { 0 } else { 1 })
        }
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
