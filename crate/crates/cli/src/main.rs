mod cache;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qschubert::combinat::{
    from_01_string, grassmann_permutation, jd_string, rect_dual, string012_to_permutation, strict_dual,
    to_01_string, LabelString, Partition,
};
use qschubert::isotropic::{duality_check, IsotropicRing};
use qschubert::puzzle::PuzzleKind;
use qschubert::typea::Grassmannian;
use qschubert::verify::{self, Bounds, Suite};
use qschubert::{QhElem, Space};

use cache::Cache;
use output::{document, element_of, terms_document, terms_of, Format, Term};

#[derive(Parser)]
#[command(name = "qschubert", version, about = "Exact classical and quantum Schubert calculus")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Result cache file (falls back to $QSCHUBERT_CACHE).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical Littlewood-Richardson coefficients on G(m, m+n).
    Lr(LrArgs),
    /// Quantum product of two Schubert classes.
    Qprod(ProductArgs),
    /// Three-point Gromov-Witten invariant.
    Gw(GwArgs),
    /// Count (and optionally draw) puzzles with given boundary.
    Puzzle(PuzzleArgs),
    /// Conversions between partitions, strings and permutations.
    String {
        #[command(subcommand)]
        op: StringOp,
    },
    /// Run an exhaustive identity suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpaceTag {
    #[value(name = "A")]
    A,
    #[value(name = "LG")]
    Lg,
    #[value(name = "OG")]
    Og,
}

impl fmt::Display for SpaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceTag::A => "A",
            SpaceTag::Lg => "LG",
            SpaceTag::Og => "OG",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Pieri,
    Qtilde,
    Puzzle,
    Duality,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Pieri => "pieri",
            Method::Qtilde => "qtilde",
            Method::Puzzle => "puzzle",
            Method::Duality => "duality",
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: qschubert::Error| e.to_string())
}

fn parse_string(s: &str) -> Result<LabelString, String> {
    LabelString::parse(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(long, value_enum, default_value_t = SpaceTag::A)]
    space: SpaceTag,
    /// Rows of the box (type A only).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: u32,
}

#[derive(Args)]
struct LrArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: u32,
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    /// Report only the coefficient of this class.
    #[arg(long, value_parser = parse_partition)]
    nu: Option<Partition>,
    #[arg(long, value_enum, default_value_t = Method::Pieri)]
    method: Method,
}

#[derive(Args)]
struct ProductArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    /// Defaults to pieri for A and qtilde for LG/OG.
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Compute by both routes and fail (exit 3) if they disagree.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct GwArgs {
    #[command(flatten)]
    product: ProductArgs,
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
    #[arg(long)]
    d: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PuzzleType {
    #[value(name = "1step")]
    OneStep,
    #[value(name = "2step")]
    TwoStep,
}

#[derive(Args)]
struct PuzzleArgs {
    #[arg(long = "type", value_enum)]
    kind: PuzzleType,
    #[arg(long, value_parser = parse_string)]
    nw: LabelString,
    #[arg(long, value_parser = parse_string)]
    ne: LabelString,
    #[arg(long, value_parser = parse_string)]
    s: LabelString,
    /// Also draw up to this many puzzles.
    #[arg(long, default_value_t = 0)]
    show: usize,
}

#[derive(Subcommand)]
enum StringOp {
    /// The 01-string of a partition in the m x n box.
    Encode {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// The partition (and box) of a 01-string.
    Decode {
        #[arg(long, value_parser = parse_string)]
        s: LabelString,
    },
    /// The Grassmannian permutation of a partition.
    Perm {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
    },
    /// The 012-string J^d of a partition.
    Jd {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        d: usize,
    },
    /// The permutation of a 012-string with a zeros and b - a ones.
    Perm012 {
        #[arg(long, value_parser = parse_string)]
        s: LabelString,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(Suite::ALL.map(Suite::name)))]
    suite: String,
    #[arg(long = "max-N", default_value_t = 8)]
    max_big_n: u32,
    #[arg(long = "max-n", default_value_t = 4)]
    max_n: u32,
    #[arg(long = "max-weight", default_value_t = 12)]
    max_weight: u32,
}

/// Bad combination of arguments; reported like a clap error.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// A failed identity suite.
#[derive(Debug)]
struct SuiteFailed;

impl fmt::Display for SuiteFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("suite failed")
    }
}

impl std::error::Error for SuiteFailed {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

struct Ctx {
    format: Format,
    cache: Option<Cache>,
}

impl Ctx {
    fn cached(&mut self, query: &Value, compute: impl FnOnce() -> Result<Vec<Term>>) -> Result<Vec<Term>> {
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get(query)) {
            return Ok(hit.clone());
        }
        let out = compute()?;
        if let Some(c) = self.cache.as_mut() {
            c.put(query, &out)?;
        }
        Ok(out)
    }
}

enum Ring {
    A(Grassmannian<i64>),
    Iso(IsotropicRing<i64>),
}

impl Ring {
    fn new(args: &SpaceArgs) -> Result<Ring> {
        match (args.space, args.m) {
            (SpaceTag::A, Some(m)) if m >= 1 && args.n >= 1 => Ok(Ring::A(Grassmannian::new(m, args.n))),
            (SpaceTag::A, Some(_)) => usage("G(m, m+n) needs m, n >= 1"),
            (SpaceTag::A, None) => usage("--m is required for --space A"),
            (_, Some(_)) => usage(format!("--m does not apply to --space {}", args.space)),
            (SpaceTag::Lg, None) => Ok(Ring::Iso(IsotropicRing::lagrangian(args.n))),
            (SpaceTag::Og, None) => Ok(Ring::Iso(IsotropicRing::orthogonal(args.n))),
        }
    }

    fn space(&self) -> Space {
        match self {
            Ring::A(g) => g.space(),
            Ring::Iso(r) => r.space(),
        }
    }
}

fn product_query(args: &ProductArgs, method: Method) -> Value {
    json!({
        "command": "qprod",
        "space": args.space.space.to_string(),
        "m": args.space.m,
        "n": args.space.n,
        "lambda": args.lambda.parts(),
        "mu": args.mu.parts(),
        "method": method.name(),
        "check": args.check,
    })
}

fn default_method(space: SpaceTag) -> Method {
    match space {
        SpaceTag::A => Method::Pieri,
        _ => Method::Qtilde,
    }
}

/// Quantum product of type A read off from two-step puzzle counts.
fn product_by_puzzles(g: &Grassmannian<i64>, lambda: &Partition, mu: &Partition) -> Result<QhElem> {
    let (m, n) = (g.m(), g.n());
    let mut out = QhElem::zero(g.space());
    for d in 0..=(m as u32).min(n) {
        for nu in g.classes() {
            if lambda.weight() + mu.weight() != nu.weight() + d * g.big_n() {
                continue;
            }
            let v = g.gw_puzzle(lambda, mu, &rect_dual(&nu, m, n)?, d)?;
            out.add_term(nu, d, v.value as i64);
        }
    }
    Ok(out)
}

fn compute_product(ring: &Ring, args: &ProductArgs, method: Method) -> Result<QhElem> {
    let (a, b) = (&args.lambda, &args.mu);
    let x = match (ring, method) {
        (Ring::A(g), Method::Pieri) => g.product_expanding(a, b)?,
        (Ring::A(g), Method::Puzzle) => product_by_puzzles(g, a, b)?,
        (Ring::Iso(r), Method::Pieri) => r.product_by_pieri(a, b)?,
        (Ring::Iso(r), Method::Qtilde) => r.product_by_qtilde(a, b)?,
        _ => return usage(format!("--method {} does not apply to --space {}", method.name(), args.space.space)),
    };
    if args.check {
        let other = match ring {
            Ring::A(g) if method == Method::Pieri => product_by_puzzles(g, a, b)?,
            Ring::A(g) => g.product_expanding(a, b)?,
            Ring::Iso(r) if method == Method::Pieri => r.product_by_qtilde(a, b)?,
            Ring::Iso(r) => r.product_by_pieri(a, b)?,
        };
        if other != x {
            return Err(qschubert::Error::Contract(format!("product routes disagree: {x} vs {other}")).into());
        }
    }
    Ok(x)
}

fn qprod(ctx: &mut Ctx, args: &ProductArgs) -> Result<String> {
    let ring = Ring::new(&args.space)?;
    let method = args.method.unwrap_or(default_method(args.space.space));
    let query = product_query(args, method);
    let terms = ctx.cached(&query, || Ok(terms_of(&compute_product(&ring, args, method)?)))?;
    Ok(match ctx.format {
        Format::Text => element_of(ring.space(), &terms).to_string(),
        Format::Json => terms_document(&query, &terms),
    })
}

fn gw(ctx: &mut Ctx, args: &GwArgs) -> Result<String> {
    let p = &args.product;
    let ring = Ring::new(&p.space)?;
    let method = p.method.unwrap_or(default_method(p.space.space));
    let mut query = product_query(p, method);
    query["command"] = json!("gw");
    query["nu"] = json!(args.nu.parts());
    query["d"] = json!(args.d);
    let value = ctx.cached(&query, || {
        let c = match (&ring, method) {
            (Ring::Iso(og), Method::Duality) if p.space.space == SpaceTag::Og => {
                if p.check {
                    return usage("--check does not apply to --method duality");
                }
                let lg = IsotropicRing::lagrangian(og.n().saturating_sub(1));
                let c = duality_check(og, &lg, &p.lambda, &p.mu, &args.nu, args.d)?;
                c.lg.unwrap_or(0)
            }
            _ => {
                let space = ring.space();
                let dual = match &ring {
                    Ring::A(g) => rect_dual(&args.nu, g.m(), g.n())?,
                    Ring::Iso(r) => strict_dual(&args.nu, r.n())?,
                };
                let total = p.lambda.weight() + args.nu.weight() + p.mu.weight();
                let prod = compute_product(&ring, p, method)?;
                if total == space.dimension() + args.d * space.q_degree() {
                    prod.coefficient(&dual, args.d)
                } else {
                    0
                }
            }
        };
        Ok(vec![Term {
            nu: args.nu.parts().to_vec(),
            d: args.d,
            c,
        }])
    })?;
    Ok(match ctx.format {
        Format::Text => value[0].c.to_string(),
        Format::Json => terms_document(&query, &value),
    })
}

fn lr(ctx: &mut Ctx, args: &LrArgs) -> Result<String> {
    if args.m == 0 || args.n == 0 {
        return usage("G(m, m+n) needs m, n >= 1");
    }
    let g = Grassmannian::<i64>::new(args.m, args.n);
    let query = json!({
        "command": "lr",
        "m": args.m,
        "n": args.n,
        "lambda": args.lambda.parts(),
        "mu": args.mu.parts(),
        "method": args.method.name(),
    });
    let terms = ctx.cached(&query, || {
        let x = match args.method {
            Method::Pieri => g.product_expanding(&args.lambda, &args.mu)?.classical_part(),
            Method::Puzzle => {
                let mut x = QhElem::zero(g.space());
                let s = |p: &Partition| to_01_string(p, args.m, args.n);
                let (a, b) = (s(&args.lambda)?, s(&args.mu)?);
                for nu in g.classes() {
                    if nu.weight() == args.lambda.weight() + args.mu.weight() {
                        let c = PuzzleKind::OneStep.count(&a, &b, &s(&rect_dual(&nu, args.m, args.n)?)?)?;
                        x.add_term(nu, 0, c as i64);
                    }
                }
                x
            }
            other => return usage(format!("--method {} does not apply to lr", other.name())),
        };
        Ok(terms_of(&x))
    })?;
    let terms: Vec<Term> = match &args.nu {
        Some(nu) => {
            if !nu.fits(args.m, args.n) {
                return Err(qschubert::Error::DoesNotFit {
                    partition: nu.clone(),
                    rows: args.m,
                    cols: args.n as usize,
                }
                .into());
            }
            let c = terms.iter().find(|t| t.nu == nu.parts()).map_or(0, |t| t.c);
            vec![Term {
                nu: nu.parts().to_vec(),
                d: 0,
                c,
            }]
        }
        None => terms,
    };
    Ok(match (ctx.format, &args.nu) {
        (Format::Text, Some(_)) => terms[0].c.to_string(),
        (Format::Text, None) => element_of(g.space(), &terms).to_string(),
        (Format::Json, _) => {
            let mut q = query;
            q["nu"] = json!(args.nu.as_ref().map(|p| p.parts().to_vec()));
            terms_document(&q, &terms)
        }
    })
}

fn puzzle(ctx: &Ctx, args: &PuzzleArgs) -> Result<String> {
    let kind = match args.kind {
        PuzzleType::OneStep => PuzzleKind::OneStep,
        PuzzleType::TwoStep => PuzzleKind::TwoStep,
    };
    let count = kind.count(&args.nw, &args.ne, &args.s)?;
    let boards = if args.show > 0 {
        kind.enumerate(&args.nw, &args.ne, &args.s, args.show)?
    } else {
        Vec::new()
    };
    let query = json!({
        "command": "puzzle",
        "type": if kind == PuzzleKind::OneStep { "1step" } else { "2step" },
        "nw": args.nw.to_string(),
        "ne": args.ne.to_string(),
        "s": args.s.to_string(),
    });
    Ok(match ctx.format {
        Format::Text => {
            let mut out = count.to_string();
            for b in &boards {
                out.push_str("\n\n");
                out.push_str(b.render().trim_end());
            }
            out
        }
        Format::Json => {
            let mut doc: Value = serde_json::from_str(&document(&query, json!(count)))?;
            if args.show > 0 {
                doc["boards"] = json!(boards.iter().map(|b| b.render()).collect::<Vec<_>>());
            }
            doc.to_string()
        }
    })
}

fn string_op(ctx: &Ctx, op: &StringOp) -> Result<String> {
    let (query, result): (Value, Value) = match op {
        StringOp::Encode { m, n, lambda } => (
            json!({"command": "string", "op": "encode", "m": m, "n": n, "lambda": lambda.parts()}),
            json!(to_01_string(lambda, *m, *n)?.to_string()),
        ),
        StringOp::Decode { s } => {
            let (lambda, m, n) = from_01_string(s)?;
            (
                json!({"command": "string", "op": "decode", "s": s.to_string()}),
                json!({"lambda": lambda.parts(), "m": m, "n": n}),
            )
        }
        StringOp::Perm { m, n, lambda } => (
            json!({"command": "string", "op": "perm", "m": m, "n": n, "lambda": lambda.parts()}),
            json!(grassmann_permutation(lambda, *m, *n)?.images()),
        ),
        StringOp::Jd { m, n, lambda, d } => (
            json!({"command": "string", "op": "jd", "m": m, "n": n, "lambda": lambda.parts(), "d": d}),
            json!(jd_string(lambda, *m, *n, *d)?.to_string()),
        ),
        StringOp::Perm012 { s, a, b } => (
            json!({"command": "string", "op": "perm012", "s": s.to_string(), "a": a, "b": b}),
            json!(string012_to_permutation(s, *a, *b)?.images()),
        ),
    };
    Ok(match ctx.format {
        Format::Json => document(&query, result),
        Format::Text => match &result {
            Value::String(s) => s.clone(),
            Value::Array(xs) => xs.iter().map(Value::to_string).collect::<Vec<_>>().join(","),
            Value::Object(o) => {
                let parts: Vec<String> = o["lambda"].as_array().unwrap().iter().map(Value::to_string).collect();
                format!("({}) in {}x{}", parts.join(","), o["m"], o["n"])
            }
            other => other.to_string(),
        },
    })
}

fn verify_cmd(ctx: &Ctx, args: &VerifyArgs) -> Result<(String, bool)> {
    let suite: Suite = args.suite.parse()?;
    let bounds = Bounds {
        max_big_n: args.max_big_n,
        max_n: args.max_n,
        max_weight: args.max_weight,
    };
    let reports = verify::run(suite, &bounds);
    let ok = verify::all_passed(&reports);
    let text = match ctx.format {
        Format::Text => {
            let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
            let checked: u64 = reports.iter().map(|r| r.checked).sum();
            lines.push(if ok {
                format!("PASS ({checked} checks)")
            } else {
                format!("FAIL ({} of {checked} checks failed)", reports.iter().map(|r| r.failed).sum::<u64>())
            });
            lines.join("\n")
        }
        Format::Json => {
            let query = json!({
                "command": "verify",
                "suite": suite.name(),
                "max_N": args.max_big_n,
                "max_n": args.max_n,
                "max_weight": args.max_weight,
            });
            let result: Vec<Value> = reports
                .iter()
                .map(|r| json!({"name": r.name, "checked": r.checked, "failed": r.failed, "failures": r.failures}))
                .collect();
            document(&query, json!(result))
        }
    };
    Ok((text, ok))
}

fn run(cli: Cli) -> Result<String> {
    let cache = match Cache::locate(cli.cache) {
        Some(path) => Some(Cache::open(&path)?),
        None => None,
    };
    let mut ctx = Ctx {
        format: cli.format,
        cache,
    };
    match &cli.command {
        Command::Lr(a) => lr(&mut ctx, a),
        Command::Qprod(a) => qprod(&mut ctx, a),
        Command::Gw(a) => gw(&mut ctx, a),
        Command::Puzzle(a) => puzzle(&ctx, a),
        Command::String { op } => string_op(&ctx, op),
        Command::Verify(a) => {
            let (text, ok) = verify_cmd(&ctx, a)?;
            if !ok {
                println!("{text}");
                bail!(SuiteFailed);
            }
            Ok(text)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    if err.downcast_ref::<SuiteFailed>().is_some() {
        return 3;
    }
    match err.downcast_ref::<qschubert::Error>() {
        Some(e) if e.is_contract_violation() => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
