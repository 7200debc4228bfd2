use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use demazure::bases::{self, Basis, Expansion};
use demazure::dualeq;
use demazure::enumerate::{self, Family};
use demazure::fillings::{self, Filling};
use demazure::kostka;
use demazure::polyring::{format_rational, parse_rational, ParamPoly};
use demazure::shapes::{Diagram, DiagramKind, Partition, WeakComposition};
use demazure::verify;

#[derive(Parser)]
#[command(name = "demazure", version, about = "Key tabloids, key expansions and Kostka–Foulkes polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    /// E_a(X;q,0) for a weak composition.
    E,
    /// Key polynomial.
    Key,
    /// Fundamental slide polynomial.
    Slide,
    /// H_mu(X;0,t) for a partition.
    Hl,
    /// H_mu(X;q,t) for a partition.
    H,
    /// Schur polynomial.
    Schur,
}

#[derive(Subcommand)]
enum Command {
    /// List or count the fillings of a shape in a family.
    Enumerate {
        shape: String,
        /// SSKT, SKT, SSKD, SKD, SSYT, SYT, SYD or STD_FILLINGS.
        #[arg(long)]
        family: String,
        #[arg(long)]
        count: bool,
        /// Largest entry for SSYT.
        #[arg(long)]
        vars: Option<usize>,
        /// Prepend this many empty rows to a key shape.
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Statistics of a filling, rows bottom to top separated by ';'.
    Stats {
        filling: String,
        /// Read the filling on a Young diagram.
        #[arg(long)]
        young: bool,
    },
    /// Expand a polynomial in a basis, one "label : coefficient" line per term.
    Expand {
        shape: String,
        #[arg(long, default_value = "key")]
        basis: String,
        #[arg(long, value_enum, default_value_t = Object::E)]
        object: Object,
        /// Variable count for symmetric objects (default: degree).
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Weak dual equivalence classes of standard key tabloids.
    Classes {
        shape: String,
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Kostka–Foulkes polynomials K_{lambda,mu}(t).
    Kostka { mu: String },
    /// Nonsymmetric Kostka–Foulkes polynomials K_{a,b}(q).
    Nskostka {
        b: String,
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Compare K_{lambda,mu}(t) with sums of K_{a,b}(t).
    Refine {
        b: String,
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Compare the stable limit of E_(0^m x a)(X;q,0) with omega H(X;0,q).
    Stability { a: String },
    /// Run the property suites on all small shapes.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_cells: usize,
        /// Longest weak composition (default: max-cells).
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Evaluate the full E_a(X;q,t) exactly at a rational point.
    Eval {
        shape: String,
        /// Comma-separated values x1,...,xn; rationals as p/q.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
}

/// What a command produced: text lines, a structured value, and success.
struct Output {
    lines: Vec<String>,
    value: Value,
    ok: bool,
}

impl Output {
    fn ok(lines: Vec<String>, value: Value) -> Self {
        Self { lines, value, ok: true }
    }
}

fn weak(s: &str, pad: usize) -> Result<WeakComposition> {
    let a: WeakComposition = s.parse().with_context(|| format!("bad weak composition {s:?}"))?;
    Ok(a.pad(pad))
}

fn partition(s: &str) -> Result<Partition> {
    s.parse().with_context(|| format!("bad partition {s:?}"))
}

fn family(s: &str, vars: Option<usize>) -> Result<Family> {
    if s.eq_ignore_ascii_case("ssyt") {
        let n = vars.ok_or_else(|| anyhow!("SSYT needs --vars n"))?;
        return Ok(Family::Ssyt(n));
    }
    Ok(s.parse()?)
}

fn cmd_enumerate(shape: &str, fam: &str, count: bool, vars: Option<usize>, pad: usize) -> Result<Output> {
    let fam = family(fam, vars)?;
    let d = match fam.kind() {
        DiagramKind::Key => Diagram::key(&weak(shape, pad)?),
        DiagramKind::Young => Diagram::young(&partition(shape)?),
    };
    let all = enumerate::enumerate(fam, &d)?;
    let value = if count {
        json!({"family": fam.to_string(), "shape": d.shape().parts(), "count": all.len()})
    } else {
        let ts: Vec<String> = all.iter().map(ToString::to_string).collect();
        json!({"family": fam.to_string(), "shape": d.shape().parts(), "count": all.len(), "fillings": ts})
    };
    let lines = if count { vec![all.len().to_string()] } else { all.iter().map(ToString::to_string).collect() };
    Ok(Output::ok(lines, value))
}

fn cmd_stats(s: &str, young: bool) -> Result<Output> {
    let mut lines = Vec::new();
    let mut value = serde_json::Map::new();
    let mut put = |k: &str, v: Value| {
        let shown = match &v {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        };
        lines.push(format!("{k}: {shown}"));
        value.insert(k.to_string(), v);
    };
    if young {
        let u = Filling::parse_young(s)?;
        put("shape", json!(u.young_shape().to_string()));
        put("comaj", json!(fillings::comaj(&u)?));
        put("inv", fillings::inv(&u).map_or(Value::Null, |v| json!(v)));
        if u.is_standard() {
            put("Des", json!(fillings::descent_composition(&u)?.to_string()));
        }
    } else {
        let t = Filling::parse_key(s)?;
        put("shape", json!(t.shape().to_string()));
        let na = fillings::is_non_attacking(&t)?;
        put("non_attacking", json!(na));
        put("maj", json!(fillings::maj(&t)));
        put("coinv", json!(fillings::coinv(&t)));
        if na {
            put("coinv_formula", json!(fillings::coinv_by_formula(&t)?));
        }
        put("key_tableau", json!(fillings::is_semistandard_key_tableau(&t)));
        if t.is_standard() {
            put("des", json!(fillings::weak_descent_composition(&t)?.to_string()));
        }
    }
    Ok(Output::ok(lines, Value::Object(value)))
}

fn expansion_output(e: &Expansion) -> Output {
    Output::ok(e.to_lines(), serde_json::to_value(e).expect("serializable"))
}

fn monomials(p: &ParamPoly) -> Expansion {
    let mut e = Expansion::new(Basis::Monomial);
    for (l, c) in p.terms() {
        e.add(l.clone(), c);
    }
    e
}

fn cmd_expand(shape: &str, basis: &str, object: Object, vars: Option<usize>, pad: usize) -> Result<Output> {
    let basis: Basis = basis.parse()?;
    let e = match object {
        Object::E | Object::Key | Object::Slide => {
            if vars.is_some() {
                bail!("--vars applies to symmetric objects; pad the shape instead");
            }
            let a = weak(shape, pad)?;
            match (object, basis) {
                (Object::E, Basis::Key) => dualeq::key_expansion(&a)?,
                (Object::E, Basis::Slide) => bases::macdonald_q0_slide_expansion(&a),
                (Object::Key, Basis::Slide) => bases::key_slide_expansion(&a),
                _ => {
                    let p = match object {
                        Object::E => bases::macdonald_q0(&a),
                        Object::Key => bases::key(&a),
                        _ => bases::slide(&a),
                    };
                    match basis {
                        Basis::Monomial => monomials(&p),
                        b => bases::expand_in_basis(&p, b)?,
                    }
                }
            }
        }
        Object::Hl | Object::H | Object::Schur => {
            let mu = partition(shape)?;
            let n = vars.unwrap_or(mu.size());
            let quasi = match object {
                Object::Hl => bases::hall_littlewood_quasi(&mu),
                Object::H => bases::macdonald_full_quasi(&mu),
                _ => bases::schur_quasi_expansion(&mu),
            };
            match basis {
                Basis::Quasifund => quasi,
                Basis::Monomial => monomials(&quasi.to_polynomial(n)),
                b => bases::expand_in_basis(&quasi.to_polynomial(n), b)?,
            }
        }
    };
    Ok(expansion_output(&e))
}

fn cmd_classes(shape: &str, pad: usize) -> Result<Output> {
    let a = weak(shape, pad)?;
    let cls = dualeq::classes(&a)?;
    let mut lines = Vec::new();
    let mut values = Vec::new();
    for (k, c) in cls.iter().enumerate() {
        let label = c.key_label.as_ref().map_or_else(|| format!("none (padded {})", c.stable_label), |l| l.to_string());
        lines.push(format!("class {}: maj {}, size {}, key_label {}", k + 1, c.maj, c.members.len(), label));
        for (i, t) in c.members.iter().enumerate() {
            let mark = if i == c.yamanouchi { "  *" } else { "" };
            lines.push(format!("  {t}{mark}"));
        }
        values.push(json!({
            "maj": c.maj,
            "size": c.members.len(),
            "key_label": c.key_label.as_ref().map(|l| l.parts().to_vec()),
            "stable_label": c.stable_label.parts(),
            "padding": c.padding,
            "yamanouchi": c.members[c.yamanouchi].to_string(),
            "members": c.members.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }));
    }
    Ok(Output::ok(lines, json!({"shape": a.parts(), "classes": values})))
}

fn cmd_verify(max_cells: usize, max_len: Option<usize>, seed: u64) -> Output {
    let config = verify::Config { max_cells, max_len: max_len.unwrap_or(max_cells), seed, ..Default::default() };
    let report = verify::run(&config);
    Output { lines: report.to_lines(), value: report.to_json(), ok: report.ok() }
}

fn cmd_eval(shape: &str, x: &str, q: &str, t: &str, pad: usize) -> Result<Output> {
    let a = weak(shape, pad)?;
    let xs = x.split(',').map(|v| parse_rational(v.trim())).collect::<Result<Vec<_>, _>>()?;
    let (q, t) = (parse_rational(q)?, parse_rational(t)?);
    let v = bases::evaluate_e_full(&a, &xs, &q, &t)?;
    let s = format_rational(&v);
    Ok(Output::ok(vec![s.clone()], json!({"shape": a.parts(), "value": s})))
}

fn run(cli: Cli) -> Result<Output> {
    Ok(match cli.command {
        Command::Enumerate { shape, family, count, vars, pad } => cmd_enumerate(&shape, &family, count, vars, pad)?,
        Command::Stats { filling, young } => cmd_stats(&filling, young)?,
        Command::Expand { shape, basis, object, vars, pad } => cmd_expand(&shape, &basis, object, vars, pad)?,
        Command::Classes { shape, pad } => cmd_classes(&shape, pad)?,
        Command::Kostka { mu } => {
            let k = kostka::kostka_foulkes(&partition(&mu)?)?;
            Output::ok(k.to_lines(), k.to_json())
        }
        Command::Nskostka { b, pad } => {
            let k = kostka::ns_kostka(&weak(&b, pad)?)?;
            Output::ok(k.to_lines(), k.to_json())
        }
        Command::Refine { b, pad } => {
            let r = kostka::refinement_check(&weak(&b, pad)?)?;
            Output { lines: r.to_lines(), value: r.to_json(), ok: r.passes() }
        }
        Command::Stability { a } => {
            let r = kostka::stability_check(&weak(&a, 0)?)?;
            Output { lines: r.to_lines(), value: r.to_json(), ok: r.passes() }
        }
        Command::Verify { max_cells, max_len, seed } => cmd_verify(max_cells, max_len, seed),
        Command::Eval { shape, x, q, t, pad } => cmd_eval(&shape, &x, &q, &t, pad)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => out.lines.iter().for_each(|l| println!("{l}")),
                Format::Structured => println!("{}", serde_json::to_string_pretty(&out.value).expect("json")),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
