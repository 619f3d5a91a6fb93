//! The `arimat` command line.
//!
//! Exit codes: 0 success or "equivalent", 1 negative answer, 2 parse or usage
//! error, 3 cap exceeded, 4 precondition failed (not weakly multiplicative,
//! not full rank, not a multiplicative basis). Data goes to stdout,
//! diagnostics to stderr. Indices in all output are one-based.

pub mod input;
mod render;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arimatroid::{Representation, DEFAULT_TABLE_CAP};
use crate::canonical::{
    basic_form, canonical_form, enumerate_basic_reps_with_cap, equivalent_with_cap, stratum_size,
    DEFAULT_ENUMERATION_CAP,
};
use crate::circuitgraph::{coordinatizing_path, kappa, Vertex};
use crate::error::{Error, Result};
use crate::oracle::{verify_uniqueness_theorem, DEFAULT_BRUTEFORCE_CAP};
use crate::toric::{layer_poset_with_cap, DEFAULT_FLAT_CAP};

use render::{
    big, matrix_file, matrix_json, rational, subset_json, subset_text, witness_json, witness_text,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Args)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest N for full subset tables.
    #[arg(long, default_value_t = DEFAULT_TABLE_CAP, global = true)]
    pub table_cap: usize,
    /// Largest N for exhaustive sign searches.
    #[arg(long, default_value_t = DEFAULT_BRUTEFORCE_CAP, global = true)]
    pub bruteforce_cap: usize,
    /// Largest N - κ for enumerating basic forms.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP, global = true)]
    pub enumeration_cap: usize,
    /// Largest N for flats and layer posets.
    #[arg(long, default_value_t = DEFAULT_FLAT_CAP, global = true)]
    pub layer_cap: usize,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: Format::Text,
            table_cap: DEFAULT_TABLE_CAP,
            bruteforce_cap: DEFAULT_BRUTEFORCE_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            layer_cap: DEFAULT_FLAT_CAP,
            seed: 0,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "arimat",
    version,
    about = "Representable arithmetic matroids over exact integers"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank and multiplicity of every subset.
    Table { file: String },
    /// Canonical representative of the orbit under T·X·D.
    Canonical {
        file: String,
        /// Also print T and D with canonical = T·X·D.
        #[arg(long)]
        witness: bool,
    },
    /// Decide whether two matrices represent equivalently.
    Equiv { first: String, second: String },
    /// All representations in basic form for a basis.
    Enumerate {
        file: String,
        /// Comma-separated basis, e.g. 1,2,3 (default: first multiplicative basis).
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<usize>>,
    },
    /// Number of representations in basic form.
    Stratum { file: String },
    /// Poset of layers of the centred toric arrangement.
    Layers {
        file: String,
        /// Hasse diagram in DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
    /// Check canonical forms on random T·X·D.
    Verify {
        file: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Support graph of A in DOT, forest edges bold.
    Graph {
        file: String,
        #[arg(long, value_delimiter = ',')]
        basis: Option<Vec<usize>>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::BadIndex { .. } | Error::DimensionMismatch(_) => EXIT_PARSE,
        Error::TooLarge { .. } => EXIT_CAP,
        _ => EXIT_PRECONDITION,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command, &cli.config),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn execute(command: &Command, config: &RunConfig) -> Outcome {
    match dispatch(command, config) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("arimat: {e}\n"),
        },
    }
}

fn dispatch(command: &Command, config: &RunConfig) -> Result<(i32, String)> {
    let json = config.format == Format::Json;
    match command {
        Command::Table { file } => cmd_table(&input::load(file)?, config).map(ok),
        Command::Canonical { file, witness } => {
            cmd_canonical(&input::load(file)?, *witness, json).map(ok)
        }
        Command::Equiv { first, second } => {
            cmd_equiv(&input::load(first)?, &input::load(second)?, config)
        }
        Command::Enumerate { file, basis } => {
            let x = input::load(file)?;
            let basis = resolve_basis(&x, basis.as_deref())?;
            cmd_enumerate(&x, &basis, config).map(ok)
        }
        Command::Stratum { file } => cmd_stratum(&input::load(file)?, json).map(ok),
        Command::Layers {
            file,
            dot,
            json: as_json,
        } => cmd_layers(
            &input::load(file)?,
            *dot,
            json || *as_json,
            config.layer_cap,
        )
        .map(ok),
        Command::Verify { file, trials } => cmd_verify(&input::load(file)?, *trials, config),
        Command::Graph { file, basis } => {
            let x = input::load(file)?;
            let basis = resolve_basis(&x, basis.as_deref())?;
            cmd_graph(&x, &basis).map(ok)
        }
    }
}

fn ok(s: String) -> (i32, String) {
    (EXIT_OK, s)
}

fn to_json(v: Value) -> String {
    let mut s = serde_json::to_string(&v).expect("serializable");
    s.push('\n');
    s
}

/// One-based user basis to sorted zero-based indices, or the first
/// multiplicative basis.
fn resolve_basis(x: &Representation, basis: Option<&[usize]>) -> Result<Vec<usize>> {
    x.require_full_rank()?;
    match basis {
        Some(b) => {
            let zero_based = b
                .iter()
                .map(|&i| {
                    i.checked_sub(1)
                        .ok_or_else(|| Error::Parse("basis indices start at 1".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            x.normalize_subset(&zero_based)
        }
        None => x
            .first_multiplicative_basis()
            .ok_or(Error::NotWeaklyMultiplicative),
    }
}

pub fn cmd_table(x: &Representation, config: &RunConfig) -> Result<String> {
    let table = x.full_table_with_cap(config.table_cap)?;
    if config.format == Format::Json {
        let subsets: Vec<Value> = table
            .iter()
            .map(
                |p| json!({"S": subset_json(&p.subset), "rank": p.rank, "m": big(&p.multiplicity)}),
            )
            .collect();
        return Ok(to_json(json!({ "subsets": subsets })));
    }
    let rows: Vec<[String; 3]> = table
        .iter()
        .map(|p| {
            [
                subset_text(&p.subset),
                p.rank.to_string(),
                p.multiplicity.to_string(),
            ]
        })
        .collect();
    let w0 = rows.iter().map(|r| r[0].len()).max().unwrap_or(0).max(1);
    let mut out = format!("{:<w0$}  rank  m\n", "S");
    for [s, r, m] in rows {
        out.push_str(&format!("{s:<w0$}  {r:<4}  {m}\n"));
    }
    Ok(out)
}

pub fn cmd_canonical(x: &Representation, with_witness: bool, json: bool) -> Result<String> {
    let c = canonical_form(x)?;
    let forest: Vec<String> = c
        .forest_used
        .edges()
        .iter()
        .map(|&e| c.incidence.edge_name(e))
        .collect();
    if json {
        let mut v = json!({
            "rows": c.matrix.rows(),
            "cols": c.matrix.cols(),
            "matrix": matrix_json(&c.matrix),
            "basis": subset_json(&c.basis_used),
            "forest": forest,
        });
        if with_witness {
            v["witness"] = witness_json(&c.witness);
        }
        return Ok(to_json(v));
    }
    let mut out = format!(
        "canonical form:\n{}basis: {}\nforest:{}\n",
        c.matrix,
        subset_text(&c.basis_used),
        forest.iter().map(|e| format!(" {e}")).collect::<String>()
    );
    if with_witness {
        out.push_str(&witness_text(&c.witness));
    }
    Ok(out)
}

pub fn cmd_equiv(
    x: &Representation,
    y: &Representation,
    config: &RunConfig,
) -> Result<(i32, String)> {
    let witness = if x.d() == y.d() && x.n() == y.n() {
        equivalent_with_cap(x, y, config.bruteforce_cap)?
    } else {
        None
    };
    let same_matroid = witness.is_some()
        || (x.n() == y.n()
            && x.full_table_with_cap(config.table_cap)?
                == y.full_table_with_cap(config.table_cap)?);
    let (verdict, label, code) = match (&witness, same_matroid) {
        (Some(_), _) => ("equivalent", "equivalent", EXIT_OK),
        (None, true) => (
            "same_matroid",
            "same arithmetic matroid, different representation",
            EXIT_NEGATIVE,
        ),
        (None, false) => ("different", "different arithmetic matroids", EXIT_NEGATIVE),
    };
    let out = if config.format == Format::Json {
        to_json(json!({
            "verdict": verdict,
            "equivalent": witness.is_some(),
            "same_matroid": same_matroid,
            "witness": witness.as_ref().map_or(Value::Null, witness_json),
        }))
    } else {
        let mut s = format!("{label}\n");
        if let Some(w) = &witness {
            s.push_str(&witness_text(w));
        }
        s
    };
    Ok((code, out))
}

pub fn cmd_enumerate(x: &Representation, basis: &[usize], config: &RunConfig) -> Result<String> {
    let all = enumerate_basic_reps_with_cap(x, basis, config.enumeration_cap)?;
    if config.format == Format::Json {
        return Ok(to_json(json!({
            "basis": subset_json(basis),
            "count": all.len(),
            "matrices": all.iter().map(matrix_json).collect::<Vec<_>>(),
        })));
    }
    let blocks: Vec<String> = all
        .iter()
        .enumerate()
        .map(|(k, m)| format!("# {}\n{}", k + 1, matrix_file(m)))
        .collect();
    Ok(blocks.join("\n"))
}

pub fn cmd_stratum(x: &Representation, json: bool) -> Result<String> {
    let size = stratum_size(x)?;
    if !json {
        return Ok(format!("{size}\n"));
    }
    let basis = x
        .first_multiplicative_basis()
        .ok_or(Error::NotWeaklyMultiplicative)?;
    let k = kappa(&basic_form(x, &basis)?.incidence());
    Ok(to_json(json!({
        "basis": subset_json(&basis),
        "kappa": k,
        "exponent": x.n() - k,
        "size": big(&size.into()),
    })))
}

pub fn cmd_layers(x: &Representation, dot: bool, json: bool, cap: usize) -> Result<String> {
    let poset = layer_poset_with_cap(x, cap)?;
    let covers = poset.covers();
    let point_text = |q: &[num_rational::BigRational]| {
        format!(
            "({})",
            q.iter().map(rational).collect::<Vec<_>>().join(", ")
        )
    };
    if dot {
        let mut out = String::from("digraph layers {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, l) in poset.layers().iter().enumerate() {
            out.push_str(&format!(
                "  L{} [label=\"{} {}\"];\n",
                i + 1,
                subset_text(l.flat.elements()),
                point_text(&l.point)
            ));
        }
        for (i, j) in &covers {
            out.push_str(&format!("  L{} -> L{};\n", i + 1, j + 1));
        }
        out.push_str("}\n");
        return Ok(out);
    }
    if json {
        let layers: Vec<Value> = poset
            .layers()
            .iter()
            .map(|l| {
                json!({
                    "flat": subset_json(l.flat.elements()),
                    "point": l.point.iter().map(rational).collect::<Vec<_>>(),
                    "hyperplanes": subset_json(&l.hyperplanes),
                })
            })
            .collect();
        let covers: Vec<[usize; 2]> = covers.iter().map(|&(i, j)| [i + 1, j + 1]).collect();
        return Ok(to_json(json!({ "layers": layers, "covers": covers })));
    }
    let mut out = format!("{} layers\n", poset.len());
    for (i, l) in poset.layers().iter().enumerate() {
        out.push_str(&format!(
            "L{} flat={} point={} on={}\n",
            i + 1,
            subset_text(l.flat.elements()),
            point_text(&l.point),
            subset_text(&l.hyperplanes)
        ));
    }
    out.push_str("covers:\n");
    for (i, j) in covers {
        out.push_str(&format!("L{} < L{}\n", i + 1, j + 1));
    }
    Ok(out)
}

pub fn cmd_verify(x: &Representation, trials: usize, config: &RunConfig) -> Result<(i32, String)> {
    let report = verify_uniqueness_theorem(x, trials, config.seed)?;
    let code = if report.all_ok() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    let out = if config.format == Format::Json {
        let failures: Vec<Value> = report
            .failures
            .iter()
            .map(|f| {
                json!({
                    "trial": f.trial,
                    "seed": f.seed,
                    "reason": f.reason,
                    "T": matrix_json(f.transform.matrix()),
                    "D": f.signs,
                })
            })
            .collect();
        to_json(json!({
            "trials": report.trials,
            "passed": report.passed(),
            "seed": config.seed,
            "failures": failures,
        }))
    } else {
        let mut s = format!("{}/{} ok\n", report.passed(), report.trials);
        for f in &report.failures {
            s.push_str(&format!(
                "trial {} (seed {}): {}\n",
                f.trial, f.seed, f.reason
            ));
        }
        s
    };
    Ok((code, out))
}

pub fn cmd_graph(x: &Representation, basis: &[usize]) -> Result<String> {
    let form = basic_form(x, basis)?;
    let c = form.incidence();
    let forest = coordinatizing_path(&c);
    let mut out = String::from("graph G_A {\n");
    for v in c.vertices() {
        let shape = match v {
            Vertex::Row(_) => "box",
            Vertex::Col(_) => "circle",
        };
        out.push_str(&format!("  {} [shape={shape}];\n", c.vertex_name(v)));
    }
    for e in c.edges() {
        let (r, col) = e.endpoints();
        let style = if forest.contains(e) {
            ", style=bold"
        } else {
            ""
        };
        out.push_str(&format!(
            "  {} -- {} [label=\"{}\"{style}];\n",
            c.vertex_name(r),
            c.vertex_name(col),
            form.a().get(e.row, e.col)
        ));
    }
    out.push_str("}\n");
    Ok(out)
}
