//! Batch calculator for the two lattices: implication of cyclic loop
//! conditions and pp-constructability of disjoint unions of cycles.
//!
//! Exit codes: 0 the query holds (or produced output), 1 the answer is "no",
//! 2 the query could not be answered (syntax or resource error).

mod expr;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclat_core::cond::{set_implies, Condition};
use cyclat_core::{oracle, poset, CompareResult, HasseGraph, HasseKind, Limits, PrimeSet};
use serde_json::{json, Value};

use expr::{parse_expr, parse_kind, render, Expr, ExprKind};

#[derive(Parser)]
#[command(name = "cyclat", version, about = "cyclic loop conditions and unions of cycles")]
struct Cli {
    /// emit machine-readable JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// cap on vertices of explicitly constructed digraphs
    #[arg(long, global = true, value_name = "N")]
    max_vertices: Option<u64>,
    /// cap on enumerated divisors per integer
    #[arg(long, global = true, value_name = "N")]
    max_divisors: Option<u64>,
    /// cap on enumerated maps in satisfaction tests
    #[arg(long, global = true, value_name = "N")]
    max_maps: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Set implication: `implies S{..} [S{..} ...] : S{..}`
    Implies {
        /// premise conditions, a literal `:`, then the conclusion
        args: Vec<String>,
    },
    /// Does the union of cycles satisfy the condition?
    Satisfies { union: String, cond: String },
    /// Compare two unions in the pp-constructability order: < > = ||
    Compare { left: String, right: String },
    /// Decompose a condition into its strongest prime conditions
    Decompose { cond: String },
    /// Canonical representative of the equivalence class
    Canon { expr: String },
    /// Maximal unsatisfied prime conditions of a union of cycles
    Npc { union: String },
    /// Lattice meet
    Meet {
        #[arg(long, value_enum)]
        kind: LatticeKind,
        left: String,
        right: String,
    },
    /// Lattice join
    Join {
        #[arg(long, value_enum)]
        kind: LatticeKind,
        left: String,
        right: String,
    },
    /// Hasse diagram of the full lattice over a prime set
    Hasse {
        /// comma-separated primes, e.g. 2,3,5
        #[arg(long)]
        primes: String,
        #[arg(long, value_enum)]
        kind: LatticeKind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Brute-force digraph constructions
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Satisfaction via the explicit shift quotient
    Satisfies { union: String, cond: String },
    /// Direct power of the first union's digraph, indexed by the second's vertices
    Power { base: String, exponent: String },
    /// Quotient of the power by the coordinate shift
    Quotient { base: String, exponent: String },
    /// Free structure of the second union generated by the first
    Free { generator: String, target: String },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum LatticeKind {
    /// cyclic loop conditions ordered by strength
    Cond,
    /// unions of cycles ordered by pp-constructability
    Uc,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

struct Ctx {
    json: bool,
    limits: Limits,
}

fn run(cli: &Cli) -> Result<u8, String> {
    let mut limits = Limits::default();
    if let Some(n) = cli.max_vertices {
        limits.max_vertices = n;
    }
    if let Some(n) = cli.max_divisors {
        limits.max_divisors = n;
    }
    if let Some(n) = cli.max_maps {
        limits.max_maps = n;
    }
    let ctx = Ctx {
        json: cli.json,
        limits,
    };
    match &cli.cmd {
        Cmd::Implies { args } => cmd_implies(&ctx, args),
        Cmd::Satisfies { union, cond } => cmd_satisfies(&ctx, union, cond),
        Cmd::Compare { left, right } => cmd_compare(&ctx, left, right),
        Cmd::Decompose { cond } => cmd_decompose(&ctx, cond),
        Cmd::Canon { expr } => cmd_canon(&ctx, expr),
        Cmd::Npc { union } => cmd_npc(&ctx, union),
        Cmd::Meet { kind, left, right } => cmd_meet_join(&ctx, *kind, left, right, true),
        Cmd::Join { kind, left, right } => cmd_meet_join(&ctx, *kind, left, right, false),
        Cmd::Hasse {
            primes,
            kind,
            format,
        } => cmd_hasse(&ctx, primes, *kind, *format),
        Cmd::Oracle { cmd } => match cmd {
            OracleCmd::Satisfies { union, cond } => cmd_oracle_satisfies(&ctx, union, cond),
            OracleCmd::Power { base, exponent } => cmd_oracle_graph(&ctx, base, exponent, "power"),
            OracleCmd::Quotient { base, exponent } => {
                cmd_oracle_graph(&ctx, base, exponent, "quotient")
            }
            OracleCmd::Free { generator, target } => {
                cmd_oracle_graph(&ctx, generator, target, "free")
            }
        },
    }
}

fn union_arg(s: &str) -> Result<Expr, String> {
    parse_kind(s, ExprKind::Union).map_err(|e| format!("in '{}': {}", s, e))
}

fn cond_arg(s: &str) -> Result<Condition, String> {
    let e = parse_kind(s, ExprKind::Cond).map_err(|e| format!("in '{}': {}", s, e))?;
    Ok(Condition::new(e.set))
}

fn core_err(e: cyclat_core::Error) -> String {
    e.to_string()
}

fn cond_label(c: &Condition) -> String {
    format!("S{}", c.carrier())
}

fn emit_json(doc: Value) {
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
}

fn bool_exit(answer: bool) -> u8 {
    if answer {
        0
    } else {
        1
    }
}

fn cmd_implies(ctx: &Ctx, args: &[String]) -> Result<u8, String> {
    let sep = args
        .iter()
        .position(|a| a == ":")
        .ok_or("usage: implies S{..} [S{..} ...] : S{..}")?;
    let (prem, concl) = args.split_at(sep);
    if prem.is_empty() || concl.len() != 2 {
        return Err("usage: implies S{..} [S{..} ...] : S{..}".into());
    }
    let premises: Vec<Condition> = prem.iter().map(|s| cond_arg(s)).collect::<Result<_, _>>()?;
    let conclusion = cond_arg(&concl[1])?;
    let answer = set_implies(&premises, &conclusion, &ctx.limits).map_err(core_err)?;
    // on failure, name a prime consequence of the conclusion that no premise
    // delivers, so the answer can be checked independently
    let witness = if answer || conclusion.is_trivial() {
        None
    } else {
        conclusion
            .decompose(&ctx.limits)
            .map_err(core_err)?
            .into_iter()
            .find(|q| {
                let qc = q.to_condition();
                !premises.iter().any(|p| p.implies(&qc))
            })
    };
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": "implies",
            "premises": premises.iter().map(cond_label).collect::<Vec<_>>(),
            "conclusion": cond_label(&conclusion),
            "answer": answer,
            "witness": witness.map(|q| json!({"unimplied": cond_label(&q.to_condition())})),
        }));
    } else {
        println!("{}", answer);
    }
    Ok(bool_exit(answer))
}

fn cmd_satisfies(ctx: &Ctx, union: &str, cond: &str) -> Result<u8, String> {
    let u = union_arg(union)?;
    let s = cond_arg(cond)?;
    let witness = poset::satisfies_witness(&u.set, &s, &ctx.limits).map_err(core_err)?;
    let answer = witness.is_none();
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": "satisfies",
            "union": render(&u),
            "cond": cond_label(&s),
            "answer": answer,
            "witness": witness.map(|w| {
                json!({"map": w.iter().map(|&(b, hb)| json!({"cycle": b, "image": hb})).collect::<Vec<_>>()})
            }),
        }));
    } else {
        println!("{}", answer);
    }
    Ok(bool_exit(answer))
}

fn cmd_compare(ctx: &Ctx, left: &str, right: &str) -> Result<u8, String> {
    let a = union_arg(left)?;
    let b = union_arg(right)?;
    let cmp = poset::compare(&a.set, &b.set, &ctx.limits).map_err(core_err)?;
    let sym = match cmp {
        CompareResult::StrictlyBelow => "<",
        CompareResult::StrictlyAbove => ">",
        CompareResult::Equivalent => "=",
        CompareResult::Incomparable => "||",
    };
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": "compare",
            "left": render(&a),
            "right": render(&b),
            "answer": sym,
        }));
    } else {
        println!("{}", sym);
    }
    Ok(0)
}

fn cmd_decompose(ctx: &Ctx, cond: &str) -> Result<u8, String> {
    let s = cond_arg(cond)?;
    let parts = s.decompose(&ctx.limits).map_err(core_err)?;
    let labels: Vec<String> = parts
        .iter()
        .map(|p| cond_label(&p.to_condition()))
        .collect();
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": "decompose",
            "cond": cond_label(&s),
            "parts": labels,
        }));
    } else {
        println!("{}", labels.join(" "));
    }
    Ok(0)
}

fn cmd_canon(ctx: &Ctx, input: &str) -> Result<u8, String> {
    let e = parse_expr(input).map_err(|err| format!("in '{}': {}", input, err))?;
    let out = match e.kind {
        ExprKind::Union => Expr {
            kind: ExprKind::Union,
            set: poset::canon(&e.set, &ctx.limits).map_err(core_err)?,
        },
        ExprKind::Cond => {
            // realize the decomposition: the reduced product of its prime
            // conditions, or the trivial condition itself
            let s = Condition::new(e.set.clone());
            let set = if s.is_trivial() {
                cyclat_core::CycleSet::loop_graph()
            } else {
                let mut acc = cyclat_core::CycleSet::loop_graph();
                for p in s.decompose(&ctx.limits).map_err(core_err)? {
                    acc = acc.times(&p.to_cycle_set()).map_err(core_err)?;
                }
                acc.reduce()
            };
            Expr {
                kind: ExprKind::Cond,
                set,
            }
        }
    };
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": "canon",
            "input": render(&e),
            "answer": render(&out),
        }));
    } else {
        println!("{}", render(&out));
    }
    Ok(0)
}

fn cmd_npc(ctx: &Ctx, union: &str) -> Result<u8, String> {
    let u = union_arg(union)?;
    let f = poset::npc(&u.set, &ctx.limits).map_err(core_err)?;
    let labels: Vec<String> = f
        .maximal_sets()
        .iter()
        .map(|p| cond_label(&p.to_condition()))
        .collect();
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": "npc",
            "union": render(&u),
            "maximal_sets": f.maximal_sets().iter().map(|p| p.primes().to_vec()).collect::<Vec<_>>(),
        }));
    } else if labels.is_empty() {
        println!("-");
    } else {
        println!("{}", labels.join(" "));
    }
    Ok(0)
}

fn cmd_meet_join(
    ctx: &Ctx,
    kind: LatticeKind,
    left: &str,
    right: &str,
    meet: bool,
) -> Result<u8, String> {
    let command = if meet { "meet" } else { "join" };
    let (inputs, out) = match kind {
        LatticeKind::Cond => {
            let a = cond_arg(left)?;
            let b = cond_arg(right)?;
            let r = if meet {
                poset::cond_meet(&a, &b).map_err(core_err)?
            } else {
                poset::cond_join(&a, &b).map_err(core_err)?
            };
            ((cond_label(&a), cond_label(&b)), cond_label(&r))
        }
        LatticeKind::Uc => {
            let a = union_arg(left)?;
            let b = union_arg(right)?;
            let r = if meet {
                poset::uc_meet(&a.set, &b.set, &ctx.limits).map_err(core_err)?
            } else {
                poset::uc_join(&a.set, &b.set, &ctx.limits).map_err(core_err)?
            };
            ((render(&a), render(&b)), format!("C{}", r))
        }
    };
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": command,
            "kind": if kind == LatticeKind::Cond { "cond" } else { "uc" },
            "left": inputs.0,
            "right": inputs.1,
            "answer": out,
        }));
    } else {
        println!("{}", out);
    }
    Ok(0)
}

/// Node labels for output: unions as the canonical `C{...}`; conditions as
/// their decomposition antichain `S{..}+S{..}` (trivial class as `S{1}`).
fn hasse_labels(g: &HasseGraph, limits: &Limits) -> Result<Vec<String>, String> {
    g.carriers
        .iter()
        .map(|c| match g.kind {
            HasseKind::Unions => Ok(format!("C{}", c)),
            HasseKind::Conditions => {
                let s = Condition::new(c.clone());
                if s.is_trivial() {
                    return Ok("S{1}".to_string());
                }
                let parts = s.decompose(limits).map_err(core_err)?;
                Ok(parts
                    .iter()
                    .map(|p| cond_label(&p.to_condition()))
                    .collect::<Vec<_>>()
                    .join("+"))
            }
        })
        .collect()
}

fn cmd_hasse(ctx: &Ctx, primes: &str, kind: LatticeKind, format: Format) -> Result<u8, String> {
    let parsed: Vec<u64> = primes
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| format!("bad prime '{}'", p)))
        .collect::<Result<_, _>>()?;
    let pset = PrimeSet::new(parsed).map_err(core_err)?;
    let hkind = match kind {
        LatticeKind::Uc => HasseKind::Unions,
        LatticeKind::Cond => HasseKind::Conditions,
    };
    let g = poset::enumerate_hasse(&pset, hkind).map_err(core_err)?;
    let labels = hasse_labels(&g, &ctx.limits)?;
    let format = if ctx.json { Format::Json } else { format };
    match format {
        Format::Json => emit_json(json!({
            "schema": 1,
            "command": "hasse",
            "kind": if kind == LatticeKind::Cond { "cond" } else { "uc" },
            "primes": pset.primes(),
            "nodes": labels,
            "covers": g.covers.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        })),
        Format::Dot => {
            // covers point from the smaller element up to the larger one
            println!("digraph hasse {{");
            println!("  rankdir=BT;");
            for l in &labels {
                println!("  \"{}\";", l);
            }
            for &(a, b) in &g.covers {
                println!("  \"{}\" -> \"{}\";", labels[a], labels[b]);
            }
            println!("}}");
        }
        Format::Text => {
            println!("nodes: {}", g.node_count());
            println!("covers: {}", g.cover_count());
            for l in &labels {
                println!("{}", l);
            }
            for &(a, b) in &g.covers {
                println!("{} < {}", labels[a], labels[b]);
            }
        }
    }
    Ok(0)
}

fn cmd_oracle_satisfies(ctx: &Ctx, union: &str, cond: &str) -> Result<u8, String> {
    let u = union_arg(union)?;
    let s = cond_arg(cond)?;
    let answer = oracle::oracle_satisfies(&u.set, &s, &ctx.limits).map_err(core_err)?;
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": "oracle satisfies",
            "union": render(&u),
            "cond": cond_label(&s),
            "answer": answer,
        }));
    } else {
        println!("{}", answer);
    }
    Ok(bool_exit(answer))
}

fn cmd_oracle_graph(ctx: &Ctx, left: &str, right: &str, which: &str) -> Result<u8, String> {
    let a = union_arg(left)?;
    let b = union_arg(right)?;
    let (extra, graph) = match which {
        "power" => (None, oracle::power_digraph(&a.set, &b.set, &ctx.limits).map_err(core_err)?),
        "quotient" => {
            let q = oracle::shift_quotient(&a.set, &b.set, &ctx.limits).map_err(core_err)?;
            (Some(q.base_vertex_count()), q.quotient().clone())
        }
        _ => (None, oracle::free_structure(&a.set, &b.set).map_err(core_err)?),
    };
    let lengths = graph.cycle_lengths().map_err(core_err)?;
    if ctx.json {
        emit_json(json!({
            "schema": 1,
            "command": format!("oracle {}", which),
            "left": render(&a),
            "right": render(&b),
            "base_vertices": extra,
            "vertices": graph.vertex_count(),
            "cycle_lengths": lengths,
        }));
    } else {
        if let Some(base) = extra {
            println!("base: {}", base);
        }
        println!("vertices: {}", graph.vertex_count());
        println!(
            "cycles: {}",
            lengths
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
    }
    Ok(0)
}
