//! The `qoperad` command line.
//!
//! [`run`] parses arguments, dispatches, and returns a [`CommandResult`]
//! holding a status, a JSON payload and a human rendering. Exit codes are 0
//! when a check is verified, 2 when it produced a counterexample and 1 on
//! errors. Permutations are written one-line (`[2,3,1]`) or as cycles
//! (`(1 2 3)`); an element of `P_G` is its values separated by `;`, listed in
//! group-element order, or the JSON document printed by `pg show --json`.
//! Tree, element and matrix arguments read standard input when given as `-`.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::free_operad::{parse_tree, NotationStyle, OpTree, Signature, Symbol};
use crate::group::{GroupDesc, GroupElem, GroupSpec};
use crate::norms::{complete_orbit_set, generated_suboperad, norm, qg_generators, DEFAULT_SATURATION_CAP};
use crate::perm::{
    block_permutation, block_sum, is_separable, is_simple, perm_from_rows, permuted_block_sum, skew_sum, to_matrix, Perm,
};
use crate::pg_operad::{
    candidate_count, element_count, find_decomposition, least_simple, not_fg_witness, PGElement, DEFAULT_SEARCH_CAP,
};
use crate::presentation::{
    find_uncovered_patterns, recover_tree_c3, schroeder, uncompose, verify_presentation, Counterexample, Presented,
    SchroederTable, VerifyOptions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Counterexample,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Counterexample => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub human_text: String,
    #[serde(skip)]
    pub json: bool,
}

impl CommandResult {
    fn ok(payload: Value, human_text: String) -> CommandResult {
        CommandResult { status: Status::Verified, payload, human_text, json: false }
    }

    fn counterexample(payload: Value, human_text: String) -> CommandResult {
        CommandResult { status: Status::Counterexample, payload, human_text, json: false }
    }

    fn error(message: String) -> CommandResult {
        CommandResult { status: Status::Error, payload: json!({ "error": message }), human_text: message, json: false }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// The text to print: pretty JSON with `--json`, the human rendering otherwise.
    pub fn output(&self) -> String {
        if self.json {
            let doc = json!({ "status": self.status, "payload": self.payload });
            serde_json::to_string_pretty(&doc).expect("json value")
        } else {
            self.human_text.clone()
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "qoperad", version, about = "Equivariant Barratt-Eccles operads, norms, and presentations of Q_G")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Group: c2, c3, cyclic:<m>, or cayley:<file> holding a JSON Cayley table.
    #[arg(long, global = true, default_value = "c2")]
    group: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Permutation calculus.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Elements of P_G.
    #[command(subcommand)]
    Pg(PgCmd),
    /// Trees of the free operad on e, ⊗, ⊠ (⊠ is the norm of the left-regular action).
    #[command(subcommand)]
    Tree(TreeCmd),
    /// Canonical form of a primitive tree (c2 or c3).
    Canonicalize { tree: String },
    /// List canonical trees of an arity (c2 or c3).
    Enumerate {
        #[arg(long)]
        arity: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Recover the canonical C3 tree from a JSON matrix pair {"g": rows, "g2": rows}.
    Recover {
        #[arg(long)]
        matrices: String,
    },
    /// Large Schröder number S_n.
    Schroeder {
        n: usize,
        /// Print S_0, …, S_n.
        #[arg(long)]
        list: bool,
    },
    /// Check the presentation of Q_G (c2 or c3) up to an arity.
    VerifyPresentation {
        #[arg(long)]
        max_arity: usize,
        /// Highest arity for the congruence-closure oracle.
        #[arg(long)]
        oracle_arity: Option<usize>,
        /// Highest arity for saturating the norm generators.
        #[arg(long)]
        saturation_arity: Option<usize>,
    },
    /// The primitive element with a simple value that is not generated from below.
    WitnessNotFg {
        #[arg(long)]
        arity: usize,
        /// Cap on candidate decompositions for the exhaustive check.
        #[arg(long)]
        cap: Option<u128>,
        /// Skip the exhaustive check and print the certificate only.
        #[arg(long)]
        certificate_only: bool,
    },
    /// Complete orbit set, norms, Q_G generators, and optionally saturation counts.
    Norms {
        #[arg(long)]
        arity: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum PermCmd {
    /// One-line form, cycles, matrix, inverse, and whether simple or separable.
    Show { perm: String },
    /// `a∘b`, i.e. apply b first.
    Compose { a: String, b: String },
    /// Block permutation σ⟨k_1, …, k_n⟩.
    Block { sigma: String, sizes: Vec<usize> },
    /// Block sum τ_1 ⊕ ⋯ ⊕ τ_n.
    Sum { perms: Vec<String> },
    /// Skew sum.
    Skew { a: String, b: String },
    /// Permuted block sum σ⟨τ_1, …, τ_n⟩.
    Pbs { sigma: String, taus: Vec<String> },
    /// Lexicographically least simple permutation of Σ_n.
    LeastSimple { n: usize },
}

#[derive(Subcommand, Debug)]
enum PgCmd {
    /// Values, matrices, primitive factorization and simplicity certificate.
    Show { element: String },
    /// Composition γ(f; h_1, …, h_k).
    Gamma { f: String, hs: Vec<String> },
    /// Partial composition f ∘_i h (i is 1-indexed).
    Partial { f: String, i: usize, h: String },
    /// Left action of the group element with index a.
    GAct { f: String, a: usize },
    /// Right action of a permutation.
    SigmaAct { f: String, sigma: String },
    /// Search exhaustively for a decomposition from below.
    Below {
        f: String,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// |P_G(n)| and the number of primitive elements.
    Count { n: usize },
}

#[derive(Subcommand, Debug)]
enum TreeCmd {
    /// Evaluate φ(tree).
    Eval { tree: String },
    /// Draw the tree.
    Render {
        tree: String,
        #[arg(long)]
        ascii: bool,
    },
    /// Graft `other` onto leaf i (1-indexed).
    Graft { tree: String, i: usize, other: String },
    /// JSON form.
    Json { tree: String },
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandResult::ok(json!({ "help": text }), text)
                }
                _ => CommandResult::error(text),
            };
        }
    };
    let json = cli.json;
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => return CommandResult::error(format!("thread pool: {e}")),
    };
    let mut result = pool.install(|| dispatch(&cli)).unwrap_or_else(|e| CommandResult::error(format!("error: {e}")));
    result.json = json;
    result
}

fn dispatch(cli: &Cli) -> Result<CommandResult> {
    match &cli.command {
        Command::Perm(cmd) => perm_cmd(cmd),
        Command::Pg(cmd) => pg_cmd(&load_group(&cli.group)?, cmd),
        Command::Tree(cmd) => tree_cmd(&load_group(&cli.group)?, cmd),
        Command::Canonicalize { tree } => {
            let p: Presented = cli.group.parse()?;
            let t = parse_tree(&read_arg(tree)?)?;
            let c = p.canonicalize(&t)?;
            let text = format!("{c}\n{}", c.render(NotationStyle::Unicode));
            Ok(CommandResult::ok(json!({ "group": p, "input": t.to_string(), "canonical": c.to_string(), "tree": c }), text))
        }
        Command::Enumerate { arity, count_only } => {
            let p: Presented = cli.group.parse()?;
            let trees = p.enumerate_canonical(*arity);
            if *count_only {
                return Ok(CommandResult::ok(
                    json!({ "group": p, "arity": arity, "count": trees.len() }),
                    trees.len().to_string(),
                ));
            }
            let text: Vec<String> = trees.iter().map(ToString::to_string).collect();
            Ok(CommandResult::ok(
                json!({ "group": p, "arity": arity, "count": trees.len(), "trees": text }),
                text.join("\n"),
            ))
        }
        Command::Recover { matrices } => recover_cmd(matrices),
        Command::Schroeder { n, list } => {
            if *list {
                let mut table = SchroederTable::new();
                let values: Vec<u128> = (0..=*n).map(|k| table.get(k)).collect::<Result<_>>()?;
                let text = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
                let strings: Vec<String> = values.iter().map(ToString::to_string).collect();
                return Ok(CommandResult::ok(json!({ "n": n, "values": strings }), text));
            }
            let s = schroeder(*n)?;
            Ok(CommandResult::ok(json!({ "n": n, "value": s.to_string() }), s.to_string()))
        }
        Command::VerifyPresentation { max_arity, oracle_arity, saturation_arity } => {
            let p: Presented = cli.group.parse()?;
            let mut opts = VerifyOptions::quick(p, *max_arity);
            if let Some(k) = oracle_arity {
                opts.oracle_arity = *k;
            }
            if let Some(k) = saturation_arity {
                opts.saturation_arity = *k;
            }
            verify_cmd(p, &opts)
        }
        Command::WitnessNotFg { arity, cap, certificate_only } => {
            witness_cmd(&load_group(&cli.group)?, *arity, cap.unwrap_or(DEFAULT_SEARCH_CAP), *certificate_only)
        }
        Command::Norms { arity } => norms_cmd(&load_group(&cli.group)?, *arity),
    }
}

fn load_group(spec: &str) -> Result<Arc<GroupDesc>> {
    spec.parse::<GroupSpec>()?.load()
}

/// The argument itself, or standard input for `-`.
fn read_arg(arg: &str) -> Result<String> {
    if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(format!("stdin: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_perm(s: &str) -> Result<Perm> {
    s.parse()
}

fn parse_element(group: &Arc<GroupDesc>, arg: &str) -> Result<PGElement> {
    let text = read_arg(arg)?;
    let text = text.trim();
    let sig = Signature::regular(group.clone());
    let named = match text {
        "e" => Some(Symbol::E),
        "⊗" | "tensor" | "T" => Some(Symbol::Tensor),
        "⊠" | "box" | "B" => Some(Symbol::Box),
        _ => None,
    };
    if let Some(symbol) = named {
        return Ok(sig.generator(symbol).clone());
    }
    if text.starts_with('{') {
        let f: PGElement = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if **f.group() != **group {
            return Err(Error::GroupMismatch);
        }
        return Ok(f);
    }
    let values = text.split(';').map(parse_perm).collect::<Result<Vec<_>>>()?;
    PGElement::new(group.clone(), values)
}

fn element_text(f: &PGElement) -> String {
    let mut out = String::new();
    for (i, v) in f.values().iter().enumerate() {
        let _ = writeln!(out, "{:>4} ↦ {}  {}", GroupElem(i).to_string(), v, v.to_cycle_string());
    }
    out
}

fn perm_cmd(cmd: &PermCmd) -> Result<CommandResult> {
    let show = |p: &Perm| -> Result<CommandResult> {
        let separable = p.is_empty() || is_separable(p)?;
        let text = format!(
            "one-line {p}\ncycles   {}\ninverse  {}\nsimple {}, separable {}\n{}",
            p.to_cycle_string(),
            p.inverse(),
            is_simple(p),
            separable,
            to_matrix(p)
        );
        Ok(CommandResult::ok(
            json!({
                "one_line": p, "cycles": p.to_cycle_string(), "inverse": p.inverse(),
                "simple": is_simple(p), "separable": separable, "matrix": to_matrix(p).entries(),
            }),
            text,
        ))
    };
    let single = |p: Perm| CommandResult::ok(json!({ "result": p }), p.to_string());
    match cmd {
        PermCmd::Show { perm } => show(&parse_perm(perm)?),
        PermCmd::Compose { a, b } => Ok(single(parse_perm(a)?.compose(&parse_perm(b)?)?)),
        PermCmd::Block { sigma, sizes } => Ok(single(block_permutation(&parse_perm(sigma)?, sizes)?)),
        PermCmd::Sum { perms } => {
            let ps = perms.iter().map(|p| parse_perm(p)).collect::<Result<Vec<_>>>()?;
            Ok(single(block_sum(&ps)))
        }
        PermCmd::Skew { a, b } => Ok(single(skew_sum(&parse_perm(a)?, &parse_perm(b)?))),
        PermCmd::Pbs { sigma, taus } => {
            let ts = taus.iter().map(|p| parse_perm(p)).collect::<Result<Vec<_>>>()?;
            Ok(single(permuted_block_sum(&parse_perm(sigma)?, &ts)?))
        }
        PermCmd::LeastSimple { n } => match least_simple(*n) {
            Some(p) => Ok(single(p)),
            None => Err(Error::Unsupported(format!("Σ_{n} has no simple permutation of size > 3"))),
        },
    }
}

fn pg_cmd(group: &Arc<GroupDesc>, cmd: &PgCmd) -> Result<CommandResult> {
    let single = |f: PGElement| CommandResult::ok(serde_json::to_value(&f).expect("element"), element_text(&f));
    match cmd {
        PgCmd::Show { element } => {
            let f = parse_element(group, element)?;
            let (prim, sigma) = f.primitivize();
            let cert = f.simple_certificate();
            let mut text = element_text(&f);
            let _ = writeln!(text, "primitive part ({}) then ·{}", prim.values().iter().map(ToString::to_string).join(" ; "), sigma);
            match cert {
                Some(g) => {
                    let _ = writeln!(text, "f({g}) is simple: not generated from below");
                }
                None => {
                    let _ = writeln!(text, "no simple value");
                }
            }
            for (i, v) in f.values().iter().enumerate() {
                let _ = writeln!(text, "M_f({}):\n{}", GroupElem(i), to_matrix(v));
            }
            Ok(CommandResult::ok(
                json!({ "element": f, "primitive": prim, "sigma": sigma, "simple_at": cert.map(|g| g.to_string()) }),
                text,
            ))
        }
        PgCmd::Gamma { f, hs } => {
            let f = parse_element(group, f)?;
            let hs = hs.iter().map(|h| parse_element(group, h)).collect::<Result<Vec<_>>>()?;
            Ok(single(f.gamma(&hs)?))
        }
        PgCmd::Partial { f, i, h } => Ok(single(parse_element(group, f)?.partial_compose(*i, &parse_element(group, h)?)?)),
        PgCmd::GAct { f, a } => Ok(single(parse_element(group, f)?.g_act(group.elem(*a)?)?)),
        PgCmd::SigmaAct { f, sigma } => Ok(single(parse_element(group, f)?.sigma_act(&parse_perm(sigma)?)?)),
        PgCmd::Below { f, cap } => {
            let f = parse_element(group, f)?;
            match find_decomposition(&f, cap.unwrap_or(DEFAULT_SEARCH_CAP))? {
                Some(d) => {
                    let text = format!(
                        "generated from below: f = γ(s; h_1, …)·{}\ns:\n{}{}",
                        d.sigma,
                        element_text(&d.outer),
                        d.inner.iter().enumerate().map(|(i, h)| format!("h_{}:\n{}", i + 1, element_text(h))).collect::<String>()
                    );
                    Ok(CommandResult::ok(json!({ "generated_from_below": true, "decomposition": d }), text))
                }
                None => Ok(CommandResult::ok(
                    json!({ "generated_from_below": false }),
                    "not generated from below (exhaustive search)".to_string(),
                )),
            }
        }
        PgCmd::Count { n } => {
            let total = element_count(group.order(), *n).ok_or_else(|| Error::Overflow(format!("|P_G({n})|")))?;
            let prim = element_count(group.order() - 1, *n).ok_or_else(|| Error::Overflow(format!("|Prim P_G({n})|")))?;
            Ok(CommandResult::ok(
                json!({ "n": n, "elements": total.to_string(), "primitive": prim.to_string() }),
                format!("|P_G({n})| = {total}, primitive {prim}"),
            ))
        }
    }
}

fn tree_cmd(group: &Arc<GroupDesc>, cmd: &TreeCmd) -> Result<CommandResult> {
    let sig = Signature::regular(group.clone());
    let tree = |s: &str| -> Result<OpTree> {
        let t = parse_tree(&read_arg(s)?)?;
        t.validate(&sig)?;
        Ok(t)
    };
    match cmd {
        TreeCmd::Eval { tree: t } => {
            let t = tree(t)?;
            let f = t.evaluate(&sig)?;
            Ok(CommandResult::ok(json!({ "tree": t.to_string(), "value": f }), format!("{t}\n{}", element_text(&f))))
        }
        TreeCmd::Render { tree: t, ascii } => {
            let style = if *ascii { NotationStyle::Ascii } else { NotationStyle::Unicode };
            let t = tree(t)?;
            Ok(CommandResult::ok(json!({ "tree": t.to_notation(style), "diagram": t.render(style) }), t.render(style)))
        }
        TreeCmd::Graft { tree: t, i, other } => {
            let r = tree(t)?.graft(*i, &tree(other)?)?;
            Ok(CommandResult::ok(json!({ "tree": r.to_string(), "json": r }), r.to_string()))
        }
        TreeCmd::Json { tree: t } => {
            let t = tree(t)?;
            let v = t.to_json();
            Ok(CommandResult::ok(v.clone(), serde_json::to_string_pretty(&v).expect("json value")))
        }
    }
}

#[derive(serde::Deserialize)]
struct MatrixPair {
    g: Vec<Vec<u8>>,
    g2: Vec<Vec<u8>>,
}

fn recover_cmd(matrices: &str) -> Result<CommandResult> {
    let text = if matrices == "-" {
        read_arg("-")?
    } else {
        std::fs::read_to_string(matrices).map_err(|e| Error::Parse(format!("{matrices}: {e}")))?
    };
    let pair: MatrixPair = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{matrices}: {e}")))?;
    let (g, g2) = (perm_from_rows(pair.g)?, perm_from_rows(pair.g2)?);
    let group = GroupDesc::cyclic(3)?;
    let f = PGElement::new(group, vec![Perm::identity(g.len()), g, g2])?;

    let mut steps = Vec::new();
    let mut text = String::new();
    let mut cur = f.clone();
    while cur.arity() >= 2 {
        let patterns = find_uncovered_patterns(&cur)?;
        let Some(&(t, j)) = patterns.first() else { break };
        let listed: Vec<String> = patterns.iter().map(|(t, j)| format!("{t} at column {j}")).collect();
        let _ = writeln!(text, "arity {}: {}; peel {t} at column {j}", cur.arity(), listed.join(", "));
        steps.push(json!({ "arity": cur.arity(), "patterns": patterns.iter().map(|(t, j)| json!({ "node": t, "column": j })).collect::<Vec<_>>(), "peeled": { "node": t, "column": j } }));
        cur = uncompose(&cur, t, j)?;
    }
    match recover_tree_c3(&f) {
        Ok(t) => {
            let _ = writeln!(text, "{t}");
            text.push_str(&t.render(NotationStyle::Unicode));
            Ok(CommandResult::ok(json!({ "in_q": true, "tree": t.to_string(), "json": t, "steps": steps }), text))
        }
        Err(Error::NotInQ { arity, element }) => {
            let _ = writeln!(text, "not in Q_C3: no uncovered-node pattern at arity {arity}");
            Ok(CommandResult::counterexample(
                json!({ "in_q": false, "stuck_arity": arity, "remaining": element, "steps": steps }),
                text,
            ))
        }
        Err(e) => Err(e),
    }
}

fn verify_cmd(p: Presented, opts: &VerifyOptions) -> Result<CommandResult> {
    let report = verify_presentation(p, opts)?;
    let mut text = format!("presentation of Q_{}: {} relations, each sound under φ\n", p.to_string().to_uppercase(), report.relations.len());
    let _ = writeln!(text, "{:>5} {:>10} {:>10} {:>10} {:>10} {:>10}", "arity", "canonical", "values", "saturated", "universe", "classes");
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    for row in &report.arities {
        let _ = writeln!(
            text,
            "{:>5} {:>10} {:>10} {:>10} {:>10} {:>10}",
            row.arity,
            row.canonical_trees,
            row.distinct_values,
            opt(row.saturation_primitive),
            opt(row.oracle_universe),
            opt(row.oracle_classes)
        );
    }
    let payload = serde_json::to_value(&report).expect("report");
    Ok(match &report.counterexample {
        None => {
            text.push_str("verified");
            CommandResult::ok(payload, text)
        }
        Some(c) => {
            let _ = write!(text, "COUNTEREXAMPLE: {}", describe(c));
            CommandResult::counterexample(payload, text)
        }
    })
}

fn describe(c: &Counterexample) -> String {
    serde_json::to_string(c).expect("counterexample")
}

fn witness_cmd(group: &Arc<GroupDesc>, n: usize, cap: u128, certificate_only: bool) -> Result<CommandResult> {
    let w = not_fg_witness(group, n)?;
    let passes = w.element.nonsimple_necessary_test();
    let mut text = format!("witness in P_G({n}):\n{}", element_text(&w.element));
    let _ = writeln!(text, "f({}) = {} is simple, so the nonsimple necessary test fails (returns {passes})", w.at, w.simple);
    let mut payload = json!({ "witness": w, "nonsimple_necessary_test": passes });
    let candidates = candidate_count(group.order(), n);
    let feasible = candidates.is_some_and(|c| c <= cap);
    if certificate_only || !feasible {
        let _ = write!(
            text,
            "exhaustive check skipped ({} candidates, cap {cap}); certificate only",
            candidates.map_or("overflowing".to_string(), |c| c.to_string())
        );
        payload["exhaustive"] = Value::Null;
        return Ok(CommandResult::ok(payload, text));
    }
    match find_decomposition(&w.element, cap)? {
        None => {
            let _ = write!(text, "exhaustive search over {} candidates: not generated from below", candidates.unwrap_or(0));
            payload["exhaustive"] = json!({ "candidates": candidates.map(|c| c.to_string()), "generated_from_below": false });
            Ok(CommandResult::ok(payload, text))
        }
        Some(d) => {
            let _ = write!(text, "COUNTEREXAMPLE: decomposition found with outer arity {}", d.outer.arity());
            payload["exhaustive"] = json!({ "generated_from_below": true, "decomposition": d });
            Ok(CommandResult::counterexample(payload, text))
        }
    }
}

fn norms_cmd(group: &Arc<GroupDesc>, arity: Option<usize>) -> Result<CommandResult> {
    let orbits = complete_orbit_set(group)?;
    let mut text = format!("group of order {}: {} orbit(s) in the complete set\n", group.order(), orbits.len());
    let mut orbit_json = Vec::new();
    for o in &orbits {
        let f = norm(o);
        let _ = writeln!(text, "orbit {} (size {}):\n{}", o.label(), o.size(), element_text(&f));
        orbit_json.push(json!({ "label": o.label(), "size": o.size(), "action": o.action(), "norm": f }));
    }
    let gens = qg_generators(group)?;
    let names: Vec<&str> = gens.generators.iter().map(|(n, _)| n.as_str()).collect();
    let _ = writeln!(text, "Q_G generators: {}", names.join(", "));
    let mut payload = json!({ "order": group.order(), "orbits": orbit_json, "generators": names });
    if let Some(n) = arity {
        let sat = generated_suboperad(&gens, n, DEFAULT_SATURATION_CAP)?;
        let counts: Vec<usize> = (0..=n).map(|k| sat.primitive_count(k)).collect();
        let _ = write!(text, "primitive elements of Q_G by arity 0..={n}: {counts:?}");
        payload["primitive_counts"] = json!(counts);
    }
    Ok(CommandResult::ok(payload, text))
}
