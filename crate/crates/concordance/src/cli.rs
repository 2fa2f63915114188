//! Command-line front end: every pipeline stage behind one subcommand.
//!
//! Output is a table (default), JSON with a `schema_version` field and, for
//! plumbing graphs, Graphviz DOT. Identical requests render byte-identical
//! output. Validation failures exit with status 2 and a one-line reason on
//! stderr; internal consistency failures exit with status 3. The `NO_COLOR`
//! environment variable disables the only color this tool emits (the
//! selftest pass/fail markers on a terminal).

use std::io::IsTerminal;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::cover::cable_disk_data;
use crate::exact::{hj_expand, parse_rational, rational_to_json, Rational};
use crate::lattice::mu_bar;
use crate::lt_signature::{sigma_sum_closed_form, TorusKnotProfile};
use crate::obstruction::{kappa_torus, obstruction_report};
use crate::plumbing::{
    brieskorn_plumbing, seifert_invariants, special_family_plumbing, BrieskornParams, PlumbingTree,
};
use crate::selftest::{run_acceptance, CRITERION_COUNT};
use crate::{Error, Result};

/// Version tag of the JSON output schema.
pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "concordance",
    version,
    about = "Exact invariants of Brieskorn spheres, torus knots, and figure-eight cables",
    after_help = "Set NO_COLOR to suppress the selftest color markers."
)]
pub struct Cli {
    #[command(subcommand)]
    pub request: Request,
}

/// A validated command: one pipeline stage plus output options.
#[derive(Debug, Clone, Subcommand)]
pub enum Request {
    /// Negative continued fraction expansion of p/q.
    Cf {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        json: bool,
    },
    /// Seifert invariants of Sigma(2^k, 2^k m, q).
    Seifert {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        /// Defaults to the twist-family value 2^k 10m - 1.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Negative definite plumbing graph bounding Sigma(2^k, 2^k m, q).
    Plumbing {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        /// Defaults to the twist family, rendered in its special presentation.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// Emit Graphviz DOT instead of a table.
        #[arg(long)]
        dot: bool,
    },
    /// The mu_bar invariant of the plumbed homology sphere.
    Mubar {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        /// Defaults to the twist-family value 2^k 10m - 1.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Levine-Tristram signature of T(p, q) at e^(2 pi i x / 2).
    Ltsig {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// Evaluation parameter in (0, 1), as a fraction like 1/6.
        #[arg(long, value_parser = rational_arg)]
        x: Rational,
        /// Use the mirror image (negates all signatures).
        #[arg(long)]
        mirror: bool,
        #[arg(long)]
        json: bool,
    },
    /// Root-of-unity signature sum sigma^(n) of T(p, q).
    Sigsum {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        mirror: bool,
        /// Evaluate the cable-family closed form instead of counting jumps
        /// (needs n | p and p | q+1).
        #[arg(long)]
        closed_form: bool,
        #[arg(long)]
        json: bool,
    },
    /// Branched-cover homology of the cable concordance disks.
    Cover {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        copies: u64,
        #[arg(long)]
        json: bool,
    },
    /// kappa^(k) of the torus knot T(2^k m, q).
    Kappa {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        /// Defaults to the twist-family value 2^k 10m - 1.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Full non-sliceness audit trail for c copies of the (2^k m, 1)-cable
    /// of the figure-eight knot.
    Obstruct {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        copies: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run the embedded acceptance grid and print one line per criterion.
    Selftest {
        #[arg(long)]
        json: bool,
    },
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|err| err.to_string())
}

fn envelope(payload: Value) -> String {
    let mut payload = payload;
    payload
        .as_object_mut()
        .expect("every JSON payload is an object")
        .insert("schema_version".into(), json!(SCHEMA_VERSION));
    serde_json::to_string_pretty(&payload).expect("JSON payloads serialize")
}

fn family_q(k: u32, m: u64, q: Option<u64>) -> Result<u64> {
    match q {
        Some(q) => Ok(q),
        None => Ok(BrieskornParams::special_family(k, m)?.q()),
    }
}

/// The graph a (k, m, q) request refers to: the special presentation for the
/// twist family when q is omitted, the Seifert-derived graph otherwise.
fn requested_tree(k: u32, m: u64, q: Option<u64>) -> Result<(PlumbingTree, u64, &'static str)> {
    match q {
        None => {
            let params = BrieskornParams::special_family(k, m)?;
            Ok((special_family_plumbing(k, m)?, params.q(), "special"))
        }
        Some(q) => {
            let params = BrieskornParams::new(k, m, q)?;
            Ok((brieskorn_plumbing(&params)?, q, "seifert"))
        }
    }
}

fn plumbing_table(tree: &PlumbingTree) -> String {
    let mut lines = vec![format!("central weight: {}", tree.central_weight())];
    for leg in tree.legs() {
        let weights: Vec<String> = leg.iter().map(|w| w.to_string()).collect();
        lines.push(format!("leg: [{}]", weights.join(", ")));
    }
    lines.push(format!("nodes: {}", tree.node_count()));
    lines.join("\n")
}

/// Render a request to its output text. Pure and deterministic: identical
/// requests produce byte-identical output.
pub fn dispatch(request: &Request) -> Result<String> {
    dispatch_colored(request, false)
}

fn dispatch_colored(request: &Request, color: bool) -> Result<String> {
    match request {
        Request::Cf { p, q, json } => {
            let cf = hj_expand(*p, *q)?;
            if *json {
                Ok(envelope(json!({
                    "p": p,
                    "q": q,
                    "terms": cf.terms(),
                    "value": rational_to_json(&cf.value()),
                })))
            } else {
                let terms: Vec<String> = cf.terms().iter().map(|t| t.to_string()).collect();
                Ok(format!("{p}/{q} = [{}]", terms.join(", ")))
            }
        }
        Request::Seifert { k, m, q, json } => {
            let q = family_q(*k, *m, *q)?;
            let params = BrieskornParams::new(*k, *m, q)?;
            let data = seifert_invariants(&params)?;
            if *json {
                let mut payload = data.to_json();
                let object = payload.as_object_mut().expect("object payload");
                object.insert("k".into(), json!(k));
                object.insert("m".into(), json!(m));
                object.insert("q".into(), json!(q));
                Ok(envelope(payload))
            } else {
                let mut lines = vec![
                    format!(
                        "Seifert data of Sigma({}, {}, {q})",
                        params.cover_order(),
                        params.torus_p()?
                    ),
                    format!("euler weight: {}", data.euler_weight),
                ];
                for (a, b) in &data.fibers {
                    lines.push(format!("fiber: ({a}, {b})"));
                }
                Ok(lines.join("\n"))
            }
        }
        Request::Plumbing { k, m, q, json, dot } => {
            let (tree, q, graph) = requested_tree(*k, *m, *q)?;
            if *dot {
                Ok(tree.to_dot())
            } else if *json {
                let mut payload = tree.to_json();
                let object = payload.as_object_mut().expect("object payload");
                object.insert("k".into(), json!(k));
                object.insert("m".into(), json!(m));
                object.insert("q".into(), json!(q));
                object.insert("graph".into(), json!(graph));
                object.insert("nodes".into(), json!(tree.node_count()));
                Ok(envelope(payload))
            } else {
                Ok(plumbing_table(&tree))
            }
        }
        Request::Mubar { k, m, q, json } => {
            let (tree, q, graph) = requested_tree(*k, *m, *q)?;
            let mu = mu_bar(&tree)?;
            if *json {
                Ok(envelope(json!({
                    "k": k,
                    "m": m,
                    "q": q,
                    "graph": graph,
                    "mu_bar": rational_to_json(&mu),
                })))
            } else {
                Ok(mu.to_string())
            }
        }
        Request::Ltsig {
            p,
            q,
            x,
            mirror,
            json,
        } => {
            let profile = TorusKnotProfile::new(*p, *q, *mirror)?;
            let value = profile.signature_at(x)?;
            if *json {
                Ok(envelope(json!({
                    "p": p,
                    "q": q,
                    "mirrored": mirror,
                    "x": rational_to_json(x),
                    "value": value.value,
                    "at_jump": value.at_jump,
                })))
            } else if value.at_jump {
                Ok(format!(
                    "{} (at a jump: average of the one-sided limits)",
                    value.value
                ))
            } else {
                Ok(value.value.to_string())
            }
        }
        Request::Sigsum {
            p,
            q,
            n,
            mirror,
            closed_form,
            json,
        } => {
            let (value, warnings) = if *closed_form {
                if *n == 0 || p % n != 0 || (q + 1) % p != 0 {
                    return Err(Error::Precondition(format!(
                        "closed form needs n | p and p | q+1, got (p, q, n) = ({p}, {q}, {n})"
                    )));
                }
                let value = sigma_sum_closed_form(*n, p / n, (q + 1) / p)?;
                (if *mirror { -value } else { value }, Vec::new())
            } else {
                let sum = TorusKnotProfile::new(*p, *q, *mirror)?.sigma_sum(*n)?;
                (sum.value, sum.jump_warnings)
            };
            if *json {
                let warnings: Vec<Value> = warnings.iter().map(rational_to_json).collect();
                Ok(envelope(json!({
                    "p": p,
                    "q": q,
                    "n": n,
                    "mirrored": mirror,
                    "closed_form": closed_form,
                    "value": value,
                    "jump_warnings": warnings,
                })))
            } else {
                let mut lines = vec![value.to_string()];
                for x in &warnings {
                    lines.push(format!(
                        "warning: {x} lies in the jump set (averaged value)"
                    ));
                }
                Ok(lines.join("\n"))
            }
        }
        Request::Cover { k, m, copies, json } => {
            let data = cable_disk_data(*k, *m, *copies)?;
            if *json {
                Ok(envelope(data.to_json()))
            } else {
                Ok([
                    format!("class square: {}", data.class_square),
                    format!("genus: {}", data.genus),
                    format!(
                        "b+ of the {}-fold cover: {}",
                        data.cover_order(),
                        data.b_plus_cover
                    ),
                    format!(
                        "b+ of the {}-fold cover: {}",
                        data.cover_order() / 2,
                        data.b_plus_half_cover
                    ),
                    format!(
                        "signature of the {}-fold cover: {}",
                        data.cover_order(),
                        data.sigma_cover
                    ),
                ]
                .join("\n"))
            }
        }
        Request::Kappa { k, m, q, json } => {
            let q = family_q(*k, *m, *q)?;
            let value = kappa_torus(*k, *m, q)?;
            if *json {
                let mut payload = value.to_json();
                let object = payload.as_object_mut().expect("object payload");
                object.insert("m".into(), json!(m));
                object.insert("q".into(), json!(q));
                Ok(envelope(payload))
            } else {
                Ok(value.value().to_string())
            }
        }
        Request::Obstruct { k, m, copies, json } => {
            let report = obstruction_report(*k, *m, *copies)?;
            if *json {
                Ok(envelope(report.to_json()))
            } else {
                let mut lines = vec![
                    format!("parameters: k = {k}, m = {m}, copies = {copies}"),
                    format!("cable parameter p: {}", report.cable_p),
                    format!(
                        "companion torus knot: {}",
                        report.kappa_torus.knot_description()
                    ),
                    format!("mu_bar: {}", report.mu_bar),
                    format!("kappa of the companion: {}", report.kappa_torus.value()),
                    format!(
                        "kappa of the incoming sum: {}",
                        report.kappa_torus_total.value()
                    ),
                    format!("delta_R of the companion: {}", report.delta_r_torus),
                    format!("class square: {}", report.cover.class_square),
                    format!("b+ of the full cover: {}", report.cover.b_plus_cover),
                    format!("b+ of the half cover: {}", report.cover.b_plus_half_cover),
                    format!("signature of the full cover: {}", report.cover.sigma_cover),
                    format!("b+ difference: {}", report.bplus_diff),
                    format!("inequality left side: {}", report.inequality_lhs),
                    format!("kappa lower bound: {}", report.kappa_lower_bound),
                    format!("verdict: {}", report.verdict),
                ];
                for note in &report.external_results {
                    lines.push(format!("external: {note}"));
                }
                Ok(lines.join("\n"))
            }
        }
        Request::Selftest { json } => {
            let outcomes = run_acceptance();
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if *json {
                let criteria: Vec<Value> = outcomes
                    .iter()
                    .map(|o| {
                        json!({
                            "id": o.id,
                            "name": o.name,
                            "passed": o.passed,
                            "detail": o.detail,
                        })
                    })
                    .collect();
                let payload = envelope(json!({
                    "criteria": criteria,
                    "passed": failed == 0,
                }));
                if failed == 0 {
                    Ok(payload)
                } else {
                    Err(Error::Consistency(format!(
                        "{failed} of {CRITERION_COUNT} acceptance criteria failed:\n{payload}"
                    )))
                }
            } else {
                let mut lines = Vec::new();
                for o in &outcomes {
                    let marker = match (o.passed, color) {
                        (true, false) => "PASS".to_string(),
                        (false, false) => "FAIL".to_string(),
                        (true, true) => "\x1b[32mPASS\x1b[0m".to_string(),
                        (false, true) => "\x1b[31mFAIL\x1b[0m".to_string(),
                    };
                    lines.push(format!(
                        "criterion {:2}: {marker}  {} ({})",
                        o.id, o.name, o.detail
                    ));
                }
                lines.push(format!(
                    "{} of {CRITERION_COUNT} acceptance criteria passed",
                    outcomes.len() - failed
                ));
                let text = lines.join("\n");
                if failed == 0 {
                    Ok(text)
                } else {
                    Err(Error::Consistency(format!(
                        "{failed} of {CRITERION_COUNT} acceptance criteria failed:\n{text}"
                    )))
                }
            }
        }
    }
}

/// Parse the process arguments, dispatch, print, and return the exit status:
/// 0 on success, 2 on validation errors, 3 on internal consistency errors.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let color = std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
    match dispatch_colored(&cli.request, color) {
        Ok(text) => {
            println!("{text}");
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
