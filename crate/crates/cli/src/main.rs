//! `wat` — Wheeler automata toolkit, command line front end.
//!
//! Every subcommand reads the text automaton format, prints a human-readable
//! report (or a machine-readable one with `--json`) and exits with
//! 0 = positive verdict / success, 1 = negative verdict, 2 = input error,
//! 3 = resource cap exceeded. Caps are configurable per invocation via flags
//! or the `WAT_DET_CAP`, `WAT_ENUM_CAP`, `WAT_ITER_CAP` environment
//! variables; flags win.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wat_core::colex::{
    check_wheeler_conditions, colex_partial_order_dfa, is_wheeler_dfa, is_wheeler_nfa_bruteforce,
    TotalOrder, WheelerCertificate,
};
use wat_core::format;
use wat_core::gadgets;
use wat_core::lang;
use wat_core::minwdfa;
use wat_core::oracle;
use wat_core::{Dfa, Error, Nfa};

#[derive(Parser)]
#[command(name = "wat", version, about = "co-lex ordered automata: Wheeler orders, languages and minimum WDFAs")]
struct Cli {
    /// Emit a machine-readable JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(flatten)]
    caps: CapArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct CapArgs {
    /// Cap on determinization subsets (env WAT_DET_CAP)
    #[arg(long, global = true)]
    det_cap: Option<usize>,

    /// Cap on enumeration word length (env WAT_ENUM_CAP)
    #[arg(long, global = true)]
    enum_cap: Option<usize>,

    /// Cap on fingerprint iterations (env WAT_ITER_CAP)
    #[arg(long, global = true)]
    iter_cap: Option<usize>,
}

struct Caps {
    det: usize,
    enum_len: usize,
    iter: Option<usize>,
}

impl Caps {
    fn resolve(args: &CapArgs) -> Caps {
        let env = |name: &str| std::env::var(name).ok().and_then(|v| v.parse().ok());
        Caps {
            det: args.det_cap.or_else(|| env("WAT_DET_CAP")).unwrap_or(wat_core::DEFAULT_DET_CAP),
            enum_len: args
                .enum_cap
                .or_else(|| env("WAT_ENUM_CAP"))
                .unwrap_or(wat_core::DEFAULT_ENUM_CAP),
            iter: args.iter_cap.or_else(|| env("WAT_ITER_CAP")),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Remove unreachable and dead states
    Trim { file: String },
    /// Determinize, then minimize
    Detmin { file: String },
    /// Product intersection of two DFAs
    Product { left: String, right: String },
    /// Compute and verify the Wheeler order of a DFA
    IsWheelerDfa { file: String },
    /// Exhaustive Wheeler order search for an NFA (or check a claimed order)
    IsWheelerNfa {
        file: String,
        /// State-count cap for the exhaustive search
        #[arg(long, default_value_t = 9)]
        search_cap: usize,
    },
    /// Decide whether the automaton's language is Wheeler
    IsWheelerLang { file: String },
    /// Decide whether distinct states have distinct incoming languages
    IsReduced { file: String },
    /// The co-lex partial order on the states of a DFA
    ColexOrder { file: String },
    /// Fingerprint of the (Wheeler) language: one word per class
    Fingerprint { file: String },
    /// Minimum Wheeler DFA of the language
    MinWdfa { file: String },
    /// Intersect two Wheeler DFAs, checking the additive size bound
    IntersectWdfa { left: String, right: String },
    /// Apply a reduction gadget and check its transfer at desk scale
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        file: String,
    },
    /// Emit a forbidden-factor family automaton
    Family {
        #[arg(value_enum, ignore_case = true)]
        kind: FamilyKind,
        n: usize,
    },
    /// Brute-force ground truth
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        file: String,
        /// Length budget for enumerating oracles
        #[arg(long)]
        len: Option<usize>,
    },
    /// Graphviz DOT export
    ExportDot {
        file: String,
        /// Rank the states by the order claimed in the file
        #[arg(long)]
        use_order: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    ReducedUniv,
    Order,
    Reducedness,
    WheelerLang,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Classes,
    Order,
    Universal,
}

/// A finished report: exit code, verdict token, human lines, JSON payload.
struct Report {
    exit: u8,
    verdict: &'static str,
    lines: Vec<String>,
    payload: Value,
}

impl Report {
    fn positive(verdict: &'static str) -> Report {
        Report { exit: 0, verdict, lines: Vec::new(), payload: json!({}) }
    }

    fn negative(verdict: &'static str) -> Report {
        Report { exit: 1, verdict, lines: Vec::new(), payload: json!({}) }
    }

    fn line(mut self, s: impl Into<String>) -> Report {
        self.lines.push(s.into());
        self
    }

    fn field(mut self, key: &str, value: Value) -> Report {
        self.payload[key] = value;
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps::resolve(&cli.caps);
    match run(&cli.command, &caps) {
        Ok(report) => {
            emit(&cli, "ok", &report);
            ExitCode::from(report.exit)
        }
        Err(e) => {
            let exit = e.exit_code() as u8;
            let report = Report {
                exit,
                verdict: "error",
                lines: vec![format!("error: {e}")],
                payload: json!({ "error": e.to_string() }),
            };
            emit(&cli, "error", &report);
            ExitCode::from(exit)
        }
    }
}

fn emit(cli: &Cli, _tag: &str, report: &Report) {
    if cli.json {
        let mut payload = report.payload.clone();
        payload["command"] = json!(std::env::args().nth(1).unwrap_or_default());
        payload["verdict"] = json!(report.verdict);
        payload["exit"] = json!(report.exit);
        println!("{}", serde_json::to_string_pretty(&payload).expect("report serializes"));
    } else {
        println!("verdict: {}", report.verdict);
        for l in &report.lines {
            println!("{l}");
        }
    }
}

fn load(path: &str) -> Result<format::ParsedAutomaton, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("cannot read {path}: {e}")))?;
    format::parse(&text)
}

fn load_trim(path: &str) -> Result<Option<(format::ParsedAutomaton, Nfa)>, Error> {
    let parsed = load(path)?;
    // keep the file's own state numbering when it is already trimmed
    if parsed.nfa.is_trimmed() {
        let nfa = parsed.nfa.clone();
        return Ok(Some((parsed, nfa)));
    }
    Ok(parsed.nfa.trim().map(|t| (parsed, t)))
}

fn as_dfa(nfa: &Nfa) -> Result<Dfa, Error> {
    Dfa::try_from_nfa(nfa.clone())
}

fn empty_report(what: &str) -> Report {
    Report::negative("empty-language")
        .line(format!("{what}: the language is empty"))
        .field("empty", json!(true))
}

fn automaton_report(verdict: &'static str, nfa: &Nfa, order: Option<&[usize]>) -> Report {
    let text = format::serialize(nfa, order);
    Report {
        exit: 0,
        verdict,
        lines: vec![text.clone()],
        payload: json!({ "states": nfa.state_count(), "automaton": text }),
    }
}

fn witness_json(w: &wat_core::NonWheelerWitness, d: &Dfa) -> Value {
    let ab = d.alphabet();
    json!({
        "mu": w.mu.display(ab),
        "nu": w.nu.display(ab),
        "gamma": w.gamma.display(ab),
        "u": w.u,
        "v": w.v,
    })
}

fn run(cmd: &Command, caps: &Caps) -> Result<Report, Error> {
    match cmd {
        Command::Trim { file } => {
            let parsed = load(file)?;
            match parsed.nfa.trim() {
                None => Ok(empty_report("trim")),
                Some(t) => Ok(automaton_report("trimmed", &t, None)),
            }
        }

        Command::Detmin { file } => {
            let Some((_, t)) = load_trim(file)? else { return Ok(empty_report("detmin")) };
            let det = t.determinize(caps.det)?;
            let min = det.dfa.minimize();
            Ok(automaton_report("determinized-minimized", min.as_nfa(), None))
        }

        Command::Product { left, right } => {
            let (Some((_, l)), Some((_, r))) = (load_trim(left)?, load_trim(right)?) else {
                return Ok(empty_report("product"));
            };
            let ld = as_dfa(&l)?;
            let rd = as_dfa(&r)?;
            match ld.product_intersection(&rd)? {
                None => Ok(empty_report("product")),
                Some(p) => Ok(automaton_report("product", p.as_nfa(), None)),
            }
        }

        Command::IsWheelerDfa { file } => {
            let Some((_, t)) = load_trim(file)? else { return Ok(empty_report("is-wheeler-dfa")) };
            let d = as_dfa(&t)?;
            match is_wheeler_dfa(&d) {
                WheelerCertificate::Wheeler(order) => {
                    let ranks: Vec<usize> = order.rank_to_state().to_vec();
                    let chain = ranks
                        .iter()
                        .map(|q| format!("q{q}"))
                        .collect::<Vec<_>>()
                        .join(" < ");
                    Ok(Report::positive("wheeler")
                        .line(format!("order: {chain}"))
                        .field("order", json!(ranks)))
                }
                WheelerCertificate::NotWheeler(v) => Ok(Report::negative("not-wheeler")
                    .line(format!("violation: {v}"))
                    .field("violation", json!(v.to_string()))),
            }
        }

        Command::IsWheelerNfa { file, search_cap } => {
            let Some((parsed, t)) = load_trim(file)? else {
                return Ok(empty_report("is-wheeler-nfa"));
            };
            if let Some(claim) = &parsed.claimed_order {
                // the claimed order refers to the untrimmed automaton
                let order = TotalOrder::from_rank_to_state(claim.clone())?;
                return match check_wheeler_conditions(&parsed.nfa, &order) {
                    Ok(()) => Ok(Report::positive("wheeler")
                        .line("claimed order verified")
                        .field("order", json!(claim))),
                    Err(v) => Ok(Report::negative("not-wheeler")
                        .line(format!("claimed order fails: {v}"))
                        .field("violation", json!(v.to_string()))),
                };
            }
            match is_wheeler_nfa_bruteforce(&t, *search_cap)? {
                WheelerCertificate::Wheeler(order) => {
                    let ranks: Vec<usize> = order.rank_to_state().to_vec();
                    Ok(Report::positive("wheeler")
                        .line(format!("order found: {ranks:?}"))
                        .field("order", json!(ranks)))
                }
                WheelerCertificate::NotWheeler(v) => Ok(Report::negative("not-wheeler")
                    .line(format!("violation: {v}"))
                    .field("violation", json!(v.to_string()))),
            }
        }

        Command::IsWheelerLang { file } => {
            let Some((_, t)) = load_trim(file)? else {
                return Ok(empty_report("is-wheeler-lang"));
            };
            let verdict = lang::is_wheeler_language_nfa(&t, caps.det)?;
            if verdict.wheeler {
                Ok(Report::positive("wheeler-language")
                    .line("the language is Wheeler")
                    .field("min_dfa_states", json!(verdict.min_dfa.state_count())))
            } else {
                let w = verdict.witness.expect("negative verdicts carry a witness");
                Ok(Report::negative("not-wheeler-language")
                    .line(format!("witness: {}", w.display(&verdict.min_dfa)))
                    .field("witness", witness_json(&w, &verdict.min_dfa)))
            }
        }

        Command::IsReduced { file } => {
            let Some((_, t)) = load_trim(file)? else { return Ok(empty_report("is-reduced")) };
            if t.is_reduced(caps.det)? {
                Ok(Report::positive("reduced").line("all incoming languages are distinct"))
            } else {
                Ok(Report::negative("not-reduced").line("two states share an incoming language"))
            }
        }

        Command::ColexOrder { file } => {
            let Some((_, t)) = load_trim(file)? else { return Ok(empty_report("colex-order")) };
            let d = as_dfa(&t)?;
            let res = colex_partial_order_dfa(&d);
            let pairs: Vec<Value> =
                res.order.pairs().map(|(q, p)| json!([q, p])).collect();
            let total = res.total();
            let mut report = if let Some(tot) = &total {
                Report::positive("total")
                    .line(format!("total order: {:?}", tot.rank_to_state()))
                    .field("order", json!(tot.rank_to_state()))
            } else {
                Report::negative("partial").line("the co-lex order is not total")
            };
            report = report
                .field("pairs", json!(pairs))
                .field("states", json!(res.dfa.state_count()))
                .field("automaton", json!(format::serialize(res.dfa.as_nfa(), None)));
            Ok(report)
        }

        Command::Fingerprint { file } => {
            let Some((_, t)) = load_trim(file)? else { return Ok(empty_report("fingerprint")) };
            let d = as_dfa(&t)?.minimize();
            let cap = caps.iter.unwrap_or_else(|| minwdfa::default_iteration_cap(d.state_count()));
            let f = minwdfa::fingerprint(&d, cap)?;
            let reps: Vec<String> = f.reps.iter().map(|r| r.display(d.alphabet())).collect();
            Ok(Report::positive("fingerprint")
                .line(format!("{} classes: {}", reps.len(), reps.join(" ")))
                .field("reps", json!(reps))
                .field("classes", json!(reps.len())))
        }

        Command::MinWdfa { file } => {
            let Some((_, t)) = load_trim(file)? else { return Ok(empty_report("min-wdfa")) };
            let d = as_dfa(&t)?;
            match minwdfa::min_wdfa(&d) {
                Ok(r) => {
                    let text = format::serialize(r.wdfa.as_nfa(), Some(r.order.rank_to_state()));
                    Ok(Report::positive("min-wdfa")
                        .line(text.clone())
                        .field("states", json!(r.wdfa.state_count()))
                        .field("automaton", json!(text)))
                }
                Err(Error::NotWheeler(w)) => {
                    let min = d.minimize();
                    Ok(Report::negative("not-wheeler-language")
                        .line(format!("witness: {}", w.display(&min)))
                        .field("witness", witness_json(&w, &min)))
                }
                Err(e) => Err(e),
            }
        }

        Command::IntersectWdfa { left, right } => {
            let (Some((_, l)), Some((_, r))) = (load_trim(left)?, load_trim(right)?) else {
                return Ok(empty_report("intersect-wdfa"));
            };
            let ld = as_dfa(&l)?;
            let rd = as_dfa(&r)?;
            let lw = minwdfa::min_wdfa(&ld)?;
            let rw = minwdfa::min_wdfa(&rd)?;
            match gadgets::intersect_wdfa(&lw.wdfa, &lw.order, &rw.wdfa, &rw.order)? {
                None => Ok(empty_report("intersect-wdfa")),
                Some(res) => {
                    let text = format::serialize(res.wdfa.as_nfa(), Some(res.order.rank_to_state()));
                    Ok(Report::positive("intersection")
                        .line(format!(
                            "states: {} (bound {} from {} + {})",
                            res.wdfa.state_count(),
                            res.bound,
                            res.left_size,
                            res.right_size
                        ))
                        .line(text.clone())
                        .field("states", json!(res.wdfa.state_count()))
                        .field("bound", json!(res.bound))
                        .field("automaton", json!(text)))
                }
            }
        }

        Command::Gadget { kind, file } => {
            let Some((_, t)) = load_trim(file)? else { return Ok(empty_report("gadget")) };
            let report = match kind {
                GadgetKind::ReducedUniv => gadgets::report_reduced_universality(&t, caps.det)?,
                GadgetKind::Order => gadgets::report_order_hardness(&t, caps.det)?,
                GadgetKind::Reducedness => gadgets::report_reducedness(&t, caps.det)?,
                GadgetKind::WheelerLang => gadgets::report_wheeler_language(&t, caps.det)?,
            };
            let text = format::serialize(&report.output, None);
            let mut out = if report.agree {
                Report::positive("gadget-agrees")
            } else {
                Report::negative("gadget-disagrees")
            };
            out = out
                .line(format!(
                    "{}: {} = {}, {} = {}",
                    report.gadget, report.lhs_desc, report.lhs, report.rhs_desc, report.rhs
                ))
                .line(text.clone())
                .field("gadget", json!(report.gadget))
                .field("lhs", json!(report.lhs))
                .field("rhs", json!(report.rhs))
                .field("agree", json!(report.agree))
                .field("notes", json!(report.notes))
                .field("automaton", json!(text));
            for n in &report.notes {
                out = out.line(format!("note: {n}"));
            }
            Ok(out)
        }

        Command::Family { kind, n } => {
            if *n == 0 {
                return Err(Error::invalid("family parameter must be at least 1"));
            }
            let d = match kind {
                FamilyKind::A => gadgets::family_a(*n),
                FamilyKind::B => gadgets::family_b(*n),
            };
            Ok(automaton_report("family", d.as_nfa(), None))
        }

        Command::Oracle { kind, file, len } => {
            let Some((parsed, t)) = load_trim(file)? else { return Ok(empty_report("oracle")) };
            match kind {
                OracleKind::Classes => {
                    let d = as_dfa(&t)?.minimize();
                    let n = d.state_count();
                    let budget = len.unwrap_or_else(|| (n * n + n + 2).min(caps.enum_len));
                    let blocks = oracle::equiv_c_classes_bounded(&d, budget, caps.enum_len)?;
                    let ab = d.alphabet();
                    let rows: Vec<Value> = blocks
                        .iter()
                        .map(|b| {
                            json!({
                                "rep": b.rep.display(ab),
                                "state": b.state,
                                "end": b.end.map(|s| ab.name(s).to_string()),
                                "size": b.size,
                            })
                        })
                        .collect();
                    Ok(Report::positive("classes")
                        .line(format!("{} blocks at budget {budget}", blocks.len()))
                        .field("budget", json!(budget))
                        .field("blocks", json!(rows)))
                }
                OracleKind::Order => {
                    let cap = len.unwrap_or(8);
                    match oracle::exhaustive_wheeler_order(&t, cap)? {
                        Some(order) => Ok(Report::positive("wheeler")
                            .line(format!("order found: {order:?}"))
                            .field("order", json!(order))),
                        None => Ok(Report::negative("not-wheeler").line("no valid order")),
                    }
                }
                OracleKind::Universal => {
                    let fallback = len.unwrap_or(caps.enum_len);
                    let verdict = oracle::bounded_universality(&t, fallback, caps.det);
                    let mut r = if verdict.holds() {
                        Report::positive("universal")
                    } else {
                        Report::negative("not-universal")
                    };
                    r = r
                        .line(format!(
                            "universal: {} ({})",
                            verdict.holds(),
                            if verdict.is_exact() { "exact" } else { "sampled" }
                        ))
                        .field("universal", json!(verdict.holds()))
                        .field("exact", json!(verdict.is_exact()));
                    let _ = parsed;
                    Ok(r)
                }
            }
        }

        Command::ExportDot { file, use_order } => {
            let parsed = load(file)?;
            let order = if *use_order {
                match &parsed.claimed_order {
                    Some(o) => Some(o.clone()),
                    None => return Err(Error::invalid("file carries no order line")),
                }
            } else {
                None
            };
            let dot = format::export_dot(&parsed.nfa, order.as_deref());
            Ok(Report::positive("dot").line(dot.clone()).field("dot", json!(dot)))
        }
    }
}
