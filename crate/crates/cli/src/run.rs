use std::fmt::Write as _;
use std::time::{Duration, Instant};

use weightmult::{
    dimension, verify_module, Algorithm, Counters, Error, MultContext, ReductionTrace, RootSystemQ,
    RootVector, Weight,
};

use crate::query::{algorithm_name, Command, Format, MuSpec, Query, TraceLevel};

pub const EXIT_OK: i32 = 0;
/// A verification found a disagreement.
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_ORACLE_CAP: i32 = 4;

const BENCH_RUNS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GroupTooLarge { .. } => EXIT_ORACLE_CAP,
        _ => EXIT_DOMAIN,
    }
}

/// Key-value or human-readable lines.
struct Doc {
    format: Format,
    out: String,
}

impl Doc {
    fn new(format: Format) -> Self {
        Doc {
            format,
            out: String::new(),
        }
    }

    fn field(&mut self, key: &str, label: &str, value: impl std::fmt::Display) {
        let name = match self.format {
            Format::Text => label,
            Format::Machine => key,
        };
        writeln!(self.out, "{name}: {value}").unwrap();
    }

    fn line(&mut self, text: impl std::fmt::Display) {
        writeln!(self.out, "{text}").unwrap();
    }
}

pub fn run(q: &Query) -> Output {
    match execute(q) {
        Ok(out) => out,
        Err(e) => Output {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(q: &Query) -> weightmult::Result<Output> {
    let rs = RootSystemQ::build(q.family, q.rank)?;
    match q.command {
        Command::Mult => mult(q, &rs),
        Command::Char => char_table(q, &rs),
        Command::Dim => dim(q, &rs),
        Command::Verify => verify(q, &rs),
        Command::Bench => bench(q, &rs),
    }
}

fn resolve_mu(q: &Query, rs: &RootSystemQ) -> weightmult::Result<Weight> {
    match q.mu.as_ref().expect("command takes a weight") {
        MuSpec::Explicit(w) => Ok(w.clone()),
        MuSpec::BelowLambda(c) => Ok(&q.lam - &rs.root_to_weight_coords(c)?),
    }
}

fn header(doc: &mut Doc, q: &Query, rs: &RootSystemQ) {
    doc.field("command", "command", q.command.name());
    doc.field("system", "system", rs.name());
    doc.field("lambda", "highest weight", &q.lam);
}

fn write_counters(doc: &mut Doc, prefix: &str, c: &Counters) {
    let entries = [
        ("classical_terms", c.classical_terms),
        ("fast_terms", c.fast_terms),
        ("inner_products", c.inner_products),
        ("cache_hits", c.cache_hits),
        ("top_level_terms", c.top_level_terms),
    ];
    match doc.format {
        Format::Machine => {
            for (k, v) in entries {
                doc.field(&format!("{prefix}counters.{k}"), k, v);
            }
        }
        Format::Text => {
            let parts: Vec<String> = entries.iter().map(|(k, v)| format!("{k}={v}")).collect();
            doc.line(format!("counters: {}", parts.join(" ")));
        }
    }
}

fn write_trace(doc: &mut Doc, level: TraceLevel, trace: &ReductionTrace) {
    match level {
        TraceLevel::Off => {}
        TraceLevel::Summary => doc.field("trace", "trace", trace),
        TraceLevel::Full => {
            doc.field("trace", "trace", trace);
            for (n, step) in trace.steps().iter().enumerate() {
                match doc.format {
                    Format::Machine => doc.field(
                        &format!("trace.step.{n}"),
                        "",
                        format!("{} {}", step.depth, step.kind),
                    ),
                    Format::Text => doc.line(format!("  {}{}", "  ".repeat(step.depth), step.kind)),
                }
            }
        }
    }
}

fn mult(q: &Query, rs: &RootSystemQ) -> weightmult::Result<Output> {
    let mu = resolve_mu(q, rs)?;
    let mut ctx = MultContext::new(rs, q.lam.clone())?
        .with_algorithm(q.options.algorithm)
        .with_trace(q.options.trace != TraceLevel::Off);
    let m = ctx.compute(&mu)?;
    let mut doc = Doc::new(q.options.format);
    header(&mut doc, q, rs);
    doc.field("mu", "weight", &mu);
    doc.field(
        "algorithm",
        "algorithm",
        algorithm_name(q.options.algorithm),
    );
    doc.field("multiplicity", "multiplicity", &m);
    write_trace(&mut doc, q.options.trace, &ctx.take_trace());
    write_counters(&mut doc, "", &ctx.counters());
    Ok(Output::ok(doc.out))
}

fn char_table(q: &Query, rs: &RootSystemQ) -> weightmult::Result<Output> {
    let mut ctx = MultContext::new(rs, q.lam.clone())?.with_algorithm(q.options.algorithm);
    let chi = ctx.character()?;
    let mut rows: Vec<(RootVector, Weight, String, String)> = Vec::new();
    for (mu, m) in &chi {
        let depth = rs
            .is_under(mu, &q.lam)?
            .expect("character weights lie under lam");
        rows.push((
            depth,
            mu.clone(),
            m.to_string(),
            rs.orbit_size(mu)?.to_string(),
        ));
    }
    // deepest weights first, the highest weight last
    rows.sort_by(|a, b| b.0.height().cmp(&a.0.height()).then_with(|| a.1.cmp(&b.1)));
    let mut doc = Doc::new(q.options.format);
    header(&mut doc, q, rs);
    doc.field("dominant_weights", "dominant weights", rows.len());
    match q.options.format {
        Format::Text => {
            let width = rows
                .iter()
                .map(|r| r.1.to_string().len())
                .max()
                .unwrap_or(6)
                .max(6);
            doc.line(format!(
                "{:<width$}  {:>6}  {:>12}  {:>10}",
                "weight", "depth", "multiplicity", "orbit"
            ));
            for (c, mu, m, orbit) in &rows {
                doc.line(format!(
                    "{:<width$}  {:>6}  {:>12}  {:>10}",
                    mu.to_string(),
                    c.height(),
                    m,
                    orbit
                ));
            }
        }
        Format::Machine => {
            for (c, mu, m, orbit) in &rows {
                doc.field(
                    "weight",
                    "",
                    format!("{mu} depth={} multiplicity={m} orbit={orbit}", c.height()),
                );
            }
        }
    }
    write_counters(&mut doc, "", &ctx.counters());
    Ok(Output::ok(doc.out))
}

fn dim(q: &Query, rs: &RootSystemQ) -> weightmult::Result<Output> {
    let from_char = dimension(rs, &q.lam)?;
    let weyl = rs.weyl_dimension(&q.lam)?;
    let mut doc = Doc::new(q.options.format);
    match q.options.format {
        Format::Text => doc.line(format!(
            "dimension: {from_char} (character-sum) / {weyl} (weyl)"
        )),
        Format::Machine => {
            header(&mut doc, q, rs);
            doc.field("dimension.character_sum", "", &from_char);
            doc.field("dimension.weyl", "", &weyl);
        }
    }
    let code = if from_char == weyl {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok(Output {
        code,
        stdout: doc.out,
        stderr: String::new(),
    })
}

fn verify(q: &Query, rs: &RootSystemQ) -> weightmult::Result<Output> {
    let report = verify_module(rs, &q.lam, q.options.oracle_cap)?;
    let stdout = match q.options.format {
        Format::Text => format!("{report}\n"),
        Format::Machine => {
            let mut doc = Doc::new(Format::Machine);
            header(&mut doc, q, rs);
            doc.field("checked", "", report.checks.len());
            if let Some(order) = &report.oracle_skipped {
                doc.field("oracle_skipped.weyl_order", "", order);
            }
            if let Some(bad) = report.first_divergence() {
                doc.field("first_divergence", "", &bad.mu);
            }
            doc.field("dimension.character_sum", "", &report.dim_character);
            doc.field("dimension.weyl", "", &report.dim_weyl);
            doc.field("result", "", if report.passed() { "pass" } else { "fail" });
            doc.out
        }
    };
    let code = if !report.passed() {
        EXIT_FAILED
    } else if report.oracle_skipped.is_some() {
        EXIT_ORACLE_CAP
    } else {
        EXIT_OK
    };
    Ok(Output {
        code,
        stdout,
        stderr: String::new(),
    })
}

struct BenchRow {
    algorithm: Algorithm,
    multiplicity: String,
    median: Duration,
    counters: Counters,
}

fn bench(q: &Query, rs: &RootSystemQ) -> weightmult::Result<Output> {
    let mu = resolve_mu(q, rs)?;
    let mut rows = Vec::new();
    for algorithm in [Algorithm::Classical, Algorithm::Fast] {
        let mut times = Vec::with_capacity(BENCH_RUNS);
        let mut last = None;
        for _ in 0..BENCH_RUNS {
            let mut ctx = MultContext::new(rs, q.lam.clone())?.with_algorithm(algorithm);
            let start = Instant::now();
            let m = ctx.compute(&mu)?;
            times.push(start.elapsed());
            last = Some((m, ctx.counters()));
        }
        times.sort();
        let (m, counters) = last.expect("at least one run");
        rows.push(BenchRow {
            algorithm,
            multiplicity: m.to_string(),
            median: times[BENCH_RUNS / 2],
            counters,
        });
    }
    let mut doc = Doc::new(q.options.format);
    header(&mut doc, q, rs);
    doc.field("mu", "weight", &mu);
    doc.field("runs", "runs per algorithm", BENCH_RUNS);
    match q.options.format {
        Format::Machine => {
            for r in &rows {
                let prefix = format!("{}.", algorithm_name(r.algorithm));
                doc.field(&format!("{prefix}multiplicity"), "", &r.multiplicity);
                doc.field(&format!("{prefix}median_ns"), "", r.median.as_nanos());
                write_counters(&mut doc, &prefix, &r.counters);
            }
        }
        Format::Text => {
            doc.line(format!(
                "{:<10} {:>12} {:>12} {:>15} {:>15} {:>10} {:>14} {:>10}",
                "algorithm",
                "multiplicity",
                "median",
                "top_level_terms",
                "classical_terms",
                "fast_terms",
                "inner_products",
                "cache_hits"
            ));
            for r in &rows {
                let c = &r.counters;
                doc.line(format!(
                    "{:<10} {:>12} {:>12} {:>15} {:>15} {:>10} {:>14} {:>10}",
                    algorithm_name(r.algorithm),
                    r.multiplicity,
                    format!("{:.3?}", r.median),
                    c.top_level_terms,
                    c.classical_terms,
                    c.fast_terms,
                    c.inner_products,
                    c.cache_hits
                ));
            }
        }
    }
    let code = if rows[0].multiplicity == rows[1].multiplicity {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok(Output {
        code,
        stdout: doc.out,
        stderr: String::new(),
    })
}
