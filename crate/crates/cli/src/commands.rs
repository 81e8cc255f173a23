use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{SystemTime, UNIX_EPOCH};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};
use trace_recon::channel::{
    reconstruction_race_bounds, run_rng, simulate_until_resolvable, DuplicateMode, Event, Transcript, TABLE_CSV_HEADER,
};
use trace_recon::formulas::n_plus;
use trace_recon::reconstruct::required_traces;
use trace_recon::verify::{run_suite, Outcome, Suite, VerifyOptions};
use trace_recon::vt::{generate_worst_pairs, random_codeword, vt_enumerate, Generation, PAIR_CSV_HEADER};
use trace_recon::{reconstruct_exact, Budget, ChannelModel, FormulaParams, Reconstruction, TracePool, VtCode, Word};

use crate::args::{ChannelArgs, Cli, Command, NplusArgs, PairsArgs, ReconstructArgs, TradeoffArgs, VerifyArgs};
use crate::input::read_words;
use crate::report::{csv_table, float, num, CliError, Report, EXIT_AMBIGUOUS, EXIT_BUDGET, EXIT_NONE, EXIT_VERIFY};

/// Pairs drawn by `pairs --seed` when no `--limit` is given.
const DEFAULT_SAMPLED_PAIRS: usize = 16;

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Nplus(a) => nplus(a),
        Command::Verify(a) => verify(a),
        Command::Tradeoff(a) => tradeoff(a),
        Command::Reconstruct(a) => reconstruct(a),
        Command::Channel(a) => channel(a),
        Command::Pairs(a) => pairs(a),
    }
}

fn nplus(a: &NplusArgs) -> Result<Report, CliError> {
    let params = match a.k {
        Some(k) => FormulaParams::new(a.n, a.t, k, a.l, a.q)?,
        None => FormulaParams::equal(a.n, a.t, a.l, a.q)?,
    };
    let value = n_plus(&params)?;
    let required = a.required.then(|| &value + BigUint::one());

    let mut obj = Map::new();
    for (key, v) in [("n", params.n), ("t", params.t), ("k", params.k), ("l", params.l), ("q", u64::from(params.q))] {
        obj.insert(key.into(), num(v));
    }
    obj.insert("n_plus".into(), num(&value));
    let mut header = String::from("n,t,k,l,q,n_plus");
    let mut row = format!("{},{},{},{},{},{}", params.n, params.t, params.k, params.l, params.q, value);
    let mut plain = value.to_string();
    if let Some(r) = &required {
        obj.insert("required".into(), num(r));
        header.push_str(",required");
        row.push_str(&format!(",{r}"));
        plain.push_str(&format!("\nrequired traces: {r}"));
    }
    Ok(Report::new(Value::Object(obj), csv_table(&header, [row]), plain))
}

fn verify(a: &VerifyArgs) -> Result<Report, CliError> {
    let suite: Suite = a.suite.parse()?;
    let opts = VerifyOptions { budget: a.budget.map_or_else(Budget::from_env, Budget), n: a.n };
    let done = AtomicUsize::new(0);
    let progress = |name: &str| {
        let k = done.fetch_add(1, Ordering::Relaxed) + 1;
        eprintln!("[{suite} {k}] {name}");
    };
    let report = run_suite(suite, &opts, &progress);

    let cases: Vec<Value> = report
        .cases
        .iter()
        .map(|c| {
            let (status, detail) = status_of(&c.outcome);
            json!({ "case": c.name, "status": status, "detail": detail })
        })
        .collect();
    let csv = csv_table(
        "case,status,detail",
        report.cases.iter().map(|c| {
            let (status, detail) = status_of(&c.outcome);
            format!("{},{status},{}", quote(&c.name), quote(detail))
        }),
    );
    let mut plain: Vec<String> = report
        .cases
        .iter()
        .map(|c| match status_of(&c.outcome) {
            (s, "") => format!("{} {}", s.to_uppercase(), c.name),
            (s, d) => format!("{} {}: {d}", s.to_uppercase(), c.name),
        })
        .collect();
    plain.push(format!(
        "{suite}: {} passed, {} failed, {} over budget",
        report.passed(),
        report.failed(),
        report.budget_exceeded()
    ));
    let json = json!({
        "suite": suite.name(),
        "passed": num(report.passed()),
        "failed": num(report.failed()),
        "budget_exceeded": num(report.budget_exceeded()),
        "cases": cases,
    });
    let status = if report.failed() > 0 {
        EXIT_VERIFY
    } else if report.budget_exceeded() > 0 {
        EXIT_BUDGET
    } else {
        0
    };
    Ok(Report::new(json, csv, plain.join("\n")).with_status(status))
}

fn status_of(o: &Outcome) -> (&'static str, &str) {
    match o {
        Outcome::Pass => ("pass", ""),
        Outcome::Fail(why) => ("fail", why),
        Outcome::BudgetExceeded(why) => ("budget", why),
    }
}

fn quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// `100 * num / den` rounded half away from zero to `digits` places.
fn percent(num: &BigInt, den: &BigInt, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = num.abs() * 100u32 * &scale * 2u32 + den;
    let rounded = scaled / (den * 2u32);
    let (int, frac) = (&rounded / &scale, &rounded % &scale);
    let sign = if num.is_negative() && !rounded.is_zero() { "-" } else { "" };
    format!("{sign}{int}.{frac:0>width$}", width = digits as usize)
}

fn tradeoff(a: &TradeoffArgs) -> Result<Report, CliError> {
    if a.l > a.t {
        return Err(CliError::Input(format!("the largest distance parameter l={} must not exceed t={}", a.l, a.t)));
    }
    let required: Vec<BigUint> =
        (0..=a.l).map(|l| required_traces(a.n, a.t, l, a.q)).collect::<trace_recon::Result<_>>()?;
    let baseline = BigInt::from(required_traces(a.n, a.t, 1, a.q)?);
    for l in 2..=a.l as usize {
        if required[l] > required[l - 1] {
            return Err(trace_recon::Error::Internal(format!(
                "required traces rose from {} to {} between l={} and l={l}",
                required[l - 1],
                required[l],
                l - 1
            ))
            .into());
        }
    }
    let rows: Vec<(u64, &BigUint, String)> = required
        .iter()
        .enumerate()
        .map(|(l, r)| (l as u64, r, percent(&(&baseline - BigInt::from(r.clone())), &baseline, 4)))
        .collect();

    let json = json!({
        "n": num(a.n),
        "t": num(a.t),
        "q": num(a.q),
        "l_max": num(a.l),
        "rows": rows.iter().map(|(l, r, p)| json!({ "l": num(l), "required": num(r), "reduction_percent": p })).collect::<Vec<_>>(),
    });
    let csv = csv_table("l,required,reduction_percent", rows.iter().map(|(l, r, p)| format!("{l},{r},{p}")));
    let mut plain = vec![format!("{:>4} {:>24} {:>12}", "l", "required", "reduction %")];
    plain.extend(rows.iter().map(|(l, r, p)| format!("{l:>4} {r:>24} {p:>12}")));
    Ok(Report::new(json, csv, plain.join("\n")))
}

fn reconstruct(a: &ReconstructArgs) -> Result<Report, CliError> {
    let traces = read_words(&a.traces)?;
    if traces.is_empty() {
        return Err(CliError::Input(format!("{} contains no traces", a.traces.display())));
    }
    let (n, candidates, source) = match (&a.candidates, a.n, a.a) {
        (Some(path), _, _) => {
            let words = read_words(path)?;
            let n = words
                .first()
                .map(Word::len)
                .ok_or_else(|| CliError::Input(format!("{} contains no candidates", path.display())))?;
            (n, words, json!({ "file": path.display().to_string() }))
        }
        (None, Some(n), Some(res)) => {
            let code = VtCode::new(n, res)?;
            (n, vt_enumerate(code, Budget::from_env())?, json!({ "vt": { "n": num(n), "a": num(res) } }))
        }
        _ => return Err(CliError::Input("give either --candidates FILE or both -n and -a".into())),
    };
    let candidate_count = candidates.len();
    let pool = TracePool::new(n, traces)?;
    let outcome = reconstruct_exact(&pool, candidates, a.q)?;
    let (status, code, consistent) = match outcome {
        Reconstruction::Unique(w) => ("unique", 0, vec![w]),
        Reconstruction::Ambiguous(r) if r.consistent.is_empty() => ("none", EXIT_NONE, r.consistent),
        Reconstruction::Ambiguous(r) => ("ambiguous", EXIT_AMBIGUOUS, r.consistent),
    };

    let json = json!({
        "status": status,
        "n": num(n),
        "t": num(pool.t()),
        "traces": num(pool.len()),
        "candidates": num(candidate_count),
        "candidate_source": source,
        "consistent": consistent.iter().map(Word::to_string).collect::<Vec<_>>(),
    });
    let csv = csv_table("status,word", consistent.iter().map(|w| format!("{status},{w}")));
    let plain = match status {
        "unique" => consistent[0].to_string(),
        "none" => format!("no candidate is consistent with all {} traces", pool.len()),
        _ => {
            let mut lines = vec![format!("{} consistent candidates:", consistent.len())];
            lines.extend(consistent.iter().map(Word::to_string));
            lines.join("\n")
        }
    };
    Ok(Report::new(json, csv, plain).with_status(code))
}

fn fresh_seed() -> u64 {
    let nanos = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_nanos());
    (nanos as u64) ^ ((nanos >> 64) as u64) ^ u64::from(std::process::id()).rotate_left(32)
}

fn channel(a: &ChannelArgs) -> Result<Report, CliError> {
    let model = ChannelModel::new(a.p, a.n, a.q, a.l)?;
    let i_max = a.i_max.max(a.l);
    let (best, ln_best) = model.optimal_output_length(i_max)?;
    let table = model.table(i_max);
    let opt_float = |v: Option<f64>| v.map_or(Value::Null, float);

    let rows: Vec<Value> = table
        .iter()
        .map(|r| {
            json!({
                "i": num(r.i),
                "p_i": float(r.p_i),
                "ln_p_i": float(r.ln_p_i),
                "T_i": num(&r.threshold),
                "E_i": opt_float(r.e_i),
                "ln_E_i": opt_float(r.ln_e_i),
                "argmin": r.i == best,
            })
        })
        .collect();
    let mut json = json!({
        "n": num(a.n),
        "p": float(a.p),
        "l": num(a.l),
        "q": num(a.q),
        "i_max": num(i_max),
        "argmin": num(best),
        "ln_E_argmin": float(ln_best),
        "rows": rows,
    });
    let mut csv = csv_table(
        &format!("{TABLE_CSV_HEADER},argmin"),
        table.iter().map(|r| format!("{},{}", r.csv(), u8::from(r.i == best))),
    );
    let mut plain = vec![format!("{:>4} {:>14} {:>24} {:>14}", "i", "p_i", "T_i", "E_i")];
    plain.extend(table.iter().map(|r| {
        let e = r.e_i.map_or_else(|| "undefined".to_string(), |e| format!("{e:.6e}"));
        let mark = if r.i == best { "  <- argmin" } else { "" };
        format!("{:>4} {:>14.6e} {:>24} {e:>14}{mark}", r.i, r.p_i, r.threshold)
    }));

    if let Some(runs) = a.simulate {
        let seed = a.seed.unwrap_or_else(fresh_seed);
        eprintln!("seed: {seed}");
        let code = VtCode::new(a.n, a.a)?;
        // The source draw uses a stream no run can reach.
        let x = random_codeword(code, &mut run_rng(seed, u64::MAX))?;
        let mode = if a.strict { DuplicateMode::Strict } else { DuplicateMode::AssumeDistinct };
        let transcripts: Vec<Transcript> = (0..runs)
            .map(|run| simulate_until_resolvable(&x, code, &model, seed, run, mode, a.limit))
            .collect::<trace_recon::Result<_>>()?;
        let (lower, upper) = reconstruction_race_bounds(&model);
        let sim = simulation_summary(&x, code, seed, a, &transcripts, lower, upper);

        csv.push('\n');
        csv.push_str(&csv_table(
            "run,event,insertions,transmissions,duplicates",
            transcripts.iter().map(|t| {
                let (kind, ins) = event_parts(&t.event);
                format!(
                    "{},{kind},{},{},{}",
                    t.run,
                    ins.map_or(String::new(), |i| i.to_string()),
                    t.transmissions,
                    t.duplicates
                )
            }),
        ));
        plain.push(String::new());
        plain.push(format!("seed {seed}, source {x} in {code}, {runs} runs"));
        for key in ["decoded", "reconstructed", "exhausted", "mean_transmissions"] {
            plain.push(format!("{key}: {}", sim[key].as_str().unwrap_or_default()));
        }
        plain.push(format!("reconstruction probability in [{lower:.6e}, {upper:.6e}]"));
        json["simulation"] = sim;
    }
    Ok(Report::new(json, csv, plain.join("\n")))
}

fn event_parts(event: &Event) -> (&'static str, Option<usize>) {
    match event {
        Event::Decode { insertions, .. } => ("decode", Some(*insertions)),
        Event::Reconstruct { insertions, .. } => ("reconstruct", Some(*insertions)),
        Event::Exhausted => ("exhausted", None),
    }
}

fn simulation_summary(
    x: &Word,
    code: VtCode,
    seed: u64,
    a: &ChannelArgs,
    transcripts: &[Transcript],
    lower: f64,
    upper: f64,
) -> Value {
    let count = |kind: &str| transcripts.iter().filter(|t| event_parts(&t.event).0 == kind).count();
    let total: usize = transcripts.iter().map(|t| t.transmissions).sum();
    let mean = if transcripts.is_empty() { 0.0 } else { total as f64 / transcripts.len() as f64 };
    let runs: Vec<Value> = transcripts
        .iter()
        .map(|t| {
            let (kind, ins) = event_parts(&t.event);
            let recovered = match &t.event {
                Event::Decode { decoded, .. } => Value::String(decoded.to_string()),
                _ => Value::Null,
            };
            json!({
                "run": num(t.run),
                "event": kind,
                "insertions": ins.map_or(Value::Null, num),
                "transmissions": num(t.transmissions),
                "duplicates": num(t.duplicates),
                "counts": t.counts.iter().map(|(i, c)| (i.to_string(), num(c))).collect::<Map<_, _>>(),
                "decoded": recovered,
            })
        })
        .collect();
    json!({
        "seed": num(seed),
        "source": x.to_string(),
        "code": { "n": num(code.n), "a": num(code.a) },
        "duplicates": if a.strict { "strict" } else { "assume-distinct" },
        "limit": num(a.limit),
        "runs": runs,
        "decoded": num(count("decode")),
        "reconstructed": num(count("reconstruct")),
        "exhausted": num(count("exhausted")),
        "mean_transmissions": num(mean),
        "reconstruction_probability_bounds": [float(lower), float(upper)],
    })
}

fn pairs(a: &PairsArgs) -> Result<Report, CliError> {
    let code = VtCode::new(a.n, a.a)?;
    let mode = match a.seed {
        Some(seed) => Generation::Sampled { count: a.limit.unwrap_or(DEFAULT_SAMPLED_PAIRS), seed },
        None => Generation::Exhaustive { limit: a.limit },
    };
    let family = generate_worst_pairs(code, a.t, mode)?;
    let value = family.intersection()?;
    let json = json!({
        "n": num(a.n),
        "a": num(a.a),
        "t": num(a.t),
        "intersection": num(&value),
        "complete": family.complete,
        "seed": a.seed.map_or(Value::Null, num),
        "pairs": family.pairs.iter().map(|p| json!({ "E": p.first.to_string(), "F": p.second.to_string() })).collect::<Vec<_>>(),
    });
    let csv = csv_table(PAIR_CSV_HEADER, family.csv_rows()?);
    let mut plain = vec![format!("{} pairs in {code} sharing {value} traces at t={}", family.pairs.len(), a.t)];
    plain.extend(family.pairs.iter().map(|p| format!("{} {}", p.first, p.second)));
    Ok(Report::new(json, csv, plain.join("\n")))
}
