//! Command-layer plumbing: run configuration, per-command report records in
//! text and JSON form, and the one-shot `verify-paper` suite.
//!
//! JSON output is fully deterministic for a fixed configuration: keys are
//! sorted, all content derives from recorded seeds, and wall-clock timings
//! are only included when explicitly requested (`elapsed_ms` is null
//! otherwise, so byte-identical reruns stay byte-identical).

use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Value};

use crate::comb::{binomial, check_lemma_part1, check_lemma_part2, scan_ineq, Nat};
use crate::cremona::{cremona_reduce, reduce_fully, validate_dimension_preservation, ReductionStep};
use crate::error::{Error, Result};
use crate::field::MERSENNE61;
use crate::systems::{
    derive_seed, generic_dimension, interpolation_matrix, is_empty_certified, multiply_forms,
    parse_mults, proportional, sample_points, Certification, EmptinessCertificate,
    LinearSystemSpec, SearchConfig, SystemDimension, DEFAULT_SEED,
};
use crate::waldschmidt::{
    alpha_symbolic, chudnovsky_check, containment_criterion_check, verify_71_lemma,
    verify_floor_instance, AlphaResult,
};

/// Configuration shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub prime: u64,
    pub seed: u64,
    pub trials: u32,
    pub json: bool,
    pub long: bool,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime: MERSENNE61,
            seed: DEFAULT_SEED,
            trials: 2,
            json: false,
            long: false,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn search(&self) -> SearchConfig {
        SearchConfig { prime: self.prime, seed: self.seed, trials: self.trials }
    }
}

/// What a command produced: human text, JSON records (one object per
/// record), and whether every asserted verification passed.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub text: String,
    pub records: Vec<Value>,
    pub ok: bool,
}

impl CommandOutput {
    pub fn render(&self, json: bool) -> String {
        if json {
            let mut out = String::new();
            for r in &self.records {
                out.push_str(&r.to_string());
                out.push('\n');
            }
            out
        } else {
            let mut t = self.text.clone();
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
    }
}

/// Inclusive range syntax: `a..b` or a single `a`.
pub fn parse_range(text: &str) -> Result<(u64, u64)> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::InvalidArgument(format!("bad range bound '{s}'")))
    };
    match text.split_once("..") {
        None => {
            let v = parse(text)?;
            Ok((v, v))
        }
        Some((lo, hi)) => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if lo > hi {
                return Err(Error::InvalidArgument(format!("empty range '{text}'")));
            }
            Ok((lo, hi))
        }
    }
}

fn cert_json(cert: &EmptinessCertificate) -> Value {
    json!({
        "spec": cert.spec.to_string(),
        "certification": cert.certification.as_str(),
        "prime": cert.prime,
        "seed": cert.base_seed,
        "trials": cert.trials.iter().map(|t| json!({
            "seed": t.seed,
            "rank": t.rank,
            "cols": t.cols,
            "conds": t.conds,
        })).collect::<Vec<_>>(),
    })
}

fn dim_json(dim: &SystemDimension) -> Value {
    json!({
        "spec": dim.spec.to_string(),
        "cols": dim.cols,
        "conds": dim.conds,
        "rank": dim.rank,
        "affine_dim": dim.affine_dim,
        "expected_dimension": dim.spec.expected_dimension().to_string(),
        "certification": dim.certification.as_str(),
        "prime": dim.prime,
        "seed": dim.seed,
    })
}

fn alpha_json(res: &AlphaResult, prime: u64, seed: u64) -> Value {
    json!({
        "n": res.n,
        "s": res.s,
        "m": res.m,
        "alpha": res.alpha,
        "ratio": res.ratio().to_string(),
        "search_cap": res.search_cap,
        "degrees": res.certificates.iter().map(|c| json!({
            "spec": c.spec.to_string(),
            "d": c.spec.d,
            "certification": c.certification.as_str(),
            "trials": c.trials.iter().map(|t| json!({
                "seed": t.seed, "rank": t.rank, "cols": t.cols, "conds": t.conds,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "prime": prime,
        "seed": seed,
    })
}

fn cert_summary(cert: &EmptinessCertificate) -> String {
    let mut s = format!("{} -> {}", cert.spec, cert.certification);
    if let Some(t) = cert.trials.last() {
        let _ = write!(s, " (rank {}/{} on {}x{}, seed {})", t.rank, t.cols, t.conds, t.cols, t.seed);
    }
    s
}

/// `dim`: dimension and certification of one system at a sampled point set.
pub fn cmd_dim(
    n: u32,
    d: i64,
    mults_text: &str,
    dump: Option<&std::path::Path>,
    config: &RunConfig,
) -> Result<CommandOutput> {
    let mults = parse_mults(mults_text)?;
    let spec = LinearSystemSpec::new(n, d, mults)?;
    let search = config.search();
    let field = search.field()?;
    let dim = generic_dimension(&spec, search.seed, &field)?;
    if let Some(path) = dump {
        let pts = sample_points(spec.n, spec.points(), search.seed, &field)?;
        let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
        crate::systems::write_matrix_dump(&mut file, &spec, &pts)?;
    }
    let text = format!(
        "{}: cols {}, conds {}, rank {}, affine dim {}, expected {}, {} (prime {}, seed {})",
        dim.spec,
        dim.cols,
        dim.conds,
        dim.rank,
        dim.affine_dim,
        dim.spec.expected_dimension(),
        dim.certification,
        dim.prime,
        dim.seed,
    );
    Ok(CommandOutput { text, records: vec![dim_json(&dim)], ok: true })
}

/// `alpha`: initial degree of the m-th symbolic power.
pub fn cmd_alpha(n: u32, s: usize, m: u32, config: &RunConfig) -> Result<CommandOutput> {
    let search = config.search();
    let res = alpha_symbolic(n, s, m, &search)?;
    let mut text = format!(
        "alpha(I^({m})) = {} for {s} very general points in P^{n} (cap {})\n",
        res.alpha, res.search_cap
    );
    for cert in &res.certificates {
        let _ = writeln!(text, "  degree {}: {}", cert.spec.d, cert_summary(cert));
    }
    text.pop();
    let records = vec![alpha_json(&res, search.prime, search.seed)];
    Ok(CommandOutput { text, records, ok: true })
}

/// `wdc`: Waldschmidt-constant bounds from sampled symbolic powers.
pub fn cmd_wdc(n: u32, s: usize, m_max: u32, config: &RunConfig) -> Result<CommandOutput> {
    let search = config.search();
    let report = crate::waldschmidt::waldschmidt_report(n, s, m_max, &search)?;
    let mut text = format!("Waldschmidt bounds for {s} very general points in P^{n}:\n");
    for sample in &report.samples {
        let _ = writeln!(
            text,
            "  m = {}: alpha = {}, ratio = {}",
            sample.m, sample.alpha, sample.ratio
        );
    }
    let _ = writeln!(text, "  upper bound (min ratio): {}", report.upper_bound);
    let _ = writeln!(text, "  floor lower bound:       {}", report.floor_lower);
    let _ = write!(text, "  Chudnovsky threshold:    {}", report.chudnovsky_threshold);
    let record = json!({
        "n": n,
        "s": s,
        "samples": report.samples.iter().map(|a| json!({
            "m": a.m, "alpha": a.alpha, "ratio": a.ratio.to_string(),
        })).collect::<Vec<_>>(),
        "upper_bound": report.upper_bound.to_string(),
        "floor_lower": report.floor_lower,
        "chudnovsky_threshold": report.chudnovsky_threshold.to_string(),
        "prime": search.prime,
        "seed": search.seed,
        "certification": report.results.iter().flat_map(|r| r.certificates.last()).map(|c| c.certification.as_str()).collect::<Vec<_>>(),
    });
    Ok(CommandOutput { text, records: vec![record], ok: true })
}

/// `chudnovsky`: verdicts of the conjectured bound for each requested m.
pub fn cmd_chudnovsky(n: u32, s: usize, m_list: &[u32], config: &RunConfig) -> Result<CommandOutput> {
    let search = config.search();
    let records = chudnovsky_check(n, s, m_list, &search)?;
    let mut text = format!("Chudnovsky checks for {s} very general points in P^{n}:\n");
    let mut json_records = Vec::new();
    let mut ok = true;
    for r in &records {
        ok &= r.holds;
        let _ = writeln!(
            text,
            "  m = {}: alpha(I^({})) / {} = {} >= {} ? {}",
            r.m,
            r.m,
            r.m,
            r.ratio,
            r.threshold,
            if r.holds { "holds" } else { "FAILS" }
        );
        json_records.push(json!({
            "n": n, "s": s, "m": r.m,
            "alpha_m": r.alpha_m,
            "alpha_1": r.alpha_1,
            "ratio": r.ratio.to_string(),
            "threshold": r.threshold.to_string(),
            "holds": r.holds,
            "prime": search.prime,
            "seed": search.seed,
            "certification": "sampled-alpha",
        }));
    }
    text.pop();
    Ok(CommandOutput { text, records: json_records, ok })
}

/// `containment`: the sufficient criterion alpha(I^(nm)) >= (n-1)m + m reg.
pub fn cmd_containment(n: u32, s: usize, m: u32, config: &RunConfig) -> Result<CommandOutput> {
    let search = config.search();
    let v = containment_criterion_check(n, s, m, &search)?;
    let text = format!(
        "containment criterion for (n, s, m) = ({n}, {s}, {m}): reg = {}, required = {}, alpha(I^({})) = {} -> {}",
        v.reg,
        v.required,
        n * m,
        v.alpha_nm,
        if v.holds { "holds" } else { "FAILS" }
    );
    let record = json!({
        "n": n, "s": s, "m": m,
        "reg": v.reg,
        "required": v.required,
        "alpha_nm": v.alpha_nm,
        "holds": v.holds,
        "alpha_detail": alpha_json(&v.alpha_detail, search.prime, search.seed),
        "prime": search.prime,
        "seed": search.seed,
        "certification": v.alpha_detail.certificates.last().map(|c| c.certification.as_str()),
    });
    Ok(CommandOutput { text, records: vec![record], ok: v.holds })
}

/// `lemma`: exact verification of the combinatorial inequalities on a grid.
pub fn cmd_lemma(part: u32, k_range: Option<(u64, u64)>, n_range: (u64, u64)) -> Result<CommandOutput> {
    let mut failures = Vec::new();
    let (n_lo, n_hi) = n_range;
    let checked;
    match part {
        1 => {
            let (k_lo, k_hi) =
                k_range.ok_or_else(|| Error::InvalidArgument("part 1 needs --k".into()))?;
            if k_lo < 1 || n_lo < 1 {
                return Err(Error::InvalidArgument("k and n must be >= 1".into()));
            }
            checked = (k_hi - k_lo + 1) * (n_hi - n_lo + 1);
            for k in k_lo..=k_hi {
                for n in n_lo..=n_hi {
                    if !check_lemma_part1(k, n) {
                        failures.push(json!({"k": k, "n": n}));
                    }
                }
            }
        }
        2 => {
            if n_lo < 1 {
                return Err(Error::InvalidArgument("n must be >= 1".into()));
            }
            checked = n_hi - n_lo + 1;
            for n in n_lo..=n_hi {
                if !check_lemma_part2(n) {
                    failures.push(json!({"n": n}));
                }
            }
        }
        p => return Err(Error::InvalidArgument(format!("lemma part must be 1 or 2, got {p}"))),
    }
    let ok = failures.is_empty();
    let text = if ok {
        format!("lemma part {part}: all hold ({checked} cases)")
    } else {
        format!("lemma part {part}: {} failures in {checked} cases: {failures:?}", failures.len())
    };
    let record = json!({
        "part": part,
        "k_range": k_range.map(|(a, b)| format!("{a}..{b}")),
        "n_range": format!("{n_lo}..{n_hi}"),
        "checked": checked,
        "failures": failures,
        "all_hold": ok,
    });
    Ok(CommandOutput { text, records: vec![record], ok })
}

/// `ineq-scan`: failures of n*floor(s^(1/n)) >= n + r over an s interval.
pub fn cmd_ineq_scan(n: u64, from: u64, to: u64) -> Result<CommandOutput> {
    if n < 1 || from < 1 || from > to {
        return Err(Error::InvalidArgument("need n >= 1 and 1 <= from <= to".into()));
    }
    let failures = scan_ineq(n, from, to);
    let text = if failures.is_empty() {
        format!("ineq-scan n={n}, s in [{from}, {to}]: 0 failures")
    } else {
        format!(
            "ineq-scan n={n}, s in [{from}, {to}]: {} failures: {failures:?}",
            failures.len()
        )
    };
    let record = json!({
        "n": n,
        "from": from,
        "to": to,
        "failures": failures,
    });
    Ok(CommandOutput { text, records: vec![record], ok: true })
}

/// `floor`: certify one (km-1; m^(x k^n)) emptiness instance.
pub fn cmd_floor(n: u32, k: u32, m: u32, config: &RunConfig) -> Result<CommandOutput> {
    let search = config.search();
    let cert = verify_floor_instance(n, k, m, &search)?;
    let ok = cert.certification == Certification::CertifiedEmpty;
    let text = format!("floor instance (n, k, m) = ({n}, {k}, {m}): {}", cert_summary(&cert));
    Ok(CommandOutput { text, records: vec![cert_json(&cert)], ok })
}

/// `seventy-one`: the two emptiness certificates of the 9/4 bound in P^4.
pub fn cmd_seventy_one(m: u32, config: &RunConfig) -> Result<CommandOutput> {
    let search = config.search();
    let report = verify_71_lemma(m, &search)?;
    let text = format!(
        "71-point systems at m = {m}:\n  main:         {}\n  intermediate: {}",
        cert_summary(&report.main),
        cert_summary(&report.intermediate)
    );
    let records = vec![
        json!({"system": "main", "m": m, "certificate": cert_json(&report.main)}),
        json!({"system": "intermediate", "m": m, "certificate": cert_json(&report.intermediate)}),
    ];
    Ok(CommandOutput { text, records, ok: report.both_certified() })
}

/// `cremona`: reduce a system, optionally cross-checking each step against
/// the interpolation oracle.
pub fn cmd_cremona(
    n: u32,
    d: i64,
    mults_text: &str,
    check: bool,
    config: &RunConfig,
) -> Result<CommandOutput> {
    let mults = parse_mults(mults_text)?;
    let spec = LinearSystemSpec::new(n, d, mults)?;
    let chain = reduce_fully(&spec);
    let mut text = String::new();
    if chain.steps.is_empty() {
        let why = match cremona_reduce(&spec) {
            Ok(step) => format!("k = {} does not decrease the degree", step.k),
            Err(e) => e.to_string(),
        };
        let _ = writeln!(text, "no reduction applies to {spec}: {why}");
    }
    let _ = writeln!(text, "{chain}");
    let search = config.search();
    let field = search.field()?;
    let mut ok = true;
    let mut step_records = Vec::new();
    for (i, step) in chain.steps.iter().enumerate() {
        let mut record = step_json(step);
        if check {
            let seed_b = derive_seed(search.seed, 2 * i as u64);
            let seed_a = derive_seed(search.seed, 2 * i as u64 + 1);
            let before = generic_dimension(&step.before, seed_b, &field)?;
            let after = generic_dimension(&step.after, seed_a, &field)?;
            let agree = before.affine_dim == after.affine_dim;
            ok &= agree;
            let _ = writeln!(
                text,
                "step {i}: affine dim {} -> {} {}",
                before.affine_dim,
                after.affine_dim,
                if agree { "(preserved)" } else { "(MISMATCH)" }
            );
            record["oracle"] = json!({
                "dim_before": before.affine_dim,
                "dim_after": after.affine_dim,
                "agree": agree,
                "seed_before": seed_b,
                "seed_after": seed_a,
                "prime": search.prime,
            });
        }
        step_records.push(record);
    }
    text.pop();
    let record = json!({
        "input": spec.to_string(),
        "terminal": chain.terminal.to_string(),
        "steps": step_records,
        "prime": search.prime,
        "seed": search.seed,
    });
    Ok(CommandOutput { text, records: vec![record], ok })
}

fn step_json(step: &ReductionStep) -> Value {
    json!({
        "before": step.before.to_string(),
        "after": step.after.to_string(),
        "k": step.k,
        "base_indices": step.base_indices,
    })
}

/// One acceptance-criterion record of the `verify-paper` run.
#[derive(Debug, Clone)]
pub struct CriterionRecord {
    pub criterion: String,
    pub params: Value,
    pub expected: String,
    pub observed: String,
    pub certification: Option<String>,
    pub prime: u64,
    pub seed: u64,
    pub elapsed_ms: Option<u128>,
    pub pass: bool,
}

impl CriterionRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "criterion": self.criterion,
            "params": self.params,
            "expected": self.expected,
            "observed": self.observed,
            "certification": self.certification,
            "prime": self.prime,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
            "pass": self.pass,
        })
    }

    pub fn text_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let timing = match self.elapsed_ms {
            Some(ms) => format!(" [{ms} ms]"),
            None => String::new(),
        };
        format!("criterion {:<7} {status}{timing}  {}", self.criterion, self.observed)
    }
}

struct CriterionOutcome {
    params: Value,
    expected: String,
    observed: String,
    certification: Option<String>,
    pass: bool,
}

/// Runs the verification suite: the combinatorial lemma grid, the inequality
/// scans, the 71-point certificates, the floor-bound instances, the alpha
/// pipeline on five plane points, the containment criterion, and the Cremona
/// dimension-preservation scan. Long-running items (the m = 2 71-point
/// certificate) are skipped unless `config.long` is set.
pub fn verify_paper(config: &RunConfig) -> Result<Vec<CriterionRecord>> {
    let mut records = Vec::new();
    let search = config.search();
    let runs: Vec<(&str, Box<dyn FnOnce() -> Result<CriterionOutcome>>)> = vec![
        ("1", Box::new(move || criterion_lemma())),
        ("2", Box::new(move || criterion_ineq_scan())),
        ("3", Box::new(move || criterion_seventy_one(&search))),
        ("3-long", Box::new(move || criterion_seventy_one_long(&search))),
        ("4", Box::new(move || criterion_floor_instances(&search))),
        ("5", Box::new(move || criterion_alpha_pipeline(&search))),
        ("6", Box::new(move || criterion_containment(&search))),
        ("7", Box::new(move || criterion_cremona(&search))),
    ];
    for (id, run) in runs {
        if id == "3-long" && !config.long {
            continue;
        }
        let start = Instant::now();
        let outcome = run()?;
        let elapsed = start.elapsed().as_millis();
        records.push(CriterionRecord {
            criterion: id.to_string(),
            params: outcome.params,
            expected: outcome.expected,
            observed: outcome.observed,
            certification: outcome.certification,
            prime: config.prime,
            seed: config.seed,
            elapsed_ms: config.timings.then_some(elapsed),
            pass: outcome.pass,
        });
    }
    Ok(records)
}

pub fn cmd_verify_paper(config: &RunConfig) -> Result<CommandOutput> {
    let records = verify_paper(config)?;
    let ok = records.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &records {
        let _ = writeln!(text, "{}", r.text_line());
    }
    let _ = write!(
        text,
        "{} of {} criteria passed",
        records.iter().filter(|r| r.pass).count(),
        records.len()
    );
    let json_records = records.iter().map(|r| r.to_json()).collect();
    Ok(CommandOutput { text, records: json_records, ok })
}

fn criterion_lemma() -> Result<CriterionOutcome> {
    let mut failures = 0usize;
    for k in 4..=30u64 {
        for n in 3..=30u64 {
            if !check_lemma_part1(k, n) {
                failures += 1;
            }
        }
    }
    for n in 5..=60u64 {
        if !check_lemma_part2(n) {
            failures += 1;
        }
    }
    let spot1 = binomial(9, 3) == Nat::from(84u32) && Nat::from(84u32) > Nat::from(4u32).pow(3);
    let spot2 = binomial(10, 5) == Nat::from(252u32) && Nat::from(252u32) > Nat::from(3u32).pow(5);
    let negatives = !check_lemma_part1(3, 3) && !check_lemma_part1(3, 4);
    let pass = failures == 0 && spot1 && spot2 && negatives;
    Ok(CriterionOutcome {
        params: json!({"part1": {"k": "4..30", "n": "3..30"}, "part2": {"n": "5..60"}}),
        expected: "all grid cases hold; C(9,3)=84>64, C(10,5)=252>243; (3,3) and (3,4) fail part 1"
            .into(),
        observed: format!(
            "{failures} grid failures; spot values {}; negative controls {}",
            if spot1 && spot2 { "exact" } else { "WRONG" },
            if negatives { "fail as expected" } else { "UNEXPECTEDLY HOLD" }
        ),
        certification: None,
        pass,
    })
}

fn criterion_ineq_scan() -> Result<CriterionOutcome> {
    let clean = scan_ineq(4, 16, 70);
    let gap = scan_ineq(4, 71, 80);
    let pass = clean.is_empty() && gap == (71..=80).collect::<Vec<_>>();
    Ok(CriterionOutcome {
        params: json!({"n": 4, "ranges": ["16..70", "71..80"]}),
        expected: "no failures in 16..70; exactly {71..80} fail".into(),
        observed: format!("{} failures in 16..70; failures in 71..80: {gap:?}", clean.len()),
        certification: None,
        pass,
    })
}

fn criterion_seventy_one(search: &SearchConfig) -> Result<CriterionOutcome> {
    let first = verify_71_lemma(1, search)?;
    let second = verify_71_lemma(1, &search.with_seed(derive_seed(search.seed, 0x71)))?;
    let rank_ok = |r: &crate::waldschmidt::Lemma71Report| {
        r.main.trials.iter().all(|t| t.rank == 495 && t.cols == 495 && t.conds == 2485)
    };
    let pass = first.both_certified()
        && second.both_certified()
        && rank_ok(&first)
        && rank_ok(&second);
    Ok(CriterionOutcome {
        params: json!({"m": 1, "main": "L_4(8; 4x71)", "intermediate": "L_4(8; 8x4,4x7)"}),
        expected: "rank 495 on 2485x495 certifies the main system empty under two independent \
                   seeds; intermediate system also certified empty"
            .into(),
        observed: format!(
            "seed {}: main {}, intermediate {}; seed {}: main {}, intermediate {}",
            first.main.base_seed,
            cert_summary(&first.main),
            first.intermediate.certification,
            second.main.base_seed,
            cert_summary(&second.main),
            second.intermediate.certification,
        ),
        certification: Some(first.main.certification.as_str().into()),
        pass,
    })
}

fn criterion_seventy_one_long(search: &SearchConfig) -> Result<CriterionOutcome> {
    let spec = LinearSystemSpec::uniform(4, 17, 8, 71)?;
    let cert = is_empty_certified(&spec, search)?;
    let pass = cert.certification == Certification::CertifiedEmpty
        && cert.trials.iter().all(|t| t.rank == 5985 && t.conds == 23430);
    Ok(CriterionOutcome {
        params: json!({"m": 2, "main": "L_4(17; 8x71)"}),
        expected: "rank 5985 on 23430x5985 certifies the m = 2 main system empty".into(),
        observed: cert_summary(&cert),
        certification: Some(cert.certification.as_str().into()),
        pass,
    })
}

fn criterion_floor_instances(search: &SearchConfig) -> Result<CriterionOutcome> {
    let instances = [
        (2u32, 2u32, 1u32),
        (2, 2, 2),
        (2, 2, 3),
        (2, 3, 1),
        (2, 3, 2),
        (3, 2, 1),
        (3, 2, 2),
        (4, 2, 1),
    ];
    let mut observed = Vec::new();
    let mut pass = true;
    for (n, k, m) in instances {
        let cert = verify_floor_instance(n, k, m, search)?;
        let good = cert.certification == Certification::CertifiedEmpty;
        pass &= good;
        observed.push(format!("({n},{k},{m}) {}", cert.certification));
    }
    Ok(CriterionOutcome {
        params: json!({"instances": instances.iter().map(|t| format!("{t:?}")).collect::<Vec<_>>()}),
        expected: "every (km-1; m^(x k^n)) instance certified empty".into(),
        observed: observed.join(", "),
        certification: Some(if pass { "certified-empty".into() } else { "mixed".to_string() }),
        pass,
    })
}

fn criterion_alpha_pipeline(search: &SearchConfig) -> Result<CriterionOutcome> {
    let field = search.field()?;
    // alpha chain with certified-empty lower degrees.
    let mut alphas = Vec::new();
    let mut lower_certified = true;
    for m in 1..=3u32 {
        let res = alpha_symbolic(2, 5, m, search)?;
        for cert in &res.certificates[..res.certificates.len() - 1] {
            lower_certified &= cert.certification == Certification::CertifiedEmpty;
        }
        alphas.push(res.alpha);
    }
    let alpha_ok = alphas == vec![2, 4, 6];
    // Chudnovsky ratios 2 >= 3/2 at each m.
    let chud = chudnovsky_check(2, 5, &[1, 2, 3], search)?;
    let chud_ok = chud.iter().all(|r| r.holds);
    // Superabundance of the double conic.
    let spec = LinearSystemSpec::uniform(2, 4, 2, 5)?;
    let expected_zero = spec.expected_dimension() == num_bigint::BigInt::from(0);
    let pts = sample_points(2, 5, derive_seed(search.seed, 5), &field)?;
    let dim = crate::systems::system_dimension(&spec, &pts)?;
    let superabundant = dim.affine_dim == 1;
    // The kernel element is the square of the conic through the 5 points.
    let conic_spec = LinearSystemSpec::uniform(2, 2, 1, 5)?;
    let conic = interpolation_matrix(&conic_spec, &pts)?
        .kernel_vector()
        .ok_or_else(|| Error::InvalidArgument("conic kernel missing".into()))?;
    let quartic = interpolation_matrix(&spec, &pts)?
        .kernel_vector()
        .ok_or_else(|| Error::InvalidArgument("quartic kernel missing".into()))?;
    let square = multiply_forms(&field, 2, 2, &conic, 2, &conic);
    let is_square = proportional(&field, &quartic, &square);
    let pass = alpha_ok && lower_certified && chud_ok && expected_zero && superabundant && is_square;
    Ok(CriterionOutcome {
        params: json!({"n": 2, "s": 5, "m": [1, 2, 3]}),
        expected: "alpha = 2, 4, 6 with certified-empty lower degrees; ratios >= 3/2; \
                   expected dim 0 but affine dim 1; kernel is the squared conic"
            .into(),
        observed: format!(
            "alpha = {alphas:?}, lower degrees certified: {lower_certified}, Chudnovsky holds: \
             {chud_ok}, expected dim 0: {expected_zero}, affine dim = {}, kernel square check: \
             {is_square}",
            dim.affine_dim
        ),
        certification: Some(dim.certification.as_str().into()),
        pass,
    })
}

fn criterion_containment(search: &SearchConfig) -> Result<CriterionOutcome> {
    let cases = [(2u32, 4usize, 1u32), (3, 8, 1), (4, 16, 1)];
    let mut observed = Vec::new();
    let mut pass = true;
    for (n, s, m) in cases {
        let v = containment_criterion_check(n, s, m, search)?;
        pass &= v.holds;
        if (n, s, m) == (4, 16, 1) {
            // Evidence records the regularity and the deepest certificate.
            pass &= v.reg == 4 && v.required == 7 && v.alpha_nm == 9;
            let deepest = v
                .alpha_detail
                .certificates
                .iter()
                .find(|c| c.spec.d == 8)
                .ok_or_else(|| Error::InvalidArgument("missing degree-8 certificate".into()))?;
            let deep_ok = deepest.certification == Certification::CertifiedEmpty
                && deepest.trials.iter().all(|t| t.rank == 495 && t.conds == 560);
            pass &= deep_ok;
            observed.push(format!(
                "(4,16,1): reg {}, required {}, alpha {}, degree-8 rank {}/495 against 560",
                v.reg,
                v.required,
                v.alpha_nm,
                deepest.trials.last().map(|t| t.rank).unwrap_or(0)
            ));
        } else {
            observed.push(format!(
                "({n},{s},{m}): reg {}, required {}, alpha {} -> {}",
                v.reg,
                v.required,
                v.alpha_nm,
                if v.holds { "holds" } else { "FAILS" }
            ));
        }
    }
    Ok(CriterionOutcome {
        params: json!({"cases": cases.iter().map(|t| format!("{t:?}")).collect::<Vec<_>>()}),
        expected: "criterion holds for all three; (4,16,1) shows reg 4, required 7, alpha 9 \
                   with degree 8 certified empty at rank 495 against 560 conditions"
            .into(),
        observed: observed.join("; "),
        certification: Some("certified-empty".into()),
        pass,
    })
}

fn criterion_cremona(search: &SearchConfig) -> Result<CriterionOutcome> {
    let scan = validate_dimension_preservation(200, search)?;
    let field = search.field()?;
    let worked = LinearSystemSpec::new(2, 4, vec![2, 2, 2])?;
    let step = cremona_reduce(&worked)?;
    let before = generic_dimension(&worked, derive_seed(search.seed, 0xBE), &field)?;
    let after = generic_dimension(&step.after, derive_seed(search.seed, 0xAF), &field)?;
    let worked_ok = before.affine_dim == 6 && after.affine_dim == 6;
    let pass = scan.mismatches.is_empty() && worked_ok;
    Ok(CriterionOutcome {
        params: json!({"random_steps": 200, "worked_case": "L_2(4; 2x3) <-> L_2(2; -)"}),
        expected: "dimension preserved exactly on 200 randomized applicable steps; worked case \
                   gives affine dims 6 = 6"
            .into(),
        observed: format!(
            "{} steps checked ({} candidates drawn), {} mismatches; worked case dims {} = {}",
            scan.checked.len(),
            scan.attempts,
            scan.mismatches.len(),
            before.affine_dim,
            after.affine_dim
        ),
        certification: None,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_syntax() {
        assert_eq!(parse_range("4..30").unwrap(), (4, 30));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("9..2").is_err());
        assert!(parse_range("x..2").is_err());
    }

    #[test]
    fn lemma_command_reports_all_hold() {
        let out = cmd_lemma(1, Some((4, 8)), (3, 6)).unwrap();
        assert!(out.ok);
        assert!(out.text.contains("all hold"));
        let out = cmd_lemma(1, Some((3, 3)), (3, 3)).unwrap();
        assert!(!out.ok);
    }

    #[test]
    fn ineq_scan_command() {
        let out = cmd_ineq_scan(4, 16, 70).unwrap();
        assert!(out.text.contains("0 failures"));
        assert!(cmd_ineq_scan(4, 0, 3).is_err());
    }

    #[test]
    fn dim_command_negative_degree() {
        let config = RunConfig::default();
        let out = cmd_dim(2, -1, "1", None, &config).unwrap();
        assert!(out.text.contains("certified-empty"));
        assert_eq!(out.records[0]["cols"], 0);
    }

    #[test]
    fn chudnovsky_command_holds() {
        let config = RunConfig::default();
        let out = cmd_chudnovsky(2, 5, &[1, 2], &config).unwrap();
        assert!(out.ok);
        assert_eq!(out.records.len(), 2);
        assert_eq!(out.records[0]["threshold"], "3/2");
    }

    #[test]
    fn json_rendering_is_deterministic() {
        let config = RunConfig::default();
        let a = cmd_alpha(2, 5, 2, &config).unwrap().render(true);
        let b = cmd_alpha(2, 5, 2, &config).unwrap().render(true);
        assert_eq!(a, b);
        assert!(a.contains("\"alpha\":4"));
    }
}
