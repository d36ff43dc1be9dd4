//! Command-line front end. Every command renders into an [`Outcome`] so the
//! binary and the tests share one code path.

use crate::branching::{classify_2x2, count_m_types};
use crate::catalog::{instantiate, params, CaseDescriptor, FamilyId, Params};
use crate::error::Error;
use crate::hyper2h1::monic_via_hypergeometric;
use crate::matfun::{parse_rat, ri, HalfLaurentMatrix, Mat, MatrixPolynomial, Rat};
use crate::odekit::{build_operator, build_weight, commutant, det_factor_check, extract_rs, verify_symmetry};
use crate::orthopoly::{eigen_check, inner_product, monic_family, moments, recurrence_residual, three_term};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "mvcp", version, about = "Matrix-valued classical pairs: catalog, checks and polynomials")]
pub struct Cli {
    /// Worker threads for parallel verification.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List families with their parameters and bounds.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a case with its derived S̃, R̃, W and D.
    Emit {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the exact checks on one case, or on the default grid with --all.
    Verify {
        #[command(flatten)]
        case: OptCaseArgs,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        /// Verify one default point per family.
        #[arg(long)]
        all: bool,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        perturb_a0: bool,
    },
    /// Coefficients of the monic polynomials P_0..P_dmax and their recurrence.
    Mvop {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 2)]
        dmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// K → K₁ → M branching of a K-weight, or the 2×2 classification.
    Branch {
        #[arg(long)]
        n: usize,
        /// Comma-separated ε-coordinates b_1..b_n.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Option<Vec<i64>>,
        /// Instead of one weight, list the two-jump weights with two M-types.
        #[arg(long, conflicts_with = "mu")]
        classify: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Monic C1 polynomials from the ₂H₁ series, compared with the moment route.
    Hyper {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct CaseArgs {
    #[arg(long)]
    pub family: String,
    /// `name=value`, value an integer or `p/q`.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, Rat)>,
}

#[derive(Args, Debug)]
pub struct OptCaseArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, Rat)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

fn parse_param(s: &str) -> std::result::Result<(String, Rat), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let v = parse_rat(v).ok_or_else(|| format!("{v:?} is not a rational number"))?;
    Ok((k.trim().to_string(), v))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::UnknownFamily(_)
            | Error::ParamOutOfBounds(_)
            | Error::PreconditionViolated(_)
            | Error::UnsupportedFamily(_) => 2,
            _ => 1,
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    pool.install(|| dispatch(cli.command))
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::List { format } => Outcome::ok(cmd_list(format)),
        Command::Emit { format: Format::Csv, .. } => Outcome::usage("emit supports json and text only"),
        Command::Emit { case, format } => match load(&case.family, &case.params) {
            Ok(c) => match cmd_emit(&c, format) {
                Ok(s) => Outcome::ok(s),
                Err(e) => Outcome::error(&e),
            },
            Err(e) => Outcome::error(&e),
        },
        Command::Verify { case, dmax, all, timing, format, perturb_a0 } => {
            let cases = match (all, &case.family) {
                (true, None) => default_points().into_iter().map(|(f, p)| instantiate(f, &p)).collect(),
                (false, Some(f)) => load(f, &case.params).map(|c| vec![c]),
                _ => return Outcome::usage("verify needs exactly one of --family or --all"),
            };
            match cases {
                Ok(cases) => {
                    let reports: Vec<RunReport> = cases.par_iter().map(|c| verify_case(c, dmax, perturb_a0)).collect();
                    let code = if reports.iter().all(RunReport::passed) { 0 } else { 1 };
                    Outcome { code, stdout: render_reports(&reports, format, timing), stderr: String::new() }
                }
                Err(e) => Outcome::error(&e),
            }
        }
        Command::Mvop { case, dmax, format } => {
            match load(&case.family, &case.params).and_then(|c| cmd_mvop(&c, dmax, format)) {
                Ok(s) => Outcome::ok(s),
                Err(e) => Outcome::error(&e),
            }
        }
        Command::Branch { n, mu, classify, format } => match (mu, classify) {
            (Some(mu), None) => match cmd_branch(n, &mu, format) {
                Ok(s) => Outcome::ok(s),
                Err(e) => Outcome::error(&e),
            },
            (None, Some(bound)) => cmd_classify(n, bound, format),
            _ => Outcome::usage("branch needs --mu or --classify"),
        },
        Command::Hyper { case, dmax, format } => match load(&case.family, &case.params) {
            Ok(c) => cmd_hyper(&c, dmax, format),
            Err(e) => Outcome::error(&e),
        },
    }
}

fn load(family: &str, ps: &[(String, Rat)]) -> crate::Result<CaseDescriptor> {
    let f: FamilyId = family.parse()?;
    let p: Params = ps.iter().cloned().collect();
    instantiate(f, &p)
}

/// One representative parameter point per family.
pub fn default_points() -> Vec<(FamilyId, Params)> {
    vec![
        (FamilyId::A1, params([("n", ri(3)), ("i", ri(1)), ("m", ri(2))])),
        (FamilyId::A2, params([("n", ri(4)), ("i", ri(2)), ("m", ri(-2))])),
        (FamilyId::B, params([("n", ri(5)), ("i", ri(3))])),
        (FamilyId::C1, params([("n", ri(3))])),
        (FamilyId::C2, params([("n", ri(4))])),
        (FamilyId::G1, params([])),
        (FamilyId::SP3x3, params([("j", ri(1))])),
    ]
}

fn mat_json(m: &Mat) -> Value {
    Value::Array(
        m.row_vecs().iter().map(|row| Value::Array(row.iter().map(|x| Value::String(x.to_string())).collect())).collect(),
    )
}

fn matpoly_json(p: &MatrixPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(mat_json).collect())
}

fn psi0_json(m: &HalfLaurentMatrix) -> Value {
    let n = m.size();
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| {
                            Value::Array(
                                m.get(i, j)
                                    .terms()
                                    .map(|(k, c)| json!([k, c.numer().to_string(), c.denom().to_string()]))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

fn params_json(p: &Params) -> Value {
    Value::Object(p.iter().map(|(k, v)| (k.clone(), Value::String(v.to_string()))).collect())
}

pub fn cmd_list(format: Format) -> String {
    match format {
        Format::Json => {
            let v: Vec<Value> = FamilyId::ALL
                .iter()
                .map(|f| json!({"family": f.name(), "group": f.group(), "params": f.param_names(), "bounds": f.bounds()}))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut s = String::from("family,group,params,bounds\n");
            for f in FamilyId::ALL {
                let _ = writeln!(s, "{},{},{},\"{}\"", f.name(), f.group(), f.param_names().join(" "), f.bounds());
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for f in FamilyId::ALL {
                let _ = writeln!(s, "{:<6} {:<28} params: {:<10} {}", f.name(), f.group(), f.param_names().join(", "), f.bounds());
            }
            s
        }
    }
}

pub fn cmd_emit(case: &CaseDescriptor, format: Format) -> crate::Result<String> {
    let fo = extract_rs(&case.psi0)?;
    let w = build_weight(case)?;
    let d = build_operator(case)?;
    let k = &case.constants;
    match format {
        Format::Json => {
            let v = json!({
                "family": case.family.name(),
                "params": params_json(&case.params),
                "constants": {
                    "lambda1": k.lambda1.to_string(),
                    "phi_min": k.phi_min.to_string(),
                    "phi_max": k.phi_max.to_string(),
                    "rp2": k.rp2.to_string(),
                    "alpha": k.alpha.to_string(),
                    "beta": k.beta.to_string(),
                },
                "psi0": psi0_json(&case.psi0),
                "T": mat_json(&case.t),
                "Lambda0": mat_json(&case.lambda0),
                "S_tilde": mat_json(&fo.s_tilde),
                "R_tilde": mat_json(&fo.r_tilde),
                "W": {"alpha": w.alpha.to_string(), "beta": w.beta.to_string(), "core": matpoly_json(&w.core)},
                "D": {"C0": mat_json(&d.c0), "C1": mat_json(&d.c1), "A0": mat_json(&d.a0)},
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("json")))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "case     {}", case.label());
            let _ = writeln!(s, "T        {}", case.t);
            let _ = writeln!(s, "Lambda0  {}", case.lambda0);
            for i in 0..case.size() {
                let row: Vec<String> = (0..case.size()).map(|j| case.psi0.get(i, j).to_string()).collect();
                let _ = writeln!(s, "psi0[{i}]  [{}]", row.join(", "));
            }
            let _ = writeln!(s, "S_tilde  {}", fo.s_tilde);
            let _ = writeln!(s, "R_tilde  {}", fo.r_tilde);
            let _ = writeln!(s, "W        x^({}) (1-x)^({}) * {}", w.beta, w.alpha, w.core);
            let _ = writeln!(s, "C0       {}", d.c0);
            let _ = writeln!(s, "C1       {}", d.c1);
            let _ = writeln!(s, "A0       {}", d.a0);
            Ok(s)
        }
        Format::Csv => unreachable!("rejected before dispatch"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// `None` when the check does not apply to the case.
    pub passed: Option<bool>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub case: String,
    pub family: FamilyId,
    pub params: Params,
    pub checks: Vec<Check>,
    pub millis: u128,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed != Some(false))
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name, passed: Some(passed), detail: detail.into() }
}

fn skipped(name: &'static str, detail: impl Into<String>) -> Check {
    Check { name, passed: None, detail: detail.into() }
}

pub fn verify_case(case: &CaseDescriptor, dmax: usize, perturb_a0: bool) -> RunReport {
    let t0 = Instant::now();
    let mut checks = Vec::new();
    let finish = |checks, t0: Instant| RunReport {
        case: case.label(),
        family: case.family,
        params: case.params.clone(),
        checks,
        millis: t0.elapsed().as_millis(),
    };
    let (w, mut d) = match build_weight(case).and_then(|w| Ok((w, build_operator(case)?))) {
        Ok(x) => x,
        Err(e) => {
            checks.push(check("construction", false, e.to_string()));
            return finish(checks, t0);
        }
    };
    if perturb_a0 {
        d.a0[(0, 0)] += ri(1);
    }

    let sym = verify_symmetry(&w, &d);
    let detail = if sym.passed() {
        "both identities hold".to_string()
    } else {
        format!("identity 1 residual {}; identity 2 residual {}", sym.residual1, sym.residual2)
    };
    checks.push(check("symmetry", sym.passed(), detail));

    checks.push(match det_factor_check(&w) {
        Ok((c, a, b)) => check("det_factor", true, format!("{c} x^{a} (1-x)^{b}")),
        Err(e) => check("det_factor", false, e.to_string()),
    });

    let dim = commutant(&w).len();
    checks.push(check("commutant", dim >= 1, format!("dimension {dim}")));

    match moments(&w, 2 * dmax + 2).and_then(|mt| monic_family(&mt, dmax + 1)) {
        Ok(mf) => {
            let mut bad = Vec::new();
            for i in 0..=dmax {
                for j in 0..i {
                    match inner_product(&mf.polys[i], &mf.polys[j], &mf.moments) {
                        Ok(g) if g.is_zero() => {}
                        _ => bad.push(format!("<P{i},P{j}>")),
                    }
                }
            }
            checks.push(check("orthogonality", bad.is_empty(), if bad.is_empty() { format!("d <= {dmax}") } else { bad.join(" ") }));

            let bad: Vec<String> =
                (0..=dmax).filter(|&k| eigen_check(&d, &mf.polys[k]).is_err()).map(|k| format!("P{k}")).collect();
            checks.push(check("eigen", bad.is_empty(), if bad.is_empty() { format!("d <= {dmax}") } else { bad.join(" ") }));

            let rec = three_term(&mf).map(|tt| {
                (0..=dmax).filter(|&k| !recurrence_residual(&mf, k, &tt[k].0, &tt[k].1).is_zero()).count()
            });
            checks.push(match rec {
                Ok(0) => check("recurrence", true, format!("d <= {dmax}")),
                Ok(n) => check("recurrence", false, format!("{n} residuals nonzero")),
                Err(e) => check("recurrence", false, e.to_string()),
            });

            if case.family == FamilyId::C1 {
                let bad: Vec<String> = (0..=dmax)
                    .filter(|&k| monic_via_hypergeometric(case, k).map(|p| p != mf.polys[k]).unwrap_or(true))
                    .map(|k| format!("P{k}"))
                    .collect();
                checks.push(check("hypergeometric", bad.is_empty(), if bad.is_empty() { format!("d <= {dmax}") } else { bad.join(" ") }));
            }
        }
        Err(Error::ExactUnavailable) => {
            for name in ["orthogonality", "eigen", "recurrence"] {
                checks.push(skipped(name, "exact moments need integer exponents"));
            }
        }
        Err(e) => checks.push(check("orthogonality", false, e.to_string())),
    }
    finish(checks, t0)
}

fn status(c: &Check) -> &'static str {
    match c.passed {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "SKIP",
    }
}

fn render_reports(reports: &[RunReport], format: Format, timing: bool) -> String {
    match format {
        Format::Json => {
            let v: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let mut o = json!({
                        "case": r.case,
                        "family": r.family.name(),
                        "params": params_json(&r.params),
                        "passed": r.passed(),
                        "checks": r.checks.iter().map(|c| json!({"name": c.name, "status": status(c), "detail": c.detail})).collect::<Vec<_>>(),
                    });
                    if timing {
                        o["millis"] = json!(r.millis as u64);
                    }
                    o
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut s = String::from("case,check,status,detail\n");
            for r in reports {
                for c in &r.checks {
                    let _ = writeln!(s, "\"{}\",{},{},\"{}\"", r.case, c.name, status(c), c.detail.replace('"', "'"));
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                if timing {
                    let _ = writeln!(s, "{}  ({} ms)", r.case, r.millis);
                } else {
                    let _ = writeln!(s, "{}", r.case);
                }
                for c in &r.checks {
                    let _ = writeln!(s, "  {} {:<15} {}", status(c), c.name, c.detail);
                }
                let _ = writeln!(s, "  => {}", if r.passed() { "PASS" } else { "FAIL" });
            }
            s
        }
    }
}

pub fn cmd_mvop(case: &CaseDescriptor, dmax: usize, format: Format) -> crate::Result<String> {
    let w = build_weight(case)?;
    let mt = moments(&w, 2 * dmax + 2)?;
    let mf = monic_family(&mt, dmax + 1)?;
    let tt = three_term(&mf)?;
    let polys = &mf.polys[..=dmax];
    let rec = &tt[..=dmax];
    Ok(match format {
        Format::Json => {
            let v = json!({
                "case": case.label(),
                "P": polys.iter().enumerate().map(|(d, p)| json!({"d": d, "coeffs": matpoly_json(p)})).collect::<Vec<_>>(),
                "recurrence": rec.iter().enumerate().map(|(d, (b, c))| json!({"d": d, "B": mat_json(b), "C": mat_json(c)})).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut s = String::from("kind,d,power,row,col,value\n");
            let mut put = |kind: &str, d: usize, k: usize, m: &Mat| {
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        let _ = writeln!(s, "{kind},{d},{k},{i},{j},{}", m[(i, j)]);
                    }
                }
            };
            for (d, p) in polys.iter().enumerate() {
                for (k, c) in p.coeffs().iter().enumerate() {
                    put("P", d, k, c);
                }
            }
            for (d, (b, c)) in rec.iter().enumerate() {
                put("B", d, 0, b);
                put("C", d, 0, c);
            }
            s
        }
        Format::Text => {
            let mut s = format!("{}\n", case.label());
            for (d, p) in polys.iter().enumerate() {
                let _ = writeln!(s, "P{d}:");
                for (k, c) in p.coeffs().iter().enumerate() {
                    let _ = writeln!(s, "  x^{k}  {c}");
                }
            }
            for (d, (b, c)) in rec.iter().enumerate() {
                let _ = writeln!(s, "B{d} = {b}");
                let _ = writeln!(s, "C{d} = {c}");
            }
            s
        }
    })
}

pub fn cmd_branch(n: usize, mu: &[i64], format: Format) -> crate::Result<String> {
    if n > 6 {
        return Err(Error::PreconditionViolated(format!("n = {n} exceeds 6")));
    }
    let counts = count_m_types(n, mu)?;
    let fmt_w = |w: &[i64]| w.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    Ok(match format {
        Format::Json => {
            let v = json!({
                "n": n,
                "mu": mu,
                "k1_types": counts.k1_types.iter().map(|(nu, m)| json!({"nu": nu, "mult": m})).collect::<Vec<_>>(),
                "m_types_doubled": counts.m_types.iter().collect::<Vec<_>>(),
                "num_k1_types": counts.k1_types.len(),
                "num_m_types": counts.m_types.len(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut s = String::from("mu,num_k1_types,num_m_types\n");
            let _ = writeln!(s, "{},{},{}", fmt_w(mu), counts.k1_types.len(), counts.m_types.len());
            s
        }
        Format::Text => {
            let mut s = format!("mu = ({})\nK1-types: {}\n", fmt_w(mu), counts.k1_types.len());
            for (nu, m) in &counts.k1_types {
                let _ = writeln!(s, "  ({})  mult {m}", fmt_w(nu));
            }
            let _ = writeln!(s, "M-types (doubled coordinates): {}", counts.m_types.len());
            for w in &counts.m_types {
                let _ = writeln!(s, "  ({})", fmt_w(w));
            }
            s
        }
    })
}

fn cmd_classify(n: usize, bound: i64, format: Format) -> Outcome {
    if !(3..=6).contains(&n) || bound < 0 {
        return Outcome::usage("classify needs 3 <= n <= 6 and a nonnegative bound");
    }
    let found = classify_2x2(n, bound);
    let fmt_w = |w: &Vec<i64>| w.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    Outcome::ok(match format {
        Format::Json => format!("{}\n", json!({"n": n, "bound": bound, "two_m_types": found})),
        Format::Csv | Format::Text => found.iter().map(|w| format!("{}\n", fmt_w(w))).collect(),
    })
}

pub fn cmd_hyper(case: &CaseDescriptor, dmax: usize, format: Format) -> Outcome {
    let run = || -> crate::Result<(Vec<MatrixPolynomial>, Vec<bool>)> {
        let w = build_weight(case)?;
        let mt = moments(&w, 2 * dmax)?;
        let mf = monic_family(&mt, dmax)?;
        let mut polys = Vec::new();
        let mut agree = Vec::new();
        for d in 0..=dmax {
            let p = monic_via_hypergeometric(case, d)?;
            agree.push(p == mf.polys[d]);
            polys.push(p);
        }
        Ok((polys, agree))
    };
    let (polys, agree) = match run() {
        Ok(x) => x,
        Err(e) => return Outcome::error(&e),
    };
    let stdout = match format {
        Format::Json => {
            let v = json!({
                "case": case.label(),
                "P": polys.iter().zip(&agree).enumerate()
                    .map(|(d, (p, a))| json!({"d": d, "coeffs": matpoly_json(p), "matches_moments": a}))
                    .collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Csv => {
            let mut s = String::from("d,matches_moments\n");
            for (d, a) in agree.iter().enumerate() {
                let _ = writeln!(s, "{d},{a}");
            }
            s
        }
        Format::Text => {
            let mut s = format!("{}\n", case.label());
            for (d, (p, a)) in polys.iter().zip(&agree).enumerate() {
                let _ = writeln!(s, "P{d} [{}]", if *a { "matches moments" } else { "MISMATCH" });
                for (k, c) in p.coeffs().iter().enumerate() {
                    let _ = writeln!(s, "  x^{k}  {c}");
                }
            }
            s
        }
    };
    Outcome { code: if agree.iter().all(|&a| a) { 0 } else { 1 }, stdout, stderr: String::new() }
}
