//! Command dispatch and report emission.

use std::fmt::Write as _;

use gamma_depth_core::gamma::{
    cd_report, delta_invariant, gamma_depth, is_componentwise_linear, is_gamma_regular, is_gamma_sequence,
    is_hat_gamma_regular, socle, splitting_audit, verify_main_theorem, DeltaOutcome,
};
use gamma_depth_core::resolution::syzygy_modules;
use gamma_depth_core::twovar::{
    beta_formula_check, check_build, decompose_cwl_ideal, BetaFormulaOutcome, CwlDecomposition, CwlPart,
};
use gamma_depth_core::{betti_table, BettiTable, Error, LinearForm, Polynomial, PresentedModule};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::family::CorpusConfig;
use crate::instance::{parse_forms, parse_parts, parse_range, Command, InstanceFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Ok,
    Agree,
    Disagree,
}

impl Status {
    fn from_agree(agree: bool) -> Self {
        if agree {
            Status::Agree
        } else {
            Status::Disagree
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub trials: usize,
    pub cap: Option<u32>,
    pub prime: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 1,
            trials: 20,
            cap: None,
            prime: gamma_depth_core::DEFAULT_PRIME as u64,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub status: Status,
    pub text: String,
    pub report: Value,
}

fn output(status: Status, text: String, report: impl Serialize) -> Result<CommandOutput> {
    Ok(CommandOutput {
        status,
        text,
        report: serde_json::to_value(report).expect("reports serialize"),
    })
}

/// Turns input rejections from the library into refusals.
fn refuse(e: Error) -> CliError {
    match e {
        Error::Precondition(m) | Error::Invalid(m) => CliError::Refused(m),
        other => CliError::Core(other),
    }
}

fn pretty_form(z: &LinearForm) -> String {
    z.to_polynomial().pretty()
}

fn pretty_forms(zs: &[LinearForm]) -> String {
    let s: Vec<String> = zs.iter().map(pretty_form).collect();
    format!("[{}]", s.join(", "))
}

fn t_polynomial(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{}t", c),
            _ => format!("{}t^{}", c, i),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn free_summary(t: &BettiTable, i: usize) -> String {
    let parts: Vec<String> = t
        .degrees(i)
        .into_iter()
        .map(|j| {
            let b = t.get(i, j);
            let base = if j == 0 { "R".to_string() } else { format!("R({})", -j) };
            if b == 1 {
                base
            } else {
                format!("{}^{}", base, b)
            }
        })
        .collect();
    parts.join(" + ")
}

fn arg_u64(cmd: &Command, key: &str) -> Option<u64> {
    cmd.args.get(key).map(|v| v.parse().expect("checked by the parser"))
}

fn single_form(file: &InstanceFile, cmd: &Command) -> Result<LinearForm> {
    Ok(parse_forms(file.ring, &cmd.args["z"], cmd.line, 1)?.remove(0))
}

/// Runs one parsed command against the objects of `file`.
pub fn run_command(cmd: &Command, file: &InstanceFile, opts: &Options) -> Result<CommandOutput> {
    let ring = file.ring;
    let object = cmd.object.as_deref().map(|n| file.object(n).expect("checked by the parser"));
    let name = cmd.object.clone().unwrap_or_default();
    let module = || object.map(|o| o.module(ring)).expect("command takes an object");
    let (seed, trials) = (opts.seed, opts.trials);
    match cmd.name.as_str() {
        "betti" => {
            let t = betti_table(&module());
            let p = t.poincare();
            let text = format!("{}p(t) = {}\n", t, t_polynomial(&p));
            let mut report = t.to_json();
            report["poincare"] = json!(p);
            output(Status::Ok, text, report)
        }
        "resolve" => resolve(&module()),
        "socle" => {
            let s = socle(&module());
            let mut text = format!("dim soc = {}\n", s.total());
            for (d, v) in s.dims.nonzero() {
                let _ = writeln!(text, "  degree {}: {}", d, v);
            }
            output(Status::Ok, text, json!({"total": s.total(), "dims": s.dims.nonzero()}))
        }
        "hilbert" => {
            let m = module();
            let h = m.hilbert_series();
            let upto = arg_u64(cmd, "upto").unwrap_or(10) as i32;
            let lo = m.free_module().twists().iter().copied().min().unwrap_or(0).min(0);
            let values = m.hilbert_function(lo, upto);
            let numerator: Vec<(i32, i64)> = h.numerator.terms().filter(|(_, c)| *c != 0).collect();
            let mut num = String::new();
            for (k, &(e, c)) in numerator.iter().enumerate() {
                if k > 0 {
                    num.push_str(if c < 0 { " - " } else { " + " });
                } else if c < 0 {
                    num.push('-');
                }
                let a = c.unsigned_abs();
                num.push_str(&match e {
                    0 => a.to_string(),
                    1 if a == 1 => "u".into(),
                    1 => format!("{}u", a),
                    _ if a == 1 => format!("u^{}", e),
                    _ => format!("{}u^{}", a, e),
                });
            }
            let mut text = format!(
                "H(u) = ({}) / (1-u)^{}\ndimension {}, length {}\n",
                if num.is_empty() { "0" } else { num.as_str() },
                h.nvars,
                h.dimension().map_or("-".to_string(), |d| d.to_string()),
                h.length().map_or("inf".to_string(), |l| l.to_string()),
            );
            let vals: Vec<String> = (lo..=upto).map(|d| format!("{}:{}", d, values.get(d))).collect();
            let _ = writeln!(text, "H = {}", vals.join(" "));
            output(
                Status::Ok,
                text,
                json!({
                    "numerator": numerator,
                    "nvars": h.nvars,
                    "dimension": h.dimension(),
                    "length": h.length(),
                    "values": (lo..=upto).map(|d| (d, values.get(d))).collect::<Vec<_>>(),
                }),
            )
        }
        "gamma-test" => {
            let z = single_form(file, cmd)?;
            let c = is_gamma_regular(&module(), &z)?;
            let text = format!(
                "z = {}: {}\nbeta1 = {}, alpha = {}, beta1(M/zM) = {}\ncriteria: ii {}, iii {}, iv {}\n",
                pretty_form(&z),
                if c.verdict { "gamma-regular" } else { "not gamma-regular" },
                c.beta1,
                c.alpha,
                c.beta1_bar,
                c.criteria.ii,
                c.criteria.iii.map_or("skipped".to_string(), |b| b.to_string()),
                c.criteria.iv,
            );
            output(Status::from_agree(c.criteria.agree()), text, c)
        }
        "gamma-seq" => {
            let zs = parse_forms(ring, &cmd.args["z"], cmd.line, 1)?;
            let c = is_gamma_sequence(&module(), &zs)?;
            let alphas: Vec<String> = c.alphas.iter().map(|a| a.to_string()).collect();
            let text = format!(
                "{} {} a gamma-regular sequence\nalphas [{}], beta1 = {}, final beta1 = {}, stepwise {:?}\n",
                pretty_forms(&zs),
                if c.accepted { "is" } else { "is not" },
                alphas.join(", "),
                c.beta1,
                c.beta1_final,
                c.stepwise
            );
            output(Status::from_agree(c.agree), text, c)
        }
        "gamma-depth" => {
            let w = gamma_depth(&module(), trials, seed);
            let text = format!(
                "gamma-depth {}\nwitness {}, alphas {:?}, verified {}\n",
                w.depth,
                pretty_forms(&w.sequence),
                w.alphas,
                w.verified
            );
            output(Status::from_agree(w.verified), text, w)
        }
        "hat-gamma-test" => {
            let z = single_form(file, cmd)?;
            let bound = arg_u64(cmd, "bound").map(|b| b as u32);
            let r = is_hat_gamma_regular(&module(), &z, bound)?;
            let text = format!(
                "z = {}: {}\nper degree {:?}\nstrongly m-full scan up to {}: {}\n",
                pretty_form(&z),
                if r.verdict { "hat-gamma-regular" } else { "not hat-gamma-regular" },
                r.per_degree,
                r.scan_bound,
                r.scan
            );
            output(Status::from_agree(r.agree), text, r)
        }
        "cwl" => {
            let r = is_componentwise_linear(&module());
            let mut text = format!("componentwise linear: {}\n", r.cwl);
            for d in &r.degrees {
                let _ = writeln!(text, "  component {}: {}", d.j, if d.linear { "linear" } else { "not linear" });
            }
            output(Status::Ok, text, r)
        }
        "verify-main" => {
            let r = verify_main_theorem(&module(), trials, seed);
            let text = format!(
                "Syz1 componentwise linear: {}\ngamma-depth {} of {}, witness {}, alphas {:?}{}\n",
                r.cwl,
                r.gamma_depth,
                r.n,
                pretty_forms(&r.witness.sequence),
                r.witness.alphas,
                if r.retried { ", retried" } else { "" }
            );
            let report = r.to_json(&name);
            output(Status::from_agree(r.agree), text, report)
        }
        "splitting-audit" => {
            let z = single_form(file, cmd)?;
            let r = splitting_audit(&module(), &z).map_err(refuse)?;
            let mut text = format!("alpha = {}\n", r.alpha);
            for i in &r.items {
                let _ = writeln!(
                    text,
                    "  ({}) {}: {} vs {}",
                    i.item,
                    if i.holds { "holds" } else { "FAILS" },
                    i.lhs,
                    i.rhs
                );
            }
            output(Status::from_agree(r.all_hold()), text, r)
        }
        "delta" => {
            let cap = arg_u64(cmd, "cap").map(|c| c as u32).or(opts.cap);
            let o = delta_invariant(&module(), cap, trials, seed);
            let (status, text) = match &o {
                DeltaOutcome::Found { delta, witness } => (
                    Status::Agree,
                    format!("delta = {}\nwitness {}\n", delta, pretty_forms(&witness.sequence)),
                ),
                DeltaOutcome::CapExceeded { cap } => (
                    Status::Disagree,
                    format!("no C_i M with full gamma-depth for i <= {}\n", cap),
                ),
            };
            output(status, text, o)
        }
        "cd" => {
            let r = cd_report(&module(), trials, seed);
            let text = format!(
                "cd = {}, gamma-depth {}, gamma-depth of Syz1 {}\ncd + gamma-depth <= n: {}\nSyz1 growth: {}\n",
                r.cd, r.gamma_depth, r.syz_gamma_depth, r.bound_holds, r.growth_holds
            );
            output(Status::from_agree(r.bound_holds && r.growth_holds), text, r)
        }
        "twovar-check" => {
            let ideal = object.and_then(|o| o.ideal(ring)).expect("checked by the parser");
            match beta_formula_check(&ideal, trials, seed).map_err(refuse)? {
                BetaFormulaOutcome::WrongPd { pd } => Err(CliError::Refused(format!("pd(R/I) = {}, not 2", pd))),
                BetaFormulaOutcome::Checked(r) => {
                    let text = format!(
                        "beta1 = {}, indeg(I) = {}, indeg of torsion = {}\nformula {}, cwl {}, gamma-depth 2 {}, socle test {}\n",
                        r.beta1, r.indeg_generators, r.indeg_torsion, r.formula, r.cwl, r.full_depth, r.socle_test
                    );
                    output(Status::from_agree(r.agree), text, r)
                }
            }
        }
        "twovar-decompose" => {
            let ideal = object.and_then(|o| o.ideal(ring)).expect("checked by the parser");
            let d = decompose_cwl_ideal(&ideal).map_err(refuse)?;
            output(Status::from_agree(d.verified), decomposition_text(&d), d.to_json())
        }
        "twovar-build" => {
            let parts = parse_parts(ring, &cmd.args["parts"], cmd.line, 1)?
                .into_iter()
                .map(|(d, f)| CwlPart {
                    d,
                    e: f.degree().unwrap_or(0),
                    f,
                })
                .collect();
            let spec = CwlDecomposition::from_parts(parts);
            let (ideal, check) = check_build(&spec).map_err(refuse)?;
            let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.components()[0].clone()).collect();
            let pretty: Vec<String> = gens.iter().map(|g| g.pretty()).collect();
            let text = format!(
                "I = ({})\ncwl {}, round trip {}, generator count {}, socle dimension {}\n",
                pretty.join(", "),
                check.cwl,
                check.round_trip,
                check.generators,
                check.socle
            );
            let report = json!({
                "generators": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "check": check,
            });
            output(Status::from_agree(check.holds()), text, report)
        }
        "corpus-verify" => {
            let n = cmd
                .args
                .get("n")
                .map(|s| parse_range(s).expect("checked by the parser"))
                .unwrap_or((ring.nvars() as u64, ring.nvars() as u64));
            let config = CorpusConfig {
                count: arg_u64(cmd, "count").unwrap_or(100) as usize,
                modules: arg_u64(cmd, "modules").unwrap_or(0) as usize,
                n: (n.0 as usize, n.1 as usize),
                gens: (1, 4),
                degrees: (1, 4),
                seed: arg_u64(cmd, "seed").unwrap_or(seed),
                prime: ring.characteristic() as u64,
            };
            corpus_verify(&config, trials)
        }
        other => unreachable!("unknown command {} passed the parser", other),
    }
}

fn decomposition_text(d: &CwlDecomposition) -> String {
    let parts: Vec<String> = d
        .parts
        .iter()
        .map(|p| format!("(d={}, e={}, f={})", p.d, p.e, p.f.pretty()))
        .collect();
    format!("parts {}\ndivisibility {:?}, verified {}\n", parts.join(" "), d.divisibility, d.verified)
}

fn resolve(m: &PresentedModule) -> Result<CommandOutput> {
    let t = betti_table(m);
    let pd = t.pd().unwrap_or(0);
    let mut text = String::new();
    for i in 0..=pd {
        let _ = writeln!(text, "F_{} = {}", i, free_summary(&t, i));
    }
    let syz = if t.is_empty() { Vec::new() } else { syzygy_modules(m, pd) };
    let mut maps = Vec::new();
    for (k, s) in syz.iter().enumerate() {
        let gens: Vec<String> = s.minimal_generators().iter().map(|g| g.to_string()).collect();
        let _ = writeln!(text, "d_{}:", k + 1);
        for g in &gens {
            let _ = writeln!(text, "  {}", g);
        }
        maps.push(gens);
    }
    let free: Vec<Vec<(i32, u64)>> = (0..=pd)
        .map(|i| t.degrees(i).into_iter().map(|j| (j, t.get(i, j))).collect())
        .collect();
    let report = json!({
        "free": if t.is_empty() { Vec::new() } else { free },
        "maps": maps,
        "reg": t.regularity(),
        "pd": t.pd(),
    });
    output(Status::Ok, text, report)
}

/// Results of a corpus run; reports of disagreeing instances carry the
/// instance text.
pub fn corpus_verify(config: &CorpusConfig, trials: usize) -> Result<CommandOutput> {
    let mut text = String::new();
    let mut reports = Vec::new();
    let (mut agree, mut disagree) = (0usize, 0usize);
    for (k, (seed, inst)) in config.instances()?.into_iter().enumerate() {
        let obj = &inst.objects[0];
        let m = obj.module(inst.ring);
        let id = format!("{}-{}", if k < config.count { "ideal" } else { "module" }, k);
        let r = verify_main_theorem(&m, trials, seed);
        let mut report = r.to_json(&id);
        if r.agree {
            agree += 1;
        } else {
            disagree += 1;
            report["source"] = json!(inst.to_string());
        }
        let _ = writeln!(
            text,
            "{} n={} cwl={} gamma-depth={} {}",
            id,
            inst.ring.nvars(),
            r.cwl,
            r.gamma_depth,
            if r.agree { "AGREE" } else { "DISAGREE" }
        );
        reports.push(report);
    }
    let _ = writeln!(text, "{} AGREE, {} DISAGREE", agree, disagree);
    output(
        Status::from_agree(disagree == 0),
        text,
        json!({"config": config, "trials": trials, "agree": agree, "disagree": disagree, "instances": reports}),
    )
}

/// Outputs of all commands of a file, stopping at the first error.
pub struct RunReport {
    pub outputs: Vec<(Command, CommandOutput)>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        if self.outputs.iter().any(|(_, o)| o.status == Status::Disagree) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self, file: &InstanceFile, opts: &Options) -> Value {
        json!({
            "source": file.to_string(),
            "seed": opts.seed,
            "trials": opts.trials,
            "results": self.outputs.iter().map(|(c, o)| json!({
                "command": c.to_string(),
                "status": o.status,
                "report": o.report,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn run_instance(file: &InstanceFile, opts: &Options) -> Result<RunReport> {
    let mut outputs = Vec::new();
    for cmd in &file.commands {
        outputs.push((cmd.clone(), run_command(cmd, file, opts)?));
    }
    Ok(RunReport { outputs })
}
