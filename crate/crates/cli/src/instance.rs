//! Line-oriented instance files.
//!
//! ```text
//! ring 2 32003
//! ideal I = x1^2, x1x2, x2^3
//! module M free 0 0 rels [x1 | x2], [x2^2 | 0]
//! cmd gamma-test I z=x1+x2
//! ```
//!
//! Command arguments are whitespace separated, so values such as linear
//! forms must not contain spaces.

use std::collections::BTreeMap;
use std::fmt;

use gamma_depth_core::{FreeElement, GradedFreeModule, LinearForm, Polynomial, PresentedModule, Ring, Submodule};

use crate::error::{CliError, Result};

#[derive(Clone, Debug)]
pub enum ObjectKind {
    Ideal(Vec<Polynomial>),
    Module { free: GradedFreeModule, rels: Vec<FreeElement> },
}

#[derive(Clone, Debug)]
pub struct Object {
    pub name: String,
    pub kind: ObjectKind,
}

impl Object {
    /// `R/I` for an ideal, the presented module otherwise.
    pub fn module(&self, ring: Ring) -> PresentedModule {
        match &self.kind {
            ObjectKind::Ideal(gens) => PresentedModule::cyclic(ring, gens.clone()).expect("parsed over the ring"),
            ObjectKind::Module { free, rels } => {
                PresentedModule::from_relations(free.clone(), rels.clone()).expect("parsed over the ring")
            }
        }
    }

    pub fn ideal(&self, ring: Ring) -> Option<Submodule> {
        match &self.kind {
            ObjectKind::Ideal(gens) => Some(Submodule::ideal(ring, gens.clone()).expect("parsed over the ring")),
            ObjectKind::Module { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub name: String,
    pub object: Option<String>,
    pub args: BTreeMap<String, String>,
    pub line: usize,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if let Some(o) = &self.object {
            write!(f, " {}", o)?;
        }
        for (k, v) in &self.args {
            write!(f, " {}={}", k, v)?;
        }
        Ok(())
    }
}

pub struct CommandSpec {
    pub name: &'static str,
    pub object: Target,
    pub required: &'static [&'static str],
    pub optional: &'static [&'static str],
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Target {
    None,
    Any,
    Ideal,
}

const fn spec(
    name: &'static str,
    object: Target,
    required: &'static [&'static str],
    optional: &'static [&'static str],
) -> CommandSpec {
    CommandSpec {
        name,
        object,
        required,
        optional,
    }
}

pub const COMMANDS: &[CommandSpec] = &[
    spec("betti", Target::Any, &[], &[]),
    spec("resolve", Target::Any, &[], &[]),
    spec("socle", Target::Any, &[], &[]),
    spec("hilbert", Target::Any, &[], &["upto"]),
    spec("gamma-test", Target::Any, &["z"], &[]),
    spec("gamma-seq", Target::Any, &["z"], &[]),
    spec("gamma-depth", Target::Any, &[], &[]),
    spec("hat-gamma-test", Target::Any, &["z"], &["bound"]),
    spec("cwl", Target::Any, &[], &[]),
    spec("verify-main", Target::Any, &[], &[]),
    spec("splitting-audit", Target::Any, &["z"], &[]),
    spec("delta", Target::Any, &[], &["cap"]),
    spec("cd", Target::Any, &[], &[]),
    spec("twovar-check", Target::Ideal, &[], &[]),
    spec("twovar-decompose", Target::Ideal, &[], &[]),
    spec("twovar-build", Target::None, &["parts"], &[]),
    spec("corpus-verify", Target::None, &[], &["count", "n", "modules", "seed"]),
];

pub fn command_spec(name: &str) -> Option<&'static CommandSpec> {
    COMMANDS.iter().find(|c| c.name == name)
}

#[derive(Clone, Debug)]
pub struct InstanceFile {
    pub ring: Ring,
    pub objects: Vec<Object>,
    pub commands: Vec<Command>,
}

impl InstanceFile {
    pub fn new(ring: Ring) -> Self {
        InstanceFile {
            ring,
            objects: Vec::new(),
            commands: Vec::new(),
        }
    }

    pub fn object(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|o| o.name == name)
    }

    pub fn push_object(&mut self, name: &str, kind: ObjectKind) {
        self.objects.push(Object {
            name: name.to_string(),
            kind,
        });
    }

    /// Appends a command given as `name [object] key=value...`, checked like
    /// a parsed `cmd` line.
    pub fn push_command(&mut self, words: &[String]) -> Result<()> {
        let text = words.join(" ");
        let line = self.commands.iter().map(|c| c.line).max().unwrap_or(0) + 1;
        let cmd = parse_command(self, &text, line, 1)?;
        self.commands.push(cmd);
        Ok(())
    }
}

impl fmt::Display for InstanceFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {} {}", self.ring.nvars(), self.ring.characteristic())?;
        for o in &self.objects {
            match &o.kind {
                ObjectKind::Ideal(gens) => {
                    let g: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
                    writeln!(f, "ideal {} = {}", o.name, g.join(", "))?;
                }
                ObjectKind::Module { free, rels } => {
                    let t: Vec<String> = free.twists().iter().map(|t| t.to_string()).collect();
                    let r: Vec<String> = rels.iter().map(|v| v.to_string()).collect();
                    let tail = if r.is_empty() { String::new() } else { format!(" {}", r.join(", ")) };
                    writeln!(f, "module {} free {} rels{}", o.name, t.join(" "), tail)?;
                }
            }
        }
        for c in &self.commands {
            writeln!(f, "cmd {}", c)?;
        }
        Ok(())
    }
}

/// Whitespace-separated words with their 1-based columns.
fn words(text: &str, col0: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((col0 + s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((col0 + s, &text[s..]));
    }
    out
}

/// Splits at commas outside brackets; pieces keep their 1-based columns.
fn split_top_level(text: &str, col0: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((col0 + start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((col0 + start, &text[start..]));
    out
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_poly(ring: Ring, text: &str, line: usize, col: usize) -> Result<Polynomial> {
    let lead = text.len() - text.trim_start().len();
    ring.parse(text.trim()).map_err(|e| CliError::rebase(e, line, col + lead))
}

fn parse_form(ring: Ring, text: &str, line: usize, col: usize) -> Result<LinearForm> {
    let f = parse_poly(ring, text, line, col)?;
    LinearForm::from_polynomial(&f).map_err(|e| CliError::syntax(line, col, format!("`{}`: {}", text, e)))
}

/// Comma-separated linear forms.
pub fn parse_forms(ring: Ring, text: &str, line: usize, col: usize) -> Result<Vec<LinearForm>> {
    split_top_level(text, col)
        .into_iter()
        .map(|(c, s)| parse_form(ring, s, line, c))
        .collect()
}

/// `d:f,d:f,...` with `e = deg f`.
pub fn parse_parts(ring: Ring, text: &str, line: usize, col: usize) -> Result<Vec<(i32, Polynomial)>> {
    split_top_level(text, col)
        .into_iter()
        .map(|(c, s)| {
            let (d, f) = s
                .split_once(':')
                .ok_or_else(|| CliError::syntax(line, c, "expected `d:f`"))?;
            let d: i32 = d
                .trim()
                .parse()
                .map_err(|_| CliError::syntax(line, c, format!("bad degree `{}`", d)))?;
            let f = parse_poly(ring, f, line, c + s.find(':').unwrap() + 1)?;
            Ok((d, f))
        })
        .collect()
}

fn parse_command(file: &InstanceFile, text: &str, line: usize, col0: usize) -> Result<Command> {
    let ws = words(text, col0);
    let Some(&(ncol, name)) = ws.first() else {
        return Err(CliError::syntax(line, col0, "missing command name"));
    };
    let spec = command_spec(name).ok_or_else(|| CliError::syntax(line, ncol, format!("unknown command `{}`", name)))?;
    let mut rest = &ws[1..];
    let mut object = None;
    if spec.object != Target::None {
        let Some(&(ocol, oname)) = rest.first().filter(|(_, w)| !w.contains('=')) else {
            return Err(CliError::Arity {
                line,
                message: format!("`{}` needs an object name", name),
            });
        };
        if !is_identifier(oname) {
            return Err(CliError::syntax(line, ocol, format!("bad identifier `{}`", oname)));
        }
        let obj = file.object(oname).ok_or_else(|| CliError::Undefined {
            line,
            name: oname.to_string(),
        })?;
        if spec.object == Target::Ideal && !matches!(obj.kind, ObjectKind::Ideal(_)) {
            return Err(CliError::Arity {
                line,
                message: format!("`{}` expects an ideal, `{}` is a module", name, oname),
            });
        }
        object = Some(oname.to_string());
        rest = &rest[1..];
    }
    let mut args = BTreeMap::new();
    for &(c, w) in rest {
        let Some((k, v)) = w.split_once('=') else {
            return Err(CliError::Arity {
                line,
                message: format!("unexpected argument `{}` to `{}`", w, name),
            });
        };
        if !spec.required.contains(&k) && !spec.optional.contains(&k) {
            return Err(CliError::syntax(line, c, format!("`{}` takes no argument `{}`", name, k)));
        }
        let vcol = c + k.len() + 1;
        match k {
            "z" => {
                let forms = parse_forms(file.ring, v, line, vcol)?;
                if name != "gamma-seq" && forms.len() != 1 {
                    return Err(CliError::syntax(line, vcol, format!("`{}` takes a single form", name)));
                }
            }
            "parts" => {
                parse_parts(file.ring, v, line, vcol)?;
            }
            "n" => {
                parse_range(v).ok_or_else(|| CliError::syntax(line, vcol, format!("bad range `{}`", v)))?;
            }
            _ => {
                v.parse::<u64>()
                    .map_err(|_| CliError::syntax(line, vcol, format!("expected a nonnegative integer, found `{}`", v)))?;
            }
        }
        if args.insert(k.to_string(), v.to_string()).is_some() {
            return Err(CliError::syntax(line, c, format!("repeated argument `{}`", k)));
        }
    }
    if let Some(missing) = spec.required.iter().find(|k| !args.contains_key(**k)) {
        return Err(CliError::Arity {
            line,
            message: format!("`{}` needs `{}=`", name, missing),
        });
    }
    Ok(Command {
        name: name.to_string(),
        object,
        args,
        line,
    })
}

/// `a` or `a-b`.
pub fn parse_range(s: &str) -> Option<(u64, u64)> {
    let (a, b) = match s.split_once('-') {
        Some((a, b)) => (a.parse().ok()?, b.parse().ok()?),
        None => {
            let a = s.parse().ok()?;
            (a, a)
        }
    };
    (a <= b).then_some((a, b))
}

/// Parses an instance file; `prime` overrides the characteristic in the
/// ring header.
pub fn parse_instance(text: &str, prime: Option<u64>) -> Result<InstanceFile> {
    let mut file: Option<InstanceFile> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap();
        let ws = words(body, 1);
        let Some(&(kcol, keyword)) = ws.first() else { continue };
        if keyword == "ring" {
            if file.is_some() {
                return Err(CliError::syntax(line, kcol, "repeated ring header"));
            }
            if ws.len() != 3 {
                return Err(CliError::Arity {
                    line,
                    message: "expected `ring <n> <p>`".into(),
                });
            }
            let n: usize = ws[1]
                .1
                .parse()
                .ok()
                .filter(|n| *n <= 4)
                .ok_or_else(|| CliError::syntax(line, ws[1].0, "variable count must be between 0 and 4"))?;
            let p: u64 = ws[2]
                .1
                .parse()
                .map_err(|_| CliError::syntax(line, ws[2].0, "bad characteristic"))?;
            let ring = Ring::with_prime(n, prime.unwrap_or(p)).map_err(|e| CliError::syntax(line, ws[2].0, e.to_string()))?;
            file = Some(InstanceFile::new(ring));
            continue;
        }
        let Some(f) = file.as_mut() else {
            return Err(CliError::syntax(line, kcol, "expected `ring <n> <p>` first"));
        };
        let ring = f.ring;
        let after = kcol + keyword.len();
        let rest = &body[after - 1..];
        match keyword {
            "ideal" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| CliError::syntax(line, after, "expected `ideal <name> = <poly>, ...`"))?;
                let name = check_name(f, lhs, line, after)?;
                let rcol = after + lhs.len() + 1;
                let mut gens = Vec::new();
                if !rhs.trim().is_empty() {
                    for (c, s) in split_top_level(rhs, rcol) {
                        let g = parse_poly(ring, s, line, c)?;
                        if !g.is_homogeneous() {
                            return Err(CliError::syntax(line, c, "generator is not homogeneous"));
                        }
                        gens.push(g);
                    }
                }
                f.push_object(&name, ObjectKind::Ideal(gens));
            }
            "module" => {
                let ws = words(rest, after);
                let Some(&(ncol, name)) = ws.first() else {
                    return Err(CliError::syntax(line, after, "expected a module name"));
                };
                let name = check_name(f, name, line, ncol)?;
                if ws.get(1).map(|w| w.1) != Some("free") {
                    return Err(CliError::syntax(line, ws.get(1).map_or(after, |w| w.0), "expected `free`"));
                }
                let mut twists = Vec::new();
                let mut k = 2;
                while k < ws.len() && ws[k].1 != "rels" {
                    let t: i32 = ws[k]
                        .1
                        .parse()
                        .map_err(|_| CliError::syntax(line, ws[k].0, format!("bad twist `{}`", ws[k].1)))?;
                    twists.push(t);
                    k += 1;
                }
                if k == ws.len() {
                    return Err(CliError::syntax(line, body.trim_end().len() + 1, "expected `rels`"));
                }
                if twists.is_empty() {
                    return Err(CliError::syntax(line, ws[k].0, "a free module needs at least one twist"));
                }
                let free = GradedFreeModule::new(ring, twists);
                let rcol = ws[k].0 + 4;
                let tail = &body[rcol - 1..];
                let mut rels = Vec::new();
                if !tail.trim().is_empty() {
                    for (c, s) in split_top_level(tail, rcol) {
                        let lead = s.len() - s.trim_start().len();
                        let v = free
                            .parse_element(s.trim())
                            .map_err(|e| CliError::rebase(e, line, c + lead))?;
                        rels.push(v);
                    }
                }
                f.push_object(&name, ObjectKind::Module { free, rels });
            }
            "cmd" => {
                let cmd = parse_command(f, rest, line, after)?;
                f.commands.push(cmd);
            }
            other => return Err(CliError::syntax(line, kcol, format!("unknown keyword `{}`", other))),
        }
    }
    file.ok_or_else(|| CliError::syntax(1, 1, "missing `ring <n> <p>` header"))
}

fn check_name(f: &InstanceFile, raw: &str, line: usize, col: usize) -> Result<String> {
    let name = raw.trim();
    let col = col + raw.len() - raw.trim_start().len();
    if !is_identifier(name) {
        return Err(CliError::syntax(line, col, format!("bad identifier `{}`", name)));
    }
    if f.object(name).is_some() {
        return Err(CliError::syntax(line, col, format!("`{}` is already defined", name)));
    }
    Ok(name.to_string())
}
