//! The report every subcommand produces, in JSON and text form.

use arcgrid::verify::Checklist;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// An input file as read, with its digest.
#[derive(Clone, Debug)]
pub struct Input {
    pub path: String,
    pub text: String,
    pub sha256: String,
}

impl Input {
    pub fn new(path: impl Into<String>, text: String) -> Self {
        let sha256 = hex::encode(Sha256::digest(text.as_bytes()));
        Self {
            path: path.into(),
            text,
            sha256,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<(String, String)>,
    pub result: Value,
    pub checks: Vec<Check>,
    /// Human-readable summary lines.
    pub lines: Vec<String>,
    /// The file-shaped output of the command, if any.
    pub artifact: Option<String>,
    /// False when the command itself ran but reached a negative outcome.
    pub succeeded: bool,
}

impl Report {
    pub fn new(result: Value) -> Self {
        Self {
            result,
            succeeded: true,
            ..Self::default()
        }
    }

    pub fn input(&mut self, input: &Input) {
        self.inputs.push((input.path.clone(), input.sha256.clone()));
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    pub fn absorb(&mut self, prefix: Option<&str>, list: &Checklist) {
        for item in &list.items {
            let name = match prefix {
                Some(p) => format!("{p}: {}", item.name),
                None => item.name.to_owned(),
            };
            self.check(name, item.passed, item.detail.clone());
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Overall verdict: the command succeeded and every check passed.
    pub fn ok(&self) -> bool {
        self.succeeded && self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self, include_artifact: bool) -> Value {
        let mut v = json!({
            "schema": SCHEMA,
            "command": self.command,
            "inputs": self
                .inputs
                .iter()
                .map(|(path, sha)| json!({ "path": path, "sha256": sha }))
                .collect::<Vec<_>>(),
            "ok": self.ok(),
            "result": self.result,
            "checklist": self
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect::<Vec<_>>(),
        });
        if include_artifact {
            if let Some(a) = &self.artifact {
                v["output"] = Value::String(a.clone());
            }
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
        }
        if !self.checks.is_empty() || !self.succeeded {
            out.push_str(if self.ok() { "verdict: pass\n" } else { "verdict: fail\n" });
        }
        out
    }
}

pub fn error_json(command: &[String], message: &str) -> Value {
    json!({ "schema": SCHEMA, "command": command, "ok": false, "error": message })
}
