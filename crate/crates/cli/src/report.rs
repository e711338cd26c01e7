//! Command output in two renderings: readable text and `key=value` lines.

use std::fmt::Write;

use abcolim_core::abgrp::{AbHom, FGAbGroup};
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// A computation finished.
    Done,
    Holds,
    Fails,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Done | Verdict::Holds => 0,
            Verdict::Fails => 1,
        }
    }

    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    fn word(self) -> &'static str {
        match self {
            Verdict::Done => "ok",
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        }
    }
}

#[derive(Debug, Clone)]
struct Field {
    key: String,
    text: String,
    machine: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    fields: Vec<Field>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), fields: Vec::new(), verdict: Verdict::Done }
    }

    /// A field rendered differently in the two formats.
    pub fn field(&mut self, key: impl Into<String>, text: impl Into<String>, machine: impl Into<String>) -> &mut Self {
        self.fields.push(Field { key: key.into(), text: text.into(), machine: machine.into() });
        self
    }

    pub fn put(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        let v = value.to_string();
        self.field(key, v.clone(), v)
    }

    pub fn group(&mut self, key: impl Into<String>, g: &FGAbGroup) -> &mut Self {
        let form = g.canonical_form();
        self.field(key, form.to_string(), form.machine())
    }

    pub fn map(&mut self, key: impl Into<String>, h: &AbHom) -> &mut Self {
        let images = map_images(h);
        self.field(key, images.clone(), images)
    }

    pub fn verdict(&mut self, holds: bool) -> &mut Self {
        self.verdict = Verdict::from_bool(holds);
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                writeln!(out, "{}", self.command).unwrap();
                for f in &self.fields {
                    writeln!(out, "  {}: {}", f.key, f.text).unwrap();
                }
                writeln!(out, "result: {}", self.verdict.word()).unwrap();
            }
            Format::Machine => {
                writeln!(out, "command={}", self.command).unwrap();
                for f in &self.fields {
                    writeln!(out, "{}={}", f.key.replace(' ', "_"), f.machine).unwrap();
                }
                writeln!(out, "status={}", self.verdict.word()).unwrap();
            }
        }
        out
    }
}

/// `(x₁,…,x_k)` in canonical coordinates, `0` in the trivial group.
pub fn element(v: &[BigInt]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Images of the source's canonical generators, in the target's canonical
/// coordinates.
pub fn map_images(h: &AbHom) -> String {
    let source = h.source();
    let target = h.target();
    let from = source.from_canonical();
    let k = from.source().generators();
    let images: Vec<String> = (0..k)
        .map(|i| {
            let mut e = vec![BigInt::from(0); k];
            e[i] = BigInt::from(1);
            element(&target.normal_form(&h.apply(&from.apply(&e))))
        })
        .collect();
    format!("[{}]", images.join(", "))
}
