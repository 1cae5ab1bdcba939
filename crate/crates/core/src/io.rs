//! Line-oriented workspace files: one context plus named soft sets.
//!
//! ```text
//! universe: h1 h2 h3
//! parameters: e1 e2
//! softset F:
//!   e1: h1 h3
//! softset G:
//!   e2: h2
//! ```
//!
//! `#` starts a comment, blank lines are ignored and indentation is
//! cosmetic. The two header lines are required, in that order, before any
//! `softset` block. An image line with no objects is dropped with a warning.

use std::collections::HashSet;
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::expr::is_valid_name;
use crate::model::{same_context, Context, ContextRef, ModelError, SoftSet};

/// Named soft sets in declaration order.
pub type Bindings = IndexMap<String, SoftSet>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkspaceError {
    #[error("`{0}` is not a valid soft-set name")]
    InvalidName(String),
    #[error("soft set `{0}` is already defined")]
    DuplicateName(String),
    #[error("soft set `{0}` belongs to a different context")]
    ContextMismatch(String),
}

/// A context together with soft sets bound to names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Workspace {
    context: ContextRef,
    bindings: Bindings,
}

impl Workspace {
    pub fn new(context: ContextRef) -> Workspace {
        Workspace {
            context,
            bindings: Bindings::new(),
        }
    }

    pub fn context(&self) -> &ContextRef {
        &self.context
    }

    pub fn bindings(&self) -> &Bindings {
        &self.bindings
    }

    pub fn get(&self, name: &str) -> Option<&SoftSet> {
        self.bindings.get(name)
    }

    /// Names must be expression-language identifiers and not keywords.
    pub fn bind(&mut self, name: impl Into<String>, set: SoftSet) -> Result<(), WorkspaceError> {
        let name = name.into();
        if !is_valid_name(&name) {
            return Err(WorkspaceError::InvalidName(name));
        }
        if !same_context(&self.context, set.context()) {
            return Err(WorkspaceError::ContextMismatch(name));
        }
        if self.bindings.contains_key(&name) {
            return Err(WorkspaceError::DuplicateName(name));
        }
        self.bindings.insert(name, set);
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadWarning {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for LoadWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        message: message.into(),
    })
}

fn identifiers(line: usize, text: &str) -> Result<Vec<String>, FormatError> {
    text.split_whitespace()
        .map(|tok| {
            if tok.contains(':') {
                err(line, format!("identifier `{tok}` may not contain ':'"))
            } else {
                Ok(tok.to_string())
            }
        })
        .collect()
}

struct Block {
    name: String,
    line: usize,
    pairs: Vec<(String, Vec<String>)>,
    seen: HashSet<String>,
}

/// Parses a workspace, returning it with any warnings about dropped lines.
pub fn load_workspace(text: &str) -> Result<(Workspace, Vec<LoadWarning>), FormatError> {
    let mut warnings = Vec::new();
    let mut objects: Option<Vec<String>> = None;
    let mut context: Option<ContextRef> = None;
    let mut workspace: Option<Workspace> = None;
    let mut block: Option<Block> = None;

    let finish = |block: Block, ws: &mut Workspace| -> Result<(), FormatError> {
        let set = SoftSet::new(ws.context(), block.pairs).map_err(|e| FormatError {
            line: block.line,
            message: e.to_string(),
        })?;
        ws.bind(block.name, set).map_err(|e| FormatError {
            line: block.line,
            message: e.to_string(),
        })
    };

    for (idx, raw) in text.lines().enumerate() {
        let n = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((head, tail)) = line.split_once(':') else {
            return err(n, format!("expected `:` in `{line}`"));
        };
        let head_words: Vec<&str> = head.split_whitespace().collect();

        match (head_words.as_slice(), &context) {
            (["universe" | "parameters"], Some(_)) => {
                return err(
                    n,
                    format!("header `{head}:` must precede all softset blocks"),
                );
            }
            (["universe"], None) if objects.is_none() => {
                objects = Some(identifiers(n, tail)?);
            }
            (["universe"], _) => return err(n, "duplicate `universe:` header"),
            (["parameters"], None) => {
                let Some(objs) = objects.take() else {
                    return err(n, "missing `universe:` header before `parameters:`");
                };
                let params = identifiers(n, tail)?;
                if let Some(reserved) = params
                    .iter()
                    .find(|p| *p == "universe" || *p == "parameters")
                {
                    return err(
                        n,
                        format!("`{reserved}` is reserved and cannot name a parameter"),
                    );
                }
                let ctx = Context::new(objs, params)
                    .map_err(|e| FormatError {
                        line: n,
                        message: e.to_string(),
                    })?
                    .into_ref();
                workspace = Some(Workspace::new(ctx.clone()));
                context = Some(ctx);
            }
            (["softset", name], Some(_)) => {
                if !tail.trim().is_empty() {
                    return err(n, "unexpected text after `softset <name>:`");
                }
                let ws = workspace.as_mut().expect("context implies workspace");
                if let Some(done) = block.take() {
                    finish(done, ws)?;
                }
                if ws.get(name).is_some() {
                    return err(n, format!("soft set `{name}` is already defined"));
                }
                if !is_valid_name(name) {
                    return err(n, format!("`{name}` is not a valid soft-set name"));
                }
                block = Some(Block {
                    name: name.to_string(),
                    line: n,
                    pairs: Vec::new(),
                    seen: HashSet::new(),
                });
            }
            ([param], Some(ctx)) if block.is_some() => {
                let b = block.as_mut().expect("checked");
                if ctx.parameter_id(param).is_none() {
                    return err(
                        n,
                        ModelError::UnknownParameter(param.to_string()).to_string(),
                    );
                }
                if !b.seen.insert(param.to_string()) {
                    return err(
                        n,
                        format!("parameter `{param}` listed twice in soft set `{}`", b.name),
                    );
                }
                let objs = identifiers(n, tail)?;
                if let Some(bad) = objs.iter().find(|o| ctx.object_id(o).is_none()) {
                    return err(n, ModelError::UnknownObject(bad.clone()).to_string());
                }
                if objs.is_empty() {
                    warnings.push(LoadWarning {
                        line: n,
                        message: format!(
                            "empty image for `{param}` in soft set `{}` dropped",
                            b.name
                        ),
                    });
                }
                b.pairs.push((param.to_string(), objs));
            }
            (_, None) if objects.is_none() => return err(n, "missing `universe:` header"),
            (_, None) => return err(n, "missing `parameters:` header"),
            ([_], Some(_)) => return err(n, "image line outside of a softset block"),
            _ => return err(n, format!("unrecognized line `{line}`")),
        }
    }

    let Some(mut ws) = workspace else {
        let what = if objects.is_none() {
            "universe"
        } else {
            "parameters"
        };
        return err(
            text.lines().count().max(1),
            format!("missing `{what}:` header"),
        );
    };
    if let Some(done) = block.take() {
        finish(done, &mut ws)?;
    }
    Ok((ws, warnings))
}

fn push_list<'a>(out: &mut String, label: &str, items: impl Iterator<Item = &'a str>) {
    out.push_str(label);
    out.push(':');
    for item in items {
        out.push(' ');
        out.push_str(item);
    }
    out.push('\n');
}

/// One `softset` block in canonical order.
pub fn render_soft_set(name: &str, set: &SoftSet) -> String {
    let ctx = set.context();
    let mut out = format!("softset {name}:\n");
    for (p, img) in set.iter() {
        push_list(
            &mut out,
            &format!("  {}", ctx.parameter_name(p)),
            ctx.object_names(img),
        );
    }
    out
}

/// Canonical text of a workspace: identifiers follow context order, one
/// parameter per line.
pub fn render_workspace(ws: &Workspace) -> String {
    let ctx = ws.context();
    let mut out = String::new();
    push_list(
        &mut out,
        "universe",
        ctx.objects().iter().map(String::as_str),
    );
    push_list(
        &mut out,
        "parameters",
        ctx.parameters().iter().map(String::as_str),
    );
    for (name, set) in ws.bindings() {
        out.push_str(&render_soft_set(name, set));
    }
    out
}
