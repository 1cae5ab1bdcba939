use super::lexer::{tokenize, TokenKind};
use super::parser::parse;
use super::{Expr, ExprError};
use crate::algebra::{complement, difference, intersection, union};
use crate::io::Bindings;
use crate::model::{same_context, ContextRef, ModelError, SoftSet};

/// Evaluates `ast` bottom-up against named soft sets over `ctx`.
pub fn evaluate(ast: &Expr, env: &Bindings, ctx: &ContextRef) -> Result<SoftSet, ExprError> {
    Ok(match ast {
        Expr::Name(name) => {
            let set = env.get(name).ok_or_else(|| ExprError::UnboundName {
                name: name.clone(),
                pos: None,
            })?;
            if !same_context(set.context(), ctx) {
                return Err(ModelError::ContextMismatch.into());
            }
            set.clone()
        }
        Expr::Empty => SoftSet::empty(ctx),
        Expr::Universal => SoftSet::universal(ctx),
        Expr::Complement(e) => complement(&evaluate(e, env, ctx)?),
        Expr::Intersect(l, r) => intersection(&evaluate(l, env, ctx)?, &evaluate(r, env, ctx)?)?,
        Expr::Union(l, r) => union(&evaluate(l, env, ctx)?, &evaluate(r, env, ctx)?)?,
        Expr::Difference(l, r) => difference(&evaluate(l, env, ctx)?, &evaluate(r, env, ctx)?)?,
    })
}

/// Tokenizes, parses and evaluates `text`. Unbound names are reported at
/// their first occurrence in the source.
pub fn eval_str(text: &str, env: &Bindings, ctx: &ContextRef) -> Result<SoftSet, ExprError> {
    let tokens = tokenize(text)?;
    let ast = parse(&tokens)?;
    evaluate(&ast, env, ctx).map_err(|e| match e {
        ExprError::UnboundName { name, pos: None } => {
            let pos = tokens
                .iter()
                .find(|t| t.kind == TokenKind::Name && t.text == name)
                .map(|t| t.pos);
            ExprError::UnboundName { name, pos }
        }
        other => other,
    })
}
