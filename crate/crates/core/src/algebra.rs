//! Subset, equality, intersection, union, complement and difference of soft sets.
//!
//! Every operation returns a normalized soft set: a parameter whose image
//! would be empty is left out of the result's domain. Binary operations
//! require both operands to share a context.

use crate::model::{same_context, ModelError, Result, SoftSet};

fn check_context(s: &SoftSet, t: &SoftSet) -> Result<()> {
    if same_context(s.context(), t.context()) {
        Ok(())
    } else {
        Err(ModelError::ContextMismatch)
    }
}

/// `s ⊆ t`: every parameter of `s` is defined in `t`, with a larger image.
///
/// The empty soft set satisfies this vacuously.
pub fn subset(s: &SoftSet, t: &SoftSet) -> Result<bool> {
    check_context(s, t)?;
    Ok(s.iter()
        .all(|(p, img)| t.image_at(p).is_some_and(|other| img.is_subset(other))))
}

/// Same domain and the same image at every parameter.
pub fn equals(s: &SoftSet, t: &SoftSet) -> Result<bool> {
    check_context(s, t)?;
    Ok(s == t)
}

/// Parameters defined in both operands whose images overlap, mapped to the
/// overlap.
pub fn intersection(s: &SoftSet, t: &SoftSet) -> Result<SoftSet> {
    check_context(s, t)?;
    let images = s
        .iter()
        .filter_map(|(p, img)| t.image_at(p).map(|other| (p, img.intersection(other))));
    Ok(SoftSet::from_images(s.context(), images))
}

/// Domain is the union of both domains; images are joined where both are
/// defined.
pub fn union(s: &SoftSet, t: &SoftSet) -> Result<SoftSet> {
    check_context(s, t)?;
    let ctx = s.context();
    let images = ctx
        .parameter_ids()
        .filter_map(|p| match (s.image_at(p), t.image_at(p)) {
            (Some(a), None) => Some((p, a.clone())),
            (None, Some(b)) => Some((p, b.clone())),
            (Some(a), Some(b)) => Some((p, a.union(b))),
            (None, None) => None,
        });
    Ok(SoftSet::from_images(ctx, images))
}

/// Complement with respect to the universal soft set.
///
/// Undefined parameters map to the whole universe; defined ones map to the
/// remainder of the universe, and drop out when their image already was the
/// whole universe.
pub fn complement(s: &SoftSet) -> SoftSet {
    let ctx = s.context();
    let n = ctx.universe_size();
    let images = ctx.parameter_ids().map(|p| match s.image_at(p) {
        Some(img) => (p, img.complement(n)),
        None => (p, ctx.full_set()),
    });
    SoftSet::from_images(ctx, images)
}

/// Parameters of `s`, minus those whose image is covered by `t`; images lose
/// the objects `t` assigns to the same parameter.
pub fn difference(s: &SoftSet, t: &SoftSet) -> Result<SoftSet> {
    check_context(s, t)?;
    let images = s.iter().map(|(p, img)| match t.image_at(p) {
        Some(other) => (p, img.difference(other)),
        None => (p, img.clone()),
    });
    Ok(SoftSet::from_images(s.context(), images))
}
