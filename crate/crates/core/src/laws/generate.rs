use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LawError;
use crate::model::{ContextRef, SoftSet};
use crate::objects::{ObjectSet, ParamId};

/// Default ceiling on the number of soft sets or tuples an exhaustive run
/// may visit.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// Number of soft sets over `ctx` as a power of two: each parameter is
/// undefined or takes one of the `2^|U| - 1` nonempty images, giving
/// `(2^|U|)^|E|` in total.
pub fn enumeration_count(ctx: &ContextRef) -> u64 {
    (ctx.universe_size() as u64).saturating_mul(ctx.parameter_count() as u64)
}

pub(crate) fn within_cap(log2_count: u64, cap: u64) -> Result<u64, LawError> {
    if log2_count < 64 && (1u64 << log2_count) <= cap {
        Ok(1u64 << log2_count)
    } else {
        Err(LawError::EnumerationTooLarge { log2_count, cap })
    }
}

/// Every soft set over `ctx`, each exactly once, under [`DEFAULT_CAP`].
pub fn enumerate_soft_sets(ctx: &ContextRef) -> Result<Vec<SoftSet>, LawError> {
    enumerate_soft_sets_with_cap(ctx, DEFAULT_CAP)
}

/// Enumeration order is a mixed-radix counter over the parameters, first
/// parameter least significant; digit 0 means undefined, digit `m > 0` means
/// the image whose bitmask is `m`.
pub fn enumerate_soft_sets_with_cap(ctx: &ContextRef, cap: u64) -> Result<Vec<SoftSet>, LawError> {
    let total = within_cap(enumeration_count(ctx), cap)?;
    let n = ctx.universe_size();
    let params = ctx.parameter_count();
    let mut out = Vec::with_capacity(total as usize);
    for index in 0..total {
        let images = (0..params).map(|p| {
            let digit = (index >> (p * n)) & ((1u64 << n) - 1);
            (ParamId(p), ObjectSet::from_mask(n, digit))
        });
        out.push(SoftSet::from_images(ctx, images));
    }
    Ok(out)
}

/// A seeded random soft set. See [`random_soft_set_with`].
pub fn random_soft_set(
    ctx: &ContextRef,
    seed: u64,
    defined_density: f64,
    member_density: f64,
) -> SoftSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_soft_set_with(&mut rng, ctx, defined_density, member_density)
}

/// Each parameter is defined with probability `defined_density`; a defined
/// parameter's image includes each object with probability `member_density`
/// and is resampled until nonempty.
///
/// # Panics
///
/// If `defined_density` is outside `[0, 1]` or `member_density` outside `(0, 1]`.
pub fn random_soft_set_with<R: Rng + ?Sized>(
    rng: &mut R,
    ctx: &ContextRef,
    defined_density: f64,
    member_density: f64,
) -> SoftSet {
    assert!(
        (0.0..=1.0).contains(&defined_density),
        "defined_density must lie in [0, 1]"
    );
    assert!(
        member_density > 0.0 && member_density <= 1.0,
        "member_density must lie in (0, 1]"
    );
    let mut images = Vec::new();
    for p in ctx.parameter_ids() {
        if !rng.random_bool(defined_density) {
            continue;
        }
        let image = loop {
            let mut image = ctx.empty_set();
            for o in ctx.object_ids() {
                if rng.random_bool(member_density) {
                    image.insert(o);
                }
            }
            if !image.is_empty() {
                break image;
            }
        };
        images.push((p, image));
    }
    SoftSet::from_images(ctx, images)
}
