#![allow(dead_code)]

pub mod oracle;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use softset::expr::Expr;
use softset::laws::random_soft_set_with;
use softset::{Context, ContextRef, SoftSet, Workspace};

pub fn context(objects: usize, params: usize) -> ContextRef {
    Context::new(
        (1..=objects).map(|i| format!("h{i}")),
        (1..=params).map(|i| format!("e{i}")),
    )
    .unwrap()
    .into_ref()
}

pub fn houses_workspace() -> Workspace {
    softset::fixtures::houses()
}

pub fn random_set<R: Rng>(rng: &mut R, ctx: &ContextRef) -> SoftSet {
    let defined = [0.0, 0.3, 0.6, 1.0].choose(rng).copied().unwrap();
    let member = [0.2, 0.5, 0.8, 1.0].choose(rng).copied().unwrap();
    random_soft_set_with(rng, ctx, defined, member)
}

const NAMES: [&str; 5] = ["F", "G", "H", "alpha", "Set_2"];

pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    if depth == 0 || rng.random_bool(0.25) {
        return match rng.random_range(0..7) {
            0 => Expr::Empty,
            1 => Expr::Universal,
            _ => Expr::name(*NAMES.choose(rng).unwrap()),
        };
    }
    let sub = |rng: &mut R| random_expr(rng, depth - 1);
    match rng.random_range(0..4) {
        0 => sub(rng).complement(),
        1 => sub(rng).intersect(sub(rng)),
        2 => sub(rng).union(sub(rng)),
        _ => sub(rng).difference(sub(rng)),
    }
}

/// A random context of up to six objects and parameters with up to four
/// bound soft sets.
pub fn random_workspace<R: Rng>(rng: &mut R) -> Workspace {
    let objects = rng.random_range(0..=6);
    let params = if objects == 0 {
        0
    } else {
        rng.random_range(0..=6)
    };
    let ctx = Context::new(
        (0..objects).map(|i| format!("obj{i}")),
        (0..params).map(|i| format!("p_{i}")),
    )
    .unwrap()
    .into_ref();
    let mut ws = Workspace::new(ctx.clone());
    let count = rng.random_range(0..=4);
    for name in NAMES.iter().take(count) {
        ws.bind(*name, random_set(rng, &ctx)).unwrap();
    }
    ws
}

/// A raw assignment list that may contain empty images, listed in a random
/// order.
pub fn random_raw_pairs<R: Rng>(rng: &mut R, ctx: &ContextRef) -> Vec<(String, Vec<String>)> {
    let mut pairs: Vec<(String, Vec<String>)> = Vec::new();
    for p in ctx.parameters() {
        if !rng.random_bool(0.7) {
            continue;
        }
        let objs = if rng.random_bool(0.3) {
            Vec::new()
        } else {
            ctx.objects()
                .iter()
                .filter(|_| rng.random_bool(0.5))
                .cloned()
                .collect()
        };
        pairs.push((p.clone(), objs));
    }
    pairs.shuffle(rng);
    pairs
}
