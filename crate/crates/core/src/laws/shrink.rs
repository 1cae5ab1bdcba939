use super::{Law, LawError};
use crate::model::{ContextRef, ModelError, SoftSet};
use crate::objects::{ObjectId, ParamId};

type Tuple = (ContextRef, Vec<SoftSet>);

/// Greedily reduces a violating tuple to a locally minimal one.
///
/// Candidate reductions are tried in a fixed order and the first one that
/// still violates the law is taken, then the search restarts:
///
/// 1. drop a parameter from the parameter space,
/// 2. undefine a parameter in one argument,
/// 3. drop an object from the universe,
/// 4. remove an object from one image, keeping the image nonempty.
///
/// Every accepted step strictly shrinks the tuple, so this terminates. If the
/// input does not violate the law it is returned unchanged.
pub fn shrink(law: &Law, ctx: &ContextRef, args: Vec<SoftSet>) -> Result<Tuple, LawError> {
    let mut current = (ctx.clone(), args);
    if !law.check(&current.0, &current.1)?.is_violation() {
        return Ok(current);
    }
    'search: loop {
        for candidate in candidates(&current)? {
            if law.check(&candidate.0, &candidate.1)?.is_violation() {
                current = candidate;
                continue 'search;
            }
        }
        return Ok(current);
    }
}

fn candidates((ctx, args): &Tuple) -> Result<Vec<Tuple>, ModelError> {
    let mut out = Vec::new();

    for p in ctx.parameter_ids() {
        let smaller = ctx.without_parameter(p)?.into_ref();
        let moved = args.iter().map(|a| a.restrict_to(&smaller)).collect();
        out.push((smaller, moved));
    }

    for (i, arg) in args.iter().enumerate() {
        for p in arg.domain() {
            let reduced = without_image(arg, p);
            out.push((ctx.clone(), replaced(args, i, reduced)));
        }
    }

    for o in ctx.object_ids() {
        // the last object can only go when no parameters remain
        if let Ok(smaller) = ctx.without_object(o) {
            let smaller = smaller.into_ref();
            let moved = args.iter().map(|a| a.restrict_to(&smaller)).collect();
            out.push((smaller, moved));
        }
    }

    for (i, arg) in args.iter().enumerate() {
        for (p, img) in arg.iter() {
            if img.len() < 2 {
                continue;
            }
            for o in img.iter() {
                let reduced = without_member(arg, p, o);
                out.push((ctx.clone(), replaced(args, i, reduced)));
            }
        }
    }

    Ok(out)
}

fn replaced(args: &[SoftSet], index: usize, value: SoftSet) -> Vec<SoftSet> {
    let mut out = args.to_vec();
    out[index] = value;
    out
}

fn without_image(s: &SoftSet, param: ParamId) -> SoftSet {
    let images = s
        .iter()
        .filter(|&(p, _)| p != param)
        .map(|(p, img)| (p, img.clone()));
    SoftSet::from_images(s.context(), images)
}

fn without_member(s: &SoftSet, param: ParamId, object: ObjectId) -> SoftSet {
    let images = s.iter().map(|(p, img)| {
        let mut img = img.clone();
        if p == param {
            img.remove(object);
        }
        (p, img)
    });
    SoftSet::from_images(s.context(), images)
}
