//! Deliberately false laws. A checker that cannot refute these is broken.

use super::{same, Law};
use crate::algebra::{complement, difference, intersection, union};
use crate::model::SoftSet;

/// Complement that keeps parameters mapped to the whole universe instead of
/// dropping them, sending them to U again.
fn complement_keeping_full(s: &SoftSet) -> SoftSet {
    let ctx = s.context();
    let n = ctx.universe_size();
    let full = ctx.full_set();
    let images = ctx.parameter_ids().map(|p| match s.image_at(p) {
        Some(img) if *img == full => (p, full.clone()),
        Some(img) => (p, img.complement(n)),
        None => (p, full.clone()),
    });
    SoftSet::from_images(ctx, images)
}

/// Complement that only looks at defined parameters.
fn complement_on_domain(s: &SoftSet) -> SoftSet {
    let n = s.context().universe_size();
    let images = s.iter().map(|(p, img)| (p, img.complement(n)));
    SoftSet::from_images(s.context(), images)
}

static MUTANTS: [Law; 7] = [
    Law::new("mutant-difference-commutes", 2, "F - G = G - F", |_, a| {
        Ok(same(&difference(&a[0], &a[1])?, &difference(&a[1], &a[0])?))
    }),
    Law::new(
        "mutant-union-distributes-over-difference",
        3,
        "F | (G - H) = (F | G) - (F | H)",
        |_, a| {
            let lhs = union(&a[0], &difference(&a[1], &a[2])?)?;
            let rhs = difference(&union(&a[0], &a[1])?, &union(&a[0], &a[2])?)?;
            Ok(same(&lhs, &rhs))
        },
    ),
    Law::new(
        "mutant-complement-keeps-full",
        1,
        "F^c^c = F with full images kept under complement",
        |_, a| {
            let twice = complement_keeping_full(&complement_keeping_full(&a[0]));
            Ok(same(&twice, &a[0]))
        },
    ),
    Law::new(
        "mutant-complement-on-domain",
        1,
        "F | F^c = UNIVERSAL with complement restricted to the domain",
        |ctx, a| {
            let joined = union(&a[0], &complement_on_domain(&a[0]))?;
            Ok(same(&joined, &SoftSet::universal(ctx)))
        },
    ),
    Law::new(
        "mutant-demorgan-swapped",
        2,
        "(F & G)^c = F^c & G^c",
        |_, a| {
            let lhs = complement(&intersection(&a[0], &a[1])?);
            let rhs = intersection(&complement(&a[0]), &complement(&a[1]))?;
            Ok(same(&lhs, &rhs))
        },
    ),
    Law::new(
        "mutant-difference-as-intersection",
        2,
        "F - G = F & G",
        |_, a| {
            Ok(same(
                &difference(&a[0], &a[1])?,
                &intersection(&a[0], &a[1])?,
            ))
        },
    ),
    Law::new("mutant-intersection-absorbs", 2, "F & G = F", |_, a| {
        Ok(same(&intersection(&a[0], &a[1])?, &a[0]))
    }),
];

pub fn mutant_catalog() -> &'static [Law] {
    &MUTANTS
}
