use super::{same, Law, Verdict};
use crate::algebra::{complement, difference, intersection, subset, union};
use crate::model::SoftSet;

fn iff(lhs: bool, rhs: bool, what: &str) -> Verdict {
    if lhs == rhs {
        Verdict::Holds
    } else {
        Verdict::Violated(format!("{what}: left side is {lhs}, right side is {rhs}"))
    }
}

static CATALOG: [Law; 23] = [
    Law::new("identity-1", 1, "F & UNIVERSAL = F", |ctx, a| {
        Ok(same(&intersection(&a[0], &SoftSet::universal(ctx))?, &a[0]))
    }),
    Law::new("identity-2", 1, "F | EMPTY = F", |ctx, a| {
        Ok(same(&union(&a[0], &SoftSet::empty(ctx))?, &a[0]))
    }),
    Law::new("domination-1", 1, "F & EMPTY = EMPTY", |ctx, a| {
        let empty = SoftSet::empty(ctx);
        Ok(same(&intersection(&a[0], &empty)?, &empty))
    }),
    Law::new("domination-2", 1, "F | UNIVERSAL = UNIVERSAL", |ctx, a| {
        let universal = SoftSet::universal(ctx);
        Ok(same(&union(&a[0], &universal)?, &universal))
    }),
    Law::new("idempotent-1", 1, "F & F = F", |_, a| {
        Ok(same(&intersection(&a[0], &a[0])?, &a[0]))
    }),
    Law::new("idempotent-2", 1, "F | F = F", |_, a| {
        Ok(same(&union(&a[0], &a[0])?, &a[0]))
    }),
    Law::new("commutative-1", 2, "F & G = G & F", |_, a| {
        Ok(same(
            &intersection(&a[0], &a[1])?,
            &intersection(&a[1], &a[0])?,
        ))
    }),
    Law::new("commutative-2", 2, "F | G = G | F", |_, a| {
        Ok(same(&union(&a[0], &a[1])?, &union(&a[1], &a[0])?))
    }),
    Law::new("associative-1", 3, "(F & G) & H = F & (G & H)", |_, a| {
        let lhs = intersection(&intersection(&a[0], &a[1])?, &a[2])?;
        let rhs = intersection(&a[0], &intersection(&a[1], &a[2])?)?;
        Ok(same(&lhs, &rhs))
    }),
    Law::new("associative-2", 3, "(F | G) | H = F | (G | H)", |_, a| {
        let lhs = union(&union(&a[0], &a[1])?, &a[2])?;
        let rhs = union(&a[0], &union(&a[1], &a[2])?)?;
        Ok(same(&lhs, &rhs))
    }),
    Law::new(
        "distributive-1",
        3,
        "F & (G | H) = (F & G) | (F & H)",
        |_, a| {
            let lhs = intersection(&a[0], &union(&a[1], &a[2])?)?;
            let rhs = union(&intersection(&a[0], &a[1])?, &intersection(&a[0], &a[2])?)?;
            Ok(same(&lhs, &rhs))
        },
    ),
    Law::new(
        "distributive-2",
        3,
        "F | (G & H) = (F | G) & (F | H)",
        |_, a| {
            let lhs = union(&a[0], &intersection(&a[1], &a[2])?)?;
            let rhs = intersection(&union(&a[0], &a[1])?, &union(&a[0], &a[2])?)?;
            Ok(same(&lhs, &rhs))
        },
    ),
    Law::new("bounds", 1, "EMPTY <= F <= UNIVERSAL", |ctx, a| {
        let lower = subset(&SoftSet::empty(ctx), &a[0])?;
        let upper = subset(&a[0], &SoftSet::universal(ctx))?;
        Ok(if lower && upper {
            Verdict::Holds
        } else {
            Verdict::Violated(format!("EMPTY <= F is {lower}, F <= UNIVERSAL is {upper}"))
        })
    }),
    Law::new(
        "monotonicity-cap",
        4,
        "F1 <= G1 and F2 <= G2 imply F1 & F2 <= G1 & G2",
        |_, a| {
            if !(subset(&a[0], &a[1])? && subset(&a[2], &a[3])?) {
                return Ok(Verdict::Vacuous);
            }
            let lhs = intersection(&a[0], &a[2])?;
            let rhs = intersection(&a[1], &a[3])?;
            Ok(if subset(&lhs, &rhs)? {
                Verdict::Holds
            } else {
                Verdict::Violated(format!("{lhs} is not a subset of {rhs}"))
            })
        },
    ),
    Law::new(
        "monotonicity-cup",
        4,
        "F1 <= G1 and F2 <= G2 imply F1 | F2 <= G1 | G2",
        |_, a| {
            if !(subset(&a[0], &a[1])? && subset(&a[2], &a[3])?) {
                return Ok(Verdict::Vacuous);
            }
            let lhs = union(&a[0], &a[2])?;
            let rhs = union(&a[1], &a[3])?;
            Ok(if subset(&lhs, &rhs)? {
                Verdict::Holds
            } else {
                Verdict::Violated(format!("{lhs} is not a subset of {rhs}"))
            })
        },
    ),
    Law::new("subset-iff-cap", 2, "F <= G iff F & G = F", |_, a| {
        Ok(iff(
            subset(&a[0], &a[1])?,
            intersection(&a[0], &a[1])? == a[0],
            "F <= G versus F & G = F",
        ))
    }),
    Law::new("subset-iff-cup", 2, "F <= G iff F | G = G", |_, a| {
        Ok(iff(
            subset(&a[0], &a[1])?,
            union(&a[0], &a[1])? == a[1],
            "F <= G versus F | G = G",
        ))
    }),
    Law::new(
        "complement-characterization-fwd",
        2,
        "G = F^c implies F & G = EMPTY and F | G = UNIVERSAL",
        |_, a| {
            if a[1] != complement(&a[0]) {
                return Ok(Verdict::Vacuous);
            }
            let meet = intersection(&a[0], &a[1])?;
            let join = union(&a[0], &a[1])?;
            Ok(if meet.is_empty() && join.is_universal() {
                Verdict::Holds
            } else {
                Verdict::Violated(format!("F & G = {meet}, F | G = {join}"))
            })
        },
    ),
    Law::new(
        "complement-characterization-bwd",
        2,
        "F & G = EMPTY and F | G = UNIVERSAL imply G = F^c",
        |_, a| {
            if !(intersection(&a[0], &a[1])?.is_empty() && union(&a[0], &a[1])?.is_universal()) {
                return Ok(Verdict::Vacuous);
            }
            Ok(same(&a[1], &complement(&a[0])))
        },
    ),
    Law::new("involution", 1, "F^c^c = F", |_, a| {
        Ok(same(&complement(&complement(&a[0])), &a[0]))
    }),
    Law::new("demorgan-1", 2, "(F & G)^c = F^c | G^c", |_, a| {
        let lhs = complement(&intersection(&a[0], &a[1])?);
        let rhs = union(&complement(&a[0]), &complement(&a[1]))?;
        Ok(same(&lhs, &rhs))
    }),
    Law::new("demorgan-2", 2, "(F | G)^c = F^c & G^c", |_, a| {
        let lhs = complement(&union(&a[0], &a[1])?);
        let rhs = intersection(&complement(&a[0]), &complement(&a[1]))?;
        Ok(same(&lhs, &rhs))
    }),
    Law::new(
        "difference-as-intersection",
        2,
        "F - G = F & G^c",
        |_, a| {
            let lhs = difference(&a[0], &a[1])?;
            let rhs = intersection(&a[0], &complement(&a[1]))?;
            Ok(same(&lhs, &rhs))
        },
    ),
];

/// The full fixed catalog, in a stable order.
pub fn law_catalog() -> &'static [Law] {
    &CATALOG
}

pub fn lookup(id: &str) -> Option<&'static Law> {
    CATALOG.iter().find(|law| law.id == id)
}
