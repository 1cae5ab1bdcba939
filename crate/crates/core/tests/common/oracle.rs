//! Incidence-matrix re-implementation of the soft-set operations.
//!
//! A soft set is an |E| x |U| boolean matrix plus a mask of defined
//! parameters. Each operation is elementwise boolean arithmetic followed by
//! undefining every row that ended up empty. Conversion goes through names
//! only, never through the crate's bitsets.

use softset::{ContextRef, SoftSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incidence {
    pub defined: Vec<bool>,
    pub rows: Vec<Vec<bool>>,
}

impl Incidence {
    pub fn from_soft_set(s: &SoftSet) -> Incidence {
        let ctx = s.context();
        let mut defined = Vec::new();
        let mut rows = Vec::new();
        for p in ctx.parameters() {
            let image = s.image_names(p).unwrap();
            defined.push(image.is_some());
            let members = image.unwrap_or_default();
            rows.push(
                ctx.objects()
                    .iter()
                    .map(|o| members.contains(&o.as_str()))
                    .collect(),
            );
        }
        Incidence { defined, rows }
    }

    pub fn to_soft_set(&self, ctx: &ContextRef) -> SoftSet {
        let pairs: Vec<(String, Vec<String>)> = ctx
            .parameters()
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.defined[i])
            .map(|(i, p)| {
                let objs = ctx
                    .objects()
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| self.rows[i][j])
                    .map(|(_, o)| o.clone())
                    .collect();
                (p.clone(), objs)
            })
            .collect();
        SoftSet::strict(ctx, pairs).expect("normalized incidence has no empty rows")
    }

    fn normalized(mut self) -> Incidence {
        for (i, row) in self.rows.iter_mut().enumerate() {
            if !self.defined[i] || !row.iter().any(|&b| b) {
                self.defined[i] = false;
                row.iter_mut().for_each(|b| *b = false);
            }
        }
        self
    }

    fn zip(
        &self,
        other: &Incidence,
        def: impl Fn(bool, bool) -> bool,
        cell: impl Fn(bool, bool, bool, bool) -> bool,
    ) -> Incidence {
        let defined: Vec<bool> = self
            .defined
            .iter()
            .zip(&other.defined)
            .map(|(&a, &b)| def(a, b))
            .collect();
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .enumerate()
            .map(|(i, (ra, rb))| {
                ra.iter()
                    .zip(rb)
                    .map(|(&x, &y)| cell(self.defined[i], other.defined[i], x, y))
                    .collect()
            })
            .collect();
        Incidence { defined, rows }.normalized()
    }

    pub fn intersection(&self, other: &Incidence) -> Incidence {
        self.zip(other, |a, b| a && b, |_, _, x, y| x && y)
    }

    pub fn union(&self, other: &Incidence) -> Incidence {
        self.zip(other, |a, b| a || b, |da, db, x, y| (da && x) || (db && y))
    }

    pub fn difference(&self, other: &Incidence) -> Incidence {
        self.zip(other, |a, _| a, |_, db, x, y| if db { x && !y } else { x })
    }

    pub fn complement(&self) -> Incidence {
        let defined = vec![true; self.defined.len()];
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .map(|&x| if self.defined[i] { !x } else { true })
                    .collect()
            })
            .collect();
        Incidence { defined, rows }.normalized()
    }
}

/// Compares all four operations on one pair; returns the first disagreement.
pub fn compare_pair(s: &SoftSet, t: &SoftSet) -> Result<(), String> {
    let ctx = s.context();
    let (ms, mt) = (Incidence::from_soft_set(s), Incidence::from_soft_set(t));
    let checks = [
        (
            "intersection",
            softset::intersection(s, t).unwrap(),
            ms.intersection(&mt),
        ),
        ("union", softset::union(s, t).unwrap(), ms.union(&mt)),
        (
            "difference",
            softset::difference(s, t).unwrap(),
            ms.difference(&mt),
        ),
        ("complement", softset::complement(s), ms.complement()),
    ];
    for (op, algebra, matrix) in checks {
        let matrix = matrix.to_soft_set(ctx);
        if algebra != matrix {
            return Err(format!(
                "{op} of {s} and {t}: algebra {algebra}, matrix {matrix}"
            ));
        }
    }
    Ok(())
}
