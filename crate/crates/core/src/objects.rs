//! Index newtypes and a fixed-width bitset for subsets of the universe.

use std::fmt;

/// Position of an object in its context's universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub usize);

/// Position of a parameter in its context's parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamId(pub usize);

const WORD: usize = 64;

fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

/// A subset of a universe of known size, stored as a bitset.
///
/// All sets drawn from one context have the same word length, so derived
/// equality and ordering are meaningful between them. Bits at positions
/// `>= universe` are always clear.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectSet {
    words: Vec<u64>,
}

impl ObjectSet {
    pub fn empty(universe: usize) -> Self {
        ObjectSet {
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, word) in set.words.iter_mut().enumerate() {
            let remaining = universe - i * WORD;
            *word = if remaining >= WORD {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        let mut set = Self::empty(universe);
        for bit in 0..universe.min(WORD) {
            if mask & (1 << bit) != 0 {
                set.insert(ObjectId(bit));
            }
        }
        set
    }

    pub fn contains(&self, id: ObjectId) -> bool {
        self.words
            .get(id.0 / WORD)
            .is_some_and(|w| w & (1 << (id.0 % WORD)) != 0)
    }

    /// Panics if `id` lies outside the universe the set was sized for.
    pub fn insert(&mut self, id: ObjectId) {
        self.words[id.0 / WORD] |= 1 << (id.0 % WORD);
    }

    pub fn remove(&mut self, id: ObjectId) {
        if let Some(w) = self.words.get_mut(id.0 / WORD) {
            *w &= !(1 << (id.0 % WORD));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = ObjectId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..WORD)
                .filter(move |b| w & (1 << b) != 0)
                .map(move |b| ObjectId(i * WORD + b))
        })
    }

    pub fn is_subset(&self, other: &ObjectSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &ObjectSet) -> ObjectSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &ObjectSet) -> ObjectSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &ObjectSet) -> ObjectSet {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement relative to a universe of `universe` objects.
    pub fn complement(&self, universe: usize) -> ObjectSet {
        ObjectSet::full(universe).difference(self)
    }

    fn zip_with(&self, other: &ObjectSet, f: impl Fn(u64, u64) -> u64) -> ObjectSet {
        debug_assert_eq!(self.words.len(), other.words.len());
        ObjectSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|o| o.0)).finish()
    }
}
