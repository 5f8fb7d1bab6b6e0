//! Partitions of a finite universe into equivalence classes.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::set::ObjectSet;

/// The equivalence classes of an equivalence relation over a named universe.
///
/// Blocks are kept in canonical order: by their least member index, each
/// block listing its members in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    universe: Vec<String>,
    blocks: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    block_sets: Vec<ObjectSet>,
}

impl Partition {
    /// Groups objects carrying equal labels. `labels[i]` belongs to `universe[i]`.
    pub fn from_labels<T: PartialEq>(universe: Vec<String>, labels: &[T]) -> Result<Self, Error> {
        if labels.len() != universe.len() {
            return Err(Error::InvalidPartition(format!(
                "{} labels for {} objects",
                labels.len(),
                universe.len()
            )));
        }
        check_distinct(&universe)?;
        let mut reps: Vec<usize> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            match reps.iter().position(|&r| labels[r] == *label) {
                Some(b) => class_of.push(b),
                None => {
                    class_of.push(reps.len());
                    reps.push(i);
                }
            }
        }
        Ok(Self::assemble(universe, class_of, reps.len()))
    }

    /// Builds a partition from explicit blocks of object indices.
    pub fn from_blocks(universe: Vec<String>, blocks: &[Vec<usize>]) -> Result<Self, Error> {
        let n = universe.len();
        check_distinct(&universe)?;
        let mut labels: Vec<Option<usize>> = alloc::vec![None; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                let slot = labels.get_mut(x).ok_or(Error::IndexOutOfRange { index: x, len: n })?;
                if slot.is_some() {
                    return Err(Error::InvalidPartition(format!("object {} appears twice", universe[x])));
                }
                *slot = Some(b);
            }
        }
        if let Some(missing) = labels.iter().position(Option::is_none) {
            return Err(Error::InvalidPartition(format!(
                "object {} is in no block",
                universe[missing]
            )));
        }
        Self::from_labels(universe, &labels)
    }

    /// Every object in its own block.
    pub fn discrete(universe: Vec<String>) -> Result<Self, Error> {
        let labels: Vec<usize> = (0..universe.len()).collect();
        Self::from_labels(universe, &labels)
    }

    /// A single block holding the whole universe.
    pub fn indiscrete(universe: Vec<String>) -> Result<Self, Error> {
        let labels = alloc::vec![(); universe.len()];
        Self::from_labels(universe, &labels)
    }

    // `class_of` must already be numbered by first occurrence.
    fn assemble(universe: Vec<String>, class_of: Vec<usize>, nblocks: usize) -> Self {
        let n = universe.len();
        let mut blocks = alloc::vec![Vec::new(); nblocks];
        for (x, &b) in class_of.iter().enumerate() {
            blocks[b].push(x);
        }
        let block_sets = blocks
            .iter()
            .map(|b| ObjectSet::from_indices(n, b.iter().copied()).expect("block indices in range"))
            .collect();
        Partition {
            universe,
            blocks,
            class_of,
            block_sets,
        }
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The blocks as sets, in block order.
    pub fn block_sets(&self) -> &[ObjectSet] {
        &self.block_sets
    }

    /// Index of the block containing object `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// The block containing object `x`, as a set.
    pub fn class_set(&self, x: usize) -> &ObjectSet {
        &self.block_sets[self.class_of[x]]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.universe.iter().position(|o| o == name)
    }

    pub fn empty_set(&self) -> ObjectSet {
        ObjectSet::empty(self.len())
    }

    pub fn full_set(&self) -> ObjectSet {
        ObjectSet::full(self.len())
    }

    /// Resolves object names to a set over this universe.
    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<ObjectSet, Error> {
        let mut s = self.empty_set();
        for name in names {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownObject(name.to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Member names of `s` in universe order.
    pub fn names(&self, s: &ObjectSet) -> Vec<String> {
        s.iter().map(|i| self.universe[i].clone()).collect()
    }

    pub fn check_set(&self, s: &ObjectSet) -> Result<(), Error> {
        if s.universe_len() == self.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.len(),
                right: s.universe_len(),
            })
        }
    }

    pub fn check_bound(&self, bound: usize) -> Result<(), Error> {
        if self.len() > bound || self.len() >= 64 {
            Err(Error::UniverseTooLarge {
                size: self.len(),
                bound: bound.min(63),
            })
        } else {
            Ok(())
        }
    }

    /// True when every block of `self` lies inside some block of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.len() == coarser.len()
            && self
                .block_sets
                .iter()
                .all(|b| coarser.block_sets.iter().any(|c| b.is_subset(c)))
    }
}

fn check_distinct(universe: &[String]) -> Result<(), Error> {
    for (i, a) in universe.iter().enumerate() {
        if universe[..i].contains(a) {
            return Err(Error::InvalidPartition(format!("duplicate object {a}")));
        }
    }
    Ok(())
}

/// Object names `"1"`, ..., `"n"`.
pub fn numbered_universe(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Iterates over every partition of `universe`, via restricted growth strings.
///
/// Yields Bell(n) partitions; the first is the indiscrete one.
pub fn all_partitions(universe: Vec<String>) -> impl Iterator<Item = Partition> {
    let n = universe.len();
    let mut rgs: Option<Vec<usize>> = Some(alloc::vec![0; n]);
    core::iter::from_fn(move || {
        let current = rgs.take()?;
        rgs = next_growth_string(&current);
        let blocks = current.iter().copied().max().map_or(0, |m| m + 1);
        Some(Partition::assemble(universe.clone(), current, blocks))
    })
}

fn next_growth_string(s: &[usize]) -> Option<Vec<usize>> {
    for i in (1..s.len()).rev() {
        let prefix_max = s[..i].iter().copied().max().unwrap_or(0);
        if s[i] <= prefix_max {
            let mut next = s.to_vec();
            next[i] += 1;
            for v in &mut next[i + 1..] {
                *v = 0;
            }
            return Some(next);
        }
    }
    None
}
