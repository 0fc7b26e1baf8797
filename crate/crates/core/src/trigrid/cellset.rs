use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use super::cell::{check_n, tri, UpCell};
use crate::error::{Error, Result};

type Words = SmallVec<[u64; 2]>;

/// A subset of the upward cells of `T_n`, stored as a bitset over the
/// canonical cell order. Iteration is always in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellSet {
    n: u32,
    words: Words,
}

fn word_count(n: u32) -> usize {
    tri(n).div_ceil(64)
}

impl CellSet {
    pub fn empty(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(CellSet {
            n,
            words: smallvec![0; word_count(n)],
        })
    }

    /// Every upward cell of `T_n`.
    pub fn full(n: u32) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for i in 0..s.capacity() {
            s.set_bit(i);
        }
        Ok(s)
    }

    pub fn from_cells<I: IntoIterator<Item = UpCell>>(n: u32, cells: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for u in cells {
            s.insert(u)?;
        }
        Ok(s)
    }

    /// Builds a set from bit positions in canonical order.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: u32, indices: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for i in indices {
            if i >= s.capacity() {
                return Err(Error::param(format!(
                    "cell index {i} out of range for n = {n}"
                )));
            }
            s.set_bit(i);
        }
        Ok(s)
    }

    /// Builds a set from the low bits of `mask`. Requires `n(n+1)/2 <= 64`.
    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        let s = Self::empty(n)?;
        if s.words.len() > 1 {
            return Err(Error::param(format!("n = {n} has more than 64 cells")));
        }
        let cap = s.capacity();
        if cap < 64 && mask >> cap != 0 {
            return Err(Error::param(format!(
                "mask has bits beyond the {cap} cells of T_{n}"
            )));
        }
        let mut s = s;
        s.words[0] = mask;
        Ok(s)
    }

    /// The bitmask of this set when it fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Size of the ground set `n(n+1)/2`.
    pub fn capacity(&self) -> usize {
        tri(self.n)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_cell(&self, u: UpCell) -> Result<()> {
        if u.n() != self.n {
            return Err(Error::param(format!(
                "cell {u} has coordinate sum {} but n-1 = {}",
                u.n() - 1,
                self.n - 1
            )));
        }
        Ok(())
    }

    fn set_bit(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn clear_bit(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains_index(&self, i: usize) -> bool {
        i < self.capacity() && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Cells from a different ambient size are never members.
    pub fn contains(&self, u: UpCell) -> bool {
        u.n() == self.n && self.contains_index(u.index())
    }

    /// Returns whether the cell was newly inserted.
    pub fn insert(&mut self, u: UpCell) -> Result<bool> {
        self.check_cell(u)?;
        let fresh = !self.contains_index(u.index());
        self.set_bit(u.index());
        Ok(fresh)
    }

    pub fn remove(&mut self, u: UpCell) -> bool {
        let present = self.contains(u);
        if present {
            self.clear_bit(u.index());
        }
        present
    }

    pub fn with(&self, u: UpCell) -> Result<Self> {
        let mut s = self.clone();
        s.insert(u)?;
        Ok(s)
    }

    pub fn without(&self, u: UpCell) -> Self {
        let mut s = self.clone();
        s.remove(u);
        s
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = UpCell> + '_ {
        let n = self.n;
        self.indices()
            .map(move |i| UpCell::from_index(n, i).unwrap())
    }

    fn same_n(&self, other: &CellSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::param(format!(
                "cell sets over different ambient sizes ({} vs {})",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn union(&self, other: &CellSet) -> Result<CellSet> {
        self.same_n(other)?;
        Ok(self.zip_with(other, |x, y| x | y))
    }

    pub fn intersection(&self, other: &CellSet) -> Result<CellSet> {
        self.same_n(other)?;
        Ok(self.zip_with(other, |x, y| x & y))
    }

    pub fn difference(&self, other: &CellSet) -> Result<CellSet> {
        self.same_n(other)?;
        Ok(self.zip_with(other, |x, y| x & !y))
    }

    /// Complement within the ground set `u(T_n)`.
    pub fn complement(&self) -> CellSet {
        let full = CellSet::full(self.n).expect("n already validated");
        full.zip_with(self, |x, y| x & !y)
    }

    pub fn is_subset(&self, other: &CellSet) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(x, y)| x & !y == 0)
    }

    /// `|self ∩ other|` without allocating. Panics on mismatched sizes.
    pub fn intersection_len(&self, other: &CellSet) -> usize {
        assert_eq!(self.n, other.n, "cell sets over different ambient sizes");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    fn zip_with(&self, other: &CellSet, f: impl Fn(u64, u64) -> u64) -> CellSet {
        CellSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&x, &y)| f(x, y))
                .collect(),
        }
    }

    pub fn to_triples(&self) -> Vec<[u32; 3]> {
        self.iter().map(|u| u.coords()).collect()
    }
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CellSet(n={}, ", self.n)?;
        f.debug_set()
            .entries(self.iter().map(|u| u.coords()))
            .finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, u) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct CellSetRepr {
    n: u32,
    cells: Vec<[u32; 3]>,
}

impl Serialize for CellSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CellSetRepr {
            n: self.n,
            cells: self.to_triples(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CellSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CellSetRepr::deserialize(deserializer)?;
        CellSet::from_cells(repr.n, repr.cells.into_iter().map(UpCell::from))
            .map_err(serde::de::Error::custom)
    }
}
