//! Index spaces over which checks run. A universe is a list of blocks, each
//! decoding a local index into an [`Item`]; global indices run through the
//! blocks in order.

use crate::combin::{binomial, unrank_mask};
use crate::trigrid::CellSet;

#[derive(Debug, Clone, Copy)]
pub(crate) enum Block {
    /// Every `k`-subset of the ground set, in mask order.
    Sets { k: u32 },
    /// Every ordered pair of a `ka`-subset and a `kb`-subset.
    Pairs { ka: u32, kb: u32 },
    /// Bare indices `0..len`, decoded by the check itself.
    Plain { len: u64 },
}

#[derive(Debug, Clone)]
pub(crate) enum Item {
    Set(CellSet),
    Pair(CellSet, CellSet),
    Plain { index: u64 },
}

#[derive(Debug, Clone)]
pub(crate) struct Universe {
    n: u32,
    ground: u32,
    blocks: Vec<(Block, u64)>,
    len: u64,
}

impl Universe {
    pub fn new(n: u32) -> Self {
        Universe {
            n,
            ground: crate::trigrid::tri(n) as u32,
            blocks: Vec::new(),
            len: 0,
        }
    }

    fn block_len(&self, b: Block) -> u64 {
        let g = self.ground as u64;
        match b {
            Block::Sets { k } => binomial(g, k as u64),
            Block::Pairs { ka, kb } => {
                binomial(g, ka as u64).saturating_mul(binomial(g, kb as u64))
            }
            Block::Plain { len, .. } => len,
        }
    }

    pub fn push(&mut self, b: Block) -> &mut Self {
        let len = self.block_len(b);
        self.blocks.push((b, len));
        self.len = self.len.saturating_add(len);
        self
    }

    /// All subsets whose size lies in `sizes`.
    pub fn sets(mut self, sizes: std::ops::RangeInclusive<u32>) -> Self {
        for k in sizes {
            if k <= self.ground {
                self.push(Block::Sets { k });
            }
        }
        self
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn get(&self, mut index: u64) -> Item {
        let set = |k: u32, r: u64| {
            CellSet::from_mask(self.n, unrank_mask(self.ground, k, r)).expect("mask in range")
        };
        for &(b, len) in &self.blocks {
            if index >= len {
                index -= len;
                continue;
            }
            return match b {
                Block::Sets { k } => Item::Set(set(k, index)),
                Block::Pairs { ka, kb } => {
                    let nb = binomial(self.ground as u64, kb as u64);
                    Item::Pair(set(ka, index / nb), set(kb, index % nb))
                }
                Block::Plain { .. } => Item::Plain { index },
            };
        }
        panic!("universe index out of range");
    }
}
