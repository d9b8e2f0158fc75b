//! Set partitions of a finite ground set, ordered by refinement.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Blocks are kept canonical: each block sorted, blocks sorted by minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SetPartition {
    ground: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(ground: Vec<u32>, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        let mut all: Vec<u32> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != ground {
            return Err(Error::Invalid(
                "blocks must be disjoint and cover the ground set".into(),
            ));
        }
        Ok(SetPartition { ground, blocks })
    }

    /// The all-singletons partition (the bottom of the refinement order).
    pub fn discrete(ground: Vec<u32>) -> Self {
        let blocks = ground.iter().map(|&x| vec![x]).collect();
        SetPartition::new(ground, blocks).expect("singletons cover the ground set")
    }

    /// The one-block partition (the top of the refinement order).
    pub fn full(ground: Vec<u32>) -> Self {
        let blocks = vec![ground.clone()];
        SetPartition::new(ground, blocks).expect("single block covers the ground set")
    }

    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `|ground| - |blocks|`.
    pub fn rank(&self) -> usize {
        self.ground.len() - self.blocks.len()
    }

    pub fn block_of(&self, x: u32) -> Option<&[u32]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&x).is_ok())
            .map(|b| b.as_slice())
    }

    pub fn same_block(&self, x: u32, y: u32) -> bool {
        self.block_of(x).is_some_and(|b| b.binary_search(&y).is_ok())
    }

    /// True when every block of `self` is contained in a block of `other`
    /// (`self <= other` in the refinement order).
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.ground != other.ground {
            return false;
        }
        let mut block_index = std::collections::HashMap::new();
        for (i, b) in other.blocks.iter().enumerate() {
            for &x in b {
                block_index.insert(x, i);
            }
        }
        self.blocks.iter().all(|b| {
            let target = block_index[&b[0]];
            b.iter().all(|x| block_index[x] == target)
        })
    }
}

impl fmt::Display for SetPartition {
    /// Bar notation, e.g. `134|2|56`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `ground` whose blocks satisfy `block_ok`; blocks are
/// only ever grown through prefixes that can still pass, via `prefix_ok`
/// (a block with prefix failing `prefix_ok` is never extended or closed).
///
/// `prefix_ok` must be monotone: once false it stays false for every
/// extension.  `block_ok` is the final per-block test.
pub fn enumerate_partitions(
    ground: &[u32],
    prefix_ok: &dyn Fn(&[u32]) -> bool,
    block_ok: &dyn Fn(&[u32]) -> bool,
) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    fn rec(
        ground: &[u32],
        i: usize,
        blocks: &mut Vec<Vec<u32>>,
        prefix_ok: &dyn Fn(&[u32]) -> bool,
        block_ok: &dyn Fn(&[u32]) -> bool,
        out: &mut Vec<SetPartition>,
    ) {
        if i == ground.len() {
            if blocks.iter().all(|b| block_ok(b)) {
                out.push(
                    SetPartition::new(ground.to_vec(), blocks.clone())
                        .expect("enumeration emits valid partitions"),
                );
            }
            return;
        }
        let x = ground[i];
        for j in 0..blocks.len() {
            blocks[j].push(x);
            if prefix_ok(&blocks[j]) {
                rec(ground, i + 1, blocks, prefix_ok, block_ok, out);
            }
            blocks[j].pop();
        }
        blocks.push(vec![x]);
        if prefix_ok(blocks.last().unwrap()) {
            rec(ground, i + 1, blocks, prefix_ok, block_ok, out);
        }
        blocks.pop();
    }
    rec(ground, 0, &mut blocks, prefix_ok, block_ok, &mut out);
    out.sort();
    out
}

/// All partitions of `ground`, unrestricted.
pub fn all_partitions(ground: &[u32]) -> Vec<SetPartition> {
    enumerate_partitions(ground, &|_| true, &|_| true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers_for_small_ground_sets() {
        assert_eq!(all_partitions(&[1]).len(), 1);
        assert_eq!(all_partitions(&[1, 2]).len(), 2);
        assert_eq!(all_partitions(&[1, 2, 3]).len(), 5);
        assert_eq!(all_partitions(&[1, 2, 3, 4]).len(), 15);
        assert_eq!(all_partitions(&[1, 2, 3, 4, 5]).len(), 52);
    }

    #[test]
    fn rank_counts_merges() {
        let p = SetPartition::new(vec![1, 2, 3, 4], vec![vec![1, 3], vec![2], vec![4]]).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(SetPartition::discrete(vec![1, 2, 3]).rank(), 0);
        assert_eq!(SetPartition::full(vec![1, 2, 3]).rank(), 2);
    }

    #[test]
    fn refinement_is_a_partial_order_on_all_partitions_of_five() {
        let parts = all_partitions(&[1, 2, 3, 4, 5]);
        for a in &parts {
            assert!(a.refines(a), "reflexive");
        }
        for a in &parts {
            for b in &parts {
                if a.refines(b) && b.refines(a) {
                    assert_eq!(a, b, "antisymmetric");
                }
            }
        }
        for a in &parts {
            for b in &parts {
                if !a.refines(b) {
                    continue;
                }
                for c in &parts {
                    if b.refines(c) {
                        assert!(a.refines(c), "transitive: {a} <= {b} <= {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn display_uses_bar_notation() {
        let p = SetPartition::new(vec![1, 2, 3, 4], vec![vec![2], vec![1, 3, 4]]).unwrap();
        assert_eq!(p.to_string(), "1 3 4|2");
    }
}
