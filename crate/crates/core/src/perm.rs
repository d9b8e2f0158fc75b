//! Permutations of an arbitrary finite ground set of positive integers, with
//! canonical cycle decomposition and drop statistics.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setpart::SetPartition;

/// A bijection on a sorted ground set; `image[i]` is the image of
/// `ground[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    ground: Vec<u32>,
    image: Vec<u32>,
}

impl Permutation {
    pub fn new(ground: Vec<u32>, image: Vec<u32>) -> Result<Self> {
        if ground.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("ground set must be sorted and distinct".into()));
        }
        let mut sorted = image.clone();
        sorted.sort_unstable();
        if sorted != ground {
            return Err(Error::Invalid("image is not a bijection on the ground set".into()));
        }
        Ok(Permutation { ground, image })
    }

    pub fn identity(ground: Vec<u32>) -> Self {
        let image = ground.clone();
        Permutation::new(ground, image).expect("identity on a sorted ground set")
    }

    /// Build from disjoint cycles covering `ground`.
    pub fn from_cycles(ground: Vec<u32>, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut image_of = std::collections::BTreeMap::new();
        for cyc in cycles {
            for (i, &x) in cyc.iter().enumerate() {
                let next = cyc[(i + 1) % cyc.len()];
                if image_of.insert(x, next).is_some() {
                    return Err(Error::Invalid(format!("element {x} repeated in cycles")));
                }
            }
        }
        let image = ground
            .iter()
            .map(|x| {
                image_of
                    .get(x)
                    .copied()
                    .ok_or_else(|| Error::Invalid(format!("element {x} missing from cycles")))
            })
            .collect::<Result<Vec<_>>>()?;
        if image_of.len() != ground.len() {
            return Err(Error::Invalid("cycles mention elements outside the ground set".into()));
        }
        Permutation::new(ground, image)
    }

    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        let i = self.ground.binary_search(&x).expect("element of the ground set");
        self.image[i]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.ground.iter().copied().zip(self.image.iter().copied())
    }

    /// Cycle decomposition, canonicalized: each cycle is rotated to start at
    /// its minimum and the cycles are sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.ground.len()];
        let mut cycles = Vec::new();
        for (i, &start) in self.ground.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            loop {
                let idx = self.ground.binary_search(&x).unwrap();
                if seen[idx] {
                    break;
                }
                seen[idx] = true;
                cyc.push(x);
                x = self.image[idx];
            }
            cycles.push(cyc);
        }
        // ground is scanned in increasing order, so each cycle already starts
        // at its minimum and the list is sorted by minimum
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Partition of the ground set into cycle supports.
    pub fn cycle_support(&self) -> SetPartition {
        SetPartition::new(self.ground.clone(), self.cycles()).expect("cycles partition the ground set")
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        self.pairs().filter(|(x, y)| x == y).map(|(x, _)| x).collect()
    }

    /// The pairs `(i, image(i))` with `i > image(i)`.
    pub fn drops(&self) -> Vec<(u32, u32)> {
        self.pairs().filter(|(x, y)| x > y).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.ground == self.image
    }

    pub fn is_derangement(&self) -> bool {
        self.pairs().all(|(x, y)| x != y)
    }

    /// Single-cycle test; a singleton ground set counts as one cycle.
    pub fn is_cycle(&self) -> bool {
        self.cycle_count() == 1
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, e.g. `(1,3,4,2)(5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cyc in self.cycles() {
            let inner: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", inner.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Visit every permutation of `items` (Heap's algorithm); `visit` receives
/// each arrangement as the image sequence of the sorted ground set.
pub fn for_each_arrangement(items: &[u32], visit: &mut dyn FnMut(&[u32])) {
    let mut a = items.to_vec();
    let n = a.len();
    if n == 0 {
        visit(&a);
        return;
    }
    let mut c = vec![0usize; n];
    visit(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
