//! Set partitions of {1, …, n}, iterated in restricted-growth-string order.
//!
//! A partition of {1, …, n} is encoded by the string a₁ … aₙ with a₁ = 0 and
//! aᵢ ≤ max(a₁, …, aᵢ₋₁) + 1: element i belongs to block aᵢ, and blocks are
//! numbered by their smallest element. Successive strings are generated by
//! the usual odometer step, so every partition appears exactly once.

use crate::set_system::Mask;

/// Iterator over all set partitions of {1, …, n}; each item is the list of
/// blocks as bitmasks, ordered by smallest element. For n = 0 the single
/// partition has no blocks.
pub struct SetPartitions {
    rgs: Vec<u8>,
    done: bool,
}

/// All set partitions of {1, …, n}; n ≤ 16 keeps blocks inside a mask.
pub fn set_partitions(n: usize) -> SetPartitions {
    assert!(n <= crate::set_system::MAX_GROUND);
    SetPartitions {
        rgs: vec![0; n],
        done: false,
    }
}

fn blocks_of(rgs: &[u8]) -> Vec<Mask> {
    let nblocks = rgs.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut blocks = vec![0 as Mask; nblocks];
    for (i, &a) in rgs.iter().enumerate() {
        blocks[a as usize] |= 1 << i;
    }
    blocks
}

impl Iterator for SetPartitions {
    type Item = Vec<Mask>;

    fn next(&mut self) -> Option<Vec<Mask>> {
        if self.done {
            return None;
        }
        let out = blocks_of(&self.rgs);
        // Advance: the rightmost digit that may still grow (aᵢ ≤ prefix max)
        // is bumped and the suffix reset to zeros.
        let mut advanced = false;
        for i in (1..self.rgs.len()).rev() {
            let prefix_max = *self.rgs[..i].iter().max().expect("nonempty prefix");
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for d in self.rgs[i + 1..].iter_mut() {
                    *d = 0;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(out)
    }
}
