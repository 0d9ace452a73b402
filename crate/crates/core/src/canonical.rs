//! Canonical forms of set systems under ground-set relabelling.
//!
//! The canonical form is the lexicographic minimum, over all n! relabellings,
//! of the sorted feasible-mask sequence. Plain brute force, which is the point:
//! it is obviously correct at the ground-set sizes this crate targets, and it
//! doubles as the isomorphism oracle for everything else.
//!
//! Internally a family lives in a 2^n-bit indicator (n ≤ 8, so 256 bits).
//! Comparing two equal-sized families by sorted mask sequence is equivalent to
//! finding the smallest subset index where the indicators differ and asking
//! which side holds it — a couple of word operations instead of a sort.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set_system::{DeltaMatroid, Mask, Permutation, SetSystem};

/// Largest ground set the canonical-form search accepts.
pub const MAX_CANON: usize = 8;

struct CanonTables {
    perms: Vec<Permutation>,
    /// `map[p << n | m]` is mask m relabelled by permutation p.
    map: Vec<u8>,
}

static TABLES: [OnceLock<CanonTables>; MAX_CANON + 1] =
    [const { OnceLock::new() }; MAX_CANON + 1];

/// Cached list of all permutations of {1, …, n}, n ≤ 8.
pub(crate) fn all_perms_cached(n: usize) -> &'static [Permutation] {
    assert!(n <= MAX_CANON);
    &tables(n).perms
}

fn tables(n: usize) -> &'static CanonTables {
    TABLES[n].get_or_init(|| {
        let perms = Permutation::all(n);
        let size = 1usize << n;
        let mut map = Vec::with_capacity(perms.len() * size);
        for p in &perms {
            for m in 0..size {
                map.push(p.apply_mask(m as Mask) as u8);
            }
        }
        CanonTables { perms, map }
    })
}

/// 2^8 bits: enough for the subset indicator of any canonicalizable system.
type Indicator = [u64; 4];

/// Is `a` strictly smaller than `b` as a sorted feasible-mask sequence?
/// Both must hold the same number of sets.
fn indicator_lt(a: &Indicator, b: &Indicator) -> bool {
    for w in 0..4 {
        let d = a[w] ^ b[w];
        if d != 0 {
            let bit = d.trailing_zeros();
            return a[w] >> bit & 1 == 1;
        }
    }
    false
}

fn indicator_to_masks(ind: &Indicator) -> Vec<Mask> {
    let mut out = Vec::new();
    for (w, &word) in ind.iter().enumerate() {
        let mut rest = word;
        while rest != 0 {
            let b = rest.trailing_zeros();
            rest &= rest - 1;
            out.push((w as u32) << 6 | b);
        }
    }
    out
}

/// Lex-min relabelling of a raw family; returns the canonical sorted masks and
/// the index into `Permutation::all(n)` of the witnessing permutation.
pub(crate) fn canonical_masks(n: usize, feasible: &[Mask]) -> Result<(Vec<Mask>, usize)> {
    if n > MAX_CANON {
        return Err(Error::Capacity {
            task: "canonicalization",
            n,
            bound: MAX_CANON,
        });
    }
    let t = tables(n);
    let mut best: Option<Indicator> = None;
    let mut best_p = 0;
    for (pi, chunk) in t.map.chunks_exact(1 << n).enumerate() {
        let mut ind: Indicator = [0; 4];
        for &m in feasible {
            let im = chunk[m as usize];
            ind[(im >> 6) as usize] |= 1u64 << (im & 63);
        }
        match &best {
            Some(b) if !indicator_lt(&ind, b) => {}
            _ => {
                best = Some(ind);
                best_p = pi;
            }
        }
    }
    let best = best.expect("at least the identity permutation exists");
    Ok((indicator_to_masks(&best), best_p))
}

impl SetSystem {
    /// Canonical form plus a permutation taking `self` to it:
    /// `self.relabel(&perm) == canonical`. Idempotent, and identical across
    /// all relabellings of the same system.
    pub fn canonicalize(&self) -> Result<(SetSystem, Permutation)> {
        let (masks, pi) = canonical_masks(self.n(), self.feasible())?;
        let canon = SetSystem::from_parts_unchecked(self.n(), masks);
        let perm = tables(self.n()).perms[pi].clone();
        Ok((canon, perm))
    }
}

impl DeltaMatroid {
    /// Canonical form of a delta-matroid; relabelling preserves the axiom.
    pub fn canonicalize(&self) -> Result<(DeltaMatroid, Permutation)> {
        let (canon, perm) = self.as_set_system().canonicalize()?;
        Ok((DeltaMatroid::trusted(canon), perm))
    }
}
