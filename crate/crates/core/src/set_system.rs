//! Set systems and delta-matroids on ground sets {1, …, n}.
//!
//! Subsets are bitmasks: bit (i − 1) holds element i. A [`SetSystem`] keeps its
//! feasible family as a sorted, duplicate-free mask sequence, so equality of
//! systems is plain structural equality. A [`DeltaMatroid`] is a set system
//! that has passed the symmetric exchange axiom check.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A subset of the ground set; bit (i − 1) holds element i.
pub type Mask = u32;
/// A ground-set element, labelled 1 through n.
pub type Element = usize;

/// Largest ground set supported by the general operations.
pub const MAX_GROUND: usize = 16;

/// Builds the mask for a list of elements: `mask_of(&[1, 3])` is `0b101`.
pub fn mask_of(elements: &[Element]) -> Mask {
    let mut m = 0;
    for &e in elements {
        assert!(e >= 1, "elements are labelled from 1");
        m |= 1 << (e - 1);
    }
    m
}

/// Lists the elements of a mask in increasing order.
pub fn elements_of(m: Mask) -> Vec<Element> {
    (1..=32).filter(|e| m & (1 << (e - 1)) != 0).collect()
}

/// Renders a mask in set notation, e.g. `{1,3}`; the empty set is `{}`.
pub fn set_notation(m: Mask) -> String {
    let inner: Vec<String> = elements_of(m).iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn check_element(e: Element, n: usize) -> Result<u32> {
    if e >= 1 && e <= n {
        Ok((e - 1) as u32)
    } else {
        Err(Error::ElementOutOfRange { element: e, n })
    }
}

/// Removes bit position `b` from a mask, shifting higher bits down.
pub(crate) fn drop_bit(m: Mask, b: u32) -> Mask {
    (m & ((1 << b) - 1)) | ((m >> (b + 1)) << b)
}

/// A relabelling of {1, …, n}. `image(i)` is the new label of element i.
#[derive(Clone, PartialEq, Eq)]
pub struct Permutation {
    // 0-based: images[i] is the 0-based image of the element with bit index i.
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `from_images(&[2, 1])` swaps 1 and 2.
    pub fn from_images(images: &[Element]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &im in images {
            let b = check_element(im, n)?;
            if seen[b as usize] {
                return Err(Error::DistinctRequired { element: im });
            }
            seen[b as usize] = true;
            out.push(b as u8);
        }
        Ok(Permutation { images: out })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// New label of element `e` (1-based).
    pub fn image(&self, e: Element) -> Element {
        self.images[e - 1] as usize + 1
    }

    /// Applies the relabelling to a subset mask.
    pub fn apply_mask(&self, m: Mask) -> Mask {
        let mut out = 0;
        let mut rest = m;
        while rest != 0 {
            let b = rest.trailing_zeros();
            out |= 1 << self.images[b as usize];
            rest &= rest - 1;
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u8;
        }
        Permutation { images }
    }

    /// All n! permutations of {1, …, n}, in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        if n == 0 {
            return vec![Permutation::identity(0)];
        }
        (0..n as u8)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = (1..=self.n()).map(|e| self.image(e).to_string()).collect();
        write!(f, "perm[{}]", images.join(","))
    }
}

/// Outcome of the symmetric exchange axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// Feasible sets X, Y and an x ∈ X Δ Y for which no y ∈ X Δ Y makes
    /// {x, y} Δ X feasible.
    Counterexample {
        x_set: Mask,
        y_set: Mask,
        element: Element,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// A proper set system (E, Φ): ground set {1, …, n} plus a nonempty family of
/// subsets, stored as a sorted duplicate-free mask sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetSystem {
    n: usize,
    feasible: Vec<Mask>,
}

impl SetSystem {
    /// Builds a set system, sorting the family. Rejects duplicates, masks that
    /// do not fit the ground set, empty families, and oversized ground sets.
    pub fn new(n: usize, mut feasible: Vec<Mask>) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::Capacity {
                task: "ground set",
                n,
                bound: MAX_GROUND,
            });
        }
        if feasible.is_empty() {
            return Err(Error::ImproperSetSystem);
        }
        feasible.sort_unstable();
        for w in feasible.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateFeasible { mask: w[0] });
            }
        }
        if let Some(&last) = feasible.last() {
            if last >> n != 0 {
                return Err(Error::MaskOutOfRange { mask: last, n });
            }
        }
        Ok(SetSystem { n, feasible })
    }

    /// Internal constructor for families already known sorted, unique and in range.
    pub(crate) fn from_parts_unchecked(n: usize, feasible: Vec<Mask>) -> Self {
        debug_assert!(!feasible.is_empty());
        debug_assert!(feasible.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(feasible.last().map_or(true, |m| m >> n == 0));
        SetSystem { n, feasible }
    }

    /// Builds a set system from an indicator over subset indices: bit m of
    /// `indicator` includes the subset with mask m.
    pub fn from_indicator(n: usize, indicator: u64) -> Result<Self> {
        if n > 6 {
            return Err(Error::Capacity {
                task: "indicator encoding",
                n,
                bound: 6,
            });
        }
        let masks: Vec<Mask> = (0..(1u32 << n))
            .filter(|&m| indicator & (1u64 << m) != 0)
            .collect();
        SetSystem::new(n, masks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn feasible(&self) -> &[Mask] {
        &self.feasible
    }

    /// Mask of the full ground set.
    pub fn ground_mask(&self) -> Mask {
        ((1u64 << self.n) - 1) as Mask
    }

    pub fn is_feasible(&self, m: Mask) -> bool {
        self.feasible.binary_search(&m).is_ok()
    }

    /// Union of all feasible sets.
    pub fn feasible_union(&self) -> Mask {
        self.feasible.iter().fold(0, |a, f| a | f)
    }

    /// Intersection of all feasible sets.
    pub fn feasible_intersection(&self) -> Mask {
        self.feasible.iter().fold(self.ground_mask(), |a, f| a & f)
    }

    /// The twist D ∗ X: every feasible set is replaced by its symmetric
    /// difference with X. Same number of feasible sets, always.
    pub fn twist(&self, x: Mask) -> Result<SetSystem> {
        if x >> self.n != 0 && self.n < 32 {
            return Err(Error::MaskOutOfRange { mask: x, n: self.n });
        }
        let mut fam: Vec<Mask> = self.feasible.iter().map(|f| f ^ x).collect();
        fam.sort_unstable();
        Ok(SetSystem::from_parts_unchecked(self.n, fam))
    }

    /// Distance from the system to a subset: min over feasible F of |F Δ X|.
    pub fn distance(&self, x: Mask) -> Result<u32> {
        if x >> self.n != 0 && self.n < 32 {
            return Err(Error::MaskOutOfRange { mask: x, n: self.n });
        }
        Ok(self
            .feasible
            .iter()
            .map(|f| (f ^ x).count_ones())
            .min()
            .expect("feasible family is nonempty"))
    }

    /// Checks the symmetric exchange axiom: for all feasible X, Y and every
    /// x ∈ X Δ Y there must be a y ∈ X Δ Y (y = x allowed) with {x, y} Δ X
    /// feasible. Returns the first witness triple when the axiom fails.
    pub fn validate(&self) -> Validity {
        for &x_set in &self.feasible {
            for &y_set in &self.feasible {
                let diff = x_set ^ y_set;
                let mut xs = diff;
                while xs != 0 {
                    let xb = xs.trailing_zeros();
                    xs &= xs - 1;
                    let mut found = false;
                    let mut ys = diff;
                    while ys != 0 {
                        let yb = ys.trailing_zeros();
                        ys &= ys - 1;
                        // {x, y} Δ X; when y = x the pair collapses to {x}.
                        let cand = if yb == xb {
                            x_set ^ (1 << xb)
                        } else {
                            x_set ^ (1 << xb) ^ (1 << yb)
                        };
                        if self.is_feasible(cand) {
                            found = true;
                            break;
                        }
                    }
                    if !found {
                        return Validity::Counterexample {
                            x_set,
                            y_set,
                            element: xb as usize + 1,
                        };
                    }
                }
            }
        }
        Validity::Valid
    }

    /// Applies a relabelling to every feasible set.
    pub fn relabel(&self, p: &Permutation) -> Result<SetSystem> {
        if p.n() != self.n {
            return Err(Error::ElementOutOfRange {
                element: p.n(),
                n: self.n,
            });
        }
        let mut fam: Vec<Mask> = self.feasible.iter().map(|&f| p.apply_mask(f)).collect();
        fam.sort_unstable();
        Ok(SetSystem::from_parts_unchecked(self.n, fam))
    }
}

impl fmt::Debug for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam: Vec<String> = self.feasible.iter().map(|&m| set_notation(m)).collect();
        write!(f, "SetSystem(n={}; {})", self.n, fam.join(", "))
    }
}

/// How to remove an element from a delta-matroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    Delete,
    Contract,
}

/// Classification of a ground-set element by feasible membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    /// In no feasible set.
    Loop,
    /// In every feasible set.
    Coloop,
    Ordinary,
}

/// A set system satisfying the symmetric exchange axiom.
///
/// Constructed through [`DeltaMatroid::new`], which runs the axiom check, or
/// internally by operations that provably preserve it (twist, delete,
/// contract, product); those closure facts are themselves exercised by the
/// exhaustive test suites rather than assumed silently.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMatroid {
    inner: SetSystem,
}

impl Deref for DeltaMatroid {
    type Target = SetSystem;

    fn deref(&self) -> &SetSystem {
        &self.inner
    }
}

impl DeltaMatroid {
    /// Checks the exchange axiom and wraps the system.
    pub fn new(s: SetSystem) -> Result<Self> {
        match s.validate() {
            Validity::Valid => Ok(DeltaMatroid { inner: s }),
            Validity::Counterexample {
                x_set,
                y_set,
                element,
            } => Err(Error::ExchangeAxiom {
                x_set,
                y_set,
                element,
            }),
        }
    }

    /// Wraps a system produced by an operation that preserves the axiom.
    pub(crate) fn trusted(inner: SetSystem) -> Self {
        DeltaMatroid { inner }
    }

    /// The delta-matroid (∅, {∅}); neutral element of the product.
    pub fn unit() -> Self {
        DeltaMatroid {
            inner: SetSystem::from_parts_unchecked(0, vec![0]),
        }
    }

    pub fn as_set_system(&self) -> &SetSystem {
        &self.inner
    }

    pub fn into_set_system(self) -> SetSystem {
        self.inner
    }

    /// Twist of a delta-matroid; stays a delta-matroid.
    pub fn twist(&self, x: Mask) -> Result<DeltaMatroid> {
        Ok(DeltaMatroid::trusted(self.inner.twist(x)?))
    }

    pub fn classify(&self, e: Element) -> Result<ElementClass> {
        let b = check_element(e, self.n())?;
        let bit = 1u32 << b;
        if self.feasible_union() & bit == 0 {
            Ok(ElementClass::Loop)
        } else if self.feasible_intersection() & bit != 0 {
            Ok(ElementClass::Coloop)
        } else {
            Ok(ElementClass::Ordinary)
        }
    }

    /// Removes element e, relabelling the survivors to {1, …, n − 1} in order.
    ///
    /// Deleting a coloop falls back to contraction and contracting a loop
    /// falls back to deletion, so the result is always proper.
    pub fn reduce(&self, e: Element, mode: Reduction) -> Result<DeltaMatroid> {
        let b = check_element(e, self.n())?;
        let effective = match (mode, self.classify(e)?) {
            (Reduction::Delete, ElementClass::Coloop) => Reduction::Contract,
            (Reduction::Contract, ElementClass::Loop) => Reduction::Delete,
            (m, _) => m,
        };
        let bit = 1u32 << b;
        let fam: Vec<Mask> = match effective {
            Reduction::Delete => self
                .feasible()
                .iter()
                .filter(|&&f| f & bit == 0)
                .map(|&f| drop_bit(f, b))
                .collect(),
            Reduction::Contract => self
                .feasible()
                .iter()
                .filter(|&&f| f & bit != 0)
                .map(|&f| drop_bit(f, b))
                .collect(),
        };
        Ok(DeltaMatroid::trusted(SetSystem::from_parts_unchecked(
            self.n() - 1,
            fam,
        )))
    }

    pub fn delete(&self, e: Element) -> Result<DeltaMatroid> {
        self.reduce(e, Reduction::Delete)
    }

    pub fn contract(&self, e: Element) -> Result<DeltaMatroid> {
        self.reduce(e, Reduction::Contract)
    }

    /// Restriction to the elements of `keep`: deletes everything else (with the
    /// coloop fallback), then relabels the kept elements to {1, …, |keep|}
    /// preserving their order. Independent of deletion order.
    pub fn restrict(&self, keep: Mask) -> Result<DeltaMatroid> {
        if keep >> self.n() != 0 && self.n() < 32 {
            return Err(Error::MaskOutOfRange {
                mask: keep,
                n: self.n(),
            });
        }
        let mut cur = self.clone();
        // Highest label first, so pending labels never shift under us.
        for e in (1..=self.n()).rev() {
            if keep & (1 << (e - 1)) == 0 {
                cur = cur.reduce(e, Reduction::Delete)?;
            }
        }
        Ok(cur)
    }

    /// Direct product: disjoint union of ground sets (the right factor's
    /// labels are shifted up by the left factor's size), feasible family
    /// {F₁ ⊔ F₂}. The family size multiplies.
    pub fn product(&self, other: &DeltaMatroid) -> Result<DeltaMatroid> {
        let n = self.n() + other.n();
        if n > MAX_GROUND {
            return Err(Error::Capacity {
                task: "product ground set",
                n,
                bound: MAX_GROUND,
            });
        }
        let shift = self.n();
        let mut fam = Vec::with_capacity(self.feasible().len() * other.feasible().len());
        for &f2 in other.feasible() {
            for &f1 in self.feasible() {
                fam.push(f1 | (f2 << shift));
            }
        }
        Ok(DeltaMatroid::trusted(SetSystem::from_parts_unchecked(
            n, fam,
        )))
    }
}

impl fmt::Debug for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam: Vec<String> = self.feasible().iter().map(|&m| set_notation(m)).collect();
        write!(f, "DeltaMatroid(n={}; {})", self.n(), fam.join(", "))
    }
}

// ---------------------------------------------------------------------------
// Text format `dm v1`:
//     dm v1
//     n 2
//     feasible 0 1 3

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dm v1\nn {}\nfeasible", self.n)?;
        for m in &self.feasible {
            write!(f, " {m}")?;
        }
        Ok(())
    }
}

impl fmt::Display for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl FromStr for SetSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(|l| l.trim_end()).collect();
        for (i, l) in lines.iter().enumerate().skip(3) {
            if !l.trim().is_empty() {
                return Err(parse_err(i + 1, "unexpected content after the feasible line"));
            }
        }
        match lines.first() {
            Some(&"dm v1") => {}
            _ => return Err(parse_err(1, "expected header `dm v1`")),
        }
        let n: usize = match lines
            .get(1)
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
            .as_deref()
        {
            Some(["n", v]) => v
                .parse()
                .map_err(|_| parse_err(2, format!("invalid ground set size `{v}`")))?,
            _ => return Err(parse_err(2, "expected `n <size>`")),
        };
        let toks: Vec<&str> = match lines.get(2) {
            Some(l) => l.split_whitespace().collect(),
            None => return Err(parse_err(3, "expected `feasible <masks>`")),
        };
        if toks.first() != Some(&"feasible") {
            return Err(parse_err(3, "expected `feasible <masks>`"));
        }
        let mut masks = Vec::with_capacity(toks.len() - 1);
        for t in &toks[1..] {
            let m: Mask = t
                .parse()
                .map_err(|_| parse_err(3, format!("invalid mask `{t}`")))?;
            masks.push(m);
        }
        SetSystem::new(n, masks).map_err(|e| match e {
            Error::Capacity { .. } => parse_err(2, e.to_string()),
            other => parse_err(3, other.to_string()),
        })
    }
}
