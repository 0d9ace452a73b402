//! The graded algebra-and-coalgebra structure on binary delta-matroids:
//! integer combinations, product, coproduct, the projection onto primitive
//! elements, the families used to span primitives, and the rank computation
//! behind the linear-independence claim.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::Gf2SymMatrix;
use crate::partitions::set_partitions;
use crate::polynomial::IntPolynomial;
use crate::set_system::{DeltaMatroid, Mask, MAX_GROUND};

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("combination coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("combination coefficient overflow")
}

/// An integer combination of delta-matroids of a common ground-set size,
/// keyed by canonical form; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct DmCombination {
    terms: BTreeMap<DeltaMatroid, i64>,
}

impl DmCombination {
    pub fn zero() -> Self {
        DmCombination::default()
    }

    /// The combination 1·D (canonicalized).
    pub fn from_dm(d: &DeltaMatroid) -> Result<Self> {
        let mut out = DmCombination::zero();
        out.add_scaled(d, 1)?;
        Ok(out)
    }

    /// Ground-set size shared by every term; None when the combination is 0.
    pub fn grade(&self) -> Option<usize> {
        self.terms.keys().next().map(|d| d.n())
    }

    /// Adds coeff·D, merging with the canonical representative of D.
    pub fn add_scaled(&mut self, d: &DeltaMatroid, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let (canon, _) = d.canonicalize()?;
        assert!(
            self.grade().map_or(true, |g| g == canon.n()),
            "combination mixes ground-set sizes"
        );
        match self.terms.entry(canon) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let merged = checked_add(*slot.get(), coeff);
                if merged == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = merged;
                }
            }
        }
        Ok(())
    }

    /// Coefficient of D's canonical class.
    pub fn coeff(&self, d: &DeltaMatroid) -> Result<i64> {
        let (canon, _) = d.canonicalize()?;
        Ok(self.terms.get(&canon).copied().unwrap_or(0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DeltaMatroid, i64)> {
        self.terms.iter().map(|(d, &c)| (d, c))
    }

    pub fn scale(&self, k: i64) -> DmCombination {
        if k == 0 {
            return DmCombination::zero();
        }
        DmCombination {
            terms: self
                .terms
                .iter()
                .map(|(d, &c)| (d.clone(), checked_mul(c, k)))
                .collect(),
        }
    }

    pub fn add(&self, other: &DmCombination) -> Result<DmCombination> {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_scaled(d, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DmCombination) -> Result<DmCombination> {
        self.add(&other.scale(-1))
    }

    /// Bilinear extension of the delta-matroid product.
    pub fn product(&self, other: &DmCombination) -> Result<DmCombination> {
        let mut out = DmCombination::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in other.terms() {
                out.add_scaled(&d1.product(d2)?, checked_mul(c1, c2))?;
            }
        }
        Ok(out)
    }

    /// Interlace polynomial extended linearly: Σ coeff · q(term).
    pub fn interlace_polynomial(&self) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (d, c) in self.terms() {
            out = &out + &d.interlace_polynomial().scale(c);
        }
        out
    }
}

impl fmt::Debug for DmCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "combination(0)");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(d, c)| format!("{c} × {:?}", d.as_set_system()))
            .collect();
        write!(f, "combination({})", parts.join("  +  "))
    }
}

/// An integer combination of ordered pairs of delta-matroids (canonical in
/// each factor); zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorCombination {
    terms: BTreeMap<(DeltaMatroid, DeltaMatroid), i64>,
}

impl TensorCombination {
    pub fn zero() -> Self {
        TensorCombination::default()
    }

    pub fn add_scaled(
        &mut self,
        left: &DeltaMatroid,
        right: &DeltaMatroid,
        coeff: i64,
    ) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        let key = (left.canonicalize()?.0, right.canonicalize()?.0);
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                let merged = checked_add(*slot.get(), coeff);
                if merged == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = merged;
                }
            }
        }
        Ok(())
    }

    pub fn coeff(&self, left: &DeltaMatroid, right: &DeltaMatroid) -> Result<i64> {
        let key = (left.canonicalize()?.0, right.canonicalize()?.0);
        Ok(self.terms.get(&key).copied().unwrap_or(0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DeltaMatroid, &DeltaMatroid, i64)> {
        self.terms.iter().map(|((l, r), &c)| (l, r, c))
    }

    pub fn scale(&self, k: i64) -> TensorCombination {
        if k == 0 {
            return TensorCombination::zero();
        }
        TensorCombination {
            terms: self
                .terms
                .iter()
                .map(|(key, &c)| (key.clone(), checked_mul(c, k)))
                .collect(),
        }
    }

    pub fn add(&self, other: &TensorCombination) -> Result<TensorCombination> {
        let mut out = self.clone();
        for (l, r, c) in other.terms() {
            out.add_scaled(l, r, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorCombination) -> Result<TensorCombination> {
        self.add(&other.scale(-1))
    }

    /// Tensor factors swapped; fixed points are the cocommutative elements.
    pub fn swap_factors(&self) -> TensorCombination {
        TensorCombination {
            terms: self
                .terms
                .iter()
                .map(|((l, r), &c)| ((r.clone(), l.clone()), c))
                .collect(),
        }
    }

    /// Componentwise product: (a ⊗ b)(c ⊗ d) = ac ⊗ bd, extended bilinearly.
    pub fn componentwise_product(&self, other: &TensorCombination) -> Result<TensorCombination> {
        let mut out = TensorCombination::zero();
        for (l1, r1, c1) in self.terms() {
            for (l2, r2, c2) in other.terms() {
                out.add_scaled(&l1.product(l2)?, &r1.product(r2)?, checked_mul(c1, c2))?;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for TensorCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "tensor(0)");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(l, r, c)| {
                format!(
                    "{c} × {:?} ⊗ {:?}",
                    l.as_set_system(),
                    r.as_set_system()
                )
            })
            .collect();
        write!(f, "tensor({})", parts.join("  +  "))
    }
}

/// Coproduct μ(D) = Σ_{E' ⊆ E} D|_{E'} ⊗ D|_{E∖E'}, with 2^n summands
/// merged canonically.
pub fn coproduct(d: &DeltaMatroid) -> Result<TensorCombination> {
    let n = d.n();
    let ground = d.ground_mask();
    let mut out = TensorCombination::zero();
    for m in 0..1u64 << n {
        let sub = m as Mask;
        out.add_scaled(&d.restrict(sub)?, &d.restrict(ground ^ sub)?, 1)?;
    }
    Ok(out)
}

/// Linear extension of the coproduct to combinations.
pub fn coproduct_combination(c: &DmCombination) -> Result<TensorCombination> {
    let mut out = TensorCombination::zero();
    for (d, coeff) in c.terms() {
        out = out.add(&coproduct(d)?.scale(coeff))?;
    }
    Ok(out)
}

/// Is μ(c) = 1 ⊗ c + c ⊗ 1? (The zero combination counts as primitive.)
pub fn is_primitive(c: &DmCombination) -> Result<bool> {
    let unit = DeltaMatroid::unit();
    let mut expected = TensorCombination::zero();
    for (d, coeff) in c.terms() {
        expected.add_scaled(&unit, d, coeff)?;
        expected.add_scaled(d, &unit, coeff)?;
    }
    Ok(coproduct_combination(c)?.sub(&expected)?.is_zero())
}

/// (−1)^{k−1} (k−1)! — the coefficient of the k-block partitions in the
/// projection onto primitives.
fn partition_coefficient(k: usize) -> i64 {
    let mut factorial: i64 = 1;
    for i in 2..k {
        factorial = checked_mul(factorial, i as i64);
    }
    if k % 2 == 0 {
        -factorial
    } else {
        factorial
    }
}

/// Projection onto the subspace of primitive elements:
/// π(D) = Σ_k (−1)^{k−1}(k−1)! Σ_{E = E_1 ⊔ … ⊔ E_k} D|_{E_1} ⋯ D|_{E_k},
/// summing over partitions into k nonempty blocks. Grade is preserved; for
/// the empty ground set the projection is zero.
pub fn project_primitive(d: &DeltaMatroid) -> Result<DmCombination> {
    let mut out = DmCombination::zero();
    for blocks in set_partitions(d.n()) {
        if blocks.is_empty() {
            continue;
        }
        let mut term = DeltaMatroid::unit();
        for &block in &blocks {
            term = term.product(&d.restrict(block)?)?;
        }
        out.add_scaled(&term, partition_coefficient(blocks.len()))?;
    }
    Ok(out)
}

/// Linear extension of the projection.
pub fn project_combination(c: &DmCombination) -> Result<DmCombination> {
    let mut out = DmCombination::zero();
    for (d, coeff) in c.terms() {
        out = out.add(&project_primitive(d)?.scale(coeff))?;
    }
    Ok(out)
}

/// The combination that telescopes to zero:
/// D∖1 − Σ D|_{E_1∖1} D|_{E_2} + 2! Σ D|_{E_1∖1} D|_{E_2} D|_{E_3} − …,
/// where each partition's block E_1 is the one containing element 1. All
/// terms live in grade n − 1.
pub fn telescoping_combination(d: &DeltaMatroid) -> Result<DmCombination> {
    if d.n() == 0 {
        return Err(Error::ElementOutOfRange { element: 1, n: 0 });
    }
    let mut out = DmCombination::zero();
    for blocks in set_partitions(d.n()) {
        // Blocks are ordered by least element, so blocks[0] contains 1.
        let mut term = d.restrict(blocks[0] & !1)?;
        for &block in &blocks[1..] {
            term = term.product(&d.restrict(block)?)?;
        }
        out.add_scaled(&term, partition_coefficient(blocks.len()))?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Families.

/// ({1,…,n}, {∅, {1}, …, {n}}): the nondegeneracy delta-matroid of the n×n
/// all-ones matrix. n = 0 gives the unit.
pub fn all_ones(n: usize) -> Result<DeltaMatroid> {
    if n > MAX_GROUND {
        return Err(Error::Capacity {
            task: "all-ones family",
            n,
            bound: MAX_GROUND,
        });
    }
    Ok(Gf2SymMatrix::all_ones(n).delta_matroid())
}

/// The matrix chain behind the tower family: the all-ones base grown `steps`
/// times, each step linking one fresh element to element 1.
pub fn tower_matrix(base: usize, steps: usize) -> Result<Gf2SymMatrix> {
    assert!(base >= 1, "tower needs a base element to link to");
    if base + steps > MAX_GROUND {
        return Err(Error::Capacity {
            task: "tower family",
            n: base + steps,
            bound: MAX_GROUND,
        });
    }
    let mut a = Gf2SymMatrix::all_ones(base);
    for _ in 0..steps {
        a = a.extend();
    }
    Ok(a)
}

/// The tower delta-matroid on base + steps elements.
pub fn tower(base: usize, steps: usize) -> Result<DeltaMatroid> {
    Ok(tower_matrix(base, steps)?.delta_matroid())
}

/// Nondegeneracy delta-matroid of the complete graph on n vertices.
pub fn complete_graph_dm(n: usize) -> Result<DeltaMatroid> {
    if n > MAX_GROUND {
        return Err(Error::Capacity {
            task: "complete-graph family",
            n,
            bound: MAX_GROUND,
        });
    }
    let mut a = Gf2SymMatrix::zeros(n);
    for i in 1..=n {
        for j in i + 1..=n {
            a.set(i, j, true);
        }
    }
    Ok(a.delta_matroid())
}

// ---------------------------------------------------------------------------
// The degree-n independence computation.

/// The n projected families in degree n, their polynomials, and the rank of
/// the coefficient matrix over the rationals.
#[derive(Clone, Debug)]
pub struct PrimitiveSpan {
    pub n: usize,
    /// Row labels, in order: the all-ones family, the towers with base
    /// n−1 … 2, then the complete graph.
    pub labels: Vec<String>,
    pub polynomials: Vec<IntPolynomial>,
    /// Rows = polynomials, columns = coefficients of x^0 … x^n.
    pub matrix: Vec<Vec<i64>>,
    pub rank: usize,
}

/// Builds the degree-n rows q(π(·)) and computes their exact rank. The
/// independence claim is rank = n.
pub fn primitive_span(n: usize) -> Result<PrimitiveSpan> {
    assert!(n >= 2, "the degree-n row list needs n >= 2");
    let mut rows: Vec<(String, DeltaMatroid)> = Vec::with_capacity(n);
    rows.push((format!("allones({n})"), all_ones(n)?));
    for k in 1..=n - 2 {
        rows.push((format!("tower({},{k})", n - k), tower(n - k, k)?));
    }
    rows.push((format!("complete({n})"), complete_graph_dm(n)?));

    let mut labels = Vec::with_capacity(n);
    let mut polynomials = Vec::with_capacity(n);
    let mut matrix = Vec::with_capacity(n);
    for (label, d) in rows {
        let q = project_primitive(&d)?.interlace_polynomial();
        let mut row = vec![0i64; n + 1];
        for (k, &c) in q.coeffs().iter().enumerate() {
            row[k] = c;
        }
        labels.push(label);
        polynomials.push(q);
        matrix.push(row);
    }
    let rank = integer_rank(
        matrix
            .iter()
            .map(|row| row.iter().map(|&c| c as i128).collect())
            .collect(),
    );
    Ok(PrimitiveSpan {
        n,
        labels,
        polynomials,
        matrix,
        rank,
    })
}

/// Rank over the rationals by fraction-free elimination on exact integers.
fn integer_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            if rows[r][col] == 0 {
                continue;
            }
            let (num, den) = (rows[r][col], rows[rank][col]);
            for c in col..ncols {
                let scaled = rows[r][c].checked_mul(den).expect("rank overflow");
                let offset = rows[rank][c].checked_mul(num).expect("rank overflow");
                rows[r][c] = scaled.checked_sub(offset).expect("rank overflow");
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
