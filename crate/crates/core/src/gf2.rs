//! Symmetric matrices over GF(2), their nondegeneracy delta-matroids, and the
//! binarity test for set systems.
//!
//! Rows are packed bitmasks (bit j − 1 of row i − 1 is the (i, j) entry), so
//! rank is a handful of word operations. Ones on the diagonal are allowed.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::set_system::{DeltaMatroid, Mask, SetSystem, MAX_GROUND};

/// A symmetric n × n matrix over GF(2), n ≤ 16.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2SymMatrix {
    n: usize,
    rows: Vec<u32>,
}

/// Witness that a set system is binary: a symmetric matrix plus a twist set
/// whose combination reproduces the system exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryWitness {
    pub matrix: Gf2SymMatrix,
    pub twist_set: Mask,
}

/// Outcome of the binarity decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binarity {
    Binary(BinaryWitness),
    NotBinary,
}

impl Binarity {
    pub fn is_binary(&self) -> bool {
        matches!(self, Binarity::Binary(_))
    }
}

/// Rank of a set of packed rows by in-place elimination.
fn rank_of_rows(mut rows: Vec<u32>, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r] >> col & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

impl Gf2SymMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "matrix size {n} exceeds {MAX_GROUND}");
        Gf2SymMatrix {
            n,
            rows: vec![0; n],
        }
    }

    pub fn all_ones(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "matrix size {n} exceeds {MAX_GROUND}");
        let full = ((1u64 << n) - 1) as u32;
        Gf2SymMatrix {
            n,
            rows: vec![full; n],
        }
    }

    /// Builds from explicit 0/1 entries, row by row; rejects asymmetry.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        if n > MAX_GROUND {
            return Err(Error::Capacity {
                task: "matrix",
                n,
                bound: MAX_GROUND,
            });
        }
        let mut m = Gf2SymMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert!(row.len() == n, "row {} has length {}", i + 1, row.len());
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.rows[i] |= 1 << j;
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if m.entry(i + 1, j + 1) != m.entry(j + 1, i + 1) {
                    return Err(Error::Asymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn from_bitrows(n: usize, rows: Vec<u32>) -> Self {
        debug_assert!(rows.len() == n);
        debug_assert!((0..n).all(|i| rows[i] >> n == 0));
        debug_assert!((0..n)
            .all(|i| (0..n).all(|j| rows[i] >> j & 1 == rows[j] >> i & 1)));
        Gf2SymMatrix { n, rows }
    }

    /// Uniformly random symmetric matrix; draws the upper triangle
    /// (diagonal included) row by row.
    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut m = Gf2SymMatrix::zeros(n);
        for i in 1..=n {
            for j in i..=n {
                if rng.gen::<bool>() {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry (i, j), 1-based.
    pub fn entry(&self, i: usize, j: usize) -> bool {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.rows[i - 1] >> (j - 1) & 1 == 1
    }

    /// Sets (i, j) and (j, i) together, keeping the matrix symmetric.
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        let (bi, bj) = (i - 1, j - 1);
        if value {
            self.rows[bi] |= 1 << bj;
            self.rows[bj] |= 1 << bi;
        } else {
            self.rows[bi] &= !(1u32 << bj);
            self.rows[bj] &= !(1u32 << bi);
        }
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows.clone(), self.n)
    }

    /// Full rank? The empty matrix counts as nondegenerate.
    pub fn is_nondegenerate(&self) -> bool {
        self.rank() == self.n
    }

    /// Is the principal submatrix on the rows and columns of `x` nondegenerate?
    pub fn principal_nondegenerate(&self, x: Mask) -> bool {
        let mut rows = Vec::with_capacity(x.count_ones() as usize);
        let mut rest = x;
        while rest != 0 {
            let b = rest.trailing_zeros();
            rest &= rest - 1;
            rows.push(self.rows[b as usize] & x);
        }
        // Masked-off columns are zero, so the packed rank is the submatrix rank.
        rank_of_rows(rows, self.n) == x.count_ones() as usize
    }

    /// The nondegeneracy delta-matroid M_A: X is feasible iff the principal
    /// submatrix A[X] is nondegenerate. The empty set is always feasible.
    pub fn delta_matroid(&self) -> DeltaMatroid {
        let feasible: Vec<Mask> = (0..1u64 << self.n)
            .map(|x| x as Mask)
            .filter(|&x| self.principal_nondegenerate(x))
            .collect();
        DeltaMatroid::trusted(SetSystem::from_parts_unchecked(self.n, feasible))
    }

    /// Grows the matrix by one row and column: the new diagonal entry is 0,
    /// the new row and column are zero except for a single 1 linking the new
    /// element to element 1.
    pub fn extend(&self) -> Gf2SymMatrix {
        assert!(self.n >= 1, "extension needs an element to link to");
        assert!(self.n < MAX_GROUND, "matrix size {} is at capacity", self.n);
        let mut rows = self.rows.clone();
        rows[0] |= 1 << self.n;
        rows.push(1);
        Gf2SymMatrix {
            n: self.n + 1,
            rows,
        }
    }
}

impl fmt::Debug for Gf2SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if self.rows[i] >> j & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect();
        write!(f, "gf2[{}]", rows.join("|"))
    }
}

/// Decides whether a set system is a twist of some nondegeneracy delta-matroid,
/// and if so produces the witness.
///
/// The system is twisted by its minimal-mask feasible set, putting ∅ into the
/// family. If the result is M_A for any symmetric A, that A is forced entry by
/// entry: the diagonal by singleton feasibility, the off-diagonal entries by
/// pair feasibility corrected for the 2 × 2 determinant's diagonal product.
/// Building the forced candidate and comparing families settles the question.
pub fn binarity(s: &SetSystem) -> Binarity {
    let f = s.feasible()[0];
    let t = s.twist(f).expect("a feasible set is within the ground set");
    let n = s.n();
    let mut a = Gf2SymMatrix::zeros(n);
    for i in 1..=n {
        if t.is_feasible(1 << (i - 1)) {
            a.set(i, i, true);
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let pair = (1 << (i - 1)) | (1 << (j - 1));
            let value = t.is_feasible(pair) ^ (a.entry(i, i) & a.entry(j, j));
            if value {
                a.set(i, j, true);
            }
        }
    }
    if a.delta_matroid().as_set_system() == &t {
        Binarity::Binary(BinaryWitness {
            matrix: a,
            twist_set: f,
        })
    } else {
        Binarity::NotBinary
    }
}

// ---------------------------------------------------------------------------
// Text format `gf2 v1`:
//     gf2 v1
//     n 3
//     111
//     110
//     100

impl fmt::Display for Gf2SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf2 v1\nn {}", self.n)?;
        for i in 0..self.n {
            write!(f, "\n")?;
            for j in 0..self.n {
                write!(f, "{}", self.rows[i] >> j & 1)?;
            }
        }
        Ok(())
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl FromStr for Gf2SymMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lines: Vec<&str> = s.lines().map(|l| l.trim_end()).collect();
        match lines.first() {
            Some(&"gf2 v1") => {}
            _ => return Err(parse_err(1, "expected header `gf2 v1`")),
        }
        let n: usize = match lines
            .get(1)
            .map(|l| l.split_whitespace().collect::<Vec<_>>())
            .as_deref()
        {
            Some(["n", v]) => v
                .parse()
                .map_err(|_| parse_err(2, format!("invalid matrix size `{v}`")))?,
            _ => return Err(parse_err(2, "expected `n <size>`")),
        };
        if n > MAX_GROUND {
            return Err(parse_err(
                2,
                format!("matrix size {n} exceeds the bound of {MAX_GROUND}"),
            ));
        }
        let mut rows = vec![0u32; n];
        for i in 0..n {
            let lineno = 3 + i;
            let row = lines
                .get(2 + i)
                .ok_or_else(|| parse_err(lineno, "missing matrix row"))?;
            if row.len() != n {
                return Err(parse_err(
                    lineno,
                    format!("expected {n} binary digits, got `{row}`"),
                ));
            }
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => rows[i] |= 1 << j,
                    _ => return Err(parse_err(lineno, format!("invalid digit `{ch}`"))),
                }
            }
        }
        for (extra, l) in lines.iter().enumerate().skip(2 + n) {
            if !l.trim().is_empty() {
                return Err(parse_err(extra + 1, "unexpected content after the matrix"));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i] >> j & 1 != rows[j] >> i & 1 {
                    return Err(parse_err(
                        3 + j,
                        format!("matrix is not symmetric at ({},{})", i + 1, j + 1),
                    ));
                }
            }
        }
        Ok(Gf2SymMatrix { n, rows })
    }
}
