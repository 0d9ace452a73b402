//! Dense integer polynomials and the interlace polynomial of a set system.
//!
//! Coefficients are exact i64 values and every arithmetic step is checked:
//! overflow panics loudly instead of wrapping. At the ground-set sizes the
//! crate supports, coefficients stay far below the limit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::set_system::{DeltaMatroid, ElementClass, Mask, SetSystem};

/// A polynomial with integer coefficients, stored lowest degree first with no
/// trailing zeros; the zero polynomial keeps an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        IntPolynomial::from_coeffs(vec![0, 1])
    }

    /// `coeff · x^degree`.
    pub fn monomial(coeff: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Lowest degree first; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i64, |acc, &c| checked_add(checked_mul(acc, x), c))
    }

    pub fn scale(&self, k: i64) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|&c| checked_mul(c, k)).collect())
    }

    /// Substitutes x ↦ x + c (Horner over the polynomial ring).
    pub fn shift(&self, c: i64) -> IntPolynomial {
        let x_plus_c = IntPolynomial::from_coeffs(vec![c, 1]);
        let mut res = IntPolynomial::zero();
        for &a in self.coeffs.iter().rev() {
            res = &(&res * &x_plus_c) + &IntPolynomial::constant(a);
        }
        res
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs(
            (0..len)
                .map(|k| checked_add(self.coeff(k), rhs.coeff(k)))
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = checked_add(out[i + j], checked_mul(a, b));
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPolynomial {
            type Output = IntPolynomial;

            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    /// Lowest-degree term first: `2 - 3x + x^2`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly({self})")
    }
}

impl SetSystem {
    /// The interlace polynomial q: one term x^{d(φ)} for every subset φ of the
    /// ground set, where d is the distance to the feasible family. The
    /// coefficients are nonnegative, sum to 2^n, and the constant term counts
    /// the feasible sets.
    pub fn interlace_polynomial(&self) -> IntPolynomial {
        let mut counts = vec![0i64; self.n() + 1];
        for phi in 0..(1u64 << self.n()) {
            let d = self
                .distance(phi as Mask)
                .expect("subset masks of the ground set are in range");
            counts[d as usize] += 1;
        }
        IntPolynomial::from_coeffs(counts)
    }
}

impl DeltaMatroid {
    /// Same polynomial, computed by element elimination: for the smallest
    /// element e that is neither a loop nor a coloop,
    /// q(D) = q(D ∖ e) + q((D ∗ e) ∖ e); when every element is a loop or a
    /// coloop the direct subset sum takes over.
    pub fn interlace_polynomial_recursive(&self) -> IntPolynomial {
        let ordinary = (1..=self.n()).find(|&e| {
            matches!(
                self.classify(e).expect("element in range"),
                ElementClass::Ordinary
            )
        });
        match ordinary {
            None => self.as_set_system().interlace_polynomial(),
            Some(e) => {
                let deleted = self.delete(e).expect("element in range");
                let twisted = self
                    .twist(1 << (e - 1))
                    .expect("mask in range")
                    .delete(e)
                    .expect("element in range");
                &deleted.interlace_polynomial_recursive()
                    + &twisted.interlace_polynomial_recursive()
            }
        }
    }
}
