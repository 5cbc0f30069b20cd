//! Canonical rational subspaces of Q^n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

use super::matrix::{IntMatrix, RatMatrix};
use crate::error::Error;

/// A subspace of Q^n in canonical form: the basis is the reduced row echelon
/// form with every row scaled to integer entries of content 1 and positive
/// leading entry, pivot columns strictly increasing. Two equal spans produce
/// bit-identical values, so subspaces can be compared, hashed and ordered.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceQ {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl SubspaceQ {
    pub fn zero(ambient: usize) -> Self {
        SubspaceQ {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![BigInt::zero(); ambient];
                v[i] = BigInt::one();
                v
            })
            .collect();
        SubspaceQ {
            ambient,
            basis: rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical subspace spanned by integer generators.
    pub fn from_int_rows(rows: &[Vec<BigInt>], ambient: usize) -> Result<Self, Error> {
        let rat: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        Self::from_rat_rows(rat, ambient)
    }

    /// Canonical subspace spanned by rational generators.
    pub fn from_rat_rows(rows: Vec<Vec<BigRational>>, ambient: usize) -> Result<Self, Error> {
        let m = RatMatrix::from_rows(rows, ambient)?;
        let (r, pivots) = m.rref();
        let mut basis = Vec::with_capacity(pivots.len());
        for i in 0..pivots.len() {
            basis.push(scale_to_primitive(r.row(i)));
        }
        Ok(SubspaceQ {
            ambient,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical integer-scaled basis rows.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.basis.clone(), self.ambient).unwrap()
    }

    pub fn contains_int(&self, v: &[BigInt]) -> bool {
        let rat: Vec<BigRational> = v
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        self.contains_rat(&rat)
    }

    pub fn contains_rat(&self, v: &[BigRational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = &v[p] / BigRational::from_integer(row[p].clone());
                for (vc, rc) in v.iter_mut().zip(row) {
                    *vc -= &f * BigRational::from_integer(rc.clone());
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &SubspaceQ) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|r| other.contains_int(r))
    }
}

/// Clears denominators and the content of a rational row; the leading entry
/// comes out positive because rref pivots are 1.
fn scale_to_primitive(row: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = row
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() || gcd.is_one() {
        return ints;
    }
    ints.iter().map(|x| x / &gcd).collect()
}

impl fmt::Display for SubspaceQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subspace of Q^{} of dim {}:", self.ambient, self.dim())?;
        for row in &self.basis {
            let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, " [{}]", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SubspaceQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
