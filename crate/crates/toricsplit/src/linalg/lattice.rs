//! Integer lattices given by Hermite normal form bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;

use super::matrix::IntMatrix;
use crate::error::Error;

/// A sublattice of Z^n, identified by its row-style HNF basis. Two equal
/// lattices have bit-identical values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeZ {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
}

impl LatticeZ {
    pub fn zero(ambient: usize) -> Self {
        LatticeZ {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn from_generators(gens: &[Vec<BigInt>], ambient: usize) -> Result<Self, Error> {
        let m = IntMatrix::from_rows(gens.to_vec(), ambient)?;
        Ok(LatticeZ {
            ambient,
            basis: m.hnf().row_vecs(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.basis.clone(), self.ambient).unwrap()
    }

    /// Exact membership test by back-substitution against the HNF basis.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut v = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).unwrap();
            if !v[p].is_zero() {
                let (q, r) = v[p].div_rem(&row[p]);
                if !r.is_zero() {
                    return false;
                }
                for (vc, rc) in v.iter_mut().zip(row) {
                    *vc -= &q * rc;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

impl fmt::Display for LatticeZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lattice in Z^{} of rank {}:", self.ambient, self.rank())?;
        for row in &self.basis {
            let s: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, " [{}]", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticeZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn membership_in_index_two_sublattice() {
        let l = LatticeZ::from_generators(&[vi(&[2, 0]), vi(&[0, 2])], 2).unwrap();
        assert!(l.contains(&vi(&[4, -2])));
        assert!(!l.contains(&vi(&[1, 1])));
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn generators_order_does_not_matter() {
        let a = LatticeZ::from_generators(&[vi(&[3, 1]), vi(&[1, 2])], 2).unwrap();
        let b = LatticeZ::from_generators(&[vi(&[1, 2]), vi(&[4, 3]), vi(&[3, 1])], 2).unwrap();
        assert_eq!(a, b);
    }
}
