//! Exact integer/rational linear algebra: kernels, Hermite normal forms,
//! canonical subspaces, lattice saturation and intersection.

mod lattice;
mod matrix;
pub mod simplex;
mod subspace;

pub use lattice::LatticeZ;
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use subspace::SubspaceQ;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;

/// The rational kernel `{u : M u = 0}` in canonical form.
pub fn kernel_rational(m: &IntMatrix) -> SubspaceQ {
    let (r, pivots) = m.to_rational().rref();
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![num_rational::BigRational::zero(); n];
        v[f] = num_rational::BigRational::from_integer(BigInt::from(1));
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[(i, f)].clone();
        }
        basis.push(v);
    }
    SubspaceQ::from_rat_rows(basis, n).expect("kernel rows have ambient length")
}

/// The saturated integer kernel `ker_Q(M) ∩ Z^n` in HNF.
///
/// Computed from a unimodular transform `U` with `U Mᵀ = [H; 0]`: the rows of
/// `U` below the rank of `M` are a basis of the integer kernel, and because
/// `U` is unimodular the resulting lattice is automatically saturated.
pub fn kernel_integer(m: &IntMatrix) -> LatticeZ {
    let t = m.transpose();
    let (h, u) = t.hnf_with_transform();
    let rank = h.rows();
    let gens: Vec<Vec<BigInt>> = (rank..t.rows()).map(|r| u.row(r).to_vec()).collect();
    LatticeZ::from_generators(&gens, m.cols()).expect("kernel rows have ambient length")
}

/// An integer matrix whose rows span the orthogonal complement of `v`, so
/// that `kernel_rational(result) == v`.
pub fn orthogonal_complement(v: &SubspaceQ) -> IntMatrix {
    let comp = kernel_rational(&v.to_matrix());
    IntMatrix::from_rows(comp.basis().to_vec(), v.ambient_dim()).unwrap()
}

/// The saturation `span_Q(gens) ∩ Z^n` of the span of integer generators.
pub fn saturate_span(gens: &[Vec<BigInt>], ambient: usize) -> Result<LatticeZ, Error> {
    let span = SubspaceQ::from_int_rows(gens, ambient)?;
    Ok(kernel_integer(&orthogonal_complement(&span)))
}

/// HNF basis of `l1 ∩ l2`.
///
/// An element of the intersection is `x B1 = y B2` for integer coefficient
/// rows `x`, `y`; the pairs `(x, y)` form the integer kernel of the matrix
/// `[B1ᵀ | -B2ᵀ]`, and mapping a kernel basis through `x ↦ x B1` gives a
/// basis of the intersection.
pub fn intersect_lattices(l1: &LatticeZ, l2: &LatticeZ) -> Result<LatticeZ, Error> {
    let n = l1.ambient_dim();
    if l2.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: l2.ambient_dim(),
        });
    }
    let (r1, r2) = (l1.rank(), l2.rank());
    if r1 == 0 || r2 == 0 {
        return Ok(LatticeZ::zero(n));
    }
    let mut stacked = IntMatrix::zero(n, r1 + r2);
    for (j, row) in l1.basis().iter().enumerate() {
        for i in 0..n {
            stacked[(i, j)] = row[i].clone();
        }
    }
    for (j, row) in l2.basis().iter().enumerate() {
        for i in 0..n {
            stacked[(i, r1 + j)] = -row[i].clone();
        }
    }
    let ker = kernel_integer(&stacked);
    let gens: Vec<Vec<BigInt>> = ker
        .basis()
        .iter()
        .map(|xy| {
            let mut v = vec![BigInt::zero(); n];
            for (j, row) in l1.basis().iter().enumerate() {
                for i in 0..n {
                    v[i] += &xy[j] * &row[i];
                }
            }
            v
        })
        .collect();
    LatticeZ::from_generators(&gens, n)
}
