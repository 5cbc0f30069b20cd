//! Vector configurations and the graded semantics of their toric ideals:
//! pointedness certificates, move vectors, fiber enumeration and binomial
//! membership. No Gröbner machinery lives here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::Error;
use crate::linalg::simplex::{nonnegative_solution, Feasibility};
use crate::linalg::{kernel_rational, IntMatrix, RatMatrix, SubspaceQ};

/// Resource caps for the search-style operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Hard cap on the number of elements of a single fiber.
    pub max_fiber: usize,
    /// Hard cap on the number of enumerated minimal systems.
    pub max_systems: usize,
    /// Largest number of columns for the exhaustive gluing partition search.
    pub max_partitions: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_fiber: 100_000,
            max_systems: 1_000_000,
            max_partitions: 16,
        }
    }
}

/// Exact machine-checkable answer to "is the affine semigroup NA pointed?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointednessCertificate {
    /// A rational functional with `<w, a_i> >= 1` for every column; its
    /// existence rules out nonzero nonnegative kernel vectors.
    Pointed { w: Vec<BigRational> },
    /// A nonzero nonnegative integer vector with `A u = 0`.
    NotPointed { u: Vec<BigInt> },
}

/// An integer vector configuration: the columns of `matrix` are the vectors
/// a_1..a_n. Pointedness is certified once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    matrix: IntMatrix,
    certificate: PointednessCertificate,
    /// For pointed configurations: positive integer degrees `d_j = <w', a_j>`
    /// of the variables under an integer rescaling of the certificate
    /// functional. Empty when not pointed.
    var_degrees: Vec<BigInt>,
    limits: Limits,
}

impl Configuration {
    /// Validates the matrix (no zero columns, at least one column) and
    /// computes the pointedness certificate.
    pub fn new(matrix: IntMatrix) -> Result<Self, Error> {
        Self::with_limits(matrix, Limits::default())
    }

    pub fn with_limits(matrix: IntMatrix, limits: Limits) -> Result<Self, Error> {
        if matrix.cols() == 0 {
            return Err(Error::EmptyConfiguration);
        }
        for c in 0..matrix.cols() {
            if matrix.col_vec(c).iter().all(|x| x.is_zero()) {
                return Err(Error::ZeroColumn(c));
            }
        }
        let certificate = certify_pointedness(&matrix);
        let var_degrees = match &certificate {
            PointednessCertificate::Pointed { w } => variable_degrees(&matrix, w),
            PointednessCertificate::NotPointed { .. } => Vec::new(),
        };
        Ok(Configuration {
            matrix,
            certificate,
            var_degrees,
            limits,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    /// 1 x n configuration from positive semigroup generators.
    pub fn from_generators(gens: &[i64]) -> Result<Self, Error> {
        Self::from_i64_rows(&[gens])
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Number of columns (vectors).
    pub fn n(&self) -> usize {
        self.matrix.cols()
    }

    /// Ambient dimension of the column vectors.
    pub fn m(&self) -> usize {
        self.matrix.rows()
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn pointedness(&self) -> &PointednessCertificate {
        &self.certificate
    }

    pub fn is_pointed(&self) -> bool {
        matches!(self.certificate, PointednessCertificate::Pointed { .. })
    }

    pub fn require_pointed(&self) -> Result<(), Error> {
        if self.is_pointed() {
            Ok(())
        } else {
            Err(Error::NotPointed)
        }
    }

    /// Positive integer degree of each variable under the grading functional.
    /// Only available for pointed configurations.
    pub fn variable_degrees(&self) -> &[BigInt] {
        &self.var_degrees
    }

    /// The grading value `<w', b>` of a degree vector, with the same integer
    /// rescaled functional that grades the variables.
    pub fn weight_of_degree(&self, b: &[BigInt]) -> Result<BigInt, Error> {
        self.require_pointed()?;
        if b.len() != self.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                got: b.len(),
            });
        }
        Ok(self
            .int_functional()
            .iter()
            .zip(b)
            .map(|(w, x)| w * x)
            .sum())
    }

    fn int_functional(&self) -> Vec<BigInt> {
        match &self.certificate {
            PointednessCertificate::Pointed { w } => scale_functional(w),
            PointednessCertificate::NotPointed { .. } => Vec::new(),
        }
    }

    /// The rational kernel of the configuration matrix.
    pub fn kernel(&self) -> SubspaceQ {
        kernel_rational(&self.matrix)
    }

    /// True iff the binomial attached to `u` lies in the toric ideal,
    /// i.e. `A u = 0`.
    pub fn binomial_member(&self, u: &[BigInt]) -> Result<bool, Error> {
        Ok(self.matrix.mul_vec(u)?.iter().all(|x| x.is_zero()))
    }

    /// Degree `A u` of a nonnegative exponent vector.
    pub fn degree_of(&self, u: &[BigInt]) -> Result<Vec<BigInt>, Error> {
        self.matrix.mul_vec(u)
    }

    /// The complete finite fiber `{u in N^n : A u = b}`.
    ///
    /// Depth-first search over the coordinates; since every variable has
    /// positive grading degree, the remaining grading value bounds the next
    /// exponent, which makes the search finite and complete.
    pub fn fiber(&self, b: &[BigInt]) -> Result<Fiber, Error> {
        self.require_pointed()?;
        if b.len() != self.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                got: b.len(),
            });
        }
        let w = self.int_functional();
        let wb: BigInt = w.iter().zip(b).map(|(wi, bi)| wi * bi).sum();
        let mut out: Vec<Vec<BigInt>> = Vec::new();
        if !wb.is_negative() {
            let mut partial = vec![BigInt::zero(); self.n()];
            self.fiber_dfs(0, &mut b.to_vec(), wb, &mut partial, &mut out)?;
        }
        out.sort();
        Ok(Fiber {
            degree: b.to_vec(),
            elements: out,
        })
    }

    fn fiber_dfs(
        &self,
        col: usize,
        remaining: &mut Vec<BigInt>,
        wrem: BigInt,
        partial: &mut Vec<BigInt>,
        out: &mut Vec<Vec<BigInt>>,
    ) -> Result<(), Error> {
        if col == self.n() {
            if remaining.iter().all(|x| x.is_zero()) {
                if out.len() == self.limits.max_fiber {
                    return Err(Error::FiberCapExceeded(self.limits.max_fiber));
                }
                out.push(partial.clone());
            }
            return Ok(());
        }
        let d = &self.var_degrees[col];
        let a = self.matrix.col_vec(col);
        if col + 1 == self.n() {
            // Last column: the exponent is forced by the grading value.
            let (q, r) = wrem.div_rem(d);
            if r.is_zero() && !q.is_negative() {
                let exact = remaining.iter().zip(&a).all(|(rem, ai)| rem == &(ai * &q));
                if exact {
                    partial[col] = q;
                    if out.len() == self.limits.max_fiber {
                        return Err(Error::FiberCapExceeded(self.limits.max_fiber));
                    }
                    out.push(partial.clone());
                    partial[col] = BigInt::zero();
                }
            }
            return Ok(());
        }
        let max = wrem.div_floor(d);
        let mut k = BigInt::zero();
        while k <= max {
            let new_wrem = &wrem - &k * d;
            for (rem, ai) in remaining.iter_mut().zip(&a) {
                *rem -= ai * &k;
            }
            partial[col] = k.clone();
            self.fiber_dfs(col + 1, remaining, new_wrem, partial, out)?;
            for (rem, ai) in remaining.iter_mut().zip(&a) {
                *rem += ai * &k;
            }
            partial[col] = BigInt::zero();
            k += BigInt::one();
        }
        Ok(())
    }

    /// Sub-configuration on a subset of columns, keeping the column order.
    pub fn restrict_columns(&self, cols: &[usize]) -> Result<Configuration, Error> {
        let rows: Vec<Vec<BigInt>> = (0..self.m())
            .map(|r| cols.iter().map(|&c| self.matrix[(r, c)].clone()).collect())
            .collect();
        Configuration::with_limits(IntMatrix::from_rows(rows, cols.len())?, self.limits.clone())
    }
}

fn scale_functional(w: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in w {
        lcm = lcm.lcm(x.denom());
    }
    w.iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect()
}

fn variable_degrees(matrix: &IntMatrix, w: &[BigRational]) -> Vec<BigInt> {
    let wi = scale_functional(w);
    (0..matrix.cols())
        .map(|c| matrix.col_vec(c).iter().zip(&wi).map(|(a, w)| a * w).sum())
        .collect()
}

/// Decides pointedness with the exact phase-1 simplex. Feasibility of
/// `A u = 0, sum(u) = 1, u >= 0` yields a nonnegative kernel witness; the
/// Farkas certificate of its infeasibility converts into a strictly positive
/// grading functional. Both branches are re-checked by direct arithmetic.
fn certify_pointedness(matrix: &IntMatrix) -> PointednessCertificate {
    let m = matrix.rows();
    let n = matrix.cols();
    let mut b = RatMatrix::zero(m + 1, n);
    for r in 0..m {
        for c in 0..n {
            b[(r, c)] = BigRational::from_integer(matrix[(r, c)].clone());
        }
    }
    for c in 0..n {
        b[(m, c)] = BigRational::one();
    }
    let mut rhs = vec![BigRational::zero(); m + 1];
    rhs[m] = BigRational::one();
    // Both branches are re-checked by direct arithmetic, independently of
    // the simplex that produced them.
    match nonnegative_solution(&b, &rhs) {
        Feasibility::Feasible(u) => {
            let u = clear_denominators(&u);
            assert!(
                u.iter().all(|x| !x.is_negative()),
                "witness must be nonnegative"
            );
            assert!(u.iter().any(|x| x.is_positive()), "witness must be nonzero");
            assert!(
                matrix.mul_vec(&u).unwrap().iter().all(|x| x.is_zero()),
                "witness must lie in the kernel"
            );
            PointednessCertificate::NotPointed { u }
        }
        Feasibility::Infeasible(y) => {
            // y' A + y_0 <= 0 columnwise with y_0 > 0, so w = -y'/y_0
            // satisfies <w, a_j> >= 1 for every column.
            let y0 = y[m].clone();
            assert!(
                y0.is_positive(),
                "Farkas certificate must have positive last entry"
            );
            let w: Vec<BigRational> = (0..m).map(|i| -&y[i] / &y0).collect();
            assert!(
                (0..n).all(|c| {
                    let dot: BigRational = matrix
                        .col_vec(c)
                        .iter()
                        .zip(&w)
                        .map(|(a, wi)| BigRational::from_integer(a.clone()) * wi)
                        .sum();
                    dot >= BigRational::one()
                }),
                "grading functional must give every column degree >= 1"
            );
            PointednessCertificate::Pointed { w }
        }
    }
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
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

/// A nonzero vector of the integer kernel, normalized so that its first
/// nonzero coordinate is positive. Encodes the binomial
/// `x^{u+} - x^{u-}` up to the global sign.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveVector(Vec<BigInt>);

impl MoveVector {
    pub fn new(v: Vec<BigInt>) -> Result<Self, Error> {
        let Some(first) = v.iter().find(|x| !x.is_zero()) else {
            return Err(Error::ZeroMove);
        };
        if first.is_negative() {
            Ok(MoveVector(v.iter().map(|x| -x).collect()))
        } else {
            Ok(MoveVector(v))
        }
    }

    pub fn from_i64(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| BigInt::from(x)).collect()).expect("nonzero move")
    }

    /// Normalized difference `a - b` of two exponent vectors.
    pub fn from_difference(a: &[BigInt], b: &[BigInt]) -> Result<Self, Error> {
        Self::new(a.iter().zip(b).map(|(x, y)| x - y).collect())
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise positive part.
    pub fn positive_part(&self) -> Vec<BigInt> {
        self.0
            .iter()
            .map(|x| {
                if x.is_positive() {
                    x.clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    }

    /// Componentwise negative part (as nonnegative entries).
    pub fn negative_part(&self) -> Vec<BigInt> {
        self.0
            .iter()
            .map(|x| {
                if x.is_negative() {
                    -x.clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    }

    pub fn negated(&self) -> Vec<BigInt> {
        self.0.iter().map(|x| -x).collect()
    }
}

impl fmt::Display for MoveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

impl fmt::Debug for MoveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The finite fiber of a degree vector: all nonnegative integer solutions of
/// `A u = b`, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    degree: Vec<BigInt>,
    elements: Vec<Vec<BigInt>>,
}

impl Fiber {
    pub fn degree(&self) -> &[BigInt] {
        &self.degree
    }

    pub fn elements(&self) -> &[Vec<BigInt>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}
