//! Semigroup gluings, the splitting they induce, and complete-intersection
//! predicates.
//!
//! A partition `A = A1 ⊔ A2` of the columns is a gluing when the lattice
//! intersection `ZA1 ∩ ZA2` has rank one with a generator representable
//! with nonnegative coefficients on both sides. Gluings force splittability:
//! the lifted minimal generators of the two sub-ideals plus the connecting
//! move form a minimal system with a two-part partition whose spans are both
//! proper.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

use crate::config::{Configuration, MoveVector};
use crate::error::Error;
use crate::linalg::{intersect_lattices, LatticeZ};
use crate::markov::{minimal_system, MinimalSystem};
use crate::splitting::{realize_splitting, CoverWitness, Splitting};

/// A two-part partition of the column indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPartition {
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
}

impl ColumnPartition {
    pub fn new(s1: Vec<usize>, s2: Vec<usize>, n: usize) -> Result<Self, Error> {
        if s1.is_empty() || s2.is_empty() {
            return Err(Error::InvalidPartition(
                "both sides must be nonempty".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &i in s1.iter().chain(&s2) {
            if i >= n {
                return Err(Error::InvalidPartition(format!(
                    "column index {i} out of range"
                )));
            }
            if seen[i] {
                return Err(Error::InvalidPartition(format!("column {i} appears twice")));
            }
            seen[i] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidPartition(
                "partition must cover all columns".into(),
            ));
        }
        let mut s1 = s1;
        let mut s2 = s2;
        s1.sort_unstable();
        s2.sort_unstable();
        Ok(ColumnPartition { s1, s2 })
    }
}

/// Certificate that `NA` is obtained by gluing the sub-semigroups on `s1`
/// and `s2`: the common element `a` generates the lattice intersection and
/// is reachable with nonnegative coefficients `c` and `d` on the two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingCertificate {
    pub partition: ColumnPartition,
    pub a: Vec<BigInt>,
    pub c: Vec<BigInt>,
    pub d: Vec<BigInt>,
}

impl GluingCertificate {
    /// Re-verifies every claim of the certificate against the configuration.
    pub fn validate(&self, cfg: &Configuration) -> Result<(), Error> {
        let n = cfg.n();
        let partition =
            ColumnPartition::new(self.partition.s1.clone(), self.partition.s2.clone(), n)?;
        if self.a.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidCertificate(
                "common element must be nonzero".into(),
            ));
        }
        if self.c.len() != partition.s1.len() || self.d.len() != partition.s2.len() {
            return Err(Error::InvalidCertificate(
                "coefficient lengths do not match".into(),
            ));
        }
        if self.c.iter().chain(&self.d).any(|x| x.is_negative()) {
            return Err(Error::InvalidCertificate(
                "coefficients must be nonnegative".into(),
            ));
        }
        if self.d.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidCertificate(
                "at least one d coefficient must be nonzero".into(),
            ));
        }
        if self.c.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidCertificate(
                "at least one c coefficient must be nonzero".into(),
            ));
        }
        let (l1, l2) = (
            column_lattice(cfg, &partition.s1),
            column_lattice(cfg, &partition.s2),
        );
        let inter = intersect_lattices(&l1, &l2)?;
        if inter.rank() != 1 {
            return Err(Error::InvalidCertificate(format!(
                "lattice intersection has rank {}, expected 1",
                inter.rank()
            )));
        }
        let gen = &inter.basis()[0];
        let neg: Vec<BigInt> = self.a.iter().map(|x| -x).collect();
        if &self.a != gen && &neg != gen {
            return Err(Error::InvalidCertificate(
                "common element does not generate the lattice intersection".into(),
            ));
        }
        for (side, coeffs) in [(&partition.s1, &self.c), (&partition.s2, &self.d)] {
            let mut sum = vec![BigInt::zero(); cfg.m()];
            for (&col, coeff) in side.iter().zip(coeffs.iter()) {
                for (acc, entry) in sum.iter_mut().zip(cfg.matrix().col_vec(col)) {
                    *acc += coeff * entry;
                }
            }
            if sum != self.a {
                return Err(Error::InvalidCertificate(
                    "coefficients do not represent the common element".into(),
                ));
            }
        }
        Ok(())
    }
}

fn column_lattice(cfg: &Configuration, cols: &[usize]) -> LatticeZ {
    let gens: Vec<Vec<BigInt>> = cols.iter().map(|&c| cfg.matrix().col_vec(c)).collect();
    LatticeZ::from_generators(&gens, cfg.m()).expect("columns share ambient length")
}

/// Checks one partition for a gluing. The lattice intersection must have
/// rank one; its generator is sign-normalized into the semigroup if possible
/// (both signs are tried), and representability on both sides is decided by
/// fiber enumeration on the sub-configurations.
pub fn detect_gluing(
    cfg: &Configuration,
    partition: &ColumnPartition,
) -> Result<Option<GluingCertificate>, Error> {
    cfg.require_pointed()?;
    let partition = ColumnPartition::new(partition.s1.clone(), partition.s2.clone(), cfg.n())?;
    let (l1, l2) = (
        column_lattice(cfg, &partition.s1),
        column_lattice(cfg, &partition.s2),
    );
    let inter = intersect_lattices(&l1, &l2)?;
    if inter.rank() != 1 {
        return Ok(None);
    }
    let gen = inter.basis()[0].clone();
    let sub1 = cfg.restrict_columns(&partition.s1)?;
    let sub2 = cfg.restrict_columns(&partition.s2)?;
    for cand in [gen.clone(), gen.iter().map(|x| -x).collect::<Vec<_>>()] {
        let f1 = sub1.fiber(&cand)?;
        if f1.is_empty() {
            continue;
        }
        let f2 = sub2.fiber(&cand)?;
        if f2.is_empty() {
            continue;
        }
        let cert = GluingCertificate {
            partition: partition.clone(),
            a: cand,
            c: f1.elements()[0].clone(),
            d: f2.elements()[0].clone(),
        };
        cert.validate(cfg)?;
        return Ok(Some(cert));
    }
    Ok(None)
}

/// Scans all `2^(n-1) - 1` unordered partitions (sides ordered by size, then
/// lexicographically) and returns the first gluing found.
pub fn search_gluing(cfg: &Configuration) -> Result<Option<GluingCertificate>, Error> {
    cfg.require_pointed()?;
    let n = cfg.n();
    let limit = cfg.limits().max_partitions;
    if n > limit {
        return Err(Error::PartitionLimitExceeded { n, limit });
    }
    for size in 1..n {
        for s1 in subsets_of_size(n, size) {
            let s2: Vec<usize> = (0..n).filter(|i| !s1.contains(i)).collect();
            // Visit each unordered pair once: skip when the complement
            // sorts strictly earlier.
            if s2.len() < s1.len() || (s2.len() == s1.len() && s2 < s1) {
                continue;
            }
            let partition = ColumnPartition::new(s1.clone(), s2, n)?;
            if let Some(cert) = detect_gluing(cfg, &partition)? {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, next: usize, n: usize, left: usize) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if n - next < left {
            return;
        }
        cur.push(next);
        rec(out, cur, next + 1, n, left - 1);
        cur.pop();
        rec(out, cur, next + 1, n, left);
    }
    rec(&mut out, &mut cur, 0, n, size);
    out
}

/// Builds the splitting induced by a gluing: the lifted minimal generators
/// of the first sub-ideal against the lifted generators of the second plus
/// the connecting move `w = (c, -d)`.
///
/// When the first sub-ideal is zero (for instance a single column) its part
/// of the witness would be empty, so the sides swap roles and the second
/// part is `{w}` alone; the properness argument still goes through because
/// `w` is nonzero on both column blocks. When both sub-ideals are zero the
/// glued system is the single binomial of `w` and no two-part witness
/// exists — the gluing then does not induce a splitting and an error is
/// returned.
pub fn splitting_from_gluing(
    cfg: &Configuration,
    cert: &GluingCertificate,
) -> Result<Splitting, Error> {
    cert.validate(cfg).map_err(|e| match e {
        Error::InvalidPartition(m) => Error::InvalidCertificate(m),
        other => other,
    })?;
    let sub1 = cfg.restrict_columns(&cert.partition.s1)?;
    let sub2 = cfg.restrict_columns(&cert.partition.s2)?;
    let lift = |cols: &[usize], mv: &MoveVector| -> MoveVector {
        let mut v = vec![BigInt::zero(); cfg.n()];
        for (&col, entry) in cols.iter().zip(mv.as_slice()) {
            v[col] = entry.clone();
        }
        MoveVector::new(v).expect("lift of a nonzero move is nonzero")
    };
    let gens1: BTreeSet<MoveVector> = minimal_system(&sub1)?
        .moves()
        .iter()
        .map(|m| lift(&cert.partition.s1, m))
        .collect();
    let gens2: BTreeSet<MoveVector> = minimal_system(&sub2)?
        .moves()
        .iter()
        .map(|m| lift(&cert.partition.s2, m))
        .collect();
    let mut w = vec![BigInt::zero(); cfg.n()];
    for (&col, coeff) in cert.partition.s1.iter().zip(&cert.c) {
        w[col] = coeff.clone();
    }
    for (&col, coeff) in cert.partition.s2.iter().zip(&cert.d) {
        w[col] = -coeff.clone();
    }
    let w =
        MoveVector::new(w).map_err(|_| Error::InvalidCertificate("zero connecting move".into()))?;
    let (c1, mut c2) = if !gens1.is_empty() {
        (gens1, gens2)
    } else if !gens2.is_empty() {
        (gens2, gens1)
    } else {
        return Err(Error::InvalidCertificate(
            "both sub-ideals are zero: the glued system is a single binomial".into(),
        ));
    };
    c2.insert(w);
    let all: BTreeSet<MoveVector> = c1.union(&c2).cloned().collect();
    let system = MinimalSystem::from_moves(cfg, all).map_err(|e| match e {
        Error::InvalidWitness(m) => Error::InvalidCertificate(m),
        other => other,
    })?;
    let witness = CoverWitness::new(cfg, system, c1, c2)?;
    realize_splitting(cfg, witness)
}

/// `I_A` is a complete intersection iff the minimal number of generators
/// equals the height, i.e. the kernel dimension.
pub fn is_complete_intersection(cfg: &Configuration) -> Result<bool, Error> {
    Ok(minimal_system(cfg)?.len() == cfg.kernel().dim())
}
