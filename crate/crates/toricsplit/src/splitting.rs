//! Deciding, enumerating, realizing and verifying toric splittings.
//!
//! A splitting is identified with an unordered pair of proper rational
//! subspaces of the kernel: infinitely many integer matrices realize the
//! same pair, but they all share the two kernels. Witnesses come from
//! two-part partitions of minimal generating systems whose spans are both
//! proper subspaces of the kernel.

use std::collections::BTreeSet;
use std::fmt;

use crate::config::{Configuration, MoveVector};
use crate::error::Error;
use crate::linalg::{kernel_rational, orthogonal_complement, IntMatrix, SubspaceQ};
use crate::markov::{enumerate_minimal_systems, minimal_system, MinimalSystem};

/// A minimal system together with a two-part partition whose spans are both
/// proper subspaces of the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverWitness {
    pub system: MinimalSystem,
    pub c1: BTreeSet<MoveVector>,
    pub c2: BTreeSet<MoveVector>,
    pub span1: SubspaceQ,
    pub span2: SubspaceQ,
}

impl CoverWitness {
    /// Builds and validates a witness for a configuration.
    pub fn new(
        cfg: &Configuration,
        system: MinimalSystem,
        c1: BTreeSet<MoveVector>,
        c2: BTreeSet<MoveVector>,
    ) -> Result<CoverWitness, Error> {
        if c1.is_empty() || c2.is_empty() {
            return Err(Error::InvalidWitness("both parts must be nonempty".into()));
        }
        if !c1.is_disjoint(&c2) {
            return Err(Error::InvalidWitness("parts must be disjoint".into()));
        }
        let union: BTreeSet<MoveVector> = c1.union(&c2).cloned().collect();
        if &union != system.moves() {
            return Err(Error::InvalidWitness("parts must cover the system".into()));
        }
        for mv in &union {
            if !cfg.binomial_member(mv.as_slice())? {
                return Err(Error::InvalidWitness(format!(
                    "{mv} is not a kernel vector"
                )));
            }
        }
        let kernel_dim = cfg.kernel().dim();
        let span1 = span_of(&c1, cfg.n())?;
        let span2 = span_of(&c2, cfg.n())?;
        if span1.dim() >= kernel_dim || span2.dim() >= kernel_dim {
            return Err(Error::InvalidWitness(
                "both spans must be proper subspaces of the kernel".into(),
            ));
        }
        Ok(CoverWitness {
            system,
            c1,
            c2,
            span1,
            span2,
        })
    }
}

fn span_of(moves: &BTreeSet<MoveVector>, ambient: usize) -> Result<SubspaceQ, Error> {
    let rows: Vec<Vec<num_bigint::BigInt>> = moves.iter().map(|m| m.as_slice().to_vec()).collect();
    SubspaceQ::from_int_rows(&rows, ambient)
}

/// Linear-algebra verification of a claimed splitting `(A1, A2)` of `cfg`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// ker_Q(A_i) ⊆ ker_Q(A): the summands are subideals.
    pub contained: [bool; 2],
    /// Some minimal system of generators is covered by the two kernels:
    /// the summands generate the whole ideal.
    pub covers_generators: bool,
    /// ker_Q(A_i) ≠ ker_Q(A): the summands are proper.
    pub proper: [bool; 2],
}

impl VerificationReport {
    pub fn verdict(&self) -> bool {
        self.contained[0]
            && self.contained[1]
            && self.covers_generators
            && self.proper[0]
            && self.proper[1]
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "subideal containment: {} {}",
            self.contained[0], self.contained[1]
        )?;
        writeln!(f, "generators covered:   {}", self.covers_generators)?;
        writeln!(
            f,
            "proper subideals:     {} {}",
            self.proper[0], self.proper[1]
        )?;
        write!(f, "verdict:              {}", self.verdict())
    }
}

/// Checks by pure kernel arithmetic whether `I_A = I_{A1} + I_{A2}` is a
/// splitting: containment of the summand kernels, coverage of a minimal
/// generating system, and properness of both summands.
///
/// Coverage quantifies over minimal systems: at every Betti degree the
/// fiber components must be joinable by moves lying in one of the two
/// kernels. Minimal systems pick their generators degree by degree, so this
/// holds exactly when some minimal system is covered, which in turn is
/// equivalent to `I_A ⊆ I_{A1} + I_{A2}` once containment holds. Checking
/// only one fixed system would wrongly reject splittings whose covered
/// system makes different representative choices.
pub fn verify_splitting(
    cfg: &Configuration,
    a1: &IntMatrix,
    a2: &IntMatrix,
) -> Result<VerificationReport, Error> {
    if a1.cols() != cfg.n() {
        return Err(Error::DimensionMismatch {
            expected: cfg.n(),
            got: a1.cols(),
        });
    }
    if a2.cols() != cfg.n() {
        return Err(Error::DimensionMismatch {
            expected: cfg.n(),
            got: a2.cols(),
        });
    }
    let kernel = cfg.kernel();
    let k1 = kernel_rational(a1);
    let k2 = kernel_rational(a2);
    let contained = [k1.is_subspace_of(&kernel), k2.is_subspace_of(&kernel)];
    let in_kernel = |m: &IntMatrix, v: &[num_bigint::BigInt]| {
        m.mul_vec(v)
            .map(|p| p.iter().all(num_traits::Zero::is_zero))
            .unwrap_or(false)
    };
    let system = minimal_system(cfg)?;
    let covers_generators = system.betti().values().all(|comps| {
        let t = comps.count();
        let mut parent: Vec<usize> = (0..t).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        let mut joined = 1usize;
        for i in 0..t {
            'pair: for j in 0..i {
                for u in &comps.components()[i] {
                    for v in &comps.components()[j] {
                        let diff: Vec<num_bigint::BigInt> =
                            u.iter().zip(v).map(|(a, b)| a - b).collect();
                        if in_kernel(a1, &diff) || in_kernel(a2, &diff) {
                            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                            if ri != rj {
                                parent[ri] = rj;
                                joined += 1;
                            }
                            continue 'pair;
                        }
                    }
                }
            }
        }
        joined == t
    });
    let proper = [k1 != kernel, k2 != kernel];
    Ok(VerificationReport {
        contained,
        covers_generators,
        proper,
    })
}

/// A realized toric splitting: the unordered pair of kernel subspaces, one
/// integer matrix realization per side, and the witness it came from.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub span1: SubspaceQ,
    pub span2: SubspaceQ,
    pub a1: IntMatrix,
    pub a2: IntMatrix,
    pub witness: CoverWitness,
    pub report: VerificationReport,
}

impl Splitting {
    /// The unordered pair identity of the splitting.
    pub fn canonical_pair(&self) -> (SubspaceQ, SubspaceQ) {
        if self.span1 <= self.span2 {
            (self.span1.clone(), self.span2.clone())
        } else {
            (self.span2.clone(), self.span1.clone())
        }
    }
}

/// Realizes a witness as integer matrices via orthogonal complements and
/// verifies the result.
pub fn realize_splitting(cfg: &Configuration, witness: CoverWitness) -> Result<Splitting, Error> {
    let a1 = orthogonal_complement(&witness.span1);
    let a2 = orthogonal_complement(&witness.span2);
    assert_eq!(
        kernel_rational(&a1),
        witness.span1,
        "complement must realize span1"
    );
    assert_eq!(
        kernel_rational(&a2),
        witness.span2,
        "complement must realize span2"
    );
    let report = verify_splitting(cfg, &a1, &a2)?;
    if !report.verdict() {
        return Err(Error::InvalidWitness(
            "realized matrices fail verification".into(),
        ));
    }
    Ok(Splitting {
        span1: witness.span1.clone(),
        span2: witness.span2.clone(),
        a1,
        a2,
        witness,
        report,
    })
}

/// Searches all minimal systems and all two-part partitions for a witness:
/// `Some` iff the toric ideal is splittable. Partitions are scanned by
/// increasing size of the first part with lexicographic order inside a size,
/// so the first hit is deterministic.
pub fn decide_splittable(cfg: &Configuration) -> Result<Option<CoverWitness>, Error> {
    cfg.require_pointed()?;
    let kernel_dim = cfg.kernel().dim();
    for system in enumerate_minimal_systems(cfg)? {
        if let Some((c1, c2)) = find_partition(&system, kernel_dim, cfg.n()) {
            let witness = CoverWitness::new(cfg, system, c1, c2)?;
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

fn find_partition(
    system: &MinimalSystem,
    kernel_dim: usize,
    ambient: usize,
) -> Option<(BTreeSet<MoveVector>, BTreeSet<MoveVector>)> {
    let mut found = None;
    scan_partitions(system, kernel_dim, ambient, &mut |c1, c2| {
        if found.is_none() {
            found = Some((c1.clone(), c2.clone()));
            false
        } else {
            false
        }
    });
    found
}

/// Visits every valid bipartition (both spans proper) of the system, in the
/// documented deterministic order. The callback returns `true` to continue
/// scanning, `false` to stop early.
fn scan_partitions(
    system: &MinimalSystem,
    kernel_dim: usize,
    ambient: usize,
    visit: &mut impl FnMut(&BTreeSet<MoveVector>, &BTreeSet<MoveVector>) -> bool,
) {
    let moves: Vec<MoveVector> = system.moves().iter().cloned().collect();
    let k = moves.len();
    if k < 2 || kernel_dim == 0 {
        return;
    }
    // Subsets as bitmasks, ordered by popcount then numeric value: numeric
    // order on equal-size masks is the required lexicographic order on the
    // sorted move list read from the highest bit.
    for size in 1..=k / 2 {
        let masks = masks_of_size(k, size);
        for mask in masks {
            // Unordered pairs: when both halves have equal size, keep only
            // the masks containing the first move.
            if 2 * size == k && mask & 1 == 0 {
                continue;
            }
            let mut c1 = BTreeSet::new();
            let mut c2 = BTreeSet::new();
            for (i, mv) in moves.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    c1.insert(mv.clone());
                } else {
                    c2.insert(mv.clone());
                }
            }
            let span1 = span_of(&c1, ambient).expect("moves share ambient length");
            if span1.dim() >= kernel_dim {
                continue;
            }
            let span2 = span_of(&c2, ambient).expect("moves share ambient length");
            if span2.dim() >= kernel_dim {
                continue;
            }
            if !visit(&c1, &c2) {
                return;
            }
        }
    }
}

fn masks_of_size(k: usize, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut mask: u64 = 0;
    fn rec(out: &mut Vec<u64>, mask: &mut u64, next: usize, k: usize, left: usize) {
        if left == 0 {
            out.push(*mask);
            return;
        }
        if next >= k || k - next < left {
            return;
        }
        *mask |= 1 << next;
        rec(out, mask, next + 1, k, left - 1);
        *mask &= !(1 << next);
        rec(out, mask, next + 1, k, left);
    }
    rec(&mut out, &mut mask, 0, k, size);
    out
}

/// All distinct splittings arising from two-part partitions of minimal
/// systems, each realized via orthogonal complements and verified.
/// Deduplicated by the canonical unordered subspace pair.
pub fn enumerate_splittings(cfg: &Configuration) -> Result<Vec<Splitting>, Error> {
    cfg.require_pointed()?;
    let kernel_dim = cfg.kernel().dim();
    let mut pairs: Vec<(SubspaceQ, SubspaceQ)> = Vec::new();
    let mut witnesses: Vec<CoverWitness> = Vec::new();
    let mut seen: BTreeSet<(SubspaceQ, SubspaceQ)> = BTreeSet::new();
    for system in enumerate_minimal_systems(cfg)? {
        scan_partitions(&system, kernel_dim, cfg.n(), &mut |c1, c2| {
            let span1 = span_of(c1, cfg.n()).expect("moves share ambient length");
            let span2 = span_of(c2, cfg.n()).expect("moves share ambient length");
            let key = if span1 <= span2 {
                (span1.clone(), span2.clone())
            } else {
                (span2.clone(), span1.clone())
            };
            if seen.insert(key.clone()) {
                pairs.push(key);
                witnesses.push(
                    CoverWitness::new(cfg, system.clone(), c1.clone(), c2.clone())
                        .expect("scan emits only valid partitions"),
                );
            }
            true
        });
    }
    witnesses
        .into_iter()
        .map(|w| realize_splitting(cfg, w))
        .collect()
}
