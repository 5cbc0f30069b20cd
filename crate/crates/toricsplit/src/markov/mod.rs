//! Generating sets of toric ideals and their minimalization.
//!
//! `markov_basis` computes a (possibly non-minimal) binomial generating set
//! by saturating a lattice-basis ideal variable by variable. The fiber graph
//! at a degree `b` joins elements of the fiber whose supports intersect; a
//! degree contributes `t - 1` minimal generators where `t` is the number of
//! connected components, which drives `minimal_system`, the enumeration of
//! all distinct minimal systems, and the closed-form count.

pub mod gb;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::config::{Configuration, MoveVector};
use crate::error::Error;
use gb::{buchberger, divide_out_variable, Binomial, BinomialGb, MonomialOrder};

/// A binomial generating set of the toric ideal, as move vectors. The result
/// generates but need not be minimal.
///
/// Starting from the binomials of a basis of the saturated integer kernel,
/// the ideal is saturated by each variable in turn: a reduced Gröbner basis
/// is computed in a graded reverse lexicographic order that makes the
/// variable cheapest, and the maximal power of that variable is divided out
/// of every element.
pub fn markov_basis(cfg: &Configuration) -> Result<Vec<MoveVector>, Error> {
    cfg.require_pointed()?;
    let weights = cfg.variable_degrees().to_vec();
    let kernel = crate::linalg::kernel_integer(cfg.matrix());
    let mut moves: Vec<MoveVector> = Vec::new();
    for row in kernel.basis() {
        moves.push(MoveVector::new(row.clone())?);
    }
    let mut order = MonomialOrder::grevlex(weights.clone());
    let mut basis: Vec<Binomial> = moves
        .iter()
        .filter_map(|m| Binomial::from_move(m, &order))
        .collect();
    for var in 0..cfg.n() {
        order = MonomialOrder::grevlex_cheapest(weights.clone(), var);
        let reoriented = basis
            .into_iter()
            .filter_map(|g| g.reorient(&order))
            .collect();
        let mut gb = buchberger(reoriented, &order);
        divide_out_variable(&mut gb, var);
        basis = gb;
    }
    let mut out: BTreeSet<MoveVector> = BTreeSet::new();
    for g in &basis {
        if let Some(m) = g.to_move() {
            out.insert(m);
        }
    }
    Ok(out.into_iter().collect())
}

/// The final saturation Gröbner basis together with its order descriptor.
pub fn groebner_basis(cfg: &Configuration) -> Result<BinomialGb, Error> {
    let moves = markov_basis(cfg)?;
    let order = MonomialOrder::grevlex(cfg.variable_degrees().to_vec());
    Ok(BinomialGb {
        order,
        elements: moves,
    })
}

/// Partition of a fiber into the connected components of its support
/// intersection graph. Components and their elements are canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberComponents {
    degree: Vec<BigInt>,
    components: Vec<Vec<Vec<BigInt>>>,
}

impl FiberComponents {
    pub fn of_fiber(degree: &[BigInt], elements: &[Vec<BigInt>]) -> Self {
        let n = elements.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for i in 0..n {
            for j in 0..i {
                let touching = elements[i]
                    .iter()
                    .zip(&elements[j])
                    .any(|(a, b)| !a.is_zero() && !b.is_zero());
                if touching {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<Vec<BigInt>>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(elements[i].clone());
        }
        let mut components: Vec<Vec<Vec<BigInt>>> = groups.into_values().collect();
        for c in &mut components {
            c.sort();
        }
        components.sort();
        FiberComponents {
            degree: degree.to_vec(),
            components,
        }
    }

    pub fn degree(&self) -> &[BigInt] {
        &self.degree
    }

    pub fn components(&self) -> &[Vec<Vec<BigInt>>] {
        &self.components
    }

    /// Number of connected components, usually written `t_b`.
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// `(sum of sizes)^(t-2) * product of sizes` — the number of ways to
    /// join the components by a tree with one representative pair per edge.
    fn system_count(&self) -> BigInt {
        let t = self.count();
        if t <= 1 {
            return BigInt::one();
        }
        let sizes: Vec<BigInt> = self
            .components
            .iter()
            .map(|c| BigInt::from(c.len()))
            .collect();
        let total: BigInt = sizes.iter().sum();
        let mut out = BigInt::one();
        for _ in 0..t - 2 {
            out *= &total;
        }
        for s in &sizes {
            out *= s;
        }
        out
    }
}

/// A minimal binomial generating set with its Betti-degree fiber data and
/// indispensability flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSystem {
    moves: BTreeSet<MoveVector>,
    betti: BTreeMap<Vec<BigInt>, FiberComponents>,
    indispensable: BTreeSet<MoveVector>,
}

impl MinimalSystem {
    pub fn moves(&self) -> &BTreeSet<MoveVector> {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Betti degrees with their fiber components.
    pub fn betti(&self) -> &BTreeMap<Vec<BigInt>, FiberComponents> {
        &self.betti
    }

    pub fn indispensable(&self) -> &BTreeSet<MoveVector> {
        &self.indispensable
    }

    /// Assembles a system from parts that are already known to be
    /// consistent (combinatorial fast paths; cross-validated in tests).
    pub(crate) fn from_parts_unchecked(
        moves: BTreeSet<MoveVector>,
        betti: BTreeMap<Vec<BigInt>, FiberComponents>,
        indispensable: BTreeSet<MoveVector>,
    ) -> Result<MinimalSystem, Error> {
        Ok(MinimalSystem {
            moves,
            betti,
            indispensable,
        })
    }

    /// Validates a set of moves as a minimal generating set of `cfg`: at each
    /// degree the moves must join distinct fiber components by a spanning
    /// tree, and every Betti degree of the ideal must be covered. Used to
    /// turn externally constructed systems (gluings, curve templates) into
    /// `MinimalSystem` values.
    pub fn from_moves<I>(cfg: &Configuration, moves: I) -> Result<MinimalSystem, Error>
    where
        I: IntoIterator<Item = MoveVector>,
    {
        let moves: BTreeSet<MoveVector> = moves.into_iter().collect();
        let mut by_degree: BTreeMap<Vec<BigInt>, Vec<MoveVector>> = BTreeMap::new();
        for mv in &moves {
            if !cfg.binomial_member(mv.as_slice())? {
                return Err(Error::InvalidWitness(format!(
                    "{mv} is not a kernel vector"
                )));
            }
            let b = cfg.degree_of(&mv.positive_part())?;
            by_degree.entry(b).or_default().push(mv.clone());
        }
        // The candidate degrees of the minimal generators of the ideal.
        let reference = minimal_system(cfg)?;
        if reference.betti.len() != by_degree.len() || !reference.betti.keys().eq(by_degree.keys())
        {
            return Err(Error::InvalidWitness(
                "degrees do not match the Betti degrees of the ideal".into(),
            ));
        }
        let mut betti = BTreeMap::new();
        let mut indispensable = BTreeSet::new();
        for (b, degree_moves) in &by_degree {
            let comps = reference
                .betti
                .get(b)
                .expect("degree checked above")
                .clone();
            if !spans_component_tree(&comps, degree_moves) {
                return Err(Error::InvalidWitness(format!(
                    "moves at degree {b:?} do not join the fiber components by a tree"
                )));
            }
            if is_indispensable_degree(&comps) {
                indispensable.extend(degree_moves.iter().cloned());
            }
            betti.insert(b.clone(), comps);
        }
        Ok(MinimalSystem {
            moves,
            betti,
            indispensable,
        })
    }
}

fn is_indispensable_degree(comps: &FiberComponents) -> bool {
    comps.count() == 2 && comps.components().iter().all(|c| c.len() == 1)
}

/// Each move must connect two distinct components and the resulting
/// component graph must be a spanning tree.
fn spans_component_tree(comps: &FiberComponents, moves: &[MoveVector]) -> bool {
    let t = comps.count();
    if moves.len() != t - 1 {
        return false;
    }
    let comp_of = |v: &[BigInt]| -> Option<usize> {
        comps
            .components()
            .iter()
            .position(|c| c.iter().any(|e| e[..] == *v))
    };
    let mut parent: Vec<usize> = (0..t).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for mv in moves {
        let (Some(ci), Some(cj)) = (comp_of(&mv.positive_part()), comp_of(&mv.negative_part()))
        else {
            return false;
        };
        if ci == cj {
            return false;
        }
        let (ri, rj) = (find(&mut parent, ci), find(&mut parent, cj));
        if ri == rj {
            return false; // cycle
        }
        parent[ri] = rj;
    }
    let root = find(&mut parent, 0);
    (0..t).all(|i| find(&mut parent, i) == root)
}

/// Candidate Betti degrees: the degrees of the Markov basis elements, sorted
/// by increasing grading value with a lexicographic tie-break.
fn candidate_degrees(
    cfg: &Configuration,
    markov: &[MoveVector],
) -> Result<Vec<Vec<BigInt>>, Error> {
    let mut degrees: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for mv in markov {
        degrees.insert(cfg.degree_of(&mv.positive_part())?);
    }
    let mut sorted: Vec<Vec<BigInt>> = degrees.into_iter().collect();
    let mut keyed: Vec<(BigInt, Vec<BigInt>)> = sorted
        .drain(..)
        .map(|b| Ok((cfg.weight_of_degree(&b)?, b)))
        .collect::<Result<_, Error>>()?;
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, b)| b).collect())
}

fn betti_data(cfg: &Configuration) -> Result<BTreeMap<Vec<BigInt>, FiberComponents>, Error> {
    let markov = markov_basis(cfg)?;
    let mut betti = BTreeMap::new();
    for b in candidate_degrees(cfg, &markov)? {
        let fiber = cfg.fiber(&b)?;
        let comps = FiberComponents::of_fiber(&b, fiber.elements());
        if comps.count() >= 2 {
            betti.insert(b, comps);
        }
    }
    Ok(betti)
}

/// The canonical minimal system: at every Betti degree the components are
/// joined star-wise to the component containing the lexicographically least
/// fiber element, each component represented by its lex-least element.
pub fn minimal_system(cfg: &Configuration) -> Result<MinimalSystem, Error> {
    let betti = betti_data(cfg)?;
    let mut moves = BTreeSet::new();
    let mut indispensable = BTreeSet::new();
    for comps in betti.values() {
        // Components are sorted by their lex-least element, so component 0
        // contains the lex-least element of the whole fiber.
        let hub = &comps.components()[0][0];
        for other in &comps.components()[1..] {
            let mv = MoveVector::from_difference(&other[0], hub)?;
            if is_indispensable_degree(comps) {
                indispensable.insert(mv.clone());
            }
            moves.insert(mv);
        }
    }
    Ok(MinimalSystem {
        moves,
        betti,
        indispensable,
    })
}

/// Number of distinct minimal systems of binomial generators: the product
/// over Betti degrees of the tree counts of the component partitions.
pub fn count_minimal_systems(cfg: &Configuration) -> Result<BigInt, Error> {
    let betti = betti_data(cfg)?;
    let mut count = BigInt::one();
    for comps in betti.values() {
        count *= comps.system_count();
    }
    Ok(count)
}

/// All distinct minimal systems, deduplicated after sign normalization.
///
/// Per Betti degree, every spanning tree of the complete graph on the fiber
/// components is enumerated (by Prüfer sequences) and every choice of one
/// element pair per tree edge realized; the systems are the cartesian
/// product over the degrees.
pub fn enumerate_minimal_systems(cfg: &Configuration) -> Result<Vec<MinimalSystem>, Error> {
    let betti = betti_data(cfg)?;
    let cap = cfg.limits().max_systems;
    let count = {
        let mut c = BigInt::one();
        for comps in betti.values() {
            c *= comps.system_count();
        }
        c
    };
    if count > BigInt::from(cap) {
        return Err(Error::EnumerationCapExceeded {
            count: count.to_string(),
            cap,
        });
    }

    let mut per_degree: Vec<(bool, Vec<Vec<MoveVector>>)> = Vec::new();
    for comps in betti.values() {
        per_degree.push((is_indispensable_degree(comps), degree_choices(comps)?));
    }

    let mut systems: Vec<MinimalSystem> = Vec::new();
    let mut seen: BTreeSet<BTreeSet<MoveVector>> = BTreeSet::new();
    let mut stack: Vec<Vec<MoveVector>> = Vec::new();
    cartesian(&per_degree, 0, &mut stack, &mut |parts| {
        let mut moves = BTreeSet::new();
        let mut indispensable = BTreeSet::new();
        for ((indisp, _), chosen) in per_degree.iter().zip(parts) {
            for mv in chosen {
                moves.insert(mv.clone());
                if *indisp {
                    indispensable.insert(mv.clone());
                }
            }
        }
        if seen.insert(moves.clone()) {
            systems.push(MinimalSystem {
                moves,
                betti: betti.clone(),
                indispensable,
            });
        }
    });
    Ok(systems)
}

fn cartesian(
    per_degree: &[(bool, Vec<Vec<MoveVector>>)],
    idx: usize,
    stack: &mut Vec<Vec<MoveVector>>,
    emit: &mut impl FnMut(&[Vec<MoveVector>]),
) {
    if idx == per_degree.len() {
        emit(stack);
        return;
    }
    for choice in &per_degree[idx].1 {
        stack.push(choice.clone());
        cartesian(per_degree, idx + 1, stack, emit);
        stack.pop();
    }
}

/// All ways to pick `t - 1` moves joining the components of one degree:
/// spanning trees times representative pairs per edge.
fn degree_choices(comps: &FiberComponents) -> Result<Vec<Vec<MoveVector>>, Error> {
    let t = comps.count();
    let mut out = Vec::new();
    for tree in spanning_trees(t) {
        // For each edge, all element pairs across the two components.
        let mut edge_options: Vec<Vec<MoveVector>> = Vec::new();
        for &(i, j) in &tree {
            let mut opts = Vec::new();
            for u in &comps.components()[i] {
                for v in &comps.components()[j] {
                    opts.push(MoveVector::from_difference(u, v)?);
                }
            }
            edge_options.push(opts);
        }
        let mut idx = vec![0usize; edge_options.len()];
        loop {
            out.push(
                idx.iter()
                    .zip(&edge_options)
                    .map(|(&k, o)| o[k].clone())
                    .collect(),
            );
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < edge_options[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// All labeled trees on `t` vertices via Prüfer sequences, edges normalized.
fn spanning_trees(t: usize) -> Vec<Vec<(usize, usize)>> {
    if t <= 1 {
        return vec![Vec::new()];
    }
    let mut seqs: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..t - 2 {
        let mut next = Vec::new();
        for s in &seqs {
            for v in 0..t {
                let mut s2 = s.clone();
                s2.push(v);
                next.push(s2);
            }
        }
        seqs = next;
    }
    seqs.into_iter().map(|s| prufer_decode(&s, t)).collect()
}

fn prufer_decode(seq: &[usize], t: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; t];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..t).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(t - 1);
    for &v in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a.min(b), a.max(b)));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn principal_kernel_has_a_single_move() {
        let cfg = Configuration::from_generators(&[1, 2]).unwrap();
        let basis = markov_basis(&cfg).unwrap();
        assert_eq!(basis, vec![MoveVector::from_i64(&[2, -1])]);
        let sys = minimal_system(&cfg).unwrap();
        assert_eq!(sys.len(), 1);
        assert_eq!(count_minimal_systems(&cfg).unwrap(), BigInt::one());
    }

    #[test]
    fn markov_basis_lies_in_the_kernel() {
        let cfg = Configuration::from_generators(&[3, 5, 7]).unwrap();
        for mv in markov_basis(&cfg).unwrap() {
            assert!(cfg.binomial_member(mv.as_slice()).unwrap());
        }
    }

    #[test]
    fn minimal_system_of_3_5_7() {
        let cfg = Configuration::from_generators(&[3, 5, 7]).unwrap();
        let sys = minimal_system(&cfg).unwrap();
        let expected: BTreeSet<MoveVector> = [
            MoveVector::from_i64(&[1, -2, 1]),
            MoveVector::from_i64(&[4, -1, -1]),
            MoveVector::from_i64(&[3, 1, -2]),
        ]
        .into_iter()
        .collect();
        assert_eq!(sys.moves(), &expected);
        assert_eq!(sys.indispensable(), &expected);
        assert_eq!(count_minimal_systems(&cfg).unwrap(), BigInt::one());
        assert_eq!(enumerate_minimal_systems(&cfg).unwrap().len(), 1);
    }

    #[test]
    fn three_systems_for_6_10_15() {
        let cfg = Configuration::from_generators(&[6, 10, 15]).unwrap();
        assert_eq!(count_minimal_systems(&cfg).unwrap(), BigInt::from(3));
        let systems = enumerate_minimal_systems(&cfg).unwrap();
        assert_eq!(systems.len(), 3);
        for sys in &systems {
            assert_eq!(sys.len(), 2);
            assert!(sys.indispensable().is_empty());
        }
    }

    #[test]
    fn cardinality_matches_component_counts() {
        let cfg = Configuration::from_generators(&[4, 6, 11, 13]).unwrap();
        let sys = minimal_system(&cfg).unwrap();
        let expected: usize = sys.betti().values().map(|c| c.count() - 1).sum();
        assert_eq!(sys.len(), expected);
        assert_eq!(sys.len(), 6);
    }

    #[test]
    fn enumerated_systems_share_shape_and_indispensables() {
        let cfg = Configuration::from_generators(&[4, 6, 11, 13]).unwrap();
        let canonical = minimal_system(&cfg).unwrap();
        let systems = enumerate_minimal_systems(&cfg).unwrap();
        assert_eq!(systems.len(), 18);
        let degrees_of = |sys: &MinimalSystem| -> Vec<Vec<BigInt>> {
            sys.moves()
                .iter()
                .map(|m| cfg.degree_of(&m.positive_part()).unwrap())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect()
        };
        let reference = degrees_of(&canonical);
        for sys in &systems {
            assert_eq!(sys.len(), canonical.len());
            assert_eq!(degrees_of(sys), reference);
            for ind in canonical.indispensable() {
                assert!(sys.moves().contains(ind), "{ind} missing from a system");
            }
        }
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let limits = crate::config::Limits {
            max_systems: 2,
            ..crate::config::Limits::default()
        };
        let cfg = Configuration::with_limits(
            crate::linalg::IntMatrix::from_i64_rows(&[&[6, 10, 15]]),
            limits,
        )
        .unwrap();
        match enumerate_minimal_systems(&cfg) {
            Err(Error::EnumerationCapExceeded { count, cap }) => {
                assert_eq!(count, "3");
                assert_eq!(cap, 2);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn from_moves_accepts_a_valid_alternative_system() {
        let cfg = Configuration::from_generators(&[6, 10, 15]).unwrap();
        let sys = MinimalSystem::from_moves(
            &cfg,
            [
                MoveVector::from_i64(&[5, -3, 0]),
                MoveVector::from_i64(&[5, 0, -2]),
            ],
        )
        .unwrap();
        assert_eq!(sys.len(), 2);
        // Two moves at one degree with three components: a path, not a tree
        // on all three? A tree on 3 vertices needs 2 edges; both pairs go
        // through the element (5,0,0), which is a star and thus fine.
        let err = MinimalSystem::from_moves(&cfg, [MoveVector::from_i64(&[5, -3, 0])]).unwrap_err();
        assert!(matches!(err, Error::InvalidWitness(_)));
    }

    #[test]
    fn prufer_tree_counts() {
        assert_eq!(spanning_trees(2).len(), 1);
        assert_eq!(spanning_trees(3).len(), 3);
        assert_eq!(spanning_trees(4).len(), 16);
    }

    #[test]
    fn fiber_components_partition() {
        let elements = vec![vi(&[4, 1, 0, 0]), vi(&[1, 3, 0, 0]), vi(&[0, 0, 2, 0])];
        let comps = FiberComponents::of_fiber(&vi(&[22]), &elements);
        assert_eq!(comps.count(), 2);
        assert_eq!(comps.components()[0], vec![vi(&[0, 0, 2, 0])]);
        assert_eq!(
            comps.components()[1],
            vec![vi(&[1, 3, 0, 0]), vi(&[4, 1, 0, 0])]
        );
        assert_eq!(comps.system_count(), BigInt::from(2));
    }
}
