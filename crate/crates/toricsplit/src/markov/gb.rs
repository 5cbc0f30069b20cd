//! Binomial Buchberger engine for lattice ideals.
//!
//! All ideals handled here are generated by pure differences of monomials
//! and are homogeneous for a positive grading, so every S-polynomial and
//! every reduction step stays a pure difference; no coefficient arithmetic
//! beyond signs is ever needed.

use num_bigint::BigInt;
use num_traits::Zero;
use std::cmp::Ordering;

use crate::config::MoveVector;

/// Weighted graded reverse lexicographic order. `weights` are the positive
/// degrees of the variables; `significance` lists the variables from most to
/// least significant, so `significance.last()` is the cheapest variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Vec<BigInt>,
    significance: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(weights: Vec<BigInt>) -> Self {
        let n = weights.len();
        MonomialOrder {
            weights,
            significance: (0..n).collect(),
        }
    }

    /// Grevlex with variable `cheapest` moved to the least significant slot.
    pub fn grevlex_cheapest(weights: Vec<BigInt>, cheapest: usize) -> Self {
        let n = weights.len();
        let mut sig: Vec<usize> = (0..n).filter(|&v| v != cheapest).collect();
        sig.push(cheapest);
        MonomialOrder {
            weights,
            significance: sig,
        }
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }

    pub fn significance(&self) -> &[usize] {
        &self.significance
    }

    pub fn weight_of(&self, mono: &[BigInt]) -> BigInt {
        mono.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    pub fn cmp_mono(&self, a: &[BigInt], b: &[BigInt]) -> Ordering {
        let (wa, wb) = (self.weight_of(a), self.weight_of(b));
        match wa.cmp(&wb) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Reverse lex tie-break: the last variable (in significance order)
        // where the exponents differ decides, smaller exponent wins.
        for &v in self.significance.iter().rev() {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// The pure difference `x^lead - x^trail` with `lead > trail` in the active
/// order. Exponents may share support; common factors are only divided out
/// by the saturation steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Binomial {
    pub lead: Vec<BigInt>,
    pub trail: Vec<BigInt>,
}

impl Binomial {
    /// Orients a difference of exponent vectors; `None` when they are equal.
    fn oriented(a: Vec<BigInt>, b: Vec<BigInt>, order: &MonomialOrder) -> Option<Binomial> {
        match order.cmp_mono(&a, &b) {
            Ordering::Greater => Some(Binomial { lead: a, trail: b }),
            Ordering::Less => Some(Binomial { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn from_move(mv: &MoveVector, order: &MonomialOrder) -> Option<Binomial> {
        Binomial::oriented(mv.positive_part(), mv.negative_part(), order)
    }

    /// Re-orients the same pair of monomials under a different order. The
    /// exponents are kept verbatim; common factors must not be cancelled
    /// here because they carry ideal membership before saturation.
    pub fn reorient(self, order: &MonomialOrder) -> Option<Binomial> {
        Binomial::oriented(self.lead, self.trail, order)
    }

    pub fn to_move(&self) -> Option<MoveVector> {
        MoveVector::from_difference(&self.lead, &self.trail).ok()
    }
}

fn divides(d: &[BigInt], m: &[BigInt]) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

fn lcm_mono(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x.max(y).clone()).collect()
}

fn coprime(a: &[BigInt], b: &[BigInt]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.is_zero() || y.is_zero())
}

/// `m / d * t` for monomials with `d | m`.
fn rewrite(m: &[BigInt], d: &[BigInt], t: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .zip(d)
        .zip(t)
        .map(|((mi, di), ti)| mi - di + ti)
        .collect()
}

/// Fully reduces a binomial modulo the basis; returns `None` when it reduces
/// to zero. Each rewrite replaces a monomial by a strictly smaller one, so
/// the loop terminates.
fn reduce(
    mut lead: Vec<BigInt>,
    mut trail: Vec<BigInt>,
    basis: &[Binomial],
    order: &MonomialOrder,
) -> Option<Binomial> {
    'outer: loop {
        if lead == trail {
            return None;
        }
        if order.cmp_mono(&lead, &trail) == Ordering::Less {
            std::mem::swap(&mut lead, &mut trail);
        }
        for g in basis {
            if divides(&g.lead, &lead) {
                lead = rewrite(&lead, &g.lead, &g.trail);
                continue 'outer;
            }
        }
        // Lead is irreducible; normalize the trail too.
        for g in basis {
            if divides(&g.lead, &trail) {
                trail = rewrite(&trail, &g.lead, &g.trail);
                continue 'outer;
            }
        }
        return Binomial::oriented(lead, trail, order);
    }
}

/// Buchberger with the coprimality criterion, followed by inter-reduction.
/// Returns the reduced Gröbner basis, which is canonical for the order.
/// Pairs are processed in normal selection order (smallest weighted lcm
/// first) through a heap of precomputed keys.
pub(crate) fn buchberger(gens: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    // Min-heap key: (weighted lcm degree, lcm, generator indices).
    type PairKey = Reverse<(BigInt, Vec<BigInt>, usize, usize)>;

    let mut basis: Vec<Binomial> = Vec::new();
    for g in gens {
        if let Some(r) = reduce(g.lead, g.trail, &basis, order) {
            basis.push(r);
        }
    }
    let mut pairs: BinaryHeap<PairKey> = BinaryHeap::new();
    let push_pair = |pairs: &mut BinaryHeap<_>, basis: &[Binomial], i: usize, j: usize| {
        if coprime(&basis[i].lead, &basis[j].lead) {
            return; // first Buchberger criterion
        }
        let l = lcm_mono(&basis[i].lead, &basis[j].lead);
        pairs.push(Reverse((order.weight_of(&l), l, i, j)));
    };
    for i in 0..basis.len() {
        for j in 0..i {
            push_pair(&mut pairs, &basis, j, i);
        }
    }
    while let Some(Reverse((_, _, i, j))) = pairs.pop() {
        let m = lcm_mono(&basis[i].lead, &basis[j].lead);
        let s1 = rewrite(&m, &basis[i].lead, &basis[i].trail);
        let s2 = rewrite(&m, &basis[j].lead, &basis[j].trail);
        if let Some(r) = reduce(s1, s2, &basis, order) {
            basis.push(r);
            for k in 0..basis.len() - 1 {
                push_pair(&mut pairs, &basis, k, basis.len() - 1);
            }
        }
    }
    interreduce(basis, order)
}

fn interreduce(basis: Vec<Binomial>, order: &MonomialOrder) -> Vec<Binomial> {
    // Drop elements whose lead is divisible by another lead, then tail-reduce.
    let mut kept: Vec<Binomial> = Vec::new();
    'next: for (i, g) in basis.iter().enumerate() {
        for (j, h) in basis.iter().enumerate() {
            if i != j && divides(&h.lead, &g.lead) && (g.lead != h.lead || j < i) {
                continue 'next;
            }
        }
        kept.push(g.clone());
    }
    let snapshot = kept.clone();
    let mut out = Vec::with_capacity(kept.len());
    for (i, g) in kept.into_iter().enumerate() {
        let others: Vec<Binomial> = snapshot
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        if let Some(r) = reduce(g.lead, g.trail, &others, order) {
            out.push(r);
        }
    }
    out.sort_by(|a, b| {
        order
            .cmp_mono(&a.lead, &b.lead)
            .then_with(|| a.trail.cmp(&b.trail))
    });
    out
}

/// Divides the maximal power of `var` out of both monomials of each element.
/// For a grevlex basis with `var` cheapest this yields a basis of the
/// saturation of the ideal by that variable.
pub(crate) fn divide_out_variable(basis: &mut [Binomial], var: usize) {
    for g in basis.iter_mut() {
        let e = g.lead[var].clone().min(g.trail[var].clone());
        if !e.is_zero() {
            g.lead[var] -= &e;
            g.trail[var] -= &e;
        }
    }
}

/// A Gröbner basis of a lattice ideal, exposed as oriented move vectors.
#[derive(Debug, Clone)]
pub struct BinomialGb {
    pub order: MonomialOrder,
    pub elements: Vec<MoveVector>,
}
