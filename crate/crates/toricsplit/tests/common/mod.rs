//! Independent oracles shared by the integration suites. Everything here is
//! deliberately implemented with different algorithms than the library
//! (Smith normal form instead of HNF transforms, grid/DP enumeration instead
//! of pruned DFS) so the two sides check each other.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use toricsplit::{Configuration, IntMatrix, PointednessCertificate};

/// Diagonal of the Smith normal form, computed by alternating row/column
/// gcd reduction. Used as the saturation oracle: a lattice is saturated in
/// Z^n exactly when all elementary divisors of a basis matrix are 1.
pub fn snf_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // Find a nonzero pivot in the remaining block.
        let mut pivot = None;
        'search: for r in t..rows {
            for c in t..cols {
                if !a[r][c].is_zero() {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for r in t + 1..rows {
                if !a[r][t].is_zero() {
                    let q = a[r][t].div_floor(&a[t][t]);
                    for c in t..cols {
                        let v = &a[r][c] - &q * &a[t][c];
                        a[r][c] = v;
                    }
                    if !a[r][t].is_zero() {
                        a.swap(t, r);
                        clean = false;
                    }
                }
            }
            for c in t + 1..cols {
                if !a[t][c].is_zero() {
                    let q = a[t][c].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = &row[c] - &q * &row[t];
                        row[c] = v;
                    }
                    if !a[t][c].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, c);
                        }
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        t += 1;
    }
    // Enforce the divisibility chain.
    let k = rows.min(cols);
    loop {
        let mut fixed = true;
        for i in 0..k.saturating_sub(1) {
            let (d1, d2) = (a[i][i].clone(), a[i + 1][i + 1].clone());
            if !d2.is_zero() && !(&d2 % &d1).is_zero() {
                let g = d1.gcd(&d2);
                let l = (&d1 * &d2) / &g;
                a[i][i] = g;
                a[i + 1][i + 1] = l;
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }
    (0..k)
        .map(|i| a[i][i].abs())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Full grid enumeration of a fiber, bounded per coordinate by the grading
/// certificate. No pruning: every lattice point of the box is tested.
pub fn box_fiber(cfg: &Configuration, b: &[BigInt]) -> Vec<Vec<BigInt>> {
    let PointednessCertificate::Pointed { w } = cfg.pointedness() else {
        panic!("box oracle needs a pointed configuration");
    };
    let wb: num_rational::BigRational = w
        .iter()
        .zip(b)
        .map(|(wi, bi)| wi * num_rational::BigRational::from_integer(bi.clone()))
        .sum();
    let mut bounds = Vec::new();
    for c in 0..cfg.n() {
        let wa: num_rational::BigRational = w
            .iter()
            .zip(cfg.matrix().col_vec(c))
            .map(|(wi, ai)| wi * num_rational::BigRational::from_integer(ai))
            .sum();
        let bound = (&wb / &wa).floor().to_integer();
        bounds.push(if bound.is_negative() {
            BigInt::zero()
        } else {
            bound
        });
    }
    let mut out = Vec::new();
    let mut u = vec![BigInt::zero(); cfg.n()];
    grid_walk(cfg, b, &bounds, 0, &mut u, &mut out);
    out.sort();
    out
}

fn grid_walk(
    cfg: &Configuration,
    b: &[BigInt],
    bounds: &[BigInt],
    col: usize,
    u: &mut Vec<BigInt>,
    out: &mut Vec<Vec<BigInt>>,
) {
    if col == cfg.n() {
        if cfg.matrix().mul_vec(u).unwrap() == b {
            out.push(u.clone());
        }
        return;
    }
    let mut k = BigInt::zero();
    while k <= bounds[col] {
        u[col] = k.clone();
        grid_walk(cfg, b, bounds, col + 1, u, out);
        k += BigInt::one();
    }
    u[col] = BigInt::zero();
}

/// All fibers of a one-row configuration up to degree `max_b`, by dynamic
/// programming over the degree: each element is produced exactly once by
/// extending at or before its first supported coordinate.
pub fn scalar_fibers(gens: &[u64], max_b: u64) -> Vec<Vec<Vec<u32>>> {
    let n = gens.len();
    let mut fibers: Vec<Vec<Vec<u32>>> = vec![Vec::new(); (max_b + 1) as usize];
    fibers[0].push(vec![0u32; n]);
    for b in 1..=max_b {
        let mut level = Vec::new();
        for (i, &g) in gens.iter().enumerate() {
            if g > b {
                continue;
            }
            for u in &fibers[(b - g) as usize] {
                let first = u.iter().position(|&x| x > 0).unwrap_or(n);
                if i <= first {
                    let mut v = u.clone();
                    v[i] += 1;
                    level.push(v);
                }
            }
        }
        level.sort();
        fibers[b as usize] = level;
    }
    fibers
}

/// All fibers of an arbitrary pointed configuration whose grading value is
/// at most `weight_bound`, grouped by degree. Exhaustive recursion over the
/// exponents with the weight as the only budget.
pub fn bounded_fibers(cfg: &Configuration, weight_bound: u64) -> Vec<Vec<Vec<u32>>> {
    let degrees: Vec<u64> = cfg
        .variable_degrees()
        .iter()
        .map(|d| u64::try_from(d).expect("positive degree"))
        .collect();
    let mut by_degree: std::collections::BTreeMap<Vec<BigInt>, Vec<Vec<u32>>> =
        std::collections::BTreeMap::new();
    let mut u = vec![0u32; cfg.n()];
    fn rec(
        cfg: &Configuration,
        degrees: &[u64],
        col: usize,
        budget: u64,
        u: &mut Vec<u32>,
        out: &mut std::collections::BTreeMap<Vec<BigInt>, Vec<Vec<u32>>>,
    ) {
        if col == u.len() {
            let exps: Vec<BigInt> = u.iter().map(|&x| BigInt::from(x)).collect();
            let degree = cfg.degree_of(&exps).unwrap();
            out.entry(degree).or_default().push(u.clone());
            return;
        }
        let mut k = 0u32;
        loop {
            let used = degrees[col] * k as u64;
            if used > budget {
                break;
            }
            u[col] = k;
            rec(cfg, degrees, col + 1, budget - used, u, out);
            k += 1;
        }
        u[col] = 0;
    }
    rec(cfg, &degrees, 0, weight_bound, &mut u, &mut by_degree);
    let mut fibers: Vec<Vec<Vec<u32>>> = by_degree.into_values().collect();
    for f in &mut fibers {
        f.sort();
    }
    fibers
}

/// Support-intersection components of a list of exponent vectors, as index
/// groups. Independent of the library's union-find.
pub fn support_components(elements: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = elements.len();
    let mut comp: Vec<Option<usize>> = vec![None; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start].is_some() {
            continue;
        }
        let id = groups.len();
        let mut stack = vec![start];
        comp[start] = Some(id);
        let mut group = vec![start];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if comp[y].is_none()
                    && elements[x]
                        .iter()
                        .zip(&elements[y])
                        .any(|(&a, &b)| a > 0 && b > 0)
                {
                    comp[y] = Some(id);
                    stack.push(y);
                    group.push(y);
                }
            }
        }
        group.sort();
        groups.push(group);
    }
    groups
}

/// Markov-basis style connectivity: in every fiber up to `max_b`, any two
/// elements must be linked by single applications of the given moves.
pub fn moves_connect_all_fibers(fibers: &[Vec<Vec<u32>>], moves: &[Vec<i64>]) -> bool {
    for fiber in fibers {
        if fiber.len() <= 1 {
            continue;
        }
        let index: std::collections::BTreeMap<&Vec<u32>, usize> =
            fiber.iter().enumerate().map(|(i, u)| (u, i)).collect();
        let mut parent: Vec<usize> = (0..fiber.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for (i, u) in fiber.iter().enumerate() {
            for mv in moves {
                let mut ok = true;
                let mut v = Vec::with_capacity(u.len());
                for (x, d) in u.iter().zip(mv) {
                    let y = *x as i64 + d;
                    if y < 0 {
                        ok = false;
                        break;
                    }
                    v.push(y as u32);
                }
                if !ok {
                    continue;
                }
                if let Some(&j) = index.get(&v) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
            }
        }
        let root = find(&mut parent, 0);
        if !(0..fiber.len()).all(|i| find(&mut parent, i) == root) {
            return false;
        }
    }
    true
}

/// Fraction-free Gaussian elimination (Bareiss) rank over the integers;
/// cross-checks the rational echelon rank used by the library.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    let mut col = 0usize;
    while rank < nrows && col < ncols {
        let Some(pivot_row) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        a.swap(rank, pivot_row);
        let pivot = a[rank][col].clone();
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&pivot * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

pub fn to_i64_vec(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| i64::try_from(x).expect("test values fit in i64"))
        .collect()
}

pub fn vi(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
