//! Exact reduced integral homology of a complex via Smith normal form.
//!
//! Boundary matrices are set up over the augmented (reduced) chain complex,
//! so degree -1 is bookkept uniformly: the empty complex `{∅}` has a single
//! generator in degree -1 and nothing else.
//!
//! The normal-form pipeline eliminates unit pivots on a sparse
//! representation first; whatever survives goes through a dense
//! arbitrary-precision Smith normal form. An i64 overflow during sparse
//! elimination aborts that phase and hands the residual block to the dense
//! stage, so exactness never depends on fixed-width arithmetic.

use crate::complex::{Complex, TopologyError};
use crate::config::Budgets;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

/// Reduced Betti numbers and torsion summands per degree. Only nonzero
/// entries are stored; torsion orders are prime powers, sorted.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct HomologySignature {
    pub betti: BTreeMap<i32, u64>,
    pub torsion: BTreeMap<i32, Vec<u64>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub is_void: bool,
}

/// Homology connectivity: one less than the smallest degree carrying
/// reduced homology, or infinite for an acyclic signature.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Connectivity {
    Finite(i32),
    Infinite,
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Finite(c) => write!(f, "{c}"),
            Connectivity::Infinite => write!(f, "inf"),
        }
    }
}

impl HomologySignature {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn void() -> Self {
        HomologySignature {
            is_void: true,
            ..Self::default()
        }
    }

    pub fn sphere(d: i32) -> Self {
        Self::from_betti(&[(d, 1)])
    }

    pub fn from_betti(pairs: &[(i32, u64)]) -> Self {
        let mut sig = Self::default();
        for &(d, b) in pairs {
            if b > 0 {
                *sig.betti.entry(d).or_insert(0) += b;
            }
        }
        sig
    }

    pub fn is_zero(&self) -> bool {
        self.betti.is_empty() && self.torsion.is_empty() && !self.is_void
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Degreewise sum; torsion lists are merged and re-sorted.
    pub fn add(&self, other: &HomologySignature) -> HomologySignature {
        let mut out = self.clone();
        for (&d, &b) in &other.betti {
            *out.betti.entry(d).or_insert(0) += b;
        }
        for (&d, ts) in &other.torsion {
            let entry = out.torsion.entry(d).or_default();
            entry.extend(ts.iter().copied());
            entry.sort_unstable();
        }
        out.is_void = self.is_void && other.is_void;
        out
    }

    /// Suspension shift: every degree moves up by `k`.
    pub fn shift(&self, k: u32) -> HomologySignature {
        let k = k as i32;
        HomologySignature {
            betti: self.betti.iter().map(|(&d, &b)| (d + k, b)).collect(),
            torsion: self
                .torsion
                .iter()
                .map(|(&d, t)| (d + k, t.clone()))
                .collect(),
            is_void: self.is_void,
        }
    }

    pub fn min_nonzero_degree(&self) -> Option<i32> {
        let b = self.betti.keys().next().copied();
        let t = self.torsion.keys().next().copied();
        match (b, t) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }

    pub fn connectivity(&self) -> Connectivity {
        match self.min_nonzero_degree() {
            Some(d) => Connectivity::Finite(d - 1),
            None => Connectivity::Infinite,
        }
    }

    /// Compact rendering like `{1:2, 3:1}`, with `+T` marking torsion.
    pub fn render(&self) -> String {
        if self.is_void {
            return "void".into();
        }
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = self.betti.iter().map(|(d, b)| format!("{d}:{b}")).collect();
        for (d, ts) in &self.torsion {
            let t: Vec<String> = ts.iter().map(|x| format!("Z/{x}")).collect();
            parts.push(format!("{d}:[{}]", t.join(",")));
        }
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for HomologySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

// ---- boundary matrices ------------------------------------------------------

/// Boundary matrix of `∂_d` as triplets; rows are (d-1)-faces (the single
/// empty face for d = 0), columns are d-faces, sign `(-1)^position`.
pub fn boundary_entries(k: &Complex, d: usize) -> (usize, usize, Vec<(u32, u32, i64)>) {
    let cols = k.faces_of_dim(d);
    let rows = if d == 0 {
        1
    } else {
        k.faces_of_dim(d - 1).len()
    };
    let lower = if d == 0 {
        &[][..]
    } else {
        k.faces_of_dim(d - 1)
    };
    let mut entries = Vec::with_capacity(cols.len() * (d + 1));
    for (j, face) in cols.iter().enumerate() {
        for p in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(p);
            let i = if d == 0 {
                0
            } else {
                lower
                    .binary_search(&sub)
                    .expect("complex not downward closed")
            };
            let sign = if p % 2 == 0 { 1 } else { -1 };
            entries.push((i as u32, j as u32, sign));
        }
    }
    (rows, cols.len(), entries)
}

/// Face-level check that the composite of consecutive boundary maps is zero.
pub fn boundary_squared_is_zero(k: &Complex) -> bool {
    let top = match k.dim() {
        None => return true,
        Some(d) => d,
    };
    for d in 1..=top {
        for face in k.faces_of_dim(d) {
            let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
            for p in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(p);
                let s1 = if p % 2 == 0 { 1 } else { -1 };
                for q in 0..sub.len() {
                    let mut sub2 = sub.clone();
                    sub2.remove(q);
                    let s2 = if q % 2 == 0 { 1 } else { -1 };
                    *acc.entry(sub2).or_insert(0) += s1 * s2;
                }
            }
            if acc.values().any(|&v| v != 0) {
                return false;
            }
        }
    }
    true
}

// ---- Smith normal form ------------------------------------------------------

/// Rank and nontrivial invariant factors (absolute values > 1) of an
/// integer matrix given as triplets.
pub fn rank_and_invariant_factors(
    nrows: usize,
    ncols: usize,
    entries: &[(u32, u32, i64)],
) -> Result<(usize, Vec<u64>), TopologyError> {
    let mut m = SparseMat::new(nrows, ncols, entries);
    let mut rank = m.eliminate_unit_pivots();
    let residual = m.residual_bigint();
    if !residual.is_empty() {
        let diag = dense_snf(residual);
        let mut factors = Vec::new();
        for d in diag {
            rank += 1;
            let a = d.abs();
            if a > BigInt::from(1) {
                let v: u64 = (&a)
                    .try_into()
                    .map_err(|_| TopologyError::TorsionOverflow)?;
                factors.push(v);
            }
        }
        factors.sort_unstable();
        return Ok((rank, factors));
    }
    Ok((rank, Vec::new()))
}

struct SparseMat {
    rows: Vec<HashMap<u32, i64>>,
    col_rows: Vec<HashSet<u32>>,
    live_row: Vec<bool>,
    live_col: Vec<bool>,
    overflowed: bool,
}

impl SparseMat {
    fn new(nrows: usize, ncols: usize, entries: &[(u32, u32, i64)]) -> Self {
        let mut rows: Vec<HashMap<u32, i64>> = vec![HashMap::new(); nrows];
        let mut col_rows: Vec<HashSet<u32>> = vec![HashSet::new(); ncols];
        for &(i, j, v) in entries {
            if v == 0 {
                continue;
            }
            let e = rows[i as usize].entry(j).or_insert(0);
            *e += v;
            if *e == 0 {
                rows[i as usize].remove(&j);
                col_rows[j as usize].remove(&i);
            } else {
                col_rows[j as usize].insert(i);
            }
        }
        SparseMat {
            rows,
            col_rows,
            live_row: vec![true; nrows],
            live_col: vec![true; ncols],
            overflowed: false,
        }
    }

    /// Picks a unit entry from the shortest live row (then least-filled
    /// column), clears its column by row operations, and retires the pivot
    /// row and column. The retired pivot contributes invariant factor 1.
    fn eliminate_unit_pivots(&mut self) -> usize {
        let mut rank = 0;
        loop {
            let mut pick: Option<(usize, u32, i64, usize)> = None; // row, col, val, score
            for (ri, row) in self.rows.iter().enumerate() {
                if !self.live_row[ri] || row.is_empty() {
                    continue;
                }
                let row_len = row.len();
                for (&c, &v) in row {
                    if v == 1 || v == -1 {
                        let score = (row_len - 1) * (self.col_rows[c as usize].len() - 1);
                        let better = match pick {
                            None => true,
                            Some((_, _, _, s)) => score < s,
                        };
                        if better {
                            pick = Some((ri, c, v, score));
                            if score == 0 {
                                break;
                            }
                        }
                    }
                }
                if matches!(pick, Some((_, _, _, 0))) {
                    break;
                }
            }
            let Some((pr, pc, pv, _)) = pick else { break };
            let pivot_row: Vec<(u32, i64)> = self.rows[pr].iter().map(|(&c, &v)| (c, v)).collect();
            let touched: Vec<u32> = self.col_rows[pc as usize]
                .iter()
                .copied()
                .filter(|&ri| ri as usize != pr)
                .collect();
            for ri in touched {
                if !self.apply_row_op(ri as usize, pc, pv, &pivot_row) {
                    self.overflowed = true;
                    return rank; // residual goes to the dense stage
                }
            }
            for (c, _) in &pivot_row {
                self.col_rows[*c as usize].remove(&(pr as u32));
            }
            self.rows[pr].clear();
            self.live_row[pr] = false;
            self.live_col[pc as usize] = false;
            rank += 1;
        }
        rank
    }

    /// row_ri -= (a * pv) * pivot_row, where a is the entry of row_ri in the
    /// pivot column and pv = ±1. Returns false (leaving the row unchanged)
    /// if i64 arithmetic would overflow.
    fn apply_row_op(&mut self, ri: usize, pc: u32, pv: i64, pivot_row: &[(u32, i64)]) -> bool {
        let a = *self.rows[ri].get(&pc).expect("column index out of sync");
        let factor = match a.checked_mul(pv) {
            Some(f) => f,
            None => return false,
        };
        let mut updates: Vec<(u32, i64)> = Vec::with_capacity(pivot_row.len());
        for &(c, v) in pivot_row {
            let old = self.rows[ri].get(&c).copied().unwrap_or(0);
            let delta = match factor.checked_mul(v) {
                Some(d) => d,
                None => return false,
            };
            let new = match old.checked_sub(delta) {
                Some(n) => n,
                None => return false,
            };
            updates.push((c, new));
        }
        for (c, new) in updates {
            if new == 0 {
                self.rows[ri].remove(&c);
                self.col_rows[c as usize].remove(&(ri as u32));
            } else {
                self.rows[ri].insert(c, new);
                self.col_rows[c as usize].insert(ri as u32);
            }
        }
        true
    }

    /// Remaining live entries as a dense arbitrary-precision block.
    fn residual_bigint(&self) -> Vec<Vec<BigInt>> {
        let rows: Vec<usize> = (0..self.rows.len())
            .filter(|&i| self.live_row[i] && !self.rows[i].is_empty())
            .collect();
        if rows.is_empty() {
            return Vec::new();
        }
        let mut cols: Vec<u32> = rows
            .iter()
            .flat_map(|&i| self.rows[i].keys().copied())
            .collect();
        cols.sort_unstable();
        cols.dedup();
        let col_pos: HashMap<u32, usize> = cols.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        rows.iter()
            .map(|&i| {
                let mut row = vec![BigInt::zero(); cols.len()];
                for (&c, &v) in &self.rows[i] {
                    row[col_pos[&c]] = BigInt::from(v);
                }
                row
            })
            .collect()
    }
}

/// Dense Smith normal form over the integers; returns the nonzero diagonal
/// in divisibility order.
#[allow(clippy::needless_range_loop)]
pub fn dense_snf(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut t = 0;
    'outer: while t < nrows.min(ncols) {
        // smallest nonzero entry of the trailing submatrix into (t, t)
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        if m[t][t].is_negative() {
            for j in t..ncols {
                m[t][j] = -m[t][j].clone();
            }
        }
        // reduce column and row by the pivot; any nonzero remainder becomes
        // a strictly smaller pivot candidate on the next pass
        let mut clean = true;
        for i in t + 1..nrows {
            if !m[i][t].is_zero() {
                let q = m[i][t].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for j in t..ncols {
                        let s = &m[t][j] * &q;
                        m[i][j] -= s;
                    }
                }
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..ncols {
            if !m[t][j].is_zero() {
                let q = m[t][j].div_floor(&m[t][t]);
                if !q.is_zero() {
                    for i in t..nrows {
                        let s = &m[i][t] * &q;
                        m[i][j] -= s;
                    }
                }
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold in any entry the pivot does not divide
        for i in t + 1..nrows {
            for j in t + 1..ncols {
                if !(&m[i][j] % &m[t][t]).is_zero() {
                    for jj in t..ncols {
                        let add = m[i][jj].clone();
                        m[t][jj] += add;
                    }
                    continue 'outer;
                }
            }
        }
        t += 1;
    }
    (0..t).map(|i| m[i][i].clone()).collect()
}

fn prime_power_parts(mut d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p) {
            let mut q = 1;
            while d.is_multiple_of(p) {
                q *= p;
                d /= p;
            }
            out.push(q);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if d > 1 {
        out.push(d);
    }
    out.sort_unstable();
    out
}

// ---- reduced homology -------------------------------------------------------

/// Exact reduced integral homology of a complex.
pub fn reduced_homology(
    k: &Complex,
    budgets: &Budgets,
) -> Result<HomologySignature, TopologyError> {
    if k.is_void() {
        return Ok(HomologySignature::void());
    }
    let fv = k.f_vector();
    let total_entries: usize = fv.iter().enumerate().map(|(d, n)| n * (d + 1)).sum();
    if total_entries > budgets.max_matrix_entries {
        return Err(TopologyError::MatrixBudgetExceeded(
            budgets.max_matrix_entries,
        ));
    }
    debug_assert!(boundary_squared_is_zero(k));
    let top = fv.len(); // boundary maps ∂_0 .. ∂_{top-1}
    let per_dim: Result<Vec<(usize, Vec<u64>)>, TopologyError> = (0..top)
        .into_par_iter()
        .map(|d| {
            let (r, c, entries) = boundary_entries(k, d);
            rank_and_invariant_factors(r, c, &entries)
        })
        .collect();
    let per_dim = per_dim?;
    let n_faces = |d: i32| -> u64 {
        if d == -1 {
            1
        } else {
            fv.get(d as usize).copied().unwrap_or(0) as u64
        }
    };
    let rank = |d: i32| -> u64 {
        if d < 0 || d as usize >= top {
            0
        } else {
            per_dim[d as usize].0 as u64
        }
    };
    let mut sig = HomologySignature::zero();
    for d in -1..top as i32 {
        let b = n_faces(d) - rank(d) - rank(d + 1);
        if b > 0 {
            sig.betti.insert(d, b);
        }
        if (d + 1) >= 0 && ((d + 1) as usize) < top {
            let factors = &per_dim[(d + 1) as usize].1;
            if !factors.is_empty() {
                let mut parts: Vec<u64> =
                    factors.iter().flat_map(|&f| prime_power_parts(f)).collect();
                parts.sort_unstable();
                sig.torsion.insert(d, parts);
            }
        }
    }
    Ok(sig)
}

/// Reduced homology of the independence complex of a graph.
pub fn ind_homology(
    g: &crate::graph::Graph,
    budgets: &Budgets,
) -> Result<HomologySignature, TopologyError> {
    reduced_homology(&Complex::independence(g, budgets)?, budgets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;

    fn sig(g: &graph::Graph) -> HomologySignature {
        ind_homology(g, &Budgets::default()).unwrap()
    }

    fn betti(pairs: &[(i32, u64)]) -> HomologySignature {
        HomologySignature::from_betti(pairs)
    }

    #[test]
    fn cycles_and_paths() {
        assert_eq!(sig(&graph::cycle(3)), betti(&[(0, 2)]));
        assert_eq!(sig(&graph::cycle(4)), betti(&[(0, 1)]));
        assert_eq!(sig(&graph::cycle(5)), betti(&[(1, 1)]));
        assert_eq!(sig(&graph::cycle(6)), betti(&[(1, 2)]));
        assert_eq!(sig(&graph::cycle(9)), betti(&[(2, 2)]));
        assert_eq!(sig(&graph::cycle(12)), betti(&[(3, 2)]));
        assert_eq!(sig(&graph::path(4)), HomologySignature::zero());
        assert_eq!(sig(&graph::path(5)), betti(&[(1, 1)]));
        assert_eq!(sig(&graph::path_power(7, 2)), betti(&[(1, 3)]));
        assert_eq!(sig(&graph::path_power(10, 2)), betti(&[(1, 1), (2, 1)]));
        assert_eq!(sig(&graph::cycle_power(14, 2)), betti(&[(2, 13)]));
        assert_eq!(
            sig(&graph::cycle(6).add_edge(0, 3).unwrap()),
            betti(&[(1, 1)])
        );
    }

    #[test]
    fn degenerate_complexes() {
        assert_eq!(sig(&graph::Graph::new(0)), betti(&[(-1, 1)]));
        assert_eq!(sig(&graph::Graph::new(1)), HomologySignature::zero());
        assert_eq!(sig(&graph::complete(2)), betti(&[(0, 1)]));
        assert_eq!(
            reduced_homology(&Complex::void(), &Budgets::default()).unwrap(),
            HomologySignature::void()
        );
    }

    #[test]
    fn projective_plane_torsion() {
        // minimal 6-vertex triangulation of the real projective plane
        let triangles: Vec<Vec<u32>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 1, 5],
            vec![1, 2, 4],
            vec![2, 4, 5],
            vec![2, 3, 5],
            vec![1, 3, 5],
            vec![1, 3, 4],
        ];
        let k = Complex::from_maximal_faces((0..6).collect(), &triangles);
        assert_eq!(k.f_vector(), vec![6, 15, 10]);
        let h = reduced_homology(&k, &Budgets::default()).unwrap();
        assert!(h.betti.is_empty(), "betti = {:?}", h.betti);
        assert_eq!(h.torsion.get(&1), Some(&vec![2]));
    }

    #[test]
    fn boundary_square_zero() {
        for g in [
            graph::cycle(7),
            graph::cycle_power(9, 2),
            graph::cylinder(2, 5),
        ] {
            let k = Complex::independence(&g, &Budgets::default()).unwrap();
            assert!(boundary_squared_is_zero(&k));
        }
    }

    #[test]
    fn euler_consistency() {
        for g in [
            graph::cycle(8),
            graph::path_power(9, 2),
            graph::cycle_power(11, 3),
            graph::cylinder(2, 5),
            graph::Graph::new(0),
        ] {
            let k = Complex::independence(&g, &Budgets::default()).unwrap();
            let h = reduced_homology(&k, &Budgets::default()).unwrap();
            let chi: i64 = h
                .betti
                .iter()
                .map(|(&d, &b)| {
                    if d.rem_euclid(2) == 0 {
                        b as i64
                    } else {
                        -(b as i64)
                    }
                })
                .sum();
            assert_eq!(chi, k.reduced_euler_characteristic());
        }
    }

    /// Fraction-free Gaussian elimination rank over the rationals, as an
    /// independent check of the normal-form rank.
    fn bareiss_rank(nrows: usize, ncols: usize, entries: &[(u32, u32, i64)]) -> usize {
        let mut m = vec![vec![0i128; ncols]; nrows];
        for &(i, j, v) in entries {
            m[i as usize][j as usize] += v as i128;
        }
        let mut rank = 0;
        let mut prev: i128 = 1;
        for col in 0..ncols {
            let piv = (rank..nrows).find(|&i| m[i][col] != 0);
            let Some(piv) = piv else { continue };
            m.swap(rank, piv);
            for i in 0..nrows {
                if i == rank {
                    continue;
                }
                for j in 0..ncols {
                    if j == col {
                        continue;
                    }
                    m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
                }
                m[i][col] = 0;
            }
            prev = m[rank][col];
            rank += 1;
            if rank == nrows {
                break;
            }
        }
        rank
    }

    #[test]
    fn snf_rank_matches_rational_rank() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let nrows = rng.gen_range(1..8);
            let ncols = rng.gen_range(1..8);
            let mut entries = Vec::new();
            for i in 0..nrows {
                for j in 0..ncols {
                    if rng.gen_bool(0.5) {
                        entries.push((i as u32, j as u32, rng.gen_range(-4i64..=4)));
                    }
                }
            }
            let (rank, _) = rank_and_invariant_factors(nrows, ncols, &entries).unwrap();
            assert_eq!(rank, bareiss_rank(nrows, ncols, &entries));
        }
    }

    #[test]
    fn dense_snf_invariant_factors() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(4), BigInt::from(4)],
            vec![BigInt::from(-6), BigInt::from(6), BigInt::from(12)],
            vec![BigInt::from(10), BigInt::from(4), BigInt::from(16)],
        ];
        let d = dense_snf(m);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
        // divisibility chain holds by construction
        assert!((&d[1] % &d[0]).is_zero());
        assert!((&d[2] % &d[1]).is_zero());
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_parts(6), vec![2, 3]);
        assert_eq!(prime_power_parts(12), vec![3, 4]);
        assert_eq!(prime_power_parts(7), vec![7]);
    }

    #[test]
    fn sparse_overflow_escalates_to_bigint() {
        // the only unit pivot is the -1; clearing its column multiplies
        // i64::MIN by -1, which overflows, so the whole block must reach
        // the dense stage untouched. Its Smith form is diag(1, 2).
        let entries = [(0, 0, -1), (1, 0, i64::MIN), (1, 1, 2)];
        let (rank, factors) = rank_and_invariant_factors(2, 2, &entries).unwrap();
        assert_eq!(rank, 2);
        assert_eq!(factors, vec![2]);
    }

    #[test]
    fn torsion_beyond_u64_is_an_error() {
        // elimination would square 2^40; the dense stage computes the
        // exact invariant factor 2^80 - 2, which does not fit in u64
        let a = 1i64 << 40;
        let entries = [(0, 0, 1), (0, 1, a), (1, 0, a), (1, 1, 2)];
        assert_eq!(
            rank_and_invariant_factors(2, 2, &entries),
            Err(TopologyError::TorsionOverflow)
        );
    }

    #[test]
    fn signature_arithmetic() {
        let s = betti(&[(-1, 1)]);
        assert_eq!(s.shift(1), betti(&[(0, 1)]));
        assert_eq!(betti(&[(1, 2)]).shift(2), betti(&[(3, 2)]));
        assert_eq!(
            HomologySignature::zero().shift(5),
            HomologySignature::zero()
        );

        assert_eq!(betti(&[(0, 1)]).connectivity(), Connectivity::Finite(-1));
        assert_eq!(betti(&[(1, 1)]).connectivity(), Connectivity::Finite(0));
        assert_eq!(
            HomologySignature::zero().connectivity(),
            Connectivity::Infinite
        );
        assert_eq!(betti(&[(-1, 1)]).connectivity(), Connectivity::Finite(-2));

        let json = serde_json::to_string(&betti(&[(1, 1)])).unwrap();
        assert_eq!(json, r#"{"betti":{"1":1},"torsion":{}}"#);
        let mut with_torsion = betti(&[(2, 1)]);
        with_torsion.torsion.insert(1, vec![2, 4]);
        let round: HomologySignature =
            serde_json::from_str(&serde_json::to_string(&with_torsion).unwrap()).unwrap();
        assert_eq!(round, with_torsion);
    }

    #[test]
    fn join_is_suspension_by_an_edge() {
        let budgets = Budgets::default();
        let k2 = Complex::independence(&graph::complete(2), &budgets).unwrap();
        for g in [graph::cycle(5), graph::path(4), graph::cycle(6)] {
            let k = Complex::independence(&g, &budgets).unwrap();
            let joined = k2.join(&k, &budgets).unwrap();
            assert_eq!(
                reduced_homology(&joined, &budgets).unwrap(),
                reduced_homology(&k, &budgets).unwrap().shift(1)
            );
        }
        // join(Ind(K_2), Ind(C_5)) is a 2-sphere
        let c5 = Complex::independence(&graph::cycle(5), &budgets).unwrap();
        assert_eq!(
            reduced_homology(&k2.join(&c5, &budgets).unwrap(), &budgets).unwrap(),
            betti(&[(2, 1)])
        );
    }

    #[test]
    fn disjoint_union_matches_join() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let budgets = Budgets::default();
        for _ in 0..10 {
            let n1 = rng.gen_range(1..5);
            let n2 = rng.gen_range(1..5);
            let mut g1 = graph::Graph::new(n1);
            let mut g2 = graph::Graph::new(n2);
            for (g, n) in [(&mut g1, n1), (&mut g2, n2)] {
                for u in 0..n as u32 {
                    for v in u + 1..n as u32 {
                        if rng.gen_bool(0.4) {
                            *g = g.add_edge(u, v).unwrap();
                        }
                    }
                }
            }
            let (union, _) = g1.disjoint_union(&g2);
            let ka = Complex::independence(&g1, &budgets).unwrap();
            let kb = Complex::independence(&g2, &budgets).unwrap();
            assert_eq!(
                sig(&union),
                reduced_homology(&ka.join(&kb, &budgets).unwrap(), &budgets).unwrap()
            );
        }
    }
}
