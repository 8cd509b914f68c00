//! Characteristic vectors of unimodular forms and exact minimization of
//! `|w^2|` over the characteristic coset.
//!
//! For a unimodular Gram matrix `G`, the characteristic elements are the
//! solutions of `w.v = v.v (mod 2)`; in coordinates they form the coset
//! `base + 2Z^n` where `base` is the unique mod-2 solution of
//! `G x = diag(G)`. On a definite form the minimum of `|w^T G w|` over the
//! coset is found by Fincke-Pohst branch and bound on `|G|` with an exact
//! rational Cholesky decomposition: no floating point, so the reported
//! minimum and witness are exact and deterministic (ties are broken by
//! taking the lexicographically smallest coordinate vector).
//!
//! By a theorem of Elkies, a definite unimodular lattice of rank `n` is
//! isomorphic to the diagonal form iff the minimum is `>= n` (in which case
//! it equals `n`). An independent check, [`split_units_is_standard`], decides
//! the same question by repeatedly splitting off norm `+-1` vectors.

use crate::lattice::{Definiteness, GramLattice};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharVecError {
    #[error("form is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("form is not definite; characteristic minimization is unbounded")]
    NotDefinite,
    #[error("rank {rank} exceeds the enumeration cap {cap}")]
    RankCapExceeded { rank: usize, cap: usize },
    #[error("brute-force box of {points} points exceeds the cap {cap}")]
    BoxTooLarge { points: u128, cap: u128 },
}

/// Default cap on the rank of forms fed to branch-and-bound enumeration.
/// The search is exponential in the worst case; this covers direct sums of
/// up to three E8 blocks with room to spare. Override per call or via the
/// CLI / `FORMGATE_RANK_CAP`.
pub const DEFAULT_RANK_CAP: usize = 24;

/// Default cap on the number of points a brute-force box scan may visit.
pub const DEFAULT_BOX_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub rank_cap: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            rank_cap: DEFAULT_RANK_CAP,
        }
    }
}

/// The mod-2 coset of characteristic vectors of a unimodular form:
/// all of `base + 2Z^n` in coordinates.
#[derive(Debug, Clone)]
pub struct CharacteristicCoset<'a> {
    lattice: &'a GramLattice,
    base: Vec<u8>,
}

impl<'a> CharacteristicCoset<'a> {
    pub fn lattice(&self) -> &'a GramLattice {
        self.lattice
    }

    /// Coordinates of the base point, each 0 or 1.
    pub fn base(&self) -> &[u8] {
        &self.base
    }

    pub fn base_vector(&self) -> Vec<BigInt> {
        self.base.iter().map(|&b| BigInt::from(b)).collect()
    }

    /// Membership test: `v` is characteristic iff `v = base (mod 2)`.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        v.len() == self.base.len()
            && v.iter()
                .zip(&self.base)
                .all(|(x, &b)| (x - BigInt::from(b)).is_even())
    }
}

/// Result of a characteristic-norm minimization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharMinResult {
    /// `min |w^T G w|` over the characteristic coset.
    pub min_abs_norm: BigInt,
    /// A characteristic vector realizing the minimum; the lexicographically
    /// smallest one, so results are reproducible.
    pub witness: Vec<BigInt>,
    /// Number of search-tree nodes visited.
    pub node_count: u64,
}

/// Solve `G x = diag(G) (mod 2)`. The solution exists and is unique mod 2
/// exactly when `det G` is odd, which holds for every unimodular form.
pub fn characteristic_coset(l: &GramLattice) -> Result<CharacteristicCoset<'_>, CharVecError> {
    let n = l.rank();
    // augmented GF(2) system
    let mut m: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut row: Vec<u8> = (0..n)
                .map(|j| if l.entry(i, j).is_even() { 0 } else { 1 })
                .collect();
            row.push(if l.entry(i, i).is_even() { 0 } else { 1 });
            row
        })
        .collect();
    let mut row = 0usize;
    for col in 0..n {
        let Some(sel) = (row..n).find(|&r| m[r][col] == 1) else {
            // singular mod 2 <=> det even
            return Err(CharVecError::NotUnimodular {
                det: l.determinant(),
            });
        };
        m.swap(row, sel);
        for r in 0..n {
            if r != row && m[r][col] == 1 {
                for k in col..=n {
                    m[r][k] ^= m[row][k];
                }
            }
        }
        row += 1;
    }
    let base = (0..n).map(|i| m[i][n]).collect();
    Ok(CharacteristicCoset { lattice: l, base })
}

/// `|G|` as a positive-definite integer matrix, or the reason it cannot be.
fn positive_gram(l: &GramLattice) -> Result<Vec<Vec<BigInt>>, CharVecError> {
    let inv = l.validate();
    if !inv.is_unimodular() {
        return Err(CharVecError::NotUnimodular {
            det: inv.determinant,
        });
    }
    match inv.definiteness {
        Definiteness::Positive => Ok(l.rows()),
        Definiteness::Negative => Ok(l.negate().rows()),
        _ => Err(CharVecError::NotDefinite),
    }
}

/// Greedy pivot order: repeatedly take the coordinate whose current Schur
/// diagonal is smallest. Eliminating small pivots early leaves the large
/// ones at the top of the search tree, which keeps the branch-and-bound
/// fan-out narrow even on skewed bases. Runs on its own symmetric copy; a
/// non-positive diagonal just stops the refinement (the decomposition proper
/// rejects such inputs).
fn greedy_pivot_order(a: &[Vec<BigInt>]) -> Vec<usize> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(pos) = remaining
        .iter()
        .enumerate()
        .min_by(|(_, &x), (_, &y)| m[x][x].cmp(&m[y][y]))
        .map(|(pos, _)| pos)
    {
        let r = remaining.remove(pos);
        order.push(r);
        if !m[r][r].is_positive() {
            order.extend(remaining.iter().copied());
            return order;
        }
        // Schur complement on the remaining block; row/column r are never
        // read again, and the block stays symmetric because m[i][r] = m[r][i]
        let piv = m[r][r].clone();
        for &i in &remaining {
            if m[i][r].is_zero() {
                continue;
            }
            let f = &m[i][r] / &piv;
            for &j in &remaining {
                let v = &m[i][j] - &f * &m[r][j];
                m[i][j] = v;
            }
        }
    }
    order
}

/// Exact rational Cholesky-style decomposition for Fincke-Pohst:
/// `x^T A x = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2`, computed on
/// `P^T A P` for the greedy pivot permutation. Returns the decomposition
/// together with `perm` (`perm[i]` = original index of pivot `i`), or `None`
/// if `A` is not positive definite.
fn cholesky_q(a: &[Vec<BigInt>]) -> Option<(Vec<Vec<BigRational>>, Vec<usize>)> {
    let n = a.len();
    let perm = greedy_pivot_order(a);
    let mut q: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(a[perm[i]][perm[j]].clone()))
                .collect()
        })
        .collect();
    for i in 0..n {
        if !q[i][i].is_positive() {
            return None;
        }
        for j in (i + 1)..n {
            q[j][i] = q[i][j].clone();
            let v = &q[i][j] / &q[i][i];
            q[i][j] = v;
        }
        for k in (i + 1)..n {
            for l in k..n {
                let v = &q[k][l] - &q[k][i] * &q[i][l];
                q[k][l] = v;
            }
        }
    }
    Some((q, perm))
}

fn round_half_up(r: &BigRational) -> BigInt {
    (r + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

struct MinSearch<'a> {
    q: &'a [Vec<BigRational>],
    /// `perm[i]` = original coordinate of search level `i`.
    perm: &'a [usize],
    /// `Some(parities)`: enumerate the coset `parities + 2Z^n` (indexed by
    /// search level). `None`: enumerate all of `Z^n`.
    parity: Option<&'a [u8]>,
    exclude_zero: bool,
    best_norm: BigRational,
    /// Best witness, in *original* coordinates; ties resolve to the
    /// lexicographically smallest original-coordinate vector.
    best_vec: Vec<BigInt>,
    nodes: u64,
}

impl MinSearch<'_> {
    /// Choose `x[level]` given fixed `x[level+1..]`; `acc` is the cost of the
    /// fixed tail. Candidates fan out from the real minimizer in both
    /// directions; each arm has monotonically increasing cost, so it is cut
    /// as soon as the bound is exceeded.
    fn descend(&mut self, level: usize, x: &mut [BigInt], acc: &BigRational) {
        let qi = &self.q[level];
        let mut center = BigRational::zero();
        for (j, xj) in x.iter().enumerate().skip(level + 1) {
            if !xj.is_zero() {
                center += &qi[j] * BigRational::from_integer(xj.clone());
            }
        }
        let target = -center.clone();
        let (start, step) = match self.parity {
            Some(p) => {
                let par = BigInt::from(p[level]);
                let m = round_half_up(
                    &((&target - BigRational::from_integer(par.clone()))
                        / BigRational::from_integer(BigInt::from(2))),
                );
                (par + BigInt::from(2) * m, BigInt::from(2))
            }
            None => (round_half_up(&target), BigInt::one()),
        };

        for arm in [false, true] {
            let mut t = if arm { &start - &step } else { start.clone() };
            loop {
                let offset = BigRational::from_integer(t.clone()) + &center;
                let cost = &qi[level] * &offset * &offset;
                let total = acc + &cost;
                if total > self.best_norm {
                    break;
                }
                self.nodes += 1;
                x[level] = t.clone();
                if level == 0 {
                    self.offer(x, total);
                } else {
                    self.descend(level - 1, x, &total);
                }
                if arm {
                    t -= &step;
                } else {
                    t += &step;
                }
            }
        }
    }

    fn offer(&mut self, x: &[BigInt], total: BigRational) {
        if self.exclude_zero && x.iter().all(|v| v.is_zero()) {
            return;
        }
        let mut orig = vec![BigInt::zero(); x.len()];
        for (level, v) in x.iter().enumerate() {
            orig[self.perm[level]] = v.clone();
        }
        if total < self.best_norm || (total == self.best_norm && orig < self.best_vec) {
            self.best_norm = total;
            self.best_vec = orig;
        }
    }
}

/// Minimize `x^T A x` over `parities + 2Z^n` (or all of `Z^n`), starting from
/// a known member `init` (all in original coordinates). `A` must be positive
/// definite.
fn enumerate_min(
    a: &[Vec<BigInt>],
    parity: Option<&[u8]>,
    exclude_zero: bool,
    init: Vec<BigInt>,
) -> (BigInt, Vec<BigInt>, u64) {
    let n = a.len();
    debug_assert!(n > 0);
    let (q, perm) = cholesky_q(a).expect("definiteness must be validated by the caller");
    let init_norm = {
        let mut s = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                s += &init[i] * &a[i][j] * &init[j];
            }
        }
        s
    };
    let permuted_parity: Option<Vec<u8>> =
        parity.map(|p| perm.iter().map(|&orig| p[orig]).collect());
    let mut search = MinSearch {
        q: &q,
        perm: &perm,
        parity: permuted_parity.as_deref(),
        exclude_zero,
        best_norm: BigRational::from_integer(init_norm),
        best_vec: init,
        nodes: 0,
    };
    let mut x = vec![BigInt::zero(); n];
    search.descend(n - 1, &mut x, &BigRational::zero());
    debug_assert!(search.best_norm.is_integer());
    (
        search.best_norm.to_integer(),
        search.best_vec,
        search.nodes,
    )
}

/// Exact minimum of `|w^T G w|` over the characteristic coset of a definite
/// unimodular form, by Fincke-Pohst branch and bound.
pub fn min_characteristic_norm(l: &GramLattice) -> Result<CharMinResult, CharVecError> {
    min_characteristic_norm_with(l, &EnumOptions::default())
}

pub fn min_characteristic_norm_with(
    l: &GramLattice,
    opts: &EnumOptions,
) -> Result<CharMinResult, CharVecError> {
    let n = l.rank();
    let a = positive_gram(l)?;
    if n > opts.rank_cap {
        return Err(CharVecError::RankCapExceeded {
            rank: n,
            cap: opts.rank_cap,
        });
    }
    if n == 0 {
        return Ok(CharMinResult {
            min_abs_norm: BigInt::zero(),
            witness: Vec::new(),
            node_count: 0,
        });
    }
    let coset = characteristic_coset(l)?;
    let (min, witness, nodes) = enumerate_min(&a, Some(coset.base()), false, coset.base_vector());
    debug_assert_eq!(
        min.mod_floor(&BigInt::from(8)),
        BigInt::from(l.validate().signature.unsigned_abs() % 8),
        "van der Blij congruence violated"
    );
    Ok(CharMinResult {
        min_abs_norm: min,
        witness,
        node_count: nodes,
    })
}

/// Exhaustive scan of the characteristic coset over the box
/// `[-radius, radius]^n`; an independent oracle for
/// [`min_characteristic_norm`], intended for tests and audits.
pub fn brute_force_min_char(
    l: &GramLattice,
    radius: u32,
) -> Result<CharMinResult, CharVecError> {
    brute_force_min_char_capped(l, radius, DEFAULT_BOX_CAP)
}

pub fn brute_force_min_char_capped(
    l: &GramLattice,
    radius: u32,
    cap: u128,
) -> Result<CharMinResult, CharVecError> {
    assert!(radius >= 1, "radius must be at least 1");
    let n = l.rank();
    let a = positive_gram(l)?;
    if n == 0 {
        return Ok(CharMinResult {
            min_abs_norm: BigInt::zero(),
            witness: Vec::new(),
            node_count: 0,
        });
    }
    let coset = characteristic_coset(l)?;
    let r = radius as i64;
    let candidates: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (-r..=r)
                .filter(|v| (v - coset.base()[i] as i64).rem_euclid(2) == 0)
                .collect()
        })
        .collect();
    let mut points: u128 = 1;
    for c in &candidates {
        points = points.checked_mul(c.len() as u128).unwrap_or(u128::MAX);
        if points > cap {
            return Err(CharVecError::BoxTooLarge { points, cap });
        }
    }

    // depth-first scan in lexicographic order with incremental norm updates:
    // appending x_k adds x_k^2 A[k][k] + 2 x_k * <A[k], x[..k]>.
    struct Scan<'s> {
        a: &'s [Vec<BigInt>],
        candidates: &'s [Vec<i64>],
        best: Option<(BigInt, Vec<BigInt>)>,
        visited: u64,
    }
    impl Scan<'_> {
        fn go(&mut self, level: usize, x: &mut Vec<BigInt>, norm: &BigInt, lin: &[BigInt]) {
            let n = self.a.len();
            for &v in &self.candidates[level] {
                let vb = BigInt::from(v);
                let norm2 =
                    norm + &vb * &vb * &self.a[level][level] + BigInt::from(2) * &vb * &lin[level];
                x.push(vb.clone());
                if level + 1 == n {
                    self.visited += 1;
                    // lexicographic scan order: strict improvement keeps the
                    // lexicographically smallest witness automatically
                    if self.best.as_ref().is_none_or(|(b, _)| norm2 < *b) {
                        self.best = Some((norm2, x.clone()));
                    }
                } else {
                    let lin2: Vec<BigInt> = (0..n)
                        .map(|m| &lin[m] + &vb * &self.a[level][m])
                        .collect();
                    self.go(level + 1, x, &norm2, &lin2);
                }
                x.pop();
            }
        }
    }
    let mut scan = Scan {
        a: &a,
        candidates: &candidates,
        best: None,
        visited: 0,
    };
    scan.go(0, &mut Vec::new(), &BigInt::zero(), &vec![BigInt::zero(); n]);
    let (min, witness) = scan.best.expect("box always contains the base point");
    Ok(CharMinResult {
        min_abs_norm: min,
        witness,
        node_count: scan.visited,
    })
}

/// Elkies' criterion: a definite unimodular form is isomorphic to the
/// diagonal form `+-Z^n` iff every characteristic `w` has `|w^2| >= n`.
pub fn elkies_is_standard(l: &GramLattice) -> Result<(bool, CharMinResult), CharVecError> {
    elkies_is_standard_with(l, &EnumOptions::default())
}

pub fn elkies_is_standard_with(
    l: &GramLattice,
    opts: &EnumOptions,
) -> Result<(bool, CharMinResult), CharVecError> {
    let res = min_characteristic_norm_with(l, opts)?;
    let standard = res.min_abs_norm >= BigInt::from(l.rank());
    Ok((standard, res))
}

/// Independent standardness check: a definite unimodular lattice is standard
/// iff it contains `rank` pairwise orthogonal vectors of norm `+-1`. Found
/// greedily: a norm-1 vector of `|G|`, if any, splits off as an orthogonal
/// summand (its complement is again unimodular), and we recurse.
pub fn split_units_is_standard(l: &GramLattice) -> Result<bool, CharVecError> {
    split_units_is_standard_with(l, &EnumOptions::default())
}

pub fn split_units_is_standard_with(
    l: &GramLattice,
    opts: &EnumOptions,
) -> Result<bool, CharVecError> {
    let mut a = positive_gram(l)?;
    if a.len() > opts.rank_cap {
        return Err(CharVecError::RankCapExceeded {
            rank: a.len(),
            cap: opts.rank_cap,
        });
    }
    while !a.is_empty() {
        let n = a.len();
        // initial incumbent: the standard basis vector of smallest norm
        let arg = (0..n).min_by_key(|&i| a[i][i].clone()).unwrap();
        let mut init = vec![BigInt::zero(); n];
        init[arg] = BigInt::one();
        let (min, witness, _) = enumerate_min(&a, None, true, init);
        debug_assert!(min >= BigInt::one());
        if !min.is_one() {
            return Ok(false);
        }
        // u = A w; u^T x = 0 cuts out the orthogonal complement, and
        // u^T w = w^T A w = 1 makes u primitive.
        let u: Vec<BigInt> = (0..n)
            .map(|i| {
                let mut s = BigInt::zero();
                for j in 0..n {
                    s += &a[i][j] * &witness[j];
                }
                s
            })
            .collect();
        let basis = kernel_basis(&u);
        a = project_gram(&a, &basis);
    }
    Ok(true)
}

/// Integer kernel basis of a primitive vector `u` (as the linear functional
/// `x -> u^T x`), by unimodular column reduction of `u`.
fn kernel_basis(u: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = u.len();
    let mut u = u.to_vec();
    // columns of the running unimodular transform
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut c = vec![BigInt::zero(); n];
            c[j] = BigInt::one();
            c
        })
        .collect();
    loop {
        let p = (0..n)
            .filter(|&i| !u[i].is_zero())
            .min_by_key(|&i| u[i].abs())
            .expect("u is nonzero");
        let mut done = true;
        for j in 0..n {
            if j == p || u[j].is_zero() {
                continue;
            }
            let q = &u[j] / &u[p]; // truncated division leaves |r| < |u[p]|
            if !q.is_zero() {
                u[j] = &u[j] - &q * &u[p];
                for k in 0..n {
                    let v = &cols[j][k] - &q * &cols[p][k];
                    cols[j][k] = v;
                }
            }
            if !u[j].is_zero() {
                done = false;
            }
        }
        if done {
            debug_assert!(u[p].abs().is_one(), "functional must be primitive");
            return (0..n).filter(|&j| j != p).map(|j| cols[j].clone()).collect();
        }
    }
}

/// `B^T A B` for a basis given as columns.
fn project_gram(a: &[Vec<BigInt>], basis: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let m = basis.len();
    let mut out = vec![vec![BigInt::zero(); m]; m];
    // ab[j] = A * basis[j]
    let ab: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|b| {
            (0..n)
                .map(|i| {
                    let mut s = BigInt::zero();
                    for k in 0..n {
                        s += &a[i][k] * &b[k];
                    }
                    s
                })
                .collect()
        })
        .collect();
    for i in 0..m {
        for j in i..m {
            let mut s = BigInt::zero();
            for k in 0..n {
                s += &basis[i][k] * &ab[j][k];
            }
            out[i][j] = s.clone();
            out[j][i] = s;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(entries: &[i64]) -> GramLattice {
        GramLattice::diagonal(entries)
    }

    fn neg_e8() -> GramLattice {
        GramLattice::e8().negate()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn coset_examples() {
        assert_eq!(characteristic_coset(&diag(&[1, 1])).unwrap().base(), &[1, 1]);
        assert_eq!(characteristic_coset(&neg_e8()).unwrap().base(), &[0; 8]);
        assert_eq!(
            characteristic_coset(&diag(&[1, -1])).unwrap().base(),
            &[1, 1]
        );
    }

    #[test]
    fn coset_rejects_even_determinant() {
        let l = diag(&[2, 1]);
        let e = characteristic_coset(&l);
        assert!(matches!(e, Err(CharVecError::NotUnimodular { .. })));
    }

    #[test]
    fn coset_parity_identity_on_random_vectors() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for l in [diag(&[1, 1, 1]), neg_e8(), diag(&[-1; 5]).unimodular_scramble(4)] {
            let coset = characteristic_coset(&l).unwrap();
            let base = coset.base_vector();
            for _ in 0..100 {
                let v: Vec<BigInt> = (0..l.rank())
                    .map(|_| BigInt::from(rng.gen_range(-5i64..=5)))
                    .collect();
                let lhs = l.bilinear(&base, &v);
                let rhs = l.norm(&v);
                assert!((lhs - rhs).is_even());
            }
        }
    }

    #[test]
    fn min_norm_diagonal() {
        for n in 1..=6usize {
            let l = diag(&vec![1; n]);
            let res = min_characteristic_norm(&l).unwrap();
            assert_eq!(res.min_abs_norm, BigInt::from(n));
            assert_eq!(res.witness, big(&vec![-1; n]));
        }
    }

    #[test]
    fn min_norm_neg_e8_is_zero() {
        let res = min_characteristic_norm(&neg_e8()).unwrap();
        assert!(res.min_abs_norm.is_zero());
        assert_eq!(res.witness, big(&[0; 8]));
    }

    #[test]
    fn min_norm_e8_plus_unit() {
        // oracle value: exhaustive radius-3 box scan gives min 1 with
        // witness (0,...,0,-1)
        let l = neg_e8().direct_sum(&diag(&[-1]));
        let res = min_characteristic_norm(&l).unwrap();
        assert_eq!(res.min_abs_norm, BigInt::one());
        assert_eq!(res.witness, big(&[0, 0, 0, 0, 0, 0, 0, 0, -1]));

        let brute = brute_force_min_char(&l, 3).unwrap();
        assert_eq!(brute.min_abs_norm, res.min_abs_norm);
        assert_eq!(brute.witness, res.witness);
    }

    #[test]
    fn brute_force_examples() {
        let res = brute_force_min_char(&diag(&[1, 1]), 2).unwrap();
        assert_eq!(res.min_abs_norm, BigInt::from(2));
        assert_eq!(res.witness, big(&[-1, -1]));
        assert_eq!(res.node_count, 4); // odd coords in [-2,2]: {-1,1}^2

        let res = brute_force_min_char(&neg_e8(), 1).unwrap();
        assert!(res.min_abs_norm.is_zero());

        let l = diag(&[-1; 4]).unimodular_scramble(11);
        let brute = brute_force_min_char(&l, 3).unwrap();
        let fp = min_characteristic_norm(&l).unwrap();
        assert_eq!(brute.min_abs_norm, BigInt::from(4));
        assert_eq!(fp.min_abs_norm, BigInt::from(4));
    }

    #[test]
    fn brute_force_box_cap() {
        let e = brute_force_min_char_capped(&diag(&[1; 8]), 4, 1000);
        assert!(matches!(e, Err(CharVecError::BoxTooLarge { .. })));
    }

    #[test]
    fn rank_cap_enforced() {
        // rank 26 > default cap; mostly even, so the raised-cap run is cheap
        let l = neg_e8()
            .direct_sum(&neg_e8())
            .direct_sum(&neg_e8())
            .direct_sum(&diag(&[-1, -1]));
        let e = min_characteristic_norm(&l);
        assert_eq!(
            e,
            Err(CharVecError::RankCapExceeded { rank: 26, cap: 24 })
        );
        let ok = min_characteristic_norm_with(&l, &EnumOptions { rank_cap: 26 });
        assert_eq!(ok.unwrap().min_abs_norm, BigInt::from(2));
    }

    #[test]
    fn not_definite_rejected() {
        for l in [GramLattice::hyperbolic(), diag(&[1, -1])] {
            assert_eq!(min_characteristic_norm(&l), Err(CharVecError::NotDefinite));
            assert_eq!(
                brute_force_min_char(&l, 2),
                Err(CharVecError::NotDefinite)
            );
            assert_eq!(split_units_is_standard(&l), Err(CharVecError::NotDefinite));
        }
    }

    #[test]
    fn elkies_examples() {
        let (std, res) = elkies_is_standard(&diag(&[-1, -1, -1])).unwrap();
        assert!(std);
        assert_eq!(res.min_abs_norm, BigInt::from(3));

        let (std, res) = elkies_is_standard(&neg_e8()).unwrap();
        assert!(!std);
        assert!(res.min_abs_norm.is_zero());

        let two_e8 = neg_e8().direct_sum(&neg_e8()).unimodular_scramble(5);
        let (std, res) = elkies_is_standard(&two_e8).unwrap();
        assert!(!std);
        assert!(res.min_abs_norm.is_zero());
    }

    #[test]
    fn split_units_examples() {
        assert!(split_units_is_standard(&diag(&[1, 1])).unwrap());
        assert!(!split_units_is_standard(&neg_e8()).unwrap());
        assert!(split_units_is_standard(&diag(&[-1; 5]).unimodular_scramble(17)).unwrap());
    }

    #[test]
    fn scramble_preserves_min_norm() {
        for (seed, l) in [
            (2u64, neg_e8()),
            (3, diag(&[1; 4])),
            (4, diag(&[-1; 6])),
        ] {
            let base = min_characteristic_norm(&l).unwrap().min_abs_norm;
            let scr = min_characteristic_norm(&l.unimodular_scramble(seed))
                .unwrap()
                .min_abs_norm;
            assert_eq!(base, scr);
        }
    }

    #[test]
    fn rank_zero_minimum() {
        let res = min_characteristic_norm(&GramLattice::empty()).unwrap();
        assert!(res.min_abs_norm.is_zero());
        assert!(res.witness.is_empty());
        let (std, _) = elkies_is_standard(&GramLattice::empty()).unwrap();
        assert!(std);
        assert!(split_units_is_standard(&GramLattice::empty()).unwrap());
    }
}
