//! Integral symmetric bilinear forms given by Gram matrices.
//!
//! All arithmetic is arbitrary-precision and exact: determinants are computed
//! by fraction-free (Bareiss) elimination over the integers, and inertia by
//! symmetric Gaussian elimination over the rationals with symmetric pivoting,
//! so zero leading minors (e.g. the hyperbolic plane) are handled correctly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("gram matrix is not square: row {row} has {got} entries, expected {expected}")]
    NotSquare {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("gram matrix is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },
}

/// Parity of a form: even iff every diagonal entry is even
/// (equivalently, `v.v` is even for every lattice vector `v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    Positive,
    Negative,
    Indefinite,
    Degenerate,
}

impl Definiteness {
    pub fn is_definite(self) -> bool {
        matches!(self, Definiteness::Positive | Definiteness::Negative)
    }
}

impl fmt::Display for Definiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Definiteness::Positive => write!(f, "positive"),
            Definiteness::Negative => write!(f, "negative"),
            Definiteness::Indefinite => write!(f, "indefinite"),
            Definiteness::Degenerate => write!(f, "degenerate"),
        }
    }
}

/// Invariants of a symmetric integer form, computed exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormInvariants {
    pub rank: usize,
    /// `n_plus - n_minus`.
    pub signature: i64,
    pub parity: Parity,
    pub definiteness: Definiteness,
    pub determinant: BigInt,
    /// Number of positive pivots (dimension of a maximal positive subspace).
    pub n_plus: usize,
    /// Number of negative pivots.
    pub n_minus: usize,
    /// Dimension of the radical; nonzero iff the form is degenerate.
    pub n_zero: usize,
}

impl FormInvariants {
    pub fn is_unimodular(&self) -> bool {
        self.determinant.abs().is_one()
    }
}

/// A symmetric integer Gram matrix. Immutable after construction; symmetry is
/// checked eagerly so every constructed value is a legal bilinear form.
#[derive(Clone, PartialEq, Eq)]
pub struct GramLattice {
    rank: usize,
    gram: Vec<BigInt>, // row-major rank x rank
}

impl fmt::Debug for GramLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GramLattice(rank {})", self.rank)?;
        for i in 0..self.rank {
            write!(f, "\n  [")?;
            for j in 0..self.rank {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl GramLattice {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        let rank = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(LatticeError::NotSquare {
                    row: i,
                    got: row.len(),
                    expected: rank,
                });
            }
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                if rows[i][j] != rows[j][i] {
                    return Err(LatticeError::NotSymmetric { i, j });
                }
            }
        }
        let gram = rows.into_iter().flatten().collect();
        Ok(GramLattice { rank, gram })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// The rank-0 form, the identity element for [`GramLattice::direct_sum`].
    pub fn empty() -> Self {
        GramLattice {
            rank: 0,
            gram: Vec::new(),
        }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let rank = entries.len();
        let mut gram = vec![BigInt::zero(); rank * rank];
        for (i, &d) in entries.iter().enumerate() {
            gram[i * rank + i] = BigInt::from(d);
        }
        GramLattice { rank, gram }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1; n])
    }

    /// The hyperbolic plane `[[0,1],[1,0]]`.
    pub fn hyperbolic() -> Self {
        Self::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    /// The positive-definite E8 root lattice Gram matrix (diagonal 2, -1 on
    /// the edges of the E8 Dynkin diagram). Determinant 1, even, signature 8.
    pub fn e8() -> Self {
        let n = 8;
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        // chain 0-1-2-3-4-5-6 with node 7 attached to node 4
        for &(a, b) in &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
            rows[a][b] = -1;
            rows[b][a] = -1;
        }
        Self::from_i64_rows(&rows).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.gram[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j).clone()).collect())
            .collect()
    }

    /// `x^T G y`.
    pub fn bilinear(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        debug_assert_eq!(x.len(), self.rank);
        debug_assert_eq!(y.len(), self.rank);
        let mut acc = BigInt::zero();
        for i in 0..self.rank {
            if x[i].is_zero() {
                continue;
            }
            let mut row = BigInt::zero();
            for j in 0..self.rank {
                if !y[j].is_zero() {
                    row += self.entry(i, j) * &y[j];
                }
            }
            acc += &x[i] * row;
        }
        acc
    }

    /// `x^T G x`.
    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.bilinear(x, x)
    }

    /// Block-diagonal sum; rank and signature are additive.
    pub fn direct_sum(&self, other: &GramLattice) -> GramLattice {
        let rank = self.rank + other.rank;
        let mut gram = vec![BigInt::zero(); rank * rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                gram[i * rank + j] = self.entry(i, j).clone();
            }
        }
        for i in 0..other.rank {
            for j in 0..other.rank {
                gram[(self.rank + i) * rank + (self.rank + j)] = other.entry(i, j).clone();
            }
        }
        GramLattice { rank, gram }
    }

    /// Entrywise negation (orientation reversal); signature negates.
    pub fn negate(&self) -> GramLattice {
        GramLattice {
            rank: self.rank,
            gram: self.gram.iter().map(|x| -x).collect(),
        }
    }

    /// `U^T G U` for a pseudorandom unimodular `U` built from elementary
    /// symmetric row/column operations; the result is integrally equivalent
    /// to the input, so every invariant and every characteristic-norm
    /// minimum is preserved.
    pub fn unimodular_scramble(&self, seed: u64) -> GramLattice {
        self.unimodular_scramble_steps(seed, 2 * self.rank + 2)
    }

    /// Scramble with an explicit number of elementary operations.
    /// `steps = 0` returns the input unchanged (U = identity).
    pub fn unimodular_scramble_steps(&self, seed: u64, steps: usize) -> GramLattice {
        let n = self.rank;
        let mut out = self.clone();
        if n == 0 {
            return out;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..steps {
            match rng.gen_range(0..6u8) {
                0 => {
                    // negate row/column i
                    let i = rng.gen_range(0..n);
                    for j in 0..n {
                        let v = -out.entry(i, j);
                        out.gram[i * n + j] = v;
                    }
                    for j in 0..n {
                        let v = -out.entry(j, i);
                        out.gram[j * n + i] = v;
                    }
                }
                1 if n >= 2 => {
                    // symmetric swap of i and j
                    let i = rng.gen_range(0..n);
                    let mut j = rng.gen_range(0..n - 1);
                    if j >= i {
                        j += 1;
                    }
                    for k in 0..n {
                        out.gram.swap(i * n + k, j * n + k);
                    }
                    for k in 0..n {
                        out.gram.swap(k * n + i, k * n + j);
                    }
                }
                _ if n >= 2 => {
                    // add c * (row j) to row i, and the same on columns;
                    // c = +-1 keeps entry growth tame so enumeration on
                    // scrambled corpora stays cheap
                    let i = rng.gen_range(0..n);
                    let mut j = rng.gen_range(0..n - 1);
                    if j >= i {
                        j += 1;
                    }
                    let c = BigInt::from(if rng.gen::<bool>() { 1i64 } else { -1 });
                    for k in 0..n {
                        let v = out.entry(i, k) + &c * out.entry(j, k);
                        out.gram[i * n + k] = v;
                    }
                    for k in 0..n {
                        let v = out.entry(k, i) + &c * out.entry(k, j);
                        out.gram[k * n + i] = v;
                    }
                }
                _ => {}
            }
        }
        out
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.gram
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.rank;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.rows();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(sw) = ((k + 1)..n).find(|&r| !m[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, sw);
                sign = -sign;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev; // exact by Bareiss
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    /// Inertia `(n_plus, n_minus, n_zero)` by symmetric Gaussian elimination
    /// over the rationals. A zero pivot is repaired by a symmetric swap with a
    /// later nonzero diagonal entry, or, when the whole remaining diagonal
    /// vanishes, by symmetrically adding a row/column so the pivot becomes
    /// `2 a[k][j] != 0`. Both moves are congruences, so inertia is preserved.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let n = self.rank;
        let mut a: Vec<Vec<BigRational>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
        for p in 0..n {
            if a[p][p].is_zero() {
                if let Some(sw) = ((p + 1)..n).find(|&j| !a[j][j].is_zero()) {
                    for row in a.iter_mut() {
                        row.swap(p, sw);
                    }
                    a.swap(p, sw);
                } else if let Some(j) = ((p + 1)..n).find(|&j| !a[p][j].is_zero()) {
                    for k in 0..n {
                        let v = &a[p][k] + &a[j][k];
                        a[p][k] = v;
                    }
                    for k in 0..n {
                        let v = &a[k][p] + &a[k][j];
                        a[k][p] = v;
                    }
                } else {
                    zero += 1;
                    continue;
                }
            }
            let piv = a[p][p].clone();
            if piv.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            // Schur complement of the pivot
            for i in (p + 1)..n {
                if a[i][p].is_zero() {
                    continue;
                }
                let f = &a[i][p] / &piv;
                for j in (p + 1)..n {
                    let v = &a[i][j] - &f * &a[p][j];
                    a[i][j] = v;
                }
            }
            for i in (p + 1)..n {
                a[i][p] = BigRational::zero();
                a[p][i] = BigRational::zero();
            }
        }
        (pos, neg, zero)
    }

    /// All invariants of the form, computed exactly.
    pub fn validate(&self) -> FormInvariants {
        let (n_plus, n_minus, n_zero) = self.inertia();
        let signature = n_plus as i64 - n_minus as i64;
        let parity = if (0..self.rank).all(|i| self.entry(i, i).is_even()) {
            Parity::Even
        } else {
            Parity::Odd
        };
        let definiteness = if n_zero > 0 {
            Definiteness::Degenerate
        } else if n_minus == 0 {
            // rank 0 is vacuously definite; report it as positive
            Definiteness::Positive
        } else if n_plus == 0 {
            Definiteness::Negative
        } else {
            Definiteness::Indefinite
        };
        FormInvariants {
            rank: self.rank,
            signature,
            parity,
            definiteness,
            determinant: self.determinant(),
            n_plus,
            n_minus,
            n_zero,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(entries: &[i64]) -> GramLattice {
        GramLattice::diagonal(entries)
    }

    /// Independent determinant oracle: recursive cofactor expansion.
    fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
        let k = m.len();
        if k == 0 {
            return BigInt::one();
        }
        if k == 1 {
            return m[0][0].clone();
        }
        let mut s = BigInt::zero();
        for j in 0..k {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = (1..k)
                .map(|i| {
                    (0..k)
                        .filter(|&jj| jj != j)
                        .map(|jj| m[i][jj].clone())
                        .collect()
                })
                .collect();
            let c = &m[0][j] * det_cofactor(&minor);
            if j % 2 == 0 {
                s += c;
            } else {
                s -= c;
            }
        }
        s
    }

    #[test]
    fn rejects_non_square_and_non_symmetric() {
        let e = GramLattice::from_i64_rows(&[vec![1, 0], vec![0]]);
        assert!(matches!(e, Err(LatticeError::NotSquare { .. })));
        let e = GramLattice::from_i64_rows(&[vec![1, 2], vec![3, 1]]);
        assert_eq!(e, Err(LatticeError::NotSymmetric { i: 0, j: 1 }));
    }

    #[test]
    fn validate_identity_rank3() {
        let inv = diag(&[1, 1, 1]).validate();
        assert_eq!(inv.rank, 3);
        assert_eq!(inv.signature, 3);
        assert_eq!(inv.parity, Parity::Odd);
        assert_eq!(inv.definiteness, Definiteness::Positive);
        assert_eq!(inv.determinant, BigInt::one());
    }

    #[test]
    fn validate_negated_e8() {
        // Cross-check the built-in E8 matrix against the cofactor oracle
        // before relying on it: determinant 1 and all leading principal
        // minors positive (so the form is positive definite by Sylvester).
        let e8 = GramLattice::e8();
        let rows = e8.rows();
        assert_eq!(det_cofactor(&rows), BigInt::one());
        for k in 1..=8 {
            let lead: Vec<Vec<BigInt>> =
                rows[..k].iter().map(|r| r[..k].to_vec()).collect();
            assert!(det_cofactor(&lead) > BigInt::zero(), "minor {k}");
        }

        let inv = e8.negate().validate();
        assert_eq!(inv.rank, 8);
        assert_eq!(inv.signature, -8);
        assert_eq!(inv.parity, Parity::Even);
        assert_eq!(inv.definiteness, Definiteness::Negative);
        assert_eq!(inv.determinant, BigInt::one());
    }

    #[test]
    fn validate_hyperbolic() {
        let inv = GramLattice::hyperbolic().validate();
        assert_eq!(inv.rank, 2);
        assert_eq!(inv.signature, 0);
        assert_eq!(inv.parity, Parity::Even);
        assert_eq!(inv.definiteness, Definiteness::Indefinite);
        assert_eq!(inv.determinant, BigInt::from(-1));
    }

    #[test]
    fn validate_degenerate() {
        let inv = diag(&[1, 0, -1]).validate();
        assert_eq!(inv.definiteness, Definiteness::Degenerate);
        assert_eq!(inv.n_zero, 1);
        assert_eq!(inv.signature, 0);
        assert!(inv.determinant.is_zero());
    }

    #[test]
    fn direct_sum_examples() {
        let s = diag(&[1]).direct_sum(&diag(&[-1]));
        assert_eq!(s, diag(&[1, -1]));

        let s = GramLattice::e8().negate().direct_sum(&GramLattice::hyperbolic());
        let inv = s.validate();
        assert_eq!(inv.rank, 10);
        assert_eq!(inv.signature, -8);

        let l = diag(&[3, -2]);
        assert_eq!(l.direct_sum(&GramLattice::empty()), l);
        assert_eq!(GramLattice::empty().direct_sum(&l), l);
    }

    #[test]
    fn negate_examples() {
        assert_eq!(diag(&[1]).negate(), diag(&[-1]));
        let l = GramLattice::e8().negate();
        assert_eq!(l.negate().negate(), l);
        assert_eq!(l.negate().validate().signature, 8);
    }

    #[test]
    fn scramble_zero_steps_is_identity() {
        let l = GramLattice::e8();
        assert_eq!(l.unimodular_scramble_steps(12345, 0), l);
    }

    #[test]
    fn scramble_preserves_invariants() {
        let cases = [diag(&[1, 1]), GramLattice::e8().negate(), diag(&[-1, -1, -1])];
        for (s, l) in cases.iter().enumerate() {
            let m = l.unimodular_scramble(7 + s as u64);
            let a = l.validate();
            let b = m.validate();
            assert_eq!(a.rank, b.rank);
            assert_eq!(a.signature, b.signature);
            assert_eq!(a.parity, b.parity);
            assert_eq!(a.definiteness, b.definiteness);
            assert_eq!(b.determinant.abs(), a.determinant.abs());
        }
    }

    #[test]
    fn determinant_matches_cofactor_oracle_on_scrambles() {
        let base = diag(&[1, -2, 3, 1]);
        for seed in 0..10u64 {
            let l = base.unimodular_scramble(seed);
            assert_eq!(l.determinant(), det_cofactor(&l.rows()), "seed {seed}");
        }
    }

    #[test]
    fn even_parity_means_even_norms() {
        let l = GramLattice::e8().direct_sum(&GramLattice::hyperbolic());
        assert_eq!(l.validate().parity, Parity::Even);
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1000 {
            let v: Vec<BigInt> = (0..l.rank())
                .map(|_| BigInt::from(rng.gen_range(-7i64..=7)))
                .collect();
            assert!(l.norm(&v).is_even());
        }
    }

    #[test]
    fn rank_zero_validate() {
        let inv = GramLattice::empty().validate();
        assert_eq!(inv.rank, 0);
        assert_eq!(inv.signature, 0);
        assert_eq!(inv.parity, Parity::Even);
        assert_eq!(inv.definiteness, Definiteness::Positive);
        assert!(inv.is_unimodular());
    }
}
