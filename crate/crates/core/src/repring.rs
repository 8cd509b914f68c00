//! Exact character calculus in `R(Z/2)` and `R(Z/4)`.
//!
//! Character values of these groups lie in the Gaussian rationals, so every
//! trace here is a pair of exact rationals. The K-theoretic degree of an
//! equivariant proper map is evaluated through its traces: for `g` acting
//! without fixed vectors on each listed line,
//! `tr_g(alpha) = d_g * prod_plus (1 - zeta^{jk}) / prod_minus (1 - zeta^{jk})`,
//! and integrality of the result is what forces the 10/8-type inequalities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepRingError {
    #[error("unsupported cyclic group order {0}; only 2 and 4 are modeled")]
    UnsupportedModulus(usize),
    #[error("characters live in different representation rings")]
    ModulusMismatch,
    #[error("g fixes a vector of the line C_{index}: 1 - zeta^(j*{index}) = 0, formula inapplicable")]
    FixedVectorPresent { index: usize },
}

/// An exact Gaussian rational `re + im*i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// A Gaussian *integer* with zero imaginary part.
    pub fn is_integral(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        assert!(!rhs.is_zero(), "division by zero Gaussian rational");
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let num = self * &rhs.conj();
        GaussianRational::new(num.re / &norm, num.im / norm)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = if self.im.abs() == BigRational::one() {
            "i".to_string()
        } else {
            format!("{}i", self.im.abs())
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_part}")
            } else {
                write!(f, "{im_part}")
            }
        } else if self.im.is_negative() {
            write!(f, "{}-{im_part}", self.re)
        } else {
            write!(f, "{}+{im_part}", self.re)
        }
    }
}

/// `zeta_N^m` for `N` in {2, 4}, exactly.
fn root_power(modulus: usize, m: usize) -> GaussianRational {
    match modulus {
        2 => {
            if m % 2 == 0 {
                GaussianRational::one()
            } else {
                -&GaussianRational::one()
            }
        }
        4 => match m % 4 {
            0 => GaussianRational::one(),
            1 => GaussianRational::i(),
            2 => -&GaussianRational::one(),
            _ => -&GaussianRational::i(),
        },
        _ => unreachable!("modulus validated on construction"),
    }
}

fn check_modulus(modulus: usize) -> Result<(), RepRingError> {
    if modulus == 2 || modulus == 4 {
        Ok(())
    } else {
        Err(RepRingError::UnsupportedModulus(modulus))
    }
}

fn reduce_index(modulus: usize, k: isize) -> usize {
    k.rem_euclid(modulus as isize) as usize
}

/// An element of `R(Z/N)`, `N` in {2, 4}: integer multiplicities over the
/// irreducible lines `C_k` (the generator acts on `C_k` by `zeta_N^k`).
/// Negative multiplicities are allowed (virtual characters); `C~`, the sign
/// line complexified, is `C_{N/2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualCharacter {
    modulus: usize,
    mult: Vec<BigInt>,
}

impl VirtualCharacter {
    pub fn zero(modulus: usize) -> Result<Self, RepRingError> {
        check_modulus(modulus)?;
        Ok(VirtualCharacter {
            modulus,
            mult: vec![BigInt::zero(); modulus],
        })
    }

    /// The line `C_k`; `k` may be any integer and is reduced mod `N`
    /// (so `C_{-1}` is `C_{N-1}`).
    pub fn irreducible(modulus: usize, k: isize) -> Result<Self, RepRingError> {
        let mut v = Self::zero(modulus)?;
        v.mult[reduce_index(modulus, k)] = BigInt::one();
        Ok(v)
    }

    /// `C~ = C_{N/2}`: the complexified sign representation.
    pub fn tilde(modulus: usize) -> Result<Self, RepRingError> {
        Self::irreducible(modulus, (modulus / 2) as isize)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn multiplicity(&self, k: isize) -> &BigInt {
        &self.mult[reduce_index(self.modulus, k)]
    }

    pub fn add(&self, other: &Self) -> Result<Self, RepRingError> {
        if self.modulus != other.modulus {
            return Err(RepRingError::ModulusMismatch);
        }
        Ok(VirtualCharacter {
            modulus: self.modulus,
            mult: self
                .mult
                .iter()
                .zip(&other.mult)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        VirtualCharacter {
            modulus: self.modulus,
            mult: self.mult.iter().map(|a| -a).collect(),
        }
    }

    /// Tensor product: convolution of multiplicity vectors mod `N`.
    pub fn tensor(&self, other: &Self) -> Result<Self, RepRingError> {
        if self.modulus != other.modulus {
            return Err(RepRingError::ModulusMismatch);
        }
        let n = self.modulus;
        let mut mult = vec![BigInt::zero(); n];
        for a in 0..n {
            if self.mult[a].is_zero() {
                continue;
            }
            for b in 0..n {
                if other.mult[b].is_zero() {
                    continue;
                }
                mult[(a + b) % n] += &self.mult[a] * &other.mult[b];
            }
        }
        Ok(VirtualCharacter { modulus: n, mult })
    }

    /// `tr_{g^j}`: the character value at the `j`-th power of the generator,
    /// `sum_k mult_k * zeta^{jk}`, computed symbolically in `Z[i]`.
    pub fn trace_at(&self, j: usize) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (k, m) in self.mult.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let z = root_power(self.modulus, (j % self.modulus) * k);
            let scaled = GaussianRational::new(
                &z.re * BigRational::from_integer(m.clone()),
                &z.im * BigRational::from_integer(m.clone()),
            );
            acc = &acc + &scaled;
        }
        acc
    }
}

/// Trace of `Lambda_-1` of the virtual difference `plus - minus`, evaluated
/// at `g^j`: for each line `C_k` the factor is `1 - zeta^{jk}`, in the
/// numerator for `plus` and the denominator for `minus`. The lines are given
/// as `(index, multiplicity)` pairs. Requires `g^j` to act without invariant
/// vectors on every listed line, i.e. no factor may vanish.
pub fn lambda_minus1_trace(
    modulus: usize,
    plus: &[(isize, u32)],
    minus: &[(isize, u32)],
    j: usize,
) -> Result<GaussianRational, RepRingError> {
    check_modulus(modulus)?;
    let factor = |k: isize| -> Result<GaussianRational, RepRingError> {
        let idx = reduce_index(modulus, k);
        let z = root_power(modulus, (j % modulus) * idx);
        let f = &GaussianRational::one() - &z;
        if f.is_zero() {
            return Err(RepRingError::FixedVectorPresent { index: idx });
        }
        Ok(f)
    };
    let mut num = GaussianRational::one();
    for &(k, m) in plus {
        let f = factor(k)?;
        for _ in 0..m {
            num = &num * &f;
        }
    }
    let mut den = GaussianRational::one();
    for &(k, m) in minus {
        let f = factor(k)?;
        for _ in 0..m {
            den = &den * &f;
        }
    }
    Ok(&num / &den)
}

/// tom Dieck's character formula for the K-theoretic degree:
/// `tr_g(alpha_f) = d(f^g) * tr_g(Lambda_-1(W_g_perp - V_g_perp))`.
/// `d_g = 0` (fixed-point degree zero, e.g. unequal fixed-space dimensions)
/// short-circuits to 0.
pub fn tom_dieck_trace(
    d_g: i64,
    modulus: usize,
    plus: &[(isize, u32)],
    minus: &[(isize, u32)],
    j: usize,
) -> Result<GaussianRational, RepRingError> {
    check_modulus(modulus)?;
    if d_g == 0 {
        return Ok(GaussianRational::zero());
    }
    let l = lambda_minus1_trace(modulus, plus, minus, j)?;
    Ok(&GaussianRational::from_int(d_g) * &l)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TenEighthsBound {
    /// `2^(b-k)` as an exact rational.
    pub trace: GaussianRational,
    pub integral: bool,
    pub inequality_holds: bool,
}

/// The trace computation behind the twisted 10/8 bound: the degree of the
/// complexified approximation `C~^m + (C_1 + C_-1)^(n+k) -> C~^(m+b) +
/// (C_1 + C_-1)^n` in `R(Z/4)` has `tr_g = 2^(b-k)` at the generator.
/// Integrality of the trace is exactly the inequality `b >= k`.
pub fn ten_eighths_bound(b: u32, k: u32) -> TenEighthsBound {
    let trace = tom_dieck_trace(1, 4, &[(2, b)], &[(1, k), (-1, k)], 1)
        .expect("no factor vanishes at j = 1");
    let integral = trace.is_integral();
    TenEighthsBound {
        trace,
        integral,
        inequality_holds: integral,
    }
}

/// The definite-case trace `tr_g((C - C~)^(2k)) = 2^(2k)` in `R(Z/2)` at
/// `g = -1`; defined for all integers `k`, so a negative `k` exposes the
/// non-integral value `4^k` directly.
pub fn definite_case_trace(k: i64) -> GaussianRational {
    let m = (2 * k.unsigned_abs()) as u32;
    if k >= 0 {
        lambda_minus1_trace(2, &[(1, m)], &[], 1).expect("1 - (-1) never vanishes")
    } else {
        lambda_minus1_trace(2, &[], &[(1, m)], 1).expect("1 - (-1) never vanishes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn gauss(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussianRational {
        GaussianRational::new(rat(re_n, re_d), rat(im_n, im_d))
    }

    #[test]
    fn trace_examples() {
        // trivial character
        let c0 = VirtualCharacter::irreducible(4, 0).unwrap();
        assert_eq!(c0.trace_at(1), GaussianRational::one());

        // C_1 + C_-1 at j = 1: i + (-i) = 0
        let c1 = VirtualCharacter::irreducible(4, 1).unwrap();
        let cm1 = VirtualCharacter::irreducible(4, -1).unwrap();
        let sum = c1.add(&cm1).unwrap();
        assert!(sum.trace_at(1).is_zero());

        // C~ = C_2 in R(Z/4) at j = 1: -1
        let tilde = VirtualCharacter::tilde(4).unwrap();
        assert_eq!(tilde.trace_at(1), GaussianRational::from_int(-1));
    }

    #[test]
    fn trace_is_ring_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for modulus in [2usize, 4] {
            for _ in 0..50 {
                let rand_char = |rng: &mut rand_chacha::ChaCha8Rng| {
                    let mut v = VirtualCharacter::zero(modulus).unwrap();
                    for k in 0..modulus {
                        v.mult[k] = BigInt::from(rng.gen_range(-4i64..=4));
                    }
                    v
                };
                let a = rand_char(&mut rng);
                let b = rand_char(&mut rng);
                for j in 0..modulus {
                    let lhs = a.add(&b).unwrap().trace_at(j);
                    let rhs = &a.trace_at(j) + &b.trace_at(j);
                    assert_eq!(lhs, rhs);
                    let lhs = a.tensor(&b).unwrap().trace_at(j);
                    let rhs = &a.trace_at(j) * &b.trace_at(j);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let mut v = VirtualCharacter::zero(4).unwrap();
            for k in 0..4 {
                v.mult[k] = BigInt::from(rng.gen_range(-3i64..=3));
            }
            for j in 0..4 {
                assert_eq!(v.trace_at(j).conj(), v.trace_at(4 - j));
            }
        }
    }

    #[test]
    fn lambda_minus1_examples() {
        // 1 - (-1) = 2
        let t = lambda_minus1_trace(4, &[(2, 1)], &[], 1).unwrap();
        assert_eq!(t, GaussianRational::from_int(2));

        // 1 / ((1-i)(1+i)) = 1/2, from the Gaussian-integer product
        let prod = &gauss(1, 1, -1, 1) * &gauss(1, 1, 1, 1);
        assert_eq!(prod, GaussianRational::from_int(2));
        let t = lambda_minus1_trace(4, &[], &[(1, 1), (-1, 1)], 1).unwrap();
        assert_eq!(t, gauss(1, 2, 0, 1));

        // fixed vector on C_0
        assert_eq!(
            lambda_minus1_trace(4, &[(0, 1)], &[], 1),
            Err(RepRingError::FixedVectorPresent { index: 0 })
        );
    }

    #[test]
    fn lambda_minus1_is_multiplicative() {
        // Lambda_-1(A + B) traces to the product of the separate traces
        let a: Vec<(isize, u32)> = vec![(1, 2), (3, 1)];
        let b: Vec<(isize, u32)> = vec![(2, 3)];
        let mut ab = a.clone();
        ab.extend(&b);
        let lhs = lambda_minus1_trace(4, &ab, &[], 1).unwrap();
        let rhs = &lambda_minus1_trace(4, &a, &[], 1).unwrap()
            * &lambda_minus1_trace(4, &b, &[], 1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tom_dieck_examples() {
        // 2^(b-k) with b = 3, k = 1
        let t = tom_dieck_trace(1, 4, &[(2, 3)], &[(1, 1), (-1, 1)], 1).unwrap();
        assert_eq!(t, GaussianRational::from_int(4));

        // zero fixed-point degree short-circuits
        let t = tom_dieck_trace(0, 4, &[(0, 5)], &[], 1).unwrap();
        assert!(t.is_zero());

        // definite-case convention: plus = C~^(2k) in R(Z/2)
        let t = tom_dieck_trace(1, 2, &[(1, 4)], &[], 1).unwrap();
        assert_eq!(t, GaussianRational::from_int(16));
    }

    #[test]
    fn ten_eighths_bound_examples() {
        let r = ten_eighths_bound(2, 1);
        assert_eq!(r.trace, GaussianRational::from_int(2));
        assert!(r.integral);
        assert!(r.inequality_holds);

        let r = ten_eighths_bound(0, 1);
        assert_eq!(r.trace, gauss(1, 2, 0, 1));
        assert!(!r.integral);
        assert!(!r.inequality_holds);

        let r = ten_eighths_bound(0, 0);
        assert_eq!(r.trace, GaussianRational::one());
        assert!(r.inequality_holds);
    }

    #[test]
    fn definite_case_examples() {
        assert_eq!(definite_case_trace(1), GaussianRational::from_int(4));
        assert_eq!(definite_case_trace(0), GaussianRational::one());
        let t = definite_case_trace(-1);
        assert_eq!(t, gauss(1, 4, 0, 1));
        assert!(!t.is_integral());
    }

    #[test]
    fn display_formats() {
        assert_eq!(GaussianRational::from_int(2).to_string(), "2");
        assert_eq!(gauss(1, 2, 0, 1).to_string(), "1/2");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((-&GaussianRational::i()).to_string(), "-i");
        assert_eq!(gauss(1, 1, -2, 1).to_string(), "1-2i");
        assert_eq!(gauss(1, 2, 1, 2).to_string(), "1/2+1/2i");
    }
}
