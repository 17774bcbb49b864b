//! Ehrhart data of order polytopes: order-preserving map counts, the exact
//! Ehrhart polynomial, the h*-vector, degree and codegree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poset::Poset;

/// Largest poset handled by [`ehrhart_polynomial`] unless overridden.
pub const DEFAULT_BUDGET: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EhrhartError {
    #[error("poset has {size} elements, budget is {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("h*-entry {index} came out negative")]
    NegativeHStarEntry { index: usize },
    #[error("interpolated polynomial disagrees with the map count at k = {k}")]
    InterpolationMismatch { k: usize },
    #[error("h*-entry {index} does not fit in 128 bits")]
    Overflow { index: usize },
}

/// Ideals of `poset` as bitmasks, plus the mask of elements comparable to
/// each element (excluding itself).
fn ideal_masks(poset: &Poset) -> Result<(Vec<u64>, Vec<u64>), EhrhartError> {
    if poset.len() > 64 {
        return Err(EhrhartError::BudgetExceeded { size: poset.len(), budget: 64 });
    }
    let masks = poset
        .ideals()
        .into_iter()
        .map(|ideal| ideal.iter().fold(0u64, |m, &i| m | (1 << i)))
        .collect();
    let comparable = (0..poset.len())
        .map(|i| {
            (0..poset.len())
                .filter(|&j| j != i && poset.comparable(i, j))
                .fold(0u64, |m, j| m | (1 << j))
        })
        .collect();
    Ok((masks, comparable))
}

/// Counts multichains `∅ = I_0 ⊆ I_1 ⊆ … ⊆ I_m = Π` of order ideals; with
/// `strict`, every step `I_v \ I_{v-1}` must be an antichain. The level sets
/// `{i : f(i) <= v}` of a (strictly) order-preserving map `f: Π → [m]` are
/// exactly such chains.
fn count_ideal_chains(poset: &Poset, m: u32, strict: bool) -> Result<u128, EhrhartError> {
    let (masks, comparable) = ideal_masks(poset)?;
    let full = masks.iter().copied().max().unwrap_or(0);
    if m == 0 {
        return Ok(u128::from(poset.is_empty()));
    }
    let step_ok = |lower: u64, upper: u64| -> bool {
        if lower & !upper != 0 {
            return false;
        }
        if !strict {
            return true;
        }
        let mut diff = upper & !lower;
        let added = diff;
        while diff != 0 {
            let e = diff.trailing_zeros() as usize;
            if comparable[e] & added != 0 {
                return false;
            }
            diff &= diff - 1;
        }
        true
    };
    // counts[a] = number of admissible chains ∅ = I_0 ⊆ … ⊆ I_v = masks[a]
    let mut counts: Vec<u128> = masks.iter().map(|&a| u128::from(step_ok(0, a))).collect();
    for _ in 1..m {
        counts = masks
            .iter()
            .map(|&upper| {
                masks
                    .iter()
                    .zip(&counts)
                    .filter(|&(&lower, &c)| c != 0 && step_ok(lower, upper))
                    .map(|(_, &c)| c)
                    .sum()
            })
            .collect();
    }
    let at = masks.iter().position(|&a| a == full).expect("the whole poset is an ideal");
    Ok(counts[at])
}

/// Number of order-preserving maps `Π → {1, …, m}`, i.e. `ehr_𝒪(Π)(m - 1)`.
pub fn omega(poset: &Poset, m: u32) -> Result<u128, EhrhartError> {
    count_ideal_chains(poset, m, false)
}

/// Number of strictly order-preserving maps `Π → {1, …, m}`, i.e. the
/// interior lattice points of `(m + 1)·𝒪(Π)`.
pub fn omega_strict(poset: &Poset, m: u32) -> Result<u128, EhrhartError> {
    count_ideal_chains(poset, m, true)
}

/// `rank(Π̂)`, which equals the codegree of `𝒪(Π)`.
pub fn codegree_via_rank(poset: &Poset) -> u32 {
    poset.bounded().total_rank()
}

/// Exact Ehrhart polynomial; `coefficients()[p]` multiplies `k^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    coefficients: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn eval(&self, k: i64) -> BigRational {
        let k = BigRational::from_integer(BigInt::from(k));
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &k + c)
    }

    /// Value at `k` as an integer (Ehrhart polynomials are integer valued on
    /// the naturals).
    pub fn value(&self, k: i64) -> BigInt {
        let v = self.eval(k);
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    /// Interpolates the unique polynomial of degree `< values.len()` through
    /// `(k, values[k])` by Lagrange's formula.
    pub fn interpolate(values: &[BigInt]) -> Self {
        let n = values.len();
        let mut coefficients = vec![BigRational::zero(); n];
        for (i, value) in values.iter().enumerate() {
            // basis = Π_{j != i} (k - j), denominator = Π_{j != i} (i - j)
            let mut basis = vec![BigInt::one()];
            let mut denominator = BigInt::one();
            for j in (0..n).filter(|&j| j != i) {
                let mut next = vec![BigInt::zero(); basis.len() + 1];
                for (p, c) in basis.iter().enumerate() {
                    next[p + 1] += c;
                    next[p] -= c * BigInt::from(j);
                }
                basis = next;
                denominator *= BigInt::from(i as i64 - j as i64);
            }
            for (p, c) in basis.into_iter().enumerate() {
                coefficients[p] += BigRational::new(c * value, denominator.clone());
            }
        }
        while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        EhrhartPolynomial { coefficients }
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() && self.coefficients.len() > 1 {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let c = c.abs();
            match p {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => {}
                _ => write!(f, "({c})")?,
            }
            match p {
                0 => {}
                1 => f.write_str("k")?,
                _ => write!(f, "k^{p}")?,
            }
        }
        Ok(())
    }
}

/// Ehrhart polynomial of `𝒪(Π)` from the map counts at `k = 0..=d`,
/// re-checked against the count at `k = d + 1`.
pub fn ehrhart_polynomial(poset: &Poset, budget: usize) -> Result<EhrhartPolynomial, EhrhartError> {
    let d = poset.len();
    if d > budget {
        return Err(EhrhartError::BudgetExceeded { size: d, budget });
    }
    let values = (0..=d)
        .map(|k| omega(poset, k as u32 + 1).map(BigInt::from))
        .collect::<Result<Vec<_>, _>>()?;
    let poly = EhrhartPolynomial::interpolate(&values);
    let check = BigInt::from(omega(poset, d as u32 + 2)?);
    if poly.eval(d as i64 + 1) != BigRational::from_integer(check) {
        return Err(EhrhartError::InterpolationMismatch { k: d + 1 });
    }
    Ok(poly)
}

/// Numerator `h*_0 + … + h*_d z^d` of the Ehrhart series over `(1 - z)^{d+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HStarVector {
    entries: Vec<u128>,
}

impl HStarVector {
    /// Wraps raw entries; `entries.len() - 1` is the dimension.
    pub fn new(entries: Vec<u128>) -> Self {
        HStarVector { entries }
    }

    /// Binomial transform `h*_j = Σ_{i<=j} (-1)^i C(d+1, i) ehr(j - i)`.
    pub fn from_polynomial(poly: &EhrhartPolynomial, dimension: usize) -> Result<Self, EhrhartError> {
        let ehr: Vec<BigInt> = (0..=dimension as i64).map(|k| poly.value(k)).collect();
        let mut binomial = vec![BigInt::one()];
        for i in 1..=dimension + 1 {
            let prev = binomial[i - 1].clone();
            binomial.push(prev * BigInt::from(dimension + 2 - i) / BigInt::from(i));
        }
        let mut entries = Vec::with_capacity(dimension + 1);
        for j in 0..=dimension {
            let mut h = BigInt::zero();
            for i in 0..=j {
                let term = &binomial[i] * &ehr[j - i];
                if i % 2 == 0 {
                    h += term;
                } else {
                    h -= term;
                }
            }
            if h.is_negative() {
                return Err(EhrhartError::NegativeHStarEntry { index: j });
            }
            entries.push(h.to_u128().ok_or(EhrhartError::Overflow { index: j })?);
        }
        Ok(HStarVector { entries })
    }

    pub fn entries(&self) -> &[u128] {
        &self.entries
    }

    pub fn dimension(&self) -> usize {
        self.entries.len() - 1
    }

    /// `max{k : h*_k != 0}`.
    pub fn degree(&self) -> usize {
        self.entries.iter().rposition(|&h| h != 0).unwrap_or(0)
    }

    /// `d + 1 - degree`.
    pub fn codegree(&self) -> usize {
        self.dimension() + 1 - self.degree()
    }

    /// Polynomial product, padded or trimmed to `self.dim + other.dim + 1`
    /// entries.
    pub fn product(&self, other: &HStarVector) -> HStarVector {
        let mut entries = vec![0u128; self.dimension() + other.dimension() + 1];
        for (i, a) in self.entries.iter().enumerate() {
            for (j, b) in other.entries.iter().enumerate() {
                entries[i + j] += a * b;
            }
        }
        HStarVector { entries }
    }
}

/// h*-vector of `𝒪(Π)`.
pub fn hstar(poset: &Poset, budget: usize) -> Result<HStarVector, EhrhartError> {
    let poly = ehrhart_polynomial(poset, budget)?;
    HStarVector::from_polynomial(&poly, poset.len())
}

/// Pairs `(i, j)` violating `h*_i <= h*_j · h*_{i+j}` among those with
/// `h*_{i+j} > 0`. Level polytopes admit none.
pub fn stanley_level_inequalities(h: &HStarVector) -> Vec<(usize, usize)> {
    let s = h.degree();
    let e = h.entries();
    let mut violations = Vec::new();
    for i in 0..=s {
        for j in 0..=s - i {
            if e[i + j] > 0 && e[i] > e[j] * e[i + j] {
                violations.push((i, j));
            }
        }
    }
    violations
}

/// Whether `h*(Π₁ ◁ Π₂) = h*(Π₁) · h*(Π₂)`.
pub fn hstar_ordinal_sum_check(p1: &Poset, p2: &Poset, budget: usize) -> Result<bool, EhrhartError> {
    let sum = p1
        .ordinal_sum(p2, crate::poset::Collisions::Rename)
        .expect("renaming never collides");
    if sum.len() > budget {
        return Err(EhrhartError::BudgetExceeded { size: sum.len(), budget });
    }
    Ok(hstar(&sum, budget)? == hstar(p1, budget)?.product(&hstar(p2, budget)?))
}
