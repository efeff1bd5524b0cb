//! Signature of the total space via the Meyer signature cocycle.
//!
//! For `A, B ∈ Sp_{2g}(Z)` let
//!
//! ```text
//! V = { (x, y) ∈ Q^{2g} ⊕ Q^{2g} : (A⁻¹ − I) x + (B − I) y = 0 }
//! ⟨(x₁, y₁), (x₂, y₂)⟩ = ⟨x₁ + y₁, (I − B) y₂⟩
//! ```
//!
//! The pairing is symmetric on `V` and its signature is the signature of a
//! surface bundle over the pair of pants with boundary monodromies `A`, `B`
//! and `(AB)⁻¹`. Accumulating it along the prefix products of a word gives
//! the signature of the complement of the singular fibres; each separating
//! singular fibre then contributes `−1` and each nonseparating one `0`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::monodromy::{require_relation, twist_matrices, SymplecticMatrix, Word};
use crate::snf::smith_normal_form;
use crate::surface::pairing;

/// Global orientation of the cocycle. With transvections `a ↦ a + ⟨a, δ⟩δ`
/// as positive twists, `+1` makes the chain word `(c₁ ⋯ c₅)⁶` have
/// signature `−18`.
pub const COCYCLE_ORIENTATION: i64 = 1;

/// A symmetric matrix over `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalForm {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalForm {
    /// Returns `None` unless the matrix is square and exactly symmetric.
    pub fn new(n: usize, entries: Vec<BigRational>) -> Option<Self> {
        if entries.len() != n * n {
            return None;
        }
        let symmetric = (0..n).all(|i| (0..i).all(|j| entries[i * n + j] == entries[j * n + i]));
        symmetric.then_some(RationalForm { n, entries })
    }

    pub fn from_int_matrix(m: &IntMatrix) -> Option<Self> {
        if !m.is_square() {
            return None;
        }
        let n = m.rows();
        let entries = (0..n * n).map(|k| BigRational::from_integer(m[(k / n, k % n)].clone())).collect();
        Self::new(n, entries)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }
}

/// Positive minus negative entries after congruence diagonalization.
pub fn form_signature(form: &RationalForm) -> i64 {
    let n = form.n;
    let mut a = form.entries.clone();
    let idx = |i: usize, j: usize| i * n + j;
    let mut signature = 0i64;

    for k in 0..n {
        let pivot = (k..n).find(|&p| !a[idx(p, p)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish: replace e_i by
                // e_i + e_j for some a_ij ≠ 0, making the new diagonal 2a_ij.
                let Some((i, j)) = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[idx(i, j)].is_zero())
                else {
                    break;
                };
                for c in 0..n {
                    let v = a[idx(j, c)].clone();
                    a[idx(i, c)] += v;
                }
                for r in 0..n {
                    let v = a[idx(r, j)].clone();
                    a[idx(r, i)] += v;
                }
                i
            }
        };
        if p != k {
            for c in 0..n {
                a.swap(idx(p, c), idx(k, c));
            }
            for r in 0..n {
                a.swap(idx(r, p), idx(r, k));
            }
        }

        let d = a[idx(k, k)].clone();
        signature += match d.cmp(&BigRational::zero()) {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => unreachable!("pivot is nonzero"),
        };
        for i in k + 1..n {
            if a[idx(i, k)].is_zero() {
                continue;
            }
            let f = &a[idx(i, k)] / &d;
            for j in k + 1..n {
                let delta = &f * &a[idx(k, j)];
                a[idx(i, j)] -= delta;
            }
        }
        for i in k + 1..n {
            a[idx(i, k)] = BigRational::zero();
            a[idx(k, i)] = BigRational::zero();
        }
    }
    signature
}

/// The Gram matrix of the Meyer pairing on an integer basis of `V`.
pub fn meyer_form(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<IntMatrix> {
    if a.genus() != b.genus() {
        return Err(Error::GenusMismatch(a.genus().get(), b.genus().get()));
    }
    let n = a.genus().rank();
    let a_inv = a.inverse();
    let (ai, bm) = (a_inv.matrix(), b.matrix());
    let constraint = IntMatrix::from_fn(n, 2 * n, |i, j| {
        let (m, col) = if j < n { (ai, j) } else { (bm, j - n) };
        let e = m[(i, col)].clone();
        if i == col { e - 1 } else { e }
    });
    let basis = smith_normal_form(&constraint).kernel_basis();

    // (I − B) y for each basis vector, and x + y.
    let images: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|v| {
            let y = &v[n..];
            let by = bm.mul_vec(y);
            y.iter().zip(by).map(|(yi, byi)| yi - byi).collect()
        })
        .collect();
    let sums: Vec<Vec<BigInt>> = basis.iter().map(|v| (0..n).map(|i| &v[i] + &v[n + i]).collect()).collect();

    let k = basis.len();
    Ok(IntMatrix::from_fn(k, k, |i, j| pairing(&sums[i], &images[j])))
}

/// Meyer's cocycle `σ(A, B)`.
pub fn cocycle(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<i64> {
    if a.genus() != b.genus() {
        return Err(Error::GenusMismatch(a.genus().get(), b.genus().get()));
    }
    if a.is_identity() || b.is_identity() {
        return Ok(0);
    }
    let gram = meyer_form(a, b)?;
    let form = RationalForm::from_int_matrix(&gram).expect("Meyer pairing is symmetric on V");
    Ok(COCYCLE_ORIENTATION * form_signature(&form))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureBreakdown {
    /// Relative signature of the fibration away from the singular fibres.
    pub sigma_w: i64,
    /// Number of separating vanishing cycles.
    pub s: u64,
    pub sigma_x: i64,
    /// `σ(T_{i−1} ⋯ T₁, T_i)` for `i = 2 … r`.
    pub cocycle_terms: Vec<i64>,
}

/// `Σ_{i=2}^{r} σ(T_{i−1} ⋯ T₁, T_i)` over a word satisfying the relation.
pub fn boundary_signature(w: &Word) -> Result<(i64, Vec<i64>)> {
    require_relation(w)?;
    Ok(boundary_signature_unchecked(w))
}

pub(crate) fn boundary_signature_unchecked(w: &Word) -> (i64, Vec<i64>) {
    let mats = twist_matrices(w);
    let mut terms = Vec::with_capacity(mats.len().saturating_sub(1));
    let mut prefix = mats[0].clone();
    for t in &mats[1..] {
        terms.push(cocycle(&prefix, t).expect("same genus"));
        prefix = t.compose(&prefix);
    }
    (terms.iter().sum(), terms)
}

pub fn total_signature(w: &Word) -> Result<SignatureBreakdown> {
    let (sigma_w, cocycle_terms) = boundary_signature(w)?;
    let s = w.twists().iter().filter(|t| t.is_separating()).count() as u64;
    Ok(SignatureBreakdown { sigma_w, s, sigma_x: sigma_w - s as i64, cocycle_terms })
}

impl RationalForm {
    /// Diagonal form with the given integer entries.
    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let m = IntMatrix::from_fn(n, n, |i, j| if i == j { BigInt::from(entries[i]) } else { BigInt::zero() });
        Self::from_int_matrix(&m).expect("diagonal is symmetric")
    }
}
