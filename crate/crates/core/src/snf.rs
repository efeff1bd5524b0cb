//! Smith normal form over the integers.
//!
//! Pivoting is deterministic: at each stage the nonzero entry of smallest
//! absolute value in the trailing block is chosen, ties broken by the
//! leftmost column and then the topmost row.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// `D = U · M · V` with `U`, `V` unimodular and `D` diagonal,
/// `d₁ | d₂ | …`, all `dᵢ ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// `V⁻¹`, maintained alongside `V`.
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d₁, …, d_min(m,n)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }

    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect()
    }

    /// Columns of `V` past the rank: a basis of the integer kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.v.cols()).map(|j| self.v.column(j)).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut calc = Calc {
        d: m.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        if !calc.reduce_stage(t) {
            break;
        }
    }
    SmithForm { u: calc.u, d: calc.d, v: calc.v, v_inv: calc.v_inv }
}

struct Calc {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Calc {
    fn row_swap(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn row_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
    }

    fn col_add(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        // V' = V E with E = I + k e_src e_dstᵀ, so V'⁻¹ = (I − k e_src e_dstᵀ) V⁻¹.
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for j in t..self.d.cols() {
            for i in t..self.d.rows() {
                let e = &self.d[(i, j)];
                if e.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.d[(bi, bj)].magnitude() <= e.magnitude() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Clears row and column `t` and enforces divisibility of the trailing
    /// block. Returns false if the trailing block is zero.
    fn reduce_stage(&mut self, t: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.pivot(t) else {
                return false;
            };
            self.row_swap(t, pi);
            self.col_swap(t, pj);
            let p = self.d[(t, t)].clone();

            let mut clean = true;
            for i in t + 1..self.d.rows() {
                let q = self.d[(i, t)].div_floor(&p);
                self.row_add(i, t, &-q);
                clean &= self.d[(i, t)].is_zero();
            }
            for j in t + 1..self.d.cols() {
                let q = self.d[(t, j)].div_floor(&p);
                self.col_add(j, t, &-q);
                clean &= self.d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let offender = (t + 1..self.d.rows())
                .find(|&i| (t + 1..self.d.cols()).any(|j| !self.d[(i, j)].is_multiple_of(&p)));
            if let Some(i) = offender {
                self.row_add(t, i, &BigInt::one());
                continue;
            }

            if p.is_negative() {
                self.d.negate_row(t);
                self.u.negate_row(t);
            }
            return true;
        }
    }
}
