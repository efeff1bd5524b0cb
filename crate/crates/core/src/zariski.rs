//! Homology of the total space from the Lefschetz complex
//!
//! ```text
//! 0 → H₁(F) --φ--> Zʳ --ψ--> H₁(F) → 0
//! ```
//!
//! with `φ(u)_i = ⟨T_{i−1} ⋯ T₁ u, δ_i⟩` and `ψ(e_i) = δ_i`. Then
//! `H₁(X) = coker ψ`, `H₃(X) ≅ ker φ`, and `ker ψ / im φ` is `H₂(X)` modulo
//! the fibre and section classes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::monodromy::{require_relation, SymplecticMatrix, Twist, Word};
use crate::snf::smith_normal_form;
use crate::surface::pairing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiComplex {
    /// `r × 2g`
    pub phi: IntMatrix,
    /// `2g × r`
    pub psi: IntMatrix,
    pub word: Word,
}

/// Betti numbers and torsion of the total space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub betti: [u64; 5],
    #[serde(serialize_with = "serialize_factors")]
    pub torsion_h1: Vec<BigInt>,
    #[serde(serialize_with = "serialize_factors")]
    pub torsion_h2: Vec<BigInt>,
    /// `b₂` includes a fibre class and an assumed section class.
    pub section_assumed: bool,
}

/// Invariant factors as JSON integers; anything beyond `u64` falls back to
/// a decimal string.
fn serialize_factors<S: serde::Serializer>(factors: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    #[serde(untagged)]
    enum Factor {
        Small(u64),
        Big(String),
    }
    s.collect_seq(factors.iter().map(|d| match u64::try_from(d) {
        Ok(x) => Factor::Small(x),
        Err(_) => Factor::Big(d.to_string()),
    }))
}

impl HomologyReport {
    pub fn euler_characteristic(&self) -> i64 {
        let b = self.betti.map(|x| x as i64);
        b[0] - b[1] + b[2] - b[3] + b[4]
    }
}

/// Builds `φ` and `ψ` without checking the relation.
pub fn build_complex_unchecked(w: &Word) -> ZariskiComplex {
    let g = w.genus();
    let n = g.rank();
    let r = w.len();
    let classes = w.classes();
    let psi = IntMatrix::from_fn(n, r, |i, j| classes[j].coords()[i].clone());

    // Row i is the functional u ↦ ⟨P u, δ_i⟩, P = T_{i−1} ⋯ T₁.
    let mut phi = IntMatrix::zeros(r, n);
    let mut prefix = SymplecticMatrix::identity(g);
    for (i, twist) in w.twists().iter().enumerate() {
        if let Twist::Nonseparating(delta) = twist {
            for k in 0..n {
                phi[(i, k)] = pairing(&prefix.matrix().column(k), delta.coords());
            }
            prefix.twist_left(delta.coords());
        }
    }
    ZariskiComplex { phi, psi, word: w.clone() }
}

/// Builds the complex, requiring the global relation so that `ψ ∘ φ = 0`.
pub fn build_complex(w: &Word) -> Result<ZariskiComplex> {
    require_relation(w)?;
    Ok(build_complex_unchecked(w))
}

impl ZariskiComplex {
    pub fn composite_is_zero(&self) -> bool {
        (&self.psi * &self.phi).is_zero()
    }

    pub fn homology(&self) -> HomologyReport {
        let n = self.psi.rows();
        let r = self.psi.cols();

        let psi_snf = smith_normal_form(&self.psi);
        let phi_snf = smith_normal_form(&self.phi);
        let rank_psi = psi_snf.rank();
        let rank_phi = phi_snf.rank();

        let b1 = (n - rank_psi) as u64;
        let b3 = (n - rank_phi) as u64;

        // Coordinates of im φ in the kernel basis of ψ: the last r − rank ψ
        // rows of V⁻¹ φ (the first rank ψ rows vanish because ψφ = 0).
        let coords = &psi_snf.v_inv * &self.phi;
        debug_assert!((0..rank_psi).all(|i| coords.row(i).iter().all(Zero::is_zero)));
        let k = r - rank_psi;
        let relations = IntMatrix::from_fn(k, n, |i, j| coords[(rank_psi + i, j)].clone());
        let g_snf = smith_normal_form(&relations);
        let rank_g = k - g_snf.rank();

        HomologyReport {
            betti: [1, b1, rank_g as u64 + 2, b3, 1],
            torsion_h1: psi_snf.torsion(),
            torsion_h2: g_snf.torsion(),
            section_assumed: true,
        }
    }
}

/// Full homology of the total space of a word satisfying the relation.
pub fn homology_report(w: &Word) -> Result<HomologyReport> {
    Ok(build_complex(w)?.homology())
}
