//! The reference genus-g fibre: first homology, its intersection pairing,
//! and the standard chain of curves.
//!
//! Coordinates are ordered `(a₁, b₁, …, a_g, b_g)` and the intersection
//! form is block diagonal with blocks `[[0, 1], [-1, 0]]`, so `⟨a_i, b_i⟩ = 1`.
//!
//! Chain curves `c₁ … c_{2g+1}` use the convention
//!
//! ```text
//! c₁ = a₁,   c_{2i} = b_i,   c_{2i+1} = a_{i+1} − a_i  (1 ≤ i < g),   c_{2g+1} = a_g
//! ```
//!
//! which gives `⟨c_k, c_{k+1}⟩ = ±1` and `⟨c_i, c_j⟩ = 0` for `|i − j| ≥ 2`,
//! and `c_{2g+1} = c₁ + c₃ + … + c_{2g−1}` as on the actual surface.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Fibre genus, always at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidGenus(0));
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Rank of `H₁(F)`, i.e. `2g`.
    pub fn rank(self) -> usize {
        2 * self.0 as usize
    }

    /// Largest separating type `⌊g/2⌋`.
    pub fn max_separating_type(self) -> u32 {
        self.0 / 2
    }

    /// Number of chain curves, `2g + 1`.
    pub fn chain_length(self) -> u32 {
        2 * self.0 + 1
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A class in `H₁(F; Z)`, coordinates `(a₁, b₁, …, a_g, b_g)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    coords: Vec<BigInt>,
}

/// Whether a vanishing-cycle class comes from a separating or a
/// nonseparating simple closed curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleKind {
    Separating,
    Nonseparating,
}

impl HomologyClass {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() || !coords.len().is_multiple_of(2) {
            let expected = (coords.len() + 1).max(2) / 2 * 2;
            return Err(Error::LengthMismatch { expected, actual: coords.len() });
        }
        Ok(HomologyClass { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero(g: Genus) -> Self {
        HomologyClass { coords: vec![BigInt::zero(); g.rank()] }
    }

    pub fn unit(g: Genus, index: usize) -> Self {
        let mut v = Self::zero(g);
        v.coords[index] = BigInt::one();
        v
    }

    pub fn genus(&self) -> Genus {
        Genus((self.coords.len() / 2) as u32)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// gcd of the coordinates; zero for the zero class.
    pub fn content(&self) -> BigInt {
        self.coords.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn add_scaled(&self, factor: &BigInt, other: &HomologyClass) -> HomologyClass {
        assert_eq!(self.coords.len(), other.coords.len());
        HomologyClass {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + factor * b).collect(),
        }
    }

    pub fn neg(&self) -> HomologyClass {
        HomologyClass { coords: self.coords.iter().map(|c| -c).collect() }
    }

    fn check_same_genus(&self, other: &HomologyClass) -> Result<()> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::LengthMismatch { expected: self.coords.len(), actual: other.coords.len() });
        }
        Ok(())
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The intersection form `J` of the reference fibre.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionForm {
    genus: Genus,
}

impl IntersectionForm {
    pub fn new(genus: Genus) -> Self {
        IntersectionForm { genus }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn matrix(&self) -> IntMatrix {
        let mut j = IntMatrix::zeros(self.genus.rank(), self.genus.rank());
        for i in 0..self.genus.get() as usize {
            j[(2 * i, 2 * i + 1)] = BigInt::one();
            j[(2 * i + 1, 2 * i)] = -BigInt::one();
        }
        j
    }
}

/// The unit vectors `a₁, b₁, …, a_g, b_g`.
pub fn standard_basis(g: Genus) -> Vec<HomologyClass> {
    (0..g.rank()).map(|i| HomologyClass::unit(g, i)).collect()
}

/// Symplectic pairing on raw coordinate slices of equal even length.
pub fn pairing(u: &[BigInt], v: &[BigInt]) -> BigInt {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = BigInt::zero();
    for i in (0..u.len()).step_by(2) {
        acc += &u[i] * &v[i + 1] - &u[i + 1] * &v[i];
    }
    acc
}

/// `⟨u, v⟩ = uᵀ J v`.
pub fn intersection(u: &HomologyClass, v: &HomologyClass) -> Result<BigInt> {
    u.check_same_genus(v)?;
    Ok(pairing(&u.coords, &v.coords))
}

/// Homology class of the chain curve `c_k`, `1 ≤ k ≤ 2g + 1`.
pub fn chain_curve_class(g: Genus, k: u32) -> Result<HomologyClass> {
    let max = g.chain_length();
    if k == 0 || k > max {
        return Err(Error::ChainIndexOutOfRange { k, max });
    }
    let mut v = HomologyClass::zero(g);
    let gi = g.get();
    if k.is_multiple_of(2) {
        // b_{k/2}
        v.coords[(k - 1) as usize] = BigInt::one();
    } else if k == 1 {
        v.coords[0] = BigInt::one();
    } else if k == max {
        v.coords[2 * (gi as usize - 1)] = BigInt::one();
    } else {
        // a_{i+1} - a_i with k = 2i + 1
        let i = ((k - 1) / 2) as usize;
        v.coords[2 * i] = BigInt::one();
        v.coords[2 * (i - 1)] = -BigInt::one();
    }
    Ok(v)
}

/// Classify a vanishing-cycle class. Nonzero imprimitive classes are
/// rejected: no simple closed curve represents them.
pub fn validate_cycle_class(v: &HomologyClass) -> Result<CycleKind> {
    let content = v.content();
    if content.is_zero() {
        Ok(CycleKind::Separating)
    } else if content.is_one() {
        Ok(CycleKind::Nonseparating)
    } else {
        Err(Error::ImprimitiveClass(v.to_string(), content.abs().to_string()))
    }
}
