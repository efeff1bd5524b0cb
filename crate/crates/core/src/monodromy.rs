//! Homological monodromy: Picard–Lefschetz transvections, word products,
//! the global relation, and moves on words that preserve the fibration.
//!
//! Twists compose with the first twist applied first, so the monodromy of
//! `δ₁ δ₂ … δ_r` is the product `T_r ⋯ T₂ T₁`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::surface::{pairing, validate_cycle_class, CycleKind, Genus, HomologyClass, IntersectionForm};

/// An element of `Sp_{2g}(Z)`: `Mᵀ J M = J`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    genus: Genus,
    m: IntMatrix,
}

impl SymplecticMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() || m.rows() == 0 || !m.rows().is_multiple_of(2) {
            return Err(Error::NotSymplectic);
        }
        let genus = Genus::new((m.rows() / 2) as u32)?;
        let j = IntersectionForm::new(genus).matrix();
        if &(&m.transpose() * &j) * &m != j {
            return Err(Error::NotSymplectic);
        }
        Ok(SymplecticMatrix { genus, m })
    }

    pub fn identity(genus: Genus) -> Self {
        SymplecticMatrix { genus, m: IntMatrix::identity(genus.rank()) }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }

    /// `M⁻¹ = −J Mᵀ J`.
    pub fn inverse(&self) -> Self {
        let j = IntersectionForm::new(self.genus).matrix();
        let inv = &(&j * &self.m.transpose()) * &j;
        SymplecticMatrix { genus: self.genus, m: inv.neg() }
    }

    pub fn compose(&self, rhs: &SymplecticMatrix) -> Self {
        assert_eq!(self.genus, rhs.genus, "genus mismatch in symplectic product");
        SymplecticMatrix { genus: self.genus, m: &self.m * &rhs.m }
    }

    pub fn apply(&self, v: &HomologyClass) -> HomologyClass {
        HomologyClass::new(self.m.mul_vec(v.coords())).expect("symplectic image has even length")
    }

    /// Replaces `self` by `T_δ · self` without forming `T_δ`.
    pub(crate) fn twist_left(&mut self, delta: &[BigInt]) {
        // T_δ x = x + ⟨x, δ⟩ δ applied column by column.
        let n = self.m.rows();
        for col in 0..n {
            let column = self.m.column(col);
            let coeff = pairing(&column, delta);
            if coeff.is_zero() {
                continue;
            }
            for (row, d) in delta.iter().enumerate() {
                self.m[(row, col)] += &coeff * d;
            }
        }
    }
}

impl fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp{}({})", self.genus.rank(), self.m)
    }
}

/// One Dehn twist of a factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Twist {
    /// Twist about a nonseparating curve with the given primitive class.
    Nonseparating(HomologyClass),
    /// Twist about a separating curve cutting off genus `h`.
    Separating(u32),
}

impl Twist {
    pub fn nonseparating(class: HomologyClass) -> Result<Self> {
        match validate_cycle_class(&class)? {
            CycleKind::Nonseparating => Ok(Twist::Nonseparating(class)),
            CycleKind::Separating => Err(Error::ZeroNonseparating),
        }
    }

    pub fn kind(&self) -> CycleKind {
        match self {
            Twist::Nonseparating(_) => CycleKind::Nonseparating,
            Twist::Separating(_) => CycleKind::Separating,
        }
    }

    pub fn is_separating(&self) -> bool {
        matches!(self, Twist::Separating(_))
    }

    /// Vanishing-cycle class; separating curves are nullhomologous.
    pub fn class(&self, genus: Genus) -> HomologyClass {
        match self {
            Twist::Nonseparating(c) => c.clone(),
            Twist::Separating(_) => HomologyClass::zero(genus),
        }
    }

    fn validate(&self, genus: Genus) -> Result<()> {
        match self {
            Twist::Nonseparating(c) => {
                if c.coords().len() != genus.rank() {
                    return Err(Error::LengthMismatch { expected: genus.rank(), actual: c.coords().len() });
                }
                match validate_cycle_class(c)? {
                    CycleKind::Nonseparating => Ok(()),
                    CycleKind::Separating => Err(Error::ZeroNonseparating),
                }
            }
            &Twist::Separating(h) => {
                if genus.get() == 1 {
                    return Err(Error::SeparatingAtGenusOne);
                }
                let max = genus.max_separating_type();
                if h == 0 || h > max {
                    return Err(Error::SeparatingTypeOutOfRange { h, max, genus: genus.get() });
                }
                Ok(())
            }
        }
    }

    /// Image of this twist's curve under `T_δ^{±1}`.
    fn transformed(&self, delta: &HomologyClass, inverse: bool) -> Twist {
        match self {
            Twist::Nonseparating(c) => Twist::Nonseparating(transvect(delta, c, inverse)),
            Twist::Separating(h) => Twist::Separating(*h),
        }
    }
}

/// A positive factorization: genus plus an ordered, nonempty list of twists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    genus: Genus,
    twists: Vec<Twist>,
}

impl Word {
    pub fn new(genus: Genus, twists: Vec<Twist>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::EmptyWord);
        }
        for t in &twists {
            t.validate(genus)?;
        }
        Ok(Word { genus, twists })
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn twists(&self) -> &[Twist] {
        &self.twists
    }

    /// Number of critical fibres `r`.
    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    /// Vanishing-cycle classes `δ₁ … δ_r`, zero for separating twists.
    pub fn classes(&self) -> Vec<HomologyClass> {
        self.twists.iter().map(|t| t.class(self.genus)).collect()
    }

    /// Cyclic rotation moving the first `k` twists to the end.
    pub fn rotated(&self, k: usize) -> Word {
        let mut twists = self.twists.clone();
        let len = twists.len();
        twists.rotate_left(k % len);
        Word { genus: self.genus, twists }
    }

    /// Concatenation; genera must agree.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus.get(), other.genus.get()));
        }
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        Ok(Word { genus: self.genus, twists })
    }
}

fn transvect(delta: &HomologyClass, a: &HomologyClass, inverse: bool) -> HomologyClass {
    let mut coeff = pairing(a.coords(), delta.coords());
    if inverse {
        coeff = -coeff;
    }
    a.add_scaled(&coeff, delta)
}

/// Matrix of `a ↦ a + ⟨a, δ⟩δ`. The zero class gives the identity.
pub fn transvection_matrix(delta: &HomologyClass) -> Result<SymplecticMatrix> {
    validate_cycle_class(delta)?;
    let genus = delta.genus();
    let mut m = SymplecticMatrix::identity(genus);
    m.twist_left(delta.coords());
    Ok(m)
}

pub fn apply_twist(delta: &HomologyClass, a: &HomologyClass) -> Result<HomologyClass> {
    validate_cycle_class(delta)?;
    if delta.coords().len() != a.coords().len() {
        return Err(Error::LengthMismatch { expected: delta.coords().len(), actual: a.coords().len() });
    }
    Ok(transvect(delta, a, false))
}

/// Transvection matrices of the twists, in word order.
pub fn twist_matrices(w: &Word) -> Vec<SymplecticMatrix> {
    w.twists
        .iter()
        .map(|t| match t {
            Twist::Nonseparating(c) => transvection_matrix(c).expect("word classes are validated"),
            Twist::Separating(_) => SymplecticMatrix::identity(w.genus),
        })
        .collect()
}

/// `T_r ⋯ T₁`.
pub fn word_monodromy(w: &Word) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity(w.genus);
    for t in &w.twists {
        if let Twist::Nonseparating(c) = t {
            m.twist_left(c.coords());
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationCheck {
    Pass,
    Fail(SymplecticMatrix),
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        matches!(self, RelationCheck::Pass)
    }
}

/// Tests whether the word's homological monodromy is trivial.
///
/// This is only a necessary condition for the word to present a Lefschetz
/// fibration over the sphere: Torelli elements are invisible on homology,
/// so a passing word need not be a relation in the mapping class group.
pub fn check_global_relation(w: &Word) -> RelationCheck {
    let m = word_monodromy(w);
    if m.is_identity() {
        RelationCheck::Pass
    } else {
        RelationCheck::Fail(m)
    }
}

pub(crate) fn require_relation(w: &Word) -> Result<()> {
    match check_global_relation(w) {
        RelationCheck::Pass => Ok(()),
        RelationCheck::Fail(m) => Err(Error::RelationFailed(Box::new(m.into_matrix()))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzDirection {
    Left,
    Right,
}

/// Elementary transformation at the adjacent pair `(i, i + 1)`, 1-based.
///
/// `Right` sends `(x, y)` to `(y, T_y(x))` and `Left` sends `(x, y)` to
/// `(T_x⁻¹(y), x)`; they are mutually inverse and both keep `T_r ⋯ T₁` fixed.
pub fn hurwitz_move(w: &Word, i: usize, dir: HurwitzDirection) -> Result<Word> {
    if i == 0 || i >= w.len() {
        return Err(Error::PositionOutOfRange { position: i, len: w.len() });
    }
    let (x, y) = (&w.twists[i - 1], &w.twists[i]);
    let g = w.genus;
    let (first, second) = match dir {
        HurwitzDirection::Right => (y.clone(), x.transformed(&y.class(g), false)),
        HurwitzDirection::Left => (y.transformed(&x.class(g), true), x.clone()),
    };
    let mut twists = w.twists.clone();
    twists[i - 1] = first;
    twists[i] = second;
    Ok(Word { genus: g, twists })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Applies `T_δ^{±1}` to every vanishing cycle. The monodromy becomes
/// `T_δ^{±1} · M · T_δ^{∓1}`.
pub fn conjugate_word(w: &Word, delta: &HomologyClass, sign: Sign) -> Result<Word> {
    validate_cycle_class(delta)?;
    if delta.coords().len() != w.genus.rank() {
        return Err(Error::LengthMismatch { expected: w.genus.rank(), actual: delta.coords().len() });
    }
    let inverse = sign == Sign::Minus;
    let twists = w.twists.iter().map(|t| t.transformed(delta, inverse)).collect();
    Ok(Word { genus: w.genus, twists })
}
