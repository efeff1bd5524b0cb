//! Named positive relations and ways of combining them.

use crate::error::{Error, Result};
use crate::monodromy::{Twist, Word};
use crate::surface::{chain_curve_class, Genus};

fn chain_word(genus: Genus, letters: &[u32], power: usize) -> Word {
    let twists = letters
        .iter()
        .map(|&k| Twist::Nonseparating(chain_curve_class(genus, k).expect("chain index in range")))
        .collect::<Vec<_>>();
    let word = Word::new(genus, twists).expect("chain classes are primitive");
    word_power(&word, power).expect("power is positive")
}

fn genus_two() -> Genus {
    Genus::new(2).expect("2 > 0")
}

/// `(c₁c₂c₃c₄c₅c₅c₄c₃c₂c₁)²`, 20 twists.
pub fn word_a() -> Word {
    chain_word(genus_two(), &[1, 2, 3, 4, 5, 5, 4, 3, 2, 1], 2)
}

/// `(c₁c₂c₃c₄c₅)⁶`, 30 twists.
pub fn word_b() -> Word {
    chain_word(genus_two(), &[1, 2, 3, 4, 5], 6)
}

/// `(c₁c₂c₃c₄)¹⁰`, 40 twists.
pub fn word_c() -> Word {
    chain_word(genus_two(), &[1, 2, 3, 4], 10)
}

/// The chain relation `(c₁ c₂ ⋯ c_{2g+1})^{2g+2}`; at genus 2 this is word B.
pub fn hyperelliptic_word(genus: Genus) -> Result<Word> {
    if genus.get() < 2 {
        return Err(Error::WrongGenus { required: 2, actual: genus.get() });
    }
    let letters: Vec<u32> = (1..=genus.chain_length()).collect();
    Ok(chain_word(genus, &letters, 2 * genus.get() as usize + 2))
}

/// Elliptic fibration word `(a₁ b₁)^{6k}`, 12k twists.
pub fn genus1_word(k: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    Ok(chain_word(Genus::new(1)?, &[1, 2], 6 * k))
}

pub fn fibre_sum(w1: &Word, w2: &Word) -> Result<Word> {
    w1.concat(w2)
}

/// `k`-fold concatenation.
pub fn word_power(w: &Word, k: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let total = (w.len() as u64).saturating_mul(k as u64);
    if total > crate::dsl::MAX_TWISTS {
        return Err(Error::WordTooLong(total));
    }
    let twists = w.twists().iter().cloned().cycle().take(w.len() * k).collect();
    Word::new(w.genus(), twists)
}
