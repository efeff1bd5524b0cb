#![allow(dead_code)]

use lefschetz_core::monodromy::{transvection_matrix, Sign};
use lefschetz_core::{conjugate_word, hurwitz_move, Genus, HomologyClass, HurwitzDirection, SymplecticMatrix, Word};
use rand::Rng;

pub fn genus(g: u32) -> Genus {
    Genus::new(g).unwrap()
}

pub fn random_primitive<R: Rng>(rng: &mut R, g: Genus) -> HomologyClass {
    loop {
        let coords: Vec<i64> = (0..g.rank()).map(|_| rng.gen_range(-2..=2)).collect();
        let v = HomologyClass::from_ints(&coords).unwrap();
        if v.is_primitive() {
            return v;
        }
    }
}

/// Product of 1 to 5 random transvections.
pub fn random_symplectic<R: Rng>(rng: &mut R, g: Genus) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity(g);
    for _ in 0..rng.gen_range(1..=5) {
        let t = transvection_matrix(&random_primitive(rng, g)).unwrap();
        m = if rng.gen_bool(0.5) { t.compose(&m) } else { t.inverse().compose(&m) };
    }
    m
}

/// One random Hurwitz move, global conjugation, or cyclic rotation.
pub fn perturb<R: Rng>(rng: &mut R, w: &Word) -> Word {
    match rng.gen_range(0..3) {
        0 => {
            let i = rng.gen_range(1..w.len());
            let dir = if rng.gen_bool(0.5) { HurwitzDirection::Left } else { HurwitzDirection::Right };
            hurwitz_move(w, i, dir).unwrap()
        }
        1 => {
            let delta = random_primitive(rng, w.genus());
            let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            conjugate_word(w, &delta, sign).unwrap()
        }
        _ => w.rotated(rng.gen_range(0..w.len())),
    }
}
