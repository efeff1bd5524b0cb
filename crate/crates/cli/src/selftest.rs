//! The fixture table: known words and their characteristic numbers.

use std::fmt::Write as _;

use lefschetz_core::families::{genus1_word, hyperelliptic_word, word_a, word_b, word_c};
use lefschetz_core::invariants::BaseParity;
use lefschetz_core::{full_report, Genus, ReportOptions, Word};

struct Row {
    name: &'static str,
    word: Word,
    /// `(δ, σ, χ, c₁(λ), WP)`.
    numbers: (u64, i64, i64, i64, i64),
    parity: Option<BaseParity>,
}

fn table() -> Vec<Row> {
    let h3 = hyperelliptic_word(Genus::new(3).expect("3 > 0")).expect("genus 3 chain word");
    vec![
        Row { name: "A", word: word_a(), numbers: (20, -12, 16, 2, 4), parity: Some(BaseParity::Even) },
        Row { name: "B", word: word_b(), numbers: (30, -18, 26, 3, 6), parity: Some(BaseParity::Odd) },
        Row { name: "C", word: word_c(), numbers: (40, -24, 36, 4, 8), parity: Some(BaseParity::Even) },
        Row { name: "E(1)", word: genus1_word(1).expect("k = 1"), numbers: (12, -8, 12, 1, 0), parity: None },
        Row { name: "H(3)", word: h3, numbers: (56, -32, 48, 6, 16), parity: None },
    ]
}

/// Rendered table and whether every row matched.
pub fn run() -> (String, bool) {
    let mut out = String::new();
    let mut all = true;
    for row in table() {
        let (ok, got) = match full_report(&row.word, &ReportOptions { assume_hyperelliptic: row.word.genus().get() >= 2 }) {
            Ok(r) => {
                let numbers = (r.stats.r, r.sigma, r.chi, r.hodge_degree, r.wp_pairing);
                (numbers == row.numbers && r.double_cover_base == row.parity, format!("{numbers:?} {:?}", r.double_cover_base))
            }
            Err(e) => (false, e.to_string()),
        };
        all &= ok;
        let status = if ok { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {}: (delta, sigma, chi, c1, wp) = {got}", row.name);
    }
    (out, all)
}
