//! Characteristic numbers of the total space and the moduli-theoretic
//! identities they satisfy.
//!
//! The degree of the Hodge bundle along the classifying sphere is defined
//! through `σ = 4⟨c₁(λ)⟩ − δ`, and the Weil–Petersson volume (in units of
//! `2π²`) through `12⟨c₁(λ)⟩ − δ`. Everything else in an [`InvariantReport`]
//! is either computed directly from the word or checked against these.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monodromy::{check_global_relation, RelationCheck, Twist, Word};
use crate::signature::{total_signature, SignatureBreakdown};
use crate::zariski::{build_complex, HomologyReport};

/// Counts of vanishing cycles by type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordStats {
    pub genus: u32,
    /// Number of critical fibres `δ`.
    pub r: u64,
    /// Nonseparating count `δ₀`.
    pub n: u64,
    /// Separating count.
    pub s: u64,
    /// `δ_h` for `h = 1 … ⌊g/2⌋`; every type is listed, including zeros.
    pub s_by_type: BTreeMap<u32, u64>,
    /// `(n + 2s)/10`, genus two only.
    #[serde(serialize_with = "serialize_ratio")]
    pub m: Option<Ratio<u64>>,
}

fn serialize_ratio<S: Serializer>(m: &Option<Ratio<u64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match m {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

pub fn word_stats(w: &Word) -> WordStats {
    let genus = w.genus();
    let mut s_by_type: BTreeMap<u32, u64> = (1..=genus.max_separating_type()).map(|h| (h, 0)).collect();
    let mut n = 0;
    for t in w.twists() {
        match t {
            Twist::Nonseparating(_) => n += 1,
            Twist::Separating(h) => *s_by_type.entry(*h).or_default() += 1,
        }
    }
    let s: u64 = s_by_type.values().sum();
    let m = (genus.get() == 2).then(|| Ratio::new(n + 2 * s, 10));
    WordStats { genus: genus.get(), r: w.len() as u64, n, s, s_by_type, m }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Pass,
    Fail,
}

/// One named consistency check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: VerdictStatus,
    pub detail: String,
}

impl Verdict {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        let status = if pass { VerdictStatus::Pass } else { VerdictStatus::Fail };
        Verdict { name: name.to_string(), status, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == VerdictStatus::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            VerdictStatus::Pass => "PASS",
            VerdictStatus::Fail => "FAIL",
        };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

/// `χ(X) = χ(S²)χ(F) + δ = 4 − 4g + r`.
pub fn euler_characteristic(w: &Word) -> i64 {
    4 - 4 * w.genus().get() as i64 + w.len() as i64
}

/// `⟨c₁(λ), S²⟩ = (σ + r)/4`; anything but an integer means the word or
/// the signature computation is inconsistent.
pub fn hodge_degree_from(sigma: i64, r: u64) -> Result<i64> {
    let total = sigma + r as i64;
    if total.rem_euclid(4) != 0 {
        return Err(Error::NonIntegralHodgeDegree(total));
    }
    Ok(total / 4)
}

pub fn hodge_degree(w: &Word) -> Result<i64> {
    hodge_degree_from(total_signature(w)?.sigma_x, w.len() as u64)
}

/// Weil–Petersson volume in units of `2π²`: `12⟨c₁(λ)⟩ − δ`.
pub fn wp_pairing_from(hodge_degree: i64, r: u64) -> i64 {
    12 * hodge_degree - r as i64
}

pub fn wp_pairing(w: &Word) -> Result<i64> {
    Ok(wp_pairing_from(hodge_degree(w)?, w.len() as u64))
}

/// `−(3n + s)/5`.
pub fn genus2_fractional_signature(n: u64, s: u64) -> Ratio<i64> {
    Ratio::new(-(3 * n as i64 + s as i64), 5)
}

/// Abelianization constraint on the twist counts: `12 | n` at genus one,
/// `10 | n + 2s` at genus two, vacuous from genus three on.
pub fn genus2_divisibility(genus: u32, n: u64, s: u64) -> Verdict {
    const NAME: &str = "divisibility";
    match genus {
        1 => Verdict::new(NAME, n.is_multiple_of(12), format!("genus 1: n = {n}, need 12 | n")),
        2 => Verdict::new(NAME, (n + 2 * s).is_multiple_of(10), format!("genus 2: n + 2s = {}, need 10 | n + 2s", n + 2 * s)),
        g => Verdict::new(NAME, true, format!("genus {g}: mapping class group is perfect")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseParity {
    /// `S² × S²`
    Even,
    /// The nontrivial `S²`-bundle over `S²`.
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleCoverBase {
    pub parity: BaseParity,
    pub m: u64,
}

/// Base of the hyperelliptic double cover of a genus-2 fibration with
/// `n + 2s = 10m`: even sphere bundle iff `m` is even.
pub fn genus2_double_cover_base(n: u64, s: u64) -> Result<DoubleCoverBase> {
    let total = n + 2 * s;
    if !total.is_multiple_of(10) {
        return Err(Error::DivisibilityFailed(total));
    }
    let m = total / 10;
    let parity = if m.is_multiple_of(2) { BaseParity::Even } else { BaseParity::Odd };
    Ok(DoubleCoverBase { parity, m })
}

/// `(8g + 4)⟨c₁(λ)⟩ = g·δ₀ + Σ_h 4h(g − h)·δ_h`, the equality satisfied by
/// hyperelliptic fibrations over the sphere.
pub fn endo_check(stats: &WordStats, hodge_degree: i64) -> Verdict {
    let g = stats.genus as i64;
    let lhs = (8 * g + 4) * hodge_degree;
    let rhs = g * stats.n as i64
        + stats.s_by_type.iter().map(|(&h, &count)| 4 * h as i64 * (g - h as i64) * count as i64).sum::<i64>();
    Verdict::new("endo_equality", lhs == rhs, format!("(8g+4)c1 = {lhs}, g*d0 + sum 4h(g-h)d_h = {rhs}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorelliVerdict {
    Realizable,
    /// Every vanishing cycle is separating, so the monodromy lies in the
    /// Torelli group; no such fibration exists.
    NotRealizable,
}

pub fn torelli_check(w: &Word) -> TorelliVerdict {
    if w.twists().iter().all(Twist::is_separating) {
        TorelliVerdict::NotRealizable
    } else {
        TorelliVerdict::Realizable
    }
}

fn torelli_verdict(w: &Word) -> Verdict {
    match torelli_check(w) {
        TorelliVerdict::Realizable => Verdict::new("torelli", true, "at least one nonseparating vanishing cycle"),
        TorelliVerdict::NotRealizable => {
            Verdict::new("torelli", false, "NotRealizable: monodromy lies in the Torelli group")
        }
    }
}

fn relation_verdict(check: &RelationCheck) -> Verdict {
    match check {
        RelationCheck::Pass => Verdict::new("global_relation", true, "monodromy product is the identity"),
        RelationCheck::Fail(m) => Verdict::new("global_relation", false, format!("monodromy product is {}", m.matrix())),
    }
}

/// Relation, divisibility and Torelli verdicts only; no homology or
/// signature is computed.
pub fn quick_check(w: &Word) -> Vec<Verdict> {
    let stats = word_stats(w);
    vec![
        relation_verdict(&check_global_relation(w)),
        genus2_divisibility(stats.genus, stats.n, stats.s),
        torelli_verdict(w),
    ]
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    /// The caller asserts the fibration is hyperelliptic; enables the
    /// Endo equality check.
    pub assume_hyperelliptic: bool,
}

/// Everything computed for one word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub stats: WordStats,
    pub homology: HomologyReport,
    pub sigma: i64,
    pub sigma_w: i64,
    pub chi: i64,
    pub b_plus: i64,
    pub b_minus: i64,
    pub c1_squared: i64,
    pub chi_h: i64,
    pub hodge_degree: i64,
    pub wp_pairing: i64,
    pub double_cover_base: Option<BaseParity>,
    pub verdicts: Vec<Verdict>,
}

impl InvariantReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }
}

pub fn full_report(w: &Word, options: &ReportOptions) -> Result<InvariantReport> {
    let relation = check_global_relation(w);
    if let RelationCheck::Fail(m) = relation {
        return Err(Error::RelationFailed(Box::new(m.into_matrix())));
    }
    let stats = word_stats(w);
    let r = stats.r;

    let complex = build_complex(w)?;
    let composite_zero = complex.composite_is_zero();
    let homology = complex.homology();
    let b = homology.betti;

    let SignatureBreakdown { sigma_w, sigma_x: sigma, .. } = total_signature(w)?;
    let hodge = hodge_degree_from(sigma, r)?;
    let wp = wp_pairing_from(hodge, r);
    let chi = euler_characteristic(w);
    let chi_homology = homology.euler_characteristic();
    let b2 = b[2] as i64;
    let form_parity = (b2 + sigma).rem_euclid(2) == 0;
    let b_plus = (b2 + sigma).div_euclid(2);
    let b_minus = (b2 - sigma).div_euclid(2);
    let c1_squared = 2 * chi + 3 * sigma;
    // (σ + χ)/4 = hodge + 1 − g, integral exactly when the Hodge degree is.
    let chi_h = (sigma + chi) / 4;

    let mut verdicts = vec![
        relation_verdict(&relation),
        Verdict::new("complex_composite_zero", composite_zero, "psi * phi = 0"),
        Verdict::new("poincare_duality", b[1] == b[3], format!("b1 = {}, b3 = {}", b[1], b[3])),
        Verdict::new(
            "euler_identity",
            chi_homology == chi,
            format!("2 - 2b1 + b2 = {chi_homology}, 4 - 4g + r = {chi}"),
        ),
        Verdict::new("hodge_integrality", true, format!("(sigma + r)/4 = {hodge}")),
        Verdict::new(
            "intersection_form_parity",
            form_parity && b_plus >= 1 && b_minus >= 0,
            format!("b+ = (b2 + sigma)/2 = {b_plus}, b- = {b_minus}"),
        ),
        genus2_divisibility(stats.genus, stats.n, stats.s),
        torelli_verdict(w),
        Verdict::new("sigma_plus_delta_positive", sigma + r as i64 > 0, format!("sigma + delta = {}", sigma + r as i64)),
        Verdict::new("hodge_degree_positive", hodge > 0, format!("c1(lambda) = {hodge}")),
        Verdict::new("wp_positive", wp > 0, format!("12 c1(lambda) - delta = {wp}")),
    ];

    let mut double_cover_base = None;
    if stats.genus == 2 {
        let expected = genus2_fractional_signature(stats.n, stats.s);
        verdicts.push(Verdict::new(
            "genus2_fractional_signature",
            expected == Ratio::from_integer(sigma),
            format!("-(3n + s)/5 = {expected}, cocycle sigma = {sigma}"),
        ));
        double_cover_base = genus2_double_cover_base(stats.n, stats.s).ok().map(|d| d.parity);
    }
    if options.assume_hyperelliptic {
        verdicts.push(endo_check(&stats, hodge));
    }

    Ok(InvariantReport {
        stats,
        homology,
        sigma,
        sigma_w,
        chi,
        b_plus,
        b_minus,
        c1_squared,
        chi_h,
        hodge_degree: hodge,
        wp_pairing: wp,
        double_cover_base,
        verdicts,
    })
}
