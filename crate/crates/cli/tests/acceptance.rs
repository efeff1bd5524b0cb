//! Acceptance criteria, one line of output each. Exits nonzero if any fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use lefschetz_core::dsl::{parse, serialize, ParseErrorKind};
use lefschetz_core::families::{fibre_sum, genus1_word, hyperelliptic_word, word_a, word_b, word_c};
use lefschetz_core::invariants::{endo_check, genus2_divisibility, torelli_check, word_stats, BaseParity, TorelliVerdict};
use lefschetz_core::monodromy::{transvection_matrix, Sign};
use lefschetz_core::signature::{cocycle, total_signature};
use lefschetz_core::zariski::build_complex_unchecked;
use lefschetz_core::{
    chain_curve_class, check_global_relation, conjugate_word, full_report, hurwitz_move, Genus, HomologyClass,
    HurwitzDirection, InvariantReport, ReportOptions, SymplecticMatrix, Twist, Word,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const SEED: u64 = 20_240_611;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Diagnostic = (&'static str, usize, usize, fn(&ParseErrorKind) -> bool);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn genus(g: u32) -> Genus {
    Genus::new(g).unwrap()
}

fn report(w: &Word) -> InvariantReport {
    full_report(w, &ReportOptions { assume_hyperelliptic: false }).expect("fixture word")
}

fn random_primitive(rng: &mut ChaCha8Rng, g: Genus) -> HomologyClass {
    loop {
        let coords: Vec<i64> = (0..g.rank()).map(|_| rng.gen_range(-2..=2)).collect();
        let v = HomologyClass::from_ints(&coords).unwrap();
        if v.is_primitive() {
            return v;
        }
    }
}

fn random_symplectic(rng: &mut ChaCha8Rng, g: Genus) -> SymplecticMatrix {
    let mut m = SymplecticMatrix::identity(g);
    for _ in 0..rng.gen_range(1..=4) {
        let t = transvection_matrix(&random_primitive(rng, g)).unwrap();
        m = if rng.gen_bool(0.5) { t.compose(&m) } else { t.inverse().compose(&m) };
    }
    m
}

fn perturb(rng: &mut ChaCha8Rng, w: &Word) -> Word {
    match rng.gen_range(0..3) {
        0 => {
            let dir = if rng.gen_bool(0.5) { HurwitzDirection::Left } else { HurwitzDirection::Right };
            hurwitz_move(w, rng.gen_range(1..w.len()), dir).unwrap()
        }
        1 => {
            let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            conjugate_word(w, &random_primitive(rng, w.genus()), sign).unwrap()
        }
        _ => w.rotated(rng.gen_range(0..w.len())),
    }
}

fn perturbations(rng: &mut ChaCha8Rng, w: &Word, count: usize) -> Vec<Word> {
    let mut cur = w.clone();
    (0..count)
        .map(|_| {
            cur = perturb(rng, &cur);
            cur.clone()
        })
        .collect()
}

fn fixture_table() -> Outcome {
    let start = Instant::now();
    let rows = [
        ("A", word_a(), (20, -12, 16, 2, 4), Some(BaseParity::Even)),
        ("B", word_b(), (30, -18, 26, 3, 6), Some(BaseParity::Odd)),
        ("C", word_c(), (40, -24, 36, 4, 8), Some(BaseParity::Even)),
        ("E(1)", genus1_word(1).unwrap(), (12, -8, 12, 1, 0), None),
    ];
    for (name, w, expected, parity) in rows {
        let r = report(&w);
        let got = (r.stats.r, r.sigma, r.chi, r.hodge_degree, r.wp_pairing);
        ensure(got == expected, || format!("{name}: got {got:?}, expected {expected:?}"))?;
        ensure(r.double_cover_base == parity, || format!("{name}: base parity {:?}", r.double_cover_base))?;
        for v in ["hodge_integrality", "euler_identity"] {
            ensure(r.verdict(v).is_some_and(|v| v.passed()), || format!("{name}: {v} failed"))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("4 rows exact in {elapsed:.2?}"))
}

fn cocycle_validity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut triples = 0;
    for g in 1..=3 {
        let g = genus(g);
        let id = SymplecticMatrix::identity(g);
        for _ in 0..170 {
            let (a, b, c) = (random_symplectic(&mut rng, g), random_symplectic(&mut rng, g), random_symplectic(&mut rng, g));
            let s = |x: &SymplecticMatrix, y: &SymplecticMatrix| cocycle(x, y).unwrap();
            let lhs = s(&a, &b) + s(&a.compose(&b), &c);
            let rhs = s(&a, &b.compose(&c)) + s(&b, &c);
            ensure(lhs == rhs, || format!("genus {g:?}: {lhs} != {rhs}"))?;
            ensure(s(&id, &a) == 0 && s(&a, &id) == 0, || "identity argument gives nonzero".into())?;
            triples += 1;
        }
    }
    Ok(format!("{triples} triples at g = 1, 2, 3 (seed {SEED})"))
}

fn genus_two_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut checked = 0;
    for w in [word_a(), word_b(), word_c()] {
        let mut words = vec![w.clone()];
        words.extend(perturbations(&mut rng, &w, 50));
        for v in &words {
            let st = word_stats(v);
            let sigma = total_signature(v).unwrap().sigma_x;
            let num = 3 * st.n as i64 + st.s as i64;
            ensure(5 * sigma == -num, || format!("sigma {sigma} vs -({num})/5"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} words, sigma = -(3n + s)/5 exactly"))
}

fn homology_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut words = vec![genus1_word(1).unwrap(), genus1_word(2).unwrap(), hyperelliptic_word(genus(3)).unwrap()];
    for w in [word_a(), word_b(), word_c()] {
        words.extend(perturbations(&mut rng, &w, 10));
        words.push(w);
    }
    words.push(Word::new(genus(2), vec![Twist::Separating(1); 3]).unwrap());
    words.push(fibre_sum(&word_a(), &word_c()).unwrap());
    for w in &words {
        ensure(check_global_relation(w).passed(), || "relation".into())?;
        let c = build_complex_unchecked(w);
        ensure(c.composite_is_zero(), || "psi * phi != 0".into())?;
        let h = c.homology();
        ensure(h.betti[1] == h.betti[3], || format!("b1 {} != b3 {}", h.betti[1], h.betti[3]))?;
        let chi = 4 - 4 * w.genus().get() as i64 + w.len() as i64;
        ensure(h.euler_characteristic() == chi, || format!("2 - 2b1 + b2 = {} != {chi}", h.euler_characteristic()))?;
    }
    Ok(format!("{} words", words.len()))
}

fn endo_equality() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for g in [2, 3] {
        let w = hyperelliptic_word(genus(g)).unwrap();
        let sig = total_signature(&w).unwrap();
        let r = w.len() as i64;
        ensure((sig.sigma_x + r) % 4 == 0, || format!("g = {g}: sigma + r not divisible by 4"))?;
        let c1 = (sig.sigma_x + r) / 4;
        let v = endo_check(&word_stats(&w), c1);
        ensure(v.passed(), || format!("g = {g}: {v}"))?;
        parts.push(format!("g = {g}: sigma = {}, c1 = {c1}", sig.sigma_x));
    }
    ensure(parts[1].contains("sigma = -32"), || parts[1].clone())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{} in {elapsed:.2?}", parts.join("; ")))
}

fn positivity() -> Outcome {
    let fixtures =
        [word_a(), word_b(), word_c(), genus1_word(1).unwrap(), hyperelliptic_word(genus(3)).unwrap()];
    for w in &fixtures {
        let r = report(w);
        ensure(r.sigma + r.stats.r as i64 > 0, || format!("sigma + delta = {}", r.sigma + r.stats.r as i64))?;
        if r.stats.genus >= 2 {
            ensure(r.wp_pairing > 0, || format!("WP = {}", r.wp_pairing))?;
        }
    }
    Ok(format!("{} fixtures", fixtures.len()))
}

fn torelli_and_divisibility() -> Outcome {
    for (g, h, len) in [(2, 1, 1), (2, 1, 3), (3, 1, 5), (4, 2, 2), (5, 2, 7)] {
        let w = Word::new(genus(g), vec![Twist::Separating(h); len]).unwrap();
        ensure(torelli_check(&w) == TorelliVerdict::NotRealizable, || format!("g = {g}, {len} x s{h} accepted"))?;
    }
    ensure(torelli_check(&word_b()) == TorelliVerdict::Realizable, || "word B rejected".into())?;
    // (genus, n, s, pass)
    let cases = [
        (1, 12, 0, true),
        (1, 24, 0, true),
        (1, 6, 0, false),
        (1, 13, 0, false),
        (1, 18, 0, false),
        (2, 20, 0, true),
        (2, 30, 0, true),
        (2, 40, 0, true),
        (2, 16, 2, true),
        (2, 6, 2, true),
        (2, 0, 5, true),
        (2, 8, 1, true),
        (2, 15, 0, false),
        (2, 20, 1, false),
        (2, 12, 3, false),
        (2, 25, 0, false),
        (2, 1, 0, false),
        (3, 56, 0, true),
        (3, 7, 1, true),
        (4, 3, 0, true),
    ];
    for (g, n, s, expected) in cases {
        let v = genus2_divisibility(g, n, s);
        ensure(v.passed() == expected, || format!("({g}, {n}, {s}): {v}"))?;
    }
    Ok(format!("5 all-separating words NotRealizable; {} divisibility cases", cases.len()))
}

fn additivity() -> Outcome {
    let named = [("A", word_a()), ("B", word_b()), ("C", word_c()), ("H(3)", hyperelliptic_word(genus(3)).unwrap())];
    let reports: Vec<InvariantReport> = named.iter().map(|(_, w)| report(w)).collect();
    let mut pairs = 0;
    for i in 0..named.len() {
        for j in i..named.len() {
            let (w1, w2) = (&named[i].1, &named[j].1);
            if w1.genus() != w2.genus() {
                continue;
            }
            let (r1, r2) = (&reports[i], &reports[j]);
            let r = report(&fibre_sum(w1, w2).unwrap());
            let fibre_chi = 4 - 4 * w1.genus().get() as i64;
            let label = format!("{} + {}", named[i].0, named[j].0);
            ensure(r.sigma == r1.sigma + r2.sigma, || format!("{label}: sigma {}", r.sigma))?;
            ensure(r.chi == r1.chi + r2.chi - fibre_chi, || format!("{label}: chi {}", r.chi))?;
            ensure(r.hodge_degree == r1.hodge_degree + r2.hodge_degree, || format!("{label}: hodge {}", r.hodge_degree))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} same-genus pairs"))
}

fn random_word(rng: &mut ChaCha8Rng) -> Word {
    let g = genus(rng.gen_range(1..=4));
    let len = rng.gen_range(1..=40);
    let twists = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => Twist::Nonseparating(chain_curve_class(g, rng.gen_range(1..=g.chain_length())).unwrap()),
            1 if g.max_separating_type() > 0 => Twist::Separating(rng.gen_range(1..=g.max_separating_type())),
            _ => Twist::Nonseparating(random_primitive(rng, g)),
        })
        .collect();
    Word::new(g, twists).unwrap()
}

fn run_cli(args: &[&str], dir: &Path) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_lefschetz")).args(args).current_dir(dir).output().unwrap();
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn parser_and_schema() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for _ in 0..100 {
        let w = random_word(&mut rng);
        let text = serialize(&w);
        ensure(parse(&text).as_ref() == Ok(&w), || format!("round trip failed on\n{text}"))?;
    }

    let diagnostics: [Diagnostic; 3] = [
        ("genus: 2\nword: c1 c6\n", 2, 10, |k| matches!(k, ParseErrorKind::ChainIndexOutOfRange { k: 6, max: 5 })),
        ("genus: 2\nword: (c1 c2^3\n", 3, 1, |k| matches!(k, ParseErrorKind::Unexpected { .. })),
        ("genus: 2\nword: c1^0\n", 2, 10, |k| matches!(k, ParseErrorKind::NonPositivePower(0))),
    ];
    for (text, line, column, kind) in diagnostics {
        let e = parse(text).expect_err("must not parse");
        ensure(e.line == line && e.column == column && kind(&e.kind), || format!("{text:?}: {e}"))?;
    }

    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("B.lfw"), "genus: 2\nword: (c1 c2 c3 c4 c5)^6\n").unwrap();
    let (first, code) = run_cli(&["analyze", "B.lfw", "--format", "json"], dir.path());
    let (second, _) = run_cli(&["analyze", "B.lfw", "--format", "json"], dir.path());
    ensure(code == 0, || format!("analyze exited {code}"))?;
    ensure(first == second, || "JSON differs between runs".into())?;
    let json: Value = serde_json::from_slice(&first).map_err(|e| e.to_string())?;
    for (key, want) in [("sigma", -18), ("chi", 26), ("hodge_degree", 3), ("wp_pairing", 6)] {
        ensure(json[key].as_i64() == Some(want), || format!("{key} = {}", json[key]))?;
    }
    ensure(json["double_cover_base"] == "odd", || "double_cover_base".into())?;
    ensure(json["homology"]["betti"].as_array().is_some_and(|b| b.len() == 5), || "betti".into())?;
    ensure(json["verdicts"].as_array().is_some_and(|v| v.iter().all(|v| v["status"] == "pass")), || "verdicts".into())?;
    ensure(no_floats(&json), || "float in output".into())?;
    Ok("100 round trips, 3 positioned diagnostics, stable JSON".into())
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_i64() || n.is_u64(),
        Value::Array(xs) => xs.iter().all(no_floats),
        Value::Object(m) => m.values().all(no_floats),
        _ => true,
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 fixture table", fixture_table),
        ("2 cocycle validity", cocycle_validity),
        ("3 genus-2 fractional signature", genus_two_equivalence),
        ("4 homology consistency", homology_consistency),
        ("5 Endo equality", endo_equality),
        ("6 positivity", positivity),
        ("7 Torelli and divisibility", torelli_and_divisibility),
        ("8 fibre-sum additivity", additivity),
        ("9 parser and JSON schema", parser_and_schema),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
