//! Report rendering: JSON, CSV and plain text on stdout.

use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use lefschetz_core::invariants::{quick_check, word_stats, BaseParity};
use lefschetz_core::{full_report, Error, InvariantReport, ReportOptions, Verdict, Word, WordStats};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// What `analyze` produced for one file. A word failing the relation or
/// Hodge integrality has no meaningful total space, so only its verdicts
/// are reported.
#[derive(Serialize)]
pub struct Outcome {
    pub file: String,
    pub complete: bool,
    #[serde(flatten)]
    body: Body,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Body {
    Full(Box<InvariantReport>),
    Partial { stats: WordStats, verdicts: Vec<Verdict> },
}

impl Outcome {
    pub fn analyze(path: &Path, word: &Word, assume_hyperelliptic: bool) -> Result<Outcome, Error> {
        let file = path.display().to_string();
        let partial = |extra: Option<Verdict>| {
            let mut verdicts = quick_check(word);
            verdicts.extend(extra);
            Outcome { file: file.clone(), complete: false, body: Body::Partial { stats: word_stats(word), verdicts } }
        };
        match full_report(word, &ReportOptions { assume_hyperelliptic }) {
            Ok(report) => Ok(Outcome { file: file.clone(), complete: true, body: Body::Full(Box::new(report)) }),
            Err(Error::RelationFailed(_)) => Ok(partial(None)),
            Err(Error::NonIntegralHodgeDegree(x)) => {
                Ok(partial(Some(Verdict::new("hodge_integrality", false, format!("sigma + r = {x} is not divisible by 4")))))
            }
            Err(e) => Err(e),
        }
    }

    pub fn verdicts(&self) -> &[Verdict] {
        match &self.body {
            Body::Full(r) => &r.verdicts,
            Body::Partial { verdicts, .. } => verdicts,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdicts().iter().all(Verdict::passed)
    }

    fn stats(&self) -> &WordStats {
        match &self.body {
            Body::Full(r) => &r.stats,
            Body::Partial { stats, .. } => stats,
        }
    }

    fn report(&self) -> Option<&InvariantReport> {
        match &self.body {
            Body::Full(r) => Some(r),
            Body::Partial { .. } => None,
        }
    }
}

pub fn render_outcomes(outcomes: &[Outcome], format: Format) -> Result<String, String> {
    match format {
        Format::Json => {
            let json = match outcomes {
                [single] => serde_json::to_string_pretty(single),
                many => serde_json::to_string_pretty(many),
            };
            json.map(|s| s + "\n").map_err(|e| e.to_string())
        }
        Format::Csv => render_csv(outcomes),
        Format::Text => Ok(outcomes.iter().map(render_text).collect::<Vec<_>>().join("\n")),
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    file: &'a str,
    complete: bool,
    genus: u32,
    r: u64,
    n: u64,
    s: u64,
    b1: Option<u64>,
    b2: Option<u64>,
    torsion_h1: Option<String>,
    torsion_h2: Option<String>,
    sigma: Option<i64>,
    chi: Option<i64>,
    b_plus: Option<i64>,
    b_minus: Option<i64>,
    c1_squared: Option<i64>,
    chi_h: Option<i64>,
    hodge_degree: Option<i64>,
    wp_pairing: Option<i64>,
    double_cover_base: Option<BaseParity>,
    all_passed: bool,
    failed: String,
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn render_csv(outcomes: &[Outcome]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for o in outcomes {
        let stats = o.stats();
        let rep = o.report();
        let failed: Vec<&str> = o.verdicts().iter().filter(|v| !v.passed()).map(|v| v.name.as_str()).collect();
        w.serialize(CsvRow {
            file: &o.file,
            complete: o.complete,
            genus: stats.genus,
            r: stats.r,
            n: stats.n,
            s: stats.s,
            b1: rep.map(|r| r.homology.betti[1]),
            b2: rep.map(|r| r.homology.betti[2]),
            torsion_h1: rep.map(|r| join(&r.homology.torsion_h1)),
            torsion_h2: rep.map(|r| join(&r.homology.torsion_h2)),
            sigma: rep.map(|r| r.sigma),
            chi: rep.map(|r| r.chi),
            b_plus: rep.map(|r| r.b_plus),
            b_minus: rep.map(|r| r.b_minus),
            c1_squared: rep.map(|r| r.c1_squared),
            chi_h: rep.map(|r| r.chi_h),
            hodge_degree: rep.map(|r| r.hodge_degree),
            wp_pairing: rep.map(|r| r.wp_pairing),
            double_cover_base: rep.and_then(|r| r.double_cover_base),
            all_passed: o.passed(),
            failed: failed.join(" "),
        })
        .map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn torsion_text<T: ToString>(factors: &[T]) -> String {
    if factors.is_empty() {
        "none".into()
    } else {
        factors.iter().map(|d| format!("Z/{}", d.to_string())).collect::<Vec<_>>().join(" + ")
    }
}

fn render_text(o: &Outcome) -> String {
    let mut out = String::new();
    let st = o.stats();
    let _ = writeln!(out, "file: {}", o.file);
    let _ = writeln!(out, "genus {}, {} critical fibres ({} nonseparating, {} separating)", st.genus, st.r, st.n, st.s);
    if let Some(r) = o.report() {
        let b = r.homology.betti;
        let _ = writeln!(out, "betti numbers: {} {} {} {} {}", b[0], b[1], b[2], b[3], b[4]);
        let _ = writeln!(
            out,
            "torsion: H1 {}, H2 {}",
            torsion_text(&r.homology.torsion_h1),
            torsion_text(&r.homology.torsion_h2)
        );
        let _ = writeln!(out, "signature {} (complement {}), euler characteristic {}", r.sigma, r.sigma_w, r.chi);
        let _ = writeln!(out, "b+ {}, b- {}, c1^2 {}, chi_h {}", r.b_plus, r.b_minus, r.c1_squared, r.chi_h);
        let _ = writeln!(out, "hodge degree {}, WP pairing {}", r.hodge_degree, r.wp_pairing);
        if let Some(p) = r.double_cover_base {
            let parity = match p {
                BaseParity::Even => "even",
                BaseParity::Odd => "odd",
            };
            let _ = writeln!(out, "double cover base: {parity}");
        }
    } else {
        let _ = writeln!(out, "invariants not computed");
    }
    for v in o.verdicts() {
        let _ = writeln!(out, "  {v}");
    }
    out
}

pub fn render_verdicts(path: &Path, verdicts: &[Verdict], format: Format) -> Result<String, String> {
    #[derive(Serialize)]
    struct Check<'a> {
        file: String,
        passed: bool,
        verdicts: &'a [Verdict],
    }
    let passed = verdicts.iter().all(Verdict::passed);
    let file = path.display().to_string();
    match format {
        Format::Json => serde_json::to_string_pretty(&Check { file, passed, verdicts })
            .map(|s| s + "\n")
            .map_err(|e| e.to_string()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["file", "name", "status", "detail"]).map_err(|e| e.to_string())?;
            for v in verdicts {
                w.serialize((&file, &v.name, v.status, &v.detail)).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
        Format::Text => Ok(verdicts.iter().map(|v| format!("{v}\n")).collect()),
    }
}
