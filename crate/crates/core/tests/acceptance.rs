//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use lesie::lexicon::{score_sentiment, PolarityLexicon};
use lesie::parallel::Execution;
use lesie::pipeline::{
    calibrate_thresholds, flag, flag_row, validate_rows, ClassDirections, FeatureExtractor, FlagThresholds,
    HeadlineRecord, TransformConfig, TruthLabel, FIXTURE_COUNTS, SIMPLICITY_METRIC,
};
use lesie::pos::{tag, word_class_proportions, Tagger, WordClassProportions};
use lesie::readability::{coleman_liau, simplicity_ratio, ReadabilityResult};
use lesie::stats::{studentized_range_cdf, tukey_pairwise, MetricSamples, Transform};
use lesie::text::tokenize;
use rand::seq::SliceRandom;
use rand::Rng;

use common::*;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// CDF against 10^6 Monte Carlo draws per (k, df), tolerance 3e-3, ≤ 60 s.
fn studentized_range_oracle() -> Outcome {
    let start = Instant::now();
    let combos: Vec<(usize, usize)> =
        [2, 3, 6].iter().flat_map(|&k| [5, 30, 100, 2000].map(move |df| (k, df))).collect();
    let qs = [0.5, 1.0, 2.0, 3.0, 4.0, 5.0];
    let errors = Execution::default().map(&combos, |&(k, df)| {
        let draws = studentized_range_draws(k, df, 1_000_000, 1_000 * k as u64 + df as u64);
        qs.iter()
            .map(|&q| (studentized_range_cdf(q, k, df).unwrap() - empirical_cdf(&draws, q)).abs())
            .fold(0.0, f64::max)
    });
    let (worst, at) =
        errors.iter().zip(&combos).fold((0.0, (0, 0)), |acc, (&e, &c)| if e > acc.0 { (e, c) } else { acc });
    let secs = start.elapsed().as_secs_f64();
    check(
        worst <= 3e-3 && secs <= 60.0,
        format!("max |cdf - mc| = {worst:.2e} at (k, df) = {at:?} over 72 points, {secs:.1} s"),
    )
}

/// Two groups: Tukey p equals the pooled t-test p within 1e-6.
fn two_group_reduction() -> Outcome {
    let mut rng = rng(2);
    let mut worst = 0.0f64;
    for case in 0..100 {
        let (n1, n2) = (uniform_size(&mut rng, 5, 500), uniform_size(&mut rng, 5, 500));
        let sd = rng.gen_range(0.5..2.0);
        let shift = rng.gen_range(-0.3..0.3);
        let a = normal_sample(&mut rng, n1, shift, sd);
        let b = normal_sample(&mut rng, n2, 0.0, sd);
        let samples = MetricSamples::new("x", [("a", a.clone()), ("b", b.clone())]).unwrap();
        let p = tukey_pairwise(&samples, Transform::Identity).map_err(|e| format!("case {case}: {e}"))?.p[0][1];
        worst = worst.max((p - pooled_t_test_p(&a, &b)).abs());
    }
    check(worst <= 1e-6, format!("max |p_tukey - p_t| = {worst:.2e} over 100 datasets"))
}

/// Null simulations: P(min p < 0.05) in [0.035, 0.065].
fn familywise_calibration() -> Outcome {
    let start = Instant::now();
    let hits = Execution::default().map_range(2000, |sim| {
        let mut rng = rng(30_000 + sim as u64);
        let groups: Vec<(String, Vec<f64>)> =
            (0..6).map(|g| (format!("g{g}"), normal_sample(&mut rng, 50, 0.0, 1.0))).collect();
        let samples = MetricSamples::new("null", groups).unwrap();
        tukey_pairwise(&samples, Transform::Identity).unwrap().min_p() < 0.05
    });
    let rate = hits.iter().filter(|&&h| h).count() as f64 / hits.len() as f64;
    check(
        (0.035..=0.065).contains(&rate),
        format!("familywise rate {rate:.4} over 2000 simulations, {:.1} s", start.elapsed().as_secs_f64()),
    )
}

/// Symmetry, unit diagonal, range and group-order invariance on random inputs.
fn matrix_structure() -> Outcome {
    let mut rng = rng(4);
    let mut worst_perm = 0.0f64;
    for case in 0..200 {
        let k = uniform_size(&mut rng, 2, 7);
        let mut groups: Vec<(String, Vec<f64>)> = (0..k)
            .map(|g| {
                let n = uniform_size(&mut rng, 2, 40);
                let (mean, sd) = (rng.gen_range(-1.0..1.0), rng.gen_range(0.1..3.0));
                (format!("g{g}"), normal_sample(&mut rng, n, mean, sd))
            })
            .collect();
        let transform = if case % 2 == 0 { Transform::Identity } else { Transform::SignedLog1p };
        let m = tukey_pairwise(&MetricSamples::new("x", groups.clone()).unwrap(), transform).unwrap();
        for i in 0..k {
            if m.p[i][i] != 1.0 {
                return Err(format!("case {case}: diagonal {}", m.p[i][i]));
            }
            for j in 0..k {
                if m.p[i][j] != m.p[j][i] || !(0.0..=1.0).contains(&m.p[i][j]) {
                    return Err(format!("case {case}: cell ({i}, {j}) = {}", m.p[i][j]));
                }
            }
        }
        groups.shuffle(&mut rng);
        let shuffled = tukey_pairwise(&MetricSamples::new("x", groups).unwrap(), transform).unwrap();
        for a in &m.labels {
            for b in &m.labels {
                worst_perm = worst_perm.max((m.get(a, b).unwrap() - shuffled.get(a, b).unwrap()).abs());
            }
        }
    }
    check(worst_perm <= 1e-12, format!("200 matrices valid; max change under group reordering {worst_perm:.1e}"))
}

/// Worked Coleman-Liau and letters-per-word cases.
fn coleman_liau_exactness() -> Outcome {
    let worked = ReadabilityResult::from_counts(450, 100, 4).cli_full;
    let single = coleman_liau(&tokenize("a").unwrap()).unwrap().cli_full;
    let mut detail = format!("cli 9.476 -> {worked}, 'a' -> {single}");
    let mut ok = (worked - 9.476).abs() <= 1e-9 && (single + 39.52).abs() <= 1e-9;
    for (text, ratio, rendered) in
        [("Trump won.", (8, 2), "4.000000"), ("a", (1, 1), "1.000000"), ("Cut 2,300 jobs", (7, 3), "2.333333")]
    {
        let got = simplicity_ratio(&tokenize(text).unwrap()).unwrap();
        let shown = format!("{:.6}", got.0 as f64 / got.1 as f64);
        ok &= got == ratio && shown == rendered;
        detail.push_str(&format!(", {text:?} -> {}/{} = {shown}", got.0, got.1));
    }
    check(ok, detail)
}

/// Exact sentiment cases plus swap antisymmetry and duplication invariance.
fn sentiment_exactness() -> Outcome {
    let lex = PolarityLexicon::from_words("T", ["good"], ["bad"]).unwrap();
    let value = |s: &str, l: &PolarityLexicon| score_sentiment(&tokenize(s).unwrap(), l).unwrap().value;
    let exact =
        value("good good bad", &lex) == 1.0 / 3.0 && value("the cat sat", &lex) == 0.0 && value("bad", &lex) == -1.0;
    if !exact {
        return Err("worked cases differ".into());
    }

    let vocab = ["alpha", "beta", "gamma", "delta", "eps", "zeta", "eta", "theta", "iota", "kappa", "lambda", "mu"];
    let mut rng = rng(6);
    for draw in 0..1000 {
        let mut words = vocab.to_vec();
        words.shuffle(&mut rng);
        let (np, nn) = (uniform_size(&mut rng, 0, 4), uniform_size(&mut rng, 0, 4));
        let lex = PolarityLexicon::from_words("R", &words[..np], &words[np..np + nn])
            .or_else(|_| PolarityLexicon::from_words("R", ["alpha"], Vec::<&str>::new()))
            .unwrap();
        let len = uniform_size(&mut rng, 1, 12);
        let text: Vec<&str> = (0..len).map(|_| *vocab.choose(&mut rng).unwrap()).collect();
        let text = text.join(" ");
        let v = value(&text, &lex);
        if value(&text, &lex.swapped()) != -v {
            return Err(format!("draw {draw}: swap antisymmetry fails for {text:?}"));
        }
        if value(&format!("{text} {text}"), &lex) != v {
            return Err(format!("draw {draw}: duplication changes value for {text:?}"));
        }
    }
    Ok("worked cases exact; antisymmetry and duplication hold on 1000 draws".into())
}

/// Two-block simplicity pattern on the bundled fixture, ≤ 30 s.
fn planted_effect() -> Outcome {
    let start = Instant::now();
    let dataset = synthetic_dataset();
    if dataset.report.counts != FIXTURE_COUNTS {
        return Err(format!("fixture counts {:?}", dataset.report.counts));
    }
    let extractor = FeatureExtractor::bundled(Tagger::Builtin);
    let rows = extractor.extract(&dataset.records).map_err(|e| e.to_string())?;
    let matrices = validate_rows(
        &dataset.records,
        &rows,
        &extractor.lexicon_names(),
        &TransformConfig::default(),
        extractor.execution,
    )
    .map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    let m = matrices.iter().find(|m| m.metric_name == SIMPLICITY_METRIC).ok_or("no simplicity matrix")?;

    let truthful = |l: TruthLabel| matches!(l, TruthLabel::MostlyTrue | TruthLabel::True);
    let (mut max_cross, mut min_within) = (0.0f64, 1.0f64);
    for (i, a) in TruthLabel::ALL.iter().enumerate() {
        for b in &TruthLabel::ALL[i + 1..] {
            let p = m.get(a.as_str(), b.as_str()).unwrap();
            if truthful(*a) == truthful(*b) {
                min_within = min_within.min(p);
            } else {
                max_cross = max_cross.max(p);
            }
        }
    }
    check(
        max_cross < 0.05 && min_within > 0.10 && secs <= 30.0,
        format!(
            "8 cross-block pairs max p = {max_cross:.3e}, 7 within-block pairs min p = {min_within:.4}, {secs:.1} s"
        ),
    )
}

/// Gold-fixture tagger accuracy and exact proportion arithmetic.
fn tagger_quality() -> Outcome {
    let gold = lesie::pipeline::ingest(fixture_path("gold_tags.csv"), lesie::pipeline::DatasetFormat::Csv)
        .map_err(|e| e.to_string())?;
    let (mut right, mut total) = (0usize, 0usize);
    for r in &gold.records {
        let text = tokenize(r.text.as_str()).unwrap();
        let expected = tag(&text, Tagger::Pretagged, r.pretags.as_deref()).map_err(|e| e.to_string())?;
        let got = tag(&text, Tagger::Builtin, None).unwrap();
        total += expected.tags.len();
        right += expected.tags.iter().zip(&got.tags).filter(|(a, b)| a == b).count();
    }
    let accuracy = right as f64 / total as f64;

    let props = |text: &str, tags: &str| {
        let t = tokenize(text).unwrap();
        word_class_proportions(&tag(&t, Tagger::Pretagged, Some(tags)).unwrap())
    };
    let zero = WordClassProportions { verb: 0.0, adjective: 0.0, modal: 0.0, name: 0.0, number: 0.0 };
    let exact = props("John ran 5 miles", "NNP VBD CD NNS")
        == WordClassProportions { verb: 0.25, name: 0.25, number: 0.25, ..zero }
        && props("can", "MD") == WordClassProportions { modal: 1.0, ..zero }
        && props("the of it", "DT IN PRP") == zero;
    check(
        accuracy >= 0.85 && exact,
        format!("builtin accuracy {right}/{total} = {accuracy:.4}; pretagged proportions exact: {exact}"),
    )
}

/// Two CLI `validate` runs produce byte-identical CSV reports.
fn pipeline_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |name: &str| -> Result<Vec<u8>, String> {
        let out = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_lesie"))
            .args(["validate", "--report", "csv", "--input"])
            .arg(fixture_path("synthetic_headlines.csv"))
            .arg("--out")
            .arg(&out)
            .output()
            .map_err(|e| e.to_string())?;
        if !status.status.success() {
            return Err(String::from_utf8_lossy(&status.stderr).into_owned());
        }
        std::fs::read(out.join("validation.csv")).map_err(|e| e.to_string())
    };
    let (first, second) = (run("a")?, run("b")?);
    let lines = first.iter().filter(|&&b| b == b'\n').count();
    check(
        first == second && lines == 1 + 8 * 36,
        format!("{} bytes, {lines} lines, identical: {}", first.len(), first == second),
    )
}

fn perturbed(t: &FlagThresholds, stricter: bool) -> FlagThresholds {
    // zero cuts get an absolute nudge so the perturbation is not a no-op
    let scale = |cut: f64, up: bool| match (cut == 0.0, up) {
        (true, true) => 0.01,
        (true, false) => -0.01,
        (false, true) => cut * 1.1,
        (false, false) => cut * 0.9,
    };
    let mut out = t.clone();
    out.sentiment_abs_cut = scale(t.sentiment_abs_cut, stricter).max(0.0);
    out.simplicity_cut = scale(t.simplicity_cut, !stricter);
    for c in &mut out.class_cuts {
        let up = stricter == (c.direction == lesie::pipeline::Direction::Above);
        c.cut = scale(c.cut, up);
    }
    out
}

/// Held-out true rows, the constructed headline, and threshold monotonicity.
fn flagger_contract() -> Outcome {
    let dataset = synthetic_dataset();
    let extractor = FeatureExtractor::bundled(Tagger::Builtin);
    let rows = extractor.extract(&dataset.records).map_err(|e| e.to_string())?;
    let (calibration, held_out): (Vec<usize>, Vec<usize>) =
        (0..dataset.records.len()).partition(|&i| !is_held_out(&dataset.records[i]));
    let pick = |idx: &[usize]| -> (Vec<HeadlineRecord>, Vec<_>) {
        (idx.iter().map(|&i| dataset.records[i].clone()).collect(), idx.iter().map(|&i| rows[i].clone()).collect())
    };
    let (cal_records, cal_rows) = pick(&calibration);
    let thresholds =
        calibrate_thresholds(&cal_records, &cal_rows, 0.90, ClassDirections::default(), "synthetic_headlines.csv")
            .map_err(|e| e.to_string())?;

    let held_scores: Vec<u8> = held_out.iter().map(|&i| flag_row(&rows[i], &thresholds).score).collect();
    let quiet = held_scores.iter().filter(|&&s| s == 0).count() as f64 / held_scores.len() as f64;

    let constructed = HeadlineRecord::new("constructed", "Shocking! Evil liar Obama bans ALL 999 guns", None).unwrap();
    let constructed_score = flag(&constructed, &thresholds, &extractor).map_err(|e| e.to_string())?.score;

    let mut rng = rng(10);
    let sample: Vec<usize> =
        (0..dataset.records.len()).collect::<Vec<_>>().choose_multiple(&mut rng, 500).copied().collect();
    let (strict, loose) = (perturbed(&thresholds, true), perturbed(&thresholds, false));
    let implies = |a: bool, b: bool| !a || b;
    let mut violations = 0;
    for &i in &sample {
        let (s, base, l) = (flag_row(&rows[i], &strict), flag_row(&rows[i], &thresholds), flag_row(&rows[i], &loose));
        for (lo, hi) in [(&s, &base), (&base, &l)] {
            let ok = implies(lo.cue_emotion, hi.cue_emotion)
                && implies(lo.cue_simplicity, hi.cue_simplicity)
                && implies(lo.cue_lexical, hi.cue_lexical)
                && lo.triggered_classes.iter().all(|c| hi.triggered_classes.contains(c))
                && lo.score <= hi.score;
            violations += usize::from(!ok);
        }
    }
    check(
        quiet >= 0.70 && constructed_score == 3 && violations == 0,
        format!(
            "{:.1}% of {} held-out true rows score 0; constructed headline scores {constructed_score}; \
             {violations} monotonicity violations on 500 rows",
            100.0 * quiet,
            held_scores.len()
        ),
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("studentized range vs Monte Carlo", studentized_range_oracle),
        ("k=2 reduction to pooled t-test", two_group_reduction),
        ("family-wise calibration", familywise_calibration),
        ("pairwise matrix structure", matrix_structure),
        ("Coleman-Liau exactness", coleman_liau_exactness),
        ("sentiment exactness", sentiment_exactness),
        ("planted simplicity blocks", planted_effect),
        ("tagger quality", tagger_quality),
        ("pipeline determinism", pipeline_determinism),
        ("flagger contract", flagger_contract),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
