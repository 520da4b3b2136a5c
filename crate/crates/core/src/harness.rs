//! Batch measurement and bound verification.
//!
//! `measure` runs all four parsers on a text and evaluates the size
//! inequalities that must hold on every string. The `verify_*` functions
//! sweep the constructions and check each one's stated sizes and bounds,
//! producing machine-readable reports. Asymptotic factors are recorded as
//! empirical constants, never asserted; only exact inequalities are
//! pass/fail.

use std::io::{self, Write};

use serde::Serialize;

use crate::generators::{
    gen_ab_power, gen_powers_a, gen_powers_b, gen_powers_c, gen_random, gen_thm2_string,
    gen_thue_morse, SplitMix64, Thm2Params,
};
use crate::greedy::parse_all_greedy;
use crate::oracle::assert_greedy_optimal;
use crate::text::Text;
use crate::transform::{overlap_to_nonoverlap_parsing, TransformConfig};
use crate::validate::validate_parsing;
use crate::variant::Variant;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    fn new(name: &str, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
        }
    }
}

/// Per-string measurement record.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub string_id: String,
    pub family: String,
    pub params: String,
    pub n: usize,
    pub sigma: u32,
    pub z: usize,
    pub z_no: usize,
    pub z3: usize,
    pub z3_no: usize,
    pub ratio_no_over_ov: f64,
    pub bound_t1: f64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// A text with the labels that go into its report row.
#[derive(Debug, Clone)]
pub struct LabeledText {
    pub id: String,
    pub family: String,
    pub params: String,
    pub text: Text,
}

impl LabeledText {
    pub fn new(family: &str, params: &str, text: Text) -> Self {
        LabeledText {
            id: format!("{family}/{params}"),
            family: family.into(),
            params: params.into(),
            text,
        }
    }
}

/// `log2(n / (z * max(1, log_sigma z)))`, the argument of the gap bound
/// between the overlapping and non-overlapping sizes; the
/// inner factor is clamped at 1 so the expression stays finite when
/// `z <= sigma`, and degenerate inputs report 0.
pub fn bound_t1(n: usize, sigma: u32, z: usize) -> f64 {
    if n == 0 || z == 0 {
        return 0.0;
    }
    let log_sigma_z = if sigma >= 2 {
        (z as f64).ln() / (sigma as f64).ln()
    } else {
        0.0
    };
    (n as f64 / (z as f64 * log_sigma_z.max(1.0))).log2()
}

/// Runs all four parsers and evaluates the universal size inequalities.
pub fn measure(text: &Text) -> Report {
    measure_labeled(&LabeledText::new("adhoc", "", text.clone()))
}

pub fn measure_labeled(input: &LabeledText) -> Report {
    let text = &input.text;
    let [z, z_no, z3, z3_no] = parse_all_greedy(text).map(|p| p.size());
    let n = text.len();
    let mut checks = Vec::new();
    // Vacuous on the empty string, where every size is 0.
    if n > 0 {
        checks.push(Check::new("z_le_zno", z <= z_no));
        checks.push(Check::new("z3_le_z3no", z3 <= z3_no));
        checks.push(Check::new("z3_le_z", z3 <= z));
        checks.push(Check::new("z_le_2z3_minus_1", z < 2 * z3));
        checks.push(Check::new("z3no_le_zno", z3_no <= z_no));
        checks.push(Check::new("zno_le_2z3no_minus_1", z_no < 2 * z3_no));
    }
    Report {
        string_id: input.id.clone(),
        family: input.family.clone(),
        params: input.params.clone(),
        n,
        sigma: text.sigma(),
        z,
        z_no,
        z3,
        z3_no,
        ratio_no_over_ov: if z > 0 { z_no as f64 / z as f64 } else { 0.0 },
        bound_t1: bound_t1(n, text.sigma(), z),
        checks,
    }
}

/// Per input: the hard lower direction `z <= z_no` (already in the universal
/// checks), plus the constructive transform, which must produce a valid
/// novLZ-type parsing no smaller than the greedy one. The empirical constant
/// `z_no / (z * max(1, bound_t1))` is appended to the params label.
pub fn verify_theorem1(inputs: &[LabeledText], cfg: &TransformConfig) -> Vec<Report> {
    inputs
        .iter()
        .map(|input| {
            let mut report = measure_labeled(input);
            let transformed = overlap_to_nonoverlap_parsing(&input.text, cfg);
            let valid =
                validate_parsing(&input.text, &transformed, Variant::NOV_LZ) == Ok(true);
            report
                .checks
                .push(Check::new("t1_transform_valid_novlz", valid));
            report.checks.push(Check::new(
                "t1_transform_size_ge_greedy_novlz",
                transformed.size() >= report.z_no,
            ));
            let constant = report.ratio_no_over_ov / report.bound_t1.max(1.0);
            report.params = if report.params.is_empty() {
                format!("t1_const={constant:.4}")
            } else {
                format!("{};t1_const={constant:.4}", report.params)
            };
            report
        })
        .collect()
}

pub fn default_theorem1_inputs() -> Vec<LabeledText> {
    let mut inputs = Vec::new();
    for j in [4usize, 6, 8, 10, 12] {
        let n = 1 << j;
        inputs.push(LabeledText::new(
            "thue-morse",
            &format!("n={n}"),
            gen_thue_morse(n),
        ));
    }
    for (n, sigma, z) in [(1 << 10, 2, 16), (1 << 12, 2, 64), (1 << 12, 4, 64)] {
        if let Ok(p) = Thm2Params::new(n, sigma, z) {
            inputs.push(LabeledText::new(
                "gray-blocks",
                &format!("n={n};sigma={sigma};z={z}"),
                gen_thm2_string(&p).expect("feasible params generate"),
            ));
        }
    }
    for (i, n) in [(0u64, 256usize), (1, 1024), (2, 4096)] {
        inputs.push(LabeledText::new(
            "random",
            &format!("n={n};sigma=2;seed={i}"),
            gen_random(n, 2, i).expect("in-guard random text"),
        ));
    }
    inputs
}

/// Builds the Gray-code block string for each feasible grid point and checks
/// the construction's two bounds: LZ size at most `4k + 4` and novLZ size at
/// least `k * log2(floor(n / 4kd))`.
pub fn verify_theorem2(grid: &[(usize, u32, usize)]) -> Vec<Report> {
    let mut reports = Vec::new();
    for &(n, sigma, z) in grid {
        let Ok(p) = Thm2Params::new(n, sigma, z) else {
            continue; // infeasible corner of the grid
        };
        let text = gen_thm2_string(&p).expect("feasible params generate");
        let input = LabeledText::new("gray-blocks", &format!("n={n};sigma={sigma};z={z}"), text);
        let mut report = measure_labeled(&input);
        report
            .checks
            .push(Check::new("t2_lz_le_4k_plus_4", report.z <= 4 * p.k + 4));
        let novlz_floor = if p.k > 0 {
            let arg = n / (4 * p.k * p.d as usize);
            if arg >= 1 {
                p.k as f64 * (arg as f64).log2()
            } else {
                0.0
            }
        } else {
            0.0
        };
        report.checks.push(Check::new(
            "t2_novlz_ge_k_log",
            report.z_no as f64 >= novlz_floor,
        ));
        reports.push(report);
    }
    reports
}

pub fn default_theorem2_grid() -> Vec<(usize, u32, usize)> {
    let mut grid = Vec::new();
    for n in [1usize << 10, 1 << 14, 1 << 18] {
        for sigma in [2u32, 4] {
            for z in [16usize, 64, 256] {
                grid.push((n, sigma, z));
            }
        }
    }
    grid
}

/// Random-sweep shape for [`verify_theorem3`].
#[derive(Debug, Clone)]
pub struct RandomSweep {
    pub count: usize,
    pub max_n: usize,
    pub sigmas: Vec<u32>,
    pub seed: u64,
}

impl Default for RandomSweep {
    fn default() -> Self {
        RandomSweep {
            count: 10_000,
            max_n: 256,
            sigmas: vec![2, 3, 4],
            seed: 0xC0FFEE,
        }
    }
}

/// Exact closed-form sizes on the four example families (including the
/// truncated variants) plus the strict/non-strict inequality pairs on a
/// seeded random sweep. The strict halves are equivalent to the integer
/// checks `z <= 2*z3 - 1` already in the universal set.
pub fn verify_theorem3(k_max: u32, c_k_max: u32, sweep: &RandomSweep) -> Vec<Report> {
    let mut reports = Vec::new();
    let mut family = |text: Text, family: &str, params: String, expect: Vec<(&str, usize)>| {
        let input = LabeledText::new(family, &params, text);
        let mut report = measure_labeled(&input);
        let sizes = [
            ("z", report.z),
            ("z_no", report.z_no),
            ("z3", report.z3),
            ("z3_no", report.z3_no),
        ];
        let exact = expect.iter().all(|&(which, want)| {
            sizes
                .iter()
                .find(|&&(name, _)| name == which)
                .map(|&(_, got)| got == want)
                .unwrap_or(false)
        });
        let label = expect
            .iter()
            .map(|&(which, want)| format!("{which}={want}"))
            .collect::<Vec<_>>()
            .join(",");
        report
            .checks
            .push(Check::new(&format!("t3_exact[{label}]"), exact));
        reports.push(report);
    };

    for k in 2..=k_max {
        let t = gen_powers_a(k).expect("k in range");
        family(t, "powers-a", format!("k={k}"), vec![
            ("z", 2 * k as usize - 1),
            ("z3", k as usize),
        ]);
        let t = gen_powers_b(k, false).expect("k in range");
        family(t, "powers-b", format!("k={k}"), vec![
            ("z", 2 * k as usize),
            ("z3", 2 * k as usize),
        ]);
        let t = gen_powers_b(k, true).expect("k in range");
        family(t, "powers-b", format!("k={k};truncated"), vec![
            ("z", 2 * k as usize - 1),
            ("z3", 2 * k as usize - 1),
        ]);
        let t = gen_ab_power(k).expect("k in range");
        family(t, "ab-power", format!("k={k}"), vec![
            ("z_no", k as usize),
            ("z3_no", k as usize),
        ]);
    }
    for k in 1..=c_k_max {
        let t = gen_powers_c(k, false).expect("k in range");
        family(t, "powers-c", format!("k={k}"), vec![
            ("z_no", 4 * k as usize + 3),
            ("z3_no", 2 * k as usize + 2),
        ]);
        let t = gen_powers_c(k, true).expect("k in range");
        family(t, "powers-c", format!("k={k};truncated"), vec![
            ("z_no", 4 * k as usize + 1),
            ("z3_no", 2 * k as usize + 1),
        ]);
    }

    let mut rng = SplitMix64::new(sweep.seed);
    for idx in 0..sweep.count {
        let sigma = sweep.sigmas[idx % sweep.sigmas.len().max(1)];
        let n = 1 + (rng.next() as usize) % sweep.max_n;
        let seed = rng.next();
        let text = gen_random(n, sigma, seed).expect("in-guard random text");
        reports.push(measure_labeled(&LabeledText::new(
            "random",
            &format!("idx={idx};n={n};sigma={sigma};seed={seed}"),
            text,
        )));
    }
    reports
}

/// Greedy size equals the DP minimum for every binary string up to
/// `binary_max_len`, every ternary string up to `ternary_max_len`, and a
/// seeded sample of longer strings. One summary report per space.
pub fn verify_lemma2(
    binary_max_len: usize,
    ternary_max_len: usize,
    random_samples: usize,
    seed: u64,
) -> Vec<Report> {
    let mut reports = Vec::new();

    let mut summary = |space: &str, tested: usize, all_optimal: bool| {
        reports.push(Report {
            string_id: format!("lemma2/{space}"),
            family: "lemma2".into(),
            params: format!("{space};strings={tested}"),
            n: 0,
            sigma: 0,
            z: 0,
            z_no: 0,
            z3: 0,
            z3_no: 0,
            ratio_no_over_ov: 0.0,
            bound_t1: 0.0,
            checks: vec![Check::new("lemma2_greedy_equals_min", all_optimal)],
        });
    };

    let check_space = |sigma: u32, max_len: usize| -> (usize, bool) {
        let mut tested = 0usize;
        let mut ok = true;
        for len in 1..=max_len {
            let mut digits = vec![0u32; len];
            loop {
                let text = Text::new(digits.clone(), sigma).expect("digits below sigma");
                tested += 1;
                if assert_greedy_optimal(&text) != Ok(true) {
                    ok = false;
                }
                // next word in base sigma
                let mut pos = 0;
                while pos < len {
                    digits[pos] += 1;
                    if digits[pos] < sigma {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == len {
                    break;
                }
            }
        }
        (tested, ok)
    };

    let (tested, ok) = check_space(2, binary_max_len);
    summary(&format!("binary_max_len={binary_max_len}"), tested, ok);
    let (tested, ok) = check_space(3, ternary_max_len);
    summary(&format!("ternary_max_len={ternary_max_len}"), tested, ok);

    let mut rng = SplitMix64::new(seed);
    let mut ok = true;
    for _ in 0..random_samples {
        let sigma = 2 + (rng.next() % 3) as u32;
        let n = 1 + (rng.next() as usize) % 64;
        let text = gen_random(n, sigma, rng.next()).expect("in-guard random text");
        if assert_greedy_optimal(&text) != Ok(true) {
            ok = false;
        }
    }
    summary("random_samples", random_samples, ok);
    reports
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Writes the fixed report schema, rows sorted by string id.
pub fn emit_csv<W: Write>(reports: &[Report], mut w: W) -> io::Result<()> {
    let mut sorted: Vec<&Report> = reports.iter().collect();
    sorted.sort_by(|a, b| a.string_id.cmp(&b.string_id));
    writeln!(
        w,
        "family,params,n,sigma,z,z_no,z3,z3_no,ratio_no_over_ov,bound_t1,checks_passed"
    )?;
    for r in sorted {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{:.6},{:.6},{}",
            csv_field(&r.family),
            csv_field(&r.params),
            r.n,
            r.sigma,
            r.z,
            r.z_no,
            r.z3,
            r.z3_no,
            r.ratio_no_over_ov,
            r.bound_t1,
            r.all_passed()
        )?;
    }
    Ok(())
}

pub fn emit_json<W: Write>(reports: &[Report], w: W) -> serde_json::Result<()> {
    let mut sorted: Vec<&Report> = reports.iter().collect();
    sorted.sort_by(|a, b| a.string_id.cmp(&b.string_id));
    serde_json::to_writer_pretty(w, &sorted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_recursive;

    #[test]
    fn measure_worked_example() {
        let r = measure(&Text::from_letters("abababc"));
        assert_eq!((r.z, r.z_no, r.z3, r.z3_no), (4, 5, 3, 4));
        assert!(r.all_passed());
    }

    #[test]
    fn measure_empty_is_vacuous() {
        let r = measure(&Text::from_letters(""));
        assert_eq!((r.z, r.z_no, r.z3, r.z3_no), (0, 0, 0, 0));
        assert!(r.all_passed());
        assert!(r.checks.is_empty());
    }

    #[test]
    fn measure_recursive_family() {
        let r = measure(&gen_recursive(4).unwrap());
        assert_eq!((r.z, r.z_no, r.z3, r.z3_no), (7, 7, 4, 4));
        assert!(r.all_passed());
    }

    #[test]
    fn theorem1_small_run_passes() {
        let inputs = vec![
            LabeledText::new("thue-morse", "n=64", gen_thue_morse(64)),
            LabeledText::new("random", "n=128", gen_random(128, 2, 1).unwrap()),
        ];
        let reports = verify_theorem1(&inputs, &TransformConfig::default());
        assert!(reports.iter().all(|r| r.all_passed()));
        // Overlap-free strings parse identically with and without overlaps.
        assert_eq!(reports[0].z, reports[0].z_no);
    }

    #[test]
    fn theorem2_example_points() {
        let reports = verify_theorem2(&[(64, 2, 16), (100, 2, 8), (4096, 2, 64), (4096, 4, 64)]);
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().all(|r| r.all_passed()));
        // Degenerate branch: a^100 has LZ size 2.
        assert_eq!(reports[1].z, 2);
    }

    #[test]
    fn theorem1_ratio_grows_with_n_at_fixed_z() {
        let mut last = 0.0f64;
        for n in [1usize << 12, 1 << 14, 1 << 16] {
            let p = Thm2Params::new(n, 2, 64).expect("feasible");
            let r = measure(&gen_thm2_string(&p).expect("generates"));
            assert!(
                r.ratio_no_over_ov > last,
                "ratio not growing at n={n}: {} vs {last}",
                r.ratio_no_over_ov
            );
            last = r.ratio_no_over_ov;
        }
    }

    #[test]
    fn theorem3_families_and_small_sweep() {
        let sweep = RandomSweep {
            count: 200,
            max_n: 64,
            sigmas: vec![2, 3, 4],
            seed: 7,
        };
        let reports = verify_theorem3(6, 4, &sweep);
        for r in &reports {
            assert!(r.all_passed(), "{}: {:?}", r.string_id, r.failed_checks());
        }
    }

    #[test]
    fn lemma2_small_spaces() {
        let reports = verify_lemma2(7, 4, 10, 3);
        assert!(reports.iter().all(|r| r.all_passed()));
        assert_eq!(reports[0].params, "binary_max_len=7;strings=254");
        assert_eq!(reports[1].params, "ternary_max_len=4;strings=120");
    }

    #[test]
    fn csv_schema_is_exact() {
        let reports = vec![measure(&Text::from_letters("abababc"))];
        let mut buf = Vec::new();
        emit_csv(&reports, &mut buf).unwrap();
        let out = String::from_utf8(buf).unwrap();
        let mut lines = out.lines();
        assert_eq!(
            lines.next().unwrap(),
            "family,params,n,sigma,z,z_no,z3,z3_no,ratio_no_over_ov,bound_t1,checks_passed"
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("adhoc,,7,3,4,5,3,4,"));
        assert!(row.ends_with(",true"));
    }

    #[test]
    fn json_emits_sorted_records() {
        let reports = vec![
            measure_labeled(&LabeledText::new("b", "x", Text::from_letters("ab"))),
            measure_labeled(&LabeledText::new("a", "y", Text::from_letters("ba"))),
        ];
        let mut buf = Vec::new();
        emit_json(&reports, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v[0]["family"], "a");
        assert_eq!(v[1]["family"], "b");
    }
}
