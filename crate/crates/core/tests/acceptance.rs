//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rootloci::arith::Rational;
use rootloci::moduli::{
    augmented_series, gcd_certificates, gen_function_check, generating_coefficients,
    ideal_equal_up_to, kirwan_ideal, kirwan_series, membership, pi, presentation_link,
    quotient_series, ss_quotient_series_even, stable_ideal, stable_partitions, stable_series_even,
    GradedIdeal,
};
use rootloci::partition::{partitions, Partition};
use rootloci::poly::{c1, BiForm};
use rootloci::thom::{
    check_relations_even, hilbert_degree, projective_degree, top_weights_product, tp_e3, tp_e3_j2,
    tp_kirwan, tp_naive, tp_power_block, tp_reduce, tp_sum, tp_two_block,
};
use rootloci::SymForm;

/// Wall-clock budget for the three-way comparison.
const THREE_WAY_BUDGET: Duration = Duration::from_secs(60);
/// `p(2) + ... + p(10)`.
const PARTITIONS_2_TO_10: usize = 137;
/// Random pairs for the Leibniz rule, and the degree cap.
const LEIBNIZ_PAIRS: usize = 200;
const LEIBNIZ_MAX_DEGREE: usize = 8;
const LEIBNIZ_SEED: u64 = 0x5eed_1eb1;
/// Largest `j` for the generating-function coefficients.
const GEN_JMAX: usize = 12;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn all_partitions() -> Vec<Partition> {
    (2..=10).flat_map(partitions).collect()
}

fn three_way() -> Outcome {
    let set = all_partitions();
    if set.len() != PARTITIONS_2_TO_10 {
        return Err(format!(
            "expected {PARTITIONS_2_TO_10} partitions, got {}",
            set.len()
        ));
    }
    let start = Instant::now();
    for lambda in &set {
        let r = tp_reduce(lambda).map_err(|e| format!("{lambda}: {e}"))?;
        let n = tp_naive(lambda).map_err(|e| format!("{lambda}: {e}"))?;
        let s = tp_sum(lambda).map_err(|e| format!("{lambda}: {e}"))?;
        if r.value != n.value || r.value != s.value {
            return Err(format!("disagreement at {lambda} (d = {})", lambda.d()));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= THREE_WAY_BUDGET {
        return Err(format!("took {elapsed:.1?}, budget {THREE_WAY_BUDGET:?}"));
    }
    Ok(format!("{} partitions in {elapsed:.2?}", set.len()))
}

fn hilbert() -> Outcome {
    let set = all_partitions();
    for lambda in &set {
        let tp = tp_reduce(lambda).map_err(|e| e.to_string())?;
        let got = projective_degree(&tp).map_err(|e| format!("{lambda}: {e}"))?;
        if got != hilbert_degree(lambda) {
            return Err(format!("{lambda}: {got} vs {}", hilbert_degree(lambda)));
        }
    }
    Ok(format!("{} partitions", set.len()))
}

fn spot_values() -> Outcome {
    let cases: [(&str, SymForm); 5] = [
        ("2", SymForm::from_ints(1, &[2])),
        ("2,1", SymForm::from_ints(1, &[6])),
        ("3", SymForm::from_ints(2, &[6, 3])),
        ("2,2", SymForm::from_ints(2, &[12, 16])),
        ("1^3 3", SymForm::from_ints(2, &[120, -48])),
    ];
    for (text, expected) in &cases {
        let lambda = Partition::parse(text).unwrap();
        for tp in [tp_reduce(&lambda), tp_naive(&lambda), tp_sum(&lambda)] {
            let tp = tp.map_err(|e| e.to_string())?;
            if &tp.value != expected {
                return Err(format!(
                    "{lambda} by {}: {} vs {expected}",
                    tp.method, tp.value
                ));
            }
        }
    }
    Ok(format!("{} values, three methods each", cases.len()))
}

fn closed_forms() -> Outcome {
    let mut count = 0;
    let mut check = |label: &str, got: rootloci::ThomPoly| -> Result<(), String> {
        let want = tp_reduce(&got.partition).map_err(|e| e.to_string())?;
        count += 1;
        if got.value == want.value {
            Ok(())
        } else {
            Err(format!(
                "{label} at {}: {} vs {}",
                got.partition, got.value, want.value
            ))
        }
    };
    for d in 2..=12 {
        for i in (1..=d).filter(|i| d % i == 0) {
            check(
                "power block",
                tp_power_block(i, d / i).map_err(|e| e.to_string())?,
            )?;
        }
    }
    for d in 3..=10 {
        for j in 2..d {
            check("kirwan", tp_kirwan(d - j, j).map_err(|e| e.to_string())?)?;
        }
    }
    for lambda in all_partitions() {
        let blocks: Vec<(usize, usize)> = lambda.blocks().collect();
        if let [(i, ei), (j, ej)] = blocks[..] {
            check(
                "two block",
                tp_two_block(i, ei, j, ej).map_err(|e| e.to_string())?,
            )?;
        }
    }
    for h in (2..=6).filter(|h| 2 * h <= 12) {
        for j in 2..h {
            check("e3", tp_e3(h, j).map_err(|e| e.to_string())?)?;
        }
        if h > 2 {
            check("e3 j=2", tp_e3_j2(h).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(format!("{count} closed-form evaluations"))
}

fn random_form(rng: &mut StdRng) -> BiForm {
    let degree = rng.gen_range(0..=LEIBNIZ_MAX_DEGREE);
    let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-9..=9)).collect();
    BiForm::from_ints(&coeffs)
}

fn relations_and_leibniz() -> Outcome {
    for h in [3, 4, 5, 6] {
        let report = check_relations_even(h).map_err(|e| e.to_string())?;
        if !report.holds() {
            return Err(format!("d = {}: {:?}", 2 * h, report.violations()));
        }
    }
    let mut rng = StdRng::seed_from_u64(LEIBNIZ_SEED);
    for _ in 0..LEIBNIZ_PAIRS {
        let a = random_form(&mut rng);
        let b = random_form(&mut rng);
        let lhs = (&a * &b).divided_difference();
        let rhs = &(&b.swap() * &a.divided_difference()) + &(&a * &b.divided_difference());
        if lhs != rhs {
            return Err(format!("Leibniz fails for A = {a}, B = {b}"));
        }
    }
    Ok(format!(
        "relations for d = 6..12, Leibniz on {LEIBNIZ_PAIRS} pairs"
    ))
}

fn moduli_series() -> Outcome {
    for d in 3..=12 {
        let got = quotient_series(&kirwan_ideal(d).map_err(|e| e.to_string())?, 2 * d)
            .map_err(|e| e.to_string())?;
        if !got.agrees_up_to(&kirwan_series(d, 2 * d), 2 * d) {
            return Err(format!("ss series d = {d}: {got}"));
        }
    }
    for d in (4..=12).step_by(2) {
        let st = quotient_series(&stable_ideal(d).map_err(|e| e.to_string())?, 2 * d)
            .map_err(|e| e.to_string())?;
        if !st.agrees_up_to(&stable_series_even(d), 2 * d) {
            return Err(format!("stable series d = {d}: {st}"));
        }
        let aug = augmented_series(&kirwan_ideal(d).map_err(|e| e.to_string())?, 2 * d)
            .map_err(|e| e.to_string())?;
        if !aug.agrees_up_to(&ss_quotient_series_even(d), 2 * d) {
            return Err(format!("ss-quotient series d = {d}: {aug}"));
        }
    }
    Ok("d = 3..12 up to degree 2d".into())
}

fn non_membership() -> Outcome {
    let mut count = 0;
    for h in [3, 4, 5, 6] {
        let ideal = kirwan_ideal(2 * h).map_err(|e| e.to_string())?;
        for j in 2..h {
            let lambda = Partition::ones_plus(h - j, &[j, h]).unwrap();
            let tp = tp_reduce(&lambda).map_err(|e| e.to_string())?;
            let cert = membership(&tp.value, &ideal).map_err(|e| e.to_string())?;
            if cert.member || cert.augmented_rank != cert.span_rank + 1 {
                return Err(format!("{lambda} lies in the ideal"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} classes certified outside"))
}

fn ideal_identities() -> Outcome {
    for d in [6, 8, 10, 12] {
        let p = pi(d);
        let c1p = GradedIdeal::from_forms(vec![&c1() * &p.divided_difference(), &c1() * &p])
            .map_err(|e| e.to_string())?;
        let k = kirwan_ideal(d).map_err(|e| e.to_string())?;
        if !ideal_equal_up_to(&k, &c1p, 2 * d).map_err(|e| e.to_string())? {
            return Err(format!("(Tp1, Tp2) != (c1 dPi, c1 Pi) at d = {d}"));
        }
        let (l0, l0p) = stable_partitions(d).map_err(|e| e.to_string())?;
        let tps = GradedIdeal::from_sym(&[
            tp_reduce(&l0).map_err(|e| e.to_string())?.value,
            tp_reduce(&l0p).map_err(|e| e.to_string())?.value,
        ])
        .map_err(|e| e.to_string())?;
        let st = stable_ideal(d).map_err(|e| e.to_string())?;
        if !ideal_equal_up_to(&tps, &st, 2 * d).map_err(|e| e.to_string())? {
            return Err(format!("(Tp0, Tp0') != (dPi, Pi) at d = {d}"));
        }
    }
    for d in 5..=16 {
        let report = gcd_certificates(d).map_err(|e| e.to_string())?;
        if !report.holds() {
            return Err(format!(
                "d = {d}: gcd(Pi, Pi*) = {}, gcd(Pi, dPi) = {}",
                report.gcd_with_swap, report.gcd_with_divided_difference
            ));
        }
    }
    Ok("ideals for d = 6..12, gcds for d = 5..16".into())
}

fn link() -> Outcome {
    for d in [6, 8, 10, 12] {
        let h = d / 2;
        let pres = presentation_link(d).map_err(|e| e.to_string())?;
        let b = pres.series.to_bound(4 * h - 7);
        let dual = (0..b.len()).all(|k| b[k] == b[4 * h - 7 - k]);
        let total: u64 = b.iter().sum();
        if !dual || total != 2 * (h / 2) as u64 || b.iter().any(|&x| x > 1) {
            return Err(format!("d = {d}: {b:?}"));
        }
    }
    Ok("d = 6..12".into())
}

fn generating_function() -> Outcome {
    for d in 1..=12 {
        let g = generating_coefficients(d, GEN_JMAX);
        let mut fact = Rational::from_integer(BigInt::from(1));
        for (j, gj) in g.iter().enumerate() {
            if j > 0 {
                fact *= Rational::from_integer(BigInt::from(j));
            }
            if gj.scale(&fact) != top_weights_product(d, j) {
                return Err(format!("coefficient j = {j} fails at d = {d}"));
            }
        }
    }
    let mut failures = Vec::new();
    for d in [6, 8] {
        let report = gen_function_check(d, GEN_JMAX, 2 * d).map_err(|e| e.to_string())?;
        if !report.matches_stable_ideal {
            failures.push(format!(
                "d = {d}: ideal differs from (Pi, dPi) first in degree {}{}",
                report.stable_mismatch_degree.unwrap(),
                if report.matches_kirwan_ideal {
                    " (equals (Tp1, Tp2))"
                } else {
                    ""
                }
            ));
        }
    }
    if failures.is_empty() {
        Ok(format!(
            "coefficients j <= {GEN_JMAX}, d <= 12; ideals for d = 6, 8"
        ))
    } else {
        Err(format!("coefficients hold; {}", failures.join("; ")))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("three-way agreement", three_way),
        ("Hilbert degree", hilbert),
        ("spot values", spot_values),
        ("closed forms", closed_forms),
        ("relations and Leibniz rule", relations_and_leibniz),
        ("moduli series", moduli_series),
        ("non-membership", non_membership),
        ("ideal identities and gcds", ideal_identities),
        ("link Betti numbers", link),
        ("generating function", generating_function),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
