//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dtjones_core::cjp::{
    habiro_left_torus_check, jones_thm1, jones_thm2, jones_thm3_neg, jones_thm3_pos, jones_torus,
    walsh_colored_jones,
};
use dtjones_core::knots::{takata_tables_general, two_bridge_params, TwistFamily};
use dtjones_core::lattice::MultiIndex;
use dtjones_core::kzseries::check_ufrak_alternative;
use dtjones_core::qalgebra::{lp_invert_q, LaurentPoly};
use dtjones_core::takata::{takata_a, takata_a_closed_m2_plus_variant, takata_colored_jones};
use dtjones_core::verify::{run_suite, CheckResult, Suite, VerifyOptions};
use dtjones_core::Result;

struct Outcome {
    passed: bool,
    note: String,
}

fn ok(passed: bool, note: impl Into<String>) -> Outcome {
    Outcome { passed, note: note.into() }
}

fn from_result(r: Result<Outcome>) -> Outcome {
    r.unwrap_or_else(|e| ok(false, format!("error: {e}")))
}

fn normalized(v: &LaurentPoly, n: usize) -> bool {
    if n == 1 {
        v.is_one()
    } else {
        v.eval_at_one() == 1.into()
    }
}

fn criterion_1() -> Result<Outcome> {
    let mut count = 0;
    for m in 1..=2 {
        for p in 1..=2 {
            let mm = two_bridge_params(m as u32, p as u32, TwistFamily::MinusMinus)?;
            let mp = two_bridge_params(m as u32, p as u32, TwistFamily::MinusPlus)?;
            for n in 1..=5 {
                let values = [
                    ("thm1", jones_thm1(m, p, n)?),
                    ("thm2", jones_thm2(m, p, n)?),
                    ("thm2 m-1", jones_thm2(m - 1, p, n)?),
                    ("thm3pos", jones_thm3_pos(m, p, n)?),
                    ("thm3neg", jones_thm3_neg(m, p, n)?),
                    ("torus", jones_torus(p, n)?),
                    ("walsh +p", walsh_colored_jones(m, p, n)?),
                    ("walsh -p", walsh_colored_jones(m, -p, n)?),
                    ("takata mm", takata_colored_jones(&mm, n)?),
                    ("takata mp", takata_colored_jones(&mp, n)?),
                    ("habiro", habiro_left_torus_check(p, n)?),
                ];
                for (name, v) in &values {
                    if !normalized(v, n) {
                        return Ok(ok(false, format!("{name} at m={m},p={p},N={n}")));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(ok(true, format!("{count} evaluations")))
}

fn criterion_2() -> Result<Outcome> {
    let mut points: Vec<(i64, i64, usize)> = Vec::new();
    for m in 1..=2 {
        for p in 1..=2 {
            for n in 1..=5 {
                points.push((m, p, n));
            }
        }
    }
    points.push((2, 2, 4));
    for &(m, p, n) in &points {
        let mm = two_bridge_params(m as u32, p as u32, TwistFamily::MinusMinus)?;
        let mp = two_bridge_params(m as u32, p as u32, TwistFamily::MinusPlus)?;
        if jones_thm1(m, p, n)? != takata_colored_jones(&mm, n)? {
            return Ok(ok(false, format!("thm1 at m={m},p={p},N={n}")));
        }
        if jones_thm2(m, p, n)? != takata_colored_jones(&mp, n)? {
            return Ok(ok(false, format!("thm2 at m={m},p={p},N={n}")));
        }
    }
    Ok(ok(true, format!("{} grid points, both families", points.len())))
}

fn criterion_3() -> Result<Outcome> {
    for m in 1..=3 {
        for p in 1..=3 {
            for n in 1..=6 {
                if jones_thm3_pos(m, p, n)? != walsh_colored_jones(m, p, n)? {
                    return Ok(ok(false, format!("thm3pos at m={m},p={p},N={n}")));
                }
                if jones_thm3_neg(m, p, n)? != walsh_colored_jones(m, -p, n)? {
                    return Ok(ok(false, format!("thm3neg at m={m},p={p},N={n}")));
                }
            }
        }
    }
    Ok(ok(true, "m,p <= 3, N <= 6"))
}

fn criterion_4() -> Result<Outcome> {
    for p in 1..=2 {
        for n in 1..=5 {
            if lp_invert_q(&jones_thm3_neg(1, p, n)?) != jones_torus(p, n)? {
                return Ok(ok(false, format!("torus case at p={p},N={n}")));
            }
            for m in 0..=2 {
                if m >= 1 && lp_invert_q(&jones_thm3_pos(m + 1, p, n)?) != jones_thm1(m, p, n)? {
                    return Ok(ok(false, format!("thm3pos/thm1 at m={m},p={p},N={n}")));
                }
                if lp_invert_q(&jones_thm3_neg(m + 1, p, n)?) != jones_thm2(m, p, n)? {
                    return Ok(ok(false, format!("thm3neg/thm2 at m={m},p={p},N={n}")));
                }
            }
        }
    }
    Ok(ok(true, "m <= 2, p <= 2, N <= 5, including m = 0"))
}

fn criterion_5() -> Result<Outcome> {
    let t23 = LaurentPoly::from_terms([(-1, 1), (-3, 1), (-4, -1)]);
    let t25 = LaurentPoly::from_terms([(-2, 1), (-4, 1), (-5, -1), (-6, 1), (-7, -1)]);
    let a = jones_torus(1, 2)?;
    let b = jones_torus(2, 2)?;
    Ok(ok(a == t23 && b == t25, format!("T(2,3): {a}; T(2,5): {b}")))
}

fn suite_outcome(suite: Suite) -> Outcome {
    let report = run_suite(suite, &VerifyOptions { timing: false, ..VerifyOptions::default() });
    let failed: Vec<&CheckResult> = report.failures().collect();
    match failed.first() {
        None => ok(true, format!("{} checks", report.checks.len())),
        Some(c) => ok(false, format!("{} failed at {}", c.name, c.params)),
    }
}

fn criterion_9() -> Result<Outcome> {
    for p in 1..=3 {
        for n in 1..=6 {
            if habiro_left_torus_check(p, n)? != jones_thm3_neg(1, p, n)? {
                return Ok(ok(false, format!("p={p},N={n}")));
            }
        }
    }
    Ok(ok(true, "p <= 3, N <= 6"))
}

fn criterion_10() -> Result<Outcome> {
    let start = Instant::now();
    let v = jones_thm1(2, 2, 4)?;
    let elapsed = start.elapsed();
    Ok(ok(
        elapsed < Duration::from_secs(60) && v.eval_at_one() == 1.into(),
        format!("thm1 m=2,p=2,N=4 in {:.3}s ({} terms)", elapsed.as_secs_f64(), v.len()),
    ))
}

fn plus_variant_agrees() -> Result<bool> {
    let tb = two_bridge_params(2, 1, TwistFamily::MinusPlus)?;
    let tabs = takata_tables_general(&tb)?;
    let nbar = MultiIndex::new(vec![0, 0, 1, 1, 1]).expect("sorted");
    Ok(takata_a(&tb, &tabs, &nbar)? == Some(takata_a_closed_m2_plus_variant(1, &nbar)?))
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("normalization", Box::new(|| from_result(criterion_1()))),
        ("thm1/thm2 vs takata", Box::new(|| from_result(criterion_2()))),
        ("thm3 vs walsh", Box::new(|| from_result(criterion_3()))),
        ("mirror closure", Box::new(|| from_result(criterion_4()))),
        ("torus anchor values", Box::new(|| from_result(criterion_5()))),
        ("lemma tables and closed form", Box::new(|| suite_outcome(Suite::Lemmas))),
        ("kz relations and dualities", Box::new(|| suite_outcome(Suite::Kz))),
        ("bailey layer", Box::new(|| suite_outcome(Suite::Bailey))),
        ("habiro check", Box::new(|| from_result(criterion_9()))),
        ("performance", Box::new(|| from_result(criterion_10()))),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all &= o.passed;
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status}: {name} [{}] ({:.2}s)",
            i + 1,
            o.note,
            start.elapsed().as_secs_f64()
        );
    }
    // Documented discrepancies: these readings are expected to disagree.
    let ufrak_variant = check_ufrak_alternative(1, 1, 3).unwrap_or(true);
    println!(
        "expected discrepancy {}: Ufrak(-1; zeta_N) = J_N(K(-m,p); zeta_N) at m=1,p=1,N=3 is {}",
        if ufrak_variant { "MISSING" } else { "OK" },
        ufrak_variant
    );
    let plus_agrees = plus_variant_agrees().unwrap_or(true);
    println!(
        "expected discrepancy {}: closed form variant of a(n) with +n_(5j-2) at p=1, n=(0,0,1,1,1) agrees: {}",
        if plus_agrees { "MISSING" } else { "OK" },
        plus_agrees
    );
    if !all {
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
