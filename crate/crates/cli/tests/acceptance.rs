//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use mvtrop_core::algebra::{check_mv_axioms, CheckMode, LGroup, MvAlgebra, MvValue};
use mvtrop_core::error::Error;
use mvtrop_core::functors::{
    check_closure, check_duality, delta, delta_inverse, detrop, f_equiv, theta, theta_perfect,
    theta_perfect_inverse, trop, verify_cone_iso,
};
use mvtrop_core::logic::{
    axiom_suite, check_equation_chang, parse, parse_equation, tautology_check, vc_membership, BinOp, Term,
};
use mvtrop_core::qpoints::{
    check_flatness, classify_regularity, find_divisible_between, frobenius_action, gp_invariant,
    group_from_action, theta_pt, Characteristic, DefaultExponent, Exponent, Regularity,
};
use mvtrop_core::shorthand::parse_algebra;
use mvtrop_core::{Rational, Verdict};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mvtrop").chain(args.iter().copied());
    let code = mvtrop_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn report_err(e: Error) -> String {
    e.to_string()
}

fn c1_mv_axioms() -> Outcome {
    let mut count = 0;
    let mut finite: Vec<MvAlgebra> = (2..=7).map(|n| MvAlgebra::FiniteChain { n }).collect();
    finite.push(parse_algebra("prod:chain:2,chain:3").map_err(report_err)?);
    for a in &finite {
        let r = check_mv_axioms(a, CheckMode::Exhaustive).map_err(report_err)?;
        ensure(r.verdict == Verdict::Valid, || format!("{a}: {r}"))?;
        count += 1;
    }
    for a in [MvAlgebra::Chang, MvAlgebra::RationalInterval] {
        let r = check_mv_axioms(&a, CheckMode::sampled(1000, 1)).map_err(report_err)?;
        ensure(r.is_valid() && r.checked == 1000, || format!("{a}: {r}"))?;
        count += 1;
    }
    Ok(format!("{count} algebras, exhaustive and sampled (1000, seed 1)"))
}

fn c2_theta_chang() -> Outcome {
    for n in 1..=50u64 {
        let bound = n.to_string();
        let (code, out, err) = cli(&["theta", "--algebra", "chang", "--bound", &bound]);
        ensure(code == 0, || format!("exit {code}: {err}"))?;
        let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let got: BTreeSet<String> = v["elements"]
            .as_array()
            .ok_or("no elements")?
            .iter()
            .map(|e| e.as_str().unwrap().to_string())
            .collect();
        let mut expected: BTreeSet<String> = (0..=n).map(|k| format!("(0,{k})")).collect();
        expected.insert("(1,0)".into());
        ensure(got == expected, || format!("bound {n}: {got:?}"))?;
    }
    Ok("bounds 1..=50 match {(0,k): k <= N} plus (1,0)".into())
}

fn c3_theta_interval() -> Outcome {
    let t = theta(&MvAlgebra::RationalInterval);
    let zero = Rational::zero();
    let one = Rational::one();
    let two = Rational::from(2);
    let mut checked = 0;
    for d in 1..=100i64 {
        for n in 0..=d {
            let x = q(n, d);
            let sq = (&(&two * &x) - &one).max(zero.clone());
            let oracle = x >= (&two * &sq).min(one.clone());
            let closed = x <= q(2, 3) || x == one;
            ensure(oracle == closed, || format!("oracle disagrees with closed form at {x}"))?;
            let got = t.contains(&MvValue::Scalar(x.clone()));
            ensure(got == oracle, || format!("membership of {x}: got {got}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} rationals with denominator <= 100 agree with [0, 2/3] u {{1}}"))
}

fn boolean_products() -> Result<Vec<MvAlgebra>, String> {
    let shorthands = [
        "chain:2",
        "bool:2",
        "bool:3",
        "bool:4",
        "prod:bool:2,chain:2",
        "prod:(bool:2),(bool:2)",
        "prod:(prod:chain:2,chain:2),chain:2,chain:2",
    ];
    shorthands.iter().map(|s| parse_algebra(s).map_err(report_err)).collect()
}

fn c4_duality() -> Outcome {
    let r = check_duality(&MvAlgebra::Chang, 25);
    ensure(r.is_valid(), || format!("chang: {r}"))?;
    let mut count = 0;
    for a in boolean_products()? {
        ensure(a.cardinality().unwrap() <= 16, || format!("{a} is too large"))?;
        let r = check_duality(&a, 0);
        ensure(r.verdict == Verdict::Valid, || format!("{a}: {r}"))?;
        count += 1;
    }
    let r = check_duality(&MvAlgebra::FiniteChain { n: 3 }, 0);
    ensure(r.verdict == Verdict::Counterexample, || format!("chain:3 not refuted: {r}"))?;
    let w = r.witness.unwrap()["x"].clone();
    ensure(w == "1/2", || format!("chain:3 witness {w}"))?;
    Ok(format!("chang bound 25 and {count} Boolean products hold; chain:3 fails at x = 1/2"))
}

fn c5_closure() -> Outcome {
    let r = check_closure(&MvAlgebra::Chang, 15);
    ensure(r.is_valid(), || r.to_string())?;
    Ok(format!("{} pairs from theta(chang) at bound 15, zero violations", r.checked))
}

/// The failing points of `(2x)² = 2(x²)` on a chain are `1/4 < x < 3/4`.
fn closest_failure_to_half(n: u32) -> Option<Rational> {
    let d = i64::from(n) - 1;
    (0..=d)
        .map(|k| q(k, d))
        .filter(|x| *x > q(1, 4) && *x < q(3, 4))
        .min_by_key(|x| (x - &q(1, 2)).abs())
}

fn c6_vc_membership() -> Outcome {
    for s in ["chain:2", "prod:chain:2,chain:2"] {
        let a = parse_algebra(s).map_err(report_err)?;
        let r = vc_membership(&a).map_err(report_err)?;
        ensure(r.verdict == Verdict::Valid, || format!("{s}: {r}"))?;
    }
    for n in 3..=7 {
        let r = vc_membership(&MvAlgebra::FiniteChain { n }).map_err(report_err)?;
        let expected = closest_failure_to_half(n).ok_or("oracle found no failure")?;
        ensure(r.verdict == Verdict::Counterexample, || format!("chain:{n} accepted"))?;
        let w = r.witness.unwrap()["x"].clone();
        ensure(w == expected.to_string(), || format!("chain:{n}: witness {w}, expected {expected}"))?;
    }
    Ok("chain:2 and bool:2 accepted; chain:3..=7 rejected at the point closest to 1/2".into())
}

fn c7_round_trips() -> Outcome {
    let groups = [
        LGroup::Integers,
        LGroup::q_subgroup(Characteristic::rationals()),
        LGroup::q_subgroup(Characteristic::localization(&[2]).unwrap()),
        LGroup::q_subgroup(Characteristic::localization(&[2, 3]).unwrap()),
    ];
    for g in &groups {
        ensure(detrop(&trop(g)) == *g, || format!("detrop(trop({g}))"))?;
        let back = delta_inverse(&delta(g)).map_err(report_err)?;
        ensure(back == *g, || format!("delta_inverse(delta({g})) = {back}"))?;
    }
    for p in [MvAlgebra::Chang, delta(&groups[1])] {
        let back = theta_perfect_inverse(&theta_perfect(&p).map_err(report_err)?);
        ensure(back == p, || format!("theta_perfect round trip on {p} gave {back}"))?;
    }
    let cone = f_equiv(&trop(&LGroup::Integers)).map_err(report_err)?;
    ensure(cone == theta_perfect(&MvAlgebra::Chang).map_err(report_err)?, || "cones differ".into())?;
    let r = verify_cone_iso(&cone, &MvAlgebra::Chang, 20).map_err(report_err)?;
    ensure(r.is_valid(), || r.to_string())?;
    Ok(format!("4 groups, 2 perfect algebras, cone iso at bound 20 ({} checks)", r.checked))
}

fn c8_axioms() -> Outcome {
    for n in 2..=6 {
        let r = axiom_suite(&MvAlgebra::FiniteChain { n }, CheckMode::Exhaustive).map_err(report_err)?;
        ensure(r.verdict == Verdict::Valid, || format!("chain:{n}: {r}"))?;
    }
    let mode = CheckMode::Sampled {
        count: 500,
        seed: 1,
        bound: 12,
    };
    let r = axiom_suite(&MvAlgebra::RationalInterval, mode).map_err(report_err)?;
    ensure(r.is_valid(), || format!("interval: {r}"))?;
    let tnd = parse("x (+) ~x").map_err(report_err)?;
    for n in 2..=9 {
        let r = tautology_check(&tnd, &MvAlgebra::FiniteChain { n }).map_err(report_err)?;
        ensure(r.verdict == Verdict::Valid, || format!("x (+) ~x on chain:{n}: {r}"))?;
    }
    let r = check_equation_chang(&parse_equation("x (+) ~x = 1").map_err(report_err)?, Some(25)).map_err(report_err)?;
    ensure(r.is_valid(), || format!("x (+) ~x on chang: {r}"))?;
    let r = tautology_check(&parse("x \\/ ~x").map_err(report_err)?, &MvAlgebra::FiniteChain { n: 3 })
        .map_err(report_err)?;
    ensure(r.verdict == Verdict::Counterexample, || "excluded middle accepted in chain:3".into())?;
    ensure(r.details["value"] == "1/2", || format!("value {}", r.details["value"]))?;
    Ok("axioms 1-4 on chain:2..=6 and 500 seeded rationals; excluded middle fails in chain:3 with value 1/2".into())
}

fn named_characteristics() -> Vec<(&'static str, Characteristic)> {
    vec![
        ("Z", Characteristic::integers()),
        ("Q", Characteristic::rationals()),
        ("Z[1/2]", Characteristic::localization(&[2]).unwrap()),
        ("Z[1/6]", Characteristic::localization(&[2, 3]).unwrap()),
        (
            "chi:3^2",
            Characteristic::new(DefaultExponent::Zero, [(3, Exponent::Finite(2))]).unwrap(),
        ),
    ]
}

/// Number of classes modulo `pG` met by the fragment `{n/d : d <= 36, |n| <= 3p·d}` of `G`.
fn brute_force_gp(chi: &Characteristic, p: u64) -> u64 {
    let pr = Rational::from(p as i64);
    let mut reps: Vec<Rational> = Vec::new();
    for d in 1..=36i64 {
        if !chi.contains(&q(1, d)) {
            continue;
        }
        let top = 3 * p as i64 * d;
        for n in -top..=top {
            let x = q(n, d);
            if !reps.iter().any(|r| chi.contains(&(&(&x - r) / &pr))) {
                reps.push(x);
            }
        }
    }
    reps.len() as u64
}

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn c9_gp_and_regularity() -> Outcome {
    let chis = named_characteristics();
    for (name, chi) in &chis {
        for p in PRIMES {
            let g = gp_invariant(chi, p).map_err(report_err)?;
            let brute = brute_force_gp(chi, p);
            ensure(g.value == brute, || format!("G/{p}G for {name}: {} vs brute force {brute}", g.value))?;
            ensure(g.value <= p, || format!("Gp > p for {name}"))?;
        }
        let discrete = classify_regularity(chi) == Regularity::RegularlyDiscrete;
        ensure(discrete == chi.is_cyclic(), || format!("{name} misclassified"))?;
    }
    let expected_discrete: Vec<&str> = chis
        .iter()
        .filter(|(_, c)| classify_regularity(c) == Regularity::RegularlyDiscrete)
        .map(|(n, _)| *n)
        .collect();
    ensure(expected_discrete == ["Z", "chi:3^2"], || format!("discrete: {expected_discrete:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut found = 0;
    let mut absent = 0;
    for _ in 0..200 {
        let (_, chi) = &chis[rng.random_range(0..chis.len())];
        let p = PRIMES[rng.random_range(0..PRIMES.len())];
        let d = if chi.is_cyclic() {
            chi.cyclic_denominator().unwrap().try_into().unwrap()
        } else {
            let candidates: Vec<i64> = (1..=36).filter(|&d| chi.contains(&q(1, d))).collect();
            candidates[rng.random_range(0..candidates.len())]
        };
        let a = q(rng.random_range(-40..40), d);
        let b = &a + &q(rng.random_range(1..30), d);
        match find_divisible_between(chi, p, &a, &b) {
            Ok(x) => {
                let ok = a < x && x < b && chi.contains(&x) && chi.contains(&(&x / &Rational::from(p as i64)));
                ensure(ok, || format!("bad witness {x} for ({a}, {b}), p = {p}, {chi}"))?;
                found += 1;
            }
            Err(Error::WitnessNotFound(_)) => {
                ensure(chi.is_cyclic(), || format!("dense {chi} without a witness in ({a}, {b})"))?;
                let step = q(p as i64, d);
                let k = Rational::from((&a / &step).floor() + 1);
                ensure(&k * &step >= b, || format!("missed multiple of {step} in ({a}, {b})"))?;
                absent += 1;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!(
        "Gp matches brute force for 5 groups x 6 primes; 200 intervals: {found} witnesses verified, {absent} certified absent"
    ))
}

fn positive_height_ten(chi: &Characteristic) -> Vec<Rational> {
    let mut out: BTreeSet<Rational> = BTreeSet::new();
    for d in 1..=10 {
        for n in 1..=10 {
            let x = q(n, d);
            if chi.contains(&x) {
                out.insert(x);
            }
        }
    }
    out.into_iter().collect()
}

fn subsets_up_to<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = Vec::new();
    let mut frontier: Vec<(usize, Vec<T>)> = vec![(0, Vec::new())];
    while let Some((start, set)) = frontier.pop() {
        if !set.is_empty() {
            out.push(set.clone());
        }
        if set.len() == k {
            continue;
        }
        for (i, item) in items.iter().enumerate().skip(start) {
            let mut next = set.clone();
            next.push(item.clone());
            frontier.push((i + 1, next));
        }
    }
    out
}

fn prime_support(x: &Rational) -> BTreeSet<u64> {
    [2, 3, 5, 7].into_iter().filter(|&p| x.valuation(p).unwrap_or(0) != 0).collect()
}

fn denominator_primes(x: &Rational) -> BTreeSet<u64> {
    [2, 3, 5, 7].into_iter().filter(|&p| x.valuation(p).unwrap_or(0) < 0).collect()
}

fn c10_flatness() -> Outcome {
    let chis = [
        Characteristic::integers(),
        Characteristic::rationals(),
        Characteristic::localization(&[2]).unwrap(),
    ];
    for chi in &chis {
        let r = check_flatness(&frobenius_action(chi), 1000, 10).map_err(report_err)?;
        ensure(r.is_valid(), || format!("{chi}: {r}"))?;
    }
    let mut sets = 0;
    let universe: Vec<(Rational, BTreeSet<u64>)> = positive_height_ten(&Characteristic::rationals())
        .into_iter()
        .map(|x| {
            let d = denominator_primes(&x);
            (x, d)
        })
        .collect();
    for chi in &chis {
        let cone: Vec<(Rational, BTreeSet<u64>)> = positive_height_ten(chi)
            .into_iter()
            .map(|x| {
                let s = prime_support(&x);
                (x, s)
            })
            .collect();
        let action = frobenius_action(chi);
        for chosen in subsets_up_to(&cone, 4) {
            let probes: Vec<Rational> = chosen.iter().map(|(x, _)| x.clone()).collect();
            let g = group_from_action(&action, &probes).map_err(report_err)?;
            let rebuilt = match &g {
                LGroup::Integers => Characteristic::integers(),
                LGroup::QSubgroup { chi } => chi.clone(),
                other => return Err(format!("reconstructed {other}")),
            };
            let support: BTreeSet<u64> = chosen.iter().flat_map(|(_, s)| s.iter().copied()).collect();
            for y in &probes {
                ensure(rebuilt.contains(y), || format!("{rebuilt} misses probe {y}"))?;
            }
            for (x, _) in universe.iter().filter(|(_, d)| d.is_subset(&support)) {
                ensure(rebuilt.contains(x) == chi.contains(x), || {
                    format!("{chi} vs {rebuilt} from {probes:?} disagree at {x}")
                })?;
            }
            sets += 1;
        }
    }
    let r = verify_cone_iso(&theta_pt(&Characteristic::integers()), &MvAlgebra::Chang, 20).map_err(report_err)?;
    ensure(r.is_valid(), || r.to_string())?;
    Ok(format!("flat on Z, Q, Z[1/2] (1000 samples); {sets} probe sets reconstructed; theta_pt(Z) iso theta(chang) at bound 20"))
}

fn random_term(rng: &mut ChaCha8Rng, depth: u32) -> Term {
    if depth == 0 || rng.random_range(0..10) < 3 {
        return match rng.random_range(0..5) {
            0 => Term::Const0,
            1 => Term::Const1,
            i => Term::var(["x", "y", "z"][i - 2]),
        };
    }
    match rng.random_range(0..7) {
        6 => Term::neg(random_term(rng, depth - 1)),
        i => BinOp::ALL[i].build(random_term(rng, depth - 1), random_term(rng, depth - 1)),
    }
}

struct Golden {
    command: String,
    expected: String,
    code: i32,
}

fn readme_goldens() -> Result<Vec<Golden>, String> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md");
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let mut goldens = Vec::new();
    let mut in_block = false;
    let mut current: Option<Golden> = None;
    for line in text.lines() {
        if line.starts_with("```") {
            in_block = line == "```console";
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ") {
            current = Some(Golden {
                command: cmd.to_string(),
                expected: String::new(),
                code: 0,
            });
        } else if let Some(code) = line.strip_prefix("[exit ").and_then(|s| s.strip_suffix(']')) {
            let mut g = current.take().ok_or("exit marker without a command")?;
            g.code = code.parse().map_err(|_| format!("bad exit marker {line}"))?;
            goldens.push(g);
        } else if let Some(g) = current.as_mut() {
            g.expected.push_str(line);
            g.expected.push('\n');
        }
    }
    Ok(goldens)
}

fn c11_parser_and_goldens() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..10_000 {
        let t = random_term(&mut rng, 8);
        let printed = t.to_string();
        let back = parse(&printed).map_err(|e| format!("term {i} {printed:?}: {e}"))?;
        ensure(back == t, || format!("term {i}: {printed:?} reparsed differently"))?;
    }
    let goldens = readme_goldens()?;
    ensure(!goldens.is_empty(), || "README has no goldens".into())?;
    for g in &goldens {
        let argv = shlex::split(&g.command).ok_or_else(|| format!("cannot split {:?}", g.command))?;
        ensure(argv.first().map(String::as_str) == Some("mvtrop"), || format!("not an mvtrop command: {}", g.command))?;
        let args: Vec<&str> = argv[1..].iter().map(String::as_str).collect();
        let (code, out, _) = cli(&args);
        ensure(code == g.code, || format!("{}: exit {code}, expected {}", g.command, g.code))?;
        ensure(out == g.expected, || format!("{}:\n got: {out}\nwant: {}", g.command, g.expected))?;
    }
    Ok(format!("10000 random terms round-trip; {} README goldens byte-identical", goldens.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("MV axiom suite", c1_mv_axioms),
        ("theta of Chang's algebra", c2_theta_chang),
        ("theta of the rational interval", c3_theta_interval),
        ("duality of theta and theta*", c4_duality),
        ("closure of theta", c5_closure),
        ("V(C) separation", c6_vc_membership),
        ("functor round trips", c7_round_trips),
        ("Lukasiewicz axioms", c8_axioms),
        ("Gp and regularity", c9_gp_and_regularity),
        ("flatness and points", c10_flatness),
        ("parser and README goldens", c11_parser_and_goldens),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS ({secs:.2}s) {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({secs:.2}s) {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
