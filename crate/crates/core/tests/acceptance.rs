//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use softset::cli;
use softset::expr::{eval_str, parse_str};
use softset::laws::{
    check_exhaustive, check_random, enumerate_soft_sets, law_catalog, mutant_catalog, Outcome,
};
use softset::{load_workspace, render_workspace, SoftSet};

use common::oracle::compare_pair;
use common::{context, random_expr, random_raw_pairs, random_set, random_workspace};

type Criterion = (&'static str, fn() -> Result<String, String>);

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("softset").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

const EXPECTED_RENDERINGS: [(&str, &str); 4] = [
    (
        "F & G",
        "softset result:\n  e3: h2 h4\n  e4: h1\n  e5: h2 h3 h4 h5\n  e7: h3\n",
    ),
    (
        "F | G",
        "softset result:\n  e1: h3 h5\n  e2: h2 h3 h4 h5\n  e3: h2 h4\n  e4: h1\n  e5: h1 h2 h3 h4 h5\n  e6: h3\n  e7: h3 h5\n",
    ),
    (
        "F^c",
        "softset result:\n  e1: h1 h2 h3 h4 h5\n  e2: h1 h4\n  e3: h1 h3 h5\n  e4: h2 h3 h4 h5\n  e6: h1 h2 h3 h4 h5\n  e7: h1 h2 h4\n  e8: h1 h2 h3 h4 h5\n",
    ),
    // e2 is {h2, h3, h5} by the definition of difference; the published
    // example prints {h2}.
    ("F - G", "softset result:\n  e2: h2 h3 h5\n  e5: h1\n  e7: h5\n"),
];

fn worked_example_regression() -> Result<String, String> {
    let start = Instant::now();
    let (code, report, err) = run_cli(&["paper-example"]);
    ensure(code == cli::EXIT_SUCCESS, || format!("exit {code}: {err}"))?;
    ensure(report.ends_with("4/4 fixtures match\n"), || report.clone())?;
    ensure(
        report.contains("ERRATUM e2: the published worked example prints {h2}; the definition yields {h2, h3, h5}"),
        || "erratum note missing".into(),
    )?;

    let path = env!("CARGO_MANIFEST_DIR").to_string() + "/examples/houses.sset";
    for (expression, expected) in EXPECTED_RENDERINGS {
        let (code, out, err) = run_cli(&["eval", &path, expression]);
        ensure(code == 0, || format!("{expression}: exit {code}: {err}"))?;
        ensure(out == expected, || {
            format!("{expression}: got\n{out}expected\n{expected}")
        })?;
    }
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("4 renderings byte-exact, erratum noted, {took:?}"))
}

fn exhaustive_law_verification() -> Result<String, String> {
    let start = Instant::now();
    let small = context(2, 2);
    ensure(enumerate_soft_sets(&small).unwrap().len() == 16, || {
        "expected 16 soft sets".into()
    })?;
    let mut tuples = 0;
    for law in law_catalog() {
        let report = check_exhaustive(law, &small).map_err(|e| e.to_string())?;
        let expected = 16u64.pow(law.arity as u32);
        ensure(report.passed(), || {
            format!("{} failed: {:?}", law.id, report.outcome)
        })?;
        ensure(report.cases == expected, || {
            format!("{}: {} cases, expected {expected}", law.id, report.cases)
        })?;
        tuples += report.cases;
    }
    let wider = context(3, 2);
    ensure(enumerate_soft_sets(&wider).unwrap().len() == 64, || {
        "expected 64 soft sets".into()
    })?;
    let mut wide_laws = 0;
    for law in law_catalog().iter().filter(|l| l.arity <= 2) {
        let report = check_exhaustive(law, &wider).map_err(|e| e.to_string())?;
        let expected = 64u64.pow(law.arity as u32);
        ensure(report.passed(), || {
            format!("{} failed at 3x2: {:?}", law.id, report.outcome)
        })?;
        ensure(report.cases == expected, || {
            format!("{}: {} cases, expected {expected}", law.id, report.cases)
        })?;
        tuples += report.cases;
        wide_laws += 1;
    }
    let took = within(Duration::from_secs(10), start)?;
    Ok(format!(
        "{} laws at |U|=2,|E|=2 and {wide_laws} at |U|=3,|E|=2, {tuples} tuples, {took:?}",
        law_catalog().len()
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    let small = context(2, 2);
    let all = enumerate_soft_sets(&small).unwrap();
    let mut pairs = 0;
    for s in &all {
        for t in &all {
            compare_pair(s, t)?;
            pairs += 1;
        }
    }
    let big = context(6, 6);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for _ in 0..10_000 {
        let s = random_set(&mut rng, &big);
        let t = random_set(&mut rng, &big);
        compare_pair(&s, &t)?;
        pairs += 1;
    }
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn mutation_sensitivity() -> Result<String, String> {
    let ctx = context(3, 3);
    let mutants = mutant_catalog();
    ensure(mutants.len() >= 5, || "fewer than five mutants".into())?;
    let mut worst = 0;
    for law in mutants {
        let report = check_random(law, &ctx, 1000, 0).map_err(|e| e.to_string())?;
        let Outcome::Counterexample(cx) = &report.outcome else {
            return Err(format!("{} survived 1000 trials", law.id));
        };
        let replay = cx.replay(law).map_err(|e| e.to_string())?;
        ensure(replay.is_violation(), || {
            format!("{}: shrunk tuple no longer violates", law.id)
        })?;
        if law.id == "mutant-difference-commutes" {
            ensure(
                cx.context.universe_size() == 1 && cx.context.parameter_count() == 1,
                || format!("difference-commutes shrank to {:?}", cx.context),
            )?;
        }
        worst = worst.max(report.cases);
    }
    Ok(format!(
        "{} mutants refuted, worst after {worst} trials",
        mutants.len()
    ))
}

fn round_trips() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let e = random_expr(&mut rng, 5);
        let text = e.render();
        let parsed = parse_str(&text).map_err(|err| format!("{text}: {err}"))?;
        ensure(parsed == e, || format!("{text} reparsed differently"))?;
        ensure(parsed.render() == text, || {
            format!("{text} is not a fixpoint")
        })?;
    }

    for _ in 0..1000 {
        let ws = random_workspace(&mut rng);
        let text = render_workspace(&ws);
        let (loaded, warnings) = load_workspace(&text).map_err(|e| format!("{e}\n{text}"))?;
        ensure(warnings.is_empty(), || {
            format!("warnings on rendered text:\n{text}")
        })?;
        ensure(loaded == ws, || {
            format!("load-render-load changed:\n{text}")
        })?;
        ensure(render_workspace(&loaded) == text, || {
            "render not a fixpoint".into()
        })?;
    }

    let lhs = parse_str("(F & G)^c").unwrap();
    let rhs = parse_str("F^c | G^c").unwrap();
    for _ in 0..1000 {
        let mut ws = random_workspace(&mut rng);
        let ctx = ws.context().clone();
        for name in ["F", "G"] {
            if ws.get(name).is_none() {
                ws.bind(name, random_set(&mut rng, &ctx)).unwrap();
            }
        }
        let env = ws.bindings();
        let a = softset::expr::evaluate(&lhs, env, &ctx).map_err(|e| e.to_string())?;
        let b = softset::expr::evaluate(&rhs, env, &ctx).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("De Morgan fails: {a} vs {b}"))?;
    }
    // sanity: the text route agrees with the tree route
    let houses = softset::fixtures::houses();
    let via_text = eval_str("(F & G)^c", houses.bindings(), houses.context()).unwrap();
    let via_tree = softset::expr::evaluate(&lhs, houses.bindings(), houses.context()).unwrap();
    ensure(via_text == via_tree, || {
        "text and tree evaluation disagree".into()
    })?;
    Ok("1000 expressions, 1000 workspaces, 1000 environments".into())
}

fn normalization_property() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut with_empty = 0;
    for i in 0..1000 {
        let ctx = context(1 + i % 6, 1 + (i / 6) % 6);
        let raw = random_raw_pairs(&mut rng, &ctx);
        if raw.iter().any(|(_, objs)| objs.is_empty()) {
            with_empty += 1;
        }
        let filtered: Vec<_> = raw.iter().filter(|(_, o)| !o.is_empty()).cloned().collect();
        let a = SoftSet::new(&ctx, raw.clone()).map_err(|e| e.to_string())?;
        let b = SoftSet::new(&ctx, filtered).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{raw:?}: {a} vs {b}"))?;
        for p in ctx.parameters() {
            if let Some(img) = a.image(p).unwrap() {
                ensure(!img.is_empty(), || {
                    format!("{a} exposes an empty image at {p}")
                })?;
            }
        }
    }
    ensure(with_empty >= 500, || {
        format!("only {with_empty} lists had empty images")
    })?;
    Ok(format!("1000 lists ({with_empty} with empty images)"))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 worked-example regression", worked_example_regression),
        ("2 exhaustive law verification", exhaustive_law_verification),
        ("3 incidence-matrix oracle equivalence", oracle_equivalence),
        ("4 mutation sensitivity", mutation_sensitivity),
        ("5 expression and workspace round-trips", round_trips),
        ("6 normalization property", normalization_property),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
