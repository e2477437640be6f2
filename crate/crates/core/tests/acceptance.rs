//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails or exceeds its time budget.

mod common;

use std::time::{Duration, Instant};

use common::{fixture, fold_rec, random_word, rng};
use foldsys::alphabet::Alphabet;
use foldsys::folding::{
    fold, fold_permutation, fold_trace, split_updown, unfold, Direction, ProcString,
};
use foldsys::fsystem::{FSystem, Limits};
use foldsys::pumping::{
    build_plan, is_prime, plan_to_family, refute_unary_family, verify_family, verify_plan,
    Lemma3Case, LemmaKind, PlanConfig, PumpFamily, SourceDecomposition, StrandPlan,
};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn proc(v: &str) -> ProcString {
    v.parse().unwrap()
}

fn load(name: &str) -> FSystem {
    FSystem::load(&fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn plan(name: &str) -> Result<(FSystem, StrandPlan), String> {
    let phi = load(name);
    let plan = build_plan(&phi, &PlanConfig::default()).map_err(|e| format!("{name}: {e}"))?;
    Ok((phi, plan))
}

/// Plan reconstruction for `j0..=j0+3`, part count, positive pumping and
/// the oracle check of the family for `0..=imax`.
fn check_pipeline(name: &str, parts: usize, imax: usize) -> Result<(FSystem, StrandPlan), String> {
    let (phi, plan) = plan(name)?;
    let report = verify_plan(&plan, &phi, plan.j0..=plan.j0 + 3);
    ensure(report.passed(), || {
        format!("{name}: plan {:?}", report.first_failure())
    })?;
    for (x, m) in plan.xi.iter().zip(&plan.mu) {
        ensure(x.chars().count() == m.chars().count(), || {
            format!("{name}: window lengths")
        })?;
    }
    let family = plan_to_family(&plan);
    ensure(family.parts.len() == parts, || {
        format!("{name}: {} parts, expected {parts}", family.parts.len())
    })?;
    ensure(family.pumped_total() > 0, || {
        format!("{name}: nothing pumped")
    })?;
    let report = verify_family(&family, &phi, 0..=imax, &Limits::default())
        .map_err(|e| format!("{name}: {e}"))?;
    ensure(report.passed(), || {
        format!("{name}: family {:?}", report.first_failure())
    })?;
    Ok((phi, plan))
}

fn worked_example() -> Outcome {
    let folded = fold("abcde", &proc("dduud")).map_err(|e| e.to_string())?;
    ensure(folded == "dcabe", || format!("fold gave {folded}"))?;
    let trace = fold_trace("abcde", &proc("dduud")).map_err(|e| e.to_string())?;
    let labels: Vec<&str> = trace
        .steps
        .iter()
        .map(|s| match s.direction {
            Direction::Up => "up",
            Direction::Down => "down",
        })
        .collect();
    ensure(labels == ["down", "down", "up", "up", "down"], || {
        format!("labels {labels:?}")
    })?;
    ensure(trace.result() == "dcabe", || "trace result".into())?;
    Ok("fold(abcde, dduud) = dcabe; steps down,down,up,up,down".into())
}

fn folding_identities() -> Outcome {
    let mut r = rng(2024);
    let sigma = ['a', 'b', 'c'];
    for case in 0..1000 {
        let n = r.gen_range(0..=12);
        let w = random_word(&mut r, &sigma, n);
        let v = random_word(&mut r, &['u', 'd'], n);
        let p = proc(&v);
        let f = fold(&w, &p).map_err(|e| e.to_string())?;
        let ctx = || format!("case {case}: w={w} v={v}");
        ensure(Some(&f) == fold_rec(&w, &v).as_ref(), ctx)?;
        // two-way identity
        let (up, down) = split_updown(&w, &p).unwrap();
        ensure(
            f == format!("{}{down}", up.chars().rev().collect::<String>()),
            ctx,
        )?;
        // composition at every split point
        for k in 0..=n {
            let (x, y) = w.split_at(k);
            let (s, t) = v.split_at(k);
            let (yu, yd) = split_updown(y, &proc(t)).unwrap();
            let composed = format!(
                "{}{}{yd}",
                yu.chars().rev().collect::<String>(),
                fold(x, &proc(s)).unwrap()
            );
            ensure(f == composed, ctx)?;
        }
        // length and multiset
        let (mut a, mut b): (Vec<char>, Vec<char>) = (f.chars().collect(), w.chars().collect());
        a.sort_unstable();
        b.sort_unstable();
        ensure(a == b, ctx)?;
        // first direction irrelevant
        if n > 0 {
            let mut flipped = p.clone().into_inner();
            flipped[0] = flipped[0].flipped();
            ensure(fold(&w, &ProcString::new(flipped)).unwrap() == f, ctx)?;
        }
        // positional bijection
        ensure(unfold(&f, &p).unwrap() == w, ctx)?;
        let wc: Vec<char> = w.chars().collect();
        let via: String = fold_permutation(&p).iter().map(|&i| wc[i]).collect();
        ensure(via == f, ctx)?;
    }
    Ok("1000 random pairs, all identities hold".into())
}

fn aaaab_counterexample() -> Outcome {
    let phi = load("aaaab.fsys");
    let got: Vec<String> = phi
        .enumerate(13, &Limits::default())
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|w| w.word)
        .collect();
    let expected = [
        "aaaab",
        "aaaabbb",
        "bbaaaabbb",
        "bbbbaaaabbb",
        "bbbbbbaaaabbb",
    ];
    ensure(got == expected, || format!("got {got:?}"))?;
    Ok(format!("{} words up to length 13", got.len()))
}

fn lemma1_pipeline() -> Outcome {
    let (_, plan) = check_pipeline("aaaab.fsys", 5, 4)?;
    let (SourceDecomposition::Regular(dr), SourceDecomposition::Regular(ds)) =
        (&plan.core_decomposition, &plan.procedure_decomposition)
    else {
        return Err("expected regular decompositions".into());
    };
    ensure(dr.y.len() == 1 && ds.y.len() == 2, || {
        format!("|y_r|={}, |y_s|={}", dr.y.len(), ds.y.len())
    })?;
    ensure(plan.xi[1].len() == 2 && plan.mu[1].len() == 2, || {
        format!("xi_2={:?}", plan.xi[1])
    })?;
    let json = plan_to_family(&plan).to_json();
    Ok(format!("j0={}, |xi_2|=|mu_2|=2, family {json}", plan.j0))
}

fn lemma2_pipelines() -> Outcome {
    let mut done = Vec::new();
    for (name, lemma) in [
        ("anbn_dstar.fsys", LemmaKind::L2CfReg),
        ("anbn_udstar.fsys", LemmaKind::L2CfReg),
        ("astar_undn.fsys", LemmaKind::L2RegCf),
        ("abstar_undn.fsys", LemmaKind::L2RegCf),
    ] {
        let start = Instant::now();
        let (_, plan) = check_pipeline(name, 9, 3)?;
        ensure(plan.lemma == lemma, || {
            format!("{name}: lemma {}", plan.lemma)
        })?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(60), || {
            format!("{name}: {elapsed:?}")
        })?;
        done.push(format!("{name} j0={}", plan.j0));
    }
    Ok(done.join(", "))
}

fn lemma3_pipelines() -> Outcome {
    let mut done = Vec::new();
    for (name, case) in [
        ("anbn_undn.fsys", Lemma3Case::EqualNonzero),
        ("a2nbn_undn.fsys", Lemma3Case::Greater),
        ("anbn_u2ndn.fsys", Lemma3Case::Less),
        ("right_linear.fsys", Lemma3Case::YDegenerate),
        ("left_linear.fsys", Lemma3Case::VDegenerate),
    ] {
        let (_, plan) = check_pipeline(name, 13, 3)?;
        ensure(plan.case == Some(case), || {
            format!("{name}: case {:?}", plan.case)
        })?;
        if case == Lemma3Case::EqualNonzero {
            let family = plan_to_family(&plan);
            ensure(
                family.parts[3].is_empty() && family.parts[9].is_empty(),
                || format!("{name}: w4={:?} w10={:?}", family.parts[3], family.parts[9]),
            )?;
        }
        done.push(format!("{case}"));
    }
    Ok(done.join(", "))
}

fn fold_consistency() -> Outcome {
    let mut checked = 0;
    for name in [
        "aaaab.fsys",
        "anbn_dstar.fsys",
        "anbn_udstar.fsys",
        "astar_undn.fsys",
        "abstar_undn.fsys",
        "anbn_undn.fsys",
        "a2nbn_undn.fsys",
        "anbn_u2ndn.fsys",
        "right_linear.fsys",
        "left_linear.fsys",
    ] {
        let (_, plan) = plan(name)?;
        let family = plan_to_family(&plan);
        for i in 0..=3 {
            let r = plan.core_formula(plan.j0 + i);
            let s = plan.procedure_formula(plan.j0 + i);
            let folded = fold(&r, &proc(&s)).map_err(|e| e.to_string())?;
            ensure(family.pumped_string(i) == folded, || {
                format!("{name} i={i}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} comparisons, 0 mismatches"))
}

fn finite_languages() -> Outcome {
    let mut r = rng(99);
    let sigma = Alphabet::new(['a', 'b', 'c']).unwrap();
    let mut pool = Vec::new();
    for n in 0..=5 {
        pool.extend(common::all_words(&['a', 'b', 'c'], n));
    }
    for set_no in 0..20 {
        pool.shuffle(&mut r);
        let size = r.gen_range(0..=10);
        let mut set: Vec<String> = pool[..size].to_vec();
        let phi = FSystem::finite_language(&sigma, &set);
        let got: Vec<String> = phi
            .enumerate(5, &Limits::default())
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|w| w.word)
            .collect();
        set.sort_by(|x, y| sigma.shortlex_cmp(x, y));
        ensure(got == set, || format!("set {set_no}: {set:?} gave {got:?}"))?;
    }
    Ok("20 random sets reproduced exactly".into())
}

fn unary_family(r: &mut impl Rng, fixed: usize, pumped: usize) -> PumpFamily {
    // spread the pumped symbols over the pumped parts of a 9-part family
    let mut parts = vec![String::new(); 9];
    let pumped_idx = [1, 3, 5, 7];
    for _ in 0..pumped {
        parts[pumped_idx[r.gen_range(0..4)]].push('a');
    }
    for _ in 0..fixed {
        parts[[0, 2, 4, 6, 8][r.gen_range(0..5)]].push('a');
    }
    PumpFamily {
        parts,
        pumped: pumped_idx.to_vec(),
        lemma: LemmaKind::L2CfReg,
        j0: 0,
    }
}

fn primes_refutation() -> Outcome {
    let mut r = rng(31);
    let primes: Vec<usize> = (2..=30).filter(|&n| is_prime(n)).collect();
    for case in 0..50 {
        let k = *primes.choose(&mut r).unwrap();
        let ell = r.gen_range(1..=5.min(k));
        let family = unary_family(&mut r, k - ell, ell);
        ensure(family.pumped_string(1).len() == k, || {
            format!("case {case}: base")
        })?;
        let i = refute_unary_family(is_prime, &family, k + 1)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("case {case}: k={k} l={ell} not refuted"))?;
        let len = family.pumped_string(i).len();
        ensure(i <= k + 1 && len >= 4 && !is_prime(len), || {
            format!("case {case}: i={i} length {len}")
        })?;
    }
    for case in 0..50 {
        let fixed = 2 * r.gen_range(0..10);
        let ell = 2 * r.gen_range(1..=3);
        let family = unary_family(&mut r, fixed, ell);
        let even = |n: usize| n.is_multiple_of(2);
        let got = refute_unary_family(even, &family, 1000).map_err(|e| e.to_string())?;
        ensure(got.is_none(), || {
            format!("even case {case}: refuted at {got:?}")
        })?;
    }
    Ok("50 prime families refuted by i <= k+1; parity-preserving families never refuted".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "worked fold example",
            worked_example,
            Duration::from_millis(1),
        ),
        (
            "folding identities",
            folding_identities,
            Duration::from_secs(5),
        ),
        (
            "aaaab counterexample",
            aaaab_counterexample,
            Duration::from_secs(10),
        ),
        ("lemma 1 pipeline", lemma1_pipeline, Duration::from_secs(30)),
        (
            "lemma 2 pipelines",
            lemma2_pipelines,
            Duration::from_secs(240),
        ),
        (
            "lemma 3 pipelines",
            lemma3_pipelines,
            Duration::from_secs(120),
        ),
        (
            "fold consistency",
            fold_consistency,
            Duration::from_secs(120),
        ),
        (
            "finite-language systems",
            finite_languages,
            Duration::from_secs(60),
        ),
        (
            "primes refutation",
            primes_refutation,
            Duration::from_secs(1),
        ),
    ];
    let mut failed = 0;
    for (n, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= *budget {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS  {name} ({elapsed:.2?}): {detail}",
                n + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}): {why}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
