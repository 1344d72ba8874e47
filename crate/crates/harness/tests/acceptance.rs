//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::time::Instant;

use dickson_core::branch::principal_pow;
use dickson_core::dickson::{
    functional_partial_sum, functional_rational, gf_partial_sum, gf_rational, DicksonKind, GFParams,
};
use dickson_core::gamma::{gamma, lower_incomplete, upper_incomplete};
use dickson_core::identity::{
    double_product, outer_terms, p3_rhs_terms, quotient_prefactor, quotient_terms, Conventions, IdentityCase,
    IdentityId, TruncationPolicy,
};
use dickson_core::quadrature::{
    cauchy_kernel, cauchy_kernel_closed, incomplete_contour, incomplete_contour_closed, ContourSpec,
};
use dickson_core::Complex64;
use dickson_harness::report::{Record, Status};
use dickson_harness::{convergence_table, evaluate_suite, run_suite, SuiteConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOLERANCES: &str =
    "[tolerances]\nterminating = 1e-9\nconvergent = 1e-9\nasymptotic_factor = 10.0\nasymptotic_floor = 1e-8\n";

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm()
}

fn disk(rng: &mut ChaCha8Rng, r: f64) -> Complex64 {
    let rho = r * rng.gen::<f64>().sqrt();
    let t = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    Complex64::from_polar(rho, t)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn kernels() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut worst_sum, mut worst_rec, mut floor, mut errors) = (0.0f64, 0.0f64, 0.0f64, 0);
    for _ in 0..1000 {
        let a = c(rng.gen_range(0.0..5.0), rng.gen_range(-2.0..2.0));
        let z = disk(&mut rng, 5.0);
        let eval = || -> dickson_core::Result<(f64, f64, f64)> {
            let g = gamma(a)?;
            let up = upper_incomplete(a, z)?;
            let lo = lower_incomplete(a, z)?;
            let sum = (lo + up - g).norm() / g.norm();
            // rounding in the larger of the pair, relative to Gamma(a)
            let cond = f64::EPSILON * lo.norm().max(up.norm()) / g.norm();
            let up1 = upper_incomplete(a + 1.0, z)?;
            let rec = (up1 - a * up - principal_pow(z, a)? * (-z).exp()).norm() / up1.norm();
            Ok((sum, rec, cond))
        };
        match eval() {
            Ok((s, r, f)) => {
                floor = floor.max(f);
                worst_sum = worst_sum.max(s);
                worst_rec = worst_rec.max(r);
            }
            Err(_) => errors += 1,
        }
    }
    Outcome {
        pass: errors == 0 && worst_sum <= 1e-10 && worst_rec <= 1e-10,
        detail: format!(
            "1000 draws, |Im a| < 2: max pair-sum rel {worst_sum:.2e} (rounding floor {floor:.2e}), max recurrence rel {worst_rec:.2e}, errors {errors} (tol 1e-10)"
        ),
    }
}

fn contours() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut worst12, mut errors) = (0.0f64, 0);
    for i in 0..20 {
        let a = c(rng.gen_range(1.2..5.0), 0.0);
        let im = rng.gen_range(0.3..2.0) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let x = c(rng.gen_range(0.2..2.0), im);
        let k = if i % 2 == 0 {
            c(rng.gen_range(0..4) as f64, 0.0)
        } else {
            c(rng.gen_range(-0.5..2.5), rng.gen_range(-0.5..0.5))
        };
        match (incomplete_contour(a, x, k, &ContourSpec::for_incomplete(x, k)), incomplete_contour_closed(a, x, k)) {
            (Ok(q), Ok(w)) => worst12 = worst12.max(rel(q, w)),
            _ => errors += 1,
        }
    }
    let mut worst1 = 0.0f64;
    for k in [c(0.0, 0.0), c(1.0, 0.0), c(2.5, 0.0), c(0.5, 0.1)] {
        for _ in 0..25 {
            let y = disk(&mut rng, 3.0);
            match (cauchy_kernel(k, y, &ContourSpec::for_order(k)), cauchy_kernel_closed(k, y)) {
                (Ok(q), Ok(w)) => worst1 = worst1.max(rel(q, w)),
                _ => errors += 1,
            }
        }
    }
    Outcome {
        pass: errors == 0 && worst12 <= 1e-6 && worst1 <= 1e-8,
        detail: format!("contour identity max rel {worst12:.2e} over 20 draws (tol 1e-6); kernel max rel {worst1:.2e} over 100 draws (tol 1e-8); errors {errors}"),
    }
}

fn generating_functions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = [0.0f64; 4];
    let mut errors = 0;
    for kind in [DicksonKind::First, DicksonKind::Second] {
        let slot = if kind == DicksonKind::First { 0 } else { 1 };
        let mut n = 0;
        while n < 100 {
            let p = GFParams::new(
                c(rng.gen_range(-0.99..0.99), rng.gen_range(-1.0..1.0)),
                c(rng.gen_range(-0.99..0.99), rng.gen_range(-1.0..1.0)),
                disk(&mut rng, 0.4),
            );
            let Ok(p) = p else { continue };
            if p.tail_ratio() > 0.7 {
                continue;
            }
            n += 1;
            match gf_rational(kind, &p) {
                Ok(w) if w.norm() > 0.0 => worst[slot] = worst[slot].max(rel(gf_partial_sum(kind, &p, 80), w)),
                _ => errors += 1,
            }
        }
        let mut n = 0;
        while n < 100 {
            let u = c(rng.gen_range(0.3..1.5), rng.gen_range(-0.5..0.5));
            let b = c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            let z = disk(&mut rng, 0.3);
            if GFParams::unchecked(u + b / u, b, z).tail_ratio() > 0.7 {
                continue;
            }
            n += 1;
            match (functional_partial_sum(kind, u, b, z, 80), functional_rational(kind, u, b, z)) {
                (Ok(s), Ok(w)) if w.norm() > 0.0 => worst[slot + 2] = worst[slot + 2].max(rel(s, w)),
                _ => errors += 1,
            }
        }
    }
    let max = worst.iter().copied().fold(0.0, f64::max);
    Outcome {
        pass: errors == 0 && max <= 1e-10,
        detail: format!(
            "N=80, 100 draws each: first {:.2e}, second {:.2e}, first functional {:.2e}, second functional {:.2e}, errors {errors} (tol 1e-10)",
            worst[0], worst[1], worst[2], worst[3]
        ),
    }
}

fn suite(body: &str) -> SuiteConfig {
    SuiteConfig::from_toml(&format!(
        "seed = 42\n{body}\n{TOLERANCES}[output]\nformat = \"json\"\npath = \"unused.jsonl\"\n"
    ))
    .unwrap()
}

fn theorems() -> Outcome {
    let ids = ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"];
    let body: String =
        ids.iter().map(|id| format!("[[cases]]\nid = \"{id}\"\ncount = 200\nk = [1, 2, 3, 4, 5]\n")).collect();
    let records = evaluate_suite(&suite(&body));
    let worst = records.iter().filter_map(|r| r.rel_residual).fold(0.0, f64::max);
    let bad = records.iter().filter(|r| r.status != Status::Pass || r.rel_residual.is_none_or(|x| x >= 1e-9)).count();
    let mut controls = Vec::new();
    let mut controls_ok = true;
    for variant in ["2-j", "n-2j"] {
        let cfg =
            suite(&format!("[[cases]]\nid = \"T7\"\ncount = 200\nk = [2, 3, 4, 5]\nt7_exponent = \"{variant}\"\n"));
        let recs = evaluate_suite(&cfg);
        let failed = recs.iter().filter(|r| r.status != Status::Pass).count();
        controls_ok &= failed == recs.len();
        controls.push(format!("T7 exponent {variant} fails {failed}/{}", recs.len()));
    }
    let cfg = suite("[[cases]]\nid = \"T8\"\ncount = 200\nk = [1, 2, 3, 4, 5]\nt8_sign = \"as_printed\"\n");
    let recs = evaluate_suite(&cfg);
    let failed = recs.iter().filter(|r| r.status != Status::Pass).count();
    controls.push(format!("T8 printed sign fails {failed}/{}", recs.len()));
    Outcome {
        pass: bad == 0 && controls_ok,
        detail: format!(
            "{} draws (200 per theorem and k), {bad} outside tolerance, max rel {worst:.2e} (tol 1e-9); negative controls: {}",
            records.len(),
            controls.join(", ")
        ),
    }
}

fn propositions() -> Outcome {
    let body = "[[cases]]\nid = \"P1\"\ncount = 100\nk = [\"0.3\", \"-0.4\", \"0.5+0.2i\"]\n\
                [[cases]]\nid = \"P2\"\ncount = 100\nk = [\"0.3\", \"-0.4\", \"0.5+0.2i\"]\n";
    let records = evaluate_suite(&suite(body));
    let within = |r: &Record| -> Option<bool> {
        let rhs = r.rhs?;
        let rhs = c(rhs.re, rhs.im).norm();
        let small = r.params.get("a").map(|a| {
            let v = r.params.get(if r.case_id == "P1" { "x" } else { "z" }).unwrap();
            c(v.re, v.im).norm() / c(a.re, a.im).norm()
        })?;
        Some(small <= 0.01 && r.abs_residual? / rhs <= (10.0 * r.smallest_term? / rhs).max(1e-8))
    };
    let bad = records.iter().filter(|r| within(r) != Some(true)).count();
    let worst =
        records.iter().filter_map(|r| Some(r.abs_residual? / c(r.rhs?.re, r.rhs?.im).norm())).fold(0.0, f64::max);
    Outcome {
        pass: bad == 0,
        detail: format!(
            "{} draws, {bad} outside max(1e-8, 10 smallest_term/|rhs|), max rel {worst:.2e}",
            records.len()
        ),
    }
}

fn partial(terms: &[Complex64], n: usize) -> Complex64 {
    terms[..=n].iter().sum()
}

fn quotients() -> Outcome {
    // partial sums from an independent 50-digit evaluation of the same finite sums
    let conv = Conventions::default();
    let mut worst = 0.0f64;
    let p3 = IdentityCase::from_pairs(
        IdentityId::P3,
        &[("k", c(0.3, 0.0)), ("a", c(2.0, 0.0)), ("x", c(0.5, 0.0)), ("z", c(0.2, 0.0))],
    )
    .unwrap();
    let (l, r) = (outer_terms(&p3, 40, conv).unwrap(), p3_rhs_terms(&p3, 40).unwrap());
    for (n, wl, wr) in [
        (10, -0.32269776909749333, -0.32269766747737771),
        (25, -0.32269764787732469, -0.32269764787700175),
        (40, -0.3226976478768524, -0.32269764787685229),
    ] {
        worst = worst.max(rel(partial(&l, n), c(wl, 0.0))).max(rel(partial(&r, n), c(wr, 0.0)));
    }
    let p3 = IdentityCase::from_pairs(
        IdentityId::P3,
        &[("k", c(0.5, 0.2)), ("a", c(3.0, 1.0)), ("x", c(0.6, -0.1)), ("z", c(0.15, 0.05))],
    )
    .unwrap();
    let (l, r) = (outer_terms(&p3, 25, conv).unwrap(), p3_rhs_terms(&p3, 25).unwrap());
    for (n, wl, wr) in [
        (10, c(-0.17571952312191551, 0.046896274370753054), c(-0.17571952273100008, 0.04689627548242115)),
        (25, c(-0.17571952271540553, 0.046896275607751624), c(-0.17571952271540554, 0.046896275607751623)),
    ] {
        worst = worst.max(rel(partial(&l, n), wl)).max(rel(partial(&r, n), wr));
    }
    let ex1 = IdentityCase::<f64>::from_pairs(IdentityId::EX1, &[]).unwrap();
    let (num, den) = quotient_terms(&ex1, 40).unwrap();
    for (n, wn, wd) in
        [(25, -2.6357671250140492, -0.24784549689851262), (40, -2.6357616431727887, -0.24784495155828409)]
    {
        worst = worst.max(rel(partial(&num, n), c(wn, 0.0))).max(rel(partial(&den, n), c(wd, 0.0)));
    }
    let gq = IdentityCase::from_pairs(
        IdentityId::GQ,
        &[("k", c(2.3, 0.4)), ("a", c(3.0, 0.0)), ("x", c(0.6, 0.0)), ("z", c(0.2, 0.0))],
    )
    .unwrap();
    let (num, den) = quotient_terms(&gq, 40).unwrap();
    let pre = quotient_prefactor(&gq).unwrap();
    for (n, wq) in [
        (10, c(1.0846645556600295, 0.26894687490520448)),
        (25, c(1.0846629002506576, 0.2689449055528033)),
        (40, c(1.0846629002497227, 0.26894490555028885)),
    ] {
        worst = worst.max(rel(pre * partial(&num, n) / partial(&den, n), wq));
    }

    let ns: Vec<usize> = (1..=60).collect();
    let rows = convergence_table(&ex1, &ns, conv).unwrap();
    let turn = rows.iter().skip(1).min_by(|a, b| a.delta.unwrap().total_cmp(&b.delta.unwrap())).unwrap();
    let best = turn.value.re;
    let off = (best - std::f64::consts::PI.sqrt()).abs();
    let diverges = rows.last().unwrap().delta.unwrap() > turn.delta.unwrap();
    Outcome {
        pass: worst <= 1e-10 && off <= 1e-2 && diverges,
        detail: format!(
            "oracle partial sums max rel {worst:.2e} (tol 1e-10); sqrt(pi) table best {best:.10} at turnover N={} (|diff| {off:.2e}, tol 1e-2)",
            turn.n
        ),
    }
}

fn double_products() -> Outcome {
    let mut worst = 0.0f64;
    let mut errors = 0;
    for z in [0.1, 0.2, 0.3] {
        match double_product(c(1.0, 0.0), c(0.25, 0.0), c(z, 0.0), &TruncationPolicy::tail(1e-16, 2000)) {
            Ok((l, r)) => worst = worst.max(rel(l.value, r)),
            Err(_) => errors += 1,
        }
    }
    Outcome {
        pass: errors == 0 && worst <= 1e-8,
        detail: format!("a=1, alpha=1/4, z in {{0.1, 0.2, 0.3}}: max rel {worst:.2e}, errors {errors} (tol 1e-8)"),
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let text = include_str!("../suites/default.toml");
    let mut bytes = Vec::new();
    let mut summary = None;
    for name in ["first.jsonl", "second.jsonl"] {
        let mut cfg = SuiteConfig::from_toml(text).unwrap();
        cfg.seed = 42;
        cfg.output.path = dir.path().join(name);
        summary = Some(run_suite(&cfg).unwrap());
        bytes.push(std::fs::read(&cfg.output.path).unwrap());
    }
    let s = summary.unwrap();
    Outcome {
        pass: bytes[0] == bytes[1] && !bytes[0].is_empty(),
        detail: format!(
            "two seed-42 runs of the default suite ({} records, {} passed, {} bytes) identical: {}",
            s.total,
            s.passed,
            bytes[0].len(),
            bytes[0] == bytes[1]
        ),
    }
}

fn main() {
    let start = Instant::now();
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("incomplete gamma kernels", kernels),
        ("contour oracles", contours),
        ("classical generating functions", generating_functions),
        ("terminating and convergent theorems", theorems),
        ("asymptotic propositions", propositions),
        ("series oracles and the sqrt(pi) quotient", quotients),
        ("double product", double_products),
        ("deterministic reports", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        failed += usize::from(!o.pass);
        println!("criterion {} {name}: {} ({})", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {}/8 passed in {:.1}s", 8 - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
