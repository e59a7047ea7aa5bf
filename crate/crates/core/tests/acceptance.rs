//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigUint;
use qcff::algebra::{FieldCtx, Poly};
use qcff::cyclotomic::{genus_k_assembly, genus_k_closed, Conductor, ConductorInput};
use qcff::quasi::{
    a_pq_formal, genus_quasi, genus_quasi_assembly, presentation, ramification_table, PairSet,
};
use qcff::selfcheck::{
    a_pq_count_suite, character_suite, factor_suite, genus_suite, parity_suite, phi_suite,
    reciprocity_suite, SuiteResult,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn field(q: u64) -> FieldCtx {
    FieldCtx::with_order(q).expect("valid field order")
}

fn poly(ctx: &FieldCtx, s: &str) -> Poly {
    Poly::parse(s, ctx).expect("valid polynomial")
}

fn suites(results: Vec<qcff::Result<SuiteResult>>) -> Outcome {
    let mut cases = 0;
    for r in results {
        let r = r.map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(r.to_string());
        }
        cases += r.cases;
    }
    Ok(format!("{cases} cases, 0 failures"))
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn genus_fixtures() -> Outcome {
    for (q, m, want) in [
        (3, "T", 0u32),
        (3, "T^2+T", 0),
        (3, "T^2+1", 2),
        (5, "T", 0),
    ] {
        let ctx = field(q);
        let c = Conductor::from_poly(&ctx, &poly(&ctx, m)).map_err(|e| e.to_string())?;
        let closed = genus_k_closed(&ctx, &c).map_err(|e| e.to_string())?;
        let rh = genus_k_assembly(&ctx, &c).map_err(|e| e.to_string())?;
        expect(
            &format!("closed g_K q={q} M={m}"),
            closed,
            BigUint::from(want),
        )?;
        expect(
            &format!("assembly g_K q={q} M={m}"),
            rh,
            BigUint::from(want),
        )?;
    }
    Ok("4 fixtures, both paths".into())
}

fn quasi_fixture() -> Outcome {
    let ctx = field(3);
    let (t, t1) = (poly(&ctx, "T"), poly(&ctx, "T+1"));
    let err = |e: qcff::Error| e.to_string();
    let c = Conductor::new(
        &ctx,
        ConductorInput::Factored(vec![(t.clone(), 1), (t1.clone(), 1)]),
        0,
    )
    .map_err(err)?;
    let ps = PairSet::new(&c, vec![(t.clone(), t1.clone())]).map_err(err)?;
    let rt = ramification_table(&ctx, &c, &ps).map_err(err)?;
    expect("e_T", rt.e(&t), Some(2))?;
    expect("e_{T+1}", rt.e(&t1), Some(1))?;
    let g_k = genus_k_closed(&ctx, &c).map_err(err)?;
    expect(
        "g_K~ Hasse",
        genus_quasi(&ctx, &c, &ps, &g_k, &rt).map_err(err)?,
        BigUint::from(0u32),
    )?;
    expect(
        "g_K~ RH",
        genus_quasi_assembly(&ctx, &c, &g_k, &rt).map_err(err)?,
        BigUint::from(0u32),
    )?;
    let pres = presentation(&ctx, &c, &ps).map_err(err)?;
    expect("group order", pres.group_order.clone(), BigUint::from(8u32))?;
    let orders: Vec<BigUint> = pres
        .generators
        .iter()
        .map(|g| g.lift_order.clone())
        .collect();
    expect(
        "generator orders",
        orders,
        vec![BigUint::from(4u32), BigUint::from(2u32)],
    )?;
    expect("epsilon order", pres.epsilon_order, 2)?;
    expect("relations", pres.relations.len(), 1)?;
    expect("relation exponent", pres.relations[0].epsilon_exponent, -1)?;
    Ok("e = (2, 1), g~ = 0, |G~| = 8, orders (4, 2), eps 2, 1 relation".into())
}

fn a_pq_structure() -> Outcome {
    let ctx = field(3);
    let sum = a_pq_formal(&ctx, &poly(&ctx, "T"), &poly(&ctx, "T+1")).map_err(|e| e.to_string())?;
    expect(
        "a_PQ(T, T+1)",
        sum.to_string().as_str(),
        "1[(1)/(T+1)] - 1[(T+2)/(T^2+T)]",
    )?;
    let counts = suites(vec![a_pq_count_suite(&field(3), 20, 5, 2024)])?;
    Ok(format!("exact sum matches; term count formula {counts}"))
}

fn determinism() -> Outcome {
    let config = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/t_t1.json");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qcff"))
            .args(["report", "--config", config])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() || !b.status.success() {
        return Err(format!("report exited with {} / {}", a.status, b.status));
    }
    if a.stdout.is_empty() || a.stdout != b.stdout {
        return Err("outputs differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 genus fixtures", genus_fixtures),
        ("2 quasi-genus fixture", quasi_fixture),
        ("3 genus oracle equality, deg M <= 4 over F_3", || {
            suites(vec![genus_suite(&field(3), 4, 0)])
        }),
        ("4 reciprocity law", || {
            suites(vec![
                reciprocity_suite(&field(3), 3),
                reciprocity_suite(&field(5), 2),
            ])
        }),
        ("5 parity property", || {
            suites(vec![parity_suite(&field(3), 3), parity_suite(&field(5), 3)])
        }),
        ("6 phi brute force", || {
            suites(vec![phi_suite(&field(3), 3)])
        }),
        ("7 symbol character", || {
            suites(vec![character_suite(&field(3), 2)])
        }),
        ("8 a_PQ structure", a_pq_structure),
        ("9 factorization round trip", || {
            suites(
                [3, 5, 9]
                    .into_iter()
                    .map(|q| factor_suite(&field(q), 1000, 8, q))
                    .collect(),
            )
        }),
        ("10 determinism", determinism),
    ];

    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({ms} ms)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({ms} ms)");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
