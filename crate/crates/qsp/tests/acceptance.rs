//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use qsp::checks::{self, Oracles, Outcome};
use qsp_core::coideal::is_generic_point;
use qsp_core::Result;

type Check = Box<dyn FnOnce(&mut Oracles) -> Result<Outcome>>;

struct Criterion {
    id: usize,
    name: &'static str,
    run: Check,
    /// Upper bound on the running time, where one is part of the criterion.
    budget: Option<Duration>,
}

fn criteria() -> Vec<Criterion> {
    let q0 = BigRational::from_integer(BigInt::from(2));
    vec![
        Criterion { id: 1, name: "worked Q polynomials", run: Box::new(|_| checks::q_examples()), budget: Some(Duration::from_secs(1)) },
        Criterion {
            id: 2,
            name: "Q^I Q^II inversion, all shapes up to 8 sites",
            run: Box::new(|o| {
                let mut out = Outcome::default();
                for s in qsp_core::Shape::all_up_to(8) {
                    let t = o.q_tables(&s)?;
                    let r = checks::inversion(&s, &t)?;
                    out.checked += r.checked;
                    out.failures.extend(r.failures);
                }
                Ok(out)
            }),
            budget: None,
        },
        Criterion {
            id: 3,
            name: "ballot R matrices equal Hecke R matrices, up to 8 sites",
            run: Box::new(|o| {
                let mut out = Outcome::default();
                for s in qsp_core::Shape::all_up_to(8) {
                    let t = o.q_tables(&s)?;
                    let r = checks::ballot_vs_hecke(&s, &t, o)?;
                    out.checked += r.checked;
                    out.failures.extend(r.failures);
                }
                Ok(out)
            }),
            budget: None,
        },
        Criterion { id: 4, name: "spade expansion in V3 x V3", run: Box::new(|_| checks::spade_example()), budget: None },
        Criterion {
            id: 5,
            name: "coideal bar involutions fix spade and club, up to 4 sites",
            run: Box::new(|_| checks::coideal_bar_fixes(4)),
            budget: None,
        },
        Criterion { id: 6, name: "heart to spade positivity, up to 6 sites", run: Box::new(|_| checks::positivity(6)), budget: None },
        Criterion {
            id: 7,
            name: "diagram Y equals standard Y, up to 8 sites",
            run: Box::new(|_| checks::y_consistency_up_to(8)),
            budget: None,
        },
        Criterion {
            id: 8,
            name: "Y spectrum at q0 = 2",
            run: Box::new(move |_| {
                let mut out = checks::spectra(&checks::spectrum_shapes(6), &q0)?;
                out.checked += 1;
                if !is_generic_point(&q0, 30)? {
                    out.failures.push(String::from("q0 is not generic"));
                }
                Ok(out)
            }),
            budget: None,
        },
        Criterion {
            id: 9,
            name: "three routes to Psi agree",
            run: Box::new(|_| checks::psi_agreement(&checks::psi_shapes(10, 3, 3))),
            budget: None,
        },
        Criterion { id: 10, name: "sum rules at q = 1", run: Box::new(|_| checks::sum_rules(12, 16)), budget: None },
        Criterion {
            id: 11,
            name: "appendix identities, length <= 4, entries <= 3",
            run: Box::new(|_| checks::appendix(4, 3)),
            budget: None,
        },
    ]
}

fn main() -> ExitCode {
    let mut oracles = Oracles::new();
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let result = (c.run)(&mut oracles);
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(out) => {
                let in_budget = c.budget.is_none_or(|b| elapsed < b);
                let mut detail = out.summary();
                if !in_budget {
                    detail.push_str("; over time budget");
                }
                (out.passed() && in_budget, detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!("{} criterion {:>2}: {} ({detail}, {:.2}s)", if ok { "PASS" } else { "FAIL" }, c.id, c.name, elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
