use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::elab::{CheckCall, Scene, Value};
use super::report::{Meta, Record, Report};
use crate::certificate::{Certificate, ToCertificate, Verdict};
use crate::e1::{EndoJ, Sign, SubBundle};
use crate::error::{GeoError, Result};
use crate::extcalc::DiffForm;
use crate::structures::{
    almost_contact_check, contact_check, contact_jacobi_report, cosymplectic_check, gen_sasakian_sampled, graph_eta,
    graph_jacobi, jacobi_check, jacobi_from_contact, kernel_line, normality_check, reeb, sigma, transversality_check,
};
use crate::symcore::{Chart, GaussRational};

pub const DEFAULT_SEED: u64 = 20240917;
pub const DEFAULT_SAMPLES: usize = 3;

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub samples: usize,
    /// Record wall-clock milliseconds; off by default so reports are byte-stable.
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: DEFAULT_SEED, samples: DEFAULT_SAMPLES, timings: false }
    }
}

/// Rational sample points `p/q` with `|p| <= 5`, `1 <= q <= 4`.
pub fn sample_points(dim: usize, seed: u64, count: usize) -> Vec<Vec<GaussRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..dim).map(|_| GaussRational::from_frac(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect())
        .collect()
}

fn form<'a>(v: &'a Value) -> Result<&'a DiffForm> {
    match v {
        Value::Form(f) => Ok(f),
        _ => Err(bad(v)),
    }
}

fn bundle<'a>(v: &'a Value) -> Result<&'a SubBundle> {
    match v {
        Value::Bundle(b) => Ok(b),
        _ => Err(bad(v)),
    }
}

fn endo<'a>(v: &'a Value) -> Result<&'a EndoJ> {
    match v {
        Value::Endo(e) => Ok(e),
        _ => Err(bad(v)),
    }
}

fn bad(v: &Value) -> GeoError {
    match v {
        Value::Failed(_, msg) => GeoError::BadInput(msg.clone()),
        other => GeoError::BadInput(format!("unexpected {}", other.ty())),
    }
}

fn span_certificate(a: &SubBundle, b: &SubBundle, chart: &Chart) -> Certificate {
    let names = chart.coords();
    let missing = a
        .generators()
        .iter()
        .find(|g| !b.contains(g))
        .map(|g| format!("{} lies in the first span only", g.to_text(names)))
        .or_else(|| {
            b.generators()
                .iter()
                .find(|g| !a.contains(g))
                .map(|g| format!("{} lies in the second span only", g.to_text(names)))
        });
    match missing {
        Some(w) => Certificate::new(Verdict::Fail).witness(w),
        None => Certificate::new(Verdict::Pass).cert(format!("both spans have rank {}", a.rank())),
    }
}

fn run_one(scene: &Scene, call: &CheckCall, points: &dyn Fn() -> Vec<Vec<GaussRational>>, samples: usize) -> Result<Certificate> {
    let chart = &scene.chart;
    let names = chart.coords();
    let args: Vec<&Value> = call.args.iter().map(|a| &scene.bindings[a]).collect();
    if let Some(v) = args.iter().find(|v| matches!(v, Value::Failed(..))) {
        return Err(bad(v));
    }
    Ok(match call.name.as_str() {
        "contact" => contact_check(form(args[0])?)?.to_certificate(chart),
        "reeb" => {
            let eta = form(args[0])?;
            let xi = reeb(eta)?;
            let normalized = eta.interior(&xi)?.as_function().expect("1-form contracts to a function");
            let free = eta.d().interior(&xi)?.is_zero();
            let mut c = Certificate::new(Verdict::from_bool(normalized.is_one() && free));
            c = c.cert(format!("xi = {}", xi.to_text(names)));
            if !normalized.is_one() {
                c = c.witness(format!("eta(xi) = {}", normalized.to_text(names)));
            }
            if !free {
                c = c.witness("i_xi d(eta) is not zero");
            }
            c
        }
        "jacobi_from_contact" => contact_jacobi_report(form(args[0])?)?.to_certificate(chart),
        "correspondence" => {
            let eta = form(args[0])?;
            let l_eta = graph_eta(eta)?;
            let l_pi = graph_jacobi(&jacobi_from_contact(eta)?);
            let literal = l_eta.equal_span(&l_pi);
            let mut c = span_certificate(&l_eta, &sigma(&l_pi), chart);
            c = c.cert("L_eta = sigma(L_(pi,E)) with sigma(X,f,a,g) = (X,f,-a,-g)");
            c.cert(format!("literal equality L_eta = L_(pi,E): {literal}"))
        }
        "jacobi" => match args[0] {
            Value::Jacobi(j) => jacobi_check(j).to_certificate(chart),
            v => return Err(bad(v)),
        },
        "isotropy" => bundle(args[0])?.isotropy_check().to_certificate(chart),
        "integrability" => bundle(args[0])?.integrability_check().to_certificate(chart),
        "transversality" => transversality_check(bundle(args[0])?).to_certificate(chart),
        "kernel_line" => kernel_line(bundle(args[0])?).to_certificate(chart),
        "direct_sum" => bundle(args[0])?.direct_sum_check().to_certificate(chart),
        "equal_span" => span_certificate(bundle(args[0])?, bundle(args[1])?, chart),
        "almost_contact" => match args[0] {
            Value::AlmostContact(a) => almost_contact_check(a).to_certificate(chart),
            v => return Err(bad(v)),
        },
        "normality" => match args[0] {
            Value::AlmostContact(a) => normality_check(a)?.to_certificate(chart),
            v => return Err(bad(v)),
        },
        "cosymplectic" => match args[0] {
            Value::Cosymplectic(c) => cosymplectic_check(c)?.to_certificate(chart),
            v => return Err(bad(v)),
        },
        "endo" => endo(args[0])?.endo_check().to_certificate(chart),
        "eigenbundle" => {
            let sign = if call.opt("sign") == Some("minus") { Sign::Minus } else { Sign::Plus };
            let e = endo(args[0])?.eigenbundle(sign)?;
            span_certificate(&e, bundle(args[1])?, chart)
        }
        "gen_sasakian" => gen_sasakian_sampled(endo(args[0])?, endo(args[1])?, &points(), samples)?.to_certificate(chart),
        other => return Err(GeoError::BadInput(format!("unknown check {other}"))),
    })
}

/// Runs every check of the scene in order. Checker errors and panics
/// become `error` records; the run itself never aborts.
pub fn run_scene(scene: &Scene, opts: &RunOptions) -> Report {
    let dim = scene.chart.dim();
    let checks = scene
        .checks
        .iter()
        .enumerate()
        .map(|(k, call)| {
            let seed = opts.seed.wrapping_add(k as u64);
            // extra candidates stand in for points that hit a pole
            let points = || sample_points(dim, seed, opts.samples.saturating_mul(8).max(8));
            // the clock is unavailable on some targets (wasm32)
            let start = opts.timings.then(Instant::now);
            let hook = panic::take_hook();
            panic::set_hook(Box::new(|_| {}));
            let out = panic::catch_unwind(AssertUnwindSafe(|| run_one(scene, call, &points, opts.samples)));
            panic::set_hook(hook);
            let ms = start.map_or(0.0, |t| t.elapsed().as_secs_f64() * 1000.0);
            let (verdict, witness, certificate) = match out {
                Ok(Ok(c)) => (c.verdict.as_str().to_string(), c.witness, c.certificate),
                Ok(Err(e)) => ("error".to_string(), vec![e.to_string()], Vec::new()),
                Err(p) => {
                    let msg = p
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_else(|| "checker panicked".into());
                    ("error".to_string(), vec![format!("internal error: {msg}")], Vec::new())
                }
            };
            Record { name: call.label(), verdict, witness, certificate, ms }
        })
        .collect();
    Report {
        meta: Meta { seed: opts.seed, samples: opts.samples, version: env!("CARGO_PKG_VERSION").to_string() },
        checks,
    }
}
