//! Browser bindings. Every export takes plain numbers and returns a JSON string,
//! which the page parses; errors surface as thrown `Error`s.

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;
use wasm_bindgen::prelude::*;

use tripint::identities::{dyson_ct_lhs, morris_ct_lhs, morris_rhs, NaturalTriple, Permutation3};
use tripint::numeric::{qtorus_lhs, qtorus_rhs, real3, QuadratureConfig};
use tripint::padic::{f_closed, f_oracle, f_oracle_depths, PAdicScalar, Prime};
use tripint::qseries::QContext;

// keeps the demo responsive on a single thread
const MAX_A: u32 = 8;

#[derive(Serialize)]
struct ConstantTerm {
    lhs: String,
    rhs: String,
    holds: bool,
    at_q_one: String,
    dyson: String,
}

pub fn constant_term_json(a1: u32, a2: u32, a3: u32, sigma: &str) -> Result<String, String> {
    if a1.max(a2).max(a3) > MAX_A {
        return Err(format!("exponents above {MAX_A} are too slow for the page"));
    }
    let a = NaturalTriple::new(a1, a2, a3);
    let s = Permutation3::parse(sigma).map_err(|e| e.to_string())?;
    let lhs = morris_ct_lhs(a, s);
    let rhs = morris_rhs(a, s).map_err(|e| e.to_string())?;
    let out = ConstantTerm {
        holds: lhs == rhs,
        at_q_one: lhs.eval_at_one().to_string(),
        dyson: dyson_ct_lhs(a).to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct QTorus {
    quadrature: f64,
    error_estimate: f64,
    closed_form: f64,
    rel_error: f64,
}

pub fn q_torus_json(a1: f64, a2: f64, a3: f64, q: f64) -> Result<String, String> {
    let ctx = QContext::new(q).map_err(|e| e.to_string())?;
    let cfg = QuadratureConfig::new(8, 8, 1e-12).map_err(|e| e.to_string())?;
    let a = real3([a1, a2, a3]);
    let (lhs, quad) = qtorus_lhs(a, &ctx, &cfg).map_err(|e| e.to_string())?;
    let rhs = qtorus_rhs(a, &ctx).map_err(|e| e.to_string())?;
    let out = QTorus {
        quadrature: lhs.re,
        error_estimate: quad.error_estimate,
        closed_form: rhs.re,
        rel_error: (lhs - rhs).norm() / rhs.norm(),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct FPoint {
    v: i64,
    closed: f64,
    oracle: f64,
    tail_bound: f64,
    within: bool,
}

/// `F(a, c; y)` along `y = p^v` for `v` in `vmin..=vmax`, closed form against the
/// coset oracle at depths chosen for `target`.
pub fn f_profile_json(p: u32, a: f64, c: f64, vmin: i32, vmax: i32, target: f64) -> Result<String, String> {
    if vmax < vmin || vmax - vmin > 12 {
        return Err("choose at most 13 valuations".into());
    }
    if target.is_nan() || target < 1e-6 {
        return Err("target tail bound below 1e-6 is too slow for the page".into());
    }
    let p = Prime::new(p as u64).map_err(|e| e.to_string())?;
    let (a, c) = (Complex64::new(a, 0.0), Complex64::new(c, 0.0));
    let mut points = Vec::new();
    for v in vmin..=vmax {
        let y = PAdicScalar::new(p.pow(v as i64) * BigRational::new(1.into(), 1.into()));
        let closed = f_closed(a, c, &y, p).map_err(|e| e.to_string())?;
        let ctx = f_oracle_depths(a, c, &y, p, target).map_err(|e| e.to_string())?;
        let o = f_oracle(a, c, &y, &ctx).map_err(|e| e.to_string())?;
        points.push(FPoint {
            v: v as i64,
            closed: closed.re,
            oracle: o.value.re,
            tail_bound: o.tail_bound,
            within: o.contains(closed, 0.0),
        });
    }
    serde_json::to_string(&points).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn constant_term(a1: u32, a2: u32, a3: u32, sigma: &str) -> Result<String, JsError> {
    constant_term_json(a1, a2, a3, sigma).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn q_torus(a1: f64, a2: f64, a3: f64, q: f64) -> Result<String, JsError> {
    q_torus_json(a1, a2, a3, q).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn f_profile(p: u32, a: f64, c: f64, vmin: i32, vmax: i32, target: f64) -> Result<String, JsError> {
    f_profile_json(p, a, c, vmin, vmax, target).map_err(|e| JsError::new(&e))
}
