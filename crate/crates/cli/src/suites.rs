//! Parameter sweeps for every suite and the runner that evaluates them.
//!
//! Each suite expands into a list of [`Task`]s in a fixed order. Tasks are
//! evaluated in parallel but collected in that order, so output never depends
//! on scheduling.

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use tripint::algebra::QPolynomial;
use tripint::identities::*;
use tripint::numeric::*;
use tripint::padic::*;
use tripint::qseries::{kadell_direct_product, kadell_expansion, QContext};

use crate::config::{Suite, SuiteConfig};
use crate::report::{complex, Params, VerificationReport};

type Eval = Box<dyn Fn(&str, Params) -> tripint::Result<VerificationReport> + Send + Sync>;

pub struct Task {
    pub id: &'static str,
    pub params: Params,
    run: Eval,
}

impl Task {
    fn new(
        id: &'static str,
        params: Params,
        run: impl Fn(&str, Params) -> tripint::Result<VerificationReport> + Send + Sync + 'static,
    ) -> Self {
        Self { id, params, run: Box::new(run) }
    }

    pub fn evaluate(&self, timing: bool) -> VerificationReport {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| (self.run)(self.id, self.params.clone())));
        let mut report = match outcome {
            Ok(Ok(r)) => r,
            Ok(Err(e)) => VerificationReport::error(self.id, self.params.clone(), e),
            Err(_) => VerificationReport::error(self.id, self.params.clone(), "evaluation panicked"),
        };
        if timing {
            report.runtime_ms = start.elapsed().as_millis() as u64;
        }
        report
    }
}

/// Expands and evaluates every selected suite.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let tasks: Vec<Task> = cfg.suites.iter().flat_map(|&s| tasks_for(s, cfg)).collect();
    tasks.par_iter().map(|t| t.evaluate(cfg.timing)).collect()
}

pub fn tasks_for(suite: Suite, cfg: &SuiteConfig) -> Vec<Task> {
    match suite {
        Suite::Dyson => dyson(cfg),
        Suite::Morris => morris(cfg),
        Suite::QDixon => qdixon(cfg),
        Suite::Kadell => kadell(cfg),
        Suite::Dixon => dixon(cfg),
        Suite::Lemma54 => lemma54(cfg),
        Suite::PadicF => padic_f(cfg),
        Suite::PadicJ => padic_j(cfg),
        Suite::PadicTriple => padic_triple(cfg),
        Suite::PadicMoebius => padic_moebius(cfg),
        Suite::Real => real(cfg),
        Suite::QTorus => qtorus(cfg),
        Suite::Complex => complex_suite(cfg),
        Suite::RationalForm => rational_form(cfg),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn int_gap(l: &BigInt, r: &BigInt) -> (f64, f64) {
    let abs = (l - r).abs().to_f64().unwrap_or(f64::INFINITY);
    (abs, abs / r.abs().to_f64().unwrap_or(f64::INFINITY))
}

/// Largest coefficient of the difference, absolute and relative to the largest
/// coefficient of the right side.
fn poly_gap(l: &QPolynomial, r: &QPolynomial) -> (f64, f64) {
    let biggest =
        |p: &QPolynomial| p.coeffs().iter().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
    let abs = biggest(&(l - r));
    (abs, abs / biggest(r))
}

fn rat_gap(l: &BigRational, r: &BigRational) -> (f64, f64) {
    let abs = (l - r).abs().to_f64().unwrap_or(f64::INFINITY);
    (abs, abs / r.abs().to_f64().unwrap_or(f64::INFINITY))
}

fn natural_points(cfg: &SuiteConfig, default_max: u32) -> Vec<NaturalTriple> {
    match &cfg.a {
        Some(a) => vec![NaturalTriple::new(a[0] as u32, a[1] as u32, a[2] as u32)],
        None => NaturalTriple::all_up_to(cfg.max.unwrap_or(default_max)).collect(),
    }
}

fn natural_cube(cfg: &SuiteConfig, default_max: u32) -> Vec<[u32; 3]> {
    natural_points(cfg, default_max).into_iter().map(|a| a.0).collect()
}

fn dyson(cfg: &SuiteConfig) -> Vec<Task> {
    natural_points(cfg, 4)
        .into_iter()
        .map(|a| {
            Task::new("dyson", Params::new().with("a", join(&a.0)), move |id, p| {
                let (l, r) = (dyson_ct_lhs(a), dyson_rhs(a)?);
                Ok(VerificationReport::exact(id, p, l.to_string(), r.to_string(), l == r, int_gap(&l, &r)))
            })
        })
        .collect()
}

fn morris(cfg: &SuiteConfig) -> Vec<Task> {
    let sigmas = match cfg.sigma {
        Some(s) => vec![s],
        None => Permutation3::all().to_vec(),
    };
    let points = natural_points(cfg, 3);
    let mut tasks = Vec::new();
    for s in sigmas {
        for &a in &points {
            tasks.push(Task::new("morris", Params::new().with("a", join(&a.0)).with("sigma", s), move |id, p| {
                let (l, r) = (morris_ct_lhs(a, s), morris_rhs(a, s)?);
                Ok(VerificationReport::exact(id, p, l.to_string(), r.to_string(), l == r, poly_gap(&l, &r)))
            }));
        }
    }
    tasks
}

fn qdixon(cfg: &SuiteConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    let points = natural_cube(cfg, 6);
    for (id, form) in [("qdixon-v1", q_dixon_v1 as fn(u32, u32, u32) -> _), ("qdixon-v2", q_dixon_v2)] {
        for &[a, b, c] in &points {
            tasks.push(Task::new(id, Params::new().with("a", a).with("b", b).with("c", c), move |id, p| {
                let (l, r) = form(a, b, c)?;
                Ok(VerificationReport::exact(id, p, l.to_string(), r.to_string(), l == r, poly_gap(&l, &r)))
            }));
        }
    }
    // The constrained constant-term derivation is expensive; its default sweep is smaller.
    let small = match cfg.a {
        Some(_) => points,
        None => natural_cube(cfg, cfg.max.unwrap_or(6).min(2)),
    };
    for a in small {
        let t = NaturalTriple::new(a[0], a[1], a[2]);
        tasks.push(Task::new("qdixon-derivation", Params::new().with("a", join(&a)), move |id, p| {
            let (l, r) = (ct_derivation(t)?, morris_ct_lhs(t, Permutation3::identity()));
            let ok = l == r && ct_derivation_check(t)?;
            Ok(VerificationReport::exact(id, p, l.to_string(), r.to_string(), ok, poly_gap(&l, &r)))
        }));
    }
    tasks
}

fn kadell(cfg: &SuiteConfig) -> Vec<Task> {
    let pairs: Vec<(u32, u32)> = match &cfg.a {
        Some(a) => vec![(a[0] as u32, a[1] as u32)],
        None => {
            let m = cfg.max.unwrap_or(8);
            (0..=m).flat_map(|a| (0..=m).map(move |b| (a, b))).collect()
        }
    };
    pairs
        .into_iter()
        .map(|(a, b)| {
            Task::new("kadell", Params::new().with("a", a).with("b", b), move |id, p| {
                let (l, r) = (kadell_expansion(a, b)?, kadell_direct_product(a, b));
                // size of a mismatch: number of differing monomials
                let differing = (&l - &r).term_count() as f64;
                Ok(VerificationReport::exact(id, p, l.to_string(), r.to_string(), l == r, (differing, 1.0)))
            })
        })
        .collect()
}

fn dixon(cfg: &SuiteConfig) -> Vec<Task> {
    natural_cube(cfg, 10)
        .into_iter()
        .map(|[a, b, c]| {
            Task::new("dixon", Params::new().with("a", a).with("b", b).with("c", c), move |id, p| {
                let (l, r) = (dixon_lhs(a, b, c), dixon_rhs(a, b, c));
                Ok(VerificationReport::exact(id, p, l.to_string(), r.to_string(), l == r, int_gap(&l, &r)))
            })
        })
        .collect()
}

fn lemma54(cfg: &SuiteConfig) -> Vec<Task> {
    natural_points(cfg, 12)
        .into_iter()
        .map(|a| {
            Task::new("lemma54", Params::new().with("a", join(&a.0)), move |id, p| {
                let (l, r) = binomial_convolution(a);
                Ok(VerificationReport::exact(id, p, l.to_string(), r.to_string(), l == r, int_gap(&l, &r)))
            })
        })
        .collect()
}

fn primes(cfg: &SuiteConfig, default: &[u64]) -> Vec<Prime> {
    cfg.primes
        .clone()
        .unwrap_or_else(|| default.iter().map(|&p| Prime::new(p).expect("default primes are prime")).collect())
}

/// A p-adic unit that is not an integer, so `y` avoids lattice points.
fn unit(p: Prime) -> BigRational {
    let (n, d) = match p.get() {
        2 => (5, 3),
        3 => (7, 2),
        _ => (7, 3),
    };
    BigRational::new(n.into(), d.into())
}

const F_PAIRS: [(f64, f64, f64, f64); 20] = [
    (-4.0, 0.0, 1.0, 0.0),
    (-5.0, 0.0, 1.0, 0.0),
    (-4.5, 0.0, 1.5, 0.0),
    (-6.0, 0.0, 2.0, 0.0),
    (-4.0, 0.0, 1.0, 0.5),
    (-4.0, 1.0, 1.0, 0.0),
    (-5.5, -0.3, 1.5, 0.7),
    (-4.2, 0.0, 1.2, 0.0),
    (-5.0, 0.0, 1.25, 0.0),
    (-7.0, 0.0, 3.0, 0.0),
    (-4.25, 0.2, 1.25, -0.2),
    (-5.0, 0.0, 2.0, 0.0),
    (-6.5, 0.0, 2.5, 0.0),
    (-4.8, 0.0, 1.8, 0.0),
    (-4.0, -2.0, 1.0, 2.0),
    (-8.0, 0.0, 1.0, 0.0),
    (-5.0, 0.5, 1.0, -0.5),
    (-4.4, 0.0, 1.1, 0.0),
    (-4.6, 0.0, 1.6, 0.0),
    (-5.2, 0.0, 2.2, 0.0),
];

/// Tail bound the automatic oracle depths aim for.
const F_TARGET: f64 = 1e-6;

fn padic_f(cfg: &SuiteConfig) -> Vec<Task> {
    let pairs: Vec<(Complex64, Complex64)> = match &cfg.a {
        Some(a) => vec![(z(a[0], 0.0), z(a[1], 0.0))],
        None => F_PAIRS.iter().map(|&(ar, ai, cr, ci)| (z(ar, ai), z(cr, ci))).collect(),
    };
    let tol = cfg.tolerance(Suite::PadicF);
    let depth = cfg.depth;
    let mut tasks = Vec::new();
    for p in primes(cfg, &[2, 3, 5]) {
        for &(a, c) in &pairs {
            for v in -3i64..=3 {
                let y = PAdicScalar::new(p.pow(v) * unit(p));
                let params = Params::new().with("p", p).with("a", complex(a)).with("c", complex(c)).with("y", &y);
                tasks.push(Task::new("padic-f", params, move |id, params| {
                    let ctx = match depth {
                        Some((m, n)) => PAdicContext::with_depths(p, m, n)?,
                        None => f_oracle_depths(a, c, &y, p, F_TARGET)?,
                    };
                    let params = params.with("depth", format!("{},{}", ctx.outer_depth(), ctx.inner_depth()));
                    let o = f_oracle(a, c, &y, &ctx)?;
                    let closed = f_closed(a, c, &y, p)?;
                    Ok(VerificationReport::numeric(id, params, o.value, closed, tol, Some(o.tail_bound)))
                }));
            }
        }
    }
    let moment_primes = cfg.primes.clone().unwrap_or_else(|| primes(cfg, &[2, 3, 5, 7]));
    for p in moment_primes {
        tasks.push(Task::new("padic-moment", Params::new().with("p", p), move |id, params| {
            let l = psi_moment_exact(-2, p)?;
            let r = BigRational::one() + p.pow(-1);
            Ok(VerificationReport::exact(id, params, l.to_string(), r.to_string(), l == r, rat_gap(&l, &r)))
        }));
    }
    tasks
}

const J_POINTS: [[(f64, f64); 3]; 11] = [
    [(-4.0, 0.0), (-4.0, 0.0), (1.0, 0.0)],
    [(-3.5, 0.0), (-5.0, 0.0), (0.5, 0.0)],
    [(-3.0, 0.0), (-3.0, 0.0), (0.0, 0.0)],
    [(-6.0, 0.0), (-4.0, 0.0), (2.0, 0.0)],
    [(-4.0, 0.5), (-4.5, -0.5), (1.0, 0.2)],
    [(-3.2, 0.0), (-3.4, 0.0), (0.3, 0.0)],
    [(-5.0, 1.0), (-5.0, -1.0), (1.5, 0.0)],
    [(-2.5, 0.0), (-3.5, 0.0), (-0.2, 0.0)],
    [(-8.0, 0.0), (-6.0, 0.0), (3.0, 0.0)],
    [(-4.4, 0.3), (-3.9, 0.1), (0.8, -0.4)],
    [(-7.0, 0.0), (-7.0, 0.0), (2.5, 0.0)],
];

const J_DEPTH: (u32, u32) = (80, 12);

fn padic_j(cfg: &SuiteConfig) -> Vec<Task> {
    let points: Vec<[Complex64; 3]> = match &cfg.a {
        Some(a) => vec![real3([a[0], a[1], a[2]])],
        None => J_POINTS.iter().map(|pt| pt.map(|(re, im)| z(re, im))).collect(),
    };
    let tol = cfg.tolerance(Suite::PadicJ);
    let (m, n) = cfg.depth.unwrap_or(J_DEPTH);
    let mut tasks = Vec::new();
    for p in primes(cfg, &[2, 3, 5]) {
        for &[a, b, c] in &points {
            let params = Params::new()
                .with("p", p)
                .with("a", complex(a))
                .with("b", complex(b))
                .with("c", complex(c))
                .with("depth", format!("{m},{n}"));
            tasks.push(Task::new("padic-j", params, move |id, params| {
                let o = j_oracle(a, b, c, &PAdicContext::with_depths(p, m, n)?)?;
                Ok(VerificationReport::numeric(id, params, o.value, j_closed(a, b, c, p)?, tol, Some(o.tail_bound)))
            }));
        }
    }
    tasks
}

const TRIPLE_SIGMAS: [[f64; 3]; 5] =
    [[2.0, 2.0, 2.0], [1.5, 1.7, 1.9], [3.0, 2.5, 2.0], [1.0, 1.0, 1.0], [2.2, 2.4, 2.6]];
const TRIPLE_EXACT: [[i64; 3]; 4] = [[2, 2, 2], [1, 1, 1], [3, 2, 2], [4, 3, 3]];

fn padic_triple(cfg: &SuiteConfig) -> Vec<Task> {
    let sigmas: Vec<[f64; 3]> = match &cfg.a {
        Some(a) => vec![[a[0], a[1], a[2]]],
        None => TRIPLE_SIGMAS.to_vec(),
    };
    let tol = cfg.tolerance(Suite::PadicTriple);
    let (m, n) = cfg.depth.unwrap_or(J_DEPTH);
    let mut tasks = Vec::new();
    for p in primes(cfg, &[2, 3, 5]) {
        for &s in &sigmas {
            let params = Params::new().with("p", p).with("sigma", join(&s)).with("depth", format!("{m},{n}"));
            tasks.push(Task::new("padic-triple", params, move |id, params| {
                let t = ExponentTriple::real(s[0], s[1], s[2]);
                let closed = triple_closed(&t, p)?;
                let (a, b, c) = t.to_j();
                let o = j_oracle(a, b, c, &PAdicContext::with_depths(p, m, n)?)?;
                Ok(VerificationReport::numeric(id, params, o.value, closed.reduced, tol, Some(o.tail_bound)))
            }));
        }
        if cfg.a.is_none() {
            for s in TRIPLE_EXACT {
                tasks.push(Task::new(
                    "padic-triple-ratio",
                    Params::new().with("p", p).with("sigma", join(&s)),
                    move |id, params| {
                        let (reduced, full) = triple_closed_exact(s, p)?;
                        let l = full / reduced;
                        let r = BigRational::one() + p.pow(-1);
                        Ok(VerificationReport::exact(id, params, l.to_string(), r.to_string(), l == r, rat_gap(&l, &r)))
                    },
                ));
            }
        }
    }
    tasks
}

fn matrix(g: &Mat2) -> String {
    format!("[[{},{}],[{},{}]]", g.a, g.b, g.c, g.d)
}

fn padic_moebius(cfg: &SuiteConfig) -> Vec<Task> {
    let per_prime = cfg.max.unwrap_or(150);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tasks = Vec::new();
    for p in primes(cfg, &[2, 3, 5]) {
        let mut drawn = 0;
        while drawn < per_prime {
            let k = random_sl2_zp(&mut rng, p);
            let g = random_sl2_qp(&mut rng, p);
            let x = random_scalar(&mut rng, p, -4, 4);
            let y = random_scalar(&mut rng, p, -4, 4);
            // skip poles of either action
            if g.denominator_at(&x).is_zero() || g.denominator_at(&y).is_zero() || k.denominator_at(&x).is_zero() {
                continue;
            }
            let params = Params::new().with("p", p).with("sample", drawn).with("k", matrix(&k)).with("x", &x);
            let xk = x.clone();
            tasks.push(Task::new("moebius-psi", params, move |id, params| {
                let l = moebius_act(&k, &xk)?.psi(p);
                let r = xk.psi(p) / PAdicScalar::new(k.denominator_at(&xk)).norm(p);
                Ok(VerificationReport::exact(id, params, l.to_string(), r.to_string(), l == r, rat_gap(&l, &r)))
            }));
            let params =
                Params::new().with("p", p).with("sample", drawn).with("g", matrix(&g)).with("x", &x).with("y", &y);
            tasks.push(Task::new("moebius-difference", params, move |id, params| {
                let l = moebius_act(&g, &x)?.value() - moebius_act(&g, &y)?.value();
                let r = (x.value() - y.value()) / (g.denominator_at(&x) * g.denominator_at(&y));
                Ok(VerificationReport::exact(id, params, l.to_string(), r.to_string(), l == r, rat_gap(&l, &r)))
            }));
            drawn += 1;
        }
    }
    tasks
}

fn real_points(cfg: &SuiteConfig, grid: &[f64]) -> Vec<[f64; 3]> {
    match &cfg.a {
        Some(a) => vec![[a[0], a[1], a[2]]],
        None => {
            grid.iter().flat_map(|&x| grid.iter().flat_map(move |&y| grid.iter().map(move |&w| [x, y, w]))).collect()
        }
    }
}

fn quad(cfg: &SuiteConfig, grid: usize, refine: u32, tol: f64) -> QuadratureConfig {
    QuadratureConfig::new(cfg.grid.unwrap_or(grid), refine, tol).expect("grid validated")
}

fn real(cfg: &SuiteConfig) -> Vec<Task> {
    let mut points = real_points(cfg, &[0.5, 1.0, 1.5]);
    if cfg.a.is_none() {
        points.push([0.3; 3]);
    }
    let tol = cfg.tolerance(Suite::Real);
    let qc = quad(cfg, 8, 9, 1e-10);
    points
        .into_iter()
        .map(|a| {
            Task::new("real", Params::new().with("a", join(&a)), move |id, params| {
                let lhs = real_triple_lhs(a, &qc)?;
                let rhs = real_triple_rhs(real3(a))?;
                Ok(VerificationReport::numeric(id, params, z(lhs.value, 0.0), rhs, tol, None))
            })
        })
        .collect()
}

fn qtorus(cfg: &SuiteConfig) -> Vec<Task> {
    let qs = cfg.qs.clone().unwrap_or_else(|| vec![0.3, 0.5, 0.8]);
    let points = real_points(cfg, &[0.5, 1.0, 2.5]);
    let tol = cfg.tolerance(Suite::QTorus);
    let qc = quad(cfg, 8, 9, 1e-13);
    let mut tasks = Vec::new();
    for &q in &qs {
        for &a in &points {
            tasks.push(Task::new("qtorus", Params::new().with("q", q).with("a", join(&a)), move |id, params| {
                let ctx = QContext::new(q)?;
                let (lhs, _) = qtorus_lhs(real3(a), &ctx, &qc)?;
                Ok(VerificationReport::numeric(id, params, lhs, qtorus_rhs(real3(a), &ctx)?, tol, None))
            }));
        }
    }
    if cfg.a.is_none() {
        for &q in &qs {
            for a in NaturalTriple::all_up_to(2) {
                tasks.push(Task::new(
                    "qtorus-ct",
                    Params::new().with("q", q).with("a", join(&a.0)),
                    move |id, params| {
                        let ctx = QContext::new(q)?;
                        let (lhs, _) = qtorus_lhs(real3(a.0.map(f64::from)), &ctx, &qc)?;
                        let exact = morris_ct_lhs(a, Permutation3::identity()).eval_f64(q);
                        Ok(VerificationReport::numeric(id, params, lhs, z(exact, 0.0), tol, None))
                    },
                ));
            }
        }
    }
    tasks
}

fn complex_suite(cfg: &SuiteConfig) -> Vec<Task> {
    let points = match &cfg.a {
        Some(a) => vec![[a[0], a[1], a[2]]],
        None => vec![[0.5, 0.5, 0.5], [1.0, 1.0, 0.5]],
    };
    let tol = cfg.tolerance(Suite::Complex);
    let qc = quad(cfg, 8, 7, 1e-8);
    let mut tasks: Vec<Task> = points
        .into_iter()
        .map(|a| {
            Task::new("complex", Params::new().with("a", join(&a)), move |id, params| {
                let lhs = complex_pair_lhs(a, &qc)?;
                Ok(VerificationReport::numeric(id, params, z(lhs.value, 0.0), complex_pair_rhs(real3(a))?, tol, None))
            })
        })
        .collect();
    if cfg.a.is_none() {
        // both exact routes, in units of pi^2
        for a in NaturalTriple::all_up_to(cfg.max.unwrap_or(4)) {
            tasks.push(Task::new("complex-exact", Params::new().with("a", join(&a.0)), move |id, params| {
                let (l, r) = (complex_route_radial(a), complex_route_gamma(a));
                Ok(VerificationReport::exact(id, params, l.to_string(), r.to_string(), l == r, rat_gap(&l, &r)))
            }));
        }
    }
    tasks
}

fn rational_form(cfg: &SuiteConfig) -> Vec<Task> {
    let points = match &cfg.a {
        Some(a) => vec![[a[0], a[1], a[2]]],
        None => vec![[1.0, 1.0, 1.0], [1.0, 0.5, 0.5]],
    };
    let tol = cfg.tolerance(Suite::RationalForm);
    let qc = quad(cfg, 32, 3, 1e-4);
    points
        .into_iter()
        .map(|a| {
            Task::new("rational-form", Params::new().with("a", join(&a)), move |id, params| {
                let lhs = rational_form_real(a, &qc)?;
                let rhs = real_triple_rhs(real3(a))? * (2.0 * PI).powi(3);
                Ok(VerificationReport::numeric(id, params, z(lhs.value, 0.0), rhs, tol, None))
            })
        })
        .collect()
}
