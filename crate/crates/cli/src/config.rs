//! Command-line arguments and their validation into a [`SuiteConfig`].

use std::fmt;
use std::path::PathBuf;

use clap::Parser;
use tripint::identities::Permutation3;
use tripint::padic::Prime;

use crate::report::Format;

#[derive(Debug, thiserror::Error, PartialEq)]
#[error("{0}")]
pub struct ConfigError(pub String);

fn bad(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Dyson,
    Morris,
    QDixon,
    Kadell,
    Dixon,
    Lemma54,
    PadicF,
    PadicJ,
    PadicTriple,
    PadicMoebius,
    Real,
    QTorus,
    Complex,
    RationalForm,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Dyson,
        Suite::Morris,
        Suite::QDixon,
        Suite::Kadell,
        Suite::Dixon,
        Suite::Lemma54,
        Suite::PadicF,
        Suite::PadicJ,
        Suite::PadicTriple,
        Suite::PadicMoebius,
        Suite::Real,
        Suite::QTorus,
        Suite::Complex,
        Suite::RationalForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dyson => "dyson",
            Suite::Morris => "morris",
            Suite::QDixon => "qdixon",
            Suite::Kadell => "kadell",
            Suite::Dixon => "dixon",
            Suite::Lemma54 => "lemma54",
            Suite::PadicF => "padic-f",
            Suite::PadicJ => "padic-j",
            Suite::PadicTriple => "padic-triple",
            Suite::PadicMoebius => "padic-moebius",
            Suite::Real => "real",
            Suite::QTorus => "qtorus",
            Suite::Complex => "complex",
            Suite::RationalForm => "rational-form",
        }
    }

    pub fn parse(s: &str) -> Result<Suite, ConfigError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            bad(format!("unknown suite '{s}' (expected one of: {})", names.join(", ")))
        })
    }

    /// Number of values `--a` takes for this suite; `None` if it takes none.
    fn a_arity(self) -> Option<usize> {
        match self {
            Suite::Kadell | Suite::PadicF => Some(2),
            Suite::PadicMoebius => None,
            _ => Some(3),
        }
    }

    fn exact(self) -> bool {
        matches!(self, Suite::Dyson | Suite::Morris | Suite::QDixon | Suite::Kadell | Suite::Dixon | Suite::Lemma54)
    }

    fn padic(self) -> bool {
        matches!(self, Suite::PadicF | Suite::PadicJ | Suite::PadicTriple | Suite::PadicMoebius)
    }

    fn quadrature(self) -> bool {
        matches!(self, Suite::Real | Suite::QTorus | Suite::Complex | Suite::RationalForm)
    }

    /// Tolerance added on top of any tail bound; exact suites have none.
    pub fn default_tolerance(self) -> Option<f64> {
        match self {
            Suite::PadicF | Suite::PadicJ | Suite::PadicTriple => Some(1e-10),
            Suite::Real => Some(1e-6),
            Suite::QTorus => Some(1e-8),
            Suite::Complex => Some(1e-4),
            Suite::RationalForm => Some(1e-2),
            _ => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs identity suites and reports both sides of every check.
#[derive(Debug, Parser)]
#[command(name = "verify", version, about)]
pub struct Cli {
    /// Suite to run (dyson, morris, qdixon, kadell, dixon, lemma54, padic-f,
    /// padic-j, padic-triple, padic-moebius, real, qtorus, complex, rational-form)
    pub suite: Option<String>,

    /// Run every suite at its defaults
    #[arg(long, conflicts_with = "suite")]
    pub all: bool,

    /// Single parameter point, comma separated (a,c for padic-f; a,b for kadell)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Option<Vec<f64>>,

    /// Permutation in one-line notation, e.g. 132
    #[arg(long)]
    pub sigma: Option<String>,

    #[arg(long, value_delimiter = ',')]
    pub p: Option<Vec<u64>>,

    #[arg(long, value_delimiter = ',')]
    pub q: Option<Vec<f64>>,

    /// Oracle depths M,N (outer, inner)
    #[arg(long, value_delimiter = ',')]
    pub depth: Option<Vec<u32>>,

    /// Quadrature grid points
    #[arg(long)]
    pub grid: Option<usize>,

    #[arg(long)]
    pub tol: Option<f64>,

    /// Upper bound for exponent sweeps; sample count for padic-moebius
    #[arg(long)]
    pub max: Option<u32>,

    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,

    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long)]
    pub seed: Option<u64>,

    /// Record wall-clock time per report (breaks byte-for-byte reproducibility)
    #[arg(long)]
    pub timing: bool,
}

/// Validated run configuration. `None` fields mean "suite default".
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub a: Option<Vec<f64>>,
    pub sigma: Option<Permutation3>,
    pub primes: Option<Vec<Prime>>,
    pub qs: Option<Vec<f64>>,
    pub depth: Option<(u32, u32)>,
    pub grid: Option<usize>,
    pub tol: Option<f64>,
    pub max: Option<u32>,
    pub seed: u64,
    pub timing: bool,
}

pub const DEFAULT_SEED: u64 = 2024;

impl SuiteConfig {
    pub fn defaults(suites: Vec<Suite>) -> Self {
        Self {
            suites,
            a: None,
            sigma: None,
            primes: None,
            qs: None,
            depth: None,
            grid: None,
            tol: None,
            max: None,
            seed: DEFAULT_SEED,
            timing: false,
        }
    }

    pub fn from_cli(cli: &Cli) -> Result<Self, ConfigError> {
        if cli.all {
            let given = [
                ("--a", cli.a.is_some()),
                ("--sigma", cli.sigma.is_some()),
                ("--p", cli.p.is_some()),
                ("--q", cli.q.is_some()),
                ("--depth", cli.depth.is_some()),
                ("--grid", cli.grid.is_some()),
                ("--tol", cli.tol.is_some()),
                ("--max", cli.max.is_some()),
            ];
            if let Some((flag, _)) = given.iter().find(|g| g.1) {
                return Err(bad(format!("{flag} cannot be combined with --all")));
            }
            let mut cfg = Self::defaults(Suite::ALL.to_vec());
            cfg.seed = cli.seed.unwrap_or(DEFAULT_SEED);
            cfg.timing = cli.timing;
            return Ok(cfg);
        }
        let name = cli.suite.as_deref().ok_or_else(|| bad("no suite given (name a suite or pass --all)"))?;
        let suite = Suite::parse(name)?;
        let refuse = |flag: &str, present: bool, allowed: bool| {
            if present && !allowed {
                Err(bad(format!("{flag} does not apply to suite {suite}")))
            } else {
                Ok(())
            }
        };
        refuse("--a", cli.a.is_some(), suite.a_arity().is_some())?;
        refuse("--sigma", cli.sigma.is_some(), suite == Suite::Morris)?;
        refuse("--p", cli.p.is_some(), suite.padic())?;
        refuse("--q", cli.q.is_some(), suite == Suite::QTorus)?;
        refuse("--depth", cli.depth.is_some(), suite.padic() && suite != Suite::PadicMoebius)?;
        refuse("--grid", cli.grid.is_some(), suite.quadrature())?;
        refuse("--tol", cli.tol.is_some(), suite.default_tolerance().is_some())?;
        refuse("--max", cli.max.is_some(), suite.exact() || matches!(suite, Suite::PadicMoebius | Suite::Complex))?;
        refuse("--seed", cli.seed.is_some(), suite == Suite::PadicMoebius)?;

        let mut cfg = Self::defaults(vec![suite]);
        if let Some(a) = &cli.a {
            let n = suite.a_arity().unwrap_or(0);
            if a.len() != n {
                return Err(bad(format!("--a for {suite} takes {n} values, got {}", a.len())));
            }
            if a.iter().any(|x| !x.is_finite()) {
                return Err(bad("--a values must be finite"));
            }
            if suite.exact() && a.iter().any(|&x| x < 0.0 || x.fract() != 0.0 || x > 64.0) {
                return Err(bad(format!("--a for {suite} takes integers in 0..=64")));
            }
            cfg.a = Some(a.clone());
        }
        if let Some(s) = &cli.sigma {
            cfg.sigma = Some(Permutation3::parse(s).map_err(|e| bad(format!("--sigma: {e}")))?);
        }
        if let Some(ps) = &cli.p {
            if ps.is_empty() {
                return Err(bad("--p needs at least one prime"));
            }
            let primes = ps.iter().map(|&p| Prime::new(p).map_err(|_| bad(format!("--p: {p} is not a prime"))));
            cfg.primes = Some(primes.collect::<Result<_, _>>()?);
        }
        if let Some(qs) = &cli.q {
            if qs.is_empty() || qs.iter().any(|&q| !(q > 0.0 && q < 1.0)) {
                return Err(bad("--q values must lie in (0, 1)"));
            }
            cfg.qs = Some(qs.clone());
        }
        if let Some(d) = &cli.depth {
            match d[..] {
                [m, n] if m > 0 && n > 0 => cfg.depth = Some((m, n)),
                _ => return Err(bad("--depth takes two positive integers M,N")),
            }
        }
        if let Some(g) = cli.grid {
            if g < 8 {
                return Err(bad("--grid must be at least 8"));
            }
            cfg.grid = Some(g);
        }
        if let Some(t) = cli.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(bad("--tol must be positive"));
            }
            cfg.tol = Some(t);
        }
        if let Some(m) = cli.max {
            let cap = if suite == Suite::PadicMoebius { 100_000 } else { 64 };
            if m > cap {
                return Err(bad(format!("--max for {suite} is capped at {cap}")));
            }
            cfg.max = Some(m);
        }
        cfg.seed = cli.seed.unwrap_or(DEFAULT_SEED);
        cfg.timing = cli.timing;
        Ok(cfg)
    }

    pub fn tolerance(&self, suite: Suite) -> f64 {
        self.tol.or(suite.default_tolerance()).unwrap_or(0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<SuiteConfig, ConfigError> {
        let cli = Cli::try_parse_from(std::iter::once("verify").chain(args.iter().copied()))
            .map_err(|e| bad(e.to_string()))?;
        SuiteConfig::from_cli(&cli)
    }

    #[test]
    fn every_suite_name_round_trips() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()).unwrap(), s);
        }
        assert!(Suite::parse("selberg").is_err());
    }

    #[test]
    fn negative_exponents_parse() {
        let c = parse(&["padic-f", "--a", "-4,1", "--p", "2,3", "--depth", "5,8"]).unwrap();
        assert_eq!(c.a, Some(vec![-4.0, 1.0]));
        assert_eq!(c.depth, Some((5, 8)));
        assert_eq!(c.primes.unwrap().len(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        for args in [
            &["dyson", "--a", "1,2"][..],
            &["dyson", "--a", "1,2.5,1"],
            &["dyson", "--q", "0.5"],
            &["padic-f", "--p", "4"],
            &["qtorus", "--q", "1.5"],
            &["real", "--grid", "4"],
            &["padic-j", "--depth", "3"],
            &["morris", "--sigma", "112"],
            &["real", "--tol", "-1"],
            &["--all", "--max", "3"],
            &[],
            &["nosuch"],
        ] {
            assert!(parse(args).is_err(), "{args:?}");
        }
    }

    #[test]
    fn default_tolerances() {
        let c = SuiteConfig::defaults(Suite::ALL.to_vec());
        assert_eq!(c.tolerance(Suite::Dyson), 0.0);
        assert_eq!(c.tolerance(Suite::PadicJ), 1e-10);
        assert_eq!(c.tolerance(Suite::Real), 1e-6);
        assert_eq!(c.tolerance(Suite::QTorus), 1e-8);
        assert_eq!(c.tolerance(Suite::Complex), 1e-4);
        assert_eq!(c.tolerance(Suite::RationalForm), 1e-2);
    }
}
