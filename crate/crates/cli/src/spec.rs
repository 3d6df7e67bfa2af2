//! Parsing of distribution specifications from command-line input.
//!
//! Two forms are accepted: flag-style (`--family texp --theta 1
//! --lambda 0.5`) and compact colon strings used where two
//! distributions appear in one command (`texp:1,0.5`,
//! `transform:weibull:2,1:0.5`, plain baselines like `exp:2`).
//! Parsing is all-or-nothing: a spec either builds a validated
//! distribution or reports a usage error.

use ordmix::{
    Exponential, Laplace, SkewLaplace, Transformed, TransformedExponential, Uniform, Univariate,
    Weibull,
};

#[derive(Debug)]
pub struct SpecError(pub String);

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for SpecError {}

impl From<ordmix::Error> for SpecError {
    fn from(e: ordmix::Error) -> Self {
        SpecError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, SpecError>;

/// A fully validated distribution, tagged with enough structure for the
/// closed-form-only operations (mean residual life) and for sampling.
pub enum ParsedDist {
    TExp(TransformedExponential),
    SLaplace(SkewLaplace),
    Generic {
        label: String,
        baseline: String,
        bparams: Vec<f64>,
        dist: Transformed<Box<dyn Univariate>>,
    },
}

impl ParsedDist {
    pub fn univariate(&self) -> &dyn Univariate {
        match self {
            ParsedDist::TExp(d) => d,
            ParsedDist::SLaplace(d) => d,
            ParsedDist::Generic { dist, .. } => dist,
        }
    }

    pub fn label(&self) -> String {
        match self {
            ParsedDist::TExp(d) => format!("texp:{},{}", d.theta(), d.lambda()),
            ParsedDist::SLaplace(d) => format!("slaplace:{},{}", d.theta(), d.lambda()),
            ParsedDist::Generic { label, .. } => label.clone(),
        }
    }

    pub fn lambda(&self) -> f64 {
        match self {
            ParsedDist::TExp(d) => d.lambda(),
            ParsedDist::SLaplace(d) => d.lambda(),
            ParsedDist::Generic { dist, .. } => dist.lambda(),
        }
    }

    /// Mean residual life; only the transformed exponential carries the
    /// closed form.
    pub fn mean_residual_life(&self, t: f64) -> Result<f64> {
        match self {
            ParsedDist::TExp(d) => {
                if t < 0.0 {
                    return Err(SpecError(format!("mrl needs t >= 0, got {t}")));
                }
                Ok(d.mean_residual_life(t))
            }
            _ => Err(SpecError(
                "mrl is only available for --family texp".into(),
            )),
        }
    }

    /// A transform over a boxed baseline realizing the same law, used
    /// for sampling.
    pub fn sampler(&self) -> Transformed<Box<dyn Univariate>> {
        match self {
            ParsedDist::TExp(d) => Transformed::new(
                Box::new(Exponential::new(d.theta()).expect("validated")) as Box<dyn Univariate>,
                d.lambda(),
            )
            .expect("validated"),
            ParsedDist::SLaplace(d) => Transformed::new(
                Box::new(Laplace::new(d.theta()).expect("validated")) as Box<dyn Univariate>,
                d.lambda(),
            )
            .expect("validated"),
            ParsedDist::Generic {
                baseline,
                bparams,
                dist,
                ..
            } => Transformed::new(
                build_baseline(baseline, bparams).expect("validated"),
                dist.lambda(),
            )
            .expect("validated"),
        }
    }
}

pub fn build_baseline(family: &str, params: &[f64]) -> Result<Box<dyn Univariate>> {
    let need = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(SpecError(format!(
                "baseline `{family}` takes {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match family {
        "exp" => {
            need(1)?;
            Ok(Box::new(Exponential::new(params[0])?))
        }
        "laplace" => {
            need(1)?;
            Ok(Box::new(Laplace::new(params[0])?))
        }
        "weibull" => {
            need(2)?;
            Ok(Box::new(Weibull::new(params[0], params[1])?))
        }
        "uniform" => {
            need(2)?;
            Ok(Box::new(Uniform::new(params[0], params[1])?))
        }
        other => Err(SpecError(format!(
            "unknown baseline `{other}` (expected exp, laplace, weibull or uniform)"
        ))),
    }
}

/// Default parameters per baseline, applied when `--bparams` is absent.
pub fn default_bparams(family: &str) -> &'static str {
    match family {
        "weibull" => "1,1",
        "uniform" => "0,1",
        _ => "1",
    }
}

/// Builds a distribution from the flag-style inputs.
pub fn from_flags(
    family: &str,
    theta: f64,
    lambda: f64,
    baseline: &str,
    bparams: Option<&str>,
) -> Result<ParsedDist> {
    match family {
        "texp" => Ok(ParsedDist::TExp(TransformedExponential::new(
            theta, lambda,
        )?)),
        "slaplace" => Ok(ParsedDist::SLaplace(SkewLaplace::new(theta, lambda)?)),
        "transform" => {
            let raw = bparams.unwrap_or(default_bparams(baseline));
            let params = parse_number_list(raw)?;
            let base = build_baseline(baseline, &params)?;
            let label = format!("transform:{baseline}:{raw}:{lambda}");
            Ok(ParsedDist::Generic {
                label,
                baseline: baseline.to_string(),
                bparams: params,
                dist: Transformed::new(base, lambda)?,
            })
        }
        other => Err(SpecError(format!(
            "unknown family `{other}` (expected texp, slaplace or transform)"
        ))),
    }
}

/// Parses the compact `family:params` form.
pub fn from_spec_string(spec: &str) -> Result<ParsedDist> {
    let mut parts = spec.splitn(2, ':');
    let family = parts.next().unwrap_or_default();
    let rest = parts.next().unwrap_or("");
    match family {
        "texp" | "slaplace" => {
            let params = parse_number_list(rest)?;
            if params.len() != 2 {
                return Err(SpecError(format!(
                    "`{family}` takes theta,lambda — got `{rest}`"
                )));
            }
            from_flags(family, params[0], params[1], "exp", None)
        }
        "transform" => {
            // transform:<baseline>:<bparams>:<lambda>
            let pieces: Vec<&str> = rest.split(':').collect();
            if pieces.len() != 3 {
                return Err(SpecError(format!(
                    "`transform` spec is transform:<baseline>:<params>:<lambda> — got `{spec}`"
                )));
            }
            let lambda = parse_number(pieces[2])?;
            from_flags("transform", 1.0, lambda, pieces[0], Some(pieces[1]))
        }
        "exp" | "laplace" | "weibull" | "uniform" => {
            // a plain baseline is the λ = 0 transform of itself
            let params = parse_number_list(rest)?;
            let base = build_baseline(family, &params)?;
            Ok(ParsedDist::Generic {
                label: spec.to_string(),
                baseline: family.to_string(),
                bparams: params,
                dist: Transformed::new(base, 0.0)?,
            })
        }
        other => Err(SpecError(format!("unknown distribution spec `{other}`"))),
    }
}

/// Number parsing with the small symbolic vocabulary used for test
/// ergonomics: `ln2`, `e`, `pi` (optionally signed).
pub fn parse_number(s: &str) -> Result<f64> {
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s),
    };
    let v = match body {
        "ln2" => std::f64::consts::LN_2,
        "e" => std::f64::consts::E,
        "pi" => std::f64::consts::PI,
        _ => body
            .parse::<f64>()
            .map_err(|_| SpecError(format!("cannot parse number `{s}`")))?,
    };
    Ok(sign * v)
}

pub fn parse_number_list(s: &str) -> Result<Vec<f64>> {
    if s.trim().is_empty() {
        return Err(SpecError("expected a comma-separated number list".into()));
    }
    s.split(',').map(|p| parse_number(p.trim())).collect()
}
