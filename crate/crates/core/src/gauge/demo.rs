use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use super::{
    covariant_derivative, holonomy, link_factor, open_path_residual, ordinary_derivative, transport_field,
    ComplexField, GaugeError, GaugePotential, Lattice,
};

/// `const:<a>` or `sine:amp=<a>,period=<sites>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialSpec {
    Const(f64),
    /// `A_μ(x) = amp·sin(2π·n_μ/period)` at integer coordinate `n_μ`.
    Sine {
        amp: f64,
        period: f64,
    },
}

impl FromStr for PotentialSpec {
    type Err = GaugeError;

    fn from_str(s: &str) -> Result<Self, GaugeError> {
        let bad = || GaugeError::InvalidSpec(s.to_string());
        let finite = |v: &str| v.trim().parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "const" => Ok(PotentialSpec::Const(finite(args.strip_prefix("a=").unwrap_or(args))?)),
            "sine" => {
                let (mut amp, mut period) = (None, None);
                for part in args.split(',') {
                    match part.split_once('=').ok_or_else(bad)? {
                        ("amp", v) => amp = Some(finite(v)?),
                        ("period", v) => period = Some(finite(v)?),
                        _ => return Err(bad()),
                    }
                }
                let period = period.ok_or_else(bad)?;
                if period == 0.0 {
                    return Err(bad());
                }
                Ok(PotentialSpec::Sine {
                    amp: amp.ok_or_else(bad)?,
                    period,
                })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for PotentialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PotentialSpec::Const(a) => write!(f, "const:{a}"),
            PotentialSpec::Sine { amp, period } => write!(f, "sine:amp={amp},period={period}"),
        }
    }
}

impl PotentialSpec {
    pub fn build(&self, lat: &Lattice) -> GaugePotential {
        match *self {
            PotentialSpec::Const(a) => GaugePotential::constant(lat, a),
            PotentialSpec::Sine { amp, period } => {
                GaugePotential::from_fn(lat, |c, mu| amp * (TAU * c[mu] as f64 / period).sin())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    /// `f ≡ 1`
    Const,
    /// `f(x) = x_μ` in units of length
    Linear,
    /// one plane-wave period `exp(2πi·n_μ/sites)` across the lattice
    Exp,
    /// carried from `f = 1` along the links
    Transport,
}

impl FieldSpec {
    pub fn name(self) -> &'static str {
        match self {
            FieldSpec::Const => "const",
            FieldSpec::Linear => "linear",
            FieldSpec::Exp => "exp",
            FieldSpec::Transport => "transport",
        }
    }
}

impl FromStr for FieldSpec {
    type Err = GaugeError;

    fn from_str(s: &str) -> Result<Self, GaugeError> {
        [
            FieldSpec::Const,
            FieldSpec::Linear,
            FieldSpec::Exp,
            FieldSpec::Transport,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| GaugeError::InvalidSpec(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeConfig {
    pub dims: usize,
    pub sites: usize,
    pub dx: f64,
    pub potential: PotentialSpec,
    pub field: FieldSpec,
    /// Direction μ of the derivatives.
    pub direction: usize,
}

impl Default for GaugeConfig {
    fn default() -> Self {
        GaugeConfig {
            dims: 1,
            sites: 64,
            dx: 0.1,
            potential: PotentialSpec::Sine { amp: 0.2, period: 16.0 },
            field: FieldSpec::Exp,
            direction: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SiteReport {
    pub site: usize,
    pub coords: Vec<usize>,
    pub field: [f64; 2],
    pub link: f64,
    pub ordinary: [f64; 2],
    pub covariant: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub max_abs_field: f64,
    pub max_abs_ordinary: f64,
    pub max_abs_covariant: f64,
    pub max_abs_difference: f64,
    /// `max |Df|` excluding wrap-around links.
    pub open_path_covariant: f64,
    /// `max |Π r − 1|` around closed lines in the derivative direction.
    pub holonomy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaugeReport {
    pub dims: usize,
    pub sites: usize,
    pub dx: f64,
    pub potential: String,
    pub field: String,
    pub direction: usize,
    pub per_site: Vec<SiteReport>,
    pub summary: Summary,
}

impl GaugeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn run_demo(cfg: &GaugeConfig) -> Result<GaugeReport, GaugeError> {
    let lat = Lattice::new(cfg.dims, cfg.sites, cfg.dx)?;
    let mu = cfg.direction;
    if mu >= cfg.dims {
        return Err(GaugeError::InvalidDirection { mu, dims: cfg.dims });
    }
    let r = link_factor(&cfg.potential.build(&lat), &lat);
    let n = cfg.sites as f64;
    let f = match cfg.field {
        FieldSpec::Const => ComplexField::from_fn(&lat, |_| Complex64::new(1.0, 0.0)),
        FieldSpec::Linear => ComplexField::from_fn(&lat, |c| Complex64::new(c[mu] as f64 * cfg.dx, 0.0)),
        FieldSpec::Exp => ComplexField::from_fn(&lat, |c| Complex64::from_polar(1.0, TAU * c[mu] as f64 / n)),
        FieldSpec::Transport => transport_field(&lat, &r, mu, Complex64::new(1.0, 0.0))?,
    };
    let d = ordinary_derivative(&f, mu, &lat)?;
    let cd = covariant_derivative(&f, &r, mu, &lat)?;
    let per_site: Vec<SiteReport> = (0..lat.len())
        .map(|x| SiteReport {
            site: x,
            coords: lat.coords(x),
            field: pair(f.get(x)),
            link: r.get(x, mu),
            ordinary: pair(d.get(x)),
            covariant: pair(cd.get(x)),
        })
        .collect();
    let diff = (0..lat.len()).fold(0.0f64, |m, x| m.max((cd.get(x) - d.get(x)).norm()));
    Ok(GaugeReport {
        dims: cfg.dims,
        sites: cfg.sites,
        dx: cfg.dx,
        potential: cfg.potential.to_string(),
        field: cfg.field.name().to_string(),
        direction: mu,
        per_site,
        summary: Summary {
            max_abs_field: f.max_norm(),
            max_abs_ordinary: d.max_norm(),
            max_abs_covariant: cd.max_norm(),
            max_abs_difference: diff,
            open_path_covariant: open_path_residual(&cd, mu, &lat),
            holonomy: holonomy(&r, mu, &lat),
        },
    })
}
