//! Number structures attached to lattice sites, related along links by
//! positive real scale factors `r = exp(A·dx)`.
//!
//! A field value `f(x)` lives in the structure at `x`. To compare it with its
//! neighbour `f(x+dx)` the neighbour is first carried into the structure at
//! `x`, which multiplies it by the link factor. That gives the covariant
//! derivative `Df = (r·f(x+dx) − f(x))/dx` next to the ordinary forward
//! difference `∂f = (f(x+dx) − f(x))/dx`. Boundaries are periodic.

mod demo;
mod hilbert;

use num_complex::Complex;
use num_traits::Float;
use thiserror::Error;

pub use demo::{run_demo, FieldSpec, GaugeConfig, GaugeReport, PotentialSpec, SiteReport, Summary};
pub use hilbert::ScaledHilbert;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaugeError {
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("unrecognized potential or field `{0}`")]
    InvalidSpec(String),
    #[error("link factors must be positive reals")]
    NonPositiveLink,
    #[error("direction {mu} does not exist on a {dims}-dimensional lattice")]
    InvalidDirection { mu: usize, dims: usize },
    #[error("dimension mismatch ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("Hilbert scale must be a positive real")]
    InvalidScale,
}

/// A periodic square lattice in one or two dimensions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice<F = f64> {
    dims: usize,
    sites: usize,
    dx: F,
}

impl<F: Float> Lattice<F> {
    pub fn new(dims: usize, sites: usize, dx: F) -> Result<Self, GaugeError> {
        if !(1..=2).contains(&dims) {
            return Err(GaugeError::InvalidLattice(format!("dims must be 1 or 2, got {dims}")));
        }
        if sites < 2 {
            return Err(GaugeError::InvalidLattice(format!(
                "need at least 2 sites per dimension, got {sites}"
            )));
        }
        if !(dx > F::zero() && dx.is_finite()) {
            return Err(GaugeError::InvalidLattice("dx must be positive and finite".into()));
        }
        Ok(Lattice { dims, sites, dx })
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    /// Sites per dimension.
    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.pow(self.dims as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dx(&self) -> F {
        self.dx
    }

    pub fn coords(&self, site: usize) -> Vec<usize> {
        (0..self.dims)
            .map(|mu| (site / self.sites.pow(mu as u32)) % self.sites)
            .collect()
    }

    pub fn site(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .enumerate()
            .map(|(mu, c)| (c % self.sites) * self.sites.pow(mu as u32))
            .sum()
    }

    /// The neighbour one step forward in direction `mu`, wrapping around.
    pub fn forward(&self, site: usize, mu: usize) -> usize {
        let stride = self.sites.pow(mu as u32);
        let c = (site / stride) % self.sites;
        if c + 1 == self.sites {
            site - c * stride
        } else {
            site + stride
        }
    }

    /// Whether the forward link from `site` in direction `mu` is the
    /// wrap-around link.
    pub fn is_wrap_link(&self, site: usize, mu: usize) -> bool {
        self.coords(site)[mu] + 1 == self.sites
    }

    fn check_direction(&self, mu: usize) -> Result<(), GaugeError> {
        if mu < self.dims {
            Ok(())
        } else {
            Err(GaugeError::InvalidDirection { mu, dims: self.dims })
        }
    }
}

/// `A_μ(x)` for every site and direction.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugePotential<F = f64> {
    dims: usize,
    values: Vec<F>,
}

impl<F: Float> GaugePotential<F> {
    pub fn from_fn(lat: &Lattice<F>, mut a: impl FnMut(&[usize], usize) -> F) -> Self {
        let mut values = Vec::with_capacity(lat.len() * lat.dims());
        for site in 0..lat.len() {
            let coords = lat.coords(site);
            for mu in 0..lat.dims() {
                values.push(a(&coords, mu));
            }
        }
        GaugePotential {
            dims: lat.dims(),
            values,
        }
    }

    pub fn zero(lat: &Lattice<F>) -> Self {
        Self::from_fn(lat, |_, _| F::zero())
    }

    pub fn constant(lat: &Lattice<F>, a: F) -> Self {
        Self::from_fn(lat, |_, _| a)
    }

    pub fn get(&self, site: usize, mu: usize) -> F {
        self.values[site * self.dims + mu]
    }
}

/// `r_{μ,x} = exp(A_μ(x)·dx)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkFactor<F = f64> {
    dims: usize,
    values: Vec<F>,
}

impl<F: Float> LinkFactor<F> {
    pub fn get(&self, site: usize, mu: usize) -> F {
        self.values[site * self.dims + mu]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|r| *r == F::one())
    }
}

pub fn link_factor<F: Float>(a: &GaugePotential<F>, lat: &Lattice<F>) -> LinkFactor<F> {
    LinkFactor {
        dims: a.dims,
        values: a.values.iter().map(|v| (*v * lat.dx()).exp()).collect(),
    }
}

/// Values of a complex field, one per site, each read in its own site's
/// structure.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexField<F = f64> {
    values: Vec<Complex<F>>,
}

impl<F: Float> ComplexField<F> {
    pub fn from_fn(lat: &Lattice<F>, mut f: impl FnMut(&[usize]) -> Complex<F>) -> Self {
        ComplexField {
            values: (0..lat.len()).map(|s| f(&lat.coords(s))).collect(),
        }
    }

    pub fn from_values(values: Vec<Complex<F>>) -> Self {
        ComplexField { values }
    }

    pub fn values(&self) -> &[Complex<F>] {
        &self.values
    }

    pub fn get(&self, site: usize) -> Complex<F> {
        self.values[site]
    }

    pub fn max_norm(&self) -> F {
        self.values.iter().fold(F::zero(), |m, v| m.max(v.norm()))
    }
}

/// `(f(x+dx) − f(x))/dx` at every site.
pub fn ordinary_derivative<F: Float>(
    f: &ComplexField<F>,
    mu: usize,
    lat: &Lattice<F>,
) -> Result<ComplexField<F>, GaugeError> {
    lat.check_direction(mu)?;
    Ok(ComplexField {
        values: (0..lat.len())
            .map(|x| (f.get(lat.forward(x, mu)) - f.get(x)) / lat.dx())
            .collect(),
    })
}

/// `(r_{μ,x}·f(x+dx) − f(x))/dx` at every site.
pub fn covariant_derivative<F: Float>(
    f: &ComplexField<F>,
    r: &LinkFactor<F>,
    mu: usize,
    lat: &Lattice<F>,
) -> Result<ComplexField<F>, GaugeError> {
    lat.check_direction(mu)?;
    Ok(ComplexField {
        values: (0..lat.len())
            .map(|x| (f.get(lat.forward(x, mu)) * r.get(x, mu) - f.get(x)) / lat.dx())
            .collect(),
    })
}

/// The value the structure at `x` assigns to the number `a_y` from its
/// neighbour across a link with factor `r`.
pub fn local_representation<F: Float>(a_y: Complex<F>, r: F) -> Result<Complex<F>, GaugeError> {
    if r.is_nan() || r <= F::zero() {
        return Err(GaugeError::NonPositiveLink);
    }
    Ok(a_y * r)
}

/// The field carried along direction `mu` from `seed` at coordinate 0 of
/// every line: `f(x+dx) = f(x)/r_{μ,x}`. Its covariant derivative vanishes on
/// every link except the wrap-around one, which instead measures the
/// holonomy of the line.
pub fn transport_field<F: Float>(
    lat: &Lattice<F>,
    r: &LinkFactor<F>,
    mu: usize,
    seed: Complex<F>,
) -> Result<ComplexField<F>, GaugeError> {
    lat.check_direction(mu)?;
    let mut values = vec![Complex::new(F::zero(), F::zero()); lat.len()];
    for start in (0..lat.len()).filter(|s| lat.coords(*s)[mu] == 0) {
        let mut x = start;
        let mut v = seed;
        for _ in 0..lat.sites() {
            values[x] = v;
            v = v / r.get(x, mu);
            x = lat.forward(x, mu);
        }
    }
    Ok(ComplexField { values })
}

/// `max |Df|` over links that are not wrap-around links.
pub fn open_path_residual<F: Float>(df: &ComplexField<F>, mu: usize, lat: &Lattice<F>) -> F {
    (0..lat.len())
        .filter(|x| !lat.is_wrap_link(*x, mu))
        .fold(F::zero(), |m, x| m.max(df.get(x).norm()))
}

/// Largest deviation from 1 of `Π r` around any closed line in direction `mu`.
pub fn holonomy<F: Float>(r: &LinkFactor<F>, mu: usize, lat: &Lattice<F>) -> F {
    (0..lat.len())
        .filter(|s| lat.coords(*s)[mu] == 0)
        .map(|start| {
            let mut x = start;
            let mut prod = F::one();
            for _ in 0..lat.sites() {
                prod = prod * r.get(x, mu);
                x = lat.forward(x, mu);
            }
            (prod - F::one()).abs()
        })
        .fold(F::zero(), F::max)
}

/// Applies `f → λf`, `A_μ → A_μ − (ln λ(x+dx) − ln λ(x))/dx` for a positive
/// `λ`. This transformation law is a choice of this crate; the covariant
/// derivative then obeys `D'f' = λ·Df` up to rounding.
pub fn gauge_transform<F: Float>(
    f: &ComplexField<F>,
    a: &GaugePotential<F>,
    lambda: &[F],
    lat: &Lattice<F>,
) -> Result<(ComplexField<F>, GaugePotential<F>), GaugeError> {
    if lambda.len() != lat.len() {
        return Err(GaugeError::DimensionMismatch {
            left: lambda.len(),
            right: lat.len(),
        });
    }
    if lambda.iter().any(|l| l.is_nan() || *l <= F::zero()) {
        return Err(GaugeError::NonPositiveLink);
    }
    let f2 = ComplexField {
        values: f.values.iter().zip(lambda).map(|(v, l)| *v * *l).collect(),
    };
    let mut values = Vec::with_capacity(a.values.len());
    for x in 0..lat.len() {
        for mu in 0..lat.dims() {
            let shift = (lambda[lat.forward(x, mu)].ln() - lambda[x].ln()) / lat.dx();
            values.push(a.get(x, mu) - shift);
        }
    }
    Ok((f2, GaugePotential { dims: a.dims, values }))
}
