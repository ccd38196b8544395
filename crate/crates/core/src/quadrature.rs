//! Gauss–Legendre rules normalized to the reference interval `[0, 1]`.

use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;

use crate::{Error, Result};

/// A `K`-point Gauss–Legendre rule on `[0, 1]`.
///
/// Nodes are strictly inside `(0, 1)` and ascending; weights are positive and
/// sum to one. The rule integrates polynomials of degree `2K - 1` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn gauss_legendre(order: usize) -> Result<Self> {
        let degree = NonZeroUsize::new(order)
            .ok_or_else(|| Error::InvalidParameter("quadrature order must be >= 1".into()))?;
        let rule = GaussLegendre::new(degree);
        let (nodes, weights) = rule
            .iter()
            .map(|&(x, w)| (0.5 * (1.0 + x), 0.5 * w))
            .unzip();
        Ok(Self { nodes, weights })
    }

    /// Number of nodes `K`.
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `(node, weight)` pairs on `[0, 1]`.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// `∫_0^1 g(t) dt`.
    pub fn integrate_unit<F: FnMut(f64) -> f64>(&self, mut g: F) -> f64 {
        self.iter().map(|(t, w)| w * g(t)).sum()
    }

    /// `∫_a^b g(x) dx` by the affine map of the rule onto `[a, b]`.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut g: F) -> f64 {
        let h = b - a;
        h * self.integrate_unit(|t| g(a + h * t))
    }

    /// `∫_a^b g(x) dx` with nodes clustered quadratically toward the ends
    /// flagged in `graded`, via `x = a + (b-a)s²` (or its mirror at `b`).
    ///
    /// A factor `|x - a|^p` in `g` becomes `s^{2p+1}`, so kinks and
    /// fractional powers at a graded end no longer limit convergence.
    pub fn integrate_graded<F: FnMut(f64) -> f64>(
        &self,
        a: f64,
        b: f64,
        graded: Graded,
        mut g: F,
    ) -> f64 {
        let h = b - a;
        match graded {
            Graded::Neither => self.integrate(a, b, g),
            Graded::Lower => 2.0 * h * self.integrate_unit(|s| s * g(a + h * s * s)),
            Graded::Upper => 2.0 * h * self.integrate_unit(|s| s * g(b - h * s * s)),
            Graded::Both => {
                let half = 0.5 * h;
                let lower = 2.0 * half * self.integrate_unit(|s| s * g(a + half * s * s));
                let upper = 2.0 * half * self.integrate_unit(|s| s * g(b - half * s * s));
                lower + upper
            }
        }
    }
}

/// Which ends of an interval sit on a breakpoint of the integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graded {
    Neither,
    Lower,
    Upper,
    Both,
}

impl Graded {
    pub fn from_ends(lower: bool, upper: bool) -> Self {
        match (lower, upper) {
            (false, false) => Graded::Neither,
            (true, false) => Graded::Lower,
            (false, true) => Graded::Upper,
            (true, true) => Graded::Both,
        }
    }
}
