use std::sync::Arc;

use super::CoeffRing;
use crate::error::{Error, Result};
use crate::exactfield::{dot, fmt_q_vec, RatFun, UniPoly, Q};
use crate::weyl::{WeylElement, WeylGroup};

/// The line `ν(t) = ν₀ + t·d` and its W-translates `u·ν(t)`.
#[derive(Debug)]
pub struct LineContext {
    group: Arc<WeylGroup>,
    nu0: Vec<Q>,
    dir: Vec<Q>,
    base: Vec<Vec<Q>>,
    slope: Vec<Vec<Q>>,
    negation: Option<Vec<WeylElement>>,
}

impl LineContext {
    pub fn new(group: Arc<WeylGroup>, nu0: Vec<Q>, dir: Vec<Q>) -> Result<Self> {
        let rs = group.root_system();
        rs.coroot_coords(&nu0)?;
        rs.coroot_coords(&dir)?;
        let base = group.elements().map(|u| group.act_vector(u, &nu0)).collect();
        let slope = group.elements().map(|u| group.act_vector(u, &dir)).collect();
        let w0 = group.w0();
        let neg = |v: &[Q]| v.iter().map(|x| -x.clone()).collect::<Vec<_>>();
        let stable = group.act_vector(w0, &nu0) == neg(&nu0) && group.act_vector(w0, &dir) == neg(&dir);
        let negation = stable.then(|| group.elements().map(|u| group.mul(u, w0)).collect());
        Ok(LineContext {
            group,
            nu0,
            dir,
            base,
            slope,
            negation,
        })
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn nu0(&self) -> &[Q] {
        &self.nu0
    }

    pub fn dir(&self) -> &[Q] {
        &self.dir
    }

    /// `(ω, u·ν(t))` as a polynomial of degree at most one.
    pub fn pairing_on(&self, u: WeylElement, omega: &[Q]) -> UniPoly {
        UniPoly::linear(dot(omega, &self.base[u.index()]), dot(omega, &self.slope[u.index()]))
    }

    /// Whether `-ν(t) = w₀ν(t)`, so that negation permutes the orbit lines.
    pub fn is_negation_stable(&self) -> bool {
        self.negation.is_some()
    }

    pub fn describe(&self) -> String {
        format!("nu0=({}) dir=({})", fmt_q_vec(&self.nu0), fmt_q_vec(&self.dir))
    }
}

/// A coefficient restricted to every orbit line: component `u` is the
/// restriction to `u·ν(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LineScalar(pub Vec<RatFun>);

impl LineScalar {
    pub fn component(&self, u: WeylElement) -> &RatFun {
        &self.0[u.index()]
    }
}

#[derive(Clone, Debug)]
pub struct LineRing {
    ctx: Arc<LineContext>,
}

impl LineRing {
    pub fn new(ctx: Arc<LineContext>) -> Self {
        LineRing { ctx }
    }

    pub fn context(&self) -> &LineContext {
        &self.ctx
    }

    fn map(&self, a: &LineScalar, f: impl Fn(&RatFun) -> RatFun) -> LineScalar {
        LineScalar(a.0.iter().map(f).collect())
    }

    fn zip(&self, a: &LineScalar, b: &LineScalar, f: impl Fn(&RatFun, &RatFun) -> RatFun) -> LineScalar {
        LineScalar(a.0.iter().zip(&b.0).map(|(x, y)| f(x, y)).collect())
    }
}

impl CoeffRing for LineRing {
    type Elem = LineScalar;

    fn group(&self) -> &WeylGroup {
        &self.ctx.group
    }

    fn zero(&self) -> LineScalar {
        LineScalar(vec![RatFun::zero(); self.ctx.group.order()])
    }

    fn constant(&self, c: &Q) -> LineScalar {
        LineScalar(vec![RatFun::constant(c.clone()); self.ctx.group.order()])
    }

    fn linear(&self, omega: &[Q]) -> LineScalar {
        LineScalar(
            self.ctx
                .group
                .elements()
                .map(|u| RatFun::from_poly(self.ctx.pairing_on(u, omega)))
                .collect(),
        )
    }

    fn add(&self, a: &LineScalar, b: &LineScalar) -> LineScalar {
        self.zip(a, b, |x, y| x + y)
    }

    fn sub(&self, a: &LineScalar, b: &LineScalar) -> LineScalar {
        self.zip(a, b, |x, y| x - y)
    }

    fn neg(&self, a: &LineScalar) -> LineScalar {
        self.map(a, |x| -x)
    }

    fn mul(&self, a: &LineScalar, b: &LineScalar) -> LineScalar {
        self.zip(a, b, |x, y| x * y)
    }

    fn scale(&self, a: &LineScalar, c: &Q) -> LineScalar {
        self.map(a, |x| x.scale(c))
    }

    fn is_zero(&self, a: &LineScalar) -> bool {
        a.0.iter().all(RatFun::is_zero)
    }

    fn act(&self, w: WeylElement, a: &LineScalar) -> LineScalar {
        let g = &self.ctx.group;
        let wi = g.inv(w);
        LineScalar(g.elements().map(|u| a.0[g.mul(wi, u).index()].clone()).collect())
    }

    fn divided_difference(&self, i: usize, a: &LineScalar) -> Result<LineScalar> {
        let g = &self.ctx.group;
        let s = g.simple(i);
        let alpha = &g.root_system().simple_roots()[i];
        g.elements()
            .map(|u| {
                let diff = &a.0[u.index()] - &a.0[g.mul(s, u).index()];
                if diff.is_zero() {
                    return Ok(RatFun::zero());
                }
                let den = self.ctx.pairing_on(u, alpha);
                if den.is_zero() {
                    return Err(Error::DegenerateLine(format!(
                        "alpha_{} vanishes on the orbit line {} of {}",
                        i + 1,
                        g.format(u),
                        self.ctx.describe()
                    )));
                }
                &diff / &RatFun::from_poly(den)
            })
            .collect::<Result<Vec<_>>>()
            .map(LineScalar)
    }

    fn inv(&self, a: &LineScalar) -> Result<LineScalar> {
        a.0.iter()
            .map(|x| {
                x.inv().map_err(|_| {
                    Error::DegenerateLine(format!(
                        "coefficient vanishes identically on an orbit line of {}",
                        self.ctx.describe()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(LineScalar)
    }

    fn negate_arg(&self, a: &LineScalar) -> Result<LineScalar> {
        let neg = self.ctx.negation.as_ref().ok_or_else(|| {
            Error::NotDeltaStable(format!("line {} is not stable under -w0", self.ctx.describe()))
        })?;
        Ok(LineScalar(neg.iter().map(|v| a.0[v.index()].clone()).collect()))
    }
}
