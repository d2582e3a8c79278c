//! Dynamics of energy-emitting bodies.
//!
//! A body loses energy (and so mass) at a rate proportional to its own
//! content, `E(t) = E0·exp(−k·t)`. The functions here evaluate the decay
//! laws, the force laws that follow from them, the critical radius at which
//! the inertia model matches relativistic momentum, the pairwise attraction
//! law and the relativistic conservation identities. Everything is SI.
//!
//! The functions are written term by term as the identities state them;
//! [`crate::identities`] checks that those identities actually hold.

use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{domain, Error, Result};

/// Exact exponential law or its first-order expansion for short times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Approximation {
    #[default]
    Exact,
    Linearized,
}

/// A point mass that emits energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Body {
    /// Initial mass, kg.
    pub m0: f64,
    /// Emission coefficient, 1/s.
    pub k: f64,
    /// Speed, m/s.
    pub v: f64,
    /// Acceleration, m/s².
    pub a: f64,
}

impl Body {
    pub fn at_rest(m0: f64, k: f64) -> Self {
        Self { m0, k, v: 0.0, a: 0.0 }
    }

    pub fn validate(&self, constants: &PhysicalConstants) -> Result<()> {
        if !(self.m0.is_finite() && self.m0 > 0.0) {
            return Err(domain(format!("body mass must be > 0, got {}", self.m0)));
        }
        if !(self.k.is_finite() && self.k >= 0.0) {
            return Err(domain(format!("emission coefficient must be >= 0, got {}", self.k)));
        }
        check_speed(self.v, constants)
    }
}

fn check_speed(v: f64, constants: &PhysicalConstants) -> Result<()> {
    if !(v >= 0.0 && v < constants.c) {
        return Err(domain(format!("speed must satisfy 0 <= v < c, got {v}")));
    }
    Ok(())
}

fn decay_factor(k: f64, t: f64, mode: Approximation) -> f64 {
    match mode {
        Approximation::Exact => (-k * t).exp(),
        Approximation::Linearized => 1.0 - k * t,
    }
}

/// Energy left after time `t`. The linearized form goes negative for
/// `k·t > 1` and is returned unchanged.
pub fn energy_at(e0: f64, k: f64, t: f64, mode: Approximation) -> f64 {
    e0 * decay_factor(k, t, mode)
}

/// Mass left after time `t`.
pub fn mass_at(m0: f64, k: f64, t: f64, mode: Approximation) -> f64 {
    m0 * decay_factor(k, t, mode)
}

/// Mass lost over time `t` under the linearized law, `m0·k·t`.
pub fn mass_lost_linearized(m0: f64, k: f64, t: f64) -> f64 {
    m0 * k * t
}

/// Relative loss per unit time, `k = (E0 − E)/(E0·t)`.
pub fn k_from_observation(e0: f64, e: f64, t: f64) -> Result<f64> {
    if e0 == 0.0 || !e0.is_finite() {
        return Err(domain(format!("initial energy must be non-zero, got {e0}")));
    }
    if t.is_nan() || t <= 0.0 {
        return Err(domain(format!("observation time must be > 0, got {t}")));
    }
    Ok((e0 - e) / (e0 * t))
}

/// Force giving body `A` its constant acceleration at time `t`:
/// `a·m0·exp(−k·t)`.
pub fn force_const_accel(body: &Body, t: f64, mode: Approximation) -> f64 {
    body.a * mass_at(body.m0, body.k, t, mode)
}

/// Relative change of the mass ratio and the force ratio of two bodies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioResiduals {
    pub mass: f64,
    pub force: f64,
}

/// Drift of `m_A/m_B` and `F_A/F_B` between 0 and `t`, for any pair of
/// coefficients. With `k_A ≠ k_B` the drift is `|exp((k_B − k_A)·t) − 1|`.
pub fn ratio_drift(a: &Body, b: &Body, t: f64) -> RatioResiduals {
    let rel = |x0: f64, xt: f64| ((xt - x0) / x0).abs();
    let mass0 = a.m0 / b.m0;
    let mass_t = mass_at(a.m0, a.k, t, Approximation::Exact) / mass_at(b.m0, b.k, t, Approximation::Exact);
    let force0 = force_const_accel(a, 0.0, Approximation::Exact) / force_const_accel(b, 0.0, Approximation::Exact);
    let force_t = force_const_accel(a, t, Approximation::Exact) / force_const_accel(b, t, Approximation::Exact);
    RatioResiduals {
        mass: rel(mass0, mass_t),
        force: rel(force0, force_t),
    }
}

/// Ratio drift for two bodies with the same coefficient; an observer made
/// of such bodies sees no change.
pub fn ratio_invariance_check(a: &Body, b: &Body, t: f64) -> Result<RatioResiduals> {
    if a.k != b.k {
        return Err(Error::Precondition(format!(
            "ratio invariance needs equal coefficients, got {} and {}",
            a.k, b.k
        )));
    }
    Ok(ratio_drift(a, b, t))
}

/// Energy density emitted by mass `m` at distance `r`:
/// `k·m/(4π·r²)` for `r > 0`, `k·m` at the centre.
pub fn cocoon_density(m: f64, k: f64, r: f64) -> f64 {
    if r == 0.0 {
        k * m
    } else {
        k * m / (4.0 * PI * r * r)
    }
}

/// Mass emitted per unit time by an accelerated body, `k11·a·m`.
pub fn emitted_mass(m: f64, a: f64, k11: f64) -> f64 {
    k11 * a * m
}

fn self_interaction(m: f64, r: f64, constants: &PhysicalConstants) -> f64 {
    constants.gravitational * m / (r * constants.c * constants.c)
}

/// Inertial force on a body accelerated through its own emission cloud of
/// radius `r`: `a·m·(1 + γ·m/(r·c²))`.
pub fn inertia_force(m: f64, a: f64, r: f64, constants: &PhysicalConstants) -> Result<f64> {
    if r.is_nan() || r <= 0.0 {
        return Err(domain(format!("radius must be > 0, got {r}")));
    }
    Ok(a * m * (1.0 + self_interaction(m, r, constants)))
}

/// Impulse of [`inertia_force`] over time `t`.
pub fn inertia_impulse(m: f64, a: f64, r: f64, t: f64, constants: &PhysicalConstants) -> Result<f64> {
    Ok(inertia_force(m, a, r, constants)? * t)
}

/// Momentum carried off by the emitted mass at speed `v_e` over time `t`:
/// `k11·a·m·t·v_e`.
pub fn emission_momentum(m: f64, a: f64, k11: f64, t: f64, v_e: f64) -> f64 {
    emitted_mass(m, a, k11) * t * v_e
}

/// Coefficient making the emitted momentum equal the inertial impulse:
/// `(1/v_e)·(1 + γ·m/(r·c²))`.
pub fn k11_coefficient(m: f64, r: f64, v_e: f64, constants: &PhysicalConstants) -> Result<f64> {
    if r.is_nan() || r <= 0.0 {
        return Err(domain(format!("radius must be > 0, got {r}")));
    }
    if v_e.is_nan() || v_e <= 0.0 {
        return Err(domain(format!("emission speed must be > 0, got {v_e}")));
    }
    Ok((1.0 + self_interaction(m, r, constants)) / v_e)
}

/// `(1 + β²)/(1 − β²)^(3/2)`, the relativistic factor on `a·m0`.
fn momentum_factor(beta2: f64) -> f64 {
    (1.0 + beta2) / (1.0 - beta2).powf(1.5)
}

/// `momentum_factor − 1` without cancellation at small β.
fn momentum_factor_excess(beta2: f64) -> f64 {
    (beta2.ln_1p() - 1.5 * (-beta2).ln_1p()).exp_m1()
}

/// Force accelerating a body at speed `v`: `a·m0·(1 + v²/c²)/(1 − v²/c²)^(3/2)`.
pub fn relativistic_force(m0: f64, a: f64, v: f64, constants: &PhysicalConstants) -> Result<f64> {
    check_speed(v, constants)?;
    let beta2 = (v / constants.c).powi(2);
    Ok(a * m0 * momentum_factor(beta2))
}

/// Radius at which [`inertia_force`] equals [`relativistic_force`]:
/// `R = (γ·m/c²)·[(1 + β²)/(1 − β²)^(3/2) − 1]⁻¹`.
///
/// Diverges at `v = 0`, which is reported as [`Error::Divergence`].
pub fn critical_radius(m: f64, v: f64, constants: &PhysicalConstants) -> Result<f64> {
    if v == 0.0 {
        return Err(Error::Divergence("critical radius is unbounded at v = 0".into()));
    }
    if !(v > 0.0 && v < constants.c) {
        return Err(domain(format!("speed must satisfy 0 < v < c, got {v}")));
    }
    let beta2 = (v / constants.c).powi(2);
    let c2 = constants.c * constants.c;
    Ok(constants.gravitational * m / c2 / momentum_factor_excess(beta2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Two bodies at distance `r` exchanging emitted energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairConfiguration {
    pub body_a: Body,
    pub body_b: Body,
    /// Separation, m.
    pub r: f64,
    /// Speed of the mass emitted by A, m/s.
    pub v_emission_a: f64,
    /// Speed of the mass emitted by B, m/s.
    pub v_emission_b: f64,
    /// Pairing constant `b` relating speeds to masses, `V(j) = 1/(b·m_j)`.
    pub b_coeff: f64,
}

impl PairConfiguration {
    /// Pair with the default free parameters: `b = 1` and emission speed `c/10`.
    pub fn new(body_a: Body, body_b: Body, r: f64, constants: &PhysicalConstants) -> Self {
        Self {
            body_a,
            body_b,
            r,
            v_emission_a: constants.c / 10.0,
            v_emission_b: constants.c / 10.0,
            b_coeff: 1.0,
        }
    }

    pub fn body(&self, side: Side) -> &Body {
        match side {
            Side::A => &self.body_a,
            Side::B => &self.body_b,
        }
    }

    pub fn v_emission(&self, side: Side) -> f64 {
        match side {
            Side::A => self.v_emission_a,
            Side::B => self.v_emission_b,
        }
    }

    fn check_separation(&self) -> Result<()> {
        if !(self.r > 0.0 && self.r.is_finite()) {
            return Err(domain(format!("separation must be > 0, got {}", self.r)));
        }
        Ok(())
    }

    /// Effective coupling `φ = (k·b/2π)·[1 + V²/c²]⁻²` seen from `side`.
    pub fn phi(&self, side: Side, constants: &PhysicalConstants) -> f64 {
        let v = self.v_emission(side);
        let k = self.body(side).k;
        k * self.b_coeff / (2.0 * PI) / (1.0 + (v / constants.c).powi(2)).powi(2)
    }
}

/// Kinetic energy one body's emission adds toward and away from the other.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxAsymmetry {
    pub delta_plus: f64,
    pub delta_minus: f64,
    pub work: f64,
}

/// Energy added to the other body's cloud by `e_emitted` joules emitted
/// from `emitter`, in the direction of the emitter and opposite to it, and
/// the net work done.
pub fn flux_asymmetry(
    pair: &PairConfiguration,
    emitter: Side,
    e_emitted: f64,
    constants: &PhysicalConstants,
) -> Result<FluxAsymmetry> {
    pair.check_separation()?;
    let (vd, vo) = (pair.v_emission(emitter), pair.v_emission(emitter.other()));
    if !(vd > 0.0 && vo > 0.0) {
        return Err(domain(format!("emission speeds must be > 0, got {vd} and {vo}")));
    }
    let scale = e_emitted / (8.0 * PI * pair.r * pair.r * constants.c * constants.c);
    let delta_plus = scale * ((vd + vo) / (vd * vo)).powi(2);
    let delta_minus = scale * ((vd - vo) / (vd * vo)).powi(2);
    Ok(FluxAsymmetry {
        delta_plus,
        delta_minus,
        work: delta_plus - delta_minus,
    })
}

/// Attraction felt by the body on `on`, `φ·m_A·m_B/R²`.
///
/// The law assumes both bodies share one emission coefficient and one
/// emission speed.
pub fn gravity_analog_force(pair: &PairConfiguration, on: Side, constants: &PhysicalConstants) -> Result<f64> {
    pair.check_separation()?;
    if pair.body_a.k != pair.body_b.k {
        return Err(Error::Precondition(
            "attraction law needs a common emission coefficient".into(),
        ));
    }
    if pair.v_emission_a != pair.v_emission_b {
        return Err(Error::Precondition(
            "attraction law needs a common emission speed".into(),
        ));
    }
    let masses = pair.body_a.m0 * pair.body_b.m0;
    Ok(pair.phi(on, constants) * masses / (pair.r * pair.r))
}

/// Kinetic energy each body receives from the other's emission over time
/// `t`: `E_k(A) = m_B0·k_B·t·c²/(4πR²)` and symmetrically for B.
pub fn kinetic_energy_received(pair: &PairConfiguration, t: f64, constants: &PhysicalConstants) -> Result<(f64, f64)> {
    pair.check_separation()?;
    if t.is_nan() || t < 0.0 {
        return Err(domain(format!("time must be >= 0, got {t}")));
    }
    let geom = constants.c * constants.c / (4.0 * PI * pair.r * pair.r);
    let e_a = pair.body_b.m0 * pair.body_b.k * t * geom;
    let e_b = pair.body_a.m0 * pair.body_a.k * t * geom;
    Ok((e_a, e_b))
}

/// Energy emitted in time `t` by a moving body: the dilated rest energy
/// times the dilated time, `k·(m0c²/√(1−β²))·t·√(1−β²)`.
pub fn emitted_energy(body: &Body, t: f64, constants: &PhysicalConstants) -> Result<f64> {
    check_speed(body.v, constants)?;
    let c2 = constants.c * constants.c;
    let root = (1.0 - (body.v / constants.c).powi(2)).sqrt();
    Ok(body.k * (body.m0 * c2 / root) * t * root)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConservationResiduals {
    /// `|E_p + E_e − m0c²/√(1−β²)|` relative to the closed form.
    pub energy: f64,
    /// `|I_b + I_e − m0v/√(1−β²)|` relative to the closed form; 0 at rest.
    pub impulse: f64,
}

/// Evaluates the split of total energy and impulse of a moving emitter into
/// body and emitted parts, term by term, and compares with the closed forms.
pub fn relativistic_conservation_check(
    body: &Body,
    t: f64,
    constants: &PhysicalConstants,
) -> Result<ConservationResiduals> {
    check_speed(body.v, constants)?;
    if t.is_nan() || t < 0.0 {
        return Err(domain(format!("time must be >= 0, got {t}")));
    }
    let (m0, k, v) = (body.m0, body.k, body.v);
    let c2 = constants.c * constants.c;
    let root = (1.0 - (v / constants.c).powi(2)).sqrt();
    let lost = k * t * root / c2;

    let e_potential = m0 * c2 / root * (1.0 - lost);
    let e_emitted = m0 / root * k * t * root;
    let e_closed = m0 * c2 / root;

    let i_body = m0 * v / root * (1.0 - lost);
    let i_emitted = m0 / root * (v * k * t * root / c2);
    let i_closed = m0 * v / root;

    let rel = |x: f64, closed: f64| {
        if closed == 0.0 {
            x.abs()
        } else {
            ((x - closed) / closed).abs()
        }
    };
    Ok(ConservationResiduals {
        energy: rel(e_potential + e_emitted, e_closed),
        impulse: rel(i_body + i_emitted, i_closed),
    })
}
