//! Randomized check that the dynamics identities hold numerically.
//!
//! Each identity is evaluated on `trials` random configurations drawn from a
//! seeded ChaCha stream, so a given seed always produces the same report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constants::PhysicalConstants;
use crate::dynamics::*;
use crate::error::{domain, Result};
use crate::report::{Cell, Tabular};

pub const DEFAULT_TRIALS: usize = 1000;
pub const DEFAULT_SEED: u64 = 0;

/// Worst residual of one identity over all trials.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub description: &'static str,
    pub trials: usize,
    pub max_residual: f64,
    pub bound: f64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.max_residual <= self.bound
    }
}

impl Tabular for IdentityCheck {
    fn headers() -> Vec<&'static str> {
        vec!["identity", "description", "trials", "max_residual", "bound", "passed"]
    }

    fn cells(&self) -> Vec<Cell> {
        vec![
            self.name.into(),
            self.description.into(),
            self.trials.into(),
            self.max_residual.into(),
            self.bound.into(),
            self.passed().into(),
        ]
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    c: f64,
}

impl Sampler {
    fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        (self.rng.gen_range(lo.ln()..hi.ln())).exp()
    }

    fn mass(&mut self) -> f64 {
        self.log_uniform(1e-3, 1e3)
    }

    fn k(&mut self) -> f64 {
        self.rng.gen_range(1e-4..0.1)
    }

    fn speed(&mut self) -> f64 {
        self.rng.gen_range(1e-3..0.99) * self.c
    }

    fn accel(&mut self) -> f64 {
        self.rng.gen_range(0.1..100.0)
    }

    fn radius(&mut self) -> f64 {
        self.log_uniform(1e-3, 1e3)
    }

    fn fraction(&mut self) -> f64 {
        self.rng.gen_range(0.0..1.0)
    }
}

fn rel(x: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        x.abs()
    } else {
        ((x - reference) / reference).abs()
    }
}

struct Tally {
    trials: usize,
    checks: Vec<IdentityCheck>,
}

impl Tally {
    fn run(
        &mut self,
        sampler: &mut Sampler,
        name: &'static str,
        description: &'static str,
        bound: f64,
        mut trial: impl FnMut(&mut Sampler) -> Result<f64>,
    ) -> Result<()> {
        let mut worst = 0.0f64;
        for _ in 0..self.trials {
            let r = trial(sampler)?;
            worst = if r.is_nan() { f64::NAN } else { worst.max(r) };
        }
        self.checks.push(IdentityCheck {
            name,
            description,
            trials: self.trials,
            max_residual: worst,
            bound,
        });
        Ok(())
    }
}

/// Runs every identity and returns one line per identity, in a fixed order.
pub fn identity_suite(trials: usize, seed: u64, constants: &PhysicalConstants) -> Result<Vec<IdentityCheck>> {
    if trials == 0 {
        return Err(domain("identity suite needs at least one trial"));
    }
    constants.validate()?;
    let c = *constants;
    let mut s = Sampler {
        rng: ChaCha8Rng::seed_from_u64(seed),
        c: c.c,
    };
    let mut tally = Tally {
        trials,
        checks: Vec::new(),
    };

    tally.run(
        &mut s,
        "linearized_decay",
        "|exact - linear| / (E0 (kt)^2 / 2), kt <= 0.1",
        1.0,
        |s| {
            let (e0, k) = (s.mass(), s.k());
            let t = s.fraction() * 0.1 / k;
            let kt = k * t;
            if kt == 0.0 {
                return Ok(0.0);
            }
            let gap =
                (energy_at(e0, k, t, Approximation::Exact) - energy_at(e0, k, t, Approximation::Linearized)).abs();
            Ok(gap / (e0 * kt * kt / 2.0))
        },
    )?;

    tally.run(
        &mut s,
        "decay_rate",
        "-dE/dt against k E by central difference",
        1e-6,
        |s| {
            let (e0, k) = (s.mass(), s.k());
            let t = s.fraction() * 10.0 / k;
            let h = 1e-4 / k;
            let slope = (energy_at(e0, k, t + h, Approximation::Exact) - energy_at(e0, k, t - h, Approximation::Exact))
                / (2.0 * h);
            Ok(rel(-slope, k * energy_at(e0, k, t, Approximation::Exact)))
        },
    )?;

    tally.run(
        &mut s,
        "observed_coefficient",
        "k recovered from the linearized loss",
        1e-9,
        |s| {
            let (e0, k) = (s.mass(), s.k());
            let t = (0.01 + 0.99 * s.fraction()) * 0.1 / k;
            let e = energy_at(e0, k, t, Approximation::Linearized);
            Ok(rel(k_from_observation(e0, e, t)?, k))
        },
    )?;

    tally.run(
        &mut s,
        "ratio_invariance",
        "mass and force ratios at a common k",
        1e-12,
        |s| {
            let k = s.k();
            let a = Body {
                m0: s.mass(),
                k,
                v: 0.0,
                a: s.accel(),
            };
            let b = Body {
                m0: s.mass(),
                k,
                v: 0.0,
                a: s.accel(),
            };
            let t = s.fraction() * 10.0 / k;
            let r = ratio_invariance_check(&a, &b, t)?;
            Ok(r.mass.max(r.force))
        },
    )?;

    tally.run(
        &mut s,
        "shell_flux",
        "density times shell area equals k m",
        1e-12,
        |s| {
            let (m, k, r) = (s.mass(), s.k(), s.radius());
            Ok(rel(cocoon_density(m, k, r) * 4.0 * std::f64::consts::PI * r * r, k * m))
        },
    )?;

    tally.run(
        &mut s,
        "critical_radius_force",
        "inertia force at the critical radius against the relativistic force",
        1e-12,
        |s| {
            let (m, a, v) = (s.mass(), s.accel(), s.speed());
            let r = critical_radius(m, v, &c)?;
            Ok(rel(inertia_force(m, a, r, &c)?, relativistic_force(m, a, v, &c)?))
        },
    )?;

    tally.run(
        &mut s,
        "emission_momentum",
        "momentum of emitted mass against the inertial impulse",
        1e-12,
        |s| {
            let (m, a, r, t) = (s.mass(), s.accel(), s.radius(), s.fraction() * 100.0);
            let v_e = s.speed();
            let k11 = k11_coefficient(m, r, v_e, &c)?;
            Ok(rel(
                emission_momentum(m, a, k11, t, v_e),
                inertia_impulse(m, a, r, t, &c)?,
            ))
        },
    )?;

    tally.run(&mut s, "attraction_symmetry", "|F on A - F on B|", 0.0, |s| {
        let k = s.k();
        let pair = PairConfiguration::new(Body::at_rest(s.mass(), k), Body::at_rest(s.mass(), k), s.radius(), &c);
        Ok((gravity_analog_force(&pair, Side::A, &c)? - gravity_analog_force(&pair, Side::B, &c)?).abs())
    })?;

    tally.run(
        &mut s,
        "exchange_momentum",
        "momenta gained from each other's emission",
        1e-12,
        |s| {
            let k = s.k();
            let pair = PairConfiguration::new(Body::at_rest(s.mass(), k), Body::at_rest(s.mass(), k), s.radius(), &c);
            let t = (0.01 + s.fraction()) * 10.0;
            let (e_a, e_b) = kinetic_energy_received(&pair, t, &c)?;
            let p = |m: f64, e: f64| m * (2.0 * e / m).sqrt();
            Ok(rel(p(pair.body_a.m0, e_a), p(pair.body_b.m0, e_b)))
        },
    )?;

    tally.run(
        &mut s,
        "flux_inverse_square",
        "work at twice the distance is a quarter",
        1e-12,
        |s| {
            let k = s.k();
            let mut pair =
                PairConfiguration::new(Body::at_rest(s.mass(), k), Body::at_rest(s.mass(), k), s.radius(), &c);
            pair.v_emission_b = s.speed();
            let e = s.mass() * c.c * c.c;
            let near = flux_asymmetry(&pair, Side::A, e, &c)?;
            pair.r *= 2.0;
            let far = flux_asymmetry(&pair, Side::A, e, &c)?;
            Ok(rel(4.0 * far.work, near.work))
        },
    )?;

    tally.run(
        &mut s,
        "emitted_energy",
        "energy emitted while moving against E0 k t",
        1e-12,
        |s| {
            let body = Body {
                m0: s.mass(),
                k: s.k(),
                v: s.speed(),
                a: 0.0,
            };
            let t = s.fraction() * 10.0 / body.k;
            let e0 = body.m0 * c.c * c.c;
            Ok(rel(emitted_energy(&body, t, &c)?, e0 * body.k * t))
        },
    )?;

    tally.run(
        &mut s,
        "energy_conservation",
        "body plus emitted energy against m0 c^2 / sqrt(1 - v^2/c^2)",
        1e-12,
        |s| {
            let body = Body {
                m0: s.mass(),
                k: s.k(),
                v: s.speed(),
                a: 0.0,
            };
            let t = s.fraction() * 10.0 / body.k;
            Ok(relativistic_conservation_check(&body, t, &c)?.energy)
        },
    )?;

    tally.run(
        &mut s,
        "impulse_conservation",
        "body plus emitted impulse against m0 v / sqrt(1 - v^2/c^2)",
        1e-12,
        |s| {
            let body = Body {
                m0: s.mass(),
                k: s.k(),
                v: s.speed(),
                a: 0.0,
            };
            let t = s.fraction() * 10.0 / body.k;
            Ok(relativistic_conservation_check(&body, t, &c)?.impulse)
        },
    )?;

    Ok(tally.checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let checks = identity_suite(200, DEFAULT_SEED, &PhysicalConstants::default()).unwrap();
        assert_eq!(checks.len(), 13);
        for c in &checks {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let consts = PhysicalConstants::default();
        let a = identity_suite(50, 7, &consts).unwrap();
        let b = identity_suite(50, 7, &consts).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(identity_suite(0, 1, &PhysicalConstants::default()).is_err());
    }
}
