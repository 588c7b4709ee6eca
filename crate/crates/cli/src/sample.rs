//! Seeded, rank-stratified sampling of twistor parameters.
//!
//! Generic rational triples are almost surely rank 3, so rank-1 and
//! rank-2 parameters are constructed directly (a common direction
//! scaled by a triple, respectively combinations of two independent
//! directions) and then pushed through admissibility/rank rejection.
//! Every sample owns its own PRNG stream derived from `(seed, index)`,
//! which makes the fan-out order-independent and reproducible.

use ale_curves::count::ZetaTriple;
use ale_curves::exact::{rat_frac, Rat};
use ale_curves::roots::RootSystem;
use ale_curves::{Error, Result};
use rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct SampleConfig {
    /// Numerators are drawn uniformly from `[-bound, bound]`.
    pub numerator_bound: i64,
    /// Denominators are drawn uniformly from this set.
    pub denominators: Vec<i64>,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { numerator_bound: 20, denominators: (1..=8).collect() }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RankClass {
    One,
    Two,
    Three,
}

impl RankClass {
    pub fn as_usize(self) -> usize {
        match self {
            RankClass::One => 1,
            RankClass::Two => 2,
            RankClass::Three => 3,
        }
    }

    pub fn parse(s: &str) -> Result<Vec<RankClass>> {
        match s {
            "1" => Ok(vec![RankClass::One]),
            "2" => Ok(vec![RankClass::Two]),
            "3" => Ok(vec![RankClass::Three]),
            "all" => Ok(vec![RankClass::One, RankClass::Two, RankClass::Three]),
            other => Err(Error::Parse(format!(
                "bad rank class {:?} (expected 1, 2, 3 or all)",
                other
            ))),
        }
    }
}

fn draw_rat(rng: &mut ChaCha8Rng, cfg: &SampleConfig) -> Rat {
    let span = 2 * cfg.numerator_bound as u64 + 1;
    let num = (rng.next_u64() % span) as i64 - cfg.numerator_bound;
    let den = cfg.denominators[(rng.next_u64() % cfg.denominators.len() as u64) as usize];
    rat_frac(num, den)
}

fn draw_vector(rng: &mut ChaCha8Rng, cfg: &SampleConfig, n: usize) -> Vec<Rat> {
    (0..n).map(|_| draw_rat(rng, cfg)).collect()
}

fn scale(v: &[Rat], c: &Rat) -> Vec<Rat> {
    v.iter().map(|x| x * c).collect()
}

fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

const MAX_ATTEMPTS: u32 = 10_000;

/// Draws one admissible parameter of the requested rank. Sample
/// `index` selects an independent PRNG stream under the same seed.
pub fn sample_zeta(
    system: &RootSystem,
    class: RankClass,
    cfg: &SampleConfig,
    seed: u64,
    index: u64,
) -> Result<ZetaTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    let n = system.rank();
    for _ in 0..MAX_ATTEMPTS {
        let rows: [Vec<Rat>; 3] = match class {
            RankClass::One => {
                let dir = draw_vector(&mut rng, cfg, n);
                let x = draw_rat(&mut rng, cfg);
                let y = draw_rat(&mut rng, cfg);
                let z = draw_rat(&mut rng, cfg);
                [scale(&dir, &x), scale(&dir, &y), scale(&dir, &z)]
            }
            RankClass::Two => {
                let v = draw_vector(&mut rng, cfg, n);
                let w = draw_vector(&mut rng, cfg, n);
                let mix = |rng: &mut ChaCha8Rng| {
                    let a = draw_rat(rng, cfg);
                    let b = draw_rat(rng, cfg);
                    add(&scale(&v, &a), &scale(&w, &b))
                };
                [mix(&mut rng), mix(&mut rng), mix(&mut rng)]
            }
            RankClass::Three => [
                draw_vector(&mut rng, cfg, n),
                draw_vector(&mut rng, cfg, n),
                draw_vector(&mut rng, cfg, n),
            ],
        };
        let Ok(zeta) = ZetaTriple::new(system, rows) else { continue };
        if zeta.check_admissible(system).is_err() {
            continue;
        }
        match ale_curves::count::rank_of_zeta(system, &zeta) {
            Ok(r) if r == class.as_usize() => return Ok(zeta),
            _ => continue,
        }
    }
    Err(Error::Precondition(format!(
        "could not sample an admissible rank-{} parameter in {} attempts",
        class.as_usize(),
        MAX_ATTEMPTS
    )))
}

/// Draws a random admissible 2-plane basis (for induced-decomposition
/// sampling). The basis vectors are real.
pub fn sample_plane(
    system: &RootSystem,
    cfg: &SampleConfig,
    seed: u64,
    index: u64,
) -> Result<ale_curves::decomp::PlaneL> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1) | 1 << 63);
    let n = system.rank();
    for _ in 0..MAX_ATTEMPTS {
        let b1: Vec<_> = draw_vector(&mut rng, cfg, n)
            .into_iter()
            .map(ale_curves::exact::Gauss::from_rat)
            .collect();
        let b2: Vec<_> = draw_vector(&mut rng, cfg, n)
            .into_iter()
            .map(ale_curves::exact::Gauss::from_rat)
            .collect();
        let plane = ale_curves::decomp::PlaneL::new([b1, b2]);
        if plane.check_admissible(system).is_ok() {
            return Ok(plane);
        }
    }
    Err(Error::Precondition(format!(
        "could not sample an admissible plane in {} attempts",
        MAX_ATTEMPTS
    )))
}
