//! Double-precision cross-check of the exact special-parameter count.
//!
//! The exact engine is authoritative; this oracle solves each line-class
//! quadratic in floating point, clusters the projective roots under the
//! chordal metric, and reports a near-degeneracy flag whenever two roots
//! are suspiciously close without coinciding. Agreement is a statistical
//! health check, not a proof.

use ale_curves::count::{period_quadratic, ZetaTriple};
use ale_curves::exact::{BinaryQuadratic, Gauss, Rat};
use ale_curves::roots::RootSystem;
use std::collections::BTreeMap;

/// Minimal complex double arithmetic; only what the solver needs.
#[derive(Clone, Copy, Debug)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }

    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }

    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }

    fn mul(self, o: C64) -> C64 {
        C64::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }

    fn scale(self, s: f64) -> C64 {
        C64::new(self.re * s, self.im * s)
    }

    fn div(self, o: C64) -> C64 {
        let n = o.re * o.re + o.im * o.im;
        C64::new(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )
    }

    /// Principal square root.
    fn sqrt(self) -> C64 {
        let r = self.abs();
        let re = ((r + self.re) / 2.0).max(0.0).sqrt();
        let mut im = ((r - self.re) / 2.0).max(0.0).sqrt();
        if self.im < 0.0 {
            im = -im;
        }
        C64::new(re, im)
    }
}

fn rat_f64(r: &Rat) -> f64 {
    // numer/denom may exceed i64; go through string-free conversion
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

fn gauss_c64(g: &Gauss) -> C64 {
    C64::new(rat_f64(&g.re), rat_f64(&g.im))
}

/// A point of ℂP¹ as a unit spinor `(z1, z2)`.
#[derive(Clone, Copy, Debug)]
struct Spinor {
    z1: C64,
    z2: C64,
}

impl Spinor {
    fn normalized(z1: C64, z2: C64) -> Spinor {
        let n = (z1.abs().powi(2) + z2.abs().powi(2)).sqrt();
        Spinor { z1: z1.scale(1.0 / n), z2: z2.scale(1.0 / n) }
    }

    /// Chordal distance: `|z1 w2 − z2 w1|` for unit spinors; zero iff
    /// the projective points coincide, max 1 for antipodes.
    fn chordal(self, o: Spinor) -> f64 {
        self.z1.mul(o.z2).sub(self.z2.mul(o.z1)).abs()
    }
}

/// Both projective roots of `a z1² + b z1 z2 + c z2²`.
fn quadratic_roots(q: &BinaryQuadratic) -> Vec<Spinor> {
    let a = gauss_c64(&q.a);
    let b = gauss_c64(&q.b);
    let c = gauss_c64(&q.c);
    let scale = a.abs().max(b.abs()).max(c.abs());
    let tiny = 1e-14 * scale;
    if a.abs() <= tiny {
        if b.abs() <= tiny {
            // degenerate numerically: c z2² only, double root at [1:0]
            return vec![Spinor::normalized(C64::new(1.0, 0.0), C64::new(0.0, 0.0)); 2];
        }
        let finite = Spinor::normalized(C64::new(0.0, 0.0).sub(c), b);
        let infinity = Spinor::normalized(C64::new(1.0, 0.0), C64::new(0.0, 0.0));
        return vec![infinity, finite];
    }
    let disc = b.mul(b).sub(a.mul(c).scale(4.0)).sqrt();
    let two_a = a.scale(2.0);
    let t1 = C64::new(0.0, 0.0).sub(b).add(disc).div(two_a);
    let t2 = C64::new(0.0, 0.0).sub(b).sub(disc).div(two_a);
    vec![
        Spinor::normalized(t1, C64::new(1.0, 0.0)),
        Spinor::normalized(t2, C64::new(1.0, 0.0)),
    ]
}

#[derive(Clone, Copy, Debug)]
pub struct OracleTolerances {
    /// Roots closer than this are one cluster.
    pub cluster: f64,
    /// Near-degeneracy flag band `[low, high]` on inter-root distances.
    pub band_low: f64,
    pub band_high: f64,
}

impl Default for OracleTolerances {
    fn default() -> Self {
        OracleTolerances { cluster: 1e-9, band_low: 1e-12, band_high: 1e-6 }
    }
}

#[derive(Clone, Debug)]
pub struct FloatOracleResult {
    pub q1: usize,
    pub q2: usize,
    pub near_degenerate: bool,
}

/// Approximate `(q1, q2)`: solves every line-class quadratic in double
/// precision and clusters the roots on the sphere. The rank weighting
/// reuses the exact integer root data, so only root *coincidence* is
/// approximate here.
pub fn float_oracle(
    system: &RootSystem,
    zeta: &ZetaTriple,
    tol: &OracleTolerances,
) -> FloatOracleResult {
    // exact proportionality grouping (cheap and not part of the
    // approximate claim)
    let mut grouping: BTreeMap<BinaryQuadratic, Vec<usize>> = BTreeMap::new();
    for &idx in system.positive_roots() {
        let q = period_quadratic(system, zeta, idx);
        grouping.entry(q.normalized()).or_default().push(idx);
    }
    let classes: Vec<(BinaryQuadratic, Vec<usize>)> = grouping.into_iter().collect();

    // all roots, tagged with their class
    let mut roots: Vec<(Spinor, usize)> = Vec::new();
    for (ci, (form, _)) in classes.iter().enumerate() {
        for s in quadratic_roots(form) {
            roots.push((s, ci));
        }
    }

    // single-linkage clustering under the chordal tolerance
    let mut cluster_of: Vec<usize> = (0..roots.len()).collect();
    fn find(c: &mut Vec<usize>, i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    let mut near_degenerate = false;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = roots[i].0.chordal(roots[j].0);
            if d >= tol.band_low && d <= tol.band_high {
                near_degenerate = true;
            }
            if d <= tol.cluster {
                let (ri, rj) = (find(&mut cluster_of, i), find(&mut cluster_of, j));
                if ri != rj {
                    cluster_of[ri] = rj;
                }
            }
        }
    }
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..roots.len() {
        let rep = find(&mut cluster_of, i);
        members.entry(rep).or_default().push(i);
    }
    let q1 = members.len();
    let q2 = members
        .values()
        .map(|idxs| {
            let mut incident: Vec<usize> = Vec::new();
            for &i in idxs {
                incident.extend(classes[roots[i].1].1.iter().copied());
            }
            incident.sort_unstable();
            incident.dedup();
            system.span_rank(incident)
        })
        .sum();
    FloatOracleResult { q1, q2, near_degenerate }
}
