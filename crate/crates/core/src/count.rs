//! The curve-counting engine.
//!
//! Given an admissible deformation parameter `ζ = (ζ¹, ζ², ζ³)` for an
//! ADE root system, each root `θ` yields the binary quadratic
//! `q_θ(z₁,z₂) = θ(ζ²+𝐢ζ³)·z₁² + 2θ(ζ¹)·z₁z₂ + θ(−ζ²+𝐢ζ³)·z₂²`,
//! the composition of the root with the lifted period map. A twistor
//! parameter carries a rational curve exactly when some `q_θ` vanishes
//! there, and the number of curves in that fiber is the rank of the
//! subsystem of vanishing roots.
//!
//! One uniform incidence algorithm covers all three rank strata: group
//! roots into line classes by proportionality of their quadratics, find
//! exact shared projective roots via form gcds, divide them out, and
//! classify the residual (private) roots by residual degree and
//! discriminant. Irrational special points are counted, never
//! constructed, so the scalar field stays ℚ(i) throughout.

use crate::exact::{
    distinct_root_count, form_gcd, rat_int, BinaryForm, BinaryQuadratic, Gauss,
    ProjectivePoint1, Rat,
};
use crate::roots::RootSystem;
use crate::{Error, Result};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};
use rand_core::{RngCore, SeedableRng};

/// A deformation parameter: three real rational Cartan vectors in
/// simple-root-evaluation coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZetaTriple {
    rows: [Vec<Rat>; 3],
}

impl ZetaTriple {
    pub fn new(system: &RootSystem, rows: [Vec<Rat>; 3]) -> Result<Self> {
        if rows.iter().any(|r| r.len() != system.rank()) {
            return Err(Error::Precondition(String::from(
                "zeta rows must have length = rank",
            )));
        }
        Ok(ZetaTriple { rows })
    }

    pub fn rows(&self) -> &[Vec<Rat>; 3] {
        &self.rows
    }

    /// `θ(ζᵏ)` for the root with the given index, exactly.
    fn eval(&self, system: &RootSystem, root: usize, k: usize) -> Rat {
        system
            .root(root)
            .iter()
            .zip(&self.rows[k])
            .map(|(&c, v)| v * rat_int(c))
            .sum()
    }

    /// Genericity: no root may vanish on all three components. Returns
    /// the first violating root otherwise.
    pub fn check_admissible(&self, system: &RootSystem) -> Result<()> {
        for &idx in system.positive_roots() {
            if (0..3).all(|k| self.eval(system, idx, k).is_zero()) {
                return Err(Error::InadmissibleZeta { root_index: idx });
            }
        }
        Ok(())
    }
}

/// Dimension of the real span of `(ζ¹, ζ², ζ³)`.
pub fn rank_of_zeta(system: &RootSystem, zeta: &ZetaTriple) -> Result<usize> {
    zeta.check_admissible(system)?;
    let rows: Vec<Vec<Gauss>> = zeta
        .rows
        .iter()
        .map(|r| r.iter().map(|x| Gauss::from_rat(x.clone())).collect())
        .collect();
    Ok(crate::exact::rank_of_matrix(&rows))
}

/// The lifted period `z₁²(ζ²+𝐢ζ³) + 2z₁z₂ζ¹ − z₂²(ζ²−𝐢ζ³)` as a
/// complexified Cartan vector.
pub fn period_eval(zeta: &ZetaTriple, z1: &Gauss, z2: &Gauss) -> Result<Vec<Gauss>> {
    if z1.is_zero() && z2.is_zero() {
        return Err(Error::ZeroLift);
    }
    let sq1 = z1 * z1;
    let cross = (z1 * z2).scale(&rat_int(2));
    let sq2 = z2 * z2;
    let n = zeta.rows[0].len();
    let out = (0..n)
        .map(|j| {
            let plus = Gauss::new(zeta.rows[1][j].clone(), zeta.rows[2][j].clone());
            let minus = Gauss::new(zeta.rows[1][j].clone(), -zeta.rows[2][j].clone());
            let first = &sq1 * &plus;
            let mid = cross.scale(&zeta.rows[0][j]);
            let last = &sq2 * &minus;
            &(&first + &mid) - &last
        })
        .collect();
    Ok(out)
}

/// The quadratic `q_θ` attached to one root.
pub fn period_quadratic(system: &RootSystem, zeta: &ZetaTriple, root: usize) -> BinaryQuadratic {
    let e1 = zeta.eval(system, root, 0);
    let e2 = zeta.eval(system, root, 1);
    let e3 = zeta.eval(system, root, 2);
    BinaryQuadratic::new(
        Gauss::new(e2.clone(), e3.clone()),
        Gauss::from_rat(e1 * rat_int(2)),
        Gauss::new(-e2, e3),
    )
}

/// Parameter of the twistor rotation: a finite point `u = u₁ + 𝐢u₂` of
/// ℙ¹ with rational parts, or the point at infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RotationU {
    Finite { u1: Rat, u2: Rat },
    Infinity,
}

/// The rotated pair `(ζ̃², ζ̃³)` identifying the fiber over `u` with the
/// distinguished fiber of a rotated parameter. The algebraic identity
/// `ζ̃² + 𝐢ζ̃³ = ζ² + 𝐢ζ³ + 2uζ¹ − u²(ζ² − 𝐢ζ³)` is asserted exactly.
pub fn rotation_tilde(zeta: &ZetaTriple, u: &RotationU) -> (Vec<Rat>, Vec<Rat>) {
    let [z1, z2, z3] = &zeta.rows;
    match u {
        RotationU::Infinity => (z2.iter().map(|x| -x.clone()).collect(), z3.clone()),
        RotationU::Finite { u1, u2 } => {
            let n = z1.len();
            let c2: Vec<Rat> = (0..n)
                .map(|j| {
                    rat_int(2) * u1 * &z1[j] + (Rat::from_integer(1.into()) - u1 * u1 + u2 * u2) * &z2[j]
                        - rat_int(2) * u1 * u2 * &z3[j]
                })
                .collect();
            let c3: Vec<Rat> = (0..n)
                .map(|j| {
                    rat_int(2) * u2 * &z1[j] - rat_int(2) * u1 * u2 * &z2[j]
                        + (Rat::from_integer(1.into()) + u1 * u1 - u2 * u2) * &z3[j]
                })
                .collect();
            // ζ̃² + 𝐢ζ̃³ must equal ζ² + 𝐢ζ³ + 2uζ¹ − u²(ζ²−𝐢ζ³).
            let uu = Gauss::new(u1.clone(), u2.clone());
            let uu_sq = &uu * &uu;
            for j in 0..n {
                let lhs = Gauss::new(c2[j].clone(), c3[j].clone());
                let base = Gauss::new(z2[j].clone(), z3[j].clone());
                let conj = Gauss::new(z2[j].clone(), -z3[j].clone());
                let rhs = &(&base + &uu.scale(&(rat_int(2) * &z1[j]))) - &(&uu_sq * &conj);
                assert_eq!(lhs, rhs, "rotation identity must hold exactly");
            }
            (c2, c3)
        }
    }
}

/// A proportionality class of period quadratics: the roots sharing one
/// projective line, with the normalized representative form.
#[derive(Clone, Debug)]
pub struct LineClass {
    /// Positive root indices whose quadratics are proportional.
    pub roots: Vec<usize>,
    /// Representative form, normalized so the leading coefficient is 1.
    pub form: BinaryQuadratic,
    pub rank: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PointLocation {
    /// An exact point of ℙ¹(ℚ(i)).
    Exact(ProjectivePoint1),
    /// One member of a conjugate pair of private roots of a class whose
    /// residual quadratic does not split over ℚ(i); counted without
    /// extraction.
    PrivatePair { class: usize, member: u8 },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointKind {
    /// Every incident class meets with multiplicity 2.
    Tangential,
    /// Some incident class meets with multiplicity 1.
    Transversal,
}

/// One special twistor parameter: a point where some period quadratic
/// vanishes.
#[derive(Clone, Debug)]
pub struct SpecialPoint {
    pub location: PointLocation,
    /// Incident class ids with the multiplicity of the point in each
    /// class form (1 or 2).
    pub classes: Vec<(usize, usize)>,
    pub kind: PointKind,
    /// Positive-root indices of the vanishing subsystem at this point.
    pub member_roots: BTreeSet<usize>,
    pub subsystem_rank: usize,
}

#[derive(Clone, Debug)]
pub struct CurveCountReport {
    pub rank_zeta: usize,
    pub q1: usize,
    pub q2: usize,
    pub s_count: usize,
    pub t_count: usize,
    pub classes: Vec<LineClass>,
    pub points: Vec<SpecialPoint>,
    /// Named theorem-bound flags; all must be true for any admissible
    /// parameter.
    pub bounds: Vec<(&'static str, bool)>,
}

impl CurveCountReport {
    pub fn bounds_ok(&self) -> bool {
        self.bounds.iter().all(|(_, ok)| *ok)
    }

    pub fn assert_bounds(&self) -> Result<()> {
        match self.bounds.iter().find(|(_, ok)| !*ok) {
            None => Ok(()),
            Some((name, _)) => Err(Error::BoundViolation(format!(
                "{} (q1={}, q2={}, s={}, t={})",
                name, self.q1, self.q2, self.s_count, self.t_count
            ))),
        }
    }
}

fn form_to_quadratic(form: &BinaryForm) -> BinaryQuadratic {
    assert_eq!(form.degree(), 2);
    let cs = form.finite_part().coeffs();
    match form.infinity_multiplicity() {
        0 => BinaryQuadratic::new(cs[2].clone(), cs[1].clone(), cs[0].clone()),
        1 => BinaryQuadratic::new(Gauss::zero(), cs[1].clone(), cs[0].clone()),
        _ => BinaryQuadratic::new(Gauss::zero(), Gauss::zero(), cs[0].clone()),
    }
}

/// Runs the uniform incidence algorithm and checks every rank-stratified
/// theorem bound, returning the full report. False bound flags are
/// reported, not raised; [`count_curves`] is the checked wrapper.
pub fn count_curves_report(system: &RootSystem, zeta: &ZetaTriple) -> Result<CurveCountReport> {
    zeta.check_admissible(system)?;
    let rank_zeta = rank_of_zeta(system, zeta)?;

    // (1)–(2) period quadratics for positive roots, grouped into line
    // classes by proportionality (equality of normalized forms).
    let mut grouping: BTreeMap<BinaryQuadratic, Vec<usize>> = BTreeMap::new();
    for &idx in system.positive_roots() {
        let q = period_quadratic(system, zeta, idx);
        debug_assert!(!q.is_zero(), "admissibility guarantees nonzero forms");
        grouping.entry(q.normalized()).or_default().push(idx);
    }
    let classes: Vec<LineClass> = grouping
        .into_iter()
        .map(|(form, roots)| {
            let rank = system.span_rank(roots.iter().copied());
            LineClass { roots, form, rank }
        })
        .collect();

    // (3) shared projective points from pairwise degree-1 gcds.
    let mut shared: BTreeMap<ProjectivePoint1, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let g = form_gcd(&classes[i].form, &classes[j].form)?;
            match g.degree() {
                0 => {}
                1 => {
                    let p = g.linear_root()?;
                    let entry = shared.entry(p).or_default();
                    entry.insert(i);
                    entry.insert(j);
                }
                _ => unreachable!("distinct classes cannot be proportional"),
            }
        }
    }

    let mut points: Vec<SpecialPoint> = Vec::new();

    // Shared points: incidence multiplicities per class, then the
    // tangential test (all incident multiplicities equal to 2).
    let mut shared_mult: BTreeMap<usize, Vec<(ProjectivePoint1, usize)>> = BTreeMap::new();
    for (p, class_ids) in &shared {
        let mut incident: Vec<(usize, usize)> = Vec::new();
        let mut member_roots: BTreeSet<usize> = BTreeSet::new();
        for &k in class_ids {
            let mult = classes[k].form.to_form()?.multiplicity_at(p);
            debug_assert!(mult >= 1);
            incident.push((k, mult));
            member_roots.extend(classes[k].roots.iter().copied());
            shared_mult.entry(k).or_default().push((p.clone(), mult));
        }
        let kind = if incident.iter().all(|&(_, m)| m == 2) {
            PointKind::Tangential
        } else {
            PointKind::Transversal
        };
        let subsystem_rank = system.span_rank(member_roots.iter().copied());
        points.push(SpecialPoint {
            location: PointLocation::Exact(p.clone()),
            classes: incident,
            kind,
            member_roots,
            subsystem_rank,
        });
    }

    // (4) private points: divide out shared factors to full multiplicity
    // and classify the residual of each class.
    for (k, class) in classes.iter().enumerate() {
        let mut residual = class.form.to_form()?;
        if let Some(list) = shared_mult.get(&k) {
            for (p, mult) in list {
                let line = BinaryForm::linear_at(p);
                for _ in 0..*mult {
                    residual = residual
                        .div_exact(&line)
                        .expect("shared factor divides to its multiplicity");
                }
            }
        }
        let member_roots: BTreeSet<usize> = class.roots.iter().copied().collect();
        match residual.degree() {
            0 => {}
            1 => {
                let p = residual.linear_root()?;
                debug_assert!(!shared.contains_key(&p), "private point cannot be shared");
                points.push(SpecialPoint {
                    location: PointLocation::Exact(p),
                    classes: alloc::vec![(k, 1)],
                    kind: PointKind::Transversal,
                    member_roots: member_roots.clone(),
                    subsystem_rank: class.rank,
                });
            }
            2 => {
                let quad = form_to_quadratic(&residual);
                let (count, double) = distinct_root_count(&quad)?;
                if count == 1 {
                    let p = double.expect("double root is exact");
                    debug_assert!(!shared.contains_key(&p));
                    points.push(SpecialPoint {
                        location: PointLocation::Exact(p),
                        classes: alloc::vec![(k, 2)],
                        kind: PointKind::Tangential,
                        member_roots: member_roots.clone(),
                        subsystem_rank: class.rank,
                    });
                } else {
                    for member in 0..2u8 {
                        points.push(SpecialPoint {
                            location: PointLocation::PrivatePair { class: k, member },
                            classes: alloc::vec![(k, 1)],
                            kind: PointKind::Transversal,
                            member_roots: member_roots.clone(),
                            subsystem_rank: class.rank,
                        });
                    }
                }
            }
            d => unreachable!("quadratic residual of degree {}", d),
        }
    }

    // (5)–(6) tallies.
    let q1 = points.len();
    let q2 = points.iter().map(|p| p.subsystem_rank).sum();
    let t_count = points.iter().filter(|p| p.kind == PointKind::Tangential).count();
    let s_count = q1 - t_count;

    // (7) rank-stratified theorem bounds.
    let r = system.rank();
    let total = system.num_roots();
    let mut bounds: Vec<(&'static str, bool)> = Vec::new();
    match rank_zeta {
        1 => {
            bounds.push(("rank1_q1_eq_2", q1 == 2));
            bounds.push(("rank1_q2_eq_2r", q2 == 2 * r));
        }
        2 => {
            bounds.push(("rank2_q1_ge_4", q1 >= 4));
            bounds.push(("rank2_q1_le_num_roots", q1 <= total));
            bounds.push(("rank2_q2_ge_2r", q2 >= 2 * r));
            bounds.push(("rank2_q2_le_num_roots", q2 <= total));
        }
        3 => {
            bounds.push(("rank3_q1_ge_3", q1 >= 3));
            bounds.push(("rank3_q1_le_num_roots", q1 <= total));
            bounds.push(("rank3_q2_ge_2r_minus_1", q2 + 1 >= 2 * r));
            bounds.push(("rank3_q2_le_num_roots", q2 <= total));
            bounds.push(("rank3_transversal_nonzero", s_count >= 1));
            bounds.push(("rank3_no_tangent_implies_s_ge_3", t_count != 0 || s_count >= 3));
            bounds.push(("rank3_s_eq_2_implies_t_ge_2", s_count != 2 || t_count >= 2));
        }
        _ => unreachable!("rank of zeta is 1, 2 or 3"),
    }

    Ok(CurveCountReport {
        rank_zeta,
        q1,
        q2,
        s_count,
        t_count,
        classes,
        points,
        bounds,
    })
}

/// [`count_curves_report`] plus the theorem-violation alarm: any false
/// bound flag becomes an error.
pub fn count_curves(system: &RootSystem, zeta: &ZetaTriple) -> Result<CurveCountReport> {
    let report = count_curves_report(system, zeta)?;
    report.assert_bounds()?;
    Ok(report)
}

/// Closed-form output for rank-1 parameters `ζ = (x·v, y·v, z·v)`.
#[derive(Clone, Debug)]
pub struct Rank1Report {
    pub direction: Vec<Rat>,
    pub xyz: (Rat, Rat, Rat),
    pub quadratic: BinaryQuadratic,
    /// Both roots, exact when the discriminant is a square in ℚ(i).
    pub roots: Option<(ProjectivePoint1, ProjectivePoint1)>,
    pub q1: usize,
    pub q2: usize,
}

/// Rank-1 counting without the incidence machinery: extract the common
/// direction `v` and the scalar triple `(x, y, z)`, then read both
/// special parameters off the single quadratic
/// `(y+𝐢z)z₁² + 2x·z₁z₂ − (y−𝐢z)z₂²`.
pub fn count_rank1_closed_form(system: &RootSystem, zeta: &ZetaTriple) -> Result<Rank1Report> {
    let rank = rank_of_zeta(system, zeta)?;
    if rank != 1 {
        return Err(Error::RankMismatch { expected: 1, found: rank });
    }
    let rows = &zeta.rows;
    let direction = rows
        .iter()
        .find(|r| r.iter().any(|x| !x.is_zero()))
        .expect("rank 1 implies a nonzero row")
        .clone();
    let pivot = direction.iter().position(|x| !x.is_zero()).expect("nonzero row");
    let mut scalars = Vec::new();
    for row in rows.iter() {
        let t = &row[pivot] / &direction[pivot];
        for j in 0..direction.len() {
            if row[j] != &t * &direction[j] {
                return Err(Error::RankMismatch { expected: 1, found: 2 });
            }
        }
        scalars.push(t);
    }
    let (x, y, z) = (scalars[0].clone(), scalars[1].clone(), scalars[2].clone());
    let quadratic = BinaryQuadratic::new(
        Gauss::new(y.clone(), z.clone()),
        Gauss::from_rat(&x * rat_int(2)),
        Gauss::new(-y.clone(), z.clone()),
    );
    // Discriminant 4(x² + y² + z²) is a positive rational: tangency is
    // impossible in rank 1.
    let disc = quadratic.discriminant();
    assert!(disc.is_real() && disc.re.is_positive(), "rank-1 discriminant must be > 0");
    let roots = disc.sqrt().map(|s| {
        let (a, b) = (&quadratic.a, &quadratic.b);
        if a.is_zero() {
            // roots [1:0] and [-c : b]
            let other = ProjectivePoint1::new(-&quadratic.c, b.clone()).expect("b nonzero");
            (ProjectivePoint1::infinity(), other)
        } else {
            let two_a = a.scale(&rat_int(2));
            let r1 = ProjectivePoint1::new(&(-b) + &s, two_a.clone()).expect("nonzero lift");
            let r2 = ProjectivePoint1::new(&(-b) - &s, two_a).expect("nonzero lift");
            (r1, r2)
        }
    });
    Ok(Rank1Report {
        direction,
        xyz: (x, y, z),
        quadratic,
        roots,
        q1: 2,
        q2: 2 * system.rank(),
    })
}

/// One falsification sample of the probe.
#[derive(Clone, Debug)]
pub struct SemicontViolation {
    pub zeta: ZetaTriple,
    pub q1: usize,
}

#[derive(Clone, Debug)]
pub struct SemicontReport {
    pub base_q1: usize,
    pub trials: usize,
    pub min_q1: Option<usize>,
    pub violations: Vec<SemicontViolation>,
    /// Samples rejected for hitting a root wall (resampled).
    pub rejected: usize,
}

/// Samples rational perturbations of `ζ₀` within the given max-norm
/// radius and reports every sample whose special-parameter count drops
/// below the base count. Inadmissible samples are rejected and redrawn.
/// This is a falsification harness: it cannot prove semi-continuity,
/// only exhibit reproducible counterexamples.
pub fn semicontinuity_probe(
    system: &RootSystem,
    base: &ZetaTriple,
    radius: &Rat,
    trials: usize,
    seed: u64,
) -> Result<SemicontReport> {
    if !radius.is_positive() {
        return Err(Error::Precondition(String::from("radius must be > 0")));
    }
    let base_report = count_curves_report(system, base)?;
    let base_q1 = base_report.q1;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    // jitter grid: radius · k/16 with k uniform in [-16, 16]
    let grid = 16i64;
    let mut min_q1: Option<usize> = None;
    let mut violations = Vec::new();
    let mut rejected = 0usize;
    for _ in 0..trials {
        let sample = loop {
            let rows: [Vec<Rat>; 3] = core::array::from_fn(|k| {
                base.rows[k]
                    .iter()
                    .map(|x| {
                        let k = (rng.next_u64() % (2 * grid as u64 + 1)) as i64 - grid;
                        x + radius * crate::exact::rat_frac(k, grid)
                    })
                    .collect()
            });
            let cand = ZetaTriple { rows };
            if cand.check_admissible(system).is_ok() {
                break cand;
            }
            rejected += 1;
        };
        let q1 = count_curves_report(system, &sample)?.q1;
        min_q1 = Some(min_q1.map_or(q1, |m| m.min(q1)));
        if q1 < base_q1 {
            violations.push(SemicontViolation { zeta: sample, q1 });
        }
    }
    Ok(SemicontReport { base_q1, trials, min_q1, violations, rejected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_frac, squarefree_root_count};
    use crate::roots::{build_root_system, Family};

    fn zeta(system: &RootSystem, rows: [&[i64]; 3]) -> ZetaTriple {
        let rows = rows.map(|r| r.iter().map(|&c| rat_int(c)).collect::<Vec<Rat>>());
        ZetaTriple::new(system, rows).unwrap()
    }

    #[test]
    fn rank_of_zeta_strata() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        assert_eq!(rank_of_zeta(&a1, &zeta(&a1, [&[1], &[0], &[0]])).unwrap(), 1);
        let a2 = build_root_system(Family::A, 2).unwrap();
        assert_eq!(
            rank_of_zeta(&a2, &zeta(&a2, [&[1, 0], &[0, 1], &[0, 0]])).unwrap(),
            2
        );
        let a3 = build_root_system(Family::A, 3).unwrap();
        assert_eq!(
            rank_of_zeta(
                &a3,
                &zeta(&a3, [&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
            )
            .unwrap(),
            3
        );
    }

    #[test]
    fn inadmissible_zeta_names_the_root() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        // α₁ vanishes on all three components of ((0,1),(0,2),(0,3)).
        let z = zeta(&a2, [&[0, 1], &[0, 2], &[0, 3]]);
        let err = rank_of_zeta(&a2, &z).unwrap_err();
        let alpha1 = a2.index_of_root(&[1, 0]).unwrap();
        assert_eq!(err, Error::InadmissibleZeta { root_index: alpha1 });
    }

    #[test]
    fn period_eval_basis_points() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let z = zeta(&a2, [&[1, 0], &[0, 1], &[0, 0]]);
        let at10 = period_eval(&z, &Gauss::one(), &Gauss::zero()).unwrap();
        // ζ² + 𝐢ζ³ = (0, 1)
        assert_eq!(at10, alloc::vec![Gauss::zero(), Gauss::one()]);
        let at01 = period_eval(&z, &Gauss::zero(), &Gauss::one()).unwrap();
        assert_eq!(at01, alloc::vec![Gauss::zero(), -Gauss::one()]);
        // (1,1): 2ζ¹ + 2𝐢ζ³ = (2, 0)
        let at11 = period_eval(&z, &Gauss::one(), &Gauss::one()).unwrap();
        assert_eq!(at11, alloc::vec![Gauss::from_int(2), Gauss::zero()]);
        assert_eq!(
            period_eval(&z, &Gauss::zero(), &Gauss::zero()),
            Err(Error::ZeroLift)
        );
    }

    #[test]
    fn rotation_identity_special_values() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let z = zeta(&a2, [&[1, 2], &[3, 4], &[5, 6]]);
        let id = rotation_tilde(&z, &RotationU::Finite { u1: rat_int(0), u2: rat_int(0) });
        assert_eq!(id.0, z.rows()[1]);
        assert_eq!(id.1, z.rows()[2]);
        // u = 𝐢: ζ̃² = 2ζ², ζ̃³ = 2ζ¹
        let ui = rotation_tilde(&z, &RotationU::Finite { u1: rat_int(0), u2: rat_int(1) });
        assert_eq!(ui.0, z.rows()[1].iter().map(|x| x * rat_int(2)).collect::<Vec<_>>());
        assert_eq!(ui.1, z.rows()[0].iter().map(|x| x * rat_int(2)).collect::<Vec<_>>());
        let inf = rotation_tilde(&z, &RotationU::Infinity);
        assert_eq!(inf.0, z.rows()[1].iter().map(|x| -x.clone()).collect::<Vec<_>>());
        assert_eq!(inf.1, z.rows()[2]);
    }

    #[test]
    fn count_a1_rank1() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        let z = zeta(&a1, [&[1], &[0], &[0]]);
        let report = count_curves(&a1, &z).unwrap();
        assert_eq!((report.rank_zeta, report.q1, report.q2), (1, 2, 2));
        assert_eq!(report.t_count, 0);
    }

    #[test]
    fn count_a2_rank2_worked_instance() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let z = zeta(&a2, [&[1, 0], &[0, 1], &[0, 0]]);
        let report = count_curves(&a2, &z).unwrap();
        assert_eq!(report.rank_zeta, 2);
        assert_eq!(report.classes.len(), 3);
        assert_eq!(report.q1, 6);
        assert_eq!(report.q2, 6);
        assert_eq!(report.t_count, 0);
    }

    #[test]
    fn count_a3_rank3_worked_instance() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        let z = zeta(&a3, [&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let report = count_curves(&a3, &z).unwrap();
        assert_eq!(report.rank_zeta, 3);
        assert_eq!(report.classes.len(), 6);
        assert_eq!(report.q1, 12);
        assert_eq!(report.q2, 12);
    }

    #[test]
    fn q1_matches_squarefree_oracle() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        for rows in [
            [&[1i64, 0, 0][..], &[0, 1, 0][..], &[0, 0, 1][..]],
            [&[1, 2, 3][..], &[3, 1, 0][..], &[0, 0, 2][..]],
            [&[2, 1, 1][..], &[1, 1, 3][..], &[0, 1, 0][..]],
        ] {
            let z = zeta(&a3, rows);
            let report = count_curves_report(&a3, &z).unwrap();
            let reps: Vec<BinaryQuadratic> =
                report.classes.iter().map(|c| c.form.clone()).collect();
            assert_eq!(report.q1, squarefree_root_count(&reps).unwrap());
        }
    }

    #[test]
    fn root_membership_soundness() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        let z = zeta(&a3, [&[1, 2, 3], &[3, 1, 0], &[0, 0, 2]]);
        let report = count_curves_report(&a3, &z).unwrap();
        for point in &report.points {
            if let PointLocation::Exact(p) = &point.location {
                for &idx in a3.positive_roots() {
                    let q = period_quadratic(&a3, &z, idx);
                    assert_eq!(q.vanishes_at(p), point.member_roots.contains(&idx));
                }
            }
        }
    }

    #[test]
    fn rank1_closed_form_examples() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        // ζ = ((1,1)·1, (1,1)·0, (1,1)·0)
        let z = zeta(&a2, [&[1, 1], &[0, 0], &[0, 0]]);
        let rep = count_rank1_closed_form(&a2, &z).unwrap();
        assert_eq!(rep.xyz, (rat_int(1), rat_int(0), rat_int(0)));
        let (r1, r2) = rep.roots.unwrap();
        assert!(r1.is_infinity() || r2.is_infinity());
        assert_eq!((rep.q1, rep.q2), (2, 4));
        let full = count_curves(&a2, &z).unwrap();
        assert_eq!((full.q1, full.q2), (2, 4));

        // (x,y,z) = (0,1,0): roots [1:±1]
        let z = zeta(&a2, [&[0, 0], &[1, 1], &[0, 0]]);
        let rep = count_rank1_closed_form(&a2, &z).unwrap();
        let one = ProjectivePoint1::new(Gauss::one(), Gauss::one()).unwrap();
        let minus = ProjectivePoint1::new(Gauss::one(), -Gauss::one()).unwrap();
        let (r1, r2) = rep.roots.unwrap();
        assert!(alloc::vec![r1, r2].iter().all(|r| *r == one || *r == minus));
    }

    #[test]
    fn rank1_closed_form_rejects_higher_rank() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let z = zeta(&a2, [&[1, 0], &[0, 1], &[0, 0]]);
        assert!(matches!(
            count_rank1_closed_form(&a2, &z),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn semicontinuity_probe_rank1_never_violates() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let z = zeta(&a2, [&[1, 1], &[0, 0], &[0, 0]]);
        let rep = semicontinuity_probe(&a2, &z, &rat_frac(1, 1000), 25, 7).unwrap();
        assert_eq!(rep.base_q1, 2);
        assert!(rep.violations.is_empty());
        assert!(rep.min_q1.unwrap() >= 2);
    }

    #[test]
    fn semicontinuity_probe_zero_trials() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let z = zeta(&a2, [&[1, 0], &[0, 1], &[0, 0]]);
        let rep = semicontinuity_probe(&a2, &z, &rat_frac(1, 100), 0, 1).unwrap();
        assert_eq!(rep.trials, 0);
        assert!(rep.min_q1.is_none());
        assert!(rep.violations.is_empty());
    }
}
