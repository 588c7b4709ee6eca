//! Root-system decomposition machinery: decompositions induced by a
//! 2-plane, validity checking of type-1/type-2 decompositions, and exact
//! branch-and-bound solvers for the minimal rank sums f1 and f2.
//!
//! Type-1: a partition of Φ into nonempty proper span-closed subsystems.
//! Type-2: a cover by nonempty proper span-closed subsystems where only
//! the designated tail pieces must be disjoint from everything else;
//! at least two pieces overall. The solvers minimize the sum of piece
//! ranks over all decompositions of the given kind, with an exhaustion
//! certificate when the search ran to completion.

use crate::exact::Gauss;
use crate::roots::{HVector, RootSubsystem, RootSystem};
use crate::{Error, Result};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use crate::exact::ProjectivePoint1;

/// A 2-plane in 𝔥^ℂ spanned by two Cartan vectors.
#[derive(Clone, Debug)]
pub struct PlaneL {
    pub basis: [HVector; 2],
}

impl PlaneL {
    pub fn new(basis: [HVector; 2]) -> Self {
        PlaneL { basis }
    }

    /// Admissible iff the basis is independent and no root kernel
    /// contains the plane (i.e. no root vanishes on both basis
    /// vectors).
    pub fn check_admissible(&self, system: &RootSystem) -> Result<()> {
        let rows: Vec<Vec<Gauss>> = self.basis.iter().cloned().collect();
        if crate::exact::rank_of_matrix(&rows) != 2 {
            return Err(Error::Precondition(String::from(
                "plane basis must be linearly independent",
            )));
        }
        for &idx in system.positive_roots() {
            if system.root_eval(idx, &self.basis[0]).is_zero()
                && system.root_eval(idx, &self.basis[1]).is_zero()
            {
                return Err(Error::InadmissiblePlane { root_index: idx });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecompKind {
    /// Fibers of the line map `θ ↦ ker θ|_L`.
    Induced,
    /// Disjoint partition into proper span-closed pieces.
    Type1,
    /// The first `s` pieces may overlap each other; the rest are
    /// pairwise disjoint and disjoint from the first `s`.
    Type2 { s: usize },
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<RootSubsystem>,
    pub kind: DecompKind,
}

impl Decomposition {
    pub fn rank_sum(&self, system: &RootSystem) -> usize {
        self.pieces.iter().map(|p| system.subsystem_rank(p)).sum()
    }
}

/// One fiber of the induced decomposition.
#[derive(Clone, Debug)]
pub struct InducedClass {
    /// Common projective value of `(θ(b₁), θ(b₂))` over the class.
    pub line: ProjectivePoint1,
    pub subsystem: RootSubsystem,
    pub rank: usize,
    /// Number of simple roots in the class.
    pub simple_count: usize,
}

#[derive(Clone, Debug)]
pub struct InducedDecomposition {
    pub classes: Vec<InducedClass>,
    pub rank_sum: usize,
    /// `3 ≤ s ≤ ½|Φ|`
    pub class_count_bounds_ok: bool,
    /// `r + 1 ≤ Σ r_k ≤ ½|Φ|`
    pub rank_sum_bounds_ok: bool,
}

impl InducedDecomposition {
    pub fn to_decomposition(&self) -> Decomposition {
        Decomposition {
            pieces: self.classes.iter().map(|c| c.subsystem.clone()).collect(),
            kind: DecompKind::Induced,
        }
    }
}

/// Groups roots by projective equality of their evaluations on the
/// plane basis and checks the class-count and rank-sum bounds, which
/// hold for every admissible plane.
pub fn induced_decomposition(system: &RootSystem, plane: &PlaneL) -> Result<InducedDecomposition> {
    plane.check_admissible(system)?;
    let mut grouping: BTreeMap<ProjectivePoint1, BTreeSet<usize>> = BTreeMap::new();
    for &idx in system.positive_roots() {
        let e1 = system.root_eval(idx, &plane.basis[0]);
        let e2 = system.root_eval(idx, &plane.basis[1]);
        let key = ProjectivePoint1::new(e1, e2)?;
        grouping.entry(key).or_default().insert(idx);
    }
    let classes: Vec<InducedClass> = grouping
        .into_iter()
        .map(|(line, positives)| {
            let rank = system.span_rank(positives.iter().copied());
            let simple_count = (0..system.rank())
                .filter(|&i| positives.contains(&system.simple_root_index(i)))
                .count();
            let members = system.negation_closure(positives);
            InducedClass {
                line,
                subsystem: RootSubsystem { members, span_closed: true },
                rank,
                simple_count,
            }
        })
        .collect();
    let s = classes.len();
    let rank_sum: usize = classes.iter().map(|c| c.rank).sum();
    let half = system.num_roots() / 2;
    let class_count_bounds_ok = 3 <= s && s <= half;
    let rank_sum_bounds_ok = system.rank() + 1 <= rank_sum && rank_sum <= half;
    let out = InducedDecomposition { classes, rank_sum, class_count_bounds_ok, rank_sum_bounds_ok };
    if !out.class_count_bounds_ok || !out.rank_sum_bounds_ok {
        return Err(Error::BoundViolation(format!(
            "induced decomposition bounds failed: s={}, rank_sum={}",
            s, rank_sum
        )));
    }
    Ok(out)
}

/// Checks every structural invariant of a decomposition; an empty list
/// means valid. Violations name the failing piece and condition.
pub fn validate_decomposition(system: &RootSystem, d: &Decomposition) -> Vec<String> {
    let mut violations = Vec::new();
    let mut union: BTreeSet<usize> = BTreeSet::new();
    for (i, piece) in d.pieces.iter().enumerate() {
        if piece.is_empty() {
            violations.push(format!("piece {} is empty", i));
            continue;
        }
        if piece.len() == system.num_roots() {
            violations.push(format!("piece {} is not proper", i));
        }
        for &m in &piece.members {
            if !piece.members.contains(&system.negate(m)) {
                violations.push(format!("piece {} is not closed under negation", i));
                break;
            }
        }
        let closure = system.span_closure(piece.members.iter().copied());
        if closure.members != piece.members {
            violations.push(format!("piece {} is not span-closed", i));
        }
        union.extend(piece.members.iter().copied());
    }
    if union.len() != system.num_roots() {
        violations.push(String::from("union of pieces is not the whole root system"));
    }
    let disjoint_required: Vec<usize> = match d.kind {
        DecompKind::Induced | DecompKind::Type1 => (0..d.pieces.len()).collect(),
        DecompKind::Type2 { s } => {
            if d.pieces.len() < 2 {
                violations.push(String::from("type-2 needs at least two pieces"));
            }
            if s > d.pieces.len() {
                violations.push(format!("type-2 split index {} out of range", s));
                return violations;
            }
            // tail pieces must also be disjoint from the head union
            let head: BTreeSet<usize> = d.pieces[..s]
                .iter()
                .flat_map(|p| p.members.iter().copied())
                .collect();
            for (j, piece) in d.pieces[s..].iter().enumerate() {
                if !piece.members.is_disjoint(&head) {
                    violations.push(format!(
                        "tail piece {} intersects the overlap-permitted part",
                        s + j
                    ));
                }
            }
            (s..d.pieces.len()).collect()
        }
    };
    for (a_pos, &a) in disjoint_required.iter().enumerate() {
        for &b in &disjoint_required[a_pos + 1..] {
            if !d.pieces[a].members.is_disjoint(&d.pieces[b].members) {
                violations.push(format!("pieces {} and {} are not disjoint", a, b));
            }
        }
    }
    violations
}

/// Enumeration and search budgets. Exhaustive solving is allowed up to
/// rank 4 by default; rank 5–6 sits behind an opt-in flag with a node
/// ceiling; E7/E8 are refused outright.
#[derive(Clone, Debug)]
pub struct SolverBudget {
    pub allow_rank_5_6: bool,
    pub node_ceiling: u64,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget { allow_rank_5_6: false, node_ceiling: 50_000_000 }
    }
}

impl SolverBudget {
    fn admit(&self, system: &RootSystem) -> Result<()> {
        let r = system.rank();
        if r > 6 {
            return Err(Error::BudgetExceeded(format!(
                "exhaustive decomposition search refused for rank {} (E7/E8 scale)",
                r
            )));
        }
        if r > 4 && !self.allow_rank_5_6 {
            return Err(Error::BudgetExceeded(format!(
                "rank {} search requires the rank-5/6 opt-in flag",
                r
            )));
        }
        Ok(())
    }
}

/// A proper span-closed subsystem with its rank.
#[derive(Clone, Debug)]
pub struct ClosedSubsystem {
    pub subsystem: RootSubsystem,
    pub rank: usize,
}

/// All distinct proper span-closed subsystems of rank at most
/// `max_rank`, by breadth-first closure extension from single roots.
pub fn enumerate_span_closed(
    system: &RootSystem,
    max_rank: usize,
    budget: &SolverBudget,
) -> Result<Vec<ClosedSubsystem>> {
    if max_rank + 1 > system.rank() {
        return Err(Error::Precondition(String::from(
            "proper span-closed subsystems have rank at most rank(Phi) - 1",
        )));
    }
    budget.admit(system)?;
    let positives = system.positive_roots();
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut frontier: Vec<BTreeSet<usize>> = Vec::new();
    let mut work: u64 = 0;
    for &p in positives {
        let closed = system.span_closure([p]);
        let pos_members: BTreeSet<usize> =
            closed.members.iter().copied().filter(|&i| system.is_positive(i)).collect();
        if seen.insert(pos_members.clone()) {
            frontier.push(pos_members);
        }
    }
    let mut out: Vec<BTreeSet<usize>> = frontier.clone();
    while let Some(current) = frontier.pop() {
        for &p in positives {
            if current.contains(&p) {
                continue;
            }
            work += 1;
            if work > budget.node_ceiling {
                return Err(Error::BudgetExceeded(String::from(
                    "span-closed subsystem enumeration exceeded the node ceiling",
                )));
            }
            let mut seed: Vec<usize> = current.iter().copied().collect();
            seed.push(p);
            if system.span_rank(seed.iter().copied()) > max_rank {
                continue;
            }
            let closed = system.span_closure(seed);
            let pos_members: BTreeSet<usize> =
                closed.members.iter().copied().filter(|&i| system.is_positive(i)).collect();
            if pos_members.len() == positives.len() {
                continue;
            }
            if seen.insert(pos_members.clone()) {
                out.push(pos_members.clone());
                frontier.push(pos_members);
            }
        }
    }
    let mut result: Vec<ClosedSubsystem> = out
        .into_iter()
        .map(|pos| {
            let rank = system.span_rank(pos.iter().copied());
            let members = system.negation_closure(pos);
            ClosedSubsystem { subsystem: RootSubsystem { members, span_closed: true }, rank }
        })
        .filter(|c| c.rank <= max_rank)
        .collect();
    result.sort_by(|a, b| {
        a.rank
            .cmp(&b.rank)
            .then(b.subsystem.len().cmp(&a.subsystem.len()))
            .then(a.subsystem.members.cmp(&b.subsystem.members))
    });
    Ok(result)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveMode {
    Type1,
    Type2Literal,
    Type2Geometric,
}

#[derive(Clone, Debug)]
pub struct SolverResult {
    pub value: usize,
    pub witness: Decomposition,
    pub explored: u64,
    pub mode: SolveMode,
    pub proven_optimal: bool,
}

struct SearchPiece {
    mask: u128,
    rank: usize,
}

struct SearchContext<'a> {
    system: &'a RootSystem,
    positives: Vec<usize>,
    pieces: Vec<SearchPiece>,
    by_position: Vec<Vec<usize>>,
    node_ceiling: u64,
    explored: u64,
    best_value: usize,
    best_witness: Option<Vec<usize>>, // piece indices
    /// Geometric conic constraint: no root may lie in more than two
    /// chosen pieces.
    max_coverage: Option<u32>,
    allow_overlap: bool,
}

impl<'a> SearchContext<'a> {
    fn new(
        system: &'a RootSystem,
        closed: &[ClosedSubsystem],
        budget: &SolverBudget,
        allow_overlap: bool,
        max_coverage: Option<u32>,
    ) -> Self {
        let positives: Vec<usize> = system.positive_roots().to_vec();
        assert!(positives.len() <= 128, "positive-root bitmask overflow");
        let pos_index: BTreeMap<usize, usize> =
            positives.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let pieces: Vec<SearchPiece> = closed
            .iter()
            .map(|c| {
                let mut mask = 0u128;
                for &m in &c.subsystem.members {
                    if let Some(&pos) = pos_index.get(&m) {
                        mask |= 1u128 << pos;
                    }
                }
                SearchPiece { mask, rank: c.rank }
            })
            .collect();
        let mut by_position = alloc::vec![Vec::new(); positives.len()];
        for (pi, piece) in pieces.iter().enumerate() {
            for pos in 0..positives.len() {
                if piece.mask & (1u128 << pos) != 0 {
                    by_position[pos].push(pi);
                }
            }
        }
        SearchContext {
            system,
            positives,
            pieces,
            by_position,
            node_ceiling: budget.node_ceiling,
            explored: 0,
            best_value: usize::MAX,
            best_witness: None,
            max_coverage,
            allow_overlap,
        }
    }

    fn full_mask(&self) -> u128 {
        if self.positives.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.positives.len()) - 1
        }
    }

    fn uncovered_span(&self, covered: u128) -> usize {
        let uncovered: Vec<usize> = (0..self.positives.len())
            .filter(|&pos| covered & (1u128 << pos) == 0)
            .map(|pos| self.positives[pos])
            .collect();
        self.system.span_rank(uncovered)
    }

    fn dfs(
        &mut self,
        covered: u128,
        coverage: &mut [u32],
        chosen: &mut Vec<usize>,
        cur: usize,
    ) -> Result<()> {
        self.explored += 1;
        if self.explored > self.node_ceiling {
            return Err(Error::BudgetExceeded(String::from(
                "branch-and-bound exceeded the node ceiling",
            )));
        }
        if covered == self.full_mask() {
            let mut canonical: Vec<usize> = chosen.clone();
            canonical.sort_unstable();
            let better = cur < self.best_value
                || (cur == self.best_value
                    && self.best_witness.as_ref().map_or(true, |w| canonical < *w));
            if better {
                self.best_value = cur;
                self.best_witness = Some(canonical);
            }
            return Ok(());
        }
        // Lower bound: future pieces must jointly span the uncovered
        // roots, so at least dim span(uncovered) more rank is needed.
        let lb = self.uncovered_span(covered);
        if cur + lb > self.best_value {
            return Ok(());
        }
        let branch_pos = (0..self.positives.len())
            .find(|&pos| covered & (1u128 << pos) == 0)
            .expect("not fully covered");
        let candidates: Vec<usize> = self.by_position[branch_pos].clone();
        for pi in candidates {
            let mask = self.pieces[pi].mask;
            if !self.allow_overlap && mask & covered != 0 {
                continue;
            }
            if let Some(maxc) = self.max_coverage {
                let mut ok = true;
                for pos in 0..self.positives.len() {
                    if mask & (1u128 << pos) != 0 && coverage[pos] + 1 > maxc {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
            }
            let rank = self.pieces[pi].rank;
            if cur + rank > self.best_value {
                continue;
            }
            for pos in 0..self.positives.len() {
                if mask & (1u128 << pos) != 0 {
                    coverage[pos] += 1;
                }
            }
            chosen.push(pi);
            self.dfs(covered | mask, coverage, chosen, cur + rank)?;
            chosen.pop();
            for pos in 0..self.positives.len() {
                if mask & (1u128 << pos) != 0 {
                    coverage[pos] -= 1;
                }
            }
        }
        Ok(())
    }
}

fn require_solvable(system: &RootSystem) -> Result<()> {
    if system.rank() < 2 {
        return Err(Error::Precondition(String::from(
            "decomposition solving needs rank >= 2",
        )));
    }
    Ok(())
}

fn witness_from_indices(
    system: &RootSystem,
    closed: &[ClosedSubsystem],
    indices: &[usize],
    type2: bool,
) -> Decomposition {
    let chosen: Vec<RootSubsystem> =
        indices.iter().map(|&i| closed[i].subsystem.clone()).collect();
    if !type2 {
        return Decomposition { pieces: chosen, kind: DecompKind::Type1 };
    }
    // Pieces disjoint from every other chosen piece form the tail part.
    let mut head: Vec<RootSubsystem> = Vec::new();
    let mut tail: Vec<RootSubsystem> = Vec::new();
    for (i, piece) in chosen.iter().enumerate() {
        let disjoint_from_rest = chosen
            .iter()
            .enumerate()
            .all(|(j, other)| i == j || piece.members.is_disjoint(&other.members));
        if disjoint_from_rest {
            tail.push(piece.clone());
        } else {
            head.push(piece.clone());
        }
    }
    let s = head.len();
    head.extend(tail);
    let _ = system;
    Decomposition { pieces: head, kind: DecompKind::Type2 { s } }
}

/// Exact minimum of the rank sum over type-1 decompositions, with the
/// witness and an exhaustion certificate. The result is checked against
/// the proven window `2n−1 ≤ f₁ ≤ ½|Φ|`.
pub fn f1_solve(system: &RootSystem, budget: &SolverBudget) -> Result<SolverResult> {
    require_solvable(system)?;
    let closed = enumerate_span_closed(system, system.rank() - 1, budget)?;
    if closed.is_empty() {
        return Err(Error::Precondition(String::from(
            "no proper span-closed subsystems exist",
        )));
    }
    let mut ctx = SearchContext::new(system, &closed, budget, false, None);
    let mut coverage = alloc::vec![0u32; ctx.positives.len()];
    let mut chosen = Vec::new();
    ctx.dfs(0, &mut coverage, &mut chosen, 0)?;
    let indices = ctx
        .best_witness
        .clone()
        .ok_or_else(|| Error::Precondition(String::from("no type-1 decomposition exists")))?;
    let witness = witness_from_indices(system, &closed, &indices, false);
    let value = ctx.best_value;
    let n = system.rank();
    if value + 1 < 2 * n || value > system.num_roots() / 2 {
        return Err(Error::BoundViolation(format!(
            "f1 = {} outside the proven window [{}, {}]",
            value,
            2 * n - 1,
            system.num_roots() / 2
        )));
    }
    Ok(SolverResult {
        value,
        witness,
        explored: ctx.explored,
        mode: SolveMode::Type1,
        proven_optimal: true,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum F2Mode {
    /// The definitional constraints only.
    Literal,
    /// Adds the conic-geometry constraint that no root lies in more
    /// than two overlap-permitted pieces.
    Geometric,
}

/// Exact minimum of the rank sum over type-2 decompositions. The lower
/// bound `2n−1` is checked on the result.
pub fn f2_solve(system: &RootSystem, mode: F2Mode, budget: &SolverBudget) -> Result<SolverResult> {
    require_solvable(system)?;
    let closed = enumerate_span_closed(system, system.rank() - 1, budget)?;
    if closed.is_empty() {
        return Err(Error::Precondition(String::from(
            "no proper span-closed subsystems exist",
        )));
    }
    let max_coverage = match mode {
        F2Mode::Literal => None,
        F2Mode::Geometric => Some(2),
    };
    let mut ctx = SearchContext::new(system, &closed, budget, true, max_coverage);
    let mut coverage = alloc::vec![0u32; ctx.positives.len()];
    let mut chosen = Vec::new();
    ctx.dfs(0, &mut coverage, &mut chosen, 0)?;
    let indices = ctx
        .best_witness
        .clone()
        .ok_or_else(|| Error::Precondition(String::from("no type-2 decomposition exists")))?;
    let witness = witness_from_indices(system, &closed, &indices, true);
    let value = ctx.best_value;
    let n = system.rank();
    if value + 1 < 2 * n {
        return Err(Error::BoundViolation(format!(
            "f2 = {} undercuts the proven lower bound {}",
            value,
            2 * n - 1
        )));
    }
    Ok(SolverResult {
        value,
        witness,
        explored: ctx.explored,
        mode: match mode {
            F2Mode::Literal => SolveMode::Type2Literal,
            F2Mode::Geometric => SolveMode::Type2Geometric,
        },
        proven_optimal: true,
    })
}

/// Rank of the span of the extra roots of the fixed A-chain embedding;
/// feeds the solvers' inductive sanity report.
pub fn extra_root_span_check(system: &RootSystem) -> Result<usize> {
    Ok(system.an_embedding_and_extra_roots()?.extra_span_rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;
    use crate::roots::{build_root_system, Family};

    fn hv(coords: &[i64]) -> HVector {
        coords.iter().map(|&c| Gauss::from_rat(rat_int(c))).collect()
    }

    #[test]
    fn induced_decomposition_a2() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let plane = PlaneL::new([hv(&[1, 0]), hv(&[0, 1])]);
        let d = induced_decomposition(&a2, &plane).unwrap();
        assert_eq!(d.classes.len(), 3);
        assert_eq!(d.rank_sum, 3);
        assert!(d.class_count_bounds_ok && d.rank_sum_bounds_ok);
        assert!(validate_decomposition(&a2, &d.to_decomposition()).is_empty());
    }

    #[test]
    fn inadmissible_plane_names_root() {
        let a3 = build_root_system(Family::A, 3).unwrap();
        // both basis vectors kill α₂
        let plane = PlaneL::new([hv(&[1, 0, 0]), hv(&[0, 0, 1])]);
        let err = induced_decomposition(&a3, &plane).unwrap_err();
        let alpha2 = a3.index_of_root(&[0, 1, 0]).unwrap();
        assert_eq!(err, Error::InadmissiblePlane { root_index: alpha2 });
    }

    #[test]
    fn enumerate_small_systems() {
        let budget = SolverBudget::default();
        let a2 = build_root_system(Family::A, 2).unwrap();
        let subs = enumerate_span_closed(&a2, 1, &budget).unwrap();
        assert_eq!(subs.len(), 3);
        assert!(subs.iter().all(|c| c.rank == 1));

        let a3 = build_root_system(Family::A, 3).unwrap();
        let subs = enumerate_span_closed(&a3, 2, &budget).unwrap();
        let rank2: Vec<_> = subs.iter().filter(|c| c.rank == 2).collect();
        // 4 of shape A2 (6 roots) and 3 of shape A1 x A1 (4 roots)
        assert_eq!(rank2.iter().filter(|c| c.subsystem.len() == 6).count(), 4);
        assert_eq!(rank2.iter().filter(|c| c.subsystem.len() == 4).count(), 3);
        assert_eq!(subs.iter().filter(|c| c.rank == 1).count(), 6);

        let a1 = build_root_system(Family::A, 1).unwrap();
        assert!(enumerate_span_closed(&a1, 0, &budget).unwrap().is_empty());
    }

    #[test]
    fn f1_small_values() {
        let budget = SolverBudget::default();
        let a2 = build_root_system(Family::A, 2).unwrap();
        let res = f1_solve(&a2, &budget).unwrap();
        assert_eq!(res.value, 3);
        assert!(res.proven_optimal);
        assert!(validate_decomposition(&a2, &res.witness).is_empty());

        let a3 = build_root_system(Family::A, 3).unwrap();
        let res = f1_solve(&a3, &budget).unwrap();
        assert_eq!(res.value, 5); // 2n-1 attained: A2 + three root pairs
        assert!(validate_decomposition(&a3, &res.witness).is_empty());
        assert_eq!(res.witness.rank_sum(&a3), res.value);
    }

    #[test]
    fn f1_rejects_rank1() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        assert!(matches!(
            f1_solve(&a1, &SolverBudget::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn f2_a3_geometric() {
        let budget = SolverBudget::default();
        let a3 = build_root_system(Family::A, 3).unwrap();
        let res = f2_solve(&a3, F2Mode::Geometric, &budget).unwrap();
        assert_eq!(res.value, 5);
        assert!(validate_decomposition(&a3, &res.witness).is_empty());
        let lit = f2_solve(&a3, F2Mode::Literal, &budget).unwrap();
        assert_eq!(lit.value, 5);

        let a2 = build_root_system(Family::A, 2).unwrap();
        let res2 = f2_solve(&a2, F2Mode::Geometric, &budget).unwrap();
        assert!(res2.value >= 3);
        let lit2 = f2_solve(&a2, F2Mode::Literal, &budget).unwrap();
        assert_eq!(res2.value, lit2.value);
    }

    #[test]
    fn budget_refuses_exceptional_scale() {
        let e7 = build_root_system(Family::E, 7).unwrap();
        assert!(matches!(
            f1_solve(&e7, &SolverBudget::default()),
            Err(Error::BudgetExceeded(_))
        ));
        let e6 = build_root_system(Family::E, 6).unwrap();
        assert!(matches!(
            f1_solve(&e6, &SolverBudget::default()),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn validate_flags_broken_decompositions() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let alpha1 = a2.span_closure([a2.index_of_root(&[1, 0]).unwrap()]);
        let alpha2 = a2.span_closure([a2.index_of_root(&[0, 1]).unwrap()]);
        let missing = Decomposition {
            pieces: alloc::vec![alpha1.clone(), alpha2.clone()],
            kind: DecompKind::Type1,
        };
        let v = validate_decomposition(&a2, &missing);
        assert!(v.iter().any(|m| m.contains("union")));

        let a3 = build_root_system(Family::A, 3).unwrap();
        let p1 = a3.span_closure([
            a3.index_of_root(&[1, 0, 0]).unwrap(),
            a3.index_of_root(&[0, 1, 0]).unwrap(),
        ]);
        let p2 = a3.span_closure([
            a3.index_of_root(&[0, 0, 1]).unwrap(),
            a3.index_of_root(&[1, 1, 0]).unwrap(),
        ]);
        let overlapping = Decomposition {
            pieces: alloc::vec![p1, p2, a3.span_closure([a3.index_of_root(&[0, 1, 1]).unwrap()])],
            kind: DecompKind::Type1,
        };
        let v = validate_decomposition(&a3, &overlapping);
        assert!(v.iter().any(|m| m.contains("not disjoint")));
    }

    #[test]
    fn extra_root_span_matches_rank() {
        for (f, n) in [(Family::A, 4), (Family::D, 5), (Family::E, 6)] {
            let s = build_root_system(f, n).unwrap();
            assert_eq!(extra_root_span_check(&s).unwrap(), n);
        }
    }
}
