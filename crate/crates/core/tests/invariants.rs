//! Randomized invariant checks tying the exact-arithmetic layer, the
//! root-system layer, and the counting engine together.

use ale_curves::count::{period_eval, period_quadratic, rotation_tilde, RotationU, ZetaTriple};
use ale_curves::exact::{
    distinct_root_count, form_gcd, rank_of_matrix, rat_frac, rat_int, squarefree_root_count,
    BinaryQuadratic, Gauss, Rat,
};
use ale_curves::roots::{build_root_system, Family, RootSystem};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=8).prop_map(|(n, d)| rat_frac(n, d))
}

fn gauss_strategy() -> impl Strategy<Value = Gauss> {
    (rat_strategy(), rat_strategy()).prop_map(|(re, im)| Gauss::new(re, im))
}

fn small_gauss_strategy() -> impl Strategy<Value = Gauss> {
    prop::sample::select(vec![
        Gauss::zero(),
        Gauss::one(),
        -Gauss::one(),
        Gauss::i(),
        -Gauss::i(),
    ])
}

fn quadratic_strategy() -> impl Strategy<Value = BinaryQuadratic> {
    (gauss_strategy(), gauss_strategy(), gauss_strategy())
        .prop_map(|(a, b, c)| BinaryQuadratic::new(a, b, c))
        .prop_filter("nonzero form", |q| !q.is_zero())
}

/// Determinant by Laplace expansion; the independent oracle for rank.
fn det_oracle(m: &[Vec<Gauss>]) -> Gauss {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Gauss::zero();
    for (j, pivot) in m[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Gauss>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * &det_oracle(&minor);
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

fn rank_oracle(m: &[Vec<Gauss>]) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    for k in (1..=rows.min(cols)).rev() {
        // all k-subsets of rows and columns
        let row_sets = subsets(rows, k);
        let col_sets = subsets(cols, k);
        for rs in &row_sets {
            for cs in &col_sets {
                let sub: Vec<Vec<Gauss>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                if !det_oracle(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn zeta_strategy(system: &RootSystem) -> impl Strategy<Value = ZetaTriple> {
    let n = system.rank();
    let sys = system.clone();
    prop::collection::vec(rat_strategy(), 3 * n).prop_filter_map("admissible", move |flat| {
        let rows: [Vec<Rat>; 3] = [
            flat[0..n].to_vec(),
            flat[n..2 * n].to_vec(),
            flat[2 * n..3 * n].to_vec(),
        ];
        ZetaTriple::new(&sys, rows).ok().filter(|z| z.check_admissible(&sys).is_ok())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gauss_arithmetic_is_total_and_invertible(a in gauss_strategy(), b in gauss_strategy()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }

    #[test]
    fn form_gcd_divides_both(p in quadratic_strategy(), q in quadratic_strategy()) {
        let g = form_gcd(&p, &q).unwrap();
        if g.degree() > 0 {
            prop_assert!(p.to_form().unwrap().div_exact(&g).is_some());
            prop_assert!(q.to_form().unwrap().div_exact(&g).is_some());
        }
    }

    #[test]
    fn distinct_roots_match_squarefree_oracle(q in quadratic_strategy()) {
        let (count, _) = distinct_root_count(&q).unwrap();
        prop_assert_eq!(count, squarefree_root_count(std::slice::from_ref(&q)).unwrap());
    }

    #[test]
    fn rank_matches_minor_expansion(
        rows in 1usize..=4,
        cols in 1usize..=4,
        flat in prop::collection::vec(small_gauss_strategy(), 16),
    ) {
        let m: Vec<Vec<Gauss>> = (0..rows)
            .map(|r| (0..cols).map(|c| flat[r * 4 + c].clone()).collect())
            .collect();
        prop_assert_eq!(rank_of_matrix(&m), rank_oracle(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn span_closure_is_idempotent_and_monotone(
        seed in prop::collection::btree_set(0usize..24, 1..4),
        extra in 0usize..24,
    ) {
        let d4 = build_root_system(Family::D, 4).unwrap();
        let closed = d4.span_closure(seed.iter().copied());
        let reclosed = d4.span_closure(closed.members.iter().copied());
        prop_assert_eq!(&reclosed.members, &closed.members);
        let mut bigger = seed.clone();
        bigger.insert(extra);
        let superset = d4.span_closure(bigger);
        prop_assert!(closed.members.is_subset(&superset.members));
    }

    #[test]
    fn vanishing_locus_of_a_vector_is_span_closed(
        flat in prop::collection::vec(gauss_strategy(), 4),
    ) {
        let d4 = build_root_system(Family::D, 4).unwrap();
        let sub = d4.phi_lambda(&flat);
        let closed = d4.span_closure(sub.members.iter().copied());
        prop_assert_eq!(closed.members, sub.members);
    }
}

#[test]
fn period_pairing_matches_per_root_quadratic() {
    let a3 = build_root_system(Family::A, 3).unwrap();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strat = (
        zeta_strategy(&a3),
        gauss_strategy(),
        gauss_strategy(),
        0usize..a3.num_roots(),
    );
    for _ in 0..200 {
        let (zeta, z1, z2, root) = strat.new_tree(&mut runner).unwrap().current();
        let period = period_eval(&zeta, &z1, &z2).unwrap();
        let q = period_quadratic(&a3, &zeta, root);
        assert_eq!(a3.root_eval(root, &period), q.eval(&z1, &z2));
        // negating the root negates the quadratic
        let neg = period_quadratic(&a3, &zeta, a3.negate(root));
        assert_eq!(neg, q.neg());
    }
}

#[test]
fn rotation_identity_holds_on_random_inputs() {
    let a2 = build_root_system(Family::A, 2).unwrap();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strat = (zeta_strategy(&a2), rat_strategy(), rat_strategy());
    for trial in 0..200 {
        let (zeta, u1, u2) = strat.new_tree(&mut runner).unwrap().current();
        let u = if trial % 10 == 9 {
            RotationU::Infinity
        } else {
            RotationU::Finite { u1, u2 }
        };
        let (t2, t3) = rotation_tilde(&zeta, &u);
        match &u {
            RotationU::Infinity => {
                let neg2: Vec<Rat> = zeta.rows()[1].iter().map(|r| -r.clone()).collect();
                assert_eq!(t2, neg2);
                assert_eq!(t3, zeta.rows()[2]);
            }
            RotationU::Finite { u1, u2 } => {
                // z̃² + i z̃³ = (ζ² + iζ³) + 2u ζ¹ − u² (ζ² − iζ³)
                let u = Gauss::new(u1.clone(), u2.clone());
                let two = Gauss::from_int(2);
                for j in 0..a2.rank() {
                    let z1 = Gauss::from_rat(zeta.rows()[0][j].clone());
                    let z2 = Gauss::from_rat(zeta.rows()[1][j].clone());
                    let z3 = Gauss::from_rat(zeta.rows()[2][j].clone());
                    let plus = &z2 + &(&Gauss::i() * &z3);
                    let minus = &z2 - &(&Gauss::i() * &z3);
                    let rhs = &(&plus + &(&(&two * &u) * &z1)) - &(&(&u * &u) * &minus);
                    let lhs = &Gauss::from_rat(t2[j].clone())
                        + &(&Gauss::i() * &Gauss::from_rat(t3[j].clone()));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn counted_points_match_squarefree_oracle_on_random_parameters() {
    use ale_curves::count::count_curves;
    let a2 = build_root_system(Family::A, 2).unwrap();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strat = zeta_strategy(&a2);
    for _ in 0..60 {
        let zeta = strat.new_tree(&mut runner).unwrap().current();
        let report = count_curves(&a2, &zeta).unwrap();
        let forms: Vec<BinaryQuadratic> = a2
            .positive_roots()
            .iter()
            .map(|&r| period_quadratic(&a2, &zeta, r))
            .collect();
        assert_eq!(report.q1, squarefree_root_count(&forms).unwrap());
        assert_eq!(report.q1, report.points.len());
        let q2: usize = report.points.iter().map(|p| p.subsystem_rank).sum();
        assert_eq!(report.q2, q2);
        assert!(report.bounds_ok());
    }
}

#[test]
fn rank_one_parameters_always_give_two_transversal_points() {
    let a3 = build_root_system(Family::A, 3).unwrap();
    for (x, y, z) in [(1i64, 0, 0), (0, 1, 0), (0, 0, 1), (3, -2, 5), (1, 1, 1)] {
        let dir: Vec<Rat> = vec![rat_int(1), rat_frac(-2, 3), rat_int(2)];
        let rows = [
            dir.iter().map(|d| d * rat_int(x)).collect::<Vec<_>>(),
            dir.iter().map(|d| d * rat_int(y)).collect::<Vec<_>>(),
            dir.iter().map(|d| d * rat_int(z)).collect::<Vec<_>>(),
        ];
        let zeta = match ZetaTriple::new(&a3, rows) {
            Ok(z) => z,
            Err(_) => continue,
        };
        if zeta.check_admissible(&a3).is_err() {
            continue;
        }
        let report = ale_curves::count::count_curves(&a3, &zeta).unwrap();
        assert_eq!(report.rank_zeta, 1);
        assert_eq!(report.q1, 2);
        assert_eq!(report.q2, 2 * a3.rank());
    }
}
