//! ADE root systems with integer root coordinates, built by closing the
//! simple roots under simple reflections.
//!
//! Roots are stored as coefficient vectors with respect to the simple
//! roots; Cartan matrices follow the Bourbaki numbering. Vectors of the
//! (complexified) Cartan algebra are stored in the dual coordinates
//! `λ ↦ (α₁(λ), …, α_n(λ))`, so evaluating a root on a vector is an
//! exact dot product.

use crate::exact::Gauss;
use crate::{Error, Result};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// Simply-laced family label.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            _ => None,
        }
    }
}

/// A vector of 𝔥^ℂ in simple-root-evaluation coordinates.
pub type HVector = Vec<Gauss>;

/// An ADE root system. Immutable after construction; root indices are
/// stable (lexicographic on coefficient vectors).
#[derive(Clone, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    roots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<usize>,
    simple_indices: Vec<usize>,
    neg_of: Vec<usize>,
}

/// A subset of root indices closed under negation, with a span-closure
/// certificate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RootSubsystem {
    pub members: BTreeSet<usize>,
    pub span_closed: bool,
}

impl RootSubsystem {
    pub fn empty() -> Self {
        RootSubsystem { members: BTreeSet::new(), span_closed: true }
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

/// The fixed A-chain embedding of a rank-(n-1) subsystem, together with
/// the complementary root set and the rank of its span.
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    /// 1-based Bourbaki labels of the simple roots generating the chain.
    pub chain_labels: Vec<usize>,
    pub an_subsystem: RootSubsystem,
    pub extra_roots: BTreeSet<usize>,
    pub extra_span_rank: usize,
}

fn cartan_matrix(family: Family, n: usize) -> Result<Vec<Vec<i64>>> {
    let legal = match family {
        Family::A => n >= 1,
        Family::D => n >= 3,
        Family::E => matches!(n, 6 | 7 | 8),
    };
    if !legal {
        return Err(Error::IllegalRootSystem { family: family.letter(), rank: n });
    }
    // Edges of the Dynkin diagram, 1-based Bourbaki labels.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match family {
        Family::A => {
            for i in 1..n {
                edges.push((i, i + 1));
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                edges.push((i, i + 1));
            }
            edges.push((n - 2, n));
        }
        Family::E => {
            edges.push((1, 3));
            edges.push((2, 4));
            for i in 3..n {
                edges.push((i, i + 1));
            }
        }
    }
    let mut cartan = vec![vec![0i64; n]; n];
    for i in 0..n {
        cartan[i][i] = 2;
    }
    for (i, j) in edges {
        cartan[i - 1][j - 1] = -1;
        cartan[j - 1][i - 1] = -1;
    }
    Ok(cartan)
}

/// Constructs the full root set from the simple roots by closing under
/// simple reflections.
pub fn build_root_system(family: Family, n: usize) -> Result<RootSystem> {
    let cartan = cartan_matrix(family, n)?;
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    while let Some(theta) = queue.pop() {
        for i in 0..n {
            // ⟨θ, α_i⟩ = Σ_j θ_j · cartan[j][i]
            let pairing: i64 = (0..n).map(|j| theta[j] * cartan[j][i]).sum();
            let mut refl = theta.clone();
            refl[i] -= pairing;
            if seen.insert(refl.clone()) {
                queue.push(refl);
            }
        }
    }
    let roots: Vec<Vec<i64>> = seen.into_iter().collect();
    let mut positive = Vec::new();
    for (idx, r) in roots.iter().enumerate() {
        let nonneg = r.iter().all(|&c| c >= 0);
        let nonpos = r.iter().all(|&c| c <= 0);
        if !(nonneg || nonpos) {
            return Err(Error::BoundViolation(String::from("sign coherence failed")));
        }
        if nonneg {
            positive.push(idx);
        }
    }
    let index_of: BTreeMap<&Vec<i64>, usize> =
        roots.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let neg_of = roots
        .iter()
        .map(|r| {
            let neg: Vec<i64> = r.iter().map(|&c| -c).collect();
            *index_of.get(&neg).expect("closed under negation")
        })
        .collect();
    let simple_indices = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            *index_of.get(&e).expect("simple root present")
        })
        .collect();
    Ok(RootSystem { family, rank: n, roots, cartan, positive, simple_indices, neg_of })
}

impl RootSystem {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, idx: usize) -> &[i64] {
        &self.roots[idx]
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[usize] {
        &self.positive
    }

    /// Index of the i-th simple root (0-based position in the Bourbaki
    /// ordering).
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.simple_indices[i]
    }

    pub fn negate(&self, idx: usize) -> usize {
        self.neg_of[idx]
    }

    pub fn index_of_root(&self, coeffs: &[i64]) -> Option<usize> {
        self.roots.binary_search_by(|r| r.as_slice().cmp(coeffs)).ok()
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        self.roots[idx].iter().all(|&c| c >= 0)
    }

    /// Evaluates the root with the given index on a Cartan vector.
    pub fn root_eval(&self, idx: usize, lambda: &[Gauss]) -> Gauss {
        debug_assert_eq!(lambda.len(), self.rank);
        let mut acc = Gauss::zero();
        for (c, l) in self.roots[idx].iter().zip(lambda) {
            if *c != 0 {
                acc += &l.scale(&crate::exact::rat_int(*c));
            }
        }
        acc
    }

    /// The subsystem of all roots vanishing on `lambda`. Always
    /// span-closed: the kernel of a set of linear forms is a subspace.
    pub fn phi_lambda(&self, lambda: &[Gauss]) -> RootSubsystem {
        let members = (0..self.roots.len())
            .filter(|&i| self.root_eval(i, lambda).is_zero())
            .collect();
        RootSubsystem { members, span_closed: true }
    }

    /// Rank of the span of the given root indices.
    pub fn span_rank(&self, indices: impl IntoIterator<Item = usize>) -> usize {
        let rows: Vec<&[i64]> = indices.into_iter().map(|i| self.roots[i].as_slice()).collect();
        int_rank(&rows)
    }

    pub fn subsystem_rank(&self, s: &RootSubsystem) -> usize {
        self.span_rank(s.members.iter().copied())
    }

    /// `Φ ∩ span_ℝ(S)`, computed by rank tests, closed under negation.
    pub fn span_closure(&self, seed: impl IntoIterator<Item = usize>) -> RootSubsystem {
        let seed_rows: Vec<&[i64]> =
            seed.into_iter().map(|i| self.roots[i].as_slice()).collect();
        let base_rank = int_rank(&seed_rows);
        let mut members = BTreeSet::new();
        for idx in 0..self.roots.len() {
            let mut rows = seed_rows.clone();
            rows.push(self.roots[idx].as_slice());
            if int_rank(&rows) == base_rank {
                members.insert(idx);
            }
        }
        RootSubsystem { members, span_closed: true }
    }

    /// The A-chain subsystem of corank 1 and the complementary "extra"
    /// root set, with the rank of the extra roots' span.
    pub fn an_embedding_and_extra_roots(&self) -> Result<EmbeddingReport> {
        if self.rank < 2 {
            return Err(Error::Precondition(String::from(
                "A-chain embedding needs rank >= 2",
            )));
        }
        let chain_labels: Vec<usize> = match self.family {
            // α₁ … α_{n−1} in both A_n and D_n; in E_n drop the branch
            // node α₂.
            Family::A | Family::D => (1..self.rank).collect(),
            Family::E => core::iter::once(1).chain(3..=self.rank).collect(),
        };
        let chain_indices: Vec<usize> =
            chain_labels.iter().map(|&l| self.simple_indices[l - 1]).collect();
        let an_subsystem = self.span_closure(chain_indices);
        let extra_roots: BTreeSet<usize> = (0..self.roots.len())
            .filter(|i| !an_subsystem.members.contains(i))
            .collect();
        let extra_span_rank = self.span_rank(extra_roots.iter().copied());
        Ok(EmbeddingReport { chain_labels, an_subsystem, extra_roots, extra_span_rank })
    }

    /// Closes an index set under negation.
    pub fn negation_closure(&self, indices: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut set = BTreeSet::new();
        for i in indices {
            set.insert(i);
            set.insert(self.neg_of[i]);
        }
        set
    }
}

/// Rank of a small integer matrix by fraction-free (Bareiss)
/// elimination in i128.
fn int_rank(rows: &[&[i64]]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&c| c as i128).collect()).collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
