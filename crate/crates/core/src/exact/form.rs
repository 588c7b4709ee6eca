use super::{Gauss, Poly};
use crate::{Error, Result};
use alloc::vec;

/// A point of ℙ¹(ℚ(i)) in normal form: `z1 = 1` when `z1 ≠ 0`,
/// otherwise `z2 = 1`. Equality is component-wise.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ProjectivePoint1 {
    z1: Gauss,
    z2: Gauss,
}

impl ProjectivePoint1 {
    pub fn new(z1: Gauss, z2: Gauss) -> Result<Self> {
        if z1.is_zero() && z2.is_zero() {
            return Err(Error::ZeroLift);
        }
        if z1.is_zero() {
            let inv = z2.inv();
            Ok(ProjectivePoint1 { z1: Gauss::zero(), z2: &z2 * &inv })
        } else {
            let inv = z1.inv();
            Ok(ProjectivePoint1 { z1: Gauss::one(), z2: &z2 * &inv })
        }
    }

    /// The point `[1:0]`, i.e. `t = ∞` in the chart `t = z1/z2`.
    pub fn infinity() -> Self {
        ProjectivePoint1 { z1: Gauss::one(), z2: Gauss::zero() }
    }

    pub fn z1(&self) -> &Gauss {
        &self.z1
    }

    pub fn z2(&self) -> &Gauss {
        &self.z2
    }

    pub fn is_infinity(&self) -> bool {
        self.z2.is_zero()
    }
}

/// The binary quadratic `a·z1² + b·z1z2 + c·z2²` over ℚ(i). The zero
/// form is representable but rejected by the root routines.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BinaryQuadratic {
    pub a: Gauss,
    pub b: Gauss,
    pub c: Gauss,
}

impl BinaryQuadratic {
    pub fn new(a: Gauss, b: Gauss, c: Gauss) -> Self {
        BinaryQuadratic { a, b, c }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn eval(&self, z1: &Gauss, z2: &Gauss) -> Gauss {
        let t1 = &(&self.a * z1) * z1;
        let t2 = &(&self.b * z1) * z2;
        let t3 = &(&self.c * z2) * z2;
        &(&t1 + &t2) + &t3
    }

    pub fn vanishes_at(&self, p: &ProjectivePoint1) -> bool {
        self.eval(p.z1(), p.z2()).is_zero()
    }

    pub fn discriminant(&self) -> Gauss {
        let four_ac = (&self.a * &self.c).scale(&super::rat_int(4));
        &(&self.b * &self.b) - &four_ac
    }

    pub fn neg(&self) -> Self {
        BinaryQuadratic { a: -&self.a, b: -&self.b, c: -&self.c }
    }

    /// Scales so the first nonzero coefficient (in a, b, c order) is 1.
    /// Two nonzero quadratics are proportional iff their normalizations
    /// are equal.
    pub fn normalized(&self) -> Self {
        let lead = [&self.a, &self.b, &self.c].into_iter().find(|g| !g.is_zero());
        match lead {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv();
                BinaryQuadratic { a: &self.a * &inv, b: &self.b * &inv, c: &self.c * &inv }
            }
        }
    }

    pub fn to_form(&self) -> Result<BinaryForm> {
        if self.is_zero() {
            return Err(Error::DegenerateForm);
        }
        // z2-multiplicity is the number of leading zero coefficients.
        let finite = Poly::from_coeffs(vec![self.c.clone(), self.b.clone(), self.a.clone()]);
        let inf_mult = 2 - finite.degree().expect("nonzero");
        Ok(BinaryForm { finite, inf_mult })
    }
}

/// A nonzero homogeneous binary form, stored as `z2^m · hom(p)` where
/// `p` is the dehomogenization in `t = z1/z2` and `m` the multiplicity
/// of the root `[1:0]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    finite: Poly,
    inf_mult: usize,
}

impl BinaryForm {
    pub fn degree(&self) -> usize {
        self.finite.degree().expect("nonzero form") + self.inf_mult
    }

    pub fn finite_part(&self) -> &Poly {
        &self.finite
    }

    pub fn infinity_multiplicity(&self) -> usize {
        self.inf_mult
    }

    /// The linear form `p2·z1 − p1·z2` vanishing exactly at `[p1:p2]`,
    /// monic.
    pub fn linear_at(p: &ProjectivePoint1) -> Self {
        if p.is_infinity() {
            BinaryForm { finite: Poly::constant(Gauss::one()), inf_mult: 1 }
        } else {
            // After normalization monic means leading coefficient of
            // the t-polynomial equals 1.
            let t0 = -&(p.z1() * &p.z2().inv());
            // p.z1 may be zero (the point [0:1]): then the line is z1.
            let finite = if p.z1().is_zero() {
                Poly::from_coeffs(vec![Gauss::zero(), Gauss::one()])
            } else {
                Poly::from_coeffs(vec![t0, Gauss::one()])
            };
            BinaryForm { finite, inf_mult: 0 }
        }
    }

    /// The unique root of a degree-1 form.
    pub fn linear_root(&self) -> Result<ProjectivePoint1> {
        if self.degree() != 1 {
            return Err(Error::Precondition("linear_root needs a degree-1 form".into()));
        }
        if self.inf_mult == 1 {
            return Ok(ProjectivePoint1::infinity());
        }
        let cs = self.finite.coeffs();
        // c1·t + c0 vanishes at t = -c0/c1, i.e. [-c0 : c1].
        ProjectivePoint1::new(-&cs[0], cs[1].clone())
    }

    pub fn monic(&self) -> Self {
        BinaryForm { finite: self.finite.monic(), inf_mult: self.inf_mult }
    }

    pub fn mul(&self, other: &Self) -> Self {
        BinaryForm {
            finite: self.finite.mul(&other.finite),
            inf_mult: self.inf_mult + other.inf_mult,
        }
    }

    /// Exact division of homogeneous forms; `None` when the divisor
    /// does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.inf_mult < divisor.inf_mult {
            return None;
        }
        let finite = self.finite.div_exact(&divisor.finite)?;
        Some(BinaryForm { finite, inf_mult: self.inf_mult - divisor.inf_mult })
    }

    /// Multiplicity of the linear factor at `p`.
    pub fn multiplicity_at(&self, p: &ProjectivePoint1) -> usize {
        let line = BinaryForm::linear_at(p);
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.div_exact(&line) {
            m += 1;
            if next.degree() == 0 {
                break;
            }
            cur = next;
        }
        m
    }

    pub fn eval(&self, z1: &Gauss, z2: &Gauss) -> Gauss {
        let dp = self.finite.degree().expect("nonzero form");
        let mut acc = Gauss::zero();
        for (k, c) in self.finite.coeffs().iter().enumerate() {
            // c · z1^k · z2^(dp-k)
            let mut term = c.clone();
            for _ in 0..k {
                term *= z1;
            }
            for _ in 0..(dp - k) {
                term *= z2;
            }
            acc += &term;
        }
        for _ in 0..self.inf_mult {
            acc *= z2;
        }
        acc
    }
}

/// Monic gcd of two nonzero binary quadratics as homogeneous forms.
/// Degree 1 exposes the unique shared projective root; degree 2 means
/// the forms are proportional.
pub fn form_gcd(p: &BinaryQuadratic, q: &BinaryQuadratic) -> Result<BinaryForm> {
    let fp = p.to_form()?;
    let fq = q.to_form()?;
    let finite = fp.finite.gcd(&fq.finite);
    let inf_mult = fp.inf_mult.min(fq.inf_mult);
    Ok(BinaryForm { finite, inf_mult })
}

/// Number of distinct projective roots of a nonzero quadratic: 1 iff
/// the discriminant vanishes (then the exact double root is returned),
/// 2 otherwise.
pub fn distinct_root_count(q: &BinaryQuadratic) -> Result<(usize, Option<ProjectivePoint1>)> {
    if q.is_zero() {
        return Err(Error::DegenerateForm);
    }
    if !q.discriminant().is_zero() {
        return Ok((2, None));
    }
    let double = if q.a.is_zero() {
        // disc = 0 with a = 0 forces b = 0: the form is c·z2².
        ProjectivePoint1::infinity()
    } else {
        let two_a = q.a.scale(&super::rat_int(2));
        ProjectivePoint1::new(-&q.b, two_a)?
    };
    Ok((1, Some(double)))
}

/// Number of distinct projective roots of the product of the given
/// nonzero forms: the degree of the squarefree part of the
/// dehomogenized product, plus one if any factor vanishes at `[1:0]`.
pub fn squarefree_root_count(forms: &[BinaryQuadratic]) -> Result<usize> {
    // The radical of the product is built incrementally: each factor
    // contributes its squarefree part with already-present roots divided
    // out. Every gcd here has a degree-≤2 argument, which keeps rational
    // coefficient growth tame (a gcd of the full product against its
    // derivative blows up quickly).
    let mut radical = Poly::constant(Gauss::one());
    let mut any_inf = false;
    for f in forms {
        let bf = f.to_form()?;
        any_inf |= bf.infinity_multiplicity() > 0;
        if bf.finite_part().degree() == Some(0) {
            continue;
        }
        let sf = bf.finite_part().squarefree_part();
        let shared = radical.gcd(&sf);
        let fresh = sf.div_exact(&shared).expect("gcd divides");
        radical = radical.mul(&fresh);
    }
    Ok(radical.degree().unwrap_or(0) + usize::from(any_inf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64) -> Gauss {
        Gauss::from_int(re)
    }

    fn gi(re: i64, im: i64) -> Gauss {
        Gauss::new(crate::exact::rat_int(re), crate::exact::rat_int(im))
    }

    fn quad(a: i64, b: i64, c: i64) -> BinaryQuadratic {
        BinaryQuadratic::new(g(a), g(b), g(c))
    }

    #[test]
    fn gcd_common_linear_factor() {
        // z1·z2 and z1² share the line z1 = 0.
        let p = quad(0, 1, 0);
        let q = quad(1, 0, 0);
        let d = form_gcd(&p, &q).unwrap();
        assert_eq!(d.degree(), 1);
        let root = d.linear_root().unwrap();
        assert_eq!(root, ProjectivePoint1::new(Gauss::zero(), Gauss::one()).unwrap());
    }

    #[test]
    fn gcd_disjoint_roots_is_constant() {
        // z1² − z2² has roots ±1, z1·z2 has roots {0, ∞}.
        let p = quad(1, 0, -1);
        let q = quad(0, 1, 0);
        assert_eq!(form_gcd(&p, &q).unwrap().degree(), 0);
    }

    #[test]
    fn gcd_proportional_forms_has_degree_two() {
        let p = quad(1, 2, -1);
        let q = quad(3, 6, -3);
        assert_eq!(form_gcd(&p, &q).unwrap().degree(), 2);
    }

    #[test]
    fn gcd_rejects_zero_form() {
        assert_eq!(form_gcd(&quad(0, 0, 0), &quad(1, 0, 0)), Err(Error::DegenerateForm));
    }

    #[test]
    fn root_count_simple_cases() {
        assert_eq!(distinct_root_count(&quad(0, 2, 0)).unwrap().0, 2);
        let (n, dbl) = distinct_root_count(&quad(1, -2, 1)).unwrap();
        assert_eq!(n, 1);
        assert_eq!(dbl.unwrap(), ProjectivePoint1::new(g(1), g(1)).unwrap());
    }

    #[test]
    fn root_count_gaussian_discriminant() {
        // (1+i)z1² + 2z1z2 + (−1+i)z2²: discriminant 4 − 4(1+i)(−1+i) = 12.
        let q = BinaryQuadratic::new(gi(1, 1), g(2), gi(-1, 1));
        assert_eq!(q.discriminant(), g(12));
        assert_eq!(distinct_root_count(&q).unwrap().0, 2);
    }

    #[test]
    fn root_count_degenerate_double_at_infinity() {
        let (n, dbl) = distinct_root_count(&quad(0, 0, 3)).unwrap();
        assert_eq!(n, 1);
        assert!(dbl.unwrap().is_infinity());
    }

    #[test]
    fn squarefree_counts() {
        assert_eq!(squarefree_root_count(&[quad(0, 2, 0)]).unwrap(), 2);
        assert_eq!(squarefree_root_count(&[quad(0, 1, 0), quad(1, 0, -1)]).unwrap(), 4);
        assert_eq!(squarefree_root_count(&[quad(1, 0, 0), quad(0, 1, 0)]).unwrap(), 2);
    }

    #[test]
    fn multiplicity_and_division() {
        // (z1 − z2)²·class arithmetic via quadratic z1² − 2z1z2 + z2².
        let f = quad(1, -2, 1).to_form().unwrap();
        let p = ProjectivePoint1::new(g(1), g(1)).unwrap();
        assert_eq!(f.multiplicity_at(&p), 2);
        assert_eq!(f.multiplicity_at(&ProjectivePoint1::infinity()), 0);
    }

    #[test]
    fn linear_at_infinity_divides_forms_with_zero_a() {
        let f = quad(0, 1, 0).to_form().unwrap();
        assert_eq!(f.multiplicity_at(&ProjectivePoint1::infinity()), 1);
        let residual = f.div_exact(&BinaryForm::linear_at(&ProjectivePoint1::infinity())).unwrap();
        assert_eq!(residual.degree(), 1);
        let root = residual.linear_root().unwrap();
        assert_eq!(root, ProjectivePoint1::new(Gauss::zero(), Gauss::one()).unwrap());
    }
}
