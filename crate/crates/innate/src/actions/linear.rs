//! Point actions of semilinear groups on projective and isotropic points, with optional
//! scaling by the cosets of the index-`r` subgroup of the multiplicative group.

use crate::algebra::{
    gl_extra, gu_extra, normalize, primitive_scalar, sl_generators, su3_generators, unitary_base, Elem,
    FiniteField, Matrix, SemilinearElement,
};
use crate::perm::{BlockSystem, LabeledAction, Permutation, PointLabel};

use super::ActionError;

/// Monic representatives of a set of 1-spaces, with an index lookup by vector code.
#[derive(Clone, Debug)]
pub struct VectorDomain {
    dim: usize,
    points: Vec<Vec<Elem>>,
    lookup: Vec<u32>,
}

impl VectorDomain {
    fn code(&self, q: u64, v: &[Elem]) -> usize {
        v.iter().fold(0u64, |acc, &x| acc * q + x as u64) as usize
    }

    /// All monic vectors of `GF(q)^dim` accepted by `keep`, in increasing code order.
    pub fn new(f: &FiniteField, dim: usize, keep: impl Fn(&[Elem]) -> bool) -> Self {
        let q = f.order() as u64;
        let total = q.pow(dim as u32) as usize;
        let mut points = Vec::new();
        let mut lookup = vec![u32::MAX; total];
        for code in 1..total {
            let mut v = vec![0; dim];
            let mut c = code as u64;
            for slot in v.iter_mut().rev() {
                *slot = (c % q) as Elem;
                c /= q;
            }
            if v.iter().find(|&&x| x != 0) != Some(&1) || !keep(&v) {
                continue;
            }
            lookup[code] = points.len() as u32;
            points.push(v);
        }
        VectorDomain { dim, points, lookup }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, k: usize) -> &[Elem] {
        &self.points[k]
    }

    /// Index of the 1-space spanned by nonzero `v`, and the scalar `mu` with `v = mu * rep`.
    pub fn locate(&self, f: &FiniteField, v: &[Elem]) -> Option<(usize, Elem)> {
        let mut w = v.to_vec();
        let mu = normalize(f, &mut w)?;
        let k = self.lookup[self.code(f.order() as u64, &w)];
        (k != u32::MAX).then_some((k as usize, mu))
    }
}

/// A constructed action together with the partition into cells of size `r`.
#[derive(Clone, Debug)]
pub struct ScaledAction {
    pub action: LabeledAction,
    pub cells: BlockSystem,
    pub r: u32,
}

fn check_r(r: u32, modulus: u64) -> Result<(), ActionError> {
    if !(2..).take_while(|d| d * d <= r).all(|d| r % d != 0) || r < 2 {
        return Err(ActionError::NotPrime(r));
    }
    if modulus % r as u64 != 0 {
        return Err(ActionError::RNotDividing { r, modulus });
    }
    Ok(())
}

/// The action `phi^i A : e v -> e^(phi^i) (v^(phi^i) A)` on points `w^j <w^r> u`, where `u`
/// runs over `domain` and `0 <= j < r`. Point `k*r + j` is `w^j <w^r> u_k`.
pub fn semilinear_action(
    name: &str,
    f: &FiniteField,
    domain: &VectorDomain,
    r: u32,
    gens: &[(String, SemilinearElement)],
) -> Result<ScaledAction, ActionError> {
    let r_us = r as usize;
    let n = domain.len() * r_us;
    let p = f.characteristic() as u64;
    let mut perms = Vec::with_capacity(gens.len());
    for (gname, g) in gens {
        if g.matrix.dim() != domain.dim() {
            return Err(ActionError::Algebra(crate::algebra::AlgebraError::DimensionMismatch));
        }
        let scale = p.pow(g.frob % f.degree()) % r as u64;
        let mut images = vec![0usize; n];
        for k in 0..domain.len() {
            let w = g.apply(f, domain.point(k));
            let (k2, mu) = domain
                .locate(f, &w)
                .ok_or_else(|| ActionError::DomainNotInvariant(gname.clone()))?;
            let shift = f.dlog(mu).expect("nonzero") as u64 % r as u64;
            for j in 0..r_us {
                let j2 = ((j as u64 * scale + shift) % r as u64) as usize;
                images[k * r_us + j] = k2 * r_us + j2;
            }
        }
        perms.push(Permutation::from_images(images)?);
    }
    let labels = (0..n)
        .map(|pt| {
            let vector = domain
                .point(pt / r_us)
                .iter()
                .map(|&x| f.dlog(x).map_or(-1, i64::from))
                .collect();
            if r == 1 {
                PointLabel::Vector(vector)
            } else {
                PointLabel::Scaled { index: pt % r_us, vector }
            }
        })
        .collect();
    let names = gens.iter().map(|(s, _)| s.clone()).collect();
    let action = LabeledAction::new(name, labels, names, perms)?;
    let cells = BlockSystem::new(n, (0..domain.len()).map(|k| (k * r_us..(k + 1) * r_us).collect()).collect())?;
    Ok(ScaledAction { action, cells, r })
}

/// SL generators (`sl_*`), the scalar `w I` (`z`), `diag(w,1,..)` (`gl`) and, for `a > 1`,
/// the Frobenius map (`phi`).
pub fn linear_semilinear_generators(d: usize, f: &FiniteField) -> Result<Vec<(String, SemilinearElement)>, ActionError> {
    let sl = sl_generators(d, f)?;
    let mut out: Vec<(String, SemilinearElement)> = sl
        .names
        .into_iter()
        .zip(sl.matrices)
        .map(|(n, m)| (n, SemilinearElement::linear(m)))
        .collect();
    out.push(("z".into(), SemilinearElement::linear(primitive_scalar(d, f))));
    out.push(("gl".into(), SemilinearElement::linear(gl_extra(d, f))));
    if f.degree() > 1 {
        out.push(("phi".into(), SemilinearElement::frobenius(d)));
    }
    Ok(out)
}

/// SU(3,q) generators (`su_*`), `w I` (`z`), the GU diagonal (`gu`) and the Frobenius map
/// of GF(q^2) (`phi`).
pub fn unitary_semilinear_generators(f: &FiniteField) -> Result<Vec<(String, SemilinearElement)>, ActionError> {
    let su = su3_generators(f)?;
    let mut out: Vec<(String, SemilinearElement)> = su
        .names
        .into_iter()
        .zip(su.matrices)
        .map(|(n, m)| (n, SemilinearElement::linear(m)))
        .collect();
    out.push(("z".into(), SemilinearElement::linear(primitive_scalar(3, f))));
    out.push(("gu".into(), SemilinearElement::linear(gu_extra(f)?)));
    out.push(("phi".into(), SemilinearElement::frobenius(3)));
    Ok(out)
}

pub fn projective_domain(f: &FiniteField, d: usize) -> VectorDomain {
    VectorDomain::new(f, d, |_| true)
}

/// Monic isotropic vectors of `GF(q^2)^3` for the form `(u,v) = u0 v2^q + u1 v1^q + u2 v0^q`.
pub fn isotropic_domain(f: &FiniteField) -> Result<VectorDomain, ActionError> {
    let q = unitary_base(f)? as u64;
    let c = |x: Elem| f.pow(x, q);
    Ok(VectorDomain::new(f, 3, |v| {
        let s = f.add(f.add(f.mul(v[0], c(v[2])), f.mul(v[1], c(v[1]))), f.mul(v[2], c(v[0])));
        s == 0
    }))
}

/// Action of invertible matrices on the 1-spaces of `GF(q)^d`; generators are named `g0, g1, ..`.
pub fn projective_action(f: &FiniteField, gens: &[Matrix]) -> Result<LabeledAction, ActionError> {
    let d = gens.first().map(Matrix::dim).ok_or(ActionError::NoGenerators)?;
    let named: Vec<(String, SemilinearElement)> = gens
        .iter()
        .enumerate()
        .map(|(i, m)| (format!("g{i}"), SemilinearElement::linear(m.clone())))
        .collect();
    Ok(semilinear_action("projective", f, &projective_domain(f, d), 1, &named)?.action)
}

/// The semilinear group of `GF(q)^d` on the `r (q^d-1)/(q-1)` scaled points.
pub fn scaled_projective_action(d: usize, f: &FiniteField, r: u32) -> Result<ScaledAction, ActionError> {
    check_r(r, f.order() as u64 - 1)?;
    let gens = linear_semilinear_generators(d, f)?;
    semilinear_action("scaled-projective", f, &projective_domain(f, d), r, &gens)
}

/// The semilinear unitary group on the `r (q^3+1)` scaled isotropic points; `f` has order `q^2`.
pub fn scaled_isotropic_action(f: &FiniteField, r: u32) -> Result<ScaledAction, ActionError> {
    check_r(r, f.order() as u64 - 1)?;
    let gens = unitary_semilinear_generators(f)?;
    semilinear_action("scaled-isotropic", f, &isotropic_domain(f)?, r, &gens)
}

/// The semilinear unitary group on the `q^3+1` isotropic points.
pub fn isotropic_action(f: &FiniteField) -> Result<LabeledAction, ActionError> {
    let gens = unitary_semilinear_generators(f)?;
    Ok(semilinear_action("isotropic", f, &isotropic_domain(f)?, 1, &gens)?.action)
}

/// The semilinear group of `GF(q)^d` on its 1-spaces.
pub fn semilinear_projective_action(d: usize, f: &FiniteField) -> Result<LabeledAction, ActionError> {
    let gens = linear_semilinear_generators(d, f)?;
    Ok(semilinear_action("projective", f, &projective_domain(f, d), 1, &gens)?.action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::rank;

    #[test]
    fn psl25_on_the_projective_line() {
        let f = FiniteField::new(5, 1).unwrap();
        let act = semilinear_projective_action(2, &f).unwrap();
        assert_eq!(act.degree(), 6);
        let m = act.group_named(&["sl"]);
        assert_eq!(m.order(), 60);
        assert_eq!(rank(&m).unwrap(), 2);
    }

    #[test]
    fn scaled_line_over_gf5() {
        let f = FiniteField::new(5, 1).unwrap();
        let s = scaled_projective_action(2, &f, 2).unwrap();
        assert_eq!(s.action.degree(), 12);
        let h = s.action.group_named(&["sl", "z"]);
        assert_eq!(h.order(), 120);
        assert!(s.cells.is_invariant_under(&s.action.generators));
        assert!(matches!(scaled_projective_action(2, &f, 3), Err(ActionError::RNotDividing { .. })));
    }

    #[test]
    fn isotropic_point_counts() {
        let f9 = FiniteField::new(3, 2).unwrap();
        assert_eq!(isotropic_domain(&f9).unwrap().len(), 28);
        let f16 = FiniteField::new(2, 4).unwrap();
        assert_eq!(isotropic_domain(&f16).unwrap().len(), 65);
    }
}
