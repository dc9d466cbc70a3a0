use super::field::{Elem, FiniteField};
use super::matrix::Matrix;
use super::AlgebraError;

/// Named generating matrices for a classical group.
#[derive(Clone, Debug)]
pub struct ClassicalGenerators {
    pub names: Vec<String>,
    pub matrices: Vec<Matrix>,
    /// Set when the projective quotient is not simple.
    pub degenerate: bool,
}

impl ClassicalGenerators {
    fn push(&mut self, name: String, m: Matrix) {
        self.names.push(name);
        self.matrices.push(m);
    }
}

fn elementary(f: &FiniteField, dim: usize, i: usize, j: usize, t: Elem) -> Matrix {
    let mut m = Matrix::identity(dim);
    m.set(i, j, f.add(m.get(i, j), t));
    m
}

/// Root elements `I + w^k E(i,i+1)` and `I + w^k E(i+1,i)` for `k < a`, generating SL(d,q).
pub fn sl_generators(d: usize, f: &FiniteField) -> Result<ClassicalGenerators, AlgebraError> {
    if d < 2 {
        return Err(AlgebraError::InvalidDimension(d));
    }
    let q = f.order();
    let mut out = ClassicalGenerators {
        names: Vec::new(),
        matrices: Vec::new(),
        degenerate: d == 2 && q <= 3,
    };
    for i in 0..d - 1 {
        for k in 0..f.degree() {
            let t = f.exp(k as i64);
            out.push(format!("sl_u{i}_{k}"), elementary(f, d, i, i + 1, t));
            out.push(format!("sl_l{i}_{k}"), elementary(f, d, i + 1, i, t));
        }
    }
    Ok(out)
}

/// `diag(w, 1, ..., 1)`, which together with SL(d,q) generates GL(d,q).
pub fn gl_extra(d: usize, f: &FiniteField) -> Matrix {
    let mut diag = vec![1; d];
    diag[0] = f.primitive();
    Matrix::diagonal(&diag)
}

/// The scalar matrix `w I`.
pub fn primitive_scalar(d: usize, f: &FiniteField) -> Matrix {
    Matrix::diagonal(&vec![f.primitive(); d])
}

/// Square root of the field order, for fields of even degree.
pub fn unitary_base(f: &FiniteField) -> Result<u32, AlgebraError> {
    if f.degree() % 2 != 0 {
        return Err(AlgebraError::NotQuadratic(f.order()));
    }
    Ok(f.characteristic().pow(f.degree() / 2))
}

/// The antidiagonal Gram matrix of the unitary form on the basis `e, x, f`.
pub fn unitary_form() -> Matrix {
    Matrix::from_rows(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]).expect("square")
}

/// `true` iff `a P conj(a)^T = P`, with conjugation `x -> x^q`.
pub fn preserves_unitary_form(f: &FiniteField, a: &Matrix) -> Result<bool, AlgebraError> {
    let q = unitary_base(f)? as u64;
    let p = unitary_form();
    Ok(a.mul(f, &p).mul(f, &a.entry_power(f, q).transpose()) == p)
}

/// The conjugation `x -> x^q` on GF(q^2).
pub fn conjugate(f: &FiniteField, x: Elem) -> Result<Elem, AlgebraError> {
    Ok(f.pow(x, unitary_base(f)? as u64))
}

fn span_over_prime(f: &FiniteField, basis: &[Elem]) -> Vec<Elem> {
    let mut span = vec![0];
    for &b in basis {
        let mut next = Vec::new();
        for &s in &span {
            let mut x = s;
            for _ in 0..f.characteristic() {
                next.push(x);
                x = f.add(x, b);
            }
        }
        span = next;
    }
    span
}

/// Generators of SU(3,q) preserving [`unitary_form`]: lower unitriangular root elements
/// `[[1,0,0],[u,1,0],[s,-conj(u),1]]` with `s + conj(s) + u conj(u) = 0`, the torus element
/// `diag(w, w^(q-1), w^(-q))`, and the Weyl element `[[0,0,1],[0,-1,0],[1,0,0]]`.
/// The field must have order `q^2`.
pub fn su3_generators(f: &FiniteField) -> Result<ClassicalGenerators, AlgebraError> {
    let q = unitary_base(f)? as i64;
    let conj = |x: Elem| f.pow(x, q as u64);
    let trace = |x: Elem| f.add(x, conj(x));
    let mut out = ClassicalGenerators {
        names: Vec::new(),
        matrices: Vec::new(),
        degenerate: q == 2,
    };
    let root = |u: Elem, s: Elem| {
        Matrix::from_rows(&[vec![1, 0, 0], vec![u, 1, 0], vec![s, f.neg(conj(u)), 1]]).expect("square")
    };
    for k in 0..f.degree() {
        let u = f.exp(k as i64);
        let target = f.neg(f.mul(u, conj(u)));
        let s = f.elements().find(|&s| trace(s) == target).expect("trace is onto the subfield");
        out.push(format!("su_q{k}"), root(u, s));
    }
    let mut centre: Vec<Elem> = Vec::new();
    for s in f.elements().filter(|&s| s != 0 && trace(s) == 0) {
        if !span_over_prime(f, &centre).contains(&s) {
            centre.push(s);
        }
    }
    for (k, &s) in centre.iter().enumerate() {
        out.push(format!("su_z{k}"), root(0, s));
    }
    let w = f.primitive();
    out.push(
        "su_h".into(),
        Matrix::diagonal(&[w, f.exp(q - 1), f.exp(-q)]),
    );
    out.push(
        "su_w".into(),
        Matrix::from_rows(&[vec![0, 0, 1], vec![0, f.neg(1), 0], vec![1, 0, 0]]).expect("square"),
    );
    for m in &out.matrices {
        if !preserves_unitary_form(f, m)? || m.determinant(f) != 1 {
            return Err(AlgebraError::FormNotPreserved);
        }
    }
    Ok(out)
}

/// `diag(w, 1, w^(-q))`, an element of GU(3,q) whose determinant generates the norm-one group.
pub fn gu_extra(f: &FiniteField) -> Result<Matrix, AlgebraError> {
    let q = unitary_base(f)? as i64;
    let m = Matrix::diagonal(&[f.primitive(), 1, f.exp(-q)]);
    if !preserves_unitary_form(f, &m)? {
        return Err(AlgebraError::FormNotPreserved);
    }
    Ok(m)
}

/// Gram matrix `[[0, I], [I, 0]]` of the alternating form on GF(2)^(2d).
pub fn symplectic_form(d: usize) -> Matrix {
    let n = 2 * d;
    let mut m = Matrix::diagonal(&vec![0; n]);
    for i in 0..d {
        m.set(i, d + i, 1);
        m.set(d + i, i, 1);
    }
    m
}

/// The symplectic transvection `x -> x + B(x, v) v` over GF(2).
pub fn symplectic_transvection(f: &FiniteField, d: usize, v: &[Elem]) -> Matrix {
    let j = symplectic_form(d);
    let n = 2 * d;
    let jv = j.apply(f, v);
    let mut m = Matrix::identity(n);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, f.add(m.get(r, c), f.mul(jv[r], v[c])));
        }
    }
    m
}

/// Transvections generating Sp(2d,2), along `e_i`, `f_i`, `e_i + e_(i+1)` and `e_1 + f_2`.
pub fn sp_generators(d: usize, f: &FiniteField) -> Result<ClassicalGenerators, AlgebraError> {
    if d < 2 {
        return Err(AlgebraError::InvalidDimension(d));
    }
    if f.order() != 2 {
        return Err(AlgebraError::UnsupportedField(f.order()));
    }
    let n = 2 * d;
    let unit = |idx: &[usize]| {
        let mut v = vec![0; n];
        for &i in idx {
            v[i] = 1;
        }
        v
    };
    let mut vectors: Vec<(String, Vec<Elem>)> = Vec::new();
    for i in 0..d {
        vectors.push((format!("sp_e{i}"), unit(&[i])));
        vectors.push((format!("sp_f{i}"), unit(&[d + i])));
    }
    for i in 0..d - 1 {
        vectors.push((format!("sp_ee{i}"), unit(&[i, i + 1])));
    }
    vectors.push(("sp_x".into(), unit(&[0, d + 1])));
    let form = symplectic_form(d);
    let mut out = ClassicalGenerators {
        names: Vec::new(),
        matrices: Vec::new(),
        degenerate: d == 2,
    };
    for (name, v) in vectors {
        let t = symplectic_transvection(f, d, &v);
        if t.mul(f, &form).mul(f, &t.transpose()) != form {
            return Err(AlgebraError::FormNotPreserved);
        }
        out.push(name, t);
    }
    Ok(out)
}

/// `q^(d(d-1)/2) * prod_{i=2..d} (q^i - 1)`.
pub fn sl_order(d: u32, q: u128) -> u128 {
    let mut o = q.pow(d * (d - 1) / 2);
    for i in 2..=d {
        o *= q.pow(i) - 1;
    }
    o
}

pub fn su3_order(q: u128) -> u128 {
    q.pow(3) * (q * q - 1) * (q.pow(3) + 1)
}

pub fn sp2_order(d: u32) -> u128 {
    let mut o = 2u128.pow(d * d);
    for i in 1..=d {
        o *= 2u128.pow(2 * i) - 1;
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_generators_have_determinant_one() {
        let f = FiniteField::new(3, 2).unwrap();
        let g = sl_generators(3, &f).unwrap();
        assert_eq!(g.matrices.len(), 8);
        assert!(g.matrices.iter().all(|m| m.determinant(&f) == 1));
        assert!(sl_generators(2, &FiniteField::new(3, 1).unwrap()).unwrap().degenerate);
    }

    #[test]
    fn su3_generators_preserve_the_form() {
        for (p, a) in [(3, 2), (2, 4), (5, 2)] {
            let f = FiniteField::new(p, a).unwrap();
            let g = su3_generators(&f).unwrap();
            for m in &g.matrices {
                assert!(preserves_unitary_form(&f, m).unwrap());
            }
            assert!(preserves_unitary_form(&f, &gu_extra(&f).unwrap()).unwrap());
        }
        assert!(matches!(
            su3_generators(&FiniteField::new(7, 1).unwrap()),
            Err(AlgebraError::NotQuadratic(7))
        ));
    }

    #[test]
    fn order_formulas() {
        assert_eq!(sl_order(2, 5), 120);
        assert_eq!(sl_order(3, 2), 168);
        assert_eq!(su3_order(3), 6048);
        assert_eq!(sp2_order(3), 1_451_520);
        assert_eq!(sp2_order(2), 720);
    }
}
