use super::field::{Elem, FiniteField};
use super::matrix::Matrix;

/// The semilinear map `v -> (v^(phi^frob)) * matrix`, where `phi` raises every coordinate to
/// the power `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearElement {
    pub frob: u32,
    pub matrix: Matrix,
}

impl SemilinearElement {
    pub fn linear(matrix: Matrix) -> Self {
        SemilinearElement { frob: 0, matrix }
    }

    /// The bare Frobenius map in dimension `dim`.
    pub fn frobenius(dim: usize) -> Self {
        SemilinearElement {
            frob: 1,
            matrix: Matrix::identity(dim),
        }
    }

    pub fn apply(&self, f: &FiniteField, v: &[Elem]) -> Vec<Elem> {
        let w: Vec<Elem> = v.iter().map(|&x| f.frobenius(x, self.frob)).collect();
        self.matrix.apply(f, &w)
    }

    /// `self` followed by `other`: `(phi^i A)(phi^j B) = phi^(i+j) (A^(phi^j) B)`.
    pub fn then(&self, f: &FiniteField, other: &SemilinearElement) -> SemilinearElement {
        SemilinearElement {
            frob: (self.frob + other.frob) % f.degree(),
            matrix: self.matrix.frobenius(f, other.frob).mul(f, &other.matrix),
        }
    }

    /// Order of the induced field automorphism.
    pub fn field_order(&self, f: &FiniteField) -> u32 {
        let a = f.degree();
        a / super::field::gcd_u64(self.frob as u64, a as u64) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_orders() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let phi = SemilinearElement::frobenius(1);
        let w = f4.primitive();
        assert_eq!(phi.apply(&f4, &[w]), vec![f4.mul(w, w)]);
        assert_eq!(phi.apply(&f4, &[1]), vec![1]);
        assert_eq!(phi.field_order(&f4), 2);
        assert_eq!(phi.field_order(&FiniteField::new(3, 2).unwrap()), 2);
        assert_eq!(phi.field_order(&FiniteField::new(2, 1).unwrap()), 1);
    }

    #[test]
    fn composition_law_on_a_sample() {
        let f = FiniteField::new(2, 3).unwrap();
        let w = f.primitive();
        let a = SemilinearElement {
            frob: 1,
            matrix: Matrix::from_rows(&[vec![w, 1], vec![0, 1]]).unwrap(),
        };
        let b = SemilinearElement {
            frob: 2,
            matrix: Matrix::from_rows(&[vec![1, 0], vec![f.mul(w, w), w]]).unwrap(),
        };
        let v = [f.exp(3), f.exp(5)];
        assert_eq!(b.apply(&f, &a.apply(&f, &v)), a.then(&f, &b).apply(&f, &v));
    }
}
