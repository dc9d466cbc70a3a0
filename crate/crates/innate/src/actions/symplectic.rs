//! Sp(2d,2) on nonzero vectors and on the quadratic forms polarizing to its alternating form.
//!
//! Vectors of `GF(2)^(2d)` are bit masks (bit `i` is coordinate `i`). The form with linear
//! part `c` is `Q_c(u) = sum_i u_i u_(d+i) + parity(u & c)`; every quadratic form with the
//! standard polarization arises exactly once this way.

use serde::{Deserialize, Serialize};

use crate::algebra::{sp_generators, FiniteField, Matrix};
use crate::perm::{GeneratedGroup, LabeledAction, Permutation, PointLabel};

use super::ActionError;

/// Form type: `+` forms have `2^(2d-1) + 2^(d-1)` zeros, `-` forms `2^(2d-1) - 2^(d-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormType {
    Plus,
    Minus,
}

impl FormType {
    pub fn sign(self) -> i64 {
        match self {
            FormType::Plus => 1,
            FormType::Minus => -1,
        }
    }
}

pub fn form_value(d: usize, c: u64, u: u64) -> u8 {
    let mask = (1u64 << d) - 1;
    let q0 = ((u & mask) & (u >> d)).count_ones();
    ((q0 + (u & c).count_ones()) & 1) as u8
}

pub fn form_type(d: usize, c: u64) -> FormType {
    let zeros = (0..1u64 << (2 * d)).filter(|&u| form_value(d, c, u) == 0).count() as i64;
    let big = 1i64 << (2 * d - 1);
    if zeros == big + (1 << (d - 1)) {
        FormType::Plus
    } else {
        FormType::Minus
    }
}

/// Value table of `Q_c` as 64-bit words, bit `u` holding `Q_c(u)`.
pub fn form_table(d: usize, c: u64) -> Vec<u64> {
    let n = 1usize << (2 * d);
    let mut words = vec![0u64; n.div_ceil(64)];
    for u in 0..n as u64 {
        if form_value(d, c, u) == 1 {
            words[(u / 64) as usize] |= 1 << (u % 64);
        }
    }
    words
}

/// Rows of a GF(2) matrix as bit masks.
fn row_masks(m: &Matrix) -> Vec<u64> {
    m.rows()
        .map(|row| row.iter().enumerate().filter(|(_, &x)| x != 0).fold(0u64, |acc, (i, _)| acc | 1 << i))
        .collect()
}

fn apply_masks(rows: &[u64], u: u64) -> u64 {
    rows.iter()
        .enumerate()
        .filter(|(i, _)| u >> i & 1 == 1)
        .fold(0, |acc, (_, r)| acc ^ r)
}

/// Linear part of `Q_c^g`, where `Q^g(u) = Q(u g^-1)`.
fn transform_form(d: usize, c: u64, g_inv_rows: &[u64]) -> u64 {
    (0..2 * d).fold(0, |acc, i| {
        let image = apply_masks(g_inv_rows, 1 << i);
        acc | (form_value(d, c, image) as u64) << i
    })
}

/// The symplectic group with its vector and form actions.
#[derive(Clone, Debug)]
pub struct SymplecticActions {
    pub d: usize,
    pub names: Vec<String>,
    pub matrices: Vec<Matrix>,
    /// Linear parts of the `+` forms and `-` forms, increasing.
    pub plus_forms: Vec<u64>,
    pub minus_forms: Vec<u64>,
}

impl SymplecticActions {
    pub fn new(d: usize) -> Result<Self, ActionError> {
        let f = FiniteField::new(2, 1)?;
        let gens = sp_generators(d, &f)?;
        let (mut plus_forms, mut minus_forms) = (Vec::new(), Vec::new());
        for c in 0..1u64 << (2 * d) {
            match form_type(d, c) {
                FormType::Plus => plus_forms.push(c),
                FormType::Minus => minus_forms.push(c),
            }
        }
        Ok(SymplecticActions {
            d,
            names: gens.names,
            matrices: gens.matrices,
            plus_forms,
            minus_forms,
        })
    }

    pub fn forms(&self, eps: FormType) -> &[u64] {
        match eps {
            FormType::Plus => &self.plus_forms,
            FormType::Minus => &self.minus_forms,
        }
    }

    fn vector_images(&self, m: &Matrix) -> Vec<usize> {
        let rows = row_masks(m);
        (1..1u64 << (2 * self.d))
            .map(|u| apply_masks(&rows, u) as usize - 1)
            .collect()
    }

    fn form_images(&self, m: &Matrix, eps: FormType) -> Result<Vec<usize>, ActionError> {
        let f = FiniteField::new(2, 1)?;
        let inv_rows = row_masks(&m.inverse(&f)?);
        let forms = self.forms(eps);
        forms
            .iter()
            .map(|&c| {
                let c2 = transform_form(self.d, c, &inv_rows);
                forms.binary_search(&c2).map_err(|_| ActionError::DomainNotInvariant("form".into()))
            })
            .collect()
    }

    fn form_labels(&self, eps: FormType) -> Vec<PointLabel> {
        self.forms(eps).iter().map(|&c| PointLabel::Form(form_table(self.d, c))).collect()
    }

    /// Action on the forms of one type.
    pub fn form_action(&self, eps: FormType) -> Result<LabeledAction, ActionError> {
        let perms = self
            .matrices
            .iter()
            .map(|m| Ok(Permutation::from_images(self.form_images(m, eps)?)?))
            .collect::<Result<Vec<_>, ActionError>>()?;
        Ok(LabeledAction::new("forms", self.form_labels(eps), self.names.clone(), perms)?)
    }

    /// Action on the `2^(2d) - 1` nonzero vectors; vector `u` is point `u - 1`.
    pub fn vector_action(&self) -> Result<LabeledAction, ActionError> {
        let perms = self
            .matrices
            .iter()
            .map(|m| Permutation::from_images(self.vector_images(m)))
            .collect::<Result<Vec<_>, _>>()?;
        let labels = (1..1i64 << (2 * self.d))
            .map(|u| PointLabel::Vector((0..2 * self.d).map(|i| u >> i & 1).collect()))
            .collect();
        Ok(LabeledAction::new("vectors", labels, self.names.clone(), perms)?)
    }

    /// Nonzero vectors followed by the forms of type `eps`; faithful, with the form points
    /// starting at `2^(2d) - 1`.
    pub fn combined_action(&self, eps: FormType) -> Result<LabeledAction, ActionError> {
        let nv = (1usize << (2 * self.d)) - 1;
        let mut perms = Vec::new();
        for m in &self.matrices {
            let mut images = self.vector_images(m);
            images.extend(self.form_images(m, eps)?.into_iter().map(|k| k + nv));
            perms.push(Permutation::from_images(images)?);
        }
        let mut labels = self.vector_action()?.labels;
        labels.extend(self.form_labels(eps));
        Ok(LabeledAction::new("vectors+forms", labels, self.names.clone(), perms)?)
    }

    /// Matrix of a permutation of the vector points (the first `2^(2d)-1` points).
    pub fn matrix_of(&self, g: &Permutation) -> Matrix {
        let n = 2 * self.d;
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let image = g.image((1usize << i) - 1) as u64 + 1;
                (0..n).map(|j| (image >> j & 1) as u32).collect()
            })
            .collect();
        Matrix::from_rows(&rows).expect("square")
    }
}

/// Parity of `rank(h - I)` for `h` preserving `Q_c`: 0 exactly on the kernel of the
/// Dickson invariant.
pub fn dickson_class(d: usize, h: &Matrix, c: u64) -> Result<u8, ActionError> {
    let f = FiniteField::new(2, 1)?;
    let rows = row_masks(h);
    if (0..1u64 << (2 * d)).any(|u| form_value(d, c, apply_masks(&rows, u)) != form_value(d, c, u)) {
        return Err(ActionError::NotInStabilizer);
    }
    Ok((h.sub(&f, &Matrix::identity(2 * d)).rank(&f) % 2) as u8)
}

/// The kernel of the Dickson invariant inside `stabilizer` (a group of permutations of the
/// combined domain fixing the form `Q_c`), from Schreier generators over `{1, s}`.
pub fn dickson_kernel(
    sp: &SymplecticActions,
    stabilizer: &GeneratedGroup,
    c: u64,
) -> Result<GeneratedGroup, ActionError> {
    let classes = stabilizer
        .generators()
        .iter()
        .map(|g| dickson_class(sp.d, &sp.matrix_of(g), c))
        .collect::<Result<Vec<_>, _>>()?;
    let odd = stabilizer.generators().iter().zip(&classes).find(|(_, &k)| k == 1).map(|(g, _)| g.clone());
    let Some(s) = odd else {
        return Ok(stabilizer.clone());
    };
    let s_inv = s.inverse();
    let mut gens = vec![s.compose(&s)];
    for (g, &k) in stabilizer.generators().iter().zip(&classes) {
        if k == 0 {
            gens.push(g.clone());
            gens.push(s.compose(g).compose(&s_inv));
        } else {
            gens.push(g.compose(&s_inv));
            gens.push(s.compose(g));
        }
    }
    Ok(GeneratedGroup::new(stabilizer.degree(), gens)?)
}
