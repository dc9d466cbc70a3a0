//! The arithmetic conditions of the ten lines of special pairs.

use serde::{Deserialize, Serialize};

use super::ClassifyError;
use crate::actions::FormType;

/// One line of the special-pair table with its parameters. In the linear and unitary lines,
/// `q = q0^a` and `j` records the image of the group in the field automorphisms: the index
/// of `X` over its intersection with PGL (or PGU) is `a/j` (or `2a/j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Table1Instance {
    /// `A5` on 5 points; `full` when `X = S5`.
    Line1 { r: u64, full: bool },
    Line2 { d: u32, q0: u64, a: u32, r: u64, j: u32 },
    Line3 { r: u64 },
    Line4 { q0: u64, a: u32, r: u64, j: u32 },
    Line5 { d: u32, r: u64, eps: FormType },
    /// `q = 3^(2a+1)`.
    Line6 { a: u32, r: u64 },
    /// `PSL(2,8)` on 28 points; `full` when `X` is all of `PΓL(2,8)`.
    Line7 { r: u64, full: bool },
    Line8 { r: u64 },
    Line9 { r: u64 },
    Line10 { r: u64 },
}

impl Table1Instance {
    pub fn line(&self) -> u8 {
        match self {
            Table1Instance::Line1 { .. } => 1,
            Table1Instance::Line2 { .. } => 2,
            Table1Instance::Line3 { .. } => 3,
            Table1Instance::Line4 { .. } => 4,
            Table1Instance::Line5 { .. } => 5,
            Table1Instance::Line6 { .. } => 6,
            Table1Instance::Line7 { .. } => 7,
            Table1Instance::Line8 { .. } => 8,
            Table1Instance::Line9 { .. } => 9,
            Table1Instance::Line10 { .. } => 10,
        }
    }

    pub fn r(&self) -> u64 {
        match *self {
            Table1Instance::Line1 { r, .. }
            | Table1Instance::Line2 { r, .. }
            | Table1Instance::Line3 { r }
            | Table1Instance::Line4 { r, .. }
            | Table1Instance::Line5 { r, .. }
            | Table1Instance::Line6 { r, .. }
            | Table1Instance::Line7 { r, .. }
            | Table1Instance::Line8 { r }
            | Table1Instance::Line9 { r }
            | Table1Instance::Line10 { r } => r,
        }
    }

    /// Builds an instance from a line number and optional named parameters.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        line: u8,
        d: Option<u32>,
        q0: Option<u64>,
        a: Option<u32>,
        r: u64,
        j: Option<u32>,
        eps: Option<FormType>,
        full: Option<bool>,
    ) -> Result<Self, ClassifyError> {
        let need = |v: Option<u32>, name| v.ok_or(ClassifyError::MissingParameter(name));
        Ok(match line {
            1 => Table1Instance::Line1 { r, full: full.unwrap_or(true) },
            2 => Table1Instance::Line2 {
                d: need(d, "d")?,
                q0: q0.ok_or(ClassifyError::MissingParameter("q0"))?,
                a: need(a, "a")?,
                r,
                j: j.unwrap_or(1),
            },
            3 => Table1Instance::Line3 { r },
            4 => Table1Instance::Line4 {
                q0: q0.ok_or(ClassifyError::MissingParameter("q0"))?,
                a: need(a, "a")?,
                r,
                j: j.unwrap_or(1),
            },
            5 => Table1Instance::Line5 {
                d: need(d, "d")?,
                r,
                eps: eps.ok_or(ClassifyError::MissingParameter("eps"))?,
            },
            6 => Table1Instance::Line6 { a: need(a, "a")?, r },
            7 => Table1Instance::Line7 { r, full: full.unwrap_or(true) },
            8 => Table1Instance::Line8 { r },
            9 => Table1Instance::Line9 { r },
            10 => Table1Instance::Line10 { r },
            other => return Err(ClassifyError::UnknownLine(other)),
        })
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Order of `x` modulo `r`, or `None` when they are not coprime.
pub fn multiplicative_order(x: u64, r: u64) -> Option<u64> {
    if r < 2 || gcd(x % r, r) != 1 {
        return None;
    }
    let mut y = x % r;
    let mut k = 1;
    while y != 1 {
        y = y * (x % r) % r;
        k += 1;
    }
    Some(k)
}

/// The shared conditions of the linear and unitary lines: `o_r(q0) = r-1`, `(j, r-1) = 1`
/// and `(r-1) | (field_index/j)`, where `j` divides `field_index`.
fn field_conditions(q0: u64, r: u64, j: u32, field_index: u32) -> bool {
    let j = j as u64;
    let field_index = field_index as u64;
    j >= 1
        && field_index % j == 0
        && multiplicative_order(q0, r) == Some(r - 1)
        && gcd(j, r - 1) == 1
        && (field_index / j) % (r - 1) == 0
}

/// Evaluates the conditions of the instance's line as printed.
pub fn table1_predicate(t: &Table1Instance) -> Result<bool, ClassifyError> {
    let r = t.r();
    if !is_prime(r) {
        return Err(ClassifyError::RNotPrime(r));
    }
    Ok(match *t {
        Table1Instance::Line1 { full, .. } => r == 3 && full,
        Table1Instance::Line2 { d, q0, a, j, .. } => {
            let q = q0.pow(a);
            let bound = (q - 1) / gcd(d as u64, q - 1);
            is_prime(q0) && d >= 2 && bound % r == 0 && field_conditions(q0, r, j, a)
        }
        Table1Instance::Line3 { .. } => r == 2,
        Table1Instance::Line4 { q0, a, j, .. } => {
            let q = q0.pow(a);
            let bound = (q * q - 1) / gcd(3, q + 1);
            is_prime(q0) && bound % r == 0 && field_conditions(q0, r, j, 2 * a)
        }
        Table1Instance::Line5 { d, .. } => r == 2 && d >= 3,
        Table1Instance::Line6 { a, .. } => r == 2 && a >= 1,
        Table1Instance::Line7 { full, .. } => r == 2 && full,
        Table1Instance::Line8 { .. } | Table1Instance::Line9 { .. } | Table1Instance::Line10 { .. } => r == 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_examples() {
        let l2 = Table1Instance::Line2 { d: 2, q0: 3, a: 2, r: 2, j: 1 };
        assert!(table1_predicate(&l2).unwrap());
        let l2b = Table1Instance::Line2 { d: 2, q0: 7, a: 1, r: 3, j: 1 };
        assert!(!table1_predicate(&l2b).unwrap());
        let l4 = Table1Instance::Line4 { q0: 2, a: 2, r: 3, j: 1 };
        assert!(table1_predicate(&l4).unwrap());
        assert!(matches!(
            table1_predicate(&Table1Instance::Line3 { r: 4 }),
            Err(ClassifyError::RNotPrime(4))
        ));
    }

    #[test]
    fn odd_r_needs_field_automorphisms() {
        // PSL(2,16), r = 3 with o_3(2) = 2: needs (r-1) | a/j.
        assert!(table1_predicate(&Table1Instance::Line2 { d: 2, q0: 2, a: 4, r: 3, j: 1 }).unwrap());
        assert!(!table1_predicate(&Table1Instance::Line2 { d: 2, q0: 2, a: 4, r: 3, j: 4 }).unwrap());
        // PSL(2,9) with r = 2 only: (9-1)/2 = 4.
        assert!(!table1_predicate(&Table1Instance::Line2 { d: 2, q0: 3, a: 2, r: 3, j: 1 }).unwrap());
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(2, 3), Some(2));
        assert_eq!(multiplicative_order(13, 3), Some(1));
        assert_eq!(multiplicative_order(3, 7), Some(6));
        assert_eq!(multiplicative_order(7, 7), None);
    }

    #[test]
    fn unknown_line() {
        assert!(matches!(
            Table1Instance::from_parts(11, None, None, None, 2, None, None, None),
            Err(ClassifyError::UnknownLine(11))
        ));
    }
}
