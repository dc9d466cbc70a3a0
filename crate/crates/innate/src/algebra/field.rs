use super::AlgebraError;

/// Largest supported field order; log and exp tables are stored in full.
pub const MAX_FIELD_ORDER: u64 = 1 << 24;

/// An element of GF(p^a), encoded as the integer whose base-p digits are its coefficients
/// in the polynomial basis `1, x, ..., x^(a-1)`.
pub type Elem = u32;

/// GF(p^a) with log/exp tables for a fixed primitive element.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    a: u32,
    q: u32,
    modulus: Vec<u32>,
    omega: Elem,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

fn is_prime_u32(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over GF(p), coefficients low degree first, no trailing zeros.
mod poly {
    pub fn trim(mut v: Vec<u32>) -> Vec<u32> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn inv_mod(x: u32, p: u32) -> u32 {
        (1..p).find(|y| (x as u64 * *y as u64) % p as u64 == 1).expect("nonzero mod prime")
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while r.len() > dm {
            let k = r.len() - 1 - dm;
            let c = (*r.last().unwrap() as u64 * lead_inv) % p as u64;
            for (i, &mi) in m.iter().enumerate() {
                let sub = (c * mi as u64) % p as u64;
                r[k + i] = ((r[k + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        rem(&out.into_iter().map(|c| c as u32).collect::<Vec<_>>(), m, p)
    }

    pub fn pow_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut result = vec![1];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                result = mul_mod(&result, &b, m, p);
            }
            b = mul_mod(&b, &b, m, p);
            e >>= 1;
        }
        result
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }
}

/// Rabin's test: `m` monic of degree `a` is irreducible over GF(p) iff `x^(p^a) = x mod m`
/// and `gcd(x^(p^(a/l)) - x, m) = 1` for every prime `l` dividing `a`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let a = (m.len() - 1) as u32;
    let x = vec![0, 1];
    let frob_power = |k: u32| {
        let mut y = x.clone();
        for _ in 0..k {
            y = poly::pow_mod(&y, p as u64, m, p);
        }
        y
    };
    if poly::sub(&frob_power(a), &x, p) != Vec::<u32>::new() {
        return false;
    }
    prime_factors(a as u64).into_iter().all(|l| {
        let d = poly::sub(&frob_power(a / l as u32), &x, p);
        poly::gcd(&d, m, p).len() == 1
    })
}

impl FiniteField {
    /// GF(p^a) with the least monic irreducible modulus and least primitive element, both in
    /// the integer order of coefficient codes.
    pub fn new(p: u32, a: u32) -> Result<Self, AlgebraError> {
        if !is_prime_u32(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if a == 0 {
            return Err(AlgebraError::InvalidDegree(0));
        }
        let q64 = (p as u64).checked_pow(a).filter(|&q| q <= MAX_FIELD_ORDER);
        let q = q64.ok_or(AlgebraError::FieldTooLarge { p, a })? as u32;
        let digits = |code: u32| -> Vec<u32> {
            let mut c = code;
            (0..a)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect()
        };
        let modulus = (0..q)
            .map(|low| {
                let mut m = digits(low);
                m.push(1);
                m
            })
            .find(|m| a == 1 || is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let omega = (1..q)
            .find(|&c| {
                let g = poly::trim(digits(c));
                factors
                    .iter()
                    .all(|&l| poly::pow_mod(&g, order / l, &modulus, p) != vec![1])
            })
            .expect("multiplicative group is cyclic");
        let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &d| acc * p + d);
        let omega_poly = poly::trim(digits(omega));
        let mut exp = Vec::with_capacity(2 * (q as usize - 1));
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![1u32];
        for k in 0..q - 1 {
            let code = encode(&cur);
            exp.push(code);
            log[code as usize] = k;
            cur = poly::mul_mod(&cur, &omega_poly, &modulus, p);
        }
        let again = exp.clone();
        exp.extend(again);
        Ok(FiniteField {
            p,
            a,
            q,
            modulus,
            omega,
            exp,
            log,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.a
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first, ending with the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> Elem {
        self.omega
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        if self.p == 2 {
            return x ^ y;
        }
        if self.a == 1 {
            return (x + y) % self.p;
        }
        let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
        while x > 0 || y > 0 {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, x: Elem) -> Elem {
        if self.p == 2 {
            return x;
        }
        let (mut x, mut out, mut place) = (x, 0, 1);
        while x > 0 {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x == 0 || y == 0 {
            return 0;
        }
        self.exp[(self.log[x as usize] + self.log[y as usize]) as usize]
    }

    pub fn inv(&self, x: Elem) -> Option<Elem> {
        (x != 0).then(|| self.exp[((self.q - 1 - self.log[x as usize]) % (self.q - 1)) as usize])
    }

    pub fn div(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.inv(y).map(|yi| self.mul(x, yi))
    }

    /// `omega^k` for any integer `k`.
    pub fn exp(&self, k: i64) -> Elem {
        self.exp[k.rem_euclid(self.q as i64 - 1) as usize]
    }

    /// Discrete logarithm to base `omega`; `None` for zero.
    pub fn dlog(&self, x: Elem) -> Option<u32> {
        (x != 0).then(|| self.log[x as usize])
    }

    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        if x == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let l = self.log[x as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// The field automorphism `x -> x^(p^i)`.
    pub fn frobenius(&self, x: Elem, i: u32) -> Elem {
        self.pow(x, (self.p as u64).pow(i % self.a))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: Elem) -> Option<u64> {
        let l = self.dlog(x)? as u64;
        let n = self.q as u64 - 1;
        Some(n / gcd_u64(l, n))
    }

    /// The element with coefficient list `coeffs` (constant term first).
    pub fn from_coefficients(&self, coeffs: &[u32]) -> Elem {
        coeffs.iter().rev().fold(0, |acc, &d| acc * self.p + d % self.p)
    }

    /// The integer `n` reduced into the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.primitive(), 1);
        let f3 = FiniteField::new(3, 1).unwrap();
        assert_eq!(f3.primitive(), 2);
        let f7 = FiniteField::new(7, 1).unwrap();
        assert_eq!(f7.primitive(), 3);
    }

    #[test]
    fn gf4_uses_the_only_irreducible_quadratic() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let w = f.primitive();
        assert_eq!(f.pow(w, 3), 1);
        assert_eq!(f.frobenius(w, 1), f.mul(w, w));
    }

    #[test]
    fn gf9_modulus_and_primitive() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(f.element_order(f.primitive()), Some(8));
        assert_eq!(f.primitive(), f.from_coefficients(&[1, 1]));
    }

    #[test]
    fn tables_are_consistent() {
        let f = FiniteField::new(5, 2).unwrap();
        for x in 1..f.order() {
            assert_eq!(f.exp(f.dlog(x).unwrap() as i64), x);
            assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
            assert_eq!(f.add(x, f.neg(x)), 0);
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(FiniteField::new(4, 1), Err(AlgebraError::NotPrime(4))));
        assert!(matches!(FiniteField::new(2, 40), Err(AlgebraError::FieldTooLarge { .. })));
    }
}
