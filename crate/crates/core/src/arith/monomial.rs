use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 12]>;

/// A power product over a fixed, ordered list of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Drops the exponent of variable `i` by one.
    pub fn lower(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        m.degree -= 1;
        Some(m)
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.degree = m.degree - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }

    /// Re-embeds into a ring whose variable `k` is this ring's variable `map[k]` (or absent).
    pub fn remap(&self, map: &[Option<usize>]) -> Monomial {
        let exps: Exponents = map.iter().map(|s| s.map(|i| self.exps[i]).unwrap_or(0)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// 32-bit divisibility mask: bit set for each (wrapped) variable with positive exponent.
    #[inline]
    pub fn mask(&self) -> u32 {
        let mut m = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 32);
            }
        }
        m
    }
}

/// Graded reverse lexicographic comparison with `x0 > x1 > ...`.
pub fn cmp_grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Pure lexicographic comparison with `x0 > x1 > ...`.
pub fn cmp_lex(a: &[u16], b: &[u16]) -> Ordering {
    a.cmp(b)
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_is_cached_sum() {
        let m = Monomial::from_exponents(&[2, 0, 3]);
        assert_eq!(m.degree(), 5);
        let p = m.mul(&Monomial::var(3, 1));
        assert_eq!(p.degree(), 6);
        assert_eq!(p.exponents(), &[2, 1, 3]);
        assert_eq!(m.lcm(&Monomial::from_exponents(&[1, 4, 0])).degree(), 9);
    }

    #[test]
    fn division() {
        let a = Monomial::from_exponents(&[1, 1, 0]);
        let b = Monomial::from_exponents(&[2, 1, 1]);
        assert_eq!(a.divide_into(&b).unwrap().exponents(), &[1, 0, 1]);
        assert!(b.divide_into(&a).is_none());
    }

    #[test]
    fn grevlex_order() {
        // x0 > x1 > x2 ; x1^2 > x0*x2 in grevlex
        assert_eq!(cmp_grevlex(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&[1, 0, 0], &[0, 1, 0]), Ordering::Greater);
        assert_eq!(cmp_grevlex(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
        assert_eq!(cmp_lex(&[0, 2, 0], &[1, 0, 1]), Ordering::Less);
    }
}
