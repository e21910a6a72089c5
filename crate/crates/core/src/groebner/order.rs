use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::arith::monomial::{cmp_grevlex, cmp_lex};
use crate::arith::Monomial;

/// Monomial order on a ring whose variables are ranked `x0 > x1 > ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Grevlex on the first `k` variables, ties broken by grevlex on the rest.
    /// Any monomial involving the first block beats every monomial free of it.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exponents(a.exponents(), b.exponents())
    }

    pub fn cmp_exponents(&self, a: &[u16], b: &[u16]) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                cmp_grevlex(&a[..k], &b[..k]).then_with(|| cmp_grevlex(&a[k..], &b[k..]))
            }
        }
    }

    /// True when the order is degree-compatible, so leading terms of homogeneous
    /// polynomials carry the Hilbert function.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}
