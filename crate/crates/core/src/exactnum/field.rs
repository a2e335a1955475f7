use std::fmt;

use super::{Rat, Val};
use crate::error::{Error, Result};

/// Numerical data of the base field `L`: residue characteristic `p`,
/// ramification index `e` and residue degree `f`.
///
/// `val_L` is normalized by `val_L(p) = e`, so `val_L(q) = e·f` with `q = p^f`.
/// The number of embeddings `L → K` equals `[L:Q_p] = e·f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldData {
    pub p: u64,
    pub e: u32,
    pub f: u32,
}

impl FieldData {
    pub fn new(p: u64, e: u32, f: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} is not prime")));
        }
        if e == 0 || f == 0 {
            return Err(Error::InvalidField("e and f must be at least 1".into()));
        }
        if (f as f64) * (p as f64).log2() > 62.0 {
            return Err(Error::InvalidField(format!("q = {p}^{f} does not fit in 64 bits")));
        }
        Ok(FieldData { p, e, f })
    }

    /// `L = Q_p`.
    pub fn qp(p: u64) -> Self {
        FieldData::new(p, 1, 1).expect("p must be prime")
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.f)
    }

    /// `[L:Q_p] = e·f`.
    pub fn degree(&self) -> u32 {
        self.e * self.f
    }

    pub fn degree_rat(&self) -> Rat {
        Rat::from(self.degree() as i64)
    }

    pub fn embeddings(&self) -> usize {
        self.degree() as usize
    }

    /// `val_L(x) = e·v_p(x)` for a rational `x`.
    pub fn val_l(&self, x: &Rat) -> Val {
        match x.p_adic_valuation(self.p) {
            Some(v) => Val::Finite(Rat::int(v * self.e as i64)),
            None => Val::Infinite,
        }
    }

    /// The q-normalized valuation of a rational: `v_p(x)/f`, so `val(q) = 1`.
    pub fn val_q_rat(&self, x: &Rat) -> Val {
        match x.p_adic_valuation(self.p) {
            Some(v) => Val::Finite(Rat::new(v, self.f as i64)),
            None => Val::Infinite,
        }
    }

    /// Converts a q-normalized valuation into `val_L` units (factor `e·f`).
    pub fn q_to_l(&self, v: &Rat) -> Rat {
        v * self.degree_rat()
    }
}

impl fmt::Display for FieldData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} e={} f={}", self.p, self.e, self.f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_data() {
        assert!(FieldData::new(4, 1, 1).is_err());
        assert!(FieldData::new(3, 0, 1).is_err());
        assert!(FieldData::new(2, 1, 80).is_err());
    }

    #[test]
    fn valuations_are_normalized() {
        let l = FieldData::new(3, 2, 2).unwrap();
        assert_eq!(l.q(), 9);
        assert_eq!(l.degree(), 4);
        assert_eq!(l.val_l(&Rat::int(3)), Val::Finite(Rat::int(2)));
        assert_eq!(l.val_l(&Rat::int(9)), Val::Finite(Rat::int(4)));
        assert_eq!(l.val_q_rat(&Rat::int(9)), Val::Finite(Rat::one()));
        assert_eq!(l.val_q_rat(&Rat::int(3)), Val::Finite(Rat::half(1)));
    }
}
