use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FieldData, Rat, Val};
use crate::error::{Error, Result};

/// `a + b·√q` with `√q` a formal symbol satisfying `(√q)² = q`.
///
/// Zero-testing is coefficient-wise. For odd `f` the q-valuation below is a
/// genuine valuation of `Q(√q)`; for even `f` it is the Gauss-type norm of the
/// formal ring, which is still submultiplicative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrtQ {
    pub a: Rat,
    pub b: Rat,
    pub q: u64,
}

impl QSqrtQ {
    pub fn new(a: Rat, b: Rat, q: u64) -> Self {
        assert!(q > 0, "q must be positive");
        QSqrtQ { a, b, q }
    }

    pub fn rational(a: Rat, q: u64) -> Self {
        QSqrtQ::new(a, Rat::zero(), q)
    }

    pub fn zero(q: u64) -> Self {
        QSqrtQ::rational(Rat::zero(), q)
    }

    pub fn one(q: u64) -> Self {
        QSqrtQ::rational(Rat::one(), q)
    }

    /// The element `√q`.
    pub fn sqrt_q(q: u64) -> Self {
        QSqrtQ::new(Rat::zero(), Rat::one(), q)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn scale(&self, c: &Rat) -> QSqrtQ {
        QSqrtQ::new(&self.a * c, &self.b * c, self.q)
    }

    /// `self · q^k` for an integer `k`.
    pub fn times_q_pow(&self, k: i64) -> QSqrtQ {
        self.scale(&Rat::int(self.q as i64).pow(k))
    }

    /// q-adic valuation with `val(q) = 1`, `val(√q) = 1/2`, units ignored:
    /// the minimum over the nonzero terms; `+∞` for zero.
    pub fn val_q(&self, field: &FieldData) -> Val {
        debug_assert_eq!(field.q(), self.q, "field does not match coefficient context");
        let va = field.val_q_rat(&self.a);
        let vb = field.val_q_rat(&self.b) + &Rat::half(1);
        va.min(vb)
    }

    /// Parses `a+b*sqrtq`, or a bare rational `a`.
    pub fn parse(s: &str, q: u64) -> Result<Self> {
        let s = s.trim();
        if let Some(head) = s.strip_suffix("*sqrtq") {
            let (a, b) = head
                .rsplit_once('+')
                .ok_or_else(|| Error::parse(format!("expected `a+b*sqrtq`, got `{s}`")))?;
            Ok(QSqrtQ::new(a.parse()?, b.parse()?, q))
        } else {
            Ok(QSqrtQ::rational(s.parse()?, q))
        }
    }

    fn check(&self, other: &QSqrtQ) {
        assert_eq!(self.q, other.q, "mixing different q contexts");
    }
}

impl fmt::Display for QSqrtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*sqrtq", self.a, self.b)
    }
}

impl fmt::Debug for QSqrtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (q={})", self, self.q)
    }
}

impl Add for &QSqrtQ {
    type Output = QSqrtQ;
    fn add(self, rhs: &QSqrtQ) -> QSqrtQ {
        self.check(rhs);
        QSqrtQ::new(&self.a + &rhs.a, &self.b + &rhs.b, self.q)
    }
}

impl Sub for &QSqrtQ {
    type Output = QSqrtQ;
    fn sub(self, rhs: &QSqrtQ) -> QSqrtQ {
        self.check(rhs);
        QSqrtQ::new(&self.a - &rhs.a, &self.b - &rhs.b, self.q)
    }
}

impl Mul for &QSqrtQ {
    type Output = QSqrtQ;
    fn mul(self, rhs: &QSqrtQ) -> QSqrtQ {
        self.check(rhs);
        let q = Rat::int(self.q as i64);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * q;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QSqrtQ::new(a, b, self.q)
    }
}

impl Neg for &QSqrtQ {
    type Output = QSqrtQ;
    fn neg(self) -> QSqrtQ {
        QSqrtQ::new(-&self.a, -&self.b, self.q)
    }
}
