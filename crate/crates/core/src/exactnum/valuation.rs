use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use super::Rat;

/// A valuation value: a rational number or `+∞` (the valuation of zero).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Val {
    Finite(Rat),
    Infinite,
}

impl Val {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Val::Finite(v) => Some(v),
            Val::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Val::Infinite)
    }

    pub fn unwrap(self) -> Rat {
        match self {
            Val::Finite(v) => v,
            Val::Infinite => panic!("unwrap() called on an infinite valuation"),
        }
    }

    pub fn min(self, other: Val) -> Val {
        std::cmp::min(self, other)
    }
}

impl From<Rat> for Val {
    fn from(v: Rat) -> Self {
        Val::Finite(v)
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Val::Infinite, Val::Infinite) => Ordering::Equal,
            (Val::Infinite, Val::Finite(_)) => Ordering::Greater,
            (Val::Finite(_), Val::Infinite) => Ordering::Less,
            (Val::Finite(a), Val::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Val {
    type Output = Val;
    fn add(self, rhs: Val) -> Val {
        match (self, rhs) {
            (Val::Finite(a), Val::Finite(b)) => Val::Finite(a + b),
            _ => Val::Infinite,
        }
    }
}

impl Add<&Rat> for Val {
    type Output = Val;
    fn add(self, rhs: &Rat) -> Val {
        match self {
            Val::Finite(a) => Val::Finite(a + rhs),
            Val::Infinite => Val::Infinite,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Finite(v) => write!(f, "{v}"),
            Val::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
