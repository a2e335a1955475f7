//! Exact inequalities with a label, kept for reporting.

use std::fmt;

use crate::exactnum::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub label: String,
    pub lhs: Rat,
    pub relation: Relation,
    pub rhs: Rat,
}

impl Inequality {
    pub fn le(label: impl Into<String>, lhs: Rat, rhs: Rat) -> Self {
        Inequality { label: label.into(), lhs, relation: Relation::Le, rhs }
    }

    pub fn eq(label: impl Into<String>, lhs: Rat, rhs: Rat) -> Self {
        Inequality { label: label.into(), lhs, relation: Relation::Eq, rhs }
    }

    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Le => self.lhs <= self.rhs,
            Relation::Eq => self.lhs == self.rhs,
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = match self.relation {
            Relation::Le => "<=",
            Relation::Eq => "==",
        };
        let status = if self.holds() { "ok" } else { "FAIL" };
        write!(f, "{}: {} {} {} [{}]", self.label, self.lhs, rel, self.rhs, status)
    }
}

pub fn all_hold(ineqs: &[Inequality]) -> bool {
    ineqs.iter().all(Inequality::holds)
}
