//! The group ring `K[Λ]` of the cocharacter lattice, its twisted Weyl
//! action and the norm `‖·‖_ξ`, all tracked through valuations.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{FieldData, QSqrtQ, Rat, Val};
use crate::rootdata::{in_vxi, HighestWeight, RootDatum, WeightVec, WeylElement};

pub type Cochar = Vec<i64>;

/// A finitely supported sum `Σ c_λ λ` with coefficients in `Q(√q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElem {
    q: u64,
    terms: BTreeMap<Cochar, QSqrtQ>,
}

impl GroupRingElem {
    pub fn zero(q: u64) -> Self {
        GroupRingElem { q, terms: BTreeMap::new() }
    }

    pub fn monomial(l: Cochar, c: QSqrtQ) -> Self {
        let mut x = GroupRingElem::zero(c.q);
        x.add_term(l, c);
        x
    }

    pub fn from_terms(q: u64, terms: impl IntoIterator<Item = (Cochar, QSqrtQ)>) -> Self {
        let mut x = GroupRingElem::zero(q);
        for (l, c) in terms {
            x.add_term(l, c);
        }
        x
    }

    pub fn add_term(&mut self, l: Cochar, c: QSqrtQ) {
        assert_eq!(c.q, self.q, "coefficient from a different q context");
        let sum = match self.terms.remove(&l) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(l, sum);
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Cochar, &QSqrtQ)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    /// Convolution product: `λ · μ = λ + μ`.
    pub fn mul(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = GroupRingElem::zero(self.q);
        for (l, c) in &self.terms {
            for (m, d) in &other.terms {
                let lm = l.iter().zip(m).map(|(a, b)| a + b).collect();
                out.add_term(lm, c * d);
            }
        }
        out
    }
}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c})·{l:?}")).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn pair(z: &[Rat], l: &[i64]) -> Rat {
    z.iter().zip(l).map(|(x, &y)| x * Rat::int(y)).sum()
}

/// `val_q(δ^{1/2}(λ)) = ⟨η, λ⟩`.
pub fn delta_half_val(datum: &RootDatum, l: &[i64]) -> Rat {
    pair(&datum.half_sum_positive_roots(), l)
}

/// `val_q γ(w, λ) = val_q δ^{1/2}(wλ) − val_q δ^{1/2}(λ)`; always an integer.
pub fn cocycle_gamma_val(datum: &RootDatum, w: &WeylElement, l: &[i64]) -> Rat {
    delta_half_val(datum, &w.act_cochar(l)) - delta_half_val(datum, l)
}

fn gamma_int(datum: &RootDatum, w: &WeylElement, l: &[i64]) -> i64 {
    cocycle_gamma_val(datum, w, l)
        .to_i64()
        .expect("λ − wλ lies in the coroot lattice, on which η is integral")
}

/// `w·(Σ c_λ λ) = Σ γ(w,λ) c_λ (wλ)`, with `γ(w,λ) = q^{val_q γ(w,λ)}`.
pub fn twisted_action(datum: &RootDatum, w: &WeylElement, x: &GroupRingElem) -> GroupRingElem {
    GroupRingElem::from_terms(
        x.q,
        x.terms.iter().map(|(l, c)| (w.act_cochar(l), c.times_q_pow(gamma_int(datum, w, l)))),
    )
}

/// Valuation (in `val_L` units) of `‖x‖_ξ`: the minimum over the support of
/// `val_L(c_λ) + val_L(γ(w,λ)) + ⟨ξ_L, wλ⟩` with `wλ` antidominant.
/// `+∞` for `x = 0`.
pub fn norm_xi_val(datum: &RootDatum, field: &FieldData, xi: &HighestWeight, x: &GroupRingElem) -> Result<Val> {
    if x.q != field.q() {
        return Err(Error::Precondition(format!(
            "group ring over q = {} used with a field of q = {}",
            x.q,
            field.q()
        )));
    }
    let xi_l = xi.xi_l();
    let ef = field.degree_rat();
    let mut best = Val::Infinite;
    for (l, c) in &x.terms {
        if l.len() != datum.rank() {
            return Err(Error::DimensionMismatch(format!(
                "cocharacter of length {} for a datum of rank {}",
                l.len(),
                datum.rank()
            )));
        }
        let (w, wl) = datum.antidominant_cochar(l);
        let v = c.val_q(field).unwrap() * &ef + cocycle_gamma_val(datum, &w, l) * &ef + pair(&xi_l, &wl);
        best = best.min(Val::Finite(v));
    }
    Ok(best)
}

/// A point `ζ` of the dual torus, through its valuation vector `val(ζ) ∈ V_R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPoint {
    pub val: WeightVec,
}

/// Whether the character attached to `ζ` lies in `T'_ξ` (or `T'_{ξ,norm}`).
pub fn spectrum_member(
    datum: &RootDatum,
    field: &FieldData,
    xi: &HighestWeight,
    zeta: &SpectralPoint,
    normalized: bool,
) -> Result<bool> {
    in_vxi(datum, field, xi, &zeta.val, normalized)
}
