//! Weight conversions, the valuation
//! inequalities, central-character integrality, existence of admissible
//! filtrations and membership in the normalized affinoid.
//!
//! Sign conventions. `ζ_j` are eigenvalues of an arithmetic Frobenius; the
//! φ-module has `φ^f`-eigenvalues `ζ_j^{-1}`, so `slope_j = −val_L(ζ_j)`.
//! Weil–Deligne data store geometric Frobenius, whose valuations are the
//! slopes directly.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{FieldData, Rat};
use crate::ineq::{all_hold, Inequality};
use crate::isocrystal::{
    admissible_by_inequalities, admissible_inequalities, block_existence_criterion, block_polygons,
    build_admissible_filtration, steinberg_filtration, weak_admissible, Filtration, PhiModule, Polygon,
    SlopeBlock,
};
use crate::rootdata::{eta_l, HighestWeight, RootDatum, WeightVec};
use crate::weildeligne::{block_decompose, mod_of_wd, WdBlock, WdRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    Undecided,
}

impl Outcome {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    /// Fail dominates, then undecided.
    pub fn combine(self, other: Outcome) -> Outcome {
        match (self, other) {
            (Outcome::Fail, _) | (_, Outcome::Fail) => Outcome::Fail,
            (Outcome::Undecided, _) | (_, Outcome::Undecided) => Outcome::Undecided,
            _ => Outcome::Pass,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Undecided => "undecided",
        })
    }
}

/// `i_j = −a_{d+2−j} − (d+1−j)` for a nondecreasing weight `a_1 ≤ ⋯ ≤ a_{d+1}`.
pub fn jumps_from_weights(a: &[Rat]) -> Result<Vec<Rat>> {
    if a.is_empty() {
        return Err(Error::InvalidWeights("empty weight".into()));
    }
    if a.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidWeights("weights must be nondecreasing".into()));
    }
    let d = a.len() - 1;
    Ok((1..=d + 1).map(|j| -&a[d + 1 - j] - Rat::from(d + 1 - j)).collect())
}

/// `a_j = −i_{d+2−j} − (j−1)` for strictly increasing jumps.
pub fn weights_from_jumps(i: &[Rat]) -> Result<Vec<Rat>> {
    if i.is_empty() {
        return Err(Error::InvalidWeights("empty jump list".into()));
    }
    if i.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidWeights("jumps must increase strictly".into()));
    }
    let d = i.len() - 1;
    Ok((1..=d + 1).map(|j| -&i[d + 1 - j] - Rat::from(j - 1)).collect())
}

/// The jump filtration (without flags) attached to highest weights.
pub fn jump_filtration(weights: &[Vec<Rat>]) -> Result<Filtration> {
    let jumps = weights.iter().map(|a| jumps_from_weights(a)).collect::<Result<Vec<_>>>()?;
    Filtration::from_jumps(&jumps)
}

fn check_weight_shape(zeta_len: usize, a: &[Vec<Rat>], field: &FieldData) -> Result<()> {
    if a.len() != field.embeddings() {
        return Err(Error::DimensionMismatch(format!(
            "{} embedding weights but [L:Q_p] = {}",
            a.len(),
            field.embeddings()
        )));
    }
    if a.iter().any(|w| w.len() != zeta_len) {
        return Err(Error::DimensionMismatch(format!("weights must have length {zeta_len}")));
    }
    Ok(())
}

/// Tail sums of the sorted `val_L(ζ)` against weight tail sums:
/// `Σ_{j≥i} val ζ_{τ(j)} ≤ Σ_{j≥i} Σ_σ a_{j,σ} + [L:Q_p](d(d+1) − (i−2)(i−1))/2`
/// for `2 ≤ i ≤ d+1`, and equality for `i = 1`.
pub fn bs_inequalities(zeta_vals: &[Rat], a: &[Vec<Rat>], field: &FieldData) -> Result<Vec<Inequality>> {
    check_weight_shape(zeta_vals.len(), a, field)?;
    let n = zeta_vals.len();
    let d = n as i64 - 1;
    let ef = field.degree_rat();
    let mut vals = zeta_vals.to_vec();
    vals.sort();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let lhs: Rat = vals[i - 1..].iter().sum();
        let weights: Rat = a.iter().flat_map(|w| w[i - 1..].iter()).sum();
        let k = i as i64;
        let rhs = weights + &ef * Rat::new(d * (d + 1) - (k - 2) * (k - 1), 2);
        let label = format!("tail {i}");
        out.push(if i == 1 { Inequality::eq(label, lhs, rhs) } else { Inequality::le(label, lhs, rhs) });
    }
    Ok(out)
}

/// The Galois-side input: arithmetic Frobenius valuations, or Weil–Deligne data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaloisSide {
    ZetaVals(Vec<Rat>),
    Wd(WdRep),
}

impl GaloisSide {
    pub fn dim(&self) -> usize {
        match self {
            GaloisSide::ZetaVals(z) => z.len(),
            GaloisSide::Wd(r) => r.dim(),
        }
    }

    /// `val_L det r(arithmetic Frobenius) = Σ_j val_L(ζ_j)`.
    pub fn det_arith_valuation(&self) -> Rat {
        match self {
            GaloisSide::ZetaVals(z) => z.iter().sum(),
            GaloisSide::Wd(r) => -r.det_valuation(),
        }
    }

    /// Arithmetic Frobenius valuations with multiplicity when `N = 0`.
    pub fn zeta_vals(&self) -> Option<Vec<Rat>> {
        match self {
            GaloisSide::ZetaVals(z) => Some(z.clone()),
            GaloisSide::Wd(r) if !r.has_chain() => Some(
                r.blocks()
                    .iter()
                    .flat_map(|b| match b {
                        WdBlock::Frobenius { valuation, multiplicity, .. } => {
                            std::iter::repeat_n(-valuation, *multiplicity)
                        }
                        WdBlock::Chain { .. } => unreachable!("no chains"),
                    })
                    .collect(),
            ),
            GaloisSide::Wd(_) => None,
        }
    }
}

/// `val_L χ_ρ(π_L) + val_L χ_π(π_L) = 0`, i.e.
/// `Σ_σ Σ_j a_{j,σ} − val_L det r(Frob_arith) + [L:Q_p] d(d+1)/2 = 0`.
pub fn central_char_integral(galois: &GaloisSide, a: &[Vec<Rat>], field: &FieldData) -> Result<Inequality> {
    let n = galois.dim();
    check_weight_shape(n, a, field)?;
    let d = n as i64 - 1;
    let chi_rho: Rat = a.iter().flatten().sum();
    let chi_pi = -galois.det_arith_valuation() + field.degree_rat() * Rat::new(d * (d + 1), 2);
    Ok(Inequality::eq("central character valuation", chi_rho + chi_pi, Rat::zero()))
}

/// An explicit admissible pair: the module and its filtration with flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub module: PhiModule,
    pub filtration: Filtration,
}

#[derive(Debug, Clone)]
pub struct Existence {
    pub outcome: Outcome,
    pub route: &'static str,
    pub trace: Vec<Inequality>,
    pub witness: Option<Witness>,
    pub polygons: Option<(Polygon, Polygon)>,
    pub notes: Vec<String>,
}

impl Existence {
    fn undecided(route: &'static str, note: String) -> Self {
        Existence { outcome: Outcome::Undecided, route, trace: vec![], witness: None, polygons: None, notes: vec![note] }
    }
}

/// Merges equal slopes into single Jordan blocks.
fn jordan_module(field: FieldData, slopes: &[Rat]) -> Result<PhiModule> {
    let mut sorted = slopes.to_vec();
    sorted.sort();
    let mut blocks: Vec<SlopeBlock> = Vec::new();
    for s in sorted {
        match blocks.last_mut() {
            Some(b) if b.slope == s => {
                b.multiplicity += 1;
                b.jordan = vec![b.multiplicity];
            }
            _ => blocks.push(SlopeBlock::chain(s, 1)),
        }
    }
    PhiModule::new(field, blocks)
}

/// Decides whether some φ-module with the given Galois data carries an
/// admissible filtration with the given jumps, attaching a verified witness
/// when a construction is available.
pub fn exists_admissible(field: &FieldData, galois: &GaloisSide, jumps: &Filtration) -> Result<Existence> {
    if jumps.embeddings() != field.embeddings() {
        return Err(Error::DimensionMismatch(format!(
            "{} embeddings in the jumps but [L:Q_p] = {}",
            jumps.embeddings(),
            field.embeddings()
        )));
    }
    if jumps.dim()? != galois.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} jumps per embedding for a representation of dimension {}",
            jumps.dim()?,
            galois.dim()
        )));
    }
    let field = *field;

    if let Some(zeta) = galois.zeta_vals() {
        let slopes: Vec<Rat> = zeta.iter().map(|v| -v).collect();
        let labelled = PhiModule::from_slopes(field, &slopes)?;
        let trace = admissible_inequalities(&labelled, jumps)?;
        let polygons = Some((labelled.newton_polygon(), jumps.hodge_polygon()?));
        if !all_hold(&trace) {
            return Ok(Existence {
                outcome: Outcome::Fail,
                route: "partial-sum inequalities",
                trace,
                witness: None,
                polygons,
                notes: vec![],
            });
        }
        let filtration = build_admissible_filtration(&labelled, jumps)?;
        let mut notes = Vec::new();
        let mut module = labelled.clone();
        let jordan = jordan_module(field, &slopes)?;
        let mut candidates = vec![labelled];
        if jordan.blocks().len() < slopes.len() {
            candidates.push(jordan.clone());
            module = jordan;
        }
        for m in &candidates {
            match weak_admissible(m, &filtration) {
                Ok(true) => {}
                Ok(false) => {
                    return Ok(Existence::undecided(
                        "partial-sum inequalities",
                        "constructed filtration rejected by the subobject oracle".into(),
                    ))
                }
                Err(Error::Unsupported(why)) => notes.push(format!("witness not re-verified: {why}")),
                Err(e) => return Err(e),
            }
        }
        return Ok(Existence {
            outcome: Outcome::Pass,
            route: "partial-sum inequalities",
            trace,
            witness: Some(Witness { module, filtration }),
            polygons,
            notes,
        });
    }

    let GaloisSide::Wd(rep) = galois else { unreachable!("zeta values handled above") };
    let central = Inequality::eq("t_H == t_N", jumps.t_h(), rep.det_valuation());
    match mod_of_wd(rep) {
        Ok(module) if module.steinberg_data().is_some() => {
            let holds = central.holds();
            if !holds {
                return Ok(Existence {
                    outcome: Outcome::Fail,
                    route: "Steinberg chain",
                    trace: vec![central],
                    witness: None,
                    polygons: None,
                    notes: vec![],
                });
            }
            let filtration = steinberg_filtration(&module, jumps)?;
            if weak_admissible(&module, &filtration)? {
                Ok(Existence {
                    outcome: Outcome::Pass,
                    route: "Steinberg chain",
                    trace: vec![central],
                    witness: Some(Witness { module, filtration }),
                    polygons: None,
                    notes: vec![],
                })
            } else {
                Ok(Existence::undecided(
                    "Steinberg chain",
                    "central equality holds but the chain filtration is not admissible \
                     (jumps are not integrally spaced)"
                        .into(),
                ))
            }
        }
        Ok(_) => unreachable!("N = 0 data handled above"),
        Err(Error::Unsupported(_)) => {
            let blocks = block_decompose(rep);
            let (newton, hodge) = block_polygons(&blocks, jumps)?;
            let ok = block_existence_criterion(&blocks, jumps)?;
            let mut trace = vec![central];
            for (x, y) in newton.vertices().iter().skip(1) {
                trace.push(Inequality::le(format!("block polygon at {x}"), hodge.value_at(x), y.clone()));
            }
            Ok(Existence {
                outcome: Outcome::from_bool(ok),
                route: "block polygon",
                trace,
                witness: None,
                polygons: Some((newton, hodge)),
                notes: vec!["no explicit witness is constructed for direct sums of chains".into()],
            })
        }
        Err(e) => Err(e),
    }
}

/// Result of the normalized-affinoid membership test.
#[derive(Debug, Clone)]
pub struct AffinoidCheck {
    pub member: bool,
    pub dominant: WeightVec,
    pub bound: WeightVec,
    /// Simple-root coefficients of `bound − dominant` (non-negative on membership).
    pub coefficients: Option<Vec<Rat>>,
    pub cross_checks: Vec<(String, bool)>,
}

impl RootDatum {
    /// Whether this is the `GL_n` datum with the nondecreasing convention.
    pub fn is_gl(&self) -> bool {
        RootDatum::gl(self.rank()).is_ok_and(|g| g.simple_roots() == self.simple_roots() && g.simple_coroots() == self.simple_coroots())
    }
}

/// `ζ ∈ T'_{ξ,norm}(K)`, i.e. `val(ζ)^dom ≤ η_L + ξ_L`, with the dominance
/// certificate; for `GL_n` also cross-checked against the inequality and
/// polygon formulations after shifting by `[L:Q_p]·d/2`.
pub fn theorem63_check(
    datum: &RootDatum,
    field: &FieldData,
    xi: &HighestWeight,
    zeta_vals: &[Rat],
) -> Result<AffinoidCheck> {
    let dominant = datum.dominant_rep(zeta_vals)?;
    let bound: WeightVec =
        eta_l(datum, field).iter().zip(xi.xi_l()).map(|(e, x)| e + x).collect();
    let diff: Vec<Rat> = bound.iter().zip(&dominant).map(|(b, z)| b - z).collect();
    let coefficients = datum.simple_root_coefficients(&diff)?;
    let member = coefficients.as_ref().is_some_and(|c| c.iter().all(|x| !x.is_negative()));

    let mut cross_checks = Vec::new();
    if datum.is_gl() {
        let n = datum.rank();
        let half_d = Rat::new(n as i64 - 1, 2);
        let weights = xi.per_embedding();
        let shifted: Vec<Rat> = zeta_vals.iter().map(|v| v + field.degree_rat() * &half_d).collect();
        let bs = all_hold(&bs_inequalities(&shifted, weights, field)?);
        cross_checks.push(("valuation inequalities".to_string(), bs == member));
        let jumps: Vec<Vec<Rat>> = weights
            .iter()
            .map(|a| Ok(jumps_from_weights(a)?.into_iter().map(|i| i + &half_d).collect()))
            .collect::<Result<_>>()?;
        let slopes: Vec<Rat> = zeta_vals.iter().map(|v| -v).collect();
        let module = PhiModule::from_slopes(*field, &slopes)?;
        let poly = admissible_by_inequalities(&module, &Filtration::from_jumps(&jumps)?)?;
        cross_checks.push(("Newton/Hodge partial sums".to_string(), poly == member));
    }
    Ok(AffinoidCheck { member, dominant, bound, coefficients, cross_checks })
}
