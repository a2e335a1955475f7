//! Runs the checks on an instance and renders reports in the instance format.

use std::fmt::Write as _;

use bsc_core::bsc::{
    bs_inequalities, central_char_integral, exists_admissible, jumps_from_weights, theorem63_check, Existence,
    GaloisSide, Outcome, Witness,
};
use bsc_core::exactnum::{fmt_rat_list, Rat};
use bsc_core::ineq::{all_hold, Inequality};
use bsc_core::isocrystal::{block_polygons, polygon_dominates, Filtration, PhiModule, Polygon};
use bsc_core::rootdata::{eta_l, in_hull, in_vxi, HighestWeight, RootDatum};
use bsc_core::satake::norm_xi_val;
use bsc_core::weildeligne::{block_decompose, mod_of_wd};
use bsc_core::{Error, Result};

use crate::instance::{Instance, Weights};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub id: String,
    pub outcome: Outcome,
    pub text: String,
}

struct Builder {
    text: String,
    outcome: Outcome,
}

impl Builder {
    fn new(inst: &Instance) -> Self {
        Builder { text: inst.to_string(), outcome: Outcome::Pass }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn check(&mut self, name: &str, outcome: Outcome) {
        self.outcome = self.outcome.combine(outcome);
        self.line(format!("check: {name} {outcome}"));
    }

    fn ineqs(&mut self, ineqs: &[Inequality]) {
        for i in ineqs {
            self.line(format!("  {i}"));
        }
    }

    fn finish(mut self, id: &str) -> Report {
        let o = self.outcome;
        self.line(format!("verdict: {o}"));
        Report { id: id.to_string(), outcome: o, text: self.text }
    }
}

fn fmt_usizes(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn write_witness(b: &mut Builder, w: &Witness) {
    for block in w.module.blocks() {
        b.line(format!(
            "  witness-block: slope={} mult={} jordan={}",
            block.slope,
            block.multiplicity,
            fmt_usizes(&block.jordan)
        ));
    }
    for (s, e) in w.filtration.per_embedding().iter().enumerate() {
        let jumps = e.jumps.iter().map(|(j, d)| format!("{j}:{d}")).collect::<Vec<_>>().join(",");
        let mut line = format!("  witness-filtration: sigma={} jumps={jumps}", s + 1);
        if let Some(flag) = &e.flag {
            let rows: Vec<String> = flag.iter().map(|r| format!("({})", fmt_rat_list(r))).collect();
            let _ = write!(line, " basis={}", rows.join(","));
        }
        b.line(line);
    }
}

fn write_existence(b: &mut Builder, e: &Existence) {
    b.check("exists-admissible", e.outcome);
    b.line(format!("  route: {}", e.route));
    b.ineqs(&e.trace);
    if let Some(w) = &e.witness {
        write_witness(b, w);
    }
    for n in &e.notes {
        b.line(format!("  note: {n}"));
    }
}

/// The jump filtration of an instance: given directly, or converted from
/// highest weights.
pub fn instance_jumps(inst: &Instance) -> Result<Filtration> {
    match &inst.weights {
        Some(Weights::Jumps(i)) => Filtration::from_jumps(i),
        Some(Weights::Highest(a)) => {
            Filtration::from_jumps(&a.iter().map(|w| jumps_from_weights(w)).collect::<Result<Vec<_>>>()?)
        }
        None => Err(Error::Precondition(format!("instance `{}` has no weights", inst.id))),
    }
}

fn galois(inst: &Instance) -> Result<&GaloisSide> {
    inst.galois
        .as_ref()
        .ok_or_else(|| Error::Precondition(format!("instance `{}` has no zeta-vals or wd lines", inst.id)))
}

fn affinoid_section(b: &mut Builder, datum: &RootDatum, inst: &Instance, weights: &[Vec<Rat>], point: &[Rat]) -> Result<()> {
    let xi = HighestWeight::new(datum, &inst.field, weights.to_vec())?;
    let c = theorem63_check(datum, &inst.field, &xi, point)?;
    let agree = c.cross_checks.iter().all(|(_, ok)| *ok);
    b.check("affinoid", if agree { Outcome::from_bool(c.member) } else { Outcome::Fail });
    b.line(format!("  point: {}", fmt_rat_list(point)));
    b.line(format!("  dominant: {}", fmt_rat_list(&c.dominant)));
    b.line(format!("  bound: {}", fmt_rat_list(&c.bound)));
    match &c.coefficients {
        Some(k) => b.line(format!("  root-coefficients: {}", fmt_rat_list(k))),
        None => b.line("  root-coefficients: none (difference leaves the root lattice span)"),
    }
    b.line(format!("  member: {}", c.member));
    for (name, ok) in &c.cross_checks {
        b.line(format!("  cross-check {name}: {}", if *ok { "agree" } else { "DISAGREE" }));
    }
    Ok(())
}

/// All applicable checks: central character, valuation inequalities,
/// existence of an admissible filtration and affinoid membership.
pub fn check_instance(inst: &Instance) -> Result<Report> {
    let datum = inst.datum()?;
    let galois = galois(inst)?;
    let mut b = Builder::new(inst);

    if !datum.is_gl() {
        let GaloisSide::ZetaVals(z) = galois else {
            return Err(Error::Precondition("Weil-Deligne data needs a GL_n group".into()));
        };
        let weights = inst
            .highest_weights()?
            .ok_or_else(|| Error::Precondition(format!("instance `{}` has no weights", inst.id)))?;
        affinoid_section(&mut b, &datum, inst, &weights, z)?;
        return Ok(b.finish(&inst.id));
    }
    if datum.rank() != galois.dim() {
        return Err(Error::DimensionMismatch(format!(
            "group of rank {} but Galois side of dimension {}",
            datum.rank(),
            galois.dim()
        )));
    }

    let jumps = instance_jumps(inst)?;
    // jumps with repetitions have no highest-weight form
    let weights = match &inst.weights {
        Some(Weights::Highest(a)) => {
            for e in jumps.per_embedding() {
                b.line(format!("derived-jumps: {}", fmt_rat_list(&e.expanded())));
            }
            Some(a.clone())
        }
        _ => match inst.highest_weights() {
            Ok(w) => {
                for a in w.iter().flatten() {
                    b.line(format!("derived-weights: {}", fmt_rat_list(a)));
                }
                w
            }
            Err(Error::InvalidWeights(_)) => {
                b.line("derived-weights: none (repeated jumps)");
                None
            }
            Err(e) => return Err(e),
        },
    };

    let central = match &weights {
        Some(w) => central_char_integral(galois, w, &inst.field)?,
        None => Inequality::eq("t_H == t_N", jumps.t_h(), -galois.det_arith_valuation()),
    };
    b.check("central-character", Outcome::from_bool(central.holds()));
    b.ineqs(std::slice::from_ref(&central));

    let zeta = galois.zeta_vals();
    if let (Some(z), Some(w)) = (&zeta, &weights) {
        let ineqs = bs_inequalities(z, w, &inst.field)?;
        b.check("bs-inequalities", Outcome::from_bool(all_hold(&ineqs)));
        b.ineqs(&ineqs);
    }

    let existence = exists_admissible(&inst.field, galois, &jumps)?;
    write_existence(&mut b, &existence);

    if let (Some(z), Some(w)) = (&zeta, &weights) {
        let shift = inst.field.degree_rat() * Rat::new(z.len() as i64 - 1, 2);
        let point: Vec<Rat> = z.iter().map(|v| v - &shift).collect();
        affinoid_section(&mut b, &datum, inst, w, &point)?;
    }
    Ok(b.finish(&inst.id))
}

#[derive(Debug, Clone)]
pub struct PolygonPair {
    pub id: String,
    pub newton: Polygon,
    pub hodge: Polygon,
    pub dominates: bool,
}

impl PolygonPair {
    pub fn vertex_table(&self) -> String {
        format!(
            "instance: {}\npolygon: newton\n{}polygon: hodge\n{}hodge-below-newton: {}\n",
            self.id,
            self.newton.vertex_table(),
            self.hodge.vertex_table(),
            self.dominates
        )
    }
}

/// Newton and Hodge polygons: of the φ-module for `N = 0` or a single chain,
/// of the blocks otherwise.
pub fn polygon_instance(inst: &Instance) -> Result<PolygonPair> {
    let jumps = instance_jumps(inst)?;
    let hodge = jumps.hodge_polygon()?;
    let g = galois(inst)?;
    let (newton, hodge) = match (g.zeta_vals(), g) {
        (Some(z), _) => {
            let slopes: Vec<Rat> = z.iter().map(|v| -v).collect();
            (PhiModule::from_slopes(inst.field, &slopes)?.newton_polygon(), hodge)
        }
        (None, GaloisSide::Wd(r)) => match mod_of_wd(r) {
            Ok(m) => (m.newton_polygon(), hodge),
            Err(Error::Unsupported(_)) => block_polygons(&block_decompose(r), &jumps)?,
            Err(e) => return Err(e),
        },
        (None, GaloisSide::ZetaVals(_)) => unreachable!("zeta values always have valuations"),
    };
    let dominates = polygon_dominates(&newton, &hodge)?;
    Ok(PolygonPair { id: inst.id.clone(), newton, hodge, dominates })
}

/// `val |x|_ξ` for the instance's group-ring element.
pub fn satake_norm_instance(inst: &Instance) -> Result<Report> {
    let datum = inst.datum()?;
    let xi = match inst.highest_weights()? {
        Some(w) => HighestWeight::new(&datum, &inst.field, w)?,
        None => HighestWeight::zero(&datum, &inst.field),
    };
    if inst.terms.is_empty() {
        return Err(Error::Precondition(format!("instance `{}` has no term lines", inst.id)));
    }
    let x = inst.group_ring_element();
    let v = norm_xi_val(&datum, &inst.field, &xi, &x)?;
    let mut b = Builder::new(inst);
    b.line(format!("norm-val: {v}"));
    Ok(b.finish(&inst.id))
}

/// Membership of `zeta-vals` in `V^ξ` (or its normalized variant), decided
/// by dominance and re-decided by the convex-hull linear program.
pub fn affinoid_instance(inst: &Instance) -> Result<Report> {
    let datum = inst.datum()?;
    let xi = match inst.highest_weights()? {
        Some(w) => HighestWeight::new(&datum, &inst.field, w)?,
        None => HighestWeight::zero(&datum, &inst.field),
    };
    let Some(GaloisSide::ZetaVals(z)) = &inst.galois else {
        return Err(Error::Precondition(format!("instance `{}` needs zeta-vals as the spectral point", inst.id)));
    };
    let member = in_vxi(&datum, &inst.field, &xi, z, inst.normalized)?;
    let hull_point: Vec<Rat> = if inst.normalized {
        z.iter().zip(eta_l(&datum, &inst.field)).map(|(a, e)| a - e).collect()
    } else {
        z.clone()
    };
    let hull = in_hull(&datum, &inst.field, &xi, &hull_point)?;
    let mut b = Builder::new(inst);
    b.check("affinoid", if hull == member { Outcome::from_bool(member) } else { Outcome::Fail });
    b.line(format!("  eta: {}", fmt_rat_list(&eta_l(&datum, &inst.field))));
    b.line(format!("  member: {member}"));
    b.line(format!("  hull-lp: {hull}"));
    Ok(b.finish(&inst.id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::parse_instances;

    fn one(text: &str) -> Instance {
        parse_instances(text).unwrap().remove(0)
    }

    #[test]
    fn gl2_pass_and_fail() {
        let pass = check_instance(&one("instance: a\nfield: p=5\nweights: 0 1\nzeta-vals: 0 2\n")).unwrap();
        assert_eq!(pass.outcome, Outcome::Pass, "{}", pass.text);
        assert!(pass.text.contains("witness-filtration: sigma=1"));
        let fail = check_instance(&one("instance: b\nfield: p=5\nweights: 0 1\nzeta-vals: -1 3\n")).unwrap();
        assert_eq!(fail.outcome, Outcome::Fail);
        assert!(fail.text.contains("tail 2: 3 <= 2 [FAIL]"), "{}", fail.text);
    }

    #[test]
    fn polygons_of_gl2_example() {
        let p = polygon_instance(&one("instance: a\nfield: p=5\nweights: 0 1\nzeta-vals: 0 2\n")).unwrap();
        assert!(p.dominates);
        assert_eq!(p.newton.vertex_table(), "0 0\n1 -2\n2 -2\n");
    }

    #[test]
    fn affinoid_and_norm() {
        let r = affinoid_instance(&one("instance: a\nfield: p=5\ngroup: GL 2\nzeta-vals: 0 0\n")).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        let r = affinoid_instance(&one("instance: a\nfield: p=5\ngroup: SO5\nweights: 1 0\nzeta-vals: 5 0\n")).unwrap();
        assert_eq!(r.outcome, Outcome::Fail);
        assert!(r.text.contains("hull-lp: false"));
        let r = satake_norm_instance(&one("instance: n\nfield: p=5\ngroup: GL 2\nterm: 1 0 ; 1 ; 0\n")).unwrap();
        assert!(r.text.contains("norm-val: "));
    }

    #[test]
    fn non_gl_check_runs_affinoid_only() {
        let r = check_instance(&one("instance: s\nfield: p=3\ngroup: Sp4\nweights: 1 0\nzeta-vals: 1/2 -1/2\n")).unwrap();
        assert!(!r.text.contains("bs-inequalities"));
        assert!(r.text.contains("check: affinoid"));
    }
}
