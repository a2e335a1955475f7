//! Seeded random `GL_n` instances, checked in parallel.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use bsc_core::bsc::{GaloisSide, Outcome};
use bsc_core::exactnum::{FieldData, Rat};
use bsc_core::Result;

use crate::instance::{GroupSpec, Instance, Weights};
use crate::report::{check_instance, Report};

const FIELDS: [(u64, u32, u32); 6] = [(2, 1, 1), (3, 1, 1), (5, 1, 1), (7, 1, 1), (3, 2, 1), (2, 1, 2)];

/// Unramified split `GL_n` instances. Half of them are shifted so that the
/// central-character equality holds, which keeps both verdicts frequent.
pub fn random_instances(rank: usize, count: usize, seed: u64) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let width = (count.max(1) - 1).to_string().len();
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let &(p, e, f) = FIELDS.choose(&mut rng).expect("nonempty");
        let field = FieldData::new(p, e, f)?;
        let weights: Vec<Vec<Rat>> = (0..field.embeddings())
            .map(|_| {
                let mut a: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
                a.sort();
                a.into_iter().map(Rat::int).collect()
            })
            .collect();
        let mut zeta: Vec<Rat> = (0..rank).map(|_| Rat::int(rng.gen_range(-6..=6))).collect();
        if rng.gen_bool(0.5) {
            let d = rank as i64 - 1;
            let target = weights.iter().flatten().sum::<Rat>() + field.degree_rat() * Rat::new(d * (d + 1), 2);
            let rest: Rat = zeta[1..].iter().sum();
            zeta[0] = target - rest;
        }
        let mut inst = Instance::new(format!("sweep-{k:0width$}"), field);
        inst.group = Some(GroupSpec::Preset(format!("GL {rank}")));
        inst.weights = Some(Weights::Highest(weights));
        inst.galois = Some(GaloisSide::ZetaVals(zeta));
        out.push(inst);
    }
    Ok(out)
}

/// Checks every instance in parallel; reports come back in instance order.
pub fn check_all(instances: &[Instance]) -> Result<Vec<Report>> {
    instances.par_iter().map(check_instance).collect()
}

pub fn summary(reports: &[Report]) -> String {
    let count = |o: Outcome| reports.iter().filter(|r| r.outcome == o).count();
    format!(
        "summary: instances={} pass={} fail={} undecided={}\n",
        reports.len(),
        count(Outcome::Pass),
        count(Outcome::Fail),
        count(Outcome::Undecided)
    )
}
