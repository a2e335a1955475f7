//! The line-oriented instance format.
//!
//! ```text
//! # comment
//! instance: gl2-pass
//! field: p=5 e=1 f=1
//! group: GL 2
//! weights: 0 1
//! zeta-vals: 0 2
//! ```
//!
//! Repeated keys: `weights`/`jumps` (one line per embedding), `wd-frobenius`,
//! `wd-chain`, `term`, `root`/`coroot` (for `group: custom <rank>`). A file
//! may hold several instances, each opened by an `instance:` line.

use std::fmt;

use bsc_core::bsc::{weights_from_jumps, GaloisSide};
use bsc_core::exactnum::{fmt_rat_list, parse_rat_list, FieldData, QSqrtQ, Rat};
use bsc_core::rootdata::RootDatum;
use bsc_core::satake::{Cochar, GroupRingElem};
use bsc_core::weildeligne::{WdBlock, WdRep};
use bsc_core::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Preset(String),
    Custom { rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weights {
    Highest(Vec<Vec<Rat>>),
    Jumps(Vec<Vec<Rat>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub field: FieldData,
    pub group: Option<GroupSpec>,
    pub weights: Option<Weights>,
    pub galois: Option<GaloisSide>,
    pub terms: Vec<(Cochar, QSqrtQ)>,
    pub normalized: bool,
}

impl Instance {
    pub fn new(id: impl Into<String>, field: FieldData) -> Self {
        Instance { id: id.into(), field, group: None, weights: None, galois: None, terms: vec![], normalized: true }
    }

    /// The group, defaulting to `GL_n` with `n` read off the other data.
    pub fn datum(&self) -> Result<RootDatum> {
        match &self.group {
            Some(GroupSpec::Preset(name)) => RootDatum::preset(name),
            Some(GroupSpec::Custom { rank, roots, coroots }) => {
                RootDatum::new("custom", *rank, roots.clone(), coroots.clone())
            }
            None => {
                let n = match (&self.galois, &self.weights) {
                    (Some(g), _) => g.dim(),
                    (None, Some(Weights::Highest(w) | Weights::Jumps(w))) => w[0].len(),
                    (None, None) => {
                        return Err(Error::Precondition(format!("instance `{}` names no group", self.id)))
                    }
                };
                RootDatum::gl(n)
            }
        }
    }

    /// Highest weights per embedding; jumps are converted, which presumes `GL_n`.
    pub fn highest_weights(&self) -> Result<Option<Vec<Vec<Rat>>>> {
        match &self.weights {
            None => Ok(None),
            Some(Weights::Highest(a)) => Ok(Some(a.clone())),
            Some(Weights::Jumps(i)) => Ok(Some(i.iter().map(|j| weights_from_jumps(j)).collect::<Result<_>>()?)),
        }
    }

    pub fn group_ring_element(&self) -> GroupRingElem {
        GroupRingElem::from_terms(self.field.q(), self.terms.iter().cloned())
    }
}

fn kv(s: &str) -> Vec<(&str, &str)> {
    s.split_whitespace().filter_map(|t| t.split_once('=')).collect()
}

fn parse_field(v: &str) -> Result<FieldData> {
    let (mut p, mut e, mut f) = (None, 1u32, 1u32);
    for tok in v.split_whitespace() {
        let (k, x) = tok.split_once('=').ok_or_else(|| Error::parse(format!("expected key=value, got `{tok}`")))?;
        let bad = |_| Error::parse(format!("bad integer in `{tok}`"));
        match k {
            "p" => p = Some(x.parse::<u64>().map_err(bad)?),
            "e" => e = x.parse().map_err(bad)?,
            "f" => f = x.parse().map_err(bad)?,
            _ => return Err(Error::parse(format!("unknown field key `{k}`"))),
        }
    }
    FieldData::new(p.ok_or_else(|| Error::parse("field needs p=<prime>"))?, e, f)
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::parse(format!("bad {what} `{s}`")))
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::parse(format!("bad integer `{t}`"))))
        .collect()
}

fn fmt_ints(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn parse_frobenius(v: &str) -> Result<WdBlock> {
    let (mut val, mut mult, mut jordan) = (None, 1usize, None);
    for (k, x) in kv(v) {
        match k {
            "val" => val = Some(x.parse::<Rat>()?),
            "mult" => mult = parse_usize(x, "multiplicity")?,
            "jordan" => jordan = Some(parse_ints(x)?.into_iter().map(|j| j.max(0) as usize).collect()),
            _ => return Err(Error::parse(format!("unknown wd-frobenius key `{k}`"))),
        }
    }
    Ok(WdBlock::Frobenius {
        valuation: val.ok_or_else(|| Error::parse("wd-frobenius needs val=<rational>"))?,
        multiplicity: mult,
        jordan: jordan.unwrap_or_else(|| vec![1; mult]),
    })
}

fn parse_chain(v: &str) -> Result<WdBlock> {
    let (mut base, mut rank, mut length) = (None, 1usize, None);
    for (k, x) in kv(v) {
        match k {
            "base" => base = Some(x.parse::<Rat>()?),
            "rank" => rank = parse_usize(x, "rank")?,
            "length" => length = Some(parse_usize(x, "length")?),
            _ => return Err(Error::parse(format!("unknown wd-chain key `{k}`"))),
        }
    }
    Ok(WdBlock::Chain {
        base: base.ok_or_else(|| Error::parse("wd-chain needs base=<rational>"))?,
        piece_rank: rank,
        length: length.ok_or_else(|| Error::parse("wd-chain needs length=<n>"))?,
    })
}

fn parse_term(v: &str, q: u64) -> Result<(Cochar, QSqrtQ)> {
    let parts: Vec<&str> = v.split(';').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(Error::parse("term needs `cocharacter ; a ; b`"));
    }
    let l = parse_ints(parts[0])?;
    Ok((l, QSqrtQ::new(parts[1].parse()?, parts[2].parse()?, q)))
}

#[derive(Default)]
struct Draft {
    id: String,
    line: usize,
    field: Option<FieldData>,
    group: Option<String>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    weights: Vec<Vec<Rat>>,
    jumps: Vec<Vec<Rat>>,
    zeta: Option<Vec<Rat>>,
    wd: Vec<WdBlock>,
    terms: Vec<(Cochar, QSqrtQ)>,
    raw_terms: Vec<(usize, String)>,
    normalized: Option<bool>,
}

impl Draft {
    fn finish(self) -> Result<Instance> {
        let at = self.line;
        let field = self.field.ok_or_else(|| Error::parse_at(at, format!("instance `{}` has no field line", self.id)))?;
        let group = match self.group.as_deref() {
            None => {
                if !self.roots.is_empty() || !self.coroots.is_empty() {
                    return Err(Error::parse_at(at, "root lines need `group: custom <rank>`"));
                }
                None
            }
            Some(g) if g.starts_with("custom") => {
                let rank = g["custom".len()..].trim();
                let rank = parse_usize(rank, "custom rank").map_err(|e| e.at_line(at))?;
                Some(GroupSpec::Custom { rank, roots: self.roots, coroots: self.coroots })
            }
            Some(g) => {
                if !self.roots.is_empty() || !self.coroots.is_empty() {
                    return Err(Error::parse_at(at, "root lines are only allowed for a custom group"));
                }
                RootDatum::preset(g).map_err(|e| e.at_line(at))?;
                Some(GroupSpec::Preset(g.split_whitespace().collect::<Vec<_>>().join(" ")))
            }
        };
        let weights = match (self.weights.is_empty(), self.jumps.is_empty()) {
            (true, true) => None,
            (false, true) => Some(Weights::Highest(self.weights)),
            (true, false) => Some(Weights::Jumps(self.jumps)),
            (false, false) => return Err(Error::parse_at(at, "give either weights or jumps, not both")),
        };
        if let Some(Weights::Highest(w) | Weights::Jumps(w)) = &weights {
            if w.len() != field.embeddings() {
                return Err(Error::parse_at(
                    at,
                    format!("{} weight lines but the field has {} embeddings", w.len(), field.embeddings()),
                ));
            }
            if w.iter().any(|x| x.len() != w[0].len()) {
                return Err(Error::parse_at(at, "weight lines differ in length"));
            }
        }
        let galois = match (self.zeta, self.wd.is_empty()) {
            (Some(_), false) => return Err(Error::parse_at(at, "give either zeta-vals or wd lines, not both")),
            (Some(z), true) => Some(GaloisSide::ZetaVals(z)),
            (None, false) => Some(GaloisSide::Wd(WdRep::new(field, self.wd).map_err(|e| e.at_line(at))?)),
            (None, true) => None,
        };
        let mut terms = self.terms;
        for (line, t) in self.raw_terms {
            terms.push(parse_term(&t, field.q()).map_err(|e| e.at_line(line))?);
        }
        Ok(Instance {
            id: self.id,
            field,
            group,
            weights,
            galois,
            terms,
            normalized: self.normalized.unwrap_or(true),
        })
    }
}

/// Parses every instance in `text`; errors carry the 1-based line number.
pub fn parse_instances(text: &str) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    let mut cur: Option<Draft> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| Error::parse_at(line, format!("expected `key: value`, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if key == "instance" {
            if value.is_empty() || value.contains(char::is_whitespace) {
                return Err(Error::parse_at(line, "instance id must be a single non-empty word"));
            }
            if let Some(d) = cur.take() {
                out.push(d.finish()?);
            }
            cur = Some(Draft { id: value.to_string(), line, ..Draft::default() });
            continue;
        }
        let d = cur.as_mut().ok_or_else(|| Error::parse_at(line, "expected `instance:` first"))?;
        let once = |present: bool| {
            if present {
                Err(Error::parse_at(line, format!("duplicate `{key}` line")))
            } else {
                Ok(())
            }
        };
        let res: Result<()> = (|| {
            match key {
                "field" => {
                    once(d.field.is_some())?;
                    d.field = Some(parse_field(value)?);
                }
                "group" => {
                    once(d.group.is_some())?;
                    d.group = Some(value.to_string());
                }
                "root" => d.roots.push(parse_ints(value)?),
                "coroot" => d.coroots.push(parse_ints(value)?),
                "weights" => d.weights.push(parse_rat_list(value)?),
                "jumps" => d.jumps.push(parse_rat_list(value)?),
                "zeta-vals" => {
                    once(d.zeta.is_some())?;
                    d.zeta = Some(parse_rat_list(value)?);
                }
                "wd-frobenius" => d.wd.push(parse_frobenius(value)?),
                "wd-chain" => d.wd.push(parse_chain(value)?),
                "term" => d.raw_terms.push((line, value.to_string())),
                "normalized" => {
                    once(d.normalized.is_some())?;
                    d.normalized = Some(match value {
                        "true" => true,
                        "false" => false,
                        _ => return Err(Error::parse("normalized must be `true` or `false`")),
                    });
                }
                _ => return Err(Error::parse(format!("unknown key `{key}`"))),
            }
            Ok(())
        })();
        res.map_err(|e| e.at_line(line))?;
    }
    if let Some(d) = cur {
        out.push(d.finish()?);
    }
    if out.is_empty() {
        return Err(Error::parse("no instance found"));
    }
    Ok(out)
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instance: {}", self.id)?;
        writeln!(f, "field: p={} e={} f={}", self.field.p, self.field.e, self.field.f)?;
        match &self.group {
            Some(GroupSpec::Preset(g)) => writeln!(f, "group: {g}")?,
            Some(GroupSpec::Custom { rank, roots, coroots }) => {
                writeln!(f, "group: custom {rank}")?;
                for r in roots {
                    writeln!(f, "root: {}", fmt_ints(r))?;
                }
                for c in coroots {
                    writeln!(f, "coroot: {}", fmt_ints(c))?;
                }
            }
            None => {}
        }
        match &self.weights {
            Some(Weights::Highest(w)) => w.iter().try_for_each(|a| writeln!(f, "weights: {}", fmt_rat_list(a)))?,
            Some(Weights::Jumps(w)) => w.iter().try_for_each(|a| writeln!(f, "jumps: {}", fmt_rat_list(a)))?,
            None => {}
        }
        match &self.galois {
            Some(GaloisSide::ZetaVals(z)) => writeln!(f, "zeta-vals: {}", fmt_rat_list(z))?,
            Some(GaloisSide::Wd(r)) => {
                for b in r.blocks() {
                    match b {
                        WdBlock::Frobenius { valuation, multiplicity, jordan } => writeln!(
                            f,
                            "wd-frobenius: val={valuation} mult={multiplicity} jordan={}",
                            jordan.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                        )?,
                        WdBlock::Chain { base, piece_rank, length } => {
                            writeln!(f, "wd-chain: base={base} rank={piece_rank} length={length}")?
                        }
                    }
                }
            }
            None => {}
        }
        for (l, c) in &self.terms {
            writeln!(f, "term: {} ; {} ; {}", fmt_ints(l), c.a, c.b)?;
        }
        if !self.normalized {
            writeln!(f, "normalized: false")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GL2: &str = "\
# worked example
instance: gl2-pass
field: p=5
group: GL 2
weights: 0 1
zeta-vals: 0 2
";

    #[test]
    fn parses_and_reserializes() {
        let inst = parse_instances(GL2).unwrap();
        assert_eq!(inst.len(), 1);
        let text = inst[0].to_string();
        assert_eq!(text, "instance: gl2-pass\nfield: p=5 e=1 f=1\ngroup: GL 2\nweights: 0 1\nzeta-vals: 0 2\n");
        assert_eq!(parse_instances(&text).unwrap(), inst);
    }

    #[test]
    fn round_trips_every_key() {
        let text = "\
instance: a
field: p=3 e=2 f=1
group: custom 2
root: 1 -1
coroot: 1 -1
jumps: -1 0
jumps: 0 1/2
wd-frobenius: val=1/2 mult=2 jordan=2
term: 1 0 ; 1 ; -1/3
normalized: false

instance: b
field: p=2 e=1 f=1
wd-chain: base=-3/2 rank=1 length=2
";
        let inst = parse_instances(text).unwrap();
        assert_eq!(inst.len(), 2);
        let again: String = inst.iter().map(|i| format!("{i}\n")).collect();
        assert_eq!(parse_instances(&again).unwrap(), inst);
        assert!(!inst[0].normalized);
        assert_eq!(inst[1].datum().unwrap().rank(), 2);
    }

    #[test]
    fn positioned_errors() {
        let err = |t: &str| parse_instances(t).unwrap_err();
        assert_eq!(err("field: p=5\n"), Error::parse_at(1, "expected `instance:` first"));
        let e = err("instance: x\nfield: p=4\n");
        assert!(matches!(e, Error::Parse { line: Some(2), .. }), "{e}");
        let e = err("instance: x\nfield: p=5\nzeta-vals: 0 1/0\n");
        assert!(matches!(e, Error::Parse { line: Some(3), .. }), "{e}");
        let e = err("instance: x\nfield: p=5\nweights: 0\njumps: 0\n");
        assert!(matches!(e, Error::Parse { line: Some(1), .. }), "{e}");
        let e = err("instance: x\nfield: p=5\nbogus: 1\n");
        assert!(e.to_string().starts_with("line 3: "), "{e}");
        let e = err("instance: x\nfield: p=5 f=2\nweights: 0 1\n");
        assert!(e.to_string().contains("2 embeddings"), "{e}");
        assert!(parse_instances("# nothing\n").is_err());
    }
}
