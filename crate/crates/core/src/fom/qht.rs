use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::ast::{Delta, Fom, Term};
use super::FomError;
use crate::traces::TimedTrace;

/// Default bound on `|T|` for the exhaustive here-world search.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// A ground atom `p(t)`.
pub type GroundAtom = (String, u64);

/// A quantified here-and-there interpretation `⟨D, H, T⟩` with `H ⊆ T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QhtInterpretation {
    domain: BTreeSet<u64>,
    here: BTreeSet<GroundAtom>,
    there: BTreeSet<GroundAtom>,
}

impl QhtInterpretation {
    pub fn new(
        domain: impl IntoIterator<Item = u64>,
        here: impl IntoIterator<Item = GroundAtom>,
        there: impl IntoIterator<Item = GroundAtom>,
    ) -> Result<Self, FomError> {
        let domain: BTreeSet<u64> = domain.into_iter().collect();
        let here: BTreeSet<GroundAtom> = here.into_iter().collect();
        let there: BTreeSet<GroundAtom> = there.into_iter().collect();
        if !domain.contains(&0) {
            return Err(FomError::MissingZero);
        }
        for (_, t) in there.iter().chain(&here) {
            if !domain.contains(t) {
                return Err(FomError::OutsideDomain(*t));
            }
        }
        if let Some((p, t)) = here.difference(&there).next() {
            return Err(FomError::HereNotSubset(format!("{p}({t})")));
        }
        Ok(QhtInterpretation {
            domain,
            here,
            there,
        })
    }

    /// `⟨D, T, T⟩`.
    pub fn total(
        domain: impl IntoIterator<Item = u64>,
        there: impl IntoIterator<Item = GroundAtom>,
    ) -> Result<Self, FomError> {
        let there: Vec<GroundAtom> = there.into_iter().collect();
        Self::new(domain, there.clone(), there)
    }

    pub fn domain(&self) -> &BTreeSet<u64> {
        &self.domain
    }

    pub fn here(&self) -> &BTreeSet<GroundAtom> {
        &self.here
    }

    pub fn there(&self) -> &BTreeSet<GroundAtom> {
        &self.there
    }

    pub fn is_total(&self) -> bool {
        self.here == self.there
    }
}

/// `⟨D, H, T⟩ ⊨ φ` for a sentence (free variables are an error).
pub fn qht_sat(i: &QhtInterpretation, f: &Fom) -> Result<bool, FomError> {
    Sat {
        i,
        env: HashMap::new(),
    }
    .eval(f, false)
}

struct Sat<'a> {
    i: &'a QhtInterpretation,
    env: HashMap<String, Vec<u64>>,
}

impl Sat<'_> {
    fn value(&self, t: &Term) -> Result<u64, FomError> {
        let v = match t {
            Term::Zero => 0,
            Term::Point(n) => *n,
            Term::Var(x) => {
                return self
                    .env
                    .get(x)
                    .and_then(|s| s.last().copied())
                    .ok_or_else(|| FomError::FreeVariable(x.clone()))
            }
        };
        if self.i.domain.contains(&v) {
            Ok(v)
        } else {
            Err(FomError::OutsideDomain(v))
        }
    }

    fn bind(&mut self, v: &str, d: u64) {
        self.env.entry(v.to_string()).or_default().push(d);
    }

    fn unbind(&mut self, v: &str) {
        if let Some(s) = self.env.get_mut(v) {
            s.pop();
        }
    }

    /// `there` selects `⟨D, T, T⟩` instead of `⟨D, H, T⟩`.
    fn eval(&mut self, f: &Fom, there: bool) -> Result<bool, FomError> {
        Ok(match f {
            Fom::Bottom => false,
            Fom::Top => true,
            Fom::Atom(p, t) => {
                let atom = (p.clone(), self.value(t)?);
                if there {
                    self.i.there.contains(&atom)
                } else {
                    self.i.here.contains(&atom)
                }
            }
            Fom::Diff(t, d, u) => {
                let (t, u) = (self.value(t)?, self.value(u)?);
                match d {
                    Delta::Omega => true,
                    Delta::Int(d) => (t as i128) - (u as i128) <= *d as i128,
                }
            }
            Fom::And(a, b) => self.eval(a, there)? && self.eval(b, there)?,
            Fom::Or(a, b) => self.eval(a, there)? || self.eval(b, there)?,
            Fom::Implies(a, b) => {
                let total = !self.eval(a, true)? || self.eval(b, true)?;
                if there {
                    total
                } else {
                    total && (!self.eval(a, false)? || self.eval(b, false)?)
                }
            }
            Fom::Forall(v, a) | Fom::Exists(v, a) => {
                let universal = matches!(f, Fom::Forall(..));
                let points: Vec<u64> = self.i.domain.iter().copied().collect();
                let mut result = universal;
                for d in points {
                    self.bind(v, d);
                    let r = self.eval(a, there);
                    self.unbind(v);
                    if r? != universal {
                        result = !universal;
                        break;
                    }
                }
                result
            }
        })
    }
}

/// `I(M)`: domain `{τ(i)}`, with `p(τ(i))` in `H` (resp. `T`) iff `p ∈ Hᵢ`
/// (resp. `Tᵢ`). Needs a strict trace.
pub fn induced_interpretation(m: &TimedTrace) -> Result<QhtInterpretation, FomError> {
    if !m.is_strict() {
        return Err(FomError::NotStrict);
    }
    let names = m.alphabet();
    let ground = |states: &[u64]| -> Vec<GroundAtom> {
        states
            .iter()
            .zip(m.times())
            .flat_map(|(&s, &t)| {
                names
                    .names_of(s)
                    .into_iter()
                    .map(move |p| (p.to_string(), t))
            })
            .collect()
    };
    QhtInterpretation::new(
        m.times().iter().copied(),
        ground(m.here()),
        ground(m.there()),
    )
}

/// Outcome of [`is_qel_model`]; the witness is a strictly smaller here-world
/// still satisfying the sentence, present iff the model is not in equilibrium.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QelVerdict {
    pub is_equilibrium: bool,
    pub witness: Option<BTreeSet<GroundAtom>>,
}

/// Whether `⟨D, T, T⟩` is an equilibrium model of `s`: it must be a model,
/// and no `⟨D, H, T⟩` with `H ⊊ T` may satisfy `s`. Exhaustive over the
/// subsets of `T`, so `|T|` is capped.
pub fn is_qel_model(
    domain: &BTreeSet<u64>,
    there: &BTreeSet<GroundAtom>,
    s: &Fom,
    cap: usize,
) -> Result<QelVerdict, FomError> {
    if there.len() > cap {
        return Err(FomError::TooLarge {
            size: there.len(),
            cap,
        });
    }
    let total = QhtInterpretation::total(domain.iter().copied(), there.iter().cloned())?;
    if !qht_sat(&total, s)? {
        return Err(FomError::NotModel);
    }
    let atoms: Vec<&GroundAtom> = there.iter().collect();
    let full = (1u64 << atoms.len()) - 1;
    for mask in 0..full {
        let here = atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, a)| (*a).clone());
        let i = QhtInterpretation::new(domain.iter().copied(), here, there.iter().cloned())?;
        if qht_sat(&i, s)? {
            return Ok(QelVerdict {
                is_equilibrium: false,
                witness: Some(i.here),
            });
        }
    }
    Ok(QelVerdict {
        is_equilibrium: true,
        witness: None,
    })
}

#[derive(Serialize, Deserialize)]
struct Document {
    domain: Vec<u64>,
    #[serde(default)]
    here: Vec<String>,
    #[serde(default)]
    there: Vec<String>,
}

fn parse_ground(s: &str) -> Result<GroundAtom, FomError> {
    let bad = || FomError::Json(format!("malformed ground atom `{s}`"));
    let (p, rest) = s.trim().split_once('(').ok_or_else(bad)?;
    let t = rest.strip_suffix(')').ok_or_else(bad)?;
    let p = p.trim();
    if p.is_empty() || !p.starts_with(|c: char| c.is_ascii_lowercase()) {
        return Err(bad());
    }
    Ok((p.to_string(), t.trim().parse().map_err(|_| bad())?))
}

/// Reads `{"domain": [0, 5], "here": ["red(0)"], "there": ["red(0)", "push(5)"]}`.
/// A missing `here` means the total interpretation.
pub fn interpretation_from_json(text: &str) -> Result<QhtInterpretation, FomError> {
    let doc: serde_json::Value =
        serde_json::from_str(text).map_err(|e| FomError::Json(e.to_string()))?;
    let has_here = doc.get("here").is_some();
    let doc: Document = serde_json::from_value(doc).map_err(|e| FomError::Json(e.to_string()))?;
    let there = doc
        .there
        .iter()
        .map(|s| parse_ground(s))
        .collect::<Result<Vec<_>, _>>()?;
    let here = if has_here {
        doc.here
            .iter()
            .map(|s| parse_ground(s))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        there.clone()
    };
    QhtInterpretation::new(doc.domain, here, there)
}

pub fn interpretation_to_json(i: &QhtInterpretation) -> String {
    let show = |s: &BTreeSet<GroundAtom>| s.iter().map(|(p, t)| format!("{p}({t})")).collect();
    let doc = Document {
        domain: i.domain.iter().copied().collect(),
        here: show(&i.here),
        there: show(&i.there),
    };
    serde_json::to_string(&doc).expect("serializable")
}
