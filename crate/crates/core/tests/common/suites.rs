//! Randomized property suites, parameterized by case count so the same
//! checks run as quick regressions and at full size in the acceptance run.
//!
//! A suite stops at its first counterexample and reports it.

#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mel::equilibrium::is_equilibrium;
use mel::fom::{induced_interpretation, qht_sat, simplify_fom, translate_at, QhtInterpretation};
use mel::random::{FormulaGen, TraceGen};
use mel::rewrite::{
    bool_dual, is_unary_normal_form, one_step_eliminate, range_split, time_swap, to_unary_nf,
    unfold_next,
};
use mel::semantics::{em_theory, is_model, Evaluator, World};
use mel::syntax::{BinaryTemporal, Formula, Interval, Theory, Upper};
use mel::traces::{Alphabet, TimedTrace};

use super::oracle;

pub struct Report {
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn expect_pass(&self) {
        if let Some(f) = &self.failure {
            panic!("{}: {f}", self.name);
        }
    }
}

/// Runs `check` on `cases` fresh random inputs.
pub fn run(
    name: &str,
    cases: usize,
    seed: u64,
    mut check: impl FnMut(&mut ChaCha8Rng) -> Result<(), String>,
) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        if let Err(e) = check(&mut rng) {
            return Report {
                name: name.to_string(),
                cases: case + 1,
                failure: Some(format!("case {case}: {e}")),
            };
        }
    }
    Report {
        name: name.to_string(),
        cases,
        failure: None,
    }
}

/// Combines several suites into one report; the case count is the minimum.
pub fn all(name: &str, reports: Vec<Report>) -> Report {
    let cases = reports.iter().map(|r| r.cases).min().unwrap_or(0);
    let failure = reports
        .iter()
        .find_map(|r| r.failure.as_ref().map(|f| format!("{}: {f}", r.name)));
    Report {
        name: name.to_string(),
        cases,
        failure,
    }
}

pub fn alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(["p", "q", "r"]).unwrap())
}

/// Random HT traces, strict or not.
pub fn any_trace(rng: &mut ChaCha8Rng) -> TimedTrace {
    let gen = TraceGen::new(alphabet(), 5, 8);
    if rng.gen_bool(0.5) {
        gen.strict().sample(rng)
    } else {
        gen.sample(rng)
    }
}

/// Strict HT traces with λ ≤ 4 and final time ≤ 12.
pub fn strict_trace(rng: &mut ChaCha8Rng) -> TimedTrace {
    TraceGen::new(alphabet(), 4, 12).strict().sample(rng)
}

pub fn formulas(depth: usize) -> FormulaGen {
    FormulaGen::new(&["p", "q", "r"], depth, 6)
}

fn sat_all(m: &TimedTrace, f: &Formula, world: World) -> Vec<bool> {
    let mut ev = Evaluator::cached(m);
    (0..m.len()).map(|k| ev.sat(world, k, f).unwrap()).collect()
}

/// `f` and `g` agree at every state of `m`, in both worlds.
pub fn agree(m: &TimedTrace, f: &Formula, g: &Formula) -> Result<(), String> {
    for world in [World::Here, World::There] {
        let (a, b) = (sat_all(m, f, world), sat_all(m, g, world));
        if let Some(k) = (0..m.len()).find(|&k| a[k] != b[k]) {
            return Err(format!(
                "`{f}` vs `{g}` differ at state {k} ({world:?}) of {m}"
            ));
        }
    }
    Ok(())
}

/// `f` holds at every state of `m`.
pub fn valid_on(m: &TimedTrace, f: &Formula) -> Result<(), String> {
    let v = sat_all(m, f, World::Here);
    match v.iter().position(|x| !x) {
        Some(k) => Err(format!("`{f}` fails at state {k} of {m}")),
        None => Ok(()),
    }
}

// ---------------------------------------------------------------------------
// Evaluator cross-checks

pub fn evaluator_matches_oracle(cases: usize, seed: u64) -> Report {
    run("evaluator vs oracle", cases, seed, |rng| {
        let m = any_trace(rng);
        let f = formulas(4).sample(rng);
        let t = oracle::table(&m, &f);
        let (here, there) = (sat_all(&m, &f, World::Here), sat_all(&m, &f, World::There));
        if t.here != here || t.there != there {
            return Err(format!("`{f}` on {m}"));
        }
        let mut plain = Evaluator::new(&m);
        for (k, &expected) in here.iter().enumerate() {
            if plain.sat(World::Here, k, &f).unwrap() != expected {
                return Err(format!("cached and plain evaluation differ on `{f}`"));
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Basic properties of here-and-there satisfaction

pub fn persistence(cases: usize, seed: u64) -> Report {
    run("persistence", cases, seed, |rng| {
        let m = any_trace(rng);
        let f = formulas(4).sample(rng);
        let (h, t) = (
            sat_all(&m, &f, World::Here),
            sat_all(&m.total_part(), &f, World::Here),
        );
        match (0..m.len()).find(|&k| h[k] && !t[k]) {
            Some(k) => Err(format!("`{f}` holds here but not there at {k} of {m}")),
            None => Ok(()),
        }
    })
}

pub fn negation(cases: usize, seed: u64) -> Report {
    run("negation", cases, seed, |rng| {
        let m = any_trace(rng);
        let f = formulas(4).sample(rng);
        let neg = sat_all(&m, &Formula::not(f.clone()), World::Here);
        let total = sat_all(&m.total_part(), &f, World::Here);
        match (0..m.len()).find(|&k| neg[k] == total[k]) {
            Some(k) => Err(format!("`~({f})` at {k} of {m}")),
            None => Ok(()),
        }
    })
}

pub fn em_characterization(cases: usize, seed: u64) -> Report {
    run(
        "excluded middle characterizes totality",
        cases,
        seed,
        |rng| {
            let m = any_trace(rng);
            let em = em_theory(m.alphabet());
            if is_model(&m, &em) == m.is_total() {
                Ok(())
            } else {
                Err(format!("EM verdict wrong on {m}"))
            }
        },
    )
}

type Law = (
    &'static str,
    fn(Interval, Formula, Formula, Formula) -> (Formula, Formula),
);

/// Distributivity of the temporal connectives over `&` and `|`.
pub fn distributivity_laws() -> Vec<Law> {
    use Formula as F;
    vec![
        ("X or", |i, a, b, _| {
            (
                F::next(i, F::or(a.clone(), b.clone())),
                F::or(F::next(i, a), F::next(i, b)),
            )
        }),
        ("X and", |i, a, b, _| {
            (
                F::next(i, F::and(a.clone(), b.clone())),
                F::and(F::next(i, a), F::next(i, b)),
            )
        }),
        ("wX or", |i, a, b, _| {
            (
                F::weak_next(i, F::or(a.clone(), b.clone())),
                F::or(F::weak_next(i, a), F::weak_next(i, b)),
            )
        }),
        ("wX and", |i, a, b, _| {
            (
                F::weak_next(i, F::and(a.clone(), b.clone())),
                F::and(F::weak_next(i, a), F::weak_next(i, b)),
            )
        }),
        ("F or", |i, a, b, _| {
            (
                F::eventually(i, F::or(a.clone(), b.clone())),
                F::or(F::eventually(i, a), F::eventually(i, b)),
            )
        }),
        ("G and", |i, a, b, _| {
            (
                F::always(i, F::and(a.clone(), b.clone())),
                F::and(F::always(i, a), F::always(i, b)),
            )
        }),
        ("wY or", |i, a, b, _| {
            (
                F::weak_prev(i, F::or(a.clone(), b.clone())),
                F::or(F::weak_prev(i, a), F::weak_prev(i, b)),
            )
        }),
        ("wY and", |i, a, b, _| {
            (
                F::weak_prev(i, F::and(a.clone(), b.clone())),
                F::and(F::weak_prev(i, a), F::weak_prev(i, b)),
            )
        }),
        ("O or", |i, a, b, _| {
            (
                F::once(i, F::or(a.clone(), b.clone())),
                F::or(F::once(i, a), F::once(i, b)),
            )
        }),
        ("T left or", |i, a, b, c| {
            (
                F::trigger(i, F::or(a.clone(), c.clone()), b.clone()),
                F::or(F::trigger(i, a, b.clone()), F::trigger(i, c, b)),
            )
        }),
        ("U right or", |i, a, b, c| {
            (
                F::until(i, a.clone(), F::or(c.clone(), b.clone())),
                F::or(F::until(i, a.clone(), c), F::until(i, a, b)),
            )
        }),
        ("U left and", |i, a, b, c| {
            (
                F::until(i, F::and(a.clone(), c.clone()), b.clone()),
                F::and(F::until(i, a, b.clone()), F::until(i, c, b)),
            )
        }),
        ("R right and", |i, a, b, c| {
            (
                F::release(i, a.clone(), F::and(c.clone(), b.clone())),
                F::and(F::release(i, a.clone(), c), F::release(i, a, b)),
            )
        }),
        ("R left or", |i, a, b, c| {
            (
                F::release(i, F::or(a.clone(), c.clone()), b.clone()),
                F::or(F::release(i, a, b.clone()), F::release(i, c, b)),
            )
        }),
        ("S left and", |i, a, b, c| {
            (
                F::since(i, F::and(a.clone(), c.clone()), b.clone()),
                F::and(F::since(i, a, b.clone()), F::since(i, c, b)),
            )
        }),
        ("S right or", |i, a, b, c| {
            (
                F::since(i, a.clone(), F::or(c.clone(), b.clone())),
                F::or(F::since(i, a.clone(), c), F::since(i, a, b)),
            )
        }),
        ("Y or", |i, a, b, _| {
            (
                F::prev(i, F::or(a.clone(), b.clone())),
                F::or(F::prev(i, a), F::prev(i, b)),
            )
        }),
        ("Y and", |i, a, b, _| {
            (
                F::prev(i, F::and(a.clone(), b.clone())),
                F::and(F::prev(i, a), F::prev(i, b)),
            )
        }),
        ("H and", |i, a, b, _| {
            (
                F::historically(i, F::and(a.clone(), b.clone())),
                F::and(F::historically(i, a), F::historically(i, b)),
            )
        }),
        ("T right and", |i, a, b, c| {
            (
                F::trigger(i, a.clone(), F::and(c.clone(), b.clone())),
                F::and(F::trigger(i, a.clone(), c), F::trigger(i, a, b)),
            )
        }),
    ]
}

fn law_suite(
    name: &str,
    law: fn(Interval, Formula, Formula, Formula) -> (Formula, Formula),
    cases: usize,
    seed: u64,
) -> Report {
    run(name, cases, seed, |rng| {
        let gen = formulas(2);
        let m = any_trace(rng);
        let (lhs, rhs) = law(
            gen.interval(rng),
            gen.sample(rng),
            gen.sample(rng),
            gen.sample(rng),
        );
        agree(&m, &lhs, &rhs)
    })
}

pub fn distributivity(cases: usize, seed: u64) -> Report {
    let reports = distributivity_laws()
        .into_iter()
        .enumerate()
        .map(|(k, (name, law))| law_suite(name, law, cases, seed + k as u64))
        .collect();
    all("distributivity (20 laws)", reports)
}

pub fn de_morgan(cases: usize, seed: u64) -> Report {
    use Formula as F;
    let laws: Vec<Law> = vec![
        ("~U", |i, a, b, _| {
            (
                F::not(F::until(i, a.clone(), b.clone())),
                F::release(i, F::not(a), F::not(b)),
            )
        }),
        ("~R", |i, a, b, _| {
            (
                F::not(F::release(i, a.clone(), b.clone())),
                F::until(i, F::not(a), F::not(b)),
            )
        }),
        ("~S", |i, a, b, _| {
            (
                F::not(F::since(i, a.clone(), b.clone())),
                F::trigger(i, F::not(a), F::not(b)),
            )
        }),
        ("~T", |i, a, b, _| {
            (
                F::not(F::trigger(i, a.clone(), b.clone())),
                F::since(i, F::not(a), F::not(b)),
            )
        }),
    ];
    let reports = laws
        .into_iter()
        .enumerate()
        .map(|(k, (name, law))| law_suite(name, law, cases, seed + k as u64))
        .collect();
    all("De Morgan (4 laws)", reports)
}

/// A random interval `J ⊇ I`.
fn superset<R: Rng>(rng: &mut R, i: Interval) -> Interval {
    let lower = rng.gen_range(0..=i.lower);
    let upper = match i.upper {
        Upper::Omega => Upper::Omega,
        Upper::Finite(_) if rng.gen_bool(0.2) => Upper::Omega,
        Upper::Finite(n) => Upper::Finite(rng.gen_range(n..=n + 4)),
    };
    Interval { lower, upper }
}

pub fn interval_monotonicity(cases: usize, seed: u64) -> Report {
    let ops = [
        BinaryTemporal::Until,
        BinaryTemporal::Release,
        BinaryTemporal::Since,
        BinaryTemporal::Trigger,
    ];
    let reports = ops
        .iter()
        .enumerate()
        .map(|(k, &op)| {
            run(
                &format!("{} monotone in its interval", op.symbol()),
                cases,
                seed + k as u64,
                |rng| {
                    let gen = formulas(2);
                    let m = any_trace(rng);
                    let i = gen.interval(rng);
                    let j = superset(rng, i);
                    let (a, b) = (gen.sample(rng), gen.sample(rng));
                    let (small, large) = (op.build(i, a.clone(), b.clone()), op.build(j, a, b));
                    // U and S grow with the interval, R and T shrink.
                    let f = if op.is_existential() {
                        Formula::implies(small, large)
                    } else {
                        Formula::implies(large, small)
                    };
                    valid_on(&m, &f)
                },
            )
        })
        .collect();
    all("interval monotonicity (4 laws)", reports)
}

/// Replaces every interval by `[0..w)`.
pub fn strip_intervals(f: &Formula) -> Formula {
    let full = Interval::FULL;
    match f {
        Formula::Next(_, a) => Formula::next(full, strip_intervals(a)),
        Formula::Prev(_, a) => Formula::prev(full, strip_intervals(a)),
        _ => match f.as_binary_temporal() {
            Some((op, _, a, b)) => op.build(full, strip_intervals(a), strip_intervals(b)),
            None => f.map_children(strip_intervals),
        },
    }
}

pub fn tau_invariance(cases: usize, seed: u64) -> Report {
    run(
        "time-map invariance without intervals",
        cases,
        seed,
        |rng| {
            let m = any_trace(rng);
            let f = strip_intervals(&formulas(4).sample(rng));
            let mut times = vec![0u64];
            for _ in 1..m.len() {
                let last = *times.last().unwrap();
                times.push(last + rng.gen_range(0..=7));
            }
            let other = m.with_times(times).unwrap();
            let (a, b) = (
                sat_all(&m, &f, World::Here),
                sat_all(&other, &f, World::Here),
            );
            if a == b {
                Ok(())
            } else {
                Err(format!("`{f}` depends on time stamps: {m} vs {other}"))
            }
        },
    )
}

// ---------------------------------------------------------------------------
// Strict-trace equivalences and rewrite passes

fn small(gen: &FormulaGen, rng: &mut ChaCha8Rng) -> Formula {
    gen.sample(rng)
}

fn equivalence_suite(
    name: &str,
    cases: usize,
    seed: u64,
    mut build: impl FnMut(&mut ChaCha8Rng, usize) -> Result<(Formula, Formula), String>,
) -> Report {
    let mut case = 0;
    run(name, cases, seed, |rng| {
        let (lhs, rhs) = build(rng, case)?;
        case += 1;
        let m = strict_trace(rng);
        agree(&m, &lhs, &rhs)
    })
}

/// Collapse at `[0..0]`, `cases` per operator: binary operators to their right operand, next and
/// previous to `⊥`, their weak forms to `⊤`.
pub fn zero_collapse(cases: usize, seed: u64) -> Report {
    let zero = Interval::point(0);
    let ops = [
        BinaryTemporal::Until,
        BinaryTemporal::Release,
        BinaryTemporal::Since,
        BinaryTemporal::Trigger,
    ];
    all(
        "collapse at [0..0]",
        vec![
            equivalence_suite("binary", 4 * cases, seed, |rng, case| {
                let gen = formulas(2);
                let op = ops[case % 4];
                let (a, b) = (small(&gen, rng), small(&gen, rng));
                Ok((op.build(zero, a, b.clone()), b))
            }),
            equivalence_suite("next/previous", 2 * cases, seed + 1, |rng, case| {
                let a = small(&formulas(2), rng);
                let f = if case % 2 == 0 {
                    Formula::next(zero, a)
                } else {
                    Formula::prev(zero, a)
                };
                Ok((f, Formula::Bottom))
            }),
            equivalence_suite("weak next/previous", 2 * cases, seed + 2, |rng, case| {
                let a = small(&formulas(2), rng);
                let f = if case % 2 == 0 {
                    Formula::weak_next(zero, a)
                } else {
                    Formula::weak_prev(zero, a)
                };
                Ok((f, Formula::top()))
            }),
        ],
    )
}

struct Family {
    future: bool,
}

impl Family {
    fn step(&self, d: u64, a: Formula) -> Formula {
        if self.future {
            Formula::next(Interval::point(d), a)
        } else {
            Formula::prev(Interval::point(d), a)
        }
    }

    fn weak_step(&self, d: u64, a: Formula) -> Formula {
        if self.future {
            Formula::weak_next(Interval::point(d), a)
        } else {
            Formula::weak_prev(Interval::point(d), a)
        }
    }

    fn until(&self, i: Interval, a: Formula, b: Formula) -> Formula {
        if self.future {
            Formula::until(i, a, b)
        } else {
            Formula::since(i, a, b)
        }
    }

    fn release(&self, i: Interval, a: Formula, b: Formula) -> Formula {
        if self.future {
            Formula::release(i, a, b)
        } else {
            Formula::trigger(i, a, b)
        }
    }

    fn eventually(&self, i: Interval, a: Formula) -> Formula {
        self.until(i, Formula::top(), a)
    }

    fn always(&self, i: Interval, a: Formula) -> Formula {
        self.release(i, Formula::Bottom, a)
    }
}

/// Single-point unfolding at `[n..n]`, `n > 0`: `cases` for each of the
/// eight equations (U, R, F, G and their past counterparts).
pub fn point_unfolding(cases: usize, seed: u64) -> Report {
    equivalence_suite("single-point unfolding", 8 * cases, seed, |rng, case| {
        let fam = Family {
            future: case % 2 == 0,
        };
        let gen = formulas(2);
        let (psi, phi) = (small(&gen, rng), small(&gen, rng));
        let n = rng.gen_range(1..=5u64);
        let at = Interval::point;
        Ok(match case / 2 % 4 {
            0 => (
                fam.until(at(n), psi.clone(), phi.clone()),
                Formula::and(
                    psi.clone(),
                    Formula::disjunction(
                        (1..=n)
                            .map(|i| fam.step(i, fam.until(at(n - i), psi.clone(), phi.clone()))),
                    ),
                ),
            ),
            1 => (
                fam.release(at(n), psi.clone(), phi.clone()),
                Formula::or(
                    psi.clone(),
                    Formula::conjunction((1..=n).map(|i| {
                        fam.weak_step(i, fam.release(at(n - i), psi.clone(), phi.clone()))
                    })),
                ),
            ),
            2 => (
                fam.eventually(at(n), phi.clone()),
                Formula::disjunction(
                    (1..=n).map(|i| fam.step(i, fam.eventually(at(n - i), phi.clone()))),
                ),
            ),
            _ => (
                fam.always(at(n), phi.clone()),
                Formula::conjunction(
                    (1..=n).map(|i| fam.weak_step(i, fam.always(at(n - i), phi.clone()))),
                ),
            ),
        })
    })
}

/// Zero-based unfolding at `[0..n]`, `n > 0`: `cases` for each of the
/// four equations.
pub fn zero_based_unfolding(cases: usize, seed: u64) -> Report {
    equivalence_suite("zero-based unfolding", 4 * cases, seed, |rng, case| {
        let fam = Family {
            future: case % 2 == 0,
        };
        let gen = formulas(2);
        let (psi, phi) = (small(&gen, rng), small(&gen, rng));
        let n = rng.gen_range(1..=5u64);
        let closed = |k: u64| Interval::new(0, k + 1);
        Ok(if case / 2 % 2 == 0 {
            (
                fam.until(closed(n), psi.clone(), phi.clone()),
                Formula::or(
                    phi.clone(),
                    Formula::and(
                        psi.clone(),
                        Formula::disjunction((1..=n).map(|i| {
                            fam.step(i, fam.until(closed(n - i), psi.clone(), phi.clone()))
                        })),
                    ),
                ),
            )
        } else {
            (
                fam.release(closed(n), psi.clone(), phi.clone()),
                Formula::and(
                    phi.clone(),
                    Formula::or(
                        psi.clone(),
                        Formula::conjunction((1..=n).map(|i| {
                            fam.weak_step(i, fam.release(closed(n - i), psi.clone(), phi.clone()))
                        })),
                    ),
                ),
            )
        })
    })
}

/// Next-unfolding of `[m..n)` with `0 < m < n − 1`: `cases` for each of
/// the four equations.
pub fn next_unfolding(cases: usize, seed: u64) -> Report {
    equivalence_suite("next-unfolding", 4 * cases, seed, |rng, case| {
        let fam = Family {
            future: case % 2 == 0,
        };
        let gen = formulas(2);
        let (psi, phi) = (small(&gen, rng), small(&gen, rng));
        let m = rng.gen_range(1..=4u64);
        let n = rng.gen_range(m + 2..=m + 4);
        let closed = |k: u64| Interval::new(0, k + 1);
        Ok(if case / 2 % 2 == 0 {
            let shifted = (1..=m).map(|i| {
                fam.step(
                    i,
                    fam.until(Interval::new(m - i, n - i), psi.clone(), phi.clone()),
                )
            });
            let tail = (m + 1..n)
                .map(|i| fam.step(i, fam.until(closed(n - 1 - i), psi.clone(), phi.clone())));
            (
                fam.until(Interval::new(m, n), psi.clone(), phi.clone()),
                Formula::and(psi.clone(), Formula::disjunction(shifted.chain(tail))),
            )
        } else {
            let shifted = (1..=m).map(|i| {
                fam.weak_step(
                    i,
                    fam.release(Interval::new(m - i, n - i), psi.clone(), phi.clone()),
                )
            });
            let tail = (m + 1..n).map(|i| {
                fam.weak_step(i, fam.release(closed(n - 1 - i), psi.clone(), phi.clone()))
            });
            (
                fam.release(Interval::new(m, n), psi.clone(), phi.clone()),
                Formula::or(psi.clone(), Formula::conjunction(shifted.chain(tail))),
            )
        })
    })
}

fn pass_suite(
    name: &str,
    cases: usize,
    seed: u64,
    gen: FormulaGen,
    pass: impl Fn(&Formula) -> Result<Formula, String>,
) -> Report {
    equivalence_suite(name, cases, seed, |rng, _| {
        let f = gen.sample(rng);
        let g = pass(&f)?;
        Ok((f, g))
    })
}

pub fn unfold_pass(cases: usize, seed: u64) -> Report {
    let gen = FormulaGen::new(&["p", "q", "r"], 3, 4).bounded();
    pass_suite("unf pass", cases, seed, gen, |f| {
        let g = unfold_next(f).map_err(|e| e.to_string())?;
        let mut binary = false;
        g.visit(&mut |h| binary |= h.as_binary_temporal().is_some());
        if binary {
            return Err(format!("`{g}` still has a binary temporal node"));
        }
        Ok(g)
    })
}

/// Range splitting, `cases` per operator.
pub fn split_pass(cases: usize, seed: u64) -> Report {
    equivalence_suite("range splitting", 4 * cases, seed, |rng, case| {
        let gen = formulas(2);
        let ops = [
            BinaryTemporal::Until,
            BinaryTemporal::Release,
            BinaryTemporal::Since,
            BinaryTemporal::Trigger,
        ];
        let op = ops[case % 4];
        let i = gen.interval(rng);
        let top = i.upper.finite().unwrap_or(i.lower + 8);
        let at = rng.gen_range(i.lower..top);
        let f = op.build(i, gen.sample(rng), gen.sample(rng));
        let g = range_split(&f, at).map_err(|e| e.to_string())?;
        Ok((f, g))
    })
}

pub fn onestep_pass(cases: usize, seed: u64) -> Report {
    let gen = FormulaGen::new(&["p", "q", "r"], 3, 5).bounded();
    pass_suite("one-step definability", cases, seed, gen, |f| {
        one_step_eliminate(f).map_err(|e| e.to_string())
    })
}

pub fn unary_pass(cases: usize, seed: u64) -> Report {
    pass_suite("unary normal form", cases, seed, formulas(3), |f| {
        let g = to_unary_nf(f);
        if !is_unary_normal_form(&g) {
            return Err(format!("`{g}` is not in unary normal form"));
        }
        Ok(g)
    })
}

// ---------------------------------------------------------------------------
// Reversal and duality

pub fn reversal(cases: usize, seed: u64) -> Report {
    run("reversal", cases, seed, |rng| {
        let m = any_trace(rng);
        let f = formulas(4).sample(rng);
        let g = time_swap(&f);
        let r = m.reverse();
        let (a, b) = (sat_all(&m, &f, World::Here), sat_all(&r, &g, World::Here));
        let n = m.len();
        match (0..n).find(|&k| a[k] != b[n - 1 - k]) {
            Some(k) => Err(format!("`{f}` at {k} of {m} vs `{g}` on {r}")),
            None => Ok(()),
        }
    })
}

pub fn involutions(cases: usize, seed: u64) -> Report {
    all(
        "involutions",
        vec![
            run("swap twice", cases, seed, |rng| {
                let f = formulas(6).sample(rng);
                if time_swap(&time_swap(&f)) == f {
                    Ok(())
                } else {
                    Err(format!("`{f}`"))
                }
            }),
            run("dual twice", cases, seed + 1, |rng| {
                let f = formulas(6).without_implication().sample(rng);
                let d = bool_dual(&f).map_err(|e| e.to_string())?;
                if bool_dual(&d).map_err(|e| e.to_string())? == f {
                    Ok(())
                } else {
                    Err(format!("`{f}`"))
                }
            }),
        ],
    )
}

// ---------------------------------------------------------------------------
// First-order correspondence

fn correspondence(name: &str, cases: usize, seed: u64, total: bool) -> Report {
    run(name, cases, seed, |rng| {
        let mut m = TraceGen::new(alphabet(), 4, 8).strict().sample(rng);
        if total {
            m = m.total_part();
        }
        let f = formulas(3).sample(rng);
        let k = rng.gen_range(0..m.len());
        let expected = Evaluator::cached(&m).sat(World::Here, k, &f).unwrap();
        let i = induced_interpretation(&m).map_err(|e| e.to_string())?;
        let s = translate_at(&f, m.time(k)).map_err(|e| e.to_string())?;
        let got = qht_sat(&i, &s).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!(
                "`{f}` at {k} of {m}: metric {expected}, first-order {got}"
            ));
        }
        let simplified = qht_sat(&i, &simplify_fom(&s)).map_err(|e| e.to_string())?;
        if simplified != expected {
            return Err(format!("simplification changes `{s}` on {m}"));
        }
        Ok(())
    })
}

pub fn correspondence_here(cases: usize, seed: u64) -> Report {
    correspondence("first-order correspondence (here)", cases, seed, false)
}

pub fn correspondence_total(cases: usize, seed: u64) -> Report {
    correspondence("first-order correspondence (total)", cases, seed, true)
}

/// `t ⪯_δ u` or its negation holds in every interpretation.
pub fn difference_excluded_middle(cases: usize, seed: u64) -> Report {
    run("difference excluded middle", cases, seed, |rng| {
        let m = strict_trace(rng);
        let i: QhtInterpretation = induced_interpretation(&m).map_err(|e| e.to_string())?;
        let d = rng.gen_range(-12..=12);
        let f = mel::fom::parse_fom(&format!("!x !y (x <={{{d}}} y | ~x <={{{d}}} y)")).unwrap();
        if qht_sat(&i, &f).map_err(|e| e.to_string())? {
            Ok(())
        } else {
            Err(format!("fails with d = {d} on {m}"))
        }
    })
}

// ---------------------------------------------------------------------------
// Equilibrium against the oracle

pub fn equilibrium_matches_oracle(cases: usize, seed: u64) -> Report {
    use mel::equilibrium::enumerate_equilibrium;
    use mel::traces::Bounds;
    run("equilibrium models vs oracle", cases, seed, |rng| {
        let a = Arc::new(Alphabet::new(["p", "q"]).unwrap());
        let gen = FormulaGen::new(&["p", "q"], 3, 2);
        let theory: Theory = gen.theory(rng, 3);
        let max_time = rng.gen_range(0..=3);
        let bounds = Bounds::new(a.clone(), 2, max_time);
        let got = enumerate_equilibrium(&theory, &bounds).map_err(|e| e.to_string())?;
        let lengths: Vec<usize> = (1..=2).collect();
        let expected = oracle::equilibrium_models(&theory, &a, &lengths, max_time, true);
        let key = |v: &[TimedTrace]| {
            let mut k: Vec<String> = v.iter().map(|m| m.to_string()).collect();
            k.sort();
            k
        };
        if key(&got) != key(&expected) {
            return Err(format!(
                "theory {:?}: got {} models, oracle {}",
                theory
                    .formulas
                    .iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>(),
                got.len(),
                expected.len()
            ));
        }
        for m in &got {
            if !is_equilibrium(m, &theory)
                .map_err(|e| e.to_string())?
                .is_equilibrium
            {
                return Err(format!("{m} fails the second pass"));
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Traffic lights

pub const LIGHTS: &str =
    "G (red & green -> #false)\nG (~green -> red)\nG (push -> F[1..15) G[0..30] green)\n";

pub fn lights_alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(["green", "push", "red"]).unwrap())
}

fn names(m: &TimedTrace) -> Vec<Vec<String>> {
    let a = m.alphabet();
    m.there()
        .iter()
        .map(|&s| a.names_of(s).into_iter().map(str::to_string).collect())
        .collect()
}

fn report(name: &str, cases: usize, failure: Option<String>) -> Report {
    Report {
        name: name.to_string(),
        cases,
        failure,
    }
}

/// With a push at time 5, the light turns green once, at any time in 6..19.
pub fn lights_with_push() -> Report {
    use mel::equilibrium::enumerate_equilibrium;
    use mel::syntax::parse_theory;
    use mel::traces::Bounds;
    let name = "traffic lights with a push";
    let theory = parse_theory(&format!("{LIGHTS}X[5] push\n")).unwrap();
    let bounds = Bounds::new(lights_alphabet(), 3, 20).exact();
    let models = enumerate_equilibrium(&theory, &bounds).unwrap();
    let expected_states = vec![
        vec!["red".to_string()],
        vec!["push".into(), "red".into()],
        vec!["green".into()],
    ];
    let mut ends: Vec<u64> = Vec::new();
    for m in &models {
        if names(m) != expected_states || m.times()[..2] != [0, 5] {
            return report(name, models.len(), Some(format!("unexpected model {m}")));
        }
        ends.push(m.time(2));
    }
    ends.sort();
    if ends != (6..=19).collect::<Vec<_>>() {
        return report(
            name,
            models.len(),
            Some(format!("{} models, final times {ends:?}", models.len())),
        );
    }
    let oracle = oracle::equilibrium_models(
        &theory_with_axiom(&theory),
        &lights_alphabet(),
        &[3],
        20,
        true,
    );
    if oracle.len() != models.len() {
        return report(
            name,
            models.len(),
            Some(format!("oracle finds {} models", oracle.len())),
        );
    }
    report(name, models.len(), None)
}

fn theory_with_axiom(t: &Theory) -> Theory {
    let mut t = t.clone();
    t.push(mel::semantics::strictness_axiom());
    t
}

/// Without pushes the light stays red: one model per length and time map.
pub fn lights_stay_red() -> Report {
    use mel::equilibrium::enumerate_equilibrium;
    use mel::syntax::parse_theory;
    use mel::traces::{time_vectors, Bounds};
    let name = "traffic lights stay red";
    let theory = parse_theory(LIGHTS).unwrap();
    let mut checked = 0;
    for len in 1..=2 {
        for max_time in 0..=4 {
            let bounds = Bounds::new(lights_alphabet(), len, max_time).exact();
            let models = enumerate_equilibrium(&theory, &bounds).unwrap();
            checked += models.len();
            if let Some(m) = models
                .iter()
                .find(|m| names(m).iter().any(|s| s != &["red"]))
            {
                return report(name, checked, Some(format!("model {m} is not all red")));
            }
            let mut maps: Vec<Vec<u64>> = models.iter().map(|m| m.times().to_vec()).collect();
            maps.sort();
            let expected = time_vectors(len, max_time, true);
            if maps != expected {
                return report(
                    name,
                    checked,
                    Some(format!(
                        "λ={len}, max time {max_time}: {} models for {} time maps",
                        maps.len(),
                        expected.len()
                    )),
                );
            }
        }
    }
    report(name, checked, None)
}

// ---------------------------------------------------------------------------
// Bounded equivalence against the oracle

pub fn equivalence_matches_oracle(cases: usize, seed: u64) -> Report {
    use mel::equilibrium::bounded_equiv;
    use mel::exec::Exec;
    use mel::traces::Bounds;
    run("bounded equivalence vs oracle", cases, seed, |rng| {
        let a = Arc::new(Alphabet::new(["p", "q"]).unwrap());
        let gen = FormulaGen::new(&["p", "q"], 2, 2);
        let left = gen.theory(rng, 2);
        // Half the pairs are perturbations of known equivalences.
        let right = if rng.gen_bool(0.5) {
            Theory::new("", left.formulas.iter().rev().cloned().collect())
        } else {
            gen.theory(rng, 2)
        };
        let max_time = rng.gen_range(0..=3);
        let bounds = Bounds::new(a.clone(), 2, max_time);
        let got =
            bounded_equiv(&left, &right, &bounds, Exec::default()).map_err(|e| e.to_string())?;
        let expected = oracle::equivalent(&left, &right, &a, &[1, 2], max_time, true);
        if got.equivalent != expected {
            return Err(format!("verdict {} vs oracle {expected}", got.equivalent));
        }
        if let Some(cx) = got.counterexample {
            if oracle::models(&cx.trace, &left) == oracle::models(&cx.trace, &right) {
                return Err(format!(
                    "counterexample {} does not separate the theories",
                    cx.trace
                ));
            }
        }
        Ok(())
    })
}

/// Equilibrium of a strict total trace agrees with quantified equilibrium of
/// the translated theory on the induced interpretation.
pub fn equilibrium_transfer(cases: usize, seed: u64) -> Report {
    use mel::fom::{is_qel_model, Fom, DEFAULT_SUBSET_CAP};
    run("equilibrium transfer", cases, seed, |rng| {
        let gen = FormulaGen::new(&["p", "q"], 3, 3);
        let theory = gen.theory(rng, 3);
        let a = Arc::new(Alphabet::new(["p", "q"]).unwrap());
        let m = TraceGen::new(a, 3, 5).strict().total().sample(rng);
        if !is_model(&m, &theory) {
            return Ok(());
        }
        let metric = is_equilibrium(&m, &theory)
            .map_err(|e| e.to_string())?
            .is_equilibrium;
        let s = Fom::conjunction(
            theory
                .iter()
                .map(|f| translate_at(f, 0))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?,
        );
        let i = induced_interpretation(&m).map_err(|e| e.to_string())?;
        let v = is_qel_model(i.domain(), i.there(), &s, DEFAULT_SUBSET_CAP)
            .map_err(|e| e.to_string())?;
        if v.is_equilibrium != metric {
            return Err(format!(
                "{m}: metric {metric}, first-order {}",
                v.is_equilibrium
            ));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Concrete syntax

pub fn formula_roundtrip(cases: usize, seed: u64) -> Report {
    use mel::syntax::parse_formula;
    run("formula print/parse round trip", cases, seed, |rng| {
        let f = formulas(5).sample(rng);
        let text = f.to_string();
        match parse_formula(&text) {
            Ok(g) if g == f => Ok(()),
            Ok(g) => Err(format!("`{text}` reads back as `{g}`")),
            Err(e) => Err(format!("`{text}`: {e}")),
        }
    })
}

pub fn fom_roundtrip(cases: usize, seed: u64) -> Report {
    use mel::fom::parse_fom;
    run("first-order print/parse round trip", cases, seed, |rng| {
        let f = formulas(3).sample(rng);
        let t = rng.gen_range(0..10);
        let raw = translate_at(&f, t).map_err(|e| e.to_string())?;
        for s in [simplify_fom(&raw), raw] {
            let text = s.to_string();
            match parse_fom(&text) {
                Ok(g) if g == s => {}
                Ok(g) => return Err(format!("`{text}` reads back as `{g}`")),
                Err(e) => return Err(format!("`{text}`: {e}")),
            }
        }
        Ok(())
    })
}
