use std::collections::{BTreeSet, HashMap};

use super::ast::{Delta, Fom, Term};

/// Equivalence-preserving cleanup of a translated sentence.
///
/// Rules, applied bottom-up to a fixpoint:
/// - `t ⪯_ω u` is `#true`; `~(t ⪯_δ u)` becomes `u ⪯_{−δ−1} t`;
/// - `#true`/`#false` are absorbed by `&`, `|`, `->` and quantifiers;
/// - a quantifier whose variable does not occur is dropped (the domain is
///   never empty);
/// - conjunctions and disjunctions are flattened and deduplicated, and of
///   several `t ⪯_δ u` conjuncts over the same `(t, u)` only the least δ is
///   kept, at the position of the first;
/// - `A -> (B -> C)` becomes `A & B -> C` when `C` is not `#false`;
///
/// then bound variables are renamed by binder depth to `x, y, z, u, v, w,
/// x6, x7, …`, skipping names that occur free.
pub fn simplify_fom(f: &Fom) -> Fom {
    let mut cur = f.clone();
    loop {
        let next = simp(&cur);
        if next == cur {
            break;
        }
        cur = next;
    }
    let free = cur.free_vars();
    rename(&cur, &free, &mut Vec::new())
}

fn simp(f: &Fom) -> Fom {
    match f {
        Fom::Diff(_, Delta::Omega, _) => Fom::Top,
        Fom::Bottom | Fom::Top | Fom::Atom(..) | Fom::Diff(..) => f.clone(),
        Fom::And(..) => {
            let mut items = Vec::new();
            collect(f, true, &mut items);
            conjoin(items.iter().map(|g| simp(g)).collect())
        }
        Fom::Or(..) => {
            let mut items = Vec::new();
            collect(f, false, &mut items);
            disjoin(items.iter().map(|g| simp(g)).collect())
        }
        Fom::Implies(a, b) => implies(simp(a), simp(b)),
        Fom::Forall(v, a) | Fom::Exists(v, a) => {
            let body = simp(a);
            let universal = matches!(f, Fom::Forall(..));
            match body {
                Fom::Top | Fom::Bottom => body,
                _ if !body.free_vars().contains(v) => body,
                _ if universal => Fom::forall(v.as_str(), body),
                _ => Fom::exists(v.as_str(), body),
            }
        }
    }
}

fn collect<'a>(f: &'a Fom, conj: bool, out: &mut Vec<&'a Fom>) {
    match f {
        Fom::And(a, b) if conj => {
            collect(a, conj, out);
            collect(b, conj, out);
        }
        Fom::Or(a, b) if !conj => {
            collect(a, conj, out);
            collect(b, conj, out);
        }
        _ => out.push(f),
    }
}

/// Conjunction of already simplified items.
fn conjoin(items: Vec<Fom>) -> Fom {
    let mut flat: Vec<Fom> = Vec::new();
    for item in items {
        let mut parts = Vec::new();
        collect(&item, true, &mut parts);
        for p in parts {
            match p {
                Fom::Top => {}
                Fom::Bottom => return Fom::Bottom,
                _ if flat.contains(p) => {}
                _ => flat.push(p.clone()),
            }
        }
    }
    // Difference subsumption: t − u ≤ d implies t − u ≤ d' for d ≤ d'.
    let mut least: HashMap<(Term, Term), i64> = HashMap::new();
    for p in &flat {
        if let Fom::Diff(t, Delta::Int(d), u) = p {
            let e = least.entry((t.clone(), u.clone())).or_insert(*d);
            *e = (*e).min(*d);
        }
    }
    let mut out = Vec::new();
    for p in flat {
        match p {
            Fom::Diff(t, Delta::Int(_), u) => {
                if let Some(d) = least.remove(&(t.clone(), u.clone())) {
                    out.push(Fom::Diff(t, Delta::Int(d), u));
                }
            }
            other => out.push(other),
        }
    }
    Fom::conjunction(out)
}

fn disjoin(items: Vec<Fom>) -> Fom {
    let mut flat: Vec<Fom> = Vec::new();
    for item in items {
        let mut parts = Vec::new();
        collect(&item, false, &mut parts);
        for p in parts {
            match p {
                Fom::Bottom => {}
                Fom::Top => return Fom::Top,
                _ if flat.contains(p) => {}
                _ => flat.push(p.clone()),
            }
        }
    }
    flat.into_iter().reduce(Fom::or).unwrap_or(Fom::Bottom)
}

fn implies(a: Fom, b: Fom) -> Fom {
    match (a, b) {
        (Fom::Diff(t, Delta::Int(d), u), Fom::Bottom) => Fom::Diff(u, Delta::Int(-d - 1), t),
        (Fom::Bottom, _) | (_, Fom::Top) => Fom::Top,
        (Fom::Top, b) => b,
        (a, Fom::Implies(b, c)) if *c != Fom::Bottom => implies(conjoin(vec![a, *b]), *c),
        (a, b) => Fom::implies(a, b),
    }
}

fn canonical_name(depth: usize) -> String {
    const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    NAMES
        .get(depth)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("x{depth}"))
}

fn rename(f: &Fom, free: &BTreeSet<String>, scope: &mut Vec<(String, String)>) -> Fom {
    let term = |t: &Term, scope: &Vec<(String, String)>| match t {
        Term::Var(v) => match scope.iter().rev().find(|(old, _)| old == v) {
            Some((_, new)) => Term::Var(new.clone()),
            None => t.clone(),
        },
        _ => t.clone(),
    };
    match f {
        Fom::Bottom | Fom::Top => f.clone(),
        Fom::Atom(p, t) => Fom::Atom(p.clone(), term(t, scope)),
        Fom::Diff(t, d, u) => Fom::Diff(term(t, scope), *d, term(u, scope)),
        Fom::And(a, b) => Fom::and(rename(a, free, scope), rename(b, free, scope)),
        Fom::Or(a, b) => Fom::or(rename(a, free, scope), rename(b, free, scope)),
        Fom::Implies(a, b) => Fom::implies(rename(a, free, scope), rename(b, free, scope)),
        Fom::Forall(v, a) | Fom::Exists(v, a) => {
            let mut k = scope.len();
            let mut name = canonical_name(k);
            while free.contains(&name) || scope.iter().any(|(_, n)| *n == name) {
                k += 1;
                name = canonical_name(k);
            }
            scope.push((v.clone(), name.clone()));
            let body = rename(a, free, scope);
            scope.pop();
            if matches!(f, Fom::Forall(..)) {
                Fom::forall(name, body)
            } else {
                Fom::exists(name, body)
            }
        }
    }
}
