use std::collections::BTreeSet;
use std::fmt;

use super::interval::Interval;

/// Kernel metric formula.
///
/// Derived connectives (⊤, ¬, ↔, □, ◇, ■, ◆, weak next/previous, initial,
/// final) have no constructor of their own; the helper functions below expand
/// them into these eleven variants immediately.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Bottom,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Prev(Interval, Box<Formula>),
    Since(Interval, Box<Formula>, Box<Formula>),
    Trigger(Interval, Box<Formula>, Box<Formula>),
    Next(Interval, Box<Formula>),
    Until(Interval, Box<Formula>, Box<Formula>),
    Release(Interval, Box<Formula>, Box<Formula>),
}

/// The four interval-indexed binary temporal connectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryTemporal {
    Until,
    Release,
    Since,
    Trigger,
}

impl BinaryTemporal {
    pub fn build(self, interval: Interval, lhs: Formula, rhs: Formula) -> Formula {
        let (l, r) = (Box::new(lhs), Box::new(rhs));
        match self {
            BinaryTemporal::Until => Formula::Until(interval, l, r),
            BinaryTemporal::Release => Formula::Release(interval, l, r),
            BinaryTemporal::Since => Formula::Since(interval, l, r),
            BinaryTemporal::Trigger => Formula::Trigger(interval, l, r),
        }
    }

    pub fn is_future(self) -> bool {
        matches!(self, BinaryTemporal::Until | BinaryTemporal::Release)
    }

    /// Until and Since are existential; Release and Trigger universal.
    pub fn is_existential(self) -> bool {
        matches!(self, BinaryTemporal::Until | BinaryTemporal::Since)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BinaryTemporal::Until => "U",
            BinaryTemporal::Release => "R",
            BinaryTemporal::Since => "S",
            BinaryTemporal::Trigger => "T",
        }
    }
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn next(i: Interval, a: Formula) -> Self {
        Formula::Next(i, Box::new(a))
    }

    pub fn prev(i: Interval, a: Formula) -> Self {
        Formula::Prev(i, Box::new(a))
    }

    pub fn until(i: Interval, a: Formula, b: Formula) -> Self {
        Formula::Until(i, Box::new(a), Box::new(b))
    }

    pub fn release(i: Interval, a: Formula, b: Formula) -> Self {
        Formula::Release(i, Box::new(a), Box::new(b))
    }

    pub fn since(i: Interval, a: Formula, b: Formula) -> Self {
        Formula::Since(i, Box::new(a), Box::new(b))
    }

    pub fn trigger(i: Interval, a: Formula, b: Formula) -> Self {
        Formula::Trigger(i, Box::new(a), Box::new(b))
    }

    /// ⊤ ≝ ¬⊥ = ⊥ → ⊥
    pub fn top() -> Self {
        Formula::implies(Formula::Bottom, Formula::Bottom)
    }

    /// ¬φ ≝ φ → ⊥
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Self {
        Formula::implies(a, Formula::Bottom)
    }

    /// φ ↔ ψ ≝ (φ → ψ) ∧ (ψ → φ)
    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    /// □_I φ ≝ ⊥ R_I φ
    pub fn always(i: Interval, a: Formula) -> Self {
        Formula::release(i, Formula::Bottom, a)
    }

    /// ◇_I φ ≝ ⊤ U_I φ
    pub fn eventually(i: Interval, a: Formula) -> Self {
        Formula::until(i, Formula::top(), a)
    }

    /// ■_I φ ≝ ⊥ T_I φ
    pub fn historically(i: Interval, a: Formula) -> Self {
        Formula::trigger(i, Formula::Bottom, a)
    }

    /// ◆_I φ ≝ ⊤ S_I φ
    pub fn once(i: Interval, a: Formula) -> Self {
        Formula::since(i, Formula::top(), a)
    }

    /// ○̂_I φ ≝ ○_I φ ∨ ¬○_I ⊤
    pub fn weak_next(i: Interval, a: Formula) -> Self {
        Formula::or(
            Formula::next(i, a),
            Formula::not(Formula::next(i, Formula::top())),
        )
    }

    /// ●̂_I φ ≝ ●_I φ ∨ ¬●_I ⊤
    pub fn weak_prev(i: Interval, a: Formula) -> Self {
        Formula::or(
            Formula::prev(i, a),
            Formula::not(Formula::prev(i, Formula::top())),
        )
    }

    /// I ≝ ¬●_{[0..ω)} ⊤
    pub fn initial() -> Self {
        Formula::not(Formula::prev(Interval::FULL, Formula::top()))
    }

    /// F ≝ ¬○_{[0..ω)} ⊤
    pub fn final_state() -> Self {
        Formula::not(Formula::next(Interval::FULL, Formula::top()))
    }

    /// Left-nested conjunction; the empty conjunction is ⊤.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or_else(Formula::top)
    }

    /// Left-nested disjunction; the empty disjunction is ⊥.
    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Self {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::Bottom)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Formula::Implies(a, b) if **a == Formula::Bottom && **b == Formula::Bottom)
    }

    /// The operand of a negation `φ → ⊥`.
    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Formula::Implies(a, b) if **b == Formula::Bottom => Some(a),
            _ => None,
        }
    }

    /// Decomposes a binary temporal node.
    pub fn as_binary_temporal(&self) -> Option<(BinaryTemporal, Interval, &Formula, &Formula)> {
        match self {
            Formula::Until(i, a, b) => Some((BinaryTemporal::Until, *i, a, b)),
            Formula::Release(i, a, b) => Some((BinaryTemporal::Release, *i, a, b)),
            Formula::Since(i, a, b) => Some((BinaryTemporal::Since, *i, a, b)),
            Formula::Trigger(i, a, b) => Some((BinaryTemporal::Trigger, *i, a, b)),
            _ => None,
        }
    }

    /// True for the unary sugar ◇, □, ◆, ■, whose left operand is a constant.
    pub fn is_unary_temporal_sugar(&self) -> bool {
        match self {
            Formula::Until(_, a, _) | Formula::Since(_, a, _) => a.is_top(),
            Formula::Release(_, a, _) | Formula::Trigger(_, a, _) => **a == Formula::Bottom,
            _ => false,
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::Bottom => {}
            _ => self.children().for_each(|c| c.collect_atoms(out)),
        }
    }

    pub fn children(&self) -> impl Iterator<Item = &Formula> {
        let (a, b): (Option<&Formula>, Option<&Formula>) = match self {
            Formula::Atom(_) | Formula::Bottom => (None, None),
            Formula::Prev(_, a) | Formula::Next(_, a) => (Some(a), None),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Since(_, a, b)
            | Formula::Trigger(_, a, b)
            | Formula::Until(_, a, b)
            | Formula::Release(_, a, b) => (Some(a), Some(b)),
        };
        a.into_iter().chain(b)
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.children().map(Formula::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().map(Formula::depth).max().unwrap_or(0)
    }

    /// All intervals attached to temporal nodes, in pre-order.
    pub fn intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        self.visit(&mut |f| match f {
            Formula::Prev(i, _)
            | Formula::Next(i, _)
            | Formula::Since(i, _, _)
            | Formula::Trigger(i, _, _)
            | Formula::Until(i, _, _)
            | Formula::Release(i, _, _) => out.push(*i),
            _ => {}
        });
        out
    }

    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        for c in self.children() {
            c.visit(f);
        }
    }

    pub fn contains_implication(&self) -> bool {
        let mut found = false;
        self.visit(&mut |f| found |= matches!(f, Formula::Implies(..)));
        found
    }

    /// Rebuilds the node with `f` applied to each direct child.
    pub fn map_children(&self, mut f: impl FnMut(&Formula) -> Formula) -> Formula {
        let mut g = |x: &Formula| Box::new(f(x));
        match self {
            Formula::Atom(_) | Formula::Bottom => self.clone(),
            Formula::And(a, b) => Formula::And(g(a), g(b)),
            Formula::Or(a, b) => Formula::Or(g(a), g(b)),
            Formula::Implies(a, b) => Formula::Implies(g(a), g(b)),
            Formula::Prev(i, a) => Formula::Prev(*i, g(a)),
            Formula::Next(i, a) => Formula::Next(*i, g(a)),
            Formula::Since(i, a, b) => Formula::Since(*i, g(a), g(b)),
            Formula::Trigger(i, a, b) => Formula::Trigger(*i, g(a), g(b)),
            Formula::Until(i, a, b) => Formula::Until(*i, g(a), g(b)),
            Formula::Release(i, a, b) => Formula::Release(*i, g(a), g(b)),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::printer::print_formula(self))
    }
}

/// Names of the derived operators accepted by [`desugar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derived {
    Top,
    Not,
    Iff,
    Historically(Interval),
    Once(Interval),
    Always(Interval),
    Eventually(Interval),
    Initial,
    Final,
    WeakPrev(Interval),
    WeakNext(Interval),
}

impl Derived {
    pub fn arity(self) -> usize {
        match self {
            Derived::Top | Derived::Initial | Derived::Final => 0,
            Derived::Iff => 2,
            _ => 1,
        }
    }
}

/// Expands a derived operator into kernel connectives.
///
/// Panics if `args.len()` does not match [`Derived::arity`].
pub fn desugar(op: Derived, args: &[Formula]) -> Formula {
    assert_eq!(
        args.len(),
        op.arity(),
        "wrong number of operands for {op:?}"
    );
    let arg = |i: usize| args[i].clone();
    match op {
        Derived::Top => Formula::top(),
        Derived::Not => Formula::not(arg(0)),
        Derived::Iff => Formula::iff(arg(0), arg(1)),
        Derived::Historically(i) => Formula::historically(i, arg(0)),
        Derived::Once(i) => Formula::once(i, arg(0)),
        Derived::Always(i) => Formula::always(i, arg(0)),
        Derived::Eventually(i) => Formula::eventually(i, arg(0)),
        Derived::Initial => Formula::initial(),
        Derived::Final => Formula::final_state(),
        Derived::WeakPrev(i) => Formula::weak_prev(i, arg(0)),
        Derived::WeakNext(i) => Formula::weak_next(i, arg(0)),
    }
}

/// A finite, ordered metric theory.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Theory {
    pub name: String,
    pub formulas: Vec<Formula>,
}

impl Theory {
    pub fn new(name: impl Into<String>, formulas: Vec<Formula>) -> Self {
        Theory {
            name: name.into(),
            formulas,
        }
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.formulas.iter()
    }

    pub fn push(&mut self, f: Formula) {
        self.formulas.push(f);
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        self.formulas.iter().flat_map(Formula::atoms).collect()
    }
}

impl<'a> IntoIterator for &'a Theory {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.formulas.iter()
    }
}
