// Stable-model search for objective programs.
//
// The search assigns atoms by backtracking. After every decision it runs
// propagation to a fixpoint:
//   * rules as clauses: a satisfied body with one open head atom forces it,
//     a falsified head with one open body literal falsifies that literal;
//   * support: an atom with no rule that could still derive it is false;
//   * unfounded sets: an atom that cannot be derived from the rules whose
//     bodies are not yet false, starting from facts and going through
//     positive body atoms only, is false. This cuts positive loops such as
//     `a :- b. b :- a.` that support alone accepts.
// Complete assignments are models of the program that are supported, and are
// then checked for minimality against their reduct. Normal reducts use a
// least-model comparison; disjunctive reducts search for a strictly smaller
// model with a small DPLL procedure.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::atom::AtomId;
use crate::interp::Interpretation;
use crate::program::{Literal, Negation, Program};

#[derive(Clone, Copy, Debug)]
struct BodyLit {
    atom: usize,
    neg: Negation,
}

impl BodyLit {
    /// Value the atom must take for the literal to hold.
    fn wants(self) -> bool {
        self.neg != Negation::Once
    }
}

#[derive(Clone, Debug)]
struct GroundRule {
    head: Vec<usize>,
    body: Vec<BodyLit>,
}

/// An objective program compiled to dense atom indices.
pub(crate) struct Ground {
    atoms: Vec<AtomId>,
    rules: Vec<GroundRule>,
    heads_of: Vec<Vec<usize>>,
    /// Rules in which an atom occurs as a positive body literal.
    positive_in: Vec<Vec<usize>>,
}

impl Ground {
    /// Compiles an objective program. Subjective literals must have been
    /// removed by the caller.
    pub(crate) fn new(program: &Program) -> Self {
        let atoms: Vec<AtomId> = program.atoms().into_iter().collect();
        let dense: BTreeMap<AtomId, usize> = atoms.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let mut rules = Vec::with_capacity(program.len());
        'rules: for r in program.rules() {
            let mut body = Vec::with_capacity(r.body.len());
            for l in &r.body {
                let Literal::Obj(o) = l else {
                    panic!("subjective literal in objective engine");
                };
                match o.as_atom() {
                    Some(a) => body.push(BodyLit { atom: dense[&a], neg: o.neg }),
                    None if o.constant_value() == Some(true) => {}
                    None => continue 'rules,
                }
            }
            let mut head: Vec<usize> = r.head.iter().map(|a| dense[a]).collect();
            head.sort_unstable();
            head.dedup();
            rules.push(GroundRule { head, body });
        }
        let mut heads_of = vec![Vec::new(); atoms.len()];
        for (i, r) in rules.iter().enumerate() {
            for &h in &r.head {
                heads_of[h].push(i);
            }
        }
        let mut positive_in = vec![Vec::new(); atoms.len()];
        for (i, r) in rules.iter().enumerate() {
            for l in r.body.iter().filter(|l| l.neg == Negation::None) {
                positive_in[l.atom].push(i);
            }
        }
        Self { atoms, rules, heads_of, positive_in }
    }

    fn interpretation(&self, values: &[Option<bool>]) -> Interpretation {
        values
            .iter()
            .zip(&self.atoms)
            .filter(|(v, _)| **v == Some(true))
            .map(|(_, a)| *a)
            .collect()
    }

    /// All stable models, in no particular order.
    pub(crate) fn stable_models(&self) -> Vec<Interpretation> {
        let mut search = Search { ground: self, values: vec![None; self.atoms.len()], trail: Vec::new() };
        let mut out = Vec::new();
        if search.propagate() {
            search.branch(&mut out);
        }
        out
    }

    /// Minimality of a model of the program against its reduct. Atoms outside
    /// the program make the interpretation non-minimal.
    pub(crate) fn is_minimal_interpretation(&self, interp: &Interpretation) -> bool {
        if interp.iter().any(|a| self.atoms.binary_search(&a).is_err()) {
            return false;
        }
        let model: Vec<bool> = self.atoms.iter().map(|a| interp.contains(*a)).collect();
        self.is_minimal(&model)
    }

    /// Whether `model` (a total assignment that satisfies every rule) is a
    /// minimal model of its own reduct.
    fn is_minimal(&self, model: &[bool]) -> bool {
        let kept: Vec<&GroundRule> = self
            .rules
            .iter()
            .filter(|r| r.body.iter().all(|l| !l.neg.is_negated() || model[l.atom] == l.wants()))
            .collect();
        if kept.iter().all(|r| r.head.len() <= 1) {
            let least = least_model(self.atoms.len(), kept.iter().filter_map(|r| {
                let pos = r.body.iter().filter(|l| !l.neg.is_negated()).map(|l| l.atom);
                r.head.first().map(|&h| (h, pos.collect::<Vec<_>>()))
            }));
            return least.as_slice() == model;
        }
        !self.has_smaller_model(&kept, model)
    }

    fn has_smaller_model(&self, kept: &[&GroundRule], model: &[bool]) -> bool {
        // Variables are the true atoms of `model`; every other atom is false.
        let mut var_of = vec![usize::MAX; model.len()];
        let mut n = 0;
        for (i, &v) in model.iter().enumerate() {
            if v {
                var_of[i] = n;
                n += 1;
            }
        }
        let mut clauses: Vec<Vec<(usize, bool)>> = Vec::new();
        for r in kept {
            let pos: Vec<usize> = r.body.iter().filter(|l| !l.neg.is_negated()).map(|l| l.atom).collect();
            if pos.iter().any(|&a| !model[a]) {
                continue;
            }
            let mut clause: Vec<(usize, bool)> = pos.iter().map(|&a| (var_of[a], false)).collect();
            clause.extend(r.head.iter().filter(|&&h| model[h]).map(|&h| (var_of[h], true)));
            clauses.push(clause);
        }
        clauses.push((0..n).map(|v| (v, false)).collect());
        dpll(vec![None; n], &clauses)
    }
}

/// Least model of a definite program given as `(head, positive body)` pairs.
pub(crate) fn least_model(n: usize, rules: impl Iterator<Item = (usize, Vec<usize>)>) -> Vec<bool> {
    let rules: Vec<(usize, Vec<usize>)> = rules.collect();
    let mut missing: Vec<usize> = rules.iter().map(|(_, b)| b.len()).collect();
    let mut watch = vec![Vec::new(); n];
    for (i, (_, body)) in rules.iter().enumerate() {
        for &a in body {
            watch[a].push(i);
        }
    }
    let mut value = vec![false; n];
    let mut queue: Vec<usize> = Vec::new();
    for (i, (h, _)) in rules.iter().enumerate() {
        if missing[i] == 0 && !value[*h] {
            value[*h] = true;
            queue.push(*h);
        }
    }
    while let Some(a) = queue.pop() {
        for &i in &watch[a] {
            missing[i] -= 1;
            let h = rules[i].0;
            if missing[i] == 0 && !value[h] {
                value[h] = true;
                queue.push(h);
            }
        }
    }
    value
}

fn dpll(mut values: Vec<Option<bool>>, clauses: &[Vec<(usize, bool)>]) -> bool {
    loop {
        let mut changed = false;
        for c in clauses {
            let mut open = None;
            let mut n_open = 0;
            let mut sat = false;
            for &(v, want) in c {
                match values[v] {
                    Some(x) if x == want => {
                        sat = true;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        n_open += 1;
                        open = Some((v, want));
                    }
                }
            }
            if sat {
                continue;
            }
            match (n_open, open) {
                (0, _) => return false,
                (1, Some((v, want))) => {
                    values[v] = Some(want);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    match values.iter().position(Option::is_none) {
        None => true,
        Some(v) => [false, true].into_iter().any(|b| {
            let mut next = values.clone();
            next[v] = Some(b);
            dpll(next, clauses)
        }),
    }
}

struct Search<'g> {
    ground: &'g Ground,
    values: Vec<Option<bool>>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn assign(&mut self, atom: usize, value: bool) {
        self.values[atom] = Some(value);
        self.trail.push(atom);
    }

    fn undo(&mut self, mark: usize) {
        for a in self.trail.drain(mark..) {
            self.values[a] = None;
        }
    }

    fn branch(&mut self, out: &mut Vec<Interpretation>) {
        let Some(atom) = self.values.iter().position(Option::is_none) else {
            let model: Vec<bool> = self.values.iter().map(|v| *v == Some(true)).collect();
            if self.ground.is_minimal(&model) {
                out.push(self.ground.interpretation(&self.values));
            }
            return;
        };
        for value in [false, true] {
            let mark = self.trail.len();
            self.assign(atom, value);
            if self.propagate() {
                self.branch(out);
            }
            self.undo(mark);
        }
    }

    /// Returns false on conflict.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for r in &self.ground.rules {
                let mut open_lit = None;
                let mut n_open = 0;
                let mut body_false = false;
                for l in &r.body {
                    match self.values[l.atom] {
                        None => {
                            n_open += 1;
                            open_lit = Some(*l);
                        }
                        Some(v) if v != l.wants() => {
                            body_false = true;
                            break;
                        }
                        Some(_) => {}
                    }
                }
                if body_false {
                    continue;
                }
                let mut head_true = false;
                let mut open_head = None;
                let mut n_open_head = 0;
                for &h in &r.head {
                    match self.values[h] {
                        Some(true) => {
                            head_true = true;
                            break;
                        }
                        None => {
                            n_open_head += 1;
                            open_head = Some(h);
                        }
                        Some(false) => {}
                    }
                }
                if head_true {
                    continue;
                }
                if n_open == 0 {
                    match (n_open_head, open_head) {
                        (0, _) => return false,
                        (1, Some(h)) => {
                            self.assign(h, true);
                            changed = true;
                        }
                        _ => {}
                    }
                } else if n_open == 1 && n_open_head == 0 {
                    let l = open_lit.expect("one open literal");
                    self.assign(l.atom, !l.wants());
                    changed = true;
                }
            }
            for a in 0..self.values.len() {
                if self.values[a] == Some(false) {
                    continue;
                }
                if !self.ground.heads_of[a].iter().any(|&i| self.can_support(i, a)) {
                    if self.values[a] == Some(true) {
                        return false;
                    }
                    self.assign(a, false);
                    changed = true;
                }
            }
            if !changed {
                match self.falsify_unfounded() {
                    None => return false,
                    Some(false) => return true,
                    Some(true) => {}
                }
            }
        }
    }

    /// Sets every underivable atom false. `None` on conflict, otherwise
    /// whether anything changed.
    fn falsify_unfounded(&mut self) -> Option<bool> {
        let rules = &self.ground.rules;
        let mut missing: Vec<usize> = rules
            .iter()
            .map(|r| {
                let blocked = r.body.iter().any(|l| self.values[l.atom].is_some_and(|v| v != l.wants()));
                if blocked {
                    usize::MAX
                } else {
                    r.body.iter().filter(|l| l.neg == Negation::None).count()
                }
            })
            .collect();
        let mut derived = vec![false; self.values.len()];
        let mut queue: Vec<usize> = Vec::new();
        let fire = |i: usize, derived: &mut Vec<bool>, queue: &mut Vec<usize>| {
            for &h in &rules[i].head {
                if !derived[h] {
                    derived[h] = true;
                    queue.push(h);
                }
            }
        };
        for (i, &m) in missing.iter().enumerate() {
            if m == 0 {
                fire(i, &mut derived, &mut queue);
            }
        }
        while let Some(a) = queue.pop() {
            for &i in &self.ground.positive_in[a] {
                if missing[i] != usize::MAX {
                    missing[i] -= 1;
                    if missing[i] == 0 {
                        fire(i, &mut derived, &mut queue);
                    }
                }
            }
        }
        let mut changed = false;
        for (a, &d) in derived.iter().enumerate() {
            if !d {
                match self.values[a] {
                    Some(true) => return None,
                    Some(false) => {}
                    None => {
                        self.assign(a, false);
                        changed = true;
                    }
                }
            }
        }
        Some(changed)
    }

    fn can_support(&self, rule: usize, atom: usize) -> bool {
        let r = &self.ground.rules[rule];
        r.body.iter().all(|l| self.values[l.atom].is_none_or(|v| v == l.wants()))
            && r.head.iter().all(|&h| h == atom || self.values[h] != Some(true))
    }
}
