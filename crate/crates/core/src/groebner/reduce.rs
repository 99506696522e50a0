use std::collections::HashMap;

use super::order::{ModuleOrder, Term};
use super::vector::Vector;
use crate::field::Field;
use crate::monomial::Monomial;

/// Lead-term index over a list of monic reducers.
pub struct Reducers<'a> {
    pub elems: &'a [Vector],
    by_comp: HashMap<u32, Vec<usize>>,
}

impl<'a> Reducers<'a> {
    pub fn new(elems: &'a [Vector]) -> Self {
        let mut by_comp: HashMap<u32, Vec<usize>> = HashMap::new();
        for (i, g) in elems.iter().enumerate() {
            if let Some((t, _)) = g.lead() {
                by_comp.entry(t.comp).or_default().push(i);
            }
        }
        Reducers { elems, by_comp }
    }

    /// Lowest-index reducer whose lead term divides `t`.
    pub fn find(&self, t: &Term) -> Option<(usize, Monomial)> {
        let list = self.by_comp.get(&t.comp)?;
        list.iter().find_map(|&i| {
            let lt = self.elems[i].lead_term();
            lt.mon.divides(&t.mon).then(|| (i, lt.mon.quotient_of(&t.mon)))
        })
    }
}

/// Full normal form of `f`: no remaining term is divisible by a reducer's
/// lead term.
pub fn normal_form(f: &Vector, red: &Reducers, order: &ModuleOrder, field: Field) -> Vector {
    let mut p = f.clone();
    let mut done: Vec<(Term, u32)> = Vec::new();
    loop {
        let Some(&(t, c)) = p.terms.first() else { break };
        match red.find(&t) {
            Some((i, q)) => {
                let g = &red.elems[i];
                let lc = g.terms[0].1;
                let coef = field.div(c, lc);
                p = p.sub_mul(coef, &q, g, order, field);
            }
            None => {
                done.push((t, c));
                p.terms.remove(0);
            }
        }
    }
    Vector { terms: done }
}

/// Reduces `f` until its lead term is irreducible, recording the
/// quotients: `f = sum_k q_k * g_k + rest`.
pub fn top_reduce_tracking(
    f: &Vector,
    red: &Reducers,
    order: &ModuleOrder,
    field: Field,
) -> (Vector, Vec<(usize, Monomial, u32)>) {
    let mut p = f.clone();
    let mut quots = Vec::new();
    while let Some(&(t, c)) = p.terms.first() {
        match red.find(&t) {
            Some((i, q)) => {
                let g = &red.elems[i];
                let coef = field.div(c, g.terms[0].1);
                quots.push((i, q, coef));
                p = p.sub_mul(coef, &q, g, order, field);
            }
            None => break,
        }
    }
    (p, quots)
}
