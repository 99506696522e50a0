use std::collections::BTreeSet;

use super::order::{ModuleOrder, Term};
use super::reduce::{normal_form, Reducers};
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::MAX_VARS;

/// Knobs for [`groebner`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbOptions {
    /// Abort once a pair or input of higher total degree shows up.
    pub degree_guard: u32,
    /// Reject inhomogeneous generators.
    pub homogeneous_only: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { degree_guard: 40, homogeneous_only: true }
    }
}

impl GbOptions {
    pub fn inhomogeneous(self) -> Self {
        GbOptions { homogeneous_only: false, ..self }
    }
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
}

type QueueKey = (i32, u8, u32, [u16; MAX_VARS], usize, usize);

fn pair_key(p: &Pair, order: &ModuleOrder) -> QueueKey {
    (order.degree_of(&p.lcm), 1, p.lcm.comp, p.lcm.mon.key(), p.i, p.j)
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
///
/// Normal selection strategy with the Gebauer–Möller criteria; the product
/// criterion is applied only to single-component (ideal) inputs. The output
/// is monic, interreduced and sorted by increasing lead term.
pub fn groebner(gens: &[Vector], order: &ModuleOrder, field: Field, opts: &GbOptions) -> Result<Vec<Vector>> {
    let single_component = order.rank() == 1;
    let mut inputs: Vec<Vector> = Vec::new();
    for g in gens {
        let g = g.resort(order, field);
        if g.is_zero() {
            continue;
        }
        if opts.homogeneous_only && !g.is_homogeneous(order) {
            return Err(Error::Inhomogeneous);
        }
        inputs.push(g.monic(field));
    }

    let mut basis: Vec<Vector> = Vec::new();
    let mut pairs: Vec<Option<Pair>> = Vec::new();
    let mut queue: BTreeSet<(QueueKey, usize)> = BTreeSet::new();
    for (k, g) in inputs.iter().enumerate() {
        let t = g.lead_term();
        queue.insert(((order.degree_of(&t), 0, t.comp, t.mon.key(), k, 0), usize::MAX));
    }

    while let Some((key, slot)) = queue.pop_first() {
        let reached = key.3.iter().map(|&e| e as u32).sum::<u32>();
        if reached > opts.degree_guard {
            return Err(Error::DegreeGuard { limit: opts.degree_guard, reached });
        }
        let candidate = if slot == usize::MAX {
            inputs[key.4].clone()
        } else {
            let Some(p) = pairs[slot].take() else { continue };
            s_vector(&basis[p.i], &basis[p.j], &p.lcm, order, field)
        };
        let red = Reducers::new(&basis);
        let h = normal_form(&candidate, &red, order, field);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(field);
        let k = basis.len();
        let hl = h.lead_term();
        basis.push(h);

        // Chain criterion on existing pairs.
        for slot in 0..pairs.len() {
            if let Some(p) = pairs[slot] {
                if hl.divides(&p.lcm) {
                    let li = basis[p.i].lead_term().mon.lcm(&hl.mon);
                    let lj = basis[p.j].lead_term().mon.lcm(&hl.mon);
                    if li != p.lcm.mon && lj != p.lcm.mon {
                        queue.remove(&(pair_key(&p, order), slot));
                        pairs[slot] = None;
                    }
                }
            }
        }

        // New pairs, pruned by divisibility among themselves.
        let mut cand: Vec<(Pair, bool)> = Vec::new();
        for i in 0..k {
            let gl = basis[i].lead_term();
            if gl.comp != hl.comp {
                continue;
            }
            let coprime = single_component && gl.mon.is_coprime(&hl.mon);
            cand.push((Pair { i, j: k, lcm: Term::new(hl.comp, gl.mon.lcm(&hl.mon)) }, coprime));
        }
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for idx in 0..cand.len() {
            let (p, coprime) = cand[idx];
            let dominated = || {
                cand[idx + 1..].iter().chain(kept.iter()).any(|(q, _)| q.lcm.mon.divides(&p.lcm.mon))
            };
            if coprime || !dominated() {
                kept.push((p, coprime));
            }
        }
        for (p, coprime) in kept {
            if coprime {
                continue;
            }
            let slot = pairs.len();
            pairs.push(Some(p));
            queue.insert((pair_key(&p, order), slot));
        }
    }
    Ok(interreduce(basis, order, field))
}

/// S-vector of two monic elements with the given lead-term lcm.
pub(crate) fn s_vector(a: &Vector, b: &Vector, lcm: &Term, order: &ModuleOrder, field: Field) -> Vector {
    let ma = a.lead_term().mon.quotient_of(&lcm.mon);
    let mb = b.lead_term().mon.quotient_of(&lcm.mon);
    a.mul_monomial(&ma).sub_mul(1, &mb, b, order, field)
}

/// Drops elements with redundant lead terms, tail-reduces the rest and
/// sorts by increasing lead term.
pub fn interreduce(basis: Vec<Vector>, order: &ModuleOrder, field: Field) -> Vec<Vector> {
    let n = basis.len();
    let mut keep = vec![true; n];
    for i in 0..n {
        let li = basis[i].lead_term();
        for j in 0..n {
            if i != j && keep[j] {
                let lj = basis[j].lead_term();
                if lj.divides(&li) && (lj != li || j < i) {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let minimal: Vec<Vector> = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Vector> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let red = Reducers::new(&others);
        let g = &minimal[i];
        let tail = Vector { terms: g.terms[1..].to_vec() };
        let mut terms = vec![g.terms[0]];
        terms.extend(normal_form(&tail, &red, order, field).terms);
        out.push(Vector { terms }.monic(field));
    }
    out.sort_by(|a, b| order.cmp(&a.lead_term(), &b.lead_term()));
    out
}
