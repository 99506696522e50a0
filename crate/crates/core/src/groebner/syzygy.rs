use super::buchberger::{groebner, s_vector, GbOptions};
use super::order::{ModuleOrder, Term};
use super::reduce::{top_reduce_tracking, Reducers};
use super::vector::Vector;
use crate::error::Result;
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// Orders a Gröbner basis so that elements sharing a lead component appear
/// with lex-decreasing lead monomials. Iterating Schreyer syzygies from this
/// ordering loses one variable per step, so resolutions terminate.
pub fn schreyer_sort(gb: &mut [Vector]) {
    gb.sort_by(|a, b| {
        let (ta, tb) = (a.lead_term(), b.lead_term());
        ta.comp.cmp(&tb.comp).then_with(|| MonomialOrder::Lex.cmp(&tb.mon, &ta.mon))
    });
}

/// Schreyer syzygies of a Gröbner basis, taken in the given order.
///
/// Returns the induced order on the free module with basis `gb` and a
/// Gröbner basis of the syzygy module under it. For each `i` only the pairs
/// `(i, j)` whose lead multiplier minimally generates the monomial ideal
/// `(m_ji : j > i)` are kept.
pub fn schreyer_syzygies(gb: &[Vector], order: &ModuleOrder, field: Field) -> (ModuleOrder, Vec<Vector>) {
    let leads: Vec<Term> = gb.iter().map(|g| g.lead_term()).collect();
    let next = order.schreyer(&leads);
    let red = Reducers::new(gb);
    let mut out = Vec::new();
    for i in 0..gb.len() {
        let li = leads[i];
        let mut mults: Vec<(usize, Term)> = Vec::new();
        for j in i + 1..gb.len() {
            if leads[j].comp == li.comp {
                let l = li.mon.lcm(&leads[j].mon);
                mults.push((j, Term::new(li.comp, l)));
            }
        }
        let keep: Vec<(usize, Term)> = mults
            .iter()
            .enumerate()
            .filter(|(a, (_, ta))| {
                let ma = li.mon.quotient_of(&ta.mon);
                !mults.iter().enumerate().any(|(b, (_, tb))| {
                    let mb = li.mon.quotient_of(&tb.mon);
                    b != *a && mb.divides(&ma) && (mb != ma || b < *a)
                })
            })
            .map(|(_, p)| *p)
            .collect();
        for (j, lcm) in keep {
            let s = s_vector(&gb[i], &gb[j], &lcm, order, field);
            let (rest, quots) = top_reduce_tracking(&s, &red, order, field);
            debug_assert!(rest.is_zero(), "input is not a Gröbner basis");
            let mji = li.mon.quotient_of(&lcm.mon);
            let mij = leads[j].mon.quotient_of(&lcm.mon);
            let mut terms = vec![(Term::new(i as u32, mji), 1), (Term::new(j as u32, mij), field.neg(1))];
            for (k, q, c) in quots {
                terms.push((Term::new(k as u32, q), field.neg(c)));
            }
            let v = Vector::from_terms(terms, &next, field);
            debug_assert_eq!(v.lead_term(), Term::new(i as u32, mji));
            out.push(v);
        }
    }
    out.sort_by(|a, b| next.cmp(&a.lead_term(), &b.lead_term()));
    (next, out)
}

/// Generators of the kernel of the map sending `e_k` to `images[k]`, where
/// images live in a free module with the given twists. Each output vector
/// lives in the source module with twists `source_twists`.
///
/// `modulo` adds relations in the target: the result is then the kernel of
/// the induced map into the quotient.
pub fn kernel(
    images: &[Vector],
    modulo: &[Vector],
    target_twists: &[i32],
    source_twists: &[i32],
    mono: MonomialOrder,
    field: Field,
    opts: &GbOptions,
) -> Result<Vec<Vector>> {
    let r = target_twists.len() as u32;
    let mut twists = target_twists.to_vec();
    twists.extend_from_slice(source_twists);
    let order = ModuleOrder::block(mono, twists, r);
    let mut gens = Vec::with_capacity(images.len() + modulo.len());
    for (k, img) in images.iter().enumerate() {
        let mut v = img.clone();
        v.terms.push((Term::new(r + k as u32, Monomial::one()), 1));
        gens.push(v);
    }
    gens.extend(modulo.iter().cloned());
    let gb = groebner(&gens, &order, field, opts)?;
    let src = ModuleOrder::top(mono, source_twists.to_vec());
    let end = r + source_twists.len() as u32;
    let mut out: Vec<Vector> = gb
        .iter()
        .filter(|g| g.lead_term().comp >= r)
        .map(|g| g.restrict(r..end).resort(&src, field))
        .collect();
    out.sort_by(|a, b| src.cmp(&a.lead_term(), &b.lead_term()));
    Ok(out)
}
