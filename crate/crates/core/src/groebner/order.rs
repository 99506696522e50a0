use std::cmp::Ordering;
use std::sync::Arc;

use crate::monomial::{Monomial, MonomialOrder};

/// A monomial `mon * e_comp` of a free module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub comp: u32,
    pub mon: Monomial,
}

impl Term {
    pub fn new(comp: u32, mon: Monomial) -> Self {
        Term { comp, mon }
    }

    pub fn mul(&self, m: &Monomial) -> Term {
        Term { comp: self.comp, mon: self.mon.mul(m) }
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.comp == other.comp && self.mon.divides(&other.mon)
    }
}

/// Where module components sit relative to the monomial comparison.
#[derive(Clone, Debug)]
pub enum OrderKind {
    /// Term over position: twisted degree, then monomial, then smaller
    /// component index first.
    Top,
    /// Components below `split` dominate every component at or above it;
    /// term over position inside each block. Eliminates the upper block.
    Block { split: u32 },
    /// Order induced by the lead terms of a Gröbner basis one level down.
    Schreyer(Arc<SchreyerFrame>),
}

/// Lead-term data of every basis vector, lifted to the bottom free module.
#[derive(Clone, Debug)]
pub struct SchreyerFrame {
    base: ModuleOrder,
    lift: Vec<Term>,
    chain: Vec<Vec<u32>>,
}

/// A monomial order on a graded free module `⊕ S(-twists[i])`.
#[derive(Clone, Debug)]
pub struct ModuleOrder {
    mono: MonomialOrder,
    twists: Arc<Vec<i32>>,
    kind: OrderKind,
}

impl ModuleOrder {
    pub fn top(mono: MonomialOrder, twists: Vec<i32>) -> Self {
        ModuleOrder { mono, twists: Arc::new(twists), kind: OrderKind::Top }
    }

    /// Order for ideals: one component, twist zero.
    pub fn ideal(mono: MonomialOrder) -> Self {
        Self::top(mono, vec![0])
    }

    pub fn block(mono: MonomialOrder, twists: Vec<i32>, split: u32) -> Self {
        ModuleOrder { mono, twists: Arc::new(twists), kind: OrderKind::Block { split } }
    }

    /// The order on the free module whose basis maps to elements with the
    /// given lead terms (taken in this order).
    pub fn schreyer(&self, leads: &[Term]) -> Self {
        let twists: Vec<i32> = leads.iter().map(|t| self.degree_of(t)).collect();
        let (base, lift, chain) = match &self.kind {
            OrderKind::Schreyer(frame) => {
                let lift = leads
                    .iter()
                    .map(|t| {
                        let l = frame.lift[t.comp as usize];
                        Term::new(l.comp, l.mon.mul(&t.mon))
                    })
                    .collect();
                let chain = leads
                    .iter()
                    .enumerate()
                    .map(|(k, t)| {
                        let mut c = frame.chain[t.comp as usize].clone();
                        c.push(k as u32);
                        c
                    })
                    .collect();
                (frame.base.clone(), lift, chain)
            }
            _ => {
                let chain = (0..leads.len()).map(|k| vec![k as u32]).collect();
                (self.clone(), leads.to_vec(), chain)
            }
        };
        ModuleOrder {
            mono: self.mono,
            twists: Arc::new(twists),
            kind: OrderKind::Schreyer(Arc::new(SchreyerFrame { base, lift, chain })),
        }
    }

    pub fn monomial_order(&self) -> MonomialOrder {
        self.mono
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    #[inline]
    pub fn degree_of(&self, t: &Term) -> i32 {
        t.mon.degree() as i32 + self.twists[t.comp as usize]
    }

    fn top_cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.degree_of(a)
            .cmp(&self.degree_of(b))
            .then_with(|| self.mono.cmp(&a.mon, &b.mon))
            .then_with(|| b.comp.cmp(&a.comp))
    }

    #[inline]
    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        match &self.kind {
            OrderKind::Top => self.top_cmp(a, b),
            OrderKind::Block { split } => {
                let (ua, ub) = (a.comp < *split, b.comp < *split);
                match (ua, ub) {
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    _ => self.top_cmp(a, b),
                }
            }
            OrderKind::Schreyer(frame) => {
                let la = frame.lift[a.comp as usize];
                let lb = frame.lift[b.comp as usize];
                let o = frame
                    .base
                    .cmp(&Term::new(la.comp, la.mon.mul(&a.mon)), &Term::new(lb.comp, lb.mon.mul(&b.mon)));
                if o != Ordering::Equal {
                    return o;
                }
                let (ca, cb) = (&frame.chain[a.comp as usize], &frame.chain[b.comp as usize]);
                for (x, y) in ca.iter().zip(cb) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }
}
