//! Sparse vectors in free modules, module monomial orders and division.

use std::cmp::Ordering;

use crate::field::Coeff;
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

/// A module monomial order on a free module with basis `e_0, e_1, ...`.
#[derive(Clone, Debug)]
pub(crate) struct ModuleOrder {
    ring: Ring,
    kind: Kind,
}

#[derive(Clone, Debug)]
enum Kind {
    /// `m e_i` is keyed by `(m * totals[i], chains[i])`; chains compare
    /// with smaller entries counting as larger. With all totals 1 and
    /// chains `[i]` this is term-over-position.
    Schreyer { totals: Vec<Monomial>, chains: Vec<Vec<u32>> },
    /// Components below `split` dominate every component at or above it;
    /// term-over-position inside each block.
    Block { split: usize },
}

impl ModuleOrder {
    pub(crate) fn top(ring: &Ring, rank: usize) -> Self {
        ModuleOrder {
            ring: ring.clone(),
            kind: Kind::Schreyer {
                totals: vec![ring.one_monomial(); rank],
                chains: (0..rank as u32).map(|i| vec![i]).collect(),
            },
        }
    }

    pub(crate) fn block(ring: &Ring, split: usize) -> Self {
        ModuleOrder {
            ring: ring.clone(),
            kind: Kind::Block { split },
        }
    }

    pub(crate) fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match &self.kind {
            Kind::Schreyer { totals, chains } => self
                .ring
                .cmp(&a.0.mul(&totals[a.1]), &b.0.mul(&totals[b.1]))
                .then_with(|| chains[b.1].cmp(&chains[a.1])),
            Kind::Block { split } => {
                let (ba, bb) = (a.1 >= *split, b.1 >= *split);
                bb.cmp(&ba)
                    .then_with(|| self.ring.cmp(a.0, b.0))
                    .then_with(|| b.1.cmp(&a.1))
            }
        }
    }

    /// Schreyer order on a free module whose basis vectors map to elements
    /// with leading terms `lts`.
    pub(crate) fn induced(&self, lts: &[(Monomial, usize)]) -> Self {
        let Kind::Schreyer { totals, chains } = &self.kind else {
            panic!("induced order needs a Schreyer order");
        };
        let new_totals = lts.iter().map(|(m, c)| m.mul(&totals[*c])).collect();
        let new_chains = lts
            .iter()
            .enumerate()
            .map(|(i, (_, c))| {
                let mut ch = chains[*c].clone();
                ch.push(i as u32);
                ch
            })
            .collect();
        ModuleOrder {
            ring: self.ring.clone(),
            kind: Kind::Schreyer {
                totals: new_totals,
                chains: new_chains,
            },
        }
    }
}

/// Module element as terms `(monomial, component, coefficient)`, sorted
/// descending in some [`ModuleOrder`] and free of zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModVec<K> {
    pub(crate) terms: Vec<(Monomial, usize, K)>,
}

impl<K: Coeff> ModVec<K> {
    pub(crate) fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub(crate) fn from_terms(order: &ModuleOrder, mut terms: Vec<(Monomial, usize, K)>) -> Self {
        terms.sort_by(|a, b| order.cmp((&b.0, b.1), (&a.0, a.1)));
        let mut merged: Vec<(Monomial, usize, K)> = Vec::with_capacity(terms.len());
        for (m, i, c) in terms {
            match merged.last_mut() {
                Some((lm, li, lc)) if *lm == m && *li == i => *lc = lc.add(&c),
                _ => merged.push((m, i, c)),
            }
        }
        merged.retain(|t| !t.2.is_zero());
        ModVec { terms: merged }
    }

    pub(crate) fn from_dense(order: &ModuleOrder, entries: &[Polynomial<K>]) -> Self {
        let terms = entries
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| (*m, i, c.clone())))
            .collect();
        Self::from_terms(order, terms)
    }

    pub(crate) fn to_dense(&self, ring: &Ring, rank: usize) -> Vec<Polynomial<K>> {
        let mut parts: Vec<Vec<(Monomial, K)>> = vec![Vec::new(); rank];
        for (m, i, c) in &self.terms {
            parts[*i].push((*m, c.clone()));
        }
        parts.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn leading(&self) -> Option<&(Monomial, usize, K)> {
        self.terms.first()
    }

    pub(crate) fn monic(&self) -> Self {
        let Some((_, _, lc)) = self.leading() else { return self.clone() };
        let inv = lc.inv().expect("nonzero leading coefficient");
        ModVec {
            terms: self.terms.iter().map(|(m, i, c)| (*m, *i, c.mul(&inv))).collect(),
        }
    }

    /// `self += c * m * other`.
    pub(crate) fn add_scaled(&mut self, order: &ModuleOrder, c: &K, m: &Monomial, other: &Self) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + other.terms.len());
        let mut a = lhs.into_iter().peekable();
        let mut b = other.terms.iter().map(|(t, i, k)| (t.mul(m), *i, k.mul(c))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => order.cmp((&x.0, x.1), (&y.0, y.1)),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (mx, ix, cx) = a.next().unwrap();
                    let (_, _, cy) = b.next().unwrap();
                    let s = cx.add(&cy);
                    if !s.is_zero() {
                        out.push((mx, ix, s));
                    }
                }
            }
        }
        self.terms = out;
    }
}

/// Divisors grouped by the component of their leading term.
pub(crate) struct DivisorIndex {
    by_component: Vec<Vec<usize>>,
}

impl DivisorIndex {
    pub(crate) fn new<K: Coeff>(divisors: &[ModVec<K>], rank: usize) -> Self {
        let mut by_component = vec![Vec::new(); rank];
        for (k, d) in divisors.iter().enumerate() {
            if let Some((_, c, _)) = d.leading() {
                by_component[*c].push(k);
            }
        }
        DivisorIndex { by_component }
    }

    fn find<K: Coeff>(&self, divisors: &[ModVec<K>], m: &Monomial, comp: usize) -> Option<usize> {
        self.by_component[comp]
            .iter()
            .copied()
            .find(|&k| divisors[k].leading().is_some_and(|(l, _, _)| l.divides(m)))
    }
}

/// Division of `v` by monic `divisors`: returns quotient terms
/// `(monomial, divisor index, coefficient)` and the remainder.
pub(crate) fn divide<K: Coeff>(
    order: &ModuleOrder,
    v: &ModVec<K>,
    divisors: &[ModVec<K>],
    index: &DivisorIndex,
) -> (Vec<(Monomial, usize, K)>, ModVec<K>) {
    let mut quotient = Vec::new();
    let mut rem = Vec::new();
    let mut work = v.clone();
    while let Some((m, comp, c)) = work.leading().cloned() {
        match index.find(divisors, &m, comp) {
            Some(k) => {
                let lm = divisors[k].leading().expect("nonzero divisor").0;
                let u = lm.quotient(&m);
                work.add_scaled(order, &c.neg(), &u, &divisors[k]);
                quotient.push((u, k, c));
            }
            None => {
                rem.push((m, comp, c));
                work.terms.remove(0);
            }
        }
    }
    (quotient, ModVec { terms: rem })
}

/// Reduced Gröbner basis of the submodule generated by `gens` (monic,
/// homogeneous input assumed), by a plain Buchberger loop.
pub(crate) fn module_groebner<K: Coeff>(order: &ModuleOrder, gens: &[ModVec<K>], rank: usize) -> Vec<ModVec<K>> {
    let mut basis: Vec<ModVec<K>> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let push = |basis: &mut Vec<ModVec<K>>, pairs: &mut Vec<(usize, usize)>, v: ModVec<K>| {
        let comp = v.leading().expect("nonzero").1;
        let k = basis.len();
        for (j, b) in basis.iter().enumerate() {
            if b.leading().is_some_and(|l| l.1 == comp) {
                pairs.push((j, k));
            }
        }
        basis.push(v);
    };
    for g in gens {
        let index = DivisorIndex::new(&basis, rank);
        let (_, r) = divide(order, g, &basis, &index);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r.monic());
        }
    }
    while !pairs.is_empty() {
        // normal strategy: smallest lcm degree first, then the order
        let lcm_of = |(i, j): (usize, usize), basis: &[ModVec<K>]| {
            let (a, c, _) = basis[i].leading().unwrap();
            let b = &basis[j].leading().unwrap().0;
            (order.ring().lcm(a, b), *c)
        };
        let best = (0..pairs.len())
            .min_by(|&x, &y| {
                let (lx, cx) = lcm_of(pairs[x], &basis);
                let (ly, cy) = lcm_of(pairs[y], &basis);
                lx.degree()
                    .cmp(&ly.degree())
                    .then_with(|| order.cmp((&lx, cx), (&ly, cy)))
                    .then_with(|| pairs[x].cmp(&pairs[y]))
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (lcm, _) = lcm_of((i, j), &basis);
        let (li, lj) = (basis[i].leading().unwrap().0, basis[j].leading().unwrap().0);
        let one = K::one(order.ring().field());
        let mut s = ModVec::zero();
        s.add_scaled(order, &one, &li.quotient(&lcm), &basis[i]);
        s.add_scaled(order, &one.neg(), &lj.quotient(&lcm), &basis[j]);
        let index = DivisorIndex::new(&basis, rank);
        let (_, r) = divide(order, &s, &basis, &index);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r.monic());
        }
    }
    // minimalize and tail-reduce
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            let (li, ci, _) = basis[i].leading().unwrap();
            !(0..basis.len()).any(|j| {
                let (lj, cj, _) = basis[j].leading().unwrap();
                j != i && cj == ci && lj.divides(li) && (lj != li || j < i)
            })
        })
        .collect();
    let minimal: Vec<ModVec<K>> = keep.iter().map(|&i| basis[i].clone()).collect();
    (0..minimal.len())
        .map(|i| {
            let others: Vec<ModVec<K>> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v.clone())
                .collect();
            let index = DivisorIndex::new(&others, rank);
            let head = ModVec { terms: vec![minimal[i].terms[0].clone()] };
            let tail = ModVec { terms: minimal[i].terms[1..].to_vec() };
            let (_, r) = divide(order, &tail, &others, &index);
            let mut out = head;
            out.add_scaled(order, &one_of(order), &order.ring().one_monomial(), &r);
            out
        })
        .collect()
}

fn one_of<K: Coeff>(order: &ModuleOrder) -> K {
    K::one(order.ring().field())
}
