//! Buchberger's algorithm for submodules of free modules, with Mora's normal
//! form for local orders. Ideals are handled as rank-one modules.
//!
//! Pairs are selected by sugar degree and pruned with the Gebauer–Möller
//! criteria. All pairs of the current minimal sugar are reduced concurrently
//! against a snapshot of the basis; their remainders are then inserted one by
//! one in a fixed order, so the output never depends on scheduling.

use super::vector::{Term, Vector};
use crate::par;
use crate::poly::{ModuleOrder, Monomial, MonomialOrder, Polynomial, Q};

/// Expression of an element as a combination of the original generators.
pub(crate) type Rep = Vec<Polynomial>;

const BATCH_LIMIT: usize = 48;

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub v: Vector,
    pub sugar: u32,
    pub rep: Option<Rep>,
    pub active: bool,
    lm: Monomial,
    comp: usize,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: u32,
}

fn rep_sub_mul(a: &Rep, c: &Q, m: &Monomial, b: &Rep) -> Rep {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            if y.is_zero() {
                x.clone()
            } else {
                x - &y.mul_term(c, m)
            }
        })
        .collect()
}

fn rep_scale(a: &Rep, c: &Q) -> Rep {
    a.iter().map(|p| p.scale(c)).collect()
}

/// Incremental Gröbner/standard basis builder.
#[derive(Clone)]
pub(crate) struct Builder {
    pub ord: ModuleOrder,
    pub nvars: usize,
    pub elems: Vec<Elem>,
    pairs: Vec<Pair>,
    local: bool,
    product_criterion: bool,
    /// Select one pair at a time by smallest lcm instead of by sugar.
    normal_strategy: bool,
    track: Option<usize>,
}

impl Builder {
    /// `track = Some(k)` records every element as a combination of `k`
    /// inserted generators (global orders only).
    pub fn new(ord: ModuleOrder, nvars: usize, rank: usize, track: Option<usize>) -> Self {
        let local = ord.is_local();
        assert!(!(local && track.is_some()), "cofactor tracking needs a global order");
        Builder {
            ord,
            nvars,
            elems: Vec::new(),
            pairs: Vec::new(),
            local,
            product_criterion: rank == 1 && !local,
            normal_strategy: ord.base() == MonomialOrder::Lex,
            track,
        }
    }

    /// Wraps an existing basis (e.g. a finished reduced one) for division.
    pub fn from_basis(ord: ModuleOrder, nvars: usize, rank: usize, basis: &[Vector]) -> Self {
        let mut b = Builder::new(ord, nvars, rank, None);
        for v in basis {
            let lead = v.lead().expect("basis elements are nonzero");
            b.elems.push(Elem {
                v: v.clone(),
                sugar: v.max_degree(),
                rep: None,
                active: true,
                lm: lead.m.clone(),
                comp: lead.comp,
            });
        }
        b
    }

    pub fn leading(&self, i: usize) -> (&Monomial, usize) {
        (&self.elems[i].lm, self.elems[i].comp)
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.elems.len()).filter(|&i| self.elems[i].active).collect()
    }

    fn divisor_of(&self, t: &Term, upto: usize) -> Option<usize> {
        self.elems[..upto]
            .iter()
            .position(|e| e.active && e.comp == t.comp && e.lm.divides(&t.m))
    }

    /// Reduction against the active elements among the first `upto`. With
    /// `full` unset only the leading term is made irreducible; tails are left
    /// alone until the basis is final, since under non-graded orders such as
    /// lex tail reduction by intermediate elements can blow up.
    fn reduce_global(&self, mut p: Vector, mut rep: Option<Rep>, upto: usize, full: bool) -> (Vector, Option<Rep>) {
        let mut done: Vec<Term> = Vec::new();
        while let Some(t) = p.lead() {
            match self.divisor_of(t, upto) {
                Some(g) => {
                    let e = &self.elems[g];
                    let lt = e.v.lead().unwrap();
                    let c = &t.c / &lt.c;
                    let m = e.lm.quotient_of(&t.m).unwrap();
                    if let (Some(r), Some(rg)) = (rep.as_mut(), e.rep.as_ref()) {
                        *r = rep_sub_mul(r, &c, &m, rg);
                    }
                    p = p.sub_mul(&c, &m, &e.v, &self.ord);
                }
                None if !full => {
                    done.append(&mut p.terms);
                }
                None => {
                    done.push(p.terms.remove(0));
                }
            }
        }
        (Vector { terms: done }, rep)
    }

    /// Mora's weak normal form: the leading term of the result is not
    /// divisible by any leading term, and the result equals `u·p - Σ` with
    /// `u(0) ≠ 0`.
    fn reduce_mora(&self, p: Vector, upto: usize) -> Vector {
        let mut t_set: Vec<(Vector, Monomial, usize, u32)> = self.elems[..upto]
            .iter()
            .filter(|e| e.active)
            .map(|e| (e.v.clone(), e.lm.clone(), e.comp, e.v.ecart()))
            .collect();
        let mut h = p;
        loop {
            let Some(lt) = h.lead() else {
                return h;
            };
            let best = t_set
                .iter()
                .enumerate()
                .filter(|(_, (_, lm, comp, _))| *comp == lt.comp && lm.divides(&lt.m))
                .min_by_key(|(i, (_, _, _, ec))| (*ec, *i))
                .map(|(i, _)| i);
            let Some(gi) = best else {
                return h;
            };
            let eh = h.ecart();
            let (g, glm, _, ge) = &t_set[gi];
            let c = &lt.c / &g.lead().unwrap().c;
            let m = glm.quotient_of(&lt.m).unwrap();
            let next = h.sub_mul(&c, &m, g, &self.ord);
            if *ge > eh {
                let comp = lt.comp;
                let hm = lt.m.clone();
                t_set.push((h, hm, comp, eh));
            }
            h = next;
        }
    }

    fn reduce(&self, p: Vector, rep: Option<Rep>, upto: usize) -> (Vector, Option<Rep>) {
        if self.local {
            (self.reduce_mora(p, upto), None)
        } else {
            self.reduce_global(p, rep, upto, self.normal_strategy)
        }
    }

    fn spoly(&self, pair: &Pair) -> (Vector, Option<Rep>) {
        let (a, b) = (&self.elems[pair.i], &self.elems[pair.j]);
        let ca = a.v.lead().unwrap().c.recip();
        let cb = b.v.lead().unwrap().c.recip();
        let ma = a.lm.quotient_of(&pair.lcm).unwrap();
        let mb = b.lm.quotient_of(&pair.lcm).unwrap();
        let first = Vector::zero().sub_mul(&-ca.clone(), &ma, &a.v, &self.ord);
        let s = first.sub_mul(&cb, &mb, &b.v, &self.ord);
        let rep = match (&a.rep, &b.rep) {
            (Some(ra), Some(rb)) => {
                let zero: Rep = vec![Polynomial::zero(self.nvars); ra.len()];
                let r = rep_sub_mul(&zero, &-ca, &ma, ra);
                Some(rep_sub_mul(&r, &cb, &mb, rb))
            }
            _ => None,
        };
        (s, rep)
    }

    /// Adds `v` (already reduced) as a new basis element and updates pairs.
    fn add_element(&mut self, v: Vector, rep: Option<Rep>, sugar: u32) {
        let (v, inv) = v.make_monic();
        let rep = rep.map(|r| rep_scale(&r, &inv));
        let lead = v.lead().unwrap();
        let (lm, comp) = (lead.m.clone(), lead.comp);
        let h = self.elems.len();

        let candidates: Vec<usize> = self
            .active_indices()
            .into_iter()
            .filter(|&g| self.elems[g].comp == comp)
            .collect();
        let lcms: Vec<Monomial> = candidates.iter().map(|&g| self.elems[g].lm.lcm(&lm)).collect();

        // Chain criterion on the old pairs.
        self.pairs.retain(|p| {
            if p.comp != comp || !lm.divides(&p.lcm) {
                return true;
            }
            let li = self.elems[p.i].lm.lcm(&lm);
            let lj = self.elems[p.j].lm.lcm(&lm);
            li == p.lcm || lj == p.lcm
        });

        // New pairs: drop those whose lcm is a proper multiple of another new lcm.
        let mut kept: Vec<usize> = Vec::new();
        for (idx, &g) in candidates.iter().enumerate() {
            let coprime = self.product_criterion && self.elems[g].lm.is_coprime(&lm);
            let dominated = || {
                candidates[idx + 1..]
                    .iter()
                    .enumerate()
                    .any(|(k, _)| lcms[idx + 1 + k].divides(&lcms[idx]))
                    || kept.iter().any(|&k| lcms[k].divides(&lcms[idx]))
            };
            if coprime || !dominated() {
                kept.push(idx);
            }
        }
        for idx in kept {
            let g = candidates[idx];
            if self.product_criterion && self.elems[g].lm.is_coprime(&lm) {
                continue;
            }
            let e = &self.elems[g];
            let l = &lcms[idx];
            let s = (e.sugar + l.degree() - e.lm.degree()).max(sugar + l.degree() - lm.degree());
            self.pairs.push(Pair {
                i: g,
                j: h,
                lcm: l.clone(),
                comp,
                sugar: s,
            });
        }

        if !self.local {
            for e in self.elems.iter_mut() {
                if e.active && e.comp == comp && lm.divides(&e.lm) {
                    e.active = false;
                }
            }
        }
        self.elems.push(Elem {
            v,
            sugar,
            rep,
            active: true,
            lm,
            comp,
        });
    }

    fn next_batch(&mut self) -> Vec<Pair> {
        if self.normal_strategy {
            let ord = self.ord;
            let best = (0..self.pairs.len()).min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                ord.cmp((&pa.lcm, pa.comp), (&pb.lcm, pb.comp))
                    .then(pa.i.cmp(&pb.i))
                    .then(pa.j.cmp(&pb.j))
            });
            return best.map(|k| vec![self.pairs.swap_remove(k)]).unwrap_or_default();
        }
        let Some(min_sugar) = self.pairs.iter().map(|p| p.sugar).min() else {
            return Vec::new();
        };
        let ord = self.ord;
        let (mut batch, rest): (Vec<Pair>, Vec<Pair>) =
            self.pairs.drain(..).partition(|p| p.sugar == min_sugar);
        self.pairs = rest;
        batch.sort_by(|a, b| {
            ord.cmp((&a.lcm, a.comp), (&b.lcm, b.comp))
                .then(a.i.cmp(&b.i))
                .then(a.j.cmp(&b.j))
        });
        if batch.len() > BATCH_LIMIT {
            let tail = batch.split_off(BATCH_LIMIT);
            self.pairs.extend(tail);
        }
        batch
    }

    /// Processes pairs until none remain.
    pub fn run(&mut self) {
        loop {
            let batch = self.next_batch();
            if batch.is_empty() {
                return;
            }
            let snapshot = self.elems.len();
            let this = &*self;
            let results = par::map(&batch, |pair| {
                let (s, rep) = this.spoly(pair);
                let (r, rep) = this.reduce(s, rep, snapshot);
                (r, rep, pair.sugar)
            });
            for (r, rep, sugar) in results {
                if r.is_zero() {
                    continue;
                }
                let (r, rep) = if self.elems.len() > snapshot {
                    self.reduce(r, rep, self.elems.len())
                } else {
                    (r, rep)
                };
                if !r.is_zero() {
                    self.add_element(r, rep, sugar);
                }
            }
        }
    }

    /// Adds a generator and completes the basis. Returns `false` when the
    /// generator already lies in the module spanned so far.
    pub fn insert(&mut self, v: Vector, rep: Option<Rep>) -> bool {
        let sugar = v.max_degree();
        let (r, rep) = self.reduce(v, rep, self.elems.len());
        if r.is_zero() {
            return false;
        }
        self.add_element(r, rep, sugar);
        self.run();
        true
    }

    /// Normal form of `v` against the current basis (full reduction for
    /// global orders, Mora's weak normal form for local ones).
    pub fn normal_form(&self, v: Vector) -> Vector {
        if self.local {
            self.reduce_mora(v, self.elems.len())
        } else {
            self.reduce_global(v, None, self.elems.len(), true).0
        }
    }

    /// Reduction recording the quotients: returns `(q, r)` with
    /// `v = Σ q_g · elem_g + r` over the given elements.
    pub fn divide(&self, mut p: Vector, basis: &[usize]) -> (Vec<Polynomial>, Vector) {
        let mut q: Vec<Vec<(Q, Monomial)>> = vec![Vec::new(); basis.len()];
        let mut done = Vec::new();
        while let Some(t) = p.lead() {
            let hit = basis.iter().position(|&g| {
                let e = &self.elems[g];
                e.comp == t.comp && e.lm.divides(&t.m)
            });
            match hit {
                Some(k) => {
                    let e = &self.elems[basis[k]];
                    let c = &t.c / &e.v.lead().unwrap().c;
                    let m = e.lm.quotient_of(&t.m).unwrap();
                    p = p.sub_mul(&c, &m, &e.v, &self.ord);
                    q[k].push((c, m));
                }
                None => done.push(p.terms.remove(0)),
            }
        }
        let q = q.into_iter().map(|ts| Polynomial::from_terms(self.nvars, ts)).collect();
        (q, Vector { terms: done })
    }

    /// Indices of a minimal basis: active elements whose leading term is not
    /// divisible by another one's, sorted ascending by leading term.
    pub fn minimal_indices(&self) -> Vec<usize> {
        let act = self.active_indices();
        let mut keep: Vec<usize> = act
            .iter()
            .copied()
            .filter(|&i| {
                let ei = &self.elems[i];
                !act.iter().any(|&j| {
                    let ej = &self.elems[j];
                    j != i
                        && ej.comp == ei.comp
                        && ej.lm.divides(&ei.lm)
                        && (ej.lm != ei.lm || j < i)
                })
            })
            .collect();
        let ord = self.ord;
        keep.sort_by(|&a, &b| {
            let (ea, eb) = (&self.elems[a], &self.elems[b]);
            ord.cmp((&ea.lm, ea.comp), (&eb.lm, eb.comp))
        });
        keep
    }

    /// Final basis. Global orders give the reduced (monic, inter-reduced)
    /// basis; local orders a minimal standard basis with unit leading
    /// coefficients.
    pub fn finish(&self) -> (Vec<Vector>, Option<Vec<Rep>>) {
        let keep = self.minimal_indices();
        if self.local {
            let vs = keep.iter().map(|&i| self.elems[i].v.clone()).collect();
            return (vs, None);
        }
        let sub = Builder {
            elems: keep.iter().map(|&i| self.elems[i].clone()).collect(),
            pairs: Vec::new(),
            ..self.clone_config()
        };
        let idx: Vec<usize> = (0..keep.len()).collect();
        let reduced = par::map(&idx, |&k| {
            let mut other = sub.clone_shallow();
            other.elems[k].active = false;
            let e = &sub.elems[k];
            let (r, rep) = other.reduce_global(e.v.clone(), e.rep.clone(), other.elems.len(), true);
            let (r, inv) = r.make_monic();
            (r, rep.map(|x| rep_scale(&x, &inv)))
        });
        let reps = self
            .track
            .map(|_| reduced.iter().map(|(_, r)| r.clone().unwrap()).collect());
        (reduced.into_iter().map(|(v, _)| v).collect(), reps)
    }

    fn clone_config(&self) -> Builder {
        Builder {
            ord: self.ord,
            nvars: self.nvars,
            elems: Vec::new(),
            pairs: Vec::new(),
            local: self.local,
            product_criterion: self.product_criterion,
            normal_strategy: self.normal_strategy,
            track: self.track,
        }
    }

    fn clone_shallow(&self) -> Builder {
        Builder {
            elems: self.elems.clone(),
            ..self.clone_config()
        }
    }

    fn unit_rep(&self, i: usize) -> Option<Rep> {
        self.track.map(|n| {
            (0..n)
                .map(|j| {
                    if j == i {
                        Polynomial::one(self.nvars)
                    } else {
                        Polynomial::zero(self.nvars)
                    }
                })
                .collect()
        })
    }
}

/// Computes a basis of the module generated by `gens`.
pub(crate) fn compute(gens: &[Vector], ord: ModuleOrder, nvars: usize, rank: usize, track: bool) -> Builder {
    let mut b = Builder::new(ord, nvars, rank, track.then_some(gens.len()));
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let rep = b.unit_rep(i);
        let sugar = g.max_degree();
        let (r, rep) = b.reduce(g.clone(), rep, b.elems.len());
        if !r.is_zero() {
            b.add_element(r, rep, sugar);
        }
    }
    b.run();
    b
}
