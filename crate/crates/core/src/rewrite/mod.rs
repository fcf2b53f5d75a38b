//! Noncommutative Groebner bases by Buchberger/Knuth-Bendix completion.
//!
//! A rewrite system is an interreduced set of monic rules `lead -> tail`
//! under a weighted shortlex order.  Completion processes overlap
//! obstructions FIFO by (weight of the overlap word, insertion index), so
//! the weight-ascending order gives meaning to "complete up to degree D":
//! every S-polynomial whose overlap word has weight <= D reduces to zero.

use crate::exactnum::Field;
use crate::freealg::{Gen, NcPoly, TermOrder, Word};
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("leading coefficient is not invertible")]
    LeadingCoefficientNotInvertible,
    #[error("degree bound exceeded: {0}")]
    DegreeBoundExceeded(String),
    #[error("insufficient degree bound: need {needed}, system complete up to {have}")]
    InsufficientDegreeBound { needed: u32, have: u32 },
}

/// One monic rewrite rule `lead -> tail`, with every tail word strictly
/// smaller than the lead.
#[derive(Clone, Debug)]
pub struct Rule<F: Field> {
    pub lead: Word,
    pub tail: NcPoly<F>,
}

impl<F: Field> Rule<F> {
    /// The rule as the polynomial `lead - tail`.
    pub fn as_poly(&self, order: &TermOrder) -> NcPoly<F> {
        NcPoly::monomial(self.lead.clone(), F::one()).sub(&self.tail, order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    Complete,
    CompleteUpTo(u32),
}

impl Completeness {
    pub fn covers(&self, weight: u32) -> bool {
        match self {
            Completeness::Complete => true,
            Completeness::CompleteUpTo(d) => weight <= *d,
        }
    }
}

/// An interreduced rewrite system; the computational form of a Groebner
/// basis.  Rules are sorted ascending by lead word, so output is canonical.
#[derive(Clone, Debug)]
pub struct RewriteSystem<F: Field> {
    pub order: TermOrder,
    pub rules: Vec<Rule<F>>,
    pub completeness: Completeness,
}

/// Safety limits for completion; the defaults are generous for every system
/// in the catalog.
#[derive(Clone, Copy, Debug)]
pub struct CompletionLimits {
    pub max_rules: usize,
    pub max_lead_len: usize,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits { max_rules: 50_000, max_lead_len: 96 }
    }
}

impl<F: Field> RewriteSystem<F> {
    pub fn leads(&self) -> Vec<Word> {
        self.rules.iter().map(|r| r.lead.clone()).collect()
    }

    pub fn lead_strings(&self) -> Vec<String> {
        self.rules
            .iter()
            .map(|r| self.order.alphabet.format_word(&r.lead))
            .collect()
    }

    /// True when no rule lead occurs in `w` as a subword.
    pub fn is_normal_word(&self, w: &[Gen]) -> bool {
        !self.rules.iter().any(|r| contains_subword(w, &r.lead))
    }

    /// Whether appending `g` to the normal word `w` keeps it normal: only
    /// suffixes of the extended word need checking.
    pub fn extension_stays_normal(&self, w: &[Gen], g: Gen) -> bool {
        'rules: for r in &self.rules {
            let l = r.lead.len();
            if l == 0 || l > w.len() + 1 {
                continue;
            }
            if r.lead[l - 1] != g {
                continue;
            }
            for k in 0..l - 1 {
                if w[w.len() - (l - 1) + k] != r.lead[k] {
                    continue 'rules;
                }
            }
            return false;
        }
        true
    }

    /// Reduces `p` so no term contains any rule lead as a subword.
    pub fn normal_form(&self, p: &NcPoly<F>) -> NcPoly<F> {
        let order = &self.order;
        let mut pending = p.clone();
        let mut done: Vec<(Word, F)> = Vec::new();
        while !pending.is_zero() {
            let (w, c) = pending.terms.remove(0);
            match self.find_match(&w) {
                None => done.push((w, c)),
                Some((pos, ri)) => {
                    let rule = &self.rules[ri];
                    let prefix = &w[..pos];
                    let suffix = &w[pos + rule.lead.len()..];
                    let repl = rule.tail.sandwich(prefix, suffix, order).scale(&c);
                    pending = pending.add(&repl, order);
                }
            }
        }
        NcPoly { terms: done }
    }

    /// Leftmost match position and rule index, smallest rule index on ties.
    fn find_match(&self, w: &[Gen]) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (ri, r) in self.rules.iter().enumerate() {
            if r.lead.len() > w.len() {
                continue;
            }
            for pos in 0..=(w.len() - r.lead.len()) {
                if w[pos..pos + r.lead.len()] == r.lead[..] {
                    match best {
                        None => best = Some((pos, ri)),
                        Some((bp, bi)) => {
                            if pos < bp || (pos == bp && ri < bi) {
                                best = Some((pos, ri));
                            }
                        }
                    }
                    break;
                }
            }
            if let Some((0, _)) = best {
                // cannot do better than position 0; still prefer smaller rule index
            }
        }
        best
    }

    /// True iff `normal_form(p) = 0`; requires enough completeness to decide.
    pub fn ideal_membership(&self, p: &NcPoly<F>) -> Result<bool, RewriteError> {
        let w = p
            .leading()
            .map(|(w, _)| self.order.alphabet.word_weight(w))
            .unwrap_or(0);
        if !self.completeness.covers(w) {
            if let Completeness::CompleteUpTo(d) = self.completeness {
                return Err(RewriteError::InsufficientDegreeBound { needed: w, have: d });
            }
        }
        Ok(self.normal_form(p).is_zero())
    }

    /// Re-verifies confluence post hoc: every overlap S-polynomial within the
    /// covered degree reduces to zero.
    pub fn verify_confluence(&self, up_to: u32) -> bool {
        for (i, r) in self.rules.iter().enumerate() {
            for (j, s) in self.rules.iter().enumerate() {
                for ov in overlaps(&r.lead, &s.lead) {
                    let w = overlap_word(&r.lead, &s.lead, ov);
                    if self.order.alphabet.word_weight(&w) > up_to {
                        continue;
                    }
                    let sp = s_polynomial(r, s, ov, &self.order);
                    if !self.normal_form(&sp).is_zero() {
                        let _ = (i, j);
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Reduction against a raw rule slice, used inside completion to avoid
/// cloning the system at every step.
fn nf_with<F: Field>(
    rules: &[Option<Rule<F>>],
    order: &TermOrder,
    p: &NcPoly<F>,
) -> NcPoly<F> {
    let mut pending = p.clone();
    let mut done: Vec<(Word, F)> = Vec::new();
    let mut steps: u64 = 0;
    while !pending.is_zero() {
        let (w, c) = pending.terms.remove(0);
        match find_match_with(rules, &w) {
            None => done.push((w, c)),
            Some((pos, ri)) => {
                steps += 1;
                if steps % 100_000 == 0 {
                    eprintln!(
                        "[nf] {} steps, pending {} terms, word len {} weight {}",
                        steps,
                        pending.terms.len(),
                        w.len(),
                        order.alphabet.word_weight(&w),
                    );
                }
                let rule = rules[ri].as_ref().unwrap();
                let prefix = &w[..pos];
                let suffix = &w[pos + rule.lead.len()..];
                let repl = rule.tail.sandwich(prefix, suffix, order).scale(&c);
                pending = pending.add(&repl, order);
            }
        }
    }
    NcPoly { terms: done }
}

fn find_match_with<F: Field>(rules: &[Option<Rule<F>>], w: &[Gen]) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (ri, slot) in rules.iter().enumerate() {
        let r = match slot {
            Some(r) => r,
            None => continue,
        };
        if r.lead.len() > w.len() {
            continue;
        }
        for pos in 0..=(w.len() - r.lead.len()) {
            if w[pos..pos + r.lead.len()] == r.lead[..] {
                match best {
                    None => best = Some((pos, ri)),
                    Some((bp, bi)) => {
                        if pos < bp || (pos == bp && ri < bi) {
                            best = Some((pos, ri));
                        }
                    }
                }
                break;
            }
        }
    }
    best
}

fn contains_subword(w: &[Gen], sub: &[Gen]) -> bool {
    if sub.is_empty() || sub.len() > w.len() {
        return sub.is_empty();
    }
    (0..=(w.len() - sub.len())).any(|i| &w[i..i + sub.len()] == sub)
}

/// Offset at which the suffix of `lead1` of length `k` equals the prefix of
/// `lead2`; the overlap word is `lead1 + lead2[k..]`.
fn overlaps(lead1: &[Gen], lead2: &[Gen]) -> Vec<usize> {
    let mut out = vec![];
    let top = lead1.len().min(lead2.len());
    for k in 1..top {
        if lead1[lead1.len() - k..] == lead2[..k] {
            out.push(k);
        }
    }
    out
}

fn overlap_word(lead1: &[Gen], lead2: &[Gen], k: usize) -> Word {
    let mut w = Word::from_slice(lead1);
    w.extend_from_slice(&lead2[k..]);
    w
}

/// S-polynomial of the overlap: tail1 * lead2[k..] - lead1[..n-k] * tail2.
fn s_polynomial<F: Field>(r: &Rule<F>, s: &Rule<F>, k: usize, order: &TermOrder) -> NcPoly<F> {
    let left = r.tail.sandwich(&[], &s.lead[k..], order);
    let right = s.tail.sandwich(&r.lead[..r.lead.len() - k], &[], order);
    left.sub(&right, order)
}

enum Pending<F: Field> {
    Pair { r1: usize, r2: usize, k: usize },
    Poly(NcPoly<F>),
}

/// Runs completion on `relations` under `order`, processing obstructions in
/// weight-ascending FIFO order up to `max_degree`.
pub fn complete<F: Field>(
    order: &TermOrder,
    relations: &[NcPoly<F>],
    max_degree: u32,
    limits: CompletionLimits,
) -> Result<RewriteSystem<F>, RewriteError> {
    let mut rules: Vec<Option<Rule<F>>> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(u32, u64)>> = BinaryHeap::new();
    let mut payloads: Vec<Option<Pending<F>>> = Vec::new();
    let mut seq: u64 = 0;
    let mut leftover_above_bound = false;

    let push = |heap: &mut BinaryHeap<Reverse<(u32, u64)>>,
                    payloads: &mut Vec<Option<Pending<F>>>,
                    seq: &mut u64,
                    weight: u32,
                    item: Pending<F>| {
        payloads.push(Some(item));
        heap.push(Reverse((weight, *seq)));
        *seq += 1;
    };

    for rel in relations {
        if rel.is_zero() {
            continue;
        }
        let w = order.alphabet.word_weight(rel.leading().unwrap().0);
        push(&mut heap, &mut payloads, &mut seq, w, Pending::Poly(rel.clone()));
    }

    let trace = std::env::var("GDAHA_TRACE").is_ok();
    let mut steps: u64 = 0;
    while let Some(Reverse((weight, id))) = heap.pop() {
        if weight > max_degree {
            leftover_above_bound = true;
            break;
        }
        steps += 1;
        if trace && steps % 200 == 0 {
            eprintln!(
                "[complete] step {} weight {} queue {} rules {}",
                steps,
                weight,
                heap.len(),
                rules.iter().flatten().count()
            );
        }
        let item = match payloads[id as usize].take() {
            Some(p) => p,
            None => continue,
        };
        let candidate = match item {
            Pending::Poly(p) => p,
            Pending::Pair { r1, r2, k } => match (&rules[r1], &rules[r2]) {
                (Some(a), Some(b)) => s_polynomial(a, b, k, order),
                _ => continue,
            },
        };
        let reduced = nf_with(&rules, order, &candidate);
        if reduced.is_zero() {
            continue;
        }
        let monic = reduced
            .monic()
            .ok_or(RewriteError::LeadingCoefficientNotInvertible)?;
        let lead = monic.leading().unwrap().0.clone();
        if lead.len() > limits.max_lead_len {
            return Err(RewriteError::DegreeBoundExceeded(format!(
                "rule lead length {} exceeds limit {}",
                lead.len(),
                limits.max_lead_len
            )));
        }
        let tail = NcPoly::monomial(lead.clone(), F::one()).sub(&monic, order);
        let new_rule = Rule { lead: lead.clone(), tail };

        // Interreduction: retire rules whose lead contains the new lead, and
        // renormalize the tails of the survivors.
        let mut requeue: Vec<NcPoly<F>> = Vec::new();
        for slot in rules.iter_mut() {
            if let Some(r) = slot {
                if contains_subword(&r.lead, &lead) {
                    requeue.push(r.as_poly(order));
                    *slot = None;
                }
            }
        }
        let new_idx = rules.len();
        rules.push(Some(new_rule));
        // renormalize only the tails that mention the new lead
        let needs_renorm: Vec<usize> = rules
            .iter()
            .enumerate()
            .filter_map(|(i, slot)| {
                let r = slot.as_ref()?;
                if i != new_idx
                    && r.tail.terms.iter().any(|(w, _)| contains_subword(w, &lead))
                {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        for i in needs_renorm {
            let tail = rules[i].as_ref().unwrap().tail.clone();
            let new_tail = nf_with(&rules, order, &tail);
            rules[i].as_mut().unwrap().tail = new_tail;
        }
        for p in requeue {
            if let Some((w, _)) = p.leading() {
                let wt = order.alphabet.word_weight(w);
                push(&mut heap, &mut payloads, &mut seq, wt, Pending::Poly(p));
            }
        }
        // new obstructions
        for (i, slot) in rules.iter().enumerate() {
            if let Some(r) = slot {
                for k in overlaps(&r.lead, &lead) {
                    let w = overlap_word(&r.lead, &lead, k);
                    let wt = order.alphabet.word_weight(&w);
                    push(
                        &mut heap,
                        &mut payloads,
                        &mut seq,
                        wt,
                        Pending::Pair { r1: i, r2: new_idx, k },
                    );
                }
                if i != new_idx {
                    for k in overlaps(&lead, &r.lead) {
                        let w = overlap_word(&lead, &r.lead, k);
                        let wt = order.alphabet.word_weight(&w);
                        push(
                            &mut heap,
                            &mut payloads,
                            &mut seq,
                            wt,
                            Pending::Pair { r1: new_idx, r2: i, k },
                        );
                    }
                }
            }
        }
        if rules.iter().flatten().count() > limits.max_rules {
            return Err(RewriteError::DegreeBoundExceeded(format!(
                "rule count exceeds limit {}",
                limits.max_rules
            )));
        }
    }

    let mut final_rules: Vec<Rule<F>> = rules.into_iter().flatten().collect();
    final_rules.sort_by(|a, b| order.compare(&a.lead, &b.lead));
    let mut rs = RewriteSystem {
        order: order.clone(),
        rules: final_rules,
        completeness: if leftover_above_bound {
            Completeness::CompleteUpTo(max_degree)
        } else {
            Completeness::Complete
        },
    };
    // final tail renormalization for canonical output
    let slots: Vec<Option<Rule<F>>> = rs.rules.iter().cloned().map(Some).collect();
    for r in rs.rules.iter_mut() {
        r.tail = nf_with(&slots, order, &r.tail);
    }
    Ok(rs)
}

/// Inverse of a generator from its monic minimal polynomial with invertible
/// constant term: if p(x) = x^d + ... + c_1 x + c_0 with c_0 a unit, then
/// x^{-1} = -(x^{d-1} + ... + c_1)/c_0.
pub fn inverse_from_min_poly<F: Field>(
    g: Gen,
    min_poly_coeffs: &[F],
    order: &TermOrder,
) -> Result<NcPoly<F>, RewriteError> {
    let d = min_poly_coeffs.len() - 1;
    assert!(d >= 1 && min_poly_coeffs[d].is_one(), "minimal polynomial must be monic");
    let c0_inv = min_poly_coeffs[0]
        .inv()
        .ok_or(RewriteError::LeadingCoefficientNotInvertible)?;
    let mut terms = Vec::new();
    for (k, c) in min_poly_coeffs.iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        let w = Word::from_iter(std::iter::repeat(g).take(k - 1));
        terms.push((w, -(c.clone() * c0_inv.clone())));
    }
    Ok(NcPoly::from_terms(terms, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Rat};
    use crate::freealg::Alphabet;

    /// The efficient E6 presentation at concrete generic parameters.
    fn e6_system() -> (std::sync::Arc<Alphabet>, TermOrder, Vec<NcPoly<Rat>>) {
        let a = Alphabet::new(&[("b", 1), ("c", 0)], &["b", "c"]);
        let o = TermOrder::new(a.clone());
        let b = NcPoly::<Rat>::gen(a.gen("b"));
        let c = NcPoly::<Rat>::gen(a.gen("c"));
        let (g1, g2) = (rat(2, 1), rat(3, 1));
        let (f1, f2) = (rat(5, 2), rat(1, 3));
        let (e1, e2) = (rat(7, 3), rat(4, 5));
        let q_cap = rat(2, 7);
        let pow = |x: &NcPoly<Rat>, n: usize| {
            let mut acc = NcPoly::one();
            for _ in 0..n {
                acc = acc.mul(x, &o);
            }
            acc
        };
        let rel_c = pow(&c, 3)
            .sub(&pow(&c, 2).scale(&g1), &o)
            .add(&c.scale(&g2), &o)
            .sub(&NcPoly::one(), &o);
        let rel_b = pow(&b, 3)
            .sub(&pow(&b, 2).scale(&f1), &o)
            .add(&b.scale(&f2), &o)
            .sub(&NcPoly::one(), &o);
        let bc = b.mul(&c, &o);
        let rel_bc = pow(&bc, 3)
            .sub(&pow(&bc, 2).scale(&e2), &o)
            .add(&bc.scale(&e1), &o)
            .sub(&NcPoly::scalar(q_cap), &o);
        (a, o, vec![rel_c, rel_b, rel_bc])
    }

    #[test]
    fn e6_completion_has_paper_leads() {
        let (a, o, rels) = e6_system();
        let rs = complete(&o, &rels, 12, CompletionLimits::default()).unwrap();
        assert_eq!(rs.completeness, Completeness::Complete);
        let mut leads = rs.lead_strings();
        leads.sort();
        assert_eq!(leads, vec!["b^2c^2", "b^3", "bcbc", "c^3"]);
        assert!(rs.verify_confluence(12));
        let _ = a;
    }

    #[test]
    fn e6_normal_form_properties() {
        let (a, o, rels) = e6_system();
        let rs = complete(&o, &rels, 12, CompletionLimits::default()).unwrap();
        // every defining relation is in the ideal
        for r in &rels {
            assert!(rs.ideal_membership(r).unwrap());
        }
        // 1 is not in the ideal
        assert!(!rs.ideal_membership(&NcPoly::one()).unwrap());
        // idempotence and linearity on a sample
        let b = NcPoly::<Rat>::gen(a.gen("b"));
        let c = NcPoly::<Rat>::gen(a.gen("c"));
        let p = b.mul(&b, &o).mul(&c, &o).mul(&c, &o).add(&c.mul(&b, &o), &o);
        let q = b.mul(&c, &o).mul(&b, &o).mul(&c, &o);
        let np = rs.normal_form(&p);
        assert_eq!(rs.normal_form(&np), np);
        let lin = rs.normal_form(&p.scale(&rat(3, 4)).add(&q.scale(&rat(-2, 5)), &o));
        let lin2 = np.scale(&rat(3, 4)).add(&rs.normal_form(&q).scale(&rat(-2, 5)), &o);
        assert_eq!(lin, lin2);
        // x - x is trivially in the ideal
        assert!(rs.ideal_membership(&p.sub(&p, &o)).unwrap());
    }

    #[test]
    fn inverse_helper() {
        let a = Alphabet::new(&[("c", 0)], &["c"]);
        let o = TermOrder::new(a.clone());
        // c^2 - g1 c + 1 = 0 -> c^{-1} = g1 - c
        let inv =
            inverse_from_min_poly::<Rat>(a.gen("c"), &[rat(1, 1), rat(-7, 2), rat(1, 1)], &o)
                .unwrap();
        let c = NcPoly::<Rat>::gen(a.gen("c"));
        let expect = NcPoly::scalar(rat(7, 2)).sub(&c, &o);
        assert_eq!(inv, expect);
        // constant term zero refuses
        assert!(
            inverse_from_min_poly::<Rat>(a.gen("c"), &[rat(0, 1), rat(1, 1), rat(1, 1)], &o)
                .is_err()
        );
    }
}
