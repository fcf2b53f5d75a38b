//! Words, noncommutative polynomials, and weighted shortlex term orders.

use crate::exactnum::Field;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Generator index into an [`Alphabet`].
pub type Gen = u16;

/// A word in the free monoid on the alphabet; the empty word is the unit.
pub type Word = SmallVec<[Gen; 8]>;

pub fn word(gens: &[Gen]) -> Word {
    Word::from_slice(gens)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
}

/// A generator alphabet with filtration weights and a precedence order.
///
/// The precedence lists generator indices from largest to smallest; it is the
/// "variable ordering" of a shortlex presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    weights: Vec<u32>,
    /// rank_of[g] = position of g in the precedence list (0 = largest)
    rank_of: Vec<u32>,
}

impl Alphabet {
    /// `precedence` lists generator names from largest to smallest; it must
    /// be a permutation of `names`.
    pub fn new(names: &[(&str, u32)], precedence: &[&str]) -> Arc<Self> {
        let name_list: Vec<String> = names.iter().map(|(n, _)| n.to_string()).collect();
        assert!(!name_list.is_empty(), "alphabet needs at least one generator");
        let mut uniq = name_list.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), name_list.len(), "generator names must be unique");
        assert_eq!(precedence.len(), name_list.len(), "precedence must list every generator");
        let weights = names.iter().map(|(_, w)| *w).collect();
        let mut rank_of = vec![u32::MAX; name_list.len()];
        for (rank, pname) in precedence.iter().enumerate() {
            let g = name_list
                .iter()
                .position(|n| n == pname)
                .unwrap_or_else(|| panic!("precedence name {} not in alphabet", pname));
            rank_of[g] = rank as u32;
        }
        assert!(rank_of.iter().all(|&r| r != u32::MAX));
        Arc::new(Alphabet { names: name_list, weights, rank_of })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn gen_by_name(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| i as Gen)
    }

    pub fn weight_of(&self, g: Gen) -> u32 {
        self.weights[g as usize]
    }

    pub fn rank_of(&self, g: Gen) -> u32 {
        self.rank_of[g as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn word_weight(&self, w: &[Gen]) -> u32 {
        w.iter().map(|&g| self.weights[g as usize]).sum()
    }

    /// Parses a single generator name into its index.
    pub fn gen(&self, name: &str) -> Gen {
        self.gen_by_name(name)
            .unwrap_or_else(|| panic!("unknown generator {}", name))
    }

    pub fn format_word(&self, w: &[Gen]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let single = self.names.iter().all(|n| n.chars().count() == 1);
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let g = w[i];
            let mut run = 1;
            while i + run < w.len() && w[i + run] == g {
                run += 1;
            }
            let base = self.name(g).to_string();
            parts.push(if run == 1 { base } else { format!("{}^{}", base, run) });
            i += run;
        }
        parts.join(if single { "" } else { "*" })
    }
}

/// Weighted shortlex: compare total weight, then length, then precedence
/// lexicographically.  This is a total well-order compatible with
/// concatenation even in the presence of weight-0 generators, because the
/// length tiebreak keeps descending chains finite.
#[derive(Debug, Clone)]
pub struct TermOrder {
    pub alphabet: Arc<Alphabet>,
}

impl TermOrder {
    pub fn new(alphabet: Arc<Alphabet>) -> Self {
        TermOrder { alphabet }
    }

    pub fn compare(&self, u: &[Gen], v: &[Gen]) -> Ordering {
        let a = &self.alphabet;
        match a.word_weight(u).cmp(&a.word_weight(v)) {
            Ordering::Equal => {}
            o => return o,
        }
        match u.len().cmp(&v.len()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (&x, &y) in u.iter().zip(v.iter()) {
            // smaller rank = larger generator
            match a.rank_of[y as usize].cmp(&a.rank_of[x as usize]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

/// An element of the free associative algebra: finitely many words with
/// nonzero coefficients, stored sorted descending in the term order.
#[derive(Clone, PartialEq)]
pub struct NcPoly<F: Field> {
    pub terms: Vec<(Word, F)>,
}

impl<F: Field> NcPoly<F> {
    pub fn zero() -> Self {
        NcPoly { terms: vec![] }
    }

    pub fn one() -> Self {
        NcPoly { terms: vec![(Word::new(), F::one())] }
    }

    pub fn scalar(c: F) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            NcPoly { terms: vec![(Word::new(), c)] }
        }
    }

    pub fn gen(g: Gen) -> Self {
        NcPoly { terms: vec![(word(&[g]), F::one())] }
    }

    pub fn monomial(w: Word, c: F) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            NcPoly { terms: vec![(w, c)] }
        }
    }

    /// Builds from unordered terms, merging duplicates and dropping zeros.
    pub fn from_terms(mut terms: Vec<(Word, F)>, order: &TermOrder) -> Self {
        let a = &order.alphabet;
        terms.sort_by_cached_key(|(w, _)| {
            let ranks: Vec<u32> = w.iter().map(|&g| a.rank_of(g)).collect();
            (
                std::cmp::Reverse(a.word_weight(w)),
                std::cmp::Reverse(w.len()),
                ranks,
            )
        });
        let mut out: Vec<(Word, F)> = Vec::with_capacity(terms.len());
        for (w, c) in terms {
            if let Some((lw, lc)) = out.last_mut() {
                if *lw == w {
                    *lc = lc.clone() + c;
                    if lc.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((w, c));
            }
        }
        NcPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Word, &F)> {
        self.terms.first().map(|(w, c)| (w, c))
    }

    pub fn add(&self, other: &Self, order: &TermOrder) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::from_terms(terms, order)
    }

    pub fn sub(&self, other: &Self, order: &TermOrder) -> Self {
        self.add(&other.scale(&-F::one()), order)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    /// Free-algebra product (concatenation of words, bilinear).
    pub fn mul(&self, other: &Self, order: &TermOrder) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                terms.push((w, a.clone() * b.clone()));
            }
        }
        Self::from_terms(terms, order)
    }

    /// a * self * b for words a, b.
    pub fn sandwich(&self, a: &[Gen], b: &[Gen], order: &TermOrder) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut nw = Word::from_slice(a);
                nw.extend_from_slice(w);
                nw.extend_from_slice(b);
                (nw, c.clone())
            })
            .collect();
        Self::from_terms(terms, order)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Option<Self> {
        let (_, c) = self.leading()?;
        let inv = c.inv()?;
        Some(self.scale(&inv))
    }

    /// Substitutes an image polynomial for every generator.
    pub fn substitute(&self, images: &[NcPoly<F>], order: &TermOrder) -> Self {
        let mut acc = Self::zero();
        for (w, c) in &self.terms {
            let mut prod = Self::scalar(c.clone());
            for &g in w.iter() {
                prod = prod.mul(&images[g as usize], order);
            }
            acc = acc.add(&prod, order);
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, f: &impl Fn(&F) -> G) -> NcPoly<G> {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter_map(|(w, c)| {
                    let v = f(c);
                    if v.is_zero() {
                        None
                    } else {
                        Some((w.clone(), v))
                    }
                })
                .collect(),
        }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let cs = c.coeff_string();
            let piece = if w.is_empty() {
                cs.clone()
            } else if cs == "1" {
                alphabet.format_word(w)
            } else if cs == "-1" {
                format!("-{}", alphabet.format_word(w))
            } else if cs.contains(['+', '-', ' ']) && !cs.starts_with('-') {
                format!("({})*{}", cs, alphabet.format_word(w))
            } else if cs.contains(['+', ' ']) {
                format!("({})*{}", cs, alphabet.format_word(w))
            } else {
                format!("{}*{}", cs, alphabet.format_word(w))
            };
            if i == 0 {
                out.push_str(&piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

impl<F: Field> fmt::Debug for NcPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{:?}*{:?}", c, w.iter().collect::<Vec<_>>())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Rat};

    fn bc_alphabet() -> (Arc<Alphabet>, TermOrder) {
        // E6-style: b of weight 1, c of weight 0, precedence b > c
        let a = Alphabet::new(&[("b", 1), ("c", 0)], &["b", "c"]);
        let o = TermOrder::new(a.clone());
        (a, o)
    }

    #[test]
    fn weight_dominates_length() {
        let (a, o) = bc_alphabet();
        let b = a.gen("b");
        let c = a.gen("c");
        // c^5 < b even though it is longer
        assert_eq!(o.compare(&[c, c, c, c, c], &[b]), Ordering::Less);
        // equal weight and length: b^2 c > b c b  (b largest)
        assert_eq!(o.compare(&[b, b, c], &[b, c, b]), Ordering::Greater);
    }

    #[test]
    fn monotonicity_under_concatenation() {
        let (a, o) = bc_alphabet();
        let b = a.gen("b");
        let c = a.gen("c");
        let words: Vec<Vec<Gen>> = vec![
            vec![],
            vec![c],
            vec![b],
            vec![c, c],
            vec![b, c],
            vec![c, b],
            vec![b, b],
            vec![b, c, b],
        ];
        for u in &words {
            for v in &words {
                if o.compare(u, v) == Ordering::Less {
                    for w in &words {
                        let mut uw = u.clone();
                        uw.extend(w);
                        let mut vw = v.clone();
                        vw.extend(w);
                        assert_eq!(o.compare(&uw, &vw), Ordering::Less);
                        let mut wu = w.clone();
                        wu.extend(u);
                        let mut wv = w.clone();
                        wv.extend(v);
                        assert_eq!(o.compare(&wu, &wv), Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn product_keeps_noncommutativity() {
        let (a, o) = bc_alphabet();
        let b = NcPoly::<Rat>::gen(a.gen("b"));
        let c = NcPoly::<Rat>::gen(a.gen("c"));
        // (b + c)(b - c) = b^2 - bc + cb - c^2
        let p = b.add(&c, &o).mul(&b.sub(&c, &o), &o);
        assert_eq!(p.terms.len(), 4);
        assert_eq!(a.format_word(p.leading().unwrap().0), "b^2");
        // leading term of (bc)(bc) is bcbc
        let bc = b.mul(&c, &o);
        let sq = bc.mul(&bc, &o);
        assert_eq!(a.format_word(sq.leading().unwrap().0), "bcbc");
    }

    #[test]
    fn multiply_is_associative_on_samples() {
        let (a, o) = bc_alphabet();
        let b = NcPoly::<Rat>::gen(a.gen("b"));
        let c = NcPoly::<Rat>::gen(a.gen("c"));
        let p = b.add(&c.scale(&rat(2, 3)), &o);
        let q = c.mul(&b, &o).sub(&NcPoly::one(), &o);
        let r = b.mul(&b, &o).add(&c, &o);
        let lhs = p.mul(&q, &o).mul(&r, &o);
        let rhs = p.mul(&q.mul(&r, &o), &o);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn formatting() {
        let (a, o) = bc_alphabet();
        let b = NcPoly::<Rat>::gen(a.gen("b"));
        let c = NcPoly::<Rat>::gen(a.gen("c"));
        let p = b.mul(&b, &o).sub(&c.scale(&rat(1, 2)), &o);
        assert_eq!(p.format(&a), "b^2 - 1/2*c");
    }
}
