//! The presented algebra `E_n` on generators `T_1..T_{n−1}, E_1..E_{n−1}`,
//! built by noncommutative rewriting.
//!
//! Words live in the free monoid over the letters, ordered degree-lex with
//! `E_1 < … < E_{n−1} < T_1 < … < T_{n−1}`. That order points every defining
//! relation downhill: squares of `T`s drop degree in `T`, and the mixed
//! relations push `E` letters to the left, so normal words take an (E-part)
//! (T-part) shape echoing the `(b, w)` coordinates of the diagram side.
//!
//! Completion is bounded, not general: overlaps are resolved only up to a
//! degree bound, and success is certified downstream by the independent
//! dimension count rather than assumed. The normal-word set must come out
//! finite (the enumeration is breadth-first and stops at the first empty
//! length level); its size is the dimension of the quotient.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactlin::{FiniteDimAlgebra, Field, SparseVec};
use crate::{Error, Result};

/// Generator letters; `E` sorts below `T`, then by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LetterKind {
    E,
    T,
}

/// A single generator `E_i` or `T_i` (1-based index ≤ n−1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub kind: LetterKind,
    pub index: usize,
}

/// `E_i`.
pub fn e(index: usize) -> Letter {
    Letter {
        kind: LetterKind::E,
        index,
    }
}

/// `T_i`.
pub fn t(index: usize) -> Letter {
    Letter {
        kind: LetterKind::T,
        index,
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::E => write!(f, "E{}", self.index),
            LetterKind::T => write!(f, "T{}", self.index),
        }
    }
}

/// A word in the free monoid; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord(pub Vec<Letter>);

impl FreeWord {
    pub fn empty() -> FreeWord {
        FreeWord(Vec::new())
    }

    pub fn of(letters: &[Letter]) -> FreeWord {
        FreeWord(letters.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }

    pub fn ends_with(&self, suffix: &FreeWord) -> bool {
        self.len() >= suffix.len() && self.0[self.len() - suffix.len()..] == suffix.0[..]
    }

    /// First position where `factor` occurs as a contiguous subword.
    pub fn find_factor(&self, factor: &FreeWord) -> Option<usize> {
        if factor.len() > self.len() {
            return None;
        }
        (0..=self.len() - factor.len()).find(|&p| self.0[p..p + factor.len()] == factor.0[..])
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FreeWord {
    /// Degree-lex: shorter words first, ties broken letterwise.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A polynomial in the free algebra: word → coefficient, no zeros stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly<F: Field> {
    terms: BTreeMap<FreeWord, F>,
}

impl<F: Field> NcPoly<F> {
    pub fn zero() -> NcPoly<F> {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> NcPoly<F> {
        NcPoly::from_word(FreeWord::empty())
    }

    pub fn from_word(w: FreeWord) -> NcPoly<F> {
        let mut terms = BTreeMap::new();
        terms.insert(w, F::one());
        NcPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: FreeWord, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &NcPoly<F>) -> NcPoly<F> {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly<F>) -> NcPoly<F> {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &F) -> NcPoly<F> {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &NcPoly<F>) -> NcPoly<F> {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    /// Sandwich `left · self · right` with plain words.
    pub fn framed(&self, left: &[Letter], right: &[Letter]) -> NcPoly<F> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let mut v = Vec::with_capacity(left.len() + w.len() + right.len());
            v.extend_from_slice(left);
            v.extend_from_slice(&w.0);
            v.extend_from_slice(right);
            out.add_term(FreeWord(v), c.clone());
        }
        out
    }

    /// Largest term in degree-lex order.
    pub fn leading(&self) -> Option<(&FreeWord, &F)> {
        self.terms.iter().next_back()
    }
}

impl<F: Field> fmt::Display for NcPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = F::one();
        let minus_one = one.neg();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag): (&str, String) = if *c == one {
                ("+", String::new())
            } else if *c == minus_one {
                ("-", String::new())
            } else {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => ("-", format!("({rest}) ")),
                    None => ("+", format!("({s}) ")),
                }
            };
            if k == 0 {
                if sign == "-" {
                    write!(f, "- ")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if w.is_empty() && mag.is_empty() {
                write!(f, "1")?;
            } else if w.is_empty() {
                write!(f, "{}", mag.trim_end())?;
            } else {
                write!(f, "{mag}{w}")?;
            }
        }
        Ok(())
    }
}

/// An oriented rewrite rule `lhs → rhs`, with every term of `rhs` strictly
/// below `lhs`.
#[derive(Debug, Clone)]
pub struct Rule<F: Field> {
    pub lhs: FreeWord,
    pub rhs: NcPoly<F>,
}

impl<F: Field> Rule<F> {
    /// `lhs − rhs` as a polynomial.
    pub fn to_poly(&self) -> NcPoly<F> {
        NcPoly::from_word(self.lhs.clone()).sub(&self.rhs)
    }
}

impl<F: Field> fmt::Display for Rule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// Orients a nonzero polynomial into a rule: the leading word rewrites to
/// the (leading-coefficient-normalized) negation of the tail.
pub fn orient<F: Field>(p: &NcPoly<F>) -> Rule<F> {
    let (lead, coeff) = p.leading().expect("orienting the zero polynomial");
    let lead = lead.clone();
    let inv_neg = coeff.inv().neg();
    let mut rhs = NcPoly::zero();
    for (w, c) in p.terms() {
        if *w != lead {
            rhs.add_term(w.clone(), c.mul(&inv_neg));
        }
    }
    Rule { lhs: lead, rhs }
}

/// Fully reduces `p` against `rules`: no term of the output contains any
/// rule's left side as a factor. Deterministic (leftmost match, first rule).
pub fn reduce<F: Field>(p: &NcPoly<F>, rules: &[Rule<F>]) -> NcPoly<F> {
    reduce_with(p, rules, |matches| matches[0])
}

/// Reduction with a pluggable match chooser, for confluence testing.
pub fn reduce_with<F: Field>(
    p: &NcPoly<F>,
    rules: &[Rule<F>],
    mut choose: impl FnMut(&[(usize, usize)]) -> (usize, usize),
) -> NcPoly<F> {
    let mut pending = p.clone();
    let mut result = NcPoly::zero();
    while let Some((w, _)) = pending.leading() {
        let w = w.clone();
        let c = pending.terms.remove(&w).unwrap();
        let matches = all_matches(&w, rules);
        if matches.is_empty() {
            result.add_term(w, c);
            continue;
        }
        let (rule_idx, pos) = choose(&matches);
        let rule = &rules[rule_idx];
        let left = &w.0[..pos];
        let right = &w.0[pos + rule.lhs.len()..];
        let replaced = rule.rhs.framed(left, right).scale(&c);
        for (nw, nc) in replaced.terms {
            pending.add_term(nw, nc);
        }
    }
    result
}

/// Every (rule index, position) at which a rule's left side occurs in `w`,
/// positions leftmost-first.
fn all_matches<F: Field>(w: &FreeWord, rules: &[Rule<F>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for pos in 0..w.len() {
        for (ri, rule) in rules.iter().enumerate() {
            let l = rule.lhs.len();
            if l > 0 && pos + l <= w.len() && w.0[pos..pos + l] == rule.lhs.0[..] {
                out.push((ri, pos));
            }
        }
    }
    out
}

/// The relation tags of the defining presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum RelTag {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
}

impl fmt::Display for RelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One instance of a defining relation, as the polynomial `LHS − RHS`.
#[derive(Debug, Clone)]
pub struct RelationInstance<F: Field> {
    pub tag: RelTag,
    pub i: usize,
    pub j: Option<usize>,
    /// 0 for single-identity relations; 0/1 for the two identities of A8
    pub part: usize,
    pub poly: NcPoly<F>,
}

impl<F: Field> RelationInstance<F> {
    pub fn name(&self) -> String {
        let part = if self.tag == RelTag::A8 {
            format!(".{}", self.part + 1)
        } else {
            String::new()
        };
        match self.j {
            Some(j) => format!("{}{part}[i={},j={j}]", self.tag, self.i),
            None => format!("{}{part}[i={}]", self.tag, self.i),
        }
    }
}

/// Every instance of the defining relations of `E_n` at parameter `u`:
/// A1 `T_iT_j = T_jT_i` (|i−j| > 1), A2 `E_iE_j = E_jE_i` (all pairs),
/// A3 `E_i² = E_i`, A4 `E_iT_i = T_iE_i`, A5 `E_iT_j = T_jE_i` (|i−j| > 1),
/// A6 the braid relation, A7 `E_jT_iT_j = T_iT_jE_i` (|i−j| = 1), A8 the
/// three-way identity `E_iE_jT_j = E_iT_jE_i = T_jE_iE_j` (two independent
/// polynomials), A9 `T_i² = 1 + (u−1)E_i(1−T_i)` expanded.
pub fn relation_instances<F: Field>(n: usize, u: &F) -> Result<Vec<RelationInstance<F>>> {
    if n < 2 {
        return Err(Error::BadIndex(format!("relations need n ≥ 2, got {n}")));
    }
    let gens = n - 1;
    let mut out = Vec::new();
    let word = |l: &[Letter]| NcPoly::<F>::from_word(FreeWord::of(l));
    let far = |i: usize, j: usize| i.abs_diff(j) > 1;
    let near = |i: usize, j: usize| i.abs_diff(j) == 1;

    for i in 1..=gens {
        for j in i + 1..=gens {
            if far(i, j) {
                out.push(RelationInstance {
                    tag: RelTag::A1,
                    i,
                    j: Some(j),
                    part: 0,
                    poly: word(&[t(i), t(j)]).sub(&word(&[t(j), t(i)])),
                });
            }
        }
    }
    for i in 1..=gens {
        for j in i..=gens {
            out.push(RelationInstance {
                tag: RelTag::A2,
                i,
                j: Some(j),
                part: 0,
                poly: word(&[e(i), e(j)]).sub(&word(&[e(j), e(i)])),
            });
        }
    }
    for i in 1..=gens {
        out.push(RelationInstance {
            tag: RelTag::A3,
            i,
            j: None,
            part: 0,
            poly: word(&[e(i), e(i)]).sub(&word(&[e(i)])),
        });
    }
    for i in 1..=gens {
        out.push(RelationInstance {
            tag: RelTag::A4,
            i,
            j: None,
            part: 0,
            poly: word(&[e(i), t(i)]).sub(&word(&[t(i), e(i)])),
        });
    }
    for i in 1..=gens {
        for j in 1..=gens {
            if far(i, j) {
                out.push(RelationInstance {
                    tag: RelTag::A5,
                    i,
                    j: Some(j),
                    part: 0,
                    poly: word(&[e(i), t(j)]).sub(&word(&[t(j), e(i)])),
                });
            }
        }
    }
    for i in 1..=gens {
        for j in i + 1..=gens {
            if near(i, j) {
                out.push(RelationInstance {
                    tag: RelTag::A6,
                    i,
                    j: Some(j),
                    part: 0,
                    poly: word(&[t(i), t(j), t(i)]).sub(&word(&[t(j), t(i), t(j)])),
                });
            }
        }
    }
    for i in 1..=gens {
        for j in 1..=gens {
            if near(i, j) {
                out.push(RelationInstance {
                    tag: RelTag::A7,
                    i,
                    j: Some(j),
                    part: 0,
                    poly: word(&[e(j), t(i), t(j)]).sub(&word(&[t(i), t(j), e(i)])),
                });
            }
        }
    }
    for i in 1..=gens {
        for j in 1..=gens {
            if near(i, j) {
                out.push(RelationInstance {
                    tag: RelTag::A8,
                    i,
                    j: Some(j),
                    part: 0,
                    poly: word(&[e(i), e(j), t(j)]).sub(&word(&[e(i), t(j), e(i)])),
                });
                out.push(RelationInstance {
                    tag: RelTag::A8,
                    i,
                    j: Some(j),
                    part: 1,
                    poly: word(&[e(i), t(j), e(i)]).sub(&word(&[t(j), e(i), e(j)])),
                });
            }
        }
    }
    let u_minus_1 = u.sub(&F::one());
    for i in 1..=gens {
        // T_i² − 1 − (u−1)E_i + (u−1)E_iT_i
        let mut p = word(&[t(i), t(i)]);
        p.add_term(FreeWord::empty(), F::one().neg());
        p.add_term(FreeWord::of(&[e(i)]), u_minus_1.neg());
        p.add_term(FreeWord::of(&[e(i), t(i)]), u_minus_1.clone());
        out.push(RelationInstance {
            tag: RelTag::A9,
            i,
            j: None,
            part: 0,
            poly: p,
        });
    }
    Ok(out)
}

/// The nonzero relation polynomials: the input to rewriting.
pub fn juyumaya_relations<F: Field>(n: usize, u: &F) -> Result<Vec<NcPoly<F>>> {
    Ok(relation_instances(n, u)?
        .into_iter()
        .map(|r| r.poly)
        .filter(|p| !p.is_zero())
        .collect())
}

/// Knobs for bounded completion.
#[derive(Debug, Clone, Copy)]
pub struct CompletionOptions {
    pub degree_bound: usize,
    pub max_rules: usize,
    pub max_normal_words: usize,
}

impl CompletionOptions {
    /// The default bound `2n + 4` for the `E_n` presentation.
    pub fn for_n(n: usize) -> CompletionOptions {
        CompletionOptions {
            degree_bound: 2 * n + 4,
            max_rules: 4000,
            max_normal_words: 1 << 20,
        }
    }
}

/// A completed (up to the bound) rewriting system with its finite set of
/// normal words.
#[derive(Debug, Clone)]
pub struct CompletedSystem<F: Field> {
    pub rules: Vec<Rule<F>>,
    pub normal_words: Vec<FreeWord>,
    pub overlaps_checked: usize,
    pub degree_bound: usize,
}

/// Runs bounded overlap completion on the given relations over the letters
/// `E_1..E_{n−1}, T_1..T_{n−1}`.
pub fn complete<F: Field>(
    n: usize,
    relations: Vec<NcPoly<F>>,
    opts: CompletionOptions,
) -> Result<CompletedSystem<F>> {
    let mut slots: Vec<Option<Rule<F>>> = Vec::new();
    let mut poly_queue: Vec<NcPoly<F>> = relations;
    let mut pair_queue: std::collections::VecDeque<(usize, usize)> =
        std::collections::VecDeque::new();
    let mut overlaps_checked = 0usize;
    let mut work_guard = 0usize;

    loop {
        while let Some(p) = poly_queue.pop() {
            let alive: Vec<Rule<F>> = slots.iter().flatten().cloned().collect();
            let p = reduce(&p, &alive);
            if p.is_zero() {
                continue;
            }
            let rule = orient(&p);
            if rule.lhs.len() > opts.degree_bound {
                return Err(Error::BoundExceeded {
                    bound: opts.degree_bound,
                    detail: format!("rule head {} too long", rule.lhs),
                });
            }
            // demote rules whose head now reduces through the new head
            for slot in slots.iter_mut() {
                let dead = slot
                    .as_ref()
                    .is_some_and(|r| r.lhs.find_factor(&rule.lhs).is_some());
                if dead {
                    poly_queue.push(slot.take().unwrap().to_poly());
                }
            }
            let id = slots.len();
            slots.push(Some(rule));
            pair_queue.push_back((id, id));
            for other in 0..id {
                pair_queue.push_back((id, other));
                pair_queue.push_back((other, id));
            }
            let alive_count = slots.iter().flatten().count();
            if alive_count > opts.max_rules {
                return Err(Error::ResourceLimit(format!(
                    "more than {} rewrite rules",
                    opts.max_rules
                )));
            }
        }
        let Some((a, b)) = pair_queue.pop_front() else {
            break;
        };
        work_guard += 1;
        if work_guard > 1_000_000 {
            return Err(Error::ResourceLimit("completion did not settle".into()));
        }
        let (Some(r1), Some(r2)) = (slots[a].clone(), slots[b].clone()) else {
            continue;
        };
        let alive: Vec<Rule<F>> = slots.iter().flatten().cloned().collect();
        // proper overlaps: a suffix of r1.lhs equals a prefix of r2.lhs
        let max_o = r1.lhs.len().min(r2.lhs.len()) - 1;
        for o in 1..=max_o {
            if r1.lhs.0[r1.lhs.len() - o..] != r2.lhs.0[..o] {
                continue;
            }
            let total = r1.lhs.len() + r2.lhs.len() - o;
            if total > opts.degree_bound {
                continue;
            }
            overlaps_checked += 1;
            // the ambiguous word w = r1.lhs · tail = head · r2.lhs
            let tail = &r2.lhs.0[o..];
            let head = &r1.lhs.0[..r1.lhs.len() - o];
            let via_r1 = r1.rhs.framed(&[], tail);
            let via_r2 = r2.rhs.framed(head, &[]);
            let s = reduce(&via_r1.sub(&via_r2), &alive);
            if !s.is_zero() {
                poly_queue.push(s);
            }
        }
    }

    // final interreduction of right-hand sides
    let mut rules: Vec<Rule<F>> = slots.into_iter().flatten().collect();
    rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
    for i in 0..rules.len() {
        let others: Vec<Rule<F>> = rules
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| r.clone())
            .collect();
        rules[i].rhs = reduce(&rules[i].rhs, &others);
    }

    let normal_words = normal_words(n, &rules, opts)?;
    Ok(CompletedSystem {
        rules,
        normal_words,
        overlaps_checked,
        degree_bound: opts.degree_bound,
    })
}

/// Breadth-first enumeration of words containing no rule head; stops at the
/// first empty length level (prefix-closedness makes that sound).
fn normal_words<F: Field>(
    n: usize,
    rules: &[Rule<F>],
    opts: CompletionOptions,
) -> Result<Vec<FreeWord>> {
    let alphabet: Vec<Letter> = (1..n).map(e).chain((1..n).map(t)).collect();
    let mut out = vec![FreeWord::empty()];
    let mut level = vec![FreeWord::empty()];
    while !level.is_empty() {
        let mut next = Vec::new();
        for w in &level {
            for &a in &alphabet {
                let mut v = w.0.clone();
                v.push(a);
                let wa = FreeWord(v);
                if rules.iter().any(|r| wa.ends_with(&r.lhs)) {
                    continue;
                }
                next.push(wa);
            }
        }
        if let Some(w) = next.first() {
            if w.len() > opts.degree_bound {
                return Err(Error::BoundExceeded {
                    bound: opts.degree_bound,
                    detail: format!("normal words reach length {}", w.len()),
                });
            }
        }
        if out.len() + next.len() > opts.max_normal_words {
            return Err(Error::ResourceLimit(format!(
                "more than {} normal words",
                opts.max_normal_words
            )));
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out.sort();
    Ok(out)
}

/// Completes the `E_n` presentation at parameter `u` with default options.
pub fn complete_juyumaya<F: Field>(n: usize, u: &F) -> Result<CompletedSystem<F>> {
    complete(n, juyumaya_relations(n, u)?, CompletionOptions::for_n(n))
}

impl<F: Field> CompletedSystem<F> {
    /// Dimension of the quotient: the number of normal words.
    pub fn dim(&self) -> usize {
        self.normal_words.len()
    }

    /// Normal form of an arbitrary polynomial.
    pub fn normal_form(&self, p: &NcPoly<F>) -> NcPoly<F> {
        reduce(p, &self.rules)
    }

    /// Structure constants on the normal-word basis: the product of two
    /// basis words is the reduction of their concatenation.
    pub fn structure_constants(&self) -> Result<FiniteDimAlgebra<F>> {
        let index: HashMap<FreeWord, usize> = self
            .normal_words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let dim = self.normal_words.len();
        let unit = *index
            .get(&FreeWord::empty())
            .ok_or_else(|| Error::InvariantViolation("unit word not normal".into()))?;
        let mut table: Vec<SparseVec<F>> = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let prod = NcPoly::from_word(self.normal_words[i].concat(&self.normal_words[j]));
                let nf = self.normal_form(&prod);
                let mut entry: Vec<(usize, F)> = Vec::with_capacity(nf.num_terms());
                for (w, c) in nf.terms() {
                    let Some(&k) = index.get(w) else {
                        return Err(Error::InvariantViolation(format!(
                            "normal form escaped the basis at word {w}"
                        )));
                    };
                    entry.push((k, c.clone()));
                }
                entry.sort_by_key(|&(k, _)| k);
                table.push(entry);
            }
        }
        let labels = self.normal_words.iter().map(|w| w.to_string()).collect();
        Ok(FiniteDimAlgebra::new(labels, unit, |i, j| {
            table[i * dim + j].clone()
        }))
    }

    /// One-relation-per-line dump of the rules as polynomials.
    pub fn dump_rules(&self) -> String {
        self.rules
            .iter()
            .map(|r| format!("{}", r.to_poly()))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, Rat, RatFunc};

    fn sym() -> RatFunc {
        RatFunc::u()
    }

    #[test]
    fn word_order_is_deglex_with_e_below_t() {
        let w1 = FreeWord::of(&[e(1)]);
        let w2 = FreeWord::of(&[t(1)]);
        let w3 = FreeWord::of(&[e(1), e(2)]);
        assert!(w1 < w2);
        assert!(w2 < w3);
        assert!(FreeWord::empty() < w1);
        assert!(FreeWord::of(&[e(1), t(1)]) < FreeWord::of(&[t(1), e(1)]));
    }

    #[test]
    fn relation_counts() {
        // n=3: 0 + 3 + 2 + 2 + 0 + 1 + 2 + 4 + 2 instances
        let rels = relation_instances::<Rat>(3, &rat(1)).unwrap();
        assert_eq!(rels.len(), 16);
        // n=2 keeps only E², TE−ET and the quadratic T relation nonzero
        let polys = juyumaya_relations::<Rat>(2, &rat(1)).unwrap();
        assert_eq!(polys.len(), 3);
        assert!(relation_instances::<Rat>(1, &rat(1)).is_err());
    }

    #[test]
    fn a9_expands_as_documented() {
        let rels = relation_instances::<RatFunc>(2, &sym()).unwrap();
        let a9 = rels.iter().find(|r| r.tag == RelTag::A9).unwrap();
        assert_eq!(a9.poly.to_string(), "T1 T1 + (u - 1) E1 T1 - (u - 1) E1 - 1");
        // at u = 1 the E-terms vanish
        let rels = relation_instances::<Rat>(2, &rat(1)).unwrap();
        let a9 = rels.iter().find(|r| r.tag == RelTag::A9).unwrap();
        assert_eq!(a9.poly.to_string(), "T1 T1 - 1");
    }

    #[test]
    fn reduce_by_idempotent_rule() {
        let rels = juyumaya_relations::<Rat>(2, &rat(1)).unwrap();
        let rules: Vec<Rule<Rat>> = rels.iter().map(orient).collect();
        // E·E·E reduces to E through two applications of E² → E
        let p = NcPoly::from_word(FreeWord::of(&[e(1), e(1), e(1)]));
        let r = reduce(&p, &rules);
        assert_eq!(r, NcPoly::from_word(FreeWord::of(&[e(1)])));
        // a rule head reduces to its right side
        let head = NcPoly::from_word(rules[0].lhs.clone());
        assert_eq!(reduce(&head, &rules), reduce(&rules[0].rhs, &rules));
    }

    #[test]
    fn reduce_t_square_symbolic() {
        let u = sym();
        let rels = juyumaya_relations::<RatFunc>(2, &u).unwrap();
        let rules: Vec<Rule<RatFunc>> = rels.iter().map(orient).collect();
        let p = NcPoly::from_word(FreeWord::of(&[t(1), t(1)]));
        let r = reduce(&p, &rules);
        // 1 + (u−1)E − (u−1)ET
        let mut expect = NcPoly::<RatFunc>::one();
        let um1 = u.sub(&RatFunc::one());
        expect.add_term(FreeWord::of(&[e(1)]), um1.clone());
        expect.add_term(FreeWord::of(&[e(1), t(1)]), um1.neg());
        assert_eq!(r, expect);
    }

    #[test]
    fn completion_n2_symbolic_has_four_normal_words() {
        let c = complete_juyumaya(2, &sym()).unwrap();
        let words: Vec<String> = c.normal_words.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["1", "E1", "T1", "E1 T1"]);
    }

    #[test]
    fn completion_n2_at_u1_matches_symbolic_basis() {
        let c = complete_juyumaya(2, &rat(1)).unwrap();
        let words: Vec<String> = c.normal_words.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["1", "E1", "T1", "E1 T1"]);
    }

    #[test]
    fn structure_constants_n2_symbolic() {
        let u = sym();
        let c = complete_juyumaya(2, &u).unwrap();
        let alg = c.structure_constants().unwrap();
        alg.check_associativity_exhaustive().unwrap();
        // words sorted deglex: 1, E1, T1, E1 T1
        // (E1 T1)·(T1) = u·E1 − (u−1)·E1 T1
        let prod = crate::exactlin::mul_elements(
            &alg,
            &vec![(3usize, RatFunc::one())],
            &vec![(2usize, RatFunc::one())],
        );
        let um1 = u.sub(&RatFunc::one());
        assert_eq!(prod, vec![(1, u.clone()), (3, um1.neg())]);
    }

    #[test]
    fn reduction_strategy_does_not_matter_after_completion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let c = complete_juyumaya(2, &sym()).unwrap();
        for _ in 0..40 {
            // random polynomial over random words of length ≤ 5
            let mut p = NcPoly::<RatFunc>::zero();
            for _ in 0..4 {
                let len = rng.gen_range(0..=5usize);
                let letters: Vec<Letter> = (0..len)
                    .map(|_| if rng.gen_bool(0.5) { e(1) } else { t(1) })
                    .collect();
                p.add_term(
                    FreeWord(letters),
                    RatFunc::from_rat(rat(rng.gen_range(-3i64..=3))),
                );
            }
            let canonical = reduce(&p, &c.rules);
            let shuffled = reduce_with(&p, &c.rules, |ms| ms[rng.gen_range(0..ms.len())]);
            assert_eq!(canonical, shuffled);
        }
    }
}
