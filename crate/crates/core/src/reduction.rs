//! Noncommutative Gröbner completion for quotients of path algebras.
//!
//! Words are arrow-index sequences ordered degree-lexicographically: longer words
//! are larger, and words of equal length compare by arrow declaration index.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Error;
use crate::field::Field;
use crate::presentation::QuiverPresentation;

/// Sparse linear combination of words.
pub type Poly<K> = Vec<(Vec<usize>, <K as Field>::Elem)>;

pub fn deglex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Key(Vec<usize>);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex(&self.0, &other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `lead -> tail`: the word `lead` is congruent to the smaller combination `tail`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule<K: Field> {
    pub lead: Vec<usize>,
    pub tail: Poly<K>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionSystem<K: Field> {
    field: K,
    arrows: Vec<(usize, usize)>,
    rules: Vec<Rule<K>>,
    normal_words: Vec<Vec<usize>>,
}

fn find_sub(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

fn concat(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

impl<K: Field> ReductionSystem<K> {
    pub fn rules(&self) -> &[Rule<K>] {
        &self.rules
    }

    /// Nonempty normal words in deglex order.
    pub fn normal_words(&self) -> &[Vec<usize>] {
        &self.normal_words
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    /// Longest normal word length plus one: every longer word is a combination
    /// of shorter normal words.
    pub fn degree(&self) -> usize {
        self.normal_words.last().map_or(1, |w| w.len() + 1)
    }

    fn divisor(&self, w: &[usize]) -> Option<(usize, usize)> {
        self.rules
            .iter()
            .enumerate()
            .find_map(|(r, rule)| find_sub(w, &rule.lead).map(|pos| (r, pos)))
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        self.divisor(w).is_none()
    }

    /// Normal form of a combination of words, largest word first.
    pub fn normal_form(&self, p: Poly<K>) -> Poly<K> {
        let k = &self.field;
        let mut work: BTreeMap<Key, K::Elem> = BTreeMap::new();
        add_into(k, &mut work, p);
        let mut out = Vec::new();
        while let Some((Key(w), c)) = work.pop_last() {
            match self.divisor(&w) {
                Some((r, pos)) => {
                    let rule = &self.rules[r];
                    let (u, v) = (&w[..pos], &w[pos + rule.lead.len()..]);
                    let terms = rule
                        .tail
                        .iter()
                        .map(|(t, d)| (concat(&[u, t, v]), k.mul(&c, d)))
                        .collect();
                    add_into(k, &mut work, terms);
                }
                None => out.push((w, c)),
            }
        }
        out
    }

    pub fn normal_form_word(&self, w: &[usize]) -> Poly<K> {
        self.normal_form(alloc::vec![(w.to_vec(), self.field.one())])
    }

    /// Inserts a nonzero reduced polynomial as a rule, evicting rules whose leads
    /// it divides; evicted polynomials go back to `pending`.
    fn insert(&mut self, p: Poly<K>, pending: &mut Vec<Poly<K>>) {
        let k = self.field.clone();
        let p = self.normal_form(p);
        let Some((lead, lc)) = p.first().cloned() else {
            return;
        };
        let inv = k.inv(&lc).expect("leading coefficient is nonzero");
        let tail: Poly<K> = p[1..].iter().map(|(w, c)| (w.clone(), k.neg(&k.mul(c, &inv)))).collect();
        let mut kept = Vec::with_capacity(self.rules.len() + 1);
        for rule in self.rules.drain(..) {
            if find_sub(&rule.lead, &lead).is_some() {
                pending.push(rule_poly(&k, &rule));
            } else {
                kept.push(rule);
            }
        }
        kept.push(Rule { lead, tail });
        self.rules = kept;
        for i in 0..self.rules.len() {
            let tail = core::mem::take(&mut self.rules[i].tail);
            self.rules[i].tail = self.normal_form(tail);
        }
        self.rules.sort_by(|a, b| deglex(&a.lead, &b.lead));
    }

    /// Reduced S-polynomials of all proper overlaps of leading words, grouped
    /// by overlap word length.
    fn overlaps(&self, cap: usize) -> Result<BTreeMap<usize, Vec<Poly<K>>>, Error> {
        let k = &self.field;
        let mut out: BTreeMap<usize, Vec<Poly<K>>> = BTreeMap::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                let (a, b) = (&r1.lead, &r2.lead);
                for s in 1..a.len().min(b.len()) {
                    if a[a.len() - s..] != b[..s] {
                        continue;
                    }
                    let len = a.len() + b.len() - s;
                    if len > 2 * cap {
                        return Err(Error::NotFiniteDimensional(cap));
                    }
                    let (u, v) = (&a[..a.len() - s], &b[s..]);
                    // (a - tail_a) v - u (b - tail_b) = u tail_b - tail_a v
                    let mut p: Poly<K> = r2.tail.iter().map(|(t, c)| (concat(&[u, t]), c.clone())).collect();
                    p.extend(r1.tail.iter().map(|(t, c)| (concat(&[t, v]), k.neg(c))));
                    let p = self.normal_form(p);
                    if !p.is_empty() {
                        out.entry(len).or_default().push(p);
                    }
                }
            }
        }
        Ok(out)
    }

    fn enumerate_normal_words(&mut self, cap: usize) -> Result<(), Error> {
        let mut words = Vec::new();
        let mut level: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| alloc::vec![a]).filter(|w| self.is_normal(w)).collect();
        while !level.is_empty() {
            if level[0].len() >= cap {
                return Err(Error::NotFiniteDimensional(cap));
            }
            let mut next = Vec::new();
            for w in &level {
                let end = self.arrows[*w.last().expect("nonempty")].1;
                for (a, &(src, _)) in self.arrows.iter().enumerate() {
                    if src != end {
                        continue;
                    }
                    let mut x = w.clone();
                    x.push(a);
                    // Prefixes are already normal, so only suffixes can match a lead.
                    let reducible = self.rules.iter().any(|r| x.ends_with(&r.lead));
                    if !reducible {
                        next.push(x);
                    }
                }
            }
            words.append(&mut level);
            next.sort();
            level = next;
        }
        self.normal_words = words;
        Ok(())
    }
}

fn rule_poly<K: Field>(k: &K, rule: &Rule<K>) -> Poly<K> {
    let mut p = alloc::vec![(rule.lead.clone(), k.one())];
    p.extend(rule.tail.iter().map(|(w, c)| (w.clone(), k.neg(c))));
    p
}

fn add_into<K: Field>(k: &K, acc: &mut BTreeMap<Key, K::Elem>, p: Poly<K>) {
    for (w, c) in p {
        if k.is_zero(&c) {
            continue;
        }
        let key = Key(w);
        let sum = match acc.get(&key) {
            Some(d) => k.add(d, &c),
            None => c,
        };
        if k.is_zero(&sum) {
            acc.remove(&key);
        } else {
            acc.insert(key, sum);
        }
    }
}

/// Runs Buchberger completion on the relations of `p` over `field`, then
/// enumerates the normal words.
///
/// Fails with `NotFiniteDimensional(cap)` if a normal word of length `cap`
/// exists or an overlap longer than `2 * cap` shows up.
pub fn complete_reduction_system<K: Field>(
    p: &QuiverPresentation,
    field: &K,
    cap: usize,
) -> Result<ReductionSystem<K>, Error> {
    let k = field.clone();
    let mut sys = ReductionSystem {
        field: k.clone(),
        arrows: p.quiver.arrows().iter().map(|a| (a.source, a.target)).collect(),
        rules: Vec::new(),
        normal_words: Vec::new(),
    };
    let mut pending: Vec<Poly<K>> = p
        .relations
        .iter()
        .map(|r| r.terms.iter().map(|(c, path)| (path.arrows.clone(), k.from_i64(*c))).collect())
        .collect();
    pending.reverse();
    loop {
        while let Some(poly) = pending.pop() {
            sys.insert(poly, &mut pending);
        }
        if let Some(lead) = sys.rules.iter().map(|r| r.lead.len()).max() {
            if lead > 2 * cap {
                return Err(Error::NotFiniteDimensional(cap));
            }
        }
        let mut overlaps = sys.overlaps(cap)?;
        match overlaps.pop_first() {
            Some((_, mut polys)) => {
                polys.reverse();
                pending = polys;
            }
            None => break,
        }
    }
    sys.enumerate_normal_words(cap)?;
    Ok(sys)
}
