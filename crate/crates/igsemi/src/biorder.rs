//! The biordered set of a finite semigroup.
//!
//! E is the set of idempotents of a source semigroup S, with the partial
//! product e∘f kept exactly on basic pairs: pairs where ef or fe lands in
//! {e, f}. The defining presentation of the free idempotent generated
//! semigroup IG(E) lists one relation ef = e∘f per defined product.
//!
//! E is always extracted from a concrete semigroup; that keeps the
//! evaluation map back into S available as a refutation oracle for the
//! rewriting layer.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::semigroup::FiniteSemigroup;
use crate::word::{Letter, Word};

const UNDEFINED: u16 = u16::MAX;

/// Which of the four basic-pair conditions hold for an ordered pair
/// (e, f): 1) ef=e, 2) ef=f, 3) fe=e, 4) fe=f.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTags(u8);

impl CaseTags {
    pub fn contains(&self, tag: u8) -> bool {
        debug_assert!((1..=4).contains(&tag));
        self.0 & (1 << (tag - 1)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// The lowest-numbered tag present, if any.
    pub fn lowest(&self) -> Option<u8> {
        (1..=4).find(|&t| self.contains(t))
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (1..=4).filter(|&t| self.contains(t))
    }
}

impl fmt::Display for CaseTags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|t| t.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// One defining relation of IG(E): lhs is a two-letter word, rhs the
/// single letter it contracts to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: [Letter; 2],
    pub rhs: [Letter; 1],
}

/// The idempotents of a semigroup as a partial groupoid.
#[derive(Debug, Clone)]
pub struct BiorderedSet {
    size: usize,
    /// size×size row-major; UNDEFINED marks absent products.
    product: Vec<u16>,
    to_source: Vec<usize>,
    /// For each letter g, all (e1, e2) with e1∘e2 = g, sorted.
    preimages: Vec<Vec<(Letter, Letter)>>,
    source: FiniteSemigroup,
}

impl BiorderedSet {
    /// Extract the biordered set of a semigroup: E = idempotents(S),
    /// product defined on (e, f) iff ef or fe lies in {e, f}, with value
    /// ef.
    pub fn extract(source: FiniteSemigroup) -> BiorderedSet {
        let idems = source.idempotents();
        let size = idems.len();
        assert!(
            size <= usize::from(u16::MAX),
            "biordered sets beyond {} idempotents are unsupported",
            u16::MAX
        );
        let letter_of = |elem: usize| -> Letter {
            idems.binary_search(&elem).expect("product of a basic pair is idempotent") as Letter
        };
        let mut product = vec![UNDEFINED; size * size];
        for e in 0..size {
            for f in 0..size {
                let se = idems[e];
                let sf = idems[f];
                let ef = source.product(se, sf);
                let fe = source.product(sf, se);
                if ef == se || ef == sf || fe == se || fe == sf {
                    product[e * size + f] = letter_of(ef);
                }
            }
        }
        let mut preimages = vec![Vec::new(); size];
        for e in 0..size {
            for f in 0..size {
                let p = product[e * size + f];
                if p != UNDEFINED {
                    preimages[p as usize].push((e as Letter, f as Letter));
                }
            }
        }
        for list in &mut preimages {
            list.sort_unstable();
        }
        BiorderedSet {
            size,
            product,
            to_source: idems,
            preimages,
            source,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn source(&self) -> &FiniteSemigroup {
        &self.source
    }

    /// The source-semigroup element a letter stands for.
    pub fn to_source(&self, e: Letter) -> usize {
        self.to_source[e as usize]
    }

    /// The letter representing a source element, if it is idempotent.
    pub fn letter_of_source(&self, elem: usize) -> Option<Letter> {
        self.to_source.binary_search(&elem).ok().map(|i| i as Letter)
    }

    /// e∘f when (e, f) is a basic pair.
    #[inline]
    pub fn product(&self, e: Letter, f: Letter) -> Option<Letter> {
        let p = self.product[e as usize * self.size + f as usize];
        (p != UNDEFINED).then_some(p)
    }

    /// The product together with the full set of case tags that hold,
    /// re-evaluated in the source semigroup.
    pub fn basic_product(&self, e: Letter, f: Letter) -> Option<(Letter, CaseTags)> {
        let se = self.to_source[e as usize];
        let sf = self.to_source[f as usize];
        let ef = self.source.product(se, sf);
        let fe = self.source.product(sf, se);
        let mut tags = 0u8;
        if ef == se {
            tags |= 1;
        }
        if ef == sf {
            tags |= 1 << 1;
        }
        if fe == se {
            tags |= 1 << 2;
        }
        if fe == sf {
            tags |= 1 << 3;
        }
        if tags == 0 {
            return None;
        }
        let value = self
            .letter_of_source(ef)
            .expect("basic products are idempotent");
        Some((value, CaseTags(tags)))
    }

    /// All pairs mapping to `g` under the partial product.
    pub fn preimages(&self, g: Letter) -> &[(Letter, Letter)] {
        &self.preimages[g as usize]
    }

    /// The defining relations of IG(E), sorted by lhs.
    pub fn presentation(&self) -> Vec<Relation> {
        let mut out = Vec::new();
        for e in 0..self.size {
            for f in 0..self.size {
                if let Some(g) = self.product(e as Letter, f as Letter) {
                    out.push(Relation {
                        lhs: [e as Letter, f as Letter],
                        rhs: [g],
                    });
                }
            }
        }
        out
    }

    /// True iff every letter of the word indexes into E.
    pub fn word_in_range(&self, w: &Word) -> bool {
        w.letters().iter().all(|&l| (l as usize) < self.size)
    }

    /// Letters reachable in any word connected to one containing `seeds`:
    /// closed under taking preimage pairs of present letters and products
    /// of present pairs. Word-membership of a letter is invariant under
    /// elementary transitions up to this closure, so differing closures
    /// certify that no transition sequence joins two words.
    pub fn letter_closure(&self, seeds: impl IntoIterator<Item = Letter>) -> Vec<bool> {
        let mut in_set = vec![false; self.size];
        for s in seeds {
            in_set[s as usize] = true;
        }
        loop {
            let mut changed = false;
            for g in 0..self.size {
                if in_set[g] {
                    for &(a, b) in &self.preimages[g] {
                        if !in_set[a as usize] {
                            in_set[a as usize] = true;
                            changed = true;
                        }
                        if !in_set[b as usize] {
                            in_set[b as usize] = true;
                            changed = true;
                        }
                    }
                }
            }
            for e in 0..self.size {
                if !in_set[e] {
                    continue;
                }
                for f in 0..self.size {
                    if !in_set[f] {
                        continue;
                    }
                    let p = self.product[e * self.size + f];
                    if p != UNDEFINED && !in_set[p as usize] {
                        in_set[p as usize] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                return in_set;
            }
        }
    }

    /// Canonical JSON export: `{"size", "product", "to_source"}` with
    /// null marking undefined products.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<Option<u16>>> = (0..self.size)
            .map(|e| {
                (0..self.size)
                    .map(|f| self.product(e as Letter, f as Letter))
                    .collect()
            })
            .collect();
        json!({
            "size": self.size,
            "product": rows,
            "to_source": self.to_source,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn right_zero_biorder_all_pairs_basic() {
        let e = BiorderedSet::extract(corpus::right_zero(2));
        assert_eq!(e.size(), 2);
        for a in 0..2u16 {
            for b in 0..2u16 {
                // xy = y makes every pair basic with e∘f = f
                assert_eq!(e.product(a, b), Some(b));
            }
        }
        assert_eq!(e.presentation().len(), 4);
    }

    #[test]
    fn right_zero_pair_tags() {
        let e = BiorderedSet::extract(corpus::right_zero(2));
        // ab = b (tag 2), ba = a (tag 3)
        let (value, tags) = e.basic_product(0, 1).unwrap();
        assert_eq!(value, 1);
        assert!(!tags.contains(1));
        assert!(tags.contains(2));
        assert!(tags.contains(3));
        assert!(!tags.contains(4));
    }

    #[test]
    fn diagonal_pairs_carry_all_tags() {
        let e = BiorderedSet::extract(corpus::rectangular_band(2, 2));
        for l in 0..4u16 {
            let (value, tags) = e.basic_product(l, l).unwrap();
            assert_eq!(value, l);
            assert_eq!(tags.iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        }
    }

    #[test]
    fn band_2x2_has_four_undefined_pairs() {
        let s = corpus::rectangular_band(2, 2);
        let e = BiorderedSet::extract(s);
        assert_eq!(e.size(), 4);
        // (e,f) basic iff they share a row or column
        let diag_a = e.letter_of_source(0).unwrap(); // (0,0)
        let diag_b = e.letter_of_source(3).unwrap(); // (1,1)
        assert_eq!(e.product(diag_a, diag_b), None);
        assert_eq!(e.basic_product(diag_a, diag_b), None);
        // 4 diagonal + 8 row/column relations
        assert_eq!(e.presentation().len(), 12);
    }

    #[test]
    fn t2_biorder_is_total() {
        let e = BiorderedSet::extract(corpus::full_transformations(2));
        assert_eq!(e.size(), 3);
        let mut defined = 0;
        for a in 0..3u16 {
            for b in 0..3u16 {
                if e.product(a, b).is_some() {
                    defined += 1;
                }
            }
        }
        assert_eq!(defined, 9);
    }

    #[test]
    fn singleton_presentation() {
        let e = BiorderedSet::extract(corpus::cyclic_group(1));
        assert_eq!(
            e.presentation(),
            vec![Relation {
                lhs: [0, 0],
                rhs: [0]
            }]
        );
    }

    #[test]
    fn products_agree_with_source_and_are_idempotent() {
        for (_, e) in corpus::acceptance_biorders() {
            let s = e.source();
            for a in 0..e.size() as Letter {
                // diagonal is always defined and fixed
                assert_eq!(e.product(a, a), Some(a));
                for b in 0..e.size() as Letter {
                    let direct = e.product(a, b);
                    let tagged = e.basic_product(a, b);
                    assert_eq!(direct, tagged.map(|(v, _)| v));
                    // symmetry of definedness
                    assert_eq!(direct.is_some(), e.product(b, a).is_some());
                    if let Some(v) = direct {
                        let sv = e.to_source(v);
                        assert_eq!(sv, s.product(e.to_source(a), e.to_source(b)));
                        assert!(s.is_idempotent(sv));
                    }
                }
            }
        }
    }

    #[test]
    fn presentation_contains_all_diagonals() {
        for (_, e) in corpus::acceptance_biorders() {
            let rels = e.presentation();
            for l in 0..e.size() as Letter {
                assert!(rels.iter().any(|r| r.lhs == [l, l] && r.rhs == [l]));
            }
            // sorted by lhs
            let mut sorted = rels.clone();
            sorted.sort_by_key(|r| r.lhs);
            assert_eq!(rels, sorted);
        }
    }

    #[test]
    fn letter_closure_separates_band_cells_from_nothing() {
        let e = BiorderedSet::extract(corpus::rectangular_band(2, 2));
        // the closure of one letter reaches everything its expansions and
        // contractions can ever mention
        let c = e.letter_closure([0]);
        assert!(c[0]);
    }
}
