//! Finite semigroups given by Cayley tables.
//!
//! A semigroup can be ingested three ways: an explicit Cayley table, the
//! closure of a set of transformations on n points, or the full monoid of
//! n×n matrices over a small prime field. All three produce the same
//! [`FiniteSemigroup`] value: a validated multiplication table with
//! deterministic element indexing.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

/// Largest element count a builder will materialise. A Cayley table is
/// order² entries, so this keeps construction at desk scale.
pub const MAX_ORDER: usize = 19_683;

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("associativity fails at triple ({i}, {j}, {k}): ({i}·{j})·{k} != {i}·({j}·{k})")]
    Associativity { i: usize, j: usize, k: usize },
    #[error("invalid semigroup spec: {0}")]
    Spec(String),
}

/// How a semigroup was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SemigroupSource {
    #[serde(rename = "cayley-file")]
    CayleyFile,
    #[serde(rename = "transformation-closure")]
    TransformationClosure,
    #[serde(rename = "matrix-monoid")]
    MatrixMonoid,
}

/// Input accepted by [`build_semigroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupSpec {
    /// Explicit multiplication table; `rows[i][j]` is the index of i·j.
    Cayley { rows: Vec<Vec<usize>> },
    /// Closure of transformations on `points` points under composition.
    Transformations {
        points: usize,
        gens: Vec<Vec<usize>>,
        adjoin_identity: bool,
    },
    /// All dim×dim matrices over the field with `field` elements.
    Matrix { dim: usize, field: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexPeriod {
    pub index_h: usize,
    pub period_d: usize,
}

/// A finite semigroup as a validated Cayley table.
#[derive(Debug, Clone)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<u32>,
    labels: Option<Vec<String>>,
    source: SemigroupSource,
}

impl FiniteSemigroup {
    /// Validate a table: entries in range and associativity. The witness
    /// triple of the first associativity failure is reported.
    pub fn from_table(
        rows: &[Vec<usize>],
        labels: Option<Vec<String>>,
        source: SemigroupSource,
    ) -> Result<Self, BuildError> {
        let order = rows.len();
        if order == 0 {
            return Err(BuildError::Spec("semigroup must be non-empty".into()));
        }
        if order > MAX_ORDER {
            return Err(BuildError::Spec(format!(
                "order {order} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(BuildError::Spec(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(BuildError::Spec(format!(
                        "entry ({i}, {j}) = {v} is out of range for order {order}"
                    )));
                }
                table.push(v as u32);
            }
        }
        if let Some(ref l) = labels {
            if l.len() != order {
                return Err(BuildError::Spec("label count does not match order".into()));
            }
        }
        let s = FiniteSemigroup {
            order,
            table,
            labels,
            source,
        };
        s.check_associativity()?;
        Ok(s)
    }

    /// Build a table from a product function known to be associative
    /// (function composition, matrix multiplication); skips the O(n³) scan.
    fn from_associative_product(
        order: usize,
        product: impl Fn(usize, usize) -> usize,
        labels: Option<Vec<String>>,
        source: SemigroupSource,
    ) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push(product(i, j) as u32);
            }
        }
        FiniteSemigroup {
            order,
            table,
            labels,
            source,
        }
    }

    fn check_associativity(&self) -> Result<(), BuildError> {
        for i in 0..self.order {
            for j in 0..self.order {
                let ij = self.product(i, j);
                for k in 0..self.order {
                    if self.product(ij, k) != self.product(i, self.product(j, k)) {
                        return Err(BuildError::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn source(&self) -> SemigroupSource {
        self.source
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    /// a^k for k ≥ 1.
    pub fn power(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "power requires a positive exponent");
        let mut acc = a;
        for _ in 1..k {
            acc = self.product(acc, a);
        }
        acc
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.product(a, a) == a
    }

    /// All idempotents, ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }

    /// Look an element up by its display label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|x| x == label))
    }

    /// The set reachable from `a` by repeated right multiplication,
    /// including `a` itself (the principal right ideal aS¹).
    fn right_reach(&self, a: usize) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[a] = true;
        let mut queue = vec![a];
        while let Some(x) = queue.pop() {
            for y in 0..self.order {
                let p = self.product(x, y);
                if !seen[p] {
                    seen[p] = true;
                    queue.push(p);
                }
            }
        }
        seen
    }

    fn left_reach(&self, a: usize) -> Vec<bool> {
        let mut seen = vec![false; self.order];
        seen[a] = true;
        let mut queue = vec![a];
        while let Some(x) = queue.pop() {
            for y in 0..self.order {
                let p = self.product(y, x);
                if !seen[p] {
                    seen[p] = true;
                    queue.push(p);
                }
            }
        }
        seen
    }

    /// Green's relations R, L and H = R ∧ L, computed by ideal
    /// reachability with an adjoined identity.
    pub fn green_classes(&self) -> GreenStructure {
        let r_ids = group_by_key(self.order, |a| self.right_reach(a));
        let l_ids = group_by_key(self.order, |a| self.left_reach(a));
        let h_ids = group_by_key(self.order, |a| (r_ids[a], l_ids[a]));
        GreenStructure::from_class_ids(r_ids, l_ids, h_ids)
    }

    /// Least (h, d) with a^h = a^(h+d), index minimised first.
    pub fn index_period(&self, a: usize) -> IndexPeriod {
        let mut seen_at: HashMap<usize, usize> = HashMap::new();
        let mut value = a;
        let mut power = 1usize;
        loop {
            if let Some(&first) = seen_at.get(&value) {
                return IndexPeriod {
                    index_h: first,
                    period_d: power - first,
                };
            }
            seen_at.insert(value, power);
            value = self.product(value, a);
            power += 1;
        }
    }

    /// True iff `a` generates a group inside S, i.e. its index is 1.
    pub fn lies_in_subgroup(&self, a: usize) -> bool {
        self.index_period(a).index_h == 1
    }

    /// Canonical JSON form of the table and metadata.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<usize>> = (0..self.order)
            .map(|i| (0..self.order).map(|j| self.product(i, j)).collect())
            .collect();
        json!({
            "order": self.order,
            "table": rows,
            "labels": self.labels,
            "source": serde_json::to_value(self.source).unwrap(),
        })
    }
}

/// Group 0..n by an arbitrary hashable key; class ids are assigned in
/// order of first appearance, so they are deterministic.
fn group_by_key<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(usize) -> K) -> Vec<usize> {
    let mut ids = Vec::with_capacity(n);
    let mut index: HashMap<K, usize> = HashMap::new();
    for a in 0..n {
        let k = key(a);
        let next = index.len();
        ids.push(*index.entry(k).or_insert(next));
    }
    ids
}

/// Partitions of a semigroup into Green classes. Classes are listed by
/// their least member; members ascend within each class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenStructure {
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    #[serde(skip)]
    r_of: Vec<usize>,
    #[serde(skip)]
    l_of: Vec<usize>,
    #[serde(skip)]
    h_of: Vec<usize>,
}

impl GreenStructure {
    fn from_class_ids(r_of: Vec<usize>, l_of: Vec<usize>, h_of: Vec<usize>) -> Self {
        GreenStructure {
            r_classes: classes_of(&r_of),
            l_classes: classes_of(&l_of),
            h_classes: classes_of(&h_of),
            r_of,
            l_of,
            h_of,
        }
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.r_of[a] == self.r_of[b]
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.l_of[a] == self.l_of[b]
    }

    pub fn h_related(&self, a: usize, b: usize) -> bool {
        self.h_of[a] == self.h_of[b]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "r_classes": self.r_classes,
            "l_classes": self.l_classes,
            "h_classes": self.h_classes,
        })
    }
}

/// Convert class ids to sorted class lists, ordered by least member.
fn classes_of(ids: &[usize]) -> Vec<Vec<usize>> {
    let nclasses = ids.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); nclasses];
    for (elem, &id) in ids.iter().enumerate() {
        classes[id].push(elem);
    }
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Build a semigroup from any of the three spec forms.
pub fn build_semigroup(spec: &SemigroupSpec) -> Result<FiniteSemigroup, BuildError> {
    match spec {
        SemigroupSpec::Cayley { rows } => {
            FiniteSemigroup::from_table(rows, None, SemigroupSource::CayleyFile)
        }
        SemigroupSpec::Transformations {
            points,
            gens,
            adjoin_identity,
        } => transformation_closure(*points, gens, *adjoin_identity),
        SemigroupSpec::Matrix { dim, field } => matrix_monoid(*dim, *field),
    }
}

/// Left-to-right composition: (fg)(x) = g(f(x)).
fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

/// Breadth-first product saturation of a generating set of
/// transformations. Elements are indexed by first discovery, with the
/// sorted generator list first.
fn transformation_closure(
    points: usize,
    gens: &[Vec<usize>],
    adjoin_identity: bool,
) -> Result<FiniteSemigroup, BuildError> {
    if points == 0 {
        return Err(BuildError::Spec("points must be positive".into()));
    }
    if gens.is_empty() && !adjoin_identity {
        return Err(BuildError::Spec("at least one generator required".into()));
    }
    let mut sorted_gens: Vec<Vec<usize>> = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if g.len() != points {
            return Err(BuildError::Spec(format!(
                "generator {gi} has {} images, expected {points}",
                g.len()
            )));
        }
        if let Some(&bad) = g.iter().find(|&&x| x >= points) {
            return Err(BuildError::Spec(format!(
                "generator {gi} image {bad} is out of range for {points} points"
            )));
        }
        sorted_gens.push(g.clone());
    }
    if adjoin_identity {
        sorted_gens.push((0..points).collect());
    }
    sorted_gens.sort();
    sorted_gens.dedup();

    let mut elements: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    for g in &sorted_gens {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
        }
    }
    let mut next = 0usize;
    while next < elements.len() {
        let current = elements[next].clone();
        for g in &sorted_gens {
            let p = compose(&current, g);
            if !index.contains_key(&p) {
                if elements.len() >= MAX_ORDER {
                    return Err(BuildError::Spec(format!(
                        "transformation closure exceeds the supported maximum {MAX_ORDER}"
                    )));
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        next += 1;
    }

    let order = elements.len();
    let labels: Vec<String> = elements
        .iter()
        .map(|e| {
            e.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let product = |i: usize, j: usize| index[&compose(&elements[i], &elements[j])];
    Ok(FiniteSemigroup::from_associative_product(
        order,
        product,
        Some(labels),
        SemigroupSource::TransformationClosure,
    ))
}

/// The full monoid of dim×dim matrices over GF(field), enumerated in
/// row-major lexicographic order of entries.
fn matrix_monoid(dim: usize, field: usize) -> Result<FiniteSemigroup, BuildError> {
    if !(1..=3).contains(&dim) {
        return Err(BuildError::Spec(format!(
            "matrix dimension {dim} unsupported (must be 1..=3)"
        )));
    }
    if field != 2 && field != 3 {
        return Err(BuildError::Spec(format!(
            "field size {field} unsupported (must be 2 or 3)"
        )));
    }
    let cells = dim * dim;
    let order = field.pow(cells as u32);

    // matrix i has entry (r, c) = digit r*dim + c of i, base `field`,
    // most significant digit first
    let entries = |m: usize| -> Vec<usize> {
        let mut v = vec![0usize; cells];
        let mut rest = m;
        for slot in (0..cells).rev() {
            v[slot] = rest % field;
            rest /= field;
        }
        v
    };
    let encode = |v: &[usize]| -> usize {
        let mut m = 0usize;
        for &d in v {
            m = m * field + d;
        }
        m
    };
    let product = |a: usize, b: usize| -> usize {
        let ma = entries(a);
        let mb = entries(b);
        let mut mc = vec![0usize; cells];
        for r in 0..dim {
            for c in 0..dim {
                let mut acc = 0usize;
                for t in 0..dim {
                    acc += ma[r * dim + t] * mb[t * dim + c];
                }
                mc[r * dim + c] = acc % field;
            }
        }
        encode(&mc)
    };
    let labels: Vec<String> = (0..order)
        .map(|m| {
            entries(m)
                .iter()
                .map(|d| d.to_string())
                .collect::<String>()
        })
        .collect();
    Ok(FiniteSemigroup::from_associative_product(
        order,
        product,
        Some(labels),
        SemigroupSource::MatrixMonoid,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn right_zero_table_is_valid() {
        let s = FiniteSemigroup::from_table(
            &[vec![0, 1], vec![0, 1]],
            None,
            SemigroupSource::CayleyFile,
        )
        .unwrap();
        assert_eq!(s.order(), 2);
        assert_eq!(s.idempotents(), vec![0, 1]);
    }

    #[test]
    fn non_associative_table_reports_witness() {
        // 2-element table with x·y = x except 1·1 = 0: (1·1)·1 = 0·1 = 0,
        // 1·(1·1) = 1·0 = 1
        let err = FiniteSemigroup::from_table(
            &[vec![0, 0], vec![1, 0]],
            None,
            SemigroupSource::CayleyFile,
        )
        .unwrap_err();
        match err {
            BuildError::Associativity { i, j, k } => {
                let s = FiniteSemigroup {
                    order: 2,
                    table: vec![0, 0, 1, 0],
                    labels: None,
                    source: SemigroupSource::CayleyFile,
                };
                assert_ne!(
                    s.product(s.product(i, j), k),
                    s.product(i, s.product(j, k))
                );
            }
            other => panic!("expected associativity error, got {other:?}"),
        }
    }

    #[test]
    fn table_entry_out_of_range_is_rejected() {
        let err = FiniteSemigroup::from_table(
            &[vec![0, 2], vec![0, 1]],
            None,
            SemigroupSource::CayleyFile,
        )
        .unwrap_err();
        assert!(matches!(err, BuildError::Spec(_)));
    }

    #[test]
    fn t2_closure_has_order_four() {
        let spec = SemigroupSpec::Transformations {
            points: 2,
            gens: vec![vec![0, 0], vec![1, 1], vec![1, 0], vec![0, 1]],
            adjoin_identity: true,
        };
        let s = build_semigroup(&spec).unwrap();
        assert_eq!(s.order(), 4);
        // identity and the two constants
        assert_eq!(s.idempotents().len(), 3);
    }

    #[test]
    fn matrix_monoid_2_2_has_order_16() {
        let s = build_semigroup(&SemigroupSpec::Matrix { dim: 2, field: 2 }).unwrap();
        assert_eq!(s.order(), 16);
        assert_eq!(s.idempotents().len(), 8);
    }

    #[test]
    fn matrix_monoid_rejects_bad_parameters() {
        assert!(build_semigroup(&SemigroupSpec::Matrix { dim: 4, field: 2 }).is_err());
        assert!(build_semigroup(&SemigroupSpec::Matrix { dim: 2, field: 5 }).is_err());
    }

    #[test]
    fn transformation_images_out_of_range_rejected() {
        let spec = SemigroupSpec::Transformations {
            points: 2,
            gens: vec![vec![0, 2]],
            adjoin_identity: false,
        };
        assert!(build_semigroup(&spec).is_err());
    }

    #[test]
    fn right_zero_green_classes() {
        let s = corpus::right_zero(2);
        let g = s.green_classes();
        // aS¹ = {a, b} for both, so a single R-class; L-classes are singletons
        assert_eq!(g.r_classes, vec![vec![0, 1]]);
        assert_eq!(g.l_classes, vec![vec![0], vec![1]]);
        assert_eq!(g.h_classes, vec![vec![0], vec![1]]);
    }

    #[test]
    fn group_is_single_h_class() {
        let s = corpus::cyclic_group(5);
        let g = s.green_classes();
        assert_eq!(g.h_classes.len(), 1);
        assert_eq!(g.r_classes.len(), 1);
        assert_eq!(g.l_classes.len(), 1);
    }

    #[test]
    fn index_period_examples() {
        let s = corpus::full_transformations(3);
        assert_eq!(s.order(), 27);
        // any idempotent has index 1, period 1
        for &e in &s.idempotents() {
            assert_eq!(
                s.index_period(e),
                IndexPeriod {
                    index_h: 1,
                    period_d: 1
                }
            );
        }
        // rank drops then stabilises: [1,2,2]² = [2,2,2] = [1,2,2]³
        let f = s.find_label("1 2 2").unwrap();
        let ip = s.index_period(f);
        assert_eq!(ip.index_h, 2);
        assert_eq!(ip.period_d, 1);
        assert!(!s.lies_in_subgroup(f));

        let g = corpus::cyclic_group(3);
        assert_eq!(
            g.index_period(1),
            IndexPeriod {
                index_h: 1,
                period_d: 3
            }
        );
    }

    #[test]
    fn subgroup_membership_matches_h_classes_on_t3() {
        let s = corpus::full_transformations(3);
        let green = s.green_classes();
        let idems = s.idempotents();
        for a in 0..s.order() {
            let by_index = s.lies_in_subgroup(a);
            let by_h = idems.iter().any(|&e| green.h_related(a, e));
            assert_eq!(by_index, by_h, "element {a}");
            // the defining equation of the index/period pair
            let ip = s.index_period(a);
            assert_eq!(
                s.power(a, ip.index_h),
                s.power(a, ip.index_h + ip.period_d)
            );
        }
    }
}
