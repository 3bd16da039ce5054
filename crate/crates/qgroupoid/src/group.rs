//! Finite groups as exact multiplication tables.
//!
//! Elements are opaque ids `0..order` with the identity always renumbered to
//! id 0. Permutation input uses right-to-left composition,
//! `(fg)(x) = f(g(x))`. All algorithms are exhaustive, so construction
//! refuses orders above a configurable limit (default 100).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type ElemId = usize;

/// Orders above this are refused unless an explicit limit is given.
pub const DEFAULT_MAX_ORDER: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    NotAGroup(String),
    OrderLimitExceeded { order: usize, max: usize },
    InvalidElement(ElemId),
    NotASubgroup,
    NotNormal,
    PDoesNotDivideOrder { p: usize, order: usize },
    BadPermutation(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::NotAGroup(why) => write!(f, "not a group: {why}"),
            GroupError::OrderLimitExceeded { order, max } => {
                write!(f, "order {order} exceeds the configured limit {max}")
            }
            GroupError::InvalidElement(x) => write!(f, "element id {x} out of range"),
            GroupError::NotASubgroup => write!(f, "not a subgroup"),
            GroupError::NotNormal => write!(f, "subgroup is not normal"),
            GroupError::PDoesNotDivideOrder { p, order } => {
                write!(f, "{p} does not divide the group order {order}")
            }
            GroupError::BadPermutation(why) => write!(f, "bad permutation: {why}"),
        }
    }
}

/// A finite group given by its full multiplication table.
/// The identity is element 0; `inverse` is precomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<ElemId>>,
    inverse: Vec<ElemId>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<ElemId>>) -> Result<Self, GroupError> {
        Self::from_table_with_limit(table, DEFAULT_MAX_ORDER)
    }

    pub fn from_table_with_limit(
        mut table: Vec<Vec<ElemId>>,
        max_order: usize,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotAGroup(String::from("empty table")));
        }
        if n > max_order {
            return Err(GroupError::OrderLimitExceeded { order: n, max: max_order });
        }
        for row in &table {
            if row.len() != n {
                return Err(GroupError::NotAGroup(String::from("table is not square")));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(GroupError::NotAGroup(format!("entry {x} out of range")));
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::NotAGroup(String::from("no two-sided identity")))?;
        if identity != 0 {
            // Relabel by the transposition (0 identity).
            let swap = |x: ElemId| match x {
                0 => identity,
                x if x == identity => 0,
                x => x,
            };
            let mut renumbered = vec![vec![0; n]; n];
            for x in 0..n {
                for y in 0..n {
                    renumbered[swap(x)][swap(y)] = swap(table[x][y]);
                }
            }
            table = renumbered;
        }

        // Each row and column must be a permutation.
        for x in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for y in 0..n {
                seen_row[table[x][y]] = true;
                seen_col[table[y][x]] = true;
            }
            if seen_row.iter().any(|s| !s) {
                return Err(GroupError::NotAGroup(format!("row {x} is not a permutation")));
            }
            if seen_col.iter().any(|s| !s) {
                return Err(GroupError::NotAGroup(format!("column {x} is not a permutation")));
            }
        }

        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }

        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| table[x][y] == 0)
                .ok_or_else(|| GroupError::NotAGroup(format!("element {x} has no inverse")))?;
        }

        Ok(FiniteGroup { order: n, table, inverse })
    }

    /// Closure of permutation generators on `0..degree` under right-to-left
    /// composition. Elements are numbered in discovery order (identity first).
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_permutations_with_limit(degree, generators, DEFAULT_MAX_ORDER)
    }

    pub fn from_permutations_with_limit(
        degree: usize,
        generators: &[Vec<usize>],
        max_order: usize,
    ) -> Result<Self, GroupError> {
        for g in generators {
            check_permutation(degree, g)?;
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        index.insert(identity, 0);
        let mut next = 0;
        while next < elems.len() {
            for g in generators {
                let prod = compose(&elems[next], g);
                if !index.contains_key(&prod) {
                    if elems.len() >= max_order {
                        return Err(GroupError::OrderLimitExceeded {
                            order: elems.len() + 1,
                            max: max_order,
                        });
                    }
                    index.insert(prod.clone(), elems.len());
                    elems.push(prod);
                }
            }
            next += 1;
        }

        let n = elems.len();
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = index[&compose(&elems[i], &elems[j])];
            }
        }
        Self::from_table_with_limit(table, max_order)
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table_with_limit(table, n.max(1)).expect("cyclic table is a group")
    }

    /// The symmetric group on `n` points, generated by a transposition and an n-cycle.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        assert!(n >= 1);
        if n == 1 {
            return Ok(Self::cyclic(1));
        }
        let transposition = cycles_to_permutation(n, &[vec![0, 1]])?;
        let cycle = cycles_to_permutation(n, &[(0..n).collect()])?;
        let mut order = 1;
        for k in 2..=n {
            order *= k;
        }
        Self::from_permutations_with_limit(n, &[transposition, cycle], order)
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self, GroupError> {
        let n = a.order * b.order;
        let id = |x: ElemId, y: ElemId| x * b.order + y;
        let mut table = vec![vec![0; n]; n];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        table[id(x1, y1)][id(x2, y2)] = id(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        Self::from_table_with_limit(table, n)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn mul(&self, x: ElemId, y: ElemId) -> ElemId {
        self.table[x][y]
    }

    pub fn inv(&self, x: ElemId) -> ElemId {
        self.inverse[x]
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        0..self.order
    }

    pub fn table(&self) -> &Vec<Vec<ElemId>> {
        &self.table
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElemId>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class: BTreeSet<ElemId> = BTreeSet::new();
            for g in 0..self.order {
                class.insert(self.mul(self.mul(g, x), self.inv(g)));
            }
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }
}

fn check_permutation(degree: usize, p: &[usize]) -> Result<(), GroupError> {
    if p.len() != degree {
        return Err(GroupError::BadPermutation(format!(
            "length {} does not match degree {degree}",
            p.len()
        )));
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree {
            return Err(GroupError::BadPermutation(format!("image {x} out of range")));
        }
        if seen[x] {
            return Err(GroupError::BadPermutation(format!("image {x} repeated")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// `(f ∘ g)(x) = f(g(x))`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Converts a cycle list on `0..degree` to a permutation array. The cycle
/// `[a, b, c]` maps a to b, b to c and c to a; multiple cycles compose
/// right-to-left (the last cycle listed is applied first).
pub fn cycles_to_permutation(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>, GroupError> {
    let mut result: Vec<usize> = (0..degree).collect();
    for cycle in cycles.iter().rev() {
        let mut single: Vec<usize> = (0..degree).collect();
        for &p in cycle {
            if p >= degree {
                return Err(GroupError::BadPermutation(format!("point {p} out of range")));
            }
        }
        let mut distinct = BTreeSet::new();
        for &p in cycle {
            if !distinct.insert(p) {
                return Err(GroupError::BadPermutation(format!("point {p} repeated in cycle")));
            }
        }
        for w in 0..cycle.len() {
            single[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
        result = compose(&result, &single);
    }
    Ok(result)
}

/// A subgroup stored as a sorted element list plus a handle on its parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    elements: Vec<ElemId>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.elements == other.elements
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    /// Smallest subgroup containing `gens`.
    pub fn generated(group: &Arc<FiniteGroup>, gens: &[ElemId]) -> Result<Self, GroupError> {
        for &g in gens {
            if g >= group.order() {
                return Err(GroupError::InvalidElement(g));
            }
        }
        let mut members = vec![false; group.order()];
        members[0] = true;
        let mut worklist: Vec<ElemId> = vec![0];
        for &g in gens {
            if !members[g] {
                members[g] = true;
                worklist.push(g);
            }
        }
        // Closure under products; inverses come for free in a finite group.
        let mut i = 0;
        while i < worklist.len() {
            let x = worklist[i];
            i += 1;
            for j in 0..worklist.len() {
                for prod in [group.mul(x, worklist[j]), group.mul(worklist[j], x)] {
                    if !members[prod] {
                        members[prod] = true;
                        worklist.push(prod);
                    }
                }
            }
        }
        let elements: Vec<ElemId> =
            (0..group.order()).filter(|&x| members[x]).collect();
        Ok(Subgroup { group: Arc::clone(group), elements })
    }

    /// The whole group as a subgroup of itself.
    pub fn full(group: &Arc<FiniteGroup>) -> Self {
        Subgroup {
            group: Arc::clone(group),
            elements: group.elements().collect(),
        }
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Subgroup { group: Arc::clone(group), elements: vec![0] }
    }

    /// Wraps a sorted element list after checking closure.
    pub fn from_elements(group: &Arc<FiniteGroup>, elements: Vec<ElemId>) -> Result<Self, GroupError> {
        let candidate = Subgroup { group: Arc::clone(group), elements };
        if !candidate.is_closed() {
            return Err(GroupError::NotASubgroup);
        }
        Ok(candidate)
    }

    fn is_closed(&self) -> bool {
        if self.elements.first() != Some(&0) && !self.elements.contains(&0) {
            return false;
        }
        if self.elements.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        self.elements.iter().all(|&x| {
            x < self.group.order()
                && self.contains(self.group.inv(x))
                && self.elements.iter().all(|&y| self.contains(self.group.mul(x, y)))
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn elements(&self) -> &[ElemId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: ElemId) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of `x` in the sorted element list.
    pub fn position_of(&self, x: ElemId) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// The set `{h k : h in H, k in K}`, sorted.
pub fn product_set(h: &Subgroup, k: &Subgroup) -> Vec<ElemId> {
    let g = h.group();
    let mut members = vec![false; g.order()];
    for &x in h.elements() {
        for &y in k.elements() {
            members[g.mul(x, y)] = true;
        }
    }
    (0..g.order()).filter(|&x| members[x]).collect()
}

pub fn intersection(h: &Subgroup, k: &Subgroup) -> Subgroup {
    let elements = h
        .elements()
        .iter()
        .copied()
        .filter(|&x| k.contains(x))
        .collect();
    Subgroup {
        group: Arc::clone(h.group()),
        elements,
    }
}

/// Normalizer of `p` inside `ambient`: elements g with g p g^-1 = p.
pub fn normalizer(ambient: &Subgroup, p: &Subgroup) -> Subgroup {
    let g = ambient.group();
    let elements = ambient
        .elements()
        .iter()
        .copied()
        .filter(|&x| {
            p.elements()
                .iter()
                .all(|&y| p.contains(g.mul(g.mul(x, y), g.inv(x))))
        })
        .collect();
    Subgroup {
        group: Arc::clone(g),
        elements,
    }
}

/// True iff `n` is normal in `ambient` (both must live in the same group).
pub fn is_normal(ambient: &Subgroup, n: &Subgroup) -> bool {
    n.is_subset_of(ambient) && normalizer(ambient, n).len() == ambient.len()
}

/// One Sylow p-subgroup of `of`, grown deterministically: at each step the
/// first element in id order whose p-th power lies in the current p-subgroup
/// and that normalizes it is adjoined.
pub fn sylow_subgroup(of: &Subgroup, p: usize) -> Result<Subgroup, GroupError> {
    let g = of.group();
    if p < 2 || of.len() % p != 0 {
        return Err(GroupError::PDoesNotDivideOrder { p, order: of.len() });
    }
    let mut target = 1;
    let mut rest = of.len();
    while rest % p == 0 {
        target *= p;
        rest /= p;
    }
    let mut current = Subgroup::trivial(g);
    while current.len() < target {
        let normalizer_in_of = normalizer(of, &current);
        let next = normalizer_in_of
            .elements()
            .iter()
            .copied()
            .find(|&x| {
                if current.contains(x) {
                    return false;
                }
                let mut power = x;
                for _ in 1..p {
                    power = g.mul(power, x);
                }
                current.contains(power)
            })
            .expect("a p-subgroup below Sylow order extends inside its normalizer");
        let mut gens = current.elements().to_vec();
        gens.push(next);
        current = Subgroup::generated(g, &gens)?;
    }
    Ok(current)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetKind {
    Left,
    Right,
}

/// Partition of a subgroup's elements into cosets of a smaller subgroup,
/// with one representative per block.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    pub kind: CosetKind,
    blocks: Vec<Vec<ElemId>>,
    representatives: Vec<ElemId>,
    block_of: BTreeMap<ElemId, usize>,
}

impl CosetSpace {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<ElemId>] {
        &self.blocks
    }

    pub fn block(&self, idx: usize) -> &[ElemId] {
        &self.blocks[idx]
    }

    pub fn representative(&self, idx: usize) -> ElemId {
        self.representatives[idx]
    }

    pub fn representatives(&self) -> &[ElemId] {
        &self.representatives
    }

    pub fn block_index_of(&self, x: ElemId) -> Option<usize> {
        self.block_of.get(&x).copied()
    }

    /// Replaces the representatives; each must lie in its own block.
    pub fn with_representatives(mut self, reps: &[ElemId]) -> Result<Self, GroupError> {
        if reps.len() != self.blocks.len() {
            return Err(GroupError::NotASubgroup);
        }
        for (idx, &r) in reps.iter().enumerate() {
            if self.block_of.get(&r) != Some(&idx) {
                return Err(GroupError::NotASubgroup);
            }
        }
        self.representatives = reps.to_vec();
        Ok(self)
    }
}

/// Partition of `ambient` into left (`g·sub`) or right (`sub·g`) cosets of
/// `sub`. Blocks are ordered by their minimal element, which is also the
/// default representative.
pub fn coset_space(
    ambient: &Subgroup,
    sub: &Subgroup,
    kind: CosetKind,
) -> Result<CosetSpace, GroupError> {
    if !sub.is_subset_of(ambient) {
        return Err(GroupError::NotASubgroup);
    }
    let g = ambient.group();
    let mut block_of: BTreeMap<ElemId, usize> = BTreeMap::new();
    let mut blocks: Vec<Vec<ElemId>> = Vec::new();
    let mut representatives: Vec<ElemId> = Vec::new();
    for &x in ambient.elements() {
        if block_of.contains_key(&x) {
            continue;
        }
        let mut block: Vec<ElemId> = sub
            .elements()
            .iter()
            .map(|&s| match kind {
                CosetKind::Left => g.mul(x, s),
                CosetKind::Right => g.mul(s, x),
            })
            .collect();
        block.sort_unstable();
        block.dedup();
        let idx = blocks.len();
        for &y in &block {
            block_of.insert(y, idx);
        }
        representatives.push(block[0]);
        blocks.push(block);
    }
    Ok(CosetSpace {
        kind,
        blocks,
        representatives,
        block_of,
    })
}

/// Every subgroup of `group`, found by breadth-first closure of extensions.
/// Sorted by (order, element list) so the listing is deterministic.
pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let trivial = Subgroup::trivial(group);
    let mut seen: BTreeSet<Vec<ElemId>> = BTreeSet::new();
    seen.insert(trivial.elements().to_vec());
    let mut queue = vec![trivial];
    let mut i = 0;
    while i < queue.len() {
        let current = queue[i].clone();
        i += 1;
        for x in group.elements() {
            if current.contains(x) {
                continue;
            }
            let mut gens = current.elements().to_vec();
            gens.push(x);
            let bigger = Subgroup::generated(group, &gens).expect("valid ids");
            if seen.insert(bigger.elements().to_vec()) {
                queue.push(bigger);
            }
        }
    }
    queue.sort_by(|a, b| {
        (a.len(), a.elements()).cmp(&(b.len(), b.elements()))
    });
    queue
}
