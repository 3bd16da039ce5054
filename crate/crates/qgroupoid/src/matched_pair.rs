//! Relative matched pairs: subgroups `H, K` of `G` with `G = HK`.
//!
//! The pair carries the decomposition maps `p1, p2, p1', p2'`, the coset
//! actions of `K` on `H/S` and of `H` on `K/S` (where `S = H ∩ K`), and the
//! representative-set extensions of those actions to genuine actions on the
//! element sets, together with their factorization complements and cocycles.
//!
//! Representatives: `I` picks one element of each coset `kS` in `K`, `J` one
//! of each `hS` in `H`. The representative of the coset `S` itself is always
//! the identity. Different choices of `I` give conjugate extended actions;
//! `action_conjugacy` returns the conjugating permutation.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{
    coset_space, intersection, is_normal, normalizer, product_set, sylow_subgroup, CosetKind,
    CosetSpace, ElemId, FiniteGroup, GroupError, Subgroup,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairError {
    NotARelativeMatchedPair,
    InvalidRepresentativeSet(String),
    NotNormal,
    Group(GroupError),
}

impl fmt::Display for PairError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairError::NotARelativeMatchedPair => write!(f, "HK does not cover the group"),
            PairError::InvalidRepresentativeSet(why) => {
                write!(f, "invalid representative set: {why}")
            }
            PairError::NotNormal => write!(f, "subgroup is not normal"),
            PairError::Group(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for PairError {
    fn from(e: GroupError) -> Self {
        PairError::Group(e)
    }
}

/// True iff `product_set(H, K)` is all of `G`.
pub fn check_relative_matched_pair(g: &Arc<FiniteGroup>, h: &Subgroup, k: &Subgroup) -> bool {
    product_set(h, k).len() == g.order()
}

/// Dense tables for the extended actions and their complements, indexed by
/// positions in the sorted element lists of `H` and `K`.
///
/// Factorization invariants, for all `h` in `H` and `k` in `K`:
/// `h k = act_hk(h,k) · comp_hk(h,k)` and `k h = act_kh(k,h) · comp_kh(k,h)`.
#[derive(Clone, Debug)]
pub struct ActionTables {
    act_hk: Vec<Vec<ElemId>>,
    comp_hk: Vec<Vec<ElemId>>,
    act_kh: Vec<Vec<ElemId>>,
    comp_kh: Vec<Vec<ElemId>>,
}

#[derive(Clone, Debug)]
pub struct RelativeMatchedPair {
    group: Arc<FiniteGroup>,
    h: Subgroup,
    k: Subgroup,
    s: Subgroup,
    /// Left cosets hS in H; representatives are `J`.
    h_mod_s: CosetSpace,
    /// Left cosets kS in K; representatives are `I`.
    k_mod_s: CosetSpace,
    /// Right cosets Sk in K (the codomain of `p2`).
    s_k_right: CosetSpace,
    /// Right cosets Sh in H (the codomain of `p2'`).
    s_h_right: CosetSpace,
    /// Per group element: the first `(h, k)` in id order with `h k = g`.
    factor_hk: Vec<(ElemId, ElemId)>,
    /// Per group element: the first `(k, h)` in id order with `k h = g`.
    factor_kh: Vec<(ElemId, ElemId)>,
    tables: ActionTables,
}

impl RelativeMatchedPair {
    pub fn new(g: &Arc<FiniteGroup>, h: Subgroup, k: Subgroup) -> Result<Self, PairError> {
        Self::with_representatives(g, h, k, None, None)
    }

    /// Builds the pair with explicit representative sets. `None` picks the
    /// default (minimal id per coset, which puts the identity on the coset
    /// `S`). Explicit sets must contain the identity for the coset `S`.
    pub fn with_representatives(
        g: &Arc<FiniteGroup>,
        h: Subgroup,
        k: Subgroup,
        i_reps: Option<&[ElemId]>,
        j_reps: Option<&[ElemId]>,
    ) -> Result<Self, PairError> {
        if !Arc::ptr_eq(h.group(), g) || !Arc::ptr_eq(k.group(), g) {
            return Err(PairError::Group(GroupError::NotASubgroup));
        }
        if !check_relative_matched_pair(g, &h, &k) {
            return Err(PairError::NotARelativeMatchedPair);
        }
        let s = intersection(&h, &k);

        let h_mod_s = coset_space(&h, &s, CosetKind::Left)?;
        let k_mod_s = coset_space(&k, &s, CosetKind::Left)?;
        let s_k_right = coset_space(&k, &s, CosetKind::Right)?;
        let s_h_right = coset_space(&h, &s, CosetKind::Right)?;
        let k_mod_s = apply_reps(k_mod_s, i_reps, "I")?;
        let h_mod_s = apply_reps(h_mod_s, j_reps, "J")?;

        let mut factor_hk = vec![(0, 0); g.order()];
        let mut factor_kh = vec![(0, 0); g.order()];
        let mut seen_hk = vec![false; g.order()];
        let mut seen_kh = vec![false; g.order()];
        for &x in h.elements() {
            for &y in k.elements() {
                let hk = g.mul(x, y);
                if !seen_hk[hk] {
                    seen_hk[hk] = true;
                    factor_hk[hk] = (x, y);
                }
                let kh = g.mul(y, x);
                if !seen_kh[kh] {
                    seen_kh[kh] = true;
                    factor_kh[kh] = (y, x);
                }
            }
        }

        let mut pair = RelativeMatchedPair {
            group: Arc::clone(g),
            h,
            k,
            s,
            h_mod_s,
            k_mod_s,
            s_k_right,
            s_h_right,
            factor_hk,
            factor_kh,
            tables: ActionTables {
                act_hk: Vec::new(),
                comp_hk: Vec::new(),
                act_kh: Vec::new(),
                comp_kh: Vec::new(),
            },
        };
        pair.tables = build_action_tables(&pair);
        Ok(pair)
    }

    /// Same pair with a different `I`.
    pub fn with_i(&self, i_reps: &[ElemId]) -> Result<Self, PairError> {
        Self::with_representatives(
            &self.group,
            self.h.clone(),
            self.k.clone(),
            Some(i_reps),
            Some(self.h_mod_s.representatives()),
        )
    }

    /// Same pair with a different `J`.
    pub fn with_j(&self, j_reps: &[ElemId]) -> Result<Self, PairError> {
        Self::with_representatives(
            &self.group,
            self.h.clone(),
            self.k.clone(),
            Some(self.k_mod_s.representatives()),
            Some(j_reps),
        )
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }
    pub fn h(&self) -> &Subgroup {
        &self.h
    }
    pub fn k(&self) -> &Subgroup {
        &self.k
    }
    pub fn s(&self) -> &Subgroup {
        &self.s
    }
    pub fn i_reps(&self) -> &[ElemId] {
        self.k_mod_s.representatives()
    }
    pub fn j_reps(&self) -> &[ElemId] {
        self.h_mod_s.representatives()
    }
    pub fn h_cosets(&self) -> &CosetSpace {
        &self.h_mod_s
    }
    pub fn k_cosets(&self) -> &CosetSpace {
        &self.k_mod_s
    }
    pub fn tables(&self) -> &ActionTables {
        &self.tables
    }

    /// Dimension of the square algebras: |H| |K| |S|.
    pub fn square_count(&self) -> usize {
        self.h.len() * self.k.len() * self.s.len()
    }

    /// Index of the coset `hS` in `H/S` with `g ∈ hK`.
    pub fn p1(&self, g: ElemId) -> usize {
        self.h_mod_s
            .block_index_of(self.factor_hk[g].0)
            .expect("factor lies in H")
    }

    /// Index of the coset `Sk` with `g ∈ Hk`.
    pub fn p2(&self, g: ElemId) -> usize {
        self.s_k_right
            .block_index_of(self.factor_hk[g].1)
            .expect("factor lies in K")
    }

    /// Index of the coset `kS` in `K/S` with `g ∈ kH`.
    pub fn p1_prime(&self, g: ElemId) -> usize {
        self.k_mod_s
            .block_index_of(self.factor_kh[g].0)
            .expect("factor lies in K")
    }

    /// Index of the coset `Sh` with `g ∈ Kh`.
    pub fn p2_prime(&self, g: ElemId) -> usize {
        self.s_h_right
            .block_index_of(self.factor_kh[g].1)
            .expect("factor lies in H")
    }

    pub fn p1_block(&self, g: ElemId) -> &[ElemId] {
        self.h_mod_s.block(self.p1(g))
    }

    pub fn p2_block(&self, g: ElemId) -> &[ElemId] {
        self.s_k_right.block(self.p2(g))
    }

    /// `k ▷ hS = p1(k h)`: the action of `K` on `H/S`, by coset index.
    pub fn coset_action_k_on_h(&self, k: ElemId, coset: usize) -> usize {
        let rep = self.h_mod_s.representative(coset);
        self.p1(self.group.mul(k, rep))
    }

    /// `h ▷' kS = p1'(h k)`: the action of `H` on `K/S`, by coset index.
    pub fn coset_action_h_on_k(&self, h: ElemId, coset: usize) -> usize {
        let rep = self.k_mod_s.representative(coset);
        self.p1_prime(self.group.mul(h, rep))
    }

    fn h_pos(&self, h: ElemId) -> usize {
        self.h.position_of(h).expect("element of H")
    }

    fn k_pos(&self, k: ElemId) -> usize {
        self.k.position_of(k).expect("element of K")
    }

    /// The extended action of `H` on the set `K` determined by `I`.
    pub fn act_hk(&self, h: ElemId, k: ElemId) -> ElemId {
        self.tables.act_hk[self.h_pos(h)][self.k_pos(k)]
    }

    /// The complement in `H` of `act_hk`: `h k = act_hk(h,k) · comp_hk(h,k)`.
    pub fn comp_hk(&self, h: ElemId, k: ElemId) -> ElemId {
        self.tables.comp_hk[self.h_pos(h)][self.k_pos(k)]
    }

    /// The extended action of `K` on the set `H` determined by `J`.
    pub fn act_kh(&self, k: ElemId, h: ElemId) -> ElemId {
        self.tables.act_kh[self.k_pos(k)][self.h_pos(h)]
    }

    /// The complement in `K` of `act_kh`: `k h = act_kh(k,h) · comp_kh(k,h)`.
    pub fn comp_kh(&self, k: ElemId, h: ElemId) -> ElemId {
        self.tables.comp_kh[self.k_pos(k)][self.h_pos(h)]
    }

    /// `k'_I(k, h) = act_hk(h, k)^{-1} · k`, an element of `K`.
    pub fn cocycle_k_i(&self, k: ElemId, h: ElemId) -> ElemId {
        let g = &self.group;
        g.mul(g.inv(self.act_hk(h, k)), k)
    }

    /// `h'_J(h, k) = act_kh(k, h)^{-1} · h`, an element of `H`.
    pub fn cocycle_h_j(&self, h: ElemId, k: ElemId) -> ElemId {
        let g = &self.group;
        g.mul(g.inv(self.act_kh(k, h)), h)
    }
}

fn apply_reps(
    space: CosetSpace,
    reps: Option<&[ElemId]>,
    name: &str,
) -> Result<CosetSpace, PairError> {
    let space = match reps {
        None => space,
        Some(reps) => space.with_representatives(reps).map_err(|_| {
            PairError::InvalidRepresentativeSet(format!(
                "{name} must contain exactly one element of each coset"
            ))
        })?,
    };
    let identity_block = space
        .block_index_of(0)
        .expect("identity lies in the subgroup");
    if space.representative(identity_block) != 0 {
        return Err(PairError::InvalidRepresentativeSet(format!(
            "{name} must represent the coset S by the identity"
        )));
    }
    Ok(space)
}

/// Materializes all four extended-action tables.
///
/// `act_hk(h, k_i s) = k_j s` where `k_j` is the `I`-representative of the
/// image coset `h ▷' k_i S`; `act_kh` is the mirror through `J`.
pub fn build_action_tables(pair: &RelativeMatchedPair) -> ActionTables {
    let g = pair.group();
    let h_elems = pair.h().elements();
    let k_elems = pair.k().elements();

    let mut act_hk = vec![vec![0; k_elems.len()]; h_elems.len()];
    let mut comp_hk = vec![vec![0; k_elems.len()]; h_elems.len()];
    for (hi, &h) in h_elems.iter().enumerate() {
        for (ki, &k) in k_elems.iter().enumerate() {
            let coset = pair.k_mod_s.block_index_of(k).expect("k in K");
            let rep = pair.k_mod_s.representative(coset);
            let shift = g.mul(g.inv(rep), k); // element of S
            let image_rep = pair
                .k_mod_s
                .representative(pair.coset_action_h_on_k(h, coset));
            let acted = g.mul(image_rep, shift);
            act_hk[hi][ki] = acted;
            let comp = g.mul(g.inv(acted), g.mul(h, k));
            debug_assert!(pair.h().contains(comp));
            comp_hk[hi][ki] = comp;
        }
    }

    let mut act_kh = vec![vec![0; h_elems.len()]; k_elems.len()];
    let mut comp_kh = vec![vec![0; h_elems.len()]; k_elems.len()];
    for (ki, &k) in k_elems.iter().enumerate() {
        for (hi, &h) in h_elems.iter().enumerate() {
            let coset = pair.h_mod_s.block_index_of(h).expect("h in H");
            let rep = pair.h_mod_s.representative(coset);
            let shift = g.mul(g.inv(rep), h);
            let image_rep = pair
                .h_mod_s
                .representative(pair.coset_action_k_on_h(k, coset));
            let acted = g.mul(image_rep, shift);
            act_kh[ki][hi] = acted;
            let comp = g.mul(g.inv(acted), g.mul(k, h));
            debug_assert!(pair.k().contains(comp));
            comp_kh[ki][hi] = comp;
        }
    }

    ActionTables {
        act_hk,
        comp_hk,
        act_kh,
        comp_kh,
    }
}

/// The permutation of `K` conjugating the `I1`-extension to the
/// `I2`-extension: `φ(k¹_c s) = k²_c s` coset by coset. Returned as ids
/// indexed by position in the sorted element list of `K`.
pub fn action_conjugacy(
    pair: &RelativeMatchedPair,
    i1: &[ElemId],
    i2: &[ElemId],
) -> Result<Vec<ElemId>, PairError> {
    let p1 = pair.with_i(i1)?;
    let p2 = pair.with_i(i2)?;
    let g = pair.group();
    let mut phi = vec![0; pair.k().len()];
    for coset in 0..p1.k_mod_s.block_count() {
        let r1 = p1.k_mod_s.representative(coset);
        let r2 = p2.k_mod_s.representative(coset);
        for &s in pair.s().elements() {
            let from = g.mul(r1, s);
            let to = g.mul(r2, s);
            phi[pair.k().position_of(from).expect("in K")] = to;
        }
    }
    Ok(phi)
}

/// Mirror of [`action_conjugacy`] for the `J` side: a permutation of `H`
/// conjugating the `J1`-extension of the `K`-action to the `J2`-extension.
pub fn action_conjugacy_j(
    pair: &RelativeMatchedPair,
    j1: &[ElemId],
    j2: &[ElemId],
) -> Result<Vec<ElemId>, PairError> {
    let p1 = pair.with_j(j1)?;
    let p2 = pair.with_j(j2)?;
    let g = pair.group();
    let mut phi = vec![0; pair.h().len()];
    for coset in 0..p1.h_mod_s.block_count() {
        let r1 = p1.h_mod_s.representative(coset);
        let r2 = p2.h_mod_s.representative(coset);
        for &s in pair.s().elements() {
            let from = g.mul(r1, s);
            let to = g.mul(r2, s);
            phi[pair.h().position_of(from).expect("in H")] = to;
        }
    }
    Ok(phi)
}

/// The relative matched pair `(N, N_G(P))` for `P` a Sylow p-subgroup of a
/// normal subgroup `N`; always valid by the Frattini argument.
pub fn frattini_pair(
    g: &Arc<FiniteGroup>,
    n: &Subgroup,
    p: usize,
) -> Result<RelativeMatchedPair, PairError> {
    let full = Subgroup::full(g);
    if !is_normal(&full, n) {
        return Err(PairError::NotNormal);
    }
    let sylow = sylow_subgroup(n, p)?;
    let k = normalizer(&full, &sylow);
    RelativeMatchedPair::new(g, n.clone(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cycles_to_permutation;

    pub(crate) fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3).unwrap())
    }

    pub(crate) fn pid(g: &Arc<FiniteGroup>, degree: usize, cycles: &[Vec<usize>]) -> ElemId {
        // Rebuild discovery order to translate cycle notation to ids.
        let target = cycles_to_permutation(degree, cycles).unwrap();
        let gens = [
            cycles_to_permutation(degree, &[vec![0, 1]]).unwrap(),
            cycles_to_permutation(degree, &[(0..degree).collect()]).unwrap(),
        ];
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems = vec![identity];
        let mut next = 0;
        while next < elems.len() {
            for gen in &gens {
                let prod = crate::group::compose(&elems[next], gen);
                if !elems.contains(&prod) {
                    elems.push(prod);
                }
            }
            next += 1;
        }
        let id = elems.iter().position(|p| *p == target).unwrap();
        assert!(id < g.order());
        id
    }

    /// The standard corpus pair: G = S3, H = <(12)>, K = <(123)>.
    pub(crate) fn s3_matched_pair() -> RelativeMatchedPair {
        let g = s3();
        let h = Subgroup::generated(&g, &[pid(&g, 3, &[vec![0, 1]])]).unwrap();
        let k = Subgroup::generated(&g, &[pid(&g, 3, &[vec![0, 1, 2]])]).unwrap();
        RelativeMatchedPair::new(&g, h, k).unwrap()
    }

    /// G = S3, H = S3, K = <(12)>; here S = K has order 2.
    pub(crate) fn s3_s2_pair() -> RelativeMatchedPair {
        let g = s3();
        let h = Subgroup::full(&g);
        let k = Subgroup::generated(&g, &[pid(&g, 3, &[vec![0, 1]])]).unwrap();
        RelativeMatchedPair::new(&g, h, k).unwrap()
    }

    #[test]
    fn detection() {
        let g = s3();
        let t12 = pid(&g, 3, &[vec![0, 1]]);
        let t13 = pid(&g, 3, &[vec![0, 2]]);
        let c123 = pid(&g, 3, &[vec![0, 1, 2]]);
        let h = Subgroup::generated(&g, &[t12]).unwrap();
        assert!(check_relative_matched_pair(
            &g,
            &Subgroup::trivial(&g),
            &Subgroup::full(&g)
        ));
        assert!(check_relative_matched_pair(
            &g,
            &h,
            &Subgroup::generated(&g, &[c123]).unwrap()
        ));
        assert!(!check_relative_matched_pair(
            &g,
            &h,
            &Subgroup::generated(&g, &[t13]).unwrap()
        ));
        assert!(RelativeMatchedPair::new(
            &g,
            h,
            Subgroup::generated(&g, &[t13]).unwrap()
        )
        .is_err());
    }

    #[test]
    fn factorization_multiplicity_is_s() {
        for pair in [s3_matched_pair(), s3_s2_pair()] {
            let g = pair.group().clone();
            for x in g.elements() {
                let count = pair
                    .h()
                    .elements()
                    .iter()
                    .flat_map(|&h| pair.k().elements().iter().map(move |&k| (h, k)))
                    .filter(|&(h, k)| g.mul(h, k) == x)
                    .count();
                assert_eq!(count, pair.s().len());
            }
        }
    }

    #[test]
    fn p1_examples() {
        let pair = s3_matched_pair();
        let g = pair.group().clone();
        // p1(e) is the coset S.
        assert_eq!(pair.p1_block(0), &[0]);
        // (23) = (12)(132), so p1((23)) = {(12)}.
        let t23 = pid(&g, 3, &[vec![1, 2]]);
        let t12 = pid(&g, 3, &[vec![0, 1]]);
        assert_eq!(pair.p1_block(t23), &[t12]);
    }

    #[test]
    fn p1_fibers_are_right_k_cosets() {
        for pair in [s3_matched_pair(), s3_s2_pair()] {
            let g = pair.group().clone();
            for x in g.elements() {
                for y in g.elements() {
                    let same = pair.p1(x) == pair.p1(y);
                    let related = pair.k().elements().iter().any(|&k| g.mul(x, k) == y);
                    assert_eq!(same, related, "p1 fiber mismatch at ({x}, {y})");
                    let same2 = pair.p2(x) == pair.p2(y);
                    let related2 = pair.h().elements().iter().any(|&h| g.mul(h, x) == y);
                    assert_eq!(same2, related2, "p2 fiber mismatch at ({x}, {y})");
                }
            }
        }
    }

    #[test]
    fn coset_action_laws() {
        for pair in [s3_matched_pair(), s3_s2_pair()] {
            let g = pair.group().clone();
            for coset in 0..pair.h_cosets().block_count() {
                assert_eq!(pair.coset_action_k_on_h(0, coset), coset);
            }
            for &k1 in pair.k().elements() {
                for &k2 in pair.k().elements() {
                    for coset in 0..pair.h_cosets().block_count() {
                        assert_eq!(
                            pair.coset_action_k_on_h(g.mul(k1, k2), coset),
                            pair.coset_action_k_on_h(k1, pair.coset_action_k_on_h(k2, coset)),
                        );
                    }
                }
            }
            for &h1 in pair.h().elements() {
                for &h2 in pair.h().elements() {
                    for coset in 0..pair.k_cosets().block_count() {
                        assert_eq!(
                            pair.coset_action_h_on_k(g.mul(h1, h2), coset),
                            pair.coset_action_h_on_k(h1, pair.coset_action_h_on_k(h2, coset)),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn coset_action_example() {
        let pair = s3_matched_pair();
        let g = pair.group().clone();
        // (123) ▷ (12)S = {(12)}: (123)(12) = (13) = (12)(132).
        let t12 = pid(&g, 3, &[vec![0, 1]]);
        let c123 = pid(&g, 3, &[vec![0, 1, 2]]);
        let coset = pair.h_cosets().block_index_of(t12).unwrap();
        let image = pair.coset_action_k_on_h(c123, coset);
        assert_eq!(pair.h_cosets().block(image), &[t12]);
    }

    #[test]
    fn action_table_invariants() {
        for pair in [s3_matched_pair(), s3_s2_pair()] {
            let g = pair.group().clone();
            for &h in pair.h().elements() {
                for &k in pair.k().elements() {
                    // Factorizations.
                    assert_eq!(
                        g.mul(h, k),
                        g.mul(pair.act_hk(h, k), pair.comp_hk(h, k))
                    );
                    assert_eq!(
                        g.mul(k, h),
                        g.mul(pair.act_kh(k, h), pair.comp_kh(k, h))
                    );
                    // Identity acts trivially.
                    assert_eq!(pair.act_hk(0, k), k);
                    assert_eq!(pair.act_kh(0, h), h);
                    // S is fixed pointwise and shifts commute.
                    for &s in pair.s().elements() {
                        assert_eq!(pair.act_hk(h, s), s);
                        assert_eq!(pair.act_kh(k, s), s);
                        assert_eq!(pair.act_hk(h, g.mul(k, s)), g.mul(pair.act_hk(h, k), s));
                        assert_eq!(pair.act_kh(k, g.mul(h, s)), g.mul(pair.act_kh(k, h), s));
                    }
                }
            }
            // Genuine left actions on the element sets.
            for &h1 in pair.h().elements() {
                for &h2 in pair.h().elements() {
                    for &k in pair.k().elements() {
                        assert_eq!(
                            pair.act_hk(g.mul(h1, h2), k),
                            pair.act_hk(h1, pair.act_hk(h2, k))
                        );
                    }
                }
            }
            for &k1 in pair.k().elements() {
                for &k2 in pair.k().elements() {
                    for &h in pair.h().elements() {
                        assert_eq!(
                            pair.act_kh(g.mul(k1, k2), h),
                            pair.act_kh(k1, pair.act_kh(k2, h))
                        );
                    }
                }
            }
            // Restricted to I-representatives the extension agrees with the
            // coset action.
            for &h in pair.h().elements() {
                for (coset, &rep) in pair.i_reps().iter().enumerate() {
                    let image = pair.act_hk(h, rep);
                    let image_coset = pair.coset_action_h_on_k(h, coset);
                    assert_eq!(pair.i_reps()[image_coset], image);
                }
            }
        }
    }

    #[test]
    fn action_table_spec_values() {
        let pair = s3_matched_pair();
        let g = pair.group().clone();
        let t12 = pid(&g, 3, &[vec![0, 1]]);
        let c123 = pid(&g, 3, &[vec![0, 1, 2]]);
        let c132 = pid(&g, 3, &[vec![0, 2, 1]]);
        // (12)(123) = (23) = (132)(12).
        assert_eq!(pair.act_hk(t12, c123), c132);
        assert_eq!(pair.comp_hk(t12, c123), t12);
        // (123)(12) = (13) = (12)(132).
        assert_eq!(pair.act_kh(c123, t12), t12);
        assert_eq!(pair.comp_kh(c123, t12), c132);
    }

    #[test]
    fn cocycle_identities() {
        for pair in [s3_matched_pair(), s3_s2_pair()] {
            let g = pair.group().clone();
            // k'_I(k, e) = e and h'_J(h, e) = e.
            for &k in pair.k().elements() {
                assert_eq!(pair.cocycle_k_i(k, 0), 0);
            }
            for &h in pair.h().elements() {
                assert_eq!(pair.cocycle_h_j(h, 0), 0);
            }
            // Composition law: k'_I(h' ▷' k', h) k'_I(k', h') = k'_I(k', h h').
            for &h in pair.h().elements() {
                for &hp in pair.h().elements() {
                    for &kp in pair.k().elements() {
                        let lhs = g.mul(
                            pair.cocycle_k_i(pair.act_hk(hp, kp), h),
                            pair.cocycle_k_i(kp, hp),
                        );
                        assert_eq!(lhs, pair.cocycle_k_i(kp, g.mul(h, hp)));
                    }
                }
            }
            // Mirror law and the complement law.
            for &k in pair.k().elements() {
                for &kp in pair.k().elements() {
                    for &h in pair.h().elements() {
                        let lhs = g.mul(
                            pair.cocycle_h_j(pair.act_kh(k, h), kp),
                            pair.cocycle_h_j(h, k),
                        );
                        assert_eq!(lhs, pair.cocycle_h_j(h, g.mul(k, kp)));
                        let lhs2 = g.mul(
                            pair.comp_kh(kp, pair.act_kh(k, h)),
                            pair.comp_kh(k, h),
                        );
                        assert_eq!(lhs2, pair.comp_kh(g.mul(kp, k), h));
                    }
                }
            }
        }
    }

    #[test]
    fn cocycle_spec_value() {
        let pair = s3_matched_pair();
        let g = pair.group().clone();
        let t12 = pid(&g, 3, &[vec![0, 1]]);
        let c123 = pid(&g, 3, &[vec![0, 1, 2]]);
        let c132 = pid(&g, 3, &[vec![0, 2, 1]]);
        // k'_I((123), (12)) = (132)^{-1}(123) = (132).
        assert_eq!(pair.cocycle_k_i(c123, t12), c132);
    }

    #[test]
    fn complement_right_action_when_s_trivial() {
        let pair = s3_matched_pair();
        assert_eq!(pair.s().len(), 1);
        let g = pair.group().clone();
        for &h in pair.h().elements() {
            for &k1 in pair.k().elements() {
                for &k2 in pair.k().elements() {
                    // (h ◁' k1) ◁' k2 = h ◁' (k1 k2) as a right action on H.
                    assert_eq!(
                        pair.comp_hk(pair.comp_hk(h, k1), k2),
                        pair.comp_hk(h, g.mul(k1, k2))
                    );
                }
            }
        }
    }

    #[test]
    fn conjugacy_of_extensions() {
        // Identity conjugation when I1 = I2.
        let pair = s3_matched_pair();
        let i = pair.i_reps().to_vec();
        let phi = action_conjugacy(&pair, &i, &i).unwrap();
        for (pos, &k) in pair.k().elements().iter().enumerate() {
            assert_eq!(phi[pos], k);
        }

        // On (S3, S3, <(12)>) the J side has room for two distinct choices.
        let pair = s3_s2_pair();
        let g = pair.group().clone();
        let j1 = pair.j_reps().to_vec();
        let mut j2 = j1.clone();
        let nontrivial = (0..j1.len())
            .find(|&c| pair.h_cosets().block(c).len() > 1 && j1[c] != 0)
            .unwrap();
        j2[nontrivial] = *pair
            .h_cosets()
            .block(nontrivial)
            .iter()
            .find(|&&x| x != j1[nontrivial])
            .unwrap();
        let phi = action_conjugacy_j(&pair, &j1, &j2).unwrap();
        let pj1 = pair.with_j(&j1).unwrap();
        let pj2 = pair.with_j(&j2).unwrap();
        let hpos = |x: ElemId| pair.h().position_of(x).unwrap();
        // Intertwining: φ(k ▷_{J1} h) = k ▷_{J2} φ(h).
        for &k in pair.k().elements() {
            for &h in pair.h().elements() {
                assert_eq!(
                    phi[hpos(pj1.act_kh(k, h))],
                    pj2.act_kh(k, phi[hpos(h)])
                );
            }
        }
        // φ is a permutation commuting with the right S-shift.
        let mut sorted = phi.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, pair.h().elements());
        for &h in pair.h().elements() {
            for &s in pair.s().elements() {
                assert_eq!(phi[hpos(g.mul(h, s))], g.mul(phi[hpos(h)], s));
            }
        }
    }

    #[test]
    fn invalid_representative_sets_are_rejected() {
        let pair = s3_s2_pair();
        // Two elements of the same coset.
        let blocks = pair.h_cosets();
        let bad = vec![blocks.block(0)[0], blocks.block(1)[0], blocks.block(1)[1]];
        assert!(matches!(
            pair.with_j(&bad),
            Err(PairError::InvalidRepresentativeSet(_))
        ));
        // Coset S represented by a non-identity element.
        let s_block = blocks.block_index_of(0).unwrap();
        let other = *blocks.block(s_block).iter().find(|&&x| x != 0).unwrap();
        let mut bad2 = pair.j_reps().to_vec();
        bad2[s_block] = other;
        assert!(matches!(
            pair.with_j(&bad2),
            Err(PairError::InvalidRepresentativeSet(_))
        ));
    }

    #[test]
    fn frattini_pairs() {
        // (S3, A3, 3): P = A3 is normal, so K = S3.
        let g = s3();
        let a3 = Subgroup::generated(&g, &[pid(&g, 3, &[vec![0, 1, 2]])]).unwrap();
        let pair = frattini_pair(&g, &a3, 3).unwrap();
        assert_eq!(pair.k().len(), 6);

        // (S4, A4, 3): the product covers S4.
        let g4 = Arc::new(FiniteGroup::symmetric(4).unwrap());
        let a4 = Subgroup::generated(
            &g4,
            &[pid(&g4, 4, &[vec![0, 1, 2]]), pid(&g4, 4, &[vec![0, 1, 3]])],
        )
        .unwrap();
        let pair = frattini_pair(&g4, &a4, 3).unwrap();
        assert_eq!(product_set(pair.h(), pair.k()).len(), 24);

        // N = G always works.
        let pair = frattini_pair(&g, &Subgroup::full(&g), 2).unwrap();
        assert_eq!(pair.h().len(), 6);

        // Non-normal N is rejected.
        let t12 = Subgroup::generated(&g, &[pid(&g, 3, &[vec![0, 1]])]).unwrap();
        assert!(matches!(frattini_pair(&g, &t12, 2), Err(PairError::NotNormal)));
    }
}
