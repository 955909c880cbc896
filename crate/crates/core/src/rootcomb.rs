//! Combinatorics of the diagonal torus A in GL(n).
//!
//! A Levi subgroup containing A is a partition of the index set {1..n} into
//! blocks; a parabolic subgroup with that Levi component is a linear order on
//! the blocks; a Borel subgroup is the all-singletons case, i.e. a
//! permutation. Roots are ordered index pairs (i, j) <-> e_i - e_j, positive
//! for a Borel exactly when i precedes j in its order. The coweight quotient
//! for a Levi with r blocks is Z^r via block sums.
//!
//! Indices are 1-based throughout this module, matching the serialized forms;
//! conversion to 0-based matrix positions happens at the point of use.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Levi subgroup of GL(n) containing the diagonal torus: an unordered
/// partition of {1..n}, stored with each block sorted and blocks ordered by
/// their minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviDatum {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl LeviDatum {
    /// Build from blocks; validates that they partition {1..n}.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<LeviDatum> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b.first().copied().unwrap_or(0));
        let mut seen = vec![false; n + 1];
        let mut count = 0usize;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidDatum("empty block".into()));
            }
            for &i in b {
                if i == 0 || i > n || seen[i] {
                    return Err(Error::InvalidDatum(format!(
                        "blocks do not partition 1..{n} (index {i})"
                    )));
                }
                seen[i] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidDatum(format!("blocks cover {count} of {n} indices")));
        }
        Ok(LeviDatum { n, blocks })
    }

    /// The maximal torus A itself: all singleton blocks.
    pub fn torus(n: usize) -> LeviDatum {
        LeviDatum { n, blocks: (1..=n).map(|i| vec![i]).collect() }
    }

    /// The full group: a single block.
    pub fn full(n: usize) -> LeviDatum {
        LeviDatum { n, blocks: vec![(1..=n).collect()] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks in canonical order (sorted by minimum element).
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Canonical position of the block containing index i.
    pub fn block_of(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&i))
            .expect("index belongs to some block")
    }

    /// True iff every block of self is contained in a block of coarser.
    pub fn refines(&self, coarser: &LeviDatum) -> bool {
        self.n == coarser.n
            && self
                .blocks
                .iter()
                .all(|b| coarser.blocks.iter().any(|c| b.iter().all(|i| c.contains(i))))
    }
}

impl Serialize for LeviDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LeviDatum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(d)?;
        let n = blocks.iter().map(|b| b.len()).sum();
        LeviDatum::new(n, blocks).map_err(serde::de::Error::custom)
    }
}

/// A parabolic subgroup of GL(n) containing A: a Levi partition together with
/// a linear order on its blocks. Block b precedes b' exactly when the roots
/// e_i - e_j with i in b, j in b' lie in the unipotent radical N.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicDatum {
    n: usize,
    /// Blocks in parabolic order, each sorted ascending.
    blocks: Vec<Vec<usize>>,
}

impl ParabolicDatum {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<ParabolicDatum> {
        // Validate via LeviDatum, but keep the given block order.
        LeviDatum::new(n, blocks.clone())?;
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(ParabolicDatum { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks in parabolic order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn levi(&self) -> LeviDatum {
        LeviDatum::new(self.n, self.blocks.clone()).expect("validated at construction")
    }

    /// The opposite parabolic: blocks in reversed order.
    pub fn opposite(&self) -> ParabolicDatum {
        let mut blocks = self.blocks.clone();
        blocks.reverse();
        ParabolicDatum { n: self.n, blocks }
    }

    /// Position (in parabolic order) of the block containing index i.
    pub fn position_of(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&i))
            .expect("index belongs to some block")
    }

    /// Indices listed block by block in parabolic order.
    pub fn index_order(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// True iff this parabolic is a Borel (all blocks singletons).
    pub fn is_borel(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    pub fn to_borel(&self) -> Option<BorelDatum> {
        if !self.is_borel() {
            return None;
        }
        Some(BorelDatum { order: self.blocks.iter().map(|b| b[0]).collect() })
    }

    /// True iff self is contained in coarser as a parabolic subgroup:
    /// coarser's blocks are unions of consecutive blocks of self, in order.
    pub fn is_contained_in(&self, coarser: &ParabolicDatum) -> bool {
        if self.n != coarser.n {
            return false;
        }
        let mut fine = self.blocks.iter();
        for big in &coarser.blocks {
            let mut collected: Vec<usize> = Vec::with_capacity(big.len());
            while collected.len() < big.len() {
                match fine.next() {
                    Some(b) => collected.extend(b.iter().copied()),
                    None => return false,
                }
            }
            collected.sort_unstable();
            if &collected != big {
                return false;
            }
        }
        fine.next().is_none()
    }

    /// The key string used for adjacent-pair tables: compact JSON of both
    /// parabolics joined with '|'.
    pub fn pair_key(&self, other: &ParabolicDatum) -> String {
        format!(
            "{}|{}",
            serde_json::to_string(self).expect("serializable"),
            serde_json::to_string(other).expect("serializable"),
        )
    }
}

impl Serialize for ParabolicDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParabolicDatum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(d)?;
        let n = blocks.iter().map(|b| b.len()).sum();
        ParabolicDatum::new(n, blocks).map_err(serde::de::Error::custom)
    }
}

/// A Borel subgroup containing A: a permutation of {1..n}, listing the
/// indices in their order. The root e_i - e_j is positive for the Borel iff
/// i precedes j.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorelDatum {
    order: Vec<usize>,
}

impl BorelDatum {
    pub fn new(order: Vec<usize>) -> Result<BorelDatum> {
        let n = order.len();
        let mut seen = vec![false; n + 1];
        for &i in &order {
            if i == 0 || i > n || seen[i] {
                return Err(Error::InvalidDatum("order is not a permutation of 1..n".into()));
            }
            seen[i] = true;
        }
        Ok(BorelDatum { order })
    }

    /// The standard (upper triangular) Borel: order 1 < 2 < ... < n.
    pub fn standard(n: usize) -> BorelDatum {
        BorelDatum { order: (1..=n).collect() }
    }

    /// The opposite (lower triangular) Borel.
    pub fn antistandard(n: usize) -> BorelDatum {
        BorelDatum { order: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Rank of index i in the order (0-based position).
    pub fn rank(&self, i: usize) -> usize {
        self.order.iter().position(|&x| x == i).expect("index in permutation")
    }

    pub fn opposite(&self) -> BorelDatum {
        let mut order = self.order.clone();
        order.reverse();
        BorelDatum { order }
    }

    pub fn to_parabolic(&self) -> ParabolicDatum {
        ParabolicDatum { n: self.order.len(), blocks: self.order.iter().map(|&i| vec![i]).collect() }
    }

    /// Positive roots: pairs (i, j) with i preceding j.
    pub fn positive_roots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.order.len() {
            for b in a + 1..self.order.len() {
                out.push((self.order[a], self.order[b]));
            }
        }
        out
    }

    /// Inversion set relative to another Borel: roots positive for self and
    /// negative for other.
    pub fn inversions(&self, other: &BorelDatum) -> Vec<(usize, usize)> {
        self.positive_roots()
            .into_iter()
            .filter(|&(i, j)| other.rank(i) > other.rank(j))
            .collect()
    }
}

impl Serialize for BorelDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.order.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BorelDatum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let order = Vec::<usize>::deserialize(d)?;
        BorelDatum::new(order).map_err(serde::de::Error::custom)
    }
}

/// An element of the coweight quotient for a Levi with r blocks, i.e. Z^r,
/// components indexed by the Levi's canonical block order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoweightM {
    levi: LeviDatum,
    components: Vec<i64>,
}

impl CoweightM {
    pub fn new(levi: LeviDatum, components: Vec<i64>) -> Result<CoweightM> {
        if components.len() != levi.num_blocks() {
            return Err(Error::InvalidDatum("one component per block required".into()));
        }
        Ok(CoweightM { levi, components })
    }

    pub fn zero(levi: LeviDatum) -> CoweightM {
        let r = levi.num_blocks();
        CoweightM { levi, components: vec![0; r] }
    }

    pub fn levi(&self) -> &LeviDatum {
        &self.levi
    }

    pub fn components(&self) -> &[i64] {
        &self.components
    }

    pub fn sub(&self, other: &CoweightM) -> Result<CoweightM> {
        if self.levi != other.levi {
            return Err(Error::LeviMismatch);
        }
        Ok(CoweightM {
            levi: self.levi.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn add(&self, other: &CoweightM) -> Result<CoweightM> {
        if self.levi != other.levi {
            return Err(Error::LeviMismatch);
        }
        Ok(CoweightM {
            levi: self.levi.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: i64) -> CoweightM {
        CoweightM {
            levi: self.levi.clone(),
            components: self.components.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> CoweightM {
        self.scale(-1)
    }

    /// Image under the canonical surjection to the coweight quotient of a
    /// coarser Levi: sum the components of the fine blocks inside each coarse
    /// block.
    pub fn project_to(&self, coarse: &LeviDatum) -> Result<CoweightM> {
        if !self.levi.refines(coarse) {
            return Err(Error::LeviMismatch);
        }
        let mut components = vec![0i64; coarse.num_blocks()];
        for (b, v) in self.levi.blocks().iter().zip(&self.components) {
            components[coarse.block_of(b[0])] += v;
        }
        Ok(CoweightM { levi: coarse.clone(), components })
    }

    /// Image in the coweight quotient of the full group, i.e. Z.
    pub fn total(&self) -> i64 {
        self.components.iter().sum()
    }

    /// The image of a coroot e_i - e_j in this Levi's coweight quotient.
    pub fn from_coroot(levi: &LeviDatum, i: usize, j: usize) -> CoweightM {
        let mut components = vec![0i64; levi.num_blocks()];
        components[levi.block_of(i)] += 1;
        components[levi.block_of(j)] -= 1;
        CoweightM { levi: levi.clone(), components }
    }
}

/// Descriptor of an adjacent pair: the two swapped blocks and their position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjacency {
    /// Position (in the first parabolic's order) of the earlier swapped block.
    pub position: usize,
    /// Block at `position` in the first parabolic.
    pub left: Vec<usize>,
    /// Block at `position + 1` in the first parabolic.
    pub right: Vec<usize>,
}

/// Adjacency test: `Some` descriptor iff the two orders differ by transposing
/// two consecutive blocks. Errors if the Levi components differ.
pub fn adjacent(p: &ParabolicDatum, p2: &ParabolicDatum) -> Result<Option<Adjacency>> {
    if p.levi() != p2.levi() {
        return Err(Error::LeviMismatch);
    }
    let a = p.blocks();
    let b = p2.blocks();
    let r = a.len();
    let mut diff: Vec<usize> = (0..r).filter(|&k| a[k] != b[k]).collect();
    if diff.len() != 2 {
        return Ok(None);
    }
    let (lo, hi) = (diff.remove(0), diff.remove(0));
    if hi != lo + 1 || a[lo] != b[hi] || a[hi] != b[lo] {
        return Ok(None);
    }
    Ok(Some(Adjacency { position: lo, left: a[lo].clone(), right: a[hi].clone() }))
}

/// The unique parabolic Q = LU containing both members of an adjacent pair:
/// its Levi L merges the swapped blocks, and its semisimple rank exceeds the
/// common Levi's by one.
pub fn containing_parabolic(p: &ParabolicDatum, p2: &ParabolicDatum) -> Result<ParabolicDatum> {
    let adj = adjacent(p, p2)?.ok_or(Error::NotAdjacent)?;
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(p.blocks().len() - 1);
    for (k, b) in p.blocks().iter().enumerate() {
        if k == adj.position {
            let mut merged = adj.left.clone();
            merged.extend(adj.right.iter().copied());
            merged.sort_unstable();
            blocks.push(merged);
        } else if k != adj.position + 1 {
            blocks.push(b.clone());
        }
    }
    ParabolicDatum::new(p.n(), blocks)
}

/// The primitive element beta of the coweight quotient attached to an
/// adjacent pair: e_b - e_b' for the swapped blocks (b before b' in `p`).
/// Satisfies beta(p2, p) = -beta(p, p2).
pub fn beta(p: &ParabolicDatum, p2: &ParabolicDatum) -> Result<CoweightM> {
    let adj = adjacent(p, p2)?.ok_or(Error::NotAdjacent)?;
    let levi = p.levi();
    let mut components = vec![0i64; levi.num_blocks()];
    components[levi.block_of(adj.left[0])] = 1;
    components[levi.block_of(adj.right[0])] = -1;
    CoweightM::new(levi, components)
}

/// Roots of A in n ∩ n̄': ordered pairs (i, j) with i in the earlier swapped
/// block and j in the later one.
pub fn roots_between(p: &ParabolicDatum, p2: &ParabolicDatum) -> Result<Vec<(usize, usize)>> {
    let adj = adjacent(p, p2)?.ok_or(Error::NotAdjacent)?;
    let mut out = Vec::with_capacity(adj.left.len() * adj.right.len());
    for &i in &adj.left {
        for &j in &adj.right {
            out.push((i, j));
        }
    }
    Ok(out)
}

/// The positive integer m with image(alpha^vee) = m * beta in the coweight
/// quotient. For GL(n) this is always 1; the function verifies it.
pub fn m_alpha(alpha: (usize, usize), p: &ParabolicDatum, p2: &ParabolicDatum) -> Result<u32> {
    let roots = roots_between(p, p2)?;
    if !roots.contains(&alpha) {
        return Err(Error::RootNotInNNbar(alpha.0, alpha.1));
    }
    let levi = p.levi();
    let image = CoweightM::from_coroot(&levi, alpha.0, alpha.1);
    let b = beta(p, p2)?;
    assert_eq!(image, b, "GL(n): coroot image must equal beta exactly");
    Ok(1)
}

/// A minimal gallery from B to B2: a reduced chain of adjacent Borel
/// subgroups produced by repeatedly transposing the first out-of-order
/// adjacent pair (a deterministic bubble-sort reduced word). Its length is
/// the number of inversions between the two permutations.
pub fn minimal_gallery(b: &BorelDatum, b2: &BorelDatum) -> Vec<BorelDatum> {
    assert_eq!(b.n(), b2.n());
    let mut gallery = vec![b.clone()];
    let mut current = b.order().to_vec();
    loop {
        let swap = (0..current.len().saturating_sub(1))
            .find(|&k| b2.rank(current[k]) > b2.rank(current[k + 1]));
        match swap {
            None => return gallery,
            Some(k) => {
                current.swap(k, k + 1);
                gallery.push(BorelDatum { order: current.clone() });
            }
        }
    }
}

/// The crossing roots of a gallery: for each step, the unique root positive
/// for the previous Borel and negative for the next.
pub fn gallery_crossing_roots(gallery: &[BorelDatum]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(gallery.len().saturating_sub(1));
    for w in gallery.windows(2) {
        let prev = w[0].order();
        let next = w[1].order();
        let k = (0..prev.len())
            .find(|&k| prev[k] != next[k])
            .expect("adjacent Borels differ");
        debug_assert_eq!(prev[k], next[k + 1]);
        debug_assert_eq!(prev[k + 1], next[k]);
        out.push((prev[k], prev[k + 1]));
    }
    out
}

/// A random minimal gallery: at each step transpose a uniformly chosen
/// out-of-order adjacent pair. Used to check gallery-choice independence.
pub fn random_gallery(
    b: &BorelDatum,
    b2: &BorelDatum,
    rng: &mut impl rand::Rng,
) -> Vec<BorelDatum> {
    assert_eq!(b.n(), b2.n());
    let mut gallery = vec![b.clone()];
    let mut current = b.order().to_vec();
    loop {
        let swaps: Vec<usize> = (0..current.len().saturating_sub(1))
            .filter(|&k| b2.rank(current[k]) > b2.rank(current[k + 1]))
            .collect();
        if swaps.is_empty() {
            return gallery;
        }
        let k = swaps[rng.gen_range(0..swaps.len())];
        current.swap(k, k + 1);
        gallery.push(BorelDatum { order: current.clone() });
    }
}

/// The Borel obtained by refining a parabolic's block order with a linear
/// order inside every block. `inner` lists the blocks of P (in any order),
/// each as an ordered sequence of its indices.
pub fn borel_lift(p: &ParabolicDatum, inner: &[Vec<usize>]) -> Result<BorelDatum> {
    let mut order = Vec::with_capacity(p.n());
    for block in p.blocks() {
        let ordered = inner
            .iter()
            .find(|cand| {
                let mut sorted = (*cand).clone();
                sorted.sort_unstable();
                &sorted == block
            })
            .ok_or_else(|| Error::InvalidDatum(format!("no inner order given for block {block:?}")))?;
        order.extend(ordered.iter().copied());
    }
    BorelDatum::new(order)
}

/// Lift a parabolic to a Borel using ascending order inside each block.
pub fn borel_lift_ascending(p: &ParabolicDatum) -> BorelDatum {
    BorelDatum { order: p.index_order() }
}

/// All parabolic subgroups with the given Levi component: every order of the
/// blocks (r! of them), in lexicographic order of block positions.
pub fn all_parabolics(levi: &LeviDatum) -> Vec<ParabolicDatum> {
    let blocks = levi.blocks().to_vec();
    let mut out = Vec::new();
    permute(&mut Vec::new(), &blocks, &mut vec![false; blocks.len()], &mut out);
    out.into_iter()
        .map(|blocks| ParabolicDatum { n: levi.n(), blocks })
        .collect()
}

fn permute(
    acc: &mut Vec<Vec<usize>>,
    items: &[Vec<usize>],
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if acc.len() == items.len() {
        out.push(acc.clone());
        return;
    }
    for k in 0..items.len() {
        if used[k] {
            continue;
        }
        used[k] = true;
        acc.push(items[k].clone());
        permute(acc, items, used, out);
        acc.pop();
        used[k] = false;
    }
}

/// All ordered adjacent pairs in P(M).
pub fn adjacent_pairs(levi: &LeviDatum) -> Vec<(ParabolicDatum, ParabolicDatum)> {
    let all = all_parabolics(levi);
    let mut out = Vec::new();
    for p in &all {
        for p2 in &all {
            if p != p2 && adjacent(p, p2).expect("same levi").is_some() {
                out.push((p.clone(), p2.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn para(blocks: &[&[usize]]) -> ParabolicDatum {
        let n = blocks.iter().map(|b| b.len()).sum();
        ParabolicDatum::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        // M = {{1,2},{3,4}}: the two orders are adjacent
        let p = para(&[&[1, 2], &[3, 4]]);
        let q = para(&[&[3, 4], &[1, 2]]);
        let adj = adjacent(&p, &q).unwrap().unwrap();
        assert_eq!(adj.left, vec![1, 2]);
        assert_eq!(adj.right, vec![3, 4]);
        // Borels (1<2<3) vs (2<1<3): adjacent with swap (1,2)
        let b1 = para(&[&[1], &[2], &[3]]);
        let b2 = para(&[&[2], &[1], &[3]]);
        let adj = adjacent(&b1, &b2).unwrap().unwrap();
        assert_eq!((adj.left, adj.right), (vec![1], vec![2]));
        // (1<2<3) vs (3<2<1): not adjacent
        let b3 = para(&[&[3], &[2], &[1]]);
        assert!(adjacent(&b1, &b3).unwrap().is_none());
        // different Levi -> error
        let other = para(&[&[1, 3], &[2, 4]]);
        assert!(matches!(adjacent(&p, &other), Err(Error::LeviMismatch)));
    }

    #[test]
    fn beta_examples() {
        let b1 = para(&[&[1], &[2], &[3]]);
        let b2 = para(&[&[2], &[1], &[3]]);
        assert_eq!(beta(&b1, &b2).unwrap().components(), &[1, -1, 0]);
        let p = para(&[&[1, 2], &[3, 4]]);
        let q = para(&[&[3, 4], &[1, 2]]);
        assert_eq!(beta(&p, &q).unwrap().components(), &[1, -1]);
        // antisymmetry
        assert_eq!(beta(&q, &p).unwrap(), beta(&p, &q).unwrap().neg());
    }

    #[test]
    fn roots_between_examples() {
        let b1 = para(&[&[1], &[2], &[3]]);
        let b2 = para(&[&[2], &[1], &[3]]);
        assert_eq!(roots_between(&b1, &b2).unwrap(), vec![(1, 2)]);
        let p = para(&[&[1, 2], &[3, 4]]);
        let q = para(&[&[3, 4], &[1, 2]]);
        assert_eq!(
            roots_between(&p, &q).unwrap(),
            vec![(1, 3), (1, 4), (2, 3), (2, 4)]
        );
        let p3 = para(&[&[1], &[2, 3]]);
        let q3 = para(&[&[2, 3], &[1]]);
        assert_eq!(roots_between(&p3, &q3).unwrap(), vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn m_alpha_is_one() {
        let b1 = para(&[&[1], &[2], &[3]]);
        let b2 = para(&[&[2], &[1], &[3]]);
        assert_eq!(m_alpha((1, 2), &b1, &b2).unwrap(), 1);
        let p = para(&[&[1, 2], &[3, 4]]);
        let q = para(&[&[3, 4], &[1, 2]]);
        assert_eq!(m_alpha((1, 3), &p, &q).unwrap(), 1);
        assert_eq!(m_alpha((2, 4), &p, &q).unwrap(), 1);
        assert!(matches!(
            m_alpha((3, 1), &p, &q),
            Err(Error::RootNotInNNbar(3, 1))
        ));
    }

    #[test]
    fn gallery_examples() {
        let b = BorelDatum::standard(3);
        // B = B2 -> [B]
        assert_eq!(minimal_gallery(&b, &b), vec![b.clone()]);
        // (1<2<3) to (3<2<1): length 3, crossing roots are all positive roots
        let w0 = BorelDatum::antistandard(3);
        let gal = minimal_gallery(&b, &w0);
        assert_eq!(gal.len(), 4);
        let mut roots = gallery_crossing_roots(&gal);
        roots.sort_unstable();
        assert_eq!(roots, vec![(1, 2), (1, 3), (2, 3)]);
        // (1<2) to (2<1)
        let b2 = BorelDatum::standard(2);
        let gal = minimal_gallery(&b2, &b2.opposite());
        assert_eq!(gal.len(), 2);
        assert_eq!(gallery_crossing_roots(&gal), vec![(1, 2)]);
    }

    #[test]
    fn gallery_length_is_inversion_count() {
        let borels = [
            BorelDatum::new(vec![2, 3, 1, 4]).unwrap(),
            BorelDatum::new(vec![4, 1, 3, 2]).unwrap(),
            BorelDatum::standard(4),
        ];
        for a in &borels {
            for b in &borels {
                let gal = minimal_gallery(a, b);
                assert_eq!(gal.len() - 1, a.inversions(b).len());
                // crossing multiset equals the inversion set with no repeats
                let mut roots = gallery_crossing_roots(&gal);
                roots.sort_unstable();
                roots.dedup();
                assert_eq!(roots.len(), gal.len() - 1);
                let mut inv = a.inversions(b);
                inv.sort_unstable();
                assert_eq!(roots, inv);
                // symmetry of length
                assert_eq!(minimal_gallery(b, a).len(), gal.len());
            }
        }
    }

    #[test]
    fn borel_lift_examples() {
        let p = para(&[&[1, 2], &[3]]);
        let lifted = borel_lift(&p, &[vec![1, 2], vec![3]]).unwrap();
        assert_eq!(lifted.order(), &[1, 2, 3]);
        let p2 = para(&[&[3], &[1, 2]]);
        let lifted = borel_lift(&p2, &[vec![2, 1], vec![3]]).unwrap();
        assert_eq!(lifted.order(), &[3, 2, 1]);
        // a Borel lifts to itself
        let b = para(&[&[2], &[1], &[3]]);
        let lifted = borel_lift(&b, &[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(lifted.order(), &[2, 1, 3]);
    }

    #[test]
    fn parabolic_counts_and_degrees() {
        let levi = LeviDatum::new(4, vec![vec![1, 2], vec![3], vec![4]]).unwrap();
        let all = all_parabolics(&levi);
        assert_eq!(all.len(), 6); // 3!
        for p in &all {
            let neighbors = all
                .iter()
                .filter(|q| *q != p && adjacent(p, q).unwrap().is_some())
                .count();
            assert_eq!(neighbors, 2); // r - 1
        }
        // beta lies in the kernel of the projection to Lambda_G
        for (p, q) in adjacent_pairs(&levi) {
            assert_eq!(beta(&p, &q).unwrap().total(), 0);
        }
    }

    #[test]
    fn containment_and_merging() {
        let b1 = para(&[&[1], &[2], &[3]]);
        let b2 = para(&[&[2], &[1], &[3]]);
        let q = containing_parabolic(&b1, &b2).unwrap();
        assert_eq!(q.blocks(), &[vec![1, 2], vec![3]]);
        assert!(b1.is_contained_in(&q));
        assert!(b2.is_contained_in(&q));
        assert!(!para(&[&[3], &[2], &[1]]).is_contained_in(&q));
    }

    #[test]
    fn coweight_projection() {
        let fine = LeviDatum::torus(4);
        let coarse = LeviDatum::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        let mu = CoweightM::new(fine, vec![1, -2, 3, 5]).unwrap();
        let proj = mu.project_to(&coarse).unwrap();
        assert_eq!(proj.components(), &[-1, 8]);
        assert_eq!(proj.total(), mu.total());
    }
}
