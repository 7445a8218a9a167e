//! Signed permutations as elements of `W(D_m)` and its parabolic subgroups.
//!
//! Convention: `w ε_j = σ_j ε_{w(j)}`, so `(wλ)_{w(j)} = σ_j λ_j`, and
//! products compose as functions. Elements of `S_m` have all signs `+1`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::weights::Weight;

/// Largest group the exhaustive routines will enumerate (`|S_7|`).
pub const GROUP_LIMIT: usize = 5040;

#[derive(Debug, Clone)]
pub struct WeylElement {
    images: Vec<usize>,
    signs: Vec<i8>,
    word: Option<Vec<usize>>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images && self.signs == other.signs
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
        self.signs.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.images, &self.signs).cmp(&(&other.images, &other.signs))
    }
}

/// Type-D length: positive roots `ε_a ± ε_b` (a < b) sent to negative roots.
fn type_d_length(images: &[usize], signs: &[i8]) -> usize {
    // x ε_p + y ε_q is positive iff the coefficient at min(p, q) is +1
    let positive = |p: usize, x: i8, q: usize, y: i8| if p < q { x > 0 } else { y > 0 };
    let m = images.len();
    let mut count = 0;
    for a in 0..m {
        for b in a + 1..m {
            let (p, x) = (images[a], signs[a]);
            let (q, y) = (images[b], signs[b]);
            if !positive(p, x, q, -y) {
                count += 1;
            }
            if !positive(p, x, q, y) {
                count += 1;
            }
        }
    }
    count
}

impl WeylElement {
    /// Builds an element from 1-based images and signs.
    pub fn new(images: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let m = images.len();
        if signs.len() != m {
            return Err(Error::domain("images and signs differ in length"));
        }
        let mut seen = vec![false; m + 1];
        for &i in &images {
            if i == 0 || i > m || seen[i] {
                return Err(Error::domain(format!(
                    "{images:?} is not a permutation of 1..={m}"
                )));
            }
            seen[i] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::domain("signs must be ±1"));
        }
        if signs.iter().filter(|&&s| s < 0).count() % 2 != 0 {
            return Err(Error::domain("odd number of sign changes is not in W(D_m)"));
        }
        let length = type_d_length(&images, &signs);
        Ok(WeylElement {
            images,
            signs,
            word: None,
            length,
        })
    }

    pub fn from_permutation(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        Self::new(images, vec![1; m])
    }

    pub fn identity(m: usize) -> Self {
        WeylElement {
            images: (1..=m).collect(),
            signs: vec![1; m],
            word: Some(Vec::new()),
            length: 0,
        }
    }

    /// The simple reflection `s_i` of `D_m`.
    pub fn simple(i: usize, m: usize) -> Result<Self> {
        if m < 2 || i == 0 || i > m {
            return Err(Error::domain(format!(
                "simple reflection s_{i} undefined for m={m}"
            )));
        }
        let mut images: Vec<usize> = (1..=m).collect();
        let mut signs = vec![1i8; m];
        images.swap(i - 1, if i < m { i } else { m - 2 });
        if i == m {
            signs[m - 2] = -1;
            signs[m - 1] = -1;
        }
        Ok(WeylElement {
            images,
            signs,
            word: Some(vec![i]),
            length: 1,
        })
    }

    /// Product `s_{i_1} s_{i_2} ...` of simple reflections.
    pub fn from_word(word: &[usize], m: usize) -> Result<Self> {
        let mut w = Self::identity(m);
        for &i in word {
            w = w.mul(&Self::simple(i, m)?)?;
        }
        Ok(w)
    }

    /// Reflection in the root `ε_i - ε_j` (`plus = false`) or `ε_i + ε_j`.
    pub fn reflection(i: usize, j: usize, plus: bool, m: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > m || j > m || i == j {
            return Err(Error::domain(format!("no root ε_{i}±ε_{j} for m={m}")));
        }
        let mut images: Vec<usize> = (1..=m).collect();
        let mut signs = vec![1i8; m];
        images.swap(i - 1, j - 1);
        if plus {
            signs[i - 1] = -1;
            signs[j - 1] = -1;
        }
        Self::new(images, signs)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn word(&self) -> Option<&[usize]> {
        self.word.as_deref()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// `w(j)` for 1-based `j`, ignoring the sign.
    pub fn image(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn is_permutation(&self) -> bool {
        self.signs.iter().all(|&s| s > 0)
    }

    /// Function composition `self ∘ other`; words concatenate when both are known.
    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.rank() != other.rank() {
            return Err(Error::domain("rank mismatch in product"));
        }
        let images: Vec<usize> = other.images.iter().map(|&j| self.images[j - 1]).collect();
        let signs: Vec<i8> = other
            .images
            .iter()
            .zip(&other.signs)
            .map(|(&j, &s)| s * self.signs[j - 1])
            .collect();
        let length = type_d_length(&images, &signs);
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) if a.len() + b.len() == length => {
                Some(a.iter().chain(b).copied().collect())
            }
            _ => None,
        };
        Ok(WeylElement {
            images,
            signs,
            word,
            length,
        })
    }

    pub fn inverse(&self) -> WeylElement {
        let m = self.rank();
        let mut images = vec![0; m];
        let mut signs = vec![1; m];
        for j in 0..m {
            images[self.images[j] - 1] = j + 1;
            signs[self.images[j] - 1] = self.signs[j];
        }
        let word = self
            .word
            .as_ref()
            .map(|w| w.iter().rev().copied().collect());
        WeylElement {
            images,
            signs,
            word,
            length: self.length,
        }
    }

    /// Linear action on a weight: `(wλ)_{w(j)} = σ_j λ_j`.
    pub fn act(&self, lambda: &Weight) -> Result<Weight> {
        if lambda.m() != self.rank() {
            return Err(Error::domain(format!(
                "element of rank {} cannot act on a weight of rank {}",
                self.rank(),
                lambda.m()
            )));
        }
        let src = lambda.coords();
        let mut coords = src.to_vec();
        for j in 0..self.rank() {
            let v = &src[j];
            coords[self.images[j] - 1] = if self.signs[j] > 0 {
                v.clone()
            } else {
                -v.clone()
            };
        }
        Weight::new(lambda.split(), coords)
    }

    /// A reduced word, computed by descent if none is stored.
    pub fn reduced_word(&self) -> Vec<usize> {
        if let Some(w) = &self.word {
            return w.clone();
        }
        let m = self.rank();
        let mut cur = self.clone();
        let mut rev = Vec::new();
        while cur.length > 0 {
            let i = (1..=m)
                .find(|&i| {
                    let s = WeylElement::simple(i, m).expect("valid index");
                    cur.mul(&s).expect("same rank").length < cur.length
                })
                .expect("nonidentity elements have a right descent");
            rev.push(i);
            cur = cur
                .mul(&WeylElement::simple(i, m).expect("valid index"))
                .expect("same rank");
        }
        rev.reverse();
        rev
    }

    /// One-line notation such as `[2,-1,3,4]`.
    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self
            .images
            .iter()
            .zip(&self.signs)
            .map(|(&i, &s)| {
                if s > 0 {
                    i.to_string()
                } else {
                    format!("-{i}")
                }
            })
            .collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

/// Breadth-first closure of the simple reflections `gens` in `W(D_m)`.
/// Every element carries a reduced word.
pub fn generate_group(gens: &[usize], m: usize, limit: usize) -> Result<Vec<WeylElement>> {
    let simples = gens
        .iter()
        .map(|&i| WeylElement::simple(i, m))
        .collect::<Result<Vec<_>>>()?;
    let id = WeylElement::identity(m);
    let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for s in &simples {
            let mut next = w.mul(s)?;
            if seen.contains(&next) {
                continue;
            }
            if next.word.is_none() {
                next.word = Some(next.reduced_word());
            }
            if out.len() >= limit {
                return Err(Error::Capacity {
                    what: format!("group generated by {gens:?} in rank {m}"),
                    limit,
                });
            }
            seen.insert(next.clone());
            out.push(next.clone());
            queue.push_back(next);
        }
    }
    Ok(out)
}

/// Canonical key of the right coset `(S_k × S_n) w` in `S_m`: the sorted set `w⁻¹{1..k}`.
pub fn coset_key(w: &WeylElement, k: usize) -> Vec<usize> {
    let inv = w.inverse();
    let mut key: Vec<usize> = (1..=k).map(|i| inv.image(i)).collect();
    key.sort_unstable();
    key
}

/// Minimal-length representatives of the right cosets `H w` of the subgroup
/// generated by `subgroup_gens` inside the group generated by `group_gens`.
/// Sorted by one-line notation.
pub fn minimal_coset_reps(
    subgroup_gens: &[usize],
    group_gens: &[usize],
    m: usize,
) -> Result<Vec<WeylElement>> {
    if let Some(g) = subgroup_gens.iter().find(|g| !group_gens.contains(g)) {
        return Err(Error::domain(format!(
            "subgroup generator s_{g} is not a group generator"
        )));
    }
    let group = generate_group(group_gens, m, GROUP_LIMIT)?;
    let sub = generate_group(subgroup_gens, m, GROUP_LIMIT)?;
    let mut assigned: HashSet<WeylElement> = HashSet::with_capacity(group.len());
    let mut reps = Vec::new();
    for g in &group {
        if assigned.contains(g) {
            continue;
        }
        let coset = sub.iter().map(|h| h.mul(g)).collect::<Result<Vec<_>>>()?;
        let min_len = coset
            .iter()
            .map(|x| x.length)
            .min()
            .expect("cosets are nonempty");
        let mut minimal: Vec<&WeylElement> = coset.iter().filter(|x| x.length == min_len).collect();
        if minimal.len() != 1 {
            return Err(Error::internal(format!(
                "coset of {g} has {} minimal elements",
                minimal.len()
            )));
        }
        let rep = minimal.pop().expect("one element");
        let mut rep = group
            .iter()
            .find(|x| *x == rep)
            .cloned()
            .ok_or_else(|| Error::internal("coset element outside the group"))?;
        if rep.word.is_none() {
            rep.word = Some(rep.reduced_word());
        }
        assigned.extend(coset);
        reps.push(rep);
    }
    reps.sort();
    Ok(reps)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseEdge {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct HasseGraph {
    pub nodes: Vec<WeylElement>,
    pub edges: Vec<HasseEdge>,
}

/// Bruhat covers `w -> w t` inside the node set, for reflections `t` with
/// `ℓ(w t) = ℓ(w) + 1`. Edges are labelled by the root of `t`.
pub fn bruhat_covers(elts: &[WeylElement]) -> Result<HasseGraph> {
    let nodes = elts.to_vec();
    let index: HashMap<&WeylElement, usize> =
        nodes.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    if let Some(first) = nodes.first() {
        let m = first.rank();
        let mut reflections = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                reflections.push((
                    WeylElement::reflection(i, j, false, m)?,
                    format!("e{i}-e{j}"),
                ));
                reflections.push((
                    WeylElement::reflection(i, j, true, m)?,
                    format!("e{i}+e{j}"),
                ));
            }
        }
        for (src, w) in nodes.iter().enumerate() {
            for (t, label) in &reflections {
                let wt = w.mul(t)?;
                if wt.length != w.length + 1 {
                    continue;
                }
                if let Some(&target) = index.get(&wt) {
                    edges.push(HasseEdge {
                        source: src,
                        target,
                        label: label.clone(),
                    });
                }
            }
        }
    }
    edges.sort_by_key(|e| (e.source, e.target));
    Ok(HasseGraph { nodes, edges })
}

impl HasseGraph {
    /// Reflexive-transitive closure of the edges: `le(i, j)` iff node `j` is above node `i`.
    pub fn order(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut succ = vec![Vec::new(); n];
        for e in &self.edges {
            succ[e.source].push(e.target);
        }
        (0..n)
            .map(|start| {
                let mut seen = vec![false; n];
                let mut stack = vec![start];
                seen[start] = true;
                while let Some(v) = stack.pop() {
                    for &t in &succ[v] {
                        if !seen[t] {
                            seen[t] = true;
                            stack.push(t);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        // edges raise length by one, but check explicitly
        let order = self.order();
        self.edges.iter().all(|e| !order[e.target][e.source])
    }

    pub fn to_dot(&self, label: impl Fn(&WeylElement) -> String) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=LR;\n");
        for w in &self.nodes {
            out.push_str(&format!(
                "  \"{}\" [label=\"{}\"];\n",
                w.one_line(),
                label(w)
            ));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.nodes[e.source].one_line(),
                self.nodes[e.target].one_line(),
                e.label
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "nodes": self.nodes.iter().map(|w| json!({
                "id": w.one_line(),
                "length": w.length(),
                "word": w.reduced_word(),
            })).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{rho, simple_reflection, RankSplit};

    #[test]
    fn simple_reflections_match_weight_action() {
        let split = RankSplit::new(2, 3).unwrap();
        let r = rho(split).unwrap();
        for i in 1..=5 {
            let s = WeylElement::simple(i, 5).unwrap();
            assert_eq!(s.act(&r).unwrap(), simple_reflection(i, &r).unwrap());
            assert_eq!(s.mul(&s).unwrap(), WeylElement::identity(5));
            assert_eq!(s.length(), 1);
        }
    }

    #[test]
    fn lengths_of_small_elements() {
        assert_eq!(WeylElement::identity(4).length(), 0);
        let w = WeylElement::from_permutation(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(w.length(), 6);
        let longest = WeylElement::new(vec![1, 2, 3, 4], vec![-1, -1, -1, -1]).unwrap();
        assert_eq!(longest.length(), 12);
        assert!(WeylElement::new(vec![1, 2], vec![-1, 1]).is_err());
        assert!(WeylElement::from_permutation(vec![1, 1]).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(
            generate_group(&[1, 2, 3], 4, GROUP_LIMIT).unwrap().len(),
            24
        );
        assert_eq!(
            generate_group(&[1, 2, 3, 4], 4, GROUP_LIMIT).unwrap().len(),
            192
        );
        assert_eq!(generate_group(&[3, 4], 4, GROUP_LIMIT).unwrap().len(), 4);
        let err = generate_group(&[1, 2, 3, 4, 5, 6, 7], 8, GROUP_LIMIT).unwrap_err();
        assert!(matches!(
            err,
            Error::Capacity {
                limit: GROUP_LIMIT,
                ..
            }
        ));
    }

    #[test]
    fn stored_words_are_reduced_and_correct() {
        for w in generate_group(&[1, 2, 3, 4], 4, GROUP_LIMIT).unwrap() {
            let word = w.word().unwrap().to_vec();
            assert_eq!(word.len(), w.length());
            assert_eq!(WeylElement::from_word(&word, 4).unwrap(), w);
            assert_eq!(w.mul(&w.inverse()).unwrap(), WeylElement::identity(4));
        }
    }

    #[test]
    fn coset_reps_trivial_and_2x2() {
        let reps = minimal_coset_reps(&[1, 2, 3], &[1, 2, 3], 4).unwrap();
        assert_eq!(reps, vec![WeylElement::identity(4)]);
        let reps = minimal_coset_reps(&[1, 3], &[1, 2, 3], 4).unwrap();
        assert_eq!(reps.len(), 6);
        let mut lengths: Vec<usize> = reps.iter().map(|w| w.length()).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![0, 1, 2, 2, 3, 4]);
        for w in &reps {
            for s in [1, 3] {
                let sw = WeylElement::simple(s, 4).unwrap().mul(w).unwrap();
                assert!(sw.length() > w.length());
            }
        }
        assert!(minimal_coset_reps(&[4], &[1, 2, 3], 4).is_err());
    }

    #[test]
    fn covers_of_2x2_quotient() {
        let reps = minimal_coset_reps(&[1, 3], &[1, 2, 3], 4).unwrap();
        let g = bruhat_covers(&reps).unwrap();
        assert_eq!(g.edges.len(), 6);
        assert!(g.is_acyclic());
        for e in &g.edges {
            assert_eq!(g.nodes[e.target].length(), g.nodes[e.source].length() + 1);
        }
        let single = bruhat_covers(&reps[..1]).unwrap();
        assert!(single.edges.is_empty());
    }

    #[test]
    fn full_d4_bruhat_graph_is_graded() {
        let all = generate_group(&[1, 2, 3, 4], 4, GROUP_LIMIT).unwrap();
        let g = bruhat_covers(&all).unwrap();
        assert!(g.is_acyclic());
        let order = g.order();
        let id = all.iter().position(|w| w.length() == 0).unwrap();
        assert!(order[id].iter().all(|&b| b));
    }

    #[test]
    fn coset_key_is_constant_on_cosets() {
        let sub = generate_group(&[1, 3, 4], 5, GROUP_LIMIT).unwrap();
        let g = WeylElement::from_word(&[2, 3, 1], 5).unwrap();
        let key = coset_key(&g, 2);
        for h in &sub {
            assert_eq!(coset_key(&h.mul(&g).unwrap(), 2), key);
        }
    }

    #[test]
    fn dot_and_json_render() {
        let reps = minimal_coset_reps(&[1, 3], &[1, 2, 3], 4).unwrap();
        let g = bruhat_covers(&reps).unwrap();
        let dot = g.to_dot(|w| w.one_line());
        assert!(dot.starts_with("digraph hasse {"));
        assert_eq!(dot.matches("->").count(), 6);
        let js = g.to_json();
        assert_eq!(js["nodes"].as_array().unwrap().len(), 6);
    }
}
