//! The k-Dirac complex graph on symmetric partitions, graded jet dimensions
//! and the first page of the column spectral sequence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::{BigInt, BigUint};
use num::{Signed, Zero};
use serde::Serialize;
use serde_json::json;

use crate::direct_images::{direct_image, levi_dimension, top_degree, DirectImage};
use crate::error::{check_stable_range, Error, Result};
use crate::partitions::{enumerate, enumerate_box, Filter, Partition};
use crate::rational::{binomial, ser_display, ser_display_seq, sym_power_dim};
use crate::weights::{RankSplit, Weight};

/// `Full` counts `S^i g_1 ⊗ S^j g_2` with `i + 2j = ℓ`; `Sym` only `S^ℓ g_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Full,
    Sym,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Full, Variant::Sym];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::Sym => "sym",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "sym" => Ok(Variant::Sym),
            _ => Err(Error::domain(format!(
                "unknown variant {s:?} (expected full or sym)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexNode {
    pub slot: usize,
    pub partition: Partition,
    pub mu: Weight,
    pub degree: usize,
    #[serde(serialize_with = "ser_display")]
    pub dim: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComplexArrow {
    pub source: usize,
    pub target: usize,
    pub order: usize,
}

#[derive(Debug, Clone)]
pub struct DiracComplex {
    pub k: usize,
    pub n: usize,
    /// Sorted by slot, then lexicographically by partition.
    pub nodes: Vec<ComplexNode>,
    pub arrows: Vec<ComplexArrow>,
}

/// `k(k+1)/2`, the largest slot.
pub fn max_slot(k: usize) -> usize {
    k * (k + 1) / 2
}

pub fn build_complex(k: usize, n: usize) -> Result<DiracComplex> {
    check_stable_range(k, n)?;
    let mut sym = enumerate(k, n, Filter::Symmetric)?;
    sym.sort_by(|a, b| (a.r(), a).cmp(&(b.r(), b)));
    let nodes = sym
        .into_iter()
        .map(|a| match direct_image(&a)? {
            DirectImage::NonZero { mu, degree } => Ok(ComplexNode {
                slot: a.r(),
                dim: levi_dimension(&mu)?,
                partition: a,
                mu,
                degree,
            }),
            DirectImage::Vanishing => Err(Error::internal(format!("symmetric {a} has no image"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut arrows = Vec::new();
    for (i, a) in nodes.iter().enumerate() {
        for (j, b) in nodes.iter().enumerate() {
            if b.slot == a.slot + 1 && a.partition.lt(&b.partition) {
                let order = b.partition.size() - a.partition.size();
                if !(1..=2).contains(&order) {
                    return Err(Error::internal(format!(
                        "arrow {} -> {} has size gap {order}",
                        a.partition, b.partition
                    )));
                }
                arrows.push(ComplexArrow {
                    source: i,
                    target: j,
                    order,
                });
            }
        }
    }
    Ok(DiracComplex {
        k,
        n,
        nodes,
        arrows,
    })
}

/// Partitions strictly between `a` and `b` in their common box.
pub fn intermediates(a: &Partition, b: &Partition) -> Vec<Partition> {
    enumerate_box(a.k(), a.n())
        .into_iter()
        .filter(|c| a.lt(c) && c.lt(b))
        .collect()
}

impl DiracComplex {
    pub fn slot(&self, j: usize) -> impl Iterator<Item = &ComplexNode> {
        self.nodes.iter().filter(move |node| node.slot == j)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dirac_complex {\n  rankdir=LR;\n");
        for node in &self.nodes {
            out.push_str(&format!(
                "  \"{}\" [label=\"{}\\nmu={}\\ndeg={} dim={}\"];\n",
                node.partition, node.partition, node.mu, node.degree, node.dim
            ));
        }
        for arrow in &self.arrows {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"order={}\"];\n",
                self.nodes[arrow.source].partition, self.nodes[arrow.target].partition, arrow.order
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "n": self.n,
            "nodes": self.nodes.iter().map(|node| json!({
                "id": node.partition.to_string(),
                "slot": node.slot,
                "q": node.partition.q(),
                "mu": node.mu,
                "degree": node.degree,
                "dim": node.dim.to_string(),
            })).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|arrow| json!({
                "source": self.nodes[arrow.source].partition.to_string(),
                "target": self.nodes[arrow.target].partition.to_string(),
                "order": arrow.order,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Dimension of the weighted-degree-`ℓ` piece of the jet algebra, without the `V_μ` factor.
pub fn jet_factor(split: RankSplit, l: i64, variant: Variant) -> BigUint {
    if l < 0 {
        return BigUint::zero();
    }
    let l = l as u64;
    let g1 = 2 * (split.n * split.k) as u64;
    let g2 = binomial(split.k as u64, 2);
    let g2: u64 = g2.try_into().expect("small");
    match variant {
        Variant::Sym => sym_power_dim(g1, l),
        Variant::Full => (0..=l / 2)
            .map(|j| sym_power_dim(g1, l - 2 * j) * sym_power_dim(g2, j))
            .sum(),
    }
}

/// `dim gr^ℓ V_μ`; zero for negative `ℓ`.
pub fn graded_dim(mu: &Weight, l: i64, variant: Variant) -> Result<BigUint> {
    let dim = levi_dimension(mu)?;
    Ok(jet_factor(mu.split(), l, variant) * dim)
}

/// Entry `j` is `Σ_{a ∈ S^k_j} dim gr^{r-j-q(a)} V_{μ_a}`.
pub fn jet_sequence(k: usize, n: usize, r: usize, variant: Variant) -> Result<Vec<BigUint>> {
    let cx = build_complex(k, n)?;
    let split = RankSplit::new(k, n)?;
    let mut seq = vec![BigUint::zero(); max_slot(k) + 1];
    for node in &cx.nodes {
        let l = r as i64 - node.slot as i64 - node.partition.q() as i64;
        seq[node.slot] += jet_factor(split, l, variant) * &node.dim;
    }
    Ok(seq)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimTable {
    pub label: String,
    pub k: usize,
    pub n: usize,
    pub r: usize,
    pub variant: Variant,
    pub rows: usize,
    pub cols: usize,
    #[serde(serialize_with = "serialize_entries")]
    pub entries: BTreeMap<(usize, usize), BigUint>,
}

fn serialize_entries<S: serde::Serializer>(
    entries: &BTreeMap<(usize, usize), BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(entries.len()))?;
    for ((p, q), v) in entries {
        seq.serialize_element(&json!({"p": p, "q": q, "value": v.to_string()}))?;
    }
    seq.end()
}

impl DimTable {
    /// Entry at column `p`, row `q`.
    pub fn get(&self, p: usize, q: usize) -> BigUint {
        self.entries.get(&(p, q)).cloned().unwrap_or_default()
    }

    /// `Σ (-1)^{p+q} entry(p, q)`.
    pub fn euler(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(&(p, q), v)| {
                let v = BigInt::from(v.clone());
                if (p + q) % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }

    /// Rows `q` descending, columns `p` ascending.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q\\p");
        for p in 0..self.cols {
            out.push_str(&format!(",{p}"));
        }
        out.push('\n');
        for q in (0..self.rows).rev() {
            out.push_str(&q.to_string());
            for p in 0..self.cols {
                out.push_str(&format!(",{}", self.get(p, q)));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("tables always serialize")
    }
}

/// Entry `(p, q)` is `Σ dim gr^{r-p} V_{μ_a}` over symmetric `a` with `|a| = p`, `ℓ(a) = q`.
pub fn e1_page(k: usize, n: usize, r: usize, variant: Variant) -> Result<DimTable> {
    let cx = build_complex(k, n)?;
    let split = RankSplit::new(k, n)?;
    let mut entries = BTreeMap::new();
    for node in &cx.nodes {
        let p = node.partition.size();
        let v = jet_factor(split, r as i64 - p as i64, variant) * &node.dim;
        if !v.is_zero() {
            *entries
                .entry((p, node.degree))
                .or_insert_with(BigUint::zero) += v;
        }
    }
    Ok(DimTable {
        label: format!("E1 page k={k} n={n} r={r} {variant}"),
        k,
        n,
        r,
        variant,
        rows: top_degree(n) + 1,
        cols: k * k + 1,
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    #[serde(serialize_with = "ser_display_seq")]
    pub ranks: Vec<BigInt>,
    #[serde(serialize_with = "ser_display")]
    pub kernel0: BigInt,
    pub ok: bool,
}

/// Ranks forced by exactness at positions `1..N` and a surjective last map:
/// `rank_N = 0`, `rank_j = V_{j+1} - rank_{j+1}`.
pub fn rank_feasibility(seq: &[BigUint]) -> RankReport {
    let v: Vec<BigInt> = seq.iter().map(|x| BigInt::from(x.clone())).collect();
    if v.is_empty() {
        return RankReport {
            ranks: Vec::new(),
            kernel0: BigInt::zero(),
            ok: true,
        };
    }
    let last = v.len() - 1;
    let mut ranks = vec![BigInt::zero(); v.len()];
    for j in (0..last).rev() {
        ranks[j] = &v[j + 1] - &ranks[j + 1];
    }
    let zero = BigInt::zero();
    let ok_ranks = ranks.iter().enumerate().all(|(j, rank)| {
        let next = v.get(j + 1).unwrap_or(&zero);
        !rank.is_negative() && rank <= &v[j] && rank <= next
    });
    let kernel0 = &v[0] - &ranks[0];
    let ok = ok_ranks && !kernel0.is_negative();
    RankReport { ranks, kernel0, ok }
}
