//! The weight `λ = (1-2n)ω_m`, its shifts `λ_a`, and the relative BGG graph
//! on the partitions of the `k x n` box.

use num::bigint::BigUint;
use num::Zero;
use serde_json::json;

use crate::direct_images::gl_dimension;
use crate::error::{check_stable_range, Error, Result};
use crate::partitions::{enumerate, Filter, Partition};
use crate::rational::{binomial, int, Q};
use crate::weights::{fundamental_weight, RankSplit, Weight};

pub fn lambda_weight(k: usize, n: usize) -> Result<Weight> {
    check_stable_range(k, n)?;
    let split = RankSplit::new(k, n)?;
    Ok(fundamental_weight(split.m(), split)?.scale(&int(1 - 2 * n as i64)))
}

/// `λ + (-a_k, ..., -a_1 | b_1, ..., b_n)`.
pub fn lambda_a(a: &Partition) -> Result<Weight> {
    let (k, n) = (a.k(), a.n());
    let lam = lambda_weight(k, n)?;
    let shift: Vec<Q> = (1..=k)
        .map(|i| int(-(a.part(k - i + 1) as i64)))
        .chain(a.conjugate().iter().map(|&b| int(b as i64)))
        .collect();
    lam.add(&Weight::new(lam.split(), shift)?)
}

/// Dimension of the `gl(k) ⊕ gl(n)` irreducible with highest weight `μ`.
pub fn levi_q_dimension(mu: &Weight) -> Result<BigUint> {
    Ok(gl_dimension(mu.levi_part())? * gl_dimension(mu.fiber_part())?)
}

#[derive(Debug, Clone)]
pub struct RelativeBggGraph {
    pub k: usize,
    pub n: usize,
    pub nodes: Vec<(Partition, Weight)>,
    /// Index pairs `(a, a')` with `a' ` covering `a`.
    pub arrows: Vec<(usize, usize)>,
}

pub fn build_graph(k: usize, n: usize) -> Result<RelativeBggGraph> {
    let parts = enumerate(k, n, Filter::All)?;
    let nodes = parts
        .iter()
        .map(|a| Ok((a.clone(), lambda_a(a)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut arrows = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for c in a.covers() {
            let j = parts
                .binary_search(&c)
                .map_err(|_| Error::internal("cover outside the box"))?;
            arrows.push((i, j));
        }
    }
    arrows.sort_unstable();
    Ok(RelativeBggGraph {
        k,
        n,
        nodes,
        arrows,
    })
}

impl RelativeBggGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph relative_bgg {\n  rankdir=LR;\n");
        for (a, w) in &self.nodes {
            out.push_str(&format!("  \"{a}\" [label=\"{a}\\n{w}\"];\n"));
        }
        for &(i, j) in &self.arrows {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.nodes[i].0, self.nodes[j].0
            ));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "n": self.n,
            "nodes": self.nodes.iter().map(|(a, w)| json!({
                "id": a.to_string(),
                "parts": a.parts(),
                "size": a.size(),
                "lambda_a": w,
            })).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().map(|&(i, j)| json!({
                "source": self.nodes[i].0.to_string(),
                "target": self.nodes[j].0.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// `Σ_{|a|=p} dim W_{λ_a}` over the `gl(k) ⊕ gl(n)` Levi.
pub fn kostant_sum(k: usize, n: usize, p: usize) -> Result<BigUint> {
    if p > n * k {
        return Err(Error::domain(format!("p={p} exceeds nk={}", n * k)));
    }
    let mut total = BigUint::zero();
    for a in enumerate(k, n, Filter::Size(p))? {
        total += levi_q_dimension(&lambda_a(&a)?)?;
    }
    Ok(total)
}

/// `Σ_{|a|=p} dim W_{λ_a} = C(nk, p)`.
pub fn kostant_dimension_check(k: usize, n: usize, p: usize) -> Result<bool> {
    Ok(kostant_sum(k, n, p)? == binomial((n * k) as u64, p as u64))
}
