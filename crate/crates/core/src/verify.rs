//! Verification suites: exhaustive checks of the combinatorial identities
//! at a fixed box size, reporting every failing case.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use serde::Serialize;

use crate::cohomology_oracle::{cauchy_expected, cauchy_total, euler_identity_check};
use crate::dirac_complex::{build_complex, intermediates, jet_sequence, rank_feasibility, Variant};
use crate::direct_images::{
    direct_image, direct_image_bruteforce, levi_dimension, top_degree, DirectImage,
};
use crate::error::{check_stable_range, Error, Result};
use crate::partitions::{enumerate, is_k_balanced, Filter};
use crate::rational::{binomial, int};
use crate::relative_bgg::{kostant_sum, lambda_a};
use crate::weights::{is_dominant, rho, ParabolicFlavor, RankSplit, Weight};
use crate::weyl::{bruhat_covers, minimal_coset_reps};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Bijection,
    Balanced,
    Length,
    RhoShift,
    Kostant,
    Images,
    Structure,
    Ranks,
    Euler,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Bijection,
        Suite::Balanced,
        Suite::Length,
        Suite::RhoShift,
        Suite::Kostant,
        Suite::Images,
        Suite::Structure,
        Suite::Ranks,
        Suite::Euler,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Balanced => "balanced",
            Suite::Length => "length",
            Suite::RhoShift => "rho-shift",
            Suite::Kostant => "kostant",
            Suite::Images => "images",
            Suite::Structure => "structure",
            Suite::Ranks => "ranks",
            Suite::Euler => "euler",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub k: usize,
    pub n: usize,
    pub cases: usize,
    pub summary: String,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// `pass <suite> k=.. n=..: <summary>` or the first counterexample.
    pub fn line(&self) -> String {
        if self.ok() {
            format!(
                "pass {} k={} n={}: {}",
                self.suite, self.k, self.n, self.summary
            )
        } else {
            format!(
                "FAIL {} k={} n={}: {} of {} cases failed; first: {}",
                self.suite,
                self.k,
                self.n,
                self.failures.len(),
                self.cases,
                self.failures[0]
            )
        }
    }
}

struct Collector {
    cases: usize,
    failures: Vec<String>,
}

impl Collector {
    fn new() -> Self {
        Collector {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn finish(self, suite: Suite, k: usize, n: usize, summary: String) -> SuiteReport {
        SuiteReport {
            suite,
            k,
            n,
            cases: self.cases,
            summary,
            failures: self.failures,
        }
    }
}

pub fn run_suite(suite: Suite, k: usize, n: usize, rmax: usize) -> Result<SuiteReport> {
    check_stable_range(k, n)?;
    match suite {
        Suite::Bijection => bijection(k, n),
        Suite::Balanced => balanced(k, n),
        Suite::Length => length(k, n),
        Suite::RhoShift => rho_shift(k, n),
        Suite::Kostant => kostant(k, n),
        Suite::Images => images(k, n),
        Suite::Structure => structure(k, n),
        Suite::Ranks => ranks(k, n, rmax),
        Suite::Euler => euler(k, n, rmax),
    }
}

pub fn run_all(k: usize, n: usize, rmax: usize) -> Result<Vec<SuiteReport>> {
    Suite::ALL
        .iter()
        .map(|&s| run_suite(s, k, n, rmax))
        .collect()
}

/// `{w_a}` against brute-force coset representatives, with order isomorphism.
fn bijection(k: usize, n: usize) -> Result<SuiteReport> {
    let split = RankSplit::new(k, n)?;
    let sub = ParabolicFlavor::Q.levi_generators(split);
    let group = ParabolicFlavor::R.levi_generators(split);
    let reps = minimal_coset_reps(&sub, &group, split.m())?;
    let parts = enumerate(k, n, Filter::All)?;
    let mut c = Collector::new();
    let index: HashMap<_, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let mut image = Vec::with_capacity(parts.len());
    for a in &parts {
        let w = a.weyl_element();
        let hit = index.get(&w).copied();
        c.check(hit.is_some(), || {
            format!("w_a for {a} = {w} is not a minimal coset representative")
        });
        image.push(hit);
    }
    c.check(reps.len() == parts.len(), || {
        format!(
            "{} representatives vs {} partitions",
            reps.len(),
            parts.len()
        )
    });
    let mut distinct = image.iter().flatten().copied().collect::<Vec<_>>();
    distinct.sort_unstable();
    distinct.dedup();
    c.check(distinct.len() == parts.len(), || {
        "a -> w_a is not injective".to_string()
    });

    let graph = bruhat_covers(&reps)?;
    let order = graph.order();
    let mut covers = 0;
    for (i, a) in parts.iter().enumerate() {
        covers += a.covers().len();
        for (j, b) in parts.iter().enumerate() {
            if let (Some(x), Some(y)) = (image[i], image[j]) {
                c.check(a.le(b) == order[x][y], || {
                    format!(
                        "{a} ≤ {b} is {} but Bruhat order says {}",
                        a.le(b),
                        order[x][y]
                    )
                });
            }
        }
    }
    c.check(graph.edges.len() == covers, || {
        format!(
            "{} Bruhat covers vs {covers} partition covers",
            graph.edges.len()
        )
    });
    let summary = format!(
        "{} cosets matched, {} covers",
        reps.len(),
        graph.edges.len()
    );
    Ok(c.finish(Suite::Bijection, k, n, summary))
}

fn balanced(k: usize, n: usize) -> Result<SuiteReport> {
    let mut c = Collector::new();
    let parts = enumerate(k, n, Filter::All)?;
    for a in &parts {
        let bal = is_k_balanced(&a.weyl_element(), k);
        c.check(bal == a.is_symmetric(), || {
            format!("{a}: k-balanced={bal}, symmetric={}", a.is_symmetric())
        });
    }
    let sym = parts.iter().filter(|a| a.is_symmetric()).count();
    Ok(c.finish(
        Suite::Balanced,
        k,
        n,
        format!("{} partitions, {sym} symmetric", parts.len()),
    ))
}

fn length(k: usize, n: usize) -> Result<SuiteReport> {
    let mut c = Collector::new();
    let parts = enumerate(k, n, Filter::All)?;
    for a in &parts {
        let l = a.weyl_element().length();
        c.check(l == a.size(), || {
            format!("{a}: length {l} but |a| = {}", a.size())
        });
    }
    Ok(c.finish(Suite::Length, k, n, format!("{} partitions", parts.len())))
}

/// Permutation values of `w_a`, the shift of `ρ`, and `Q`-dominance of `λ_a`.
fn rho_shift(k: usize, n: usize) -> Result<SuiteReport> {
    let mut c = Collector::new();
    let split = RankSplit::new(k, n)?;
    let r = rho(split)?;
    let parts = enumerate(k, n, Filter::All)?;
    for a in &parts {
        let w = a.weyl_element();
        let b = a.conjugate();
        for i in 1..=k {
            let at = k - i + 1 + a.part(i);
            c.check(w.image(at) == k - i + 1, || {
                format!("{a}: w({at}) = {} ≠ {}", w.image(at), k - i + 1)
            });
        }
        for j in 1..=n {
            let at = k + j - b[j - 1];
            c.check(w.image(at) == k + j, || {
                format!("{a}: w({at}) = {} ≠ {}", w.image(at), k + j)
            });
        }
        let mut slots: Vec<usize> = (1..=k)
            .map(|i| k - i + 1 + a.part(i))
            .chain((1..=n).map(|j| k + j - b[j - 1]))
            .collect();
        slots.sort_unstable();
        c.check(slots == (1..=k + n).collect::<Vec<_>>(), || {
            format!("{a}: slots {slots:?} do not tile 1..m")
        });

        let shift: Vec<_> = (1..=k)
            .map(|i| int(-(a.part(k - i + 1) as i64)))
            .chain(b.iter().map(|&x| int(x as i64)))
            .collect();
        let expect = r.add(&Weight::new(split, shift)?)?;
        let got = w.act(&r)?;
        c.check(got == expect, || {
            format!("{a}: w_a ρ = {got}, expected {expect}")
        });

        let la = lambda_a(a)?;
        c.check(is_dominant(&la, ParabolicFlavor::Q)?, || {
            format!("{a}: λ_a = {la} is not Q-dominant")
        });
    }
    Ok(c.finish(Suite::RhoShift, k, n, format!("{} partitions", parts.len())))
}

/// Levi dimensions over `|a| = p` against `C(nk, p)`, and Cauchy totals for `r ≤ 10`.
fn kostant(k: usize, n: usize) -> Result<SuiteReport> {
    let mut c = Collector::new();
    let nk = n * k;
    let mut total = BigUint::from(0u32);
    for p in 0..=nk {
        let got = kostant_sum(k, n, p)?;
        let want = binomial(nk as u64, p as u64);
        c.check(got == want, || {
            format!("p={p}: Σ dim = {got}, C({nk},{p}) = {want}")
        });
        total += got;
    }
    let all = BigUint::from(1u32) << nk;
    c.check(total == all, || format!("Σ_p = {total} ≠ 2^{nk}"));
    for r in 0..=10 {
        let got = cauchy_total(r, k, n)?;
        let want = cauchy_expected(r, k, n);
        c.check(got == want, || {
            format!("r={r}: Cauchy total {got} ≠ {want}")
        });
    }
    Ok(c.finish(Suite::Kostant, k, n, format!("p ≤ {nk}, Cauchy r ≤ 10")))
}

/// Closed-form direct images against the `W(D_n)` orbit search.
fn images(k: usize, n: usize) -> Result<SuiteReport> {
    let mut c = Collector::new();
    let parts = enumerate(k, n, Filter::All)?;
    let top = top_degree(n);
    let mut nonzero = 0;
    for a in &parts {
        let closed = direct_image(a)?;
        let brute = direct_image_bruteforce(a)?;
        c.check(closed == brute, || {
            format!("{a}: closed form {closed:?} vs orbit search {brute:?}")
        });
        if let DirectImage::NonZero { mu, degree } = &closed {
            nonzero += 1;
            c.check(is_dominant(mu, ParabolicFlavor::P)?, || {
                format!("{a}: μ_a = {mu} not P-dominant")
            });
            c.check(*degree <= top, || format!("{a}: degree {degree} > C(n,2)"));
            c.check(levi_dimension(mu).is_ok(), || {
                format!("{a}: no dimension for {mu}")
            });
        }
    }
    Ok(c.finish(
        Suite::Images,
        k,
        n,
        format!("{} partitions, {nonzero} non-vanishing", parts.len()),
    ))
}

/// Arrow orders, intermediates, and the degree drop along order-2 arrows.
fn structure(k: usize, n: usize) -> Result<SuiteReport> {
    let mut c = Collector::new();
    let cx = build_complex(k, n)?;
    let sym = enumerate(k, n, Filter::Symmetric)?;
    c.check(cx.nodes.len() == sym.len(), || {
        format!(
            "{} nodes vs {} symmetric partitions",
            cx.nodes.len(),
            sym.len()
        )
    });
    for arrow in &cx.arrows {
        let a = &cx.nodes[arrow.source];
        let b = &cx.nodes[arrow.target];
        let mids = intermediates(&a.partition, &b.partition);
        if arrow.order == 2 {
            let nonsym = mids.iter().filter(|x| !x.is_symmetric()).count();
            c.check(nonsym == 2 && mids.len() == 2, || {
                format!(
                    "{} -> {}: {nonsym} non-symmetric of {} intermediates",
                    a.partition,
                    b.partition,
                    mids.len()
                )
            });
            c.check(a.degree == b.degree + 1, || {
                format!(
                    "{} -> {}: degrees {} and {}",
                    a.partition, b.partition, a.degree, b.degree
                )
            });
        } else {
            c.check(a.degree == b.degree, || {
                format!(
                    "{} -> {}: degrees {} and {}",
                    a.partition, b.partition, a.degree, b.degree
                )
            });
        }
    }
    for a in &sym {
        for b in &sym {
            if a.lt(b) && b.r() == a.r() + 2 && b.size() == a.size() + 3 {
                let count = intermediates(a, b)
                    .iter()
                    .filter(|x| x.is_symmetric())
                    .count();
                c.check(count <= 2, || {
                    format!("{a} < {b}: {count} symmetric intermediates")
                });
            }
        }
    }
    if k == 2 {
        let orders: Vec<usize> = cx.arrows.iter().map(|a| a.order).collect();
        c.check(cx.nodes.len() == 4 && orders == [1, 2, 1], || {
            format!("k=2 complex has orders {orders:?}")
        });
    }
    let summary = format!("{} nodes, {} arrows", cx.nodes.len(), cx.arrows.len());
    Ok(c.finish(Suite::Structure, k, n, summary))
}

fn ranks(k: usize, n: usize, rmax: usize) -> Result<SuiteReport> {
    let mut c = Collector::new();
    for variant in Variant::ALL {
        for r in 0..=rmax {
            let seq = jet_sequence(k, n, r, variant)?;
            let rep = rank_feasibility(&seq);
            c.check(rep.ok, || {
                let seq: Vec<String> = seq.iter().map(|x| x.to_string()).collect();
                format!(
                    "r={r} {variant}: sequence ({}) is not exact-feasible",
                    seq.join(",")
                )
            });
        }
    }
    Ok(c.finish(Suite::Ranks, k, n, format!("r ≤ {rmax}, both variants")))
}

fn euler(k: usize, n: usize, rmax: usize) -> Result<SuiteReport> {
    let mut c = Collector::new();
    for variant in Variant::ALL {
        for r in 0..=rmax {
            let rep = euler_identity_check(k, n, r, variant)?;
            c.check(rep.ok, || {
                format!("r={r} {variant}: lhs {} ≠ rhs {}", rep.lhs, rep.rhs)
            });
        }
    }
    Ok(c.finish(Suite::Euler, k, n, format!("r ≤ {rmax}, both variants")))
}

/// Whether `kernel0` is non-decreasing in `r` for the `sym` variant; exploratory.
pub fn kernel0_monotone(k: usize, n: usize, rmax: usize) -> Result<bool> {
    let mut prev = None;
    for r in 0..=rmax {
        let rep = rank_feasibility(&jet_sequence(k, n, r, Variant::Sym)?);
        if let Some(p) = prev {
            if rep.kernel0 < p {
                return Ok(false);
            }
        }
        prev = Some(rep.kernel0);
    }
    Ok(true)
}
