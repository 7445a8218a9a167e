//! Direct images of the line bundles `λ_a` along the fibration with fiber
//! the `D_n` isotropic Grassmannian, plus Weyl dimension formulas and a
//! generic Bott-Borel-Weil routine for `D_n`.

use num::bigint::BigUint;
use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{check_stable_range, Error, Result};
use crate::partitions::{enumerate, Filter, Partition};
use crate::rational::{binomial, half, int, Q};
use crate::relative_bgg::lambda_a;
use crate::weights::{is_dominant, rho, ParabolicFlavor, RankSplit, Weight};
use crate::weyl::{generate_group, WeylElement, GROUP_LIMIT};

/// Largest `n` for which the orbit search enumerates `W(D_n)`.
pub const BRUTE_FORCE_MAX_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DirectImage {
    NonZero { mu: Weight, degree: usize },
    Vanishing,
}

impl DirectImage {
    pub fn is_vanishing(&self) -> bool {
        matches!(self, DirectImage::Vanishing)
    }
}

/// `μ^±`: `(1-2n)/2` on the first `k` slots, `(1/2, ..., 1/2, ±1/2)` on the last `n`.
pub fn mu_pm(split: RankSplit, plus: bool) -> Weight {
    let k = split.k;
    let coords = (0..split.m())
        .map(|i| {
            if i < k {
                Q::new((1 - 2 * split.n as i64).into(), 2.into())
            } else if i + 1 == split.m() && !plus {
                -half()
            } else {
                half()
            }
        })
        .collect();
    Weight::new(split, coords).expect("length m")
}

/// `C(n, 2) - q(a)`.
pub fn degree(a: &Partition) -> usize {
    let n = a.n();
    n * (n - 1) / 2 - a.q()
}

/// Closed form: zero unless `a` is symmetric; otherwise `μ^∗ - (a_k, ..., a_1 | 0)`
/// with `∗ = +` iff `d(a) ≡ n (mod 2)`, in degree `C(n,2) - q(a)`.
pub fn direct_image(a: &Partition) -> Result<DirectImage> {
    check_stable_range(a.k(), a.n())?;
    if !a.is_symmetric() {
        return Ok(DirectImage::Vanishing);
    }
    let split = RankSplit::new(a.k(), a.n())?;
    let plus = a.d() % 2 == a.n() % 2;
    let base = mu_pm(split, plus);
    let k = a.k();
    let coords = base
        .coords()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i < k {
                c - int(a.part(k - i) as i64)
            } else {
                c.clone()
            }
        })
        .collect();
    Ok(DirectImage::NonZero {
        mu: Weight::new(split, coords)?,
        degree: degree(a),
    })
}

fn has_abs_collision(c: &[Q]) -> bool {
    let mut abs: Vec<Q> = c.iter().map(|x| x.abs()).collect();
    abs.sort();
    abs.windows(2).any(|w| w[0] == w[1])
}

/// Orbit search: regularize `λ_a + ρ` under `W(D_n)` acting on the last `n`
/// slots and return the unique `P`-dominant `w(λ_a+ρ) - ρ` with degree `ℓ(w)`.
pub fn direct_image_bruteforce(a: &Partition) -> Result<DirectImage> {
    check_stable_range(a.k(), a.n())?;
    if a.n() > BRUTE_FORCE_MAX_N {
        return Err(Error::Capacity {
            what: format!("W(D_{}) orbit search", a.n()),
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let split = RankSplit::new(a.k(), a.n())?;
    let r = rho(split)?;
    let shifted = lambda_a(a)?.add(&r)?;
    if has_abs_collision(shifted.fiber_part()) {
        return Ok(DirectImage::Vanishing);
    }
    let gens: Vec<usize> = (a.k() + 1..=split.m()).collect();
    let mut hits = Vec::new();
    for w in generate_group(&gens, split.m(), GROUP_LIMIT)? {
        let nu = w.act(&shifted)?.sub(&r)?;
        if is_dominant(&nu, ParabolicFlavor::P)? {
            hits.push(DirectImage::NonZero {
                mu: nu,
                degree: w.length(),
            });
        }
    }
    if hits.len() != 1 {
        return Err(Error::internal(format!(
            "{} P-dominant weights in the orbit of {a}",
            hits.len()
        )));
    }
    Ok(hits.pop().expect("one hit"))
}

/// Weyl dimension of the `gl(k)` irreducible with highest weight `μ`.
pub fn gl_dimension(mu: &[Q]) -> Result<BigUint> {
    for w in mu.windows(2) {
        let d = &w[0] - &w[1];
        if !d.is_integer() || d.is_negative() {
            return Err(Error::domain(format!("{mu:?} is not a dominant gl weight")));
        }
    }
    let mut prod = Q::one();
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            let gap = int((j - i) as i64);
            prod *= (&mu[i] - &mu[j] + &gap) / gap;
        }
    }
    to_natural(prod, "gl")
}

/// Weyl dimension of the `so(2n)` irreducible with highest weight `μ`.
pub fn dn_dimension(mu: &[Q]) -> Result<BigUint> {
    let n = mu.len();
    if !is_dn_dominant(mu) {
        return Err(Error::domain(format!(
            "{mu:?} is not a dominant D_{n} weight"
        )));
    }
    let rho_bar: Vec<Q> = (0..n).rev().map(|c| int(c as i64)).collect();
    let l: Vec<Q> = mu.iter().zip(&rho_bar).map(|(a, b)| a + b).collect();
    let mut prod = Q::one();
    for i in 0..n {
        for j in i + 1..n {
            let num = &l[i] * &l[i] - &l[j] * &l[j];
            let den = &rho_bar[i] * &rho_bar[i] - &rho_bar[j] * &rho_bar[j];
            prod *= num / den;
        }
    }
    to_natural(prod, "D_n")
}

fn is_dn_integral(mu: &[Q]) -> bool {
    match mu.last() {
        None => true,
        Some(last) => mu.iter().all(|c| (c - &mu[0]).is_integer()) && (last * int(2)).is_integer(),
    }
}

fn is_dn_dominant(mu: &[Q]) -> bool {
    let n = mu.len();
    if !is_dn_integral(mu) {
        return false;
    }
    let ordered = mu.windows(2).all(|w| w[0] >= w[1]);
    ordered && (n < 2 || mu[n - 2] >= mu[n - 1].abs())
}

fn to_natural(q: Q, what: &str) -> Result<BigUint> {
    if !q.is_integer() || !q.is_positive() {
        return Err(Error::internal(format!(
            "{what} dimension formula produced {q}"
        )));
    }
    Ok(q.to_integer().to_biguint().expect("positive"))
}

/// Dimension of the irreducible module of the `gl(k) ⊕ so(2n)` Levi with
/// highest weight `μ`; `μ` must be `P`-dominant.
pub fn levi_dimension(mu: &Weight) -> Result<BigUint> {
    if !is_dominant(mu, ParabolicFlavor::P)? {
        return Err(Error::domain(format!("{mu} is not P-dominant")));
    }
    Ok(gl_dimension(mu.levi_part())? * dn_dimension(mu.fiber_part())?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BbwResult {
    pub degree: usize,
    pub weight: Vec<Q>,
    pub element: WeylElement,
}

/// Bott-Borel-Weil for `D_n`: `None` if `ν + ρ̄` is singular, otherwise the
/// length of the regularizing element and the dominant weight `w(ν+ρ̄) - ρ̄`.
pub fn bbw_dn(fiber_weight: &[Q]) -> Result<Option<BbwResult>> {
    let n = fiber_weight.len();
    if n == 0 {
        return Err(Error::domain("empty fiber weight"));
    }
    if !is_dn_integral(fiber_weight) {
        return Err(Error::domain(format!(
            "{fiber_weight:?} is not D_{n}-integral"
        )));
    }
    let rho_bar: Vec<Q> = (0..n).rev().map(|c| int(c as i64)).collect();
    let c: Vec<Q> = fiber_weight
        .iter()
        .zip(&rho_bar)
        .map(|(a, b)| a + b)
        .collect();
    if has_abs_collision(&c) {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| c[j].abs().cmp(&c[i].abs()));
    let has_zero = c.iter().any(|x| x.is_zero());
    let negatives = c.iter().filter(|x| x.is_negative()).count();
    let flip_last = !has_zero && negatives % 2 == 1;

    let mut images = vec![0usize; n];
    let mut signs = vec![1i8; n];
    let mut target = vec![Q::zero(); n];
    for (pos, &j) in order.iter().enumerate() {
        let mut value = c[j].abs();
        if flip_last && pos == n - 1 {
            value = -value;
        }
        images[j] = pos + 1;
        signs[j] = if c[j].is_negative() != value.is_negative() {
            -1
        } else {
            1
        };
        target[pos] = value;
    }
    if signs.iter().filter(|&&s| s < 0).count() % 2 == 1 {
        // only possible through the zero entry, whose sign is free
        let z = c
            .iter()
            .position(|x| x.is_zero())
            .expect("parity fixed by a zero");
        signs[z] = -signs[z];
    }
    let element = WeylElement::new(images, signs)?;
    let weight = target.iter().zip(&rho_bar).map(|(a, b)| a - b).collect();
    Ok(Some(BbwResult {
        degree: element.length(),
        weight,
        element,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageRow {
    pub partition: String,
    pub symmetric: bool,
    pub mu: String,
    pub degree: Option<usize>,
    pub dim: String,
}

/// One row per partition of the box: closed-form image, degree and Levi dimension.
pub fn image_rows(k: usize, n: usize) -> Result<Vec<ImageRow>> {
    enumerate(k, n, Filter::All)?
        .iter()
        .map(|a| {
            Ok(match direct_image(a)? {
                DirectImage::NonZero { mu, degree } => ImageRow {
                    partition: a.to_string(),
                    symmetric: true,
                    dim: levi_dimension(&mu)?.to_string(),
                    mu: mu.to_string(),
                    degree: Some(degree),
                },
                DirectImage::Vanishing => ImageRow {
                    partition: a.to_string(),
                    symmetric: a.is_symmetric(),
                    mu: "0".into(),
                    degree: None,
                    dim: "0".into(),
                },
            })
        })
        .collect()
}

pub fn images_csv(k: usize, n: usize) -> Result<String> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["partition", "symmetric", "mu", "degree", "dim"])
        .map_err(|e| Error::internal(e.to_string()))?;
    for row in image_rows(k, n)? {
        let degree = row.degree.map(|d| d.to_string()).unwrap_or_default();
        wtr.write_record([
            row.partition.as_str(),
            if row.symmetric { "yes" } else { "no" },
            row.mu.as_str(),
            degree.as_str(),
            row.dim.as_str(),
        ])
        .map_err(|e| Error::internal(e.to_string()))?;
    }
    let bytes = wtr
        .into_inner()
        .map_err(|e| Error::internal(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

/// `2^(n-1)`, the half-spin dimension.
pub fn half_spin_dimension(n: usize) -> BigUint {
    BigUint::one() << (n - 1)
}

/// `C(n, 2)` as an integer.
pub fn top_degree(n: usize) -> usize {
    binomial(n as u64, 2).try_into().expect("small")
}
