//! Euler characteristic of the fiber cohomology of the jet kernels, computed
//! from the Cauchy decomposition of `S^r(C^k ⊗ C^n)` and Bott-Borel-Weil on
//! the `D_n` fiber, and its comparison with the first-page Euler number.

use num::bigint::{BigInt, BigUint};
use num::Zero;
use serde::Serialize;
use serde_json::json;

use crate::dirac_complex::{e1_page, Variant};
use crate::direct_images::{bbw_dn, dn_dimension, gl_dimension, BRUTE_FORCE_MAX_N};
use crate::error::{check_stable_range, Error, Result};
use crate::rational::{binomial, int, ser_display, sym_power_dim, Q};
use crate::relative_bgg::lambda_weight;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyTerm {
    pub mu: Vec<usize>,
    /// `dim S_μ(C^k)`.
    #[serde(serialize_with = "ser_display")]
    pub mult: BigUint,
    /// `μ` padded with zeros to length `n`.
    pub fiber_weight_shift: Vec<i64>,
}

/// How a `gl(n)` highest weight `μ` of `S_μ(C^n)` enters the fiber weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwistConvention {
    /// `λ_fiber - (μ_n, ..., μ_1)`: bundles are induced from lowest weight `-ν`.
    ReversedNegated,
    /// `λ_fiber + (μ_1, ..., μ_n)`.
    Direct,
}

/// The convention pinned by the `r = 0` and `r = 1` fixtures.
pub const TWIST: TwistConvention = TwistConvention::ReversedNegated;

/// Partitions of `r` with at most `max_len` nonzero parts, reverse-lexicographic.
pub fn partitions_of(r: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn rec(
        rest: usize,
        max_part: usize,
        slots: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for v in (1..=max_part.min(rest)).rev() {
            cur.push(v);
            rec(rest - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, max_len, &mut Vec::new(), &mut out);
    out
}

fn padded(mu: &[usize], len: usize) -> Vec<Q> {
    (0..len)
        .map(|i| int(*mu.get(i).unwrap_or(&0) as i64))
        .collect()
}

/// `S^r(C^k ⊗ C^n) = ⊕_μ S_μ C^k ⊗ S_μ C^n` over `μ ⊢ r` with at most `min(k, n)` rows.
pub fn cauchy_decompose(r: usize, k: usize, n: usize) -> Result<Vec<CauchyTerm>> {
    partitions_of(r, k.min(n))
        .into_iter()
        .map(|mu| {
            let mult = gl_dimension(&padded(&mu, k))?;
            let fiber_weight_shift = (0..n).map(|i| *mu.get(i).unwrap_or(&0) as i64).collect();
            Ok(CauchyTerm {
                mu,
                mult,
                fiber_weight_shift,
            })
        })
        .collect()
}

/// `Σ mult · dim S_μ(C^n)`, which must equal `C(nk + r - 1, r)`.
pub fn cauchy_total(r: usize, k: usize, n: usize) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for t in cauchy_decompose(r, k, n)? {
        total += t.mult * gl_dimension(&padded(&t.mu, n))?;
    }
    Ok(total)
}

pub fn cauchy_expected(r: usize, k: usize, n: usize) -> BigUint {
    sym_power_dim((n * k) as u64, r as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberTerm {
    /// Power of the trivial `g_2` factor.
    pub s3: usize,
    pub mu: Vec<usize>,
    #[serde(serialize_with = "ser_display")]
    pub mult: BigUint,
    /// `None` when the shifted fiber weight is singular.
    pub degree: Option<usize>,
    #[serde(serialize_with = "ser_display")]
    pub dim: BigUint,
    #[serde(serialize_with = "ser_display")]
    pub contribution: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberEuler {
    #[serde(serialize_with = "ser_display")]
    pub value: BigInt,
    pub singular: usize,
    pub terms: Vec<FiberTerm>,
}

pub fn fiber_euler(k: usize, n: usize, r: usize, variant: Variant) -> Result<FiberEuler> {
    fiber_euler_with(k, n, r, variant, TWIST)
}

/// `Σ (-1)^deg · mult · dim` over the Cauchy terms of the kernel `K_r`.
pub fn fiber_euler_with(
    k: usize,
    n: usize,
    r: usize,
    variant: Variant,
    twist: TwistConvention,
) -> Result<FiberEuler> {
    check_stable_range(k, n)?;
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::Capacity {
            what: format!("fiber Euler number for n={n}"),
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let lam = lambda_weight(k, n)?;
    let g2: u64 = binomial(k as u64, 2).try_into().expect("small");
    let max_s3 = match variant {
        Variant::Full => r / 2,
        Variant::Sym => 0,
    };
    let mut terms = Vec::new();
    let mut value = BigInt::zero();
    let mut singular = 0;
    for s3 in 0..=max_s3 {
        let trivial = sym_power_dim(g2, s3 as u64);
        for term in cauchy_decompose(r - 2 * s3, k, n)? {
            let shift = padded(&term.mu, n);
            let nu: Vec<Q> = match twist {
                TwistConvention::ReversedNegated => lam
                    .fiber_part()
                    .iter()
                    .zip(shift.iter().rev())
                    .map(|(a, b)| a - b)
                    .collect(),
                TwistConvention::Direct => lam
                    .fiber_part()
                    .iter()
                    .zip(&shift)
                    .map(|(a, b)| a + b)
                    .collect(),
            };
            let mult = term.mult * &trivial;
            let (degree, dim, contribution) = match bbw_dn(&nu)? {
                None => {
                    singular += 1;
                    (None, BigUint::zero(), BigInt::zero())
                }
                Some(res) => {
                    let dim = dn_dimension(&res.weight)?;
                    let c = BigInt::from(&mult * &dim);
                    let c = if res.degree % 2 == 0 { c } else { -c };
                    (Some(res.degree), dim, c)
                }
            };
            value += &contribution;
            terms.push(FiberTerm {
                s3,
                mu: term.mu,
                mult,
                degree,
                dim,
                contribution,
            });
        }
    }
    Ok(FiberEuler {
        value,
        singular,
        terms,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub k: usize,
    pub n: usize,
    pub r: usize,
    pub variant: Variant,
    #[serde(serialize_with = "ser_display")]
    pub lhs: BigInt,
    #[serde(serialize_with = "ser_display")]
    pub rhs: BigInt,
    pub ok: bool,
    pub singular: usize,
    pub terms: Vec<FiberTerm>,
}

/// First-page Euler number against the fiber Euler number.
pub fn euler_identity_check(k: usize, n: usize, r: usize, variant: Variant) -> Result<EulerReport> {
    let lhs = e1_page(k, n, r, variant)?.euler();
    let fiber = fiber_euler(k, n, r, variant)?;
    Ok(EulerReport {
        k,
        n,
        r,
        variant,
        ok: lhs == fiber.value,
        lhs,
        rhs: fiber.value,
        singular: fiber.singular,
        terms: fiber.terms,
    })
}

impl EulerReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "n": self.n,
            "r": self.r,
            "variant": self.variant,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "ok": self.ok,
            "singular": self.singular,
            "terms": self.terms.iter().map(|t| json!({
                "s3": t.s3,
                "mu": t.mu,
                "mult": t.mult.to_string(),
                "degree": t.degree.map(|d| json!(d)).unwrap_or(json!("singular")),
                "dim": t.dim.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cauchy_fixtures() {
        let t0 = cauchy_decompose(0, 2, 3).unwrap();
        assert_eq!(t0.len(), 1);
        assert!(t0[0].mu.is_empty());
        assert_eq!(t0[0].mult, BigUint::from(1u32));
        let t1 = cauchy_decompose(1, 2, 3).unwrap();
        assert_eq!(t1.len(), 1);
        assert_eq!(t1[0].mult, BigUint::from(2u32));
        assert_eq!(cauchy_total(1, 2, 3).unwrap(), BigUint::from(6u32));
        let t2 = cauchy_decompose(2, 2, 2).unwrap();
        let mults: Vec<(Vec<usize>, u32)> = t2
            .iter()
            .map(|t| (t.mu.clone(), t.mult.clone().try_into().unwrap()))
            .collect();
        assert_eq!(mults, vec![(vec![2], 3), (vec![1, 1], 1)]);
        assert_eq!(cauchy_total(2, 2, 2).unwrap(), BigUint::from(10u32));
        assert_eq!(t2[1].fiber_weight_shift, vec![1, 1]);
    }

    #[test]
    fn partitions_of_counts() {
        assert_eq!(partitions_of(4, 4).len(), 5);
        assert_eq!(partitions_of(4, 2).len(), 3);
        assert_eq!(partitions_of(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn small_identities() {
        let expect = [
            (0, Variant::Sym, -2),
            (1, Variant::Sym, -12),
            (2, Variant::Full, -42),
            (2, Variant::Sym, -40),
        ];
        for (r, v, value) in expect {
            let rep = euler_identity_check(2, 2, r, v).unwrap();
            assert_eq!(rep.lhs, BigInt::from(value), "r={r} {v}");
            assert!(rep.ok, "r={r} {v}: {} vs {}", rep.lhs, rep.rhs);
        }
    }

    #[test]
    fn direct_twist_fails_at_r1() {
        let good =
            fiber_euler_with(2, 2, 1, Variant::Sym, TwistConvention::ReversedNegated).unwrap();
        let bad = fiber_euler_with(2, 2, 1, Variant::Sym, TwistConvention::Direct).unwrap();
        assert_eq!(good.value, BigInt::from(-12));
        assert_eq!(bad.value, BigInt::from(-4));
    }

    #[test]
    fn full_variant_has_trivial_factor_term() {
        let f = fiber_euler(3, 3, 2, Variant::Full).unwrap();
        let t = f.terms.iter().find(|t| t.s3 == 1).unwrap();
        assert!(t.mu.is_empty());
        assert_eq!(t.mult, BigUint::from(3u32));
    }

    #[test]
    fn capacity_guard() {
        assert!(matches!(
            fiber_euler(2, 5, 0, Variant::Sym),
            Err(Error::Capacity { .. })
        ));
    }
}
