//! Weights of `so(2m)` in the epsilon basis.
//!
//! A [`Weight`] always carries its [`RankSplit`] `(k, n)` with `m = k + n`,
//! so the parabolic dominance tests need no extra argument. The first `k`
//! coordinates are displayed before a `|`, the last `n` after it.

use std::fmt;

use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, half, int, is_nonneg_integer, parse_q, Q};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RankSplit {
    pub k: usize,
    pub n: usize,
}

impl RankSplit {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::domain(format!(
                "rank split needs k ≥ 1 and n ≥ 1 (got k={k}, n={n})"
            )));
        }
        Ok(RankSplit { k, n })
    }

    pub fn m(&self) -> usize {
        self.k + self.n
    }
}

/// Which simple roots are crossed: `R` crosses `{α_m}`, `Q` crosses
/// `{α_k, α_m}` and `P` crosses `{α_k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParabolicFlavor {
    R,
    Q,
    P,
}

impl ParabolicFlavor {
    /// Indices of the simple reflections generating the Levi Weyl group.
    pub fn levi_generators(&self, split: RankSplit) -> Vec<usize> {
        let m = split.m();
        (1..=m)
            .filter(|&i| match self {
                ParabolicFlavor::R => i != m,
                ParabolicFlavor::Q => i != m && i != split.k,
                ParabolicFlavor::P => i != split.k,
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightRepr", into = "WeightRepr")]
pub struct Weight {
    split: RankSplit,
    coords: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    k: usize,
    n: usize,
    coords: Vec<String>,
}

impl From<Weight> for WeightRepr {
    fn from(w: Weight) -> Self {
        WeightRepr {
            k: w.split.k,
            n: w.split.n,
            coords: w.coords.iter().map(fmt_q).collect(),
        }
    }
}

impl TryFrom<WeightRepr> for Weight {
    type Error = Error;

    fn try_from(r: WeightRepr) -> Result<Self> {
        let coords = r
            .coords
            .iter()
            .map(|s| parse_q(s).ok_or_else(|| Error::domain(format!("bad rational {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Weight::new(RankSplit::new(r.k, r.n)?, coords)
    }
}

impl Weight {
    pub fn new(split: RankSplit, coords: Vec<Q>) -> Result<Self> {
        if coords.len() != split.m() {
            return Err(Error::domain(format!(
                "weight for k={}, n={} needs {} coordinates, got {}",
                split.k,
                split.n,
                split.m(),
                coords.len()
            )));
        }
        Ok(Weight { split, coords })
    }

    pub fn from_ints(split: RankSplit, coords: &[i64]) -> Result<Self> {
        Weight::new(split, coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(split: RankSplit) -> Self {
        Weight {
            split,
            coords: vec![Q::zero(); split.m()],
        }
    }

    pub fn split(&self) -> RankSplit {
        self.split
    }

    pub fn m(&self) -> usize {
        self.split.m()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// The first `k` coordinates.
    pub fn levi_part(&self) -> &[Q] {
        &self.coords[..self.split.k]
    }

    /// The last `n` coordinates.
    pub fn fiber_part(&self) -> &[Q] {
        &self.coords[self.split.k..]
    }

    fn check_same_split(&self, other: &Weight) -> Result<()> {
        if self.split != other.split {
            return Err(Error::domain(format!(
                "rank mismatch: ({},{}) vs ({},{})",
                self.split.k, self.split.n, other.split.k, other.split.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check_same_split(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Weight {
            split: self.split,
            coords,
        })
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.check_same_split(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Weight {
            split: self.split,
            coords,
        })
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight {
            split: self.split,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Pairwise differences integral and `2λ_m` integral.
    pub fn is_integral(&self) -> bool {
        let first = &self.coords[0];
        let diffs_ok = self.coords.iter().all(|c| (c - first).is_integer());
        let last = self.coords.last().expect("m ≥ 1");
        diffs_ok && (last * int(2)).is_integer()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("weights always serialize")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left: Vec<String> = self.levi_part().iter().map(fmt_q).collect();
        let right: Vec<String> = self.fiber_part().iter().map(fmt_q).collect();
        write!(f, "({}|{})", left.join(","), right.join(","))
    }
}

fn check_rank(m: usize) -> Result<()> {
    if m < 4 {
        return Err(Error::domain(format!("rank m={m} too small, need m ≥ 4")));
    }
    Ok(())
}

/// Coordinates of ρ for `so(2m)`: `(m-1, ..., 1, 0)`.
pub fn rho_coords(m: usize) -> Result<Vec<Q>> {
    check_rank(m)?;
    Ok((0..m).rev().map(|c| int(c as i64)).collect())
}

pub fn rho(split: RankSplit) -> Result<Weight> {
    Weight::new(split, rho_coords(split.m())?)
}

/// `ω_i` for `1 ≤ i ≤ m`; the last two are the half-spin weights.
pub fn fundamental_weight(i: usize, split: RankSplit) -> Result<Weight> {
    let m = split.m();
    check_rank(m)?;
    if i == 0 || i > m {
        return Err(Error::domain(format!(
            "fundamental weight index {i} outside 1..={m}"
        )));
    }
    let coords = if i <= m - 2 {
        (1..=m)
            .map(|j| if j <= i { int(1) } else { int(0) })
            .collect()
    } else {
        let mut c = vec![half(); m];
        if i == m - 1 {
            c[m - 1] = -half();
        }
        c
    };
    Weight::new(split, coords)
}

pub fn simple_reflection(i: usize, lambda: &Weight) -> Result<Weight> {
    let m = lambda.m();
    if i == 0 || i > m {
        return Err(Error::domain(format!(
            "simple reflection index {i} outside 1..={m}"
        )));
    }
    let mut coords = lambda.coords.clone();
    if i < m {
        coords.swap(i - 1, i);
    } else {
        let a = -coords[m - 1].clone();
        let b = -coords[m - 2].clone();
        coords[m - 2] = a;
        coords[m - 1] = b;
    }
    Ok(Weight {
        split: lambda.split,
        coords,
    })
}

/// `w.λ = w(λ+ρ) − ρ`.
pub fn affine_action(w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    let r = rho(lambda.split)?;
    let shifted = lambda.add(&r)?;
    w.act(&shifted)?.sub(&r)
}

/// Dominance test for the given parabolic; rejects non-integral weights.
pub fn is_dominant(lambda: &Weight, flavor: ParabolicFlavor) -> Result<bool> {
    if !lambda.is_integral() {
        return Err(Error::domain(format!(
            "weight {lambda} is not integral (pairwise differences and 2λ_m must be integers)"
        )));
    }
    let k = lambda.split.k;
    let m = lambda.m();
    let c = &lambda.coords;
    let diffs_ok = (1..m)
        .filter(|&i| flavor == ParabolicFlavor::R || i != k)
        .all(|i| is_nonneg_integer(&(&c[i - 1] - &c[i])));
    if !diffs_ok {
        return Ok(false);
    }
    if flavor == ParabolicFlavor::P {
        return Ok(c[m - 2] >= c[m - 1].abs());
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn split(k: usize, n: usize) -> RankSplit {
        RankSplit::new(k, n).unwrap()
    }

    fn w(k: usize, n: usize, c: &[i64]) -> Weight {
        Weight::from_ints(split(k, n), c).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(split(2, 2)).unwrap(), w(2, 2, &[3, 2, 1, 0]));
        assert_eq!(rho(split(2, 3)).unwrap(), w(2, 3, &[4, 3, 2, 1, 0]));
        assert_eq!(rho(split(3, 3)).unwrap(), w(3, 3, &[5, 4, 3, 2, 1, 0]));
        assert!(rho_coords(3).is_err());
    }

    #[test]
    fn fundamental_weights() {
        let s = split(2, 2);
        assert_eq!(fundamental_weight(2, s).unwrap(), w(2, 2, &[1, 1, 0, 0]));
        assert_eq!(
            fundamental_weight(4, s).unwrap().coords(),
            &vec![half(); 4][..]
        );
        assert_eq!(
            fundamental_weight(3, s).unwrap().coords(),
            &[half(), half(), half(), -half()][..]
        );
        assert!(fundamental_weight(0, s).is_err());
        assert!(fundamental_weight(5, s).is_err());
    }

    #[test]
    fn reflections() {
        let r = w(2, 2, &[3, 2, 1, 0]);
        assert_eq!(simple_reflection(1, &r).unwrap(), w(2, 2, &[2, 3, 1, 0]));
        assert_eq!(simple_reflection(4, &r).unwrap(), w(2, 2, &[3, 2, 0, -1]));
        for i in 1..=4 {
            let once = simple_reflection(i, &r).unwrap();
            assert_eq!(simple_reflection(i, &once).unwrap(), r);
        }
        assert!(simple_reflection(5, &r).is_err());
    }

    #[test]
    fn dominance_table() {
        let s = split(2, 2);
        let r = rho(s).unwrap();
        for f in [ParabolicFlavor::R, ParabolicFlavor::Q, ParabolicFlavor::P] {
            assert!(is_dominant(&r, f).unwrap());
        }
        let lam = fundamental_weight(4, s).unwrap().scale(&int(-3));
        assert!(is_dominant(&lam, ParabolicFlavor::R).unwrap());
        // increase across the k|n wall is fine for Q and P but not R
        let wall = w(2, 2, &[0, 0, 1, 1]);
        assert!(!is_dominant(&wall, ParabolicFlavor::R).unwrap());
        assert!(is_dominant(&wall, ParabolicFlavor::Q).unwrap());
        assert!(is_dominant(&wall, ParabolicFlavor::P).unwrap());
        let neg = w(2, 2, &[0, 0, 0, -1]);
        assert!(is_dominant(&neg, ParabolicFlavor::Q).unwrap());
        assert!(!is_dominant(&neg, ParabolicFlavor::P).unwrap());
        let spin = Weight::new(s, vec![half(), half(), half(), -half()]).unwrap();
        assert!(is_dominant(&spin, ParabolicFlavor::P).unwrap());
        let flipped = Weight::new(s, vec![half(), half(), -half(), half()]).unwrap();
        assert!(!is_dominant(&flipped, ParabolicFlavor::P).unwrap());
    }

    #[test]
    fn non_integral_is_rejected() {
        let bad = Weight::new(split(2, 2), vec![frac(1, 3), int(0), int(0), int(0)]).unwrap();
        assert!(matches!(
            is_dominant(&bad, ParabolicFlavor::R),
            Err(Error::Domain(_))
        ));
        let mixed = Weight::new(split(2, 2), vec![half(), int(0), int(0), int(0)]).unwrap();
        assert!(!mixed.is_integral());
    }

    #[test]
    fn construction_checks_length() {
        assert!(Weight::from_ints(split(2, 2), &[1, 2, 3]).is_err());
        assert!(RankSplit::new(0, 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let lam = fundamental_weight(5, split(2, 3)).unwrap().scale(&int(-5));
        let js = serde_json::to_string(&lam).unwrap();
        assert_eq!(
            js,
            r#"{"k":2,"n":3,"coords":["-5/2","-5/2","-5/2","-5/2","-5/2"]}"#
        );
        let back: Weight = serde_json::from_str(&js).unwrap();
        assert_eq!(back, lam);
        assert!(serde_json::from_str::<Weight>(r#"{"k":2,"n":2,"coords":["1"]}"#).is_err());
    }

    #[test]
    fn display_separates_blocks() {
        let lam =
            Weight::new(split(2, 2), vec![frac(-3, 2), frac(-5, 2), half(), -half()]).unwrap();
        assert_eq!(lam.to_string(), "(-3/2,-5/2|1/2,-1/2)");
    }
}
