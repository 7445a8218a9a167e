//! Partitions in the `k x n` box and the Weyl elements they label.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_stable_range, Error, Result};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    parts: Vec<usize>,
    k: usize,
    n: usize,
    conjugate: Vec<usize>,
    d: usize,
    q: usize,
    symmetric: bool,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<usize>,
    k: usize,
    n: usize,
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        PartitionRepr {
            parts: p.parts,
            k: p.k,
            n: p.n,
        }
    }
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;

    fn try_from(r: PartitionRepr) -> Result<Self> {
        Partition::new(&r.parts, r.k, r.n)
    }
}

/// Statistics of a partition: Durfee side `d`, boxes above the diagonal `q`,
/// `r = d + q`, conjugate and symmetry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub d: usize,
    pub q: usize,
    pub r: usize,
    pub conjugate: Vec<usize>,
    pub symmetric: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    All,
    Symmetric,
    SymmetricWithR(usize),
    Size(usize),
}

impl Filter {
    pub fn accepts(&self, a: &Partition) -> bool {
        match *self {
            Filter::All => true,
            Filter::Symmetric => a.is_symmetric(),
            Filter::SymmetricWithR(j) => a.is_symmetric() && a.r() == j,
            Filter::Size(p) => a.size() == p,
        }
    }
}

impl std::str::FromStr for Filter {
    type Err = Error;

    /// Parses `all`, `symmetric`, `symmetric_with_r=J` or `size=P`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("unknown partition filter {s:?}"));
        match s {
            "all" => Ok(Filter::All),
            "symmetric" => Ok(Filter::Symmetric),
            _ => {
                let (key, val) = s.split_once('=').ok_or_else(bad)?;
                let v: usize = val.parse().map_err(|_| bad())?;
                match key {
                    "symmetric_with_r" | "r" => Ok(Filter::SymmetricWithR(v)),
                    "size" => Ok(Filter::Size(v)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl Partition {
    /// `parts` may be shorter than `k`; missing rows are zero.
    pub fn new(parts: &[usize], k: usize, n: usize) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::domain(format!("empty box {k}x{n}")));
        }
        if parts.len() > k {
            return Err(Error::domain(format!(
                "{} rows do not fit a {k}x{n} box",
                parts.len()
            )));
        }
        let mut p = parts.to_vec();
        p.resize(k, 0);
        if p[0] > n || p.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "{parts:?} is not a partition in the {k}x{n} box"
            )));
        }
        let conjugate: Vec<usize> = (1..=n)
            .map(|j| p.iter().filter(|&&a| a >= j).count())
            .collect();
        let d = (1..=k).filter(|&i| p[i - 1] >= i).max().unwrap_or(0);
        let q = (1..=k).map(|i| p[i - 1].saturating_sub(i)).sum();
        let symmetric = (0..k).all(|i| i >= n || p[i] == conjugate[i])
            && conjugate.iter().skip(k).all(|&b| b == 0);
        Ok(Partition {
            parts: p,
            k,
            n,
            conjugate,
            d,
            q,
            symmetric,
        })
    }

    pub fn empty(k: usize, n: usize) -> Result<Self> {
        Self::new(&[], k, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_i` for 1-based `i`.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn conjugate(&self) -> &[usize] {
        &self.conjugate
    }

    /// The conjugate as a partition in the transposed `n x k` box.
    pub fn transpose(&self) -> Partition {
        Partition::new(&self.conjugate, self.n, self.k).expect("conjugate fits the transposed box")
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.d + self.q
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn stats(&self) -> Stats {
        Stats {
            d: self.d,
            q: self.q,
            r: self.r(),
            conjugate: self.conjugate.clone(),
            symmetric: self.symmetric,
        }
    }

    /// Componentwise `a ≤ a'` (same box required).
    pub fn le(&self, other: &Partition) -> bool {
        self.k == other.k
            && self.n == other.n
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn lt(&self, other: &Partition) -> bool {
        self.le(other) && self != other
    }

    /// Partitions obtained by adding one box.
    pub fn covers(&self) -> Vec<Partition> {
        (0..self.k)
            .filter(|&i| self.parts[i] < self.n && (i == 0 || self.parts[i - 1] > self.parts[i]))
            .map(|i| {
                let mut p = self.parts.clone();
                p[i] += 1;
                Partition::new(&p, self.k, self.n).expect("adding a corner box stays in the box")
            })
            .collect()
    }

    /// The reading word: box `(i, j)` carries `k - i + j`, rows read left to right, top to bottom.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.size());
        for i in 1..=self.k {
            for j in 1..=self.parts[i - 1] {
                w.push(self.k - i + j);
            }
        }
        w
    }

    /// The product of simple reflections along [`Partition::word`], as an element of `S_{k+n}`.
    pub fn weyl_element(&self) -> WeylElement {
        WeylElement::from_word(&self.word(), self.k + self.n).expect("indices lie in 1..k+n-1")
    }

    /// [`Partition::word`] written relative to `k`, e.g. `s_k s_{k+1} s_{k-1}`.
    pub fn symbolic_word(&self) -> String {
        self.word()
            .iter()
            .map(|&i| match i.cmp(&self.k) {
                std::cmp::Ordering::Equal => "s_k".to_string(),
                std::cmp::Ordering::Greater => format!("s_{{k+{}}}", i - self.k),
                std::cmp::Ordering::Less => format!("s_{{k-{}}}", self.k - i),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// ASCII Young diagram: `#` for boxes, `.` for the rest of the box.
    pub fn young_diagram(&self) -> String {
        self.parts
            .iter()
            .map(|&a| format!("{}{}\n", "#".repeat(a), ".".repeat(self.n - a)))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("partitions always serialize")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(|a| a.to_string()).collect();
        write!(f, "({})@{}x{}", p.join(","), self.k, self.n)
    }
}

/// All partitions in the `k x n` box accepted by `filter`, in lexicographic order of parts.
pub fn enumerate(k: usize, n: usize, filter: Filter) -> Result<Vec<Partition>> {
    check_stable_range(k, n)?;
    Ok(enumerate_box(k, n)
        .into_iter()
        .filter(|a| filter.accepts(a))
        .collect())
}

/// All partitions of an arbitrary `k x n` box, lexicographically sorted.
pub fn enumerate_box(k: usize, n: usize) -> Vec<Partition> {
    fn rec(k: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=max {
            prefix.push(v);
            rec(k, v, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(k, n, &mut Vec::new(), &mut raw);
    raw.sort();
    raw.into_iter()
        .map(|p| Partition::new(&p, k, n).expect("generated inside the box"))
        .collect()
}

/// `w(k-i) > k` for some `0 ≤ i < k` forces `w(k+i+1) ≤ k`.
pub fn is_k_balanced(w: &WeylElement, k: usize) -> bool {
    let m = w.rank();
    (0..k).all(|i| {
        if w.image(k - i) <= k {
            return true;
        }
        k + i < m && w.image(k + i + 1) <= k
    })
}
