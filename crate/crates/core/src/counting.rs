//! Exact counts of fission trees and related objects.
//!
//! `Φ(k, n)` (trees of slope at most `k` with `n` leaves) is obtained by
//! applying the Euler transform `k` times to `[1, 0, 0, ...]`. The other
//! statistics are differences or shifts of it:
//!
//! - `φ(k, n) = Φ(k, n) - Φ(k-1, n)`: slope exactly `k`, multiplicity one
//! - `ψ(k, n) = φ(k+1, n)` for `k >= 1`, `ψ(0, n) = 1`: arbitrary multiplicities
//! - `σ(k, n)`: supernova graphs with `n` nodes and maximal edge multiplicity `k`
//! - extended trees (`ext`) and their semisimple subset (`ext-ss`)

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

/// A 1-indexed sequence of big integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BigSeq(Vec<BigInt>);

impl BigSeq {
    pub fn new(terms: Vec<BigInt>) -> Self {
        BigSeq(terms)
    }

    pub fn from_u64(terms: &[u64]) -> Self {
        BigSeq(terms.iter().map(|&t| BigInt::from(t)).collect())
    }

    /// `[1, 1, ..., 1]` of length `len`.
    pub fn ones(len: usize) -> Self {
        BigSeq(vec![BigInt::one(); len])
    }

    /// `[1, 0, ..., 0]` of length `len`: the slope-0 trees.
    pub fn unit(len: usize) -> Self {
        let mut v = vec![BigInt::zero(); len];
        if let Some(first) = v.first_mut() {
            *first = BigInt::one();
        }
        BigSeq(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The term at 1-based index `i`.
    pub fn term(&self, i: usize) -> &BigInt {
        assert!(i >= 1 && i <= self.0.len(), "index {i} outside 1..={}", self.0.len());
        &self.0[i - 1]
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.0
    }
}

impl fmt::Display for BigSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Euler transform `1 + Σ b_n u^n = Π (1 - u^m)^(-a_m)`, truncated to the
/// length of `a`.
///
/// Uses `c_i = Σ_{d | i} d a_d` and `b_i = (c_i + Σ_{d<i} c_d b_{i-d}) / i`.
/// The division is always exact for integer input; a remainder is reported
/// as [`Error::Arithmetic`].
pub fn euler_transform(a: &BigSeq) -> Result<BigSeq> {
    let n = a.len();
    let mut c = vec![BigInt::zero(); n + 1];
    for d in 1..=n {
        let term = a.term(d) * BigInt::from(d);
        for multiple in (d..=n).step_by(d) {
            c[multiple] += &term;
        }
    }
    let mut b = vec![BigInt::zero(); n + 1];
    for i in 1..=n {
        let mut acc = c[i].clone();
        for d in 1..i {
            acc += &c[d] * &b[i - d];
        }
        let (q, r) = acc.div_rem(&BigInt::from(i));
        if !r.is_zero() {
            return Err(Error::Arithmetic(format!("Euler transform: term {i} leaves remainder {r}")));
        }
        b[i] = q;
    }
    b.remove(0);
    Ok(BigSeq(b))
}

/// Euler transform computed by counting multisets directly: for each `i`,
/// sum over `1·s_1 + 2·s_2 + ... = i` of `Π MS(a_k, s_k)`.
///
/// Exponential in `i`; intended for cross-checking [`euler_transform`] on
/// short sequences.
pub fn euler_transform_by_multisets(a: &[u64]) -> BigSeq {
    let n = a.len();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut total = BigInt::zero();
        // s[k] = number of chosen elements of weight k+1
        let mut s = vec![0u64; n];
        sum_compositions(a, i, n, &mut s, &mut total);
        out.push(total);
    }
    BigSeq(out)
}

fn sum_compositions(a: &[u64], remaining: usize, max_weight: usize, s: &mut Vec<u64>, total: &mut BigInt) {
    if remaining == 0 {
        let mut prod = BigInt::one();
        for (k, &sk) in s.iter().enumerate() {
            if sk > 0 {
                prod *= ms_count(a[k], sk);
            }
        }
        *total += prod;
        return;
    }
    for w in (1..=max_weight.min(remaining)).rev() {
        s[w - 1] += 1;
        sum_compositions(a, remaining - w, w, s, total);
        s[w - 1] -= 1;
    }
}

/// Number of multisets of size `n` drawn from `k` kinds: `C(n + k - 1, n)`.
pub fn ms_count(k: u64, n: u64) -> BigInt {
    if k == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let mut r = BigInt::one();
    for i in 1..=n {
        r = r * BigInt::from(k - 1 + i) / BigInt::from(i);
    }
    r
}

/// `p(1..=n)` via the Euler transform of the all-ones sequence.
pub fn partitions_by_transform(n: usize) -> BigSeq {
    euler_transform(&BigSeq::ones(n)).expect("Euler transform of integers is exact")
}

/// `p(1..=n)` via Euler's pentagonal number recurrence.
pub fn partitions_by_pentagonal(n: usize) -> BigSeq {
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = BigInt::one();
    for i in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[i - g1].clone();
            if g2 <= i {
                term += &p[i - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[i] = acc;
    }
    p.remove(0);
    BigSeq(p)
}

/// `p(1..=n)`, computed both ways; a disagreement is an arithmetic error.
pub fn partition_seq(n: usize) -> Result<BigSeq> {
    let a = partitions_by_transform(n);
    let b = partitions_by_pentagonal(n);
    if a != b {
        return Err(Error::Arithmetic("partition sequences disagree".into()));
    }
    Ok(a)
}

/// `θ(0..=n)` with `θ(m) = Σ_{j=0}^{m} p(j)` and `p(0) = 1`.
pub fn theta_seq(n: usize) -> Vec<BigInt> {
    let p = partitions_by_pentagonal(n);
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    out.push(acc.clone());
    for t in p.terms() {
        acc += t;
        out.push(acc.clone());
    }
    out
}

/// The statistics that can be tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    /// `Φ(k, n)`, slope at most `k`.
    CumulativePhi,
    /// `φ(k, n)`, slope exactly `k`, multiplicity one.
    Phi,
    Psi,
    Sigma,
    Ext,
    ExtSemisimple,
}

impl Stat {
    pub const ALL: [Stat; 6] = [Stat::CumulativePhi, Stat::Phi, Stat::Psi, Stat::Sigma, Stat::Ext, Stat::ExtSemisimple];

    pub fn name(self) -> &'static str {
        match self {
            Stat::CumulativePhi => "Phi",
            Stat::Phi => "phi",
            Stat::Psi => "psi",
            Stat::Sigma => "sigma",
            Stat::Ext => "ext",
            Stat::ExtSemisimple => "ext-ss",
        }
    }

    /// Smallest meaningful `k`.
    pub fn k_min(self) -> usize {
        match self {
            Stat::Sigma => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stat::ALL.into_iter().find(|st| st.name() == s).ok_or_else(|| domain(format!("unknown statistic {s:?}")))
    }
}

/// Rows `Φ(0..=k_max+3, 1..=n_max)` with every derived statistic for
/// `k <= k_max` available without recomputation.
#[derive(Clone, Debug)]
pub struct Counts {
    k_max: usize,
    n_max: usize,
    cumulative: Vec<BigSeq>,
    theta: Vec<BigInt>,
}

impl Counts {
    pub fn new(k_max: usize, n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(domain("n_max must be at least 1"));
        }
        let mut cumulative = vec![BigSeq::unit(n_max)];
        for k in 1..=k_max + 3 {
            let next = euler_transform(&cumulative[k - 1])?;
            cumulative.push(next);
        }
        let p = partition_seq(n_max)?;
        if p != cumulative[2] {
            return Err(Error::Arithmetic("Φ(2, *) differs from the partition numbers".into()));
        }
        Ok(Counts { k_max, n_max, cumulative, theta: theta_seq(n_max) })
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn check(&self, k: usize, n: usize) {
        assert!(k <= self.k_max, "k = {k} exceeds k_max = {}", self.k_max);
        assert!(n >= 1 && n <= self.n_max, "n = {n} outside 1..={}", self.n_max);
    }

    fn cum(&self, k: usize, n: usize) -> &BigInt {
        self.cumulative[k].term(n)
    }

    pub fn cumulative_phi(&self, k: usize, n: usize) -> BigInt {
        self.check(k, n);
        self.cum(k, n).clone()
    }

    /// The whole row `Φ(k, 1..=n_max)`, for `k <= k_max + 3`.
    pub fn cumulative_row(&self, k: usize) -> &BigSeq {
        &self.cumulative[k]
    }

    fn phi_raw(&self, k: usize, n: usize) -> BigInt {
        if k == 0 {
            self.cum(0, n).clone()
        } else {
            self.cum(k, n) - self.cum(k - 1, n)
        }
    }

    pub fn phi(&self, k: usize, n: usize) -> BigInt {
        self.check(k, n);
        self.phi_raw(k, n)
    }

    fn psi_raw(&self, k: usize, n: usize) -> BigInt {
        if k == 0 {
            BigInt::one()
        } else {
            self.phi_raw(k + 1, n)
        }
    }

    pub fn psi(&self, k: usize, n: usize) -> BigInt {
        self.check(k, n);
        self.psi_raw(k, n)
    }

    /// `σ(k, n)` for `k >= 1`; `σ(k, 1) = 0`.
    pub fn sigma(&self, k: usize, n: usize) -> BigInt {
        self.check(k, n);
        assert!(k >= 1, "σ is defined for k >= 1");
        if n == 1 {
            BigInt::zero()
        } else if k == 1 {
            self.psi_raw(2, n) + 1 - &self.theta[n - 2]
        } else {
            self.phi_raw(k + 2, n)
        }
    }

    pub fn ext(&self, k: usize, n: usize) -> BigInt {
        self.check(k, n);
        if k == 0 {
            self.cum(3, n).clone()
        } else {
            self.psi_raw(k + 2, n)
        }
    }

    pub fn ext_semisimple(&self, k: usize, n: usize) -> BigInt {
        self.check(k, n);
        if k == 0 {
            self.cum(2, n).clone()
        } else {
            self.phi_raw(k + 2, n)
        }
    }

    pub fn stat(&self, stat: Stat, k: usize, n: usize) -> BigInt {
        match stat {
            Stat::CumulativePhi => self.cumulative_phi(k, n),
            Stat::Phi => self.phi(k, n),
            Stat::Psi => self.psi(k, n),
            Stat::Sigma => self.sigma(k, n),
            Stat::Ext => self.ext(k, n),
            Stat::ExtSemisimple => self.ext_semisimple(k, n),
        }
    }

    /// `p(n)` for `0 <= n <= n_max`.
    pub fn partition(&self, n: usize) -> BigInt {
        if n == 0 {
            BigInt::one()
        } else {
            self.cum(2, n).clone()
        }
    }

    /// `θ(n)` for `0 <= n <= n_max`.
    pub fn theta(&self, n: usize) -> BigInt {
        self.theta[n].clone()
    }
}

/// Trees of slope at most `k` with `n` leaves.
pub fn cumulative_phi(k: usize, n: usize) -> BigInt {
    Counts::new(k, n).expect("n >= 1").cumulative_phi(k, n)
}

pub fn phi(k: usize, n: usize) -> BigInt {
    Counts::new(k, n).expect("n >= 1").phi(k, n)
}

pub fn psi(k: usize, n: usize) -> BigInt {
    Counts::new(k, n).expect("n >= 1").psi(k, n)
}

pub fn sigma(k: usize, n: usize) -> BigInt {
    Counts::new(k, n).expect("n >= 1").sigma(k, n)
}

pub fn ext_count(k: usize, n: usize) -> BigInt {
    Counts::new(k, n).expect("n >= 1").ext(k, n)
}

pub fn ext_semisimple_count(k: usize, n: usize) -> BigInt {
    Counts::new(k, n).expect("n >= 1").ext_semisimple(k, n)
}

/// Equipped star-shaped fission graphs of rank `n`. Both closed forms are
/// evaluated and must agree.
pub fn big_n1(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(domain("N1(n) needs n >= 2"));
    }
    let p = partitions_by_pentagonal(n);
    let mut direct = BigInt::from(n / 2) + 2 - BigInt::from(n);
    for j in 2..n {
        direct += p.term(j);
    }
    let theta = theta_seq(n);
    let via_theta = &theta[n - 1] - BigInt::from(n.div_ceil(2));
    if direct != via_theta {
        return Err(Error::Arithmetic(format!("N1({n}): {direct} != {via_theta}")));
    }
    Ok(direct)
}

/// Star-shaped graphs with `n` nodes.
pub fn big_n2(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(domain("N2(n) needs n >= 2"));
    }
    let p_prev = partitions_by_pentagonal(n - 1).term(n - 1).clone();
    Ok(p_prev - BigInt::from((n - 1) / 2))
}

/// Closed forms for the columns `n = 3, 4, 5, 6` of the `φ` table.
/// Only column 4 carries a proof; see [`closed_form_is_experimental`].
pub fn closed_form_phi(column: usize, k: u64) -> Result<BigInt> {
    if k == 0 {
        return Err(domain("closed forms are stated for k >= 1"));
    }
    let k = BigInt::from(k);
    let (num, den) = match column {
        3 => (k.clone(), 1),
        4 => (&k * &k, 1),
        5 => (&k * (BigInt::from(5) * &k * &k - BigInt::from(3) * &k + 4), 6),
        6 => (&k * (BigInt::from(2) * k.pow(3) - BigInt::from(2) * &k * &k + BigInt::from(4) * &k - 1), 3),
        _ => return Err(domain(format!("no closed form for column {column}"))),
    };
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Arithmetic(format!("column {column} polynomial is not integral at k = {k}")));
    }
    Ok(q)
}

pub fn closed_form_is_experimental(column: usize) -> bool {
    matches!(column, 5 | 6)
}

/// Number of ADE Dynkin diagrams with `n` nodes.
pub fn dynkin_count(n: usize) -> Result<u32> {
    match n {
        0 | 1 => Err(domain("Dynkin counts are tabulated for n >= 2")),
        2 | 3 => Ok(1),
        4 | 5 => Ok(2),
        6..=8 => Ok(3),
        _ => Ok(2),
    }
}

/// One row of the simply-laced supernova table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table4Row {
    pub nodes: usize,
    pub starshaped: BigInt,
    pub other: BigInt,
    pub total: BigInt,
    pub non_dynkin: BigInt,
}

pub fn table4_row(n: usize) -> Result<Table4Row> {
    let starshaped = big_n2(n)?;
    let total = sigma(1, n);
    let dynkin = dynkin_count(n)?;
    Ok(Table4Row {
        nodes: n,
        other: &total - &starshaped,
        non_dynkin: &total - BigInt::from(dynkin),
        starshaped,
        total,
    })
}
