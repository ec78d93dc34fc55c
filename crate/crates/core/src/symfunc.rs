//! Schur-basis arithmetic: inner products, Littlewood–Richardson products,
//! power-sum plethysm and its adjoint.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Composition, Partition};
use crate::tableau::{enumerate_ssyt, lr_filter};

fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

/// A homogeneous symmetric function in the Schur basis.
///
/// ```
/// use tabsieve::{Partition, SchurExpansion};
/// let p2 = SchurExpansion::plethysm_power(2, &SchurExpansion::schur("2".parse().unwrap()));
/// assert_eq!(p2.to_string(), "+1*[4] -1*[3,1] +1*[2,2]");
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        SchurExpansion::schur(Partition::empty())
    }

    pub fn schur(lam: Partition) -> Self {
        SchurExpansion {
            degree: lam.size(),
            terms: BTreeMap::from([(lam, 1)]),
        }
    }

    /// Builds an expansion, merging repeated keys and dropping zeros.
    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, i64)>,
    ) -> Result<Self> {
        let mut out = SchurExpansion::zero(degree);
        for (lam, c) in terms {
            if lam.size() != degree {
                return Err(Error::WeightMismatch {
                    expected: degree,
                    found: lam.size(),
                });
            }
            out.add_term(lam, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, lam: Partition, c: i64) {
        if c == 0 {
            return;
        }
        let total = add(self.coefficient(&lam), c);
        if total == 0 {
            self.terms.remove(&lam);
        } else {
            self.terms.insert(lam, total);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lam: &Partition) -> i64 {
        self.terms.get(lam).copied().unwrap_or(0)
    }

    /// Terms in lexicographically decreasing order of partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = SchurExpansion::zero(self.degree);
        for (p, c) in self.terms() {
            out.add_term(p.clone(), mul(c, k));
        }
        out
    }

    /// Sum; the degrees must agree unless one side is zero.
    pub fn plus(&self, other: &SchurExpansion) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::WeightMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    /// `p_k ∘ self`.
    pub fn plethysm_power(k: usize, f: &SchurExpansion) -> SchurExpansion {
        plethysm_power(k, f)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let parts: Vec<String> = p.parts().iter().map(usize::to_string).collect();
            write!(f, "{}{}*[{}]", if c < 0 { "-" } else { "+" }, c.unsigned_abs(), parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for SchurExpansion {
    type Err = Error;

    /// Parses the display format. The zero expansion `0` gets degree 0.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(SchurExpansion::zero(0));
        }
        let mut terms = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::Parse(format!("bad term {tok:?}"));
            let (coef, rest) = tok.split_once("*[").ok_or_else(bad)?;
            let inner = rest.strip_suffix(']').ok_or_else(bad)?;
            let c: i64 = coef.parse().map_err(|_| bad())?;
            let lam: Partition = if inner.is_empty() {
                Partition::empty()
            } else {
                inner.parse()?
            };
            terms.push((lam, c));
        }
        let degree = terms.first().map_or(0, |(p, _)| p.size());
        SchurExpansion::from_terms(degree, terms)
    }
}

/// `Σ f(κ)·g(κ)`; zero when the degrees differ.
pub fn inner_product(f: &SchurExpansion, g: &SchurExpansion) -> i64 {
    if f.degree != g.degree {
        return 0;
    }
    f.terms
        .iter()
        .filter_map(|(p, &a)| g.terms.get(p).map(|&b| mul(a, b)))
        .fold(0, add)
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, i64>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^λ_{μν}`, counted by Yamanouchi skew tableaux of shape `λ/μ` and content `ν`.
///
/// ```
/// use tabsieve::symfunc::lr_coefficient;
/// let p = |s: &str| s.parse().unwrap();
/// assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
/// ```
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lam: &Partition) -> i64 {
    let (mu, nu) = if mu.size() >= nu.size() { (mu, nu) } else { (nu, mu) };
    if lam.size() != mu.size() + nu.size() || !lam.contains(mu) || !lam.contains(nu) {
        return 0;
    }
    let key = (mu.clone(), nu.clone(), lam.clone());
    if let Some(&c) = lr_cache().lock().unwrap().get(&key) {
        return c;
    }
    let content = Composition::new(nu.parts().to_vec());
    let ts = enumerate_ssyt(lam, mu, &content).expect("weights checked");
    let c = lr_filter(ts).len() as i64;
    lr_cache().lock().unwrap().insert(key, c);
    c
}

/// Bilinear extension of `s_μ s_ν = Σ c^λ_{μν} s_λ`.
///
/// ```
/// use tabsieve::symfunc::{schur_product, SchurExpansion};
/// let s2 = SchurExpansion::schur("2".parse().unwrap());
/// assert_eq!(schur_product(&s2, &s2).to_string(), "+1*[4] +1*[3,1] +1*[2,2]");
/// ```
pub fn schur_product(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    let degree = f.degree + g.degree;
    let mut out = SchurExpansion::zero(degree);
    if f.is_zero() || g.is_zero() {
        return out;
    }
    let shapes = partitions_of(degree);
    for (mu, &a) in &f.terms {
        for (nu, &b) in &g.terms {
            let ab = mul(a, b);
            for lam in &shapes {
                let c = lr_coefficient(mu, nu, lam);
                if c != 0 {
                    out.add_term(lam.clone(), mul(ab, c));
                }
            }
        }
    }
    out
}

/// Kostka numbers `K_{λμ}` for all partitions of one degree.
#[derive(Debug)]
pub struct KostkaTable {
    shapes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl KostkaTable {
    /// Built by peeling off horizontal strips, one letter at a time.
    pub fn new(degree: usize) -> Self {
        let shapes = partitions_of(degree);
        let index = shapes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut values = vec![vec![0i64; shapes.len()]; shapes.len()];
        for (b, mu) in shapes.iter().enumerate() {
            let mut memo = HashMap::new();
            for (a, lam) in shapes.iter().enumerate() {
                values[a][b] = kostka_rec(lam, mu.parts(), &mut memo);
            }
        }
        KostkaTable {
            shapes,
            index,
            values,
        }
    }

    /// Shared table for `degree`, built on first use.
    pub fn for_degree(degree: usize) -> Arc<KostkaTable> {
        static TABLES: OnceLock<Mutex<HashMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
        let tables = TABLES.get_or_init(Default::default);
        if let Some(t) = tables.lock().unwrap().get(&degree) {
            return Arc::clone(t);
        }
        let table = Arc::new(KostkaTable::new(degree));
        tables
            .lock()
            .unwrap()
            .entry(degree)
            .or_insert(table)
            .clone()
    }

    /// Partitions of the degree, lexicographically decreasing.
    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn get(&self, lam: &Partition, mu: &Partition) -> i64 {
        match (self.index.get(lam), self.index.get(mu)) {
            (Some(&a), Some(&b)) => self.values[a][b],
            _ => 0,
        }
    }
}

fn kostka_rec(lam: &Partition, content: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
    let Some((&last, rest)) = content.split_last() else {
        return i64::from(lam.is_empty());
    };
    let key = (lam.clone(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for nu in horizontal_strips_below(lam, last) {
        total = add(total, kostka_rec(&nu, rest, memo));
    }
    memo.insert(key, total);
    total
}

/// Every `ν ⊆ λ` with `λ/ν` a horizontal strip of `size` cells.
pub fn horizontal_strips_below(lam: &Partition, size: usize) -> Vec<Partition> {
    fn go(lam: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > lam.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip rows decrease"));
            }
            return;
        }
        let hi = lam.part(row);
        let lo = lam.part(row + 1);
        for keep in (lo..=hi).rev() {
            let take = hi - keep;
            if take > left {
                break;
            }
            cur.push(keep);
            go(lam, row + 1, left - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lam, 1, size, &mut Vec::new(), &mut out);
    out
}

/// Monomial coefficients `m_μ` of a Schur expansion.
fn to_monomial(f: &SchurExpansion) -> BTreeMap<Partition, i64> {
    let table = KostkaTable::for_degree(f.degree);
    let mut out = BTreeMap::new();
    for mu in table.shapes() {
        let c = f
            .terms
            .iter()
            .map(|(lam, &a)| mul(a, table.get(lam, mu)))
            .fold(0, add);
        if c != 0 {
            out.insert(mu.clone(), c);
        }
    }
    out
}

/// Inverts the unitriangular Kostka matrix, largest partition first.
fn from_monomial(degree: usize, m: &BTreeMap<Partition, i64>) -> SchurExpansion {
    let table = KostkaTable::for_degree(degree);
    let mut out = SchurExpansion::zero(degree);
    for nu in table.shapes() {
        let mut c = m.get(nu).copied().unwrap_or(0);
        for (lam, &a) in &out.terms {
            c = add(c, -mul(a, table.get(lam, nu)));
        }
        if c != 0 {
            out.terms.insert(nu.clone(), c);
        }
    }
    out
}

/// `p_k ∘ f`, via monomials: `m_ρ ↦ m_{kρ}`.
///
/// ```
/// use tabsieve::symfunc::{plethysm_power, SchurExpansion};
/// let s1 = SchurExpansion::schur("1".parse().unwrap());
/// assert_eq!(plethysm_power(2, &s1).to_string(), "+1*[2] -1*[1,1]");
/// ```
pub fn plethysm_power(k: usize, f: &SchurExpansion) -> SchurExpansion {
    assert!(k >= 1, "power-sum index must be positive");
    if k == 1 || f.is_zero() {
        let mut g = f.clone();
        g.degree *= k;
        return g;
    }
    let m: BTreeMap<Partition, i64> = to_monomial(f)
        .into_iter()
        .map(|(rho, c)| (rho.scaled(k), c))
        .collect();
    from_monomial(k * f.degree, &m)
}

/// `φ_k(s_λ)`: the signed product over the k-quotient, or zero if the k-core is nonempty.
///
/// ```
/// use tabsieve::symfunc::phi_adjoint;
/// assert_eq!(phi_adjoint(2, &"2,2".parse().unwrap()).to_string(), "+1*[2] +1*[1,1]");
/// assert!(phi_adjoint(2, &"2,1".parse().unwrap()).is_zero());
/// ```
pub fn phi_adjoint(k: usize, lam: &Partition) -> SchurExpansion {
    assert!(k >= 1, "power-sum index must be positive");
    let Ok(quotient) = lam.r_quotient(k) else {
        return SchurExpansion::zero(lam.size() / k);
    };
    let sign = lam.r_sign(k).expect("core is empty");
    quotient
        .into_iter()
        .fold(SchurExpansion::one(), |acc, q| {
            schur_product(&acc, &SchurExpansion::schur(q))
        })
        .scale(sign)
}

type PlethKey = (usize, usize, Partition);

fn pleth_cache() -> &'static Mutex<HashMap<PlethKey, Arc<SchurExpansion>>> {
    static CACHE: OnceLock<Mutex<HashMap<PlethKey, Arc<SchurExpansion>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `(p_k ∘ s_μ)^d`, cached.
pub fn power_plethysm_product(k: usize, d: usize, mu: &Partition) -> Arc<SchurExpansion> {
    let key = (k, d, mu.clone());
    if let Some(e) = pleth_cache().lock().unwrap().get(&key) {
        return Arc::clone(e);
    }
    let base = plethysm_power(k, &SchurExpansion::schur(mu.clone()));
    let mut acc = SchurExpansion::one();
    for _ in 0..d {
        acc = schur_product(&acc, &base);
    }
    let acc = Arc::new(acc);
    pleth_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(acc)
        .clone()
}

/// `⟨p_{n/d}^d ∘ s_μ, s_λ⟩`.
///
/// ```
/// use tabsieve::symfunc::plethysm_coefficient;
/// let p = |s: &str| s.parse().unwrap();
/// assert_eq!(plethysm_coefficient(2, 1, &p("1"), &p("1,1")).unwrap(), -1);
/// assert_eq!(plethysm_coefficient(2, 2, &p("1"), &p("1,1")).unwrap(), 1);
/// ```
pub fn plethysm_coefficient(n: usize, d: usize, mu: &Partition, lam: &Partition) -> Result<i64> {
    if d == 0 || n % d != 0 {
        return Err(Error::NotDivisor { n, d });
    }
    if n * mu.size() != lam.size() {
        return Err(Error::WeightMismatch {
            expected: lam.size(),
            found: n * mu.size(),
        });
    }
    Ok(power_plethysm_product(n / d, d, mu).coefficient(lam))
}
