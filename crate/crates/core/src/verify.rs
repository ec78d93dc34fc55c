//! Fixed-point counts of evacuation and promotion powers, checked against
//! plethysm coefficients and ribbon tableau counts.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jdt::{evacuate, promote};
use crate::partition::{partitions_bounded, Composition, Partition};
use crate::ribbon::enumerate_ribbon_tableaux;
use crate::symfunc::{plethysm_coefficient, power_plethysm_product};
use crate::tableau::{enumerate_ssyt, is_yamanouchi, SkewTableau};

fn too_many(what: &'static str, p: &Partition, max: usize) -> Result<()> {
    if p.len() > max {
        Err(Error::TooManyParts {
            what,
            found: p.len(),
            max,
        })
    } else {
        Ok(())
    }
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

/// `μ̄μ`: the parts of `μ` (padded to `m`) reversed, then in order.
pub fn evac_content(mu: &Partition, m: usize) -> Result<Composition> {
    let c = Composition::from_partition(mu, m)?;
    Ok(c.reversed().concat(&c))
}

/// `μ^n`: the parts of `μ` (padded to `m`) repeated `n` times.
pub fn prom_content(mu: &Partition, m: usize, n: usize) -> Result<Composition> {
    Ok(Composition::from_partition(mu, m)?.repeat(n))
}

/// Anti-Yamanouchi in `1..=m` and Yamanouchi in `m+1..=2m`.
pub fn is_eytab_word(w: &[u32], m: usize) -> bool {
    let m = m as u32;
    is_yamanouchi(w, 1, m, true) && is_yamanouchi(w, m + 1, 2 * m, false)
}

/// Yamanouchi in every block `km+1..=(k+1)m`.
pub fn is_pytab_word(w: &[u32], m: usize, n: usize) -> bool {
    (0..n as u32).all(|k| is_yamanouchi(w, k * m as u32 + 1, (k + 1) * m as u32, false))
}

/// All of `Tab(λ, μ̄μ)`.
pub fn tab_evac(lam: &Partition, mu: &Partition, m: usize) -> Result<Vec<SkewTableau>> {
    positive("m", m)?;
    too_many("λ", lam, 2 * m)?;
    too_many("μ", mu, m)?;
    if 2 * mu.size() != lam.size() {
        return Err(Error::WeightMismatch {
            expected: lam.size(),
            found: 2 * mu.size(),
        });
    }
    enumerate_ssyt(lam, &Partition::empty(), &evac_content(mu, m)?)
}

/// All of `Tab(λ, μ^n)`.
pub fn tab_prom(lam: &Partition, mu: &Partition, m: usize, n: usize) -> Result<Vec<SkewTableau>> {
    positive("m", m)?;
    positive("n", n)?;
    too_many("λ", lam, m * n)?;
    too_many("μ", mu, m)?;
    if n * mu.size() != lam.size() {
        return Err(Error::WeightMismatch {
            expected: lam.size(),
            found: n * mu.size(),
        });
    }
    enumerate_ssyt(lam, &Partition::empty(), &prom_content(mu, m, n)?)
}

/// `EYTab(λ, μ̄μ)`.
///
/// ```
/// use tabsieve::verify::enumerate_eytab;
/// let ts = enumerate_eytab(&"2,2".parse().unwrap(), &"2".parse().unwrap(), 1).unwrap();
/// assert_eq!(ts.len(), 1);
/// assert_eq!(ts[0].to_string(), "1,1/2,2");
/// ```
pub fn enumerate_eytab(lam: &Partition, mu: &Partition, m: usize) -> Result<Vec<SkewTableau>> {
    Ok(tab_evac(lam, mu, m)?
        .into_iter()
        .filter(|t| is_eytab_word(&t.reading_word(), m))
        .collect())
}

/// `PYTab(λ, μ^n)`.
pub fn enumerate_pytab(
    lam: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
) -> Result<Vec<SkewTableau>> {
    Ok(tab_prom(lam, mu, m, n)?
        .into_iter()
        .filter(|t| is_pytab_word(&t.reading_word(), m, n))
        .collect())
}

/// `m` promotions on the alphabet `1..=mn`.
pub fn j_action(t: &SkewTableau, m: usize, n: usize) -> Result<SkewTableau> {
    let s = m * n;
    let mut cur = t.clone();
    for _ in 0..m {
        cur = promote(&cur, s)?;
    }
    Ok(cur)
}

/// Counts `x` with `g^power(x) = x`, where `g` must map `set` into itself.
fn fixed_points_of_power(
    set: &[SkewTableau],
    power: usize,
    action: &'static str,
    set_name: &'static str,
    g: impl Fn(&SkewTableau) -> Result<SkewTableau>,
) -> Result<usize> {
    let index: HashMap<&SkewTableau, usize> = set.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut image = Vec::with_capacity(set.len());
    for t in set {
        let u = g(t)?;
        match index.get(&u) {
            Some(&k) => image.push(k),
            None => {
                return Err(Error::ClosureViolation {
                    action,
                    set: set_name,
                    tableau: t.to_string(),
                })
            }
        }
    }
    Ok((0..set.len())
        .filter(|&start| {
            let mut k = start;
            for _ in 0..power {
                k = image[k];
            }
            k == start
        })
        .count())
}

/// Self-evacuating tableaux in `EYTab` (restricted) or `Tab(λ, μ̄μ)`.
pub fn evac_fixed_count(lam: &Partition, mu: &Partition, m: usize, restricted: bool) -> Result<usize> {
    let (set, name) = if restricted {
        (enumerate_eytab(lam, mu, m)?, "EYTab")
    } else {
        (tab_evac(lam, mu, m)?, "Tab")
    };
    fixed_points_of_power(&set, 1, "evacuation", name, |t| evacuate(t, 2 * m))
}

/// Tableaux fixed by `j^power`, with `j = pr^m`. `λ` must be rectangular.
pub fn prom_power_fixed_count(
    lam: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
    power: usize,
    restricted: bool,
) -> Result<usize> {
    if !lam.is_rectangular() {
        return Err(Error::NotRectangular(lam.clone()));
    }
    let (set, name) = if restricted {
        (enumerate_pytab(lam, mu, m, n)?, "PYTab")
    } else {
        (tab_prom(lam, mu, m, n)?, "Tab")
    };
    fixed_points_of_power(&set, power, "promotion", name, |t| j_action(t, m, n))
}

/// Tableaux fixed by `j^d` for a divisor `d` of `n`.
pub fn prom_fixed_count(
    lam: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
    d: usize,
    restricted: bool,
) -> Result<usize> {
    if d == 0 || n % d != 0 {
        return Err(Error::NotDivisor { n, d });
    }
    prom_power_fixed_count(lam, mu, m, n, d, restricted)
}

/// `ε_k(λ)`, taken as `+1` when the k-core is nonempty (the paired coefficient is then zero).
fn sign_or_one(lam: &Partition, k: usize) -> i64 {
    lam.r_sign(k).unwrap_or(1)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReportInputs {
    pub lam: Partition,
    pub mu: Partition,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ell: Option<usize>,
}

/// Outcome of one check: `pass` iff `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub inputs: ReportInputs,
    pub lhs: i64,
    pub rhs: i64,
    /// Sign applied to `coefficient` to form `rhs`.
    pub sign: i64,
    /// The unsigned side: a plethysm coefficient, LR coefficient or ribbon count.
    pub coefficient: i64,
    /// `Some(σ)` with `lhs = σ·coefficient` when `coefficient ≠ 0`; `Some(0)` if no sign fits;
    /// `None` (indeterminate) when `coefficient = 0`.
    pub empirical_sign: Option<i64>,
    pub pass: bool,
}

impl VerificationReport {
    fn new(theorem: &str, inputs: ReportInputs, lhs: i64, sign: i64, coefficient: i64) -> Self {
        let rhs = sign * coefficient;
        let empirical_sign = if coefficient == 0 {
            None
        } else if lhs == coefficient {
            Some(1)
        } else if lhs == -coefficient {
            Some(-1)
        } else {
            Some(0)
        };
        VerificationReport {
            theorem: theorem.to_string(),
            inputs,
            lhs,
            rhs,
            sign,
            coefficient,
            empirical_sign,
            pass: lhs == rhs,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn tsv_header() -> &'static str {
        "theorem\tlam\tmu\tm\tn\td\tell\tlhs\trhs\tsign\tcoefficient\tempirical_sign\tpass"
    }

    pub fn to_tsv(&self) -> String {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        let mut s = String::new();
        write!(
            s,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.theorem,
            self.inputs.lam,
            self.inputs.mu,
            self.inputs.m,
            opt(self.inputs.n),
            opt(self.inputs.d),
            opt(self.inputs.ell),
            self.lhs,
            self.rhs,
            self.sign,
            self.coefficient,
            self.empirical_sign
                .map_or("indeterminate".to_string(), |x| x.to_string()),
            self.pass
        )
        .unwrap();
        s
    }
}

fn inputs(lam: &Partition, mu: &Partition, m: usize) -> ReportInputs {
    ReportInputs {
        lam: lam.clone(),
        mu: mu.clone(),
        m,
        n: None,
        d: None,
        ell: None,
    }
}

/// Self-evacuating `EYTab` elements against `ε_2(λ)·⟨p_2 ∘ s_μ, s_λ⟩`.
///
/// ```
/// use tabsieve::verify::check_mainevac;
/// let r = check_mainevac(&"3,1".parse().unwrap(), &"2".parse().unwrap(), 1).unwrap();
/// assert_eq!((r.lhs, r.rhs, r.sign, r.pass), (1, 1, -1, true));
/// ```
pub fn check_mainevac(lam: &Partition, mu: &Partition, m: usize) -> Result<VerificationReport> {
    let lhs = evac_fixed_count(lam, mu, m, true)? as i64;
    let coef = plethysm_coefficient(2, 1, mu, lam)?;
    Ok(VerificationReport::new(
        "mainevac",
        inputs(lam, mu, m),
        lhs,
        sign_or_one(lam, 2),
        coef,
    ))
}

/// `j^d`-fixed `PYTab` elements against `ε_{n/d}(λ)·⟨p_{n/d}^d ∘ s_μ, s_λ⟩`.
pub fn check_mainprom(
    lam: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
    d: usize,
) -> Result<VerificationReport> {
    let lhs = prom_fixed_count(lam, mu, m, n, d, true)? as i64;
    let coef = plethysm_coefficient(n, d, mu, lam)?;
    let mut inp = inputs(lam, mu, m);
    inp.n = Some(n);
    inp.d = Some(d);
    Ok(VerificationReport::new(
        "mainprom",
        inp,
        lhs,
        sign_or_one(lam, n / d),
        coef,
    ))
}

/// `j^ℓ`-fixed `PYTab` elements against the `gcd(n, ℓ)` coefficient.
pub fn check_corprom(
    lam: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
    ell: usize,
) -> Result<VerificationReport> {
    positive("n", n)?;
    let lhs = prom_power_fixed_count(lam, mu, m, n, ell, true)? as i64;
    let g = gcd(n, ell);
    let coef = plethysm_coefficient(n, g, mu, lam)?;
    let mut inp = inputs(lam, mu, m);
    inp.n = Some(n);
    inp.ell = Some(ell);
    Ok(VerificationReport::new(
        "corprom",
        inp,
        lhs,
        sign_or_one(lam, n / g),
        coef,
    ))
}

fn ribbon_count(lam: &Partition, r: usize, content: &Composition) -> Result<i64> {
    match enumerate_ribbon_tableaux(lam, r, content) {
        Ok(ts) => Ok(ts.len() as i64),
        Err(Error::NonEmptyCore { .. }) => Ok(0),
        Err(e) => Err(e),
    }
}

/// Self-evacuating elements of `Tab(λ, μ̄μ)` against domino tableaux of content `μ`.
pub fn check_stembridge(lam: &Partition, mu: &Partition, m: usize) -> Result<VerificationReport> {
    let lhs = evac_fixed_count(lam, mu, m, false)? as i64;
    let count = ribbon_count(lam, 2, &Composition::from_partition(mu, m)?)?;
    Ok(VerificationReport::new(
        "stembridge",
        inputs(lam, mu, m),
        lhs,
        1,
        count,
    ))
}

/// `j^d`-fixed elements of `Tab(λ, μ^n)` against `(n/d)`-ribbon tableaux of content `μ^d`.
pub fn check_rhoades(
    lam: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
    d: usize,
) -> Result<VerificationReport> {
    let lhs = prom_fixed_count(lam, mu, m, n, d, false)? as i64;
    let count = ribbon_count(lam, n / d, &prom_content(mu, m, d)?)?;
    let mut inp = inputs(lam, mu, m);
    inp.n = Some(n);
    inp.d = Some(d);
    Ok(VerificationReport::new("rhoades", inp, lhs, 1, count))
}

/// `|EYTab(λ, μ̄μ)| = ⟨s_μ², s_λ⟩`.
pub fn check_lr_eytab(lam: &Partition, mu: &Partition, m: usize) -> Result<VerificationReport> {
    let lhs = enumerate_eytab(lam, mu, m)?.len() as i64;
    let coef = power_plethysm_product(1, 2, mu).coefficient(lam);
    Ok(VerificationReport::new("lr-eytab", inputs(lam, mu, m), lhs, 1, coef))
}

/// `|PYTab(λ, μ^n)| = ⟨s_μ^n, s_λ⟩`.
pub fn check_lr_pytab(
    lam: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
) -> Result<VerificationReport> {
    let lhs = enumerate_pytab(lam, mu, m, n)?.len() as i64;
    let coef = power_plethysm_product(1, n, mu).coefficient(lam);
    let mut inp = inputs(lam, mu, m);
    inp.n = Some(n);
    Ok(VerificationReport::new("lr-pytab", inp, lhs, 1, coef))
}

/// Which family of checks a sweep runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Mainevac,
    Mainprom,
    Corprom,
    Stembridge,
    Rhoades,
    LrEytab,
    LrPytab,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::Mainevac,
        Theorem::Mainprom,
        Theorem::Corprom,
        Theorem::Stembridge,
        Theorem::Rhoades,
        Theorem::LrEytab,
        Theorem::LrPytab,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Mainevac => "mainevac",
            Theorem::Mainprom => "mainprom",
            Theorem::Corprom => "corprom",
            Theorem::Stembridge => "stembridge",
            Theorem::Rhoades => "rhoades",
            Theorem::LrEytab => "lr-eytab",
            Theorem::LrPytab => "lr-pytab",
        }
    }

    pub fn from_name(s: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.name() == s)
    }
}

/// Bounds for a sweep.
///
/// Evacuation checks use `m ≤ max_m` and `|λ| ≤ max_weight`. Promotion checks use
/// `2 ≤ n ≤ max_n`, `m ≤ max_m`, `|λ| ≤ max_weight` and, if set, `|μ| ≤ max_mu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    pub max_weight: usize,
    pub max_m: usize,
    pub max_n: usize,
    pub max_mu: Option<usize>,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_weight: 6,
            max_m: 2,
            max_n: 3,
            max_mu: None,
        }
    }
}

impl SweepBounds {
    /// Reads `key = value` lines; `#` starts a comment. Keys: `max-weight`, `m`, `n`, `max-mu`.
    ///
    /// ```
    /// use tabsieve::verify::SweepBounds;
    /// let b = SweepBounds::from_config_str("max-weight = 8\n# comment\nm = 1\n").unwrap();
    /// assert_eq!((b.max_weight, b.max_m, b.max_n), (8, 1, 3));
    /// ```
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut b = SweepBounds::default();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {line:?}")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("{line:?}: {e}")))?;
            match key.trim().replace('_', "-").as_str() {
                "max-weight" => b.max_weight = value,
                "m" | "max-m" => b.max_m = value,
                "n" | "max-n" => b.max_n = value,
                "max-mu" => b.max_mu = Some(value),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        positive("max-weight", self.max_weight)?;
        positive("m", self.max_m)?;
        positive("n", self.max_n)
    }
}

#[derive(Debug, Clone)]
enum Instance {
    Evac(Theorem, Partition, Partition, usize),
    Prom(Theorem, Partition, Partition, usize, usize, usize),
    Lr(Partition, Partition, usize, usize),
}

impl Instance {
    fn run(&self) -> Result<VerificationReport> {
        match self {
            Instance::Evac(Theorem::Mainevac, lam, mu, m) => check_mainevac(lam, mu, *m),
            Instance::Evac(Theorem::Stembridge, lam, mu, m) => check_stembridge(lam, mu, *m),
            Instance::Evac(_, lam, mu, m) => check_lr_eytab(lam, mu, *m),
            Instance::Prom(Theorem::Mainprom, lam, mu, m, n, d) => check_mainprom(lam, mu, *m, *n, *d),
            Instance::Prom(Theorem::Rhoades, lam, mu, m, n, d) => check_rhoades(lam, mu, *m, *n, *d),
            Instance::Prom(_, lam, mu, m, n, ell) => check_corprom(lam, mu, *m, *n, *ell),
            Instance::Lr(lam, mu, m, n) => check_lr_pytab(lam, mu, *m, *n),
        }
    }
}

/// `(λ, μ, m)` with `|λ| = 2|μ| ≤ max_weight`, `μ ≠ ∅`.
pub fn evac_instances(bounds: &SweepBounds) -> Vec<(Partition, Partition, usize)> {
    let mut out = Vec::new();
    for m in 1..=bounds.max_m {
        for k in 1..=bounds.max_weight / 2 {
            for mu in partitions_bounded(k, m, k) {
                for lam in partitions_bounded(2 * k, 2 * m, 2 * k) {
                    out.push((lam, mu.clone(), m));
                }
            }
        }
    }
    out
}

/// `(λ, μ, m, n)` with rectangular `λ` of at most `mn` rows and `|λ| = n|μ|`.
pub fn prom_instances(bounds: &SweepBounds) -> Vec<(Partition, Partition, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=bounds.max_n {
        for m in 1..=bounds.max_m {
            let max_k = bounds.max_mu.unwrap_or(usize::MAX).min(bounds.max_weight / n);
            for k in 1..=max_k {
                for mu in partitions_bounded(k, m, k) {
                    let total = n * k;
                    for rows in 1..=(m * n).min(total) {
                        if total % rows == 0 {
                            out.push((Partition::rectangle(total / rows, rows), mu.clone(), m, n));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Runs every instance of `theorem` within `bounds` in parallel; output order is canonical.
pub fn sweep(theorem: Theorem, bounds: &SweepBounds) -> Result<Vec<VerificationReport>> {
    bounds.validate()?;
    let mut jobs = Vec::new();
    match theorem {
        Theorem::Mainevac | Theorem::Stembridge | Theorem::LrEytab => {
            for (lam, mu, m) in evac_instances(bounds) {
                jobs.push(Instance::Evac(theorem, lam, mu, m));
            }
        }
        Theorem::Mainprom | Theorem::Rhoades => {
            for (lam, mu, m, n) in prom_instances(bounds) {
                for d in (1..=n).filter(|d| n % d == 0) {
                    jobs.push(Instance::Prom(theorem, lam.clone(), mu.clone(), m, n, d));
                }
            }
        }
        Theorem::Corprom => {
            for (lam, mu, m, n) in prom_instances(bounds) {
                for ell in 0..n {
                    jobs.push(Instance::Prom(theorem, lam.clone(), mu.clone(), m, n, ell));
                }
            }
        }
        Theorem::LrPytab => {
            for (lam, mu, m, n) in prom_instances(bounds) {
                jobs.push(Instance::Lr(lam, mu, m, n));
            }
        }
    }
    jobs.par_iter().map(Instance::run).collect()
}

/// Every report whose empirical sign is determinate agrees with the sign used.
pub fn signs_consistent(reports: &[VerificationReport]) -> bool {
    reports
        .iter()
        .all(|r| r.empirical_sign.map_or(true, |s| s == r.sign))
}
