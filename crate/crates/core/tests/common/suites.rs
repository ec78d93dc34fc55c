//! Exhaustive property suites. Each returns the number of instances checked.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use tabsieve::crystal::{apply_e, apply_f, component_of, split_blocks, string_lengths, CrystalIndexSet};
use tabsieve::jdt::{demote, evacuate, inside_corners, promote, rectify, slide};
use tabsieve::ribbon::{enumerate_ribbon_tableaux, enumerate_yamanouchi_domino};
use tabsieve::symfunc::{phi_adjoint, plethysm_power, schur_product};
use tabsieve::{
    enumerate_ssyt_bounded, is_yamanouchi, partitions_of, Composition, Partition, SchurExpansion,
    SkewTableau,
};

use super::oracle::*;

pub type Outcome = Result<usize, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn straight_shapes(max_size: usize, max_parts: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(partitions_of)
        .filter(|p| p.len() <= max_parts)
        .collect()
}

/// Pairs `inner ⊆ outer` with `|outer| ≤ max_outer`.
pub fn skew_shapes(max_outer: usize) -> Vec<(Partition, Partition)> {
    let all = straight_shapes(max_outer, max_outer);
    let mut out = Vec::new();
    for outer in &all {
        for inner in &all {
            if inner.size() <= outer.size() && outer.contains(inner) {
                out.push((outer.clone(), inner.clone()));
            }
        }
    }
    out
}

pub fn tableaux(outer: &Partition, inner: &Partition, s: usize) -> Vec<SkewTableau> {
    enumerate_ssyt_bounded(outer, inner, s).expect("valid shape")
}

fn content(t: &SkewTableau, s: usize) -> Vec<usize> {
    t.content(s).expect("entries in range").parts().to_vec()
}

fn power(t: &SkewTableau, k: usize, g: impl Fn(&SkewTableau) -> SkewTableau) -> SkewTableau {
    (0..k).fold(t.clone(), |acc, _| g(&acc))
}

/// The tableau enumerator agrees with the brute-force filler.
pub fn ssyt_enumeration(max_outer: usize, s: usize) -> Outcome {
    let mut n = 0;
    for (outer, inner) in skew_shapes(max_outer) {
        let ours: BTreeSet<Vec<Vec<u32>>> = tableaux(&outer, &inner, s)
            .into_iter()
            .map(|t| t.rows().to_vec())
            .collect();
        let brute: BTreeSet<Vec<Vec<u32>>> = brute_ssyt(outer.parts(), inner.parts(), s as u32)
            .into_iter()
            .collect();
        ensure(ours == brute, || format!("fillings of {outer}/{inner} in {s} letters differ"))?;
        n += 1;
    }
    Ok(n)
}

fn all_rectifications(
    t: &SkewTableau,
    memo: &mut HashMap<SkewTableau, BTreeSet<SkewTableau>>,
) -> BTreeSet<SkewTableau> {
    if t.is_straight() {
        return BTreeSet::from([t.clone()]);
    }
    if let Some(r) = memo.get(t) {
        return r.clone();
    }
    let mut out = BTreeSet::new();
    for c in inside_corners(t) {
        let (next, _) = slide(t, c).expect("inside corner");
        out.extend(all_rectifications(&next, memo));
    }
    memo.insert(t.clone(), out.clone());
    out
}

/// Every order of inside corners rectifies to the same tableau.
pub fn jdt_confluence(max_outer: usize, s: usize) -> Outcome {
    let mut n = 0;
    let mut memo = HashMap::new();
    for (outer, inner) in skew_shapes(max_outer) {
        for t in tableaux(&outer, &inner, s) {
            let results = all_rectifications(&t, &mut memo);
            ensure(results == BTreeSet::from([rectify(&t)]), || {
                format!("{t}: corner orders give {} results", results.len())
            })?;
            n += 1;
        }
    }
    Ok(n)
}

pub fn promote_demote_inverse(max_size: usize, max_s: usize) -> Outcome {
    let mut n = 0;
    for s in 1..=max_s {
        for kappa in straight_shapes(max_size, s) {
            for t in tableaux(&kappa, &Partition::empty(), s) {
                let p = promote(&t, s).map_err(|e| e.to_string())?;
                let d = demote(&t, s).map_err(|e| e.to_string())?;
                ensure(demote(&p, s).unwrap() == t, || format!("demote(promote({t})) != {t}, s={s}"))?;
                ensure(promote(&d, s).unwrap() == t, || format!("promote(demote({t})) != {t}, s={s}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `pr^s = id` on rectangles `c^r` with `cr ≤ max_cells` and `r ≤ s ≤ max_s` (zero rows allowed);
/// `pr^s ≠ id` on every non-rectangular `κ` with `|κ| ≤ max_other` and `ℓ(κ) < s ≤ ℓ(κ) + 2`.
pub fn promotion_order(max_cells: usize, max_s: usize, max_other: usize) -> Outcome {
    let mut n = 0;
    for rows in 1..=max_cells {
        for c in 1..=max_cells / rows {
            let kappa = Partition::rectangle(c, rows);
            for s in rows..=max_s {
                for t in tableaux(&kappa, &Partition::empty(), s) {
                    let back = power(&t, s, |x| promote(x, s).unwrap());
                    ensure(back == t, || format!("pr^{s} moves {t}"))?;
                    n += 1;
                }
            }
        }
    }
    for kappa in straight_shapes(max_other, max_other) {
        if kappa.is_rectangular() {
            continue;
        }
        for s in kappa.len() + 1..=kappa.len() + 2 {
            let set = tableaux(&kappa, &Partition::empty(), s);
            let moved = set
                .iter()
                .any(|t| power(t, s, |x| promote(x, s).unwrap()) != *t);
            ensure(moved, || format!("pr^{s} fixes all of B_{kappa}"))?;
            n += 1;
        }
    }
    let kappa: Partition = "2,1".parse().unwrap();
    let pr = |x: &SkewTableau| promote(x, 3).unwrap();
    let orbits: Vec<usize> = tableaux(&kappa, &Partition::empty(), 3)
        .iter()
        .map(|t| (1..).find(|&k| power(t, k, pr) == *t).unwrap())
        .collect();
    ensure(orbits.contains(&2) && orbits.iter().all(|&k| k == 2 || k == 3), || {
        format!("promotion orbit lengths on B_(2,1), s = 3: {orbits:?}")
    })?;
    Ok(n)
}

/// `ξ² = id`, content reversal and `ξ e_i = f_{s−i} ξ`, `ξ f_i = e_{s−i} ξ`.
pub fn evacuation_properties(max_size: usize, max_s: usize) -> Outcome {
    let mut n = 0;
    for s in 1..=max_s {
        for kappa in straight_shapes(max_size, s) {
            for t in tableaux(&kappa, &Partition::empty(), s) {
                let x = evacuate(&t, s).unwrap();
                ensure(evacuate(&x, s).unwrap() == t, || format!("ξ² moves {t}, s={s}"))?;
                let mut rev = content(&t, s);
                rev.reverse();
                ensure(content(&x, s) == rev, || format!("ξ({t}) has wrong content"))?;
                for i in 1..s {
                    let lhs = apply_e(&t, i, s).unwrap().map(|u| evacuate(&u, s).unwrap());
                    ensure(lhs == apply_f(&x, s - i, s).unwrap(), || {
                        format!("ξ e_{i} != f_{} ξ at {t}", s - i)
                    })?;
                    let lhs = apply_f(&t, i, s).unwrap().map(|u| evacuate(&u, s).unwrap());
                    ensure(lhs == apply_e(&x, s - i, s).unwrap(), || {
                        format!("ξ f_{i} != e_{} ξ at {t}", s - i)
                    })?;
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `wt(pr T)` is the cyclic shift of `wt(T)` and `pr e_i = e_{i+1} pr` for `i ≤ s−2`.
pub fn promotion_crystal(max_size: usize, max_s: usize) -> Outcome {
    let mut n = 0;
    for s in 1..=max_s {
        for kappa in straight_shapes(max_size, s) {
            for t in tableaux(&kappa, &Partition::empty(), s) {
                let p = promote(&t, s).unwrap();
                let mut shifted = content(&t, s);
                shifted.rotate_right(1);
                ensure(content(&p, s) == shifted, || format!("pr({t}) has wrong content"))?;
                for i in 1..s.saturating_sub(1) {
                    let lhs = apply_e(&t, i, s).unwrap().map(|u| promote(&u, s).unwrap());
                    ensure(lhs == apply_e(&p, i + 1, s).unwrap(), || {
                        format!("pr e_{i} != e_{} pr at {t}", i + 1)
                    })?;
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Weight shifts, `e`/`f` partial inverses, string lengths, and agreement with the bracket rule.
pub fn crystal_axioms(max_outer: usize, max_s: usize) -> Outcome {
    let mut n = 0;
    for (outer, inner) in skew_shapes(max_outer) {
        let s = max_s;
        for t in tableaux(&outer, &inner, s) {
            let wt = content(&t, s);
            for i in 1..s {
                let e = apply_e(&t, i, s).unwrap();
                let f = apply_f(&t, i, s).unwrap();
                ensure(e == signature_op(&t, i as u32, true), || format!("e_{i} at {t} disagrees with bracketing"))?;
                ensure(f == signature_op(&t, i as u32, false), || format!("f_{i} at {t} disagrees with bracketing"))?;
                if let Some(u) = &e {
                    let mut w = wt.clone();
                    w[i - 1] += 1;
                    w[i] -= 1;
                    ensure(content(u, s) == w, || format!("e_{i} at {t} shifts weight wrongly"))?;
                    ensure(apply_f(u, i, s).unwrap().as_ref() == Some(&t), || format!("f_{i} e_{i} moves {t}"))?;
                }
                if let Some(u) = &f {
                    ensure(apply_e(u, i, s).unwrap().as_ref() == Some(&t), || format!("e_{i} f_{i} moves {t}"))?;
                }
                let (eps, phi) = string_lengths(&t, i, s).unwrap();
                ensure(phi as i64 - eps as i64 == wt[i - 1] as i64 - wt[i] as i64, || {
                    format!("string lengths at {t}, i={i}")
                })?;
                let mut k = 0;
                let mut cur = t.clone();
                while let Some(u) = apply_e(&cur, i, s).unwrap() {
                    cur = u;
                    k += 1;
                }
                ensure(k == eps, || format!("ε_{i}({t}) = {eps} but the e-string has length {k}"))?;
            }
            n += 1;
        }
    }
    Ok(n)
}

/// Yamanouchi iff every `e_i` vanishes; anti-Yamanouchi iff every `f_i` vanishes.
pub fn yamanouchi_vanishing(max_straight: usize, max_skew: usize, s: usize) -> Outcome {
    let mut n = 0;
    let mut shapes: Vec<(Partition, Partition)> = straight_shapes(max_straight, s)
        .into_iter()
        .map(|p| (p, Partition::empty()))
        .collect();
    shapes.extend(skew_shapes(max_skew).into_iter().filter(|(_, i)| !i.is_empty()));
    for (outer, inner) in shapes {
        for t in tableaux(&outer, &inner, s) {
            let w = t.reading_word();
            let e_dead = (1..s).all(|i| apply_e(&t, i, s).unwrap().is_none());
            let f_dead = (1..s).all(|i| apply_f(&t, i, s).unwrap().is_none());
            ensure(is_yamanouchi(&w, 1, s as u32, false) == e_dead, || format!("Yamanouchi test at {t}"))?;
            ensure(is_yamanouchi(&w, 1, s as u32, true) == f_dead, || format!("anti-Yamanouchi test at {t}"))?;
            n += 1;
        }
    }
    Ok(n)
}

/// Splitting into two blocks intertwines `ξ_{2m}` with `(U, V) ↦ (ξ_m V, ξ_m U)`.
pub fn split_evacuation(max_m: usize, max_size: usize) -> Outcome {
    let mut n = 0;
    for m in 1..=max_m {
        let s = 2 * m;
        for lam in straight_shapes(max_size, s) {
            for t in tableaux(&lam, &Partition::empty(), s) {
                let b = split_blocks(&t, m, 2).unwrap().blocks;
                let lhs = split_blocks(&evacuate(&t, s).unwrap(), m, 2).unwrap().blocks;
                let rhs = vec![evacuate(&b[1], m).unwrap(), evacuate(&b[0], m).unwrap()];
                ensure(lhs == rhs, || format!("split(ξ({t})) for m={m}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Splitting into `n` blocks turns `j^d` into a rotation by `d` places.
pub fn split_promotion(max_mn: usize, max_size: usize) -> Outcome {
    let mut count = 0;
    for m in 1..=max_mn {
        for n in 2..=max_mn / m {
            let s = m * n;
            for lam in straight_shapes(max_size, s).into_iter().filter(|p| p.is_rectangular()) {
                for t in tableaux(&lam, &Partition::empty(), s) {
                    let blocks = split_blocks(&t, m, n).unwrap().blocks;
                    let mut cur = t.clone();
                    for d in 1..=n {
                        cur = power(&cur, m, |x| promote(x, s).unwrap());
                        let got = split_blocks(&cur, m, n).unwrap().blocks;
                        let mut want = blocks.clone();
                        want.rotate_right(d);
                        ensure(got == want, || format!("split(j^{d}({t})), m={m}, n={n}"))?;
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

fn superstandard(shape: &Partition) -> SkewTableau {
    let rows = (1..=shape.len()).map(|i| vec![i as u32; shape.part(i)]).collect();
    SkewTableau::straight(rows).unwrap()
}

/// Blockwise Yamanouchi tableaux split into superstandard blocks.
pub fn highest_weight_blocks(max_mn: usize, max_size: usize) -> Outcome {
    let mut count = 0;
    for m in 1..=max_mn {
        for n in 1..=max_mn / m {
            let s = m * n;
            let set = CrystalIndexSet::blocks(m, n);
            for lam in straight_shapes(max_size, s) {
                for t in tableaux(&lam, &Partition::empty(), s) {
                    if !tabsieve::is_highest_weight(&t, &set) {
                        continue;
                    }
                    for b in split_blocks(&t, m, n).unwrap().blocks {
                        ensure(b == superstandard(b.outer()), || format!("block {b} of {t} is not superstandard"))?;
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

/// On each `ξ`-stable two-block component, fixed points of `ξ` correspond to pairs `(U, ξ_m U)`.
pub fn component_bijection(max_m: usize, max_size: usize) -> Outcome {
    let mut count = 0;
    for m in 1..=max_m {
        let s = 2 * m;
        let set = CrystalIndexSet::evacuation_blocks(m);
        for lam in straight_shapes(max_size, s) {
            let mut seen: BTreeSet<SkewTableau> = BTreeSet::new();
            for t in tableaux(&lam, &Partition::empty(), s) {
                if seen.contains(&t) {
                    continue;
                }
                let comp = component_of(&t, &set);
                seen.extend(comp.iter().cloned());
                let image: BTreeSet<SkewTableau> = comp.iter().map(|u| evacuate(u, s).unwrap()).collect();
                if image != comp {
                    ensure(image.is_disjoint(&comp), || format!("ξ splits the component of {t}"))?;
                    continue;
                }
                let fixed = comp.iter().filter(|u| evacuate(u, s).unwrap() == **u).count();
                let pairs = comp
                    .iter()
                    .filter(|u| {
                        let b = split_blocks(u, m, 2).unwrap().blocks;
                        b[1] == evacuate(&b[0], m).unwrap()
                    })
                    .count();
                let shape = split_blocks(&t, m, 2).unwrap().blocks[0].outer().clone();
                let block_size = tableaux(&shape, &Partition::empty(), m).len();
                ensure(fixed == pairs && pairs == block_size, || {
                    format!("component of {t}: {fixed} fixed, {pairs} pairs, {block_size} block tableaux")
                })?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Removable ribbons, core uniqueness, tiling sets and spin parity against rim peeling.
pub fn ribbon_tilings(max_size: usize, rs: &[usize]) -> Outcome {
    let mut n = 0;
    for &r in rs {
        for lam in straight_shapes(max_size, max_size) {
            let ours: BTreeSet<(Vec<usize>, Vec<(usize, usize)>)> = lam
                .removable_ribbons(r)
                .into_iter()
                .map(|(p, rb)| (p.parts().to_vec(), rb.cells().iter().map(|c| (c.row, c.col)).collect()))
                .collect();
            let brute: BTreeSet<_> = rim_removals(lam.parts(), r).into_iter().collect();
            ensure(ours == brute, || format!("removable {r}-ribbons of {lam}"))?;
            let (tilings, cores) = peel_tilings(lam.parts(), r);
            ensure(cores == BTreeSet::from([lam.r_core(r).parts().to_vec()]), || {
                format!("{r}-cores of {lam} by peeling: {cores:?}")
            })?;
            if lam.r_core(r).is_empty() {
                let sign = lam.r_sign(r).unwrap();
                for t in &tilings {
                    let spin = if tiling_spin(t) % 2 == 0 { 1 } else { -1 };
                    ensure(spin == sign, || format!("a {r}-tiling of {lam} has spin {spin}"))?;
                }
                let w = lam.size() / r;
                let standard = Composition::new(vec![1; w]);
                let lib: BTreeSet<Tiling> = enumerate_ribbon_tableaux(&lam, r, &standard)
                    .unwrap()
                    .iter()
                    .map(|d| d.tiling().iter().map(|rb| rb.cells().iter().map(|c| (c.row, c.col)).collect()).collect())
                    .collect();
                ensure(lib == tilings, || format!("{r}-tilings of {lam}: {} vs {}", lib.len(), tilings.len()))?;
            }
            n += 1;
        }
    }
    Ok(n)
}

/// Ribbon tableau counts equal quotient tuple counts and the monomial coefficients of `±φ_r(s_λ)`.
pub fn stanton_white(max_size: usize, rs: &[usize]) -> Outcome {
    let mut n = 0;
    for &r in rs {
        for lam in straight_shapes(max_size, max_size) {
            if lam.is_empty() || !lam.r_core(r).is_empty() {
                continue;
            }
            let w = lam.size() / r;
            let quotient = lam.r_quotient(r).unwrap();
            let gen = expansion_poly(&phi_adjoint(r, &lam).scale(lam.r_sign(r).unwrap()), w);
            for eta in weak_compositions(w, w) {
                let count = enumerate_ribbon_tableaux(&lam, r, &Composition::new(eta.clone()))
                    .unwrap()
                    .len() as i64;
                let tuples = quotient_tuple_count(&quotient, &eta);
                let key: Vec<u8> = eta.iter().map(|&x| x as u8).collect();
                let coef = gen.get(&key).copied().unwrap_or(0);
                ensure(count == tuples && count == coef, || {
                    format!("{lam}, r={r}, content {eta:?}: {count} tableaux, {tuples} tuples, coefficient {coef}")
                })?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `⟨φ_k s_λ, s_μ⟩ = ⟨s_λ, p_k ∘ s_μ⟩`.
pub fn phi_adjointness(max_size: usize, ks: &[usize]) -> Outcome {
    let mut n = 0;
    for &k in ks {
        for lam in straight_shapes(max_size, max_size) {
            if lam.size() % k != 0 {
                continue;
            }
            let phi = phi_adjoint(k, &lam);
            for mu in partitions_of(lam.size() / k) {
                let rhs = plethysm_power(k, &SchurExpansion::schur(mu.clone())).coefficient(&lam);
                ensure(phi.coefficient(&mu) == rhs, || {
                    format!("⟨φ_{k} s_{lam}, s_{mu}⟩ = {} but ⟨s_{lam}, p_{k}∘s_{mu}⟩ = {rhs}", phi.coefficient(&mu))
                })?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Yamanouchi domino tableaux count `|⟨p_2 ∘ s_μ, s_λ⟩|`.
pub fn carre_leclerc(max_size: usize) -> Outcome {
    let mut n = 0;
    for k in 1..=max_size / 2 {
        for mu in partitions_of(k) {
            let pleth = plethysm_power(2, &SchurExpansion::schur(mu.clone()));
            for lam in partitions_of(2 * k) {
                let content = Composition::from_partition(&mu, mu.len()).unwrap();
                let count = if lam.r_core(2).is_empty() {
                    enumerate_yamanouchi_domino(&lam, &content).unwrap().len() as i64
                } else {
                    0
                };
                let coef = pleth.coefficient(&lam).abs();
                ensure(count == coef, || format!("λ={lam}, μ={mu}: {count} Yamanouchi dominoes, coefficient {coef}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

/// `s_μ s_ν` against multiplying polynomials in `|μ| + |ν|` variables.
pub fn schur_product_oracle(max_degree: usize) -> Outcome {
    let mut n = 0;
    let mut polys: HashMap<(Vec<usize>, usize), Poly> = HashMap::new();
    let mut poly = |p: &Partition, vars: usize| {
        polys
            .entry((p.parts().to_vec(), vars))
            .or_insert_with(|| schur_poly(p.parts(), vars))
            .clone()
    };
    for total in 1..=max_degree {
        for a in 0..=total {
            for mu in partitions_of(a) {
                for nu in partitions_of(total - a) {
                    let ours = schur_product(
                        &SchurExpansion::schur(mu.clone()),
                        &SchurExpansion::schur(nu.clone()),
                    );
                    let brute = alternant_expand(&poly_mul(&poly(&mu, total), &poly(&nu, total)), total);
                    ensure(expansion_map(&ours) == brute, || format!("s_{mu} · s_{nu}: got {ours}"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(n)
}

/// `p_k ∘ s_μ` against substituting `x_i ↦ x_i^k`.
pub fn plethysm_oracle(max_degree: usize, ks: &[usize]) -> Outcome {
    let mut n = 0;
    for &k in ks {
        for a in 0..=max_degree / k {
            let vars = (k * a).max(1);
            for mu in partitions_of(a) {
                let ours = plethysm_power(k, &SchurExpansion::schur(mu.clone()));
                let sub = poly_substitute_power(&schur_poly(mu.parts(), vars), k as u8);
                let brute: BTreeMap<Vec<usize>, i64> = alternant_expand(&sub, vars);
                ensure(expansion_map(&ours) == brute, || format!("p_{k} ∘ s_{mu}: got {ours}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn eps(t: &SkewTableau, i: usize, s: usize) -> usize {
    string_lengths(t, i, s).unwrap().0
}

fn e(t: &SkewTableau, i: usize, s: usize) -> Option<SkewTableau> {
    apply_e(t, i, s).unwrap()
}

fn e_word(t: &SkewTableau, word: &[usize], s: usize) -> Option<SkewTableau> {
    word.iter().try_fold(t.clone(), |acc, &i| e(&acc, i, s))
}

/// Local axioms of a regular crystal for every pair of raising operators.
pub fn local_axioms(max_size: usize, s: usize) -> Outcome {
    let mut n = 0;
    for kappa in straight_shapes(max_size, s) {
        for x in tableaux(&kappa, &Partition::empty(), s) {
            for i in 1..s {
                let Some(ei) = e(&x, i, s) else { continue };
                for j in (1..s).filter(|&j| j != i) {
                    let d_eps = eps(&ei, j, s) as i64 - eps(&x, j, s) as i64;
                    let d_phi = string_lengths(&ei, j, s).unwrap().1 as i64
                        - string_lengths(&x, j, s).unwrap().1 as i64;
                    let adjacent = i.abs_diff(j) == 1;
                    let a = if adjacent { -1 } else { 0 };
                    ensure(d_phi - d_eps == a, || format!("weight pairing at {x}, i={i}, j={j}"))?;
                    ensure((0..=1).contains(&d_eps), || format!("ε_{j} jumps by {d_eps} under e_{i} at {x}"))?;
                    if !adjacent {
                        ensure(d_eps == 0, || format!("e_{i} changes ε_{j} at {x}"))?;
                    }
                    let Some(ej) = e(&x, j, s) else { continue };
                    let back = eps(&ej, i, s) as i64 - eps(&x, i, s) as i64;
                    if d_eps == 0 && back == 0 {
                        let lhs = e_word(&x, &[j, i], s);
                        ensure(lhs.is_some() && lhs == e_word(&x, &[i, j], s), || {
                            format!("e_{i} e_{j} != e_{j} e_{i} at {x}")
                        })?;
                    } else if d_eps == 1 && back == 1 {
                        let lhs = e_word(&x, &[i, j, j, i], s);
                        ensure(lhs.is_some() && lhs == e_word(&x, &[j, i, i, j], s), || {
                            format!("degree-four relation for {i}, {j} at {x}")
                        })?;
                    }
                }
            }
            n += 1;
        }
    }
    Ok(n)
}
