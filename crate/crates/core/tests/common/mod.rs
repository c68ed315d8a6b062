//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's permutation or search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Perm = Vec<usize>;

pub fn all_perms(d: usize) -> Vec<Perm> {
    fn go(prefix: &mut Perm, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

/// p first, then q.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    p.iter().map(|&x| q[x]).collect()
}

pub fn invert(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// Length m if p is a single m-cycle (m >= 2) plus fixed points.
pub fn single_cycle(p: &[usize]) -> Option<usize> {
    let moved: Vec<usize> = (0..p.len()).filter(|&i| p[i] != i).collect();
    let start = *moved.first()?;
    let mut len = 1;
    let mut x = p[start];
    while x != start {
        len += 1;
        x = p[x];
    }
    (len == moved.len()).then_some(len)
}

pub fn transitive(d: usize, gens: &[&Perm]) -> bool {
    let mut reached = vec![false; d];
    reached[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for g in gens {
            for i in 0..d {
                if reached[i] && !reached[g[i]] {
                    reached[g[i]] = true;
                    changed = true;
                }
            }
        }
    }
    reached.iter().all(|&r| r)
}

/// Every profile (non-increasing multiplicities) realized by some transitive
/// tuple (a_1, b_1, …, a_g, b_g, s_1, …, s_k) ∈ S_d^(2g+k) with
/// [a_1,b_1]⋯[a_g,b_g]·s_1⋯s_k = id and each s_j a single nontrivial cycle.
pub fn realized_profiles(d: usize, genus: usize, k: usize) -> BTreeSet<Vec<u32>> {
    let perms = all_perms(d);
    let cycles: Vec<&Perm> = perms.iter().filter(|p| single_cycle(p).is_some()).collect();
    let mut found = BTreeSet::new();

    // products of commutators over all handle choices
    let mut handle_tuples: Vec<(Perm, Vec<&Perm>)> = vec![((0..d).collect(), Vec::new())];
    for _ in 0..genus {
        let mut next = Vec::new();
        for (prod, gens) in &handle_tuples {
            for a in &perms {
                for b in &perms {
                    let comm = compose(&compose(&compose(a, b), &invert(a)), &invert(b));
                    let mut g = gens.clone();
                    g.push(a);
                    g.push(b);
                    next.push((compose(prod, &comm), g));
                }
            }
        }
        handle_tuples = next;
    }

    let mut idx = vec![0usize; k];
    for (prod, gens) in &handle_tuples {
        if k > 0 && cycles.is_empty() {
            break;
        }
        idx.iter_mut().for_each(|i| *i = 0);
        loop {
            let mut p = prod.clone();
            for &i in &idx {
                p = compose(&p, cycles[i]);
            }
            if is_identity(&p) {
                let mut all: Vec<&Perm> = gens.clone();
                all.extend(idx.iter().map(|&i| cycles[i]));
                if transitive(d, &all) {
                    let mut profile: Vec<u32> = idx.iter().map(|&i| single_cycle(cycles[i]).unwrap() as u32).collect();
                    profile.sort_unstable_by(|a, b| b.cmp(a));
                    found.insert(profile);
                }
            }
            let mut done = true;
            for pos in (0..k).rev() {
                idx[pos] += 1;
                if idx[pos] < cycles.len() {
                    done = false;
                    break;
                }
                idx[pos] = 0;
            }
            if done {
                break;
            }
        }
    }
    found
}

/// All non-increasing sequences of length k with entries in [lo, hi].
pub fn multisets(k: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn go(k: usize, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        for m in (lo..=top).rev() {
            cur.push(m);
            go(k, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if hi >= lo || k == 0 {
        go(k, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// Covering data (d, profile) found by listing every multiset of m_i ∈ [2, d]
/// and filtering by χ′ = dχ − Σ(m_i − 1).
pub fn brute_force_covering_data(chi_src: i64, chi_tgt: i64, k: usize, d_max: u32) -> BTreeSet<(u32, Vec<u32>)> {
    let mut out = BTreeSet::new();
    for d in 1..=d_max {
        for ms in multisets(k, 2, d) {
            let ram: i64 = ms.iter().map(|&m| i64::from(m) - 1).sum();
            if i64::from(d) * chi_tgt - ram == chi_src {
                out.insert((d, ms));
            }
        }
    }
    out
}

/// φ over a hyperbolic target by direct search: least k admitting a
/// brute-force covering datum of degree <= d_max.
pub fn brute_force_phi(chi_src: i64, chi_tgt: i64, k_max: usize, d_max: u32) -> Option<usize> {
    (0..=k_max).find(|&k| !brute_force_covering_data(chi_src, chi_tgt, k, d_max).is_empty())
}
