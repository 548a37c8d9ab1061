//! Kostka polynomials `K_π(t)` with `K_π(t)/Π_{i≤n}(1−t^i)` the Hilbert series
//! of `(π ⊗ ℂ[X_1..X_n])^{S_n}`, computed by charge on standard tableaux and
//! independently by a Molien sum over conjugacy classes.

use cyclodaha_core::{Field, Rational};

pub type Partition = Vec<usize>;

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(p: &[usize]) -> Partition {
    let len = p.first().copied().unwrap_or(0);
    (0..len).map(|c| p.iter().filter(|&&r| r > c).count()).collect()
}

/// `Σ_{(r,c) ∈ π} (c − r)` over the cells of the Young diagram.
pub fn content(p: &[usize]) -> i64 {
    p.iter()
        .enumerate()
        .map(|(r, &len)| (0..len).map(|c| c as i64 - r as i64).sum::<i64>())
        .sum()
}

/// Standard Young tableaux of shape `p`, as rows of entries `1..=|p|`.
pub fn standard_tableaux(p: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(p: &[usize], t: &mut Vec<Vec<usize>>, next: usize, total: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > total {
            out.push(t.clone());
            return;
        }
        for r in 0..p.len() {
            let len = t[r].len();
            if len < p[r] && (r == 0 || t[r - 1].len() > len) {
                t[r].push(next);
                rec(p, t, next + 1, total, out);
                t[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let total = p.iter().sum();
    rec(p, &mut vec![Vec::new(); p.len()], 1, total, &mut out);
    out
}

pub fn dimension(p: &[usize]) -> usize {
    standard_tableaux(p).len()
}

/// Charge of a standard word (a permutation of `1..=n`).
pub fn charge(word: &[usize]) -> usize {
    let n = word.len();
    let mut pos = vec![0usize; n + 1];
    for (k, &v) in word.iter().enumerate() {
        pos[v] = k;
    }
    let (mut index, mut total) = (0usize, 0usize);
    for v in 2..=n {
        if pos[v] > pos[v - 1] {
            index += 1;
        }
        total += index;
    }
    total
}

/// Row reading word: rows from the bottom up, each left to right.
pub fn reading_word(t: &[Vec<usize>]) -> Vec<usize> {
    t.iter().rev().flatten().copied().collect()
}

/// `K_π(t) = Σ_{T ∈ SYT(π')} t^{charge(T)}`, as coefficients of `t^0, t^1, …`.
pub fn kostka(p: &[usize]) -> Vec<i64> {
    let mut k = vec![0i64];
    for t in standard_tableaux(&conjugate(p)) {
        let c = charge(&reading_word(&t));
        if k.len() <= c {
            k.resize(c + 1, 0);
        }
        k[c] += 1;
    }
    k
}

fn to_beta(p: &[usize], len: usize) -> Vec<usize> {
    (0..len).map(|i| p.get(i).copied().unwrap_or(0) + (len - 1 - i)).collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).filter(|&x| x > 0).collect()
}

/// `χ_λ(μ)` by the Murnaghan–Nakayama rule on beta-sets.
pub fn character(lambda: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return if lambda.is_empty() { 1 } else { 0 };
    };
    let len = lambda.len().max(1);
    let beta = to_beta(lambda, len);
    let mut acc = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        acc += sign * character(&from_beta(nb), rest);
    }
    acc
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Size of the conjugacy class of cycle type `mu` in `S_{|mu|}`.
pub fn class_size(mu: &[usize]) -> i64 {
    let n: usize = mu.iter().sum();
    let mut denom = 1i64;
    for k in 1..=n {
        let mk = mu.iter().filter(|&&c| c == k).count();
        denom *= (k as i64).pow(mk as u32) * factorial(mk);
    }
    factorial(n) / denom
}

/// `h_π(t) = (1/n!) Σ_σ χ_π(σ) / det(1 − tσ)` up to `t^{len−1}`.
pub fn molien_series(p: &[usize], len: usize) -> Vec<Rational> {
    let n: usize = p.iter().sum();
    let mut acc = vec![Rational::zero(); len];
    for mu in partitions_of(n) {
        let w = Rational::from_i64(class_size(&mu) * character(p, &mu));
        if w.is_zero() {
            continue;
        }
        let mut s = vec![Rational::zero(); len];
        s[0] = Rational::one();
        for &c in &mu {
            for k in c..len {
                let prev = s[k - c].clone();
                s[k] = &s[k] + &prev;
            }
        }
        for k in 0..len {
            acc[k] = &acc[k] + &(&w * &s[k]);
        }
    }
    let nf = Rational::from_i64(factorial(n));
    acc.into_iter().map(|x| &x / &nf).collect()
}

/// `K_π` recovered from the Molien sum: `h_π(t)·Π_{i≤n}(1 − t^i)`, truncated.
/// Returns `None` if a coefficient is not an integer.
pub fn molien_kostka(p: &[usize], len: usize) -> Option<Vec<i64>> {
    let n: usize = p.iter().sum();
    let mut c = molien_series(p, len);
    for i in 1..=n {
        for k in (i..len).rev() {
            let prev = c[k - i].clone();
            c[k] = &c[k] - &prev;
        }
    }
    let mut out: Vec<i64> = c.iter().map(|x| if x.is_integer() { x.to_i64() } else { None }).collect::<Option<_>>()?;
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}
