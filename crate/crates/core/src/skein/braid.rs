//! Skein resolution directly on braid words.
//!
//! Before every step the word is freely reduced (cyclically, across commuting
//! letters). A generator that is missing splits the closure; a generator used
//! once is a nugatory crossing and splits it into a connected sum (the top and
//! bottom cases are Markov destabilizations). Smoothing a letter deletes it,
//! switching it negates it.

use alloc::vec;
use alloc::vec::Vec;

use super::{Skein, SkeinError};
use crate::laurent::{Exp4, LaurentPoly2, HOMFLY_VARS};

fn commutes(a: i32, b: i32) -> bool {
    (a.abs() - b.abs()).abs() >= 2
}

/// Cancels `σ^e ... σ^-e` pairs separated only by commuting letters, cyclically.
fn reduce(mut w: Vec<i32>) -> Vec<i32> {
    'outer: loop {
        let n = w.len();
        for p in 0..n {
            for k in 1..n {
                let q = (p + k) % n;
                if w[q] == -w[p] {
                    let (a, b) = (p.max(q), p.min(q));
                    w.remove(a);
                    w.remove(b);
                    continue 'outer;
                }
                if !commutes(w[q], w[p]) {
                    break;
                }
            }
        }
        return w;
    }
}

fn canonical(n: usize, w: &[i32]) -> Vec<i32> {
    let flip: Vec<i32> = w.iter().map(|&g| g.signum() * (n as i32 - g.abs())).collect();
    let mut best: Option<Vec<i32>> = None;
    for cand in [w, &flip[..]] {
        for r in 0..cand.len().max(1) {
            let rot: Vec<i32> = cand[r..].iter().chain(&cand[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

pub(super) fn eval(sk: &mut Skein, n: usize, word: Vec<i32>) -> Result<LaurentPoly2, SkeinError> {
    sk.tick()?;
    let word = reduce(word);
    if n <= 1 {
        return Ok(LaurentPoly2::one(HOMFLY_VARS));
    }
    let mut count = vec![0usize; n];
    for g in &word {
        count[g.unsigned_abs() as usize] += 1;
    }
    for j in 1..n {
        if count[j] <= 1 {
            let low: Vec<i32> = word.iter().copied().filter(|g| (g.unsigned_abs() as usize) < j).collect();
            let high: Vec<i32> = word.iter().copied().filter(|g| (g.unsigned_abs() as usize) > j).map(|g| g.signum() * (g.abs() - j as i32)).collect();
            let a = eval(sk, j, low)?;
            let b = eval(sk, n - j, high)?;
            let mut r = &a * &b;
            if count[j] == 0 {
                r = &r * &super::delta();
            }
            return Ok(r);
        }
    }
    let key = (n, canonical(n, &word));
    if let Some(v) = sk.braid_memo.get(&key) {
        sk.stats.memo_hits += 1;
        return Ok(v.clone());
    }
    sk.depth += 1;
    let r = descend(sk, n, &word);
    sk.depth -= 1;
    let v = r?;
    if sk.braid_memo.len() < sk.cfg.memo_cap {
        sk.braid_memo.insert(key, v.clone());
    }
    Ok(v)
}

/// Components of the closure as sequences of `(letter, over?)` visits.
fn visit_sequences(n: usize, w: &[i32]) -> Vec<Vec<(usize, bool)>> {
    let mut done = vec![false; n];
    let mut out = Vec::new();
    for p0 in 0..n {
        if done[p0] {
            continue;
        }
        let mut seq = Vec::new();
        let mut p = p0;
        loop {
            done[p] = true;
            for (k, &g) in w.iter().enumerate() {
                let i = g.unsigned_abs() as usize;
                if p + 1 == i {
                    seq.push((k, g > 0));
                    p = i;
                } else if p == i {
                    seq.push((k, g < 0));
                    p = i - 1;
                }
            }
            if p == p0 {
                break;
            }
        }
        out.push(seq);
    }
    out
}

fn switches(n: usize, w: &[i32]) -> (Vec<usize>, usize) {
    let seqs = visit_sequences(n, w);
    let m = seqs.len();
    let mut owner = vec![[usize::MAX; 2]; w.len()];
    for (k, seq) in seqs.iter().enumerate() {
        for &(x, _) in seq {
            if owner[x][0] == usize::MAX {
                owner[x][0] = k;
            } else {
                owner[x][1] = k;
            }
        }
    }
    let self_cross: Vec<bool> = owner.iter().map(|o| o[0] == o[1]).collect();
    let mut seen = vec![false; w.len()];
    let starts: Vec<usize> = seqs
        .iter()
        .map(|seq| (0..seq.len()).min_by_key(|&s| super::bad_self_crossings(seq, s, &self_cross, &mut seen)).unwrap_or(0))
        .collect();
    let mut cost = vec![vec![0usize; m]; m];
    for (k, seq) in seqs.iter().enumerate() {
        for &(x, over) in seq {
            if !self_cross[x] && !over {
                let other = if owner[x][0] == k { owner[x][1] } else { owner[x][0] };
                cost[k][other] += 1;
            }
        }
    }
    let order = super::best_order(m, &cost);
    let mut seen = vec![false; w.len()];
    let mut bad = Vec::new();
    for &k in &order {
        let seq = &seqs[k];
        for j in 0..seq.len() {
            let (x, over) = seq[(starts[k] + j) % seq.len()];
            if !seen[x] {
                seen[x] = true;
                if !over {
                    bad.push(x);
                }
            }
        }
    }
    (bad, m)
}

fn descend(sk: &mut Skein, n: usize, w: &[i32]) -> Result<LaurentPoly2, SkeinError> {
    let (bad, comps) = switches(n, w);
    let mut cur = w.to_vec();
    let mut factor = LaurentPoly2::one(HOMFLY_VARS);
    let mut out = LaurentPoly2::zero(HOMFLY_VARS);
    for x in bad {
        let e = cur[x].signum() as i64;
        let smoothed: Vec<i32> = cur.iter().enumerate().filter(|&(k, _)| k != x).map(|(_, &g)| g).collect();
        let p0 = eval(sk, n, smoothed)?;
        let term = &factor * &p0;
        out.add_scaled(&term, -1, Exp4::int(e), Exp4::int(1));
        let mut f2 = LaurentPoly2::zero(HOMFLY_VARS);
        f2.add_scaled(&factor, -1, Exp4::int(2 * e), Exp4::ZERO);
        factor = f2;
        cur[x] = -cur[x];
    }
    let unlink = sk.delta_pow(comps - 1);
    Ok(&out + &(&factor * &unlink))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction_across_commuting_letters() {
        assert_eq!(reduce(vec![1, 3, -1, 2]), vec![3, 2]);
        assert_eq!(reduce(vec![1, 2, -1]), vec![2]);
        assert_eq!(reduce(vec![1, 2, -1, 2]), vec![1, 2, -1, 2]);
        assert_eq!(reduce(vec![-2, 1, 1, 2]), vec![1, 1]);
    }

    #[test]
    fn canonical_rotation_and_flip() {
        assert_eq!(canonical(3, &[2, 1, 1]), canonical(3, &[1, 2, 2]));
        assert_eq!(canonical(3, &[1, 1, 2]), canonical(3, &[2, 1, 1]));
    }
}
