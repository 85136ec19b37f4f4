//! Brute-force oracles, independent of the library's algorithms.
#![allow(dead_code)]

use rand::Rng;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Coin-change reachability on `[0, bound]`.
pub fn dp_members(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut reach = vec![false; bound as usize + 1];
    reach[0] = true;
    for n in 1..=bound as usize {
        reach[n] = gens
            .iter()
            .any(|&g| g as usize <= n && reach[n - g as usize]);
    }
    reach
}

/// Every exponent vector with `sum x_i g_i = s`, by an odometer over the box
/// `0 <= x_i <= s / g_i`.
pub fn naive_factorizations(gens: &[u64], s: u64) -> Vec<Vec<u64>> {
    let limits: Vec<u64> = gens.iter().map(|&g| s / g).collect();
    let mut x = vec![0u64; gens.len()];
    let mut out = Vec::new();
    loop {
        let value: u64 = x.iter().zip(gens).map(|(a, g)| a * g).sum();
        if value == s {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == x.len() {
                return out;
            }
            if x[k] < limits[k] {
                x[k] += 1;
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

pub fn naive_distance(x: &[u64], y: &[u64]) -> u64 {
    let g: Vec<u64> = x.iter().zip(y).map(|(a, b)| *a.min(b)).collect();
    let lx: u64 = x.iter().zip(&g).map(|(a, c)| a - c).sum();
    let ly: u64 = y.iter().zip(&g).map(|(a, c)| a - c).sum();
    lx.max(ly)
}

fn connected_under(z: &[Vec<u64>], n: u64) -> bool {
    let mut seen = vec![false; z.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..z.len() {
            if !seen[v] && naive_distance(&z[u], &z[v]) <= n {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&b| b)
}

/// Least threshold at which the distance graph is connected, by linear scan.
pub fn naive_catenary(z: &[Vec<u64>]) -> u64 {
    if z.len() <= 1 {
        return 0;
    }
    (0..).find(|&n| connected_under(z, n)).unwrap()
}

/// Number of R-classes by graph search on support intersection.
pub fn naive_r_class_count(z: &[Vec<u64>]) -> usize {
    let meets = |a: &Vec<u64>, b: &Vec<u64>| a.iter().zip(b).any(|(x, y)| *x > 0 && *y > 0);
    let mut seen = vec![false; z.len()];
    let mut count = 0;
    for start in 0..z.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..z.len() {
                if !seen[v] && meets(&z[u], &z[v]) {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// A random gcd-1 generator set of `2..=max_count` values in `[2, max_gen]`.
pub fn random_gens<R: Rng>(rng: &mut R, max_count: usize, max_gen: u64) -> Vec<u64> {
    loop {
        let count = rng.gen_range(2..=max_count);
        let gens: Vec<u64> = (0..count).map(|_| rng.gen_range(2..=max_gen)).collect();
        if gens.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
            return gens;
        }
    }
}
