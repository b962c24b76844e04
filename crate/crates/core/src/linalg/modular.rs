//! Rank modulo word-sized primes, used to cross-check exact results.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::matrix::RatMatrix;

/// Primes just below 2⁶². Products of two residues fit in `u128`.
pub const LARGE_PRIMES: [u64; 8] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387733,
    4611686018427387631,
    4611686018427387593,
    4611686018427387539,
    4611686018427387521,
];

fn residue(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue below p")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Rank of `m` reduced modulo the prime `p`, or `None` when some
/// denominator vanishes modulo `p`.
pub fn rank_mod(m: &RatMatrix, p: u64) -> Option<usize> {
    let cols = m.ncols();
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(m.nrows());
    for r in m.sparse_rows() {
        let mut dense = vec![0u64; cols];
        for (c, x) in r {
            let den = residue(x.denom(), p);
            if den == 0 {
                return None;
            }
            let num = residue(x.numer(), p);
            dense[*c] = mul_mod(num, pow_mod(den, p - 2, p), p);
        }
        rows.push(dense);
    }
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        let pivot_row = rows[rank].clone();
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f == 0 {
                continue;
            }
            let f = mul_mod(f, inv, p);
            for c in col..cols {
                if pivot_row[c] != 0 {
                    let sub = mul_mod(f, pivot_row[c], p);
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Ranks modulo `count` primes drawn from [`LARGE_PRIMES`] by `seed`.
pub fn multimodular_ranks(m: &RatMatrix, count: usize, seed: u64) -> Vec<(u64, Option<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut primes = LARGE_PRIMES.to_vec();
    primes.shuffle(&mut rng);
    primes
        .into_iter()
        .take(count)
        .map(|p| (p, rank_mod(m, p)))
        .collect()
}
