//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod printed;

use weylgroupoid::coxeter::CoxeterSystem;
use weylgroupoid::{Bicharacter, CycScalar};

/// `N_ij` by direct scan: the least `k ≤ limit` with `(k+1)_{q_ii} = 0` or
/// `q_ii^k q_ij q_ji = 1`, where the quantum integer is summed term by term.
pub fn scan_n(chi: &Bicharacter, i: usize, j: usize, limit: u32) -> Option<u32> {
    let qii = chi.q(i, i).clone();
    let prod = chi.q(i, j).clone() * chi.q(j, i).clone();
    let one = chi.one();
    let mut power = one.clone();
    for k in 0..=limit {
        // (k+1)_q = 0 iff q ≠ 1 and q^{k+1} = 1 in characteristic zero
        let next = power.clone() * qii.clone();
        if !qii.is_one() && next.is_one() {
            return Some(k);
        }
        if (power.clone() * prod.clone()).is_one() {
            return Some(k);
        }
        power = next;
    }
    None
}

/// The case table for `N_ij` in the super family, read off the form values.
pub fn super_n_table(lam: &[Vec<i32>], i: usize, j: usize) -> Option<u32> {
    let (aii, aij) = (lam[i][i], lam[i][j]);
    if aij == 0 {
        Some(0)
    } else if aii == 0 || aii == -2 * aij {
        // isotropic, or even with a simple bond
        Some(1)
    } else if aii == -aij {
        Some(2)
    } else {
        None
    }
}

/// Count of binary maps on `n + 1` points with `m` zeros among the first `n`
/// and `p(n+1) = 1 ⇒ p(n) = 1`, by recursion on the first `n` values.
pub fn assignment_count(n: usize, m: usize) -> usize {
    fn go(left: usize, zeros: usize, last: u8, m: usize) -> usize {
        if left == 0 {
            if zeros != m {
                return 0;
            }
            return if last == 1 { 2 } else { 1 };
        }
        (0..2u8)
            .map(|b| go(left - 1, zeros + usize::from(b == 0), b, m))
            .sum()
    }
    go(n, 0, 0, m)
}

/// Coxeter system on `n` generators from `(i, j, m_ij)` triples (1-based),
/// all other pairs commuting.
pub fn coxeter(n: usize, bonds: &[(usize, usize, u32)]) -> CoxeterSystem {
    let mut m = vec![vec![2; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for &(i, j, v) in bonds {
        m[i - 1][j - 1] = v;
        m[j - 1][i - 1] = v;
    }
    CoxeterSystem::new(m).unwrap()
}

/// 1-based printed word to 0-based letters.
pub fn zero_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|j| j - 1).collect()
}

pub fn scalar(order: u32, torsion: i64, free: &[i32]) -> CycScalar {
    CycScalar::new(order, torsion, free.to_vec())
}
