//! Fixed CNF corpora.

use lg_core::reduction::Cnf;
use lg_core::witness::brute_force_sat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every CNF with two clauses over `x1, x2`, each clause a nonempty set of
/// literals from `{x1, -x1, x2, -x2}`, taking each unordered pair of clauses
/// once (a clause may be paired with itself): 120 instances.
pub fn two_by_two() -> Vec<Cnf> {
    let lits = [1i64, -1, 2, -2];
    let clauses: Vec<Vec<i64>> = (1u32..16)
        .map(|mask| lits.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &l)| l).collect())
        .collect();
    let mut out = Vec::new();
    for i in 0..clauses.len() {
        for j in i..clauses.len() {
            out.push(Cnf::from_ints(2, &[&clauses[i], &clauses[j]]).unwrap());
        }
    }
    out
}

/// Fifty satisfiable CNFs with at most three variables and three clauses,
/// drawn from a fixed seed.
pub fn witness_corpus() -> Vec<Cnf> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5A7_1C6);
    let mut out = Vec::new();
    while out.len() < 50 {
        let m = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=3usize);
        let clauses: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                let len = rng.gen_range(1..=3usize);
                (0..len)
                    .map(|_| {
                        let v = rng.gen_range(1..=m) as i64;
                        if rng.gen_bool(0.5) {
                            v
                        } else {
                            -v
                        }
                    })
                    .collect()
            })
            .collect();
        let refs: Vec<&[i64]> = clauses.iter().map(|c| c.as_slice()).collect();
        let cnf = Cnf::from_ints(m, &refs).unwrap();
        if brute_force_sat(&cnf).unwrap().is_some() {
            out.push(cnf);
        }
    }
    out
}

/// All assignments of `m` variables in lexicographic order.
pub fn all_assignments(m: usize) -> Vec<Vec<bool>> {
    (0..1u32 << m).map(|k| (0..m).map(|j| k >> (m - 1 - j) & 1 == 1).collect()).collect()
}
