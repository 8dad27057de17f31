//! Parallel drivers for the expensive checks. Results never depend on the
//! number of worker threads: searches return the first hit in index order.

use engel_core::lie::{lie_engel_check, lie_engel_witness, symmetrized_row, Strategy};
use engel_core::witness::finish_verdict;
use engel_core::{Error, Field, QuotientAlgebra, Verdict};
use rayon::prelude::*;

/// The first failing `(j, multiset)` of the symmetrized strategy, with the
/// rows for different `j` checked in parallel.
pub fn symmetrized_failure_par<K>(alg: &QuotientAlgebra<K>, n: usize) -> Option<(usize, Vec<usize>)>
where
    K: Field + Send + Sync,
    K::Elem: Send + Sync,
{
    (0..alg.dim())
        .into_par_iter()
        .find_map_first(|j| symmetrized_row(alg, n, j).map(|m| (j, m)))
}

/// [`lie_engel_check`] with the symmetrized rows fanned out over the pool.
pub fn lie_engel_check_par<K>(
    alg: &QuotientAlgebra<K>,
    n: usize,
    strategy: Strategy,
) -> Result<Verdict<K::Elem>, Error>
where
    K: Field + Send + Sync,
    K::Elem: Send + Sync,
{
    match strategy {
        Strategy::Symbolic => lie_engel_check(alg, n, strategy),
        Strategy::Symmetrized => match symmetrized_failure_par(alg, n) {
            None => Ok(Verdict::pass()),
            Some(_) => finish_verdict(alg, lie_engel_witness(alg, n)?, "Lie Engel", n),
        },
    }
}

/// Runs `f` on a pool with `jobs` threads, or on the global pool.
pub fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use engel_core::{Presentation, Rationals};

    #[test]
    fn parallel_agrees_with_sequential() {
        let b = QuotientAlgebra::build(&Presentation::engel_counterexample(), Rationals).unwrap();
        for n in [4, 5] {
            let seq = engel_core::lie::symmetrized_failure(&b, n);
            let par = with_jobs(Some(3), || symmetrized_failure_par(&b, n));
            assert_eq!(seq, par);
            assert_eq!(
                lie_engel_check_par(&b, n, Strategy::Symmetrized).unwrap(),
                lie_engel_check(&b, n, Strategy::Symbolic).unwrap()
            );
        }
    }
}
