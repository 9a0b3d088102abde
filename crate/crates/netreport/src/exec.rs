//! Execution policy for the data-parallel kernels.
//!
//! Every parallel helper here produces bit-identical results to its sequential
//! counterpart: work is mapped per index (or per fixed-size chunk) and reduced
//! in index order, so thread scheduling never changes a floating-point sum.

/// Chunk length used for deterministic vector reductions. Fixed so that the
/// parallel and sequential paths sum partial results in the same order.
const CHUNK: usize = 4096;

/// Which path the kernels take. `Parallel` uses rayon when the `parallel`
/// feature is enabled and silently degrades to sequential otherwise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

/// Maps `f` over `0..n`, collecting results in index order.
pub fn map_indexed<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..n).map(f).collect(),
        Execution::Parallel => par_map(n, f),
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Applies `f` to fixed-size chunks of `out`; `f` receives the chunk's start
/// index. The chunk grid does not depend on the execution mode.
pub fn for_each_chunk<F>(exec: Execution, out: &mut [f64], f: F)
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    match exec {
        Execution::Sequential => {
            for (i, chunk) in out.chunks_mut(CHUNK).enumerate() {
                f(i * CHUNK, chunk);
            }
        }
        Execution::Parallel => par_chunks(out, f),
    }
}

#[cfg(feature = "parallel")]
fn par_chunks<F>(out: &mut [f64], f: F)
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    use rayon::prelude::*;
    out.par_chunks_mut(CHUNK)
        .enumerate()
        .for_each(|(i, chunk)| f(i * CHUNK, chunk));
}

#[cfg(not(feature = "parallel"))]
fn par_chunks<F>(out: &mut [f64], f: F)
where
    F: Fn(usize, &mut [f64]) + Sync,
{
    for (i, chunk) in out.chunks_mut(CHUNK).enumerate() {
        f(i * CHUNK, chunk);
    }
}

/// Dot product with deterministic chunked reduction: partial sums per fixed
/// chunk, then a sequential fold over chunk index.
pub fn dot(exec: Execution, a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let chunks = a.len().div_ceil(CHUNK);
    let partial = |i: usize| {
        let lo = i * CHUNK;
        let hi = (lo + CHUNK).min(a.len());
        let mut s = 0.0;
        for j in lo..hi {
            s += a[j] * b[j];
        }
        s
    };
    map_indexed(exec, chunks, partial).iter().sum()
}

/// Squared Euclidean norm with the same reduction order as `dot`.
pub fn norm2_sq(exec: Execution, a: &[f64]) -> f64 {
    dot(exec, a, a)
}
