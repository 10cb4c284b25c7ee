//! Batch helpers that run on the rayon pool when the `parallel` feature is
//! enabled and fall back to plain iteration otherwise. Output order always
//! matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

pub fn map_mut<T, R, F>(items: &mut [T], f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(&mut T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter_mut().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_mut_seq(items, f)
    }
}

pub fn map_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

pub fn map_mut_seq<T, R, F>(items: &mut [T], f: F) -> Vec<R>
where
    F: Fn(&mut T) -> R,
{
    items.iter_mut().map(f).collect()
}

/// Maps fixed-size chunks and concatenates the results in order.
pub fn map_chunks<T, R, F>(items: &[T], chunk: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&[T]) -> Vec<R> + Sync + Send,
{
    let chunk = chunk.max(1);
    #[cfg(feature = "parallel")]
    {
        items.par_chunks(chunk).flat_map_iter(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.chunks(chunk).flat_map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u32> = (0..1000).collect();
        assert_eq!(map(&v, |x| x * 2), map_seq(&v, |x| x * 2));
        assert_eq!(map_chunks(&v, 7, |c| c.to_vec()), v);
        let mut w = v.clone();
        let out = map_mut(&mut w, |x| {
            *x += 1;
            *x
        });
        assert_eq!(out, w);
    }
}
