//! The greedy nested sequence of minimal sets (after Wang and Wang) and the
//! isoperimetric minimum function it realizes.
//!
//! `ww(n)` is the first `n` vertices of a fixed spiral order: the origin,
//! its four neighbors in E, N, W, S order, then each `ℓ1` sphere in turn,
//! one diagonal run per quadrant, each run the clockwise quarter turn of
//! the previous. Every prefix has the smallest boundary possible for its
//! size, so `|∂ww(n)|` *is* the isoperimetric minimum function `m(n)`, and
//! both it and its inverse have closed forms over the sphere layers.

use crate::lattice::{Vertex, VertexSet};
use crate::{Error, Result};

/// Number of points with `ℓ1` norm at most `radius`.
fn ball_size(radius: u128) -> u128 {
    2 * radius * radius + 2 * radius + 1
}

/// The `ℓ1` ball: all points with `|x| + |y| <= radius`.
pub fn ball(radius: usize) -> VertexSet {
    let r = radius as i64;
    let mut out = Vec::with_capacity(2 * radius * (radius + 1) + 1);
    for y in -r..=r {
        let half = r - y.abs();
        for x in -half..=half {
            out.push(Vertex::new(x, y));
        }
    }
    VertexSet::from_unchecked(out)
}

/// The first `n` vertices of the spiral order.
fn spiral_order(n: usize) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(n);
    for (x, y) in [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)] {
        if out.len() == n {
            return out;
        }
        out.push(Vertex::new(x, y));
    }
    let mut radius = 2i64;
    loop {
        for seg in 0..4 {
            for k in 0..radius {
                if out.len() == n {
                    return out;
                }
                // Segment 0 runs (1, radius-1) .. (radius, 0); each later
                // segment is the clockwise quarter turn of the previous.
                let mut p = Vertex::new(1 + k, radius - 1 - k);
                for _ in 0..seg {
                    p = Vertex::new(p.y, -p.x);
                }
                out.push(p);
            }
        }
        radius += 1;
    }
}

/// The `n`-th set of the greedy minimal sequence.
///
/// Prefixes are nested, every prefix is minimal, and the prefix of size
/// `2m² + 2m + 1` is exactly the `ℓ1` ball of radius `m`. Errors with
/// [`Error::InvalidSize`] when `n` is zero.
pub fn ww(n: usize) -> Result<VertexSet> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    Ok(VertexSet::from_unchecked(spiral_order(n)))
}

/// Smallest sphere layer `m >= 1` whose closing ball reaches size `n`,
/// for `n >= 2`.
fn layer_of(n: u128) -> u128 {
    let mut m = (n / 2).isqrt().max(1);
    while m > 1 && ball_size(m - 1) >= n {
        m -= 1;
    }
    while ball_size(m) < n {
        m += 1;
    }
    m
}

/// Boundary size of `ww(n)`, in closed form.
///
/// This equals the isoperimetric minimum `m(n)`: the smallest boundary any
/// set of `n` points can have. Within sphere layer `m` (sizes
/// `ball_size(m-1) + 1 ..= ball_size(m)`) the boundary starts at `4m + 1`
/// and steps up at offsets `m`, `2m`, and `3m` into the layer, ending at
/// `4(m + 1)` when the ball closes. Errors with [`Error::InvalidSize`] when
/// `n` is zero.
pub fn ww_boundary(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    if n == 1 {
        return Ok(4);
    }
    let n = n as u128;
    let m = layer_of(n);
    let offset = n - ball_size(m - 1);
    debug_assert!(offset >= 1 && offset <= 4 * m);
    let step = if offset < m {
        0
    } else if offset < 2 * m {
        1
    } else if offset < 3 * m {
        2
    } else {
        3
    };
    Ok((4 * m + 1 + step) as usize)
}

/// Smallest number of points with vertex boundary exactly `boundary`.
///
/// The realized boundary sizes are 4 (the singleton) and every value from 6
/// up; [`Error::NoSuchBoundary`] reports the rest. Errors with
/// [`Error::SizeTooLarge`] if the answer does not fit `usize`.
pub fn min_size_for_boundary(boundary: usize) -> Result<usize> {
    if boundary == 4 {
        return Ok(1);
    }
    if boundary < 6 {
        return Err(Error::NoSuchBoundary(boundary));
    }
    let m = ((boundary - 1) / 4) as u128;
    let s = boundary as u128 - 4 * m;
    debug_assert!((1..=4).contains(&s) && m >= 1);
    let offset = match s {
        1 => 1,
        2 => m,
        3 => 2 * m,
        _ => 3 * m,
    };
    usize::try_from(ball_size(m - 1) + offset).map_err(|_| Error::SizeTooLarge {
        requested: boundary,
        limit: usize::MAX,
    })
}
