//! Shrinking direct search: derivative-free local ascent used by the
//! nonconvex seminorm searches. Robust at the kinks of `l^1`-type
//! objectives where gradient steps stall.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct ShrinkOptions {
    pub init_step: f64,
    pub min_step: f64,
    /// Random probes tried at each step size before shrinking.
    pub probes: usize,
}

impl Default for ShrinkOptions {
    fn default() -> Self {
        Self { init_step: 0.5, min_step: 1e-12, probes: 10 }
    }
}

/// Maximizes `f` from `x0` by random-direction probing with geometrically
/// shrinking steps. Returns the best point and value seen; `f` is never
/// extrapolated, so the result is always attained.
pub fn maximize<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    x0: &[f64],
    opts: &ShrinkOptions,
    rng: &mut ChaCha8Rng,
) -> (f64, Vec<f64>) {
    let dim = x0.len();
    let mut x = x0.to_vec();
    let mut fx = f(&x);
    let mut step = opts.init_step;
    let mut probe = vec![0.0; dim];
    while step > opts.min_step {
        let mut improved = false;
        for _ in 0..opts.probes {
            for (p, xi) in probe.iter_mut().zip(&x) {
                let g: f64 = rng.random::<f64>() * 2.0 - 1.0;
                *p = xi + step * g;
            }
            let fp = f(&probe);
            if fp > fx {
                fx = fp;
                x.copy_from_slice(&probe);
                improved = true;
            }
        }
        // axis probes catch directions the random batch misses
        for i in 0..dim {
            for sgn in [1.0, -1.0] {
                probe.copy_from_slice(&x);
                probe[i] += sgn * step;
                let fp = f(&probe);
                if fp > fx {
                    fx = fp;
                    x.copy_from_slice(&probe);
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        } else {
            step *= 1.4;
            if step > opts.init_step {
                step = opts.init_step;
            }
        }
    }
    (fx, x)
}

/// Minimizes a convex `f` by the same probing scheme; convexity makes the
/// local result global, which is how the dual Chebyshev bounds are tightened.
pub fn minimize_convex<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    x0: &[f64],
    opts: &ShrinkOptions,
    rng: &mut ChaCha8Rng,
) -> (f64, Vec<f64>) {
    let (neg, x) = maximize(|x| -f(x), x0, opts, rng);
    (-neg, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn finds_smooth_maximum() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = |x: &[f64]| -(x[0] - 0.3).powi(2) - 2.0 * (x[1] + 0.7).powi(2);
        let (v, x) = maximize(f, &[0.0, 0.0], &ShrinkOptions::default(), &mut rng);
        assert!(v > -1e-18);
        assert!((x[0] - 0.3).abs() < 1e-9 && (x[1] + 0.7).abs() < 1e-9);
    }

    #[test]
    fn handles_kinks() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = |x: &[f64]| -(x[0] - 1.0).abs() - (x[1] - 2.0).abs();
        let (v, _) = maximize(f, &[0.0, 0.0], &ShrinkOptions::default(), &mut rng);
        assert!(v > -1e-10);
    }

    #[test]
    fn convex_minimum_of_max_of_moduli() {
        // min over c in C of max(|c - 1|, |c + 1|, |c - i|): center of {1,-1,i}
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = |x: &[f64]| {
            let (cr, ci) = (x[0], x[1]);
            let d = |pr: f64, pi: f64| ((cr - pr).powi(2) + (ci - pi).powi(2)).sqrt();
            d(1.0, 0.0).max(d(-1.0, 0.0)).max(d(0.0, 1.0))
        };
        let (v, _) = minimize_convex(f, &[0.5, 0.5], &ShrinkOptions::default(), &mut rng);
        assert!((v - 1.0).abs() < 1e-9);
    }
}
