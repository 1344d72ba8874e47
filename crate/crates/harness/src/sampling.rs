//! Parameter draws inside the precondition region of each identity.
//!
//! Each complex parameter is drawn from an axis-aligned box; draws that land
//! near a singular configuration are rejected and redrawn.

use std::collections::BTreeMap;

use dickson_core::identity::{IdentityCase, IdentityId, Symbol};
use dickson_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{CaseConfig, Region, Sampling};

/// Distance kept from every singular configuration.
pub const GUARD: f64 = 1e-2;
/// Upper bound on `|x/a|` (resp. `|z/a|`) for the asymptotic propositions.
pub const SMALL_RATIO: f64 = 0.01;
const MAX_ATTEMPTS: usize = 10_000;

/// Default box for a parameter of an identity.
pub fn default_region(id: IdentityId, sym: Symbol) -> Region {
    use IdentityId::*;
    use Symbol::*;
    match (id, sym) {
        (P1 | P2, K) | (P3 | GQ, K) => Region::new([-0.9, 0.9], [-0.3, 0.3]),
        (_, K) => Region::new([0.2, 0.8], [-0.2, 0.2]),
        (P1 | P2, A) => Region::new([5.0, 20.0], [-2.0, 2.0]),
        (EX2, A) => Region::new([0.5, 1.5], [-0.3, 0.3]),
        (_, A) => Region::new([0.5, 3.0], [-1.0, 1.0]),
        (EX2, Alpha) => Region::new([0.1, 0.5], [-0.1, 0.1]),
        (_, Alpha | Beta | B) => Region::new([0.05, 0.5], [-0.2, 0.2]),
        (P1, X) => Region::new([0.01, 0.1], [-0.05, 0.05]),
        (P3 | GQ, X) => Region::new([0.3, 0.8], [-0.2, 0.2]),
        (_, X) => Region::new([-1.0, 1.0], [-0.5, 0.5]),
        (P2, Z) => Region::new([0.01, 0.1], [-0.05, 0.05]),
        (P3 | GQ, Z) => Region::new([0.05, 0.3], [-0.1, 0.1]),
        (EX2, Z) => Region::new([-0.3, 0.3], [-0.2, 0.2]),
        (_, Z) => Region::new([-0.5, 0.5], [-0.3, 0.3]),
        (_, U | Y) => Region::new([0.4, 1.5], [-0.5, 0.5]),
    }
}

fn far(w: Complex64) -> bool {
    w.norm() > GUARD
}

/// Whether a draw keeps clear of the singular configurations of its identity.
pub fn admissible(case: &IdentityCase<f64>) -> bool {
    use IdentityId::*;
    use Symbol::*;
    let p = |s| case.get(s);
    let has = |s| case.params.contains_key(&s);
    if has(A) && case.id != EX2 && p(A).norm() < 0.1 {
        return false;
    }
    match case.id {
        T1 | T4 => far(p(X) * p(X) - p(Alpha) * 4.0) && far(p(Alpha)),
        T2 | T5 => far(1.0 + p(Z) * p(Z) * p(Alpha)) && far(p(Z)),
        T3 | T6 => far(p(Z)) && far(p(X) * p(Z) - 1.0),
        T7 => far(p(U)) && far(p(B)) && far(p(B) / p(U) + p(U)),
        T8 => far(p(Y) * p(Y) - p(Beta)) && far(p(Beta)) && far(p(Y)),
        P1 => (p(X) / p(A)).norm() <= SMALL_RATIO,
        P2 => (p(Z) / p(A)).norm() <= SMALL_RATIO,
        P3 => far(p(X)),
        GQ => far(p(X)) && far(p(Z)),
        EX1 => true,
        EX2 => far(p(Alpha)) && p(Z).norm_sqr() * p(Alpha).norm() < 1.0,
    }
}

/// One sampled case, or the reason sampling gave up.
#[derive(Debug, Clone)]
pub struct Draw {
    /// Position of the `k` value in the sweep (0 when there is no sweep).
    pub k_index: usize,
    pub draw: usize,
    pub case: Result<IdentityCase<f64>, String>,
}

/// Coordinate `coord` of point `index` of the additive recurrence with generalized
/// golden ratio `phi`, the positive root of `x^(dims+1) = x + 1`.
fn weyl(index: usize, coord: usize, dims: usize) -> f64 {
    let mut phi = 2.0f64;
    for _ in 0..64 {
        phi = (1.0 + phi).powf(1.0 / (dims as f64 + 1.0));
    }
    let alpha = phi.powi(-(coord as i32 + 1));
    (0.5 + alpha * index as f64).fract()
}

fn lerp(lo: f64, hi: f64, t: f64) -> f64 {
    lo + (hi - lo) * t
}

fn draw_point(
    region: &Region,
    sampling: Sampling,
    rng: &mut ChaCha8Rng,
    index: usize,
    dim: usize,
    dims: usize,
) -> Complex64 {
    let (tr, ti) = match sampling {
        Sampling::Random => (rng.gen::<f64>(), rng.gen::<f64>()),
        Sampling::Grid => (weyl(index, 2 * dim, 2 * dims), weyl(index, 2 * dim + 1, 2 * dims)),
    };
    Complex64::new(lerp(region.re[0], region.re[1], tr), lerp(region.im[0], region.im[1], ti))
}

/// Draws every case of one suite entry. `stream` separates entries sharing a seed.
pub fn sample_case(cfg: &CaseConfig, seed: u64, stream: u64) -> Vec<Draw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let sweep: Vec<Option<Complex64>> =
        if cfg.k.is_empty() { vec![None] } else { cfg.k.iter().copied().map(Some).collect() };
    let free: Vec<Symbol> = cfg
        .id
        .signature()
        .iter()
        .copied()
        .filter(|s| !cfg.fixed.contains_key(s) && !(*s == Symbol::K && !cfg.k.is_empty()))
        .collect();
    let mut out = Vec::with_capacity(sweep.len() * cfg.count);
    let mut index = 0usize;
    for (k_index, k) in sweep.iter().enumerate() {
        for draw in 0..cfg.count {
            let mut result = Err(format!("no admissible draw after {MAX_ATTEMPTS} attempts"));
            for _ in 0..MAX_ATTEMPTS {
                let mut params: BTreeMap<Symbol, Complex64> = cfg.fixed.clone();
                if let Some(k) = k {
                    params.insert(Symbol::K, *k);
                }
                for (dim, sym) in free.iter().enumerate() {
                    let region = cfg.region.get(sym).copied().unwrap_or_else(|| default_region(cfg.id, *sym));
                    params.insert(*sym, draw_point(&region, cfg.sampling, &mut rng, index, dim, free.len()));
                }
                index += 1;
                match IdentityCase::new(cfg.id, params) {
                    Ok(case) if admissible(&case) => {
                        result = Ok(case);
                        break;
                    }
                    Ok(_) => {}
                    Err(e) => {
                        result = Err(e.to_string());
                        break;
                    }
                }
                if free.is_empty() {
                    // nothing to redraw
                    result = Err("fixed parameters violate the sampling guards".into());
                    break;
                }
            }
            out.push(Draw { k_index, draw, case: result });
        }
    }
    out
}
