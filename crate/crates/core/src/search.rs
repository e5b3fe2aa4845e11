//! Derivation spaces by exact linear algebra, and Rota-Baxter operators by
//! exhaustive enumeration over a coefficient grid.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::identities::{self, check_super_lie, derivation_sides, require_arity, Mode, Side};
use crate::linalg;
use crate::map::HomLinearMap;
use crate::product::SuperProduct;
use crate::scalar::{Parity, Scalar};
use crate::ternary;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `{−1, −1/2, 0, 1/2, 1}`.
pub fn default_grid() -> Vec<Scalar> {
    vec![
        Scalar::from_int(-1),
        Scalar::ratio(-1, 2),
        Scalar::zero(),
        Scalar::ratio(1, 2),
        Scalar::one(),
    ]
}

/// A Rota-Baxter search. Arity-3 targets use the ternary identity and
/// ignore `side`.
#[derive(Clone, Debug)]
pub struct SearchConfig<'a> {
    pub target: &'a SuperProduct,
    pub operator_parity: Parity,
    pub side: Side,
    pub grid: Vec<Scalar>,
    pub max_candidates: u64,
    pub mode: Mode,
}

impl<'a> SearchConfig<'a> {
    pub fn new(target: &'a SuperProduct, operator_parity: Parity, side: Side) -> SearchConfig<'a> {
        SearchConfig {
            target,
            operator_parity,
            side,
            grid: default_grid(),
            max_candidates: DEFAULT_BUDGET,
            mode: Mode::Strict,
        }
    }

    pub fn grid(mut self, grid: Vec<Scalar>) -> Self {
        self.grid = grid;
        self
    }

    pub fn budget(mut self, max_candidates: u64) -> Self {
        self.max_candidates = max_candidates;
        self
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    fn free_entries(&self) -> Vec<(usize, usize)> {
        let sp = self.target.space();
        HomLinearMap::free_entries(sp, sp, self.operator_parity)
    }

    /// `|grid|^free`, saturating.
    pub fn candidate_count(&self) -> u128 {
        let base = self.grid.len() as u128;
        let mut n: u128 = 1;
        for _ in 0..self.free_entries().len() {
            n = n.saturating_mul(base);
        }
        n
    }

    fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::InvalidConfig("coefficient grid is empty".into()));
        }
        for (i, a) in self.grid.iter().enumerate() {
            if self.grid[..i].contains(a) {
                return Err(Error::InvalidConfig(format!("coefficient {a} appears twice in the grid")));
            }
        }
        if self.max_candidates == 0 {
            return Err(Error::InvalidConfig("budget must be positive".into()));
        }
        Ok(())
    }
}

fn holds(cfg: &SearchConfig, r: &HomLinearMap) -> bool {
    let g = cfg.target;
    if g.arity() == 3 {
        ternary::ternary_rb_clause(g, r, "ternary_rota_baxter", true).is_empty()
    } else {
        identities::rota_baxter_clause(g, r, cfg.side, true).is_empty()
    }
}

/// Every operator with entries in the grid that satisfies the Rota-Baxter
/// identity, in odometer order over the free matrix entries (row-major,
/// last entry fastest).
pub fn rb_enumerate(cfg: &SearchConfig) -> Result<Vec<HomLinearMap>> {
    cfg.validate()?;
    let g = cfg.target;
    if cfg.mode == Mode::Strict {
        let report = if g.arity() == 3 {
            ternary::check_3_super_lie(g)?
        } else {
            check_super_lie(g)?
        };
        if !report.passed() {
            return Err(Error::PreconditionFailed(Box::new(report)));
        }
    }
    let count = cfg.candidate_count();
    if count > cfg.max_candidates as u128 {
        return Err(Error::BudgetExceeded {
            candidates: count,
            budget: cfg.max_candidates,
        });
    }
    let free = cfg.free_entries();
    let space = g.space();
    let d = space.dim();
    let base = cfg.grid.len();
    let found = (0..count as usize)
        .into_par_iter()
        .filter_map(|mut n| {
            let mut entries = vec![vec![Scalar::zero(); d]; d];
            for &(j, i) in free.iter().rev() {
                entries[j][i] = cfg.grid[n % base].clone();
                n /= base;
            }
            let r = HomLinearMap::new(space, space, cfg.operator_parity, entries).expect("parity-respecting entries");
            holds(cfg, &r).then_some(r)
        })
        .collect();
    Ok(found)
}

/// A basis of the derivations of the given side and parity, one map per
/// free variable of the linear system.
pub fn derivation_space(alg: &SuperProduct, side: Side, parity: Parity, mode: Mode) -> Result<Vec<HomLinearMap>> {
    require_arity(alg, 2)?;
    if mode == Mode::Strict {
        let report = check_super_lie(alg)?;
        if !report.passed() {
            return Err(Error::PreconditionFailed(Box::new(report)));
        }
    }
    let space = alg.space();
    let d = space.dim();
    let free = HomLinearMap::free_entries(space, space, parity);
    // residual of each unit map at each (x, y, output coordinate)
    let columns: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&(j, i)| {
            let mut images = vec![vec![Scalar::zero(); d]; d];
            images[i][j] = Scalar::one();
            let mut col = Vec::with_capacity(d * d * d);
            for x in 0..d {
                for y in 0..d {
                    let (lhs, rhs) = derivation_sides(alg, &images, parity, side, x, y);
                    col.extend(lhs.iter().zip(&rhs).map(|(a, b)| a - b));
                }
            }
            col
        })
        .collect();
    let rows: Vec<Vec<Scalar>> = (0..d * d * d)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    linalg::nullspace(&rows, free.len())?
        .into_iter()
        .map(|v| {
            let mut entries = vec![vec![Scalar::zero(); d]; d];
            for (&(j, i), c) in free.iter().zip(v) {
                entries[j][i] = c;
            }
            HomLinearMap::new(space, space, parity, entries)
        })
        .collect()
}
