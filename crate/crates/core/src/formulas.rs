// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//! Closed forms and counting identities, used as oracles against the
//! searches and the constructions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::census;
use crate::graph::Graph;
use crate::named;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("half-length parameter must be at least 2, got {0}")]
    HalfLength(usize),
    #[error("star sizes must be at least 1")]
    EmptyStar,
    #[error("star forest covers {covered} vertices but n = {n}")]
    ForestOrder { n: usize, covered: usize },
    #[error("closed form for C5 copies needs r >= 6, got {0}")]
    DegreeTooSmall(usize),
    #[error("(n, k) = ({n}, {k}) lies outside the window: n odd, k even, 2*floor(n/5) < k <= 2*floor(n/4)")]
    OutsideWindow { n: usize, k: usize },
    #[error("(r, m) = ({r}, {m}) outside C(r+1,2) <= m <= r(r+2)/2")]
    SizeOutOfRange { r: usize, m: usize },
}

/// `C(n, k)`, zero when `k > n`.
///
/// # Panics
///
/// Panics when the result does not fit in a `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// A named forbidden family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `K3`.
    Triangle,
    /// The single odd cycle `C_{2ℓ-1}`.
    OddCycle { ell: usize },
    /// Every odd cycle `C3, C5, …, C_{2ℓ-1}`.
    OddCyclePrefix { ell: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FormulaError> {
        match *self {
            FamilySpec::Triangle => Ok(()),
            FamilySpec::OddCycle { ell } | FamilySpec::OddCyclePrefix { ell } if ell < 2 => {
                Err(FormulaError::HalfLength(ell))
            }
            _ => Ok(()),
        }
    }

    /// The half-length parameter; a triangle is the `ℓ = 2` case.
    pub fn ell(&self) -> usize {
        match *self {
            FamilySpec::Triangle => 2,
            FamilySpec::OddCycle { ell } | FamilySpec::OddCyclePrefix { ell } => ell,
        }
    }

    /// Longest forbidden cycle.
    pub fn longest_cycle(&self) -> usize {
        2 * self.ell() - 1
    }

    pub fn members(&self) -> Vec<Graph> {
        match *self {
            FamilySpec::Triangle => vec![named::complete(3)],
            FamilySpec::OddCycle { ell } => vec![named::cycle(2 * ell - 1)],
            FamilySpec::OddCyclePrefix { ell } => (2..=ell).map(|l| named::cycle(2 * l - 1)).collect(),
        }
    }

    pub fn name(&self) -> String {
        match *self {
            FamilySpec::Triangle => "K3".to_string(),
            FamilySpec::OddCycle { ell } => format!("C{}", 2 * ell - 1),
            FamilySpec::OddCyclePrefix { ell } => format!("C3..C{}", 2 * ell - 1),
        }
    }

    /// Only the triangle value is proved for every order; the odd-cycle
    /// values hold for sufficiently large `n`.
    pub fn closed_form_is_exact(&self) -> bool {
        self.ell() == 2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub value: usize,
    /// False when the value is only known for sufficiently large orders.
    pub exact: bool,
}

/// Regular Turán number from the closed form: `n/2` for even `n`,
/// `2⌊n/(2ℓ+1)⌋` for odd `n`.
pub fn exr_closed_form(n: usize, fam: FamilySpec) -> Result<ClosedForm, FormulaError> {
    fam.validate()?;
    let value = if n.is_multiple_of(2) { n / 2 } else { 2 * (n / (2 * fam.ell() + 1)) };
    Ok(ClosedForm {
        value,
        exact: fam.closed_form_is_exact(),
    })
}

/// `k3(G) + k3(Ḡ) + ½ Σ deg(v)(n-1-deg(v)) - C(n,3)`, which is zero for every graph.
pub fn goodman_defect(g: &Graph) -> i64 {
    let n = g.order() as i64;
    let own = census::count_cliques(g, 3) as i64;
    let comp = census::count_cliques(&g.complement(), 3) as i64;
    let twice_mixed: i64 = g
        .degrees()
        .iter()
        .map(|&d| d as i64 * (n - 1 - d as i64))
        .sum();
    debug_assert!(twice_mixed % 2 == 0);
    own + comp + twice_mixed / 2 - binomial(n.max(0) as u64, 3) as i64
}

/// Number of 5-cycles in the complement of the disjoint union of stars
/// `K_{1,a_i}`, by inclusion–exclusion. The order must be exactly `Σ (a_i + 1)`.
/// The sums over `i ≠ j` run over ordered pairs.
pub fn c5_star_forest_count(n: usize, parts: &[usize]) -> Result<u64, FormulaError> {
    if parts.contains(&0) {
        return Err(FormulaError::EmptyStar);
    }
    let covered: usize = parts.iter().map(|a| a + 1).sum();
    if covered != n {
        return Err(FormulaError::ForestOrder { n, covered });
    }
    let c = |x: i128, k: u64| binomial(x.max(0) as u64, k) as i128;
    let n_ = n as i128;
    let a: Vec<i128> = parts.iter().map(|&x| x as i128).collect();
    let total_a: i128 = a.iter().sum();
    let mut value = 12 * c(n_, 5) - 6 * total_a * c(n_ - 2, 3);
    value += 2 * a.iter().map(|&x| c(x, 2)).sum::<i128>() * c(n_ - 3, 2);
    for (i, &ai) in a.iter().enumerate() {
        for (j, &aj) in a.iter().enumerate() {
            if i != j {
                value += 2 * ai * aj * (n_ - 4);
                value -= 2 * c(ai, 2) * aj;
            }
        }
    }
    Ok(u64::try_from(value).expect("a cycle count is non-negative"))
}

/// Maximum number of 5-cycles in a graph on `r + 2` vertices with maximum
/// degree at most `r`, for `r >= 6`.
pub fn ex_c5_closed_form(r: usize) -> Result<u64, FormulaError> {
    if r < 6 {
        return Err(FormulaError::DegreeTooSmall(r));
    }
    let r64 = r as u64;
    Ok(if r % 2 == 1 {
        12 * binomial(r64 + 1, 5)
    } else {
        r64 * (r64 * r64 - 4) * (r64 * r64 - 5 * r64 + 9) / 10
    })
}

/// Order, degree bound and size in the clique-maximisation problem, with
/// `n = a(r+1) + b`, `0 <= b <= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlsParams {
    pub n: usize,
    pub r: usize,
    pub m: usize,
    pub t: usize,
    pub a: usize,
    pub b: usize,
}

impl GlsParams {
    pub fn new(n: usize, r: usize, m: usize, t: usize) -> Option<Self> {
        if r == 0 || t < 2 || 2 * m > n * r {
            return None;
        }
        Some(GlsParams {
            n,
            r,
            m,
            t,
            a: n / (r + 1),
            b: n % (r + 1),
        })
    }

    pub fn is_critical(&self) -> bool {
        let (lo, hi) = gls_critical_range(self.n, self.r);
        lo < self.m && self.m <= hi
    }
}

/// `(a·C(r+1,2) + C(b,2), ⌊nr/2⌋)`; the critical regime is `low < m <= high`.
pub fn gls_critical_range(n: usize, r: usize) -> (usize, usize) {
    let (a, b) = (n / (r + 1), n % (r + 1));
    let low = a * binomial(r as u64 + 1, 2) as usize + binomial(b as u64, 2) as usize;
    (low, n * r / 2)
}

/// Whether `n` is odd, `k` even and `2⌊n/5⌋ < k <= 2⌊n/4⌋`.
pub fn in_supersaturation_window(n: usize, k: usize) -> bool {
    n % 2 == 1 && k.is_multiple_of(2) && 2 * (n / 5) < k && k <= 2 * (n / 4)
}

/// The conjectured minimum triangle count `(k/2)(k/2 - q - 1)` of a
/// `k`-regular graph on `n = 2p+1` vertices, `k = p - q`.
pub fn conj55_bound(n: usize, k: usize) -> Result<i64, FormulaError> {
    if !in_supersaturation_window(n, k) {
        return Err(FormulaError::OutsideWindow { n, k });
    }
    let p = (n as i64 - 1) / 2;
    let q = p - k as i64;
    let h = k as i64 / 2;
    Ok(h * (h - q - 1))
}

/// Maximum triangle count over graphs of order `r + 2`, size `m` and
/// maximum degree at most `r`, valid for `C(r+1,2) <= m <= r(r+2)/2`:
/// `C(n,3) - ½((r+1)f(r) + f(2m - r(r+1)))` with `f(x) = x(n-1-x)`.
pub fn r_plus_two_max_triangles(r: usize, m: usize) -> Result<u64, FormulaError> {
    let lo = binomial(r as u64 + 1, 2) as usize;
    if r == 0 || m < lo || 2 * m > r * (r + 2) {
        return Err(FormulaError::SizeOutOfRange { r, m });
    }
    let n = r as i64 + 2;
    let f = |x: i64| x * (n - 1 - x);
    let rr = r as i64;
    let twice = (rr + 1) * f(rr) + f(2 * m as i64 - rr * (rr + 1));
    Ok((binomial(n as u64, 3) as i64 - twice / 2) as u64)
}
