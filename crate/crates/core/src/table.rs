//! Rendering and verification of the strip multiplication tables.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::iso::{self, canonical, from_canonical, IsometryKind, StripIsometry};
use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 1856;
pub const RANDOM_SAMPLES: usize = 1000;

/// Cell formulas of the full table, row `p`, column `q`, meaning `p ∘ q`.
/// Row parameters are `t` / `A`, column parameters `s` / `B`.
const CELLS: [[&str; 4]; 4] = [
    ["T(t+s)", "R(B+t/2)", "V(B+t/2)", "S(t+s)"],
    ["R(A-s/2)", "T(2(A-B))", "S(2(A-B))", "V(A-s/2)"],
    ["V(A-s/2)", "S(2(A-B))", "T(2(A-B))", "R(A-s/2)"],
    ["S(t+s)", "V(B+t/2)", "R(B+t/2)", "T(t+s)"],
];

const ROW_HEADERS: [&str; 4] = ["T(t)", "R(A)", "V(A)", "S(t)"];
const COL_HEADERS: [&str; 4] = ["T(s)", "R(B)", "V(B)", "S(s)"];

/// Both tables as plain text.
pub fn print_table() -> String {
    let mut out = String::new();
    out.push_str("Strip multiplication table (row ∘ column, column applied first)\n");
    let width = 12;
    out.push_str(&format!("{:<width$}", ""));
    for h in COL_HEADERS {
        out.push_str(&format!("{h:<width$}"));
    }
    out.push('\n');
    for (row, cells) in ROW_HEADERS.iter().zip(CELLS.iter()) {
        out.push_str(&format!("{row:<width$}"));
        for c in cells {
            out.push_str(&format!("{c:<width$}"));
        }
        out.push('\n');
    }
    out.push('\n');
    out.push_str("Compact table\n");
    out.push_str("   ");
    for k in IsometryKind::ALL {
        out.push_str(&format!("{}  ", k.letter()));
    }
    out.push('\n');
    for p in IsometryKind::ALL {
        out.push_str(&format!("{}  ", p.letter()));
        for q in IsometryKind::ALL {
            out.push_str(&format!("{}  ", p.product(q).letter()));
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub row: IsometryKind,
    pub col: IsometryKind,
    pub checked: usize,
    pub failures: usize,
    /// First disagreement: operands, table value, oracle value.
    pub first_failure: Option<(StripIsometry, StripIsometry, StripIsometry, StripIsometry)>,
}

impl CellCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn name(&self) -> String {
        format!("{}∘{}", self.row.letter(), self.col.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub seed: u64,
    pub cells: Vec<CellCheck>,
}

impl TableReport {
    pub fn passed_cells(&self) -> usize {
        self.cells.iter().filter(|c| c.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed_cells() == self.cells.len()
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cells {
            let status = if c.passed() { "pass" } else { "FAIL" };
            write!(f, "{} {status} {}/{}", c.name(), c.checked - c.failures, c.checked)?;
            if let Some((p, q, got, want)) = &c.first_failure {
                write!(f, " first: {p} ∘ {q} gave {got}, expected {want}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "{}/{} cells verified (seed {})", self.passed_cells(), self.cells.len(), self.seed)
    }
}

/// Parameter grid `k/4` for `|k| ≤ 8`.
pub fn parameter_grid() -> Vec<Scalar> {
    (-8..=8).map(|k| Scalar::new(k, 4)).collect()
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Scalar {
    let n: i128 = rng.gen_range(-1000..=1000);
    let d: i128 = rng.gen_range(1..=64);
    Scalar::new(n, d)
}

/// Grid pairs followed by `RANDOM_SAMPLES` seeded random pairs.
pub fn parameter_pairs(seed: u64) -> Vec<(Scalar, Scalar)> {
    let grid = parameter_grid();
    let mut pairs: Vec<(Scalar, Scalar)> = grid
        .iter()
        .flat_map(|a| grid.iter().map(move |b| (*a, *b)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SAMPLES {
        pairs.push((random_rational(&mut rng), random_rational(&mut rng)));
    }
    pairs
}

pub fn verify_table(seed: u64) -> TableReport {
    verify_table_with(iso::compose, seed)
}

/// Checks every cell of `compose` against the affine-form product.
pub fn verify_table_with<F>(compose: F, seed: u64) -> TableReport
where
    F: Fn(&StripIsometry, &StripIsometry) -> StripIsometry,
{
    let pairs = parameter_pairs(seed);
    let mut cells = Vec::with_capacity(16);
    for row in IsometryKind::ALL {
        for col in IsometryKind::ALL {
            let mut check = CellCheck {
                row,
                col,
                checked: 0,
                failures: 0,
                first_failure: None,
            };
            for (a, b) in &pairs {
                let p = StripIsometry::new(row, *a);
                let q = StripIsometry::new(col, *b);
                let got = compose(&p, &q);
                let want = from_canonical(&canonical(&p).then_after(&canonical(&q)));
                check.checked += 1;
                if got != want {
                    check.failures += 1;
                    check.first_failure.get_or_insert((p, q, got, want));
                }
            }
            cells.push(check);
        }
    }
    TableReport { seed, cells }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes_all_cells() {
        let report = verify_table(DEFAULT_SEED);
        assert!(report.all_passed(), "{report}");
        assert!(report.to_string().ends_with("16/16 cells verified (seed 1856)\n"));
        assert!(report.cells.iter().all(|c| c.checked == 289 + RANDOM_SAMPLES));
    }

    #[test]
    fn injected_bug_is_named() {
        // V_A ∘ R_B with the sign of the glide flipped
        let buggy = |p: &StripIsometry, q: &StripIsometry| {
            let r = iso::compose(p, q);
            if p.kind == IsometryKind::VerticalMirror && q.kind == IsometryKind::Rotation {
                StripIsometry::glide(-r.param)
            } else {
                r
            }
        };
        let report = verify_table_with(buggy, DEFAULT_SEED);
        let failing: Vec<String> = report.cells.iter().filter(|c| !c.passed()).map(|c| c.name()).collect();
        assert_eq!(failing, vec!["V∘R".to_string()]);
        assert!(report.to_string().contains("V∘R FAIL"));
        assert!(report.to_string().contains("15/16 cells verified"));
    }

    #[test]
    fn seeded_runs_are_identical() {
        assert_eq!(verify_table(7).to_string(), verify_table(7).to_string());
        assert_ne!(parameter_pairs(7), parameter_pairs(8));
    }

    #[test]
    fn printed_table_mentions_every_cell() {
        let text = print_table();
        assert!(text.contains("S(2(A-B))"));
        assert!(text.contains("R  R  T  S  V"));
        assert!(text.contains("S  S  V  R  T"));
    }
}
