//! Young diagrams, skew shapes and tableaux, viewed as set families.
//!
//! Cells are `(row, col)`, 1-based, in the coordinates of `λ`. The cells of `λ/μ` are
//! numbered row-major (top to bottom, left to right) starting at 1; that numbering
//! is the ground set `[n]` of every family built from a shape.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::config::{count_satisfying_bounded, satisfies, Configuration, SurjectiveWord};
use crate::error::{check_bound, Error, Result};
use crate::family::{SetFamily, Transversal};
use crate::shelling::unique_element_set;

/// Bound on the number of cells for brute-force tableau enumeration.
pub const TABLEAU_ORACLE_BOUND: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The skew shape `λ/μ`. A normal shape has `μ` empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShapeRepr", into = "ShapeRepr")]
pub struct SkewShape {
    lambda: Vec<usize>,
    mu: Vec<usize>,
    cells: Vec<Cell>,
}

#[derive(Serialize, Deserialize)]
struct ShapeRepr {
    lambda: Vec<usize>,
    #[serde(default)]
    mu: Vec<usize>,
}

impl TryFrom<ShapeRepr> for SkewShape {
    type Error = Error;

    fn try_from(repr: ShapeRepr) -> Result<Self> {
        SkewShape::new(repr.lambda, repr.mu)
    }
}

impl From<SkewShape> for ShapeRepr {
    fn from(s: SkewShape) -> Self {
        ShapeRepr {
            lambda: s.lambda,
            mu: s.mu,
        }
    }
}

fn is_partition(parts: &[usize]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

impl SkewShape {
    /// Validates `λ` (positive, weakly decreasing) and `μ ⊆ λ`. Trailing zeros of `μ`
    /// are dropped. A shape with no cells is rejected.
    pub fn new(lambda: Vec<usize>, mut mu: Vec<usize>) -> Result<Self> {
        while mu.last() == Some(&0) {
            mu.pop();
        }
        if lambda.is_empty() || lambda.contains(&0) || !is_partition(&lambda) {
            return Err(Error::InvalidShape(format!(
                "lambda {lambda:?} is not a partition"
            )));
        }
        if !is_partition(&mu) {
            return Err(Error::InvalidShape(format!("mu {mu:?} is not a partition")));
        }
        if mu.len() > lambda.len() || mu.iter().zip(&lambda).any(|(m, l)| m > l) {
            return Err(Error::InvalidShape(format!(
                "mu {mu:?} is not contained in lambda {lambda:?}"
            )));
        }
        let cells: Vec<Cell> = lambda
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| {
                let start = mu.get(i).copied().unwrap_or(0);
                (start + 1..=len).map(move |j| Cell::new(i + 1, j))
            })
            .collect();
        if cells.is_empty() {
            return Err(Error::InvalidShape("skew shape has no cells".into()));
        }
        Ok(SkewShape { lambda, mu, cells })
    }

    pub fn normal(lambda: Vec<usize>) -> Result<Self> {
        Self::new(lambda, Vec::new())
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    pub fn is_normal(&self) -> bool {
        self.mu.is_empty()
    }

    /// Cells of `λ/μ` in row-major order; position `k` is element `k + 1`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn in_lambda(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.row <= self.lambda.len() && c.col <= self.lambda[c.row - 1]
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.in_lambda(c) && c.col > self.mu.get(c.row - 1).copied().unwrap_or(0)
    }

    /// Element number (1-based, row-major) of a cell of `λ/μ`.
    pub fn element_of(&self, c: Cell) -> Option<usize> {
        self.cells.binary_search(&c).ok().map(|k| k + 1)
    }

    pub fn cell_of(&self, element: usize) -> Cell {
        self.cells[element - 1]
    }

    /// Length of column `col` of `λ`.
    pub fn column_length(&self, col: usize) -> usize {
        self.lambda.iter().take_while(|&&len| len >= col).count()
    }

    fn require_normal(&self) -> Result<()> {
        if self.is_normal() {
            Ok(())
        } else {
            Err(Error::InvalidShape(format!(
                "expected a normal shape, got mu = {:?}",
                self.mu
            )))
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.lambda)?;
        if !self.mu.is_empty() {
            write!(f, "/{:?}", self.mu)?;
        }
        Ok(())
    }
}

/// The hook of `cell`: the cell itself, the cells to its right in its row and the
/// cells below it in its column, all within `λ`. For a cell of `λ/μ` every hook cell
/// is again in `λ/μ`. Returned in row-major order.
pub fn hook(shape: &SkewShape, cell: Cell) -> Result<Vec<Cell>> {
    if !shape.in_lambda(cell) {
        return Err(Error::InvalidShape(format!(
            "cell {cell} is not in {shape}"
        )));
    }
    let arm = (cell.col..=shape.lambda[cell.row - 1]).map(|j| Cell::new(cell.row, j));
    let leg = (cell.row + 1..=shape.column_length(cell.col)).map(|i| Cell::new(i, cell.col));
    Ok(arm.chain(leg).collect())
}

pub fn hook_length(shape: &SkewShape, cell: Cell) -> Result<usize> {
    let c = cell;
    if !shape.in_lambda(c) {
        return Err(Error::InvalidShape(format!("cell {c} is not in {shape}")));
    }
    Ok(shape.lambda[c.row - 1] - c.col + shape.column_length(c.col) - c.row + 1)
}

/// The family `{H_r : r ∈ λ/μ}` over the row-major cell numbering, with member `k`
/// the hook of cell `k + 1`, together with its unique transversal `t(H_r) = r`.
pub fn hook_family(shape: &SkewShape) -> (SetFamily, Transversal) {
    let members = shape
        .cells()
        .iter()
        .map(|&c| {
            hook(shape, c)
                .expect("cells of the shape lie in lambda")
                .into_iter()
                .map(|h| {
                    shape
                        .element_of(h)
                        .expect("hooks of skew cells stay in the shape")
                })
                .collect()
        })
        .collect();
    let fam = SetFamily::new(shape.size(), members).expect("hook family is well formed");
    let t = Transversal::new((1..=shape.size()).collect());
    (fam, t)
}

/// Cells of `λ` whose removal leaves a Young diagram.
pub fn inner_corners(lambda: &[usize]) -> Vec<Cell> {
    lambda
        .iter()
        .enumerate()
        .filter(|&(i, &len)| len > 0 && lambda.get(i + 1).is_none_or(|&next| next < len))
        .map(|(i, &len)| Cell::new(i + 1, len))
        .collect()
}

/// Cells of `λ/μ` lying in exactly one hook of the hook family.
pub fn outer_corner_cells(shape: &SkewShape) -> Vec<Cell> {
    let (fam, _) = hook_family(shape);
    unique_element_set(&fam)
        .into_iter()
        .map(|e| shape.cell_of(e))
        .collect()
}

/// The configuration whose satisfying permutations are the balanced tableaux:
/// cell `(i, j)` demands rank `i' - i + 1`, where `i'` is the last row of column `j`.
pub fn balanced_configuration(shape: &SkewShape) -> Result<Configuration> {
    shape.require_normal()?;
    Ok(Configuration::new(
        shape
            .cells()
            .iter()
            .map(|c| shape.column_length(c.col) - c.row + 1)
            .collect(),
    ))
}

/// `n! / ∏ h_r` for a normal shape; the division is exact.
pub fn hook_length_formula(lambda: &[usize]) -> Result<BigUint> {
    let shape = SkewShape::normal(lambda.to_vec())?;
    let numerator: BigUint = (1..=shape.size()).map(BigUint::from).product();
    let hooks: BigUint = shape
        .cells()
        .iter()
        .map(|&c| BigUint::from(hook_length(&shape, c).expect("cell in shape")))
        .product();
    let (q, r) = (&numerator / &hooks, &numerator % &hooks);
    assert!(
        r == BigUint::from(0u8),
        "hook product does not divide n! for {shape}"
    );
    Ok(q)
}

/// A filling of the cells of a skew shape, aligned with [`SkewShape::cells`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    entries: Vec<usize>,
}

impl Tableau {
    /// `entries[k]` fills cell `k + 1` in row-major order. Entries must be positive.
    pub fn new(shape: SkewShape, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for {} cells",
                entries.len(),
                shape.size()
            )));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        Ok(Tableau { shape, entries })
    }

    /// Reads the row-major list over all cells of `λ`, with `None` on the cells of `μ`.
    pub fn from_row_major(shape: SkewShape, raw: &[Option<usize>]) -> Result<Self> {
        let total: usize = shape.lambda().iter().sum();
        if raw.len() != total {
            return Err(Error::InvalidTableau(format!(
                "expected {total} row-major entries over lambda, got {}",
                raw.len()
            )));
        }
        let mut entries = Vec::with_capacity(shape.size());
        let mut k = 0;
        for (i, &len) in shape.lambda().iter().enumerate() {
            for j in 1..=len {
                let in_skew = shape.contains(Cell::new(i + 1, j));
                match (in_skew, raw[k]) {
                    (true, Some(v)) => entries.push(v),
                    (false, None) => {}
                    (true, None) => {
                        return Err(Error::InvalidTableau(format!(
                            "cell ({},{j}) of the skew shape is empty",
                            i + 1
                        )))
                    }
                    (false, Some(_)) => {
                        return Err(Error::InvalidTableau(format!(
                            "cell ({},{j}) belongs to mu and must be null",
                            i + 1
                        )))
                    }
                }
                k += 1;
            }
        }
        Tableau::new(shape, entries)
    }

    pub fn to_row_major(&self) -> Vec<Option<usize>> {
        let mut out = Vec::new();
        for (i, &len) in self.shape.lambda().iter().enumerate() {
            for j in 1..=len {
                out.push(
                    self.shape
                        .element_of(Cell::new(i + 1, j))
                        .map(|e| self.entries[e - 1]),
                );
            }
        }
        out
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn entry(&self, c: Cell) -> Option<usize> {
        self.shape.element_of(c).map(|e| self.entries[e - 1])
    }

    /// The entry set is `[m]` for some `m <= n`.
    pub fn is_generalized_semistandard(&self) -> bool {
        self.to_word().is_ok()
    }

    /// The entries are exactly `[n]`.
    pub fn is_generalized_standard(&self) -> bool {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        sorted.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Generalized standard with rows increasing left to right and columns top to bottom.
    pub fn is_standard(&self) -> bool {
        self.is_generalized_standard() && self.rows_and_columns_increase()
    }

    fn rows_and_columns_increase(&self) -> bool {
        self.shape.cells().iter().all(|&c| {
            let v = self.entry(c).expect("cell of the shape");
            let right = self.entry(Cell::new(c.row, c.col + 1));
            let below = self.entry(Cell::new(c.row + 1, c.col));
            right.is_none_or(|r| v < r) && below.is_none_or(|b| v < b)
        })
    }

    /// The word `w(k) = entry of cell k`; fails unless the entry set is `[max entry]`.
    pub fn to_word(&self) -> Result<SurjectiveWord> {
        SurjectiveWord::from_values(self.entries.clone())
            .map_err(|e| Error::InvalidTableau(format!("entry set is not an interval [m]: {e}")))
    }

    /// Whether the induced word satisfies `f` on the hook family.
    pub fn satisfies(&self, f: &Configuration) -> Result<bool> {
        let (fam, t) = hook_family(&self.shape);
        f.validate(&fam)?;
        satisfies(&self.to_word()?, &fam, &t, f)
    }

    /// Balanced: a bijective filling of a normal shape satisfying the balanced
    /// configuration.
    pub fn is_balanced(&self) -> Result<bool> {
        let f = balanced_configuration(&self.shape)?;
        Ok(self.is_generalized_standard() && self.satisfies(&f)?)
    }
}

/// Standard tableaux of `shape`, counted by filtering every bijective filling.
pub fn count_standard(shape: &SkewShape) -> Result<u64> {
    count_standard_bounded(shape, TABLEAU_ORACLE_BOUND)
}

pub fn count_standard_bounded(shape: &SkewShape, bound: usize) -> Result<u64> {
    check_bound("cell count", shape.size(), bound)?;
    let mut filling: Vec<usize> = (1..=shape.size()).collect();
    let mut count = 0;
    loop {
        let t = Tableau {
            shape: shape.clone(),
            entries: filling.clone(),
        };
        if t.rows_and_columns_increase() {
            count += 1;
        }
        if !crate::perm::next_permutation(&mut filling) {
            return Ok(count);
        }
    }
}

/// Balanced tableaux of a normal shape, counted as permutations satisfying the
/// balanced configuration.
pub fn count_balanced(shape: &SkewShape) -> Result<u64> {
    let f = balanced_configuration(shape)?;
    let (fam, t) = hook_family(shape);
    count_satisfying_bounded(&fam, &t, &f, fam.n(), TABLEAU_ORACLE_BOUND)
}

/// Every partition of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every skew shape `λ/μ` with `|λ| <= max_lambda` and `1 <= |λ/μ| <= max_cells`.
pub fn skew_shapes(max_lambda: usize, max_cells: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for size in 1..=max_lambda {
        for lambda in partitions(size) {
            for mu_size in size.saturating_sub(max_cells)..size {
                let mus = if mu_size == 0 {
                    vec![Vec::new()]
                } else {
                    partitions(mu_size)
                };
                for mu in mus {
                    if let Ok(shape) = SkewShape::new(lambda.clone(), mu) {
                        out.push(shape);
                    }
                }
            }
        }
    }
    out
}

/// `∏ h_r` over the cells of `λ/μ`.
pub fn hook_product(shape: &SkewShape) -> BigUint {
    shape
        .cells()
        .iter()
        .map(|&c| BigUint::from(hook_length(shape, c).expect("cell in shape")))
        .fold(BigUint::one(), |acc, h| acc * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::{has_unique_transversal, is_shellable};

    fn cells(list: &[(usize, usize)]) -> Vec<Cell> {
        list.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn shape_validation() {
        assert!(SkewShape::normal(vec![]).is_err());
        assert!(SkewShape::normal(vec![1, 2]).is_err());
        assert!(SkewShape::new(vec![2, 1], vec![3]).is_err());
        assert!(SkewShape::new(vec![2, 1], vec![1, 1, 1]).is_err());
        assert!(SkewShape::new(vec![2, 1], vec![2, 1]).is_err());
        let s = SkewShape::new(vec![4, 3, 1], vec![2, 0]).unwrap();
        assert_eq!(s.mu(), &[2]);
        assert_eq!(s.size(), 6);
        assert_eq!(s.cells()[0], Cell::new(1, 3));
    }

    #[test]
    fn hook_examples() {
        let s = SkewShape::new(vec![5, 4, 3, 3], vec![2, 2, 1]).unwrap();
        assert_eq!(hook_length(&s, Cell::new(2, 3)), Ok(4));
        assert_eq!(
            hook(&s, Cell::new(2, 3)).unwrap(),
            cells(&[(2, 3), (2, 4), (3, 3), (4, 3)])
        );
        let one = SkewShape::normal(vec![1]).unwrap();
        assert_eq!(hook_length(&one, Cell::new(1, 1)), Ok(1));
        let stair = SkewShape::normal(vec![3, 2, 1]).unwrap();
        assert_eq!(
            hook(&stair, Cell::new(1, 1)).unwrap(),
            cells(&[(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)])
        );
        assert_eq!(hook_length(&stair, Cell::new(1, 1)), Ok(5));
        assert!(hook_length(&stair, Cell::new(2, 3)).is_err());
    }

    #[test]
    fn hook_length_matches_hook_size() {
        for shape in skew_shapes(8, 8) {
            for &c in shape.cells() {
                assert_eq!(
                    hook(&shape, c).unwrap().len(),
                    hook_length(&shape, c).unwrap()
                );
            }
        }
    }

    #[test]
    fn hook_family_examples() {
        let (fam, t) = hook_family(&SkewShape::normal(vec![3, 2, 1]).unwrap());
        let sizes: Vec<usize> = fam.members().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![5, 3, 1, 3, 1, 1]);
        assert_eq!(t.as_slice(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(is_shellable(&fam), Ok(true));

        let (fam, _) = hook_family(&SkewShape::normal(vec![1]).unwrap());
        assert_eq!(fam.members(), &[vec![1]]);

        let stair = SkewShape::new(vec![6, 5, 4, 3, 2, 1], vec![2, 1]).unwrap();
        let (fam, _) = hook_family(&stair);
        assert_eq!(fam.len(), 18);
        let product: usize = fam.members().iter().map(Vec::len).product();
        assert_eq!(product, 52_093_125);
        assert_eq!(hook_product(&stair), BigUint::from(52_093_125u32));
    }

    #[test]
    fn hook_families_are_shellable_with_identity_transversal() {
        for shape in skew_shapes(9, 7) {
            let (fam, t) = hook_family(&shape);
            assert_eq!(is_shellable(&fam), Ok(true), "{shape}");
            assert_eq!(has_unique_transversal(&fam), Ok(true), "{shape}");
            t.validate(&fam).unwrap();
        }
    }

    #[test]
    fn corners() {
        assert_eq!(inner_corners(&[4, 2, 2]), cells(&[(1, 4), (3, 2)]));
        assert_eq!(inner_corners(&[1]), cells(&[(1, 1)]));
        assert_eq!(inner_corners(&[3, 3]), cells(&[(2, 3)]));
        assert_eq!(
            outer_corner_cells(&SkewShape::normal(vec![3, 2, 1]).unwrap()),
            cells(&[(1, 1)])
        );
        let stair = SkewShape::new(vec![6, 5, 4, 3, 2, 1], vec![2, 1]).unwrap();
        assert_eq!(outer_corner_cells(&stair), cells(&[(1, 3), (2, 2), (3, 1)]));
    }

    #[test]
    fn balanced_examples() {
        let shape = SkewShape::normal(vec![4, 3, 2]).unwrap();
        let f = balanced_configuration(&shape).unwrap();
        let at = |c: Cell| f.demand(shape.element_of(c).unwrap() - 1);
        assert_eq!(at(Cell::new(2, 1)), 2);
        assert_eq!(at(Cell::new(1, 1)), 3);
        assert_eq!(at(Cell::new(1, 4)), 1);
        let t = Tableau::new(shape.clone(), vec![4, 5, 8, 3, 6, 7, 9, 1, 2]).unwrap();
        assert_eq!(t.is_balanced(), Ok(true));
        let standard = Tableau::new(shape, vec![1, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap();
        assert_eq!(standard.is_balanced(), Ok(false));

        let one = Tableau::new(SkewShape::normal(vec![1]).unwrap(), vec![1]).unwrap();
        assert_eq!(one.is_balanced(), Ok(true));

        let skew = SkewShape::new(vec![2, 1], vec![1]).unwrap();
        assert!(balanced_configuration(&skew).is_err());
    }

    #[test]
    fn standard_examples() {
        let shape = SkewShape::new(vec![4, 3, 1], vec![2]).unwrap();
        let rows = |v: &[Option<usize>]| Tableau::from_row_major(shape.clone(), v).unwrap();
        let standard = rows(&[
            None,
            None,
            Some(2),
            Some(3),
            Some(1),
            Some(5),
            Some(6),
            Some(4),
        ]);
        assert!(standard.is_standard());
        let general = rows(&[
            None,
            None,
            Some(3),
            Some(5),
            Some(6),
            Some(1),
            Some(2),
            Some(4),
        ]);
        assert!(general.is_generalized_standard());
        assert!(!general.is_standard());
        let semi = rows(&[
            None,
            None,
            Some(2),
            Some(3),
            Some(3),
            Some(1),
            Some(2),
            Some(2),
        ]);
        assert!(semi.is_generalized_semistandard());
        assert!(!semi.is_generalized_standard());
        assert_eq!(semi.to_word().unwrap().m(), 3);
        assert_eq!(
            standard.to_row_major()[2..],
            [Some(2), Some(3), Some(1), Some(5), Some(6), Some(4)]
        );
        assert!(Tableau::from_row_major(shape.clone(), &[Some(1); 8]).is_err());
    }

    #[test]
    fn semistandard_example_satisfies_all_ones() {
        let shape = SkewShape::normal(vec![4, 3, 2]).unwrap();
        let t = Tableau::new(shape, vec![1, 2, 3, 3, 1, 2, 3, 3, 3]).unwrap();
        let (fam, _) = hook_family(t.shape());
        assert_eq!(t.satisfies(&Configuration::minimal(&fam)), Ok(true));
    }

    #[test]
    fn counting_tableaux() {
        let stair = SkewShape::normal(vec![3, 2, 1]).unwrap();
        assert_eq!(
            hook_length_formula(&[3, 2, 1]).unwrap(),
            BigUint::from(16u32)
        );
        assert_eq!(count_standard(&stair), Ok(16));
        let square = SkewShape::normal(vec![2, 2]).unwrap();
        assert_eq!(hook_length_formula(&[2, 2]).unwrap(), BigUint::from(2u32));
        assert_eq!(count_standard(&square), Ok(2));
        assert_eq!(count_balanced(&square), Ok(2));
        let big = SkewShape::normal(vec![5, 5]).unwrap();
        assert!(matches!(
            count_standard(&big),
            Err(Error::OracleLimit { .. })
        ));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn shape_json() {
        let s: SkewShape = serde_json::from_str(r#"{"lambda":[3,2,1]}"#).unwrap();
        assert!(s.is_normal());
        let s: SkewShape = serde_json::from_str(r#"{"lambda":[4,3,1],"mu":[2]}"#).unwrap();
        assert_eq!(s.size(), 6);
        assert!(serde_json::from_str::<SkewShape>(r#"{"lambda":[1,2]}"#).is_err());
    }
}
