//! Young tableaux with entries `1..=t`: rows strictly increasing, columns
//! weakly increasing, `d_i` copies of `i`.
//!
//! Such fillings of shape `μ` index the components of `n ∩ C(μ)`; the
//! complement components correspond to single-box "minimal movements" of the
//! tableau `T(d)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::{gamma_set, lambda_of, DimensionVector, Pair};
use crate::error::{Error, Result};
use crate::partition::{dominance_leq, Partition};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauDoc", into = "TableauDoc")]
pub struct YoungTableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauDoc {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauDoc> for YoungTableau {
    type Error = Error;

    fn try_from(doc: TableauDoc) -> Result<Self> {
        let t = YoungTableau::new(doc.rows)?;
        if t.shape().parts() != doc.shape.as_slice() {
            return Err(Error::InvalidTableau(format!(
                "declared shape {:?} does not match rows",
                doc.shape
            )));
        }
        Ok(t)
    }
}

impl From<YoungTableau> for TableauDoc {
    fn from(t: YoungTableau) -> Self {
        TableauDoc {
            shape: t.shape().parts().to_vec(),
            rows: t.rows,
        }
    }
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if rows.iter().any(Vec::is_empty) {
            return bad("empty row".into());
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return bad("entries must be positive".into());
        }
        if !rows.windows(2).all(|w| w[0].len() >= w[1].len()) {
            return bad("row lengths are not weakly decreasing".into());
        }
        for (h, row) in rows.iter().enumerate() {
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return bad(format!("row {} is not strictly increasing", h + 1));
            }
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below < above) {
                return bad("a column decreases".into());
            }
        }
        Ok(YoungTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    pub fn weight(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Number of occurrences of each entry `1..=max`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &x in self.rows.iter().flatten() {
            c[x - 1] += 1;
        }
        c
    }

    /// Entries row by row, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// One row per line, entries separated by spaces.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YoungTableau{:?}", self.rows)
    }
}

/// Shapes `μ^1 ⊆ ... ⊆ μ^t` of the sub-tableaux with entries `<= i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionChain {
    pub steps: Vec<Partition>,
}

impl PartitionChain {
    pub fn to_tableau(&self) -> Result<YoungTableau> {
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let empty = Partition::from_unsorted(vec![]);
        let mut prev = &empty;
        for (k, mu) in self.steps.iter().enumerate() {
            for r in 0..mu.len() {
                match mu.part(r).checked_sub(prev.part(r)) {
                    Some(0) => {}
                    Some(1) => {
                        if r == rows.len() {
                            rows.push(Vec::new());
                        }
                        rows[r].push(k + 1);
                    }
                    _ => return Err(Error::InvalidTableau(format!("step {} is not a vertical strip", k + 1))),
                }
            }
            if prev.len() > mu.len() {
                return Err(Error::InvalidTableau(format!("step {} shrinks", k + 1)));
            }
            prev = mu;
        }
        YoungTableau::new(rows)
    }
}

impl YoungTableau {
    /// The chain of sub-tableau shapes for entries `<= 1, <= 2, ..., <= t`.
    pub fn to_chain(&self, t: usize) -> PartitionChain {
        let steps = (1..=t)
            .map(|i| {
                Partition::from_unsorted(
                    self.rows.iter().map(|row| row.iter().filter(|&&x| x <= i).count()).collect(),
                )
            })
            .collect();
        PartitionChain { steps }
    }
}

/// `T(d)`: row `h` lists `{i : d_i >= h}`.
pub fn t_of_d(d: &DimensionVector) -> YoungTableau {
    let top = d.parts().iter().copied().max().unwrap_or(0);
    let rows = (1..=top)
        .map(|h| (1..=d.t()).filter(|&i| d.d(i) >= h).collect())
        .collect();
    YoungTableau::new(rows).expect("T(d) is a valid tableau")
}

fn check_shape(mu: &Partition, d: &DimensionVector) -> Result<bool> {
    if mu.weight() != d.n() {
        return Err(Error::WeightMismatch {
            left: mu.weight(),
            right: d.n(),
        });
    }
    dominance_leq(mu, &lambda_of(d))
}

/// All tableaux of shape `μ` and content `d`, ordered lexicographically by
/// reading word. Empty unless `μ ⊴ λ(d)`.
pub fn enumerate_tableaux(mu: &Partition, d: &DimensionVector) -> Result<Vec<YoungTableau>> {
    if !check_shape(mu, d)? {
        return Ok(Vec::new());
    }
    let cells: Vec<(usize, usize)> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = mu.parts().iter().map(|&len| vec![0; len]).collect();
    let mut left: Vec<usize> = d.parts().to_vec();
    let mut out = Vec::new();
    fill(&cells, 0, &mut rows, &mut left, &mut out);
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<usize>>,
    left: &mut [usize],
    out: &mut Vec<YoungTableau>,
) {
    let Some(&(r, c)) = cells.get(k) else {
        out.push(YoungTableau { rows: rows.clone() });
        return;
    };
    let lo_row = if c > 0 { rows[r][c - 1] + 1 } else { 1 };
    let lo_col = if r > 0 { rows[r - 1][c] } else { 1 };
    for v in lo_row.max(lo_col)..=left.len() {
        if left[v - 1] == 0 {
            continue;
        }
        left[v - 1] -= 1;
        rows[r][c] = v;
        fill(cells, k + 1, rows, left, out);
        left[v - 1] += 1;
    }
    rows[r][c] = 0;
}

/// All admissible chains `μ^1 ⊆ ... ⊆ μ^t = μ`, built one vertical strip of
/// size `d_i` at a time.
pub fn chains_of(mu: &Partition, d: &DimensionVector) -> Result<Vec<PartitionChain>> {
    if !check_shape(mu, d)? {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    extend_chain(mu, d, &mut vec![0; mu.len()], &mut steps, &mut out);
    Ok(out)
}

fn extend_chain(
    target: &Partition,
    d: &DimensionVector,
    cur: &mut Vec<usize>,
    steps: &mut Vec<Partition>,
    out: &mut Vec<PartitionChain>,
) {
    let i = steps.len();
    if i == d.t() {
        out.push(PartitionChain { steps: steps.clone() });
        return;
    }
    // choose d_{i+1} rows to extend by one box, keeping a partition inside target
    let rows: Vec<usize> = (0..cur.len()).filter(|&r| cur[r] < target.part(r)).collect();
    let mut pick = Vec::new();
    strips(&rows, d.d(i + 1), 0, &mut pick, &mut |chosen| {
        let mut next = cur.clone();
        for &r in chosen {
            next[r] += 1;
        }
        if next.windows(2).all(|w| w[0] >= w[1]) {
            steps.push(Partition::from_unsorted(next.clone()));
            extend_chain(target, d, &mut next, steps, out);
            steps.pop();
        }
    });
}

fn strips(rows: &[usize], size: usize, from: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == size {
        f(pick);
        return;
    }
    for k in from..rows.len() {
        if rows.len() - k < size - pick.len() {
            break;
        }
        pick.push(rows[k]);
        strips(rows, size, k + 1, pick, f);
        pick.pop();
    }
}

/// `s(i,j)`: the last row of `T(d)` containing both `i` and `j`, i.e. `min(d_i, d_j)`.
pub fn s_row(d: &DimensionVector, i: usize, j: usize) -> Result<usize> {
    d.check_pair(i, j)?;
    Ok(d.d(i).min(d.d(j)))
}

/// Boxes strictly between the `i`-box and the `j`-box in row `s(i,j)` of `T(d)`.
pub fn boxes_between(d: &DimensionVector, i: usize, j: usize) -> Result<usize> {
    let s = s_row(d, i, j)?;
    Ok(t_of_d(d).rows[s - 1].iter().filter(|&&x| i < x && x < j).count())
}

/// The result of a minimal movement of the `j`-box of `T(d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Movement {
    pub pair: Pair,
    pub tableau: YoungTableau,
    pub mu: Partition,
    pub from_row: usize,
    pub to_row: usize,
    /// `c(i,j) = to_row - from_row`.
    pub codim: usize,
}

/// Removes `j` from row `s(i,j)` of `T(d)` and re-inserts it, in sorted
/// position, into the nearest lower row (possibly a new one) that yields a
/// valid tableau.
pub fn minimal_movement(d: &DimensionVector, i: usize, j: usize) -> Result<Movement> {
    let s = s_row(d, i, j)?;
    let mut rows = t_of_d(d).rows;
    rows[s - 1].retain(|&x| x != j);
    let height = rows.len();
    for r in s + 1..=height + 1 {
        let mut cand = rows.clone();
        if r > height {
            cand.push(Vec::new());
        }
        let row = &mut cand[r - 1];
        let pos = row.partition_point(|&x| x < j);
        row.insert(pos, j);
        if let Ok(tab) = YoungTableau::new(cand) {
            return Ok(Movement {
                pair: Pair::new(i, j),
                mu: tab.shape(),
                tableau: tab,
                from_row: s,
                to_row: r,
                codim: r - s,
            });
        }
    }
    Err(Error::InvalidTableau(format!("no row below {s} accepts {j}")))
}

/// `c(i,j)`, the codimension of `Z_ij` in the nilradical; defined on `Γ(d)`.
pub fn codim(d: &DimensionVector, i: usize, j: usize) -> Result<usize> {
    d.check_pair(i, j)?;
    if !gamma_set(d).contains(&Pair::new(i, j)) {
        return Err(Error::NotInGamma { i, j });
    }
    Ok(minimal_movement(d, i, j)?.codim)
}
