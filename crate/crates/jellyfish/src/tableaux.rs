//! Semistandard, rational and symplectic tableaux, shapes, contents and the
//! assignment of tableaux to endpoint bins.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::{d_max, family_size, is_valid_endpoint_set, valid_endpoint_sets, Endpoint, EndpointSet};
use crate::poset::{Group, GroupCase};

/// A weakly decreasing integer k-tuple, stored as its positive part τ⁺ and
/// the reversed negation of its negative part τ⁻.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Shape {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
}

impl Shape {
    pub fn empty() -> Self {
        Shape { plus: Vec::new(), minus: Vec::new() }
    }

    pub fn partition(parts: &[u32]) -> Self {
        Shape { plus: parts.iter().copied().filter(|&x| x > 0).collect(), minus: Vec::new() }
    }

    /// Builds the shape of a weakly decreasing integer tuple.
    pub fn from_tuple(tau: &[i64]) -> Result<Self> {
        if tau.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{tau:?} is not weakly decreasing")));
        }
        let plus = tau.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
        let minus = tau.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as u32).collect();
        Ok(Shape { plus, minus })
    }

    /// Parses a comma-separated tuple such as `3,3,-3,-4`; `0` or an empty
    /// string gives the zero shape.
    pub fn parse(s: &str) -> Result<Self> {
        let vals: Vec<i64> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad shape entry {t:?}"))))
            .collect::<Result<_>>()?;
        Shape::from_tuple(&vals)
    }

    pub fn is_partition(&self) -> bool {
        self.minus.is_empty()
    }

    pub fn size_plus(&self) -> u32 {
        self.plus.iter().sum()
    }

    pub fn size_minus(&self) -> u32 {
        self.minus.iter().sum()
    }

    /// |τ⁺| + |τ⁻|, the degree of the tableau factor.
    pub fn degree(&self) -> u32 {
        self.size_plus() + self.size_minus()
    }

    /// The k-tuple τ.
    pub fn tuple(&self, k: usize) -> Vec<i64> {
        let mut out: Vec<i64> = self.plus.iter().map(|&x| x as i64).collect();
        let tail: Vec<i64> = self.minus.iter().rev().map(|&x| -(x as i64)).collect();
        while out.len() + tail.len() < k {
            out.push(0);
        }
        out.extend(tail);
        out
    }

    /// Column height of an O shape (1^m); errors on anything else.
    pub fn column_height(&self) -> Result<u32> {
        if !self.minus.is_empty() || self.plus.iter().any(|&x| x != 1) {
            return Err(Error::InvalidShape(format!("orthogonal shapes must be a single column (1^m), got {self}")));
        }
        Ok(self.plus.len() as u32)
    }

    /// Membership in the set of shapes occurring for the case.
    pub fn check_in_sigma(&self, case: &GroupCase) -> Result<()> {
        let k = case.k as usize;
        let bad = |why: &str| Err(Error::InvalidShape(format!("{self} is not allowed for {case}: {why}")));
        match case.group {
            Group::Gl => {
                if self.plus.len() > case.q as usize || self.minus.len() > case.p as usize {
                    return bad("too many rows for the alphabet");
                }
                if self.plus.len() + self.minus.len() > k {
                    return bad("more than k nonzero entries");
                }
            }
            Group::Sp => {
                if !self.is_partition() {
                    return bad("negative entries");
                }
                if self.plus.len() > k || self.plus.len() > case.n as usize {
                    return bad("too many rows");
                }
            }
            Group::O => {
                let m = self.column_height()? as usize;
                if m > k || m > case.n as usize {
                    return bad("column longer than k");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.plus.len() + self.minus.len();
        let t = self.tuple(k.max(1));
        let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A semistandard tableau stored by rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn shape(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.len() as u32).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Column c (0-based), top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.num_columns()).map(|c| self.column(c)).collect()
    }

    pub fn first_column(&self) -> Vec<u32> {
        self.column(0)
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && shape_ok && cols_ok && self.rows.iter().all(|r| !r.is_empty())
    }

    /// Occurrence counts of 1..=alphabet.
    pub fn content(&self, alphabet: u32) -> Vec<u32> {
        let mut out = vec![0; alphabet as usize];
        for &x in self.rows.iter().flatten() {
            if (1..=alphabet).contains(&x) {
                out[x as usize - 1] += 1;
            }
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

/// A tableau factor: one SSYT (Sp, O) or a pair (GL).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ShapedTableau {
    Single(Tableau),
    Pair { plus: Tableau, minus: Tableau },
}

impl ShapedTableau {
    pub fn degree(&self) -> usize {
        match self {
            ShapedTableau::Single(t) => t.size(),
            ShapedTableau::Pair { plus, minus } => plus.size() + minus.size(),
        }
    }

    pub fn shape(&self) -> Shape {
        match self {
            ShapedTableau::Single(t) => Shape::partition(&t.shape()),
            ShapedTableau::Pair { plus, minus } => Shape { plus: plus.shape(), minus: minus.shape() },
        }
    }

    pub fn is_semistandard(&self) -> bool {
        match self {
            ShapedTableau::Single(t) => t.is_semistandard() || t.is_empty(),
            ShapedTableau::Pair { plus, minus } => {
                (plus.is_empty() || plus.is_semistandard()) && (minus.is_empty() || minus.is_semistandard())
            }
        }
    }

    /// Contents: (cont(T), empty) or (cont(T⁺), cont(T⁻)).
    pub fn content(&self, case: &GroupCase) -> (Vec<u32>, Vec<u32>) {
        match self {
            ShapedTableau::Single(t) => (t.content(case.n), Vec::new()),
            ShapedTableau::Pair { plus, minus } => (plus.content(case.q), minus.content(case.p)),
        }
    }
}

impl fmt::Display for ShapedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapedTableau::Single(t) => write!(f, "{t}"),
            ShapedTableau::Pair { plus, minus } => write!(f, "({plus}, {minus})"),
        }
    }
}

/// All SSYT of the given partition shape over 1..=n whose row-i entries are
/// at least `row_min(i)` (0-based i), in row-reading lexicographic order.
fn fill_ssyt(shape: &[u32], n: u32, row_min: &dyn Fn(usize) -> u32, visit: &mut dyn FnMut(&Tableau)) {
    let shape: Vec<usize> = shape.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
    if shape.is_empty() {
        visit(&Tableau::empty());
        return;
    }
    let col_height = |c: usize| shape.iter().filter(|&&len| len > c).count();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        n: u32,
        row_min: &dyn Fn(usize) -> u32,
        col_height: &dyn Fn(usize) -> usize,
        visit: &mut dyn FnMut(&Tableau),
    ) {
        if idx == cells.len() {
            visit(&Tableau { rows: rows.clone() });
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = row_min(r).max(1);
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        let below = (col_height(c) - r - 1) as u32;
        if n < below {
            return;
        }
        let hi = n - below;
        for v in lo..=hi {
            rows[r][c] = v;
            rec(idx + 1, cells, rows, n, row_min, col_height, visit);
        }
    }
    rec(0, &cells, &mut rows, n, row_min, &col_height, visit);
}

/// All semistandard tableaux of a partition shape over 1..=n.
pub fn enumerate_ssyt(shape: &[u32], n: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    fill_ssyt(shape, n, &|_| 1, &mut |t| out.push(t.clone()));
    out
}

pub fn count_ssyt(shape: &[u32], n: u32) -> u64 {
    let mut count = 0u64;
    fill_ssyt(shape, n, &|_| 1, &mut |_| count += 1);
    count
}

/// Whether a pair of tableaux over 1..=k satisfies the Stembridge condition.
pub fn stembridge_ok(plus: &Tableau, minus: &Tableau, k: u32) -> bool {
    let (a, b) = (plus.first_column(), minus.first_column());
    (1..=k).all(|l| {
        let cnt = a.iter().filter(|&&x| x <= l).count() + b.iter().filter(|&&x| x <= l).count();
        cnt <= l as usize
    })
}

/// Rational tableaux of shape τ over 1..=k.
pub fn enumerate_rational_tableaux(shape: &Shape, k: u32) -> Vec<(Tableau, Tableau)> {
    let plus = enumerate_ssyt(&shape.plus, k);
    let minus = enumerate_ssyt(&shape.minus, k);
    let mut out = Vec::new();
    for a in &plus {
        for b in &minus {
            if stembridge_ok(a, b, k) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Semistandard symplectic tableaux over 1 < 1̄ < ... < k < k̄ with row-i
/// entries at least i. Letters are encoded as 1..=2k, so row i starts at 2i-1.
pub fn count_symplectic_tableaux(shape: &[u32], k: u32) -> u64 {
    if shape.iter().filter(|&&x| x > 0).count() > k as usize {
        return 0;
    }
    let mut count = 0u64;
    fill_ssyt(shape, 2 * k, &|r| 2 * r as u32 + 1, &mut |_| count += 1);
    count
}

/// Greedy largest unstarred labels for E' given its starred part.
fn gl_extend_columns(case: &GroupCase, starred: &[u32]) -> Result<Vec<u32>> {
    let need = case.k as usize - starred.len();
    let mut cols: Vec<u32> = Vec::new();
    let top = case.p.max(case.q);
    let ok = |cols: &[u32]| {
        (1..=top).all(|l| {
            let s = starred.iter().filter(|&&i| i + l > case.p).count();
            let c = cols.iter().filter(|&&j| j + l > case.q).count();
            s + c <= l as usize
        })
    };
    let mut j = case.q;
    while cols.len() < need && j >= 1 {
        cols.push(j);
        if !ok(&cols) {
            cols.pop();
        }
        j -= 1;
    }
    if cols.len() < need {
        return Err(Error::InvalidShape(format!(
            "starred labels {starred:?} cannot be extended to an endpoint set for {case}"
        )));
    }
    cols.sort_unstable();
    Ok(cols)
}

/// The unique endpoint set E with E ⇉ T.
pub fn assign_bin(t: &ShapedTableau, case: &GroupCase) -> Result<EndpointSet> {
    let k = case.k as usize;
    let e = match (case.group, t) {
        (Group::Gl, ShapedTableau::Pair { plus, minus }) => {
            let starred = minus.first_column();
            let mut cols = gl_extend_columns(case, &starred)?;
            for (c, &x) in cols.iter_mut().zip(plus.first_column().iter()) {
                *c = (*c).min(x);
            }
            EndpointSet::gl(&starred, &cols)
        }
        (Group::Sp, ShapedTableau::Single(t)) => {
            let first = t.first_column();
            let mut rows = vec![0u32; k];
            for i in (0..k).rev() {
                let mut v = case.n + 2 * (i as u32 + 1) - 2 * case.k - 1;
                if let Some(&x) = first.get(i) {
                    v = v.min(x);
                }
                if i + 1 < k {
                    v = v.min(rows[i + 1] - 1);
                }
                rows[i] = v;
            }
            EndpointSet::from_rows(Group::Sp, &rows)
        }
        (Group::O, ShapedTableau::Single(t)) => {
            let col = t.first_column();
            if t.num_columns() > 1 {
                return Err(Error::InvalidShape("orthogonal tableaux must be a single column".into()));
            }
            let mut rows = col.clone();
            let mut x = 1;
            while rows.len() < k {
                if !col.contains(&x) {
                    rows.push(x);
                }
                x += 1;
            }
            EndpointSet::from_rows(Group::O, &rows)
        }
        _ => return Err(Error::InvalidShape(format!("tableau {t} does not match {case}"))),
    };
    if !is_valid_endpoint_set(case, &e) {
        return Err(Error::InvalidEndpoints(format!("{e} computed for {t} is not feasible")));
    }
    Ok(e)
}

/// All tableau factors of shape τ for the case, in canonical order.
pub fn enumerate_tableaux(case: &GroupCase, shape: &Shape) -> Result<Vec<ShapedTableau>> {
    shape.check_in_sigma(case)?;
    Ok(match case.group {
        Group::Gl => {
            let plus = enumerate_ssyt(&shape.plus, case.q);
            let minus = enumerate_ssyt(&shape.minus, case.p);
            let mut out = Vec::with_capacity(plus.len() * minus.len());
            for a in &plus {
                for b in &minus {
                    out.push(ShapedTableau::Pair { plus: a.clone(), minus: b.clone() });
                }
            }
            out
        }
        Group::Sp | Group::O => enumerate_ssyt(&shape.plus, case.n).into_iter().map(ShapedTableau::Single).collect(),
    })
}

/// Bin sizes #τ_E for every E in the feasible set (empty bins included).
pub fn bin_sizes(case: &GroupCase, shape: &Shape) -> Result<BTreeMap<EndpointSet, u64>> {
    let mut out: BTreeMap<EndpointSet, u64> = valid_endpoint_sets(case).into_iter().map(|e| (e, 0)).collect();
    for t in enumerate_tableaux(case, shape)? {
        let e = assign_bin(&t, case)?;
        *out.get_mut(&e).ok_or_else(|| Error::InvalidEndpoints(e.to_string()))? += 1;
    }
    Ok(out)
}

/// Independent count of dim U_τ: rational tableaux (GL), symplectic tableaux
/// (Sp), binomial (O).
pub fn dim_u(case: &GroupCase, shape: &Shape) -> Result<u64> {
    shape.check_in_sigma(case)?;
    Ok(match case.group {
        Group::Gl => enumerate_rational_tableaux(shape, case.k).len() as u64,
        Group::Sp => count_symplectic_tableaux(&shape.plus, case.k),
        Group::O => {
            let m = shape.column_height()?;
            binomial(case.k as u64, m as u64).try_into().unwrap_or(u64::MAX)
        }
    })
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// #τ_max: the number of tableaux in bins with d_E = d_max.
pub fn tau_max(case: &GroupCase, shape: &Shape) -> Result<u64> {
    let dm = d_max(case);
    let mut total = 0;
    for (e, n) in bin_sizes(case, shape)? {
        if family_size(case, &e)? == dm {
            total += n;
        }
    }
    Ok(total)
}

/// Whether #τ_max equals the independent dimension count.
pub fn tau_max_check(case: &GroupCase, shape: &Shape) -> Result<bool> {
    Ok(tau_max(case, shape)? == dim_u(case, shape)?)
}

/// The first column of a tableau factor seen as endpoint labels (used for
/// display only).
pub fn tentacle_labels(t: &ShapedTableau) -> Vec<Endpoint> {
    match t {
        ShapedTableau::Single(t) => t.first_column().into_iter().map(Endpoint::Row).collect(),
        ShapedTableau::Pair { plus, minus } => {
            let mut v: Vec<Endpoint> = minus.first_column().into_iter().map(Endpoint::Row).collect();
            v.extend(plus.first_column().into_iter().map(Endpoint::Col));
            v
        }
    }
}
