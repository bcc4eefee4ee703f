//! Split-monomial oracle: counts standard monomials degree by degree,
//! independently of the path combinatorics, and compares with the series.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poset::{Group, GroupCase, Point};
use crate::series::covariant_series;
use crate::stanley::{Locator, Monomial};
use crate::tableaux::{binomial, enumerate_tableaux, Shape, ShapedTableau, Tableau};

/// A witness that a monomial is not standard: an antichain in its support
/// together with the tableau columns it splits against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Split {
    /// Column of T (or T⁺ for GL) used, possibly empty.
    pub column: Vec<u32>,
    /// Column of T⁻ used (GL only), possibly empty.
    pub column_minus: Vec<u32>,
    /// Number of d entries taken from `column`.
    pub t: usize,
    /// Number of d* entries taken from `column_minus` (GL only).
    pub t_minus: usize,
    /// Antichain drawn from the support, sorted as in the split condition.
    pub antichain: Vec<Point>,
    /// Number of antichain points read as f_{b*,c} (GL only).
    pub right_part: usize,
}

fn columns_or_empty(t: &Tableau) -> Vec<Vec<u32>> {
    let mut cols = t.columns();
    cols.push(Vec::new());
    cols
}

/// Subsets of size n of the support sorted SW to NE that form a strict
/// antichain: rows strictly decreasing, columns strictly increasing.
fn sw_ne_antichains(support: &[Point], n: usize) -> impl Iterator<Item = Vec<Point>> + '_ {
    support.iter().copied().combinations(n).filter_map(|mut a| {
        a.sort_by_key(|p| (std::cmp::Reverse(p.row), p.col));
        a.windows(2).all(|w| w[0].row > w[1].row && w[0].col < w[1].col).then_some(a)
    })
}

fn find_split_sp(k: usize, support: &[Point], t: &Tableau) -> Option<Split> {
    for col in columns_or_empty(t) {
        for tt in 0..=col.len() {
            let (s, r) = (col.len() - tt, (k + 1).checked_sub(tt)?);
            if r < s || r == 0 || s + tt > 2 * k || r > support.len() {
                continue;
            }
            let d1 = if tt > 0 { col[tt - 1] as i32 } else { 0 };
            let pts: Vec<Point> = support.iter().copied().filter(|p| p.row > d1).collect();
            let found = sw_ne_antichains(&pts, r).next();
            if let Some(a) = found {
                return Some(Split {
                    column: col,
                    column_minus: Vec::new(),
                    t: tt,
                    t_minus: 0,
                    antichain: a,
                    right_part: 0,
                });
            }
        }
    }
    None
}

fn find_split_gl(k: usize, support: &[Point], plus: &Tableau, minus: &Tableau) -> Option<Split> {
    for i_col in columns_or_empty(plus) {
        for j_col in columns_or_empty(minus) {
            for w in 0..=i_col.len() {
                for t in 0..=j_col.len() {
                    let (v, s) = (i_col.len() - w, j_col.len() - t);
                    if s + t > k || v + w > k || t + w > k + 1 {
                        continue;
                    }
                    let n = k + 1 - t - w;
                    if n == 0 || n > support.len() {
                        continue;
                    }
                    for a in sw_ne_antichains(support, n) {
                        for u in v..=n {
                            let r = n - u;
                            if r < s {
                                continue;
                            }
                            // Unstarred indices of both parts exceed d_1, starred ones exceed d*_1.
                            let right_ok = w == 0 || a[0].col > i_col[w - 1] as i32;
                            let left_ok = t == 0 || a[n - 1].row > j_col[t - 1] as i32;
                            if right_ok && left_ok {
                                return Some(Split {
                                    column: i_col.clone(),
                                    column_minus: j_col.clone(),
                                    t: w,
                                    t_minus: t,
                                    antichain: a,
                                    right_part: u,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

fn find_split_o(k: usize, support: &[Point], t: &Tableau) -> Result<Option<Split>> {
    if t.num_columns() > 1 {
        return Err(Error::Unsupported("the orthogonal oracle handles one-column shapes only".into()));
    }
    let col = t.first_column();
    let m = col.len();
    for tt in 0..=m.min(k) {
        let r = k + 1 - tt;
        if r > support.len() {
            continue;
        }
        let bound = if tt > 0 { col[m - tt] as i32 } else { i32::MAX };
        let pts: Vec<Point> = support.iter().copied().filter(|p| p.row < bound).collect();
        let found = pts.iter().copied().combinations(r).find_map(|mut a| {
            a.sort();
            a.windows(2).all(|w| w[0].row < w[1].row && w[0].col < w[1].col).then_some(a)
        });
        if let Some(a) = found {
            return Ok(Some(Split {
                column: col,
                column_minus: Vec::new(),
                t: tt,
                t_minus: 0,
                antichain: a,
                right_part: 0,
            }));
        }
    }
    Ok(None)
}

/// A split of the support against T, if one exists.
pub fn find_split(case: &GroupCase, support: &[Point], t: &ShapedTableau) -> Result<Option<Split>> {
    let k = case.k as usize;
    match (case.group, t) {
        (Group::Gl, ShapedTableau::Pair { plus, minus }) => Ok(find_split_gl(k, support, plus, minus)),
        (Group::Sp, ShapedTableau::Single(t)) => Ok(find_split_sp(k, support, t)),
        (Group::O, ShapedTableau::Single(t)) => find_split_o(k, support, t),
        _ => Err(Error::InvalidShape(format!("tableau {t} does not match {case}"))),
    }
}

pub fn is_standard(case: &GroupCase, m: &Monomial) -> Result<bool> {
    let supp: Vec<Point> = m.support().into_iter().collect();
    Ok(find_split(case, &supp, &m.tableau)?.is_none())
}

/// A split dividing a nonstandard monomial.
pub fn witness_split(case: &GroupCase, m: &Monomial) -> Result<Split> {
    let supp: Vec<Point> = m.support().into_iter().collect();
    find_split(case, &supp, &m.tableau)?
        .ok_or_else(|| Error::NotStandard(format!("{} is standard", m.to_input_string(case))))
}

/// The monomial of a split: f over the antichain times the column factor.
pub fn split_monomial(case: &GroupCase, s: &Split) -> Result<Monomial> {
    let bad = |why: &str| Error::InvalidParameters(format!("invalid split: {why}"));
    if s.antichain.is_empty() || s.antichain.iter().any(|p| !case.contains(*p)) {
        return Err(bad("antichain must be a nonempty set of poset points"));
    }
    let col = |c: &[u32]| {
        if c.is_empty() {
            Tableau::empty()
        } else {
            Tableau { rows: c.iter().map(|&x| vec![x]).collect() }
        }
    };
    let tableau = match case.group {
        Group::Gl => ShapedTableau::Pair { plus: col(&s.column), minus: col(&s.column_minus) },
        _ => ShapedTableau::Single(col(&s.column)),
    };
    let exps = s.antichain.iter().map(|&p| (p, 1)).collect();
    let m = Monomial::new(exps, tableau);
    if !m.tableau.is_semistandard() {
        return Err(bad("column entries must increase"));
    }
    let supp: Vec<Point> = m.support().into_iter().collect();
    if supp.len() != s.antichain.len() || find_split(case, &supp, &m.tableau)?.is_none() {
        return Err(bad("antichain does not satisfy the split inequalities"));
    }
    Ok(m)
}

/// Standard supports for T with at most `max_size` points. Standardness is
/// closed under subsets, so the search only extends standard sets.
pub fn standard_supports(case: &GroupCase, t: &ShapedTableau, max_size: usize) -> Result<Vec<Vec<Point>>> {
    let pts = case.points();
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<Point>)> = vec![(0, Vec::new())];
    while let Some((from, set)) = frontier.pop() {
        if set.len() == max_size {
            continue;
        }
        for (i, &p) in pts.iter().enumerate().skip(from) {
            let mut next = set.clone();
            next.push(p);
            if find_split(case, &next, t)?.is_none() {
                out.push(next.clone());
                frontier.push((i + 1, next));
            }
        }
    }
    Ok(out)
}

/// Number of standard monomials of each degree 0..=max_degree.
pub fn count_standard(case: &GroupCase, shape: &Shape, max_degree: usize) -> Result<Vec<BigInt>> {
    let tabs = enumerate_tableaux(case, shape)?;
    let base = shape.degree() as usize;
    let smax = max_degree.saturating_sub(base) / 2;
    let hist: Vec<Vec<u64>> = tabs
        .par_iter()
        .map(|t| {
            let mut h = vec![0u64; smax + 1];
            for s in standard_supports(case, t, smax)? {
                h[s.len()] += 1;
            }
            Ok(h)
        })
        .collect::<Result<_>>()?;
    let mut by_size = vec![0u64; smax + 1];
    for h in hist {
        for (a, b) in by_size.iter_mut().zip(h) {
            *a += b;
        }
    }
    let mut out = vec![BigInt::from(0); max_degree + 1];
    for (d, slot) in out.iter_mut().enumerate() {
        if d < base || (d - base) % 2 == 1 {
            continue;
        }
        let s = (d - base) / 2;
        *slot = if s == 0 {
            BigInt::from(by_size[0])
        } else {
            (1..=s).map(|j| BigInt::from(by_size[j]) * BigInt::from(binomial(s as u64 - 1, j as u64 - 1))).sum()
        };
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    #[serde(rename = "D")]
    pub degree: usize,
    pub oracle: String,
    pub series: String,
    pub ok: bool,
}

/// Outcome of comparing the oracle with the jellyfish series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub case: String,
    pub tau: String,
    pub per_degree: Vec<DegreeCheck>,
    /// Supports checked against the Stanley spaces (standard iff located).
    pub supports_checked: usize,
    pub support_mismatches: usize,
    /// Standard supports contained in more than one Stanley space.
    pub locate_ambiguous: usize,
}

impl OracleReport {
    pub fn ok(&self) -> bool {
        self.per_degree.iter().all(|d| d.ok) && self.support_mismatches == 0 && self.locate_ambiguous == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case,
            "tau": self.tau,
            "per_degree": self.per_degree.iter().map(|d| json!({
                "D": d.degree, "oracle": d.oracle, "series": d.series, "ok": d.ok,
            })).collect::<Vec<_>>(),
            "supports_checked": self.supports_checked,
            "support_mismatches": self.support_mismatches,
            "locate_ambiguous": self.locate_ambiguous,
            "ok": self.ok(),
        })
    }
}

/// Compares per-degree counts up to `max_degree` and checks, for supports
/// of monomials of degree at most `locate_degree`, that standard monomials
/// lie in exactly one Stanley space and nonstandard ones in none.
pub fn check_equivalence(
    case: &GroupCase,
    shape: &Shape,
    max_degree: usize,
    locate_degree: usize,
) -> Result<OracleReport> {
    let oracle = count_standard(case, shape, max_degree)?;
    let series = covariant_series(case, shape)?.combined().expand(max_degree);
    let per_degree = (0..=max_degree)
        .map(|d| {
            let s = series.get(d).cloned().unwrap_or_default();
            DegreeCheck { degree: d, oracle: oracle[d].to_string(), series: s.to_string(), ok: oracle[d] == s }
        })
        .collect();

    let base = shape.degree() as usize;
    let smax = locate_degree.saturating_sub(base) / 2;
    let pts = case.points();
    let tabs = enumerate_tableaux(case, shape)?;
    let (mut checked, mut mismatches, mut ambiguous) = (0, 0, 0);
    let mut locator = Locator::new(*case);
    for t in &tabs {
        for size in 0..=smax.min(pts.len()) {
            for combo in pts.iter().copied().combinations(size) {
                let standard = find_split(case, &combo, t)?.is_none();
                let set: BTreeSet<Point> = combo.into_iter().collect();
                let hits = locator.count(&set, t)?;
                checked += 1;
                if standard != (hits > 0) {
                    mismatches += 1;
                }
                if hits > 1 {
                    ambiguous += 1;
                }
            }
        }
    }
    Ok(OracleReport {
        case: case.to_string(),
        tau: shape.to_string(),
        per_degree,
        supports_checked: checked,
        support_mismatches: mismatches,
        locate_ambiguous: ambiguous,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp_degree_three() {
        let case = GroupCase::sp(2, 6).unwrap();
        let c = count_standard(&case, &Shape::parse("2,1").unwrap(), 5).unwrap();
        assert_eq!(c[3], BigInt::from(70));
    }

    #[test]
    fn rank_split_detected() {
        let case = GroupCase::sp(1, 4).unwrap();
        let m = Monomial::parse(&case, "f[1,4] * f[2,3]").unwrap();
        let s = witness_split(&case, &m).unwrap();
        assert_eq!(s.antichain, vec![Point::new(2, 3), Point::new(1, 4)]);
        assert_eq!(split_monomial(&case, &s).unwrap(), m);
        let sp = GroupCase::sp(2, 6).unwrap();
        let anti = Split {
            column: vec![],
            column_minus: vec![],
            t: 0,
            t_minus: 0,
            antichain: vec![Point::new(3, 4), Point::new(2, 5), Point::new(1, 6)],
            right_part: 0,
        };
        let m3 = split_monomial(&sp, &anti).unwrap();
        assert!(!is_standard(&sp, &m3).unwrap());
        assert!(is_standard(&case, &Monomial::parse(&case, "f[1,2] * f[1,4]^3").unwrap()).unwrap());
    }

    #[test]
    fn small_sweep() {
        for (case, tau) in [
            (GroupCase::gl(2, 3, 3).unwrap(), "1,-1"),
            (GroupCase::sp(2, 6).unwrap(), "1"),
            (GroupCase::o(2, 4).unwrap(), "1,1"),
        ] {
            let r = check_equivalence(&case, &Shape::parse(tau).unwrap(), 7, 5).unwrap();
            assert!(r.ok(), "{}", r.to_json());
        }
    }
}
