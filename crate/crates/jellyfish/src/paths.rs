//! Endpoint sets, nonintersecting lattice-path families, corners, shadows
//! and shelling labels.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{build_ade_poset, Group, GroupCase, Point, Poset, WallachCase};

/// One endpoint label: a (starred, for GL) row on the right edge, or a
/// column on the bottom edge (GL only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Endpoint {
    Row(u32),
    Col(u32),
}

/// A set of k endpoint labels, kept sorted (rows before columns).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EndpointSet {
    pub group: Group,
    pub labels: Vec<Endpoint>,
}

impl EndpointSet {
    pub fn new(group: Group, mut labels: Vec<Endpoint>) -> Self {
        labels.sort();
        labels.dedup();
        EndpointSet { group, labels }
    }

    pub fn from_rows(group: Group, rows: &[u32]) -> Self {
        EndpointSet::new(group, rows.iter().map(|&r| Endpoint::Row(r)).collect())
    }

    pub fn gl(rows: &[u32], cols: &[u32]) -> Self {
        let mut labels: Vec<Endpoint> = rows.iter().map(|&r| Endpoint::Row(r)).collect();
        labels.extend(cols.iter().map(|&c| Endpoint::Col(c)));
        EndpointSet::new(Group::Gl, labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rows(&self) -> Vec<u32> {
        self.labels
            .iter()
            .filter_map(|e| match e {
                Endpoint::Row(r) => Some(*r),
                Endpoint::Col(_) => None,
            })
            .collect()
    }

    pub fn cols(&self) -> Vec<u32> {
        self.labels
            .iter()
            .filter_map(|e| match e {
                Endpoint::Col(c) => Some(*c),
                Endpoint::Row(_) => None,
            })
            .collect()
    }

    /// Parses `2*,5*,3,6` (GL) or `1,5` (Sp, O).
    pub fn parse(case: &GroupCase, s: &str) -> Result<Self> {
        let mut labels = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (num, starred) = match tok.strip_suffix('*') {
                Some(t) => (t, true),
                None => (tok, false),
            };
            let v: u32 = num.parse().map_err(|_| Error::Parse(format!("bad endpoint label {tok:?}")))?;
            labels.push(match (case.group, starred) {
                (Group::Gl, true) => Endpoint::Row(v),
                (Group::Gl, false) => Endpoint::Col(v),
                (_, false) => Endpoint::Row(v),
                (_, true) => return Err(Error::Parse(format!("starred label {tok} only makes sense for GL"))),
            });
        }
        Ok(EndpointSet::new(case.group, labels))
    }
}

impl fmt::Display for EndpointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .labels
            .iter()
            .map(|e| match (e, self.group) {
                (Endpoint::Row(r), Group::Gl) => format!("{r}*"),
                (Endpoint::Row(r), _) => r.to_string(),
                (Endpoint::Col(c), _) => c.to_string(),
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Number of labels of E lying in the ℓth corner region: starred rows
/// i* with i > p-ℓ and columns j with j > q-ℓ.
fn gl_corner_count(case: &GroupCase, e: &EndpointSet, l: u32) -> usize {
    e.labels
        .iter()
        .filter(|x| match x {
            Endpoint::Row(i) => *i + l > case.p,
            Endpoint::Col(j) => *j + l > case.q,
        })
        .count()
}

fn gl_counts_ok(case: &GroupCase, e: &EndpointSet) -> bool {
    let top = case.p.max(case.q);
    (1..=top).all(|l| gl_corner_count(case, e, l) <= l as usize)
}

/// Membership in the set of feasible endpoint sets.
pub fn is_valid_endpoint_set(case: &GroupCase, e: &EndpointSet) -> bool {
    if e.group != case.group || e.len() != case.k as usize || !case.in_range() {
        return false;
    }
    match case.group {
        Group::Gl => {
            e.labels.iter().all(|x| match x {
                Endpoint::Row(i) => (1..=case.p).contains(i),
                Endpoint::Col(j) => (1..=case.q).contains(j),
            }) && gl_counts_ok(case, e)
        }
        Group::Sp => {
            let rows = e.rows();
            rows.len() == e.len()
                && rows.iter().enumerate().all(|(i, &r)| r >= 1 && r + 2 * case.k <= case.n + 2 * i as u32 + 1)
        }
        Group::O => {
            let rows = e.rows();
            rows.len() == e.len() && rows.iter().all(|&r| (1..=case.n).contains(&r))
        }
    }
}

/// All feasible endpoint sets in canonical order.
pub fn valid_endpoint_sets(case: &GroupCase) -> Vec<EndpointSet> {
    if !case.in_range() {
        return Vec::new();
    }
    let k = case.k as usize;
    let mut out = Vec::new();
    match case.group {
        Group::Gl => {
            for a in 0..=k {
                for rows in (1..=case.p).combinations(a) {
                    for cols in (1..=case.q).combinations(k - a) {
                        let e = EndpointSet::gl(&rows, &cols);
                        if gl_counts_ok(case, &e) {
                            out.push(e);
                        }
                    }
                }
            }
        }
        Group::Sp | Group::O => {
            let top = if case.group == Group::Sp { case.n - 1 } else { case.n };
            for rows in (1..=top).combinations(k) {
                let e = EndpointSet::from_rows(case.group, &rows);
                if is_valid_endpoint_set(case, &e) {
                    out.push(e);
                }
            }
        }
    }
    out.sort();
    out
}

/// The endpoint set whose families have the maximal size d_max.
pub fn e_max(case: &GroupCase) -> EndpointSet {
    let k = case.k;
    match case.group {
        Group::Gl => EndpointSet::gl(&[], &((case.q + 1 - k)..=case.q).collect::<Vec<_>>()),
        Group::Sp => {
            EndpointSet::from_rows(Group::Sp, &(1..=k).map(|i| case.n + 2 * i - 2 * k - 1).collect::<Vec<_>>())
        }
        Group::O => EndpointSet::from_rows(Group::O, &(1..=k).collect::<Vec<_>>()),
    }
}

fn endpoint_point(case: &GroupCase, e: Endpoint) -> Point {
    match (case.group, e) {
        (Group::Gl, Endpoint::Row(i)) => Point::new(i as i32, case.q as i32),
        (Group::Gl, Endpoint::Col(j)) => Point::new(case.p as i32, j as i32),
        (_, Endpoint::Row(i)) => Point::new(i as i32, case.n as i32),
        (_, Endpoint::Col(_)) => unreachable!("columns occur only for GL"),
    }
}

/// Start and end points of the k paths, ordered from southwest to northeast.
/// O paths start anywhere on the diagonal; their start is reported as `None`.
fn assignments(case: &GroupCase, e: &EndpointSet) -> Vec<(Option<Point>, Point)> {
    let k = case.k as i32;
    match case.group {
        Group::Gl => {
            let mut boundary: Vec<Endpoint> = e.rows().into_iter().map(Endpoint::Row).collect();
            let mut cols = e.cols();
            cols.sort_unstable_by(|a, b| b.cmp(a));
            boundary.extend(cols.into_iter().map(Endpoint::Col));
            (1..=k).rev().map(|i| (Some(Point::new(i, 1)), endpoint_point(case, boundary[(i - 1) as usize]))).collect()
        }
        Group::Sp => {
            let rows = e.rows();
            (1..=k)
                .map(|c| {
                    let end = rows[(k - c) as usize];
                    (Some(Point::new(1, 2 * c)), endpoint_point(case, Endpoint::Row(end)))
                })
                .collect()
        }
        Group::O => e.rows().into_iter().rev().map(|r| (None, endpoint_point(case, Endpoint::Row(r)))).collect(),
    }
}

/// The starting points of the paths (GL and Sp).
pub fn start_points(case: &GroupCase) -> Vec<Point> {
    let k = case.k as i32;
    match case.group {
        Group::Gl => (1..=k).map(|i| Point::new(i, 1)).collect(),
        Group::Sp => (1..=k).map(|c| Point::new(1, 2 * c)).collect(),
        Group::O => Vec::new(),
    }
}

/// A family of k pairwise disjoint lattice paths. Each path is listed from
/// its starting point to its endpoint; paths are ordered southwest to
/// northeast.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathFamily {
    pub endpoints: EndpointSet,
    pub paths: Vec<Vec<Point>>,
}

impl PathFamily {
    pub fn points(&self) -> BTreeSet<Point> {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn size(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.paths.iter().any(|path| path.contains(&p))
    }

    pub fn is_disjoint(&self) -> bool {
        self.points().len() == self.size()
    }
}

/// d_E: the number of points covered by any family with endpoints E.
pub fn family_size(case: &GroupCase, e: &EndpointSet) -> Result<usize> {
    if !is_valid_endpoint_set(case, e) {
        return Err(Error::InvalidEndpoints(e.to_string()));
    }
    Ok(assignments(case, e)
        .iter()
        .map(|(s, t)| match s {
            Some(s) => (t.row - s.row + t.col - s.col + 1) as usize,
            None => (case.n as i32 - t.row + 1) as usize,
        })
        .sum())
}

/// Closed form for the largest family size.
pub fn d_max(case: &GroupCase) -> usize {
    let k = case.k as usize;
    match case.group {
        Group::Gl => {
            let (p, q) = (case.p as usize, case.q as usize);
            p * q - (p - k.min(p)) * (q - k.min(q))
        }
        Group::Sp => k * (2 * case.n as usize - 2 * k - 1),
        Group::O => k * (2 * case.n as usize - k + 1) / 2,
    }
}

struct Occupancy {
    used: HashSet<Point>,
}

fn extend_paths(
    contains: &dyn Fn(Point) -> bool,
    start: Point,
    end: Point,
    occ: &Occupancy,
    out: &mut Vec<Vec<Point>>,
) {
    fn rec(
        contains: &dyn Fn(Point) -> bool,
        cur: Point,
        end: Point,
        occ: &Occupancy,
        acc: &mut Vec<Point>,
        out: &mut Vec<Vec<Point>>,
    ) {
        if cur == end {
            out.push(acc.clone());
            return;
        }
        for nxt in [cur.east(), cur.south()] {
            if nxt.row <= end.row && nxt.col <= end.col && contains(nxt) && !occ.used.contains(&nxt) {
                acc.push(nxt);
                rec(contains, nxt, end, occ, acc, out);
                acc.pop();
            }
        }
    }
    if occ.used.contains(&start) || !contains(start) {
        return;
    }
    let mut acc = vec![start];
    rec(contains, start, end, occ, &mut acc, out);
}

/// O paths, listed from the diagonal to (e, n).
fn o_paths(end: Point, occ: &Occupancy, out: &mut Vec<Vec<Point>>) {
    fn rec(cur: Point, occ: &Occupancy, acc: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        if cur.row == cur.col {
            let mut p = acc.clone();
            p.reverse();
            out.push(p);
            return;
        }
        for nxt in [cur.west(), cur.south()] {
            if nxt.row <= nxt.col && !occ.used.contains(&nxt) {
                acc.push(nxt);
                rec(nxt, occ, acc, out);
                acc.pop();
            }
        }
    }
    if occ.used.contains(&end) {
        return;
    }
    let mut acc = vec![end];
    rec(end, occ, &mut acc, out);
}

/// Every family with the prescribed starts and endpoints, in shelling order.
pub fn enumerate_families(case: &GroupCase, e: &EndpointSet) -> Result<Vec<PathFamily>> {
    if !is_valid_endpoint_set(case, e) {
        return Err(Error::InvalidEndpoints(e.to_string()));
    }
    let assign = assignments(case, e);
    let contains = |p: Point| case.contains(p);
    let mut families = Vec::new();
    let mut occ = Occupancy { used: HashSet::new() };
    let mut stack: Vec<Vec<Point>> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        contains: &dyn Fn(Point) -> bool,
        assign: &[(Option<Point>, Point)],
        idx: usize,
        occ: &mut Occupancy,
        stack: &mut Vec<Vec<Point>>,
        e: &EndpointSet,
        out: &mut Vec<PathFamily>,
    ) {
        if idx == assign.len() {
            out.push(PathFamily { endpoints: e.clone(), paths: stack.clone() });
            return;
        }
        let (start, end) = assign[idx];
        let mut cands = Vec::new();
        match start {
            Some(s) => extend_paths(contains, s, end, occ, &mut cands),
            None => o_paths(end, occ, &mut cands),
        }
        for path in cands {
            for p in &path {
                occ.used.insert(*p);
            }
            stack.push(path);
            rec(contains, assign, idx + 1, occ, stack, e, out);
            let path = stack.pop().unwrap();
            for p in &path {
                occ.used.remove(p);
            }
        }
    }
    rec(&contains, &assign, 0, &mut occ, &mut stack, e, &mut families);
    sort_by_label(case, &mut families);
    Ok(families)
}

fn sort_by_label(case: &GroupCase, fams: &mut Vec<PathFamily>) {
    let mut keyed: Vec<(Vec<u8>, PathFamily)> = fams.drain(..).map(|f| (shelling_label(case, &f).flat(), f)).collect();
    keyed.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => a.1.paths.cmp(&b.1.paths),
        o => o,
    });
    fams.extend(keyed.into_iter().map(|(_, f)| f));
}

/// L-turns: points v with v+north and v+east on the same path.
pub fn l_turns(f: &PathFamily) -> BTreeSet<Point> {
    let mut out = BTreeSet::new();
    for path in &f.paths {
        let set: HashSet<Point> = path.iter().copied().collect();
        for &v in path {
            if set.contains(&v.north()) && set.contains(&v.east()) {
                out.insert(v);
            }
        }
    }
    out
}

fn shadow_runs(turns: &BTreeSet<Point>, firsts: &[Point]) -> BTreeSet<Point> {
    let mut out = BTreeSet::new();
    for &first in firsts {
        let mut v = first;
        while turns.contains(&v) {
            out.insert(v);
            v = v.southwest();
        }
    }
    out
}

/// Points casting shadows: right-edge endpoints (GL), plus starting points (Sp).
fn shadow_casters(case: &GroupCase, f: &PathFamily) -> Vec<Point> {
    match case.group {
        Group::Gl => f.endpoints.rows().into_iter().map(|i| Point::new(i as i32, case.q as i32)).collect(),
        Group::Sp => {
            let mut c: Vec<Point> =
                f.endpoints.rows().into_iter().map(|i| Point::new(i as i32, case.n as i32)).collect();
            c.extend(start_points(case));
            c
        }
        Group::O => Vec::new(),
    }
}

/// Shadowed L-turns of a GL or Sp family.
pub fn shadows(case: &GroupCase, f: &PathFamily) -> BTreeSet<Point> {
    let firsts: Vec<Point> = shadow_casters(case, f).into_iter().map(Point::southwest).collect();
    shadow_runs(&l_turns(f), &firsts)
}

/// Reflected L-turns (i,j) with (i,j-1) and (i-1,j) on the path, plus
/// diagonal starting points left by a vertical step.
fn o_corners(f: &PathFamily) -> BTreeSet<Point> {
    let mut out = BTreeSet::new();
    for path in &f.paths {
        let set: HashSet<Point> = path.iter().copied().collect();
        for &v in path {
            if set.contains(&v.west()) && set.contains(&v.north()) {
                out.insert(v);
            }
        }
        let s = path[0];
        if set.contains(&s.north()) {
            out.insert(s);
        }
    }
    out
}

/// cor(F).
pub fn corners(case: &GroupCase, f: &PathFamily) -> BTreeSet<Point> {
    match case.group {
        Group::O => o_corners(f),
        _ => {
            let sh = shadows(case, f);
            l_turns(f).difference(&sh).copied().collect()
        }
    }
}

/// A binary label sequence per path, southwest path first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShellingLabel {
    pub paths: Vec<Vec<u8>>,
}

impl ShellingLabel {
    pub fn flat(&self) -> Vec<u8> {
        self.paths.concat()
    }

    pub fn descents(&self) -> usize {
        self.paths.iter().map(|l| l.windows(2).filter(|w| w[0] == 1 && w[1] == 0).count()).sum()
    }

    pub fn terminal_ones(&self) -> usize {
        self.paths.iter().filter(|l| l.last() == Some(&1)).count()
    }
}

impl fmt::Display for ShellingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.paths.iter().map(|l| l.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// With `bounded`, an east step past the column of the path's endpoint
/// counts as unavailable.
fn east_south_label(
    contains: &dyn Fn(Point) -> bool,
    f: &PathFamily,
    cor: &BTreeSet<Point>,
    bounded: bool,
) -> ShellingLabel {
    let all = f.points();
    let paths = f
        .paths
        .iter()
        .map(|path| {
            let last_col = path.last().map_or(i32::MAX, |p| p.col);
            path.windows(2)
                .map(|w| {
                    let (a, b) = (w[0], w[1]);
                    if b == a.east() {
                        return 0;
                    }
                    let east = a.east();
                    let reachable = !bounded || east.col <= last_col;
                    let open = reachable && contains(east) && (!all.contains(&east) || cor.contains(&east));
                    u8::from(open)
                })
                .collect()
        })
        .collect();
    ShellingLabel { paths }
}

/// Shelling label. GL/Sp: a south step gets 1 when its east neighbour lies
/// in the poset, does not overshoot the path's endpoint column, and is either
/// free or a corner of another path; every other step gets 0. O: paths are read from the east edge toward the diagonal,
/// west steps get 0 and south steps get 1.
pub fn shelling_label(case: &GroupCase, f: &PathFamily) -> ShellingLabel {
    match case.group {
        Group::O => ShellingLabel {
            paths: f
                .paths
                .iter()
                .map(|path| {
                    let rev: Vec<Point> = path.iter().rev().copied().collect();
                    rev.windows(2).map(|w| u8::from(w[1] == w[0].south())).collect()
                })
                .collect(),
        },
        _ => {
            let cor = corners(case, f);
            east_south_label(&|p| case.contains(p), f, &cor, true)
        }
    }
}

/// The points at which the label sequence has a descent (and, for O, the
/// starting points reached by a terminal 1).
pub fn label_corner_points(case: &GroupCase, f: &PathFamily) -> BTreeSet<Point> {
    let label = shelling_label(case, f);
    let mut out = BTreeSet::new();
    for (path, lab) in f.paths.iter().zip(&label.paths) {
        let order: Vec<Point> =
            if case.group == Group::O { path.iter().rev().copied().collect() } else { path.clone() };
        for (s, w) in lab.windows(2).enumerate() {
            if w[0] == 1 && w[1] == 0 {
                out.insert(order[s + 1]);
            }
        }
        if case.group == Group::O && lab.last() == Some(&1) {
            out.insert(*order.last().unwrap());
        }
    }
    out
}

/// All families for all feasible endpoint sets, computed in parallel.
pub fn families_by_endpoints(case: &GroupCase) -> Vec<(EndpointSet, Vec<PathFamily>)> {
    valid_endpoint_sets(case)
        .into_par_iter()
        .map(|e| {
            let fams = enumerate_families(case, &e).expect("valid endpoint set");
            (e, fams)
        })
        .collect()
}

/// A facet of the kth order complex of a Wallach diagram, with the corners
/// computed from its chosen path decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallachFacet {
    pub paths: Vec<Vec<Point>>,
    pub corners: BTreeSet<Point>,
}

impl WallachFacet {
    pub fn points(&self) -> BTreeSet<Point> {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn size(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }
}

fn all_cover_paths(poset: &Poset) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    fn rec(poset: &Poset, acc: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        out.push(acc.clone());
        let cur = *acc.last().unwrap();
        for nxt in [cur.east(), cur.south()] {
            if poset.contains(nxt) {
                acc.push(nxt);
                rec(poset, acc, out);
                acc.pop();
            }
        }
    }
    for &p in &poset.points {
        let mut acc = vec![p];
        rec(poset, &mut acc, &mut out);
    }
    out
}

/// Corners of a family of paths in a Wallach diagram: L-turns outside the
/// shadow runs. A run begins at each permanent shadow marker and at the
/// southwest neighbour of each starting point and endpoint.
pub fn wallach_corners(poset: &Poset, paths: &[Vec<Point>]) -> BTreeSet<Point> {
    let fam = PathFamily { endpoints: EndpointSet { group: Group::Gl, labels: Vec::new() }, paths: paths.to_vec() };
    let turns = l_turns(&fam);
    let mut firsts: Vec<Point> = poset.shadows.clone();
    for path in paths {
        firsts.push(path[0].southwest());
        firsts.push(path.last().unwrap().southwest());
    }
    let sh = shadow_runs(&turns, &firsts);
    turns.difference(&sh).copied().collect()
}

/// Shelling label of a Wallach family, with the GL/Sp step rule.
pub fn wallach_label(poset: &Poset, paths: &[Vec<Point>]) -> ShellingLabel {
    let fam = PathFamily { endpoints: EndpointSet { group: Group::Gl, labels: Vec::new() }, paths: paths.to_vec() };
    let cor = wallach_corners(poset, paths);
    east_south_label(&|p| poset.contains(p), &fam, &cor, false)
}

fn order_sw_to_ne(paths: &mut [Vec<Point>]) {
    paths.sort_by(|a, b| b[0].row.cmp(&a[0].row).then(a[0].col.cmp(&b[0].col)).then(a.cmp(b)));
}

/// Every decomposition of each maximal k-chain union, grouped by point set.
pub fn wallach_decompositions(wcase: &WallachCase) -> Vec<Vec<Vec<Vec<Point>>>> {
    let poset = build_ade_poset(wcase);
    let mut paths = all_cover_paths(&poset);
    paths.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let k = wcase.k as usize;
    let longest = paths[0].len();
    let mut best = 0usize;
    let mut found: Vec<Vec<Vec<Point>>> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        paths: &[Vec<Point>],
        from: usize,
        k: usize,
        longest: usize,
        used: &mut HashSet<Point>,
        chosen: &mut Vec<usize>,
        size: usize,
        best: &mut usize,
        found: &mut Vec<Vec<Vec<Point>>>,
    ) {
        if chosen.len() == k {
            if size > *best {
                *best = size;
                found.clear();
            }
            if size == *best {
                found.push(chosen.iter().map(|&i| paths[i].clone()).collect());
            }
            return;
        }
        let left = k - chosen.len();
        for i in from..paths.len() {
            let len = paths[i].len();
            if size + len * left < *best {
                break;
            }
            let _ = longest;
            if paths[i].iter().any(|p| used.contains(p)) {
                continue;
            }
            for p in &paths[i] {
                used.insert(*p);
            }
            chosen.push(i);
            rec(paths, i + 1, k, longest, used, chosen, size + len, best, found);
            chosen.pop();
            for p in &paths[i] {
                used.remove(p);
            }
        }
    }
    let mut used = HashSet::new();
    let mut chosen = Vec::new();
    rec(&paths, 0, k, longest, &mut used, &mut chosen, 0, &mut best, &mut found);
    type Group = (BTreeSet<Point>, Vec<Vec<Vec<Point>>>);
    let mut groups: Vec<Group> = Vec::new();
    for mut dec in found {
        order_sw_to_ne(&mut dec);
        let pts: BTreeSet<Point> = dec.iter().flatten().copied().collect();
        match groups.iter_mut().find(|(s, _)| *s == pts) {
            Some((_, v)) => v.push(dec),
            None => groups.push((pts, vec![dec])),
        }
    }
    groups.sort_by(|a, b| a.0.cmp(&b.0));
    groups
        .into_iter()
        .map(|(_, mut v)| {
            v.sort();
            v
        })
        .collect()
}

/// Facets of the kth order complex, in shelling order.
pub fn wallach_facets(wcase: &WallachCase) -> Vec<WallachFacet> {
    let poset = build_ade_poset(wcase);
    let mut facets: Vec<(Vec<u8>, WallachFacet)> = wallach_decompositions(wcase)
        .into_iter()
        .map(|decs| {
            let paths = decs.into_iter().next().unwrap();
            let corners = wallach_corners(&poset, &paths);
            let label = wallach_label(&poset, &paths).flat();
            (label, WallachFacet { paths, corners })
        })
        .collect();
    facets.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.paths.cmp(&b.1.paths)));
    facets.into_iter().map(|(_, f)| f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn pt(r: i32, c: i32) -> Point {
        Point::new(r, c)
    }

    #[test]
    fn sp_endpoint_sets() {
        let c = GroupCase::sp(2, 6).unwrap();
        let got: Vec<String> = valid_endpoint_sets(&c).iter().map(|e| e.to_string()).collect();
        assert_eq!(got, ["{1,2}", "{1,3}", "{1,4}", "{1,5}", "{2,3}", "{2,4}", "{2,5}", "{3,4}", "{3,5}"]);
    }

    #[test]
    fn gl_and_o_endpoint_sets() {
        let c = GroupCase::gl(5, 8, 10).unwrap();
        let e = EndpointSet::parse(&c, "2*,5*,7*,3,6").unwrap();
        assert!(is_valid_endpoint_set(&c, &e));
        assert_eq!(family_size(&c, &e).unwrap(), 54);
        let o = GroupCase::o(3, 7).unwrap();
        assert_eq!(valid_endpoint_sets(&o).len(), 35);
        let bad = EndpointSet::parse(&GroupCase::gl(2, 3, 3).unwrap(), "3*,3").unwrap();
        assert!(!is_valid_endpoint_set(&GroupCase::gl(2, 3, 3).unwrap(), &bad));
    }

    #[test]
    fn sp_family_counts() {
        let c = GroupCase::sp(2, 6).unwrap();
        let f15 = enumerate_families(&c, &EndpointSet::from_rows(Group::Sp, &[1, 5])).unwrap();
        assert_eq!(f15.len(), 5);
        let f35 = enumerate_families(&c, &EndpointSet::from_rows(Group::Sp, &[3, 5])).unwrap();
        assert_eq!(f35.len(), 3);
        assert_eq!(family_size(&c, &EndpointSet::from_rows(Group::Sp, &[3, 5])).unwrap(), 14);
        assert_eq!(family_size(&c, &EndpointSet::from_rows(Group::Sp, &[1, 5])).unwrap(), 12);
    }

    #[test]
    fn full_grid_family() {
        let c = GroupCase::gl(3, 3, 4).unwrap();
        let fams = enumerate_families(&c, &e_max(&c)).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].size(), 12);
        assert!(corners(&c, &fams[0]).is_empty());
    }

    fn walk(start: Point, moves: &[(char, i32)]) -> Vec<Point> {
        let mut out = vec![start];
        let mut cur = start;
        for &(d, n) in moves {
            for _ in 0..n {
                cur = if d == 'E' { cur.east() } else { cur.south() };
                out.push(cur);
            }
        }
        out
    }

    #[test]
    fn gl_drawn_family_has_nine_corners() {
        let c = GroupCase::gl(5, 8, 10).unwrap();
        let e = EndpointSet::parse(&c, "2*,5*,7*,3,6").unwrap();
        let p1 = walk(pt(1, 1), &[('E', 7), ('S', 1), ('E', 2)]);
        let p2 = walk(pt(2, 1), &[('E', 5), ('S', 1), ('E', 2), ('S', 1), ('E', 2), ('S', 1)]);
        let p3 = walk(pt(3, 1), &[('E', 3), ('S', 1), ('E', 2), ('S', 1), ('E', 3), ('S', 1), ('E', 1), ('S', 1)]);
        let p4 = walk(pt(4, 1), &[('E', 2), ('S', 1), ('E', 1), ('S', 2), ('E', 1), ('S', 1), ('E', 1)]);
        let p5 = walk(pt(5, 1), &[('E', 1), ('S', 2), ('E', 1), ('S', 1)]);
        let fam = PathFamily { endpoints: e, paths: vec![p5, p4, p3, p2, p1] };
        assert!(fam.is_disjoint());
        assert_eq!(fam.size(), 54);
        assert_eq!(shadows(&c, &fam), BTreeSet::from([pt(6, 9)]));
        assert_eq!(corners(&c, &fam).len(), 9);
        assert_eq!(label_corner_points(&c, &fam), corners(&c, &fam));
    }

    #[test]
    fn sp_intro_family_corners() {
        let c = GroupCase::sp(3, 8).unwrap();
        let p1 =
            walk(pt(1, 2), &[('E', 1), ('S', 1), ('E', 1), ('S', 1), ('E', 1), ('S', 1), ('E', 2), ('S', 1), ('E', 1)]);
        let p2 = walk(pt(1, 4), &[('E', 1), ('S', 1), ('E', 2), ('S', 1), ('E', 1)]);
        let p3 = walk(pt(1, 6), &[('E', 2), ('S', 1)]);
        let fam = PathFamily { endpoints: EndpointSet::from_rows(Group::Sp, &[2, 3, 5]), paths: vec![p1, p2, p3] };
        assert_eq!(fam.size(), 22);
        assert_eq!(corners(&c, &fam), BTreeSet::from([pt(4, 5), pt(5, 7)]));
        assert_eq!(shadows(&c, &fam), BTreeSet::from([pt(2, 3), pt(2, 5), pt(3, 4), pt(3, 7)]));
    }

    #[test]
    fn sp_shelling_example() {
        let c = GroupCase::sp(2, 7).unwrap();
        let fams = enumerate_families(&c, &EndpointSet::from_rows(Group::Sp, &[2, 4])).unwrap();
        assert_eq!(fams.len(), 17);
        assert_eq!(shelling_label(&c, &fams[0]).to_string(), "00000000 0000");
        assert_eq!(shelling_label(&c, &fams[1]).to_string(), "00000010 0000");
        assert!(corners(&c, &fams[0]).is_empty());
        assert_eq!(corners(&c, &fams[1]).len(), 1);
    }

    #[test]
    fn single_path_counts_are_binomial() {
        for p in 1..=5u32 {
            for q in 1..=5u32 {
                let c = GroupCase::gl(1, p, q).unwrap();
                for e in valid_endpoint_sets(&c) {
                    let n = enumerate_families(&c, &e).unwrap().len() as u64;
                    let (dr, dc) = match e.labels[0] {
                        Endpoint::Row(i) => (i as u64 - 1, q as u64 - 1),
                        Endpoint::Col(j) => (p as u64 - 1, j as u64 - 1),
                    };
                    assert_eq!(n, binom(dr + dc, dr));
                }
            }
        }
        for n in 2..=8u32 {
            let c = GroupCase::sp(1, n).unwrap();
            for e in valid_endpoint_sets(&c) {
                let r = e.rows()[0] as u64;
                let cnt = enumerate_families(&c, &e).unwrap().len() as u64;
                let (dr, dc) = (r - 1, n as u64 - 2);
                let free = binom(dr + dc, dr);
                assert!(cnt <= free);
                if r == 1 {
                    assert_eq!(cnt, 1);
                }
            }
        }
    }

    #[test]
    fn families_have_constant_size_and_are_disjoint() {
        for c in [GroupCase::gl(2, 3, 4).unwrap(), GroupCase::sp(2, 7).unwrap(), GroupCase::o(2, 5).unwrap()] {
            for (e, fams) in families_by_endpoints(&c) {
                let d = family_size(&c, &e).unwrap();
                assert!(!fams.is_empty(), "{c} {e}");
                for f in &fams {
                    assert_eq!(f.size(), d);
                    assert!(f.is_disjoint());
                }
            }
        }
    }

    #[test]
    fn dmax_examples() {
        assert_eq!(d_max(&GroupCase::gl(3, 3, 4).unwrap()), 12);
        assert_eq!(d_max(&GroupCase::sp(2, 6).unwrap()), 14);
        assert_eq!(d_max(&GroupCase::o(3, 7).unwrap()), 18);
    }

    #[test]
    fn wallach_dn_facets() {
        for n in 4..=8 {
            let w = WallachCase::new(crate::poset::WallachFamily::D(n), 1).unwrap();
            let f = wallach_facets(&w);
            assert_eq!(f.len(), 2);
            assert!(f.iter().all(|x| x.size() == 2 * n as usize - 3));
            let cor: Vec<usize> = f.iter().map(|x| x.corners.len()).collect();
            assert_eq!(cor, vec![0, 1]);
        }
    }
}
