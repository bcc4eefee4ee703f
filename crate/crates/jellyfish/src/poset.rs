//! Posets of contraction generators: the grid, the two staircases, and the
//! Hasse diagrams used for the ADE Wallach representations.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    Gl,
    Sp,
    O,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Gl => "GL",
            Group::Sp => "Sp",
            Group::O => "O",
        })
    }
}

/// A dual pair: `k` is the rank parameter, `p,q` are used for GL, `n` for Sp and O.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupCase {
    pub group: Group,
    pub k: u32,
    pub p: u32,
    pub q: u32,
    pub n: u32,
}

impl GroupCase {
    pub fn gl(k: u32, p: u32, q: u32) -> Result<Self> {
        if k == 0 || p == 0 || q == 0 {
            return Err(Error::InvalidParameters(format!("GL needs positive k, p, q (got k={k}, p={p}, q={q})")));
        }
        Ok(GroupCase { group: Group::Gl, k, p, q, n: 0 })
    }

    pub fn sp(k: u32, n: u32) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!("Sp needs positive k, n (got k={k}, n={n})")));
        }
        Ok(GroupCase { group: Group::Sp, k, p: 0, q: 0, n })
    }

    pub fn o(k: u32, n: u32) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!("O needs positive k, n (got k={k}, n={n})")));
        }
        Ok(GroupCase { group: Group::O, k, p: 0, q: 0, n })
    }

    /// The rank r of the pair; the module of covariants is studied for k ≤ r.
    pub fn rank(&self) -> u32 {
        match self.group {
            Group::Gl => self.p.min(self.q),
            Group::Sp => self.n / 2,
            Group::O => self.n,
        }
    }

    pub fn in_range(&self) -> bool {
        self.k <= self.rank()
    }

    pub fn require_range(&self) -> Result<()> {
        if self.in_range() {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!("{self}: k={} exceeds the rank {}", self.k, self.rank())))
        }
    }

    /// Number of points of the poset.
    pub fn poset_size(&self) -> usize {
        let (p, q, n) = (self.p as usize, self.q as usize, self.n as usize);
        match self.group {
            Group::Gl => p * q,
            Group::Sp => n * n.saturating_sub(1) / 2,
            Group::O => n * (n + 1) / 2,
        }
    }

    /// Points of the poset in row-major order.
    pub fn points(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.poset_size());
        match self.group {
            Group::Gl => {
                for i in 1..=self.p as i32 {
                    for j in 1..=self.q as i32 {
                        out.push(Point::new(i, j));
                    }
                }
            }
            Group::Sp => {
                for i in 1..=self.n as i32 {
                    for j in i + 1..=self.n as i32 {
                        out.push(Point::new(i, j));
                    }
                }
            }
            Group::O => {
                for i in 1..=self.n as i32 {
                    for j in i..=self.n as i32 {
                        out.push(Point::new(i, j));
                    }
                }
            }
        }
        out
    }

    pub fn contains(&self, pt: Point) -> bool {
        let (i, j) = (pt.row, pt.col);
        match self.group {
            Group::Gl => i >= 1 && j >= 1 && i <= self.p as i32 && j <= self.q as i32,
            Group::Sp => i >= 1 && i < j && j <= self.n as i32,
            Group::O => i >= 1 && i <= j && j <= self.n as i32,
        }
    }

    /// The poset order: product order for GL and Sp, and for O the flipped
    /// order in which (i,j) ≤ (i',j') iff i ≤ i' and j ≥ j'.
    pub fn leq(&self, a: Point, b: Point) -> bool {
        match self.group {
            Group::Gl | Group::Sp => a.row <= b.row && a.col <= b.col,
            Group::O => a.row <= b.row && a.col >= b.col,
        }
    }

    /// Cover relations `(a, b)` with a ⋖ b.
    pub fn cover_pairs(&self) -> Vec<(Point, Point)> {
        let mut out = Vec::new();
        for a in self.points() {
            let ups = match self.group {
                Group::Gl | Group::Sp => [a.east(), a.south()],
                Group::O => [a.south(), Point::new(a.row, a.col - 1)],
            };
            for b in ups {
                if self.contains(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The ℓth antidiagonal, counted from the lower-right corner (GL and Sp).
    pub fn antidiagonal(&self, l: u32) -> Result<Vec<Point>> {
        let sum = match self.group {
            Group::Gl => (self.p + self.q + 1) as i64 - l as i64,
            Group::Sp => 2 * self.n as i64 - l as i64,
            Group::O => return Err(Error::Unsupported("antidiagonals are defined for GL and Sp only".into())),
        };
        let pts: Vec<Point> = self.points().into_iter().filter(|p| (p.row + p.col) as i64 == sum).collect();
        if l == 0 || pts.is_empty() {
            return Err(Error::InvalidParameters(format!("antidiagonal index {l} out of range for {self}")));
        }
        Ok(pts)
    }

    /// Display label of a row index: starred for GL.
    pub fn row_label(&self, i: i32) -> String {
        match self.group {
            Group::Gl => format!("{i}*"),
            _ => i.to_string(),
        }
    }
}

impl fmt::Display for GroupCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.group {
            Group::Gl => write!(f, "GL({},{},{})", self.k, self.p, self.q),
            Group::Sp => write!(f, "Sp({},{})", self.k, self.n),
            Group::O => write!(f, "O({},{})", self.k, self.n),
        }
    }
}

/// A poset point. For GL the row is the starred index i* and the column is j.
/// Wallach diagrams store the figure coordinate (x, y) as (row, col) = (-y, x),
/// so that east is `col + 1` and south is `row + 1` in every case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub row: i32,
    pub col: i32,
}

impl Point {
    pub const fn new(row: i32, col: i32) -> Self {
        Point { row, col }
    }

    pub fn east(self) -> Point {
        Point::new(self.row, self.col + 1)
    }

    pub fn south(self) -> Point {
        Point::new(self.row + 1, self.col)
    }

    pub fn north(self) -> Point {
        Point::new(self.row - 1, self.col)
    }

    pub fn west(self) -> Point {
        Point::new(self.row, self.col - 1)
    }

    pub fn southwest(self) -> Point {
        Point::new(self.row + 1, self.col - 1)
    }

    pub fn northeast(self) -> Point {
        Point::new(self.row - 1, self.col + 1)
    }

    /// Plane coordinates (x, y) of a Wallach vertex.
    pub fn xy(self) -> (i32, i32) {
        (self.col, -self.row)
    }

    pub fn from_xy(x: i32, y: i32) -> Point {
        Point::new(-y, x)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WallachFamily {
    D(u32),
    E6,
    E7,
}

/// The kth Wallach representation of a simply laced Hermitian symmetric pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WallachCase {
    pub family: WallachFamily,
    pub k: u32,
}

impl WallachCase {
    pub fn new(family: WallachFamily, k: u32) -> Result<Self> {
        let ok = match family {
            WallachFamily::D(n) => n >= 4 && k == 1,
            WallachFamily::E6 => k == 1,
            WallachFamily::E7 => k == 1 || k == 2,
        };
        if !ok {
            return Err(Error::Unsupported(format!("Wallach level {k} for {family:?} is not treated")));
        }
        Ok(WallachCase { family, k })
    }

    pub fn parse(name: &str, k: u32) -> Result<Self> {
        let up = name.trim().to_ascii_uppercase();
        let family = match up.as_str() {
            "E6" => WallachFamily::E6,
            "E7" => WallachFamily::E7,
            s if s.starts_with('D') => {
                let n = s[1..]
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("expected Dn with a number, got {name}")))?;
                WallachFamily::D(n)
            }
            _ => return Err(Error::Parse(format!("unknown Wallach family {name}"))),
        };
        WallachCase::new(family, k)
    }
}

impl fmt::Display for WallachCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            WallachFamily::D(n) => write!(f, "D{n}(k={})", self.k),
            WallachFamily::E6 => write!(f, "E6(k={})", self.k),
            WallachFamily::E7 => write!(f, "E7(k={})", self.k),
        }
    }
}

const E6_XY: [(i32, i32); 16] = [
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 1),
    (5, 1),
    (3, 0),
    (4, 0),
    (5, 0),
    (4, -1),
    (5, -1),
    (6, -1),
    (4, -2),
    (5, -2),
    (6, -2),
    (6, -3),
    (6, -4),
];
const E6_SHADOWS: [(i32, i32); 1] = [(5, -1)];

const E7_XY: [(i32, i32); 27] = [
    (0, 1),
    (1, 1),
    (2, 1),
    (3, 1),
    (4, 1),
    (5, 1),
    (3, 0),
    (4, 0),
    (5, 0),
    (4, -1),
    (5, -1),
    (6, -1),
    (4, -2),
    (5, -2),
    (6, -2),
    (7, -2),
    (8, -2),
    (4, -3),
    (5, -3),
    (6, -3),
    (7, -3),
    (8, -3),
    (7, -4),
    (8, -4),
    (8, -5),
    (8, -6),
    (8, -7),
];
const E7_SHADOWS: [(i32, i32); 2] = [(5, -1), (6, -2)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetKind {
    Group(GroupCase),
    Wallach(WallachCase),
}

/// A finite poset with its Hasse diagram.
#[derive(Debug, Clone)]
pub struct Poset {
    pub kind: PosetKind,
    pub points: Vec<Point>,
    pub covers: Vec<(usize, usize)>,
    /// Permanent shadow markers (Wallach diagrams only).
    pub shadows: Vec<Point>,
    index: HashMap<Point, usize>,
    below: Vec<Vec<bool>>,
}

impl Poset {
    fn from_parts(kind: PosetKind, points: Vec<Point>, covers: Vec<(Point, Point)>, shadows: Vec<Point>) -> Self {
        let index: HashMap<Point, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let covers: Vec<(usize, usize)> = covers.iter().map(|(a, b)| (index[a], index[b])).collect();
        let m = points.len();
        let mut below = vec![vec![false; m]; m];
        let mut succ = vec![Vec::new(); m];
        for &(a, b) in &covers {
            succ[a].push(b);
        }
        for (s, row) in below.iter_mut().enumerate() {
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                if row[x] {
                    continue;
                }
                row[x] = true;
                stack.extend(succ[x].iter().copied());
            }
        }
        Poset { kind, points, covers, shadows, index, below }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.index.contains_key(&p)
    }

    pub fn index_of(&self, p: Point) -> Option<usize> {
        self.index.get(&p).copied()
    }

    /// Order relation computed as reachability along covers.
    pub fn leq(&self, a: Point, b: Point) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.below[i][j],
            _ => false,
        }
    }

    pub fn group_case(&self) -> Option<GroupCase> {
        match self.kind {
            PosetKind::Group(c) => Some(c),
            PosetKind::Wallach(_) => None,
        }
    }

    pub fn case_name(&self) -> String {
        match &self.kind {
            PosetKind::Group(c) => c.to_string(),
            PosetKind::Wallach(w) => w.to_string(),
        }
    }

    /// JSON form `{"case", "points": [[i,j,starred]], "covers": [[a,b]]}`.
    /// Wallach points are given in plane coordinates (x, y).
    pub fn to_json(&self) -> Value {
        let starred = matches!(self.kind, PosetKind::Group(c) if c.group == Group::Gl);
        let wallach = matches!(self.kind, PosetKind::Wallach(_));
        let pts: Vec<Value> = self
            .points
            .iter()
            .map(|p| {
                if wallach {
                    let (x, y) = p.xy();
                    json!([x, y, false])
                } else {
                    json!([p.row, p.col, starred])
                }
            })
            .collect();
        let covers: Vec<Value> = self.covers.iter().map(|(a, b)| json!([a, b])).collect();
        let mut v = json!({ "case": self.case_name(), "points": pts, "covers": covers });
        if wallach {
            let sh: Vec<Value> = self.shadows.iter().map(|p| json!([p.xy().0, p.xy().1])).collect();
            v["shadows"] = Value::Array(sh);
        }
        v
    }
}

pub fn build_poset(case: &GroupCase) -> Poset {
    Poset::from_parts(PosetKind::Group(*case), case.points(), case.cover_pairs(), Vec::new())
}

fn dn_points(n: u32) -> Vec<(i32, i32)> {
    let n = n as i32;
    let mut xy: Vec<(i32, i32)> = (1..n).map(|y| (1, y)).collect();
    xy.extend((2..n).map(|x| (x, 1)));
    xy.push((2, 2));
    xy
}

/// Vertices v that admit an L-turn (v+north and v+east present) but whose
/// northeast neighbour is missing from the diagram.
pub fn missing_northeast_turns(points: &[Point]) -> Vec<Point> {
    let set: std::collections::HashSet<Point> = points.iter().copied().collect();
    let mut out: Vec<Point> = points
        .iter()
        .copied()
        .filter(|v| set.contains(&v.north()) && set.contains(&v.east()) && !set.contains(&v.northeast()))
        .collect();
    out.sort();
    out
}

pub fn build_ade_poset(wcase: &WallachCase) -> Poset {
    let (xy, shadows): (Vec<(i32, i32)>, Vec<Point>) = match wcase.family {
        WallachFamily::D(n) => {
            let xy = dn_points(n);
            let pts: Vec<Point> = xy.iter().map(|&(x, y)| Point::from_xy(x, y)).collect();
            let sh = missing_northeast_turns(&pts);
            (xy, sh)
        }
        WallachFamily::E6 => (E6_XY.to_vec(), E6_SHADOWS.iter().map(|&(x, y)| Point::from_xy(x, y)).collect()),
        WallachFamily::E7 => (E7_XY.to_vec(), E7_SHADOWS.iter().map(|&(x, y)| Point::from_xy(x, y)).collect()),
    };
    let mut points: Vec<Point> = xy.iter().map(|&(x, y)| Point::from_xy(x, y)).collect();
    points.sort();
    let set: std::collections::HashSet<Point> = points.iter().copied().collect();
    let mut covers = Vec::new();
    for &a in &points {
        for b in [a.east(), a.south()] {
            if set.contains(&b) {
                covers.push((a, b));
            }
        }
    }
    Poset::from_parts(PosetKind::Wallach(*wcase), points, covers, shadows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn point_counts() {
        for a in 1..=12u32 {
            for b in 1..=12u32 {
                assert_eq!(build_poset(&GroupCase::gl(1, a, b).unwrap()).len(), (a * b) as usize);
            }
            assert_eq!(build_poset(&GroupCase::sp(1, a).unwrap()).len(), binom(a as usize, 2));
            assert_eq!(build_poset(&GroupCase::o(1, a).unwrap()).len(), binom(a as usize + 1, 2));
        }
        assert_eq!(build_poset(&GroupCase::gl(3, 3, 4).unwrap()).len(), 12);
        assert_eq!(build_poset(&GroupCase::sp(3, 8).unwrap()).len(), 28);
        assert_eq!(build_poset(&GroupCase::o(3, 7).unwrap()).len(), 28);
    }

    #[test]
    fn ade_counts() {
        for n in 4..=10 {
            let w = WallachCase::new(WallachFamily::D(n), 1).unwrap();
            assert_eq!(build_ade_poset(&w).len(), 2 * (n as usize - 1));
        }
        assert_eq!(build_ade_poset(&WallachCase::new(WallachFamily::E6, 1).unwrap()).len(), 16);
        assert_eq!(build_ade_poset(&WallachCase::new(WallachFamily::E7, 2).unwrap()).len(), 27);
    }

    #[test]
    fn figure_shadow_markers_are_missing_northeast_turns() {
        for fam in [WallachFamily::E6, WallachFamily::E7] {
            let p = build_ade_poset(&WallachCase::new(fam, 1).unwrap());
            let mut marked = p.shadows.clone();
            marked.sort();
            assert_eq!(marked, missing_northeast_turns(&p.points));
        }
    }

    #[test]
    fn order_examples() {
        let gl = GroupCase::gl(3, 3, 4).unwrap();
        assert!(gl.leq(Point::new(1, 1), Point::new(2, 3)));
        let o = GroupCase::o(3, 7).unwrap();
        assert!(o.leq(Point::new(1, 5), Point::new(2, 3)));
        let sp = GroupCase::sp(2, 6).unwrap();
        let (a, b) = (Point::new(2, 5), Point::new(3, 4));
        assert!(!sp.leq(a, b) && !sp.leq(b, a));
    }

    #[test]
    fn closed_form_order_agrees_with_cover_reachability() {
        let cases = [GroupCase::gl(2, 4, 5).unwrap(), GroupCase::sp(2, 8).unwrap(), GroupCase::o(2, 7).unwrap()];
        for c in cases {
            let p = build_poset(&c);
            for &a in &p.points {
                for &b in &p.points {
                    assert_eq!(c.leq(a, b), p.leq(a, b), "{c} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn partial_order_axioms_and_transitive_reduction() {
        let mut posets: Vec<Poset> = vec![
            build_poset(&GroupCase::gl(2, 5, 6).unwrap()),
            build_poset(&GroupCase::sp(2, 9).unwrap()),
            build_poset(&GroupCase::o(2, 8).unwrap()),
        ];
        posets.push(build_ade_poset(&WallachCase::new(WallachFamily::E7, 1).unwrap()));
        posets.push(build_ade_poset(&WallachCase::new(WallachFamily::D(7), 1).unwrap()));
        for p in &posets {
            assert!(p.len() <= 50);
            let pts = &p.points;
            for &a in pts {
                assert!(p.leq(a, a));
                for &b in pts {
                    if a != b && p.leq(a, b) {
                        assert!(!p.leq(b, a));
                    }
                    for &c in pts {
                        if p.leq(a, b) && p.leq(b, c) {
                            assert!(p.leq(a, c));
                        }
                    }
                }
            }
            let mut reduction = Vec::new();
            for (i, &a) in pts.iter().enumerate() {
                for (j, &b) in pts.iter().enumerate() {
                    if a == b || !p.leq(a, b) {
                        continue;
                    }
                    let between = pts.iter().any(|&c| c != a && c != b && p.leq(a, c) && p.leq(c, b));
                    if !between {
                        reduction.push((i, j));
                    }
                }
            }
            let mut covers = p.covers.clone();
            covers.sort();
            reduction.sort();
            assert_eq!(covers, reduction, "{}", p.case_name());
        }
    }

    #[test]
    fn antidiagonals() {
        let gl = GroupCase::gl(5, 8, 10).unwrap();
        assert_eq!(gl.antidiagonal(1).unwrap(), vec![Point::new(8, 10)]);
        assert_eq!(gl.antidiagonal(3).unwrap().len(), 3);
        let sp = GroupCase::sp(2, 6).unwrap();
        assert_eq!(sp.antidiagonal(1).unwrap(), vec![Point::new(5, 6)]);
        assert_eq!(sp.antidiagonal(3).unwrap().len(), 2);
        for l in 1..=8 {
            let d = gl.antidiagonal(l).unwrap();
            assert_eq!(d.len(), l as usize);
            for &a in &d {
                for &b in &d {
                    assert!(a == b || !gl.leq(a, b));
                }
            }
        }
        assert!(gl.antidiagonal(40).is_err());
    }
}
