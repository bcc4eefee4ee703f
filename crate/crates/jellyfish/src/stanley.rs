//! Jellyfish, Stanley spaces, monomial location, arc diagrams, weights and
//! diagram rendering.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::fmt::Write as _;

use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::paths::{corners, enumerate_families, shadows, EndpointSet, PathFamily};
use crate::poset::{Group, GroupCase, Point, Poset, PosetKind};
use crate::tableaux::{assign_bin, enumerate_tableaux, Shape, ShapedTableau, Tableau};

/// A family of paths with tableau tentacles attached at its endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Jellyfish {
    pub family: PathFamily,
    pub tableau: ShapedTableau,
    pub shape: Shape,
}

/// All jellyfish of shape τ: pairs (F, T) with F ⇉ E ⇉ T.
pub fn enumerate_jellyfish(case: &GroupCase, shape: &Shape) -> Result<Vec<Jellyfish>> {
    case.require_range()?;
    let tabs = enumerate_tableaux(case, shape)?;
    let mut by_bin: BTreeMap<EndpointSet, Vec<ShapedTableau>> = BTreeMap::new();
    for t in tabs {
        by_bin.entry(assign_bin(&t, case)?).or_default().push(t);
    }
    let chunks: Vec<Vec<Jellyfish>> = by_bin
        .into_par_iter()
        .map(|(e, ts)| {
            let fams = enumerate_families(case, &e)?;
            let mut out = Vec::with_capacity(fams.len() * ts.len());
            for t in &ts {
                for f in &fams {
                    out.push(Jellyfish { family: f.clone(), tableau: t.clone(), shape: shape.clone() });
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// Generator data of one Stanley space C[f_ij : (i,j) ∈ F] f_cor(F) φ_T.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleySpace {
    pub free: Vec<Point>,
    pub corners: Vec<Point>,
    pub tableau: ShapedTableau,
    pub degree: usize,
}

impl StanleySpace {
    pub fn to_json(&self) -> Value {
        let pts = |v: &[Point]| v.iter().map(|p| json!([p.row, p.col])).collect::<Vec<_>>();
        json!({
            "free": pts(&self.free),
            "corners": pts(&self.corners),
            "tableau": serde_json::to_value(&self.tableau).unwrap_or(Value::Null),
            "degree": self.degree,
        })
    }
}

pub fn stanley_space(case: &GroupCase, j: &Jellyfish) -> StanleySpace {
    let corners: Vec<Point> = corners(case, &j.family).into_iter().collect();
    StanleySpace {
        free: j.family.points().into_iter().collect(),
        degree: 2 * corners.len() + j.tableau.degree(),
        corners,
        tableau: j.tableau.clone(),
    }
}

/// A monomial ∏ f_ij^{e_ij} · φ_T; exponents include corner factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exponents: BTreeMap<Point, u32>,
    pub tableau: ShapedTableau,
}

impl Monomial {
    pub fn new(exponents: BTreeMap<Point, u32>, tableau: ShapedTableau) -> Self {
        let exponents = exponents.into_iter().filter(|(_, e)| *e > 0).collect();
        Monomial { exponents, tableau }
    }

    pub fn support(&self) -> BTreeSet<Point> {
        self.exponents.keys().copied().collect()
    }

    pub fn f_degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    /// 2·Σ exponents + |T|.
    pub fn degree(&self) -> usize {
        2 * self.f_degree() as usize + self.tableau.degree()
    }

    /// Parses `f[1,3]^2 * f[2,5] * phi[2,3,3;4,4,5]`; GL uses `phi+[..]` and
    /// `phi-[..]` and accepts starred rows `f[1*,3]`.
    pub fn parse(case: &GroupCase, s: &str) -> Result<Monomial> {
        let bad = |why: String| Error::Parse(format!("monomial {s:?}: {why}"));
        let mut exps: BTreeMap<Point, u32> = BTreeMap::new();
        let mut single: Option<Tableau> = None;
        let mut plus: Option<Tableau> = None;
        let mut minus: Option<Tableau> = None;
        for factor in split_factors(s) {
            if factor.is_empty() || factor == "1" {
                continue;
            }
            let (head, rest) = factor.split_once('[').ok_or_else(|| bad(format!("bad factor {factor:?}")))?;
            let (inner, tail) = rest.split_once(']').ok_or_else(|| bad(format!("missing ] in {factor:?}")))?;
            let power: u32 = match tail.trim().strip_prefix('^') {
                Some(p) => p.trim().parse().map_err(|_| bad(format!("bad exponent in {factor:?}")))?,
                None if tail.trim().is_empty() => 1,
                None => return Err(bad(format!("trailing text in {factor:?}"))),
            };
            match head.trim() {
                "f" => {
                    let nums: Vec<i32> = inner
                        .split(',')
                        .map(|x| x.trim().trim_end_matches('*').parse::<i32>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| bad(format!("bad indices in {factor:?}")))?;
                    if nums.len() != 2 {
                        return Err(bad(format!("f needs two indices in {factor:?}")));
                    }
                    let p = Point::new(nums[0], nums[1]);
                    if !case.contains(p) {
                        return Err(bad(format!("{p} is not a point of the poset")));
                    }
                    *exps.entry(p).or_insert(0) += power;
                }
                h @ ("phi" | "phi+" | "phi-") => {
                    if power != 1 {
                        return Err(bad("tableau factors take no exponent".into()));
                    }
                    let t = parse_rows(inner).map_err(|e| bad(e.to_string()))?;
                    let slot = match h {
                        "phi" => &mut single,
                        "phi+" => &mut plus,
                        _ => &mut minus,
                    };
                    if slot.replace(t).is_some() {
                        return Err(bad(format!("repeated {h} factor")));
                    }
                }
                other => return Err(bad(format!("unknown factor {other:?}"))),
            }
        }
        let tableau = match case.group {
            Group::Gl => {
                if single.is_some() {
                    return Err(bad("GL monomials use phi+[..] and phi-[..]".into()));
                }
                ShapedTableau::Pair { plus: plus.unwrap_or_default(), minus: minus.unwrap_or_default() }
            }
            _ => {
                if plus.is_some() || minus.is_some() {
                    return Err(bad("phi+/phi- are only for GL".into()));
                }
                ShapedTableau::Single(single.unwrap_or_default())
            }
        };
        if !tableau.is_semistandard() {
            return Err(bad(format!("tableau {tableau} is not semistandard")));
        }
        Ok(Monomial::new(exps, tableau))
    }

    pub fn to_input_string(&self, case: &GroupCase) -> String {
        let mut parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(p, e)| {
                let base = format!("f[{},{}]", p.row, p.col);
                if *e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        let rows = |t: &Tableau| {
            t.rows
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join(";")
        };
        match (&self.tableau, case.group) {
            (ShapedTableau::Pair { plus, minus }, _) => {
                if !plus.is_empty() {
                    parts.push(format!("phi+[{}]", rows(plus)));
                }
                if !minus.is_empty() {
                    parts.push(format!("phi-[{}]", rows(minus)));
                }
            }
            (ShapedTableau::Single(t), _) => {
                if !t.is_empty() {
                    parts.push(format!("phi[{}]", rows(t)));
                }
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" * ")
        }
    }
}

impl Default for Tableau {
    fn default() -> Self {
        Tableau::empty()
    }
}

/// Splits on `*` outside brackets, so starred rows like `f[1*,3]` survive.
fn split_factors(s: &str) -> Vec<&str> {
    let (mut depth, mut start, mut out) = (0i32, 0usize, Vec::new());
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '*' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

fn parse_rows(s: &str) -> Result<Tableau> {
    let mut rows = Vec::new();
    for r in s.split(';').map(str::trim).filter(|r| !r.is_empty()) {
        let row: Vec<u32> = r
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad tableau entry {x:?}"))))
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    Ok(Tableau { rows })
}

/// Points and corners of a family.
type Masks = (BTreeSet<Point>, BTreeSet<Point>);

fn family_masks(case: &GroupCase, e: &EndpointSet) -> Result<Vec<(PathFamily, Masks)>> {
    Ok(enumerate_families(case, e)?
        .into_iter()
        .map(|f| {
            let c = corners(case, &f);
            let pts = f.points();
            (f, (pts, c))
        })
        .collect())
}

/// Every jellyfish whose Stanley space contains the monomial.
pub fn locate_all(case: &GroupCase, m: &Monomial) -> Result<Vec<Jellyfish>> {
    let e = assign_bin(&m.tableau, case)?;
    let supp = m.support();
    Ok(family_masks(case, &e)?
        .into_iter()
        .filter(|(_, (pts, cor))| supp.is_subset(pts) && cor.is_subset(&supp))
        .map(|(f, _)| Jellyfish { family: f, tableau: m.tableau.clone(), shape: m.tableau.shape() })
        .collect())
}

/// The unique jellyfish whose Stanley space contains m.
pub fn locate(case: &GroupCase, m: &Monomial) -> Result<Jellyfish> {
    let mut found = locate_all(case, m)?;
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::NotStandard(format!("no jellyfish contains {}", m.to_input_string(case)))),
        n => Err(Error::Unsupported(format!("{n} jellyfish contain {}", m.to_input_string(case)))),
    }
}

/// Caches families per endpoint set for repeated location queries.
pub struct Locator {
    case: GroupCase,
    cache: HashMap<EndpointSet, Vec<Masks>>,
}

impl Locator {
    pub fn new(case: GroupCase) -> Self {
        Locator { case, cache: HashMap::new() }
    }

    /// Number of Stanley spaces containing a monomial with this support and tableau.
    pub fn count(&mut self, supp: &BTreeSet<Point>, t: &ShapedTableau) -> Result<usize> {
        let e = assign_bin(t, &self.case)?;
        if !self.cache.contains_key(&e) {
            let v = family_masks(&self.case, &e)?.into_iter().map(|(_, m)| m).collect();
            self.cache.insert(e.clone(), v);
        }
        Ok(self.cache[&e].iter().filter(|(pts, cor)| supp.is_subset(pts) && cor.is_subset(supp)).count())
    }

    /// Whether some family F ⇉ T contains the support.
    pub fn contained(&mut self, supp: &BTreeSet<Point>, t: &ShapedTableau) -> Result<bool> {
        let e = assign_bin(t, &self.case)?;
        if !self.cache.contains_key(&e) {
            let v = family_masks(&self.case, &e)?.into_iter().map(|(_, m)| m).collect();
            self.cache.insert(e.clone(), v);
        }
        Ok(self.cache[&e].iter().any(|(pts, _)| supp.is_subset(pts)))
    }
}

/// Arc diagram of a monomial: one arc per unit of exponent and one
/// hyperedge per tableau column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDiagram {
    pub group: Group,
    pub vertices: Vec<String>,
    pub arcs: Vec<(usize, usize)>,
    pub hyperedges: Vec<Vec<usize>>,
}

impl ArcDiagram {
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertices.len()];
        for &(a, b) in &self.arcs {
            deg[a] += 1;
            deg[b] += 1;
        }
        for h in &self.hyperedges {
            for &v in h {
                deg[v] += 1;
            }
        }
        deg
    }
}

pub fn arc_diagram(case: &GroupCase, m: &Monomial) -> ArcDiagram {
    let (vertices, starred_off) = match case.group {
        Group::Gl => {
            let mut v: Vec<String> = (1..=case.p).map(|i| format!("{i}*")).collect();
            v.extend((1..=case.q).map(|j| j.to_string()));
            (v, case.p as usize)
        }
        _ => ((1..=case.n).map(|i| i.to_string()).collect(), 0),
    };
    let mut arcs = Vec::new();
    for (p, &e) in &m.exponents {
        let a = p.row as usize - 1;
        let b = starred_off + p.col as usize - 1;
        for _ in 0..e {
            arcs.push((a, b));
        }
    }
    let mut hyperedges = Vec::new();
    match &m.tableau {
        ShapedTableau::Pair { plus, minus } => {
            for col in minus.columns() {
                hyperedges.push(col.iter().map(|&x| x as usize - 1).collect());
            }
            for col in plus.columns() {
                hyperedges.push(col.iter().map(|&x| starred_off + x as usize - 1).collect());
            }
        }
        ShapedTableau::Single(t) => {
            for col in t.columns() {
                hyperedges.push(col.iter().map(|&x| x as usize - 1).collect());
            }
        }
    }
    ArcDiagram { group: case.group, vertices, arcs, hyperedges }
}

/// A weight vector; GL weights split as (starred | unstarred).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub left: Vec<Rational64>,
    pub right: Vec<Rational64>,
    pub split: bool,
}

impl WeightVector {
    pub fn plain(entries: Vec<Rational64>) -> Self {
        WeightVector { left: entries, right: Vec::new(), split: false }
    }

    pub fn to_json(&self) -> Value {
        let enc = |v: &[Rational64]| {
            v.iter()
                .map(|r| if r.is_integer() { json!(r.to_integer()) } else { json!(r.to_string()) })
                .collect::<Vec<_>>()
        };
        if self.split {
            json!({"starred": enc(&self.left), "unstarred": enc(&self.right)})
        } else {
            json!(enc(&self.left))
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[Rational64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if self.split {
            write!(f, "({} | {})", j(&self.left), j(&self.right))
        } else {
            write!(f, "({})", j(&self.left))
        }
    }
}

/// Weight of a monomial covariant read from the degree sequence of its arc
/// diagram. A loop f_ii (orthogonal case) meets its vertex twice.
pub fn weight(case: &GroupCase, m: &Monomial) -> WeightVector {
    let deg = arc_diagram(case, m).degree_sequence();
    let k = case.k as i64;
    match case.group {
        Group::Gl => {
            let p = case.p as usize;
            WeightVector {
                left: deg[..p].iter().map(|&d| Rational64::from_integer(-(d as i64) - k)).collect(),
                right: deg[p..].iter().map(|&d| Rational64::from_integer(d as i64)).collect(),
                split: true,
            }
        }
        Group::Sp => WeightVector::plain(deg.iter().map(|&d| Rational64::from_integer(-(d as i64) - k)).collect()),
        Group::O => WeightVector::plain(deg.iter().map(|&d| Rational64::new(-(2 * d as i64) - k, 2)).collect()),
    }
}

/// The highest weight λ attached to τ.
pub fn lambda_from_tau(case: &GroupCase, shape: &Shape) -> Result<WeightVector> {
    shape.check_in_sigma(case)?;
    let k = case.k as i64;
    let padded_rev = |parts: &[u32], len: usize| -> Vec<i64> {
        let mut v: Vec<i64> = parts.iter().map(|&x| x as i64).collect();
        v.resize(len, 0);
        v.reverse();
        v
    };
    Ok(match case.group {
        Group::Gl => {
            let left = padded_rev(&shape.minus, case.p as usize)
                .into_iter()
                .map(|x| Rational64::from_integer(-x - k))
                .collect();
            let mut right: Vec<Rational64> = shape.plus.iter().map(|&x| Rational64::from_integer(x as i64)).collect();
            right.resize(case.q as usize, Rational64::from_integer(0));
            WeightVector { left, right, split: true }
        }
        Group::Sp => WeightVector::plain(
            padded_rev(&shape.plus, case.n as usize).into_iter().map(|x| Rational64::from_integer(-x - k)).collect(),
        ),
        Group::O => WeightVector::plain(
            padded_rev(&shape.plus, case.n as usize).into_iter().map(|x| Rational64::new(-2 * x - k, 2)).collect(),
        ),
    })
}

/// Output formats for diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
    Tikz,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            "tikz" => Ok(Format::Tikz),
            _ => Err(Error::Parse(format!("unknown diagram format {s:?}"))),
        }
    }
}

/// Things that can be drawn.
pub enum Drawable<'a> {
    Poset(&'a Poset),
    Jellyfish(&'a GroupCase, &'a Jellyfish),
    Arcs(&'a ArcDiagram),
}

pub fn render(obj: &Drawable<'_>, format: Format) -> Result<String> {
    match (obj, format) {
        (Drawable::Poset(p), Format::Ascii) => Ok(render_poset_ascii(p)),
        (Drawable::Poset(p), Format::Svg) => Ok(render_poset_svg(p)),
        (Drawable::Poset(p), Format::Tikz) => Ok(render_poset_tikz(p)),
        (Drawable::Jellyfish(c, j), Format::Ascii) => Ok(render_jellyfish_ascii(c, j)),
        (Drawable::Jellyfish(c, j), Format::Svg) => Ok(render_jellyfish_svg(c, j)),
        (Drawable::Jellyfish(c, j), Format::Tikz) => Ok(render_jellyfish_tikz(c, j)),
        (Drawable::Arcs(a), Format::Ascii) => Ok(render_arcs_ascii(a)),
        (Drawable::Arcs(_), _) => Err(Error::Unsupported("arc diagrams render as ascii only".into())),
    }
}

fn bounds(points: &[Point]) -> (i32, i32, i32, i32) {
    let r0 = points.iter().map(|p| p.row).min().unwrap_or(0);
    let r1 = points.iter().map(|p| p.row).max().unwrap_or(0);
    let c0 = points.iter().map(|p| p.col).min().unwrap_or(0);
    let c1 = points.iter().map(|p| p.col).max().unwrap_or(0);
    (r0, r1, c0, c1)
}

fn render_poset_ascii(p: &Poset) -> String {
    let (r0, r1, c0, c1) = bounds(&p.points);
    let shadows: HashSet<Point> = p.shadows.iter().copied().collect();
    let mut out = format!("{}\n", p.case_name());
    for r in r0..=r1 {
        let line: String = (c0..=c1)
            .map(|c| {
                let pt = Point::new(r, c);
                if shadows.contains(&pt) {
                    "~ "
                } else if p.contains(pt) {
                    ". "
                } else {
                    "  "
                }
            })
            .collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

const CELL: i32 = 24;

fn svg_xy(p: Point, r0: i32, c0: i32) -> (i32, i32) {
    ((p.col - c0 + 1) * CELL, (p.row - r0 + 1) * CELL)
}

fn render_poset_svg(p: &Poset) -> String {
    let (r0, r1, c0, c1) = bounds(&p.points);
    let (w, h) = ((c1 - c0 + 3) * CELL, (r1 - r0 + 3) * CELL);
    let mut s = format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\">\n");
    for &(a, b) in &p.covers {
        let (x1, y1) = svg_xy(p.points[a], r0, c0);
        let (x2, y2) = svg_xy(p.points[b], r0, c0);
        let _ = writeln!(
            s,
            "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"lightgray\" stroke-width=\"2\"/>"
        );
    }
    for &pt in &p.points {
        let (x, y) = svg_xy(pt, r0, c0);
        let _ = writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"gray\"/>");
    }
    for &pt in &p.shadows {
        let (x, y) = svg_xy(pt, r0, c0);
        let _ = writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"8\" fill=\"darkred\" fill-opacity=\"0.25\"/>");
    }
    s.push_str("</svg>\n");
    s
}

fn render_poset_tikz(p: &Poset) -> String {
    let mut s = String::from("\\begin{tikzpicture}[scale=.5]\n");
    for &(a, b) in &p.covers {
        let (pa, pb) = (p.points[a], p.points[b]);
        let _ = writeln!(s, "\\draw[thick, lightgray] ({},{}) -- ({},{});", pa.col, -pa.row, pb.col, -pb.row);
    }
    for &pt in &p.points {
        let _ = writeln!(s, "\\fill[gray] ({},{}) circle (3pt);", pt.col, -pt.row);
    }
    for &pt in &p.shadows {
        let _ = writeln!(s, "\\fill[red!50!black, opacity=.25] ({},{}) circle (8pt);", pt.col, -pt.row);
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

/// Tentacle dots: (point outside the grid) for each tableau entry, one
/// hyperedge column per tableau column.
fn tentacle_dots(case: &GroupCase, t: &ShapedTableau) -> Vec<Point> {
    let right = case.group.right_edge(case);
    let mut out = Vec::new();
    match t {
        ShapedTableau::Pair { plus, minus } => {
            for (c, col) in plus.columns().iter().enumerate() {
                out.extend(col.iter().map(|&j| Point::new(case.p as i32 + 1 + c as i32, j as i32)));
            }
            for (c, col) in minus.columns().iter().enumerate() {
                out.extend(col.iter().map(|&i| Point::new(i as i32, right + 1 + c as i32)));
            }
        }
        ShapedTableau::Single(t) => {
            for (c, col) in t.columns().iter().enumerate() {
                out.extend(col.iter().map(|&i| Point::new(i as i32, right + 1 + c as i32)));
            }
        }
    }
    out
}

impl Group {
    fn right_edge(self, case: &GroupCase) -> i32 {
        match self {
            Group::Gl => case.q as i32,
            _ => case.n as i32,
        }
    }
}

/// ASCII jellyfish: `*` path point, `#` corner, `~` shadowed L-turn, `.`
/// unused poset point, `o` tentacle dot. The header records the case, the
/// endpoint set and the path decomposition is recovered on parsing.
fn render_jellyfish_ascii(case: &GroupCase, j: &Jellyfish) -> String {
    let cor = corners(case, &j.family);
    let sh = if case.group == Group::O { BTreeSet::new() } else { shadows(case, &j.family) };
    let pts = j.family.points();
    let dots: HashSet<Point> = tentacle_dots(case, &j.tableau).into_iter().collect();
    let rows = match case.group {
        Group::Gl => case.p as i32 + j.tableau_plus_width() as i32,
        _ => case.n as i32,
    };
    let cols = case.group.right_edge(case) + j.tableau_minus_width(case) as i32;
    let mut out = format!("{case} E={}\n", j.family.endpoints);
    for r in 1..=rows {
        let mut line = String::new();
        for c in 1..=cols {
            let p = Point::new(r, c);
            let ch = if cor.contains(&p) {
                '#'
            } else if sh.contains(&p) {
                '~'
            } else if pts.contains(&p) {
                '*'
            } else if dots.contains(&p) {
                'o'
            } else if case.contains(p) {
                '.'
            } else {
                ' '
            };
            line.push(ch);
            line.push(' ');
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

impl Jellyfish {
    fn tableau_plus_width(&self) -> usize {
        match &self.tableau {
            ShapedTableau::Pair { plus, .. } => plus.num_columns(),
            ShapedTableau::Single(_) => 0,
        }
    }

    fn tableau_minus_width(&self, _case: &GroupCase) -> usize {
        match &self.tableau {
            ShapedTableau::Pair { minus, .. } => minus.num_columns(),
            ShapedTableau::Single(t) => t.num_columns(),
        }
    }
}

/// Recovers a jellyfish from its ASCII rendering.
pub fn parse_jellyfish_ascii(case: &GroupCase, text: &str) -> Result<Jellyfish> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty diagram".into()))?;
    let e_str = header
        .split("E={")
        .nth(1)
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::Parse("missing endpoint set in header".into()))?;
    let e = EndpointSet::parse(case, e_str)?;
    let mut pts = BTreeSet::new();
    let mut dots = Vec::new();
    for (r, line) in lines.enumerate() {
        for (c, ch) in line.chars().step_by(2).enumerate() {
            let p = Point::new(r as i32 + 1, c as i32 + 1);
            match ch {
                '*' | '#' | '~' => {
                    pts.insert(p);
                }
                'o' => dots.push(p),
                _ => {}
            }
        }
    }
    let right = case.group.right_edge(case);
    let mut by_col: BTreeMap<i32, Vec<u32>> = BTreeMap::new();
    let mut by_row: BTreeMap<i32, Vec<u32>> = BTreeMap::new();
    for d in &dots {
        if d.col > right {
            by_col.entry(d.col - right).or_default().push(d.row as u32);
        } else {
            by_row.entry(d.row - case.p as i32).or_default().push(d.col as u32);
        }
    }
    let from_columns = |cols: BTreeMap<i32, Vec<u32>>| {
        let cols: Vec<Vec<u32>> = cols
            .into_values()
            .map(|mut v| {
                v.sort_unstable();
                v
            })
            .collect();
        let height = cols.first().map_or(0, Vec::len);
        Tableau { rows: (0..height).map(|i| cols.iter().filter_map(|c| c.get(i).copied()).collect()).collect() }
    };
    let tableau = match case.group {
        Group::Gl => ShapedTableau::Pair { plus: from_columns(by_row), minus: from_columns(by_col) },
        _ => ShapedTableau::Single(from_columns(by_col)),
    };
    let family = enumerate_families(case, &e)?
        .into_iter()
        .find(|f| f.points() == pts)
        .ok_or_else(|| Error::Parse("no family with the drawn points".into()))?;
    Ok(Jellyfish { family, shape: tableau.shape(), tableau })
}

fn render_jellyfish_svg(case: &GroupCase, j: &Jellyfish) -> String {
    let cor = corners(case, &j.family);
    let sh = if case.group == Group::O { BTreeSet::new() } else { shadows(case, &j.family) };
    let all: Vec<Point> = case.points();
    let dots = tentacle_dots(case, &j.tableau);
    let mut every = all.clone();
    every.extend(dots.iter().copied());
    let (_, r1, _, c1) = bounds(&every);
    let (w, h) = ((c1 + 2) * CELL, (r1 + 2) * CELL);
    let mut s = format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\">\n");
    for &p in &all {
        let (x, y) = svg_xy(p, 1, 1);
        let _ = writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"lightgray\"/>");
    }
    for &p in &sh {
        let (x, y) = svg_xy(p, 1, 1);
        let (x2, y2) = svg_xy(p.northeast(), 1, 1);
        let _ = writeln!(s, "<line x1=\"{x}\" y1=\"{y}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"darkred\" stroke-opacity=\"0.3\" stroke-width=\"12\" stroke-linecap=\"round\"/>");
    }
    for path in &j.family.paths {
        let d: Vec<String> = path
            .iter()
            .map(|&p| {
                let (x, y) = svg_xy(p, 1, 1);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(s, "<polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"4\"/>", d.join(" "));
    }
    for &p in &cor {
        let (x, y) = svg_xy(p, 1, 1);
        let _ = writeln!(
            s,
            "<rect x=\"{}\" y=\"{}\" width=\"10\" height=\"10\" fill=\"firebrick\" stroke=\"black\"/>",
            x - 5,
            y - 5
        );
    }
    for &p in &dots {
        let (x, y) = svg_xy(p, 1, 1);
        let _ = writeln!(s, "<circle cx=\"{x}\" cy=\"{y}\" r=\"5\" fill=\"black\"/>");
    }
    s.push_str("</svg>\n");
    s
}

fn render_jellyfish_tikz(case: &GroupCase, j: &Jellyfish) -> String {
    let cor = corners(case, &j.family);
    let sh = if case.group == Group::O { BTreeSet::new() } else { shadows(case, &j.family) };
    let mut s = String::from("\\begin{tikzpicture}[scale=.35]\n");
    for p in case.points() {
        let _ = writeln!(s, "\\fill[lightgray] ({},{}) circle (4pt);", p.col, -p.row);
    }
    for p in &sh {
        let _ = writeln!(
            s,
            "\\draw[line width=.6em, red!50!black, opacity=.3, cap=round] ({},{}) -- ++(1,1);",
            p.col, -p.row
        );
    }
    for path in &j.family.paths {
        let coords: Vec<String> = path.iter().map(|p| format!("({},{})", p.col, -p.row)).collect();
        let _ = writeln!(s, "\\draw[ultra thick] {};", coords.join(" -- "));
    }
    for p in &cor {
        let _ = writeln!(
            s,
            "\\node[rectangle, draw=black, fill=red!70!gray, minimum size=5pt, inner sep=0pt] at ({},{}) {{}};",
            p.col, -p.row
        );
    }
    for p in tentacle_dots(case, &j.tableau) {
        let _ = writeln!(s, "\\fill ({},{}) circle (6pt);", p.col, -p.row);
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

fn render_arcs_ascii(a: &ArcDiagram) -> String {
    let width = a.vertices.iter().map(String::len).max().unwrap_or(1) + 1;
    let pos = |v: usize| v * width;
    let mut out = String::new();
    let header: String = a.vertices.iter().map(|v| format!("{v:<width$}")).collect();
    out.push_str(header.trim_end());
    out.push('\n');
    for &(x, y) in &a.arcs {
        let (l, r) = (x.min(y), x.max(y));
        let mut line = vec![' '; pos(a.vertices.len())];
        for cell in line.iter_mut().take(pos(r) + 1).skip(pos(l)) {
            *cell = '-';
        }
        line[pos(l)] = 'o';
        line[pos(r)] = 'o';
        let s: String = line.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    for h in &a.hyperedges {
        let mut line = vec![' '; pos(a.vertices.len())];
        for &v in h {
            line[pos(v)] = '@';
        }
        let s: String = line.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    let deg: Vec<String> = a.degree_sequence().iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "degrees {}", deg.join(","));
    out
}

/// Counts (vertices, arcs, hyperedge rows) from an ASCII arc diagram.
pub fn parse_arcs_ascii(text: &str) -> (usize, usize, usize) {
    let mut lines = text.lines();
    let verts = lines.next().map_or(0, |l| l.split_whitespace().count());
    let (mut arcs, mut hyper) = (0, 0);
    for l in lines {
        if l.contains('o') {
            arcs += 1;
        } else if l.contains('@') {
            hyper += 1;
        }
    }
    (verts, arcs, hyper)
}

/// The Stanley decomposition as generator data, in canonical order.
pub fn stanley_decomposition(case: &GroupCase, shape: &Shape) -> Result<Vec<StanleySpace>> {
    Ok(enumerate_jellyfish(case, shape)?.iter().map(|j| stanley_space(case, j)).collect())
}

/// Whether a poset is drawn from a Wallach figure.
pub fn is_wallach(p: &Poset) -> bool {
    matches!(p.kind, PosetKind::Wallach(_))
}
