//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::collections::BTreeMap;
use std::process::ExitCode;

use num_bigint::BigInt;
use num_rational::Rational64;

use jellyfish::oracle::check_equivalence;
use jellyfish::paths::{
    corners, d_max, enumerate_families, families_by_endpoints, family_size, label_corner_points, shelling_label,
    wallach_facets, EndpointSet, PathFamily,
};
use jellyfish::poset::{Group, GroupCase, Point, WallachCase, WallachFamily};
use jellyfish::series::{
    bernstein_degree, bernstein_from_series, covariant_series, maximal_chains, p_e_series, sl_invariant_series,
    wallach_series, RationalSeries,
};
use jellyfish::stanley::{enumerate_jellyfish, weight, Monomial};
use jellyfish::tableaux::{bin_sizes, dim_u, tau_max, Shape};

/// Named sub-checks of one criterion.
struct Checks(Vec<(String, bool)>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push((name.into(), ok));
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, want: T) {
        let ok = got == want;
        let label = if ok { name.to_string() } else { format!("{name}: got {got:?}, want {want:?}") };
        self.0.push((label, ok));
    }

    fn series(&mut self, name: &str, got: &RationalSeries, want: &RationalSeries) {
        let ok = got.same_function(want) && got.denominator() == want.denominator();
        let label = if ok { name.to_string() } else { format!("{name}: got {got}, want {want}") };
        self.0.push((label, ok));
    }
}

fn s(coeffs: &[i64], den: &[(u32, u32)]) -> RationalSeries {
    RationalSeries::from_coeffs(coeffs, den)
}

fn shape(t: &str) -> Shape {
    Shape::parse(t).expect("shape")
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

fn criterion_1() -> Checks {
    let mut c = Checks::new();
    let case = GroupCase::gl(3, 3, 4).unwrap();
    let inv = covariant_series(&case, &Shape::empty()).unwrap();
    let adj = covariant_series(&case, &shape("1,0,-1")).unwrap();
    c.series("tau=0 component 1/(1-t^2)^12", &inv.combined(), &s(&[1], &[(2, 12)]));
    let mut groups: BTreeMap<u32, RationalSeries> = BTreeMap::new();
    for t in &adj.terms {
        let d = t.p_e.denominator().get(&2).copied().unwrap_or(0);
        let part = t.p_e.scale(t.multiplicity, 0);
        let acc = groups.remove(&d).unwrap_or_else(RationalSeries::zero);
        groups.insert(d, acc.add(&part));
    }
    c.eq("adjoint components by family size", groups.keys().copied().collect::<Vec<_>>(), vec![10, 11, 12]);
    if let Some(g) = groups.get(&12) {
        c.series("8/(1-t^2)^12", g, &s(&[8], &[(2, 12)]));
    }
    if let Some(g) = groups.get(&11) {
        c.series("(3+3t^2+2t^4)/(1-t^2)^11", g, &s(&[3, 0, 3, 0, 2], &[(2, 11)]));
    }
    if let Some(g) = groups.get(&10) {
        c.series("(1+2t^2)/(1-t^2)^10", g, &s(&[1, 0, 2], &[(2, 10)]));
    }
    c.eq("jellyfish for tau=0", enumerate_jellyfish(&case, &Shape::empty()).unwrap().len(), 1);
    c.eq("jellyfish for tau=(1,0,-1)", enumerate_jellyfish(&case, &shape("1,0,-1")).unwrap().len(), 19);
    let printed_sum = groups.values().fold(inv.combined(), |acc, g| acc.add(g)).reduce();
    c.series("sum of the four components (13-4t^4)/(1-t^2)^12", &printed_sum, &s(&[13, 0, 0, 0, -4], &[(2, 12)]));
    let graded = inv.combined().add(&adj.combined()).reduce();
    c.series("graded sum 1 + t^2 (12-4t^4)/(1-t^2)^12", &graded, &s(&[1, 0, 12, 0, 0, 0, -4], &[(2, 12)]));
    c
}

fn criterion_2() -> Checks {
    let mut c = Checks::new();
    let case = GroupCase::sp(2, 6).unwrap();
    let tau = shape("2,1");
    let mut sizes: Vec<u64> = bin_sizes(&case, &tau).unwrap().values().copied().filter(|&n| n > 0).collect();
    sizes.sort_unstable();
    let mut want = vec![6, 6, 6, 5, 5, 4, 12, 10, 16];
    want.sort_unstable();
    c.eq("nine bin sizes", sizes, want);
    let p = |rows: &[u32]| p_e_series(&case, &EndpointSet::from_rows(Group::Sp, rows)).unwrap();
    c.series("P_{1,5}", &p(&[1, 5]), &s(&[1, 0, 3, 0, 1], &[(2, 12)]));
    c.series("P_{2,5}", &p(&[2, 5]), &s(&[1, 0, 2, 0, 2, 0, 1], &[(2, 13)]));
    c.series("P_{3,5}", &p(&[3, 5]), &s(&[1, 0, 1, 0, 1], &[(2, 14)]));
    let cs = covariant_series(&case, &tau).unwrap();
    c.series("reduced series", &cs.reduced, &s(&[0, 0, 0, 70, 0, -14, 0, -14, 0, 6], &[(2, 14)]));
    c.eq("Bernstein degree", bernstein_degree(&case, &tau).unwrap(), BigInt::from(48));
    c.eq("Bernstein degree from the series", bernstein_from_series(&cs).unwrap(), BigInt::from(48));
    c
}

fn criterion_3() -> Checks {
    let mut c = Checks::new();
    let case = GroupCase::o(3, 7).unwrap();
    let printed: [(u32, &[i64], u32); 5] = [
        (3, &[1, 10, 55, 220, 225, 126, 35], 18),
        (4, &[1, 11, 66, 251, 350, 251, 66, 11, 1], 17),
        (5, &[1, 12, 78, 245, 343, 234, 36, 3], 16),
        (6, &[1, 13, 91, 210, 238, 130, 16, 1], 15),
        (7, &[1, 14, 105, 175, 119, 15, 1], 14),
    ];
    for (t, coeffs, d) in printed {
        let mut num = vec![0i64; 2 * coeffs.len() - 1];
        for (i, x) in coeffs.iter().enumerate() {
            num[2 * i] = *x;
        }
        let got = p_e_series(&case, &EndpointSet::from_rows(Group::O, &[1, 2, t])).unwrap();
        c.series(&format!("P_{{1,2,{t}}}"), &got, &s(&num, &[(2, d)]));
    }
    let tau = shape("1");
    let cs = covariant_series(&case, &tau).unwrap();
    let total = s(&[0, 7, 0, 70, 0, 385, 0, 756, 0, 567, 0, 210, 0, 21], &[(2, 18)]);
    c.series("total series", &cs.reduced, &total);
    c.eq("Bernstein degree", bernstein_degree(&case, &tau).unwrap(), BigInt::from(2016));
    c.eq("Bernstein degree from the series", bernstein_from_series(&cs).unwrap(), BigInt::from(2016));
    c
}

fn criterion_4() -> Checks {
    let mut c = Checks::new();
    let sl = sl_invariant_series(3, 3, 4).unwrap();
    c.series("P_Emax", &sl.invariants, &s(&[1], &[(2, 12)]));
    let printed: [(&str, RationalSeries, RationalSeries); 4] = [
        ("{2,3,4}", s(&[1], &[(2, 12)]), s(&[1], &[(3, 1)])),
        ("{1,3,4}", s(&[1, 0, 1, 0, 1], &[(2, 11)]), s(&[1], &[(3, 2)])),
        ("{1,2,4}", s(&[1, 0, 2], &[(2, 10)]), s(&[1], &[(3, 3)])),
        ("{1,2,3}", s(&[1], &[(2, 9)]), s(&[1], &[(3, 4)])),
    ];
    c.eq("four unstarred products", sl.unstarred.len(), 4);
    for (term, (name, p, q)) in sl.unstarred.iter().zip(printed.iter()) {
        c.eq(&format!("order of {name}"), term.endpoints.to_string(), name.to_string());
        c.series(&format!("P_{name}"), &term.p_e, p);
        c.series(&format!("Q_{name}"), &term.q_e, q);
    }
    c.eq("one starred product", sl.starred.len(), 1);
    if let Some(term) = sl.starred.first() {
        c.eq("starred endpoint set", term.endpoints.to_string(), "{1*,2*,3*}".to_string());
        c.series("P_{1*,2*,3*}", &term.p_e, &s(&[1], &[(2, 12)]));
        c.series("Q_{1*,2*,3*}", &term.q_e, &s(&[1], &[(3, 1)]));
    }
    let den = BTreeMap::from([(2, 9), (3, 3), (6, 1)]);
    let want = s(&[1, 0, 3, 2, 6, 3, 8, 3, 6, 2, 3, 0, 1], &[(2, 9), (3, 3), (6, 1)]);
    match sl.reduced.over_denominator(&den) {
        Some(r) => {
            c.series("reduced series", &r, &want);
            c.eq("numerator", r.numerator().clone(), want.numerator().clone());
            c.check("palindromic numerator", r.is_palindromic());
        }
        None => c.check("reduced series fits over (1-t^2)^9 (1-t^3)^3 (1-t^6)", false),
    }
    c
}

fn criterion_5() -> Checks {
    let mut c = Checks::new();
    let case = GroupCase::gl(3, 8, 10).unwrap();
    let e = EndpointSet::parse(&case, "2*,4*,5*").unwrap();
    let p1 = walk(Point::new(1, 1), &[('E', 9), ('S', 1)]);
    let p2 = walk(Point::new(2, 1), &[('E', 5), ('S', 1), ('E', 2), ('S', 1), ('E', 2)]);
    let p3 = walk(Point::new(3, 1), &[('E', 3), ('S', 1), ('E', 2), ('S', 1), ('E', 4)]);
    let fam = PathFamily { endpoints: e.clone(), paths: vec![p3, p2, p1] };
    c.check("drawn family is nonintersecting", fam.is_disjoint());
    let cor = corners(&case, &fam);
    let shown: Vec<String> = cor.iter().map(|p| p.to_string()).collect();
    c.eq(&format!("#cor(F) (corners found: {})", shown.join(" ")), cor.len(), 3);
    c.eq("d_E* = #F", fam.size(), 35);
    c.eq("d_E* from the endpoint set", family_size(&case, &e).unwrap(), 35);
    let drawn: Vec<Vec<u32>> = vec![
        vec![2, 4, 5],
        vec![2, 4, 6],
        vec![2, 5, 6],
        vec![2, 5, 7],
        vec![3, 5, 7],
        vec![4, 5, 7],
        vec![4, 6, 7],
        vec![4, 6, 8],
        vec![5, 6, 8],
        vec![5, 7, 8],
        vec![6, 7, 8],
    ];
    let chains = maximal_chains(&[2, 4, 5], 8, 3).unwrap();
    match chains.iter().find(|ch| ch.elements == drawn) {
        Some(ch) => {
            c.eq("#cor(C*)", ch.corners.len(), 4);
            c.eq("c_E* = #C*", ch.elements.len(), 11);
        }
        None => c.check("drawn chain is a maximal chain", false),
    }
    c.check("every maximal chain has 11 elements", chains.iter().all(|ch| ch.elements.len() == 11));
    c
}

fn criterion_6() -> Checks {
    let mut c = Checks::new();
    for n in 4..=10 {
        let w = WallachCase::new(WallachFamily::D(n), 1).unwrap();
        c.series(&format!("D{n}"), &wallach_series(&w), &s(&[1, 1], &[(1, 2 * n - 3)]));
    }
    let e6 = WallachCase::new(WallachFamily::E6, 1).unwrap();
    c.eq("E6 facets", wallach_facets(&e6).len(), 12);
    c.series("E6 series", &wallach_series(&e6), &s(&[1, 5, 5, 1], &[(1, 11)]));
    let e7 = WallachCase::new(WallachFamily::E7, 1).unwrap();
    let f7 = wallach_facets(&e7);
    c.eq("E7 k=1 facets", f7.len(), 78);
    c.check("E7 k=1 facets have 17 points", f7.iter().all(|f| f.size() == 17));
    c.series("E7 k=1 series", &wallach_series(&e7), &s(&[1, 10, 28, 28, 10, 1], &[(1, 17)]));
    let e72 = WallachCase::new(WallachFamily::E7, 2).unwrap();
    c.eq("E7 k=2 facets", wallach_facets(&e72).len(), 3);
    c.series("E7 k=2 series", &wallach_series(&e72), &s(&[1, 1, 1], &[(1, 26)]));
    c
}

fn criterion_7() -> Checks {
    let mut c = Checks::new();
    let r = |v: &[i64]| v.iter().map(|&x| Rational64::from_integer(x)).collect::<Vec<_>>();
    let gl = GroupCase::gl(3, 5, 6).unwrap();
    let m = Monomial::parse(
        &gl,
        "f[1,3] * f[2,1]^2 * f[2,2] * f[2,5] * f[3,3]^2 * f[4,3] * f[4,6]^3 * f[3,5] * f[4,3] \
         * phi+[4,5,5] * phi-[1,2,2,3;4,5,5]",
    )
    .unwrap();
    let w = weight(&gl, &m);
    c.eq("GL starred part", w.left, r(&[-5, -9, -7, -9, -5]));
    c.eq("GL unstarred part", w.right, r(&[2, 1, 5, 1, 4, 3]));
    let sp = GroupCase::sp(3, 8).unwrap();
    let m = Monomial::parse(
        &sp,
        "f[1,2] * f[1,4]^2 * f[2,7]^2 * f[3,4] * f[5,8]^2 * f[2,7] * f[3,6] * f[4,5] * f[5,6] * phi[2,3,3;4,4,5;5,7]",
    )
    .unwrap();
    c.eq("Sp weight", weight(&sp, &m).left, r(&[-6, -8, -7, -9, -9, -5, -7, -5]));
    c
}

fn sweep_cases() -> Vec<GroupCase> {
    let mut cases = Vec::new();
    for p in 1..=6 {
        for q in 1..=6 {
            for k in 1..=p.min(q) {
                cases.push(GroupCase::gl(k, p, q).unwrap());
            }
        }
    }
    for n in 2..=10 {
        for k in 1..=n / 2 {
            cases.push(GroupCase::sp(k, n).unwrap());
        }
    }
    for n in 1..=8 {
        for k in 1..=n {
            cases.push(GroupCase::o(k, n).unwrap());
        }
    }
    cases
}

fn criteria_8_and_11() -> (Checks, Checks) {
    let (mut c8, mut c11) = (Checks::new(), Checks::new());
    let (mut cases, mut bad_dmax, mut bad_first, mut bad_desc, mut families) = (0, 0, 0, 0, 0usize);
    for case in sweep_cases() {
        cases += 1;
        let all = families_by_endpoints(&case);
        let largest = all.iter().map(|(e, _)| family_size(&case, e).unwrap()).max().unwrap_or(0);
        if largest != d_max(&case) {
            bad_dmax += 1;
            c8.check(format!("{case}: largest family {largest}, closed form {}", d_max(&case)), false);
        }
        for (e, fams) in &all {
            families += fams.len();
            let first = &fams[0];
            if !corners(&case, first).is_empty() || shelling_label(&case, first).flat().contains(&1) {
                bad_first += 1;
                c11.check(format!("{case} {e}: first family has a corner"), false);
            }
            bad_desc += fams.iter().filter(|f| label_corner_points(&case, f) != corners(&case, f)).count();
        }
    }
    c8.check(format!("d_max closed form on {cases} cases"), bad_dmax == 0);
    c11.check(format!("first family corner-free for every endpoint set ({cases} cases)"), bad_first == 0);
    c11.eq(&format!("descents equal corners on {families} families (mismatches)"), bad_desc, 0);
    let sp = GroupCase::sp(2, 7).unwrap();
    let fams = enumerate_families(&sp, &EndpointSet::from_rows(Group::Sp, &[2, 4])).unwrap();
    c11.eq("Sp(2,7) E={2,4} facets", fams.len(), 17);
    c11.eq("Sp(2,7) E={2,4} first label", shelling_label(&sp, &fams[0]).to_string(), "00000000 0000".to_string());
    (c8, c11)
}

fn sweep_9() -> Vec<(GroupCase, Shape)> {
    let gl = GroupCase::gl(2, 3, 3).unwrap();
    let sp = GroupCase::sp(2, 6).unwrap();
    let o = GroupCase::o(2, 4).unwrap();
    [(gl, "0"), (gl, "1"), (gl, "1,-1"), (gl, "2,1"), (sp, "0"), (sp, "1"), (sp, "2,1"), (o, "0"), (o, "1"), (o, "1,1")]
        .into_iter()
        .map(|(c, t)| (c, shape(t)))
        .collect()
}

fn criterion_9() -> Checks {
    let mut c = Checks::new();
    for (case, tau) in sweep_9() {
        let r = check_equivalence(&case, &tau, 9, 7).unwrap();
        let bad: Vec<String> = r.per_degree.iter().filter(|d| !d.ok).map(|d| format!("D={}", d.degree)).collect();
        c.check(
            format!(
                "{case} tau={tau}: counts to degree 9 {}, {} supports located, {} mismatched, {} ambiguous",
                if bad.is_empty() { "agree".to_string() } else { format!("differ at {}", bad.join(",")) },
                r.supports_checked,
                r.support_mismatches,
                r.locate_ambiguous
            ),
            r.ok(),
        );
    }
    c
}

fn criterion_10() -> Checks {
    let mut c = Checks::new();
    for (case, tau) in sweep_9() {
        let got = tau_max(&case, &tau).unwrap();
        let want = dim_u(&case, &tau).unwrap();
        c.eq(&format!("{case} tau={tau}: #tau_max"), got, want);
    }
    c
}

fn main() -> ExitCode {
    let (c8, c11) = criteria_8_and_11();
    let results: Vec<(usize, &str, Checks)> = vec![
        (1, "GL(3,3,4) adjoint covariants", criterion_1()),
        (2, "Sp(2,6) tau=(2,1)", criterion_2()),
        (3, "O(3,7) tau=(1)", criterion_3()),
        (4, "SL(3,3,4) invariants", criterion_4()),
        (5, "SL jellyfish with maximal chain", criterion_5()),
        (6, "Wallach series", criterion_6()),
        (7, "weights", criterion_7()),
        (8, "d_max closed forms", c8),
        (9, "oracle equivalence", criterion_9()),
        (10, "tau_max dimension counts", criterion_10()),
        (11, "shelling", c11),
    ];
    let mut failed = 0;
    for (n, name, checks) in &results {
        let bad: Vec<&str> = checks.0.iter().filter(|(_, ok)| !ok).map(|(s, _)| s.as_str()).collect();
        if bad.is_empty() {
            println!("PASS criterion {n}: {name} ({} checks)", checks.0.len());
        } else {
            failed += 1;
            println!("FAIL criterion {n}: {name}: {}", bad.join("; "));
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
